//! Jets of graphs and their edge ideals: minimal vertex covers, jets
//! rings and graphs, principal components in closed form and through
//! Gröbner saturation, and graded Betti numbers via Hochster's formula.

pub mod betti;
pub mod corpus;
pub mod cover;
pub mod error;
pub mod graph;
pub mod groebner;
pub mod io;
pub mod jets;
pub mod limits;
pub mod monomial_ideal;
pub mod poly;
pub mod verify;

pub use betti::{BettiTable, SimplicialComplex};
pub use corpus::{Corpus, Instance};
pub use error::{Error, Result};
pub use graph::{Cycle, Graph, VertexCover};
pub use groebner::{GroebnerBasis, PolyIdeal};
pub use jets::{JetVariable, JetsRing};
pub use limits::Limits;
pub use monomial_ideal::MonomialIdeal;
pub use poly::{Monomial, MonomialOrder, Polynomial, Ring};
pub use verify::{Status, Suite, VerificationReport};
