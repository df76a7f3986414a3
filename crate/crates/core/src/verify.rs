//! Verification suites: each checks one identity on every `(graph, s)`
//! cell of a corpus and reports pass, fail (with a witness), skipped
//! (resource limit hit) or not applicable (precondition unmet).

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::betti;
use crate::corpus::Instance;
use crate::error::{Error, Result};
use crate::graph::{self, Graph, VertexCover};
use crate::groebner::{self, PolyIdeal};
use crate::jets::{self, JetsRing};
use crate::limits::Limits;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{Monomial, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Cor135,
    VcColon,
    MinimalPrime,
    PcIdentity,
    PcSaturation,
    CochordalPc,
    Froberg,
    GhwCover,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Cor135,
        Suite::VcColon,
        Suite::MinimalPrime,
        Suite::PcIdentity,
        Suite::PcSaturation,
        Suite::CochordalPc,
        Suite::Froberg,
        Suite::GhwCover,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cor135 => "cor135",
            Suite::VcColon => "vc-colon",
            Suite::MinimalPrime => "minimal-prime",
            Suite::PcIdentity => "pc-identity",
            Suite::PcSaturation => "pc-saturation",
            Suite::CochordalPc => "cochordal-pc",
            Suite::Froberg => "froberg",
            Suite::GhwCover => "ghw-cover",
        }
    }

    /// One-line statement of what the suite checks at jet order `s`.
    pub fn description(self) -> &'static str {
        match self {
            Suite::Cor135 => "the edge ideal of J_s(G) is the intersection of its minimal cover primes",
            Suite::VcColon => "<J_s(W)> = J_s(I(G)) : f^inf for every minimal cover W, f the product of x.0 over x not in W",
            Suite::MinimalPrime => "<J_s(W)> is a minimal prime of the radical of J_s(I(G)) for every minimal cover W",
            Suite::PcIdentity => "the closed-form PC_s ideal equals the intersection of the lifted cover primes",
            Suite::PcSaturation => "J_s(I(G)) saturated by the singular locus has the same radical as PC_s",
            Suite::CochordalPc => "PC_s(G) is cochordal whenever G is",
            Suite::Froberg => "PC_s(I(G)) has a linear resolution iff PC_s(G) is cochordal, and always when G is",
            Suite::GhwCover => "the lift of every minimal cover of G is a minimal cover of J_s(G)",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::NotApplicable => "n/a",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub instance: String,
    /// The graph as an edge list, enough to rerun the cell.
    pub graph: String,
    pub s: usize,
    pub status: Status,
    /// Counterexample payload; always present on failure.
    pub witness: Option<String>,
    pub note: Option<String>,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} s={} {}", self.suite, self.instance, self.s, self.status)?;
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {}", w.replace('\n', "\n  "))?;
        }
        Ok(())
    }
}

/// Result of one cell before it is wrapped into a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    NotApplicable(String),
}

fn expect(ok: bool, witness: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(witness())
    }
}

fn names(g: &Graph, vs: &[usize]) -> String {
    format!("{{{}}}", vs.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join(", "))
}

/// Checks one suite on one cell.
pub fn check(suite: Suite, g: &Graph, s: usize, limits: &Limits) -> Result<Outcome> {
    match suite {
        Suite::Cor135 => check_cor135(g, s, limits),
        Suite::VcColon => check_vc_colon(g, s, limits),
        Suite::MinimalPrime => check_minimal_prime(g, s, limits),
        Suite::PcIdentity => check_pc_identity(g, s, limits),
        Suite::PcSaturation => check_pc_saturation(g, s, limits),
        Suite::CochordalPc => check_cochordal_pc(g, s),
        Suite::Froberg => check_froberg(g, s, limits),
        Suite::GhwCover => check_ghw_cover(g, s, limits),
    }
}

fn check_cor135(g: &Graph, s: usize, limits: &Limits) -> Result<Outcome> {
    let j = jets::jets_of_graph(g, s);
    let edge = graph::edge_ideal(&j);
    let ring = edge.ring().clone();
    let primes: Vec<MonomialIdeal> = graph::minimal_vertex_covers(&j, limits)?
        .iter()
        .map(|w| MonomialIdeal::from_variables(&ring, w.vertices().iter().copied()))
        .collect();
    let meet = MonomialIdeal::intersect_all(&primes)?.expect("a graph has at least one minimal cover");
    Ok(expect(meet == edge, || format!("edge ideal {edge}\ncover intersection {meet}")))
}

/// `⟨J_s(W)⟩` in the jets ring of `g`.
pub fn lifted_prime(jr: &JetsRing, w: &VertexCover) -> MonomialIdeal {
    jr.variables_ideal(jr.all_orders(w.vertices()))
}

fn check_vc_colon(g: &Graph, s: usize, limits: &Limits) -> Result<Outcome> {
    let jr = JetsRing::for_graph(g, s);
    let jets_ideal = jr.jets_of_ideal(&graph::edge_ideal(g).to_poly_ideal())?;
    for w in graph::minimal_vertex_covers(g, limits)? {
        let prime = lifted_prime(&jr, &w).to_poly_ideal();
        let f = jets::cover_complement_product(g, &w, s);
        let sat = groebner::saturate(&jets_ideal, &f, limits)?;
        if !groebner::ideal_equal(&prime, &sat, limits)? {
            return Ok(Outcome::Fail(format!(
                "cover {}\nf = {f}\nsaturation {}",
                names(g, w.vertices()),
                show_poly_ideal(&sat)
            )));
        }
    }
    Ok(Outcome::Pass)
}

fn show_poly_ideal(i: &PolyIdeal) -> String {
    let gens: Vec<String> = i.generators().iter().map(ToString::to_string).collect();
    format!("<{}>", gens.join(", "))
}

fn check_minimal_prime(g: &Graph, s: usize, limits: &Limits) -> Result<Outcome> {
    let jr = JetsRing::for_graph(g, s);
    let radical = jr.radical_of_jets(&graph::edge_ideal(g))?;
    let primes = radical.minimal_primes(limits)?;
    for w in graph::minimal_vertex_covers(g, limits)? {
        let p = lifted_prime(&jr, &w);
        if !primes.contains(&p) {
            return Ok(Outcome::Fail(format!(
                "cover {}: {p} is not among the minimal primes of {radical}",
                names(g, w.vertices())
            )));
        }
    }
    Ok(Outcome::Pass)
}

fn check_pc_identity(g: &Graph, s: usize, limits: &Limits) -> Result<Outcome> {
    let closed = jets::principal_component_ideal(g, s);
    let meet = jets::pc_as_cover_intersection(g, s, limits)?;
    let from_graph = graph::edge_ideal(&jets::principal_component_graph(g, s));
    let count = g.edge_count() * (s + 1) * (s + 1);
    Ok(expect(
        closed == meet && closed == from_graph && closed.len() == count,
        || format!("closed form {closed}\ncover intersection {meet}\nedge ideal of PC graph {from_graph}"),
    ))
}

/// Mutual radical membership of two ideals' generators.
pub fn radical_equal(a: &PolyIdeal, b: &PolyIdeal, limits: &Limits) -> Result<Option<Polynomial>> {
    for (x, y) in [(a, b), (b, a)] {
        for f in x.generators() {
            if !groebner::radical_membership(f, y, limits)? {
                return Ok(Some(f.clone()));
            }
        }
    }
    Ok(None)
}

fn check_pc_saturation(g: &Graph, s: usize, limits: &Limits) -> Result<Outcome> {
    let closed = jets::principal_component_ideal(g, s).to_poly_ideal();
    let sat = jets::principal_component_via_saturation(g, s, limits)?;
    Ok(match radical_equal(&closed, &sat, limits)? {
        None => Outcome::Pass,
        Some(f) => Outcome::Fail(format!(
            "{f} lies in only one radical\nsaturation {}\nclosed form {}",
            show_poly_ideal(&sat),
            show_poly_ideal(&closed)
        )),
    })
}

fn check_cochordal_pc(g: &Graph, s: usize) -> Result<Outcome> {
    if !graph::is_cochordal(g) {
        return Ok(Outcome::NotApplicable("graph is not cochordal".into()));
    }
    let pc = jets::principal_component_graph(g, s);
    let c = graph::complement(&pc);
    Ok(match graph::is_chordal(&c) {
        (true, _) => Outcome::Pass,
        (false, cycle) => Outcome::Fail(format!(
            "chordless cycle in the complement of PC_s(G): {}",
            cycle.map(|c| c.names(&pc).join(" ")).unwrap_or_default()
        )),
    })
}

fn check_froberg(g: &Graph, s: usize, limits: &Limits) -> Result<Outcome> {
    let pc_graph = jets::principal_component_graph(g, s);
    let ideal = jets::principal_component_ideal(g, s);
    let cochordal = graph::is_cochordal(&pc_graph);
    let table = betti::betti_table(&ideal, limits)?;
    let linear = betti::has_linear_resolution(&ideal, limits)?;
    let base_cochordal = graph::is_cochordal(g);
    Ok(expect(linear == cochordal && (!base_cochordal || linear), || {
        format!("linear resolution: {linear}, PC graph cochordal: {cochordal}, G cochordal: {base_cochordal}\n{table}")
    }))
}

fn check_ghw_cover(g: &Graph, s: usize, limits: &Limits) -> Result<Outcome> {
    let j = jets::jets_of_graph(g, s);
    for w in graph::minimal_vertex_covers(g, limits)? {
        let lifted = jets::jets_of_cover(&w, s)?;
        let ok = VertexCover::new(&j, lifted.vertices().iter().copied()).is_ok_and(|c| c.is_minimal());
        if !ok {
            return Ok(Outcome::Fail(format!(
                "cover {} lifts to {}, not a minimal cover of J_s(G)",
                names(g, w.vertices()),
                names(&j, lifted.vertices())
            )));
        }
    }
    Ok(Outcome::Pass)
}

/// Runs `suite` over every instance and jet order. Cells run in parallel;
/// reports come back in corpus order, then by `s`.
pub fn run_suite(suite: Suite, instances: &[Instance], s_values: &[usize], limits: &Limits) -> Vec<VerificationReport> {
    let cells: Vec<(usize, usize)> = (0..instances.len())
        .flat_map(|i| s_values.iter().map(move |&s| (i, s)))
        .collect();
    cells
        .par_iter()
        .map(|&(i, s)| {
            let inst = &instances[i];
            let (status, witness, note) = match check(suite, &inst.graph, s, limits) {
                Ok(Outcome::Pass) => (Status::Pass, None, None),
                Ok(Outcome::Fail(w)) => (Status::Fail, Some(w), None),
                Ok(Outcome::NotApplicable(n)) => (Status::NotApplicable, None, Some(n)),
                Err(e) if e.is_resource() => (Status::Skipped, None, Some(e.to_string())),
                Err(e) => (Status::Fail, Some(format!("error: {e}")), None),
            };
            VerificationReport {
                suite: suite.name().to_string(),
                instance: inst.name.clone(),
                graph: inst.graph.to_edge_list(),
                s,
                status,
                witness,
                note,
            }
        })
        .collect()
}

/// Compares the closed-form monomial routines against the Gröbner ones:
/// `a ∩ b`, `a : m` and `a : m^∞`. Returns a description of the first
/// disagreement.
pub fn dual_oracle(a: &MonomialIdeal, b: &MonomialIdeal, m: &Monomial, limits: &Limits) -> Result<Option<String>> {
    let (pa, pb) = (a.to_poly_ideal(), b.to_poly_ideal());
    let f = Polynomial::from_monomial(a.ring(), m.clone());
    let checks: [(&str, MonomialIdeal, PolyIdeal); 3] = [
        ("intersection", a.intersect(b)?, groebner::intersect(&pa, &pb, limits)?),
        ("colon", a.colon(m), groebner::colon(&pa, &f, limits)?),
        ("saturation", a.saturate(m), groebner::saturate(&pa, &f, limits)?),
    ];
    for (what, mono, gb) in checks {
        if !groebner::ideal_equal(&mono.to_poly_ideal(), &gb, limits)? {
            return Ok(Some(format!(
                "{what} of {a} with {} by {f}: closed form {mono}, Groebner {}",
                b,
                show_poly_ideal(&gb)
            )));
        }
    }
    Ok(None)
}
