//! Jets of rings, polynomials, ideals, graphs and vertex covers, together
//! with the principal-component constructions built on them.
//!
//! Variable `x` of the base ring becomes `x.0, x.1, ..., x.s`; the jets ring
//! orders its variables base index first, then jet order.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{self, Graph, VertexCover};
use crate::groebner::{self, PolyIdeal};
use crate::limits::Limits;
use crate::monomial_ideal::{minimalize, MonomialIdeal};
use crate::poly::{same_ring, Monomial, MonomialOrder, Polynomial, Ring};

/// Separator between a base variable name and its jet order.
pub const SEPARATOR: char = '.';

/// The variable `base^(order)` of a jets ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JetVariable {
    pub base: usize,
    pub order: usize,
}

/// `J_s(R)` for a base ring `R` in `n` variables: a ring in `n(s+1)`
/// variables.
#[derive(Debug, Clone)]
pub struct JetsRing {
    base: Arc<Ring>,
    s: usize,
    ring: Arc<Ring>,
}

impl JetsRing {
    pub fn new(base: &Arc<Ring>, s: usize) -> Result<JetsRing> {
        for name in base.names() {
            if name.contains(SEPARATOR) {
                return Err(Error::InvalidName(format!(
                    "{name} (base variables may not contain `{SEPARATOR}`)"
                )));
            }
        }
        let names = base
            .names()
            .iter()
            .flat_map(|n| (0..=s).map(move |j| format!("{n}{SEPARATOR}{j}")));
        let ring = Ring::new(names, MonomialOrder::GRevLex)?;
        Ok(JetsRing {
            base: base.clone(),
            s,
            ring,
        })
    }

    pub fn for_graph(g: &Graph, s: usize) -> JetsRing {
        JetsRing::new(&g.ring(), s).expect("vertex names never contain the separator")
    }

    pub fn base(&self) -> &Arc<Ring> {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.s
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn index(&self, v: JetVariable) -> usize {
        debug_assert!(v.order <= self.s);
        v.base * (self.s + 1) + v.order
    }

    pub fn variable(&self, index: usize) -> JetVariable {
        JetVariable {
            base: index / (self.s + 1),
            order: index % (self.s + 1),
        }
    }

    /// Index map of the inclusion `J_s(R) → J_t(R)` for `s ≤ t`.
    pub fn inclusion_into(&self, larger: &JetsRing) -> impl Fn(usize) -> usize {
        assert!(self.s <= larger.s, "inclusion goes from lower to higher jet order");
        let (from, to) = (self.s + 1, larger.s + 1);
        move |i| (i / from) * to + i % from
    }

    /// Index map sending base variable `x` to `x.0`.
    pub fn base_embedding(&self) -> impl Fn(usize) -> usize {
        let k = self.s + 1;
        move |i| i * k
    }

    /// Order-zero copies of the given base variables.
    pub fn order_zero(&self, base_vars: &[usize]) -> Vec<usize> {
        base_vars.iter().map(|&b| b * (self.s + 1)).collect()
    }

    /// All jets `x.0..x.s` of the given base variables.
    pub fn all_orders(&self, base_vars: &[usize]) -> Vec<usize> {
        base_vars
            .iter()
            .flat_map(|&b| (0..=self.s).map(move |j| b * (self.s + 1) + j))
            .collect()
    }

    /// Coefficients `α^(0), ..., α^(s)` of `t^m` after substituting
    /// `x ↦ Σ_j x.j t^j` into `f` and truncating at `t^(s+1)`.
    pub fn jets_of_polynomial(&self, f: &Polynomial) -> Result<Vec<Polynomial>> {
        if !same_ring(f.ring(), &self.base) {
            return Err(Error::RingMismatch);
        }
        let k = self.s + 1;
        let zero = Polynomial::zero(&self.ring);
        let mut out = vec![zero.clone(); k];
        for (m, c) in f.terms() {
            let mut series = vec![zero.clone(); k];
            series[0] = Polynomial::constant(&self.ring, c.clone());
            for (v, e) in m.sparse() {
                let var: Vec<Polynomial> = (0..k)
                    .map(|j| Polynomial::var(&self.ring, v * k + j))
                    .collect();
                for _ in 0..e {
                    series = truncated_product(&series, &var);
                }
            }
            for (acc, term) in out.iter_mut().zip(&series) {
                *acc = acc.add(term);
            }
        }
        Ok(out)
    }

    /// The ideal generated by every coefficient of every generator, listed
    /// by jet order first: `J_s(I) = J_{s-1}(I) + ⟨α^(s)⟩`.
    pub fn jets_of_ideal(&self, ideal: &PolyIdeal) -> Result<PolyIdeal> {
        let mut per_gen = Vec::with_capacity(ideal.generators().len());
        for g in ideal.generators() {
            per_gen.push(self.jets_of_polynomial(g)?);
        }
        let gens = (0..=self.s).flat_map(|m| per_gen.iter().map(move |a| a[m].clone()));
        PolyIdeal::new(&self.ring, gens)
    }

    /// `√J_s(I)` for a monomial ideal: the supports of all terms of all
    /// coefficients, minimalized.
    pub fn radical_of_jets(&self, ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut gens = Vec::new();
        for g in ideal.generators() {
            let f = Polynomial::from_monomial(&self.base, g.clone());
            for alpha in self.jets_of_polynomial(&f)? {
                gens.extend(alpha.terms().iter().map(|(m, _)| m.radical()));
            }
        }
        Ok(minimalize(&self.ring, gens))
    }

    /// The monomial ideal generated by the given jets-ring variables.
    pub fn variables_ideal(&self, vars: impl IntoIterator<Item = usize>) -> MonomialIdeal {
        MonomialIdeal::from_variables(&self.ring, vars)
    }
}

fn truncated_product(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let k = a.len();
    (0..k)
        .map(|m| {
            (0..=m).fold(Polynomial::zero(a[0].ring()), |acc, i| {
                if a[i].is_zero() || b[m - i].is_zero() {
                    acc
                } else {
                    acc.add(&a[i].mul(&b[m - i]))
                }
            })
        })
        .collect()
}

/// Coefficient list of `f` at jet order `s`, in a freshly built jets ring.
pub fn jets_of_polynomial(f: &Polynomial, s: usize) -> Result<Vec<Polynomial>> {
    JetsRing::new(f.ring(), s)?.jets_of_polynomial(f)
}

pub fn jets_of_ideal(ideal: &PolyIdeal, s: usize) -> Result<PolyIdeal> {
    JetsRing::new(ideal.ring(), s)?.jets_of_ideal(ideal)
}

pub fn radical_of_jets(ideal: &MonomialIdeal, s: usize) -> Result<MonomialIdeal> {
    JetsRing::new(ideal.ring(), s)?.radical_of_jets(ideal)
}

fn jets_vertex_graph(g: &Graph, s: usize, keep: impl Fn(usize, usize) -> bool) -> Graph {
    let k = s + 1;
    let names: Vec<String> = g
        .names()
        .iter()
        .flat_map(|n| (0..k).map(move |j| format!("{n}{SEPARATOR}{j}")))
        .collect();
    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        for i in 0..k {
            for j in 0..k {
                if keep(i, j) {
                    edges.push((a * k + i, b * k + j));
                }
            }
        }
    }
    Graph::with_jet_names(names, edges).expect("derived names are valid")
}

/// `J_s(G)`: edges `{x.i, y.j}` for base edges `{x, y}` with `i + j ≤ s`.
pub fn jets_of_graph(g: &Graph, s: usize) -> Graph {
    jets_vertex_graph(g, s, |i, j| i + j <= s)
}

/// `PC_s(G)`: edges `{x.i, y.j}` for base edges `{x, y}` and all `i, j ≤ s`.
pub fn principal_component_graph(g: &Graph, s: usize) -> Graph {
    jets_vertex_graph(g, s, |_, _| true)
}

/// Complement of `J_s(G)`.
pub fn jets_complement_edges(g: &Graph, s: usize) -> Graph {
    graph::complement(&jets_of_graph(g, s))
}

/// `{x.j : x ∈ W, j ≤ s}`, indexed in the jets graph of `g`.
pub fn jets_of_cover(w: &VertexCover, s: usize) -> Result<VertexCover> {
    if !w.is_minimal() {
        return Err(Error::NotMinimal);
    }
    let k = s + 1;
    Ok(VertexCover::trusted(
        w.vertices().iter().flat_map(|&v| (0..k).map(move |j| v * k + j)).collect(),
        true,
    ))
}

/// `⟨x.i y.j : {x, y} ∈ E(G), i, j ≤ s⟩`, i.e. `|E|(s+1)²` generators.
pub fn principal_component_ideal(g: &Graph, s: usize) -> MonomialIdeal {
    let jr = JetsRing::for_graph(g, s);
    let k = s + 1;
    let n = jr.nvars();
    let gens = g.edges().flat_map(|(a, b)| {
        (0..k).flat_map(move |i| (0..k).map(move |j| Monomial::from_support(n, [a * k + i, b * k + j])))
    });
    MonomialIdeal::new(jr.ring(), gens)
}

/// Intersection over all minimal covers `W` of `⟨J_s(W)⟩`.
pub fn pc_as_cover_intersection(g: &Graph, s: usize, limits: &Limits) -> Result<MonomialIdeal> {
    let jr = JetsRing::for_graph(g, s);
    let primes: Vec<MonomialIdeal> = graph::minimal_vertex_covers(g, limits)?
        .iter()
        .map(|w| jr.variables_ideal(jr.all_orders(w.vertices())))
        .collect();
    Ok(MonomialIdeal::intersect_all(&primes)?.expect("every graph has a minimal cover"))
}

/// The singular locus of `V(I(G))`, on order-zero variables of the jets
/// ring: the intersection over pairs of distinct minimal covers of the sum
/// of their primes.
pub fn singular_locus_ideal(g: &Graph, s: usize, limits: &Limits) -> Result<MonomialIdeal> {
    let covers = graph::minimal_vertex_covers(g, limits)?;
    if covers.len() < 2 {
        return Err(Error::SmoothVariety);
    }
    let jr = JetsRing::for_graph(g, s);
    let mut acc: Option<MonomialIdeal> = None;
    for (i, a) in covers.iter().enumerate() {
        for b in &covers[i + 1..] {
            let mut vars = jr.order_zero(a.vertices());
            vars.extend(jr.order_zero(b.vertices()));
            let pair = jr.variables_ideal(vars);
            acc = Some(match acc {
                None => pair,
                Some(x) => x.intersect(&pair)?,
            });
        }
    }
    Ok(acc.expect("at least one pair"))
}

/// `J_s(I(G)) : A^∞` with `A` the singular-locus ideal, evaluated as the
/// intersection of the saturations by each generator of `A`. A graph with a
/// single minimal cover has nothing to remove, and the jets ideal is
/// returned unchanged.
pub fn principal_component_via_saturation(g: &Graph, s: usize, limits: &Limits) -> Result<PolyIdeal> {
    let jr = JetsRing::for_graph(g, s);
    let jets = jr.jets_of_ideal(&graph::edge_ideal(g).to_poly_ideal())?;
    let a = match singular_locus_ideal(g, s, limits) {
        Ok(a) => a,
        Err(Error::SmoothVariety) => return Ok(jets),
        Err(e) => return Err(e),
    };
    let mut acc: Option<PolyIdeal> = None;
    for m in a.generators() {
        let f = Polynomial::from_monomial(jr.ring(), m.clone());
        let sat = groebner::saturate(&jets, &f, limits)?;
        acc = Some(match acc {
            None => sat,
            Some(prev) => groebner::intersect(&prev, &sat, limits)?,
        });
    }
    Ok(acc.expect("singular locus has generators"))
}

/// Product of the order-zero variables of the vertices outside `w`.
pub fn cover_complement_product(g: &Graph, w: &VertexCover, s: usize) -> Polynomial {
    let jr = JetsRing::for_graph(g, s);
    let vars = jr.order_zero(&w.complement_in(g));
    Polynomial::from_monomial(jr.ring(), Monomial::from_support(jr.nvars(), vars))
}
