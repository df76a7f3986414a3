//! Monomial ideals handled in closed form, without Gröbner bases.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::cover::minimal_transversals;
use crate::error::{Error, Result};
use crate::groebner::PolyIdeal;
use crate::limits::Limits;
use crate::poly::{same_ring, Monomial, Polynomial, Ring};

/// A monomial ideal stored by its minimal generators in canonical order
/// (degree ascending, then the ring's term order descending).
#[derive(Clone)]
pub struct MonomialIdeal {
    ring: Arc<Ring>,
    generators: Vec<Monomial>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.generators == other.generators
    }
}

impl Eq for MonomialIdeal {}

fn canonical(ring: &Ring, a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| ring.order().compare(b, a))
}

/// Divisibility-minimal subset of `gens`, in canonical order.
pub fn minimalize(ring: &Arc<Ring>, gens: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
    let mut v: Vec<Monomial> = gens.into_iter().collect();
    v.sort_by(|a, b| canonical(ring, a, b));
    v.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(v.len());
    let mut masks: Vec<u64> = Vec::with_capacity(v.len());
    // ascending degree: only earlier entries can divide later ones
    for m in v {
        let mask = m.divmask();
        let redundant = out
            .iter()
            .zip(&masks)
            .any(|(g, &gm)| gm & !mask == 0 && g.divides(&m));
        if !redundant {
            masks.push(mask);
            out.push(m);
        }
    }
    MonomialIdeal {
        ring: ring.clone(),
        generators: out,
    }
}

impl MonomialIdeal {
    pub fn new(ring: &Arc<Ring>, gens: impl IntoIterator<Item = Monomial>) -> Self {
        minimalize(ring, gens)
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            generators: Vec::new(),
        }
    }

    pub fn unit(ring: &Arc<Ring>) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            generators: vec![Monomial::one(ring.nvars())],
        }
    }

    /// The prime generated by the given variables.
    pub fn from_variables(ring: &Arc<Ring>, vars: impl IntoIterator<Item = usize>) -> Self {
        let n = ring.nvars();
        minimalize(ring, vars.into_iter().map(|v| Monomial::var(n, v)))
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.first().is_some_and(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    fn check_ring(&self, other: &Arc<Ring>) -> Result<()> {
        if same_ring(&self.ring, other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Membership of an arbitrary polynomial: every term must be divisible
    /// by some generator.
    pub fn mono_member(&self, f: &Polynomial) -> Result<bool> {
        self.check_ring(f.ring())?;
        Ok(f.terms().iter().all(|(m, _)| self.contains_monomial(m)))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.generators.iter().all(|g| self.contains_monomial(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other.ring())?;
        Ok(minimalize(
            &self.ring,
            self.generators.iter().chain(&other.generators).cloned(),
        ))
    }

    /// Generated by the pairwise lcms of the two generator sets.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other.ring())?;
        let lcms = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.lcm(b)));
        Ok(minimalize(&self.ring, lcms))
    }

    /// Left fold of [`MonomialIdeal::intersect`]; `None` for an empty list.
    pub fn intersect_all<'a>(
        ideals: impl IntoIterator<Item = &'a MonomialIdeal>,
    ) -> Result<Option<MonomialIdeal>> {
        let mut it = ideals.into_iter();
        let Some(first) = it.next() else {
            return Ok(None);
        };
        let mut acc = first.clone();
        for i in it {
            acc = acc.intersect(i)?;
        }
        Ok(Some(acc))
    }

    /// `I : m`, generator-wise `g / gcd(g, m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        minimalize(
            &self.ring,
            self.generators
                .iter()
                .map(|g| g.div(&g.gcd(m)).expect("gcd divides")),
        )
    }

    /// `I : m^∞`, iterating the colon until it stabilizes.
    pub fn saturate(&self, m: &Monomial) -> MonomialIdeal {
        let mut cur = self.clone();
        loop {
            let next = cur.colon(m);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn colon_saturate(&self, m: &Monomial, saturate: bool) -> MonomialIdeal {
        if saturate {
            self.saturate(m)
        } else {
            self.colon(m)
        }
    }

    pub fn radical(&self) -> MonomialIdeal {
        minimalize(&self.ring, self.generators.iter().map(Monomial::radical))
    }

    /// Minimal primes of a squarefree ideal: the primes generated by the
    /// minimal transversals of the generators' supports.
    pub fn minimal_primes(&self, limits: &Limits) -> Result<Vec<MonomialIdeal>> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let n = self.ring.nvars();
        let hyperedges: Vec<Vec<usize>> = self
            .generators
            .iter()
            .map(|g| g.support().collect())
            .collect();
        let covers = minimal_transversals(n, &hyperedges, limits)?;
        Ok(covers
            .into_iter()
            .map(|c| MonomialIdeal::from_variables(&self.ring, c))
            .collect())
    }

    /// Distinct generator degrees, ascending.
    pub fn generator_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.generators.iter().map(Monomial::degree).collect();
        d.dedup();
        d
    }

    pub fn to_poly_ideal(&self) -> PolyIdeal {
        PolyIdeal::new(
            &self.ring,
            self.generators
                .iter()
                .map(|m| Polynomial::from_monomial(&self.ring, m.clone())),
        )
        .expect("same ring")
    }

    /// Recovers a monomial ideal when every generator is a single term.
    pub fn from_poly_ideal(ideal: &PolyIdeal) -> Option<MonomialIdeal> {
        let mut gens = Vec::with_capacity(ideal.generators().len());
        for g in ideal.generators() {
            if !g.is_monomial() {
                return None;
            }
            gens.push(g.leading_monomial()?.clone());
        }
        Some(minimalize(ideal.ring(), gens))
    }

    /// Moves into `ring`, sending variable `i` to `map(i)`.
    pub fn remap(&self, ring: &Arc<Ring>, map: impl Fn(usize) -> usize) -> MonomialIdeal {
        let n = ring.nvars();
        minimalize(ring, self.generators.iter().map(|g| g.remap(n, &map)))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display_with(self.ring.names()))?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<Ring> {
        Ring::grevlex(["x", "y", "z"]).unwrap()
    }

    fn mi(r: &Arc<Ring>, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::new(
            r,
            gens.iter()
                .map(|g| Polynomial::parse(r, g).unwrap().leading_monomial().unwrap().clone()),
        )
    }

    #[test]
    fn minimalize_cases() {
        let r = ring();
        assert_eq!(mi(&r, &["x*y", "x^2*y"]), mi(&r, &["x*y"]));
        assert!(minimalize(&r, []).is_zero());
        let once = mi(&r, &["x*y", "x^2", "x*y*z", "z^3", "x^3"]);
        assert_eq!(minimalize(&r, once.generators().to_vec()), once);
        assert_eq!(once.len(), 3);
    }

    #[test]
    fn minimalize_jets_radical_output() {
        let r = Ring::grevlex(["x.0", "x.1", "y.0", "y.1"]).unwrap();
        let m = mi(&r, &["x.0*y.0", "x.0*y.1", "x.1*y.0", "x.0*y.0"]);
        assert_eq!(m.to_string(), "<x.0*y.0, x.1*y.0, x.0*y.1>");
    }

    #[test]
    fn intersect_cases() {
        let r = ring();
        assert_eq!(
            mi(&r, &["x", "y"]).intersect(&mi(&r, &["z"])).unwrap(),
            mi(&r, &["x*z", "y*z"])
        );
        let three = MonomialIdeal::intersect_all([
            &mi(&r, &["x", "y"]),
            &mi(&r, &["x", "z"]),
            &mi(&r, &["y", "z"]),
        ])
        .unwrap()
        .unwrap();
        assert_eq!(three, mi(&r, &["x*y", "x*z", "y*z"]));
        let i = mi(&r, &["x^2", "y*z"]);
        assert_eq!(i.intersect(&MonomialIdeal::unit(&r)).unwrap(), i);
    }

    #[test]
    fn colon_and_saturate() {
        let r = ring();
        let i = mi(&r, &["x^2*y", "z"]);
        let x = Monomial::var(3, 0);
        assert_eq!(i.colon_saturate(&x, false), mi(&r, &["x*y", "z"]));
        assert_eq!(i.colon_saturate(&x, true), mi(&r, &["y", "z"]));
        assert!(mi(&r, &["x"]).colon(&x).is_unit());
    }

    #[test]
    fn minimal_primes_cases() {
        let r = ring();
        let primes = mi(&r, &["x*y", "x*z", "y*z"])
            .minimal_primes(&Limits::default())
            .unwrap();
        let shown: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["<x, y>", "<x, z>", "<y, z>"]);
        let p = mi(&r, &["x"]).minimal_primes(&Limits::default()).unwrap();
        assert_eq!(p, vec![mi(&r, &["x"])]);
        assert_eq!(
            mi(&r, &["x^2"]).minimal_primes(&Limits::default()),
            Err(Error::NotSquarefree)
        );
    }

    #[test]
    fn membership() {
        let r = ring();
        let x = mi(&r, &["x"]);
        assert!(!x.mono_member(&Polynomial::parse(&r, "x + y").unwrap()).unwrap());
        assert!(x.mono_member(&Polynomial::zero(&r)).unwrap());
        assert!(x.mono_member(&Polynomial::parse(&r, "x*y - 3*x^2").unwrap()).unwrap());
    }

    #[test]
    fn radical_of_powers() {
        let r = ring();
        assert_eq!(mi(&r, &["x^2*y", "y^3*z"]).radical(), mi(&r, &["x*y", "y*z"]));
    }
}
