//! Buchberger's algorithm and the ideal operations built on it.
//!
//! Elimination, intersection, colon, saturation and radical membership all
//! go through a single auxiliary variable prepended to the ring and removed
//! with a block order (lex on the block, grevlex inside).

use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{same_ring, Coefficient, Monomial, MonomialOrder, Polynomial, Ring};

/// A reduced Gröbner basis: monic elements, no term of one element
/// divisible by another element's leading monomial.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    elements: Vec<Polynomial>,
}

/// An ideal given by generators, with a lazily computed basis for the
/// ring's own order.
pub struct PolyIdeal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    basis: OnceLock<Arc<GroebnerBasis>>,
}

impl Clone for PolyIdeal {
    fn clone(&self) -> Self {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        PolyIdeal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            basis,
        }
    }
}

impl fmt::Debug for PolyIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.generators.iter().map(|g| g.to_string())).finish()
    }
}

impl PolyIdeal {
    /// Zero generators are dropped; every generator must live in `ring`.
    pub fn new(ring: &Arc<Ring>, generators: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                gens.push(g.with_ring(ring));
            }
        }
        Ok(PolyIdeal {
            ring: ring.clone(),
            generators: gens,
            basis: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        PolyIdeal {
            ring: ring.clone(),
            generators: Vec::new(),
            basis: OnceLock::new(),
        }
    }

    /// Parses generators written one per entry in polynomial text form.
    pub fn parse<'a>(ring: &Arc<Ring>, generators: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let gens = generators
            .into_iter()
            .map(|g| Polynomial::parse(ring, g))
            .collect::<Result<Vec<_>>>()?;
        PolyIdeal::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    fn check_ring(&self, other: &Arc<Ring>) -> Result<()> {
        if same_ring(&self.ring, other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Reduced basis under the ring's order, computed once and cached.
    pub fn groebner_basis(&self, limits: &Limits) -> Result<Arc<GroebnerBasis>> {
        if let Some(b) = self.basis.get() {
            return Ok(b.clone());
        }
        let b = Arc::new(buchberger(self, self.ring.order(), limits)?);
        let _ = self.basis.set(b.clone());
        Ok(b)
    }

    pub fn contains(&self, f: &Polynomial, limits: &Limits) -> Result<bool> {
        self.check_ring(f.ring())?;
        Ok(self.groebner_basis(limits)?.normal_form(f).is_zero())
    }

    pub fn is_unit(&self, limits: &Limits) -> Result<bool> {
        Ok(self.groebner_basis(limits)?.is_unit())
    }

    pub fn sum(&self, other: &PolyIdeal) -> Result<PolyIdeal> {
        self.check_ring(other.ring())?;
        PolyIdeal::new(
            &self.ring,
            self.generators.iter().chain(other.generators.iter()).cloned(),
        )
    }

    /// Moves the ideal into `ring`, sending variable `i` to `map(i)`.
    pub fn remap(&self, ring: &Arc<Ring>, map: impl Fn(usize) -> usize) -> PolyIdeal {
        PolyIdeal {
            ring: ring.clone(),
            generators: self
                .generators
                .iter()
                .map(|g| g.remap(ring, &map))
                .filter(|g| !g.is_zero())
                .collect(),
            basis: OnceLock::new(),
        }
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_unit()
    }

    /// Remainder of `f` on division by the basis. Zero exactly when `f` lies
    /// in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let f = f.with_ring(&self.ring);
        let divisors = Divisors::new(&self.elements);
        let terms = reduce(f.into_terms(), &divisors, &self.ring, true);
        Polynomial::from_sorted(&self.ring, terms)
    }

    pub fn as_ideal(&self) -> PolyIdeal {
        let ideal = PolyIdeal {
            ring: self.ring.clone(),
            generators: self.elements.clone(),
            basis: OnceLock::new(),
        };
        let _ = ideal.basis.set(Arc::new(self.clone()));
        ideal
    }

    /// Checks both defining properties: every S-polynomial reduces to zero
    /// and the basis is reduced.
    pub fn verify(&self) -> bool {
        let divisors = Divisors::new(&self.elements);
        for (i, g) in self.elements.iter().enumerate() {
            if g.leading_coefficient().is_none_or(|c| !c.is_one()) {
                return false;
            }
            for (j, h) in self.elements.iter().enumerate() {
                if i == j {
                    continue;
                }
                let lm = h.leading_monomial().unwrap();
                if g.terms().iter().any(|(m, _)| lm.divides(m)) {
                    return false;
                }
                if i < j {
                    let s = s_polynomial(g, h);
                    if !reduce(s.into_terms(), &divisors, &self.ring, true).is_empty() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// `lcm/lm(f) * f - lcm/lm(g) * g` for monic-or-not `f`, `g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = (f.leading_monomial().unwrap(), f.leading_coefficient().unwrap());
    let (gm, gc) = (g.leading_monomial().unwrap(), g.leading_coefficient().unwrap());
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.div(fm).unwrap(), &fc.recip());
    let b = g.mul_term(&l.div(gm).unwrap(), &gc.recip());
    a.sub(&b)
}

struct Divisors<'a> {
    polys: Vec<&'a Polynomial>,
    masks: Vec<u64>,
}

impl<'a> Divisors<'a> {
    fn new(polys: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        let polys: Vec<&Polynomial> = polys.into_iter().filter(|p| !p.is_zero()).collect();
        let masks = polys
            .iter()
            .map(|p| p.leading_monomial().unwrap().divmask())
            .collect();
        Divisors { polys, masks }
    }

    fn find(&self, m: &Monomial) -> Option<&'a Polynomial> {
        let mask = m.divmask();
        self.polys
            .iter()
            .zip(&self.masks)
            .find(|(p, &pm)| pm & !mask == 0 && p.leading_monomial().unwrap().divides(m))
            .map(|(p, _)| *p)
    }
}

/// Multivariate division. With `full` set the remainder is fully reduced,
/// otherwise only the leading term is.
fn reduce(
    mut p: Vec<(Monomial, Coefficient)>,
    divisors: &Divisors<'_>,
    ring: &Arc<Ring>,
    full: bool,
) -> Vec<(Monomial, Coefficient)> {
    let order = ring.order();
    let mut rem = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (m, c) = &p[start];
        match divisors.find(m) {
            Some(g) => {
                let gt = g.terms();
                let (gm, gc) = &gt[0];
                let q = m.div(gm).unwrap();
                let factor = if gc.is_one() { c.clone() } else { c / gc };
                // merge p[start+1..] with -factor * q * g[1..]
                let a = &p[start + 1..];
                let b = &gt[1..];
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                let mut bj: Option<Monomial> = b.first().map(|(bm, _)| bm.mul(&q));
                while i < a.len() && j < b.len() {
                    let bm = bj.as_ref().unwrap();
                    match order.compare(&a[i].0, bm) {
                        Ordering::Greater => {
                            out.push(a[i].clone());
                            i += 1;
                        }
                        Ordering::Less => {
                            out.push((bj.take().unwrap(), -(&factor * &b[j].1)));
                            j += 1;
                            bj = b.get(j).map(|(bm, _)| bm.mul(&q));
                        }
                        Ordering::Equal => {
                            let nc = &a[i].1 - &factor * &b[j].1;
                            if !nc.is_zero() {
                                out.push((a[i].0.clone(), nc));
                            }
                            i += 1;
                            j += 1;
                            bj = b.get(j).map(|(bm, _)| bm.mul(&q));
                        }
                    }
                }
                out.extend_from_slice(&a[i..]);
                if j < b.len() {
                    out.push((bj.take().unwrap(), -(&factor * &b[j].1)));
                    for (bm, bc) in &b[j + 1..] {
                        out.push((bm.mul(&q), -(&factor * bc)));
                    }
                }
                p = out;
                start = 0;
            }
            None => {
                if !full {
                    rem.extend(p.drain(start..));
                    break;
                }
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn make_monic(terms: Vec<(Monomial, Coefficient)>) -> Vec<(Monomial, Coefficient)> {
    match terms.first() {
        Some((_, lc)) if !lc.is_one() => {
            let inv = lc.recip();
            terms.into_iter().map(|(m, c)| (m, c * &inv)).collect()
        }
        _ => terms,
    }
}

/// Reduced Gröbner basis of `ideal` under `order`.
///
/// Pairs are processed by the normal strategy (smallest lcm first, ties
/// broken by the term order and then by index) with the Gebauer–Möller
/// criteria. Output depends only on the generator list and the order.
pub fn buchberger(ideal: &PolyIdeal, order: MonomialOrder, limits: &Limits) -> Result<GroebnerBasis> {
    let ring = if ideal.ring.order() == order {
        ideal.ring.clone()
    } else {
        ideal.ring.with_order(order)
    };

    let mut gens: Vec<Polynomial> = ideal
        .generators
        .iter()
        .map(|g| Polynomial::from_sorted(&ring, make_monic(g.with_ring(&ring).into_terms())))
        .collect();
    if gens.iter().any(|g| g.is_unit()) {
        return Ok(GroebnerBasis {
            elements: vec![Polynomial::one(&ring)],
            ring,
        });
    }
    gens.sort_by(|a, b| {
        order
            .compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            .then_with(|| a.len().cmp(&b.len()))
    });
    gens.dedup();

    let mut basis: Vec<Polynomial> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let insert = |h: Polynomial,
                      basis: &mut Vec<Polynomial>,
                      active: &mut Vec<bool>,
                      pairs: &mut Vec<Pair>|
     -> Result<()> {
        if basis.len() >= limits.max_basis_size {
            return Err(Error::ResourceLimit(format!(
                "Gröbner basis exceeded {} elements",
                limits.max_basis_size
            )));
        }
        let k = basis.len();
        let hm = h.leading_monomial().unwrap().clone();
        basis.push(h);
        active.push(true);
        gebauer_moller(k, &hm, basis, active, pairs);
        Ok(())
    };

    for g in gens {
        let divisors = Divisors::new(
            basis
                .iter()
                .zip(&active)
                .filter(|(_, &a)| a)
                .map(|(p, _)| p),
        );
        let r = make_monic(reduce(g.into_terms(), &divisors, &ring, true));
        if r.is_empty() {
            continue;
        }
        let r = Polynomial::from_sorted(&ring, r);
        if r.is_unit() {
            return Ok(GroebnerBasis {
                elements: vec![Polynomial::one(&ring)],
                ring,
            });
        }
        insert(r, &mut basis, &mut active, &mut pairs)?;
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                pa.lcm
                    .degree()
                    .cmp(&pb.lcm.degree())
                    .then_with(|| order.compare(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        if pair.lcm.degree() > limits.max_pair_degree {
            return Err(Error::ResourceLimit(format!(
                "S-pair degree {} exceeds {}",
                pair.lcm.degree(),
                limits.max_pair_degree
            )));
        }
        let s = s_polynomial(&basis[pair.i], &basis[pair.j]);
        let divisors = Divisors::new(
            basis
                .iter()
                .zip(&active)
                .filter(|(_, &a)| a)
                .map(|(p, _)| p),
        );
        let r = make_monic(reduce(s.into_terms(), &divisors, &ring, true));
        if r.is_empty() {
            continue;
        }
        let r = Polynomial::from_sorted(&ring, r);
        if r.is_unit() {
            return Ok(GroebnerBasis {
                elements: vec![Polynomial::one(&ring)],
                ring,
            });
        }
        insert(r, &mut basis, &mut active, &mut pairs)?;
    }

    // interreduce the surviving elements
    let mut kept: Vec<Polynomial> = basis
        .into_iter()
        .zip(active)
        .filter(|(_, a)| *a)
        .map(|(p, _)| p)
        .collect();
    kept.sort_by(|a, b| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut reduced = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let others = Divisors::new(
            kept.iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p),
        );
        let lead = kept[i].terms()[0].clone();
        let tail = reduce(kept[i].terms()[1..].to_vec(), &others, &ring, true);
        let mut terms = vec![lead];
        terms.extend(tail);
        reduced.push(Polynomial::from_sorted(&ring, make_monic(terms)));
    }
    Ok(GroebnerBasis {
        ring,
        elements: reduced,
    })
}

fn gebauer_moller(
    k: usize,
    hm: &Monomial,
    basis: &[Polynomial],
    active: &mut [bool],
    pairs: &mut Vec<Pair>,
) {
    let lm = |i: usize| basis[i].leading_monomial().unwrap();
    let candidates: Vec<(usize, Monomial)> = (0..k)
        .filter(|&i| active[i])
        .map(|i| (i, lm(i).lcm(hm)))
        .collect();

    // criterion M/F on the new pairs
    let mut kept: Vec<(usize, Monomial)> = Vec::new();
    for (idx, (i, l)) in candidates.iter().enumerate() {
        let coprime = lm(*i).is_coprime(hm);
        let dominated = candidates[idx + 1..]
            .iter()
            .chain(kept.iter())
            .any(|(_, l2)| l2.divides(l));
        if coprime || !dominated {
            kept.push((*i, l.clone()));
        }
    }
    // chain criterion on old pairs
    pairs.retain(|p| {
        !(hm.divides(&p.lcm) && lm(p.i).lcm(hm) != p.lcm && lm(p.j).lcm(hm) != p.lcm)
    });
    // product criterion on the new pairs
    for (i, l) in kept {
        if !lm(i).is_coprime(hm) {
            pairs.push(Pair { i, j: k, lcm: l });
        }
    }
    for (i, alive) in active.iter_mut().enumerate().take(k) {
        if *alive && hm.divides(lm(i)) {
            *alive = false;
        }
    }
}

/// Splits off the first `k` variables: returns generators of `ideal`
/// intersected with the polynomial ring in the remaining variables.
pub fn eliminate(ideal: &PolyIdeal, k: usize, limits: &Limits) -> Result<PolyIdeal> {
    let ring = ideal.ring();
    if k > ring.nvars() {
        return Err(Error::Parse(format!(
            "cannot eliminate {k} of {} variables",
            ring.nvars()
        )));
    }
    let gb = buchberger(ideal, MonomialOrder::elimination(k), limits)?;
    let sub = Ring::new(
        ring.names()[k..].iter().cloned(),
        ring.order().after_elimination(),
    )?;
    let n = sub.nvars();
    let gens = gb
        .elements()
        .iter()
        .filter(|g| {
            g.terms()
                .iter()
                .all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0))
        })
        .map(|g| {
            Polynomial::from_terms(
                &sub,
                g.terms().iter().map(|(m, c)| {
                    (Monomial::from_exponents(m.exponents()[k..].to_vec()), c.clone())
                }),
            )
        })
        .collect::<Vec<_>>();
    debug_assert!(gens.iter().all(|g| g.ring().nvars() == n));
    PolyIdeal::new(&sub, gens)
}

/// The ring extended by one fresh elimination variable in front, and the
/// inclusion of `ideal`'s generators into it.
fn with_aux_variable(ring: &Arc<Ring>) -> Result<Arc<Ring>> {
    let t = ring.fresh_name("t");
    ring.prepend_block(&[t.as_str()])
}

fn contract(ideal: PolyIdeal, ring: &Arc<Ring>) -> Result<PolyIdeal> {
    PolyIdeal::new(ring, ideal.generators.into_iter().map(|g| g.with_ring(ring)))
}

pub fn intersect(i: &PolyIdeal, j: &PolyIdeal, limits: &Limits) -> Result<PolyIdeal> {
    i.check_ring(j.ring())?;
    let ring = i.ring();
    if i.generators.is_empty() || j.generators.is_empty() {
        return Ok(PolyIdeal::zero(ring));
    }
    let ext = with_aux_variable(ring)?;
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = Polynomial::one(&ext).sub(&t);
    let gens = i
        .generators
        .iter()
        .map(|g| t.mul(&g.remap(&ext, |v| v + 1)))
        .chain(
            j.generators
                .iter()
                .map(|g| one_minus_t.mul(&g.remap(&ext, |v| v + 1))),
        );
    let big = PolyIdeal::new(&ext, gens)?;
    contract(eliminate(&big, 1, limits)?, ring)
}

/// `I : f`, computed as `(I ∩ ⟨f⟩) / f`.
pub fn colon(i: &PolyIdeal, f: &Polynomial, limits: &Limits) -> Result<PolyIdeal> {
    i.check_ring(f.ring())?;
    if f.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let principal = PolyIdeal::new(i.ring(), [f.clone()])?;
    let meet = intersect(i, &principal, limits)?;
    let f = f.with_ring(i.ring());
    let gens = meet
        .generators
        .iter()
        .map(|g| g.divide_exact_poly(&f))
        .collect::<Result<Vec<_>>>()?;
    PolyIdeal::new(i.ring(), gens)
}

/// `I : f^∞`, via `I + ⟨1 - t f⟩` with `t` eliminated.
pub fn saturate(i: &PolyIdeal, f: &Polynomial, limits: &Limits) -> Result<PolyIdeal> {
    i.check_ring(f.ring())?;
    if f.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    if f.is_unit() || i.generators.is_empty() {
        return Ok(i.clone());
    }
    let ring = i.ring();
    let ext = with_aux_variable(ring)?;
    let t = Polynomial::var(&ext, 0);
    let rabinowitsch = Polynomial::one(&ext).sub(&t.mul(&f.remap(&ext, |v| v + 1)));
    let gens = i
        .generators
        .iter()
        .map(|g| g.remap(&ext, |v| v + 1))
        .chain(std::iter::once(rabinowitsch));
    let big = PolyIdeal::new(&ext, gens)?;
    contract(eliminate(&big, 1, limits)?, ring)
}

/// Whether `g` lies in the radical of `i` (Rabinowitsch trick).
pub fn radical_membership(g: &Polynomial, i: &PolyIdeal, limits: &Limits) -> Result<bool> {
    i.check_ring(g.ring())?;
    if g.is_zero() {
        return Ok(true);
    }
    let ring = i.ring();
    let ext = with_aux_variable(ring)?;
    let t = Polynomial::var(&ext, 0);
    let rabinowitsch = Polynomial::one(&ext).sub(&t.mul(&g.remap(&ext, |v| v + 1)));
    let gens = i
        .generators
        .iter()
        .map(|h| h.remap(&ext, |v| v + 1))
        .chain(std::iter::once(rabinowitsch));
    let big = PolyIdeal::new(&ext, gens)?;
    Ok(buchberger(&big, ext.order(), limits)?.is_unit())
}

/// Equality as ideals: each generator set reduces to zero modulo a basis of
/// the other.
pub fn ideal_equal(i: &PolyIdeal, j: &PolyIdeal, limits: &Limits) -> Result<bool> {
    i.check_ring(j.ring())?;
    let gi = i.groebner_basis(limits)?;
    let gj = j.groebner_basis(limits)?;
    Ok(i.generators.iter().all(|g| gj.normal_form(g).is_zero())
        && j.generators.iter().all(|g| gi.normal_form(g).is_zero()))
}

/// Whether every generator of `small` lies in `big`.
pub fn ideal_contained(small: &PolyIdeal, big: &PolyIdeal, limits: &Limits) -> Result<bool> {
    small.check_ring(big.ring())?;
    let gb = big.groebner_basis(limits)?;
    Ok(small.generators.iter().all(|g| gb.normal_form(g).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn ideal(r: &Arc<Ring>, gens: &[&str]) -> PolyIdeal {
        PolyIdeal::parse(r, gens.iter().copied()).unwrap()
    }

    fn jets1() -> Arc<Ring> {
        Ring::grevlex(["x.0", "x.1", "y.0", "y.1"]).unwrap()
    }

    #[test]
    fn already_reduced_basis() {
        let r = Ring::grevlex(["x", "y"]).unwrap();
        let gb = ideal(&r, &["x", "y"]).groebner_basis(&lim()).unwrap();
        let shown: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["y", "x"]);
    }

    #[test]
    fn redundant_generator_removed() {
        let r = Ring::grevlex(["x", "y"]).unwrap();
        let gb = ideal(&r, &["x^2", "x"]).groebner_basis(&lim()).unwrap();
        assert_eq!(gb.elements().len(), 1);
        assert_eq!(gb.elements()[0].to_string(), "x");
    }

    #[test]
    fn jets_membership_via_colon() {
        let r = jets1();
        let j = ideal(&r, &["x.0*y.0", "x.0*y.1 + x.1*y.0"]);
        let gb = j.groebner_basis(&lim()).unwrap();
        assert!(gb.verify());
        let f = Polynomial::parse(&r, "x.1*y.0^2").unwrap();
        assert!(gb.normal_form(&f).is_zero());
        assert!(gb
            .normal_form(&Polynomial::parse(&r, "x.0*y.0").unwrap())
            .is_zero());
        assert!(!gb.normal_form(&Polynomial::parse(&r, "x.1*y.0").unwrap()).is_zero());
    }

    #[test]
    fn unit_not_in_proper_ideal() {
        let r = Ring::grevlex(["x", "y"]).unwrap();
        let gb = ideal(&r, &["x", "y"]).groebner_basis(&lim()).unwrap();
        assert_eq!(gb.normal_form(&Polynomial::one(&r)), Polynomial::one(&r));
    }

    #[test]
    fn equality_cases() {
        let r = Ring::grevlex(["x", "y"]).unwrap();
        assert!(ideal_equal(&ideal(&r, &["x", "y"]), &ideal(&r, &["x + y", "y"]), &lim()).unwrap());
        assert!(!ideal_equal(&ideal(&r, &["x"]), &ideal(&r, &["x^2"]), &lim()).unwrap());
    }

    #[test]
    fn eliminate_cases() {
        let r = Ring::grevlex(["t", "x", "y"]).unwrap();
        let e = eliminate(&ideal(&r, &["t*x - 1", "t*y"]), 1, &lim()).unwrap();
        let sub = e.ring().clone();
        assert!(ideal_equal(&e, &ideal(&sub, &["y"]), &lim()).unwrap());

        let e = eliminate(&ideal(&r, &["x - t", "y - t^2"]), 1, &lim()).unwrap();
        let sub = e.ring().clone();
        assert!(ideal_equal(&e, &ideal(&sub, &["y - x^2"]), &lim()).unwrap());

        let i = ideal(&r, &["t*x - y^2", "x*y"]);
        let e = eliminate(&i, 0, &lim()).unwrap();
        assert!(ideal_equal(&contract(e, &r).unwrap(), &i, &lim()).unwrap());
    }

    #[test]
    fn intersect_cases() {
        let r = Ring::grevlex(["x", "y", "z"]).unwrap();
        let m = intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"]), &lim()).unwrap();
        assert!(ideal_equal(&m, &ideal(&r, &["x*y"]), &lim()).unwrap());
        let m = intersect(&ideal(&r, &["x", "y"]), &ideal(&r, &["z"]), &lim()).unwrap();
        assert!(ideal_equal(&m, &ideal(&r, &["x*z", "y*z"]), &lim()).unwrap());
        let i = ideal(&r, &["x^2 - y", "y*z"]);
        let m = intersect(&i, &i, &lim()).unwrap();
        assert!(ideal_equal(&m, &i, &lim()).unwrap());
    }

    #[test]
    fn colon_cases() {
        let r = Ring::grevlex(["x", "y"]).unwrap();
        let x = Polynomial::parse(&r, "x").unwrap();
        let c = colon(&ideal(&r, &["x*y"]), &x, &lim()).unwrap();
        assert!(ideal_equal(&c, &ideal(&r, &["y"]), &lim()).unwrap());
        let c = colon(&ideal(&r, &["x"]), &x, &lim()).unwrap();
        assert!(c.is_unit(&lim()).unwrap());
        // non-monomial divisor
        let f = Polynomial::parse(&r, "x + y").unwrap();
        let c = colon(&ideal(&r, &["x^2 - y^2"]), &f, &lim()).unwrap();
        assert!(ideal_equal(&c, &ideal(&r, &["x - y"]), &lim()).unwrap());
    }

    #[test]
    fn saturate_cases() {
        let r = jets1();
        let j = ideal(&r, &["x.0*y.0", "x.0*y.1 + x.1*y.0"]);
        let y0 = Polynomial::parse(&r, "y.0").unwrap();
        let s = saturate(&j, &y0, &lim()).unwrap();
        assert!(ideal_equal(&s, &ideal(&r, &["x.0", "x.1"]), &lim()).unwrap());
        // stable under a second saturation
        let s2 = saturate(&s, &y0, &lim()).unwrap();
        assert!(ideal_equal(&s, &s2, &lim()).unwrap());

        let one = Polynomial::one(&r);
        assert!(ideal_equal(&saturate(&j, &one, &lim()).unwrap(), &j, &lim()).unwrap());

        let r2 = Ring::grevlex(["x", "y"]).unwrap();
        let s = saturate(
            &ideal(&r2, &["x^2*y"]),
            &Polynomial::parse(&r2, "x").unwrap(),
            &lim(),
        )
        .unwrap();
        assert!(ideal_equal(&s, &ideal(&r2, &["y"]), &lim()).unwrap());
    }

    #[test]
    fn radical_membership_cases() {
        let r = Ring::grevlex(["x", "y"]).unwrap();
        let x = Polynomial::parse(&r, "x").unwrap();
        let y = Polynomial::parse(&r, "y").unwrap();
        assert!(radical_membership(&x, &ideal(&r, &["x^2"]), &lim()).unwrap());
        assert!(!radical_membership(&y, &ideal(&r, &["x"]), &lim()).unwrap());

        let j = Ring::grevlex(["x.0", "x.1", "x.2", "y.0", "y.1", "y.2"]).unwrap();
        let jets2 = ideal(
            &j,
            &["x.0*y.0", "x.0*y.1 + x.1*y.0", "x.0*y.2 + x.1*y.1 + x.2*y.0"],
        );
        let g = Polynomial::parse(&j, "x.1*y.1").unwrap();
        assert!(radical_membership(&g, &jets2, &lim()).unwrap());
        let g = Polynomial::parse(&j, "x.1*y.2").unwrap();
        assert!(!radical_membership(&g, &jets2, &lim()).unwrap());
    }

    #[test]
    fn resource_limit_raised() {
        let r = Ring::grevlex(["x", "y", "z"]).unwrap();
        let i = ideal(&r, &["x^2 - y", "x*y - z", "y*z - x"]);
        let tight = Limits {
            max_basis_size: 3,
            ..Limits::default()
        };
        assert!(matches!(
            buchberger(&i, MonomialOrder::GRevLex, &tight),
            Err(Error::ResourceLimit(_))
        ));
        let tight = Limits {
            max_pair_degree: 2,
            ..Limits::default()
        };
        assert!(matches!(
            buchberger(&i, MonomialOrder::GRevLex, &tight),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn bases_are_reduced_and_closed() {
        let r = Ring::grevlex(["x", "y", "z"]).unwrap();
        for gens in [
            vec!["x^2 - y", "x*y - z", "y*z - x"],
            vec!["x^3 - y*z", "y^3 - x*z", "z^3 - x*y"],
            vec!["x*y + 2*z", "x^2 - 1/3*y"],
        ] {
            let i = ideal(&r, &gens);
            for order in [MonomialOrder::GRevLex, MonomialOrder::Lex, MonomialOrder::elimination(1)] {
                let gb = buchberger(&i, order, &lim()).unwrap();
                assert!(gb.verify(), "{gens:?} {order:?}");
                for g in i.generators() {
                    assert!(gb.normal_form(g).is_zero());
                }
            }
        }
    }
}
