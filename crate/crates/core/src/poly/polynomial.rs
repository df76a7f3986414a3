use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::ring::Ring;
use crate::error::{Error, Result};

pub type Coefficient = BigRational;

/// A polynomial in canonical form: terms strictly decreasing under the
/// ring's order, no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, Coefficient)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Exact `a op b`; both operands must share a ring.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    a.same_ring(b)?;
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
    })
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Coefficient) -> Self {
        Polynomial::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Polynomial::constant(ring, Coefficient::one())
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Polynomial::term(ring, Monomial::var(ring.nvars(), i), Coefficient::one())
    }

    pub fn term(ring: &Arc<Ring>, m: Monomial, c: Coefficient) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_monomial(ring: &Arc<Ring>, m: Monomial) -> Self {
        Polynomial::term(ring, m, Coefficient::one())
    }

    /// Collects arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, Coefficient)>) -> Self {
        let order = ring.order();
        let mut v: Vec<(Monomial, Coefficient)> = terms.into_iter().collect();
        v.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coefficient)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Wraps terms already in canonical order.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<(Monomial, Coefficient)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().compare(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coefficient)] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<(Monomial, Coefficient)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Coefficient> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// True when every term is a bare monomial times a constant, i.e. the
    /// polynomial is a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// Panics if the rings differ; see [`poly_arith`] for the checked form.
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, m: &Monomial, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(n, d)| (n.mul(m), d * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.add(&big.mul_term(m, c));
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// `self / m`, provided `m` divides every term.
    pub fn divide_exact(&self, m: &Monomial) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(n, c)| n.div(m).map(|q| (q, c.clone())).ok_or(Error::NotDivisible))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Exact quotient `self / divisor`; fails unless the division leaves no
    /// remainder.
    pub fn divide_exact_poly(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.same_ring(divisor)?;
        let (lm, lc) = match divisor.terms.first() {
            Some((m, c)) => (m, c),
            None => return Err(Error::ZeroDivisor),
        };
        if divisor.terms.len() == 1 {
            let q = self.divide_exact(lm)?;
            return Ok(q.scale(&lc.recip()));
        }
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.terms.first() {
            let q = m.div(lm).ok_or(Error::NotDivisible)?;
            let qc = c / lc;
            rest = rest.sub(&divisor.mul_term(&q, &qc));
            quotient.push((q, qc));
        }
        Ok(Polynomial::from_terms(&self.ring, quotient))
    }

    /// Re-sorts the terms for another ring with the same variables.
    pub fn with_ring(&self, ring: &Arc<Ring>) -> Polynomial {
        debug_assert_eq!(ring.nvars(), self.ring.nvars());
        if Arc::ptr_eq(ring, &self.ring) {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        let order = ring.order();
        if order != self.ring.order() {
            terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Sends variable `i` to variable `map(i)` of `ring`.
    pub fn remap(&self, ring: &Arc<Ring>, map: impl Fn(usize) -> usize) -> Polynomial {
        let n = ring.nvars();
        Polynomial::from_terms(
            ring,
            self.terms.iter().map(|(m, c)| (m.remap(n, &map), c.clone())),
        )
    }

    /// Content of the monomial parts: the gcd of all term monomials.
    pub fn monomial_content(&self) -> Option<Monomial> {
        let mut it = self.terms.iter();
        let first = it.next()?.0.clone();
        Some(it.fold(first, |g, (m, _)| g.gcd(m)))
    }

    /// Parses the text form `2*x^2*y - 3*z` against this ring's variables.
    pub fn parse(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
        super::parse::parse_polynomial(ring, text)
    }
}

fn write_coefficient(f: &mut fmt::Formatter<'_>, c: &Coefficient) -> fmt::Result {
    if c.denom() == &BigInt::one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write_coefficient(f, &abs)?;
            } else {
                if !abs.is_one() {
                    write_coefficient(f, &abs)?;
                    write!(f, "*")?;
                }
                write!(f, "{}", m.display_with(names))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
