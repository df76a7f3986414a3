//! Properties tying the Gröbner routines, the closed-form monomial algebra
//! and the Betti tables to each other.

use std::sync::Arc;

use jetgraph::betti;
use jetgraph::groebner::{self, PolyIdeal};
use jetgraph::monomial_ideal::minimalize;
use jetgraph::verify::dual_oracle;
use jetgraph::{Limits, Monomial, MonomialIdeal, Polynomial, Ring};
use proptest::prelude::*;

const NVARS: usize = 4;

fn ring() -> Arc<Ring> {
    Ring::grevlex(["a", "b", "c", "d"]).unwrap()
}

fn monomial(max_exp: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_exp, NVARS).prop_map(Monomial::from_exponents)
}

fn monomials(max_exp: u32, len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<Monomial>> {
    proptest::collection::vec(monomial(max_exp), len)
}

fn mono_ideal(max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    monomials(max_exp, 1..5).prop_map(|g| MonomialIdeal::new(&ring(), g))
}

/// Integer-coefficient polynomials, built term by term from text.
fn polynomial() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((monomial(2), -3i64..4), 1..4).prop_map(|terms| {
        let r = ring();
        terms.iter().fold(Polynomial::zero(&r), |acc, (m, c)| {
            let term = format!("{c}*{}", Polynomial::from_monomial(&r, m.clone()));
            acc.add(&Polynomial::parse(&r, &term).unwrap())
        })
    })
}

fn as_poly(m: &Monomial) -> Polynomial {
    Polynomial::from_monomial(&ring(), m.clone())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn bases_are_groebner_and_reduced(gens in proptest::collection::vec(polynomial(), 1..4)) {
        let limits = Limits::default();
        let ideal = PolyIdeal::new(&ring(), gens.clone()).unwrap();
        let gb = ideal.groebner_basis(&limits).unwrap();
        prop_assert!(gb.verify());
        for g in &gens {
            prop_assert!(gb.normal_form(g).is_zero());
        }
    }

    #[test]
    fn normal_form_membership_matches_monomial_test(i in mono_ideal(2), f in polynomial()) {
        let limits = Limits::default();
        let gb = i.to_poly_ideal().groebner_basis(&limits).unwrap();
        prop_assert_eq!(gb.normal_form(&f).is_zero(), i.mono_member(&f).unwrap());
    }

    #[test]
    fn saturation_is_stable(i in mono_ideal(2), f in polynomial()) {
        prop_assume!(!f.is_zero());
        let limits = Limits::default();
        let sat = groebner::saturate(&i.to_poly_ideal(), &f, &limits).unwrap();
        let again = groebner::saturate(&sat, &f, &limits).unwrap();
        prop_assert!(groebner::ideal_equal(&sat, &again, &limits).unwrap());
    }

    #[test]
    fn colon_composes(i in mono_ideal(3), a in monomial(2), b in monomial(2)) {
        prop_assert_eq!(i.colon(&a).colon(&b), i.colon(&a.mul(&b)));
        let limits = Limits::default();
        let p = i.to_poly_ideal();
        let step = groebner::colon(&groebner::colon(&p, &as_poly(&a), &limits).unwrap(), &as_poly(&b), &limits).unwrap();
        let once = groebner::colon(&p, &as_poly(&a.mul(&b)), &limits).unwrap();
        prop_assert!(groebner::ideal_equal(&step, &once, &limits).unwrap());
    }

    #[test]
    fn monomial_routes_match_groebner(a in mono_ideal(2), b in mono_ideal(2), m in monomial(2)) {
        prop_assert_eq!(dual_oracle(&a, &b, &m, &Limits::default()).unwrap(), None);
    }

    #[test]
    fn minimalize_is_idempotent(g in monomials(3, 0..8)) {
        let once = minimalize(&ring(), g);
        let twice = minimalize(&ring(), once.generators().to_vec());
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn minimal_primes_meet_to_radical(i in mono_ideal(1)) {
        let primes = i.minimal_primes(&Limits::default()).unwrap();
        let meet = MonomialIdeal::intersect_all(&primes).unwrap().unwrap_or_else(|| MonomialIdeal::unit(&ring()));
        prop_assert_eq!(meet, i.radical());
    }

    #[test]
    fn first_betti_numbers_count_generators(g in monomials(1, 1..7)) {
        let i = MonomialIdeal::new(&ring(), g);
        let table = betti::betti_table(&i, &Limits::default()).unwrap();
        for d in 1..=NVARS {
            let count = i.generators().iter().filter(|m| m.degree() as usize == d).count() as u64;
            prop_assert_eq!(table.get(1, d), count, "degree {}", d);
        }
    }
}

#[test]
fn minimal_primes_of_edge_ideals_meet_to_radical() {
    let limits = Limits::default();
    for n in 1..=5 {
        for g in jetgraph::corpus::all_connected(n) {
            let i = jetgraph::graph::edge_ideal(&g);
            let primes = i.minimal_primes(&limits).unwrap();
            let meet = MonomialIdeal::intersect_all(&primes).unwrap().unwrap_or_else(|| MonomialIdeal::unit(i.ring()));
            assert_eq!(meet, i.radical(), "{}", g.to_edge_list());
        }
    }
}
