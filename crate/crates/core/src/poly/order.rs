use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    GRevLex,
    Lex,
}

/// A multiplicative total order on monomials.
///
/// `Block` compares the first `prefix` variables with `outer` and breaks
/// ties on the remaining variables with `inner`, so any monomial involving
/// the prefix exceeds every monomial free of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[derive(Default)]
pub enum MonomialOrder {
    #[default]
    GRevLex,
    Lex,
    Block {
        prefix: usize,
        outer: OrderKind,
        inner: OrderKind,
    },
}


fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

impl OrderKind {
    fn compare_slices(self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            OrderKind::GRevLex => grevlex(a, b),
            OrderKind::Lex => lex(a, b),
        }
    }
}

impl MonomialOrder {
    /// Lex on `prefix` eliminated variables over grevlex on the rest.
    pub fn elimination(prefix: usize) -> Self {
        MonomialOrder::Block {
            prefix,
            outer: OrderKind::Lex,
            inner: OrderKind::GRevLex,
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::GRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::Lex => lex(a.exponents(), b.exponents()),
            MonomialOrder::Block {
                prefix,
                outer,
                inner,
            } => {
                let (ah, at) = a.exponents().split_at(prefix);
                let (bh, bt) = b.exponents().split_at(prefix);
                outer
                    .compare_slices(ah, bh)
                    .then_with(|| inner.compare_slices(at, bt))
            }
        }
    }

    /// Order used for the variables left after dropping an elimination block.
    pub fn after_elimination(&self) -> MonomialOrder {
        match *self {
            MonomialOrder::Block { inner, .. } => match inner {
                OrderKind::GRevLex => MonomialOrder::GRevLex,
                OrderKind::Lex => MonomialOrder::Lex,
            },
            other => other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_equal_degree() {
        // x^2 y vs x y z in x > y > z
        assert_eq!(
            MonomialOrder::GRevLex.compare(&m(&[2, 1, 0]), &m(&[1, 1, 1])),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::GRevLex.compare(&m(&[0, 2, 0]), &m(&[1, 0, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn lex_ignores_degree() {
        assert_eq!(
            MonomialOrder::Lex.compare(&m(&[0, 5]), &m(&[1, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn block_prefix_dominates() {
        let o = MonomialOrder::elimination(1);
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 100])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[0, 2]), &m(&[0, 1])), Ordering::Greater);
    }

    fn orders() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::GRevLex),
            Just(MonomialOrder::Lex),
            (0usize..=4).prop_map(MonomialOrder::elimination),
            (0usize..=4).prop_map(|p| MonomialOrder::Block {
                prefix: p,
                outer: OrderKind::GRevLex,
                inner: OrderKind::Lex
            }),
        ]
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, 4).prop_map(Monomial::from_exponents)
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative(o in orders(), a in mono(), b in mono(), c in mono()) {
            let ab = o.compare(&a, &b);
            prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c)), ab);
        }

        #[test]
        fn orders_are_total_and_antisymmetric(o in orders(), a in mono(), b in mono()) {
            let ab = o.compare(&a, &b);
            prop_assert_eq!(ab.reverse(), o.compare(&b, &a));
            prop_assert_eq!(ab == Ordering::Equal, a == b);
        }

        #[test]
        fn one_is_smallest(o in orders(), a in mono()) {
            prop_assert_ne!(o.compare(&Monomial::one(4), &a), Ordering::Greater);
        }
    }
}
