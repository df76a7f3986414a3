//! Maximal independent sets and minimal transversals of (hyper)graphs.
//!
//! Both come out of one Bron–Kerbosch style enumerator. When every
//! hyperedge has at most two vertices the independence test is pairwise and
//! the enumerator pivots; larger hyperedges fall back to the unpivoted
//! recursion with the independence test recomputed per step.

use crate::error::Result;
use crate::limits::Limits;

type Set = u64;

struct Hypergraph {
    n: usize,
    /// hyperedges as bitmasks; size-one edges are folded into `forbidden`
    edges: Vec<Set>,
    forbidden: Set,
    /// pairwise conflicts, only meaningful when `pairwise` is set
    conflict: Vec<Set>,
    pairwise: bool,
}

impl Hypergraph {
    fn new(n: usize, hyperedges: &[Vec<usize>]) -> Option<Self> {
        let mut edges = Vec::new();
        let mut forbidden = 0;
        let mut conflict = vec![0; n];
        let mut pairwise = true;
        for e in hyperedges {
            let mask = e.iter().fold(0u64, |m, &v| m | (1 << v));
            match mask.count_ones() {
                // the empty edge can never be avoided: no independent sets
                0 => return None,
                1 => forbidden |= mask,
                2 => {
                    let (a, b) = (mask.trailing_zeros() as usize, 63 - mask.leading_zeros() as usize);
                    conflict[a] |= 1 << b;
                    conflict[b] |= 1 << a;
                    edges.push(mask);
                }
                _ => {
                    pairwise = false;
                    edges.push(mask);
                }
            }
        }
        Some(Hypergraph {
            n,
            edges,
            forbidden,
            conflict,
            pairwise,
        })
    }

    /// Vertices of `cands` that may join the independent set `r`.
    fn compatible(&self, r: Set, cands: Set) -> Set {
        if self.pairwise {
            let blocked = iter(r).fold(0, |b, v| b | self.conflict[v]);
            return cands & !blocked;
        }
        let mut out = 0;
        for u in iter(cands) {
            let with = r | (1 << u);
            if self.edges.iter().all(|&e| e & !with != 0) {
                out |= 1 << u;
            }
        }
        out
    }

    fn enumerate(&self, r: Set, mut p: Set, mut x: Set, out: &mut Vec<Set>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        let branch = if self.pairwise {
            // pivot on the vertex of P ∪ X compatible with most of P
            let pivot = iter(p | x)
                .max_by_key(|&u| ((p & !self.conflict[u] & !(1 << u)).count_ones(), std::cmp::Reverse(u)))
                .unwrap();
            p & (self.conflict[pivot] | (1 << pivot))
        } else {
            p
        };
        for v in iter(branch) {
            let r2 = r | (1 << v);
            let p2 = self.compatible(r2, p & !(1 << v));
            let x2 = self.compatible(r2, x & !(1 << v));
            self.enumerate(r2, p2, x2, out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
}

fn iter(s: Set) -> impl Iterator<Item = usize> {
    let mut s = s;
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(v)
        }
    })
}

fn to_vec(s: Set) -> Vec<usize> {
    iter(s).collect()
}

fn full(n: usize) -> Set {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_size(n: usize, limits: &Limits) -> Result<()> {
    Limits::check("vertex set", n, limits.max_cover_vertices.min(64))
}

/// All maximal independent sets of the hypergraph on `0..n`, each sorted,
/// listed by size and then lexicographically.
pub fn maximal_independent_sets(n: usize, hyperedges: &[Vec<usize>], limits: &Limits) -> Result<Vec<Vec<usize>>> {
    check_size(n, limits)?;
    let Some(h) = Hypergraph::new(n, hyperedges) else {
        return Ok(Vec::new());
    };
    let mut found = Vec::new();
    let start = h.compatible(0, full(h.n) & !h.forbidden);
    h.enumerate(0, start, 0, &mut found);
    Ok(sorted(found))
}

/// All minimal transversals (minimal vertex covers) of the hypergraph on
/// `0..n`: the complements of the maximal independent sets.
pub fn minimal_transversals(n: usize, hyperedges: &[Vec<usize>], limits: &Limits) -> Result<Vec<Vec<usize>>> {
    check_size(n, limits)?;
    let Some(h) = Hypergraph::new(n, hyperedges) else {
        return Ok(Vec::new());
    };
    let mut found = Vec::new();
    let start = h.compatible(0, full(h.n) & !h.forbidden);
    h.enumerate(0, start, 0, &mut found);
    Ok(sorted(found.into_iter().map(|s| full(n) & !s).collect()))
}

fn sorted(sets: Vec<Set>) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = sets.into_iter().map(to_vec).collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    v
}
