//! Graded Betti numbers of `S/I` for squarefree monomial ideals `I`, via
//! Hochster's formula over the rationals.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::cover;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::monomial_ideal::MonomialIdeal;

/// A simplicial complex given by its facets, each a sorted vertex list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Drops facets contained in other facets. An empty facet list is the
    /// void complex; `[[]]` is the complex `{∅}`.
    pub fn new(vertices: usize, facets: impl IntoIterator<Item = Vec<usize>>) -> SimplicialComplex {
        let mut f: Vec<Vec<usize>> = facets
            .into_iter()
            .map(|mut v| {
                v.sort_unstable();
                v.dedup();
                v
            })
            .collect();
        f.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        f.dedup();
        let mut kept: Vec<Vec<usize>> = Vec::new();
        for facet in f {
            if !kept.iter().any(|k| facet.iter().all(|v| k.binary_search(v).is_ok())) {
                kept.push(facet);
            }
        }
        kept.sort();
        SimplicialComplex {
            vertices,
            facets: kept,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// All faces as bitmasks, grouped by size (index `k` holds faces with
    /// `k` vertices, i.e. dimension `k - 1`).
    fn faces_by_size(&self) -> Vec<Vec<u64>> {
        let mut seen = std::collections::HashSet::new();
        let mut by_size: Vec<Vec<u64>> = Vec::new();
        for facet in &self.facets {
            let k = facet.len();
            for sub in 0u64..(1u64 << k) {
                let mut mask = 0u64;
                for (bit, &v) in facet.iter().enumerate() {
                    if sub >> bit & 1 == 1 {
                        mask |= 1 << v;
                    }
                }
                if seen.insert(mask) {
                    let size = mask.count_ones() as usize;
                    if by_size.len() <= size {
                        by_size.resize(size + 1, Vec::new());
                    }
                    by_size[size].push(mask);
                }
            }
        }
        for level in &mut by_size {
            level.sort_unstable();
        }
        by_size
    }
}

/// Faces are the independent sets of `g`; facets are the maximal ones.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    let edges: Vec<Vec<usize>> = g.edges().map(|(a, b)| vec![a, b]).collect();
    let unbounded = Limits {
        max_cover_vertices: 64,
        ..Limits::default()
    };
    let facets = cover::maximal_independent_sets(g.vertex_count(), &edges, &unbounded)
        .expect("independence complexes are limited to 64 vertices");
    SimplicialComplex::new(g.vertex_count(), facets)
}

/// Ranks of `H̃_{-1}, H̃_0, ..., H̃_{dim}` over the rationals. The void
/// complex yields an empty list.
pub fn reduced_homology_ranks(c: &SimplicialComplex, limits: &Limits) -> Result<Vec<usize>> {
    Limits::check("homology vertices", c.vertices, limits.max_homology_vertices.min(63))?;
    Ok(homology_from_faces(&c.faces_by_size()))
}

/// `faces[k]` are the faces with `k` vertices, as sorted bitmasks.
fn homology_from_faces(faces: &[Vec<u64>]) -> Vec<usize> {
    if faces.is_empty() || faces[0].is_empty() {
        return Vec::new();
    }
    // rank[k] = rank of the boundary map from size-k faces to size-(k-1) faces
    let mut rank = vec![0usize; faces.len() + 1];
    for k in 1..faces.len() {
        rank[k] = boundary_rank(&faces[k - 1], &faces[k]);
    }
    (0..faces.len())
        .map(|k| faces[k].len() - rank[k] - rank[k + 1])
        .collect()
}

fn boundary_rank(lower: &[u64], upper: &[u64]) -> usize {
    if lower.is_empty() || upper.is_empty() {
        return 0;
    }
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let rows = upper.len();
    let cols = lower.len();
    // rows are the boundaries of the larger faces
    let mut m = vec![0i128; rows * cols];
    for (r, &face) in upper.iter().enumerate() {
        let mut sign = 1i128;
        let mut rest = face;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            m[r * cols + index[&(face & !(1u64 << v))]] = sign;
            sign = -sign;
        }
    }
    match bareiss_rank_i128(m.clone(), rows, cols) {
        Some(r) => r,
        None => bareiss_rank_big(m.into_iter().map(BigInt::from).collect(), rows, cols),
    }
}

/// Fraction-free elimination with overflow detection.
fn bareiss_rank_i128(mut m: Vec<i128>, rows: usize, cols: usize) -> Option<usize> {
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows)
            .filter(|&r| m[r * cols + c] != 0)
            .min_by_key(|&r| m[r * cols + c].unsigned_abs())
        else {
            continue;
        };
        for k in 0..cols {
            m.swap(pivot * cols + k, rank * cols + k);
        }
        let p = m[rank * cols + c];
        for r in rank + 1..rows {
            let f = m[r * cols + c];
            for k in c + 1..cols {
                let v = p
                    .checked_mul(m[r * cols + k])?
                    .checked_sub(f.checked_mul(m[rank * cols + k])?)?;
                m[r * cols + k] = v / prev;
            }
            m[r * cols + c] = 0;
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_rank_big(mut m: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows)
            .filter(|&r| !m[r * cols + c].is_zero())
            .min_by(|&a, &b| m[a * cols + c].abs().cmp(&m[b * cols + c].abs()))
        else {
            continue;
        };
        for k in 0..cols {
            m.swap(pivot * cols + k, rank * cols + k);
        }
        let p = m[rank * cols + c].clone();
        for r in rank + 1..rows {
            let f = m[r * cols + c].clone();
            for k in c + 1..cols {
                let v = &p * &m[r * cols + k] - &f * &m[rank * cols + k];
                m[r * cols + k] = v / &prev;
            }
            m[r * cols + c] = BigInt::zero();
        }
        prev = p;
        rank += 1;
    }
    rank
}

/// Graded Betti numbers `β_{i,j}` of a quotient ring.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> BettiTable {
        BettiTable {
            entries: entries.into_iter().filter(|&(_, v)| v != 0).collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries keyed by `(i, j)`.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Largest `j - i` over nonzero entries.
    pub fn regularity(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }

    /// Column sums `Σ_j β_{i,j}` for `i = 0..=pd`.
    pub fn totals(&self) -> Vec<u64> {
        let Some(pd) = self.projective_dimension() else {
            return Vec::new();
        };
        let mut t = vec![0; pd + 1];
        for (&(i, _), &v) in &self.entries {
            t[i] += v;
        }
        t
    }

    /// Coefficients of `Σ_{i,j} (-1)^i β_{i,j} t^j`, indexed by `j`.
    pub fn k_polynomial(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut k = vec![0i64; top + 1];
        for (&(i, j), &v) in &self.entries {
            let v = v as i64;
            k[j] += if i % 2 == 0 { v } else { -v };
        }
        k
    }

    pub fn to_structured(&self) -> String {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: usize,
            value: u64,
        }
        #[derive(Serialize)]
        struct Doc {
            entries: Vec<Entry>,
            totals: Vec<u64>,
            projective_dimension: Option<usize>,
            regularity: Option<usize>,
        }
        let doc = Doc {
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &value)| Entry { i, j, value })
                .collect(),
            totals: self.totals(),
            projective_dimension: self.projective_dimension(),
            regularity: self.regularity(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }
}

/// Macaulay2-style layout: a header of homological degrees, a `total:`
/// row, then one row per `j - i` with `.` for zeros.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (Some(pd), Some(reg)) = (self.projective_dimension(), self.regularity()) else {
            return writeln!(f, "total:");
        };
        let low = self.entries.keys().map(|&(i, j)| j - i).min().unwrap_or(0);
        let mut rows: Vec<(String, Vec<String>)> = Vec::new();
        rows.push((String::new(), (0..=pd).map(|i| i.to_string()).collect()));
        rows.push((
            "total:".into(),
            self.totals().iter().map(u64::to_string).collect(),
        ));
        for r in low..=reg {
            rows.push((
                format!("{r}:"),
                (0..=pd)
                    .map(|i| match self.get(i, i + r) {
                        0 => ".".to_string(),
                        v => v.to_string(),
                    })
                    .collect(),
            ));
        }
        let label_w = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..=pd)
            .map(|c| rows.iter().map(|(_, cells)| cells[c].len()).max().unwrap_or(1))
            .collect();
        for (label, cells) in rows {
            let mut line = format!("{label:>label_w$}");
            for (cell, w) in cells.iter().zip(&widths) {
                line.push_str(&format!(" {cell:>w$}"));
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

/// Stanley–Reisner data: minimal nonfaces grouped by the vertices they
/// contain.
struct NonFaces {
    by_vertex: Vec<Vec<u64>>,
    has_empty: bool,
}

impl NonFaces {
    fn new(n: usize, ideal: &MonomialIdeal) -> NonFaces {
        let mut by_vertex = vec![Vec::new(); n];
        let mut has_empty = false;
        for g in ideal.generators() {
            let mask = g.support().fold(0u64, |m, v| m | 1 << v);
            if mask == 0 {
                has_empty = true;
            }
            for v in g.support() {
                by_vertex[v].push(mask);
            }
        }
        NonFaces {
            by_vertex,
            has_empty,
        }
    }

    /// A vertex of `sigma` lying in no nonface inside `sigma` is a cone
    /// point of the restriction, which then has no reduced homology.
    fn has_cone_point(&self, sigma: u64) -> bool {
        let mut rest = sigma;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if !self.by_vertex[v].iter().any(|&s| s & !sigma == 0) {
                return true;
            }
        }
        false
    }

    /// Faces of the restriction to `sigma`, grouped by size.
    fn faces_within(&self, sigma: u64) -> Vec<Vec<u64>> {
        let verts: Vec<usize> = (0..64).filter(|&v| sigma >> v & 1 == 1).collect();
        let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); verts.len() + 1];
        self.extend(0, 0, &verts, &mut by_size);
        while by_size.last().is_some_and(Vec::is_empty) {
            by_size.pop();
        }
        for level in &mut by_size {
            level.sort_unstable();
        }
        by_size
    }

    fn extend(&self, face: u64, from: usize, verts: &[usize], out: &mut Vec<Vec<u64>>) {
        out[face.count_ones() as usize].push(face);
        for (k, &v) in verts.iter().enumerate().skip(from) {
            let next = face | 1 << v;
            if self.by_vertex[v].iter().all(|&s| s & !next != 0) {
                self.extend(next, k + 1, verts, out);
            }
        }
    }
}

/// `β_{i,j}(S/I) = Σ_{|σ|=j} dim H̃_{j-i-1}(Δ|σ)` with `Δ` the
/// Stanley–Reisner complex of `I`.
pub fn betti_table(ideal: &MonomialIdeal, limits: &Limits) -> Result<BettiTable> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.ring().nvars();
    Limits::check("Betti variables", n, limits.max_betti_variables.min(30))?;
    let nf = NonFaces::new(n, ideal);
    if nf.has_empty {
        return Ok(BettiTable::default());
    }
    let entries = (0u64..1u64 << n)
        .into_par_iter()
        .filter(|&sigma| !nf.has_cone_point(sigma))
        .fold(BTreeMap::new, |mut acc: BTreeMap<(usize, usize), u64>, sigma| {
            let j = sigma.count_ones() as usize;
            for (k, &h) in homology_from_faces(&nf.faces_within(sigma)).iter().enumerate() {
                // h is the rank of H̃ in dimension k - 1 = j - i - 1
                if h > 0 {
                    *acc.entry((j - k, j)).or_default() += h as u64;
                }
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(BettiTable::from_entries(entries))
}

/// Whether every `β_{i,j}` with `i ≥ 1` lies on `j = i + d - 1`, where `d`
/// is the common generator degree.
pub fn has_linear_resolution(ideal: &MonomialIdeal, limits: &Limits) -> Result<bool> {
    let degrees = ideal.generator_degrees();
    if degrees.len() > 1 {
        return Err(Error::NotEquigenerated);
    }
    let Some(&d) = degrees.first() else {
        return Ok(true);
    };
    let table = betti_table(ideal, limits)?;
    Ok(table
        .entries()
        .keys()
        .all(|&(i, j)| i == 0 || j + 1 == i + d as usize))
}
