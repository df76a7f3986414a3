//! Simple graphs: complements, chordality, minimal vertex covers and edge
//! ideals, plus the three accepted input formats.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cover;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{validate_name, Monomial, Ring};

/// A simple undirected graph on named vertices. Vertex order is the order
/// of construction and drives every downstream output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    adj: Vec<BTreeSet<usize>>,
    edges: BTreeSet<(usize, usize)>,
}

/// A vertex cover of some graph. `minimal` records whether dropping any
/// single vertex breaks the cover property.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexCover {
    vertices: Vec<usize>,
    minimal: bool,
}

/// A closed walk through distinct vertices; the closing edge is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub path: Vec<usize>,
    pub chordless: bool,
}

impl Graph {
    /// Builds a graph from vertex names and index pairs. Loops and
    /// out-of-range indices are errors; repeated edges collapse.
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            validate_name(n, false)?;
            if seen.insert(n.as_str(), i).is_some() {
                return Err(Error::InvalidName(format!("{n} (duplicate vertex)")));
            }
        }
        Graph::build(names, edges)
    }

    /// Like [`Graph::new`] but accepts jets-style names such as `x.1`.
    pub(crate) fn with_jet_names(names: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        for n in &names {
            validate_name(n, true)?;
        }
        Graph::build(names, edges)
    }

    fn build(names: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let n = names.len();
        let mut g = Graph {
            names,
            adj: vec![BTreeSet::new(); n],
            edges: BTreeSet::new(),
        };
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Parse(format!("edge ({a}, {b}) references a missing vertex")));
            }
            if a == b {
                return Err(Error::Parse(format!("loop at vertex `{}`", g.names[a])));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        self.edges.insert((a.min(b), a.max(b)));
    }

    /// Builds from names, adding vertices in order of first appearance.
    pub fn from_named_edges<'a>(
        vertices: impl IntoIterator<Item = &'a str>,
        edges: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Graph> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut intern = |s: &str, names: &mut Vec<String>| -> usize {
            *index.entry(s.to_string()).or_insert_with(|| {
                names.push(s.to_string());
                names.len() - 1
            })
        };
        for v in vertices {
            intern(v, &mut names);
        }
        let mut pairs = Vec::new();
        for (a, b) in edges {
            let ia = intern(a, &mut names);
            let ib = intern(b, &mut names);
            pairs.push((ia, ib));
        }
        Graph::new(names, pairs)
    }

    pub fn path(names: &[&str]) -> Graph {
        Graph::new(names.iter().copied(), (1..names.len()).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(names: &[&str]) -> Graph {
        let n = names.len();
        Graph::new(names.iter().copied(), (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// Star with the first name as its center.
    pub fn star(names: &[&str]) -> Graph {
        Graph::new(names.iter().copied(), (1..names.len()).map(|i| (0, i))).expect("valid star")
    }

    pub fn complete(names: &[&str]) -> Graph {
        let n = names.len();
        Graph::new(
            names.iter().copied(),
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))),
        )
        .expect("valid complete graph")
    }

    pub fn complete_bipartite(left: &[&str], right: &[&str]) -> Graph {
        let l = left.len();
        Graph::new(
            left.iter().chain(right.iter()).copied(),
            (0..l).flat_map(|a| (0..right.len()).map(move |b| (a, l + b))),
        )
        .expect("valid complete bipartite graph")
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Whether every edge has an endpoint in `set`.
    pub fn is_cover(&self, set: &[usize]) -> bool {
        let mut mark = vec![false; self.vertex_count()];
        for &v in set {
            mark[v] = true;
        }
        self.edges.iter().all(|&(a, b)| mark[a] || mark[b])
    }

    /// Polynomial ring whose variables are the vertices, in order.
    pub fn ring(&self) -> Arc<Ring> {
        Ring::grevlex(self.names.iter().cloned()).expect("vertex names are valid variables")
    }
}

impl VertexCover {
    /// Validates the cover property and computes the minimality flag.
    pub fn new(g: &Graph, vertices: impl IntoIterator<Item = usize>) -> Result<VertexCover> {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.iter().any(|&x| x >= g.vertex_count()) {
            return Err(Error::Parse("cover references a missing vertex".into()));
        }
        if !g.is_cover(&v) {
            return Err(Error::Parse("set does not cover every edge".into()));
        }
        let minimal = (0..v.len()).all(|i| {
            let mut smaller = v.clone();
            smaller.remove(i);
            !g.is_cover(&smaller)
        });
        Ok(VertexCover { vertices: v, minimal })
    }

    pub(crate) fn trusted(vertices: Vec<usize>, minimal: bool) -> VertexCover {
        VertexCover { vertices, minimal }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Vertices of `g` outside the cover.
    pub fn complement_in(&self, g: &Graph) -> Vec<usize> {
        (0..g.vertex_count()).filter(|v| !self.contains(*v)).collect()
    }

    pub fn names<'a>(&self, g: &'a Graph) -> Vec<&'a str> {
        self.vertices.iter().map(|&v| g.name(v)).collect()
    }
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut c = Graph {
        names: g.names.clone(),
        adj: vec![BTreeSet::new(); n],
        edges: BTreeSet::new(),
    };
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                c.add_edge(a, b);
            }
        }
    }
    c
}

/// Every minimal vertex cover, as complements of the maximal independent
/// sets; sorted by size and then lexicographically by vertex index.
pub fn minimal_vertex_covers(g: &Graph, limits: &Limits) -> Result<Vec<VertexCover>> {
    let edges: Vec<Vec<usize>> = g.edges().map(|(a, b)| vec![a, b]).collect();
    Ok(cover::minimal_transversals(g.vertex_count(), &edges, limits)?
        .into_iter()
        .map(|c| VertexCover::trusted(c, true))
        .collect())
}

/// Lexicographic breadth-first search; returns the visit order.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    // each label is the list of visit stamps (descending) of visited neighbors
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then_with(|| b.cmp(&a)))
            .unwrap();
        visited[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !visited[u] {
                labels[u].push(n - step);
            }
        }
    }
    order
}

/// Shortest path from `a` to `b` that avoids `blocked`.
fn shortest_path_avoiding(g: &Graph, a: usize, b: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([a]);
    prev[a] = a;
    while let Some(v) = queue.pop_front() {
        if v == b {
            let mut path = vec![b];
            let mut cur = b;
            while cur != a {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &u in g.neighbors(v) {
            if prev[u] == usize::MAX && !blocked[u] {
                prev[u] = v;
                queue.push_back(u);
            }
        }
    }
    None
}

/// A chordless cycle through `v` entering via `a` and leaving via `b`,
/// where `a`, `b` are non-adjacent neighbors of `v`.
fn cycle_through(g: &Graph, v: usize, a: usize, b: usize) -> Option<Cycle> {
    let mut blocked = vec![false; g.vertex_count()];
    blocked[v] = true;
    for &u in g.neighbors(v) {
        blocked[u] = u != a && u != b;
    }
    let path = shortest_path_avoiding(g, a, b, &blocked)?;
    let mut cyc = vec![v];
    cyc.extend(path);
    Some(Cycle {
        path: cyc,
        chordless: true,
    })
}

/// Chordality via LexBFS and a perfect elimination ordering check. When the
/// check fails the second component is a chordless cycle of length ≥ 4.
pub fn is_chordal(g: &Graph) -> (bool, Option<Cycle>) {
    let order = lex_bfs(g);
    let n = g.vertex_count();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        // neighbors visited earlier must form a clique
        let earlier: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| pos[u] < pos[v]).collect();
        let Some(&parent) = earlier.iter().max_by_key(|&&u| pos[u]) else {
            continue;
        };
        if earlier.iter().all(|&u| u == parent || g.has_edge(u, parent)) {
            continue;
        }
        for (i, &a) in earlier.iter().enumerate() {
            for &b in &earlier[i + 1..] {
                if !g.has_edge(a, b) {
                    if let Some(c) = cycle_through(g, v, a, b) {
                        return (false, Some(c));
                    }
                }
            }
        }
        return (false, find_chordless_cycle(g));
    }
    (true, None)
}

/// Exhaustive witness search: some vertex with two non-adjacent neighbors
/// joined by a path outside its closed neighborhood.
fn find_chordless_cycle(g: &Graph) -> Option<Cycle> {
    for v in 0..g.vertex_count() {
        let nb: Vec<usize> = g.neighbors(v).iter().copied().collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !g.has_edge(a, b) {
                    if let Some(c) = cycle_through(g, v, a, b) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

pub fn is_cochordal(g: &Graph) -> bool {
    is_chordal(&complement(g)).0
}

impl Cycle {
    /// Whether consecutive entries (and last-first) are edges of `g`, the
    /// entries are distinct, and the length is at least three.
    pub fn is_cycle_of(&self, g: &Graph) -> bool {
        let k = self.path.len();
        let distinct: BTreeSet<usize> = self.path.iter().copied().collect();
        k >= 3 && distinct.len() == k && (0..k).all(|i| g.has_edge(self.path[i], self.path[(i + 1) % k]))
    }

    /// Whether no edge joins two positions that are not cyclically adjacent.
    pub fn has_no_chord_in(&self, g: &Graph) -> bool {
        let k = self.path.len();
        (0..k).all(|i| {
            (i + 2..k).all(|j| (i == 0 && j == k - 1) || !g.has_edge(self.path[i], self.path[j]))
        })
    }

    pub fn names<'a>(&self, g: &'a Graph) -> Vec<&'a str> {
        self.path.iter().map(|&v| g.name(v)).collect()
    }
}

/// ⟨x_a x_b : {a, b} ∈ E⟩ in the ring of vertices.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let ring = g.ring();
    let n = g.vertex_count();
    MonomialIdeal::new(&ring, g.edges().map(|(a, b)| Monomial::from_support(n, [a, b])))
}

#[derive(Serialize, Deserialize)]
struct Structured {
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
}

impl Graph {
    /// `{"vertices": [...], "edges": [[a, b], ...]}`.
    pub fn to_structured(&self) -> String {
        let s = Structured {
            vertices: self.names.clone(),
            edges: self
                .edges()
                .map(|(a, b)| [self.names[a].clone(), self.names[b].clone()])
                .collect(),
        };
        serde_json::to_string_pretty(&s).expect("serializable")
    }

    /// One edge per line; isolated vertices get a line of their own.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (a, b) in self.edges() {
            out.push_str(&format!("{} {}\n", self.names[a], self.names[b]));
        }
        for v in 0..self.vertex_count() {
            if self.adj[v].is_empty() {
                out.push_str(&format!("{}\n", self.names[v]));
            }
        }
        out
    }

    pub fn parse_structured(text: &str) -> Result<Graph> {
        let s: Structured =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph document: {e}")))?;
        let names: Vec<String> = s.vertices;
        let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
        let mut pairs = Vec::new();
        for [a, b] in &s.edges {
            let ia = *index
                .get(a.as_str())
                .ok_or_else(|| Error::Parse(format!("edge names unknown vertex `{a}`")))?;
            let ib = *index
                .get(b.as_str())
                .ok_or_else(|| Error::Parse(format!("edge names unknown vertex `{b}`")))?;
            pairs.push((ia, ib));
        }
        Graph::new(names.iter().cloned(), pairs)
    }

    /// Whitespace-separated pairs, one per line. A line holding a single
    /// name declares an isolated vertex; `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut vertices: Vec<&str> = Vec::new();
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("");
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                [] => {}
                [v] => vertices.push(v),
                [a, b] => {
                    vertices.push(a);
                    vertices.push(b);
                    edges.push((*a, *b));
                }
                _ => {
                    return Err(Error::Parse(format!(
                        "line {}: expected two vertex names",
                        lineno + 1
                    )))
                }
            }
        }
        Graph::from_named_edges(vertices, edges)
    }

    /// The DOT subset `graph [name] { a -- b; c; ... }`, with optional
    /// `strict`, `//` and `#` comments and `a -- b -- c` chains.
    pub fn parse_dot(text: &str) -> Result<Graph> {
        let cleaned: String = text
            .lines()
            .map(|l| {
                let l = l.split("//").next().unwrap_or("");
                if l.trim_start().starts_with('#') {
                    ""
                } else {
                    l
                }
            })
            .collect::<Vec<_>>()
            .join("\n");
        let open = cleaned
            .find('{')
            .ok_or_else(|| Error::Parse("DOT: missing `{`".into()))?;
        let close = cleaned
            .rfind('}')
            .ok_or_else(|| Error::Parse("DOT: missing `}`".into()))?;
        let header: Vec<&str> = cleaned[..open].split_whitespace().collect();
        match header.as_slice() {
            ["graph"] | ["graph", _] | ["strict", "graph"] | ["strict", "graph", _] => {}
            _ => return Err(Error::Parse("DOT: expected an undirected `graph` header".into())),
        }
        let body = &cleaned[open + 1..close];
        let mut vertices: Vec<&str> = Vec::new();
        let mut edges = Vec::new();
        for stmt in body.split([';', '\n']) {
            let stmt = stmt.trim();
            if stmt.is_empty() {
                continue;
            }
            let parts: Vec<&str> = stmt.split("--").map(|p| p.trim().trim_matches('"')).collect();
            if parts.iter().any(|p| p.is_empty() || p.contains(char::is_whitespace)) {
                return Err(Error::Parse(format!("DOT: unsupported statement `{stmt}`")));
            }
            vertices.extend(parts.iter().copied());
            for w in parts.windows(2) {
                edges.push((w[0], w[1]));
            }
        }
        Graph::from_named_edges(vertices, edges)
    }

    /// Picks the format from the first meaningful token.
    pub fn parse_auto(text: &str) -> Result<Graph> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            Graph::parse_structured(text)
        } else if trimmed.starts_with("graph") || trimmed.starts_with("strict") {
            Graph::parse_dot(text)
        } else {
            Graph::parse_edge_list(text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(g: &Graph, covers: &[VertexCover]) -> Vec<Vec<String>> {
        covers
            .iter()
            .map(|c| c.names(g).into_iter().map(String::from).collect())
            .collect()
    }

    fn g2() -> Graph {
        Graph::from_named_edges(
            ["v1", "v2", "v3", "v4", "v5"],
            [("v1", "v3"), ("v1", "v4"), ("v2", "v4"), ("v2", "v5"), ("v3", "v5")],
        )
        .unwrap()
    }

    #[test]
    fn complement_of_p4_is_p4() {
        let g = Graph::path(&["x", "y", "z", "w"]);
        let c = complement(&g);
        let e: Vec<(&str, &str)> = c.edges().map(|(a, b)| (c.name(a), c.name(b))).collect();
        assert_eq!(e, [("x", "z"), ("x", "w"), ("y", "w")]);
        assert!(complement(&Graph::complete(&["a", "b", "c", "d"])).edge_count() == 0);
        assert_eq!(complement(&c), g);
    }

    #[test]
    fn star_covers() {
        let g = Graph::star(&["v1", "v2", "v3", "v4", "v5"]);
        let c = minimal_vertex_covers(&g, &Limits::default()).unwrap();
        assert_eq!(names(&g, &c), [vec!["v1"], vec!["v2", "v3", "v4", "v5"]]);
        assert!(c.iter().all(VertexCover::is_minimal));
    }

    #[test]
    fn five_cycle_covers() {
        let g = g2();
        let c = minimal_vertex_covers(&g, &Limits::default()).unwrap();
        assert_eq!(
            names(&g, &c),
            [
                ["v1", "v2", "v3"],
                ["v1", "v2", "v5"],
                ["v1", "v4", "v5"],
                ["v2", "v3", "v4"],
                ["v3", "v4", "v5"]
            ]
        );
        let mut with = g.clone();
        with.add_edge(3, 4);
        let c = minimal_vertex_covers(&with, &Limits::default()).unwrap();
        assert_eq!(
            names(&with, &c),
            [["v1", "v2", "v5"], ["v1", "v4", "v5"], ["v2", "v3", "v4"], ["v3", "v4", "v5"]]
        );
    }

    #[test]
    fn cover_cap() {
        let names: Vec<String> = (0..30).map(|i| format!("v{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let g = Graph::path(&refs);
        assert!(matches!(
            minimal_vertex_covers(&g, &Limits::default()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn isolated_vertices_never_cover() {
        let g = Graph::new(["a", "b", "c"], [(0, 1)]).unwrap();
        let c = minimal_vertex_covers(&g, &Limits::default()).unwrap();
        assert!(c.iter().all(|c| !c.contains(2)));
        let empty = Graph::new(["a"], []).unwrap();
        let c = minimal_vertex_covers(&empty, &Limits::default()).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c[0].is_empty());
    }

    #[test]
    fn chordal_cases() {
        let c4 = Graph::cycle(&["a", "b", "c", "d"]);
        let (ok, w) = is_chordal(&c4);
        assert!(!ok);
        let w = w.unwrap();
        assert_eq!(w.path.len(), 4);
        assert!(w.is_cycle_of(&c4) && w.has_no_chord_in(&c4));

        let mut chorded = c4.clone();
        chorded.add_edge(0, 2);
        assert_eq!(is_chordal(&chorded), (true, None));

        let p4c = complement(&Graph::path(&["x", "y", "z", "w"]));
        assert_eq!(is_chordal(&p4c), (true, None));
    }

    #[test]
    fn cochordal_cases() {
        assert!(is_cochordal(&Graph::path(&["x", "y", "z", "w"])));
        assert!(is_cochordal(&Graph::complete_bipartite(&["x1", "x2", "x3"], &["x4", "x5"])));
        assert!(!is_cochordal(&Graph::cycle(&["a", "b", "c", "d", "e"])));
    }

    #[test]
    fn edge_ideals() {
        let g = Graph::star(&["v1", "v2", "v3", "v4", "v5"]);
        assert_eq!(edge_ideal(&g).to_string(), "<v1*v2, v1*v3, v1*v4, v1*v5>");
        assert!(edge_ideal(&Graph::new(["a", "b"], []).unwrap()).is_zero());
        assert_eq!(
            edge_ideal(&Graph::complete(&["x", "y", "z"])).to_string(),
            "<x*y, x*z, y*z>"
        );
    }

    #[test]
    fn formats_agree() {
        let a = Graph::parse_edge_list("x y\ny z # comment\n\nz w\nq\n").unwrap();
        let b = Graph::parse_dot("graph G {\n  x -- y -- z;\n  z -- w; q\n}").unwrap();
        let c = Graph::parse_structured(&a.to_structured()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(Graph::parse_auto(&a.to_edge_list()).unwrap(), a);
        assert_eq!(Graph::parse_auto(&a.to_structured()).unwrap(), a);
        assert_eq!(a.names(), ["x", "y", "z", "w", "q"]);
    }

    #[test]
    fn bad_inputs() {
        assert!(Graph::parse_edge_list("a a\n").is_err());
        assert!(Graph::parse_edge_list("a b c\n").is_err());
        assert!(Graph::parse_edge_list("a.1 b\n").is_err());
        assert!(Graph::parse_dot("digraph { a -> b }").is_err());
        assert!(Graph::parse_structured(r#"{"vertices": ["a"], "edges": [["a", "b"]]}"#).is_err());
        assert!(Graph::new(["a", "a"], []).is_err());
    }

    #[test]
    fn vertex_cover_validation() {
        let g = Graph::path(&["a", "b", "c"]);
        assert!(VertexCover::new(&g, [1]).unwrap().is_minimal());
        assert!(!VertexCover::new(&g, [0, 1]).unwrap().is_minimal());
        assert!(VertexCover::new(&g, [0]).is_err());
    }
}
