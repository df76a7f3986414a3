//! Graph corpora for the verification suites.
//!
//! A corpus description is one or more terms joined by `+`:
//!
//! * `all-connected:N`: every connected labeled graph on `1..=N` vertices
//! * `path:N`, `cycle:N`, `star:N`, `complete:N`: `N` vertices `v1..vN`
//! * `complete-bipartite:A,B`
//! * `random:COUNT:N`: `COUNT` graphs on `N` vertices, each edge kept with
//!   probability 1/2, drawn from the seed
//! * `file:PATH`: a graph file in any accepted format

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named graph taken from a corpus.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    AllConnected(usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Random { count: usize, vertices: usize },
    File(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub families: Vec<Family>,
}

/// Largest vertex count accepted by `all-connected` (2^28 edge subsets).
const MAX_ALL_CONNECTED: usize = 8;

fn vertex_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

fn number(text: &str, what: &str) -> Result<usize> {
    text.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("corpus: `{text}` is not a valid {what}")))
}

impl Family {
    fn parse(term: &str) -> Result<Family> {
        let (kind, arg) = term
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("corpus term `{term}` needs `kind:argument`")))?;
        let n = || number(arg, "vertex count");
        Ok(match kind.trim() {
            "all-connected" => {
                let n = n()?;
                if n > MAX_ALL_CONNECTED {
                    return Err(Error::Parse(format!(
                        "corpus: all-connected is limited to {MAX_ALL_CONNECTED} vertices"
                    )));
                }
                Family::AllConnected(n)
            }
            "path" => Family::Path(n()?),
            "cycle" => {
                let n = n()?;
                if n < 3 {
                    return Err(Error::Parse("corpus: cycles need at least 3 vertices".into()));
                }
                Family::Cycle(n)
            }
            "star" => Family::Star(n()?),
            "complete" => Family::Complete(n()?),
            "complete-bipartite" => {
                let (a, b) = arg
                    .split_once(',')
                    .ok_or_else(|| Error::Parse("corpus: complete-bipartite:A,B".into()))?;
                Family::CompleteBipartite(number(a, "part size")?, number(b, "part size")?)
            }
            "random" => {
                let (c, v) = arg
                    .split_once(':')
                    .ok_or_else(|| Error::Parse("corpus: random:COUNT:N".into()))?;
                let vertices = number(v, "vertex count")?;
                if vertices > 64 {
                    return Err(Error::Parse("corpus: random graphs are limited to 64 vertices".into()));
                }
                Family::Random {
                    count: number(c, "count")?,
                    vertices,
                }
            }
            "file" => Family::File(arg.to_string()),
            other => return Err(Error::Parse(format!("corpus: unknown family `{other}`"))),
        })
    }

    fn instances(&self, rng: &mut ChaCha8Rng) -> Result<Vec<Instance>> {
        let single = |name: String, graph: Graph| vec![Instance { name, graph }];
        Ok(match *self {
            Family::AllConnected(n) => (1..=n)
                .flat_map(|k| {
                    all_connected(k)
                        .into_iter()
                        .enumerate()
                        .map(move |(i, graph)| Instance {
                            name: format!("connected-{k}#{i}"),
                            graph,
                        })
                })
                .collect(),
            Family::Path(n) => single(format!("path:{n}"), family_graph(n, Graph::path)),
            Family::Cycle(n) => single(format!("cycle:{n}"), family_graph(n, Graph::cycle)),
            Family::Star(n) => single(format!("star:{n}"), family_graph(n, Graph::star)),
            Family::Complete(n) => single(
                format!("complete:{n}"),
                family_graph(n, Graph::complete),
            ),
            Family::CompleteBipartite(a, b) => {
                let names = vertex_names(a + b);
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                single(
                    format!("complete-bipartite:{a},{b}"),
                    Graph::complete_bipartite(&refs[..a], &refs[a..]),
                )
            }
            Family::Random { count, vertices } => (0..count)
                .map(|i| {
                    let pairs = (0..vertices).flat_map(|a| (a + 1..vertices).map(move |b| (a, b)));
                    let edges: Vec<(usize, usize)> = pairs.filter(|_| rng.random_bool(0.5)).collect();
                    Instance {
                        name: format!("random-{vertices}#{i}"),
                        graph: Graph::new(vertex_names(vertices), edges).expect("valid names"),
                    }
                })
                .collect(),
            Family::File(ref path) => {
                let text = std::fs::read_to_string(Path::new(path))
                    .map_err(|e| Error::Parse(format!("corpus file {path}: {e}")))?;
                single(path.clone(), Graph::parse_auto(&text)?)
            }
        })
    }
}

fn family_graph(n: usize, build: impl Fn(&[&str]) -> Graph) -> Graph {
    let names = vertex_names(n);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    build(&refs)
}

/// Every connected labeled graph on `n` vertices, by edge subsets in
/// increasing bitmask order.
pub fn all_connected(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let names = vertex_names(n);
    (0u64..1u64 << pairs.len())
        .filter_map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p);
            let g = Graph::new(names.iter().cloned(), edges).expect("valid names");
            g.is_connected().then_some(g)
        })
        .collect()
}

impl Corpus {
    pub fn parse(text: &str) -> Result<Corpus> {
        let families = text
            .split('+')
            .filter(|t| !t.trim().is_empty())
            .map(Family::parse)
            .collect::<Result<Vec<_>>>()?;
        if families.is_empty() {
            return Err(Error::Parse("empty corpus description".into()));
        }
        Ok(Corpus { families })
    }

    /// Expands the corpus; `seed` drives the random families.
    pub fn instances(&self, seed: u64) -> Result<Vec<Instance>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        for f in &self.families {
            out.extend(f.instances(&mut rng)?);
        }
        Ok(out)
    }
}
