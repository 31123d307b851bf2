//! Undirected simple graphs, edge-list ingestion, breadth-first distances and
//! deterministic generators.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::alpha::AlphaArray;
use crate::error::{Error, ParseErrorKind, Result};
use crate::rational::Rational;

/// An undirected graph on nodes `0..n` without self-loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted, each pair stored as `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting out-of-range endpoints, self-loops and
    /// repeated edges. Edge order and orientation are irrelevant.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewNodes { n, min: 2 });
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidEdge { u, v, n });
            }
            let key = (u.min(v), u.max(v));
            if !set.insert(key) {
                return Err(Error::DuplicateEdge { u: key.0, v: key.1 });
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Graph {
            n,
            edges,
            adjacency,
        }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// True iff every pair of nodes is joined by a path.
    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(|d| d.is_some())
    }

    fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::with_capacity(self.n);
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Shortest-path link counts between all node pairs, one BFS per source.
    pub fn all_pairs_distances(&self) -> Result<DistanceMatrix> {
        let rows: Vec<Vec<Option<u32>>> =
            (0..self.n).into_par_iter().map(|s| self.bfs(s)).collect();
        let mut d = Vec::with_capacity(self.n * self.n);
        for row in rows {
            for entry in row {
                d.push(entry.ok_or(Error::Disconnected)?);
            }
        }
        Ok(DistanceMatrix { n: self.n, d })
    }

    /// The distance frequency array of this graph.
    pub fn alpha_array(&self) -> Result<AlphaArray> {
        let dm = self.all_pairs_distances()?;
        Ok(dm.alpha_array())
    }

    /// Edge-list rendering: node count on the first line, then one `u v` per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Symmetric table of shortest-path distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn alpha_array(&self) -> AlphaArray {
        let mut counts = vec![0u64; self.n - 1];
        for u in 0..self.n {
            for v in u + 1..self.n {
                counts[self.get(u, v) as usize - 1] += 1;
            }
        }
        AlphaArray::new(counts).expect("n >= 2")
    }
}

/// Parses the edge-list text format.
///
/// Lines starting with `#` are comments and blank lines are skipped. The
/// first remaining line holds the node count `N`; every other line is an
/// edge `u v` with `0 <= u, v < N`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = BTreeSet::new();
    let err = |line: usize, kind| Error::Parse { line, kind };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(count) = n else {
            let count = match fields.as_slice() {
                [one] => one.parse::<usize>().ok(),
                _ => None,
            }
            .ok_or_else(|| err(line_no, ParseErrorKind::Malformed { text: line.into() }))?;
            if count < 2 {
                return Err(err(line_no, ParseErrorKind::TooFewNodes { n: count }));
            }
            n = Some(count);
            continue;
        };
        let (u, v) = match fields.as_slice() {
            [a, b] => match (a.parse::<usize>(), b.parse::<usize>()) {
                (Ok(u), Ok(v)) => (u, v),
                _ => {
                    return Err(err(
                        line_no,
                        ParseErrorKind::Malformed { text: line.into() },
                    ))
                }
            },
            _ => {
                return Err(err(
                    line_no,
                    ParseErrorKind::Malformed { text: line.into() },
                ))
            }
        };
        for id in [u, v] {
            if id >= count {
                return Err(err(
                    line_no,
                    ParseErrorKind::NodeOutOfRange { id, n: count },
                ));
            }
        }
        if u == v {
            return Err(err(line_no, ParseErrorKind::SelfLoop { node: u }));
        }
        let key = (u.min(v), u.max(v));
        if !edges.insert(key) {
            return Err(err(
                line_no,
                ParseErrorKind::DuplicateEdge { u: key.0, v: key.1 },
            ));
        }
    }

    let n = n.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        kind: ParseErrorKind::MissingNodeCount,
    })?;
    Ok(Graph::from_sorted(n, edges.into_iter().collect()))
}

/// Path `0 - 1 - … - (n-1)`.
pub fn generate_chain(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|v| (v - 1, v)))
}

/// Complete graph `K_n`.
pub fn generate_complete(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Star with center `0` and leaves `1..n`.
pub fn generate_star(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::TooFewNodes { n, min: 3 });
    }
    Graph::new(n, (1..n).map(|v| (0, v)))
}

/// Random connected graph: a uniform random spanning tree (decoded from a
/// random Prüfer sequence) plus every other pair independently with
/// probability `extra_edge_probability`.
///
/// Deterministic in `(n, extra_edge_probability, seed)`. The probability is
/// clamped to `[0, 1]`.
pub fn random_connected_graph(
    n: usize,
    extra_edge_probability: Rational,
    seed: u64,
) -> Result<Graph> {
    if n < 2 {
        return Err(Error::TooFewNodes { n, min: 2 });
    }
    let p = extra_edge_probability
        .max(Rational::ZERO)
        .min(Rational::ONE);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let prufer: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.gen_range(0..n))
        .collect();
    let tree = prufer_to_tree(n, &prufer);

    let mut in_tree = vec![false; n * n];
    for &(u, v) in &tree {
        in_tree[u * n + v] = true;
    }
    let mut edges: BTreeSet<(usize, usize)> = tree.into_iter().collect();
    let (num, den) = (p.numer(), p.denom());
    for u in 0..n {
        for v in u + 1..n {
            if in_tree[u * n + v] {
                continue;
            }
            if rng.gen_range(0..den) < num {
                edges.insert((u, v));
            }
        }
    }
    Ok(Graph::from_sorted(n, edges.into_iter().collect()))
}

/// Standard linear-time Prüfer decoding; returns normalized `(u, v)`, `u < v`.
fn prufer_to_tree(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf.min(x), leaf.max(x)));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf.min(n - 1), leaf.max(n - 1)));
    edges
}
