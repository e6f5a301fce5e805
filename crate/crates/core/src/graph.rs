//! Graph representations shared by every stage of the pipeline.
//!
//! [`MultiGraph`] is what the random matching produces: parallel edges and
//! self-loops are kept. [`SimpleGraph`] is the collapsed view on which LP and
//! cover semantics are defined. A vertex that carried a self-loop must be in
//! every cover, so the simple graph remembers those vertices separately.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// Undirected multigraph with self-loops. Edges are stored as `(min, max)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        MultiGraph { n, edges: Vec::new() }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = MultiGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidInput(format!(
                "edge {{{u},{v}}} has an endpoint outside [0, {})",
                self.n
            )));
        }
        self.edges.push((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Multigraph degree of every vertex; a self-loop contributes 2.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// Edge multiset in canonical (sorted) order.
    pub fn sorted_edges(&self) -> Vec<(usize, usize)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    /// Writes the `p <n> <m>` / `e <u> <v>` text format, edges sorted.
    pub fn write_text<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "p {} {}", self.n, self.edges.len())?;
        for (u, v) in self.sorted_edges() {
            writeln!(out, "e {u} {v}")?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_text(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("format is ASCII")
    }

    /// Parses the text format. Blank lines and lines starting with `c` or `#`
    /// are ignored.
    pub fn read_text<R: BufRead>(input: R) -> Result<Self> {
        let mut graph: Option<MultiGraph> = None;
        let mut declared = 0usize;
        for (idx, line) in input.lines().enumerate() {
            let line = line?;
            let lineno = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with('#') {
                continue;
            }
            let mut parts = trimmed.split_whitespace();
            let tag = parts.next().unwrap_or_default();
            let nums: Vec<usize> = parts
                .map(|t| {
                    t.parse::<usize>().map_err(|e| Error::Parse {
                        line: lineno,
                        msg: format!("bad integer {t:?}: {e}"),
                    })
                })
                .collect::<Result<_>>()?;
            let bad = |msg: &str| Error::Parse { line: lineno, msg: msg.to_string() };
            match (tag, nums.as_slice()) {
                ("p", &[n, m]) => {
                    if graph.is_some() {
                        return Err(bad("duplicate header"));
                    }
                    graph = Some(MultiGraph::new(n));
                    declared = m;
                }
                ("e", &[u, v]) => {
                    let g = graph.as_mut().ok_or_else(|| bad("edge before header"))?;
                    g.add_edge(u, v).map_err(|e| bad(&e.to_string()))?;
                }
                _ => return Err(bad(&format!("unrecognized line {trimmed:?}"))),
            }
        }
        let g = graph.ok_or(Error::Parse { line: 0, msg: "missing `p` header".into() })?;
        if g.edges.len() != declared {
            return Err(Error::Parse {
                line: 0,
                msg: format!("header declares {declared} edges, found {}", g.edges.len()),
            });
        }
        Ok(g)
    }

    pub fn from_text(s: &str) -> Result<Self> {
        Self::read_text(s.as_bytes())
    }
}

/// Simple undirected graph: sorted, duplicate-free adjacency lists with no
/// self entries, plus the set of vertices that had a self-loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    loops: Vec<bool>,
}

impl SimpleGraph {
    /// Builds a simple graph from an edge list. Duplicates are collapsed and
    /// `(v, v)` pairs mark `v` as a loop vertex.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mg = MultiGraph::from_edges(n, edges)?;
        Ok(simplify(&mg))
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops[v]
    }

    pub fn loop_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.loops.iter().enumerate().filter(|(_, &l)| l).map(|(v, _)| v)
    }

    pub fn loop_count(&self) -> usize {
        self.loops.iter().filter(|&&l| l).count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Subgraph induced by the vertices where `keep` is true, relabelled to
    /// `0..k` in ascending order. Returns the graph and the old index of each
    /// new vertex.
    pub fn induced(&self, keep: &[bool]) -> (SimpleGraph, Vec<usize>) {
        let old: Vec<usize> = (0..self.n()).filter(|&v| keep[v]).collect();
        let mut new_of = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let adj = old
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| keep[w])
                    .map(|&w| new_of[w])
                    .collect()
            })
            .collect();
        let loops = old.iter().map(|&v| self.loops[v]).collect();
        (SimpleGraph { adj, loops }, old)
    }
}

/// Collapses parallel edges and moves self-loops into the loop-vertex set.
pub fn simplify(g: &MultiGraph) -> SimpleGraph {
    let mut adj = vec![Vec::new(); g.n()];
    let mut loops = vec![false; g.n()];
    for &(u, v) in g.edges() {
        if u == v {
            loops[u] = true;
        } else {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    for nb in &mut adj {
        nb.sort_unstable();
        nb.dedup();
    }
    SimpleGraph { adj, loops }
}

/// Integral vertex assignment `y: V -> {0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverAssignment {
    y: Vec<bool>,
}

impl CoverAssignment {
    pub fn new(y: Vec<bool>) -> Self {
        CoverAssignment { y }
    }

    pub fn from_set(n: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut y = vec![false; n];
        for v in vertices {
            y[v] = true;
        }
        CoverAssignment { y }
    }

    pub fn len(&self) -> usize {
        self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y.is_empty()
    }

    pub fn get(&self, v: usize) -> bool {
        self.y[v]
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.y
    }

    pub fn cost(&self) -> usize {
        self.y.iter().filter(|&&b| b).count()
    }

    /// Cost restricted to the vertices flagged in `mask`.
    pub fn cost_on(&self, mask: &[bool]) -> usize {
        self.y.iter().zip(mask).filter(|(&y, &m)| y && m).count()
    }

    pub fn vertices(&self) -> Vec<usize> {
        (0..self.y.len()).filter(|&v| self.y[v]).collect()
    }
}

/// True iff every edge has an endpoint in the cover and every loop vertex is
/// in the cover.
pub fn validate_cover(g: &SimpleGraph, y: &CoverAssignment) -> Result<bool> {
    if y.len() != g.n() {
        return Err(Error::SizeMismatch { expected: g.n(), found: y.len() });
    }
    let edges_ok = g.edges().all(|(u, v)| y.get(u) || y.get(v));
    let loops_ok = g.loop_vertices().all(|v| y.get(v));
    Ok(edges_ok && loops_ok)
}

/// Histogram of simple degrees: degree -> number of vertices.
pub fn induced_degree_stats(g: &SimpleGraph) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for v in 0..g.n() {
        *hist.entry(g.degree(v)).or_insert(0) += 1;
    }
    hist
}
