//! Undirected simple graphs with dense vertex ids, plus the structural
//! queries the rest of the crate leans on: degeneracy orderings, girth,
//! bridges and cut vertices, and a plain text / DOT interchange format.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge {0}-{0} is not allowed")]
    LoopEdge(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("edge {0}-{1} has an endpoint >= vertex count {2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// An undirected simple graph. Vertices are `0..n`; edges are stored once,
/// normalised as `(min, max)`, and addressed by their index in `edges()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

pub type EdgeId = usize;

impl Graph {
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            if a >= n || b >= n {
                return Err(GraphError::EndpointOutOfRange(a, b, n));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::ParallelEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adj,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (usize, usize) {
        self.edges[id]
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edge id of `{u, v}`, if present.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        Graph::new(self.n + other.n, &edges).expect("union of simple graphs is simple")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// BFS distances from `root`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, root: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// A vertex ordering together with, for each vertex, the number of its
/// neighbours that appear earlier in the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    pub order: Vec<usize>,
    pub back_degree: Vec<usize>,
}

impl VertexOrdering {
    /// Positions of the earlier neighbours of the vertex at position `pos`.
    pub fn earlier_neighbours(&self, g: &Graph, pos: usize) -> Vec<usize> {
        let v = self.order[pos];
        (0..pos)
            .filter(|&q| g.has_edge(self.order[q], v))
            .collect()
    }
}

/// Degeneracy and a witness ordering, by repeated minimum-degree removal.
/// The returned order lists vertices so that each has at most `d` earlier
/// neighbours, and some vertex meets the bound.
pub fn degeneracy(g: &Graph) -> (usize, VertexOrdering) {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    let mut removal_degree = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("some vertex remains");
        removal.push(v);
        removal_degree.push(deg[v]);
        removed[v] = true;
        for &w in g.neighbours(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    removal.reverse();
    removal_degree.reverse();
    let d = removal_degree.iter().copied().max().unwrap_or(0);
    let ordering = VertexOrdering {
        order: removal,
        back_degree: removal_degree,
    };
    debug_assert!({
        let mut pos = vec![0; n];
        for (p, &v) in ordering.order.iter().enumerate() {
            pos[v] = p;
        }
        ordering.order.iter().enumerate().all(|(p, &v)| {
            g.neighbours(v).iter().filter(|&&w| pos[w] < p).count() == ordering.back_degree[p]
        })
    });
    (d, ordering)
}

/// Length of a shortest cycle; `None` for forests.
///
/// For each edge the shortest path between its endpoints avoiding the edge
/// itself is found by BFS; the minimum of path length + 1 over all edges is
/// the girth.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for &(u, v) in g.edges() {
        let mut dist = vec![usize::MAX; g.vertex_count()];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        'bfs: while let Some(x) = queue.pop_front() {
            for &y in g.neighbours(x) {
                if (x == u && y == v) || (x == v && y == u) {
                    continue; // skip the edge under test
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    if y == v {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        if dist[v] != usize::MAX {
            let cycle = dist[v] + 1;
            best = Some(best.map_or(cycle, |b| b.min(cycle)));
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralReport {
    pub connected: bool,
    pub bridges: Vec<(usize, usize)>,
    pub cut_vertices: Vec<usize>,
    pub is_regular_of: Option<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
}

/// Bridges, cut vertices, connectivity and degree statistics in one pass
/// (iterative DFS low-link).
pub fn structural_report(g: &Graph) -> StructuralReport {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut bridges = Vec::new();
    let mut cut = vec![false; n];
    let mut timer = 0usize;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut root_children = 0usize;
        // stack of (vertex, next neighbour index)
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
            if *idx < g.neighbours(v).len() {
                let w = g.neighbours(v)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    parent[w] = v;
                    if v == root {
                        root_children += 1;
                    }
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, 0));
                } else if w != parent[v] {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        bridges.push((p.min(v), p.max(v)));
                    }
                    if p != root && low[v] >= disc[p] {
                        cut[p] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            cut[root] = true;
        }
    }

    bridges.sort_unstable();
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let min_degree = degrees.iter().copied().min().unwrap_or(0);
    StructuralReport {
        connected: g.is_connected(),
        bridges,
        cut_vertices: (0..n).filter(|&v| cut[v]).collect(),
        is_regular_of: (max_degree == min_degree && n > 0).then_some(max_degree),
        max_degree,
        min_degree,
    }
}

/// Parse the plain text format: first line `n m`, then `m` lines `u v`.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        message: "empty input; expected header `n m`".into(),
    })?;
    let parse_int = |tok: Option<&str>, line: usize, what: &str| -> Result<usize, GraphError> {
        tok.ok_or(GraphError::Parse {
            line,
            message: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| GraphError::Parse {
            line,
            message: format!("invalid {what}"),
        })
    };
    let mut parts = header.split_whitespace();
    let n = parse_int(parts.next(), header_line, "vertex count")?;
    let m = parse_int(parts.next(), header_line, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or(GraphError::Parse {
            line: header_line,
            message: format!("expected {m} edge lines"),
        })?;
        let mut parts = line.split_whitespace();
        let u = parse_int(parts.next(), line_no, "edge endpoint")?;
        let v = parse_int(parts.next(), line_no, "edge endpoint")?;
        edges.push((u, v));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(GraphError::Parse {
            line: line_no,
            message: "trailing content after edge list".into(),
        });
    }
    Graph::new(n, &edges)
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.vertex_count() {
        match g.label(v) {
            Some(label) => {
                let _ = writeln!(out, "  {v} [label=\"{label}\"];");
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
