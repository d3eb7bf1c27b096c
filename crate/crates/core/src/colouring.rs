//! Edge colourings: properness and multiplicity predicates, the canonical
//! (first-use ordered) enumeration of proper colourings, exact chromatic
//! index, and extension of partial colourings.
//!
//! Colour ids are dense integers starting at 1. A partial colouring stores
//! an explicit "uncoloured" state per edge rather than a sentinel colour,
//! so multiplicity counts ignore uncoloured edges.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeId, Graph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColouringError {
    #[error("colouring covers {got} edges but the graph has {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("partial colouring is not proper on its domain (edges {0} and {1})")]
    ImproperPartial(EdgeId, EdgeId),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}-{1} is not an edge of the host graph")]
    NotAnEdge(usize, usize),
    #[error("edge {0}-{1} coloured twice")]
    DuplicateEdge(usize, usize),
}

/// A total or partial assignment of colours to the edges of a fixed graph,
/// indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColouring {
    colours: Vec<Option<u32>>,
}

impl EdgeColouring {
    pub fn empty(g: &Graph) -> EdgeColouring {
        EdgeColouring {
            colours: vec![None; g.edge_count()],
        }
    }

    pub fn from_total(colours: Vec<u32>) -> EdgeColouring {
        EdgeColouring {
            colours: colours.into_iter().map(Some).collect(),
        }
    }

    pub fn from_partial(colours: Vec<Option<u32>>) -> EdgeColouring {
        EdgeColouring { colours }
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn get(&self, e: EdgeId) -> Option<u32> {
        self.colours[e]
    }

    pub fn set(&mut self, e: EdgeId, colour: u32) {
        assert!(colour >= 1, "colour ids start at 1");
        self.colours[e] = Some(colour);
    }

    pub fn unset(&mut self, e: EdgeId) {
        self.colours[e] = None;
    }

    pub fn is_total(&self) -> bool {
        self.colours.iter().all(|c| c.is_some())
    }

    pub fn domain(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.colours
            .iter()
            .enumerate()
            .filter_map(|(e, c)| c.map(|_| e))
    }

    pub fn used_colours(&self) -> BTreeSet<u32> {
        self.colours.iter().flatten().copied().collect()
    }

    pub fn colour_count(&self) -> usize {
        self.used_colours().len()
    }

    pub fn max_colour(&self) -> u32 {
        self.colours.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// Colours incident to `v`, ignoring uncoloured edges.
pub fn incident_colours(g: &Graph, c: &EdgeColouring, v: usize) -> BTreeSet<u32> {
    g.neighbours(v)
        .iter()
        .filter_map(|&w| c.get(g.edge_id(v, w).expect("adjacency implies edge")))
        .collect()
}

fn check_len(g: &Graph, c: &EdgeColouring) {
    assert_eq!(
        c.len(),
        g.edge_count(),
        "colouring built for a different graph"
    );
}

/// True iff no vertex has two coloured incident edges of equal colour.
/// Works on partial colourings; uncoloured edges impose nothing.
pub fn is_proper_on_domain(g: &Graph, c: &EdgeColouring) -> bool {
    proper_violation(g, c).is_none()
}

fn proper_violation(g: &Graph, c: &EdgeColouring) -> Option<(EdgeId, EdgeId)> {
    check_len(g, c);
    for v in 0..g.vertex_count() {
        let mut seen: Vec<(u32, EdgeId)> = Vec::new();
        for &w in g.neighbours(v) {
            let e = g.edge_id(v, w).unwrap();
            if let Some(col) = c.get(e) {
                if let Some(&(_, other)) = seen.iter().find(|&&(sc, _)| sc == col) {
                    return Some((other.min(e), other.max(e)));
                }
                seen.push((col, e));
            }
        }
    }
    None
}

/// True iff `c` is total and adjacent edges always differ in colour.
pub fn is_proper(g: &Graph, c: &EdgeColouring) -> bool {
    check_len(g, c);
    c.is_total() && is_proper_on_domain(g, c)
}

/// True iff `c` is total and no colour appears more than `m` times at any
/// vertex. `m = 1` coincides with `is_proper`.
pub fn is_m_bounded(g: &Graph, c: &EdgeColouring, m: u32) -> bool {
    check_len(g, c);
    c.is_total() && is_m_bounded_on_domain(g, c, m)
}

pub fn is_m_bounded_on_domain(g: &Graph, c: &EdgeColouring, m: u32) -> bool {
    for v in 0..g.vertex_count() {
        let mut counts: Vec<(u32, u32)> = Vec::new();
        for &w in g.neighbours(v) {
            if let Some(col) = c.get(g.edge_id(v, w).unwrap()) {
                match counts.iter_mut().find(|(sc, _)| *sc == col) {
                    Some((_, k)) => {
                        *k += 1;
                        if *k > m {
                            return false;
                        }
                    }
                    None => counts.push((col, 1)),
                }
            }
        }
    }
    true
}

/// The fixed edge order used by every canonical search: descending by
/// degree(u) + degree(v), ties by edge id. High-degree edges first makes
/// properness constraints propagate early.
pub fn canonical_edge_order(g: &Graph) -> Vec<EdgeId> {
    let mut order: Vec<EdgeId> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.edge(e);
        (std::cmp::Reverse(g.degree(u) + g.degree(v)), e)
    });
    order
}

/// Lazy enumeration of proper colourings, one representative per
/// colour-permutation class: along the canonical edge order, the colour of
/// each edge is at most 1 + the maximum colour used on earlier edges.
pub struct CanonicalColourings<'a> {
    g: &'a Graph,
    order: Vec<EdgeId>,
    cap: u32,
    // choices[i] = colour of order[i]; prefix of the search path
    choices: Vec<u32>,
    max_stack: Vec<u32>,
    used: Vec<Vec<bool>>, // vertex -> colour -> incident?
    cursor: u32,          // next colour to try at position choices.len()
    done: bool,
}

impl<'a> CanonicalColourings<'a> {
    pub fn new(g: &'a Graph, max_colours: Option<u32>) -> CanonicalColourings<'a> {
        let cap = max_colours.unwrap_or(g.edge_count() as u32);
        CanonicalColourings {
            g,
            order: canonical_edge_order(g),
            cap,
            choices: Vec::new(),
            max_stack: Vec::new(),
            used: vec![vec![false; cap as usize + 2]; g.vertex_count()],
            cursor: 1,
            done: false,
        }
    }

    fn max_used(&self) -> u32 {
        self.max_stack.last().copied().unwrap_or(0)
    }

    fn build(&self) -> EdgeColouring {
        let mut colours = vec![None; self.g.edge_count()];
        for (pos, &col) in self.choices.iter().enumerate() {
            colours[self.order[pos]] = Some(col);
        }
        EdgeColouring::from_partial(colours)
    }

    fn pop(&mut self) -> Option<u32> {
        let col = self.choices.pop()?;
        self.max_stack.pop();
        let (u, v) = self.g.edge(self.order[self.choices.len()]);
        self.used[u][col as usize] = false;
        self.used[v][col as usize] = false;
        Some(col)
    }
}

impl Iterator for CanonicalColourings<'_> {
    type Item = EdgeColouring;

    fn next(&mut self) -> Option<EdgeColouring> {
        if self.done {
            return None;
        }
        let m = self.order.len();
        loop {
            let pos = self.choices.len();
            if pos == m {
                let out = self.build();
                // resume by backtracking past the last choice
                match self.pop() {
                    Some(col) => self.cursor = col + 1,
                    None => self.done = true, // edgeless graph: single empty colouring
                }
                return Some(out);
            }
            let (u, v) = self.g.edge(self.order[pos]);
            let limit = self.cap.min(self.max_used() + 1);
            let mut placed = false;
            while self.cursor <= limit {
                let col = self.cursor;
                if !self.used[u][col as usize] && !self.used[v][col as usize] {
                    self.used[u][col as usize] = true;
                    self.used[v][col as usize] = true;
                    self.max_stack.push(self.max_used().max(col));
                    self.choices.push(col);
                    placed = true;
                    break;
                }
                self.cursor += 1;
            }
            if placed {
                self.cursor = 1;
                continue;
            }
            match self.pop() {
                Some(col) => self.cursor = col + 1,
                None => {
                    self.done = true;
                    return None;
                }
            }
        }
    }
}

/// One representative per colour-class of proper colourings of `g` using at
/// most `max_colours` colours (default: `e(g)`, which is exhaustive).
pub fn enumerate_proper_colourings(
    g: &Graph,
    max_colours: Option<u32>,
) -> CanonicalColourings<'_> {
    CanonicalColourings::new(g, max_colours)
}

/// First canonical proper colouring with at most `q` colours, if any.
pub fn find_proper_colouring(g: &Graph, q: u32) -> Option<EdgeColouring> {
    enumerate_proper_colourings(g, Some(q)).next()
}

/// Exact chromatic index by backtracking search for a max-degree
/// colouring; the answer is always max degree or max degree + 1.
pub fn chromatic_index(g: &Graph) -> usize {
    assert!(g.edge_count() >= 1, "chromatic index needs an edge");
    let delta = g.max_degree();
    if find_proper_colouring(g, delta as u32).is_some() {
        return delta;
    }
    // Vizing dichotomy as a hard assertion: a (delta+1)-colouring must exist.
    assert!(
        find_proper_colouring(g, delta as u32 + 1).is_some(),
        "no proper colouring with max degree + 1 colours; search is broken"
    );
    delta + 1
}

/// Extend a partial proper colouring to a total proper colouring by
/// first-fit backtracking; new colours are permitted, so a valid partial
/// always extends (a fresh colour is never blocked).
pub fn complete_to_proper(
    g: &Graph,
    partial: &EdgeColouring,
) -> Result<Option<EdgeColouring>, ColouringError> {
    complete_with_order::<rand::rngs::ThreadRng>(g, partial, &canonical_edge_order(g), None)
}

/// As `complete_to_proper` but with randomised edge and colour order.
pub fn random_proper_completion<R: Rng>(
    g: &Graph,
    partial: &EdgeColouring,
    rng: &mut R,
) -> Result<EdgeColouring, ColouringError> {
    let mut order = canonical_edge_order(g);
    order.shuffle(rng);
    let out = complete_with_order(g, partial, &order, Some(rng))?;
    Ok(out.expect("completion with fresh colours always exists"))
}

pub fn random_proper_colouring<R: Rng>(g: &Graph, rng: &mut R) -> EdgeColouring {
    random_proper_completion(g, &EdgeColouring::empty(g), rng)
        .expect("empty partial is trivially proper")
}

fn complete_with_order<R: Rng>(
    g: &Graph,
    partial: &EdgeColouring,
    order: &[EdgeId],
    mut rng: Option<&mut R>,
) -> Result<Option<EdgeColouring>, ColouringError> {
    check_len(g, partial);
    if let Some((a, b)) = proper_violation(g, partial) {
        return Err(ColouringError::ImproperPartial(a, b));
    }
    let mut c = partial.clone();
    let todo: Vec<EdgeId> = order.iter().copied().filter(|&e| c.get(e).is_none()).collect();
    let mut running_max = c.max_colour();
    for &e in &todo {
        let (u, v) = g.edge(e);
        let mut allowed: Vec<u32> = (1..=running_max + 1)
            .filter(|&col| {
                !incident_colours(g, &c, u).contains(&col)
                    && !incident_colours(g, &c, v).contains(&col)
            })
            .collect();
        debug_assert!(!allowed.is_empty(), "fresh colour is always available");
        let col = match rng.as_deref_mut() {
            Some(r) => allowed[r.random_range(0..allowed.len())],
            None => allowed.remove(0),
        };
        c.set(e, col);
        running_max = running_max.max(col);
    }
    Ok(Some(c))
}

/// A random total colouring in which no colour appears more than `m` times
/// at any vertex. Not necessarily proper for m >= 2.
pub fn random_m_bounded_colouring<R: Rng>(g: &Graph, m: u32, rng: &mut R) -> EdgeColouring {
    let mut order: Vec<EdgeId> = (0..g.edge_count()).collect();
    order.shuffle(rng);
    let mut c = EdgeColouring::empty(g);
    let mut counts: Vec<Vec<u32>> = vec![vec![0; g.edge_count() + 2]; g.vertex_count()];
    let mut running_max = 0u32;
    for &e in &order {
        let (u, v) = g.edge(e);
        let allowed: Vec<u32> = (1..=running_max + 1)
            .filter(|&col| counts[u][col as usize] < m && counts[v][col as usize] < m)
            .collect();
        let col = allowed[rng.random_range(0..allowed.len())];
        c.set(e, col);
        counts[u][col as usize] += 1;
        counts[v][col as usize] += 1;
        running_max = running_max.max(col);
    }
    debug_assert!(is_m_bounded(g, &c, m));
    c
}

/// Parse the colouring file format: lines `u v colour`. Partial colourings
/// list a subset of the edges.
pub fn parse_colouring(text: &str, g: &Graph) -> Result<EdgeColouring, ColouringError> {
    let mut c = EdgeColouring::empty(g);
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        let mut field = |what: &str| -> Result<usize, ColouringError> {
            parts
                .next()
                .ok_or(ColouringError::Parse {
                    line,
                    message: format!("missing {what}"),
                })?
                .parse()
                .map_err(|_| ColouringError::Parse {
                    line,
                    message: format!("invalid {what}"),
                })
        };
        let u = field("endpoint")?;
        let v = field("endpoint")?;
        let col = field("colour")?;
        if col == 0 {
            return Err(ColouringError::Parse {
                line,
                message: "colour ids start at 1".into(),
            });
        }
        let e = g.edge_id(u, v).ok_or(ColouringError::NotAnEdge(u, v))?;
        if c.get(e).is_some() {
            return Err(ColouringError::DuplicateEdge(u, v));
        }
        c.set(e, col as u32);
    }
    Ok(c)
}

pub fn format_colouring(g: &Graph, c: &EdgeColouring) -> String {
    check_len(g, c);
    let mut out = String::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if let Some(col) = c.get(e) {
            let _ = writeln!(out, "{u} {v} {col}");
        }
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ColouringJson {
    pub edges: Vec<(usize, usize, u32)>,
}

pub fn colouring_to_json(g: &Graph, c: &EdgeColouring) -> ColouringJson {
    check_len(g, c);
    ColouringJson {
        edges: g
            .edges()
            .iter()
            .enumerate()
            .filter_map(|(e, &(u, v))| c.get(e).map(|col| (u, v, col)))
            .collect(),
    }
}

pub fn colouring_from_json(json: &ColouringJson, g: &Graph) -> Result<EdgeColouring, ColouringError> {
    let mut c = EdgeColouring::empty(g);
    for &(u, v, col) in &json.edges {
        let e = g.edge_id(u, v).ok_or(ColouringError::NotAnEdge(u, v))?;
        if c.get(e).is_some() {
            return Err(ColouringError::DuplicateEdge(u, v));
        }
        c.set(e, col);
    }
    Ok(c)
}
