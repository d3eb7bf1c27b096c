//! Subgraph copy enumeration: every subgraph of a host isomorphic to a
//! pattern, each copy reported exactly once as an edge set. Pattern
//! automorphisms are quotiented out by keeping only the lexicographically
//! smallest vertex map per copy.

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeId, Graph};
use crate::patterns::Pattern;

/// An injective map from pattern vertices into a host.
/// `edge_ids[j]` is the host edge carrying pattern edge `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
    pub edge_ids: Vec<EdgeId>,
}

impl Embedding {
    pub fn from_map(g: &Graph, h: &Pattern, map: Vec<usize>) -> Embedding {
        let edge_ids = h
            .graph()
            .edges()
            .iter()
            .map(|&(a, b)| {
                g.edge_id(map[a], map[b])
                    .expect("pattern edge must land on a host edge")
            })
            .collect();
        Embedding { map, edge_ids }
    }

    pub fn is_valid(&self, g: &Graph, h: &Pattern) -> bool {
        let hg = h.graph();
        if self.map.len() != hg.vertex_count() {
            return false;
        }
        let mut seen = std::collections::BTreeSet::new();
        if !self.map.iter().all(|&v| v < g.vertex_count() && seen.insert(v)) {
            return false;
        }
        hg.edges()
            .iter()
            .zip(&self.edge_ids)
            .all(|(&(a, b), &e)| g.edge_id(self.map[a], self.map[b]) == Some(e))
    }

    /// Host edge ids of the image, sorted.
    pub fn edge_set(&self) -> Vec<EdgeId> {
        let mut ids = self.edge_ids.clone();
        ids.sort_unstable();
        ids
    }

    /// Colours on the image edges, in pattern edge order. `None` if some
    /// image edge is uncoloured.
    pub fn image_colours(&self, c: &crate::colouring::EdgeColouring) -> Option<Vec<u32>> {
        self.edge_ids.iter().map(|&e| c.get(e)).collect()
    }

    /// True iff every image edge is coloured and the colours are pairwise
    /// distinct.
    pub fn is_rainbow(&self, c: &crate::colouring::EdgeColouring) -> bool {
        match self.image_colours(c) {
            Some(mut cols) => {
                cols.sort_unstable();
                cols.windows(2).all(|w| w[0] != w[1])
            }
            None => false,
        }
    }
}

/// Search order over pattern vertices: components in order of smallest
/// vertex, breadth-first inside each, so that all but the first vertex of
/// a component have a previously placed neighbour.
fn search_order(h: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.vertex_count());
    for comp in h.components() {
        let mut queue = std::collections::VecDeque::from([comp[0]]);
        let mut seen: std::collections::BTreeSet<usize> = [comp[0]].into();
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in h.neighbours(v) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// All copies of `h` in `g`, each reported once: a vertex map is emitted
/// only if it is lexicographically minimal among its automorphism orbit,
/// so copies are distinct as edge sets.
pub fn enumerate_copies(g: &Graph, h: &Pattern) -> Vec<Embedding> {
    let hg = h.graph();
    if hg.vertex_count() > g.vertex_count() {
        return Vec::new();
    }
    let order = search_order(hg);
    // earlier pattern neighbours of each vertex, by search position
    let mut pos_of = vec![usize::MAX; hg.vertex_count()];
    for (p, &v) in order.iter().enumerate() {
        pos_of[v] = p;
    }
    let back_neighbours: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| {
            hg.neighbours(v)
                .iter()
                .copied()
                .filter(|&w| pos_of[w] < pos_of[v])
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut map = vec![usize::MAX; hg.vertex_count()];
    let mut used = vec![false; g.vertex_count()];

    fn extend(
        g: &Graph,
        h: &Pattern,
        order: &[usize],
        back: &[Vec<usize>],
        pos: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Embedding>,
    ) {
        if pos == order.len() {
            if is_orbit_minimal(h, map) {
                out.push(Embedding::from_map(g, h, map.clone()));
            }
            return;
        }
        let v = order[pos];
        let candidates: Vec<usize> = match back[pos].first() {
            Some(&anchor) => g.neighbours(map[anchor]).to_vec(),
            None => (0..g.vertex_count()).collect(),
        };
        for cand in candidates {
            if used[cand] || g.degree(cand) < h.graph().degree(v) {
                continue;
            }
            if !back[pos].iter().all(|&w| g.has_edge(map[w], cand)) {
                continue;
            }
            map[v] = cand;
            used[cand] = true;
            extend(g, h, order, back, pos + 1, map, used, out);
            used[cand] = false;
            map[v] = usize::MAX;
        }
    }

    extend(
        g,
        h,
        &order,
        &back_neighbours,
        0,
        &mut map,
        &mut used,
        &mut out,
    );
    out
}

fn is_orbit_minimal(h: &Pattern, map: &[usize]) -> bool {
    // compare map with map∘sigma lexicographically, for every automorphism
    h.automorphisms().iter().all(|sigma| {
        for i in 0..map.len() {
            let a = map[i];
            let b = map[sigma[i]];
            if a < b {
                return true;
            }
            if a > b {
                return false;
            }
        }
        true
    })
}

pub fn count_copies(g: &Graph, h: &Pattern) -> usize {
    enumerate_copies(g, h).len()
}
