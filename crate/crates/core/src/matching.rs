//! Perfect matchings in small graphs, the 2-factor left by removing one,
//! free edges of odd cycles, the proper 4-colouring of bridgeless cubic
//! graphs with no rainbow 4-cycle, and the degree-2 extension step.

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::colouring::{is_proper, is_proper_on_domain, EdgeColouring};
use crate::copies::enumerate_copies;
use crate::graph::{structural_report, EdgeId, Graph};
use crate::patterns::Pattern;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has a bridge {0:?}")]
    HasBridge((usize, usize)),
    #[error("graph is not 3-regular (degrees {min}..{max})")]
    NotCubic { min: usize, max: usize },
    #[error("no perfect matching exists")]
    NoPerfectMatching,
    #[error("cycle {0} has even length")]
    EvenCycle(usize),
    #[error("vertex {0} does not have degree 2")]
    NotDegreeTwo(usize),
    #[error("graph must have max degree at most 3")]
    DegreeTooHigh,
    #[error("base colouring must cover exactly the edges away from the new vertex")]
    WrongDomain,
    #[error("base colouring is not proper")]
    BaseNotProper,
    #[error("base colouring already contains a rainbow 4-cycle")]
    BaseHasRainbowC4,
}

/// A perfect matching found by exact backtracking; components of the
/// unmatched part are checked for odd order before branching.
pub fn perfect_matching(g: &Graph) -> Option<Vec<EdgeId>> {
    if !g.vertex_count().is_multiple_of(2) {
        return None;
    }
    let mut matched = vec![false; g.vertex_count()];
    let mut chosen = Vec::with_capacity(g.vertex_count() / 2);
    if extend_matching(g, &mut matched, &mut chosen) {
        chosen.sort_unstable();
        Some(chosen)
    } else {
        None
    }
}

fn extend_matching(g: &Graph, matched: &mut Vec<bool>, chosen: &mut Vec<EdgeId>) -> bool {
    let Some(v) = (0..g.vertex_count()).find(|&v| !matched[v]) else {
        return true;
    };
    if odd_component_exists(g, matched) {
        return false;
    }
    for &w in g.neighbours(v) {
        if !matched[w] {
            matched[v] = true;
            matched[w] = true;
            chosen.push(g.edge_id(v, w).unwrap());
            if extend_matching(g, matched, chosen) {
                return true;
            }
            chosen.pop();
            matched[v] = false;
            matched[w] = false;
        }
    }
    false
}

fn odd_component_exists(g: &Graph, matched: &[bool]) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for start in 0..n {
        if matched[start] || seen[start] {
            continue;
        }
        let mut size = 0usize;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            size += 1;
            for &w in g.neighbours(v) {
                if !matched[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if size % 2 == 1 {
            return true;
        }
    }
    false
}

/// A perfect matching together with the cycles of the leftover 2-factor.
#[derive(Debug, Clone)]
pub struct TwoFactorDecomposition {
    pub matching: Vec<EdgeId>,
    /// vertex sequences; consecutive vertices (cyclically) are adjacent in
    /// the graph minus the matching
    pub cycles: Vec<Vec<usize>>,
}

impl TwoFactorDecomposition {
    pub fn validate(&self, g: &Graph) -> bool {
        // the matching is perfect
        let mut touched = vec![0usize; g.vertex_count()];
        for &e in &self.matching {
            let (u, v) = g.edge(e);
            touched[u] += 1;
            touched[v] += 1;
        }
        if touched.iter().any(|&t| t != 1) {
            return false;
        }
        // the cycles partition the vertices and avoid the matching
        let mut seen = vec![false; g.vertex_count()];
        for cycle in &self.cycles {
            if cycle.len() < 3 {
                return false;
            }
            for i in 0..cycle.len() {
                let u = cycle[i];
                if seen[u] {
                    return false;
                }
                seen[u] = true;
                let v = cycle[(i + 1) % cycle.len()];
                let Some(e) = g.edge_id(u, v) else {
                    return false;
                };
                if self.matching.contains(&e) {
                    return false;
                }
            }
        }
        seen.iter().all(|&b| b)
    }

    pub fn matching_contains(&self, e: EdgeId) -> bool {
        self.matching.binary_search(&e).is_ok()
    }
}

/// Remove a perfect matching from a cubic graph and trace the cycles of
/// what remains.
pub fn two_factor(g: &Graph) -> Result<TwoFactorDecomposition, MatchingError> {
    let report = structural_report(g);
    if report.is_regular_of != Some(3) {
        return Err(MatchingError::NotCubic {
            min: report.min_degree,
            max: report.max_degree,
        });
    }
    let matching = perfect_matching(g).ok_or(MatchingError::NoPerfectMatching)?;
    let in_matching = |e: EdgeId| matching.binary_search(&e).is_ok();

    let mut cycles = Vec::new();
    let mut seen = vec![false; g.vertex_count()];
    for start in 0..g.vertex_count() {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut prev = usize::MAX;
        let mut at = start;
        loop {
            let next = g
                .neighbours(at)
                .iter()
                .copied()
                .find(|&w| w != prev && !in_matching(g.edge_id(at, w).unwrap()))
                .expect("2-factor leaves degree 2 everywhere");
            if next == start {
                break;
            }
            seen[next] = true;
            cycle.push(next);
            prev = at;
            at = next;
        }
        cycles.push(cycle);
    }
    let decomposition = TwoFactorDecomposition { matching, cycles };
    debug_assert!(decomposition.validate(g));
    Ok(decomposition)
}

/// Free edges of an odd cycle of the 2-factor: edge (v_i, v_i+1) is free
/// when none of the three bracketing chords v_i-2 v_i+1, v_i-1 v_i+2,
/// v_i v_i+3 lies in the matching (indices modulo the cycle length).
/// Equivalently, every 4-cycle of the host through a free edge uses at
/// least two matching edges.
pub fn free_edges(
    g: &Graph,
    decomposition: &TwoFactorDecomposition,
    cycle_index: usize,
) -> Result<Vec<EdgeId>, MatchingError> {
    let cycle = &decomposition.cycles[cycle_index];
    let len = cycle.len();
    if len.is_multiple_of(2) {
        return Err(MatchingError::EvenCycle(cycle_index));
    }
    let at = |i: isize| cycle[(i.rem_euclid(len as isize)) as usize];
    let mut out = Vec::new();
    for i in 0..len as isize {
        let brackets = [
            (at(i - 2), at(i + 1)),
            (at(i - 1), at(i + 2)),
            (at(i), at(i + 3)),
        ];
        let blocked = brackets.iter().any(|&(p, q)| {
            p != q
                && g.edge_id(p, q)
                    .is_some_and(|e| decomposition.matching_contains(e))
        });
        if !blocked {
            out.push(g.edge_id(at(i), at(i + 1)).unwrap());
        }
    }
    Ok(out)
}

/// The constructive free-edge scan: with I the set of positions whose
/// distance-3 chord is in the matching, any position i with i+1 and i+2
/// outside I yields a free edge (one step further along when i itself is
/// in I). The result is cross-checked against the bracket definition.
pub fn odd_cycle_free_edge(
    g: &Graph,
    decomposition: &TwoFactorDecomposition,
    cycle_index: usize,
) -> Result<EdgeId, MatchingError> {
    let cycle = &decomposition.cycles[cycle_index];
    let len = cycle.len();
    if len.is_multiple_of(2) {
        return Err(MatchingError::EvenCycle(cycle_index));
    }
    let at = |i: usize| cycle[i % len];
    let in_set = |i: usize| -> bool {
        let p = at(i);
        let q = at(i + 3);
        p != q
            && g.edge_id(p, q)
                .is_some_and(|e| decomposition.matching_contains(e))
    };
    let i = (0..len)
        .find(|&i| !in_set(i + 1) && !in_set(i + 2))
        .expect("a matching cannot block every other position of an odd cycle");
    let edge = if in_set(i) {
        g.edge_id(at(i + 3), at(i + 4)).unwrap()
    } else {
        g.edge_id(at(i + 2), at(i + 3)).unwrap()
    };
    let free = free_edges(g, decomposition, cycle_index)?;
    assert!(
        free.contains(&edge),
        "constructive scan produced a non-free edge; the free-edge argument is broken"
    );
    Ok(edge)
}

/// Proper colouring of a connected bridgeless cubic graph with at most 4
/// colours and no rainbow 4-cycle: the 2-factor minus one free edge per
/// odd cycle alternates colours 1 and 2, the removed free edges take
/// colour 3, the matching takes colour 4. A rainbow 4-cycle would need
/// exactly one free edge and one matching edge, which free edges forbid.
pub fn avoid_rainbow_c4_cubic(g: &Graph) -> Result<EdgeColouring, MatchingError> {
    let report = structural_report(g);
    if report.is_regular_of != Some(3) {
        return Err(MatchingError::NotCubic {
            min: report.min_degree,
            max: report.max_degree,
        });
    }
    if !report.connected {
        return Err(MatchingError::Disconnected);
    }
    if let Some(&bridge) = report.bridges.first() {
        return Err(MatchingError::HasBridge(bridge));
    }
    let decomposition = two_factor(g)?;

    let mut c = EdgeColouring::empty(g);
    for &e in &decomposition.matching {
        c.set(e, 4);
    }
    for (idx, cycle) in decomposition.cycles.iter().enumerate() {
        let len = cycle.len();
        let removed: Option<EdgeId> = if len % 2 == 1 {
            let free = odd_cycle_free_edge(g, &decomposition, idx)?;
            c.set(free, 3);
            Some(free)
        } else {
            None
        };
        // walk the cycle alternating 1/2, starting after the removed edge
        let start = match removed {
            Some(free) => {
                let (a, b) = g.edge(free);
                let pa = cycle.iter().position(|&v| v == a).unwrap();
                let pb = cycle.iter().position(|&v| v == b).unwrap();
                // begin at the later endpoint so the path ends at the earlier
                if (pa + 1) % len == pb {
                    pb
                } else {
                    pa
                }
            }
            None => 0,
        };
        for step in 0..len {
            let u = cycle[(start + step) % len];
            let v = cycle[(start + step + 1) % len];
            let e = g.edge_id(u, v).unwrap();
            if c.get(e).is_none() {
                c.set(e, 1 + (step % 2) as u32);
            }
        }
    }
    assert!(is_proper(g, &c), "the 4-colour scheme must be proper");
    debug_assert!(c.max_colour() <= 4);
    Ok(c)
}

/// Extend a rainbow-4-cycle-free proper colouring of g minus a degree-2
/// vertex over the two missing edges, re-colouring at most one old edge.
/// The three cases are keyed on the common neighbourhood of the two
/// neighbours of `u` (which always contains `u` itself).
pub fn extend_through_degree2(
    g: &Graph,
    u: usize,
    base: &EdgeColouring,
) -> Result<EdgeColouring, MatchingError> {
    if g.degree(u) != 2 {
        return Err(MatchingError::NotDegreeTwo(u));
    }
    if g.max_degree() > 3 {
        return Err(MatchingError::DegreeTooHigh);
    }
    let v1 = g.neighbours(u)[0];
    let v2 = g.neighbours(u)[1];
    let uv1 = g.edge_id(u, v1).unwrap();
    let uv2 = g.edge_id(u, v2).unwrap();

    // the base colouring covers exactly the edges avoiding u
    for e in 0..g.edge_count() {
        let (a, b) = g.edge(e);
        let touches_u = a == u || b == u;
        if touches_u != base.get(e).is_none() {
            return Err(MatchingError::WrongDomain);
        }
    }
    if !is_proper_on_domain(g, base) {
        return Err(MatchingError::BaseNotProper);
    }
    let c4 = Pattern::new(crate::constructions::named_graph("c_4").unwrap()).unwrap();
    let copies = enumerate_copies(g, &c4);
    let away_from_u: Vec<_> = copies
        .iter()
        .filter(|copy| !copy.map.contains(&u))
        .collect();
    if away_from_u.iter().any(|copy| copy.is_rainbow(base)) {
        return Err(MatchingError::BaseHasRainbowC4);
    }

    let alpha = base.max_colour() + 1;
    let beta = base.max_colour() + 2;
    let mut c = base.clone();

    let common: Vec<usize> = g
        .neighbours(v1)
        .iter()
        .copied()
        .filter(|&w| g.has_edge(v2, w))
        .collect();
    // u is always common; degree <= 3 caps the count at 3
    match common.len() {
        1 => {
            c.set(uv1, alpha);
            c.set(uv2, beta);
        }
        3 => {
            let others: Vec<usize> = common.into_iter().filter(|&w| w != u).collect();
            let (w1, w2) = (others[0], others[1]);
            let col = |x: usize, y: usize| base.get(g.edge_id(x, y).unwrap()).unwrap();
            let i = if col(v1, w1) == col(v2, w2) {
                1
            } else if col(v1, w2) == col(v2, w1) {
                2
            } else {
                unreachable!("the 4-cycle through the common neighbours was rainbow");
            };
            let (wi, w_other) = if i == 1 { (w1, w2) } else { (w2, w1) };
            c.set(g.edge_id(v1, w_other).unwrap(), alpha);
            c.set(uv1, col(v2, wi));
            c.set(uv2, alpha);
        }
        2 => {
            let w = *common.iter().find(|&&x| x != u).unwrap();
            let v1w = g.edge_id(v1, w).unwrap();
            let through_v1w: Vec<_> = away_from_u
                .iter()
                .filter(|copy| copy.edge_ids.contains(&v1w))
                .collect();
            if through_v1w.is_empty() {
                c.set(v1w, alpha);
                c.set(uv2, alpha);
                c.set(uv1, beta);
            } else {
                assert_eq!(
                    through_v1w.len(),
                    1,
                    "degree 3 admits one 4-cycle through an edge"
                );
                let copy = through_v1w[0];
                // orient the copy as v1 - w - z1 - z2 - v1
                let pos_v1 = copy.map.iter().position(|&x| x == v1).unwrap();
                let pos_w = copy.map.iter().position(|&x| x == w).unwrap();
                let others: Vec<usize> = copy
                    .map
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != pos_v1 && i != pos_w)
                    .map(|(_, &x)| x)
                    .collect();
                let (z1, z2) = if g.has_edge(others[0], w) {
                    (others[0], others[1])
                } else {
                    (others[1], others[0])
                };
                debug_assert!(g.has_edge(z1, w) && g.has_edge(z2, v1) && g.has_edge(z1, z2));
                let col = |x: usize, y: usize| base.get(g.edge_id(x, y).unwrap()).unwrap();
                if col(v1, w) == col(z1, z2) {
                    c.set(g.edge_id(v1, z2).unwrap(), alpha);
                    c.set(uv1, col(v2, w));
                    c.set(uv2, beta);
                } else if col(v1, z2) == col(w, z1) {
                    c.set(v1w, alpha);
                    c.set(uv2, alpha);
                    c.set(uv1, beta);
                } else {
                    unreachable!("the unique 4-cycle through v1-w was rainbow");
                }
            }
        }
        other => unreachable!("common neighbourhood of size {other} under max degree 3"),
    }

    assert!(is_proper(g, &c), "degree-2 extension must stay proper");
    assert!(
        copies.iter().all(|copy| !copy.is_rainbow(&c)),
        "degree-2 extension produced a rainbow 4-cycle"
    );
    Ok(c)
}

/// Random connected bridgeless cubic graph on `n` vertices (n even, >= 4)
/// by the pairing model with rejection. Seeded and reproducible.
pub fn random_bridgeless_cubic<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 4 && n.is_multiple_of(2), "cubic graphs need even order >= 4");
    loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
        stubs.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(3 * n / 2);
        let mut ok = true;
        for pair in stubs.chunks(2) {
            let (a, b) = (pair[0], pair[1]);
            if a == b || edges.iter().any(|&(x, y)| (x, y) == (a.min(b), a.max(b))) {
                ok = false;
                break;
            }
            edges.push((a.min(b), a.max(b)));
        }
        if !ok {
            continue;
        }
        let g = Graph::new(n, &edges).expect("pairing produced a simple graph");
        let report = structural_report(&g);
        if report.connected && report.bridges.is_empty() {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::complete_to_proper;
    use crate::constructions::named_graph;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn matching_existence() {
        assert!(perfect_matching(&named_graph("k4").unwrap()).is_some());
        assert!(perfect_matching(&named_graph("c_3").unwrap()).is_none());
        assert!(perfect_matching(&named_graph("petersen").unwrap()).is_some());
        assert!(perfect_matching(&named_graph("star_3").unwrap()).is_none());
    }

    #[test]
    fn two_factor_shapes() {
        let prism = named_graph("prism").unwrap();
        let decomposition = two_factor(&prism).unwrap();
        assert!(decomposition.validate(&prism));

        let petersen = named_graph("petersen").unwrap();
        let decomposition = two_factor(&petersen).unwrap();
        assert!(decomposition.validate(&petersen));
    }

    #[test]
    fn prism_triangles_are_all_free() {
        // rungs of the prism form a perfect matching; both triangles stay
        let prism = named_graph("prism").unwrap();
        let rungs: Vec<EdgeId> = [(0, 3), (1, 4), (2, 5)]
            .iter()
            .map(|&(a, b)| prism.edge_id(a, b).unwrap())
            .collect();
        let decomposition = TwoFactorDecomposition {
            matching: rungs,
            cycles: vec![vec![0, 1, 2], vec![3, 4, 5]],
        };
        assert!(decomposition.validate(&prism));
        for idx in 0..2 {
            let free = free_edges(&prism, &decomposition, idx).unwrap();
            assert_eq!(free.len(), 3, "every triangle edge is free");
            let constructive = odd_cycle_free_edge(&prism, &decomposition, idx).unwrap();
            assert!(free.contains(&constructive));
        }
    }

    #[test]
    fn bracket_chord_blocks_freeness() {
        // C_5 cycle v0..v4 with a pendant matching edge configuration:
        // build a host where v0-v3 is a matching chord of the cycle
        let g = Graph::new(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 4),
                (0, 3), // the chord, placed in the matching
                (1, 5),
                (2, 6),
                (4, 5), // filler edges so the decomposition stays plausible
                (5, 6),
            ],
        )
        .unwrap();
        let chord = g.edge_id(0, 3).unwrap();
        let decomposition = TwoFactorDecomposition {
            matching: vec![chord],
            cycles: vec![vec![0, 1, 2, 3, 4]],
        };
        let free = free_edges(&g, &decomposition, 0).unwrap();
        // edge v1-v2 has bracket v0-v3 in the matching, so it is not free
        assert!(!free.contains(&g.edge_id(1, 2).unwrap()));
    }

    #[test]
    fn petersen_outer_cycle_free_edges() {
        let petersen = named_graph("petersen").unwrap();
        let spokes: Vec<EdgeId> = (0..5)
            .map(|i| petersen.edge_id(i, 5 + i).unwrap())
            .collect();
        let decomposition = TwoFactorDecomposition {
            matching: {
                let mut m = spokes;
                m.sort_unstable();
                m
            },
            cycles: vec![vec![0, 1, 2, 3, 4], vec![5, 7, 9, 6, 8]],
        };
        assert!(decomposition.validate(&petersen));
        let free = free_edges(&petersen, &decomposition, 0).unwrap();
        assert_eq!(free.len(), 5, "no chords within the outer cycle");
    }

    #[test]
    fn cubic_colouring_on_named_hosts() {
        let c4 = Pattern::new(named_graph("c_4").unwrap()).unwrap();
        for name in ["k4", "k_3_3", "prism", "petersen"] {
            let g = named_graph(name).unwrap();
            let c = avoid_rainbow_c4_cubic(&g).unwrap();
            assert!(is_proper(&g, &c), "{name}");
            assert!(c.colour_count() <= 4);
            for copy in enumerate_copies(&g, &c4) {
                assert!(!copy.is_rainbow(&c), "{name} has a rainbow 4-cycle");
            }
        }
    }

    #[test]
    fn k33_needs_only_three_colours() {
        // the 2-factor of K_3,3 is a single even 6-cycle
        let g = named_graph("k_3_3").unwrap();
        let c = avoid_rainbow_c4_cubic(&g).unwrap();
        assert!(c.colour_count() <= 3);
    }

    #[test]
    fn cubic_colouring_rejects_bad_hosts() {
        assert!(matches!(
            avoid_rainbow_c4_cubic(&named_graph("c_5").unwrap()),
            Err(MatchingError::NotCubic { .. })
        ));
        // two K_4 blocks joined by a bridge: 3-regular apart from the cut
        let disconnected = named_graph("k4")
            .unwrap()
            .disjoint_union(&named_graph("k4").unwrap());
        assert!(matches!(
            avoid_rainbow_c4_cubic(&disconnected),
            Err(MatchingError::Disconnected)
        ));
    }

    #[test]
    fn free_edges_match_the_four_cycle_characterisation() {
        // an edge is free by the bracket definition iff every 4-cycle of
        // the host through it carries at least two matching edges
        let c4 = Pattern::new(named_graph("c_4").unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let mut hosts: Vec<Graph> = ["k4", "k_3_3", "prism", "petersen"]
            .iter()
            .map(|n| named_graph(n).unwrap())
            .collect();
        for trial in 0..10 {
            hosts.push(random_bridgeless_cubic(8 + 2 * (trial % 4), &mut rng));
        }
        for g in &hosts {
            let decomposition = two_factor(g).unwrap();
            let copies = enumerate_copies(g, &c4);
            for (idx, cycle) in decomposition.cycles.iter().enumerate() {
                if cycle.len() % 2 == 0 {
                    continue;
                }
                let free = free_edges(g, &decomposition, idx).unwrap();
                for i in 0..cycle.len() {
                    let e = g.edge_id(cycle[i], cycle[(i + 1) % cycle.len()]).unwrap();
                    let by_cycles = copies
                        .iter()
                        .filter(|cp| cp.edge_ids.contains(&e))
                        .all(|cp| {
                            cp.edge_ids
                                .iter()
                                .filter(|&&x| decomposition.matching_contains(x))
                                .count()
                                >= 2
                        });
                    assert_eq!(free.contains(&e), by_cycles);
                }
            }
        }
    }

    #[test]
    fn random_cubic_hosts_are_colourable() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let c4 = Pattern::new(named_graph("c_4").unwrap()).unwrap();
        for trial in 0..30 {
            let n = 4 + 2 * (trial % 7);
            let g = random_bridgeless_cubic(n, &mut rng);
            let c = avoid_rainbow_c4_cubic(&g).unwrap();
            assert!(is_proper(&g, &c));
            assert!(enumerate_copies(&g, &c4).iter().all(|cp| !cp.is_rainbow(&c)));
        }
    }

    #[test]
    fn degree2_extension_case_girth5() {
        // C_5: remove vertex 0 conceptually; base colours the P_4 left over
        let g = named_graph("c_5").unwrap();
        let mut base = EdgeColouring::empty(&g);
        for e in 0..g.edge_count() {
            let (a, b) = g.edge(e);
            if a != 0 && b != 0 {
                base.set(e, e as u32 + 1);
            }
        }
        let c = extend_through_degree2(&g, 0, &base).unwrap();
        assert!(is_proper(&g, &c));
    }

    #[test]
    fn degree2_extension_case_three_common() {
        // K_2,3 with u one of the degree-2 side: v1, v2 share {u, w1, w2}
        let g = named_graph("k_2_3").unwrap();
        // degree-2 vertices are 2, 3, 4; pick u = 2
        let u = 2;
        let mut base = EdgeColouring::empty(&g);
        // base = K_2,2 on {0,1} x {3,4}; a proper colouring with no
        // rainbow C_4: alternate two colours
        base.set(g.edge_id(0, 3).unwrap(), 1);
        base.set(g.edge_id(1, 3).unwrap(), 2);
        base.set(g.edge_id(0, 4).unwrap(), 2);
        base.set(g.edge_id(1, 4).unwrap(), 1);
        let c = extend_through_degree2(&g, u, &base).unwrap();
        assert!(is_proper(&g, &c));
    }

    #[test]
    fn degree2_extension_case_unique_c4() {
        // u-v1, u-v2, v1-w, v2-w, v1-z2, w-z1, z1-z2: one C_4 through v1-w
        let g = Graph::new(
            6,
            &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (3, 5), (4, 5)],
        )
        .unwrap();
        // u=0, v1=1, v2=2, w=3, z2=4, z1=5
        let mut base = EdgeColouring::empty(&g);
        let partial_edges = [(1, 3), (2, 3), (1, 4), (3, 5), (4, 5)];
        // colour so the C_4 (1,3,5,4) is not rainbow: c(1,3) = c(4,5)
        let cols = [1u32, 2, 2, 3, 1];
        for (&(a, b), &col) in partial_edges.iter().zip(&cols) {
            base.set(g.edge_id(a, b).unwrap(), col);
        }
        let c = extend_through_degree2(&g, 0, &base).unwrap();
        assert!(is_proper(&g, &c));
    }

    #[test]
    fn degree2_extension_rejects_bad_bases() {
        let g = named_graph("c_5").unwrap();
        let empty = EdgeColouring::empty(&g);
        assert!(matches!(
            extend_through_degree2(&g, 0, &empty),
            Err(MatchingError::WrongDomain)
        ));
    }

    #[test]
    fn subdivided_k4_extension() {
        // the subdivision vertex has degree 2 and its neighbours share
        // three common neighbours, so the recolouring case fires
        let g = named_graph("k4_subdivided").unwrap();
        let u = 4;
        let mut base = EdgeColouring::empty(&g);
        // K_4 minus an edge: colour without a rainbow C_4
        // edges among {0,1,2,3}: (0,2),(0,3),(1,2),(1,3),(2,3)
        let assignment = [(0, 2, 1u32), (0, 3, 2), (1, 2, 2), (1, 3, 1), (2, 3, 3)];
        for (a, b, col) in assignment {
            base.set(g.edge_id(a, b).unwrap(), col);
        }
        let c = extend_through_degree2(&g, u, &base).unwrap();
        assert!(is_proper(&g, &c));
    }

    #[test]
    fn completion_then_extension_round() {
        // sanity: completing a base colouring of a girth-5 host never
        // introduces a 4-cycle, so extension and completion commute there
        let g = named_graph("petersen").unwrap();
        let done = complete_to_proper(&g, &EdgeColouring::empty(&g))
            .unwrap()
            .unwrap();
        assert!(is_proper(&g, &done));
    }
}
