//! Rainbow copy detection and the two constructive embeddings: the greedy
//! degeneracy-order embedding into complete hosts, and the seeded tree
//! embedding into regular hosts whose colouring is not a minimum one.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::colouring::{incident_colours, is_m_bounded, is_proper, EdgeColouring};
use crate::copies::{enumerate_copies, Embedding};
use crate::graph::{EdgeId, Graph};
use crate::patterns::{Pattern, PatternClass};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbedError {
    #[error("colouring must be total")]
    ColouringNotTotal,
    #[error("colouring must be proper")]
    ColouringNotProper,
    #[error("colouring must be {0}-bounded")]
    ColouringNotBounded(u32),
    #[error("host must be complete for the greedy embedding")]
    HostNotComplete,
    #[error("host has {got} vertices; the greedy bound needs at least {needed}")]
    HostTooSmall { needed: usize, got: usize },
    #[error("pattern must be a tree which is not a star")]
    PatternNotNonStarTree,
    #[error("host must be regular")]
    HostNotRegular,
    #[error("host must be connected")]
    HostDisconnected,
    #[error("tree on {expected} vertices required for a {degree}-regular host, got {got}")]
    TreeSizeMismatch {
        degree: usize,
        expected: usize,
        got: usize,
    },
    #[error("host girth {got:?} is below the required {need}")]
    GirthTooSmall { need: usize, got: Option<usize> },
    #[error("no adjacent pair sees incomparable colour sets; the colouring uses exactly the regular degree everywhere")]
    NoQualifyingSeedPair,
}

/// First rainbow copy of `h` in `g` under the total proper colouring `c`,
/// by exhaustive scan over the copy enumeration.
pub fn find_rainbow_copy(g: &Graph, c: &EdgeColouring, h: &Pattern) -> Option<Embedding> {
    assert!(c.is_total(), "find_rainbow_copy needs a total colouring");
    assert!(is_proper(g, c), "find_rainbow_copy needs a proper colouring");
    rainbow_copy_unchecked(g, c, h)
}

/// Same scan without the properness requirement; used to revalidate
/// witnesses whose mode is not properness.
pub fn rainbow_copy_unchecked(g: &Graph, c: &EdgeColouring, h: &Pattern) -> Option<Embedding> {
    enumerate_copies(g, h).into_iter().find(|e| e.is_rainbow(c))
}

/// True iff some copy of `h` through `last_edge` is fully coloured and
/// rainbow under the partial colouring. The incremental pruning hook of
/// the forcing search; this standalone form recomputes the copy list.
pub fn has_rainbow_completion_conflict(
    g: &Graph,
    c: &EdgeColouring,
    h: &Pattern,
    last_edge: EdgeId,
) -> bool {
    enumerate_copies(g, h)
        .into_iter()
        .filter(|copy| copy.edge_ids.contains(&last_edge))
        .any(|copy| copy.is_rainbow(c))
}

/// Greedy rainbow embedding of `h` into a coloured complete graph, one
/// vertex at a time along the degeneracy order. At each step the blocked
/// vertices are those whose connecting edges repeat a colour already in
/// the partial image or collide with each other; the host is large enough
/// that an unblocked vertex always remains.
///
/// `m` is the per-vertex colour multiplicity of `c` (1 = proper). The host
/// must have at least m*k*e(h) - m*k + v(h) vertices, k the degeneracy.
pub fn greedy_rainbow_embed(
    g: &Graph,
    c: &EdgeColouring,
    h: &Pattern,
    m: u32,
) -> Result<Embedding, EmbedError> {
    let n = g.vertex_count();
    if (0..n).any(|v| g.degree(v) != n - 1) {
        return Err(EmbedError::HostNotComplete);
    }
    if !c.is_total() {
        return Err(EmbedError::ColouringNotTotal);
    }
    if m == 1 {
        if !is_proper(g, c) {
            return Err(EmbedError::ColouringNotProper);
        }
    } else if !is_m_bounded(g, c, m) {
        return Err(EmbedError::ColouringNotBounded(m));
    }
    let k = h.degeneracy();
    let e = h.graph().edge_count();
    let v = h.graph().vertex_count();
    let needed = (m as usize) * k * e - (m as usize) * k + v;
    if n < needed {
        return Err(EmbedError::HostTooSmall { needed, got: n });
    }

    let order = h.degeneracy_order();
    let mut chosen: Vec<usize> = Vec::with_capacity(v); // host vertex per position
    let mut used = vec![false; n];
    let mut image_colours: Vec<u32> = Vec::new();

    for pos in 0..v {
        let back = order.earlier_neighbours(h.graph(), pos);
        let candidate = (0..n).find(|&w| {
            if used[w] {
                return false;
            }
            let mut new_colours: Vec<u32> = Vec::with_capacity(back.len());
            for &bp in &back {
                let col = c
                    .get(g.edge_id(chosen[bp], w).expect("host is complete"))
                    .expect("colouring is total");
                if image_colours.contains(&col) || new_colours.contains(&col) {
                    return false;
                }
                new_colours.push(col);
            }
            true
        });
        let w = candidate.unwrap_or_else(|| {
            panic!(
                "greedy embedding ran out of candidates at position {pos} \
                 with {n} host vertices; this contradicts the counting bound"
            )
        });
        for &bp in &back {
            let col = c.get(g.edge_id(chosen[bp], w).unwrap()).unwrap();
            image_colours.push(col);
        }
        used[w] = true;
        chosen.push(w);
    }

    let mut map = vec![usize::MAX; v];
    for (pos, &host_v) in chosen.iter().enumerate() {
        map[order.order[pos]] = host_v;
    }
    let embedding = Embedding::from_map(g, h, map);
    assert!(embedding.is_valid(g, h), "greedy embedding must be a copy");
    assert!(embedding.is_rainbow(c), "greedy embedding must be rainbow");
    Ok(embedding)
}

/// Rainbow embedding of a non-star tree on k+2 vertices into a connected
/// k-regular host of girth at least k+2, given a proper colouring under
/// which some adjacent pair u1, u2 has colours at u2 not all present at
/// u1. Such a pair exists whenever the colouring is not a k-edge-colouring
/// pattern, in particular for every proper colouring of a class-2 host.
///
/// The construction walks the tree split at a leaf's neighbour: the far
/// side is embedded from u2 starting with the edge whose colour u1 does
/// not see, the near side from u1, and the leaf goes last; every edge
/// colour is chosen to avoid all colours already in the image.
pub fn rainbow_tree_embed(
    g: &Graph,
    c: &EdgeColouring,
    t: &Pattern,
) -> Result<Embedding, EmbedError> {
    if t.class() != PatternClass::TreeNonStar {
        return Err(EmbedError::PatternNotNonStarTree);
    }
    if !c.is_total() {
        return Err(EmbedError::ColouringNotTotal);
    }
    if !is_proper(g, c) {
        return Err(EmbedError::ColouringNotProper);
    }
    let report = crate::graph::structural_report(g);
    let k = report
        .is_regular_of
        .ok_or(EmbedError::HostNotRegular)?;
    if !report.connected {
        return Err(EmbedError::HostDisconnected);
    }
    let tv = t.graph().vertex_count();
    if tv != k + 2 {
        return Err(EmbedError::TreeSizeMismatch {
            degree: k,
            expected: k + 2,
            got: tv,
        });
    }
    let host_girth = crate::graph::girth(g);
    if let Some(girth) = host_girth {
        if girth < k + 2 {
            return Err(EmbedError::GirthTooSmall {
                need: k + 2,
                got: host_girth,
            });
        }
    }

    // seed pair: first edge, in id order, one of whose endpoints sees a
    // colour the other does not
    let colour_sets: Vec<BTreeSet<u32>> = (0..g.vertex_count())
        .map(|v| incident_colours(g, c, v))
        .collect();
    let mut seed: Option<(usize, usize)> = None;
    'scan: for &(a, b) in g.edges() {
        for (u1, u2) in [(a, b), (b, a)] {
            if !colour_sets[u2].is_subset(&colour_sets[u1]) {
                seed = Some((u1, u2));
                break 'scan;
            }
        }
    }
    let (u1, u2) = seed.ok_or(EmbedError::NoQualifyingSeedPair)?;

    let tree = t.graph();
    // x0: first leaf whose neighbour has a non-leaf neighbour (always the
    // first leaf for a non-star tree); x1 its neighbour; x2 the smallest
    // non-leaf neighbour of x1
    let is_leaf = |v: usize| tree.degree(v) == 1;
    let (x0, x1, x2) = (0..tv)
        .filter(|&v| is_leaf(v))
        .find_map(|leaf| {
            let nb = tree.neighbours(leaf)[0];
            tree.neighbours(nb)
                .iter()
                .copied()
                .find(|&w| !is_leaf(w))
                .map(|w| (leaf, nb, w))
        })
        .expect("a non-star tree has a leaf next to a non-leaf");

    // split T - x0 - the x1x2 edge into the sides containing x1 and x2
    let side_of = |start: usize| -> Vec<usize> {
        let mut seen = vec![false; tv];
        seen[x0] = true;
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        let mut out = vec![start];
        while let Some(v) = queue.pop_front() {
            for &w in tree.neighbours(v) {
                if (v, w) == (x1, x2) || (v, w) == (x2, x1) {
                    continue;
                }
                if !seen[w] {
                    seen[w] = true;
                    out.push(w);
                    queue.push_back(w);
                }
            }
        }
        out
    };
    // BFS order with neighbours ascending: side_of visits in queue order
    // but neighbours() is already sorted, so the output is a valid
    // prefix-tree order with out[0] the root
    let near_side = side_of(x1); // contains x1
    let far_side = side_of(x2); // contains x2

    let parent_within = |side: &[usize], v: usize| -> usize {
        let vpos = side.iter().position(|&x| x == v).unwrap();
        *side[..vpos]
            .iter()
            .find(|&&p| tree.has_edge(p, v))
            .expect("prefix order keeps a parent")
    };

    let mut map = vec![usize::MAX; tv];
    let mut used_hosts: BTreeSet<usize> = BTreeSet::new();
    map[x1] = u1;
    map[x2] = u2;
    used_hosts.insert(u1);
    used_hosts.insert(u2);

    let base_colour = c.get(g.edge_id(u1, u2).unwrap()).unwrap();
    let mut far_colours: Vec<u32> = Vec::new();
    let mut first_far_colour = 0u32;

    for (idx, &z) in far_side.iter().enumerate().skip(1) {
        let parent = parent_within(&far_side, z);
        let anchor = map[parent];
        let chosen = g.neighbours(anchor).iter().copied().find(|&w| {
            if used_hosts.contains(&w) {
                return false;
            }
            let col = c.get(g.edge_id(anchor, w).unwrap()).unwrap();
            if idx == 1 {
                // the first far edge must avoid every colour at u1
                !colour_sets[u1].contains(&col)
            } else {
                col != base_colour && !far_colours.contains(&col)
            }
        });
        let w = chosen.unwrap_or_else(|| {
            panic!("far-side embedding ran out of neighbours at tree vertex {z}")
        });
        let col = c.get(g.edge_id(anchor, w).unwrap()).unwrap();
        if idx == 1 {
            first_far_colour = col;
        }
        far_colours.push(col);
        map[z] = w;
        used_hosts.insert(w);
    }

    let mut near_colours: Vec<u32> = Vec::new();
    for &y in near_side.iter().skip(1) {
        let parent = parent_within(&near_side, y);
        let anchor = map[parent];
        let chosen = g.neighbours(anchor).iter().copied().find(|&w| {
            if used_hosts.contains(&w) {
                return false;
            }
            let col = c.get(g.edge_id(anchor, w).unwrap()).unwrap();
            col != base_colour && !far_colours.contains(&col) && !near_colours.contains(&col)
        });
        let w = chosen.unwrap_or_else(|| {
            panic!("near-side embedding ran out of neighbours at tree vertex {y}")
        });
        near_colours.push(c.get(g.edge_id(anchor, w).unwrap()).unwrap());
        map[y] = w;
        used_hosts.insert(w);
    }

    // the leaf: an unused neighbour of u1 whose edge colour repeats
    // nothing, except possibly the first far colour, which it cannot
    // equal anyway because that colour is absent at u1
    let leaf_host = g.neighbours(u1).iter().copied().find(|&w| {
        if used_hosts.contains(&w) {
            return false;
        }
        let col = c.get(g.edge_id(u1, w).unwrap()).unwrap();
        let mut forbidden = vec![base_colour];
        forbidden.extend(&far_colours);
        forbidden.extend(&near_colours);
        forbidden.retain(|&f| f != first_far_colour);
        !forbidden.contains(&col)
    });
    let u0 = leaf_host
        .unwrap_or_else(|| panic!("no host vertex left for the pendant leaf"));
    let leaf_colour = c.get(g.edge_id(u1, u0).unwrap()).unwrap();
    assert_ne!(
        leaf_colour, first_far_colour,
        "the leaf edge colour is incident to u1, the first far colour is not"
    );
    map[x0] = u0;

    let embedding = Embedding::from_map(g, t, map);
    assert!(embedding.is_valid(g, t), "tree embedding must be a copy");
    assert!(embedding.is_rainbow(c), "tree embedding must be rainbow");
    Ok(embedding)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{
        enumerate_proper_colourings, find_proper_colouring, random_proper_colouring,
    };
    use crate::constructions::{class2_regular, complete_graph, named_graph, nonmono_gadget};
    use crate::reference;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pat(name: &str) -> Pattern {
        Pattern::new(named_graph(name).unwrap()).unwrap()
    }

    #[test]
    fn triangle_forced_colouring_is_rainbow() {
        let g = named_graph("c_3").unwrap();
        let c = EdgeColouring::from_total(vec![1, 2, 3]);
        assert!(find_rainbow_copy(&g, &c, &pat("c_3")).is_some());
    }

    #[test]
    fn alternating_square_has_no_rainbow_c4() {
        let g = named_graph("c_4").unwrap();
        let c = EdgeColouring::from_total(vec![1, 2, 2, 1]);
        assert!(find_rainbow_copy(&g, &c, &pat("c_4")).is_none());
    }

    #[test]
    fn nonmono_with_four_colours_has_rainbow_c4() {
        let g = nonmono_gadget();
        let c = find_proper_colouring(&g, 4).expect("chromatic index is 4");
        assert!(find_rainbow_copy(&g, &c, &pat("c_4")).is_some());
    }

    #[test]
    fn detection_agrees_with_bruteforce() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let cases = [
            ("k4", "c_4"),
            ("k5", "bull"),
            ("petersen", "c_5"),
            ("k_2_4", "c_4"),
            ("prism", "c_4"),
            ("c_6", "p_4"),
        ];
        for (gn, hn) in cases {
            let g = named_graph(gn).unwrap();
            let h = pat(hn);
            for _ in 0..25 {
                let c = random_proper_colouring(&g, &mut rng);
                let found = find_rainbow_copy(&g, &c, &h);
                let brute = reference::has_rainbow_copy_bruteforce(&g, &c, h.graph());
                assert_eq!(found.is_some(), brute, "{gn}/{hn}");
                if let Some(embedding) = found {
                    assert!(embedding.is_valid(&g, &h));
                    assert!(embedding.is_rainbow(&c));
                }
            }
        }
    }

    #[test]
    fn completion_conflict_on_triangle() {
        let g = named_graph("c_3").unwrap();
        let mut c = EdgeColouring::empty(&g);
        c.set(0, 1);
        c.set(1, 2);
        c.set(2, 3);
        assert!(has_rainbow_completion_conflict(&g, &c, &pat("c_3"), 2));
    }

    #[test]
    fn completion_conflict_needs_a_copy_through_the_edge() {
        // the pendant edge of the triangle-with-pendant lies in no triangle
        let g = named_graph("triangle_pendant").unwrap();
        let pendant = g.edge_id(2, 3).unwrap();
        let mut c = EdgeColouring::empty(&g);
        c.set(pendant, 1);
        assert!(!has_rainbow_completion_conflict(&g, &c, &pat("c_3"), pendant));
    }

    #[test]
    fn completion_conflict_in_k24_cross_checked() {
        let g = named_graph("k_2_4").unwrap();
        let h = pat("c_4");
        // colour one 4-cycle copy rainbow, leave the rest open
        let copy = &enumerate_copies(&g, &h)[0];
        let mut c = EdgeColouring::empty(&g);
        for (i, &e) in copy.edge_ids.iter().enumerate() {
            c.set(e, i as u32 + 1);
        }
        let last = *copy.edge_ids.last().unwrap();
        assert!(has_rainbow_completion_conflict(&g, &c, &h, last));
        // and the full detector agrees once the colouring is completed
        let full = crate::colouring::complete_to_proper(&g, &c).unwrap().unwrap();
        assert!(find_rainbow_copy(&g, &full, &h).is_some());
    }

    #[test]
    fn greedy_single_edge() {
        let g = complete_graph(2);
        let c = EdgeColouring::from_total(vec![1]);
        let h = pat("p_2");
        let embedding = greedy_rainbow_embed(&g, &c, &h, 1).unwrap();
        assert_eq!(embedding.edge_ids, vec![0]);
    }

    #[test]
    fn greedy_triangle_in_k7() {
        let g = complete_graph(7);
        let h = pat("c_3");
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let c = random_proper_colouring(&g, &mut rng);
            let embedding = greedy_rainbow_embed(&g, &c, &h, 1).unwrap();
            assert!(embedding.is_rainbow(&c));
        }
    }

    #[test]
    fn greedy_four_cycle_in_k10() {
        let g = complete_graph(10);
        let h = pat("c_4");
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..100 {
            let c = random_proper_colouring(&g, &mut rng);
            assert!(greedy_rainbow_embed(&g, &c, &h, 1).is_ok());
        }
    }

    #[test]
    fn greedy_rejects_small_hosts() {
        let g = complete_graph(6);
        let c = random_proper_colouring(&g, &mut ChaCha8Rng::seed_from_u64(1));
        assert_eq!(
            greedy_rainbow_embed(&g, &c, &pat("c_3"), 1),
            Err(EmbedError::HostTooSmall { needed: 7, got: 6 })
        );
    }

    #[test]
    fn tree_embedding_in_every_colouring_of_c5() {
        let g = named_graph("c_5").unwrap();
        let t = pat("p_4");
        let mut count = 0;
        for c in enumerate_proper_colourings(&g, None) {
            // C_5 is class 2, so every proper colouring qualifies
            let embedding = rainbow_tree_embed(&g, &c, &t).unwrap();
            assert!(embedding.is_rainbow(&c));
            count += 1;
        }
        assert!(count > 0);
    }

    #[test]
    fn tree_embedding_in_cubic_class2_host() {
        let g = class2_regular(3).unwrap();
        let chair = Pattern::new(
            crate::graph::Graph::new(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap(),
        )
        .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            let c = random_proper_colouring(&g, &mut rng);
            let embedding = rainbow_tree_embed(&g, &c, &chair).unwrap();
            assert!(embedding.is_rainbow(&c));
            assert!(embedding.is_valid(&g, &chair));
        }
    }

    #[test]
    fn tree_embedding_rejects_stars() {
        let g = named_graph("c_5").unwrap();
        let c = random_proper_colouring(&g, &mut ChaCha8Rng::seed_from_u64(2));
        assert_eq!(
            rainbow_tree_embed(&g, &c, &pat("star_3")),
            Err(EmbedError::PatternNotNonStarTree)
        );
    }
}
