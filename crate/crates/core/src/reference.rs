//! Independent reference implementations used to cross-check the main
//! algorithms. Everything here is deliberately naive: plain injective-map
//! scans, set-partition enumeration and basic-solution enumeration, kept
//! free of the data structures the production paths rely on.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::colouring::EdgeColouring;
use crate::graph::Graph;

/// Number of injective maps h -> g carrying every pattern edge to a host
/// edge. Counts maps, not copies; divide by the automorphism count of `h`
/// to compare with copy enumeration.
pub fn count_injective_homs(g: &Graph, h: &Graph) -> usize {
    let mut count = 0usize;
    let mut image = vec![usize::MAX; h.vertex_count()];
    let mut used = vec![false; g.vertex_count()];

    fn extend(
        g: &Graph,
        h: &Graph,
        pos: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        count: &mut usize,
    ) {
        if pos == h.vertex_count() {
            *count += 1;
            return;
        }
        for cand in 0..g.vertex_count() {
            if used[cand] {
                continue;
            }
            let ok = (0..pos)
                .all(|earlier| !h.has_edge(earlier, pos) || g.has_edge(image[earlier], cand));
            if ok {
                image[pos] = cand;
                used[cand] = true;
                extend(g, h, pos + 1, image, used, count);
                used[cand] = false;
            }
        }
    }

    extend(g, h, 0, &mut image, &mut used, &mut count);
    count
}

/// True iff some injective map embeds `h` rainbow under `c`: all pattern
/// edges land on host edges with pairwise distinct colours.
pub fn has_rainbow_copy_bruteforce(g: &Graph, c: &EdgeColouring, h: &Graph) -> bool {
    let mut image = vec![usize::MAX; h.vertex_count()];
    let mut used = vec![false; g.vertex_count()];

    fn extend(
        g: &Graph,
        c: &EdgeColouring,
        h: &Graph,
        pos: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == h.vertex_count() {
            let mut cols = Vec::new();
            for &(a, b) in h.edges() {
                match g.edge_id(image[a], image[b]).and_then(|e| c.get(e)) {
                    Some(col) => cols.push(col),
                    None => return false,
                }
            }
            cols.sort_unstable();
            return cols.windows(2).all(|w| w[0] != w[1]);
        }
        for cand in 0..g.vertex_count() {
            if used[cand] {
                continue;
            }
            let ok = (0..pos)
                .all(|earlier| !h.has_edge(earlier, pos) || g.has_edge(image[earlier], cand));
            if ok {
                image[pos] = cand;
                used[cand] = true;
                if extend(g, c, h, pos + 1, image, used) {
                    return true;
                }
                used[cand] = false;
            }
        }
        false
    }

    extend(g, c, h, 0, &mut image, &mut used)
}

/// Visit every partition of the edge set whose blocks are matchings; each
/// partition is handed over as a total colouring (block index + 1). These
/// are exactly the proper colourings up to colour renaming.
pub fn for_each_matching_partition<F: FnMut(&EdgeColouring) -> bool>(g: &Graph, mut f: F) -> bool {
    let m = g.edge_count();
    let mut block_of: Vec<u32> = vec![0; m];

    fn conflicts(g: &Graph, block_of: &[u32], upto: usize, edge: usize, block: u32) -> bool {
        let (u, v) = g.edge(edge);
        (0..upto).any(|other| {
            block_of[other] == block && {
                let (a, b) = g.edge(other);
                a == u || a == v || b == u || b == v
            }
        })
    }

    fn extend<F: FnMut(&EdgeColouring) -> bool>(
        g: &Graph,
        pos: usize,
        blocks_used: u32,
        block_of: &mut Vec<u32>,
        f: &mut F,
    ) -> bool {
        if pos == g.edge_count() {
            let c = EdgeColouring::from_total(block_of.iter().map(|&b| b + 1).collect());
            return f(&c);
        }
        for block in 0..=blocks_used.min(pos as u32) {
            if !conflicts(g, block_of, pos, pos, block) {
                block_of[pos] = block;
                let next_used = blocks_used.max(block + 1);
                if !extend(g, pos + 1, next_used, block_of, f) {
                    return false;
                }
            }
        }
        true
    }

    extend(g, 0, 0, &mut block_of, &mut f)
}

pub fn count_matching_partitions(g: &Graph) -> usize {
    let mut count = 0;
    for_each_matching_partition(g, |_| {
        count += 1;
        true
    });
    count
}

/// Brute-force forcing check: does every proper colouring (enumerated as a
/// matching partition) contain a rainbow copy of `h`? Returns the first
/// colouring with no rainbow copy, if any.
pub fn forces_bruteforce(g: &Graph, h: &Graph) -> Option<EdgeColouring> {
    let mut witness = None;
    for_each_matching_partition(g, |c| {
        if has_rainbow_copy_bruteforce(g, c, h) {
            true
        } else {
            witness = Some(c.clone());
            false
        }
    });
    witness
}

/// Girth by explicit enumeration of simple cycles: DFS paths anchored at
/// their smallest vertex.
pub fn girth_by_cycle_enumeration(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;

    fn dfs(
        g: &Graph,
        start: usize,
        current: usize,
        visited: &mut Vec<bool>,
        length: usize,
        best: &mut Option<usize>,
    ) {
        for &next in g.neighbours(current) {
            if next == start && length >= 2 {
                let cycle = length + 1;
                *best = Some(best.map_or(cycle, |b| b.min(cycle)));
            } else if next > start && !visited[next] {
                visited[next] = true;
                dfs(g, start, next, visited, length + 1, best);
                visited[next] = false;
            }
        }
    }

    for start in 0..n {
        let mut visited = vec![false; n];
        visited[start] = true;
        dfs(g, start, start, &mut visited, 0, &mut best);
    }
    best
}

/// Optimal value of `max sum(y)` subject to `M y <= 1`, `y >= 0`, found by
/// enumerating basic solutions: every subset of n constraints (chosen from
/// the n rows and n sign constraints) is solved exactly and feasibility is
/// checked. Assumes the feasible region is bounded, which holds whenever
/// every diagonal entry of `M` is positive.
pub fn lp_bruteforce(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    assert!(n > 0);
    let one = BigRational::one();
    let mut best: Option<BigRational> = None;

    // constraint index < n: row i of M tight; >= n: y_{i-n} = 0
    let total = 2 * n;
    let mut chosen = Vec::with_capacity(n);
    enumerate_subsets(total, n, &mut chosen, &mut |subset: &[usize]| {
        let mut a = vec![vec![BigRational::zero(); n]; n];
        let mut b = vec![BigRational::zero(); n];
        for (r, &cons) in subset.iter().enumerate() {
            if cons < n {
                a[r].clone_from_slice(&m[cons]);
                b[r] = one.clone();
            } else {
                a[r][cons - n] = one.clone();
            }
        }
        if let Some(y) = solve_linear(a, b) {
            // feasibility
            let feasible = y.iter().all(|v| *v >= BigRational::zero())
                && m.iter().all(|row| {
                    let lhs: BigRational = row
                        .iter()
                        .zip(&y)
                        .map(|(c, v)| c * v)
                        .fold(BigRational::zero(), |acc, t| acc + t);
                    lhs <= one
                });
            if feasible {
                let obj: BigRational = y.iter().cloned().fold(BigRational::zero(), |a, v| a + v);
                if best.as_ref().is_none_or(|b| obj > *b) {
                    best = Some(obj);
                }
            }
        }
    });
    best.expect("y = 0 is always feasible")
}

fn enumerate_subsets<F: FnMut(&[usize])>(
    total: usize,
    want: usize,
    chosen: &mut Vec<usize>,
    f: &mut F,
) {
    if chosen.len() == want {
        f(chosen);
        return;
    }
    let start = chosen.last().map_or(0, |&l| l + 1);
    for next in start..total {
        if total - next < want - chosen.len() {
            break;
        }
        chosen.push(next);
        enumerate_subsets(total, want, chosen, f);
        chosen.pop();
    }
}

/// Exact Gaussian elimination; `None` when the system is singular.
pub fn solve_linear(
    mut a: Vec<Vec<BigRational>>,
    mut b: Vec<BigRational>,
) -> Option<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].clone();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = &a[r][col] / &inv;
                for k in col..n {
                    let sub = &factor * &a[col][k];
                    a[r][k] = &a[r][k] - sub;
                }
                let sub = &factor * &b[col];
                b[r] = &b[r] - sub;
            }
        }
    }
    Some(
        (0..n)
            .map(|i| &b[i] / &a[i][i])
            .collect(),
    )
}
