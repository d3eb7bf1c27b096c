//! Builders for the gadget hosts, the named graph catalogue, the explicit
//! colourings with structural guarantees, and the inductive forest host.

use thiserror::Error;

use crate::colouring::{is_proper, is_proper_on_domain, EdgeColouring};
use crate::graph::{girth, structural_report, Graph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("multiplicity must be at least 1, got {0}")]
    MultiplicityTooSmall(usize),
    #[error("class-2 regular hosts are built for degree 2 or 3 only, got {0}")]
    UnsupportedRegularity(usize),
    #[error("power-of-three side is built for exponent 1 or 2, got {0}")]
    UnsupportedExponent(usize),
    #[error("the partial lower-bound colouring needs r >= 2, got {0}")]
    DegenerateMultiplicity(usize),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("input is not a forest (it contains a cycle)")]
    NotAForest,
    #[error("forests with isolated vertices have no host here")]
    IsolatedVertex,
    #[error("stars have no host with max degree e-1")]
    StarForest,
    #[error("the two-edge matching has no host with max degree 1")]
    TwoEdgeMatching,
    #[error("identified tree would have {0} vertices; hosts exist for at most 5")]
    OversizedTree(usize),
    #[error("no identification of components avoids a star")]
    NoNonStarIdentification,
}

/// A cycle blow-up host: for even `cycle_len` = 2K the hubs form a K-cycle
/// through d parallel vertices per arc; for odd lengths a single hub-hub
/// edge closes the cycle. Vertex roles are recorded as labels and exposed
/// through `hubs`/`parallels`.
#[derive(Debug, Clone)]
pub struct Gadget {
    pub graph: Graph,
    pub cycle_len: usize,
    pub multiplicity: usize,
    pub hubs: Vec<usize>,
    /// parallels[i][j] sits between hubs[i] and hubs[(i+1) % hubs.len()]
    pub parallels: Vec<Vec<usize>>,
    /// the closing hub-hub edge of odd-length gadgets
    pub hub_edge: Option<(usize, usize)>,
}

pub fn gadget(cycle_len: usize, multiplicity: usize) -> Result<Gadget, ConstructError> {
    if cycle_len < 3 {
        return Err(ConstructError::CycleTooShort(cycle_len));
    }
    if multiplicity < 1 {
        return Err(ConstructError::MultiplicityTooSmall(multiplicity));
    }
    let d = multiplicity;
    let even = cycle_len.is_multiple_of(2);
    let hub_count = if even { cycle_len / 2 } else { cycle_len.div_ceil(2) };
    let arc_count = if even { hub_count } else { hub_count - 1 };

    let hubs: Vec<usize> = (0..hub_count).collect();
    let mut parallels = Vec::with_capacity(arc_count);
    let mut labels: Vec<String> = (1..=hub_count).map(|i| format!("u{i}")).collect();
    let mut next = hub_count;
    for i in 0..arc_count {
        let group: Vec<usize> = (0..d).map(|j| next + j).collect();
        for j in 0..d {
            labels.push(format!("v{},{}", i + 1, j + 1));
        }
        next += d;
        parallels.push(group);
    }

    let mut edges = Vec::new();
    for i in 0..arc_count {
        let succ = hubs[(i + 1) % hub_count];
        for &p in &parallels[i] {
            edges.push((hubs[i], p));
            edges.push((p, succ));
        }
    }
    let hub_edge = if even {
        None
    } else {
        edges.push((hubs[hub_count - 1], hubs[0]));
        Some((hubs[hub_count - 1], hubs[0]))
    };

    let graph = Graph::new(next, &edges)
        .expect("gadget edges are simple by construction")
        .with_labels(labels);

    // closed-form size checks
    if even {
        debug_assert_eq!(graph.vertex_count(), (cycle_len / 2) * (d + 1));
        debug_assert_eq!(graph.edge_count(), cycle_len * d);
        debug_assert_eq!(graph.max_degree(), 2 * d);
    } else {
        debug_assert_eq!(
            graph.vertex_count(),
            cycle_len.div_ceil(2) + (cycle_len - 1) / 2 * d
        );
        debug_assert_eq!(graph.edge_count(), (cycle_len - 1) * d + 1);
        debug_assert!(graph.max_degree() <= 2 * d);
    }

    Ok(Gadget {
        graph,
        cycle_len,
        multiplicity,
        hubs,
        parallels,
        hub_edge,
    })
}

/// A connected k-regular graph with girth at least k+2 that is not
/// k-edge-colourable. k = 2 gives the five-cycle; k = 3 glues two
/// edge-deleted Petersen graphs through a pair of new adjacent vertices,
/// which leaves a cut vertex and therefore forces chromatic index 4.
pub fn class2_regular(k: usize) -> Result<Graph, ConstructError> {
    match k {
        2 => Ok(named_graph("c_5").unwrap()),
        3 => {
            let petersen = named_graph("petersen").unwrap();
            let mut edges = Vec::new();
            for copy in 0..2 {
                let shift = copy * 10;
                for &(a, b) in petersen.edges() {
                    if (a, b) == (0, 1) {
                        continue; // the deleted edge x_i y_i of each copy
                    }
                    edges.push((a + shift, b + shift));
                }
            }
            let u = 20;
            let v = 21;
            edges.extend([(u, v), (u, 0), (u, 1), (v, 10), (v, 11)]);
            let g = Graph::new(22, &edges).expect("simple by construction");
            debug_assert_eq!(structural_report(&g).is_regular_of, Some(3));
            debug_assert!(girth(&g) >= Some(5));
            Ok(g)
        }
        other => Err(ConstructError::UnsupportedRegularity(other)),
    }
}

/// The nine-vertex host witnessing that forcing is not monotone in the
/// number of colours: an eight-cycle with four spokes to a centre and two
/// long chords.
pub fn nonmono_gadget() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    edges.extend([(0, 8), (2, 8), (4, 8), (6, 8)]);
    edges.extend([(0, 4), (2, 6)]);
    Graph::new(9, &edges).expect("simple by construction")
}

/// Complete bipartite graph on two copies of the vectors over the
/// three-element field, each edge coloured by the difference of its
/// endpoints. The colouring is proper, and no two left vertices can see
/// 3^(r-1)+1 right vertices in pairwise distinct colours.
pub fn z3_coloured_bipartite(r: usize) -> Result<(Graph, EdgeColouring), ConstructError> {
    if r == 0 || r > 2 {
        return Err(ConstructError::UnsupportedExponent(r));
    }
    let side = 3usize.pow(r as u32);
    let mut edges = Vec::with_capacity(side * side);
    for a in 0..side {
        for b in 0..side {
            edges.push((a, side + b));
        }
    }
    let g = Graph::new(2 * side, &edges).expect("simple by construction");
    let mut c = EdgeColouring::empty(&g);
    for a in 0..side {
        for b in 0..side {
            let e = g.edge_id(a, side + b).unwrap();
            c.set(e, 1 + vector_difference(a, b, r) as u32);
        }
    }
    debug_assert!(is_proper(&g, &c));
    Ok((g, c))
}

/// Componentwise difference in base 3, re-encoded as an integer.
fn vector_difference(a: usize, b: usize, r: usize) -> usize {
    let mut out = 0;
    let mut pow = 1;
    let (mut a, mut b) = (a, b);
    for _ in 0..r {
        let da = a % 3;
        let db = b % 3;
        out += ((da + 3 - db) % 3) * pow;
        pow *= 3;
        a /= 3;
        b /= 3;
    }
    out
}

/// The explicit partial colouring of the gadget of cycle length 4r and
/// multiplicity 3(r-1) whose every proper completion avoids a rainbow
/// cycle: edges at even-indexed hubs are coloured j on the incoming side
/// and j+1 (cyclically within each block of three) on the outgoing side.
pub fn lower_bound_partial_colouring(
    r: usize,
) -> Result<(Gadget, EdgeColouring), ConstructError> {
    if r < 2 {
        return Err(ConstructError::DegenerateMultiplicity(r));
    }
    let d = 3 * (r - 1);
    let built = gadget(4 * r, d)?;
    let hub_count = built.hubs.len(); // = 2r
    let mut c = EdgeColouring::empty(&built.graph);
    for i in 1..=hub_count {
        if i % 2 != 0 {
            continue;
        }
        for j in 1..=d {
            let hub = built.hubs[i - 1];
            let par = built.parallels[i - 1][j - 1];
            let succ = built.hubs[i % hub_count];
            let incoming = built.graph.edge_id(hub, par).unwrap();
            let outgoing = built.graph.edge_id(par, succ).unwrap();
            c.set(incoming, j as u32);
            let out_colour = if j % 3 != 0 { j + 1 } else { j - 2 };
            c.set(outgoing, out_colour as u32);
        }
    }
    debug_assert!(is_proper_on_domain(&built.graph, &c));
    Ok((built, c))
}

/// Graph catalogue keyed by name. Parameterised families use suffixes:
/// `c_7`, `p_4`, `star_3`, `matching_2`, `k_2_4`.
pub fn named_graph(name: &str) -> Result<Graph, ConstructError> {
    let key = name.trim().to_ascii_lowercase();
    let make = |n: usize, edges: &[(usize, usize)]| Graph::new(n, edges).unwrap();
    match key.as_str() {
        "petersen" => {
            let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
            edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
            edges.extend((0..5).map(|i| (i, 5 + i)));
            Ok(make(10, &edges))
        }
        "k4" => Ok(complete(4)),
        "k5" => Ok(complete(5)),
        "k33" => named_graph("k_3_3"),
        "k24" => named_graph("k_2_4"),
        "k23" => named_graph("k_2_3"),
        "prism" => Ok(make(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )),
        "k4_subdivided" => Ok(make(
            5,
            &[(0, 4), (1, 4), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )),
        "bull" => Ok(make(5, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)])),
        "triangle_pendant" => Ok(make(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])),
        "nonmono" => Ok(nonmono_gadget()),
        _ => {
            if let Some(n) = key.strip_prefix("c_").and_then(|s| s.parse::<usize>().ok()) {
                if n < 3 {
                    return Err(ConstructError::CycleTooShort(n));
                }
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                return Ok(make(n, &edges));
            }
            if let Some(n) = key.strip_prefix("p_").and_then(|s| s.parse::<usize>().ok()) {
                if n < 2 {
                    return Err(ConstructError::UnknownName(name.into()));
                }
                let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
                return Ok(make(n, &edges));
            }
            if let Some(n) = key.strip_prefix("star_").and_then(|s| s.parse::<usize>().ok()) {
                if n < 1 {
                    return Err(ConstructError::UnknownName(name.into()));
                }
                let edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
                return Ok(make(n + 1, &edges));
            }
            if let Some(n) = key
                .strip_prefix("matching_")
                .and_then(|s| s.parse::<usize>().ok())
            {
                if n < 1 {
                    return Err(ConstructError::UnknownName(name.into()));
                }
                let edges: Vec<_> = (0..n).map(|i| (2 * i, 2 * i + 1)).collect();
                return Ok(make(2 * n, &edges));
            }
            if let Some(rest) = key.strip_prefix("k_") {
                let mut parts = rest.split('_');
                if let (Some(s), Some(t), None) = (parts.next(), parts.next(), parts.next()) {
                    if let (Ok(s), Ok(t)) = (s.parse::<usize>(), t.parse::<usize>()) {
                        if s >= 1 && t >= 1 {
                            let mut edges = Vec::new();
                            for a in 0..s {
                                for b in 0..t {
                                    edges.push((a, s + b));
                                }
                            }
                            return Ok(make(s + t, &edges));
                        }
                    }
                }
            }
            Err(ConstructError::UnknownName(name.into()))
        }
    }
}

fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn complete_graph(n: usize) -> Graph {
    complete(n)
}

/// Host for a forest with max degree e(f) - 1, by induction on the number
/// of components: a single non-star tree on k+2 vertices is hosted by the
/// class-2 k-regular graph; a forest is reduced by identifying one vertex
/// of its smallest component with a vertex of the rest so the result is
/// not a star, and the host is binom(a+b, a) + 1 disjoint copies of the
/// reduced forest's host.
pub fn forest_host(f: &Graph) -> Result<Graph, ConstructError> {
    if girth(f).is_some() {
        return Err(ConstructError::NotAForest);
    }
    if (0..f.vertex_count()).any(|v| f.degree(v) == 0) {
        return Err(ConstructError::IsolatedVertex);
    }
    let components = f.components();
    // the recursion bottoms out on a single tree with this many vertices
    let final_tree = f.vertex_count() - (components.len() - 1);
    if final_tree > 5 {
        return Err(ConstructError::OversizedTree(final_tree));
    }

    if components.len() == 1 {
        if is_star(f) {
            return Err(ConstructError::StarForest);
        }
        // tree on k+2 vertices, k in {2, 3} after the size check above
        let k = f.vertex_count() - 2;
        return class2_regular(k);
    }

    if f.edge_count() == 2 && components.len() == 2 {
        return Err(ConstructError::TwoEdgeMatching);
    }

    // T = component with the fewest edges (ties by first appearance)
    let edges_in = |comp: &[usize]| {
        f.edges()
            .iter()
            .filter(|&&(a, _)| comp.binary_search(&a).is_ok())
            .count()
    };
    let t_index = (0..components.len())
        .min_by_key(|&i| (edges_in(&components[i]), i))
        .unwrap();
    let t_vertices = &components[t_index];
    let a = edges_in(t_vertices);
    let b = f.edge_count() - a;

    for &t in t_vertices {
        for s in 0..f.vertex_count() {
            if t_vertices.binary_search(&s).is_ok() {
                continue;
            }
            let reduced = identify(f, t, s);
            if !is_star_component_wise(&reduced) {
                let base_host = forest_host(&reduced)?;
                let copies = binomial(a + b, a) + 1;
                let mut host = base_host.clone();
                for _ in 1..copies {
                    host = host.disjoint_union(&base_host);
                }
                return Ok(host);
            }
        }
    }
    Err(ConstructError::NoNonStarIdentification)
}

/// Merge vertex `t` into vertex `s` (t's edges are redirected to s).
fn identify(f: &Graph, t: usize, s: usize) -> Graph {
    let remap = |v: usize| {
        let v = if v == t { s } else { v };
        if v > t {
            v - 1
        } else {
            v
        }
    };
    let edges: Vec<_> = f.edges().iter().map(|&(u, v)| (remap(u), remap(v))).collect();
    Graph::new(f.vertex_count() - 1, &edges).expect("identifying across components stays simple")
}

fn is_star(tree: &Graph) -> bool {
    let m = tree.edge_count();
    m >= 1 && (0..tree.vertex_count()).any(|v| tree.degree(v) == m)
}

/// A forest whose every edge is incident to one centre vertex; for a
/// connected graph this is the usual star test.
fn is_star_component_wise(f: &Graph) -> bool {
    f.components().len() == 1 && is_star(f)
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    let mut out: u128 = 1;
    for i in 0..k {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(out).expect("binomial fits usize at desk scale")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{chromatic_index, find_proper_colouring};
    use crate::copies::count_copies;
    use crate::patterns::Pattern;

    #[test]
    fn gadget_rejects_bad_parameters() {
        assert!(matches!(gadget(2, 1), Err(ConstructError::CycleTooShort(2))));
        assert!(matches!(
            gadget(4, 0),
            Err(ConstructError::MultiplicityTooSmall(0))
        ));
    }

    #[test]
    fn gadget_4_2_is_k24() {
        let g = gadget(4, 2).unwrap().graph;
        let k24 = named_graph("k_2_4").unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 8);
        // a copy of K_{2,4} using all 8 edges is an isomorphism
        let pat = Pattern::new(k24).unwrap();
        assert!(count_copies(&g, &pat) >= 1);
    }

    #[test]
    fn gadget_3_1_is_triangle() {
        let g = gadget(3, 1).unwrap().graph;
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn gadget_5_3_counts() {
        let g = gadget(5, 3).unwrap().graph;
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.edge_count(), 13);
        assert_eq!(g.max_degree(), 6);
    }

    #[test]
    fn gadget_size_formulas_hold() {
        for len in 3..=8 {
            for d in 1..=4 {
                let g = gadget(len, d).unwrap().graph;
                if len % 2 == 0 {
                    assert_eq!(g.vertex_count(), len / 2 * (d + 1));
                    assert_eq!(g.edge_count(), len * d);
                    assert_eq!(g.max_degree(), 2 * d);
                } else {
                    assert_eq!(g.vertex_count(), len.div_ceil(2) + (len - 1) / 2 * d);
                    assert_eq!(g.edge_count(), (len - 1) * d + 1);
                    assert!(g.max_degree() <= 2 * d);
                }
            }
        }
    }

    #[test]
    fn class2_host_for_degree_two_is_c5() {
        let g = class2_regular(2).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(chromatic_index(&g), 3);
    }

    #[test]
    fn class2_host_for_degree_three_structure() {
        let g = class2_regular(3).unwrap();
        let report = structural_report(&g);
        assert_eq!(g.vertex_count(), 22);
        assert!(report.connected);
        assert_eq!(report.is_regular_of, Some(3));
        assert_eq!(girth(&g), Some(5));
        assert!(report.cut_vertices.contains(&20));
        assert!(class2_regular(4).is_err());
    }

    #[test]
    fn nonmono_gadget_counts() {
        let g = nonmono_gadget();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.edge_count(), 14);
        assert_eq!(g.max_degree(), 4);
    }

    #[test]
    fn z3_side_three_properties() {
        let (g, c) = z3_coloured_bipartite(1).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 9);
        assert!(is_proper(&g, &c));
        assert_eq!(c.colour_count(), 3);
        // each colour class is a perfect matching
        for colour in c.used_colours() {
            let edges: Vec<_> = (0..g.edge_count())
                .filter(|&e| c.get(e) == Some(colour))
                .map(|e| g.edge(e))
                .collect();
            assert_eq!(edges.len(), 3);
            let mut touched: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            touched.sort_unstable();
            touched.dedup();
            assert_eq!(touched.len(), 6);
        }
        assert!(z3_coloured_bipartite(0).is_err());
        assert!(z3_coloured_bipartite(3).is_err());
    }

    #[test]
    fn z3_side_nine_is_proper() {
        let (g, c) = z3_coloured_bipartite(2).unwrap();
        assert_eq!(g.vertex_count(), 18);
        assert_eq!(g.edge_count(), 81);
        assert!(is_proper(&g, &c));
        assert_eq!(c.colour_count(), 9);
    }

    #[test]
    fn lower_bound_colouring_structure() {
        let (built, c) = lower_bound_partial_colouring(2).unwrap();
        assert_eq!(built.cycle_len, 8);
        assert_eq!(built.multiplicity, 3);
        assert!(is_proper_on_domain(&built.graph, &c));
        let used = c.used_colours();
        assert_eq!(used.into_iter().collect::<Vec<_>>(), vec![1, 2, 3]);
        // exactly the edges at even hubs are coloured: 2 hubs * 3 * 2 edges
        assert_eq!(c.domain().count(), 12);
        assert!(lower_bound_partial_colouring(1).is_err());
    }

    #[test]
    fn named_graph_catalogue() {
        assert_eq!(named_graph("k4_subdivided").unwrap().vertex_count(), 5);
        assert_eq!(named_graph("k4_subdivided").unwrap().edge_count(), 7);
        let bull = named_graph("bull").unwrap();
        assert_eq!((bull.vertex_count(), bull.edge_count()), (5, 5));
        assert_eq!(named_graph("c_5").unwrap().edge_count(), 5);
        assert_eq!(named_graph("k_2_4").unwrap().max_degree(), 4);
        assert!(named_graph("florp").is_err());
        assert!(named_graph("c_2").is_err());
    }

    #[test]
    fn forest_host_base_case() {
        let p4 = named_graph("p_4").unwrap();
        let host = forest_host(&p4).unwrap();
        assert_eq!(host.vertex_count(), 5);
        assert_eq!(host.edge_count(), 5);
        assert_eq!(structural_report(&host).is_regular_of, Some(2));
    }

    #[test]
    fn forest_host_inductive_case() {
        let f = named_graph("p_3")
            .unwrap()
            .disjoint_union(&named_graph("p_2").unwrap());
        let host = forest_host(&f).unwrap();
        // four disjoint copies of the five-cycle
        assert_eq!(host.vertex_count(), 20);
        assert_eq!(host.edge_count(), 20);
        assert_eq!(host.components().len(), 4);
        assert!(host.max_degree() < f.edge_count());
    }

    #[test]
    fn forest_host_rejections() {
        assert_eq!(
            forest_host(&named_graph("star_4").unwrap()),
            Err(ConstructError::StarForest)
        );
        assert_eq!(
            forest_host(&named_graph("matching_2").unwrap()),
            Err(ConstructError::TwoEdgeMatching)
        );
        assert_eq!(
            forest_host(&named_graph("c_4").unwrap()),
            Err(ConstructError::NotAForest)
        );
        let p4 = named_graph("p_4").unwrap();
        let big = p4.disjoint_union(&p4);
        assert_eq!(forest_host(&big), Err(ConstructError::OversizedTree(7)));
        let lonely = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(forest_host(&lonely), Err(ConstructError::IsolatedVertex));
    }

    #[test]
    fn forest_host_degree_bound_holds() {
        let cases = [
            named_graph("p_4").unwrap(),
            named_graph("p_5").unwrap(),
            named_graph("p_3")
                .unwrap()
                .disjoint_union(&named_graph("p_2").unwrap()),
            named_graph("matching_3").unwrap(),
        ];
        for f in cases {
            let host = forest_host(&f).unwrap();
            assert!(
                host.max_degree() < f.edge_count(),
                "host degree {} exceeds {}",
                host.max_degree(),
                f.edge_count() - 1
            );
        }
    }

    #[test]
    fn class2_host_is_not_three_edge_colourable() {
        let g = class2_regular(3).unwrap();
        assert!(find_proper_colouring(&g, 3).is_none());
        assert_eq!(chromatic_index(&g), 4);
    }
}
