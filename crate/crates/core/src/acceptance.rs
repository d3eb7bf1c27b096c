//! The tiered verification suite: each criterion exercises one headline
//! guarantee end to end at its stated budget and reports one pass/fail
//! line. The fast tier is the gate; the full tier adds the long forcing
//! run over the forest host.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certify::{
    forces_with, smallest_forcing_multiplicity, Mode, MultiplicityScan, SearchOptions, Verdict,
};
use crate::colouring::{
    chromatic_index, complete_to_proper, enumerate_proper_colourings, is_proper,
    random_m_bounded_colouring, random_proper_colouring,
};
use crate::constructions::{
    class2_regular, complete_graph, forest_host, gadget, lower_bound_partial_colouring,
    named_graph, nonmono_gadget, z3_coloured_bipartite,
};
use crate::copies::enumerate_copies;
use crate::families::{
    build_gadget_families_on, cross_intersecting_check, decode_gadget_system,
    disjoint_representatives, width_criterion_check, Element,
};
use crate::graph::{girth, structural_report, Graph};
use crate::matching::{avoid_rainbow_c4_cubic, random_bridgeless_cubic};
use crate::patterns::Pattern;
use crate::rainbow::{find_rainbow_copy, greedy_rainbow_embed, rainbow_tree_embed};
use crate::reference;

pub const DEFAULT_SEED: u64 = 0x00ab_5eed;

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: usize,
    pub label: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} [{}] {} — {} ({} ms)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.label,
            self.detail,
            self.millis
        )
    }
}

fn finish(
    id: usize,
    label: &'static str,
    started: Instant,
    result: Result<String, String>,
) -> CriterionReport {
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionReport {
        id,
        label,
        passed,
        detail,
        millis: started.elapsed().as_millis(),
    }
}

fn pattern(name: &str) -> Pattern {
    Pattern::new(named_graph(name).expect("catalogue name")).expect("catalogue pattern")
}

/// Gadget multiplicity thresholds for short cycles: 1, 2 and 3.
pub fn criterion_1_multiplicities() -> CriterionReport {
    let started = Instant::now();
    let run = || -> Result<String, String> {
        let opts = SearchOptions::default();

        let t3 = Instant::now();
        let d3 = smallest_forcing_multiplicity(3, 2, &opts).map_err(|e| e.to_string())?;
        let ok3 = matches!(d3, MultiplicityScan::Found { multiplicity: 1, .. });
        if !ok3 || t3.elapsed() > Duration::from_secs(10) {
            return Err(format!("triangle threshold wrong or slow: {d3:?}"));
        }

        let t4 = Instant::now();
        let d4 = smallest_forcing_multiplicity(4, 3, &opts).map_err(|e| e.to_string())?;
        let ok4 = matches!(d4, MultiplicityScan::Found { multiplicity: 2, .. });
        if !ok4 || t4.elapsed() > Duration::from_secs(10) {
            return Err(format!("4-cycle threshold wrong or slow: {d4:?}"));
        }

        let c5 = pattern("c_5");
        let budget = SearchOptions {
            budget_time: Some(Duration::from_secs(600)),
            ..SearchOptions::default()
        };
        let low = forces_with(&gadget(5, 2).unwrap().graph, &c5, Mode::Proper, &budget)
            .map_err(|e| e.to_string())?;
        if low.verdict != Verdict::WitnessFound {
            return Err(format!("multiplicity 2 should admit a witness: {:?}", low.verdict));
        }
        let high = forces_with(&gadget(5, 3).unwrap().graph, &c5, Mode::Proper, &budget)
            .map_err(|e| e.to_string())?;
        if high.verdict != Verdict::Forces {
            return Err(format!(
                "multiplicity 3 should force (got {:?}; inconclusive counts as failure)",
                high.verdict
            ));
        }
        Ok(format!(
            "thresholds 1, 2, 3 confirmed; 5-cycle forcing search used {} nodes",
            high.stats.nodes
        ))
    };
    finish(1, "cycle gadget thresholds", started, run())
}

/// The 4-cycle value: the two-hub gadget forces from above, the cubic
/// colouring scheme defeats every max-degree-3 host from below.
pub fn criterion_2_four_cycle_value(seed: u64) -> CriterionReport {
    let started = Instant::now();
    let run = || -> Result<String, String> {
        let upper_start = Instant::now();
        let cert = forces_with(
            &named_graph("k_2_4").unwrap(),
            &pattern("c_4"),
            Mode::Proper,
            &SearchOptions::default(),
        )
        .map_err(|e| e.to_string())?;
        if cert.verdict != Verdict::Forces || upper_start.elapsed() > Duration::from_secs(10) {
            return Err(format!("upper side failed: {:?}", cert.verdict));
        }

        let lower_start = Instant::now();
        let c4 = pattern("c_4");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut checked = 0usize;
        let mut verify = |g: &Graph, tag: &str| -> Result<(), String> {
            let c = avoid_rainbow_c4_cubic(g).map_err(|e| format!("{tag}: {e}"))?;
            if !is_proper(g, &c) {
                return Err(format!("{tag}: colouring not proper"));
            }
            if let Some(copy) = enumerate_copies(g, &c4).iter().find(|cp| cp.is_rainbow(&c)) {
                return Err(format!("{tag}: rainbow 4-cycle on edges {:?}", copy.edge_ids));
            }
            checked += 1;
            Ok(())
        };
        for name in ["k4", "k_3_3", "prism", "petersen"] {
            verify(&named_graph(name).unwrap(), name)?;
        }
        for trial in 0..1000usize {
            let n = 4 + 2 * (trial % 7); // 4..=16
            let g = random_bridgeless_cubic(n, &mut rng);
            verify(&g, &format!("random cubic #{trial} (n={n})"))?;
        }
        if lower_start.elapsed() > Duration::from_secs(120) {
            return Err("lower side exceeded two minutes".into());
        }
        Ok(format!(
            "two-hub host forces; {checked} cubic hosts coloured without a rainbow 4-cycle"
        ))
    };
    finish(2, "the 4-cycle value is 4", started, run())
}

/// Forcing is not monotone in the palette size.
pub fn criterion_3_nonmonotonicity() -> CriterionReport {
    let started = Instant::now();
    let run = || -> Result<String, String> {
        let g = nonmono_gadget();
        if chromatic_index(&g) != 4 {
            return Err("chromatic index is not 4".into());
        }
        let c4 = pattern("c_4");
        let palette_start = Instant::now();
        let limited = forces_with(&g, &c4, Mode::PaletteLimited(4), &SearchOptions::default())
            .map_err(|e| e.to_string())?;
        if limited.verdict != Verdict::Forces || palette_start.elapsed() > Duration::from_secs(60)
        {
            return Err(format!("4-colour run: {:?}", limited.verdict));
        }
        let open = forces_with(&g, &c4, Mode::Proper, &SearchOptions::default())
            .map_err(|e| e.to_string())?;
        if open.verdict != Verdict::WitnessFound {
            return Err(format!("unrestricted run: {:?}", open.verdict));
        }
        // independent revalidation on top of the certificate's own
        let witness = open.witness_colouring().unwrap();
        if !is_proper(&g, &witness) {
            return Err("witness is not proper".into());
        }
        if reference::has_rainbow_copy_bruteforce(&g, &witness, c4.graph()) {
            return Err("witness contains a rainbow 4-cycle".into());
        }
        Ok(format!(
            "forces with 4 colours ({} nodes), witness with {}",
            limited.stats.nodes,
            witness.colour_count()
        ))
    };
    finish(3, "palette non-monotonicity gadget", started, run())
}

/// The greedy degeneracy-order embedding never fails at its bound.
pub fn criterion_4_greedy_embedding(seed: u64) -> CriterionReport {
    let started = Instant::now();
    let run = || -> Result<String, String> {
        let proper_start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x04);
        let mut embeddings = 0usize;
        for name in ["p_2", "p_4", "c_3", "c_4", "k4"] {
            let h = pattern(name);
            let k = h.degeneracy();
            let n = k * h.graph().edge_count() - k + h.graph().vertex_count();
            let host = complete_graph(n);
            for trial in 0..1000usize {
                let c = random_proper_colouring(&host, &mut rng);
                greedy_rainbow_embed(&host, &c, &h, 1)
                    .map_err(|e| format!("{name} trial {trial}: {e}"))?;
                embeddings += 1;
            }
        }
        if proper_start.elapsed() > Duration::from_secs(60) {
            return Err("proper-colouring runs exceeded one minute".into());
        }
        for name in ["c_3", "p_4"] {
            let h = pattern(name);
            let k = h.degeneracy();
            let n = 2 * k * h.graph().edge_count() - 2 * k + h.graph().vertex_count();
            let host = complete_graph(n);
            for trial in 0..1000usize {
                let c = random_m_bounded_colouring(&host, 2, &mut rng);
                greedy_rainbow_embed(&host, &c, &h, 2)
                    .map_err(|e| format!("2-bounded {name} trial {trial}: {e}"))?;
                embeddings += 1;
            }
        }
        Ok(format!("{embeddings} embeddings, zero failures"))
    };
    finish(4, "greedy embedding at the counting bound", started, run())
}

/// The exact fractional-width criterion and disjoint representatives on
/// gadget families, exhaustively at the smallest threshold.
pub fn criterion_5_fractional_width(seed: u64) -> CriterionReport {
    let started = Instant::now();
    let run = || -> Result<String, String> {
        let small = gadget(4, 3).unwrap();
        let mut exhaustive = 0usize;
        for c in enumerate_proper_colourings(&small.graph, None) {
            if !width_criterion_check(2, 3, &c).map_err(|e| e.to_string())? {
                return Err(format!("width criterion failed on colouring #{exhaustive}"));
            }
            let family = build_gadget_families_on(&small, &c).map_err(|e| e.to_string())?;
            let reps = disjoint_representatives(&family)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("no disjoint system on colouring #{exhaustive}"))?;
            let edges = decode_gadget_system(&small, &reps);
            let mut cols: Vec<u32> = edges.iter().map(|&e| c.get(e).unwrap()).collect();
            cols.sort_unstable();
            cols.dedup();
            if cols.len() != edges.len() {
                return Err(format!("decoded cycle not rainbow on colouring #{exhaustive}"));
            }
            exhaustive += 1;
        }

        let big = gadget(6, 5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x05);
        for trial in 0..100usize {
            let c = random_proper_colouring(&big.graph, &mut rng);
            if !width_criterion_check(3, 5, &c).map_err(|e| e.to_string())? {
                return Err(format!("width criterion failed on 6-cycle gadget trial {trial}"));
            }
            let family = build_gadget_families_on(&big, &c).map_err(|e| e.to_string())?;
            let reps = disjoint_representatives(&family)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("no disjoint system on 6-cycle trial {trial}"))?;
            let edges = decode_gadget_system(&big, &reps);
            let mut cols: Vec<u32> = edges.iter().map(|&e| c.get(e).unwrap()).collect();
            cols.sort_unstable();
            cols.dedup();
            if cols.len() != edges.len() {
                return Err(format!("decoded 6-cycle not rainbow on trial {trial}"));
            }
        }
        Ok(format!(
            "{exhaustive} exhaustive colourings and 100 sampled ones satisfy the criterion"
        ))
    };
    finish(5, "fractional width criterion", started, run())
}

/// Forest values: the five-cycle host for the path, the cubic class-2
/// host, and the seeded tree embedding.
pub fn criterion_6_forests(seed: u64) -> CriterionReport {
    let started = Instant::now();
    let run = || -> Result<String, String> {
        let c5 = named_graph("c_5").unwrap();
        let p4 = pattern("p_4");
        let quick = Instant::now();
        let mut colourings = 0usize;
        for c in enumerate_proper_colourings(&c5, None) {
            if find_rainbow_copy(&c5, &c, &p4).is_none() {
                return Err(format!("colouring #{colourings} of the five-cycle hides every path"));
            }
            colourings += 1;
        }
        if quick.elapsed() > Duration::from_secs(1) {
            return Err("five-cycle sweep exceeded one second".into());
        }

        let host = class2_regular(3).unwrap();
        let report = structural_report(&host);
        if report.is_regular_of != Some(3)
            || !report.connected
            || girth(&host) != Some(5)
            || report.cut_vertices.is_empty()
        {
            return Err("cubic host structure is wrong".into());
        }
        if chromatic_index(&host) != 4 {
            return Err("cubic host is 3-edge-colourable".into());
        }

        let chair = Pattern::new(
            Graph::new(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap(),
        )
        .unwrap();
        let five_path = pattern("p_5");
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x06);
        for trial in 0..100usize {
            let c = random_proper_colouring(&host, &mut rng);
            rainbow_tree_embed(&host, &c, &chair)
                .map_err(|e| format!("chair trial {trial}: {e}"))?;
            rainbow_tree_embed(&host, &c, &five_path)
                .map_err(|e| format!("path trial {trial}: {e}"))?;
        }

        // hosts built by the induction certify the exact forest values
        for name in ["p_4", "p_5"] {
            let f = named_graph(name).unwrap();
            let built = forest_host(&f).map_err(|e| e.to_string())?;
            let expected = crate::patterns::ar_d_bounds(&pattern(name))
                .upper
                .expect("forests have exact bounds");
            if built.max_degree() != expected {
                return Err(format!("{name}: host degree {} != {expected}", built.max_degree()));
            }
            let cert = forces_with(
                &built,
                &pattern(name),
                Mode::Proper,
                &SearchOptions::default(),
            )
            .map_err(|e| e.to_string())?;
            if cert.verdict != Verdict::Forces {
                return Err(format!("{name}: host does not force ({:?})", cert.verdict));
            }
        }
        Ok(format!(
            "{colourings} five-cycle colourings all contain a rainbow path; \
             100 embeddings of both five-vertex trees; path hosts certified"
        ))
    };
    finish(6, "forest hosts and tree embedding", started, run())
}

/// The cross-intersecting bound: tight on complement families, never
/// exceeded on random condition-satisfying families.
pub fn criterion_7_cross_intersecting(seed: u64) -> CriterionReport {
    let started = Instant::now();
    let run = || -> Result<String, String> {
        for total in 2..=8usize {
            for a in 1..total {
                let b = total - a;
                let mut pairs = Vec::new();
                for mask in 0u32..(1 << total) {
                    if mask.count_ones() as usize != a {
                        continue;
                    }
                    let left: BTreeSet<Element> = (0..total)
                        .filter(|&i| mask >> i & 1 == 1)
                        .map(|i| Element::Colour(i as u32))
                        .collect();
                    let right: BTreeSet<Element> = (0..total)
                        .filter(|&i| mask >> i & 1 == 0)
                        .map(|i| Element::Colour(i as u32))
                        .collect();
                    pairs.push((left, right));
                }
                let report = cross_intersecting_check(&pairs);
                if !report.conditions_hold || report.pair_count as u64 != report.bound.unwrap() {
                    return Err(format!("complement family a={a} b={b} not tight"));
                }
                let _ = b;
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x07);
        let mut families = 0usize;
        while families < 10_000 {
            let a = rng.random_range(1..=4usize);
            let b = rng.random_range(1..=4usize);
            let universe = a + b + rng.random_range(0..=2usize);
            let mut pairs: Vec<(BTreeSet<Element>, BTreeSet<Element>)> = Vec::new();
            let mut misses = 0;
            while misses < 12 {
                let mut items: Vec<u32> = (0..universe as u32).collect();
                items.shuffle(&mut rng);
                let left: BTreeSet<Element> =
                    items[..a].iter().map(|&i| Element::Colour(i)).collect();
                let right: BTreeSet<Element> =
                    items[a..a + b].iter().map(|&i| Element::Colour(i)).collect();
                let compatible = pairs.iter().all(|(pl, pr)| {
                    pl.intersection(&right).count() > 0 && left.intersection(pr).count() > 0
                });
                if compatible {
                    pairs.push((left, right));
                    misses = 0;
                } else {
                    misses += 1;
                }
            }
            let report = cross_intersecting_check(&pairs);
            if !report.conditions_hold {
                return Err("generator produced a non-qualifying family".into());
            }
            if !report.within_bound {
                return Err("bound exceeded".into()); // the check itself asserts first
            }
            families += 1;
        }
        Ok(format!("complement families tight; {families} random families within bound"))
    };
    finish(7, "cross-intersecting family bound", started, run())
}

/// The explicit partial colouring of the 8-cycle gadget completes to a
/// proper colouring with no rainbow 8-cycle.
pub fn criterion_8_lower_bound_colouring(seed: u64) -> CriterionReport {
    let started = Instant::now();
    let run = || -> Result<String, String> {
        let (built, partial) = lower_bound_partial_colouring(2).map_err(|e| e.to_string())?;
        let c8 = pattern("c_8");
        let copies = enumerate_copies(&built.graph, &c8);
        if copies.len() != 81 {
            return Err(format!("expected 3^4 cycle copies, found {}", copies.len()));
        }
        let completed = complete_to_proper(&built.graph, &partial)
            .map_err(|e| e.to_string())?
            .ok_or("no completion found")?;
        if !is_proper(&built.graph, &completed) {
            return Err("completion is not proper".into());
        }
        if let Some(copy) = copies.iter().find(|cp| cp.is_rainbow(&completed)) {
            return Err(format!("rainbow 8-cycle on edges {:?}", copy.edge_ids));
        }
        // a few random completions for good measure
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x08);
        for trial in 0..25usize {
            let c = crate::colouring::random_proper_completion(&built.graph, &partial, &mut rng)
                .map_err(|e| e.to_string())?;
            if copies.iter().any(|cp| cp.is_rainbow(&c)) {
                return Err(format!("random completion {trial} has a rainbow 8-cycle"));
            }
        }
        Ok("all completions checked avoid a rainbow 8-cycle; threshold 4 certified".into())
    };
    finish(8, "explicit multiplicity lower bound", started, run())
}

/// The difference colouring of the balanced bipartite host is proper and
/// never shows a rainbow two-by-n complete bipartite copy.
pub fn criterion_9_difference_colouring(seed: u64) -> CriterionReport {
    let started = Instant::now();
    let run = || -> Result<String, String> {
        let (g1, c1) = z3_coloured_bipartite(1).map_err(|e| e.to_string())?;
        if !is_proper(&g1, &c1) {
            return Err("side-3 colouring is not proper".into());
        }
        let k22 = pattern("k_2_2");
        if let Some(copy) = enumerate_copies(&g1, &k22).iter().find(|cp| cp.is_rainbow(&c1)) {
            return Err(format!("rainbow 2x2 copy on edges {:?}", copy.edge_ids));
        }

        let (g2, c2) = z3_coloured_bipartite(2).map_err(|e| e.to_string())?;
        if !is_proper(&g2, &c2) {
            return Err("side-9 colouring is not proper".into());
        }
        let side = 9usize;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x09);
        for _ in 0..10_000usize {
            // sample a 2 x 4 complete bipartite copy and check its colours
            let mut lefts: Vec<usize> = (0..side).collect();
            lefts.shuffle(&mut rng);
            let mut rights: Vec<usize> = (0..side).map(|i| side + i).collect();
            rights.shuffle(&mut rng);
            let mut cols = Vec::with_capacity(8);
            for &a in &lefts[..2] {
                for &b in &rights[..4] {
                    cols.push(c2.get(g2.edge_id(a, b).unwrap()).unwrap());
                }
            }
            cols.sort_unstable();
            let distinct = cols.windows(2).all(|w| w[0] != w[1]);
            if distinct {
                return Err(format!(
                    "rainbow 2x4 copy at {:?} x {:?}",
                    &lefts[..2],
                    &rights[..4]
                ));
            }
        }
        Ok("side 3 exhaustive, side 9 sampled 10000 times, no rainbow copies".into())
    };
    finish(9, "difference colouring of bipartite hosts", started, run())
}

/// The production search agrees with the independent brute-force routes.
pub fn criterion_10_oracle_equivalence(seed: u64) -> CriterionReport {
    let started = Instant::now();
    let run = || -> Result<String, String> {
        let p3k2 = named_graph("p_3")
            .unwrap()
            .disjoint_union(&named_graph("p_2").unwrap());
        let mut forcing_cases: Vec<(String, Graph, Pattern)> = vec![(
            "c_5 vs path+edge".into(),
            named_graph("c_5").unwrap(),
            Pattern::new(p3k2).unwrap(),
        )];
        forcing_cases.push((
            "small gadget vs triangle".into(),
            gadget(3, 2).unwrap().graph,
            pattern("c_3"),
        ));
        for (gn, hn) in [
            ("c_3", "c_3"),
            ("c_4", "c_4"),
            ("c_5", "c_4"),
            ("c_5", "p_4"),
            ("c_5", "matching_2"),
            ("c_4", "matching_2"),
            ("c_6", "c_6"),
            ("c_6", "p_4"),
            ("c_7", "p_5"),
            ("c_8", "c_4"),
            ("k4", "c_3"),
            ("k4", "c_4"),
            ("k4", "p_4"),
            ("k_2_3", "c_4"),
            ("star_3", "p_3"),
            ("matching_3", "matching_2"),
            ("matching_4", "matching_3"),
            ("triangle_pendant", "p_4"),
            ("bull", "p_4"),
            ("bull", "c_3"),
            ("k4_subdivided", "triangle_pendant"),
            ("k4_subdivided", "c_4"),
        ] {
            forcing_cases.push((format!("{gn} vs {hn}"), named_graph(gn).unwrap(), pattern(hn)));
        }
        let case_count = forcing_cases.len();
        for (tag, g, h) in &forcing_cases {
            if g.edge_count() > 8 {
                return Err(format!("{tag}: corpus instance exceeds 8 edges"));
            }
            let cert = forces_with(g, h, Mode::Proper, &SearchOptions::default())
                .map_err(|e| e.to_string())?;
            let oracle = reference::forces_bruteforce(g, h.graph());
            let agree = match cert.verdict {
                Verdict::Forces => oracle.is_none(),
                Verdict::WitnessFound => oracle.is_some(),
                Verdict::Inconclusive => false,
            };
            if !agree {
                return Err(format!("{tag}: search {:?} vs oracle {:?}", cert.verdict, oracle.is_some()));
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x10);
        let detection_cases = [
            ("petersen", "c_5"),
            ("petersen", "p_6"),
            ("prism", "c_4"),
            ("k_3_3", "c_4"),
            ("k_3_3", "c_6"),
            ("k_2_4", "c_4"),
            ("k5", "bull"),
            ("c_12", "p_4"),
            ("nonmono", "c_4"),
            ("k4_subdivided", "triangle_pendant"),
        ];
        for (gn, hn) in detection_cases {
            let g = named_graph(gn).unwrap();
            let h = pattern(hn);
            for _ in 0..30usize {
                let c = random_proper_colouring(&g, &mut rng);
                let fast = find_rainbow_copy(&g, &c, &h);
                let brute = reference::has_rainbow_copy_bruteforce(&g, &c, h.graph());
                if fast.is_some() != brute {
                    return Err(format!("{gn} vs {hn}: detection disagreement"));
                }
            }
        }
        Ok(format!(
            "{case_count} forcing instances and {} detection hosts agree with brute force",
            detection_cases.len()
        ))
    };
    finish(10, "oracle equivalence", started, run())
}

/// Full-tier stretch: the forest host of the path-plus-edge union forces
/// its forest, within a one-hour budget.
pub fn stretch_forest_union_forcing() -> CriterionReport {
    let started = Instant::now();
    let run = || -> Result<String, String> {
        let f = named_graph("p_3")
            .unwrap()
            .disjoint_union(&named_graph("p_2").unwrap());
        let host = forest_host(&f).map_err(|e| e.to_string())?;
        let pattern = Pattern::new(f).map_err(|e| e.to_string())?;
        let opts = SearchOptions {
            budget_time: Some(Duration::from_secs(3600)),
            ..SearchOptions::default()
        };
        let cert = forces_with(&host, &pattern, Mode::Proper, &opts).map_err(|e| e.to_string())?;
        match cert.verdict {
            Verdict::Forces => Ok(format!("forces after {} nodes", cert.stats.nodes)),
            Verdict::Inconclusive => Err("inconclusive within the hour budget".into()),
            Verdict::WitnessFound => Err("found a witness; the host bound would be false".into()),
        }
    };
    finish(11, "stretch: forest union host forces", started, run())
}

pub fn fast_tier(seed: u64) -> Vec<CriterionReport> {
    vec![
        criterion_1_multiplicities(),
        criterion_2_four_cycle_value(seed),
        criterion_3_nonmonotonicity(),
        criterion_4_greedy_embedding(seed),
        criterion_5_fractional_width(seed),
        criterion_6_forests(seed),
        criterion_7_cross_intersecting(seed),
        criterion_8_lower_bound_colouring(seed),
        criterion_9_difference_colouring(seed),
        criterion_10_oracle_equivalence(seed),
    ]
}

pub fn full_tier(seed: u64) -> Vec<CriterionReport> {
    let mut reports = fast_tier(seed);
    reports.push(stretch_forest_union_forcing());
    reports
}
