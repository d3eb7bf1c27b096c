//! Randomised cross-checks of the main algorithms against the naive
//! reference implementations, over arbitrary small graphs rather than the
//! named corpus.

use proptest::prelude::*;

use antiramsey::colouring::{
    enumerate_proper_colourings, is_m_bounded, is_proper, EdgeColouring,
};
use antiramsey::copies::count_copies;
use antiramsey::graph::{degeneracy, girth, Graph};
use antiramsey::patterns::Pattern;
use antiramsey::reference;
use antiramsey::{forces, Mode, Verdict};

/// Arbitrary simple graph on up to `max_n` vertices: a vertex count and a
/// subset of the possible edges, encoded as a bitmask.
fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .collect();
        let count = pairs.len();
        proptest::bits::u64::masked((1u64 << count) - 1).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, &edges).expect("subset of simple edges")
        })
    })
}

proptest! {
    #[test]
    fn girth_agrees_with_cycle_enumeration(g in small_graph(8)) {
        prop_assert_eq!(girth(&g), reference::girth_by_cycle_enumeration(&g));
    }

    #[test]
    fn degeneracy_witness_is_consistent(g in small_graph(8)) {
        let (d, ordering) = degeneracy(&g);
        prop_assert!(d <= g.max_degree());
        prop_assert_eq!(ordering.back_degree.iter().copied().max().unwrap_or(0), d);
        // the ordering really has back degree <= d everywhere
        let mut position = vec![0usize; g.vertex_count()];
        for (p, &v) in ordering.order.iter().enumerate() {
            position[v] = p;
        }
        for (p, &v) in ordering.order.iter().enumerate() {
            let back = g.neighbours(v).iter().filter(|&&w| position[w] < p).count();
            prop_assert!(back <= d);
        }
    }

    #[test]
    fn multiplicity_one_is_properness(g in small_graph(7), seed in any::<u64>()) {
        let m = g.edge_count();
        if m == 0 {
            return Ok(());
        }
        // an arbitrary (not necessarily proper) total colouring
        let mut colours = Vec::with_capacity(m);
        let mut state = seed;
        for _ in 0..m {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            colours.push(1 + (state >> 33) as u32 % 4);
        }
        let c = EdgeColouring::from_total(colours);
        prop_assert_eq!(is_proper(&g, &c), is_m_bounded(&g, &c, 1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_enumeration_matches_partition_count(g in small_graph(6)) {
        prop_assume!(g.edge_count() <= 6);
        let enumerated = enumerate_proper_colourings(&g, None).count();
        prop_assert_eq!(enumerated, reference::count_matching_partitions(&g));
    }

    #[test]
    fn copy_counts_match_injective_maps(g in small_graph(7), pick in 0usize..4) {
        let names = ["c_3", "p_3", "p_4", "matching_2"];
        let h = Pattern::new(
            antiramsey::constructions::named_graph(names[pick]).unwrap(),
        )
        .unwrap();
        let maps = reference::count_injective_homs(&g, h.graph());
        prop_assert_eq!(maps % h.automorphism_count(), 0);
        prop_assert_eq!(count_copies(&g, &h), maps / h.automorphism_count());
    }

    #[test]
    fn forcing_verdicts_match_bruteforce(g in small_graph(6), pick in 0usize..3) {
        prop_assume!(g.edge_count() >= 2 && g.edge_count() <= 6);
        let names = ["c_3", "p_3", "matching_2"];
        let h = Pattern::new(
            antiramsey::constructions::named_graph(names[pick]).unwrap(),
        )
        .unwrap();
        prop_assume!(g.edge_count() >= h.graph().edge_count());
        let cert = forces(&g, &h, Mode::Proper).unwrap();
        let oracle = reference::forces_bruteforce(&g, h.graph());
        match cert.verdict {
            Verdict::Forces => prop_assert!(oracle.is_none()),
            Verdict::WitnessFound => prop_assert!(oracle.is_some()),
            Verdict::Inconclusive => prop_assert!(false, "unbudgeted run inconclusive"),
        }
    }
}
