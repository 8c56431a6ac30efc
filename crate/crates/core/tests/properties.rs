mod common;

use cubic_balance::connected::target_profile;
use cubic_balance::gen::{cycles, random_cubic};
use cubic_balance::io::{encode_graph6, parse_edge_list, parse_graph6, write_edge_list};
use cubic_balance::oracle::{achievable_profiles, DEFAULT_EDGE_CAP};
use cubic_balance::{
    complement_within, decompose, decompose_balanced, decompose_two_regular, profile_of, EdgeSubset, Graph, Statement,
};
use num_rational::Ratio;
use proptest::prelude::*;

fn cubic() -> impl Strategy<Value = Graph> {
    (2usize..=15, any::<u64>()).prop_map(|(half, seed)| random_cubic(2 * half, seed).unwrap())
}

fn cubic_with_subset() -> impl Strategy<Value = (Graph, EdgeSubset)> {
    cubic().prop_flat_map(|g| {
        let m = g.edge_count();
        (Just(g), proptest::collection::vec(any::<bool>(), m)).prop_map(|(g, bits)| {
            let s = EdgeSubset::from_indices(g.edge_count(), (0..bits.len()).filter(|&i| bits[i]));
            (g, s)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn complement_reverses_profile((g, s) in cubic_with_subset()) {
        let c = complement_within(&g, &s).unwrap();
        prop_assert_eq!(complement_within(&g, &c).unwrap(), s.clone());
        prop_assert_eq!(profile_of(&g, &c).unwrap(), profile_of(&g, &s).unwrap().reversed());
        prop_assert_eq!(s.count() + c.count(), g.edge_count());
    }

    #[test]
    fn profiles_obey_handshake((g, s) in cubic_with_subset()) {
        let p = profile_of(&g, &s).unwrap();
        prop_assert!(p.satisfies_handshake());
        prop_assert_eq!(p.order(), g.order());
    }

    #[test]
    fn graph6_round_trip(g in cubic()) {
        let bytes = encode_graph6(&g).unwrap();
        let back = parse_graph6(&bytes).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(encode_graph6(&back).unwrap(), bytes);
        let from_text = parse_edge_list(&write_edge_list(&g)).unwrap();
        prop_assert_eq!(from_text.edges(), g.edges());
    }

    #[test]
    fn padding_mutations_rejected(g in cubic(), pick in any::<usize>()) {
        let n = g.order();
        let bits = n * (n - 1) / 2;
        let pad = (6 - bits % 6) % 6;
        prop_assume!(pad > 0);
        let mut bytes = encode_graph6(&g).unwrap();
        let last = bytes.len() - 1;
        bytes[last] = ((bytes[last] - 63) | (1 << (pick % pad))) + 63;
        prop_assert!(parse_graph6(&bytes).is_err());
    }

    #[test]
    fn every_statement_hits_its_target(g in cubic()) {
        for &s in Statement::for_order(g.order()) {
            match decompose(&g, s) {
                Ok(sub) => prop_assert_eq!(profile_of(&g, &sub).unwrap(), target_profile(g.order(), s).unwrap()),
                Err(cubic_balance::Error::ExceptionGraph(_)) => {}
                Err(e) => prop_assert!(false, "{}", e),
            }
        }
    }

    #[test]
    fn balanced_within_half(g in cubic()) {
        let r = decompose_balanced(&g).unwrap();
        if !r.trace[0].contains("exception") {
            let q = g.order() / 4;
            for k in 0..=3 {
                let c = r.profile.count(k);
                prop_assert!(c == q || c == g.order().div_ceil(4));
            }
            prop_assert!(r.max_deviation <= Ratio::new(1, 2));
        }
    }

    #[test]
    fn two_regular_has_even_ones(lengths in proptest::collection::vec(3usize..12, 1..5)) {
        let g = cycles(&lengths).unwrap();
        if let Ok(r) = decompose_two_regular(&g) {
            prop_assert_eq!(r.profile.count(1) % 2, 0);
            prop_assert_eq!(profile_of(&g, &r.subset).unwrap(), r.profile);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn oracle_closed_under_reversal(half in 2usize..=6, seed in any::<u64>()) {
        let g = random_cubic(2 * half, seed).unwrap();
        let report = achievable_profiles(&g, DEFAULT_EDGE_CAP).unwrap();
        for p in report.achievable() {
            prop_assert!(report.contains(&p.reversed()));
            let w = &report.witnesses[p];
            prop_assert_eq!(&profile_of(&g, w).unwrap(), p);
        }
    }
}

#[test]
fn oracle_matches_naive_enumeration_on_small_catalog() {
    for g in common::fixture("cubic_connected_n06.g6").into_iter().chain(common::fixture("cubic_connected_n04.g6")) {
        let fast: Vec<Vec<usize>> =
            achievable_profiles(&g, DEFAULT_EDGE_CAP).unwrap().achievable().map(|p| p.counts().to_vec()).collect();
        let naive: Vec<Vec<usize>> = common::naive_profiles(&g).into_iter().collect();
        assert_eq!(fast, naive);
    }
}
