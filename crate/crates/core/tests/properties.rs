mod common;

use proptest::prelude::*;

use polyhex::graph::format::{from_graph6, from_json, to_graph6, to_json};
use polyhex::graph::{count_perfect_matchings, Graph};
use polyhex::pfaffian::{
    central_cycles, is_oddly_oriented, is_pfaffian_orientation, matching_count_by_determinant, pfaffian_search,
    skew_determinant, Orientation,
};
use polyhex::polyhex::{build_polyhex, torus_param_twin, Family, PolyhexSpec};

fn spec_strategy(max: usize) -> impl Strategy<Value = PolyhexSpec> {
    let all = PolyhexSpec::enumerate(max);
    (0..all.len()).prop_map(move |i| all[i])
}

fn pfaffian_spec() -> impl Strategy<Value = PolyhexSpec> {
    let all: Vec<PolyhexSpec> = ["T:8,1,1", "T:4,2,0", "T:14,1,2", "T:6,2,2", "Ke:4,2", "Ko:3,4", "Ko:5,2", "Ko:4,4"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    (0..all.len()).prop_map(move |i| all[i])
}

fn random_graph() -> impl Strategy<Value = Graph> {
    (2usize..12).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|&(_, b)| b).map(|(p, _)| p)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn switching_keeps_pfaffian_orientations(spec in pfaffian_spec(), vs in proptest::collection::vec(0usize..40, 0..8)) {
        let g = build_polyhex(&spec).unwrap().graph;
        let mut d = pfaffian_search(&g).unwrap().expect("listed specs are Pfaffian");
        for v in vs {
            d.switch_at(v % g.n());
        }
        prop_assert!(is_pfaffian_orientation(&d).unwrap());
        prop_assert!(common::is_pfaffian_by_signs(&d));
        prop_assert_eq!(matching_count_by_determinant(&d).unwrap(), count_perfect_matchings(&g).into());
    }

    #[test]
    fn reversing_a_cycle_edge_flips_its_parity(spec in spec_strategy(14), pick in any::<prop::sample::Index>(), edge in any::<prop::sample::Index>()) {
        let g = build_polyhex(&spec).unwrap().graph;
        let cycles = central_cycles(&g).unwrap();
        let c = pick.get(&cycles);
        let mut d = Orientation::reference(&g);
        let before = is_oddly_oriented(c, &d).unwrap();
        d.reverse_edge(*edge.get(c.edges()));
        prop_assert_ne!(before, is_oddly_oriented(c, &d).unwrap());
    }

    #[test]
    fn matching_count_survives_relabelling(spec in spec_strategy(20), perm in Just((0..40usize).collect::<Vec<_>>()).prop_shuffle()) {
        let g = build_polyhex(&spec).unwrap().graph;
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < g.n()).collect();
        let h = g.relabel(&perm);
        prop_assert_eq!(count_perfect_matchings(&h), count_perfect_matchings(&g));
        prop_assert_eq!(count_perfect_matchings(&h), common::matching_count(&h));
    }

    #[test]
    fn twin_is_an_involution(spec in spec_strategy(60)) {
        prop_assume!(spec.family() == Family::Torus);
        let twin = torus_param_twin(&spec).unwrap();
        prop_assert_eq!(torus_param_twin(&twin).unwrap(), spec);
        prop_assert_eq!(twin.vertex_count(), spec.vertex_count());
    }

    #[test]
    fn skew_determinant_is_a_square(spec in spec_strategy(20), flips in proptest::collection::vec(any::<bool>(), 60)) {
        let g = build_polyhex(&spec).unwrap().graph;
        let d = Orientation::from_forward(&g, flips[..g.edge_count()].to_vec()).unwrap();
        let det = skew_determinant(&d);
        let root = det.sqrt();
        prop_assert_eq!(&root * &root, det);
        let pf = common::MatchingSigns::new(&g).pfaffian(common::reversed_mask(&d));
        prop_assert_eq!(root, pf.abs().into());
    }

    #[test]
    fn spec_strings_round_trip(spec in spec_strategy(60)) {
        prop_assert_eq!(spec.to_string().parse::<PolyhexSpec>().unwrap(), spec);
    }

    #[test]
    fn graph_formats_round_trip(g in random_graph()) {
        prop_assert_eq!(&from_graph6(&to_graph6(&g)).unwrap(), &g);
        prop_assert_eq!(&from_json(&to_json(&g)).unwrap(), &g);
    }

    #[test]
    fn orientation_json_round_trip(spec in spec_strategy(16), flips in proptest::collection::vec(any::<bool>(), 30)) {
        let g = build_polyhex(&spec).unwrap().graph;
        let d = Orientation::from_forward(&g, flips[..g.edge_count()].to_vec()).unwrap();
        prop_assert_eq!(Orientation::from_json(&g, &d.to_json()).unwrap().pairs(), d.pairs());
    }
}
