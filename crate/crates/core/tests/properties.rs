use grundy_core::forcing::closure;
use grundy_core::sequence::{greedy_z_sequence, l_sequence_from_closed};
use grundy_core::*;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn no_isolated(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("isolated vertex", |g| g.n() >= 2 && !g.has_isolated_vertex())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn witnesses_replay(g in no_isolated(8)) {
        for v in Variant::ALL {
            let (len, seq) = grundy_number(&g, v).unwrap();
            prop_assert_eq!(seq.len(), len);
            prop_assert!(verify_sequence(&g, v, &seq.order).legal);
            let replayed = GrundySequence::replay(&g, v, &seq.order).unwrap();
            prop_assert_eq!(replayed, seq);
        }
    }

    #[test]
    fn duality_and_conversions(g in no_isolated(8)) {
        let (grz, seq) = grundy_number(&g, Variant::Z).unwrap();
        let (z, set) = zero_forcing_number(&g).unwrap();
        prop_assert_eq!(grz + z, g.n());
        prop_assert!(is_zero_forcing_set(&g, &forcing_set_from_z_sequence(&g, &seq).unwrap()));
        let (blue, process) = closure(&g, &set, 1);
        prop_assert_eq!(blue, g.vertices());
        let back = z_sequence_from_forcing(&g, &process).unwrap();
        prop_assert!(verify_sequence(&g, Variant::Z, &back.order).legal);
        prop_assert_eq!(back.len(), grz);
        prop_assert_eq!(zero_forcing_number_via_z_sequences(&g, &SearchOptions::default()).unwrap().0, z);
    }

    #[test]
    fn greedy_is_a_legal_lower_bound(g in no_isolated(9)) {
        let greedy = greedy_z_sequence(&g);
        prop_assert!(verify_sequence(&g, Variant::Z, &greedy).legal);
        prop_assert!(greedy.len() <= grundy_number(&g, Variant::Z).unwrap().0);
    }

    #[test]
    fn closed_witness_extends_to_l_sequence(g in no_isolated(8)) {
        let (gr, seq) = grundy_number(&g, Variant::Closed).unwrap();
        let l = l_sequence_from_closed(&g, &seq).unwrap();
        prop_assert_eq!(l.len(), gr + 1);
        prop_assert!(verify_sequence(&g, Variant::L, &l.order).legal);
    }

    #[test]
    fn k_one_coincides(g in no_isolated(7)) {
        prop_assert_eq!(
            k_z_grundy_number(&g, 1).unwrap().0,
            grundy_number(&g, Variant::Z).unwrap().0
        );
        prop_assert_eq!(k_forcing_number(&g, 1).unwrap().0, zero_forcing_number(&g).unwrap().0);
    }

    #[test]
    fn k_z_bounds(g in graph(7), k in 1usize..=3) {
        prop_assume!(g.n() > 0 && g.min_degree() >= k);
        let (v, seq) = k_z_grundy_number(&g, k).unwrap();
        prop_assert!(verify_k_z_sequence(&g, k, &seq.order).legal);
        prop_assert!(v >= k_domination_number(&g, k).unwrap());
        // more room per vertex can only lengthen sequences
        if k > 1 {
            prop_assert!(v >= k_z_grundy_number(&g, k - 1).unwrap().0);
        }
    }

    #[test]
    fn search_options_do_not_change_results(g in no_isolated(8)) {
        let tight = SearchOptions { memo_cap: 4, threads: 3, ..SearchOptions::default() };
        for v in Variant::ALL {
            prop_assert_eq!(grundy_number_with(&g, v, &tight).unwrap(), grundy_number(&g, v).unwrap());
        }
        prop_assert_eq!(zero_forcing_number_with(&g, &tight).unwrap(), zero_forcing_number(&g).unwrap());
    }

    #[test]
    fn propagation_time_matches_blocks(g in graph(7)) {
        prop_assume!(g.n() >= 2 && g.is_connected());
        let pt = propagation_time(&g).unwrap();
        let blocks = min_permutable_blocks(&g).unwrap();
        prop_assert!(pt.exact);
        prop_assert_eq!(pt.rounds, blocks.count);
        prop_assert!(verify_sequence(&g, Variant::Z, &blocks.sequence()).legal);
    }

    #[test]
    fn text_round_trip(g in graph(10)) {
        prop_assert_eq!(Graph::parse(&g.serialize()).unwrap(), g);
    }
}

#[test]
fn star_and_path_values() {
    for n in 2..=6 {
        let s = generators::star(n).unwrap();
        assert_eq!(grundy_number(&s, Variant::Closed).unwrap().0, n);
        assert_eq!(zero_forcing_number(&s).unwrap().0, n - 1);
        assert_eq!(grundy_number(&s, Variant::Z).unwrap().0, 2);
        let p = generators::path(n).unwrap();
        assert_eq!(grundy_number(&p, Variant::Z).unwrap().0, n - 1);
        assert_eq!(zero_forcing_number(&p).unwrap().0, 1);
    }
}

#[test]
fn sierpinski_grundy_formula() {
    for (p, n) in [(2, 3), (3, 2), (4, 2), (3, 3)] {
        let g = generators::sierpinski(p, n).unwrap();
        let q = p.pow(n as u32 - 1);
        let expected = q + p * (q - 1) / 2;
        assert_eq!(grundy_number(&g, Variant::Z).unwrap().0, expected);
        if g.n() <= 16 {
            assert_eq!(grundy_number(&g, Variant::Closed).unwrap().0, expected);
        }
    }
}
