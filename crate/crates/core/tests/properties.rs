mod common;

use common::*;
use hh_core::dynamics::{
    force_seed, next_state, next_state_majority, run_schedule_traced, scores, sync_step,
    covers_all_nonhubs,
};
use hh_core::generators::{attach_hub, gen_ba};
use hh_core::io::{parse_graph, write_graph};
use hh_core::thresholds::{
    domination_holds, max_need, max_rest, seeded_one_step_holds, threshold_report,
    tolerance_monotonicity_check, uniform_one_step_holds,
};
use hh_core::{GraphDocument, Opinion, Schedule, SeedSet, State, TiePolicy, Tolerance, WeightedDigraph};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn mass_partition(raw in arb_raw_graph(1, 9, 6)) {
        let g = raw.build();
        for v in 0..g.n() {
            let total = g.total_in(v).unwrap();
            prop_assert_eq!(total, raw.mass_into(v, |_| true));
            prop_assert_eq!(total, g.hub_weight(v).unwrap() + g.rest_weight(v).unwrap());
            prop_assert_eq!(g.hub_weight(v).unwrap(), raw.mass_into(v, |u| u == raw.hub));
        }
    }

    #[test]
    fn seed_partition_matches_edge_scan((raw, _, _, seeds) in arb_instance(8, 6, 0)) {
        let g = raw.build();
        let hub_only = SeedSet::hub_of(&g);
        for v in 0..g.n() {
            let (inside, outside) = g.seed_masses(&seeds, v).unwrap();
            prop_assert_eq!(inside, raw.mass_into(v, |u| seeds.contains(u)));
            prop_assert_eq!(outside, raw.mass_into(v, |u| !seeds.contains(u)));
            prop_assert_eq!(inside + outside, g.total_in(v).unwrap());
            prop_assert_eq!(
                g.seed_masses(&hub_only, v).unwrap(),
                (g.hub_weight(v).unwrap(), g.rest_weight(v).unwrap())
            );
        }
    }

    #[test]
    fn indeg_and_maxin_match_weight_map(raw in arb_raw_graph(1, 9, 6)) {
        let g = raw.build();
        let map = raw.weight_map();
        for v in 0..g.n() {
            let ins: Vec<u64> = map.iter()
                .filter(|(&(u, t), _)| t == v && u != raw.hub)
                .map(|(_, &w)| w)
                .collect();
            let (deg, max_in) = g.nonhub_indeg_and_maxin(v).unwrap();
            prop_assert_eq!(deg, ins.len());
            prop_assert_eq!(max_in, ins.iter().copied().max().unwrap_or(0));
            prop_assert!(g.rest_weight(v).unwrap() <= deg as u128 * max_in as u128);
        }
    }

    #[test]
    fn conservation((raw, _, s, seeds) in arb_instance(9, 6, 0)) {
        let g = raw.build();
        let forced = force_seed(&s, &seeds);
        for v in 0..g.n() {
            let sc = scores(&g, &s, &seeds, v);
            prop_assert_eq!(sc.glory + sc.gnash, g.total_in(v).unwrap());
            prop_assert_eq!(sc.glory, raw.mass_into(v, |u| forced.is_glory(u)));
        }
    }

    #[test]
    fn all_gnash_scores_are_seed_masses((raw, _, _, seeds) in arb_instance(9, 6, 0)) {
        let g = raw.build();
        let s = State::all_gnash(g.n());
        for v in (0..g.n()).filter(|&v| !seeds.contains(v)) {
            let sc = scores(&g, &s, &seeds, v);
            prop_assert_eq!((sc.glory, sc.gnash), g.seed_masses(&seeds, v).unwrap());
        }
    }

    #[test]
    fn majority_form_matches_tie_glory_on_every_state(
        (raw, tau) in arb_raw_graph(2, 7, 5).prop_flat_map(|r| { let n = r.n; (Just(r), arb_tolerance(n, 4)) })
    ) {
        let g = raw.build();
        let hub = SeedSet::hub_of(&g);
        for mask in 0u32..(1 << g.n()) {
            let s = State::from_fn(g.n(), |v| Opinion::from(mask >> v & 1 == 1));
            for v in 0..g.n() {
                prop_assert_eq!(
                    next_state_majority(&g, &s, &tau, v),
                    next_state(&g, &s, &hub, &tau, TiePolicy::TieGlory, v)
                );
            }
        }
    }

    #[test]
    fn policy_ordering((raw, tau, s, seeds) in arb_instance(9, 5, 3)) {
        let g = raw.build();
        for v in 0..g.n() {
            let glory = next_state(&g, &s, &seeds, &tau, TiePolicy::TieGlory, v);
            let gnash = next_state(&g, &s, &seeds, &tau, TiePolicy::TieGnash, v);
            let stay = next_state(&g, &s, &seeds, &tau, TiePolicy::TieStay, v);
            if gnash.is_glory() {
                prop_assert!(glory.is_glory());
            }
            prop_assert!(stay == glory || stay == gnash);
            if glory != gnash {
                prop_assert!(!seeds.contains(v));
                let sc = scores(&g, &s, &seeds, v);
                prop_assert_eq!(sc.glory + tau.get(v) as u128, sc.gnash);
                prop_assert_eq!(stay, s.get(v));
            }
        }
    }

    #[test]
    fn state_monotonicity(
        (raw, tau, s, seeds, extra) in arb_instance(9, 5, 3)
            .prop_flat_map(|(r, t, s, h)| { let n = r.n; (Just(r), Just(t), Just(s), Just(h), arb_state(n)) })
    ) {
        let g = raw.build();
        let t = State::from_fn(g.n(), |v| Opinion::from(s.is_glory(v) || extra.is_glory(v)));
        prop_assert!(t.glory_superset_of(&s));
        for v in 0..g.n() {
            let (a, b) = (scores(&g, &s, &seeds, v), scores(&g, &t, &seeds, v));
            prop_assert!(a.glory <= b.glory);
            prop_assert!(a.gnash >= b.gnash);
            for policy in [TiePolicy::TieGlory, TiePolicy::TieGnash] {
                if next_state(&g, &s, &seeds, &tau, policy, v).is_glory() {
                    prop_assert!(next_state(&g, &t, &seeds, &tau, policy, v).is_glory());
                }
            }
        }
    }

    // TieGnash needs strict pressure, so a vertex with no inbound mass and
    // zero tolerance flips to Gnash even from all-Glory.
    #[test]
    fn all_glory_is_fixed_point((raw, tau, _, seeds) in arb_instance(9, 5, 3)) {
        let g = raw.build();
        let all = State::all_glory(g.n());
        for policy in [TiePolicy::TieGlory, TiePolicy::TieStay] {
            prop_assert!(sync_step(&g, &all, &seeds, &tau, policy).is_all_glory());
        }
        let starved = (0..g.n())
            .any(|v| !seeds.contains(v) && g.total_in(v).unwrap() + tau.get(v) as u128 == 0);
        prop_assert_eq!(
            sync_step(&g, &all, &seeds, &tau, TiePolicy::TieGnash).is_all_glory(),
            !starved
        );
    }

    #[test]
    fn sync_step_keeps_seeds_glory((raw, tau, s, seeds) in arb_instance(9, 5, 3)) {
        let g = raw.build();
        for policy in TiePolicy::ALL {
            let next = sync_step(&g, &s, &seeds, &tau, policy);
            prop_assert!(seeds.members().iter().all(|&h| next.is_glory(h)));
        }
    }

    #[test]
    fn one_pass_fairness(
        (raw, tau, s, extra, order, dup) in arb_raw_graph(2, 10, 5).prop_flat_map(|r| {
            let n = r.n;
            (Just(r), arb_tolerance(n, 3), arb_state(n), 0..4u64,
             Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
             prop::collection::vec(0..n, 0..5))
        })
    ) {
        // Rewire the hub so domination holds: w(g,v) = need(v) + extra.
        let base = raw.build();
        let mut triples: Vec<_> = raw.triples.iter().copied().filter(|&(u, _, _)| u != raw.hub).collect();
        for v in base.non_hub_vertices() {
            let need = base.rest_weight(v).unwrap().saturating_sub(tau.get(v) as u128) as u64;
            triples.push((raw.hub, v, need + extra));
        }
        let g = WeightedDigraph::from_edges(raw.n, raw.hub, triples).unwrap();
        prop_assert!(domination_holds(&g, &tau));
        let hub = SeedSet::hub_of(&g);
        let mut visits = order;
        visits.extend(dup);
        let sched = Schedule::new(visits, g.n()).unwrap();
        prop_assert!(covers_all_nonhubs(&sched, &g, &hub));
        let (end, counts) = run_schedule_traced(&g, &s, &hub, &tau, TiePolicy::TieGlory, &sched);
        prop_assert!(end.is_all_glory());
        prop_assert!(counts.windows(2).all(|w| w[0] <= w[1]));
        // With strict domination no tie can occur, so every policy agrees.
        if extra > 0 {
            for policy in [TiePolicy::TieGnash, TiePolicy::TieStay] {
                let (end, _) = run_schedule_traced(&g, &s, &hub, &tau, policy, &sched);
                prop_assert!(end.is_all_glory());
            }
        }
    }

    #[test]
    fn bound_chain((raw, tau, _, _) in arb_instance(10, 8, 4)) {
        let g = raw.build();
        let r = threshold_report(&g, &tau).unwrap();
        prop_assert!(r.chain_holds(), "{:?}", r);
        prop_assert_eq!(r.maxrest, max_rest(&g).unwrap());
        prop_assert_eq!(r.maxneed, max_need(&g, &tau).unwrap());
    }

    #[test]
    fn per_node_and_aggregate_thresholds_agree((raw, tau, _, _) in arb_instance(10, 6, 4)) {
        let g = raw.build();
        let maxrest = max_rest(&g).unwrap() as u64;
        for w in 0..=maxrest + 2 {
            let per_node = g.non_hub_vertices()
                .all(|v| w as u128 + tau.get(v) as u128 >= g.rest_weight(v).unwrap());
            prop_assert_eq!(uniform_one_step_holds(&g, w, &tau).unwrap(), per_node);
        }
    }

    #[test]
    fn tolerance_monotone(
        (raw, tau, bump) in arb_raw_graph(2, 10, 6).prop_flat_map(|r| {
            let n = r.n;
            (Just(r), arb_tolerance(n, 5), prop::collection::vec(0..4u64, n))
        })
    ) {
        let g = raw.build();
        let hi = Tolerance::from_values(
            &(0..g.n()).map(|v| tau.get(v) + bump[v]).collect::<Vec<_>>()
        );
        prop_assert!(tolerance_monotonicity_check(&g, &tau, &hi).unwrap());
        if bump.iter().any(|&b| b > 0) {
            prop_assert!(tolerance_monotonicity_check(&g, &hi, &tau).is_err());
        }
    }

    #[test]
    fn seeded_single_hub_specialises_uniform(
        (raw, tau, w) in arb_raw_graph(2, 9, 6).prop_flat_map(|r| { let n = r.n; (Just(r), arb_tolerance(n, 3), 0..30u64) })
    ) {
        let stripped: Vec<_> = raw.triples.iter().copied().filter(|&(u, _, _)| u != raw.hub).collect();
        let hubless = WeightedDigraph::from_edges(raw.n, raw.hub, stripped.clone()).unwrap();
        let mut with_hub = stripped;
        with_hub.extend((0..raw.n).filter(|&v| v != raw.hub).map(|v| (raw.hub, v, w)));
        let g = WeightedDigraph::from_edges(raw.n, raw.hub, with_hub).unwrap();
        prop_assert_eq!(
            seeded_one_step_holds(&g, &SeedSet::hub_of(&g), &tau).unwrap(),
            uniform_one_step_holds(&hubless, w, &tau).unwrap()
        );
    }

    #[test]
    fn text_format_round_trip((raw, tau, _, _) in arb_instance(9, 1000, 50)) {
        let doc = GraphDocument { graph: raw.build(), tolerance: tau };
        let text = write_graph(&doc);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back.graph, &doc.graph);
        prop_assert_eq!(back.tolerance.to_vec(doc.graph.n()), doc.tolerance.to_vec(doc.graph.n()));
        prop_assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn ba_graphs_respect_chain_and_unit_weights(n in 3usize..40, m in 1usize..3, seed in any::<u64>()) {
        prop_assume!(n > m);
        let base = gen_ba(n, m, seed).unwrap();
        prop_assert_eq!(&base, &gen_ba(n, m, seed).unwrap());
        let g = attach_hub(&base, 0).unwrap();
        let r = threshold_report(&g, &Tolerance::zero()).unwrap();
        prop_assert!(r.chain_holds());
        let max_deg = g.non_hub_vertices().map(|v| g.in_edges(v).len() as u128).max().unwrap();
        prop_assert_eq!(r.maxrest, max_deg);
        prop_assert_eq!(r.pointwise_bound, max_deg);
    }
}
