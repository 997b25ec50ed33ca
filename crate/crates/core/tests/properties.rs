use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::sample::Index;

use crossfree::asymptotics::{
    aitken, optimize_alpha, optimize_alpha_within, ratio_growth, series_residual, AlgebraicRelation,
};
use crossfree::doublechain::{
    compose_pair, decompose_polygonization, edges_cross_dc, realize, segments_intersect, ChainGraph,
    CompositionStatus, DoubleChainConfig,
};
use crossfree::geometry::chords_cross;
use crossfree::oracle::collect_partitions;
use crossfree::recurrences::{gfh_tables, go_tables, gs_tables, CountTable};
use crossfree::{PartitionClass, PathPartition, VertexRole};

fn pick(n: usize, class: PartitionClass, idx: Index) -> PathPartition {
    let all = collect_partitions(n, class).unwrap();
    all[idx.index(all.len())].clone()
}

fn closed_form(beta: f64, gamma: f64, c: f64) -> (f64, f64) {
    let t = gamma.powf(c);
    (t / (beta + t), beta + t)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chord_crossing_is_symmetric(n in 4usize..14, a in 1usize..14, b in 1usize..14, c in 1usize..14, d in 1usize..14) {
        prop_assume!(a <= n && b <= n && c <= n && d <= n && a != b && c != d);
        prop_assume!((a.min(b), a.max(b)) != (c.min(d), c.max(d)));
        let x = chords_cross(a, b, c, d, n).unwrap();
        prop_assert_eq!(x, chords_cross(c, d, a, b, n).unwrap());
        prop_assert_eq!(x, chords_cross(b, a, d, c, n).unwrap());
        // rotating every label preserves crossing
        let r = |v: usize| v % n + 1;
        prop_assert_eq!(x, chords_cross(r(a), r(b), r(c), r(d), n).unwrap());
    }

    #[test]
    fn canonical_form_ignores_path_order_and_direction(
        n in 1usize..8,
        idx in any::<Index>(),
        flips in prop::collection::vec(any::<bool>(), 8),
        rotate in 0usize..8,
    ) {
        let p = pick(n, PartitionClass::Ncp, idx);
        let mut paths: Vec<Vec<usize>> = p.paths().to_vec();
        for (path, &flip) in paths.iter_mut().zip(&flips) {
            if flip {
                path.reverse();
            }
        }
        let len = paths.len();
        paths.rotate_left(rotate % len);
        let q = PathPartition::new(n, paths).unwrap();
        prop_assert_eq!(&q, &p);
        prop_assert_eq!(PathPartition::new(n, q.paths().to_vec()).unwrap(), q);
        prop_assert_eq!(PathPartition::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn roles_and_classes_are_consistent(n in 1usize..8, idx in any::<Index>()) {
        let p = pick(n, PartitionClass::Ncp, idx);
        let roles = p.vertex_roles();
        prop_assert_eq!(roles.len(), n);
        let count = |r: VertexRole| roles.values().filter(|&&x| x == r).count();
        let long_paths = p.paths().iter().filter(|q| q.len() > 1).count();
        prop_assert_eq!(count(VertexRole::Singleton), p.singleton_count());
        prop_assert_eq!(count(VertexRole::Endpoint), 2 * long_paths);
        prop_assert_eq!(count(VertexRole::Middle), n - p.path_count() - long_paths);
        let classes = p.classify();
        prop_assert!(classes.contains(&PartitionClass::Ncp));
        prop_assert_eq!(classes.contains(&PartitionClass::Ncpws), p.singleton_count() == 0);
    }

    #[test]
    fn crossing_predicate_matches_geometry(
        n in 1usize..9, m in 1usize..9,
        ends in prop::array::uniform4(any::<Index>()),
    ) {
        let total = n + m;
        let [a, b, c, d] = ends.map(|i| 1 + i.index(total));
        let (e, f) = ((a, b), (c, d));
        prop_assume!(e.0 != e.1 && f.0 != f.1);
        let cfg = DoubleChainConfig::new(n, m).unwrap();
        let real = realize(cfg);
        let p = |l| real.point(l).unwrap();
        let shared = [e.0, e.1].iter().any(|v| *v == f.0 || *v == f.1);
        let x = edges_cross_dc(e, f, &cfg).unwrap();
        prop_assert_eq!(x, edges_cross_dc(f, e, &cfg).unwrap());
        prop_assert_eq!(x, !shared && segments_intersect(p(e.0), p(e.1), p(f.0), p(f.1)));
    }

    #[test]
    fn decomposition_inverts_composition(
        n in 1usize..7, m in 1usize..7,
        iu in any::<Index>(), il in any::<Index>(),
    ) {
        let pu = pick(n, PartitionClass::Ncp, iu);
        let lower: Vec<PathPartition> = collect_partitions(m, PartitionClass::Ncp)
            .unwrap()
            .into_iter()
            .filter(|q| q.path_count() == pu.path_count())
            .collect();
        prop_assume!(!lower.is_empty());
        let pl = lower[il.index(lower.len())].clone();
        let out = compose_pair(&pu, &pl).unwrap();
        prop_assert_eq!(out.graph.alternating_count(), 2 * pu.path_count());
        if out.status == CompositionStatus::Polygonization {
            let d = decompose_polygonization(&out.graph).unwrap();
            prop_assert_eq!(d.upper, pu);
            prop_assert_eq!(d.lower, pl);
            prop_assert_eq!(ChainGraph::from_json(&out.graph.to_json()).unwrap(), out.graph);
        } else {
            prop_assert!(decompose_polygonization(&out.graph).is_err());
        }
    }

    #[test]
    fn optimizer_matches_the_stationary_point(beta in 1.01f64..20.0, gamma in 1.0f64..5.0, c in 0.0f64..=1.0) {
        let res = optimize_alpha(beta, gamma, c).unwrap();
        let (alpha, growth) = closed_form(beta, gamma, c);
        prop_assert!((res.alpha_star - alpha).abs() < 1e-9, "{} vs {}", res.alpha_star, alpha);
        prop_assert!((res.growth_per_point - growth).abs() < 1e-9 * growth);
    }

    #[test]
    fn optimizer_is_stable_under_bracket_changes(
        beta in 1.01f64..20.0, gamma in 1.0f64..5.0, c in 0.0f64..=1.0,
        lo_frac in 0.0f64..1.0, hi_frac in 0.0f64..1.0,
    ) {
        let reference = optimize_alpha(beta, gamma, c).unwrap().alpha_star;
        let lo = reference * lo_frac;
        let hi = reference + (1.0 - reference) * hi_frac.max(1e-6);
        let moved = optimize_alpha_within(beta, gamma, c, lo, hi).unwrap().alpha_star;
        prop_assert!((moved - reference).abs() < 1e-9);
        // a bracket that misses the optimum still ends there
        let off = optimize_alpha_within(beta, gamma, c, (reference + 1.0) / 2.0, 1.0).unwrap().alpha_star;
        prop_assert!((off - reference).abs() < 1e-9);
    }

    #[test]
    fn aitken_is_exact_on_geometric_errors(limit in -10.0f64..10.0, scale in 0.1f64..5.0, q in 0.1f64..0.9) {
        let x = |k: i32| limit + scale * q.powi(k);
        let est = aitken(x(1), x(2), x(3)).unwrap();
        prop_assert!((est - limit).abs() < 1e-9);
    }

    #[test]
    fn perturbed_tables_leave_a_residual(k in 0usize..15, bump in 1u32..1000) {
        let (g, _, _) = gfh_tables(20);
        let mut values = g.values().to_vec();
        values[k] += BigUint::from(bump);
        let t = CountTable::new(g.family(), values);
        prop_assert!(!series_residual(&AlgebraicRelation::eq8(), &t, 20).unwrap().is_zero());
    }
}

#[test]
fn optimizer_limit_as_beta_approaches_one() {
    for k in [2, 4, 6, 8] {
        let beta = 1.0 + 10f64.powi(-k);
        let res = optimize_alpha(beta, 1.0, 0.0).unwrap();
        assert!((res.alpha_star - 0.5).abs() < 10f64.powi(-k), "beta={beta}");
        assert!((res.growth_per_point - 2.0).abs() < 2.0 * 10f64.powi(-k));
    }
    assert!(optimize_alpha(1.0, 1.0, 0.0).is_err());
}

#[test]
fn ratios_increase_toward_the_branch_points() {
    for (table, limit) in [
        (gfh_tables(300).0, 5.610718614),
        (gs_tables(300).0, 4.610718614),
        (go_tables(300).0, 4.642126305),
    ] {
        let mut prev = 0.0;
        for n in (50..=290).step_by(40) {
            let r = ratio_growth(&table, n).unwrap();
            assert!(r.ratio > prev && r.ratio < limit, "n={n}");
            let a = r.aitken.unwrap();
            assert!((a - limit).abs() < (r.ratio - limit).abs());
            prev = r.ratio;
        }
    }
}
