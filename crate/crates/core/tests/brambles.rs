use hadwiger::bounds::hf_upper_bound;
use hadwiger::bramble::{
    enumerate_connected_sets, grid_cross_certificate, grid_hook_family, maximal_brambles,
    min_hitting_set, touches, validate_bramble, BrambleFamily, BrambleViolation, TouchingKind,
};
use hadwiger::construct::isomorphism_classes;
use hadwiger::fractional::{
    evaluate_certificate, fractional_hadwiger, lp_max_weight, r_integral_hadwiger_via_ilp,
    WeightedBramble,
};
use hadwiger::graph::{complete, cycle, grid, path, random_gnp};
use hadwiger::minor::hadwiger_number;
use hadwiger::{Graph, Rational, VertexSet};
use proptest::prelude::*;

fn load(sets: &[VertexSet], weights: &[Rational], v: usize) -> Rational {
    sets.iter()
        .zip(weights)
        .filter(|(s, _)| s.contains(v))
        .fold(Rational::zero(), |acc, (_, w)| acc + w.clone())
}

/// Checks primal feasibility, dual feasibility and equal objectives, which
/// certifies optimality without trusting the solver.
fn certified_lp(n: usize, sets: &[VertexSet]) -> Rational {
    let lp = lp_max_weight(n, sets).unwrap();
    assert!(lp.weights.iter().all(|w| !w.is_negative()));
    assert!(lp.dual.iter().all(|y| !y.is_negative()));
    for v in 0..n {
        assert!(load(sets, &lp.weights, v) <= Rational::one());
    }
    for s in sets {
        let cover = s
            .members()
            .iter()
            .fold(Rational::zero(), |acc, &v| acc + lp.dual[v].clone());
        assert!(cover >= Rational::one());
    }
    let primal = lp
        .weights
        .iter()
        .fold(Rational::zero(), |acc, w| acc + w.clone());
    let dual = lp
        .dual
        .iter()
        .fold(Rational::zero(), |acc, y| acc + y.clone());
    assert_eq!(primal, dual);
    assert_eq!(primal, lp.opt);
    primal
}

#[test]
fn maximal_bramble_count_on_c4_matches_brute_force() {
    let g = cycle(4).unwrap();
    let sets = enumerate_connected_sets(&g, None).unwrap();
    assert_eq!(sets.len(), 13);
    for kind in [TouchingKind::Weak, TouchingKind::Strong] {
        let ok = |mask: u32| {
            let chosen: Vec<&VertexSet> = (0..13)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| &sets[i])
                .collect();
            chosen
                .iter()
                .enumerate()
                .all(|(i, a)| chosen[i..].iter().all(|b| touches(&g, a, b, kind)))
        };
        let families: Vec<u32> = (1u32..1 << 13).filter(|&m| ok(m)).collect();
        let maximal = families
            .iter()
            .filter(|&&m| (0..13).all(|i| m >> i & 1 == 1 || !ok(m | 1 << i)))
            .count();
        let found = maximal_brambles(&g, kind, None).unwrap();
        assert_eq!(found.len(), maximal, "{kind}");
        for f in &found {
            validate_bramble(&g, &f.sets, kind).unwrap();
        }
    }
}

#[test]
fn fractional_value_matches_certified_lp_over_all_maximal_brambles() {
    for n in 1..=5 {
        for g in isomorphism_classes(n).unwrap() {
            for kind in [TouchingKind::Weak, TouchingKind::Strong] {
                let oracle = maximal_brambles(&g, kind, None)
                    .unwrap()
                    .iter()
                    .map(|f| certified_lp(n, &f.sets))
                    .max()
                    .unwrap_or_else(Rational::zero);
                let hf = fractional_hadwiger(&g, kind).unwrap();
                assert!(hf.is_exact());
                assert_eq!(hf.value, oracle, "{g:?} {kind}");
                assert_eq!(evaluate_certificate(&g, &hf.certificate).unwrap(), hf.value);
                let dual = hf.dual.as_ref().unwrap();
                let total = dual.iter().fold(Rational::zero(), |acc, y| acc + y.clone());
                assert_eq!(total, hf.value);
            }
        }
    }
}

#[test]
fn known_fractional_values() {
    // A single vertex has no edge, so no set touches itself strongly.
    assert!(
        fractional_hadwiger(&complete(1).unwrap(), TouchingKind::Strong)
            .unwrap()
            .value
            .is_zero()
    );
    for n in 2..=6 {
        let k = complete(n).unwrap();
        assert_eq!(
            fractional_hadwiger(&k, TouchingKind::Weak).unwrap().value,
            Rational::from(n)
        );
        assert_eq!(
            fractional_hadwiger(&k, TouchingKind::Strong).unwrap().value,
            Rational::new(n as i64, 2)
        );
    }
    // A path is a tree: every bramble has a common vertex.
    assert_eq!(
        fractional_hadwiger(&path(6).unwrap(), TouchingKind::Weak)
            .unwrap()
            .value,
        Rational::from(2usize)
    );
    assert_eq!(
        fractional_hadwiger(&cycle(6).unwrap(), TouchingKind::Weak)
            .unwrap()
            .value,
        Rational::from(3usize)
    );
}

#[test]
fn upper_bound_dominates_and_h_is_below() {
    for n in 1..=6 {
        for g in isomorphism_classes(n).unwrap() {
            let hf = fractional_hadwiger(&g, TouchingKind::Weak).unwrap();
            let (h, _) = hadwiger_number(&g).unwrap();
            assert!(Rational::from(h) <= hf.value);
            assert!(hf_upper_bound(&g).unwrap() >= hf.value);
            assert!(hf.value <= Rational::from(n));
        }
    }
}

#[test]
fn integral_values_are_multiples() {
    let g = grid(3).unwrap();
    for r in 1..=3u64 {
        let (v, cert) = r_integral_hadwiger_via_ilp(&g, r, TouchingKind::Weak).unwrap();
        assert!(v.is_multiple_of_recip(r));
        assert!(cert.weights.iter().all(|w| w.is_multiple_of_recip(r)));
        assert!(v >= Rational::new(3, 2) || r == 1);
    }
}

#[test]
fn grid_crosses_and_hooks() {
    for k in 1..=8 {
        let g = grid(k).unwrap();
        let (sets, weights) = grid_cross_certificate(k).unwrap();
        validate_bramble(&g, &sets, TouchingKind::Weak).unwrap();
        for v in 0..k * k {
            assert!(load(&sets, &weights, v) <= Rational::one());
        }
        let cert = WeightedBramble {
            family: BrambleFamily {
                host_n: k * k,
                sets,
                kind: TouchingKind::Weak,
            },
            weights,
        };
        assert_eq!(
            evaluate_certificate(&g, &cert).unwrap(),
            Rational::new(k as i64, 2)
        );
    }
    let hooks = grid_hook_family(3).unwrap();
    assert!(matches!(
        validate_bramble(&grid(3).unwrap(), &hooks, TouchingKind::Weak),
        Err(BrambleViolation::NotTouching { .. })
    ));
}

#[test]
fn tampered_certificate_is_rejected() {
    let g = complete(4).unwrap();
    let hf = fractional_hadwiger(&g, TouchingKind::Weak).unwrap();
    let mut cert = WeightedBramble::from_text(&hf.certificate.to_text()).unwrap();
    assert_eq!(cert, hf.certificate);
    cert.weights[0] = cert.weights[0].clone() + Rational::new(1, 2);
    let err = evaluate_certificate(&g, &cert).unwrap_err().to_string();
    assert!(err.contains("vertex overload"), "{err}");
    let err = evaluate_certificate(&complete(5).unwrap(), &hf.certificate)
        .unwrap_err()
        .to_string();
    assert!(err.contains("host mismatch"), "{err}");
}

fn random_family(g: &Graph, picks: &[usize]) -> Vec<VertexSet> {
    let sets = enumerate_connected_sets(g, None).unwrap();
    picks
        .iter()
        .map(|&i| sets[i % sets.len()].clone())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn strong_brambles_are_brambles(n in 1usize..=7, p in 0.2f64..=1.0, seed in any::<u64>(), picks in prop::collection::vec(any::<usize>(), 1..6)) {
        let g = random_gnp(n, p, seed).unwrap();
        let family = random_family(&g, &picks);
        if validate_bramble(&g, &family, TouchingKind::Strong).is_ok() {
            prop_assert!(validate_bramble(&g, &family, TouchingKind::Weak).is_ok());
        }
    }

    #[test]
    fn hitting_set_meets_every_member(n in 1usize..=8, p in 0.2f64..=1.0, seed in any::<u64>(), picks in prop::collection::vec(any::<usize>(), 1..8)) {
        let g = random_gnp(n, p, seed).unwrap();
        let family = random_family(&g, &picks);
        let hit = min_hitting_set(n, &family).unwrap();
        prop_assert!(family.iter().all(|s| s.intersects(&hit)));
        // No smaller set works: removing any vertex misses some member.
        for &v in hit.members() {
            let smaller = VertexSet::new(n, hit.members().iter().copied().filter(|&u| u != v)).unwrap();
            prop_assert!(family.iter().any(|s| !s.intersects(&smaller)));
        }
    }

    #[test]
    fn strong_value_is_between_half_and_full(n in 2usize..=7, p in 0.3f64..=1.0, seed in any::<u64>()) {
        let g = random_gnp(n, p, seed).unwrap();
        prop_assume!(g.size() > 0);
        let weak = fractional_hadwiger(&g, TouchingKind::Weak).unwrap().value;
        let strong = fractional_hadwiger(&g, TouchingKind::Strong).unwrap().value;
        prop_assert!(strong <= weak.clone());
        prop_assert!(weak <= strong.clone() + strong.clone());
        prop_assert!(strong <= Rational::new(n as i64, 2));
    }
}
