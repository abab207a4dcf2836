use std::collections::BTreeSet;

use hadwiger::bounds::hf_upper_from_bounded;
use hadwiger::bramble::TouchingKind;
use hadwiger::construct::{
    canonical_code, canonical_form, check_evidence, emit_construction, graph_from_code,
    isomorphism_classes, search_witness, Mode, SearchMode, Witness, WitnessSpec,
};
use hadwiger::fractional::fractional_hadwiger;
use hadwiger::graph::{blowup_complete, random_gnp};
use hadwiger::minor::{hadwiger_number, Breadth};
use hadwiger::{Graph, Rational};
use proptest::prelude::*;

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.order(), &edges).unwrap()
}

/// Best certified `h_f / n` over every breadth.
fn side_epsilon(g: &Graph) -> Rational {
    let n = Rational::from(g.order());
    (1..=g.order())
        .map(|d| &hf_upper_from_bounded(g, Breadth::new(d).unwrap()).unwrap() / &n)
        .min()
        .unwrap()
}

fn spec(n0: usize, mode: Mode) -> WitnessSpec {
    WitnessSpec {
        n0,
        mode,
        s: None,
        d: None,
        search: SearchMode::Exhaustive,
    }
}

#[test]
fn class_counts() {
    let counts: Vec<usize> = (1..=6)
        .map(|n| isomorphism_classes(n).unwrap().len())
        .collect();
    assert_eq!(counts, [1, 2, 4, 11, 34, 156]);
    for n in 1..=6 {
        let classes = isomorphism_classes(n).unwrap();
        let codes: BTreeSet<_> = classes.iter().map(|g| canonical_code(g).unwrap()).collect();
        assert_eq!(codes.len(), classes.len());
        for g in &classes {
            assert_eq!(
                graph_from_code(canonical_code(g).unwrap()),
                canonical_form(g).unwrap()
            );
        }
    }
}

#[test]
fn thomason_witness_is_optimal_and_complement_symmetric() {
    for n0 in 3..=5 {
        let w = search_witness(&spec(n0, Mode::Thomason)).unwrap();
        assert!(check_evidence(&w).unwrap());
        let comp = w.complement.clone().unwrap();
        let swapped = Witness {
            graph: w.graph.complement(),
            evidence: comp.clone(),
            complement: Some(w.evidence.clone()),
            ..w.clone()
        };
        assert!(check_evidence(&swapped).unwrap());
        assert_eq!(w.epsilon, w.evidence.epsilon.clone().max(comp.epsilon));
        let oracle = isomorphism_classes(n0)
            .unwrap()
            .iter()
            .map(|g| side_epsilon(g).max(side_epsilon(&g.complement())))
            .min()
            .unwrap();
        assert_eq!(w.epsilon, oracle);
    }
}

#[test]
fn mader_witness_is_optimal_among_dense_graphs() {
    let p = Rational::new(1, 2);
    for n0 in 3..=6 {
        let w = search_witness(&spec(n0, Mode::Mader { p: p.clone() })).unwrap();
        let min_edges = (n0 * (n0 - 1)).div_ceil(4);
        assert!(w.graph.size() >= min_edges);
        let oracle = isomorphism_classes(n0)
            .unwrap()
            .iter()
            .filter(|g| g.size() >= min_edges)
            .map(side_epsilon)
            .min()
            .unwrap();
        assert_eq!(w.epsilon, oracle);
    }
}

#[test]
fn construction_bounds_hold_on_small_blowups() {
    let w = search_witness(&spec(4, Mode::Thomason)).unwrap();
    for t in 1..=3 {
        let c = emit_construction(&w, t).unwrap();
        let big = c.materialize().unwrap();
        assert_eq!(big, blowup_complete(&w.graph, t).unwrap());
        assert_eq!(c.edges().count(), big.size());
        let (h, _) = hadwiger_number(&big).unwrap();
        assert!(Rational::from(h) <= c.hadwiger_bound());
        let hf = fractional_hadwiger(&big, TouchingKind::Weak).unwrap();
        assert!(hf.value <= c.hadwiger_bound());
        let (hc, _) = hadwiger_number(&big.complement()).unwrap();
        assert!(Rational::from(hc) <= c.complement_hadwiger_bound().unwrap());
    }
}

#[test]
fn infeasible_filters_are_errors() {
    let mut s = spec(4, Mode::Mader { p: Rational::one() });
    s.s = Some(2);
    assert!(search_witness(&s).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_code_ignores_labels(n in 1usize..=8, p in 0.0f64..=1.0, seed in any::<u64>(), shuffle in any::<u64>()) {
        let g = random_gnp(n, p, seed).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = shuffle;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let h = relabel(&g, &perm);
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        let form = canonical_form(&g).unwrap();
        prop_assert_eq!(form.size(), g.size());
    }

    #[test]
    fn sampled_search_is_deterministic(seed in any::<u64>()) {
        let s = WitnessSpec {
            n0: 6,
            mode: Mode::Thomason,
            s: None,
            d: None,
            search: SearchMode::Sampled { count: 5, seed },
        };
        let a = search_witness(&s).unwrap();
        let b = search_witness(&s).unwrap();
        prop_assert_eq!(a.graph, b.graph);
        prop_assert_eq!(a.epsilon, b.epsilon);
    }
}
