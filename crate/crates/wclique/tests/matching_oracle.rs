//! Oracle checks for the matching layer: the clique reduction against
//! direct enumeration of injective mappings, the closed-form length
//! shortcut, and the incremental Cauchy-Schwarz bound against its
//! from-scratch definition at every state of real searches.

mod common;

use common::{brute_force_kernel, mapping_value, x2, y2};
use proptest::prelude::*;
use wclique::gen::generate_random_attributed;
use wclique::graph::{AttributedGraph, WeightedGraph};
use wclique::io::{load_graph, save_graph};
use wclique::matching::{
    build_association, clique_to_morphism, estimate_cs, graph_kernel, graph_length,
    morphism_to_clique, similarity, AttributeKernel, CsEstimate,
};
use wclique::solver::{
    solve_with_estimator, EstimateKind, Estimator, PivotStrategy, SearchState, SolverConfig,
};

fn random_pair(t: u64, max_n: usize) -> (AttributedGraph, AttributedGraph) {
    let nx = 1 + (t as usize) % max_n;
    let ny = 1 + (t as usize / max_n) % max_n;
    let x = generate_random_attributed(nx, 0.6, 2, 0x11 + t).unwrap();
    let y = generate_random_attributed(ny, 0.6, 2, 0x77 + t).unwrap();
    (x, y)
}

#[test]
fn kernel_matches_direct_mapping_enumeration() {
    let dot = AttributeKernel::Dot;
    for t in 0..60 {
        let (x, y) = random_pair(t, 4);
        let (want, _) = brute_force_kernel(&x, &y, &dot);
        for estimate in [
            EstimateKind::Infinite,
            EstimateKind::Sum,
            EstimateKind::CauchySchwarz,
        ] {
            let config = SolverConfig {
                estimate,
                rng_seed: t,
                ..Default::default()
            };
            let result = graph_kernel(&x, &y, &dot, &config).unwrap();
            assert!(
                (result.kernel_value - want).abs() <= 1e-9,
                "instance {t} ({estimate}): got {} want {want}",
                result.kernel_value
            );
            // the decoded morphism attains the value
            let attained = mapping_value(&x, &y, &dot, result.morphism.pairs());
            assert!((attained - result.kernel_value).abs() <= 1e-9);
        }
    }
}

#[test]
fn morphism_clique_bijection_on_random_instances() {
    let dot = AttributeKernel::Dot;
    for t in 0..20 {
        let (x, y) = random_pair(t, 4);
        let assoc = build_association(&x, &y, &dot).unwrap();
        let report = graph_kernel(&x, &y, &dot, &SolverConfig::default()).unwrap();
        let clique = morphism_to_clique(&assoc, &report.morphism).unwrap();
        let phi = clique_to_morphism(&assoc, &clique).unwrap();
        assert_eq!(phi, report.morphism, "instance {t}");
        let w = assoc.weighted().clique_weight(&clique).unwrap();
        assert!((w - report.kernel_value).abs() <= 1e-9);
    }
}

#[test]
fn closed_form_length_matches_self_match() {
    let dot = AttributeKernel::Dot;
    for t in 0..30 {
        let (x, _) = random_pair(t, 5);
        let (self_kernel, _) = brute_force_kernel(&x, &x, &dot);
        let l = graph_length(&x, &dot).unwrap();
        assert!(
            (self_kernel - l * l).abs() <= 1e-9,
            "instance {t}: identity-morphism shortcut broke: k(X,X)={self_kernel}, l^2={}",
            l * l
        );
        let s = similarity(
            &x,
            &x,
            &dot,
            &SolverConfig {
                estimate: EstimateKind::CauchySchwarz,
                ..Default::default()
            },
        )
        .unwrap();
        assert!((s - 1.0).abs() <= 1e-9);
    }
}

#[test]
fn cauchy_schwarz_inequality_holds() {
    for (kernel, tag) in [
        (AttributeKernel::Dot, "dot"),
        (AttributeKernel::Rbf { sigma: 0.7 }, "rbf"),
    ] {
        for t in 0..40 {
            let (x, y) = random_pair(t, 5);
            let result = graph_kernel(
                &x,
                &y,
                &kernel,
                &SolverConfig {
                    estimate: EstimateKind::CauchySchwarz,
                    rng_seed: t,
                    ..Default::default()
                },
            )
            .unwrap();
            assert!(result.report.completed);
            assert!(
                result.kernel_value.abs() <= result.length_x * result.length_y + 1e-9,
                "instance {t} ({tag})"
            );
        }
    }
}

/// Wraps the incremental estimator and checks it against the
/// from-scratch definition at every bound evaluation of a live search.
struct CheckedCs<'a> {
    inner: CsEstimate<'a>,
    assoc: &'a wclique::matching::AssociationGraph,
    evaluations: u64,
}

impl Estimator for CheckedCs<'_> {
    fn bound(&self, z: &WeightedGraph, state: &SearchState) -> f64 {
        let incremental = self.inner.bound(z, state);
        let scratch = estimate_cs(self.assoc, state).unwrap();
        assert!(
            (incremental - scratch).abs() <= 1e-9,
            "incremental {incremental} vs scratch {scratch} at {:?}",
            state.clique
        );
        incremental
    }
    fn push(&mut self, z: &WeightedGraph, vertex: usize) {
        self.evaluations += 1;
        self.inner.push(z, vertex);
    }
    fn pop(&mut self, z: &WeightedGraph, vertex: usize) {
        self.inner.pop(z, vertex);
    }
}

#[test]
fn incremental_cs_equals_scratch_throughout_search() {
    let dot = AttributeKernel::Dot;
    for t in 0..12 {
        let (x, y) = random_pair(t, 4);
        let assoc = build_association(&x, &y, &dot).unwrap();
        let mut est = CheckedCs {
            inner: CsEstimate::new(&assoc),
            assoc: &assoc,
            evaluations: 0,
        };
        let config = SolverConfig {
            pivot: PivotStrategy::MaxWeightClique,
            estimate: EstimateKind::CauchySchwarz,
            rng_seed: t,
            ..Default::default()
        };
        let report = solve_with_estimator(assoc.weighted(), &config, &mut est).unwrap();
        assert!(report.completed);
    }
}

#[test]
fn fixture_values() {
    let dot = AttributeKernel::Dot;
    let (k, phi) = brute_force_kernel(&x2(), &y2(), &dot);
    assert_eq!(k, 8.0);
    assert_eq!(phi, vec![(0, 0), (1, 1)]);
    let (kxx, _) = brute_force_kernel(&x2(), &x2(), &dot);
    assert_eq!(kxx, 6.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Load of a save is the identity, and a second save is
    /// byte-identical.
    #[test]
    fn prop_document_roundtrip(n in 1usize..8, p in 0u8..=10, dim in 1usize..3, seed in 0u64..500) {
        let g = generate_random_attributed(n, p as f64 / 10.0, dim, seed).unwrap();
        let saved = save_graph(&g).unwrap();
        let back = load_graph(saved.as_bytes()).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(save_graph(&back).unwrap(), saved);
    }
}
