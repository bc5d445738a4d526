mod common;

use common::random_bounded;
use proptest::prelude::*;
use vc4_core::oracle::{is_vertex_cover, min_vc_exact};
use vc4_core::solver::{NullSink, Solver, SolverConfig};

fn check_all_k(g: &vc4_core::Graph) {
    let opt = min_vc_exact(g).unwrap().size as i64;
    for k in 0..=g.n() as i64 {
        let mut sink = NullSink;
        let mut solver = Solver::new(SolverConfig::default(), &mut sink);
        let d = solver
            .decide(g, k)
            .unwrap_or_else(|e| panic!("k={k} edges={:?}: {e}", g.edges()));
        assert_eq!(d.answer, k >= opt, "k={k} opt={opt} edges={:?}", g.edges());
        if let Some(cover) = d.cover {
            assert!(is_vertex_cover(g, &cover) && cover.len() as i64 <= k);
        }
        assert!(solver.stats.violations.is_empty());
    }
}

#[test]
fn sweep_degree_four() {
    for seed in 0..300u64 {
        let n = 5 + (seed % 16) as usize;
        let density = [0.3, 0.6, 0.9, 1.0][(seed % 4) as usize];
        check_all_k(&random_bounded(n, 4, density, seed));
    }
}

#[test]
fn sweep_degree_three() {
    for seed in 0..200u64 {
        let n = 5 + (seed % 16) as usize;
        check_all_k(&random_bounded(n, 3, 1.0, 10_000 + seed));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn agrees_with_oracle(n in 1usize..16, seed in any::<u64>(), density in 0.2f64..1.0) {
        check_all_k(&random_bounded(n, 4, density, seed));
    }

    #[test]
    fn answers_are_monotone_in_k(n in 1usize..14, seed in any::<u64>()) {
        let g = random_bounded(n, 4, 0.8, seed);
        let answers: Vec<bool> = (-1..=n as i64)
            .map(|k| vc4_core::vc_decide(&g, k, false).unwrap().answer)
            .collect();
        prop_assert!(answers.windows(2).all(|w| !w[0] || w[1]));
        prop_assert!(!answers[0]);
    }
}
