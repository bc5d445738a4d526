mod common;

use vc4_core::oracle::{is_vertex_cover, min_vc_exact};
use vc4_core::solver::{RuleId, Solver, SolverConfig, TraceEvent};
use vc4_core::Graph;

/// The dodecahedron (generalized Petersen graph GP(10, 2)) plus a hub joined to
/// `spokes`, which should be pairwise at distance ≥ 3.
fn dodecahedron_with_hub(spokes: [u32; 4]) -> Graph {
    let mut edges = Vec::new();
    for i in 0..10u32 {
        edges.push((i, (i + 1) % 10));
        edges.push((i, i + 10));
        edges.push((i + 10, (i + 2) % 10 + 10));
    }
    edges.extend(spokes.iter().map(|&s| (20, s)));
    Graph::from_internal_edges(21, &edges)
}

#[test]
fn forced_fold_keeps_its_degree_facts() {
    let g = dodecahedron_with_hub([0, 3, 16, 17]);
    let opt = min_vc_exact(&g).unwrap().size as i64;
    let mut saw_r12 = false;
    for k in 0..=g.n() as i64 {
        let mut events = Vec::new();
        let mut solver = Solver::new(SolverConfig::default(), &mut events);
        let d = solver.decide(&g, k).unwrap();
        assert_eq!(d.answer, k >= opt, "k = {k}");
        if let Some(c) = &d.cover {
            assert!(is_vertex_cover(&g, c));
        }
        let stats = solver.stats;
        assert!(stats.violations.is_empty());
        if stats.rule_counts.contains_key("R12") {
            saw_r12 = true;
            assert!(stats.forced_folds >= 1);
            assert!(events.iter().any(|e| matches!(e, TraceEvent::Branch { rule: RuleId::R12, ok: true, .. })));
        }
    }
    assert!(saw_r12);
}
