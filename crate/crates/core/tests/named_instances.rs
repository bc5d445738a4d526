mod common;

use common::{complete, cycle, petersen};
use vc4_core::oracle::is_vertex_cover;
use vc4_core::solver::{min_vertex_cover, RuleId, Solver, SolverConfig, TraceEvent};
use vc4_core::{vc_decide, Graph};

fn answer(g: &Graph, k: i64) -> bool {
    let d = vc_decide(g, k, true).unwrap();
    if let Some(c) = &d.cover {
        assert!(is_vertex_cover(g, c) && c.len() as i64 <= k);
    }
    d.answer
}

#[test]
fn small_named_graphs() {
    for (g, opt) in [(cycle(5), 3), (complete(4), 3), (complete(5), 4), (petersen(), 6)] {
        assert!(answer(&g, opt), "{opt}");
        assert!(!answer(&g, opt - 1), "{opt}");
        assert_eq!(min_vertex_cover(&g).unwrap().0 as i64, opt);
    }
}

#[test]
fn disjoint_unions() {
    let two_c5 = Graph::from_edges(
        10,
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (6, 7), (7, 8), (8, 9), (9, 10), (10, 6)],
    )
    .unwrap();
    assert!(answer(&two_c5, 6));
    assert!(!answer(&two_c5, 5));

    let mut edges = vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)];
    for a in 6..=10 {
        for b in a + 1..=10 {
            edges.push((a, b));
        }
    }
    let c5_k5 = Graph::from_edges(10, &edges).unwrap();
    assert!(answer(&c5_k5, 7));
    assert!(!answer(&c5_k5, 6));
}

#[test]
fn k5_uses_regular_branching() {
    let mut events = Vec::new();
    let mut solver = Solver::new(SolverConfig::default(), &mut events);
    assert!(solver.decide(&complete(5), 4).unwrap().answer);
    let stats = solver.stats;
    assert_eq!(stats.rule_counts.get("R8"), Some(&1));
    assert_eq!(stats.mu0, Some(7));
    assert!(events.iter().any(|e| matches!(e, TraceEvent::Branch { rule: RuleId::R8, .. })));
}

#[test]
fn trivial_inputs() {
    assert!(answer(&Graph::default(), 0));
    assert!(!answer(&cycle(5), -1));
    let tree = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
    assert!(answer(&tree, 2) && !answer(&tree, 1));
}
