//! Deterministic rule selection for the two rule ladders.

use crate::graph::{Graph, VertexId, VertexSet};
use crate::solver::measure::measure_thirds;
use crate::solver::trace::RuleId;
use crate::solver::Regime;

/// The first applicable rule together with the vertices it acts on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleChoice {
    /// Negative measure.
    R1,
    /// Empty graph.
    R2,
    /// Fold the degree-2 vertex `v`.
    R3 { v: VertexId },
    /// Degree-2 `v` with non-adjacent neighbors and a large second neighborhood.
    R4 { v: VertexId },
    /// Degree-2 `v` inside a triangle.
    R5 { v: VertexId },
    /// 3-regular graph in the degree-3 ladder.
    R6 { v: VertexId },
    /// Maximum degree ≤ 3 in the degree-4 ladder.
    R7,
    /// 4-regular graph.
    R8 { v: VertexId },
    /// Degree-3 `v` whose neighbors `u`, `w` are adjacent; `x` is the third neighbor.
    R9 { v: VertexId, u: VertexId, w: VertexId, x: VertexId },
    /// Degree-3 `v` and `t` sharing at least two neighbors.
    R10 { v: VertexId, t: VertexId },
    /// Degree-3 `v` with degree-4 neighbor `z` and at least one more degree-4 neighbor among `u`, `w`.
    R11 { v: VertexId, z: VertexId, u: VertexId, w: VertexId },
    /// Degree-3 `v` with exactly one degree-4 neighbor `z`.
    R12 { v: VertexId, z: VertexId, u: VertexId, w: VertexId },
}

impl RuleChoice {
    pub fn id(&self) -> RuleId {
        match self {
            RuleChoice::R1 => RuleId::R1,
            RuleChoice::R2 => RuleId::R2,
            RuleChoice::R3 { .. } => RuleId::R3,
            RuleChoice::R4 { .. } => RuleId::R4,
            RuleChoice::R5 { .. } => RuleId::R5,
            RuleChoice::R6 { .. } => RuleId::R6,
            RuleChoice::R7 => RuleId::R7,
            RuleChoice::R8 { .. } => RuleId::R8,
            RuleChoice::R9 { .. } => RuleId::R9,
            RuleChoice::R10 { .. } => RuleId::R10,
            RuleChoice::R11 { .. } => RuleId::R11,
            RuleChoice::R12 { .. } => RuleId::R12,
        }
    }
}

/// `|N(N(v)) \ {v}|` for a degree-2 vertex.
fn second_neighborhood_size(g: &Graph, v: VertexId) -> usize {
    let nv: VertexSet = g.neighbors(v).iter().copied().collect();
    let mut second = g.neighborhood_of_set(&nv).expect("live neighbors");
    second.remove(&v);
    second.len()
}

fn degree_two_rule(g: &Graph) -> Option<RuleChoice> {
    let twos: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == 2).collect();
    let open = |v: VertexId| {
        let n = g.neighbors(v);
        !g.has_edge(n[0], n[1])
    };
    if let Some(&v) = twos.iter().find(|&&v| open(v) && second_neighborhood_size(g, v) <= 2) {
        return Some(RuleChoice::R3 { v });
    }
    if let Some(&v) = twos.iter().find(|&&v| open(v)) {
        return Some(RuleChoice::R4 { v });
    }
    twos.first().map(|&v| RuleChoice::R5 { v })
}

fn triangle_at(g: &Graph, v: VertexId) -> Option<RuleChoice> {
    let n = g.neighbors(v);
    for i in 0..3 {
        for j in i + 1..3 {
            if g.has_edge(n[i], n[j]) {
                let x = n[3 - i - j];
                return Some(RuleChoice::R9 { v, u: n[i], w: n[j], x });
            }
        }
    }
    None
}

fn shared_neighbors(g: &Graph, v: VertexId) -> Option<RuleChoice> {
    let nv = g.neighbors(v);
    g.vertices()
        .filter(|&t| t != v)
        .find(|&t| g.neighbors(t).iter().filter(|u| nv.binary_search(u).is_ok()).count() >= 2)
        .map(|t| RuleChoice::R10 { v, t })
}

/// Picks the first applicable rule.
///
/// Rules 9–11 are tested against every degree-3 vertex (lowest id first),
/// because the arguments behind rules 11 and 12 rely on none of them applying
/// anywhere in the graph. Returns `None` when no rule applies, which only
/// happens if the caller's invariants are broken.
pub fn select_rule(g: &Graph, k: i64, regime: Regime) -> Option<RuleChoice> {
    if measure_thirds(g, k).0 < 0 {
        return Some(RuleChoice::R1);
    }
    if g.is_empty() {
        return Some(RuleChoice::R2);
    }
    if let Some(choice) = degree_two_rule(g) {
        return Some(choice);
    }
    let first = g.vertices().next().expect("nonempty graph");
    match regime {
        Regime::Deg3 => g.is_d_regular(3).then_some(RuleChoice::R6 { v: first }),
        Regime::Deg4 => {
            let max = g.max_degree().expect("nonempty graph");
            if max <= 3 {
                return Some(RuleChoice::R7);
            }
            if g.is_d_regular(4) {
                return Some(RuleChoice::R8 { v: first });
            }
            let threes: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == 3).collect();
            if let Some(c) = threes.iter().find_map(|&v| triangle_at(g, v)) {
                return Some(c);
            }
            if let Some(c) = threes.iter().find_map(|&v| shared_neighbors(g, v)) {
                return Some(c);
            }
            let split = |v: VertexId| {
                let n = g.neighbors(v);
                let z = *n.iter().find(|&&u| g.degree(u) == 4)?;
                let mut rest = n.iter().copied().filter(|&u| u != z);
                let (u, w) = (rest.next()?, rest.next()?);
                Some((z, u, w))
            };
            for &v in &threes {
                if let Some((z, u, w)) = split(v) {
                    if g.degree(u) == 4 || g.degree(w) == 4 {
                        return Some(RuleChoice::R11 { v, z, u, w });
                    }
                }
            }
            threes
                .iter()
                .find_map(|&v| split(v).map(|(z, u, w)| RuleChoice::R12 { v, z, u, w }))
        }
    }
}
