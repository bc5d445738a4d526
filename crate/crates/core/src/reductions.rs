//! Reduction rules with budget bookkeeping.
//!
//! Every rule returns a [`Journal`] describing what it did to the graph. A
//! journal can be replayed on the input graph to reproduce the output, and a
//! cover of the output can be lifted back through it with [`lift_cover`].

use thiserror::Error;

use crate::crown::{Crown, CrownError, CrownKind};
use crate::graph::{Graph, GraphError, VertexId, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReduceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Crown(#[from] CrownError),
    #[error("crown rule needs {expected}, got {found:?} crown")]
    WrongCrownKind { expected: &'static str, found: CrownKind },
    #[error("deletion rule on an almost crown needs H to contain an edge")]
    HeadIndependent,
    #[error("merge rule needs an independent H")]
    HeadNotIndependent,
    #[error("vertex {0} does not have degree 2")]
    NotDegreeTwo(VertexId),
    #[error("neighbors of {0} are adjacent; folding is not allowed")]
    NeighborsAdjacent(VertexId),
    #[error("vertex {vertex} has degree {degree}, the maximum allowed is 4")]
    DegreeTooLarge { vertex: VertexId, degree: usize },
    #[error("replayed merge produced {found}, journal recorded {expected}")]
    ReplayMismatch { expected: VertexId, found: VertexId },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JournalEvent {
    /// Branch seed taken into the cover.
    BranchPick(VertexSet),
    /// Vertices put into the cover by D1, C1 or C2.
    CoverDelete(VertexSet),
    /// Vertices dropped without entering the cover (D0, crown side of C1/C2).
    Discard(VertexSet),
    /// `C ∪ H` contracted into `vstar` (C3 and folding).
    MergeFold { vstar: VertexId, c: VertexSet, h: VertexSet },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Journal {
    pub events: Vec<JournalEvent>,
}

impl Journal {
    pub fn push(&mut self, event: JournalEvent) {
        self.events.push(event);
    }

    pub fn extend(&mut self, other: Journal) {
        self.events.extend(other.events);
    }

    /// Applies the events in order to `g`.
    pub fn replay(&self, g: &Graph) -> Result<Graph, ReduceError> {
        let mut g = g.clone();
        for event in &self.events {
            match event {
                JournalEvent::BranchPick(s) | JournalEvent::CoverDelete(s) | JournalEvent::Discard(s) => {
                    g.remove_set(s)?;
                }
                JournalEvent::MergeFold { vstar, c, h } => {
                    let merged: VertexSet = c.union(h).copied().collect();
                    let found = g.merge_in_place(&merged)?;
                    if found != *vstar {
                        return Err(ReduceError::ReplayMismatch { expected: *vstar, found });
                    }
                }
            }
        }
        Ok(g)
    }
}

/// Lifts a cover of the reduced graph to a cover of the graph the journal started from.
pub fn lift_cover(journal: &Journal, cover: &VertexSet) -> VertexSet {
    let mut cover = cover.clone();
    for event in journal.events.iter().rev() {
        match event {
            JournalEvent::BranchPick(s) | JournalEvent::CoverDelete(s) => cover.extend(s.iter().copied()),
            JournalEvent::Discard(_) => {}
            JournalEvent::MergeFold { vstar, c, h } => {
                if cover.remove(vstar) {
                    cover.extend(h.iter().copied());
                } else {
                    cover.extend(c.iter().copied());
                }
            }
        }
    }
    cover
}

/// Result of exhausting D0/D1 after deleting a seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedInstance {
    pub graph: Graph,
    pub k: i64,
    /// Vertices deleted by D0.
    pub c_removed: VertexSet,
    /// The seed plus the neighbors deleted by D1.
    pub h_removed: VertexSet,
    /// `(pendant, deleted neighbor)` for each D1 step.
    pub pendant_pairs: Vec<(VertexId, VertexId)>,
    pub journal: Journal,
}

/// Result of a single crown or fold rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub graph: Graph,
    pub k: i64,
    pub vstar: Option<VertexId>,
    pub journal: Journal,
}

/// Deletes `seed` into the cover, then applies D0 and D1 until neither applies.
///
/// Always acts on the lowest-id qualifying vertex, D0 first. For an isolated
/// edge D1 fires on the lower endpoint, so the higher one enters the cover.
/// `k` may go negative.
pub fn exhaust_low_degree(g: &Graph, k: i64, seed: &VertexSet) -> Result<ReducedInstance, ReduceError> {
    let mut graph = g.delete_vertices(seed)?;
    let mut journal = Journal::default();
    if !seed.is_empty() {
        journal.push(JournalEvent::BranchPick(seed.clone()));
    }
    let mut k = k - seed.len() as i64;
    let mut c_removed = VertexSet::new();
    let mut h_removed = seed.clone();
    let mut pendant_pairs = Vec::new();

    loop {
        let mut isolated = None;
        let mut pendant = None;
        for v in graph.vertices() {
            match graph.degree(v) {
                0 => {
                    isolated = Some(v);
                    break;
                }
                1 if pendant.is_none() => pendant = Some(v),
                _ => {}
            }
        }
        if let Some(v) = isolated {
            graph.remove_set(&VertexSet::from([v]))?;
            c_removed.insert(v);
            journal.push(JournalEvent::Discard(VertexSet::from([v])));
        } else if let Some(v) = pendant {
            let u = graph.neighbors(v)[0];
            graph.remove_set(&VertexSet::from([u]))?;
            k -= 1;
            h_removed.insert(u);
            pendant_pairs.push((v, u));
            journal.push(JournalEvent::CoverDelete(VertexSet::from([u])));
        } else {
            break;
        }
    }

    Ok(ReducedInstance { graph, k, c_removed, h_removed, pendant_pairs, journal })
}

/// Rules C1 and C2: delete `C ∪ H`, spend `|H|`.
pub fn apply_crown_delete(g: &Graph, k: i64, crown: &Crown) -> Result<Reduction, ReduceError> {
    crown.validate(g)?;
    match crown.kind {
        CrownKind::Proper => {}
        CrownKind::Almost if g.is_independent(&crown.h) => return Err(ReduceError::HeadIndependent),
        CrownKind::Almost => {}
        found => return Err(ReduceError::WrongCrownKind { expected: "proper or almost", found }),
    }
    let mut graph = g.delete_vertices(&crown.h)?;
    graph.remove_set(&crown.c)?;
    let mut journal = Journal::default();
    journal.push(JournalEvent::CoverDelete(crown.h.clone()));
    journal.push(JournalEvent::Discard(crown.c.clone()));
    Ok(Reduction { graph, k: k - crown.h.len() as i64, vstar: None, journal })
}

/// Rule C3: merge `C ∪ H` into one vertex, spend `|H| - 1`.
pub fn apply_crown_merge(g: &Graph, k: i64, crown: &Crown) -> Result<Reduction, ReduceError> {
    if crown.kind != CrownKind::Almost {
        return Err(ReduceError::WrongCrownKind { expected: "almost", found: crown.kind });
    }
    crown.validate(g)?;
    if !g.is_independent(&crown.h) {
        return Err(ReduceError::HeadNotIndependent);
    }
    let merged: VertexSet = crown.c.union(&crown.h).copied().collect();
    let (graph, vstar) = g.merge_set(&merged)?;
    let mut journal = Journal::default();
    journal.push(JournalEvent::MergeFold { vstar, c: crown.c.clone(), h: crown.h.clone() });
    Ok(Reduction { graph, k: k - (crown.h.len() as i64 - 1), vstar: Some(vstar), journal })
}

/// Folds a degree-2 vertex with non-adjacent neighbors: C3 on `({v}, N(v))`.
pub fn fold_degree2(g: &Graph, k: i64, v: VertexId) -> Result<Reduction, ReduceError> {
    if !g.contains(v) {
        return Err(GraphError::UnknownVertex(v).into());
    }
    let nbrs = g.neighbors(v);
    if nbrs.len() != 2 {
        return Err(ReduceError::NotDegreeTwo(v));
    }
    let (a, b) = (nbrs[0], nbrs[1]);
    if g.has_edge(a, b) {
        return Err(ReduceError::NeighborsAdjacent(v));
    }
    let crown = Crown {
        c: VertexSet::from([v]),
        h: VertexSet::from([a, b]),
        kind: CrownKind::Almost,
        certificate: crate::crown::Matching { pairs: vec![(v, a)] },
    };
    apply_crown_merge(g, k, &crown)
}

/// Normalizes an input of maximum degree ≤ 4 to minimum degree ≥ 2.
pub fn preprocess_input(g: &Graph, k: i64) -> Result<ReducedInstance, ReduceError> {
    if let Some(vertex) = g.vertices().find(|&v| g.degree(v) > 4) {
        return Err(ReduceError::DegreeTooLarge { vertex, degree: g.degree(vertex) });
    }
    exhaust_low_degree(g, k, &VertexSet::new())
}
