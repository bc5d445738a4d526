//! Simple undirected graphs over stable vertex identifiers.
//!
//! A [`Graph`] is a value type: branching code clones it instead of keeping an
//! undo log. Vertex ids are dense indices into the adjacency table; deleted
//! vertices leave a hole, and [`Graph::merge_set`] always appends a fresh id, so
//! an id is never reused within one run.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Internal 0-based vertex identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Ordered vertex set. Ordering keeps every scan deterministic.
pub type VertexSet = BTreeSet<VertexId>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex id {id} out of range 1..={n}")]
    OutOfRange { id: usize, n: usize },
    #[error("vertex {0} is not live")]
    UnknownVertex(VertexId),
    #[error("cannot merge an empty vertex set")]
    EmptyMerge,
    #[error("degree extremum of an empty graph")]
    EmptyGraph,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    /// `None` marks a deleted vertex. Neighbor lists are sorted.
    adj: Vec<Option<Vec<VertexId>>>,
    live: usize,
}

impl Graph {
    /// Graph with `n` isolated vertices `0..n`.
    pub fn with_vertices(n: usize) -> Self {
        Graph {
            adj: vec![Some(Vec::new()); n],
            live: n,
        }
    }

    /// Builds a graph from 1-based external ids. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::with_vertices(n);
        for &(a, b) in edges {
            for id in [a, b] {
                if id == 0 || id > n {
                    return Err(GraphError::OutOfRange { id, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            g.insert_edge(VertexId(a as u32 - 1), VertexId(b as u32 - 1));
        }
        Ok(g)
    }

    /// Builds a graph from 0-based internal ids; panics on self-loops or out-of-range ids.
    pub fn from_internal_edges(n: usize, edges: &[(u32, u32)]) -> Self {
        let mut g = Graph::with_vertices(n);
        for &(a, b) in edges {
            assert!(a != b && (a as usize) < n && (b as usize) < n, "bad edge ({a},{b})");
            g.insert_edge(VertexId(a), VertexId(b));
        }
        g
    }

    /// Number of live vertices.
    pub fn n(&self) -> usize {
        self.live
    }

    pub fn is_empty(&self) -> bool {
        self.live == 0
    }

    /// One past the largest id ever allocated.
    pub fn id_bound(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn contains(&self, v: VertexId) -> bool {
        matches!(self.adj.get(v.index()), Some(Some(_)))
    }

    /// Live vertices in increasing id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, a)| a.is_some())
            .map(|(i, _)| VertexId(i as u32))
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    /// Sorted neighbors of a live vertex. Panics on a dead id.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        self.adj[v.index()]
            .as_deref()
            .unwrap_or_else(|| panic!("vertex {v} is not live"))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.contains(u) && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.vertices()
            .flat_map(|u| {
                self.neighbors(u)
                    .iter()
                    .filter(move |&&v| u < v)
                    .map(move |&v| (u, v))
            })
            .collect()
    }

    fn insert_edge(&mut self, u: VertexId, v: VertexId) {
        for (a, b) in [(u, v), (v, u)] {
            let list = self.adj[a.index()].as_mut().expect("live endpoint");
            if let Err(pos) = list.binary_search(&b) {
                list.insert(pos, b);
            }
        }
    }

    fn check_live<'a>(&self, set: impl IntoIterator<Item = &'a VertexId>) -> Result<(), GraphError> {
        for &v in set {
            if !self.contains(v) {
                return Err(GraphError::UnknownVertex(v));
            }
        }
        Ok(())
    }

    fn remove_vertex(&mut self, v: VertexId) {
        let nbrs = self.adj[v.index()].take().expect("live vertex");
        for u in nbrs {
            let list = self.adj[u.index()].as_mut().expect("symmetric adjacency");
            if let Ok(pos) = list.binary_search(&v) {
                list.remove(pos);
            }
        }
        self.live -= 1;
    }

    /// In-place `G - S`.
    pub fn remove_set(&mut self, set: &VertexSet) -> Result<(), GraphError> {
        self.check_live(set)?;
        for &v in set {
            self.remove_vertex(v);
        }
        Ok(())
    }

    /// `G - S` as a new graph; `self` is untouched.
    pub fn delete_vertices(&self, set: &VertexSet) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.remove_set(set)?;
        Ok(g)
    }

    /// External neighborhood `N(S)`: union of neighborhoods minus `S`.
    pub fn neighborhood_of_set(&self, set: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_live(set)?;
        Ok(set
            .iter()
            .flat_map(|&v| self.neighbors(v).iter().copied())
            .filter(|u| !set.contains(u))
            .collect())
    }

    /// In-place merge of `S` into a fresh vertex, which is returned.
    pub fn merge_in_place(&mut self, set: &VertexSet) -> Result<VertexId, GraphError> {
        if set.is_empty() {
            return Err(GraphError::EmptyMerge);
        }
        let outside = self.neighborhood_of_set(set)?;
        for &v in set {
            self.remove_vertex(v);
        }
        let vstar = VertexId(self.adj.len() as u32);
        self.adj.push(Some(Vec::new()));
        self.live += 1;
        for u in outside {
            self.insert_edge(vstar, u);
        }
        Ok(vstar)
    }

    /// Merge `S` into a fresh vertex `v*` adjacent to exactly `N(S)`.
    pub fn merge_set(&self, set: &VertexSet) -> Result<(Graph, VertexId), GraphError> {
        let mut g = self.clone();
        let vstar = g.merge_in_place(set)?;
        Ok((g, vstar))
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        self.vertices()
            .map(|v| self.degree(v))
            .min()
            .ok_or(GraphError::EmptyGraph)
    }

    pub fn max_degree(&self) -> Result<usize, GraphError> {
        self.vertices()
            .map(|v| self.degree(v))
            .max()
            .ok_or(GraphError::EmptyGraph)
    }

    /// True iff every live vertex has degree `d` (vacuously true when empty).
    pub fn is_d_regular(&self, d: usize) -> bool {
        self.vertices().all(|v| self.degree(v) == d)
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|&v| self.neighbors(v).iter().all(|u| !set.contains(u)))
    }

    /// Connected components ordered by their smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.adj.len()];
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start.index()] {
                continue;
            }
            seen[start.index()] = true;
            let mut comp = VertexSet::new();
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &u in self.neighbors(v) {
                    if !seen[u.index()] {
                        seen[u.index()] = true;
                        stack.push(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Subgraph induced by `set`, keeping ids.
    pub fn induced(&self, set: &VertexSet) -> Graph {
        let mut g = self.clone();
        let rest: VertexSet = self.vertices().filter(|v| !set.contains(v)).collect();
        g.remove_set(&rest).expect("live complement");
        g
    }

    /// Checks symmetry, simplicity, sortedness and the live count.
    pub fn validate(&self) -> Result<(), String> {
        let mut live = 0;
        for v in self.vertices() {
            live += 1;
            let nbrs = self.neighbors(v);
            if nbrs.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("adjacency of {v} not strictly sorted"));
            }
            for &u in nbrs {
                if u == v {
                    return Err(format!("self-loop at {v}"));
                }
                if !self.contains(u) {
                    return Err(format!("{v} adjacent to dead vertex {u}"));
                }
                if self.neighbors(u).binary_search(&v).is_err() {
                    return Err(format!("asymmetric edge {v}->{u}"));
                }
            }
        }
        if live != self.live {
            return Err(format!("live count {} != {}", self.live, live));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[u32]) -> VertexSet {
        ids.iter().map(|&i| VertexId(i)).collect()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                edges.push((a, b));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn degrees(g: &Graph) -> Vec<usize> {
        g.vertices().map(|v| g.degree(v)).collect()
    }

    #[test]
    fn from_edges_basics() {
        let p3 = Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(degrees(&p3), vec![1, 2, 1]);
        assert_eq!(degrees(&cycle(5)), vec![2; 5]);
        let dup = Graph::from_edges(2, &[(1, 2), (2, 1)]).unwrap();
        assert_eq!(dup.num_edges(), 1);
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(Graph::from_edges(3, &[(2, 2)]), Err(GraphError::SelfLoop(2)));
        assert_eq!(
            Graph::from_edges(3, &[(1, 4)]),
            Err(GraphError::OutOfRange { id: 4, n: 3 })
        );
        assert!(Graph::from_edges(3, &[(0, 1)]).is_err());
    }

    #[test]
    fn delete_vertices_cases() {
        let k4 = complete(4);
        let k3 = k4.delete_vertices(&set(&[0])).unwrap();
        assert_eq!(k3.n(), 3);
        assert!(k3.is_d_regular(2));
        assert_eq!(k4.n(), 4, "input untouched");

        let c5 = cycle(5);
        let p = c5.delete_vertices(&set(&[0])).unwrap();
        assert_eq!(p.edges(), vec![(VertexId(1), VertexId(2)), (VertexId(2), VertexId(3)), (VertexId(3), VertexId(4))]);
        assert_eq!(c5.delete_vertices(&VertexSet::new()).unwrap(), c5);
        assert_eq!(
            c5.delete_vertices(&set(&[9])),
            Err(GraphError::UnknownVertex(VertexId(9)))
        );
    }

    #[test]
    fn neighborhoods() {
        let c5 = cycle(5);
        assert_eq!(c5.neighborhood_of_set(&set(&[0])).unwrap(), set(&[1, 4]));
        assert_eq!(c5.neighborhood_of_set(&set(&[0, 1])).unwrap(), set(&[2, 4]));
        assert!(complete(4).neighborhood_of_set(&set(&[0, 1, 2, 3])).unwrap().is_empty());
    }

    #[test]
    fn merge_examples() {
        // 4-cycle a-b-c-d, merge {a,b,d}
        let c4 = cycle(4);
        let (g, vstar) = c4.merge_set(&set(&[0, 1, 3])).unwrap();
        assert_eq!(vstar, VertexId(4));
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), vec![(VertexId(2), VertexId(4))]);

        let p3 = Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        let (g, vstar) = p3.merge_set(&set(&[0, 2])).unwrap();
        assert_eq!(g.neighbors(vstar), &[VertexId(1)]);

        // 5-cycle merge {1,2,5} (0-based {0,1,4}) leaves the triangle {v*,3,4}
        let (g, vstar) = cycle(5).merge_set(&set(&[0, 1, 4])).unwrap();
        assert_eq!(g.n(), 3);
        assert!(g.is_d_regular(2));
        assert!(g.has_edge(VertexId(2), VertexId(3)));
        assert_eq!(g.neighbors(vstar), &[VertexId(2), VertexId(3)]);
        g.validate().unwrap();

        assert_eq!(cycle(5).merge_set(&VertexSet::new()), Err(GraphError::EmptyMerge));
    }

    #[test]
    fn degree_extrema() {
        let k5 = complete(5);
        assert_eq!(k5.min_degree(), Ok(4));
        assert_eq!(k5.max_degree(), Ok(4));
        assert!(k5.is_d_regular(4));
        let p3 = Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!((p3.min_degree(), p3.max_degree()), (Ok(1), Ok(2)));
        let empty = Graph::default();
        assert_eq!(empty.min_degree(), Err(GraphError::EmptyGraph));
        assert_eq!(empty.max_degree(), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn components() {
        let two = Graph::from_edges(6, &[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)]).unwrap();
        let comps = two.connected_components();
        assert_eq!(comps, vec![set(&[0, 1, 2]), set(&[3, 4, 5])]);
        assert_eq!(cycle(5).connected_components().len(), 1);
        assert_eq!(Graph::with_vertices(7).connected_components().len(), 7);
        assert!(Graph::default().connected_components().is_empty());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (2usize..14).prop_flat_map(|n| {
                proptest::collection::vec((0..n as u32, 0..n as u32), 0..3 * n).prop_map(move |pairs| {
                    let edges: Vec<_> = pairs.into_iter().filter(|(a, b)| a != b).collect();
                    Graph::from_internal_edges(n, &edges)
                })
            })
        }

        proptest! {
            #[test]
            fn delete_and_merge_keep_structure(g in arb_graph(), picks in proptest::collection::vec(any::<u32>(), 1..5), merge in any::<bool>()) {
                let n = g.n();
                let s: VertexSet = picks.iter().map(|p| VertexId(p % n as u32)).collect();
                if merge {
                    let expected_deg = g.neighborhood_of_set(&s).unwrap().len();
                    let (h, vstar) = g.merge_set(&s).unwrap();
                    prop_assert!(h.validate().is_ok());
                    prop_assert_eq!(h.n(), n - s.len() + 1);
                    prop_assert_eq!(h.degree(vstar), expected_deg);
                    prop_assert!(h.vertices().all(|v| v <= vstar));
                } else {
                    let h = g.delete_vertices(&s).unwrap();
                    prop_assert!(h.validate().is_ok());
                    prop_assert_eq!(h.n(), n - s.len());
                }
            }

            #[test]
            fn components_partition(g in arb_graph()) {
                let comps = g.connected_components();
                let total: usize = comps.iter().map(|c| c.len()).sum();
                prop_assert_eq!(total, g.n());
                let mut owner = vec![usize::MAX; g.id_bound()];
                for (i, c) in comps.iter().enumerate() {
                    for v in c {
                        prop_assert_eq!(owner[v.index()], usize::MAX);
                        owner[v.index()] = i;
                    }
                }
                for (u, v) in g.edges() {
                    prop_assert_eq!(owner[u.index()], owner[v.index()]);
                }
            }
        }
    }
}
