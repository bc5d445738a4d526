//! Brute-force references used by the tests and the `verify` command.
//!
//! Nothing here touches the reduction or crown code: the exact solver works on
//! its own bitmask copy of the graph.

use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};

pub const MAX_ORACLE_N: usize = 32;
pub const MAX_BRUTE_SIDE: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {0} vertices, oracle limit is {MAX_ORACLE_N}")]
    TooLarge(usize),
    #[error("crown side of size {0} exceeds brute-force limit {MAX_BRUTE_SIDE}")]
    SideTooLarge(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub size: usize,
    pub witness: VertexSet,
}

struct Bits {
    ids: Vec<VertexId>,
    adj: Vec<u32>,
}

impl Bits {
    fn new(g: &Graph) -> Result<Self, OracleError> {
        if g.n() > MAX_ORACLE_N {
            return Err(OracleError::TooLarge(g.n()));
        }
        let ids: Vec<VertexId> = g.vertices().collect();
        let mut pos = vec![usize::MAX; g.id_bound()];
        for (i, v) in ids.iter().enumerate() {
            pos[v.index()] = i;
        }
        let adj = ids
            .iter()
            .map(|&v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << pos[u.index()]))
            .collect();
        Ok(Bits { ids, adj })
    }

    fn full(&self) -> u32 {
        if self.ids.len() == 32 {
            u32::MAX
        } else {
            (1u32 << self.ids.len()) - 1
        }
    }

    fn to_set(&self, mask: u32) -> VertexSet {
        (0..self.ids.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.ids[i])
            .collect()
    }

    /// Plain two-way branching: take `v`, or take all of `N(v)`.
    fn min_cover(&self, alive: u32) -> (u32, u32) {
        let mut best_v = None;
        let mut best_deg = 0;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (self.adj[v] & alive).count_ones();
            if d > best_deg {
                best_deg = d;
                best_v = Some(v);
            }
        }
        let Some(v) = best_v else {
            return (0, 0);
        };
        let nv = self.adj[v] & alive;
        let (s1, m1) = self.min_cover(alive & !(1 << v));
        let (s2, m2) = self.min_cover(alive & !nv & !(1 << v));
        if s1 < s2 + best_deg {
            (s1 + 1, m1 | 1 << v)
        } else {
            (s2 + best_deg, m2 | nv)
        }
    }

    fn covers(&self, mask: u32) -> bool {
        (0..self.ids.len()).all(|v| mask >> v & 1 == 1 || self.adj[v] & !mask == 0)
    }
}

/// Exact minimum vertex cover by exhaustive branching.
pub fn min_vc_exact(g: &Graph) -> Result<OracleResult, OracleError> {
    let bits = Bits::new(g)?;
    let (size, mask) = bits.min_cover(bits.full());
    Ok(OracleResult {
        size: size as usize,
        witness: bits.to_set(mask),
    })
}

/// Minimum cover size by enumerating subsets in order of size; for cross-checks on small graphs.
pub fn min_vc_by_subsets(g: &Graph) -> Result<usize, OracleError> {
    if g.n() > 20 {
        return Err(OracleError::TooLarge(g.n()));
    }
    let bits = Bits::new(g)?;
    let n = bits.ids.len() as u32;
    (0..=n)
        .find(|&size| has_cover_of_size(&bits, size))
        .map(|s| s as usize)
        .ok_or(OracleError::TooLarge(g.n()))
}

/// True iff some subset of exactly `size` live vertices is a cover (n ≤ 20).
pub fn exists_cover_of_size(g: &Graph, size: usize) -> Result<bool, OracleError> {
    if g.n() > 20 {
        return Err(OracleError::TooLarge(g.n()));
    }
    let bits = Bits::new(g)?;
    Ok(has_cover_of_size(&bits, size as u32))
}

fn has_cover_of_size(bits: &Bits, size: u32) -> bool {
    (0..=bits.full()).any(|m| m.count_ones() == size && bits.covers(m))
}

/// True iff every edge of `g` has an endpoint in `set`.
pub fn is_vertex_cover(g: &Graph, set: &VertexSet) -> bool {
    g.edges()
        .iter()
        .all(|(u, v)| set.contains(u) || set.contains(v))
}

fn side_guard(c: &VertexSet, h: &VertexSet) -> Result<(), OracleError> {
    for side in [c, h] {
        if side.len() > MAX_BRUTE_SIDE {
            return Err(OracleError::SideTooLarge(side.len()));
        }
    }
    Ok(())
}

/// Maximum C–H matching size by trying every assignment.
pub fn max_matching_brute(g: &Graph, c: &VertexSet, h: &VertexSet) -> Result<usize, OracleError> {
    side_guard(c, h)?;
    let cs: Vec<VertexId> = c.iter().copied().collect();
    let hs: Vec<VertexId> = h.iter().copied().collect();
    fn go(g: &Graph, cs: &[VertexId], hs: &[VertexId], used: u32) -> usize {
        let Some((&first, rest)) = cs.split_first() else {
            return 0;
        };
        let mut best = go(g, rest, hs, used);
        for (j, &hv) in hs.iter().enumerate() {
            if used >> j & 1 == 0 && g.has_edge(first, hv) {
                best = best.max(1 + go(g, rest, hs, used | 1 << j));
            }
        }
        best
    }
    Ok(go(g, &cs, &hs, 0))
}

/// Checks `|N(S)| ≥ |S| + 1` for every nonempty `S ⊆ C` by enumeration.
pub fn surplus_brute(g: &Graph, c: &VertexSet, h: &VertexSet) -> Result<bool, OracleError> {
    side_guard(c, h)?;
    let cs: Vec<VertexId> = c.iter().copied().collect();
    for mask in 1u32..1 << cs.len() {
        let s: VertexSet = (0..cs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| cs[i])
            .collect();
        let nbrs: VertexSet = s
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied())
            .filter(|u| !s.contains(u))
            .collect();
        if nbrs.len() < s.len() + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
