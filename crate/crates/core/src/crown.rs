//! Crowns and the bipartite matchings that certify them.
//!
//! A general crown `(C, H)` has every neighbor of `C` inside `H`. It is
//! *proper* when a C–H matching saturates `H`, *almost* when `|H| = |C| + 1`
//! and every nonempty `S ⊆ C` has `|N(S)| ≥ |S| + 1`, and *good* when
//! `G - C - H` has minimum degree at least 2.

use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};
use crate::reductions;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrownError {
    #[error("crown sides overlap at vertex {0}")]
    Overlap(VertexId),
    #[error("({c:?}, {h:?}) is not a general crown")]
    NotGeneralCrown { c: VertexSet, h: VertexSet },
    #[error("|C| = {c} is smaller than |H| - 1 = {h_minus_one}")]
    TooFewCrownVertices { c: usize, h_minus_one: usize },
    #[error("crown-side vertex {0} has no neighbors")]
    IsolatedCrownVertex(VertexId),
    #[error("crown failed validation: {0}")]
    Validation(String),
}

/// C–H matching stored as `(c, h)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(VertexId, VertexId)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Disjoint endpoints, real edges, one endpoint in each side.
    pub fn is_valid(&self, g: &Graph, c: &VertexSet, h: &VertexSet) -> bool {
        let mut seen = VertexSet::new();
        self.pairs.iter().all(|&(cv, hv)| {
            c.contains(&cv)
                && h.contains(&hv)
                && g.has_edge(cv, hv)
                && seen.insert(cv)
                && seen.insert(hv)
        })
    }

    fn saturates(&self, side: &VertexSet, pick: impl Fn(&(VertexId, VertexId)) -> VertexId) -> bool {
        let covered: VertexSet = self.pairs.iter().map(pick).collect();
        side.iter().all(|v| covered.contains(v))
    }

    pub fn saturates_h(&self, h: &VertexSet) -> bool {
        self.saturates(h, |p| p.1)
    }

    pub fn saturates_c(&self, c: &VertexSet) -> bool {
        self.saturates(c, |p| p.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrownKind {
    GeneralOnly,
    Proper,
    Almost,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crown {
    pub c: VertexSet,
    pub h: VertexSet,
    pub kind: CrownKind,
    /// Saturates `H` for proper crowns and `C` for almost crowns.
    pub certificate: Matching,
}

impl Crown {
    /// Re-checks the kind against the graph.
    pub fn validate(&self, g: &Graph) -> Result<(), CrownError> {
        let fail = |msg: &str| Err(CrownError::Validation(format!("{msg}: C={:?} H={:?}", self.c, self.h)));
        if !check_general_crown(g, &self.c, &self.h) {
            return fail("not a general crown");
        }
        if !self.certificate.is_valid(g, &self.c, &self.h) {
            return fail("invalid matching certificate");
        }
        match self.kind {
            CrownKind::GeneralOnly => Ok(()),
            CrownKind::Proper if self.certificate.saturates_h(&self.h) => Ok(()),
            CrownKind::Proper => fail("matching does not saturate H"),
            CrownKind::Almost if !self.certificate.saturates_c(&self.c) => fail("matching does not saturate C"),
            CrownKind::Almost if !check_almost_crown(g, &self.c, &self.h) => fail("surplus condition fails"),
            CrownKind::Almost => Ok(()),
        }
    }
}

/// Outcome of [`resolve_crown`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Resolution {
    GoodProper(Crown),
    Almost(Crown),
}

/// Left side indexed `0..left.len()`, right side `0..right.len()`.
#[derive(Clone)]
struct Bipartite {
    left: Vec<VertexId>,
    right: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
    match_left: Vec<Option<usize>>,
    match_right: Vec<Option<usize>>,
}

impl Bipartite {
    fn new(g: &Graph, c: &VertexSet, h: &VertexSet) -> Self {
        let left: Vec<VertexId> = c.iter().copied().collect();
        let right: Vec<VertexId> = h.iter().copied().collect();
        let adj = left
            .iter()
            .map(|&l| {
                g.neighbors(l)
                    .iter()
                    .filter_map(|u| right.binary_search(u).ok())
                    .collect()
            })
            .collect();
        Bipartite {
            match_left: vec![None; left.len()],
            match_right: vec![None; right.len()],
            left,
            right,
            adj,
        }
    }

    /// Adds a left vertex with the same neighbors as left vertex `of`.
    fn add_twin(&mut self, of: usize) -> usize {
        self.left.push(self.left[of]);
        self.adj.push(self.adj[of].clone());
        self.match_left.push(None);
        self.left.len() - 1
    }

    fn augment(&mut self, l: usize, visited: &mut [bool]) -> bool {
        for i in 0..self.adj[l].len() {
            let r = self.adj[l][i];
            if visited[r] {
                continue;
            }
            visited[r] = true;
            let free = match self.match_right[r] {
                None => true,
                Some(other) => self.augment(other, visited),
            };
            if free {
                self.match_left[l] = Some(r);
                self.match_right[r] = Some(l);
                return true;
            }
        }
        false
    }

    fn try_match(&mut self, l: usize) -> bool {
        let mut visited = vec![false; self.right.len()];
        self.augment(l, &mut visited)
    }

    fn maximize(&mut self) -> usize {
        for l in 0..self.left.len() {
            if self.match_left[l].is_none() {
                self.try_match(l);
            }
        }
        self.size()
    }

    fn size(&self) -> usize {
        self.match_left.iter().flatten().count()
    }

    /// Left and right vertices reachable from `roots` along alternating paths
    /// (any edge left→right, matching edge right→left).
    fn alternating_reach(&self, roots: &[usize]) -> (Vec<bool>, Vec<bool>) {
        let mut seen_l = vec![false; self.left.len()];
        let mut seen_r = vec![false; self.right.len()];
        let mut stack: Vec<usize> = roots.to_vec();
        for &r in roots {
            seen_l[r] = true;
        }
        while let Some(l) = stack.pop() {
            for &r in &self.adj[l] {
                if seen_r[r] {
                    continue;
                }
                seen_r[r] = true;
                if let Some(next) = self.match_right[r] {
                    if !seen_l[next] {
                        seen_l[next] = true;
                        stack.push(next);
                    }
                }
            }
        }
        (seen_l, seen_r)
    }

    fn pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.match_left
            .iter()
            .enumerate()
            .filter_map(|(l, m)| m.map(|r| (self.left[l], self.right[r])))
            .collect()
    }
}

fn check_disjoint(c: &VertexSet, h: &VertexSet) -> Result<(), CrownError> {
    match c.intersection(h).next() {
        Some(&v) => Err(CrownError::Overlap(v)),
        None => Ok(()),
    }
}

/// Maximum-cardinality matching on the C–H edges of `g`, by augmenting paths.
pub fn max_bipartite_matching(g: &Graph, c: &VertexSet, h: &VertexSet) -> Result<Matching, CrownError> {
    check_disjoint(c, h)?;
    let mut bip = Bipartite::new(g, c, h);
    bip.maximize();
    Ok(Matching { pairs: bip.pairs() })
}

/// `C` and `H` disjoint and nonempty, with `N(C) ⊆ H`.
pub fn check_general_crown(g: &Graph, c: &VertexSet, h: &VertexSet) -> bool {
    !c.is_empty()
        && !h.is_empty()
        && c.is_disjoint(h)
        && c.iter().chain(h).all(|&v| g.contains(v))
        && c.iter().all(|&v| g.neighbors(v).iter().all(|u| h.contains(u)))
}

/// `G - C - H` has minimum degree ≥ 2 (vacuous when nothing remains).
pub fn check_good(g: &Graph, c: &VertexSet, h: &VertexSet) -> bool {
    let gone = |v: &VertexId| c.contains(v) || h.contains(v);
    g.vertices()
        .filter(|v| !gone(v))
        .all(|v| g.neighbors(v).iter().filter(|u| !gone(u)).count() >= 2)
}

/// A matching of size `|H|` exists between the sides.
pub fn check_proper(g: &Graph, c: &VertexSet, h: &VertexSet) -> bool {
    check_general_crown(g, c, h)
        && max_bipartite_matching(g, c, h).is_ok_and(|m| m.len() == h.len())
}

/// `|H| = |C| + 1` and Hall surplus ≥ 1 on every nonempty subset of `C`.
///
/// Surplus is tested by giving each `c` a twin in turn: `C ∪ {c'}` can be
/// matched into `H` for every `c` exactly when the surplus condition holds.
pub fn check_almost_crown(g: &Graph, c: &VertexSet, h: &VertexSet) -> bool {
    if !check_general_crown(g, c, h) || h.len() != c.len() + 1 {
        return false;
    }
    let mut bip = Bipartite::new(g, c, h);
    if bip.maximize() < c.len() {
        return false;
    }
    (0..c.len()).all(|i| {
        let mut with_twin = bip.clone();
        let twin = with_twin.add_twin(i);
        with_twin.try_match(twin)
    })
}

/// A nonempty `S ⊆ C` with `|N(S)| ≤ |S|`, together with a matching that
/// saturates `N(S)` from `S`. `None` when `C` has Hall surplus everywhere.
fn deficient_subset(g: &Graph, c: &VertexSet, h: &VertexSet) -> Option<(VertexSet, VertexSet, Matching)> {
    let mut bip = Bipartite::new(g, c, h);
    bip.maximize();
    let collect = |bip: &Bipartite, seen_l: &[bool], seen_r: &[bool]| {
        let s: VertexSet = (0..seen_l.len()).filter(|&l| seen_l[l]).map(|l| bip.left[l]).collect();
        let ns: VertexSet = (0..seen_r.len()).filter(|&r| seen_r[r]).map(|r| bip.right[r]).collect();
        let pairs = (0..seen_r.len())
            .filter(|&r| seen_r[r])
            .map(|r| {
                let l = bip.match_right[r].expect("reached right vertices are matched");
                (bip.left[l], bip.right[r])
            })
            .collect();
        (s, ns, Matching { pairs })
    };

    let unmatched: Vec<usize> = (0..bip.left.len()).filter(|&l| bip.match_left[l].is_none()).collect();
    if !unmatched.is_empty() {
        let (seen_l, seen_r) = bip.alternating_reach(&unmatched);
        return Some(collect(&bip, &seen_l, &seen_r));
    }
    for i in 0..c.len() {
        let mut with_twin = bip.clone();
        let twin = with_twin.add_twin(i);
        if with_twin.try_match(twin) {
            continue;
        }
        // The twin is the only unmatched left vertex; its original is always
        // reached, so dropping the twin leaves a tight set.
        let (mut seen_l, seen_r) = with_twin.alternating_reach(&[twin]);
        debug_assert!(seen_l[i]);
        seen_l.truncate(c.len());
        return Some(collect(&with_twin, &seen_l, &seen_r));
    }
    None
}

/// Either a good proper crown, or a certificate that `(C, H)` is an almost crown.
///
/// Expects a general crown with `|C| ≥ |H| - 1` and no isolated vertex in
/// `C`. When a Hall-deficient subset `S ⊆ C` exists, `(S, N(S))` is proper;
/// it is then closed under the degree-0/degree-1 rules (isolated vertices join
/// the crown side, deleted neighbors join the head together with their pendant
/// partner), which makes it good. That closure can reach past `C ∪ H`. Every result is re-validated.
pub fn resolve_crown(g: &Graph, c: &VertexSet, h: &VertexSet) -> Result<Resolution, CrownError> {
    check_disjoint(c, h)?;
    if !check_general_crown(g, c, h) {
        return Err(CrownError::NotGeneralCrown { c: c.clone(), h: h.clone() });
    }
    if let Some(&v) = c.iter().find(|&&v| g.degree(v) == 0) {
        return Err(CrownError::IsolatedCrownVertex(v));
    }
    if c.len() + 1 < h.len() {
        return Err(CrownError::TooFewCrownVertices { c: c.len(), h_minus_one: h.len() - 1 });
    }

    let full = max_bipartite_matching(g, c, h)?;
    if full.len() == h.len() && check_good(g, c, h) {
        let crown = Crown { c: c.clone(), h: h.clone(), kind: CrownKind::Proper, certificate: full };
        crown.validate(g)?;
        return Ok(Resolution::GoodProper(crown));
    }

    match deficient_subset(g, c, h) {
        Some((s, ns, matching)) => {
            let crown = close_proper_crown(g, s, ns, matching)?;
            crown.validate(g)?;
            if !check_good(g, &crown.c, &crown.h) {
                return Err(CrownError::Validation("closed crown is not good".into()));
            }
            Ok(Resolution::GoodProper(crown))
        }
        None => {
            if h.len() != c.len() + 1 {
                return Err(CrownError::Validation(format!(
                    "no deficient subset but |H| = {} != |C| + 1 = {}",
                    h.len(),
                    c.len() + 1
                )));
            }
            let crown = Crown { c: c.clone(), h: h.clone(), kind: CrownKind::Almost, certificate: full };
            crown.validate(g)?;
            Ok(Resolution::Almost(crown))
        }
    }
}

fn close_proper_crown(g: &Graph, s: VertexSet, ns: VertexSet, mut matching: Matching) -> Result<Crown, CrownError> {
    let mut removed = s.clone();
    removed.extend(ns.iter().copied());
    let rest = g
        .delete_vertices(&removed)
        .map_err(|e| CrownError::Validation(e.to_string()))?;
    let reduced = reductions::exhaust_low_degree(&rest, 0, &VertexSet::new())
        .map_err(|e| CrownError::Validation(e.to_string()))?;
    let mut c = s;
    let mut h = ns;
    c.extend(reduced.c_removed.iter().copied());
    h.extend(reduced.h_removed.iter().copied());
    matching.pairs.extend(reduced.pendant_pairs.iter().copied());
    Ok(Crown { c, h, kind: CrownKind::Proper, certificate: matching })
}
