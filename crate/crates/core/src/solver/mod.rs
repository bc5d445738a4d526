//! Branch-and-reduce search for vertex cover on graphs of maximum degree 4,
//! measured by `μ = 3k - n`.
//!
//! The search is split the usual way:
//!
//! * [`Solver::decide`] normalizes the input and enters the component wrapper;
//! * the wrapper solves one connected component at a time, trying budgets in
//!   ascending order for the first component;
//! * `vcbase` picks the first applicable rule of its ladder (see [`rules`]);
//! * `branch` deletes each candidate set, exhausts D0/D1, and either
//!   short-circuits on a crown or recurses into every branch.
//!
//! Every measure claim made by the analysis is checked at run time and
//! recorded in [`SolveStats::violations`]; with [`AssertMode::Abort`] the
//! first violation ends the solve with an error.

pub mod measure;
pub mod rules;
pub mod trace;

use thiserror::Error;

use crate::crown::{resolve_crown, CrownError, Resolution};
use crate::graph::{Graph, GraphError, VertexId, VertexSet};
use crate::oracle::is_vertex_cover;
use crate::reductions::{
    apply_crown_delete, apply_crown_merge, exhaust_low_degree, fold_degree2, lift_cover, preprocess_input,
    Journal, ReduceError,
};

pub use measure::{branching_number, lower_bound_guarantee, measure_thirds, BranchingVector, MeasureThirds};
pub use rules::{select_rule, RuleChoice};
pub use trace::{NullSink, RuleId, SolveStats, TraceEvent, TraceSink, Violation, ViolationKind};

/// Which rule ladder is in force.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Deg3,
    Deg4,
}

impl Regime {
    pub fn max_degree(self) -> usize {
        match self {
            Regime::Deg3 => 3,
            Regime::Deg4 => 4,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AssertMode {
    #[default]
    Abort,
    Warn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub assert_mode: AssertMode,
    pub want_cover: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { assert_mode: AssertMode::Abort, want_cover: true }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Crown(#[from] CrownError),
    #[error("assertion violated: {0}")]
    Assertion(Violation),
    #[error("no rule applies to a graph with {n} vertices (regime {regime:?})")]
    NoRuleApplies { n: usize, regime: Regime },
    #[error("marked recursion deeper than {0}")]
    MarkedDepth(usize),
    #[error("reconstructed cover failed verification: {0}")]
    CoverVerification(String),
}

/// Answer of a decision call. `cover` is filled for yes-answers when covers are requested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub answer: bool,
    pub cover: Option<VertexSet>,
}

impl Decision {
    pub fn no() -> Self {
        Decision { answer: false, cover: None }
    }
}

/// One set to branch on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSet {
    pub set: VertexSet,
    /// Exempt from the crown short-circuit.
    pub marked: bool,
    /// Fold this degree-2 vertex after the set is removed (rule 12).
    pub forced_fold_on: Option<VertexId>,
}

impl BranchSet {
    pub fn plain(set: VertexSet) -> Self {
        BranchSet { set, marked: false, forced_fold_on: None }
    }
}

/// One decision procedure plus the statistics it gathers.
pub struct Solver<'s> {
    config: SolverConfig,
    sink: &'s mut dyn TraceSink,
    pub stats: SolveStats,
}

impl<'s> Solver<'s> {
    pub fn new(config: SolverConfig, sink: &'s mut dyn TraceSink) -> Self {
        Solver { config, sink, stats: SolveStats::default() }
    }

    /// Decides whether `g` has a vertex cover of size at most `k`.
    ///
    /// Yes-answers come with a cover of `g` that has been checked against the
    /// graph, when covers are requested.
    pub fn decide(&mut self, g: &Graph, k: i64) -> Result<Decision, SolveError> {
        if k < 0 {
            return Ok(Decision::no());
        }
        let pre = preprocess_input(g, k)?;
        let regime = match pre.graph.max_degree() {
            Ok(4) => Regime::Deg4,
            _ => Regime::Deg3,
        };
        self.stats.mu0 = Some(measure_thirds(&pre.graph, pre.k).0);
        let d = self.vc_wrapper(&pre.graph, pre.k, regime)?;
        let d = self.lift(d, &pre.journal);
        if let Some(cover) = &d.cover {
            if !is_vertex_cover(g, cover) {
                return Err(SolveError::CoverVerification(format!("{cover:?} leaves an edge uncovered")));
            }
            if cover.len() as i64 > k {
                return Err(SolveError::CoverVerification(format!("cover size {} exceeds k = {k}", cover.len())));
            }
        }
        Ok(d)
    }

    /// Solves components separately; the first component gets the smallest budget that works.
    pub fn vc_wrapper(&mut self, g: &Graph, k: i64, regime: Regime) -> Result<Decision, SolveError> {
        let comps = g.connected_components();
        if comps.len() <= 1 {
            return self.vcbase(g, k, regime, true);
        }
        let first = &comps[0];
        let part = g.induced(first);
        let rest = g.delete_vertices(first)?;
        let lo = first.len().div_ceil(3) as i64;
        let hi = k - rest.n().div_ceil(3) as i64;
        for kp in lo..=hi {
            let d = self.vcbase(&part, kp, regime, true)?;
            if d.answer {
                let tail = self.vc_wrapper(&rest, k - kp, regime)?;
                if !tail.answer {
                    return Ok(Decision::no());
                }
                let cover = match (d.cover, tail.cover) {
                    (Some(mut a), Some(b)) => {
                        a.extend(b);
                        Some(a)
                    }
                    _ => None,
                };
                return Ok(Decision { answer: true, cover });
            }
        }
        Ok(Decision::no())
    }

    /// Applies the first rule of the ladder for `regime`.
    pub fn vcbase(&mut self, g: &Graph, k: i64, regime: Regime, initial: bool) -> Result<Decision, SolveError> {
        self.stats.vcbase_calls += 1;
        if !initial {
            self.check_invariants(g, regime)?;
        }
        let mu = measure_thirds(g, k).0;
        let choice = select_rule(g, k, regime).ok_or(SolveError::NoRuleApplies { n: g.n(), regime })?;
        let rule = choice.id();
        self.stats.count(rule);
        let nbhd = |v: VertexId| -> VertexSet { g.neighbors(v).iter().copied().collect() };
        let plain = |s: VertexSet| BranchSet::plain(s);

        match choice {
            RuleChoice::R1 | RuleChoice::R2 => {
                let answer = rule == RuleId::R2;
                self.stats.leaves += 1;
                self.sink.record(&TraceEvent::Leaf { rule, mu, answer });
                Ok(Decision { answer, cover: (answer && self.config.want_cover).then(VertexSet::new) })
            }
            RuleChoice::R3 { v } => {
                let folded = fold_degree2(g, k, v)?;
                let delta = measure_thirds(&folded.graph, folded.k).0 - mu;
                let ok = delta == -1;
                self.sink.record(&TraceEvent::Reduce { rule, mu_before: mu, mu_delta: delta, ok });
                if !ok {
                    self.violation(ViolationKind::FoldMeasure, Some(rule), format!("fold changed μ by {delta}"))?;
                }
                let d = self.branch(&folded.graph, folded.k, vec![plain(VertexSet::new())], regime, rule, 0)?;
                Ok(self.lift(d, &folded.journal))
            }
            RuleChoice::R4 { v } => {
                let nv = nbhd(v);
                let nnv = g.neighborhood_of_set(&nv)?;
                self.branch(g, k, vec![plain(nv), plain(nnv)], regime, rule, 0)
            }
            RuleChoice::R5 { v } => self.branch(g, k, vec![plain(nbhd(v))], regime, rule, 0),
            RuleChoice::R6 { v } | RuleChoice::R8 { v } => {
                self.branch(g, k, vec![plain(VertexSet::from([v])), plain(nbhd(v))], regime, rule, 0)
            }
            RuleChoice::R7 => self.vc_wrapper(g, k, Regime::Deg3),
            RuleChoice::R9 { v, x, .. } => self.branch(g, k, vec![plain(nbhd(v)), plain(nbhd(x))], regime, rule, 0),
            RuleChoice::R10 { v, t } => {
                self.branch(g, k, vec![plain(nbhd(v)), plain(VertexSet::from([v, t]))], regime, rule, 0)
            }
            RuleChoice::R11 { v, z, u, w } => {
                let mut second = VertexSet::from([z]);
                second.extend(nbhd(u));
                second.extend(nbhd(w));
                self.branch(g, k, vec![plain(nbhd(v)), plain(second), plain(nbhd(z))], regime, rule, 0)
            }
            RuleChoice::R12 { v, z, .. } => {
                let first = BranchSet { set: VertexSet::from([z]), marked: false, forced_fold_on: Some(v) };
                self.branch(g, k, vec![first, plain(nbhd(z))], regime, rule, 0)
            }
        }
    }

    /// The branching procedure: reduce each branch, short-circuit on crowns, else recurse.
    pub fn branch(
        &mut self,
        g: &Graph,
        k: i64,
        sets: Vec<BranchSet>,
        regime: Regime,
        rule: RuleId,
        depth: usize,
    ) -> Result<Decision, SolveError> {
        if depth > g.n() + 1 {
            return Err(SolveError::MarkedDepth(depth));
        }
        self.stats.max_marked_depth = self.stats.max_marked_depth.max(depth);
        let mu = measure_thirds(g, k).0;

        let reduced = sets
            .iter()
            .map(|s| exhaust_low_degree(g, k, &s.set))
            .collect::<Result<Vec<_>, _>>()?;

        let crown_candidate = sets.iter().zip(&reduced).find(|(s, r)| {
            !s.marked
                && !r.c_removed.is_empty()
                && !r.h_removed.is_empty()
                && r.c_removed.len() + 1 >= r.h_removed.len()
        });
        if let Some((_, r)) = crown_candidate {
            return self.crown_step(g, k, &r.c_removed, &r.h_removed, regime, depth);
        }

        let mut children = Vec::with_capacity(sets.len());
        let mut decreases = Vec::with_capacity(sets.len());
        let mut ok = true;
        for (s, r) in sets.iter().zip(reduced) {
            let plain_drop = mu - measure_thirds(&r.graph, r.k).0;
            if !s.marked {
                let h = r.h_removed.len() as i64;
                let fine = match h {
                    0 => plain_drop == 0,
                    1 => plain_drop == 2,
                    _ => plain_drop >= h + 2,
                };
                if !fine {
                    ok = false;
                    self.violation(
                        ViolationKind::BranchMeasure,
                        Some(rule),
                        format!("branch on {:?}: |H| = {h}, decrease {plain_drop} thirds", s.set),
                    )?;
                }
            }
            let (graph, kk, mut journal) = (r.graph, r.k, r.journal);
            let (graph, kk) = match s.forced_fold_on {
                Some(v) => {
                    let folded = fold_degree2(&graph, kk, v)?;
                    self.stats.forced_folds += 1;
                    self.check_forced_fold(g, &folded.graph, v, folded.vstar.expect("merge yields v*"), rule)?;
                    journal.extend(folded.journal);
                    (folded.graph, folded.k)
                }
                None => (graph, kk),
            };
            decreases.push(mu - measure_thirds(&graph, kk).0);
            children.push((graph, kk, journal));
        }

        if let Some(required) = rule.required_vector() {
            if required.len() == decreases.len() && decreases.iter().zip(required).any(|(d, r)| d < r) {
                ok = false;
                self.violation(
                    ViolationKind::RuleVector,
                    Some(rule),
                    format!("decreases {decreases:?} below {required:?}"),
                )?;
            }
        }
        if rule == RuleId::Marked {
            let expected = sets[0].set.len() as i64 + 1;
            if decreases[0] != expected {
                ok = false;
                self.violation(
                    ViolationKind::MarkedBranch,
                    Some(rule),
                    format!("marked branch decreased {} thirds, expected {expected}", decreases[0]),
                )?;
            }
        }

        if sets.len() >= 2 {
            self.stats.branching_events += 1;
            self.stats.note_vector(rule, &decreases);
        }
        self.sink.record(&TraceEvent::Branch {
            rule,
            mu_before: mu,
            decreases,
            marked: sets.iter().map(|s| s.marked).collect(),
            ok,
        });

        for (graph, kk, journal) in children {
            let d = self.vcbase(&graph, kk, regime, false)?;
            if d.answer {
                return Ok(self.lift(d, &journal));
            }
        }
        Ok(Decision::no())
    }

    fn crown_step(
        &mut self,
        g: &Graph,
        k: i64,
        c: &VertexSet,
        h: &VertexSet,
        regime: Regime,
        depth: usize,
    ) -> Result<Decision, SolveError> {
        let mu = measure_thirds(g, k).0;
        let (reduction, rule, floor) = match resolve_crown(g, c, h)? {
            Resolution::GoodProper(crown) => (apply_crown_delete(g, k, &crown)?, RuleId::C1, 0),
            Resolution::Almost(crown) if !g.is_independent(h) => (apply_crown_delete(g, k, &crown)?, RuleId::C2, 3),
            Resolution::Almost(crown) => {
                let outside = g.neighborhood_of_set(h)?.difference(c).count();
                if outside <= 2 {
                    (apply_crown_merge(g, k, &crown)?, RuleId::C3, 1)
                } else {
                    self.stats.count(RuleId::Marked);
                    let sets = vec![
                        BranchSet { set: h.clone(), marked: true, forced_fold_on: None },
                        BranchSet::plain(g.neighborhood_of_set(h)?),
                    ];
                    return self.branch(g, k, sets, regime, RuleId::Marked, depth + 1);
                }
            }
        };
        self.stats.count(rule);
        let drop = mu - measure_thirds(&reduction.graph, reduction.k).0;
        let ok = drop >= floor;
        self.sink.record(&TraceEvent::Reduce { rule, mu_before: mu, mu_delta: -drop, ok });
        if !ok {
            self.violation(
                ViolationKind::CrownMeasure,
                Some(rule),
                format!("decrease {drop} thirds below {floor}"),
            )?;
        }

        let mut journal = reduction.journal;
        let (graph, kk) = if reduction.graph.min_degree().is_ok_and(|d| d < 2) {
            let mu_mid = measure_thirds(&reduction.graph, reduction.k).0;
            let cleaned = exhaust_low_degree(&reduction.graph, reduction.k, &VertexSet::new())?;
            self.stats.cleanups += 1;
            self.stats.count(RuleId::Cleanup);
            self.sink.record(&TraceEvent::Reduce {
                rule: RuleId::Cleanup,
                mu_before: mu_mid,
                mu_delta: measure_thirds(&cleaned.graph, cleaned.k).0 - mu_mid,
                ok: true,
            });
            journal.extend(cleaned.journal);
            (cleaned.graph, cleaned.k)
        } else {
            (reduction.graph, reduction.k)
        };
        let d = self.vcbase(&graph, kk, regime, false)?;
        Ok(self.lift(d, &journal))
    }

    fn check_invariants(&mut self, g: &Graph, regime: Regime) -> Result<(), SolveError> {
        if g.is_empty() {
            return Ok(());
        }
        let min = g.min_degree()?;
        let max = g.max_degree()?;
        let d = regime.max_degree();
        if min < 2 || max > d {
            return self.violation(
                ViolationKind::Invariant,
                None,
                format!("degrees in [{min}, {max}], regime {regime:?}"),
            );
        }
        if max == d {
            for comp in g.connected_components() {
                if comp.iter().all(|&v| g.degree(v) == d) {
                    return self.violation(
                        ViolationKind::Invariant,
                        None,
                        format!("{d}-regular component of size {} in a non-initial call", comp.len()),
                    );
                }
            }
        }
        Ok(())
    }

    /// After removing `z` and folding `v`: `v*` has degree 4, and each of `u`, `w`
    /// keeps a degree-3 neighbor other than `v`.
    fn check_forced_fold(
        &mut self,
        before: &Graph,
        after: &Graph,
        v: VertexId,
        vstar: VertexId,
        rule: RuleId,
    ) -> Result<(), SolveError> {
        let deg = after.degree(vstar);
        if deg != 4 {
            self.violation(ViolationKind::ForcedFold, Some(rule), format!("deg(v*) = {deg}"))?;
        }
        let degree_four = |x: VertexId| before.degree(x) == 4;
        for &side in before.neighbors(v).iter().filter(|&&x| !degree_four(x)) {
            let has_three = before
                .neighbors(side)
                .iter()
                .filter(|&&x| x != v)
                .any(|&x| after.contains(x) && after.degree(x) == 3);
            if !has_three {
                self.violation(
                    ViolationKind::ForcedFold,
                    Some(rule),
                    format!("no degree-3 vertex left next to {side}"),
                )?;
            }
        }
        Ok(())
    }

    fn violation(&mut self, kind: ViolationKind, rule: Option<RuleId>, detail: String) -> Result<(), SolveError> {
        let v = Violation { kind, rule, detail };
        self.sink.record(&TraceEvent::Violation(v.clone()));
        self.stats.violations.push(v.clone());
        match self.config.assert_mode {
            AssertMode::Abort => Err(SolveError::Assertion(v)),
            AssertMode::Warn => Ok(()),
        }
    }

    fn lift(&self, d: Decision, journal: &Journal) -> Decision {
        match d.cover {
            Some(cover) if self.config.want_cover => Decision { answer: d.answer, cover: Some(lift_cover(journal, &cover)) },
            _ => d,
        }
    }
}

/// One-shot decision with default settings and no trace.
pub fn vc_decide(g: &Graph, k: i64, want_cover: bool) -> Result<Decision, SolveError> {
    let mut sink = NullSink;
    let mut solver = Solver::new(SolverConfig { want_cover, ..SolverConfig::default() }, &mut sink);
    solver.decide(g, k)
}

/// Smallest `k` with a yes-answer, searching upward from the degree bound.
pub fn min_vertex_cover(g: &Graph) -> Result<(usize, VertexSet), SolveError> {
    let pre = preprocess_input(g, 0)?;
    let spent = (0 - pre.k) as usize;
    let floor = lower_bound_guarantee(&pre.graph).unwrap_or(0) + spent;
    for k in floor..=g.n() {
        let d = vc_decide(g, k as i64, true)?;
        if d.answer {
            return Ok((k, d.cover.unwrap_or_default()));
        }
    }
    Err(SolveError::CoverVerification("no cover up to n found".into()))
}
