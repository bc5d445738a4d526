//! Seeded corpora and the aggregate report produced by `bench`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use vc4_core::oracle::is_vertex_cover;
use vc4_core::solver::{AssertMode, NullSink, SolveError, SolveStats, Solver, SolverConfig, Violation};
use vc4_core::Graph;

use crate::generate::{gen_bounded_degree, GenError, Profile};

/// Growth base from the worst branching vector.
pub const GROWTH_BASE: f64 = 1.6253;
/// Allowed slack on `L / GROWTH_BASE^max(r0, 0)`.
pub const BOUND_SLACK: f64 = 25.0;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub profile: Profile,
    pub n: usize,
    pub seed: u64,
    pub graph: Graph,
}

/// `count` instances cycling through the profiles, `n` drawn from `n_lo..=n_hi`.
///
/// Odd `n` is bumped to the next even value for `regular3` (or lowered when
/// that would leave the range).
pub fn corpus(count: usize, n_lo: usize, n_hi: usize, seed: u64) -> Result<Vec<CorpusEntry>, GenError> {
    let span = n_hi - n_lo + 1;
    (0..count)
        .into_par_iter()
        .map(|i| {
            let profile = Profile::ALL[i % 3];
            let mut n = n_lo + (i / 3 + i) % span;
            if profile == Profile::Regular3 && n % 2 == 1 {
                n = if n < n_hi { n + 1 } else { n - 1 };
            }
            let s = seed.wrapping_add(i as u64);
            Ok(CorpusEntry { profile, n, seed: s, graph: gen_bounded_degree(n, s, profile)? })
        })
        .collect()
}

/// One decision with statistics and an independent cover check.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub answer: bool,
    /// `Some(valid)` for yes-answers when a cover was requested.
    pub cover_ok: Option<bool>,
    pub stats: SolveStats,
}

impl RunOutcome {
    pub fn mu0(&self) -> i64 {
        self.stats.mu0.unwrap_or(0)
    }

    /// `L / GROWTH_BASE^max(μ0/3, 0)`.
    pub fn bound_ratio(&self) -> f64 {
        let r0 = (self.mu0() as f64 / 3.0).max(0.0);
        self.stats.leaves as f64 / GROWTH_BASE.powf(r0)
    }
}

/// Runs one decision in warn mode so every violation is collected rather than aborting.
pub fn run_decision(g: &Graph, k: i64, want_cover: bool) -> Result<RunOutcome, SolveError> {
    let mut sink = NullSink;
    let mut solver = Solver::new(SolverConfig { assert_mode: AssertMode::Warn, want_cover }, &mut sink);
    let d = solver.decide(g, k)?;
    let cover_ok = d
        .cover
        .as_ref()
        .map(|c| is_vertex_cover(g, c) && c.len() as i64 <= k);
    Ok(RunOutcome { answer: d.answer, cover_ok, stats: solver.stats })
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceReport {
    pub profile: Profile,
    pub n: usize,
    pub seed: u64,
    pub k: i64,
    pub answer: bool,
    pub mu0: i64,
    pub leaves: u64,
    pub bound_ratio: f64,
    pub violations: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub instances: usize,
    pub decisions: usize,
    pub rule_counts: BTreeMap<String, u64>,
    /// Element-wise minimum decrease per branching rule, in thirds.
    pub worst_vectors: BTreeMap<String, Vec<i64>>,
    pub branching_events: u64,
    pub leaves: u64,
    pub forced_folds: u64,
    pub max_bound_ratio: f64,
    pub cover_failures: usize,
    pub violations: Vec<Violation>,
    pub per_instance: Vec<InstanceReport>,
}

impl Report {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.cover_failures == 0 && self.max_bound_ratio <= BOUND_SLACK
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "instances {} decisions {} B {} L {} forced folds {} max bound ratio {:.4} cover failures {} violations {}\n",
            self.instances,
            self.decisions,
            self.branching_events,
            self.leaves,
            self.forced_folds,
            self.max_bound_ratio,
            self.cover_failures,
            self.violations.len()
        );
        for (rule, count) in &self.rule_counts {
            match self.worst_vectors.get(rule) {
                Some(v) => s.push_str(&format!("  {rule:<8} {count:>9}  worst {v:?}\n")),
                None => s.push_str(&format!("  {rule:<8} {count:>9}\n")),
            }
        }
        s
    }
}

/// Decides every `k ∈ [0, n]` for every entry and aggregates the statistics.
pub fn bench(entries: &[CorpusEntry]) -> Result<Report, SolveError> {
    let rows = entries
        .par_iter()
        .map(|e| {
            (0..=e.n as i64)
                .map(|k| run_decision(&e.graph, k, true).map(|o| (e, k, o)))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut total = SolveStats::default();
    let mut report = Report { instances: entries.len(), ..Report::default() };
    for (e, k, o) in rows.into_iter().flatten() {
        report.decisions += 1;
        if o.cover_ok == Some(false) {
            report.cover_failures += 1;
        }
        let ratio = o.bound_ratio();
        report.max_bound_ratio = report.max_bound_ratio.max(ratio);
        report.per_instance.push(InstanceReport {
            profile: e.profile,
            n: e.n,
            seed: e.seed,
            k,
            answer: o.answer,
            mu0: o.mu0(),
            leaves: o.stats.leaves,
            bound_ratio: ratio,
            violations: o.stats.violations.len(),
        });
        total.absorb(&o.stats);
    }
    report.rule_counts = total.rule_counts;
    report.worst_vectors = total.worst_vectors;
    report.branching_events = total.branching_events;
    report.leaves = total.leaves;
    report.forced_folds = total.forced_folds;
    report.violations = total.violations;
    Ok(report)
}
