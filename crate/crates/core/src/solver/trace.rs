//! Trace events, sinks and per-solve statistics.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

/// Rule labels as they appear in traces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
    R11,
    R12,
    /// Proper crown deleted inside the branching procedure.
    C1,
    /// Almost crown with an edge in its head, deleted.
    C2,
    /// Almost crown with an independent head, merged.
    C3,
    /// Branching on `(H, marked)` and `N(H)` after an unresolved almost crown.
    Marked,
    /// D0/D1 run after a crown merge left a vertex of degree below 2.
    Cleanup,
}

impl RuleId {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::R1 => "R1",
            RuleId::R2 => "R2",
            RuleId::R3 => "R3",
            RuleId::R4 => "R4",
            RuleId::R5 => "R5",
            RuleId::R6 => "R6",
            RuleId::R7 => "R7",
            RuleId::R8 => "R8",
            RuleId::R9 => "R9",
            RuleId::R10 => "R10",
            RuleId::R11 => "R11",
            RuleId::R12 => "R12",
            RuleId::C1 => "C1",
            RuleId::C2 => "C2",
            RuleId::C3 => "C3",
            RuleId::Marked => "MARKED",
            RuleId::Cleanup => "CLEANUP",
        }
    }

    /// Lower bounds (in thirds) the analysis guarantees for this rule's branches.
    pub fn required_vector(self) -> Option<&'static [i64]> {
        match self {
            RuleId::R4 => Some(&[4, 6]),
            RuleId::R9 => Some(&[5, 5]),
            RuleId::R10 => Some(&[5, 4]),
            RuleId::R11 => Some(&[5, 9, 7]),
            RuleId::R12 => Some(&[3, 6]),
            RuleId::Marked => Some(&[3, 6]),
            _ => None,
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for RuleId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// Measure change of a crown rule inside branching.
    CrownMeasure,
    /// Generic per-branch decrease bound.
    BranchMeasure,
    /// Rule-specific branching vector.
    RuleVector,
    /// Marked branch decrease differs from `|H| + 1`.
    MarkedBranch,
    /// Degree or regularity invariant on entry to a non-initial call.
    Invariant,
    /// Degree facts after the forced fold of rule 12.
    ForcedFold,
    /// Fold of rule 3 did not change the measure by exactly one third.
    FoldMeasure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub rule: Option<RuleId>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rule {
            Some(r) => write!(f, "{:?} at {r}: {}", self.kind, self.detail),
            None => write!(f, "{:?}: {}", self.kind, self.detail),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "event", rename_all = "lowercase")]
pub enum TraceEvent {
    /// One executed branching step.
    Branch {
        rule: RuleId,
        mu_before: i64,
        decreases: Vec<i64>,
        marked: Vec<bool>,
        ok: bool,
    },
    /// A single-successor reduction.
    Reduce {
        rule: RuleId,
        mu_before: i64,
        mu_delta: i64,
        ok: bool,
    },
    /// A terminal call (rule 1 or 2).
    Leaf { rule: RuleId, mu: i64, answer: bool },
    Violation(Violation),
}

pub trait TraceSink {
    fn record(&mut self, event: &TraceEvent);
}

/// Discards everything.
#[derive(Debug, Default)]
pub struct NullSink;

impl TraceSink for NullSink {
    fn record(&mut self, _event: &TraceEvent) {}
}

impl TraceSink for Vec<TraceEvent> {
    fn record(&mut self, event: &TraceEvent) {
        self.push(event.clone());
    }
}

/// Counters accumulated over one or more solves.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub rule_counts: BTreeMap<String, u64>,
    /// Element-wise minimum of observed decreases per branching rule.
    pub worst_vectors: BTreeMap<String, Vec<i64>>,
    /// Branching steps with at least two branches.
    pub branching_events: u64,
    pub leaves: u64,
    pub vcbase_calls: u64,
    pub forced_folds: u64,
    pub cleanups: u64,
    pub max_marked_depth: usize,
    /// Measure of the instance handed to the top-level component wrapper.
    pub mu0: Option<i64>,
    pub violations: Vec<Violation>,
}

impl SolveStats {
    pub fn count(&mut self, rule: RuleId) {
        *self.rule_counts.entry(rule.to_string()).or_default() += 1;
    }

    pub fn note_vector(&mut self, rule: RuleId, decreases: &[i64]) {
        let entry = self
            .worst_vectors
            .entry(rule.to_string())
            .or_insert_with(|| decreases.to_vec());
        if entry.len() == decreases.len() {
            for (w, &d) in entry.iter_mut().zip(decreases) {
                *w = (*w).min(d);
            }
        }
    }

    /// Adds another run's counters into this one; `mu0` is left alone.
    pub fn absorb(&mut self, other: &SolveStats) {
        for (k, v) in &other.rule_counts {
            *self.rule_counts.entry(k.clone()).or_default() += v;
        }
        for (k, v) in &other.worst_vectors {
            match self.worst_vectors.get_mut(k) {
                Some(w) if w.len() == v.len() => {
                    for (a, &b) in w.iter_mut().zip(v) {
                        *a = (*a).min(b);
                    }
                }
                Some(_) => {}
                None => {
                    self.worst_vectors.insert(k.clone(), v.clone());
                }
            }
        }
        self.branching_events += other.branching_events;
        self.leaves += other.leaves;
        self.vcbase_calls += other.vcbase_calls;
        self.forced_folds += other.forced_folds;
        self.cleanups += other.cleanups;
        self.max_marked_depth = self.max_marked_depth.max(other.max_marked_depth);
        self.violations.extend(other.violations.iter().cloned());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branch_event_json_shape() {
        let e = TraceEvent::Branch {
            rule: RuleId::R11,
            mu_before: 17,
            decreases: vec![5, 9, 8],
            marked: vec![false, false, false],
            ok: true,
        };
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"{"event":"branch","rule":"R11","mu_before":17,"decreases":[5,9,8],"marked":[false,false,false],"ok":true}"#
        );
        let r = TraceEvent::Reduce { rule: RuleId::R3, mu_before: 4, mu_delta: -1, ok: true };
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"event":"reduce","rule":"R3","mu_before":4,"mu_delta":-1,"ok":true}"#
        );
    }

    #[test]
    fn worst_vector_is_elementwise_min() {
        let mut s = SolveStats::default();
        s.note_vector(RuleId::R4, &[5, 6]);
        s.note_vector(RuleId::R4, &[4, 9]);
        assert_eq!(s.worst_vectors["R4"], vec![4, 6]);
    }
}
