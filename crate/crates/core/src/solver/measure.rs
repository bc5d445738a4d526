//! The above-guarantee measure and branching numbers.
//!
//! The solver tracks `r = k - n/3` as the integer `μ = 3k - n` so every
//! comparison is exact. Branching numbers are only computed for reporting.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// `3k - n`, i.e. three times the parameter `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MeasureThirds(pub i64);

impl MeasureThirds {
    pub fn as_r(self) -> f64 {
        self.0 as f64 / 3.0
    }
}

impl fmt::Display for MeasureThirds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/3", self.0)
    }
}

pub fn measure_thirds(g: &Graph, k: i64) -> MeasureThirds {
    MeasureThirds(3 * k - g.n() as i64)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LowerBoundError {
    #[error("minimum degree {0} is below 2")]
    LowDegree(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `⌈2n / (2 + Δ)⌉`, a lower bound on the cover size when the minimum degree is ≥ 2.
pub fn lower_bound_guarantee(g: &Graph) -> Result<usize, LowerBoundError> {
    if g.is_empty() {
        return Ok(0);
    }
    let min = g.min_degree()?;
    if min < 2 {
        return Err(LowerBoundError::LowDegree(min));
    }
    let delta = g.max_degree()?;
    Ok((2 * g.n()).div_ceil(2 + delta))
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BranchingError {
    #[error("branching vector is empty")]
    Empty,
    #[error("branching vector entry {0} is not positive")]
    NonPositive(f64),
}

/// Per-branch measure decreases, in units of `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchingVector {
    entries: Vec<f64>,
}

impl BranchingVector {
    pub fn new(entries: Vec<f64>) -> Result<Self, BranchingError> {
        if entries.is_empty() {
            return Err(BranchingError::Empty);
        }
        if let Some(&bad) = entries.iter().find(|&&a| a.is_nan() || a <= 0.0) {
            return Err(BranchingError::NonPositive(bad));
        }
        Ok(BranchingVector { entries })
    }

    /// From decreases counted in thirds.
    pub fn from_thirds(thirds: &[i64]) -> Result<Self, BranchingError> {
        Self::new(thirds.iter().map(|&t| t as f64 / 3.0).collect())
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// `Σ x^(-aᵢ)`.
    pub fn characteristic(&self, x: f64) -> f64 {
        self.entries.iter().map(|&a| x.powf(-a)).sum()
    }
}

/// The root `x ≥ 1` of `Σ x^(-aᵢ) = 1`, found by bisection.
pub fn branching_number(v: &BranchingVector) -> f64 {
    if v.entries.len() == 1 {
        return 1.0;
    }
    let mut lo = 1.0f64;
    let mut hi = 4.0f64;
    while v.characteristic(hi) > 1.0 {
        hi *= 2.0;
    }
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if v.characteristic(mid) > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bn(thirds: &[i64]) -> f64 {
        branching_number(&BranchingVector::from_thirds(thirds).unwrap())
    }

    #[test]
    fn measure_examples() {
        let k5 = Graph::from_internal_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(measure_thirds(&k5, 4), MeasureThirds(7));
        assert_eq!(measure_thirds(&Graph::default(), 0), MeasureThirds(0));
        let c5 = Graph::from_internal_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(measure_thirds(&c5, 3), MeasureThirds(4));
    }

    #[test]
    fn lower_bounds() {
        let k5 = Graph::from_internal_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(lower_bound_guarantee(&k5), Ok(2));
        let c5 = Graph::from_internal_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(lower_bound_guarantee(&c5), Ok(3));
        let mut edges = Vec::new();
        for i in 0..5u32 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        assert_eq!(lower_bound_guarantee(&Graph::from_internal_edges(10, &edges)), Ok(4));
        let p3 = Graph::from_internal_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(lower_bound_guarantee(&p3), Err(LowerBoundError::LowDegree(1)));
    }

    #[test]
    fn published_constants() {
        assert!((bn(&[3, 6]) - 1.6181).abs() < 1e-4);
        assert!((bn(&[4, 6]) - 1.5248).abs() < 1e-4);
        assert!((bn(&[5, 5]) - 1.5158).abs() < 1e-4);
        assert!((bn(&[5, 4]) - 1.5906).abs() < 1e-4);
        assert!((bn(&[5, 9, 7]) - 1.6253).abs() < 1e-4);
    }

    #[test]
    fn root_satisfies_equation() {
        for thirds in [&[3, 6][..], &[1, 1], &[2, 2, 2, 2], &[5, 9, 7], &[1, 30]] {
            let v = BranchingVector::from_thirds(thirds).unwrap();
            let x = branching_number(&v);
            assert!((v.characteristic(x) - 1.0).abs() <= 1e-9, "{thirds:?} -> {x}");
        }
        assert_eq!(bn(&[7]), 1.0);
    }

    #[test]
    fn rejects_bad_vectors() {
        assert_eq!(BranchingVector::new(vec![]), Err(BranchingError::Empty));
        assert_eq!(BranchingVector::new(vec![1.0, 0.0]), Err(BranchingError::NonPositive(0.0)));
    }
}
