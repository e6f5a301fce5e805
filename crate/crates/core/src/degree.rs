//! The (alpha, beta) degree sequence: `floor(e^alpha / i^beta)` vertices of
//! degree `i` for `1 <= i <= floor(e^(alpha / beta))`.

use serde::{Deserialize, Serialize};

use crate::bounds::{zeta, DEFAULT_ZETA_EPS};
use crate::error::{Error, Result};

/// Relative slack used when flooring quantities that are integers in exact
/// arithmetic (e.g. `1000^(1/3)`) but land just below in floating point.
const FLOOR_SLACK: f64 = 1e-10;

fn floor_tolerant(v: f64) -> f64 {
    let r = v.round();
    if (v - r).abs() <= FLOOR_SLACK * v.abs().max(1.0) {
        r
    } else {
        v.floor()
    }
}

/// Model parameters. `scale` is `e^alpha` and is kept as given when the
/// caller supplies it directly, so `scale = 1000` is exactly 1000.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlgParams {
    alpha: f64,
    beta: f64,
    scale: f64,
    max_degree: usize,
}

impl PlgParams {
    pub fn from_alpha(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 0.0 {
            return Err(Error::InvalidParameters(format!("alpha must be > 0, got {alpha}")));
        }
        Self::build(alpha, alpha.exp(), beta)
    }

    /// Parameters from `e^alpha` directly (`alpha = ln scale`).
    pub fn from_scale(scale: f64, beta: f64) -> Result<Self> {
        if !scale.is_finite() || scale < 1.0 {
            return Err(Error::InvalidParameters(format!("e^alpha must be >= 1, got {scale}")));
        }
        Self::build(scale.ln(), scale, beta)
    }

    fn build(alpha: f64, scale: f64, beta: f64) -> Result<Self> {
        if !beta.is_finite() || beta <= 2.0 {
            return Err(Error::InvalidParameters(format!("beta must be > 2, got {beta}")));
        }
        let max_degree = floor_tolerant(scale.powf(1.0 / beta));
        if max_degree < 1.0 {
            return Err(Error::InvalidParameters(format!(
                "maximum degree floor(e^(alpha/beta)) is {max_degree}; alpha too small"
            )));
        }
        Ok(PlgParams { alpha, beta, scale, max_degree: max_degree as usize })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `e^alpha`.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// `Δ = floor(e^(alpha / beta))`.
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }
}

/// Vertex counts per degree class, `counts[i - 1]` vertices of degree `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence {
    counts: Vec<u64>,
}

impl DegreeSequence {
    /// Wraps explicit counts. Fails if the total degree is odd.
    pub fn from_counts(counts: Vec<u64>) -> Result<Self> {
        let seq = DegreeSequence { counts };
        if !seq.total_degree().is_multiple_of(2) {
            return Err(Error::InvalidInput(format!(
                "total degree {} is odd; no perfect matching of copies exists",
                seq.total_degree()
            )));
        }
        Ok(seq)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Number of vertices of degree `i` (1-based).
    pub fn count(&self, degree: usize) -> u64 {
        degree
            .checked_sub(1)
            .and_then(|i| self.counts.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.counts.len()
    }

    pub fn total_vertices(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn total_degree(&self) -> u64 {
        self.counts.iter().enumerate().map(|(i, &y)| (i as u64 + 1) * y).sum()
    }

    /// Target degree of each vertex, vertex-major: the `counts[0]` degree-1
    /// vertices first, then the degree-2 vertices, and so on.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .flat_map(|(i, &y)| std::iter::repeat_n(i + 1, y as usize))
            .collect()
    }
}

/// `y_i = floor(e^alpha / i^beta)` for `i = 1..=Δ`; if the total degree comes
/// out odd, `y_1` is bumped by one.
pub fn build_degree_sequence(p: &PlgParams) -> DegreeSequence {
    let mut counts: Vec<u64> = (1..=p.max_degree())
        .map(|i| floor_tolerant(p.scale() / (i as f64).powf(p.beta())) as u64)
        .collect();
    let total: u64 = counts.iter().enumerate().map(|(i, &y)| (i as u64 + 1) * y).sum();
    if total % 2 == 1 {
        counts[0] += 1;
    }
    DegreeSequence { counts }
}

/// `(ζ(β)·e^α, ½·ζ(β−1)·e^α)`: the real-valued vertex and edge count estimates.
pub fn expected_counts(p: &PlgParams) -> (f64, f64) {
    let z = zeta(p.beta(), DEFAULT_ZETA_EPS).expect("beta > 2 is enforced by PlgParams");
    let z1 = zeta(p.beta() - 1.0, DEFAULT_ZETA_EPS).expect("beta > 2 is enforced by PlgParams");
    (z * p.scale(), 0.5 * z1 * p.scale())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta3_scale1000_sequence() {
        let p = PlgParams::from_scale(1000.0, 3.0).unwrap();
        assert_eq!(p.max_degree(), 10);
        let seq = build_degree_sequence(&p);
        assert_eq!(seq.counts(), &[1000, 125, 37, 15, 8, 4, 2, 1, 1, 1]);
        assert_eq!(seq.total_vertices(), 1194);
        assert_eq!(seq.total_degree(), 1526);
    }

    #[test]
    fn parity_fix_bumps_degree_one_class() {
        let p = PlgParams::from_scale(1.0, 3.0).unwrap();
        assert_eq!(p.max_degree(), 1);
        let seq = build_degree_sequence(&p);
        assert_eq!(seq.counts(), &[2]);
        assert_eq!(seq.total_degree(), 2);
    }

    #[test]
    fn max_degree_at_beta_2_5() {
        let p = PlgParams::from_scale(100.0, 2.5).unwrap();
        assert_eq!(p.max_degree(), 6);
    }

    #[test]
    fn alpha_and_scale_constructors_agree() {
        let a = PlgParams::from_alpha(1000f64.ln(), 3.0).unwrap();
        assert_eq!(a.max_degree(), 10);
        assert_eq!(build_degree_sequence(&a).total_vertices(), 1194);
    }

    #[test]
    fn invalid_parameters() {
        assert!(PlgParams::from_scale(1000.0, 2.0).is_err());
        assert!(PlgParams::from_scale(0.5, 3.0).is_err());
        assert!(PlgParams::from_alpha(-1.0, 3.0).is_err());
        assert!(PlgParams::from_alpha(1.0, f64::NAN).is_err());
    }

    #[test]
    fn odd_explicit_sequence_rejected() {
        assert!(DegreeSequence::from_counts(vec![1]).is_err());
        assert!(DegreeSequence::from_counts(vec![2, 1]).is_ok());
    }

    #[test]
    fn vertex_degrees_are_vertex_major() {
        let seq = DegreeSequence::from_counts(vec![2, 1, 0, 1]).unwrap();
        assert_eq!(seq.vertex_degrees(), vec![1, 1, 2, 4]);
        assert_eq!(seq.count(4), 1);
        assert_eq!(seq.count(0), 0);
        assert_eq!(seq.count(9), 0);
    }

    #[test]
    fn integer_powers_floor_exactly() {
        // scale and beta integral: i^beta is an exact integer, so integer
        // division is the ground truth.
        for &(scale, beta) in &[(1000u64, 3u32), (4096, 3), (100_000, 3), (20_000, 4), (250_000, 5)] {
            let p = PlgParams::from_scale(scale as f64, beta as f64).unwrap();
            let seq = build_degree_sequence(&p);
            for i in 2..=p.max_degree() as u64 {
                assert_eq!(seq.count(i as usize), scale / i.pow(beta), "scale={scale} beta={beta} i={i}");
            }
            assert!((p.max_degree() as u64).pow(beta) <= scale);
            assert!((p.max_degree() as u64 + 1).pow(beta) > scale);
        }
    }

    #[test]
    fn expected_counts_beta3() {
        let p = PlgParams::from_scale(1000.0, 3.0).unwrap();
        let (n_est, m_est) = expected_counts(&p);
        assert!((n_est - 1202.0569031595942).abs() < 1e-6);
        assert!((m_est - 822.4670334241132).abs() < 1e-6);
        let n = build_degree_sequence(&p).total_vertices() as f64;
        assert!((n - n_est).abs() / n < 0.01);
    }

    #[test]
    fn expected_counts_large_beta_tends_to_scale() {
        let p = PlgParams::from_scale(1000.0, 40.0).unwrap();
        let (n_est, _) = expected_counts(&p);
        assert!((n_est - 1000.0).abs() < 1e-6);
    }

    #[test]
    fn relative_gap_shrinks_with_scale() {
        for &(scale, tol) in &[(1e3, 0.01), (1e4, 0.01), (1e6, 0.001), (1e7, 0.001)] {
            let p = PlgParams::from_scale(scale, 3.0).unwrap();
            let n = build_degree_sequence(&p).total_vertices() as f64;
            let (n_est, _) = expected_counts(&p);
            assert!((n - n_est).abs() / n < tol, "scale={scale}");
        }
    }
}
