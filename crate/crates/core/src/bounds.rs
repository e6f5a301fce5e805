//! Closed-form quantities behind the expected approximation ratio: the
//! Riemann zeta function, partial zeta sums, the η probability bounds, the
//! E[x(V*)] lower bound, the x(V) upper bound, Δ₀, and the two ratio bounds
//! ρ (first analysis) and ρ′ (refined analysis, β > 2.424).

use serde::{Deserialize, Serialize};

use crate::degree::PlgParams;
use crate::error::{Error, Result};

pub const DEFAULT_ZETA_EPS: f64 = 1e-12;

/// The refined bound is only established above this β.
pub const REFINED_BETA_MIN: f64 = 2.424;

const ZETA_MAX_TERMS: f64 = 1e7;

/// Riemann zeta for real `s > 1`, with absolute error below `eps`.
///
/// Sums `i^-s` for `i < N` and closes the tail with Euler–Maclaurin through
/// the first Bernoulli correction:
/// `N^(1-s)/(s-1) + N^-s/2 + s·N^(-s-1)/12`. For `x^-s` the remainder is
/// bounded by the next term, `s(s+1)(s+2)·N^(-s-3)/720`, and `N` is chosen
/// so that this bound is under `eps / 2`.
pub fn zeta(s: f64, eps: f64) -> Result<f64> {
    if !s.is_finite() || s <= 1.0 {
        return Err(Error::InvalidParameters(format!("zeta requires s > 1, got {s}")));
    }
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::InvalidParameters(format!("zeta requires eps > 0, got {eps}")));
    }
    let c = s * (s + 1.0) * (s + 2.0) / 720.0;
    // c · N^(-(s+3)) < eps / 2
    let n = (2.0 * c / eps).powf(1.0 / (s + 3.0)).ceil().clamp(8.0, ZETA_MAX_TERMS);
    let big_n = n as u64;
    let head: f64 = (1..big_n).rev().map(|i| (i as f64).powf(-s)).sum();
    let tail = n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s) + s * n.powf(-s - 1.0) / 12.0;
    Ok(head + tail)
}

fn zeta_default(s: f64) -> f64 {
    zeta(s, DEFAULT_ZETA_EPS).expect("caller guarantees s > 1")
}

/// `Σ_{i=1}^{Δ} i^-s`, summed smallest term first.
pub fn partial_zeta(s: f64, delta: u64) -> f64 {
    (1..=delta).rev().map(|i| (i as f64).powf(-s)).sum()
}

fn check_beta(beta: f64) -> Result<()> {
    if beta.is_finite() && beta > 2.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameters(format!("beta must be > 2, got {beta}")))
    }
}

/// Lower bound on the probability that a vertex of degree ≥ 3 has a
/// degree-1 or degree-2 neighbor: `1 / (2^(β-1) · Σ_{i≤Δ} i^-(β-1))`.
pub fn eta_lower_first(beta: f64, delta: u64) -> Result<f64> {
    check_beta(beta)?;
    if delta == 0 {
        return Err(Error::InvalidParameters("Δ must be >= 1".into()));
    }
    Ok(1.0 / (2f64.powf(beta - 1.0) * partial_zeta(beta - 1.0, delta)))
}

/// Refined lower bound on the probability that a high-degree vertex is
/// adjacent to a vertex set `U` of total degree `deg_u`, given `copies`
/// total vertex copies and maximum degree `delta`:
/// `((N − Δ + 1)/N) · [1 − ((N − deg U − 2)/(N − 2))³]`.
pub fn eta_lower_refined(deg_u: f64, copies: f64, delta: u64) -> Result<f64> {
    let n = copies;
    if n.is_nan() || deg_u.is_nan() || n <= 2.0 || deg_u < 0.0 || deg_u > n - 2.0 || n <= delta as f64 {
        return Err(Error::InvalidParameters(format!(
            "need 0 <= deg(U) <= N - 2 and N > max(2, Δ); got deg(U) = {deg_u}, N = {n}, Δ = {delta}"
        )));
    }
    let ratio = (n - deg_u - 2.0) / (n - 2.0);
    Ok((n - delta as f64 + 1.0) / n * (1.0 - ratio.powi(3)))
}

/// Total number of vertex copies in real arithmetic, `Σ_{i≤Δ} e^α / i^(β-1)`.
pub fn total_copies(p: &PlgParams) -> f64 {
    p.scale() * partial_zeta(p.beta() - 1.0, p.max_degree() as u64)
}

/// Copies belonging to degree-1 and degree-2 vertices, `e^α (1 + 2^(1-β))`.
pub fn low_degree_copies(p: &PlgParams) -> f64 {
    p.scale() * (1.0 + 2f64.powf(1.0 - p.beta()))
}

/// `(e^α / 2^β) · (ζ(β) − 1 − 2^-β) / ζ(β−1)`.
pub fn ex_vstar_lower(p: &PlgParams) -> f64 {
    let b = p.beta();
    p.scale() / 2f64.powf(b) * (zeta_default(b) - 1.0 - 2f64.powf(-b)) / zeta_default(b - 1.0)
}

/// `½ · ζ(β) · e^α`.
pub fn xv_upper(p: &PlgParams) -> f64 {
    0.5 * zeta_default(p.beta()) * p.scale()
}

/// `ceil((8^β + 2·4^β + 6·2^β + 7) / (1 + 2^β))`.
pub fn delta0(beta: f64) -> Result<u64> {
    check_beta(beta)?;
    let t = 2f64.powf(beta);
    let num = t * t * t + 2.0 * t * t + 6.0 * t + 7.0;
    Ok((num / (1.0 + t)).ceil() as u64)
}

/// `(S_β − 1 − 2^-β)/S_(β−1) − 1/(Δ+1)` with partial sums to Δ. The
/// Δ₀ bound asserts this is non-negative for every `Δ >= delta0(β)`.
pub fn delta0_inequality_gap(beta: f64, delta: u64) -> f64 {
    let lhs = (partial_zeta(beta, delta) - 1.0 - 2f64.powf(-beta)) / partial_zeta(beta - 1.0, delta);
    lhs - 1.0 / (delta as f64 + 1.0)
}

/// First-analysis bound `2 − (ζ(β) − 1 − 2^-β) / (2^β ζ(β−1) ζ(β))`.
pub fn rho_first(beta: f64) -> Result<f64> {
    check_beta(beta)?;
    let z = zeta_default(beta);
    let z1 = zeta_default(beta - 1.0);
    let num = z - 1.0 - 2f64.powf(-beta);
    Ok(2.0 - num / (2f64.powf(beta) * z1 * z))
}

/// Refined bound ρ′. With `scale = Some(e^α)` the finite-size form is
/// returned (Δ taken as the real `e^(α/β)`); with `None`, its α → ∞ limit
/// `2 − [(ζ(β) − 1 − 2^-β)/ζ(β)] · [1 − ((ζ(β−1) − 1 − 2^(1−β))/ζ(β−1))³]`.
pub fn rho_refined(beta: f64, scale: Option<f64>) -> Result<f64> {
    if !beta.is_finite() || beta <= REFINED_BETA_MIN {
        return Err(Error::OutOfDomain { beta, min: REFINED_BETA_MIN });
    }
    let z = zeta_default(beta);
    let z1 = zeta_default(beta - 1.0);
    let low = 1.0 + 2f64.powf(1.0 - beta);
    let head = z - 1.0 - 2f64.powf(-beta);
    let (f, c) = match scale {
        None => (head * z1 / (z1 * z), (z1 - low) / z1),
        Some(s) => {
            if !s.is_finite() || s < 1.0 {
                return Err(Error::InvalidParameters(format!("e^alpha must be >= 1, got {s}")));
            }
            let delta = s.powf(1.0 / beta);
            let f = head * (z1 - delta / s + 1.0 / s) / (z1 * z);
            let c = (z1 - low - 2.0 / s) / (z1 - 2.0 / s);
            (f, c)
        }
    };
    Ok(2.0 - f * (1.0 - c.powi(3)))
}

/// `ζ(β) − 2^-β < 1 + 2^-β`, the observation that fixes the refined
/// analysis to β > 2.424.
pub fn refined_threshold_holds(beta: f64) -> bool {
    zeta_default(beta) - 2f64.powf(-beta) < 1.0 + 2f64.powf(-beta)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub beta: f64,
    pub alpha: Option<f64>,
    pub zeta_beta: f64,
    pub zeta_beta_minus1: f64,
    pub rho_first: f64,
    pub rho_refined_finite: Option<f64>,
    pub rho_refined_asymptotic: Option<f64>,
    pub delta0: u64,
    pub ex_vstar_lower: Option<f64>,
    pub xv_upper: Option<f64>,
}

/// Every bound for `beta`, plus the size-dependent ones when `params` is given.
pub fn bound_report(beta: f64, params: Option<&PlgParams>) -> Result<BoundReport> {
    check_beta(beta)?;
    let refined_ok = beta > REFINED_BETA_MIN;
    Ok(BoundReport {
        beta,
        alpha: params.map(PlgParams::alpha),
        zeta_beta: zeta_default(beta),
        zeta_beta_minus1: zeta_default(beta - 1.0),
        rho_first: rho_first(beta)?,
        rho_refined_finite: match params {
            Some(p) if refined_ok => Some(rho_refined(beta, Some(p.scale()))?),
            _ => None,
        },
        rho_refined_asymptotic: if refined_ok { Some(rho_refined(beta, None)?) } else { None },
        delta0: delta0(beta)?,
        ex_vstar_lower: params.map(ex_vstar_lower),
        xv_upper: params.map(xv_upper),
    })
}
