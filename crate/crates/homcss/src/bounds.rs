//! Closed-form and quadrature calculators for the geometric quantities the
//! code bounds rest on: unit-sphere volumes, hyperbolic ball volumes, the
//! volume/Euler-characteristic relation in even dimensions, the systolic
//! ball-volume lower bound, and the cone and monotonicity identities.
//!
//! Hyperbolic ball volumes integrate the sphere-area profile
//! `VHS_{k−1}(r) = Vol(S^{k−1}) sinh^{k−1} r` with adaptive Simpson
//! quadrature (absolute tolerance 1e−10, bisection depth ≤ 60): the
//! integrands are smooth, so high accuracy is cheap.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default absolute quadrature tolerance.
pub const QUADRATURE_TOL: f64 = 1e-10;
const MAX_DEPTH: u32 = 60;

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("dimension must be even, got {0}")]
    OddDimension(usize),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("grid must be strictly increasing and positive")]
    BadGrid,
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(a: f64, fa: f64, b: f64, fb: f64, fm: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        fm: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(a, fa, m, fm, flm);
        let right = simpson(m, fm, b, fb, frm);
        let delta = left + right - whole;
        // the roundoff floor keeps the refinement from chasing noise once
        // the requested tolerance is below machine precision at this scale
        let floor = 4.0 * f64::EPSILON * (left.abs() + right.abs());
        if depth >= MAX_DEPTH || delta.abs() <= (15.0 * tol).max(floor) {
            left + right + delta / 15.0
        } else {
            recurse(f, a, fa, m, fm, flm, left, 0.5 * tol, depth + 1)
                + recurse(f, m, fm, b, fb, frm, right, 0.5 * tol, depth + 1)
        }
    }
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let fm = f(0.5 * (a + b));
    let whole = simpson(a, fa, b, fb, fm);
    recurse(f, a, fa, b, fb, fm, whole, tol, 0)
}

/// Γ(k/2) for positive half-integer arguments, by the recursion from
/// Γ(1/2) = √π and Γ(1) = 1.
fn gamma_half(two_x: usize) -> f64 {
    assert!(two_x >= 1);
    let mut value = if two_x.is_multiple_of(2) {
        1.0
    } else {
        std::f64::consts::PI.sqrt()
    };
    let mut t = if two_x.is_multiple_of(2) { 2 } else { 1 };
    while t + 2 <= two_x {
        value *= t as f64 / 2.0;
        t += 2;
    }
    value
}

/// Total n-volume of the unit n-sphere: `2 π^{(n+1)/2} / Γ((n+1)/2)`.
pub fn sphere_volume(n: usize) -> f64 {
    2.0 * std::f64::consts::PI.powf((n + 1) as f64 / 2.0) / gamma_half(n + 1)
}

/// Volume of the Euclidean k-ball of radius r.
pub fn euclidean_ball_volume(k: usize, r: f64) -> f64 {
    std::f64::consts::PI.powf(k as f64 / 2.0) / gamma_half(k + 2) * r.powi(k as i32)
}

/// (k−1)-volume of the Euclidean sphere of radius r bounding a k-ball.
pub fn euclidean_sphere_volume(k_minus_1: usize, r: f64) -> f64 {
    sphere_volume(k_minus_1) * r.powi(k_minus_1 as i32)
}

/// (m)-volume of the hyperbolic sphere of radius r:
/// `VHS_m(r) = Vol(S^m) sinh^m r`.
pub fn hyperbolic_sphere_area(m: usize, r: f64) -> f64 {
    sphere_volume(m) * r.sinh().powi(m as i32)
}

/// Volume of the hyperbolic k-ball of radius r, by integrating the sphere
/// areas: `VHB_k(r) = ∫₀^r VHS_{k−1}(t) dt`.
pub fn hyperbolic_ball_volume(k: usize, r: f64) -> Result<f64, BoundsError> {
    if k < 1 {
        return Err(BoundsError::OutOfRange(format!("ball dimension {k} < 1")));
    }
    if r < 0.0 {
        return Err(BoundsError::OutOfRange(format!("radius {r} < 0")));
    }
    Ok(adaptive_simpson(
        &|t| hyperbolic_sphere_area(k - 1, t),
        0.0,
        r,
        QUADRATURE_TOL,
    ))
}

/// Tabulated ball and sphere volumes over a radius grid, hyperbolic and
/// Euclidean side by side.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VolumeTable {
    pub dimension: usize,
    pub radii: Vec<f64>,
    /// Hyperbolic k-ball volumes.
    pub vhb: Vec<f64>,
    /// Hyperbolic (k−1)-sphere areas.
    pub vhs: Vec<f64>,
    /// Euclidean k-ball volumes.
    pub vb: Vec<f64>,
    /// Euclidean (k−1)-sphere areas.
    pub vs: Vec<f64>,
    pub tolerance: f64,
}

impl VolumeTable {
    /// Tabulates all four volume profiles. The grid must be nondecreasing
    /// and nonnegative; every value is ≥ 0 and the ball columns are
    /// nondecreasing in r with value 0 at r = 0.
    pub fn compute(k: usize, radii: &[f64], tolerance: f64) -> Result<Self, BoundsError> {
        if k < 1 {
            return Err(BoundsError::OutOfRange(format!("dimension {k} < 1")));
        }
        if radii.is_empty() || radii[0] < 0.0 || radii.windows(2).any(|w| w[0] > w[1]) {
            return Err(BoundsError::BadGrid);
        }
        let mut table = VolumeTable {
            dimension: k,
            radii: radii.to_vec(),
            vhb: Vec::with_capacity(radii.len()),
            vhs: Vec::with_capacity(radii.len()),
            vb: Vec::with_capacity(radii.len()),
            vs: Vec::with_capacity(radii.len()),
            tolerance,
        };
        for &r in radii {
            table.vhb.push(adaptive_simpson(
                &|t| hyperbolic_sphere_area(k - 1, t),
                0.0,
                r,
                tolerance,
            ));
            table.vhs.push(hyperbolic_sphere_area(k - 1, r));
            table.vb.push(euclidean_ball_volume(k, r));
            table.vs.push(euclidean_sphere_volume(k - 1, r));
        }
        Ok(table)
    }
}

/// Volume and consistency flag from the even-dimensional volume/Euler
/// relation `χ = (−1)^n · 2 Vol / Vol S^{2n}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GaussBonnetResult {
    pub volume: f64,
    /// False when the computed volume is not positive: no closed
    /// hyperbolic manifold of even dimension can have such a χ.
    pub hyperbolic_consistent: bool,
}

/// Solves the volume/Euler-characteristic relation for the volume:
/// `Vol = (−1)^n χ Vol(S^{2n}) / 2`.
pub fn gauss_bonnet(chi: i64, dim: usize) -> Result<GaussBonnetResult, BoundsError> {
    if !dim.is_multiple_of(2) || dim == 0 {
        return Err(BoundsError::OddDimension(dim));
    }
    let n = dim / 2;
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let volume = sign * chi as f64 * sphere_volume(dim) / 2.0;
    Ok(GaussBonnetResult {
        volume,
        hyperbolic_consistent: volume > 0.0,
    })
}

/// The homology lower bound in dimension 4 and the volume threshold past
/// which it dominates `V/100`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct H2Bound {
    pub bound: f64,
    /// Volume above which `(2/Vol S⁴)V − 2 ≥ V/100`.
    pub threshold: f64,
    pub exceeds_hundredth: bool,
}

/// `dim H₂ ≥ (2 / Vol S⁴) V − 2` for a connected closed hyperbolic
/// 4-manifold of volume V.
pub fn h2_lower_bound(volume: f64) -> Result<H2Bound, BoundsError> {
    if volume <= 0.0 {
        return Err(BoundsError::OutOfRange(format!("volume {volume} ≤ 0")));
    }
    let s4 = sphere_volume(4);
    let bound = 2.0 / s4 * volume - 2.0;
    let threshold = 2.0 / (2.0 / s4 - 0.01);
    Ok(H2Bound {
        bound,
        threshold,
        exceeds_hundredth: bound >= volume / 100.0,
    })
}

/// The systolic ball-volume bound and its exponential comparison.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AndersonBound {
    /// `VHB_i(R)`: the minimum volume of a homologically nontrivial
    /// i-cycle in a hyperbolic manifold of injectivity radius R.
    pub volume: f64,
    /// `VHB_i(R) / e^{(i−1)R}`; converges to a positive constant for
    /// i ≥ 2 as R grows.
    pub exp_ratio: f64,
}

/// Volume of the hyperbolic i-ball of radius R (for i = 1 this is the
/// interval volume 2R), with the `e^{(i−1)R}` comparison reported
/// alongside.
pub fn anderson_bound(i: usize, radius: f64) -> Result<AndersonBound, BoundsError> {
    let volume = hyperbolic_ball_volume(i, radius)?;
    let exp_ratio = volume / ((i as f64 - 1.0) * radius).exp();
    Ok(AndersonBound { volume, exp_ratio })
}

/// Euclidean cone volume: `Vol_k(CY) = (r/k) Vol_{k−1}(Y)`.
pub fn cone_volume_euclidean(k: usize, r: f64, base_volume: f64) -> Result<f64, BoundsError> {
    check_cone_args(k, r, base_volume)?;
    Ok(r / k as f64 * base_volume)
}

/// Hyperbolic cone volume:
/// `Vol_k(CY) = (VHB_k(r) / VHS_{k−1}(r)) Vol_{k−1}(Y)`.
pub fn cone_volume_hyperbolic(k: usize, r: f64, base_volume: f64) -> Result<f64, BoundsError> {
    check_cone_args(k, r, base_volume)?;
    Ok(hyperbolic_ball_volume(k, r)? / hyperbolic_sphere_area(k - 1, r) * base_volume)
}

fn check_cone_args(k: usize, r: f64, base_volume: f64) -> Result<(), BoundsError> {
    if k < 1 {
        return Err(BoundsError::OutOfRange(format!("cone dimension {k} < 1")));
    }
    if r <= 0.0 {
        return Err(BoundsError::OutOfRange(format!("cone radius {r} ≤ 0")));
    }
    if base_volume < 0.0 {
        return Err(BoundsError::OutOfRange(format!(
            "base volume {base_volume} < 0"
        )));
    }
    Ok(())
}

/// Per-grid-point data of the monotonicity audit.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AuditPoint {
    pub r: f64,
    pub vhb: f64,
    pub vhs: f64,
    /// Central finite difference of VHB at r.
    pub vhb_derivative: f64,
    pub derivative_rel_error: f64,
}

/// A point where a supplied volume profile violates the growth inequality
/// `V′(r) ≥ (VHS_{k−1}/VHB_k)(r) · V(r)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Violation {
    pub r: f64,
    pub lhs: f64,
    pub rhs: f64,
}

/// Report of [`monotonicity_audit`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonotonicityReport {
    pub points: Vec<AuditPoint>,
    /// Max relative error of `d/dr VHB_k = VHS_{k−1}` over the grid.
    pub derivative_identity_max_rel_error: f64,
    /// Max relative gap between segment slope and the inequality's
    /// right-hand side when the audited profile is the ball volume itself
    /// (equality case; the gap is pure interpolation error).
    pub calibration_max_deviation: f64,
    pub violations: Vec<Violation>,
}

/// Audits the derivative identity `d/dr VHB_k = VHS_{k−1}` on a grid, the
/// calibration family `V = VHB_k` (ratio identically 1), and optionally a
/// user-supplied volume profile against the growth inequality. The profile
/// is treated as piecewise-linear between samples, checked at segment
/// midpoints: the simplest defensible interpolation for an inequality.
/// This is an audit tool for hypothesized volume-growth data, not a
/// minimal-surface solver.
pub fn monotonicity_audit(
    k: usize,
    grid: &[f64],
    profile: Option<&[(f64, f64)]>,
) -> Result<MonotonicityReport, BoundsError> {
    if k < 1 {
        return Err(BoundsError::OutOfRange(format!("dimension {k} < 1")));
    }
    if grid.is_empty() || grid[0] <= 0.0 || grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(BoundsError::BadGrid);
    }
    let mut points = Vec::with_capacity(grid.len());
    let mut max_rel = 0.0f64;
    for &r in grid {
        // h scales with r so the sinh^{k−1} curvature near 0 stays tame
        let h = 1e-4 * r;
        let vhb = hyperbolic_ball_volume(k, r)?;
        let plus = hyperbolic_ball_volume(k, r + h)?;
        let minus = hyperbolic_ball_volume(k, r - h)?;
        let derivative = (plus - minus) / (2.0 * h);
        let vhs = hyperbolic_sphere_area(k - 1, r);
        let rel = ((derivative - vhs) / vhs).abs();
        max_rel = max_rel.max(rel);
        points.push(AuditPoint {
            r,
            vhb,
            vhs,
            vhb_derivative: derivative,
            derivative_rel_error: rel,
        });
    }

    // calibration: run the ball-volume profile itself through the
    // inequality machinery; slope and right-hand side must agree up to
    // interpolation error
    let mut max_dev = 0.0f64;
    for w in points.windows(2) {
        let (r0, v0) = (w[0].r, w[0].vhb);
        let (r1, v1) = (w[1].r, w[1].vhb);
        let mid = 0.5 * (r0 + r1);
        let v_mid = 0.5 * (v0 + v1);
        let slope = (v1 - v0) / (r1 - r0);
        let rhs = hyperbolic_sphere_area(k - 1, mid) / hyperbolic_ball_volume(k, mid)? * v_mid;
        max_dev = max_dev.max((slope / rhs - 1.0).abs());
    }

    let mut violations = Vec::new();
    if let Some(samples) = profile {
        if samples.len() < 2 || samples.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(BoundsError::BadGrid);
        }
        for w in samples.windows(2) {
            let (r0, v0) = w[0];
            let (r1, v1) = w[1];
            if r0 <= 0.0 {
                return Err(BoundsError::BadGrid);
            }
            let mid = 0.5 * (r0 + r1);
            let v_mid = 0.5 * (v0 + v1);
            let slope = (v1 - v0) / (r1 - r0);
            let ratio = hyperbolic_sphere_area(k - 1, mid) / hyperbolic_ball_volume(k, mid)?;
            let rhs = ratio * v_mid;
            if slope < rhs {
                violations.push(Violation {
                    r: mid,
                    lhs: slope,
                    rhs,
                });
            }
        }
    }

    Ok(MonotonicityReport {
        points,
        derivative_identity_max_rel_error: max_rel,
        calibration_max_deviation: max_dev,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn small_sphere_volumes_match_closed_forms() {
        assert!((sphere_volume(0) - 2.0).abs() < 1e-14);
        assert!((sphere_volume(1) - 2.0 * PI).abs() < 1e-13);
        assert!((sphere_volume(2) - 4.0 * PI).abs() < 1e-13);
        assert!((sphere_volume(3) - 2.0 * PI * PI).abs() < 1e-12);
        assert!((sphere_volume(4) - 8.0 * PI * PI / 3.0).abs() < 1e-12);
    }

    #[test]
    fn sphere_volume_4_matches_shell_quadrature_oracle() {
        // independent oracle: Vol(S⁴) = ∫₀^π Vol(S³) sin³θ dθ
        let oracle = adaptive_simpson(
            &|t| sphere_volume(3) * t.sin().powi(3),
            0.0,
            PI,
            1e-12,
        );
        assert!((sphere_volume(4) - oracle).abs() / oracle < 1e-10);
    }

    #[test]
    fn hyperbolic_disc_area_matches_closed_form() {
        // VHB₂(r) = 2π(cosh r − 1)
        for r in [0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0] {
            let quad = hyperbolic_ball_volume(2, r).unwrap();
            let exact = 2.0 * PI * (r.cosh() - 1.0);
            assert!(
                (quad - exact).abs() < 1e-9,
                "r={r}: {quad} vs {exact}"
            );
        }
        assert_eq!(hyperbolic_ball_volume(2, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn one_dimensional_ball_is_an_interval() {
        for r in [0.0, 0.5, 3.0] {
            assert!((hyperbolic_ball_volume(1, r).unwrap() - 2.0 * r).abs() < 1e-10);
        }
    }

    #[test]
    fn gauss_bonnet_in_dimensions_two_and_four() {
        // dim 4, χ = 2: volume of the 4-sphere's hyperbolic partner
        let r = gauss_bonnet(2, 4).unwrap();
        assert!((r.volume - sphere_volume(4)).abs() < 1e-12);
        assert!(r.hyperbolic_consistent);
        // genus-2 surface: χ = −2, dim 2 gives 4π (classical −2πχ)
        let r = gauss_bonnet(-2, 2).unwrap();
        assert!((r.volume - 4.0 * PI).abs() < 1e-12);
        assert!(r.hyperbolic_consistent);
        // χ = 0 is flagged
        assert!(!gauss_bonnet(0, 4).unwrap().hyperbolic_consistent);
        assert!(gauss_bonnet(1, 3).is_err());
    }

    #[test]
    fn h2_bound_values() {
        let s4 = sphere_volume(4);
        let b = h2_lower_bound(s4).unwrap();
        assert!(b.bound.abs() < 1e-12);
        let b = h2_lower_bound(100.0 * s4).unwrap();
        assert!((b.bound - 198.0).abs() < 1e-10);
        assert!(b.exceeds_hundredth);
        // threshold solves (2/VolS⁴ − 1/100) V = 2
        let t = b.threshold;
        assert!(((2.0 / s4 - 0.01) * t - 2.0).abs() < 1e-12);
        assert!(h2_lower_bound(0.0).is_err());
    }

    #[test]
    fn anderson_ratio_tends_to_pi_in_dimension_two() {
        // VHB₂(R)/e^R = 2π(cosh R − 1)/e^R → π
        let b = anderson_bound(2, 12.0).unwrap();
        assert!((b.exp_ratio - PI).abs() / PI < 0.01);
        let b = anderson_bound(2, 0.0).unwrap();
        assert_eq!(b.volume, 0.0);
        // i = 1 is linear
        let b = anderson_bound(1, 3.5).unwrap();
        assert!((b.volume - 7.0).abs() < 1e-10);
    }

    #[test]
    fn anderson_bound_is_increasing_in_radius() {
        let mut prev = 0.0;
        for step in 1..=20 {
            let b = anderson_bound(3, step as f64 * 0.5).unwrap().volume;
            assert!(b > prev);
            prev = b;
        }
    }

    #[test]
    fn cone_calibrations() {
        for k in [1usize, 2, 3, 4] {
            for r in [0.3, 1.0, 2.5] {
                let eucl = cone_volume_euclidean(k, r, euclidean_sphere_volume(k - 1, r)).unwrap();
                assert!(
                    (eucl - euclidean_ball_volume(k, r)).abs()
                        < 1e-12 * euclidean_ball_volume(k, r).max(1.0)
                );
                let hyp = cone_volume_hyperbolic(k, r, hyperbolic_sphere_area(k - 1, r)).unwrap();
                let vhb = hyperbolic_ball_volume(k, r).unwrap();
                assert!((hyp - vhb).abs() < 1e-9);
            }
        }
        assert_eq!(cone_volume_euclidean(3, 1.0, 0.0).unwrap(), 0.0);
        assert!(cone_volume_euclidean(3, 0.0, 1.0).is_err());
    }

    #[test]
    fn derivative_identity_audit_passes() {
        let grid: Vec<f64> = (1..=50).map(|i| 0.1 * i as f64).collect();
        for k in [2usize, 3, 4] {
            let report = monotonicity_audit(k, &grid, None).unwrap();
            assert!(
                report.derivative_identity_max_rel_error < 1e-6,
                "k={k}: {}",
                report.derivative_identity_max_rel_error
            );
            assert!(report.violations.is_empty());
        }
        // calibration slack is ~(λh/2)²/3 where λ is the local growth
        // rate (≈ 4.7 for k = 4 near r = 1), so step 0.05 keeps it under
        // a percent
        let grid: Vec<f64> = (20..=100).map(|i| 0.05 * i as f64).collect();
        for k in [2usize, 3, 4] {
            let report = monotonicity_audit(k, &grid, None).unwrap();
            assert!(
                report.calibration_max_deviation < 1e-2,
                "k={k}: {}",
                report.calibration_max_deviation
            );
        }
    }

    #[test]
    fn constant_profile_violates_growth_inequality_everywhere() {
        let grid: Vec<f64> = (1..=10).map(|i| 0.5 * i as f64).collect();
        let profile: Vec<(f64, f64)> = grid.iter().map(|&r| (r, 1.0)).collect();
        let report = monotonicity_audit(2, &grid, Some(&profile)).unwrap();
        assert_eq!(report.violations.len(), profile.len() - 1);
    }

    #[test]
    fn fast_growing_profile_satisfies_growth_inequality() {
        // e^{12r} grows much faster than the ratio VHS₂/VHB₃ ever demands
        // on r ≥ 1, with margin far above interpolation slack
        let grid: Vec<f64> = (10..=30).map(|i| 0.1 * i as f64).collect();
        let profile: Vec<(f64, f64)> = grid.iter().map(|&r| (r, (12.0 * r).exp())).collect();
        let report = monotonicity_audit(3, &grid, Some(&profile)).unwrap();
        assert!(report.violations.is_empty());
    }

    #[test]
    fn volume_table_invariants() {
        let radii: Vec<f64> = (0..=40).map(|i| 0.25 * i as f64).collect();
        for k in [1usize, 2, 4] {
            let table = VolumeTable::compute(k, &radii, QUADRATURE_TOL).unwrap();
            assert_eq!(table.vhb[0], 0.0);
            for column in [&table.vhb, &table.vhs, &table.vb, &table.vs] {
                assert!(column.iter().all(|&v| v >= 0.0));
            }
            assert!(table.vhb.windows(2).all(|w| w[0] <= w[1]));
            assert!(table.vb.windows(2).all(|w| w[0] <= w[1]));
            // hyperbolic dominates Euclidean for k ≥ 2 at positive radius
            if k >= 2 {
                for i in 1..radii.len() {
                    assert!(table.vhb[i] > table.vb[i]);
                }
            }
        }
        assert!(VolumeTable::compute(2, &[1.0, 0.5], QUADRATURE_TOL).is_err());
        assert!(VolumeTable::compute(2, &[-1.0, 0.5], QUADRATURE_TOL).is_err());
    }

    #[test]
    fn hyperbolic_balls_dominate_euclidean_balls() {
        for k in [2usize, 3, 4] {
            for r in [0.5, 1.0, 2.0, 4.0] {
                assert!(hyperbolic_ball_volume(k, r).unwrap() > euclidean_ball_volume(k, r));
            }
        }
    }

    #[test]
    fn bad_grids_are_rejected() {
        assert!(monotonicity_audit(2, &[], None).is_err());
        assert!(monotonicity_audit(2, &[0.0, 1.0], None).is_err());
        assert!(monotonicity_audit(2, &[1.0, 1.0], None).is_err());
        assert!(monotonicity_audit(2, &[2.0, 1.0], None).is_err());
    }
}
