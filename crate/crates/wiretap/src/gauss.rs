//! Closed-form rates for the degraded Gaussian wiretap channel with side
//! information, and the covariance oracle that validates them.
//!
//! All rates are in bits per channel use (base-2 logs), so "half a bit"
//! means 0.5 exactly. The model is parameterized by the legitimate
//! coefficients (h1, g1) and the degradedness factor beta; the
//! eavesdropper's coefficients are always (beta*h1, beta*g1) and its noise
//! is beta*N1 + N with the variances arranged so that Y2 = beta*Y1 + N.
//!
//! Closed forms and the mutual-information oracle are deliberately separate
//! routes: the oracle works purely on covariance determinants and never
//! touches the rate formulas it is used to check.

use crate::{Error, Result};

/// Channel coefficients of one degraded Gaussian wiretap instance.
/// Invariant: `|beta| <= 1` and all coefficients finite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaussWiretapParams {
    h1: f64,
    g1: f64,
    beta: f64,
}

impl GaussWiretapParams {
    pub fn new(h1: f64, g1: f64, beta: f64) -> Result<Self> {
        if !h1.is_finite() || !g1.is_finite() || !beta.is_finite() {
            return Err(Error::InvalidParameter(
                "channel coefficients must be finite".into(),
            ));
        }
        if beta.abs() > 1.0 {
            return Err(Error::InvalidParameter(format!(
                "degradedness factor beta = {beta} must satisfy |beta| <= 1"
            )));
        }
        Ok(GaussWiretapParams { h1, g1, beta })
    }

    pub fn h1(&self) -> f64 {
        self.h1
    }

    pub fn g1(&self) -> f64 {
        self.g1
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    fn h1_sq(&self) -> f64 {
        self.h1 * self.h1
    }

    /// Total signal-plus-interference power h1^2 + g1^2.
    fn t(&self) -> f64 {
        self.h1 * self.h1 + self.g1 * self.g1
    }
}

/// Lower/upper bound pair on a rate, in bits per channel use.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RateBounds {
    pub lower: f64,
    pub upper: f64,
    pub gap: f64,
}

impl RateBounds {
    pub fn new(lower: f64, upper: f64) -> Self {
        assert!(lower >= 0.0, "lower bound must be nonnegative, got {lower}");
        assert!(
            upper - lower >= -1e-12,
            "upper bound {upper} below lower bound {lower}"
        );
        RateBounds {
            lower,
            upper,
            gap: upper - lower,
        }
    }
}

/// Secret-key rate bounds. The upper bound holds for all parameters; the
/// lower bound is claimed only on the region `h1^2 >= h1T^2` where the
/// auxiliary choice applies, and is `None` elsewhere.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SecretKeyBounds {
    pub upper: f64,
    pub lower: Option<f64>,
}

impl SecretKeyBounds {
    pub fn is_lower_valid(&self) -> bool {
        self.lower.is_some()
    }

    pub fn gap(&self) -> Option<f64> {
        self.lower.map(|l| self.upper - l)
    }

    pub fn rate_bounds(&self) -> Option<RateBounds> {
        self.lower.map(|l| RateBounds::new(l, self.upper))
    }
}

// ---------------------------------------------------------------------------
// Small dense symmetric linear algebra for the covariance oracle.
// ---------------------------------------------------------------------------

/// Determinant by LU with partial pivoting. `dim == 0` gives 1.
fn determinant(dim: usize, entries: &[f64]) -> f64 {
    debug_assert_eq!(entries.len(), dim * dim);
    if dim == 0 {
        return 1.0;
    }
    let mut a = entries.to_vec();
    let idx = |r: usize, c: usize| r * dim + c;
    let mut det = 1.0;
    for col in 0..dim {
        let pivot_row = (col..dim)
            .max_by(|&r1, &r2| {
                a[idx(r1, col)]
                    .abs()
                    .partial_cmp(&a[idx(r2, col)].abs())
                    .expect("finite entries")
            })
            .expect("nonempty range");
        if a[idx(pivot_row, col)] == 0.0 {
            return 0.0;
        }
        if pivot_row != col {
            for c in 0..dim {
                a.swap(idx(col, c), idx(pivot_row, c));
            }
            det = -det;
        }
        let pivot = a[idx(col, col)];
        det *= pivot;
        for r in (col + 1)..dim {
            let f = a[idx(r, col)] / pivot;
            if f == 0.0 {
                continue;
            }
            for c in col..dim {
                a[idx(r, c)] -= f * a[idx(col, c)];
            }
        }
    }
    det
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
fn symmetric_eigenvalues(dim: usize, entries: &[f64]) -> Vec<f64> {
    debug_assert_eq!(entries.len(), dim * dim);
    let mut a = entries.to_vec();
    let idx = |r: usize, c: usize| r * dim + c;
    let scale = (0..dim)
        .map(|i| a[idx(i, i)].abs())
        .fold(1.0_f64, f64::max);
    for _ in 0..60 {
        let off: f64 = (0..dim)
            .flat_map(|p| ((p + 1)..dim).map(move |q| (p, q)))
            .map(|(p, q)| a[idx(p, q)] * a[idx(p, q)])
            .sum();
        if off.sqrt() <= 1e-14 * scale {
            break;
        }
        for p in 0..dim {
            for q in (p + 1)..dim {
                let apq = a[idx(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let tau = (a[idx(q, q)] - a[idx(p, p)]) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..dim {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for k in 0..dim {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..dim).map(|i| a[idx(i, i)]).collect()
}

/// Covariance matrix over a named tuple of jointly Gaussian variables.
/// Construction validates symmetry and positive semidefiniteness (smallest
/// eigenvalue at least -1e-10, scaled with the matrix magnitude).
#[derive(Clone, Debug)]
pub struct CovarianceMatrix {
    names: Vec<String>,
    dim: usize,
    entries: Vec<f64>,
}

impl CovarianceMatrix {
    pub fn new(names: Vec<String>, entries: Vec<f64>) -> Result<Self> {
        let dim = names.len();
        if entries.len() != dim * dim {
            return Err(Error::ShapeMismatch(format!(
                "{} variables need {} entries, got {}",
                dim,
                dim * dim,
                entries.len()
            )));
        }
        if entries.iter().any(|e| !e.is_finite()) {
            return Err(Error::InvalidParameter(
                "covariance entries must be finite".into(),
            ));
        }
        let scale = entries.iter().fold(1.0_f64, |m, e| m.max(e.abs()));
        for r in 0..dim {
            for c in (r + 1)..dim {
                if (entries[r * dim + c] - entries[c * dim + r]).abs() > 1e-9 * scale {
                    return Err(Error::InvalidParameter(format!(
                        "covariance is not symmetric at ({r}, {c})"
                    )));
                }
            }
        }
        let min_eig = symmetric_eigenvalues(dim, &entries)
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if dim > 0 && min_eig < -1e-10 * scale {
            return Err(Error::InvalidParameter(format!(
                "covariance is not positive semidefinite (eigenvalue {min_eig})"
            )));
        }
        Ok(CovarianceMatrix { names, dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn entry(&self, r: usize, c: usize) -> f64 {
        assert!(r < self.dim && c < self.dim);
        self.entries[r * self.dim + c]
    }

    fn principal_minor(&self, vars: &[usize]) -> Vec<f64> {
        let k = vars.len();
        let mut sub = vec![0.0; k * k];
        for (i, &r) in vars.iter().enumerate() {
            for (j, &c) in vars.iter().enumerate() {
                sub[i * k + j] = self.entries[r * self.dim + c];
            }
        }
        sub
    }
}

/// Mutual information between two disjoint groups of jointly Gaussian
/// variables, in bits:
/// `I(U; V) = (1/2) log2( det(S_U) det(S_V) / det(S_{U,V}) )`.
///
/// A singular joint covariance means one group determines the other
/// (infinite information) and is reported as [`Error::DegenerateMi`].
pub fn mi_gaussian(cov: &CovarianceMatrix, group_u: &[usize], group_v: &[usize]) -> Result<f64> {
    if group_u.is_empty() || group_v.is_empty() {
        return Err(Error::InvalidParameter(
            "mutual information needs two nonempty groups".into(),
        ));
    }
    let mut seen = vec![false; cov.dim()];
    for &i in group_u.iter().chain(group_v.iter()) {
        if i >= cov.dim() {
            return Err(Error::InvalidParameter(format!(
                "variable index {i} out of range for {} variables",
                cov.dim()
            )));
        }
        if seen[i] {
            return Err(Error::InvalidParameter(
                "groups must be disjoint with no repeated variables".into(),
            ));
        }
        seen[i] = true;
    }
    let joint_vars: Vec<usize> = group_u.iter().chain(group_v.iter()).copied().collect();
    let det_u = determinant(group_u.len(), &cov.principal_minor(group_u));
    let det_v = determinant(group_v.len(), &cov.principal_minor(group_v));
    let det_joint = determinant(joint_vars.len(), &cov.principal_minor(&joint_vars));
    if !(det_joint > 0.0) || !(det_u > 0.0) || !(det_v > 0.0) {
        return Err(Error::DegenerateMi);
    }
    let mi = 0.5 * (det_u.log2() + det_v.log2() - det_joint.log2());
    Ok(mi.max(0.0))
}

/// Variables of the standard wiretap covariance built by
/// [`wiretap_covariance`], in index order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaussVar {
    /// Channel input X (unit power).
    Input = 0,
    /// Interference S known at the transmitter.
    State = 1,
    /// Auxiliary coding variable U = h1 X + alpha g1 S.
    Aux = 2,
    /// Legitimate receiver output Y1.
    LegitOutput = 3,
    /// Eavesdropper output Y2 = beta Y1 + N.
    EavesOutput = 4,
}

impl GaussVar {
    pub fn index(self) -> usize {
        self as usize
    }
}

/// Joint covariance of (X, S, U, Y1, Y2) for the degraded model with
/// auxiliary coefficient `alpha` and input/state correlation
/// `rho = E[X S]`.
pub fn wiretap_covariance(
    p: &GaussWiretapParams,
    alpha: f64,
    rho: f64,
) -> Result<CovarianceMatrix> {
    if !alpha.is_finite() {
        return Err(Error::InvalidParameter("alpha must be finite".into()));
    }
    if !rho.is_finite() || rho.abs() > 1.0 {
        return Err(Error::InvalidParameter(format!(
            "correlation rho = {rho} must satisfy |rho| <= 1"
        )));
    }
    let (h1, g1, b) = (p.h1, p.g1, p.beta);
    let var_u = h1 * h1 + alpha * alpha * g1 * g1 + 2.0 * alpha * h1 * g1 * rho;
    let cov_ux = h1 + alpha * g1 * rho;
    let cov_us = h1 * rho + alpha * g1;
    let var_y1 = h1 * h1 + g1 * g1 + 2.0 * h1 * g1 * rho + 1.0;
    let cov_y1x = h1 + g1 * rho;
    let cov_y1s = h1 * rho + g1;
    let cov_uy1 = h1 * (h1 + g1 * rho) + alpha * g1 * (h1 * rho + g1);
    let var_y2 = b * b * var_y1 + 1.0 - b * b;

    let names = ["X", "S", "U", "Y1", "Y2"].map(String::from).to_vec();
    #[rustfmt::skip]
    let entries = vec![
        1.0,          rho,          cov_ux,       cov_y1x,      b * cov_y1x,
        rho,          1.0,          cov_us,       cov_y1s,      b * cov_y1s,
        cov_ux,       cov_us,       var_u,        cov_uy1,      b * cov_uy1,
        cov_y1x,      cov_y1s,      cov_uy1,      var_y1,       b * var_y1,
        b * cov_y1x,  b * cov_y1s,  b * cov_uy1,  b * var_y1,   var_y2,
    ];
    CovarianceMatrix::new(names, entries)
}

// ---------------------------------------------------------------------------
// Dirty-paper channel without an eavesdropper.
// ---------------------------------------------------------------------------

/// Capacity of the Gaussian dirty-paper channel: `(1/2) log2(1 + h^2)`,
/// interference-free despite the interference.
pub fn costa_capacity(h: f64) -> f64 {
    0.5 * (1.0 + h * h).log2()
}

/// Achievable rate of the dirty-paper channel under the auxiliary choice
/// `U = hX + gS`: `[ (1/2) log2( (1+h^2+g^2) h^2 / (h^2+g^2) ) ]^+`.
/// Always within half a bit of [`costa_capacity`].
pub fn costa_suboptimal_rate(h: f64, g: f64) -> Result<f64> {
    if h == 0.0 && g == 0.0 {
        return Err(Error::UndefinedRate(
            "h = g = 0 leaves the auxiliary variable undefined".into(),
        ));
    }
    let (hsq, gsq) = (h * h, g * g);
    let rate = 0.5 * ((1.0 + hsq + gsq) * hsq / (hsq + gsq)).log2();
    Ok(rate.max(0.0))
}

// ---------------------------------------------------------------------------
// Degraded wiretap channel: achievable rate and bounds.
// ---------------------------------------------------------------------------

/// Achievable secrecy rate for the auxiliary choice `U = h1 X + alpha g1 S`
/// with X standard Gaussian independent of S:
/// `( min{ I(U;Y1) - I(U;S), I(U;Y1) - I(U;Y2) } )^+`.
///
/// The mutual informations are evaluated through the covariance oracle, not
/// through hand-derived general-alpha formulas. When U is a deterministic
/// function of S alone (h1 = 0), the first term is -infinity and the rate
/// clamps to zero.
pub fn secrecy_rate_achievable(p: &GaussWiretapParams, alpha: f64) -> Result<f64> {
    if p.h1 == 0.0 && alpha * p.g1 == 0.0 {
        return Err(Error::UndefinedRate(
            "h1 = 0 and alpha*g1 = 0 make the auxiliary variable identically zero".into(),
        ));
    }
    let cov = wiretap_covariance(p, alpha, 0.0)?;
    let u = [GaussVar::Aux.index()];
    let i_uy1 = mi_gaussian(&cov, &u, &[GaussVar::LegitOutput.index()])?;
    let term_state = match mi_gaussian(&cov, &u, &[GaussVar::State.index()]) {
        Ok(i_us) => i_uy1 - i_us,
        // U determined by S: infinite leakage of the codeword into the
        // state, so this term is -infinity and the rate clamps below.
        Err(Error::DegenerateMi) => f64::NEG_INFINITY,
        Err(e) => return Err(e),
    };
    let i_uy2 = mi_gaussian(&cov, &u, &[GaussVar::EavesOutput.index()])?;
    let term_eaves = i_uy1 - i_uy2;
    Ok(term_state.min(term_eaves).max(0.0))
}

/// Thresholds `(h1L^2, h1H^2)` delimiting the three branches of
/// [`alpha_star`]. Below the low threshold the dirty-paper coefficient
/// `h1^2/(1+h1^2)` is optimal and the achievable rate meets the upper
/// bound; at and above the high threshold `alpha = 1` is optimal.
pub fn alpha_star_thresholds(p: &GaussWiretapParams) -> (f64, f64) {
    if p.g1 == 0.0 {
        return (0.0, 0.0);
    }
    let gsq = p.g1 * p.g1;
    let ag = p.g1.abs();
    let bsq = p.beta * p.beta;
    let low = (-gsq / 2.0 - 1.0 + ag / 2.0 * (gsq + 4.0 / bsq - 4.0).sqrt()).max(0.0);
    let high = -gsq / 2.0 + ag / 2.0 * (gsq + 4.0 / bsq).sqrt();
    (low, high)
}

/// The maximizing auxiliary coefficient for `U = h1 X + alpha g1 S`.
/// Continuous in `h1^2`, equal to Costa's `h1^2/(1+h1^2)` below `h1L^2` and
/// exactly 1 from `h1H^2` on. For `g1 = 0` the choice is immaterial and 1
/// is returned.
pub fn alpha_star(p: &GaussWiretapParams) -> f64 {
    if p.g1 == 0.0 {
        return 1.0;
    }
    let h1sq = p.h1_sq();
    let (low, high) = alpha_star_thresholds(p);
    if h1sq >= high {
        1.0
    } else if h1sq >= low {
        let bsq = p.beta * p.beta;
        let ag = p.g1.abs();
        bsq * h1sq * (ag + (h1sq + p.g1 * p.g1 + 1.0 / bsq).sqrt()) / (ag * (1.0 + bsq * h1sq))
    } else {
        h1sq / (h1sq + 1.0)
    }
}

/// Secrecy-capacity bounds; the gap never exceeds half a bit.
///
/// Lower: `( min{ (1/2)log2((1+t)h1^2/t), (1/2)log2((1+t)/(1+beta^2 t)) } )^+`
/// with `t = h1^2 + g1^2`. Upper:
/// `min{ (1/2)log2(1+h1^2), (1/2)log2((2t+1)/(2 beta^2 t + 1)) }`.
pub fn secrecy_bounds(p: &GaussWiretapParams) -> RateBounds {
    let t = p.t();
    if t == 0.0 {
        return RateBounds::new(0.0, 0.0);
    }
    let h1sq = p.h1_sq();
    let bsq = p.beta * p.beta;
    let cap_term = 0.5 * (1.0 + h1sq).log2();
    let noise_term = 0.5 * ((2.0 * t + 1.0) / (2.0 * bsq * t + 1.0)).log2();
    let dpc_term = 0.5 * ((1.0 + t) * h1sq / t).log2();
    let degrade_term = 0.5 * ((1.0 + t) / (1.0 + bsq * t)).log2();
    let lower = dpc_term.min(degrade_term).max(0.0);
    let upper = cap_term.min(noise_term);
    RateBounds::new(lower, upper.max(lower))
}

/// Threshold `h1T^2 = -g1^2/2 + (|g1|/2) sqrt(g1^2 + 4)` above which the
/// secret-key lower bound (and rho*) applies.
pub fn h1t_squared(g1: f64) -> f64 {
    let gsq = g1 * g1;
    -gsq / 2.0 + g1.abs() / 2.0 * (gsq + 4.0).sqrt()
}

/// Secret-key capacity bounds. The upper bound
/// `(1/2)log2((2t+1)/(2 beta^2 t + 1))` holds unconditionally; the lower
/// bound `(1/2)log2((1+t)/(1+beta^2 t))` is claimed only for
/// `h1^2 >= h1T^2` and its gap is then at most half a bit.
pub fn secret_key_bounds(p: &GaussWiretapParams) -> SecretKeyBounds {
    let t = p.t();
    let bsq = p.beta * p.beta;
    let upper = if t == 0.0 {
        0.0
    } else {
        0.5 * ((2.0 * t + 1.0) / (2.0 * bsq * t + 1.0)).log2()
    };
    let lower = if p.h1_sq() >= h1t_squared(p.g1) {
        let l = if t == 0.0 {
            0.0
        } else {
            0.5 * ((1.0 + t) / (1.0 + bsq * t)).log2()
        };
        Some(l)
    } else {
        None
    };
    SecretKeyBounds { upper, lower }
}

/// Radicand of [`rho_star`]; nonnegative exactly when `h1^2 >= h1T^2`.
pub fn rho_star_radicand(h1: f64, g1: f64) -> f64 {
    let t = h1 * h1 + g1 * g1;
    1.0 - t / ((1.0 + t) * h1 * h1)
}

/// The input/state correlation
/// `rho* = sqrt(1 - t/((1+t) h1^2)) * sgn(h1 g1)` used by the correlated
/// secret-key scheme. Exists exactly when `h1^2 >= h1T^2`; `sgn(0)` counts
/// as positive. Radicands within -1e-12 of zero are clamped to zero so the
/// threshold itself is included.
pub fn rho_star(h1: f64, g1: f64) -> Result<f64> {
    if h1 == 0.0 && g1 == 0.0 {
        // Degenerate no-interference point: the radicand tends to zero.
        return Ok(0.0);
    }
    let radicand = rho_star_radicand(h1, g1);
    if radicand < -1e-12 {
        return Err(Error::RhoStarUndefined {
            h1_sq: h1 * h1,
            threshold: h1t_squared(g1),
        });
    }
    let sign = if h1 * g1 >= 0.0 { 1.0 } else { -1.0 };
    Ok(radicand.max(0.0).sqrt() * sign)
}

/// Achievable secret-key rate `I(U;Y1) - I(U;Y2)` for `U = h1 X + g1 S`
/// with input/state correlation `rho`, evaluated through the covariance
/// oracle. At `rho = 0` this reproduces the secret-key lower bound.
pub fn key_rate_with_correlation(p: &GaussWiretapParams, rho: f64) -> Result<f64> {
    let cov = wiretap_covariance(p, 1.0, rho)?;
    let u = [GaussVar::Aux.index()];
    let i_uy1 = mi_gaussian(&cov, &u, &[GaussVar::LegitOutput.index()])?;
    let i_uy2 = mi_gaussian(&cov, &u, &[GaussVar::EavesOutput.index()])?;
    Ok((i_uy1 - i_uy2).max(0.0))
}

// ---------------------------------------------------------------------------
// Figure-data sweeps.
// ---------------------------------------------------------------------------

/// Curves that can be swept against h1^2 with g1 and beta fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepCurve {
    AlphaStar,
    RateAlphaStar,
    RateAlphaOne,
    SecrecyLower,
    SecrecyUpper,
    KeyLower,
    KeyUpper,
    KeyRateRhoStar,
    KeyRateRhoZero,
}

impl SweepCurve {
    pub fn name(self) -> &'static str {
        match self {
            SweepCurve::AlphaStar => "alpha_star",
            SweepCurve::RateAlphaStar => "rate_alpha_star",
            SweepCurve::RateAlphaOne => "rate_alpha_1",
            SweepCurve::SecrecyLower => "secrecy_lower",
            SweepCurve::SecrecyUpper => "secrecy_upper",
            SweepCurve::KeyLower => "key_lower",
            SweepCurve::KeyUpper => "key_upper",
            SweepCurve::KeyRateRhoStar => "key_rate_rho_star",
            SweepCurve::KeyRateRhoZero => "key_rate_rho_0",
        }
    }

    pub const ALL: [SweepCurve; 9] = [
        SweepCurve::AlphaStar,
        SweepCurve::RateAlphaStar,
        SweepCurve::RateAlphaOne,
        SweepCurve::SecrecyLower,
        SweepCurve::SecrecyUpper,
        SweepCurve::KeyLower,
        SweepCurve::KeyUpper,
        SweepCurve::KeyRateRhoStar,
        SweepCurve::KeyRateRhoZero,
    ];
}

impl std::str::FromStr for SweepCurve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SweepCurve::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCurve(s.to_string()))
    }
}

/// One sweep row: `value` is `None` where the curve is not applicable
/// (the secret-key lower-bound family below `h1T^2`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepPoint {
    pub h1_sq: f64,
    pub value: Option<f64>,
}

/// Evaluates one curve over a grid of h1^2 values, taking g1 and beta from
/// `fixed` (its h1 is ignored). Grid values must be finite and nonnegative.
/// Rows in invalid regions are emitted with `value: None`, never dropped,
/// so figure data keeps the grid shape.
pub fn sweep(curve: SweepCurve, grid: &[f64], fixed: &GaussWiretapParams) -> Result<Vec<SweepPoint>> {
    for &h1_sq in grid {
        if !h1_sq.is_finite() || h1_sq < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "grid value {h1_sq} must be finite and nonnegative"
            )));
        }
    }
    grid.iter()
        .map(|&h1_sq| {
            let p = GaussWiretapParams::new(h1_sq.sqrt(), fixed.g1, fixed.beta)?;
            let key_valid = h1_sq >= h1t_squared(fixed.g1);
            let value = match curve {
                SweepCurve::AlphaStar => Some(alpha_star(&p)),
                SweepCurve::RateAlphaStar => Some(rate_or_zero(&p, alpha_star(&p))?),
                SweepCurve::RateAlphaOne => Some(rate_or_zero(&p, 1.0)?),
                SweepCurve::SecrecyLower => Some(secrecy_bounds(&p).lower),
                SweepCurve::SecrecyUpper => Some(secrecy_bounds(&p).upper),
                SweepCurve::KeyLower => secret_key_bounds(&p).lower,
                SweepCurve::KeyUpper => Some(secret_key_bounds(&p).upper),
                SweepCurve::KeyRateRhoZero => {
                    if key_valid {
                        Some(key_rate_or_zero(&p, 0.0)?)
                    } else {
                        None
                    }
                }
                SweepCurve::KeyRateRhoStar => {
                    if key_valid {
                        let rho = rho_star(p.h1, p.g1)?;
                        Some(key_rate_or_zero(&p, rho)?)
                    } else {
                        None
                    }
                }
            };
            Ok(SweepPoint { h1_sq, value })
        })
        .collect()
}

/// Rate curves at the degenerate origin evaluate to zero instead of
/// erroring, so sweeps over grids touching h1^2 = 0 stay total.
fn rate_or_zero(p: &GaussWiretapParams, alpha: f64) -> Result<f64> {
    if p.h1 == 0.0 && alpha * p.g1 == 0.0 {
        return Ok(0.0);
    }
    secrecy_rate_achievable(p, alpha)
}

fn key_rate_or_zero(p: &GaussWiretapParams, rho: f64) -> Result<f64> {
    if p.t() == 0.0 {
        return Ok(0.0);
    }
    key_rate_with_correlation(p, rho)
}
