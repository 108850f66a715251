//! Named verification suites.
//!
//! Each suite checks one family of invariants: formula equivalences on
//! exhaustive parameter grids, closed forms against independent oracles,
//! and gap guarantees. The `wiretap verify` subcommand and the acceptance
//! test suite both run these; a suite passes when every check passes.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::binning::{evaluate_with_budget, generate_codebook_with_budget, BinningConfig};
use crate::det::{
    det_secrecy_capacity_cases, det_secrecy_capacity_rank, det_secret_key_capacity,
    exhaustive_cond_entropy_with_budget, max_cond_entropy_formula, DetWiretapParams,
};
use crate::gauss::{
    alpha_star, alpha_star_thresholds, costa_capacity, costa_suboptimal_rate, h1t_squared,
    mi_gaussian, rho_star, rho_star_radicand, secrecy_bounds, secrecy_rate_achievable,
    secret_key_bounds, wiretap_covariance, CovarianceMatrix, GaussVar, GaussWiretapParams,
};
use crate::gf2::{downshift_power, hstack, solve_in_affine, vstack, Gf2Matrix, Gf2Vector};
use crate::pmf::JointPmf;
use crate::{Error, Result, DEFAULT_ENUM_BUDGET};

/// All suite names, in the order `run_all` executes them.
pub const SUITE_NAMES: &[&str] = &[
    "gf2",
    "det-formulas",
    "det-oracle",
    "lemma1",
    "costa-gap",
    "thm3-gap",
    "mi-oracle",
    "alpha-star",
    "key-gap",
    "binning",
];

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Overrides the sampled-suite sizes (lemma1 pairs, mi-oracle draws).
    /// `None` keeps the reference sizes (200 and 500).
    pub trials: Option<u64>,
    pub budget: u64,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            trials: None,
            budget: DEFAULT_ENUM_BUDGET,
            seed: 0x5ec0de,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Checker {
    checks: u64,
    failures: u64,
    first_failure: Option<String>,
}

impl Checker {
    fn new() -> Self {
        Checker {
            checks: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    fn into_report(self, suite: &str) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            checks: self.checks,
            failures: self.failures,
            first_failure: self.first_failure,
        }
    }
}

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    match name {
        "gf2" => gf2_suite(cfg),
        "det-formulas" => det_formulas_suite(cfg),
        "det-oracle" => det_oracle_suite(cfg),
        "lemma1" => lemma1_suite(cfg),
        "costa-gap" => costa_gap_suite(cfg),
        "thm3-gap" => thm3_gap_suite(cfg),
        "mi-oracle" => mi_oracle_suite(cfg),
        "alpha-star" => alpha_star_suite(cfg),
        "key-gap" => key_gap_suite(cfg),
        "binning" => binning_suite(cfg),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    SUITE_NAMES.iter().map(|name| run_suite(name, cfg)).collect()
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Gf2Matrix {
    Gf2Matrix::from_fn(rows, cols, |_, _| rng.next_u64() & 1 == 1)
}

/// Shift-matrix identities, rank laws, and solve round trips.
fn gf2_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut c = Checker::new();
    for q in 0..=6usize {
        for k in 0..=q {
            let rank = downshift_power(q, k)?.rank();
            c.check(rank == q - k, || {
                format!("rank(D^{k}) = {rank} at q = {q}, expected {}", q - k)
            });
        }
    }
    for q in 0..=5usize {
        for n2 in 0..=q {
            for m2 in 0..=q {
                let b = hstack(&downshift_power(q, q - n2)?, &downshift_power(q, q - m2)?)?;
                let rank = b.rank();
                c.check(rank == n2.max(m2), || {
                    format!("rank of stacked shifts at q={q}, n2={n2}, m2={m2}: {rank}")
                });
                c.check(b.rank() + b.nullity() == b.cols(), || {
                    "rank-nullity violation on stacked shifts".to_string()
                });
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..50 {
        let rows = (rng.next_u64() % 7 + 1) as usize;
        let cols = (rng.next_u64() % 7 + 1) as usize;
        let a = random_matrix(&mut rng, rows, cols);
        let rows_b = (rng.next_u64() % 7 + 1) as usize;
        let b = random_matrix(&mut rng, rows_b, cols);
        c.check(a.rank() + a.nullity() == cols, || "rank + nullity != cols".into());
        c.check(a.rank() == a.transpose().rank(), || "rank not transpose-invariant".into());
        let g = vstack(&a, &b)?;
        let (ra, rb, rg) = (a.rank(), b.rank(), g.rank());
        c.check(rg >= ra.max(rb) && rg <= ra + rb, || {
            format!("stack rank bounds violated: {ra}, {rb}, {rg}")
        });
        let x = Gf2Vector::from_bits(cols, rng.next_u64() & ((1 << cols) - 1));
        let t = a.mul_vec(&x);
        let solved = solve_in_affine(&t, &a)?;
        c.check(
            solved.map(|s| a.mul_vec(&s) == t).unwrap_or(false),
            || "solve failed on a consistent system".into(),
        );
    }
    Ok(c.into_report("gf2"))
}

/// Piecewise formula vs rank formula on all 1296 gain tuples in {0..5}^4,
/// plus key-vs-secrecy dominance. One composite check per tuple.
///
/// Note the capacity is not monotone in n1 with the other gains fixed:
/// raising n1 onto the alignment n1 - m1 = n2 - m2 hands the eavesdropper
/// an exact copy of the received signal and the capacity dips (for example
/// (1,1,2,1) has capacity 1 while (2,1,2,1) has 0), so no such check here.
fn det_formulas_suite(_cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut c = Checker::new();
    for n1 in 0..=5u32 {
        for m1 in 0..=5u32 {
            for n2 in 0..=5u32 {
                for m2 in 0..=5u32 {
                    let p = DetWiretapParams::new(n1, m1, n2, m2);
                    let cases = det_secrecy_capacity_cases(&p);
                    let rank = det_secrecy_capacity_rank(&p);
                    let key = det_secret_key_capacity(&p);
                    c.check(cases == rank && key >= cases, || {
                        format!("tuple {p:?}: cases={cases}, rank={rank}, key={key}")
                    });
                }
            }
        }
    }
    Ok(c.into_report("det-formulas"))
}

/// Exhaustive entropy enumeration against the closed forms on every tuple
/// with q <= 3: H(Y1|S) = n1 and H(Y1|Y2) = rank([A;B]) - rank(B) at
/// uniform independent inputs.
fn det_oracle_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut c = Checker::new();
    for n1 in 0..=3u32 {
        for m1 in 0..=3u32 {
            for n2 in 0..=3u32 {
                for m2 in 0..=3u32 {
                    let p = DetWiretapParams::new(n1, m1, n2, m2);
                    let q = p.q() as usize;
                    let a = p.receiver_matrix();
                    let b = p.eavesdropper_matrix();
                    let uniform = JointPmf::uniform(vec![2; 2 * q])?;
                    // Selecting the state half of Z = (X, S) conditions on S.
                    let state_selector =
                        hstack(&Gf2Matrix::zeros(q, q), &Gf2Matrix::identity(q))?;
                    let h_y1_given_s =
                        exhaustive_cond_entropy_with_budget(&a, &state_selector, &uniform, cfg.budget)?;
                    let h_y1_given_y2 =
                        exhaustive_cond_entropy_with_budget(&a, &b, &uniform, cfg.budget)?;
                    let spread = max_cond_entropy_formula(&a, &b)? as f64;
                    let rank_cap = det_secrecy_capacity_rank(&p) as f64;
                    let oracle_cap = (n1 as f64).min(h_y1_given_y2);
                    c.check(
                        (h_y1_given_s - n1 as f64).abs() <= 1e-9
                            && (h_y1_given_y2 - spread).abs() <= 1e-9
                            && (oracle_cap - rank_cap).abs() <= 1e-9,
                        || {
                            format!(
                                "tuple {p:?}: H(Y1|S)={h_y1_given_s} (n1={n1}), \
                                 H(Y1|Y2)={h_y1_given_y2} (formula {spread})"
                            )
                        },
                    );
                }
            }
        }
    }
    Ok(c.into_report("det-oracle"))
}

/// The rank formula equals the exhaustive conditional entropy at the
/// uniform distribution and dominates it under sampled product
/// distributions, on seeded random matrix pairs.
fn lemma1_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut c = Checker::new();
    let pairs = cfg.trials.unwrap_or(200);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..pairs {
        let cols = (rng.next_u64() % 12 + 1) as usize;
        let rows_a = (rng.next_u64() % 6 + 1) as usize;
        let rows_b = (rng.next_u64() % 6 + 1) as usize;
        let a = random_matrix(&mut rng, rows_a, cols);
        let b = random_matrix(&mut rng, rows_b, cols);
        let formula = max_cond_entropy_formula(&a, &b)? as f64;

        let uniform = JointPmf::uniform(vec![2; cols])?;
        let at_uniform = exhaustive_cond_entropy_with_budget(&a, &b, &uniform, cfg.budget)?;
        c.check((at_uniform - formula).abs() <= 1e-9, || {
            format!("uniform attainment failed: formula {formula}, oracle {at_uniform}")
        });

        for _ in 0..50 {
            let ps: Vec<f64> = (0..cols).map(|_| rng.random::<f64>()).collect();
            let dist = JointPmf::bernoulli_product(&ps)?;
            let h = exhaustive_cond_entropy_with_budget(&a, &b, &dist, cfg.budget)?;
            c.check(formula >= h - 1e-9, || {
                format!("dominance failed: formula {formula} < sampled entropy {h}")
            });
        }
    }
    Ok(c.into_report("lemma1"))
}

fn log_grid(points: usize, lo_exp: f64, hi_exp: f64) -> Vec<f64> {
    (0..points)
        .map(|i| {
            let e = lo_exp + (hi_exp - lo_exp) * i as f64 / (points - 1) as f64;
            10f64.powf(e)
        })
        .collect()
}

/// Dirty-paper half-bit gap on a 30x30 log grid.
fn costa_gap_suite(_cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut c = Checker::new();
    for &hsq in &log_grid(30, -3.0, 3.0) {
        for &gsq in &log_grid(30, -3.0, 3.0) {
            let capacity = costa_capacity(hsq.sqrt());
            let rate = costa_suboptimal_rate(hsq.sqrt(), gsq.sqrt())?;
            let gap = capacity - rate;
            c.check((0.0..=0.5).contains(&gap), || {
                format!("gap {gap} outside [0, 0.5] at h^2={hsq}, g^2={gsq}")
            });
        }
    }
    Ok(c.into_report("costa-gap"))
}

const BETA_GRID: [f64; 9] = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.99];

/// Secrecy-bound half-bit gap on a 20x20x9 grid.
fn thm3_gap_suite(_cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut c = Checker::new();
    for &h1sq in &log_grid(20, -3.0, 3.0) {
        for &g1sq in &log_grid(20, -3.0, 3.0) {
            for &beta in &BETA_GRID {
                let p = GaussWiretapParams::new(h1sq.sqrt(), g1sq.sqrt(), beta)?;
                let bounds = secrecy_bounds(&p);
                c.check(
                    bounds.gap <= 0.5 + 1e-9 && bounds.lower >= 0.0 && bounds.gap >= -1e-12,
                    || {
                        format!(
                            "bounds ({}, {}) at h1^2={h1sq}, g1^2={g1sq}, beta={beta}",
                            bounds.lower, bounds.upper
                        )
                    },
                );
            }
        }
    }
    Ok(c.into_report("thm3-gap"))
}

fn close_rel(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}

/// Signed log-uniform draw over magnitudes [10^lo, 10^hi].
fn signed_log_uniform(rng: &mut ChaCha8Rng, lo_exp: f64, hi_exp: f64) -> f64 {
    let mag = 10f64.powf(rng.random_range(lo_exp..hi_exp));
    if rng.random::<bool>() {
        mag
    } else {
        -mag
    }
}

/// The covariance oracle against every closed-form mutual information, on
/// seeded random parameter draws.
fn mi_oracle_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut c = Checker::new();
    let draws = cfg.trials.unwrap_or(500);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    for _ in 0..draws {
        let h1 = signed_log_uniform(&mut rng, -2.0, 1.0);
        let g1 = signed_log_uniform(&mut rng, -2.0, 1.0);
        let beta = rng.random_range(-1.0..1.0);
        let alpha = rng.random_range(-2.0..2.0);
        let p = GaussWiretapParams::new(h1, g1, beta)?;
        let (h1sq, g1sq) = (h1 * h1, g1 * g1);
        let t = h1sq + g1sq;

        let cov = wiretap_covariance(&p, 1.0, 0.0)?;
        let u = [GaussVar::Aux.index()];

        let i_us = mi_gaussian(&cov, &u, &[GaussVar::State.index()])?;
        let i_us_closed = 0.5 * (1.0 + g1sq / h1sq).log2();
        c.check(close_rel(i_us, i_us_closed, 1e-9), || {
            format!("I(U;S) oracle {i_us} vs closed {i_us_closed} at h1={h1}, g1={g1}")
        });

        let i_uy1 = mi_gaussian(&cov, &u, &[GaussVar::LegitOutput.index()])?;
        let i_uy1_closed = 0.5 * (1.0 + t).log2();
        c.check(close_rel(i_uy1, i_uy1_closed, 1e-9), || {
            format!("I(U;Y1) oracle {i_uy1} vs closed {i_uy1_closed}")
        });

        // Degraded eavesdropper, full formula with the cross term written out.
        let (h2, g2) = (beta * h1, beta * g1);
        let i_uy2 = mi_gaussian(&cov, &u, &[GaussVar::EavesOutput.index()])?;
        let i_uy2_closed =
            0.5 * ((t * (1.0 + h2 * h2 + g2 * g2)) / (t + (h1 * g2 - h2 * g1).powi(2))).log2();
        c.check(close_rel(i_uy2, i_uy2_closed, 1e-9), || {
            format!("I(U;Y2) oracle {i_uy2} vs closed {i_uy2_closed} at beta={beta}")
        });

        // General (not degraded) eavesdropper coefficients, covariance
        // assembled by hand: exercises the cross term for real.
        let h2g = signed_log_uniform(&mut rng, -2.0, 1.0);
        let g2g = signed_log_uniform(&mut rng, -2.0, 1.0);
        let gen_cov = CovarianceMatrix::new(
            vec!["U".into(), "Y2".into()],
            vec![
                t,
                h1 * h2g + g1 * g2g,
                h1 * h2g + g1 * g2g,
                h2g * h2g + g2g * g2g + 1.0,
            ],
        )?;
        let i_gen = mi_gaussian(&gen_cov, &[0], &[1])?;
        let i_gen_closed = 0.5
            * ((t * (1.0 + h2g * h2g + g2g * g2g)) / (t + (h1 * g2g - h2g * g1).powi(2))).log2();
        c.check(close_rel(i_gen, i_gen_closed, 1e-9), || {
            format!("general I(U;Y2) oracle {i_gen} vs closed {i_gen_closed}")
        });

        // The achievable rate at alpha = 1 against its explicit min form.
        let rate = secrecy_rate_achievable(&p, 1.0)?;
        let dpc_term = 0.5 * ((1.0 + t) * h1sq / t).log2();
        let degrade_term = 0.5 * ((1.0 + t) / (1.0 + beta * beta * t)).log2();
        let rate_closed = dpc_term.min(degrade_term).max(0.0);
        c.check(close_rel(rate, rate_closed, 1e-9), || {
            format!("achievable rate oracle {rate} vs closed {rate_closed}")
        });

        // General alpha stays finite and nonnegative through the oracle.
        let rate_alpha = secrecy_rate_achievable(&p, alpha);
        c.check(
            matches!(rate_alpha, Ok(r) if r.is_finite() && r >= 0.0),
            || format!("rate at alpha={alpha} not finite/nonnegative"),
        );
    }
    Ok(c.into_report("mi-oracle"))
}

/// Optimality of the closed-form maximizing coefficient at g1 = 1,
/// beta = 0.5: dominance over alpha = 1, a 1001-point line search, the
/// alpha = 1 region, the exact-capacity region, and threshold continuity.
fn alpha_star_suite(_cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut c = Checker::new();
    let fixed = GaussWiretapParams::new(1.0, 1.0, 0.5)?;
    let (low, high) = alpha_star_thresholds(&fixed);
    for &h1sq in &log_grid(50, -3.0, 1.0) {
        let p = GaussWiretapParams::new(h1sq.sqrt(), 1.0, 0.5)?;
        let a_star = alpha_star(&p);
        let rate_star = secrecy_rate_achievable(&p, a_star)?;
        let rate_one = secrecy_rate_achievable(&p, 1.0)?;
        c.check(rate_star >= rate_one - 1e-9, || {
            format!("rate({a_star}) = {rate_star} < rate(1) = {rate_one} at h1^2={h1sq}")
        });

        let mut best_grid = f64::NEG_INFINITY;
        for i in 0..=1000 {
            let alpha = -2.0 + 4.0 * i as f64 / 1000.0;
            best_grid = best_grid.max(secrecy_rate_achievable(&p, alpha)?);
        }
        c.check(best_grid <= rate_star + 1e-6, || {
            format!("line search found {best_grid} > rate(alpha*) = {rate_star} at h1^2={h1sq}")
        });

        if h1sq >= high {
            c.check(a_star == 1.0, || {
                format!("alpha* = {a_star} != 1 at h1^2={h1sq} >= {high}")
            });
        }
        if h1sq <= low {
            let upper = secrecy_bounds(&p).upper;
            c.check((rate_star - upper).abs() <= 1e-6, || {
                format!("rate(alpha*) = {rate_star} misses upper bound {upper} at h1^2={h1sq}")
            });
        }
    }
    for boundary in [low, high] {
        let below = alpha_star(&GaussWiretapParams::new((boundary - 1e-9).sqrt(), 1.0, 0.5)?);
        let above = alpha_star(&GaussWiretapParams::new((boundary + 1e-9).sqrt(), 1.0, 0.5)?);
        c.check((below - above).abs() <= 1e-6, || {
            format!("alpha* jumps at threshold {boundary}: {below} vs {above}")
        });
    }
    Ok(c.into_report("alpha-star"))
}

/// Secret-key half-bit gap and dominance wherever the lower bound is
/// valid, and the rho* existence region against its threshold.
fn key_gap_suite(_cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut c = Checker::new();
    for &h1sq in &log_grid(20, -3.0, 3.0) {
        for &g1sq in &log_grid(20, -3.0, 3.0) {
            for &beta in &BETA_GRID {
                let p = GaussWiretapParams::new(h1sq.sqrt(), g1sq.sqrt(), beta)?;
                let threshold = h1t_squared(p.g1());
                let radicand = rho_star_radicand(p.h1(), p.g1());
                if h1sq >= threshold + 1e-12 {
                    c.check(radicand >= -1e-12, || {
                        format!("radicand {radicand} negative above threshold at h1^2={h1sq}")
                    });
                } else if h1sq <= threshold - 1e-12 {
                    c.check(radicand <= 1e-12, || {
                        format!("radicand {radicand} positive below threshold at h1^2={h1sq}")
                    });
                }

                let key = secret_key_bounds(&p);
                if let Some(lower) = key.lower {
                    let gap = key.upper - lower;
                    let secrecy = secrecy_bounds(&p);
                    let rho = rho_star(p.h1(), p.g1());
                    c.check(
                        gap <= 0.5 + 1e-9
                            && gap >= -1e-12
                            && lower >= secrecy.lower - 1e-9
                            && rho.is_ok(),
                        || {
                            format!(
                                "key bounds ({lower}, {}) vs secrecy lower {} at \
                                 h1^2={h1sq}, g1^2={g1sq}, beta={beta}",
                                key.upper, secrecy.lower
                            )
                        },
                    );
                }
            }
        }
    }
    Ok(c.into_report("key-gap"))
}

/// Conservation, feasibility, and leakage invariants of the exact binning
/// reports on a 50-configuration matrix, plus the blocklength trend on the
/// reference channel.
fn binning_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut c = Checker::new();
    let channels = [
        (1, 0, 1, 0),
        (2, 1, 1, 1),
        (1, 1, 1, 1),
        (2, 0, 1, 0),
        (2, 2, 1, 0),
        (3, 1, 2, 1),
        (1, 2, 1, 1),
        (2, 1, 2, 1),
        (1, 0, 0, 0),
        (2, 2, 2, 2),
    ];
    let shapes = [(2usize, 0u32, 0u32), (2, 1, 1), (2, 2, 1), (3, 1, 1), (3, 2, 0)];
    for &(n1, m1, n2, m2) in &channels {
        let channel = DetWiretapParams::new(n1, m1, n2, m2);
        for &(n, msg_bits, conf_bits) in &shapes {
            let rate = f64::from(msg_bits) / n as f64;
            let conf = f64::from(conf_bits) / n as f64;
            let bc = BinningConfig::new(channel, n, rate, conf, cfg.seed ^ 0xb1)?;
            let cb = generate_codebook_with_budget(&bc, cfg.budget)?;
            let report = evaluate_with_budget(&cb, cfg.budget)?;

            let total =
                report.error_prob + report.success_prob + report.covering_failure_prob;
            c.check((total - 1.0).abs() <= 1e-12, || {
                format!("conservation violated ({total}) on {channel:?}, n={n}")
            });
            let in_unit = |p: f64| (0.0..=1.0).contains(&p);
            c.check(
                in_unit(report.error_prob)
                    && in_unit(report.success_prob)
                    && in_unit(report.covering_failure_prob),
                || format!("probability outside [0,1] on {channel:?}, n={n}"),
            );
            let leak_cap = rate.min(f64::from(n2.max(m2)));
            c.check(
                report.leakage_bits_per_use >= 0.0
                    && report.leakage_bits_per_use <= leak_cap + 1e-9,
                || {
                    format!(
                        "leakage {} outside [0, {leak_cap}] on {channel:?}, n={n}",
                        report.leakage_bits_per_use
                    )
                },
            );
            if msg_bits == 0 {
                c.check(report.leakage_bits_per_use == 0.0, || {
                    format!("nonzero leakage at R=0 on {channel:?}")
                });
                c.check(report.error_prob == 0.0, || {
                    format!("nonzero decode error at R=0 on {channel:?}")
                });
            }
            if n2 == 0 && m2 == 0 {
                c.check(report.leakage_bits_per_use == 0.0, || {
                    format!("blind eavesdropper leaked on {channel:?}")
                });
            }
            if m1 == 0 || n1 == channel.q() {
                c.check(report.covering_failure_prob == 0.0, || {
                    format!("covering failure on always-feasible {channel:?}")
                });
            }
            let replay = evaluate_with_budget(&cb, cfg.budget)?;
            c.check(replay == report, || {
                format!("report not bit-identical on replay for {channel:?}, n={n}")
            });
        }
    }

    // Blocklength trend on the reference channel: mean leakage over 20
    // seeds must not grow with n and must land below 0.15 bits/use.
    let channel = DetWiretapParams::new(2, 1, 1, 1);
    let mut means = Vec::new();
    for n in [2usize, 3, 4] {
        let mut total = 0.0;
        for seed in 0..20u64 {
            let bc = BinningConfig::new(channel, n, 1.0 / n as f64, 1.0 / n as f64, seed)?;
            let cb = generate_codebook_with_budget(&bc, cfg.budget)?;
            total += evaluate_with_budget(&cb, cfg.budget)?.leakage_bits_per_use;
        }
        means.push(total / 20.0);
    }
    c.check(means[0] >= means[1] - 1e-12 && means[1] >= means[2] - 1e-12, || {
        format!("mean leakage not non-increasing in n: {means:?}")
    });
    c.check(means[2] < 0.15, || {
        format!("mean leakage {} at n=4 not below 0.15", means[2])
    });
    Ok(c.into_report("binning"))
}
