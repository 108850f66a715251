//! Capacities of linear deterministic dirty-paper and wiretap channels.
//!
//! The channel is noise-free over GF(2): length-q bit vectors pass through
//! powers of the down-shift matrix, so integer gains play the role of SNRs.
//! Secrecy capacity is computed two independent ways, from the explicit
//! piecewise formula and from a rank expression, and both are certified
//! against exhaustive entropy enumeration at small dimensions.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gf2::{downshift_power, hstack, vstack, Gf2Matrix, Gf2Vector};
use crate::pmf::{entropy_bits, JointPmf};
use crate::{Error, Result, DEFAULT_ENUM_BUDGET};

/// Integer channel gains of one linear deterministic wiretap instance.
///
/// `n1`, `m1` drive the legitimate receiver's view of the input and the
/// interference; `n2`, `m2` the eavesdropper's. The working dimension is
/// `q = max{n1, m1, n2, m2}`; all-zero gains give a trivial channel with
/// zero capacity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DetWiretapParams {
    pub n1: u32,
    pub m1: u32,
    pub n2: u32,
    pub m2: u32,
}

impl DetWiretapParams {
    pub fn new(n1: u32, m1: u32, n2: u32, m2: u32) -> Self {
        DetWiretapParams { n1, m1, n2, m2 }
    }

    /// Working dimension: the largest of the four gains.
    pub fn q(&self) -> u32 {
        self.n1.max(self.m1).max(self.n2).max(self.m2)
    }

    /// The legitimate receiver's system matrix `A = [D^{q-n1} D^{q-m1}]`,
    /// mapping the stacked (input, state) vector to the received signal.
    pub fn receiver_matrix(&self) -> Gf2Matrix {
        let q = self.q() as usize;
        let left = downshift_power(q, q - self.n1 as usize).expect("shift within range");
        let right = downshift_power(q, q - self.m1 as usize).expect("shift within range");
        hstack(&left, &right).expect("blocks share the row count")
    }

    /// The eavesdropper's system matrix `B = [D^{q-n2} D^{q-m2}]`.
    pub fn eavesdropper_matrix(&self) -> Gf2Matrix {
        let q = self.q() as usize;
        let left = downshift_power(q, q - self.n2 as usize).expect("shift within range");
        let right = downshift_power(q, q - self.m2 as usize).expect("shift within range");
        hstack(&left, &right).expect("blocks share the row count")
    }
}

/// Which branch of the explicit secrecy-capacity formula a parameter tuple
/// falls into. The names compare each gain pair: whether the input gain
/// exceeds the interference gain on the receiver and eavesdropper side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CapacityCase {
    /// One side above, the other at or below: no redundant rows.
    Mixed,
    /// Both interference-dominated, unequal gain differences.
    BothBelow,
    /// Both input-dominated, unequal gain differences.
    BothAbove,
    /// Equal gain differences: the eavesdropper sees a shifted copy.
    EqualDifferences,
}

impl std::fmt::Display for CapacityCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CapacityCase::Mixed => "mixed",
            CapacityCase::BothBelow => "both-below",
            CapacityCase::BothAbove => "both-above",
            CapacityCase::EqualDifferences => "equal-differences",
        };
        f.write_str(s)
    }
}

pub fn capacity_case(p: &DetWiretapParams) -> CapacityCase {
    let (n1, m1, n2, m2) = (p.n1 as i64, p.m1 as i64, p.n2 as i64, p.m2 as i64);
    if n1 - m1 == n2 - m2 {
        CapacityCase::EqualDifferences
    } else if n1 > m1 && n2 > m2 {
        CapacityCase::BothAbove
    } else if n1 <= m1 && n2 <= m2 {
        CapacityCase::BothBelow
    } else {
        CapacityCase::Mixed
    }
}

/// Capacity of the deterministic dirty-paper channel (no eavesdropper):
/// with the interference known at the transmitter, the full `n` input
/// levels get through regardless of the interference gain.
pub fn det_dpc_capacity(input_gain: u32, _interference_gain: u32) -> u32 {
    input_gain
}

/// Secrecy capacity from the explicit three-branch formula.
pub fn det_secrecy_capacity_cases(p: &DetWiretapParams) -> u32 {
    let (n1, m1, n2, m2) = (p.n1 as i64, p.m1 as i64, p.n2 as i64, p.m2 as i64);
    if n1 - m1 == n2 - m2 {
        (n1 - n2).max(0) as u32
    } else if n1 > m1 && n2 > m2 {
        m1.max(n1 - n2 + m2) as u32
    } else {
        p.n1
    }
}

/// Secrecy capacity from the rank expression
/// `min{n1, rank([A; B]) - rank(B)}`, evaluated by elimination on the
/// stacked system matrices. Independent route to the same value as
/// [`det_secrecy_capacity_cases`].
pub fn det_secrecy_capacity_rank(p: &DetWiretapParams) -> u32 {
    let a = p.receiver_matrix();
    let b = p.eavesdropper_matrix();
    let g = vstack(&a, &b).expect("A and B share the column count");
    let spread = (g.rank() - b.rank()) as u32;
    p.n1.min(spread)
}

/// Secret-key capacity `max H(Y1|Y2) = rank([A; B]) - rank(B)`. Unlike the
/// secrecy capacity there is no `min` with `n1`, because the key may depend
/// on the state sequence; the result always dominates
/// [`det_secrecy_capacity_rank`].
pub fn det_secret_key_capacity(p: &DetWiretapParams) -> u32 {
    let a = p.receiver_matrix();
    let b = p.eavesdropper_matrix();
    let g = vstack(&a, &b).expect("A and B share the column count");
    (g.rank() - b.rank()) as u32
}

/// The maximum of `H(AZ|BZ)` over all distributions of the binary vector
/// `Z`, which equals `rank([A; B]) - rank(B)` and is attained by the
/// uniform distribution.
pub fn max_cond_entropy_formula(a: &Gf2Matrix, b: &Gf2Matrix) -> Result<usize> {
    if a.cols() != b.cols() {
        return Err(Error::ShapeMismatch(format!(
            "A has {} columns, B has {}",
            a.cols(),
            b.cols()
        )));
    }
    let g = vstack(a, b)?;
    Ok(g.rank() - b.rank())
}

/// Exhaustive conditional entropy `H(AZ | BZ)` in bits, computed by
/// enumerating every value of `Z` under `dist` and accumulating the exact
/// joint table of `(AZ, BZ)`. This is the independent oracle for
/// [`max_cond_entropy_formula`]; it shares no code with the rank route.
pub fn exhaustive_cond_entropy(a: &Gf2Matrix, b: &Gf2Matrix, dist: &JointPmf) -> Result<f64> {
    exhaustive_cond_entropy_with_budget(a, b, dist, DEFAULT_ENUM_BUDGET)
}

/// [`exhaustive_cond_entropy`] with an explicit enumeration budget.
pub fn exhaustive_cond_entropy_with_budget(
    a: &Gf2Matrix,
    b: &Gf2Matrix,
    dist: &JointPmf,
    budget: u64,
) -> Result<f64> {
    if a.cols() != b.cols() {
        return Err(Error::ShapeMismatch(format!(
            "A has {} columns, B has {}",
            a.cols(),
            b.cols()
        )));
    }
    let cols = a.cols();
    if dist.num_vars() != cols || dist.sizes().iter().any(|&s| s != 2) {
        return Err(Error::InvalidPmf(format!(
            "distribution must cover {cols} binary variables"
        )));
    }
    let needed: u128 = 1u128.checked_shl(cols as u32).unwrap_or(u128::MAX);
    if needed > u128::from(budget) {
        return Err(Error::BudgetExceeded {
            what: "conditional-entropy enumeration",
            needed,
            budget,
        });
    }
    let states = 1u64 << cols;

    // dist is little-endian over binary variables, so the packed bits of z
    // are exactly its table index.
    if a.rows() <= 64 && b.rows() <= 64 {
        let mut joint: BTreeMap<(u64, u64), f64> = BTreeMap::new();
        for z in 0..states {
            let p = dist.probs()[z as usize];
            if p == 0.0 {
                continue;
            }
            *joint.entry((a.mul_bits(z), b.mul_bits(z))).or_insert(0.0) += p;
        }
        Ok(cond_entropy_of_joint(&joint))
    } else {
        let mut joint: BTreeMap<(Vec<u64>, Vec<u64>), f64> = BTreeMap::new();
        for z in 0..states {
            let p = dist.probs()[z as usize];
            if p == 0.0 {
                continue;
            }
            let v = Gf2Vector::from_bits(cols, z);
            let key = (a.mul_vec(&v).into_words(), b.mul_vec(&v).into_words());
            *joint.entry(key).or_insert(0.0) += p;
        }
        Ok(cond_entropy_of_joint(&joint))
    }
}

fn cond_entropy_of_joint<K: Ord + Clone>(joint: &BTreeMap<(K, K), f64>) -> f64 {
    let joint_probs: Vec<f64> = joint.values().copied().collect();
    let mut b_marginal: BTreeMap<K, f64> = BTreeMap::new();
    for ((_, bk), p) in joint {
        *b_marginal.entry(bk.clone()).or_insert(0.0) += *p;
    }
    let b_probs: Vec<f64> = b_marginal.values().copied().collect();
    entropy_bits(&joint_probs) - entropy_bits(&b_probs)
}

/// Largest alphabet the semi-deterministic search accepts per variable.
pub const MAX_SEARCH_ALPHABET: usize = 8;

/// A discrete memoryless wiretap channel `p(y1, y2 | x, s)` with the
/// legitimate receiver's output a deterministic function of input and state.
#[derive(Clone, Debug)]
pub struct SemiDetChannel {
    input_size: usize,
    state_size: usize,
    legit_size: usize,
    eaves_size: usize,
    /// `p(y1, y2 | x, s)` indexed `((x * |S| + s) * |Y1| + y1) * |Y2| + y2`.
    probs: Vec<f64>,
}

impl SemiDetChannel {
    pub fn new(
        input_size: usize,
        state_size: usize,
        legit_size: usize,
        eaves_size: usize,
        probs: Vec<f64>,
    ) -> Result<Self> {
        for (name, size) in [
            ("input", input_size),
            ("state", state_size),
            ("receiver output", legit_size),
            ("eavesdropper output", eaves_size),
        ] {
            if size == 0 {
                return Err(Error::ModelError(format!("{name} alphabet is empty")));
            }
            if size > MAX_SEARCH_ALPHABET {
                return Err(Error::AlphabetTooLarge(format!(
                    "{name} alphabet has {size} symbols, limit is {MAX_SEARCH_ALPHABET}"
                )));
            }
        }
        let expected = input_size * state_size * legit_size * eaves_size;
        if probs.len() != expected {
            return Err(Error::ModelError(format!(
                "transition table has {} entries, expected {expected}",
                probs.len()
            )));
        }
        if probs.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::ModelError(
                "transition probabilities must be finite and nonnegative".into(),
            ));
        }
        let ch = SemiDetChannel {
            input_size,
            state_size,
            legit_size,
            eaves_size,
            probs,
        };
        for x in 0..input_size {
            for s in 0..state_size {
                let mass: f64 = (0..legit_size)
                    .flat_map(|y1| (0..eaves_size).map(move |y2| (y1, y2)))
                    .map(|(y1, y2)| ch.prob(x, s, y1, y2))
                    .sum();
                if (mass - 1.0).abs() > 1e-9 {
                    return Err(Error::ModelError(format!(
                        "row (x={x}, s={s}) has mass {mass}, expected 1"
                    )));
                }
            }
        }
        Ok(ch)
    }

    /// Channel where both outputs are deterministic functions of (x, s).
    pub fn from_deterministic(
        input_size: usize,
        state_size: usize,
        legit_size: usize,
        eaves_size: usize,
        f: impl Fn(usize, usize) -> (usize, usize),
    ) -> Result<Self> {
        let mut probs = vec![0.0; input_size * state_size * legit_size * eaves_size];
        for x in 0..input_size {
            for s in 0..state_size {
                let (y1, y2) = f(x, s);
                assert!(y1 < legit_size && y2 < eaves_size, "output out of range");
                probs[((x * state_size + s) * legit_size + y1) * eaves_size + y2] = 1.0;
            }
        }
        SemiDetChannel::new(input_size, state_size, legit_size, eaves_size, probs)
    }

    /// The linear deterministic wiretap channel as a finite-alphabet channel
    /// over q-bit symbols. Requires `q <= 3` so the alphabets fit the search
    /// budget.
    pub fn from_linear(p: &DetWiretapParams) -> Result<Self> {
        let q = p.q() as usize;
        if q > 3 {
            return Err(Error::AlphabetTooLarge(format!(
                "q = {q} gives 2^{q} symbols per variable, limit is {MAX_SEARCH_ALPHABET}"
            )));
        }
        let a = p.receiver_matrix();
        let b = p.eavesdropper_matrix();
        let size = 1usize << q;
        SemiDetChannel::from_deterministic(size, size, size, size, move |x, s| {
            let z = (x as u64) | ((s as u64) << q);
            (a.mul_bits(z) as usize, b.mul_bits(z) as usize)
        })
    }

    fn prob(&self, x: usize, s: usize, y1: usize, y2: usize) -> f64 {
        self.probs[((x * self.state_size + s) * self.legit_size + y1) * self.eaves_size + y2]
    }

    pub fn input_size(&self) -> usize {
        self.input_size
    }

    pub fn state_size(&self) -> usize {
        self.state_size
    }

    /// Checks that y1 carries no channel noise: every (x, s) row must put
    /// all of its mass on a single y1 value.
    fn verify_deterministic_legit(&self) -> Result<()> {
        for x in 0..self.input_size {
            for s in 0..self.state_size {
                let supported = (0..self.legit_size)
                    .filter(|&y1| {
                        (0..self.eaves_size).map(|y2| self.prob(x, s, y1, y2)).sum::<f64>() > 1e-9
                    })
                    .count();
                if supported != 1 {
                    return Err(Error::ModelError(format!(
                        "y1 is not a deterministic function of (x, s): row (x={x}, s={s}) \
                         supports {supported} values"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Outcome of the numeric capacity search. The rate is the best value of
/// `min{H(Y1|S), H(Y1|Y2)}` found over the restarts: a lower estimate from
/// search, not a certificate of global optimality.
#[derive(Clone, Debug)]
pub struct SemiDetSearchResult {
    pub rate: f64,
    /// Maximizing conditional pmf, indexed `[s][x]`.
    pub input_dist: Vec<Vec<f64>>,
}

/// Numeric maximization of `min{H(Y1|S), H(Y1|Y2)}` over the input policy
/// `p(x|s)` by multi-restart coordinate ascent over the state rows. Restart
/// 0 starts from the uniform policy (optimal on linear instances); later
/// restarts start from seeded random points with per-restart derived
/// streams.
pub fn semidet_capacity_search(
    channel: &SemiDetChannel,
    state_dist: &JointPmf,
    restarts: usize,
    seed: u64,
) -> Result<SemiDetSearchResult> {
    if state_dist.num_vars() != 1 || state_dist.sizes()[0] != channel.state_size {
        return Err(Error::InvalidPmf(format!(
            "state distribution must cover one variable with {} symbols",
            channel.state_size
        )));
    }
    channel.verify_deterministic_legit()?;

    let nx = channel.input_size;
    let ns = channel.state_size;
    let ny1 = channel.legit_size;
    let ny2 = channel.eaves_size;
    let ps = state_dist.probs();

    // p(y1 | x, s), summing the eavesdropper output away once.
    let mut y1_given: Vec<f64> = vec![0.0; nx * ns * ny1];
    for x in 0..nx {
        for s in 0..ns {
            for y1 in 0..ny1 {
                let m: f64 = (0..ny2).map(|y2| channel.prob(x, s, y1, y2)).sum();
                y1_given[(x * ns + s) * ny1 + y1] = m;
            }
        }
    }

    let objective = |rows: &[Vec<f64>]| -> f64 {
        let mut h_y1_given_s = 0.0;
        let mut joint = vec![0.0; ny1 * ny2];
        for s in 0..ns {
            let mut y1_dist = vec![0.0; ny1];
            for x in 0..nx {
                let w = rows[s][x];
                if w == 0.0 {
                    continue;
                }
                for y1 in 0..ny1 {
                    y1_dist[y1] += w * y1_given[(x * ns + s) * ny1 + y1];
                    for y2 in 0..ny2 {
                        joint[y1 * ny2 + y2] += ps[s] * w * channel.prob(x, s, y1, y2);
                    }
                }
            }
            h_y1_given_s += ps[s] * entropy_bits(&y1_dist);
        }
        let mut y2_marginal = vec![0.0; ny2];
        for y1 in 0..ny1 {
            for y2 in 0..ny2 {
                y2_marginal[y2] += joint[y1 * ny2 + y2];
            }
        }
        let h_y1_given_y2 = entropy_bits(&joint) - entropy_bits(&y2_marginal);
        h_y1_given_s.min(h_y1_given_y2)
    };

    const MAX_SWEEPS: usize = 80;
    const MIN_STEP: f64 = 1e-7;
    const IMPROVE_TOL: f64 = 1e-12;

    let uniform_row = vec![1.0 / nx as f64; nx];
    let mut best_rate = f64::NEG_INFINITY;
    let mut best_rows: Vec<Vec<f64>> = vec![uniform_row.clone(); ns];

    for restart in 0..=restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(restart as u64);

        let mut rows: Vec<Vec<f64>> = if restart == 0 {
            vec![uniform_row.clone(); ns]
        } else {
            (0..ns).map(|_| random_simplex_point(&mut rng, nx)).collect()
        };
        let mut current = objective(&rows);

        for _ in 0..MAX_SWEEPS {
            let mut improved = false;
            for s in 0..ns {
                // Candidate move targets: the vertices, the uniform point,
                // and a few random simplex points. Convex combinations keep
                // the row feasible without projection.
                let mut targets: Vec<Vec<f64>> = (0..nx)
                    .map(|x| {
                        let mut e = vec![0.0; nx];
                        e[x] = 1.0;
                        e
                    })
                    .collect();
                targets.push(uniform_row.clone());
                for _ in 0..3 {
                    targets.push(random_simplex_point(&mut rng, nx));
                }
                for target in &targets {
                    let mut step = 1.0;
                    while step > MIN_STEP {
                        let saved = rows[s].clone();
                        for x in 0..nx {
                            rows[s][x] = (1.0 - step) * saved[x] + step * target[x];
                        }
                        let value = objective(&rows);
                        if value > current + IMPROVE_TOL {
                            current = value;
                            improved = true;
                            break;
                        }
                        rows[s] = saved;
                        step *= 0.5;
                    }
                }
            }
            if !improved {
                break;
            }
        }

        if current > best_rate {
            best_rate = current;
            best_rows = rows;
        }
    }

    Ok(SemiDetSearchResult {
        rate: best_rate,
        input_dist: best_rows,
    })
}

fn random_simplex_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    // Normalized exponentials give a Dirichlet(1, .., 1) sample.
    let mut v: Vec<f64> = (0..n)
        .map(|_| -(1.0 - rng.random::<f64>()).ln().max(1e-12))
        .collect();
    let total: f64 = v.iter().sum();
    for x in &mut v {
        *x /= total;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n1: u32, m1: u32, n2: u32, m2: u32) -> DetWiretapParams {
        DetWiretapParams::new(n1, m1, n2, m2)
    }

    #[test]
    fn dpc_capacity_is_input_gain() {
        assert_eq!(det_dpc_capacity(0, 3), 0);
        assert_eq!(det_dpc_capacity(3, 0), 3);
        assert_eq!(det_dpc_capacity(2, 5), 2);
    }

    #[test]
    fn case_formula_examples() {
        assert_eq!(det_secrecy_capacity_cases(&params(2, 3, 1, 1)), 2);
        assert_eq!(det_secrecy_capacity_cases(&params(4, 1, 2, 1)), 3);
        assert_eq!(det_secrecy_capacity_cases(&params(3, 2, 2, 1)), 1);
        assert_eq!(det_secrecy_capacity_cases(&params(2, 2, 3, 3)), 0);
    }

    #[test]
    fn rank_formula_examples() {
        assert_eq!(det_secrecy_capacity_rank(&params(4, 1, 2, 1)), 3);
        assert_eq!(det_secrecy_capacity_rank(&params(3, 2, 2, 1)), 1);
        assert_eq!(det_secrecy_capacity_rank(&params(0, 4, 3, 2)), 0);
    }

    #[test]
    fn case_labels() {
        assert_eq!(capacity_case(&params(4, 1, 2, 1)), CapacityCase::BothAbove);
        assert_eq!(capacity_case(&params(3, 2, 2, 1)), CapacityCase::EqualDifferences);
        assert_eq!(capacity_case(&params(2, 3, 1, 1)), CapacityCase::BothBelow);
        assert_eq!(capacity_case(&params(2, 3, 2, 1)), CapacityCase::Mixed);
    }

    #[test]
    fn formulas_agree_on_small_grid() {
        for n1 in 0..4 {
            for m1 in 0..4 {
                for n2 in 0..4 {
                    for m2 in 0..4 {
                        let p = params(n1, m1, n2, m2);
                        assert_eq!(
                            det_secrecy_capacity_cases(&p),
                            det_secrecy_capacity_rank(&p),
                            "disagreement at {p:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn secret_key_examples() {
        assert_eq!(det_secret_key_capacity(&params(4, 1, 2, 1)), 3);
        assert_eq!(det_secret_key_capacity(&params(1, 4, 1, 1)), 4);
        assert_eq!(det_secret_key_capacity(&params(3, 3, 3, 3)), 0);
    }

    #[test]
    fn key_capacity_dominates_secrecy_capacity() {
        for n1 in 0..4 {
            for m1 in 0..4 {
                for n2 in 0..4 {
                    for m2 in 0..4 {
                        let p = params(n1, m1, n2, m2);
                        assert!(det_secret_key_capacity(&p) >= det_secrecy_capacity_cases(&p));
                    }
                }
            }
        }
    }

    #[test]
    fn cond_entropy_formula_trivial_cases() {
        let i3 = Gf2Matrix::identity(3);
        assert_eq!(max_cond_entropy_formula(&i3, &i3).unwrap(), 0);
        let z = Gf2Matrix::zeros(3, 3);
        assert_eq!(max_cond_entropy_formula(&i3, &z).unwrap(), 3);
        let i2 = Gf2Matrix::identity(2);
        assert!(max_cond_entropy_formula(&i3, &i2).is_err());
    }

    #[test]
    fn exhaustive_entropy_point_mass_is_zero() {
        let a = Gf2Matrix::identity(3);
        let b = Gf2Matrix::zeros(2, 3);
        let dist = JointPmf::point_mass(vec![2, 2, 2], &[1, 0, 1]).unwrap();
        assert_eq!(exhaustive_cond_entropy(&a, &b, &dist).unwrap(), 0.0);
    }

    #[test]
    fn exhaustive_entropy_equal_matrices_is_zero() {
        let a = downshift_power(3, 1).unwrap();
        let dist = JointPmf::uniform(vec![2, 2, 2]).unwrap();
        let h = exhaustive_cond_entropy(&a, &a, &dist).unwrap();
        assert!(h.abs() < 1e-12);
    }

    #[test]
    fn exhaustive_entropy_of_downshift_image() {
        // A = D^1 at q = 2 against a blind conditioner: one bit survives.
        let a = downshift_power(2, 1).unwrap();
        let b = Gf2Matrix::zeros(2, 2);
        let dist = JointPmf::uniform(vec![2, 2]).unwrap();
        let h = exhaustive_cond_entropy(&a, &b, &dist).unwrap();
        assert!((h - 1.0).abs() < 1e-12);
        assert_eq!(max_cond_entropy_formula(&a, &b).unwrap(), 1);
    }

    #[test]
    fn exhaustive_entropy_matches_formula_at_uniform() {
        use rand::RngCore;
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..20 {
            let cols = (rng.next_u64() % 6 + 1) as usize;
            let a = Gf2Matrix::from_fn(
                (rng.next_u64() % 4 + 1) as usize,
                cols,
                |_, _| rng.next_u64() & 1 == 1,
            );
            let b = Gf2Matrix::from_fn(
                (rng.next_u64() % 4 + 1) as usize,
                cols,
                |_, _| rng.next_u64() & 1 == 1,
            );
            let dist = JointPmf::uniform(vec![2; cols]).unwrap();
            let exact = exhaustive_cond_entropy(&a, &b, &dist).unwrap();
            let formula = max_cond_entropy_formula(&a, &b).unwrap() as f64;
            assert!(
                (exact - formula).abs() < 1e-9,
                "oracle {exact} vs formula {formula}"
            );
        }
    }

    #[test]
    fn exhaustive_entropy_budget_refusal() {
        let a = Gf2Matrix::zeros(1, 10);
        let b = Gf2Matrix::zeros(1, 10);
        let dist = JointPmf::uniform(vec![2; 10]).unwrap();
        let err = exhaustive_cond_entropy_with_budget(&a, &b, &dist, 512).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn search_recovers_linear_capacity_at_q1() {
        let p = params(1, 0, 0, 0);
        let channel = SemiDetChannel::from_linear(&p).unwrap();
        let state = JointPmf::uniform(vec![2]).unwrap();
        let result = semidet_capacity_search(&channel, &state, 4, 7).unwrap();
        assert!((result.rate - 1.0).abs() < 1e-9, "rate {}", result.rate);
        assert_eq!(det_secrecy_capacity_rank(&p), 1);
    }

    #[test]
    fn search_constant_legit_output_gives_zero() {
        let channel =
            SemiDetChannel::from_deterministic(2, 2, 1, 2, |x, s| (0, (x ^ s) & 1)).unwrap();
        let state = JointPmf::uniform(vec![2]).unwrap();
        let result = semidet_capacity_search(&channel, &state, 2, 3).unwrap();
        assert!(result.rate.abs() < 1e-9);
    }

    #[test]
    fn search_reduces_to_no_side_information_with_constant_state() {
        // Single state symbol and an eavesdropper that sees pure noise:
        // the value is max over p(x) of H(Y1), reached at the uniform input.
        let probs = vec![
            // x = 0, s = 0: y1 = 0, y2 uniform
            0.5, 0.5, 0.0, 0.0, // x = 1, s = 0: y1 = 1, y2 uniform
            0.0, 0.0, 0.5, 0.5,
        ];
        let channel = SemiDetChannel::new(2, 1, 2, 2, probs).unwrap();
        let state = JointPmf::uniform(vec![1]).unwrap();
        let result = semidet_capacity_search(&channel, &state, 2, 5).unwrap();
        assert!((result.rate - 1.0).abs() < 1e-9);
    }

    #[test]
    fn search_rejects_noisy_legit_output() {
        // y1 is a coin flip regardless of (x, s).
        let probs = vec![0.25, 0.25, 0.25, 0.25];
        let channel = SemiDetChannel::new(1, 1, 2, 2, probs).unwrap();
        let state = JointPmf::uniform(vec![1]).unwrap();
        let err = semidet_capacity_search(&channel, &state, 1, 1).unwrap_err();
        assert!(matches!(err, Error::ModelError(_)));
    }

    #[test]
    fn search_rejects_oversized_alphabets() {
        let err = SemiDetChannel::from_linear(&params(4, 0, 0, 0)).unwrap_err();
        assert!(matches!(err, Error::AlphabetTooLarge(_)));
    }

    #[test]
    fn search_rate_never_exceeds_known_capacity_on_linear_instances() {
        for (n1, m1, n2, m2) in [(2, 1, 1, 1), (1, 1, 1, 1), (2, 0, 1, 0)] {
            let p = params(n1, m1, n2, m2);
            let channel = SemiDetChannel::from_linear(&p).unwrap();
            let q = p.q() as usize;
            let state = JointPmf::uniform(vec![1 << q]).unwrap();
            let result = semidet_capacity_search(&channel, &state, 3, 11).unwrap();
            let cap = det_secrecy_capacity_rank(&p) as f64;
            assert!(
                result.rate <= cap + 1e-9,
                "search {} above capacity {cap} at {p:?}",
                result.rate
            );
            // The uniform restart must already attain the capacity here.
            assert!(
                result.rate >= cap - 1e-9,
                "search {} below capacity {cap} at {p:?}",
                result.rate
            );
        }
    }
}
