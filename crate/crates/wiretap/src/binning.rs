//! Finite-blocklength random double-binning over the linear deterministic
//! wiretap channel, with exact decoding-error and leakage accounting.
//!
//! Codewords are auxiliary sequences living in the receiver's signal space
//! (the optimal auxiliary choice for deterministic channels is the received
//! signal itself). The codebook is split into message bins and confusion
//! sub-bins; the encoder searches its bin for a codeword compatible with the
//! known state sequence. Everything downstream of the seeded codebook draw
//! is exact enumeration: no sampling noise anywhere in the reports.

use std::collections::HashMap;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::det::DetWiretapParams;
use crate::gf2::{Gf2Matrix, Gf2Solver};
use crate::pmf::JointPmf;
use crate::{Error, Result, DEFAULT_ENUM_BUDGET};

/// Largest q*n for which exact leakage evaluation is feasible.
pub const MAX_LEVEL_BITS: usize = 20;

/// Parameters of one binning experiment. Rates are in bits per channel use
/// and must be multiples of `1/block_len` so the bin counts are integers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BinningConfig {
    pub channel: DetWiretapParams,
    pub block_len: usize,
    pub rate: f64,
    pub confusion_rate: f64,
    pub seed: u64,
}

impl BinningConfig {
    pub fn new(
        channel: DetWiretapParams,
        block_len: usize,
        rate: f64,
        confusion_rate: f64,
        seed: u64,
    ) -> Result<Self> {
        if block_len == 0 {
            return Err(Error::InvalidParameter("block length must be positive".into()));
        }
        let q = channel.q() as usize;
        if q * block_len > MAX_LEVEL_BITS {
            return Err(Error::InvalidParameter(format!(
                "q * n = {} exceeds the exact-evaluation limit {MAX_LEVEL_BITS}",
                q * block_len
            )));
        }
        for (name, r) in [("rate", rate), ("confusion rate", confusion_rate)] {
            if !r.is_finite() || r < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be finite and nonnegative"
                )));
            }
            let scaled = r * block_len as f64;
            if (scaled - scaled.round()).abs() > 1e-9 {
                return Err(Error::InvalidParameter(format!(
                    "{name} {r} is not a multiple of 1/{block_len}"
                )));
            }
            if scaled.round() > 40.0 {
                return Err(Error::InvalidParameter(format!("{name} {r} is too large")));
            }
        }
        Ok(BinningConfig {
            channel,
            block_len,
            rate,
            confusion_rate,
            seed,
        })
    }

    /// Total message bits `n * R`.
    pub fn message_bits(&self) -> u32 {
        (self.rate * self.block_len as f64).round() as u32
    }

    /// Total sub-bin randomization bits `n * R'`.
    pub fn confusion_bits(&self) -> u32 {
        (self.confusion_rate * self.block_len as f64).round() as u32
    }

    pub fn num_bins(&self) -> u64 {
        1 << self.message_bits()
    }

    pub fn num_subbins(&self) -> u64 {
        1 << self.confusion_bits()
    }
}

/// A drawn double-binning codebook: one auxiliary sequence per
/// (message bin, sub-bin) cell, each symbol uniform over the span of the
/// receiver's signal space.
#[derive(Clone, Debug)]
pub struct Codebook {
    cfg: BinningConfig,
    /// Packed q*n-bit sequences, indexed `bin * num_subbins + sub`.
    words: Vec<u64>,
}

impl Codebook {
    pub fn config(&self) -> &BinningConfig {
        &self.cfg
    }

    /// The codeword at (bin, sub) as per-symbol q-bit words.
    pub fn codeword(&self, bin: u64, sub: u64) -> Vec<u64> {
        let packed = self.packed(bin, sub);
        let q = self.cfg.channel.q() as usize;
        unpack_symbols(packed, self.cfg.block_len, q)
    }

    fn packed(&self, bin: u64, sub: u64) -> u64 {
        assert!(bin < self.cfg.num_bins() && sub < self.cfg.num_subbins());
        self.words[(bin * self.cfg.num_subbins() + sub) as usize]
    }
}

fn unpack_symbols(packed: u64, n: usize, q: usize) -> Vec<u64> {
    let mask = mask_bits(q);
    (0..n).map(|i| (packed >> (i * q)) & mask).collect()
}

fn mask_bits(q: usize) -> u64 {
    if q == 0 {
        0
    } else {
        (1u64 << q) - 1
    }
}

/// Draws the codebook for `cfg` with the default enumeration budget.
pub fn generate_codebook(cfg: &BinningConfig) -> Result<Codebook> {
    generate_codebook_with_budget(cfg, DEFAULT_ENUM_BUDGET)
}

/// Draws the codebook: every symbol of every codeword is i.i.d. uniform
/// over the column space of the receiver matrix, from a ChaCha stream
/// seeded by `cfg.seed`. Identical configs give identical codebooks.
pub fn generate_codebook_with_budget(cfg: &BinningConfig, budget: u64) -> Result<Codebook> {
    let cells = u128::from(cfg.num_bins()) * u128::from(cfg.num_subbins());
    if cells > u128::from(budget) {
        return Err(Error::BudgetExceeded {
            what: "codebook table (bins x sub-bins)",
            needed: cells,
            budget,
        });
    }
    let receiver = cfg.channel.receiver_matrix();
    let solver = Gf2Solver::new(&receiver);
    let basis: Vec<u64> = solver
        .pivot_columns()
        .iter()
        .map(|&c| receiver.column_bits(c))
        .collect();
    let q = cfg.channel.q() as usize;
    let n = cfg.block_len;

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut words = Vec::with_capacity(cells as usize);
    for _ in 0..cells {
        let mut packed = 0u64;
        for i in 0..n {
            let draw = rng.next_u64();
            let mut symbol = 0u64;
            for (j, &b) in basis.iter().enumerate() {
                if (draw >> j) & 1 == 1 {
                    symbol ^= b;
                }
            }
            packed |= symbol << (i * q);
        }
        words.push(packed);
    }
    Ok(Codebook { cfg: *cfg, words })
}

/// Per-call encoder state shared between [`encode`] and [`evaluate`].
struct EncoderParts {
    input_solver: Gf2Solver,
    state_shift: Gf2Matrix,
}

impl EncoderParts {
    fn new(channel: &DetWiretapParams) -> Self {
        let q = channel.q() as usize;
        let input_matrix = crate::gf2::downshift_power(q, q - channel.n1 as usize)
            .expect("shift within range");
        let state_shift = crate::gf2::downshift_power(q, q - channel.m1 as usize)
            .expect("shift within range");
        EncoderParts {
            input_solver: Gf2Solver::new(&input_matrix),
            state_shift,
        }
    }

    /// Scans the sub-bins of `message`'s bin cyclically starting at
    /// `randomness mod num_subbins` and returns the input sequence for the
    /// first codeword whose every symbol is reachable:
    /// `D^{q-n1} x[i] = u[i] xor D^{q-m1} s[i]` must be solvable for all i.
    fn try_encode(
        &self,
        cb: &Codebook,
        message: u64,
        state_syms: &[u64],
        randomness: u64,
    ) -> Option<Vec<u64>> {
        let cfg = &cb.cfg;
        let q = cfg.channel.q() as usize;
        let subs = cfg.num_subbins();
        'subbin: for offset in 0..subs {
            let sub = (randomness + offset) % subs;
            let packed = cb.packed(message, sub);
            let mut input = Vec::with_capacity(cfg.block_len);
            for (i, &s) in state_syms.iter().enumerate() {
                let u_sym = (packed >> (i * q)) & mask_bits(q);
                let target = u_sym ^ self.state_shift.mul_bits(s);
                match self.input_solver.solve_bits(target) {
                    Some(x) => input.push(x),
                    None => continue 'subbin,
                }
            }
            return Some(input);
        }
        None
    }
}

/// Encodes `message` against the known state sequence. Returns the channel
/// input sequence (per-symbol q-bit words), or `None` on covering failure:
/// no codeword in the message's bin is compatible with the state. Absence
/// is a reported outcome, not an error.
pub fn encode(
    cb: &Codebook,
    message: u64,
    state_seq: &[u64],
    randomness: u64,
) -> Option<Vec<u64>> {
    let cfg = cb.config();
    assert!(message < cfg.num_bins(), "message index out of range");
    assert_eq!(state_seq.len(), cfg.block_len, "state sequence length");
    let q = cfg.channel.q() as usize;
    assert!(
        state_seq.iter().all(|&s| s <= mask_bits(q)),
        "state symbol exceeds q bits"
    );
    EncoderParts::new(&cfg.channel).try_encode(cb, message, state_seq, randomness)
}

/// Exact report of one binning experiment. All probabilities are exact
/// dyadic rationals accumulated over the full enumeration; the leakage is
/// `(1/n) I(W; Y2^n)` computed from the exact joint table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimReport {
    pub error_prob: f64,
    pub success_prob: f64,
    pub covering_failure_prob: f64,
    pub leakage_bits_per_use: f64,
}

/// Exact evaluation with the default enumeration budget.
pub fn evaluate(cb: &Codebook) -> Result<SimReport> {
    evaluate_with_budget(cb, DEFAULT_ENUM_BUDGET)
}

/// Enumerates every (message, randomness, state sequence) tuple with
/// uniform weights, pushes it through the deterministic channel, and
/// accumulates the exact joint distribution of (W, Y2^n) alongside the
/// decode outcomes.
///
/// The decoder maps the received sequence to the lowest bin containing it;
/// colliding codewords therefore count as errors for every losing message.
/// On covering failure the all-zero input is transmitted and the tuple's
/// mass is attributed to the covering-failure outcome, not to decode error
/// or success.
pub fn evaluate_with_budget(cb: &Codebook, budget: u64) -> Result<SimReport> {
    let cfg = cb.config();
    let channel = &cfg.channel;
    let q = channel.q() as usize;
    let n = cfg.block_len;
    let bins = cfg.num_bins();
    let subs = cfg.num_subbins();
    let states = 1u64 << (q * n);

    let tuples = u128::from(bins) * u128::from(subs) * u128::from(states);
    if tuples > u128::from(budget) {
        return Err(Error::BudgetExceeded {
            what: "binning enumeration (bins x sub-bins x state sequences)",
            needed: tuples,
            budget,
        });
    }

    let parts = EncoderParts::new(channel);
    let input_shift =
        crate::gf2::downshift_power(q, q - channel.n1 as usize).expect("shift within range");
    let state_shift_legit = &parts.state_shift;
    let eaves_input =
        crate::gf2::downshift_power(q, q - channel.n2 as usize).expect("shift within range");
    let eaves_state =
        crate::gf2::downshift_power(q, q - channel.m2 as usize).expect("shift within range");

    // Lowest bin wins on codeword collisions.
    let mut decode_map: HashMap<u64, u64> = HashMap::new();
    for bin in 0..bins {
        for sub in 0..subs {
            decode_map.entry(cb.packed(bin, sub)).or_insert(bin);
        }
    }

    let p_tuple = 1.0 / (bins as f64 * subs as f64 * states as f64);
    let mut error_prob = 0.0;
    let mut success_prob = 0.0;
    let mut covering_prob = 0.0;
    let mut joint = vec![0.0; (bins * states) as usize];

    let mut state_syms = vec![0u64; n];
    for state_packed in 0..states {
        for (i, s) in state_syms.iter_mut().enumerate() {
            *s = (state_packed >> (i * q)) & mask_bits(q);
        }
        for message in 0..bins {
            for randomness in 0..subs {
                let encoded = parts.try_encode(cb, message, &state_syms, randomness);
                let (outcome_error, y2_packed) = match encoded {
                    None => {
                        covering_prob += p_tuple;
                        // Fallback transmission: the all-zero input.
                        let mut y2 = 0u64;
                        for (i, &s) in state_syms.iter().enumerate() {
                            y2 |= eaves_state.mul_bits(s) << (i * q);
                        }
                        (None, y2)
                    }
                    Some(input) => {
                        let mut y1 = 0u64;
                        let mut y2 = 0u64;
                        for (i, (&x, &s)) in input.iter().zip(state_syms.iter()).enumerate() {
                            y1 |= (input_shift.mul_bits(x) ^ state_shift_legit.mul_bits(s))
                                << (i * q);
                            y2 |= (eaves_input.mul_bits(x) ^ eaves_state.mul_bits(s)) << (i * q);
                        }
                        let decoded = *decode_map
                            .get(&y1)
                            .expect("received sequence is a codeword");
                        (Some(decoded != message), y2)
                    }
                };
                match outcome_error {
                    Some(true) => error_prob += p_tuple,
                    Some(false) => success_prob += p_tuple,
                    None => {}
                }
                joint[(message + bins * y2_packed) as usize] += p_tuple;
            }
        }
    }

    let pmf = JointPmf::new(vec![bins as usize, states as usize], joint)?;
    let mi = pmf.mutual_information(&[0], &[1])?;
    debug_assert!(mi >= -1e-9, "leakage must be nonnegative, got {mi}");
    Ok(SimReport {
        error_prob,
        success_prob,
        covering_failure_prob: covering_prob,
        leakage_bits_per_use: mi.max(0.0) / n as f64,
    })
}

/// One probe cell: an exact report for a (rate, seed) pair.
#[derive(Clone, Copy, Debug)]
pub struct ProbeRow {
    pub rate: f64,
    pub confusion_rate: f64,
    pub seed: u64,
    pub report: SimReport,
}

/// Per-rate means over the probed seeds.
#[derive(Clone, Copy, Debug)]
pub struct ProbeSummary {
    pub rate: f64,
    pub mean_error: f64,
    pub mean_leakage: f64,
    pub mean_covering_failure: f64,
}

/// Sweeps quantized message rates `R = k/n` for `k = 0..=max_message_bits`
/// at a fixed confusion rate, evaluating every (rate, seed) cell exactly.
pub fn rate_region_probe(
    channel: &DetWiretapParams,
    block_len: usize,
    confusion_rate: f64,
    max_message_bits: u32,
    seeds: &[u64],
) -> Result<(Vec<ProbeRow>, Vec<ProbeSummary>)> {
    rate_region_probe_with_budget(
        channel,
        block_len,
        confusion_rate,
        max_message_bits,
        seeds,
        DEFAULT_ENUM_BUDGET,
    )
}

pub fn rate_region_probe_with_budget(
    channel: &DetWiretapParams,
    block_len: usize,
    confusion_rate: f64,
    max_message_bits: u32,
    seeds: &[u64],
    budget: u64,
) -> Result<(Vec<ProbeRow>, Vec<ProbeSummary>)> {
    let mut rows = Vec::new();
    let mut summaries = Vec::new();
    for k in 0..=max_message_bits {
        let rate = f64::from(k) / block_len as f64;
        let mut sums = (0.0, 0.0, 0.0);
        for &seed in seeds {
            let cfg = BinningConfig::new(*channel, block_len, rate, confusion_rate, seed)?;
            let cb = generate_codebook_with_budget(&cfg, budget)?;
            let report = evaluate_with_budget(&cb, budget)?;
            sums.0 += report.error_prob;
            sums.1 += report.leakage_bits_per_use;
            sums.2 += report.covering_failure_prob;
            rows.push(ProbeRow {
                rate,
                confusion_rate,
                seed,
                report,
            });
        }
        let count = seeds.len().max(1) as f64;
        summaries.push(ProbeSummary {
            rate,
            mean_error: sums.0 / count,
            mean_leakage: sums.1 / count,
            mean_covering_failure: sums.2 / count,
        });
    }
    Ok((rows, summaries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::solve_in_affine;
    use crate::gf2::Gf2Vector;

    fn channel(n1: u32, m1: u32, n2: u32, m2: u32) -> DetWiretapParams {
        DetWiretapParams::new(n1, m1, n2, m2)
    }

    #[test]
    fn config_validates_rate_quantization() {
        let ch = channel(2, 1, 1, 1);
        assert!(BinningConfig::new(ch, 3, 1.0 / 3.0, 1.0 / 3.0, 0).is_ok());
        assert!(BinningConfig::new(ch, 3, 0.3, 0.0, 0).is_err());
        assert!(BinningConfig::new(ch, 3, -0.5, 0.0, 0).is_err());
        assert!(BinningConfig::new(ch, 0, 0.0, 0.0, 0).is_err());
    }

    #[test]
    fn config_enforces_level_budget() {
        // q = 3, n = 7 exceeds q*n <= 20.
        assert!(BinningConfig::new(channel(3, 0, 1, 0), 7, 0.0, 0.0, 0).is_err());
        assert!(BinningConfig::new(channel(3, 0, 1, 0), 6, 0.0, 0.0, 0).is_ok());
    }

    #[test]
    fn codebook_shape_and_determinism() {
        let cfg = BinningConfig::new(channel(2, 0, 1, 0), 2, 1.0, 0.5, 42).unwrap();
        let cb = generate_codebook(&cfg).unwrap();
        assert_eq!(cfg.num_bins(), 4);
        assert_eq!(cfg.num_subbins(), 2);
        assert_eq!(cb.words.len(), 8);
        assert_eq!(cb.codeword(0, 0).len(), 2);
        let cb2 = generate_codebook(&cfg).unwrap();
        assert_eq!(cb.words, cb2.words);
        let cfg_other = BinningConfig::new(channel(2, 0, 1, 0), 2, 1.0, 0.5, 43).unwrap();
        let cb3 = generate_codebook(&cfg_other).unwrap();
        assert_ne!(cb.words, cb3.words);
    }

    #[test]
    fn zero_rates_give_single_codeword() {
        let cfg = BinningConfig::new(channel(2, 1, 1, 1), 3, 0.0, 0.0, 7).unwrap();
        let cb = generate_codebook(&cfg).unwrap();
        assert_eq!(cb.words.len(), 1);
    }

    #[test]
    fn codewords_lie_in_receiver_span() {
        let cfg = BinningConfig::new(channel(2, 1, 1, 1), 2, 1.0, 0.5, 9).unwrap();
        let cb = generate_codebook(&cfg).unwrap();
        let a = cfg.channel.receiver_matrix();
        let q = cfg.channel.q() as usize;
        for bin in 0..cfg.num_bins() {
            for sub in 0..cfg.num_subbins() {
                for sym in cb.codeword(bin, sub) {
                    let target = Gf2Vector::from_bits(q, sym);
                    assert!(
                        solve_in_affine(&target, &a).unwrap().is_some(),
                        "codeword symbol outside the receiver span"
                    );
                }
            }
        }
    }

    #[test]
    fn encode_always_feasible_without_interference() {
        // m1 = 0: the legitimate channel carries no state, every codeword
        // is reachable and the scan stops at the first sub-bin.
        let cfg = BinningConfig::new(channel(2, 0, 1, 1), 2, 0.5, 0.5, 3).unwrap();
        let cb = generate_codebook(&cfg).unwrap();
        for s0 in 0..4u64 {
            for s1 in 0..4u64 {
                let x = encode(&cb, 0, &[s0, s1], 1);
                assert!(x.is_some());
            }
        }
    }

    #[test]
    fn encode_always_feasible_at_full_input_gain() {
        let cfg = BinningConfig::new(channel(2, 2, 1, 1), 2, 0.5, 0.0, 3).unwrap();
        let cb = generate_codebook(&cfg).unwrap();
        for s0 in 0..4u64 {
            for s1 in 0..4u64 {
                assert!(encode(&cb, 1, &[s0, s1], 0).is_some());
            }
        }
    }

    #[test]
    fn encode_feasibility_matches_image_condition() {
        // Channel (n1 = 1, m1 = 2), q = 2: the input reaches the receiver
        // through D^1, whose image has a zero first coordinate, while the
        // state arrives unshifted. A codeword u is reachable under state s
        // exactly when bit 0 of (u xor s) is zero in every symbol.
        let cfg = BinningConfig::new(channel(1, 2, 1, 1), 1, 0.0, 0.0, 5).unwrap();
        let cb = generate_codebook(&cfg).unwrap();
        let u = cb.codeword(0, 0)[0];
        for s in 0..4u64 {
            let feasible = encode(&cb, 0, &[s], 0).is_some();
            assert_eq!(feasible, (u ^ s) & 1 == 0, "state {s}");
        }
    }

    #[test]
    fn encode_solution_satisfies_channel_equation() {
        let cfg = BinningConfig::new(channel(2, 1, 1, 1), 2, 0.5, 0.5, 11).unwrap();
        let cb = generate_codebook(&cfg).unwrap();
        let q = cfg.channel.q() as usize;
        let input_shift = crate::gf2::downshift_power(q, q - 2).unwrap();
        let state_shift = crate::gf2::downshift_power(q, q - 1).unwrap();
        let state = [2u64, 1u64];
        let x = encode(&cb, 1, &state, 0).expect("feasible at full input gain");
        // The received signal must be exactly some codeword in bin 1.
        let y1: Vec<u64> = x
            .iter()
            .zip(state.iter())
            .map(|(&xi, &si)| input_shift.mul_bits(xi) ^ state_shift.mul_bits(si))
            .collect();
        let found = (0..cfg.num_subbins()).any(|sub| cb.codeword(1, sub) == y1);
        assert!(found);
    }

    #[test]
    fn evaluate_zero_rate_has_zero_leakage() {
        let cfg = BinningConfig::new(channel(2, 1, 1, 1), 3, 0.0, 1.0 / 3.0, 13).unwrap();
        let cb = generate_codebook(&cfg).unwrap();
        let report = evaluate(&cb).unwrap();
        assert_eq!(report.leakage_bits_per_use, 0.0);
        assert_eq!(report.error_prob, 0.0);
    }

    #[test]
    fn evaluate_blind_eavesdropper_has_zero_leakage() {
        let cfg = BinningConfig::new(channel(2, 1, 0, 0), 2, 0.5, 0.0, 17).unwrap();
        let cb = generate_codebook(&cfg).unwrap();
        let report = evaluate(&cb).unwrap();
        assert_eq!(report.leakage_bits_per_use, 0.0);
    }

    #[test]
    fn evaluate_conservation_and_determinism() {
        let cfg = BinningConfig::new(channel(2, 1, 1, 1), 3, 1.0 / 3.0, 1.0 / 3.0, 19).unwrap();
        let cb = generate_codebook(&cfg).unwrap();
        let report = evaluate(&cb).unwrap();
        let total = report.error_prob + report.success_prob + report.covering_failure_prob;
        assert!((total - 1.0).abs() < 1e-12);
        assert_eq!(report, evaluate(&cb).unwrap());
        // n1 = q: covering can never fail.
        assert_eq!(report.covering_failure_prob, 0.0);
    }

    #[test]
    fn evaluate_aligned_interference_leaks_nothing() {
        // Channel (2,1,1,1): the eavesdropper sees D(x xor s); with the
        // encoder inverting the full-gain receiver channel the observable
        // level is masked by a fresh uniform state bit.
        for n in [2usize, 3] {
            let cfg =
                BinningConfig::new(channel(2, 1, 1, 1), n, 1.0 / n as f64, 1.0 / n as f64, 23)
                    .unwrap();
            let cb = generate_codebook(&cfg).unwrap();
            let report = evaluate(&cb).unwrap();
            assert_eq!(report.leakage_bits_per_use, 0.0, "n = {n}");
        }
    }

    #[test]
    fn evaluate_exposed_codeword_leaks_at_most_rate() {
        // Eavesdropper sees the receiver's signal exactly: leakage is
        // bounded by the message rate.
        let cfg = BinningConfig::new(channel(1, 0, 1, 0), 2, 0.5, 0.0, 29).unwrap();
        let cb = generate_codebook(&cfg).unwrap();
        let report = evaluate(&cb).unwrap();
        assert!(report.leakage_bits_per_use <= cfg.rate + 1e-12);
        assert!(report.leakage_bits_per_use >= 0.0);
        let total = report.error_prob + report.success_prob + report.covering_failure_prob;
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn evaluate_budget_refusal_names_dimension() {
        let cfg = BinningConfig::new(channel(2, 1, 1, 1), 3, 1.0 / 3.0, 0.0, 1).unwrap();
        let cb = generate_codebook(&cfg).unwrap();
        let err = evaluate_with_budget(&cb, 16).unwrap_err();
        match err {
            Error::BudgetExceeded { what, .. } => assert!(what.contains("binning")),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn probe_shapes_and_zero_rate_row() {
        let ch = channel(2, 0, 1, 1);
        let (rows, summaries) = rate_region_probe(&ch, 2, 0.5, 2, &[1, 2, 3]).unwrap();
        assert_eq!(rows.len(), 9);
        assert_eq!(summaries.len(), 3);
        assert_eq!(summaries[0].rate, 0.0);
        assert_eq!(summaries[0].mean_leakage, 0.0);
        assert_eq!(summaries[0].mean_error, 0.0);
        // m1 = 0: covering never fails anywhere in the probe.
        assert!(rows.iter().all(|r| r.report.covering_failure_prob == 0.0));
    }

    #[test]
    fn probe_error_grows_beyond_capacity() {
        // n1 = 1: pushing R to 2 bits/use must overwhelm the decoder.
        let ch = channel(1, 0, 1, 0);
        let seeds: Vec<u64> = (0..8).collect();
        let (_, summaries) = rate_region_probe(&ch, 2, 0.0, 4, &seeds).unwrap();
        let low_rate = summaries[1].mean_error;
        let high_rate = summaries.last().unwrap().mean_error;
        assert!(
            high_rate > low_rate,
            "error should grow with rate: {low_rate} vs {high_rate}"
        );
        assert!(high_rate > 0.5);
    }
}
