//! Exact finite probability tables over tuples of discrete variables.
//!
//! Probabilities are held as `f64`; validity requires the total mass to be
//! within 1e-12 of one. The enumeration-based oracles only ever fill these
//! tables with dyadic rationals, so their sums are exact in practice.

use crate::{Error, Result};

/// Tolerance on the total probability mass.
pub const MASS_TOLERANCE: f64 = 1e-12;

/// Joint probability mass function over a tuple of discrete variables.
///
/// The table is flat with the *first* variable fastest: the index of the
/// outcome `(v_0, v_1, ..)` is `v_0 + sizes[0] * (v_1 + sizes[1] * ..)`.
/// With all-binary variables this makes the packed bits of an outcome its
/// table index directly.
#[derive(Clone, Debug, PartialEq)]
pub struct JointPmf {
    sizes: Vec<usize>,
    probs: Vec<f64>,
}

impl JointPmf {
    pub fn new(sizes: Vec<usize>, probs: Vec<f64>) -> Result<Self> {
        let total_states: usize = sizes.iter().product();
        if sizes.iter().any(|&s| s == 0) {
            return Err(Error::InvalidPmf("alphabet sizes must be positive".into()));
        }
        if probs.len() != total_states {
            return Err(Error::InvalidPmf(format!(
                "table has {} entries but the alphabets span {} outcomes",
                probs.len(),
                total_states
            )));
        }
        if probs.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::InvalidPmf(
                "probabilities must be finite and nonnegative".into(),
            ));
        }
        let mass: f64 = probs.iter().sum();
        if (mass - 1.0).abs() > MASS_TOLERANCE {
            return Err(Error::InvalidPmf(format!(
                "total mass {mass} is not within {MASS_TOLERANCE} of 1"
            )));
        }
        Ok(JointPmf { sizes, probs })
    }

    /// Uniform distribution over the full outcome space.
    pub fn uniform(sizes: Vec<usize>) -> Result<Self> {
        let total_states: usize = sizes.iter().product();
        if sizes.iter().any(|&s| s == 0) || total_states == 0 {
            return Err(Error::InvalidPmf("alphabet sizes must be positive".into()));
        }
        let p = 1.0 / total_states as f64;
        Ok(JointPmf {
            sizes,
            probs: vec![p; total_states],
        })
    }

    /// All mass on a single outcome.
    pub fn point_mass(sizes: Vec<usize>, outcome: &[usize]) -> Result<Self> {
        if outcome.len() != sizes.len() {
            return Err(Error::InvalidPmf(
                "outcome arity does not match the variable count".into(),
            ));
        }
        let total_states: usize = sizes.iter().product();
        let mut pmf = JointPmf {
            sizes,
            probs: vec![0.0; total_states],
        };
        let idx = pmf.index_of(outcome)?;
        pmf.probs[idx] = 1.0;
        Ok(pmf)
    }

    /// Product of independent Bernoulli variables; `ps[i]` is the
    /// probability that variable `i` equals 1.
    pub fn bernoulli_product(ps: &[f64]) -> Result<Self> {
        if ps.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err(Error::InvalidPmf(
                "Bernoulli parameters must lie in [0, 1]".into(),
            ));
        }
        let n = ps.len();
        let total = 1usize << n;
        let mut probs = vec![0.0; total];
        for (z, slot) in probs.iter_mut().enumerate() {
            let mut p = 1.0;
            for (i, &pi) in ps.iter().enumerate() {
                p *= if (z >> i) & 1 == 1 { pi } else { 1.0 - pi };
            }
            *slot = p;
        }
        // Renormalize the fp product so the mass check cannot trip on
        // accumulated rounding.
        let mass: f64 = probs.iter().sum();
        for p in &mut probs {
            *p /= mass;
        }
        JointPmf::new(vec![2; n], probs)
    }

    pub fn num_vars(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn index_of(&self, outcome: &[usize]) -> Result<usize> {
        if outcome.len() != self.sizes.len() {
            return Err(Error::InvalidPmf(
                "outcome arity does not match the variable count".into(),
            ));
        }
        let mut idx = 0;
        let mut stride = 1;
        for (v, &s) in outcome.iter().zip(self.sizes.iter()) {
            if *v >= s {
                return Err(Error::InvalidPmf(format!(
                    "outcome value {v} exceeds alphabet size {s}"
                )));
            }
            idx += v * stride;
            stride *= s;
        }
        Ok(idx)
    }

    pub fn prob(&self, outcome: &[usize]) -> Result<f64> {
        Ok(self.probs[self.index_of(outcome)?])
    }

    /// Marginal over the given variables (indices must be strictly
    /// increasing). The result keeps the variables in the listed order.
    pub fn marginal(&self, keep: &[usize]) -> Result<JointPmf> {
        if keep.is_empty() {
            return Err(Error::InvalidPmf("marginal needs at least one variable".into()));
        }
        if keep.windows(2).any(|w| w[0] >= w[1]) || *keep.last().unwrap() >= self.sizes.len() {
            return Err(Error::InvalidPmf(
                "marginal variables must be strictly increasing and in range".into(),
            ));
        }
        let out_sizes: Vec<usize> = keep.iter().map(|&i| self.sizes[i]).collect();
        let out_states: usize = out_sizes.iter().product();
        let mut out = vec![0.0; out_states];

        let mut strides = vec![0usize; self.sizes.len()];
        let mut s = 1;
        for (i, &size) in self.sizes.iter().enumerate() {
            strides[i] = s;
            s *= size;
        }
        for (idx, &p) in self.probs.iter().enumerate() {
            let mut out_idx = 0;
            let mut out_stride = 1;
            for &var in keep {
                let v = (idx / strides[var]) % self.sizes[var];
                out_idx += v * out_stride;
                out_stride *= self.sizes[var];
            }
            out[out_idx] += p;
        }
        JointPmf::new(out_sizes, out)
    }

    /// Shannon entropy of the whole table, in bits.
    pub fn entropy(&self) -> f64 {
        entropy_bits(&self.probs)
    }

    /// Conditional entropy `H(target | given)`, in bits.
    pub fn cond_entropy(&self, target: &[usize], given: &[usize]) -> Result<f64> {
        let mut joint_vars: Vec<usize> = target.iter().chain(given.iter()).copied().collect();
        joint_vars.sort_unstable();
        joint_vars.dedup();
        if joint_vars.len() != target.len() + given.len() {
            return Err(Error::InvalidPmf(
                "conditional entropy needs disjoint variable groups".into(),
            ));
        }
        let h_joint = self.marginal(&joint_vars)?.entropy();
        if given.is_empty() {
            return Ok(h_joint);
        }
        let mut given_sorted = given.to_vec();
        given_sorted.sort_unstable();
        let h_given = self.marginal(&given_sorted)?.entropy();
        Ok(h_joint - h_given)
    }

    /// Mutual information `I(a; b) = H(b) - H(b | a)`, in bits. Independence
    /// that is exact in the table yields an exact zero.
    pub fn mutual_information(&self, a: &[usize], b: &[usize]) -> Result<f64> {
        let h_b = {
            let mut v = b.to_vec();
            v.sort_unstable();
            self.marginal(&v)?.entropy()
        };
        let h_b_given_a = self.cond_entropy(b, a)?;
        Ok(h_b - h_b_given_a)
    }
}

/// Shannon entropy of a probability slice, in bits. Zero entries contribute
/// nothing.
pub fn entropy_bits(probs: &[f64]) -> f64 {
    probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum()
}
