//! The rank identity max_Z H(AZ | BZ) = rank([A; B]) - rank(B) against
//! exhaustive enumeration: exact attainment at the uniform distribution,
//! dominance over sampled product distributions.
//!
//! ```bash
//! cargo run -p wiretap --example lemma1_oracle
//! ```

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wiretap::det::{exhaustive_cond_entropy, max_cond_entropy_formula};
use wiretap::gf2::Gf2Matrix;
use wiretap::pmf::JointPmf;

fn main() -> wiretap::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let cols = 10;
    let a = Gf2Matrix::from_fn(4, cols, |_, _| rng.next_u64() & 1 == 1);
    let b = Gf2Matrix::from_fn(3, cols, |_, _| rng.next_u64() & 1 == 1);

    let formula = max_cond_entropy_formula(&a, &b)?;
    println!("random pair: A is 4x{cols}, B is 3x{cols}");
    println!("rank formula:          rank([A;B]) - rank(B) = {formula} bits");

    let uniform = JointPmf::uniform(vec![2; cols])?;
    let at_uniform = exhaustive_cond_entropy(&a, &b, &uniform)?;
    println!("enumeration (uniform): H(AZ|BZ) = {at_uniform:.12} bits");
    assert!((at_uniform - formula as f64).abs() < 1e-9);

    println!();
    println!("dominance over 10 random product distributions of Z:");
    for trial in 0..10 {
        let ps: Vec<f64> = (0..cols).map(|_| rng.random::<f64>()).collect();
        let dist = JointPmf::bernoulli_product(&ps)?;
        let h = exhaustive_cond_entropy(&a, &b, &dist)?;
        println!("  trial {trial}: H(AZ|BZ) = {h:.6} <= {formula}");
        assert!(h <= formula as f64 + 1e-9);
    }

    println!();
    println!("a point mass on Z gives zero conditional entropy:");
    let point = JointPmf::point_mass(vec![2; cols], &vec![1; cols])?;
    println!("  H(AZ|BZ) = {}", exhaustive_cond_entropy(&a, &b, &point)?);
    Ok(())
}
