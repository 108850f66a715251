//! Half-bit secrecy and secret-key bounds for the degraded Gaussian
//! wiretap channel, plus the maximizing dirty-paper coefficient.
//!
//! ```bash
//! cargo run -p wiretap --example gauss_bounds
//! ```

use wiretap::gauss::{
    alpha_star, alpha_star_thresholds, costa_capacity, costa_suboptimal_rate, rho_star,
    secrecy_bounds, secrecy_rate_achievable, secret_key_bounds, GaussWiretapParams,
};

fn main() -> wiretap::Result<()> {
    println!("Costa's dirty-paper channel, U = hX + gS suboptimal rate:");
    for (h, g) in [(1.0, 1.0), (3.0, 0.5), (0.4, 2.0)] {
        let cap = costa_capacity(h);
        let rate = costa_suboptimal_rate(h, g)?;
        println!(
            "  h={h:<4} g={g:<4} capacity={cap:.6}  rate={rate:.6}  gap={:.6}",
            cap - rate
        );
    }

    println!();
    let p = GaussWiretapParams::new(1.0, 1.0, 0.5)?;
    let s = secrecy_bounds(&p);
    println!("degraded wiretap channel at h1=1, g1=1, beta=0.5:");
    println!("  secrecy lower {:.6}  upper {:.6}  gap {:.6}", s.lower, s.upper, s.gap);

    let k = secret_key_bounds(&p);
    println!(
        "  secret-key lower {:.6}  upper {:.6}  gap {:.6}",
        k.lower.unwrap(),
        k.upper,
        k.gap().unwrap()
    );
    println!("  rho* = {:.6}", rho_star(p.h1(), p.g1())?);

    println!();
    println!("the maximizing auxiliary coefficient across the SNR range:");
    let (low, high) = alpha_star_thresholds(&p);
    println!("  thresholds h1L^2 = {low:.6}, h1H^2 = {high:.6}");
    for h1_sq in [0.1, 0.3, 0.7, 1.2, 1.6, 4.0] {
        let p = GaussWiretapParams::new(f64::sqrt(h1_sq), 1.0, 0.5)?;
        let a = alpha_star(&p);
        let at_star = secrecy_rate_achievable(&p, a)?;
        let at_one = secrecy_rate_achievable(&p, 1.0)?;
        let upper = secrecy_bounds(&p).upper;
        println!(
            "  h1^2={h1_sq:<4} alpha*={a:.6}  rate(alpha*)={at_star:.6}  \
             rate(1)={at_one:.6}  upper={upper:.6}"
        );
    }
    println!("  below h1L^2 the rate at alpha* meets the upper bound exactly;");
    println!("  from h1H^2 on, alpha* = 1 and the deterministic-model choice is optimal.");
    Ok(())
}
