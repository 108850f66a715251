//! Numeric maximization of min{H(Y1|S), H(Y1|Y2)} over the input policy
//! p(x|s), the capacity expression for channels whose legitimate output is
//! a deterministic function of input and state.
//!
//! ```bash
//! cargo run -p wiretap --example semidet_search
//! ```

use wiretap::det::{det_secrecy_capacity_rank, semidet_capacity_search, DetWiretapParams, SemiDetChannel};
use wiretap::pmf::JointPmf;

fn main() -> wiretap::Result<()> {
    println!("linear instances: the search must recover the rank formula");
    for gains in [(1, 0, 0, 0), (2, 1, 1, 1), (1, 1, 1, 1), (2, 0, 1, 0)] {
        let p = DetWiretapParams::new(gains.0, gains.1, gains.2, gains.3);
        let channel = SemiDetChannel::from_linear(&p)?;
        let state = JointPmf::uniform(vec![1 << p.q()])?;
        let result = semidet_capacity_search(&channel, &state, 6, 2024)?;
        println!(
            "  gains {gains:?}  search {:.6}  rank formula {}",
            result.rate,
            det_secrecy_capacity_rank(&p)
        );
    }

    println!();
    println!("a non-linear instance: ternary input, XOR-like receiver, noisy eavesdropper");
    // y1 = (x + s) mod 3; the eavesdropper sees y1 through a symbol-erasing
    // relabeling that keeps only whether y1 equals zero.
    let mut probs = vec![0.0; 3 * 3 * 3 * 2];
    for x in 0..3 {
        for s in 0..3 {
            let y1 = (x + s) % 3;
            let y2 = usize::from(y1 == 0);
            probs[((x * 3 + s) * 3 + y1) * 2 + y2] = 1.0;
        }
    }
    let channel = SemiDetChannel::new(3, 3, 3, 2, probs)?;
    let state = JointPmf::uniform(vec![3])?;
    let result = semidet_capacity_search(&channel, &state, 12, 7)?;
    println!("  search lower estimate: {:.6} bits/use", result.rate);
    println!("  maximizing p(x|s) rows:");
    for (s, row) in result.input_dist.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|p| format!("{p:.4}")).collect();
        println!("    s={s}: [{}]", cells.join(", "));
    }
    println!("  (a search result, not a certificate: the objective is not concave)");
    Ok(())
}
