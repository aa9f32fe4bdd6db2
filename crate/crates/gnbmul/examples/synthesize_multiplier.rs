//! Synthesize the odd-type decomposition multiplier for GF(2^6) and show
//! how the shared terms assemble each output bit.
//!
//! ```bash
//! cargo run --example synthesize_multiplier
//! ```

use gnbmul::gnb::build_params;
use gnbmul::matrix::MultMatrix;
use gnbmul::synth::synth_odd_gnb;

fn main() {
    let params = build_params(6, 3).unwrap();
    let m0 = MultMatrix::from_params(&params);
    let plan = synth_odd_gnb(&params, &m0).unwrap();
    let (k, t, cn) = (params.k(), params.t(), m0.count_ones());

    if let Some(w) = plan.warning() {
        println!("note: {w}");
    }

    // The shared anti-diagonal sum: omega = mu_03 + mu_14 + mu_25.
    let omega: Vec<String> = plan
        .omega_pairs()
        .iter()
        .map(|(i, j)| format!("mu_{i}{j}"))
        .collect();
    println!("omega = {}", omega.join(" + "));

    // Each bit = one diagonal product + omega + its correction set. Where a
    // bit's matrix has a 0 on the anti-diagonal, the same mu appears again
    // to cancel omega's surplus over GF(2).
    for l in 0..k {
        let d = (l + k - 1) % k;
        let corr: Vec<String> = plan
            .corrections(l)
            .unwrap()
            .iter()
            .map(|(i, j)| format!("mu_{i}{j}"))
            .collect();
        println!("c_{l} = a{d}*b{d} + omega + ({})", corr.join(" + "));
    }

    let m = plan.netlist().metrics();
    println!();
    println!(
        "gates: {} AND, {} XOR (naive would use {}); critical path {}",
        m.and_count,
        m.xor_count,
        k * (cn - 1),
        m.delay()
    );
    println!(
        "closed-form totals: k^2 = {}, (k/2)(C_N + 2T - 1) - 1 = {}",
        k * k,
        (k / 2) * (cn + 2 * t - 1) - 1
    );
}
