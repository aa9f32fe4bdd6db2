//! Check the closed-form gate-count and depth claims against measured
//! circuits for every odd-type field up to k = 60.
//!
//! ```bash
//! cargo run --example gate_count_formulas
//! ```

use gnbmul::analysis::{ceil_log2, scan, Classification};
use gnbmul::gnb::build_params;
use gnbmul::matrix::MultMatrix;
use gnbmul::synth::synth_odd_gnb;

fn main() {
    println!(
        "{:>4} {:>4} {:>5} {:>8} {:>8} {:>10} {:>10}",
        "k", "T", "C_N", "AND", "XOR", "depth", "bound"
    );
    for record in scan(2, 60, 200) {
        if record.classification != Classification::OddGnb {
            continue;
        }
        let (k, t) = (record.k, record.smallest_type.unwrap());
        let params = build_params(k, t).unwrap();
        let m0 = MultMatrix::from_params(&params);
        let cn = m0.count_ones();
        let plan = synth_odd_gnb(&params, &m0).unwrap();
        let m = plan.netlist().metrics();

        let want_and = k * k;
        let want_xor = (k / 2) * (cn + 2 * t - 1) - 1;
        let bound = 1 + ceil_log2((cn - k + 2 * t - 1) as u64) as usize;
        assert_eq!(m.and_count, want_and);
        assert_eq!(m.xor_count, want_xor);
        assert!(m.xor_depth <= bound);

        println!(
            "{:>4} {:>4} {:>5} {:>8} {:>8} {:>10} {:>10}",
            k,
            t,
            cn,
            m.and_count,
            m.xor_count,
            m.delay(),
            format!("1A+{bound}X")
        );
    }
    println!();
    println!("every measured count equals its formula; every depth is within its bound");
}
