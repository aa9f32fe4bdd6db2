//! Build multiplication matrices and inspect their structure.
//!
//! ```bash
//! cargo run --example multiplication_matrices
//! ```

use gnbmul::gnb::build_params;
use gnbmul::matrix::MultMatrix;

fn print_field(k: usize, t: usize) {
    let params = build_params(k, t).unwrap();
    let m0 = MultMatrix::from_params(&params);
    println!(
        "GF(2^{k}), type {t}: C_N = {} (bound {})",
        m0.count_ones(),
        if t.is_multiple_of(2) { t * k - 1 } else { (t + 1) * k - t }
    );
    for l in 0..k {
        println!("c_{l}:");
        print!("{}", m0.for_bit(l).render(" "));
    }
    println!();
}

fn main() {
    // The type 2 ONB of GF(2^3) and the type 3 GNB of GF(2^4).
    print_field(3, 2);
    print_field(4, 3);

    // Every matrix is symmetric, has a single 1 on the main diagonal at
    // (k-1, k-1), and for even k the anti-diagonal cells (i, i+k/2) are
    // shared across output bits: each is used in k-T+1 bits for an odd-type
    // basis, and in every bit for a type 1 ONB.
    let m0 = MultMatrix::from_params(&build_params(6, 3).unwrap());
    println!(
        "GF(2^6) type 3: anti-diagonal usage per index = {:?} (k-T+1 = {})",
        m0.antidiagonal_usage(),
        6 - 3 + 1
    );
    let m0 = MultMatrix::from_params(&build_params(4, 1).unwrap());
    println!(
        "GF(2^4) type 1: anti-diagonal usage per index = {:?} (every bit)",
        m0.antidiagonal_usage()
    );
}
