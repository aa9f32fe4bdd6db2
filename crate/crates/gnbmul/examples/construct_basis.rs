//! Construct a Gaussian normal basis and print its coset structure.
//!
//! ```bash
//! cargo run --example construct_basis
//! ```

use gnbmul::gnb::{build_params, check_gnb, smallest_type};

fn main() {
    // Existence is decided by two conditions on p = T*k + 1.
    for (k, t) in [(4, 3), (3, 1), (6, 3), (20, 2)] {
        println!("GNB of type {t} for GF(2^{k}): {}", check_gnb(k, t));
    }
    println!();

    // GF(2^8) has no Gaussian normal basis at all.
    println!("smallest type for GF(2^4):  {:?}", smallest_type(4, 200));
    println!("smallest type for GF(2^8):  {:?}", smallest_type(8, 200));
    println!("smallest type for GF(2^20): {:?}", smallest_type(20, 200));
    println!();

    // The full parameter set for the type-3 basis of GF(2^4): the basis
    // element beta_i corresponds to the exponent coset D_i modulo p.
    let params = build_params(4, 3).unwrap();
    println!(
        "k={} T={}: p={}, s={}, lambda={}",
        params.k(),
        params.t(),
        params.p(),
        params.s(),
        params.lambda()
    );
    for (i, coset) in params.cosets().iter().enumerate() {
        println!("  D_{i} = {coset:?}");
    }

    // The cosets partition [1, p-1]: the matrix-level form of the identity
    // "the basis elements sum to 1".
    let covered: usize = params.cosets().iter().map(Vec::len).sum();
    println!("covered exponents: {covered} of {}", params.p() - 1);
}
