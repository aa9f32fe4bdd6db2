//! Serialize a synthesized multiplier, parse it back, and check it against
//! the reference field arithmetic.
//!
//! ```bash
//! cargo run --example simulate_multiplier
//! ```

use gnbmul::arith::{gf_mult, Element};
use gnbmul::gnb::build_params;
use gnbmul::matrix::MultMatrix;
use gnbmul::netlist::{Method, Netlist};
use gnbmul::synth;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let params = build_params(6, 3).unwrap();
    let m0 = MultMatrix::from_params(&params);
    let plan = synth::synth(Method::OddDecomp, &params, &m0).unwrap();

    // The text form round-trips to an identical netlist.
    let text = plan.netlist().export();
    let netlist = Netlist::import(&text).unwrap();
    assert_eq!(&netlist, plan.netlist());
    println!("netlist header: {}", text.lines().next().unwrap());
    println!("gates: {}", netlist.gates().len());
    println!();

    // Gate-level simulation agrees with the multiplication matrices.
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..5 {
        let a = Element::random(6, &mut rng);
        let b = Element::random(6, &mut rng);
        let simulated = netlist.simulate(&a, &b);
        let reference = gf_mult(&m0, &a, &b);
        assert_eq!(simulated, reference);
        println!("{a} * {b} = {simulated}  (hex, coordinate 0 = lsb)");
    }
    println!();

    // The all-ones element is the multiplicative identity.
    let one = Element::one(6);
    let x = Element::from_hex(6, "2d").unwrap();
    println!("{one} * {x} = {}", netlist.simulate(&one, &x));

    // Squaring is a cyclic coordinate shift; the netlist agrees.
    let sq = netlist.simulate(&x, &x);
    assert_eq!(sq, x.square());
    println!("{x} * {x} = {sq} = cyclic shift of {x}");
}
