//! Gaussian normal basis (GNB) construction and bit-parallel multiplier
//! synthesis for binary fields GF(2^k).
//!
//! A normal basis represents field elements so that squaring is a free cyclic
//! shift; the cost of multiplication is governed by the density `C_N` of the
//! multiplication matrix. This crate builds Gaussian normal bases of any type
//! `T` from their cyclotomic coset structure, derives the multiplication
//! matrices, and emits gate-level AND/XOR multiplier netlists under four
//! strategies:
//!
//! - `naive` — one balanced XOR tree per output bit over the selected
//!   products, `k(C_N - 1)` XOR gates;
//! - `onb1` — type 1 optimal normal basis sharing of the anti-diagonal
//!   product sum ω, `k² - 1` XOR gates;
//! - `onb2` — type 2 optimal normal basis sharing of the symmetric pair
//!   terms μ_ij, `1.5·k(k - 1)` XOR gates;
//! - `odd-decomp` — matrix decomposition for odd-type GNB combining both
//!   ideas, `(k/2)(C_N + 2T - 1) - 1` XOR gates.
//!
//! Every emitted netlist can be simulated against the reference normal-basis
//! arithmetic in [`arith`], measured for gate counts and critical-path depth,
//! and serialized in a line-oriented text format (`GNBMUL v1`).
//!
//! # Modules
//!
//! - [`gnb`] — existence checks, λ selection, cyclotomic coset construction
//! - [`matrix`] — multiplication matrices, `C_N`, structural properties
//! - [`arith`] — reference field arithmetic (the functional oracle)
//! - [`netlist`] — gate DAG, simulator, metrics, text serialization
//! - [`synth`] — the four multiplier emitters
//! - [`analysis`] — closed-form cost comparison and the field survey
//! - [`cli`] — command-line frontend (see the `gnbmul` binary)
//!
//! # Example
//!
//! ```
//! use gnbmul::{gnb, matrix::MultMatrix, synth};
//!
//! let params = gnb::build_params(6, 3).unwrap();
//! let m0 = MultMatrix::from_params(&params);
//! assert_eq!(m0.count_ones(), 17);
//!
//! let plan = synth::synth_odd_gnb(&params, &m0).unwrap();
//! let metrics = plan.netlist().metrics();
//! assert_eq!((metrics.and_count, metrics.xor_count), (36, 65));
//! ```

pub mod analysis;
pub mod arith;
pub mod cli;
pub mod gnb;
pub mod matrix;
pub mod netlist;
pub mod synth;

pub use analysis::{comparison_table, scan, Classification, ComparisonRow, ScanRecord};
pub use arith::{gf_mult, Element};
pub use gnb::{build_params, check_gnb, smallest_type, GnbError, GnbParams};
pub use matrix::{MatrixView, MultMatrix};
pub use netlist::{GateMetrics, GateOp, Method, Netlist, Ref};
pub use synth::{synth, SynthPlan};
