//! Multiplier netlist emitters.
//!
//! All four strategies start from one layer of `k²` AND gates computing every
//! product `a_i·b_j`, then differ in how the per-bit XOR sums are shared:
//!
//! - [`synth_naive`] sums the `C_N` selected products per bit independently:
//!   `k(C_N - 1)` XOR gates, depth `⌈log2 C_N⌉`.
//! - [`synth_onb_type1`] (T = 1) shares `ω = Σ a_i·b_{(i+k/2) mod k}`, the
//!   anti-diagonal product sum used by every output bit: `k² - 1` XOR gates.
//! - [`synth_onb_type2`] (T = 2) shares the symmetric pair terms
//!   `μ_ij = a_i·b_j + a_j·b_i`, each used by two output bits:
//!   `1.5·k(k-1)` XOR gates.
//! - [`synth_odd_gnb`] (odd T, even k) combines both: it computes all μ_ij,
//!   sums the k/2 anti-diagonal pairs into a shared ω, and corrects each
//!   output bit with the μ terms its matrix view actually needs —
//!   `(k/2)(C_N + 2T - 1) - 1` XOR gates in total.
//!
//! ω deliberately sums *all* k/2 anti-diagonal pairs even though a given
//! output bit uses only `(k - T + 1)/2` of them; the unused pairs are
//! cancelled by re-adding the same μ in that bit's correction set, which is
//! free over GF(2) and keeps ω shared. The per-bit correction set therefore
//! holds the off-anti-diagonal symmetric pairs of the view plus the
//! anti-diagonal pairs whose cell is 0, exactly `(C_N - k + 2T - 3)/2` terms.
//!
//! Operand order is deterministic everywhere (products and μ by `(i, j)`
//! lexicographic, per-bit sums as `[diagonal product, corrections…, ω]`), so
//! repeated synthesis is byte-identical. ω joins each output sum as the final
//! operand: its internal depth, `1 + ⌈log2(k/2)⌉` above the product layer,
//! then overlaps the correction subtree and the critical path stays within
//! `1 + ⌈log2(C_N - k + 2T - 1)⌉` XOR levels.

use std::collections::BTreeMap;
use std::fmt;

use crate::gnb::GnbParams;
use crate::matrix::MultMatrix;
use crate::netlist::{Method, Netlist, NetlistBuilder, Ref};

/// A method was asked to synthesize a basis it does not apply to.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SynthError {
    #[error("{method} requires a type-{required} basis, got type {got}")]
    WrongType {
        method: Method,
        required: usize,
        got: usize,
    },
    #[error("odd-decomp requires odd type and even k, got k={k}, type {t}")]
    NotOddType { k: usize, t: usize },
}

/// Non-fatal advisory attached to a plan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SynthWarning {
    /// `k < 2T + 1`: the decomposition still computes the right product but
    /// may not beat the naive XOR count.
    SpaceTradeoff { k: usize, t: usize },
}

impl fmt::Display for SynthWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SynthWarning::SpaceTradeoff { k, t } => write!(
                f,
                "k={k} < 2T+1={}: decomposition may not reduce the XOR count",
                2 * t + 1
            ),
        }
    }
}

/// An emitted netlist plus role annotations locating the shared structure:
/// which gates are raw products, which are μ pair terms, and which gate is ω.
#[derive(Debug, Clone)]
pub struct SynthPlan {
    method: Method,
    k: usize,
    netlist: Netlist,
    products: Vec<Ref>,
    mu: BTreeMap<(usize, usize), Ref>,
    omega: Option<Ref>,
    omega_pairs: Vec<(usize, usize)>,
    corrections: Vec<Vec<(usize, usize)>>,
    warning: Option<SynthWarning>,
}

impl SynthPlan {
    pub fn method(&self) -> Method {
        self.method
    }

    pub fn netlist(&self) -> &Netlist {
        &self.netlist
    }

    pub fn into_netlist(self) -> Netlist {
        self.netlist
    }

    /// Gate computing the product `a_i · b_j`.
    pub fn product(&self, i: usize, j: usize) -> Ref {
        self.products[i * self.k + j]
    }

    /// Gate computing `μ_ij = a_i·b_j + a_j·b_i`, for i < j.
    pub fn mu(&self, i: usize, j: usize) -> Option<Ref> {
        self.mu.get(&(i, j)).copied()
    }

    /// All μ gates by index pair.
    pub fn mus(&self) -> &BTreeMap<(usize, usize), Ref> {
        &self.mu
    }

    /// The shared ω gate (methods `onb1` and `odd-decomp` only).
    pub fn omega(&self) -> Option<Ref> {
        self.omega
    }

    /// Index pairs summed into ω: μ pairs for `odd-decomp`, product index
    /// pairs `(i, (i+k/2) mod k)` for `onb1`.
    pub fn omega_pairs(&self) -> &[(usize, usize)] {
        &self.omega_pairs
    }

    /// Correction μ pairs for output bit l (`odd-decomp` only).
    pub fn corrections(&self, l: usize) -> Option<&[(usize, usize)]> {
        self.corrections.get(l).map(Vec::as_slice)
    }

    pub fn warning(&self) -> Option<SynthWarning> {
        self.warning
    }

    /// Structural decomposition of output bit l: the XOR-tree leaves of the
    /// output, treating product gates, μ gates, and ω as atoms.
    pub fn output_atoms(&self, l: usize) -> Vec<Ref> {
        let mut atoms: Vec<Ref> = self.products.clone();
        atoms.extend(self.mu.values().copied());
        atoms.extend(self.omega);
        atoms.sort_unstable();
        let is_atom = move |r: Ref| atoms.binary_search(&r).is_ok();
        let mut leaves = self
            .netlist
            .xor_leaves(self.netlist.outputs()[l], &is_atom);
        leaves.sort_unstable();
        leaves
    }
}

/// Dispatches to the emitter for `method`.
pub fn synth(
    method: Method,
    params: &GnbParams,
    m0: &MultMatrix,
) -> Result<SynthPlan, SynthError> {
    match method {
        Method::Naive => Ok(synth_naive(params, m0)),
        Method::Onb1 => synth_onb_type1(params, m0),
        Method::Onb2 => synth_onb_type2(params, m0),
        Method::OddDecomp => synth_odd_gnb(params, m0),
    }
}

/// Emits the product layer shared by all methods, `(i, j)` lexicographic.
fn product_layer(b: &mut NetlistBuilder, k: usize) -> Vec<Ref> {
    let mut products = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            products.push(b.and(b.a(i), b.b(j)));
        }
    }
    products
}

/// 1-cells of the view for bit l, `(i, j)` lexicographic.
fn view_ones(m0: &MultMatrix, l: usize) -> Vec<(usize, usize)> {
    let k = m0.k();
    let view = m0.for_bit(l);
    let mut ones = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if view.get(i, j) {
                ones.push((i, j));
            }
        }
    }
    ones
}

/// One balanced XOR tree per output bit over its selected products.
pub fn synth_naive(params: &GnbParams, m0: &MultMatrix) -> SynthPlan {
    let k = params.k();
    let mut b = NetlistBuilder::new(k, params.t(), Method::Naive);
    let products = product_layer(&mut b, k);
    let mut outputs = Vec::with_capacity(k);
    for l in 0..k {
        let operands: Vec<Ref> = view_ones(m0, l)
            .into_iter()
            .map(|(i, j)| products[i * k + j])
            .collect();
        outputs.push(b.xor_tree(&operands));
    }
    SynthPlan {
        method: Method::Naive,
        k,
        netlist: b.finish(outputs),
        products,
        mu: BTreeMap::new(),
        omega: None,
        omega_pairs: Vec::new(),
        corrections: Vec::new(),
        warning: None,
    }
}

/// Type 1 ONB sharing: every output bit uses all k anti-diagonal products,
/// so their sum ω is computed once; each bit adds its k-1 remaining products.
pub fn synth_onb_type1(params: &GnbParams, m0: &MultMatrix) -> Result<SynthPlan, SynthError> {
    if params.t() != 1 {
        return Err(SynthError::WrongType {
            method: Method::Onb1,
            required: 1,
            got: params.t(),
        });
    }
    let k = params.k();
    let mut b = NetlistBuilder::new(k, 1, Method::Onb1);
    let products = product_layer(&mut b, k);

    let omega_pairs: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + k / 2) % k)).collect();
    let omega_operands: Vec<Ref> = omega_pairs.iter().map(|&(i, j)| products[i * k + j]).collect();
    let omega = b.xor_tree(&omega_operands);

    let mut outputs = Vec::with_capacity(k);
    for l in 0..k {
        let rest: Vec<Ref> = view_ones(m0, l)
            .into_iter()
            .filter(|&(i, j)| j != (i + k / 2) % k)
            .map(|(i, j)| products[i * k + j])
            .collect();
        let front = b.xor_tree(&rest);
        outputs.push(b.xor(front, omega));
    }
    Ok(SynthPlan {
        method: Method::Onb1,
        k,
        netlist: b.finish(outputs),
        products,
        mu: BTreeMap::new(),
        omega: Some(omega),
        omega_pairs,
        corrections: Vec::new(),
        warning: None,
    })
}

/// Symmetric off-diagonal pairs `{i, j}` (i < j) with a 1 in the view for
/// bit l, optionally excluding the anti-diagonal (`|i - j| = k/2`).
fn symmetric_pairs(m0: &MultMatrix, l: usize, skip_antidiagonal: bool) -> Vec<(usize, usize)> {
    let k = m0.k();
    let view = m0.for_bit(l);
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            if skip_antidiagonal && j - i == k / 2 {
                continue;
            }
            if view.get(i, j) {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Type 2 ONB sharing: each μ_ij is used by two output bits, each diagonal
/// product by one, giving `1.5·k(k-1)` XOR gates.
pub fn synth_onb_type2(params: &GnbParams, m0: &MultMatrix) -> Result<SynthPlan, SynthError> {
    if params.t() != 2 {
        return Err(SynthError::WrongType {
            method: Method::Onb2,
            required: 2,
            got: params.t(),
        });
    }
    let k = params.k();
    let mut b = NetlistBuilder::new(k, 2, Method::Onb2);
    let products = product_layer(&mut b, k);
    let mu = mu_layer(&mut b, &products, k);

    let mut outputs = Vec::with_capacity(k);
    for l in 0..k {
        let diag = (l + k - 1) % k;
        let mut operands = vec![products[diag * k + diag]];
        operands.extend(symmetric_pairs(m0, l, false).into_iter().map(|p| mu[&p]));
        outputs.push(b.xor_tree(&operands));
    }
    Ok(SynthPlan {
        method: Method::Onb2,
        k,
        netlist: b.finish(outputs),
        products,
        mu,
        omega: None,
        omega_pairs: Vec::new(),
        corrections: Vec::new(),
        warning: None,
    })
}

/// All pair terms `μ_ij = a_i·b_j + a_j·b_i` for i < j, lexicographic.
fn mu_layer(
    b: &mut NetlistBuilder,
    products: &[Ref],
    k: usize,
) -> BTreeMap<(usize, usize), Ref> {
    let mut mu = BTreeMap::new();
    for i in 0..k {
        for j in (i + 1)..k {
            let m = b.xor(products[i * k + j], products[j * k + i]);
            mu.insert((i, j), m);
        }
    }
    mu
}

/// Matrix decomposition for odd-type GNB.
///
/// Emits the product layer, all μ_ij, the shared anti-diagonal sum
/// `ω = Σ μ_{i,(i+k/2)}`, and per bit the sum of the diagonal product, the
/// correction μ set, and ω.
pub fn synth_odd_gnb(params: &GnbParams, m0: &MultMatrix) -> Result<SynthPlan, SynthError> {
    let k = params.k();
    let t = params.t();
    if t.is_multiple_of(2) || !k.is_multiple_of(2) {
        return Err(SynthError::NotOddType { k, t });
    }
    let warning = if k < 2 * t + 1 {
        Some(SynthWarning::SpaceTradeoff { k, t })
    } else {
        None
    };

    let mut b = NetlistBuilder::new(k, t, Method::OddDecomp);
    let products = product_layer(&mut b, k);
    let mu = mu_layer(&mut b, &products, k);

    let omega_pairs: Vec<(usize, usize)> = (0..k / 2).map(|i| (i, i + k / 2)).collect();
    let omega_operands: Vec<Ref> = omega_pairs.iter().map(|p| mu[p]).collect();
    let omega = b.xor_tree(&omega_operands);

    let mut corrections = Vec::with_capacity(k);
    let mut outputs = Vec::with_capacity(k);
    for l in 0..k {
        let view = m0.for_bit(l);
        // (a) symmetric 1-pairs off the anti-diagonal
        let mut corr = symmetric_pairs(m0, l, true);
        // (b) anti-diagonal 0-pairs: cancel the surplus summed into omega
        for i in 0..k / 2 {
            if !view.get(i, i + k / 2) {
                corr.push((i, i + k / 2));
            }
        }
        corr.sort_unstable();

        let diag = (l + k - 1) % k;
        let mut operands = vec![products[diag * k + diag]];
        operands.extend(corr.iter().map(|p| mu[p]));
        let front = b.xor_tree(&operands);
        outputs.push(b.xor(front, omega));
        corrections.push(corr);
    }
    Ok(SynthPlan {
        method: Method::OddDecomp,
        k,
        netlist: b.finish(outputs),
        products,
        mu,
        omega: Some(omega),
        omega_pairs,
        corrections,
        warning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gnb::build_params;
    use crate::netlist::GateOp;

    fn setup(k: usize, t: usize) -> (GnbParams, MultMatrix) {
        let params = build_params(k, t).unwrap();
        let m0 = MultMatrix::from_params(&params);
        (params, m0)
    }

    #[test]
    fn naive_counts_k3() {
        let (params, m0) = setup(3, 2);
        let m = synth_naive(&params, &m0).netlist().metrics();
        assert_eq!(m.and_count, 9);
        assert_eq!(m.xor_count, 12);
        assert_eq!(m.xor_depth, 3); // ceil(log2 5)
        assert_eq!(m.and_depth, 1);
    }

    #[test]
    fn naive_counts_k6_t3() {
        let (params, m0) = setup(6, 3);
        let m = synth_naive(&params, &m0).netlist().metrics();
        assert_eq!(m.xor_count, 96);
    }

    #[test]
    fn naive_counts_k4_t1() {
        let (params, m0) = setup(4, 1);
        let m = synth_naive(&params, &m0).netlist().metrics();
        assert_eq!(m.xor_count, 24);
    }

    #[test]
    fn onb1_counts_k4() {
        let (params, m0) = setup(4, 1);
        let plan = synth_onb_type1(&params, &m0).unwrap();
        let m = plan.netlist().metrics();
        assert_eq!(m.and_count, 16);
        assert_eq!(m.xor_count, 15);
        assert!(m.xor_depth <= 1 + 2); // 1 + ceil(log2 4)
    }

    #[test]
    fn onb1_c0_structure_k4() {
        // c_0 = omega + a1*b2 + a2*b1 + a3*b3
        let (params, m0) = setup(4, 1);
        let plan = synth_onb_type1(&params, &m0).unwrap();
        let omega = plan.omega().unwrap();
        let mut expected = vec![
            omega,
            plan.product(1, 2),
            plan.product(2, 1),
            plan.product(3, 3),
        ];
        expected.sort_unstable();
        assert_eq!(plan.output_atoms(0), expected);
        // omega itself sums the four anti-diagonal products
        assert_eq!(plan.omega_pairs(), &[(0, 2), (1, 3), (2, 0), (3, 1)]);
    }

    #[test]
    fn onb1_rejects_other_types() {
        let (params, m0) = setup(3, 2);
        assert_eq!(
            synth_onb_type1(&params, &m0).err(),
            Some(SynthError::WrongType {
                method: Method::Onb1,
                required: 1,
                got: 2
            })
        );
    }

    #[test]
    fn onb2_counts_k3() {
        let (params, m0) = setup(3, 2);
        let plan = synth_onb_type2(&params, &m0).unwrap();
        let m = plan.netlist().metrics();
        assert_eq!(m.and_count, 9);
        assert_eq!(m.xor_count, 9);
    }

    #[test]
    fn onb2_c0_structure_k3() {
        // c_0 = mu_01 + mu_12 + a2*b2
        let (params, m0) = setup(3, 2);
        let plan = synth_onb_type2(&params, &m0).unwrap();
        let mut expected = vec![
            plan.mu(0, 1).unwrap(),
            plan.mu(1, 2).unwrap(),
            plan.product(2, 2),
        ];
        expected.sort_unstable();
        assert_eq!(plan.output_atoms(0), expected);
    }

    #[test]
    fn onb2_rejects_other_types() {
        let (params, m0) = setup(4, 3);
        assert!(matches!(
            synth_onb_type2(&params, &m0),
            Err(SynthError::WrongType { .. })
        ));
    }

    #[test]
    fn odd_decomp_counts_k6_t3() {
        let (params, m0) = setup(6, 3);
        let plan = synth_odd_gnb(&params, &m0).unwrap();
        let m = plan.netlist().metrics();
        assert_eq!(m.and_count, 36);
        assert_eq!(m.xor_count, 65);
        assert!(m.xor_depth <= 5); // 1 + ceil(log2(17 - 6 + 5))

        // k = 6 < 2T+1 = 7: fewer XORs than naive (96) but not than XEBP (63)
        assert_eq!(
            plan.warning(),
            Some(SynthWarning::SpaceTradeoff { k: 6, t: 3 })
        );
    }

    #[test]
    fn odd_decomp_counts_k4_t3() {
        let (params, m0) = setup(4, 3);
        let plan = synth_odd_gnb(&params, &m0).unwrap();
        let m = plan.netlist().metrics();
        // (k/2)(C_N + 2T - 1) - 1 with C_N = 9
        assert_eq!(m.xor_count, 27);
        assert_eq!(
            plan.warning(),
            Some(SynthWarning::SpaceTradeoff { k: 4, t: 3 })
        );
    }

    #[test]
    fn odd_decomp_no_warning_when_k_large_enough() {
        let (params, m0) = setup(20, 3);
        let plan = synth_odd_gnb(&params, &m0).unwrap();
        assert_eq!(plan.warning(), None);
    }

    #[test]
    fn odd_decomp_example_structure_k6_t3() {
        let (params, m0) = setup(6, 3);
        let plan = synth_odd_gnb(&params, &m0).unwrap();

        // omega = mu_03 + mu_14 + mu_25
        assert_eq!(plan.omega_pairs(), &[(0, 3), (1, 4), (2, 5)]);

        // c_0 = a5*b5 + omega + (mu_02 + mu_05 + mu_12 + mu_13 + mu_14 + mu_24 + mu_45)
        assert_eq!(
            plan.corrections(0).unwrap(),
            &[(0, 2), (0, 5), (1, 2), (1, 3), (1, 4), (2, 4), (4, 5)]
        );
        // mu_14 is summed into omega *and* re-added here: the cancellation.
        assert!(plan.corrections(0).unwrap().contains(&(1, 4)));

        // c_1 = a0*b0 + omega + (mu_01 + mu_05 + mu_13 + mu_23 + mu_24 + mu_25 + mu_35)
        assert_eq!(
            plan.corrections(1).unwrap(),
            &[(0, 1), (0, 5), (1, 3), (2, 3), (2, 4), (2, 5), (3, 5)]
        );
    }

    #[test]
    fn odd_decomp_structural_atoms_match_annotations() {
        let (params, m0) = setup(6, 3);
        let plan = synth_odd_gnb(&params, &m0).unwrap();
        for l in 0..6 {
            let mut expected = vec![plan.product((l + 5) % 6, (l + 5) % 6), plan.omega().unwrap()];
            expected.extend(plan.corrections(l).unwrap().iter().map(|&(i, j)| plan.mu(i, j).unwrap()));
            expected.sort_unstable();
            assert_eq!(plan.output_atoms(l), expected, "bit {l}");
        }
        // and omega really is the XOR tree over its recorded mu pairs
        let omega_leaves = plan.netlist().xor_leaves(plan.omega().unwrap(), &|r| {
            plan.mus().values().any(|&m| m == r)
        });
        let mut expected: Vec<Ref> = plan.omega_pairs().iter().map(|p| plan.mus()[p]).collect();
        expected.sort_unstable();
        let mut got = omega_leaves;
        got.sort_unstable();
        assert_eq!(got, expected);
    }

    #[test]
    fn odd_decomp_rejects_even_type_and_odd_k() {
        let (params, m0) = setup(3, 2);
        assert_eq!(
            synth_odd_gnb(&params, &m0).err(),
            Some(SynthError::NotOddType { k: 3, t: 2 })
        );
        let (params, m0) = setup(5, 2);
        assert!(synth_odd_gnb(&params, &m0).is_err());
    }

    #[test]
    fn count_formulas_hold_for_all_small_fields() {
        for k in 2..=60usize {
            for t in 1..=10usize {
                if !crate::gnb::check_gnb(k, t).exists() {
                    continue;
                }
                let (params, m0) = setup(k, t);
                let cn = m0.count_ones();

                let m = synth_naive(&params, &m0).netlist().metrics();
                assert_eq!((m.and_count, m.xor_count), (k * k, k * (cn - 1)));

                if t == 1 {
                    let m = synth_onb_type1(&params, &m0).unwrap().netlist().metrics();
                    assert_eq!((m.and_count, m.xor_count), (k * k, k * k - 1));
                }
                if t == 2 {
                    let m = synth_onb_type2(&params, &m0).unwrap().netlist().metrics();
                    assert_eq!((m.and_count, m.xor_count), (k * k, 3 * k * (k - 1) / 2));
                }
                if t % 2 == 1 && k % 2 == 0 {
                    let plan = synth_odd_gnb(&params, &m0).unwrap();
                    let m = plan.netlist().metrics();

                    // The anti-diagonal carries `usage` ones per view; the
                    // per-bit correction count follows structurally.
                    let usage = m0.antidiagonal_usage()[0];
                    let corr = (cn - 1 + k) / 2 - usage;
                    for l in 0..k {
                        assert_eq!(
                            plan.corrections(l).unwrap().len(),
                            corr,
                            "k={k} t={t} bit {l}"
                        );
                    }
                    assert_eq!(
                        (m.and_count, m.xor_count),
                        (k * k, k * (k - 1) / 2 + k / 2 - 1 + k * (corr + 1)),
                        "k={k} t={t}"
                    );

                    // In the regime where the anti-diagonal usage is exactly
                    // k-T+1 (every field the survey selects an odd type for),
                    // this reduces to the closed-form totals.
                    if usage as isize == k as isize - t as isize + 1 {
                        assert_eq!(
                            m.xor_count,
                            (k / 2) * (cn + 2 * t - 1) - 1,
                            "k={k} t={t}"
                        );
                        assert_eq!(corr, (cn - k + 2 * t - 3) / 2, "k={k} t={t}");
                    }
                }
            }
        }
    }

    #[test]
    fn odd_decomp_formula_matches_onb1_total_for_type1() {
        // same XOR total, structurally different circuits
        let (params, m0) = setup(4, 1);
        let odd = synth_odd_gnb(&params, &m0).unwrap();
        let onb1 = synth_onb_type1(&params, &m0).unwrap();
        assert_eq!(
            odd.netlist().metrics().xor_count,
            onb1.netlist().metrics().xor_count
        );
        assert_eq!(odd.netlist().metrics().xor_count, 15);
        assert_ne!(odd.netlist(), onb1.netlist());
    }

    #[test]
    fn every_plan_has_single_and_layer() {
        for (k, t, method) in [
            (3, 2, Method::Naive),
            (4, 1, Method::Onb1),
            (3, 2, Method::Onb2),
            (6, 3, Method::OddDecomp),
        ] {
            let (params, m0) = setup(k, t);
            let plan = synth(method, &params, &m0).unwrap();
            assert_eq!(plan.netlist().metrics().and_depth, 1, "{method}");
            // products are the only AND gates
            let ands = plan
                .netlist()
                .gates()
                .iter()
                .filter(|g| g.op == GateOp::And)
                .count();
            assert_eq!(ands, k * k);
        }
    }
}
