//! Gate-level netlist: the common intermediate representation for every
//! synthesized multiplier, with a simulator, metrics, and a bit-exact text
//! serialization.
//!
//! A netlist has `2k` named inputs `a0..a{k-1} b0..b{k-1}`, an ordered list
//! of two-input AND/XOR gates, and k bound outputs `c0..c{k-1}`. Construction
//! through [`NetlistBuilder`] and [`Netlist::import`] both enforce that every
//! operand references an input or an *earlier* gate, so instances are acyclic
//! and topologically ordered by id.
//!
//! # Text format (`GNBMUL v1`)
//!
//! ```text
//! GNBMUL v1 k=<k> type=<T> method=<naive|onb1|onb2|odd-decomp>
//! INPUT a0 ... a<k-1> b0 ... b<k-1>
//! GATE g<N> <AND|XOR> <ref> <ref>      (N consecutive from 0)
//! OUTPUT c<l> <ref>                    (k lines)
//! ```

use std::fmt;
use std::str::FromStr;

use crate::arith::Element;

/// Two-input gate kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateOp {
    And,
    Xor,
}

impl fmt::Display for GateOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GateOp::And => "AND",
            GateOp::Xor => "XOR",
        })
    }
}

/// Operand reference: an `a`/`b` input bit or an earlier gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ref {
    A(u32),
    B(u32),
    Gate(u32),
}

impl fmt::Display for Ref {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ref::A(i) => write!(f, "a{i}"),
            Ref::B(i) => write!(f, "b{i}"),
            Ref::Gate(g) => write!(f, "g{g}"),
        }
    }
}

/// A two-input gate; the gate id is its position in the gate list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gate {
    pub op: GateOp,
    pub x: Ref,
    pub y: Ref,
}

/// Synthesis strategy tag carried in the netlist header.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Naive,
    Onb1,
    Onb2,
    OddDecomp,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Naive, Method::Onb1, Method::Onb2, Method::OddDecomp];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Naive => "naive",
            Method::Onb1 => "onb1",
            Method::Onb2 => "onb2",
            Method::OddDecomp => "odd-decomp",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Method, String> {
        match s {
            "naive" => Ok(Method::Naive),
            "onb1" => Ok(Method::Onb1),
            "onb2" => Ok(Method::Onb2),
            "odd-decomp" => Ok(Method::OddDecomp),
            other => Err(format!(
                "unknown method {other:?} (expected naive, onb1, onb2 or odd-decomp)"
            )),
        }
    }
}

/// Gate counts and critical-path depth by gate kind.
///
/// Depths are longest-path maxima over the output cones; the reported delay
/// is `and_depth·T_A + xor_depth·T_X` for two-input gate delays T_A and T_X.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GateMetrics {
    pub and_count: usize,
    pub xor_count: usize,
    pub and_depth: usize,
    pub xor_depth: usize,
}

impl GateMetrics {
    /// Compact delay expression, e.g. `1A+5X`.
    pub fn delay(&self) -> String {
        format!("{}A+{}X", self.and_depth, self.xor_depth)
    }
}

/// Errors from [`Netlist::import`], tagged with the 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

/// An immutable two-input AND/XOR gate DAG with k-bit inputs and outputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Netlist {
    k: usize,
    t: usize,
    method: Method,
    gates: Vec<Gate>,
    outputs: Vec<Ref>,
}

/// Append-only constructor enforcing topological operand order.
pub struct NetlistBuilder {
    k: usize,
    t: usize,
    method: Method,
    gates: Vec<Gate>,
}

impl NetlistBuilder {
    pub fn new(k: usize, t: usize, method: Method) -> NetlistBuilder {
        assert!(k >= 1);
        NetlistBuilder {
            k,
            t,
            method,
            gates: Vec::new(),
        }
    }

    /// Reference to input bit `a_i`.
    pub fn a(&self, i: usize) -> Ref {
        assert!(i < self.k);
        Ref::A(i as u32)
    }

    /// Reference to input bit `b_i`.
    pub fn b(&self, i: usize) -> Ref {
        assert!(i < self.k);
        Ref::B(i as u32)
    }

    fn check(&self, r: Ref) {
        match r {
            Ref::A(i) | Ref::B(i) => assert!((i as usize) < self.k, "input ref out of range"),
            Ref::Gate(g) => assert!(
                (g as usize) < self.gates.len(),
                "operand must reference an earlier gate"
            ),
        }
    }

    pub fn gate(&mut self, op: GateOp, x: Ref, y: Ref) -> Ref {
        self.check(x);
        self.check(y);
        let id = self.gates.len() as u32;
        self.gates.push(Gate { op, x, y });
        Ref::Gate(id)
    }

    pub fn and(&mut self, x: Ref, y: Ref) -> Ref {
        self.gate(GateOp::And, x, y)
    }

    pub fn xor(&mut self, x: Ref, y: Ref) -> Ref {
        self.gate(GateOp::Xor, x, y)
    }

    /// Sums the operands with a left-to-right pairwise balanced XOR tree,
    /// emitting `n - 1` gates and at most `⌈log2 n⌉` levels above the
    /// operands. A single operand is returned unchanged.
    pub fn xor_tree(&mut self, operands: &[Ref]) -> Ref {
        assert!(!operands.is_empty(), "cannot sum zero operands");
        let mut layer = operands.to_vec();
        while layer.len() > 1 {
            let mut next = Vec::with_capacity(layer.len().div_ceil(2));
            for pair in layer.chunks(2) {
                next.push(if pair.len() == 2 {
                    self.xor(pair[0], pair[1])
                } else {
                    pair[0]
                });
            }
            layer = next;
        }
        layer[0]
    }

    /// Binds the k outputs `c_0..c_{k-1}` and freezes the netlist.
    pub fn finish(self, outputs: Vec<Ref>) -> Netlist {
        assert_eq!(outputs.len(), self.k, "every output bit must be bound");
        for &r in &outputs {
            self.check(r);
        }
        Netlist {
            k: self.k,
            t: self.t,
            method: self.method,
            gates: self.gates,
            outputs,
        }
    }
}

impl Netlist {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Basis type recorded in the header.
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn outputs(&self) -> &[Ref] {
        &self.outputs
    }

    /// Evaluates the gates in order on one input pair.
    pub fn simulate(&self, a: &Element, b: &Element) -> Element {
        assert_eq!(a.k(), self.k, "input width mismatch");
        assert_eq!(b.k(), self.k, "input width mismatch");
        let a_lanes: Vec<u64> = (0..self.k).map(|i| a.get(i) as u64).collect();
        let b_lanes: Vec<u64> = (0..self.k).map(|i| b.get(i) as u64).collect();
        let c_lanes = self.simulate_lanes(&a_lanes, &b_lanes);
        let mut c = Element::zero(self.k);
        for (i, &lane) in c_lanes.iter().enumerate() {
            c.set(i, lane & 1 == 1);
        }
        c
    }

    /// Bit-sliced evaluation of 64 input assignments at once: `a[i]` holds
    /// one lane per assignment for input bit `a_i`, likewise `b`; the result
    /// holds the lanes of each output bit.
    pub fn simulate_lanes(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        assert_eq!(a.len(), self.k, "input width mismatch");
        assert_eq!(b.len(), self.k, "input width mismatch");
        let mut values = vec![0u64; self.gates.len()];
        let fetch = |values: &[u64], r: Ref| -> u64 {
            match r {
                Ref::A(i) => a[i as usize],
                Ref::B(i) => b[i as usize],
                Ref::Gate(g) => values[g as usize],
            }
        };
        for (id, gate) in self.gates.iter().enumerate() {
            let x = fetch(&values, gate.x);
            let y = fetch(&values, gate.y);
            values[id] = match gate.op {
                GateOp::And => x & y,
                GateOp::Xor => x ^ y,
            };
        }
        self.outputs.iter().map(|&r| fetch(&values, r)).collect()
    }

    /// Exact gate counts and longest-path depths over the output cones.
    pub fn metrics(&self) -> GateMetrics {
        let and_count = self.gates.iter().filter(|g| g.op == GateOp::And).count();
        let xor_count = self.gates.len() - and_count;

        let mut and_depths = vec![0usize; self.gates.len()];
        let mut xor_depths = vec![0usize; self.gates.len()];
        let depth_of = |d: &[usize], r: Ref| -> usize {
            match r {
                Ref::A(_) | Ref::B(_) => 0,
                Ref::Gate(g) => d[g as usize],
            }
        };
        for (id, gate) in self.gates.iter().enumerate() {
            let a = depth_of(&and_depths, gate.x).max(depth_of(&and_depths, gate.y));
            let x = depth_of(&xor_depths, gate.x).max(depth_of(&xor_depths, gate.y));
            and_depths[id] = a + (gate.op == GateOp::And) as usize;
            xor_depths[id] = x + (gate.op == GateOp::Xor) as usize;
        }
        let and_depth = self
            .outputs
            .iter()
            .map(|&r| depth_of(&and_depths, r))
            .max()
            .unwrap_or(0);
        let xor_depth = self
            .outputs
            .iter()
            .map(|&r| depth_of(&xor_depths, r))
            .max()
            .unwrap_or(0);
        GateMetrics {
            and_count,
            xor_count,
            and_depth,
            xor_depth,
        }
    }

    /// Leaves of the XOR tree rooted at `root`: descends through XOR gates,
    /// stopping at inputs, AND gates, and any ref for which `is_atom` holds.
    /// Used to inspect how an output decomposes into designated shared terms.
    pub fn xor_leaves(&self, root: Ref, is_atom: &dyn Fn(Ref) -> bool) -> Vec<Ref> {
        let mut leaves = Vec::new();
        let mut stack = vec![root];
        while let Some(r) = stack.pop() {
            let descend = match r {
                Ref::Gate(g) if !is_atom(r) => {
                    let gate = self.gates[g as usize];
                    if gate.op == GateOp::Xor {
                        stack.push(gate.y);
                        stack.push(gate.x);
                        true
                    } else {
                        false
                    }
                }
                _ => false,
            };
            if !descend {
                leaves.push(r);
            }
        }
        leaves
    }

    /// Serializes to the canonical `GNBMUL v1` text form.
    pub fn export(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "GNBMUL v1 k={} type={} method={}\n",
            self.k, self.t, self.method
        ));
        out.push_str("INPUT");
        for i in 0..self.k {
            out.push_str(&format!(" a{i}"));
        }
        for i in 0..self.k {
            out.push_str(&format!(" b{i}"));
        }
        out.push('\n');
        for (id, gate) in self.gates.iter().enumerate() {
            out.push_str(&format!("GATE g{id} {} {} {}\n", gate.op, gate.x, gate.y));
        }
        for (l, r) in self.outputs.iter().enumerate() {
            out.push_str(&format!("OUTPUT c{l} {r}\n"));
        }
        out
    }

    /// Parses the `GNBMUL v1` text form, validating the header, input names,
    /// consecutive gate ids, operand order, and output bindings.
    pub fn import(text: &str) -> Result<Netlist, ParseError> {
        let fail = |line: usize, msg: String| -> ParseError { ParseError { line, msg } };
        let parse_index = |line: usize, token: &str, prefix: char| -> Result<usize, ParseError> {
            token
                .strip_prefix(prefix)
                .and_then(|d| d.parse::<usize>().ok())
                .ok_or_else(|| fail(line, format!("expected {prefix}<index>, got {token:?}")))
        };

        let mut lines = text.lines().enumerate().map(|(n, l)| (n + 1, l));

        let (n, header) = lines
            .next()
            .ok_or_else(|| fail(1, "empty netlist".into()))?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        if tokens.len() != 5 || tokens[0] != "GNBMUL" || tokens[1] != "v1" {
            return Err(fail(n, "header must be `GNBMUL v1 k=<k> type=<T> method=<m>`".into()));
        }
        let field = |line: usize, token: &str, key: &str| -> Result<String, ParseError> {
            token
                .strip_prefix(key)
                .and_then(|rest| rest.strip_prefix('='))
                .map(str::to_owned)
                .ok_or_else(|| fail(line, format!("expected {key}=<value>, got {token:?}")))
        };
        let k: usize = field(n, tokens[2], "k")?
            .parse()
            .map_err(|_| fail(n, "k must be a positive integer".into()))?;
        if k == 0 {
            return Err(fail(n, "k must be a positive integer".into()));
        }
        let t: usize = field(n, tokens[3], "type")?
            .parse()
            .map_err(|_| fail(n, "type must be a positive integer".into()))?;
        if t == 0 {
            return Err(fail(n, "type must be a positive integer".into()));
        }
        let method = Method::from_str(&field(n, tokens[4], "method")?)
            .map_err(|e| fail(n, e))?;

        let (n, input_line) = lines
            .next()
            .ok_or_else(|| fail(2, "missing INPUT line".into()))?;
        let mut expected = vec!["INPUT".to_string()];
        expected.extend((0..k).map(|i| format!("a{i}")));
        expected.extend((0..k).map(|i| format!("b{i}")));
        let got: Vec<&str> = input_line.split_whitespace().collect();
        if got != expected.iter().map(String::as_str).collect::<Vec<_>>() {
            return Err(fail(n, format!("INPUT line must name a0..a{0} b0..b{0}", k - 1)));
        }

        let mut gates: Vec<Gate> = Vec::new();
        let mut outputs: Vec<Option<Ref>> = vec![None; k];
        let mut seen_output = false;
        let resolve = |line: usize, token: &str, defined: usize| -> Result<Ref, ParseError> {
            let r = match token.chars().next() {
                Some('a') => Ref::A(parse_index(line, token, 'a')? as u32),
                Some('b') => Ref::B(parse_index(line, token, 'b')? as u32),
                Some('g') => Ref::Gate(parse_index(line, token, 'g')? as u32),
                _ => return Err(fail(line, format!("unknown reference {token:?}"))),
            };
            match r {
                Ref::A(i) | Ref::B(i) if (i as usize) >= k => {
                    Err(fail(line, format!("input reference {token} out of range")))
                }
                Ref::Gate(g) if (g as usize) >= defined => Err(fail(
                    line,
                    format!("reference {token} is not defined yet (forward reference)"),
                )),
                ok => Ok(ok),
            }
        };

        for (n, line) in lines {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.first() {
                Some(&"GATE") => {
                    if seen_output {
                        return Err(fail(n, "GATE after OUTPUT section".into()));
                    }
                    if tokens.len() != 5 {
                        return Err(fail(n, "expected `GATE g<N> <AND|XOR> <ref> <ref>`".into()));
                    }
                    let id = parse_index(n, tokens[1], 'g')?;
                    if id != gates.len() {
                        return Err(fail(
                            n,
                            format!("gate ids must be consecutive: expected g{}, got g{id}", gates.len()),
                        ));
                    }
                    let op = match tokens[2] {
                        "AND" => GateOp::And,
                        "XOR" => GateOp::Xor,
                        other => return Err(fail(n, format!("unknown gate op {other:?}"))),
                    };
                    let x = resolve(n, tokens[3], gates.len())?;
                    let y = resolve(n, tokens[4], gates.len())?;
                    gates.push(Gate { op, x, y });
                }
                Some(&"OUTPUT") => {
                    seen_output = true;
                    if tokens.len() != 3 {
                        return Err(fail(n, "expected `OUTPUT c<l> <ref>`".into()));
                    }
                    let l = parse_index(n, tokens[1], 'c')?;
                    if l >= k {
                        return Err(fail(n, format!("output index c{l} out of range")));
                    }
                    if outputs[l].is_some() {
                        return Err(fail(n, format!("output c{l} bound twice")));
                    }
                    outputs[l] = Some(resolve(n, tokens[2], gates.len())?);
                }
                Some(other) => return Err(fail(n, format!("unknown directive {other:?}"))),
                None => return Err(fail(n, "blank line not allowed".into())),
            }
        }

        let last_line = text.lines().count();
        let mut bound = Vec::with_capacity(k);
        for (l, r) in outputs.into_iter().enumerate() {
            bound.push(r.ok_or_else(|| {
                fail(last_line, format!("output c{l} is not bound"))
            })?);
        }
        Ok(Netlist {
            k,
            t,
            method,
            gates,
            outputs: bound,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tiny() -> Netlist {
        // c0 = a0&b0 ^ a1&b1, c1 = a0&b1
        let mut b = NetlistBuilder::new(2, 1, Method::Naive);
        let p00 = b.and(b.a(0), b.b(0));
        let p11 = b.and(b.a(1), b.b(1));
        let s = b.xor(p00, p11);
        let p01 = b.and(b.a(0), b.b(1));
        b.finish(vec![s, p01])
    }

    #[test]
    fn simulate_evaluates_in_order() {
        let n = tiny();
        let a = Element::from_index(2, 0b11);
        let b = Element::from_index(2, 0b01);
        let c = n.simulate(&a, &b);
        assert_eq!(c, Element::from_index(2, 0b01)); // c0 = 1&1 ^ 1&0 = 1, c1 = 1&0 = 0
    }

    #[test]
    fn zero_input_kills_products() {
        let n = tiny();
        let zero = Element::zero(2);
        let ones = Element::one(2);
        assert!(n.simulate(&zero, &ones).is_zero());
    }

    #[test]
    fn metrics_counts_and_depths() {
        let n = tiny();
        let m = n.metrics();
        assert_eq!(m.and_count, 3);
        assert_eq!(m.xor_count, 1);
        assert_eq!(m.and_depth, 1);
        assert_eq!(m.xor_depth, 1);
        assert_eq!(m.delay(), "1A+1X");
    }

    #[test]
    fn xor_tree_gate_count_and_depth() {
        for n in 1..=33usize {
            let mut b = NetlistBuilder::new(8, 1, Method::Naive);
            let products: Vec<Ref> = (0..n).map(|i| b.and(b.a(i % 8), b.b(i / 8))).collect();
            let before = b.gates.len();
            let root = b.xor_tree(&products);
            let emitted = b.gates.len() - before;
            assert_eq!(emitted, n - 1, "tree over {n} operands");
            let nl = b.finish(vec![root; 8]);
            let depth = nl.metrics().xor_depth;
            let bound = (n as f64).log2().ceil() as usize;
            assert!(depth <= bound, "depth {depth} > ceil(log2 {n}) = {bound}");
            // balanced trees meet the bound exactly
            assert_eq!(depth, bound, "tree over {n} operands");
        }
    }

    #[test]
    #[should_panic(expected = "earlier gate")]
    fn builder_rejects_forward_reference() {
        let mut b = NetlistBuilder::new(2, 1, Method::Naive);
        b.gate(GateOp::And, Ref::Gate(5), Ref::A(0));
    }

    #[test]
    fn export_format() {
        let n = tiny();
        assert_eq!(
            n.export(),
            "GNBMUL v1 k=2 type=1 method=naive\n\
             INPUT a0 a1 b0 b1\n\
             GATE g0 AND a0 b0\n\
             GATE g1 AND a1 b1\n\
             GATE g2 XOR g0 g1\n\
             GATE g3 AND a0 b1\n\
             OUTPUT c0 g2\n\
             OUTPUT c1 g3\n"
        );
    }

    #[test]
    fn import_roundtrip_is_identical() {
        let n = tiny();
        let back = Netlist::import(&n.export()).unwrap();
        assert_eq!(back, n);
        assert_eq!(back.metrics(), n.metrics());
    }

    #[test]
    fn import_rejects_forward_reference() {
        let text = "GNBMUL v1 k=2 type=1 method=naive\n\
                    INPUT a0 a1 b0 b1\n\
                    GATE g0 XOR g1 a0\n\
                    GATE g1 AND a0 b0\n\
                    OUTPUT c0 g0\nOUTPUT c1 g1\n";
        let err = Netlist::import(text).unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.msg.contains("forward reference"), "{}", err.msg);
    }

    #[test]
    fn import_rejects_gap_in_gate_ids() {
        let text = "GNBMUL v1 k=2 type=1 method=naive\n\
                    INPUT a0 a1 b0 b1\n\
                    GATE g1 AND a0 b0\n\
                    OUTPUT c0 g1\nOUTPUT c1 g1\n";
        let err = Netlist::import(text).unwrap_err();
        assert_eq!(err.line, 3);
    }

    #[test]
    fn import_rejects_missing_output() {
        let text = "GNBMUL v1 k=2 type=1 method=naive\n\
                    INPUT a0 a1 b0 b1\n\
                    GATE g0 AND a0 b0\n\
                    OUTPUT c0 g0\n";
        let err = Netlist::import(text).unwrap_err();
        assert!(err.msg.contains("c1"), "{}", err.msg);
    }

    #[test]
    fn import_rejects_bad_header() {
        assert!(Netlist::import("NETLIST v1 k=2\n").is_err());
        assert!(Netlist::import("GNBMUL v1 k=0 type=1 method=naive\n").is_err());
        assert!(Netlist::import("GNBMUL v1 k=2 type=1 method=magic\n").is_err());
    }

    #[test]
    fn xor_leaves_stop_at_atoms() {
        let mut b = NetlistBuilder::new(2, 1, Method::Naive);
        let p0 = b.and(b.a(0), b.b(0));
        let p1 = b.and(b.a(1), b.b(1));
        let p2 = b.and(b.a(0), b.b(1));
        let inner = b.xor(p0, p1);
        let root = b.xor(inner, p2);
        let n = b.finish(vec![root, p2]);
        // treating `inner` as an atom hides its operands
        let mut leaves = n.xor_leaves(root, &|r| r == inner);
        leaves.sort();
        assert_eq!(leaves, vec![p2, inner]);
        // without atoms the walk reaches the AND gates
        let mut leaves = n.xor_leaves(root, &|_| false);
        leaves.sort();
        assert_eq!(leaves, vec![p0, p1, p2]);
    }

    /// Strategy: a small arbitrary well-formed netlist.
    fn arb_netlist() -> impl Strategy<Value = Netlist> {
        (2usize..6, 1usize..4, 1usize..40).prop_flat_map(|(k, t, n_gates)| {
            let gate = |max_prev: usize| {
                (
                    prop::bool::ANY,
                    0..(2 * 4 + max_prev), // operand space; clamped below
                    0..(2 * 4 + max_prev),
                )
            };
            let gates: Vec<_> = (0..n_gates).map(gate).collect();
            (Just(k), Just(t), gates, prop::collection::vec(0..n_gates, k)).prop_map(
                |(k, t, raw_gates, raw_outputs)| {
                    let mut b = NetlistBuilder::new(k, t, Method::Naive);
                    let mut refs: Vec<Ref> = Vec::new();
                    for (i, (is_and, x, y)) in raw_gates.into_iter().enumerate() {
                        let pick = |v: usize| -> Ref {
                            let space = 2 * k + i;
                            match v % space {
                                j if j < k => Ref::A(j as u32),
                                j if j < 2 * k => Ref::B((j - k) as u32),
                                j => refs[j - 2 * k],
                            }
                        };
                        let op = if is_and { GateOp::And } else { GateOp::Xor };
                        refs.push(b.gate(op, pick(x), pick(y)));
                    }
                    let outputs = raw_outputs.into_iter().map(|i| refs[i]).collect();
                    b.finish(outputs)
                },
            )
        })
    }

    proptest! {
        #[test]
        fn roundtrip_preserves_structure_and_metrics(n in arb_netlist()) {
            let text = n.export();
            let back = Netlist::import(&text).unwrap();
            prop_assert_eq!(&back, &n);
            prop_assert_eq!(back.metrics(), n.metrics());
            prop_assert_eq!(back.export(), text);
        }
    }
}
