//! Command-line frontend.
//!
//! Subcommands: `info`, `matrix`, `synth`, `simulate`, `verify`, `compare`,
//! `scan`. Exit status: 0 on success, 1 on verification failure, 2 on invalid
//! arguments or unreadable input, 3 when the requested basis does not exist.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::analysis::{self, ceil_log2, Classification, ScanSummary};
use crate::arith::{gf_mult_lanes, Element};
use crate::gnb::{self, GnbParams, DEFAULT_T_MAX};
use crate::matrix::MultMatrix;
use crate::netlist::{Method, Netlist};
use crate::synth;

/// Exit status for verification failures.
pub const EXIT_VERIFY_FAILED: i32 = 1;
/// Exit status for invalid arguments or unreadable inputs.
pub const EXIT_USAGE: i32 = 2;
/// Exit status when the requested basis does not exist.
pub const EXIT_NO_BASIS: i32 = 3;

const DEFAULT_SEED: u64 = 0x676e_626d;
const DEFAULT_RANDOM_TRIALS: u64 = 10_000;

#[derive(Parser)]
#[command(
    name = "gnbmul",
    version,
    about = "Gaussian normal basis multiplier construction, synthesis and verification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print basis parameters (p, s, lambda), C_N and classification.
    Info {
        /// Extension degree of the field GF(2^k).
        #[arg(long)]
        k: usize,
        /// Basis type; defaults to the smallest type that exists.
        #[arg(long = "type")]
        t: Option<usize>,
        /// Search bound when picking the smallest type.
        #[arg(long, default_value_t = DEFAULT_T_MAX)]
        t_max: usize,
    },
    /// Print a multiplication matrix.
    Matrix {
        #[arg(long)]
        k: usize,
        #[arg(long = "type")]
        t: usize,
        /// Output bit whose matrix view is printed.
        #[arg(long, default_value_t = 0)]
        bit: usize,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Ascii)]
        format: MatrixFormat,
    },
    /// Synthesize a multiplier netlist and write it as GNBMUL v1 text.
    Synth {
        #[arg(long)]
        k: usize,
        #[arg(long = "type")]
        t: usize,
        #[arg(long, value_parser = parse_method)]
        method: Method,
        /// Output file path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate a netlist file on two elements given as hex.
    Simulate {
        /// Path to a GNBMUL v1 netlist file.
        #[arg(long)]
        netlist: PathBuf,
        /// First operand, hex with coordinate 0 in the least-significant bit.
        #[arg(long)]
        a: String,
        /// Second operand, same encoding.
        #[arg(long)]
        b: String,
    },
    /// Check emitted circuits against reference arithmetic and the count
    /// formulas; one PASS/FAIL line per check.
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long = "type")]
        t: usize,
        /// One method, or `all` for every method applicable to this basis.
        #[arg(long, default_value = "all")]
        method: String,
        /// Compare against reference arithmetic on all 2^(2k) input pairs
        /// (automatic for k <= 8).
        #[arg(long, conflicts_with = "random")]
        exhaustive: bool,
        /// Number of random input pairs (default 10000 for k > 8).
        #[arg(long)]
        random: Option<u64>,
        /// RNG seed for the random pairs.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print the closed-form cost comparison rows for an odd-type basis.
    Compare {
        #[arg(long)]
        k: usize,
        #[arg(long = "type")]
        t: usize,
    },
    /// Survey a range of extension degrees; CSV on stdout.
    Scan {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Only print fields whose smallest type is odd and >= 3.
        #[arg(long)]
        odd_only: bool,
        /// Type search bound per field.
        #[arg(long, default_value_t = DEFAULT_T_MAX)]
        t_max: usize,
        /// Also compute C_N per field (costly for large k).
        #[arg(long)]
        with_cn: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Ascii,
    Csv,
}

fn parse_method(s: &str) -> Result<Method, String> {
    Method::from_str(s)
}

/// Parses `argv` and runs one subcommand, returning the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match cli.cmd {
        Cmd::Info { k, t, t_max } => info(k, t, t_max),
        Cmd::Matrix { k, t, bit, format } => matrix(k, t, bit, format),
        Cmd::Synth { k, t, method, out } => synth_cmd(k, t, method, &out),
        Cmd::Simulate { netlist, a, b } => simulate(&netlist, &a, &b),
        Cmd::Verify {
            k,
            t,
            method,
            exhaustive,
            random,
            seed,
        } => verify(k, t, &method, exhaustive, random, seed),
        Cmd::Compare { k, t } => compare(k, t),
        Cmd::Scan {
            from,
            to,
            odd_only,
            t_max,
            with_cn,
        } => scan(from, to, odd_only, t_max, with_cn),
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn check_field_args(k: usize, t: usize) -> Option<i32> {
    if k < 2 {
        return Some(usage_error("k must be at least 2"));
    }
    if t < 1 {
        return Some(usage_error("type must be at least 1"));
    }
    None
}

fn build_or_exit(k: usize, t: usize) -> Result<GnbParams, i32> {
    gnb::build_params(k, t).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_NO_BASIS
    })
}

fn cn_bound(k: usize, t: usize) -> usize {
    if t.is_multiple_of(2) {
        t * k - 1
    } else {
        (t + 1) * k - t
    }
}

fn info(k: usize, t: Option<usize>, t_max: usize) -> i32 {
    if k < 2 {
        return usage_error("k must be at least 2");
    }
    let t = match t {
        Some(t) if t >= 1 => t,
        Some(_) => return usage_error("type must be at least 1"),
        None => match gnb::smallest_type(k, t_max) {
            Some(t) => t,
            None => {
                eprintln!("error: no basis of type <= {t_max} exists for k={k}");
                return EXIT_NO_BASIS;
            }
        },
    };
    let params = match build_or_exit(k, t) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let m0 = MultMatrix::from_params(&params);
    let cn = m0.count_ones();
    let bound = cn_bound(k, t);
    println!("k={k}");
    println!("type={t}");
    println!("p={}", params.p());
    println!("s={}", params.s());
    println!("lambda={}", params.lambda());
    println!("cn={cn}");
    println!("cn_bound={bound}");
    println!("cn_bound_ok={}", cn <= bound);
    println!("classification={}", Classification::from_smallest_type(Some(t)));
    0
}

fn matrix(k: usize, t: usize, bit: usize, format: MatrixFormat) -> i32 {
    if let Some(code) = check_field_args(k, t) {
        return code;
    }
    if bit >= k {
        return usage_error(&format!("bit {bit} out of range for k={k}"));
    }
    let params = match build_or_exit(k, t) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let m0 = MultMatrix::from_params(&params);
    let sep = match format {
        MatrixFormat::Ascii => " ",
        MatrixFormat::Csv => ",",
    };
    print!("{}", m0.for_bit(bit).render(sep));
    0
}

fn synth_cmd(k: usize, t: usize, method: Method, out: &std::path::Path) -> i32 {
    if let Some(code) = check_field_args(k, t) {
        return code;
    }
    let params = match build_or_exit(k, t) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let m0 = MultMatrix::from_params(&params);
    let plan = match synth::synth(method, &params, &m0) {
        Ok(plan) => plan,
        Err(e) => return usage_error(&e.to_string()),
    };
    if let Some(w) = plan.warning() {
        eprintln!("warning: {w}");
    }
    let metrics = plan.netlist().metrics();
    if let Err(e) = fs::write(out, plan.netlist().export()) {
        eprintln!("error: cannot write {}: {e}", out.display());
        return EXIT_USAGE;
    }
    println!(
        "wrote {}: and={} xor={} depth={}",
        out.display(),
        metrics.and_count,
        metrics.xor_count,
        metrics.delay()
    );
    0
}

fn simulate(path: &std::path::Path, a_hex: &str, b_hex: &str) -> i32 {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return usage_error(&format!("cannot read {}: {e}", path.display())),
    };
    let netlist = match Netlist::import(&text) {
        Ok(n) => n,
        Err(e) => return usage_error(&format!("{}: {e}", path.display())),
    };
    let k = netlist.k();
    let a = match Element::from_hex(k, a_hex) {
        Ok(e) => e,
        Err(e) => return usage_error(&format!("operand a: {e}")),
    };
    let b = match Element::from_hex(k, b_hex) {
        Ok(e) => e,
        Err(e) => return usage_error(&format!("operand b: {e}")),
    };
    println!("{}", netlist.simulate(&a, &b));
    0
}

fn compare(k: usize, t: usize) -> i32 {
    if let Some(code) = check_field_args(k, t) {
        return code;
    }
    if t.is_multiple_of(2) {
        return usage_error("compare applies to odd-type bases only");
    }
    let params = match build_or_exit(k, t) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let cn = MultMatrix::from_params(&params).count_ones();
    println!("method,and,xor,delay");
    for row in analysis::comparison_table(k, t, cn) {
        println!(
            "{},{},{},{}",
            row.method,
            row.and_count,
            row.xor_count,
            row.delay()
        );
    }
    0
}

fn scan(from: usize, to: usize, odd_only: bool, t_max: usize, with_cn: bool) -> i32 {
    if from < 2 || from > to {
        return usage_error("scan range must satisfy 2 <= from <= to");
    }
    let records = analysis::scan(from, to, t_max);
    if with_cn {
        println!("k,smallest_type,classification,cn");
    } else {
        println!("k,smallest_type,classification");
    }
    for record in &records {
        if odd_only && record.classification != Classification::OddGnb {
            continue;
        }
        if with_cn {
            let cn = record
                .count_ones()
                .map(|c| c.to_string())
                .unwrap_or_default();
            println!("{},{cn}", record.csv());
        } else {
            println!("{}", record.csv());
        }
    }
    println!("# summary {}", ScanSummary::from_records(&records));
    0
}

/// Methods applicable to a (k, T) basis.
fn applicable_methods(k: usize, t: usize) -> Vec<Method> {
    let mut methods = vec![Method::Naive];
    if t == 1 {
        methods.push(Method::Onb1);
    }
    if t == 2 {
        methods.push(Method::Onb2);
    }
    if t % 2 == 1 && k.is_multiple_of(2) {
        methods.push(Method::OddDecomp);
    }
    methods
}

struct CheckLog {
    failed: bool,
}

impl CheckLog {
    fn report(&mut self, ok: bool, what: &str) {
        println!("{} {what}", if ok { "PASS" } else { "FAIL" });
        self.failed |= !ok;
    }
}

fn verify(
    k: usize,
    t: usize,
    method: &str,
    exhaustive: bool,
    random: Option<u64>,
    seed: Option<u64>,
) -> i32 {
    if let Some(code) = check_field_args(k, t) {
        return code;
    }
    if exhaustive && k > 16 {
        return usage_error("exhaustive check is infeasible beyond k=16; use --random N");
    }
    let methods: Vec<Method> = if method == "all" {
        Vec::new() // filled after the basis is built
    } else {
        match Method::from_str(method) {
            Ok(m) => vec![m],
            Err(e) => return usage_error(&e),
        }
    };
    let params = match build_or_exit(k, t) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let methods = if methods.is_empty() {
        applicable_methods(k, t)
    } else {
        let applicable = applicable_methods(k, t);
        if !applicable.contains(&methods[0]) {
            return usage_error(&format!(
                "method {} does not apply to a type-{t} basis of GF(2^{k})",
                methods[0]
            ));
        }
        methods
    };

    let m0 = MultMatrix::from_params(&params);
    let cn = m0.count_ones();
    let seed = seed.unwrap_or(DEFAULT_SEED);
    let trials = random.unwrap_or(DEFAULT_RANDOM_TRIALS);
    let exhaustive = exhaustive || k <= 8;
    if !exhaustive {
        println!("# seed={seed}");
    }

    let mut log = CheckLog { failed: false };

    // basis-level structure
    let bound = cn_bound(k, t);
    let symmetric = (0..k).all(|i| (0..k).all(|j| m0.get(i, j) == m0.get(j, i)));
    let diag_ok = (0..k).all(|i| m0.get(i, i) == (i == k - 1));
    let structure = symmetric && diag_ok && cn % 2 == 1 && cn <= bound;
    log.report(
        structure,
        &format!("matrix k={k} type={t} C_N={cn} bound={bound}"),
    );

    for m in methods {
        let plan = match synth::synth(m, &params, &m0) {
            Ok(plan) => plan,
            Err(e) => return usage_error(&e.to_string()),
        };
        if let Some(w) = plan.warning() {
            eprintln!("warning: {w}");
        }
        let netlist = plan.netlist();

        // functional equivalence against reference arithmetic
        let (mismatches, total) = if exhaustive {
            equivalence_exhaustive(netlist, &m0)
        } else {
            equivalence_random(netlist, &m0, trials, seed)
        };
        log.report(
            mismatches == 0,
            &format!("{m} equivalence {}/{total}", total - mismatches),
        );

        // count formulas
        let metrics = netlist.metrics();
        let expected_xor = match m {
            Method::Naive => k * (cn - 1),
            Method::Onb1 => k * k - 1,
            Method::Onb2 => 3 * k * (k - 1) / 2,
            Method::OddDecomp => (k / 2) * (cn + 2 * t - 1) - 1,
        };
        log.report(
            metrics.and_count == k * k && metrics.xor_count == expected_xor,
            &format!(
                "{m} counts and={} xor={} expected and={} xor={expected_xor}",
                metrics.and_count,
                metrics.xor_count,
                k * k
            ),
        );

        // depth against the published bound
        let depth_bound = match m {
            Method::Naive => ceil_log2(cn as u64) as usize,
            Method::Onb1 | Method::Onb2 => 1 + ceil_log2(k as u64) as usize,
            Method::OddDecomp => 1 + ceil_log2((cn - k + 2 * t - 1) as u64) as usize,
        };
        log.report(
            metrics.and_depth == 1 && metrics.xor_depth <= depth_bound,
            &format!("{m} depth {} bound=1A+{depth_bound}X", metrics.delay()),
        );

        if m == Method::OddDecomp {
            let expected = (cn - k + 2 * t - 3) / 2;
            let ok = (0..k).all(|l| plan.corrections(l).map(<[_]>::len) == Some(expected));
            log.report(ok, &format!("{m} corrections {expected}/bit"));
        }

        // serialization roundtrip
        let roundtrip = Netlist::import(&netlist.export());
        let ok = roundtrip.as_ref() == Ok(netlist);
        log.report(ok, &format!("{m} roundtrip"));
    }

    if log.failed {
        EXIT_VERIFY_FAILED
    } else {
        0
    }
}

/// Compares netlist simulation with reference arithmetic on all 2^(2k)
/// pairs, 64 assignments per pass. Returns (mismatches, total).
fn equivalence_exhaustive(netlist: &Netlist, m0: &MultMatrix) -> (u64, u64) {
    let k = netlist.k();
    assert!(k <= 16, "exhaustive check is infeasible beyond k=16");
    let total: u64 = 1 << (2 * k);
    let mask: u64 = (1 << k) - 1;
    let mut mismatches = 0;
    let mut a_lanes = vec![0u64; k];
    let mut b_lanes = vec![0u64; k];
    let mut start = 0u64;
    while start < total {
        let lanes = 64.min(total - start) as usize;
        pack_lanes(&mut a_lanes, &mut b_lanes, k, mask, start, lanes);
        let got = netlist.simulate_lanes(&a_lanes, &b_lanes);
        let want = gf_mult_lanes(m0, &a_lanes, &b_lanes);
        mismatches += count_lane_mismatches(&got, &want, lanes);
        start += lanes as u64;
    }
    (mismatches, total)
}

fn pack_lanes(a: &mut [u64], b: &mut [u64], k: usize, mask: u64, start: u64, lanes: usize) {
    a.fill(0);
    b.fill(0);
    for lane in 0..lanes {
        let idx = start + lane as u64;
        let av = idx & mask;
        let bv = idx >> k;
        for bit in 0..k {
            a[bit] |= (av >> bit & 1) << lane;
            b[bit] |= (bv >> bit & 1) << lane;
        }
    }
}

fn count_lane_mismatches(got: &[u64], want: &[u64], lanes: usize) -> u64 {
    let live = if lanes == 64 { !0u64 } else { (1u64 << lanes) - 1 };
    let mut diff = 0u64;
    for (g, w) in got.iter().zip(want) {
        diff |= (g ^ w) & live;
    }
    diff.count_ones() as u64
}

/// Same comparison on `trials` seeded random pairs.
fn equivalence_random(netlist: &Netlist, m0: &MultMatrix, trials: u64, seed: u64) -> (u64, u64) {
    let k = netlist.k();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = 0;
    let mut done = 0u64;
    while done < trials {
        let lanes = 64.min(trials - done) as usize;
        let mut a_lanes = vec![0u64; k];
        let mut b_lanes = vec![0u64; k];
        for lane in 0..lanes {
            let a = Element::random(k, &mut rng);
            let b = Element::random(k, &mut rng);
            for bit in 0..k {
                a_lanes[bit] |= (a.get(bit) as u64) << lane;
                b_lanes[bit] |= (b.get(bit) as u64) << lane;
            }
        }
        let got = netlist.simulate_lanes(&a_lanes, &b_lanes);
        let want = gf_mult_lanes(m0, &a_lanes, &b_lanes);
        mismatches += count_lane_mismatches(&got, &want, lanes);
        done += lanes as u64;
    }
    (mismatches, trials)
}
