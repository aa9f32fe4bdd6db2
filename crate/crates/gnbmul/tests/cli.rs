//! End-to-end checks of the `gnbmul` binary: output formats and exit codes.

use std::process::{Command, Output};

fn gnbmul(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gnbmul"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn info_reports_parameters() {
    let out = gnbmul(&["info", "--k", "6", "--type", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in [
        "k=6",
        "type=3",
        "p=19",
        "s=18",
        "lambda=7",
        "cn=17",
        "cn_bound=21",
        "cn_bound_ok=true",
        "classification=odd-gnb",
    ] {
        assert!(text.lines().any(|l| l == line), "missing {line:?} in {text}");
    }
}

#[test]
fn info_defaults_to_smallest_type() {
    let out = gnbmul(&["info", "--k", "20"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("type=3"));
}

#[test]
fn matrix_prints_published_block() {
    let out = gnbmul(&["matrix", "--k", "3", "--type", "2", "--bit", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0 1 0\n1 0 1\n0 1 1\n");

    let out = gnbmul(&["matrix", "--k", "3", "--type", "2", "--bit", "1", "--format", "csv"]);
    assert_eq!(stdout(&out), "1,0,1\n0,0,1\n1,1,0\n");
}

#[test]
fn synth_simulate_pipeline() {
    let dir = std::env::temp_dir().join("gnbmul-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k6.gnbmul");
    let path_str = path.to_str().unwrap();

    let out = gnbmul(&[
        "synth", "--k", "6", "--type", "3", "--method", "odd-decomp", "--out", path_str,
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("and=36 xor=65 depth=1A+5X"));

    // multiplying by the all-ones element is the identity
    let out = gnbmul(&["simulate", "--netlist", path_str, "--a", "3f", "--b", "2a"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2a");

    // zero annihilates
    let out = gnbmul(&["simulate", "--netlist", path_str, "--a", "00", "--b", "1b"]);
    assert_eq!(stdout(&out).trim(), "00");
}

#[test]
fn simulate_rejects_bad_netlist_with_line_number() {
    let dir = std::env::temp_dir().join("gnbmul-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.gnbmul");
    std::fs::write(
        &path,
        "GNBMUL v1 k=2 type=1 method=naive\nINPUT a0 a1 b0 b1\nGATE g0 XOR g3 a0\nOUTPUT c0 g0\nOUTPUT c1 g0\n",
    )
    .unwrap();
    let out = gnbmul(&["simulate", "--netlist", path.to_str().unwrap(), "--a", "1", "--b", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "stderr: {err}");
}

#[test]
fn verify_emits_machine_parseable_lines() {
    let out = gnbmul(&["verify", "--k", "6", "--type", "3", "--method", "odd-decomp"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines
        .iter()
        .all(|l| l.starts_with("PASS") || l.starts_with("FAIL") || l.starts_with('#')));
    assert!(text.contains("equivalence 4096/4096"));
    assert!(text.contains("counts and=36 xor=65"));
    assert!(text.contains("depth 1A+5X"));
}

#[test]
fn verify_all_methods_for_type1() {
    let out = gnbmul(&["verify", "--k", "4", "--type", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("naive equivalence"));
    assert!(text.contains("onb1 equivalence"));
    assert!(text.contains("odd-decomp equivalence"));
}

#[test]
fn verify_random_mode_prints_seed() {
    let out = gnbmul(&[
        "verify", "--k", "20", "--type", "3", "--method", "odd-decomp", "--random", "200",
        "--seed", "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("# seed=7"));
    assert!(text.contains("equivalence 200/200"));
}

#[test]
fn compare_prints_formula_rows() {
    let out = gnbmul(&["compare", "--k", "6", "--type", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "method,and,xor,delay\n\
         naive,36,96,1A+5X\n\
         xebp,36,63,1A+5X\n\
         aebp,15,78,1A+5X\n\
         ours,36,65,1A+5X\n"
    );
}

#[test]
fn scan_csv_and_summary() {
    let out = gnbmul(&["scan", "--from", "2", "--to", "10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,smallest_type,classification");
    assert_eq!(lines[1], "2,1,onb-type1");
    assert_eq!(lines[7], "8,,none");
    assert!(lines.last().unwrap().starts_with("# summary"));
}

#[test]
fn scan_odd_only_filters_rows() {
    let out = gnbmul(&["scan", "--from", "2", "--to", "60", "--odd-only"]);
    let text = stdout(&out);
    let data: Vec<&str> = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("k,"))
        .collect();
    assert_eq!(
        data,
        vec![
            "20,3,odd-gnb",
            "22,3,odd-gnb",
            "34,9,odd-gnb",
            "42,5,odd-gnb",
            "44,9,odd-gnb",
            "46,3,odd-gnb",
            "54,3,odd-gnb",
        ]
    );
}

#[test]
fn scan_full_range_odd_count() {
    let out = gnbmul(&["scan", "--from", "2", "--to", "1000", "--odd-only"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let data_rows = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("k,"))
        .count();
    assert_eq!(data_rows, 187);
    assert!(text.contains("odd-gnb=187"));
}

#[test]
fn exit_codes() {
    // invalid arguments
    assert_eq!(gnbmul(&["matrix", "--k", "3"]).status.code(), Some(2));
    assert_eq!(gnbmul(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        gnbmul(&["matrix", "--k", "3", "--type", "2", "--bit", "9"]).status.code(),
        Some(2)
    );
    assert_eq!(
        gnbmul(&["synth", "--k", "3", "--type", "2", "--method", "onb1", "--out", "/tmp/x.gnbmul"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gnbmul(&["verify", "--k", "3", "--type", "2", "--exhaustive", "--random", "5"])
            .status
            .code(),
        Some(2)
    );
    // nonexistent basis
    assert_eq!(gnbmul(&["info", "--k", "8"]).status.code(), Some(3));
    assert_eq!(
        gnbmul(&["verify", "--k", "3", "--type", "1"]).status.code(),
        Some(3)
    );
    // help exits 0
    assert_eq!(gnbmul(&["--help"]).status.code(), Some(0));
}

#[test]
fn golden_netlist_bytes_are_reproducible() {
    let dir = std::env::temp_dir().join("gnbmul-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    for (k, t, method, golden) in [
        ("3", "2", "naive", include_str!("golden/k3_t2_naive.gnbmul")),
        ("4", "1", "onb1", include_str!("golden/k4_t1_onb1.gnbmul")),
        ("6", "3", "odd-decomp", include_str!("golden/k6_t3_odd-decomp.gnbmul")),
    ] {
        let path = dir.join(format!("golden-{k}-{t}-{method}"));
        let out = gnbmul(&[
            "synth", "--k", k, "--type", t, "--method", method, "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        let written = std::fs::read_to_string(&path).unwrap();
        assert_eq!(written, golden, "golden bytes for ({k},{t},{method})");
    }
}
