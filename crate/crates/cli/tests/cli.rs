use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yhecke"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Exit code and the single diagnostic line.
fn failure(args: &[&str]) -> (i32, String) {
    let out = run(args);
    assert!(out.stdout.is_empty(), "{args:?} printed to stdout");
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{args:?}: {err:?}");
    (out.status.code().unwrap(), err)
}

const BETA_1: &str = "1 1 -2 -3 -2 1 1 1 -2 3 -2 1";
const BETA_2: &str = "-1 2 2 2 -1 -3 2 2 2 -3";
// 2 (uγ)^-4 (2u² − u⁴ + v²)², expanded
const BETA_VALUE: &str = "2 * u^4 * g^-4 + -8 * u^2 * g^-4 + -4 * v^2 * g^-4 + 8 * g^-4 \
+ 8 * u^-2 * v^2 * g^-4 + 2 * u^-4 * v^4 * g^-4";

#[test]
fn homflypt_golden() {
    assert_eq!(
        stdout(&["homflypt", "--n", "2", "--word", "1 1 1"]),
        "-1 * u^4 + 2 * u^2 + 1 * v^2\n"
    );
    assert_eq!(
        stdout(&["homflypt", "--n", "3", "--word", ""]),
        "1 * u^4 * v^-2 + -2 * u^2 * v^-2 + 1 * v^-2\n"
    );
    // σ_1σ_1⁻¹ closes to the two-component unlink
    assert_eq!(
        stdout(&["homflypt", "--n", "2", "--word", "1 -1"]),
        "-1 * u^2 * v^-1 + 1 * v^-1\n"
    );
    assert_eq!(stdout(&["homflypt", "--n", "1", "--word", ""]), "1\n");
    assert_eq!(stdout(&["homflypt", "--n", "3", "--word", "1 -2"]), "1\n");
    assert_eq!(
        stdout(&["homflypt", "--n", "2", "--word", "1 1 1", "--machine"]),
        "4 0 0 -1\n2 0 0 2\n0 2 0 1\n"
    );
}

#[test]
fn invariant_golden() {
    let inv = |d: &str, n: &str, mu0: &str, w: &str| {
        stdout(&["invariant", "--d", d, "--n", n, "--mu0", mu0, "--word", w])
    };
    assert_eq!(inv("1", "2", "1", "1"), "mu0=(1) : 1\n");
    assert_eq!(inv("2", "2", "1,1", "1 1 1"), "mu0=(1,1) : 0\n");
    assert_eq!(
        inv("2", "4", "1,1", BETA_1),
        format!("mu0=(1,1) : {BETA_VALUE}\n")
    );
    assert_eq!(
        inv("2", "4", "(1,1)", BETA_2),
        format!("mu0=(1,1) : {BETA_VALUE}\n")
    );

    let all = stdout(&[
        "invariant",
        "--d",
        "2",
        "--n",
        "2",
        "--all-basic",
        "--word",
        "1 1 1",
    ]);
    let trefoil = "-1 * u^4 + 2 * u^2 + 1 * v^2";
    assert_eq!(
        all,
        format!("mu0=(1,0) : {trefoil}\nmu0=(0,1) : {trefoil}\nmu0=(1,1) : 0\n")
    );

    let machine = stdout(&[
        "invariant",
        "--d",
        "2",
        "--n",
        "2",
        "--mu0",
        "1,0",
        "--word",
        "1 1 1",
        "--machine",
    ]);
    assert_eq!(machine, "mu0=(1,0)\n4 0 0 -1\n2 0 0 2\n0 2 0 1\n");
}

#[test]
fn spec_files_round_trip() {
    let listed = stdout(&["list-traces", "--d", "2", "--subset", "1,2"]);
    assert_eq!(
        listed,
        "mu0 = (0,1) ; alpha = 1/2\nmu0 = (1,0) ; alpha = 1/2\n\
         mu0 = (1,1) ; alpha = -1/2 * u^2 * v^-1 + 1/2 * v^-1\n"
    );
    let path = std::env::temp_dir().join(format!("yhecke-spec-{}.txt", std::process::id()));
    std::fs::write(&path, &listed).unwrap();
    let word = "1 t2^1 -2 1 1";
    let via_spec = stdout(&[
        "invariant",
        "--d",
        "2",
        "--n",
        "3",
        "--spec",
        path.to_str().unwrap(),
        "--word",
        word,
    ]);
    let via_jl = stdout(&[
        "jl", "--d", "2", "--n", "3", "--subset", "1,2", "--word", word,
    ]);
    std::fs::remove_file(&path).ok();
    assert_eq!(via_spec, format!("spec : {via_jl}"));

    assert_eq!(
        stdout(&["list-traces", "--d", "2"]),
        "mu0 = (1,0) ; alpha = 1\nmu0 = (0,1) ; alpha = 1\nmu0 = (1,1) ; alpha = 1\n"
    );
}

#[test]
fn jl_numeric_unknot() {
    let out = stdout(&[
        "jl", "--d", "3", "--n", "3", "--subset", "1,3", "--word", "1 -2", "--q", "0.7,0.2", "--z",
        "-0.3,1.1",
    ]);
    assert_eq!(out, "1.000000000000 0.000000000000\n");
}

#[test]
fn verify_suites_pass() {
    for args in [
        ["--suite", "iso", "--d", "2", "--n", "4"],
        ["--suite", "schur", "--d", "3", "--n", "3"],
        ["--suite", "markov", "--d", "2", "--n", "3"],
        ["--suite", "jl", "--d", "2", "--n", "3"],
    ] {
        let out = run(&[&["verify"][..], &args[..]].concat());
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(out.status.success(), "{args:?}:\n{text}");
        assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
    }
    let iso = stdout(&["verify", "--suite", "iso", "--d", "2", "--n", "4"]);
    // 5 blocks × 10 generators from the printed table
    assert_eq!(
        iso.lines()
            .filter(|l| l.starts_with("PASS iso.table."))
            .count(),
        50
    );
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify", "--suite", "markov", "--d", "2", "--n", "2", "--seed", "9",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = [
        "invariant",
        "--d",
        "3",
        "--n",
        "3",
        "--all-basic",
        "--word",
        "1 t1^2 -2 1 t3^1 2",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn errors_are_one_line() {
    assert_eq!(failure(&["homflypt", "--n", "2", "--word", "2"]).0, 1);
    assert_eq!(failure(&["homflypt", "--n", "2", "--word", "x"]).0, 1);
    assert_eq!(failure(&["homflypt", "--n", "2", "--word", "t1^1"]).0, 1);
    assert_eq!(
        failure(&[
            "invariant",
            "--d",
            "2",
            "--n",
            "2",
            "--mu0",
            "2,0",
            "--word",
            "1"
        ])
        .0,
        1
    );
    assert_eq!(
        failure(&[
            "invariant",
            "--d",
            "2",
            "--n",
            "2",
            "--mu0",
            "1,0,0",
            "--word",
            "1"
        ])
        .0,
        1
    );
    assert_eq!(
        failure(&[
            "invariant",
            "--d",
            "9",
            "--n",
            "2",
            "--mu0",
            "1",
            "--word",
            "1"
        ])
        .0,
        1
    );
    assert_eq!(
        failure(&["jl", "--d", "2", "--n", "2", "--subset", "3", "--word", "1"]).0,
        1
    );
    assert_eq!(
        failure(&[
            "jl", "--d", "2", "--n", "2", "--subset", "1", "--word", "1", "--q", "0,0", "--z",
            "1,0"
        ])
        .0,
        1
    );

    let (code, msg) = failure(&["homflypt", "--n", "2"]);
    assert_eq!(code, 2);
    assert!(msg.contains("--word"), "{msg}");
    assert_eq!(
        failure(&["invariant", "--d", "2", "--n", "2", "--word", "1"]).0,
        2
    );
    assert_eq!(
        failure(&["jl", "--d", "2", "--n", "2", "--subset", "1", "--word", "1", "--q", "1,0"]).0,
        2
    );
    assert_eq!(
        failure(&["verify", "--suite", "iso", "--d", "5", "--n", "2"]).0,
        2
    );
    assert_eq!(
        failure(&["verify", "--suite", "nope", "--d", "2", "--n", "2"]).0,
        2
    );
    assert_eq!(failure(&["frobnicate"]).0, 2);
    assert_eq!(failure(&[]).0, 2);
}
