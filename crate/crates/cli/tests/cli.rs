use std::process::{Command, Output};

fn bin(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bosonic-polytope"));
    cmd.args(args).env_remove("BOSONIC_POLYTOPE_THREADS");
    if let Some(t) = threads {
        cmd.env("BOSONIC_POLYTOPE_THREADS", t);
    }
    cmd.output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    bin(args, None).status.code().unwrap()
}

#[test]
fn output_is_identical_across_runs_and_pool_sizes() {
    let cases: [&[&str]; 4] = [
        &["oracle", "verify", "--N", "3", "--d", "4", "--r", "3", "--trials", "60", "--seed", "42"],
        &["oracle", "hubbard", "--J", "1", "--U", "4", "--N", "3", "--sites", "3", "--w", "0.6,0.4"],
        &["lineups", "--N", "4", "--d", "5", "--r", "5"],
        &["figure-data", "minkowski", "--N", "3", "--Nprime", "5", "--d", "3", "--w", "0.5,0.3,0.2"],
    ];
    for args in cases {
        let reference = bin(args, Some("1"));
        assert!(reference.status.success());
        for threads in [None, Some("1"), Some("3")] {
            let again = bin(args, threads);
            assert_eq!(again.stdout, reference.stdout, "{args:?} with {threads:?}");
        }
    }
}

#[test]
fn different_seeds_draw_different_trials() {
    let run = |seed: &str| {
        bin(&["oracle", "verify", "--N", "2", "--d", "3", "--r", "2", "--trials", "5", "--seed", seed], None).stdout
    };
    assert_eq!(run("1"), run("1"));
    assert_ne!(run("1"), run("2"));
}

#[test]
fn success_exits_zero() {
    assert_eq!(code(&["lineups", "--N", "3", "--d", "4", "--r", "4"]), 0);
    assert_eq!(code(&["table1", "--rmax", "4", "--format", "csv"]), 0);
    assert_eq!(code(&["--help"]), 0);
    // A spectrum outside the polytope is a result, not a failure.
    let out = bin(
        &["polytope", "contains", "--N", "2", "--d", "3", "--w", "0.7,0.3", "--spectrum", "1.8,0.2,0"],
        None,
    );
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"member\": false"));
}

#[test]
fn failed_checks_exit_one() {
    // Demanding an interior margin larger than the polytope allows.
    let args = [
        "oracle", "hubbard", "--J", "1", "--U", "4", "--N", "3", "--sites", "3", "--w", "0.6,0.4",
        "--tolerance=-10",
    ];
    let out = bin(&args, None);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"membership\": false"));
}

#[test]
fn invalid_input_exits_two() {
    let usage: [&[&str]; 12] = [
        &["lineups", "--N", "3"],
        &["no-such-command"],
        &["lineups", "--N", "1", "--d", "4", "--r", "4"],
        &["polytope", "vertices", "--N", "3", "--d", "4", "--w", "0.5,0.5,x"],
        &["polytope", "vertices", "--N", "3", "--d", "4", "--w", "0.2,0.8"],
        &["polytope", "contains", "--N", "3", "--d", "4", "--w", "0.6,0.4", "--spectrum", "1,1,0.5,0"],
        &["polytope", "contains", "--N", "3", "--d", "4", "--w", "0.6,0.4", "--spectrum", "2,1"],
        &["facets", "--N", "3", "--r", "4", "--w", "0.6,0.4"],
        &["facets", "--N", "3", "--r", "6"],
        &["figure-data", "sigma", "--N", "2", "--d", "4", "--w", "0.6,0.4"],
        &["oracle", "hubbard", "--J", "1", "--U", "1", "--N", "7", "--sites", "3", "--w", "1"],
        &["lineups", "--N", "3", "--d", "4", "--r", "3", "--format", "xml"],
    ];
    for args in usage {
        let out = bin(args, None);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = bin(&["lineups", "--N", "3", "--d", "4", "--r", "3"], Some("zero"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unnormalized_weights_warn_on_stderr() {
    let out = bin(&["polytope", "vertices", "--N", "2", "--d", "3", "--w", "3,1"], None);
    assert!(out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("warning") && stderr.contains("3/4,1/4"), "{stderr}");
    let out = bin(&["polytope", "vertices", "--N", "2", "--d", "3", "--w", "3/4,1/4"], None);
    assert!(out.stderr.is_empty());
}
