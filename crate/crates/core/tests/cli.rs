use std::process::{Command, Output};

fn gonograph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gonograph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_and_graph_file_round_trip() {
    let o = gonograph(&["gen", "--family", "strip", "--n", "3"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "{\"vertices\":4,\"edges\":[[0,1,1],[0,2,1],[1,2,1],[1,3,1],[2,3,1]]}\n"
    );

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fan4.json");
    let path = path.to_str().unwrap();
    assert!(
        gonograph(&["gen", "--family", "fan", "--n", "4", "--out", path])
            .status
            .success()
    );
    let o = gonograph(&["jacobian", "--graph", path]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("invariants: [1, 1, 1, 21]"), "{text}");
    assert!(
        text.contains("generator images: [0, 13, 5, 2, 1]"),
        "{text}"
    );
    assert!(text.contains("A: {0, 1, 2, 5, 13} mod 21"), "{text}");
}

#[test]
fn kappa_and_rank() {
    let o = gonograph(&[
        "kappa", "--family", "strip", "--n", "8", "--i", "1", "--j", "3",
    ]);
    assert_eq!(stdout(&o).trim(), (2 * 233).to_string());
    let o = gonograph(&[
        "rank",
        "--family",
        "strip",
        "--n",
        "8",
        "--divisor",
        "3@0,2@1",
    ]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = gonograph(&["rank", "--family", "strip", "--n", "8", "--divisor", "-1@3"]);
    assert_eq!(stdout(&o).trim(), "-1");
}

#[test]
fn reduce_prints_trace() {
    let o = gonograph(&[
        "reduce",
        "--family",
        "strip",
        "--n",
        "8",
        "--divisor",
        "2@0,2@2",
        "--base",
        "8",
    ]);
    assert_eq!(
        stdout(&o),
        "fire [0] -> 1@1,3@2\n\
         fire [0, 1, 2] -> 1@2,2@3,1@4\n\
         fire [0, 1, 2, 3] -> 3@4,1@5\n\
         reduced: 3@4,1@5\n\
         firing vector: [3, 2, 2, 1, 0, 0, 0, 0, 0]\n"
    );
}

#[test]
fn gonality_methods_agree() {
    for method in ["sumset", "dhar"] {
        let o = gonograph(&[
            "gonality", "--family", "strip", "--n", "8", "--method", method,
        ]);
        assert!(stdout(&o).starts_with("gonality: 5\n"), "{method}");
    }
    let o = gonograph(&[
        "gonality", "--family", "fan", "--n", "6", "--method", "sumset", "--rank", "2",
    ]);
    assert!(o.status.success());
}

#[test]
fn sumset_lists_zeckendorf_forms() {
    let o = gonograph(&["sumset", "--family", "strip", "--n", "8", "--m", "2"]);
    let text = stdout(&o);
    assert!(text.starts_with("# 2A mod 987:"));
    assert!(text.contains("\n233\tF13\n"));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        gonograph(&["verify", "--check", "main-theorem"])
            .status
            .code(),
        Some(0)
    );
    // one documented claim about strip n=7 does not hold
    assert_eq!(
        gonograph(&["verify", "--check", "dhar-traces"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        gonograph(&["verify", "--check", "no-such-check"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gonograph(&["verify", "--check", "classify-3a", "--n-max", "99"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(gonograph(&["verify"]).status.code(), Some(2));
    assert_eq!(gonograph(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_reports_are_reproducible() {
    for format in ["text", "json", "csv"] {
        let args = [
            "verify",
            "--check",
            "cross-method-gonality",
            "--check",
            "genus-fib",
            "--format",
            format,
        ];
        let a = gonograph(&args);
        let b = gonograph(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{format}");
    }
}

#[test]
fn verify_json_shape() {
    let o = gonograph(&["verify", "--check", "main-theorem", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["check_id"], "main-theorem");
    assert_eq!(v["status"], "pass");
    let actual: Vec<String> = v["details"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["actual"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(
        actual,
        ["1", "1", "2", "2", "3", "3", "4", "4", "5", "5", "5"]
    );
}
