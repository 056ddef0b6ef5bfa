use std::path::PathBuf;

use rough_matroid::cli::{run, CmdOutput};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn rm(args: &[&str]) -> CmdOutput {
    run(std::iter::once("rough-matroid").chain(args.iter().copied()))
}

#[test]
fn info_e1() {
    let out = rm(&["info", &data("e1.json")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert!(lines.contains(&"covering: {{a,b},{a,c}}"), "{}", out.stdout);
    assert!(lines.contains(&"unary: false"));
}

#[test]
fn approx_operators() {
    let out = rm(&["approx", &data("e1.json"), "--set", "b", "--op", "sh"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "{a,b}\n"));
    let out = rm(&["approx", &data("e1.json"), "--set", "a,b", "--op", "sh"]);
    assert_eq!(out.stdout, "{a,b,c}\n");
    let out = rm(&["approx", &data("e2.json"), "--set", "a,b,c", "--op", "sl"]);
    assert_eq!(out.stdout, "{a,b,c}\n");
    let out = rm(&["approx", &data("e1.json"), "--set", "b", "--op", "sl"]);
    assert_eq!(out.stdout, "{}\n");
}

#[test]
fn closure_warns_on_non_unary() {
    let out = rm(&["closure", &data("e1.json"), "--set", "b"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "{a,b}\n");
    assert!(out.stderr.contains("not unary"), "{}", out.stderr);

    let out = rm(&["closure", &data("e2.json"), "--set", "a"]);
    assert_eq!(out.stdout, "{a,b}\n");
    assert!(out.stderr.is_empty());
}

#[test]
fn matroid_outputs() {
    let out = rm(&["matroid", &data("e2.json")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(
        out.stdout.trim_end(),
        r#"{"independents":[[],["a"],["b"],["c"],["a","c"],["b","c"]],"rank":2}"#
    );

    let out = rm(&["matroid", &data("e3.json")]);
    assert_eq!(out.code, 2);
    let text = format!("{}{}", out.stdout, out.stderr);
    assert!(text.contains("CL4"), "{text}");
    assert!(text.contains("X={}, x=b, y=a"), "{text}");

    let out = rm(&["matroid", &data("e1.json")]);
    assert_eq!(out.code, 2);
}

#[test]
fn check_reports_sh_cl3_failure() {
    let out = rm(&["check", &data("e1.json")]);
    assert_eq!(out.code, 0);
    assert!(out
        .stdout
        .contains("CL3  FAIL  X={b}: cl(X)={a,b} but cl(cl(X))={a,b,c}"));
    assert!(!out.stdout.contains("disagree"));
}

#[test]
fn reduct_command() {
    let out = rm(&["reduct", &data("e3.json")]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("{{a},{a,b}}"), "{}", out.stdout);
    let out = rm(&["reduct", &data("triangle.json"), "--json"]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["blocks"].as_array().unwrap().len(), 3);
}

#[test]
fn input_errors_exit_one() {
    for args in [
        vec!["info".to_owned(), "/nonexistent/c.json".to_owned()],
        vec![
            "approx".to_owned(),
            data("e1.json"),
            "--set".into(),
            "z".into(),
            "--op".into(),
            "sl".into(),
        ],
        vec![
            "sweep".to_owned(),
            "--n".into(),
            "5".into(),
            "--exhaustive".into(),
        ],
        vec!["bogus".to_owned()],
    ] {
        let out = run(std::iter::once("rough-matroid".to_owned()).chain(args.clone()));
        assert_eq!(out.code, 1, "{args:?}: {}", out.stderr);
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn malformed_documents() {
    let dir = std::env::temp_dir().join(format!("rm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        (
            "uncovered.json",
            r#"{"universe":["a","b"],"blocks":[["a"]]}"#,
        ),
        (
            "empty_block.json",
            r#"{"universe":["a"],"blocks":[["a"],[]]}"#,
        ),
        ("unknown.json", r#"{"universe":["a"],"blocks":[["q"]]}"#),
        ("dup.json", r#"{"universe":["a","a"],"blocks":[["a"]]}"#),
        ("extra.json", r#"{"universe":["a"],"blocks":[["a"]],"x":1}"#),
    ];
    for (name, text) in cases {
        let path = dir.join(name);
        std::fs::write(&path, text).unwrap();
        let out = rm(&["info", path.to_str().unwrap()]);
        assert_eq!(out.code, 1, "{name}");
    }
}

#[test]
fn sweep_exit_and_json_file() {
    let path = std::env::temp_dir().join(format!("rm-sweep-{}.json", std::process::id()));
    let out = rm(&[
        "sweep",
        "--n",
        "3",
        "--exhaustive",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out
        .stdout
        .contains("coverings examined: 109 (expected 109)"));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["coverings_examined"], 109);
    assert_eq!(v["total_disagreements"], 0);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let e1 = data("e1.json");
    let commands: Vec<Vec<&str>> = vec![
        vec!["info", &e1],
        vec!["check", &e1],
        vec!["matroid", &e1],
        vec!["reduct", &e1, "--json"],
        vec!["sweep", "--n", "3", "--exhaustive"],
        vec!["sweep", "--n", "5", "--random", "200", "--seed", "42"],
    ];
    for args in commands {
        let a = rm(&args);
        let b = rm(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stderr, b.stderr, "{args:?}");
        assert_eq!(a.code, b.code);
    }
}
