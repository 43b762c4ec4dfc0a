use std::process::{Command, Output};

use peakmatch::render::MapTrace;
use peakmatch::{Census, CountReport, Matching, Permutation};

fn peakmatch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_peakmatch"))
        .args(args)
        .env_remove("PEAKMATCH_MAX_N")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = peakmatch(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn map_text_even() {
    assert_eq!(
        stdout(&["map", "5 3 8 1 4 2 7 6"]),
        "\
sigma        = 5 3 8 1 4 2 7 6
reverse      = 6 7 2 4 1 8 3 5
tau          = (6,7)(2,4)(1,8,3,5)
above arcs   = {2,4} {3,5} {6,7} {1,8}
below arcs   = {2,4} {1,5} {6,7} {3,8}
closer set   = {4,5,7,8}
peak set     = {4,5,7,8}
"
    );
}

#[test]
fn map_accepts_separate_arguments() {
    assert_eq!(
        stdout(&["map", "8", "6", "7", "3", "4", "1", "9", "2", "5"]),
        stdout(&["map", "8 6 7 3 4 1 9 2 5"])
    );
}

#[test]
fn map_json_parses_back() {
    let text = stdout(&["map", "8 6 7 3 4 1 9 2 5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let sigma: Permutation = serde_json::from_value(v["sigma"].clone()).unwrap();
    assert_eq!(sigma, "8 6 7 3 4 1 9 2 5".parse().unwrap());
    assert_eq!(
        v["cycles"],
        serde_json::json!([[0, 5, 2, 9, 1, 4, 3, 7, 6, 8]])
    );
    assert_eq!(v["closers"], v["peaks"]);
    let above: Matching = serde_json::from_value(v["pair"]["above"].clone()).unwrap();
    assert_eq!(above.arcs(), [(1, 4), (0, 5), (3, 7), (6, 8), (2, 9)]);
    let expected: MapTrace = peakmatch::render::trace(&sigma).unwrap();
    assert_eq!(text.trim_end(), serde_json::to_string(&expected).unwrap());
}

#[test]
fn map_ascii_and_dot() {
    let text = stdout(&["map", "2 1", "--ascii"]);
    assert!(text.ends_with("+---+\n1   2\n+---+\n"), "{text}");
    let dot = stdout(&["map", "2 1", "--format", "dot"]);
    assert!(dot.starts_with("graph arc_diagram {"));
    assert!(dot.contains("1 -- 2 [class=below, style=dashed];"));
}

#[test]
fn map_rejects_bad_input() {
    for word in ["1 2 3", "2 2", "2 x", "0 1"] {
        let out = peakmatch(&["map", word]);
        assert_eq!(out.status.code(), Some(2), "{word}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn count_text_and_json() {
    assert_eq!(
        stdout(&["count", "--n", "8", "--peaks", "4,5,7,8"]),
        "n = 8, peak set {4,5,7,8}\nfactors = (3)(3) (2)(2) (2)(2)\ncount = 144\n"
    );
    let json = stdout(&[
        "count",
        "--n",
        "9",
        "--peaks",
        "4,5,7,8,9",
        "--format",
        "json",
    ]);
    let report: CountReport = serde_json::from_str(&json).unwrap();
    assert_eq!(report.formula_count, 864);
    assert_eq!(
        peakmatch(&["count", "--n", "8", "--peaks", "2,5,7"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn euler_listing() {
    assert_eq!(
        stdout(&["euler", "--max-n", "6"]),
        "0 1\n1 1\n2 1\n3 2\n4 5\n5 16\n6 61\n"
    );
    assert_eq!(
        peakmatch(&["euler", "--max-n", "31"]).status.code(),
        Some(2)
    );
    let wide = Command::new(env!("CARGO_BIN_EXE_peakmatch"))
        .args(["euler", "--max-n", "31"])
        .env("PEAKMATCH_MAX_N", "31")
        .output()
        .unwrap();
    assert!(wide.status.success());
}

#[test]
fn census_text_and_json() {
    assert_eq!(
        stdout(&["census", "--n", "4"]),
        "{2,4} 1\n{3,4} 4\ntotal 5\n"
    );
    let json = stdout(&["census", "--n", "7", "--format", "json", "--jobs", "1"]);
    let census: Census = serde_json::from_str(&json).unwrap();
    assert_eq!(census.total(), 272);
    assert_eq!(json.trim_end(), serde_json::to_string(&census).unwrap());
}

#[test]
fn matchings_listing() {
    assert_eq!(
        stdout(&["matchings", "--n", "4", "--closers", "3,4"]),
        "{1,3} {2,4}\n{2,3} {1,4}\n"
    );
    assert_eq!(
        stdout(&[
            "matchings",
            "--n",
            "8",
            "--closers",
            "4,5,7,8",
            "--count-only"
        ]),
        "formula = 12, enumerated = 12\n"
    );
    let json = stdout(&[
        "matchings",
        "--n",
        "4",
        "--closers",
        "3,4",
        "--format",
        "json",
    ]);
    let ms: Vec<Matching> = json
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(ms.len(), 2);
    assert!(stdout(&["matchings", "--n", "4", "--closers", "2,3"]).is_empty());
}

#[test]
fn verify_runs_and_reports() {
    let text = stdout(&["verify", "--n", "2..6", "--k", "1..3", "--jobs", "1"]);
    assert!(text.lines().all(|l| l.contains(": ok")), "{text}");
    assert!(text.contains("lemma k=3: ok"));
    assert!(text.contains("odd-pairs n=5: ok"));

    let only = stdout(&["verify", "--lemma", "--k", "4"]);
    assert_eq!(only.lines().count(), 1);

    let json = stdout(&["verify", "--theorem", "--n", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(json.lines().next().unwrap()).unwrap();
    assert_eq!(v["check"], "theorem");
    assert_eq!(v["size"], 6);
    assert_eq!(v["passed"], true);

    assert_eq!(peakmatch(&["verify", "--n", "9..2"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(peakmatch(&[]).status.code(), Some(2));
    assert_eq!(peakmatch(&["frobnicate"]).status.code(), Some(2));
    assert!(peakmatch(&["--help"]).status.success());
}
