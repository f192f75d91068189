use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn twocat(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_twocat")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn run(args: &[&str]) -> (i32, String) {
    let args: Vec<String> = args
        .iter()
        .map(|a| if data(a).exists() && !a.is_empty() { data(a).display().to_string() } else { a.to_string() })
        .collect();
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    let (code, out, _) = twocat(&refs);
    (code, out)
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("twocat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn validate_two_exits_zero() {
    let (code, out) = run(&["validate", "two.2cat"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("valid=yes"));
    assert!(out.contains("elevator_agree=yes"));
}

#[test]
fn colim_terminal_oracle_reports_equivalence() {
    let (code, out) = run(&["colim", "pick.diag", "--check-terminal-oracle"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("equivalence=yes"), "{out}");
    assert!(out.contains("terminal=1"));
}

#[test]
fn lift_iso_square_gives_inverse_filler() {
    let (code, out) = run(&["lift", "sq.json"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("(gb,γ,id)"), "{out}");
}

#[test]
fn canonical_files_round_trip_byte_for_byte() {
    let dir = data("");
    let mut n = 0;
    for e in std::fs::read_dir(&dir).unwrap() {
        let p = e.unwrap().path();
        let text = std::fs::read_to_string(&p).unwrap();
        let (code, out, err) = twocat(&["canonical", p.to_str().unwrap()]);
        assert_eq!(code, 0, "{}: {err}", p.display());
        assert_eq!(out, text, "{} is not canonical", p.display());
        n += 1;
    }
    assert!(n >= 20);
}

#[test]
fn canonical_form_is_a_fixed_point() {
    let loose = scratch(
        "loose.cat",
        r#"{"format_version":1,"objects":["a","b"],"morphisms":[{"name":"f","src":"a","tgt":"b"},{"name":"id_b","src":"b","tgt":"b"},{"name":"id_a","src":"a","tgt":"a"}],"identities":["id_a","id_b"],"compose":[["f","id_a","f"]]}"#,
    );
    let (code, once, _) = twocat(&["canonical", loose.to_str().unwrap()]);
    assert_eq!(code, 0);
    let again = scratch("again.cat", &once);
    let (_, twice, _) = twocat(&["canonical", again.to_str().unwrap()]);
    assert_eq!(once, twice);
    assert!(!once.contains("id_a\", \"f"), "unit entries are implied:\n{once}");
}

#[test]
fn schema_errors_exit_two() {
    let p = scratch("extra.cat", r#"{"format_version": 1, "objects": [], "morphisms": [], "identities": [], "bogus": 1}"#);
    let (code, _, err) = twocat(&["validate", p.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("SchemaError") && err.contains("bogus"), "{err}");

    let p = scratch("version.cat", r#"{"format_version": 9, "objects": [], "morphisms": [], "identities": []}"#);
    let (code, _, err) = twocat(&["validate", p.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("format_version"), "{err}");

    let p = scratch("truncated.2cat", "{");
    assert_eq!(twocat(&["check-filtered", p.to_str().unwrap()]).0, 2);
}

#[test]
fn unknown_names_exit_two() {
    let p = scratch(
        "dangling.cat",
        r#"{"format_version": 1, "objects": ["*"], "morphisms": [{"name": "id_*", "src": "*", "tgt": "Q"}], "identities": ["id_*"]}"#,
    );
    let (code, _, err) = twocat(&["validate", p.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("UnknownName") && err.contains("morphisms[0].tgt"), "{err}");

    let (code, _) = run(&["eval", "z2-cells.2cat", "nope"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["straighten", "x.pro", "--object", "nowhere"]);
    assert_eq!(code, 2);
}

#[test]
fn broken_associativity_is_a_negative_verdict() {
    let (code, out) = run(&["validate", "broken.cat"]);
    assert_eq!(code, 1);
    assert!(out.contains("AssociativityViolation"), "{out}");
}

#[test]
fn law_breaking_input_to_other_commands_is_an_input_error() {
    let (code, _, err) = twocat(&["hat", data("broken.cat").to_str().unwrap()]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn dot_draws_cells_as_parallel_edges() {
    let (code, out) = run(&["export-dot", "z2-cells.2cat"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
    assert_eq!(out.matches("style=dashed").count(), 1, "identity cells are skipped:\n{out}");
    let (_, out) = run(&["export-dot", "iso-square.2cat"]);
    assert!(out.contains("\"A\" -> \"X\" [label=\"i\"]"), "{out}");
    assert!(!out.contains("id_A"));
}

#[test]
fn structured_output_is_json() {
    let (code, out) = run(&["--format", "structured", "lift", "sq.json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["fields"]["form"], "(gb,γ,id)");
    assert_eq!(v["verdict"], true);

    let (code, out) = run(&["--format", "structured", "validate", "broken.cat"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], false);
}

#[test]
fn output_is_deterministic() {
    for args in [&["colim", "pick.diag", "--check-terminal-oracle"][..], &["mj", "two.2cat"], &["validate", "iso-square.2cat", "--seed", "7"]] {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn shape_commands() {
    assert_eq!(run(&["check-filtered", "two.2cat"]).0, 0);
    assert_eq!(run(&["check-cofinal", "top.pfun"]).0, 0);
    let (code, out) = run(&["mj", "two.2cat", "--n", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("phi_cofinal=yes"));
    let (code, out) = run(&["hat", "chain3.cat", "--into", "two.2cat", "--bound", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("counts_agree=yes") && out.contains("transport_inverse=yes"));
}

#[test]
fn kan_commands() {
    let (code, out) = run(&["lim", "pick-op.diag"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("objects=1"));
    assert_eq!(run(&["lim", "pick.diag"]).0, 2);
    assert_eq!(run(&["factor", "pick.cone"]).0, 0);
    let (code, out) = run(&["compare", "top.pfun", "pick.diag"]);
    assert_eq!(code, 0);
    assert!(out.contains("equivalence=yes"));
}

#[test]
fn pro_commands() {
    let (code, out) = run(&["pro-hom", "c0.pro", "c2.pro"]);
    assert_eq!(code, 0);
    assert!(out.contains("objects=1") && out.contains("0<=2 π_*"), "{out}");
    for args in [
        &["represent", "x.pro", "c2.pro"][..],
        &["straighten", "x.pro", "--object", "2"],
        &["mf", "x.pro", "x.pro"],
        &["kx", "x.pro"],
        &["reindex", "x.pro", "top.pfun"],
        &["equalize", "x.pro", "--object", "2", "--at", "0", "--pair", "1_1<=2,1_1<=2"],
    ] {
        let (code, out) = run(args);
        assert_eq!(code, 0, "{args:?}\n{out}");
    }
    let (code, out) = run(&["equalize", "x.pro", "--object", "2", "--at", "0", "--pair", "1_0<=2,1_0<=2"]);
    assert_eq!(code, 1);
    assert!(out.contains("hypothesis=fails"));
}

#[test]
fn model_commands() {
    let (code, out) = run(&["model-check", "trivial.classes"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("2-M0b=not checked"));
    assert!(out.contains("2-M5=pass"));
    let (code, out) = run(&["model-check", "chain3.classes"]);
    assert_eq!(code, 1);
    assert!(out.contains("2-M2=fail"));
    let (code, out) = run(&["retract", "iso-square.2cat", "--f", "pa", "--i", "a", "--p", "p", "--gamma", "1_pa", "--case", "of-i"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("retract=yes"));
}

#[test]
fn eval_compares_expressions() {
    let (code, out) = run(&["eval", "z2-cells.2cat", "t1 . t1", "--equals", "t1 v t1"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("value=t0") && out.contains("equal=yes"));
    let (code, _) = run(&["eval", "z2-cells.2cat", "t1", "--equals", "t0"]);
    assert_eq!(code, 1);
}
