use std::path::PathBuf;
use std::process::{Command, Output};

use semismooth::cli::schema::CorpusItem;
use semismooth::cli::{corpus, Report};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_semismooth"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn payload_file(name: &str) -> PathBuf {
    let item: CorpusItem = corpus::find(name).unwrap().expect("bundled item");
    write(&format!("{name}.json"), &serde_json::to_string_pretty(&item.payload).unwrap())
}

fn write(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("semismooth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn report(o: &Output) -> Report {
    serde_json::from_slice(&o.stdout).expect("JSON report")
}

#[test]
fn corpus_run_passes_and_is_byte_identical() {
    let a = run(&["corpus", "run", "--json"]);
    let b = run(&["corpus", "run", "--json"]);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
    let reports: Vec<Report> = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(reports.len(), corpus::items().unwrap().len());
}

#[test]
fn corpus_list_names_every_item() {
    let o = run(&["corpus", "list"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    for name in ["pinch", "dc", "identity", "cover-1", "cover-w", "cover-w(w-1)", "p1-m-3", "p1-m3", "family-uv-t"] {
        assert!(text.lines().any(|l| l.split_whitespace().next() == Some(name)), "{name}");
    }
}

#[test]
fn t1_of_pinch_and_double_crossing() {
    let o = run(&["t1", "--json", payload_file("hs-pinch").to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    assert_eq!(r.witnesses["singular_ideal"], "(u, v*w, v^2)");
    let o = run(&["t1", "--json", payload_file("hs-dc").to_str().unwrap()]);
    assert_eq!(report(&o).witnesses["singular_ideal"], "(v, u)");
    let o = run(&["t1", "--json", payload_file("hs-smooth").to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(report(&o).checks.iter().any(|c| c.detail == "smooth"));
}

#[test]
fn glue_exit_codes() {
    assert_eq!(code(&run(&["glue", payload_file("pinch").to_str().unwrap()])), 0);
    assert_eq!(code(&run(&["glue", payload_file("dc").to_str().unwrap()])), 0);
    let bad = run(&["glue", payload_file("pinch-corrupted").to_str().unwrap()]);
    assert_eq!(code(&bad), 1);
    assert!(String::from_utf8_lossy(&bad.stdout).contains("[fail] pushout: c"));
}

#[test]
fn input_errors_exit_with_two() {
    let p = write("broken.json", "{\n  \"vars\": [\"x\",\n}");
    let o = run(&["t1", p.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let p = write("unknown-var.json", r#"{"vars": ["x"], "relations": ["x*q"]}"#);
    assert_eq!(code(&run(&["t1", p.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["verify", "thm9.9", "pinch"])), 2);
    assert_eq!(code(&run(&["verify", "thm5.1", "no-such-item"])), 2);
    assert_eq!(code(&run(&["glue", "/nonexistent/file.json"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn step_budget_exits_with_three() {
    let o = run(&["glue", "--step-budget", "3", payload_file("pinch").to_str().unwrap()]);
    assert_eq!(code(&o), 3, "{}", String::from_utf8_lossy(&o.stderr));
    let o = bin().args(["glue", payload_file("dc").to_str().unwrap()]).env("SEMISMOOTH_STEP_BUDGET", "3").output().unwrap();
    assert_eq!(code(&o), 3);
}

#[test]
fn verify_examples() {
    let o = run(&["verify", "--json", "thm5.1", "pinch"]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    assert!(r.checks.iter().all(|c| c.name.starts_with("thm5.1")));
    assert!(r.checks.iter().any(|c| c.name == "thm5.1: kernel spanned by the given fields"));
    assert_eq!(code(&run(&["verify", "thm5.3", "cover-w"])), 0);
    assert_eq!(code(&run(&["verify", "thm2.11", "family-smooth"])), 0);
    assert_eq!(code(&run(&["verify", "cor4.6", "p1-m2"])), 0);
    assert_eq!(code(&run(&["verify", "prop3.12", "family-pinch-normal-cone"])), 0);
    // the negative control is rejected for the documented reason
    let o = run(&["verify", "thm2.11", "family-u2-tv"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("[fail] thm2.11: t=0: fiber generically smooth"));
}

#[test]
fn order_override_keeps_results() {
    let o = run(&["glue", "--order", "lex", payload_file("pinch").to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    assert_eq!(code(&run(&["glue", "--order", "nonsense", payload_file("pinch").to_str().unwrap()])), 2);
}

#[test]
fn p1_subcommand() {
    for m in ["-3", "0", "3"] {
        assert_eq!(code(&run(&["p1", m])), 0);
    }
}
