use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_omegacanon"));
    c.env_remove("OMEGACANON_CAP");
    c
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn fx(name: &str) -> String {
    fixture(name).to_str().unwrap().to_string()
}

#[test]
fn wagner_on_the_running_example() {
    let o = run(&["wagner", &fx("inf-aa-fin-bb-dma")]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["m_plus"], 2);
    assert_eq!(v["m_minus"], 3);
    assert_eq!(v["class"]["k"], 3);
    assert_eq!(v["class"]["polarity"], "minus");
    let dpa = json(&run(&["wagner", &fx("inf-aa-fin-bb-dpa")]));
    assert_eq!(dpa["m_plus"], 2);
    assert_eq!(dpa["m_minus"], 3);
}

#[test]
fn capacity_errors_exit_3() {
    let o = run(&["wagner", "--cap", "2", &fx("inf-aa-fin-bb-dma")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(json(&o)["error"].is_string());
    let o = bin()
        .env("OMEGACANON_CAP", "2")
        .args(["wagner", &fx("inf-aa-fin-bb-dma")])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    // the flag wins over the environment
    let o = bin()
        .env("OMEGACANON_CAP", "2")
        .args(["wagner", "--cap", "12", &fx("inf-aa-fin-bb-dma")])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn input_and_domain_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"alphabet\": [\"a\"], \"states\": 1}").unwrap();
    assert_eq!(run(&["wagner", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["wagner", "/no/such/file.json"]).status.code(), Some(2));
    let o = run(&["bw", "dba", &fx("inf-aa-fin-bb-dma")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("color 3"));
    assert_eq!(run(&["color", &fx("inf-aa-fin-bb-dma"), "--v", "c"]).status.code(), Some(2));
    assert_eq!(run(&["selftest", "--bounds", "0,3"]).status.code(), Some(2));
}

#[test]
fn colors_from_the_command_line() {
    let m = fx("inf-aa-fin-bb-dma");
    for (v, k) in [("a", 3), ("aa", 2), ("bb", 1), ("aabb", 1)] {
        let o = run(&["color", &m, "--v", v]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(json(&o)["color"], k, "{v}");
    }
    for (v, k) in [("b", 1), ("abaa", 2), ("ab", 3), ("a", 2)] {
        let o = run(&["color", &m, "--v", v, "--infinite"]);
        assert_eq!(json(&o)["infinite_color"], k, "{v}");
    }
}

#[test]
fn colorful_and_diameter() {
    let o = run(&["colorful", &fx("inf-aa-fin-bb-dma"), "--u", "", "--v", "ab"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["leading_states"], 1);
    assert_eq!(v["progress_states"], serde_json::json!([6]));
    assert_eq!(v["color"], 3);
    let d = json(&run(&["diameter", &fx("colorful-inf-aa-fin-bb")]));
    assert_eq!((d["d_plus"].as_u64(), d["d_minus"].as_u64()), (Some(2), Some(3)));
    let d = json(&run(&["diameter", &fx("inf-aa-fin-bb-dma")]));
    assert_eq!((d["d_plus"].as_u64(), d["d_minus"].as_u64()), (Some(2), Some(3)));
}

#[test]
fn decisions_exit_1_when_false_and_witnesses_recheck() {
    let o = run(&["fdfa-ops", "equiv", &fx("syntactic-inf-aa-fin-bb"), &fx("colorful-inf-aa-fin-bb")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["equivalent"], true);

    let o = run(&["fdfa-ops", "contains", &fx("colorful-inf-aa-fin-bb"), &fx("inf-aa-fdfa")]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["contains"], false);
    let (u, p) = (v["witness"]["u"].as_str().unwrap(), v["witness"]["v"].as_str().unwrap());
    let small = json(&run(&["accepts", &fx("inf-aa-fdfa"), "--u", u, "--v", p]));
    let big = json(&run(&["accepts", &fx("colorful-inf-aa-fin-bb"), "--u", u, "--v", p]));
    assert_eq!(small["accepted"], true);
    assert_eq!(big["accepted"], false);

    // the witness document can also be passed back as a file
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    std::fs::write(&w, v["witness"].to_string()).unwrap();
    let o = run(&["accepts", &fx("inf-aa-fdfa"), "--upword", w.to_str().unwrap()]);
    assert_eq!(json(&o)["accepted"], true);

    assert_eq!(run(&["fdfa-ops", "empty", &fx("universal-fdfa")]).status.code(), Some(1));
    assert_eq!(run(&["fdfa-ops", "universal", &fx("universal-fdfa")]).status.code(), Some(0));
}

#[test]
fn duo_modes_from_the_command_line() {
    let o = json(&run(&["accepts", &fx("even-b-normalized"), "--v", "a"]));
    assert_eq!(o["accepted"], true);
    let o = json(&run(&["accepts", &fx("even-b-duo"), "--v", "a"]));
    assert_eq!(o["accepted"], true);
    assert_eq!(o["decomposition"]["v"], "aa");
}

#[test]
fn bundled_fixtures_are_bit_exact() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut n = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_stem().unwrap().to_str().unwrap().to_string();
        let o = run(&["fixture", &name]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert_eq!(o.stdout, std::fs::read(&path).unwrap(), "{name}");
        n += 1;
    }
    assert_eq!(n, 15);
}

#[test]
fn documents_round_trip_through_complement() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["syntactic-inf-aa-fin-bb", "even-b-duo", "inf-aa-fdfa"] {
        let once = dir.path().join(format!("{name}.c.json"));
        let twice = dir.path().join(format!("{name}.cc.json"));
        let o = run(&["fdfa-ops", "complement", &fx(name), "--out", once.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let o = run(&["fdfa-ops", "complement", once.to_str().unwrap(), "--out", twice.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let o = run(&["fdfa-ops", "equiv", &fx(name), twice.to_str().unwrap()]);
        assert_eq!(json(&o)["equivalent"], true, "{name}");
        let o = run(&["fdfa-ops", "equiv", &fx(name), once.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(1), "{name}");
    }
}

#[test]
fn black_white_from_the_command_line() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dba.json");
    let o = run(&["bw", "dba", &fx("inf-aa-dba"), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["acceptance"]["kind"], "buchi");
    for (u, v, expect) in [("", "a", true), ("", "ab", false), ("b", "aab", true)] {
        let o = json(&run(&["accepts", out.to_str().unwrap(), "--u", u, "--v", v]));
        assert_eq!(o["accepted"], expect, "({u}, {v})");
    }
    assert_eq!(run(&["bw", "dca", &fx("fin-a-dca")]).status.code(), Some(0));
}

fn dot_is_well_formed(text: &str) {
    assert!(text.starts_with("digraph"));
    let opens = text.matches('{').count();
    assert_eq!(opens, text.matches('}').count());
    let mut declared = std::collections::HashSet::new();
    for line in text.lines().map(str::trim) {
        if let Some((lhs, _)) = line.split_once(" [") {
            if !lhs.contains("->") {
                declared.insert(lhs.to_string());
            }
        }
    }
    for line in text.lines().map(str::trim) {
        if let Some((a, rest)) = line.split_once(" -> ") {
            let b = rest.split([' ', ';']).next().unwrap();
            assert!(declared.contains(a), "{a} undeclared");
            assert!(declared.contains(b), "{b} undeclared");
        }
    }
}

#[test]
fn dot_output_is_valid_and_deterministic() {
    for name in ["inf-aa-fin-bb-dma", "inf-aa-fin-bb-dpa", "colorful-inf-aa-fin-bb", "even-b-duo"] {
        let a = run(&["dot", &fx(name)]);
        let b = run(&["dot", &fx(name)]);
        assert_eq!(a.stdout, b.stdout, "{name}");
        dot_is_well_formed(json(&a)["dot"].as_str().unwrap());
    }
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("c.dot");
    let o = run(&["colorful", &fx("inf-aa-fin-bb-dma"), "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    dot_is_well_formed(&std::fs::read_to_string(dot).unwrap());
}

#[test]
fn outputs_are_deterministic() {
    let args = ["colorful", &fx("inf-b-or-even-b-dpa")];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["fdfa-ops", "intersect", &fx("even-b-normalized"), &fx("inf-aa-fdfa")];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn text_format_prints_a_summary() {
    let o = run(&["--format", "text", "wagner", &fx("inf-aa-fin-bb-dma")]);
    let s = String::from_utf8(o.stdout).unwrap();
    assert!(s.contains("DM-3"), "{s}");
    assert!(serde_json::from_str::<Value>(&s).is_err());
}

#[test]
fn selftest_passes_and_catches_injection() {
    let o = run(&["selftest", "--bounds", "1,3"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["failed"], 0);
    let o = run(&["selftest", "--bounds", "1,3", "--inject-unsaturated"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert!(v["failed"].as_u64().unwrap() > 0);
    let failures = v["failures"].as_array().unwrap();
    assert!(!failures.is_empty());
}
