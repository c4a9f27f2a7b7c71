use std::fs;
use std::path::Path;

use jsonschema::JSONSchema;
use serde_json::Value;
use zomega::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(args.iter().copied(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn schema(name: &str) -> JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{}.schema.json", name));
    let v: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    JSONSchema::compile(&v).unwrap()
}

fn check_json(name: &str, args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{:?}: {}", args, err);
    let v: Value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{:?}: {} in {}", args, e, out));
    let s = schema(name);
    if let Err(errors) = s.validate(&v) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{:?} does not match {}: {:?}", args, name, msgs);
    };
    v
}

#[test]
fn json_outputs_match_schemas() {
    check_json("symbol", &["--json", "symbol", "--a", "2+5w", "--b", "-2-3w"]);
    let g = check_json("gauss", &["--json", "gauss", "--mu", "1", "--c", "-2-3w"]);
    let re = g["value"]["re"].as_f64().unwrap();
    let im = g["value"]["im"].as_f64().unwrap();
    assert!(((re * re + im * im).sqrt() - 7f64.sqrt()).abs() < 1e-9);
    check_json("gauss", &["--json", "gauss", "--mu", "1/l", "--c", "4+3w", "--direct"]);
    check_json("kloosterman", &["--json", "kloosterman", "--variant", "sx", "--c", "-2-3w"]);
    check_json("kloosterman", &["--json", "kloosterman", "--variant", "ss", "--m", "2/l^3", "--c", "3"]);
    check_json("ramanujan", &["--json", "ramanujan", "--r", "-2-3w", "--k", "0"]);
    check_json("vaughan_check", &["--json", "vaughan-check", "--max-norm", "200"]);
    check_json("vaughan_check", &["--json", "vaughan-check", "--x", "50", "--r", "1e9", "--s", "0.004"]);
    let t = check_json("type_sums", &["--json", "type-sums", "--x", "20", "--a", "-2-3w"]);
    assert!(t.get("type2").is_none());
    let t = check_json(
        "type_sums",
        &["--json", "type-sums", "--x", "20", "--a-scale", "4", "--b-scale", "10", "--v", "6", "--u", "1+3w"],
    );
    assert!(t.get("type2").is_some());
    let v = check_json("verify_all", &["verify-all", "--cap-norm", "100"]);
    assert_eq!(v["passed"], Value::Bool(true));
}

#[test]
fn verify_all_is_deterministic() {
    let a = call(&["verify-all", "--cap-norm", "150", "--seed", "3"]);
    let b = call(&["--workers", "1", "verify-all", "--cap-norm", "150", "--seed", "3"]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
}

#[test]
fn injected_fault_names_the_suite() {
    let (code, out, err) = call(&["verify-all", "--cap-norm", "100", "--inject-fault", "cuberel"]);
    assert_eq!(code, 1);
    assert!(err.contains("cuberel"), "{}", err);
    let v: Value = serde_json::from_str(&out).unwrap();
    let bad: Vec<&str> = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["passed"] == Value::Bool(false))
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    assert_eq!(bad, ["cuberel"]);
}

#[test]
fn verify_all_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, out, _) = call(&["verify-all", "--cap-norm", "100", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let (_, stdout_report, _) = call(&["verify-all", "--cap-norm", "100"]);
    assert_eq!(fs::read_to_string(&path).unwrap(), stdout_report);
}

#[test]
fn usage_and_domain_errors() {
    assert_eq!(call(&["symbol", "--a", "1", "--b", "2"]).0, 2);
    assert_eq!(call(&["gauss", "--mu", "1", "--c", "3"]).0, 2);
    assert_eq!(call(&["kloosterman", "--variant", "ss", "--c", "-2-3w"]).0, 2);
    assert_eq!(call(&["verify-all", "--cap-norm", "5"]).0, 2);
    assert_eq!(call(&["no-such-command"]).0, 2);
    let (code, _, err) = call(&["vaughan-check", "--x", "200", "--r", "10", "--s", "10"]);
    assert_eq!(code, 2);
    assert!(err.contains("10000X < RS") || err.contains("S < X/10000"), "{}", err);
}

#[test]
fn text_outputs() {
    let (code, out, _) = call(&["symbol", "--a", "w", "--b", "-2"]);
    assert_eq!((code, out.trim()), (0, "omega"));
    let (_, out, _) = call(&["gauss", "--mu", "1", "--c", "1"]);
    assert!(out.starts_with("1+0i"), "{}", out);
    let (_, out, _) = call(&["ramanujan", "--r", "-2-3w", "--k", "0"]);
    assert!(out.starts_with("6/7"), "{}", out);
    let (_, out, _) = call(&["kloosterman", "--variant", "sx", "--m", "1", "--n", "2+w", "--c", "4+3w"]);
    assert!(out.contains("weil bound"), "{}", out);
    let (code, out, _) = call(&["vaughan-check", "--max-norm", "300"]);
    assert_eq!(code, 0);
    assert!(out.contains("exact matches: 100%"), "{}", out);
}

#[test]
fn csv_outputs() {
    let (code, out, _) = call(&["bias", "--schedule", ""]);
    assert_eq!(code, 0);
    assert_eq!(out, "X,count,sumRe,sumIm,ratio\n");
    let (code, out, _) = call(&["bias", "--schedule", "100,1000"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("100,"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ls.csv");
    let args = ["large-sieve", "--m-list", "4,8", "--n-list", "1,8", "--seeds", "2", "--output", path.to_str().unwrap()];
    assert_eq!(call(&args).0, 0);
    let text = fs::read_to_string(&path).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(rdr.headers().unwrap(), vec!["M", "N", "seed", "lhs", "ratio"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 8);
    // N = 1 has no moduli, so those rows are null
    for r in &rows {
        let empty = r[3].is_empty();
        assert_eq!(empty, &r[1] == "1", "{:?}", r);
        if !empty {
            assert!(r[4].parse::<f64>().unwrap() > 0.0);
        }
    }
}

#[test]
fn config_file_fills_missing_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("zomega.conf");
    fs::write(&cfg, "# defaults\ncap_norm = 100\nseed=7\njson=true\n").unwrap();
    let (code, out, err) = call(&["--config", cfg.to_str().unwrap(), "verify-all"]);
    assert_eq!(code, 0, "{}", err);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["cap_norm"], 100);
    assert_eq!(v["seed"], 7);
    // the command line wins
    let (_, out, _) = call(&["--config", cfg.to_str().unwrap(), "verify-all", "--seed", "2"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["seed"], 2);
    let (code, _, _) = call(&["--config", dir.path().join("missing").to_str().unwrap(), "verify-all"]);
    assert_eq!(code, 2);
}
