use std::path::{Path, PathBuf};
use std::process::Command;

use syzygy::format::parse_ideal;

fn syzygy(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_syzygy"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn gen(dir: &Path, name: &str, family: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut args = vec!["examples", "gen"];
    args.extend_from_slice(family);
    args.extend_from_slice(&["-o", path.to_str().unwrap()]);
    let (code, _, err) = syzygy(&args);
    assert_eq!(code, 0, "{err}");
    path
}

#[test]
fn audit_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let ci = gen(dir.path(), "ci.json", &["ci", "2", "2"]);
    let (code, text, _) = syzygy(&["audit", ci.to_str().unwrap(), "--dim", "0", "--cm"]);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("t = (0, 2, 4)"));

    // Koszulness of generic quadrics is not certified, so some checks stay open.
    let g = gen(dir.path(), "g.json", &["generic", "3", "4"]);
    let (code, text, _) = syzygy(&["audit", g.to_str().unwrap()]);
    assert_eq!(code, 3, "{text}");
    assert!(!text.contains("VIOLATED"));
}

#[test]
fn audit_json_is_self_contained() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "path.json", &["graph", "4", "0-1,1-2,2-3"]);
    let (code, text, _) = syzygy(&[
        "audit",
        path.to_str().unwrap(),
        "--json",
        "--checks",
        "subadditivity",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let embedded = serde_json::to_string(&v["ideal"]).unwrap();
    let original = parse_ideal(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(parse_ideal(&embedded).unwrap(), original);
    let records = v["records"].as_array().unwrap();
    assert!(!records.is_empty());
    assert!(records
        .iter()
        .all(|r| r["check"].as_str().unwrap().starts_with("subadditivity")));
    assert_eq!(v["counts"]["violated"], 0);
}

#[test]
fn betti_squares() {
    let dir = tempfile::tempdir().unwrap();
    let ci = gen(dir.path(), "ci.json", &["ci", "2", "2"]);
    let (code, text, _) = syzygy(&["betti", ci.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(
        text.starts_with("row\t0\t1\t2\n0\t1\t.\t.\n1\t.\t2\t.\n2\t.\t.\t1\n"),
        "{text}"
    );
    assert!(text.ends_with("t = (0, 2, 4)\npd = 2\n"));
}

#[test]
fn betti_of_residue_field_module() {
    let dir = tempfile::tempdir().unwrap();
    let ci = gen(dir.path(), "ci.json", &["ci", "2", "2"]);
    let module = dir.path().join("k.json");
    let k = r#"{"generators":[0],"relations":[
        {"degree":1,"components":[[{"coefficient":1,"exponents":[1,0]}]]},
        {"degree":1,"components":[[{"coefficient":1,"exponents":[0,1]}]]}]}"#;
    std::fs::write(&module, k).unwrap();
    let (code, text, err) = syzygy(&[
        "betti",
        ci.to_str().unwrap(),
        "--module",
        module.to_str().unwrap(),
        "--imax",
        "3",
        "--jmax",
        "3",
    ]);
    assert_eq!(code, 0, "{err}");
    // Betti numbers are taken over the polynomial ring: k is resolved by the Koszul complex on x, y.
    assert!(text.contains("t = (0, 1, 2, -inf)\npd = 2"), "{text}");
    for (i, b) in [(0, 1), (1, 2), (2, 1)] {
        assert!(text.contains(&format!("\n{i}\t{i}\t{b}\n")), "{text}");
    }
}

#[test]
fn parse_errors_carry_locations() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"field\":{\"characteristic\":0},\n \"variables\":[\"x\"],\n \"generators\":[[{\"coefficient\":1.5,\"exponents\":[2]}]]}\n").unwrap();
    let (code, _, err) = syzygy(&["betti", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 3, column 34"), "{err}");

    std::fs::write(&bad, r#"{"field":{"characteristic":0},"variables":["x","y"],"generators":[[{"coefficient":1,"exponents":[2]}]]}"#).unwrap();
    let (code, _, err) = syzygy(&["audit", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("generators[0][0].exponents"), "{err}");

    std::fs::write(
        &bad,
        r#"{"field":{"characteristic":4},"variables":["x"],"generators":[]}"#,
    )
    .unwrap();
    let (_, _, err) = syzygy(&["betti", bad.to_str().unwrap()]);
    assert!(err.contains("field.characteristic"), "{err}");
}

#[test]
fn template_matches_golden() {
    for (q, cols) in [(2, "13"), (3, "16")] {
        let (code, text, _) = syzygy(&["template", "--q", &q.to_string(), "--cols", cols]);
        assert_eq!(code, 0);
        let golden = std::fs::read_to_string(format!(
            "{}/tests/golden/template_q{q}.txt",
            env!("CARGO_MANIFEST_DIR")
        ))
        .unwrap();
        assert_eq!(text, golden, "q = {q}");
    }
}

#[test]
fn goodprimes_table() {
    let (code, text, _) = syzygy(&["goodprimes", "15"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 16);
    assert_eq!(rows[5], "5\t3\t3^1 * 2");
    assert_eq!(rows[6], "6\t-\t-");
    assert_eq!(rows[14], "14\t5\t5^1 * 3");
}

#[test]
fn splitcheck_and_resolve_k() {
    let dir = tempfile::tempdir().unwrap();
    let pl = gen(dir.path(), "pl.json", &["plucker", "4", "--char", "2"]);
    let (code, text, _) = syzygy(&[
        "splitcheck",
        pl.to_str().unwrap(),
        "--a",
        "1",
        "--b",
        "1",
        "--jmax",
        "4",
    ]);
    assert_eq!(code, 0, "{text}");
    assert!(text.lines().skip(1).all(|l| l.ends_with("holds")));

    let (code, _, err) = syzygy(&["splitcheck", pl.to_str().unwrap(), "--a", "4", "--b", "3"]);
    assert_eq!(code, 1);
    assert!(err.contains("exceeds"));

    let (code, text, _) = syzygy(&["resolve-k", pl.to_str().unwrap(), "--n", "3"]);
    assert_eq!(code, 0);
    assert!(
        text.contains("linear through step 3 on the window: yes"),
        "{text}"
    );
}

#[test]
fn unknown_builtin_lists_names() {
    let (code, _, err) = syzygy(&["examples", "gen", "builtin", "nope"]);
    assert_eq!(code, 1);
    assert!(err.contains("known:"));
}
