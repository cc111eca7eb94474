use std::process::{Command, Output};

use qsnake::laurent::lp;
use qsnake::LaurentPoly;
use serde_json::Value;

fn qsnake(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsnake"))
        .args(args)
        .env_remove("QSNAKE_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = qsnake(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}");
    serde_json::from_slice(&o.stdout).unwrap()
}

fn poly(v: &Value) -> LaurentPoly {
    serde_json::from_value(v.clone()).unwrap()
}

#[test]
fn compute_examples() {
    let out = stdout(&qsnake(&["compute", "29", "12"]));
    assert!(out.contains("(1 + 3q + 5q^2 + 6q^3 + 6q^4 + 5q^5 + 2q^6 + q^7)/"), "{out}");
    assert_eq!(stdout(&qsnake(&["compute", "1", "1"])), "[1/1]_q = 1/1\n");
    let v = json(&["compute", "13", "3", "--format", "json"]);
    assert_eq!((v["r"].as_u64(), v["s"].as_u64()), (Some(13), Some(3)));
    assert_eq!(v["cf"], serde_json::json!([4, 3]));
    assert_eq!(poly(&v["den"]), lp("1 + q + q^2"));
}

#[test]
fn all_routes_agree() {
    let o = qsnake(&["compute", "13", "3", "--all-routes"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let fractions: Vec<&str> = out
        .lines()
        .filter(|l| !l.starts_with("continuant") && !l.starts_with("routes"))
        .map(|l| l.split_once(':').unwrap().1.trim())
        .collect();
    assert_eq!(fractions.len(), 3);
    assert!(fractions.iter().all(|f| *f == fractions[0]));
    assert!(out.contains("routes agree: yes"));
    let v = json(&["compute", "13", "3", "--all-routes", "--format", "json"]);
    assert_eq!(v["agree"], Value::Bool(true));
    assert_eq!(poly(&v["routes"]["continuant"]["num"]), poly(&v["num"]));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["compute", "4", "2"][..],
        &["compute", "3", "0"],
        &["compute", "x", "1"],
        &["snake", "5", "2", "--render", "bmp"],
        &["fibonacci", "0"],
        &["verify", "--max-r", "1"],
        &[],
    ] {
        assert_eq!(qsnake(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn snake_renderings() {
    let ascii = stdout(&qsnake(&["snake", "2", "1", "--render", "ascii"]));
    assert_eq!(ascii, "+-----+\n|q    |\n+-----+\n");

    let tikz = stdout(&qsnake(&["snake", "29", "12", "--render", "tikz"]));
    assert!(tikz.starts_with("% snake graph of [2,2,2,2]\n\\begin{tikzpicture}"));
    // 7 boxes: 22 edges and 16 vertices
    assert_eq!(tikz.matches("\\draw").count(), 22);
    assert_eq!(tikz.matches("\\filldraw").count(), 16);

    let svg = stdout(&qsnake(&["snake", "179", "74", "--render", "svg"]));
    assert!(svg.contains("snake graph of [2,2,2,1,1,2,2]"));
    assert_eq!(svg.matches("<circle").count(), 2 * 11 + 2);

    let v = json(&["snake", "13", "3", "--render", "json"]);
    assert_eq!(v["boxes"].as_array().unwrap().len(), 6);
    assert_eq!(v["edges"].as_array().unwrap().len(), 19);
}

#[test]
fn snake_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.svg");
    let o = qsnake(&["snake", "5", "2", "--render", "svg", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&qsnake(&["snake", "5", "2", "--render", "svg"])));
}

#[test]
fn matchings_json() {
    let v = json(&["matchings", "5", "2"]);
    let all = v["matchings"].as_array().unwrap();
    assert_eq!(all.len(), 5);
    assert_eq!(v["count"].as_u64(), Some(5));
    assert_eq!(all[0]["edges"].as_array().unwrap().len(), 4);
    assert_eq!(poly(&v["statistic"]), lp("q^-1 + 2 + q + q^2"));
    assert_eq!(v["n"].as_i64(), Some(1));
    assert_eq!(v["theorem_holds"], Value::Bool(true));
}

#[test]
fn kasteleyn_json() {
    let v = json(&["kasteleyn", "13", "3"]);
    assert_eq!(v["matrix"]["size"].as_u64(), Some(7));
    assert_eq!(v["matrix"]["entries"].as_array().unwrap().len(), 7);
    assert_eq!(poly(&v["matrix"]["entries"][0][0]), lp("q"));
    assert_eq!(poly(&v["abs_det"]), lp("q^-2 + 2q^-1 + 3 + 3q + 2q^2 + q^3 + q^4"));
    assert_eq!(v["n"].as_i64(), Some(2));
    assert!(v["sign"].as_i64().unwrap().abs() == 1);
    assert_eq!(v["pass"], Value::Bool(true));
}

#[test]
fn fibonacci_table() {
    let out = stdout(&qsnake(&["fibonacci", "7"]));
    assert_eq!(out.lines().count(), 7);
    assert!(out.lines().last().unwrap().contains("num: 1 + 3q + 4q^2 + 5q^3 + 4q^4 + 3q^5 + q^6"));
    assert!(!out.contains("FAIL"));
    let rows = json(&["fibonacci", "12", "--format", "json"]);
    let last = &rows[11];
    assert_eq!((last["r"].as_u64(), last["s"].as_u64()), (Some(233), Some(144)));
    assert_eq!(last["matches_q_rational"], Value::Bool(true));
    assert!(stdout(&qsnake(&["fibonacci", "1"])).starts_with("  1  1/1  num: 1  den: 1"));
}

#[test]
fn verify_small_and_deterministic() {
    let o = qsnake(&["verify", "--max-r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pairs 1 <= s < r <= 2: 1\npassed: 1\n"));

    let one = qsnake(&["verify", "--max-r", "40", "--jobs", "1"]);
    let eight = qsnake(&["verify", "--max-r", "40", "--jobs", "8"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, eight.stdout);

    let env = Command::new(env!("CARGO_BIN_EXE_qsnake"))
        .args(["verify", "--max-r", "20", "--format", "json"])
        .env("QSNAKE_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&env.stdout).unwrap();
    assert_eq!(v["failed"].as_u64(), Some(0));
    let bad_env = Command::new(env!("CARGO_BIN_EXE_qsnake"))
        .args(["verify", "--max-r", "5"])
        .env("QSNAKE_JOBS", "many")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(2));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [&["snake", "179", "74", "--render", "json"][..], &["kasteleyn", "29", "12"], &["matchings", "13", "5"]] {
        assert_eq!(qsnake(args).stdout, qsnake(args).stdout);
    }
}
