use std::process::{Command, Output};

use serde_json::Value;

fn deephole(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deephole"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn strip_elapsed(mut v: Value) -> Value {
    match &mut v {
        Value::Object(map) => {
            map.remove("elapsed_ms");
            for (_, x) in map.iter_mut() {
                *x = strip_elapsed(x.take());
            }
        }
        Value::Array(items) => {
            for x in items.iter_mut() {
                *x = strip_elapsed(x.take());
            }
        }
        _ => {}
    }
    v
}

#[test]
fn prs_6_4_parameters() {
    let v = json(&deephole(&["code", "prs", "--q", "5", "--k", "4"]));
    assert_eq!(v["n"], 6);
    assert_eq!(v["k"], 4);
    assert_eq!(v["d"], 3);
    assert_eq!(v["mds"], true);
    assert_eq!(v["generator"].as_array().unwrap().len(), 4);
    assert_eq!(v["parity_check"].as_array().unwrap().len(), 2);
}

#[test]
fn radius_of_prs_6_4() {
    for algo in ["syndrome", "sweep", "brute"] {
        let v = json(&deephole(&["analyze", "radius", "--code", "prs:5:4", "--algo", algo]));
        assert_eq!(v["rho"], 1, "{algo}");
    }
}

#[test]
fn deep_hole_output_is_deterministic() {
    let args = ["analyze", "deep-holes", "--code", "prs --q 5 --k 3"];
    let a = strip_elapsed(json(&deephole(&args)));
    let b = strip_elapsed(json(&deephole(&args)));
    assert_eq!(a, b);
    assert_eq!(a["rho"], 2);
    assert_eq!(a["deep_hole_count"], 100);
    assert_eq!(a["matches_degree_k_family"], false);

    let threaded = strip_elapsed(json(&deephole(&["--threads", "1", "analyze", "deep-holes", "--code", "prs:5:3"])));
    assert_eq!(a["deep_holes"], threaded["deep_holes"]);
}

#[test]
fn export_then_load_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("glynn.code");
    let path_str = path.to_str().unwrap();
    let out = deephole(&["code", "export", "--code", "glynn", "--out", path_str]);
    assert!(out.status.success());

    let direct = json(&deephole(&["code", "glynn"]));
    let loaded = json(&deephole(&["code", "from-file", path_str]));
    assert_eq!(direct["generator"], loaded["generator"]);
    assert_eq!(direct["parity_check"], loaded["parity_check"]);
    assert_eq!(loaded["d"], 6);
    assert_eq!(loaded["mds"], true);

    let via_analyze = json(&deephole(&["analyze", "min-distance", "--code", path_str]));
    assert_eq!(via_analyze["d"], 6);
}

#[test]
fn error_distance_of_a_word() {
    let v = json(&deephole(&["analyze", "distance", "--code", "rs:5:2", "--word", "1,4,4,1,0"]));
    assert_eq!(v["distance"], 3);
    let b = json(&deephole(&["analyze", "distance", "--code", "rs:5:2", "--word", "1,4,4,1,0", "--algo", "brute"]));
    assert_eq!(b["distance"], 3);
}

#[test]
fn nested_max_of_rs_codes() {
    let v = json(&deephole(&["analyze", "nested-max", "--code", "rs:5:2", "--super", "rs:5:3"]));
    assert_eq!(v["m"], 3);
}

#[test]
fn ssp_certificate() {
    let v = json(&deephole(&["ssp", "--q", "7", "--k", "3", "--target", "5"]));
    assert_eq!(v["valid"], true);
    let set: Vec<u64> = v["set"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    assert_eq!(set.len(), 3);
    assert_eq!(set.iter().sum::<u64>() % 7, 5);

    let ext = json(&deephole(&["ssp", "--q", "3", "--a", "2", "--k", "4", "--target", "2"]));
    assert_eq!(ext["valid"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(deephole(&["verify", "ssp", "--q", "5"]).status.code(), Some(0));
    assert_eq!(deephole(&["verify", "boundary", "--q", "5"]).status.code(), Some(1));
    assert_eq!(deephole(&["code", "rs", "--q", "4", "--k", "2"]).status.code(), Some(2));
    assert_eq!(deephole(&["analyze", "radius", "--code", "nonsense"]).status.code(), Some(2));
    assert_eq!(deephole(&["ssp", "--q", "5", "--k", "5", "--target", "1"]).status.code(), Some(2));
    assert_eq!(deephole(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(deephole(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_formats() {
    let out = deephole(&["verify", "thm3", "--q", "5", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("id,q,k,rho,deep_hole_count,status"));
    assert!(lines.all(|l| l.ends_with(",pass")));

    let v = json(&deephole(&["verify", "thm1", "--q", "5"]));
    assert_eq!(v["failed"], 0);
    assert!(v["cases"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn budget_is_reported_not_exceeded() {
    let out = deephole(&["analyze", "radius", "--code", "prs:7:3", "--algo", "brute", "--enum-budget", "1000"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}
