//! Black-box tests of the `gmlat` binary: exit codes, the JSON report
//! shape, and text/JSON agreement.

use std::process::{Command, Output};

use serde_json::Value;

fn gmlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gmlat")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn exit_codes_contract() {
    // 0: success
    assert_eq!(gmlat(&["disc", "8"]).status.code(), Some(0));
    assert_eq!(gmlat(&["count", "26"]).status.code(), Some(0));
    assert_eq!(gmlat(&["verify", "0", "0", "mukai"]).status.code(), Some(0));
    // 2: input errors (bad residue, bad variant, failed hypothesis,
    // unknown suite, out-of-bounds range, usage errors)
    assert_eq!(gmlat(&["disc", "7"]).status.code(), Some(2));
    assert_eq!(gmlat(&["disc", "8", "--variant", "2"]).status.code(), Some(2));
    assert_eq!(gmlat(&["count", "12"]).status.code(), Some(2));
    assert_eq!(gmlat(&["count", "4"]).status.code(), Some(2));
    assert_eq!(gmlat(&["verify", "8", "40", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(gmlat(&["verify", "40", "8", "k3-association"]).status.code(), Some(2));
    assert_eq!(gmlat(&["verify", "8", "9999", "disc-structure"]).status.code(), Some(2));
    assert_eq!(gmlat(&["no-such-command"]).status.code(), Some(2));
    // 1: property failure (the definite-lattice surjectivity analogue has
    // honest failures in range; see the acceptance suite notes)
    assert_eq!(gmlat(&["verify", "32", "32", "surjectivity"]).status.code(), Some(1));
}

#[test]
fn json_reports_are_well_formed() {
    let out = gmlat(&["disc", "10", "--variant", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["command"], "disc");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["inputs"]["d"], 10);
    assert_eq!(v["inputs"]["variant"], 2);
    assert_eq!(v["results"]["lattice"]["gram"][2][2], 3);
    assert_eq!(v["results"]["disc"]["invariant_factors"][0], 10);
    assert_eq!(v["results"]["acts_as_minus_id"], true);

    // Errors keep the shape, with a message.
    let out = gmlat(&["disc", "7", "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert_eq!(v["status"], "error");
    assert!(v["message"].as_str().unwrap().contains("mod 8"));

    // Round trip is lossless.
    let text = serde_json::to_string(&v).unwrap();
    assert_eq!(serde_json::from_str::<Value>(&text).unwrap(), v);
}

#[test]
fn text_and_json_agree_on_numbers() {
    let text_out = gmlat(&["count", "52"]);
    let text = String::from_utf8(text_out.stdout).unwrap();
    let json_out = stdout_json(&gmlat(&["count", "52", "--json"]));
    let m = json_out["results"]["m"].as_u64().unwrap();
    let fibers = json_out["results"]["fiber_count"].as_u64().unwrap();
    assert!(text.contains(&format!("m = {m}")));
    assert!(text.contains(&format!("fibers with FM-partner elements: {fibers}")));

    let csv_out = gmlat(&["count", "52", "--csv"]);
    let csv = String::from_utf8(csv_out.stdout).unwrap();
    let line = csv.lines().nth(1).unwrap();
    assert_eq!(line, format!("52,true,2,{m},{fibers},1"));

    let csv_out = gmlat(&["twisted", "36", "--csv"]);
    let csv = String::from_utf8(csv_out.stdout).unwrap();
    assert_eq!(csv.lines().nth(1).unwrap(), "36,true,4,3,2,2,");
}

#[test]
fn twisted_output_shapes() {
    let v = stdout_json(&gmlat(&["twisted", "36", "--json"]));
    assert_eq!(v["results"]["satisfies_star_star_prime"], true);
    assert_eq!(v["results"]["decompositions"][0]["d"], 4);
    assert_eq!(v["results"]["decompositions"][0]["r"], 3);
    assert_eq!(v["results"]["decompositions"][0]["m_prime"], 2);

    let v = stdout_json(&gmlat(&["twisted", "12", "--json"]));
    assert_eq!(v["results"]["satisfies_star_star_prime"], false);
    assert_eq!(v["results"]["decompositions"].as_array().unwrap().len(), 0);

    // The r = 1 slot appears only behind the flag.
    let v = stdout_json(&gmlat(&["twisted", "10", "--json"]));
    assert_eq!(v["results"]["decompositions"].as_array().unwrap().len(), 0);
    let v = stdout_json(&gmlat(&["twisted", "10", "--include-r1", "--json"]));
    assert_eq!(v["results"]["decompositions"][0]["r"], 1);
}

#[test]
fn verify_json_counts_match_text() {
    let v = stdout_json(&gmlat(&["verify", "8", "40", "k3-association", "--json"]));
    assert_eq!(v["status"], "ok");
    let total = v["results"]["total"].as_u64().unwrap();
    let failures = v["results"]["failures"].as_u64().unwrap();
    assert_eq!(failures, 0);

    let text_out = gmlat(&["verify", "8", "40", "k3-association"]);
    let text = String::from_utf8(text_out.stdout).unwrap();
    assert!(text.contains(&format!("{total}/{total} pass")));
    assert_eq!(text.lines().filter(|l| l.contains(" PASS ")).count() as u64, total);
}

#[test]
fn max_candidates_cap_is_respected() {
    // An absurdly small cap makes enumeration fail with the documented
    // error rather than truncating.
    let out = gmlat(&["--max-candidates", "2", "disc", "8"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("cap"), "stderr: {err}");
}
