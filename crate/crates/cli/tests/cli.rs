use std::path::PathBuf;
use std::process::Command;

use hyperbraid::arrangement::PosetJson;
use hyperbraid::heisenberg::{LiftReport, TripleReport};
use hyperbraid::ktheory::KTheoryReport;
use hyperbraid_cli::{BettiOutput, BurauOutput, RealizeOutput, SwOutput, VandermondeOutput};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hyperbraid")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn fixture(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hyperbraid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn roundtrip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(args: &[&str]) {
    let (code, stdout, stderr) = bin(args);
    assert_eq!(code, 0, "{args:?}: {stderr}");
    let parsed: T = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{stdout}"));
    let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(again, stdout, "{args:?}");
    let reparsed: T = serde_json::from_str(&again).unwrap();
    assert_eq!(reparsed, parsed);
}

#[test]
fn documented_examples() {
    assert_eq!(bin(&["betti", "--braid", "4"]).1, "[1, 6, 11, 6]\n");
    let (code, out, _) = bin(&["ktheory", "--braid", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("KU^0 = Z^2, KO^0 = (Z/2)^5, KO^0_rep = (Z/2)^5, KU^0_rep = 0"));
    assert!(out.contains("hypothesis:"));
    assert_eq!(bin(&["burau", "--n", "2", "--word", "s1", "--eval", "1"]).1, "[[0,1],[1,0]]\n");
}

#[test]
fn betti_matches_product_for_small_n() {
    let expected = ["[1, 1]", "[1, 3, 2]", "[1, 6, 11, 6]", "[1, 10, 35, 50, 24]", "[1, 15, 85, 225, 274, 120]"];
    for (n, want) in (2..=6).zip(expected) {
        assert_eq!(bin(&["betti", "--braid", &n.to_string()]).1.trim_end(), want);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&[]).0, 2);
    assert_eq!(bin(&["frobnicate"]).0, 2);
    assert_eq!(bin(&["poset"]).0, 2);
    assert_eq!(bin(&["poset", "--braid", "3", "--file", "x"]).0, 2);
    assert_eq!(bin(&["burau", "--word", "s1"]).0, 2);
    assert_eq!(bin(&["heisenberg", "--n", "4", "--triple", "4", "3"]).0, 2);
    assert_eq!(bin(&["--help"]).0, 0);

    let (code, _, err) = bin(&["burau", "--n", "3", "--word", "s5"]);
    assert_eq!(code, 1);
    assert!(err.contains("--word"), "{err}");
    let bad = fixture("bad.arr", "1 0 | 0\n1 1/0 | 1\n");
    let (code, _, err) = bin(&["betti", "--file", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 2"), "{err}");
    assert_eq!(bin(&["heisenberg", "--n", "2"]).0, 1);
    assert_eq!(bin(&["heisenberg", "--n", "4", "--triple", "2", "3", "1"]).0, 1);
    assert_eq!(bin(&["vandermonde", "--points", "0,1,1", "--perm", "()", "--x", "1,2,3"]).0, 1);
    assert_eq!(bin(&["vandermonde", "--points", "0,1", "--perm", "(1 3)", "--x", "1,2"]).0, 1);
    assert_eq!(bin(&["realize-sw", "--strands", "3", "--zeta1", "A[2,1]*A[3,1]", "--zeta2", "0"]).0, 1);
    let rep = fixture("ragged.f2", "1 0 1\n1 0\n");
    assert_eq!(bin(&["sw", "--rep", rep.to_str().unwrap()]).0, 1);
    let rep = fixture("three.f2", "1 0 1\n");
    assert_eq!(bin(&["sw", "--rep", rep.to_str().unwrap(), "--strands", "4"]).0, 1);
}

#[test]
fn json_roundtrips() {
    let arr = fixture("lines.arr", "# two parallel lines and a diagonal\n1 0 | 0\n1 0 | 1\n1 -1 | 0\n");
    let arr = arr.to_str().unwrap();
    let rep = fixture("rep.f2", "1 0 0\n0 1 0\n1 1 0\n");
    let rep = rep.to_str().unwrap();
    let fano = fixture("fano.f2", "1 0 0\n0 1 0\n0 0 1\n1 1 0\n1 0 1\n0 1 1\n1 1 1\n");
    let fano = fano.to_str().unwrap();
    roundtrip::<PosetJson>(&["poset", "--braid", "4", "--json"]);
    roundtrip::<PosetJson>(&["poset", "--file", arr, "--json"]);
    roundtrip::<BettiOutput>(&["betti", "--boolean", "3", "--json"]);
    roundtrip::<KTheoryReport>(&["ktheory", "--file", arr, "--json"]);
    roundtrip::<SwOutput>(&["sw", "--rep", rep, "--json"]);
    roundtrip::<SwOutput>(&["sw", "--rep", fano, "--json"]);
    roundtrip::<RealizeOutput>(&["realize-sw", "--strands", "4", "--zeta1", "A[2,1] + A[4,3]", "--zeta2", "A[3,1]*A[4,2]", "--json"]);
    roundtrip::<BurauOutput>(&["burau", "--n", "3", "--word", "s1 s2^-1", "--eval", "-1/2+i", "--at-one", "--check-relations", "--json"]);
    roundtrip::<LiftReport>(&["heisenberg", "--n", "3", "--json"]);
    roundtrip::<TripleReport>(&["heisenberg", "--n", "5", "--triple", "5", "3", "2", "--json"]);
    roundtrip::<VandermondeOutput>(&["vandermonde", "--points", "0,1,i", "--perm", "(1 2 3)", "--x", "1,-2,1/3", "--json"]);
}

#[test]
fn output_is_deterministic() {
    let cases: [&[&str]; 4] = [
        &["poset", "--braid", "5"],
        &["heisenberg", "--n", "5", "--json"],
        &["burau", "--n", "4", "--word", "s1 s2 s3^-1 s1"],
        &["ktheory", "--braid", "5", "--json"],
    ];
    for args in cases {
        assert_eq!(bin(args), bin(args), "{args:?}");
    }
}

#[test]
fn text_outputs() {
    let (_, out, _) = bin(&["heisenberg", "--n", "3", "--triple", "3", "2", "1"]);
    assert_eq!(out, "A[2,1]*A[3,1] - A[2,1]*A[3,2] + A[3,1]*A[3,2]\n");
    let (_, out, _) = bin(&["heisenberg", "--n", "5"]);
    assert_eq!(out.lines().filter(|l| l.contains("Spin(7)-liftable")).count(), 10);
    assert!(out.contains("span dimension: 10 of 10"));
    let (_, out, _) = bin(&["burau", "--n", "2", "--word", "s1^-1"]);
    assert_eq!(out, "[0, 1]\n[t^-1, -t^-1 + 1]\n");
    let (_, out, _) = bin(&["burau", "--n", "4", "--word", "s1 s3", "--at-one"]);
    assert_eq!(out, "(1 2)(3 4)\n");
    let (_, out, _) = bin(&["vandermonde", "--points", "1,2", "--perm", "(1 2)", "--x", "1,1"]);
    assert!(out.starts_with("y = (2, 3)\n"), "{out}");
    let rep = fixture("e-basis.f2", "1 1 0 0\n1 1 0 0\n0 0 0 0\n");
    let (_, out, _) = bin(&["sw", "--rep", rep.to_str().unwrap()]);
    assert!(out.contains("stably trivial: yes"), "{out}");
    assert!(out.contains("rows pair up as [(0,1)], zero rows [2]"), "{out}");
    let rep = fixture("e-basis2.f2", "1 0 0 0\n0 1 0 0\n");
    let (_, out, _) = bin(&["sw", "--rep", rep.to_str().unwrap()]);
    assert!(out.starts_with("w1 = e1 + e2\nw2 = e1*e2\n"), "{out}");
}
