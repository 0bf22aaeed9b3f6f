//! Drives the `qsub` binary end to end: exit codes, JSON round trips and
//! byte-identical reruns.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::Arc;

use qsub::doc::{parse, render, CensusDoc, DatumDoc, DimDoc, FamilyDoc, LeqDoc, OracleDoc, PosetDoc, RootsDoc};
use qsub_core::abelian::FinAbGroup;
use qsub_core::datum::SubgroupDatum;
use qsub_core::enumerate::{enumerate_data, Caps};
use qsub_core::rootsys::{CartanType, Letter, RootSystem};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn qsub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsub")).args(args).env_remove("QSUB_CAPS").output().unwrap()
}

fn qsub_with_caps(caps: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsub")).args(args).env("QSUB_CAPS", caps).output().unwrap()
}

/// Runs the command twice, checks exit 0 and identical bytes, and checks the
/// output re-renders to itself after parsing.
fn ok_doc<T: DeserializeOwned + Serialize>(args: &[&str]) -> T {
    let first = qsub(args);
    assert_eq!(first.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&first.stderr));
    let second = qsub(args);
    assert_eq!(first.stdout, second.stdout, "{args:?} is not deterministic");
    let text = String::from_utf8(first.stdout).unwrap();
    let doc: T = parse(&text).unwrap();
    assert_eq!(render(&doc), text, "{args:?} does not round-trip");
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["v"], 1, "{args:?} lacks the version field");
    doc
}

fn a1() -> Arc<RootSystem> {
    Arc::new(RootSystem::build(CartanType::new(Letter::A, 1).unwrap()))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qsub-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn datum_file(name: &str, d: &SubgroupDatum) -> PathBuf {
    scratch(name, &render(&DatumDoc::of(d)))
}

#[test]
fn roots_of_a2() {
    let doc: RootsDoc = ok_doc(&["roots", "--type", "A", "--rank", "2"]);
    assert_eq!(doc.positive_roots.len(), 3);
    assert_eq!(doc.dims.lie_algebra, 8);
    assert_eq!(doc.convex_order.beta.len(), 3);
}

#[test]
fn datum_dim_of_whole_a1() {
    let f = datum_file("full.json", &SubgroupDatum::full(a1(), 3));
    let doc: DimDoc = ok_doc(&["datum-dim", "--file", f.to_str().unwrap()]);
    assert_eq!(doc.dim_ad.to_string(), "27");
    assert_eq!(doc.dim_uel.to_string(), "27");
}

#[test]
fn leq_whole_below_counit() {
    let full = datum_file("leq-full.json", &SubgroupDatum::full(a1(), 3));
    let counit = datum_file("leq-counit.json", &SubgroupDatum::counit(a1(), 3));
    let (full, counit) = (full.to_str().unwrap(), counit.to_str().unwrap());
    let down: LeqDoc = ok_doc(&["leq", "--lhs", full, "--rhs", counit]);
    assert!(down.leq && !down.geq && !down.equiv);
    assert!(down.witness.is_some());
    let same: LeqDoc = ok_doc(&["leq", "--lhs", counit, "--rhs", counit]);
    assert!(same.equiv);
}

#[test]
fn poset_of_a_family() {
    let cat = vec![FinAbGroup::trivial(), FinAbGroup::new(vec![3]).unwrap()];
    let family = enumerate_data(&a1(), 3, &cat, &Caps::default()).unwrap();
    let f = scratch("family.json", &render(&FamilyDoc::of(&family)));
    let path = f.to_str().unwrap();
    let doc: PosetDoc = ok_doc(&["poset", "--family", path]);
    let members: usize = doc.classes.iter().map(|c| c.members.len()).sum();
    assert_eq!(members, family.len());
    let dot = qsub(&["poset", "--family", path, "--out", "dot"]);
    assert_eq!(dot.status.code(), Some(0));
    let dot = String::from_utf8(dot.stdout).unwrap();
    assert!(dot.contains("digraph hasse"));
    assert_eq!(dot, String::from_utf8(qsub(&["poset", "--family", path, "--out", "dot"]).stdout).unwrap());
}

#[test]
fn census_of_a1() {
    let doc: CensusDoc = ok_doc(&["census", "--type", "A", "--rank", "1", "--ell", "3", "--gammas", "1,Z2,Z3"]);
    assert_eq!(doc.data_count, 24);
    assert_eq!(doc.class_count, 17);
    assert_eq!(doc.hasse.maximal.len(), 1);
}

#[test]
fn oracle_at_three() {
    let doc: OracleDoc = ok_doc(&["oracle", "--ell", "3", "--check", "all"]);
    assert!(doc.passed);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qsub(&[]).status.code(), Some(2));
    assert_eq!(qsub(&["roots", "--type", "A"]).status.code(), Some(2));
    assert_eq!(qsub(&["roots", "--type", "Q", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(qsub(&["datum-dim", "--file", "/nonexistent/datum.json"]).status.code(), Some(2));
    let junk = scratch("junk.json", "{\"v\":1,\"nope\":true}");
    assert_eq!(qsub(&["datum-dim", "--file", junk.to_str().unwrap()]).status.code(), Some(2));
    let out = qsub_with_caps("ell=oops", &["oracle", "--ell", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(qsub(&["--help"]).status.code(), Some(0));
}

#[test]
fn domain_errors_exit_one() {
    assert_eq!(qsub(&["oracle", "--ell", "4"]).status.code(), Some(1));
    let out = qsub_with_caps("ell=3", &["oracle", "--ell", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    let mut doc = DatumDoc::of(&SubgroupDatum::full(a1(), 3));
    doc.ell = 4;
    let bad = scratch("even.json", &render(&doc));
    assert_eq!(qsub(&["datum-dim", "--file", bad.to_str().unwrap()]).status.code(), Some(1));
}
