//! User-defined algebras from explicit operation tables: a two-element
//! possibility algebra (⊕ = or, ⊗ = and) evaluated exhaustively, and a
//! deliberately broken table caught by validation with a witness.
//!
//! Run with: cargo run --example table_algebra

use std::collections::BTreeMap;

use geu::algebra::{ExpectationDomain, TableSpec};
use geu::decision::DecisionProblem;
use geu::measures::PlausibilityMeasure;
use geu::situation::{DecisionSituation, Subset};
use geu::value::{ConsId, StateId, Value};

fn boolean_spec() -> TableSpec {
    let syms = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let mut oplus = BTreeMap::new();
    let mut otimes = BTreeMap::new();
    for x in ["0", "1"] {
        for y in ["0", "1"] {
            let or = if x == "1" || y == "1" { "1" } else { "0" };
            let and = if x == "1" && y == "1" { "1" } else { "0" };
            oplus.insert((x.to_string(), y.to_string()), or.to_string());
            otimes.insert((x.to_string(), y.to_string()), and.to_string());
        }
    }
    TableSpec {
        utility_carrier: syms(&["0", "1"]),
        plaus_carrier: syms(&["0", "1"]),
        valuation_carrier: syms(&["0", "1"]),
        bottom: "0".into(),
        top: "1".into(),
        oplus,
        otimes,
        utility_order: vec![("0".into(), "1".into())],
        plaus_order: vec![("0".into(), "1".into())],
        valuation_order: vec![("0".into(), "1".into())],
    }
}

fn main() {
    let domain = ExpectationDomain::table(&boolean_spec()).unwrap();
    let report = domain.validate(10_000).unwrap();
    println!("boolean or/and algebra:");
    for law in &report.laws {
        println!("  {:22} {}  ({} probes)", law.law, if law.holds { "pass" } else { "FAIL" }, law.probes);
    }
    let identity = domain.has_oplus_identity(10_000).unwrap();
    println!("  ⊕ identity: {:?}", identity.identity);

    // Use it: a possibility measure (is the event possible at all?) over
    // two states, with boolean utilities.
    let situation = DecisionSituation::new(
        vec!["s1".into(), "s2".into()],
        vec!["ok".into(), "fail".into()],
        vec![
            ("robust".into(), vec![ConsId(0), ConsId(0)]),
            ("fragile".into(), vec![ConsId(0), ConsId(1)]),
            ("broken".into(), vec![ConsId(1), ConsId(1)]),
        ],
    )
    .unwrap();
    let possibility = PlausibilityMeasure::table(
        2,
        vec![
            (Subset::EMPTY, Value::TableElem("0".into())),
            (Subset::singleton(StateId(0)), Value::TableElem("1".into())),
            (Subset::singleton(StateId(1)), Value::TableElem("0".into())),
            (Subset::full(2), Value::TableElem("1".into())),
        ],
    )
    .unwrap();
    let problem = DecisionProblem::new(
        situation.clone(),
        domain,
        vec![Value::TableElem("1".into()), Value::TableElem("0".into())],
        possibility,
    )
    .unwrap();
    println!("\npossibilistic expected utility (can the act still succeed?):");
    for act in situation.act_ids() {
        let value = problem.geu(act).unwrap();
        println!("  {:8} {}", situation.act(act).name, value.as_symbol().unwrap());
    }

    // Break commutativity and watch validation catch it.
    let mut broken = boolean_spec();
    broken.oplus.insert(("0".into(), "1".into()), "0".into());
    let domain = ExpectationDomain::table(&broken).unwrap();
    let report = domain.validate(10_000).unwrap();
    let e2 = report.laws.iter().find(|l| l.law == "E2").unwrap();
    println!("\nbroken table: E2 holds = {}, witness = {:?}", e2.holds, e2.witness);

    // Problems refuse to build on invalid domains.
    let err = DecisionProblem::new(
        situation,
        domain,
        vec![Value::TableElem("1".into()), Value::TableElem("0".into())],
        PlausibilityMeasure::table(
            2,
            vec![
                (Subset::EMPTY, Value::TableElem("0".into())),
                (Subset::singleton(StateId(0)), Value::TableElem("0".into())),
                (Subset::singleton(StateId(1)), Value::TableElem("0".into())),
                (Subset::full(2), Value::TableElem("1".into())),
            ],
        )
        .unwrap(),
    )
    .unwrap_err();
    println!("constructing a problem over it fails: {err}");
}
