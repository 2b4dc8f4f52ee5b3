//! Deciding the act-side postulates on finite decision problems: totality
//! and transitivity, the sure-thing principle, conditional preference,
//! likelihood consistency, nontriviality, and small-event continuity.
//!
//! Run with: cargo run --example postulates

use geu::algebra::ExpectationDomain;
use geu::decision::DecisionProblem;
use geu::measures::{PlausibilityMeasure, ProbabilityWeights};
use geu::savage::{check_postulate, CheckIndex, Version};
use geu::situation::DecisionSituation;
use geu::value::Value;
use geu::{Budgets, PreferenceRelation};
use num_rational::BigRational;

fn all_acts(ns: usize, nc: usize) -> DecisionSituation {
    let seed = DecisionSituation::new(
        (0..ns).map(|i| format!("s{i}")).collect(),
        (0..nc).map(|i| format!("c{i}")).collect(),
        vec![("seed".into(), vec![geu::ConsId(0); ns])],
    )
    .unwrap();
    let acts = seed
        .enumerate_simple_acts(4096)
        .unwrap()
        .into_iter()
        .enumerate()
        .map(|(i, m)| (format!("a{i}"), m))
        .collect();
    DecisionSituation::new(
        (0..ns).map(|i| format!("s{i}")).collect(),
        (0..nc).map(|i| format!("c{i}")).collect(),
        acts,
    )
    .unwrap()
}

fn run(label: &str, situation: &DecisionSituation, pref: &PreferenceRelation) {
    println!("{label}:");
    for index in CheckIndex::ALL {
        let result =
            check_postulate(situation, pref, index, Version::General, Budgets::default()).unwrap();
        print!("  {:3} {}", result.name, if result.holds { "holds" } else { "fails" });
        if let Some(witness) = &result.witness {
            let bindings: Vec<String> = witness
                .bindings
                .iter()
                .map(|(name, b)| format!("{name}={b:?}"))
                .collect();
            if bindings.is_empty() {
                print!("  (no witness exists)");
            } else {
                print!("  at {}", bindings.join(", "));
            }
        }
        println!();
    }
}

fn main() {
    let situation = all_acts(2, 2);

    // The expected-utility ordering: a total preorder satisfying the
    // sure-thing principle. Small-event continuity still fails, because a
    // two-state space has no fine partitions.
    let ratio = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let problem = DecisionProblem::new(
        situation.clone(),
        ExpectationDomain::standard(),
        vec![Value::int(1), Value::int(0)],
        PlausibilityMeasure::probability(
            ProbabilityWeights::new(vec![ratio(3, 10), ratio(7, 10)]).unwrap(),
        ),
    )
    .unwrap();
    run("expected-utility preference", &situation, &problem.induced_preference().unwrap());

    // An empty preference: totality fails immediately.
    println!();
    run("reflexive-only preference", &situation, &PreferenceRelation::reflexive_only(&situation));
}
