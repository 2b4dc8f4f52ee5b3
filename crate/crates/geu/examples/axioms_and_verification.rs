//! The algebra-side axioms mirror the act-side postulates: on problems in
//! the right classes (additive, whole) each axiom holds exactly when the
//! matching postulate holds of the induced preference. This example checks
//! the biconditionals on several problems.
//!
//! Run with: cargo run --example axioms_and_verification

use geu::algebra::ExpectationDomain;
use geu::decision::DecisionProblem;
use geu::measures::{PlausibilityMeasure, ProbabilityWeights};
use geu::savage::{pi_membership, verify_representation, CheckIndex};
use geu::situation::DecisionSituation;
use geu::synthesis::canonical_representation;
use geu::value::Value;
use geu::{Budgets, PreferenceRelation};
use num_rational::BigRational;
use rand::SeedableRng;

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

fn report(label: &str, problem: &DecisionProblem) {
    let pi = pi_membership(problem, Budgets::default()).unwrap();
    println!(
        "{label}  (additive: {}, all-acts-or-whole: {})",
        pi.additive, pi.zero
    );
    let verification =
        verify_representation(problem, &CheckIndex::ALL, Budgets::default()).unwrap();
    for item in &verification.items {
        println!(
            "  A{idx} = {a:5}  P{idx} = {p:5}  biconditional {verdict}",
            idx = item.index.token(),
            a = item.axiom.holds,
            p = item.postulate.holds,
            verdict = if item.agree() { "holds" } else { "VIOLATED" },
        );
    }
    assert!(verification.all_agree());
    println!();
}

fn main() {
    let ratio = |n: i64, d: i64| BigRational::new(n.into(), d.into());

    let situation = all_acts(2, 2);
    let eu = DecisionProblem::new(
        situation.clone(),
        ExpectationDomain::standard(),
        vec![Value::int(1), Value::int(0)],
        PlausibilityMeasure::probability(
            ProbabilityWeights::new(vec![ratio(3, 10), ratio(7, 10)]).unwrap(),
        ),
    )
    .unwrap();
    report("standard expected utility", &eu);

    // A pair-measure problem: some expected utilities are incomparable, so
    // totality fails on both sides at once.
    let pair = DecisionProblem::new(
        situation.clone(),
        ExpectationDomain::pair(),
        vec![Value::int(1), Value::int(0)],
        PlausibilityMeasure::pair(
            ProbabilityWeights::new(vec![ratio(3, 4), ratio(1, 4)]).unwrap(),
            ProbabilityWeights::new(vec![ratio(1, 4), ratio(3, 4)]).unwrap(),
        )
        .unwrap(),
    )
    .unwrap();
    report("pair of measures, componentwise order", &pair);

    // A random non-transitive preference through the act-valued
    // construction: transitivity fails on both sides at once.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    let pref = PreferenceRelation::random(&situation, &mut rng);
    let rep = canonical_representation(&situation, &pref).unwrap();
    report("act-valued representation of a random preference", &rep.problem);
}
