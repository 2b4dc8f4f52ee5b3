//! Derived relations over events: conditional preference given an event,
//! null events (the agent stops caring), and the likelihood ordering read
//! off binary bets.
//!
//! Run with: cargo run --example events_and_likelihood

use geu::algebra::ExpectationDomain;
use geu::decision::DecisionProblem;
use geu::measures::{PlausibilityMeasure, ProbabilityWeights};
use geu::savage::{conditional_preference, is_null, likelihood_relation, Version};
use geu::situation::{subsets_lex, DecisionSituation, Subset};
use geu::value::Value;
use num_rational::BigRational;

fn main() {
    let ratio = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let seed = DecisionSituation::new(
        vec!["low".into(), "high".into()],
        vec!["win".into(), "lose".into()],
        vec![("seed".into(), vec![geu::ConsId(0); 2])],
    )
    .unwrap();
    let acts = seed
        .enumerate_simple_acts(16)
        .unwrap()
        .into_iter()
        .enumerate()
        .map(|(i, m)| (format!("a{i}"), m))
        .collect();
    let situation = DecisionSituation::new(
        vec!["low".into(), "high".into()],
        vec!["win".into(), "lose".into()],
        acts,
    )
    .unwrap();

    // Pr(low) = 0: the agent is sure the market is high.
    let problem = DecisionProblem::new(
        situation.clone(),
        ExpectationDomain::standard(),
        vec![Value::int(1), Value::int(0)],
        PlausibilityMeasure::probability(
            ProbabilityWeights::new(vec![ratio(0, 1), ratio(1, 1)]).unwrap(),
        ),
    )
    .unwrap();
    let pref = problem.induced_preference().unwrap();

    let event_name = |x: Subset| {
        let names: Vec<_> =
            x.members().map(|s| situation.states()[s.0 as usize].clone()).collect();
        format!("{{{}}}", names.join(", "))
    };

    println!("null events under Pr = (0, 1):");
    for x in subsets_lex(2) {
        let result = is_null(&situation, &pref, x, Version::General);
        println!("  {:12} null: {}", event_name(x), result.holds);
    }

    // Conditioning on the impossible event relates everything; conditioning
    // on the certain event recovers the unconditional preference.
    let on_low = conditional_preference(&situation, &pref, Subset::singleton(geu::StateId(0)));
    let all_pairs = situation.n_acts() * situation.n_acts();
    println!(
        "\nconditional preference given {{low}} relates {}/{} ordered pairs",
        on_low.pairs.len(),
        all_pairs
    );

    let likelihood = likelihood_relation(&situation, &pref);
    println!("\nlikelihood ordering read off binary bets (X <= Y rows):");
    for x in subsets_lex(2) {
        for y in subsets_lex(2) {
            if likelihood.le(x, y) && !likelihood.le(y, x) {
                println!("  {} < {}", event_name(x), event_name(y));
            }
        }
    }
}
