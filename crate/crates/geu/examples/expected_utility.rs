//! Classic expected utility as a special case: exact rationals, probability
//! weights, and the induced preference over acts.
//!
//! Run with: cargo run --example expected_utility

use geu::algebra::ExpectationDomain;
use geu::decision::DecisionProblem;
use geu::measures::{PlausibilityMeasure, ProbabilityWeights};
use geu::situation::{DecisionSituation, Subset};
use geu::value::{ConsId, StateId, Value, ValueDisplay};
use num_rational::BigRational;

fn main() {
    // Two states, two consequences, all four acts.
    let situation = DecisionSituation::new(
        vec!["rain".into(), "shine".into()],
        vec!["dry".into(), "wet".into()],
        vec![
            ("umbrella".into(), vec![ConsId(0), ConsId(0)]),
            ("coat".into(), vec![ConsId(0), ConsId(1)]),
            ("hat".into(), vec![ConsId(1), ConsId(0)]),
            ("nothing".into(), vec![ConsId(1), ConsId(1)]),
        ],
    )
    .unwrap();

    let weights = ProbabilityWeights::new(vec![
        BigRational::new(3.into(), 10.into()),
        BigRational::new(7.into(), 10.into()),
    ])
    .unwrap();

    let problem = DecisionProblem::new(
        situation.clone(),
        ExpectationDomain::standard(),
        vec![Value::int(1), Value::int(0)],
        PlausibilityMeasure::probability(weights),
    )
    .unwrap();

    let show = |v: &Value| {
        ValueDisplay { value: v, states: situation.states(), consequences: situation.consequences() }
            .to_string()
    };

    println!("expected utilities (Pr(rain) = 3/10, u(dry) = 1, u(wet) = 0):");
    for act in situation.act_ids() {
        let value = problem.geu(act).unwrap();
        let rain_only = problem.geu_restricted(act, Subset::singleton(StateId(0))).unwrap();
        println!(
            "  {:10}  E = {:5}   E(·|rain) = {}",
            situation.act(act).name,
            show(&value),
            show(&rain_only),
        );
    }

    // Probability problems are additive, so the statewise sum agrees.
    for act in situation.act_ids() {
        assert_eq!(problem.geu(act).unwrap(), problem.geu_statewise(act).unwrap());
    }
    println!("\nstatewise sums agree with the preimage fold (the problem is additive)");

    let pref = problem.induced_preference().unwrap();
    println!("\ninduced preference (a <= b means b is at least as good):");
    for a in situation.act_ids() {
        for b in situation.act_ids() {
            if a != b && pref.lt(a, b) {
                println!("  {} < {}", situation.act(a).name, situation.act(b).name);
            }
        }
    }
}
