//! A belief-function style measure: total ignorance between two states.
//! Both singleton events are fully implausible while their union is
//! certain, so the problem is not additive, and the preimage-based
//! expectation genuinely differs from the statewise sum.
//!
//! Run with: cargo run --example belief_functions

use geu::algebra::ExpectationDomain;
use geu::decision::DecisionProblem;
use geu::measures::PlausibilityMeasure;
use geu::situation::{DecisionSituation, Subset};
use geu::value::{ConsId, StateId, Value, ValueDisplay};

fn main() {
    let situation = DecisionSituation::new(
        vec!["s1".into(), "s2".into()],
        vec!["good".into(), "bad".into()],
        vec![
            ("always_good".into(), vec![ConsId(0), ConsId(0)]),
            ("mixed".into(), vec![ConsId(0), ConsId(1)]),
            ("always_bad".into(), vec![ConsId(1), ConsId(1)]),
        ],
    )
    .unwrap();

    let belief = PlausibilityMeasure::table(
        2,
        vec![
            (Subset::EMPTY, Value::int(0)),
            (Subset::singleton(StateId(0)), Value::int(0)),
            (Subset::singleton(StateId(1)), Value::int(0)),
            (Subset::full(2), Value::int(1)),
        ],
    )
    .unwrap();

    let problem = DecisionProblem::new(
        situation.clone(),
        ExpectationDomain::standard(),
        vec![Value::int(1), Value::int(0)],
        belief,
    )
    .unwrap();

    // Pl1–Pl3 hold: this is a legitimate plausibility measure.
    let report = problem.plausibility().validate(problem.domain()).unwrap();
    println!("measure laws: {}", if report.passed() { "all pass" } else { "violated" });

    // Additivity fails, with a concrete witness.
    let additivity = problem.is_additive().unwrap();
    let (c, x, y) = additivity.witness.unwrap();
    println!(
        "additive: {} — witness consequence {} on events {:?} and {:?}",
        additivity.holds,
        situation.consequences()[c.0 as usize],
        x.members().map(|s| situation.states()[s.0 as usize].clone()).collect::<Vec<_>>(),
        y.members().map(|s| situation.states()[s.0 as usize].clone()).collect::<Vec<_>>(),
    );

    let show = |v: &Value| {
        ValueDisplay { value: v, states: situation.states(), consequences: situation.consequences() }
            .to_string()
    };
    println!("\nact           preimage fold   statewise sum");
    for act in situation.act_ids() {
        let folded = problem.geu(act).unwrap();
        let statewise = problem.geu_statewise(act).unwrap();
        println!(
            "{:13} {:15} {}",
            situation.act(act).name,
            show(&folded),
            show(&statewise),
        );
    }
    println!("\nthe sure thing (always_good) keeps its full value only under the preimage fold");
}
