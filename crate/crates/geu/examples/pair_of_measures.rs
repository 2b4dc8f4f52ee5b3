//! Two probability measures at once: expected utility becomes a pair, and
//! the choice of valuation order decides how acts compare.
//!
//! With the componentwise order an act dominates only if it is at least as
//! good under both measures, so some acts are incomparable. With the
//! min-comparison order acts are ranked by their worst expected outcome and
//! the ordering is total.
//!
//! Run with: cargo run --example pair_of_measures

use geu::algebra::ExpectationDomain;
use geu::decision::DecisionProblem;
use geu::measures::{PlausibilityMeasure, ProbabilityWeights};
use geu::situation::DecisionSituation;
use geu::value::{ConsId, Value, ValueDisplay};
use num_rational::BigRational;

fn main() {
    let situation = DecisionSituation::new(
        vec!["s1".into(), "s2".into()],
        vec!["win".into(), "lose".into()],
        vec![
            ("sure_win".into(), vec![ConsId(0), ConsId(0)]),
            ("bet_s1".into(), vec![ConsId(0), ConsId(1)]),
            ("bet_s2".into(), vec![ConsId(1), ConsId(0)]),
            ("sure_loss".into(), vec![ConsId(1), ConsId(1)]),
        ],
    )
    .unwrap();

    let ratio = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let optimist = ProbabilityWeights::new(vec![ratio(3, 4), ratio(1, 4)]).unwrap();
    let pessimist = ProbabilityWeights::new(vec![ratio(1, 4), ratio(3, 4)]).unwrap();
    let utility = vec![Value::int(1), Value::int(0)];

    let problem = |domain: ExpectationDomain| {
        DecisionProblem::new(
            situation.clone(),
            domain,
            utility.clone(),
            PlausibilityMeasure::pair(optimist.clone(), pessimist.clone()).unwrap(),
        )
        .unwrap()
    };
    let dominance = problem(ExpectationDomain::pair());
    let worst_case = problem(ExpectationDomain::pair_min());

    println!("expected utility under (Pr1, Pr2):");
    for act in situation.act_ids() {
        let value = dominance.geu(act).unwrap();
        let shown = ValueDisplay {
            value: &value,
            states: situation.states(),
            consequences: situation.consequences(),
        };
        println!("  {:9}  {}", situation.act(act).name, shown);
    }

    let componentwise = dominance.induced_preference().unwrap();
    let by_worst = worst_case.induced_preference().unwrap();
    println!("\ncomparisons (componentwise | worst-case):");
    for a in situation.act_ids() {
        for b in situation.act_ids() {
            if a.0 < b.0 {
                let name = |x| &situation.act(x).name;
                let describe = |pref: &geu::PreferenceRelation| {
                    match (pref.le(a, b), pref.le(b, a)) {
                        (true, true) => "equivalent",
                        (true, false) => "first is worse",
                        (false, true) => "second is worse",
                        (false, false) => "incomparable",
                    }
                };
                println!(
                    "  {:9} vs {:9}: {:16} | {}",
                    name(a),
                    name(b),
                    describe(&componentwise),
                    describe(&by_worst),
                );
            }
        }
    }
}
