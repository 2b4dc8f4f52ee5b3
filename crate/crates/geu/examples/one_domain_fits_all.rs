//! One expectation domain and one plausibility measure can serve every
//! preference on a situation: values carry tags of interned preferences,
//! and the utility function alone selects which preference the expected
//! utilities mirror.
//!
//! Run with: cargo run --example one_domain_fits_all

use geu::situation::{ActId, DecisionSituation};
use geu::synthesis::{fixed_domain, fixed_representation};
use geu::value::ConsId;
use geu::PreferenceRelation;

fn main() {
    let situation = DecisionSituation::new(
        vec!["s1".into(), "s2".into()],
        vec!["c1".into(), "c2".into()],
        vec![
            ("a".into(), vec![ConsId(0), ConsId(0)]),
            ("b".into(), vec![ConsId(0), ConsId(1)]),
            ("c".into(), vec![ConsId(1), ConsId(0)]),
            ("d".into(), vec![ConsId(1), ConsId(1)]),
        ],
    )
    .unwrap();

    // The shared pair depends only on the situation.
    let shared = fixed_domain(&situation);
    assert_eq!(shared, fixed_domain(&situation));
    println!("shared domain constructed once for the situation");

    // Two very different preferences: a chain and a cycle.
    let chain = PreferenceRelation::new(
        &situation,
        [
            (ActId(3), ActId(2)),
            (ActId(2), ActId(1)),
            (ActId(1), ActId(0)),
            (ActId(3), ActId(1)),
            (ActId(3), ActId(0)),
            (ActId(2), ActId(0)),
        ],
    );
    let cycle = PreferenceRelation::new(
        &situation,
        [(ActId(0), ActId(1)), (ActId(1), ActId(2)), (ActId(2), ActId(3)), (ActId(3), ActId(0))],
    );

    for (label, pref) in [("chain", &chain), ("cycle", &cycle)] {
        let rep = fixed_representation(&shared, &situation, pref).unwrap();
        assert_eq!(rep.problem.induced_preference().unwrap(), *pref);
        println!(
            "{label}: interned as tag #{}, round-trips through the same (E, Pl)",
            rep.pref_id.unwrap().0
        );
    }

    // Utilities from different tags are unrelated: the tags insulate the
    // interned preferences from each other.
    let (u_chain, _) = geu::synthesis::utility_for(&shared.0, &situation, &chain).unwrap();
    let (u_cycle, _) = geu::synthesis::utility_for(&shared.0, &situation, &cycle).unwrap();
    let unrelated = !shared.0.le_u(&u_chain[0], &u_cycle[0]).unwrap()
        && !shared.0.le_u(&u_cycle[0], &u_chain[0]).unwrap();
    println!("utilities under different tags stay unrelated: {unrelated}");
}
