//! Monotonicity costs nothing: extending the act-valued order along common
//! `⊕`-summands makes the domain monotonic without relating any new pairs
//! of expected-utility values, so the same preferences are representable.
//!
//! Run with: cargo run --example monotonic_extension

use geu::situation::{ActId, DecisionSituation};
use geu::synthesis::{canonical_representation, monotonic_representation};
use geu::value::{ConsId, Value};
use geu::PreferenceRelation;

fn main() {
    let situation = DecisionSituation::new(
        vec!["s1".into(), "s2".into()],
        vec!["c1".into(), "c2".into()],
        vec![
            ("a".into(), vec![ConsId(0), ConsId(0)]),
            ("b".into(), vec![ConsId(0), ConsId(1)]),
        ],
    )
    .unwrap();
    let pref = PreferenceRelation::new(&situation, [(ActId(0), ActId(1))]);

    let plain = canonical_representation(&situation, &pref).unwrap();
    let extended = monotonic_representation(&situation, &pref).unwrap();

    // Probe Eq-monotonicity exhaustively over all valuation triples.
    let triples = plain.problem.domain().all_v_triples(1 << 20).unwrap();
    let plain_check = plain.problem.domain().is_monotonic(&triples).unwrap();
    let extended_check = extended.problem.domain().is_monotonic(&triples).unwrap();

    println!("plain construction monotonic:    {}", plain_check.holds);
    if let Some(witness) = &plain_check.witness {
        println!("  violating triple (x ≾ y but x ⊕ z and y ⊕ z unrelated):");
        for (name, value) in witness {
            println!("    {name} = {value:?}");
        }
    }
    println!("extended construction monotonic: {}", extended_check.holds);

    // Same preference either way.
    assert_eq!(plain.problem.induced_preference().unwrap(), pref);
    assert_eq!(extended.problem.induced_preference().unwrap(), pref);
    println!("\nboth representations induce the input preference");

    // Restricted to expected-utility values, the two orders agree: the
    // extension is conservative.
    let values: Vec<Value> =
        situation.act_ids().map(|a| plain.problem.geu(a).unwrap()).collect();
    for x in &values {
        for y in &values {
            assert_eq!(
                plain.problem.domain().le_v(x, y).unwrap(),
                extended.problem.domain().le_v(x, y).unwrap(),
            );
        }
    }
    println!("the extension relates no new pairs of expected-utility values");
}
