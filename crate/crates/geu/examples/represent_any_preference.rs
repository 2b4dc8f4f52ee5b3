//! Any reflexive preference on acts — cyclic, incomplete, whatever — has a
//! GEU representation: pick the right algebra and the agent looks like an
//! expected-utility maximizer.
//!
//! The construction lets every act evaluate to its own graph: utilities are
//! constant graphs, plausibilities are events themselves, `⊕` is union and
//! `X ⊗ c = X x {c}`. The valuation order then simply mirrors the
//! preference.
//!
//! Run with: cargo run --example represent_any_preference

use geu::situation::{ActId, DecisionSituation};
use geu::synthesis::canonical_representation;
use geu::value::{ConsId, ValueDisplay};
use geu::PreferenceRelation;

fn main() {
    let situation = DecisionSituation::new(
        vec!["s1".into(), "s2".into()],
        vec!["c1".into(), "c2".into()],
        vec![
            ("rock".into(), vec![ConsId(0), ConsId(0)]),
            ("paper".into(), vec![ConsId(0), ConsId(1)]),
            ("scissors".into(), vec![ConsId(1), ConsId(0)]),
        ],
    )
    .unwrap();

    // A strict cycle: rock < paper < scissors < rock. No real-valued
    // utility can produce this.
    let cyclic = PreferenceRelation::new(
        &situation,
        [
            (ActId(0), ActId(1)),
            (ActId(1), ActId(2)),
            (ActId(2), ActId(0)),
        ],
    );

    let rep = canonical_representation(&situation, &cyclic).unwrap();
    println!("each act evaluates to its own graph:");
    for act in situation.act_ids() {
        let value = rep.problem.geu(act).unwrap();
        let shown = ValueDisplay {
            value: &value,
            states: situation.states(),
            consequences: situation.consequences(),
        };
        println!("  E({}) = {}", situation.act(act).name, shown);
    }

    let induced = rep.problem.induced_preference().unwrap();
    assert_eq!(induced, cyclic);
    println!("\ninduced preference equals the input cycle exactly:");
    for (a, b) in cyclic.nontrivial_pairs() {
        println!("  {} <= {}", situation.act(a).name, situation.act(b).name);
    }

    // The constructed problem is additive and its fold has an identity.
    assert!(rep.problem.is_additive().unwrap().holds);
    let identity = rep.problem.domain().has_oplus_identity(1 << 20).unwrap();
    println!(
        "\nadditive: yes; ⊕ identity: {}",
        ValueDisplay {
            value: &identity.identity.unwrap(),
            states: situation.states(),
            consequences: situation.consequences(),
        }
    );
}
