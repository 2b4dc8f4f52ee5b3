//! Preference relations on acts.
//!
//! A preference relation is an arbitrary reflexive binary relation on the act
//! set — no transitivity, totality or antisymmetry is assumed. Reflexivity is
//! enforced by closure at construction.

use std::collections::BTreeSet;

use rand::Rng;

use crate::situation::{ActId, DecisionSituation};

/// A reflexive binary relation over the acts of one situation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreferenceRelation {
    n_acts: u32,
    pairs: BTreeSet<(ActId, ActId)>,
}

impl PreferenceRelation {
    /// Relation over all acts of the situation with the given pairs, closed
    /// under reflexivity.
    pub fn new(situation: &DecisionSituation, pairs: impl IntoIterator<Item = (ActId, ActId)>) -> Self {
        Self::with_carrier(situation.n_acts() as u32, pairs)
    }

    /// As [`PreferenceRelation::new`] with an explicit carrier size.
    pub fn with_carrier(n_acts: u32, pairs: impl IntoIterator<Item = (ActId, ActId)>) -> Self {
        let mut set: BTreeSet<(ActId, ActId)> = pairs
            .into_iter()
            .inspect(|(a, b)| {
                debug_assert!(a.0 < n_acts && b.0 < n_acts);
            })
            .collect();
        for i in 0..n_acts {
            set.insert((ActId(i), ActId(i)));
        }
        PreferenceRelation { n_acts, pairs: set }
    }

    /// The smallest preference relation: reflexivity only.
    pub fn reflexive_only(situation: &DecisionSituation) -> Self {
        Self::new(situation, [])
    }

    /// Uniformly random reflexive relation: every ordered pair of distinct
    /// acts is included independently with probability 1/2. The result is
    /// typically neither transitive nor total.
    pub fn random<R: Rng>(situation: &DecisionSituation, rng: &mut R) -> Self {
        let n = situation.n_acts() as u32;
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && rng.gen_bool(0.5) {
                    pairs.push((ActId(a), ActId(b)));
                }
            }
        }
        Self::with_carrier(n, pairs)
    }

    pub fn n_acts(&self) -> u32 {
        self.n_acts
    }

    /// a ≾ b.
    pub fn le(&self, a: ActId, b: ActId) -> bool {
        self.pairs.contains(&(a, b))
    }

    /// a ≺ b: a ≾ b and not b ≾ a.
    pub fn lt(&self, a: ActId, b: ActId) -> bool {
        self.le(a, b) && !self.le(b, a)
    }

    /// a ~ b: related both ways.
    pub fn equiv(&self, a: ActId, b: ActId) -> bool {
        self.le(a, b) && self.le(b, a)
    }

    pub fn pairs(&self) -> &BTreeSet<(ActId, ActId)> {
        &self.pairs
    }

    /// Pairs excluding the reflexive diagonal.
    pub fn nontrivial_pairs(&self) -> impl Iterator<Item = (ActId, ActId)> + '_ {
        self.pairs.iter().copied().filter(|(a, b)| a != b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::ConsId;

    fn sit() -> DecisionSituation {
        DecisionSituation::new(
            vec!["s1".into()],
            vec!["c1".into(), "c2".into()],
            vec![
                ("a".into(), vec![ConsId(0)]),
                ("b".into(), vec![ConsId(1)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn reflexive_closure_holds() {
        let p = PreferenceRelation::new(&sit(), [(ActId(0), ActId(1))]);
        assert!(p.le(ActId(0), ActId(0)));
        assert!(p.le(ActId(1), ActId(1)));
        assert!(p.lt(ActId(0), ActId(1)));
        assert!(!p.le(ActId(1), ActId(0)));
    }

    #[test]
    fn equiv_means_both_directions() {
        let p = PreferenceRelation::new(&sit(), [(ActId(0), ActId(1)), (ActId(1), ActId(0))]);
        assert!(p.equiv(ActId(0), ActId(1)));
        assert!(!p.lt(ActId(0), ActId(1)));
    }
}
