//! Decision situations: states, consequences, and named acts.
//!
//! A situation is the objective part of a choice problem. Acts are total maps
//! from states to consequences; with finite states every act is simple. All
//! enumeration orders here are deterministic: states and consequences in
//! declaration order, subsets lexicographic as sorted index lists, simple
//! acts lexicographic as consequence tuples.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::error::Error;
use crate::value::{ConsId, PairSet, StateId};

/// Index of an act in its situation's declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ActId(pub u32);

/// A total map from states to consequences, indexed by state position.
pub type ActMap = Vec<ConsId>;

/// A subset of the state set, as a bitmask over declaration positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= 64);
        if n == 64 { Subset(!0) } else { Subset((1u64 << n) - 1) }
    }

    pub fn singleton(s: StateId) -> Subset {
        Subset(1u64 << s.0)
    }

    pub fn contains(self, s: StateId) -> bool {
        self.0 >> s.0 & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersect(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Member states in ascending declaration order.
    pub fn members(self) -> impl Iterator<Item = StateId> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros();
                rest &= rest - 1;
                Some(StateId(i))
            }
        })
    }

    pub fn to_state_set(self) -> BTreeSet<StateId> {
        self.members().collect()
    }

    pub fn from_state_set(states: &BTreeSet<StateId>) -> Subset {
        let mut mask = 0u64;
        for s in states {
            mask |= 1u64 << s.0;
        }
        Subset(mask)
    }
}

/// All subsets of `{0, .., n-1}`, lexicographic as sorted index lists:
/// `{} < {0} < {0,1} < .. < {0,n-1} < {1} < ..`.
pub fn subsets_lex(n: usize) -> Vec<Subset> {
    fn extend(prefix: u64, from: usize, n: usize, out: &mut Vec<Subset>) {
        out.push(Subset(prefix));
        for i in from..n {
            extend(prefix | 1 << i, i + 1, n, out);
        }
    }
    let mut out = Vec::with_capacity(1 << n);
    extend(0, 0, n, &mut out);
    out
}

/// A named act.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Act {
    pub name: String,
    pub map: ActMap,
}

/// A decision situation: finite nonempty states, consequences, and acts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionSituation {
    states: Vec<String>,
    consequences: Vec<String>,
    acts: Vec<Act>,
    /// First declared act per extensional map.
    by_map: BTreeMap<ActMap, ActId>,
    allow_duplicate_maps: bool,
}

impl DecisionSituation {
    /// Builds and validates a situation. Extensionally equal acts under
    /// distinct names are rejected; use [`DecisionSituation::new_with_duplicates`]
    /// to permit them.
    pub fn new(
        states: Vec<String>,
        consequences: Vec<String>,
        acts: Vec<(String, ActMap)>,
    ) -> Result<Self, Error> {
        Self::build(states, consequences, acts, false)
    }

    /// As [`DecisionSituation::new`] but permits extensional duplicate acts.
    pub fn new_with_duplicates(
        states: Vec<String>,
        consequences: Vec<String>,
        acts: Vec<(String, ActMap)>,
    ) -> Result<Self, Error> {
        Self::build(states, consequences, acts, true)
    }

    fn build(
        states: Vec<String>,
        consequences: Vec<String>,
        acts: Vec<(String, ActMap)>,
        allow_duplicate_maps: bool,
    ) -> Result<Self, Error> {
        if states.is_empty() {
            return Err(Error::EmptySituationPart("state set must be nonempty"));
        }
        if states.len() > 64 {
            return Err(Error::TooManyStates(states.len()));
        }
        if consequences.is_empty() {
            return Err(Error::EmptySituationPart("consequence set must be nonempty"));
        }
        if acts.is_empty() {
            return Err(Error::EmptySituationPart("act set must be nonempty"));
        }
        let mut seen = BTreeSet::new();
        for s in &states {
            if !seen.insert(s.clone()) {
                return Err(Error::DuplicateId { what: "state", id: s.clone() });
            }
        }
        seen.clear();
        for c in &consequences {
            if !seen.insert(c.clone()) {
                return Err(Error::DuplicateId { what: "consequence", id: c.clone() });
            }
        }
        seen.clear();
        let mut by_map: BTreeMap<ActMap, ActId> = BTreeMap::new();
        let mut stored: Vec<(String, ActMap)> = Vec::with_capacity(acts.len());
        for (i, (name, map)) in acts.into_iter().enumerate() {
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateId { what: "act", id: name.clone() });
            }
            if map.len() != states.len() {
                return Err(Error::PartialAct {
                    act: name.clone(),
                    state: states[map.len().min(states.len() - 1)].clone(),
                });
            }
            for c in &map {
                if c.0 as usize >= consequences.len() {
                    return Err(Error::UnknownConsequence(format!("#{}", c.0)));
                }
            }
            if let Some(prev) = by_map.get(&map) {
                if !allow_duplicate_maps {
                    return Err(Error::DuplicateActMap(
                        stored[prev.0 as usize].0.clone(),
                        name,
                    ));
                }
            } else {
                by_map.insert(map.clone(), ActId(i as u32));
            }
            stored.push((name, map));
        }
        Ok(DecisionSituation {
            states,
            consequences,
            acts: stored.into_iter().map(|(name, map)| Act { name, map }).collect(),
            by_map,
            allow_duplicate_maps,
        })
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn consequences(&self) -> &[String] {
        &self.consequences
    }

    pub fn acts(&self) -> &[Act] {
        &self.acts
    }

    pub fn n_states(&self) -> usize {
        self.states.len()
    }

    pub fn n_consequences(&self) -> usize {
        self.consequences.len()
    }

    pub fn n_acts(&self) -> usize {
        self.acts.len()
    }

    pub fn allows_duplicate_maps(&self) -> bool {
        self.allow_duplicate_maps
    }

    pub fn act(&self, id: ActId) -> &Act {
        &self.acts[id.0 as usize]
    }

    pub fn act_ids(&self) -> impl Iterator<Item = ActId> {
        (0..self.acts.len() as u32).map(ActId)
    }

    pub fn state_ids(&self) -> impl Iterator<Item = StateId> {
        (0..self.states.len() as u32).map(StateId)
    }

    pub fn cons_ids(&self) -> impl Iterator<Item = ConsId> {
        (0..self.consequences.len() as u32).map(ConsId)
    }

    pub fn state_by_name(&self, name: &str) -> Result<StateId, Error> {
        self.states
            .iter()
            .position(|s| s == name)
            .map(|i| StateId(i as u32))
            .ok_or_else(|| Error::UnknownState(name.to_string()))
    }

    pub fn cons_by_name(&self, name: &str) -> Result<ConsId, Error> {
        self.consequences
            .iter()
            .position(|c| c == name)
            .map(|i| ConsId(i as u32))
            .ok_or_else(|| Error::UnknownConsequence(name.to_string()))
    }

    pub fn act_by_name(&self, name: &str) -> Result<ActId, Error> {
        self.acts
            .iter()
            .position(|a| a.name == name)
            .map(|i| ActId(i as u32))
            .ok_or_else(|| Error::UnknownAct(name.to_string()))
    }

    /// First declared act with the given extensional map, if any.
    pub fn act_with_map(&self, map: &ActMap) -> Option<ActId> {
        self.by_map.get(map).copied()
    }

    /// The constant act for a consequence, as a map.
    pub fn constant_map(&self, c: ConsId) -> ActMap {
        vec![c; self.states.len()]
    }

    /// The constant act for a consequence, if it is a member of the act set.
    pub fn constant_act(&self, c: ConsId) -> Option<ActId> {
        self.act_with_map(&self.constant_map(c))
    }

    /// Graph of an act map as a set of (state, consequence) pairs.
    pub fn graph(&self, map: &ActMap) -> PairSet {
        map.iter().enumerate().map(|(s, c)| (StateId(s as u32), *c)).collect()
    }

    pub fn full_subset(&self) -> Subset {
        Subset::full(self.states.len())
    }

    /// Number of simple acts, `|C|^|S|`.
    pub fn simple_act_count(&self) -> u128 {
        let mut n = 1u128;
        for _ in 0..self.states.len() {
            n = n.saturating_mul(self.consequences.len() as u128);
        }
        n
    }

    /// True iff the act set contains every simple act (extensionally).
    pub fn has_all_simple_acts(&self) -> bool {
        self.by_map.len() as u128 == self.simple_act_count()
    }

    /// All total maps from states to consequences, in lexicographic order of
    /// their consequence tuples (first state most significant); the first is
    /// the constant act on the first consequence.
    pub fn enumerate_simple_acts(&self, budget: u64) -> Result<Vec<ActMap>, Error> {
        let count = self.simple_act_count();
        if count > budget as u128 {
            return Err(Error::BudgetExceeded {
                what: "simple-act enumeration".to_string(),
                required: count,
                unit: "acts",
                budget,
            });
        }
        let n = self.states.len();
        let k = self.consequences.len() as u32;
        let mut out = Vec::with_capacity(count as usize);
        let mut cur = vec![ConsId(0); n];
        loop {
            out.push(cur.clone());
            let mut pos = n;
            while pos > 0 {
                pos -= 1;
                if cur[pos].0 + 1 < k {
                    cur[pos].0 += 1;
                    for later in cur.iter_mut().skip(pos + 1) {
                        later.0 = 0;
                    }
                    break;
                }
                if pos == 0 {
                    return Ok(out);
                }
            }
        }
    }
}

/// The act equal to `on_x` inside `x` and to `outside` elsewhere.
pub fn splice(on_x: &ActMap, x: Subset, outside: &ActMap) -> ActMap {
    on_x
        .iter()
        .zip(outside)
        .enumerate()
        .map(|(s, (a, b))| if x.contains(StateId(s as u32)) { *a } else { *b })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_by_two() -> DecisionSituation {
        DecisionSituation::new(
            vec!["s1".into(), "s2".into()],
            vec!["c1".into(), "c2".into()],
            vec![
                ("aK".into(), vec![ConsId(0), ConsId(0)]),
                ("aL".into(), vec![ConsId(0), ConsId(1)]),
                ("aM".into(), vec![ConsId(1), ConsId(0)]),
                ("aN".into(), vec![ConsId(1), ConsId(1)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn enumeration_counts_and_order() {
        let sit = two_by_two();
        let acts = sit.enumerate_simple_acts(4096).unwrap();
        assert_eq!(acts.len(), 4);
        assert_eq!(acts[0], vec![ConsId(0), ConsId(0)]);
        assert_eq!(acts[1], vec![ConsId(0), ConsId(1)]);
        assert_eq!(acts[3], vec![ConsId(1), ConsId(1)]);

        let sit3 = DecisionSituation::new(
            vec!["s1".into()],
            vec!["c1".into(), "c2".into(), "c3".into()],
            vec![("a".into(), vec![ConsId(0)])],
        )
        .unwrap();
        assert_eq!(sit3.enumerate_simple_acts(4096).unwrap().len(), 3);

        let sit8 = DecisionSituation::new(
            vec!["s1".into(), "s2".into(), "s3".into()],
            vec!["c1".into(), "c2".into()],
            vec![("a".into(), vec![ConsId(0); 3])],
        )
        .unwrap();
        let all = sit8.enumerate_simple_acts(4096).unwrap();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], vec![ConsId(0); 3]);
    }

    #[test]
    fn enumeration_respects_budget() {
        let sit = two_by_two();
        assert!(matches!(
            sit.enumerate_simple_acts(3),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn splice_boundary_cases() {
        let sit = two_by_two();
        let a = sit.act(ActId(0)).map.clone();
        let b = sit.act(ActId(3)).map.clone();
        assert_eq!(splice(&a, Subset::EMPTY, &b), b);
        assert_eq!(splice(&a, sit.full_subset(), &b), a);
        // Constants spliced on {s1} give the mixed act.
        let mixed = splice(&a, Subset::singleton(StateId(0)), &b);
        assert_eq!(mixed, vec![ConsId(0), ConsId(1)]);
    }

    #[test]
    fn duplicate_maps_rejected_by_default() {
        let r = DecisionSituation::new(
            vec!["s1".into()],
            vec!["c1".into()],
            vec![
                ("a".into(), vec![ConsId(0)]),
                ("b".into(), vec![ConsId(0)]),
            ],
        );
        assert!(matches!(r, Err(Error::DuplicateActMap(..))));
        let ok = DecisionSituation::new_with_duplicates(
            vec!["s1".into()],
            vec!["c1".into()],
            vec![
                ("a".into(), vec![ConsId(0)]),
                ("b".into(), vec![ConsId(0)]),
            ],
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn subsets_lex_order() {
        let subs = subsets_lex(3);
        let lists: Vec<Vec<u32>> =
            subs.iter().map(|x| x.members().map(|s| s.0).collect()).collect();
        assert_eq!(
            lists,
            vec![
                vec![],
                vec![0],
                vec![0, 1],
                vec![0, 1, 2],
                vec![0, 2],
                vec![1],
                vec![1, 2],
                vec![2],
            ]
        );
    }
}
