//! The per-preference expectation domain in which each act is its own
//! expected utility.
//!
//! Utilities are full constant graphs `S x {c}`, plausibilities are state
//! subsets ordered by inclusion, valuations are sets of state-consequence
//! pairs, `⊕` is union and `X ⊗ c = X x {c}`. The valuation order relates a
//! pair of distinct values only when both are graphs of acts in the act set
//! and the preference relates those acts. The monotonic variant additionally
//! relates `a ∪ z` to `b ∪ z` for related acts `a ≾ b` and any pair set `z`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;
use crate::pref::PreferenceRelation;
use crate::situation::{ActId, DecisionSituation};
use crate::value::{ConsId, PairSet, PrefId, StateId, Value};

/// Checks that extensionally equal acts are preference-indistinguishable and
/// returns the preference collapsed onto first-declared representatives.
pub(crate) fn normalize_preference(
    situation: &DecisionSituation,
    pref: &PreferenceRelation,
) -> Result<BTreeSet<(ActId, ActId)>, Error> {
    let rep = |a: ActId| situation.act_with_map(&situation.act(a).map).expect("act map interned");
    if situation.allows_duplicate_maps() {
        for a in situation.act_ids() {
            let r = rep(a);
            if r == a {
                continue;
            }
            for b in situation.act_ids() {
                if pref.le(a, b) != pref.le(r, b) || pref.le(b, a) != pref.le(b, r) {
                    return Err(Error::DuplicateActObstruction(
                        situation.act(r).name.clone(),
                        situation.act(a).name.clone(),
                    ));
                }
            }
        }
    }
    Ok(pref.pairs().iter().map(|&(a, b)| (rep(a), rep(b))).collect())
}

/// Graph of the constant act on `c`.
pub(crate) fn constant_graph(n_states: u32, c: ConsId) -> PairSet {
    (0..n_states).map(|s| (StateId(s), c)).collect()
}

/// If the pair set is a full constant graph `S x {c}`, the consequence.
pub(crate) fn constant_of(x: &PairSet, n_states: u32) -> Option<ConsId> {
    if x.len() != n_states as usize {
        return None;
    }
    let mut cons = None;
    for (expect, (s, c)) in x.iter().enumerate() {
        if s.0 != expect as u32 || *cons.get_or_insert(*c) != *c {
            return None;
        }
    }
    cons
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct CanonicalDomain {
    pub n_states: u32,
    pub n_cons: u32,
    /// First-declared act per extensional graph.
    act_graphs: BTreeMap<PairSet, ActId>,
    /// Preference over representatives, diagonal included.
    pref_pairs: BTreeSet<(ActId, ActId)>,
    /// Off-diagonal related pairs as graphs, for the monotonic extension.
    related_graphs: Vec<(PairSet, PairSet)>,
    pub monotonic: bool,
}

impl CanonicalDomain {
    pub fn new(
        situation: &DecisionSituation,
        pref: &PreferenceRelation,
        monotonic: bool,
    ) -> Result<Self, Error> {
        let pref_pairs = normalize_preference(situation, pref)?;
        let act_graphs: BTreeMap<PairSet, ActId> = situation
            .acts()
            .iter()
            .enumerate()
            .filter_map(|(i, act)| {
                let id = ActId(i as u32);
                (situation.act_with_map(&act.map) == Some(id))
                    .then(|| (situation.graph(&act.map), id))
            })
            .collect();
        let graph_of: BTreeMap<ActId, PairSet> =
            act_graphs.iter().map(|(g, id)| (*id, g.clone())).collect();
        let related_graphs = pref_pairs
            .iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (graph_of[a].clone(), graph_of[b].clone()))
            .collect();
        Ok(CanonicalDomain {
            n_states: situation.n_states() as u32,
            n_cons: situation.n_consequences() as u32,
            act_graphs,
            pref_pairs,
            related_graphs,
            monotonic,
        })
    }

    pub fn reflexive(situation: &DecisionSituation) -> Self {
        Self::new(situation, &PreferenceRelation::reflexive_only(situation), false)
            .expect("reflexive preference never obstructs")
    }

    pub fn utility(&self, c: ConsId) -> Value {
        Value::PairSet(constant_graph(self.n_states, c))
    }

    pub fn bottom(&self) -> Value {
        Value::StateSet(BTreeSet::new())
    }

    pub fn top(&self) -> Value {
        Value::StateSet((0..self.n_states).map(StateId).collect())
    }

    pub fn le_p(&self, x: &Value, y: &Value) -> Result<bool, Error> {
        Ok(x.as_state_set()?.is_subset(y.as_state_set()?))
    }

    pub fn le_u(&self, x: &Value, y: &Value) -> Result<bool, Error> {
        let (gx, gy) = (x.as_pair_set()?, y.as_pair_set()?);
        if constant_of(gx, self.n_states).is_none() || constant_of(gy, self.n_states).is_none() {
            return Err(Error::OutsideCarrier(format!("{x:?}"), "utility"));
        }
        Ok(self.related(gx, gy))
    }

    pub fn le_v(&self, x: &Value, y: &Value) -> Result<bool, Error> {
        let (gx, gy) = (x.as_pair_set()?, y.as_pair_set()?);
        if !self.monotonic {
            return Ok(self.related(gx, gy));
        }
        if gx == gy {
            return Ok(true);
        }
        // a ≾ b relates a ∪ z to b ∪ z; a witness z exists iff the minimal
        // candidate (x∖a) ∪ (y∖b) works.
        for (ga, gb) in &self.related_graphs {
            let mut z: PairSet = gx.difference(ga).cloned().collect();
            z.extend(gy.difference(gb).cloned());
            let ax: PairSet = ga.union(&z).cloned().collect();
            let by: PairSet = gb.union(&z).cloned().collect();
            if ax == *gx && by == *gy {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn related(&self, gx: &PairSet, gy: &PairSet) -> bool {
        if gx == gy {
            return true;
        }
        match (self.act_graphs.get(gx), self.act_graphs.get(gy)) {
            (Some(a), Some(b)) => self.pref_pairs.contains(&(*a, *b)),
            _ => false,
        }
    }

    pub fn oplus(&self, x: &Value, y: &Value) -> Result<Value, Error> {
        Ok(Value::PairSet(x.as_pair_set()?.union(y.as_pair_set()?).cloned().collect()))
    }

    pub fn otimes(&self, p: &Value, u: &Value) -> Result<Value, Error> {
        let x = p.as_state_set()?;
        let c = constant_of(u.as_pair_set()?, self.n_states)
            .ok_or_else(|| Error::OutsideCarrier(format!("{u:?}"), "utility"))?;
        Ok(Value::PairSet(x.iter().map(|s| (*s, c)).collect()))
    }

    pub fn u_carrier(&self) -> Vec<Value> {
        (0..self.n_cons).map(|c| self.utility(ConsId(c))).collect()
    }

    pub fn p_carrier(&self) -> Vec<Value> {
        crate::situation::subsets_lex(self.n_states as usize)
            .into_iter()
            .map(|x| Value::StateSet(x.to_state_set()))
            .collect()
    }

    pub fn v_carrier_size(&self) -> u128 {
        1u128 << (self.n_states as u128 * self.n_cons as u128).min(127)
    }

    pub fn v_carrier(&self) -> Vec<Value> {
        pair_subsets(self.n_states, self.n_cons).map(Value::PairSet).collect()
    }
}

/// All subsets of the pair universe `S x C`, in mask order (state-major).
pub(crate) fn pair_subsets(n_states: u32, n_cons: u32) -> impl Iterator<Item = PairSet> {
    let bits = (n_states * n_cons) as u64;
    debug_assert!(bits <= 24, "pair universe too large to enumerate");
    (0..1u64 << bits).map(move |mask| {
        let mut set = PairSet::new();
        for b in 0..bits {
            if mask >> b & 1 == 1 {
                set.insert((StateId((b as u32) / n_cons), ConsId((b as u32) % n_cons)));
            }
        }
        set
    })
}

/// Shared-domain variant: values carry tag sets of interned preference ids,
/// so one domain and one plausibility measure serve every preference on the
/// situation; only the utility function changes.
/// Interned preferences, normalized to act-graph representatives.
type PrefRegistry = std::sync::Arc<std::sync::RwLock<Vec<BTreeSet<(ActId, ActId)>>>>;

#[derive(Debug)]
pub(crate) struct TaggedDomain {
    pub n_states: u32,
    pub n_cons: u32,
    act_graphs: BTreeMap<PairSet, ActId>,
    registry: PrefRegistry,
}

impl Clone for TaggedDomain {
    fn clone(&self) -> Self {
        TaggedDomain {
            n_states: self.n_states,
            n_cons: self.n_cons,
            act_graphs: self.act_graphs.clone(),
            registry: std::sync::Arc::clone(&self.registry),
        }
    }
}

/// Structural identity is the construction: the situation binding. The
/// registry is session state and two fresh constructions are equal.
impl PartialEq for TaggedDomain {
    fn eq(&self, other: &Self) -> bool {
        self.n_states == other.n_states
            && self.n_cons == other.n_cons
            && self.act_graphs == other.act_graphs
    }
}

impl Eq for TaggedDomain {}

impl TaggedDomain {
    pub fn new(situation: &DecisionSituation) -> Self {
        let act_graphs = situation
            .acts()
            .iter()
            .enumerate()
            .filter_map(|(i, act)| {
                let id = ActId(i as u32);
                (situation.act_with_map(&act.map) == Some(id))
                    .then(|| (situation.graph(&act.map), id))
            })
            .collect();
        TaggedDomain {
            n_states: situation.n_states() as u32,
            n_cons: situation.n_consequences() as u32,
            act_graphs,
            registry: Default::default(),
        }
    }

    /// Interns a preference under a fresh id; the allocator is atomic.
    pub fn intern(
        &self,
        situation: &DecisionSituation,
        pref: &PreferenceRelation,
    ) -> Result<PrefId, Error> {
        let pairs = normalize_preference(situation, pref)?;
        let mut reg = self.registry.write().expect("registry lock");
        reg.push(pairs);
        Ok(PrefId(reg.len() as u32 - 1))
    }

    pub fn interned_count(&self) -> u32 {
        self.registry.read().expect("registry lock").len() as u32
    }

    fn pref_le(&self, id: PrefId, a: ActId, b: ActId) -> Result<bool, Error> {
        let reg = self.registry.read().expect("registry lock");
        let pairs = reg.get(id.0 as usize).ok_or(Error::UnknownPrefId(id.0))?;
        Ok(pairs.contains(&(a, b)))
    }

    pub fn utility(&self, c: ConsId, id: PrefId) -> Value {
        Value::Tagged(constant_graph(self.n_states, c), BTreeSet::from([id]))
    }

    pub fn bottom(&self) -> Value {
        Value::StateSet(BTreeSet::new())
    }

    pub fn top(&self) -> Value {
        Value::StateSet((0..self.n_states).map(StateId).collect())
    }

    pub fn le_p(&self, x: &Value, y: &Value) -> Result<bool, Error> {
        Ok(x.as_state_set()?.is_subset(y.as_state_set()?))
    }

    /// Distinct values are related only under equal singleton tags; pairs
    /// with other tag sets are related by reflexivity alone.
    pub fn le_v(&self, x: &Value, y: &Value) -> Result<bool, Error> {
        let (gx, tx) = x.as_tagged()?;
        let (gy, ty) = y.as_tagged()?;
        if gx == gy && tx == ty {
            return Ok(true);
        }
        if tx != ty || tx.len() != 1 {
            return Ok(false);
        }
        let id = *tx.first().expect("singleton tag");
        match (self.act_graphs.get(gx), self.act_graphs.get(gy)) {
            (Some(a), Some(b)) => self.pref_le(id, *a, *b),
            _ => Ok(false),
        }
    }

    pub fn le_u(&self, x: &Value, y: &Value) -> Result<bool, Error> {
        let (gx, _) = x.as_tagged()?;
        let (gy, _) = y.as_tagged()?;
        if constant_of(gx, self.n_states).is_none() || constant_of(gy, self.n_states).is_none() {
            return Err(Error::OutsideCarrier(format!("{x:?}"), "utility"));
        }
        self.le_v(x, y)
    }

    pub fn oplus(&self, x: &Value, y: &Value) -> Result<Value, Error> {
        let (gx, tx) = x.as_tagged()?;
        let (gy, ty) = y.as_tagged()?;
        Ok(Value::Tagged(gx.union(gy).cloned().collect(), tx.union(ty).cloned().collect()))
    }

    /// `X ⊗ (c, Y) = (X x {c}, Y)`, except that the bottom plausibility maps
    /// everything to the ⊕ identity `(∅, ∅)`.
    pub fn otimes(&self, p: &Value, u: &Value) -> Result<Value, Error> {
        let x = p.as_state_set()?;
        let (gu, tags) = u.as_tagged()?;
        let c = constant_of(gu, self.n_states)
            .ok_or_else(|| Error::OutsideCarrier(format!("{u:?}"), "utility"))?;
        if x.is_empty() {
            return Ok(Value::Tagged(PairSet::new(), BTreeSet::new()));
        }
        Ok(Value::Tagged(x.iter().map(|s| (*s, c)).collect(), tags.clone()))
    }

    fn tag_sets(&self) -> Vec<BTreeSet<PrefId>> {
        let k = self.interned_count();
        let mut out = Vec::with_capacity(1 << k);
        for mask in 0u64..1 << k {
            out.push((0..k).filter(|i| mask >> i & 1 == 1).map(PrefId).collect());
        }
        out
    }

    pub fn u_carrier(&self) -> Vec<Value> {
        let tags = self.tag_sets();
        (0..self.n_cons)
            .flat_map(|c| {
                let tags = tags.clone();
                tags.into_iter()
                    .map(move |t| Value::Tagged(constant_graph(self.n_states, ConsId(c)), t))
            })
            .collect()
    }

    pub fn p_carrier(&self) -> Vec<Value> {
        crate::situation::subsets_lex(self.n_states as usize)
            .into_iter()
            .map(|x| Value::StateSet(x.to_state_set()))
            .collect()
    }

    pub fn v_carrier_size(&self) -> u128 {
        let bits =
            (self.n_states as u128 * self.n_cons as u128 + self.interned_count() as u128).min(127);
        1u128 << bits
    }

    pub fn v_carrier(&self) -> Vec<Value> {
        let tags = self.tag_sets();
        pair_subsets(self.n_states, self.n_cons)
            .flat_map(|g| tags.iter().map(move |t| Value::Tagged(g.clone(), t.clone())))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn situation() -> DecisionSituation {
        DecisionSituation::new(
            vec!["s1".into(), "s2".into()],
            vec!["c1".into(), "c2".into()],
            vec![
                ("aK".into(), vec![ConsId(0), ConsId(0)]),
                ("aL".into(), vec![ConsId(0), ConsId(1)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn otimes_builds_products() {
        let sit = situation();
        let d = CanonicalDomain::reflexive(&sit);
        // ⊤ ⊗ c = S x {c}.
        let got = d.otimes(&d.top(), &d.utility(ConsId(0))).unwrap();
        assert_eq!(got, Value::pair_set([(0, 0), (1, 0)]));
        // ⊥ ⊗ c = ∅.
        let got = d.otimes(&d.bottom(), &d.utility(ConsId(1))).unwrap();
        assert_eq!(got, Value::pair_set([]));
    }

    #[test]
    fn valuation_order_relates_only_acts() {
        let sit = situation();
        let pref = PreferenceRelation::new(&sit, [(ActId(0), ActId(1))]);
        let d = CanonicalDomain::new(&sit, &pref, false).unwrap();
        let ga = Value::pair_set([(0, 0), (1, 0)]);
        let gb = Value::pair_set([(0, 0), (1, 1)]);
        assert!(d.le_v(&ga, &gb).unwrap());
        assert!(!d.le_v(&gb, &ga).unwrap());
        // Distinct non-act values stay unrelated.
        let x = Value::pair_set([(0, 0)]);
        let y = Value::pair_set([(0, 1)]);
        assert!(!d.le_v(&x, &y).unwrap());
        assert!(d.le_v(&x, &x).unwrap());
    }

    #[test]
    fn monotonic_extension_adds_common_summands() {
        let sit = situation();
        let pref = PreferenceRelation::new(&sit, [(ActId(0), ActId(1))]);
        let d = CanonicalDomain::new(&sit, &pref, true).unwrap();
        let ga = Value::pair_set([(0, 0), (1, 0)]);
        let gb = Value::pair_set([(0, 0), (1, 1)]);
        let z = Value::pair_set([(0, 1)]);
        let az = d.oplus(&ga, &z).unwrap();
        let bz = d.oplus(&gb, &z).unwrap();
        assert!(d.le_v(&az, &bz).unwrap());
        assert!(!d.le_v(&bz, &az).unwrap());
    }

    #[test]
    fn tagged_values_need_equal_singleton_tags() {
        let sit = situation();
        let d = TaggedDomain::new(&sit);
        let p1 = PreferenceRelation::new(&sit, [(ActId(0), ActId(1))]);
        let p2 = PreferenceRelation::new(&sit, []);
        let r1 = d.intern(&sit, &p1).unwrap();
        let r2 = d.intern(&sit, &p2).unwrap();
        let ga = constant_graph(2, ConsId(0));
        let gb: PairSet = [(StateId(0), ConsId(0)), (StateId(1), ConsId(1))].into();
        let a1 = Value::Tagged(ga.clone(), BTreeSet::from([r1]));
        let b1 = Value::Tagged(gb.clone(), BTreeSet::from([r1]));
        let b2 = Value::Tagged(gb.clone(), BTreeSet::from([r2]));
        assert!(d.le_v(&a1, &b1).unwrap());
        assert!(!d.le_v(&b1, &a1).unwrap());
        assert!(!d.le_v(&a1, &b2).unwrap());
        // Non-singleton tags: reflexivity only.
        let both = Value::Tagged(ga, BTreeSet::from([r1, r2]));
        assert!(d.le_v(&both, &both).unwrap());
        assert!(!d.le_v(&both, &b1).unwrap());
    }

    #[test]
    fn tagged_bottom_product_is_the_identity() {
        let sit = situation();
        let d = TaggedDomain::new(&sit);
        let r = d.intern(&sit, &PreferenceRelation::reflexive_only(&sit)).unwrap();
        let u = d.utility(ConsId(0), r);
        let zero = d.otimes(&d.bottom(), &u).unwrap();
        assert_eq!(zero, Value::Tagged(PairSet::new(), BTreeSet::new()));
        // (∅, ∅) ⊕ x = x on a sample of carrier values.
        for x in d.v_carrier() {
            assert_eq!(d.oplus(&zero, &x).unwrap(), x);
        }
    }
}
