//! Decision problems and generalized expected utility.
//!
//! A decision problem binds a situation to an expectation domain, a total
//! utility function on consequences, and a plausibility measure on events.
//! The generalized expected utility of an act folds `⊕` over the range of
//! its utility random variable:
//!
//! ```text
//! E(u_a) = ⊕_{x ∈ ran(u_a)}  Pl(u_a⁻¹(x)) ⊗ x
//! ```
//!
//! Evaluation accepts arbitrary simple acts, member of the act set or not;
//! only act-set membership questions consult `A`.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::ExpectationDomain;
use crate::error::Error;
use crate::measures::PlausibilityMeasure;
use crate::pref::PreferenceRelation;
use crate::situation::{subsets_lex, ActId, ActMap, DecisionSituation, Subset};
use crate::value::{ConsId, Value};

pub use crate::budgets::{Budgets, DEFAULT_PROBE_BUDGET};

/// Outcome of the additivity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditivityCheck {
    pub holds: bool,
    /// Failing `(c, X, Y)` with X, Y disjoint and nonempty.
    pub witness: Option<(ConsId, Subset, Subset)>,
}

/// Outcome of the wholeness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WholenessCheck {
    pub holds: bool,
    /// A simple act outside the act set whose value is already attained.
    pub witness: Option<ActMap>,
}

/// A decision situation together with the agent's tastes and beliefs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionProblem {
    situation: DecisionSituation,
    domain: ExpectationDomain,
    utility: Vec<Value>,
    plausibility: PlausibilityMeasure,
}

impl DecisionProblem {
    /// Builds and validates a problem: the utility must be total with values
    /// in the utility carrier, the measure must satisfy Pl1–Pl3 against the
    /// domain's plausibility order, and a table domain must pass all of its
    /// laws (checked within the default probe budget).
    pub fn new(
        situation: DecisionSituation,
        domain: ExpectationDomain,
        utility: Vec<Value>,
        plausibility: PlausibilityMeasure,
    ) -> Result<Self, Error> {
        Self::with_probe_budget(situation, domain, utility, plausibility, DEFAULT_PROBE_BUDGET)
    }

    pub fn with_probe_budget(
        situation: DecisionSituation,
        domain: ExpectationDomain,
        utility: Vec<Value>,
        plausibility: PlausibilityMeasure,
        probe_budget: u64,
    ) -> Result<Self, Error> {
        if utility.len() != situation.n_consequences() {
            let missing = situation.consequences().get(utility.len());
            return Err(Error::MissingUtility(
                missing.cloned().unwrap_or_else(|| "?".to_string()),
            ));
        }
        for u in &utility {
            domain.embed_u(u)?;
        }
        if plausibility.n_states() != situation.n_states() {
            return Err(Error::MeasureStateMismatch);
        }
        if domain.as_table().is_some() {
            let report = domain.validate(probe_budget)?;
            if !report.passed() {
                let failed: Vec<String> = report
                    .laws
                    .iter()
                    .filter(|l| !l.holds)
                    .map(|l| format!("{} (witness {:?})", l.law, l.witness))
                    .collect();
                return Err(Error::InvalidDomain(failed.join("; ")));
            }
        }
        let measure_report = plausibility.validate_within(&domain, probe_budget)?;
        if !measure_report.passed() {
            let failed: Vec<&str> =
                measure_report.laws.iter().filter(|l| !l.holds).map(|l| l.law).collect();
            return Err(Error::InvalidMeasure(failed.join(", ")));
        }
        Ok(DecisionProblem { situation, domain, utility, plausibility })
    }

    pub fn situation(&self) -> &DecisionSituation {
        &self.situation
    }

    pub fn domain(&self) -> &ExpectationDomain {
        &self.domain
    }

    pub fn plausibility(&self) -> &PlausibilityMeasure {
        &self.plausibility
    }

    pub fn utility(&self, c: ConsId) -> &Value {
        &self.utility[c.0 as usize]
    }

    pub fn utility_map(&self) -> &[Value] {
        &self.utility
    }

    /// The utility image `ran(u)`, deduplicated structurally.
    pub fn utility_range(&self) -> BTreeSet<Value> {
        self.utility.iter().cloned().collect()
    }

    /// Preimage partition of a map under its utility random variable:
    /// utility value -> set of states, in canonical value order.
    fn level_sets(&self, map: &ActMap, within: Subset) -> BTreeMap<Value, Subset> {
        let mut groups: BTreeMap<Value, Subset> = BTreeMap::new();
        for s in within.members() {
            let u = self.utility[map[s.0 as usize].0 as usize].clone();
            let cell = groups.entry(u).or_insert(Subset::EMPTY);
            *cell = cell.union(Subset::singleton(s));
        }
        groups
    }

    /// Generalized expected utility of an arbitrary simple act.
    pub fn geu_map(&self, map: &ActMap) -> Result<Value, Error> {
        self.geu_restricted_map(map, self.situation.full_subset())
    }

    /// Generalized expected utility of a member of the act set.
    pub fn geu(&self, act: ActId) -> Result<Value, Error> {
        self.geu_map(&self.situation.act(act).map)
    }

    /// GEU of an act restricted to a nonempty event:
    /// `⊕_{x ∈ u_a(Z)} Pl(u_a⁻¹(x) ∩ Z) ⊗ x`. Restriction to the full state
    /// set is plain GEU.
    pub fn geu_restricted_map(&self, map: &ActMap, z: Subset) -> Result<Value, Error> {
        if z.is_empty() {
            return Err(Error::EmptyRestriction);
        }
        let mut terms = Vec::new();
        for (x, pre) in self.level_sets(map, z) {
            terms.push(self.domain.otimes(&self.plausibility.assign(pre), &x)?);
        }
        self.domain.fold_sum(&terms)
    }

    pub fn geu_restricted(&self, act: ActId, z: Subset) -> Result<Value, Error> {
        self.geu_restricted_map(&self.situation.act(act).map, z)
    }

    /// The statewise analogue `⊕_{s ∈ S} Pl({s}) ⊗ u_a(s)`; coincides with
    /// GEU exactly on additive problems.
    pub fn geu_statewise_map(&self, map: &ActMap) -> Result<Value, Error> {
        let mut terms = Vec::new();
        for s in self.situation.state_ids() {
            let u = &self.utility[map[s.0 as usize].0 as usize];
            terms.push(self.domain.otimes(&self.plausibility.assign(Subset::singleton(s)), u)?);
        }
        self.domain.fold_sum(&terms)
    }

    pub fn geu_statewise(&self, act: ActId) -> Result<Value, Error> {
        self.geu_statewise_map(&self.situation.act(act).map)
    }

    /// Joint additivity of `⊕`, `⊗`, the utility, and the measure: for every
    /// consequence and disjoint nonempty events,
    /// `Pl(X ∪ Y) ⊗ u(c) = (Pl(X) ⊗ u(c)) ⊕ (Pl(Y) ⊗ u(c))`.
    pub fn is_additive(&self) -> Result<AdditivityCheck, Error> {
        let n = self.situation.n_states();
        for c in self.situation.cons_ids() {
            let u = self.utility(c);
            for x in subsets_lex(n) {
                if x.is_empty() {
                    continue;
                }
                let px_u = self.domain.otimes(&self.plausibility.assign(x), u)?;
                for y in subsets_lex(n) {
                    if y.is_empty() || !x.is_disjoint(y) {
                        continue;
                    }
                    let joint = self.domain.otimes(&self.plausibility.assign(x.union(y)), u)?;
                    let py_u = self.domain.otimes(&self.plausibility.assign(y), u)?;
                    if joint != self.domain.oplus(&px_u, &py_u)? {
                        return Ok(AdditivityCheck { holds: false, witness: Some((c, x, y)) });
                    }
                }
            }
        }
        Ok(AdditivityCheck { holds: true, witness: None })
    }

    /// The preference relation GEU induces on the act set:
    /// `a1 ≾ a2` iff `E(u_a1) ≾_V E(u_a2)`.
    pub fn induced_preference(&self) -> Result<PreferenceRelation, Error> {
        let values: Vec<Value> =
            self.situation.act_ids().map(|a| self.geu(a)).collect::<Result<_, _>>()?;
        let mut pairs = Vec::new();
        for (i, x) in values.iter().enumerate() {
            for (j, y) in values.iter().enumerate() {
                if self.domain.le_v(x, y)? {
                    pairs.push((ActId(i as u32), ActId(j as u32)));
                }
            }
        }
        Ok(PreferenceRelation::new(&self.situation, pairs))
    }

    /// Expected-utility values of the act set restricted to a nonempty
    /// event, deduplicated structurally.
    pub fn ev_set(&self, x: Subset) -> Result<BTreeSet<Value>, Error> {
        if x.is_empty() {
            return Err(Error::EmptyRestriction);
        }
        let mut out = BTreeSet::new();
        for a in self.situation.act_ids() {
            out.insert(self.geu_restricted(a, x)?);
        }
        Ok(out)
    }

    /// Whether every simple act whose GEU is an attained expected-utility
    /// value already belongs to the act set.
    pub fn is_whole(&self, act_budget: u64) -> Result<WholenessCheck, Error> {
        let attained = self.ev_set(self.situation.full_subset())?;
        for map in self.situation.enumerate_simple_acts(act_budget)? {
            if self.situation.act_with_map(&map).is_none() && attained.contains(&self.geu_map(&map)?)
            {
                return Ok(WholenessCheck { holds: false, witness: Some(map) });
            }
        }
        Ok(WholenessCheck { holds: true, witness: None })
    }

    /// The value of the binary utility splice: `u` if `X = S`, `v` if
    /// `X = ∅`, and `Pl(X) ⊗ u ⊕ Pl(X̄) ⊗ v` otherwise. Boundary cases are
    /// special because `⊥ ⊗ u` need not be an ⊕ identity. Satisfies
    /// `E(u_{(c,X,d)}) = ulotto(u(c), X, u(d))`.
    pub fn ulotto(&self, u: &Value, x: Subset, v: &Value) -> Result<Value, Error> {
        let full = self.situation.full_subset();
        if x == full {
            return self.domain.embed_u(u);
        }
        if x.is_empty() {
            return self.domain.embed_u(v);
        }
        let left = self.domain.otimes(&self.plausibility.assign(x), u)?;
        let right = self.domain.otimes(&self.plausibility.assign(x.complement(full.len() as usize)), v)?;
        self.domain.oplus(&left, &right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::ProbabilityWeights;
    use crate::value::StateId;
    use num_rational::BigRational;

    /// Σ_s Pr(s)·u(a(s)) computed directly, as an independent check on the
    /// fold-based evaluation.
    fn classical_eu(weights: &[(i64, i64)], utilities: &[(i64, i64)], map: &ActMap) -> Value {
        let mut total = BigRational::from_integer(0.into());
        for (s, c) in map.iter().enumerate() {
            let w = BigRational::new(weights[s].0.into(), weights[s].1.into());
            let u = BigRational::new(
                utilities[c.0 as usize].0.into(),
                utilities[c.0 as usize].1.into(),
            );
            total += w * u;
        }
        Value::Rational(total)
    }

    pub(crate) fn f1_all_acts() -> DecisionProblem {
        let situation = DecisionSituation::new(
            vec!["s1".into(), "s2".into()],
            vec!["c1".into(), "c2".into()],
            vec![
                ("aK".into(), vec![ConsId(0), ConsId(0)]),
                ("aL".into(), vec![ConsId(0), ConsId(1)]),
                ("aM".into(), vec![ConsId(1), ConsId(0)]),
                ("aN".into(), vec![ConsId(1), ConsId(1)]),
            ],
        )
        .unwrap();
        let weights = ProbabilityWeights::new(vec![
            BigRational::new(3.into(), 10.into()),
            BigRational::new(7.into(), 10.into()),
        ])
        .unwrap();
        DecisionProblem::new(
            situation,
            ExpectationDomain::standard(),
            vec![Value::int(1), Value::int(0)],
            PlausibilityMeasure::probability(weights),
        )
        .unwrap()
    }

    /// Belief-function style problem: both singletons have plausibility 0.
    pub(crate) fn belief_problem() -> DecisionProblem {
        let situation = DecisionSituation::new(
            vec!["s1".into(), "s2".into()],
            vec!["c1".into(), "c2".into()],
            vec![
                ("aK".into(), vec![ConsId(0), ConsId(0)]),
                ("aN".into(), vec![ConsId(1), ConsId(1)]),
            ],
        )
        .unwrap();
        let measure = PlausibilityMeasure::table(
            2,
            vec![
                (Subset::EMPTY, Value::int(0)),
                (Subset::singleton(StateId(0)), Value::int(0)),
                (Subset::singleton(StateId(1)), Value::int(0)),
                (Subset::full(2), Value::int(1)),
            ],
        )
        .unwrap();
        DecisionProblem::new(
            situation,
            ExpectationDomain::standard(),
            vec![Value::int(1), Value::int(0)],
            measure,
        )
        .unwrap()
    }

    #[test]
    fn geu_matches_classical_expected_utility() {
        let p = f1_all_acts();
        let expected = [Value::int(1), Value::ratio(3, 10), Value::ratio(7, 10), Value::int(0)];
        for (i, want) in expected.iter().enumerate() {
            let got = p.geu(ActId(i as u32)).unwrap();
            assert_eq!(got, *want);
            let map = &p.situation().act(ActId(i as u32)).map;
            assert_eq!(got, classical_eu(&[(3, 10), (7, 10)], &[(1, 1), (0, 1)], map));
        }
    }

    #[test]
    fn restricted_geu_cases() {
        let p = f1_all_acts();
        let al = ActId(1);
        assert_eq!(p.geu_restricted(al, Subset::singleton(StateId(0))).unwrap(), Value::ratio(3, 10));
        assert_eq!(p.geu_restricted(al, Subset::singleton(StateId(1))).unwrap(), Value::int(0));
        assert_eq!(p.geu_restricted(al, Subset::full(2)).unwrap(), p.geu(al).unwrap());
        assert!(matches!(p.geu_restricted(al, Subset::EMPTY), Err(Error::EmptyRestriction)));
    }

    #[test]
    fn statewise_agrees_on_additive_problems() {
        let p = f1_all_acts();
        assert!(p.is_additive().unwrap().holds);
        for a in p.situation().act_ids() {
            assert_eq!(p.geu(a).unwrap(), p.geu_statewise(a).unwrap());
        }
    }

    #[test]
    fn belief_problem_is_not_additive_and_statewise_diverges() {
        let p = belief_problem();
        let check = p.is_additive().unwrap();
        assert!(!check.holds);
        let (c, x, y) = check.witness.unwrap();
        assert_eq!(c, ConsId(0));
        assert_eq!(x, Subset::singleton(StateId(0)));
        assert_eq!(y, Subset::singleton(StateId(1)));
        // Constant act on c1: GEU is u(c1) = 1 but the statewise fold sees
        // only null singletons.
        let constant = ActId(0);
        assert_eq!(p.geu(constant).unwrap(), Value::int(1));
        assert_eq!(p.geu_statewise(constant).unwrap(), Value::int(0));
    }

    #[test]
    fn constant_acts_evaluate_to_their_utility() {
        let p = f1_all_acts();
        for c in p.situation().cons_ids() {
            let map = p.situation().constant_map(c);
            assert_eq!(p.geu_map(&map).unwrap(), p.domain().embed_u(p.utility(c)).unwrap());
        }
    }

    #[test]
    fn induced_preference_is_the_eu_order() {
        let p = f1_all_acts();
        let pref = p.induced_preference().unwrap();
        // EU: aN(0) ≾ aL(3/10) ≾ aM(7/10) ≾ aK(1).
        let (ak, al, am, an) = (ActId(0), ActId(1), ActId(2), ActId(3));
        assert!(pref.lt(an, al) && pref.lt(al, am) && pref.lt(am, ak));
        assert!(pref.le(an, ak));
        assert!(!pref.le(ak, an));
    }

    #[test]
    fn ev_set_and_ulotto() {
        let p = f1_all_acts();
        let s1 = Subset::singleton(StateId(0));
        let ev = p.ev_set(s1).unwrap();
        assert_eq!(ev, BTreeSet::from([Value::ratio(3, 10), Value::int(0)]));
        assert_eq!(p.ulotto(&Value::int(1), s1, &Value::int(0)).unwrap(), Value::ratio(3, 10));
        assert_eq!(p.ulotto(&Value::int(1), Subset::full(2), &Value::int(0)).unwrap(), Value::int(1));
        assert_eq!(p.ulotto(&Value::int(1), Subset::EMPTY, &Value::int(0)).unwrap(), Value::int(0));
        // E(u_{(c,X,d)}) = ulotto(u(c), X, u(d)) across all c, d, X.
        for c in p.situation().cons_ids() {
            for d in p.situation().cons_ids() {
                for x in subsets_lex(2) {
                    let spliced = crate::situation::splice(
                        &p.situation().constant_map(c),
                        x,
                        &p.situation().constant_map(d),
                    );
                    assert_eq!(
                        p.geu_map(&spliced).unwrap(),
                        p.ulotto(p.utility(c), x, p.utility(d)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn wholeness_checks() {
        // All simple acts present: whole by definition.
        let p = f1_all_acts();
        assert!(p.is_whole(4096).unwrap().holds);

        // A = {aK, aL}: the two missing acts have EU 7/10 and 0, neither of
        // which is attained, so the problem is whole.
        let situation = DecisionSituation::new(
            vec!["s1".into(), "s2".into()],
            vec!["c1".into(), "c2".into()],
            vec![
                ("aK".into(), vec![ConsId(0), ConsId(0)]),
                ("aL".into(), vec![ConsId(0), ConsId(1)]),
            ],
        )
        .unwrap();
        let weights = ProbabilityWeights::new(vec![
            BigRational::new(3.into(), 10.into()),
            BigRational::new(7.into(), 10.into()),
        ])
        .unwrap();
        let p = DecisionProblem::new(
            situation,
            ExpectationDomain::standard(),
            vec![Value::int(1), Value::int(0)],
            PlausibilityMeasure::probability(weights),
        )
        .unwrap();
        assert!(p.is_whole(4096).unwrap().holds);
    }

    #[test]
    fn wholeness_witness_found_when_value_collides() {
        let situation = DecisionSituation::new(
            vec!["s1".into(), "s2".into()],
            vec!["c1".into(), "c2".into()],
            vec![("aK".into(), vec![ConsId(0), ConsId(0)])],
        )
        .unwrap();
        let weights = ProbabilityWeights::new(vec![
            BigRational::from_integer(1.into()),
            BigRational::from_integer(0.into()),
        ])
        .unwrap();
        let p = DecisionProblem::new(
            situation,
            ExpectationDomain::standard(),
            vec![Value::int(1), Value::int(0)],
            PlausibilityMeasure::probability(weights),
        )
        .unwrap();
        // The absent act (c1, c2) has EU 1 = EU(aK), so the problem is not
        // whole; the witness is the lexicographically first such map.
        let check = p.is_whole(4096).unwrap();
        assert!(!check.holds);
        assert_eq!(check.witness.unwrap(), vec![ConsId(0), ConsId(1)]);
    }

    #[test]
    fn problems_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<DecisionProblem>();
        assert_send_sync::<ExpectationDomain>();
        assert_send_sync::<PlausibilityMeasure>();
        assert_send_sync::<crate::pref::PreferenceRelation>();
    }

    #[test]
    fn construction_rejects_invalid_parts() {
        let situation = DecisionSituation::new(
            vec!["s1".into()],
            vec!["c1".into(), "c2".into()],
            vec![("a".into(), vec![ConsId(0)])],
        )
        .unwrap();
        let w = ProbabilityWeights::new(vec![BigRational::from_integer(1.into())]).unwrap();
        // Utility not total.
        let r = DecisionProblem::new(
            situation.clone(),
            ExpectationDomain::standard(),
            vec![Value::int(1)],
            PlausibilityMeasure::probability(w.clone()),
        );
        assert!(matches!(r, Err(Error::MissingUtility(c)) if c == "c2"));
        // Utility outside the carrier.
        let r = DecisionProblem::new(
            situation.clone(),
            ExpectationDomain::standard(),
            vec![Value::int(1), Value::TableElem("x".into())],
            PlausibilityMeasure::probability(w.clone()),
        );
        assert!(r.is_err());
        // Measure violating Pl2 (via table with wrong top).
        let bad = PlausibilityMeasure::table(
            1,
            vec![(Subset::EMPTY, Value::int(0)), (Subset::full(1), Value::ratio(1, 2))],
        )
        .unwrap();
        let r = DecisionProblem::new(
            situation,
            ExpectationDomain::standard(),
            vec![Value::int(1), Value::int(0)],
            bad,
        );
        assert!(matches!(r, Err(Error::InvalidMeasure(m)) if m.contains("Pl2")));
    }
}
