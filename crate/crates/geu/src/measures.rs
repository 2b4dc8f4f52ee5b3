//! Plausibility measures: maps from events to a bounded ordered domain.
//!
//! A measure assigns a plausibility value to every subset of the state set
//! and must satisfy
//!
//! * `Pl1` — the empty event maps to ⊥,
//! * `Pl2` — the full event maps to ⊤,
//! * `Pl3` — monotonicity in set inclusion.
//!
//! Probability weights, pairs of probability measures, the identity measure
//! (each event is its own plausibility), and explicit tables are provided.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::algebra::{CheckMode, ExpectationDomain, LawReport};
use crate::error::Error;
use crate::situation::{subsets_lex, DecisionSituation, Subset};
use crate::value::{StateId, Value};

/// Per-state nonnegative exact weights summing to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbabilityWeights {
    weights: Vec<BigRational>,
}

impl ProbabilityWeights {
    pub fn new(weights: Vec<BigRational>) -> Result<Self, Error> {
        for (i, w) in weights.iter().enumerate() {
            if w.is_negative() {
                return Err(Error::NegativeWeight(format!("#{i}")));
            }
        }
        let sum: BigRational = weights.iter().sum();
        if !sum.is_one() {
            return Err(Error::WeightSum(sum.to_string()));
        }
        Ok(ProbabilityWeights { weights })
    }

    pub fn n_states(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, s: StateId) -> &BigRational {
        &self.weights[s.0 as usize]
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    /// Total weight of an event.
    pub fn mass(&self, x: Subset) -> BigRational {
        x.members().map(|s| self.weight(s).clone()).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum MeasureKind {
    Probability(ProbabilityWeights),
    Pair(ProbabilityWeights, ProbabilityWeights),
    Identity,
    Table(BTreeMap<Subset, Value>),
}

/// A total assignment of plausibility values to events.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlausibilityMeasure {
    n_states: usize,
    kind: MeasureKind,
}

impl PlausibilityMeasure {
    /// `Pl(X) = Σ_{s ∈ X} w(s)`, targeting the unit-interval order.
    pub fn probability(w: ProbabilityWeights) -> Self {
        PlausibilityMeasure { n_states: w.n_states(), kind: MeasureKind::Probability(w) }
    }

    /// `Pl(X) = (Pr1(X), Pr2(X))`, targeting the componentwise order on the
    /// unit square.
    pub fn pair(w1: ProbabilityWeights, w2: ProbabilityWeights) -> Result<Self, Error> {
        if w1.n_states() != w2.n_states() {
            return Err(Error::MeasureStateMismatch);
        }
        Ok(PlausibilityMeasure { n_states: w1.n_states(), kind: MeasureKind::Pair(w1, w2) })
    }

    /// `Pl(X) = X` under set inclusion.
    pub fn identity(situation: &DecisionSituation) -> Self {
        PlausibilityMeasure { n_states: situation.n_states(), kind: MeasureKind::Identity }
    }

    /// Explicit measure from a total list of (event, value) entries.
    pub fn table(n_states: usize, entries: Vec<(Subset, Value)>) -> Result<Self, Error> {
        let mut map = BTreeMap::new();
        for (x, v) in entries {
            if map.insert(x, v).is_some() {
                return Err(Error::MeasureTable(format!(
                    "duplicate entry for subset {:?}",
                    x.members().map(|s| s.0).collect::<Vec<_>>()
                )));
            }
        }
        let expected = 1u128 << n_states;
        if (map.len() as u128) < expected {
            for x in subsets_lex(n_states) {
                if !map.contains_key(&x) {
                    return Err(Error::MeasureTable(format!(
                        "missing entry for subset {:?}",
                        x.members().map(|s| s.0).collect::<Vec<_>>()
                    )));
                }
            }
        }
        Ok(PlausibilityMeasure { n_states, kind: MeasureKind::Table(map) })
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn name(&self) -> &'static str {
        match &self.kind {
            MeasureKind::Probability(_) => "probability",
            MeasureKind::Pair(..) => "pair",
            MeasureKind::Identity => "identity",
            MeasureKind::Table(_) => "table",
        }
    }

    pub fn probability_weights(&self) -> Option<&ProbabilityWeights> {
        match &self.kind {
            MeasureKind::Probability(w) => Some(w),
            _ => None,
        }
    }

    pub fn pair_weights(&self) -> Option<(&ProbabilityWeights, &ProbabilityWeights)> {
        match &self.kind {
            MeasureKind::Pair(w1, w2) => Some((w1, w2)),
            _ => None,
        }
    }

    pub fn table_entries(&self) -> Option<&BTreeMap<Subset, Value>> {
        match &self.kind {
            MeasureKind::Table(t) => Some(t),
            _ => None,
        }
    }

    /// The plausibility of an event.
    pub fn assign(&self, x: Subset) -> Value {
        debug_assert!(x.is_subset_of(Subset::full(self.n_states)));
        match &self.kind {
            MeasureKind::Probability(w) => Value::Rational(w.mass(x)),
            MeasureKind::Pair(w1, w2) => Value::RationalPair(w1.mass(x), w2.mass(x)),
            MeasureKind::Identity => Value::StateSet(x.to_state_set()),
            MeasureKind::Table(map) => map.get(&x).expect("table measures are total").clone(),
        }
    }

    /// Checks Pl1–Pl3 against the plausibility order of a domain, within the
    /// default probe budget.
    ///
    /// Pl3 is checked on cover pairs `X ⊂ X ∪ {s}`, which suffices because
    /// the plausibility order is transitive.
    pub fn validate(&self, domain: &ExpectationDomain) -> Result<MeasureReport, Error> {
        self.validate_within(domain, crate::budgets::DEFAULT_PROBE_BUDGET)
    }

    /// As [`PlausibilityMeasure::validate`] with an explicit probe budget;
    /// the Pl3 cover check needs `|S| * 2^(|S|-1)` probes.
    pub fn validate_within(
        &self,
        domain: &ExpectationDomain,
        probe_budget: u64,
    ) -> Result<MeasureReport, Error> {
        let cover_pairs = (self.n_states as u128) << self.n_states.saturating_sub(1).min(126);
        if cover_pairs > probe_budget as u128 {
            return Err(Error::BudgetExceeded {
                what: "measure monotonicity check".into(),
                required: cover_pairs,
                unit: "probes",
                budget: probe_budget,
            });
        }
        let full = Subset::full(self.n_states);
        let mut laws = Vec::new();

        let empty_value = self.assign(Subset::EMPTY);
        laws.push(LawReport {
            law: "Pl1",
            holds: empty_value == domain.bottom(),
            mode: CheckMode::Exhaustive,
            probes: 1,
            vacuous: 0,
            witness: (empty_value != domain.bottom()).then(|| vec![("Pl(∅)", empty_value)]),
        });

        let full_value = self.assign(full);
        laws.push(LawReport {
            law: "Pl2",
            holds: full_value == domain.top(),
            mode: CheckMode::Exhaustive,
            probes: 1,
            vacuous: 0,
            witness: (full_value != domain.top()).then(|| vec![("Pl(S)", full_value)]),
        });

        let mut pl3 = LawReport {
            law: "Pl3",
            holds: true,
            mode: CheckMode::Exhaustive,
            probes: 0,
            vacuous: 0,
            witness: None,
        };
        'outer: for x in subsets_lex(self.n_states) {
            for s in full.members() {
                if x.contains(s) {
                    continue;
                }
                let y = x.union(Subset::singleton(s));
                pl3.probes += 1;
                if !domain.le_p(&self.assign(x), &self.assign(y))? {
                    pl3.holds = false;
                    pl3.witness = Some(vec![
                        ("X", Value::StateSet(x.to_state_set())),
                        ("Y", Value::StateSet(y.to_state_set())),
                    ]);
                    break 'outer;
                }
            }
        }
        laws.push(pl3);
        Ok(MeasureReport { measure: self.name().to_string(), laws })
    }
}

/// Validation outcome for one measure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureReport {
    pub measure: String,
    pub laws: Vec<LawReport>,
}

impl MeasureReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.holds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::ConsId;

    fn weights(parts: &[(i64, i64)]) -> ProbabilityWeights {
        ProbabilityWeights::new(
            parts
                .iter()
                .map(|(n, d)| BigRational::new((*n).into(), (*d).into()))
                .collect(),
        )
        .unwrap()
    }

    fn two_state_situation() -> DecisionSituation {
        DecisionSituation::new(
            vec!["s1".into(), "s2".into()],
            vec!["c1".into()],
            vec![("a".into(), vec![ConsId(0), ConsId(0)])],
        )
        .unwrap()
    }

    #[test]
    fn probability_assignment_and_bounds() {
        let m = PlausibilityMeasure::probability(weights(&[(3, 10), (7, 10)]));
        assert_eq!(m.assign(Subset::EMPTY), Value::int(0));
        assert_eq!(m.assign(Subset::singleton(StateId(0))), Value::ratio(3, 10));
        assert_eq!(m.assign(Subset::full(2)), Value::int(1));
        assert!(m.validate(&ExpectationDomain::standard()).unwrap().passed());
    }

    #[test]
    fn bad_weights_are_rejected() {
        assert!(matches!(
            ProbabilityWeights::new(vec![
                BigRational::new(9.into(), 10.into()),
            ]),
            Err(Error::WeightSum(_))
        ));
        assert!(matches!(
            ProbabilityWeights::new(vec![
                BigRational::new((-1).into(), 2.into()),
                BigRational::new(3.into(), 2.into()),
            ]),
            Err(Error::NegativeWeight(_))
        ));
    }

    #[test]
    fn pair_measure_is_componentwise() {
        let m = PlausibilityMeasure::pair(weights(&[(1, 2), (1, 2)]), weights(&[(1, 4), (3, 4)]))
            .unwrap();
        assert_eq!(m.assign(Subset::singleton(StateId(0))), Value::ratio_pair(1, 2, 1, 4));
        assert_eq!(m.assign(Subset::EMPTY), Value::ratio_pair(0, 1, 0, 1));
        let report = m.validate(&ExpectationDomain::pair()).unwrap();
        assert!(report.passed());
        // Componentwise agreement with the marginal measures on all subsets.
        let p1 = PlausibilityMeasure::probability(weights(&[(1, 2), (1, 2)]));
        let p2 = PlausibilityMeasure::probability(weights(&[(1, 4), (3, 4)]));
        for x in subsets_lex(2) {
            let (a, b) = match m.assign(x) {
                Value::RationalPair(a, b) => (a, b),
                other => panic!("unexpected {other:?}"),
            };
            assert_eq!(Value::Rational(a), p1.assign(x));
            assert_eq!(Value::Rational(b), p2.assign(x));
        }
    }

    #[test]
    fn identity_measure_is_inclusion_monotone() {
        let sit = two_state_situation();
        let m = PlausibilityMeasure::identity(&sit);
        assert_eq!(m.assign(Subset::singleton(StateId(0))), Value::state_set([0]));
        assert_eq!(m.assign(Subset::EMPTY), Value::state_set([]));
        assert!(m.validate(&ExpectationDomain::canonical(&sit)).unwrap().passed());
    }

    #[test]
    fn table_measure_validation_and_witnesses() {
        // Belief-function style: both singletons implausible, the union sure.
        let m = PlausibilityMeasure::table(
            2,
            vec![
                (Subset::EMPTY, Value::int(0)),
                (Subset::singleton(StateId(0)), Value::int(0)),
                (Subset::singleton(StateId(1)), Value::int(0)),
                (Subset::full(2), Value::int(1)),
            ],
        )
        .unwrap();
        assert!(m.validate(&ExpectationDomain::standard()).unwrap().passed());

        // Pl({s1}) above Pl(S) violates Pl3 with witness ({s1}, S).
        let bad = PlausibilityMeasure::table(
            1,
            vec![
                (Subset::EMPTY, Value::int(0)),
                (Subset::full(1), Value::int(1)),
            ],
        )
        .unwrap();
        assert!(bad.validate(&ExpectationDomain::standard()).unwrap().passed());
        let bad = PlausibilityMeasure::table(
            2,
            vec![
                (Subset::EMPTY, Value::int(0)),
                (Subset::singleton(StateId(0)), Value::int(2)),
                (Subset::singleton(StateId(1)), Value::int(0)),
                (Subset::full(2), Value::int(1)),
            ],
        )
        .unwrap();
        let report = bad.validate(&ExpectationDomain::standard()).unwrap();
        let pl3 = report.laws.iter().find(|l| l.law == "Pl3").unwrap();
        assert!(!pl3.holds);
        let w = pl3.witness.as_ref().unwrap();
        assert_eq!(w[0].1, Value::state_set([0]));
        assert_eq!(w[1].1, Value::state_set([0, 1]));
    }

    #[test]
    fn table_measure_totality_errors() {
        let missing = PlausibilityMeasure::table(
            2,
            vec![
                (Subset::EMPTY, Value::int(0)),
                (Subset::singleton(StateId(0)), Value::int(0)),
                (Subset::full(2), Value::int(1)),
            ],
        );
        assert!(matches!(missing, Err(Error::MeasureTable(m)) if m.contains("missing")));
        let dup = PlausibilityMeasure::table(
            1,
            vec![
                (Subset::EMPTY, Value::int(0)),
                (Subset::EMPTY, Value::int(0)),
                (Subset::full(1), Value::int(1)),
            ],
        );
        assert!(matches!(dup, Err(Error::MeasureTable(m)) if m.contains("duplicate")));
    }

    #[test]
    fn probability_is_finitely_additive_for_small_state_sets() {
        for n in 1..=4usize {
            let den = (1 << n) as i64;
            let parts: Vec<(i64, i64)> = (0..n)
                .map(|i| {
                    if i == n - 1 {
                        (den - ((1 << (n - 1)) - 1), den)
                    } else {
                        (1 << i, den)
                    }
                })
                .collect();
            let m = PlausibilityMeasure::probability(weights(&parts));
            let std = ExpectationDomain::standard();
            for x in subsets_lex(n) {
                for y in subsets_lex(n) {
                    if x.is_disjoint(y) && !x.is_empty() && !y.is_empty() {
                        let sum = std.oplus(&m.assign(x), &m.assign(y)).unwrap();
                        assert_eq!(m.assign(x.union(y)), sum);
                    }
                }
            }
        }
    }

    #[test]
    fn identity_measure_validates_across_sizes() {
        for n in 1..=5usize {
            let sit = DecisionSituation::new(
                (0..n).map(|i| format!("s{i}")).collect(),
                vec!["c".into()],
                vec![("a".into(), vec![ConsId(0); n])],
            )
            .unwrap();
            let m = PlausibilityMeasure::identity(&sit);
            assert!(m.validate(&ExpectationDomain::canonical(&sit)).unwrap().passed());
        }
    }
}
