//! Finite decision procedures for the act-side postulates and the
//! algebra-side axioms, and the machinery relating them.
//!
//! Postulates are properties of a (situation, preference) pair; axioms are
//! properties of a decision problem's expected-utility values. Both come in
//! a general version, whose bracketed membership guards confine every
//! comparison to the act set, and a special version for act sets containing
//! all simple acts. Only the general transcription is evaluated: when the
//! act set is full the guards are trivially true, so the special mode simply
//! asserts fullness first and runs the same evaluator.
//!
//! Every check returns a [`CheckResult`] with a structured witness on
//! failure; witnesses re-evaluate to genuine violations via the `recheck_*`
//! functions.

mod partitions;

pub use partitions::{bell, partitions};

use std::collections::{BTreeMap, BTreeSet};

use crate::decision::{Budgets, DecisionProblem};
use crate::error::Error;
use crate::pref::PreferenceRelation;
use crate::situation::{splice, subsets_lex, ActId, ActMap, DecisionSituation, Subset};
use crate::value::{ConsId, Value};

/// Index shared by a postulate and the axiom that represents it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckIndex {
    I1a,
    I1b,
    I2,
    I3,
    I4,
    I5,
    I6,
}

impl CheckIndex {
    pub const ALL: [CheckIndex; 7] = [
        CheckIndex::I1a,
        CheckIndex::I1b,
        CheckIndex::I2,
        CheckIndex::I3,
        CheckIndex::I4,
        CheckIndex::I5,
        CheckIndex::I6,
    ];

    pub fn token(self) -> &'static str {
        match self {
            CheckIndex::I1a => "1a",
            CheckIndex::I1b => "1b",
            CheckIndex::I2 => "2",
            CheckIndex::I3 => "3",
            CheckIndex::I4 => "4",
            CheckIndex::I5 => "5",
            CheckIndex::I6 => "6",
        }
    }

    pub fn from_token(token: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|i| i.token() == token)
    }

    pub fn postulate_name(self) -> String {
        format!("P{}", self.token())
    }

    pub fn axiom_name(self) -> String {
        format!("A{}", self.token())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Version {
    General,
    Special,
}

impl Version {
    pub fn token(self) -> &'static str {
        match self {
            Version::General => "general",
            Version::Special => "special",
        }
    }
}

/// One bound variable of a failing instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Binding {
    Act(ActId),
    Consequence(ConsId),
    Subset(Subset),
    Value(Value),
}

/// Bindings of every quantified variable at a failing instance. Existential
/// checks fail with no bindings; their recheck re-runs the whole search.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness {
    pub bindings: Vec<(&'static str, Binding)>,
}

impl Witness {
    fn act(&self, name: &str) -> Option<ActId> {
        self.bindings.iter().find_map(|(n, b)| match b {
            Binding::Act(a) if *n == name => Some(*a),
            _ => None,
        })
    }

    fn consequence(&self, name: &str) -> Option<ConsId> {
        self.bindings.iter().find_map(|(n, b)| match b {
            Binding::Consequence(c) if *n == name => Some(*c),
            _ => None,
        })
    }

    fn subset(&self, name: &str) -> Option<Subset> {
        self.bindings.iter().find_map(|(n, b)| match b {
            Binding::Subset(x) if *n == name => Some(*x),
            _ => None,
        })
    }

    fn value(&self, name: &str) -> Option<&Value> {
        self.bindings.iter().find_map(|(n, b)| match b {
            Binding::Value(v) if *n == name => Some(v),
            _ => None,
        })
    }
}

/// Outcome of one decided check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub version: Version,
    pub holds: bool,
    pub witness: Option<Witness>,
    /// Instances skipped because a bracketed membership guard failed.
    pub vacuous: u64,
}

impl CheckResult {
    fn new(name: String, version: Version) -> Self {
        CheckResult { name, version, holds: true, witness: None, vacuous: 0 }
    }

    fn fail(&mut self, bindings: Vec<(&'static str, Binding)>) {
        self.holds = false;
        self.witness = Some(Witness { bindings });
    }
}

enum Outcome {
    Pass,
    Vacuous,
    Fail,
}

/// Asserts that the act set contains every simple act.
fn assert_special(situation: &DecisionSituation) -> Result<(), Error> {
    if !situation.has_all_simple_acts() {
        return Err(Error::SpecialVersionMismatch {
            actual: situation
                .acts()
                .iter()
                .map(|a| &a.map)
                .collect::<BTreeSet<_>>()
                .len() as u128,
            expected: situation.simple_act_count(),
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Postulates
// ---------------------------------------------------------------------------

struct PostulateCtx<'a> {
    sit: &'a DecisionSituation,
    pref: &'a PreferenceRelation,
}

impl<'a> PostulateCtx<'a> {
    fn in_a(&self, map: &ActMap) -> Option<ActId> {
        self.sit.act_with_map(map)
    }

    fn le(&self, a: ActId, b: ActId) -> bool {
        self.pref.le(a, b)
    }

    fn lt(&self, a: ActId, b: ActId) -> bool {
        self.pref.lt(a, b)
    }

    fn map(&self, a: ActId) -> &ActMap {
        &self.sit.act(a).map
    }

    fn constant(&self, c: ConsId) -> Option<ActId> {
        self.sit.constant_act(c)
    }

    fn acts(&self) -> impl Iterator<Item = ActId> {
        self.sit.act_ids()
    }

    fn p1a(&self, a1: ActId, a2: ActId) -> Outcome {
        if self.le(a1, a2) || self.le(a2, a1) {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    fn p1b(&self, a1: ActId, a2: ActId, a3: ActId) -> Outcome {
        if self.le(a1, a2) && self.le(a2, a3) && !self.le(a1, a3) {
            Outcome::Fail
        } else {
            Outcome::Pass
        }
    }

    fn p2(&self, x: Subset, a1: ActId, a2: ActId, b1: ActId, b2: ActId) -> Outcome {
        let mut ids = [[ActId(0); 2]; 2];
        for (i, a) in [a1, a2].into_iter().enumerate() {
            for (j, b) in [b1, b2].into_iter().enumerate() {
                match self.in_a(&splice(self.map(a), x, self.map(b))) {
                    Some(id) => ids[i][j] = id,
                    None => return Outcome::Vacuous,
                }
            }
        }
        let with_b1 = self.le(ids[0][0], ids[1][0]);
        let with_b2 = self.le(ids[0][1], ids[1][1]);
        if with_b1 == with_b2 {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    /// The bracketed existential shared by the antecedent and consequent of
    /// the conditional postulate: some continuation keeps both splices in A.
    fn splice_guard(&self, m1: &ActMap, m2: &ActMap, x: Subset) -> bool {
        self.acts().any(|b| {
            self.in_a(&splice(m1, x, self.map(b))).is_some()
                && self.in_a(&splice(m2, x, self.map(b))).is_some()
        })
    }

    /// Antecedent of P3 at X: some pair of acts is strictly separated by
    /// every admissible continuation outside X.
    fn p3_antecedent(&self, x: Subset) -> bool {
        self.acts().any(|a1| {
            self.acts().any(|a2| {
                let (m1, m2) = (self.map(a1), self.map(a2));
                self.splice_guard(m1, m2, x)
                    && self.acts().all(|b| {
                        let s1 = self.in_a(&splice(m1, x, self.map(b)));
                        let s2 = self.in_a(&splice(m2, x, self.map(b)));
                        match (s1, s2) {
                            (Some(s1), Some(s2)) => self.lt(s1, s2),
                            _ => true,
                        }
                    })
            })
        })
    }

    fn p3(&self, x: Subset, c1: ConsId, c2: ConsId) -> Outcome {
        if !self.p3_antecedent(x) {
            return Outcome::Pass;
        }
        let (Some(k1), Some(k2)) = (self.constant(c1), self.constant(c2)) else {
            return Outcome::Vacuous;
        };
        let lhs = self.le(k1, k2);
        let (m1, m2) = (self.sit.constant_map(c1), self.sit.constant_map(c2));
        let rhs = self.splice_guard(&m1, &m2, x)
            && self.acts().all(|b| {
                let s1 = self.in_a(&splice(&m1, x, self.map(b)));
                let s2 = self.in_a(&splice(&m2, x, self.map(b)));
                match (s1, s2) {
                    (Some(s1), Some(s2)) => self.le(s1, s2),
                    _ => true,
                }
            });
        if lhs == rhs {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    fn p4(
        &self,
        x1: Subset,
        x2: Subset,
        c1: ConsId,
        d1: ConsId,
        c2: ConsId,
        d2: ConsId,
    ) -> Outcome {
        let constants: Option<Vec<ActId>> =
            [c1, d1, c2, d2].into_iter().map(|c| self.constant(c)).collect();
        let Some(ids) = constants else {
            return Outcome::Vacuous;
        };
        if !(self.lt(ids[1], ids[0]) && self.lt(ids[3], ids[2])) {
            return Outcome::Pass;
        }
        let lotto = |c: ConsId, x: Subset, d: ConsId| {
            self.in_a(&splice(&self.sit.constant_map(c), x, &self.sit.constant_map(d)))
        };
        let (Some(l11), Some(l12), Some(l21), Some(l22)) =
            (lotto(c1, x1, d1), lotto(c1, x2, d1), lotto(c2, x1, d2), lotto(c2, x2, d2))
        else {
            return Outcome::Vacuous;
        };
        if self.le(l11, l12) == self.le(l21, l22) {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    fn p5_holds(&self) -> bool {
        self.sit.cons_ids().any(|c1| {
            self.sit.cons_ids().any(|c2| match (self.constant(c1), self.constant(c2)) {
                (Some(k1), Some(k2)) => self.lt(k1, k2),
                _ => false,
            })
        })
    }

    fn p6(&self, a: ActId, b: ActId, c: ConsId, parts: &[Vec<Subset>]) -> Outcome {
        if !self.lt(a, b) {
            return Outcome::Pass;
        }
        let cmap = self.sit.constant_map(c);
        for partition in parts {
            let good = partition.iter().all(|z| {
                let on_a = self.in_a(&splice(&cmap, *z, self.map(a)));
                let on_b = self.in_a(&splice(&cmap, *z, self.map(b)));
                on_a.is_none_or(|s| self.lt(s, b)) && on_b.is_none_or(|s| self.lt(a, s))
            });
            if good {
                return Outcome::Pass;
            }
        }
        Outcome::Fail
    }
}

/// Decides one postulate on a (situation, preference) pair. The special
/// version requires the act set to contain all simple acts.
pub fn check_postulate(
    situation: &DecisionSituation,
    pref: &PreferenceRelation,
    index: CheckIndex,
    version: Version,
    budgets: Budgets,
) -> Result<CheckResult, Error> {
    if version == Version::Special {
        assert_special(situation)?;
    }
    let ctx = PostulateCtx { sit: situation, pref };
    let mut result = CheckResult::new(index.postulate_name(), version);
    let n = situation.n_states();
    match index {
        CheckIndex::I1a => {
            'driver: for a1 in ctx.acts() {
                for a2 in ctx.acts() {
                    if let Outcome::Fail = ctx.p1a(a1, a2) {
                        result.fail(vec![("a1", Binding::Act(a1)), ("a2", Binding::Act(a2))]);
                        break 'driver;
                    }
                }
            }
        }
        CheckIndex::I1b => {
            'driver: for a1 in ctx.acts() {
                for a2 in ctx.acts() {
                    for a3 in ctx.acts() {
                        if let Outcome::Fail = ctx.p1b(a1, a2, a3) {
                            result.fail(vec![
                                ("a1", Binding::Act(a1)),
                                ("a2", Binding::Act(a2)),
                                ("a3", Binding::Act(a3)),
                            ]);
                            break 'driver;
                        }
                    }
                }
            }
        }
        CheckIndex::I2 => {
            'driver: for x in subsets_lex(n) {
                for a1 in ctx.acts() {
                    for a2 in ctx.acts() {
                        for b1 in ctx.acts() {
                            for b2 in ctx.acts() {
                                match ctx.p2(x, a1, a2, b1, b2) {
                                    Outcome::Pass => {}
                                    Outcome::Vacuous => result.vacuous += 1,
                                    Outcome::Fail => {
                                        result.fail(vec![
                                            ("X", Binding::Subset(x)),
                                            ("a1", Binding::Act(a1)),
                                            ("a2", Binding::Act(a2)),
                                            ("b1", Binding::Act(b1)),
                                            ("b2", Binding::Act(b2)),
                                        ]);
                                        break 'driver;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        CheckIndex::I3 => {
            'driver: for x in subsets_lex(n) {
                for c1 in situation.cons_ids() {
                    for c2 in situation.cons_ids() {
                        match ctx.p3(x, c1, c2) {
                            Outcome::Pass => {}
                            Outcome::Vacuous => result.vacuous += 1,
                            Outcome::Fail => {
                                result.fail(vec![
                                    ("X", Binding::Subset(x)),
                                    ("c1", Binding::Consequence(c1)),
                                    ("c2", Binding::Consequence(c2)),
                                ]);
                                break 'driver;
                            }
                        }
                    }
                }
            }
        }
        CheckIndex::I4 => {
            'driver: for x1 in subsets_lex(n) {
                for x2 in subsets_lex(n) {
                    for c1 in situation.cons_ids() {
                        for d1 in situation.cons_ids() {
                            for c2 in situation.cons_ids() {
                                for d2 in situation.cons_ids() {
                                    match ctx.p4(x1, x2, c1, d1, c2, d2) {
                                        Outcome::Pass => {}
                                        Outcome::Vacuous => result.vacuous += 1,
                                        Outcome::Fail => {
                                            result.fail(vec![
                                                ("X1", Binding::Subset(x1)),
                                                ("X2", Binding::Subset(x2)),
                                                ("c1", Binding::Consequence(c1)),
                                                ("d1", Binding::Consequence(d1)),
                                                ("c2", Binding::Consequence(c2)),
                                                ("d2", Binding::Consequence(d2)),
                                            ]);
                                            break 'driver;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        CheckIndex::I5 => {
            if !ctx.p5_holds() {
                result.fail(Vec::new());
            }
        }
        CheckIndex::I6 => {
            let parts = partitions(n, budgets.partitions)?;
            'driver: for a in ctx.acts() {
                for b in ctx.acts() {
                    for c in situation.cons_ids() {
                        if let Outcome::Fail = ctx.p6(a, b, c, &parts) {
                            result.fail(vec![
                                ("a", Binding::Act(a)),
                                ("b", Binding::Act(b)),
                                ("c", Binding::Consequence(c)),
                            ]);
                            break 'driver;
                        }
                    }
                }
            }
        }
    }
    Ok(result)
}

/// Re-evaluates a failed postulate's witness; true iff the substituted
/// instance is still a violation.
pub fn recheck_postulate(
    situation: &DecisionSituation,
    pref: &PreferenceRelation,
    index: CheckIndex,
    witness: &Witness,
    budgets: Budgets,
) -> Result<bool, Error> {
    let ctx = PostulateCtx { sit: situation, pref };
    let fail = |o: Outcome| matches!(o, Outcome::Fail);
    let act = |name| witness.act(name).ok_or(Error::WitnessBinding(name));
    let cons = |name| witness.consequence(name).ok_or(Error::WitnessBinding(name));
    let subset = |name| witness.subset(name).ok_or(Error::WitnessBinding(name));
    Ok(match index {
        CheckIndex::I1a => fail(ctx.p1a(act("a1")?, act("a2")?)),
        CheckIndex::I1b => fail(ctx.p1b(act("a1")?, act("a2")?, act("a3")?)),
        CheckIndex::I2 => {
            fail(ctx.p2(subset("X")?, act("a1")?, act("a2")?, act("b1")?, act("b2")?))
        }
        CheckIndex::I3 => fail(ctx.p3(subset("X")?, cons("c1")?, cons("c2")?)),
        CheckIndex::I4 => fail(ctx.p4(
            subset("X1")?,
            subset("X2")?,
            cons("c1")?,
            cons("d1")?,
            cons("c2")?,
            cons("d2")?,
        )),
        CheckIndex::I5 => !ctx.p5_holds(),
        CheckIndex::I6 => {
            let parts = partitions(situation.n_states(), budgets.partitions)?;
            fail(ctx.p6(act("a")?, act("b")?, cons("c")?, &parts))
        }
    })
}

// ---------------------------------------------------------------------------
// Derived relations: conditional preference, null events, likelihood
// ---------------------------------------------------------------------------

/// A binary relation over the act set, not assumed reflexive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActRelation {
    pub pairs: BTreeSet<(ActId, ActId)>,
}

impl ActRelation {
    pub fn le(&self, a: ActId, b: ActId) -> bool {
        self.pairs.contains(&(a, b))
    }
}

/// The conditional preference given an event: acts are compared by splicing
/// them onto every admissible common continuation outside the event.
pub fn conditional_preference(
    situation: &DecisionSituation,
    pref: &PreferenceRelation,
    x: Subset,
) -> ActRelation {
    let ctx = PostulateCtx { sit: situation, pref };
    let mut pairs = BTreeSet::new();
    for a1 in situation.act_ids() {
        for a2 in situation.act_ids() {
            let (m1, m2) = (ctx.map(a1), ctx.map(a2));
            let guard = ctx.splice_guard(m1, m2, x);
            let all = situation.act_ids().all(|b| {
                let s1 = ctx.in_a(&splice(m1, x, ctx.map(b)));
                let s2 = ctx.in_a(&splice(m2, x, ctx.map(b)));
                match (s1, s2) {
                    (Some(s1), Some(s2)) => ctx.le(s1, s2),
                    _ => true,
                }
            });
            if guard && all {
                pairs.insert((a1, a2));
            }
        }
    }
    ActRelation { pairs }
}

/// Whether the agent is indifferent to everything given the event. The
/// general version asks the conditional relation to be symmetric; the
/// special version asks it to be total. The two agree whenever the
/// conditional relation is a total preorder.
pub fn is_null(
    situation: &DecisionSituation,
    pref: &PreferenceRelation,
    x: Subset,
    version: Version,
) -> CheckResult {
    let cond = conditional_preference(situation, pref, x);
    let mut result = CheckResult::new("null".to_string(), version);
    'driver: for a1 in situation.act_ids() {
        for a2 in situation.act_ids() {
            let violated = match version {
                Version::General => cond.le(a1, a2) != cond.le(a2, a1),
                Version::Special => !cond.le(a1, a2),
            };
            if violated {
                result.fail(vec![("a1", Binding::Act(a1)), ("a2", Binding::Act(a2))]);
                break 'driver;
            }
        }
    }
    result
}

/// A binary relation over events.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventRelation {
    pub pairs: BTreeSet<(Subset, Subset)>,
}

impl EventRelation {
    pub fn le(&self, x: Subset, y: Subset) -> bool {
        self.pairs.contains(&(x, y))
    }
}

/// The likelihood relation on events: X ≾ Y iff every binary act built from
/// a strictly ranked consequence pair weakly prefers attaching the better
/// consequence to Y.
pub fn likelihood_relation(
    situation: &DecisionSituation,
    pref: &PreferenceRelation,
) -> EventRelation {
    let ctx = PostulateCtx { sit: situation, pref };
    let n = situation.n_states();
    let mut pairs = BTreeSet::new();
    for x in subsets_lex(n) {
        'pair: for y in subsets_lex(n) {
            for c in situation.cons_ids() {
                for d in situation.cons_ids() {
                    let (Some(kc), Some(kd)) = (ctx.constant(c), ctx.constant(d)) else {
                        continue;
                    };
                    if !ctx.lt(kd, kc) {
                        continue;
                    }
                    let cm = situation.constant_map(c);
                    let dm = situation.constant_map(d);
                    let on_x = ctx.in_a(&splice(&cm, x, &dm));
                    let on_y = ctx.in_a(&splice(&cm, y, &dm));
                    if let (Some(sx), Some(sy)) = (on_x, on_y) {
                        if !ctx.le(sx, sy) {
                            continue 'pair;
                        }
                    }
                }
            }
            pairs.insert((x, y));
        }
    }
    EventRelation { pairs }
}

// ---------------------------------------------------------------------------
// Axioms
// ---------------------------------------------------------------------------

struct AxiomCtx<'a> {
    p: &'a DecisionProblem,
    /// Distinct restricted expected-utility values per nonempty event.
    ev: BTreeMap<Subset, Vec<Value>>,
    /// Membership set for E(S).
    ev_s: BTreeSet<Value>,
    /// Distinct utility values.
    ran_u: Vec<Value>,
    /// GEU per act.
    geu: Vec<Value>,
}

impl<'a> AxiomCtx<'a> {
    fn new(p: &'a DecisionProblem) -> Result<Self, Error> {
        let n = p.situation().n_states();
        let mut ev = BTreeMap::new();
        for x in subsets_lex(n) {
            if !x.is_empty() {
                ev.insert(x, p.ev_set(x)?.into_iter().collect::<Vec<_>>());
            }
        }
        let full = p.situation().full_subset();
        let ev_s: BTreeSet<Value> = ev[&full].iter().cloned().collect();
        let ran_u = p.utility_range().into_iter().collect();
        let geu = p
            .situation()
            .act_ids()
            .map(|a| p.geu(a))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(AxiomCtx { p, ev, ev_s, ran_u, geu })
    }

    fn dom(&self) -> &crate::algebra::ExpectationDomain {
        self.p.domain()
    }

    fn attained(&self, v: &Value) -> bool {
        self.ev_s.contains(v)
    }

    fn le(&self, x: &Value, y: &Value) -> Result<bool, Error> {
        self.dom().le_v(x, y)
    }

    fn lt(&self, x: &Value, y: &Value) -> Result<bool, Error> {
        self.dom().lt_v(x, y)
    }

    fn a1a(&self, x: &Value, y: &Value) -> Result<Outcome, Error> {
        Ok(if self.le(x, y)? || self.le(y, x)? { Outcome::Pass } else { Outcome::Fail })
    }

    fn a1b(&self, x: &Value, y: &Value, z: &Value) -> Result<Outcome, Error> {
        Ok(if self.le(x, y)? && self.le(y, z)? && !self.le(x, z)? {
            Outcome::Fail
        } else {
            Outcome::Pass
        })
    }

    fn a2(&self, x: Subset, x1: &Value, x2: &Value, y1: &Value, y2: &Value) -> Result<Outcome, Error> {
        debug_assert!(!x.is_empty() && x != self.p.situation().full_subset());
        let mut sums = [[None, None], [None, None]];
        for (i, xi) in [x1, x2].into_iter().enumerate() {
            for (j, yj) in [y1, y2].into_iter().enumerate() {
                let sum = self.dom().oplus(xi, yj)?;
                if !self.attained(&sum) {
                    return Ok(Outcome::Vacuous);
                }
                sums[i][j] = Some(sum);
            }
        }
        let get = |i: usize, j: usize| sums[i][j].as_ref().expect("filled");
        let with_y1 = self.le(get(0, 0), get(1, 0))?;
        let with_y2 = self.le(get(0, 1), get(1, 1))?;
        Ok(if with_y1 == with_y2 { Outcome::Pass } else { Outcome::Fail })
    }

    /// The bracketed existential of the conditional axiom: some completion
    /// value keeps both sums attained.
    fn sum_guard(&self, t1: &Value, t2: &Value, comp: Subset) -> Result<bool, Error> {
        for y0 in &self.ev[&comp] {
            if self.attained(&self.dom().oplus(t1, y0)?) && self.attained(&self.dom().oplus(t2, y0)?)
            {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn a3_antecedent(&self, x: Subset) -> Result<bool, Error> {
        let comp = x.complement(self.p.situation().n_states());
        for x1 in &self.ev[&x] {
            'candidate: for x2 in &self.ev[&x] {
                if !self.sum_guard(x1, x2, comp)? {
                    continue;
                }
                for y in &self.ev[&comp] {
                    let s1 = self.dom().oplus(x1, y)?;
                    let s2 = self.dom().oplus(x2, y)?;
                    if self.attained(&s1) && self.attained(&s2) && !self.lt(&s1, &s2)? {
                        continue 'candidate;
                    }
                }
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn a3(&self, x: Subset, u1: &Value, u2: &Value) -> Result<Outcome, Error> {
        if !self.a3_antecedent(x)? {
            return Ok(Outcome::Pass);
        }
        let (e1, e2) = (self.dom().embed_u(u1)?, self.dom().embed_u(u2)?);
        if !self.attained(&e1) || !self.attained(&e2) {
            return Ok(Outcome::Vacuous);
        }
        let lhs = self.le(&e1, &e2)?;
        let comp = x.complement(self.p.situation().n_states());
        let pl_x = self.p.plausibility().assign(x);
        let t1 = self.dom().otimes(&pl_x, u1)?;
        let t2 = self.dom().otimes(&pl_x, u2)?;
        let mut rhs = self.sum_guard(&t1, &t2, comp)?;
        if rhs {
            for y in &self.ev[&comp] {
                let s1 = self.dom().oplus(&t1, y)?;
                let s2 = self.dom().oplus(&t2, y)?;
                if self.attained(&s1) && self.attained(&s2) && !self.le(&s1, &s2)? {
                    rhs = false;
                    break;
                }
            }
        }
        Ok(if lhs == rhs { Outcome::Pass } else { Outcome::Fail })
    }

    fn a4(
        &self,
        x1: Subset,
        x2: Subset,
        u1: &Value,
        v1: &Value,
        u2: &Value,
        v2: &Value,
    ) -> Result<Outcome, Error> {
        for w in [u1, v1, u2, v2] {
            if !self.attained(&self.dom().embed_u(w)?) {
                return Ok(Outcome::Vacuous);
            }
        }
        if !(self.lt(&self.dom().embed_u(v1)?, &self.dom().embed_u(u1)?)?
            && self.lt(&self.dom().embed_u(v2)?, &self.dom().embed_u(u2)?)?)
        {
            return Ok(Outcome::Pass);
        }
        let l11 = self.p.ulotto(u1, x1, v1)?;
        let l12 = self.p.ulotto(u1, x2, v1)?;
        let l21 = self.p.ulotto(u2, x1, v2)?;
        let l22 = self.p.ulotto(u2, x2, v2)?;
        if ![&l11, &l12, &l21, &l22].into_iter().all(|l| self.attained(l)) {
            return Ok(Outcome::Vacuous);
        }
        Ok(if self.le(&l11, &l12)? == self.le(&l21, &l22)? { Outcome::Pass } else { Outcome::Fail })
    }

    fn a5_holds(&self) -> Result<bool, Error> {
        for u1 in &self.ran_u {
            for u2 in &self.ran_u {
                let (e1, e2) = (self.dom().embed_u(u1)?, self.dom().embed_u(u2)?);
                if self.attained(&e1) && self.attained(&e2) && self.lt(&e1, &e2)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    fn a6(&self, a: ActId, b: ActId, c: ConsId, parts: &[Vec<Subset>]) -> Result<Outcome, Error> {
        let x = &self.geu[a.0 as usize];
        let y = &self.geu[b.0 as usize];
        let u = self.p.utility(c);
        if !self.lt(x, y)? {
            return Ok(Outcome::Pass);
        }
        'partition: for partition in parts {
            let xs: Vec<Value> = partition
                .iter()
                .map(|z| self.p.geu_restricted(a, *z))
                .collect::<Result<_, _>>()?;
            let ys: Vec<Value> = partition
                .iter()
                .map(|z| self.p.geu_restricted(b, *z))
                .collect::<Result<_, _>>()?;
            // The decomposition clause: the restricted values must recompose
            // the full values.
            if self.dom().fold_sum(&xs)? != *x || self.dom().fold_sum(&ys)? != *y {
                continue;
            }
            for (k, z) in partition.iter().enumerate() {
                let head = self.dom().otimes(&self.p.plausibility().assign(*z), u)?;
                let swap = |cells: &[Value]| -> Result<Value, Error> {
                    let mut terms = vec![head.clone()];
                    terms.extend(cells.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, v)| v.clone()));
                    self.dom().fold_sum(&terms)
                };
                let tx = swap(&xs)?;
                if self.attained(&tx) && !self.lt(&tx, y)? {
                    continue 'partition;
                }
                let ty = swap(&ys)?;
                if self.attained(&ty) && !self.lt(x, &ty)? {
                    continue 'partition;
                }
            }
            return Ok(Outcome::Pass);
        }
        Ok(Outcome::Fail)
    }
}

/// Decides one axiom on a decision problem.
///
/// Preconditions mirror the problem classes of the representation theorem:
/// indices 2, 3, and 6 require an additive problem; in the general version
/// indices 2, 3, 4, and 6 additionally require the act set to be all simple
/// acts or the problem to be whole. The special version asserts a full act
/// set and runs the same evaluator.
pub fn check_axiom(
    problem: &DecisionProblem,
    index: CheckIndex,
    version: Version,
    budgets: Budgets,
) -> Result<CheckResult, Error> {
    if version == Version::Special {
        assert_special(problem.situation())?;
    }
    if matches!(index, CheckIndex::I2 | CheckIndex::I3 | CheckIndex::I6)
        && !problem.is_additive()?.holds
    {
        return Err(Error::PiViolation(format!("Π_add (required by A{})", index.token())));
    }
    if matches!(index, CheckIndex::I2 | CheckIndex::I3 | CheckIndex::I4 | CheckIndex::I6)
        && version == Version::General
        && !(problem.situation().has_all_simple_acts() || problem.is_whole(budgets.acts)?.holds)
    {
        return Err(Error::PiViolation(format!("Π_0 (required by A{})", index.token())));
    }
    let ctx = AxiomCtx::new(problem)?;
    let mut result = CheckResult::new(index.axiom_name(), version);
    let n = problem.situation().n_states();
    let full = problem.situation().full_subset();
    match index {
        CheckIndex::I1a => {
            'driver: for x in &ctx.ev[&full] {
                for y in &ctx.ev[&full] {
                    if let Outcome::Fail = ctx.a1a(x, y)? {
                        result.fail(vec![
                            ("x", Binding::Value(x.clone())),
                            ("y", Binding::Value(y.clone())),
                        ]);
                        break 'driver;
                    }
                }
            }
        }
        CheckIndex::I1b => {
            'driver: for x in &ctx.ev[&full] {
                for y in &ctx.ev[&full] {
                    for z in &ctx.ev[&full] {
                        if let Outcome::Fail = ctx.a1b(x, y, z)? {
                            result.fail(vec![
                                ("x", Binding::Value(x.clone())),
                                ("y", Binding::Value(y.clone())),
                                ("z", Binding::Value(z.clone())),
                            ]);
                            break 'driver;
                        }
                    }
                }
            }
        }
        CheckIndex::I2 => {
            'driver: for x in subsets_lex(n) {
                if x.is_empty() || x == full {
                    continue;
                }
                let comp = x.complement(n);
                for x1 in &ctx.ev[&x] {
                    for x2 in &ctx.ev[&x] {
                        for y1 in &ctx.ev[&comp] {
                            for y2 in &ctx.ev[&comp] {
                                match ctx.a2(x, x1, x2, y1, y2)? {
                                    Outcome::Pass => {}
                                    Outcome::Vacuous => result.vacuous += 1,
                                    Outcome::Fail => {
                                        result.fail(vec![
                                            ("X", Binding::Subset(x)),
                                            ("x1", Binding::Value(x1.clone())),
                                            ("x2", Binding::Value(x2.clone())),
                                            ("y1", Binding::Value(y1.clone())),
                                            ("y2", Binding::Value(y2.clone())),
                                        ]);
                                        break 'driver;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        CheckIndex::I3 => {
            'driver: for x in subsets_lex(n) {
                if x.is_empty() || x == full {
                    continue;
                }
                for u1 in &ctx.ran_u {
                    for u2 in &ctx.ran_u {
                        match ctx.a3(x, u1, u2)? {
                            Outcome::Pass => {}
                            Outcome::Vacuous => result.vacuous += 1,
                            Outcome::Fail => {
                                result.fail(vec![
                                    ("X", Binding::Subset(x)),
                                    ("u1", Binding::Value(u1.clone())),
                                    ("u2", Binding::Value(u2.clone())),
                                ]);
                                break 'driver;
                            }
                        }
                    }
                }
            }
        }
        CheckIndex::I4 => {
            'driver: for x1 in subsets_lex(n) {
                for x2 in subsets_lex(n) {
                    for u1 in &ctx.ran_u {
                        for v1 in &ctx.ran_u {
                            for u2 in &ctx.ran_u {
                                for v2 in &ctx.ran_u {
                                    match ctx.a4(x1, x2, u1, v1, u2, v2)? {
                                        Outcome::Pass => {}
                                        Outcome::Vacuous => result.vacuous += 1,
                                        Outcome::Fail => {
                                            result.fail(vec![
                                                ("X1", Binding::Subset(x1)),
                                                ("X2", Binding::Subset(x2)),
                                                ("u1", Binding::Value(u1.clone())),
                                                ("v1", Binding::Value(v1.clone())),
                                                ("u2", Binding::Value(u2.clone())),
                                                ("v2", Binding::Value(v2.clone())),
                                            ]);
                                            break 'driver;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        CheckIndex::I5 => {
            if !ctx.a5_holds()? {
                result.fail(Vec::new());
            }
        }
        CheckIndex::I6 => {
            let parts = partitions(n, budgets.partitions)?;
            'driver: for a in problem.situation().act_ids() {
                for b in problem.situation().act_ids() {
                    for c in problem.situation().cons_ids() {
                        if let Outcome::Fail = ctx.a6(a, b, c, &parts)? {
                            let x = ctx.geu[a.0 as usize].clone();
                            let y = ctx.geu[b.0 as usize].clone();
                            result.fail(vec![
                                ("a", Binding::Act(a)),
                                ("b", Binding::Act(b)),
                                ("c", Binding::Consequence(c)),
                                ("x", Binding::Value(x)),
                                ("y", Binding::Value(y)),
                                ("u", Binding::Value(problem.utility(c).clone())),
                            ]);
                            break 'driver;
                        }
                    }
                }
            }
        }
    }
    Ok(result)
}

/// Re-evaluates a failed axiom's witness.
pub fn recheck_axiom(
    problem: &DecisionProblem,
    index: CheckIndex,
    witness: &Witness,
    budgets: Budgets,
) -> Result<bool, Error> {
    let ctx = AxiomCtx::new(problem)?;
    let fail = |o: Outcome| matches!(o, Outcome::Fail);
    let value = |name| witness.value(name).ok_or(Error::WitnessBinding(name));
    let subset = |name| witness.subset(name).ok_or(Error::WitnessBinding(name));
    Ok(match index {
        CheckIndex::I1a => fail(ctx.a1a(value("x")?, value("y")?)?),
        CheckIndex::I1b => fail(ctx.a1b(value("x")?, value("y")?, value("z")?)?),
        CheckIndex::I2 => fail(ctx.a2(
            subset("X")?,
            value("x1")?,
            value("x2")?,
            value("y1")?,
            value("y2")?,
        )?),
        CheckIndex::I3 => fail(ctx.a3(subset("X")?, value("u1")?, value("u2")?)?),
        CheckIndex::I4 => fail(ctx.a4(
            subset("X1")?,
            subset("X2")?,
            value("u1")?,
            value("v1")?,
            value("u2")?,
            value("v2")?,
        )?),
        CheckIndex::I5 => !ctx.a5_holds()?,
        CheckIndex::I6 => {
            let parts = partitions(problem.situation().n_states(), budgets.partitions)?;
            fail(ctx.a6(
                witness.act("a").ok_or(Error::WitnessBinding("a"))?,
                witness.act("b").ok_or(Error::WitnessBinding("b"))?,
                witness.consequence("c").ok_or(Error::WitnessBinding("c"))?,
                &parts,
            )?)
        }
    })
}

// ---------------------------------------------------------------------------
// Problem classes and the representation equivalence
// ---------------------------------------------------------------------------

/// Membership of a problem in the classes over which each axiom represents
/// its postulate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PiMembership {
    /// Every problem belongs to the unrestricted class.
    pub all: bool,
    /// The problem is additive.
    pub additive: bool,
    /// The act set is all simple acts, or the problem is whole.
    pub zero: bool,
}

impl PiMembership {
    /// The class required by one index: 1a/1b/5 are unrestricted, 4 needs
    /// the full-or-whole class, and 2/3/6 need it jointly with additivity.
    pub fn contains(&self, index: CheckIndex) -> bool {
        match index {
            CheckIndex::I1a | CheckIndex::I1b | CheckIndex::I5 => self.all,
            CheckIndex::I4 => self.zero,
            CheckIndex::I2 | CheckIndex::I3 | CheckIndex::I6 => self.additive && self.zero,
        }
    }
}

pub fn pi_membership(problem: &DecisionProblem, budgets: Budgets) -> Result<PiMembership, Error> {
    let additive = problem.is_additive()?.holds;
    let zero =
        problem.situation().has_all_simple_acts() || problem.is_whole(budgets.acts)?.holds;
    Ok(PiMembership { all: true, additive, zero })
}

/// One axiom/postulate pair evaluated on the same problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationItem {
    pub index: CheckIndex,
    pub axiom: CheckResult,
    pub postulate: CheckResult,
}

impl VerificationItem {
    /// The representation equivalence at this index.
    pub fn agree(&self) -> bool {
        self.axiom.holds == self.postulate.holds
    }
}

/// Outcome of verifying the axiom/postulate equivalences on one problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub items: Vec<VerificationItem>,
    /// Whether the conjunction of axioms agrees with the conjunction of
    /// postulates.
    pub conjunction_agrees: bool,
}

impl VerificationReport {
    pub fn all_agree(&self) -> bool {
        self.conjunction_agrees && self.items.iter().all(|i| i.agree())
    }
}

/// Evaluates each requested axiom on the problem and the matching postulate
/// on the induced preference, and reports the biconditional per index and
/// for the conjunction. The problem must lie in every required class; a
/// discrepancy in any biconditional indicates an implementation bug, never
/// an input property.
pub fn verify_representation(
    problem: &DecisionProblem,
    indices: &[CheckIndex],
    budgets: Budgets,
) -> Result<VerificationReport, Error> {
    let pi = pi_membership(problem, budgets)?;
    for index in indices {
        if !pi.contains(*index) {
            let class = match index {
                CheckIndex::I4 => "Π_0",
                CheckIndex::I2 | CheckIndex::I3 | CheckIndex::I6 => "Π_add ∩ Π_0",
                _ => "Π_all",
            };
            return Err(Error::PiViolation(format!("{class} (required by index {})", index.token())));
        }
    }
    let pref = problem.induced_preference()?;
    let mut items = Vec::new();
    for index in indices {
        let axiom = check_axiom(problem, *index, Version::General, budgets)?;
        let postulate =
            check_postulate(problem.situation(), &pref, *index, Version::General, budgets)?;
        items.push(VerificationItem { index: *index, axiom, postulate });
    }
    let axioms_all = items.iter().all(|i| i.axiom.holds);
    let postulates_all = items.iter().all(|i| i.postulate.holds);
    Ok(VerificationReport { items, conjunction_agrees: axioms_all == postulates_all })
}
