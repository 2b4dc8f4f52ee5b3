//! Expectation domains: the algebra `(U, P, V, ⊕, ⊗)` in which generalized
//! expected utility is computed.
//!
//! A domain bundles three carriers with their orders — utilities `U`,
//! plausibilities `P` (bounded, partially ordered), valuations `V` — and the
//! operations `⊕ : V x V -> V` and `⊗ : P x U -> V`. Four laws are required:
//!
//! * `E1` — `⊕` is associative,
//! * `E2` — `⊕` is commutative,
//! * `E3` — `⊤ ⊗ u = u` under the embedding of `U` in `V`,
//! * `E4` — the utility order is the restriction of the valuation order.
//!
//! Built-in domains with infinite carriers (rationals, rational pairs) carry
//! certification flags for the laws and are spot-checked by sampling; table
//! and constructed domains have finite carriers and are checked exhaustively
//! within a probe budget.

mod canonical;
mod table;

pub use table::TableSpec;

pub(crate) use canonical::{constant_graph, constant_of};
pub(crate) use canonical::{CanonicalDomain, TaggedDomain};
pub(crate) use table::TableDomain;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::pref::PreferenceRelation;
use crate::situation::DecisionSituation;
use crate::value::{ConsId, PrefId, Value};

/// Per-built-in certification of analytically established laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DomainFlags {
    /// Eq-monotonicity: x ≾ y implies x ⊕ z ≾ y ⊕ z.
    pub monotonic_certified: bool,
    /// `(⊥ ⊗ u) ⊕ x = x` with a unique identity element.
    pub identity_certified: bool,
    /// Problems over this domain with its intended measure family decompose
    /// additively.
    pub additive_compatible: bool,
}

/// How a law was checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    /// Law certified for a built-in carrier; random instances sampled.
    CertifiedSampled,
}

/// Outcome of one law check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: &'static str,
    pub holds: bool,
    pub mode: CheckMode,
    pub probes: u64,
    pub vacuous: u64,
    pub witness: Option<Vec<(&'static str, Value)>>,
}

/// Validation outcome across all domain laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainReport {
    pub domain: String,
    pub laws: Vec<LawReport>,
}

impl DomainReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.holds)
    }

    pub fn first_failure(&self) -> Option<&LawReport> {
        self.laws.iter().find(|l| !l.holds)
    }
}

/// Outcome of a single algebraic property check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub holds: bool,
    pub witness: Option<Vec<(&'static str, Value)>>,
    /// The ⊕ identity, when the check establishes one.
    pub identity: Option<Value>,
    pub probed: u64,
    pub vacuous: u64,
}

impl PropertyCheck {
    fn pass(probed: u64) -> Self {
        PropertyCheck { holds: true, witness: None, identity: None, probed, vacuous: 0 }
    }

    fn fail(witness: Vec<(&'static str, Value)>, probed: u64) -> Self {
        PropertyCheck { holds: false, witness: Some(witness), identity: None, probed, vacuous: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum DomainKind {
    Standard,
    Pair { min_order: bool },
    Table(TableDomain),
    Canonical(CanonicalDomain),
    Tagged(TaggedDomain),
}

/// An expectation domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectationDomain {
    kind: DomainKind,
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl ExpectationDomain {
    /// Exact rationals with the usual order, `+`, and `x`; plausibilities in
    /// `[0, 1]`.
    pub fn standard() -> Self {
        ExpectationDomain { kind: DomainKind::Standard }
    }

    /// Rational utilities, plausibility pairs in `[0,1]²`, valuation pairs
    /// with the componentwise order; `⊕` pointwise sum and `⊗` pointwise
    /// scaling. `u` embeds as `(u, u)`.
    pub fn pair() -> Self {
        ExpectationDomain { kind: DomainKind::Pair { min_order: false } }
    }

    /// Same carriers and operations as [`ExpectationDomain::pair`]; the
    /// valuation order compares minima, which makes it total.
    pub fn pair_min() -> Self {
        ExpectationDomain { kind: DomainKind::Pair { min_order: true } }
    }

    /// Explicit finite domain from operation tables.
    pub fn table(spec: &TableSpec) -> Result<Self, Error> {
        Ok(ExpectationDomain { kind: DomainKind::Table(TableDomain::new(spec)?) })
    }

    /// The act-valued domain for a situation, with no preference attached:
    /// distinct values are unrelated. Use
    /// [`ExpectationDomain::canonical_with_preference`] to attach one.
    pub fn canonical(situation: &DecisionSituation) -> Self {
        ExpectationDomain { kind: DomainKind::Canonical(CanonicalDomain::reflexive(situation)) }
    }

    /// The act-valued domain whose valuation order mirrors the preference;
    /// with `monotonic` the order is extended along common `⊕`-summands.
    pub fn canonical_with_preference(
        situation: &DecisionSituation,
        pref: &PreferenceRelation,
        monotonic: bool,
    ) -> Result<Self, Error> {
        Ok(ExpectationDomain {
            kind: DomainKind::Canonical(CanonicalDomain::new(situation, pref, monotonic)?),
        })
    }

    /// The shared tag-valued domain for a situation; preferences are interned
    /// on demand and selected by the utility function alone.
    pub fn tagged(situation: &DecisionSituation) -> Self {
        ExpectationDomain { kind: DomainKind::Tagged(TaggedDomain::new(situation)) }
    }

    pub fn name(&self) -> &'static str {
        match &self.kind {
            DomainKind::Standard => "standard",
            DomainKind::Pair { min_order: false } => "pair",
            DomainKind::Pair { min_order: true } => "pair-min",
            DomainKind::Table(_) => "table",
            DomainKind::Canonical(_) => "canonical",
            DomainKind::Tagged(_) => "tagged",
        }
    }

    pub fn flags(&self) -> DomainFlags {
        match &self.kind {
            DomainKind::Standard | DomainKind::Pair { min_order: false } => DomainFlags {
                monotonic_certified: true,
                identity_certified: true,
                additive_compatible: true,
            },
            // The min order is not monotonic: (0,5) ≾ (1,1) but adding (5,0)
            // gives minima 5 and 1.
            DomainKind::Pair { min_order: true } => DomainFlags {
                monotonic_certified: false,
                identity_certified: true,
                additive_compatible: true,
            },
            DomainKind::Table(_) => DomainFlags {
                monotonic_certified: false,
                identity_certified: false,
                additive_compatible: false,
            },
            DomainKind::Canonical(c) => DomainFlags {
                monotonic_certified: c.monotonic,
                identity_certified: true,
                additive_compatible: true,
            },
            DomainKind::Tagged(_) => DomainFlags {
                monotonic_certified: false,
                identity_certified: true,
                additive_compatible: true,
            },
        }
    }

    /// Whether every law check is exhaustive (finite carriers).
    pub fn is_finite(&self) -> bool {
        !matches!(self.kind, DomainKind::Standard | DomainKind::Pair { .. })
    }

    pub(crate) fn as_table(&self) -> Option<&TableDomain> {
        match &self.kind {
            DomainKind::Table(t) => Some(t),
            _ => None,
        }
    }

    /// Utility value of a consequence in the act-valued constructions.
    pub fn canonical_utility(&self, c: ConsId) -> Option<Value> {
        match &self.kind {
            DomainKind::Canonical(d) => Some(d.utility(c)),
            _ => None,
        }
    }

    /// Utility value of a consequence under an interned preference tag.
    pub fn tagged_utility(&self, c: ConsId, id: PrefId) -> Option<Value> {
        match &self.kind {
            DomainKind::Tagged(d) => Some(d.utility(c, id)),
            _ => None,
        }
    }

    /// Interns a preference into a shared tag-valued domain.
    pub fn intern_preference(
        &self,
        situation: &DecisionSituation,
        pref: &PreferenceRelation,
    ) -> Result<PrefId, Error> {
        match &self.kind {
            DomainKind::Tagged(d) => d.intern(situation, pref),
            _ => Err(Error::UnsupportedDomain(format!(
                "{} domains do not intern preferences",
                self.name()
            ))),
        }
    }

    pub fn bottom(&self) -> Value {
        match &self.kind {
            DomainKind::Standard => Value::Rational(BigRational::zero()),
            DomainKind::Pair { .. } => {
                Value::RationalPair(BigRational::zero(), BigRational::zero())
            }
            DomainKind::Table(t) => t.bottom(),
            DomainKind::Canonical(c) => c.bottom(),
            DomainKind::Tagged(t) => t.bottom(),
        }
    }

    pub fn top(&self) -> Value {
        match &self.kind {
            DomainKind::Standard => Value::Rational(BigRational::one()),
            DomainKind::Pair { .. } => Value::RationalPair(BigRational::one(), BigRational::one()),
            DomainKind::Table(t) => t.top(),
            DomainKind::Canonical(c) => c.top(),
            DomainKind::Tagged(t) => t.top(),
        }
    }

    /// The certified or table-derived ⊕ identity, if any.
    pub fn oplus_identity(&self) -> Option<Value> {
        match &self.kind {
            DomainKind::Standard => Some(Value::Rational(BigRational::zero())),
            DomainKind::Pair { .. } => {
                Some(Value::RationalPair(BigRational::zero(), BigRational::zero()))
            }
            DomainKind::Table(t) => t.identity(),
            DomainKind::Canonical(_) => Some(Value::PairSet(Default::default())),
            DomainKind::Tagged(_) => Some(Value::Tagged(Default::default(), Default::default())),
        }
    }

    /// Embedding of a utility value into the valuation carrier.
    pub fn embed_u(&self, u: &Value) -> Result<Value, Error> {
        match &self.kind {
            DomainKind::Standard => Ok(Value::Rational(u.as_rational()?.clone())),
            DomainKind::Pair { .. } => {
                let r = u.as_rational()?;
                Ok(Value::RationalPair(r.clone(), r.clone()))
            }
            DomainKind::Table(t) => t
                .unembed(u)
                .ok_or_else(|| Error::OutsideCarrier(format!("{u:?}"), "utility")),
            DomainKind::Canonical(_) | DomainKind::Tagged(_) => {
                // Utility values are already stored in embedded form.
                self.unembed_u(u)
                    .ok_or_else(|| Error::OutsideCarrier(format!("{u:?}"), "utility"))
            }
        }
    }

    /// Partial inverse of [`ExpectationDomain::embed_u`]: the utility value a
    /// valuation value embeds, if any.
    pub fn unembed_u(&self, v: &Value) -> Option<Value> {
        match &self.kind {
            DomainKind::Standard => matches!(v, Value::Rational(_)).then(|| v.clone()),
            DomainKind::Pair { .. } => match v {
                Value::RationalPair(a, b) if a == b => Some(Value::Rational(a.clone())),
                _ => None,
            },
            DomainKind::Table(t) => t.unembed(v),
            DomainKind::Canonical(c) => match v {
                Value::PairSet(g) => constant_of(g, c.n_states).map(|_| v.clone()),
                _ => None,
            },
            DomainKind::Tagged(t) => match v {
                Value::Tagged(g, _) => constant_of(g, t.n_states).map(|_| v.clone()),
                _ => None,
            },
        }
    }

    /// Lifts utility-carrier values to valuation values where the carriers
    /// differ; identity otherwise.
    fn coerce_v(&self, x: &Value) -> Value {
        match (&self.kind, x) {
            (DomainKind::Pair { .. }, Value::Rational(r)) => {
                Value::RationalPair(r.clone(), r.clone())
            }
            _ => x.clone(),
        }
    }

    pub fn le_u(&self, x: &Value, y: &Value) -> Result<bool, Error> {
        match &self.kind {
            DomainKind::Standard | DomainKind::Pair { .. } => {
                Ok(x.as_rational()? <= y.as_rational()?)
            }
            DomainKind::Table(t) => t.le_u(x, y),
            DomainKind::Canonical(c) => c.le_u(x, y),
            DomainKind::Tagged(t) => t.le_u(x, y),
        }
    }

    pub fn le_p(&self, x: &Value, y: &Value) -> Result<bool, Error> {
        match &self.kind {
            DomainKind::Standard => Ok(x.as_rational()? <= y.as_rational()?),
            DomainKind::Pair { .. } => {
                let (a1, a2) = x.as_rational_pair()?;
                let (b1, b2) = y.as_rational_pair()?;
                Ok(a1 <= b1 && a2 <= b2)
            }
            DomainKind::Table(t) => t.le_p(x, y),
            DomainKind::Canonical(c) => c.le_p(x, y),
            DomainKind::Tagged(t) => t.le_p(x, y),
        }
    }

    pub fn le_v(&self, x: &Value, y: &Value) -> Result<bool, Error> {
        let (x, y) = (self.coerce_v(x), self.coerce_v(y));
        match &self.kind {
            DomainKind::Standard => Ok(x.as_rational()? <= y.as_rational()?),
            DomainKind::Pair { min_order } => {
                let (a1, a2) = x.as_rational_pair()?;
                let (b1, b2) = y.as_rational_pair()?;
                if *min_order {
                    Ok(a1.min(a2) <= b1.min(b2))
                } else {
                    Ok(a1 <= b1 && a2 <= b2)
                }
            }
            DomainKind::Table(t) => t.le_v(&x, &y),
            DomainKind::Canonical(c) => c.le_v(&x, &y),
            DomainKind::Tagged(t) => t.le_v(&x, &y),
        }
    }

    /// Strict valuation order: x ≾ y and not y ≾ x.
    pub fn lt_v(&self, x: &Value, y: &Value) -> Result<bool, Error> {
        Ok(self.le_v(x, y)? && !self.le_v(y, x)?)
    }

    pub fn oplus(&self, x: &Value, y: &Value) -> Result<Value, Error> {
        let (x, y) = (self.coerce_v(x), self.coerce_v(y));
        match &self.kind {
            DomainKind::Standard => Ok(Value::Rational(x.as_rational()? + y.as_rational()?)),
            DomainKind::Pair { .. } => {
                let (a1, a2) = x.as_rational_pair()?;
                let (b1, b2) = y.as_rational_pair()?;
                Ok(Value::RationalPair(a1 + b1, a2 + b2))
            }
            DomainKind::Table(t) => t.oplus(&x, &y),
            DomainKind::Canonical(c) => c.oplus(&x, &y),
            DomainKind::Tagged(t) => t.oplus(&x, &y),
        }
    }

    pub fn otimes(&self, p: &Value, u: &Value) -> Result<Value, Error> {
        match &self.kind {
            DomainKind::Standard => Ok(Value::Rational(p.as_rational()? * u.as_rational()?)),
            DomainKind::Pair { .. } => {
                let (p1, p2) = p.as_rational_pair()?;
                let u = u.as_rational()?;
                Ok(Value::RationalPair(p1 * u, p2 * u))
            }
            DomainKind::Table(t) => t.otimes(p, u),
            DomainKind::Canonical(c) => c.otimes(p, u),
            DomainKind::Tagged(t) => t.otimes(p, u),
        }
    }

    /// Left fold of `⊕` over the terms. The result does not depend on term
    /// order (E1/E2). An empty fold is only defined for domains with a
    /// certified identity.
    pub fn fold_sum(&self, terms: &[Value]) -> Result<Value, Error> {
        let mut iter = terms.iter();
        let Some(first) = iter.next() else {
            return self.oplus_identity().ok_or(Error::EmptyFold);
        };
        let mut acc = self.coerce_v(first);
        for t in iter {
            acc = self.oplus(&acc, t)?;
        }
        Ok(acc)
    }

    /// Finite utility carrier, if the domain has one.
    pub fn u_carrier(&self) -> Option<Vec<Value>> {
        match &self.kind {
            DomainKind::Standard | DomainKind::Pair { .. } => None,
            DomainKind::Table(t) => Some(t.u_carrier()),
            DomainKind::Canonical(c) => Some(c.u_carrier()),
            DomainKind::Tagged(t) => Some(t.u_carrier()),
        }
    }

    pub fn p_carrier(&self) -> Option<Vec<Value>> {
        match &self.kind {
            DomainKind::Standard | DomainKind::Pair { .. } => None,
            DomainKind::Table(t) => Some(t.p_carrier()),
            DomainKind::Canonical(c) => Some(c.p_carrier()),
            DomainKind::Tagged(t) => Some(t.p_carrier()),
        }
    }

    fn v_carrier_size(&self) -> Option<u128> {
        match &self.kind {
            DomainKind::Standard | DomainKind::Pair { .. } => None,
            DomainKind::Table(t) => Some(t.v_carrier().len() as u128),
            DomainKind::Canonical(c) => Some(c.v_carrier_size()),
            DomainKind::Tagged(t) => Some(t.v_carrier_size()),
        }
    }

    pub fn v_carrier(&self) -> Option<Vec<Value>> {
        match &self.kind {
            DomainKind::Standard | DomainKind::Pair { .. } => None,
            DomainKind::Table(t) => Some(t.v_carrier()),
            DomainKind::Canonical(c) => Some(c.v_carrier()),
            DomainKind::Tagged(t) => Some(t.v_carrier()),
        }
    }

    /// Deterministically seeded sampler for probe-based checks.
    fn probe_rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(0x6d6f_6465_6c5f_6c61)
    }

    /// A pseudo-random valuation value. For finite domains the carrier is
    /// sampled uniformly; rational carriers sample a small grid.
    pub fn sample_v<R: Rng>(&self, rng: &mut R) -> Value {
        match &self.kind {
            DomainKind::Standard => Value::Rational(sample_rational(rng)),
            DomainKind::Pair { .. } => {
                Value::RationalPair(sample_rational(rng), sample_rational(rng))
            }
            DomainKind::Table(t) => {
                let c = t.v_carrier();
                c[rng.gen_range(0..c.len())].clone()
            }
            DomainKind::Canonical(c) => Value::PairSet(sample_pair_set(rng, c.n_states, c.n_cons)),
            DomainKind::Tagged(t) => Value::Tagged(
                sample_pair_set(rng, t.n_states, t.n_cons),
                sample_tags(rng, t.interned_count()),
            ),
        }
    }

    pub fn sample_u<R: Rng>(&self, rng: &mut R) -> Value {
        match &self.kind {
            DomainKind::Standard | DomainKind::Pair { .. } => Value::Rational(sample_rational(rng)),
            DomainKind::Table(t) => {
                let c = t.u_carrier();
                c[rng.gen_range(0..c.len())].clone()
            }
            DomainKind::Canonical(c) => c.utility(ConsId(rng.gen_range(0..c.n_cons))),
            DomainKind::Tagged(t) => Value::Tagged(
                constant_graph(t.n_states, ConsId(rng.gen_range(0..t.n_cons))),
                sample_tags(rng, t.interned_count()),
            ),
        }
    }

    pub fn sample_p<R: Rng>(&self, rng: &mut R) -> Value {
        match &self.kind {
            DomainKind::Standard => Value::Rational(sample_unit(rng)),
            DomainKind::Pair { .. } => Value::RationalPair(sample_unit(rng), sample_unit(rng)),
            DomainKind::Table(t) => {
                let c = t.p_carrier();
                c[rng.gen_range(0..c.len())].clone()
            }
            DomainKind::Canonical(c) => Value::StateSet(sample_state_set(rng, c.n_states)),
            DomainKind::Tagged(t) => Value::StateSet(sample_state_set(rng, t.n_states)),
        }
    }

    /// Checks every domain law and order-structure requirement. Finite
    /// carriers are checked exhaustively; any single law whose exhaustive
    /// instance count exceeds `probe_budget` is a budget error. Certified
    /// infinite carriers are sampled `probe_budget` times per law.
    pub fn validate(&self, probe_budget: u64) -> Result<DomainReport, Error> {
        let laws = if self.is_finite() {
            self.validate_exhaustive(probe_budget)?
        } else {
            self.validate_sampled(probe_budget)
        };
        Ok(DomainReport { domain: self.name().to_string(), laws })
    }

    fn validate_exhaustive(&self, budget: u64) -> Result<Vec<LawReport>, Error> {
        let nu = self.u_carrier().expect("finite").len() as u128;
        let np = self.p_carrier().expect("finite").len() as u128;
        let nv = self.v_carrier_size().expect("finite");
        let costs: [(&str, u128); 8] = [
            ("E1", nv.saturating_mul(nv).saturating_mul(nv)),
            ("E2", nv.saturating_mul(nv)),
            ("E3", nu),
            ("E4", nu * nu),
            ("order-U-reflexive", nu),
            ("order-V-reflexive", nv),
            ("order-P-partial-order", np * np + np * np * np),
            ("order-P-bounds", np),
        ];
        for (law, cost) in costs {
            if cost > budget as u128 {
                return Err(Error::BudgetExceeded {
                    what: format!("exhaustive {law} check"),
                    required: cost,
                    unit: "probes",
                    budget,
                });
            }
        }
        let us = self.u_carrier().expect("finite");
        let ps = self.p_carrier().expect("finite");
        let vs = self.v_carrier().expect("finite");
        let mut laws = Vec::new();

        let mut e1 = LawReport {
            law: "E1",
            holds: true,
            mode: CheckMode::Exhaustive,
            probes: 0,
            vacuous: 0,
            witness: None,
        };
        'e1: for x in &vs {
            for y in &vs {
                let xy = self.oplus(x, y)?;
                for z in &vs {
                    e1.probes += 1;
                    if self.oplus(&xy, z)? != self.oplus(x, &self.oplus(y, z)?)? {
                        e1.holds = false;
                        e1.witness = Some(vec![("x", x.clone()), ("y", y.clone()), ("z", z.clone())]);
                        break 'e1;
                    }
                }
            }
        }
        laws.push(e1);

        let mut e2 = LawReport {
            law: "E2",
            holds: true,
            mode: CheckMode::Exhaustive,
            probes: 0,
            vacuous: 0,
            witness: None,
        };
        'e2: for x in &vs {
            for y in &vs {
                e2.probes += 1;
                if self.oplus(x, y)? != self.oplus(y, x)? {
                    e2.holds = false;
                    e2.witness = Some(vec![("x", x.clone()), ("y", y.clone())]);
                    break 'e2;
                }
            }
        }
        laws.push(e2);

        laws.push(self.law_e3(us.iter())?);
        laws.push(self.law_e4(&us, CheckMode::Exhaustive)?);

        let mut refl_u = LawReport {
            law: "order-U-reflexive",
            holds: true,
            mode: CheckMode::Exhaustive,
            probes: 0,
            vacuous: 0,
            witness: None,
        };
        for u in &us {
            refl_u.probes += 1;
            if !self.le_u(u, u)? {
                refl_u.holds = false;
                refl_u.witness = Some(vec![("u", u.clone())]);
                break;
            }
        }
        laws.push(refl_u);

        let mut refl_v = LawReport {
            law: "order-V-reflexive",
            holds: true,
            mode: CheckMode::Exhaustive,
            probes: 0,
            vacuous: 0,
            witness: None,
        };
        for v in &vs {
            refl_v.probes += 1;
            if !self.le_v(v, v)? {
                refl_v.holds = false;
                refl_v.witness = Some(vec![("x", v.clone())]);
                break;
            }
        }
        laws.push(refl_v);

        let mut po = LawReport {
            law: "order-P-partial-order",
            holds: true,
            mode: CheckMode::Exhaustive,
            probes: 0,
            vacuous: 0,
            witness: None,
        };
        'po: for x in &ps {
            for y in &ps {
                po.probes += 1;
                if x != y && self.le_p(x, y)? && self.le_p(y, x)? {
                    po.holds = false;
                    po.witness = Some(vec![("x", x.clone()), ("y", y.clone())]);
                    break 'po;
                }
            }
        }
        if po.holds {
            'tr: for x in &ps {
                for y in &ps {
                    if !self.le_p(x, y)? {
                        continue;
                    }
                    for z in &ps {
                        po.probes += 1;
                        if self.le_p(y, z)? && !self.le_p(x, z)? {
                            po.holds = false;
                            po.witness =
                                Some(vec![("x", x.clone()), ("y", y.clone()), ("z", z.clone())]);
                            break 'tr;
                        }
                    }
                }
            }
        }
        laws.push(po);

        let mut bounds = LawReport {
            law: "order-P-bounds",
            holds: true,
            mode: CheckMode::Exhaustive,
            probes: 0,
            vacuous: 0,
            witness: None,
        };
        let (bot, top) = (self.bottom(), self.top());
        for x in &ps {
            bounds.probes += 1;
            if !self.le_p(&bot, x)? || !self.le_p(x, &top)? {
                bounds.holds = false;
                bounds.witness = Some(vec![("x", x.clone())]);
                break;
            }
        }
        laws.push(bounds);
        Ok(laws)
    }

    fn law_e3<'a>(&self, us: impl Iterator<Item = &'a Value>) -> Result<LawReport, Error> {
        let mut law = LawReport {
            law: "E3",
            holds: true,
            mode: CheckMode::Exhaustive,
            probes: 0,
            vacuous: 0,
            witness: None,
        };
        let top = self.top();
        for u in us {
            law.probes += 1;
            if self.otimes(&top, u)? != self.embed_u(u)? {
                law.holds = false;
                law.witness = Some(vec![("u", u.clone())]);
                break;
            }
        }
        Ok(law)
    }

    fn law_e4(&self, us: &[Value], mode: CheckMode) -> Result<LawReport, Error> {
        let mut law =
            LawReport { law: "E4", holds: true, mode, probes: 0, vacuous: 0, witness: None };
        'outer: for u1 in us {
            for u2 in us {
                law.probes += 1;
                if self.le_u(u1, u2)? != self.le_v(&self.embed_u(u1)?, &self.embed_u(u2)?)? {
                    law.holds = false;
                    law.witness = Some(vec![("u1", u1.clone()), ("u2", u2.clone())]);
                    break 'outer;
                }
            }
        }
        Ok(law)
    }

    fn validate_sampled(&self, probes: u64) -> Vec<LawReport> {
        let mut rng = self.probe_rng();
        let mut laws = Vec::new();
        let sampled = CheckMode::CertifiedSampled;

        let mut e1 = LawReport {
            law: "E1",
            holds: true,
            mode: sampled,
            probes: 0,
            vacuous: 0,
            witness: None,
        };
        for _ in 0..probes {
            let (x, y, z) = (self.sample_v(&mut rng), self.sample_v(&mut rng), self.sample_v(&mut rng));
            e1.probes += 1;
            let lhs = self.oplus(&self.oplus(&x, &y).unwrap(), &z).unwrap();
            let rhs = self.oplus(&x, &self.oplus(&y, &z).unwrap()).unwrap();
            if lhs != rhs {
                e1.holds = false;
                e1.witness = Some(vec![("x", x), ("y", y), ("z", z)]);
                break;
            }
        }
        laws.push(e1);

        let mut e2 = LawReport {
            law: "E2",
            holds: true,
            mode: sampled,
            probes: 0,
            vacuous: 0,
            witness: None,
        };
        for _ in 0..probes {
            let (x, y) = (self.sample_v(&mut rng), self.sample_v(&mut rng));
            e2.probes += 1;
            if self.oplus(&x, &y).unwrap() != self.oplus(&y, &x).unwrap() {
                e2.holds = false;
                e2.witness = Some(vec![("x", x), ("y", y)]);
                break;
            }
        }
        laws.push(e2);

        let top = self.top();
        let mut e3 = LawReport {
            law: "E3",
            holds: true,
            mode: sampled,
            probes: 0,
            vacuous: 0,
            witness: None,
        };
        for _ in 0..probes {
            let u = self.sample_u(&mut rng);
            e3.probes += 1;
            if self.otimes(&top, &u).unwrap() != self.embed_u(&u).unwrap() {
                e3.holds = false;
                e3.witness = Some(vec![("u", u)]);
                break;
            }
        }
        laws.push(e3);

        let mut e4 = LawReport {
            law: "E4",
            holds: true,
            mode: sampled,
            probes: 0,
            vacuous: 0,
            witness: None,
        };
        for _ in 0..probes {
            let (u1, u2) = (self.sample_u(&mut rng), self.sample_u(&mut rng));
            e4.probes += 1;
            let direct = self.le_u(&u1, &u2).unwrap();
            let embedded =
                self.le_v(&self.embed_u(&u1).unwrap(), &self.embed_u(&u2).unwrap()).unwrap();
            if direct != embedded {
                e4.holds = false;
                e4.witness = Some(vec![("u1", u1), ("u2", u2)]);
                break;
            }
        }
        laws.push(e4);

        for (law, which) in [("order-U-reflexive", 0), ("order-V-reflexive", 1)] {
            let mut report = LawReport {
                law,
                holds: true,
                mode: sampled,
                probes: 0,
                vacuous: 0,
                witness: None,
            };
            for _ in 0..probes {
                let x = if which == 0 { self.sample_u(&mut rng) } else { self.sample_v(&mut rng) };
                report.probes += 1;
                let ok = if which == 0 {
                    self.le_u(&x, &x).unwrap()
                } else {
                    self.le_v(&x, &x).unwrap()
                };
                if !ok {
                    report.holds = false;
                    report.witness = Some(vec![("x", x)]);
                    break;
                }
            }
            laws.push(report);
        }

        let mut po = LawReport {
            law: "order-P-partial-order",
            holds: true,
            mode: sampled,
            probes: 0,
            vacuous: 0,
            witness: None,
        };
        for _ in 0..probes {
            let (x, y, z) = (self.sample_p(&mut rng), self.sample_p(&mut rng), self.sample_p(&mut rng));
            po.probes += 1;
            let anti = x != y && self.le_p(&x, &y).unwrap() && self.le_p(&y, &x).unwrap();
            let trans = self.le_p(&x, &y).unwrap()
                && self.le_p(&y, &z).unwrap()
                && !self.le_p(&x, &z).unwrap();
            if anti || trans {
                po.holds = false;
                po.witness = Some(vec![("x", x), ("y", y), ("z", z)]);
                break;
            }
        }
        laws.push(po);

        let (bot, topp) = (self.bottom(), self.top());
        let mut bounds = LawReport {
            law: "order-P-bounds",
            holds: true,
            mode: sampled,
            probes: 0,
            vacuous: 0,
            witness: None,
        };
        for _ in 0..probes {
            let x = self.sample_p(&mut rng);
            bounds.probes += 1;
            if !self.le_p(&bot, &x).unwrap() || !self.le_p(&x, &topp).unwrap() {
                bounds.holds = false;
                bounds.witness = Some(vec![("x", x)]);
                break;
            }
        }
        laws.push(bounds);
        laws
    }

    /// Eq-monotonicity over an explicit probe set: for every triple, x ≾ y
    /// must imply x ⊕ z ≾ y ⊕ z. The first violating triple is the witness.
    pub fn is_monotonic(&self, triples: &[(Value, Value, Value)]) -> Result<PropertyCheck, Error> {
        let mut probed = 0;
        for (x, y, z) in triples {
            probed += 1;
            if self.le_v(x, y)? {
                let xz = self.oplus(x, z)?;
                let yz = self.oplus(y, z)?;
                if !self.le_v(&xz, &yz)? {
                    return Ok(PropertyCheck::fail(
                        vec![("x", x.clone()), ("y", y.clone()), ("z", z.clone())],
                        probed,
                    ));
                }
            }
        }
        Ok(PropertyCheck::pass(probed))
    }

    /// All valuation triples of a finite domain, for exhaustive monotonicity
    /// probes; budget-guarded.
    pub fn all_v_triples(&self, budget: u64) -> Result<Vec<(Value, Value, Value)>, Error> {
        let size = self
            .v_carrier_size()
            .ok_or_else(|| Error::UnsupportedDomain("infinite valuation carrier".into()))?;
        let required = size.saturating_mul(size).saturating_mul(size);
        if required > budget as u128 {
            return Err(Error::BudgetExceeded {
                what: "valuation triple enumeration".into(),
                required,
                unit: "triples",
                budget,
            });
        }
        let vs = self.v_carrier().expect("finite");
        let mut out = Vec::with_capacity(required as usize);
        for x in &vs {
            for y in &vs {
                for z in &vs {
                    out.push((x.clone(), y.clone(), z.clone()));
                }
            }
        }
        Ok(out)
    }

    /// Decides `(⊥ ⊗ u) ⊕ x = x`; exhaustive on finite carriers, sampled on
    /// certified ones. Reports the identity element on success.
    pub fn has_oplus_identity(&self, probe_budget: u64) -> Result<PropertyCheck, Error> {
        let bot = self.bottom();
        if self.is_finite() {
            let us = self.u_carrier().expect("finite");
            let size = self.v_carrier_size().expect("finite");
            let required = (us.len() as u128).saturating_mul(size);
            if required > probe_budget as u128 {
                return Err(Error::BudgetExceeded {
                    what: "identity check".into(),
                    required,
                    unit: "probes",
                    budget: probe_budget,
                });
            }
            let vs = self.v_carrier().expect("finite");
            let mut probed = 0;
            for u in &us {
                let zero = self.otimes(&bot, u)?;
                for x in &vs {
                    probed += 1;
                    if self.oplus(&zero, x)? != *x {
                        return Ok(PropertyCheck::fail(
                            vec![("u", u.clone()), ("x", x.clone())],
                            probed,
                        ));
                    }
                }
            }
            let identity = us.first().map(|u| self.otimes(&bot, u)).transpose()?;
            Ok(PropertyCheck { identity, ..PropertyCheck::pass(probed) })
        } else {
            let mut rng = self.probe_rng();
            let mut probed = 0;
            for _ in 0..probe_budget {
                let u = self.sample_u(&mut rng);
                let x = self.sample_v(&mut rng);
                probed += 1;
                let zero = self.otimes(&bot, &u)?;
                if self.oplus(&zero, &x)? != x {
                    return Ok(PropertyCheck::fail(vec![("u", u), ("x", x)], probed));
                }
            }
            Ok(PropertyCheck { identity: self.oplus_identity(), ..PropertyCheck::pass(probed) })
        }
    }

    /// Distributivity `p ⊗ (u1 ⊕ u2) = (p ⊗ u1) ⊕ (p ⊗ u2)`, evaluated only
    /// where `u1 ⊕ u2` lands back in the embedded utility carrier; other
    /// probes are counted as vacuous.
    pub fn check_distributivity(&self, probe_budget: u64) -> Result<PropertyCheck, Error> {
        let mut probed = 0;
        let mut vacuous = 0;
        let mut step = |dom: &Self, p: &Value, u1: &Value, u2: &Value| -> Result<Option<Vec<(&'static str, Value)>>, Error> {
            probed += 1;
            let sum = dom.oplus(&dom.embed_u(u1)?, &dom.embed_u(u2)?)?;
            let Some(w) = dom.unembed_u(&sum) else {
                vacuous += 1;
                return Ok(None);
            };
            let lhs = dom.otimes(p, &w)?;
            let rhs = dom.oplus(&dom.otimes(p, u1)?, &dom.otimes(p, u2)?)?;
            if lhs != rhs {
                return Ok(Some(vec![("p", p.clone()), ("u1", u1.clone()), ("u2", u2.clone())]));
            }
            Ok(None)
        };
        if self.is_finite() {
            let us = self.u_carrier().expect("finite");
            let ps = self.p_carrier().expect("finite");
            let required = (ps.len() as u128) * (us.len() as u128) * (us.len() as u128);
            if required > probe_budget as u128 {
                return Err(Error::BudgetExceeded {
                    what: "distributivity check".into(),
                    required,
                    unit: "probes",
                    budget: probe_budget,
                });
            }
            for p in &ps {
                for u1 in &us {
                    for u2 in &us {
                        if let Some(witness) = step(self, p, u1, u2)? {
                            return Ok(PropertyCheck {
                                vacuous,
                                ..PropertyCheck::fail(witness, probed)
                            });
                        }
                    }
                }
            }
        } else {
            let mut rng = self.probe_rng();
            for _ in 0..probe_budget {
                let p = self.sample_p(&mut rng);
                let u1 = self.sample_u(&mut rng);
                let u2 = self.sample_u(&mut rng);
                if let Some(witness) = step(self, &p, &u1, &u2)? {
                    return Ok(PropertyCheck { vacuous, ..PropertyCheck::fail(witness, probed) });
                }
            }
        }
        Ok(PropertyCheck { vacuous, ..PropertyCheck::pass(probed) })
    }
}

fn sample_rational<R: Rng>(rng: &mut R) -> BigRational {
    rational(rng.gen_range(-12..=12), rng.gen_range(1..=8))
}

fn sample_unit<R: Rng>(rng: &mut R) -> BigRational {
    let den = rng.gen_range(1..=10);
    rational(rng.gen_range(0..=den), den)
}

fn sample_state_set<R: Rng>(
    rng: &mut R,
    n_states: u32,
) -> std::collections::BTreeSet<crate::value::StateId> {
    (0..n_states).filter(|_| rng.gen_bool(0.5)).map(crate::value::StateId).collect()
}

fn sample_tags<R: Rng>(rng: &mut R, interned: u32) -> std::collections::BTreeSet<PrefId> {
    (0..interned).filter(|_| rng.gen_bool(0.5)).map(PrefId).collect()
}

fn sample_pair_set<R: Rng>(rng: &mut R, n_states: u32, n_cons: u32) -> crate::value::PairSet {
    let mut set = crate::value::PairSet::new();
    for s in 0..n_states {
        for c in 0..n_cons {
            if rng.gen_bool(0.5) {
                set.insert((crate::value::StateId(s), ConsId(c)));
            }
        }
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::situation::ActId;
    use std::collections::BTreeMap;

    fn small_situation() -> DecisionSituation {
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
    fn standard_domain_validates() {
        let report = ExpectationDomain::standard().validate(200).unwrap();
        assert!(report.passed(), "{report:?}");
        assert!(report.laws.iter().all(|l| l.mode == CheckMode::CertifiedSampled));
    }

    #[test]
    fn pair_domains_validate_and_share_operations() {
        let pair = ExpectationDomain::pair();
        let pair_min = ExpectationDomain::pair_min();
        assert!(pair.validate(200).unwrap().passed());
        assert!(pair_min.validate(200).unwrap().passed());
        // Same ⊕/⊗ and carriers; only the valuation order differs.
        let x = Value::ratio_pair(1, 1, 5, 1);
        let y = Value::ratio_pair(2, 1, 2, 1);
        assert_eq!(pair.oplus(&x, &y).unwrap(), pair_min.oplus(&x, &y).unwrap());
        let p = Value::ratio_pair(1, 2, 1, 4);
        let u = Value::int(2);
        assert_eq!(pair.otimes(&p, &u).unwrap(), pair_min.otimes(&p, &u).unwrap());
        assert_eq!(pair.bottom(), pair_min.bottom());
        // min((1,5)) = 1 <= 2 = min((2,2)) but not componentwise.
        assert!(pair_min.le_v(&x, &y).unwrap());
        assert!(!pair_min.le_v(&y, &x).unwrap());
        assert!(!pair.le_v(&x, &y).unwrap());
        assert!(!pair.le_v(&y, &x).unwrap());
    }

    #[test]
    fn canonical_domain_validates_exhaustively() {
        let sit = small_situation();
        let pref = PreferenceRelation::new(&sit, [(ActId(0), ActId(1))]);
        let dom = ExpectationDomain::canonical_with_preference(&sit, &pref, false).unwrap();
        let report = dom.validate(10_000).unwrap();
        assert!(report.passed(), "{report:?}");
        assert!(report.laws.iter().all(|l| l.mode == CheckMode::Exhaustive));
    }

    #[test]
    fn canonical_validation_respects_budget() {
        let sit = small_situation();
        let dom = ExpectationDomain::canonical(&sit);
        assert!(matches!(dom.validate(100), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn table_commutativity_failure_is_witnessed() {
        let mut spec = table_bool();
        // Make ⊕ non-commutative at (0, 1).
        spec.oplus.insert(("0".into(), "1".into()), "0".into());
        let dom = ExpectationDomain::table(&spec).unwrap();
        let report = dom.validate(10_000).unwrap();
        let e2 = report.laws.iter().find(|l| l.law == "E2").unwrap();
        assert!(!e2.holds);
        let w = e2.witness.as_ref().unwrap();
        assert_eq!(w[0].1, Value::TableElem("0".into()));
        assert_eq!(w[1].1, Value::TableElem("1".into()));
    }

    fn table_bool() -> TableSpec {
        let syms = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let mut oplus = BTreeMap::new();
        let mut otimes = BTreeMap::new();
        for x in ["0", "1"] {
            for y in ["0", "1"] {
                let or = if x == "1" || y == "1" { "1" } else { "0" };
                let and = if x == "1" && y == "1" { "1" } else { "0" };
                oplus.insert((x.to_string(), y.to_string()), or.to_string());
                otimes.insert((x.to_string(), y.to_string()), and.to_string());
            }
        }
        TableSpec {
            utility_carrier: syms(&["0", "1"]),
            plaus_carrier: syms(&["0", "1"]),
            valuation_carrier: syms(&["0", "1"]),
            bottom: "0".into(),
            top: "1".into(),
            oplus,
            otimes,
            utility_order: vec![("0".into(), "1".into())],
            plaus_order: vec![("0".into(), "1".into())],
            valuation_order: vec![("0".into(), "1".into())],
        }
    }

    #[test]
    fn identity_reports() {
        // Standard: identity 0.
        let std = ExpectationDomain::standard();
        let check = std.has_oplus_identity(200).unwrap();
        assert!(check.holds);
        assert_eq!(check.identity, Some(Value::int(0)));
        // Canonical: identity ∅ (⊥ ⊗ c = ∅).
        let dom = ExpectationDomain::canonical(&small_situation());
        let check = dom.has_oplus_identity(10_000).unwrap();
        assert!(check.holds);
        assert_eq!(check.identity, Some(Value::pair_set([])));
        // Boolean table: ⊕ = or has identity 0.
        let tbl = ExpectationDomain::table(&table_bool()).unwrap();
        let check = tbl.has_oplus_identity(10_000).unwrap();
        assert!(check.holds);
        assert_eq!(check.identity, Some(Value::TableElem("0".into())));
    }

    #[test]
    fn identity_is_unique_when_present() {
        // Commutativity forces at most one identity, so ⊥ ⊗ u must land on
        // the same element for every utility value.
        let sit = small_situation();
        let domains = [
            ExpectationDomain::standard(),
            ExpectationDomain::pair(),
            ExpectationDomain::table(&table_bool()).unwrap(),
            ExpectationDomain::canonical(&sit),
            ExpectationDomain::tagged(&sit),
        ];
        for dom in &domains {
            let check = dom.has_oplus_identity(100_000).unwrap();
            assert!(check.holds, "{}", dom.name());
            let identity = check.identity.unwrap();
            assert_eq!(Some(identity.clone()), dom.oplus_identity());
            let bot = dom.bottom();
            let us = dom
                .u_carrier()
                .unwrap_or_else(|| vec![Value::int(-3), Value::int(0), Value::ratio(7, 2)]);
            for u in &us {
                assert_eq!(dom.otimes(&bot, u).unwrap(), identity, "{}", dom.name());
            }
        }
    }

    #[test]
    fn table_without_identity_reports_false() {
        // ⊕ = max shifted: 0⊕0 = 1 destroys any identity.
        let mut spec = table_bool();
        spec.oplus.insert(("0".into(), "0".into()), "1".into());
        let dom = ExpectationDomain::table(&spec).unwrap();
        let check = dom.has_oplus_identity(10_000).unwrap();
        assert!(!check.holds);
        assert!(check.witness.is_some());
        assert_eq!(dom.oplus_identity(), None);
    }

    #[test]
    fn distributivity_standard_and_pair() {
        assert!(ExpectationDomain::standard().check_distributivity(200).unwrap().holds);
        let pair = ExpectationDomain::pair().check_distributivity(200).unwrap();
        assert!(pair.holds);
        assert_eq!(pair.vacuous, 0);
    }

    #[test]
    fn distributivity_vacuous_when_sum_leaves_utilities() {
        // Canonical domains: u1 ⊕ u2 is a constant graph only when u1 = u2.
        let dom = ExpectationDomain::canonical(&small_situation());
        let check = dom.check_distributivity(10_000).unwrap();
        assert!(check.holds);
        // 2 consequences x 4 subsets: the u1 != u2 half is skipped.
        assert_eq!(check.vacuous, 8);

        // A table whose utility carrier is not ⊕-closed: saturating
        // addition on {0, 1, 2} with U = {0, 1} escapes at 1 ⊕ 1.
        let syms = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let mut oplus = BTreeMap::new();
        let mut otimes = BTreeMap::new();
        for x in 0..=2i32 {
            for y in 0..=2i32 {
                oplus.insert((x.to_string(), y.to_string()), (x + y).min(2).to_string());
            }
        }
        for p in 0..=2i32 {
            for u in 0..=1i32 {
                otimes.insert((p.to_string(), u.to_string()), (p * u).min(2).to_string());
            }
        }
        let spec = TableSpec {
            utility_carrier: syms(&["0", "1"]),
            plaus_carrier: syms(&["0", "1", "2"]),
            valuation_carrier: syms(&["0", "1", "2"]),
            bottom: "0".into(),
            top: "1".into(),
            oplus,
            otimes,
            utility_order: vec![("0".into(), "1".into())],
            plaus_order: vec![("0".into(), "1".into()), ("1".into(), "2".into()), ("0".into(), "2".into())],
            valuation_order: vec![("0".into(), "1".into()), ("1".into(), "2".into()), ("0".into(), "2".into())],
        };
        let dom = ExpectationDomain::table(&spec).unwrap();
        let check = dom.check_distributivity(10_000).unwrap();
        assert!(check.holds);
        // Only the (u1, u2) = (1, 1) column escapes U, once per p value.
        assert_eq!(check.vacuous, 3);
        assert_eq!(check.probed, 12);
    }

    #[test]
    fn monotonicity_probes() {
        let std = ExpectationDomain::standard();
        let triples =
            vec![(Value::int(1), Value::int(2), Value::int(-3)), (Value::int(0), Value::int(0), Value::int(5))];
        assert!(std.is_monotonic(&triples).unwrap().holds);

        let pair = ExpectationDomain::pair();
        let mut rng = pair.probe_rng();
        let pair_triples: Vec<_> = (0..500)
            .map(|_| (pair.sample_v(&mut rng), pair.sample_v(&mut rng), pair.sample_v(&mut rng)))
            .collect();
        assert!(pair.is_monotonic(&pair_triples).unwrap().holds);
        // The min-comparison order is not monotonic.
        let bad = vec![(
            Value::ratio_pair(0, 1, 5, 1),
            Value::ratio_pair(1, 1, 1, 1),
            Value::ratio_pair(5, 1, 0, 1),
        )];
        let check = ExpectationDomain::pair_min().is_monotonic(&bad).unwrap();
        assert!(!check.holds);

        let sit = small_situation();
        let pref = PreferenceRelation::new(&sit, [(ActId(0), ActId(1))]);
        let plain = ExpectationDomain::canonical_with_preference(&sit, &pref, false).unwrap();
        let extended = ExpectationDomain::canonical_with_preference(&sit, &pref, true).unwrap();
        let triples = plain.all_v_triples(10_000).unwrap();
        // Adding a non-act summand breaks the plain order but not the
        // extended one.
        let plain_check = plain.is_monotonic(&triples).unwrap();
        assert!(!plain_check.holds);
        assert!(plain_check.witness.is_some());
        assert!(extended.is_monotonic(&triples).unwrap().holds);
    }

    #[test]
    fn fold_sum_cases() {
        let std = ExpectationDomain::standard();
        assert_eq!(std.fold_sum(&[Value::ratio(3, 10), Value::ratio(7, 10)]).unwrap(), Value::int(1));
        assert_eq!(std.fold_sum(&[Value::ratio(5, 2)]).unwrap(), Value::ratio(5, 2));
        assert_eq!(std.fold_sum(&[]).unwrap(), Value::int(0));

        let dom = ExpectationDomain::canonical(&small_situation());
        let got = dom
            .fold_sum(&[Value::pair_set([(0, 0)]), Value::pair_set([(1, 1)])])
            .unwrap();
        assert_eq!(got, Value::pair_set([(0, 0), (1, 1)]));

        let mut spec = table_bool();
        spec.oplus.insert(("0".into(), "0".into()), "1".into());
        let no_id = ExpectationDomain::table(&spec).unwrap();
        assert!(matches!(no_id.fold_sum(&[]), Err(Error::EmptyFold)));
    }

    #[test]
    fn embedding_round_trips() {
        let pair = ExpectationDomain::pair();
        let u = Value::ratio(3, 2);
        let v = pair.embed_u(&u).unwrap();
        assert_eq!(v, Value::ratio_pair(3, 2, 3, 2));
        assert_eq!(pair.unembed_u(&v), Some(u));
        assert_eq!(pair.unembed_u(&Value::ratio_pair(1, 1, 2, 1)), None);
    }
}
