//! The JSON problem-document format.
//!
//! A document is a single UTF-8 JSON object naming states, consequences,
//! acts, a utility function, a plausibility measure, a domain, and an
//! optional preference. Rationals are written `"p/q"` or as integer
//! strings; events as arrays of state ids. Utility and measure values are
//! interpreted against the document's domain type, so symbols of table
//! domains and rationals never collide.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{ExpectationDomain, TableSpec};
use crate::budgets::Budgets;
use crate::decision::DecisionProblem;
use crate::error::Error;
use crate::measures::{PlausibilityMeasure, ProbabilityWeights};
use crate::pref::PreferenceRelation;
use crate::situation::{ActMap, DecisionSituation, Subset};
use crate::value::{parse_rational, Value};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub states: Vec<String>,
    pub consequences: Vec<String>,
    pub acts: ActsDoc,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub allow_duplicate_acts: bool,
    pub utility: UtilityDoc,
    pub plausibility: PlausibilityDoc,
    pub domain: DomainDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preference: Option<Vec<(String, String)>>,
}

/// Either the marker `"all-simple-acts"` or named maps from states to
/// consequences. Named acts are declared in name order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ActsDoc {
    Marker(String),
    Named(BTreeMap<String, BTreeMap<String, String>>),
}

/// Either the marker `"canonical"`/`"tagged"` (the domain determines the
/// utility) or an explicit map from consequences to values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum UtilityDoc {
    Marker(String),
    Map(BTreeMap<String, String>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum PlausibilityDoc {
    #[serde(rename = "probability")]
    Probability { weights: BTreeMap<String, String> },
    #[serde(rename = "pair")]
    Pair { weights1: BTreeMap<String, String>, weights2: BTreeMap<String, String> },
    #[serde(rename = "identity")]
    Identity,
    #[serde(rename = "table")]
    Table { entries: Vec<MeasureEntryDoc> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureEntryDoc {
    pub subset: Vec<String>,
    pub value: RawValueDoc,
}

/// A value literal, interpreted against the domain type: strings are
/// rationals (standard/pair domains) or symbols (table domains); arrays are
/// rational pairs (pair domains) or state sets (canonical/tagged domains).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawValueDoc {
    Scalar(String),
    List(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type")]
#[allow(clippy::large_enum_variant)]
pub enum DomainDoc {
    #[serde(rename = "standard")]
    Standard,
    #[serde(rename = "pair")]
    Pair,
    #[serde(rename = "pair-min")]
    PairMin,
    #[serde(rename = "canonical")]
    Canonical {
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        monotonic: bool,
    },
    #[serde(rename = "tagged")]
    Tagged,
    #[serde(rename = "table")]
    Table {
        utility_carrier: Vec<String>,
        plaus_carrier: Vec<String>,
        valuation_carrier: Vec<String>,
        bottom: String,
        top: String,
        oplus: BTreeMap<String, BTreeMap<String, String>>,
        otimes: BTreeMap<String, BTreeMap<String, String>>,
        #[serde(default)]
        utility_order: Vec<(String, String)>,
        #[serde(default)]
        plaus_order: Vec<(String, String)>,
        #[serde(default)]
        valuation_order: Vec<(String, String)>,
    },
}

fn parse_err(location: &str, message: impl ToString) -> Error {
    Error::Parse { location: location.to_string(), message: message.to_string() }
}

/// Parses raw document bytes.
pub fn parse_document(bytes: &[u8]) -> Result<ProblemDocument, Error> {
    serde_json::from_slice(bytes)
        .map_err(|e| parse_err(&format!("line {}, column {}", e.line(), e.column()), e))
}

/// Parses and fully validates a problem document: referential integrity,
/// domain laws for table domains, and measure laws.
pub fn parse_problem(
    bytes: &[u8],
    budgets: Budgets,
) -> Result<(DecisionProblem, Option<PreferenceRelation>), Error> {
    build_problem(&parse_document(bytes)?, budgets)
}

/// Name given to a generated act when the document uses the
/// all-simple-acts marker.
fn generated_act_name(situation_consequences: &[String], map: &ActMap) -> String {
    let mut name = String::from("a");
    for c in map {
        name.push('_');
        name.push_str(&situation_consequences[c.0 as usize]);
    }
    name
}

pub fn build_problem(
    doc: &ProblemDocument,
    budgets: Budgets,
) -> Result<(DecisionProblem, Option<PreferenceRelation>), Error> {
    // A skeleton situation that resolves state and consequence names before
    // the acts exist.
    let resolver = DecisionSituation::new(
        doc.states.clone(),
        doc.consequences.clone(),
        vec![("_".into(), vec![crate::value::ConsId(0); doc.states.len()])],
    )?;

    let acts: Vec<(String, ActMap)> = match &doc.acts {
        ActsDoc::Marker(marker) if marker == "all-simple-acts" => resolver
            .enumerate_simple_acts(budgets.acts)?
            .into_iter()
            .map(|map| (generated_act_name(&doc.consequences, &map), map))
            .collect(),
        ActsDoc::Marker(other) => {
            return Err(parse_err("acts", format!("unknown marker {other:?}")));
        }
        ActsDoc::Named(named) => {
            let mut out = Vec::with_capacity(named.len());
            for (name, assignment) in named {
                let mut map = vec![None; doc.states.len()];
                for (state, cons) in assignment {
                    let s = resolver.state_by_name(state)?;
                    map[s.0 as usize] = Some(resolver.cons_by_name(cons)?);
                }
                let map: ActMap = map
                    .into_iter()
                    .enumerate()
                    .map(|(i, c)| {
                        c.ok_or_else(|| Error::PartialAct {
                            act: name.clone(),
                            state: doc.states[i].clone(),
                        })
                    })
                    .collect::<Result<_, _>>()?;
                out.push((name.clone(), map));
            }
            out
        }
    };
    let situation = if doc.allow_duplicate_acts {
        DecisionSituation::new_with_duplicates(doc.states.clone(), doc.consequences.clone(), acts)?
    } else {
        DecisionSituation::new(doc.states.clone(), doc.consequences.clone(), acts)?
    };

    let preference = doc
        .preference
        .as_ref()
        .map(|pairs| {
            let ids = pairs
                .iter()
                .map(|(a, b)| Ok((situation.act_by_name(a)?, situation.act_by_name(b)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            Ok::<_, Error>(PreferenceRelation::new(&situation, ids))
        })
        .transpose()?;

    let order_pref = preference.clone().unwrap_or_else(|| PreferenceRelation::reflexive_only(&situation));
    let domain = match &doc.domain {
        DomainDoc::Standard => ExpectationDomain::standard(),
        DomainDoc::Pair => ExpectationDomain::pair(),
        DomainDoc::PairMin => ExpectationDomain::pair_min(),
        DomainDoc::Canonical { monotonic } => {
            ExpectationDomain::canonical_with_preference(&situation, &order_pref, *monotonic)?
        }
        DomainDoc::Tagged => ExpectationDomain::tagged(&situation),
        DomainDoc::Table {
            utility_carrier,
            plaus_carrier,
            valuation_carrier,
            bottom,
            top,
            oplus,
            otimes,
            utility_order,
            plaus_order,
            valuation_order,
        } => {
            let flatten = |table: &BTreeMap<String, BTreeMap<String, String>>| {
                let mut out = BTreeMap::new();
                for (x, row) in table {
                    for (y, z) in row {
                        out.insert((x.clone(), y.clone()), z.clone());
                    }
                }
                out
            };
            ExpectationDomain::table(&TableSpec {
                utility_carrier: utility_carrier.clone(),
                plaus_carrier: plaus_carrier.clone(),
                valuation_carrier: valuation_carrier.clone(),
                bottom: bottom.clone(),
                top: top.clone(),
                oplus: flatten(oplus),
                otimes: flatten(otimes),
                utility_order: utility_order.clone(),
                plaus_order: plaus_order.clone(),
                valuation_order: valuation_order.clone(),
            })?
        }
    };

    let utility: Vec<Value> = match &doc.utility {
        UtilityDoc::Marker(marker) if marker == "canonical" => {
            if !matches!(doc.domain, DomainDoc::Canonical { .. }) {
                return Err(parse_err("utility", "the canonical marker needs a canonical domain"));
            }
            situation
                .cons_ids()
                .map(|c| domain.canonical_utility(c).expect("canonical domain"))
                .collect()
        }
        UtilityDoc::Marker(marker) if marker == "tagged" => {
            if !matches!(doc.domain, DomainDoc::Tagged) {
                return Err(parse_err("utility", "the tagged marker needs a tagged domain"));
            }
            let id = domain.intern_preference(&situation, &order_pref)?;
            situation
                .cons_ids()
                .map(|c| domain.tagged_utility(c, id).expect("tagged domain"))
                .collect()
        }
        UtilityDoc::Marker(other) => {
            return Err(parse_err("utility", format!("unknown marker {other:?}")));
        }
        UtilityDoc::Map(map) => {
            let mut out = Vec::with_capacity(situation.n_consequences());
            for cons in situation.consequences() {
                let raw = map
                    .get(cons)
                    .ok_or_else(|| Error::MissingUtility(cons.clone()))?;
                out.push(scalar_value(&doc.domain, raw)?);
            }
            for key in map.keys() {
                situation.cons_by_name(key)?;
            }
            out
        }
    };

    let weights = |w: &BTreeMap<String, String>| -> Result<ProbabilityWeights, Error> {
        let mut values = Vec::with_capacity(situation.n_states());
        for state in situation.states() {
            let raw = w.get(state).ok_or_else(|| {
                parse_err("plausibility.weights", format!("missing weight for state {state:?}"))
            })?;
            values.push(parse_rational(raw)?);
        }
        for key in w.keys() {
            situation.state_by_name(key)?;
        }
        ProbabilityWeights::new(values)
    };
    let plausibility = match &doc.plausibility {
        PlausibilityDoc::Probability { weights: w } => PlausibilityMeasure::probability(weights(w)?),
        PlausibilityDoc::Pair { weights1, weights2 } => {
            PlausibilityMeasure::pair(weights(weights1)?, weights(weights2)?)?
        }
        PlausibilityDoc::Identity => PlausibilityMeasure::identity(&situation),
        PlausibilityDoc::Table { entries } => {
            let mut parsed = Vec::with_capacity(entries.len());
            for entry in entries {
                let mut subset = Subset::EMPTY;
                for name in &entry.subset {
                    subset = subset.union(Subset::singleton(situation.state_by_name(name)?));
                }
                parsed.push((subset, measure_value(&doc.domain, &entry.value, &situation)?));
            }
            PlausibilityMeasure::table(situation.n_states(), parsed)?
        }
    };

    let problem = DecisionProblem::with_probe_budget(
        situation,
        domain,
        utility,
        plausibility,
        budgets.probes,
    )?;
    Ok((problem, preference))
}

/// Utility-value literal, interpreted against the domain type.
fn scalar_value(domain: &DomainDoc, raw: &str) -> Result<Value, Error> {
    match domain {
        DomainDoc::Standard | DomainDoc::Pair | DomainDoc::PairMin => {
            Ok(Value::Rational(parse_rational(raw)?))
        }
        DomainDoc::Table { .. } => Ok(Value::TableElem(raw.to_string())),
        DomainDoc::Canonical { .. } | DomainDoc::Tagged => Err(parse_err(
            "utility",
            "constructed domains determine utilities; use the domain marker",
        )),
    }
}

/// Measure-value literal, interpreted against the domain type.
fn measure_value(
    domain: &DomainDoc,
    raw: &RawValueDoc,
    situation: &DecisionSituation,
) -> Result<Value, Error> {
    match (domain, raw) {
        (DomainDoc::Standard | DomainDoc::Table { .. }, RawValueDoc::Scalar(s)) => {
            scalar_measure(domain, s)
        }
        (DomainDoc::Pair | DomainDoc::PairMin, RawValueDoc::List(items)) if items.len() == 2 => {
            Ok(Value::RationalPair(parse_rational(&items[0])?, parse_rational(&items[1])?))
        }
        (DomainDoc::Canonical { .. } | DomainDoc::Tagged, RawValueDoc::List(names)) => {
            let mut set = std::collections::BTreeSet::new();
            for name in names {
                set.insert(situation.state_by_name(name)?);
            }
            Ok(Value::StateSet(set))
        }
        _ => Err(parse_err(
            "plausibility.entries",
            "value literal does not fit the domain's plausibility carrier",
        )),
    }
}

fn scalar_measure(domain: &DomainDoc, raw: &str) -> Result<Value, Error> {
    match domain {
        DomainDoc::Table { .. } => Ok(Value::TableElem(raw.to_string())),
        _ => Ok(Value::Rational(parse_rational(raw)?)),
    }
}

/// Renders a problem (plus the preference it was built from, if any) back
/// into the document format. `emit` then `build` reproduces the problem
/// exactly.
pub fn emit_document(
    problem: &DecisionProblem,
    preference: Option<&PreferenceRelation>,
) -> ProblemDocument {
    let situation = problem.situation();
    let states = situation.states().to_vec();
    let consequences = situation.consequences().to_vec();
    let acts = ActsDoc::Named(
        situation
            .acts()
            .iter()
            .map(|act| {
                (
                    act.name.clone(),
                    act.map
                        .iter()
                        .enumerate()
                        .map(|(s, c)| (states[s].clone(), consequences[c.0 as usize].clone()))
                        .collect(),
                )
            })
            .collect(),
    );

    let domain = match problem.domain().name() {
        "standard" => DomainDoc::Standard,
        "pair" => DomainDoc::Pair,
        "pair-min" => DomainDoc::PairMin,
        "canonical" => DomainDoc::Canonical {
            monotonic: problem.domain().flags().monotonic_certified,
        },
        "tagged" => DomainDoc::Tagged,
        "table" => {
            let spec = problem.domain().as_table().expect("table domain").spec();
            let nest = |flat: &BTreeMap<(String, String), String>| {
                let mut out: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
                for ((x, y), z) in flat {
                    out.entry(x.clone()).or_default().insert(y.clone(), z.clone());
                }
                out
            };
            DomainDoc::Table {
                utility_carrier: spec.utility_carrier.clone(),
                plaus_carrier: spec.plaus_carrier.clone(),
                valuation_carrier: spec.valuation_carrier.clone(),
                bottom: spec.bottom.clone(),
                top: spec.top.clone(),
                oplus: nest(&spec.oplus),
                otimes: nest(&spec.otimes),
                utility_order: spec.utility_order.clone(),
                plaus_order: spec.plaus_order.clone(),
                valuation_order: spec.valuation_order.clone(),
            }
        }
        other => unreachable!("unknown domain {other}"),
    };

    let utility = match &domain {
        DomainDoc::Canonical { .. } => UtilityDoc::Marker("canonical".into()),
        DomainDoc::Tagged => UtilityDoc::Marker("tagged".into()),
        _ => UtilityDoc::Map(
            situation
                .cons_ids()
                .map(|c| {
                    let rendered = match problem.utility(c) {
                        Value::Rational(r) => r.to_string(),
                        Value::TableElem(s) => s.clone(),
                        other => unreachable!("utility {other:?} in a scalar domain"),
                    };
                    (consequences[c.0 as usize].clone(), rendered)
                })
                .collect(),
        ),
    };

    let measure = problem.plausibility();
    let weight_doc = |w: &crate::measures::ProbabilityWeights| {
        situation
            .state_ids()
            .map(|s| (states[s.0 as usize].clone(), w.weight(s).to_string()))
            .collect::<BTreeMap<_, _>>()
    };
    let plausibility = if let Some(w) = measure.probability_weights() {
        PlausibilityDoc::Probability { weights: weight_doc(w) }
    } else if let Some((w1, w2)) = measure.pair_weights() {
        PlausibilityDoc::Pair { weights1: weight_doc(w1), weights2: weight_doc(w2) }
    } else if let Some(entries) = measure.table_entries() {
        PlausibilityDoc::Table {
            entries: entries
                .iter()
                .map(|(subset, value)| MeasureEntryDoc {
                    subset: subset.members().map(|s| states[s.0 as usize].clone()).collect(),
                    value: match value {
                        Value::Rational(r) => RawValueDoc::Scalar(r.to_string()),
                        Value::TableElem(s) => RawValueDoc::Scalar(s.clone()),
                        Value::RationalPair(a, b) => {
                            RawValueDoc::List(vec![a.to_string(), b.to_string()])
                        }
                        Value::StateSet(set) => RawValueDoc::List(
                            set.iter().map(|s| states[s.0 as usize].clone()).collect(),
                        ),
                        other => unreachable!("measure value {other:?}"),
                    },
                })
                .collect(),
        }
    } else {
        PlausibilityDoc::Identity
    };

    let preference = preference.map(|pref| {
        pref.nontrivial_pairs()
            .map(|(a, b)| (situation.act(a).name.clone(), situation.act(b).name.clone()))
            .collect()
    });

    ProblemDocument {
        states,
        consequences,
        acts,
        allow_duplicate_acts: situation.allows_duplicate_maps(),
        utility,
        plausibility,
        domain,
        preference,
    }
}

/// Serializes a document as pretty-printed JSON with a trailing newline.
pub fn document_to_json(doc: &ProblemDocument) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("document serialization");
    out.push('\n');
    out
}
