//! Problem-document ingestion, command dispatch, and report emission.
//!
//! Exit codes: 0 — every record holds; 1 — at least one check failed (the
//! report carries a witness); 2 — input or validation error; 3 — a budget
//! was exceeded.

mod document;
mod report;

pub use document::{
    build_problem, document_to_json, emit_document, parse_document, parse_problem, ActsDoc,
    DomainDoc, MeasureEntryDoc, PlausibilityDoc, ProblemDocument, RawValueDoc, UtilityDoc,
};
pub use report::{BudgetsEcho, Record, Report};

use sha2::{Digest, Sha256};

use crate::algebra::{CheckMode, LawReport};
use crate::budgets::Budgets;
use crate::decision::DecisionProblem;
use crate::error::Error;
use crate::pref::PreferenceRelation;
use crate::savage::{self, Binding, CheckIndex, CheckResult, Version};
use crate::situation::Subset;
use crate::synthesis::{self, Construction};
use crate::value::{Value, ValueDisplay};

/// One CLI invocation, minus input handling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Validate,
    Eval { act: String, restrict: Option<Vec<String>> },
    Prefs,
    Synthesize { construction: Construction },
    Check { postulates: Vec<CheckIndex>, axioms: Vec<CheckIndex>, version: Version },
    Verify { set: Vec<CheckIndex> },
    EnumerateActs,
}

impl Command {
    /// Canonical echo of the invocation for the report header.
    fn echo(&self) -> String {
        let list = |indices: &[CheckIndex]| {
            indices.iter().map(|i| i.token()).collect::<Vec<_>>().join(",")
        };
        match self {
            Command::Validate => "validate".into(),
            Command::Eval { act, restrict } => match restrict {
                Some(states) => format!("eval --act {act} --restrict {}", states.join(",")),
                None => format!("eval --act {act}"),
            },
            Command::Prefs => "prefs".into(),
            Command::Synthesize { construction } => {
                format!("synthesize --construction {}", construction.token())
            }
            Command::Check { postulates, axioms, version } => format!(
                "check --postulates {} --axioms {} --version {}",
                list(postulates),
                list(axioms),
                version.token()
            ),
            Command::Verify { set } => format!("verify --set {}", list(set)),
            Command::EnumerateActs => "acts --enumerate".into(),
        }
    }
}

fn render_value(problem: &DecisionProblem, value: &Value) -> String {
    ValueDisplay {
        value,
        states: problem.situation().states(),
        consequences: problem.situation().consequences(),
    }
    .to_string()
}

fn render_subset(problem: &DecisionProblem, subset: Subset) -> String {
    render_value(problem, &Value::StateSet(subset.to_state_set()))
}

fn render_binding(problem: &DecisionProblem, binding: &Binding) -> String {
    match binding {
        Binding::Act(a) => problem.situation().act(*a).name.clone(),
        Binding::Consequence(c) => problem.situation().consequences()[c.0 as usize].clone(),
        Binding::Subset(x) => render_subset(problem, *x),
        Binding::Value(v) => render_value(problem, v),
    }
}

fn law_record(problem: &DecisionProblem, law: &LawReport) -> Record {
    Record {
        name: law.law.to_string(),
        version: None,
        holds: law.holds,
        mode: Some(
            match law.mode {
                CheckMode::Exhaustive => "exhaustive",
                CheckMode::CertifiedSampled => "certified-sampled",
            }
            .to_string(),
        ),
        detail: Some(format!("{} probes", law.probes)),
        witness: law.witness.as_ref().map(|bindings| {
            bindings
                .iter()
                .map(|(name, value)| (name.to_string(), render_value(problem, value)))
                .collect()
        }),
        vacuous: law.vacuous,
    }
}

fn check_record(problem: &DecisionProblem, result: &CheckResult) -> Record {
    Record {
        name: result.name.clone(),
        version: Some(result.version.token().to_string()),
        holds: result.holds,
        mode: None,
        detail: None,
        witness: result.witness.as_ref().map(|w| {
            w.bindings
                .iter()
                .map(|(name, binding)| (name.to_string(), render_binding(problem, binding)))
                .collect()
        }),
        vacuous: result.vacuous,
    }
}

/// Runs a command against raw document bytes and produces the report.
/// Deterministic: identical bytes, command, and budgets yield an identical
/// report.
pub fn execute(input: &[u8], command: &Command, budgets: Budgets) -> Result<Report, Error> {
    let digest = format!("sha256:{:x}", Sha256::digest(input));
    let (problem, preference) = parse_problem(input, budgets)?;
    let mut report = Report::new(command.echo(), digest, budgets);
    let stated_or_induced = |problem: &DecisionProblem| -> Result<PreferenceRelation, Error> {
        match &preference {
            Some(pref) => Ok(pref.clone()),
            None => problem.induced_preference(),
        }
    };
    match command {
        Command::Validate => {
            let domain_report = problem.domain().validate(budgets.probes)?;
            for law in &domain_report.laws {
                report.records.push(law_record(&problem, law));
            }
            let measure_report = problem.plausibility().validate_within(problem.domain(), budgets.probes)?;
            for law in &measure_report.laws {
                report.records.push(law_record(&problem, law));
            }
        }
        Command::Eval { act, restrict } => {
            let id = problem.situation().act_by_name(act)?;
            let value = match restrict {
                None => problem.geu(id)?,
                Some(states) => {
                    let mut subset = Subset::EMPTY;
                    for name in states {
                        subset = subset
                            .union(Subset::singleton(problem.situation().state_by_name(name)?));
                    }
                    problem.geu_restricted(id, subset)?
                }
            };
            report.value = Some(render_value(&problem, &value));
        }
        Command::Prefs => {
            let induced = problem.induced_preference()?;
            report.preference = Some(
                induced
                    .nontrivial_pairs()
                    .map(|(a, b)| {
                        (
                            problem.situation().act(a).name.clone(),
                            problem.situation().act(b).name.clone(),
                        )
                    })
                    .collect(),
            );
        }
        Command::Synthesize { construction } => {
            let situation = problem.situation().clone();
            let pref = stated_or_induced(&problem)?;
            let synthesized = match construction {
                Construction::Canonical => synthesis::canonical_representation(&situation, &pref)?,
                Construction::Monotonic => synthesis::monotonic_representation(&situation, &pref)?,
                Construction::Fixed => {
                    let fixed = synthesis::fixed_domain(&situation);
                    synthesis::fixed_representation(&fixed, &situation, &pref)?
                }
            };
            report.records.push(Record {
                detail: Some(format!("construction {}", synthesized.construction.token())),
                ..Record::new("round-trip", synthesized.problem.induced_preference()? == pref)
            });
            report.problem = Some(emit_document(&synthesized.problem, Some(&synthesized.source)));
        }
        Command::Check { postulates, axioms, version } => {
            let pref = stated_or_induced(&problem)?;
            for index in postulates {
                let result = savage::check_postulate(
                    problem.situation(),
                    &pref,
                    *index,
                    *version,
                    budgets,
                )?;
                report.records.push(check_record(&problem, &result));
            }
            for index in axioms {
                let result = savage::check_axiom(&problem, *index, *version, budgets)?;
                report.records.push(check_record(&problem, &result));
            }
        }
        Command::Verify { set } => {
            let verification = savage::verify_representation(&problem, set, budgets)?;
            for item in &verification.items {
                report.records.push(Record {
                    version: Some(Version::General.token().to_string()),
                    detail: Some(format!(
                        "{}={} {}={}",
                        item.axiom.name,
                        item.axiom.holds,
                        item.postulate.name,
                        item.postulate.holds
                    )),
                    ..Record::new(
                        format!("A{0}<=>P{0}", item.index.token()),
                        item.agree(),
                    )
                });
            }
            report.records.push(Record {
                detail: Some("conjunction of axioms vs conjunction of postulates".to_string()),
                ..Record::new("conjunction", verification.conjunction_agrees)
            });
        }
        Command::EnumerateActs => {
            let maps = problem.situation().enumerate_simple_acts(budgets.acts)?;
            let states = problem.situation().states();
            let consequences = problem.situation().consequences();
            report.acts = Some(
                maps.into_iter()
                    .map(|map| {
                        map.iter()
                            .enumerate()
                            .map(|(s, c)| {
                                (states[s].clone(), consequences[c.0 as usize].clone())
                            })
                            .collect()
                    })
                    .collect(),
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f1_json() -> Vec<u8> {
        serde_json::json!({
            "states": ["s1", "s2"],
            "consequences": ["c1", "c2"],
            "acts": {
                "aK": {"s1": "c1", "s2": "c1"},
                "aL": {"s1": "c1", "s2": "c2"},
                "aM": {"s1": "c2", "s2": "c1"},
                "aN": {"s1": "c2", "s2": "c2"}
            },
            "utility": {"c1": "1", "c2": "0"},
            "plausibility": {"type": "probability", "weights": {"s1": "3/10", "s2": "7/10"}},
            "domain": {"type": "standard"}
        })
        .to_string()
        .into_bytes()
    }

    #[test]
    fn parse_validates_and_counts() {
        let (problem, pref) = parse_problem(&f1_json(), Budgets::default()).unwrap();
        assert_eq!(problem.situation().n_states(), 2);
        assert_eq!(problem.situation().n_consequences(), 2);
        assert_eq!(problem.situation().n_acts(), 4);
        assert!(pref.is_none());
    }

    #[test]
    fn bad_documents_report_structured_errors() {
        let mut doc: serde_json::Value = serde_json::from_slice(&f1_json()).unwrap();
        doc["plausibility"]["weights"]["s2"] = "6/10".into();
        let err = parse_problem(doc.to_string().as_bytes(), Budgets::default()).unwrap_err();
        assert!(matches!(err, Error::WeightSum(s) if s == "9/10"));

        let mut doc: serde_json::Value = serde_json::from_slice(&f1_json()).unwrap();
        doc["acts"]["aK"]["s3"] = "c1".into();
        let err = parse_problem(doc.to_string().as_bytes(), Budgets::default()).unwrap_err();
        assert!(matches!(err, Error::UnknownState(s) if s == "s3"));
    }

    #[test]
    fn eval_renders_exact_rationals() {
        let report = execute(
            &f1_json(),
            &Command::Eval { act: "aL".into(), restrict: None },
            Budgets::default(),
        )
        .unwrap();
        assert_eq!(report.value.as_deref(), Some("3/10"));
        assert_eq!(report.exit_code(), 0);

        let report = execute(
            &f1_json(),
            &Command::Eval { act: "aL".into(), restrict: Some(vec!["s1".into()]) },
            Budgets::default(),
        )
        .unwrap();
        assert_eq!(report.value.as_deref(), Some("3/10"));
    }

    #[test]
    fn check_failure_sets_exit_code_and_witness() {
        let mut doc: serde_json::Value = serde_json::from_slice(&f1_json()).unwrap();
        doc["preference"] = serde_json::json!([]);
        let report = execute(
            doc.to_string().as_bytes(),
            &Command::Check {
                postulates: vec![CheckIndex::I1a],
                axioms: vec![],
                version: Version::General,
            },
            Budgets::default(),
        )
        .unwrap();
        assert_eq!(report.exit_code(), 1);
        let witness = report.records[0].witness.as_ref().unwrap();
        assert_eq!(witness[0], ("a1".to_string(), "aK".to_string()));
        assert_eq!(witness[1], ("a2".to_string(), "aL".to_string()));
    }

    #[test]
    fn verify_reports_biconditionals() {
        let report = execute(
            &f1_json(),
            &Command::Verify { set: CheckIndex::ALL.to_vec() },
            Budgets::default(),
        )
        .unwrap();
        assert_eq!(report.records.len(), 8);
        assert_eq!(report.exit_code(), 0);
        assert!(report.records.iter().all(|r| r.holds));
    }

    #[test]
    fn reports_are_deterministic() {
        let run = || {
            execute(&f1_json(), &Command::Validate, Budgets::default())
                .unwrap()
                .to_json()
        };
        assert_eq!(run(), run());
        let text = execute(&f1_json(), &Command::Validate, Budgets::default())
            .unwrap()
            .to_text();
        assert!(text.contains("E1: pass"));
        assert!(text.contains("Pl3: pass"));
    }

    #[test]
    fn document_round_trip_is_stable() {
        for construction in
            [Construction::Canonical, Construction::Monotonic, Construction::Fixed]
        {
            let mut doc: serde_json::Value = serde_json::from_slice(&f1_json()).unwrap();
            doc["preference"] = serde_json::json!([["aN", "aL"], ["aL", "aK"]]);
            let report = execute(
                doc.to_string().as_bytes(),
                &Command::Synthesize { construction },
                Budgets::default(),
            )
            .unwrap();
            assert!(report.all_hold());
            let emitted = document_to_json(report.problem.as_ref().unwrap());
            let (p1, pref1) = parse_problem(emitted.as_bytes(), Budgets::default()).unwrap();
            let emitted_again =
                document_to_json(&emit_document(&p1, pref1.as_ref()));
            assert_eq!(emitted, emitted_again);
            let (p2, pref2) = parse_problem(emitted_again.as_bytes(), Budgets::default()).unwrap();
            assert_eq!(p1, p2);
            assert_eq!(pref1, pref2);
        }
    }

    #[test]
    fn every_fixture_round_trips_through_the_format() {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
        let mut checked = 0;
        for entry in std::fs::read_dir(dir).unwrap() {
            let path = entry.unwrap().path();
            let bytes = std::fs::read(&path).unwrap();
            let (p1, pref1) = parse_problem(&bytes, Budgets::default()).unwrap();
            let emitted = document_to_json(&emit_document(&p1, pref1.as_ref()));
            let (p2, pref2) = parse_problem(emitted.as_bytes(), Budgets::default()).unwrap();
            assert_eq!(p1, p2, "{path:?}");
            assert_eq!(pref1, pref2, "{path:?}");
            assert_eq!(emitted, document_to_json(&emit_document(&p2, pref2.as_ref())));
            checked += 1;
        }
        assert!(checked >= 6);
    }

    #[test]
    fn all_simple_acts_marker_expands() {
        let doc = serde_json::json!({
            "states": ["s1", "s2"],
            "consequences": ["c1", "c2"],
            "acts": "all-simple-acts",
            "utility": {"c1": "1", "c2": "0"},
            "plausibility": {"type": "probability", "weights": {"s1": "3/10", "s2": "7/10"}},
            "domain": {"type": "standard"}
        });
        let (problem, _) = parse_problem(doc.to_string().as_bytes(), Budgets::default()).unwrap();
        assert_eq!(problem.situation().n_acts(), 4);
        assert!(problem.situation().has_all_simple_acts());
        assert_eq!(problem.situation().acts()[0].name, "a_c1_c1");
    }
}
