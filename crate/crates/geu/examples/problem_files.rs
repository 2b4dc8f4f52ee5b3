//! The JSON problem format and programmatic report generation: parse a
//! fixture, run commands against it, and round-trip a synthesized problem
//! through emit and parse.
//!
//! Run with: cargo run --example problem_files

use geu::cli::{document_to_json, emit_document, execute, parse_problem, Command};
use geu::savage::{CheckIndex, Version};
use geu::synthesis::Construction;
use geu::Budgets;

fn main() {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/f1.json");
    let bytes = std::fs::read(fixture).unwrap();

    let (problem, _) = parse_problem(&bytes, Budgets::default()).unwrap();
    println!(
        "parsed {}: {} states, {} consequences, {} acts, {} domain",
        fixture,
        problem.situation().n_states(),
        problem.situation().n_consequences(),
        problem.situation().n_acts(),
        problem.domain().name(),
    );

    let report = execute(
        &bytes,
        &Command::Eval { act: "aL".into(), restrict: None },
        Budgets::default(),
    )
    .unwrap();
    println!("\neval --act aL  ->  {}", report.value.unwrap());

    let report = execute(
        &bytes,
        &Command::Check {
            postulates: vec![CheckIndex::I1a, CheckIndex::I6],
            axioms: vec![CheckIndex::I1a],
            version: Version::General,
        },
        Budgets::default(),
    )
    .unwrap();
    println!("\ncheck --postulates 1a,6 --axioms 1a:");
    print!("{}", report.to_text());

    // Synthesize a representation and round-trip it through the format.
    let report = execute(
        &bytes,
        &Command::Synthesize { construction: Construction::Canonical },
        Budgets::default(),
    )
    .unwrap();
    let emitted = document_to_json(report.problem.as_ref().unwrap());
    let (reparsed, pref) = parse_problem(emitted.as_bytes(), Budgets::default()).unwrap();
    let again = document_to_json(&emit_document(&reparsed, pref.as_ref()));
    assert_eq!(emitted, again);
    println!("\nsynthesized document round-trips byte-identically ({} bytes)", emitted.len());
}
