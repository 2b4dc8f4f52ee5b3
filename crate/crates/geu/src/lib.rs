//! Generalized expected utility over abstract expectation domains.
//!
//! Classical expected utility multiplies probabilities by real-valued
//! utilities and adds the products. This crate abstracts all three
//! ingredients: beliefs are plausibility measures into a bounded partially
//! ordered domain, tastes are utilities in a carrier with an arbitrary
//! reflexive order, and expectation folds a commutative-associative `⊕`
//! over `⊗`-products inside a valuation carrier. The library
//!
//! * evaluates generalized expected utility, its event restrictions, and
//!   its statewise analogue over built-in and user-defined (table) domains
//!   ([`decision`], [`algebra`], [`measures`]);
//! * synthesizes a representing decision problem for any reflexive
//!   preference relation on acts — transitive, total, or neither — via
//!   per-preference, monotonic, and shared-domain constructions
//!   ([`synthesis`]);
//! * decides the act-side postulates P1–P6 and the value-side axioms A1–A6
//!   on finite problems, with structured counterexample witnesses, and
//!   verifies the axiom-postulate equivalences by exhaustive checking
//!   ([`savage`]);
//! * reads and writes a JSON problem format and emits deterministic reports
//!   ([`cli`], also exposed through the `geu` binary).
//!
//! Every quantity is an exact rational or a finite structure; all checks
//! are decidable and witnesses are reproducible.

pub mod algebra;
mod budgets;
pub mod cli;
pub mod decision;
pub mod error;
pub mod measures;
pub mod pref;
pub mod relation;
pub mod savage;
pub mod situation;
pub mod synthesis;
pub mod value;

pub use budgets::{Budgets, DEFAULT_ACT_BUDGET, DEFAULT_PARTITION_BUDGET, DEFAULT_PROBE_BUDGET};
pub use decision::DecisionProblem;
pub use error::Error;
pub use pref::PreferenceRelation;
pub use situation::{splice, ActId, ActMap, DecisionSituation, Subset};
pub use value::{ConsId, PrefId, StateId, Value};
