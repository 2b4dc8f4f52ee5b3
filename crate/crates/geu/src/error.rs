//! Crate-wide error type.

use crate::value::Value;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("expected a {expected} value, got {got}")]
    CarrierMismatch { expected: &'static str, got: String },

    #[error("value {0} is outside the {1} carrier")]
    OutsideCarrier(String, &'static str),

    #[error("not an exact rational: {0:?} (use \"p/q\" or an integer)")]
    BadRational(String),

    #[error("unknown state id {0:?}")]
    UnknownState(String),

    #[error("unknown consequence id {0:?}")]
    UnknownConsequence(String),

    #[error("unknown act {0:?}")]
    UnknownAct(String),

    #[error("duplicate {what} id {id:?}")]
    DuplicateId { what: &'static str, id: String },

    #[error("acts {0:?} and {1:?} denote the same map; extensional duplicates are rejected unless explicitly permitted")]
    DuplicateActMap(String, String),

    #[error("act {act:?} does not cover state {state:?}")]
    PartialAct { act: String, state: String },

    #[error("{0}")]
    EmptySituationPart(&'static str),

    #[error("too many states: {0} (limit 64)")]
    TooManyStates(usize),

    #[error("utility value missing for consequence {0:?}")]
    MissingUtility(String),

    #[error("restriction set is empty")]
    EmptyRestriction,

    #[error("empty fold with no certified identity for this domain")]
    EmptyFold,

    #[error("operation table incomplete: no entry for {0}")]
    TableIncomplete(String),

    #[error("operation table is not closed: {0}")]
    TableNotClosed(String),

    #[error("weights sum to {0}, expected 1")]
    WeightSum(String),

    #[error("weight for state {0:?} is negative")]
    NegativeWeight(String),

    #[error("measure table: {0}")]
    MeasureTable(String),

    #[error("measures bound to different state sets")]
    MeasureStateMismatch,

    #[error("budget exceeded: {what} needs {required} {unit}, budget is {budget}")]
    BudgetExceeded { what: String, required: u128, unit: &'static str, budget: u64 },

    #[error("special version requires the act set to be all simple acts ({actual} of {expected} present)")]
    SpecialVersionMismatch { actual: u128, expected: u128 },

    #[error("precondition violated: problem is not in {0}")]
    PiViolation(String),

    #[error("extensionally equal acts {0:?} and {1:?} are related differently; no representation exists")]
    DuplicateActObstruction(String, String),

    #[error("the candidate problem does not represent the target preference")]
    NotARepresentation,

    #[error("witness is missing the binding {0:?}")]
    WitnessBinding(&'static str),

    #[error("domain does not support mixed expression evaluation: {0}")]
    UnsupportedDomain(String),

    #[error("unknown preference id #{0} for this shared domain")]
    UnknownPrefId(u32),

    #[error("domain validation failed: {0}")]
    InvalidDomain(String),

    #[error("measure validation failed: {0}")]
    InvalidMeasure(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn carrier_mismatch(expected: &'static str, got: &Value) -> Self {
        Error::CarrierMismatch { expected, got: got.kind().to_string() }
    }

    /// True for errors that map to the budget exit code.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
