use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error(
        "variable `{name}` is already registered as a {existing}, cannot reuse it as a {requested}"
    )]
    VariableKindClash {
        name: String,
        existing: &'static str,
        requested: &'static str,
    },

    #[error("cannot substitute for parameter `{0}`; use evaluate_params instead")]
    SubstituteParam(String),

    #[error("binding makes the denominator of coefficient `{0}` vanish")]
    VanishingDenominator(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("fresh variable {0} already occurs in an operand")]
    VariableCapture(String),

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("missing structure table `{0}`")]
    MissingTable(String),

    #[error("table `{table}` is tagged {tag} but entry ({i}, {j}) violates it")]
    SymmetryViolation {
        table: String,
        tag: &'static str,
        i: String,
        j: String,
    },

    #[error("basis change is not unimodular: determinant {0} is not a nonzero constant")]
    NotUnimodular(String),

    #[error("not a derivation: {0}")]
    NotDerivation(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown catalog id `{0}`")]
    UnknownCatalogId(String),

    #[error("too many formal lambda variables (at most {0} are supported)")]
    TooManyVariables(usize),

    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
