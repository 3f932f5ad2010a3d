use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible groups: {left} vs {right}")]
    IncompatibleGroups { left: String, right: String },

    #[error("empty signature")]
    EmptySignature,

    #[error("outside table: {0}")]
    OutsideTable(String),

    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{}", match .line { Some(l) => format!("syntax error at line {l}: {msg}"), None => format!("syntax error: {msg}") })]
    Syntax { line: Option<usize>, msg: String },

    #[error("shape mismatch{}: coefficient {group} expects {expected} coordinates, found {found}", line_suffix(.line))]
    ShapeMismatch {
        line: Option<usize>,
        group: String,
        expected: usize,
        found: usize,
    },

    #[error("duplicate class-id {id} at line {line}")]
    DuplicateClass { id: String, line: usize },

    #[error("insufficient degree coverage: need degree {needed}, have up to {available}")]
    InsufficientDegrees { needed: usize, available: usize },

    #[error("no twisted covering case for {kind}({p},{q})")]
    NoTwistedCase { kind: String, p: u32, q: u32 },

    #[error("incomparable classes: {left} vs {right}")]
    IncomparableClasses { left: String, right: String },

    #[error("ill-defined homomorphism: {0}")]
    IllDefinedHomomorphism(String),

    #[error("class {id} does not match the tower: {detail}")]
    VocabularyMismatch { id: String, detail: String },

    #[error("pi_1(Spin({p},{q})) tables disagree: definite {definite}, indefinite {indefinite}")]
    SpinTableConflict {
        p: u32,
        q: u32,
        definite: String,
        indefinite: String,
    },
}

fn line_suffix(line: &Option<usize>) -> String {
    match line {
        Some(l) => format!(" at line {l}"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
