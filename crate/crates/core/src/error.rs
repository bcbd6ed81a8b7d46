use thiserror::Error;

/// Errors reported by construction, analysis and search routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {context} (expected {expected}, found {found})")]
    Dimension {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("operands live in different groups")]
    GroupMismatch,

    #[error("operands live in different fields")]
    FieldMismatch,

    #[error("orthogonality violated: row {x_row} of HX is not orthogonal to row {z_row} of HZ")]
    Orthogonality { x_row: usize, z_row: usize },

    #[error("search space of size 2^{required} exceeds the budget 2^{budget}")]
    BudgetExceeded { required: usize, budget: usize },

    #[error("enumeration of {required} vectors exceeds the budget {budget}")]
    EnumerationBudget { required: u128, budget: u128 },

    #[error("even lift size {ell} is not supported here (the quotient rings are not fields)")]
    EvenLiftSize { ell: usize },

    #[error("only cyclic groups are supported by this operation")]
    NotCyclic,

    #[error("polynomial does not divide x^{ell} - 1")]
    NotADivisor { ell: usize },

    #[error("polynomial is not irreducible")]
    NotIrreducible,

    #[error("field degree {degree} exceeds the supported maximum {max}")]
    FieldDegree { degree: usize, max: usize },

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("random search exhausted after {tries} tries; best relative distance achieved {best:.4}")]
    SearchExhausted { tries: usize, best: f64 },

    #[error("matrix size {size} exceeds the cap {cap} for exact permanents")]
    PermanentCap { size: usize, cap: usize },

    #[error("the permanent bound requires fewer rows than columns (got {rows}x{cols})")]
    BoundNeedsWideMatrix { rows: usize, cols: usize },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("block {index} has weight {weight} > {half} = l/2")]
    AutocorrPrecondition {
        index: usize,
        weight: u64,
        half: f64,
    },

    #[error("no non-degenerate codewords exist (k = 0)")]
    NoCodewords,

    #[error("grade {grade} is out of range 1..={max}")]
    GradeOutOfRange { grade: usize, max: usize },

    #[error("vector is not a codeword: {reason}")]
    NotACodeword { reason: &'static str },

    #[error("codeword is degenerate (lies in the row space of the opposing checks)")]
    DegenerateCodeword,

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("invalid {what}: {why}")]
    Invalid { what: &'static str, why: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }
}
