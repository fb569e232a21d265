use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("series live over different variable sets")]
    ContextMismatch,
    #[error("constant term {0} is not a unit")]
    NonUnit(String),
    #[error("value {0} is not integral")]
    NonIntegral(String),
    #[error("truncation bounds cannot be reconciled: {0}")]
    IncompatibleTruncation(String),
    #[error("substituted series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("exact division failed: {0}")]
    InexactDivision(String),
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("relation '{0}' is not homogeneous")]
    InhomogeneousRelation(String),
    #[error("cannot parse '{text}': {msg}")]
    Parse { text: String, msg: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DlError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("duplicate generator '{0}'")]
    DuplicateGenerator(String),
    #[error("context line {line}: {msg}")]
    Context { line: usize, msg: String },
    #[error("adem_step needs r > 2s, got r = {r}, s = {s}")]
    AdmissiblePair { r: u32, s: u32 },
    #[error("expression is not homogeneous")]
    Inhomogeneous,
    #[error("degree mismatch: {lhs} vs {rhs}")]
    DegreeMismatch { lhs: u32, rhs: u32 },
    #[error("normalization exceeded {0} rewrite steps")]
    Watchdog(u64),
    #[error("Q^{s} on a degree-{degree} class is outside the E_{level} window")]
    OutsideWindow { s: u32, degree: u32, level: u32 },
    #[error("maps do not chain: {0}")]
    ContextMismatch(String),
    #[error("map is not zero-preserving: {0}")]
    NotZeroPreserving(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("assigned value for '{name}' has degree {found}, expected {expected}")]
    DegreeMismatch { name: String, expected: u32, found: String },
    #[error("no value assigned to generator '{0}'")]
    Unassigned(String),
    #[error("degree {degree} exceeds the model bound {bound}")]
    DegreeOutOfRange { degree: u32, bound: u32 },
    #[error("defining rules disagree: {0}")]
    Inconsistent(String),
    #[error("unknown model '{0}'")]
    UnknownModel(String),
    #[error(transparent)]
    Dl(#[from] DlError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FglError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("2 is a zero divisor in the coefficient ring")]
    TwoZeroDivisor,
    #[error("logarithm must start with a unit linear term")]
    BadLogarithm,
    #[error("non-integral intermediate {what}: {value}")]
    NonIntegral { what: String, value: String },
    #[error("truncation {given} is below the required {needed}")]
    TruncationTooSmall { given: u32, needed: u32 },
    #[error("isogeny congruence fails: {0}")]
    Isogeny(String),
    #[error("unknown ring preset '{0}'")]
    UnknownPreset(String),
    #[error("ring config line {line}: {msg}")]
    Config { line: usize, msg: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("Q-hat^{0} needs an even superscript")]
    OddSuperscript(u32),
    #[error("coefficient {0} is outside the identification's domain")]
    Unidentified(String),
    #[error(transparent)]
    Fgl(#[from] FglError),
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
