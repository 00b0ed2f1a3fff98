use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("GF({p}^{m}) is outside the supported field sizes")]
    UnsupportedField { p: u32, m: u32 },
    #[error("invalid modulus for GF({p}^{m}): {reason}")]
    InvalidModulus { p: u32, m: u32, reason: String },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{value} is not an element of GF({q})")]
    InvalidElement { value: u32, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd({n}, {q}) != 1: lengths with repeated roots are not supported")]
    RepeatedRoots { n: u32, q: u32 },
    #[error("residue {residue} is outside Z_{n}")]
    ResidueOutOfRange { residue: u32, n: u32 },
    #[error("set is not a union of cyclotomic cosets: {residue} is present but its coset {coset} is not")]
    NotCosetClosed { residue: u32, coset: String },
    #[error("codes do not share length and field")]
    SpaceMismatch,
    #[error("designed distance {delta} outside 2..={n}")]
    DeltaOutOfRange { delta: u32, n: u32 },
    #[error("invalid code parameters: {0}")]
    InvalidParameters(String),
    #[error("message of degree {degree} does not fit dimension {k}")]
    MessageTooLong { degree: usize, k: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrix shapes are incompatible")]
    ShapeMismatch,
    #[error("enumeration needs {required} codewords but the budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("codes are not nested: {0}")]
    NotNested(String),
    #[error("{poly} does not divide the check polynomial {check}")]
    NotADivisor { poly: String, check: String },
    #[error("extension set {set} is not contained in the admissible set {allowed}")]
    ExtensionSetNotAllowed { set: String, allowed: String },
    #[error("gauge dimension {r} outside 0..={k}")]
    GaugeOutOfRange { r: u32, k: u32 },
    #[error("dimension trading needs k > 1, got k = {k}")]
    CannotTrade { k: u32 },
    #[error("the subsystem code is not known to be pure")]
    Impure,
    #[error("k1 + k2 = {sum} exceeds n = {n}")]
    DimensionOverflow { sum: u32, n: u32 },
    #[error("malformed weight distribution: {0}")]
    MalformedDistribution(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
