use alloc::string::String;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars belong to different fields")]
    FieldMismatch,
    #[error("minimal polynomial is not monic")]
    NotMonic,
    #[error("minimal polynomial is reducible: {0}")]
    ReducibleMinpoly(String),
    #[error("objects live in different rings")]
    RingMismatch,
    #[error("monomial order mismatch")]
    OrderMismatch,
    #[error("not a ring homomorphism: relation {0} is not preserved")]
    NotAHomomorphism(String),
    #[error("homomorphism does not commute with the base: {0}")]
    NotOverBase(String),
    #[error("all random specializations degenerated")]
    DegenerateSpecialization,
    #[error("not module-finite: {0}")]
    NotModuleFinite(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("negative degree")]
    NegativeDegree,
    #[error("coefficient is not a polynomial: {0}")]
    NonRegularCoefficient(String),
    #[error("group action not verified: {0}")]
    ActionNotVerified(String),
    #[error("ill-defined module map: {0}")]
    IllDefinedMap(String),
    #[error("twists of semilinear maps do not match")]
    TwistMismatch,
    #[error("cover is not étale: {0}")]
    NotEtale(String),
    #[error("group is not closed: {0}")]
    GroupNotClosed(String),
    #[error("group order {group} differs from generic rank {rank}")]
    RankMismatch { group: usize, rank: usize },
    #[error("automorphism is not over the base: {0}")]
    HomNotOverBase(String),
    #[error("form does not descend to the base: {0}")]
    NotDescendable(String),
    #[error("form is not regular; denominator ideal {0}")]
    NotRegular(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("invalid witness: {0}")]
    WitnessInvalid(String),
    #[error("cannot compute degree: {0}")]
    RankFailure(String),
    #[error("fiber witness degree mismatch: {0}")]
    WitnessDegreeMismatch(String),
    #[error("component not contained in the fiber product: {0}")]
    ComponentNotContained(String),
    #[error("Hom-set bijection fails: {0}")]
    BijectionFailure(String),
    #[error("transfer values differ: {0}")]
    ValueMismatch(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// True for failures of a mathematical check, as opposed to malformed input.
    pub fn is_check_failure(&self) -> bool {
        !matches!(self, Error::Parse { .. } | Error::InvalidInput(_) | Error::RingMismatch | Error::OrderMismatch)
    }
}

pub type Result<T> = core::result::Result<T, Error>;
