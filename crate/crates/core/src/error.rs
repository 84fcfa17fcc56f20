use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("group enumeration exceeded the order cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("search budget of {budget} exhausted in {what}")]
    BudgetExceeded { what: &'static str, budget: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("generators act on different point counts")]
    DegreeMismatch,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("action does not define a homomorphism into the automorphism group: {0}")]
    NotAHomomorphism(String),
    #[error("operation requires a nontrivial group")]
    TrivialGroup,
    #[error("element does not belong to the group")]
    NotAnElement,
    #[error("{0} is not prime")]
    NotPrime(u64),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RepsError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("factor {0} is not a faithful group")]
    NotFaithfulFactor(usize),
    #[error("faithfulness oracles disagree (Gaschutz: {gaschutz}, character table: {table})")]
    OracleDisagreement { gaschutz: bool, table: bool },
    #[error("character table construction failed: {0}")]
    Table(String),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CovariantError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("component block {0} is identically zero")]
    ZeroComponent(usize),
    #[error("block {block} is not multihomogeneous: found multidegrees {first:?} and {second:?}")]
    NotMultihomogeneous { block: usize, first: Vec<i64>, second: Vec<i64> },
    #[error("weight vector does not separate the multidegrees of block {0}")]
    BetaNotSeparating(usize),
    #[error("block structure mismatch: {0}")]
    BlockMismatch(String),
    #[error("twist exponent vector is not in the rational column space of the degree matrix")]
    MuNotInColumnSpace,
    #[error("polynomial is not invariant")]
    NotInvariant,
    #[error("no nonzero invariant of the requested degree")]
    NotFound,
    #[error("matrices do not define a representation: {0}")]
    NotARepresentation(String),
    #[error("map is not equivariant")]
    NotEquivariant,
    #[error("no point with trivial stabilizer found")]
    NoFreePoint,
    #[error("every affine chart degenerates at the sampled points")]
    ChartDegenerate,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed covariant data: {0}")]
    Format(String),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DslError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("{0}")]
    Semantic(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error(transparent)]
    Reps(#[from] RepsError),
    #[error("inconsistent derivation for {quantity} of {group}: {} against {}", lower.rule.id(), upper.rule.id())]
    InconsistentDerivation {
        group: String,
        quantity: &'static str,
        lower: Box<crate::bounds::Certificate>,
        upper: Box<crate::bounds::Certificate>,
    },
    #[error("rule conclusion contradicts a computed fact of {group}: {claim}")]
    ContradictoryFact { group: String, claim: String },
    #[error("no fixpoint after {0} passes")]
    NoFixpoint(usize),
    #[error("certificate {index} fails replay: {reason}")]
    ReplayFailed { index: usize, reason: String },
}
