use thiserror::Error;

use crate::algebra::AxiomViolation;
use crate::groupoid::GroupoidViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group axiom violated: {0}")]
    GroupAxiom(#[from] AxiomViolation),

    #[error("groupoid axiom violated: {0}")]
    GroupoidAxiom(#[from] GroupoidViolation),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("not a group action: {0}")]
    NotAnAction(String),

    #[error("point {0} is not in the carrier")]
    PointNotInCarrier(usize),

    #[error("object {0} is not in the base")]
    PointNotInBase(usize),

    #[error("groupoids live over different bases")]
    BaseMismatch,

    #[error("not a groupoid morphism over the identity: {0}")]
    NotAMorphism(String),

    #[error("not a bisection: {0}")]
    NotABisection(String),

    #[error("bisections belong to different groupoids")]
    MixedGroupoids,

    #[error("search cap exceeded: {explored} states explored, cap {cap}")]
    CapExceeded { explored: usize, cap: usize },

    #[error("not a congruence: {0}")]
    NotACongruence(String),

    #[error("not a morphism in the slice over Sym(M): {0}")]
    NotSliceMorphism(String),

    #[error("internal law violation: {0}")]
    InternalLawViolation(String),

    #[error("(P1) violated: point {0} is not reached from the basepoint")]
    P1Violated(String),

    #[error("(P2) violated: {0}")]
    P2Violated(String),

    #[error("pair morphism condition `{which}` violated: {witness}")]
    ConditionViolated { which: String, witness: String },

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("law `{law}` violated: {witness}")]
    LawViolation { law: String, witness: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid instance: {0}")]
    Validation(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}
