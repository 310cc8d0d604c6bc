use std::fmt;

use crate::element::Elem;

/// The ring law that a table failed to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    AdditiveIdentity,
    AdditiveCommutativity,
    AdditiveAssociativity,
    AdditiveInverse,
    LeftDistributivity,
    RightDistributivity,
    MultiplicativeAssociativity,
    Identity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::AdditiveIdentity => "additive identity",
            Axiom::AdditiveCommutativity => "additive commutativity",
            Axiom::AdditiveAssociativity => "additive associativity",
            Axiom::AdditiveInverse => "additive inverse",
            Axiom::LeftDistributivity => "left distributivity",
            Axiom::RightDistributivity => "right distributivity",
            Axiom::MultiplicativeAssociativity => "multiplicative associativity",
            Axiom::Identity => "identity",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("axiom violation ({axiom}) witnessed by {witness:?}")]
    AxiomViolation { axiom: Axiom, witness: Vec<Elem> },
    #[error("malformed table: {0}")]
    Shape(String),
    #[error("ring order {order} exceeds the configured cap {cap}")]
    CapExceeded { order: u128, cap: usize },
    #[error("right-ideal lattice exceeded {cap} ideals")]
    LatticeExplosion { cap: usize },
    #[error("operation requires a ring with identity")]
    NotUnital,
    #[error("element {0} is not idempotent")]
    NotIdempotent(String),
    #[error("element {0} is not central")]
    NotCentral(String),
    #[error("element {0} is not a central unit")]
    NotCentralUnit(String),
    #[error("subset is not a two-sided ideal")]
    NotTwoSided,
    #[error("characteristic {char} does not divide {m}")]
    CharMismatch { char: u64, m: u64 },
    #[error("Cayley table is not associative at {0:?}")]
    NonAssociativeTable([usize; 3]),
    #[error("Cayley table is not a group: {0}")]
    NotAGroup(String),
    #[error("bimodule actions are incompatible: {law} fails at {witness}")]
    ActionIncompatibility { law: String, witness: String },
    #[error("rings do not match: {0}")]
    Mismatch(String),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("predicate `{0}` needs an idempotent parameter")]
    MissingParameter(String),
    #[error("evaluation bound {bound} exceeds budget {budget}")]
    ComplexityRefusal { bound: u128, budget: u128 },
    #[error("no element matches literal `{0}`")]
    UnknownElement(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Semantic(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
