//! Finite rings as explicit operation tables, with the standard constructions,
//! the Zhou radical `δ(R)`, related radicals and a family of ring-class predicates.

pub mod constructors;
pub mod element;
pub mod error;
pub mod expr;
pub mod predicates;
pub mod radicals;
pub mod registry;
pub mod ring;
pub mod skewpoly;
pub mod subset;
pub mod tablefile;

pub use element::{Elem, Form};
pub use error::{Axiom, Error, Result};
pub use expr::{parse_ring_expr, RingExpr};
pub use predicates::{check_predicate, Params, PredicateId, PredicateReport, RingFacts, Witness};
pub use registry::{AlgebraSpec, Registry};
pub use ring::{FiniteRing, Limits, NonunitalFiniteRing};
pub use subset::{ElementSubset, LeftIdeal, RightIdeal, TwoSidedIdeal};
pub use tablefile::{CayleyTable, RingTable};
