//! Verification harness for Zhou δ-radical statements over finite rings.
//!
//! A [`catalog::Catalog`] enumerates small rings by tier. On top of it sit
//! implication checks, the characterization lemmas for matrix subrings, the
//! pasting search and the full regression suite.

pub mod catalog;
pub mod characterization;
pub mod implication;
pub mod regression;
pub mod report;
pub mod search;

pub use catalog::{Catalog, Tier};
pub use regression::{entry_ids, is_whitelisted, paper_regression, regression_entry, DIVERGENCE_WHITELIST};
pub use report::{Instance, Scope, TheoremReport, Verdict};
