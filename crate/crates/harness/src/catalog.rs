//! The default catalog of concrete rings, grouped into size tiers.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use zhou_core::expr::{Gens, RingExpr};
use zhou_core::{radicals, Error, FiniteRing, Limits, Registry, Result};

/// Size tiers by ring order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    /// order ≤ 32
    Small,
    /// order ≤ 256
    Medium,
    /// order ≤ 1024
    Large,
    /// up to the order cap
    Huge,
}

impl Tier {
    pub const ALL: [Tier; 4] = [Tier::Small, Tier::Medium, Tier::Large, Tier::Huge];

    pub fn of(order: usize) -> Tier {
        match order {
            0..=32 => Tier::Small,
            33..=256 => Tier::Medium,
            257..=1024 => Tier::Large,
            _ => Tier::Huge,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Tier::Small => "small",
            Tier::Medium => "medium",
            Tier::Large => "large",
            Tier::Huge => "huge",
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Tier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tier> {
        Tier::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Semantic(format!("unknown tier `{s}` (small, medium, large, huge)")))
    }
}

/// Base expressions with the tier their order falls in.
pub const BASE_EXPRESSIONS: &[(&str, Tier)] = &[
    ("Z2", Tier::Small),
    ("Z3", Tier::Small),
    ("Z4", Tier::Small),
    ("Z5", Tier::Small),
    ("Z6", Tier::Small),
    ("Z8", Tier::Small),
    ("Z12", Tier::Small),
    ("Z16", Tier::Small),
    ("GF7", Tier::Small),
    ("prod(Z2,Z2)", Tier::Small),
    ("prod(Z2,Z4)", Tier::Small),
    ("U(2,Z2)", Tier::Small),
    ("U(2,Z3)", Tier::Small),
    ("D(3,Z2)", Tier::Small),
    ("V(3,Z2)", Tier::Small),
    ("M(2,Z2)", Tier::Small),
    ("freealg16", Tier::Small),
    ("dorroh(Z2,sgT)", Tier::Small),
    ("dorroh(Z2,matT)", Tier::Small),
    ("dorroh(Z4,ideal{2})", Tier::Small),
    ("grpring(Z3,C2)", Tier::Small),
    ("grpring(Z2,C3)", Tier::Small),
    ("grpring(Z2,C2)", Tier::Small),
    ("grpring(Z5,C2)", Tier::Small),
    ("H3(2,Z2)", Tier::Small),
    ("Hst(1,1,Z2)", Tier::Small),
    ("Hst(1,1,Z3)", Tier::Small),
    ("K(0,Z2)", Tier::Small),
    ("S(Z2)", Tier::Small),
    ("S(Z4)", Tier::Small),
    ("S(Z8)", Tier::Small),
    ("S(U(2,Z2))", Tier::Small),
    ("U(3,Z2)", Tier::Medium),
    ("U(2,Z4)", Tier::Medium),
    ("D(3,Z3)", Tier::Medium),
    ("M(2,Z3)", Tier::Medium),
    ("M(2,Z4)", Tier::Medium),
    ("H3(4,Z2)", Tier::Medium),
    ("H3(3,Z3)", Tier::Medium),
    ("Hst(1,1,Z4)", Tier::Medium),
    ("Hst(1,3,Z4)", Tier::Medium),
    ("K(0,Z3)", Tier::Medium),
    ("K(0,Z4)", Tier::Medium),
    ("S(Z16)", Tier::Medium),
    ("H3(4,Z4)", Tier::Large),
    ("Hst(1,1,U(2,Z2))", Tier::Large),
    ("K(0,Z7)", Tier::Huge),
    ("U(2,freealg16)", Tier::Huge),
];

/// Corners and quotients are derived from base rings up to this order.
const DERIVE_FROM_ORDER: usize = 256;
/// Corners taken per base ring (first nonzero proper idempotents in element order).
const CORNERS_PER_RING: usize = 2;

#[derive(Debug, Clone)]
pub struct Entry {
    pub name: String,
    pub expr: RingExpr,
    pub ring: FiniteRing,
    pub tier: Tier,
    /// Built from another entry as a corner or quotient.
    pub derived: bool,
}

/// Named rings in a fixed order.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub entries: Vec<Entry>,
    pub limits: Limits,
}

impl Catalog {
    /// The default catalog restricted to tiers up to `max`.
    pub fn build(max: Tier, limits: &Limits) -> Result<Catalog> {
        let registry = Registry::with_builtins(limits)?;
        let base: Vec<Entry> = BASE_EXPRESSIONS
            .par_iter()
            .filter(|(_, t)| *t <= max)
            .map(|(text, _)| entry(&registry, &zhou_core::parse_ring_expr(text)?, false, limits))
            .collect::<Result<_>>()?;
        let derived: Vec<Vec<RingExpr>> = base
            .par_iter()
            .filter(|e| e.ring.order() <= DERIVE_FROM_ORDER)
            .map(|e| derived_expressions(e, limits))
            .collect::<Result<_>>()?;
        let mut seen: std::collections::HashSet<String> = base.iter().map(|e| e.name.clone()).collect();
        let extra: Vec<RingExpr> = derived.into_iter().flatten().filter(|x| seen.insert(x.to_string())).collect();
        let extra: Vec<Entry> =
            extra.par_iter().map(|x| entry(&registry, x, true, limits)).collect::<Result<Vec<_>>>()?;
        let mut entries = base;
        entries.extend(extra.into_iter().filter(|e| e.tier <= max));
        Ok(Catalog { entries, limits: *limits })
    }

    pub fn tier(&self, max: Tier) -> impl Iterator<Item = &Entry> + '_ {
        self.entries.iter().filter(move |e| e.tier <= max)
    }

    pub fn get(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Looks `name` up, or evaluates it when it is not a catalog entry.
    pub fn ring(&self, name: &str) -> Result<FiniteRing> {
        match self.get(name) {
            Some(e) => Ok(e.ring.clone()),
            None => Registry::with_builtins(&self.limits)?.eval_str(name, &self.limits),
        }
    }
}

fn entry(registry: &Registry, expr: &RingExpr, derived: bool, limits: &Limits) -> Result<Entry> {
    let ring = registry.eval(expr, limits)?;
    Ok(Entry { name: expr.to_string(), expr: expr.clone(), tier: Tier::of(ring.order()), ring, derived })
}

fn derived_expressions(e: &Entry, limits: &Limits) -> Result<Vec<RingExpr>> {
    let r = &e.ring;
    let mut out = Vec::new();
    let one = r.one();
    for x in r.nonzero_idempotents().into_iter().filter(|&x| Some(x) != one).take(CORNERS_PER_RING) {
        out.push(RingExpr::Corner(Box::new(e.expr.clone()), r.form(x).clone()));
    }
    let j = radicals::jacobson(r, limits)?;
    if !j.as_subset().is_empty() && j.as_subset().len() > 1 && !j.as_subset().is_full() {
        out.push(RingExpr::Quot(Box::new(e.expr.clone()), Gens::Jacobson));
    }
    let d = radicals::delta(r, limits)?;
    if d.as_subset().len() > 1 && !d.as_subset().is_full() && d.as_subset() != j.as_subset() {
        out.push(RingExpr::Quot(Box::new(e.expr.clone()), Gens::Delta));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn declared_tiers_match_orders() {
        let l = Limits::DEFAULT;
        let c = Catalog::build(Tier::Large, &l).unwrap();
        for (text, tier) in BASE_EXPRESSIONS.iter().filter(|(_, t)| *t <= Tier::Large) {
            let e = c.get(&zhou_core::parse_ring_expr(text).unwrap().to_string()).unwrap();
            assert_eq!(e.tier, *tier, "{text}");
        }
        assert!(c.entries.iter().any(|e| e.derived && matches!(e.expr, RingExpr::Corner(..))));
        assert!(c.entries.iter().any(|e| e.derived && matches!(e.expr, RingExpr::Quot(..))));
    }

    #[test]
    fn derived_names_reparse() {
        let l = Limits::DEFAULT;
        let c = Catalog::build(Tier::Small, &l).unwrap();
        let reg = Registry::with_builtins(&l).unwrap();
        for e in c.entries.iter().filter(|e| e.derived) {
            assert_eq!(reg.eval_str(&e.name, &l).unwrap().order(), e.ring.order(), "{}", e.name);
        }
    }

    #[test]
    fn catalog_contents() {
        let cat = Catalog::build(Tier::Medium, &Limits::DEFAULT).unwrap();
        for name in ["Z16", "U(2,Z2)", "U(3,Z2)", "M(2,Z4)", "freealg16", "dorroh(Z2,sgT)", "grpring(Z3,C2)", "K(0,Z4)", "S(Z4)", "S(U(2,Z2))"] {
            assert!(cat.get(name).is_some(), "{name}");
        }
        assert!(cat.entries.iter().any(|e| e.derived));
        assert!(cat.entries.iter().all(|e| e.tier <= Tier::Medium && Tier::of(e.ring.order()) == e.tier));
    }
}
