//! Catalog-wide implication checks between predicates.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use zhou_core::predicates::{check, Params, PredicateId, PredicateReport, RingFacts};
use zhou_core::{Elem, Error, FiniteRing, Result};

use crate::catalog::{Catalog, Tier};
use crate::report::{Instance, Scope, TheoremReport, Verdict};

/// Which idempotent a predicate is evaluated at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EMode {
    /// The predicate takes no idempotent.
    Without,
    /// The identity (the `1-reduced` specializations).
    One,
    /// Every nonzero idempotent, shared by both sides of an implication.
    Each,
}

/// A predicate together with the idempotent it is evaluated at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cond {
    pub id: PredicateId,
    pub e: EMode,
}

impl Cond {
    pub fn new(id: PredicateId) -> Cond {
        Cond { id, e: if id.needs_e() { EMode::Each } else { EMode::Without } }
    }

    pub fn at_one(id: PredicateId) -> Cond {
        Cond { id, e: EMode::One }
    }

    fn params(self, r: &FiniteRing, e: Option<Elem>) -> Params {
        match self.e {
            EMode::Without => Params::default(),
            EMode::One => Params { e: r.one(), allow_trivial_e: true },
            EMode::Each => Params { e, allow_trivial_e: false },
        }
    }
}

impl fmt::Display for Cond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.e {
            EMode::One => write!(f, "{}@1", self.id),
            _ => write!(f, "{}", self.id),
        }
    }
}

/// `name` or `name@1`.
impl FromStr for Cond {
    type Err = Error;

    fn from_str(s: &str) -> Result<Cond> {
        match s.strip_suffix("@1") {
            Some(name) => {
                let id = PredicateId::from_name(name)?;
                if !id.needs_e() {
                    return Err(Error::Semantic(format!("`{name}` takes no idempotent")));
                }
                Ok(Cond::at_one(id))
            }
            None => Ok(Cond::new(PredicateId::from_name(s)?)),
        }
    }
}

/// An implication as stated, with the verdict expected over the catalog.
#[derive(Debug, Clone, Copy)]
pub struct Implication {
    pub id: &'static str,
    pub premise: Cond,
    pub conclusion: Cond,
}

use PredicateId as P;

/// Sources of Zhou e-reduced rings, in the order they are usually listed.
pub fn sources() -> Vec<Implication> {
    let each = Cond::new;
    vec![
        Implication { id: "sources.1", premise: each(P::CentralSemicommutative), conclusion: each(P::ZhouEReduced) },
        Implication {
            id: "sources.2",
            premise: each(P::ESemicommutativeRight),
            conclusion: each(P::ZhouRightEReduced),
        },
        Implication {
            id: "sources.3",
            premise: Cond::at_one(P::ZhouRightEReduced),
            conclusion: each(P::ZhouRightEReduced),
        },
        Implication { id: "sources.4", premise: each(P::Semisimple), conclusion: each(P::ZhouEReduced) },
        Implication { id: "sources.5", premise: each(P::WeaklySymmetric), conclusion: each(P::ZhouEReduced) },
        Implication { id: "sources.6", premise: each(P::WeakSymmetric), conclusion: each(P::ZhouEReduced) },
        Implication { id: "sources.7", premise: each(P::JReduced), conclusion: each(P::ZhouEReduced) },
    ]
}

/// Right quasi-duo rings are Zhou right 1-reduced.
pub fn quasi_duo_theorem() -> Implication {
    Implication {
        id: "quasi_duo.theorem",
        premise: Cond::new(P::RightQuasiDuo),
        conclusion: Cond::at_one(P::ZhouRightEReduced),
    }
}

/// Implications that fail, with the ring expected to refute them.
pub fn reverse_searches() -> Vec<(Implication, &'static str)> {
    vec![
        (
            Implication {
                id: "quasi_duo.converse",
                premise: Cond::new(P::ZhouRightEReduced),
                conclusion: Cond::new(P::RightQuasiDuo),
            },
            "M(2,Z2)",
        ),
        (
            Implication {
                id: "semicommutative.converse",
                premise: Cond::new(P::ZhouEReduced),
                conclusion: Cond::new(P::Semicommutative),
            },
            "U(2,Z2)",
        ),
    ]
}

fn statement(p: Cond, q: Cond) -> String {
    format!("{p} implies {q}")
}

/// Checks `p ⇒ q` on every ring of the tier (and every nonzero idempotent when
/// either side depends on one). Budget refusals are recorded per ring.
pub fn check_implication(cat: &Catalog, tier: Tier, id: &str, p: Cond, q: Cond) -> TheoremReport {
    let rings: Vec<_> = cat.tier(tier).collect();
    let rows: Vec<(Vec<Instance>, usize)> =
        rings.par_iter().map(|entry| ring_instances(&entry.name, &entry.ring, cat, p, q)).collect();
    let mut rep = TheoremReport::new(id, statement(p, q), Scope::Universal);
    for (instances, vacuous) in rows {
        rep.instances.extend(instances);
        rep.vacuous += vacuous;
    }
    rep.finish()
}

fn ring_instances(name: &str, r: &FiniteRing, cat: &Catalog, p: Cond, q: Cond) -> (Vec<Instance>, usize) {
    let facts = RingFacts::new(r, &cat.limits);
    let es: Vec<Option<Elem>> = if p.e == EMode::Each || q.e == EMode::Each {
        r.nonzero_idempotents().into_iter().map(Some).collect()
    } else {
        vec![None]
    };
    let mut out = Vec::new();
    let mut vacuous = 0;
    for e in es {
        let with_e = |i: Instance| match e {
            Some(e) => i.param("e", r.label(e)),
            None => i,
        };
        let premise = match check(p.id, &facts, p.params(r, e)) {
            Ok(rep) => rep,
            Err(err) => {
                out.push(with_e(refusal(name, &err)));
                continue;
            }
        };
        if !premise.verdict {
            vacuous += 1;
            continue;
        }
        match check(q.id, &facts, q.params(r, e)) {
            Ok(rep) if rep.verdict => out.push(with_e(Instance::new(name, Verdict::Confirmed, ""))),
            Ok(rep) => out.push(with_e(
                Instance::new(name, Verdict::Counterexample, format!("{} holds, {} fails", p, q))
                    .witness(witness_pairs(r, &rep)),
            )),
            Err(err) => out.push(with_e(refusal(name, &err))),
        }
    }
    (out, vacuous)
}

fn refusal(name: &str, err: &Error) -> Instance {
    let v = match err {
        Error::ComplexityRefusal { .. } | Error::CapExceeded { .. } | Error::LatticeExplosion { .. } => {
            Verdict::Refused
        }
        _ => Verdict::Divergence,
    };
    Instance::new(name, v, err.to_string())
}

pub fn witness_pairs(r: &FiniteRing, rep: &PredicateReport) -> Vec<(String, String)> {
    let Some(w) = &rep.witness else { return Vec::new() };
    w.vars
        .iter()
        .chain(&w.derived)
        .map(|(k, v)| (k.clone(), r.label(*v).to_string()))
        .collect()
}

/// Runs an implication that is expected to fail and confirms that `expected`
/// is among the refuting rings.
pub fn reverse_search(cat: &Catalog, tier: Tier, imp: &Implication, expected: &str) -> TheoremReport {
    let found = check_implication(cat, tier, imp.id, imp.premise, imp.conclusion);
    let hits: Vec<&Instance> = found.instances.iter().filter(|i| i.verdict == Verdict::Counterexample).collect();
    let expected_name = zhou_core::parse_ring_expr(expected).map(|e| e.to_string()).unwrap_or_default();
    let mut rep =
        TheoremReport::new(imp.id, format!("{} does not imply {}", imp.premise, imp.conclusion), Scope::Existential);
    let mut seen = std::collections::BTreeSet::new();
    for h in &hits {
        if seen.insert(h.ring.clone()) {
            let mut i = (*h).clone();
            i.verdict = Verdict::Confirmed;
            rep.push(i);
        }
    }
    if !seen.contains(&expected_name) {
        rep.push(Instance::new(expected_name, Verdict::Counterexample, "expected refuting ring not found"));
        rep.instances.retain(|i| i.verdict == Verdict::Counterexample);
    }
    rep.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use zhou_core::Limits;

    const L: Limits = Limits::DEFAULT;

    #[test]
    fn conditions_and_tiers() {
        let c: Cond = "zhou_right_e_reduced@1".parse().unwrap();
        assert_eq!(c.e, EMode::One);
        assert_eq!(c.to_string(), "zhou_right_e_reduced@1");
        assert_eq!("semicommutative".parse::<Cond>().unwrap().e, EMode::Without);
        assert_eq!("e_reduced_right".parse::<Cond>().unwrap().e, EMode::Each);
        assert!("reduced@1".parse::<Cond>().is_err());
        assert!("bogus".parse::<Cond>().is_err());
        for t in Tier::ALL {
            assert_eq!(t.name().parse::<Tier>().unwrap(), t);
        }
        assert_eq!(Tier::of(32), Tier::Small);
        assert_eq!(Tier::of(33), Tier::Medium);
        assert_eq!(Tier::of(2000), Tier::Huge);
    }

    #[test]
    fn implication_verdicts() {
        let cat = Catalog::build(Tier::Small, &L).unwrap();
        let p = |s: &str| s.parse::<Cond>().unwrap();
        let ok = check_implication(&cat, Tier::Small, "x", p("reduced"), p("symmetric"));
        assert_eq!(ok.verdict, Verdict::Confirmed);
        let bad = check_implication(&cat, Tier::Small, "y", p("abelian"), p("reduced"));
        assert_eq!(bad.verdict, Verdict::Counterexample);
        assert!(bad.instances.iter().any(|i| i.verdict == Verdict::Counterexample && i.ring == "Z4"));
    }
}
