//! Search for rings whose two complementary corners are Zhou right reduced at
//! some nonzero idempotent while the ring itself is not, at any nonzero idempotent.

use rayon::prelude::*;
use zhou_core::constructors::corner;
use zhou_core::predicates::{check, Params, PredicateId, RingFacts};
use zhou_core::{Elem, FiniteRing, Limits, Result};

use crate::catalog::{Catalog, Tier};
use crate::report::{Instance, Scope, TheoremReport, Verdict};

/// Nonzero idempotents `e` of `r` with `N(r)e ⊆ δ(r)`, stopping at the first when `first_only`.
fn zhou_right_idempotents(r: &FiniteRing, limits: &Limits, first_only: bool) -> Result<Vec<Elem>> {
    let facts = RingFacts::new(r, limits);
    let mut out = Vec::new();
    for e in r.nonzero_idempotents() {
        if check(PredicateId::ZhouRightEReduced, &facts, Params::with_e(e))?.verdict {
            out.push(e);
            if first_only {
                break;
            }
        }
    }
    Ok(out)
}

/// Outcome for one ring: the idempotent `f` whose corners satisfy the hypothesis,
/// with the corner idempotents found, when `r` fails the conclusion.
fn pasting_failure(r: &FiniteRing, limits: &Limits) -> Result<Option<(Elem, Elem, Elem)>> {
    let Some(one) = r.one() else { return Ok(None) };
    if !zhou_right_idempotents(r, limits, true)?.is_empty() {
        return Ok(None);
    }
    for f in r.nonzero_idempotents().into_iter().filter(|&f| f != one) {
        let g = r.sub(one, f);
        let (cf, cg) = (corner(r, f)?, corner(r, g)?);
        let ef = zhou_right_idempotents(&cf.ring, limits, true)?;
        let eg = zhou_right_idempotents(&cg.ring, limits, true)?;
        if let (Some(&e1), Some(&e2)) = (ef.first(), eg.first()) {
            return Ok(Some((f, cf.embed(e1), cg.embed(e2))));
        }
    }
    Ok(None)
}

/// Runs the search over the catalog tier plus any extra rings.
pub fn pasting_search(cat: &Catalog, tier: Tier, extra: &[(String, FiniteRing)]) -> TheoremReport {
    let mut rings: Vec<(String, &FiniteRing)> = cat.tier(tier).map(|e| (e.name.clone(), &e.ring)).collect();
    rings.extend(extra.iter().map(|(n, r)| (n.clone(), r)));
    let rows: Vec<Option<Instance>> = rings
        .par_iter()
        .map(|(name, r)| match pasting_failure(r, &cat.limits) {
            Ok(Some((f, e1, e2))) => Some(
                Instance::new(
                    name,
                    Verdict::Counterexample,
                    "both corners are Zhou right reduced at a nonzero idempotent, the ring at none",
                )
                .witness(vec![
                    ("f".into(), r.label(f).into()),
                    ("e1".into(), r.label(e1).into()),
                    ("e2".into(), r.label(e2).into()),
                ]),
            ),
            Ok(None) => None,
            Err(err) => Some(Instance::new(name, Verdict::Refused, err.to_string())),
        })
        .collect();
    let searched = rings.len();
    let mut rep = TheoremReport::new(
        "search.pasting",
        "if fRf and (1-f)R(1-f) are Zhou right reduced at nonzero idempotents, R is Zhou right e-reduced for some nonzero e",
        Scope::Universal,
    );
    rep.instances.extend(rows.into_iter().flatten());
    rep.vacuous = searched - rep.instances.len();
    rep.finish()
}
