//! Zhou e-reduced rings: definition, sources, quasi-duo rings, subrings and corners.

use rayon::prelude::*;
use zhou_core::constructors::{corner, direct_product, pair_subring_s, quotient};
use zhou_core::predicates::{PredicateId as P, RingFacts};
use zhou_core::{Elem, ElementSubset, Form, FiniteRing, Result};

use super::{delta, entry_set, holds, proper_two_sided, show, zhou, Ctx};
use crate::catalog::Tier;
use crate::implication::{check_implication, quasi_duo_theorem, reverse_search, reverse_searches, sources as source_list};
use crate::report::{Instance, Scope, TheoremReport, Verdict};

fn refused(name: &str, e: zhou_core::Error) -> Vec<Instance> {
    vec![Instance::new(name, Verdict::Refused, e.to_string())]
}

/// Runs `f` on every ring of the tier in parallel, flattening the instances.
fn per_ring(
    ctx: &Ctx<'_>,
    tier: Tier,
    max_order: usize,
    f: impl Fn(&str, &FiniteRing) -> Result<Vec<Instance>> + Sync,
) -> Vec<Instance> {
    let rings: Vec<_> = ctx.rings(tier).into_iter().filter(|(_, r)| r.order() <= max_order).collect();
    let rows: Vec<Vec<Instance>> =
        rings.par_iter().map(|&(name, r)| f(name, r).unwrap_or_else(|e| refused(name, e))).collect();
    rows.into_iter().flatten().collect()
}

pub fn trivial_idempotents(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let rows = per_ring(ctx, Tier::Medium, usize::MAX, |name, r| {
        let facts = RingFacts::new(r, &ctx.limits);
        let zero = r.zero();
        let z = zhou(P::ZhouRightEReduced, &facts, zero)? && zhou(P::ZhouLeftEReduced, &facts, zero)?;
        let one = r.unit()?;
        let nd = facts.nilpotents().is_subset(facts.delta()?);
        let right = zhou(P::ZhouRightEReduced, &facts, one)?;
        let left = zhou(P::ZhouLeftEReduced, &facts, one)?;
        Ok(vec![
            Instance::check(name, z, Verdict::Counterexample, "Zhou right and left 0-reduced"),
            Instance::check(name, right == nd && left == nd, Verdict::Counterexample, format!("N ⊆ δ is {nd}"))
                .param("e", "1"),
        ])
    });
    Ok(vec![TheoremReport::new(
        "definition.trivial_idempotents",
        "every ring is Zhou 0-reduced, and Zhou right 1-reduced iff Zhou left 1-reduced iff N(R) ⊆ δ(R)",
        Scope::Universal,
    )
    .with(rows)])
}

pub fn sources(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    Ok(source_list()
        .par_iter()
        .map(|imp| check_implication(ctx.cat, Tier::Small, imp.id, imp.premise, imp.conclusion))
        .collect())
}

pub fn quasi_duo(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let imp = quasi_duo_theorem();
    Ok(vec![check_implication(ctx.cat, Tier::Small, imp.id, imp.premise, imp.conclusion)])
}

pub fn reverse(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    Ok(reverse_searches().iter().map(|(imp, expected)| reverse_search(ctx.cat, Tier::Small, imp, expected)).collect())
}

fn is_reduced(r: &FiniteRing) -> bool {
    r.nilpotent_elements().len() == 1
}

fn is_quasi_duo(facts: &RingFacts<'_>) -> Result<bool> {
    Ok(holds(P::RightQuasiDuo, facts)? && holds(P::LeftQuasiDuo, facts)?)
}

pub fn reduced_quotient(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let mut rep = TheoremReport::new(
        "quasi_duo.reduced_quotient",
        "for a quasi-duo ring R, R/δ(R) is reduced; in particular R is reduced when δ(R) = 0",
        Scope::Universal,
    );
    let rows: Vec<Option<Instance>> = ctx
        .rings(Tier::Small)
        .par_iter()
        .map(|&(name, r)| {
            let run = || -> Result<Option<Instance>> {
                let facts = RingFacts::new(r, &ctx.limits);
                if !is_quasi_duo(&facts)? {
                    return Ok(None);
                }
                let d = facts.delta()?.clone();
                let q = quotient(r, &r.as_two_sided(&d)?)?;
                let ok = is_reduced(&q.ring) && (d.len() > 1 || is_reduced(r));
                Ok(Some(Instance::check(name, ok, Verdict::Counterexample, format!("|R/δ(R)| = {}", q.ring.order()))))
            };
            run().unwrap_or_else(|e| Some(Instance::new(name, Verdict::Refused, e.to_string())))
        })
        .collect();
    let total = rows.len();
    rep.instances.extend(rows.into_iter().flatten());
    rep.vacuous = total - rep.instances.len();
    Ok(vec![rep.finish()])
}

fn is_simple(r: &FiniteRing, ctx: &Ctx<'_>) -> Result<bool> {
    Ok(r.order() > 1 && proper_two_sided(r, &ctx.limits)?.is_empty())
}

pub fn simple_division(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let mut rep = TheoremReport::new("quasi_duo.simple_division", "a simple quasi-duo ring is a division ring", Scope::Universal);
    let rows: Vec<Option<Instance>> = ctx
        .rings(Tier::Medium)
        .par_iter()
        .map(|&(name, r)| {
            let run = || -> Result<Option<Instance>> {
                if !is_simple(r, ctx)? {
                    return Ok(None);
                }
                let facts = RingFacts::new(r, &ctx.limits);
                let qd = is_quasi_duo(&facts)?;
                let division = r.units()?.len() + 1 == r.order();
                let detail = format!("simple, quasi-duo {qd}, division {division}");
                Ok(Some(Instance::check(name, !qd || division, Verdict::Counterexample, detail)))
            };
            run().unwrap_or_else(|e| Some(Instance::new(name, Verdict::Refused, e.to_string())))
        })
        .collect();
    let total = rows.len();
    rep.instances.extend(rows.into_iter().flatten());
    rep.vacuous = total - rep.instances.len();
    Ok(vec![rep.finish()])
}

pub fn matrix_fields(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let mut rows = Vec::new();
    for name in ["M(2,Z2)", "M(2,Z3)"] {
        let r = ctx.ring(name)?;
        let facts = RingFacts::new(&r, &ctx.limits);
        let es = r.nonzero_idempotents();
        let mut zhou_all = true;
        let mut not_semicomm = None;
        for &e in &es {
            zhou_all &= zhou(P::ZhouRightEReduced, &facts, e)?;
            let semi = zhou(P::ESemicommutativeRight, &facts, e)? && zhou(P::ESemicommutativeLeft, &facts, e)?;
            if !semi && not_semicomm.is_none() {
                not_semicomm = Some(e);
            }
        }
        let central = holds(P::CentralSemicommutative, &facts)?;
        let qd = holds(P::RightQuasiDuo, &facts)? && holds(P::LeftQuasiDuo, &facts)?;
        rows.push(Instance::check(name, zhou_all, Verdict::Counterexample, "Zhou right e-reduced for every e"));
        rows.push(Instance::check(name, !central, Verdict::Counterexample, "not central semicommutative"));
        let mut i = Instance::check(name, not_semicomm.is_some(), Verdict::Counterexample, "not e-semicommutative for some e");
        if let Some(e) = not_semicomm {
            i = i.param("e", r.label(e));
        }
        rows.push(i);
        rows.push(Instance::check(name, !qd, Verdict::Counterexample, "not quasi-duo"));
    }
    Ok(vec![TheoremReport::new(
        "examples.matrix_fields",
        "M_n(F) is Zhou right e-reduced for every e, but neither central semicommutative, e-semicommutative for all e, nor quasi-duo",
        Scope::Exact,
    )
    .with(rows)])
}

pub fn triangular_reduced(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let names = [
        "U(2,Z2)", "U(2,Z3)", "U(2,Z6)", "U(2,prod(Z2,Z2))", "U(3,Z2)", "U(3,Z3)", "D(2,Z2)", "D(3,Z2)", "D(3,Z3)",
        "D(3,Z6)", "V(3,Z2)", "V(3,Z3)", "V(3,Z6)", "V(4,Z2)",
    ];
    let rows: Vec<Vec<Instance>> = names
        .par_iter()
        .map(|&name| {
            let run = || -> Result<Vec<Instance>> {
                let r = ctx.ring(name)?;
                let facts = RingFacts::new(&r, &ctx.limits);
                let mut bad = None;
                for e in r.nonzero_idempotents() {
                    if !zhou(P::ZhouEReduced, &facts, e)? {
                        bad = Some(e);
                        break;
                    }
                }
                let nd = facts.nilpotents().is_subset(facts.delta()?);
                let mut i = Instance::check(name, bad.is_none() && nd, Verdict::Counterexample, "N ⊆ δ and Zhou e-reduced for every e");
                if let Some(e) = bad {
                    i = i.param("e", r.label(e));
                }
                Ok(vec![i])
            };
            run().unwrap_or_else(|e| refused(name, e))
        })
        .collect();
    Ok(vec![TheoremReport::new(
        "examples.triangular_reduced",
        "for reduced R, U_n(R), D_n(R) and V_n(R) satisfy N ⊆ δ and are Zhou e-reduced for every idempotent e",
        Scope::Universal,
    )
    .with(rows.into_iter().flatten())])
}

pub fn one_sided_ideals(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let mut rows = Vec::new();
    for base in ["Z2", "Z3"] {
        let name = format!("U(2,{base})");
        let u = ctx.ring(&name)?;
        let z = ctx.ring(base)?.zero();
        let d = delta(&u, &ctx.limits)?;
        let col = entry_set(&u, 2, |_, j, v| j == 1 || v == z);
        rows.push(super::compare(&name, &u, &col, &d, Verdict::Counterexample, "δ(U_2(F)) is the second column"));
        let same = |x: Elem, p: (usize, usize), q: (usize, usize)| u.entry(x, p.0, p.1) == u.entry(x, q.0, q.1);
        let i_set = ElementSubset::from_predicate(u.order(), |x| u.entry(x, 0, 0) == Some(z) && same(x, (0, 1), (1, 1)));
        let l_set = ElementSubset::from_predicate(u.order(), |x| u.entry(x, 1, 1) == Some(z) && same(x, (0, 0), (0, 1)));
        rows.push(Instance::check(
            &name,
            u.is_right_ideal(&i_set) && !u.is_left_ideal(&i_set),
            Verdict::Counterexample,
            "{[[0,a],[0,a]]} is a right ideal and not a left ideal",
        ));
        rows.push(Instance::check(
            &name,
            u.is_left_ideal(&l_set) && !u.is_right_ideal(&l_set),
            Verdict::Counterexample,
            "{[[a,a],[0,0]]} is a left ideal and not a right ideal",
        ));
        let facts = RingFacts::new(&u, &ctx.limits);
        let mut all = true;
        for e in u.nonzero_idempotents() {
            all &= zhou(P::ZhouEReduced, &facts, e)?;
        }
        rows.push(Instance::check(&name, all, Verdict::Counterexample, "Zhou e-reduced for every e"));
    }
    Ok(vec![TheoremReport::new(
        "examples.one_sided_ideals",
        "in U_2(F), δ is the second column, {[[0,a],[0,a]]} is only a right ideal, {[[a,a],[0,0]]} only a left ideal, and the ring is Zhou e-reduced",
        Scope::Exact,
    )
    .with(rows)])
}

/// The element `(x, x)` of `S(R)`.
fn diagonal_pair(s: &FiniteRing, r: &FiniteRing, x: Elem) -> Option<Elem> {
    s.elem_from_form(&Form::Tuple(vec![r.form(x).clone(), r.form(x).clone()]))
}

const PAIR_BASES: [&str; 9] =
    ["Z2", "Z4", "Z6", "Z8", "Z16", "U(2,Z2)", "U(2,Z3)", "D(3,Z2)", "dorroh(Z2,sgT)"];

pub fn pair_delta(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let rows: Vec<Vec<Instance>> = PAIR_BASES
        .par_iter()
        .map(|&base| {
            let run = || -> Result<Vec<Instance>> {
                let r = ctx.ring(base)?;
                let s = pair_subring_s(&r, &ctx.limits)?;
                let d = delta(&r, &ctx.limits)?;
                let claimed = ElementSubset::from_predicate(s.order(), |x| {
                    let c = s.coords_of(x).expect("pair coordinates");
                    d.contains(c[0]) && d.contains(c[1]) && d.contains(r.sub(c[0], c[1]))
                });
                let name = format!("S({base})");
                Ok(vec![super::compare(&name, &s, &claimed, &delta(&s, &ctx.limits)?, Verdict::Counterexample, "δ(S) formula")])
            };
            run().unwrap_or_else(|e| refused(base, e))
        })
        .collect();
    Ok(vec![TheoremReport::new(
        "pair_subring.delta",
        "for S = {(r,s) : r − s ∈ δ(R)}, δ(S) = {(r,s) ∈ δ(R) × δ(R) : r − s ∈ δ(R)}",
        Scope::Universal,
    )
    .with(rows.into_iter().flatten())])
}

pub fn pair_theorem(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let rows: Vec<Vec<Instance>> = PAIR_BASES
        .par_iter()
        .map(|&base| {
            let run = || -> Result<Vec<Instance>> {
                let r = ctx.ring(base)?;
                let s = pair_subring_s(&r, &ctx.limits)?;
                let (fr, fs) = (RingFacts::new(&r, &ctx.limits), RingFacts::new(&s, &ctx.limits));
                let name = format!("S({base})");
                let mut out = Vec::new();
                for e in r.nonzero_idempotents() {
                    let ee = diagonal_pair(&s, &r, e).expect("(e,e) lies in S");
                    let a = zhou(P::ZhouRightEReduced, &fr, e)?;
                    let b = zhou(P::ZhouRightEReduced, &fs, ee)?;
                    out.push(
                        Instance::check(&name, a == b, Verdict::Counterexample, format!("R: {a}, S: {b}"))
                            .param("e", r.label(e)),
                    );
                }
                Ok(out)
            };
            run().unwrap_or_else(|e| refused(base, e))
        })
        .collect();
    Ok(vec![TheoremReport::new(
        "pair_subring.theorem",
        "R is Zhou right e-reduced iff S = {(r,s) : r − s ∈ δ(R)} is Zhou right (e,e)-reduced",
        Scope::Universal,
    )
    .with(rows.into_iter().flatten())])
}

pub fn product_theorem(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let names = ["Z2", "Z4", "Z6", "U(2,Z2)", "D(3,Z2)", "dorroh(Z2,sgT)", "M(2,Z2)", "freealg16"];
    let mut pairs = Vec::new();
    for (i, a) in names.iter().enumerate() {
        for b in &names[i..] {
            pairs.push((*a, *b));
        }
    }
    let rows: Vec<Vec<Instance>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let name = format!("prod({a},{b})");
            let run = || -> Result<Vec<Instance>> {
                let (r1, r2) = (ctx.ring(a)?, ctx.ring(b)?);
                let p = direct_product(&[&r1, &r2], &ctx.limits)?;
                let (f1, f2, fp) =
                    (RingFacts::new(&r1, &ctx.limits), RingFacts::new(&r2, &ctx.limits), RingFacts::new(&p, &ctx.limits));
                let mut out = Vec::new();
                for e in p.idempotent_elements().iter() {
                    let c = p.coords_of(e).expect("product coordinates");
                    let parts = zhou(P::ZhouRightEReduced, &f1, c[0])? && zhou(P::ZhouRightEReduced, &f2, c[1])?;
                    let whole = zhou(P::ZhouRightEReduced, &fp, e)?;
                    out.push(
                        Instance::check(&name, parts == whole, Verdict::Counterexample, format!("components {parts}, product {whole}"))
                            .param("e", p.label(e)),
                    );
                }
                Ok(out)
            };
            run().unwrap_or_else(|e| refused(&name, e))
        })
        .collect();
    Ok(vec![TheoremReport::new(
        "product.theorem",
        "each R_i is Zhou right e_i-reduced iff the product is Zhou right (e_i)-reduced",
        Scope::Universal,
    )
    .with(rows.into_iter().flatten())])
}

pub fn nil_quotient(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let mut quot = TheoremReport::new(
        "nil_quotient",
        "if I is a nil ideal and R is Zhou right e-reduced then R/I is Zhou right (e+I)-reduced",
        Scope::Universal,
    );
    let mut sub = TheoremReport::new(
        "ideal_subring",
        "if e ∈ I is idempotent, δ(I) = I ∩ δ(R) and R is Zhou right e-reduced, then N(I)e ⊆ δ(I)",
        Scope::Universal,
    );
    let rows: Vec<(Vec<Instance>, Vec<Instance>, usize)> = ctx
        .rings(Tier::Small)
        .into_iter()
        .filter(|(_, r)| r.order() <= 64)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&(name, r)| {
            let run = || -> Result<(Vec<Instance>, Vec<Instance>, usize)> {
                let l = &ctx.limits;
                let facts = RingFacts::new(r, l);
                let nil = facts.nilpotents().clone();
                let d = facts.delta()?.clone();
                let good: Vec<Elem> = r
                    .nonzero_idempotents()
                    .into_iter()
                    .filter(|&e| zhou(P::ZhouRightEReduced, &facts, e).unwrap_or(false))
                    .collect();
                let (mut qs, mut ss, mut vacuous) = (Vec::new(), Vec::new(), 0);
                for i in proper_two_sided(r, l)? {
                    let s = i.as_subset();
                    if s.is_subset(&nil) {
                        let q = quotient(r, &i)?;
                        let qf = RingFacts::new(&q.ring, l);
                        for &e in &good {
                            let ok = zhou(P::ZhouRightEReduced, &qf, q.project(e))?;
                            qs.push(
                                Instance::check(name, ok, Verdict::Counterexample, "")
                                    .param("I", r.format_set(s))
                                    .param("e", r.label(e)),
                            );
                        }
                    }
                    let di = zhou_core::radicals::delta_of_right_ideal_as_module(r, s, l)?;
                    if di != s.intersect(&d) {
                        vacuous += 1;
                        continue;
                    }
                    for &e in good.iter().filter(|&&e| s.contains(e)) {
                        let ok = nil.intersect(s).iter().all(|a| di.contains(r.mul(a, e)));
                        ss.push(
                            Instance::check(name, ok, Verdict::Counterexample, "")
                                .param("I", r.format_set(s))
                                .param("e", r.label(e)),
                        );
                    }
                }
                Ok((qs, ss, vacuous))
            };
            run().unwrap_or_else(|e| (refused(name, e), Vec::new(), 0))
        })
        .collect();
    for (q, s, v) in rows {
        quot.instances.extend(q);
        sub.instances.extend(s);
        sub.vacuous += v;
    }
    Ok(vec![quot.finish(), sub.finish()])
}

pub fn corner_every(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let rows = per_ring(ctx, Tier::Medium, usize::MAX, |name, r| {
        let facts = RingFacts::new(r, &ctx.limits);
        let mut out = Vec::new();
        for e in r.nonzero_idempotents() {
            if !zhou(P::ZhouRightEReduced, &facts, e)? {
                continue;
            }
            let c = corner(r, e)?;
            let cf = RingFacts::new(&c.ring, &ctx.limits);
            let mut bad = None;
            for f in c.ring.idempotent_elements().iter() {
                if !zhou(P::ZhouRightEReduced, &cf, f)? {
                    bad = Some(c.embed(f));
                    break;
                }
            }
            let mut i = Instance::check(name, bad.is_none(), Verdict::Counterexample, "").param("e", r.label(e));
            if let Some(f) = bad {
                i = i.witness(vec![("f".into(), r.label(f).into())]);
            }
            out.push(i);
        }
        Ok(out)
    });
    Ok(vec![TheoremReport::new(
        "corner.every_idempotent",
        "if R is Zhou right e-reduced then eRe is Zhou right f-reduced for every idempotent f of eRe",
        Scope::Universal,
    )
    .with(rows)])
}

pub fn corner_inner(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let rows = per_ring(ctx, Tier::Medium, usize::MAX, |name, r| {
        let facts = RingFacts::new(r, &ctx.limits);
        let es = r.nonzero_idempotents();
        let mut out = Vec::new();
        for &e in &es {
            if !zhou(P::ZhouRightEReduced, &facts, e)? {
                continue;
            }
            for &f in es.iter().filter(|&&f| r.mul(f, e) == e && r.mul(e, f) == e) {
                let c = corner(r, f)?;
                let inner = c.pullback(&ElementSubset::from_elems(r.order(), [e])).first().expect("e ∈ fRf");
                let ok = zhou(P::ZhouRightEReduced, &RingFacts::new(&c.ring, &ctx.limits), inner)?;
                out.push(
                    Instance::check(name, ok, Verdict::Counterexample, "").param("e", r.label(e)).param("f", r.label(f)),
                );
            }
        }
        Ok(out)
    });
    Ok(vec![TheoremReport::new(
        "corner.inner_idempotent",
        "if R is Zhou right e-reduced, f is idempotent and e ∈ fRf, then fRf is Zhou right e-reduced",
        Scope::Universal,
    )
    .with(rows)])
}

pub fn pasting_m2z4(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let name = "M(2,Z4)";
    let r = ctx.ring(name)?;
    let facts = RingFacts::new(&r, &ctx.limits);
    let e = r.parse_elem("[[0,0],[3,1]]")?;
    let a = r.parse_elem("[[0,1],[0,0]]")?;
    let f = r.parse_elem("[[1,0],[0,0]]")?;
    let d = facts.delta()?.clone();
    let ae = r.mul(a, e);
    let mut rows = vec![Instance::check(
        name,
        r.mul(e, e) == e && facts.nilpotents().contains(a),
        Verdict::Counterexample,
        "e is idempotent and a is nilpotent",
    )];
    let g = r.sub(r.unit()?, f);
    for (label, h) in [("f", f), ("1-f", g)] {
        let c = corner(&r, h)?;
        let cf = RingFacts::new(&c.ring, &ctx.limits);
        let n_is_d = cf.nilpotents() == cf.delta()?;
        let mut all = true;
        for k in c.ring.nonzero_idempotents() {
            all &= zhou(P::ZhouRightEReduced, &cf, k)?;
        }
        rows.push(
            Instance::check(
                name,
                c.ring.order() == 4 && c.ring.is_commutative() && n_is_d && all,
                Verdict::Counterexample,
                "the corner has order 4, N = δ, and is Zhou right g-reduced for every g",
            )
            .param("corner", label),
        );
    }
    let ae_label = r.label(ae).to_string();
    rows.push(
        Instance::check(
            name,
            ae_label == "[[3,1],[0,0]]" && !d.contains(ae),
            Verdict::Counterexample,
            "ae = [[3,1],[0,0]] is not in δ(R) = M_2(2Z4)",
        )
        .values("[[3,1],[0,0]] ∉ δ(R)", format!("{ae_label} ∈ δ(R) is {}", d.contains(ae))),
    );
    let rep = zhou_core::predicates::check(P::ZhouRightEReduced, &facts, zhou_core::Params::with_e(e))?;
    rows.push(
        Instance::check(name, !rep.verdict, Verdict::Counterexample, "zhou_right_e_reduced is false at e")
            .witness(crate::implication::witness_pairs(&r, &rep)),
    );
    let any: Vec<Elem> =
        r.nonzero_idempotents().into_iter().filter(|&x| zhou(P::ZhouRightEReduced, &facts, x).unwrap_or(false)).collect();
    rows.push(
        Instance::check(name, any.is_empty(), Verdict::Counterexample, "no nonzero idempotent makes R Zhou right reduced")
            .values("none", show(&r, &ElementSubset::from_elems(r.order(), any))),
    );
    Ok(vec![TheoremReport::new(
        "pasting.m2z4",
        "M_2(Z4) with f = E11: both corners are Zhou right reduced at every idempotent, yet ae ∉ δ(R) for e = [[0,0],[3,1]], a = E12",
        Scope::Exact,
    )
    .with(rows)])
}
