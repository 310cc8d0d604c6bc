//! Statements about δ itself: routes, transfer laws, matrix and triangular tables.

use rayon::prelude::*;
use zhou_core::constructors::{corner, direct_product, quotient};
use zhou_core::{radicals, Elem, ElementSubset, FiniteRing, Limits, Result};

use super::{compare, delta, entry_set, proper_two_sided, show, Ctx};
use crate::catalog::Tier;
use crate::report::{Instance, Scope, TheoremReport, Verdict};

/// Route names paired with their results, the first being the reference.
fn all_routes(r: &FiniteRing, l: &Limits) -> Result<Vec<(&'static str, ElementSubset)>> {
    Ok(vec![
        ("essential-maximal", radicals::delta_via_essential_maximal(r, l)?.into_subset()),
        ("summand", radicals::delta_via_summand(r, l)?.into_subset()),
        ("semisimple-complement", radicals::delta_via_semisimple_complement(r, l)?.into_subset()),
        ("socle-lift", radicals::delta_via_socle_lift(r, l)?.into_subset()),
        ("quasi-regular", radicals::delta_quasi_regular(r)?.into_subset()),
    ])
}

pub fn routes(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let rings = ctx.rings(Tier::Medium);
    let rows: Vec<Instance> = rings
        .par_iter()
        .map(|&(name, r)| {
            let res = all_routes(r, &ctx.limits).and_then(|rs| {
                let small = radicals::is_delta_small(r, &rs[0].1, &ctx.limits)?;
                Ok((rs, small))
            });
            match res {
                Ok((rs, small)) => {
                    let reference = &rs[0].1;
                    let bad: Vec<&str> = rs.iter().filter(|(_, s)| s != reference).map(|(n, _)| *n).collect();
                    let ok = bad.is_empty() && small;
                    let detail = if ok {
                        format!("{} routes agree, |δ| = {}", rs.len(), reference.len())
                    } else if !small {
                        "route (1) result is not δ-small".to_string()
                    } else {
                        format!("routes disagree: {}", bad.join(", "))
                    };
                    Instance::check(name, ok, Verdict::Counterexample, detail)
                }
                Err(e) => Instance::new(name, Verdict::Refused, e.to_string()),
            }
        })
        .collect();
    Ok(vec![TheoremReport::new(
        "delta.routes",
        "the intersection of essential maximal right ideals, the largest δ-small right ideal, the summand and semisimple-complement descriptions and the socle lift of J all coincide",
        Scope::Universal,
    )
    .with(rows)])
}

pub fn corner_law(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let rings = ctx.rings(Tier::Medium);
    let rows: Vec<Vec<Instance>> = rings
        .par_iter()
        .map(|&(name, r)| {
            let run = || -> Result<Vec<Instance>> {
                let d = delta(r, &ctx.limits)?;
                let mut out = Vec::new();
                for e in r.nonzero_idempotents() {
                    let c = corner(r, e)?;
                    let dc = c.image(&delta(&c.ring, &ctx.limits)?);
                    let ede = ElementSubset::from_elems(r.order(), d.iter().map(|x| r.mul3(e, x, e)));
                    let meet = c.carrier().intersect(&d);
                    let ok = dc == ede && dc == meet;
                    out.push(
                        Instance::check(name, ok, Verdict::Counterexample, format!("|δ(eRe)| = {}", dc.len()))
                            .param("e", r.label(e)),
                    );
                }
                Ok(out)
            };
            run().unwrap_or_else(|e| vec![Instance::new(name, Verdict::Refused, e.to_string())])
        })
        .collect();
    Ok(vec![TheoremReport::new("delta.corner", "eRe ∩ δ(R) = δ(eRe) = eδ(R)e for every idempotent e", Scope::Universal)
        .with(rows.into_iter().flatten())])
}

pub fn product_law(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let small: Vec<(&str, &FiniteRing)> =
        ctx.rings(Tier::Small).into_iter().filter(|(_, r)| r.order() <= 8).collect();
    let mut pairs = Vec::new();
    for i in 0..small.len() {
        for j in i..small.len() {
            if small[i].1.order() * small[j].1.order() <= 64 {
                pairs.push((small[i], small[j]));
            }
        }
    }
    let rows: Vec<Instance> = pairs
        .par_iter()
        .map(|&((n1, r1), (n2, r2))| {
            let name = format!("prod({n1},{n2})");
            let run = || -> Result<Instance> {
                let p = direct_product(&[r1, r2], &ctx.limits)?;
                let (d1, d2) = (delta(r1, &ctx.limits)?, delta(r2, &ctx.limits)?);
                let claimed = ElementSubset::from_predicate(p.order(), |x| {
                    let c = p.coords_of(x).expect("product coordinates");
                    d1.contains(c[0]) && d2.contains(c[1])
                });
                let computed = delta(&p, &ctx.limits)?;
                Ok(compare(&name, &p, &claimed, &computed, Verdict::Counterexample, "δ(R1 × R2) = δ(R1) × δ(R2)"))
            };
            run().unwrap_or_else(|e| Instance::new(&name, Verdict::Refused, e.to_string()))
        })
        .collect();
    Ok(vec![TheoremReport::new("delta.product", "δ of a finite direct product is the product of the δ's", Scope::Universal)
        .with(rows)])
}

pub fn image_law(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let rings: Vec<_> = ctx.rings(Tier::Small).into_iter().filter(|(_, r)| r.order() <= 64).collect();
    let rows: Vec<Vec<Instance>> = rings
        .par_iter()
        .map(|&(name, r)| {
            let run = || -> Result<Vec<Instance>> {
                let d = delta(r, &ctx.limits)?;
                let mut out = Vec::new();
                for i in proper_two_sided(r, &ctx.limits)? {
                    let q = quotient(r, &i)?;
                    let dq = delta(&q.ring, &ctx.limits)?;
                    let img = q.image(&d);
                    out.push(
                        Instance::check(name, img.is_subset(&dq), Verdict::Counterexample, "π(δ(R)) ⊆ δ(R/I)")
                            .param("I", r.format_set(i.as_subset())),
                    );
                }
                Ok(out)
            };
            run().unwrap_or_else(|e| vec![Instance::new(name, Verdict::Refused, e.to_string())])
        })
        .collect();
    Ok(vec![TheoremReport::new(
        "delta.image",
        "a surjective ring map R → R/I sends δ(R) into δ(R/I)",
        Scope::Universal,
    )
    .with(rows.into_iter().flatten())])
}

pub fn matrix_law(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let mut rows = Vec::new();
    for base in ["Z2", "Z3", "Z4", "prod(Z2,Z2)"] {
        let b = ctx.ring(base)?;
        let name = format!("M(2,{base})");
        let m = ctx.ring(&name)?;
        let db = delta(&b, &ctx.limits)?;
        let claimed = entry_set(&m, 2, |_, _, v| db.contains(v));
        rows.push(compare(&name, &m, &claimed, &delta(&m, &ctx.limits)?, Verdict::Counterexample, "δ(M_n(R)) = M_n(δ(R))"));
    }
    Ok(vec![TheoremReport::new("delta.matrix", "δ(M_n(R)) = M_n(δ(R))", Scope::Universal).with(rows)])
}

/// `{x ∈ U_n(R) : x vanishes outside row i}`, with `z` the zero of `R`.
fn row(u: &FiniteRing, n: usize, i: usize, z: Elem) -> ElementSubset {
    entry_set(u, n, |a, _, v| a == i || v == z)
}

fn is_field(r: &FiniteRing) -> bool {
    r.units().map(|u| u.len() + 1 == r.order()).unwrap_or(false)
}

pub fn triangular(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let l = &ctx.limits;
    let mut d_rows = Vec::new();
    let mut n_rows = Vec::new();
    let mut field_rows = Vec::new();
    for (n, base) in [(2, "Z2"), (2, "Z3"), (2, "Z4"), (2, "Z6"), (2, "prod(Z2,Z2)"), (3, "Z2"), (3, "Z3"), (3, "Z4")] {
        let b = ctx.ring(base)?;
        let name = format!("U({n},{base})");
        let u = ctx.ring(&name)?;
        let (nb, z) = (b.nilpotent_elements(), b.zero());
        let claimed_n = entry_set(&u, n, |i, j, v| if i == j { nb.contains(v) } else { i < j || v == z });
        n_rows.push(compare(&name, &u, &claimed_n, &u.nilpotent_elements(), Verdict::Counterexample, "N(U_n(R)) has N(R) on the diagonal"));
        if is_field(&b) {
            let claimed = entry_set(&u, n, |i, j, v| if i == j { (i == n - 1) || v == z } else { i < j || v == z });
            field_rows.push(compare(&name, &u, &claimed, &delta(&u, l)?, Verdict::Counterexample, "δ(U_n(D)) for a division ring D"));
            let strict = entry_set(&u, n, |i, j, v| i < j || v == z);
            field_rows.push(compare(&name, &u, &strict, &u.nilpotent_elements(), Verdict::Counterexample, "N(U_n(D)) is strictly upper"));
        }
        if u.order() > l.lattice_order {
            continue;
        }
        // δ(U_n(R)) = Σ_{i<n} δ(row i as a module) + δ(R) in the corner (n,n).
        let db = delta(&b, l)?;
        let mut claimed = entry_set(&u, n, |i, j, v| if i == n - 1 && j == n - 1 { db.contains(v) } else { v == z });
        for i in 0..n - 1 {
            let di = radicals::delta_of_right_ideal_as_module(&u, &row(&u, n, i, z), l)?;
            claimed = u.subgroup_sum(&claimed, &di);
        }
        d_rows.push(compare(&name, &u, &claimed, &delta(&u, l)?, Verdict::Counterexample, "δ(U_n(R)) from the row modules"));
    }
    Ok(vec![
        TheoremReport::new(
            "delta.triangular",
            "δ(U_n(R)) is the sum of δ of the first n−1 row modules and δ(R) in the last diagonal entry",
            Scope::Universal,
        )
        .with(d_rows),
        TheoremReport::new("nilpotent.triangular", "N(U_n(R)) is the set with diagonal in N(R)", Scope::Universal)
            .with(n_rows),
        TheoremReport::new(
            "delta.triangular_field",
            "over a division ring D, δ(U_n(D)) has zero diagonal except the last entry and N(U_n(D)) is strictly upper",
            Scope::Universal,
        )
        .with(field_rows),
    ])
}

pub fn quotient_not_zero(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let mut rows = Vec::new();
    for name in ["U(2,Z2)", "U(2,Z3)"] {
        let u = ctx.ring(name)?;
        let d = delta(&u, &ctx.limits)?;
        let q = quotient(&u, &u.as_two_sided(&d)?)?;
        let dq = delta(&q.ring, &ctx.limits)?;
        rows.push(
            Instance::check(name, dq.is_full() && q.ring.order() > 1, Verdict::Counterexample, "δ(R/δ(R)) = R/δ(R) ≠ 0")
                .values(format!("order {}", q.ring.order()), format!("|δ(R/δ(R))| = {}", dq.len())),
        );
    }
    Ok(vec![TheoremReport::new("delta.quotient_not_zero", "δ(R/δ(R)) can be nonzero: U_2(F)", Scope::Existential)
        .with(rows)])
}

pub fn semiprime(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let rings = ctx.rings(Tier::Medium);
    let rows: Vec<Instance> = rings
        .par_iter()
        .map(|&(name, r)| {
            let run = || -> Result<Instance> {
                let d = r.as_two_sided(&delta(r, &ctx.limits)?)?;
                let w = radicals::semiprime_witness(r, d.as_subset());
                let mut i = Instance::check(name, w.is_none(), Verdict::Counterexample, "");
                if let Some(a) = w {
                    i = i.witness(vec![("a".into(), r.label(a).into())]);
                }
                Ok(i)
            };
            run().unwrap_or_else(|e| Instance::new(name, Verdict::Refused, e.to_string()))
        })
        .collect();
    Ok(vec![TheoremReport::new("delta.semiprime", "δ(R) is a semiprime ideal", Scope::Universal).with(rows)])
}

pub fn ideal_module(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let rings: Vec<_> = ctx.rings(Tier::Small).into_iter().filter(|(_, r)| r.order() <= 64).collect();
    let rows: Vec<(Vec<Instance>, Vec<Instance>)> = rings
        .par_iter()
        .map(|&(name, r)| {
            let run = || -> Result<(Vec<Instance>, Vec<Instance>)> {
                let l = &ctx.limits;
                let d = delta(r, l)?;
                let ideals = proper_two_sided(r, l)?;
                let (mut sub, mut max) = (Vec::new(), Vec::new());
                for i in &ideals {
                    let s = i.as_subset();
                    let di = radicals::delta_of_right_ideal_as_module(r, s, l)?;
                    let meet = s.intersect(&d);
                    let shown = r.format_set(s);
                    sub.push(
                        Instance::check(name, di.is_subset(&meet), Verdict::Counterexample, "δ(I) ⊆ I ∩ δ(R)")
                            .param("I", &shown)
                            .values(show(r, &meet), show(r, &di)),
                    );
                    let maximal = !ideals.iter().any(|k| k.as_subset() != s && s.is_subset(k.as_subset()));
                    if maximal {
                        max.push(
                            compare(name, r, &meet, &di, Verdict::Counterexample, "I ∩ δ(R) = δ(I)")
                                .param("I", &shown)
                                .param("essential", radicals::is_essential(r, s).to_string()),
                        );
                    }
                }
                Ok((sub, max))
            };
            run().unwrap_or_else(|e| (vec![Instance::new(name, Verdict::Refused, e.to_string())], Vec::new()))
        })
        .collect();
    let (sub, max): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    Ok(vec![
        TheoremReport::new(
            "delta.ideal_module",
            "for an ideal I viewed as a right module, δ(I) ⊆ I ∩ δ(R)",
            Scope::Universal,
        )
        .with(sub.into_iter().flatten()),
        TheoremReport::new(
            "delta.ideal_module_maximal",
            "for a maximal ideal I viewed as a right module, δ(I) = I ∩ δ(R)",
            Scope::Universal,
        )
        .with(max.into_iter().flatten()),
    ])
}

pub fn z16_ideal(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let r = ctx.ring("Z16")?;
    let l = &ctx.limits;
    let set = |v: &[u32]| ElementSubset::from_elems(16, v.iter().map(|&k| r.parse_elem(&k.to_string()).expect("Z16")));
    let i = set(&[0, 4, 8, 12]);
    let d = delta(&r, l)?;
    let di = radicals::delta_of_right_ideal_as_module(&r, &i, l)?;
    let two: Vec<u32> = (0..16).step_by(2).collect();
    let maximal = radicals::maximal_right_ideals(&r, l)?.iter().any(|m| m.as_subset() == &i);
    let rows = vec![
        compare("Z16", &r, &set(&two), &d, Verdict::Counterexample, "δ(Z16) = 2Z16"),
        compare("Z16", &r, &set(&[0, 8]), &di, Verdict::Counterexample, "δ(4Z16) = 8Z16").param("I", "4Z16"),
        Instance::check(
            "Z16",
            radicals::is_essential(&r, &i) && !maximal,
            Verdict::Counterexample,
            "4Z16 is essential and not maximal",
        ),
        Instance::check(
            "Z16",
            i.intersect(&d) == i && !i.is_subset(&di),
            Verdict::Counterexample,
            "I ∩ δ(R) = I is not contained in δ(I)",
        )
        .values(show(&r, &i.intersect(&d)), show(&r, &di)),
    ];
    Ok(vec![TheoremReport::new(
        "delta.z16_ideal",
        "in Z16 with I = 4Z16: δ(R) = 2Z16, δ(I) = 8Z16, and I ∩ δ(R) ⊄ δ(I)",
        Scope::Exact,
    )
    .with(rows)])
}
