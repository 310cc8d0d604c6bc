//! Dorroh extensions, group rings and polynomial rings.

use rayon::prelude::*;
use zhou_core::constructors::{dorroh, BimoduleAlgebra};
use zhou_core::predicates::{PredicateId as P, RingFacts};
use zhou_core::skewpoly::{armendariz_witness, poly_nilpotent_coefficient_check, RingAutomorphism, SkewPolyRing};
use zhou_core::{AlgebraSpec, Elem, ElementSubset, Error, FiniteRing, Form, Result};

use super::{compare, delta, show, zhou, Ctx};
use crate::catalog::Tier;
use crate::report::{Instance, Scope, TheoremReport, Verdict};

/// `(a, t) ↦ a + t` for `D(R, I)` with `I` an ideal of `R`.
fn flatten(d: &FiniteRing, r: &FiniteRing, x: Elem) -> (Elem, Elem) {
    let Form::Tuple(parts) = d.form(x) else { panic!("Dorroh elements are pairs") };
    let a = r.elem_from_form(&parts[0]).expect("base coordinate");
    let t = r.elem_from_form(&parts[1]).expect("ideal coordinate");
    (a, t)
}

/// `D(R, I)` rings, written as `(R, generators of I)`.
const IDEAL_EXTENSIONS: [(&str, &str); 7] = [
    ("Z2", "1"),
    ("Z4", "2"),
    ("Z4", "1"),
    ("Z8", "4"),
    ("Z6", "3"),
    ("U(2,Z2)", "[[0,1],[0,0]]"),
    ("U(2,Z2)", "[[0,0],[0,1]]"),
];

struct IdealExt {
    name: String,
    base: FiniteRing,
    algebra: BimoduleAlgebra,
    ring: FiniteRing,
}

fn ideal_ext(ctx: &Ctx<'_>, base: &str, gens: &str) -> Result<IdealExt> {
    let r = ctx.ring(base)?;
    let g = ElementSubset::from_elems(r.order(), [r.parse_elem(gens)?]);
    let algebra = BimoduleAlgebra::ideal(&r, &r.two_sided_closure(&g))?;
    let ring = dorroh(&r, &algebra, &ctx.limits)?;
    Ok(IdealExt { name: format!("dorroh({base},ideal{{{gens}}})"), base: r, algebra, ring })
}

pub fn dorroh_delta_formula(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let mut rows = Vec::new();
    let mut push = |name: &str, base: &FiniteRing, d: &FiniteRing| -> Result<()> {
        let db = delta(base, &ctx.limits)?;
        let claimed = ElementSubset::from_predicate(d.order(), |x| {
            let Form::Tuple(parts) = d.form(x) else { return false };
            base.elem_from_form(&parts[0]).is_some_and(|a| db.contains(a))
        });
        rows.push(compare(name, d, &claimed, &delta(d, &ctx.limits)?, Verdict::Divergence, "δ(D(R,T)) against δ(R) ⊕ T"));
        Ok(())
    };
    for name in ["dorroh(Z2,sgT)", "dorroh(Z2,matT)"] {
        let d = ctx.ring(name)?;
        push(name, &ctx.ring("Z2")?, &d)?;
    }
    for (base, gens) in IDEAL_EXTENSIONS {
        let ext = ideal_ext(ctx, base, gens)?;
        push(&ext.name, &ext.base, &ext.ring)?;
    }
    let AlgebraSpec::Scalar(t) = ctx.registry.algebra("sgT")? else {
        return Err(Error::Semantic("sgT is a scalar algebra".into()));
    };
    let dt = delta(t, &ctx.limits)?;
    rows.push(compare("sgT", t, &labelled(t, &["0", "a+b"])?, &dt, Verdict::Divergence, "δ(T) = {0, a+b} for T = Z2{a,b}, xy = x"));
    Ok(vec![TheoremReport::new(
        "dorroh.delta_formula",
        "δ(D(R,T)) = δ(R) ⊕ T, alongside the stated δ(T) = {0, a+b} of the semigroup algebra T",
        Scope::Universal,
    )
    .with(rows)])
}

pub fn dorroh_characterizations(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let mut idem = Vec::new();
    let mut nil = Vec::new();
    for (base, gens) in IDEAL_EXTENSIONS {
        let ext = ideal_ext(ctx, base, gens)?;
        let (d, r) = (&ext.ring, &ext.base);
        let (mut bad_i, mut bad_n) = (None, None);
        let max_n = d.order() as u64;
        for x in d.elements() {
            let (a, t) = flatten(d, r, x);
            let s = r.add(a, t);
            let is_idem = d.mul(x, x) == x;
            if is_idem != (r.mul(a, a) == a && r.mul(s, s) == s) && bad_i.is_none() {
                bad_i = Some(x);
            }
            for n in 1..=max_n {
                let lhs = d.pow(x, n)? == d.zero();
                let rhs = r.pow(a, n)? == r.zero() && r.pow(s, n)? == r.zero();
                if lhs != rhs {
                    bad_n.get_or_insert((x, n));
                    break;
                }
            }
        }
        let mut i = Instance::check(&ext.name, bad_i.is_none(), Verdict::Counterexample, format!("all {} elements", d.order()));
        if let Some(x) = bad_i {
            i = i.witness(vec![("x".into(), d.label(x).into())]);
        }
        idem.push(i);
        let mut i = Instance::check(&ext.name, bad_n.is_none(), Verdict::Counterexample, format!("all {} elements, n ≤ {max_n}", d.order()));
        if let Some((x, n)) = bad_n {
            i = i.witness(vec![("x".into(), d.label(x).into()), ("n".into(), n.to_string())]);
        }
        nil.push(i);
    }
    Ok(vec![
        TheoremReport::new(
            "dorroh.idempotent",
            "in D(R,I), (a,t) is idempotent iff a is idempotent and (a+t)² = a+t",
            Scope::Universal,
        )
        .with(idem),
        TheoremReport::new(
            "dorroh.nilpotent",
            "in D(R,I), (a,t)ⁿ = 0 iff aⁿ = 0 and (a+t)ⁿ = 0",
            Scope::Universal,
        )
        .with(nil),
    ])
}

pub fn dorroh_theorem(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let mut rep = TheoremReport::new(
        "dorroh.theorem",
        "with E = (e,f) idempotent, R is Zhou right e-reduced and T is Zhou right f-reduced iff D(R,T) is Zhou right E-reduced",
        Scope::Universal,
    );
    for (base, gens) in IDEAL_EXTENSIONS {
        let ext = ideal_ext(ctx, base, gens)?;
        let (d, r, t) = (&ext.ring, &ext.base, &ext.algebra.algebra);
        let (fr, ft, fd) = (RingFacts::new(r, &ctx.limits), RingFacts::new(t, &ctx.limits), RingFacts::new(d, &ctx.limits));
        for e in r.idempotent_elements().iter() {
            for f in t.idempotent_elements().iter() {
                let form = Form::Tuple(vec![r.form(e).clone(), t.form(f).clone()]);
                let pair = d.elem_from_form(&form).expect("pair lies in D(R,T)");
                if d.mul(pair, pair) != pair {
                    rep.vacuous += 1;
                    continue;
                }
                let parts = zhou(P::ZhouRightEReduced, &fr, e)? && zhou(P::ZhouRightEReduced, &ft, f)?;
                let whole = zhou(P::ZhouRightEReduced, &fd, pair)?;
                rep.push(
                    Instance::check(&ext.name, parts == whole, Verdict::Counterexample, format!("R and T {parts}, D {whole}"))
                        .param("E", d.label(pair)),
                );
            }
        }
    }
    Ok(vec![rep.finish()])
}

fn zhou_everywhere(r: &FiniteRing, ctx: &Ctx<'_>, id: P) -> Result<bool> {
    let facts = RingFacts::new(r, &ctx.limits);
    for e in r.nonzero_idempotents() {
        if !zhou(id, &facts, e)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn labelled(r: &FiniteRing, labels: &[&str]) -> Result<ElementSubset> {
    let elems = labels.iter().map(|l| r.parse_elem(l)).collect::<Result<Vec<_>>>()?;
    Ok(ElementSubset::from_elems(r.order(), elems))
}

pub fn dorroh_examples(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let l = &ctx.limits;
    let mut rows = Vec::new();
    // T is a left ideal of M_2(Z2) but not a right ideal, so the extension is undefined.
    match ctx.ring("dorroh(M(2,Z2),matT_M2)") {
        Err(Error::ActionIncompatibility { law, witness }) => rows.push(
            Instance::new(
                "dorroh(M(2,Z2),matT_M2)",
                Verdict::Confirmed,
                format!("T is not an (R,R)-bimodule ({law}), so D(M_2(Z2),T) is undefined; D(Z2,T) is checked instead"),
            )
            .witness(vec![("violation".into(), witness)]),
        ),
        Ok(_) => rows.push(Instance::new("dorroh(M(2,Z2),matT_M2)", Verdict::Counterexample, "construction was expected to fail")),
        Err(e) => return Err(e),
    }
    let dm = ctx.ring("dorroh(Z2,matT)")?;
    rows.push(Instance::check(
        "dorroh(Z2,matT)",
        zhou_everywhere(&dm, ctx, P::ZhouRightEReduced)?,
        Verdict::Counterexample,
        "Zhou right E-reduced for every E",
    ));
    // The semigroup algebra T = Z2{a,b} with xy = x.
    let name = "dorroh(Z2,sgT)";
    let d = ctx.ring(name)?;
    let listed = ["(0,0)", "(1,0)", "(0,a)", "(0,b)", "(0,a+b)", "(1,a)", "(1,b)", "(1,a+b)"];
    let all = labelled(&d, &listed)?;
    rows.push(Instance::check(name, all.is_full() && d.order() == 8, Verdict::Counterexample, "exactly the 8 listed elements"));
    let small = labelled(&d, &["(0,0)", "(0,a+b)"])?;
    let j = zhou_core::radicals::jacobson(&d, l)?.into_subset();
    rows.push(compare(name, &d, &small, &j, Verdict::Counterexample, "J = {(0,0),(0,a+b)}"));
    rows.push(compare(name, &d, &small, &d.nilpotent_elements(), Verdict::Counterexample, "N = {(0,0),(0,a+b)}"));
    let claimed_d = labelled(&d, &["(0,0)", "(0,a)", "(0,b)", "(0,a+b)"])?;
    rows.push(compare(name, &d, &claimed_d, &delta(&d, l)?, Verdict::Counterexample, "δ = {(0,0),(0,a),(0,b),(0,a+b)}"));
    let cyclic: std::collections::BTreeSet<String> = d
        .elements()
        .map(|x| d.cyclic_right_ideal(x).into_subset())
        .filter(|s| s.len() > 1 && !s.is_full())
        .map(|s| d.format_set(&s))
        .collect();
    let expected: std::collections::BTreeSet<String> = [
        &["(0,0)", "(0,a)"][..],
        &["(0,0)", "(0,b)"],
        &["(0,0)", "(0,a+b)"],
        &["(0,0)", "(1,a)", "(1,b)", "(0,a+b)"],
    ]
    .iter()
    .map(|ls| labelled(&d, ls).map(|s| d.format_set(&s)))
    .collect::<Result<_>>()?;
    let count = zhou_core::radicals::all_right_ideals(&d, l)?.iter().filter(|i| i.as_subset().len() > 1 && !i.as_subset().is_full()).count();
    rows.push(
        Instance::check(
            name,
            cyclic == expected,
            Verdict::Counterexample,
            format!("proper nonzero cyclic right ideals; {count} proper nonzero right ideals in all, 0 ⊕ T being the one that is not cyclic"),
        )
        .values(expected.into_iter().collect::<Vec<_>>().join(" "), cyclic.into_iter().collect::<Vec<_>>().join(" ")),
    );
    rows.push(Instance::check(
        name,
        zhou_everywhere(&d, ctx, P::ZhouEReduced)?,
        Verdict::Counterexample,
        "Zhou e-reduced for every e",
    ));
    Ok(vec![TheoremReport::new(
        "dorroh.examples",
        "the Dorroh extensions by the matrix semigroup T ⊆ M_2(Z2) and by T = Z2{a,b} with xy = x: elements, J, N, δ, cyclic right ideals and the Zhou property",
        Scope::Exact,
    )
    .with(rows)])
}

pub fn maschke(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let names = ["grpring(Z3,C2)", "grpring(Z2,C3)", "grpring(Z5,C2)", "grpring(Z7,C3)", "grpring(Z2,C5)", "grpring(Z3,C4)", "grpring(Z5,C3)"];
    let rows: Vec<Instance> = names
        .par_iter()
        .map(|&name| {
            let run = || -> Result<Instance> {
                let r = ctx.ring(name)?;
                let d = delta(&r, &ctx.limits)?;
                let ok = d.is_full() && zhou_everywhere(&r, ctx, P::ZhouEReduced)?;
                Ok(Instance::check(name, ok, Verdict::Counterexample, format!("|δ| = {} of {}", d.len(), r.order())))
            };
            run().unwrap_or_else(|e| Instance::new(name, Verdict::Refused, e.to_string()))
        })
        .collect();
    Ok(vec![TheoremReport::new(
        "maschke",
        "for char F not dividing |G|, δ(FG) = FG and FG is Zhou e-reduced for every e",
        Scope::Universal,
    )
    .with(rows)])
}

pub fn skew_u2(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let name = "U(2,Z2)";
    let u = ctx.ring(name)?;
    let px = SkewPolyRing::ordinary(&u);
    let a = px.parse(&["[[1,0],[0,0]]", "[[0,1],[0,0]]"])?;
    let e = u.parse_elem("[[1,0],[0,0]]")?;
    let n = px.parse(&["[[0,0],[0,0]]", "[[0,1],[0,0]]"])?;
    let z2 = ctx.ring("Z2")?;
    // e11 a + e12 b + e22 c ↦ e11 a − e12 b + e22 c
    let image = u
        .elements()
        .map(|x| {
            let [p, q, r] = [(0, 0), (0, 1), (1, 1)].map(|(i, j)| u.entry(x, i, j).expect("matrix entry"));
            let form = Form::Matrix(vec![
                vec![z2.form(p).clone(), z2.form(z2.neg(q)).clone()],
                vec![z2.form(z2.zero()).clone(), z2.form(r).clone()],
            ]);
            u.elem_from_form(&form).expect("upper triangular")
        })
        .collect();
    let sigma = RingAutomorphism::new(&u, image)?;
    let rows = vec![
        Instance::check(name, sigma.is_identity(), Verdict::Counterexample, "b ↦ −b is the identity over Z2, so R[x;σ] = R[x]"),
        Instance::check(name, px.mul(&a, &a) == a, Verdict::Counterexample, "A = E11 + E12·x satisfies A² = A")
            .values("A² = A", px.render(&px.mul(&a, &a))),
        Instance::check(name, !u.is_central(e), Verdict::Counterexample, "E11 is a non-central idempotent, so R[x] is not abelian"),
        Instance::check(
            name,
            !n.is_zero() && px.mul(&n, &n).is_zero(),
            Verdict::Counterexample,
            "E12·x is a nonzero nilpotent, so R[x] is not reduced",
        ),
        {
            let w = armendariz_witness(&u, 1, &ctx.limits)?;
            let mut i = Instance::check(name, w.is_some(), Verdict::Counterexample, "R is not Armendariz");
            if let Some(w) = w {
                i = i.witness(vec![("f".into(), px.render(&w.f)), ("g".into(), px.render(&w.g))]);
            }
            i
        },
    ];
    Ok(vec![TheoremReport::new(
        "skew.idempotent_u2",
        "over U_2(Z2), E11 + E12·x is a non-central idempotent of R[x], E12·x is nilpotent and R is not Armendariz",
        Scope::Exact,
    )
    .with(rows)])
}

pub fn skew_swap_z3(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let name = "prod(Z3,Z3)";
    let r = ctx.ring(name)?;
    let px = SkewPolyRing::new(&r, RingAutomorphism::coordinate_swap(&r)?);
    let f = px.parse(&["(0,0)", "(1,0)", "(1,2)", "(0,2)"])?;
    let c2 = f.coeff(2).expect("degree 3");
    let rows = vec![
        Instance::check(name, px.mul(&f, &f).is_zero(), Verdict::Counterexample, "f = (1,0)x + (1,−1)x² + (0,−1)x³ has f² = 0")
            .values("0", px.render(&px.mul(&f, &f))),
        Instance::check(name, !r.nilpotent_elements().contains(c2), Verdict::Counterexample, "the x² coefficient (1,−1) is not nilpotent"),
    ];
    Ok(vec![TheoremReport::new(
        "skew.swap_z3",
        "in (Z3 × Z3)[x;σ] with σ the swap, a nilpotent polynomial can have a non-nilpotent coefficient",
        Scope::Exact,
    )
    .with(rows)])
}

pub fn skew_swap_z2(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let name = "prod(Z2,Z2)";
    let r = ctx.ring(name)?;
    let px = SkewPolyRing::new(&r, RingAutomorphism::coordinate_swap(&r)?);
    let p = |c: &[&str]| px.parse(c);
    let (x10, x01, x11) = (p(&["(0,0)", "(1,0)"])?, p(&["(0,0)", "(0,1)"])?, p(&["(0,0)", "(1,1)"])?);
    let (c10, c01) = (p(&["(1,0)"])?, p(&["(0,1)"])?);
    let rows = vec![
        Instance::check(name, px.mul(&x10, &x10).is_zero(), Verdict::Counterexample, "((1,0)x)² = 0"),
        Instance::check(name, px.mul(&x01, &x01).is_zero(), Verdict::Counterexample, "((0,1)x)² = 0"),
        Instance::check(name, px.mul(&x11, &c01) == x10, Verdict::Counterexample, "(1,1)x·(0,1) = (1,0)x"),
        Instance::check(name, px.mul(&x11, &c10) == x01, Verdict::Counterexample, "(1,1)x·(1,0) = (0,1)x"),
    ];
    let identities = TheoremReport::new(
        "skew.swap_z2",
        "in (Z2 ⊕ Z2)[x;σ] with σ the swap: ((1,0)x)² = ((0,1)x)² = 0, (1,1)x(0,1) = (1,0)x and (1,1)x(1,0) = (0,1)x",
        Scope::Exact,
    )
    .with(rows);
    // The nilpotent description: constant term zero, other coefficients arbitrary.
    let degree = 3;
    let mut bad = Vec::new();
    let mut total = 0;
    for f in px.all_up_to_degree(degree) {
        total += 1;
        let nil = px.is_nilpotent_poly(&f, px.default_power_bound(&f));
        let claimed = f.coeff(0).is_none_or(|c| c == r.zero());
        if nil != claimed {
            bad.push(f);
        }
    }
    let description = TheoremReport::new(
        "skew.swap_z2_nilpotents",
        "in (Z2 ⊕ Z2)[x;σ] with σ the swap, a polynomial is nilpotent iff its constant term is 0",
        Scope::Universal,
    );
    let inst = match bad.first() {
        None => Instance::new(name, Verdict::Confirmed, format!("all {total} polynomials of degree ≤ {degree}")),
        Some(f) => Instance::new(
            name,
            Verdict::Counterexample,
            format!("{} of {total} polynomials of degree ≤ {degree} disagree", bad.len()),
        )
        .witness(vec![
            ("f".into(), px.render(f)),
            ("f²".into(), px.render(&px.mul(f, f))),
        ]),
    };
    let degree = 5;
    let mut total = 0;
    let mut first_bad = None;
    for f in px.all_up_to_degree(degree) {
        total += 1;
        let nil = px.is_nilpotent_poly(&f, px.default_power_bound(&f));
        if nil != swap_matrix_criterion(&r, &f) && first_bad.is_none() {
            first_bad = Some(f);
        }
    }
    let exact = TheoremReport::new(
        "skew.swap_z2_matrix",
        "in (Z2 ⊕ Z2)[x;σ] with σ the swap, write f = [[A(y), C(y)x], [D(y)x, B(y)]] over y = x² using the idempotents (1,0), (0,1); f is nilpotent iff A = B and A² = y·C·D",
        Scope::Universal,
    )
    .with([match first_bad {
        None => Instance::new(name, Verdict::Confirmed, format!("all {total} polynomials of degree ≤ {degree}")),
        Some(f) => Instance::new(name, Verdict::Counterexample, "criterion disagrees").witness(vec![("f".into(), px.render(&f))]),
    }]);
    Ok(vec![identities, description.with([inst]), exact])
}

/// Nilpotency in `(Z2 ⊕ Z2)[x;σ]` through the embedding into `M_2(F2[y])`, `y = x²`:
/// nilpotent iff trace `A + B` and determinant `AB + yCD` vanish.
fn swap_matrix_criterion(r: &FiniteRing, f: &zhou_core::skewpoly::SkewPolynomial) -> bool {
    // F2[y] polynomials as bit masks.
    let (mut a, mut b, mut c, mut d) = (0u64, 0u64, 0u64, 0u64);
    for (i, &coef) in f.coeffs().iter().enumerate() {
        let Form::Tuple(parts) = r.form(coef) else { return false };
        let bit = |k: usize| matches!(parts[k], Form::Int(1));
        let pos = 1u64 << (i / 2);
        let (first, second) = if i % 2 == 0 { (&mut a, &mut b) } else { (&mut c, &mut d) };
        if bit(0) {
            *first |= pos;
        }
        if bit(1) {
            *second |= pos;
        }
    }
    let clmul = |x: u64, y: u64| (0..32).filter(|k| y >> k & 1 == 1).fold(0u64, |acc, k| acc ^ (x << k));
    a == b && clmul(a, a) == clmul(clmul(c, d), 2)
}

pub fn skew_commutative(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let mut rows = Vec::new();
    for (name, d) in [("Z4", 2), ("Z8", 1), ("Z6", 2), ("Z9", 1), ("prod(Z2,Z4)", 1), ("GF7", 1)] {
        let r = ctx.ring(name)?;
        let ok = poly_nilpotent_coefficient_check(&r, d, &ctx.limits)?;
        rows.push(Instance::check(name, ok, Verdict::Counterexample, format!("polynomials of degree ≤ {d}")));
    }
    let poly = TheoremReport::new(
        "skew.commutative",
        "over a commutative ring, a polynomial is nilpotent iff all its coefficients are",
        Scope::Universal,
    )
    .with(rows);
    let comm: Vec<_> = ctx.rings(Tier::Medium).into_iter().filter(|(_, r)| r.is_commutative()).collect();
    let rows: Vec<Instance> = comm
        .par_iter()
        .map(|&(name, r)| match delta(r, &ctx.limits) {
            Ok(d) => {
                let n = r.nilpotent_elements();
                Instance::check(name, n.is_subset(&d), Verdict::Counterexample, "").values(show(r, &n), show(r, &d))
            }
            Err(e) => Instance::new(name, Verdict::Refused, e.to_string()),
        })
        .collect();
    let nd = TheoremReport::new("commutative.nil_in_delta", "a commutative ring has N(R) ⊆ δ(R)", Scope::Universal).with(rows);
    Ok(vec![poly, nd])
}

pub fn armendariz(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let mut rows = Vec::new();
    for (name, expect) in [("U(2,Z2)", true), ("Z4", false), ("Z2", false), ("Z3", false), ("Z6", false), ("prod(Z2,Z3)", false)] {
        let r = ctx.ring(name)?;
        let w = armendariz_witness(&r, 1, &ctx.limits)?;
        let detail = if expect { "a witness exists at degree 1" } else { "no witness at degree 1" };
        let mut i = Instance::check(name, w.is_some() == expect, Verdict::Counterexample, detail);
        if let Some(w) = w {
            let px = SkewPolyRing::ordinary(&r);
            i = i.witness(vec![("f".into(), px.render(&w.f)), ("g".into(), px.render(&w.g))]);
        }
        rows.push(i);
    }
    Ok(vec![TheoremReport::new(
        "skew.armendariz",
        "fg = 0 with some a_i b_j ≠ 0 occurs in degree 1 over U_2(Z2) and not over Z4 or reduced rings",
        Scope::Exact,
    )
    .with(rows)])
}
