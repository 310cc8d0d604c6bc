//! Acceptance criteria, one line each. Every criterion runs even when an
//! earlier one fails; the test fails at the end if any did.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use zhou_core::constructors::corner;
use zhou_core::predicates::{check, Params, PredicateId as P, RingFacts};
use zhou_core::ring::exhaustive_axiom_check;
use zhou_core::skewpoly::{armendariz_witness, RingAutomorphism, SkewPolyRing};
use zhou_core::{check_predicate, radicals, ElementSubset, FiniteRing, Limits, Registry};
use zhou_harness::characterization::{verify_characterization, Characterization as C};
use zhou_harness::implication::{check_implication, quasi_duo_theorem, reverse_search, reverse_searches, sources};
use zhou_harness::{is_whitelisted, paper_regression, regression_entry, Catalog, Tier, TheoremReport, Verdict};

const L: Limits = Limits::DEFAULT;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ring(text: &str) -> FiniteRing {
    Registry::with_builtins(&L).unwrap().eval_str(text, &L).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn set(r: &FiniteRing, labels: &[&str]) -> ElementSubset {
    ElementSubset::from_elems(r.order(), labels.iter().map(|s| r.parse_elem(s).unwrap()))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn delta(r: &FiniteRing) -> ElementSubset {
    radicals::delta(r, &L).unwrap().into_subset()
}

/// Entries of a 2×2 matrix ring element, as base-ring labels.
fn entries_in(m: &FiniteRing, base: &FiniteRing, x: zhou_core::Elem, ok: impl Fn(&str) -> bool) -> bool {
    (0..2).all(|i| (0..2).all(|j| ok(base.label(m.entry(x, i, j).unwrap()))))
}

fn bad_reports(reports: &[TheoremReport], allowed: &[Verdict]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !allowed.contains(&r.verdict))
        .map(|r| format!("{} is {}", r.id, r.verdict.name()))
        .collect()
}

fn c1() -> Outcome {
    let r = ring("Z16");
    let d = delta(&r);
    ensure(r.format_set(&d) == "{0,2,4,6,8,10,12,14}", || format!("δ(Z16) = {}", r.format_set(&d)))?;
    let i = r.cyclic_right_ideal(r.parse_elem("4").unwrap()).into_subset();
    let di = radicals::delta_of_right_ideal_as_module(&r, &i, &L).unwrap();
    ensure(r.format_set(&di) == "{0,8}", || format!("δ(4Z16) = {}", r.format_set(&di)))?;
    Ok("δ(Z16) = 2Z16, δ(4Z16) = 8Z16".into())
}

fn c2() -> Outcome {
    let u = ring("U(2,Z2)");
    let du = delta(&u);
    ensure(du == set(&u, &["[[0,0],[0,0]]", "[[0,1],[0,0]]", "[[0,0],[0,1]]", "[[0,1],[0,1]]"]), || {
        format!("δ(U2(Z2)) = {}", u.format_set(&du))
    })?;
    let strict = ElementSubset::from_predicate(u.order(), |x| {
        u.entry(x, 0, 0).unwrap().idx() == 0 && u.entry(x, 1, 1).unwrap().idx() == 0
    });
    ensure(u.nilpotent_elements() == strict, || "N(U2(Z2)) is not the strictly upper set".into())?;
    let m = ring("M(2,Z2)");
    ensure(delta(&m).is_full(), || "δ(M2(Z2)) is proper".into())?;
    let t = Instant::now();
    let z4 = ring("Z4");
    let m4 = ring("M(2,Z4)");
    let lattice = radicals::right_ideal_lattice(&m4, &L).unwrap();
    let d4 = delta(&m4);
    let even = ElementSubset::from_predicate(m4.order(), |x| entries_in(&m4, &z4, x, |s| s == "0" || s == "2"));
    ensure(d4 == even, || format!("|δ(M2(Z4))| = {}", d4.len()))?;
    let secs = t.elapsed().as_secs_f64();
    ensure(secs < 30.0, || format!("M2(Z4) took {secs:.1} s"))?;
    Ok(format!("U2(Z2), M2(Z2), M2(Z4) = M2(2Z4) ({} right ideals, {secs:.2} s)", lattice.len()))
}

fn c3() -> Outcome {
    let cat = Catalog::build(Tier::Medium, &L).map_err(|e| e.to_string())?;
    let rings: Vec<_> = cat.tier(Tier::Medium).collect();
    let bad: Vec<String> = rings
        .par_iter()
        .filter_map(|e| {
            let r = &e.ring;
            let res = (|| -> zhou_core::Result<bool> {
                let a = radicals::delta_via_essential_maximal(r, &L)?.into_subset();
                let others = [
                    radicals::delta_via_summand(r, &L)?.into_subset(),
                    radicals::delta_via_semisimple_complement(r, &L)?.into_subset(),
                    radicals::delta_via_socle_lift(r, &L)?.into_subset(),
                    radicals::delta_quasi_regular(r)?.into_subset(),
                ];
                Ok(others.iter().all(|o| *o == a))
            })();
            match res {
                Ok(true) => None,
                Ok(false) => Some(format!("{}: routes disagree", e.name)),
                Err(err) => Some(format!("{}: {err}", e.name)),
            }
        })
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("5 routes agree on {} rings of order ≤ 256", rings.len()))
}

fn c4() -> Outcome {
    let r = ring("M(2,Z4)");
    let e = r.parse_elem("[[0,0],[3,1]]").unwrap();
    let a = r.parse_elem("[[0,1],[0,0]]").unwrap();
    let ae = r.mul(a, e);
    ensure(r.label(ae) == "[[3,1],[0,0]]", || format!("ae = {}", r.label(ae)))?;
    ensure(!delta(&r).contains(ae), || "ae ∈ δ".into())?;
    let rep = check_predicate(P::ZhouRightEReduced, &r, Params::with_e(e), &L).map_err(|e| e.to_string())?;
    ensure(!rep.verdict, || "verdict true".into())?;
    let w = rep.witness.unwrap().render(&r);
    Ok(format!("verdict false, witness {w}"))
}

fn c5() -> Outcome {
    let d = ring("dorroh(Z2,sgT)");
    let listed = set(&d, &["(0,0)", "(1,0)", "(0,a)", "(0,b)", "(0,a+b)", "(1,a)", "(1,b)", "(1,a+b)"]);
    ensure(d.order() == 8 && listed.is_full(), || format!("order {}", d.order()))?;
    let small = set(&d, &["(0,0)", "(0,a+b)"]);
    let j = radicals::jacobson(&d, &L).unwrap().into_subset();
    ensure(j == small && d.nilpotent_elements() == small, || format!("J = {}", d.format_set(&j)))?;
    let dd = delta(&d);
    ensure(dd == set(&d, &["(0,0)", "(0,a)", "(0,b)", "(0,a+b)"]), || format!("δ = {}", d.format_set(&dd)))?;
    let cat = Catalog::build(Tier::Small, &L).map_err(|e| e.to_string())?;
    let reps = paper_regression(&cat, Some("dorroh.delta_formula")).map_err(|e| e.to_string())?;
    let rep = reps.iter().find(|r| r.id == "dorroh.delta_formula").ok_or("no report")?;
    ensure(rep.verdict == Verdict::Divergence && is_whitelisted(&rep.id), || format!("verdict {}", rep.verdict.name()))?;
    Ok(format!("8 elements, J = N, |δ| = 4, δ-formula report: {} divergences", rep.count(Verdict::Divergence)))
}

fn c6() -> Outcome {
    let r = ring("grpring(Z3,C2)");
    ensure(delta(&r).is_full(), || "δ(Z3[C2]) is proper".into())?;
    let idem = r.nonzero_idempotents();
    for &e in &idem {
        let rep = check_predicate(P::ZhouEReduced, &r, Params::with_e(e), &L).map_err(|e| e.to_string())?;
        ensure(rep.verdict, || format!("fails at e = {}", r.label(e)))?;
    }
    Ok(format!("δ = Z3[C2], Zhou e-reduced at all {} nonzero idempotents", idem.len()))
}

fn c7() -> Outcome {
    let cat = Catalog::build(Tier::Small, &L).map_err(|e| e.to_string())?;
    let mut imps = sources();
    imps.push(quasi_duo_theorem());
    let mut refused = 0;
    for imp in &imps {
        let rep = check_implication(&cat, Tier::Small, imp.id, imp.premise, imp.conclusion);
        ensure(rep.count(Verdict::Counterexample) == 0, || format!("{} has counterexamples", imp.id))?;
        refused += rep.count(Verdict::Refused);
    }
    for (imp, expected) in reverse_searches() {
        let rep = reverse_search(&cat, Tier::Small, &imp, expected);
        ensure(rep.verdict == Verdict::Confirmed, || format!("{}: {expected} not found", imp.id))?;
    }
    Ok(format!("{} implications hold on {} rings ({refused} refused), reverse searches found M2(Z2), U2(Z2)", imps.len(), cat.tier(Tier::Small).count()))
}

fn c8() -> Outcome {
    let z2 = ring("Z2");
    let z4 = ring("Z4");
    let mut checked = Vec::new();
    for (c, base, n) in [
        (C::H11Nilpotent, &z2, 8),
        (C::H11Delta, &z2, 8),
        (C::H11Idempotent, &z2, 8),
        (C::K0Nilpotent, &z4, 256),
        (C::K0Delta, &z4, 256),
        (C::K0Idempotent, &z4, 256),
    ] {
        let rep = verify_characterization(c, base, &L).map_err(|e| e.to_string())?;
        let disagree: Vec<String> = rep
            .instances
            .iter()
            .filter(|i| i.verdict != Verdict::Confirmed)
            .map(|i| format!("{} {}", i.ring, i.detail))
            .collect();
        ensure(disagree.is_empty(), || format!("{c}: {}", disagree.join("; ")))?;
        checked.push(format!("{c}/{n}"));
    }
    ensure((ring("Hst(1,1,Z2)").order(), ring("K(0,Z4)").order()) == (8, 256), || "orders".into())?;
    let k = ring("K(0,Z7)");
    let a = k.parse_elem("[[1,0],[1,1]]").unwrap();
    let a2 = k.mul(a, a);
    ensure(k.label(a2) == "[[1,0],[2,1]]" && !k.idempotent_elements().contains(a), || format!("A² = {}", k.label(a2)))?;
    Ok(format!("{}; K0(Z7): A² = [[1,0],[2,1]] ≠ A", checked.join(", ")))
}

fn c9() -> Outcome {
    let u = ring("U(2,Z2)");
    let px = SkewPolyRing::ordinary(&u);
    let a = px.parse(&["[[1,0],[0,0]]", "[[0,1],[0,0]]"]).unwrap();
    ensure(px.mul(&a, &a) == a, || "A² ≠ A".into())?;

    let r3 = ring("prod(Z3,Z3)");
    let p3 = SkewPolyRing::new(&r3, RingAutomorphism::coordinate_swap(&r3).unwrap());
    let f = p3.parse(&["(0,0)", "(1,0)", "(1,2)", "(0,2)"]).unwrap();
    ensure(p3.mul(&f, &f).is_zero(), || format!("f² = {}", p3.render(&p3.mul(&f, &f))))?;
    ensure(!r3.nilpotent_elements().contains(f.coeff(2).unwrap()), || "x² coefficient nilpotent".into())?;

    let r2 = ring("prod(Z2,Z2)");
    let p2 = SkewPolyRing::new(&r2, RingAutomorphism::coordinate_swap(&r2).unwrap());
    let g = p2.parse(&["(0,0)", "(1,0)"]).unwrap();
    ensure(p2.mul(&g, &g).is_zero(), || "((1,0)x)² ≠ 0".into())?;

    ensure(armendariz_witness(&u, 1, &L).unwrap().is_some(), || "no witness over U2(Z2)".into())?;
    ensure(armendariz_witness(&ring("Z4"), 1, &L).unwrap().is_none(), || "witness over Z4".into())?;
    Ok("A² = A, f² = 0 over (Z3×Z3)[x;σ], ((1,0)x)² = 0, Armendariz U2(Z2) yes / Z4 no".into())
}

fn c10() -> Outcome {
    let cat = Catalog::build(Tier::Large, &L).map_err(|e| e.to_string())?;
    let rings: Vec<_> = cat.tier(Tier::Large).collect();
    // (ring, e) pairs where a law fails, plus the count of pairs examined.
    let results: Vec<(Vec<String>, usize, bool)> = rings
        .par_iter()
        .map(|entry| {
            let r = &entry.ring;
            let d = delta(r);
            let mut bad = Vec::new();
            let idem = r.nonzero_idempotents();
            for &e in &idem {
                let c = corner(r, e).unwrap();
                let dc = c.image(&delta(&c.ring));
                let ede = ElementSubset::from_elems(r.order(), d.iter().map(|x| r.mul3(e, x, e)));
                if dc != ede || dc != c.carrier().intersect(&d) {
                    bad.push(format!("{} e={}", entry.name, r.label(e)));
                }
            }
            let semiprime = r.is_two_sided(&d) && radicals::semiprime_witness(r, &d).is_none();
            (bad, idem.len(), semiprime)
        })
        .collect();
    let pairs: usize = results.iter().map(|r| r.1).sum();
    let corner_bad: Vec<&String> = results.iter().flat_map(|r| &r.0).collect();
    let not_semiprime = results.iter().filter(|r| !r.2).count();
    let laws = paper_regression(&cat, Some("delta.product")).map_err(|e| e.to_string())?;
    let image = paper_regression(&cat, Some("delta.image")).map_err(|e| e.to_string())?;
    let mut failures = bad_reports(&laws, &[Verdict::Confirmed]);
    failures.extend(bad_reports(&image, &[Verdict::Confirmed]));
    if !corner_bad.is_empty() {
        failures.push(format!(
            "corner law fails on {} of {pairs} ring/idempotent pairs, first {}",
            corner_bad.len(),
            corner_bad[0]
        ));
    }
    if not_semiprime > 0 {
        failures.push(format!("δ not semiprime on {not_semiprime} rings"));
    }
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("corner law on {pairs} pairs, product and image laws, semiprime δ on {} rings", rings.len()))
}

fn c11() -> Outcome {
    let r = ring("freealg16");
    let (add, mul) = r.table_rows();
    ensure(r.order() == 16 && exhaustive_axiom_check(&add, &mul, r.one().map(|o| o.idx())).is_none(), || "axioms".into())?;
    let facts = RingFacts::new(&r, &L);
    ensure(check(P::Semisimple, &facts, Params::default()).is_ok(), || "δ unavailable".into())?;
    let a = radicals::delta_via_essential_maximal(&r, &L).unwrap().into_subset();
    let routes = [
        radicals::delta_via_summand(&r, &L).unwrap().into_subset(),
        radicals::delta_via_semisimple_complement(&r, &L).unwrap().into_subset(),
        radicals::delta_via_socle_lift(&r, &L).unwrap().into_subset(),
        radicals::delta_quasi_regular(&r).unwrap().into_subset(),
    ];
    ensure(routes.iter().all(|x| *x == a), || "routes disagree".into())?;
    let cat = Catalog::build(Tier::Small, &L).map_err(|e| e.to_string())?;
    let reps = regression_entry(&cat, "freealg.soc_delta").map_err(|e| e.to_string())?;
    let main = reps.iter().find(|r| r.id == "freealg.soc_delta").ok_or("no report")?;
    ensure(main.verdict == Verdict::Divergence && is_whitelisted(&main.id), || format!("verdict {}", main.verdict.name()))?;
    let flagged = main.count(Verdict::Divergence);
    Ok(format!("axioms hold, 5 routes give |δ| = {}, report flags {flagged} divergence(s)", a.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("δ of Z16 and of 4Z16", 1, c1),
        ("δ and N of U2(Z2), M2(Z2), M2(Z4)", 30, c2),
        ("route agreement on the catalog", 180, c3),
        ("M2(Z4) Zhou counterexample", 30, c4),
        ("Dorroh extension D(Z2,T4)", 5, c5),
        ("Maschke group ring Z3[C2]", 5, c6),
        ("implication suite", 300, c7),
        ("Hst and K0 characterizations", 60, c8),
        ("skew polynomial identities", 60, c9),
        ("corner, product and image laws, semiprime δ", 120, c10),
        ("free-algebra 16-element ring", 5, c11),
    ];
    println!("\nacceptance criteria");
    let mut failed = Vec::new();
    for (n, (title, limit, f)) in criteria.iter().enumerate() {
        let n = n + 1;
        let t = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let took = t.elapsed();
        let res = match res {
            Ok(_) if took > Duration::from_secs(*limit) => Err(format!("over the {limit} s limit")),
            r => r,
        };
        let secs = took.as_secs_f64();
        match res {
            Ok(d) => println!("criterion {n:>2} PASS {secs:>7.2}s (limit {limit}s) {title}: {d}"),
            Err(d) => {
                println!("criterion {n:>2} FAIL {secs:>7.2}s (limit {limit}s) {title}: {d}");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
