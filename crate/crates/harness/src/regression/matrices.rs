//! Subrings of matrix rings: H_3(Z_m, R), H_(s,t)(R), K_0(R), and the free-algebra example.

use rayon::prelude::*;
use zhou_core::constructors::{h3, matrix_full, zmod};
use zhou_core::predicates::{PredicateId as P, RingFacts};
use zhou_core::{radicals, Elem, ElementSubset, FiniteRing, Result};

use super::{compare, delta, proper_two_sided, show, zhou, zhou_right_everywhere, Ctx};
use crate::characterization::{diagonal_set, verify_characterization, Characterization as C};
use crate::report::{Instance, Scope, TheoremReport, Verdict};

fn characterizations(ctx: &Ctx<'_>, id: &str, statement: &str, jobs: &[(C, &str)]) -> Result<TheoremReport> {
    let reports: Vec<Result<TheoremReport>> = jobs
        .par_iter()
        .map(|&(c, base)| verify_characterization(c, &ctx.ring(base)?, &ctx.limits))
        .collect();
    let mut rep = TheoremReport::new(id, statement, Scope::Universal);
    for (r, &(c, base)) in reports.into_iter().zip(jobs) {
        match r {
            Ok(r) => rep.instances.extend(r.instances.into_iter().map(|i| i.param("criterion", c.name()))),
            Err(e) => rep.push(Instance::new(base, Verdict::Refused, e.to_string()).param("criterion", c.name())),
        }
    }
    Ok(rep.finish())
}

fn is_simple(r: &FiniteRing, ctx: &Ctx<'_>) -> Result<bool> {
    Ok(proper_two_sided(r, &ctx.limits)?.is_empty())
}

pub fn h3_nilpotent(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let jobs = [(C::H3Nilpotent, "Z2"), (C::H3Nilpotent, "Z3"), (C::H3Nilpotent, "Z4"), (C::H3Nilpotent, "prod(Z2,Z2)")];
    Ok(vec![characterizations(
        ctx,
        "h3.nilpotent",
        "A ∈ H_3(Z_m, R) is nilpotent iff n is nilpotent in Z_m (n = 0 over Z) and the middle diagonal entry is nilpotent",
        &jobs,
    )?])
}

pub fn h3_delta_formula(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let mut rows = Vec::new();
    for (m, base) in [(2, "Z2"), (3, "Z3"), (4, "Z4"), (2, "prod(Z2,Z2)")] {
        let b = ctx.ring(base)?;
        let h = h3(m, &b, &ctx.limits)?;
        let simple = is_simple(&b, ctx)?;
        let db = delta(&b, &ctx.limits)?;
        let claimed = ElementSubset::from_predicate(h.order(), |x| {
            let c = h.coords_of(x).expect("H3 coordinates");
            c[0].idx() == 0 && if simple { c[3] == b.zero() } else { db.contains(c[3]) }
        });
        let name = format!("H3({m},{base})");
        let what = if simple { "simple R: zero in the middle diagonal entry" } else { "δ(R) in the middle diagonal entry" };
        rows.push(compare(&name, &h, &claimed, &delta(&h, &ctx.limits)?, Verdict::Divergence, what));
    }
    Ok(vec![TheoremReport::new(
        "h3.delta_formula",
        "δ(H_3(Z_m, R)) is the set with n = 0 and middle entry 0 when R is simple, middle entry in δ(R) otherwise",
        Scope::Universal,
    )
    .with(rows)])
}

/// `H_3` over a ring too large to tabulate, as `(n, a1, a2, a3, a4)` with `n ∈ Z_m`.
struct BlockH3<'r> {
    r: &'r FiniteRing,
    m: i64,
}

type Block = (i64, [Elem; 4]);

impl BlockH3<'_> {
    fn mul(&self, x: &Block, y: &Block) -> Block {
        let r = self.r;
        let (n, [a1, a2, a3, a4]) = *x;
        let (k, [b1, b2, b3, b4]) = *y;
        let s = |a: Elem, b: Elem| r.add(a, b);
        (
            (n * k).rem_euclid(self.m),
            [
                s(r.smul(n, b1), r.mul(a1, b3)),
                s(s(r.smul(n, b2), r.mul(a1, b4)), r.smul(k, a2)),
                r.mul(a3, b3),
                s(r.mul(a3, b4), r.smul(k, a4)),
            ],
        )
    }

    fn add(&self, x: &Block, y: &Block) -> Block {
        let r = self.r;
        ((x.0 + y.0).rem_euclid(self.m), std::array::from_fn(|i| r.add(x.1[i], y.1[i])))
    }

    fn elements(&self) -> impl Iterator<Item = Block> + '_ {
        let n = self.r.order();
        (0..self.m).flat_map(move |k| {
            (0..n.pow(4)).map(move |mut i| {
                (k, std::array::from_fn(|_| {
                    let e = Elem((i % n) as u32);
                    i /= n;
                    e
                }))
            })
        })
    }

    /// Additive basis over Z2: `n = 1` and the matrix units in each block.
    fn basis(&self) -> Vec<Block> {
        let r = self.r;
        let z = r.zero();
        let bz = r.entry(z, 0, 0);
        let cells = [(0, 0), (0, 1), (1, 0), (1, 1)];
        let units: Vec<Elem> =
            r.elements().filter(|&x| cells.iter().filter(|&&(i, j)| r.entry(x, i, j) != bz).count() == 1).collect();
        let mut out = vec![(1, [z; 4])];
        for slot in 0..4 {
            for &u in &units {
                let mut a = [z; 4];
                a[slot] = u;
                out.push((0, a));
            }
        }
        out
    }

    /// The second row of the middle entry, which indexes the cosets of `K`.
    fn coset(&self, x: &Block) -> (Elem, Elem) {
        let e = |j| self.r.entry(x.1[2], 1, j).expect("2x2 entry");
        (e(0), e(1))
    }

    /// Membership in `K = {x : second row of the middle entry is zero}` when `K` is
    /// verified to be a maximal and essential right ideal (blockwise, over all
    /// elements), otherwise `None`. Over `M_2(Z2)` only.
    fn maximal_essential_certificate(&self) -> Option<impl Fn(&Block) -> bool + '_> {
        let zero = self.coset(&(0, [self.r.zero(); 4]));
        let in_k = move |x: &Block| self.coset(x) == zero;
        let basis = self.basis();
        let right_ideal = basis.iter().filter(|x| in_k(x)).all(|x| basis.iter().all(|y| in_k(&self.mul(x, y))));
        // Cosets reached from each nonzero coset under right multiplication and sums.
        let reps: Vec<Block> = {
            let mut seen = Vec::new();
            let mut out = Vec::new();
            for x in &basis {
                let c = self.coset(x);
                if c != zero && !seen.contains(&c) {
                    seen.push(c);
                    out.push(*x);
                }
            }
            out
        };
        let z = self.r.zero();
        let mut cosets: Vec<(Elem, Elem)> = self.r.elements().map(|a| self.coset(&(0, [z, z, a, z]))).collect();
        cosets.sort();
        cosets.dedup();
        let total = cosets.len();
        let maximal = total > 1
            && reps.iter().all(|start| {
                let mut orbit = vec![*start];
                let mut seen = vec![zero, self.coset(start)];
                let mut i = 0;
                while i < orbit.len() {
                    let s = orbit[i];
                    let mut next: Vec<Block> = basis.iter().map(|y| self.mul(&s, y)).collect();
                    next.extend(orbit.iter().map(|t| self.add(&s, t)));
                    for x in next {
                        let c = self.coset(&x);
                        if !seen.contains(&c) {
                            seen.push(c);
                            orbit.push(x);
                        }
                    }
                    i += 1;
                }
                seen.len() == total
            });
        let essential = self.elements().all(|x| {
            self.is_zero(&x)
                || in_k(&x)
                || basis.iter().any(|y| {
                    let p = self.mul(&x, y);
                    in_k(&p) && !self.is_zero(&p)
                })
        });
        (right_ideal && maximal && essential).then_some(in_k)
    }

    fn is_zero(&self, x: &Block) -> bool {
        x.0 == 0 && x.1.iter().all(|&a| a == self.r.zero())
    }

    fn render(&self, x: &Block) -> String {
        let l = |a: Elem| self.r.label(a).to_string();
        format!("[[{},{},{}],[0,{},{}],[0,0,{}]]", x.0, l(x.1[0]), l(x.1[1]), l(x.1[2]), l(x.1[3]), x.0)
    }
}

pub fn h3_theorem(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let l = &ctx.limits;
    let mut rows = Vec::new();
    // Simple R for which every idempotent works.
    for (m, base) in [(2, "Z2"), (3, "Z3")] {
        let h = h3(m, &ctx.ring(base)?, l)?;
        let facts = RingFacts::new(&h, l);
        let mut all = true;
        for e in h.nonzero_idempotents() {
            all &= zhou(P::ZhouRightEReduced, &facts, e)? && zhou(P::ZhouLeftEReduced, &facts, e)?;
        }
        rows.push(
            Instance::check(format!("H3({m},{base})"), all, Verdict::Counterexample, "Zhou right and left E-reduced for every E")
                .param("part", "simple, every E"),
        );
    }
    // Simple R = M_2(Z2): the stated A and E, computed blockwise.
    let z2 = zmod(2, l)?;
    let m2 = matrix_full(2, &z2, l)?.with_name("M(2,Z2)");
    let hb = BlockH3 { r: &m2, m: 2 };
    let p = |s: &str| m2.parse_elem(s);
    let (x, y, z, t, i2) = (p("[[1,1],[0,0]]")?, p("[[0,0],[1,0]]")?, p("[[0,0],[0,1]]")?, m2.zero(), m2.unit()?);
    let a: Block = (0, [x, t, y, z]);
    let e: Block = (0, [t, t, i2, i2]);
    let mut power = a;
    let mut nil_index = None;
    for k in 2..=8 {
        power = hb.mul(&power, &a);
        if hb.is_zero(&power) {
            nil_index = Some(k);
            break;
        }
    }
    let (ae, ea) = (hb.mul(&a, &e), hb.mul(&e, &a));
    let expected_ae: Block = (0, [x, x, y, y]);
    let expected_ea: Block = (0, [t, t, y, z]);
    rows.push(
        Instance::check(
            "H3(2,M(2,Z2))",
            nil_index.is_some() && hb.mul(&e, &e) == e && ae == expected_ae && ea == expected_ea,
            Verdict::Counterexample,
            "A is nilpotent, E is idempotent, AE and EA as stated",
        )
        .param("part", "simple, some E fails")
        .witness(vec![("AE".into(), hb.render(&ae)), ("EA".into(), hb.render(&ea))]),
    );
    // δ is the intersection of the essential maximal right ideals, so one such ideal
    // missing AE and EA settles both non-memberships without tabulating the ring.
    let cert = hb.maximal_essential_certificate();
    let outside = cert.as_ref().map(|k| !k(&ae) && !k(&ea));
    rows.push(
        Instance::check(
            "H3(2,M(2,Z2))",
            matches!(outside, Some(true)),
            if outside.is_some() { Verdict::Counterexample } else { Verdict::Refused },
            "AE ∉ δ and EA ∉ δ: K = {middle entry with zero second row} is an essential maximal right ideal missing both",
        )
        .param("part", "simple, some E fails"),
    );
    // R = Z4, not simple, with E = [[0,1,0],[0,1,0],[0,0,0]].
    let h = h3(4, &ctx.ring("Z4")?, l)?;
    let facts = RingFacts::new(&h, l);
    let e = h.parse_elem("[[0,1,0],[0,1,0],[0,0,0]]")?;
    let ok = h.mul(e, e) == e && zhou(P::ZhouRightEReduced, &facts, e)? && zhou(P::ZhouLeftEReduced, &facts, e)?;
    rows.push(
        Instance::check("H3(4,Z4)", ok, Verdict::Counterexample, "Zhou right and left E-reduced")
            .param("part", "not simple, some E")
            .param("E", h.label(e)),
    );
    Ok(vec![TheoremReport::new(
        "h3.theorem",
        "H_3(Z_m, R) is Zhou E-reduced for every E over some simple R, fails for some E over another simple R, and holds for some E over a non-simple R",
        Scope::Exact,
    )
    .with(rows)])
}

pub fn hst_lemma(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let names = ["Hst(1,1,Z2)", "Hst(1,1,Z3)", "Hst(1,2,Z3)", "Hst(2,2,Z3)", "Hst(1,1,Z4)", "Hst(1,3,Z4)", "Hst(3,3,Z4)", "Hst(1,1,U(2,Z2))"];
    let bases = ["Z2", "Z3", "Z3", "Z3", "Z4", "Z4", "Z4", "U(2,Z2)"];
    let rows: Vec<Instance> = names
        .par_iter()
        .zip(bases.par_iter())
        .map(|(&name, &base)| {
            let run = || -> Result<Instance> {
                let h = ctx.ring(name)?;
                let b = ctx.ring(base)?;
                let claimed = diagonal_set(&h, &[(0, 0), (1, 1), (2, 2)], &b.nilpotent_elements());
                Ok(compare(name, &h, &claimed, &h.nilpotent_elements(), Verdict::Counterexample, "A nilpotent iff a, d, g nilpotent"))
            };
            run().unwrap_or_else(|e| Instance::new(name, Verdict::Refused, e.to_string()))
        })
        .collect();
    let general = TheoremReport::new(
        "hst.nilpotent",
        "A ∈ H_(s,t)(R) is nilpotent iff its diagonal entries a, d, g are",
        Scope::Universal,
    )
    .with(rows);
    let mut jobs = Vec::new();
    for base in ["Z2", "Z3", "Z4", "U(2,Z2)"] {
        for c in [C::H11Nilpotent, C::H11Delta, C::H11Idempotent] {
            jobs.push((c, base));
        }
    }
    let diag = characterizations(
        ctx,
        "hst.lemma",
        "in H_(1,1)(R): A is nilpotent, lies in δ, or is idempotent iff a, d, g are nilpotent, lie in δ(R), or are idempotent",
        &jobs,
    )?;
    Ok(vec![general, diag])
}

fn transfer(ctx: &Ctx<'_>, id: &str, statement: &str, pairs: &[(&str, String)]) -> TheoremReport {
    let rows: Vec<Instance> = pairs
        .par_iter()
        .map(|(base, big)| {
            let run = || -> Result<Instance> {
                let r = ctx.ring(base)?;
                let h = ctx.ring(big)?;
                let a = zhou_right_everywhere(&r, &ctx.limits)?;
                let b = zhou_right_everywhere(&h, &ctx.limits)?;
                Ok(Instance::check(big.as_str(), a == b, Verdict::Counterexample, format!("R: {a}, extension: {b}")))
            };
            run().unwrap_or_else(|e| Instance::new(big.as_str(), Verdict::Refused, e.to_string()))
        })
        .collect();
    TheoremReport::new(id, statement, Scope::Universal).with(rows)
}

const TRANSFER_BASES: [&str; 8] = ["Z2", "Z3", "Z4", "Z6", "Z8", "prod(Z2,Z2)", "U(2,Z2)", "dorroh(Z2,sgT)"];

pub fn hst_theorem(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let pairs: Vec<(&str, String)> = TRANSFER_BASES.iter().map(|&b| (b, format!("Hst(1,1,{b})"))).collect();
    Ok(vec![transfer(
        ctx,
        "hst.theorem",
        "R is Zhou right e-reduced for every e iff H_(1,1)(R) is Zhou right E-reduced for every E",
        &pairs,
    )])
}

pub fn k0_lemma(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let mut jobs = Vec::new();
    for base in ["Z2", "Z3", "Z4", "Z5"] {
        for c in [C::K0Nilpotent, C::K0Delta, C::K0Idempotent] {
            jobs.push((c, base));
        }
    }
    Ok(vec![characterizations(
        ctx,
        "k0.lemma",
        "in K_0(R): A is nilpotent iff a, b are; A lies in δ iff a, b lie in δ(R); idempotent A has idempotent a, b",
        &jobs,
    )?])
}

pub fn k0_example(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let name = "K(0,Z7)";
    let k = ctx.ring(name)?;
    let a = k.parse_elem("[[1,0],[1,1]]")?;
    let a2 = k.mul(a, a);
    let idem = k.idempotent_elements();
    let z7 = ctx.ring("Z7")?;
    let diag_idem = [(0, 0), (1, 1)].iter().all(|&(i, j)| k.entry(a, i, j).is_some_and(|v| z7.mul(v, v) == v));
    let rows = vec![
        Instance::check(
            name,
            k.label(a2) == "[[1,0],[2,1]]" && a2 != a && !idem.contains(a) && diag_idem,
            Verdict::Counterexample,
            "A = [[1,0],[1,1]] has idempotent diagonal, A² = [[1,0],[2,1]] ≠ A",
        )
        .values("[[1,0],[2,1]]", k.label(a2)),
    ];
    let mut converse = verify_characterization(C::K0IdempotentConverse, &z7, &ctx.limits)?;
    converse.id = "k0.idempotent_converse".into();
    Ok(vec![TheoremReport::new("k0.example", "in K_0(Z7), A = [[1,0],[1,1]] is not idempotent", Scope::Exact).with(rows), converse])
}

pub fn k0_theorem(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let pairs: Vec<(&str, String)> =
        ["Z2", "Z3", "Z4", "Z5", "Z6", "prod(Z2,Z2)"].iter().map(|&b| (b, format!("K(0,{b})"))).collect();
    Ok(vec![transfer(
        ctx,
        "k0.theorem",
        "R is Zhou right e-reduced for every e iff K_0(R) is Zhou right E-reduced for every E",
        &pairs,
    )])
}

const FREE_ELEMENTS: [&str; 16] = [
    "0", "1", "a", "b", "ba", "a+b", "a+ba", "b+ba", "a+b+ba", "1+a", "1+b", "1+ba", "1+a+b", "1+a+ba", "1+b+ba", "1+a+b+ba",
];

pub fn freealg(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let l = &ctx.limits;
    let name = "freealg16";
    let r = ctx.ring(name)?;
    let set = |ls: &[&str]| -> Result<ElementSubset> {
        let v = ls.iter().map(|s| r.parse_elem(s)).collect::<Result<Vec<_>>>()?;
        Ok(ElementSubset::from_elems(r.order(), v))
    };
    let mut rows = vec![Instance::check(
        name,
        set(&FREE_ELEMENTS)?.is_full() && r.order() == 16,
        Verdict::Divergence,
        "the 16 listed elements are the ring",
    )];
    let routes = [
        radicals::delta_via_essential_maximal(&r, l)?.into_subset(),
        radicals::delta_via_summand(&r, l)?.into_subset(),
        radicals::delta_via_semisimple_complement(&r, l)?.into_subset(),
        radicals::delta_via_socle_lift(&r, l)?.into_subset(),
        radicals::delta_quasi_regular(&r)?.into_subset(),
    ];
    let d = routes[0].clone();
    rows.push(Instance::check(name, routes.iter().all(|x| *x == d), Verdict::Counterexample, "all δ routes agree"));
    let nil = set(&["0", "ba"])?;
    rows.push(compare(name, &r, &nil, &r.nilpotent_elements(), Verdict::Divergence, "ba is the only nonzero nilpotent"));
    let minimal = radicals::minimal_right_ideals(&r, l)?;
    for g in ["a", "ba", "1+a+b+ba", "a+ba"] {
        let x = r.parse_elem(g)?;
        let c = r.cyclic_right_ideal(x).into_subset();
        let is_min = minimal.iter().any(|m| m.as_subset() == &c);
        rows.push(
            Instance::check(name, c == set(&["0", g])? && is_min, Verdict::Divergence, format!("({g})R = {{0, {g}}} is a minimal right ideal"))
                .values(format!("{{0,{g}}}"), format!("{} minimal {is_min}", show(&r, &c))),
        );
    }
    let soc = radicals::socle(&r, l)?.into_subset();
    let listed = ["a", "ba", "1+a+b+ba", "a+ba"].iter().try_fold(r.zero_set(), |acc, g| {
        Ok::<_, zhou_core::Error>(r.subgroup_sum(&acc, r.cyclic_right_ideal(r.parse_elem(g)?).as_subset()))
    })?;
    rows.push(compare(name, &r, &listed, &soc, Verdict::Divergence, "Soc(R) is the sum of the four cyclic ideals"));
    rows.push(
        Instance::check(name, listed.len() == 16, Verdict::Divergence, "the sum of the four cyclic ideals is direct")
            .values("order 2⁴ = 16", format!("order {}", listed.len())),
    );
    rows.push(compare(name, &r, &soc, &d, Verdict::Divergence, "Soc(R) = δ(R)"));
    Ok(vec![TheoremReport::new(
        "freealg.soc_delta",
        "R = Z2<a,b>/(aAb, a² − a, b² − b) with A the free algebra: the listed elements, ba the unique nonzero nilpotent, four minimal cyclic right ideals, Soc(R) their direct sum and Soc(R) = δ(R)",
        Scope::Exact,
    )
    .with(rows)])
}

pub fn freealg_u2(ctx: &Ctx<'_>) -> Result<Vec<TheoremReport>> {
    let l = &ctx.limits;
    let r = ctx.ring("freealg16")?;
    let name = "U(2,freealg16)";
    let u = ctx.ring(name)?;
    let (d, nil) = (delta(&r, l)?, r.nilpotent_elements());
    let du = delta(&u, l)?;
    let z = r.zero();
    let claimed = super::entry_set(&u, 2, |i, j, v| if i == j { d.contains(v) } else { i < j || v == z });
    let claimed_n = super::entry_set(&u, 2, |i, j, v| if i == j { nil.contains(v) } else { i < j || v == z });
    let facts = RingFacts::new(&u, l);
    let mut bad = None;
    for e in u.nonzero_idempotents() {
        if !(zhou(P::ZhouRightEReduced, &facts, e)? && zhou(P::ZhouLeftEReduced, &facts, e)?) {
            bad = Some(e);
            break;
        }
    }
    let nd = facts.nilpotents().is_subset(&du);
    let mut zi = Instance::check(name, bad.is_none() && nd, Verdict::Counterexample, "N ⊆ δ and Zhou right and left E-reduced for every E");
    if let Some(e) = bad {
        zi = zi.param("E", u.label(e));
    }
    let rows = vec![
        compare(name, &u, &claimed, &du, Verdict::Divergence, "δ(U_2(R)) = [[δ(R),R],[0,δ(R)]]"),
        compare(name, &u, &claimed_n, facts.nilpotents(), Verdict::Divergence, "nilpotents have diagonal in {0, ba}"),
        zi,
    ];
    Ok(vec![TheoremReport::new(
        "freealg.soc_delta.u2",
        "over the same R: δ(U_2(R)) = [[δ(R),R],[0,δ(R)]], N(U_2(R)) ⊆ δ(U_2(R)), and U_2(R) is Zhou E-reduced for every E",
        Scope::Exact,
    )
    .with(rows)])
}
