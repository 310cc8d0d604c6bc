//! Ring-class predicates decided by exhaustive quantifier evaluation.
//!
//! A failing check carries the lexicographically first violating tuple
//! (element-index order) and [`replay`] re-derives the violation from it.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::element::Elem;
use crate::error::{Error, Result};
use crate::radicals;
use crate::ring::{FiniteRing, Limits};
use crate::subset::ElementSubset;

macro_rules! predicate_ids {
    ($($variant:ident => $name:literal, $depth:literal, $needs_e:literal;)*) => {
        /// Stable predicate identifiers.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum PredicateId { $($variant),* }

        impl PredicateId {
            pub const ALL: &'static [PredicateId] = &[$(PredicateId::$variant),*];

            pub fn name(self) -> &'static str {
                match self { $(PredicateId::$variant => $name),* }
            }

            /// Quantifier depth `k` of the evaluation loop bound `|R|^k`.
            pub fn depth(self) -> u32 {
                match self { $(PredicateId::$variant => $depth),* }
            }

            pub fn needs_e(self) -> bool {
                match self { $(PredicateId::$variant => $needs_e),* }
            }

            pub fn from_name(s: &str) -> Result<PredicateId> {
                match s {
                    $($name => Ok(PredicateId::$variant),)*
                    _ => Err(Error::UnknownPredicate(s.to_string())),
                }
            }
        }
    };
}

predicate_ids! {
    Reduced => "reduced", 1, false;
    EReducedRight => "e_reduced_right", 1, true;
    EReducedLeft => "e_reduced_left", 1, true;
    CentralReduced => "central_reduced", 2, false;
    QuasiReduced => "quasi_reduced", 3, false;
    JReduced => "j_reduced", 1, false;
    Symmetric => "symmetric", 3, false;
    WeaklySymmetric => "weakly_symmetric", 5, false;
    WeakSymmetric => "weak_symmetric", 3, false;
    ESymmetric => "e_symmetric", 3, true;
    WeakESymmetric => "weak_e_symmetric", 3, true;
    Semicommutative => "semicommutative", 3, false;
    CentralSemicommutative => "central_semicommutative", 3, false;
    ESemicommutativeRight => "e_semicommutative_right", 3, true;
    ESemicommutativeLeft => "e_semicommutative_left", 3, true;
    JSemicommutative => "j_semicommutative", 3, false;
    ZhouRightEReduced => "zhou_right_e_reduced", 1, true;
    ZhouLeftEReduced => "zhou_left_e_reduced", 1, true;
    ZhouEReduced => "zhou_e_reduced", 1, true;
    RightDuo => "right_duo", 3, false;
    LeftDuo => "left_duo", 3, false;
    RightQuasiDuo => "right_quasi_duo", 3, false;
    LeftQuasiDuo => "left_quasi_duo", 3, false;
    Abelian => "abelian", 2, false;
    Semisimple => "semisimple", 1, false;
}

impl fmt::Display for PredicateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evaluation parameters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Params {
    pub e: Option<Elem>,
    /// Permits `e = 0` (the identity is always allowed).
    pub allow_trivial_e: bool,
}

impl Params {
    pub fn with_e(e: Elem) -> Params {
        Params { e: Some(e), allow_trivial_e: false }
    }

    pub fn trivial_ok(mut self) -> Params {
        self.allow_trivial_e = true;
        self
    }
}

/// A violating instance of a predicate's defining condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Quantified variables in order.
    pub vars: Vec<(String, Elem)>,
    /// Values derived from the variables, for display.
    pub derived: Vec<(String, Elem)>,
    /// Members of the offending ideal, for the duo predicates.
    pub ideal: Option<Vec<Elem>>,
    pub condition: String,
}

impl Witness {
    fn new(condition: &str, vars: &[(&str, Elem)]) -> Witness {
        Witness {
            vars: vars.iter().map(|(n, e)| (n.to_string(), *e)).collect(),
            derived: Vec::new(),
            ideal: None,
            condition: condition.to_string(),
        }
    }

    fn derive(mut self, name: &str, e: Elem) -> Witness {
        self.derived.push((name.to_string(), e));
        self
    }

    pub fn var(&self, name: &str) -> Option<Elem> {
        self.vars.iter().find(|(n, _)| n == name).map(|(_, e)| *e)
    }

    /// `a=…, b=…` rendering with ring labels.
    pub fn render(&self, r: &FiniteRing) -> String {
        let mut parts: Vec<String> =
            self.vars.iter().chain(&self.derived).map(|(n, e)| format!("{n}={}", r.label(*e))).collect();
        if let Some(i) = &self.ideal {
            parts.push(format!("ideal of order {}", i.len()));
        }
        format!("{} ({})", parts.join(", "), self.condition)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateReport {
    pub id: PredicateId,
    pub e: Option<Elem>,
    pub verdict: bool,
    pub witness: Option<Witness>,
    /// Number of element tuples examined.
    pub cost: u64,
}

/// Lazily computed invariants shared by predicate checks on one ring.
pub struct RingFacts<'r> {
    pub ring: &'r FiniteRing,
    pub limits: Limits,
    nil: OnceLock<ElementSubset>,
    center: OnceLock<ElementSubset>,
    idem: OnceLock<ElementSubset>,
    jac: OnceLock<Result<ElementSubset>>,
    delta: OnceLock<Result<ElementSubset>>,
    opposite: OnceLock<FiniteRing>,
}

impl<'r> RingFacts<'r> {
    pub fn new(ring: &'r FiniteRing, limits: &Limits) -> Self {
        RingFacts {
            ring,
            limits: *limits,
            nil: OnceLock::new(),
            center: OnceLock::new(),
            idem: OnceLock::new(),
            jac: OnceLock::new(),
            delta: OnceLock::new(),
            opposite: OnceLock::new(),
        }
    }

    pub fn nilpotents(&self) -> &ElementSubset {
        self.nil.get_or_init(|| self.ring.nilpotent_elements())
    }

    pub fn center(&self) -> &ElementSubset {
        self.center.get_or_init(|| self.ring.center())
    }

    pub fn idempotents(&self) -> &ElementSubset {
        self.idem.get_or_init(|| self.ring.idempotent_elements())
    }

    pub fn jacobson(&self) -> Result<&ElementSubset> {
        self.jac
            .get_or_init(|| radicals::jacobson(self.ring, &self.limits).map(|j| j.into_subset()))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn delta(&self) -> Result<&ElementSubset> {
        self.delta
            .get_or_init(|| radicals::delta(self.ring, &self.limits).map(|d| d.into_subset()))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn opposite(&self) -> &FiniteRing {
        self.opposite.get_or_init(|| self.ring.opposite())
    }
}

/// Evaluates a predicate with a fresh fact cache.
pub fn check_predicate(id: PredicateId, r: &FiniteRing, params: Params, limits: &Limits) -> Result<PredicateReport> {
    check(id, &RingFacts::new(r, limits), params)
}

fn budget_check(id: PredicateId, order: usize, limits: &Limits) -> Result<()> {
    let bound = (order as u128).saturating_pow(id.depth());
    let budget = if id == PredicateId::WeaklySymmetric { limits.deep_budget } else { limits.budget };
    if bound > budget {
        return Err(Error::ComplexityRefusal { bound, budget });
    }
    Ok(())
}

/// Validates the idempotent parameter of an e-parameterized predicate.
pub fn resolve_e(id: PredicateId, r: &FiniteRing, params: Params) -> Result<Option<Elem>> {
    if !id.needs_e() {
        return Ok(None);
    }
    let e = params.e.ok_or_else(|| Error::MissingParameter(id.name().to_string()))?;
    if e.idx() >= r.order() {
        return Err(Error::Invalid(format!("element index {} out of range", e.0)));
    }
    r.check_idempotent(e)?;
    if e == r.zero() && !params.allow_trivial_e {
        return Err(Error::Invalid("the idempotent parameter must be nonzero".into()));
    }
    Ok(Some(e))
}

pub fn check(id: PredicateId, facts: &RingFacts<'_>, params: Params) -> Result<PredicateReport> {
    let r = facts.ring;
    let e = resolve_e(id, r, params)?;
    budget_check(id, r.order(), &facts.limits)?;
    let mut cost = 0u64;
    let witness = find_violation(id, facts, e, &mut cost)?;
    Ok(PredicateReport { id, e, verdict: witness.is_none(), witness, cost })
}

/// First `(a, b)` with `ab = 0`, followed by the first `r` failing `ok(a, b, r)`.
fn annihilating_pairs(
    r: &FiniteRing,
    cost: &mut u64,
    mut ok: impl FnMut(Elem, Elem, Elem) -> bool,
) -> Option<(Elem, Elem, Elem)> {
    for a in r.elements() {
        for b in r.elements() {
            *cost += 1;
            if r.mul(a, b) != r.zero() {
                continue;
            }
            for x in r.elements() {
                *cost += 1;
                if !ok(a, b, x) {
                    return Some((a, b, x));
                }
            }
        }
    }
    None
}

/// First `(a, b, c)` with `pre(abc)` and `!post(a, b, c)`.
fn triples(
    r: &FiniteRing,
    cost: &mut u64,
    pre: impl Fn(Elem) -> bool,
    post: impl Fn(Elem, Elem, Elem) -> bool,
) -> Option<(Elem, Elem, Elem)> {
    for a in r.elements() {
        for b in r.elements() {
            let ab = r.mul(a, b);
            for c in r.elements() {
                *cost += 1;
                if pre(r.mul(ab, c)) && !post(a, b, c) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

fn first_noncommuting(r: &FiniteRing, x: Elem) -> Option<Elem> {
    r.elements().find(|&s| r.mul(x, s) != r.mul(s, x))
}

fn find_violation(id: PredicateId, f: &RingFacts<'_>, e: Option<Elem>, cost: &mut u64) -> Result<Option<Witness>> {
    use PredicateId::*;
    let r = f.ring;
    let z = r.zero();
    let ev = || e.expect("validated");
    let nil = |x: Elem| f.nilpotents().contains(x);
    let w = match id {
        Reduced => f.nilpotents().iter().find(|&a| a != z).map(|a| Witness::new("a is a nonzero nilpotent", &[("a", a)])),
        EReducedRight => f.nilpotents().iter().find(|&a| r.mul(a, ev()) != z).map(|a| {
            Witness::new("a ∈ N(R) and ae ≠ 0", &[("a", a)]).derive("ae", r.mul(a, ev()))
        }),
        EReducedLeft => f.nilpotents().iter().find(|&a| r.mul(ev(), a) != z).map(|a| {
            Witness::new("a ∈ N(R) and ea ≠ 0", &[("a", a)]).derive("ea", r.mul(ev(), a))
        }),
        CentralReduced => f.nilpotents().iter().find_map(|a| {
            *cost += r.order() as u64;
            first_noncommuting(r, a).map(|s| Witness::new("a ∈ N(R) and as ≠ sa", &[("a", a), ("s", s)]))
        }),
        QuasiReduced => {
            let mut found = None;
            'outer: for a in r.elements() {
                let ar = r.cyclic_right_ideal(a);
                for b in r.elements() {
                    *cost += 1;
                    if r.mul(a, b) != z {
                        continue;
                    }
                    let rb = r.cyclic_left_ideal(b);
                    for x in ar.intersect(&rb).iter() {
                        *cost += 1;
                        if !f.center().contains(x) {
                            let s = first_noncommuting(r, x).expect("not central");
                            found = Some(Witness::new(
                                "ab = 0, x ∈ aR ∩ Rb and xs ≠ sx",
                                &[("a", a), ("b", b), ("x", x), ("s", s)],
                            ));
                            break 'outer;
                        }
                    }
                }
            }
            found
        }
        JReduced => {
            let j = f.jacobson()?;
            f.nilpotents().iter().find(|&a| !j.contains(a)).map(|a| Witness::new("a ∈ N(R) and a ∉ J(R)", &[("a", a)]))
        }
        Symmetric => triples(r, cost, |x| x == z, |a, b, c| r.mul3(a, c, b) == z)
            .map(|(a, b, c)| Witness::new("abc = 0 and acb ≠ 0", &[("a", a), ("b", b), ("c", c)]).derive("acb", r.mul3(a, c, b))),
        WeakSymmetric => triples(r, cost, nil, |a, b, c| nil(r.mul3(a, c, b))).map(|(a, b, c)| {
            Witness::new("abc ∈ N(R) and acb ∉ N(R)", &[("a", a), ("b", b), ("c", c)]).derive("acb", r.mul3(a, c, b))
        }),
        WeaklySymmetric => {
            let mut found = None;
            'outer: for a in r.elements() {
                for b in r.elements() {
                    let ab = r.mul(a, b);
                    for c in r.elements() {
                        *cost += 1;
                        if !nil(r.mul(ab, c)) {
                            continue;
                        }
                        let ac = r.mul(a, c);
                        for s in r.elements() {
                            let sac = r.mul(s, ac);
                            for t in r.elements() {
                                *cost += 1;
                                let v = r.mul(r.mul(sac, t), b);
                                if !nil(v) {
                                    found = Some(
                                        Witness::new(
                                            "abc ∈ N(R) and s·ac·t·b ∉ N(R)",
                                            &[("a", a), ("b", b), ("c", c), ("s", s), ("t", t)],
                                        )
                                        .derive("s·ac·t·b", v),
                                    );
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
            found
        }
        ESymmetric => triples(r, cost, |x| x == z, |a, b, c| r.mul(r.mul3(a, c, b), ev()) == z).map(|(a, b, c)| {
            Witness::new("abc = 0 and acbe ≠ 0", &[("a", a), ("b", b), ("c", c)]).derive("acbe", r.mul(r.mul3(a, c, b), ev()))
        }),
        WeakESymmetric => triples(r, cost, |x| x == z, |a, b, c| r.mul3(ev(), r.mul3(a, c, b), ev()) == z).map(|(a, b, c)| {
            Witness::new("abc = 0 and eacbe ≠ 0", &[("a", a), ("b", b), ("c", c)])
                .derive("eacbe", r.mul3(ev(), r.mul3(a, c, b), ev()))
        }),
        Semicommutative => annihilating_pairs(r, cost, |a, b, x| r.mul3(a, x, b) == z).map(|(a, b, x)| {
            Witness::new("ab = 0 and arb ≠ 0", &[("a", a), ("b", b), ("r", x)]).derive("arb", r.mul3(a, x, b))
        }),
        CentralSemicommutative => annihilating_pairs(r, cost, |a, b, x| f.center().contains(r.mul3(a, x, b))).map(|(a, b, x)| {
            let v = r.mul3(a, x, b);
            let s = first_noncommuting(r, v).expect("not central");
            Witness::new("ab = 0 and arb·s ≠ s·arb", &[("a", a), ("b", b), ("r", x), ("s", s)]).derive("arb", v)
        }),
        ESemicommutativeRight => annihilating_pairs(r, cost, |a, b, x| r.mul(r.mul3(a, x, b), ev()) == z).map(|(a, b, x)| {
            Witness::new("ab = 0 and arbe ≠ 0", &[("a", a), ("b", b), ("r", x)]).derive("arbe", r.mul(r.mul3(a, x, b), ev()))
        }),
        ESemicommutativeLeft => annihilating_pairs(r, cost, |a, b, x| r.mul(ev(), r.mul3(a, x, b)) == z).map(|(a, b, x)| {
            Witness::new("ab = 0 and earb ≠ 0", &[("a", a), ("b", b), ("r", x)]).derive("earb", r.mul(ev(), r.mul3(a, x, b)))
        }),
        JSemicommutative => {
            let j = f.jacobson()?;
            annihilating_pairs(r, cost, |a, b, x| j.contains(r.mul3(a, x, b))).map(|(a, b, x)| {
                Witness::new("ab = 0 and arb ∉ J(R)", &[("a", a), ("b", b), ("r", x)]).derive("arb", r.mul3(a, x, b))
            })
        }
        ZhouRightEReduced => zhou_right(f, ev())?,
        ZhouLeftEReduced => zhou_left(f, ev())?,
        ZhouEReduced => match zhou_right(f, ev())? {
            Some(w) => Some(w),
            None => zhou_left(f, ev())?,
        },
        RightDuo => duo(r, cost, false),
        LeftDuo => duo(r, cost, true),
        RightQuasiDuo => quasi_duo(r, &f.limits, cost, false)?,
        LeftQuasiDuo => quasi_duo(f.opposite(), &f.limits, cost, true)?,
        Abelian => f.idempotents().iter().find_map(|i| {
            *cost += r.order() as u64;
            first_noncommuting(r, i).map(|s| Witness::new("i is idempotent and is ≠ si", &[("i", i), ("s", s)]))
        }),
        Semisimple => {
            let d = f.delta()?;
            r.elements().find(|&a| !d.contains(a)).map(|a| Witness::new("a ∉ δ(R)", &[("a", a)]))
        }
    };
    if let Some(n) = f.nil.get() {
        *cost = (*cost).max(n.len() as u64);
    }
    Ok(w)
}

fn zhou_right(f: &RingFacts<'_>, e: Elem) -> Result<Option<Witness>> {
    let r = f.ring;
    let d = f.delta()?;
    Ok(f.nilpotents()
        .iter()
        .find(|&a| !d.contains(r.mul(a, e)))
        .map(|a| Witness::new("a ∈ N(R) and ae ∉ δ(R)", &[("a", a)]).derive("ae", r.mul(a, e))))
}

fn zhou_left(f: &RingFacts<'_>, e: Elem) -> Result<Option<Witness>> {
    let r = f.ring;
    let d = f.delta()?;
    Ok(f.nilpotents()
        .iter()
        .find(|&a| !d.contains(r.mul(e, a)))
        .map(|a| Witness::new("a ∈ N(R) and ea ∉ δ(R)", &[("a", a)]).derive("ea", r.mul(e, a))))
}

// Every one-sided ideal is a sum of cyclic ones, so checking cyclic ideals suffices.
fn duo(r: &FiniteRing, cost: &mut u64, left: bool) -> Option<Witness> {
    for a in r.elements() {
        let c = if left { r.cyclic_left_ideal(a).into_subset() } else { r.cyclic_right_ideal(a).into_subset() };
        for x in c.iter() {
            for s in r.elements() {
                *cost += 1;
                let y = if left { r.mul(x, s) } else { r.mul(s, x) };
                if !c.contains(y) {
                    let (cond, prod) = if left { ("x ∈ Ra and xs ∉ Ra", "xs") } else { ("x ∈ aR and sx ∉ aR", "sx") };
                    let mut w = Witness::new(cond, &[("a", a), ("x", x), ("s", s)]).derive(prod, y);
                    w.ideal = Some(c.to_vec());
                    return Some(w);
                }
            }
        }
    }
    None
}

// For the left variant `r` is the opposite ring, whose right ideals are the left ideals.
fn quasi_duo(r: &FiniteRing, limits: &Limits, cost: &mut u64, left: bool) -> Result<Option<Witness>> {
    let l = radicals::right_ideal_lattice(r, limits)?;
    let mut ids: Vec<usize> = l.maximal_ids().collect();
    ids.sort_by_key(|&x| l.ideal(x).to_vec());
    for m in ids {
        let set = l.ideal(m);
        for x in set.iter() {
            for s in r.elements() {
                *cost += 1;
                let y = r.mul(s, x);
                if !set.contains(y) {
                    let cond = if left { "M is a maximal left ideal, x ∈ M and xs ∉ M" } else { "M is a maximal right ideal, x ∈ M and sx ∉ M" };
                    let mut w = Witness::new(cond, &[("x", x), ("s", s)]).derive(if left { "xs" } else { "sx" }, y);
                    w.ideal = Some(set.to_vec());
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

/// Re-evaluates the defining condition at the witness; `true` means the witness
/// indeed violates the predicate.
pub fn replay(id: PredicateId, facts: &RingFacts<'_>, e: Option<Elem>, w: &Witness) -> Result<bool> {
    use PredicateId::*;
    let r = facts.ring;
    let z = r.zero();
    let v = |n: &str| w.var(n).ok_or_else(|| Error::Invalid(format!("witness lacks variable {n}")));
    let ev = || e.ok_or_else(|| Error::MissingParameter(id.name().to_string()));
    let nil = |x: Elem| facts.nilpotents().contains(x);
    let commute = |x: Elem, s: Elem| r.mul(x, s) == r.mul(s, x);
    Ok(match id {
        Reduced => {
            let a = v("a")?;
            a != z && r.nilpotency_index(a).is_some()
        }
        EReducedRight => nil(v("a")?) && r.mul(v("a")?, ev()?) != z,
        EReducedLeft => nil(v("a")?) && r.mul(ev()?, v("a")?) != z,
        CentralReduced => nil(v("a")?) && !commute(v("a")?, v("s")?),
        QuasiReduced => {
            let (a, b, x, s) = (v("a")?, v("b")?, v("x")?, v("s")?);
            r.mul(a, b) == z
                && r.cyclic_right_ideal(a).contains(x)
                && r.cyclic_left_ideal(b).contains(x)
                && !commute(x, s)
        }
        JReduced => nil(v("a")?) && !facts.jacobson()?.contains(v("a")?),
        Symmetric | ESymmetric | WeakESymmetric | WeakSymmetric => {
            let (a, b, c) = (v("a")?, v("b")?, v("c")?);
            let abc = r.mul3(a, b, c);
            let acb = r.mul3(a, c, b);
            match id {
                Symmetric => abc == z && acb != z,
                WeakSymmetric => nil(abc) && !nil(acb),
                ESymmetric => abc == z && r.mul(acb, ev()?) != z,
                _ => abc == z && r.mul3(ev()?, acb, ev()?) != z,
            }
        }
        WeaklySymmetric => {
            let (a, b, c, s, t) = (v("a")?, v("b")?, v("c")?, v("s")?, v("t")?);
            nil(r.mul3(a, b, c)) && !nil(r.mul(r.mul(r.mul(s, r.mul(a, c)), t), b))
        }
        Semicommutative | CentralSemicommutative | ESemicommutativeRight | ESemicommutativeLeft | JSemicommutative => {
            let (a, b, x) = (v("a")?, v("b")?, v("r")?);
            let arb = r.mul3(a, x, b);
            r.mul(a, b) == z
                && match id {
                    Semicommutative => arb != z,
                    CentralSemicommutative => !commute(arb, v("s")?),
                    ESemicommutativeRight => r.mul(arb, ev()?) != z,
                    ESemicommutativeLeft => r.mul(ev()?, arb) != z,
                    _ => !facts.jacobson()?.contains(arb),
                }
        }
        ZhouRightEReduced | ZhouLeftEReduced | ZhouEReduced => {
            let a = v("a")?;
            let d = facts.delta()?;
            let right = !d.contains(r.mul(a, ev()?));
            let left = !d.contains(r.mul(ev()?, a));
            nil(a)
                && match id {
                    ZhouRightEReduced => right,
                    ZhouLeftEReduced => left,
                    _ => right || left,
                }
        }
        RightDuo | LeftDuo => {
            let (a, x, s) = (v("a")?, v("x")?, v("s")?);
            if id == RightDuo {
                let c = r.cyclic_right_ideal(a);
                c.contains(x) && !c.contains(r.mul(s, x))
            } else {
                let c = r.cyclic_left_ideal(a);
                c.contains(x) && !c.contains(r.mul(x, s))
            }
        }
        RightQuasiDuo | LeftQuasiDuo => {
            let (x, s) = (v("x")?, v("s")?);
            let members = w.ideal.as_ref().ok_or_else(|| Error::Invalid("witness lacks its ideal".into()))?;
            let set = ElementSubset::from_elems(r.order(), members.iter().copied());
            let ring = if id == RightQuasiDuo { r } else { facts.opposite() };
            let l = radicals::right_ideal_lattice(ring, &facts.limits)?;
            let maximal = l.id_of(&set).is_some_and(|i| l.is_maximal(i));
            let y = if id == RightQuasiDuo { r.mul(s, x) } else { r.mul(x, s) };
            maximal && set.contains(x) && !set.contains(y)
        }
        Abelian => {
            let (i, s) = (v("i")?, v("s")?);
            r.mul(i, i) == i && !commute(i, s)
        }
        Semisimple => !facts.delta()?.contains(v("a")?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{matrix_full, matrix_upper, zmod};

    const L: Limits = Limits::DEFAULT;

    #[test]
    fn names_round_trip() {
        for &id in PredicateId::ALL {
            assert_eq!(PredicateId::from_name(id.name()).unwrap(), id);
        }
        assert!(matches!(PredicateId::from_name("nope"), Err(Error::UnknownPredicate(_))));
    }

    #[test]
    fn m2z4_counterexample() {
        let z4 = zmod(4, &L).unwrap();
        let m = matrix_full(2, &z4, &L).unwrap();
        let e = m.parse_elem("[[0,0],[3,1]]").unwrap();
        let facts = RingFacts::new(&m, &L);
        let rep = check(PredicateId::ZhouRightEReduced, &facts, Params::with_e(e)).unwrap();
        assert!(!rep.verdict);
        let w = rep.witness.unwrap();
        assert_eq!(m.label(w.var("a").unwrap()), "[[0,1],[0,0]]");
        assert_eq!(m.label(w.derived[0].1), "[[3,1],[0,0]]");
        assert!(replay(PredicateId::ZhouRightEReduced, &facts, Some(e), &w).unwrap());
    }

    #[test]
    fn u2_is_not_semicommutative() {
        let z2 = zmod(2, &L).unwrap();
        let u = matrix_upper(2, &z2, &L).unwrap();
        let rep = check_predicate(PredicateId::Semicommutative, &u, Params::default(), &L).unwrap();
        let w = rep.witness.unwrap();
        let names: Vec<&str> = w.vars.iter().map(|(_, e)| u.label(*e)).collect();
        assert_eq!(names, ["[[1,0],[0,0]]", "[[0,0],[0,1]]", "[[0,1],[0,0]]"]);
    }

    #[test]
    fn parameter_policy() {
        let z4 = zmod(4, &L).unwrap();
        let id = PredicateId::ZhouRightEReduced;
        assert!(matches!(check_predicate(id, &z4, Params::default(), &L), Err(Error::MissingParameter(_))));
        assert!(matches!(check_predicate(id, &z4, Params::with_e(Elem(2)), &L), Err(Error::NotIdempotent(_))));
        assert!(check_predicate(id, &z4, Params::with_e(Elem(0)), &L).is_err());
        assert!(check_predicate(id, &z4, Params::with_e(Elem(0)).trivial_ok(), &L).unwrap().verdict);
        assert!(check_predicate(id, &z4, Params::with_e(Elem(1)), &L).unwrap().verdict);
    }

    #[test]
    fn budget_refusal() {
        let z2 = zmod(2, &L).unwrap();
        let m = matrix_full(2, &z2, &L).unwrap();
        let big = matrix_upper(3, &z2, &L).unwrap();
        assert!(check_predicate(PredicateId::WeaklySymmetric, &m, Params::default(), &L).is_ok());
        assert!(matches!(
            check_predicate(PredicateId::WeaklySymmetric, &big, Params::default(), &L),
            Err(Error::ComplexityRefusal { .. })
        ));
    }

    #[test]
    fn quasi_duo() {
        let z2 = zmod(2, &L).unwrap();
        let m = matrix_full(2, &z2, &L).unwrap();
        let facts = RingFacts::new(&m, &L);
        for id in [PredicateId::RightQuasiDuo, PredicateId::LeftQuasiDuo] {
            let rep = check(id, &facts, Params::default()).unwrap();
            assert!(!rep.verdict);
            assert!(replay(id, &facts, None, rep.witness.as_ref().unwrap()).unwrap());
        }
        let u = matrix_upper(2, &z2, &L).unwrap();
        assert!(check_predicate(PredicateId::RightQuasiDuo, &u, Params::default(), &L).unwrap().verdict);
        assert!(!check_predicate(PredicateId::RightDuo, &u, Params::default(), &L).unwrap().verdict);
    }
}
