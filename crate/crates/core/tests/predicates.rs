mod common;

use common::{ring, Tables, SMALL};
use zhou_core::predicates::{check, replay};
use zhou_core::{check_predicate, Error, FiniteRing, Limits, Params, PredicateId as P, RingFacts};

const L: Limits = Limits::DEFAULT;

fn holds(id: P, r: &FiniteRing, e: Option<usize>) -> bool {
    let params = Params { e: e.map(|i| zhou_core::Elem(i as u32)), allow_trivial_e: true };
    check_predicate(id, r, params, &L).unwrap().verdict
}

struct Naive {
    t: Tables,
    nil: Vec<usize>,
    delta: u32,
}

impl Naive {
    fn new(r: &FiniteRing) -> Naive {
        let t = Tables::of(r);
        let nil = (0..t.n).filter(|&a| t.nilpotents() >> a & 1 == 1).collect();
        let delta = t.delta();
        Naive { t, nil, delta }
    }

    fn m3(&self, a: usize, b: usize, c: usize) -> usize {
        self.t.mul[self.t.mul[a][b]][c]
    }

    fn all(&self) -> std::ops::Range<usize> {
        0..self.t.n
    }

    fn semicommutative(&self) -> bool {
        let z = self.t.zero;
        self.all().all(|a| self.all().all(|b| self.t.mul[a][b] != z || self.all().all(|x| self.m3(a, x, b) == z)))
    }

    fn symmetric(&self) -> bool {
        let z = self.t.zero;
        self.all().all(|a| self.all().all(|b| self.all().all(|c| self.m3(a, b, c) != z || self.m3(a, c, b) == z)))
    }

    fn abelian(&self) -> bool {
        let m = &self.t.mul;
        self.all().filter(|&i| m[i][i] == i).all(|i| self.all().all(|s| m[i][s] == m[s][i]))
    }

    fn right_duo(&self) -> bool {
        let m = &self.t.mul;
        self.t.right_ideals().into_iter().all(|k| self.all().all(|x| k >> x & 1 == 0 || self.all().all(|s| k >> m[s][x] & 1 == 1)))
    }

    fn right_quasi_duo(&self) -> bool {
        let m = &self.t.mul;
        let ideals = self.t.right_ideals();
        self.t
            .maximal(&ideals)
            .into_iter()
            .all(|k| self.all().all(|x| k >> x & 1 == 0 || self.all().all(|s| k >> m[s][x] & 1 == 1)))
    }

    fn zhou_right(&self, e: usize) -> bool {
        self.nil.iter().all(|&a| self.delta >> self.t.mul[a][e] & 1 == 1)
    }

    fn zhou_left(&self, e: usize) -> bool {
        self.nil.iter().all(|&a| self.delta >> self.t.mul[e][a] & 1 == 1)
    }
}

#[test]
fn agrees_with_naive_definitions() {
    for text in SMALL {
        let r = ring(text);
        let n = Naive::new(&r);
        assert_eq!(holds(P::Reduced, &r, None), n.nil.len() == 1, "reduced {text}");
        assert_eq!(holds(P::Semicommutative, &r, None), n.semicommutative(), "semicommutative {text}");
        assert_eq!(holds(P::Symmetric, &r, None), n.symmetric(), "symmetric {text}");
        assert_eq!(holds(P::Abelian, &r, None), n.abelian(), "abelian {text}");
        assert_eq!(holds(P::RightDuo, &r, None), n.right_duo(), "right duo {text}");
        assert_eq!(holds(P::RightQuasiDuo, &r, None), n.right_quasi_duo(), "right quasi-duo {text}");
        assert_eq!(holds(P::Semisimple, &r, None), n.delta == n.t.full(), "semisimple {text}");
        if r.is_unital() {
            let j = n.t.jacobson();
            assert_eq!(holds(P::JReduced, &r, None), n.nil.iter().all(|&a| j >> a & 1 == 1), "j-reduced {text}");
        }
        for e in n.all().filter(|&e| n.t.mul[e][e] == e && e != n.t.zero) {
            assert_eq!(holds(P::ZhouRightEReduced, &r, Some(e)), n.zhou_right(e), "{text} e={e}");
            assert_eq!(holds(P::ZhouLeftEReduced, &r, Some(e)), n.zhou_left(e), "{text} e={e}");
            assert_eq!(holds(P::ZhouEReduced, &r, Some(e)), n.zhou_right(e) && n.zhou_left(e), "{text} e={e}");
        }
    }
}

#[test]
fn witnesses_replay() {
    for text in SMALL {
        let r = ring(text);
        let facts = RingFacts::new(&r, &L);
        for id in P::ALL.iter().copied().filter(|id| !id.needs_e() && *id != P::WeaklySymmetric) {
            let rep = check(id, &facts, Params::default()).unwrap();
            assert_eq!(rep.verdict, rep.witness.is_none(), "{text} {id}");
            if let Some(w) = &rep.witness {
                assert!(replay(id, &facts, None, w).unwrap(), "{text} {id}");
            }
        }
    }
}

#[test]
fn m2z4_zhou_counterexample() {
    let r = ring("M(2,Z4)");
    let e = r.parse_elem("[[0,0],[3,1]]").unwrap();
    let a = r.parse_elem("[[0,1],[0,0]]").unwrap();
    let ae = r.mul(a, e);
    assert_eq!(r.label(ae), "[[3,1],[0,0]]");
    let rep = check_predicate(P::ZhouRightEReduced, &r, Params::with_e(e), &L).unwrap();
    assert!(!rep.verdict);
    let w = rep.witness.unwrap();
    let facts = RingFacts::new(&r, &L);
    assert!(!facts.delta().unwrap().contains(ae));
    assert!(replay(P::ZhouRightEReduced, &facts, Some(e), &w).unwrap());
    assert!(w.render(&r).contains("ae ∉ δ(R)"));
}

#[test]
fn known_classes() {
    assert!(holds(P::Reduced, &ring("Z5"), None));
    assert!(holds(P::Reduced, &ring("prod(Z2,Z3)"), None));
    assert!(!holds(P::Reduced, &ring("Z4"), None));
    assert!(holds(P::Symmetric, &ring("Z8"), None));
    assert!(!holds(P::Semicommutative, &ring("U(2,Z2)"), None));
    assert!(!holds(P::RightQuasiDuo, &ring("M(2,Z2)"), None));
    assert!(holds(P::RightQuasiDuo, &ring("U(2,Z2)"), None));
    let u = ring("U(2,Z2)");
    for e in u.nonzero_idempotents() {
        assert!(holds(P::ZhouEReduced, &u, Some(e.idx())));
    }
    let g = ring("grpring(Z3,C2)");
    for e in g.nonzero_idempotents() {
        assert!(holds(P::ZhouEReduced, &g, Some(e.idx())));
    }
}

#[test]
fn parameter_errors() {
    let r = ring("U(2,Z2)");
    assert!(matches!(check_predicate(P::EReducedRight, &r, Params::default(), &L), Err(Error::MissingParameter(_))));
    assert!(matches!(check_predicate(P::EReducedRight, &r, Params::with_e(r.zero()), &L), Err(Error::Invalid(_))));
    let n = r.parse_elem("[[0,1],[0,0]]").unwrap();
    assert!(matches!(check_predicate(P::EReducedRight, &r, Params::with_e(n), &L), Err(Error::NotIdempotent(_))));
    assert!(check_predicate(P::EReducedRight, &r, Params::with_e(r.zero()).trivial_ok(), &L).unwrap().verdict);
    assert!(matches!(P::from_name("nonsense"), Err(Error::UnknownPredicate(_))));
    for &id in P::ALL.iter() {
        assert_eq!(P::from_name(id.name()).unwrap(), id);
    }
}

#[test]
fn budget_refusal() {
    let r = ring("U(3,Z2)");
    assert!(matches!(
        check_predicate(P::WeaklySymmetric, &r, Params::default(), &L),
        Err(Error::ComplexityRefusal { .. })
    ));
    let tiny = Limits { budget: 100, ..L };
    assert!(matches!(
        check_predicate(P::Symmetric, &ring("Z8"), Params::default(), &tiny),
        Err(Error::ComplexityRefusal { bound: 512, budget: 100 })
    ));
}
