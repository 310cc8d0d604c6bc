mod common;

use common::{ring, Tables, SMALL};
use zhou_core::constructors::{self as c, BimoduleAlgebra};
use zhou_core::{radicals, ElementSubset, Error, Limits};

const L: Limits = Limits::DEFAULT;

fn ring_axioms(t: &Tables) -> bool {
    let n = t.n;
    let add_group = (0..n).all(|a| (0..n).any(|b| t.add[a][b] == t.zero))
        && (0..n).all(|a| (0..n).all(|b| t.add[a][b] == t.add[b][a]));
    let assoc = (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|x| {
                t.mul[t.mul[a][b]][x] == t.mul[a][t.mul[b][x]]
                    && t.add[t.add[a][b]][x] == t.add[a][t.add[b][x]]
                    && t.mul[a][t.add[b][x]] == t.add[t.mul[a][b]][t.mul[a][x]]
                    && t.mul[t.add[a][b]][x] == t.add[t.mul[a][x]][t.mul[b][x]]
            })
        })
    });
    add_group && assoc
}

#[test]
fn tables_satisfy_axioms() {
    for text in SMALL.iter().chain(&["M(2,Z3)", "U(3,Z2)", "Hst(1,3,Z4)", "K(1,Z3)", "H3(2,Z2)"]) {
        assert!(ring_axioms(&Tables::of(&ring(text))), "{text}");
    }
}

#[test]
fn orders() {
    let cases: &[(&str, usize)] = &[
        ("Z12", 12),
        ("GF7", 7),
        ("M(2,Z3)", 81),
        ("U(3,Z2)", 64),
        ("D(3,Z2)", 16),
        ("D(4,Z2)", 128),
        ("V(3,Z3)", 27),
        ("prod(Z2,Z3,Z4)", 24),
        ("H3(2,Z2)", 32),
        ("H3(4,Z2)", 64),
        ("Hst(1,1,Z3)", 27),
        ("K(0,Z3)", 81),
        ("grpring(Z2,C4)", 16),
        ("sgring(Z3,LZ2)", 9),
        ("S(Z4)", 8),
        ("S(U(2,Z2))", 32),
        ("dorroh(Z2,sgT)", 8),
        ("quot(Z12,{4})", 4),
        ("corner(U(2,Z2),[[1,0],[0,0]])", 2),
        ("freealg16", 16),
    ];
    for &(text, n) in cases {
        assert_eq!(ring(text).order(), n, "{text}");
    }
}

#[test]
fn basic_invariants() {
    let z6 = ring("Z6");
    assert_eq!(z6.characteristic(), Some(6));
    assert!(z6.is_commutative());
    let m = ring("M(2,Z2)");
    assert!(!m.is_commutative());
    assert_eq!(m.units().unwrap().len(), 6);
    assert_eq!(m.center().len(), 2);
    assert_eq!(ring("GF5").units().unwrap().len(), 4);
    assert!(!ring("sgring(Z2,LZ2)").is_unital());
}

#[test]
fn char_mismatch_and_cap() {
    let l = Limits::DEFAULT;
    let z4 = c::zmod(4, &l).unwrap();
    assert!(matches!(c::h3(2, &z4, &l), Err(Error::CharMismatch { .. })));
    assert!(matches!(c::matrix_full(3, &z4, &l), Err(Error::CapExceeded { .. })));
    let tight = Limits { max_order: 8, ..l };
    assert!(matches!(c::zmod(9, &tight), Err(Error::CapExceeded { order: 9, cap: 8 })));
}

#[test]
fn quotient_and_corner() {
    let z12 = ring("Z12");
    let four = z12.cyclic_right_ideal(z12.parse_elem("4").unwrap());
    let q = c::quotient(&z12, &z12.as_two_sided(four.as_subset()).unwrap()).unwrap();
    assert_eq!(q.ring.order(), 4);
    assert_eq!(q.ring.characteristic(), Some(4));
    assert_eq!(q.project(z12.parse_elem("5").unwrap()), q.project(z12.parse_elem("1").unwrap()));

    let u = ring("U(2,Z2)");
    let e = u.parse_elem("[[1,0],[0,0]]").unwrap();
    let s = c::corner(&u, e).unwrap();
    assert_eq!(s.ring.one(), Some(s.pullback(&ElementSubset::from_elems(u.order(), [e])).first().unwrap()));
    assert!(c::corner(&u, u.parse_elem("[[0,1],[0,0]]").unwrap()).is_err());
}

#[test]
fn pair_subring_is_diagonal_plus_delta() {
    let z4 = ring("Z4");
    let s = c::pair_subring_s(&z4, &L).unwrap();
    assert_eq!(s.order(), 8);
    assert!(s.is_unital());
    let d = radicals::delta(&s, &L).unwrap();
    assert_eq!(d.len(), 4);
}

#[test]
fn dorroh_ideal_extension() {
    let z4 = c::zmod(4, &L).unwrap();
    let two = z4.cyclic_right_ideal(z4.parse_elem("2").unwrap());
    let t = BimoduleAlgebra::ideal(&z4, &z4.as_two_sided(two.as_subset()).unwrap()).unwrap();
    let d = c::dorroh(&z4, &t, &L).unwrap();
    assert_eq!(d.order(), 8);
    assert_eq!(d.characteristic(), Some(4));
    assert!(d.is_commutative());
}

#[test]
fn group_ring_augmentation() {
    // F_2[C_2] is local with radical spanned by 1+g.
    let r = ring("grpring(Z2,C2)");
    assert_eq!(radicals::jacobson(&r, &L).unwrap().len(), 2);
    assert_eq!(r.nilpotent_elements().len(), 2);
    assert_eq!(r.units().unwrap().len(), 2);
}

#[test]
fn incompatible_actions_are_rejected() {
    let l = Limits::DEFAULT;
    let reg = zhou_core::Registry::with_builtins(&l).unwrap();
    assert!(matches!(reg.eval_str("dorroh(Z3,matT)", &l), Err(Error::ActionIncompatibility { .. })));
    assert!(matches!(reg.eval_str("Hst(0,1,Z4)", &l), Err(Error::NotCentralUnit { .. })));
}
