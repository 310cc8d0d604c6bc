mod common;

use common::{mask, ring, Tables, SMALL};
use zhou_core::{radicals, ElementSubset, Limits};

const L: Limits = Limits::DEFAULT;

fn set(r: &zhou_core::FiniteRing, labels: &[&str]) -> ElementSubset {
    ElementSubset::from_elems(r.order(), labels.iter().map(|s| r.parse_elem(s).unwrap()))
}

#[test]
fn z16_delta_and_ideal_module() {
    let r = ring("Z16");
    let d = radicals::delta(&r, &L).unwrap();
    assert_eq!(r.format_set(d.as_subset()), "{0,2,4,6,8,10,12,14}");
    let i = r.cyclic_right_ideal(r.parse_elem("4").unwrap()).into_subset();
    let di = radicals::delta_of_right_ideal_as_module(&r, &i, &L).unwrap();
    assert_eq!(r.format_set(&di), "{0,8}");
    // I ∩ δ(R) = I is not inside δ(I).
    assert!(!i.intersect(d.as_subset()).is_subset(&di));
}

#[test]
fn z12_ideal_module() {
    let r = ring("Z12");
    let i = r.cyclic_right_ideal(r.parse_elem("6").unwrap()).into_subset();
    assert_eq!(r.format_set(&radicals::delta_of_right_ideal_as_module(&r, &i, &L).unwrap()), "{0,6}");
}

#[test]
fn triangular_and_full_matrices() {
    let u = ring("U(2,Z2)");
    let d = radicals::delta(&u, &L).unwrap().into_subset();
    assert_eq!(d, set(&u, &["[[0,0],[0,0]]", "[[0,1],[0,0]]", "[[0,0],[0,1]]", "[[0,1],[0,1]]"]));
    assert_eq!(u.nilpotent_elements(), set(&u, &["[[0,0],[0,0]]", "[[0,1],[0,0]]"]));
    assert_eq!(radicals::all_right_ideals(&u, &L).unwrap().len(), 7);

    let m = ring("M(2,Z2)");
    assert!(radicals::delta(&m, &L).unwrap().as_subset().is_full());

    let m4 = ring("M(2,Z4)");
    let d4 = radicals::delta(&m4, &L).unwrap().into_subset();
    let even = ElementSubset::from_predicate(m4.order(), |x| {
        (0..2).all(|i| (0..2).all(|j| m4.entry(x, i, j).unwrap().idx().is_multiple_of(2)))
    });
    assert_eq!(d4.len(), 16);
    assert_eq!(d4, even);
}

#[test]
fn agrees_with_naive_oracle() {
    for text in SMALL {
        let r = ring(text);
        let t = Tables::of(&r);
        let d = radicals::delta(&r, &L).unwrap();
        assert_eq!(mask(d.as_subset()), t.delta(), "δ of {text}");
        assert_eq!(radicals::all_right_ideals(&r, &L).unwrap().len(), t.right_ideals().len(), "lattice of {text}");
        assert_eq!(mask(&radicals::socle(&r, &L).unwrap().into_subset()), t.socle(), "Soc of {text}");
        assert_eq!(mask(&r.nilpotent_elements()), t.nilpotents(), "N of {text}");
        assert_eq!(mask(&r.idempotent_elements()), t.idempotents(), "Id of {text}");
        if r.is_unital() {
            assert_eq!(mask(radicals::jacobson(&r, &L).unwrap().as_subset()), t.jacobson(), "J of {text}");
        }
    }
}

#[test]
fn routes_agree_on_small_rings() {
    for text in SMALL.iter().filter(|t| ring(t).is_unital()) {
        let r = ring(text);
        let d = radicals::delta_via_essential_maximal(&r, &L).unwrap().into_subset();
        for other in [
            radicals::delta_via_summand(&r, &L),
            radicals::delta_via_semisimple_complement(&r, &L),
            radicals::delta_via_socle_lift(&r, &L),
            radicals::delta_quasi_regular(&r),
        ] {
            assert_eq!(other.unwrap().into_subset(), d, "{text}");
        }
        assert!(radicals::is_delta_small(&r, &d, &L).unwrap(), "{text}");
    }
}

#[test]
fn dorroh_semigroup_example() {
    let d = ring("dorroh(Z2,sgT)");
    let listed = ["(0,0)", "(1,0)", "(0,a)", "(0,b)", "(0,a+b)", "(1,a)", "(1,b)", "(1,a+b)"];
    assert!(set(&d, &listed).is_full());
    let small = set(&d, &["(0,0)", "(0,a+b)"]);
    assert_eq!(radicals::jacobson(&d, &L).unwrap().into_subset(), small);
    assert_eq!(d.nilpotent_elements(), small);
    assert_eq!(radicals::delta(&d, &L).unwrap().into_subset(), set(&d, &["(0,0)", "(0,a)", "(0,b)", "(0,a+b)"]));
}

#[test]
fn group_ring_is_semisimple() {
    let r = ring("grpring(Z3,C2)");
    assert!(radicals::delta(&r, &L).unwrap().as_subset().is_full());
    assert!(radicals::jacobson(&r, &L).unwrap().as_subset().len() == 1);
}

#[test]
fn free_algebra_radicals() {
    let r = ring("freealg16");
    let d = radicals::delta(&r, &L).unwrap().into_subset();
    assert_eq!(d, radicals::socle(&r, &L).unwrap().into_subset());
    assert_eq!(d.len(), 8);
    assert_eq!(r.nilpotent_elements(), set(&r, &["0", "ba"]));
}

#[test]
fn quasi_regular_routes_above_lattice_order() {
    // U_2(Z4) has order 256 and sits on the lattice; lower the threshold to force the other route.
    let r = ring("U(2,Z4)");
    let lattice = radicals::delta(&r, &L).unwrap().into_subset();
    let small = Limits { lattice_order: 16, ..L };
    assert_eq!(radicals::delta(&r, &small).unwrap().into_subset(), lattice);
    assert_eq!(
        radicals::jacobson(&r, &small).unwrap().into_subset(),
        radicals::jacobson(&r, &L).unwrap().into_subset()
    );
}

#[test]
fn delta_is_semiprime_ideal() {
    for text in SMALL {
        let r = ring(text);
        let d = radicals::delta(&r, &L).unwrap().into_subset();
        assert!(r.is_two_sided(&d), "{text}");
        assert_eq!(radicals::semiprime_witness(&r, &d), None, "{text}");
    }
}

#[test]
fn lattice_cap_is_enforced() {
    let r = ring("prod(Z2,Z2,Z2,Z2)");
    let tight = Limits { lattice_cap: 4, ..L };
    assert!(matches!(radicals::all_right_ideals(&r, &tight), Err(zhou_core::Error::LatticeExplosion { .. })));
}
