use crate::element::Elem;
use crate::error::Result;
use crate::ring::{FiniteRing, Limits, Shape};
use crate::subset::ElementSubset;
use crate::tablefile::CayleyTable;

use super::builder::{all_tuples, radix_index, Carrier};
use super::semigroup::{combination_form, semigroup_ring};
use super::{matrix_full, subring, zmod};

/// `Z₂S` for the left-zero semigroup `S = {a, b}`: the ring `{0, a, b, a+b}` without identity.
pub fn semigroup_algebra_t4(limits: &Limits) -> Result<FiniteRing> {
    let z2 = zmod(2, limits)?;
    Ok(semigroup_ring(&z2, &CayleyTable::left_zero_pair(), limits)?.with_name("sgT"))
}

/// The non-unital subring `{0, [[1,1],[1,1]], [[1,1],[0,0]], [[0,0],[1,1]]}` of `M₂(Z₂)`.
pub fn matrix_semigroup_algebra(limits: &Limits) -> Result<FiniteRing> {
    let z2 = zmod(2, limits)?;
    let m = matrix_full(2, &z2, limits)?;
    let carrier = ElementSubset::from_elems(
        m.order(),
        ["[[0,0],[0,0]]", "[[1,1],[1,1]]", "[[1,1],[0,0]]", "[[0,0],[1,1]]"]
            .iter()
            .map(|s| m.parse_elem(s))
            .collect::<Result<Vec<_>>>()?,
    );
    Ok(subring(&m, &carrier, None)?.ring.with_name("matT"))
}

// Basis 1, a, b, ba; entry [i][j] lists the coefficients of basis_i · basis_j.
const FREE_BASIS: [&str; 4] = ["1", "a", "b", "ba"];
const FREE_PRODUCTS: [[[u8; 4]; 4]; 4] = [
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    [[0, 1, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
    [[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 0, 0, 1]],
    [[0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]],
];

/// The 16-element `Z₂`-algebra with basis `1, a, b, ba` where `a² = a`, `b² = b`, `ab = 0`.
pub fn free_algebra_example(limits: &Limits) -> Result<FiniteRing> {
    let z2 = zmod(2, limits)?;
    let radices = [2usize; 4];
    let basis: Vec<String> = FREE_BASIS.iter().map(|s| s.to_string()).collect();
    let f = &z2;
    Carrier {
        shape: Shape::Tuple(4),
        elements: all_tuples(&radices),
        index: Box::new(move |c| Some(radix_index(c, &[0, 1, 2, 3], &radices))),
        add: Box::new(|x, y, out| out.extend((0..4).map(|k| Elem((x[k].0 + y[k].0) % 2)))),
        mul: Box::new(|x, y, out| {
            let mut acc = [0u8; 4];
            for i in 0..4 {
                for j in 0..4 {
                    if x[i].0 == 1 && y[j].0 == 1 {
                        for k in 0..4 {
                            acc[k] ^= FREE_PRODUCTS[i][j][k];
                        }
                    }
                }
            }
            out.extend(acc.iter().map(|&v| Elem(v as u32)));
        }),
        one: Some(vec![Elem(1), Elem(0), Elem(0), Elem(0)]),
        form: Box::new(move |c| combination_form(f, &basis, c)),
        aliases: Vec::new(),
    }
    .build(limits)
    .map(|r| r.with_name("freealg16"))
}
