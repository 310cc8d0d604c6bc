use crate::element::{Elem, Form};
use crate::error::{Error, Result};
use crate::ring::{FiniteRing, Limits, Shape};

use super::builder::{all_tuples, product_order, radix_index, Carrier, MatOps};

/// Matrix subring of `M_n(base)` whose elements are determined by the entries at `free`.
struct Pattern<'r, F, V> {
    base: &'r FiniteRing,
    n: usize,
    free: Vec<usize>,
    fill: F,
    valid: V,
}

impl<'r, F, V> Pattern<'r, F, V>
where
    F: Fn(&[Elem], &mut [Elem]) + 'r,
    V: Fn(&[Elem]) -> bool + 'r,
{
    fn build(self, limits: &Limits) -> Result<FiniteRing> {
        let Pattern { base, n, free, fill, valid } = self;
        limits.check_order(product_order(free.iter().map(|_| base.order())))?;
        let radices = vec![base.order(); free.len()];
        let elements = all_tuples(&radices)
            .into_iter()
            .map(|params| {
                let mut m = vec![base.zero(); n * n];
                fill(&params, &mut m);
                m
            })
            .collect();
        let ops = MatOps { base, n };
        let one = match base.one() {
            Some(_) => Some(ops.identity()?),
            None => None,
        };
        let index_free = free.clone();
        Carrier {
            shape: Shape::Matrix { rows: n, cols: n },
            elements,
            index: Box::new(move |c| valid(c).then(|| radix_index(c, &index_free, &radices))),
            add: Box::new(move |a, b, out| MatOps { base, n }.add(a, b, out)),
            mul: Box::new(move |a, b, out| MatOps { base, n }.mul(a, b, out)),
            one,
            form: Box::new(move |c| MatOps { base, n }.form(c)),
            aliases: Vec::new(),
        }
        .build(limits)
    }
}

fn check_dim(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Invalid("matrix size must be at least 1".into()));
    }
    Ok(())
}

/// The full matrix ring `M_n(base)`.
pub fn matrix_full(n: usize, base: &FiniteRing, limits: &Limits) -> Result<FiniteRing> {
    check_dim(n)?;
    Pattern {
        base,
        n,
        free: (0..n * n).collect(),
        fill: |p: &[Elem], m: &mut [Elem]| m.copy_from_slice(p),
        valid: |_: &[Elem]| true,
    }
    .build(limits)
}

/// Upper triangular matrices `U_n(base)`.
pub fn matrix_upper(n: usize, base: &FiniteRing, limits: &Limits) -> Result<FiniteRing> {
    check_dim(n)?;
    let free: Vec<usize> = (0..n * n).filter(|p| p / n <= p % n).collect();
    let positions = free.clone();
    let zero = base.zero();
    Pattern {
        base,
        n,
        free,
        fill: move |p: &[Elem], m: &mut [Elem]| {
            for (k, &pos) in positions.iter().enumerate() {
                m[pos] = p[k];
            }
        },
        valid: move |c: &[Elem]| (0..n * n).all(|p| p / n <= p % n || c[p] == zero),
    }
    .build(limits)
}

/// Upper triangular matrices with constant diagonal, `D_n(base)`.
pub fn matrix_d(n: usize, base: &FiniteRing, limits: &Limits) -> Result<FiniteRing> {
    check_dim(n)?;
    let mut free = vec![0];
    free.extend((0..n * n).filter(|p| p / n < p % n));
    let positions = free.clone();
    let zero = base.zero();
    Pattern {
        base,
        n,
        free,
        fill: move |p: &[Elem], m: &mut [Elem]| {
            for i in 0..n {
                m[i * n + i] = p[0];
            }
            for (k, &pos) in positions.iter().enumerate().skip(1) {
                m[pos] = p[k];
            }
        },
        valid: move |c: &[Elem]| {
            (0..n * n).all(|p| {
                let (i, j) = (p / n, p % n);
                if i > j {
                    c[p] == zero
                } else if i == j {
                    c[p] == c[0]
                } else {
                    true
                }
            })
        },
    }
    .build(limits)
}

/// Upper triangular Toeplitz matrices `V_n(base)`: the subring of `D_n(base)`
/// whose entries are constant along each superdiagonal.
pub fn matrix_v(n: usize, base: &FiniteRing, limits: &Limits) -> Result<FiniteRing> {
    check_dim(n)?;
    let zero = base.zero();
    Pattern {
        base,
        n,
        free: (0..n).collect(),
        fill: move |p: &[Elem], m: &mut [Elem]| {
            for i in 0..n {
                for j in i..n {
                    m[i * n + j] = p[j - i];
                }
            }
        },
        valid: move |c: &[Elem]| {
            (0..n * n).all(|p| {
                let (i, j) = (p / n, p % n);
                if i > j {
                    c[p] == zero
                } else {
                    c[p] == c[j - i]
                }
            })
        },
    }
    .build(limits)
}

/// `H_3` over `Z_m`: matrices `[[n,a1,a2],[0,a3,a4],[0,0,n]]` with `n ∈ Z_m`
/// acting on entries of `base` as `n·1`.
///
/// Coordinates are the tuple `(n, a1, a2, a3, a4)`, with `n` stored as its
/// residue in `0..m`.
pub fn h3(m: usize, base: &FiniteRing, limits: &Limits) -> Result<FiniteRing> {
    let one = base.unit()?;
    let char = base.characteristic().unwrap_or(1);
    if m == 0 || !(m as u64).is_multiple_of(char) {
        return Err(Error::CharMismatch { char, m: m as u64 });
    }
    let r = base.order();
    limits.check_order(product_order([m, r, r, r, r]))?;
    let radices = [m, r, r, r, r];
    let positions = [0, 1, 2, 3, 4];
    let zero = base.zero();
    let int = move |k: Elem| k.idx() as i64;
    Carrier {
        shape: Shape::Tuple(5),
        elements: all_tuples(&radices),
        index: Box::new(move |c| Some(radix_index(c, &positions, &radices))),
        add: Box::new(move |a, b, out| {
            out.push(Elem::from_idx((a[0].idx() + b[0].idx()) % m));
            out.extend((1..5).map(|k| base.add(a[k], b[k])));
        }),
        mul: Box::new(move |a, b, out| {
            let (n1, n2) = (int(a[0]), int(b[0]));
            out.push(Elem::from_idx((a[0].idx() * b[0].idx()) % m));
            out.push(base.add(base.smul(n1, b[1]), base.mul(a[1], b[3])));
            out.push(base.add(base.add(base.smul(n1, b[2]), base.mul(a[1], b[4])), base.smul(n2, a[2])));
            out.push(base.mul(a[3], b[3]));
            out.push(base.add(base.mul(a[3], b[4]), base.smul(n2, a[4])));
        }),
        one: Some(vec![Elem::from_idx(1 % m), zero, zero, one, zero]),
        form: Box::new(move |c| {
            let z = base.form(zero).clone();
            let n = Form::Int(c[0].idx() as i64);
            Form::Matrix(vec![
                vec![n.clone(), base.form(c[1]).clone(), base.form(c[2]).clone()],
                vec![z.clone(), base.form(c[3]).clone(), base.form(c[4]).clone()],
                vec![z.clone(), z, n],
            ])
        }),
        aliases: Vec::new(),
    }
    .build(limits)
}

/// `H_(s,t)(base)`: matrices `[[a,0,0],[c,d,f],[0,0,g]]` with `a − d = sc` and
/// `d − g = tf`, for central units `s` and `t`.
pub fn hst(s: Elem, t: Elem, base: &FiniteRing, limits: &Limits) -> Result<FiniteRing> {
    let units = base.units()?;
    for x in [s, t] {
        if !units.contains(x) || !base.is_central(x) {
            return Err(Error::NotCentralUnit(base.label(x).to_string()));
        }
    }
    let s_inv = base.inverse(s).expect("unit");
    let t_inv = base.inverse(t).expect("unit");
    let zero = base.zero();
    Pattern {
        base,
        n: 3,
        free: vec![0, 4, 8],
        fill: move |p: &[Elem], m: &mut [Elem]| {
            let (a, d, g) = (p[0], p[1], p[2]);
            m[0] = a;
            m[4] = d;
            m[8] = g;
            m[3] = base.mul(s_inv, base.sub(a, d));
            m[5] = base.mul(t_inv, base.sub(d, g));
        },
        valid: move |c: &[Elem]| {
            [1, 2, 6, 7].iter().all(|&p| c[p] == zero)
                && base.sub(c[0], c[4]) == base.mul(s, c[3])
                && base.sub(c[4], c[8]) == base.mul(t, c[5])
        },
    }
    .build(limits)
}

/// Generalized matrix ring `K_s(base)`: 2×2 arrays whose product twists the
/// off-diagonal contributions to the diagonal by the central element `s`.
pub fn ks(s: Elem, base: &FiniteRing, limits: &Limits) -> Result<FiniteRing> {
    if !base.is_central(s) {
        return Err(Error::NotCentral(base.label(s).to_string()));
    }
    let r = base.order();
    limits.check_order(product_order([r; 4]))?;
    let radices = [r; 4];
    let positions = [0, 1, 2, 3];
    let one = base.one().map(|o| vec![o, base.zero(), base.zero(), o]);
    Carrier {
        shape: Shape::Matrix { rows: 2, cols: 2 },
        elements: all_tuples(&radices),
        index: Box::new(move |c| Some(radix_index(c, &positions, &radices))),
        add: Box::new(move |a, b, out| out.extend((0..4).map(|k| base.add(a[k], b[k])))),
        mul: Box::new(move |u, v, out| {
            let (a1, x1, y1, b1) = (u[0], u[1], u[2], u[3]);
            let (a2, x2, y2, b2) = (v[0], v[1], v[2], v[3]);
            out.push(base.add(base.mul(a1, a2), base.mul(s, base.mul(x1, y2))));
            out.push(base.add(base.mul(a1, x2), base.mul(x1, b2)));
            out.push(base.add(base.mul(y1, a2), base.mul(b1, y2)));
            out.push(base.add(base.mul(s, base.mul(y1, x2)), base.mul(b1, b2)));
        }),
        one,
        form: Box::new(move |c| MatOps { base, n: 2 }.form(c)),
        aliases: Vec::new(),
    }
    .build(limits)
}
