//! Quasiinvariance tests, the coinvariant normal form, and graded linear
//! algebra over the space of `m`-quasiinvariants.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;
use thiserror::Error;

use crate::arith::ExactRational;
use crate::linsys::{nullspace_basis, rank, Matrix};
use crate::poly::{elementary, Monomial, Permutation, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum QuasiError {
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomials passed together must share one degree")]
    MixedDegrees,
}

/// The three transpositions as index pairs.
pub const PAIRS: [(usize, usize); 3] = [(1, 2), (1, 3), (2, 3)];

/// Exact division of `p` by `x_i - x_j`, treating `p` as univariate in
/// `x_i`. `None` when the remainder is nonzero.
pub fn divide_by_difference(p: &Polynomial, i: usize, j: usize) -> Option<Polynomial> {
    let coeffs = p.coefficients_in(i);
    if coeffs.is_empty() {
        return Some(Polynomial::zero());
    }
    let xj = Polynomial::var(j);
    // Synthetic division by the monic linear factor (x_i - x_j).
    let n = coeffs.len() - 1;
    let mut quotient = alloc::vec![Polynomial::zero(); n];
    let mut carry = Polynomial::zero();
    for k in (1..=n).rev() {
        carry = &coeffs[k] + &(&xj * &carry);
        quotient[k - 1] = carry.clone();
    }
    let remainder = &coeffs[0] + &(&xj * &carry);
    if remainder.is_zero() {
        Some(Polynomial::from_coefficients_in(i, &quotient))
    } else {
        None
    }
}

/// Whether `(x_i - x_j)^p` divides `poly`.
pub fn divisible_power(poly: &Polynomial, i: usize, j: usize, p: u32) -> bool {
    let mut cur = poly.clone();
    for _ in 0..p {
        if cur.is_zero() {
            return true;
        }
        match divide_by_difference(&cur, i, j) {
            Some(q) => cur = q,
            None => return false,
        }
    }
    true
}

/// Largest `p` with `(x_i - x_j)^p | poly`; `None` for the zero polynomial,
/// which every power divides.
pub fn largest_dividing_power(poly: &Polynomial, i: usize, j: usize) -> Option<u32> {
    if poly.is_zero() {
        return None;
    }
    let mut cur = poly.clone();
    let mut p = 0;
    while let Some(q) = divide_by_difference(&cur, i, j) {
        cur = q;
        p += 1;
    }
    Some(p)
}

/// `(1 - s_ij) P`.
pub fn antisymmetrize(p: &Polynomial, i: usize, j: usize) -> Polynomial {
    let s = Permutation::transposition(i, j).expect("distinct indices in 1..=3");
    p - &p.apply_perm(&s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub i: usize,
    pub j: usize,
    /// Largest power of `x_i - x_j` dividing `(1 - s_ij)P`; `None` when that
    /// difference is identically zero.
    pub largest_power: Option<u32>,
    pub divisible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiReport {
    pub m: u32,
    pub pairs: [PairCheck; 3],
}

impl QuasiReport {
    pub fn is_quasiinvariant(&self) -> bool {
        self.pairs.iter().all(|c| c.divisible)
    }
}

pub fn is_quasiinvariant(p: &Polynomial, m: u32) -> QuasiReport {
    let check = |(i, j): (usize, usize)| {
        let diff = antisymmetrize(p, i, j);
        let largest_power = largest_dividing_power(&diff, i, j);
        let divisible = largest_power.is_none_or(|lp| lp > 2 * m);
        PairCheck { i, j, largest_power, divisible }
    };
    QuasiReport { m, pairs: PAIRS.map(check) }
}

/// Coordinates of a polynomial in the coinvariant algebra
/// `Q[x1,x2,x3] / (e1, e2, e3)`, with respect to the ordered basis
/// `(1, x2, x3, x2 x3, x3^2, x2 x3^2)`.
///
/// This is the quotient of the full polynomial ring. Every homogeneous
/// polynomial of degree four or more maps to zero here, so it says
/// nothing about independence modulo the ideal inside `QI_m` for `m > 0`;
/// use [`in_ideal_part`] for that.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CoinvariantVector(pub [ExactRational; 6]);

impl CoinvariantVector {
    pub const BASIS: [Monomial; 6] = [
        Monomial([0, 0, 0]),
        Monomial([0, 1, 0]),
        Monomial([0, 0, 1]),
        Monomial([0, 1, 1]),
        Monomial([0, 0, 2]),
        Monomial([0, 1, 2]),
    ];

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

/// Rewrites `x1 -> -(x2 + x3)`, then `x2^2 -> -(x2 x3 + x3^2)` and
/// `x3^3 -> 0` until no rule applies.
pub fn coinvariant_nf(p: &Polynomial) -> CoinvariantVector {
    let minus_x2_x3 = -(&Polynomial::var(2) + &Polynomial::var(3));
    let reduced = p.substitute(1, &minus_x2_x3);
    // (b, c) -> coefficient of x2^b x3^c; pop the largest b first so each
    // rewrite only feeds smaller b.
    let mut work: BTreeMap<(u32, u32), ExactRational> = BTreeMap::new();
    for (m, c) in reduced.terms() {
        *work.entry((m.0[1], m.0[2])).or_insert_with(ExactRational::zero) += c;
    }
    let mut out = CoinvariantVector::default();
    while let Some(((b, c), coeff)) = work.pop_last() {
        if coeff.is_zero() || c >= 3 {
            continue;
        }
        if b >= 2 {
            for key in [(b - 1, c + 1), (b - 2, c + 2)] {
                *work.entry(key).or_insert_with(ExactRational::zero) -= &coeff;
            }
            continue;
        }
        let idx = match (b, c) {
            (0, 0) => 0,
            (1, 0) => 1,
            (0, 1) => 2,
            (1, 1) => 3,
            (0, 2) => 4,
            (1, 2) => 5,
            _ => unreachable!("b <= 1 and c <= 2"),
        };
        out.0[idx] += coeff;
    }
    out
}

/// Dimension of the degree-`d` part of `QI_m` predicted by the Hilbert
/// series `(1 + 2q^{3m+1} + 2q^{3m+2} + q^{6m+3}) / ((1-q)(1-q^2)(1-q^3))`,
/// for `d` in `0..=max_deg`.
pub fn hilbert_qi_dims(m: u32, max_deg: u32) -> Vec<u64> {
    let n = max_deg as usize + 1;
    // Partitions into parts of size at most three.
    let mut parts = alloc::vec![0u64; n];
    parts[0] = 1;
    for size in 1..=3 {
        for d in size..n {
            parts[d] += parts[d - size];
        }
    }
    let numerator = [(0, 1u64), (3 * m + 1, 2), (3 * m + 2, 2), (6 * m + 3, 1)];
    (0..n)
        .map(|d| {
            numerator
                .iter()
                .filter(|(shift, _)| *shift as usize <= d)
                .map(|(shift, c)| c * parts[d - *shift as usize])
                .sum()
        })
        .collect()
}

/// Degrees of the six quotient basis elements.
pub fn quotient_degrees(m: u32) -> [u32; 6] {
    [0, 3 * m + 1, 3 * m + 1, 3 * m + 2, 3 * m + 2, 6 * m + 3]
}

/// A basis of the homogeneous degree-`deg` `m`-quasiinvariants.
///
/// Divisibility of `(1 - s_ij)P` by `(x_i - x_j)^{2m+1}` is imposed as the
/// vanishing of `∂^r/∂x_i^r (1 - s_ij)P` on `x_i = x_j` for `r <= 2m`,
/// which is linear in the coefficients of `P`. Each basis vector is scaled
/// so its first nonzero coordinate, in canonical monomial order, is one.
pub fn graded_qi_basis(m: u32, deg: u32) -> Vec<Polynomial> {
    let monos = Monomial::of_degree(deg);
    let mut rows: BTreeMap<(usize, u32, Monomial), Vec<(usize, ExactRational)>> = BTreeMap::new();
    for (col, mono) in monos.iter().enumerate() {
        let p = Polynomial::monomial(mono.0[0], mono.0[1], mono.0[2]);
        for (pair_idx, &(i, j)) in PAIRS.iter().enumerate() {
            let mut f = antisymmetrize(&p, i, j);
            let xj = Polynomial::var(j);
            for r in 0..=2 * m {
                if f.is_zero() {
                    break;
                }
                for (t, c) in f.substitute(i, &xj).terms() {
                    rows.entry((pair_idx, r, *t)).or_default().push((col, c.clone()));
                }
                f = f.derivative(i);
            }
        }
    }
    let n_rows = rows.len();
    let mut dense = Matrix::from_fn(n_rows, monos.len(), |_, _| ExactRational::zero());
    for (r, entries) in rows.into_values().enumerate() {
        for (c, v) in entries {
            let cur = dense.get(r, c) + v;
            dense.set(r, c, cur);
        }
    }
    nullspace_basis(&dense)
        .into_iter()
        .map(|mut v| {
            if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
                let inv = lead.recip();
                for x in v.iter_mut() {
                    *x *= &inv;
                }
            }
            Polynomial::from_terms(monos.iter().copied().zip(v))
        })
        .collect()
}

/// Spanning set of `e1·(QI_m)_{d-1} + e2·(QI_m)_{d-2} + e3·(QI_m)_{d-3}`.
pub fn ideal_part_span(m: u32, d: u32) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for k in 1..=3u32 {
        if k > d {
            break;
        }
        let ek = elementary(k).expect("k in 1..=3");
        out.extend(graded_qi_basis(m, d - k).iter().map(|b| &ek * b));
    }
    out
}

fn rank_of(polys: &[Polynomial], monos: &[Monomial]) -> usize {
    if polys.is_empty() {
        return 0;
    }
    rank(&Matrix::from_rows(polys.iter().map(|p| p.coords(monos)).collect()))
}

fn common_degree(polys: &[Polynomial]) -> Result<Option<u32>, QuasiError> {
    let mut deg = None;
    for p in polys {
        if !p.is_homogeneous() {
            return Err(QuasiError::NotHomogeneous);
        }
        match (deg, p.degree()) {
            (_, None) => {}
            (None, d) => deg = d,
            (Some(a), Some(b)) if a != b => return Err(QuasiError::MixedDegrees),
            _ => {}
        }
    }
    Ok(deg)
}

/// How many dimensions `polys` add to the ideal part of their degree;
/// equals `polys.len()` exactly when no nontrivial combination of them
/// lies in `(e1, e2, e3)·QI_m`.
pub fn rank_modulo_ideal(polys: &[Polynomial], m: u32) -> Result<usize, QuasiError> {
    let Some(d) = common_degree(polys)? else {
        return Ok(0);
    };
    let monos = Monomial::of_degree(d);
    let span = ideal_part_span(m, d);
    let base = rank_of(&span, &monos);
    let mut all = span;
    all.extend_from_slice(polys);
    Ok(rank_of(&all, &monos) - base)
}

/// Whether a homogeneous `P` lies in `(e1, e2, e3)·QI_m`.
pub fn in_ideal_part(p: &Polynomial, m: u32) -> Result<bool, QuasiError> {
    if !p.is_homogeneous() {
        return Err(QuasiError::NotHomogeneous);
    }
    Ok(rank_modulo_ideal(core::slice::from_ref(p), m)? == 0)
}

/// Sum of the coordinates weighted by the basis monomials; the inverse of
/// [`coinvariant_nf`] on reduced polynomials.
pub fn coinvariant_lift(v: &CoinvariantVector) -> Polynomial {
    Polynomial::from_terms(CoinvariantVector::BASIS.iter().copied().zip(v.0.iter().cloned()))
}
