//! Sparse polynomials in `x1, x2, x3` over the rationals and the `S3`
//! action on them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{ExactInteger, ExactRational};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("elementary symmetric polynomial e{0} does not exist in three variables")]
    NoSuchElementary(u32),
    #[error("variable index {0} out of range 1..=3")]
    BadVariable(usize),
}

/// Exponent triple `(a, b, c)` standing for `x1^a x2^b x3^c`.
///
/// Ordered graded-lexicographically: total degree first, then `a`, `b`, `c`.
/// The canonical term order used for printing and serialization is the
/// descending version of this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial([a, b, c])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Exponent of `x_var`, with `var` in `1..=3`.
    pub fn exp(&self, var: usize) -> u32 {
        self.0[var - 1]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }

    /// All monomials of total degree `deg`, in canonical (descending) order.
    pub fn of_degree(deg: u32) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(((deg + 1) * (deg + 2) / 2) as usize);
        for a in (0..=deg).rev() {
            for b in (0..=deg - a).rev() {
                out.push(Monomial([a, b, deg - a - b]));
            }
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of `S3` stored by its images `(σ(1), σ(2), σ(3))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation([u8; 3]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([1, 2, 3]);
    pub const S12: Permutation = Permutation([2, 1, 3]);
    pub const S13: Permutation = Permutation([3, 2, 1]);
    pub const S23: Permutation = Permutation([1, 3, 2]);
    /// `1 -> 2 -> 3 -> 1`
    pub const C123: Permutation = Permutation([2, 3, 1]);
    /// `1 -> 3 -> 2 -> 1`
    pub const C132: Permutation = Permutation([3, 1, 2]);

    pub const ALL: [Permutation; 6] = [
        Permutation::IDENTITY,
        Permutation::S12,
        Permutation::S13,
        Permutation::S23,
        Permutation::C123,
        Permutation::C132,
    ];

    /// Builds a permutation from its image list; `None` unless it is a
    /// bijection of `{1, 2, 3}`.
    pub fn from_images(images: [u8; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for &v in &images {
            if !(1..=3).contains(&v) || seen[(v - 1) as usize] {
                return None;
            }
            seen[(v - 1) as usize] = true;
        }
        Some(Permutation(images))
    }

    /// The transposition exchanging `i` and `j`.
    pub fn transposition(i: usize, j: usize) -> Option<Self> {
        match (i.min(j), i.max(j)) {
            (1, 2) => Some(Self::S12),
            (1, 3) => Some(Self::S13),
            (2, 3) => Some(Self::S23),
            _ => None,
        }
    }

    pub fn images(&self) -> [u8; 3] {
        self.0
    }

    /// `σ(i)` for `i` in `1..=3`.
    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    /// The composite `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation([self.0[other.0[0] as usize - 1], self.0[other.0[1] as usize - 1], self.0[other.0[2] as usize - 1]])
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = [0u8; 3];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation(inv)
    }

    pub fn sign(&self) -> i32 {
        let mut inversions = 0;
        for i in 0..3 {
            for j in i + 1..3 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Image of a monomial under the substitution `x_i -> x_{σ(i)}`.
    pub fn act_on(&self, mono: &Monomial) -> Monomial {
        let mut out = [0u32; 3];
        for i in 0..3 {
            out[self.0[i] as usize - 1] += mono.0[i];
        }
        Monomial(out)
    }

    pub fn name(&self) -> &'static str {
        match self.0 {
            [1, 2, 3] => "1",
            [2, 1, 3] => "s12",
            [3, 2, 1] => "s13",
            [1, 3, 2] => "s23",
            [2, 3, 1] => "c123",
            _ => "c132",
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A polynomial in `x1, x2, x3` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, ExactRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(mono: Monomial, c: ExactRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Polynomial { terms }
    }

    pub fn monomial(a: u32, b: u32, c: u32) -> Self {
        Self::term(Monomial::new(a, b, c), ExactRational::one())
    }

    /// The variable `x_var`. Panics unless `var` is 1, 2 or 3.
    pub fn var(var: usize) -> Self {
        let mut e = [0; 3];
        e[var - 1] = 1;
        Self::term(Monomial(e), ExactRational::one())
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, ExactRational)>,
    {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, mono: Monomial, c: ExactRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Degree in the single variable `x_var`; `None` for zero.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(var)).max()
    }

    /// True for zero and for polynomials whose terms share one degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn coeff(&self, mono: &Monomial) -> ExactRational {
        self.terms.get(mono).cloned().unwrap_or_else(ExactRational::zero)
    }

    /// Terms in canonical order: descending graded lexicographic.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &ExactRational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn scale(&self, r: &ExactRational) -> Polynomial {
        if r.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, c)| (*m, c * r)).collect() }
    }

    pub fn scale_int(&self, n: &ExactInteger) -> Polynomial {
        self.scale(&ExactRational::from_integer(n.clone()))
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `(σP)(x1, x2, x3) = P(x_{σ(1)}, x_{σ(2)}, x_{σ(3)})`.
    pub fn apply_perm(&self, sigma: &Permutation) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (sigma.act_on(m), c.clone())).collect() }
    }

    /// Replaces `x_var` by `q` everywhere.
    pub fn substitute(&self, var: usize, q: &Polynomial) -> Polynomial {
        let max = self.degree_in(var).unwrap_or(0) as usize;
        let mut powers = Vec::with_capacity(max + 1);
        powers.push(Polynomial::one());
        for i in 1..=max {
            let next = &powers[i - 1] * q;
            powers.push(next);
        }
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let e = rest.0[var - 1] as usize;
            rest.0[var - 1] = 0;
            for (pm, pc) in &powers[e].terms {
                out.add_term(pm.mul(&rest), pc * c);
            }
        }
        out
    }

    /// Partial derivative with respect to `x_var`.
    pub fn derivative(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.0[var - 1];
            if e > 0 {
                let mut d = *m;
                d.0[var - 1] -= 1;
                out.add_term(d, c * ExactRational::from_integer(e.into()));
            }
        }
        out
    }

    /// Splits `P = Σ_k c_k x_var^k` into its coefficients `c_k`, which are
    /// free of `x_var`. Index `k` of the result holds `c_k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let n = match self.degree_in(var) {
            Some(n) => n as usize + 1,
            None => return Vec::new(),
        };
        let mut out = alloc::vec![Polynomial::zero(); n];
        for (m, c) in &self.terms {
            let mut rest = *m;
            let e = rest.0[var - 1] as usize;
            rest.0[var - 1] = 0;
            out[e].terms.insert(rest, c.clone());
        }
        out
    }

    /// Inverse of [`Polynomial::coefficients_in`].
    pub fn from_coefficients_in(var: usize, coeffs: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (k, ck) in coeffs.iter().enumerate() {
            let mut shift = [0u32; 3];
            shift[var - 1] = k as u32;
            for (m, c) in &ck.terms {
                out.add_term(m.mul(&Monomial(shift)), c.clone());
            }
        }
        out
    }

    /// Coefficient vector with respect to the given monomial list.
    pub fn coords(&self, basis: &[Monomial]) -> Vec<ExactRational> {
        basis.iter().map(|m| self.coeff(m)).collect()
    }

    /// Common denominator of all coefficients (one for the zero polynomial).
    pub fn denominator_lcm(&self) -> ExactInteger {
        use num_integer::Integer;
        self.terms.values().fold(ExactInteger::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Plain-text rendering such as `x1^4 - 2*x1^3*x2 + 5/3*x1*x2*x3`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut need_star = false;
            if !abs.is_one() || *m == Monomial::ONE {
                write!(f, "{abs}")?;
                need_star = true;
            }
            for v in 1..=3 {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                if need_star {
                    f.write_str("*")?;
                }
                write!(f, "x{v}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                need_star = true;
            }
        }
        Ok(())
    }
}

/// `m_{[i,j]}(x2, x3)`: `x2^i x3^j + x2^j x3^i` for `i != j`, and the
/// single term `x2^i x3^i` when `i == j`.
pub fn mono_sym(i: u32, j: u32) -> Polynomial {
    if i == j {
        Polynomial::monomial(0, i, i)
    } else {
        &Polynomial::monomial(0, i, j) + &Polynomial::monomial(0, j, i)
    }
}

/// Elementary symmetric polynomial `e_k` in three variables.
pub fn elementary(k: u32) -> Result<Polynomial, PolyError> {
    let monos: &[[u32; 3]] = match k {
        1 => &[[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        2 => &[[1, 1, 0], [1, 0, 1], [0, 1, 1]],
        3 => &[[1, 1, 1]],
        _ => return Err(PolyError::NoSuchElementary(k)),
    };
    Ok(Polynomial::from_terms(monos.iter().map(|e| (Monomial(*e), ExactRational::one()))))
}

/// The Vandermonde product `(x1 - x2)(x1 - x3)(x2 - x3)`.
pub fn vandermonde() -> Polynomial {
    let diff = |i, j| &Polynomial::var(i) - &Polynomial::var(j);
    &(&diff(1, 2) * &diff(1, 3)) * &diff(2, 3)
}

/// `Δ(x)^p`, expanded.
pub fn vandermonde_power(p: u32) -> Polynomial {
    vandermonde().pow(p)
}
