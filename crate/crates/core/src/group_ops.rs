//! The group algebra `Q[S3]` acting on polynomials, its distinguished
//! idempotents, and checks of the relations between them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{rat, ExactRational};
use crate::poly::{Permutation, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown group algebra element (expected S3sym, S3alt, pi1 or pi2)")]
pub struct UnknownElement;

/// Names of the elements with a fixed role in the construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementName {
    /// `[S3]`: the symmetrizer `(1/6) Σ σ`.
    S3Sym,
    /// `[S3]'`: the antisymmetrizer `(1/6) Σ sgn(σ) σ`.
    S3Alt,
    /// `(1/3)(1 + s23)(1 - s12)`
    Pi1,
    /// `(1/3)(1 + s12)(1 - s23)`
    Pi2,
}

impl FromStr for ElementName {
    type Err = UnknownElement;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "S3sym" => Ok(ElementName::S3Sym),
            "S3alt" => Ok(ElementName::S3Alt),
            "pi1" => Ok(ElementName::Pi1),
            "pi2" => Ok(ElementName::Pi2),
            _ => Err(UnknownElement),
        }
    }
}

/// A formal rational combination of the six permutations.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GroupAlgebraElement {
    coeffs: BTreeMap<Permutation, ExactRational>,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(Permutation::IDENTITY)
    }

    pub fn named(name: ElementName) -> Self {
        let one = Self::one();
        let third = rat(1, 3);
        match name {
            ElementName::S3Sym => Permutation::ALL.iter().map(|s| (*s, rat(1, 6))).collect(),
            ElementName::S3Alt => Permutation::ALL.iter().map(|s| (*s, rat(s.sign() as i64, 6))).collect(),
            ElementName::Pi1 => {
                let a = &one + &Self::from(Permutation::S23);
                let b = &one - &Self::from(Permutation::S12);
                (&a * &b).scale(&third)
            }
            ElementName::Pi2 => {
                let a = &one + &Self::from(Permutation::S12);
                let b = &one - &Self::from(Permutation::S23);
                (&a * &b).scale(&third)
            }
        }
    }

    pub fn coeff(&self, sigma: &Permutation) -> ExactRational {
        self.coeffs.get(sigma).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &ExactRational)> + '_ {
        self.coeffs.iter()
    }

    pub fn scale(&self, r: &ExactRational) -> Self {
        self.coeffs.iter().map(|(s, c)| (*s, c * r)).collect()
    }

    /// `Σ coeff(σ) · σP`.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (s, c) in &self.coeffs {
            out = &out + &p.apply_perm(s).scale(c);
        }
        out
    }

    fn add_coeff(&mut self, sigma: Permutation, c: ExactRational) {
        let entry = self.coeffs.entry(sigma).or_insert_with(ExactRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&sigma);
        }
    }
}

impl From<Permutation> for GroupAlgebraElement {
    fn from(sigma: Permutation) -> Self {
        core::iter::once((sigma, ExactRational::one())).collect()
    }
}

impl FromIterator<(Permutation, ExactRational)> for GroupAlgebraElement {
    fn from_iter<I: IntoIterator<Item = (Permutation, ExactRational)>>(iter: I) -> Self {
        let mut g = GroupAlgebraElement::zero();
        for (s, c) in iter {
            g.add_coeff(s, c);
        }
        g
    }
}

impl Add<&GroupAlgebraElement> for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn add(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        self.coeffs.iter().chain(rhs.coeffs.iter()).map(|(s, c)| (*s, c.clone())).collect()
    }
}

impl Sub<&GroupAlgebraElement> for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn sub(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        self + &(-rhs)
    }
}

impl Neg for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn neg(self) -> GroupAlgebraElement {
        self.coeffs.iter().map(|(s, c)| (*s, -c.clone())).collect()
    }
}

/// Convolution product, arranged so that `(g * h).apply(p) == g.apply(&h.apply(p))`.
impl Mul<&GroupAlgebraElement> for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn mul(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero();
        for (s, a) in &self.coeffs {
            for (t, b) in &rhs.coeffs {
                out.add_coeff(s.compose(t), a * b);
            }
        }
        out
    }
}

/// The eight relations checked on each sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Identity {
    Pi1Idempotent,
    Pi2Idempotent,
    AltKillsPi1,
    Pi1Pi2Zero,
    Pi2Pi1Zero,
    Resolution,
    S23FixesPi1,
    Swap,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::Pi1Idempotent,
        Identity::Pi2Idempotent,
        Identity::AltKillsPi1,
        Identity::Pi1Pi2Zero,
        Identity::Pi2Pi1Zero,
        Identity::Resolution,
        Identity::S23FixesPi1,
        Identity::Swap,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            Identity::Pi1Idempotent => "pi1^2 = pi1",
            Identity::Pi2Idempotent => "pi2^2 = pi2",
            Identity::AltKillsPi1 => "[S3]' pi1 = 0",
            Identity::Pi1Pi2Zero => "pi1 pi2 = 0",
            Identity::Pi2Pi1Zero => "pi2 pi1 = 0",
            Identity::Resolution => "[S3] + pi1 + pi2 + [S3]' = 1",
            Identity::S23FixesPi1 => "s23 pi1 = pi1",
            Identity::Swap => "pi2 s12 pi1 = -s13 pi1",
        }
    }

    /// Both sides of the relation as group-algebra elements.
    pub fn sides(&self) -> (GroupAlgebraElement, GroupAlgebraElement) {
        let sym = GroupAlgebraElement::named(ElementName::S3Sym);
        let alt = GroupAlgebraElement::named(ElementName::S3Alt);
        let pi1 = GroupAlgebraElement::named(ElementName::Pi1);
        let pi2 = GroupAlgebraElement::named(ElementName::Pi2);
        let zero = GroupAlgebraElement::zero();
        match self {
            Identity::Pi1Idempotent => (&pi1 * &pi1, pi1),
            Identity::Pi2Idempotent => (&pi2 * &pi2, pi2),
            Identity::AltKillsPi1 => (&alt * &pi1, zero),
            Identity::Pi1Pi2Zero => (&pi1 * &pi2, zero),
            Identity::Pi2Pi1Zero => (&pi2 * &pi1, zero),
            Identity::Resolution => (&(&(&sym + &pi1) + &pi2) + &alt, GroupAlgebraElement::one()),
            Identity::S23FixesPi1 => (&GroupAlgebraElement::from(Permutation::S23) * &pi1, pi1),
            Identity::Swap => {
                let s12 = GroupAlgebraElement::from(Permutation::S12);
                let s13 = GroupAlgebraElement::from(Permutation::S13);
                (&(&pi2 * &s12) * &pi1, -&(&s13 * &pi1))
            }
        }
    }

    /// Exact check inside the six-dimensional algebra.
    pub fn holds_in_algebra(&self) -> bool {
        let (lhs, rhs) = self.sides();
        lhs == rhs
    }

    /// Check on one polynomial, composing the operators one at a time
    /// rather than multiplying them out first.
    pub fn holds_on(&self, p: &Polynomial) -> bool {
        let sym = GroupAlgebraElement::named(ElementName::S3Sym);
        let alt = GroupAlgebraElement::named(ElementName::S3Alt);
        let pi1 = GroupAlgebraElement::named(ElementName::Pi1);
        let pi2 = GroupAlgebraElement::named(ElementName::Pi2);
        let pi1p = pi1.apply(p);
        match self {
            Identity::Pi1Idempotent => pi1.apply(&pi1p) == pi1p,
            Identity::Pi2Idempotent => {
                let q = pi2.apply(p);
                pi2.apply(&q) == q
            }
            Identity::AltKillsPi1 => alt.apply(&pi1p).is_zero(),
            Identity::Pi1Pi2Zero => pi1.apply(&pi2.apply(p)).is_zero(),
            Identity::Pi2Pi1Zero => pi2.apply(&pi1p).is_zero(),
            Identity::Resolution => {
                let total = &(&(&sym.apply(p) + &pi1p) + &pi2.apply(p)) + &alt.apply(p);
                total == *p
            }
            Identity::S23FixesPi1 => pi1p.apply_perm(&Permutation::S23) == pi1p,
            Identity::Swap => {
                let lhs = pi2.apply(&pi1p.apply_perm(&Permutation::S12));
                lhs == -pi1p.apply_perm(&Permutation::S13)
            }
        }
    }
}

/// One line of an identity report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: Identity,
    /// `None` for the algebra-level check.
    pub sample: Option<usize>,
    pub holds: bool,
}

/// Checks every relation at the algebra level and then on each sample.
pub fn verify_identities(samples: &[Polynomial]) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    for id in Identity::ALL {
        out.push(IdentityCheck { identity: id, sample: None, holds: id.holds_in_algebra() });
    }
    for (idx, p) in samples.iter().enumerate() {
        for id in Identity::ALL {
            out.push(IdentityCheck { identity: id, sample: Some(idx), holds: id.holds_on(p) });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{elementary, vandermonde, Monomial};

    fn x(i: usize) -> Polynomial {
        Polynomial::var(i)
    }

    #[test]
    fn named_elements() {
        let sym = GroupAlgebraElement::named(ElementName::S3Sym);
        let alt = GroupAlgebraElement::named(ElementName::S3Alt);
        for s in Permutation::ALL {
            assert_eq!(sym.coeff(&s), rat(1, 6));
            assert_eq!(alt.coeff(&s), rat(s.sign() as i64, 6));
        }
        // (1/3)(1 + s23 - s12 - s23 s12)
        let pi1 = GroupAlgebraElement::named(ElementName::Pi1);
        let expect: GroupAlgebraElement = [
            (Permutation::IDENTITY, rat(1, 3)),
            (Permutation::S23, rat(1, 3)),
            (Permutation::S12, rat(-1, 3)),
            (Permutation::S23.compose(&Permutation::S12), rat(-1, 3)),
        ]
        .into_iter()
        .collect();
        assert_eq!(pi1, expect);
        assert_eq!("pi2".parse::<ElementName>(), Ok(ElementName::Pi2));
        assert_eq!("pi3".parse::<ElementName>(), Err(UnknownElement));
    }

    #[test]
    fn apply_examples() {
        let pi1 = GroupAlgebraElement::named(ElementName::Pi1);
        let expect = (&(&x(1).scale(&rat(2, 1)) - &x(2)) - &x(3)).scale(&rat(1, 3));
        assert_eq!(pi1.apply(&x(1)), expect);
        let sym = GroupAlgebraElement::named(ElementName::S3Sym);
        assert_eq!(sym.apply(&x(1)), elementary(1).unwrap().scale(&rat(1, 3)));
        assert!(GroupAlgebraElement::named(ElementName::S3Alt).apply(&x(1)).is_zero());
    }

    #[test]
    fn product_matches_composition_of_actions() {
        let p = &Polynomial::monomial(3, 1, 0) + &Polynomial::monomial(0, 2, 1);
        let names = [ElementName::S3Sym, ElementName::S3Alt, ElementName::Pi1, ElementName::Pi2];
        for a in names {
            for b in names {
                let g = GroupAlgebraElement::named(a);
                let h = GroupAlgebraElement::named(b);
                assert_eq!((&g * &h).apply(&p), g.apply(&h.apply(&p)));
            }
        }
    }

    #[test]
    fn identities_hold_in_algebra() {
        for id in Identity::ALL {
            assert!(id.holds_in_algebra(), "{}", id.label());
        }
    }

    #[test]
    fn identities_on_named_samples() {
        let p = Polynomial::term(Monomial::new(2, 0, 1), rat(1, 1));
        let e2 = elementary(2).unwrap();
        let delta = vandermonde();
        let report = verify_identities(&[p, e2.clone(), delta.clone()]);
        assert!(report.iter().all(|c| c.holds));
        assert_eq!(report.len(), 8 * 4);

        let pi1 = GroupAlgebraElement::named(ElementName::Pi1);
        let pi2 = GroupAlgebraElement::named(ElementName::Pi2);
        let sym = GroupAlgebraElement::named(ElementName::S3Sym);
        let alt = GroupAlgebraElement::named(ElementName::S3Alt);
        assert!(pi1.apply(&e2).is_zero());
        assert!(pi2.apply(&e2).is_zero());
        assert!(alt.apply(&e2).is_zero());
        assert_eq!(sym.apply(&e2), e2);
        assert_eq!(alt.apply(&delta), delta);
        assert!(pi1.apply(&delta).is_zero());
        assert!(pi2.apply(&delta).is_zero());
        assert!(sym.apply(&delta).is_zero());
    }
}
