//! Assembly of `A1`, `A2` and the six-element quotient basis, with the
//! verification pipeline that certifies it.

use alloc::vec::Vec;

use num_traits::Zero;
use thiserror::Error;

use crate::arith::ExactRational;
use crate::linsys::{build_system, det_exact, nullspace, LinsysError, Matrix};
use crate::poly::{elementary, mono_sym, vandermonde_power, Monomial, Permutation, Polynomial};
use crate::quasi::{coinvariant_nf, is_quasiinvariant, quotient_degrees, rank_modulo_ideal, QuasiReport};
use crate::Verdict;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BasisError {
    #[error(transparent)]
    System(#[from] LinsysError),
    #[error("coefficient system for d = {d} has a {dim}-dimensional null space, expected 1")]
    NullSpaceDimension { d: u32, dim: usize },
    #[error("null vector for d = {d} has zero [0,0] coordinate and cannot be normalized")]
    LeadingZero { d: u32 },
    #[error("A2 is a scalar multiple of e1*A1 for m = {m}")]
    A2MultipleOfE1A1 { m: u32 },
}

/// A solved ansatz `Σ C_[i,j] x1^{d-i-j} m_[i,j](x2, x3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ansatz {
    pub m: u32,
    pub d: u32,
    pub cols: Vec<(u32, u32)>,
    /// Normalized so the `[0,0]` coefficient is one.
    pub coeffs: Vec<ExactRational>,
    pub poly: Polynomial,
}

pub fn assemble(d: u32, cols: &[(u32, u32)], coeffs: &[ExactRational]) -> Polynomial {
    let mut out = Polynomial::zero();
    for (&(i, j), c) in cols.iter().zip(coeffs) {
        let term = mono_sym(i, j).mul_monomial(&Monomial::new(d - i - j, 0, 0)).scale(c);
        out = &out + &term;
    }
    out
}

pub fn solve_ansatz(m: u32, d: u32) -> Result<Ansatz, BasisError> {
    let sys = build_system(m, d)?;
    let ns = nullspace(&sys);
    if ns.dim() != 1 {
        return Err(BasisError::NullSpaceDimension { d, dim: ns.dim() });
    }
    if ns.leading_zero {
        return Err(BasisError::LeadingZero { d });
    }
    let coeffs = ns.vectors.into_iter().next().expect("dimension checked");
    let poly = assemble(d, &sys.cols, &coeffs);
    Ok(Ansatz { m, d, cols: sys.cols, coeffs, poly })
}

/// The degree `3m+1` element.
pub fn build_a1(m: u32) -> Result<Polynomial, BasisError> {
    Ok(solve_ansatz(m, 3 * m + 1)?.poly)
}

/// The degree `3m+2` element, solved directly from its own system.
pub fn build_a2(m: u32) -> Result<Polynomial, BasisError> {
    let a2 = solve_ansatz(m, 3 * m + 2)?.poly;
    let e1a1 = &elementary(1).expect("e1") * &build_a1(m)?;
    if is_scalar_multiple(&a2, &e1a1) {
        return Err(BasisError::A2MultipleOfE1A1 { m });
    }
    Ok(a2)
}

/// Whether `p = c·q` for some rational `c` (zero counts as a multiple of
/// anything).
pub fn is_scalar_multiple(p: &Polynomial, q: &Polynomial) -> bool {
    if p.is_zero() {
        return true;
    }
    let Some((mono, pc)) = p.terms().next() else {
        return true;
    };
    let qc = q.coeff(mono);
    if qc.is_zero() {
        return false;
    }
    *p == q.scale(&(pc / qc))
}

/// Largest exponent of `x2` or `x3` in any term.
pub fn max_x2_x3_exponent(p: &Polynomial) -> u32 {
    p.terms().map(|(m, _)| m.0[1].max(m.0[2])).max().unwrap_or(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum VerifyLevel {
    Degrees,
    Quasi,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisOptions {
    pub level: VerifyLevel,
    /// Quotient-independence is certified only for `m` up to this bound.
    pub ideal_max_m: u32,
}

impl Default for BasisOptions {
    fn default() -> Self {
        BasisOptions { level: VerifyLevel::Full, ideal_max_m: 2 }
    }
}

pub const ELEMENT_NAMES: [&str; 6] = ["1", "A1", "s12 A1", "A2", "s12 A2", "Delta^(2m+1)"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceCheck {
    pub degree: u32,
    /// Indices into the element list.
    pub elements: Vec<usize>,
    /// Dimensions the elements add beyond the ideal part of their degree.
    pub rank_gain: Option<usize>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisReport {
    pub m: u32,
    pub elements: [Polynomial; 6],
    pub a1: Ansatz,
    pub a2: Ansatz,
    pub degrees: [Option<u32>; 6],
    pub expected_degrees: [u32; 6],
    pub degree_verdict: Verdict,
    /// `None` below [`VerifyLevel::Quasi`].
    pub quasi: Option<[QuasiReport; 6]>,
    pub quasi_verdict: Verdict,
    pub s23_verdict: Verdict,
    pub a2_not_multiple_verdict: Verdict,
    pub independence: Vec<IndependenceCheck>,
    /// For `m = 0` only: determinant of the six coinvariant images.
    pub coinvariant_det: Option<ExactRational>,
}

impl BasisReport {
    pub fn all_pass(&self) -> bool {
        !self.verdicts().iter().any(|(_, v)| v.is_fail())
    }

    /// Every verdict with a short label, in a fixed order.
    pub fn verdicts(&self) -> Vec<(&'static str, Verdict)> {
        let mut out = alloc::vec![
            ("degrees", self.degree_verdict),
            ("quasiinvariance", self.quasi_verdict),
            ("s23_invariance", self.s23_verdict),
            ("a2_not_multiple_of_e1a1", self.a2_not_multiple_verdict),
        ];
        let labels = ["independence_deg_3m+1", "independence_deg_3m+2", "independence_deg_6m+3"];
        for (label, check) in labels.iter().zip(&self.independence) {
            out.push((label, check.verdict));
        }
        if let Some(det) = &self.coinvariant_det {
            out.push(("coinvariant_det_nonzero", Verdict::from_bool(!det.is_zero())));
        }
        out
    }
}

pub fn build_basis(m: u32, opts: BasisOptions) -> Result<BasisReport, BasisError> {
    let a1 = solve_ansatz(m, 3 * m + 1)?;
    let a2 = solve_ansatz(m, 3 * m + 2)?;
    let s12 = Permutation::S12;
    let elements = [
        Polynomial::one(),
        a1.poly.clone(),
        a1.poly.apply_perm(&s12),
        a2.poly.clone(),
        a2.poly.apply_perm(&s12),
        vandermonde_power(2 * m + 1),
    ];
    let expected_degrees = quotient_degrees(m);
    let degrees = elements.clone().map(|p| p.degree());
    let degree_verdict = Verdict::from_bool(
        elements.iter().zip(expected_degrees).all(|(p, d)| p.is_homogeneous() && p.degree() == Some(d)),
    );

    let s23 = Permutation::S23;
    let s23_verdict = Verdict::from_bool(a1.poly.apply_perm(&s23) == a1.poly && a2.poly.apply_perm(&s23) == a2.poly);
    let e1a1 = &elementary(1).expect("e1") * &a1.poly;
    let a2_not_multiple_verdict = Verdict::from_bool(!is_scalar_multiple(&a2.poly, &e1a1));

    let (quasi, quasi_verdict) = if opts.level >= VerifyLevel::Quasi {
        let reports = elements.clone().map(|p| is_quasiinvariant(&p, m));
        let ok = reports.iter().all(QuasiReport::is_quasiinvariant);
        (Some(reports), Verdict::from_bool(ok))
    } else {
        (None, Verdict::Skipped)
    };

    let groups: [(usize, &[usize]); 3] = [(1, &[1, 2]), (3, &[3, 4]), (5, &[5])];
    let run_ideal = opts.level == VerifyLevel::Full && m <= opts.ideal_max_m;
    let independence = groups
        .iter()
        .map(|&(first, idx)| {
            let degree = expected_degrees[first];
            if !run_ideal {
                return IndependenceCheck {
                    degree,
                    elements: idx.to_vec(),
                    rank_gain: None,
                    verdict: Verdict::Skipped,
                };
            }
            let polys: Vec<Polynomial> = idx.iter().map(|&i| elements[i].clone()).collect();
            let gain = rank_modulo_ideal(&polys, m).ok();
            let verdict = Verdict::from_bool(gain == Some(idx.len()));
            IndependenceCheck { degree, elements: idx.to_vec(), rank_gain: gain, verdict }
        })
        .collect();

    let coinvariant_det = (m == 0).then(|| {
        let rows = elements.iter().map(|p| coinvariant_nf(p).0.to_vec()).collect();
        det_exact(&Matrix::from_rows(rows)).expect("6x6")
    });

    Ok(BasisReport {
        m,
        elements,
        a1,
        a2,
        degrees,
        expected_degrees,
        degree_verdict,
        quasi,
        quasi_verdict,
        s23_verdict,
        a2_not_multiple_verdict,
        independence,
        coinvariant_det,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn from(terms: &[([u32; 3], ExactRational)]) -> Polynomial {
        Polynomial::from_terms(terms.iter().map(|(e, c)| (Monomial(*e), c.clone())))
    }

    #[test]
    fn small_m_elements() {
        assert_eq!(build_a1(0).unwrap(), Polynomial::var(1));
        assert_eq!(build_a2(0).unwrap(), Polynomial::monomial(2, 0, 0));
        let a1 =
            from(&[([4, 0, 0], rat(1, 1)), ([3, 1, 0], rat(-2, 1)), ([3, 0, 1], rat(-2, 1)), ([2, 1, 1], rat(6, 1))]);
        assert_eq!(build_a1(1).unwrap(), a1);
        let a2 =
            from(&[([5, 0, 0], rat(1, 1)), ([4, 1, 0], rat(-5, 3)), ([4, 0, 1], rat(-5, 3)), ([3, 1, 1], rat(10, 3))]);
        assert_eq!(build_a2(1).unwrap(), a2);
    }

    #[test]
    fn scalar_multiple() {
        let p = Polynomial::var(1);
        assert!(is_scalar_multiple(&p.scale(&rat(-3, 2)), &p));
        assert!(!is_scalar_multiple(&Polynomial::var(2), &p));
        assert!(is_scalar_multiple(&Polynomial::zero(), &p));
    }

    #[test]
    fn basis_m0() {
        let r = build_basis(0, BasisOptions::default()).unwrap();
        assert_eq!(r.degrees, [Some(0), Some(1), Some(1), Some(2), Some(2), Some(3)]);
        assert_eq!(r.elements[1], Polynomial::var(1));
        assert_eq!(r.elements[2], Polynomial::var(2));
        assert_eq!(r.elements[4], Polynomial::monomial(0, 2, 0));
        assert!(r.all_pass(), "{:?}", r.verdicts());
        assert!(!r.coinvariant_det.unwrap().is_zero());
    }

    #[test]
    fn basis_m1_full() {
        let r = build_basis(1, BasisOptions::default()).unwrap();
        assert!(r.all_pass(), "{:?}", r.verdicts());
        assert!(r.independence.iter().all(|c| c.verdict == Verdict::Pass));
        assert_eq!(r.coinvariant_det, None);
    }

    #[test]
    fn budget_skips_independence() {
        let r = build_basis(3, BasisOptions { level: VerifyLevel::Full, ideal_max_m: 2 }).unwrap();
        assert!(r.independence.iter().all(|c| c.verdict == Verdict::Skipped));
        assert_eq!(r.quasi_verdict, Verdict::Pass);
        let r = build_basis(1, BasisOptions { level: VerifyLevel::Degrees, ideal_max_m: 2 }).unwrap();
        assert_eq!(r.quasi_verdict, Verdict::Skipped);
        assert_eq!(r.degree_verdict, Verdict::Pass);
    }
}
