//! Exact construction and verification of a basis for the quotient of the
//! ring of `m`-quasiinvariants of `S3` by the ideal generated by the
//! elementary symmetric polynomials.
//!
//! Everything here runs over arbitrary-precision rationals. The crate is
//! `no_std` and needs only `alloc`; file formats, the command line and
//! parallel sweeps live in the `quasi3` companion crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod basis;
pub mod group_ops;
pub mod linsys;
pub mod paths;
pub mod poly;
pub mod quasi;

pub use arith::{binom, ExactInteger, ExactRational};
pub use basis::{build_a1, build_a2, build_basis, BasisError, BasisReport, VerifyLevel};
pub use group_ops::{ElementName, GroupAlgebraElement};
pub use linsys::{build_system, coeff_a, det_exact, CoeffSystem, Matrix};
pub use poly::{Monomial, Permutation, Polynomial};
pub use quasi::{coinvariant_nf, is_quasiinvariant, QuasiReport};

/// Outcome of a single verification step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    /// Not evaluated, usually because a budget excluded it.
    Skipped,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_fail(self) -> bool {
        self == Verdict::Fail
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        }
    }
}

impl core::fmt::Display for Verdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}
