//! Exact scalars and the binomial convention shared by every formula.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision signed integer.
pub type ExactInteger = BigInt;

/// Arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator. `Display` renders `num/den`, or `num` when the
/// denominator is one.
pub type ExactRational = BigRational;

/// Binomial coefficient with the combinatorial convention: zero whenever
/// `k < 0`, `k > n` or `n < 0`.
///
/// Uses the multiplicative formula; each partial product
/// `C(n-k+i, i)` is an integer so every division is exact.
pub fn binom(n: i64, k: i64) -> ExactInteger {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= BigInt::from(n - k + i);
        let (q, r) = acc.div_rem(&BigInt::from(i));
        debug_assert!(r.is_zero());
        acc = q;
    }
    acc
}

/// Shorthand for the rational `num/den`. Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `n` as a rational.
pub fn rat_int(n: &ExactInteger) -> ExactRational {
    BigRational::from_integer(n.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn binom_values() {
        assert_eq!(binom(10, 5), BigInt::from(252));
        assert_eq!(binom(3, 5), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
        for n in 0..40 {
            assert_eq!(binom(n, 0), BigInt::one());
        }
        assert_eq!(binom(-1, 0), BigInt::zero());
        assert_eq!(binom(-4, 2), BigInt::zero());
        assert_eq!(binom(7, -1), BigInt::zero());
        assert_eq!(binom(100, 50).to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn pascal_and_symmetry_exhaustive() {
        for n in 1..=64 {
            for k in 0..=n {
                assert_eq!(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k), "({n},{k})");
                assert_eq!(binom(n, k), binom(n, n - k));
            }
        }
    }

    #[test]
    fn rational_display_is_reduced() {
        assert_eq!(rat(10, 6).to_string(), "5/3");
        assert_eq!(rat(-4, 2).to_string(), "-2");
        assert_eq!(rat(3, -9).to_string(), "-1/3");
        assert_eq!(rat(0, 5).to_string(), "0");
    }

    fn small_rat() -> impl Strategy<Value = ExactRational> {
        (-1000i64..1000, 1i64..200).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
            prop_assert!((&a + &(-a.clone())).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.recip()).is_one());
            }
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}
