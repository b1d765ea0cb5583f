//! Numeric abstraction shared by every oracle routine.
//!
//! The exact oracles run over [`crate::Rational`]; the same code runs over
//! `f64` (or `f32`) when only an approximation is needed, e.g. for plotting
//! distributions past the size where exact rationals stay manageable.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, ToPrimitive};

pub trait Scalar:
    Num + Clone + Debug + PartialOrd + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Whether arithmetic in this type is exact.
    const EXACT: bool;

    /// Largest `n` for which [`crate::oracle::cost_distribution`] is allowed
    /// by default in this scalar type.
    const DISTRIBUTION_CAP: usize;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer representable in scalar")
    }

    fn from_count(v: u64) -> Self {
        Self::from_u64(v).expect("count representable in scalar")
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn approx(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// `self + 1/m`, used to grow harmonic sums. `m` must be positive.
    fn add_reciprocal(self, m: u64) -> Self {
        self + Self::one() / Self::from_count(m)
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;
    const DISTRIBUTION_CAP: usize = 60;
}

impl Scalar for f64 {
    const EXACT: bool = false;
    const DISTRIBUTION_CAP: usize = 60;
}

impl Scalar for BigRational {
    const EXACT: bool = true;
    const DISTRIBUTION_CAP: usize = 16;

    /// For reduced `a/b`, `(a*m + b) / (b*m)` can only share primes that also
    /// divide `d = gcd(b, m)`. The common factor is therefore found by
    /// working modulo the `d`-smooth part of `b*m`, which stays small, instead
    /// of taking a full gcd of two large integers.
    fn add_reciprocal(self, m: u64) -> Self {
        let (a, b) = self.into();
        let m_big = BigInt::from(m);
        let num = &a * &m_big + &b;
        let den = &b * &m_big;
        let d = (&b % &m_big).to_u64().expect("remainder below m").gcd(&m);
        if d == 1 {
            return BigRational::new_raw(num, den);
        }
        // Grow `smooth` to the largest divisor of `den` built from primes of `d`.
        let d_big = BigInt::from(d);
        let mut smooth = BigInt::one();
        loop {
            let probe = &smooth * &d_big;
            let next = (&den % &probe).gcd(&probe);
            if next == smooth {
                break;
            }
            smooth = next;
        }
        let common = (&num % &smooth).gcd(&smooth);
        if common.is_one() {
            BigRational::new_raw(num, den)
        } else {
            BigRational::new_raw(num / &common, den / &common)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_is_exact_for_rationals() {
        let third = BigRational::from_ratio(1, 3);
        assert_eq!(third.clone() + third.clone() + third, BigRational::from_int(1));
    }

    #[test]
    fn reciprocal_addition_stays_reduced() {
        let mut fast = BigRational::from_ratio(0, 1);
        let mut plain = BigRational::from_ratio(0, 1);
        for k in 1..=400u64 {
            for m in [k, k * k] {
                fast = fast.add_reciprocal(m);
                plain += BigRational::from_ratio(1, m as i64);
                assert_eq!(fast.numer(), plain.numer(), "m={m}");
                assert_eq!(fast.denom(), plain.denom(), "m={m}");
            }
        }
        let x = BigRational::from_ratio(-5, 12).add_reciprocal(12);
        assert_eq!(x, BigRational::from_ratio(-1, 3));
        assert_eq!(x.denom(), &BigInt::from(3));
    }

    #[test]
    fn approx_of_rational() {
        assert_eq!(BigRational::from_ratio(5, 4).approx(), 1.25);
        assert!((f32::from_ratio(1, 3).approx() - 1.0 / 3.0).abs() < 1e-7);
    }
}
