//! Truncated exponential generating functions over the rationals.
//!
//! A [`TruncatedEgf`] of order `N` stores `c_0 ..= c_N` for
//! `sum c_n x^n / n!`. Products use the binomial convolution, so
//! coefficients never pick up factorials. This module builds every series
//! from scratch and never reads the memo tables; it serves as an
//! independent check of the triangle recurrences.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::corenum::{binomial, factorial, int_pow, int_to_rat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedEgf {
    coeffs: Vec<BigRational>,
}

impl TruncatedEgf {
    /// Series with the given EGF coefficients; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        TruncatedEgf { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> BigRational) -> Self {
        Self::new((0..=order).map(f).collect())
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        Self::from_fn(order, |n| {
            if n == 0 {
                c.clone()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    /// `e^x`
    pub fn exp(order: usize) -> Self {
        Self::from_fn(order, |_| BigRational::one())
    }

    /// `e^x - 1`
    pub fn exp_minus_one(order: usize) -> Self {
        Self::from_fn(order, |n| {
            if n == 0 {
                BigRational::zero()
            } else {
                BigRational::one()
            }
        })
    }

    /// `-ln(1 - x)`, whose EGF coefficients are `(n-1)!`.
    pub fn neg_log_one_minus(order: usize) -> Self {
        Self::from_fn(order, |n| {
            if n == 0 {
                BigRational::zero()
            } else {
                int_to_rat(factorial(n - 1))
            }
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `[[x^n]]`, i.e. `n!` times the ordinary coefficient of `x^n`.
    pub fn coeff(&self, n: usize) -> Option<&BigRational> {
        self.coeffs.get(n)
    }

    fn check_order(&self, other: &TruncatedEgf) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn add(&self, other: &TruncatedEgf) -> Result<TruncatedEgf> {
        self.check_order(other)?;
        Ok(Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    /// `c_u = sum_{j+h=u} C(u, h) a_j b_h`
    pub fn mul(&self, other: &TruncatedEgf) -> Result<TruncatedEgf> {
        self.check_order(other)?;
        let n = self.order();
        Ok(Self::from_fn(n, |u| {
            (0..=u)
                .map(|h| {
                    &self.coeffs[u - h]
                        * &other.coeffs[h]
                        * int_to_rat(binomial(u as i64, h as i64))
                })
                .sum()
        }))
    }

    /// Multiplicative inverse to the same order.
    pub fn recip(&self) -> Result<TruncatedEgf> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let n = self.order();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        out.push(a0.recip());
        for u in 1..=n {
            let s: BigRational = (0..u)
                .map(|h| &self.coeffs[u - h] * &out[h] * int_to_rat(binomial(u as i64, h as i64)))
                .sum();
            out.push(-s / a0);
        }
        Ok(Self::new(out))
    }

    pub fn pow(&self, k: usize) -> TruncatedEgf {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    pub fn scale(&self, c: &BigRational) -> TruncatedEgf {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `f(kx)`: coefficient `c_n` becomes `k^n c_n`.
    pub fn scale_argument(&self, k: i64) -> TruncatedEgf {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c * int_to_rat(int_pow(k, n)))
                .collect(),
        )
    }
}

/// `x / (e^x - 1)`, built as the reciprocal of `(e^x - 1)/x`.
pub fn egf_bernoulli(order: usize) -> TruncatedEgf {
    // (e^x - 1)/x = sum x^n/(n+1)!, EGF coefficient 1/(n+1)
    TruncatedEgf::from_fn(order, |n| {
        BigRational::new(BigInt::one(), BigInt::from(n + 1))
    })
    .recip()
    .expect("constant term is 1")
}

/// `(-ln(1 - x))^k / k!`, whose coefficients are the cycle numbers `[n, k]`.
pub fn egf_cycle_stirling(k: usize, order: usize) -> TruncatedEgf {
    let inv_fact = BigRational::new(BigInt::one(), factorial(k));
    TruncatedEgf::neg_log_one_minus(order)
        .pow(k)
        .scale(&inv_fact)
}

/// `(e^x - 1)^k / k!`, whose coefficients are the partition numbers `{n, k}`.
pub fn egf_partition_stirling(k: usize, order: usize) -> TruncatedEgf {
    let inv_fact = BigRational::new(BigInt::one(), factorial(k));
    TruncatedEgf::exp_minus_one(order).pow(k).scale(&inv_fact)
}

/// `(e^x - 1)^k / k! * kx / (e^{kx} - 1)`, whose coefficients are `B(n, k)`.
pub fn egf_bs_second(k: usize, order: usize) -> TruncatedEgf {
    egf_partition_stirling(k, order)
        .mul(&egf_bernoulli(order).scale_argument(k as i64))
        .expect("same order")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn mul_examples() {
        let e = TruncatedEgf::exp(10);
        let e2 = e.mul(&e).unwrap();
        for n in 0..=10 {
            assert_eq!(e2.coeffs()[n], int_to_rat(int_pow(2, n)));
        }
        let a = TruncatedEgf::from_fn(6, |n| rat(n as i64 * 3 - 1, n as i64 + 2));
        assert_eq!(a.mul(&TruncatedEgf::one(6)).unwrap(), a);
        assert!(a.mul(&TruncatedEgf::one(5)).is_err());
    }

    #[test]
    fn half_square_of_exp_minus_one_is_partition_column_two() {
        // {n, 2} = 2^(n-1) - 1 for n >= 1
        let f = TruncatedEgf::exp_minus_one(12);
        let half = f.mul(&f).unwrap().scale(&rat(1, 2));
        for n in 1..=12usize {
            assert_eq!(half.coeffs()[n], int_to_rat(int_pow(2, n - 1) - 1));
        }
    }

    #[test]
    fn recip_examples() {
        assert_eq!(TruncatedEgf::one(4).recip().unwrap(), TruncatedEgf::one(4));
        let b = egf_bernoulli(8);
        assert_eq!(b.coeffs()[1], rat(-1, 2));
        assert_eq!(b.coeffs()[4], rat(-1, 30));
        assert_eq!(b.coeffs()[7], rat(0, 1));
        assert_eq!(
            TruncatedEgf::exp_minus_one(3).recip(),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn stirling_egf_examples() {
        assert_eq!(egf_cycle_stirling(0, 10), TruncatedEgf::one(10));
        assert_eq!(egf_cycle_stirling(1, 5).coeffs()[3], rat(2, 1));
        assert_eq!(egf_cycle_stirling(2, 6).coeffs()[4], rat(11, 1));
        assert_eq!(egf_partition_stirling(0, 8), TruncatedEgf::one(8));
        assert_eq!(egf_partition_stirling(2, 6).coeffs()[4], rat(7, 1));
        for k in 0..=6 {
            assert_eq!(egf_partition_stirling(k, 8).coeffs()[k], rat(1, 1));
            assert_eq!(egf_cycle_stirling(k, 8).coeffs()[k], rat(1, 1));
        }
    }

    #[test]
    fn bs_second_egf_examples() {
        assert_eq!(egf_bs_second(2, 12).coeffs()[4], rat(-1, 1));
        assert_eq!(egf_bs_second(3, 12).coeffs()[9], rat(-809, 1));
        for k in 1..=6 {
            assert_eq!(egf_bs_second(k, 12).coeffs()[k], rat(1, 1));
        }
    }

    fn series(order: usize) -> impl Strategy<Value = TruncatedEgf> {
        proptest::collection::vec((-20i64..20, 1i64..7), order + 1)
            .prop_map(|v| TruncatedEgf::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn mul_commutes_and_associates(
            (a, b, c) in (0usize..=20).prop_flat_map(|n| (series(n), series(n), series(n)))
        ) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn recip_inverts(a in (0usize..=12).prop_flat_map(series)) {
            prop_assume!(!a.coeffs()[0].is_zero());
            let r = a.recip().unwrap();
            prop_assert_eq!(a.mul(&r).unwrap(), TruncatedEgf::one(a.order()));
        }
    }
}
