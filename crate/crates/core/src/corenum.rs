//! Arithmetic kernel: generalized binomials, Bernoulli numbers, p-adic
//! valuations and the von Staudt-Clausen denominator.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};

/// Coefficient of `x^k` in `(1 + x)^n`, for any sign of `n`.
///
/// Zero whenever `k < 0`, and for `n >= 0` also when `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        // C(-m, k) = (-1)^k C(m + k - 1, m - 1)
        let m = -n;
        let c = binomial(m + k - 1, m - 1);
        return if k.is_odd() { -c } else { c };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc == C(n, i) here, so the division is exact
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `n!`
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `base^exp` with `0^0 = 1`.
pub fn int_pow(base: i64, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

pub fn int_to_rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Returns the integer if `q` has denominator 1.
pub fn rat_to_int(q: &BigRational) -> Option<BigInt> {
    q.is_integer().then(|| q.numer().clone())
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// p-adic order of a rational. `Infinite` is the order of zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    /// True when the order is at least `bound`.
    pub fn at_least(self, bound: i64) -> bool {
        self >= Valuation::Finite(bound)
    }
}

impl core::ops::Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl PartialOrd<i64> for Valuation {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Valuation::Finite(*other)))
    }
}

impl PartialEq<i64> for Valuation {
    fn eq(&self, other: &i64) -> bool {
        *self == Valuation::Finite(*other)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Order of `p` in `q`: numerator order minus denominator order.
pub fn padic_valuation(q: &BigRational, p: u64) -> Result<Valuation> {
    require_prime(p)?;
    if q.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let p = BigInt::from(p);
    Ok(Valuation::Finite(
        int_valuation(q.numer(), &p) - int_valuation(q.denom(), &p),
    ))
}

/// Product of the primes `p` with `p - 1 | n`, for even `n >= 2`.
pub fn von_staudt_clausen_denominator(n: usize) -> Result<BigInt> {
    if n < 2 || n % 2 == 1 {
        return Err(domain("von Staudt-Clausen needs an even index >= 2"));
    }
    let n = n as u64;
    Ok((1..=n)
        .filter(|d| n % d == 0 && is_prime(d + 1))
        .fold(BigInt::one(), |acc, d| acc * (d + 1)))
}

/// Memoized Bernoulli numbers with `B_1 = -1/2`.
#[derive(Clone, Debug)]
pub struct BernoulliNumbers {
    values: Vec<BigRational>,
}

impl Default for BernoulliNumbers {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliNumbers {
    pub fn new() -> Self {
        BernoulliNumbers {
            values: vec![BigRational::one()],
        }
    }

    /// Number of values currently cached (`B_0 .. B_{len-1}`).
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Cached value, if already computed.
    pub fn get(&self, n: usize) -> Option<&BigRational> {
        self.values.get(n)
    }

    pub fn ensure(&mut self, n: usize) {
        while self.values.len() <= n {
            let m = self.values.len();
            let next = self.next_value(m);
            self.values.push(next);
        }
    }

    pub fn value(&mut self, n: usize) -> BigRational {
        self.ensure(n);
        self.values[n].clone()
    }

    /// `B_0 ..= B_n`.
    pub fn prefix(&mut self, n: usize) -> &[BigRational] {
        self.ensure(n);
        &self.values[..=n]
    }

    // (-1)^m B_m = sum_{k<=m} C(m,k) B_k. At odd m this gives
    // B_m = -1/2 sum_{k<m} C(m,k) B_k. At odd m+1 >= 3, where B_{m+1} = 0,
    // it gives sum_{k<=m} C(m+1,k) B_k = 0, which fixes the even B_m.
    fn next_value(&self, m: usize) -> BigRational {
        let mi = m as i64;
        if m % 2 == 1 {
            let s: BigRational = (0..m)
                .map(|k| &self.values[k] * int_to_rat(binomial(mi, k as i64)))
                .sum();
            -s / int_to_rat(2)
        } else {
            let s: BigRational = (0..m)
                .map(|k| &self.values[k] * int_to_rat(binomial(mi + 1, k as i64)))
                .sum();
            -s / int_to_rat(mi + 1)
        }
    }
}
