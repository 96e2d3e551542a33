//! Generalized harmonic numbers.
//!
//! `H(n, k)` is the power sum `sum_{j<=n} 1/j^k`; `G(n, k)` is the
//! elementary symmetric sum of `1/i` over `k`-subsets of `1..=n`, obtained
//! from the cycle triangle as `[n+1, k+1] / n!`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::corenum::{factorial, int_to_rat};
use crate::stirling::{IdentityCheck, IdentityId};
use crate::Tables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HarmonicFamily {
    H,
    G,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicValue {
    pub family: HarmonicFamily,
    pub n: usize,
    pub k: usize,
    pub value: BigRational,
}

/// `sum_{j=1}^{n} 1/j^k`, summed over the common denominator `lcm(1..n)^k`.
pub fn harmonic_h(n: usize, k: usize) -> BigRational {
    if n == 0 {
        return BigRational::zero();
    }
    if k == 0 {
        return int_to_rat(n);
    }
    let lcm = (1..=n).fold(BigInt::one(), |acc, j| acc.lcm(&BigInt::from(j)));
    let den = num_traits::pow(lcm, k);
    let num: BigInt = (1..=n)
        .map(|j| &den / num_traits::pow(BigInt::from(j), k))
        .sum();
    BigRational::new(num, den)
}

impl Tables {
    /// Memoized [`harmonic_h`].
    pub fn harmonic_h(&mut self, n: usize, k: usize) -> BigRational {
        self.power_sums
            .entry((n, k))
            .or_insert_with(|| harmonic_h(n, k))
            .clone()
    }

    pub fn harmonic_g(&mut self, n: usize, k: usize) -> BigRational {
        BigRational::new(self.cycle_stirling(n + 1, k as i64 + 1), factorial(n))
    }

    pub fn harmonic(&mut self, family: HarmonicFamily, n: usize, k: usize) -> HarmonicValue {
        let value = match family {
            HarmonicFamily::H => self.harmonic_h(n, k),
            HarmonicFamily::G => self.harmonic_g(n, k),
        };
        HarmonicValue {
            family,
            n,
            k,
            value,
        }
    }

    /// `k [n+1, k+1] = -sum_{j<k} (-1)^(k-j) H(n, k-j) [n+1, j+1]`.
    ///
    /// At `k = 0` both sides are the empty value 0.
    pub fn verify_conv(&mut self, n: usize, k: usize) -> IdentityCheck {
        let lhs = int_to_rat(self.cycle_stirling(n + 1, k as i64 + 1) * k);
        let mut rhs = BigRational::zero();
        for j in 0..k {
            let term =
                self.harmonic_h(n, k - j) * int_to_rat(self.cycle_stirling(n + 1, j as i64 + 1));
            if (k - j) % 2 == 1 {
                rhs += term;
            } else {
                rhs -= term;
            }
        }
        IdentityCheck::new(IdentityId::Conv, n as i64, k as i64, lhs, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corenum::padic_valuation;
    use crate::corenum::primes_up_to;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn naive_h(n: usize, k: u32) -> BigRational {
        (1..=n as i64)
            .map(|j| BigRational::new(1.into(), BigInt::from(j).pow(k)))
            .sum()
    }

    /// Sum of 1/(i_1 ... i_k) over all k-subsets of 1..=n.
    fn subset_g(n: usize, k: usize) -> BigRational {
        let mut total = BigRational::zero();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == k {
                let prod: i64 = (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| i as i64 + 1)
                    .product();
                total += rat(1, prod);
            }
        }
        total
    }

    #[test]
    fn h_examples() {
        assert_eq!(harmonic_h(3, 1), rat(11, 6));
        assert_eq!(harmonic_h(5, 0), rat(5, 1));
        assert_eq!(harmonic_h(0, 4), rat(0, 1));
        for n in 0..15 {
            for k in 0..5 {
                assert_eq!(harmonic_h(n, k), naive_h(n, k as u32));
            }
        }
    }

    #[test]
    fn g_examples() {
        let mut t = Tables::new();
        assert_eq!(t.harmonic_g(3, 2), rat(1, 1));
        assert_eq!(t.harmonic_g(4, 0), rat(1, 1));
        assert_eq!(t.harmonic_g(3, 3), rat(1, 6));
        assert_eq!(t.harmonic_g(3, 1), harmonic_h(3, 1));
    }

    #[test]
    fn g_matches_subset_enumeration() {
        let mut t = Tables::new();
        for n in 0..=12 {
            for k in 0..=n {
                let g = t.harmonic_g(n, k);
                assert_eq!(g, subset_g(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn g_bridge_is_integral() {
        let mut t = Tables::new();
        for n in 0..=30 {
            for k in 0..=n {
                let scaled = t.harmonic_g(n, k) * int_to_rat(factorial(n));
                assert!(scaled.is_integer());
                assert_eq!(scaled, int_to_rat(t.cycle_stirling(n + 1, k as i64 + 1)));
            }
        }
    }

    #[test]
    fn harmonic_denominators_avoid_large_primes() {
        let mut t = Tables::new();
        for n in 1..=20 {
            for k in 0..4 {
                for fam in [HarmonicFamily::H, HarmonicFamily::G] {
                    let v = t.harmonic(fam, n, k).value;
                    for p in primes_up_to(50).into_iter().filter(|&p| p as usize > n) {
                        assert!(padic_valuation(&v, p).unwrap() >= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn conv_examples() {
        let mut t = Tables::new();
        let c = t.verify_conv(3, 1);
        assert!(c.pass);
        assert_eq!(c.lhs, rat(11, 1));
        assert_eq!(c.lhs, t.harmonic_g(3, 1) * int_to_rat(6));
        let c = t.verify_conv(0, 1);
        assert!(c.pass);
        assert_eq!(c.lhs, rat(0, 1));

        // direct evaluation at n = 6, k = 3 with the naive H
        let c = t.verify_conv(6, 3);
        assert!(c.pass);
        let rhs = naive_h(6, 3) * int_to_rat(t.cycle_stirling(7, 1))
            - naive_h(6, 2) * int_to_rat(t.cycle_stirling(7, 2))
            + naive_h(6, 1) * int_to_rat(t.cycle_stirling(7, 3));
        assert_eq!(c.rhs, rhs);
    }

    #[test]
    fn conv_sweep() {
        let mut t = Tables::new();
        for n in 0..=25 {
            for k in 1..=n {
                assert!(t.verify_conv(n, k).pass, "n={n} k={k}");
            }
        }
    }
}
