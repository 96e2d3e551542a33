//! Exact and p-adic checks of the harmonic-number expansions at `n = p - 1`.
//!
//! A congruence `q = 0 mod p^m` between rationals is read as
//! `v_p(q) >= m`. Every sum is evaluated exactly before its valuation is
//! taken, so reports carry the achieved order and sharper-than-claimed
//! results are visible.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::corenum::{binomial, int_pow, int_to_rat, padic_valuation, require_prime, Valuation};
use crate::error::{domain, Result};
use crate::Tables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClaimId {
    /// Finite expansion of `G(p-1, k)` in higher `G(p-1, k+j) p^j`.
    Ge10ee,
    /// Its `k = 0` reduction `sum_j (-1)^j G(p-1, j+1) p^j = 0`.
    Ge10een,
    /// Truncated p-adic expansion of `H(p-1, k)`.
    E10e,
    /// Truncated Bernoulli-weighted sum of `H(p-1, 2k+j+1)`.
    Bern,
    /// The `k = 0` case of [`ClaimId::Bern`].
    Ee10biss,
    /// Truncated Bernoulli-weighted sum of `G(p-1, j+1)`.
    Conj1,
    /// `sum_j B_j C(j+2i-1, j) [p, j+2i] p^j = 0`.
    Conj2,
}

impl ClaimId {
    pub fn name(self) -> &'static str {
        match self {
            ClaimId::Ge10ee => "ge10ee",
            ClaimId::Ge10een => "ge10een",
            ClaimId::E10e => "e10e",
            ClaimId::Bern => "bern",
            ClaimId::Ee10biss => "ee10biss",
            ClaimId::Conj1 => "conj1",
            ClaimId::Conj2 => "conj2",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClaimedBound {
    /// The sum is the rational 0.
    ExactZero,
    /// `v_p(sum) >= m`.
    AtLeast(i64),
}

impl fmt::Display for ClaimedBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimedBound::ExactZero => f.write_str("exactZero"),
            ClaimedBound::AtLeast(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    pub claim: ClaimId,
    pub prime: u64,
    /// Named indices of the instance, e.g. `("k", 2)`, `("J", 4)`.
    pub params: Vec<(&'static str, i64)>,
    pub claimed: ClaimedBound,
    /// The exact value of the verified sum or residual.
    pub value: BigRational,
    pub achieved: Valuation,
    pub pass: bool,
}

impl CongruenceReport {
    fn new(
        claim: ClaimId,
        prime: u64,
        params: Vec<(&'static str, i64)>,
        claimed: ClaimedBound,
        value: BigRational,
    ) -> Result<Self> {
        let achieved = padic_valuation(&value, prime)?;
        let pass = match claimed {
            ClaimedBound::ExactZero => value.is_zero(),
            ClaimedBound::AtLeast(m) => achieved.at_least(m),
        };
        Ok(CongruenceReport {
            claim,
            prime,
            params,
            claimed,
            value,
            achieved,
            pass,
        })
    }

    pub fn param(&self, name: &str) -> Option<i64> {
        self.params
            .iter()
            .find(|(k, _)| *k == name)
            .map(|&(_, v)| v)
    }
}

fn signed(q: BigRational, negative: bool) -> BigRational {
    if negative {
        -q
    } else {
        q
    }
}

fn require_at_least_five(p: u64) -> Result<()> {
    require_prime(p)?;
    if p < 5 {
        return Err(domain("the truncated Bernoulli congruences need p >= 5"));
    }
    Ok(())
}

impl Tables {
    /// Residual `G(p-1,k) - s sum_{j<=p-1-k} (-1)^j C(j+k, j) G(p-1, k+j) p^j`
    /// with `s = (-1)^(p-1-k)`; claimed to vanish exactly.
    ///
    /// `s` equals `(-1)^k` at every odd prime; the `p - 1` in the exponent
    /// only matters at `p = 2`.
    pub fn verify_g_expansion(&mut self, p: u64, k: usize) -> Result<CongruenceReport> {
        require_prime(p)?;
        let pm1 = (p - 1) as usize;
        if k > pm1 {
            return Err(domain("g expansion needs k <= p - 1"));
        }
        let mut sum = BigRational::zero();
        for j in 0..=pm1 - k {
            let term = self.harmonic_g(pm1, k + j)
                * int_to_rat(binomial((j + k) as i64, j as i64) * int_pow(p as i64, j));
            sum += signed(term, j % 2 == 1);
        }
        let residual = self.harmonic_g(pm1, k) - signed(sum, (pm1 - k) % 2 == 1);
        CongruenceReport::new(
            ClaimId::Ge10ee,
            p,
            vec![("k", k as i64)],
            ClaimedBound::ExactZero,
            residual,
        )
    }

    /// `sum_j (-1)^j G(p-1, j+1) p^j`, claimed to vanish for odd `p`.
    pub fn verify_g_expansion_reduced(&mut self, p: u64) -> Result<CongruenceReport> {
        require_prime(p)?;
        if p == 2 {
            return Err(domain("the reduced g expansion holds for odd primes"));
        }
        let pm1 = (p - 1) as usize;
        let mut sum = BigRational::zero();
        for j in 0..pm1 {
            let term = self.harmonic_g(pm1, j + 1) * int_to_rat(int_pow(p as i64, j));
            sum += signed(term, j % 2 == 1);
        }
        CongruenceReport::new(
            ClaimId::Ge10een,
            p,
            Vec::new(),
            ClaimedBound::ExactZero,
            sum,
        )
    }

    /// `sum_{j<=p-2i} B_j C(j+2i-1, j) [p, j+2i] p^j`, claimed to vanish.
    pub fn verify_theorem52(&mut self, p: u64, i: usize) -> Result<CongruenceReport> {
        require_prime(p)?;
        if i == 0 {
            return Err(domain("theorem 5.2 sum needs i >= 1"));
        }
        let pu = p as usize;
        let mut sum = BigRational::zero();
        for j in 0..=pu.saturating_sub(2 * i) {
            let coeff = binomial((j + 2 * i - 1) as i64, j as i64)
                * self.cycle_stirling(pu, (j + 2 * i) as i64)
                * int_pow(p as i64, j);
            sum += self.bernoulli(j) * int_to_rat(coeff);
        }
        CongruenceReport::new(
            ClaimId::Conj2,
            p,
            vec![("i", i as i64)],
            ClaimedBound::ExactZero,
            sum,
        )
    }

    /// Residual `H(p-1,k) - (-1)^k sum_{j<=J} C(j+k-1, j) H(p-1, k+j) p^j`,
    /// claimed to have order at least `J + 1`.
    pub fn verify_h_expansion(
        &mut self,
        p: u64,
        k: usize,
        truncation: usize,
    ) -> Result<CongruenceReport> {
        require_prime(p)?;
        if k == 0 {
            return Err(domain("h expansion needs k >= 1"));
        }
        let pm1 = (p - 1) as usize;
        let mut sum = BigRational::zero();
        for j in 0..=truncation {
            sum += self.harmonic_h(pm1, k + j)
                * int_to_rat(binomial((j + k - 1) as i64, j as i64) * int_pow(p as i64, j));
        }
        let residual = self.harmonic_h(pm1, k) - signed(sum, k % 2 == 1);
        CongruenceReport::new(
            ClaimId::E10e,
            p,
            vec![("k", k as i64), ("J", truncation as i64)],
            ClaimedBound::AtLeast(truncation as i64 + 1),
            residual,
        )
    }

    /// `sum_{j<=2n+1} C(j+2k, 2k) B_j H(p-1, 2k+j+1) (-p)^j`, claimed to have
    /// order at least `2n + 3`.
    pub fn verify_washington(&mut self, p: u64, k: usize, n: usize) -> Result<CongruenceReport> {
        require_at_least_five(p)?;
        let pm1 = (p - 1) as usize;
        let mut sum = BigRational::zero();
        for j in 0..=2 * n + 1 {
            let b = self.bernoulli(j);
            if b.is_zero() {
                continue;
            }
            let coeff = binomial((j + 2 * k) as i64, (2 * k) as i64) * int_pow(-(p as i64), j);
            sum += b * self.harmonic_h(pm1, 2 * k + j + 1) * int_to_rat(coeff);
        }
        let claim = if k == 0 {
            ClaimId::Ee10biss
        } else {
            ClaimId::Bern
        };
        CongruenceReport::new(
            claim,
            p,
            vec![("k", k as i64), ("n", n as i64)],
            ClaimedBound::AtLeast(2 * n as i64 + 3),
            sum,
        )
    }

    /// `sum_{j<=2n+1} (j+1) B_j G(p-1, j+1) p^j`, claimed to have order at
    /// least `2n + 3`.
    pub fn verify_g_congruence(&mut self, p: u64, n: usize) -> Result<CongruenceReport> {
        require_at_least_five(p)?;
        let pm1 = (p - 1) as usize;
        let mut sum = BigRational::zero();
        for j in 0..=2 * n + 1 {
            let b = self.bernoulli(j);
            if b.is_zero() {
                continue;
            }
            sum += b * self.harmonic_g(pm1, j + 1) * int_to_rat(int_pow(p as i64, j) * (j + 1));
        }
        CongruenceReport::new(
            ClaimId::Conj1,
            p,
            vec![("n", n as i64)],
            ClaimedBound::AtLeast(2 * n as i64 + 3),
            sum,
        )
    }
}
