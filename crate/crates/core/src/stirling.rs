//! Stirling numbers of both kinds, the cycle-number identity family and the
//! polynomials `Q_k` with `Q_k(n) = [n, n-k]`.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::corenum::{binomial, int_pow, int_to_rat};
use crate::error::{domain, Error, Result};
use crate::poly::Polynomial;
use crate::Tables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// `[n+1, m+1] = sum_h C(h+m, m) [n, h+m]`
    Recst1,
    /// `[n+1, m+1] = (-1)^(n-m) sum_h C(h+m, m) [n, h+m] (-n)^h`
    Recst2,
    /// `[n, m] = (-1)^(n-m) sum_h C(h+m-1, m-1) [n, h+m] (-n)^h`, `n > 0`
    Recst3,
    /// `(-1)^(n-m) [n, m] (-n)^m = sum_h C(h-1, m-1) [n, h] (-n)^h`, `n > 0`
    Recst4,
    /// Harmonic / cycle-number convolution, with `m` in the role of `k`.
    Conv,
    /// Binomial inversion `sum_k (-1)^(k-j) C(k, j) C(n, k) = [n = j]`, `m = j`.
    Hs1,
    /// `B(x, x-n)` from `A` values; `m` holds `x`.
    Bnk1,
    /// `A(x, x-n)` from `B` values; `m` holds `x`.
    Bnk2,
}

impl IdentityId {
    pub const STIRLING: [IdentityId; 6] = [
        IdentityId::Recst1,
        IdentityId::Recst2,
        IdentityId::Recst3,
        IdentityId::Recst4,
        IdentityId::Conv,
        IdentityId::Hs1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Recst1 => "recst1",
            IdentityId::Recst2 => "recst2",
            IdentityId::Recst3 => "recst3",
            IdentityId::Recst4 => "recst4",
            IdentityId::Conv => "conv",
            IdentityId::Hs1 => "hs1",
            IdentityId::Bnk1 => "bnk1",
            IdentityId::Bnk2 => "bnk2",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Both sides of an identity instance. `pass` iff they are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub id: IdentityId,
    pub n: i64,
    pub m: i64,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub pass: bool,
}

impl IdentityCheck {
    pub fn new(id: IdentityId, n: i64, m: i64, lhs: BigRational, rhs: BigRational) -> Self {
        let pass = lhs == rhs;
        IdentityCheck {
            id,
            n,
            m,
            lhs,
            rhs,
            pass,
        }
    }
}

/// Coefficients of `x (x+1) ... (x+n-1)`, i.e. row `n` of the cycle triangle.
pub fn cycle_row_via_product(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for j in 0..n {
        // multiply by (x + j)
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (i, c) in row.iter().enumerate() {
            next[i + 1] += c;
            next[i] += c * j;
        }
        row = next;
    }
    row
}

fn sign(e: i64) -> BigInt {
    if e.rem_euclid(2) == 1 {
        -BigInt::one()
    } else {
        BigInt::one()
    }
}

impl Tables {
    fn extend_cycle(&mut self, n: usize) {
        while self.cycle.max_n().is_none_or(|m| m < n) {
            let row = match self.cycle.max_n() {
                None => vec![BigInt::one()],
                Some(prev_n) => {
                    let prev = self.cycle.row(prev_n).unwrap();
                    let r = prev_n + 1;
                    (0..=r)
                        .map(|k| {
                            let stay = if k <= prev_n {
                                &prev[k] * prev_n
                            } else {
                                BigInt::zero()
                            };
                            let step = if k > 0 {
                                prev[k - 1].clone()
                            } else {
                                BigInt::zero()
                            };
                            stay + step
                        })
                        .collect()
                }
            };
            self.cycle.push_row(row);
        }
    }

    fn extend_partition(&mut self, n: usize) {
        while self.partition.max_n().is_none_or(|m| m < n) {
            let row = match self.partition.max_n() {
                None => vec![BigInt::one()],
                Some(prev_n) => {
                    let prev = self.partition.row(prev_n).unwrap();
                    (0..=prev_n + 1)
                        .map(|k| {
                            let stay = if k <= prev_n {
                                &prev[k] * k
                            } else {
                                BigInt::zero()
                            };
                            let step = if k > 0 {
                                prev[k - 1].clone()
                            } else {
                                BigInt::zero()
                            };
                            stay + step
                        })
                        .collect()
                }
            };
            self.partition.push_row(row);
        }
    }

    /// Unsigned Stirling number of the first kind `[n, k]`.
    pub fn cycle_stirling(&mut self, n: usize, k: i64) -> BigInt {
        self.extend_cycle(n);
        self.cycle.get(n, k).unwrap()
    }

    /// Stirling number of the second kind `{n, k}`.
    pub fn partition_stirling(&mut self, n: usize, k: i64) -> BigInt {
        self.extend_partition(n);
        self.partition.get(n, k).unwrap()
    }

    pub fn cycle_row(&mut self, n: usize) -> &[BigInt] {
        self.extend_cycle(n);
        self.cycle.row(n).unwrap()
    }

    pub fn partition_row(&mut self, n: usize) -> &[BigInt] {
        self.extend_partition(n);
        self.partition.row(n).unwrap()
    }

    /// Evaluates both sides of one instance of the named identity.
    pub fn verify_identity(&mut self, id: IdentityId, n: usize, m: usize) -> Result<IdentityCheck> {
        let (ni, mi) = (n as i64, m as i64);
        let (lhs, rhs) = match id {
            IdentityId::Recst1 => {
                let lhs = self.cycle_stirling(n + 1, mi + 1);
                let rhs: BigInt = (0..=n.saturating_sub(m))
                    .map(|h| {
                        let h = h as i64;
                        binomial(h + mi, mi) * self.cycle_stirling(n, h + mi)
                    })
                    .sum();
                (lhs, rhs)
            }
            IdentityId::Recst2 => {
                let lhs = self.cycle_stirling(n + 1, mi + 1);
                let s: BigInt = (0..=n.saturating_sub(m))
                    .map(|h| {
                        binomial(h as i64 + mi, mi)
                            * self.cycle_stirling(n, h as i64 + mi)
                            * int_pow(-ni, h)
                    })
                    .sum();
                (lhs, sign(ni - mi) * s)
            }
            IdentityId::Recst3 => {
                if n == 0 {
                    return Err(domain("recst3 requires n > 0"));
                }
                let lhs = self.cycle_stirling(n, mi);
                let s: BigInt = (0..=n.saturating_sub(m))
                    .map(|h| {
                        binomial(h as i64 + mi - 1, mi - 1)
                            * self.cycle_stirling(n, h as i64 + mi)
                            * int_pow(-ni, h)
                    })
                    .sum();
                (lhs, sign(ni - mi) * s)
            }
            IdentityId::Recst4 => {
                if n == 0 {
                    return Err(domain("recst4 requires n > 0"));
                }
                let lhs = sign(ni - mi) * self.cycle_stirling(n, mi) * int_pow(-ni, m);
                let rhs: BigInt = (0..=n)
                    .map(|h| {
                        binomial(h as i64 - 1, mi - 1)
                            * self.cycle_stirling(n, h as i64)
                            * int_pow(-ni, h)
                    })
                    .sum();
                (lhs, rhs)
            }
            IdentityId::Conv => return Ok(self.verify_conv(n, m)),
            IdentityId::Hs1 => {
                let lhs: BigInt = (0..=ni)
                    .map(|k| sign(k - mi) * binomial(k, mi) * binomial(ni, k))
                    .sum();
                let rhs = if n == m {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                (lhs, rhs)
            }
            IdentityId::Bnk1 | IdentityId::Bnk2 => {
                return Err(domain("use verify_interrelation for bnk1/bnk2"))
            }
        };
        Ok(IdentityCheck::new(
            id,
            ni,
            mi,
            int_to_rat(lhs),
            int_to_rat(rhs),
        ))
    }

    /// The degree-`2k` polynomial `Q_k` with `Q_k(n) = [n, n-k]` for `n >= k`.
    pub fn q_polynomial(&mut self, k: usize) -> Result<Polynomial> {
        let points: Vec<(i64, BigRational)> = (k..=3 * k)
            .map(|n| (n as i64, int_to_rat(self.cycle_stirling(n, (n - k) as i64))))
            .collect();
        let q = Polynomial::interpolate(&points)?;
        if q.degree().is_some_and(|d| d > 2 * k) {
            return Err(Error::Consistency("Q_k degree exceeds 2k".to_string()));
        }
        let probe = 3 * k + 1;
        if q.eval_int(probe as i64) != int_to_rat(self.cycle_stirling(probe, (probe - k) as i64)) {
            return Err(Error::Consistency(
                "Q_k misses an off-node value".to_string(),
            ));
        }
        Ok(q)
    }
}
