//! Bernoulli-Stirling triangles.
//!
//! The first kind is
//!
//! ```text
//! A(n, k) = sum_h B_h C(k+h-1, h) [n, h+k] n^h
//! ```
//!
//! and the second kind is
//!
//! ```text
//! B(n, k) = sum_h B_h C(n, h) {n-h, k} k^h
//! ```
//!
//! Both sums are finite (`h <= n - k`) and are evaluated over the rationals;
//! the result is required to be an integer, so every lookup doubles as an
//! integrality check. Both triangles vanish when `n - k` is odd.
//!
//! The two triangles are glued along negative indices by
//! `A(-n, -k) = B(k, n)`, which is what [`Tables::tandem`] exposes. Along
//! each diagonal the values are polynomial: `A(x, x-k) = P_k(x)` and
//! `B(x+k, x) = P_k(-x)`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::corenum::{binomial, int_pow, int_to_rat, rat_to_int};
use crate::error::{domain, Error, Result};
use crate::poly::Polynomial;
use crate::stirling::{IdentityCheck, IdentityId};
use crate::triangle::{TriangleKind, TriangleTable};
use crate::Tables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TandemSource {
    /// Non-negative quadrant, read from the `A` triangle.
    ADirect,
    /// Negative quadrant, `A(n, k) = B(-k, -n)`.
    BViaDuality,
    /// Mixed signs: outside both triangles, always zero.
    MixedSign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TandemEntry {
    pub n: i64,
    pub k: i64,
    pub value: BigInt,
    pub source: TandemSource,
}

/// Cells the tandem layout leaves empty: above the diagonal or odd `n - k`.
pub fn tandem_is_void(n: i64, k: i64) -> bool {
    k > n || (n - k).rem_euclid(2) == 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Interrelation {
    /// `B(x, x-n) = sum_u C(n+x, n-u) C(n-x, n+u) A(n+u, u)`
    Bnk1,
    /// `A(x, x-n) = sum_u C(n+x, n-u) C(n-x, n+u) B(n+u, u)`
    Bnk2,
}

impl fmt::Display for Interrelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Interrelation::Bnk1 => "bnk1",
            Interrelation::Bnk2 => "bnk2",
        })
    }
}

fn require_integer(q: BigRational, what: &str, n: usize, k: usize) -> Result<BigInt> {
    rat_to_int(&q)
        .ok_or_else(|| Error::Consistency(format!("{what}({n}, {k}) = {q} is not an integer")))
}

impl Tables {
    /// The defining sum of `A(n, k)`, as an unreduced-to-integer rational.
    pub fn bs_first_sum(&mut self, n: usize, k: usize) -> BigRational {
        if k > n {
            return BigRational::zero();
        }
        self.bernoulli.ensure(n);
        self.cycle_row(n);
        let ki = k as i64;
        let mut acc = BigRational::zero();
        for h in 0..=n - k {
            let b = &self.bernoulli.get(h).unwrap();
            if b.is_zero() {
                continue;
            }
            let c = binomial(ki + h as i64 - 1, h as i64);
            if c.is_zero() {
                continue;
            }
            let coeff = c * &self.cycle.row(n).unwrap()[h + k] * int_pow(n as i64, h);
            acc += *b * int_to_rat(coeff);
        }
        acc
    }

    /// The defining sum of `B(n, k)`.
    pub fn bs_second_sum(&mut self, n: usize, k: usize) -> BigRational {
        if k > n {
            return BigRational::zero();
        }
        self.bernoulli.ensure(n);
        self.partition_row(n);
        let mut acc = BigRational::zero();
        for h in 0..=n - k {
            let b = self.bernoulli.get(h).unwrap();
            if b.is_zero() {
                continue;
            }
            let s = &self.partition.row(n - h).unwrap()[k];
            let coeff = binomial(n as i64, h as i64) * s * int_pow(k as i64, h);
            acc += b * int_to_rat(coeff);
        }
        acc
    }

    /// Row `n` of `A`, entries `k = 0..=n`.
    pub fn bs_first_row(&mut self, n: usize) -> Result<Vec<BigInt>> {
        if let Some(row) = self.bs_first_rows.get(&n) {
            return Ok(row.clone());
        }
        let row = (0..=n)
            .map(|k| require_integer(self.bs_first_sum(n, k), "A", n, k))
            .collect::<Result<Vec<_>>>()?;
        self.bs_first_rows.insert(n, row.clone());
        Ok(row)
    }

    /// Row `n` of `B`, entries `k = 0..=n`.
    pub fn bs_second_row(&mut self, n: usize) -> Result<Vec<BigInt>> {
        if let Some(row) = self.bs_second_rows.get(&n) {
            return Ok(row.clone());
        }
        let row = (0..=n)
            .map(|k| require_integer(self.bs_second_sum(n, k), "B", n, k))
            .collect::<Result<Vec<_>>>()?;
        self.bs_second_rows.insert(n, row.clone());
        Ok(row)
    }

    /// `A(n, k)`; zero for `k > n`.
    pub fn bs_first(&mut self, n: usize, k: usize) -> Result<BigInt> {
        if k > n {
            return Ok(BigInt::zero());
        }
        if let Some(row) = self.bs_first_rows.get(&n) {
            return Ok(row[k].clone());
        }
        Ok(self.bs_first_row(n)?.swap_remove(k))
    }

    /// `B(n, k)`; zero for `k > n`. `B(0, 0) = 1` and `B(n, 0) = 0` for `n > 0`.
    pub fn bs_second(&mut self, n: usize, k: usize) -> Result<BigInt> {
        if k > n {
            return Ok(BigInt::zero());
        }
        if let Some(row) = self.bs_second_rows.get(&n) {
            return Ok(row[k].clone());
        }
        Ok(self.bs_second_row(n)?.swap_remove(k))
    }

    /// Rows `0..=max_n` of the requested triangle.
    pub fn triangle(&mut self, kind: TriangleKind, max_n: usize) -> Result<TriangleTable> {
        let rows = match kind {
            TriangleKind::Cycle => (0..=max_n).map(|n| self.cycle_row(n).to_vec()).collect(),
            TriangleKind::Partition => (0..=max_n)
                .map(|n| self.partition_row(n).to_vec())
                .collect(),
            TriangleKind::BsFirst => (0..=max_n)
                .map(|n| self.bs_first_row(n))
                .collect::<Result<_>>()?,
            TriangleKind::BsSecond => (0..=max_n)
                .map(|n| self.bs_second_row(n))
                .collect::<Result<_>>()?,
            TriangleKind::BsFirstInverse => {
                return self
                    .inverse_first_triangle(max_n.max(1))
                    .map(|t| t.truncated(max_n))
            }
        };
        Ok(TriangleTable::from_rows(kind, rows))
    }

    /// The `A` triangle extended to all integer indices.
    pub fn tandem(&mut self, n: i64, k: i64) -> Result<TandemEntry> {
        let (value, source) = if n >= 0 && k >= 0 {
            (
                self.bs_first(n as usize, k as usize)?,
                TandemSource::ADirect,
            )
        } else if n < 0 && k < 0 {
            (
                self.bs_second((-k) as usize, (-n) as usize)?,
                TandemSource::BViaDuality,
            )
        } else {
            (BigInt::zero(), TandemSource::MixedSign)
        };
        Ok(TandemEntry {
            n,
            k,
            value,
            source,
        })
    }

    /// `P_k` with `P_k(n) = A(n, n-k)` for all `n >= k`.
    ///
    /// Interpolated through `n = k..=3k`, then checked off-node and at the
    /// roots `-1, 0, ..., k`. Identically zero for odd `k`.
    pub fn p_polynomial(&mut self, k: usize) -> Result<Polynomial> {
        let points = (k..=3 * k)
            .map(|n| Ok((n as i64, int_to_rat(self.bs_first(n, n - k)?))))
            .collect::<Result<Vec<_>>>()?;
        let p = Polynomial::interpolate(&points)?;
        if p.degree().is_some_and(|d| d > 2 * k) {
            return Err(Error::Consistency(format!(
                "P_{k} has degree above {}",
                2 * k
            )));
        }
        let probe = 3 * k + 1;
        if p.eval_int(probe as i64) != int_to_rat(self.bs_first(probe, probe - k)?) {
            return Err(Error::Consistency(format!(
                "P_{k} misses A({probe}, {})",
                probe - k
            )));
        }
        if k > 0 {
            if let Some(r) = (-1..=k as i64).find(|&r| !p.eval_int(r).is_zero()) {
                return Err(Error::Consistency(format!("P_{k}({r}) is not zero")));
            }
        }
        Ok(p)
    }

    /// `S_n` with `P_n(x) = (x+1) x (x-1) ... (x-n) S_n(x)`, for `n >= 1`.
    pub fn s_polynomial(&mut self, n: usize) -> Result<Polynomial> {
        if n == 0 {
            return Err(domain("S_n is defined for n >= 1"));
        }
        let p = self.p_polynomial(n)?;
        let (q, r) = p.div_rem(&Polynomial::from_roots(-1..=n as i64))?;
        if !r.is_zero() {
            return Err(Error::Consistency(format!(
                "P_{n} is not divisible by its root product"
            )));
        }
        Ok(q)
    }

    /// Stirling polynomial `sigma_n` with `Q_n(x) = x (x-1) ... (x-n) sigma_n(x)`.
    pub fn sigma_polynomial(&mut self, n: usize) -> Result<Polynomial> {
        if n == 0 {
            return Err(domain("sigma_n is defined for n >= 1"));
        }
        let q = self.q_polynomial(n)?;
        let (s, r) = q.div_rem(&Polynomial::from_roots(0..=n as i64))?;
        if !r.is_zero() {
            return Err(Error::Consistency(format!(
                "Q_{n} is not divisible by its root product"
            )));
        }
        Ok(s)
    }

    /// Checks one instance of the `A`/`B` inter-relations at diagonal offset
    /// `n` and position `x`. For `x < n` the left side comes from `P_n`.
    pub fn verify_interrelation(
        &mut self,
        which: Interrelation,
        n: usize,
        x: i64,
    ) -> Result<IdentityCheck> {
        let ni = n as i64;
        let lhs = if x >= ni {
            let (row, col) = (x as usize, (x - ni) as usize);
            int_to_rat(match which {
                Interrelation::Bnk1 => self.bs_second(row, col)?,
                Interrelation::Bnk2 => self.bs_first(row, col)?,
            })
        } else {
            // B(x, x-n) = P_n(n-x), A(x, x-n) = P_n(x)
            let p = self.p_polynomial(n)?;
            match which {
                Interrelation::Bnk1 => p.eval_int(ni - x),
                Interrelation::Bnk2 => p.eval_int(x),
            }
        };
        let mut rhs = BigInt::zero();
        for u in 0..=n {
            let c = binomial(ni + x, (n - u) as i64) * binomial(ni - x, (n + u) as i64);
            if c.is_zero() {
                continue;
            }
            let t = match which {
                Interrelation::Bnk1 => self.bs_first(n + u, u)?,
                Interrelation::Bnk2 => self.bs_second(n + u, u)?,
            };
            rhs += c * t;
        }
        let id = match which {
            Interrelation::Bnk1 => IdentityId::Bnk1,
            Interrelation::Bnk2 => IdentityId::Bnk2,
        };
        Ok(IdentityCheck::new(id, ni, x, lhs, int_to_rat(rhs)))
    }

    /// Inverse of the unit lower-triangular matrix `[A(n, k)]`, rows
    /// `0..=n_max`, by forward substitution. Row and column 0 are the
    /// trivial identity block.
    pub fn inverse_first_triangle(&mut self, n_max: usize) -> Result<TriangleTable> {
        if n_max == 0 {
            return Err(domain("inverse triangle needs n_max >= 1"));
        }
        let a = (0..=n_max)
            .map(|n| self.bs_first_row(n))
            .collect::<Result<Vec<_>>>()?;
        let mut inv: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
        for i in 0..=n_max {
            let mut row = Vec::with_capacity(i + 1);
            for j in 0..i {
                let s: BigInt = (j..i).map(|l| &a[i][l] * &inv[l][j]).sum();
                row.push(-s);
            }
            row.push(BigInt::one());
            inv.push(row);
        }
        Ok(TriangleTable::from_rows(TriangleKind::BsFirstInverse, inv))
    }
}

/// `B(2n, 2)` for `n = 1..=n_max` from the Genocchi-type recursion
/// `B(2n, 2) = n - 1/2 sum_{j<n} C(2n, 2j) B(2j, 2)`.
pub fn genocchi_column(n_max: usize) -> Result<Vec<BigInt>> {
    if n_max == 0 {
        return Err(domain("genocchi_column needs n_max >= 1"));
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let s: BigInt = (1..n)
            .map(|j| binomial(2 * n as i64, 2 * j as i64) * &out[j - 1])
            .sum();
        let v = int_to_rat(n) - BigRational::new(s, BigInt::from(2));
        out.push(require_integer(v, "B", 2 * n, 2)?);
    }
    Ok(out)
}
