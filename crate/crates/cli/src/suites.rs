//! Property sweeps driven by a [`SweepConfig`]. Each suite hands its
//! claims to a sink one at a time, in a fixed order.

use std::fmt;
use std::str::FromStr;

use anyhow::anyhow;
use bsnum::bstriangle::{genocchi_column, tandem_is_void, Interrelation};
use bsnum::congruence::CongruenceReport;
use bsnum::corenum::int_to_rat;
use bsnum::series::{egf_bernoulli, egf_bs_second, egf_cycle_stirling, egf_partition_stirling};
use bsnum::{BigInt, BigRational, IdentityCheck, IdentityId, Polynomial, Tables};
use num_traits::{One, Zero};

use crate::config::SweepConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Identities,
    Triangles,
    Duality,
    Egf,
    Congruences,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Identities,
        Suite::Triangles,
        Suite::Duality,
        Suite::Egf,
        Suite::Congruences,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Triangles => "triangles",
            Suite::Duality => "duality",
            Suite::Egf => "egf",
            Suite::Congruences => "congruences",
        }
    }

    /// `all` expands to every suite.
    pub fn parse_selection(s: &str) -> anyhow::Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Ok(vec![s.parse()?])
    }
}

impl FromStr for Suite {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| anyhow!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One checked instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub suite: Suite,
    pub id: String,
    pub params: Vec<(String, i64)>,
    /// Evidence such as both sides of an identity or an achieved valuation.
    pub fields: Vec<(String, String)>,
    pub pass: bool,
}

impl Claim {
    fn new(suite: Suite, id: impl Into<String>, params: &[(&str, i64)], pass: bool) -> Self {
        Claim {
            suite,
            id: id.into(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            fields: Vec::new(),
            pass,
        }
    }

    fn field(mut self, key: &str, value: impl ToString) -> Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn identity(suite: Suite, c: IdentityCheck, params: &[(&str, i64)]) -> Claim {
    Claim::new(suite, c.id.name(), params, c.pass)
        .field("lhs", c.lhs)
        .field("rhs", c.rhs)
}

fn congruence(suite: Suite, r: CongruenceReport) -> Claim {
    let mut params = vec![("p", r.prime as i64)];
    params.extend(r.params.iter().copied());
    Claim::new(suite, r.claim.name(), &params, r.pass)
        .field("claimed", r.claimed)
        .field("achieved", r.achieved)
        .field("value", r.value)
}

/// A core error inside a sweep is reported as a failed claim.
fn resolve(suite: Suite, id: &str, params: &[(&str, i64)], r: bsnum::Result<Claim>) -> Claim {
    r.unwrap_or_else(|e| Claim::new(suite, id, params, false).field("error", e))
}

pub fn run(tables: &mut Tables, suite: Suite, cfg: &SweepConfig, sink: &mut dyn FnMut(Claim)) {
    match suite {
        Suite::Identities => identities(tables, cfg, sink),
        Suite::Triangles => triangles(tables, cfg, sink),
        Suite::Duality => duality(tables, cfg, sink),
        Suite::Egf => egf(tables, cfg, sink),
        Suite::Congruences => congruences(tables, cfg, sink),
    }
}

fn identities(t: &mut Tables, cfg: &SweepConfig, sink: &mut dyn FnMut(Claim)) {
    let s = Suite::Identities;
    for n in 0..=cfg.max_n {
        for m in 0..=n {
            for id in IdentityId::STIRLING {
                if n == 0 && matches!(id, IdentityId::Recst3 | IdentityId::Recst4) {
                    continue;
                }
                let params = [("n", n as i64), ("m", m as i64)];
                let r = t.verify_identity(id, n, m).map(|c| identity(s, c, &params));
                sink(resolve(s, id.name(), &params, r));
            }
        }
    }
}

fn is_int_vanishing(q: &BigRational, n: usize, k: usize) -> bool {
    q.is_integer() && ((n - k) % 2 == 0 || q.is_zero())
}

fn triangles(t: &mut Tables, cfg: &SweepConfig, sink: &mut dyn FnMut(Claim)) {
    let s = Suite::Triangles;
    for n in 0..=cfg.max_n {
        for k in 0..=n {
            let params = [("n", n as i64), ("k", k as i64)];
            let a = t.bs_first_sum(n, k);
            sink(Claim::new(s, "a-sum", &params, is_int_vanishing(&a, n, k)).field("value", a));
            let b = t.bs_second_sum(n, k);
            sink(Claim::new(s, "b-sum", &params, is_int_vanishing(&b, n, k)).field("value", b));
        }
    }

    let half = cfg.max_n / 2;
    if half >= 1 {
        match genocchi_column(half) {
            Ok(col) => {
                for (i, v) in col.into_iter().enumerate() {
                    let n = i + 1;
                    let params = [("n", n as i64)];
                    let r = t.bs_second(2 * n, 2).map(|b| {
                        Claim::new(s, "genocchi", &params, b == v)
                            .field("recursion", &v)
                            .field("definition", b)
                    });
                    sink(resolve(s, "genocchi", &params, r));
                }
            }
            Err(e) => {
                sink(Claim::new(s, "genocchi", &[("n", half as i64)], false).field("error", e))
            }
        }
    }

    match t.inverse_first_triangle(cfg.max_n) {
        Ok(inv) => {
            for i in 0..=cfg.max_n {
                let params = [("n", i as i64)];
                let r = (0..=cfg.max_n)
                    .map(|j| {
                        let mut acc = BigInt::zero();
                        for l in j..=i {
                            acc += t.bs_first(i, l)? * inv.get(l, j as i64).unwrap();
                        }
                        Ok(acc
                            == if i == j {
                                BigInt::one()
                            } else {
                                BigInt::zero()
                            })
                    })
                    .collect::<bsnum::Result<Vec<bool>>>()
                    .map(|ok| Claim::new(s, "ainv-row", &params, ok.iter().all(|&b| b)));
                sink(resolve(s, "ainv-row", &params, r));
            }
        }
        Err(e) => {
            sink(Claim::new(s, "ainv-row", &[("n", cfg.max_n as i64)], false).field("error", e))
        }
    }

    for k in 1..=cfg.max_k {
        for claim in polynomial_claims(t, k, cfg.max_n) {
            sink(claim);
        }
    }
}

/// Root, degree and factorization checks for `P_k`, `Q_k`, `S_k`, `sigma_k`.
pub fn polynomial_claims(t: &mut Tables, k: usize, max_x: usize) -> Vec<Claim> {
    let s = Suite::Triangles;
    let ki = k as i64;
    let params = [("k", ki)];
    let mut out = Vec::new();

    let r = t.p_polynomial(k).map(|p| {
        let degree_ok = if k % 2 == 0 {
            p.degree() == Some(2 * k)
        } else {
            p.is_zero()
        };
        let roots_ok = (-1..=ki).all(|r| p.eval_int(r).is_zero());
        Claim::new(s, "p-roots", &params, degree_ok && roots_ok).field(
            "degree",
            p.degree().map_or("-".to_string(), |d| d.to_string()),
        )
    });
    out.push(resolve(s, "p-roots", &params, r));

    let r = t.q_polynomial(k).map(|q| {
        let roots_ok = (0..=ki).all(|r| q.eval_int(r).is_zero());
        let at_minus_one = q.eval_int(-1);
        Claim::new(
            s,
            "q-roots",
            &params,
            roots_ok && q.degree() == Some(2 * k) && at_minus_one.is_one(),
        )
        .field("q(-1)", at_minus_one)
    });
    out.push(resolve(s, "q-roots", &params, r));

    let r = (|| -> bsnum::Result<Vec<Claim>> {
        let p = t.p_polynomial(k)?;
        let sp = t.s_polynomial(k)?;
        let direct = &Polynomial::from_roots(-1..=ki) * &sp == p;
        // P_n(-x) = (-1)^n (x-1) x (x+1) ... (x+n) S_n(-x)
        let mut refl = &Polynomial::from_roots((-ki..=1).rev()) * &sp.reflect();
        if k % 2 == 1 {
            refl = -&refl;
        }
        Ok(vec![
            Claim::new(s, "p-factor", &params, direct).field("s", &sp),
            Claim::new(s, "p-factor-reflected", &params, refl == p.reflect()),
        ])
    })();
    match r {
        Ok(v) => out.extend(v),
        Err(e) => out.push(Claim::new(s, "p-factor", &params, false).field("error", e)),
    }

    let r = (|| -> bsnum::Result<Vec<Claim>> {
        let q = t.q_polynomial(k)?;
        let sigma = t.sigma_polynomial(k)?;
        let direct = &Polynomial::from_roots(0..=ki) * &sigma == q && sigma.degree() == Some(k - 1);
        // {x+n, x} = (-1)^(n+1) x (x+1) ... (x+n) sigma_n(-x)
        let diagonal = (1..=max_x.max(1)).all(|x| {
            let prod: BigInt = (x..=x + k).map(BigInt::from).product();
            let mut v = int_to_rat(prod) * sigma.eval_int(-(x as i64));
            if k % 2 == 0 {
                v = -v;
            }
            v == int_to_rat(t.partition_stirling(x + k, x as i64))
        });
        Ok(vec![
            Claim::new(s, "q-factor", &params, direct).field("sigma", &sigma),
            Claim::new(s, "partition-diagonal", &params, diagonal),
        ])
    })();
    match r {
        Ok(v) => out.extend(v),
        Err(e) => out.push(Claim::new(s, "q-factor", &params, false).field("error", e)),
    }
    out
}

fn duality(t: &mut Tables, cfg: &SweepConfig, sink: &mut dyn FnMut(Claim)) {
    let s = Suite::Duality;

    // Every non-void tandem cell lies on the diagonal of P_{n-k}.
    let (lo, hi) = cfg.window;
    for n in lo..=hi {
        for k in lo..=hi {
            if tandem_is_void(n, k) {
                continue;
            }
            let params = [("n", n), ("k", k)];
            let r = (|| -> bsnum::Result<Claim> {
                let e = t.tandem(n, k)?;
                let expected = t.p_polynomial((n - k) as usize)?.eval_int(n);
                Ok(Claim::new(
                    s,
                    "tandem-diagonal",
                    &params,
                    int_to_rat(e.value.clone()) == expected,
                )
                .field("value", e.value)
                .field("p", expected))
            })();
            sink(resolve(s, "tandem-diagonal", &params, r));
        }
    }

    for d in 0..=cfg.max_k {
        for x in 0..=cfg.max_n {
            let params = [("d", d as i64), ("x", x as i64)];
            let r = (|| -> bsnum::Result<Claim> {
                let p = t.p_polynomial(d)?;
                let a = int_to_rat(t.bs_first(x + d, x)?);
                let b = int_to_rat(t.bs_second(x + d, x)?);
                let ok = p.eval_int((x + d) as i64) == a && p.eval_int(-(x as i64)) == b;
                Ok(Claim::new(s, "diagonal-polynomial", &params, ok))
            })();
            sink(resolve(s, "diagonal-polynomial", &params, r));
        }
    }

    for n in 0..=cfg.max_k {
        for x in 0..=(n + cfg.max_n) as i64 {
            for which in [Interrelation::Bnk1, Interrelation::Bnk2] {
                let params = [("n", n as i64), ("x", x)];
                let r = t
                    .verify_interrelation(which, n, x)
                    .map(|c| identity(s, c, &params));
                sink(resolve(s, &which.to_string(), &params, r));
            }
        }
    }
}

fn first_mismatch(
    series: &[BigRational],
    mut exact: impl FnMut(usize) -> bsnum::Result<BigInt>,
) -> bsnum::Result<Option<usize>> {
    for (n, c) in series.iter().enumerate() {
        if *c != int_to_rat(exact(n)?) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

fn column_claim(id: &str, k: usize, order: usize, r: bsnum::Result<Option<usize>>) -> Claim {
    let s = Suite::Egf;
    let params = [("k", k as i64), ("order", order as i64)];
    resolve(
        s,
        id,
        &params,
        r.map(|m| match m {
            None => Claim::new(s, id, &params, true),
            Some(n) => Claim::new(s, id, &params, false).field("mismatch_at", n),
        }),
    )
}

fn egf(t: &mut Tables, cfg: &SweepConfig, sink: &mut dyn FnMut(Claim)) {
    let s = Suite::Egf;
    let order = cfg.max_n;
    let bern = egf_bernoulli(order);
    let bad = (0..=order).find(|&n| bern.coeffs()[n] != t.bernoulli(n));
    let params = [("order", order as i64)];
    sink(match bad {
        None => Claim::new(s, "egf-bernoulli", &params, true),
        Some(n) => Claim::new(s, "egf-bernoulli", &params, false).field("mismatch_at", n),
    });
    for k in 0..=cfg.max_k {
        let ki = k as i64;
        let r = first_mismatch(egf_cycle_stirling(k, order).coeffs(), |n| {
            Ok(t.cycle_stirling(n, ki))
        });
        sink(column_claim("egf-cycle", k, order, r));
        let r = first_mismatch(egf_partition_stirling(k, order).coeffs(), |n| {
            Ok(t.partition_stirling(n, ki))
        });
        sink(column_claim("egf-partition", k, order, r));
        if k >= 1 {
            let r = first_mismatch(egf_bs_second(k, order).coeffs(), |n| t.bs_second(n, k));
            sink(column_claim("egf-b", k, order, r));
        }
    }
}

fn congruences(t: &mut Tables, cfg: &SweepConfig, sink: &mut dyn FnMut(Claim)) {
    let s = Suite::Congruences;
    let mut emit = |id: &str, params: &[(&str, i64)], r: bsnum::Result<CongruenceReport>| {
        sink(resolve(s, id, params, r.map(|r| congruence(s, r))));
    };
    for p in cfg.primes() {
        let pi = p as i64;
        for k in 0..p as usize {
            emit(
                "ge10ee",
                &[("p", pi), ("k", k as i64)],
                t.verify_g_expansion(p, k),
            );
        }
        if p > 2 {
            emit("ge10een", &[("p", pi)], t.verify_g_expansion_reduced(p));
        }
        for i in 1..=((p - 1) / 2) as usize {
            emit(
                "conj2",
                &[("p", pi), ("i", i as i64)],
                t.verify_theorem52(p, i),
            );
        }
        for k in 1..=cfg.max_k.max(1) {
            for j in 0..=2 * cfg.truncation {
                let params = [("p", pi), ("k", k as i64), ("J", j as i64)];
                emit("e10e", &params, t.verify_h_expansion(p, k, j));
            }
        }
        if p >= 5 {
            for k in 0..=cfg.max_k {
                for n in 0..=cfg.truncation {
                    let params = [("p", pi), ("k", k as i64), ("n", n as i64)];
                    emit("bern", &params, t.verify_washington(p, k, n));
                }
            }
            for n in 0..=cfg.truncation {
                emit(
                    "conj1",
                    &[("p", pi), ("n", n as i64)],
                    t.verify_g_congruence(p, n),
                );
            }
        }
    }
}
