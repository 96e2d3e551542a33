//! Acceptance suite: eight criteria, one PASS/FAIL line each. Every
//! comparison is exact; the time limits below are pinned per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bsnum::bstriangle::{genocchi_column, tandem_is_void};
use bsnum::congruence::ClaimedBound;
use bsnum::corenum::{int_pow, int_to_rat, primes_up_to};
use bsnum::series::{egf_bernoulli, egf_bs_second, egf_cycle_stirling, egf_partition_stirling};
use bsnum::stirling::cycle_row_via_product;
use bsnum::{BigInt, BigRational, IdentityId, Polynomial, Tables};
use bsnum_cli::grid::{self, Grid, TableKind};
use bsnum_cli::{suites, OutputFormat, SweepConfig};

type Outcome = Result<String, String>;

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const GOLDEN_A: &str = "
 1 0 0 0 0 0 0 0 0 0 0
 0 1 0 0 0 0 0 0 0 0 0
 0 0 1 0 0 0 0 0 0 0 0
 0 -1 0 1 0 0 0 0 0 0 0
 0 0 -5 0 1 0 0 0 0 0 0
 0 24 0 -15 0 1 0 0 0 0 0
 0 0 238 0 -35 0 1 0 0 0 0
 0 -3396 0 1281 0 -70 0 1 0 0 0
 0 0 -51508 0 4977 0 -126 0 1 0 0
 0 1706112 0 -408700 0 15645 0 -210 0 1 0
 0 0 35028576 0 -2267320 0 42273 0 -330 0 1
";

const GOLDEN_B: &str = "
 1 0 0 0 0 0 0 0 0 0 0 0
 0 1 0 0 0 0 0 0 0 0 0 0
 0 0 1 0 0 0 0 0 0 0 0 0
 0 -1 0 1 0 0 0 0 0 0 0 0
 0 0 -5 0 1 0 0 0 0 0 0 0
 0 3 0 -15 0 1 0 0 0 0 0 0
 0 0 49 0 -35 0 1 0 0 0 0 0
 0 -17 0 357 0 -70 0 1 0 0 0 0
 0 0 -809 0 1701 0 -126 0 1 0 0 0
 0 155 0 -13175 0 6195 0 -210 0 1 0 0
 0 0 20317 0 -120395 0 18711 0 -330 0 1 0
 0 -2073 0 706893 0 -760100 0 49203 0 -495 0 1
";

/// Rows and columns run over -8..=7; `.` marks a cell the layout leaves void.
const GOLDEN_TANDEM: &str = "
 1 . . . . . . . . . . . . . . .
 . 1 . . . . . . . . . . . . . .
 -70 . 1 . . . . . . . . . . . . .
 . -35 . 1 . . . . . . . . . . . .
 357 . -15 . 1 . . . . . . . . . . .
 . 49 . -5 . 1 . . . . . . . . . .
 -17 . 3 . -1 . 1 . . . . . . . . .
 . 0 . 0 . 0 . 1 . . . . . . . .
 0 . 0 . 0 . 0 . 1 . . . . . . .
 . 0 . 0 . 0 . 0 . 1 . . . . . .
 0 . 0 . 0 . 0 . 0 . 1 . . . . .
 . 0 . 0 . 0 . 0 . -1 . 1 . . . .
 0 . 0 . 0 . 0 . 0 . -5 . 1 . . .
 . 0 . 0 . 0 . 0 . 24 . -15 . 1 . .
 0 . 0 . 0 . 0 . 0 . 238 . -35 . 1 .
 . 0 . 0 . 0 . 0 . -3396 . 1281 . -70 . 1
";

const GOLDEN_AINV: &str = "
 1 0 0 0 0 0 0 0 0 0
 0 1 0 0 0 0 0 0 0 0
 1 0 1 0 0 0 0 0 0 0
 0 5 0 1 0 0 0 0 0 0
 -9 0 15 0 1 0 0 0 0 0
 0 -63 0 35 0 1 0 0 0 0
 1485 0 -231 0 70 0 1 0 0 0
 0 18685 0 -567 0 126 0 1 0 0
 -844757 0 125515 0 -945 0 210 0 1 0
 0 -14862727 0 600655 0 -693 0 330 0 1
";

fn parse_golden(text: &str) -> Vec<Vec<Option<BigInt>>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|c| {
                    if c == "." {
                        None
                    } else {
                        Some(c.parse().unwrap())
                    }
                })
                .collect()
        })
        .collect()
}

fn compare(name: &str, grid: &Grid, golden: &str) -> Result<usize, String> {
    let golden = parse_golden(golden);
    check!(
        grid.rows.len() == golden.len(),
        "{name}: {} rows, expected {}",
        grid.rows.len(),
        golden.len()
    );
    for (i, row) in golden.iter().enumerate() {
        check!(
            row.len() == grid.cols.len(),
            "{name}: golden row {i} has {} cells",
            row.len()
        );
        for (j, want) in row.iter().enumerate() {
            let got = &grid.cells[i][j];
            let want = want.clone().unwrap_or_default();
            check!(
                *got == want,
                "{name}({}, {}) = {got}, expected {want}",
                grid.rows[i],
                grid.cols[j]
            );
        }
    }
    Ok(golden.len() * golden[0].len())
}

/// Cell texts of a pretty-rendered grid, using the right edge of each
/// header label as the column's right edge.
fn pretty_cells(text: &str) -> Vec<Vec<String>> {
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    let bar = header.find('|').unwrap();
    let mut edges = Vec::new();
    let bytes = header.as_bytes();
    for i in bar + 1..bytes.len() {
        if bytes[i] != b' ' && (i + 1 == bytes.len() || bytes[i + 1] == b' ') {
            edges.push(i + 1);
        }
    }
    lines
        .skip(1)
        .map(|l| {
            let mut start = bar + 1;
            edges
                .iter()
                .map(|&e| {
                    let cell = l
                        .get(start..e.min(l.len()))
                        .unwrap_or("")
                        .trim()
                        .to_string();
                    start = e;
                    cell
                })
                .collect()
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let mut t = Tables::new();
    let cfg = |max_n| SweepConfig {
        max_n,
        window: (-8, 7),
        ..Default::default()
    };
    let a = grid::build(&mut t, TableKind::A, &cfg(10)).map_err(|e| e.to_string())?;
    let b = grid::build(&mut t, TableKind::B, &cfg(12)).map_err(|e| e.to_string())?;
    let ainv = grid::build(&mut t, TableKind::Ainv, &cfg(10)).map_err(|e| e.to_string())?;
    let tandem = grid::build(&mut t, TableKind::Tandem, &cfg(12)).map_err(|e| e.to_string())?;
    let mut cells = compare("A", &a, GOLDEN_A)?;
    cells += compare("B", &b, GOLDEN_B)?;
    cells += compare("A'", &ainv, GOLDEN_AINV)?;
    cells += compare("tandem", &tandem, GOLDEN_TANDEM)?;

    // void placement, both in the layout rule and in the rendered table
    let golden = parse_golden(GOLDEN_TANDEM);
    let rendered = pretty_cells(&grid::render(&tandem, OutputFormat::Pretty));
    check!(
        rendered.len() == 16,
        "rendered tandem has {} rows",
        rendered.len()
    );
    for (i, n) in (-8i64..=7).enumerate() {
        for (j, k) in (-8i64..=7).enumerate() {
            let void = golden[i][j].is_none();
            check!(
                tandem_is_void(n, k) == void,
                "void rule disagrees at ({n}, {k})"
            );
            check!(
                rendered[i][j].is_empty() == void,
                "rendered cell ({n}, {k}) is `{}`",
                rendered[i][j]
            );
            if let Some(v) = &golden[i][j] {
                check!(
                    rendered[i][j] == v.to_string(),
                    "rendered cell ({n}, {k}) is `{}`",
                    rendered[i][j]
                );
            }
        }
    }
    Ok(format!(
        "{cells} golden cells match (A, B, inverse, tandem)"
    ))
}

fn criterion_2() -> Outcome {
    let mut t = Tables::new();
    let mut count = 0;
    for n in 0..=40 {
        for m in 0..=n {
            for id in IdentityId::STIRLING {
                if n == 0 && matches!(id, IdentityId::Recst3 | IdentityId::Recst4) {
                    continue;
                }
                let c = t
                    .verify_identity(id, n, m)
                    .map_err(|e| format!("{id} n={n} m={m}: {e}"))?;
                check!(
                    c.pass && c.lhs == c.rhs,
                    "{id} n={n} m={m}: {} != {}",
                    c.lhs,
                    c.rhs
                );
                count += 1;
            }
        }
    }
    Ok(format!("{count} identity instances, 0 <= m <= n <= 40"))
}

fn criterion_3() -> Outcome {
    let mut t = Tables::new();
    let mut vanishing = 0;
    for n in 0..=60usize {
        for k in 0..=n {
            for (name, q) in [("A", t.bs_first_sum(n, k)), ("B", t.bs_second_sum(n, k))] {
                check!(
                    q.denom() == &BigInt::from(1),
                    "{name}({n}, {k}) = {q} has a denominator"
                );
                if (n - k) % 2 == 1 {
                    check!(
                        *q.numer() == BigInt::from(0),
                        "{name}({n}, {k}) = {q} should vanish"
                    );
                    vanishing += 1;
                }
            }
        }
    }
    Ok(format!(
        "{} defining sums integral, {vanishing} odd-offset sums zero",
        2 * 61 * 62 / 2
    ))
}

fn criterion_4() -> Outcome {
    let mut t = Tables::new();
    let mut count = 0;
    for p in primes_up_to(97) {
        for k in 0..p as usize {
            let r = t.verify_g_expansion(p, k).map_err(|e| e.to_string())?;
            check!(
                r.claimed == ClaimedBound::ExactZero,
                "g-expansion claim changed"
            );
            check!(
                r.pass && r.value == BigRational::from_integer(0.into()),
                "g-expansion p={p} k={k}: {}",
                r.value
            );
            count += 1;
        }
        for i in 1..=((p - 1) / 2) as usize {
            let r = t.verify_theorem52(p, i).map_err(|e| e.to_string())?;
            check!(
                r.pass && r.value == BigRational::from_integer(0.into()),
                "p={p} i={i}: sum {}",
                r.value
            );
            count += 1;
        }
    }
    Ok(format!("{count} sums exactly zero, p <= 97"))
}

fn criterion_5() -> Outcome {
    let mut t = Tables::new();
    let mut count = 0;
    for p in primes_up_to(97).into_iter().filter(|&p| p >= 5) {
        for n in 0..=3usize {
            let need = 2 * n as i64 + 3;
            for k in 0..=3usize {
                let r = t.verify_washington(p, k, n).map_err(|e| e.to_string())?;
                check!(
                    r.achieved.at_least(need),
                    "H-weighted p={p} k={k} n={n}: v_p = {} < {need}",
                    r.achieved
                );
                check!(r.pass, "H-weighted p={p} k={k} n={n} reported failing");
                count += 1;
            }
            let r = t.verify_g_congruence(p, n).map_err(|e| e.to_string())?;
            check!(
                r.achieved.at_least(need),
                "G-weighted p={p} n={n}: v_p = {} < {need}",
                r.achieved
            );
            check!(r.pass, "G-weighted p={p} n={n} reported failing");
            count += 1;
        }
    }
    for p in primes_up_to(13) {
        for k in 1..=4usize {
            for j in 0..=6usize {
                let r = t.verify_h_expansion(p, k, j).map_err(|e| e.to_string())?;
                check!(
                    r.achieved.at_least(j as i64 + 1),
                    "H expansion p={p} k={k} J={j}: v_p = {}",
                    r.achieved
                );
                count += 1;
            }
        }
    }
    Ok(format!("{count} valuation bounds met"))
}

fn criterion_6() -> Outcome {
    let mut t = Tables::new();
    const ORDER: usize = 25;
    for n in 0..=ORDER {
        let row = cycle_row_via_product(n);
        for (k, v) in row.iter().enumerate() {
            check!(
                *v == t.cycle_stirling(n, k as i64),
                "product row {n} differs at k={k}"
            );
        }
    }
    let bern = egf_bernoulli(ORDER);
    for n in 0..=ORDER {
        check!(
            bern.coeffs()[n] == t.bernoulli(n),
            "x/(e^x-1) coefficient {n}"
        );
    }
    for k in 0..=6usize {
        let cyc = egf_cycle_stirling(k, ORDER);
        let part = egf_partition_stirling(k, ORDER);
        for n in 0..=ORDER {
            check!(
                cyc.coeffs()[n] == int_to_rat(t.cycle_stirling(n, k as i64)),
                "cycle EGF k={k} n={n}"
            );
            check!(
                part.coeffs()[n] == int_to_rat(t.partition_stirling(n, k as i64)),
                "partition EGF k={k} n={n}"
            );
        }
        if k >= 1 {
            let b = egf_bs_second(k, ORDER);
            for n in 0..=ORDER {
                let dp = t.bs_second(n, k).map_err(|e| e.to_string())?;
                check!(b.coeffs()[n] == int_to_rat(dp), "B EGF k={k} n={n}");
            }
        }
    }
    Ok(format!(
        "all series coefficients match, k <= 6, n <= {ORDER}"
    ))
}

fn poly(num: &[i64], den: i64) -> Polynomial {
    Polynomial::from_coeffs(
        num.iter()
            .map(|&c| BigRational::new(c.into(), den.into()))
            .collect(),
    )
}

fn criterion_7() -> Outcome {
    let mut t = Tables::new();
    // ascending coefficients over a common denominator
    let sigma = [
        poly(&[1], 2),
        poly(&[-1, 3], 24),
        poly(&[0, -1, 1], 48),
        poly(&[2, 5, -30, 15], 5760),
    ];
    let s = [
        poly(&[0], 1),
        poly(&[-1], 24),
        poly(&[0], 1),
        poly(&[2, 3, 7], 5760),
    ];
    for n in 1..=4usize {
        let got = t.sigma_polynomial(n).map_err(|e| e.to_string())?;
        check!(
            got == sigma[n - 1],
            "sigma_{n} = {got}, expected {}",
            sigma[n - 1]
        );
        let got = t.s_polynomial(n).map_err(|e| e.to_string())?;
        check!(got == s[n - 1], "S_{n} = {got}, expected {}", s[n - 1]);
    }
    for k in 1..=6i64 {
        let q = t.q_polynomial(k as usize).map_err(|e| e.to_string())?;
        check!(
            (0..=k).all(|r| q.eval_int(r) == int_to_rat(0)),
            "Q_{k} misses a root"
        );
        check!(
            q.eval_int(-1) == int_to_rat(1),
            "Q_{k}(-1) = {}",
            q.eval_int(-1)
        );
        let p = t.p_polynomial(k as usize).map_err(|e| e.to_string())?;
        check!(
            (-1..=k).all(|r| p.eval_int(r) == int_to_rat(0)),
            "P_{k} misses a root"
        );
    }
    let mut claims = 0;
    for k in 1..=6 {
        for c in suites::polynomial_claims(&mut t, k, 12) {
            check!(c.pass, "{} k={k} fails {:?}", c.id, c.fields);
            claims += 1;
        }
    }
    Ok(format!(
        "S and sigma exact for k <= 4, roots for k <= 6, {claims} factorization checks"
    ))
}

fn criterion_8() -> Outcome {
    let mut t = Tables::new();
    let col = genocchi_column(15).map_err(|e| e.to_string())?;
    check!(col.len() == 15, "column has {} entries", col.len());
    let printed: [i64; 5] = [-1, 3, -17, 155, -2073];
    for (i, v) in printed.iter().enumerate() {
        check!(
            col[i + 1] == BigInt::from(*v),
            "B({}, 2) = {}, golden column has {v}",
            2 * (i + 2),
            col[i + 1]
        );
    }
    for (i, v) in col.iter().enumerate() {
        let n = i + 1;
        check!(
            *v == t.bs_second(2 * n, 2).map_err(|e| e.to_string())?,
            "recursion differs at n={n}"
        );
        // Genocchi numbers G_2n = 2 (1 - 4^n) B_2n, and B(2n, 2) = -G_2n
        let g = int_to_rat(2) * int_to_rat(int_pow(4, n) - 1) * t.bernoulli(2 * n);
        check!(
            int_to_rat(v.clone()) == g,
            "B({}, 2) = {v}, Genocchi gives {g}",
            2 * n
        );
    }
    Ok("B(2n, 2) for n <= 15 matches recursion, definition and Genocchi numbers".to_string())
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome, Duration); 8] = [
        (1, "golden tables", criterion_1, Duration::from_secs(5)),
        (
            2,
            "Stirling identity family",
            criterion_2,
            Duration::from_secs(30),
        ),
        (
            3,
            "parity and integrality",
            criterion_3,
            Duration::from_secs(60),
        ),
        (
            4,
            "exact congruence identities",
            criterion_4,
            Duration::from_secs(60),
        ),
        (
            5,
            "truncated p-adic congruences",
            criterion_5,
            Duration::from_secs(60),
        ),
        (6, "EGF equivalence", criterion_6, Duration::from_secs(10)),
        (7, "polynomial suite", criterion_7, Duration::from_secs(5)),
        (
            8,
            "Genocchi cross-check",
            criterion_8,
            Duration::from_secs(1),
        ),
    ];
    let mut failed = 0;
    for (n, name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("{d}; too slow")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "criterion {n} {:<30} {} {:>8.3}s (limit {}s)  {detail}",
            name,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed == 0 {
        println!("acceptance: 8/8 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 8 criteria fail");
        ExitCode::FAILURE
    }
}
