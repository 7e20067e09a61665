//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use pdo_core::identities::forms::{p1_product, pdo_series, pdo_x_product};
use pdo_core::identities::run_check;
use pdo_core::partitions::{enumerate_pdo, p1_enumerated, p2_enumerated};
use pdo_core::{Int, Monomial, MultiPoly, PdoPair, RunConfig, Var};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn passes(id: &str, truncation: usize) -> Result<String, String> {
    let config = RunConfig {
        truncation: Some(truncation),
        ..RunConfig::default()
    };
    let report = run_check(id, &config).map_err(|e| e.to_string())?;
    if report.pass {
        Ok(report.to_string())
    } else {
        Err(report.to_string())
    }
}

/// Odd partitions of `n` as (size, multiplicity) runs, largest size first.
fn odd_runs(n: u32) -> Vec<Vec<(u32, u32)>> {
    fn rec(left: u32, max: u32, acc: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        let mut s = max;
        while s >= 1 {
            for mult in 1..=left / s {
                acc.push((s, mult));
                rec(left - s * mult, s.saturating_sub(2), acc, out);
                acc.pop();
            }
            if s < 2 {
                break;
            }
            s -= 2;
        }
    }
    let mut out = Vec::new();
    let top = if n % 2 == 1 { n } else { n.saturating_sub(1) };
    rec(n, top, &mut Vec::new(), &mut out);
    out
}

/// PDO(n) for n < len by the recurrence over odd sizes: a run of t copies of
/// one size contributes t choices of designation.
fn pdo_dp(len: usize) -> Vec<u64> {
    let mut dp = vec![0u64; len];
    dp[0] = 1;
    for s in (1..len).step_by(2) {
        for n in (1..len).rev() {
            let mut t = 1;
            while t * s <= n {
                dp[n] += t as u64 * dp[n - t * s];
                t += 1;
            }
        }
    }
    dp
}

fn c1_table_reproduction() -> Outcome {
    let series = pdo_series(11).map_err(|e| e.to_string())?;
    let table = [1, 1, 2, 4, 5, 8, 12, 16, 22, 32, 42];
    for (n, want) in table.iter().enumerate() {
        ensure(series.coeff(n) == Some(&Int::from(*want as i64)), || {
            format!("PDO({n}) = {:?}, table says {want}", series.coeff(n))
        })?;
    }
    ensure(pdo_dp(11) == table.map(|v| v as u64), || {
        "recurrence oracle disagrees".into()
    })?;
    Ok("PDO(0..10) = 1,1,2,4,5,8,12,16,22,32,42".into())
}

fn c2_convolution() -> Outcome {
    let dp = pdo_dp(9);
    let sum: u64 = (0..=4).map(|k| dp[k] * dp[4 - k]).sum();
    ensure(sum == 22 && dp[8] == 22, || {
        format!("sum {sum}, PDO(8) {}", dp[8])
    })?;
    let series = pdo_series(9).map_err(|e| e.to_string())?;
    ensure(series.coeff(8) == Some(&Int::from(22)), || {
        "PDO(8) != 22 from eta quotient".into()
    })?;
    let report = passes("convolution", 100)?;
    Ok(format!("sum = 22 = PDO(8); {report}"))
}

fn c3_refine_x() -> Outcome {
    let full = pdo_x_product(9).map_err(|e| e.to_string())?;
    let want = MultiPoly::from_terms([
        (Monomial::new(1, 0), Int::from(8)),
        (Monomial::new(2, 0), Int::from(14)),
    ]);
    ensure(full.coeff(8) == Some(&want), || {
        format!("[q^8] = {:?}", full.coeff(8))
    })?;

    // test-side enumeration of weight 8 by number of distinct sizes
    let mut by_sizes = [0u64; 4];
    for runs in odd_runs(8) {
        by_sizes[runs.len()] += runs.iter().map(|&(_, m)| m as u64).product::<u64>();
    }
    ensure(by_sizes == [0, 8, 14, 0], || {
        format!("enumerated split {by_sizes:?}")
    })?;
    let report = passes("refine_x", 200)?;
    Ok(format!("[q^8] PDO(x,q) = 8x + 14x^2; {report}"))
}

fn c4_andrews_rose() -> Outcome {
    passes("andrews_rose", 65)
}

fn c5_gxgy() -> Outcome {
    let a = passes("gxgy_symmetric", 65)?;
    let b = passes("main_2dis", 65)?;
    let c = passes("cheby_xyuv", 65)?;
    Ok(format!("{a}; {b}; {c}"))
}

fn c6_p1_p2() -> Outcome {
    let a = passes("p1_product", 40)?;
    let b = passes("p2_product", 24)?;

    let product = p1_product(9).map_err(|e| e.to_string())?;
    let c = product.coeff(8).unwrap().coeff(Monomial::new(2, 2));
    ensure(c == Int::from(10), || format!("[x^2 y^2 q^8] P1 = {c}"))?;
    // two distinct sizes, both with odd multiplicity, in the test-side enumeration
    let count: u64 = odd_runs(8)
        .iter()
        .filter(|r| r.len() == 2 && r.iter().all(|&(_, m)| m % 2 == 1))
        .map(|r| r.iter().map(|&(_, m)| m as u64).product::<u64>())
        .sum();
    ensure(count == 10, || format!("test-side count {count}"))?;

    let listed: BTreeSet<String> = [
        "(1'+1 | 1'+1)",
        "(1'+1 | 1+1')",
        "(1+1' | 1'+1)",
        "(1+1' | 1+1')",
        "(1' | 1'+1+1)",
        "(1' | 1+1'+1)",
        "(1' | 1+1+1')",
        "(1'+1+1 | 1')",
        "(1+1'+1 | 1')",
        "(1+1+1' | 1')",
    ]
    .iter()
    .map(|s| {
        s.parse::<PdoPair>()
            .map(|p| p.to_string())
            .map_err(|e| e.to_string())
    })
    .collect::<Result<_, _>>()?;
    let mut found = BTreeSet::new();
    for k in 0..=4u32 {
        for mu in enumerate_pdo(k) {
            for nu in enumerate_pdo(4 - k) {
                let pair = PdoPair::new(mu.clone(), nu);
                let s = pair.stats();
                if s.ell_d_sum == 2 && s.ell_r == 1 {
                    found.insert(pair.to_string());
                }
            }
        }
    }
    ensure(found == listed, || format!("pairs found: {found:?}"))?;
    let p2 = p2_enumerated(5)
        .coeff(4)
        .unwrap()
        .coeff(Monomial::new(2, 2));
    ensure(p2 == Int::from(10), || format!("[x^2 y^2 q^4] P2 = {p2}"))?;
    Ok(format!("{a}; {b}; 10 = 10 pairs at weight 4"))
}

fn c7_xy_refine() -> Outcome {
    passes("p1p2_refine", 101)
}

fn c8_cheby() -> Outcome {
    passes("cheby_xyuv", 65)
}

fn c9_bijection() -> Outcome {
    let report = passes("bijection_roundtrip", 24)?;
    // eligible lambda: every multiplicity even, counted with designations
    let p1 = p1_enumerated(25).eval(Var::X, &Int::ONE);
    for w in (0..=24u32).step_by(2) {
        let count: u64 = odd_runs(w)
            .iter()
            .filter(|r| r.iter().all(|&(_, m)| m % 2 == 0))
            .map(|r| r.iter().map(|&(_, m)| m as u64).product::<u64>())
            .sum();
        let y0 = p1.coeff(w as usize).unwrap().coeff(Monomial::new(0, 0));
        ensure(y0 == Int::from(count), || {
            format!("weight {w}: {count} vs {y0}")
        })?;
    }
    Ok(report)
}

fn c10_properties() -> Outcome {
    let mut lines = Vec::new();
    for (id, n) in [
        ("huffing_lemma", 64),
        ("dickson_sum_product", 50),
        ("split_count", 12),
        ("index_bijections", 60),
        ("theta_forms", 200),
    ] {
        lines.push(passes(id, n)?);
    }
    Ok(lines.join("; "))
}

fn c11_fa() -> Outcome {
    let config = RunConfig {
        truncation: Some(41),
        ..RunConfig::default()
    };
    let report = run_check("fa_identity", &config).map_err(|e| e.to_string())?;
    let note = report.note.clone().unwrap_or_default();
    ensure(note.contains("convention"), || {
        format!("no convention recorded: {report}")
    })?;
    ensure(report.pass, || report.to_string())?;
    Ok(report.to_string())
}

fn main() {
    let criteria: [Criterion; 11] = [
        (
            "table reproduction",
            c1_table_reproduction,
            Duration::from_secs(1),
        ),
        ("PDO convolution", c2_convolution, Duration::from_secs(1)),
        ("x-refinement", c3_refine_x, Duration::from_secs(30)),
        ("G = sum C_k", c4_andrews_rose, Duration::from_secs(30)),
        ("G(x)G(y) dissection", c5_gxgy, Duration::from_secs(120)),
        ("P1/P2 product forms", c6_p1_p2, Duration::from_secs(120)),
        ("[q^2n]P1 = [q^n]P2", c7_xy_refine, Duration::from_secs(60)),
        ("Chebyshev x,y,u,v", c8_cheby, Duration::from_secs(120)),
        ("bijection suite", c9_bijection, Duration::from_secs(60)),
        ("property suites", c10_properties, Duration::from_secs(60)),
        ("F = f2^3 sum A_k", c11_fa, Duration::from_secs(60)),
    ];
    let mut failures = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(_) if elapsed > *limit => ("FAIL", format!("took {elapsed:.2?}, limit {limit:?}")),
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "criterion {:>2} {status} {name} ({elapsed:.2?}): {detail}",
            i + 1
        );
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
