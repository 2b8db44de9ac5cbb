//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use invdeg_core::exact::{BigInt, BigRational};
use invdeg_core::mldegree::{finite_difference_check, ml_degree_from, ml_polynomial};
use invdeg_core::multidegree::{c_gamma, MultidegreeTable};
use invdeg_core::psi::{PsiTable, Subsequence};
use invdeg_core::symbolic::{
    check_witness, verify_graph_vanishing, VerifyMode, DEFAULT_SYMBOLIC_CAP,
};
use num_traits::{One, Zero};

use common::{ints, naive_beta_grid, OraclePsi};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, format!("{what} took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn table(n: usize) -> Result<MultidegreeTable, String> {
    MultidegreeTable::compute(n).map_err(|e| e.to_string())
}

/// 1. Golden tables for n = 2, 3.
fn golden_tables() -> Outcome {
    let start = Instant::now();
    // Oracle: 4×4 Pfaffian a01·a23 − a02·a13 + a03·a12 on the ψ table
    // {ψ1, ψ2, ψ3; ψ12, ψ13, ψ23} = {1, 2, 4; 1, 3, 3}.
    let psi = OraclePsi::new(3);
    let manual = BigInt::from(1 * 3 - 2 * 3 + 4 * 1);
    ensure(psi.psi(&[1, 2, 3]) == manual, "oracle ψ_{1,2,3} disagrees with hand expansion")?;
    let (oracle_beta, _) = naive_beta_grid(3);
    let golden_beta = ints(&[1, 3, 6, 8, 6, 3, 1]);
    ensure(oracle_beta == golden_beta, "oracle β(3,·) disagrees with golden values")?;

    let t3 = table(3)?;
    ensure(t3.beta == golden_beta, format!("β(3,·) = {:?}", t3.beta))?;
    let g2 = c_gamma(2).map_err(|e| e.to_string())?;
    ensure(g2 == ints(&[1, 1, 1]), format!("c_gamma(2) = {g2:?}"))?;
    ensure(t3.gamma_degs == ints(&[1, 2, 4, 4, 2, 1]), format!("c_gamma(3) = {:?}", t3.gamma_degs))?;
    let t = within(start, Duration::from_secs(1), "golden tables")?;
    Ok(format!("exact match in {t:.2?}"))
}

/// 2. (t₁+t₂)·C(Γ) = t₁^m + t₂^m + C(Σ) for 1 ≤ n ≤ 12.
fn multidegree_identity() -> Outcome {
    let start = Instant::now();
    for n in 1..=12 {
        let report = table(n)?.verify_identity();
        ensure(report.all_match(), format!("identity fails at n = {n}"))?;
    }
    let t = within(start, Duration::from_secs(60), "identity check")?;
    Ok(format!("n = 1..12 coefficientwise in {t:.2?}"))
}

/// 3. ψ_{1,…,n} = 1 for 1 ≤ n ≤ 16.
fn full_psi_is_one() -> Outcome {
    let start = Instant::now();
    for n in 1..=16 {
        let v = PsiTable::new(n).psi(&Subsequence::full(n)).map_err(|e| e.to_string())?;
        ensure(v.is_one(), format!("ψ_(1..{n}) = {v}"))?;
    }
    let t = within(start, Duration::from_secs(10), "ψ_(1..n)")?;
    Ok(format!("n = 1..16 in {t:.2?}"))
}

/// 4. β symmetric and deg(Γ) palindromic for n ≤ 12.
fn symmetries() -> Outcome {
    for n in 1..=12 {
        let t = table(n)?;
        let m = t.m;
        ensure((0..=m).all(|d| t.beta[d] == t.beta[m - d]), format!("β not symmetric at n = {n}"))?;
        ensure(
            (0..m).all(|d| t.gamma_degs[d] == t.gamma_degs[m - 1 - d]),
            format!("deg(Γ) not palindromic at n = {n}"),
        )?;
    }
    Ok("n = 1..12".into())
}

/// 5. Optimized β/δ equal the naive bitmask enumeration for n ≤ 10.
fn oracle_equivalence() -> Outcome {
    for n in 1..=10 {
        let t = table(n)?;
        let (beta, grid) = naive_beta_grid(n);
        ensure(t.beta == beta, format!("β mismatch at n = {n}"))?;
        for r in 1..n {
            for d in 0..=t.m {
                ensure(
                    t.delta(d as i64, r as i64) == grid[n - r][d],
                    format!("δ({d},{n},{r}) mismatch"),
                )?;
            }
        }
    }
    Ok("β and δ for n = 1..10, all d".into())
}

/// 6. Graph vanishing: symbolic n = 1..4, numeric 100 trials n = 5..7.
fn graph_vanishing() -> Outcome {
    let start = Instant::now();
    for n in 1..=4 {
        verify_graph_vanishing(n, VerifyMode::Symbolic, 1, 0, DEFAULT_SYMBOLIC_CAP)
            .map_err(|e| format!("symbolic n = {n}: {e}"))?;
    }
    let symbolic = within(start, Duration::from_secs(300), "symbolic vanishing")?;
    for n in 5..=7 {
        let r = verify_graph_vanishing(n, VerifyMode::Numeric, 100, n as u64, DEFAULT_SYMBOLIC_CAP)
            .map_err(|e| format!("numeric n = {n}: {e}"))?;
        ensure(r.trials == 100, "trial count")?;
    }
    Ok(format!("symbolic n = 1..4 in {symbolic:.2?}; numeric 100/100 for n = 5..7"))
}

/// 7. φ(·,d) is a polynomial of degree d−1 for 1 ≤ d ≤ 6.
fn polynomiality() -> Outcome {
    for d in 1..=6 {
        let p = ml_polynomial(d).map_err(|e| e.to_string())?;
        ensure(p.validated.len() == 3, format!("d = {d}: validated {}", p.validated.len()))?;
        ensure(p.degree() == Some(d - 1), format!("d = {d}: degree {:?}", p.degree()))?;
        let fd = finite_difference_check(d, d + 10).map_err(|e| e.to_string())?;
        ensure(fd.all_vanish(), format!("d = {d}: nonzero differences"))?;
    }
    let p2 = ml_polynomial(2).map_err(|e| e.to_string())?;
    let n_minus_one = vec![BigRational::from_integer((-1).into()), BigRational::one()];
    ensure(p2.coeffs == n_minus_one, format!("φ(n,2) = {p2}"))?;
    Ok("d = 1..6 interpolated and differenced; φ(n,2) = n - 1".into())
}

/// 8. φ(n,1) = φ(n,m) = 1 for n ≤ 10.
fn boundary_ml_degrees() -> Outcome {
    for n in 1..=10 {
        let t = table(n)?;
        let first = ml_degree_from(&t, 1).map_err(|e| e.to_string())?;
        let last = ml_degree_from(&t, t.m as i64).map_err(|e| e.to_string())?;
        ensure(first.is_one() && last.is_one(), format!("n = {n}: {first}, {last}"))?;
    }
    Ok("n = 1..10".into())
}

/// 9. Witness pairs lie on V(I₁(XY)) with the prescribed ranks.
fn witnesses() -> Outcome {
    let mut count = 0;
    for n in 1..=5 {
        for r in 0..=n {
            for seed in 0..20 {
                let w = check_witness(n, r, seed).map_err(|e| e.to_string())?;
                ensure(w.passed(), format!("n = {n}, r = {r}, seed = {seed}: {w:?}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} witness pairs"))
}

/// 10. n = 20 table in under 60 s, identical across thread counts.
fn performance() -> Outcome {
    let run = |threads: usize| -> Result<(MultidegreeTable, Duration), String> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| e.to_string())?;
        let start = Instant::now();
        let t = pool.install(|| table(20))?;
        let elapsed = within(start, Duration::from_secs(60), &format!("n = 20 with {threads} threads"))?;
        Ok((t, elapsed))
    };
    let (a, ta) = run(8)?;
    let (b, tb) = run(1)?;
    ensure(a == b, "n = 20 tables differ between 8 and 1 threads")?;
    ensure(a.gamma_degs.iter().all(|x| x > &BigInt::zero()), "nonpositive multidegree")?;
    Ok(format!("8 threads {ta:.2?}, 1 thread {tb:.2?}, identical"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("AC-1 golden tables", golden_tables),
        ("AC-2 multidegree identity", multidegree_identity),
        ("AC-3 psi of full sequence", full_psi_is_one),
        ("AC-4 symmetries", symmetries),
        ("AC-5 oracle equivalence", oracle_equivalence),
        ("AC-6 graph vanishing", graph_vanishing),
        ("AC-7 polynomiality of ML-degree", polynomiality),
        ("AC-8 boundary ML-degrees", boundary_ml_degrees),
        ("AC-9 witness points", witnesses),
        ("AC-10 performance and determinism", performance),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (name, check) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>())));
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failures += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
