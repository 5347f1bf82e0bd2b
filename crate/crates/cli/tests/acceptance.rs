//! Acceptance gate: one test per release criterion, each printing a
//! single pass/fail line (visible with `--nocapture`) and enforcing both
//! the exact expected values and the time budget.

use std::process::Command;
use std::time::{Duration, Instant};

use countforge_cli::verify::{verify_suite, Limits};
use countforge_core::exactmath::{pow_usize, rat, ratio, Int, Rational};
use countforge_core::oracles::{count_sat, cycle_cover_sum};
use countforge_core::permred::{balance_literals, sat_to_perm_pm1};
use countforge_core::pipelines::reliability_from_tutte;
use countforge_core::structures::{Cnf, Multigraph};
use num_traits::Zero;

const SEED: u64 = 7;

fn criterion(n: u32, label: &str, budget: Duration, body: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) if elapsed <= budget => {
            println!("criterion {n} ({label}): pass in {elapsed:.2?}");
        }
        Ok(()) => {
            println!(
                "criterion {n} ({label}): FAIL — exceeded budget {budget:?} (took {elapsed:.2?})"
            );
            panic!("criterion {n} exceeded its time budget");
        }
        Err(msg) => {
            println!("criterion {n} ({label}): FAIL — {msg}");
            panic!("criterion {n} failed: {msg}");
        }
    }
}

fn run_suites(suites: &[&str], limits: &Limits) -> Result<(), String> {
    for name in suites {
        let report = verify_suite(name, SEED, limits).map_err(|e| e.to_string())?;
        if let Some(first) = report.failures.first() {
            return Err(format!(
                "suite {name}: {} failures, first: {} (expected {}, got {})",
                report.failures.len(),
                first.case,
                first.expected,
                first.actual
            ));
        }
    }
    Ok(())
}

fn expect<T: PartialEq + std::fmt::Debug>(case: &str, expected: &T, actual: &T) -> Result<(), String> {
    if expected == actual {
        Ok(())
    } else {
        Err(format!("{case}: expected {expected:?}, got {actual:?}"))
    }
}

fn cycle_5() -> Multigraph {
    Multigraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).expect("C5")
}

#[test]
fn criterion_01_reliability_worked_example() {
    criterion(1, "C5 reliability = 112/243 on both routes", Duration::from_secs(1), || {
        let g = cycle_5();
        let p = ratio(1, 3);
        let expected = ratio(112, 243);
        let brute = countforge_core::oracles::reliability_bruteforce(&g, &p)
            .map_err(|e| e.to_string())?;
        expect("brute-force route", &expected, &brute)?;
        let tutte = reliability_from_tutte(&g, &p).map_err(|e| e.to_string())?;
        expect("Tutte route", &expected, &tutte)
    });
}

#[test]
fn criterion_02_permanent_triple_agreement() {
    criterion(2, "200 seeded {-1,0,1} matrices, three methods", Duration::from_secs(10), || {
        run_suites(&["perm-methods"], &Limits::default())
    });
}

#[test]
fn criterion_03_permanent_reduction_endtoend() {
    criterion(3, "exhaustive 1-clause corpus, balanced and raw", Duration::from_secs(60), || {
        // exhaustive: every sign pattern on three distinct variables, and
        // the clause-free formulas
        let mut corpus: Vec<Cnf> = (0..=3)
            .map(|n| Cnf::new(n, vec![]).expect("empty formula"))
            .collect();
        for signs in 0..8u32 {
            let lit = |v: i32, bit: u32| if signs >> bit & 1 == 1 { -v } else { v };
            corpus.push(
                Cnf::new(3, vec![vec![lit(1, 0), lit(2, 1), lit(3, 2)]]).expect("clause"),
            );
        }
        for f in &corpus {
            let raw = sat_to_perm_pm1(f).map_err(|e| e.to_string())?;
            if raw.digraph.vertex_count() > 20 {
                return Err(format!(
                    "cycle-cover graph has {} vertices, over the 20-vertex corpus bound",
                    raw.digraph.vertex_count()
                ));
            }
            // unbalanced value: Σ over satisfying assignments of
            // (−1)^(false literals) 2^(true literals)
            let mut signed_sum = Rational::zero();
            for mask in 0u32..1 << f.num_vars() {
                let holds = |lit: i32| (mask >> (lit.unsigned_abs() - 1) & 1 == 1) == (lit > 0);
                if !f.clauses().iter().all(|c| c.iter().any(|&l| holds(l))) {
                    continue;
                }
                let (mut false_lits, mut true_lits) = (0usize, 0usize);
                for clause in f.clauses() {
                    for &l in clause {
                        if holds(l) {
                            true_lits += 1;
                        } else {
                            false_lits += 1;
                        }
                    }
                }
                let term = pow_usize(&rat(2), true_lits);
                if false_lits % 2 == 1 {
                    signed_sum -= term;
                } else {
                    signed_sum += term;
                }
            }
            let raw_per = cycle_cover_sum(&raw.digraph).map_err(|e| e.to_string())?;
            expect("unbalanced permanent", &signed_sum, &raw_per)?;

            let balanced = balance_literals(f).map_err(|e| e.to_string())?;
            let inst = sat_to_perm_pm1(&balanced).map_err(|e| e.to_string())?;
            let per = cycle_cover_sum(&inst.digraph).map_err(|e| e.to_string())?;
            let expected = Rational::from(
                Int::from(-2).pow(inst.occurrence_count as u32) * count_sat(f).map_err(|e| e.to_string())?,
            );
            expect("balanced permanent = (−2)^i · #Sat", &expected, &per)?;
        }
        Ok(())
    });
}

#[test]
fn criterion_04_gadget_tables() {
    criterion(4, "equality and clause gadget tables", Duration::from_secs(1), || {
        run_suites(&["perm-gadget-tables"], &Limits::default())
    });
}

#[test]
fn criterion_05_parity_reduction() {
    criterion(5, "independent-set parity, exhaustive n≤3 m≤2", Duration::from_secs(60), || {
        run_suites(&["indset-parity"], &Limits::default())
    });
}

#[test]
fn criterion_06_identity_suite() {
    criterion(6, "eight weight-shift identities, 100 trials each", Duration::from_secs(300), || {
        let limits = Limits { trials: Some(100), ..Limits::default() };
        run_suites(
            &[
                "z-normalization",
                "tutte-conversion",
                "delcon-subset",
                "thickening-identity",
                "stretch-identity",
                "theta-identity",
                "wump-identity",
                "cut-expansion",
            ],
            &limits,
        )
    });
}

#[test]
fn criterion_07_generator_distinctness() {
    criterion(7, "theta and wump generators distinct to m=50", Duration::from_secs(120), || {
        run_suites(&["theta-distinct", "wump-distinct"], &Limits::default())
    });
}

#[test]
fn criterion_08_pipelines() {
    criterion(8, "coefficient, 3tmc, and ising pipelines", Duration::from_secs(300), || {
        let thicken_limits = Limits { max_m: Some(3), ..Limits::default() };
        run_suites(&["thicken-coeffs"], &thicken_limits)?;
        run_suites(
            &["theta-coeffs", "wump-coeffs", "tmc3-pipeline", "ising-cuts"],
            &Limits::default(),
        )
    });
}

#[test]
fn criterion_09_appendix_chain() {
    criterion(9, "SAT→NAE→MaxCut chain and Linial extraction", Duration::from_secs(120), || {
        run_suites(
            &["satchain-law", "satchain-stretch", "satchain-growth", "linial-identity"],
            &Limits::default(),
        )
    });
}

#[test]
fn criterion_10_deterministic_reports() {
    criterion(10, "verify all --seed 7 is byte-identical", Duration::from_secs(600), || {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_countforge"))
                .args(["verify", "all", "--seed", "7"])
                .output()
                .map_err(|e| e.to_string())
        };
        let first = run()?;
        let second = run()?;
        if !first.status.success() || !second.status.success() {
            return Err("verify all reported failures".into());
        }
        if first.stdout != second.stdout {
            return Err("reports differ between runs".into());
        }
        if first.stdout.is_empty() {
            return Err("no report emitted".into());
        }
        Ok(())
    });
}
