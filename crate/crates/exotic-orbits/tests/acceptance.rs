//! Acceptance gate: the eight headline guarantees, each printed as one
//! pass/fail line with its elapsed time and checked against a fixed
//! runtime budget (generous enough for debug builds on modest hardware).
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! lines.

use std::process::Command;
use std::time::{Duration, Instant};

use exotic_orbits::exec::Parallelism;
use exotic_orbits::normal_form::build_normal_form;
use exotic_orbits::oracle;
use exotic_orbits::partition::{enumerate_bipartitions, enumerate_marked, Partition};
use exotic_orbits::reduction::{GeneralizedMarking, Move, MoveKind};
use exotic_orbits::verify::{self, SuiteCheck};
use exotic_orbits::weyl;

fn criterion(number: u8, name: &str, budget: Duration, run: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = run();
    let elapsed = start.elapsed();
    let verdict = if outcome.is_ok() { "pass" } else { "FAIL" };
    println!(
        "criterion {number} ({name}): {verdict} in {elapsed:.2?} (budget {budget:?})"
    );
    if let Err(detail) = outcome {
        panic!("criterion {number} ({name}) failed: {detail}");
    }
    assert!(
        elapsed <= budget,
        "criterion {number} ({name}) exceeded its budget: {elapsed:?} > {budget:?}"
    );
}

fn check(sweep: SuiteCheck) -> Result<(), String> {
    if sweep.pass {
        Ok(())
    } else {
        Err(format!(
            "{} ({} items): {}",
            sweep.name,
            sweep.items,
            sweep.detail.unwrap_or_default()
        ))
    }
}

#[test]
fn criterion_1_golden_table_n3() {
    criterion(1, "golden table n=3", Duration::from_secs(1), || {
        let output = Command::new(env!("CARGO_BIN_EXE_exorbit"))
            .args(["table", "--n", "3", "--format", "csv"])
            .output()
            .map_err(|e| format!("cannot run the binary: {e}"))?;
        if !output.status.success() {
            return Err(format!("table command exited with {:?}", output.status));
        }
        let expected = include_str!("fixtures/table_n3.csv");
        if output.stdout != expected.as_bytes() {
            return Err(format!(
                "table output differs from fixture:\n--- got ---\n{}--- want ---\n{expected}",
                String::from_utf8_lossy(&output.stdout)
            ));
        }
        Ok(())
    });
}

#[test]
fn criterion_2_rank_two_table() {
    criterion(2, "rank-2 table", Duration::from_secs(1), || {
        let mps = enumerate_marked(2);
        let forms: Vec<String> = mps
            .iter()
            .map(|mp| {
                build_normal_form(mp.lambda(), mp.marks())
                    .expect("marked partitions are in bounds")
                    .text_notation()
            })
            .collect();
        let expected = ["a1", "a1 + e1", "a1 + e2", "0", "e2"];
        if forms != expected {
            return Err(format!("normal forms {forms:?}, want {expected:?}"));
        }
        let mut dims: Vec<u64> = mps
            .iter()
            .map(|mp| {
                let bp = exotic_orbits::bijection::mp_to_p2(mp).expect("translation is total");
                weyl::irr_dim(&bp)
                    .try_into()
                    .expect("rank-2 dimensions are tiny")
            })
            .collect();
        dims.sort_unstable();
        if dims != [1, 1, 1, 1, 2] {
            return Err(format!("dimension multiset {dims:?}, want [1,1,1,1,2]"));
        }
        // The documented alias: v[eps_1] labels the same orbit as the
        // emitted form v[eps_2] for ((1,1),(0,1)) — exhibited by an exact
        // coordinate-swap witness.
        let gm = GeneralizedMarking::new(
            Partition::new(vec![1, 1]).expect("valid partition"),
            vec![1, 0],
        )
        .expect("marking in bounds");
        let mv = Move {
            kind: MoveKind::EqualBlockShift,
            i: 1,
            j: 2,
        };
        let witness =
            oracle::witness_reduction_step(&gm, &mv).map_err(|e| format!("alias witness: {e}"))?;
        let lam = Partition::new(vec![1, 1]).expect("valid partition");
        let alias = oracle::embed(&build_normal_form(&lam, &[1, 0]).expect("in bounds"));
        let emitted = oracle::embed(&build_normal_form(&lam, &[0, 1]).expect("in bounds"));
        let moved = oracle::act(&witness, &alias).map_err(|e| format!("alias action: {e}"))?;
        if moved != emitted {
            return Err("alias witness does not map v[eps_1] to v[eps_2]".to_string());
        }
        Ok(())
    });
}

#[test]
fn criterion_3_cardinalities() {
    criterion(3, "cardinalities to n=12", Duration::from_secs(30), || {
        check(verify::cardinality_sweep(12, Parallelism::default()))
    });
}

#[test]
fn criterion_4_round_trips() {
    criterion(4, "round trips to n=10", Duration::from_secs(60), || {
        check(verify::round_trip_sweep(10, Parallelism::default()))
    });
}

#[test]
fn criterion_5_stratum_counts() {
    criterion(5, "stratum counts to n=10", Duration::from_secs(60), || {
        check(verify::stratum_sweep(10, Parallelism::default()))
    });
}

#[test]
fn criterion_6_reduction_soundness_and_confluence() {
    criterion(
        6,
        "reduction soundness and confluence",
        Duration::from_secs(300),
        || {
            check(verify::reduction_sweep(8, Parallelism::default()))?;
            check(verify::fixpoint_sweep(8, Parallelism::default()))?;
            check(verify::confluence_sweep(7, Parallelism::default()))
        },
    );
}

#[test]
fn criterion_7_oracle_identities() {
    criterion(7, "oracle identities to n=5", Duration::from_secs(120), || {
        check(verify::claim_sweep(5, Parallelism::default()))?;
        check(verify::witness_sweep(5, Parallelism::default()))
    });
}

#[test]
fn criterion_8_weyl_identities() {
    criterion(8, "Weyl dimension identities", Duration::from_secs(1), || {
        check(verify::weyl_sweep(8, Parallelism::default()))?;
        let dims: Vec<u64> = enumerate_bipartitions(2)
            .iter()
            .map(|bp| weyl::irr_dim(bp).try_into().expect("tiny"))
            .collect();
        // Enumeration order ((2),0), ((1,1),0), ((1),(1)), (0,(2)), (0,(1,1)).
        if dims != [1, 1, 2, 1, 1] {
            return Err(format!("rank-2 dimension column {dims:?}, want [1,1,2,1,1]"));
        }
        Ok(())
    });
}
