//! Exhaustive invariant sweeps over every documented identity in the
//! crate — enumeration cardinalities, bijection round trips, stratum
//! counts, normal-form parsing, reduction soundness and confluence, the
//! exact matrix-oracle claims, and the Weyl dimension identity — packaged
//! as a JSON-serializable report for the `verify` subcommand and reused
//! item-by-item in the bench suite.
//!
//! Each sweep takes a [`Parallelism`] and fans independent checks out via
//! [`Parallelism::map`]; results are collected in input order, so the
//! report is byte-identical across modes.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};

use crate::bijection::{mp_to_p2, mp_to_sp, p2_to_mp, p2_to_sp, sp_to_mp, sp_to_p2, Stratum};
use crate::exec::Parallelism;
use crate::normal_form::{blocks_to_marking, build_normal_form, parse_normal_form};
use crate::oracle;
use crate::partition::{
    self, enumerate_bipartitions, enumerate_marked, enumerate_partitions, enumerate_segmented,
    BiPartition, MarkSupport, MarkedPartition, Partition,
};
use crate::reduction::{self, applicable_moves, enumerate_generalized, GeneralizedMarking};
use crate::weyl;

/// Bounds for [`run_suite`]. `n_max` governs the combinatorial sweeps
/// (individually clamped to the ranks their exhaustive checks are
/// specified at); `oracle_n_max` governs the exact-arithmetic sweeps,
/// whose cost grows like the fourth power of the wedge dimension.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub oracle_n_max: usize,
    pub parallelism: Parallelism,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            n_max: 6,
            oracle_n_max: 3,
            parallelism: Parallelism::default(),
        }
    }
}

/// One sweep's outcome: how many items were checked and the first
/// failure's description, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteCheck {
    pub name: String,
    pub items: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub n_max: usize,
    pub oracle_n_max: usize,
    pub checks: Vec<SuiteCheck>,
    pub pass: bool,
}

/// Runs `item` over every entry, keeping the first failure message in
/// input order so the report does not depend on scheduling.
fn sweep<T, F>(name: &str, mode: Parallelism, items: Vec<T>, item: F) -> SuiteCheck
where
    T: Send,
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    let count = items.len();
    let detail = mode.map(items, |t| item(&t)).into_iter().flatten().next();
    SuiteCheck {
        name: name.to_string(),
        items: count,
        pass: detail.is_none(),
        detail,
    }
}

/// |MP(n)| = |SP(n)| = |P2(n)| = the convolution count, each computed
/// independently.
pub fn cardinality_sweep(n_max: usize, mode: Parallelism) -> SuiteCheck {
    sweep(
        "family cardinalities agree four ways",
        mode,
        (0..=n_max).collect(),
        |&n| {
            let mp = enumerate_marked(n).len();
            let sp = enumerate_segmented(n).len();
            let p2 = enumerate_bipartitions(n).len();
            let conv = partition::bipartition_count(n);
            if mp == sp && sp == p2 && BigUint::from(p2) == conv {
                None
            } else {
                Some(format!("n={n}: mp={mp} sp={sp} p2={p2} convolution={conv}"))
            }
        },
    )
}

/// Enumerators re-validate their own output, emit no duplicates, and give
/// identical output on a second run.
pub fn enumerator_sweep(n_max: usize, mode: Parallelism) -> SuiteCheck {
    sweep(
        "enumerators are deterministic, duplicate-free, and valid",
        mode,
        (0..=n_max).collect(),
        |&n| {
            let ps = enumerate_partitions(n);
            let mps = enumerate_marked(n);
            let sps = enumerate_segmented(n);
            let bps = enumerate_bipartitions(n);
            if ps != enumerate_partitions(n)
                || mps != enumerate_marked(n)
                || sps != enumerate_segmented(n)
                || bps != enumerate_bipartitions(n)
            {
                return Some(format!("n={n}: a second enumeration differed"));
            }
            let dedup = |it: Vec<String>| it.into_iter().collect::<BTreeSet<_>>().len();
            for (label, len, unique) in [
                (
                    "partition",
                    ps.len(),
                    dedup(ps.iter().map(|x| x.to_string()).collect()),
                ),
                (
                    "marked",
                    mps.len(),
                    dedup(mps.iter().map(|x| x.to_string()).collect()),
                ),
                (
                    "segmented",
                    sps.len(),
                    dedup(sps.iter().map(|x| format!("{x:?}")).collect()),
                ),
                (
                    "bipartition",
                    bps.len(),
                    dedup(bps.iter().map(|x| format!("{x:?}")).collect()),
                ),
            ] {
                if len != unique {
                    return Some(format!("n={n}: {label} enumeration repeats an element"));
                }
            }
            for p in &ps {
                if Partition::new(p.parts().to_vec()).is_err() || p.size() != n {
                    return Some(format!("n={n}: invalid partition {p}"));
                }
            }
            for mp in &mps {
                if MarkedPartition::new(mp.lambda().clone(), mp.marks().to_vec()).is_err() {
                    return Some(format!("n={n}: invalid marked partition {mp}"));
                }
            }
            for sp in &sps {
                if partition::check_segments(sp.lambda(), sp.segments()).is_err() {
                    return Some(format!("n={n}: invalid segmented partition {sp:?}"));
                }
            }
            for bp in &bps {
                if bp.first().size() + bp.second().size() != n {
                    return Some(format!("n={n}: bipartition sizes do not sum to n"));
                }
            }
            None
        },
    )
}

/// Mark and segment supports are strictly decreasing, and a supported
/// segment index never repeats its part value below itself.
pub fn support_sweep(n_max: usize, mode: Parallelism) -> SuiteCheck {
    sweep(
        "supports are strictly decreasing over distinct parts",
        mode,
        (0..=n_max).collect(),
        |&n| {
            for mp in enumerate_marked(n) {
                if MarkSupport::new(mp.mark_support().indices().to_vec()).is_err() {
                    return Some(format!("n={n}: bad mark support on {mp}"));
                }
            }
            for sp in enumerate_segmented(n) {
                let xs = sp.segment_support();
                if MarkSupport::new(xs.indices().to_vec()).is_err() {
                    return Some(format!("n={n}: bad segment support on {sp:?}"));
                }
                for &p in xs.indices() {
                    if sp.lambda().part(p + 1) == sp.lambda().part(p) {
                        return Some(format!(
                            "n={n}: supported part repeats below index {p} on {sp:?}"
                        ));
                    }
                }
            }
            None
        },
    )
}

/// All four bijection round-trip identities, element by element.
pub fn round_trip_sweep(n_max: usize, mode: Parallelism) -> SuiteCheck {
    sweep(
        "bijection round trips are the identity",
        mode,
        (0..=n_max).collect(),
        |&n| {
            for mp in enumerate_marked(n) {
                match mp_to_sp(&mp).and_then(|sp| sp_to_mp(&sp)) {
                    Ok(back) if back == mp => {}
                    other => return Some(format!("n={n}: sp round trip broke {mp}: {other:?}")),
                }
                match mp_to_p2(&mp).and_then(|bp| p2_to_mp(&bp)) {
                    Ok(back) if back == mp => {}
                    other => return Some(format!("n={n}: p2 round trip broke {mp}: {other:?}")),
                }
            }
            for sp in enumerate_segmented(n) {
                match sp_to_mp(&sp).and_then(|mp| mp_to_sp(&mp)) {
                    Ok(back) if back == sp => {}
                    other => return Some(format!("n={n}: mp round trip broke {sp:?}: {other:?}")),
                }
                match sp_to_p2(&sp).and_then(|bp| p2_to_sp(&bp)) {
                    Ok(back) if back == sp => {}
                    other => return Some(format!("n={n}: p2 round trip broke {sp:?}: {other:?}")),
                }
            }
            for bp in enumerate_bipartitions(n) {
                match p2_to_sp(&bp).and_then(|sp| sp_to_p2(&sp)) {
                    Ok(back) if back == bp => {}
                    other => return Some(format!("n={n}: sp round trip broke {bp:?}: {other:?}")),
                }
                match p2_to_mp(&bp).and_then(|mp| mp_to_p2(&mp)) {
                    Ok(back) if back == bp => {}
                    other => return Some(format!("n={n}: mp round trip broke {bp:?}: {other:?}")),
                }
            }
            None
        },
    )
}

/// Translation preserves lambda and the support; the bipartition
/// components sum back to lambda; translated markings re-validate; the
/// all-zero marking maps to `(lambda, empty)`.
pub fn shape_sweep(n_max: usize, mode: Parallelism) -> SuiteCheck {
    sweep(
        "translations preserve shape, support, and validity",
        mode,
        (0..=n_max).collect(),
        |&n| {
            for sp in enumerate_segmented(n) {
                let mp = match sp_to_mp(&sp) {
                    Ok(mp) => mp,
                    Err(e) => return Some(format!("n={n}: sp_to_mp failed on {sp:?}: {e}")),
                };
                if mp.lambda() != sp.lambda() {
                    return Some(format!("n={n}: lambda changed across sp_to_mp on {sp:?}"));
                }
                if mp.mark_support() != sp.segment_support() {
                    return Some(format!("n={n}: support changed across sp_to_mp on {sp:?}"));
                }
                let bp = match sp_to_p2(&sp) {
                    Ok(bp) => bp,
                    Err(e) => return Some(format!("n={n}: sp_to_p2 failed on {sp:?}: {e}")),
                };
                let glued = partition::sum_partitions(bp.first(), bp.second());
                if &glued != sp.lambda() {
                    return Some(format!(
                        "n={n}: gamma + mu = {glued} differs from lambda on {sp:?}"
                    ));
                }
            }
            for mp in enumerate_marked(n) {
                let sp = match mp_to_sp(&mp) {
                    Ok(sp) => sp,
                    Err(e) => return Some(format!("n={n}: mp_to_sp failed on {mp}: {e}")),
                };
                if sp.lambda() != mp.lambda() || sp.segment_support() != mp.mark_support() {
                    return Some(format!("n={n}: shape changed across mp_to_sp on {mp}"));
                }
                if mp.marks().iter().all(|&a| a == 0) {
                    let bp = mp_to_p2(&mp).expect("zero marking always translates");
                    if bp.first() != mp.lambda() || bp.second().len() != 0 {
                        return Some(format!(
                            "n={n}: zero marking mapped to {bp:?} instead of (lambda, empty)"
                        ));
                    }
                }
            }
            None
        },
    )
}

/// The closed-form stratum count equals the sizes of both brute-force
/// stratum fibers, and the fibers partition their families.
pub fn stratum_sweep(n_max: usize, mode: Parallelism) -> SuiteCheck {
    sweep(
        "stratum closed form matches both enumerations",
        mode,
        (0..=n_max).collect(),
        |&n| {
            // Group each family by (lambda, support) in one pass; every
            // element lands in exactly one fiber by construction, so
            // comparing totals certifies the disjoint-union identity.
            let mut mp_fibers: HashMap<(Partition, MarkSupport), usize> = HashMap::new();
            for mp in enumerate_marked(n) {
                *mp_fibers
                    .entry((mp.lambda().clone(), mp.mark_support()))
                    .or_default() += 1;
            }
            let mut sp_fibers: HashMap<(Partition, MarkSupport), usize> = HashMap::new();
            for sp in enumerate_segmented(n) {
                *sp_fibers
                    .entry((sp.lambda().clone(), sp.segment_support()))
                    .or_default() += 1;
            }
            let mut total = BigUint::default();
            for lambda in enumerate_partitions(n) {
                let len = lambda.len();
                for mask in 0u64..(1 << len) {
                    let indices: Vec<usize> =
                        (1..=len).rev().filter(|p| mask >> (p - 1) & 1 == 1).collect();
                    let support = MarkSupport::new(indices).expect("decreasing by construction");
                    let stratum = Stratum::new(lambda.clone(), support.clone())
                        .expect("indices lie within the partition");
                    let count = stratum.count();
                    total += &count;
                    let key = (lambda.clone(), support);
                    let mp_size = mp_fibers.get(&key).copied().unwrap_or(0);
                    let sp_size = sp_fibers.get(&key).copied().unwrap_or(0);
                    if BigUint::from(mp_size) != count || BigUint::from(sp_size) != count {
                        return Some(format!(
                            "n={n}: stratum ({lambda}, {:?}) counts {count} vs mp {mp_size}, sp {sp_size}",
                            key.1.indices()
                        ));
                    }
                }
            }
            // Totals double-check the fibers exhaust the families.
            if total != partition::bipartition_count(n) {
                return Some(format!("n={n}: stratum totals do not exhaust the family"));
            }
            None
        },
    )
}

/// `parse_normal_form` inverts `build_normal_form` on every generalized
/// marking, so building is injective; coefficients are all 1 and block
/// supports tile without overlap.
pub fn normal_form_sweep(n_max: usize, mode: Parallelism) -> SuiteCheck {
    sweep(
        "normal forms build, parse back, and stay injective",
        mode,
        (0..=n_max).collect(),
        |&n| {
            let mut seen: HashMap<String, String> = HashMap::new();
            for gm in enumerate_generalized(n) {
                let x = match build_normal_form(gm.lambda(), gm.marks()) {
                    Ok(x) => x,
                    Err(e) => return Some(format!("n={n}: build failed on {gm}: {e}")),
                };
                if x.terms().any(|(_, &c)| c != 1) {
                    return Some(format!("n={n}: non-unit coefficient in {x}"));
                }
                let text = x.text_notation();
                if let Some(prev) = seen.insert(text.clone(), gm.to_string()) {
                    return Some(format!("n={n}: {prev} and {gm} share the form {text}"));
                }
                let blocks = match parse_normal_form(&x) {
                    Ok(blocks) => blocks,
                    Err(e) => return Some(format!("n={n}: parse failed on {x}: {e}")),
                };
                let mut covered = BTreeSet::new();
                for b in &blocks {
                    if !b.support().is_disjoint(&covered) {
                        return Some(format!("n={n}: block supports overlap in {x}"));
                    }
                    covered.extend(b.support());
                }
                match blocks_to_marking(&blocks) {
                    Some((lambda, marks))
                        if &lambda == gm.lambda() && marks.as_slice() == gm.marks() => {}
                    other => {
                        return Some(format!("n={n}: parse of {gm} read back {other:?}"));
                    }
                }
            }
            None
        },
    )
}

/// Reduction terminates in valid marked partitions, is idempotent,
/// preserves lambda, only erases or relocates marks, and never increases
/// the nonzero-mark count along its trace.
pub fn reduction_sweep(n_max: usize, mode: Parallelism) -> SuiteCheck {
    sweep(
        "reduction terminates soundly",
        mode,
        (0..=n_max).collect(),
        |&n| {
            for gm in enumerate_generalized(n) {
                let (out, trace) = reduction::reduce_with_trace(&gm);
                if MarkedPartition::new(out.lambda().clone(), out.marks().to_vec()).is_err() {
                    return Some(format!("n={n}: reduce({gm}) = {out} is not valid"));
                }
                if out.lambda() != gm.lambda() {
                    return Some(format!("n={n}: reduce({gm}) changed lambda"));
                }
                if reduction::reduce(&gm) != out {
                    return Some(format!("n={n}: reduce disagrees with its traced run on {gm}"));
                }
                let again = GeneralizedMarking::from(out.clone());
                if reduction::reduce(&again) != out {
                    return Some(format!("n={n}: reduce is not idempotent on {gm}"));
                }
                let pairs = |lambda: &Partition, marks: &[usize]| -> BTreeSet<(usize, usize)> {
                    marks
                        .iter()
                        .enumerate()
                        .filter(|(_, &a)| a != 0)
                        .map(|(k, &a)| (lambda.part(k + 1), a))
                        .collect()
                };
                let before = pairs(gm.lambda(), gm.marks());
                if !pairs(out.lambda(), out.marks()).is_subset(&before) {
                    return Some(format!("n={n}: reduce({gm}) invented a mark pair"));
                }
                let mut live = gm.marks().iter().filter(|&&a| a != 0).count();
                for step in &trace {
                    let next = step.after.marks().iter().filter(|&&a| a != 0).count();
                    if next > live {
                        return Some(format!("n={n}: mark count grew along the trace of {gm}"));
                    }
                    live = next;
                }
            }
            None
        },
    )
}

/// Fixpoints of the move system are exactly the members of MP(n).
pub fn fixpoint_sweep(n_max: usize, mode: Parallelism) -> SuiteCheck {
    sweep(
        "move-system fixpoints are exactly the marked partitions",
        mode,
        (0..=n_max).collect(),
        |&n| {
            let fixed: Vec<String> = enumerate_generalized(n)
                .into_iter()
                .filter(|gm| applicable_moves(gm).is_empty())
                .map(|gm| gm.to_string())
                .collect();
            let marked: Vec<String> = enumerate_marked(n)
                .into_iter()
                .map(|mp| {
                    GeneralizedMarking::new(mp.lambda().clone(), mp.marks().to_vec())
                        .expect("valid bounds")
                        .to_string()
                })
                .collect();
            (fixed != marked).then(|| format!("n={n}: fixpoints differ from MP(n)"))
        },
    )
}

/// Every move order reaches the same terminal marked partition.
pub fn confluence_sweep(n_max: usize, mode: Parallelism) -> SuiteCheck {
    let items: Vec<GeneralizedMarking> = (0..=n_max).flat_map(enumerate_generalized).collect();
    sweep(
        "reduction is confluent across all move orders",
        mode,
        items,
        |gm| {
            let outcomes = reduction::reduce_all_orders(gm);
            if outcomes.len() != 1 {
                return Some(format!("{gm} reaches {} outcomes", outcomes.len()));
            }
            let unique = outcomes.into_iter().next().expect("nonempty");
            (unique != reduction::reduce(gm))
                .then(|| format!("{gm}: all-orders outcome differs from reduce"))
        },
    )
}

fn admissible_block_pairs(lambda: &Partition) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=lambda.len() {
        for j in 1..=lambda.len() {
            if i != j && lambda.part(i) >= lambda.part(j) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Every named-element claim report passes, exactly.
pub fn claim_sweep(n_max: usize, mode: Parallelism) -> SuiteCheck {
    let items: Vec<(Partition, usize, usize)> = (1..=n_max)
        .flat_map(|n| {
            enumerate_partitions(n).into_iter().flat_map(|lambda| {
                admissible_block_pairs(&lambda)
                    .into_iter()
                    .map(move |(i, j)| (lambda.clone(), i, j))
            })
        })
        .collect();
    sweep(
        "exact-arithmetic claims hold for the named elements",
        mode,
        items,
        |(lambda, i, j)| {
            match oracle::verify_claim_identities(lambda, *i, *j) {
                Ok(report) if report.pass => None,
                Ok(report) => {
                    let failed: Vec<&str> = report
                        .checks
                        .iter()
                        .filter(|c| !c.pass)
                        .map(|c| c.name.as_str())
                        .collect();
                    Some(format!("{}: failed {:?}", report.case, failed))
                }
                Err(e) => Some(format!("lambda={lambda} i={i} j={j}: {e}")),
            }
        },
    )
}

/// Every applicable reduction move admits a verified group-element
/// witness.
pub fn witness_sweep(n_max: usize, mode: Parallelism) -> SuiteCheck {
    let items: Vec<(GeneralizedMarking, reduction::Move)> = (0..=n_max)
        .flat_map(enumerate_generalized)
        .flat_map(|gm| {
            applicable_moves(&gm)
                .into_iter()
                .map(move |mv| (gm.clone(), mv))
        })
        .collect();
    sweep(
        "every reduction move has an exact group witness",
        mode,
        items,
        |(gm, mv)| match oracle::witness_reduction_step(gm, mv) {
            Ok(_) => None,
            Err(e) => Some(format!("{gm} via {mv}: {e}")),
        },
    )
}

/// The squared irreducible dimensions sum to the group order; dimensions
/// are positive, 1 on the four corner labels, and symmetric under
/// swapping the two components.
pub fn weyl_sweep(n_max: usize, mode: Parallelism) -> SuiteCheck {
    sweep(
        "irreducible dimensions square-sum to the group order",
        mode,
        (0..=n_max).collect(),
        |&n| {
            let rows = weyl::irr_table(n);
            let mut sum = BigUint::default();
            for row in &rows {
                if row.dim < BigUint::one() {
                    return Some(format!("n={n}: zero dimension at {:?}", row.bipartition));
                }
                let swapped = BiPartition::new(
                    row.bipartition.second().clone(),
                    row.bipartition.first().clone(),
                );
                if weyl::irr_dim(&swapped) != row.dim {
                    return Some(format!(
                        "n={n}: dimension changes under component swap at {:?}",
                        row.bipartition
                    ));
                }
                sum += &row.dim * &row.dim;
            }
            if sum != weyl::weyl_order(n) {
                return Some(format!(
                    "n={n}: dimension square sum {sum} differs from the group order"
                ));
            }
            if n >= 1 {
                let line = Partition::new(vec![n]).expect("single positive part");
                let column = Partition::new(vec![1; n]).expect("column of ones");
                let empty = Partition::new(vec![]).expect("empty");
                for bp in [
                    BiPartition::new(line.clone(), empty.clone()),
                    BiPartition::new(empty.clone(), line),
                    BiPartition::new(column.clone(), empty.clone()),
                    BiPartition::new(empty, column),
                ] {
                    if weyl::irr_dim(&bp) != BigUint::one() {
                        return Some(format!("n={n}: corner label {bp:?} is not 1-dimensional"));
                    }
                }
            }
            None
        },
    )
}

/// The full battery, with per-sweep rank clamps matching each invariant's
/// specified exhaustive range: reduction sweeps cap at 8, confluence at
/// 7, the Weyl identity at 8, and the oracle sweeps at `oracle_n_max`.
pub fn run_suite(config: &VerifyConfig) -> SuiteReport {
    let VerifyConfig {
        n_max,
        oracle_n_max,
        parallelism: mode,
    } = *config;
    let checks = vec![
        cardinality_sweep(n_max, mode),
        enumerator_sweep(n_max, mode),
        support_sweep(n_max, mode),
        round_trip_sweep(n_max, mode),
        shape_sweep(n_max, mode),
        stratum_sweep(n_max, mode),
        normal_form_sweep(n_max, mode),
        reduction_sweep(n_max.min(8), mode),
        fixpoint_sweep(n_max.min(8), mode),
        confluence_sweep(n_max.min(7), mode),
        claim_sweep(oracle_n_max, mode),
        witness_sweep(oracle_n_max, mode),
        weyl_sweep(n_max.min(8), mode),
    ];
    let pass = checks.iter().all(|c| c.pass);
    SuiteReport {
        n_max,
        oracle_n_max,
        checks,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes() {
        let report = run_suite(&VerifyConfig {
            n_max: 5,
            oracle_n_max: 3,
            parallelism: Parallelism::Sequential,
        });
        assert!(report.pass, "failing checks: {:?}", report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .collect::<Vec<_>>());
        assert_eq!(report.checks.len(), 13);
    }

    #[test]
    fn degenerate_bounds_pass() {
        let report = run_suite(&VerifyConfig {
            n_max: 0,
            oracle_n_max: 0,
            parallelism: Parallelism::Sequential,
        });
        assert!(report.pass);
        // Rank-0 sweeps still check the empty cases.
        assert!(report.checks.iter().all(|c| c.pass));
    }

    #[test]
    fn report_is_mode_independent_and_stable() {
        let sequential = run_suite(&VerifyConfig {
            n_max: 4,
            oracle_n_max: 2,
            parallelism: Parallelism::Sequential,
        });
        let default_mode = run_suite(&VerifyConfig {
            n_max: 4,
            oracle_n_max: 2,
            parallelism: Parallelism::default(),
        });
        assert_eq!(
            serde_json::to_string(&sequential).unwrap(),
            serde_json::to_string(&default_mode).unwrap()
        );
        let json = serde_json::to_string(&sequential).unwrap();
        assert!(json.starts_with(r#"{"n_max":4,"oracle_n_max":2,"checks":[{"name":"#));
        assert!(json.ends_with(r#""pass":true}"#));
    }

    #[test]
    fn a_broken_invariant_is_reported() {
        // Sanity-check the plumbing itself: a sweep over a deliberately
        // false predicate must fail with the first item's detail.
        let check = sweep(
            "intentionally false",
            Parallelism::Sequential,
            vec![1, 2, 3],
            |&x| (x % 2 == 1).then(|| format!("odd item {x}")),
        );
        assert!(!check.pass);
        assert_eq!(check.items, 3);
        assert_eq!(check.detail.as_deref(), Some("odd item 1"));
    }
}
