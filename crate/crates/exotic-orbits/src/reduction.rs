//! Orbit-reduction rewriting: pushing an arbitrary generalized marking to
//! the marked partition in its orbit.
//!
//! A [`GeneralizedMarking`] only requires `0 <= a_p <= lambda_p`. Three
//! move families repair the marked-partition conditions, each acting on an
//! ordered pair of block indices `(i, j)` with `lambda_i >= lambda_j`:
//!
//! * `ZeroAtI(i, j)` — both marked and `a_i <= a_j`: erase `a_i`;
//! * `ZeroAtJ(i, j)` — both marked and
//!   `lambda_i - a_i <= lambda_j - a_j`: erase `a_j`;
//! * `EqualBlockShift(i, j)` — `lambda_i = lambda_j`, `i < j`, `a_i != 0`,
//!   `a_j = 0`, and `j` is a legal resting index (`lambda_{j+1} !=
//!   lambda_j`, reading 0 past the end, or `a_{j+1} != 0`): move the mark
//!   from `i` to `j`.
//!
//! Every move strictly decreases the measure (number of nonzero marks,
//! then marks-weighted distance from the bottom), so rewriting terminates;
//! the fixpoints are exactly the valid marked partitions, and all maximal
//! rewriting sequences from one input end in the same place (checked
//! exhaustively by [`reduce_all_orders`] sweeps in [`crate::verify`]).
//! [`reduce`] applies the first applicable move under the fixed policy:
//! lowest `(i, j)` lexicographically, and `ZeroAtI` before `ZeroAtJ`
//! before `EqualBlockShift` on the same pair.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

use crate::partition::{self, MarkedPartition, Partition, Violation};

/// A partition with bounded marks (`0 <= a_p <= lambda_p`) and no further
/// conditions. Serializes as `{"lambda": [...], "marks": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GeneralizedMarking {
    lambda: Partition,
    marks: Vec<usize>,
}

impl GeneralizedMarking {
    pub fn new(lambda: Partition, marks: Vec<usize>) -> Result<Self, Violation> {
        if marks.len() != lambda.len() {
            return Err(Violation::MarkCountMismatch {
                parts: lambda.len(),
                marks: marks.len(),
            });
        }
        for k in 1..=marks.len() {
            if marks[k - 1] > lambda.part(k) {
                return Err(Violation::MarkTooLarge { index: k });
            }
        }
        Ok(Self { lambda, marks })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn marks(&self) -> &[usize] {
        &self.marks
    }

    /// 1-based mark access; indices past the end read as 0.
    pub fn mark(&self, p: usize) -> usize {
        if (1..=self.marks.len()).contains(&p) {
            self.marks[p - 1]
        } else {
            0
        }
    }

    pub fn size(&self) -> usize {
        self.lambda.size()
    }

    /// Whether the marks already satisfy the marked-partition conditions.
    pub fn is_marked_partition(&self) -> bool {
        partition::check_marks(&self.lambda, &self.marks).is_ok()
    }
}

impl From<MarkedPartition> for GeneralizedMarking {
    fn from(mp: MarkedPartition) -> Self {
        Self {
            marks: mp.marks().to_vec(),
            lambda: mp.lambda().clone(),
        }
    }
}

impl TryFrom<GeneralizedMarking> for MarkedPartition {
    type Error = Violation;

    fn try_from(gm: GeneralizedMarking) -> Result<Self, Violation> {
        MarkedPartition::new(gm.lambda, gm.marks)
    }
}

impl fmt::Display for GeneralizedMarking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, (", self.lambda)?;
        for (k, mark) in self.marks.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{mark}")?;
        }
        write!(f, "))")
    }
}

impl<'de> Deserialize<'de> for GeneralizedMarking {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            lambda: Partition,
            marks: Vec<usize>,
        }
        let raw = Raw::deserialize(deserializer)?;
        GeneralizedMarking::new(raw.lambda, raw.marks).map_err(D::Error::custom)
    }
}

/// All generalized markings of `n`, `lambda` in descending lexicographic
/// order, mark vectors in ascending lexicographic order.
pub fn enumerate_generalized(n: usize) -> Vec<GeneralizedMarking> {
    let mut out = Vec::new();
    for lambda in partition::enumerate_partitions(n) {
        for marks in partition::bounded_vectors(lambda.parts()) {
            out.push(GeneralizedMarking {
                lambda: lambda.clone(),
                marks,
            });
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    ZeroAtI,
    ZeroAtJ,
    EqualBlockShift,
}

/// A move instance on the ordered block pair `(i, j)`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({},{})", self.kind, self.i, self.j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("move {mv} is not applicable")]
    NotApplicable { mv: Move },
}

fn guard_holds(gm: &GeneralizedMarking, mv: &Move) -> bool {
    let (i, j) = (mv.i, mv.j);
    let len = gm.lambda.len();
    if i == j || i < 1 || j < 1 || i > len || j > len {
        return false;
    }
    let (li, lj) = (gm.lambda.part(i), gm.lambda.part(j));
    if li < lj {
        return false;
    }
    let (ai, aj) = (gm.mark(i), gm.mark(j));
    match mv.kind {
        MoveKind::ZeroAtI => ai != 0 && aj != 0 && ai <= aj,
        MoveKind::ZeroAtJ => ai != 0 && aj != 0 && li - ai <= lj - aj,
        MoveKind::EqualBlockShift => {
            li == lj
                && i < j
                && ai != 0
                && aj == 0
                && (gm.lambda.part(j + 1) != lj || gm.mark(j + 1) != 0)
        }
    }
}

/// All applicable moves, in policy order: ascending `(i, j)`, and
/// `ZeroAtI`, `ZeroAtJ`, `EqualBlockShift` on the same pair.
pub fn applicable_moves(gm: &GeneralizedMarking) -> Vec<Move> {
    let len = gm.lambda.len();
    let mut out = Vec::new();
    for i in 1..=len {
        for j in 1..=len {
            for kind in [MoveKind::ZeroAtI, MoveKind::ZeroAtJ, MoveKind::EqualBlockShift] {
                let mv = Move { kind, i, j };
                if guard_holds(gm, &mv) {
                    out.push(mv);
                }
            }
        }
    }
    out
}

/// Applies one move, re-checking its guard.
pub fn apply_move(gm: &GeneralizedMarking, mv: &Move) -> Result<GeneralizedMarking, MoveError> {
    if !guard_holds(gm, mv) {
        return Err(MoveError::NotApplicable { mv: *mv });
    }
    let mut marks = gm.marks.clone();
    match mv.kind {
        MoveKind::ZeroAtI => marks[mv.i - 1] = 0,
        MoveKind::ZeroAtJ => marks[mv.j - 1] = 0,
        MoveKind::EqualBlockShift => {
            marks[mv.j - 1] = marks[mv.i - 1];
            marks[mv.i - 1] = 0;
        }
    }
    Ok(GeneralizedMarking {
        lambda: gm.lambda.clone(),
        marks,
    })
}

/// One step of a rewriting trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    #[serde(rename = "move")]
    pub mv: Move,
    pub before: GeneralizedMarking,
    pub after: GeneralizedMarking,
}

/// Rewrites to the fixpoint under the first-move policy. Termination is
/// guaranteed (each move strictly shrinks a well-founded measure) and the
/// fixpoint always satisfies the marked-partition conditions.
pub fn reduce(gm: &GeneralizedMarking) -> MarkedPartition {
    reduce_with_trace(gm).0
}

/// As [`reduce`], also returning every applied step in order.
pub fn reduce_with_trace(gm: &GeneralizedMarking) -> (MarkedPartition, Vec<TraceStep>) {
    let mut cur = gm.clone();
    let mut trace = Vec::new();
    while let Some(mv) = applicable_moves(&cur).into_iter().next() {
        let next = apply_move(&cur, &mv).expect("enumerated moves are applicable");
        trace.push(TraceStep {
            mv,
            before: cur,
            after: next.clone(),
        });
        cur = next;
    }
    let terminal = MarkedPartition::new(cur.lambda, cur.marks)
        .expect("rewriting fixpoints satisfy the marked-partition conditions");
    (terminal, trace)
}

/// The set of fixpoints reachable under *every* maximal move order, by
/// memoized exhaustive search over the (finite, acyclic) state graph.
/// Confluence of the system is the statement that this set is a singleton.
pub fn reduce_all_orders(gm: &GeneralizedMarking) -> BTreeSet<MarkedPartition> {
    fn go(
        cur: GeneralizedMarking,
        memo: &mut HashMap<GeneralizedMarking, BTreeSet<MarkedPartition>>,
    ) -> BTreeSet<MarkedPartition> {
        if let Some(hit) = memo.get(&cur) {
            return hit.clone();
        }
        let moves = applicable_moves(&cur);
        let mut result = BTreeSet::new();
        if moves.is_empty() {
            result.insert(
                MarkedPartition::new(cur.lambda.clone(), cur.marks.clone())
                    .expect("rewriting fixpoints satisfy the marked-partition conditions"),
            );
        } else {
            for mv in moves {
                let next = apply_move(&cur, &mv).expect("enumerated moves are applicable");
                result.extend(go(next, memo));
            }
        }
        memo.insert(cur, result.clone());
        result
    }
    go(gm.clone(), &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gm(lambda: &[usize], marks: &[usize]) -> GeneralizedMarking {
        GeneralizedMarking::new(Partition::new(lambda.to_vec()).unwrap(), marks.to_vec()).unwrap()
    }

    fn mv(kind: MoveKind, i: usize, j: usize) -> Move {
        Move { kind, i, j }
    }

    #[test]
    fn validation() {
        assert!(GeneralizedMarking::new(Partition::new(vec![1, 1]).unwrap(), vec![1, 1]).is_ok());
        assert_eq!(
            GeneralizedMarking::new(Partition::new(vec![2]).unwrap(), vec![3]).unwrap_err(),
            Violation::MarkTooLarge { index: 1 }
        );
        assert_eq!(
            GeneralizedMarking::new(Partition::new(vec![2]).unwrap(), vec![]).unwrap_err(),
            Violation::MarkCountMismatch { parts: 1, marks: 0 }
        );
    }

    #[test]
    fn applicable_moves_on_known_cases() {
        assert_eq!(
            applicable_moves(&gm(&[2, 1], &[1, 1])),
            vec![mv(MoveKind::ZeroAtI, 1, 2)]
        );
        assert_eq!(
            applicable_moves(&gm(&[2, 1], &[2, 1])),
            vec![mv(MoveKind::ZeroAtJ, 1, 2)]
        );
        assert_eq!(
            applicable_moves(&gm(&[2, 2], &[1, 0])),
            vec![mv(MoveKind::EqualBlockShift, 1, 2)]
        );
        assert_eq!(
            applicable_moves(&gm(&[2, 2], &[2, 1])),
            vec![mv(MoveKind::ZeroAtJ, 1, 2), mv(MoveKind::ZeroAtI, 2, 1)]
        );
        // Valid marked partitions admit no moves at all.
        assert!(applicable_moves(&gm(&[5, 2], &[2, 1])).is_empty());
        assert!(applicable_moves(&gm(&[2, 1], &[0, 1])).is_empty());
    }

    #[test]
    fn resting_guard_allows_landing_before_a_marked_equal_block() {
        // (2,2,2) marks (1,0,2): j = 2 rests before the marked third block.
        let moves = applicable_moves(&gm(&[2, 2, 2], &[1, 0, 2]));
        assert!(moves.contains(&mv(MoveKind::EqualBlockShift, 1, 2)));
        // ... but (1,0,0) may only land on the tail of the run.
        let moves = applicable_moves(&gm(&[2, 2, 2], &[1, 0, 0]));
        let shifts: Vec<Move> = moves
            .iter()
            .copied()
            .filter(|m| m.kind == MoveKind::EqualBlockShift)
            .collect();
        assert_eq!(shifts, vec![mv(MoveKind::EqualBlockShift, 1, 3)]);
    }

    #[test]
    fn apply_rechecks_guards() {
        let bad = apply_move(&gm(&[2, 1], &[0, 1]), &mv(MoveKind::ZeroAtI, 1, 2));
        assert_eq!(
            bad.unwrap_err(),
            MoveError::NotApplicable {
                mv: mv(MoveKind::ZeroAtI, 1, 2)
            }
        );
        let next = apply_move(&gm(&[2, 2], &[1, 0]), &mv(MoveKind::EqualBlockShift, 1, 2));
        assert_eq!(next.unwrap(), gm(&[2, 2], &[0, 1]));
    }

    #[test]
    fn reduce_known_cases() {
        let (terminal, trace) = reduce_with_trace(&gm(&[4, 2], &[3, 1]));
        assert_eq!(terminal.lambda().parts(), &[4, 2]);
        assert_eq!(terminal.marks(), &[3, 0]);
        assert_eq!(trace.len(), 1);
        assert_eq!(trace[0].mv, mv(MoveKind::ZeroAtJ, 1, 2));

        let terminal = reduce(&gm(&[2, 2], &[2, 1]));
        assert_eq!(terminal.marks(), &[0, 2]);

        // Already-valid inputs come back unchanged with an empty trace.
        let (terminal, trace) = reduce_with_trace(&gm(&[5, 2], &[2, 1]));
        assert_eq!(terminal.marks(), &[2, 1]);
        assert!(trace.is_empty());
    }

    #[test]
    fn traces_chain() {
        for input in enumerate_generalized(6) {
            let (terminal, trace) = reduce_with_trace(&input);
            let mut cur = input.clone();
            for step in &trace {
                assert_eq!(step.before, cur);
                assert_eq!(apply_move(&cur, &step.mv).unwrap(), step.after);
                cur = step.after.clone();
            }
            assert_eq!(GeneralizedMarking::from(terminal), cur);
        }
    }

    #[test]
    fn fixpoints_are_exactly_marked_partitions() {
        for n in 0..=6 {
            for input in enumerate_generalized(n) {
                let stuck = applicable_moves(&input).is_empty();
                assert_eq!(stuck, input.is_marked_partition(), "at {input}");
            }
        }
    }

    #[test]
    fn reduce_is_idempotent_and_confluent_small() {
        for n in 0..=6 {
            for input in enumerate_generalized(n) {
                let first = reduce(&input);
                let again = reduce(&GeneralizedMarking::from(first.clone()));
                assert_eq!(first, again);
                let all = reduce_all_orders(&input);
                assert_eq!(all.len(), 1, "not confluent at {input}");
                assert_eq!(all.into_iter().next().unwrap(), first);
            }
        }
    }

    #[test]
    fn trace_serialization_shape() {
        let (_, trace) = reduce_with_trace(&gm(&[2, 1], &[1, 1]));
        let json = serde_json::to_string(&trace).unwrap();
        assert_eq!(
            json,
            r#"[{"move":{"kind":"ZeroAtI","i":1,"j":2},"before":{"lambda":[2,1],"marks":[1,1]},"after":{"lambda":[2,1],"marks":[0,1]}}]"#
        );
    }
}
