//! Exhaustive reference solvers used to cross-check the shortest-path
//! solver.
//!
//! Two scales: enumerating every matrix (`m·n <= 20`) and enumerating every
//! pair of line sum tuples admitted by the Ryser criterion (`m, n <= 8`).

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;
use crate::seqcore::{for_each_nonincreasing, Instance, NonincreasingTuple};

/// `(objective, r, c)`.
pub type SequenceOptimum = (i64, NonincreasingTuple, NonincreasingTuple);

pub const MATRIX_CELL_LIMIT: usize = 20;
pub const SEQUENCE_DIM_LIMIT: usize = 8;

pub fn matrix_oracle_applies(inst: &Instance) -> bool {
    inst.m() * inst.n() <= MATRIX_CELL_LIMIT
}

pub fn sequence_oracle_applies(inst: &Instance) -> bool {
    inst.m() <= SEQUENCE_DIM_LIMIT && inst.n() <= SEQUENCE_DIM_LIMIT
}

fn is_nonincreasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

/// Minimum objective over all `2^(mn)` matrices, or over the monotone ones
/// only, with the lexicographically smallest optimal matrix (row-major).
pub fn brute_force_matrix(inst: &Instance, monotone_only: bool) -> Result<(i64, BinaryMatrix)> {
    let (m, n) = (inst.m(), inst.n());
    let cells = m * n;
    if cells > MATRIX_CELL_LIMIT {
        return Err(Error::OracleBound(format!(
            "{m}x{n} has {cells} cells, limit is {MATRIX_CELL_LIMIT}"
        )));
    }
    let mut rows = vec![0usize; m];
    let mut cols = vec![0usize; n];
    let mut best: Option<(i64, u32)> = None;
    // cell p (row-major) is bit cells-1-p, so ascending masks are ascending
    // in lexicographic order of the flattened matrix
    for mask in 0u32..(1u32 << cells) {
        rows.fill(0);
        cols.fill(0);
        for p in 0..cells {
            if mask >> (cells - 1 - p) & 1 == 1 {
                rows[p / n] += 1;
                cols[p % n] += 1;
            }
        }
        if monotone_only && !(is_nonincreasing(&rows) && is_nonincreasing(&cols)) {
            continue;
        }
        let value = inst.evaluate_sums(&rows, &cols)?;
        if best.is_none_or(|(b, _)| value < b) {
            best = Some((value, mask));
        }
    }
    // the zero matrix is always monotone, so best is set
    let (value, mask) = best.expect("at least one matrix is enumerated");
    let mut witness = BinaryMatrix::zeros(m, n);
    for p in 0..cells {
        if mask >> (cells - 1 - p) & 1 == 1 {
            witness.set(p / n, p % n, true);
        }
    }
    Ok((value, witness))
}

/// Calls `visit(r)` for every nonincreasing `r` with entries `<= bound`
/// majorized by `s`, pruning on prefix sums.
pub fn for_each_majorized(s: &[usize], bound: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(
        s: &[usize],
        buf: &mut Vec<usize>,
        cap: usize,
        r_pre: usize,
        s_pre: usize,
        visit: &mut impl FnMut(&[usize]),
    ) {
        let i = buf.len();
        if i == s.len() {
            if r_pre == s_pre {
                visit(buf);
            }
            return;
        }
        let s_next = s_pre + s[i];
        for v in 0..=cap {
            if r_pre + v > s_next {
                break;
            }
            buf.push(v);
            rec(s, buf, v, r_pre + v, s_next, visit);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(s.len());
    rec(s, &mut buf, bound, 0, 0, &mut visit);
}

/// Minimum over all nonincreasing `c` and all nonincreasing `r` majorized by
/// the conjugate of `c`; returns the optimum for each type of `c`, indexed by
/// `k` (always `min(m, n) + 1` entries).
pub fn brute_force_by_type(inst: &Instance) -> Result<Vec<Option<SequenceOptimum>>> {
    let (m, n) = (inst.m(), inst.n());
    if !sequence_oracle_applies(inst) {
        return Err(Error::OracleBound(format!(
            "{m}x{n} exceeds {SEQUENCE_DIM_LIMIT} in some dimension"
        )));
    }
    type Raw = (i64, Vec<usize>, Vec<usize>);
    let mut best: Vec<Option<Raw>> = vec![None; m.min(n) + 1];
    for_each_nonincreasing(n, m, |c| {
        let c = NonincreasingTuple::new(c.to_vec(), m).expect("enumerated tuples are valid");
        let k = c.type_k();
        let s = c.conjugate();
        let col_cost: i64 = c
            .entries()
            .iter()
            .enumerate()
            .map(|(j, &y)| inst.col_cost(j, y))
            .sum();
        for_each_majorized(s.entries(), n, |r| {
            let value = col_cost
                + r.iter()
                    .enumerate()
                    .map(|(i, &x)| inst.row_cost(i, x))
                    .sum::<i64>();
            if best[k].as_ref().is_none_or(|(b, _, _)| value < *b) {
                best[k] = Some((value, r.to_vec(), c.entries().to_vec()));
            }
        });
    });
    Ok(best
        .into_iter()
        .map(|slot| {
            slot.map(|(v, r, c)| {
                (
                    v,
                    NonincreasingTuple::new(r, n).expect("valid"),
                    NonincreasingTuple::new(c, m).expect("valid"),
                )
            })
        })
        .collect())
}

/// Sequence-level exhaustive minimum `(objective, r, c)`.
pub fn brute_force_sequences(inst: &Instance) -> Result<SequenceOptimum> {
    let per_type = brute_force_by_type(inst)?;
    let mut best: Option<SequenceOptimum> = None;
    for candidate in per_type.into_iter().flatten() {
        if best.as_ref().is_none_or(|b| candidate.0 < b.0) {
            best = Some(candidate);
        }
    }
    Ok(best.expect("the all-zero pair is always admissible"))
}
