//! Feasibility and construction of (0,1)-matrices with prescribed
//! nonincreasing row and column sums.
//!
//! Two independent constructions are provided: the greedy Gale-Ryser
//! procedure and a max-flow formulation. The flow route does not consult
//! the majorization criterion at all, so it doubles as a feasibility oracle.

mod flow;

pub use flow::FlowNetwork;

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;
use crate::seqcore::NonincreasingTuple;

fn check_shapes(r: &NonincreasingTuple, c: &NonincreasingTuple) -> Result<()> {
    if let Some(position) = r.entries().iter().position(|&x| x > c.len()) {
        return Err(Error::EntryOutOfBounds {
            position,
            value: r.entries()[position],
            bound: c.len(),
        });
    }
    if let Some(position) = c.entries().iter().position(|&y| y > r.len()) {
        return Err(Error::EntryOutOfBounds {
            position,
            value: c.entries()[position],
            bound: r.len(),
        });
    }
    Ok(())
}

/// Ryser criterion: a matrix with row sums `r` and column sums `c` exists
/// iff `r` is majorized by the conjugate of `c`.
pub fn ryser_feasible(r: &NonincreasingTuple, c: &NonincreasingTuple) -> Result<bool> {
    check_shapes(r, c)?;
    let c = NonincreasingTuple::new(c.entries().to_vec(), r.len())?;
    r.is_majorized_by(&c.conjugate())
}

/// Greedy construction: rows are filled in order, each row putting its ones
/// into the columns with the largest remaining demand (ties to the smaller
/// column index).
pub fn gale_ryser(r: &NonincreasingTuple, c: &NonincreasingTuple) -> Result<BinaryMatrix> {
    if !ryser_feasible(r, c)? {
        return Err(Error::Infeasible);
    }
    let (m, n) = (r.len(), c.len());
    let mut demand = c.entries().to_vec();
    let mut order: Vec<usize> = (0..n).collect();
    let mut a = BinaryMatrix::zeros(m, n);
    for (i, &ri) in r.entries().iter().enumerate() {
        order.sort_by(|&x, &y| demand[y].cmp(&demand[x]).then(x.cmp(&y)));
        for &j in &order[..ri] {
            // guaranteed by the criterion
            debug_assert!(demand[j] > 0);
            demand[j] -= 1;
            a.set(i, j, true);
        }
    }
    debug_assert!(demand.iter().all(|&x| x == 0));
    Ok(a)
}

/// Max-flow construction; returns `None` when no realization exists.
///
/// Accepts any valid pair of tuples, majorized or not.
pub fn maxflow_construct(
    r: &NonincreasingTuple,
    c: &NonincreasingTuple,
) -> Result<Option<BinaryMatrix>> {
    check_shapes(r, c)?;
    let total = r.sum();
    if total != c.sum() {
        return Ok(None);
    }
    let mut net = FlowNetwork::for_line_sums(r.entries(), c.entries());
    if net.max_flow() != total as u64 {
        return Ok(None);
    }
    let (m, n) = (r.len(), c.len());
    let mut a = BinaryMatrix::zeros(m, n);
    for i in 0..m {
        for j in 0..n {
            a.set(i, j, net.middle_flow(i, j) == 1);
        }
    }
    Ok(Some(a))
}
