//! Exact monotone line sum optimization.
//!
//! For a fixed type `k`, every pair `(r, c)` with `c` nonincreasing of type
//! `k` and `r` nonincreasing and majorized by the conjugate `s` of `c` is a
//! source-to-sink path in a layered graph whose vertices are
//!
//! ```text
//! (h, t_h, d_h, i, r_i, S_i, R_i)
//! ```
//!
//! where `h` is the current strip, `t_h`/`d_h` its length and last row, `i`
//! the row, `r_i` its sum, and `S_i`/`R_i` the prefix sums of `s` and `r`.
//! Edge lengths add `f_i(r_i)` for each row and `g_j(d_h)` for the columns
//! whose sum is fixed when a strip closes, so the path length equals the
//! objective. Every edge advances `i` by one, so one forward sweep over the
//! rows gives exact shortest paths even with negative lengths.
//!
//! The graph is never materialized: states are generated row by row from the
//! source and kept in a map with their best cost and predecessor.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::Result;
use crate::matrix::BinaryMatrix;
use crate::reconstruct;
use crate::seqcore::{Instance, NonincreasingTuple, StripEncoding};

/// A vertex of the type-`k` graph. Field order is the tuple order used for
/// deterministic tie-breaking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DpState {
    /// Strip index `h` in `1..=k+1`; `k+1` is the trailing zero strip.
    pub strip: u32,
    /// `t_h`: number of columns with sum at least `d_h`.
    pub strip_len: u32,
    /// `d_h`: last row of strip `h`.
    pub strip_end: u32,
    /// Row index `i` in `1..=m`.
    pub row: u32,
    /// `r_i`.
    pub row_sum: u32,
    /// `S_i`: prefix sum of the conjugate of `c`.
    pub conj_prefix: u32,
    /// `R_i`: prefix sum of `r`.
    pub row_prefix: u32,
}

impl DpState {
    pub fn new(
        strip: usize,
        strip_len: usize,
        strip_end: usize,
        row: usize,
        row_sum: usize,
        conj_prefix: usize,
        row_prefix: usize,
    ) -> Self {
        Self {
            strip: strip as u32,
            strip_len: strip_len as u32,
            strip_end: strip_end as u32,
            row: row as u32,
            row_sum: row_sum as u32,
            conj_prefix: conj_prefix as u32,
            row_prefix: row_prefix as u32,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Source,
    State(DpState),
    Sink,
}

/// `prefix[v][j] = g_1(v) + ... + g_j(v)`, so any column range sum of one
/// value is a single subtraction.
#[derive(Debug, Clone)]
struct ColumnPrefix {
    n: usize,
    table: Vec<i64>,
}

impl ColumnPrefix {
    fn new(inst: &Instance) -> Self {
        let (m, n) = (inst.m(), inst.n());
        let mut table = vec![0i64; (m + 1) * (n + 1)];
        for v in 0..=m {
            for j in 0..n {
                table[v * (n + 1) + j + 1] = table[v * (n + 1) + j] + inst.col_cost(j, v);
            }
        }
        Self { n, table }
    }

    /// `Σ g_j(value)` over columns `lo < j <= hi` (1-based).
    #[inline]
    fn range(&self, value: usize, lo: usize, hi: usize) -> i64 {
        let base = value * (self.n + 1);
        self.table[base + hi] - self.table[base + lo]
    }
}

/// The implicit graph for one type `k`.
#[derive(Debug, Clone)]
pub struct StripGraph<'a> {
    inst: &'a Instance,
    k: usize,
    cols: ColumnPrefix,
}

impl<'a> StripGraph<'a> {
    /// Requires `1 <= k <= min(m, n)`.
    pub fn new(inst: &'a Instance, k: usize) -> Self {
        assert!(
            k >= 1 && k <= inst.m().min(inst.n()),
            "type {k} out of range"
        );
        Self {
            inst,
            k,
            cols: ColumnPrefix::new(inst),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Calls `visit(next, length)` for every out-edge of `node`.
    pub fn for_each_successor(&self, node: &Node, mut visit: impl FnMut(Node, i64)) {
        let (m, n, k) = (self.inst.m(), self.inst.n(), self.k);
        let st = match node {
            Node::Sink => return,
            Node::Source => {
                // t_1 > ... > t_k >= 1 forces t_1 >= k; likewise d_1 <= m - k + 1
                for t1 in k..=n {
                    let len = self.cols.range(0, t1, n);
                    for d1 in 1..=m + 1 - k {
                        for r1 in 0..=t1 {
                            visit(Node::State(DpState::new(1, t1, d1, 1, r1, t1, r1)), len);
                        }
                    }
                }
                return;
            }
            Node::State(st) => st,
        };

        let h = st.strip as usize;
        let t_h = st.strip_len as usize;
        let d_h = st.strip_end as usize;
        let i = st.row as usize;
        let r_i = st.row_sum as usize;
        let s_pre = st.conj_prefix as usize;
        let r_pre = st.row_prefix as usize;
        let row_len = self.inst.row_cost(i - 1, r_i);

        // next row in the same or a new strip, whose conjugate entry is `t`
        let mut advance = |strip: usize, t: usize, d: usize, len: i64| {
            let s_next = s_pre + t;
            for r_next in 0..=r_i {
                if r_pre + r_next > s_next {
                    break;
                }
                visit(
                    Node::State(DpState::new(
                        strip,
                        t,
                        d,
                        i + 1,
                        r_next,
                        s_next,
                        r_pre + r_next,
                    )),
                    len,
                );
            }
        };

        if h == k + 1 {
            // zero strip: s_i = 0 for the remaining rows
            if i < m {
                advance(h, 0, m, row_len);
            } else if r_pre == s_pre {
                visit(Node::Sink, row_len);
            }
        } else if i < d_h {
            advance(h, t_h, d_h, row_len);
        } else if h < k {
            // strip h closes: the t_h - t_{h+1} columns with sum d_h are fixed
            let remaining = k - h;
            for t_next in remaining..t_h {
                let len = row_len + self.cols.range(d_h, t_next, t_h);
                for d_next in d_h + 1..=m + 1 - remaining {
                    advance(h + 1, t_next, d_next, len);
                }
            }
        } else {
            // last nonzero strip closes: its t_k columns have sum d_k
            let len = row_len + self.cols.range(d_h, 0, t_h);
            if d_h == m {
                if r_pre == s_pre {
                    visit(Node::Sink, len);
                }
            } else {
                advance(k + 1, 0, m, len);
            }
        }
    }
}

/// Best `(r, c)` with `c` of one fixed type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeOptimum {
    pub objective: i64,
    pub r: NonincreasingTuple,
    pub c: NonincreasingTuple,
    /// Internal vertices of the shortest path, one per row.
    pub path: Vec<DpState>,
    /// Distinct states reached from the source.
    pub explored_states: usize,
}

#[derive(Debug, Clone, Copy)]
struct Label {
    cost: i64,
    pred: Option<DpState>,
}

fn relax(layer: &mut HashMap<DpState, Label>, state: DpState, cost: i64, pred: Option<DpState>) {
    layer
        .entry(state)
        .and_modify(|label| {
            if cost < label.cost || (cost == label.cost && pred < label.pred) {
                *label = Label { cost, pred };
            }
        })
        .or_insert(Label { cost, pred });
}

/// Shortest source-to-sink path in the type-`k` graph, or `None` if `k` is
/// outside `1..=min(m, n)`.
pub fn solve_type_k(inst: &Instance, k: usize) -> Option<TypeOptimum> {
    let (m, n) = (inst.m(), inst.n());
    if k == 0 || k > m.min(n) {
        return None;
    }
    let graph = StripGraph::new(inst, k);

    let mut layers: Vec<HashMap<DpState, Label>> = Vec::with_capacity(m);
    let mut current = HashMap::new();
    graph.for_each_successor(&Node::Source, |next, len| {
        if let Node::State(st) = next {
            relax(&mut current, st, len, None);
        }
    });

    let mut best: Option<(i64, DpState)> = None;
    for _ in 0..m {
        let mut next_layer = HashMap::new();
        for (&st, label) in &current {
            graph.for_each_successor(&Node::State(st), |next, len| {
                let cost = label.cost + len;
                match next {
                    Node::State(to) => relax(&mut next_layer, to, cost, Some(st)),
                    Node::Sink => {
                        if best.is_none_or(|b| (cost, st) < b) {
                            best = Some((cost, st));
                        }
                    }
                    Node::Source => unreachable!(),
                }
            });
        }
        layers.push(current);
        current = next_layer;
    }
    debug_assert!(current.is_empty());

    let explored_states = layers.iter().map(HashMap::len).sum();
    let (objective, last) = best?;

    let mut path = vec![last];
    for layer in layers.iter().rev() {
        let st = *path.last().unwrap();
        match layer[&st].pred {
            Some(prev) => path.push(prev),
            None => break,
        }
    }
    path.reverse();
    debug_assert_eq!(path.len(), m);

    let (r, c) = read_off_path(&path, m, n, k);
    Some(TypeOptimum {
        objective,
        r,
        c,
        path,
        explored_states,
    })
}

/// Recovers `(r, c)` from the `m` internal vertices of a path.
pub fn read_off_path(
    path: &[DpState],
    m: usize,
    n: usize,
    k: usize,
) -> (NonincreasingTuple, NonincreasingTuple) {
    let mut t = vec![n];
    let mut d = vec![0];
    for st in path {
        let h = st.strip as usize;
        if h <= k && h == t.len() {
            t.push(st.strip_len as usize);
            d.push(st.strip_end as usize);
        }
    }
    t.push(0);
    d.push(m);
    let enc = StripEncoding::new(t, d, m, n).expect("path vertices carry a valid strip encoding");
    let r = NonincreasingTuple::new(path.iter().map(|st| st.row_sum as usize).collect(), n)
        .expect("path rows are nonincreasing");
    (r, enc.decode().0)
}

/// Optimal monotone matrix with its line sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub objective: i64,
    pub r: NonincreasingTuple,
    pub c: NonincreasingTuple,
    /// Number of distinct nonzero column sums.
    pub k: usize,
    pub matrix: BinaryMatrix,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Reached states per type, indexed by `k` (entry 0 is the trivial case).
    pub explored_states: Vec<usize>,
}

/// Upper limit on reached states for type `k`:
/// `(k+1)·n·m²·(n+1)·(mn+1)`.
pub fn state_ceiling(m: usize, n: usize, k: usize) -> usize {
    (k + 1) * n * m * m * (n + 1) * (m * n + 1)
}

/// Monotone optimum together with per-type search statistics.
pub fn solve_monotone_with_stats(inst: &Instance) -> (Solution, SolveStats) {
    let (m, n) = (inst.m(), inst.n());
    let max_k = m.min(n);
    let per_type: Vec<TypeOptimum> = (1..=max_k)
        .into_par_iter()
        .map(|k| solve_type_k(inst, k).expect("every type in 1..=min(m, n) is attainable"))
        .collect();

    let zero_r = NonincreasingTuple::zeros(m, n);
    let zero_c = NonincreasingTuple::zeros(n, m);
    let baseline = inst
        .evaluate_sums(zero_r.entries(), zero_c.entries())
        .expect("zero sums are in range");

    let mut best = (baseline, 0usize, zero_r, zero_c);
    for (idx, opt) in per_type.iter().enumerate() {
        // strict: equal objectives keep the smaller type
        if opt.objective < best.0 {
            best = (opt.objective, idx + 1, opt.r.clone(), opt.c.clone());
        }
    }
    let (objective, k, r, c) = best;
    let matrix = reconstruct::gale_ryser(&r, &c).expect("optimal sums satisfy the Ryser criterion");

    let mut explored_states = vec![0];
    explored_states.extend(per_type.iter().map(|o| o.explored_states));
    (
        Solution {
            objective,
            r,
            c,
            k,
            matrix,
        },
        SolveStats { explored_states },
    )
}

/// Minimizes `Σ f_i(r_i) + Σ g_j(c_j)` over matrices with nonincreasing
/// row and column sums.
pub fn solve_monotone(inst: &Instance) -> Solution {
    solve_monotone_with_stats(inst).0
}

/// Uniform problem: one row table `f` (length `n+1`) and one column table
/// `g` (length `m+1`). The result is optimal over all (0,1)-matrices.
pub fn solve_uniform(m: usize, n: usize, f: &[i32], g: &[i32]) -> Result<Solution> {
    Ok(solve_monotone(&Instance::uniform(m, n, f, g)?))
}
