//! Nonincreasing integer tuples, conjugation, majorization, the strip
//! encoding of a tuple together with its conjugate, and objective
//! evaluation.

use crate::error::{Error, Result};

/// A nonincreasing tuple of nonnegative integers whose entries never
/// exceed `bound`.
///
/// Column sums of an `m×n` matrix live in a tuple of length `n` with bound
/// `m`; row sums in a tuple of length `m` with bound `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonincreasingTuple {
    entries: Vec<usize>,
    bound: usize,
}

impl NonincreasingTuple {
    pub fn new(entries: Vec<usize>, bound: usize) -> Result<Self> {
        for (position, &value) in entries.iter().enumerate() {
            if value > bound {
                return Err(Error::EntryOutOfBounds {
                    position,
                    value,
                    bound,
                });
            }
        }
        if let Some(position) = entries.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotNonincreasing {
                position: position + 1,
            });
        }
        Ok(Self { entries, bound })
    }

    pub fn zeros(len: usize, bound: usize) -> Self {
        Self {
            entries: vec![0; len],
            bound,
        }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Number of distinct nonzero values.
    pub fn type_k(&self) -> usize {
        let mut k = 0;
        let mut prev = 0;
        for &v in self.entries.iter().rev() {
            if v != prev {
                k += 1;
                prev = v;
            }
        }
        k
    }

    /// The conjugate `s` with `s_i = |{j : c_j >= i}|` for `i = 1..=bound`.
    ///
    /// The result has length `self.bound()` and bound `self.len()`, so
    /// conjugating twice gives back the original tuple.
    pub fn conjugate(&self) -> NonincreasingTuple {
        let mut s = vec![0usize; self.bound];
        // c is nonincreasing, so column j contributes to s_1..s_{c_j}.
        for &v in &self.entries {
            for slot in &mut s[..v] {
                *slot += 1;
            }
        }
        NonincreasingTuple {
            entries: s,
            bound: self.entries.len(),
        }
    }

    /// True iff `self` is majorized by `other`: every prefix sum of `self`
    /// is at most the matching prefix sum of `other` and the totals agree.
    pub fn is_majorized_by(&self, other: &NonincreasingTuple) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: other.len(),
                actual: self.len(),
            });
        }
        let (mut lhs, mut rhs) = (0usize, 0usize);
        for (&a, &b) in self.entries.iter().zip(&other.entries) {
            lhs += a;
            rhs += b;
            if lhs > rhs {
                return Ok(false);
            }
        }
        Ok(lhs == rhs)
    }
}

/// Free-function form of [`NonincreasingTuple::is_majorized_by`].
pub fn is_majorized(r: &NonincreasingTuple, s: &NonincreasingTuple) -> Result<bool> {
    r.is_majorized_by(s)
}

/// Strip form of a type-`k` tuple `c` of length `n` with entries at most
/// `m`.
///
/// `t = (t_0, ..., t_{k+1})` with `n = t_0 >= t_1 > ... > t_k > t_{k+1} = 0`
/// and `d = (d_0, ..., d_{k+1})` with `0 = d_0 < d_1 < ... < d_k <= d_{k+1} = m`.
/// The tuple `c` has `t_h - t_{h+1}` components equal to `d_h`, and its
/// conjugate has `d_{h+1} - d_h` components equal to `t_{h+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StripEncoding {
    t: Vec<usize>,
    d: Vec<usize>,
}

impl StripEncoding {
    /// Validates `t` and `d` against the dimensions `m` (rows) and `n`
    /// (columns).
    pub fn new(t: Vec<usize>, d: Vec<usize>, m: usize, n: usize) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidEncoding(msg.to_string()));
        if t.len() != d.len() || t.len() < 2 {
            return bad("t and d must both have length k+2");
        }
        let last = t.len() - 1;
        if t[0] != n || t[last] != 0 {
            return bad("t must start at n and end at 0");
        }
        if d[0] != 0 || d[last] != m {
            return bad("d must start at 0 and end at m");
        }
        if t[1] > t[0] || t[1..].windows(2).any(|w| w[0] <= w[1]) {
            return bad("t_1..t_{k+1} must strictly decrease");
        }
        if d[..last].windows(2).any(|w| w[0] >= w[1]) || d[last - 1] > d[last] {
            return bad("d_0..d_k must strictly increase up to m");
        }
        Ok(Self { t, d })
    }

    /// Encodes a tuple `c` (length `n`, bound `m`).
    pub fn encode(c: &NonincreasingTuple) -> Self {
        let n = c.len();
        let m = c.bound();
        let mut t = vec![n];
        let mut d = vec![0];
        // Walk from the smallest entry upward; each new distinct nonzero
        // value opens a strip.
        for (pos, &v) in c.entries().iter().enumerate().rev() {
            if v != *d.last().unwrap() {
                d.push(v);
                // columns with c_j >= v are exactly positions 0..=pos
                t.push(pos + 1);
            }
        }
        t.push(0);
        d.push(m);
        Self { t, d }
    }

    pub fn k(&self) -> usize {
        self.t.len() - 2
    }

    pub fn t(&self) -> &[usize] {
        &self.t
    }

    pub fn d(&self) -> &[usize] {
        &self.d
    }

    pub fn m(&self) -> usize {
        *self.d.last().unwrap()
    }

    pub fn n(&self) -> usize {
        self.t[0]
    }

    /// Returns `(c, s)` with `s` the conjugate of `c`.
    pub fn decode(&self) -> (NonincreasingTuple, NonincreasingTuple) {
        let k = self.k();
        let mut c = Vec::with_capacity(self.n());
        for h in (0..=k).rev() {
            c.extend(std::iter::repeat_n(self.d[h], self.t[h] - self.t[h + 1]));
        }
        let mut s = Vec::with_capacity(self.m());
        for h in 0..=k {
            s.extend(std::iter::repeat_n(
                self.t[h + 1],
                self.d[h + 1] - self.d[h],
            ));
        }
        (
            NonincreasingTuple {
                entries: c,
                bound: self.m(),
            },
            NonincreasingTuple {
                entries: s,
                bound: self.n(),
            },
        )
    }
}

/// Problem data: `m` rows, `n` columns, one row table `f_i` over `0..=n` per
/// row and one column table `g_j` over `0..=m` per column.
///
/// Costs are 32-bit, so any objective (at most `m + n` terms) is exact in
/// 64-bit arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    m: usize,
    n: usize,
    f: Vec<Vec<i32>>,
    g: Vec<Vec<i32>>,
}

impl Instance {
    /// Builds an instance from `m` row tables and `n` column tables.
    pub fn new(f: Vec<Vec<i32>>, g: Vec<Vec<i32>>) -> Result<Self> {
        let (m, n) = (f.len(), g.len());
        for (i, table) in f.iter().enumerate() {
            if table.len() != n + 1 {
                return Err(Error::CostTableLength {
                    table: format!("f[{}]", i + 1),
                    expected: n + 1,
                    actual: table.len(),
                });
            }
        }
        for (j, table) in g.iter().enumerate() {
            if table.len() != m + 1 {
                return Err(Error::CostTableLength {
                    table: format!("g[{}]", j + 1),
                    expected: m + 1,
                    actual: table.len(),
                });
            }
        }
        Ok(Self { m, n, f, g })
    }

    /// All rows share `f` (length `n+1`), all columns share `g` (length `m+1`).
    pub fn uniform(m: usize, n: usize, f: &[i32], g: &[i32]) -> Result<Self> {
        if f.len() != n + 1 {
            return Err(Error::CostTableLength {
                table: "f".into(),
                expected: n + 1,
                actual: f.len(),
            });
        }
        if g.len() != m + 1 {
            return Err(Error::CostTableLength {
                table: "g".into(),
                expected: m + 1,
                actual: g.len(),
            });
        }
        Ok(Self {
            m,
            n,
            f: vec![f.to_vec(); m],
            g: vec![g.to_vec(); n],
        })
    }

    /// Tabulates `row_cost(i, x)` and `col_cost(j, y)` with 0-based line
    /// indices.
    pub fn from_fn(
        m: usize,
        n: usize,
        row_cost: impl Fn(usize, usize) -> i32,
        col_cost: impl Fn(usize, usize) -> i32,
    ) -> Self {
        Self {
            m,
            n,
            f: (0..m)
                .map(|i| (0..=n).map(|x| row_cost(i, x)).collect())
                .collect(),
            g: (0..n)
                .map(|j| (0..=m).map(|y| col_cost(j, y)).collect())
                .collect(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `f_{i+1}(x)`; rows are 0-based here.
    #[inline]
    pub fn row_cost(&self, i: usize, x: usize) -> i64 {
        i64::from(self.f[i][x])
    }

    /// `g_{j+1}(y)`; columns are 0-based here.
    #[inline]
    pub fn col_cost(&self, j: usize, y: usize) -> i64 {
        i64::from(self.g[j][y])
    }

    pub fn row_tables(&self) -> &[Vec<i32>] {
        &self.f
    }

    pub fn col_tables(&self) -> &[Vec<i32>] {
        &self.g
    }

    /// True when every row table is identical and every column table is
    /// identical.
    pub fn is_uniform(&self) -> bool {
        self.f.windows(2).all(|w| w[0] == w[1]) && self.g.windows(2).all(|w| w[0] == w[1])
    }

    /// Objective for arbitrary (not necessarily sorted) line sums.
    pub fn evaluate_sums(&self, rows: &[usize], cols: &[usize]) -> Result<i64> {
        if rows.len() != self.m {
            return Err(Error::LengthMismatch {
                expected: self.m,
                actual: rows.len(),
            });
        }
        if cols.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: cols.len(),
            });
        }
        let mut total = 0i64;
        for (i, &x) in rows.iter().enumerate() {
            if x > self.n {
                return Err(Error::EntryOutOfBounds {
                    position: i,
                    value: x,
                    bound: self.n,
                });
            }
            total += self.row_cost(i, x);
        }
        for (j, &y) in cols.iter().enumerate() {
            if y > self.m {
                return Err(Error::EntryOutOfBounds {
                    position: j,
                    value: y,
                    bound: self.m,
                });
            }
            total += self.col_cost(j, y);
        }
        Ok(total)
    }
}

/// `Σ f_i(r_i) + Σ g_j(c_j)`.
pub fn objective_eval(
    inst: &Instance,
    r: &NonincreasingTuple,
    c: &NonincreasingTuple,
) -> Result<i64> {
    inst.evaluate_sums(r.entries(), c.entries())
}

/// Calls `visit` on every nonincreasing tuple of length `len` with entries
/// in `0..=bound`, in lexicographically decreasing order.
pub fn for_each_nonincreasing(len: usize, bound: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(buf: &mut Vec<usize>, len: usize, cap: usize, visit: &mut impl FnMut(&[usize])) {
        if buf.len() == len {
            visit(buf);
            return;
        }
        for v in (0..=cap).rev() {
            buf.push(v);
            rec(buf, len, v, visit);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(len);
    rec(&mut buf, len, bound, &mut visit);
}
