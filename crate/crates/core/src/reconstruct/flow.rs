//! Bipartite transportation network for prescribed line sums, solved with
//! Dinic's blocking-flow algorithm.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u64,
    rev: usize,
}

/// Network with source `s`, sink `t`, row nodes `u_1..u_m` and column nodes
/// `w_1..w_n`. Arcs: `s→u_i` (capacity `r_i`), `u_i→w_j` (capacity 1),
/// `w_j→t` (capacity `c_j`).
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    m: usize,
    n: usize,
    adj: Vec<Vec<Arc>>,
    // (node, arc index) of each u_i→w_j arc, row-major
    middle: Vec<(usize, usize)>,
}

impl FlowNetwork {
    const SOURCE: usize = 0;
    const SINK: usize = 1;

    fn row_node(i: usize) -> usize {
        2 + i
    }

    fn col_node(&self, j: usize) -> usize {
        2 + self.m + j
    }

    pub fn for_line_sums(r: &[usize], c: &[usize]) -> Self {
        let (m, n) = (r.len(), c.len());
        let mut net = Self {
            m,
            n,
            adj: vec![Vec::new(); 2 + m + n],
            middle: Vec::with_capacity(m * n),
        };
        for (i, &ri) in r.iter().enumerate() {
            net.add_arc(Self::SOURCE, Self::row_node(i), ri as u64);
        }
        for i in 0..m {
            for j in 0..n {
                let from = Self::row_node(i);
                let idx = net.add_arc(from, net.col_node(j), 1);
                net.middle.push((from, idx));
            }
        }
        for (j, &cj) in c.iter().enumerate() {
            net.add_arc(net.col_node(j), Self::SINK, cj as u64);
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u64) -> usize {
        let fwd = self.adj[from].len();
        let bwd = self.adj[to].len();
        self.adj[from].push(Arc { to, cap, rev: bwd });
        self.adj[to].push(Arc {
            to: from,
            cap: 0,
            rev: fwd,
        });
        fwd
    }

    /// Number of forward arcs: `m + m·n + n`.
    pub fn arc_count(&self) -> usize {
        self.m + self.m * self.n + self.n
    }

    /// Runs max flow from source to sink and returns its value.
    pub fn max_flow(&mut self) -> u64 {
        let nodes = self.adj.len();
        let mut total = 0;
        let mut level = vec![usize::MAX; nodes];
        let mut next = vec![0usize; nodes];
        loop {
            level.fill(usize::MAX);
            level[Self::SOURCE] = 0;
            let mut queue = VecDeque::from([Self::SOURCE]);
            while let Some(v) = queue.pop_front() {
                for a in &self.adj[v] {
                    if a.cap > 0 && level[a.to] == usize::MAX {
                        level[a.to] = level[v] + 1;
                        queue.push_back(a.to);
                    }
                }
            }
            if level[Self::SINK] == usize::MAX {
                return total;
            }
            next.fill(0);
            loop {
                let pushed = self.augment(Self::SOURCE, u64::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    fn augment(&mut self, v: usize, limit: u64, level: &[usize], next: &mut [usize]) -> u64 {
        if v == Self::SINK {
            return limit;
        }
        while next[v] < self.adj[v].len() {
            let Arc { to, cap, rev } = self.adj[v][next[v]];
            if cap > 0 && level[to] == level[v] + 1 {
                let pushed = self.augment(to, limit.min(cap), level, next);
                if pushed > 0 {
                    self.adj[v][next[v]].cap -= pushed;
                    self.adj[to][rev].cap += pushed;
                    return pushed;
                }
            }
            next[v] += 1;
        }
        0
    }

    /// Flow currently routed on `u_i→w_j` (0-based), always 0 or 1.
    pub fn middle_flow(&self, i: usize, j: usize) -> u64 {
        let (node, idx) = self.middle[i * self.n + j];
        // residual capacity of a unit arc is 1 - flow
        1 - self.adj[node][idx].cap
    }
}
