//! Exact solver for line sum optimization over (0,1)-matrices.
//!
//! Given `m`, `n`, row cost tables `f_i : {0..n} -> Z` and column cost
//! tables `g_j : {0..m} -> Z`, the problem asks for a matrix
//! `A ∈ {0,1}^{m×n}` minimizing `Σ f_i(r_i(A)) + Σ g_j(c_j(A))`.
//!
//! [`dpsolver::solve_monotone`] solves it over *monotone* matrices (row and
//! column sums nonincreasing) by a shortest-path search over strip-encoded
//! column sum tuples. When all `f_i` coincide and all `g_j` coincide the
//! objective is invariant under row and column permutations, so the
//! monotone optimum is a global optimum; see [`dpsolver::solve_uniform`].
//!
//! ```
//! use linesum::{dpsolver, Instance};
//!
//! let f: Vec<i32> = (0..=4).map(|x: i32| (x - 1).pow(2) * (x - 3).pow(2)).collect();
//! let g: Vec<i32> = (0..=4).map(|x: i32| (x - 2).pow(2) * (x - 3).pow(2)).collect();
//! let sol = dpsolver::solve_uniform(4, 4, &f, &g).unwrap();
//! assert_eq!(sol.objective, 0);
//! assert_eq!(sol.matrix.row_sums(), sol.r.entries());
//! ```

pub mod cli;
pub mod dpsolver;
mod error;
pub mod matrix;
pub mod oracle;
pub mod reconstruct;
pub mod rng;
pub mod seqcore;

pub use dpsolver::{solve_monotone, solve_uniform, Solution};
pub use error::{Error, Result};
pub use matrix::BinaryMatrix;
pub use seqcore::{Instance, NonincreasingTuple, StripEncoding};
