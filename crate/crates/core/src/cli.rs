//! `linesum` command-line front end: JSON instance and solution files,
//! seeded instance generation and oracle cross-checks.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::dpsolver::{self, state_ceiling, Solution, SolveStats};
use crate::matrix::BinaryMatrix;
use crate::oracle;
use crate::rng::SplitMix64;
use crate::seqcore::Instance;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

/// Row or column cost tables: one table per line, or a single shared table
/// for uniform instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CostTables {
    PerLine(Vec<Vec<i64>>),
    Shared(Vec<i64>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub m: usize,
    pub n: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub uniform: bool,
    pub f: CostTables,
    pub g: CostTables,
}

fn to_cost(v: i64, what: &str) -> Result<i32, String> {
    i32::try_from(v).map_err(|_| format!("{what}: cost {v} outside the signed 32-bit range"))
}

fn check_table(table: &[i64], expected: usize, what: &str) -> Result<Vec<i32>, String> {
    if table.len() != expected {
        return Err(format!(
            "{what}: expected {expected} values, found {}",
            table.len()
        ));
    }
    table.iter().map(|&v| to_cost(v, what)).collect()
}

impl InstanceFile {
    pub fn from_instance(inst: &Instance) -> Self {
        let widen = |tables: &[Vec<i32>]| {
            tables
                .iter()
                .map(|t| t.iter().map(|&v| i64::from(v)).collect())
                .collect()
        };
        Self {
            m: inst.m(),
            n: inst.n(),
            uniform: false,
            f: CostTables::PerLine(widen(inst.row_tables())),
            g: CostTables::PerLine(widen(inst.col_tables())),
        }
    }

    pub fn uniform(m: usize, n: usize, f: Vec<i64>, g: Vec<i64>) -> Self {
        Self {
            m,
            n,
            uniform: true,
            f: CostTables::Shared(f),
            g: CostTables::Shared(g),
        }
    }

    /// Validates shape and cost range and builds the instance.
    pub fn to_instance(&self) -> Result<Instance, String> {
        let (m, n) = (self.m, self.n);
        if m == 0 || n == 0 {
            return Err("m and n must be positive".into());
        }
        match (self.uniform, &self.f, &self.g) {
            (true, CostTables::Shared(f), CostTables::Shared(g)) => {
                let f = check_table(f, n + 1, "f")?;
                let g = check_table(g, m + 1, "g")?;
                Instance::uniform(m, n, &f, &g).map_err(|e| e.to_string())
            }
            (false, CostTables::PerLine(f), CostTables::PerLine(g)) => {
                if f.len() != m {
                    return Err(format!("f: expected {m} tables, found {}", f.len()));
                }
                if g.len() != n {
                    return Err(format!("g: expected {n} tables, found {}", g.len()));
                }
                let f = f
                    .iter()
                    .enumerate()
                    .map(|(i, t)| check_table(t, n + 1, &format!("f[{}]", i + 1)))
                    .collect::<Result<_, _>>()?;
                let g = g
                    .iter()
                    .enumerate()
                    .map(|(j, t)| check_table(t, m + 1, &format!("g[{}]", j + 1)))
                    .collect::<Result<_, _>>()?;
                Instance::new(f, g).map_err(|e| e.to_string())
            }
            (true, _, _) => Err("uniform instances need a single table for f and for g".into()),
            (false, _, _) => Err(
                "f and g must be lists of tables (set \"uniform\": true for shared tables)".into(),
            ),
        }
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("invalid instance file: {e}"))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverMetadata {
    pub mode: String,
    /// Reached states per type `k = 0..=min(m, n)`.
    pub explored_states: Vec<usize>,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub objective: i64,
    pub k: usize,
    pub row_sums: Vec<usize>,
    pub col_sums: Vec<usize>,
    pub matrix: Vec<Vec<u8>>,
    pub metadata: SolverMetadata,
}

impl SolutionFile {
    pub fn new(sol: &Solution, stats: &SolveStats, mode: Mode, elapsed_us: u64) -> Self {
        Self {
            objective: sol.objective,
            k: sol.k,
            row_sums: sol.r.entries().to_vec(),
            col_sums: sol.c.entries().to_vec(),
            matrix: sol.matrix.to_rows(),
            metadata: SolverMetadata {
                mode: mode.name().into(),
                explored_states: stats.explored_states.clone(),
                elapsed_us,
            },
        }
    }

    /// Recomputes the matrix line sums and the objective.
    pub fn verify(&self, inst: &Instance) -> Result<(), String> {
        let a = BinaryMatrix::from_rows(&self.matrix, inst.n())
            .filter(|a| a.rows() == inst.m())
            .ok_or("matrix is not an m×n (0,1)-matrix")?;
        if a.row_sums() != self.row_sums {
            return Err("matrix row sums differ from row_sums".into());
        }
        if a.col_sums() != self.col_sums {
            return Err("matrix column sums differ from col_sums".into());
        }
        let value = inst
            .evaluate_sums(&self.row_sums, &self.col_sums)
            .map_err(|e| e.to_string())?;
        if value != self.objective {
            return Err(format!(
                "objective {} but sums evaluate to {value}",
                self.objective
            ));
        }
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("invalid solution file: {e}"))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("solution serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Monotone,
    Uniform,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Monotone => "monotone",
            Mode::Uniform => "uniform",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "linesum",
    version,
    about = "Exact line sum optimization over (0,1)-matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an instance file and write the solution as JSON.
    Solve {
        #[arg(short, long)]
        input: PathBuf,
        /// Defaults to standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Monotone)]
        mode: Mode,
        /// Cross-check the optimum against an exhaustive oracle.
        #[arg(long)]
        check: bool,
        /// Print per-type explored state counts to standard error.
        #[arg(long)]
        stats: bool,
    },
    /// Generate a random instance with costs uniform in [-cost_range, cost_range].
    Gen {
        #[arg(short = 'm', long = "rows")]
        m: usize,
        #[arg(short = 'n', long = "cols")]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        cost_range: i64,
        /// Emit one shared row table and one shared column table.
        #[arg(long)]
        uniform: bool,
        /// Defaults to standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare the solver with every applicable exhaustive oracle.
    Check {
        #[arg(short, long)]
        input: PathBuf,
    },
}

/// Deterministic instance generation: costs are drawn in order `f` tables
/// (row by row, values `0..=n`) then `g` tables, each uniform in
/// `[-cost_range, cost_range]` from [`SplitMix64`] seeded with `seed`.
pub fn generate(
    m: usize,
    n: usize,
    seed: u64,
    cost_range: i64,
    uniform: bool,
) -> Result<InstanceFile, String> {
    if m == 0 || n == 0 {
        return Err("m and n must be positive".into());
    }
    if cost_range <= 0 || cost_range > i64::from(i32::MAX) {
        return Err(format!("cost range must be in 1..={}", i32::MAX));
    }
    let mut rng = SplitMix64::new(seed);
    let mut table = |len: usize| -> Vec<i64> {
        (0..len)
            .map(|_| rng.range_i64(-cost_range, cost_range))
            .collect()
    };
    Ok(if uniform {
        let f = table(n + 1);
        let g = table(m + 1);
        InstanceFile::uniform(m, n, f, g)
    } else {
        let f = (0..m).map(|_| table(n + 1)).collect();
        let g = (0..n).map(|_| table(m + 1)).collect();
        InstanceFile {
            m,
            n,
            uniform: false,
            f: CostTables::PerLine(f),
            g: CostTables::PerLine(g),
        }
    })
}

fn load_instance(path: &Path) -> Result<(InstanceFile, Instance), String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let file = InstanceFile::parse(&text)?;
    let inst = file.to_instance()?;
    Ok((file, inst))
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), String> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match cli.command {
        Command::Solve {
            input,
            output,
            mode,
            check,
            stats,
        } => cmd_solve(&input, output.as_deref(), mode, check, stats),
        Command::Gen {
            m,
            n,
            seed,
            cost_range,
            uniform,
            output,
        } => cmd_gen(m, n, seed, cost_range, uniform, output.as_deref()),
        Command::Check { input } => cmd_check(&input),
    }
}

pub fn cmd_solve(input: &Path, output: Option<&Path>, mode: Mode, check: bool, stats: bool) -> i32 {
    let (file, inst) = match load_instance(input) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    if mode == Mode::Uniform && !file.uniform {
        eprintln!("error: --mode uniform needs an instance file with \"uniform\": true");
        return EXIT_INPUT;
    }

    let start = Instant::now();
    let (sol, solve_stats) = dpsolver::solve_monotone_with_stats(&inst);
    let elapsed_us = start.elapsed().as_micros() as u64;
    let out = SolutionFile::new(&sol, &solve_stats, mode, elapsed_us);
    if let Err(e) = out.verify(&inst) {
        eprintln!("internal error: solution failed self-check: {e}");
        return EXIT_MISMATCH;
    }

    if stats {
        eprintln!("{:>3} {:>12} {:>14}", "k", "explored", "ceiling");
        for (k, &count) in solve_stats.explored_states.iter().enumerate() {
            eprintln!(
                "{k:>3} {count:>12} {:>14}",
                state_ceiling(inst.m(), inst.n(), k)
            );
        }
        eprintln!("elapsed: {elapsed_us} us");
    }

    if let Err(e) = emit(output, &out.to_json()) {
        eprintln!("error: {e}");
        return EXIT_INPUT;
    }

    if check {
        let reference = match mode {
            Mode::Uniform if oracle::matrix_oracle_applies(&inst) => {
                oracle::brute_force_matrix(&inst, false).map(|(v, _)| ("matrix (all)", v))
            }
            _ if oracle::sequence_oracle_applies(&inst) => {
                oracle::brute_force_sequences(&inst).map(|(v, _, _)| ("sequences", v))
            }
            _ if oracle::matrix_oracle_applies(&inst) => {
                oracle::brute_force_matrix(&inst, true).map(|(v, _)| ("matrix (monotone)", v))
            }
            _ => {
                eprintln!(
                    "warning: {}x{} is beyond every oracle bound, skipping check",
                    inst.m(),
                    inst.n()
                );
                return EXIT_OK;
            }
        };
        match reference {
            Ok((name, v)) if v == sol.objective => {
                eprintln!("check: {name} oracle agrees ({v})");
            }
            Ok((name, v)) => {
                eprintln!(
                    "check: MISMATCH solver {} vs {name} oracle {v}",
                    sol.objective
                );
                return EXIT_MISMATCH;
            }
            Err(e) => {
                eprintln!("warning: {e}, skipping check");
            }
        }
    }
    EXIT_OK
}

pub fn cmd_gen(
    m: usize,
    n: usize,
    seed: u64,
    cost_range: i64,
    uniform: bool,
    output: Option<&Path>,
) -> i32 {
    let file = match generate(m, n, seed, cost_range, uniform) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    match emit(output, &file.to_json()) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

pub fn cmd_check(input: &Path) -> i32 {
    let (file, inst) = match load_instance(input) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let seq = oracle::sequence_oracle_applies(&inst);
    let mat = oracle::matrix_oracle_applies(&inst);
    if !seq && !mat {
        eprintln!(
            "error: {}x{} is beyond every oracle bound (matrix: m·n <= {}, sequences: m, n <= {})",
            inst.m(),
            inst.n(),
            oracle::MATRIX_CELL_LIMIT,
            oracle::SEQUENCE_DIM_LIMIT
        );
        return EXIT_INPUT;
    }

    let mut rows: Vec<(&str, i64)> = vec![("solver", dpsolver::solve_monotone(&inst).objective)];
    if seq {
        match oracle::brute_force_sequences(&inst) {
            Ok((v, _, _)) => rows.push(("sequences", v)),
            Err(e) => eprintln!("warning: {e}"),
        }
    }
    if mat {
        match oracle::brute_force_matrix(&inst, true) {
            Ok((v, _)) => rows.push(("matrix (monotone)", v)),
            Err(e) => eprintln!("warning: {e}"),
        }
        if file.uniform {
            match oracle::brute_force_matrix(&inst, false) {
                Ok((v, _)) => rows.push(("matrix (all)", v)),
                Err(e) => eprintln!("warning: {e}"),
            }
        }
    }

    let agree = rows.iter().all(|&(_, v)| v == rows[0].1);
    for (name, v) in &rows {
        println!("{name:<18} {v:>12}");
    }
    println!("{}", if agree { "agree" } else { "MISMATCH" });
    if agree {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}
