//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use linesum::dpsolver::{solve_monotone, solve_monotone_with_stats, solve_uniform, state_ceiling};
use linesum::oracle::{brute_force_matrix, brute_force_sequences};
use linesum::reconstruct::{gale_ryser, maxflow_construct, ryser_feasible};
use linesum::rng::SplitMix64;
use linesum::seqcore::for_each_nonincreasing;
use linesum::{Instance, NonincreasingTuple, StripEncoding};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn random_instance(rng: &mut SplitMix64, m: usize, n: usize, lo: i64, hi: i64) -> Instance {
    let f = (0..m)
        .map(|_| (0..=n).map(|_| rng.range_i64(lo, hi) as i32).collect())
        .collect();
    let g = (0..n)
        .map(|_| (0..=m).map(|_| rng.range_i64(lo, hi) as i32).collect())
        .collect();
    Instance::new(f, g).unwrap()
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn intro_golden() -> Outcome {
    let start = Instant::now();
    let f: Vec<i32> = (0..=4)
        .map(|x: i32| (x - 1).pow(2) * (x - 3).pow(2))
        .collect();
    let g: Vec<i32> = (0..=4)
        .map(|x: i32| (x - 2).pow(2) * (x - 3).pow(2))
        .collect();
    let sol = solve_uniform(4, 4, &f, &g).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if sol.objective != 0 {
        return Err(format!("objective {}", sol.objective));
    }
    let rows = sol.matrix.row_sums();
    let cols = sol.matrix.col_sums();
    let cost: i64 = rows.iter().map(|&x| f[x] as i64).sum::<i64>()
        + cols.iter().map(|&y| g[y] as i64).sum::<i64>();
    if cost != 0 {
        return Err(format!("matrix sums {rows:?}/{cols:?} cost {cost}"));
    }
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!(
        "objective 0, sums {rows:?} / {cols:?}, {elapsed:?}"
    ))
}

fn example_one_golden() -> Outcome {
    let start = Instant::now();
    let r_target = [6usize, 5, 4, 3, 2, 1, 0];
    let c_target = [5usize, 5, 3, 3, 3, 1, 1, 0, 0];
    let inst = Instance::from_fn(
        7,
        9,
        |i, x| (x as i32 - r_target[i] as i32).pow(2),
        |j, y| (y as i32 - c_target[j] as i32).pow(2),
    );
    let sol = solve_monotone(&inst);
    let elapsed = start.elapsed();
    if sol.objective != 0 || sol.r.entries() != r_target || sol.c.entries() != c_target {
        return Err(format!(
            "got objective {} r={:?} c={:?}",
            sol.objective,
            sol.r.entries(),
            sol.c.entries()
        ));
    }
    let e = StripEncoding::encode(&sol.c);
    if e.t() != [9, 7, 5, 2, 0] || e.d() != [0, 1, 3, 5, 7] {
        return Err(format!("encoding t={:?} d={:?}", e.t(), e.d()));
    }
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!(
        "objective 0, k={}, t={:?}, d={:?}, {elapsed:?}",
        sol.k,
        e.t(),
        e.d()
    ))
}

fn matrix_sweep(seed: u64, count: usize, lo: i64, hi: i64, limit: Duration) -> Outcome {
    let start = Instant::now();
    let mut rng = SplitMix64::new(seed);
    for case in 0..count {
        let m = rng.range_usize(1, 4);
        let n = rng.range_usize(1, 4);
        let inst = random_instance(&mut rng, m, n, lo, hi);
        let got = solve_monotone(&inst).objective;
        let (want, _) = brute_force_matrix(&inst, true).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!(
                "case {case} ({m}x{n}): solver {got}, oracle {want}"
            ));
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, limit)?;
    Ok(format!("{count} instances agree, {elapsed:?}"))
}

fn uniform_optimality() -> Outcome {
    let start = Instant::now();
    let mut rng = SplitMix64::new(1001);
    for case in 0..100 {
        let m = rng.range_usize(1, 3);
        let n = rng.range_usize(1, 3);
        let f: Vec<i32> = (0..=n).map(|_| rng.range_i64(-20, 20) as i32).collect();
        let g: Vec<i32> = (0..=m).map(|_| rng.range_i64(-20, 20) as i32).collect();
        let got = solve_uniform(m, n, &f, &g)
            .map_err(|e| e.to_string())?
            .objective;
        let inst = Instance::uniform(m, n, &f, &g).unwrap();
        let (want, _) = brute_force_matrix(&inst, false).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!(
                "case {case} ({m}x{n}): solver {got}, unrestricted oracle {want}"
            ));
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!(
        "100 uniform instances optimal over all matrices, {elapsed:?}"
    ))
}

fn tuples(len: usize, bound: usize) -> Vec<NonincreasingTuple> {
    let mut out = Vec::new();
    for_each_nonincreasing(len, bound, |v| {
        out.push(NonincreasingTuple::new(v.to_vec(), bound).unwrap())
    });
    out
}

fn ryser_cross_check() -> Outcome {
    let start = Instant::now();
    let (mut pairs, mut feasible_pairs) = (0usize, 0usize);
    for m in 0..=5 {
        for n in 0..=5 {
            let cs = tuples(n, m);
            for r in tuples(m, n) {
                for c in cs.iter().filter(|c| c.sum() == r.sum()) {
                    pairs += 1;
                    let criterion = ryser_feasible(&r, c).map_err(|e| e.to_string())?;
                    let flow = maxflow_construct(&r, c).map_err(|e| e.to_string())?;
                    if criterion != flow.is_some() {
                        return Err(format!(
                            "r={:?} c={:?}: criterion {criterion}, flow {}",
                            r.entries(),
                            c.entries(),
                            flow.is_some()
                        ));
                    }
                    if criterion {
                        feasible_pairs += 1;
                        let a = gale_ryser(&r, c).map_err(|e| e.to_string())?;
                        if a.row_sums() != r.entries() || a.col_sums() != c.entries() {
                            return Err(format!(
                                "gale_ryser sums wrong for r={:?} c={:?}",
                                r.entries(),
                                c.entries()
                            ));
                        }
                        let b = flow.unwrap();
                        if b.row_sums() != r.entries() || b.col_sums() != c.entries() {
                            return Err(format!(
                                "flow sums wrong for r={:?} c={:?}",
                                r.entries(),
                                c.entries()
                            ));
                        }
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(120))?;
    Ok(format!(
        "{pairs} pairs ({feasible_pairs} feasible), {elapsed:?}"
    ))
}

fn sequence_algebra() -> Outcome {
    let start = Instant::now();
    let mut count = 0usize;
    for m in 0..=6 {
        for n in 0..=6 {
            for c in tuples(n, m) {
                count += 1;
                let s = c.conjugate();
                if s.conjugate() != c {
                    return Err(format!("involution fails for {:?}", c.entries()));
                }
                if s.sum() != c.sum() || s.type_k() != c.type_k() {
                    return Err(format!("sum/type not preserved for {:?}", c.entries()));
                }
                let e = StripEncoding::encode(&c);
                let (c2, s2) = e.decode();
                if c2 != c || s2 != s {
                    return Err(format!("strip round trip fails for {:?}", c.entries()));
                }
                let e2 = StripEncoding::new(e.t().to_vec(), e.d().to_vec(), m, n)
                    .map_err(|x| x.to_string())?;
                if StripEncoding::encode(&e2.decode().0) != e2 {
                    return Err(format!("encode(decode(e)) != e for {:?}", c.entries()));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!("{count} tuples, {elapsed:?}"))
}

fn mid_scale() -> Outcome {
    let mut rng = SplitMix64::new(6060);
    let mut slowest = Duration::ZERO;
    let mut peak_ratio = 0.0f64;
    for case in 0..20 {
        let inst = random_instance(&mut rng, 6, 6, -20, 20);
        let start = Instant::now();
        let (sol, stats) = solve_monotone_with_stats(&inst);
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        within(elapsed, Duration::from_secs(10)).map_err(|e| format!("case {case}: {e}"))?;
        for (k, &count) in stats.explored_states.iter().enumerate() {
            let ceiling = state_ceiling(6, 6, k);
            if count > ceiling {
                return Err(format!("case {case}: k={k} explored {count} > {ceiling}"));
            }
            if ceiling > 0 {
                peak_ratio = peak_ratio.max(count as f64 / ceiling as f64);
            }
        }
        let (want, _, _) = brute_force_sequences(&inst).map_err(|e| e.to_string())?;
        if sol.objective != want {
            return Err(format!(
                "case {case}: solver {}, oracle {want}",
                sol.objective
            ));
        }
    }
    Ok(format!(
        "20 instances agree, slowest {slowest:?}, peak explored/ceiling {peak_ratio:.3}"
    ))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("1 intro instance, uniform mode, objective 0", intro_golden),
        ("2 Example 1 sums and strip encoding", example_one_golden),
        ("3 matrix oracle sweep, 200 instances", || {
            matrix_sweep(3003, 200, -20, 20, Duration::from_secs(120))
        }),
        ("4 uniform optimality over all matrices", uniform_optimality),
        (
            "5 Ryser criterion vs max flow vs Gale-Ryser",
            ryser_cross_check,
        ),
        ("6 conjugation and strip encoding algebra", sequence_algebra),
        ("7 all-negative costs vs matrix oracle", || {
            matrix_sweep(7007, 100, -20, -1, Duration::from_secs(120))
        }),
        ("8 mid-scale 6x6 vs sequence oracle", mid_scale),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
