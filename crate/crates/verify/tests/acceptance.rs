//! Acceptance checks: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use jaco_core::{construct, construct_naive, LinearFunction};
use jaco_infer::{infer, InferenceStatus};
use jaco_invariants::{analyze, components, edge_count, smallest_unique_jaconian};
use jaco_sequences::{bettina_dplus, edge_count_fib};
use jaco_verify::{check, registry, verify_all, ClaimStatus, Grid, Observed};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn f(m: u64, c: u64) -> LinearFunction {
    LinearFunction::new(m, c).expect("positive slope")
}

fn within(elapsed: Duration, limit: Duration) -> Verdict {
    if elapsed <= limit {
        Ok(String::new())
    } else {
        Err(format!("took {elapsed:.2?}, limit {limit:?}"))
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn illustration_one() -> Verdict {
    let start = Instant::now();
    let g = construct(f(2, 1), 11).map_err(|e| e.to_string())?;
    let r = analyze(&g);
    ensure(
        r.delta == 9 && r.jaconian_set == [4, 5, 6] && r.prime_jaconian == 4,
        || {
            format!(
                "Delta {}, set {:?}, prime v{}",
                r.delta, r.jaconian_set, r.prime_jaconian
            )
        },
    )?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("Delta 9, set {4,5,6}, prime v4".into())
}

fn illustration_two() -> Verdict {
    let start = Instant::now();
    let g = construct(LinearFunction::identity(), 15).map_err(|e| e.to_string())?;
    let built: u64 = (2..=15).map(|i| g.infinite_out_degree(i).unwrap()).sum();
    let closed: u64 = (2..=15).map(|i| bettina_dplus(i).unwrap()).sum();
    let (eps, eps_fib) = (edge_count(&g), edge_count_fib(15).map_err(|e| e.to_string())?);
    ensure(eps == 44 && eps_fib == 44 && built == 75 && closed == 75, || {
        format!("arcs {eps}/{eps_fib}, out-degree sums {built}/{closed}")
    })?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("44 arcs and out-degree sum 75, constructed and closed form".into())
}

fn illustration_three() -> Verdict {
    let g = construct(LinearFunction::relaxed(0, 3), 15).map_err(|e| e.to_string())?;
    let blocks = components(&g);
    let sizes: Vec<u64> = blocks.iter().map(|b| b.end() - b.start() + 1).collect();
    ensure(sizes == [4, 4, 4, 3], || format!("block sizes {sizes:?}"))?;
    let mut expected = 1;
    for b in &blocks {
        ensure(*b.start() == expected, || format!("block {b:?} is not consecutive"))?;
        expected = b.end() + 1;
        for i in b.clone() {
            for j in i + 1..=*b.end() {
                ensure(g.has_arc(i, j).unwrap(), || {
                    format!("missing arc ({i}, {j}) in block {b:?}")
                })?;
            }
        }
    }
    ensure(edge_count(&g) == 21, || format!("{} arcs, expected 21", edge_count(&g)))?;
    Ok("K4 + K4 + K4 + K3".into())
}

fn bettina() -> Verdict {
    const N: u64 = 100_000;
    let start = Instant::now();
    let g = construct(LinearFunction::identity(), N).map_err(|e| e.to_string())?;
    for n in 1..=N {
        let (formula, built) = (
            bettina_dplus(n).map_err(|e| e.to_string())?,
            g.infinite_out_degree(n).unwrap(),
        );
        ensure(formula == built, || {
            format!("n = {n}: Zeckendorf {formula}, constructed {built}")
        })?;
    }
    let claim = check("thm-3.7", &Grid::default().with_seq_n(1..=N)).map_err(|e| e.to_string())?;
    ensure(claim.status == ClaimStatus::VerifiedOnGrid, || {
        format!("claim status {}", claim.status)
    })?;
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("n <= {N}"))
}

fn lemma_one_one() -> Verdict {
    let start = Instant::now();
    let grid = Grid::default().with_n(1..=2000);
    let mut points = 0;
    for id in ["lemma-1.1a", "lemma-1.1b", "lemma-1.1c", "lemma-1.1d-corrected"] {
        let r = check(id, &grid).map_err(|e| e.to_string())?;
        ensure(r.status == ClaimStatus::VerifiedOnGrid, || {
            format!(
                "{id}: {} {:?}",
                r.status,
                r.witnesses.first().map(ToString::to_string).or(r.reason.clone())
            )
        })?;
        points += r.grid.points_checked;
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("(a)-(d) on m 1..5, c 0..5, n <= 2000 ({points} points)"))
}

fn oracle_equivalence() -> Verdict {
    for m in 0..=5 {
        for c in 0..=5 {
            let func = LinearFunction::relaxed(m, c);
            let full = construct(func, 500).map_err(|e| e.to_string())?;
            for n in 1..=500 {
                let naive = construct_naive(func, n).map_err(|e| e.to_string())?;
                let fast = construct(func, n).map_err(|e| e.to_string())?;
                ensure(fast == naive, || format!("m = {m}, c = {c}, n = {n}"))?;
                ensure(full.truncate(n).unwrap() == naive, || {
                    format!("prefix m = {m}, c = {c}, n = {n}")
                })?;
            }
        }
    }
    Ok("m 0..5, c 0..5, every n <= 500".into())
}

fn unique_jaconian() -> Verdict {
    let x = smallest_unique_jaconian(f(1, 0), 100).map_err(|e| e.to_string())?;
    let x1 = smallest_unique_jaconian(f(1, 1), 100).map_err(|e| e.to_string())?;
    ensure(x == Some((3, 2)) && x1 == Some((5, 3)), || {
        format!("x -> {x:?}, x+1 -> {x1:?}")
    })?;
    let general = check("thm-2.6", &Grid::default()).map_err(|e| e.to_string())?;
    Ok(format!(
        "(3, v2) and (5, v3); general grid recorded as {}",
        general.status
    ))
}

fn discrepancy() -> Verdict {
    let g = construct_naive(f(2, 1), 4).map_err(|e| e.to_string())?;
    let actual = g.infinite_out_degree(4).unwrap();
    ensure(actual == 6, || format!("constructed out-degree of v4 is {actual}"))?;
    let grid = Grid {
        m: 2..=2,
        c: 1..=1,
        n: 1..=10,
        ..Grid::default()
    };
    let r = check("lemma-1.1d-printed", &grid).map_err(|e| e.to_string())?;
    let hit = r
        .witnesses
        .iter()
        .any(|w| (w.m, w.c, w.n) == (2, 1, 4) && w.expected == Observed::Int(7) && w.actual == Observed::Int(6));
    ensure(r.status == ClaimStatus::Counterexample && hit, || {
        format!("status {}, witnesses {:?}", r.status, r.witnesses)
    })?;
    Ok("witness (2, 1, 4): expected 7, actual 6".into())
}

fn completeness() -> Verdict {
    let grid = Grid::default();
    let first = verify_all(&grid);
    let second = verify_all(&grid);
    ensure(first == second, || "two runs differ".into())?;
    let ids: Vec<&str> = first.iter().map(|r| r.id.as_str()).collect();
    let expected: Vec<&str> = registry().iter().map(|c| c.id).collect();
    ensure(ids == expected, || "report ids differ from the registry".into())?;
    ensure(ids.len() >= 25, || format!("only {} claims", ids.len()))?;
    let count = |s: ClaimStatus| first.iter().filter(|r| r.status == s).count();
    Ok(format!(
        "{} claims: {} verified, {} counterexample, {} not applicable",
        ids.len(),
        count(ClaimStatus::VerifiedOnGrid),
        count(ClaimStatus::Counterexample),
        count(ClaimStatus::NotApplicable)
    ))
}

fn inference_round_trip() -> Verdict {
    let mut unique = 0;
    let mut ambiguous = 0;
    for m in 1..=5 {
        for c in 0..=5 {
            let func = f(m, c);
            let full = construct(func, 300).map_err(|e| e.to_string())?;
            for n in 1..=300 {
                let g = full.truncate(n).unwrap();
                let arcs: Vec<(u64, u64)> = g.arcs().collect();
                let r = infer(&arcs, n).map_err(|e| e.to_string())?;
                if n <= func.eval(1) + 1 {
                    ensure(r.status == InferenceStatus::Ambiguous && r.validation, || {
                        format!("K_{n} for {func}: {:?}", r.status)
                    })?;
                    ambiguous += 1;
                } else if n > func.eval(2) {
                    ensure(
                        r.status == InferenceStatus::Unique && r.m == Some(m) && r.c == Some(c) && r.validation,
                        || format!("{func}, n = {n}: {:?} m={:?} c={:?}", r.status, r.m, r.c),
                    )?;
                    unique += 1;
                }
            }
        }
    }
    Ok(format!(
        "{unique} unique recoveries, {ambiguous} complete graphs ambiguous"
    ))
}

fn performance() -> Verdict {
    const N: u64 = 10_000_000;
    let start = Instant::now();
    let g = construct(f(2, 1), N).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let bytes = g.heap_bytes();
    ensure(bytes as u64 <= 16 * N + 4096, || {
        format!("{bytes} heap bytes for {N} vertices")
    })?;
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("{N} vertices in {elapsed:.2?}, {} MiB", bytes >> 20))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("illustration-1", illustration_one),
        ("illustration-2", illustration_two),
        ("illustration-3", illustration_three),
        ("bettina-theorem", bettina),
        ("lemma-1.1-suite", lemma_one_one),
        ("oracle-equivalence", oracle_equivalence),
        ("unique-jaconian-spot-checks", unique_jaconian),
        ("printed-recursion-discrepancy", discrepancy),
        ("claim-report-completeness", completeness),
        ("inference-round-trip", inference_round_trip),
        ("construction-performance", performance),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        match verdict {
            Ok(note) => println!("PASS {:>2} {name} ({elapsed:.2?}) {note}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}) {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
