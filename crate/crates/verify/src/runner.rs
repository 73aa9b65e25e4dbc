use std::ops::RangeInclusive;

use rayon::prelude::*;

use jaco_core::LinearFunction;

use crate::claims::{registry, Claim, Domain, Scale};
use crate::context::{Context, NAIVE_LIMIT};
use crate::grid::Grid;
use crate::report::{ClaimResult, ClaimStatus, GridSummary, Recorder};
use crate::VerifyError;

/// Evaluates one claim on `grid`.
pub fn check(id: &str, grid: &Grid) -> Result<ClaimResult, VerifyError> {
    let claim = registry()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| VerifyError::UnknownClaim(id.to_owned()))?;
    run(&claim, grid)
}

/// Every registered claim on `grid`, ordered by id. Claims over the cost
/// bound come back as not applicable.
pub fn verify_all(grid: &Grid) -> Vec<ClaimResult> {
    verify_selected(grid, |_| true)
}

/// Like [`verify_all`], restricted to the ids accepted by `select`.
pub fn verify_selected(grid: &Grid, select: impl Fn(&str) -> bool + Sync) -> Vec<ClaimResult> {
    let claims: Vec<Claim> = registry().into_iter().filter(|c| select(c.id)).collect();
    claims
        .par_iter()
        .map(|claim| match run(claim, grid) {
            Ok(result) => result,
            Err(err) => skipped(claim, grid, err.to_string()),
        })
        .collect()
}

fn index_range(claim: &Claim, grid: &Grid) -> RangeInclusive<u64> {
    match claim.scale {
        Scale::Graph => grid.n.clone(),
        Scale::Sequence => grid.seq_n.clone(),
    }
}

fn functions(claim: &Claim, grid: &Grid) -> Vec<LinearFunction> {
    let mut slopes: Vec<u64> = match claim.domain {
        Domain::Positive => grid.m.clone().filter(|&m| m >= 1).collect(),
        Domain::Constant => vec![0],
        Domain::Any => std::iter::once(0).chain(grid.m.clone()).collect(),
    };
    slopes.sort_unstable();
    slopes.dedup();
    let mut out = Vec::new();
    for m in slopes {
        for c in grid.c.clone() {
            if claim.applies(m, c) {
                out.push(LinearFunction::relaxed(m, c));
            }
        }
    }
    out
}

/// Rough count of elementary steps: the quadratic construction dominates.
fn estimated_cost(claim: &Claim, fs: &[LinearFunction], range: &RangeInclusive<u64>) -> u128 {
    let hi = *range.end() as u128;
    fs.iter()
        .map(|f| {
            let size = match claim.scale {
                Scale::Graph => hi * (f.m() as u128 + 1) + f.c() as u128 + 1,
                Scale::Sequence => 2 * hi + 2,
            };
            let quadratic = size.min(NAIVE_LIMIT as u128);
            quadratic * quadratic + size
        })
        .sum()
}

fn summary(fs: &[LinearFunction], range: &RangeInclusive<u64>) -> GridSummary {
    GridSummary {
        functions: fs.iter().map(|f| (f.m(), f.c())).collect(),
        n: (*range.start(), *range.end()),
        points_checked: 0,
        failures: 0,
    }
}

fn skipped(claim: &Claim, grid: &Grid, reason: String) -> ClaimResult {
    let range = index_range(claim, grid);
    ClaimResult {
        id: claim.id.to_owned(),
        anchors: claim.anchors.iter().map(|a| (*a).to_owned()).collect(),
        statement: claim.statement.to_owned(),
        report_only: claim.report_only,
        grid: summary(&functions(claim, grid), &range),
        status: ClaimStatus::NotApplicable,
        reason: Some(reason),
        witnesses: Vec::new(),
    }
}

fn run(claim: &Claim, grid: &Grid) -> Result<ClaimResult, VerifyError> {
    let range = index_range(claim, grid);
    let fs = functions(claim, grid);
    let cost = estimated_cost(claim, &fs, &range);
    if cost > grid.cost_bound {
        return Err(VerifyError::CostExceeded {
            id: claim.id.to_owned(),
            cost,
            bound: grid.cost_bound,
        });
    }
    let cap = grid.witness_cap.max(1);
    let outcomes: Vec<(Recorder, Result<(), String>)> = fs
        .par_iter()
        .map(|&f| {
            let mut rec = Recorder::new(f.m(), f.c(), cap);
            let mut ctx = Context::new(f);
            let outcome = claim.evaluate(&mut ctx, &range, &mut rec);
            (rec, outcome)
        })
        .collect();

    let mut result = skipped(claim, grid, String::new());
    result.reason = None;
    let mut error = None;
    for (f, (rec, outcome)) in fs.iter().zip(outcomes) {
        result.grid.points_checked += rec.points;
        result.grid.failures += rec.failures;
        for w in rec.witnesses {
            if result.witnesses.len() < cap {
                result.witnesses.push(w);
            }
        }
        if let (None, Err(e)) = (&error, outcome) {
            error = Some(format!("m={}, c={}: {e}", f.m(), f.c()));
        }
    }
    if let Some(reason) = error {
        result.status = ClaimStatus::NotApplicable;
        result.reason = Some(reason);
        result.witnesses.clear();
    } else if result.grid.failures > 0 {
        result.status = ClaimStatus::Counterexample;
    } else if result.grid.points_checked == 0 {
        result.status = ClaimStatus::NotApplicable;
        result.reason = Some(format!(
            "no grid point where the statement applies ({})",
            claim.applicability
        ));
    } else {
        result.status = ClaimStatus::VerifiedOnGrid;
    }
    Ok(result)
}
