use std::collections::BTreeSet;

use jaco_core::{construct_naive, LinearFunction};
use jaco_verify::{check, registry, verify_all, verify_selected, ClaimStatus, Grid, Observed, VerifyError};

/// Labels of every statement the registry is expected to cover.
const IN_SCOPE: &[&str] = &[
    "Definition 1.1",
    "Definition 1.2",
    "Lemma 1.1(a)",
    "Lemma 1.1(b)",
    "Lemma 1.1(c)",
    "Lemma 1.1(d)",
    "Corollary 1.2",
    "Proposition 1.3",
    "Definition 2.1",
    "Definition 2.2",
    "Definition 2.3",
    "Definition 2.4",
    "Property 1",
    "Property 2",
    "Property 3",
    "Property 4",
    "Illustration 1",
    "Lemma 2.1",
    "Proposition 2.2",
    "Lemma 2.3",
    "Lemma 2.4",
    "Proposition 2.5",
    "Proposition 2.5 (closing note)",
    "Theorem 2.6",
    "Proposition 3.1",
    "Theorem 3.2",
    "Corollary 3.3",
    "Lemma 3.4",
    "Corollary 3.5",
    "Lemma 3.6",
    "Theorem 3.7",
    "Theorem 3.7 (arc count)",
    "Illustration 2",
    "Theorem 3.8",
    "Section 3.1 (inference)",
    "Proposition 3.9",
    "Section 3.1 (f-related graphs)",
    "Section 3.1 (complete graphs)",
    "Section 3.1 (m = 0 classes)",
    "Illustration 3",
];

fn small_grid() -> Grid {
    Grid {
        m: 1..=3,
        c: 0..=2,
        n: 1..=80,
        seq_n: 1..=300,
        ..Grid::default()
    }
}

#[test]
fn anchors_match_scope() {
    let anchors: BTreeSet<&str> = registry().iter().flat_map(|c| c.anchors.iter().copied()).collect();
    let scope: BTreeSet<&str> = IN_SCOPE.iter().copied().collect();
    assert_eq!(anchors, scope);
}

#[test]
fn every_claim_reported_once_in_id_order() {
    let results = verify_all(&small_grid());
    let ids: Vec<&str> = results.iter().map(|r| r.id.as_str()).collect();
    let expected: Vec<&str> = registry().iter().map(|c| c.id).collect();
    assert_eq!(ids, expected);
    for r in &results {
        assert_eq!(
            r.status == ClaimStatus::Counterexample,
            !r.witnesses.is_empty(),
            "{}",
            r.id
        );
        assert!(r.witnesses.len() <= 10);
        assert_eq!(r.status == ClaimStatus::NotApplicable, r.reason.is_some(), "{}", r.id);
    }
}

#[test]
fn reports_are_deterministic() {
    let a = serde_json::to_string(&verify_all(&small_grid())).unwrap();
    let b = serde_json::to_string(&verify_all(&small_grid())).unwrap();
    assert_eq!(a, b);
}

#[test]
fn witnesses_fail_again_in_isolation() {
    let grid = Grid {
        witness_cap: 3,
        ..small_grid()
    };
    let results = verify_all(&grid);
    let mut rechecked = 0;
    for r in results.iter().filter(|r| r.status == ClaimStatus::Counterexample) {
        for w in &r.witnesses {
            let alone = check(&r.id, &Grid::point(w.m, w.c, w.n)).unwrap();
            assert_eq!(alone.status, ClaimStatus::Counterexample, "{} at {w}", r.id);
            assert!(alone.witnesses.contains(w), "{} at {w}", r.id);
            rechecked += 1;
        }
    }
    assert!(rechecked > 10);
}

#[test]
fn printed_recursion_discrepancy() {
    let grid = Grid {
        m: 2..=2,
        c: 1..=1,
        n: 1..=10,
        ..Grid::default()
    };
    let r = check("lemma-1.1d-printed", &grid).unwrap();
    assert_eq!(r.status, ClaimStatus::Counterexample);
    let w = r.witnesses.iter().find(|w| w.n == 4).expect("witness at n = 4");
    assert_eq!(
        (w.m, w.c, w.expected.clone(), w.actual.clone()),
        (2, 1, Observed::Int(7), Observed::Int(6))
    );
    // The construction itself: v_4 reaches v_10.
    let g = construct_naive(LinearFunction::new(2, 1).unwrap(), 4).unwrap();
    assert_eq!(g.infinite_out_degree(4).unwrap(), 6);

    let corrected = check("lemma-1.1d-corrected", &grid).unwrap();
    assert_eq!(corrected.status, ClaimStatus::VerifiedOnGrid);
}

#[test]
fn bettina_on_long_range() {
    let grid = Grid::default().with_seq_n(1..=10_000);
    let r = check("thm-3.7", &grid).unwrap();
    assert_eq!(r.status, ClaimStatus::VerifiedOnGrid);
    assert_eq!(r.grid.functions, vec![(1, 0)]);
    assert_eq!(r.grid.points_checked, 10_000);
}

#[test]
fn complete_prefixes() {
    let r = check("lemma-2.1", &Grid::default()).unwrap();
    assert_eq!(r.status, ClaimStatus::VerifiedOnGrid);
    assert_eq!(r.grid.functions.len(), 30);
}

#[test]
fn arc_count_theorem_values() {
    let grid = Grid {
        m: 2..=2,
        c: 1..=1,
        ..Grid::default()
    };
    let main = check("thm-3.8-main", &grid).unwrap();
    let alt = check("thm-3.8-alt", &grid).unwrap();
    for (r, formula) in [(&main, 27), (&alt, 22)] {
        assert_eq!(r.status, ClaimStatus::Counterexample);
        assert_eq!(r.witnesses[0].n, 10);
        assert_eq!(r.witnesses[0].expected, Observed::Int(formula));
        assert_eq!(r.witnesses[0].actual, Observed::Int(33));
    }
}

#[test]
fn suspect_statements_recorded() {
    let results = verify_all(&Grid::default());
    let status = |id: &str| results.iter().find(|r| r.id == id).unwrap().status;
    for id in [
        "lemma-1.1a",
        "lemma-1.1b",
        "lemma-1.1c",
        "lemma-1.1d-corrected",
        "thm-3.7",
        "illus-1",
        "illus-2",
        "illus-3",
    ] {
        assert_eq!(status(id), ClaimStatus::VerifiedOnGrid, "{id}");
    }
    for id in [
        "lemma-1.1d-printed",
        "prop-2.2",
        "prop-2.2-set",
        "thm-3.8-main",
        "thm-3.8-alt",
    ] {
        assert_eq!(status(id), ClaimStatus::Counterexample, "{id}");
    }
}

#[test]
fn constant_function_claims_use_zero_slope() {
    let r = check("illus-3", &Grid::default()).unwrap();
    assert_eq!(r.grid.functions, vec![(0, 3)]);
    assert_eq!(r.status, ClaimStatus::VerifiedOnGrid);
    let blocks = check("sec-3.1-m0-blocks", &Grid::default()).unwrap();
    assert_eq!(blocks.grid.functions.len(), 6);
    assert_eq!(blocks.status, ClaimStatus::VerifiedOnGrid);
}

#[test]
fn empty_sub_grid_is_not_applicable() {
    let grid = Grid {
        m: 2..=3,
        ..Grid::default()
    };
    let r = check("thm-3.7", &grid).unwrap();
    assert_eq!(r.status, ClaimStatus::NotApplicable);
    assert!(r.witnesses.is_empty());
}

#[test]
fn errors() {
    assert_eq!(
        check("lemma-9.9", &Grid::default()).unwrap_err(),
        VerifyError::UnknownClaim("lemma-9.9".into())
    );
    let greedy = Grid {
        n: 1..=5_000,
        cost_bound: 1_000_000,
        ..Grid::default()
    };
    assert!(matches!(
        check("lemma-1.1b", &greedy),
        Err(VerifyError::CostExceeded { .. })
    ));
    let results = verify_selected(&greedy, |id| id == "lemma-1.1b");
    assert_eq!(results.len(), 1);
    assert_eq!(results[0].status, ClaimStatus::NotApplicable);
    assert!(results[0].reason.as_deref().unwrap().contains("bound"));
}
