use jaco_core::{construct, naive_trace, LinearFunction};
use jaco_invariants::{
    analyze, analyze_prefix, components, delta_series, edge_count, edge_count_recursive, prefix_summaries,
};

fn graph_functions() -> impl Iterator<Item = LinearFunction> {
    (1..=5).flat_map(|m| (0..=5).map(move |c| LinearFunction::new(m, c).unwrap()))
}

#[test]
fn delta_never_decreases() {
    for f in graph_functions() {
        let deltas = delta_series(f, 500).unwrap();
        assert!(deltas.windows(2).all(|w| w[0] <= w[1]), "f = {f}");
    }
}

#[test]
fn delta_series_matches_naive_degrees() {
    for f in graph_functions() {
        let deltas = delta_series(f, 150).unwrap();
        for n in 1..=150u64 {
            let t = naive_trace(f, n).unwrap();
            let max = t.degrees().into_iter().max().unwrap();
            assert_eq!(deltas[n as usize - 1], max, "f = {f}, n = {n}");
        }
    }
}

#[test]
fn saturated_prime_implies_saturated_prefix() {
    for f in graph_functions() {
        let g = construct(f, 400).unwrap();
        for n in 1..=400 {
            let r = analyze_prefix(&g, n);
            let p = r.prime_jaconian;
            let deg = |i: u64| {
                let prefix = g.truncate(n).unwrap();
                prefix.degrees(i).unwrap().underlying
            };
            if deg(p) == f.eval(p) {
                for q in 1..=p {
                    assert_eq!(deg(q), f.eval(q), "f = {f}, n = {n}, q = {q}");
                }
            }
        }
    }
}

#[test]
fn report_fields_are_consistent() {
    for f in graph_functions() {
        for n in [1, 2, 5, 40, 333] {
            let g = construct(f, n).unwrap();
            let r = analyze(&g);
            let degrees = g.degree_sequence();
            assert_eq!(r.delta, *degrees.iter().max().unwrap());
            assert_eq!(r.prime_jaconian, r.jaconian_set[0]);
            assert!(r.jaconian_set.iter().all(|&v| degrees[v as usize - 1] == r.delta));
            assert_eq!(r.edge_count, edge_count(&g));
            assert_eq!(r.edge_count, g.arcs().count() as u64);
        }
    }
}

#[test]
fn hope_completeness_agrees_with_pairwise_adjacency() {
    for f in graph_functions() {
        for n in [3, 11, 27, 64] {
            let g = construct(f, n).unwrap();
            let r = analyze(&g);
            let pairwise = r
                .hope_vertices
                .clone()
                .all(|i| (i + 1..=n).all(|j| g.has_arc(i, j).unwrap()));
            assert_eq!(r.hope_is_complete, pairwise, "f = {f}, n = {n}");
        }
    }
}

#[test]
fn illustration_one_hope_subgraph_is_k7() {
    let g = construct(LinearFunction::new(2, 1).unwrap(), 11).unwrap();
    let r = analyze(&g);
    assert_eq!(r.hope_vertices.clone().count(), 7);
    for i in 5..=11 {
        for j in i + 1..=11 {
            assert!(g.has_arc(i, j).unwrap());
        }
    }
}

#[test]
fn recursive_edge_counts_match_direct_counts() {
    for m in 1..=5 {
        let f = LinearFunction::new(m, 0).unwrap();
        let rec = edge_count_recursive(f, 500).unwrap();
        for n in 1..=500u64 {
            let direct = naive_trace(f, n).unwrap().edge_count();
            assert_eq!(rec[n as usize - 1], direct, "m = {m}, n = {n}");
        }
    }
}

#[test]
fn small_mx_graphs_are_complete() {
    for m in 1..=6u64 {
        let f = LinearFunction::new(m, 0).unwrap();
        for l in 1..=m + 1 {
            assert_eq!(edge_count(&construct(f, l).unwrap()), l * (l - 1) / 2);
        }
    }
    assert_eq!(
        edge_count(&construct(LinearFunction::new(3, 0).unwrap(), 4).unwrap()),
        6
    );
}

#[test]
fn constant_functions_split_into_cliques() {
    for k in 0..=5u64 {
        let f = LinearFunction::relaxed(0, k);
        for n in 1..=60u64 {
            let g = construct(f, n).unwrap();
            let sizes: Vec<u64> = components(&g).iter().map(|b| b.end() - b.start() + 1).collect();
            let mut expected = vec![k + 1; (n / (k + 1)) as usize];
            if n % (k + 1) != 0 {
                expected.push(n % (k + 1));
            }
            assert_eq!(sizes, expected, "k = {k}, n = {n}");
            for block in components(&g) {
                for i in block.clone() {
                    for j in i + 1..=*block.end() {
                        assert!(g.has_arc(i, j).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn graphs_with_positive_slope_are_connected() {
    for f in graph_functions() {
        let g = construct(f, 300).unwrap();
        assert_eq!(components(&g), vec![1..=300]);
    }
}

#[test]
fn prefix_scan_agrees_with_full_reports() {
    for f in graph_functions() {
        let g = construct(f, 300).unwrap();
        for s in prefix_summaries(&g) {
            let r = analyze_prefix(&g, s.n);
            assert_eq!((s.delta, s.prime_jaconian), (r.delta, r.prime_jaconian));
        }
    }
}
