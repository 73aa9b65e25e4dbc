//! Text formats for graphs, and the edge-list reader.

use std::fmt::Write;

use jaco_core::JacoGraph;

use crate::error::CliError;

/// `i j` per arc, ascending, newline-terminated, no header.
pub fn edge_list(g: &JacoGraph) -> String {
    let mut out = String::new();
    for (i, j) in g.arcs() {
        writeln!(out, "{i} {j}").unwrap();
    }
    out
}

pub fn dot(g: &JacoGraph) -> String {
    let mut out = format!("digraph \"J_{}({})\" {{\n", g.n(), g.function());
    for v in 1..=g.n() {
        writeln!(out, "  v{v};").unwrap();
    }
    for (i, j) in g.arcs() {
        writeln!(out, "  v{i} -> v{j};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn csv_degrees(g: &JacoGraph) -> String {
    let mut out = String::from("vertex,in_degree,out_degree,degree,reach\n");
    for i in 1..=g.n() {
        let d = g.degrees(i).expect("vertex in range");
        writeln!(
            out,
            "{i},{},{},{},{}",
            d.in_degree,
            d.out_degree,
            d.underlying,
            g.reach(i).unwrap()
        )
        .unwrap();
    }
    out
}

/// Reads `i j` lines; blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Vec<(u64, u64)>, CliError> {
    let mut arcs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || {
            CliError::Usage(format!(
                "line {}: expected two vertex numbers, got `{line}`",
                lineno + 1
            ))
        };
        let mut parts = line.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad());
        };
        arcs.push((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?));
    }
    Ok(arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use jaco_core::{construct, LinearFunction};

    #[test]
    fn formats() {
        let g = construct(LinearFunction::identity(), 3).unwrap();
        assert_eq!(edge_list(&g), "1 2\n2 3\n");
        assert_eq!(
            dot(&g),
            "digraph \"J_3(x)\" {\n  v1;\n  v2;\n  v3;\n  v1 -> v2;\n  v2 -> v3;\n}\n"
        );
        assert_eq!(
            csv_degrees(&g),
            "vertex,in_degree,out_degree,degree,reach\n1,0,1,1,2\n2,1,1,2,3\n3,1,0,1,5\n"
        );
    }

    #[test]
    fn edge_list_parsing() {
        assert_eq!(
            parse_edge_list("1 2\n\n# note\n2 3 # tail\n").unwrap(),
            vec![(1, 2), (2, 3)]
        );
        assert!(parse_edge_list("1 2 3\n").is_err());
        assert!(parse_edge_list("1 x\n").is_err());
    }
}
