//! Small named algebras used by tests, benches and the CLI.

use crate::algebra::{AlgebraDocument, ArrowSpec, MonomialAlgebra};

fn doc(vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[&[&str]]) -> AlgebraDocument {
    AlgebraDocument {
        vertices: vertices.iter().map(|v| v.to_string()).collect(),
        arrows: arrows.iter().map(|&(a, s, t)| ArrowSpec::new(a, s, t)).collect(),
        relations: relations.iter().map(|r| r.iter().map(|a| a.to_string()).collect()).collect(),
        arrow_degrees: None,
    }
}

fn build(d: &AlgebraDocument) -> MonomialAlgebra {
    MonomialAlgebra::from_document(d).expect("fixture is admissible")
}

/// A 3-cycle `a1 a2 a3` and a 2-cycle `a4 a5` joined by `b2`, with one long relation on
/// each cycle.
pub fn lambda_star_document() -> AlgebraDocument {
    let c = ["a1", "a2", "a3"];
    let r1: Vec<&str> = c.iter().cycle().take(8).copied().collect();
    let r2: Vec<&str> = c.iter().cycle().skip(2).take(7).copied().collect();
    let r3: Vec<&str> = ["a4", "a5"].iter().cycle().take(8).copied().collect();
    doc(
        &["1", "2", "3", "4", "5"],
        &[
            ("a1", "1", "2"),
            ("a2", "2", "3"),
            ("a3", "3", "1"),
            ("b2", "2", "4"),
            ("a4", "4", "5"),
            ("a5", "5", "4"),
        ],
        &[&r1, &r2, &r3],
    )
}

pub fn lambda_star() -> MonomialAlgebra {
    build(&lambda_star_document())
}

/// One loop `x` with `x^(m+1) = 0`.
pub fn loop_algebra(m: usize) -> MonomialAlgebra {
    assert!(m >= 1);
    let rel = vec!["x"; m + 1];
    build(&doc(&["1"], &[("x", "1", "1")], &[&rel]))
}

/// Cyclic quiver on `n` vertices (arrows `x1..xn`, `xk: k -> k+1`) with every path of
/// length `m + 1` as a relation.
pub fn nakayama_document(n: usize, m: usize) -> AlgebraDocument {
    assert!(n >= 1 && m >= 1);
    let vertices: Vec<String> = (1..=n).map(|k| k.to_string()).collect();
    let arrows: Vec<ArrowSpec> =
        (1..=n).map(|k| ArrowSpec::new(format!("x{k}"), k.to_string(), (k % n + 1).to_string())).collect();
    let relations =
        (0..n).map(|start| (0..=m).map(|off| format!("x{}", (start + off) % n + 1)).collect()).collect();
    AlgebraDocument { vertices, arrows, relations, arrow_degrees: None }
}

pub fn nakayama(n: usize, m: usize) -> MonomialAlgebra {
    build(&nakayama_document(n, m))
}

/// `1 -a-> 2`, no relations.
pub fn a2() -> MonomialAlgebra {
    build(&doc(&["1", "2"], &[("a", "1", "2")], &[]))
}

/// Quadratic monomial algebra: a 2-cycle `a b` with `ab = ba = 0` and a tail `c`.
pub fn quadratic_document() -> AlgebraDocument {
    doc(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "1"), ("c", "2", "3")], &[&["a", "b"], &["b", "a"]])
}

pub fn quadratic() -> MonomialAlgebra {
    build(&quadratic_document())
}

/// Every named fixture, for suites that sweep them all.
pub fn all() -> Vec<(String, MonomialAlgebra)> {
    let mut out = vec![
        ("lambda_star".to_string(), lambda_star()),
        ("a2".to_string(), a2()),
        ("quadratic".to_string(), quadratic()),
    ];
    for m in 1..=4 {
        out.push((format!("loop_{m}"), loop_algebra(m)));
    }
    for n in 1..=4 {
        for m in 1..=4 {
            out.push((format!("nakayama_{n}_{m}"), nakayama(n, m)));
        }
    }
    out
}
