//! The two divisibility orders on perfect paths, their Hasse quivers, elementary and
//! co-elementary paths, and co-elementary factorization.

use std::fmt;

use serde::Serialize;

use crate::error::ConsistencyError;
use crate::path::Path;
use crate::perfect::PerfectPaths;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PathOrder {
    /// `p ⪯ q` iff `p` is a left divisor of `q`.
    Prec,
    /// `p ≤ q` iff `q` is a right divisor of `p`.
    Leq,
}

impl fmt::Display for PathOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathOrder::Prec => "prec",
            PathOrder::Leq => "leq",
        })
    }
}

/// Result of [`order_compare`]; `Less` means `p` is strictly below `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Comparison {
    Incomparable,
    Equal,
    Less,
    Greater,
}

fn below(p: &Path, q: &Path, order: PathOrder) -> bool {
    match order {
        PathOrder::Prec => p.is_left_divisor_of(q),
        PathOrder::Leq => q.is_right_divisor_of(p),
    }
}

pub fn order_compare(p: &Path, q: &Path, order: PathOrder) -> Comparison {
    match (p == q, below(p, q, order), below(q, p, order)) {
        (true, _, _) => Comparison::Equal,
        (false, true, _) => Comparison::Less,
        (false, _, true) => Comparison::Greater,
        _ => Comparison::Incomparable,
    }
}

/// Covering relations of an order on the perfect paths. An arrow `(q, p)` runs from
/// `q` down to `p` when `p` is covered by `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseQuiver {
    pub order: PathOrder,
    pub vertices: Vec<Path>,
    pub arrows: Vec<(Path, Path)>,
}

impl HasseQuiver {
    pub fn in_degree(&self, v: &Path) -> usize {
        self.arrows.iter().filter(|(_, t)| t == v).count()
    }

    pub fn out_degree(&self, v: &Path) -> usize {
        self.arrows.iter().filter(|(s, _)| s == v).count()
    }

    pub fn sources(&self) -> Vec<Path> {
        self.vertices.iter().filter(|v| self.in_degree(v) == 0).cloned().collect()
    }

    pub fn sinks(&self) -> Vec<Path> {
        self.vertices.iter().filter(|v| self.out_degree(v) == 0).cloned().collect()
    }

    fn next(&self, v: &Path) -> Option<&Path> {
        self.arrows.iter().find(|(s, _)| s == v).map(|(_, t)| t)
    }

    /// Each linear component read from its source along the arrows, in order of sources.
    pub fn components(&self) -> Vec<Vec<Path>> {
        self.sources()
            .into_iter()
            .map(|s| {
                let mut chain = vec![s];
                while let Some(t) = self.next(chain.last().unwrap()) {
                    chain.push(t.clone());
                }
                chain
            })
            .collect()
    }
}

pub fn hasse_quiver(perfect: &PerfectPaths, order: PathOrder) -> Result<HasseQuiver, ConsistencyError> {
    let vertices: Vec<Path> = perfect.paths().cloned().collect();
    let lt = |a: &Path, b: &Path| a != b && below(a, b, order);
    let mut arrows = Vec::new();
    for q in &vertices {
        for p in &vertices {
            if lt(p, q) && !vertices.iter().any(|r| lt(p, r) && lt(r, q)) {
                arrows.push((q.clone(), p.clone()));
            }
        }
    }
    arrows.sort();
    let hq = HasseQuiver { order, vertices, arrows };
    for v in &hq.vertices {
        if hq.in_degree(v) > 1 || hq.out_degree(v) > 1 {
            return Err(ConsistencyError(format!(
                "Hasse quiver ({order}) has a vertex of degree > 1 at arrow sequence {:?}",
                v.arrows()
            )));
        }
    }
    Ok(hq)
}

/// Elementary paths (`E`) and co-elementary paths (`E^co`), both in path order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementaryPaths {
    pub elementary: Vec<Path>,
    pub coelementary: Vec<Path>,
}

/// Sources and sinks of `H(⪯)`, cross-checked against the sinks and sources of `H(≤)`.
pub fn classify_elementary(
    prec: &HasseQuiver,
    leq: &HasseQuiver,
) -> Result<ElementaryPaths, ConsistencyError> {
    let elementary = prec.sources();
    let coelementary = prec.sinks();
    if elementary != leq.sinks() || coelementary != leq.sources() {
        return Err(ConsistencyError("elementary paths disagree between the two Hasse quivers".into()));
    }
    Ok(ElementaryPaths { elementary, coelementary })
}

/// Peels the co-elementary left divisor off `p` until nothing remains.
pub fn coelementary_factorization(coelementary: &[Path], p: &Path) -> Result<Vec<Path>, ConsistencyError> {
    let mut factors = Vec::new();
    let mut rest = p.clone();
    while !rest.is_trivial() {
        let mut divisors = coelementary.iter().filter(|r| r.is_left_divisor_of(&rest));
        let r = divisors.next().ok_or_else(|| {
            ConsistencyError(format!("no co-elementary left divisor of {:?}", rest.arrows()))
        })?;
        if divisors.next().is_some() {
            return Err(ConsistencyError(format!("two co-elementary left divisors of {:?}", rest.arrows())));
        }
        rest = rest.slice(r.len(), rest.len());
        factors.push(r.clone());
    }
    if factors.is_empty() {
        return Err(ConsistencyError("factorization of a trivial path".into()));
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::perfect::enumerate_perfect_paths;

    fn chains(alg: &crate::MonomialAlgebra, h: &HasseQuiver) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> =
            h.components().iter().map(|c| c.iter().map(|p| alg.format(p)).collect()).collect();
        out.sort();
        out
    }

    #[test]
    fn compare_examples() {
        let alg = fixtures::lambda_star();
        let p = |s: &str| alg.parse_path(s).unwrap();
        assert_eq!(order_compare(&p("a1.a2"), &p("a1.a2.a3"), PathOrder::Prec), Comparison::Less);
        assert_eq!(order_compare(&p("a1.a2.a3.a1.a2"), &p("a3.a1.a2"), PathOrder::Leq), Comparison::Less);
        assert_eq!(order_compare(&p("a3"), &p("a3"), PathOrder::Leq), Comparison::Equal);
        assert_eq!(order_compare(&p("a3"), &p("a4.a5"), PathOrder::Prec), Comparison::Incomparable);
    }

    #[test]
    fn lambda_star_hasse_quivers() {
        let alg = fixtures::lambda_star();
        let pp = enumerate_perfect_paths(&alg);
        let prec = hasse_quiver(&pp, PathOrder::Prec).unwrap();
        assert_eq!(
            chains(&alg, &prec),
            vec![
                vec!["a1.a2.a3.a1.a2.a3", "a1.a2.a3.a1.a2", "a1.a2.a3", "a1.a2"],
                vec!["a3.a1.a2.a3.a1.a2", "a3.a1.a2.a3", "a3.a1.a2", "a3"],
                vec!["a4.a5.a4.a5.a4.a5", "a4.a5.a4.a5", "a4.a5"],
            ]
        );
        let leq = hasse_quiver(&pp, PathOrder::Leq).unwrap();
        assert_eq!(
            chains(&alg, &leq),
            vec![
                vec!["a1.a2", "a3.a1.a2", "a1.a2.a3.a1.a2", "a3.a1.a2.a3.a1.a2"],
                vec!["a3", "a1.a2.a3", "a3.a1.a2.a3", "a1.a2.a3.a1.a2.a3"],
                vec!["a4.a5", "a4.a5.a4.a5", "a4.a5.a4.a5.a4.a5"],
            ]
        );
        let el = classify_elementary(&prec, &leq).unwrap();
        let f = |v: &[Path]| v.iter().map(|p| alg.format(p)).collect::<Vec<_>>();
        assert_eq!(f(&el.elementary), ["a1.a2.a3.a1.a2.a3", "a3.a1.a2.a3.a1.a2", "a4.a5.a4.a5.a4.a5"]);
        assert_eq!(f(&el.coelementary), ["a3", "a1.a2", "a4.a5"]);

        let fac = coelementary_factorization(&el.coelementary, &alg.parse_path("a1.a2.a3.a1.a2.a3").unwrap())
            .unwrap();
        assert_eq!(f(&fac), ["a1.a2", "a3", "a1.a2", "a3"]);
    }

    #[test]
    fn single_loop_perfect_path_has_no_hasse_arrows() {
        let alg = fixtures::loop_algebra(1);
        let pp = enumerate_perfect_paths(&alg);
        let h = hasse_quiver(&pp, PathOrder::Prec).unwrap();
        assert_eq!(h.vertices.len(), 1);
        assert!(h.arrows.is_empty());
    }

    #[test]
    fn loop_elementary_and_factorization() {
        let alg = fixtures::loop_algebra(3);
        let pp = enumerate_perfect_paths(&alg);
        let el = classify_elementary(
            &hasse_quiver(&pp, PathOrder::Prec).unwrap(),
            &hasse_quiver(&pp, PathOrder::Leq).unwrap(),
        )
        .unwrap();
        assert_eq!(el.elementary, vec![alg.parse_path("x.x.x").unwrap()]);
        assert_eq!(el.coelementary, vec![alg.parse_path("x").unwrap()]);
        let fac = coelementary_factorization(&el.coelementary, &el.elementary[0]).unwrap();
        assert_eq!(fac.len(), 3);
    }
}
