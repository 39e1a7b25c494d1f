//! The property suite: every closed form and structural claim checked against the
//! brute-force oracles on one algebra.

use serde::Serialize;

use crate::analysis::Analysis;
use crate::arquiver::full_ungraded_ar_quiver;
use crate::decomposition::cycle_predicates;
use crate::oracle::{bf_factorizations, bf_ses_dims, bf_stable_hom, bf_verify_perfect};
use crate::order::{coelementary_factorization, PathOrder};
use crate::path::Path;
use crate::perfect::{detect_overlap, is_perfect_pair, OverlapKind};
use crate::stable::{
    ar_translate, ar_translate_inverse, ar_triangle, end_algebra, graded_stable_hom, suspend,
    suspend_closed_form, tilting_orthogonality, ungraded_stable_hom, GradedObject, HomWitness,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Check {
    result: CheckResult,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check { result: CheckResult { name, cases: 0, failures: Vec::new() } }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.result.cases += 1;
        // a handful of failures is enough to diagnose
        if !ok && self.result.failures.len() < 8 {
            self.result.failures.push(what());
        }
    }
}

/// Names of every check, in the order [`verify_analysis`] reports them.
pub const CHECKS: &[&str] = &[
    "perfect-pairs-literal",
    "hasse-degree",
    "hasse-arrow-coelementary",
    "unique-factorization",
    "count-identity",
    "pair-in-relations",
    "ses-dimensions",
    "overlap-same-class",
    "coelementary-no-overlap",
    "no-overlap-equivalence",
    "overlap-quotient-perfect",
    "hom-oracle",
    "hom-overlap",
    "suspension",
    "tau-periodicity",
    "ar-mesh",
    "ar-quiver",
    "tilting",
    "cycle-predicates",
];

pub fn verify_analysis(an: &Analysis) -> Vec<CheckResult> {
    vec![
        perfect_pairs_literal(an),
        hasse_degree(an),
        hasse_arrow_coelementary(an),
        unique_factorization(an),
        count_identity(an),
        pair_in_relations(an),
        ses_dimensions(an),
        overlap_same_class(an),
        coelementary_no_overlap(an),
        no_overlap_equivalence(an),
        overlap_quotient_perfect(an),
        hom_oracle(an),
        hom_overlap(an),
        suspension(an),
        tau_periodicity(an),
        ar_mesh(an),
        ar_quiver(an),
        tilting(an),
        predicates(an),
    ]
}

fn perfect_pairs_literal(an: &Analysis) -> CheckResult {
    let alg = an.algebra();
    let mut c = Check::new("perfect-pairs-literal");
    for p in alg.basis().iter().filter(|p| !p.is_trivial()) {
        for q in alg.paths_from(p.target()).filter(|q| !q.is_trivial()) {
            if alg.multiply(p, q).is_some() {
                continue;
            }
            let fast = is_perfect_pair(alg, p, q);
            let slow = bf_verify_perfect(alg, p, q);
            c.expect(fast == slow, || {
                format!("({}, {}): {fast} vs oracle {slow}", an.format(p), an.format(q))
            });
        }
    }
    for r in &an.perfect().records {
        let ok = bf_verify_perfect(alg, &r.path, &r.successor);
        c.expect(ok, || {
            format!("({}, {}) recorded but not perfect", an.format(&r.path), an.format(&r.successor))
        });
    }
    c.result
}

fn hasse_degree(an: &Analysis) -> CheckResult {
    let mut c = Check::new("hasse-degree");
    for order in [PathOrder::Prec, PathOrder::Leq] {
        let h = an.hasse(order);
        for v in &h.vertices {
            let ok = h.in_degree(v) <= 1 && h.out_degree(v) <= 1;
            c.expect(ok, || format!("{order}: {}", an.format(v)));
        }
    }
    c.result
}

fn hasse_arrow_coelementary(an: &Analysis) -> CheckResult {
    let mut c = Check::new("hasse-arrow-coelementary");
    let coel = &an.elementary().coelementary;
    let h = an.hasse(PathOrder::Prec);
    let perfect: Vec<&Path> = an.perfect().paths().collect();
    for q in &perfect {
        for p in &perfect {
            if p == q || !p.is_left_divisor_of(q) {
                continue;
            }
            let r = q.slice(p.len(), q.len());
            let arrow = h.arrows.contains(&((*q).clone(), (*p).clone()));
            c.expect(arrow == coel.contains(&r), || {
                format!("{} -> {}: arrow {arrow}, complement {}", an.format(q), an.format(p), an.format(&r))
            });
        }
    }
    c.result
}

fn unique_factorization(an: &Analysis) -> CheckResult {
    let mut c = Check::new("unique-factorization");
    let coel = &an.elementary().coelementary;
    for p in an.perfect().paths() {
        let all = bf_factorizations(coel, p);
        let greedy = coelementary_factorization(coel, p).ok();
        let ok = all.len() == 1 && greedy.as_ref() == all.first();
        c.expect(ok, || format!("{}: {} factorizations", an.format(p), all.len()));
    }
    c.result
}

fn count_identity(an: &Analysis) -> CheckResult {
    let mut c = Check::new("count-identity");
    let total: usize = an.decompositions().iter().map(|d| d.m * d.n()).sum();
    c.expect(total == an.perfect().len(), || format!("Σ m_c|c| = {total}, |P| = {}", an.perfect().len()));
    let el = an.elementary();
    c.expect(el.elementary.len() == el.coelementary.len(), || "|E| ≠ |E^co|".into());
    for d in an.decompositions() {
        c.expect(d.elementary.len() == d.n() && d.coelementary.len() == d.n(), || {
            format!(
                "class {}: |X|, |Y|, |c| = {}, {}, {}",
                d.class,
                d.elementary.len(),
                d.coelementary.len(),
                d.n()
            )
        });
    }
    c.result
}

fn pair_in_relations(an: &Analysis) -> CheckResult {
    let mut c = Check::new("pair-in-relations");
    for r in &an.perfect().records {
        let pq = r.path.concat(&r.successor).expect("perfect pairs compose");
        c.expect(an.algebra().relation_index(&pq).is_some(), || an.format(&pq));
    }
    c.result
}

fn ses_dimensions(an: &Analysis) -> CheckResult {
    let mut c = Check::new("ses-dimensions");
    for r in &an.perfect().records {
        c.expect(bf_ses_dims(an.algebra(), &r.path, &r.successor), || {
            format!("({}, {})", an.format(&r.path), an.format(&r.successor))
        });
    }
    c.result
}

fn overlap_same_class(an: &Analysis) -> CheckResult {
    let mut c = Check::new("overlap-same-class");
    for p in an.perfect().paths() {
        for q in an.perfect().paths() {
            if detect_overlap(an.algebra(), p, q).is_some() {
                let same = an.coordinates(p).unwrap().class == an.coordinates(q).unwrap().class;
                c.expect(same, || format!("({}, {})", an.format(p), an.format(q)));
            }
        }
    }
    c.result
}

fn coelementary_no_overlap(an: &Analysis) -> CheckResult {
    let mut c = Check::new("coelementary-no-overlap");
    let coel = &an.elementary().coelementary;
    for p in coel {
        for q in coel {
            let o = detect_overlap(an.algebra(), p, q);
            c.expect(o.is_none(), || format!("({}, {})", an.format(p), an.format(q)));
        }
    }
    c.result
}

fn no_overlap_equivalence(an: &Analysis) -> CheckResult {
    let mut c = Check::new("no-overlap-equivalence");
    let perfect: Vec<&Path> = an.perfect().paths().collect();
    let no_overlap =
        perfect.iter().all(|p| perfect.iter().all(|q| detect_overlap(an.algebra(), p, q).is_none()));
    let el = an.elementary();
    let all: Vec<Path> = perfect.iter().map(|p| (*p).clone()).collect();
    let all_elementary = el.elementary == all && el.coelementary == all;
    let isolated = an.hasse(PathOrder::Prec).arrows.is_empty() && an.hasse(PathOrder::Leq).arrows.is_empty();
    c.expect(no_overlap == all_elementary && all_elementary == isolated, || {
        format!("no overlap {no_overlap}, E = E^co = P {all_elementary}, isolated {isolated}")
    });
    c.result
}

fn overlap_quotient_perfect(an: &Analysis) -> CheckResult {
    let mut c = Check::new("overlap-quotient-perfect");
    let alg = an.algebra();
    for p in an.perfect().paths() {
        for q in an.perfect().paths() {
            if detect_overlap(alg, p, q).is_none() {
                continue;
            }
            for w in alg.basis() {
                let in_intersection = p.is_left_divisor_of(w) && q.is_right_divisor_of(w);
                let in_product = w.len() >= p.len() + q.len() && in_intersection;
                if in_intersection && !in_product {
                    c.expect(an.perfect().contains(w), || {
                        format!("{} from ({}, {})", an.format(w), an.format(p), an.format(q))
                    });
                }
            }
        }
    }
    c.result
}

fn hom_oracle(an: &Analysis) -> CheckResult {
    let mut c = Check::new("hom-oracle");
    for p in an.perfect().paths() {
        for q in an.perfect().paths() {
            let oracle = bf_stable_hom(an.algebra(), p, q);
            let mut expected: Vec<HomWitness> = oracle
                .iter()
                .flat_map(|(&k, ws)| ws.iter().map(move |w| HomWitness { shift: k, path: w.clone() }))
                .collect();
            expected.sort();
            let closed = ungraded_stable_hom(an, p, q).expect("perfect");
            c.expect(closed.witnesses == expected, || {
                format!(
                    "({}, {}): closed {} vs oracle {}",
                    an.format(p),
                    an.format(q),
                    closed.dimension,
                    expected.len()
                )
            });
            let top = q.degree(an.degrees());
            for k in -1..=top + 1 {
                let g =
                    graded_stable_hom(an, &GradedObject::new(p.clone(), 0), &GradedObject::new(q.clone(), k))
                        .expect("perfect");
                let want = oracle.get(&k).map_or(0, Vec::len);
                c.expect(g.dimension == want && g.dimension <= 1, || {
                    format!("({}, {}) at {k}: {} vs oracle {want}", an.format(p), an.format(q), g.dimension)
                });
            }
        }
    }
    c.result
}

fn hom_overlap(an: &Analysis) -> CheckResult {
    let mut c = Check::new("hom-overlap");
    let alg = an.algebra();
    for p in an.perfect().paths() {
        for q in an.perfect().paths() {
            let dim = ungraded_stable_hom(an, p, q).expect("perfect").dimension;
            if p == q {
                let o1 = detect_overlap(alg, p, p).is_some();
                c.expect(o1 == (dim > 1), || format!("End({}) = {dim}, O1 {o1}", an.format(p)));
            } else {
                // the overlap condition on (q, p) detects maps pΛ -> qΛ
                let o2 = matches!(detect_overlap(alg, q, p), Some(o) if o.kind == OverlapKind::O2);
                c.expect(o2 == (dim > 0), || {
                    format!(
                        "Hom({}, {}) = {dim}, O2({}, {}) {o2}",
                        an.format(p),
                        an.format(q),
                        an.format(q),
                        an.format(p)
                    )
                });
            }
        }
    }
    c.result
}

fn suspension(an: &Analysis) -> CheckResult {
    let mut c = Check::new("suspension");
    let degrees = an.degrees();
    for r in &an.perfect().records {
        let q = GradedObject::new(r.successor.clone(), 0);
        let want = GradedObject::new(r.path.clone(), r.path.degree(degrees));
        c.expect(suspend(an, &q, 1).ok() == Some(want), || format!("Σ {}", an.format(&r.successor)));
    }
    for obj in an.all_objects() {
        let class = an.coordinates(obj.path().unwrap()).unwrap().class;
        let w = 2 * (an.decomposition(class).m as i64 + 1);
        for power in -w..=w {
            let a = suspend(an, &obj, power).ok();
            let b = suspend_closed_form(an, &obj, power).ok();
            c.expect(a.is_some() && a == b, || format!("Σ^{power} {}", an.format_object(&obj)));
        }
        let back = suspend(an, &suspend(an, &obj, 1).unwrap(), -1).ok();
        c.expect(back.as_ref() == Some(&obj), || format!("Σ^-1 Σ {}", an.format_object(&obj)));
    }
    c.result
}

fn tau_periodicity(an: &Analysis) -> CheckResult {
    let mut c = Check::new("tau-periodicity");
    for obj in an.all_objects() {
        let class = an.coordinates(obj.path().unwrap()).unwrap().class;
        let d = an.decomposition(class);
        let period = an.bracket_degree(class, 1, d.n() as i64);
        let mut y = obj.clone();
        for _ in 0..d.n() {
            y = ar_translate(an, &y).expect("non-zero");
        }
        c.expect(y == obj.shifted(-period), || an.format_object(&obj));
        let back = ar_translate_inverse(an, &ar_translate(an, &obj).unwrap()).ok();
        c.expect(back.as_ref() == Some(&obj), || format!("τ^-1 τ {}", an.format_object(&obj)));
    }
    c.result
}

/// Dimension of the cyclic module `[a, b]Λ`: `dim e_vΛ` for a trivial bracket, zero for
/// a bracket in the ideal.
fn bracket_module_dim(an: &Analysis, class: usize, a: i64, b: i64) -> usize {
    match an.bracket(class, a, b).path {
        Some(p) => an.algebra().dim_right_ideal(&p),
        None => 0,
    }
}

fn ar_mesh(an: &Analysis) -> CheckResult {
    let mut c = Check::new("ar-mesh");
    for obj in an.all_objects() {
        let t = ar_triangle(an, &obj).expect("non-zero");
        let loc = an.coordinates(obj.path().unwrap()).unwrap();
        let (class, i) = (loc.class, loc.start as i64);
        let j = i + loc.len as i64 - 1;
        let lhs = bracket_module_dim(an, class, i + 1, j + 1) + bracket_module_dim(an, class, i, j);
        let rhs = bracket_module_dim(an, class, i + 1, j) + bracket_module_dim(an, class, i, j + 1);
        c.expect(lhs == rhs, || format!("{}: {lhs} vs {rhs}", an.format_object(&obj)));
        for b in &t.middle {
            let arrow_in = graded_stable_hom(an, b, &obj).map(|h| h.dimension == 1).unwrap_or(false);
            let arrow_out = graded_stable_hom(an, &t.a, b).map(|h| h.dimension == 1).unwrap_or(false);
            c.expect(arrow_in && arrow_out, || {
                format!("{} -> {} -> {}", an.format_object(&t.a), an.format_object(b), an.format_object(&obj))
            });
        }
    }
    c.result
}

fn ar_quiver(an: &Analysis) -> CheckResult {
    let mut c = Check::new("ar-quiver");
    let q = match full_ungraded_ar_quiver(an) {
        Ok(q) => q,
        Err(e) => {
            c.expect(false, || e.to_string());
            return c.result;
        }
    };
    c.expect(q.vertices.len() == an.perfect().len(), || format!("{} vertices", q.vertices.len()));
    for a in &q.arrows {
        let companion = q.tau_of(a.to).is_some_and(|t| q.has_arrow(t, a.from));
        c.expect(companion, || {
            format!("no mesh companion for {} -> {}", q.vertices[a.from].path, q.vertices[a.to].path)
        });
    }
    for (v, vert) in q.vertices.iter().enumerate() {
        let n = an.decomposition(vert.class).n();
        c.expect(q.tau_period(v) == Some(n), || format!("τ-period of {} is not {n}", vert.path));
    }
    c.result
}

fn tilting(an: &Analysis) -> CheckResult {
    let mut c = Check::new("tilting");
    match (tilting_orthogonality(an, None), end_algebra(an)) {
        (Ok(report), Ok(blocks)) => {
            c.expect(report.violations.is_empty(), || {
                let (x, y, i) = &report.violations[0];
                format!("Hom({}, Σ^{i} {}) ≠ 0", an.format_object(x), an.format_object(y))
            });
            for b in &blocks {
                c.expect(b.upper_triangular && b.shift_separated, || {
                    format!("class {}: End block {:?}", b.class, b.matrix)
                });
            }
        }
        (Err(e), _) | (_, Err(e)) => c.expect(false, || e.to_string()),
    }
    c.result
}

fn predicates(an: &Analysis) -> CheckResult {
    let mut c = Check::new("cycle-predicates");
    for d in an.decompositions() {
        let r = cycle_predicates(an.algebra(), an.perfect(), d);
        let ok = match &r {
            Ok(p) => !(p.all_arrows_perfect && p.repetition_free) || p.relation_length == Some(d.m + 1),
            Err(_) => false,
        };
        c.expect(ok, || format!("class {}: {r:?}", d.class));
    }
    c.result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_pass_every_check() {
        for (name, alg) in fixtures::all() {
            let an = Analysis::new(alg).unwrap();
            for r in verify_analysis(&an) {
                assert!(r.passed(), "{name}: {}: {:?}", r.name, r.failures);
            }
        }
    }
}
