use serde::Serialize;

use super::{locate, GradedObject, Located};
use crate::analysis::Analysis;
use crate::error::StableError;
use crate::path::Path;

/// One basis element `x·p` of a stable Hom space, sitting in relative shift `shift`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct HomWitness {
    pub shift: i64,
    pub path: Path,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomDescription {
    pub dimension: usize,
    pub witnesses: Vec<HomWitness>,
}

impl HomDescription {
    fn zero() -> Self {
        HomDescription { dimension: 0, witnesses: Vec::new() }
    }

    fn from_witnesses(mut witnesses: Vec<HomWitness>) -> Self {
        witnesses.sort();
        HomDescription { dimension: witnesses.len(), witnesses }
    }
}

/// All `α` with `i' ≤ i+αn ≤ j' ≤ j+αn < i'+m_c`, as `(deg [i', i+αn-1], witness)`.
fn solutions(an: &Analysis, src: &Located, dst: &Located) -> Vec<HomWitness> {
    if src.co.class != dst.co.class {
        return Vec::new();
    }
    let class = src.co.class;
    let dec = an.decomposition(class);
    let (n, m) = (dec.n() as i64, dec.m as i64);
    let (i, j, i2, j2) = (src.i(), src.j(), dst.i(), dst.j());
    let lo = (i2 - i).div_euclid(n) - 1;
    let hi = (j2 - i).div_euclid(n) + 1;
    (lo..=hi)
        .filter(|alpha| {
            let (a, b) = (i + alpha * n, j + alpha * n);
            i2 <= a && a <= j2 && j2 <= b && b < i2 + m
        })
        .map(|alpha| {
            let a = i + alpha * n;
            let path =
                an.bracket(class, i2, j + alpha * n).path.expect("fewer than m_c + 1 factors is non-zero");
            HomWitness { shift: an.bracket_degree(class, i2, a - 1), path }
        })
        .collect()
}

/// `Hom(src, dst)` in the graded stable category, by the bracket criterion.
pub fn graded_stable_hom(
    an: &Analysis,
    src: &GradedObject,
    dst: &GradedObject,
) -> Result<HomDescription, StableError> {
    let s = locate(an, src, "Hom space")?;
    let d = locate(an, dst, "Hom space")?;
    let k = d.shift - s.shift;
    let found: Vec<HomWitness> = solutions(an, &s, &d).into_iter().filter(|w| w.shift == k).collect();
    if found.is_empty() {
        return Ok(HomDescription::zero());
    }
    Ok(HomDescription::from_witnesses(found))
}

/// `Hom(pΛ, qΛ)` in the ungraded stable category: the sum of the graded pieces over all
/// relative shifts.
pub fn ungraded_stable_hom(an: &Analysis, p: &Path, q: &Path) -> Result<HomDescription, StableError> {
    let s = locate(an, &GradedObject::new(p.clone(), 0), "Hom space")?;
    let d = locate(an, &GradedObject::new(q.clone(), 0), "Hom space")?;
    Ok(HomDescription::from_witnesses(solutions(an, &s, &d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn obj(an: &Analysis, p: &str, k: i64) -> GradedObject {
        GradedObject::new(an.algebra().parse_path(p).unwrap(), k)
    }

    #[test]
    fn lambda_star_examples() {
        let an = Analysis::new(fixtures::lambda_star()).unwrap();
        let h = graded_stable_hom(&an, &obj(&an, "a1.a2.a3", 0), &obj(&an, "a1.a2.a3.a1.a2", 3)).unwrap();
        assert_eq!(h.dimension, 1);
        assert_eq!(an.format(&h.witnesses[0].path), "a1.a2.a3.a1.a2.a3");

        let h = graded_stable_hom(&an, &obj(&an, "a1.a2.a3.a1.a2", 0), &obj(&an, "a1.a2.a3", 0)).unwrap();
        assert_eq!(h.dimension, 1);
        assert_eq!(an.format(&h.witnesses[0].path), "a1.a2.a3.a1.a2");

        for k in -10..10 {
            let h = graded_stable_hom(&an, &obj(&an, "a1.a2", 0), &obj(&an, "a4.a5", k)).unwrap();
            assert_eq!(h.dimension, 0);
        }

        let p = |s: &str| an.algebra().parse_path(s).unwrap();
        let h = ungraded_stable_hom(&an, &p("a1.a2.a3"), &p("a1.a2.a3.a1.a2")).unwrap();
        assert_eq!(h.dimension, 1);
        assert_eq!(h.witnesses[0].shift, 3);
        let h = ungraded_stable_hom(&an, &p("a1.a2"), &p("a1.a2")).unwrap();
        assert_eq!(h.dimension, 1);
        assert!(ungraded_stable_hom(&an, &p("a1.a2"), &p("a4.a5")).unwrap().witnesses.is_empty());
    }

    #[test]
    fn zero_and_non_perfect_inputs_rejected() {
        let an = Analysis::new(fixtures::lambda_star()).unwrap();
        let z = GradedObject::Zero;
        assert!(matches!(graded_stable_hom(&an, &z, &obj(&an, "a3", 0)), Err(StableError::ZeroObject(_))));
        assert!(matches!(
            graded_stable_hom(&an, &obj(&an, "b2", 0), &obj(&an, "a3", 0)),
            Err(StableError::NotPerfect(_))
        ));
    }
}
