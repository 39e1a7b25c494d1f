use serde::Serialize;

use super::{bracket_object, locate, GradedObject};
use crate::analysis::Analysis;
use crate::error::StableError;
use crate::path::Path;

/// `A -> B_1 ⊕ B_2 -> C -> ΣA` with the zero summands already dropped from `middle`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArTriangle {
    pub a: GradedObject,
    pub middle: Vec<GradedObject>,
    pub c: GradedObject,
    /// `[i+m-m_c, i+m-1]`, the path representing `C -> ΣA`.
    pub connecting: Path,
}

/// `τ([i, i+m-1](s)) = [i+1, i+m](s - deg r_i)`.
pub fn ar_translate(an: &Analysis, obj: &GradedObject) -> Result<GradedObject, StableError> {
    let loc = locate(an, obj, "AR translate")?;
    let (class, i, j) = (loc.co.class, loc.i(), loc.j());
    let d = an.bracket_degree(class, i, i);
    Ok(bracket_object(an, class, i + 1, j + 1, loc.shift - d))
}

/// `τ^{-1}([i, i+m-1](s)) = [i-1, i+m-2](s + deg r_{i-1})`.
pub fn ar_translate_inverse(an: &Analysis, obj: &GradedObject) -> Result<GradedObject, StableError> {
    let loc = locate(an, obj, "AR translate")?;
    let (class, i, j) = (loc.co.class, loc.i(), loc.j());
    let d = an.bracket_degree(class, i - 1, i - 1);
    Ok(bracket_object(an, class, i - 1, j - 1, loc.shift + d))
}

/// The AR triangle ending in `obj`.
pub fn ar_triangle(an: &Analysis, obj: &GradedObject) -> Result<ArTriangle, StableError> {
    let loc = locate(an, obj, "AR triangle")?;
    let (class, i, j) = (loc.co.class, loc.i(), loc.j());
    let m = loc.co.len as i64;
    let mc = an.decomposition(class).m as i64;
    let d = an.bracket_degree(class, i, i);
    let middle =
        [bracket_object(an, class, i + 1, j, loc.shift - d), bracket_object(an, class, i, j + 1, loc.shift)]
            .into_iter()
            .filter(|b| !b.is_zero())
            .collect();
    let connecting = an.bracket(class, i + m - mc, i + m - 1).path.expect("m_c factors are non-zero");
    Ok(ArTriangle { a: ar_translate(an, obj)?, middle, c: obj.clone(), connecting })
}

/// Checks `τ^{|c|} X = X(-deg c)` for every sample.
pub fn tau_periodicity_check(
    an: &Analysis,
    class: usize,
    samples: &[GradedObject],
) -> Result<bool, StableError> {
    let dec = an.decomposition(class);
    let period = an.bracket_degree(class, 1, dec.n() as i64);
    for x in samples {
        let mut y = x.clone();
        for _ in 0..dec.n() {
            y = ar_translate(an, &y)?;
        }
        if y != x.shifted(-period) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn lambda_star_translates() {
        let an = Analysis::new(fixtures::lambda_star()).unwrap();
        let o = |s: &str, k| GradedObject::new(an.algebra().parse_path(s).unwrap(), k);
        assert_eq!(ar_translate(&an, &o("a1.a2.a3", 0)).unwrap(), o("a3.a1.a2", -2));
        assert_eq!(ar_translate_inverse(&an, &o("a3.a1.a2", -2)).unwrap(), o("a1.a2.a3", 0));

        let t = ar_triangle(&an, &o("a1.a2", 0)).unwrap();
        assert_eq!(t.middle, vec![o("a1.a2.a3", 0)]);

        let t = ar_triangle(&an, &o("a1.a2.a3.a1.a2.a3", 0)).unwrap();
        assert_eq!(t.middle, vec![o("a3.a1.a2.a3", -2)]);
        assert_eq!(an.format(&t.connecting), "a1.a2.a3.a1.a2.a3");
    }

    #[test]
    fn periodicity() {
        let an = Analysis::new(fixtures::lambda_star()).unwrap();
        let o = |s: &str, k| GradedObject::new(an.algebra().parse_path(s).unwrap(), k);
        let mut y = o("a1.a2.a3", 0);
        for _ in 0..2 {
            y = ar_translate(&an, &y).unwrap();
        }
        assert_eq!(y, o("a1.a2.a3", -3));
        assert_eq!(ar_translate(&an, &o("a4.a5", 0)).unwrap(), o("a4.a5", -2));
        for c in 0..2 {
            assert!(tau_periodicity_check(&an, c, &an.class_objects(c, 5)).unwrap());
        }

        let l = Analysis::new(fixtures::loop_algebra(3)).unwrap();
        let x2 = GradedObject::new(l.algebra().parse_path("x.x").unwrap(), 0);
        assert_eq!(ar_translate(&l, &x2).unwrap(), x2.shifted(-1));
    }
}
