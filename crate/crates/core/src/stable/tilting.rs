use serde::Serialize;

use super::{bracket_object, graded_stable_hom, suspend_closed_form, GradedObject};
use crate::analysis::Analysis;
use crate::error::StableError;

/// `[1, a]Λ(s)`: summand `a` of `T_c(s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiltingSummand {
    pub class: usize,
    pub block_shift: i64,
    pub index: usize,
    pub object: GradedObject,
}

fn cycle_degree(an: &Analysis, class: usize) -> Result<i64, StableError> {
    let dec = an.decomposition(class);
    let d = an.bracket_degree(class, 1, dec.n() as i64);
    if d <= 0 {
        return Err(StableError::NonPositiveCycleDegree { cycle: an.format(&dec.cycle), degree: d });
    }
    Ok(d)
}

/// `T = ⊕_c ⊕_{0 ≤ s < deg c} T_c(s)` with `T_c = ⊕_{a=1}^{m_c} [1, a]Λ`.
pub fn tilting_object(an: &Analysis) -> Result<Vec<TiltingSummand>, StableError> {
    let mut out = Vec::new();
    for dec in an.decompositions() {
        for s in 0..cycle_degree(an, dec.class)? {
            for a in 1..=dec.m {
                out.push(TiltingSummand {
                    class: dec.class,
                    block_shift: s,
                    index: a,
                    object: bracket_object(an, dec.class, 1, a as i64, s),
                });
            }
        }
    }
    Ok(out)
}

/// `End(T_c)` for one class: `matrix[x][y] = dim Hom([1, y]Λ, [1, x]Λ)` (1-based `x, y`
/// stored 0-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EndBlock {
    pub class: usize,
    pub size: usize,
    pub multiplicity: i64,
    pub matrix: Vec<Vec<usize>>,
    /// `matrix[x][y] = 1` exactly when `x ≤ y`.
    pub upper_triangular: bool,
    /// Hom between `[1, a]Λ` and `[1, b]Λ(k)` vanishes for `k ≢ 0 (mod deg c)`.
    pub shift_separated: bool,
}

pub fn end_algebra(an: &Analysis) -> Result<Vec<EndBlock>, StableError> {
    let mut out = Vec::new();
    for dec in an.decompositions() {
        let c = dec.class;
        let period = cycle_degree(an, c)?;
        let obj = |a: usize, s: i64| bracket_object(an, c, 1, a as i64, s);
        let mut matrix = vec![vec![0; dec.m]; dec.m];
        for x in 1..=dec.m {
            for y in 1..=dec.m {
                matrix[x - 1][y - 1] = graded_stable_hom(an, &obj(y, 0), &obj(x, 0))?.dimension;
            }
        }
        let upper_triangular = (0..dec.m).all(|x| (0..dec.m).all(|y| matrix[x][y] == usize::from(x <= y)));
        let mut shift_separated = true;
        for k in (-2 * period..=2 * period).filter(|k| k % period != 0) {
            for a in 1..=dec.m {
                for b in 1..=dec.m {
                    shift_separated &= graded_stable_hom(an, &obj(a, 0), &obj(b, k))?.dimension == 0;
                }
            }
        }
        out.push(EndBlock {
            class: c,
            size: dec.m,
            multiplicity: period,
            matrix,
            upper_triangular,
            shift_separated,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthogonalityReport {
    pub pairs_checked: usize,
    /// `(X, Y, i)` with `Hom(X, Σ^i Y) ≠ 0`.
    pub violations: Vec<(GradedObject, GradedObject, i64)>,
}

/// `Hom(T, Σ^i T) = 0` for `0 < |i| ≤ W`; `W` defaults to `m_c + 1` for the class of the
/// target summand.
pub fn tilting_orthogonality(an: &Analysis, window: Option<i64>) -> Result<OrthogonalityReport, StableError> {
    let t = tilting_object(an)?;
    let mut report = OrthogonalityReport { pairs_checked: 0, violations: Vec::new() };
    for x in &t {
        for y in &t {
            let w = window.unwrap_or(an.decomposition(y.class).m as i64 + 1);
            for i in (-w..=w).filter(|&i| i != 0) {
                let sy = suspend_closed_form(an, &y.object, i)?;
                report.pairs_checked += 1;
                if graded_stable_hom(an, &x.object, &sy)?.dimension != 0 {
                    report.violations.push((x.object.clone(), y.object.clone(), i));
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn lambda_star_tilting() {
        let an = Analysis::new(fixtures::lambda_star()).unwrap();
        assert_eq!(tilting_object(&an).unwrap().len(), 18);
        let blocks = end_algebra(&an).unwrap();
        assert_eq!(blocks[0].size, 4);
        assert_eq!(blocks[0].multiplicity, 3);
        assert_eq!(blocks[1].size, 3);
        assert_eq!(blocks[1].multiplicity, 2);
        assert!(blocks.iter().all(|b| b.upper_triangular && b.shift_separated));
        let report = tilting_orthogonality(&an, Some(4)).unwrap();
        assert!(report.violations.is_empty(), "{:?}", report.violations);
        assert!(tilting_orthogonality(&an, None).unwrap().violations.is_empty());
    }
}
