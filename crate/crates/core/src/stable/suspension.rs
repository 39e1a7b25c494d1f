use super::{bracket_object, locate, GradedObject};
use crate::analysis::Analysis;
use crate::error::StableError;

/// `Σ^power`, one perfect pair at a time: `Σ(qΛ) = pΛ(deg p)` for the pair `(p, q)`.
pub fn suspend(an: &Analysis, obj: &GradedObject, power: i64) -> Result<GradedObject, StableError> {
    locate(an, obj, "suspension")?;
    let (mut path, mut shift) = match obj {
        GradedObject::Shifted { path, shift } => (path.clone(), *shift),
        GradedObject::Zero => unreachable!("located"),
    };
    let degrees = an.degrees();
    for _ in 0..power.unsigned_abs() {
        let rec = an.record(&path).expect("perfect");
        if power > 0 {
            let p = rec.predecessor.clone();
            shift += p.degree(degrees);
            path = p;
        } else {
            shift -= path.degree(degrees);
            path = rec.successor.clone();
        }
    }
    Ok(GradedObject::new(path, shift))
}

/// `Σ^power` evaluated directly in bracket coordinates.
///
/// With `M = m(m_c + 1)`, `Σ^{2m}[i, j](s)` is `[i-M, j-M]` shifted by `deg [i-M, i-1]`
/// (or by `-deg [i, i-M-1]` when `m < 0`); one further step sends `[a, b](d)` to
/// `[b-m_c, a-1](d + deg [b-m_c, a-1])`.
pub fn suspend_closed_form(
    an: &Analysis,
    obj: &GradedObject,
    power: i64,
) -> Result<GradedObject, StableError> {
    let loc = locate(an, obj, "suspension")?;
    let class = loc.co.class;
    let mc = an.decomposition(class).m as i64;
    let deg = |a: i64, b: i64| an.bracket_degree(class, a, b);
    let m = power.div_euclid(2);
    let big = m * (mc + 1);
    let (i, j) = (loc.i(), loc.j());
    let (mut a, mut b) = (i - big, j - big);
    let mut d = if m >= 0 { loc.shift + deg(i - big, i - 1) } else { loc.shift - deg(i, i - big - 1) };
    if power.rem_euclid(2) == 1 {
        let (na, nb) = (b - mc, a - 1);
        d += deg(na, nb);
        a = na;
        b = nb;
    }
    Ok(bracket_object(an, class, a, b, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn one_step_examples() {
        let an = Analysis::new(fixtures::lambda_star()).unwrap();
        let p = |s: &str| an.algebra().parse_path(s).unwrap();
        let obj = GradedObject::new(p("a3.a1.a2.a3.a1.a2"), 0);
        assert_eq!(suspend(&an, &obj, 1).unwrap(), GradedObject::new(p("a1.a2"), 2));
        assert_eq!(suspend_closed_form(&an, &obj, 1).unwrap(), GradedObject::new(p("a1.a2"), 2));
        assert_eq!(suspend(&an, &suspend(&an, &obj, 1).unwrap(), -1).unwrap(), obj);

        // (x, x) is perfect only when x^2 = 0
        let l1 = Analysis::new(fixtures::loop_algebra(1)).unwrap();
        let x = l1.algebra().parse_path("x").unwrap();
        let obj = GradedObject::new(x.clone(), 0);
        assert_eq!(suspend(&l1, &obj, 1).unwrap(), GradedObject::new(x, 1));

        let l2 = Analysis::new(fixtures::loop_algebra(2)).unwrap();
        let x = l2.algebra().parse_path("x").unwrap();
        let xx = l2.algebra().parse_path("x.x").unwrap();
        let obj = GradedObject::new(x, 0);
        assert_eq!(suspend(&l2, &obj, 1).unwrap(), GradedObject::new(xx, 2));
    }

    #[test]
    fn closed_form_matches_iteration() {
        for alg in [fixtures::lambda_star(), fixtures::nakayama(3, 2), fixtures::loop_algebra(4)] {
            let an = Analysis::new(alg).unwrap();
            for obj in an.all_objects() {
                let w =
                    2 * (an.decomposition(an.coordinates(obj.path().unwrap()).unwrap().class).m as i64 + 1);
                for power in -w..=w {
                    assert_eq!(
                        suspend(&an, &obj, power).unwrap(),
                        suspend_closed_form(&an, &obj, power).unwrap(),
                        "{} power {power}",
                        an.format_object(&obj)
                    );
                }
            }
        }
    }

    #[test]
    fn zero_object_has_no_suspension() {
        let an = Analysis::new(fixtures::loop_algebra(1)).unwrap();
        assert!(suspend(&an, &GradedObject::Zero, 1).is_err());
    }
}
