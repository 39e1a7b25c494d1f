use serde::{Deserialize, Serialize};

use crate::analysis::Analysis;
use crate::error::StableError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GradingMode {
    /// Every arrow in degree one.
    #[default]
    Default,
    /// The arrow degrees of the input document.
    Weighted,
}

/// `D^b(mod K A_{typeA_size})` repeated `multiplicity` times.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedFactor {
    pub cycle: String,
    #[serde(rename = "typeA_size")]
    pub type_a_size: usize,
    pub multiplicity: i64,
}

/// The Nakayama algebra `KQ_c / R^{radical_exponent}` on a cyclic quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NakayamaFactor {
    pub vertices: usize,
    pub radical_exponent: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub graded: Vec<GradedFactor>,
    pub ungraded: Vec<NakayamaFactor>,
    pub cm_free: bool,
}

/// Per class: type `A_{m_c}` with multiplicity `l(c)` (or `deg c` when weighted), and the
/// Nakayama algebra on `|c|` vertices with radical exponent `m_c + 1`.
///
/// Weighted mode rejects classes of non-positive degree, then any arrow of degree zero.
pub fn classify(an: &Analysis, mode: GradingMode) -> Result<ClassificationReport, StableError> {
    let mut graded = Vec::new();
    let mut ungraded = Vec::new();
    for dec in an.decompositions() {
        let multiplicity = match mode {
            GradingMode::Default => dec.length() as i64,
            GradingMode::Weighted => {
                let d = dec.cycle.degree(an.degrees());
                if d <= 0 {
                    return Err(StableError::NonPositiveCycleDegree {
                        cycle: an.format(&dec.cycle),
                        degree: d,
                    });
                }
                d
            }
        };
        graded.push(GradedFactor { cycle: an.format(&dec.cycle), type_a_size: dec.m, multiplicity });
        ungraded.push(NakayamaFactor { vertices: dec.n(), radical_exponent: dec.m + 1 });
    }
    if mode == GradingMode::Weighted {
        let q = an.algebra().quiver();
        if let Some((a, _)) = q.arrow_list().iter().zip(an.degrees()).find(|(_, &d)| d == 0) {
            return Err(StableError::ZeroDegreeArrow(a.name.clone()));
        }
    }
    Ok(ClassificationReport { graded, ungraded, cm_free: an.is_cm_free() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::MonomialAlgebra;

    #[test]
    fn lambda_star_report() {
        let an = Analysis::new(fixtures::lambda_star()).unwrap();
        let r = classify(&an, GradingMode::Default).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"graded":[{"cycle":"a1.a2.a3","typeA_size":4,"multiplicity":3},{"cycle":"a4.a5","typeA_size":3,"multiplicity":2}],"ungraded":[{"vertices":2,"radical_exponent":5},{"vertices":1,"radical_exponent":4}],"cm_free":false}"#
        );
    }

    #[test]
    fn a2_is_empty_product() {
        let an = Analysis::new(fixtures::a2()).unwrap();
        let r = classify(&an, GradingMode::Default).unwrap();
        assert!(r.cm_free && r.graded.is_empty() && r.ungraded.is_empty());
    }

    #[test]
    fn weighted_gradings() {
        let mut doc = fixtures::lambda_star_document();
        doc.arrow_degrees = Some([("a1".to_string(), 2), ("a5".to_string(), 3)].into());
        let an = Analysis::new(MonomialAlgebra::from_document(&doc).unwrap()).unwrap();
        let r = classify(&an, GradingMode::Weighted).unwrap();
        assert_eq!(r.graded[0].multiplicity, 4);
        assert_eq!(r.graded[1].multiplicity, 4);

        doc.arrow_degrees = Some([("a4".to_string(), 0), ("a5".to_string(), 0)].into());
        let an = Analysis::new(MonomialAlgebra::from_document(&doc).unwrap()).unwrap();
        assert!(matches!(
            classify(&an, GradingMode::Weighted),
            Err(StableError::NonPositiveCycleDegree { degree: 0, .. })
        ));

        doc.arrow_degrees = Some([("b2".to_string(), 0)].into());
        let an = Analysis::new(MonomialAlgebra::from_document(&doc).unwrap()).unwrap();
        assert!(matches!(classify(&an, GradingMode::Weighted), Err(StableError::ZeroDegreeArrow(_))));
    }

    #[test]
    fn nakayama_is_self_classifying() {
        for n in 1..=4 {
            for m in 1..=4 {
                let an = Analysis::new(fixtures::nakayama(n, m)).unwrap();
                let r = classify(&an, GradingMode::Default).unwrap();
                assert_eq!(r.ungraded, vec![NakayamaFactor { vertices: n, radical_exponent: m + 1 }]);
                assert_eq!(r.graded[0].type_a_size, m);
                assert_eq!(r.graded[0].multiplicity, n as i64);
            }
        }
    }
}
