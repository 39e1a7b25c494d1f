//! The full combinatorial picture of one algebra, computed once and shared read-only.

use crate::algebra::MonomialAlgebra;
use crate::cycle::{underlying_cycle_classes, UnderlyingCycleClass};
use crate::decomposition::{decompose_cycle, BracketPath, CycleDecomposition};
use crate::error::ConsistencyError;
use crate::order::{classify_elementary, hasse_quiver, ElementaryPaths, HasseQuiver, PathOrder};
use crate::path::Path;
use crate::perfect::{enumerate_perfect_paths, PerfectPathRecord, PerfectPaths};

/// Position of a perfect path: `path = [start, start + len - 1]` in class `class`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coordinates {
    pub class: usize,
    pub start: usize,
    pub len: usize,
}

#[derive(Clone, Debug)]
pub struct Analysis {
    alg: MonomialAlgebra,
    perfect: PerfectPaths,
    classes: Vec<UnderlyingCycleClass>,
    prec: HasseQuiver,
    leq: HasseQuiver,
    elementary: ElementaryPaths,
    decompositions: Vec<CycleDecomposition>,
}

impl Analysis {
    pub fn new(alg: MonomialAlgebra) -> Result<Self, ConsistencyError> {
        let mut perfect = enumerate_perfect_paths(&alg);
        let classes = underlying_cycle_classes(&perfect);
        let prec = hasse_quiver(&perfect, PathOrder::Prec)?;
        let leq = hasse_quiver(&perfect, PathOrder::Leq)?;
        let elementary = classify_elementary(&prec, &leq)?;
        let decompositions = classes
            .iter()
            .enumerate()
            .map(|(k, c)| decompose_cycle(&alg, &perfect, k, c, &elementary.coelementary))
            .collect::<Result<Vec<_>, _>>()?;

        let mut assigned = 0;
        for dec in &decompositions {
            for start in 1..=dec.n() {
                for len in 1..=dec.m {
                    let p = dec
                        .bracket(&alg, start as i64, (start + len - 1) as i64)
                        .path
                        .filter(|p| !p.is_trivial())
                        .ok_or_else(|| ConsistencyError("bracket [i, i+m-1] vanished".into()))?;
                    let idx = perfect.index_of(&p).ok_or_else(|| {
                        ConsistencyError(format!("bracket {} is not perfect", alg.format(&p)))
                    })?;
                    let rec = &mut perfect.records_mut()[idx];
                    if rec.len != 0 {
                        return Err(ConsistencyError(format!(
                            "{} has two bracket coordinates",
                            alg.format(&p)
                        )));
                    }
                    rec.class = dec.class;
                    rec.start = start;
                    rec.len = len;
                    assigned += 1;
                }
            }
        }
        if assigned != perfect.len() {
            return Err(ConsistencyError(format!(
                "sum of m_c|c| is {assigned} but there are {} perfect paths",
                perfect.len()
            )));
        }
        Ok(Analysis { alg, perfect, classes, prec, leq, elementary, decompositions })
    }

    pub fn algebra(&self) -> &MonomialAlgebra {
        &self.alg
    }

    pub fn perfect(&self) -> &PerfectPaths {
        &self.perfect
    }

    pub fn classes(&self) -> &[UnderlyingCycleClass] {
        &self.classes
    }

    pub fn hasse(&self, order: PathOrder) -> &HasseQuiver {
        match order {
            PathOrder::Prec => &self.prec,
            PathOrder::Leq => &self.leq,
        }
    }

    pub fn elementary(&self) -> &ElementaryPaths {
        &self.elementary
    }

    pub fn decompositions(&self) -> &[CycleDecomposition] {
        &self.decompositions
    }

    pub fn decomposition(&self, class: usize) -> &CycleDecomposition {
        &self.decompositions[class]
    }

    pub fn degrees(&self) -> &[i64] {
        self.alg.arrow_degrees()
    }

    pub fn record(&self, p: &Path) -> Option<&PerfectPathRecord> {
        self.perfect.get(p)
    }

    pub fn coordinates(&self, p: &Path) -> Option<Coordinates> {
        self.record(p).map(|r| Coordinates { class: r.class, start: r.start, len: r.len })
    }

    pub fn bracket(&self, class: usize, i: i64, j: i64) -> BracketPath {
        self.decompositions[class].bracket(&self.alg, i, j)
    }

    /// `deg [a, b]` in class `class`.
    pub fn bracket_degree(&self, class: usize, a: i64, b: i64) -> i64 {
        self.decompositions[class].degree(a, b, self.degrees())
    }

    pub fn format(&self, p: &Path) -> String {
        self.alg.format(p)
    }

    pub fn is_cm_free(&self) -> bool {
        self.perfect.is_cm_free()
    }
}
