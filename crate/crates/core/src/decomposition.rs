//! Co-elementary decomposition of an underlying cycle and bracket coordinates `[i, j]`.

use serde::Serialize;

use crate::algebra::MonomialAlgebra;
use crate::cycle::UnderlyingCycleClass;
use crate::error::ConsistencyError;
use crate::path::Path;
use crate::perfect::PerfectPaths;

/// `[i, j] = r_i ⋯ r_j` with indices mod `n`. `path` is `None` for the zero marker.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketPath {
    pub class: usize,
    pub i: i64,
    pub j: i64,
    pub path: Option<Path>,
}

impl BracketPath {
    pub fn is_zero(&self) -> bool {
        self.path.is_none()
    }

    pub fn is_trivial(&self) -> bool {
        self.path.as_ref().is_some_and(Path::is_trivial)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleDecomposition {
    pub class: usize,
    /// The cycle rotated to start at `r_1`.
    pub cycle: Path,
    /// `r_1, ..., r_n`.
    pub factors: Vec<Path>,
    /// `m_c`.
    pub m: usize,
    /// `X_c`: `[i, i + m_c - 1]` for `i = 1..n`.
    pub elementary: Vec<Path>,
    /// `Y_c`: the factors as a set, in path order.
    pub coelementary: Vec<Path>,
    /// `φ_c: X_c -> Y_c`, the successor map restricted to `X_c`.
    pub phi: Vec<(Path, Path)>,
}

impl CycleDecomposition {
    /// `|c|`.
    pub fn n(&self) -> usize {
        self.factors.len()
    }

    /// `l(c)`.
    pub fn length(&self) -> usize {
        self.cycle.len()
    }

    /// Representative of `i` mod `n` in `1..=n`.
    pub fn normalize(&self, i: i64) -> usize {
        (i - 1).rem_euclid(self.n() as i64) as usize + 1
    }

    /// `r_i` for any integer `i`.
    pub fn factor(&self, i: i64) -> &Path {
        &self.factors[self.normalize(i) - 1]
    }

    /// `deg [a, b]` under the given arrow degrees; zero when `a > b`.
    pub fn degree(&self, a: i64, b: i64, degrees: &[i64]) -> i64 {
        if a > b {
            return 0;
        }
        let count = (b - a + 1) as usize;
        let n = self.n();
        let full = self.cycle.degree(degrees) * (count / n) as i64;
        let rest: i64 = (0..count % n).map(|k| self.factor(a + k as i64).degree(degrees)).sum();
        full + rest
    }

    /// Realizes `[i, j]`. Ranges longer than `m_c + 1` factors are zero without being built.
    pub fn bracket(&self, alg: &MonomialAlgebra, i: i64, j: i64) -> BracketPath {
        let path = if i > j {
            Some(Path::trivial(self.factor(i).source()))
        } else if j - i + 1 > self.m as i64 + 1 {
            None
        } else {
            let mut p = self.factor(i).clone();
            for k in i + 1..=j {
                p = p.concat(self.factor(k)).expect("consecutive factors compose");
            }
            alg.is_nonzero(&p).then_some(p)
        };
        BracketPath { class: self.class, i, j, path }
    }
}

/// Start offsets of rotations of `cycle` that split exactly into co-elementary factors,
/// with the factor sequence of each.
fn factor_boundaries(cycle: &Path, coelementary: &[&Path]) -> Vec<(usize, Vec<Path>)> {
    let l = cycle.len();
    let word = cycle.arrows();
    let matches_at =
        |pos: usize, r: &Path| r.arrows().iter().enumerate().all(|(k, a)| word[(pos + k) % l] == *a);
    let mut out = Vec::new();
    'start: for k in 0..l {
        let (mut pos, mut total, mut factors) = (k, 0, Vec::new());
        while total < l {
            let Some(r) = coelementary
                .iter()
                .find(|r| r.len() <= l - total && r.source() == cycle.vertices()[pos] && matches_at(pos, r))
            else {
                continue 'start;
            };
            factors.push((*r).clone());
            total += r.len();
            pos = (pos + r.len()) % l;
        }
        out.push((k, factors));
    }
    out
}

/// Rotates the class cycle to a co-elementary boundary (the one with the least arrow
/// sequence) and assembles `r_i`, `m_c`, `X_c`, `Y_c` and `φ_c`.
pub fn decompose_cycle(
    alg: &MonomialAlgebra,
    perfect: &PerfectPaths,
    class_index: usize,
    class: &UnderlyingCycleClass,
    coelementary: &[Path],
) -> Result<CycleDecomposition, ConsistencyError> {
    let in_class: Vec<&Path> = coelementary.iter().filter(|r| class.members.contains(r)).collect();
    let fail = |what: &str| ConsistencyError(format!("cycle {}: {what}", alg.format(&class.cycle)));
    let (start, factors) = factor_boundaries(&class.cycle, &in_class)
        .into_iter()
        .min_by(|(a, _), (b, _)| class.cycle.rotate(*a).arrows().cmp(class.cycle.rotate(*b).arrows()))
        .ok_or_else(|| fail("no rotation splits into co-elementary factors"))?;
    let cycle = class.cycle.rotate(start);
    let m = perfect.paths().filter(|p| factors[0].is_left_divisor_of(p)).count();
    let mut dec = CycleDecomposition {
        class: class_index,
        cycle,
        factors,
        m,
        elementary: Vec::new(),
        coelementary: Vec::new(),
        phi: Vec::new(),
    };
    let n = dec.n() as i64;
    for i in 1..=n {
        let x = dec
            .bracket(alg, i, i + m as i64 - 1)
            .path
            .filter(|p| perfect.contains(p))
            .ok_or_else(|| fail("[i, i+m_c-1] is not perfect"))?;
        if !dec.bracket(alg, i, i + m as i64).is_zero() {
            return Err(fail("[i, i+m_c] is non-zero"));
        }
        let y = perfect.get(&x).expect("perfect").successor.clone();
        if !dec.factors.contains(&y) {
            return Err(fail("successor of an elementary path is not a factor"));
        }
        dec.elementary.push(x.clone());
        dec.phi.push((x, y));
    }
    let mut ys = dec.factors.clone();
    ys.sort();
    ys.dedup();
    dec.coelementary = ys;
    Ok(dec)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CyclePredicates {
    pub all_arrows_perfect: bool,
    pub repetition_free: bool,
    pub relation_length: Option<usize>,
}

/// `all_arrows_perfect` is `|c| = l(c)`, cross-checked arrow by arrow;
/// `repetition_free` asks for some `r ≥ 2` with every cyclic length-`r` window of `c` in `F`.
pub fn cycle_predicates(
    alg: &MonomialAlgebra,
    perfect: &PerfectPaths,
    dec: &CycleDecomposition,
) -> Result<CyclePredicates, ConsistencyError> {
    let c = &dec.cycle;
    let l = c.len();
    let by_count = dec.n() == l;
    let by_arrows = c.arrows().iter().all(|&a| perfect.contains(&alg.quiver().arrow_path(a)));
    if by_count != by_arrows {
        return Err(ConsistencyError(format!(
            "cycle {}: |c| = l(c) is {by_count} but arrows perfect is {by_arrows}",
            alg.format(c)
        )));
    }
    let window = |k: usize, r: usize| -> Path {
        let mut p = Path::trivial(c.vertices()[k]);
        for off in 0..r {
            p = p.concat(&alg.quiver().arrow_path(c.arrows()[(k + off) % l])).expect("cycle walk");
        }
        p
    };
    let relation_length =
        (2..=alg.max_relation_len()).find(|&r| (0..l).all(|k| alg.relation_index(&window(k, r)).is_some()));
    Ok(CyclePredicates {
        all_arrows_perfect: by_count,
        repetition_free: relation_length.is_some(),
        relation_length,
    })
}
