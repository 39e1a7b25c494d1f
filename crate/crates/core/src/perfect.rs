//! Annihilator sets, perfect pairs, perfect paths and overlaps.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::MonomialAlgebra;
use crate::error::StableError;
use crate::path::Path;

fn require_proper(alg: &MonomialAlgebra, p: &Path) -> Result<(), StableError> {
    if p.is_trivial() || !alg.is_nonzero(p) {
        return Err(StableError::ZeroOrTrivial(alg.format(p)));
    }
    Ok(())
}

/// `R(p)`: the left-minimal non-zero paths `q` with `pq = 0`, in path order.
pub fn right_annihilators(alg: &MonomialAlgebra, p: &Path) -> Result<Vec<Path>, StableError> {
    require_proper(alg, p)?;
    let kills = |q: &Path| alg.multiply(p, q).is_none();
    Ok(alg
        .paths_from(p.target())
        .filter(|q| !q.is_trivial() && kills(q))
        // monotone: if a proper prefix kills p, so does the longest one
        .filter(|q| q.len() == 1 || !kills(&q.prefix(q.len() - 1)))
        .cloned()
        .collect())
}

/// `L(p)`: the right-minimal non-zero paths `q` with `qp = 0`, in path order.
pub fn left_annihilators(alg: &MonomialAlgebra, p: &Path) -> Result<Vec<Path>, StableError> {
    require_proper(alg, p)?;
    let kills = |q: &Path| alg.multiply(q, p).is_none();
    Ok(alg
        .paths_to(p.source())
        .filter(|q| !q.is_trivial() && kills(q))
        .filter(|q| q.len() == 1 || !kills(&q.suffix(q.len() - 1)))
        .cloned()
        .collect())
}

pub fn is_perfect_pair(alg: &MonomialAlgebra, p: &Path, q: &Path) -> bool {
    if p.is_trivial() || q.is_trivial() || !alg.is_nonzero(p) || !alg.is_nonzero(q) {
        return false;
    }
    if p.target() != q.source() || alg.multiply(p, q).is_some() {
        return false;
    }
    let r = right_annihilators(alg, p).expect("checked non-zero, non-trivial");
    let l = left_annihilators(alg, q).expect("checked non-zero, non-trivial");
    r.len() == 1 && &r[0] == q && l.len() == 1 && &l[0] == p
}

/// A perfect path with its neighbours under the successor map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectPathRecord {
    pub path: Path,
    pub successor: Path,
    pub predecessor: Path,
    /// Index into the cycle classes of the enclosing analysis.
    pub class: usize,
    /// Index into [`PerfectPaths::sequences`].
    pub sequence: usize,
    pub sequence_position: usize,
    /// Bracket coordinates: `path = [start, start + len - 1]` in its class.
    pub start: usize,
    pub len: usize,
}

/// A cycle `(p_1, ..., p_n)` of the successor map; each adjacent pair is perfect.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalPerfectSequence {
    pub paths: Vec<Path>,
}

impl MinimalPerfectSequence {
    /// `p_1 ⋯ p_n`.
    pub fn product(&self) -> Path {
        let mut it = self.paths.iter();
        let first = it.next().expect("sequences are non-empty").clone();
        it.fold(first, |acc, p| acc.concat(p).expect("successive perfect paths compose"))
    }
}

/// The successor map restricted to its periodic points.
#[derive(Clone, Debug)]
pub struct PerfectPaths {
    /// Perfect paths in path order. Class and coordinates are filled in by
    /// [`crate::Analysis`].
    pub records: Vec<PerfectPathRecord>,
    /// σ-cycles, each rotated to start at its least member; sorted by that member.
    pub sequences: Vec<MinimalPerfectSequence>,
    index: HashMap<Path, usize>,
}

impl PerfectPaths {
    pub fn is_cm_free(&self) -> bool {
        self.records.is_empty()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, p: &Path) -> Option<&PerfectPathRecord> {
        self.index.get(p).map(|&i| &self.records[i])
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Path) -> bool {
        self.index.contains_key(p)
    }

    pub fn paths(&self) -> impl Iterator<Item = &Path> + '_ {
        self.records.iter().map(|r| &r.path)
    }

    pub(crate) fn records_mut(&mut self) -> &mut [PerfectPathRecord] {
        &mut self.records
    }
}

/// Builds the partial successor map `p -> q` over all perfect pairs and keeps its
/// periodic points.
pub fn enumerate_perfect_paths(alg: &MonomialAlgebra) -> PerfectPaths {
    let mut sigma: HashMap<Path, Path> = HashMap::new();
    for p in alg.basis().iter().filter(|p| !p.is_trivial()) {
        let r = right_annihilators(alg, p).expect("basis path");
        if let [q] = r.as_slice() {
            let l = left_annihilators(alg, q).expect("annihilators are non-zero");
            if l.len() == 1 && &l[0] == p {
                sigma.insert(p.clone(), q.clone());
            }
        }
    }

    let mut sequences = Vec::new();
    let mut seq_of: HashMap<Path, (usize, usize)> = HashMap::new();
    for p in alg.basis() {
        if seq_of.contains_key(p) || !sigma.contains_key(p) {
            continue;
        }
        // σ is injective, so the orbit of p is either a cycle through p or never
        // returns to p
        let mut orbit = vec![p.clone()];
        let mut cur = &sigma[p];
        let periodic = loop {
            if cur == p {
                break true;
            }
            if orbit.len() > sigma.len() {
                break false;
            }
            orbit.push(cur.clone());
            match sigma.get(cur) {
                Some(next) => cur = next,
                None => break false,
            }
        };
        if periodic {
            // basis order makes p the least member
            let k = sequences.len();
            for (pos, q) in orbit.iter().enumerate() {
                seq_of.insert(q.clone(), (k, pos));
            }
            sequences.push(MinimalPerfectSequence { paths: orbit });
        }
    }

    let mut members: Vec<&Path> = seq_of.keys().collect();
    members.sort();
    let records: Vec<PerfectPathRecord> = members
        .into_iter()
        .map(|p| {
            let (sequence, sequence_position) = seq_of[p];
            let seq = &sequences[sequence].paths;
            let n = seq.len();
            PerfectPathRecord {
                path: p.clone(),
                successor: seq[(sequence_position + 1) % n].clone(),
                predecessor: seq[(sequence_position + n - 1) % n].clone(),
                class: 0,
                sequence,
                sequence_position,
                start: 0,
                len: 0,
            }
        })
        .collect();
    let index = records.iter().enumerate().map(|(i, r)| (r.path.clone(), i)).collect();
    PerfectPaths { records, sequences, index }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OverlapKind {
    O1,
    O2,
}

/// `p = p'x`, `q = xq'` with `x` non-trivial and `p'xq' ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Overlap {
    pub kind: OverlapKind,
    pub p_prime: Path,
    pub x: Path,
    pub q_prime: Path,
}

/// Scans overlap lengths from short to long and returns the first witness. For `p = q`
/// both cofactors must be non-trivial; for `p ≠ q` they may be trivial.
pub fn detect_overlap(alg: &MonomialAlgebra, p: &Path, q: &Path) -> Option<Overlap> {
    let same = p == q;
    for len in 1..=p.len().min(q.len()) {
        let x = p.suffix(len);
        if !x.is_left_divisor_of(q) {
            continue;
        }
        let p_prime = p.prefix(p.len() - len);
        let q_prime = q.slice(len, q.len());
        if same && (p_prime.is_trivial() || q_prime.is_trivial()) {
            continue;
        }
        let whole = p.concat(&q_prime).expect("q' starts where p ends");
        if alg.is_nonzero(&whole) {
            let kind = if same { OverlapKind::O1 } else { OverlapKind::O2 };
            return Some(Overlap { kind, p_prime, x, q_prime });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(alg: &MonomialAlgebra, ps: &[Path]) -> Vec<String> {
        ps.iter().map(|p| alg.format(p)).collect()
    }

    #[test]
    fn loop_annihilators() {
        let alg = fixtures::loop_algebra(2);
        let x = alg.parse_path("x").unwrap();
        assert_eq!(names(&alg, &right_annihilators(&alg, &x).unwrap()), ["x.x"]);
        let alg = fixtures::loop_algebra(1);
        let x = alg.parse_path("x").unwrap();
        assert_eq!(names(&alg, &right_annihilators(&alg, &x).unwrap()), ["x"]);
        assert_eq!(names(&alg, &left_annihilators(&alg, &x).unwrap()), ["x"]);
    }

    #[test]
    fn lambda_star_annihilators() {
        let alg = fixtures::lambda_star();
        let a12 = alg.parse_path("a1.a2").unwrap();
        assert_eq!(names(&alg, &right_annihilators(&alg, &a12).unwrap()), ["a3.a1.a2.a3.a1.a2"]);
        let b2 = alg.parse_path("b2").unwrap();
        assert!(right_annihilators(&alg, &b2).unwrap().is_empty());
        let e = alg.parse_path("e_1").unwrap();
        assert!(right_annihilators(&alg, &e).is_err());
    }

    #[test]
    fn perfect_pair_examples() {
        let alg = fixtures::lambda_star();
        let p = |s: &str| alg.parse_path(s).unwrap();
        assert!(is_perfect_pair(&alg, &p("a1.a2"), &p("a3.a1.a2.a3.a1.a2")));
        assert!(!is_perfect_pair(&alg, &p("b2"), &p("a4.a5")));
        assert!(!is_perfect_pair(&alg, &p("a1.a2"), &p("a3")));

        let l3 = fixtures::loop_algebra(3);
        let x = l3.parse_path("x").unwrap();
        assert!(!is_perfect_pair(&l3, &x, &x));
        assert!(is_perfect_pair(&l3, &x, &l3.parse_path("x.x.x").unwrap()));
    }

    #[test]
    fn lambda_star_sequences() {
        let alg = fixtures::lambda_star();
        let pp = enumerate_perfect_paths(&alg);
        assert_eq!(pp.len(), 11);
        let seqs: Vec<Vec<String>> = pp.sequences.iter().map(|s| names(&alg, &s.paths)).collect();
        assert_eq!(
            seqs,
            vec![
                vec!["a3", "a1.a2.a3.a1.a2.a3", "a1.a2", "a3.a1.a2.a3.a1.a2"],
                vec!["a4.a5", "a4.a5.a4.a5.a4.a5"],
                vec!["a1.a2.a3", "a1.a2.a3.a1.a2", "a3.a1.a2", "a3.a1.a2.a3"],
                vec!["a4.a5.a4.a5"],
            ]
        );
        assert!(!pp.is_cm_free());
    }

    #[test]
    fn a2_is_cm_free() {
        assert!(enumerate_perfect_paths(&fixtures::a2()).is_cm_free());
    }

    #[test]
    fn overlap_examples() {
        let alg = fixtures::lambda_star();
        let p = |s: &str| alg.parse_path(s).unwrap();
        let o = detect_overlap(&alg, &p("a1.a2.a3.a1.a2"), &p("a3.a1.a2")).unwrap();
        assert_eq!(o.kind, OverlapKind::O2);
        assert_eq!(alg.format(&o.p_prime), "a1.a2");
        assert_eq!(alg.format(&o.x), "a3.a1.a2");
        assert!(o.q_prime.is_trivial());

        let l3 = fixtures::loop_algebra(3);
        let x2 = l3.parse_path("x.x").unwrap();
        let o = detect_overlap(&l3, &x2, &x2).unwrap();
        assert_eq!(o.kind, OverlapKind::O1);
        assert_eq!(l3.format(&o.x), "x");

        let quad = fixtures::quadratic();
        let pp = enumerate_perfect_paths(&quad);
        for p in pp.paths() {
            for q in pp.paths() {
                assert_eq!(detect_overlap(&quad, p, q), None);
            }
        }
    }
}
