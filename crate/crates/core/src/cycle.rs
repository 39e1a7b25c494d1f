//! Underlying cycles of minimal perfect path sequences and their rotation classes.

use serde::Serialize;

use crate::path::Path;
use crate::perfect::PerfectPaths;

/// Start index of the lexicographically least rotation of `s` (Booth's algorithm).
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| &s[i % n];
    let mut f: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let mut i = f[j - k - 1];
        while i != -1 && at(j) != at(k + i as usize + 1) {
            if at(j) < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if i == -1 && at(j) != at(k) {
            if at(j) < at(k) {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    k % n
}

/// Shortest cycle `c` with `p = c^l`; returns `(c, l)`.
pub fn primitive_root(p: &Path) -> (Path, usize) {
    assert!(p.is_cycle(), "primitive root of a non-cycle");
    let arrows = p.arrows();
    let n = arrows.len();
    for d in 1..=n {
        if n.is_multiple_of(d) && (d..n).all(|k| arrows[k] == arrows[k - d]) {
            return (p.prefix(d), n / d);
        }
    }
    unreachable!("d = n always works")
}

/// Canonical representative of the rotation class of a cycle.
pub fn canonical_rotation(c: &Path) -> Path {
    c.rotate(least_rotation(c.arrows()))
}

/// An element of `C(Λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnderlyingCycleClass {
    /// The least rotation of the cycle.
    pub cycle: Path,
    /// Indices of the minimal perfect sequences whose product is a power of `cycle`.
    pub sequences: Vec<usize>,
    /// Member perfect paths in path order.
    pub members: Vec<Path>,
}

impl UnderlyingCycleClass {
    /// `l(c)`.
    pub fn length(&self) -> usize {
        self.cycle.len()
    }
}

/// Groups the minimal perfect sequences by the rotation class of their underlying cycle.
/// Classes are ordered by the arrow sequence of their canonical cycle.
pub fn underlying_cycle_classes(perfect: &PerfectPaths) -> Vec<UnderlyingCycleClass> {
    let mut classes: Vec<UnderlyingCycleClass> = Vec::new();
    for (k, seq) in perfect.sequences.iter().enumerate() {
        let (root, _) = primitive_root(&seq.product());
        let cycle = canonical_rotation(&root);
        match classes.iter_mut().find(|c| c.cycle == cycle) {
            Some(class) => {
                class.sequences.push(k);
                class.members.extend(seq.paths.iter().cloned());
            }
            None => {
                classes.push(UnderlyingCycleClass { cycle, sequences: vec![k], members: seq.paths.clone() })
            }
        }
    }
    for c in &mut classes {
        c.members.sort();
    }
    classes.sort_by(|a, b| a.cycle.arrows().cmp(b.cycle.arrows()).then(a.cycle.cmp(&b.cycle)));
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::perfect::enumerate_perfect_paths;
    use proptest::prelude::*;

    fn naive_least_rotation(s: &[u8]) -> Vec<u8> {
        (0..s.len().max(1))
            .map(|k| s[k.min(s.len())..].iter().chain(&s[..k.min(s.len())]).copied().collect())
            .min()
            .unwrap_or_default()
    }

    proptest! {
        #[test]
        fn booth_matches_naive(s in proptest::collection::vec(0u8..3, 0..12)) {
            let k = least_rotation(&s);
            let rotated: Vec<u8> = s[k..].iter().chain(&s[..k]).copied().collect();
            prop_assert_eq!(rotated, naive_least_rotation(&s));
        }
    }

    #[test]
    fn lambda_star_classes() {
        let alg = fixtures::lambda_star();
        let classes = underlying_cycle_classes(&enumerate_perfect_paths(&alg));
        let cycles: Vec<String> = classes.iter().map(|c| alg.format(&c.cycle)).collect();
        assert_eq!(cycles, ["a1.a2.a3", "a4.a5"]);
        assert_eq!(classes[0].members.len(), 8);
        assert_eq!(classes[0].sequences.len(), 2);
        assert_eq!(classes[1].members.len(), 3);
    }

    #[test]
    fn primitive_root_of_square() {
        let alg = fixtures::lambda_star();
        let (root, l) = primitive_root(&alg.parse_path("a4.a5.a4.a5").unwrap());
        assert_eq!(alg.format(&root), "a4.a5");
        assert_eq!(l, 2);
    }

    #[test]
    fn loop_has_one_class_of_length_one() {
        let alg = fixtures::loop_algebra(3);
        let classes = underlying_cycle_classes(&enumerate_perfect_paths(&alg));
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].length(), 1);
    }
}
