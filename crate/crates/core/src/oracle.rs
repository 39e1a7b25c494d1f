//! Brute-force verifiers that work straight from the basis of non-zero paths, and a
//! seeded generator of small random monomial algebras.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraDocument, ArrowSpec, MonomialAlgebra};
use crate::path::Path;

/// Basis of `(qΛ ∩ Λp) / qΛp`, grouped by the degree of the left cofactor `x` in `xp`.
pub fn bf_stable_hom(alg: &MonomialAlgebra, p: &Path, q: &Path) -> BTreeMap<i64, Vec<Path>> {
    let mut out: BTreeMap<i64, Vec<Path>> = BTreeMap::new();
    for x in alg.paths_to(p.source()) {
        let Some(xp) = alg.multiply(x, p) else { continue };
        if q.is_left_divisor_of(&xp) && !q.is_left_divisor_of(x) {
            out.entry(x.degree(alg.arrow_degrees())).or_default().push(xp);
        }
    }
    out
}

/// The graded piece of [`bf_stable_hom`] at relative shift `k`.
pub fn bf_stable_hom_at(alg: &MonomialAlgebra, p: &Path, q: &Path, k: i64) -> Vec<Path> {
    bf_stable_hom(alg, p, q).remove(&k).unwrap_or_default()
}

/// Basis of `qΛ ∩ Λp`, which computes `Hom(pΛ, qΛ)` in the module category.
pub fn bf_ordinary_hom(alg: &MonomialAlgebra, p: &Path, q: &Path) -> Vec<Path> {
    alg.basis().iter().filter(|w| q.is_left_divisor_of(w) && p.is_right_divisor_of(w)).cloned().collect()
}

/// Checks the three perfect-pair conditions literally, quantifying over every non-zero
/// path of the algebra.
pub fn bf_verify_perfect(alg: &MonomialAlgebra, p: &Path, q: &Path) -> bool {
    let nonzero = |w: &Path| alg.basis().binary_search(w).is_ok();
    let zero_product = |a: &Path, b: &Path| a.concat(b).map(|ab| !nonzero(&ab)).unwrap_or(false);
    if p.is_trivial() || q.is_trivial() || !nonzero(p) || !nonzero(q) {
        return false;
    }
    if p.target() != q.source() || !zero_product(p, q) {
        return false;
    }
    let p2 = alg
        .basis()
        .iter()
        .filter(|w| w.source() == p.target() && zero_product(p, w))
        .all(|w| q.is_left_divisor_of(w));
    let p3 = alg
        .basis()
        .iter()
        .filter(|w| w.target() == q.source() && zero_product(w, q))
        .all(|w| p.is_right_divisor_of(w));
    p2 && p3
}

fn count_with_prefix(alg: &MonomialAlgebra, r: &Path) -> usize {
    alg.basis().iter().filter(|w| r.is_left_divisor_of(w)).count()
}

/// `dim qΛ + dim pΛ = dim e_{t(p)}Λ`, all by counting basis paths.
pub fn bf_ses_dims(alg: &MonomialAlgebra, p: &Path, q: &Path) -> bool {
    let e = Path::trivial(p.target());
    count_with_prefix(alg, q) + count_with_prefix(alg, p) == count_with_prefix(alg, &e)
}

/// Every way of cutting `p` into consecutive pieces drawn from `coelementary`.
pub fn bf_factorizations(coelementary: &[Path], p: &Path) -> Vec<Vec<Path>> {
    fn go(coel: &[Path], p: &Path, from: usize, acc: &mut Vec<Path>, out: &mut Vec<Vec<Path>>) {
        if from == p.len() {
            out.push(acc.clone());
            return;
        }
        for end in from + 1..=p.len() {
            let piece = p.slice(from, end);
            if coel.contains(&piece) {
                acc.push(piece);
                go(coel, p, end, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    if !p.is_trivial() {
        go(coelementary, p, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// Bounds for [`random_algebras`].
#[derive(Clone, Copy, Debug)]
pub struct RandomSpec {
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub max_relations: usize,
    pub relation_len: (usize, usize),
    /// Samples with a larger basis are discarded along with non-admissible ones.
    pub max_basis: usize,
}

impl Default for RandomSpec {
    fn default() -> Self {
        RandomSpec { max_vertices: 4, max_arrows: 6, max_relations: 5, relation_len: (2, 6), max_basis: 150 }
    }
}

fn random_document(rng: &mut ChaCha8Rng, bounds: &RandomSpec) -> AlgebraDocument {
    let nv = rng.gen_range(1..=bounds.max_vertices);
    let na = rng.gen_range(1..=bounds.max_arrows);
    let vertices: Vec<String> = (1..=nv).map(|v| v.to_string()).collect();
    let arrows: Vec<ArrowSpec> = (1..=na)
        .map(|k| {
            let s = rng.gen_range(1..=nv);
            let t = rng.gen_range(1..=nv);
            ArrowSpec::new(format!("x{k}"), s.to_string(), t.to_string())
        })
        .collect();
    let mut relations = Vec::new();
    for _ in 0..rng.gen_range(1..=bounds.max_relations) {
        let len = rng.gen_range(bounds.relation_len.0..=bounds.relation_len.1);
        let mut walk: Vec<&ArrowSpec> = vec![arrows.choose(rng).expect("at least one arrow")];
        while walk.len() < len {
            let at = &walk.last().unwrap().to;
            let next: Vec<&ArrowSpec> = arrows.iter().filter(|a| &a.from == at).collect();
            match next.choose(rng) {
                Some(a) => walk.push(a),
                None => break,
            }
        }
        // half the time, a walk that closes up is wound around its cycle a few more times
        if let Some(k) = walk.iter().position(|a| a.to == walk[0].from) {
            if rng.gen_bool(0.5) {
                let target = rng.gen_range(walk.len().max(k + 2)..=bounds.relation_len.1 + 3);
                let cycle: Vec<&ArrowSpec> = walk[..=k].to_vec();
                walk = cycle.iter().cycle().take(target).copied().collect();
            }
        }
        if walk.len() >= 2 {
            relations.push(walk.iter().map(|a| a.id.clone()).collect());
        }
    }
    AlgebraDocument { vertices, arrows, relations, arrow_degrees: None }
}

/// `count` admissible algebras drawn from a ChaCha stream seeded with `seed`. The same
/// seed always yields the same list.
pub fn random_algebras(seed: u64, count: usize, bounds: &RandomSpec) -> Vec<MonomialAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let doc = random_document(&mut rng, bounds);
        if let Ok(alg) = MonomialAlgebra::from_document(&doc) {
            if alg.dimension() <= bounds.max_basis {
                out.push(alg);
            }
        }
    }
    out
}
