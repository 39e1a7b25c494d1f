//! Paths in a finite quiver and the divisibility relations between them.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::PathError;

/// Index of a vertex in its quiver's declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex(pub u32);

/// Index of an arrow in its quiver's declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArrowId(pub u32);

/// A walk in a quiver, possibly trivial.
///
/// The vertex sequence is stored alongside the arrows (`verts.len() == arrows.len() + 1`).
///
/// Paths are totally ordered by length, then by arrow sequence, then by source vertex.
/// Every deterministic iteration in the crate follows this order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Path {
    verts: Vec<Vertex>,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: Vertex) -> Self {
        Path { verts: vec![v], arrows: Vec::new() }
    }

    /// Builds a path from its vertex and arrow sequences. Composability is the caller's
    /// responsibility; use [`crate::Quiver::path`] for validated construction.
    pub(crate) fn from_parts(verts: Vec<Vertex>, arrows: Vec<ArrowId>) -> Self {
        debug_assert_eq!(verts.len(), arrows.len() + 1);
        Path { verts, arrows }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn source(&self) -> Vertex {
        self.verts[0]
    }

    pub fn target(&self) -> Vertex {
        *self.verts.last().expect("path has at least one vertex")
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.verts
    }

    pub fn is_cycle(&self) -> bool {
        !self.is_trivial() && self.source() == self.target()
    }

    /// The subpath spanning arrows `start..end`; trivial at the vertex `start` when the
    /// range is empty.
    pub fn slice(&self, start: usize, end: usize) -> Path {
        assert!(start <= end && end <= self.len(), "slice {start}..{end} out of range");
        Path { verts: self.verts[start..=end].to_vec(), arrows: self.arrows[start..end].to_vec() }
    }

    pub fn prefix(&self, len: usize) -> Path {
        self.slice(0, len)
    }

    pub fn suffix(&self, len: usize) -> Path {
        self.slice(self.len() - len, self.len())
    }

    /// Concatenation `self · other`; fails unless `t(self) = s(other)`.
    pub fn concat(&self, other: &Path) -> Result<Path, PathError> {
        if self.target() != other.source() {
            return Err(PathError::NotComposable {
                left_target: self.target(),
                right_source: other.source(),
            });
        }
        let mut verts = self.verts.clone();
        verts.extend_from_slice(&other.verts[1..]);
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Ok(Path { verts, arrows })
    }

    /// Appends one arrow ending at `target`. The caller guarantees `s(arrow) = t(self)`.
    pub(crate) fn extended(&self, arrow: ArrowId, target: Vertex) -> Path {
        let mut verts = self.verts.clone();
        verts.push(target);
        let mut arrows = self.arrows.clone();
        arrows.push(arrow);
        Path { verts, arrows }
    }

    /// `self^k` for a cycle; `k = 0` gives the trivial path at the base vertex.
    pub fn power(&self, k: usize) -> Path {
        assert!(self.is_trivial() || self.is_cycle(), "power of a non-cycle");
        let mut out = Path::trivial(self.source());
        for _ in 0..k {
            out = out.concat(self).expect("cycle composes with itself");
        }
        out
    }

    /// Cyclic rotation of a cycle so that it starts at arrow position `k`.
    pub fn rotate(&self, k: usize) -> Path {
        assert!(self.is_cycle(), "rotation of a non-cycle");
        let n = self.len();
        let k = k % n;
        let mut arrows = self.arrows[k..].to_vec();
        arrows.extend_from_slice(&self.arrows[..k]);
        let mut verts = self.verts[k..n].to_vec();
        verts.extend_from_slice(&self.verts[..=k]);
        Path { verts, arrows }
    }

    /// Whether `self` is a left divisor of `other` (`other = self · w`).
    pub fn is_left_divisor_of(&self, other: &Path) -> bool {
        self.source() == other.source()
            && self.len() <= other.len()
            && other.arrows[..self.len()] == self.arrows[..]
            && other.verts[self.len()] == self.target()
    }

    /// Whether `self` is a right divisor of `other` (`other = w · self`).
    pub fn is_right_divisor_of(&self, other: &Path) -> bool {
        let off = match other.len().checked_sub(self.len()) {
            Some(off) => off,
            None => return false,
        };
        self.target() == other.target()
            && other.arrows[off..] == self.arrows[..]
            && other.verts[off] == self.source()
    }

    /// Every position at which `self` occurs inside `other`.
    pub fn occurrences_in<'a>(&'a self, other: &'a Path) -> impl Iterator<Item = usize> + 'a {
        let len = self.len();
        let count = (other.len() + 1).saturating_sub(len);
        (0..count)
            .filter(move |&k| other.verts[k] == self.source() && other.arrows[k..k + len] == self.arrows[..])
    }

    pub fn is_subpath_of(&self, other: &Path) -> bool {
        self.occurrences_in(other).next().is_some()
    }

    /// Sum of the arrow degrees; the length under the degree-one grading.
    pub fn degree(&self, arrow_degrees: &[i64]) -> i64 {
        self.arrows.iter().map(|a| arrow_degrees[a.0 as usize]).sum()
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source().cmp(&other.source()))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// How a path `p` sits inside an ambient path `q`, as computed by [`relate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathRelation {
    pub is_subpath: bool,
    pub is_left_divisor: bool,
    pub is_right_divisor: bool,
    /// `p` is a subpath of `q` and `p != q`.
    pub is_proper: bool,
    /// First occurrence `q = u · p · v`, as `(u, v)`.
    pub subpath_witness: Option<(Path, Path)>,
    /// `w` with `q = p · w`, when `p` is a left divisor.
    pub left_complement: Option<Path>,
    /// `w` with `q = w · p`, when `p` is a right divisor.
    pub right_complement: Option<Path>,
}

/// Relates `p` to the ambient path `q`.
pub fn relate(p: &Path, q: &Path) -> PathRelation {
    let first = p.occurrences_in(q).next();
    let subpath_witness = first.map(|k| (q.slice(0, k), q.slice(k + p.len(), q.len())));
    let left_complement = p.is_left_divisor_of(q).then(|| q.slice(p.len(), q.len()));
    let right_complement = p.is_right_divisor_of(q).then(|| q.slice(0, q.len() - p.len()));
    PathRelation {
        is_subpath: first.is_some(),
        is_left_divisor: left_complement.is_some(),
        is_right_divisor: right_complement.is_some(),
        is_proper: first.is_some() && p != q,
        subpath_witness,
        left_complement,
        right_complement,
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}
