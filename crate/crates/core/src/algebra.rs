//! Monomial algebras `KQ/I`: input documents, relation normalization, admissibility and
//! the basis of non-zero paths.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::path::{ArrowId, Path, Vertex};
use crate::quiver::{Arrow, Quiver};

/// The JSON input format.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arrow_degrees: Option<BTreeMap<String, i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub id: String,
    pub from: String,
    pub to: String,
}

impl ArrowSpec {
    pub fn new(id: impl Into<String>, from: impl Into<String>, to: impl Into<String>) -> Self {
        ArrowSpec { id: id.into(), from: from.into(), to: to.into() }
    }
}

/// Outcome of the breadth-first closure over arrow extensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Enumeration {
    Finite(Vec<Path>),
    /// A cycle whose every power is non-zero.
    Infinite {
        witness: Path,
    },
}

/// A finite-dimensional monomial algebra with its minimal relation set and the basis
/// of non-zero paths. Immutable after construction.
#[derive(Clone, Debug)]
pub struct MonomialAlgebra {
    quiver: Quiver,
    relations: Vec<Path>,
    basis: Vec<Path>,
    basis_set: HashSet<Path>,
    by_source: Vec<Vec<usize>>,
    by_target: Vec<Vec<usize>>,
    arrow_degrees: Vec<i64>,
    warnings: Vec<String>,
}

pub fn parse_algebra(text: &str) -> Result<MonomialAlgebra, AlgebraError> {
    let doc: AlgebraDocument = serde_json::from_str(text)?;
    MonomialAlgebra::from_document(&doc)
}

impl MonomialAlgebra {
    pub fn from_document(doc: &AlgebraDocument) -> Result<Self, AlgebraError> {
        if doc.vertices.is_empty() {
            return Err(AlgebraError::NoVertices);
        }
        let mut seen = HashSet::new();
        for v in &doc.vertices {
            if !seen.insert(v.as_str()) {
                return Err(AlgebraError::DuplicateVertex(v.clone()));
            }
        }
        let vertex_of = |arrow: &str, name: &str| {
            doc.vertices.iter().position(|v| v == name).map(|i| Vertex(i as u32)).ok_or_else(|| {
                AlgebraError::UndeclaredEndpoint { arrow: arrow.to_string(), vertex: name.to_string() }
            })
        };
        let mut arrow_names = HashSet::new();
        let mut arrows = Vec::with_capacity(doc.arrows.len());
        for spec in &doc.arrows {
            if !arrow_names.insert(spec.id.as_str()) {
                return Err(AlgebraError::DuplicateArrow(spec.id.clone()));
            }
            arrows.push(Arrow {
                name: spec.id.clone(),
                source: vertex_of(&spec.id, &spec.from)?,
                target: vertex_of(&spec.id, &spec.to)?,
            });
        }
        let quiver = Quiver::from_validated(doc.vertices.clone(), arrows);

        let mut relations = Vec::with_capacity(doc.relations.len());
        for (index, rel) in doc.relations.iter().enumerate() {
            if rel.is_empty() {
                return Err(AlgebraError::ShortRelation { index, path: "[]".into(), len: 0 });
            }
            let path =
                quiver.path_from_names(rel).map_err(|source| AlgebraError::BadRelation { index, source })?;
            if path.len() < 2 {
                return Err(AlgebraError::ShortRelation {
                    index,
                    path: quiver.format_path(&path),
                    len: path.len(),
                });
            }
            relations.push(path);
        }

        let mut arrow_degrees = vec![1; quiver.arrow_count()];
        if let Some(degrees) = &doc.arrow_degrees {
            for (name, &deg) in degrees {
                let a = quiver
                    .arrow_by_name(name)
                    .ok_or_else(|| AlgebraError::UnknownDegreeArrow(name.clone()))?;
                if deg < 0 {
                    return Err(AlgebraError::NegativeDegree { arrow: name.clone(), degree: deg });
                }
                arrow_degrees[a.0 as usize] = deg;
            }
        }
        Self::new(quiver, relations, arrow_degrees)
    }

    /// Normalizes `relations` to the minimal generating set, checks admissibility and
    /// enumerates the non-zero paths.
    pub fn new(quiver: Quiver, relations: Vec<Path>, arrow_degrees: Vec<i64>) -> Result<Self, AlgebraError> {
        let (relations, warnings) = minimize_relations(&quiver, relations);
        let basis = match enumerate_nonzero_paths(&quiver, &relations) {
            Enumeration::Finite(basis) => basis,
            Enumeration::Infinite { witness } => {
                return Err(AlgebraError::NotAdmissible { witness: quiver.format_path(&witness) })
            }
        };
        let mut by_source = vec![Vec::new(); quiver.vertex_count()];
        let mut by_target = vec![Vec::new(); quiver.vertex_count()];
        for (i, p) in basis.iter().enumerate() {
            by_source[p.source().0 as usize].push(i);
            by_target[p.target().0 as usize].push(i);
        }
        let basis_set = basis.iter().cloned().collect();
        Ok(MonomialAlgebra {
            quiver,
            relations,
            basis,
            basis_set,
            by_source,
            by_target,
            arrow_degrees,
            warnings,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// The minimal relation set, sorted by the global path order.
    pub fn relations(&self) -> &[Path] {
        &self.relations
    }

    /// All non-zero paths, trivial ones included, in the global path order.
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Degrees from the input document (1 where unspecified).
    pub fn arrow_degrees(&self) -> &[i64] {
        &self.arrow_degrees
    }

    /// Smallest `N` such that every path of length `N` is zero.
    pub fn nilpotency_bound(&self) -> usize {
        self.basis.last().map_or(0, |p| p.len()) + 1
    }

    pub fn max_relation_len(&self) -> usize {
        self.relations.iter().map(Path::len).max().unwrap_or(0)
    }

    /// Non-zero paths starting at `v`.
    pub fn paths_from(&self, v: Vertex) -> impl Iterator<Item = &Path> + '_ {
        self.by_source[v.0 as usize].iter().map(move |&i| &self.basis[i])
    }

    /// Non-zero paths ending at `v`.
    pub fn paths_to(&self, v: Vertex) -> impl Iterator<Item = &Path> + '_ {
        self.by_target[v.0 as usize].iter().map(move |&i| &self.basis[i])
    }

    /// Membership in the enumerated basis.
    pub fn is_nonzero(&self, p: &Path) -> bool {
        self.basis_set.contains(p)
    }

    /// True iff some relation is a subpath of `p`; scans `F` directly.
    pub fn path_is_zero(&self, p: &Path) -> bool {
        self.relations.iter().any(|r| r.is_subpath_of(p))
    }

    /// The product `p·q` in the algebra: `None` when it vanishes, including when the
    /// paths do not compose.
    pub fn multiply(&self, p: &Path, q: &Path) -> Option<Path> {
        let pq = p.concat(q).ok()?;
        self.is_nonzero(&pq).then_some(pq)
    }

    pub fn relation_index(&self, p: &Path) -> Option<usize> {
        self.relations.binary_search(p).ok()
    }

    /// `dim rΛ`: non-zero paths having `r` as a left divisor, or starting at the vertex
    /// when `r` is trivial.
    pub fn dim_right_ideal(&self, r: &Path) -> usize {
        if !self.is_nonzero(r) {
            return 0;
        }
        self.paths_from(r.source()).filter(|x| r.is_left_divisor_of(x)).count()
    }

    pub fn format(&self, p: &Path) -> String {
        self.quiver.format_path(p)
    }

    pub fn parse_path(&self, text: &str) -> Result<Path, crate::error::PathError> {
        self.quiver.parse_path(text)
    }

    /// Writes the algebra back out in the input format.
    pub fn to_document(&self) -> AlgebraDocument {
        let q = &self.quiver;
        let degrees: BTreeMap<String, i64> = q
            .arrow_list()
            .iter()
            .zip(&self.arrow_degrees)
            .filter(|(_, &d)| d != 1)
            .map(|(a, &d)| (a.name.clone(), d))
            .collect();
        AlgebraDocument {
            vertices: q.vertices().map(|v| q.vertex_name(v).to_string()).collect(),
            arrows: q
                .arrow_list()
                .iter()
                .map(|a| ArrowSpec::new(&a.name, q.vertex_name(a.source), q.vertex_name(a.target)))
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| r.arrows().iter().map(|&a| q.arrow(a).name.clone()).collect())
                .collect(),
            arrow_degrees: (!degrees.is_empty()).then_some(degrees),
        }
    }
}

/// Drops duplicates and any relation containing another relation as a subpath.
fn minimize_relations(quiver: &Quiver, mut relations: Vec<Path>) -> (Vec<Path>, Vec<String>) {
    let mut warnings = Vec::new();
    relations.sort();
    let before = relations.len();
    relations.dedup();
    if relations.len() < before {
        warnings.push(format!("{} duplicate relation(s) removed", before - relations.len()));
    }
    // sorted by length, so any subpath of r that is a relation comes before it
    let mut kept: Vec<Path> = Vec::with_capacity(relations.len());
    for r in relations {
        if let Some(smaller) = kept.iter().find(|s| s.is_subpath_of(&r)) {
            warnings.push(format!(
                "relation {} dropped: contains relation {}",
                quiver.format_path(&r),
                quiver.format_path(smaller)
            ));
        } else {
            kept.push(r);
        }
    }
    (kept, warnings)
}

/// Enumerates every path avoiding all of `relations` as a subpath, or reports a cycle
/// that never dies.
///
/// Finiteness is decided first on the factor-avoidance automaton whose states are the
/// live suffix windows of the last `d - 1` arrows (`d` = longest relation); the language
/// is infinite iff that automaton has a reachable cycle.
pub fn enumerate_nonzero_paths(quiver: &Quiver, relations: &[Path]) -> Enumeration {
    if let Some(witness) = live_cycle(quiver, relations) {
        return Enumeration::Infinite { witness };
    }
    let mut basis: Vec<Path> = quiver.vertices().map(Path::trivial).collect();
    let mut frontier = basis.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for &a in quiver.outgoing(p.target()) {
                let pa = p.extended(a, quiver.arrow(a).target);
                if !ends_in_relation(&pa, relations) {
                    next.push(pa);
                }
            }
        }
        basis.extend(next.iter().cloned());
        frontier = next;
    }
    basis.sort();
    Enumeration::Finite(basis)
}

fn ends_in_relation(p: &Path, relations: &[Path]) -> bool {
    relations.iter().any(|r| r.is_right_divisor_of(p))
}

/// Depth-first search for a cycle in the factor-avoidance automaton. Returns the arrow
/// labels along the cycle as a closed walk in the quiver.
fn live_cycle(quiver: &Quiver, relations: &[Path]) -> Option<Path> {
    let window = relations.iter().map(Path::len).max().unwrap_or(1).saturating_sub(1);

    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Open,
        Done,
    }

    let step = |state: &Path, a: ArrowId| -> Option<Path> {
        let next = state.extended(a, quiver.arrow(a).target);
        if ends_in_relation(&next, relations) {
            return None;
        }
        let keep = next.len().min(window);
        Some(next.suffix(keep))
    };

    let mut marks: HashMap<Path, Mark> = HashMap::new();
    for v in quiver.vertices() {
        let root = Path::trivial(v);
        if marks.contains_key(&root) {
            continue;
        }
        // stack of (state, index of next outgoing arrow to try, arrow used to enter)
        let mut stack: Vec<(Path, usize, Option<ArrowId>)> = vec![(root.clone(), 0, None)];
        marks.insert(root, Mark::Open);
        while let Some((state, next_arrow, _)) = stack.last().cloned() {
            let out = quiver.outgoing(state.target());
            if next_arrow >= out.len() {
                marks.insert(state, Mark::Done);
                stack.pop();
                continue;
            }
            stack.last_mut().unwrap().1 += 1;
            let a = out[next_arrow];
            let Some(succ) = step(&state, a) else { continue };
            match marks.get(&succ) {
                Some(Mark::Done) => {}
                Some(Mark::Open) => {
                    let start = stack.iter().position(|(s, _, _)| *s == succ).unwrap();
                    let mut arrows: Vec<ArrowId> =
                        stack[start + 1..].iter().map(|(_, _, via)| via.unwrap()).collect();
                    arrows.push(a);
                    return Some(quiver.path(&arrows).expect("automaton walk composes"));
                }
                None => {
                    marks.insert(succ.clone(), Mark::Open);
                    stack.push((succ, 0, Some(a)));
                }
            }
        }
    }
    None
}
