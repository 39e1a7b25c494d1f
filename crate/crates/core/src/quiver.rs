use std::collections::HashMap;

use crate::error::PathError;
use crate::path::{ArrowId, Path, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: Vertex,
    pub target: Vertex,
}

/// A finite quiver with named vertices and arrows. Ids are declaration indices.
#[derive(Clone, Debug)]
pub struct Quiver {
    vertex_names: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_lookup: HashMap<String, Vertex>,
    arrow_lookup: HashMap<String, ArrowId>,
    outgoing: Vec<Vec<ArrowId>>,
}

impl Quiver {
    /// Callers validate uniqueness and endpoints; see [`crate::algebra::parse_algebra`].
    pub(crate) fn from_validated(vertex_names: Vec<String>, arrows: Vec<Arrow>) -> Self {
        let vertex_lookup =
            vertex_names.iter().enumerate().map(|(i, n)| (n.clone(), Vertex(i as u32))).collect();
        let arrow_lookup =
            arrows.iter().enumerate().map(|(i, a)| (a.name.clone(), ArrowId(i as u32))).collect();
        let mut outgoing = vec![Vec::new(); vertex_names.len()];
        for (i, a) in arrows.iter().enumerate() {
            outgoing[a.source.0 as usize].push(ArrowId(i as u32));
        }
        Quiver { vertex_names, arrows, vertex_lookup, arrow_lookup, outgoing }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertex_names.len() as u32).map(Vertex)
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0 as usize]
    }

    pub fn arrow_list(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn outgoing(&self, v: Vertex) -> &[ArrowId] {
        &self.outgoing[v.0 as usize]
    }

    pub fn vertex_name(&self, v: Vertex) -> &str {
        &self.vertex_names[v.0 as usize]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<Vertex> {
        self.vertex_lookup.get(name).copied()
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.arrow_lookup.get(name).copied()
    }

    pub fn arrow_path(&self, a: ArrowId) -> Path {
        let arr = self.arrow(a);
        Path::from_parts(vec![arr.source, arr.target], vec![a])
    }

    /// Validated path from an arrow sequence. An empty sequence is rejected: use
    /// [`Path::trivial`] for trivial paths.
    pub fn path(&self, arrows: &[ArrowId]) -> Result<Path, PathError> {
        let first = arrows.first().ok_or(PathError::Empty)?;
        let mut verts = vec![self.arrow(*first).source];
        for (k, &a) in arrows.iter().enumerate() {
            let arr = self.arrow(a);
            if arr.source != *verts.last().unwrap() {
                return Err(PathError::Broken {
                    position: k,
                    previous: self.arrow(arrows[k - 1]).name.clone(),
                    arrow: arr.name.clone(),
                });
            }
            verts.push(arr.target);
        }
        Ok(Path::from_parts(verts, arrows.to_vec()))
    }

    pub fn path_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Path, PathError> {
        let ids = names
            .iter()
            .map(|n| {
                self.arrow_by_name(n.as_ref()).ok_or_else(|| PathError::UnknownArrow(n.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.path(&ids)
    }

    /// Parses the dot-separated notation `a1.a2.a3`; `e_<vertex>` denotes a trivial path.
    pub fn parse_path(&self, text: &str) -> Result<Path, PathError> {
        let text = text.trim();
        if let Some(v) = text.strip_prefix("e_") {
            if self.arrow_by_name(text).is_none() {
                let v = self.vertex_by_name(v).ok_or_else(|| PathError::UnknownVertex(v.to_string()))?;
                return Ok(Path::trivial(v));
            }
        }
        if text.is_empty() {
            return Err(PathError::Empty);
        }
        let names: Vec<&str> = text.split('.').collect();
        self.path_from_names(&names)
    }

    /// Inverse of [`Quiver::parse_path`].
    pub fn format_path(&self, p: &Path) -> String {
        if p.is_trivial() {
            return format!("e_{}", self.vertex_name(p.source()));
        }
        p.arrows().iter().map(|&a| self.arrow(a).name.as_str()).collect::<Vec<_>>().join(".")
    }
}
