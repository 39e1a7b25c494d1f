//! Auslander-Reiten quivers: the finite ungraded component of each class, finite windows
//! of the graded translation quiver, and their DOT/JSON renderings.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::analysis::Analysis;
use crate::error::StableError;
use crate::order::HasseQuiver;
use crate::stable::{ar_translate_inverse, ar_triangle, GradedObject};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArVertex {
    pub path: String,
    pub class: usize,
    pub start: usize,
    pub len: usize,
    /// `None` in the ungraded quiver.
    pub shift: Option<i64>,
    /// Some neighbour (arrow or τ) lies outside the materialized part.
    pub incomplete: bool,
}

impl ArVertex {
    /// `[i,j]` or `[i,j](s)`.
    pub fn label(&self) -> String {
        let b = format!("[{},{}]", self.start, self.start + self.len - 1);
        match self.shift {
            Some(s) => format!("{b}({s})"),
            None => b,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ArArrow {
    pub from: usize,
    pub to: usize,
    pub valuation: (u32, u32),
}

/// Vertices are indices into `vertices`; `tau` holds pairs `(C, τC)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TranslationQuiver {
    pub graded: bool,
    pub vertices: Vec<ArVertex>,
    pub arrows: Vec<ArArrow>,
    pub tau: Vec<(usize, usize)>,
    pub notes: Vec<String>,
}

impl TranslationQuiver {
    pub fn tau_of(&self, v: usize) -> Option<usize> {
        self.tau.iter().find(|(c, _)| *c == v).map(|(_, a)| *a)
    }

    /// Length of the τ-orbit through `v`, if τ closes up on it.
    pub fn tau_period(&self, v: usize) -> Option<usize> {
        let mut cur = v;
        for k in 1..=self.vertices.len() {
            cur = self.tau_of(cur)?;
            if cur == v {
                return Some(k);
            }
        }
        None
    }

    pub fn has_arrow(&self, from: usize, to: usize) -> bool {
        self.arrows.iter().any(|a| a.from == from && a.to == to)
    }

    pub fn find(&self, path: &str, shift: Option<i64>) -> Option<usize> {
        self.vertices.iter().position(|v| v.path == path && v.shift == shift)
    }

    pub fn class_vertices(&self, class: usize) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&k| self.vertices[k].class == class).collect()
    }
}

// Neighbours of `c`: the middle terms of the triangle ending in `c`, and those of the
// triangle starting in `c` (which ends in τ⁻¹c), plus τc and τ⁻¹c.
struct Mesh {
    into: Vec<GradedObject>,
    out_of: Vec<GradedObject>,
    tau: GradedObject,
    tau_inv: GradedObject,
}

fn mesh(an: &Analysis, c: &GradedObject) -> Result<Mesh, StableError> {
    let tri = ar_triangle(an, c)?;
    let tau_inv = ar_translate_inverse(an, c)?;
    let out_of = ar_triangle(an, &tau_inv)?.middle;
    Ok(Mesh { into: tri.middle, out_of, tau: tri.a, tau_inv })
}

struct Builder<'a> {
    an: &'a Analysis,
    graded: bool,
    objects: Vec<GradedObject>,
    index: BTreeMap<GradedObject, usize>,
}

impl<'a> Builder<'a> {
    fn new(an: &'a Analysis, graded: bool, mut objects: Vec<GradedObject>) -> Self {
        objects.sort_by_key(|o| sort_key(an, o));
        objects.dedup();
        let index = objects.iter().enumerate().map(|(k, o)| (o.clone(), k)).collect();
        Builder { an, graded, objects, index }
    }

    fn build(self, notes: Vec<String>) -> Result<TranslationQuiver, StableError> {
        let mut vertices = Vec::with_capacity(self.objects.len());
        let mut arrows = BTreeSet::new();
        let mut tau = Vec::new();
        for (k, obj) in self.objects.iter().enumerate() {
            let m = mesh(self.an, obj)?;
            let mut complete = true;
            let graded = self.graded;
            let mut idx = |o: &GradedObject| {
                let found = if graded { self.index.get(o) } else { self.index.get(&unshift(o)) }.copied();
                complete &= found.is_some();
                found
            };
            for b in &m.into {
                if let Some(b) = idx(b) {
                    arrows.insert((b, k));
                }
            }
            for b in &m.out_of {
                if let Some(b) = idx(b) {
                    arrows.insert((k, b));
                }
            }
            if let Some(a) = idx(&m.tau) {
                tau.push((k, a));
            }
            idx(&m.tau_inv);
            let path = obj.path().expect("non-zero");
            let co = self.an.coordinates(path).expect("perfect");
            vertices.push(ArVertex {
                path: self.an.format(path),
                class: co.class,
                start: co.start,
                len: co.len,
                shift: if self.graded { obj.shift() } else { None },
                incomplete: !complete,
            });
        }
        let arrows = arrows.into_iter().map(|(from, to)| ArArrow { from, to, valuation: (1, 1) }).collect();
        Ok(TranslationQuiver { graded: self.graded, vertices, arrows, tau, notes })
    }
}

fn unshift(o: &GradedObject) -> GradedObject {
    match o {
        GradedObject::Shifted { path, .. } => GradedObject::new(path.clone(), 0),
        GradedObject::Zero => GradedObject::Zero,
    }
}

fn sort_key(an: &Analysis, o: &GradedObject) -> (usize, i64, usize, usize) {
    let co = an.coordinates(o.path().expect("non-zero")).expect("perfect");
    (co.class, o.shift().unwrap_or(0), co.len, co.start)
}

fn class_note(an: &Analysis, class: usize) -> String {
    let dec = an.decomposition(class);
    format!(
        "class {}: cycle {}, Z A_{} / τ^{} (left and right edges identified)",
        class + 1,
        an.format(&dec.cycle),
        dec.m,
        dec.n()
    )
}

/// The ungraded AR quiver of one class: `Z A_{m_c} / τ^{|c|}`.
pub fn ungraded_ar_quiver(an: &Analysis, class: usize) -> Result<TranslationQuiver, StableError> {
    Builder::new(an, false, an.class_objects(class, 0)).build(vec![class_note(an, class)])
}

/// The ungraded AR quiver of the whole stable category, one component per class.
pub fn full_ungraded_ar_quiver(an: &Analysis) -> Result<TranslationQuiver, StableError> {
    let objects = (0..an.classes().len()).flat_map(|c| an.class_objects(c, 0)).collect();
    let notes = (0..an.classes().len()).map(|c| class_note(an, c)).collect();
    Builder::new(an, false, objects).build(notes)
}

/// Every `pΛ(s)` with `p` in class `class` and `lo <= s <= hi`.
pub fn graded_ar_window(
    an: &Analysis,
    class: usize,
    lo: i64,
    hi: i64,
) -> Result<TranslationQuiver, StableError> {
    if lo > hi {
        return Err(StableError::EmptyWindow { lo, hi });
    }
    let objects = (lo..=hi).flat_map(|s| an.class_objects(class, s)).collect();
    let dec = an.decomposition(class);
    let note =
        format!("class {}: cycle {}, shifts {lo}..={hi} of Z A_{}", class + 1, an.format(&dec.cycle), dec.m);
    Builder::new(an, true, objects).build(vec![note])
}

/// [`graded_ar_window`] over every class at once.
pub fn full_graded_ar_window(an: &Analysis, lo: i64, hi: i64) -> Result<TranslationQuiver, StableError> {
    if lo > hi {
        return Err(StableError::EmptyWindow { lo, hi });
    }
    let classes = 0..an.classes().len();
    let objects = classes.clone().flat_map(|c| (lo..=hi).flat_map(move |s| an.class_objects(c, s))).collect();
    let notes = classes.map(|c| format!("{}, shifts {lo}..={hi}", class_note(an, c))).collect();
    Builder::new(an, true, objects).build(notes)
}

/// The graded objects within `radius` steps of `center`, a step being an arrow or τ^{±1}.
pub fn graded_ar_ball(
    an: &Analysis,
    center: &GradedObject,
    radius: usize,
) -> Result<TranslationQuiver, StableError> {
    let mut seen = BTreeSet::from([center.clone()]);
    let mut queue = VecDeque::from([(center.clone(), 0)]);
    while let Some((obj, d)) = queue.pop_front() {
        if d == radius {
            continue;
        }
        let m = mesh(an, &obj)?;
        for next in m.into.into_iter().chain(m.out_of).chain([m.tau, m.tau_inv]) {
            if seen.insert(next.clone()) {
                queue.push_back((next, d + 1));
            }
        }
    }
    let note = format!("ball of radius {radius} around {}", an.format_object(center));
    Builder::new(an, true, seen.into_iter().collect()).build(vec![note])
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

/// Graphviz rendering: solid arrows for irreducible maps, dashed undirected τ-edges.
pub fn emit_dot(q: &TranslationQuiver) -> String {
    let mut out = String::from("digraph ar {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n");
    for note in &q.notes {
        let _ = writeln!(out, "  // {note}");
    }
    let classes: BTreeSet<usize> = q.vertices.iter().map(|v| v.class).collect();
    for c in classes {
        let _ = writeln!(out, "  subgraph cluster_{c} {{");
        let _ = writeln!(out, "    label={};", quote(&format!("class {}", c + 1)));
        let mut ranks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for k in q.class_vertices(c) {
            let v = &q.vertices[k];
            let style = if v.incomplete { ", style=dashed" } else { "" };
            let _ =
                writeln!(out, "    n{k} [label={}{style}];", quote(&format!("{}\\n{}", v.label(), v.path)));
            ranks.entry(v.len).or_default().push(k);
        }
        for ks in ranks.values() {
            let ids: Vec<String> = ks.iter().map(|k| format!("n{k}")).collect();
            let _ = writeln!(out, "    {{ rank=same; {} }}", ids.join("; "));
        }
        out.push_str("  }\n");
    }
    for a in &q.arrows {
        let _ = writeln!(out, "  n{} -> n{};", a.from, a.to);
    }
    for (c, a) in &q.tau {
        let _ = writeln!(out, "  n{c} -> n{a} [style=dashed, dir=none, constraint=false];");
    }
    out.push_str("}\n");
    out
}

pub fn emit_json(q: &TranslationQuiver) -> String {
    serde_json::to_string_pretty(q).expect("plain data")
}

/// Hasse quiver in Graphviz form, one node per perfect path, in path order.
pub fn emit_hasse_dot(an: &Analysis, h: &HasseQuiver) -> String {
    let mut out = format!("digraph hasse_{} {{\n  rankdir=LR;\n", h.order);
    for (k, v) in h.vertices.iter().enumerate() {
        let _ = writeln!(out, "  n{k} [label={}];", quote(&an.format(v)));
    }
    let id = |p| h.vertices.iter().position(|v| v == p).expect("vertex");
    for (s, t) in &h.arrows {
        let _ = writeln!(out, "  n{} -> n{};", id(s), id(t));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct HasseJson {
    order: String,
    vertices: Vec<String>,
    arrows: Vec<(String, String)>,
    components: Vec<Vec<String>>,
    sources: Vec<String>,
    sinks: Vec<String>,
}

pub fn emit_hasse_json(an: &Analysis, h: &HasseQuiver) -> String {
    let f = |ps: &[crate::path::Path]| ps.iter().map(|p| an.format(p)).collect::<Vec<_>>();
    let doc = HasseJson {
        order: h.order.to_string(),
        vertices: f(&h.vertices),
        arrows: h.arrows.iter().map(|(s, t)| (an.format(s), an.format(t))).collect(),
        components: h.components().iter().map(|c| f(c)).collect(),
        sources: f(&h.sources()),
        sinks: f(&h.sinks()),
    };
    serde_json::to_string_pretty(&doc).expect("plain data")
}
