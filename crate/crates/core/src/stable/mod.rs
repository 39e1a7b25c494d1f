//! Labelled indecomposables of the graded and ungraded stable categories, and the
//! closed-form operations on them.

mod ar;
mod classify;
mod hom;
mod suspension;
mod tilting;

use serde::Serialize;

pub use ar::{ar_translate, ar_translate_inverse, ar_triangle, tau_periodicity_check, ArTriangle};
pub use classify::{classify, ClassificationReport, GradedFactor, GradingMode, NakayamaFactor};
pub use hom::{graded_stable_hom, ungraded_stable_hom, HomDescription, HomWitness};
pub use suspension::{suspend, suspend_closed_form};
pub use tilting::{
    end_algebra, tilting_object, tilting_orthogonality, EndBlock, OrthogonalityReport, TiltingSummand,
};

use crate::analysis::{Analysis, Coordinates};
use crate::error::StableError;
use crate::path::Path;

/// `pΛ(shift)` for a perfect path `p`, or the zero object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GradedObject {
    Zero,
    Shifted { path: Path, shift: i64 },
}

impl GradedObject {
    pub fn new(path: Path, shift: i64) -> Self {
        GradedObject::Shifted { path, shift }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, GradedObject::Zero)
    }

    pub fn path(&self) -> Option<&Path> {
        match self {
            GradedObject::Zero => None,
            GradedObject::Shifted { path, .. } => Some(path),
        }
    }

    pub fn shift(&self) -> Option<i64> {
        match self {
            GradedObject::Zero => None,
            GradedObject::Shifted { shift, .. } => Some(*shift),
        }
    }

    /// `M(k)`.
    pub fn shifted(&self, k: i64) -> Self {
        match self {
            GradedObject::Zero => GradedObject::Zero,
            GradedObject::Shifted { path, shift } => GradedObject::new(path.clone(), shift + k),
        }
    }
}

/// `pΛ` in the ungraded stable category, or the zero object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum UngradedObject {
    Zero,
    Module(Path),
}

impl From<&GradedObject> for UngradedObject {
    fn from(g: &GradedObject) -> Self {
        match g {
            GradedObject::Zero => UngradedObject::Zero,
            GradedObject::Shifted { path, .. } => UngradedObject::Module(path.clone()),
        }
    }
}

/// A located non-zero object: bracket coordinates plus shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Located {
    pub co: Coordinates,
    pub shift: i64,
}

impl Located {
    pub fn i(&self) -> i64 {
        self.co.start as i64
    }

    pub fn j(&self) -> i64 {
        (self.co.start + self.co.len) as i64 - 1
    }
}

pub(crate) fn locate(an: &Analysis, obj: &GradedObject, what: &'static str) -> Result<Located, StableError> {
    match obj {
        GradedObject::Zero => Err(StableError::ZeroObject(what)),
        GradedObject::Shifted { path, shift } => {
            let co = an.coordinates(path).ok_or_else(|| StableError::NotPerfect(an.format(path)))?;
            Ok(Located { co, shift: *shift })
        }
    }
}

/// `[i, j]Λ(shift)`, or zero when the bracket is trivial or lies in the ideal.
pub(crate) fn bracket_object(an: &Analysis, class: usize, i: i64, j: i64, shift: i64) -> GradedObject {
    match an.bracket(class, i, j).path {
        Some(p) if !p.is_trivial() => GradedObject::new(p, shift),
        _ => GradedObject::Zero,
    }
}

impl Analysis {
    /// Renders `pΛ(k)` as `a1.a2(k)`; the zero object as `0`.
    pub fn format_object(&self, obj: &GradedObject) -> String {
        match obj {
            GradedObject::Zero => "0".into(),
            GradedObject::Shifted { path, shift } => format!("{}({shift})", self.format(path)),
        }
    }

    /// Every `pΛ(shift)` for `p` in class `class`, ordered by bracket coordinates.
    pub fn class_objects(&self, class: usize, shift: i64) -> Vec<GradedObject> {
        let dec = self.decomposition(class);
        let mut out = Vec::new();
        for start in 1..=dec.n() as i64 {
            for len in 1..=dec.m as i64 {
                out.push(bracket_object(self, class, start, start + len - 1, shift));
            }
        }
        out
    }

    /// Every perfect path at shift zero, in path order.
    pub fn all_objects(&self) -> Vec<GradedObject> {
        self.perfect().paths().map(|p| GradedObject::new(p.clone(), 0)).collect()
    }
}
