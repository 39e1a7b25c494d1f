//! Perfect paths and the (graded) stable category of Gorenstein-projective modules over a
//! finite-dimensional monomial algebra, computed combinatorially.
//!
//! Typical use:
//!
//! ```
//! use gproj_core::{fixtures, Analysis};
//!
//! let an = Analysis::new(fixtures::lambda_star()).unwrap();
//! assert_eq!(an.perfect().len(), 11);
//! assert_eq!(an.classes().len(), 2);
//! ```

pub mod algebra;
pub mod analysis;
pub mod arquiver;
pub mod cycle;
pub mod decomposition;
pub mod error;
pub mod fixtures;
pub mod oracle;
pub mod order;
pub mod path;
pub mod perfect;
pub mod quiver;
pub mod stable;
pub mod verify;

pub use algebra::{parse_algebra, AlgebraDocument, ArrowSpec, MonomialAlgebra};
pub use analysis::{Analysis, Coordinates};
pub use arquiver::{ArArrow, ArVertex, TranslationQuiver};
pub use cycle::UnderlyingCycleClass;
pub use decomposition::{BracketPath, CycleDecomposition, CyclePredicates};
pub use error::{AlgebraError, ConsistencyError, PathError, StableError};
pub use order::{Comparison, HasseQuiver, PathOrder};
pub use path::{relate, ArrowId, Path, PathRelation, Vertex};
pub use perfect::{MinimalPerfectSequence, Overlap, OverlapKind, PerfectPathRecord, PerfectPaths};
pub use quiver::{Arrow, Quiver};
