//! Labelled spaces, their inverse semigroups, tight spectra, the boundary-path
//! groupoid and its symbolic convolution algebra, computed exactly on finite
//! labelled graphs.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod family;
pub mod filters;
pub mod graph;
pub mod groupoid;
pub mod semigroup;
pub mod surgery;
pub mod word;

pub use error::{Error, Result};
pub use family::{AccommodatingFamily, FamilyChoice, LabelledSpace, RestrictedAlgebra};
pub use graph::{LabelledGraph, VertexSet};
pub use word::{Lasso, LassoWord, Letter, Word};
pub use algebra::{AlgebraElement, NormalForm, RelationReport};
pub use filters::TightFilter;
pub use groupoid::{Cylinder, Germ, GroupoidElement};
pub use semigroup::{SemigroupElement, Triple};
pub use surgery::Ultrafilter;
