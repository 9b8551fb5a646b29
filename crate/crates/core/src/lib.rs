//! Localization of finite categories by a calculus of fractions.
//!
//! A [`FiniteCategory`] is stored as an explicit composition table. Given a
//! class of morphisms `W`, the [`fractions`] module checks the left-fraction
//! axioms, decides equivalence of roofs `(f, w)` and builds the category of
//! fractions `C[W⁻¹]` together with its localization functor. The
//! [`additive`] module carries a preadditive structure through the same
//! construction, and [`oracle`] decides equality of words in the free
//! localization by bounded rewriting, as an independent cross-check.

pub mod additive;
pub mod category;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod fractions;
pub mod functor;
pub mod oracle;
pub mod random;
pub mod report;
mod union_find;

pub use category::{CategoryBuilder, FiniteCategory, MorphClass, MorphId, Morphism, ObjId};
pub use error::{Error, Result};
pub use format::{parse_category, parse_functor, serialize_category, CategoryFile, ParseError};
pub use fractions::{AxiomReport, FractionCategory, Roof, Side};
pub use functor::Functor;
pub use report::{ValidationReport, Violation};
