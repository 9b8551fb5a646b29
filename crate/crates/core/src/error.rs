use thiserror::Error;

use crate::category::MorphId;
use crate::format::ParseError;
use crate::fractions::{AxiomReport, Roof};
use crate::report::ValidationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid category: {0}")]
    InvalidCategory(ValidationReport),
    #[error("invalid functor: {0}")]
    InvalidFunctor(ValidationReport),
    #[error("invalid preadditive structure: {0}")]
    InvalidPreadditive(ValidationReport),
    #[error("morphism {0} is not in the class W")]
    NotInClass(MorphId),
    #[error("class W belongs to a category with {found} morphisms, expected {expected}")]
    ClassMismatch { expected: usize, found: usize },
    #[error("roofs {0:?} and {1:?} are not parallel")]
    Parallelism(Roof, Roof),
    #[error("roofs {0:?} and {1:?} are not composable")]
    Composability(Roof, Roof),
    #[error("malformed roof {0:?}")]
    MalformedRoof(Roof),
    #[error("morphisms w={w} and f={f} do not share a domain")]
    NotCoinitial { w: MorphId, f: MorphId },
    #[error("no (L1) completion for w={w} f={f}")]
    NoWitness { w: MorphId, f: MorphId },
    #[error("axiom {0} fails")]
    AxiomFailure(AxiomReport),
    #[error("functor does not invert W: F({0}) is not an iso")]
    NotLocal(MorphId),
    #[error("functor source is not the localized category")]
    FunctorSourceMismatch,
    #[error("decomposition does not compose to {0}")]
    BadDecomposition(MorphId),
    #[error("generated roof equivalence disagrees with witness search on {0:?} ~ {1:?}")]
    InconsistentPartition(Roof, Roof),
    #[error("localization does not invert {0}")]
    NotInverted(MorphId),
    #[error("class of {0:?} is not loc(w)^-1 . loc(f)")]
    NotGeneratedByLoc(Roof),
    #[error("functor value not constant on the class of {0:?}")]
    FactorNotWellDefined(Roof),
    #[error("maxLen {max_len} is shorter than input length {needed}")]
    Bounds { max_len: usize, needed: usize },
    #[error("word oracle disagrees with roof classes on {0:?} vs {1:?}")]
    Disagreement(Roof, Roof),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
