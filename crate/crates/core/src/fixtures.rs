//! Small categories shipped with the crate as `.cat` files.

use std::sync::Arc;

use crate::category::FiniteCategory;
use crate::format::{parse_category, parse_functor, CategoryFile};
use crate::functor::Functor;

pub const DISCRETE2_TEXT: &str = include_str!("../fixtures/discrete2.cat");
pub const INTERVAL_TEXT: &str = include_str!("../fixtures/interval.cat");
pub const PARALLEL_NOCOEQ_TEXT: &str = include_str!("../fixtures/parallel_nocoeq.cat");
pub const SPLITMONO_TEXT: &str = include_str!("../fixtures/splitmono.cat");
pub const RING_Z2_TEXT: &str = include_str!("../fixtures/ring_z2.cat");
pub const RING_Z6_TEXT: &str = include_str!("../fixtures/ring_z6.cat");
pub const RING_Z8_TEXT: &str = include_str!("../fixtures/ring_z8.cat");
pub const MATRIX_Z2_TEXT: &str = include_str!("../fixtures/matrix_z2.cat");
pub const POINT_TEXT: &str = include_str!("../fixtures/point.cat");
pub const INTERVAL_TO_POINT_TEXT: &str = include_str!("../fixtures/interval_to_point.fun");
pub const RING_Z6_TO_Z2_TEXT: &str = include_str!("../fixtures/ring_z6_to_z2.fun");

fn load(text: &str) -> CategoryFile {
    parse_category(text).expect("bundled fixture parses")
}

/// Objects `X`, `Y` and their identities. W = identities.
pub fn discrete2() -> CategoryFile {
    load(DISCRETE2_TEXT)
}

/// `u: 0 -> 1` with W = all morphisms.
pub fn interval() -> CategoryFile {
    load(INTERVAL_TEXT)
}

/// `f1 . w = f2 . w = g` with `f1 != f2`; W = identities and `w`.
pub fn parallel_nocoeq() -> CategoryFile {
    load(PARALLEL_NOCOEQ_TEXT)
}

/// `e . m = id_A`, `m . e = p`; W = identities.
pub fn splitmono() -> CategoryFile {
    load(SPLITMONO_TEXT)
}

pub fn ring_z2() -> CategoryFile {
    load(RING_Z2_TEXT)
}

/// Multiplication mod 6, W = {1, 3}, addition mod 6.
pub fn ring_z6() -> CategoryFile {
    load(RING_Z6_TEXT)
}

/// Multiplication mod 8, W = {0, 1, 2, 4}, addition mod 8.
pub fn ring_z8() -> CategoryFile {
    load(RING_Z8_TEXT)
}

/// F2-vector spaces of rank 0, 1, 2 and all linear maps; W = identities.
pub fn matrix_z2() -> CategoryFile {
    load(MATRIX_Z2_TEXT)
}

/// The terminal category: one object `*`, one morphism `id`.
pub fn point() -> FiniteCategory {
    load(POINT_TEXT).category
}

/// The functor sending every morphism of the arrow category to the identity.
pub fn interval_to_point() -> Functor {
    parse_functor(INTERVAL_TO_POINT_TEXT, Arc::new(interval().category), Arc::new(point()))
        .expect("bundled fixture parses")
}

/// Reduction `Z/6 -> Z/2`, which inverts 3.
pub fn ring_z6_to_z2() -> Functor {
    parse_functor(
        RING_Z6_TO_Z2_TEXT,
        Arc::new(ring_z6().category),
        Arc::new(ring_z2().category),
    )
    .expect("bundled fixture parses")
}

pub fn all() -> Vec<(&'static str, CategoryFile)> {
    vec![
        ("DISCRETE2", discrete2()),
        ("INTERVAL", interval()),
        ("PARALLEL_NOCOEQ", parallel_nocoeq()),
        ("SPLITMONO", splitmono()),
        ("RING_Z2", ring_z2()),
        ("RING_Z6", ring_z6()),
        ("RING_Z8", ring_z8()),
        ("MATRIX_Z2", matrix_z2()),
        ("POINT", load(POINT_TEXT)),
    ]
}
