//! The calculus of left fractions.
//!
//! A roof `(f, w)` with `cod(f) = cod(w)` and `w ∈ W` stands for the formal
//! fraction `w⁻¹ f` from `dom(f)` to `dom(w)`. Under the axioms L0, L1, L2
//! equivalence classes of roofs form the localized category `C[W⁻¹]`.

mod axioms;
mod localize;
mod roof;
mod weak;

use std::cmp::Ordering;
use std::fmt;

use crate::category::{FiniteCategory, MorphClass, MorphId, ObjId};
use crate::error::{Error, Result};

pub use axioms::{check_l0, check_l1, check_l2, saturate, Axiom, AxiomReport, Counterexample, Scope};
pub use localize::{factor_functor, localize, localize_right, FractionCategory, Side};
pub use roof::{
    compose_roofs, l1_complete, l1_witnesses, roof_equivalent, roof_equivalent_generated, roof_equivalent_in,
    roof_equivalent_weak, roof_partition, roofs_between, EquivWitness, L1Witness, RoofPartition,
};
pub use weak::{check_l1_prime, check_l2_prime, find_k, generate_wl, generate_wl_with_derivations, Factor, WeakClass};

/// A left roof `(f, w)`, read as `w⁻¹ ∘ f`.
///
/// Roofs order by `w` first, then `f`; the smallest roof of a class is its
/// canonical representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Roof {
    pub f: MorphId,
    pub w: MorphId,
}

impl Roof {
    pub fn new(f: MorphId, w: MorphId) -> Self {
        Roof { f, w }
    }

    /// The roof `(f, id)` representing `f` itself.
    pub fn of_morphism(c: &FiniteCategory, f: MorphId) -> Self {
        Roof::new(f, c.id(c.cod(f)))
    }

    /// The roof `(id, w)` representing `w⁻¹`.
    pub fn inverse_of(c: &FiniteCategory, w: MorphId) -> Self {
        Roof::new(c.id(c.cod(w)), w)
    }

    pub fn identity(c: &FiniteCategory, a: ObjId) -> Self {
        Roof::new(c.id(a), c.id(a))
    }

    pub fn source(&self, c: &FiniteCategory) -> ObjId {
        c.dom(self.f)
    }

    pub fn target(&self, c: &FiniteCategory) -> ObjId {
        c.dom(self.w)
    }

    pub fn apex(&self, c: &FiniteCategory) -> ObjId {
        c.cod(self.w)
    }

    /// Checks `cod(f) = cod(w)` and `w ∈ W`.
    pub fn check(&self, c: &FiniteCategory, w: &MorphClass) -> Result<()> {
        if self.f.0 >= c.num_morphisms() || self.w.0 >= c.num_morphisms() {
            return Err(Error::MalformedRoof(*self));
        }
        if c.cod(self.f) != c.cod(self.w) {
            return Err(Error::MalformedRoof(*self));
        }
        if !w.contains(self.w) {
            return Err(Error::NotInClass(self.w));
        }
        Ok(())
    }

    pub fn parallel(&self, c: &FiniteCategory, other: &Roof) -> bool {
        self.source(c) == other.source(c) && self.target(c) == other.target(c)
    }

    pub fn display<'a>(&'a self, c: &'a FiniteCategory) -> RoofDisplay<'a> {
        RoofDisplay { roof: self, c }
    }
}

impl Ord for Roof {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.w, self.f).cmp(&(other.w, other.f))
    }
}

impl PartialOrd for Roof {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders a roof as `(<f>,<w>)` using morphism names.
pub struct RoofDisplay<'a> {
    roof: &'a Roof,
    c: &'a FiniteCategory,
}

impl fmt::Display for RoofDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{})",
            self.c.morphism_name(self.roof.f),
            self.c.morphism_name(self.roof.w)
        )
    }
}

pub(crate) fn check_universe(c: &FiniteCategory, w: &MorphClass) -> Result<()> {
    if w.universe() != c.num_morphisms() {
        return Err(Error::ClassMismatch {
            expected: c.num_morphisms(),
            found: w.universe(),
        });
    }
    Ok(())
}
