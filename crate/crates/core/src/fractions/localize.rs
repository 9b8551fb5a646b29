//! Construction of `C[W⁻¹]` from roof classes and its universal property.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use super::axioms::{check_l0, check_l1, check_l2, Scope};
use super::roof::{compose_roofs, roof_equivalent, roof_partition};
use super::{check_universe, Roof};
use crate::category::{FiniteCategory, MorphClass, MorphId, Morphism, ObjId};
use crate::error::{Error, Result};
use crate::functor::Functor;

/// Whether classes are left fractions `w⁻¹ f` or right fractions `f w⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The category of fractions together with its localization functor.
///
/// Morphisms of `base` are roof classes. For [`Side::Right`] the stored
/// roofs live in the opposite of `source`: `(f, w)` there is the right
/// fraction `f ∘ w⁻¹` with `dom(f) = dom(w)`.
#[derive(Debug, Clone)]
pub struct FractionCategory {
    pub side: Side,
    pub source: Arc<FiniteCategory>,
    pub w: MorphClass,
    pub base: Arc<FiniteCategory>,
    pub loc: Functor,
    /// The category the roofs live in: `source` for left fractions, its
    /// opposite for right fractions.
    roof_host: FiniteCategory,
    reps: Vec<Roof>,
    members: Vec<Vec<Roof>>,
    class_of: HashMap<Roof, MorphId>,
}

fn require_axioms(c: &FiniteCategory, w: &MorphClass) -> Result<()> {
    let report = c.validate();
    if !report.is_valid() {
        return Err(Error::InvalidCategory(report));
    }
    check_universe(c, w)?;
    for report in [
        check_l0(c, w, Scope::First),
        check_l1(c, w, Scope::First),
        check_l2(c, w, Scope::First),
    ] {
        if !report.holds() {
            return Err(Error::AxiomFailure(report));
        }
    }
    Ok(())
}

type Built = (FiniteCategory, Vec<Roof>, Vec<Vec<Roof>>, HashMap<Roof, MorphId>);

fn build_left(c: &FiniteCategory, w: &MorphClass) -> Result<Built> {
    let mut reps = Vec::new();
    let mut members = Vec::new();
    let mut class_of = HashMap::new();
    let mut morphisms = Vec::new();
    for a in c.objects() {
        for b in c.objects() {
            let partition = roof_partition(c, w, a, b);
            let class_reps = partition.representatives();
            for (i, rep) in class_reps.iter().enumerate() {
                let id = MorphId(reps.len());
                let class_members: Vec<Roof> = partition.members(i).copied().collect();
                for r in &class_members {
                    // the generated relation must agree with direct witness search
                    if roof_equivalent(c, w, rep, r)?.is_none() {
                        return Err(Error::InconsistentPartition(*rep, *r));
                    }
                    class_of.insert(*r, id);
                }
                reps.push(*rep);
                members.push(class_members);
                morphisms.push(Morphism {
                    name: rep.display(c).to_string(),
                    dom: a,
                    cod: b,
                });
            }
        }
    }
    let identity: Vec<MorphId> = c.objects().map(|a| class_of[&Roof::identity(c, a)]).collect();
    let objects = c.objects().map(|a| c.object_name(a).to_string()).collect();

    let mut table = HashMap::new();
    for (i, r1) in reps.iter().enumerate() {
        for (j, r2) in reps.iter().enumerate() {
            if r1.target(c) == r2.source(c) {
                let composite = compose_roofs(c, w, r1, r2)?;
                table.insert((MorphId(j), MorphId(i)), class_of[&composite]);
            }
        }
    }
    let base = FiniteCategory::from_fn(objects, morphisms, identity, |g, f| table[&(g, f)]);
    Ok((base, reps, members, class_of))
}

/// Builds `C[W⁻¹]` as the category of roof classes. Fails with the first
/// counterexample if L0, L1 or L2 does not hold.
pub fn localize(c: &FiniteCategory, w: &MorphClass) -> Result<FractionCategory> {
    require_axioms(c, w)?;
    let (base, reps, members, class_of) = build_left(c, w)?;
    let source = Arc::new(c.clone());
    let base = Arc::new(base);
    let mor_map = c.morphisms().map(|f| class_of[&Roof::of_morphism(c, f)]).collect();
    let loc = Functor::new(source.clone(), base.clone(), c.objects().collect(), mor_map);
    let fc = FractionCategory {
        side: Side::Left,
        source,
        w: w.clone(),
        base,
        loc,
        roof_host: c.clone(),
        reps,
        members,
        class_of,
    };
    fc.verify()?;
    Ok(fc)
}

/// Category of right fractions, built by localizing the opposite category
/// and dualizing back. Axiom failures are reported as R1/R2.
pub fn localize_right(c: &FiniteCategory, w: &MorphClass) -> Result<FractionCategory> {
    let op = c.opposite();
    let report = c.validate();
    if !report.is_valid() {
        return Err(Error::InvalidCategory(report));
    }
    require_axioms(&op, w).map_err(|e| match e {
        Error::AxiomFailure(r) => Error::AxiomFailure(r.dualized()),
        other => other,
    })?;
    let (op_base, reps, members, class_of) = build_left(&op, w)?;
    let source = Arc::new(c.clone());
    let base = Arc::new(op_base.opposite());
    let mor_map = c.morphisms().map(|f| class_of[&Roof::of_morphism(&op, f)]).collect();
    let loc = Functor::new(source.clone(), base.clone(), c.objects().collect(), mor_map);
    let fc = FractionCategory {
        side: Side::Right,
        source,
        w: w.clone(),
        base,
        loc,
        roof_host: op,
        reps,
        members,
        class_of,
    };
    fc.verify()?;
    Ok(fc)
}

impl FractionCategory {
    /// The category the stored roofs live in.
    pub fn roof_category(&self) -> &FiniteCategory {
        &self.roof_host
    }

    /// Canonical (smallest) roof of a class.
    pub fn representative(&self, class: MorphId) -> Roof {
        self.reps[class.0]
    }

    pub fn members(&self, class: MorphId) -> &[Roof] {
        &self.members[class.0]
    }

    pub fn class_of(&self, r: &Roof) -> Option<MorphId> {
        self.class_of.get(r).copied()
    }

    /// Classes from `a` to `b` in the localized category.
    pub fn hom_classes(&self, a: ObjId, b: ObjId) -> &[MorphId] {
        self.base.hom(a, b)
    }

    /// The class of `(id, w)`, inverse to `loc(w)`.
    pub fn formal_inverse(&self, w: MorphId) -> Option<MorphId> {
        self.class_of(&Roof::inverse_of(&self.roof_host, w))
    }

    /// Checks the structural guarantees: `base` is a category, `loc` is a
    /// functor, every `w ∈ W` becomes an iso with inverse `(id, w)`, and
    /// every class factors through `loc` and those inverses.
    pub fn verify(&self) -> Result<()> {
        let report = self.base.validate();
        if !report.is_valid() {
            return Err(Error::InvalidCategory(report));
        }
        let report = self.loc.check();
        if !report.is_valid() {
            return Err(Error::InvalidFunctor(report));
        }
        for w in self.w.iter() {
            let image = self.loc.mor(w);
            match (self.base.is_iso(image), self.formal_inverse(w)) {
                (Some(inv), Some(formal)) if inv == formal => {}
                _ => return Err(Error::NotInverted(w)),
            }
        }
        self.check_generated_by_loc()
    }

    /// Every class `[(f, w)]` equals `loc(w)⁻¹ ∘ loc(f)` (left) or
    /// `loc(f) ∘ loc(w)⁻¹` (right), so a functor out of `C[W⁻¹]` is fixed by
    /// its composite with `loc`.
    pub fn check_generated_by_loc(&self) -> Result<()> {
        for (class, members) in self.members.iter().enumerate() {
            for roof in members {
                self.check_factorization(roof, MorphId(class))?;
            }
        }
        Ok(())
    }

    fn check_factorization(&self, roof: &Roof, class: MorphId) -> Result<()> {
        let lf = self.loc.mor(roof.f);
        let inv = self
            .base
            .is_iso(self.loc.mor(roof.w))
            .ok_or(Error::NotInverted(roof.w))?;
        let composite = match self.side {
            Side::Left => self.base.comp(inv, lf),
            Side::Right => self.base.comp(lf, inv),
        };
        if composite != Some(class) {
            return Err(Error::NotGeneratedByLoc(*roof));
        }
        Ok(())
    }

    /// `hom <A> <B>: <n> classes` followed by one `class <i>: (<f>,<w>)` line
    /// per class.
    pub fn render_hom(&self, a: ObjId, b: ObjId) -> String {
        let classes = self.hom_classes(a, b);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "hom {} {}: {} classes",
            self.base.object_name(a),
            self.base.object_name(b),
            classes.len()
        );
        for (i, class) in classes.iter().enumerate() {
            let _ = writeln!(
                out,
                "class {i}: {}",
                self.representative(*class).display(&self.roof_host)
            );
        }
        out
    }

    /// All hom-sets in object order.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for a in self.base.objects() {
            for b in self.base.objects() {
                out.push_str(&self.render_hom(a, b));
            }
        }
        out
    }
}

/// The unique `G: C[W⁻¹] → D` with `G ∘ loc = F`, given by
/// `[(f, w)] ↦ F(w)⁻¹ ∘ F(f)` (or `F(f) ∘ F(w)⁻¹` for right fractions).
pub fn factor_functor(l: &FractionCategory, f: &Functor) -> Result<Functor> {
    if *f.source != *l.source {
        return Err(Error::FunctorSourceMismatch);
    }
    let report = f.check();
    if !report.is_valid() {
        return Err(Error::InvalidFunctor(report));
    }
    let d = &*f.target;
    let mut inverses = HashMap::new();
    for w in l.w.iter() {
        let inv = d.is_iso(f.mor(w)).ok_or(Error::NotLocal(w))?;
        inverses.insert(w, inv);
    }
    let value = |r: &Roof| -> Option<MorphId> {
        let fw_inv = inverses[&r.w];
        match l.side {
            Side::Left => d.comp(fw_inv, f.mor(r.f)),
            Side::Right => d.comp(f.mor(r.f), fw_inv),
        }
    };
    let mut mor_map = Vec::with_capacity(l.base.num_morphisms());
    for class in l.base.morphisms() {
        let rep = l.representative(class);
        let v = value(&rep).ok_or(Error::FactorNotWellDefined(rep))?;
        for member in l.members(class) {
            if value(member) != Some(v) {
                return Err(Error::FactorNotWellDefined(*member));
            }
        }
        mor_map.push(v);
    }
    let g = Functor::new(l.base.clone(), f.target.clone(), f.obj_map.clone(), mor_map);
    let report = g.check();
    if !report.is_valid() {
        return Err(Error::InvalidFunctor(report));
    }
    let composite = l.loc.then(&g).ok_or(Error::FunctorSourceMismatch)?;
    if composite != *f {
        return Err(Error::FunctorSourceMismatch);
    }
    l.check_generated_by_loc()?;
    Ok(g)
}
