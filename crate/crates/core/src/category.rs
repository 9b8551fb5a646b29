//! Finite categories with explicit composition tables.
//!
//! Objects and morphisms are dense integer ids assigned in declaration
//! order. Composition is a lookup in an `n × n` table where entry
//! `(g, f)` holds `g ∘ f` whenever `cod(f) = dom(g)`.

use std::fmt;

use crate::report::{ValidationReport, Violation};

/// Object identifier, dense in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjId(pub usize);

/// Morphism identifier, dense in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorphId(pub usize);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for MorphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub dom: ObjId,
    pub cod: ObjId,
}

/// A finite category given by its full composition table.
///
/// The structure is immutable once built. Construction only checks that
/// ids are in range; the category axioms are checked by
/// [`FiniteCategory::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identity: Vec<MorphId>,
    table: Vec<Option<MorphId>>,
    // morphisms indexed by (dom, cod), each list ascending
    homs: Vec<Vec<MorphId>>,
    outgoing: Vec<Vec<MorphId>>,
    incoming: Vec<Vec<MorphId>>,
}

/// Incrementally assembles a [`FiniteCategory`].
#[derive(Debug, Default, Clone)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identity: Vec<Option<MorphId>>,
    composites: Vec<(MorphId, MorphId, MorphId)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("object {0} has no identity morphism")]
    MissingIdentity(String),
    #[error("id out of range: {0}")]
    OutOfRange(String),
    #[error("composite {g} . {f} is defined twice")]
    DuplicateComposite { g: String, f: String },
    #[error("composite {g} . {f} is declared but cod({f}) != dom({g})")]
    NotComposable { g: String, f: String },
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(&mut self, name: impl Into<String>) -> ObjId {
        self.objects.push(name.into());
        self.identity.push(None);
        ObjId(self.objects.len() - 1)
    }

    pub fn morphism(&mut self, name: impl Into<String>, dom: ObjId, cod: ObjId) -> MorphId {
        self.morphisms.push(Morphism {
            name: name.into(),
            dom,
            cod,
        });
        MorphId(self.morphisms.len() - 1)
    }

    pub fn identity(&mut self, obj: ObjId, mor: MorphId) -> &mut Self {
        if let Some(slot) = self.identity.get_mut(obj.0) {
            *slot = Some(mor);
        }
        self
    }

    /// Records `g ∘ f = h`.
    pub fn compose(&mut self, g: MorphId, f: MorphId, h: MorphId) -> &mut Self {
        self.composites.push((g, f, h));
        self
    }

    pub fn build(self) -> Result<FiniteCategory, BuildError> {
        let n_obj = self.objects.len();
        let n = self.morphisms.len();
        for m in &self.morphisms {
            if m.dom.0 >= n_obj || m.cod.0 >= n_obj {
                return Err(BuildError::OutOfRange(m.name.clone()));
            }
        }
        let mut identity = Vec::with_capacity(n_obj);
        for (i, id) in self.identity.iter().enumerate() {
            match id {
                Some(m) if m.0 < n => identity.push(*m),
                Some(m) => return Err(BuildError::OutOfRange(format!("identity {}", m.0))),
                None => return Err(BuildError::MissingIdentity(self.objects[i].clone())),
            }
        }
        let mut table = vec![None; n * n];
        for &(g, f, h) in &self.composites {
            if g.0 >= n || f.0 >= n || h.0 >= n {
                return Err(BuildError::OutOfRange(format!("composite ({}, {}, {})", g.0, f.0, h.0)));
            }
            let (gm, fm) = (&self.morphisms[g.0], &self.morphisms[f.0]);
            if fm.cod != gm.dom {
                return Err(BuildError::NotComposable {
                    g: gm.name.clone(),
                    f: fm.name.clone(),
                });
            }
            let slot = &mut table[g.0 * n + f.0];
            if slot.is_some() {
                return Err(BuildError::DuplicateComposite {
                    g: gm.name.clone(),
                    f: fm.name.clone(),
                });
            }
            *slot = Some(h);
        }
        Ok(FiniteCategory::assemble(self.objects, self.morphisms, identity, table))
    }
}

impl FiniteCategory {
    fn assemble(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identity: Vec<MorphId>,
        table: Vec<Option<MorphId>>,
    ) -> Self {
        let n_obj = objects.len();
        let mut homs = vec![Vec::new(); n_obj * n_obj];
        let mut outgoing = vec![Vec::new(); n_obj];
        let mut incoming = vec![Vec::new(); n_obj];
        for (i, m) in morphisms.iter().enumerate() {
            homs[m.dom.0 * n_obj + m.cod.0].push(MorphId(i));
            outgoing[m.dom.0].push(MorphId(i));
            incoming[m.cod.0].push(MorphId(i));
        }
        FiniteCategory {
            objects,
            morphisms,
            identity,
            table,
            homs,
            outgoing,
            incoming,
        }
    }

    /// The category with no objects.
    pub fn empty() -> Self {
        Self::assemble(Vec::new(), Vec::new(), Vec::new(), Vec::new())
    }

    /// Builds a category from a composition rule on already-declared
    /// morphisms. `compose` is consulted for every composable pair.
    pub fn from_fn(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identity: Vec<MorphId>,
        mut compose: impl FnMut(MorphId, MorphId) -> MorphId,
    ) -> Self {
        let n = morphisms.len();
        let mut table = vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                if morphisms[f].cod == morphisms[g].dom {
                    table[g * n + f] = Some(compose(MorphId(g), MorphId(f)));
                }
            }
        }
        Self::assemble(objects, morphisms, identity, table)
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl ExactSizeIterator<Item = ObjId> + '_ {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn morphisms(&self) -> impl ExactSizeIterator<Item = MorphId> + '_ {
        (0..self.morphisms.len()).map(MorphId)
    }

    pub fn object_name(&self, a: ObjId) -> &str {
        &self.objects[a.0]
    }

    pub fn morphism_name(&self, f: MorphId) -> &str {
        &self.morphisms[f.0].name
    }

    pub fn morphism(&self, f: MorphId) -> &Morphism {
        &self.morphisms[f.0]
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name).map(ObjId)
    }

    pub fn morphism_by_name(&self, name: &str) -> Option<MorphId> {
        self.morphisms.iter().position(|m| m.name == name).map(MorphId)
    }

    pub fn dom(&self, f: MorphId) -> ObjId {
        self.morphisms[f.0].dom
    }

    pub fn cod(&self, f: MorphId) -> ObjId {
        self.morphisms[f.0].cod
    }

    pub fn id(&self, a: ObjId) -> MorphId {
        self.identity[a.0]
    }

    pub fn is_identity(&self, f: MorphId) -> bool {
        self.identity[self.dom(f).0] == f
    }

    /// `g ∘ f`, or `None` when the pair is not composable.
    pub fn comp(&self, g: MorphId, f: MorphId) -> Option<MorphId> {
        self.table[g.0 * self.morphisms.len() + f.0]
    }

    /// `g ∘ f` for a pair already known to be composable in a valid category.
    pub fn then(&self, f: MorphId, g: MorphId) -> MorphId {
        self.comp(g, f).unwrap_or_else(|| {
            panic!(
                "composite {} . {} is undefined",
                self.morphism_name(g),
                self.morphism_name(f)
            )
        })
    }

    /// Composes a chain written in application order: `chain[0]` first.
    pub fn compose_chain(&self, chain: &[MorphId]) -> Option<MorphId> {
        let (&first, rest) = chain.split_first()?;
        rest.iter().try_fold(first, |acc, &g| self.comp(g, acc))
    }

    pub fn hom(&self, a: ObjId, b: ObjId) -> &[MorphId] {
        &self.homs[a.0 * self.objects.len() + b.0]
    }

    /// Morphisms with domain `a`.
    pub fn from(&self, a: ObjId) -> &[MorphId] {
        &self.outgoing[a.0]
    }

    /// Morphisms with codomain `b`.
    pub fn into(&self, b: ObjId) -> &[MorphId] {
        &self.incoming[b.0]
    }

    pub fn parallel(&self, f: MorphId, g: MorphId) -> bool {
        self.dom(f) == self.dom(g) && self.cod(f) == self.cod(g)
    }

    /// Checks every category axiom by exhaustive enumeration and reports
    /// all violations, each with its witness.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new("category");
        let n = self.morphisms.len();
        for a in self.objects() {
            let i = self.id(a);
            if self.dom(i) != a || self.cod(i) != a {
                report.push(Violation::IdentityEndpoints { object: a, identity: i });
            }
        }
        for g in self.morphisms() {
            for f in self.morphisms() {
                let composable = self.cod(f) == self.dom(g);
                match (composable, self.comp(g, f)) {
                    (true, None) => report.push(Violation::MissingComposite { g, f }),
                    (false, Some(_)) => report.push(Violation::SpuriousComposite { g, f }),
                    (true, Some(h)) => {
                        if self.dom(h) != self.dom(f) || self.cod(h) != self.cod(g) {
                            report.push(Violation::Coherence { g, f, composite: h });
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for f in self.morphisms() {
            if let Some(h) = self.comp(self.id(self.cod(f)), f) {
                if h != f {
                    report.push(Violation::LeftIdentity { f, got: h });
                }
            }
            if let Some(h) = self.comp(f, self.id(self.dom(f))) {
                if h != f {
                    report.push(Violation::RightIdentity { f, got: h });
                }
            }
        }
        for f in 0..n {
            for g in self.from(self.cod(MorphId(f))) {
                let Some(gf) = self.comp(*g, MorphId(f)) else { continue };
                for h in self.from(self.cod(*g)) {
                    let Some(hg) = self.comp(*h, *g) else { continue };
                    let left = self.comp(*h, gf);
                    let right = self.comp(hg, MorphId(f));
                    if left != right {
                        report.push(Violation::Associativity {
                            h: *h,
                            g: *g,
                            f: MorphId(f),
                        });
                    }
                }
            }
        }
        report
    }

    /// The opposite category: same ids, endpoints swapped,
    /// `op.comp(g, f) = self.comp(f, g)`.
    pub fn opposite(&self) -> FiniteCategory {
        let n = self.morphisms.len();
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| Morphism {
                name: m.name.clone(),
                dom: m.cod,
                cod: m.dom,
            })
            .collect();
        let mut table = vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                table[g * n + f] = self.table[f * n + g];
            }
        }
        Self::assemble(self.objects.clone(), morphisms, self.identity.clone(), table)
    }

    /// The two-sided inverse of `f`, if any.
    pub fn is_iso(&self, f: MorphId) -> Option<MorphId> {
        let (a, b) = (self.dom(f), self.cod(f));
        self.hom(b, a)
            .iter()
            .copied()
            .find(|&g| self.comp(g, f) == Some(self.id(a)) && self.comp(f, g) == Some(self.id(b)))
    }

    /// Smallest-id left inverse `e` of `m` (`e ∘ m = id`).
    pub fn left_inverse(&self, m: MorphId) -> Option<MorphId> {
        let (a, b) = (self.dom(m), self.cod(m));
        self.hom(b, a)
            .iter()
            .copied()
            .find(|&e| self.comp(e, m) == Some(self.id(a)))
    }

    /// All morphisms admitting a left inverse.
    pub fn split_monos(&self) -> MorphClass {
        MorphClass::from_iter(self, self.morphisms().filter(|&m| self.left_inverse(m).is_some()))
    }

    /// The set of identity morphisms.
    pub fn identities(&self) -> MorphClass {
        MorphClass::from_iter(self, self.objects().map(|a| self.id(a)))
    }

    pub fn all_morphisms(&self) -> MorphClass {
        MorphClass::from_iter(self, self.morphisms())
    }
}

/// A set of morphisms of a fixed host category, stored as a membership mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MorphClass {
    mask: Vec<bool>,
}

impl MorphClass {
    pub fn empty(c: &FiniteCategory) -> Self {
        MorphClass {
            mask: vec![false; c.num_morphisms()],
        }
    }

    pub fn from_iter(c: &FiniteCategory, members: impl IntoIterator<Item = MorphId>) -> Self {
        let mut class = Self::empty(c);
        for m in members {
            class.insert(m);
        }
        class
    }

    /// Panics if `m` is outside the host category.
    pub fn insert(&mut self, m: MorphId) -> bool {
        let was = self.mask[m.0];
        self.mask[m.0] = true;
        !was
    }

    pub fn contains(&self, m: MorphId) -> bool {
        self.mask.get(m.0).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.contains(&true)
    }

    pub fn iter(&self) -> impl Iterator<Item = MorphId> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| MorphId(i))
    }

    pub fn union(&self, other: &MorphClass) -> MorphClass {
        MorphClass {
            mask: self.mask.iter().zip(&other.mask).map(|(a, b)| *a || *b).collect(),
        }
    }

    pub fn is_subset(&self, other: &MorphClass) -> bool {
        self.mask.iter().zip(&other.mask).all(|(a, b)| !*a || *b)
    }

    /// Size of the host category this class was created for.
    pub fn universe(&self) -> usize {
        self.mask.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_are_valid() {
        for (name, file) in fixtures::all() {
            let report = file.category.validate();
            assert!(report.is_valid(), "{name}: {report:?}");
        }
    }

    #[test]
    fn discrete_and_interval_validate() {
        assert!(fixtures::discrete2().category.validate().is_valid());
        assert!(fixtures::interval().category.validate().is_valid());
        assert!(FiniteCategory::empty().validate().is_valid());
    }

    #[test]
    fn corrupted_interval_reports_coherence() {
        let c = fixtures::interval().category;
        let (id1, u) = (c.morphism_by_name("id_1").unwrap(), c.morphism_by_name("u").unwrap());
        let mut table = c.table.clone();
        table[id1.0 * c.num_morphisms() + u.0] = Some(id1);
        let bad = FiniteCategory::assemble(c.objects.clone(), c.morphisms.clone(), c.identity.clone(), table);
        let report = bad.validate();
        assert!(!report.is_valid());
        assert_eq!(
            report.violations()[0],
            Violation::Coherence {
                g: id1,
                f: u,
                composite: id1
            }
        );
    }

    #[test]
    fn opposite_reverses_arrows() {
        let c = fixtures::interval().category;
        let op = c.opposite();
        let u = op.morphism_by_name("u").unwrap();
        assert_eq!(op.object_name(op.dom(u)), "1");
        assert_eq!(op.object_name(op.cod(u)), "0");
        assert_eq!(op.opposite(), c);
        let d = fixtures::discrete2().category;
        assert_eq!(d.opposite(), d);
        let s = fixtures::splitmono().category.opposite();
        assert!(s.validate().is_valid());
        // e is split mono in the opposite category, m is not
        let sm = s.split_monos();
        assert!(sm.contains(s.morphism_by_name("e").unwrap()));
        assert!(!sm.contains(s.morphism_by_name("m").unwrap()));
    }

    #[test]
    fn iso_search() {
        let c = fixtures::interval().category;
        let id0 = c.morphism_by_name("id_0").unwrap();
        assert_eq!(c.is_iso(id0), Some(id0));
        assert_eq!(c.is_iso(c.morphism_by_name("u").unwrap()), None);
        let r = fixtures::ring_z6().category;
        let five = r.morphism_by_name("5").unwrap();
        assert_eq!(r.is_iso(five), Some(five));
        assert_eq!(r.is_iso(r.morphism_by_name("3").unwrap()), None);
    }

    #[test]
    fn split_mono_scan() {
        let d = fixtures::discrete2().category;
        assert_eq!(d.split_monos(), d.identities());
        let i = fixtures::interval().category;
        assert_eq!(i.split_monos(), i.identities());
        let s = fixtures::splitmono().category;
        let names: Vec<_> = s.split_monos().iter().map(|m| s.morphism_name(m).to_string()).collect();
        assert_eq!(names, ["id_A", "id_B", "m"]);
    }

    #[test]
    fn builder_rejects_mismatched_composite() {
        let mut b = CategoryBuilder::new();
        let x = b.object("X");
        let y = b.object("Y");
        let ix = b.morphism("id_X", x, x);
        let iy = b.morphism("id_Y", y, y);
        let f = b.morphism("f", x, y);
        b.identity(x, ix).identity(y, iy);
        b.compose(f, iy, f);
        assert!(matches!(b.build(), Err(BuildError::NotComposable { .. })));
    }
}
