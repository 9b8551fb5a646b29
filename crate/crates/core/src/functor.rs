//! Functors between finite categories.

use std::sync::Arc;

use crate::category::{FiniteCategory, MorphId, ObjId};
use crate::report::{ValidationReport, Violation};

/// A pair of object and morphism maps between two finite categories.
///
/// Functoriality is not enforced on construction; see [`Functor::check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    pub source: Arc<FiniteCategory>,
    pub target: Arc<FiniteCategory>,
    pub obj_map: Vec<ObjId>,
    pub mor_map: Vec<MorphId>,
}

impl Functor {
    pub fn new(
        source: Arc<FiniteCategory>,
        target: Arc<FiniteCategory>,
        obj_map: Vec<ObjId>,
        mor_map: Vec<MorphId>,
    ) -> Self {
        Functor {
            source,
            target,
            obj_map,
            mor_map,
        }
    }

    pub fn identity(c: Arc<FiniteCategory>) -> Self {
        let obj_map = c.objects().collect();
        let mor_map = c.morphisms().collect();
        Functor {
            source: c.clone(),
            target: c,
            obj_map,
            mor_map,
        }
    }

    pub fn obj(&self, a: ObjId) -> ObjId {
        self.obj_map[a.0]
    }

    pub fn mor(&self, f: MorphId) -> MorphId {
        self.mor_map[f.0]
    }

    /// `other ∘ self`. Returns `None` if the middle categories differ.
    pub fn then(&self, other: &Functor) -> Option<Functor> {
        if *self.target != *other.source {
            return None;
        }
        Some(Functor {
            source: self.source.clone(),
            target: other.target.clone(),
            obj_map: self.obj_map.iter().map(|a| other.obj(*a)).collect(),
            mor_map: self.mor_map.iter().map(|f| other.mor(*f)).collect(),
        })
    }

    /// Exhaustive check of endpoint, identity and composition preservation.
    /// Stops at the first violation.
    pub fn check(&self) -> ValidationReport {
        let mut report = ValidationReport::new("functor");
        let (src, tgt) = (&*self.source, &*self.target);
        if self.obj_map.len() != src.num_objects() {
            report.push(Violation::ObjectMapOutOfRange {
                object: ObjId(self.obj_map.len()),
            });
            return report;
        }
        if self.mor_map.len() != src.num_morphisms() {
            report.push(Violation::MorphismMapOutOfRange {
                f: MorphId(self.mor_map.len()),
            });
            return report;
        }
        if let Some(a) = src.objects().find(|a| self.obj(*a).0 >= tgt.num_objects()) {
            report.push(Violation::ObjectMapOutOfRange { object: a });
            return report;
        }
        if let Some(f) = src.morphisms().find(|f| self.mor(*f).0 >= tgt.num_morphisms()) {
            report.push(Violation::MorphismMapOutOfRange { f });
            return report;
        }
        for f in src.morphisms() {
            let image = self.mor(f);
            if tgt.dom(image) != self.obj(src.dom(f)) || tgt.cod(image) != self.obj(src.cod(f)) {
                report.push(Violation::EndpointNotPreserved { f });
                return report;
            }
        }
        for a in src.objects() {
            if self.mor(src.id(a)) != tgt.id(self.obj(a)) {
                report.push(Violation::IdentityNotPreserved { object: a });
                return report;
            }
        }
        for g in src.morphisms() {
            for &f in src.into(src.dom(g)) {
                let Some(gf) = src.comp(g, f) else { continue };
                if tgt.comp(self.mor(g), self.mor(f)) != Some(self.mor(gf)) {
                    report.push(Violation::CompositionNotPreserved { g, f });
                    return report;
                }
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn collapse_interval() -> Functor {
        let interval = Arc::new(fixtures::interval().category);
        let point = Arc::new(fixtures::point());
        let x = ObjId(0);
        let id_x = point.id(x);
        Functor::new(
            interval.clone(),
            point,
            vec![x, x],
            vec![id_x; interval.num_morphisms()],
        )
    }

    #[test]
    fn identity_functor_is_valid() {
        let c = Arc::new(fixtures::interval().category);
        assert!(Functor::identity(c).check().is_valid());
    }

    #[test]
    fn collapsing_functor_is_valid() {
        assert!(collapse_interval().check().is_valid());
    }

    #[test]
    fn codomain_mismatch_is_reported() {
        let c = Arc::new(fixtures::interval().category);
        let u = c.morphism_by_name("u").unwrap();
        let id0 = c.morphism_by_name("id_0").unwrap();
        let mut f = Functor::identity(c);
        f.mor_map[u.0] = id0;
        let report = f.check();
        assert_eq!(report.violations(), [Violation::EndpointNotPreserved { f: u }]);
    }

    #[test]
    fn composition_of_functors() {
        let c = Arc::new(fixtures::interval().category);
        let collapse = collapse_interval();
        let composed = Functor::identity(c).then(&collapse).unwrap();
        assert_eq!(composed, collapse);
        assert!(collapse.then(&collapse).is_none());
    }
}
