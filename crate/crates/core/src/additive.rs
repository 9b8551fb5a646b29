//! Preadditive structure: abelian groups on hom-sets, roof addition through
//! a common denominator, and the induced structure on `C[W⁻¹]`.

use crate::category::{FiniteCategory, MorphClass, MorphId, ObjId};
use crate::error::{Error, Result};
#[cfg(test)]
use crate::fractions::roof_equivalent;
use crate::fractions::{
    check_universe, l1_complete, Axiom, AxiomReport, Counterexample, FractionCategory, Roof, Scope, Side,
};
use crate::report::{ValidationReport, Violation};

/// Per hom-set abelian group tables over a fixed category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreadditiveStructure {
    n_obj: usize,
    n: usize,
    zero: Vec<MorphId>,
    add: Vec<Option<MorphId>>,
    neg: Vec<MorphId>,
}

impl PreadditiveStructure {
    /// `zero` is indexed by `(dom, cod)` row-major, `add` by `(f, g)`
    /// row-major over all morphisms, `neg` by morphism.
    pub fn from_parts(c: &FiniteCategory, zero: Vec<MorphId>, add: Vec<Option<MorphId>>, neg: Vec<MorphId>) -> Self {
        assert_eq!(zero.len(), c.num_objects() * c.num_objects());
        assert_eq!(add.len(), c.num_morphisms() * c.num_morphisms());
        assert_eq!(neg.len(), c.num_morphisms());
        PreadditiveStructure {
            n_obj: c.num_objects(),
            n: c.num_morphisms(),
            zero,
            add,
            neg,
        }
    }

    pub fn zero(&self, a: ObjId, b: ObjId) -> MorphId {
        self.zero[a.0 * self.n_obj + b.0]
    }

    pub fn add(&self, f: MorphId, g: MorphId) -> Option<MorphId> {
        self.add[f.0 * self.n + g.0]
    }

    pub fn neg(&self, f: MorphId) -> MorphId {
        self.neg[f.0]
    }

    /// Replaces one cell of the addition table.
    pub fn set_add(&mut self, f: MorphId, g: MorphId, h: MorphId) {
        self.add[f.0 * self.n + g.0] = Some(h);
    }

    fn zero_for(&self, c: &FiniteCategory, f: MorphId) -> MorphId {
        self.zero(c.dom(f), c.cod(f))
    }

    /// Objects whose identity is the zero endomorphism.
    pub fn zero_objects(&self, c: &FiniteCategory) -> Vec<ObjId> {
        c.objects().filter(|&a| c.id(a) == self.zero(a, a)).collect()
    }

    /// Exhaustively checks the abelian group laws on every hom-set,
    /// bilinearity of composition, and absorption by zero morphisms.
    pub fn validate(&self, c: &FiniteCategory) -> ValidationReport {
        let mut report = ValidationReport::new("preadditive");
        if self.n != c.num_morphisms() || self.n_obj != c.num_objects() {
            report.push(Violation::MorphismMapOutOfRange { f: MorphId(self.n) });
            return report;
        }
        for a in c.objects() {
            for b in c.objects() {
                let z = self.zero(a, b);
                if c.dom(z) != a || c.cod(z) != b {
                    report.push(Violation::ZeroNotInHom {
                        dom: a,
                        cod: b,
                        zero: z,
                    });
                }
            }
        }
        let mut closed = true;
        for f in c.morphisms() {
            for &g in c.hom(c.dom(f), c.cod(f)) {
                match self.add(f, g) {
                    None => {
                        report.push(Violation::AdditionUndefined { f1: f, f2: g });
                        closed = false;
                    }
                    Some(h) if !c.parallel(f, h) => {
                        report.push(Violation::AdditionLeavesHom { f1: f, f2: g, sum: h });
                        closed = false;
                    }
                    Some(_) => {}
                }
            }
            if !c.parallel(f, self.neg(f)) {
                report.push(Violation::NegationLeavesHom { f });
                closed = false;
            }
        }
        if !closed || !report.is_valid() {
            return report;
        }
        let add = |f: MorphId, g: MorphId| self.add(f, g).expect("closed");
        for f1 in c.morphisms() {
            let hom = c.hom(c.dom(f1), c.cod(f1));
            for &f2 in hom {
                if add(f1, f2) != add(f2, f1) {
                    report.push(Violation::AddCommutativity { f1, f2 });
                }
                for &f3 in hom {
                    if add(add(f1, f2), f3) != add(f1, add(f2, f3)) {
                        report.push(Violation::AddAssociativity { f1, f2, f3 });
                    }
                }
            }
            let z = self.zero_for(c, f1);
            if add(f1, z) != f1 || add(z, f1) != f1 {
                report.push(Violation::AddIdentity { f: f1 });
            }
            if add(f1, self.neg(f1)) != z {
                report.push(Violation::AddInverse { f: f1 });
            }
        }
        for f1 in c.morphisms() {
            for &f2 in c.hom(c.dom(f1), c.cod(f1)) {
                let sum = add(f1, f2);
                for &g in c.from(c.cod(f1)) {
                    if c.comp(g, sum) != Some(add(c.then(f1, g), c.then(f2, g))) {
                        report.push(Violation::LeftBilinearity { g, f1, f2 });
                    }
                }
                for &g in c.into(c.dom(f1)) {
                    if c.comp(sum, g) != Some(add(c.then(g, f1), c.then(g, f2))) {
                        report.push(Violation::RightBilinearity { f1, f2, g });
                    }
                }
            }
        }
        for f in c.morphisms() {
            for &g in c.from(c.cod(f)) {
                let zf = self.zero_for(c, f);
                let zg = self.zero_for(c, g);
                let target = self.zero(c.dom(f), c.cod(g));
                if c.comp(g, zf) != Some(target) || c.comp(zg, f) != Some(target) {
                    report.push(Violation::ZeroAbsorption { g, f });
                }
            }
        }
        report
    }
}

/// Injections and projections exhibiting `object` as a biproduct of two objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BiproductDiagram {
    pub object: ObjId,
    pub i1: MorphId,
    pub i2: MorphId,
    pub p1: MorphId,
    pub p2: MorphId,
}

impl BiproductDiagram {
    /// `p1 i1 = id`, `p2 i2 = id`, `p1 i2 = 0`, `p2 i1 = 0`, `i1 p1 + i2 p2 = id`.
    pub fn holds(&self, c: &FiniteCategory, p: &PreadditiveStructure) -> bool {
        let (a, b, x) = (c.dom(self.i1), c.dom(self.i2), self.object);
        let endpoints = c.cod(self.i1) == x
            && c.cod(self.i2) == x
            && c.dom(self.p1) == x
            && c.dom(self.p2) == x
            && c.cod(self.p1) == a
            && c.cod(self.p2) == b;
        if !endpoints {
            return false;
        }
        c.comp(self.p1, self.i1) == Some(c.id(a))
            && c.comp(self.p2, self.i2) == Some(c.id(b))
            && c.comp(self.p1, self.i2) == Some(p.zero(b, a))
            && c.comp(self.p2, self.i1) == Some(p.zero(a, b))
            && p.add(c.then(self.p1, self.i1), c.then(self.p2, self.i2)) == Some(c.id(x))
    }
}

/// Smallest biproduct diagram for `(a, b)` in `(object, i1, i2, p1, p2)` order.
pub fn find_biproduct(c: &FiniteCategory, p: &PreadditiveStructure, a: ObjId, b: ObjId) -> Option<BiproductDiagram> {
    for x in c.objects() {
        for &i1 in c.hom(a, x) {
            for &i2 in c.hom(b, x) {
                for &p1 in c.hom(x, a) {
                    if c.comp(p1, i1) != Some(c.id(a)) || c.comp(p1, i2) != Some(p.zero(b, a)) {
                        continue;
                    }
                    for &p2 in c.hom(x, b) {
                        let d = BiproductDiagram {
                            object: x,
                            i1,
                            i2,
                            p1,
                            p2,
                        };
                        if d.holds(c, p) {
                            return Some(d);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Rewrites two parallel roofs over one W-leg: completing `(w1, w2)` to
/// `g ∘ w1 = w̃ ∘ w2` yields `(g f1, w̃ w2)` and `(w̃ f2, w̃ w2)`.
pub fn common_denominator(
    c: &FiniteCategory,
    w: &MorphClass,
    r1: &Roof,
    r2: &Roof,
) -> Result<(MorphId, MorphId, MorphId)> {
    check_universe(c, w)?;
    r1.check(c, w)?;
    r2.check(c, w)?;
    if !r1.parallel(c, r2) {
        return Err(Error::Parallelism(*r1, *r2));
    }
    let sq = l1_complete(c, w, r1.w, r2.w)?;
    let (g, wt) = (sq.f_prime, sq.w_prime);
    Ok((c.then(r1.f, g), c.then(r2.f, wt), c.then(r2.w, wt)))
}

/// `(f1, w1) + (f2, w2) = (g f1 + w̃ f2, w̃ w2)`.
pub fn add_roofs(c: &FiniteCategory, w: &MorphClass, p: &PreadditiveStructure, r1: &Roof, r2: &Roof) -> Result<Roof> {
    let (f1, f2, wc) = common_denominator(c, w, r1, r2)?;
    let sum = p
        .add(f1, f2)
        .ok_or(Error::InvalidPreadditive(ValidationReport::new("preadditive")))?;
    Ok(Roof::new(sum, wc))
}

pub fn negate_roof(p: &PreadditiveStructure, r: &Roof) -> Roof {
    Roof::new(p.neg(r.f), r.w)
}

/// `(0, id_b)`.
pub fn zero_roof(c: &FiniteCategory, p: &PreadditiveStructure, a: ObjId, b: ObjId) -> Roof {
    Roof::new(p.zero(a, b), c.id(b))
}

/// Whenever `f ∘ w = 0` with `w ∈ W` there is `w' ∈ W` with `w' ∘ f = 0`.
pub fn check_l2_doubleprime(c: &FiniteCategory, w: &MorphClass, p: &PreadditiveStructure, scope: Scope) -> AxiomReport {
    let mut found = Vec::new();
    'outer: for wm in w.iter() {
        for &f in c.from(c.cod(wm)) {
            if c.comp(f, wm) != Some(p.zero(c.dom(wm), c.cod(f))) {
                continue;
            }
            let annihilated = c
                .from(c.cod(f))
                .iter()
                .any(|&wp| w.contains(wp) && c.comp(wp, f) == Some(p.zero(c.dom(f), c.cod(wp))));
            if !annihilated {
                found.push(Counterexample::NoAnnihilator { w: wm, f });
                if scope == Scope::First {
                    break 'outer;
                }
            }
        }
    }
    AxiomReport {
        axiom: Axiom::L2DoublePrime,
        counterexamples: found,
    }
}

/// The induced preadditive structure on `C[W⁻¹]` and the checks that
/// certify it.
#[derive(Debug, Clone)]
pub struct AdditiveLocalization {
    pub induced: PreadditiveStructure,
    /// Group and bilinearity laws of `induced`; names refer to `C[W⁻¹]`.
    pub structure: ValidationReport,
    /// Well-definedness of the sum, additivity of `loc`, and preservation of
    /// biproducts and zero objects; names refer to `C`.
    pub transfer: ValidationReport,
    pub zero_objects: Vec<ObjId>,
    pub biproducts: Vec<(ObjId, ObjId, BiproductDiagram)>,
}

impl AdditiveLocalization {
    pub fn is_valid(&self) -> bool {
        self.structure.is_valid() && self.transfer.is_valid()
    }
}

/// Tabulates roof addition on canonical representatives and checks that
/// the result is a preadditive structure on `C[W⁻¹]` for which `loc` is
/// additive and biproducts and zero objects of `C` survive.
pub fn check_additive_localization(l: &FractionCategory, p: &PreadditiveStructure) -> Result<AdditiveLocalization> {
    if l.side != Side::Left {
        return Err(Error::FunctorSourceMismatch);
    }
    let c = &*l.source;
    let report = p.validate(c);
    if !report.is_valid() {
        return Err(Error::InvalidPreadditive(report));
    }
    let base = &*l.base;
    let w = &l.w;
    let class = |r: &Roof| l.class_of(r).ok_or(Error::MalformedRoof(*r));

    let mut zero = Vec::with_capacity(base.num_objects() * base.num_objects());
    for a in base.objects() {
        for b in base.objects() {
            zero.push(class(&zero_roof(c, p, a, b))?);
        }
    }
    let n = base.num_morphisms();
    let mut add = vec![None; n * n];
    let mut neg = Vec::with_capacity(n);
    for x in base.morphisms() {
        let rx = l.representative(x);
        for &y in base.hom(base.dom(x), base.cod(x)) {
            let ry = l.representative(y);
            add[x.0 * n + y.0] = Some(class(&add_roofs(c, w, p, &rx, &ry)?)?);
        }
        neg.push(class(&negate_roof(p, &rx))?);
    }
    let induced = PreadditiveStructure::from_parts(base, zero, add, neg);
    let structure = induced.validate(base);

    let mut transfer = ValidationReport::new("additive localization");
    for x in base.morphisms() {
        for &y in base.hom(base.dom(x), base.cod(x)) {
            let expected = induced.add(x, y);
            for r1 in l.members(x) {
                for r2 in l.members(y) {
                    let got = class(&add_roofs(c, w, p, r1, r2)?)?;
                    if Some(got) != expected {
                        transfer.push(Violation::AdditionNotWellDefined {
                            r1: r1.display(c).to_string(),
                            r2: r2.display(c).to_string(),
                        });
                    }
                }
            }
        }
        for r in l.members(x) {
            if class(&negate_roof(p, r))? != induced.neg(x) {
                transfer.push(Violation::AdditionNotWellDefined {
                    r1: r.display(c).to_string(),
                    r2: "negation".to_string(),
                });
            }
        }
    }
    for f1 in c.morphisms() {
        for &f2 in c.hom(c.dom(f1), c.cod(f1)) {
            let sum = p.add(f1, f2).expect("validated");
            if Some(l.loc.mor(sum)) != induced.add(l.loc.mor(f1), l.loc.mor(f2)) {
                transfer.push(Violation::LocNotAdditive { f1, f2 });
            }
        }
    }
    let mut biproducts = Vec::new();
    for a in c.objects() {
        for b in c.objects() {
            if let Some(d) = find_biproduct(c, p, a, b) {
                let image = BiproductDiagram {
                    object: l.loc.obj(d.object),
                    i1: l.loc.mor(d.i1),
                    i2: l.loc.mor(d.i2),
                    p1: l.loc.mor(d.p1),
                    p2: l.loc.mor(d.p2),
                };
                if !image.holds(base, &induced) {
                    transfer.push(Violation::BiproductNotPreserved { left: a, right: b });
                }
                biproducts.push((a, b, d));
            }
        }
    }
    let zero_objects = p.zero_objects(c);
    for &z in &zero_objects {
        if base.id(z) != induced.zero(z, z) {
            transfer.push(Violation::ZeroObjectNotPreserved { object: z });
        }
    }
    Ok(AdditiveLocalization {
        induced,
        structure,
        transfer,
        zero_objects,
        biproducts,
    })
}
