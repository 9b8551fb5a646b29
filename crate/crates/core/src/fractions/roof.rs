use super::axioms::completions;
use super::weak::generate_wl;
use super::{check_universe, Roof};
use crate::category::{FiniteCategory, MorphClass, MorphId, ObjId};
use crate::error::{Error, Result};
use crate::union_find::UnionFind;

/// A commutative square `w' ∘ f = f' ∘ w` completing the span `(w, f)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct L1Witness {
    pub f_prime: MorphId,
    pub w_prime: MorphId,
}

/// Morphisms `g`, `h` out of the apexes with `g ∘ f1 = h ∘ f2` and
/// `g ∘ w1 = h ∘ w2` in W (in `W_L` when `weak`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivWitness {
    pub g: MorphId,
    pub h: MorphId,
    pub weak: bool,
}

fn require_span(c: &FiniteCategory, w_class: &MorphClass, w: MorphId, f: MorphId) -> Result<()> {
    check_universe(c, w_class)?;
    if !w_class.contains(w) {
        return Err(Error::NotInClass(w));
    }
    if c.dom(f) != c.dom(w) {
        return Err(Error::NotCoinitial { w, f });
    }
    Ok(())
}

/// The smallest `(w', f')` completing the span `(w, f)`, searching `w'`
/// first and then `f'` in id order. An identity `w` is completed by the
/// identity square `(f, id)`.
pub fn l1_complete(c: &FiniteCategory, w_class: &MorphClass, w: MorphId, f: MorphId) -> Result<L1Witness> {
    require_span(c, w_class, w, f)?;
    if c.is_identity(w) {
        return Ok(L1Witness {
            f_prime: f,
            w_prime: c.id(c.cod(f)),
        });
    }
    completions(c, w_class, w, f)
        .next()
        .map(|(f_prime, w_prime)| L1Witness { f_prime, w_prime })
        .ok_or(Error::NoWitness { w, f })
}

/// Every completion of the span `(w, f)`, in search order.
pub fn l1_witnesses(c: &FiniteCategory, w_class: &MorphClass, w: MorphId, f: MorphId) -> Result<Vec<L1Witness>> {
    require_span(c, w_class, w, f)?;
    Ok(completions(c, w_class, w, f)
        .map(|(f_prime, w_prime)| L1Witness { f_prime, w_prime })
        .collect())
}

fn require_parallel(c: &FiniteCategory, w_class: &MorphClass, r1: &Roof, r2: &Roof) -> Result<()> {
    check_universe(c, w_class)?;
    r1.check(c, w_class)?;
    r2.check(c, w_class)?;
    if !r1.parallel(c, r2) {
        return Err(Error::Parallelism(*r1, *r2));
    }
    Ok(())
}

fn search_witness(c: &FiniteCategory, composite_in: &MorphClass, r1: &Roof, r2: &Roof) -> Option<(MorphId, MorphId)> {
    if r1 == r2 {
        let apex = c.id(r1.apex(c));
        return Some((apex, apex));
    }
    for &g in c.from(r1.apex(c)) {
        let gf = c.comp(g, r1.f);
        let gw = c.comp(g, r1.w);
        if !gw.is_some_and(|x| composite_in.contains(x)) {
            continue;
        }
        for &h in c.hom(r2.apex(c), c.cod(g)) {
            if c.comp(h, r2.f) == gf && c.comp(h, r2.w) == gw {
                return Some((g, h));
            }
        }
    }
    None
}

/// Equivalence of parallel roofs with the composite `g ∘ w1` required to
/// lie in `composite_in`. Identical roofs are witnessed by identities;
/// otherwise the smallest `(g, h)` in id order is returned.
pub fn roof_equivalent_in(
    c: &FiniteCategory,
    w_class: &MorphClass,
    composite_in: &MorphClass,
    r1: &Roof,
    r2: &Roof,
) -> Result<Option<(MorphId, MorphId)>> {
    require_parallel(c, w_class, r1, r2)?;
    Ok(search_witness(c, composite_in, r1, r2))
}

/// Two parallel roofs are equivalent when some `g`, `h` map them to a common
/// third roof whose W-leg `g ∘ w1 = h ∘ w2` lies in W.
pub fn roof_equivalent(c: &FiniteCategory, w_class: &MorphClass, r1: &Roof, r2: &Roof) -> Result<Option<EquivWitness>> {
    Ok(roof_equivalent_in(c, w_class, w_class, r1, r2)?.map(|(g, h)| EquivWitness { g, h, weak: false }))
}

/// As [`roof_equivalent`] with the common W-leg only required in `W_L`.
pub fn roof_equivalent_weak(
    c: &FiniteCategory,
    w_class: &MorphClass,
    r1: &Roof,
    r2: &Roof,
) -> Result<Option<EquivWitness>> {
    let wl = generate_wl(c, w_class);
    Ok(roof_equivalent_in(c, w_class, &wl, r1, r2)?.map(|(g, h)| EquivWitness { g, h, weak: true }))
}

/// All roofs from `a` to `b`, ascending in roof order.
pub fn roofs_between(c: &FiniteCategory, w_class: &MorphClass, a: ObjId, b: ObjId) -> Vec<Roof> {
    let mut roofs = Vec::new();
    for &w in c.from(b) {
        if !w_class.contains(w) {
            continue;
        }
        for &f in c.hom(a, c.cod(w)) {
            roofs.push(Roof::new(f, w));
        }
    }
    roofs
}

/// Roofs between two objects partitioned by connectivity under single
/// 2-morphisms `g: (f1, w1) → (g ∘ f1, g ∘ w1)`.
#[derive(Debug, Clone)]
pub struct RoofPartition {
    /// All roofs, ascending.
    pub roofs: Vec<Roof>,
    /// Class index of each roof; classes are numbered by their smallest roof.
    pub labels: Vec<usize>,
    pub num_classes: usize,
}

impl RoofPartition {
    pub fn label_of(&self, r: &Roof) -> Option<usize> {
        self.roofs.binary_search(r).ok().map(|i| self.labels[i])
    }

    /// The smallest roof of each class, indexed by class.
    pub fn representatives(&self) -> Vec<Roof> {
        let mut reps: Vec<Option<Roof>> = vec![None; self.num_classes];
        for (r, &l) in self.roofs.iter().zip(&self.labels) {
            reps[l].get_or_insert(*r);
        }
        reps.into_iter().map(|r| r.expect("every class is non-empty")).collect()
    }

    pub fn members(&self, class: usize) -> impl Iterator<Item = &Roof> + '_ {
        self.roofs
            .iter()
            .zip(&self.labels)
            .filter(move |(_, &l)| l == class)
            .map(|(r, _)| r)
    }
}

pub fn roof_partition(c: &FiniteCategory, w_class: &MorphClass, a: ObjId, b: ObjId) -> RoofPartition {
    let roofs = roofs_between(c, w_class, a, b);
    let mut uf = UnionFind::new(roofs.len());
    for (i, r) in roofs.iter().enumerate() {
        for &g in c.from(r.apex(c)) {
            let (Some(gf), Some(gw)) = (c.comp(g, r.f), c.comp(g, r.w)) else {
                continue;
            };
            if !w_class.contains(gw) {
                continue;
            }
            let j = roofs
                .binary_search(&Roof::new(gf, gw))
                .expect("image of a roof under a 2-morphism is a roof");
            uf.union(i, j);
        }
    }
    let (labels, num_classes) = uf.labels();
    RoofPartition {
        roofs,
        labels,
        num_classes,
    }
}

/// Equivalence generated by single 2-morphisms, traversed in either direction.
pub fn roof_equivalent_generated(c: &FiniteCategory, w_class: &MorphClass, r1: &Roof, r2: &Roof) -> Result<bool> {
    require_parallel(c, w_class, r1, r2)?;
    let p = roof_partition(c, w_class, r1.source(c), r1.target(c));
    Ok(p.label_of(r1) == p.label_of(r2))
}

/// `(f2, w2) ∘ (f1, w1) = (f̃ ∘ f1, w̃ ∘ w2)` where `(f̃, w̃)` completes the
/// span `(w1, f2)`.
pub fn compose_roofs(c: &FiniteCategory, w_class: &MorphClass, r1: &Roof, r2: &Roof) -> Result<Roof> {
    check_universe(c, w_class)?;
    r1.check(c, w_class)?;
    r2.check(c, w_class)?;
    if r1.target(c) != r2.source(c) {
        return Err(Error::Composability(*r1, *r2));
    }
    let L1Witness { f_prime, w_prime } = l1_complete(c, w_class, r1.w, r2.f)?;
    Ok(Roof::new(c.then(r1.f, f_prime), c.then(r2.w, w_prime)))
}
