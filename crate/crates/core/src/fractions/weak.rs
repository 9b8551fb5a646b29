//! The class `W_L` generated by W and the split monos, and the weakened
//! axioms that quantify over it.

use std::collections::VecDeque;

use super::axioms::{scan_l1, scan_l2, Axiom, AxiomReport, Scope};
use super::roof::l1_complete;
use crate::category::{FiniteCategory, MorphClass, MorphId};
use crate::error::{Error, Result};

/// One factor of a `W_L` decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    W(MorphId),
    SplitMono(MorphId),
}

impl Factor {
    pub fn morphism(self) -> MorphId {
        match self {
            Factor::W(m) | Factor::SplitMono(m) => m,
        }
    }
}

/// `W_L` together with one derivation per member. A derivation
/// `[x1, x2, ..., xn]` means `x1 ∘ x2 ∘ ... ∘ xn`, outermost factor first.
#[derive(Debug, Clone)]
pub struct WeakClass {
    pub class: MorphClass,
    derivations: Vec<Option<Vec<Factor>>>,
}

impl WeakClass {
    pub fn decomposition(&self, m: MorphId) -> Option<&[Factor]> {
        self.derivations.get(m.0)?.as_deref()
    }
}

/// Closure of `W ∪ split monos ∪ identities` under composition, recording
/// how each member was first reached (breadth-first, smallest ids first).
pub fn generate_wl_with_derivations(c: &FiniteCategory, w: &MorphClass) -> WeakClass {
    let mut class = MorphClass::empty(c);
    let mut derivations: Vec<Option<Vec<Factor>>> = vec![None; c.num_morphisms()];
    let mut queue = VecDeque::new();
    let mut seed = |m: MorphId, factor: Factor, class: &mut MorphClass, queue: &mut VecDeque<MorphId>| {
        if class.insert(m) {
            derivations[m.0] = Some(vec![factor]);
            queue.push_back(m);
        }
    };
    for a in c.objects() {
        seed(c.id(a), Factor::W(c.id(a)), &mut class, &mut queue);
    }
    for m in w.iter() {
        seed(m, Factor::W(m), &mut class, &mut queue);
    }
    for m in c.split_monos().iter() {
        seed(m, Factor::SplitMono(m), &mut class, &mut queue);
    }
    while let Some(x) = queue.pop_front() {
        let members: Vec<MorphId> = class.iter().collect();
        for y in members {
            let pairs = [(y, x), (x, y)];
            for (outer, inner) in pairs {
                let Some(z) = c.comp(outer, inner) else { continue };
                if class.insert(z) {
                    let mut d = derivations[outer.0].clone().expect("member has a derivation");
                    d.extend(derivations[inner.0].as_deref().expect("member has a derivation"));
                    derivations[z.0] = Some(d);
                    queue.push_back(z);
                }
            }
        }
    }
    WeakClass { class, derivations }
}

/// `W_L`: the subcategory generated by W and all split monos.
pub fn generate_wl(c: &FiniteCategory, w: &MorphClass) -> MorphClass {
    generate_wl_with_derivations(c, w).class
}

/// L2 with the equalizing `w'` allowed to range over `W_L`.
pub fn check_l2_prime(c: &FiniteCategory, w: &MorphClass, scope: Scope) -> AxiomReport {
    let wl = generate_wl(c, w);
    scan_l2(c, w, &wl, Axiom::L2Prime, scope)
}

/// L1 for spans `(w, f)` with `w ∈ W_L`; the completing `w'` must still lie in W.
pub fn check_l1_prime(c: &FiniteCategory, w: &MorphClass, scope: Scope) -> AxiomReport {
    let wl = generate_wl(c, w);
    scan_l1(c, &wl, w, Axiom::L1Prime, scope)
}

/// Given `w' ∈ W_L` and a decomposition of it, returns `k` with `k ∘ w' ∈ W`.
///
/// Factors are consumed outermost first. A W factor is absorbed into the
/// running W-morphism `acc`; a split mono `m` with left inverse `e` is
/// handled by completing the span `(acc, e)` to `w̃ ∘ e = k₁ ∘ acc`, after
/// which `k₁ ∘ acc ∘ m = w̃ ∘ e ∘ m = w̃`.
pub fn find_k(c: &FiniteCategory, w: &MorphClass, w_prime: MorphId, decomposition: &[Factor]) -> Result<MorphId> {
    let chain: Vec<MorphId> = decomposition.iter().rev().map(|x| x.morphism()).collect();
    if c.compose_chain(&chain) != Some(w_prime) {
        return Err(Error::BadDecomposition(w_prime));
    }
    let top = c.id(c.cod(w_prime));
    if w.contains(w_prime) {
        return Ok(top);
    }
    let mut k = top;
    let mut acc = top;
    for factor in decomposition {
        match *factor {
            Factor::W(x) => {
                acc = c.comp(acc, x).ok_or(Error::BadDecomposition(w_prime))?;
            }
            Factor::SplitMono(m) => {
                let e = c.left_inverse(m).ok_or(Error::BadDecomposition(w_prime))?;
                let witness = l1_complete(c, w, acc, e)?;
                k = c.then(k, witness.f_prime);
                acc = witness.w_prime;
            }
        }
    }
    match c.comp(k, w_prime) {
        Some(kw) if w.contains(kw) => Ok(k),
        _ => Err(Error::NoWitness { w: acc, f: w_prime }),
    }
}
