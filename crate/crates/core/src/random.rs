//! Seeded generators for random finite categories and morphism classes.
//!
//! Categories are concrete: objects are small finite sets and morphisms are
//! functions between them, closed under composition. Every finite category
//! arises this way up to isomorphism, though not uniformly.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::additive::PreadditiveStructure;
use crate::category::{FiniteCategory, MorphClass, MorphId, Morphism, ObjId};
use crate::fixtures;
use crate::fractions::{check_l1, check_l2, saturate, Scope};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    pub max_objects: usize,
    pub max_set_size: usize,
    pub max_generators: usize,
    pub max_morphisms: usize,
}

impl Default for Shape {
    fn default() -> Self {
        Shape {
            max_objects: 4,
            max_set_size: 3,
            max_generators: 5,
            max_morphisms: 12,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Sample {
    pub category: FiniteCategory,
    pub w: MorphClass,
}

#[derive(Debug, Clone)]
pub struct PreadditiveSample {
    pub name: String,
    pub category: FiniteCategory,
    pub w: MorphClass,
    pub additive: PreadditiveStructure,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

type Function = (usize, usize, Vec<u8>);

/// Closes random generating functions under composition. Returns `None`
/// when the closure exceeds `shape.max_morphisms`.
pub fn random_category<R: Rng>(rng: &mut R, shape: Shape) -> Option<FiniteCategory> {
    let k = rng.gen_range(1..=shape.max_objects);
    let sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=shape.max_set_size)).collect();
    let mut functions: Vec<Function> = (0..k).map(|a| (a, a, (0..sizes[a] as u8).collect())).collect();
    let mut index: HashMap<Function, usize> = functions.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    let n_gen = rng.gen_range(0..=shape.max_generators);
    for _ in 0..n_gen {
        let (a, b) = (rng.gen_range(0..k), rng.gen_range(0..k));
        let table: Vec<u8> = (0..sizes[a]).map(|_| rng.gen_range(0..sizes[b]) as u8).collect();
        let f = (a, b, table);
        if !index.contains_key(&f) {
            index.insert(f.clone(), functions.len());
            functions.push(f);
        }
    }
    let mut i = 0;
    while i < functions.len() {
        for j in 0..functions.len() {
            let pairs = [(i, j), (j, i)];
            for (g, f) in pairs {
                let (fa, fb, ft) = &functions[f];
                let (ga, gb, gt) = &functions[g];
                if fb != ga {
                    continue;
                }
                let h: Function = (*fa, *gb, ft.iter().map(|&x| gt[x as usize]).collect());
                if !index.contains_key(&h) {
                    if functions.len() == shape.max_morphisms {
                        return None;
                    }
                    index.insert(h.clone(), functions.len());
                    functions.push(h);
                }
            }
        }
        i += 1;
    }
    let objects: Vec<String> = (0..k).map(|a| ((b'A' + a as u8) as char).to_string()).collect();
    let morphisms: Vec<Morphism> = functions
        .iter()
        .enumerate()
        .map(|(i, (a, b, _))| Morphism {
            name: if i < k {
                format!("id_{}", objects[i])
            } else {
                format!("m{i}")
            },
            dom: ObjId(*a),
            cod: ObjId(*b),
        })
        .collect();
    let identity = (0..k).map(MorphId).collect();
    Some(FiniteCategory::from_fn(objects, morphisms, identity, |g, f| {
        let (fa, _, ft) = &functions[f.0];
        let (_, gb, gt) = &functions[g.0];
        MorphId(index[&(*fa, *gb, ft.iter().map(|&x| gt[x as usize]).collect())])
    }))
}

/// A random subset of the non-identity morphisms, closed under composition
/// and with all identities added.
pub fn random_class<R: Rng>(rng: &mut R, c: &FiniteCategory) -> MorphClass {
    let p: f64 = rng.gen_range(0.0..=1.0);
    let picked = c.morphisms().filter(|&m| !c.is_identity(m) && rng.gen_bool(p));
    saturate(c, &MorphClass::from_iter(c, picked))
}

fn samples(seed: u64, count: usize, keep: impl Fn(&FiniteCategory, &MorphClass) -> bool) -> Vec<Sample> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let Some(category) = random_category(&mut rng, Shape::default()) else {
            continue;
        };
        let w = random_class(&mut rng, &category);
        if keep(&category, &w) {
            out.push(Sample { category, w });
        }
    }
    out
}

/// `count` random pairs `(C, W)` satisfying L0, L1 and L2.
pub fn fraction_corpus(seed: u64, count: usize) -> Vec<Sample> {
    samples(seed, count, |c, w| {
        check_l1(c, w, Scope::First).holds() && check_l2(c, w, Scope::First).holds()
    })
}

/// `count` random pairs `(C, W)` satisfying L0 and L1.
pub fn l1_corpus(seed: u64, count: usize) -> Vec<Sample> {
    samples(seed, count, |c, w| check_l1(c, w, Scope::First).holds())
}

/// The one-object category of a finite ring given by its tables.
pub fn ring_category(
    names: Vec<String>,
    one: usize,
    zero: usize,
    mul: impl Fn(usize, usize) -> usize,
    add: impl Fn(usize, usize) -> usize,
) -> (FiniteCategory, PreadditiveStructure) {
    let n = names.len();
    let morphisms = names
        .into_iter()
        .map(|name| Morphism {
            name,
            dom: ObjId(0),
            cod: ObjId(0),
        })
        .collect();
    let c = FiniteCategory::from_fn(vec!["•".to_string()], morphisms, vec![MorphId(one)], |g, f| {
        MorphId(mul(g.0, f.0))
    });
    let add_table = (0..n * n).map(|i| Some(MorphId(add(i / n, i % n)))).collect();
    let neg = (0..n)
        .map(|x| MorphId((0..n).find(|&y| add(x, y) == zero).expect("additive inverse exists")))
        .collect();
    let p = PreadditiveStructure::from_parts(&c, vec![MorphId(zero)], add_table, neg);
    (c, p)
}

/// `Z/n` as a one-object category; the morphism named `k` has id `k`.
pub fn ring_zn(n: usize) -> (FiniteCategory, PreadditiveStructure) {
    ring_category(
        (0..n).map(|k| k.to_string()).collect(),
        1 % n,
        0,
        |a, b| a * b % n,
        |a, b| (a + b) % n,
    )
}

/// 2×2 matrices over `Z/2`, encoded row-major as bits `a b c d` of the id.
pub fn matrix_ring_z2() -> (FiniteCategory, PreadditiveStructure) {
    let entry = |m: usize, i: usize| (m >> (3 - i)) & 1;
    let mul = |x: usize, y: usize| {
        let (a, b, c, d) = (entry(x, 0), entry(x, 1), entry(x, 2), entry(x, 3));
        let (e, f, g, h) = (entry(y, 0), entry(y, 1), entry(y, 2), entry(y, 3));
        let r = [
            (a * e + b * g) & 1,
            (a * f + b * h) & 1,
            (c * e + d * g) & 1,
            (c * f + d * h) & 1,
        ];
        r.iter().fold(0, |acc, &bit| acc << 1 | bit)
    };
    let names = (0..16)
        .map(|m| format!("[{}{};{}{}]", entry(m, 0), entry(m, 1), entry(m, 2), entry(m, 3)))
        .collect();
    ring_category(names, 0b1001, 0, mul, |x, y| x ^ y)
}

/// Preadditive categories with random multiplicatively closed W: the rings
/// `Z/n` for `2 ≤ n ≤ 12`, the 2×2 matrix ring over `Z/2`, and the
/// category of `Z/2` matrices between dimensions 0, 1, 2.
pub fn preadditive_corpus(seed: u64, count: usize) -> Vec<PreadditiveSample> {
    let mut rng = rng(seed);
    let matrices = fixtures::matrix_z2();
    let mut bases: Vec<(String, FiniteCategory, PreadditiveStructure)> = (2..=12)
        .map(|n| {
            let (c, p) = ring_zn(n);
            (format!("Z/{n}"), c, p)
        })
        .collect();
    let (c, p) = matrix_ring_z2();
    bases.push(("M2(Z/2)".to_string(), c, p));
    bases.push((
        "Mat(Z/2)".to_string(),
        matrices.category,
        matrices.additive.expect("fixture is additive"),
    ));
    (0..count)
        .map(|_| {
            let (name, c, p) = bases.choose(&mut rng).expect("nonempty").clone();
            let w = random_class(&mut rng, &c);
            PreadditiveSample {
                name,
                category: c,
                w,
                additive: p,
            }
        })
        .collect()
}
