use locfrac_core::additive::common_denominator;
use locfrac_core::fractions::{
    check_l1, check_l2, check_l2_prime, compose_roofs, find_k, generate_wl_with_derivations, l1_witnesses, localize,
    localize_right, roof_equivalent, roof_equivalent_generated, roofs_between, Roof, Scope,
};
use locfrac_core::random::{fraction_corpus, l1_corpus, Sample};
use locfrac_core::{FiniteCategory, MorphClass};

const SEED: u64 = 0x5eed;
const SIZE: usize = 250;

fn all_roofs(c: &FiniteCategory, w: &MorphClass) -> Vec<Vec<Roof>> {
    let mut out = Vec::new();
    for a in c.objects() {
        for b in c.objects() {
            out.push(roofs_between(c, w, a, b));
        }
    }
    out
}

#[test]
fn l1_witnesses_give_equivalent_roofs() {
    for (i, Sample { category: c, w }) in fraction_corpus(SEED, SIZE).iter().enumerate() {
        for wm in w.iter() {
            for &f in c.from(c.dom(wm)) {
                let found = l1_witnesses(c, w, wm, f).unwrap();
                for x in &found {
                    for y in &found {
                        let (rx, ry) = (Roof::new(x.f_prime, x.w_prime), Roof::new(y.f_prime, y.w_prime));
                        assert!(roof_equivalent(c, w, &rx, &ry).unwrap().is_some(), "sample {i}");
                    }
                }
            }
        }
    }
}

#[test]
fn direct_and_generated_equivalence_agree() {
    for (i, Sample { category: c, w }) in fraction_corpus(SEED, SIZE).iter().enumerate() {
        for roofs in all_roofs(c, w) {
            for r1 in &roofs {
                for r2 in &roofs {
                    let direct = roof_equivalent(c, w, r1, r2).unwrap().is_some();
                    assert_eq!(direct, roof_equivalent_generated(c, w, r1, r2).unwrap(), "sample {i}");
                    if !direct {
                        continue;
                    }
                    for r3 in &roofs {
                        if roof_equivalent(c, w, r2, r3).unwrap().is_some() {
                            assert!(roof_equivalent(c, w, r1, r3).unwrap().is_some(), "sample {i}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn localization_is_a_category_inverting_w() {
    for (i, Sample { category: c, w }) in fraction_corpus(SEED, SIZE).iter().enumerate() {
        let l = localize(c, w).unwrap_or_else(|e| panic!("sample {i}: {e}"));
        assert!(l.base.validate().is_valid());
        assert!(l.loc.check().is_valid());
        for m in w.iter() {
            assert!(l.base.is_iso(l.loc.mor(m)).is_some());
        }
        for class in l.base.morphisms() {
            for r in l.members(class) {
                let inv = l.formal_inverse(r.w).unwrap();
                assert_eq!(l.base.comp(inv, l.loc.mor(r.f)), Some(class), "sample {i}");
            }
        }
    }
}

#[test]
fn roof_composition_respects_classes() {
    for (i, Sample { category: c, w }) in fraction_corpus(SEED, 80).iter().enumerate() {
        let l = localize(c, w).unwrap();
        for x in l.base.morphisms() {
            for &y in l.base.from(l.base.cod(x)) {
                let expected = l.base.comp(y, x);
                for r1 in l.members(x) {
                    for r2 in l.members(y) {
                        let r = compose_roofs(c, w, r1, r2).unwrap();
                        assert_eq!(l.class_of(&r), expected, "sample {i}");
                    }
                }
            }
        }
    }
}

#[test]
fn common_denominator_preserves_both_roofs() {
    for (i, Sample { category: c, w }) in l1_corpus(SEED, SIZE).iter().enumerate() {
        for roofs in all_roofs(c, w) {
            for r1 in &roofs {
                for r2 in &roofs {
                    let (f1, f2, wc) = common_denominator(c, w, r1, r2).unwrap();
                    assert!(w.contains(wc));
                    assert!(
                        roof_equivalent(c, w, &Roof::new(f1, wc), r1).unwrap().is_some(),
                        "sample {i}"
                    );
                    assert!(
                        roof_equivalent(c, w, &Roof::new(f2, wc), r2).unwrap().is_some(),
                        "sample {i}"
                    );
                }
            }
        }
    }
}

#[test]
fn weak_l2_agrees_with_l2_under_l1() {
    let corpus = l1_corpus(SEED + 1, SIZE);
    let mut failures = 0;
    for (i, Sample { category: c, w }) in corpus.iter().enumerate() {
        let strong = check_l2(c, w, Scope::First).holds();
        assert_eq!(strong, check_l2_prime(c, w, Scope::First).holds(), "sample {i}");
        failures += usize::from(!strong);
    }
    assert!(failures > 0, "corpus never exercises a failing L2");
}

#[test]
fn find_k_lands_in_w() {
    for (i, Sample { category: c, w }) in l1_corpus(SEED + 2, SIZE).iter().enumerate() {
        let wl = generate_wl_with_derivations(c, w);
        for m in wl.class.iter() {
            let k = find_k(c, w, m, wl.decomposition(m).unwrap()).unwrap();
            assert!(w.contains(c.comp(k, m).unwrap()), "sample {i}");
        }
    }
}

#[test]
fn right_fractions_on_opposites() {
    for (i, Sample { category: c, w }) in fraction_corpus(SEED, 100).iter().enumerate() {
        let op = c.opposite();
        let r = localize_right(&op, w).unwrap_or_else(|e| panic!("sample {i}: {e}"));
        let l = localize(c, w).unwrap();
        assert_eq!(r.base.num_morphisms(), l.base.num_morphisms(), "sample {i}");
        for a in c.objects() {
            for b in c.objects() {
                assert_eq!(r.hom_classes(b, a).len(), l.hom_classes(a, b).len());
            }
        }
    }
}

#[test]
fn corpus_axioms_hold() {
    for Sample { category: c, w } in fraction_corpus(SEED, 50) {
        assert!(check_l1(&c, &w, Scope::First).holds());
        assert!(check_l2(&c, &w, Scope::First).holds());
    }
}
