use std::sync::Arc;

use locfrac_core::fixtures;
use locfrac_core::fractions::{factor_functor, localize};
use locfrac_core::{Error, Functor, MorphId};

#[test]
fn loc_factors_as_identity() {
    for file in [
        fixtures::interval(),
        fixtures::ring_z6(),
        fixtures::ring_z8(),
        fixtures::splitmono(),
    ] {
        let l = localize(&file.category, &file.w).unwrap();
        let g = factor_functor(&l, &l.loc).unwrap();
        assert_eq!(g, Functor::identity(l.base.clone()));
    }
}

#[test]
fn collapse_of_the_interval() {
    let file = fixtures::interval();
    let l = localize(&file.category, &file.w).unwrap();
    let f = fixtures::interval_to_point();
    let g = factor_functor(&l, &f).unwrap();
    assert!(g.check().is_valid());
    assert_eq!(l.loc.then(&g).unwrap(), f);
}

#[test]
fn reduction_mod_two() {
    let file = fixtures::ring_z6();
    let l = localize(&file.category, &file.w).unwrap();
    let f = fixtures::ring_z6_to_z2();
    let g = factor_functor(&l, &f).unwrap();
    assert_eq!(l.loc.then(&g).unwrap(), f);
    // a bijection onto Z/2
    let mut image: Vec<MorphId> = l.base.morphisms().map(|x| g.mor(x)).collect();
    image.sort();
    assert_eq!(image, [MorphId(0), MorphId(1)]);
}

#[test]
fn functors_not_inverting_w_are_rejected() {
    let file = fixtures::interval();
    let l = localize(&file.category, &file.w).unwrap();
    let id = Functor::identity(Arc::new(file.category.clone()));
    let u = file.category.morphism_by_name("u").unwrap();
    assert_eq!(factor_functor(&l, &id), Err(Error::NotLocal(u)));
}

#[test]
fn factorization_is_unique() {
    // any H with H ∘ loc = F is determined on loc(f) and on the inverses
    // loc(w)⁻¹, and every class is generated by those
    for file in [fixtures::interval(), fixtures::ring_z6(), fixtures::ring_z8()] {
        let l = localize(&file.category, &file.w).unwrap();
        assert_eq!(l.check_generated_by_loc(), Ok(()));
    }
}
