use twocat::core::twocat::{interchange_grids, interchange_sides};
use twocat::core::{hom_category, quotient, validate_fincat, validate_twocat, CatLaw, CoreError, FinCatBuilder, Table, TwoCat, TwoCatLaw};
use twocat::fixtures;
use twocat::pasting::{evaluate, parse_elevator, CellEnv};

#[test]
fn builder_supplies_identities_and_units() {
    let c = FinCatBuilder::new().object("a").object("b").morphism("f", "a", "b").build().unwrap();
    assert_eq!(c.morphism_count(), 3);
    let f = c.find_morphism("f").unwrap();
    assert_eq!(c.compose(c.id(1), f), Some(f));
    assert_eq!(c.morphism_name(c.id(0)), "id_a");
    assert!(validate_fincat(&c).is_ok());
}

#[test]
fn builder_rejects_dangling_names() {
    let e = FinCatBuilder::new().object("a").morphism("f", "a", "nowhere").build();
    assert_eq!(e, Err(CoreError::DanglingId("nowhere".into())));
}

#[test]
fn broken_associativity_is_reported_by_name() {
    let c = FinCatBuilder::new()
        .object("*")
        .morphism("s", "*", "*")
        .morphism("t", "*", "*")
        .compose("s", "s", "s")
        .compose("s", "t", "s")
        .compose("t", "s", "t")
        .compose("t", "t", "s")
        .build()
        .unwrap();
    let r = validate_fincat(&c);
    assert!(r.has(&CatLaw::Associativity));
    assert!(r.to_string().contains("AssociativityViolation"), "{r}");
}

#[test]
fn fixtures_are_valid_and_interchange_holds() {
    for (name, k) in fixtures::interchange_fixtures() {
        assert!(validate_twocat(&k).is_ok(), "{name}");
        for (a, b, a2, b2) in interchange_grids(&k) {
            let (l, r) = interchange_sides(&k, a, b, a2, b2).unwrap();
            assert_eq!(l, r, "{name}");
        }
    }
    for c in [fixtures::chain(3), fixtures::vee(), fixtures::z2(), fixtures::walking_iso(), fixtures::iso_square(), fixtures::parallel_pair()] {
        assert!(validate_fincat(&c).is_ok());
        assert!(validate_twocat(&TwoCat::locally_discrete(&c)).is_ok());
    }
}

#[test]
fn iso_square_has_g_as_inverse_of_p() {
    let k = TwoCat::locally_discrete(&fixtures::iso_square());
    let (p, g) = (k.find_arrow("p").unwrap(), k.find_arrow("g").unwrap());
    assert_eq!(k.arrow_inverse(p), Some(g));
    assert_eq!(k.comp1(g, k.find_arrow("b").unwrap()), k.find_arrow("gb"));
}

#[test]
fn wrong_vertical_entry_is_caught() {
    let k = fixtures::z2_cells();
    let (&(key, old), _) = k.table_entries(Table::VComp).split_first().unwrap();
    let other = k.cells().find(|&c| c != old).unwrap();
    let r = validate_twocat(&k.with_entry(Table::VComp, key, other));
    assert!(!r.is_ok());
    assert!(r.violations().iter().all(|v| v.kind != TwoCatLaw::Id1Boundary));
}

#[test]
fn hom_category_of_z2_cells_is_z2() {
    let k = fixtures::z2_cells();
    let h = hom_category(&k, 0, 0).unwrap();
    assert_eq!((h.object_count(), h.morphism_count()), (1, 2));
    let t1 = h.find_morphism("t1").unwrap();
    assert_eq!(h.compose(t1, t1), Some(h.id(0)));
}

#[test]
fn elevator_terms_evaluate_in_the_tables() {
    let k = fixtures::z2_cells();
    let env = CellEnv::of_names(&k);
    let t0 = k.find_cell("t0").unwrap();
    for src in ["t1 v t1", "t1 . t1", "(t1 . t1) v id(id_C0)", "t0"] {
        assert_eq!(evaluate(&parse_elevator(src).unwrap(), &env).unwrap(), t0, "{src}");
    }
    assert!(parse_elevator("t1 v").is_err());
    assert!(evaluate(&parse_elevator("t9").unwrap(), &env).is_err());
}

#[test]
fn quotient_by_the_total_relation_on_a_hom() {
    let c = fixtures::parallel_pair();
    let hom: Vec<usize> = c.hom(0, 1).to_vec();
    let q = quotient(&c, &[(hom[0], hom[1])]).unwrap();
    assert_eq!(q.category.object_count(), 2);
    assert_eq!(q.category.hom(0, 1).len(), 1);
}
