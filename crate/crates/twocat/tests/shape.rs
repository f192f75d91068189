use std::collections::BTreeMap;

use twocat::core::{validate_twocat, Enumerable, FinCat, TwoCat, TwoCategory};
use twocat::fixtures;
use twocat::maps::{check_pseudo_functor, Probe, PseudoFunctor};
use twocat::shape::hat::{
    enumerate_pseudo_functors, enumerate_strict_hat_functors, hat_table, restrict_along_t, transport_data,
};
use twocat::shape::mj::{diagrams_of_size, MJDiagram, MJTruncation};
use twocat::shape::*;

fn inclusion(i: &TwoCat, j: &TwoCat, objs: &[usize]) -> twocat::maps::PseudoFunctorOf<TwoCat, TwoCat> {
    // i is a full sub-poset of j on `objs`, both locally discrete
    let obj: BTreeMap<usize, usize> = objs.iter().copied().enumerate().collect();
    let mut arrow = BTreeMap::new();
    let mut cell = BTreeMap::new();
    for u in i.arrows() {
        let v = j.hom1(obj[&i.src(u)], obj[&i.tgt(u)])[0];
        arrow.insert(u, v);
        cell.insert(i.id2(u), j.id2(v));
    }
    PseudoFunctor::strict(i, j, obj, arrow, cell)
}

#[test]
fn terminal_is_filtered() {
    let r = check_2filtered(&TwoCat::terminal());
    assert!(r.is_filtered());
    assert!(recheck_filtered(&TwoCat::terminal(), &r));
}

#[test]
fn discrete_pair_fails_f0() {
    let k = TwoCat::locally_discrete(&FinCat::discrete(&["C", "D"]));
    let r = check_2filtered(&k);
    assert!(!r.is_filtered());
    let bad: Vec<_> = r.f0.iter().filter(|c| !c.outcome.is_witness()).map(|c| c.instance).collect();
    assert_eq!(bad, vec![(0, 1)]);
    assert!(matches!(r.f0[1].outcome, Outcome::Counterexample));
}

#[test]
fn two_is_filtered_with_rechecked_witnesses() {
    let k = TwoCat::two();
    let r = check_2filtered(&k);
    assert!(r.is_filtered());
    assert!(recheck_filtered(&k, &r));
    // the terminal object 1 supplies the cospan for (0,1)
    let w = r.f0.iter().find(|c| c.instance == (0, 1)).unwrap().outcome.witness().unwrap().clone();
    assert_eq!(w.e, 1);
}

#[test]
fn empty_is_not_filtered() {
    let k = TwoCat::locally_discrete(&FinCat::discrete(&[]));
    assert!(!check_2filtered(&k).is_filtered());
}

#[test]
fn parallel_arrows_without_coequalizer_fail_f1() {
    let k = TwoCat::locally_discrete(&fixtures::parallel_pair());
    let r = check_2filtered(&k);
    assert!(r.f1.iter().any(|c| matches!(c.outcome, Outcome::Counterexample)));
}

#[test]
fn z2_cells_fail_f2() {
    // id and s on the single 1-cell are never equalized
    let r = check_2filtered(&fixtures::z2_cells());
    assert_eq!(r.f2.len(), 1);
    assert!(matches!(r.f2[0].outcome, Outcome::Counterexample));
}

#[test]
fn identity_is_cofinal() {
    let k = TwoCat::two();
    let f = twocat::maps::identity_functor(&k);
    let r = check_2cofinal(&k, &k, &f);
    assert!(r.is_cofinal());
    assert_eq!(r.target_filtered, Some(true));
}

#[test]
fn top_inclusion_into_two_is_cofinal() {
    let two = TwoCat::two();
    let one = TwoCat::terminal();
    let f = inclusion(&one, &two, &[1]);
    let r = check_2cofinal(&one, &two, &f);
    assert!(r.is_cofinal(), "{r}");
}

#[test]
fn bottom_inclusion_into_two_fails_cf0_at_one() {
    let two = TwoCat::two();
    let one = TwoCat::terminal();
    let f = inclusion(&one, &two, &[0]);
    let r = check_2cofinal(&one, &two, &f);
    assert!(!r.is_cofinal());
    let bad: Vec<usize> = r.cf0.iter().filter(|c| !c.outcome.is_witness()).map(|c| c.instance).collect();
    assert_eq!(bad, vec![1]);
}

#[test]
fn mj_terminal_n1_is_a_point() {
    let j = TwoCat::terminal();
    let t = MJTruncation::build(&j, 1).unwrap();
    assert_eq!(t.elements.len(), 1);
    assert_eq!(t.phi.obj[&0], 0);
}

#[test]
fn mj_counts_match_brute_force() {
    // posets with top on <= 3 elements: 1, 1, 2 up to isomorphism; into the
    // terminal J every poset has exactly one diagram
    let j = TwoCat::terminal();
    let sizes: Vec<usize> = (1..=4).map(|s| diagrams_of_size(&j, s).len()).collect();
    // posets on 0,1,2,3 elements: 1,1,2,5
    assert_eq!(sizes, vec![1, 1, 2, 5]);
    // into 2: monotone maps (up to iso) from a poset with top
    let two = TwoCat::two();
    assert_eq!(diagrams_of_size(&two, 1).len(), 2);
    // chain a<T: (0,0),(0,1),(1,1)
    assert_eq!(diagrams_of_size(&two, 2).len(), 3);
}

#[test]
fn mj_phi_on_inclusion_is_g_of_r() {
    let two = TwoCat::two();
    let t = MJTruncation::build(&two, 2).unwrap();
    let a = t.index_of(&MJDiagram::point(&two, 0)).unwrap();
    // the chain x<T with x at 0 and T at 1
    let b = t
        .elements
        .iter()
        .position(|d| d.size() == 2 && d.obj == vec![0, 1])
        .unwrap();
    let u = t.category.hom1(a, b)[0];
    let h = &t.embeddings[&u];
    let db = &t.elements[b];
    assert_eq!(h, &vec![0]);
    assert_eq!(t.phi.arrow[&u], db.rel[0][1].unwrap());
    assert_eq!(two.arrow_name(t.phi.arrow[&u]), "0<=1");
}

#[test]
fn mj_two_n2_slack1_passes() {
    let two = TwoCat::two();
    let mj = build_mj(&two, 2, 1, None).unwrap();
    assert!(mj.report.antisymmetric);
    assert!(mj.report.cofinite);
    assert!(mj.report.phi_functor.is_ok());
    assert!(mj.report.filtered_ok(), "{}", mj.report);
    assert!(mj.report.cofinal.is_cofinal(), "{}", mj.report);
}

#[test]
fn mj_joins_respect_filtered_slack() {
    let two = TwoCat::two();
    let mj = build_mj(&two, 2, 1, Some(0)).unwrap();
    assert!(!mj.report.bound_too_small.is_empty());
    assert!(!mj.report.filtered_ok());
}

#[test]
fn hat_on_terminal_has_one_cell_per_parallel_pair() {
    let (_, hat, _) = build_hat(&FinCat::terminal(), 3);
    let ts = hat.all_tuples(3);
    assert_eq!(ts.len(), 4);
    for s in &ts {
        for t in &ts {
            assert!(hat.cell(s, t).is_some());
        }
    }
}

#[test]
fn hat_composition_is_reverse_juxtaposition() {
    let a = fixtures::chain(3);
    let (_, hat, t) = build_hat(&a, 3);
    let f = a.find_morphism("0<=1").unwrap();
    let g = a.find_morphism("1<=2").unwrap();
    let gf = a.find_morphism("0<=2").unwrap();
    assert_eq!(t.arrow[&f], hat.single(f));
    let comp = hat.compose(&t.arrow[&g], &t.arrow[&f]).unwrap();
    assert_eq!(comp.mors, vec![f, g]);
    let th = hat.cell(&comp, &hat.single(gf)).unwrap();
    assert_eq!(hat.cells_between(&comp, &hat.single(gf)), vec![th]);
}

#[test]
fn t_is_a_pseudo_functor() {
    let a = fixtures::chain(3);
    let (src, hat, t) = build_hat(&a, 3);
    let r = check_pseudo_functor(&src, &hat, &t, &Probe::exhaustive(&src));
    assert!(r.is_ok(), "{r}");
}

#[test]
fn hat_normal_form_equations() {
    let a = fixtures::vee();
    let hat = HatTwoCat::new(a, 3);
    let ts = hat.all_tuples(2);
    for f in &ts {
        assert_eq!(hat.cell(f, f), Some(hat.id_cell(f)));
        for g in &ts {
            for h in &ts {
                if let (Some(x), Some(y)) = (hat.cell(f, g), hat.cell(g, h)) {
                    assert_eq!(hat.vertical(&y, &x), hat.cell(f, h));
                }
            }
        }
    }
}

#[test]
fn transport_restricts_to_the_original() {
    let a = fixtures::chain(2);
    let c = fixtures::z2_cells();
    let (src, hat, t) = build_hat(&a, 3);
    let probe = hat.probe(3);
    for f in enumerate_pseudo_functors(&a, &c) {
        let fhat = transport_along_hat(&hat, &c, &f, &probe).unwrap();
        let back = restrict_along_t::<TwoCat>(&t, &fhat).unwrap();
        assert_eq!(back, f);
        let r = check_pseudo_functor(&hat, &c, &fhat, &probe);
        assert!(r.is_ok(), "{r}");
        assert!(fhat.is_strict(&c));
        let _ = &src;
    }
}

#[test]
fn transport_of_empty_tuple_is_identity() {
    let a = fixtures::chain(2);
    let c = fixtures::point_into_z2();
    let (_, hat, _) = build_hat(&a, 2);
    let probe = hat.probe(2);
    let fs = enumerate_pseudo_functors(&a, &c);
    assert!(!fs.is_empty());
    for f in fs {
        let fhat = transport_along_hat(&hat, &c, &f, &probe).unwrap();
        for o in a.objects() {
            assert_eq!(fhat.arrow[&Tuple::empty(o)], c.id1(f.obj[&o]));
        }
    }
}

#[test]
fn strict_and_pseudo_counts_agree_on_a_small_case() {
    let a = fixtures::chain(2);
    let c = fixtures::point_into_z2();
    let pseudo = enumerate_pseudo_functors(&a, &c);
    let strict = enumerate_strict_hat_functors(&a, &c, 4);
    assert_eq!(pseudo.len(), strict.len());
    let (_, hat, t) = build_hat(&a, 4);
    let probe = hat.probe(4);
    for d in &strict {
        let g = hat_table(&hat, &c, d, &probe).unwrap();
        let f = restrict_along_t::<TwoCat>(&t, &g).unwrap();
        assert!(pseudo.contains(&f));
        assert_eq!(transport_data::<TwoCat>(&a, &f).as_ref(), Some(d));
    }
}

#[test]
fn fixtures_validate() {
    for (name, k) in fixtures::interchange_fixtures() {
        assert!(validate_twocat(&k).is_ok(), "{name}");
    }
}
