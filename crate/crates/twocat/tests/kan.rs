mod common;

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twocat::core::catuni::{enumerate_functors, enumerate_nat_trans};
use twocat::core::{equivalence_of_categories, FinCat, FinFunctor, NatTrans, TwoCat};
use twocat::fixtures;
use twocat::kan::*;
use twocat::maps::PseudoFunctor;

#[test]
fn colimit_over_a_point_is_the_value() {
    let c = fixtures::walking_iso();
    let d = CatDiagram::constant(TwoCat::terminal(), Variance::Covariant, &c);
    let l = ll_colimit(&d).unwrap();
    assert!(l.cone_report.is_ok());
    assert_eq!(l.cat.object_count(), c.object_count());
    assert_eq!(l.cat.morphism_count(), c.morphism_count());
    let lam = l.leg(0);
    assert!(lam.obj.iter().enumerate().all(|(i, &x)| i == x));
    assert!(equivalence_of_categories(&c, &l.cat, lam).is_yes());
}

#[test]
fn cocone_legs_and_cells_have_the_stated_form() {
    let g = FinFunctor::constant(&fixtures::z2(), &fixtures::chain(2), 1);
    let d = arrow_diagram(fixtures::z2(), fixtures::chain(2), g, Variance::Covariant);
    let l = ll_colimit(&d).unwrap();
    let u = d.index.find_arrow("0<=1").unwrap();
    // λ_0(*) = (*, 0)
    assert_eq!(l.leg(0).obj[0], l.object(0, 0));
    // (λ_u)_* = [u, id, id_1]
    let m = l.cocone.cells[u].comp[0];
    let rep = l.representative(m);
    let cl = l.class(l.object(0, 0), u, fixtures::chain(2).id(1), d.index.id1(1), l.object(1, 1)).unwrap();
    assert_eq!(cl, m);
    assert_eq!(rep.src, l.object(0, 0));
    assert_eq!(rep.tgt, l.object(1, 1));
}

#[test]
fn colimit_over_two_is_equivalent_to_the_top() {
    for (c, d) in [(fixtures::z2(), FinCat::terminal()), (fixtures::chain(2), fixtures::walking_iso())] {
        for g in enumerate_functors(&c, &d) {
            let diag = arrow_diagram(c.clone(), d.clone(), g, Variance::Covariant);
            let l = ll_colimit(&diag).unwrap();
            assert!(equivalence_of_categories(&d, &l.cat, l.leg(1)).is_yes());
        }
    }
}

#[test]
fn homotopy_is_an_equivalence_on_random_diagrams() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let (d, t) = random_terminal_diagram(&mut rng);
        let l = ll_colimit(&d).expect("colimit");
        // classes partition the premorphisms and witnesses recheck
        for cl in &l.classes {
            let p = l.premorphisms[cl[0]];
            for &q in cl {
                assert!(l.homotopy(&p, &l.premorphisms[q]).is_some());
            }
        }
        assert!(equivalence_of_categories(&d.cats[t], &l.cat, l.leg(t)).is_yes());
    }
}

#[test]
fn colimit_rejects_unfiltered_index() {
    let k = FinCat::discrete(&["a", "b"]);
    let d = poset_diagram(&k, Variance::Covariant, vec![FinCat::terminal(), FinCat::terminal()], |_| {
        FinFunctor::identity(&FinCat::terminal())
    });
    assert!(matches!(ll_colimit(&d), Err(KanError::NotFiltered(_))));
}

#[test]
fn limit_over_a_point_and_over_nothing() {
    let c = fixtures::chain(2);
    let l = pseudo_limit_cat(&CatDiagram::constant(TwoCat::terminal(), Variance::Contravariant, &c)).unwrap();
    assert!(equivalence_of_categories(&l.cat, &c, &l.cone.legs[0]).is_yes());
    let empty = TwoCat::locally_discrete(&FinCat::discrete(&[]));
    let l = pseudo_limit_cat(&CatDiagram::constant(empty, Variance::Contravariant, &c)).unwrap();
    assert_eq!((l.cat.object_count(), l.cat.morphism_count()), (1, 1));
}

/// Every pseudo-cone with the given vertex, found by brute force.
fn all_cones(d: &CatDiagram, vertex: &FinCat) -> usize {
    let k = &d.index;
    let legs: Vec<Vec<FinFunctor>> = k.objects().map(|i| enumerate_functors(vertex, &d.cats[i])).collect();
    let mut count = 0;
    let mut choice = vec![0; legs.len()];
    loop {
        let ls: Vec<FinFunctor> = choice.iter().enumerate().map(|(i, &c)| legs[i][c].clone()).collect();
        // cells for every arrow, each an invertible transformation F u θ_j ⇒ θ_i
        let mut cells: Vec<Vec<NatTrans>> = Vec::new();
        for u in k.arrows() {
            let (i, j) = (k.src(u), k.tgt(u));
            let src = ls[j].then(&d.functors[u]);
            let c = &d.cats[i];
            cells.push(enumerate_nat_trans(vertex, c, &src, &ls[i]).into_iter().filter(|t| t.inverse(c).is_some()).collect());
        }
        let mut pick = vec![0; cells.len()];
        if cells.iter().all(|c| !c.is_empty()) {
            loop {
                let cone = CatCone {
                    vertex: vertex.clone(),
                    legs: ls.clone(),
                    cells: pick.iter().enumerate().map(|(u, &p)| cells[u][p].clone()).collect(),
                };
                if check_cat_cone(d, &cone).is_ok() {
                    count += 1;
                }
                if !advance(&mut pick, &cells.iter().map(|c| c.len()).collect::<Vec<_>>()) {
                    break;
                }
            }
        }
        if !advance(&mut choice, &legs.iter().map(|l| l.len()).collect::<Vec<_>>()) {
            return count;
        }
    }
}

fn advance(x: &mut [usize], sizes: &[usize]) -> bool {
    for i in 0..x.len() {
        x[i] += 1;
        if x[i] < sizes[i] {
            return true;
        }
        x[i] = 0;
    }
    false
}

#[test]
fn limit_over_two_matches_cone_enumeration() {
    // F(1) -> F(0) is the transition functor
    let cases = [(fixtures::walking_iso(), fixtures::chain(2)), (fixtures::z2(), fixtures::z2())];
    for (c0, c1) in cases {
        for g in enumerate_functors(&c1, &c0) {
            let d = arrow_diagram(c0.clone(), c1.clone(), g, Variance::Contravariant);
            let l = pseudo_limit_cat(&d).unwrap();
            assert!(l.cone_report.is_ok());
            assert!(equivalence_of_categories(&l.cat, &c1, &l.cone.legs[1]).is_yes());
            assert_eq!(all_cones(&d, &FinCat::terminal()), l.cat.object_count());
            assert_eq!(all_cones(&d, &fixtures::chain(2)), l.cat.morphism_count());
        }
    }
}

#[test]
fn limit_mediators() {
    let g = FinFunctor::constant(&fixtures::z2(), &fixtures::z2(), 0);
    let d = arrow_diagram(fixtures::z2(), fixtures::z2(), g, Variance::Contravariant);
    let l = pseudo_limit_cat(&d).unwrap();
    let own = factor_through(Presentation::Limit(&l), &l.cone).unwrap();
    assert!(own.functor.is_identity());
    let a = fixtures::chain(2);
    for h in enumerate_functors(&a, &l.cat) {
        let cone = l.cone.precompose_cone(&a, &h);
        let m = factor_through(Presentation::Limit(&l), &cone).unwrap();
        assert_eq!(m.functor, h);
        for i in d.index.objects() {
            assert_eq!(m.functor.then(&l.cone.legs[i]), cone.legs[i]);
        }
    }
}

#[test]
fn colimit_mediators() {
    let c = fixtures::chain(2);
    let d = arrow_diagram(fixtures::z2(), c.clone(), FinFunctor::constant(&fixtures::z2(), &c, 0), Variance::Covariant);
    let l = ll_colimit(&d).unwrap();
    let own = factor_through(Presentation::Colimit(&l), &l.cocone).unwrap();
    assert!(own.functor.is_identity());
    let e = fixtures::walking_iso();
    for h in enumerate_functors(&l.cat, &e) {
        let cone = l.cocone.postcompose(&e, &h);
        let m = factor_through(Presentation::Colimit(&l), &cone).unwrap();
        assert_eq!(m.functor, h);
    }
}

#[test]
fn invalid_test_cone_is_rejected() {
    let c = fixtures::chain(2);
    let d = arrow_diagram(fixtures::z2(), c.clone(), FinFunctor::constant(&fixtures::z2(), &c, 0), Variance::Covariant);
    let l = ll_colimit(&d).unwrap();
    let u = d.index.find_arrow("0<=1").unwrap();
    let mut bad = l.cocone.clone();
    // a cell component ending at (1,1) instead of (0,1)
    let wrong = l.cat.hom(l.object(0, 0), l.object(1, 1))[0];
    bad.cells[u] = NatTrans { comp: vec![wrong] };
    assert!(!check_cat_cone(&d, &bad).is_ok());
    assert!(matches!(factor_through(Presentation::Colimit(&l), &bad), Err(KanError::InvalidCone(_))));
}

#[test]
fn comparison_along_identity_and_top_inclusion() {
    let c = fixtures::chain(2);
    let d = fixtures::walking_iso();
    for g in enumerate_functors(&c, &d) {
        let diag = arrow_diagram(c.clone(), d.clone(), g, Variance::Covariant);
        let two = TwoCat::two();
        let id = twocat::maps::identity_functor(&two);
        let cmp = comparison_functor(&two, &two, &id, &diag).unwrap();
        assert!(cmp.decision.is_yes());
        assert!(cmp.functor.is_identity());

        let one = TwoCat::terminal();
        let top = PseudoFunctor::strict(
            &one,
            &two,
            [(0, 1)].into(),
            [(0, two.id1(1))].into(),
            [(0, two.id2(two.id1(1)))].into(),
        );
        let cmp = comparison_functor(&one, &two, &top, &diag).unwrap();
        assert!(cmp.decision.is_yes(), "{:?}", cmp.decision);
        // h[u, r, v] = [F u, r, F v]
        for cl in &cmp.source.classes {
            let p = cmp.source.premorphisms[cl[0]];
            let m = cmp.functor.mor[cmp.source.class_of_premorphism(cl[0])];
            let q = cmp.target.class(cmp.functor.obj[p.src], top.arrow[&p.u], p.r, top.arrow[&p.v], cmp.functor.obj[p.tgt]);
            assert_eq!(q, Some(m));
        }
    }
}

#[test]
fn comparison_rejects_non_cofinal() {
    let two = TwoCat::two();
    let one = TwoCat::terminal();
    let bottom = PseudoFunctor::strict(&one, &two, [(0, 0)].into(), [(0, two.id1(0))].into(), [(0, two.id2(two.id1(0)))].into());
    let diag = arrow_diagram(FinCat::terminal(), FinCat::terminal(), FinFunctor::identity(&FinCat::terminal()), Variance::Covariant);
    assert!(matches!(comparison_functor(&one, &two, &bottom, &diag), Err(KanError::NotCofinal(_))));
}
