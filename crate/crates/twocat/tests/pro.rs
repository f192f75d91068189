mod common;

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twocat::core::{equivalence_of_categories, hom_category, FinCat, FinFunctor, TwoCat};
use twocat::fixtures;
use twocat::kan::Variance;
use twocat::maps::identity_functor;
use twocat::pro::*;
use twocat::shape::build_mj;

fn isomorphic(a: &FinCat, b: &FinCat, f: &FinFunctor) -> bool {
    a.object_count() == b.object_count()
        && a.morphism_count() == b.morphism_count()
        && equivalence_of_categories(a, b, f).is_yes()
}

/// `X_0 = {p, q}`, `X_1 = 1`, `X_u` picking `p`, plus a constant functor
/// `k: {p, q} -> ℤ/2`.
fn pick_p() -> ProObject {
    let pq = FinCat::discrete(&["p", "q"]);
    let d = arrow_diagram(pq.clone(), FinCat::terminal(), FinFunctor::constant(&FinCat::terminal(), &pq, 0), Variance::Contravariant);
    let k = FinFunctor::constant(&pq, &fixtures::z2(), 0);
    ProObject::from_cat_diagram(&d, &[fixtures::z2()], &[(0, 2, k)]).unwrap()
}

#[test]
fn constant_pro_objects_have_the_hom_category() {
    let c = fixtures::arrow_and_iso();
    for a in c.objects() {
        for b in c.objects() {
            let h = pro_hom(&ProObject::constant(&c, a), &ProObject::constant(&c, b)).unwrap();
            let direct = hom_category(&c, a, b).unwrap();
            let l = &h.inner[0];
            assert_eq!(h.cat().object_count(), direct.object_count());
            assert_eq!(h.cat().morphism_count(), direct.morphism_count());
            // L over a point is C(a, b) with the same numbering
            let same = FinFunctor { obj: direct.objects().collect(), mor: direct.morphisms().collect() };
            assert!(isomorphic(&direct, l.cat(), &same));
        }
    }
}

#[test]
fn identity_on_a_constant_is_represented_by_the_identity() {
    let c = fixtures::z2_cells();
    let x = ProObject::constant(&c, 0);
    let h = pro_hom(&x, &x).unwrap();
    let f = h.identity().unwrap();
    let l = &h.inner[0];
    let o = l.object(0, c.id1(0)).unwrap();
    let rep = Representative { i: 0, j: 0, r: c.id1(0), phi: l.cat().id(o) };
    assert!(check_represents(&h, &rep, f).unwrap());
    assert_eq!(find_representative(&h, f, 0), rep);
}

#[test]
fn projection_decodes_to_identity_at_its_index() {
    let x = pick_p();
    let s = ProSlice::new(&x).unwrap();
    for i in x.index.objects() {
        let p = s.pi(i).unwrap();
        assert_eq!(s.homs[i].decode(p), (i, x.target.id1(x.obj[i])));
    }
    assert!(check_projections(&x).unwrap().is_ok());
}

#[test]
fn equalize_scans_past_the_identity() {
    let x = pick_p();
    let c = &x.target;
    let u = x.index.find_arrow("0<=1").unwrap();
    let k = c.hom1(x.obj[0], 2)[0];
    let l = x.hom_into(2).unwrap();
    let id = c.id2(k);
    let whisk = |t: usize| c.rwhisker(t, x.arrow[u]).unwrap();
    let cells = c.hom2(k, k);
    let at_q = *cells.iter().find(|&&t| t != id && whisk(t) == whisk(id)).unwrap();
    let at_p = *cells.iter().find(|&&t| whisk(t) != whisk(id)).unwrap();
    assert_eq!(equalize(&x, &l, 0, &[(id, id)]).unwrap(), x.index.id1(0));
    assert_eq!(equalize(&x, &l, 0, &[(id, at_q)]).unwrap(), u);
    assert_eq!(equalize(&x, &l, 0, &[(id, at_q), (at_p, at_p)]).unwrap(), u);
    assert!(matches!(equalize(&x, &l, 0, &[(id, at_p)]), Err(ProError::HypothesisFails(_))));
}

#[test]
fn straighten_identity_and_point_index() {
    let x = pick_p();
    let c = &x.target;
    let l = x.hom_into(2).unwrap();
    let k = c.hom1(x.obj[0], 2)[0];
    let o = l.object(0, k).unwrap();
    let st = straighten(&x, &l, l.cat().id(o)).unwrap();
    assert_eq!(st, Straightening { k: 0, u: x.index.id1(0), v: x.index.id1(0), theta: c.id2(k) });

    let c = fixtures::z2_cells();
    let p = ProObject::constant(&c, 0);
    let l = p.hom_into(0).unwrap();
    for m in l.cat().morphisms() {
        let st = straighten(&p, &l, m).unwrap();
        assert_eq!(st.k, 0);
        assert_eq!(l.lambda(0, st.theta), Some(m));
    }
}

#[test]
fn mf_of_an_identity_contains_the_identity() {
    let c = fixtures::arrow_and_iso();
    let x = ProObject::constant(&c, 0);
    let h = pro_hom(&x, &x).unwrap();
    let f = h.identity().unwrap();
    let m = build_mf(&h, f, 64).unwrap();
    assert!(m.objects.iter().any(|r| r.r == c.id1(0) && h.inner[0].cat().is_identity(r.phi)));
    assert!(m.filtered.is_filtered());
    assert!(m.cofinal_i.is_cofinal() && m.cofinal_j.is_cofinal());
    assert!(matches!(build_mf(&h, f, 0), Err(ProError::BoundTooSmall(_))));
}

fn terminal_diagram(x: &ProObject) -> ProDiagram {
    let h = pro_hom(x, x).unwrap();
    let f = h.identity().unwrap();
    ProDiagram { index: TwoCat::terminal(), objects: vec![x.clone()], arrows: vec![f], cells: vec![h.cat().id(f)] }
}

#[test]
fn kx_over_a_point_contains_the_index() {
    let x = pick_p();
    let d = terminal_diagram(&x);
    let k = build_kx(&d, 256).unwrap();
    assert_eq!(k.objects.len(), x.index.object_count());
    for u in x.index.arrows() {
        let (i, i2) = (x.index.src(u), x.index.tgt(u));
        assert!(k.arrows.iter().any(|e| k.objects[e.src] == (i, 0) && k.objects[e.tgt] == (i2, 0) && e.r == x.arrow[u]));
    }
    assert!(k.filtered.is_filtered());
    assert!(k.xtilde_report.is_ok());
    for e1 in &k.arrows {
        for e2 in k.arrows.iter().filter(|e| e.src == e1.tgt) {
            let rule = k.compose_rule(&d, e2, e1).unwrap();
            let n1 = k.find_arrow(e1).unwrap();
            let n2 = k.find_arrow(e2).unwrap();
            assert_eq!(k.cat.comp1(n2, n1), k.find_arrow(&rule));
        }
    }
}

#[test]
fn reindex_along_identity_is_the_same_object() {
    let x = pick_p();
    let r = reindex(&x, &x.index, &identity_functor(&x.index)).unwrap();
    assert_eq!(r.object, x);
    assert!(r.is_equivalence());
}

#[test]
fn reindex_along_the_top_keeps_hom_categories() {
    let x = pick_p();
    let top = TwoCat::terminal();
    let inc = twocat::maps::PseudoFunctor::strict(
        &top,
        &x.index,
        [(0, 1)].into(),
        [(0, x.index.id1(1))].into(),
        [(0, x.index.id2(x.index.id1(1)))].into(),
    );
    let r = reindex(&x, &top, &inc).unwrap();
    assert!(r.is_equivalence());
    assert_eq!(r.object.index.object_count(), 1);
    for d in x.target.objects() {
        let y = ProObject::constant(&x.target, d);
        let (_, dec) = hom_comparison(&pro_hom(&r.object, &y).unwrap(), &pro_hom(&x, &y).unwrap(), &inc).unwrap();
        assert!(dec.is_yes(), "{}", x.target.object_name(d));
    }
}

#[test]
fn reindex_along_mj_lands_on_a_poset() {
    let x = pick_p();
    let mj = build_mj(&x.index, 2, 1, None).unwrap();
    let all = mj.truncation.of_size(1);
    let (cat, phi) = mj.truncation.capped(&x.index, &all).unwrap();
    let r = reindex(&x, &cat, &phi).unwrap();
    assert!(r.is_equivalence());
    assert!(r.object.validate().is_ok());
}

#[test]
fn random_pro_objects_have_representatives_and_straightenings() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..12 {
        let x = random_pro_object(&mut rng);
        let c = &x.target;
        assert!(check_projections(&x).unwrap().is_ok());
        for d in c.objects() {
            let l = x.hom_into(d).unwrap();
            for m in l.cat().morphisms() {
                let st = straighten(&x, &l, m).unwrap();
                assert!(straightening_holds(&l, m, &st));
                let (i, _) = l.decode(l.cat().src(m));
                let (i2, _) = l.decode(l.cat().tgt(m));
                if i == i2 {
                    assert_eq!(st.u, st.v);
                }
                if l.cat().is_iso(m) {
                    assert!(c.is_invertible(st.theta));
                }
            }
            let y = ProObject::constant(c, d);
            let h = pro_hom(&x, &y).unwrap();
            for f in h.cat().objects() {
                let rep = find_representative(&h, f, 0);
                assert!(check_represents(&h, &rep, f).unwrap());
                // brute force: every (i, r, φ) that represents f
                let l = &h.inner[0];
                let mut found = Vec::new();
                for i in x.index.objects() {
                    for &r in c.hom1(x.obj[i], d) {
                        let o = l.object(i, r).unwrap();
                        for phi in l.cat().morphisms().filter(|&p| l.cat().src(p) == o) {
                            let cand = Representative { i, j: 0, r, phi };
                            if check_represents(&h, &cand, f).unwrap() {
                                found.push(cand);
                            } else {
                                assert!(!(l.cat().tgt(phi) == h.component(f, 0) && l.cat().is_iso(phi)));
                            }
                        }
                    }
                }
                assert!(found.contains(&rep));
            }
            for a in h.cat().morphisms() {
                let rep = find_representative_2cell(&h, a, 0).unwrap();
                assert!(check_represents_2cell(&h, &rep, a).unwrap());
                if h.cat().is_iso(a) {
                    assert!(c.is_invertible(rep.theta));
                }
            }
        }
    }
}

#[test]
fn random_identities_have_filtered_mf_and_kx() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..6 {
        let x = random_pro_object(&mut rng);
        let h = pro_hom(&x, &x).unwrap();
        let f = h.identity().unwrap();
        let m = build_mf(&h, f, 512).unwrap();
        assert!(m.filtered.is_filtered());
        for e in &m.arrows {
            assert!(mf_arrow_holds(&h, f, &m.objects[e.src], &m.objects[e.tgt], e.u, e.a, e.theta));
        }
        for cl in &m.cells {
            assert!(mf_cell_holds(&h, &m.objects, &m.arrows[cl.src], &m.arrows[cl.tgt], cl.mu, cl.alpha));
        }
        let k = build_kx(&terminal_diagram(&x), 4096).unwrap();
        assert!(k.filtered.is_filtered());
        assert!(k.xtilde_report.is_ok());
    }
}
