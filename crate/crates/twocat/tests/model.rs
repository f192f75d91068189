mod common;

use std::collections::BTreeSet;

use common::model_oracle;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twocat::core::TwoCat;
use twocat::fixtures;
use twocat::model::*;

fn iso_pair() -> TwoCat {
    TwoCat::locally_discrete(&fixtures::walking_iso())
}

fn squares_of(k: &TwoCat) -> Vec<LiftingSquare> {
    let mut out = Vec::new();
    for i in k.arrows() {
        for p in k.arrows() {
            out.extend(squares(k, &i, &p));
        }
    }
    out
}

#[test]
fn identity_left_side_is_filled_by_the_top() {
    let k = fixtures::point_into_z2();
    for p in k.arrows() {
        let i = k.id1(k.src(p));
        for sq in squares(&k, &i, &p) {
            let fl = solve_lifting(&k, &sq).unwrap().expect("filler");
            assert!(check_filler(&k, &sq, &fl));
            assert!(k.hom2(sq.a, fl.f).contains(&fl.lambda));
        }
    }
}

#[test]
fn invertible_right_side_is_filled_by_its_inverse() {
    let k = iso_pair();
    let p = k.find_arrow("f").unwrap();
    let g = k.find_arrow("g").unwrap();
    let i = p;
    let sq = LiftingSquare { i, p, a: k.id1(0), b: k.id1(1), gamma: k.id2(p) };
    let fl = solve_lifting(&k, &sq).unwrap().unwrap();
    assert_eq!(fl.f, k.comp1(g, sq.b).unwrap());
    // λ = g γ since g p = id
    assert_eq!(Some(fl.lambda), k.lwhisker(g, sq.gamma));
    assert!(k.is_identity_cell(fl.rho));
}

#[test]
fn square_without_filler() {
    let k = TwoCat::two();
    let u = k.find_arrow("0<=1").unwrap();
    let sq = LiftingSquare { i: u, p: u, a: k.id1(0), b: k.id1(1), gamma: k.id2(u) };
    assert_eq!(solve_lifting(&k, &sq).unwrap(), None);
    assert!(!has_lifting(&k, &u, &u));
}

#[test]
fn solve_lifting_matches_brute_force() {
    for k in [fixtures::point_into_z2(), fixtures::z2_cells(), iso_pair(), TwoCat::two()] {
        for sq in squares_of(&k) {
            let got = solve_lifting(&k, &sq).unwrap();
            assert_eq!(got.is_some(), model_oracle::fills(&k, sq.i, sq.p, sq.a, sq.b, sq.gamma));
            if let Some(fl) = got {
                assert!(check_filler(&k, &sq, &fl));
            }
        }
    }
}

#[test]
fn bad_square_is_rejected() {
    let k = TwoCat::two();
    let u = k.find_arrow("0<=1").unwrap();
    let sq = LiftingSquare { i: u, p: u, a: u, b: k.id1(1), gamma: k.id2(u) };
    assert!(matches!(solve_lifting(&k, &sq), Err(ModelError::ShapeMismatch(_))));
}

fn identity_retract(k: &TwoCat, f: usize) -> RetractData {
    let (c, d) = (k.src(f), k.tgt(f));
    RetractData {
        theta0: k.id1(c),
        theta1: k.id1(d),
        theta_m: k.id2(f),
        eta0: k.id1(c),
        eta1: k.id1(d),
        eta_m: k.id2(f),
        mu0: k.id2(k.id1(c)),
        mu1: k.id2(k.id1(d)),
    }
}

#[test]
fn every_arrow_is_its_own_retract() {
    let k = fixtures::point_into_z2();
    for f in k.arrows() {
        assert!(check_retract(&k, &f, &f, &identity_retract(&k, f)).unwrap());
    }
}

#[test]
fn wrong_mu_breaks_a_retraction() {
    // f = id with the non-trivial cell of Z/2 as μ1
    let k = fixtures::z2_cells();
    let f = k.id1(0);
    let s = *k.hom2(f, f).iter().find(|&&c| !k.is_identity_cell(c)).unwrap();
    let mut r = identity_retract(&k, f);
    r.mu1 = s;
    assert!(!check_retract(&k, &f, &f, &r).unwrap());
    r.mu0 = s;
    assert!(check_retract(&k, &f, &f, &r).unwrap());
}

#[test]
fn retract_argument_on_trivial_factorization() {
    let k = fixtures::point_into_z2();
    let p = k.find_arrow("F0").or_else(|| k.arrows().find(|&a| k.src(a) != k.tgt(a))).unwrap();
    let i = k.id1(k.src(p));
    let r = retract_argument(&k, &p, &i, &p, &k.id2(p), RetractCase::OfP, None).unwrap();
    assert!(check_retract(&k, &p, &p, &r).unwrap());
    let r = retract_argument(&k, &p, &i, &p, &k.id2(p), RetractCase::OfI, None);
    // (p, p) lifts only if p has a section up to iso
    if let Ok(r) = r {
        assert!(check_retract(&k, &p, &i, &r).unwrap());
    }
}

#[test]
fn retract_argument_case_one_has_the_stated_octuple() {
    let k = iso_pair();
    let (f, g) = (k.find_arrow("f").unwrap(), k.find_arrow("g").unwrap());
    // id_a ≅ g f
    let x = k.id1(0);
    let gamma = k.id2(x);
    let r = retract_argument(&k, &x, &f, &g, &gamma, RetractCase::OfI, None).unwrap();
    let sq = retract_square(&k, &x, &f, &g, &gamma, RetractCase::OfI).unwrap();
    let fl = solve_lifting(&k, &sq).unwrap().unwrap();
    assert_eq!(
        r,
        RetractData { theta0: x, theta1: fl.f, theta_m: fl.lambda, eta0: x, eta1: g, eta_m: gamma, mu0: k.id2(x), mu1: fl.rho }
    );
    assert!(check_retract(&k, &x, &f, &r).unwrap());
}

#[test]
fn retract_argument_reports_missing_filler() {
    let k = TwoCat::two();
    let u = k.find_arrow("0<=1").unwrap();
    // u = u id_0, but (u, u) does not lift
    let e = retract_argument(&k, &u, &k.id1(0), &u, &k.id2(u), RetractCase::OfI, None);
    assert!(matches!(e, Err(ModelError::NoFiller(_))));
}

/// Every `(f, i, p, γ)` with `γ: p i ⇒ f` invertible.
fn factorizations_with_cells(k: &TwoCat) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for f in k.arrows() {
        for (i, p) in factorizations(k, &f) {
            for &g in k.hom2(k.comp1(p, i).unwrap(), f) {
                if k.is_invertible(g) {
                    out.push((f, i, p, g));
                }
            }
        }
    }
    out
}

#[test]
fn retract_argument_output_is_a_retraction() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let ks = [fixtures::point_into_z2(), iso_pair(), fixtures::z2_and_arrow()];
    let mut done = 0;
    while done < 20 {
        let k = ks.choose(&mut rng).unwrap();
        let &(f, i, p, g) = factorizations_with_cells(k).choose(&mut rng).unwrap();
        let case = if rng.gen_bool(0.5) { RetractCase::OfI } else { RetractCase::OfP };
        match retract_argument(k, &f, &i, &p, &g, case, None) {
            Ok(r) => {
                let of = if case == RetractCase::OfI { i } else { p };
                assert!(check_retract(k, &f, &of, &r).unwrap());
                done += 1;
            }
            Err(ModelError::NoFiller(_)) => {
                let sq = retract_square(k, &f, &i, &p, &g, case).unwrap();
                assert!(!model_oracle::fills(k, sq.i, sq.p, sq.a, sq.b, sq.gamma));
            }
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn transfer_along_identity_retracts_returns_the_inner_filler() {
    let k = fixtures::point_into_z2();
    for sq in squares_of(&k) {
        let Some(fl) = solve_lifting(&k, &sq).unwrap() else { continue };
        let (rp, ri) = (identity_retract(&k, sq.p), identity_retract(&k, sq.i));
        let out = transfer_lifting(&k, &sq.p, &sq.p, &rp, &sq.i, &sq.i, &ri, &sq, Some(&fl)).unwrap();
        assert_eq!(out, fl);
    }
}

#[test]
fn transfer_along_retract_argument_data() {
    let k = iso_pair();
    let mut count = 0;
    let fs = factorizations_with_cells(&k);
    for &(f, i, p, g) in &fs {
        let Ok(r) = retract_argument(&k, &f, &i, &p, &g, RetractCase::OfP, None) else { continue };
        // f is a retract of p; lift (i2, f) for each i2 via (i2, p)
        for i2 in k.arrows() {
            let ri = identity_retract(&k, i2);
            for sq in squares(&k, &i2, &f) {
                if !has_lifting(&k, &i2, &p) {
                    continue;
                }
                let out = transfer_lifting(&k, &f, &p, &r, &i2, &i2, &ri, &sq, None).unwrap();
                assert!(check_filler(&k, &sq, &out));
                count += 1;
            }
        }
    }
    assert!(count > 0);
}

#[test]
fn terminal_with_trivial_classes_passes() {
    let k = TwoCat::terminal();
    let all: BTreeSet<usize> = k.arrows().collect();
    let c = ModelClasses { fibrations: all.clone(), cofibrations: all.clone(), weak_equivalences: all };
    let r = check_model_axioms(&k, &c);
    assert!(r.all_pass(), "{r}");
    assert!(matches!(r.verdict(Axiom::M0b), Verdict::NotChecked(_)));
    assert!(r.verdict(Axiom::M5).passed());
}

#[test]
fn missing_isomorphism_breaks_two_of_three() {
    let k = iso_pair();
    let all: BTreeSet<usize> = k.arrows().collect();
    let mut weq = all.clone();
    weq.remove(&k.find_arrow("f").unwrap());
    let c = ModelClasses { fibrations: all.clone(), cofibrations: all, weak_equivalences: weq };
    let r = check_model_axioms(&k, &c);
    let Verdict::Fail(w) = r.verdict(Axiom::M5) else { panic!("{r}") };
    assert!(w.iter().any(|s| s.contains("isomorphism f")));
}

fn random_classes(k: &TwoCat, rng: &mut impl Rng) -> ModelClasses {
    let pick = |rng: &mut dyn rand::RngCore| -> BTreeSet<usize> { k.arrows().filter(|_| rng.gen_bool(0.6)).collect() };
    ModelClasses { fibrations: pick(rng), cofibrations: pick(rng), weak_equivalences: pick(rng) }
}

pub fn six_cell() -> TwoCat {
    TwoCat::locally_discrete(&fixtures::chain(3))
}

#[test]
fn axiom_verdicts_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in [six_cell(), iso_pair(), fixtures::point_into_z2()] {
        for _ in 0..8 {
            let c = random_classes(&k, &mut rng);
            let r = check_model_axioms(&k, &c);
            for (a, pass) in model_oracle::axioms(&k, &c) {
                assert_eq!(r.verdict(a).passed(), pass, "{a}\n{r}");
            }
            // consequences of the lifting axioms
            if [Axiom::M6a, Axiom::M6b, Axiom::M6c].iter().all(|&a| r.verdict(a).passed()) {
                assert!(r.verdict(Axiom::M3b).passed() && r.verdict(Axiom::M7).passed(), "{r}");
                assert!(trivial_lifting_mismatches(&k, &c).is_empty());
            }
        }
    }
}

#[test]
fn all_arrows_in_every_class_on_a_groupoid() {
    let k = TwoCat::locally_discrete(&fixtures::walking_iso());
    let all: BTreeSet<usize> = k.arrows().collect();
    let c = ModelClasses { fibrations: all.clone(), cofibrations: all.clone(), weak_equivalences: all };
    let r = check_model_axioms(&k, &c);
    assert!(r.all_pass(), "{r}");
    assert!(trivial_lifting_mismatches(&k, &c).is_empty());
}
