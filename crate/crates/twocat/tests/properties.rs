mod common;

use proptest::prelude::*;
use twocat::core::catuni::enumerate_functors;
use twocat::core::{equivalence_of_categories, validate_fincat, validate_twocat, FinCat, FinFunctor, Table, TwoCat};
use twocat::fixtures;
use twocat::kan::{ll_colimit, Variance};
use twocat::model::{check_filler, solve_lifting, squares};
use twocat::pasting::{elevator_sides, equal, evaluate, parse_elevator, CellEnv, ElevatorExpr};
use twocat::shape::{check_2cofinal, check_2filtered};

/// A poset on `n` points from the strictly upper triangle `bits`, closed
/// transitively.
fn poset(n: usize, bits: &[bool]) -> FinCat {
    let mut leq = vec![vec![false; n]; n];
    let mut b = bits.iter();
    for (x, row) in leq.iter_mut().enumerate() {
        row[x] = true;
        for y in x + 1..n {
            row[y] = *b.next().unwrap_or(&false);
        }
    }
    for k in 0..n {
        for x in 0..n {
            for y in 0..n {
                if leq[x][k] && leq[k][y] {
                    leq[x][y] = true;
                }
            }
        }
    }
    let names: Vec<String> = (0..n).map(|x| x.to_string()).collect();
    FinCat::poset(&names, |x, y| leq[x][y])
}

fn arb_poset() -> impl Strategy<Value = FinCat> {
    (1usize..=4).prop_flat_map(|n| proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| poset(n, &b)))
}

fn has_top(c: &FinCat) -> bool {
    c.objects().any(|t| c.objects().all(|x| !c.hom(x, t).is_empty()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn posets_are_categories(c in arb_poset()) {
        prop_assert!(validate_fincat(&c).is_ok());
        prop_assert!(validate_twocat(&TwoCat::locally_discrete(&c)).is_ok());
    }

    #[test]
    fn a_poset_is_filtered_iff_it_has_a_top(c in arb_poset()) {
        prop_assert_eq!(check_2filtered(&TwoCat::locally_discrete(&c)).is_filtered(), has_top(&c));
    }

    #[test]
    fn identity_is_an_equivalence(c in arb_poset()) {
        prop_assert!(equivalence_of_categories(&c, &c, &FinFunctor::identity(&c)).is_yes());
    }

    #[test]
    fn identity_pseudo_functor_is_cofinal(c in arb_poset()) {
        let k = TwoCat::locally_discrete(&c);
        let id = twocat::maps::identity_functor(&k);
        prop_assert!(check_2cofinal(&k, &k, &id).is_cofinal());
    }

    #[test]
    fn changing_a_composite_breaks_validation(c in arb_poset(), pick in any::<prop::sample::Index>(), to in any::<prop::sample::Index>()) {
        let k = TwoCat::locally_discrete(&c);
        let entries = k.table_entries(Table::HComp1);
        let (key, old) = entries[pick.index(entries.len())];
        let new = to.index(k.arrow_count());
        prop_assume!(new != old);
        // a poset has one arrow per hom, so any other value is wrong
        prop_assert!(!validate_twocat(&k.with_entry(Table::HComp1, key, new)).is_ok());
    }

    #[test]
    fn elevator_sides_agree(n in 0usize..5, a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let (_, k) = &fixtures::interchange_fixtures()[n];
        let cells: Vec<usize> = k.cells().collect();
        let x = cells[a.index(cells.len())];
        let next: Vec<usize> = cells.iter().copied().filter(|&y| k.src(k.csrc(y)) == k.tgt(k.csrc(x))).collect();
        prop_assume!(!next.is_empty());
        let y = next[b.index(next.len())];
        let [s1, s2, s3] = elevator_sides(k, &x, &y).unwrap();
        prop_assert_eq!(s1, s2);
        prop_assert_eq!(s2, s3);
    }

    #[test]
    fn parsed_elevators_match_the_tables(n in 0usize..5, a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let (_, k) = &fixtures::interchange_fixtures()[n];
        let env = CellEnv::of_names(k);
        let cells: Vec<usize> = k.cells().collect();
        let x = cells[a.index(cells.len())];
        let same: Vec<usize> = cells.iter().copied().filter(|&y| k.csrc(y) == k.ctgt(x)).collect();
        let y = same[b.index(same.len())];
        let src = format!("{} v {}", k.cell_name(x), k.cell_name(y));
        let e = parse_elevator(&src).unwrap();
        prop_assert_eq!(evaluate(&e, &env).unwrap(), k.vert(y, x).unwrap());
        let stacked = ElevatorExpr::Vert(Box::new(ElevatorExpr::Cell(k.cell_name(x).into())), Box::new(ElevatorExpr::Cell(k.cell_name(y).into())));
        prop_assert!(equal(&e, &stacked, &env).unwrap());
    }

    #[test]
    fn solved_fillers_satisfy_the_equation(n in 0usize..5, i in any::<prop::sample::Index>(), p in any::<prop::sample::Index>()) {
        let (_, k) = &fixtures::interchange_fixtures()[n];
        let (i, p) = (i.index(k.arrow_count()), p.index(k.arrow_count()));
        for sq in squares(k, &i, &p) {
            let got = solve_lifting(k, &sq).unwrap();
            prop_assert_eq!(got.is_some(), common::model_oracle::fills(k, sq.i, sq.p, sq.a, sq.b, sq.gamma));
            if let Some(fl) = got {
                prop_assert!(check_filler(k, &sq, &fl));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn colimit_over_two_recovers_the_top(c in 0usize..6, d in 0usize..4, g in any::<prop::sample::Index>()) {
        let c = common::small_cats()[c].clone();
        let d = common::small_posets()[d].clone();
        let fs = enumerate_functors(&c, &d);
        prop_assume!(!fs.is_empty());
        let g = fs[g.index(fs.len())].clone();
        let diag = common::arrow_diagram(c, d.clone(), g, Variance::Covariant);
        let l = ll_colimit(&diag).unwrap();
        prop_assert!(l.cone_report.is_ok());
        prop_assert!(equivalence_of_categories(&d, &l.cat, l.leg(1)).is_yes());
    }
}
