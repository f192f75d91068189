use std::path::Path;

use proptest::prelude::*;
use twocat::core::{FinCat, TwoCat};
use twocat::fixtures;
use twocat_cli::format::{to_canonical, CatDoc, TwoCatDoc};
use twocat_cli::workspace::{cat, cat_doc, parse_doc, twocat, twocat_doc, Ctx};

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
    let names: Vec<String> = (0..n).map(|x| format!("o{x}")).collect();
    FinCat::poset(&names, |x, y| leq[x][y])
}

fn ctx() -> Ctx {
    Ctx::file(Path::new("mem.json"))
}

fn cat_text_round_trips(c: &FinCat) -> Result<(), TestCaseError> {
    let text = to_canonical(&cat_doc(c));
    let back = cat(&parse_doc::<CatDoc>(&text, &ctx()).unwrap(), &ctx()).unwrap();
    prop_assert_eq!(&back, c);
    prop_assert_eq!(to_canonical(&cat_doc(&back)), text);
    Ok(())
}

fn twocat_text_round_trips(k: &TwoCat) -> Result<(), TestCaseError> {
    let text = to_canonical(&twocat_doc(k));
    let back = twocat(&parse_doc::<TwoCatDoc>(&text, &ctx()).unwrap(), &ctx()).unwrap();
    prop_assert_eq!(&back, k);
    prop_assert_eq!(to_canonical(&twocat_doc(&back)), text);
    Ok(())
}

proptest! {
    #[test]
    fn posets_round_trip(n in 1usize..=4, bits in proptest::collection::vec(any::<bool>(), 6)) {
        let c = poset(n, &bits);
        cat_text_round_trips(&c)?;
        twocat_text_round_trips(&TwoCat::locally_discrete(&c))?;
    }

    #[test]
    fn fixtures_round_trip(n in 0usize..5) {
        let (_, k) = &fixtures::interchange_fixtures()[n];
        twocat_text_round_trips(k)?;
        cat_text_round_trips(&k.underlying())?;
    }
}
