#![allow(dead_code)]

pub mod model_oracle;

use rand::seq::SliceRandom;
use rand::Rng;
use twocat::core::catuni::{enumerate_functors, CatUniverse};
use twocat::core::{FinCat, FinFunctor, NatTrans, TwoCat};
use twocat::fixtures;
use twocat::kan::{CatDiagram, Variance};

/// A diagram over the locally discrete 2-category of `poset`; `fun(u)` is
/// the functor for the arrow `u`.
pub fn poset_diagram(poset: &FinCat, variance: Variance, cats: Vec<FinCat>, fun: impl Fn(usize) -> FinFunctor) -> CatDiagram {
    let index = TwoCat::locally_discrete(poset);
    let functors: Vec<FinFunctor> = index.arrows().map(&fun).collect();
    let nats = index
        .arrows()
        .map(|u| {
            let tgt = match variance {
                Variance::Covariant => index.tgt(u),
                Variance::Contravariant => index.src(u),
            };
            NatTrans::identity(&cats[tgt], &functors[u])
        })
        .collect();
    CatDiagram { index, variance, cats, functors, nats }
}

/// `F(0) = c`, `F(1) = d`, `F(0 <= 1) = g` over `𝟚`.
pub fn arrow_diagram(c: FinCat, d: FinCat, g: FinFunctor, variance: Variance) -> CatDiagram {
    let two = fixtures::chain(2);
    let (cc, dd) = (c.clone(), d.clone());
    poset_diagram(&two, variance, vec![c, d], move |u| match u {
        0 => FinFunctor::identity(&cc),
        1 => g.clone(),
        _ => FinFunctor::identity(&dd),
    })
}

/// The tautological diagram of the sub-2-category of Cat generated by
/// `gens` (source, target, functor).
pub fn universe_diagram(cats: Vec<FinCat>, gens: &[(usize, usize, FinFunctor)]) -> CatDiagram {
    let u = CatUniverse::new(cats.clone());
    let gens: Vec<_> = gens.iter().map(|(s, t, f)| u.functor(*s, *t, f.clone()).expect("generator")).collect();
    let (index, arrows, cells) = u.generated(&gens);
    CatDiagram {
        index,
        variance: Variance::Covariant,
        cats,
        functors: arrows.into_iter().map(|a| a.f).collect(),
        nats: cells.into_iter().map(|c| c.t).collect(),
    }
}

pub fn small_cats() -> Vec<FinCat> {
    vec![
        FinCat::terminal(),
        fixtures::chain(2),
        fixtures::z2(),
        fixtures::walking_iso(),
        fixtures::parallel_pair(),
        FinCat::discrete(&["p", "q"]),
    ]
}

pub fn small_posets() -> Vec<FinCat> {
    vec![FinCat::terminal(), fixtures::chain(2), fixtures::vee(), FinCat::discrete(&["p", "q"])]
}

/// A covariant diagram whose index has at most three objects, hom-sets of
/// at most six 1-cells and a 2-terminal object, returned as its id. The
/// terminal object carries a poset and every other object a functor into
/// it that all generators respect.
pub fn random_terminal_diagram(rng: &mut impl Rng) -> (CatDiagram, usize) {
    loop {
        let others = rng.gen_range(1..=2);
        let mut cats: Vec<FinCat> = (0..others).map(|_| small_cats().choose(rng).unwrap().clone()).collect();
        let top = small_posets().choose(rng).unwrap().clone();
        let t = cats.len();
        cats.push(top.clone());
        let g: Vec<FinFunctor> = (0..others).map(|x| enumerate_functors(&cats[x], &top).choose(rng).unwrap().clone()).collect();
        let mut gens: Vec<(usize, usize, FinFunctor)> = (0..others).map(|x| (x, t, g[x].clone())).collect();
        for x in 0..others {
            for y in 0..others {
                let cands: Vec<FinFunctor> = enumerate_functors(&cats[x], &cats[y])
                    .into_iter()
                    .filter(|u| !(x == y && u.is_identity()) && u.then(&g[y]) == g[x])
                    .collect();
                let take = rng.gen_range(0..=2).min(cands.len());
                for u in cands.choose_multiple(rng, take) {
                    gens.push((x, y, u.clone()));
                }
            }
        }
        let d = universe_diagram(cats, &gens);
        let k = &d.index;
        let small = k.objects().all(|a| k.objects().all(|b| k.hom1(a, b).len() <= 6));
        if small {
            return (d, t);
        }
    }
}

/// A pro-object over a poset with top (point, `𝟚`, chain of three or vee)
/// in the sub-2-category of Cat generated by its transition functors, one
/// extra category `D` (the last object) and a few functors into `D`.
pub fn random_pro_object(rng: &mut impl Rng) -> twocat::pro::ProObject {
    use twocat::pro::ProObject;
    // poset and the parent of each non-top object in a spanning tree
    let shapes: [(FinCat, Vec<Option<usize>>); 4] = [
        (FinCat::terminal(), vec![None]),
        (fixtures::chain(2), vec![Some(1), None]),
        (fixtures::chain(3), vec![Some(1), Some(2), None]),
        (fixtures::vee(), vec![Some(2), Some(2), None]),
    ];
    loop {
        let (p, parent) = shapes.choose(rng).unwrap().clone();
        let n = p.object_count();
        let cats: Vec<FinCat> = (0..n).map(|_| small_cats().choose(rng).unwrap().clone()).collect();
        // up[x]: F(parent x) -> F(x)
        let up: Option<Vec<Option<FinFunctor>>> = (0..n)
            .map(|x| match parent[x] {
                None => Some(None),
                Some(y) => enumerate_functors(&cats[y], &cats[x]).choose(rng).cloned().map(Some),
            })
            .collect();
        let Some(up) = up else { continue };
        let index = TwoCat::locally_discrete(&p);
        let fun = |u: usize| {
            let (x, y) = (index.src(u), index.tgt(u));
            let mut path = vec![x];
            while *path.last().unwrap() != y {
                path.push(parent[*path.last().unwrap()].unwrap());
            }
            let mut f = FinFunctor::identity(&cats[y]);
            for w in path.windows(2).rev() {
                f = f.then(up[w[0]].as_ref().unwrap());
            }
            f
        };
        let d = poset_diagram(&p, Variance::Contravariant, cats.clone(), fun);
        let extra = small_cats().choose(rng).unwrap().clone();
        let mut gens = Vec::new();
        for x in 0..n {
            if rng.gen_bool(0.4) {
                if let Some(f) = enumerate_functors(&cats[x], &extra).choose(rng) {
                    gens.push((x, n, f.clone()));
                }
            }
        }
        let Ok(x) = ProObject::from_cat_diagram(&d, &[extra], &gens) else { continue };
        if x.target.arrow_count() <= 24 && x.target.cell_count() <= 60 && x.validate().is_ok() {
            return x;
        }
    }
}
