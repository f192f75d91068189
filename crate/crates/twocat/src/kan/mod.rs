//! Pseudo-colimits and pseudo-limits of category-valued 2-functors.
//!
//! A [`CatDiagram`] is a strict 2-functor from a finite index 2-category
//! into finite categories. Over a 2-filtered index its pseudo-colimit is
//! computed by [`ll_colimit`] from premorphisms and homotopies; over any
//! index the pseudo-limit is the category of descent objects built by
//! [`pseudo_limit_cat`].

mod colimit;
mod compare;
mod limit;

pub use colimit::{ll_colimit, ColimitPresentation, Homotopy, Premorphism};
pub use compare::{comparison_functor, factor_through, Comparison, Mediator, Presentation};
pub use limit::{pseudo_limit_cat, DescentObject, LimitPresentation};

use thiserror::Error;

use crate::core::catuni::{CatUniverse, UFun, UNat};
use crate::core::{FinCat, FinFunctor, NatTrans, Op, Report, TwoCat, TwoCategory};
use crate::maps::{check_pseudo_cone, check_pseudo_functor, ConeLaw, FunctorLaw, Probe, PseudoCone, PseudoConeOf, PseudoFunctor, PseudoFunctorOf};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KanError {
    #[error("NotFiltered: {0}")]
    NotFiltered(String),
    #[error("InvalidDiagram: {0}")]
    InvalidDiagram(String),
    #[error("HomotopyNotEquivalence: {0}")]
    HomotopyNotEquivalence(String),
    #[error("CompositionNotWellDefined: {0}")]
    CompositionNotWellDefined(String),
    #[error("NotACategory: {0}")]
    NotACategory(String),
    #[error("InvalidCone: {0}")]
    InvalidCone(String),
    #[error("NoMediator: {0}")]
    NoMediator(String),
    #[error("NotCofinal: {0}")]
    NotCofinal(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variance {
    /// `F: I -> Cat`, so `F u: F i -> F j` for `u: i -> j`.
    Covariant,
    /// `F: I^op -> Cat`, so `F u: F j -> F i`.
    Contravariant,
}

/// A strict 2-functor from `index` into finite categories: one category per
/// index object, one functor per index 1-cell, one natural transformation
/// per index 2-cell (`F α: F u ⇒ F u′` for `α: u ⇒ u′` in either variance).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatDiagram {
    pub index: TwoCat,
    pub variance: Variance,
    pub cats: Vec<FinCat>,
    pub functors: Vec<FinFunctor>,
    pub nats: Vec<NatTrans>,
}

impl CatDiagram {
    /// Object ids `(domain, codomain)` of `F u`.
    pub fn ends(&self, u: usize) -> (usize, usize) {
        let (i, j) = (self.index.src(u), self.index.tgt(u));
        match self.variance {
            Variance::Covariant => (i, j),
            Variance::Contravariant => (j, i),
        }
    }

    /// The diagram constant at `c` (all functors identities).
    pub fn constant(index: TwoCat, variance: Variance, c: &FinCat) -> CatDiagram {
        let cats = vec![c.clone(); index.object_count()];
        let functors = vec![FinFunctor::identity(c); index.arrow_count()];
        let nats = vec![NatTrans::identity(c, &FinFunctor::identity(c)); index.cell_count()];
        CatDiagram { index, variance, cats, functors, nats }
    }

    /// The categories of the diagram followed by `extra`.
    pub fn universe(&self, extra: &[FinCat]) -> CatUniverse {
        let mut cats = self.cats.clone();
        cats.extend_from_slice(extra);
        CatUniverse::new(cats)
    }

    fn ufun(&self, u: usize) -> UFun {
        let (a, b) = self.ends(u);
        UFun { src: a, tgt: b, f: self.functors[u].clone() }
    }

    fn unat(&self, c: usize) -> UNat {
        UNat { src: self.ufun(self.index.csrc(c)), tgt: self.ufun(self.index.ctgt(c)), t: self.nats[c].clone() }
    }

    /// The diagram as a table keyed by `index`, with compositor keys laid
    /// out for `S` (the index or its dual) and identity structure cells
    /// taken in `T`.
    fn table<S, T>(&self, s: &S, t: &T) -> PseudoFunctorOf<TwoCat, CatUniverse>
    where
        S: TwoCategory<Obj = usize, Arrow = usize, Cell = usize>,
        T: TwoCategory<Obj = usize, Arrow = UFun, Cell = UNat>,
    {
        let obj = self.index.objects().map(|o| (o, o)).collect();
        let arrow = self.index.arrows().map(|u| (u, self.ufun(u))).collect();
        let cell = self.index.cells().map(|c| (c, self.unat(c))).collect();
        PseudoFunctor::strict(s, t, obj, arrow, cell)
    }

    /// Structural checks plus the 2-functor laws with identity structure
    /// cells.
    pub fn validate(&self) -> Result<(), KanError> {
        let bad = |s: String| Err(KanError::InvalidDiagram(s));
        let k = &self.index;
        if self.cats.len() != k.object_count() || self.functors.len() != k.arrow_count() || self.nats.len() != k.cell_count() {
            return bad("table sizes do not match the index".into());
        }
        let u = self.universe(&[]);
        for a in k.arrows() {
            let (x, y) = self.ends(a);
            if let Err(e) = u.functor(x, y, self.functors[a].clone()) {
                return bad(format!("F({}): {e}", k.arrow_name(a)));
            }
        }
        for c in k.cells() {
            let (s, t) = (self.ufun(k.csrc(c)), self.ufun(k.ctgt(c)));
            if u.nat(&s, &t, self.nats[c].clone()).is_none() {
                return bad(format!("F({}) is not natural", k.cell_name(c)));
            }
        }
        let r = self.functor_report(&u);
        if !r.is_ok() {
            return bad(r.to_string().trim().replace('\n', "; "));
        }
        Ok(())
    }

    fn functor_report(&self, u: &CatUniverse) -> Report<FunctorLaw> {
        match self.variance {
            Variance::Covariant => {
                let f = self.table(&self.index, u);
                check_pseudo_functor(&self.index, u, &f, &Probe::exhaustive(&self.index))
            }
            Variance::Contravariant => {
                let op = Op(&self.index);
                let f = self.table(&op, u);
                check_pseudo_functor(&op, u, &f, &Probe::exhaustive(&op))
            }
        }
    }

    /// The composite diagram `G F` (or `G F^op`) for a strict `f: I -> J`
    /// into this diagram's index.
    pub fn precompose(&self, i: &TwoCat, f: &PseudoFunctorOf<TwoCat, TwoCat>) -> Result<CatDiagram, KanError> {
        let missing = || KanError::InvalidDiagram("reindexing functor is not total".into());
        let cats = i.objects().map(|o| f.obj.get(&o).map(|&x| self.cats[x].clone())).collect::<Option<Vec<_>>>().ok_or_else(missing)?;
        let functors =
            i.arrows().map(|u| f.arrow.get(&u).map(|&x| self.functors[x].clone())).collect::<Option<Vec<_>>>().ok_or_else(missing)?;
        let nats = i.cells().map(|c| f.cell.get(&c).map(|&x| self.nats[x].clone())).collect::<Option<Vec<_>>>().ok_or_else(missing)?;
        let d = CatDiagram { index: i.clone(), variance: self.variance, cats, functors, nats };
        d.validate()?;
        Ok(d)
    }
}

/// A test cone (or cocone) with a finite vertex category.
///
/// Over a contravariant diagram the cells are `θ_u: F u θ_j ⇒ θ_i`; over a
/// covariant one they are `θ_u: θ_i ⇒ θ_j F u`, both for `u: i -> j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatCone {
    pub vertex: FinCat,
    pub legs: Vec<FinFunctor>,
    pub cells: Vec<NatTrans>,
}

impl CatCone {
    /// The cocone `h θ` for `h: vertex -> e`.
    pub fn postcompose(&self, e: &FinCat, h: &FinFunctor) -> CatCone {
        CatCone {
            vertex: e.clone(),
            legs: self.legs.iter().map(|l| l.then(h)).collect(),
            cells: self.cells.iter().map(|c| NatTrans { comp: c.comp.iter().map(|&m| h.mor[m]).collect() }).collect(),
        }
    }

    /// The cone `θ h` for `h: e -> vertex`.
    pub fn precompose_cone(&self, e: &FinCat, h: &FinFunctor) -> CatCone {
        CatCone {
            vertex: e.clone(),
            legs: self.legs.iter().map(|l| h.then(l)).collect(),
            cells: self.cells.iter().map(|c| NatTrans { comp: h.obj.iter().map(|&x| c.comp[x]).collect() }).collect(),
        }
    }
}

/// Checks PC0-PC2 for a test cone over a contravariant diagram, or for the
/// inverted cells of a cocone over a covariant one.
pub fn check_cat_cone(d: &CatDiagram, cone: &CatCone) -> Report<ConeLaw> {
    let k = &d.index;
    let mut r = Report::new();
    if cone.legs.len() != k.object_count() || cone.cells.len() != k.arrow_count() {
        r.push(ConeLaw::ShapeMismatch, vec!["table sizes do not match the index".into()]);
        return r;
    }
    let n = d.cats.len();
    let u = d.universe(std::slice::from_ref(&cone.vertex));
    let legs: Vec<UFun> = match d.variance {
        Variance::Contravariant => k.objects().map(|i| UFun { src: n, tgt: i, f: cone.legs[i].clone() }).collect(),
        Variance::Covariant => k.objects().map(|i| UFun { src: i, tgt: n, f: cone.legs[i].clone() }).collect(),
    };
    for (i, l) in legs.iter().enumerate() {
        if u.functor(l.src, l.tgt, l.f.clone()).is_err() {
            r.push(ConeLaw::ShapeMismatch, vec![format!("leg at {}", k.object_name(i))]);
            return r;
        }
    }
    let mut cells = std::collections::BTreeMap::new();
    for a in k.arrows() {
        let (i, j) = (k.src(a), k.tgt(a));
        let fu = d.ufun(a);
        let cell = match d.variance {
            Variance::Contravariant => {
                let src = u.compose(&fu, &legs[j]);
                src.and_then(|s| u.nat(&s, &legs[i], cone.cells[a].clone()))
            }
            Variance::Covariant => {
                let tgt = u.compose(&legs[j], &fu);
                tgt.and_then(|t| u.nat(&legs[i], &t, cone.cells[a].clone())).and_then(|c| u.inverse(&c))
            }
        };
        match cell {
            Some(c) => {
                cells.insert(a, c);
            }
            None => {
                r.push(ConeLaw::ShapeMismatch, vec![format!("cell at {} is not a natural isomorphism", k.arrow_name(a))]);
                return r;
            }
        }
    }
    let legs = legs.into_iter().enumerate().collect();
    let pc: PseudoConeOf<TwoCat, CatUniverse> = PseudoCone { vertex: n, legs, cells };
    let op = Op(&d.index);
    let probe = Probe::exhaustive(&d.index);
    match d.variance {
        Variance::Contravariant => {
            let f = d.table(&op, &u);
            check_pseudo_cone(&d.index, &u, &f, &pc, &probe)
        }
        Variance::Covariant => {
            let ou = Op(&u);
            let f = d.table(&op, &ou);
            check_pseudo_cone(&d.index, &ou, &f, &pc, &probe)
        }
    }
}
