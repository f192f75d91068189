//! 2-pro-objects: strict 2-functors `X: I^op -> C` over a finite 2-filtered
//! index, with hom categories computed from
//! `Pro(C)(X, Y) ≅ Lim_j coLim_i C(X_i, Y_j)`.
//!
//! Morphisms `r π_i ⇒ π_j f` of `Pro(C)` are read inside the presented
//! categories `coLim_i C(X_i, D)`; [`HomInto`] carries one of these with
//! the bookkeeping between global cell ids of `C` and local ids.

mod hom;
mod index;
mod represent;
mod slice;

pub use hom::{compose_elements, hom_comparison, precompose_functor, pro_hom, ProHom};
pub use index::{build_kx, build_mf, mf_arrow_holds, mf_cell_holds, reindex, KArrow, KCell, KXTruncation, MArrow, MCell, MfTruncation, ProDiagram, Reindexed};
pub use represent::{
    check_represents, check_represents_2cell, equalize, find_representative, find_representative_2cell, straighten, straightening_holds,
    Representative, Representative2, Straightening,
};
pub use slice::{check_projections, ProSlice, SliceArrow, SliceCell, SliceObj};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::core::catuni::CatUniverse;
use crate::core::{hom_category, FinCat, FinFunctor, NatTrans, Op, TwoCat};
use crate::kan::{ll_colimit, CatDiagram, ColimitPresentation, KanError, Premorphism, Variance};
use crate::maps::{check_pseudo_functor, Probe, PseudoFunctor, PseudoFunctorOf};
use crate::shape::check_2filtered;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProError {
    #[error("InvalidProObject: {0}")]
    Invalid(String),
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),
    #[error("NotFound: {0}")]
    NotFound(String),
    #[error("HypothesisFails: {0}")]
    HypothesisFails(String),
    #[error("BoundTooSmall: {0}")]
    BoundTooSmall(String),
    #[error(transparent)]
    Kan(#[from] KanError),
}

/// A strict 2-functor `X: I^op -> C`: `X_u: X_j -> X_i` for `u: i -> j`
/// and `X_α: X_u ⇒ X_u′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProObject {
    pub index: TwoCat,
    pub target: TwoCat,
    pub obj: Vec<usize>,
    pub arrow: Vec<usize>,
    pub cell: Vec<usize>,
}

impl ProObject {
    /// `c(C)`: the object `C` indexed by the point.
    pub fn constant(target: &TwoCat, c: usize) -> ProObject {
        ProObject { index: TwoCat::terminal(), target: target.clone(), obj: vec![c], arrow: vec![target.id1(c)], cell: vec![target.id2(target.id1(c))] }
    }

    /// Reads a contravariant category-valued diagram as a pro-object in the
    /// sub-2-category of `Cat` generated by its functors and `extra`, whose
    /// ends index `d.cats` followed by `extra_cats`.
    pub fn from_cat_diagram(d: &CatDiagram, extra_cats: &[FinCat], extra: &[(usize, usize, FinFunctor)]) -> Result<ProObject, ProError> {
        if d.variance != Variance::Contravariant {
            return Err(ProError::Invalid("a pro-object needs a contravariant diagram".into()));
        }
        d.validate()?;
        let u = CatUniverse::new(d.cats.iter().chain(extra_cats).cloned().collect());
        let gens: Vec<_> = d
            .index
            .arrows()
            .map(|a| u.functor(d.ends(a).0, d.ends(a).1, d.functors[a].clone()))
            .collect::<Result<_, _>>()
            .map_err(|e| ProError::Invalid(e.to_string()))?;
        let more: Vec<_> = extra
            .iter()
            .map(|(s, t, f)| u.functor(*s, *t, f.clone()))
            .collect::<Result<_, _>>()
            .map_err(|e| ProError::Invalid(e.to_string()))?;
        let all: Vec<_> = gens.iter().chain(&more).cloned().collect();
        let (target, arrows, cells) = u.generated(&all);
        let arrow: Vec<usize> = gens.iter().map(|g| arrows.iter().position(|a| a == g).expect("generator")).collect();
        let mut cell = Vec::new();
        for c in d.index.cells() {
            let (s, t) = (&gens[d.index.csrc(c)], &gens[d.index.ctgt(c)]);
            let n = u.nat(s, t, d.nats[c].clone()).ok_or_else(|| ProError::Invalid("unnatural 2-cell".into()))?;
            cell.push(cells.iter().position(|x| *x == n).expect("all transformations are present"));
        }
        Ok(ProObject { index: d.index.clone(), target, obj: d.index.objects().collect(), arrow, cell })
    }

    /// The table of `X` keyed for `I^op`.
    pub fn table(&self) -> PseudoFunctorOf<TwoCat, TwoCat> {
        let k = &self.index;
        let obj = k.objects().map(|i| (i, self.obj[i])).collect();
        let arrow = k.arrows().map(|u| (u, self.arrow[u])).collect();
        let cell = k.cells().map(|c| (c, self.cell[c])).collect();
        PseudoFunctor::strict(&Op(k), &self.target, obj, arrow, cell)
    }

    /// Shapes, strict 2-functoriality and 2-filteredness of the index.
    pub fn validate(&self) -> Result<(), ProError> {
        let (k, c) = (&self.index, &self.target);
        let bad = |s: String| Err(ProError::Invalid(s));
        if self.obj.len() != k.object_count() || self.arrow.len() != k.arrow_count() || self.cell.len() != k.cell_count() {
            return bad("table sizes do not match the index".into());
        }
        if self.obj.iter().any(|&o| o >= c.object_count()) || self.arrow.iter().any(|&a| a >= c.arrow_count()) || self.cell.iter().any(|&a| a >= c.cell_count()) {
            return bad("dangling id in the target".into());
        }
        for u in k.arrows() {
            if c.src(self.arrow[u]) != self.obj[k.tgt(u)] || c.tgt(self.arrow[u]) != self.obj[k.src(u)] {
                return bad(format!("X({}) has the wrong boundary", k.arrow_name(u)));
            }
        }
        let op = Op(k);
        let r = check_pseudo_functor(&op, c, &self.table(), &Probe::exhaustive(&op));
        if !r.is_ok() {
            return bad(r.to_string().trim().replace('\n', "; "));
        }
        let f = check_2filtered(k);
        if !f.is_filtered() {
            return bad(format!("index is not 2-filtered: {}", f.first_failure().unwrap_or_default()));
        }
        Ok(())
    }

    /// `i ↦ C(X_i, D)` with precomposition by `X_u`.
    pub fn hom_diagram(&self, d: usize) -> CatDiagram {
        self.hom_diagram_with(&self.locals(d))
    }

    fn locals(&self, d: usize) -> Vec<LocalHom> {
        self.index.objects().map(|i| LocalHom::new(&self.target, self.obj[i], d)).collect()
    }

    fn hom_diagram_with(&self, homs: &[LocalHom]) -> CatDiagram {
        let (k, c) = (&self.index, &self.target);
        let cats = homs.iter().map(|h| h.cat.clone()).collect();
        let functors = k
            .arrows()
            .map(|u| {
                let (i, j) = (k.src(u), k.tgt(u));
                let xu = self.arrow[u];
                let obj = homs[i].arrows.iter().map(|&r| homs[j].arrow(c.comp1(r, xu).expect("composable"))).collect();
                let mor = homs[i].cells.iter().map(|&t| homs[j].cell(c.rwhisker(t, xu).expect("whiskerable"))).collect();
                FinFunctor { obj, mor }
            })
            .collect();
        let nats = k
            .cells()
            .map(|a| {
                let i = k.src(k.csrc(a));
                let comp = homs[i].arrows.iter().map(|&r| homs[k.tgt(k.csrc(a))].cell(c.lwhisker(r, self.cell[a]).expect("whiskerable"))).collect();
                NatTrans { comp }
            })
            .collect();
        CatDiagram { index: k.clone(), variance: Variance::Covariant, cats, functors, nats }
    }

    /// `coLim_i C(X_i, D)`, which presents `Pro(C)(X, c(D))`.
    pub fn hom_into(&self, d: usize) -> Result<HomInto, ProError> {
        let homs = self.locals(d);
        let colim = ll_colimit(&self.hom_diagram_with(&homs))?;
        Ok(HomInto { d, colim, homs, xarrow: self.arrow.clone(), index: self.index.clone(), target: self.target.clone() })
    }

    /// `X_F = X F^op` for a strict `F` into the index.
    pub fn precompose(&self, i: &TwoCat, f: &PseudoFunctorOf<TwoCat, TwoCat>) -> Result<ProObject, ProError> {
        let miss = || ProError::ShapeMismatch("reindexing functor is not total".into());
        let obj = i.objects().map(|o| f.obj.get(&o).map(|&x| self.obj[x])).collect::<Option<_>>().ok_or_else(miss)?;
        let arrow = i.arrows().map(|u| f.arrow.get(&u).map(|&x| self.arrow[x])).collect::<Option<_>>().ok_or_else(miss)?;
        let cell = i.cells().map(|a| f.cell.get(&a).map(|&x| self.cell[x])).collect::<Option<_>>().ok_or_else(miss)?;
        Ok(ProObject { index: i.clone(), target: self.target.clone(), obj, arrow, cell })
    }
}

/// `C(A, B)` with its local numbering (objects in `hom1` order, morphisms
/// by increasing cell id).
#[derive(Clone, Debug)]
pub(crate) struct LocalHom {
    pub cat: FinCat,
    pub arrows: Vec<usize>,
    pub cells: Vec<usize>,
    arrow_ix: BTreeMap<usize, usize>,
    cell_ix: BTreeMap<usize, usize>,
}

impl LocalHom {
    pub fn new(c: &TwoCat, a: usize, b: usize) -> LocalHom {
        let cat = hom_category(c, a, b).expect("objects of the target");
        let arrows = c.hom1(a, b).to_vec();
        let mut cells: Vec<usize> = arrows.iter().flat_map(|&f| arrows.iter().flat_map(move |&g| c.hom2(f, g).to_vec())).collect();
        cells.sort_unstable();
        let arrow_ix = arrows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let cell_ix = cells.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        LocalHom { cat, arrows, cells, arrow_ix, cell_ix }
    }

    pub fn arrow(&self, f: usize) -> usize {
        self.arrow_ix[&f]
    }

    pub fn cell(&self, t: usize) -> usize {
        self.cell_ix[&t]
    }

    pub fn try_arrow(&self, f: usize) -> Option<usize> {
        self.arrow_ix.get(&f).copied()
    }

    pub fn try_cell(&self, t: usize) -> Option<usize> {
        self.cell_ix.get(&t).copied()
    }
}

/// A premorphism `[u, θ, v]` with `θ` a global cell of `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub k: usize,
    pub u: usize,
    pub theta: usize,
    pub v: usize,
}

/// `coLim_i C(X_i, D)` for a fixed pro-object `X` and object `D`.
#[derive(Clone, Debug)]
pub struct HomInto {
    pub d: usize,
    pub colim: ColimitPresentation,
    homs: Vec<LocalHom>,
    xarrow: Vec<usize>,
    index: TwoCat,
    target: TwoCat,
}

impl HomInto {
    pub fn cat(&self) -> &FinCat {
        &self.colim.cat
    }

    /// The object `r π_i` for `r: X_i -> D`.
    pub fn object(&self, i: usize, r: usize) -> Option<usize> {
        Some(self.colim.object(self.homs.get(i)?.try_arrow(r)?, i))
    }

    /// `(i, r)` with the object equal to `r π_i`.
    pub fn decode(&self, x: usize) -> (usize, usize) {
        let (c, i) = self.colim.objects[x];
        (i, self.homs[i].arrows[c])
    }

    fn span_of(&self, p: &Premorphism) -> Span {
        Span { k: p.k, u: p.u, theta: self.homs[p.k].cells[p.r], v: p.v }
    }

    /// Every premorphism in the class of `m`, canonical one first.
    pub fn members(&self, m: usize) -> Vec<Span> {
        self.colim.classes[m].iter().map(|&p| self.span_of(&self.colim.premorphisms[p])).collect()
    }

    pub fn decode_morphism(&self, m: usize) -> Span {
        self.span_of(&self.colim.representative(m))
    }

    /// The class of `[u, θ, v]` between the given objects.
    pub fn class(&self, src: usize, s: Span, tgt: usize) -> Option<usize> {
        let r = self.homs.get(s.k)?.try_cell(s.theta)?;
        self.colim.class(src, s.u, r, s.v, tgt)
    }

    /// `θ π_i` for `θ: r ⇒ s` in `C(X_i, D)`.
    pub fn lambda(&self, i: usize, theta: usize) -> Option<usize> {
        let c = &self.target;
        let (src, tgt) = (self.object(i, c.csrc(theta))?, self.object(i, c.ctgt(theta))?);
        let id = self.index.id1(i);
        self.class(src, Span { k: i, u: id, theta, v: id }, tgt)
    }

    /// `r π_u: r X_u π_k ⇒ r π_i`, i.e. `[id_k, id, u]`.
    pub fn r_pi(&self, r: usize, u: usize) -> Option<usize> {
        let (c, k) = (&self.target, &self.index);
        let (i, kk) = (k.src(u), k.tgt(u));
        let rxu = c.comp1(r, self.xarrow[u])?;
        let (src, tgt) = (self.object(kk, rxu)?, self.object(i, r)?);
        self.class(src, Span { k: kk, u: k.id1(kk), theta: c.id2(rxu), v: u }, tgt)
    }

    /// Postcomposition with `a: D -> D′` on objects.
    pub fn push_object(&self, a: usize, to: &HomInto, x: usize) -> Option<usize> {
        let (i, r) = self.decode(x);
        to.object(i, self.target.comp1(a, r)?)
    }

    /// Postcomposition with `a: D -> D′` on morphisms.
    pub fn push_morphism(&self, a: usize, to: &HomInto, m: usize) -> Option<usize> {
        let s = self.decode_morphism(m);
        let (src, tgt) = (self.push_object(a, to, self.cat().src(m))?, self.push_object(a, to, self.cat().tgt(m))?);
        to.class(src, Span { theta: self.target.lwhisker(a, s.theta)?, ..s }, tgt)
    }

    /// Postcomposition with `a` as a functor into `to`.
    pub fn push_functor(&self, a: usize, to: &HomInto) -> Option<FinFunctor> {
        let obj = self.cat().objects().map(|x| self.push_object(a, to, x)).collect::<Option<_>>()?;
        let mor = self.cat().morphisms().map(|m| self.push_morphism(a, to, m)).collect::<Option<_>>()?;
        Some(FinFunctor { obj, mor })
    }

    /// The whiskering `γ x` of `γ: a ⇒ a′` (cells `D -> D′`) at the object
    /// `x`, a morphism of `to`.
    pub fn whisker_cell(&self, gamma: usize, to: &HomInto, x: usize) -> Option<usize> {
        let (i, r) = self.decode(x);
        to.lambda(i, self.target.rwhisker(gamma, r)?)
    }
}
