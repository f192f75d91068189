use std::collections::BTreeMap;

use super::{HomInto, ProError, ProObject};
use crate::core::{Op, Report, TwoCat, TwoCategory};
use crate::maps::{check_pseudo_cone, ConeLaw, Probe, PseudoCone, PseudoFunctor};

/// Objects of the sub-2-category of `Pro(C)` on `X` and the `c(X_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SliceObj {
    Top,
    Base(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SliceArrow {
    IdTop,
    /// An object of `Pro(C)(X, c(X_i))`.
    Proj(usize, usize),
    /// `a: X_i -> X_i′` in `C`.
    Base(usize, usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SliceCell {
    IdTop,
    Proj(usize, usize),
    Base(usize, usize, usize),
}

/// `X` together with the constant pro-objects `c(X_i)`; there are no
/// 1-cells from a `c(X_i)` back to `X`.
#[derive(Clone, Debug)]
pub struct ProSlice {
    pub x: ProObject,
    pub homs: Vec<HomInto>,
}

impl ProSlice {
    pub fn new(x: &ProObject) -> Result<ProSlice, ProError> {
        let homs = x.index.objects().map(|i| x.hom_into(x.obj[i])).collect::<Result<_, _>>()?;
        Ok(ProSlice { x: x.clone(), homs })
    }

    fn c(&self) -> &TwoCat {
        &self.x.target
    }

    /// `π_i`, the object `id_{X_i} π_i`.
    pub fn pi(&self, i: usize) -> Option<usize> {
        self.homs[i].object(i, self.c().id1(self.x.obj[i]))
    }

    /// `π_u: X_u π_j ⇒ π_i` for `u: i -> j`.
    pub fn pi_cell(&self, u: usize) -> Option<usize> {
        self.homs[self.x.index.src(u)].r_pi(self.c().id1(self.x.obj[self.x.index.src(u)]), u)
    }
}

impl TwoCategory for ProSlice {
    type Obj = SliceObj;
    type Arrow = SliceArrow;
    type Cell = SliceCell;

    fn arrow_src(&self, f: &SliceArrow) -> SliceObj {
        match *f {
            SliceArrow::IdTop | SliceArrow::Proj(..) => SliceObj::Top,
            SliceArrow::Base(i, _, _) => SliceObj::Base(i),
        }
    }
    fn arrow_tgt(&self, f: &SliceArrow) -> SliceObj {
        match *f {
            SliceArrow::IdTop => SliceObj::Top,
            SliceArrow::Proj(i, _) => SliceObj::Base(i),
            SliceArrow::Base(_, j, _) => SliceObj::Base(j),
        }
    }
    fn cell_src(&self, a: &SliceCell) -> SliceArrow {
        match *a {
            SliceCell::IdTop => SliceArrow::IdTop,
            SliceCell::Proj(i, m) => SliceArrow::Proj(i, self.homs[i].cat().src(m)),
            SliceCell::Base(i, j, t) => SliceArrow::Base(i, j, self.c().csrc(t)),
        }
    }
    fn cell_tgt(&self, a: &SliceCell) -> SliceArrow {
        match *a {
            SliceCell::IdTop => SliceArrow::IdTop,
            SliceCell::Proj(i, m) => SliceArrow::Proj(i, self.homs[i].cat().tgt(m)),
            SliceCell::Base(i, j, t) => SliceArrow::Base(i, j, self.c().ctgt(t)),
        }
    }
    fn id_arrow(&self, o: &SliceObj) -> SliceArrow {
        match *o {
            SliceObj::Top => SliceArrow::IdTop,
            SliceObj::Base(i) => SliceArrow::Base(i, i, self.c().id1(self.x.obj[i])),
        }
    }
    fn id_cell(&self, f: &SliceArrow) -> SliceCell {
        match *f {
            SliceArrow::IdTop => SliceCell::IdTop,
            SliceArrow::Proj(i, x) => SliceCell::Proj(i, self.homs[i].cat().id(x)),
            SliceArrow::Base(i, j, a) => SliceCell::Base(i, j, self.c().id2(a)),
        }
    }
    fn compose(&self, g: &SliceArrow, f: &SliceArrow) -> Option<SliceArrow> {
        if self.arrow_tgt(f) != self.arrow_src(g) {
            return None;
        }
        match (*g, *f) {
            (g, SliceArrow::IdTop) => Some(g),
            (SliceArrow::Base(_, k, b), SliceArrow::Base(i, _, a)) => Some(SliceArrow::Base(i, k, self.c().comp1(b, a)?)),
            (SliceArrow::Base(j, k, b), SliceArrow::Proj(_, x)) => {
                Some(SliceArrow::Proj(k, self.homs[j].push_object(b, &self.homs[k], x)?))
            }
            _ => None,
        }
    }
    fn vertical(&self, b: &SliceCell, a: &SliceCell) -> Option<SliceCell> {
        if self.cell_tgt(a) != self.cell_src(b) {
            return None;
        }
        match (*b, *a) {
            (SliceCell::IdTop, SliceCell::IdTop) => Some(SliceCell::IdTop),
            (SliceCell::Proj(i, n), SliceCell::Proj(_, m)) => Some(SliceCell::Proj(i, self.homs[i].cat().compose(n, m)?)),
            (SliceCell::Base(i, j, t), SliceCell::Base(_, _, s)) => Some(SliceCell::Base(i, j, self.c().vert(t, s)?)),
            _ => None,
        }
    }
    fn horizontal(&self, b: &SliceCell, a: &SliceCell) -> Option<SliceCell> {
        let (f, g) = (self.cell_src(a), self.cell_src(b));
        if self.arrow_tgt(&f) != self.arrow_src(&g) {
            return None;
        }
        match (*b, *a) {
            (b, SliceCell::IdTop) => Some(b),
            (SliceCell::Base(_, k, t), SliceCell::Base(i, _, s)) => Some(SliceCell::Base(i, k, self.c().horiz(t, s)?)),
            // (γ x′) (b m) for γ: b ⇒ b′ and m: x -> x′
            (SliceCell::Base(j, k, t), SliceCell::Proj(_, m)) => {
                let (h, hk) = (&self.homs[j], &self.homs[k]);
                let bm = h.push_morphism(self.c().csrc(t), hk, m)?;
                let gx = h.whisker_cell(t, hk, h.cat().tgt(m))?;
                Some(SliceCell::Proj(k, hk.cat().compose(gx, bm)?))
            }
            _ => None,
        }
    }
    fn inverse(&self, a: &SliceCell) -> Option<SliceCell> {
        match *a {
            SliceCell::IdTop => Some(SliceCell::IdTop),
            SliceCell::Proj(i, m) => Some(SliceCell::Proj(i, self.homs[i].cat().inverse(m)?)),
            SliceCell::Base(i, j, t) => Some(SliceCell::Base(i, j, self.c().inverse(t)?)),
        }
    }
    fn describe_arrow(&self, f: &SliceArrow) -> String {
        match *f {
            SliceArrow::IdTop => "id_X".into(),
            SliceArrow::Proj(i, x) => format!("{} in Pro(X, c(X_{}))", self.homs[i].cat().object_name(x), self.x.index.object_name(i)),
            SliceArrow::Base(_, _, a) => self.c().arrow_name(a).to_string(),
        }
    }
}

/// PC0-PC2 for the projections `π_i = (id_{X_i}, i)` and
/// `π_u = [id_j, id, u]`.
pub fn check_projections(x: &ProObject) -> Result<Report<ConeLaw>, ProError> {
    let s = ProSlice::new(x)?;
    let k = &x.index;
    let missing = || ProError::NotFound("projection data".into());
    let obj: BTreeMap<_, _> = k.objects().map(|i| (i, SliceObj::Base(i))).collect();
    let arrow = k.arrows().map(|u| (u, SliceArrow::Base(k.tgt(u), k.src(u), x.arrow[u]))).collect();
    let cell = k.cells().map(|a| (a, SliceCell::Base(k.tgt(k.csrc(a)), k.src(k.csrc(a)), x.cell[a]))).collect();
    let f = PseudoFunctor::strict(&Op(k), &s, obj, arrow, cell);
    let legs = k.objects().map(|i| s.pi(i).map(|p| (i, SliceArrow::Proj(i, p)))).collect::<Option<_>>().ok_or_else(missing)?;
    let cells = k.arrows().map(|u| s.pi_cell(u).map(|p| (u, SliceCell::Proj(k.src(u), p)))).collect::<Option<_>>().ok_or_else(missing)?;
    let cone = PseudoCone { vertex: SliceObj::Top, legs, cells };
    Ok(check_pseudo_cone(k, &s, &f, &cone, &Probe::exhaustive(k)))
}
