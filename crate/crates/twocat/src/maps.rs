//! Maps between 2-categories: pseudo-functors, pseudo-natural
//! transformations, modifications and pseudo-cones, each with an
//! exhaustive coherence checker.
//!
//! Maps are stored as finite tables keyed by source cells. For a source
//! that cannot be listed (such as the tuple 2-category of [`crate::shape`]),
//! the table covers a probed fragment and the checkers run on a [`Probe`].

use std::collections::BTreeMap;
use std::fmt;

use crate::core::traits::{CellId, Enumerable, TwoCategory};
use crate::core::Report;

/// The finite fragment of a source 2-category on which a check runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Probe<O, A, C> {
    pub objects: Vec<O>,
    pub arrows: Vec<A>,
    pub cells: Vec<C>,
    /// True when the probe is the whole source.
    pub exhaustive: bool,
}

pub type ProbeOf<S> = Probe<<S as TwoCategory>::Obj, <S as TwoCategory>::Arrow, <S as TwoCategory>::Cell>;

impl<O, A, C> Probe<O, A, C> {
    pub fn exhaustive<K>(k: &K) -> Probe<O, A, C>
    where
        K: Enumerable<Obj = O, Arrow = A, Cell = C>,
    {
        Probe { objects: k.objects(), arrows: k.all_arrows(), cells: k.all_cells(), exhaustive: true }
    }

    pub fn partial(objects: Vec<O>, arrows: Vec<A>, cells: Vec<C>) -> Self {
        Probe { objects, arrows, cells, exhaustive: false }
    }

    pub fn coverage(&self) -> String {
        format!(
            "{} probe: {} objects, {} 1-cells, {} 2-cells",
            if self.exhaustive { "exhaustive" } else { "partial" },
            self.objects.len(),
            self.arrows.len(),
            self.cells.len()
        )
    }
}

/// Object, 1-cell and 2-cell maps plus unit cells `id_{FC} ⇒ F(id_C)` and
/// compositors `Fg Ff ⇒ F(gf)`, keyed `(f, g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoFunctor<SO: Ord, SA: Ord, SC: Ord, TO, TA, TC> {
    pub obj: BTreeMap<SO, TO>,
    pub arrow: BTreeMap<SA, TA>,
    pub cell: BTreeMap<SC, TC>,
    pub unit: BTreeMap<SO, TC>,
    pub comp: BTreeMap<(SA, SA), TC>,
}

pub type PseudoFunctorOf<S, T> = PseudoFunctor<
    <S as TwoCategory>::Obj,
    <S as TwoCategory>::Arrow,
    <S as TwoCategory>::Cell,
    <T as TwoCategory>::Obj,
    <T as TwoCategory>::Arrow,
    <T as TwoCategory>::Cell,
>;

impl<SO: CellId, SA: CellId, SC: CellId, TO: CellId, TA: CellId, TC: CellId> PseudoFunctor<SO, SA, SC, TO, TA, TC> {
    /// A 2-functor: structure cells are identities. Units are filled for
    /// every mapped object and compositors for every composable pair of
    /// mapped 1-cells whose composite is mapped.
    pub fn strict<S, T>(s: &S, t: &T, obj: BTreeMap<SO, TO>, arrow: BTreeMap<SA, TA>, cell: BTreeMap<SC, TC>) -> Self
    where
        S: TwoCategory<Obj = SO, Arrow = SA, Cell = SC>,
        T: TwoCategory<Obj = TO, Arrow = TA, Cell = TC>,
    {
        let unit = obj.iter().map(|(o, fo)| (o.clone(), t.id_cell(&t.id_arrow(fo)))).collect();
        let mut comp = BTreeMap::new();
        for f in arrow.keys() {
            for g in arrow.keys() {
                if let Some(gf) = s.compose(g, f) {
                    if let Some(fgf) = arrow.get(&gf) {
                        comp.insert((f.clone(), g.clone()), t.id_cell(fgf));
                    }
                }
            }
        }
        PseudoFunctor { obj, arrow, cell, unit, comp }
    }

    pub fn is_strict<T>(&self, t: &T) -> bool
    where
        T: TwoCategory<Obj = TO, Arrow = TA, Cell = TC>,
    {
        self.unit.values().all(|c| t.id_cell(&t.cell_src(c)) == *c) && self.comp.values().all(|c| t.id_cell(&t.cell_src(c)) == *c)
    }
}

/// The identity 2-functor on a listable 2-category.
pub fn identity_functor<K: Enumerable>(k: &K) -> PseudoFunctorOf<K, K> {
    let obj = k.objects().into_iter().map(|o| (o.clone(), o)).collect();
    let arrow = k.all_arrows().into_iter().map(|f| (f.clone(), f)).collect();
    let cell = k.all_cells().into_iter().map(|c| (c.clone(), c)).collect();
    PseudoFunctor::strict(k, k, obj, arrow, cell)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FunctorLaw {
    Undefined,
    ShapeMismatch,
    NonInvertibleCell,
    IdentityCell,
    VerticalComposition,
    CompositorNaturality,
    LeftUnit,
    RightUnit,
    AssociativityHexagon,
}

impl fmt::Display for FunctorLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorLaw::Undefined | FunctorLaw::ShapeMismatch | FunctorLaw::NonInvertibleCell => write!(f, "{self:?}"),
            other => write!(f, "{other:?}Violation"),
        }
    }
}

fn tally<K: Ord + Clone>(r: &mut Report<K>, kind: K, witness: impl FnOnce() -> Vec<String>, verdict: Option<bool>, skipped: &mut usize) {
    match verdict {
        Some(true) => {}
        Some(false) => r.push(kind, witness()),
        None => *skipped += 1,
    }
}

/// Checks every pseudo-functor axiom on the probe.
pub fn check_pseudo_functor<S, T>(
    s: &S,
    t: &T,
    f: &PseudoFunctorOf<S, T>,
    probe: &ProbeOf<S>,
) -> Report<FunctorLaw>
where
    S: TwoCategory,
    T: TwoCategory,
{
    use FunctorLaw::*;
    let mut r = Report::new();
    let mut skipped = 0usize;
    let da = |a: &S::Arrow| s.describe_arrow(a);
    let dc = |c: &S::Cell| s.describe_cell(c);

    for o in &probe.objects {
        let (Some(fo), Some(u)) = (f.obj.get(o), f.unit.get(o)) else {
            r.push(Undefined, vec![s.describe_obj(o)]);
            continue;
        };
        let fid = f.arrow.get(&s.id_arrow(o));
        if t.cell_src(u) != t.id_arrow(fo) || fid.is_some_and(|fid| t.cell_tgt(u) != *fid) {
            r.push(ShapeMismatch, vec![format!("unit at {}", s.describe_obj(o))]);
        }
        if !t.is_invertible(u) {
            r.push(NonInvertibleCell, vec![format!("unit at {}", s.describe_obj(o))]);
        }
    }
    for a in &probe.arrows {
        let Some(fa) = f.arrow.get(a) else {
            r.push(Undefined, vec![da(a)]);
            continue;
        };
        let (so, to) = (f.obj.get(&s.arrow_src(a)), f.obj.get(&s.arrow_tgt(a)));
        if so.is_some_and(|x| *x != t.arrow_src(fa)) || to.is_some_and(|x| *x != t.arrow_tgt(fa)) {
            r.push(ShapeMismatch, vec![da(a)]);
        }
        let v = f.cell.get(&s.id_cell(a)).map(|c| *c == t.id_cell(fa));
        tally(&mut r, IdentityCell, || vec![da(a)], v, &mut skipped);
    }
    for c in &probe.cells {
        let Some(fc) = f.cell.get(c) else {
            r.push(Undefined, vec![dc(c)]);
            continue;
        };
        let (x, y) = (f.arrow.get(&s.cell_src(c)), f.arrow.get(&s.cell_tgt(c)));
        if x.is_some_and(|x| *x != t.cell_src(fc)) || y.is_some_and(|y| *y != t.cell_tgt(fc)) {
            r.push(ShapeMismatch, vec![dc(c)]);
        }
    }
    // vertical functoriality
    for a in &probe.cells {
        for b in &probe.cells {
            if s.cell_tgt(a) != s.cell_src(b) {
                continue;
            }
            let v = (|| {
                let ba = s.vertical(b, a)?;
                Some(*f.cell.get(&ba)? == t.vertical(f.cell.get(b)?, f.cell.get(a)?)?)
            })();
            tally(&mut r, VerticalComposition, || vec![dc(b), dc(a)], v, &mut skipped);
        }
    }
    // compositors: boundary, invertibility, unit laws
    let mut from: BTreeMap<S::Obj, Vec<&S::Arrow>> = BTreeMap::new();
    for a in &probe.arrows {
        from.entry(s.arrow_src(a)).or_default().push(a);
    }
    let none: Vec<&S::Arrow> = Vec::new();
    for a in &probe.arrows {
        for g in from.get(&s.arrow_tgt(a)).unwrap_or(&none) {
            let key = (a.clone(), (*g).clone());
            let Some(c) = f.comp.get(&key) else {
                // a composite outside a partial probe has no compositor
                let outside = s.compose(g, a).is_none_or(|ga| !f.arrow.contains_key(&ga));
                if probe.exhaustive || !outside {
                    r.push(Undefined, vec![format!("compositor ({}, {})", da(a), da(g))]);
                } else {
                    skipped += 1;
                }
                continue;
            };
            let shape = (|| {
                let src = t.compose(f.arrow.get(g)?, f.arrow.get(a)?)?;
                let tgt = f.arrow.get(&s.compose(g, a)?)?;
                Some(t.cell_src(c) == src && t.cell_tgt(c) == *tgt)
            })();
            tally(&mut r, ShapeMismatch, || vec![format!("compositor ({}, {})", da(a), da(g))], shape, &mut skipped);
            if !t.is_invertible(c) {
                r.push(NonInvertibleCell, vec![format!("compositor ({}, {})", da(a), da(g))]);
            }
        }
        let (c0, d0) = (s.arrow_src(a), s.arrow_tgt(a));
        let left = (|| {
            let fa = f.arrow.get(a)?;
            let ud = t.rwhisker(f.unit.get(&d0)?, fa)?;
            let comp = f.comp.get(&(a.clone(), s.id_arrow(&d0)))?;
            Some(t.vertical(comp, &ud)? == t.id_cell(fa))
        })();
        tally(&mut r, LeftUnit, || vec![da(a)], left, &mut skipped);
        let right = (|| {
            let fa = f.arrow.get(a)?;
            let uc = t.lwhisker(fa, f.unit.get(&c0)?)?;
            let comp = f.comp.get(&(s.id_arrow(&c0), a.clone()))?;
            Some(t.vertical(comp, &uc)? == t.id_cell(fa))
        })();
        tally(&mut r, RightUnit, || vec![da(a)], right, &mut skipped);
    }
    // naturality of the compositor
    for al in &probe.cells {
        for be in &probe.cells {
            if s.cell_tgt0(al) != s.cell_src0(be) {
                continue;
            }
            let v = (|| {
                let (ff, ff2) = (s.cell_src(al), s.cell_tgt(al));
                let (g, g2) = (s.cell_src(be), s.cell_tgt(be));
                let lhs = t.vertical(f.comp.get(&(ff2, g2))?, &t.horizontal(f.cell.get(be)?, f.cell.get(al)?)?)?;
                let rhs = t.vertical(f.cell.get(&s.horizontal(be, al)?)?, f.comp.get(&(ff, g))?)?;
                Some(lhs == rhs)
            })();
            tally(&mut r, CompositorNaturality, || vec![dc(be), dc(al)], v, &mut skipped);
        }
    }
    // associativity hexagon
    for a in &probe.arrows {
        for g in from.get(&s.arrow_tgt(a)).unwrap_or(&none) {
            for h in from.get(&s.arrow_tgt(g)).unwrap_or(&none) {
                let v = (|| {
                    let ga = s.compose(g, a)?;
                    let hg = s.compose(h, g)?;
                    let lhs = t.vertical(
                        f.comp.get(&(ga, (*h).clone()))?,
                        &t.lwhisker(f.arrow.get(h)?, f.comp.get(&(a.clone(), (*g).clone()))?)?,
                    )?;
                    let rhs = t.vertical(
                        f.comp.get(&(a.clone(), hg))?,
                        &t.rwhisker(f.comp.get(&((*g).clone(), (*h).clone()))?, f.arrow.get(a)?)?,
                    )?;
                    Some(lhs == rhs)
                })();
                tally(&mut r, AssociativityHexagon, || vec![da(h), da(g), da(a)], v, &mut skipped);
            }
        }
    }
    r.note(probe.coverage());
    if skipped > 0 {
        r.note(format!("{skipped} equations skipped: a term falls outside the probe"));
    }
    r.finish()
}

/// Components `θ_C: FC -> GC` and invertible cells `θ_f: Gf θ_C ⇒ θ_D Ff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoNatural<SO: Ord, SA: Ord, TA, TC> {
    pub comp: BTreeMap<SO, TA>,
    pub cell: BTreeMap<SA, TC>,
}

pub type PseudoNaturalOf<S, T> =
    PseudoNatural<<S as TwoCategory>::Obj, <S as TwoCategory>::Arrow, <T as TwoCategory>::Arrow, <T as TwoCategory>::Cell>;

/// Components `ρ_C: θ_C ⇒ η_C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Modification<SO: Ord, TC> {
    pub comp: BTreeMap<SO, TC>,
}

pub type ModificationOf<S, T> = Modification<<S as TwoCategory>::Obj, <T as TwoCategory>::Cell>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NaturalLaw {
    Undefined,
    ShapeMismatch,
    NonInvertibleCell,
    PN0,
    PN1,
    PN2,
    PM,
}

impl fmt::Display for NaturalLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// The identity transformation on `F`.
pub fn identity_natural<S: TwoCategory, T: TwoCategory>(
    t: &T,
    f: &PseudoFunctorOf<S, T>,
) -> PseudoNaturalOf<S, T> {
    let comp = f.obj.iter().map(|(o, fo)| (o.clone(), t.id_arrow(fo))).collect();
    let cell = f.arrow.iter().map(|(a, fa)| (a.clone(), t.id_cell(fa))).collect();
    PseudoNatural { comp, cell }
}

/// Checks PN0, PN1 and PN2 for `θ: F ⇒ G`.
pub fn check_pseudo_natural<S, T>(
    s: &S,
    t: &T,
    f: &PseudoFunctorOf<S, T>,
    g: &PseudoFunctorOf<S, T>,
    th: &PseudoNaturalOf<S, T>,
    probe: &ProbeOf<S>,
) -> Report<NaturalLaw>
where
    S: TwoCategory,
    T: TwoCategory,
{
    use NaturalLaw::*;
    let mut r = Report::new();
    let mut skipped = 0usize;
    for o in &probe.objects {
        let Some(tc) = th.comp.get(o) else {
            r.push(Undefined, vec![s.describe_obj(o)]);
            continue;
        };
        let shape = (|| Some(t.arrow_src(tc) == *f.obj.get(o)? && t.arrow_tgt(tc) == *g.obj.get(o)?))();
        tally(&mut r, ShapeMismatch, || vec![s.describe_obj(o)], shape, &mut skipped);
        let pn0 = (|| {
            let lhs = t.lwhisker(tc, f.unit.get(o)?)?;
            let rhs = t.vertical(th.cell.get(&s.id_arrow(o))?, &t.rwhisker(g.unit.get(o)?, tc)?)?;
            Some(lhs == rhs)
        })();
        tally(&mut r, PN0, || vec![s.describe_obj(o)], pn0, &mut skipped);
    }
    for a in &probe.arrows {
        let Some(c) = th.cell.get(a) else {
            r.push(Undefined, vec![s.describe_arrow(a)]);
            continue;
        };
        let (c0, d0) = (s.arrow_src(a), s.arrow_tgt(a));
        let shape = (|| {
            let src = t.compose(g.arrow.get(a)?, th.comp.get(&c0)?)?;
            let tgt = t.compose(th.comp.get(&d0)?, f.arrow.get(a)?)?;
            Some(t.cell_src(c) == src && t.cell_tgt(c) == tgt)
        })();
        tally(&mut r, ShapeMismatch, || vec![s.describe_arrow(a)], shape, &mut skipped);
        if !t.is_invertible(c) {
            r.push(NonInvertibleCell, vec![s.describe_arrow(a)]);
        }
    }
    for a in &probe.arrows {
        for b in &probe.arrows {
            if s.arrow_tgt(a) != s.arrow_src(b) {
                continue;
            }
            let pn1 = (|| {
                let (c0, e0) = (s.arrow_src(a), s.arrow_tgt(b));
                let ba = s.compose(b, a)?;
                let lhs = t.vchain(&[
                    t.lwhisker(g.arrow.get(b)?, th.cell.get(a)?)?,
                    t.rwhisker(th.cell.get(b)?, f.arrow.get(a)?)?,
                    t.lwhisker(th.comp.get(&e0)?, f.comp.get(&(a.clone(), b.clone()))?)?,
                ])?;
                let rhs = t.vertical(
                    th.cell.get(&ba)?,
                    &t.rwhisker(g.comp.get(&(a.clone(), b.clone()))?, th.comp.get(&c0)?)?,
                )?;
                Some(lhs == rhs)
            })();
            tally(&mut r, PN1, || vec![s.describe_arrow(b), s.describe_arrow(a)], pn1, &mut skipped);
        }
    }
    for al in &probe.cells {
        let pn2 = (|| {
            let (x, y) = (s.cell_src(al), s.cell_tgt(al));
            let (c0, d0) = (s.cell_src0(al), s.cell_tgt0(al));
            let lhs = t.vertical(th.cell.get(&y)?, &t.rwhisker(g.cell.get(al)?, th.comp.get(&c0)?)?)?;
            let rhs = t.vertical(&t.lwhisker(th.comp.get(&d0)?, f.cell.get(al)?)?, th.cell.get(&x)?)?;
            Some(lhs == rhs)
        })();
        tally(&mut r, PN2, || vec![s.describe_cell(al)], pn2, &mut skipped);
    }
    r.note(probe.coverage());
    if skipped > 0 {
        r.note(format!("{skipped} equations skipped: a term falls outside the probe"));
    }
    r.finish()
}

/// Checks PM for `ρ: θ ⇛ η`, both transformations `F ⇒ G`.
#[allow(clippy::too_many_arguments)]
pub fn check_modification<S, T>(
    s: &S,
    t: &T,
    f: &PseudoFunctorOf<S, T>,
    g: &PseudoFunctorOf<S, T>,
    th: &PseudoNaturalOf<S, T>,
    eta: &PseudoNaturalOf<S, T>,
    rho: &ModificationOf<S, T>,
    probe: &ProbeOf<S>,
) -> Report<NaturalLaw>
where
    S: TwoCategory,
    T: TwoCategory,
{
    use NaturalLaw::*;
    let mut r = Report::new();
    let mut skipped = 0usize;
    for o in &probe.objects {
        let Some(c) = rho.comp.get(o) else {
            r.push(Undefined, vec![s.describe_obj(o)]);
            continue;
        };
        let shape = (|| Some(t.cell_src(c) == *th.comp.get(o)? && t.cell_tgt(c) == *eta.comp.get(o)?))();
        tally(&mut r, ShapeMismatch, || vec![s.describe_obj(o)], shape, &mut skipped);
    }
    for a in &probe.arrows {
        let pm = (|| {
            let (c0, d0) = (s.arrow_src(a), s.arrow_tgt(a));
            let lhs = t.vertical(&t.rwhisker(rho.comp.get(&d0)?, f.arrow.get(a)?)?, th.cell.get(a)?)?;
            let rhs = t.vertical(eta.cell.get(a)?, &t.lwhisker(g.arrow.get(a)?, rho.comp.get(&c0)?)?)?;
            Some(lhs == rhs)
        })();
        tally(&mut r, PM, || vec![s.describe_arrow(a)], pm, &mut skipped);
    }
    r.note(probe.coverage());
    r.finish()
}

/// `θ′θ`: `(θ′θ)_C = θ′_C θ_C`, `(θ′θ)_f = θ′_D θ_f ∘ θ′_f θ_C`.
pub fn compose_natural<S, T>(
    s: &S,
    t: &T,
    th: &PseudoNaturalOf<S, T>,
    th2: &PseudoNaturalOf<S, T>,
) -> Option<PseudoNaturalOf<S, T>>
where
    S: TwoCategory,
    T: TwoCategory,
{
    let mut comp = BTreeMap::new();
    for (o, a) in &th.comp {
        comp.insert(o.clone(), t.compose(th2.comp.get(o)?, a)?);
    }
    let mut cell = BTreeMap::new();
    for (f, c) in &th.cell {
        let (c0, d0) = (s.arrow_src(f), s.arrow_tgt(f));
        let v = t.vertical(&t.lwhisker(th2.comp.get(&d0)?, c)?, &t.rwhisker(th2.cell.get(f)?, th.comp.get(&c0)?)?)?;
        cell.insert(f.clone(), v);
    }
    Some(PseudoNatural { comp, cell })
}

/// `ε ∘ ρ`, componentwise.
pub fn compose_modification_vertical<S: TwoCategory, T: TwoCategory>(
    t: &T,
    rho: &ModificationOf<S, T>,
    eps: &ModificationOf<S, T>,
) -> Option<ModificationOf<S, T>> {
    let mut comp = BTreeMap::new();
    for (o, c) in &rho.comp {
        comp.insert(o.clone(), t.vertical(eps.comp.get(o)?, c)?);
    }
    Some(Modification { comp })
}

/// `ρ′ρ`, componentwise horizontal.
pub fn compose_modification_horizontal<S: TwoCategory, T: TwoCategory>(
    t: &T,
    rho: &ModificationOf<S, T>,
    rho2: &ModificationOf<S, T>,
) -> Option<ModificationOf<S, T>> {
    let mut comp = BTreeMap::new();
    for (o, c) in &rho.comp {
        comp.insert(o.clone(), t.horizontal(rho2.comp.get(o)?, c)?);
    }
    Some(Modification { comp })
}

pub fn identity_modification<S: TwoCategory, T: TwoCategory>(t: &T, th: &PseudoNaturalOf<S, T>) -> ModificationOf<S, T> {
    Modification { comp: th.comp.iter().map(|(o, a)| (o.clone(), t.id_cell(a))).collect() }
}

/// A pseudo-cone over `F: I^op -> A`: legs `θ_i: A -> F i` and invertible
/// `θ_u: F u θ_j ⇒ θ_i` for `u: i -> j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoCone<IO: Ord, IA: Ord, AO, AA, AC> {
    pub vertex: AO,
    pub legs: BTreeMap<IO, AA>,
    pub cells: BTreeMap<IA, AC>,
}

pub type PseudoConeOf<I, A> = PseudoCone<
    <I as TwoCategory>::Obj,
    <I as TwoCategory>::Arrow,
    <A as TwoCategory>::Obj,
    <A as TwoCategory>::Arrow,
    <A as TwoCategory>::Cell,
>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConeLaw {
    Undefined,
    ShapeMismatch,
    NonInvertibleCell,
    PC0,
    PC1,
    PC2,
    PCM,
}

impl fmt::Display for ConeLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Checks PC0, PC1 and PC2. `f` is the diagram `I^op -> A`: its compositor
/// key `(v, u)` is `α^F_{u,v}: Fu Fv ⇒ F(vu)` for `u: i -> j`, `v: j -> k`.
pub fn check_pseudo_cone<I, A>(
    i: &I,
    a: &A,
    f: &PseudoFunctorOf<I, A>,
    cone: &PseudoConeOf<I, A>,
    probe: &ProbeOf<I>,
) -> Report<ConeLaw>
where
    I: TwoCategory,
    A: TwoCategory,
{
    use ConeLaw::*;
    let mut r = Report::new();
    let mut skipped = 0usize;
    for o in &probe.objects {
        let Some(leg) = cone.legs.get(o) else {
            r.push(Undefined, vec![i.describe_obj(o)]);
            continue;
        };
        let shape = (|| Some(a.arrow_src(leg) == cone.vertex && a.arrow_tgt(leg) == *f.obj.get(o)?))();
        tally(&mut r, ShapeMismatch, || vec![i.describe_obj(o)], shape, &mut skipped);
        let pc0 = (|| {
            let lhs = a.vertical(cone.cells.get(&i.id_arrow(o))?, &a.rwhisker(f.unit.get(o)?, leg)?)?;
            Some(lhs == a.id_cell(leg))
        })();
        tally(&mut r, PC0, || vec![i.describe_obj(o)], pc0, &mut skipped);
    }
    for u in &probe.arrows {
        let Some(c) = cone.cells.get(u) else {
            r.push(Undefined, vec![i.describe_arrow(u)]);
            continue;
        };
        let shape = (|| {
            let src = a.compose(f.arrow.get(u)?, cone.legs.get(&i.arrow_tgt(u))?)?;
            Some(a.cell_src(c) == src && a.cell_tgt(c) == *cone.legs.get(&i.arrow_src(u))?)
        })();
        tally(&mut r, ShapeMismatch, || vec![i.describe_arrow(u)], shape, &mut skipped);
        if !a.is_invertible(c) {
            r.push(NonInvertibleCell, vec![i.describe_arrow(u)]);
        }
    }
    for u in &probe.arrows {
        for v in &probe.arrows {
            if i.arrow_tgt(u) != i.arrow_src(v) {
                continue;
            }
            let pc1 = (|| {
                let vu = i.compose(v, u)?;
                let k = i.arrow_tgt(v);
                let lhs = a.vertical(cone.cells.get(u)?, &a.lwhisker(f.arrow.get(u)?, cone.cells.get(v)?)?)?;
                let rhs = a.vertical(cone.cells.get(&vu)?, &a.rwhisker(f.comp.get(&(v.clone(), u.clone()))?, cone.legs.get(&k)?)?)?;
                Some(lhs == rhs)
            })();
            tally(&mut r, PC1, || vec![i.describe_arrow(v), i.describe_arrow(u)], pc1, &mut skipped);
        }
    }
    for al in &probe.cells {
        let pc2 = (|| {
            let (u, v) = (i.cell_src(al), i.cell_tgt(al));
            let j = i.cell_tgt0(al);
            let rhs = a.vertical(cone.cells.get(&v)?, &a.rwhisker(f.cell.get(al)?, cone.legs.get(&j)?)?)?;
            Some(*cone.cells.get(&u)? == rhs)
        })();
        tally(&mut r, PC2, || vec![i.describe_cell(al)], pc2, &mut skipped);
    }
    r.note(probe.coverage());
    if skipped > 0 {
        r.note(format!("{skipped} equations skipped: a term falls outside the probe"));
    }
    r.finish()
}

/// Checks PCM for `ρ: θ ⇛ η` between cones with the same vertex.
pub fn check_cone_morphism<I, A>(
    i: &I,
    a: &A,
    f: &PseudoFunctorOf<I, A>,
    th: &PseudoConeOf<I, A>,
    eta: &PseudoConeOf<I, A>,
    rho: &BTreeMap<I::Obj, A::Cell>,
    probe: &ProbeOf<I>,
) -> Report<ConeLaw>
where
    I: TwoCategory,
    A: TwoCategory,
{
    use ConeLaw::*;
    let mut r = Report::new();
    let mut skipped = 0usize;
    if th.vertex != eta.vertex {
        r.push(ShapeMismatch, vec!["vertices differ".into()]);
    }
    for o in &probe.objects {
        let shape = (|| {
            let c = rho.get(o)?;
            Some(a.cell_src(c) == *th.legs.get(o)? && a.cell_tgt(c) == *eta.legs.get(o)?)
        })();
        tally(&mut r, ShapeMismatch, || vec![i.describe_obj(o)], shape, &mut skipped);
    }
    for u in &probe.arrows {
        let pcm = (|| {
            let (x, y) = (i.arrow_src(u), i.arrow_tgt(u));
            let lhs = a.vertical(rho.get(&x)?, th.cells.get(u)?)?;
            let rhs = a.vertical(eta.cells.get(u)?, &a.lwhisker(f.arrow.get(u)?, rho.get(&y)?)?)?;
            Some(lhs == rhs)
        })();
        tally(&mut r, PCM, || vec![i.describe_arrow(u)], pcm, &mut skipped);
    }
    r.note(probe.coverage());
    r.finish()
}

/// `g` with invertible `α: f g ⇒ id`, `β: g f ⇒ id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceData<A, C> {
    pub inverse: A,
    pub alpha: C,
    pub beta: C,
}

/// Searches for equivalence data for `f` in listing order.
pub fn check_equivalence_1cell<K: Enumerable>(k: &K, f: &K::Arrow) -> Option<EquivalenceData<K::Arrow, K::Cell>> {
    let (c, d) = (k.arrow_src(f), k.arrow_tgt(f));
    for g in k.arrows_between(&d, &c) {
        let (Some(fg), Some(gf)) = (k.compose(f, &g), k.compose(&g, f)) else { continue };
        let alpha = k.cells_between(&fg, &k.id_arrow(&d)).into_iter().find(|x| k.is_invertible(x));
        let beta = k.cells_between(&gf, &k.id_arrow(&c)).into_iter().find(|x| k.is_invertible(x));
        if let (Some(alpha), Some(beta)) = (alpha, beta) {
            return Some(EquivalenceData { inverse: g, alpha, beta });
        }
    }
    None
}
