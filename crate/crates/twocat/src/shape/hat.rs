//! `Â`: 1-cells are tuples of composable morphisms of a category `A`, and
//! there is exactly one 2-cell between parallel tuples with the same
//! composite (the empty tuple composes to the identity).

use std::collections::BTreeMap;
use std::fmt;

use crate::core::traits::{Enumerable, TwoCategory};
use crate::core::{FinCat, TwoCat};
use crate::maps::{check_pseudo_functor, Probe, PseudoFunctor, PseudoFunctorOf};

/// A composable tuple `(f1, ..., fn)`, first morphism first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple {
    pub src: usize,
    pub tgt: usize,
    pub mors: Vec<usize>,
}

impl Tuple {
    pub fn empty(a: usize) -> Tuple {
        Tuple { src: a, tgt: a, mors: Vec::new() }
    }
    pub fn len(&self) -> usize {
        self.mors.len()
    }
    pub fn is_empty(&self) -> bool {
        self.mors.is_empty()
    }
}

/// The 2-cell `θ_{tgt,src}: src ⇒ tgt`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HatCell {
    pub src: Tuple,
    pub tgt: Tuple,
}

/// `Â` over `base`; `bound` caps the tuple length for enumeration only.
#[derive(Clone, Debug)]
pub struct HatTwoCat {
    pub base: FinCat,
    pub bound: usize,
}

impl HatTwoCat {
    pub fn new(base: FinCat, bound: usize) -> Self {
        HatTwoCat { base, bound }
    }

    pub fn single(&self, f: usize) -> Tuple {
        Tuple { src: self.base.src(f), tgt: self.base.tgt(f), mors: vec![f] }
    }

    pub fn tuple(&self, mors: &[usize]) -> Option<Tuple> {
        let (first, last) = (*mors.first()?, *mors.last()?);
        for w in mors.windows(2) {
            if self.base.tgt(w[0]) != self.base.src(w[1]) {
                return None;
            }
        }
        Some(Tuple { src: self.base.src(first), tgt: self.base.tgt(last), mors: mors.to_vec() })
    }

    /// The composite in `A`; identity for the empty tuple.
    pub fn composite(&self, t: &Tuple) -> usize {
        if t.mors.is_empty() {
            self.base.id(t.src)
        } else {
            self.base.compose_path(&t.mors).expect("tuple is composable")
        }
    }

    /// The unique cell `s ⇒ t`, if it exists.
    pub fn cell(&self, s: &Tuple, t: &Tuple) -> Option<HatCell> {
        (s.src == t.src && s.tgt == t.tgt && self.composite(s) == self.composite(t))
            .then(|| HatCell { src: s.clone(), tgt: t.clone() })
    }

    /// Every tuple from `a` to `b` of length at most `len`, shortest first.
    pub fn tuples(&self, a: usize, b: usize, len: usize) -> Vec<Tuple> {
        let mut out = Vec::new();
        if a == b {
            out.push(Tuple::empty(a));
        }
        let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..len {
            let mut next = Vec::new();
            for p in &layer {
                let at = p.last().map(|&m| self.base.tgt(m)).unwrap_or(a);
                for m in self.base.morphisms().filter(|&m| self.base.src(m) == at) {
                    let mut q = p.clone();
                    q.push(m);
                    if self.base.tgt(m) == b {
                        out.push(Tuple { src: a, tgt: b, mors: q.clone() });
                    }
                    next.push(q);
                }
            }
            layer = next;
        }
        out
    }

    /// Every tuple of length at most `len`.
    pub fn all_tuples(&self, len: usize) -> Vec<Tuple> {
        let mut out = Vec::new();
        for a in self.base.objects() {
            for b in self.base.objects() {
                out.extend(self.tuples(a, b, len));
            }
        }
        out
    }

    /// Objects, tuples up to `len` and all cells among them.
    pub fn probe(&self, len: usize) -> Probe<usize, Tuple, HatCell> {
        let arrows = self.all_tuples(len);
        let mut cells = Vec::new();
        for s in &arrows {
            for t in &arrows {
                if let Some(c) = self.cell(s, t) {
                    cells.push(c);
                }
            }
        }
        Probe::partial(self.base.objects().collect(), arrows, cells)
    }
}

impl TwoCategory for HatTwoCat {
    type Obj = usize;
    type Arrow = Tuple;
    type Cell = HatCell;

    fn arrow_src(&self, f: &Tuple) -> usize {
        f.src
    }
    fn arrow_tgt(&self, f: &Tuple) -> usize {
        f.tgt
    }
    fn cell_src(&self, a: &HatCell) -> Tuple {
        a.src.clone()
    }
    fn cell_tgt(&self, a: &HatCell) -> Tuple {
        a.tgt.clone()
    }
    fn id_arrow(&self, o: &usize) -> Tuple {
        Tuple::empty(*o)
    }
    fn id_cell(&self, f: &Tuple) -> HatCell {
        HatCell { src: f.clone(), tgt: f.clone() }
    }
    /// Reverse juxtaposition: `(g)(f) = (f, g)`.
    fn compose(&self, g: &Tuple, f: &Tuple) -> Option<Tuple> {
        if f.tgt != g.src {
            return None;
        }
        let mut mors = f.mors.clone();
        mors.extend_from_slice(&g.mors);
        Some(Tuple { src: f.src, tgt: g.tgt, mors })
    }
    fn vertical(&self, b: &HatCell, a: &HatCell) -> Option<HatCell> {
        (a.tgt == b.src).then(|| HatCell { src: a.src.clone(), tgt: b.tgt.clone() })
    }
    fn horizontal(&self, b: &HatCell, a: &HatCell) -> Option<HatCell> {
        Some(HatCell { src: self.compose(&b.src, &a.src)?, tgt: self.compose(&b.tgt, &a.tgt)? })
    }
    fn inverse(&self, a: &HatCell) -> Option<HatCell> {
        Some(HatCell { src: a.tgt.clone(), tgt: a.src.clone() })
    }
    fn describe_arrow(&self, f: &Tuple) -> String {
        if f.mors.is_empty() {
            return format!("∅_{}", self.base.object_name(f.src));
        }
        let names: Vec<&str> = f.mors.iter().map(|&m| self.base.morphism_name(m)).collect();
        format!("({})", names.join(","))
    }
    fn describe_cell(&self, a: &HatCell) -> String {
        format!("θ[{} => {}]", self.describe_arrow(&a.src), self.describe_arrow(&a.tgt))
    }
}

impl Enumerable for HatTwoCat {
    fn objects(&self) -> Vec<usize> {
        self.base.objects().collect()
    }
    fn arrows_between(&self, a: &usize, b: &usize) -> Vec<Tuple> {
        self.tuples(*a, *b, self.bound)
    }
    fn cells_between(&self, f: &Tuple, g: &Tuple) -> Vec<HatCell> {
        self.cell(f, g).into_iter().collect()
    }
    fn truncated(&self) -> bool {
        true
    }
}

impl fmt::Display for HatTwoCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Â over {} objects, {} morphisms (tuples enumerated to length {})", self.base.object_count(), self.base.morphism_count(), self.bound)
    }
}

pub type HatFunctor<K> =
    PseudoFunctor<usize, Tuple, HatCell, <K as TwoCategory>::Obj, <K as TwoCategory>::Arrow, <K as TwoCategory>::Cell>;

/// `Â` over `a` and `T: A -> Â` with `T f = (f)`, units `θ: ∅ ⇒ (id)` and
/// compositors `θ: (f, g) ⇒ (gf)`. The source of `T` is `a` as a locally
/// discrete 2-category.
pub fn build_hat(a: &FinCat, bound: usize) -> (TwoCat, HatTwoCat, PseudoFunctorOf<TwoCat, HatTwoCat>) {
    let src = TwoCat::locally_discrete(a);
    let hat = HatTwoCat::new(a.clone(), bound);
    let mut t = PseudoFunctor {
        obj: BTreeMap::new(),
        arrow: BTreeMap::new(),
        cell: BTreeMap::new(),
        unit: BTreeMap::new(),
        comp: BTreeMap::new(),
    };
    for o in a.objects() {
        t.obj.insert(o, o);
        let id = hat.single(a.id(o));
        t.unit.insert(o, hat.cell(&Tuple::empty(o), &id).expect("∅ and (id) compose alike"));
    }
    for f in a.morphisms() {
        let tf = hat.single(f);
        t.arrow.insert(f, tf.clone());
        t.cell.insert(f, hat.id_cell(&tf));
    }
    for ((g, f), gf) in a.composition_entries() {
        let pair = hat.tuple(&[f, g]).expect("composable");
        t.comp.insert((f, g), hat.cell(&pair, &hat.single(gf)).expect("same composite"));
    }
    (src, hat, t)
}

/// The data that determines a strict 2-functor `G: Â -> C`: objects, the
/// images of one-element tuples, and the cells `x_s = G(s ⇒ (composite s))`
/// for the empty tuples and the pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HatData<O, A, C> {
    pub obj: BTreeMap<usize, O>,
    pub single: BTreeMap<usize, A>,
    /// Keyed by the object.
    pub empty: BTreeMap<usize, C>,
    /// Keyed by `(f, g)`, the pair `(f, g)`.
    pub pair: BTreeMap<(usize, usize), C>,
}

pub type HatDataOf<K> = HatData<<K as TwoCategory>::Obj, <K as TwoCategory>::Arrow, <K as TwoCategory>::Cell>;

/// `G(s) = G f_n ... G f_1`, with `G(∅_a) = id`.
pub fn hat_arrow<K: TwoCategory>(c: &K, d: &HatDataOf<K>, s: &Tuple) -> Option<K::Arrow> {
    let mut acc = c.id_arrow(d.obj.get(&s.src)?);
    for m in &s.mors {
        acc = c.compose(d.single.get(m)?, &acc)?;
    }
    Some(acc)
}

/// `x_s: G(s) ⇒ G((composite s))`, folded from the left through the pairs.
pub fn hat_structure<K: TwoCategory>(hat: &HatTwoCat, c: &K, d: &HatDataOf<K>, s: &Tuple) -> Option<K::Cell> {
    let a = &hat.base;
    match s.mors.len() {
        0 => d.empty.get(&s.src).cloned(),
        _ => {
            let first = s.mors[0];
            let mut acc = c.id_cell(d.single.get(&first)?);
            let mut p = first;
            for &m in &s.mors[1..] {
                let step = d.pair.get(&(p, m))?;
                acc = c.vertical(step, &c.lwhisker(d.single.get(&m)?, &acc)?)?;
                p = a.compose(m, p)?;
            }
            Some(acc)
        }
    }
}

/// `G(θ: s ⇒ t) = x_t^{-1} ∘ x_s`.
pub fn hat_cell<K: TwoCategory>(hat: &HatTwoCat, c: &K, d: &HatDataOf<K>, th: &HatCell) -> Option<K::Cell> {
    let xs = hat_structure(hat, c, d, &th.src)?;
    let xt = hat_structure(hat, c, d, &th.tgt)?;
    c.vertical(&c.inverse(&xt)?, &xs)
}

/// Tabulates `G` on the probe.
pub fn hat_table<K: TwoCategory>(hat: &HatTwoCat, c: &K, d: &HatDataOf<K>, probe: &Probe<usize, Tuple, HatCell>) -> Option<HatFunctor<K>> {
    let obj = d.obj.clone();
    let mut arrow = BTreeMap::new();
    for s in &probe.arrows {
        arrow.insert(s.clone(), hat_arrow(c, d, s)?);
    }
    let mut cell = BTreeMap::new();
    for th in &probe.cells {
        cell.insert(th.clone(), hat_cell(hat, c, d, th)?);
    }
    Some(PseudoFunctor::strict(hat, c, obj, arrow, cell))
}

/// Reads the determining data off a pseudo-functor `F: A -> C`.
pub fn transport_data<K: TwoCategory>(a: &FinCat, f: &PseudoFunctorOf<TwoCat, K>) -> Option<HatDataOf<K>> {
    let mut d = HatData { obj: f.obj.clone(), single: f.arrow.clone(), empty: BTreeMap::new(), pair: BTreeMap::new() };
    for o in a.objects() {
        d.empty.insert(o, f.unit.get(&o)?.clone());
    }
    for ((g, ff), _) in a.composition_entries() {
        d.pair.insert((ff, g), f.comp.get(&(ff, g))?.clone());
    }
    Some(d)
}

/// `F̂: Â -> C` on the probe, with `F̂(f1..fn) = F fn ... F f1` and
/// `F̂(θ: s ⇒ t) = θ_t^{-1} ∘ θ_s`, where `θ_s` iterates the compositors.
pub fn transport_along_hat<K: TwoCategory>(
    hat: &HatTwoCat,
    c: &K,
    f: &PseudoFunctorOf<TwoCat, K>,
    probe: &Probe<usize, Tuple, HatCell>,
) -> Option<HatFunctor<K>> {
    let d = transport_data::<K>(&hat.base, f)?;
    hat_table(hat, c, &d, probe)
}

/// `G ∘ T` for a map `G` defined on the one- and two-element tuples.
pub fn restrict_along_t<K: TwoCategory>(t: &PseudoFunctorOf<TwoCat, HatTwoCat>, g: &HatFunctor<K>) -> Option<PseudoFunctorOf<TwoCat, K>> {
    let mut out = PseudoFunctor {
        obj: BTreeMap::new(),
        arrow: BTreeMap::new(),
        cell: BTreeMap::new(),
        unit: BTreeMap::new(),
        comp: BTreeMap::new(),
    };
    for (o, to) in &t.obj {
        out.obj.insert(*o, g.obj.get(to)?.clone());
    }
    for (f, tf) in &t.arrow {
        out.arrow.insert(*f, g.arrow.get(tf)?.clone());
    }
    for (a, ta) in &t.cell {
        out.cell.insert(*a, g.cell.get(ta)?.clone());
    }
    for (o, u) in &t.unit {
        out.unit.insert(*o, g.cell.get(u)?.clone());
    }
    for (k, u) in &t.comp {
        out.comp.insert(*k, g.cell.get(u)?.clone());
    }
    Some(out)
}

/// Strict 2-functoriality of the `G` given by `d`, on tuples of length at
/// most `len`: `G(θ′ θ) = G(θ′) G(θ)` for `θ: s ⇒ (c)`, `θ′: s′ ⇒ (c′)`.
/// Every 2-cell of `Â` factors through such cells, so this covers the
/// probe. Returns the first failing pair.
pub fn hat_strictness_failure<K: TwoCategory>(hat: &HatTwoCat, c: &K, d: &HatDataOf<K>, len: usize) -> Option<(Tuple, Tuple)> {
    let tuples = hat.all_tuples(len);
    for s in &tuples {
        for s2 in &tuples {
            if s.tgt != s2.src || s.len() + s2.len() > len {
                continue;
            }
            let (c1, c2) = (hat.composite(s), hat.composite(s2));
            let th = hat.cell(s, &hat.single(c1)).expect("composite cell");
            let th2 = hat.cell(s2, &hat.single(c2)).expect("composite cell");
            let whole = hat.horizontal(&th2, &th).expect("composable");
            let ok = (|| {
                let lhs = hat_cell(hat, c, d, &whole)?;
                let rhs = c.horizontal(&hat_cell(hat, c, d, &th2)?, &hat_cell(hat, c, d, &th)?)?;
                Some(lhs == rhs)
            })();
            if ok != Some(true) {
                return Some((s.clone(), s2.clone()));
            }
        }
    }
    None
}

fn choices<T: Clone>(opts: &[Vec<T>], visit: &mut impl FnMut(&[T])) {
    let mut cur = Vec::with_capacity(opts.len());
    fn go<T: Clone>(opts: &[Vec<T>], k: usize, cur: &mut Vec<T>, visit: &mut impl FnMut(&[T])) {
        if k == opts.len() {
            visit(cur);
            return;
        }
        for o in &opts[k] {
            cur.push(o.clone());
            go(opts, k + 1, cur, visit);
            cur.pop();
        }
    }
    go(opts, 0, &mut cur, visit);
}

/// Object and arrow assignments `A -> C` respecting source and target.
fn skeleta<K: Enumerable>(a: &FinCat, c: &K) -> Vec<(BTreeMap<usize, K::Obj>, BTreeMap<usize, K::Arrow>)> {
    let cobjs = c.objects();
    let mut out = Vec::new();
    let obj_opts: Vec<Vec<K::Obj>> = a.objects().map(|_| cobjs.clone()).collect();
    choices(&obj_opts, &mut |objs| {
        let arrow_opts: Vec<Vec<K::Arrow>> =
            a.morphisms().map(|m| c.arrows_between(&objs[a.src(m)], &objs[a.tgt(m)])).collect();
        choices(&arrow_opts, &mut |arrows| {
            out.push((
                objs.iter().cloned().enumerate().collect(),
                arrows.iter().cloned().enumerate().collect(),
            ));
        });
    });
    out
}

fn structure_options<K: Enumerable>(a: &FinCat, c: &K, obj: &BTreeMap<usize, K::Obj>, arrow: &BTreeMap<usize, K::Arrow>) -> Option<(Vec<Vec<K::Cell>>, Vec<(usize, usize)>)> {
    let invertible = |s: &K::Arrow, t: &K::Arrow| -> Vec<K::Cell> {
        c.cells_between(s, t).into_iter().filter(|x| c.is_invertible(x)).collect()
    };
    let mut opts = Vec::new();
    for o in a.objects() {
        opts.push(invertible(&c.id_arrow(&obj[&o]), &arrow[&a.id(o)]));
    }
    let mut keys = Vec::new();
    for ((g, f), gf) in a.composition_entries() {
        let src = c.compose(&arrow[&g], &arrow[&f])?;
        opts.push(invertible(&src, &arrow[&gf]));
        keys.push((f, g));
    }
    Some((opts, keys))
}

/// Every pseudo-functor from `a` (locally discrete) to `c`, each checked
/// with the pseudo-functor axioms.
pub fn enumerate_pseudo_functors<K: Enumerable>(a: &FinCat, c: &K) -> Vec<PseudoFunctorOf<TwoCat, K>> {
    let src = TwoCat::locally_discrete(a);
    let probe = Probe::exhaustive(&src);
    let mut out = Vec::new();
    for (obj, arrow) in skeleta(a, c) {
        let Some((opts, keys)) = structure_options(a, c, &obj, &arrow) else { continue };
        let cell: BTreeMap<usize, K::Cell> = arrow.iter().map(|(m, fm)| (*m, c.id_cell(fm))).collect();
        let nobj = a.object_count();
        choices(&opts, &mut |pick| {
            let unit = (0..nobj).map(|o| (o, pick[o].clone())).collect();
            let comp = keys.iter().cloned().zip(pick[nobj..].iter().cloned()).collect();
            let f = PseudoFunctor { obj: obj.clone(), arrow: arrow.clone(), cell: cell.clone(), unit, comp };
            if check_pseudo_functor(&src, c, &f, &probe).is_ok() {
                out.push(f);
            }
        });
    }
    out
}

/// Every strict 2-functor `Â -> c`, as determining data, checked for strict
/// functoriality on tuples up to `len`.
pub fn enumerate_strict_hat_functors<K: Enumerable>(a: &FinCat, c: &K, len: usize) -> Vec<HatDataOf<K>> {
    let hat = HatTwoCat::new(a.clone(), len);
    let mut out = Vec::new();
    for (obj, single) in skeleta(a, c) {
        let Some((opts, keys)) = structure_options(a, c, &obj, &single) else { continue };
        let nobj = a.object_count();
        choices(&opts, &mut |pick| {
            let d = HatData {
                obj: obj.clone(),
                single: single.clone(),
                empty: (0..nobj).map(|o| (o, pick[o].clone())).collect(),
                pair: keys.iter().cloned().zip(pick[nobj..].iter().cloned()).collect(),
            };
            if hat_strictness_failure(&hat, c, &d, len).is_none() {
                out.push(d);
            }
        });
    }
    out
}
