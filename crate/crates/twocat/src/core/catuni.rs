use std::collections::{BTreeMap, BTreeSet};

use super::fincat::FinCat;
use super::traits::{Enumerable, TwoCategory};
use super::twocat::{Entry, TwoCat};
use super::CoreError;

/// A functor between two finite categories, as object and morphism maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinFunctor {
    pub obj: Vec<usize>,
    pub mor: Vec<usize>,
}

impl FinFunctor {
    pub fn identity(c: &FinCat) -> FinFunctor {
        FinFunctor { obj: c.objects().collect(), mor: c.morphisms().collect() }
    }

    /// The constant functor at object `x` of `d`.
    pub fn constant(c: &FinCat, d: &FinCat, x: usize) -> FinFunctor {
        FinFunctor { obj: vec![x; c.object_count()], mor: vec![d.id(x); c.morphism_count()] }
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &FinFunctor) -> FinFunctor {
        FinFunctor {
            obj: self.obj.iter().map(|&x| g.obj[x]).collect(),
            mor: self.mor.iter().map(|&m| g.mor[m]).collect(),
        }
    }

    /// Checks that the maps form a functor `c -> d`.
    pub fn check(&self, c: &FinCat, d: &FinCat) -> Result<(), CoreError> {
        let bad = |s: String| Err(CoreError::NotAFunctor(s));
        if self.obj.len() != c.object_count() || self.mor.len() != c.morphism_count() {
            return bad("map sizes do not match the source".into());
        }
        if self.obj.iter().any(|&x| x >= d.object_count()) || self.mor.iter().any(|&m| m >= d.morphism_count()) {
            return Err(CoreError::DanglingId("functor image".into()));
        }
        for m in c.morphisms() {
            let fm = self.mor[m];
            if d.src(fm) != self.obj[c.src(m)] || d.tgt(fm) != self.obj[c.tgt(m)] {
                return bad(format!("boundary of {}", c.morphism_name(m)));
            }
        }
        for o in c.objects() {
            if self.mor[c.id(o)] != d.id(self.obj[o]) {
                return bad(format!("identity at {}", c.object_name(o)));
            }
        }
        for ((g, f), gf) in c.composition_entries() {
            if d.compose(self.mor[g], self.mor[f]) != Some(self.mor[gf]) {
                return bad(format!("composite {} o {}", c.morphism_name(g), c.morphism_name(f)));
            }
        }
        Ok(())
    }

    pub fn is_identity(&self) -> bool {
        self.obj.iter().enumerate().all(|(i, &x)| i == x) && self.mor.iter().enumerate().all(|(i, &x)| i == x)
    }
}

/// A natural transformation, one component per source object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NatTrans {
    pub comp: Vec<usize>,
}

impl NatTrans {
    pub fn identity(d: &FinCat, f: &FinFunctor) -> NatTrans {
        NatTrans { comp: f.obj.iter().map(|&x| d.id(x)).collect() }
    }

    pub fn is_natural(&self, c: &FinCat, d: &FinCat, f: &FinFunctor, g: &FinFunctor) -> bool {
        if self.comp.len() != c.object_count() {
            return false;
        }
        for x in c.objects() {
            let t = self.comp[x];
            if d.src(t) != f.obj[x] || d.tgt(t) != g.obj[x] {
                return false;
            }
        }
        c.morphisms().all(|m| {
            let (x, y) = (c.src(m), c.tgt(m));
            d.compose(self.comp[y], f.mor[m]) == d.compose(g.mor[m], self.comp[x])
        })
    }

    /// `b ∘ self`.
    pub fn then(&self, d: &FinCat, b: &NatTrans) -> Option<NatTrans> {
        let comp = self.comp.iter().zip(&b.comp).map(|(&a, &b)| d.compose(b, a)).collect::<Option<Vec<_>>>()?;
        Some(NatTrans { comp })
    }

    /// Horizontal composite `b a` for `a: f ⇒ f′` (C→D) and `b: g ⇒ g′` (D→E).
    pub fn horizontal(e: &FinCat, a: &NatTrans, b: &NatTrans, f_tgt: &FinFunctor, g_src: &FinFunctor) -> Option<NatTrans> {
        let comp = a
            .comp
            .iter()
            .zip(&f_tgt.obj)
            .map(|(&ax, &fx2)| e.compose(b.comp[fx2], g_src.mor[ax]))
            .collect::<Option<Vec<_>>>()?;
        Some(NatTrans { comp })
    }

    pub fn inverse(&self, d: &FinCat) -> Option<NatTrans> {
        let comp = self.comp.iter().map(|&t| d.inverse(t)).collect::<Option<Vec<_>>>()?;
        Some(NatTrans { comp })
    }
}

/// Every functor `c -> d`, in lexicographic order of the maps.
pub fn enumerate_functors(c: &FinCat, d: &FinCat) -> Vec<FinFunctor> {
    let mut out = Vec::new();
    let mut obj = vec![usize::MAX; c.object_count()];
    enum_objs(c, d, 0, &mut obj, &mut out);
    out
}

fn enum_objs(c: &FinCat, d: &FinCat, i: usize, obj: &mut Vec<usize>, out: &mut Vec<FinFunctor>) {
    if i == obj.len() {
        let mut mor = vec![usize::MAX; c.morphism_count()];
        for o in c.objects() {
            mor[c.id(o)] = d.id(obj[o]);
        }
        let order: Vec<usize> = c.morphisms().filter(|&m| !c.is_identity(m)).collect();
        let entries = c.composition_entries();
        enum_mors(c, d, obj, &order, &entries, 0, &mut mor, out);
        return;
    }
    for x in d.objects() {
        obj[i] = x;
        enum_objs(c, d, i + 1, obj, out);
    }
}

#[allow(clippy::too_many_arguments)]
fn enum_mors(
    c: &FinCat,
    d: &FinCat,
    obj: &[usize],
    order: &[usize],
    entries: &[((usize, usize), usize)],
    k: usize,
    mor: &mut Vec<usize>,
    out: &mut Vec<FinFunctor>,
) {
    if k == order.len() {
        let f = FinFunctor { obj: obj.to_vec(), mor: mor.clone() };
        if f.check(c, d).is_ok() {
            out.push(f);
        }
        return;
    }
    let m = order[k];
    for &x in d.hom(obj[c.src(m)], obj[c.tgt(m)]) {
        mor[m] = x;
        // prune on composites whose three entries are already assigned
        let ok = entries.iter().all(|&((g, f), gf)| {
            if mor[g] == usize::MAX || mor[f] == usize::MAX || mor[gf] == usize::MAX {
                return true;
            }
            d.compose(mor[g], mor[f]) == Some(mor[gf])
        });
        if ok {
            enum_mors(c, d, obj, order, entries, k + 1, mor, out);
        }
    }
    mor[m] = usize::MAX;
}

/// Every natural transformation `f ⇒ g`.
pub fn enumerate_nat_trans(c: &FinCat, d: &FinCat, f: &FinFunctor, g: &FinFunctor) -> Vec<NatTrans> {
    let mut out = Vec::new();
    let mut comp = Vec::with_capacity(c.object_count());
    enum_nat(c, d, f, g, &mut comp, &mut out);
    out
}

fn enum_nat(c: &FinCat, d: &FinCat, f: &FinFunctor, g: &FinFunctor, comp: &mut Vec<usize>, out: &mut Vec<NatTrans>) {
    let i = comp.len();
    if i == c.object_count() {
        let t = NatTrans { comp: comp.clone() };
        if t.is_natural(c, d, f, g) {
            out.push(t);
        }
        return;
    }
    for &t in d.hom(f.obj[i], g.obj[i]) {
        comp.push(t);
        enum_nat(c, d, f, g, comp, out);
        comp.pop();
    }
}

/// A functor inside a [`CatUniverse`], tagged with its source and target.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UFun {
    pub src: usize,
    pub tgt: usize,
    pub f: FinFunctor,
}

/// A natural transformation inside a [`CatUniverse`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UNat {
    pub src: UFun,
    pub tgt: UFun,
    pub t: NatTrans,
}

/// A finite family of finite categories, seen as a (full, sub-) 2-category of Cat.
#[derive(Clone, Debug, Default)]
pub struct CatUniverse {
    pub cats: Vec<FinCat>,
}

impl CatUniverse {
    pub fn new(cats: Vec<FinCat>) -> Self {
        CatUniverse { cats }
    }

    pub fn functor(&self, src: usize, tgt: usize, f: FinFunctor) -> Result<UFun, CoreError> {
        f.check(&self.cats[src], &self.cats[tgt])?;
        Ok(UFun { src, tgt, f })
    }

    pub fn nat(&self, src: &UFun, tgt: &UFun, t: NatTrans) -> Option<UNat> {
        let ok = src.src == tgt.src
            && src.tgt == tgt.tgt
            && t.is_natural(&self.cats[src.src], &self.cats[src.tgt], &src.f, &tgt.f);
        ok.then(|| UNat { src: src.clone(), tgt: tgt.clone(), t })
    }

    /// The sub-2-category generated by `gens` under composition and
    /// identities, with every natural transformation between its 1-cells.
    pub fn generated(&self, gens: &[UFun]) -> (TwoCat, Vec<UFun>, Vec<UNat>) {
        let mut arrows: BTreeSet<UFun> = (0..self.cats.len()).map(|o| self.id_arrow(&o)).collect();
        arrows.extend(gens.iter().cloned());
        loop {
            let snapshot: Vec<UFun> = arrows.iter().cloned().collect();
            let before = arrows.len();
            for f in &snapshot {
                for g in &snapshot {
                    if let Some(gf) = self.compose(g, f) {
                        arrows.insert(gf);
                    }
                }
            }
            if arrows.len() == before {
                break;
            }
        }
        let arrows: Vec<UFun> = arrows.into_iter().collect();
        let aidx: BTreeMap<&UFun, usize> = arrows.iter().enumerate().map(|(i, a)| (a, i)).collect();
        let mut cells = Vec::new();
        for f in &arrows {
            for g in &arrows {
                if f.src == g.src && f.tgt == g.tgt {
                    cells.extend(self.cells_between(f, g));
                }
            }
        }
        cells.sort();
        let cidx: BTreeMap<&UNat, usize> = cells.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let objects: Vec<String> = (0..self.cats.len()).map(|i| format!("C{i}")).collect();
        let aentries: Vec<Entry> = arrows
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let name = if a.f.is_identity() && a.src == a.tgt { format!("id_C{}", a.src) } else { format!("F{i}") };
                Entry { name, src: a.src, tgt: a.tgt }
            })
            .collect();
        let centries: Vec<Entry> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| Entry { name: format!("t{i}"), src: aidx[&c.src], tgt: aidx[&c.tgt] })
            .collect();
        let id1 = (0..self.cats.len()).map(|o| aidx[&self.id_arrow(&o)]).collect();
        let id2 = arrows.iter().map(|a| cidx[&self.id_cell(a)]).collect();
        let mut h1 = Vec::new();
        for (i, f) in arrows.iter().enumerate() {
            for (j, g) in arrows.iter().enumerate() {
                if let Some(gf) = self.compose(g, f) {
                    h1.push(((j, i), aidx[&gf]));
                }
            }
        }
        let mut v = Vec::new();
        let mut h2 = Vec::new();
        for (i, a) in cells.iter().enumerate() {
            for (j, b) in cells.iter().enumerate() {
                if let Some(ba) = self.vertical(b, a) {
                    v.push(((j, i), cidx[&ba]));
                }
                if let Some(ba) = self.horizontal(b, a) {
                    h2.push(((j, i), cidx[&ba]));
                }
            }
        }
        let k = TwoCat::from_parts(objects, aentries, centries, id1, id2, h1, v, h2).expect("generated tables");
        (k, arrows, cells)
    }
}

impl TwoCategory for CatUniverse {
    type Obj = usize;
    type Arrow = UFun;
    type Cell = UNat;

    fn arrow_src(&self, f: &UFun) -> usize {
        f.src
    }
    fn arrow_tgt(&self, f: &UFun) -> usize {
        f.tgt
    }
    fn cell_src(&self, a: &UNat) -> UFun {
        a.src.clone()
    }
    fn cell_tgt(&self, a: &UNat) -> UFun {
        a.tgt.clone()
    }
    fn id_arrow(&self, o: &usize) -> UFun {
        UFun { src: *o, tgt: *o, f: FinFunctor::identity(&self.cats[*o]) }
    }
    fn id_cell(&self, f: &UFun) -> UNat {
        UNat { src: f.clone(), tgt: f.clone(), t: NatTrans::identity(&self.cats[f.tgt], &f.f) }
    }
    fn compose(&self, g: &UFun, f: &UFun) -> Option<UFun> {
        (f.tgt == g.src).then(|| UFun { src: f.src, tgt: g.tgt, f: f.f.then(&g.f) })
    }
    fn vertical(&self, b: &UNat, a: &UNat) -> Option<UNat> {
        if a.tgt != b.src {
            return None;
        }
        let t = a.t.then(&self.cats[a.src.tgt], &b.t)?;
        Some(UNat { src: a.src.clone(), tgt: b.tgt.clone(), t })
    }
    fn horizontal(&self, b: &UNat, a: &UNat) -> Option<UNat> {
        let src = self.compose(&b.src, &a.src)?;
        let tgt = self.compose(&b.tgt, &a.tgt)?;
        let t = NatTrans::horizontal(&self.cats[b.src.tgt], &a.t, &b.t, &a.tgt.f, &b.src.f)?;
        Some(UNat { src, tgt, t })
    }
    fn inverse(&self, a: &UNat) -> Option<UNat> {
        let t = a.t.inverse(&self.cats[a.src.tgt])?;
        Some(UNat { src: a.tgt.clone(), tgt: a.src.clone(), t })
    }
    fn describe_obj(&self, o: &usize) -> String {
        format!("C{o}")
    }
}

impl Enumerable for CatUniverse {
    fn objects(&self) -> Vec<usize> {
        (0..self.cats.len()).collect()
    }
    fn arrows_between(&self, a: &usize, b: &usize) -> Vec<UFun> {
        enumerate_functors(&self.cats[*a], &self.cats[*b])
            .into_iter()
            .map(|f| UFun { src: *a, tgt: *b, f })
            .collect()
    }
    fn cells_between(&self, f: &UFun, g: &UFun) -> Vec<UNat> {
        if f.src != g.src || f.tgt != g.tgt {
            return Vec::new();
        }
        enumerate_nat_trans(&self.cats[f.src], &self.cats[f.tgt], &f.f, &g.f)
            .into_iter()
            .map(|t| UNat { src: f.clone(), tgt: g.clone(), t })
            .collect()
    }
}
