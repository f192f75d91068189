use std::collections::{BTreeMap, HashMap};

use super::represent::{check_represents_2cell, Representative, Representative2};
use super::{compose_elements, precompose_functor, pro_hom, ProError, ProHom, ProObject};
use crate::core::{validate_twocat, Entry, Op, Report, TwoCat};
use crate::kan::{comparison_functor, Comparison};
use crate::maps::{check_pseudo_functor, FunctorLaw, Probe, PseudoFunctor, PseudoFunctorOf};
use crate::shape::{check_2cofinal, check_2filtered, CofinalReportOf, FilteredReportOf};

/// Every `(r, φ)` representing `f`, over all `(i, j)`.
fn representatives(h: &ProHom, f: usize) -> Vec<Representative> {
    let (c, x, y) = (&h.source.target, &h.source, &h.target);
    let mut out = Vec::new();
    for j in y.index.objects() {
        let l = &h.inner[j];
        let target = h.component(f, j);
        for i in x.index.objects() {
            for &r in c.hom1(x.obj[i], y.obj[j]) {
                let src = l.object(i, r).expect("hom object");
                for &phi in l.cat().hom(src, target) {
                    if l.cat().is_iso(phi) {
                        out.push(Representative { i, j, r, phi });
                    }
                }
            }
        }
    }
    out
}

/// Assembles a 2-category from cell lists and composition closures.
struct Builder {
    objects: Vec<String>,
    arrows: Vec<Entry>,
    cells: Vec<Entry>,
    id1: Vec<usize>,
    id2: Vec<usize>,
    h1: Vec<((usize, usize), usize)>,
    v: Vec<((usize, usize), usize)>,
    h2: Vec<((usize, usize), usize)>,
}

impl Builder {
    fn build(self) -> Result<TwoCat, ProError> {
        let k = TwoCat::from_parts(self.objects, self.arrows, self.cells, self.id1, self.id2, self.h1, self.v, self.h2)
            .map_err(|e| ProError::Invalid(e.to_string()))?;
        let r = validate_twocat(&k);
        if !r.is_ok() {
            return Err(ProError::Invalid(r.to_string().trim().replace('\n', "; ")));
        }
        Ok(k)
    }
}

/// A 1-cell `(u, a, θ)` of `M_f` with `θ: Y_a s ⇒ r X_u` invertible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MArrow {
    pub src: usize,
    pub tgt: usize,
    pub u: usize,
    pub a: usize,
    pub theta: usize,
}

/// A 2-cell `(μ, α)` of `M_f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MCell {
    pub src: usize,
    pub tgt: usize,
    pub mu: usize,
    pub alpha: usize,
}

#[derive(Clone, Debug)]
pub struct MfTruncation {
    pub cat: TwoCat,
    pub objects: Vec<Representative>,
    pub arrows: Vec<MArrow>,
    pub cells: Vec<MCell>,
    pub to_i: PseudoFunctorOf<TwoCat, TwoCat>,
    pub to_j: PseudoFunctorOf<TwoCat, TwoCat>,
    pub filtered: FilteredReportOf<TwoCat>,
    pub cofinal_i: CofinalReportOf<TwoCat, TwoCat>,
    pub cofinal_j: CofinalReportOf<TwoCat, TwoCat>,
}

/// `φ ∘ r π_u ∘ θ π_i′ = π_a f ∘ Y_a ψ` for a candidate 1-cell of `M_f`.
pub fn mf_arrow_holds(h: &ProHom, f: usize, r: &Representative, s: &Representative, u: usize, a: usize, theta: usize) -> bool {
    let l = &h.inner[r.j];
    let cat = l.cat();
    let lhs = (|| {
        let lam = l.lambda(s.i, theta)?;
        cat.compose_path(&[lam, l.r_pi(r.r, u)?, r.phi])
    })();
    let rhs = (|| {
        let pushed = h.inner[s.j].push_morphism(h.target.arrow[a], l, s.phi)?;
        cat.compose(h.structure(f, a), pushed)
    })();
    lhs.is_some() && lhs == rhs
}

/// `(μ, α): (u, a, θ) ⇒ (v, b, η)` when `η ∘ Y_α s = r X_μ ∘ θ`.
pub fn mf_cell_holds(h: &ProHom, objects: &[Representative], e1: &MArrow, e2: &MArrow, mu: usize, alpha: usize) -> bool {
    let (c, x, y) = (&h.source.target, &h.source, &h.target);
    let (r, s) = (&objects[e1.src], &objects[e1.tgt]);
    let lhs = c.rwhisker(y.cell[alpha], s.r).and_then(|t| c.vert(e2.theta, t));
    let rhs = c.lwhisker(r.r, x.cell[mu]).and_then(|t| c.vert(t, e1.theta));
    lhs.is_some() && lhs == rhs
}

/// `M_f` for `f` in `h = Pro(X, Y)`. All of it is finite; `bound` caps the
/// number of objects.
pub fn build_mf(h: &ProHom, f: usize, bound: usize) -> Result<MfTruncation, ProError> {
    let (c, x, y) = (&h.source.target, &h.source, &h.target);
    let (ii, jj) = (&x.index, &y.index);
    if f >= h.cat().object_count() {
        return Err(ProError::ShapeMismatch("unknown element".into()));
    }
    let objects = representatives(h, f);
    if objects.len() > bound {
        return Err(ProError::BoundTooSmall(format!("{} representatives exceed the bound {bound}", objects.len())));
    }
    let mut arrows = Vec::new();
    for (p, r) in objects.iter().enumerate() {
        for (q, s) in objects.iter().enumerate() {
            for &u in ii.hom1(r.i, s.i) {
                for &a in jj.hom1(r.j, s.j) {
                    let (Some(src), Some(tgt)) = (c.comp1(y.arrow[a], s.r), c.comp1(r.r, x.arrow[u])) else { continue };
                    for &theta in c.hom2(src, tgt) {
                        if c.is_invertible(theta) && mf_arrow_holds(h, f, r, s, u, a, theta) {
                            arrows.push(MArrow { src: p, tgt: q, u, a, theta });
                        }
                    }
                }
            }
        }
    }
    let aix: HashMap<MArrow, usize> = arrows.iter().enumerate().map(|(n, e)| (*e, n)).collect();
    let id1 = objects
        .iter()
        .enumerate()
        .map(|(p, r)| {
            let e = MArrow { src: p, tgt: p, u: ii.id1(r.i), a: jj.id1(r.j), theta: c.id2(r.r) };
            aix.get(&e).copied().ok_or_else(|| ProError::Invalid("identity of M_f missing".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut cells = Vec::new();
    for (n, e1) in arrows.iter().enumerate() {
        for e2 in arrows.iter().filter(|e| e.src == e1.src && e.tgt == e1.tgt) {
            for &mu in ii.hom2(e1.u, e2.u) {
                for &alpha in jj.hom2(e1.a, e2.a) {
                    if mf_cell_holds(h, &objects, e1, e2, mu, alpha) {
                        cells.push(MCell { src: n, tgt: aix[e2], mu, alpha });
                    }
                }
            }
        }
    }
    let cix: HashMap<MCell, usize> = cells.iter().enumerate().map(|(n, e)| (*e, n)).collect();
    let id2 = arrows
        .iter()
        .enumerate()
        .map(|(n, e)| cix.get(&MCell { src: n, tgt: n, mu: ii.id2(e.u), alpha: jj.id2(e.a) }).copied())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| ProError::Invalid("identity 2-cell of M_f missing".into()))?;
    let missing = |w: &str| ProError::Invalid(format!("{w} of M_f is not in M_f"));
    let mut h1 = Vec::new();
    let mut h1m = HashMap::new();
    for (n, e) in arrows.iter().enumerate() {
        for (n2, e2) in arrows.iter().enumerate().filter(|(_, e2)| e2.src == e.tgt) {
            let theta = c
                .lwhisker(y.arrow[e.a], e2.theta)
                .and_then(|a| c.rwhisker(e.theta, x.arrow[e2.u]).and_then(|b| c.vert(b, a)))
                .ok_or_else(|| missing("composite cell"))?;
            let comp = MArrow { src: e.src, tgt: e2.tgt, u: ii.comp1(e2.u, e.u).expect("composable"), a: jj.comp1(e2.a, e.a).expect("composable"), theta };
            let z = *aix.get(&comp).ok_or_else(|| missing("a composite 1-cell"))?;
            h1.push(((n2, n), z));
            h1m.insert((n2, n), z);
        }
    }
    let mut v = Vec::new();
    let mut h2 = Vec::new();
    for (n, a) in cells.iter().enumerate() {
        for (n2, b) in cells.iter().enumerate() {
            if b.src == a.tgt {
                let cell = MCell { src: a.src, tgt: b.tgt, mu: ii.vert(b.mu, a.mu).expect("vertical"), alpha: jj.vert(b.alpha, a.alpha).expect("vertical") };
                v.push(((n2, n), *cix.get(&cell).ok_or_else(|| missing("a vertical composite"))?));
            }
            let (ea, eb) = (&arrows[a.src], &arrows[b.src]);
            if eb.src == ea.tgt {
                let (s, t) = (h1m[&(b.src, a.src)], h1m[&(b.tgt, a.tgt)]);
                let cell = MCell { src: s, tgt: t, mu: ii.horiz(b.mu, a.mu).expect("horizontal"), alpha: jj.horiz(b.alpha, a.alpha).expect("horizontal") };
                h2.push(((n2, n), *cix.get(&cell).ok_or_else(|| missing("a horizontal composite"))?));
            }
        }
    }
    let objects_named = objects.iter().map(|r| format!("({},{})", c.arrow_name(r.r), h.inner[r.j].cat().morphism_name(r.phi))).collect();
    let arrow_entries = arrows
        .iter()
        .map(|e| Entry { name: format!("({},{},{})", ii.arrow_name(e.u), jj.arrow_name(e.a), c.cell_name(e.theta)), src: e.src, tgt: e.tgt })
        .collect();
    let cell_entries = cells
        .iter()
        .map(|e| Entry { name: format!("({},{})", ii.cell_name(e.mu), jj.cell_name(e.alpha)), src: e.src, tgt: e.tgt })
        .collect();
    let cat = Builder { objects: objects_named, arrows: arrow_entries, cells: cell_entries, id1, id2, h1, v, h2 }.build()?;
    let to_i = PseudoFunctor::strict(
        &cat,
        ii,
        objects.iter().enumerate().map(|(n, r)| (n, r.i)).collect(),
        arrows.iter().enumerate().map(|(n, e)| (n, e.u)).collect(),
        cells.iter().enumerate().map(|(n, e)| (n, e.mu)).collect(),
    );
    let to_j = PseudoFunctor::strict(
        &cat,
        jj,
        objects.iter().enumerate().map(|(n, r)| (n, r.j)).collect(),
        arrows.iter().enumerate().map(|(n, e)| (n, e.a)).collect(),
        cells.iter().enumerate().map(|(n, e)| (n, e.alpha)).collect(),
    );
    let filtered = check_2filtered(&cat);
    let cofinal_i = check_2cofinal(&cat, ii, &to_i);
    let cofinal_j = check_2cofinal(&cat, jj, &to_j);
    Ok(MfTruncation { cat, objects, arrows, cells, to_i, to_j, filtered, cofinal_i, cofinal_j })
}

/// A 2-functor `J^op -> Pro(C)`: a pro-object per object, an element
/// `X^a ∈ Pro(X^j′, X^j)` per `a: j -> j′` and a morphism `X^α` of that hom
/// category per 2-cell.
#[derive(Clone, Debug)]
pub struct ProDiagram {
    pub index: TwoCat,
    pub objects: Vec<ProObject>,
    pub arrows: Vec<usize>,
    pub cells: Vec<usize>,
}

/// `(a, r, φ): (i, j) -> (i′, j′)` with `(r, φ)` representing `X^a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KArrow {
    pub src: usize,
    pub tgt: usize,
    pub a: usize,
    pub r: usize,
    pub phi: usize,
}

/// `(α, θ)` with `(θ, r, φ, s, ψ)` representing `X^α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KCell {
    pub src: usize,
    pub tgt: usize,
    pub alpha: usize,
    pub theta: usize,
}

#[derive(Clone, Debug)]
pub struct KXTruncation {
    pub cat: TwoCat,
    /// `(i, j)`.
    pub objects: Vec<(usize, usize)>,
    pub arrows: Vec<KArrow>,
    pub cells: Vec<KCell>,
    /// `Pro(X^j′, X^j)` keyed by `(j′, j)`.
    pub homs: BTreeMap<(usize, usize), ProHom>,
    pub to_j: PseudoFunctorOf<TwoCat, TwoCat>,
    pub filtered: FilteredReportOf<TwoCat>,
    /// `X̃` with `X̃_(i,j) = X^j_i`, `X̃_(a,r,φ) = r`, `X̃_(α,θ) = θ`.
    pub xtilde: ProObject,
    pub xtilde_report: Report<FunctorLaw>,
}

impl KXTruncation {
    pub fn find_arrow(&self, e: &KArrow) -> Option<usize> {
        self.arrows.iter().position(|x| x == e)
    }

    /// The displayed composite `(a′a, r r′, φ X^{a′} ∘ r φ′)`, computed
    /// afresh rather than read from the tables.
    pub fn compose_rule(&self, d: &ProDiagram, e2: &KArrow, e1: &KArrow) -> Option<KArrow> {
        compose_k(d, &self.homs, &self.objects, e2, e1)
    }
}

fn compose_k(d: &ProDiagram, homs: &BTreeMap<(usize, usize), ProHom>, objects: &[(usize, usize)], e2: &KArrow, e1: &KArrow) -> Option<KArrow> {
    if e1.tgt != e2.src {
        return None;
    }
    let jj = &d.index;
    let c = &d.objects[0].target;
    let (i, j) = objects[e1.src];
    let (i1, j1) = objects[e1.tgt];
    let (_, j2) = objects[e2.tgt];
    let mid = &homs[&(j2, j1)];
    let out = &homs[&(j2, j)];
    let first = &homs[&(j1, j)];
    // r φ′ in Pro(X^j″, c(X^j_i))
    let rphi2 = mid.inner[i1].push_morphism(e1.r, &out.inner[i], e2.phi)?;
    let p = precompose_functor(mid, d.arrows[e2.a], &first.inner[i], &out.inner[i])?;
    let phi = out.inner[i].cat().compose(p.mor[e1.phi], rphi2)?;
    Some(KArrow { src: e1.src, tgt: e2.tgt, a: jj.comp1(e2.a, e1.a)?, r: c.comp1(e1.r, e2.r)?, phi })
}

/// `K_X` and `X̃` for a diagram of pro-objects; `bound` caps the number of
/// 1-cells.
pub fn build_kx(d: &ProDiagram, bound: usize) -> Result<KXTruncation, ProError> {
    let jj = &d.index;
    let bad = |s: String| ProError::Invalid(s);
    if d.objects.len() != jj.object_count() || d.arrows.len() != jj.arrow_count() || d.cells.len() != jj.cell_count() {
        return Err(ProError::ShapeMismatch("table sizes do not match the index".into()));
    }
    let c = d.objects.first().map(|x| x.target.clone()).ok_or_else(|| ProError::ShapeMismatch("empty diagram".into()))?;
    let mut homs: BTreeMap<(usize, usize), ProHom> = BTreeMap::new();
    for a in jj.arrows() {
        let (j, j2) = (jj.src(a), jj.tgt(a));
        if let std::collections::btree_map::Entry::Vacant(v) = homs.entry((j2, j)) {
            v.insert(pro_hom(&d.objects[j2], &d.objects[j])?);
        }
        if d.arrows[a] >= homs[&(j2, j)].cat().object_count() {
            return Err(ProError::ShapeMismatch(format!("X^{} is not an element", jj.arrow_name(a))));
        }
    }
    // strictness of the given 2-functor on 1-cells
    for j in jj.objects() {
        if homs[&(j, j)].identity() != Some(d.arrows[jj.id1(j)]) {
            return Err(bad(format!("X^id at {} is not the identity", jj.object_name(j))));
        }
    }
    for a in jj.arrows() {
        for b in jj.arrows().filter(|&b| jj.src(b) == jj.tgt(a)) {
            let (j, j1, j2) = (jj.src(a), jj.tgt(a), jj.tgt(b));
            let ba = jj.comp1(b, a).expect("composable");
            let got = compose_elements(&homs[&(j1, j)], d.arrows[a], &homs[&(j2, j1)], d.arrows[b], &homs[&(j2, j)]);
            if got != Some(d.arrows[ba]) {
                return Err(bad(format!("X^({}{}) differs from X^{} X^{}", jj.arrow_name(b), jj.arrow_name(a), jj.arrow_name(a), jj.arrow_name(b))));
            }
        }
    }
    for al in jj.cells() {
        let (a, b) = (jj.csrc(al), jj.ctgt(al));
        let h = &homs[&(jj.tgt(a), jj.src(a))];
        let m = d.cells[al];
        if m >= h.cat().morphism_count() || h.cat().src(m) != d.arrows[a] || h.cat().tgt(m) != d.arrows[b] {
            return Err(ProError::ShapeMismatch(format!("X^{} has the wrong boundary", jj.cell_name(al))));
        }
    }

    let objects: Vec<(usize, usize)> = jj.objects().flat_map(|j| d.objects[j].index.objects().map(move |i| (i, j))).collect();
    let oix: HashMap<(usize, usize), usize> = objects.iter().enumerate().map(|(n, &o)| (o, n)).collect();
    let mut arrows = Vec::new();
    for a in jj.arrows() {
        let (j, j2) = (jj.src(a), jj.tgt(a));
        for rep in representatives(&homs[&(j2, j)], d.arrows[a]) {
            // rep.i indexes X^j′, rep.j indexes X^j
            arrows.push(KArrow { src: oix[&(rep.j, j)], tgt: oix[&(rep.i, j2)], a, r: rep.r, phi: rep.phi });
        }
        if arrows.len() > bound {
            return Err(ProError::BoundTooSmall(format!("more than {bound} 1-cells")));
        }
    }
    let aix: HashMap<KArrow, usize> = arrows.iter().enumerate().map(|(n, e)| (*e, n)).collect();
    let rep_of = |e: &KArrow| {
        let ((i, j), (i2, _)) = (objects[e.src], objects[e.tgt]);
        let _ = j;
        Representative { i: i2, j: i, r: e.r, phi: e.phi }
    };
    let mut cells = Vec::new();
    for (n, e1) in arrows.iter().enumerate() {
        for (n2, e2) in arrows.iter().enumerate().filter(|(_, e)| e.src == e1.src && e.tgt == e1.tgt) {
            let (j, j2) = (objects[e1.src].1, objects[e1.tgt].1);
            let h = &homs[&(j2, j)];
            for &alpha in jj.hom2(e1.a, e2.a) {
                for &theta in c.hom2(e1.r, e2.r) {
                    let rep = Representative2 { theta, r: rep_of(e1), s: rep_of(e2) };
                    if check_represents_2cell(h, &rep, d.cells[alpha])? {
                        cells.push(KCell { src: n, tgt: n2, alpha, theta });
                    }
                }
            }
        }
    }
    let cix: HashMap<KCell, usize> = cells.iter().enumerate().map(|(n, e)| (*e, n)).collect();
    let missing = |w: &str| ProError::Invalid(format!("{w} of K_X is not in K_X"));
    let id1 = objects
        .iter()
        .map(|&(i, j)| {
            let x = &d.objects[j];
            let l = &homs[&(j, j)].inner[i];
            let o = l.object(i, c.id1(x.obj[i]))?;
            aix.get(&KArrow { src: oix[&(i, j)], tgt: oix[&(i, j)], a: jj.id1(j), r: c.id1(x.obj[i]), phi: l.cat().id(o) }).copied()
        })
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| missing("an identity 1-cell"))?;
    let id2 = arrows
        .iter()
        .enumerate()
        .map(|(n, e)| cix.get(&KCell { src: n, tgt: n, alpha: jj.id2(e.a), theta: c.id2(e.r) }).copied())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| missing("an identity 2-cell"))?;
    let mut h1 = Vec::new();
    let mut h1m = HashMap::new();
    for (n, e1) in arrows.iter().enumerate() {
        for (n2, e2) in arrows.iter().enumerate().filter(|(_, e)| e.src == e1.tgt) {
            let comp = compose_k(d, &homs, &objects, e2, e1).ok_or_else(|| missing("a composite"))?;
            let z = *aix.get(&comp).ok_or_else(|| missing("a composite 1-cell"))?;
            h1.push(((n2, n), z));
            h1m.insert((n2, n), z);
        }
    }
    let mut v = Vec::new();
    let mut h2 = Vec::new();
    for (n, a) in cells.iter().enumerate() {
        for (n2, b) in cells.iter().enumerate() {
            if b.src == a.tgt {
                let cell = KCell { src: a.src, tgt: b.tgt, alpha: jj.vert(b.alpha, a.alpha).expect("vertical"), theta: c.vert(b.theta, a.theta).expect("vertical") };
                v.push(((n2, n), *cix.get(&cell).ok_or_else(|| missing("a vertical composite"))?));
            }
            if arrows[b.src].src == arrows[a.src].tgt {
                let cell = KCell {
                    src: h1m[&(b.src, a.src)],
                    tgt: h1m[&(b.tgt, a.tgt)],
                    alpha: jj.horiz(b.alpha, a.alpha).expect("horizontal"),
                    theta: c.horiz(a.theta, b.theta).expect("horizontal"),
                };
                h2.push(((n2, n), *cix.get(&cell).ok_or_else(|| missing("a horizontal composite"))?));
            }
        }
    }
    let names = objects.iter().map(|&(i, j)| format!("({},{})", d.objects[j].index.object_name(i), jj.object_name(j))).collect();
    let ae = arrows
        .iter()
        .map(|e| {
            let h = &homs[&(objects[e.tgt].1, objects[e.src].1)];
            let l = &h.inner[objects[e.src].0];
            Entry { name: format!("({},{},{})", jj.arrow_name(e.a), c.arrow_name(e.r), l.cat().morphism_name(e.phi)), src: e.src, tgt: e.tgt }
        })
        .collect();
    let ce = cells.iter().map(|e| Entry { name: format!("({},{})", jj.cell_name(e.alpha), c.cell_name(e.theta)), src: e.src, tgt: e.tgt }).collect();
    let cat = Builder { objects: names, arrows: ae, cells: ce, id1, id2, h1, v, h2 }.build()?;
    let to_j = PseudoFunctor::strict(
        &cat,
        jj,
        objects.iter().enumerate().map(|(n, o)| (n, o.1)).collect(),
        arrows.iter().enumerate().map(|(n, e)| (n, e.a)).collect(),
        cells.iter().enumerate().map(|(n, e)| (n, e.alpha)).collect(),
    );
    let filtered = check_2filtered(&cat);
    let xtilde = ProObject {
        index: cat.clone(),
        target: c.clone(),
        obj: objects.iter().map(|&(i, j)| d.objects[j].obj[i]).collect(),
        arrow: arrows.iter().map(|e| e.r).collect(),
        cell: cells.iter().map(|e| e.theta).collect(),
    };
    let op = Op(&cat);
    let xtilde_report = check_pseudo_functor(&op, &c, &xtilde.table(), &Probe::exhaustive(&op));
    Ok(KXTruncation { cat, objects, arrows, cells, homs, to_j, filtered, xtilde, xtilde_report })
}

/// `X_F` with one comparison certificate per object of `C`.
#[derive(Clone, Debug)]
pub struct Reindexed {
    pub object: ProObject,
    pub certificates: Vec<Comparison>,
}

impl Reindexed {
    pub fn is_equivalence(&self) -> bool {
        self.certificates.iter().all(|c| c.decision.is_yes())
    }
}

pub fn reindex(x: &ProObject, i: &TwoCat, f: &PseudoFunctorOf<TwoCat, TwoCat>) -> Result<Reindexed, ProError> {
    x.validate()?;
    let object = x.precompose(i, f)?;
    let certificates = x
        .target
        .objects()
        .map(|d| comparison_functor(i, &x.index, f, &x.hom_diagram(d)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Reindexed { object, certificates })
}

