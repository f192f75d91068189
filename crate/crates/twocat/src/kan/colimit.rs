use std::collections::HashMap;

use super::{check_cat_cone, CatCone, CatDiagram, KanError, Variance};
use crate::core::{validate_fincat, FinCat, FinFunctor, Mor, NatTrans, Report};
use crate::maps::ConeLaw;
use crate::shape::check_2filtered;

/// `[u, r, v]` from `(C, i)` to `(D, j)`: a cospan `u: i -> k`, `v: j -> k`
/// and `r: F u (C) -> F v (D)` in `F k`. `src` and `tgt` are object ids of
/// the colimit category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Premorphism {
    pub src: usize,
    pub tgt: usize,
    pub k: usize,
    pub u: usize,
    pub r: usize,
    pub v: usize,
}

/// `w1: k1 -> k`, `w2: k2 -> k` with invertible `α: w1 v1 ⇒ w2 v2` and
/// `β: w1 u1 ⇒ w2 u2` making `F(α)_D F(w1)(r1) = F(w2)(r2) F(β)_C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Homotopy {
    pub k: usize,
    pub w1: usize,
    pub w2: usize,
    pub alpha: usize,
    pub beta: usize,
}

/// The pseudo-colimit `L(F)` with its cocone `λ`.
#[derive(Clone, Debug)]
pub struct ColimitPresentation {
    pub diagram: CatDiagram,
    pub cat: FinCat,
    /// `(C, i)` for each object of `cat`.
    pub objects: Vec<(usize, usize)>,
    pub premorphisms: Vec<Premorphism>,
    /// Premorphism ids per morphism of `cat`, canonical representative first.
    pub classes: Vec<Vec<usize>>,
    /// Legs `λ_i` and cells `λ_u: λ_i ⇒ λ_j F u`.
    pub cocone: CatCone,
    pub cone_report: Report<ConeLaw>,
    offsets: Vec<usize>,
    class_of: Vec<usize>,
    lookup: HashMap<(usize, usize, usize, usize, usize), usize>,
}

impl ColimitPresentation {
    /// The object `(c, i)`.
    pub fn object(&self, c: usize, i: usize) -> usize {
        self.offsets[i] + c
    }

    /// The class of the premorphism `(u, r, v)` from `(c, i)` to `(d, j)`.
    pub fn class(&self, src: usize, u: usize, r: usize, v: usize, tgt: usize) -> Option<usize> {
        self.lookup.get(&(src, u, r, v, tgt)).map(|&p| self.class_of[p])
    }

    pub fn class_of_premorphism(&self, p: usize) -> usize {
        self.class_of[p]
    }

    pub fn representative(&self, m: usize) -> Premorphism {
        self.premorphisms[self.classes[m][0]]
    }

    pub fn leg(&self, i: usize) -> &FinFunctor {
        &self.cocone.legs[i]
    }

    /// A homotopy between two premorphisms, if one exists.
    pub fn homotopy(&self, p: &Premorphism, q: &Premorphism) -> Option<Homotopy> {
        find_homotopy(&self.diagram, &self.objects, p, q)
    }

    pub fn describe(&self, p: &Premorphism) -> String {
        describe(&self.diagram, p)
    }
}

fn describe(d: &CatDiagram, p: &Premorphism) -> String {
    let k = &d.index;
    format!("[{},{},{}]", k.arrow_name(p.u), d.cats[p.k].morphism_name(p.r), k.arrow_name(p.v))
}

fn find_homotopy(d: &CatDiagram, objects: &[(usize, usize)], p: &Premorphism, q: &Premorphism) -> Option<Homotopy> {
    if p.src != q.src || p.tgt != q.tgt {
        return None;
    }
    let k = &d.index;
    let (c, _) = objects[p.src];
    let (dd, _) = objects[p.tgt];
    for t in k.objects() {
        let fk = &d.cats[t];
        for &w1 in k.hom1(p.k, t) {
            let w1r1 = d.functors[w1].mor[p.r];
            let (w1v1, w1u1) = (k.comp1(w1, p.v)?, k.comp1(w1, p.u)?);
            for &w2 in k.hom1(q.k, t) {
                let w2r2 = d.functors[w2].mor[q.r];
                let (w2v2, w2u2) = (k.comp1(w2, q.v)?, k.comp1(w2, q.u)?);
                for &alpha in k.hom2(w1v1, w2v2) {
                    if !k.is_invertible(alpha) {
                        continue;
                    }
                    let lhs = fk.compose(d.nats[alpha].comp[dd], w1r1);
                    for &beta in k.hom2(w1u1, w2u2) {
                        if k.is_invertible(beta) && lhs.is_some() && lhs == fk.compose(w2r2, d.nats[beta].comp[c]) {
                            return Some(Homotopy { k: t, w1, w2, alpha, beta });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Refinements `(k″, w, w′, γ)` with invertible `γ: w v ⇒ w′ u′` for a
/// premorphism over `k` ending with `v` followed by one over `k′` starting
/// with `u′`.
fn refinements(d: &CatDiagram, k: usize, v: usize, k2: usize, u2: usize) -> Vec<(usize, usize, usize, usize)> {
    let idx = &d.index;
    let mut out = Vec::new();
    for t in idx.objects() {
        for &w in idx.hom1(k, t) {
            for &w2 in idx.hom1(k2, t) {
                let (Some(wv), Some(w2u2)) = (idx.comp1(w, v), idx.comp1(w2, u2)) else { continue };
                for &g in idx.hom2(wv, w2u2) {
                    if idx.is_invertible(g) {
                        out.push((t, w, w2, g));
                    }
                }
            }
        }
    }
    out
}

/// The composite `[w u, F(w′)(s) F(γ)_D F(w)(r), w′ v′]`.
fn compose_with(
    d: &CatDiagram,
    objects: &[(usize, usize)],
    p: &Premorphism,
    q: &Premorphism,
    (t, w, w2, g): (usize, usize, usize, usize),
) -> Option<(usize, usize, usize, usize, usize)> {
    let idx = &d.index;
    let (dd, _) = objects[p.tgt];
    let ft = &d.cats[t];
    let r = ft.compose_path(&[d.functors[w].mor[p.r], d.nats[g].comp[dd], d.functors[w2].mor[q.r]])?;
    Some((p.src, idx.comp1(w, p.u)?, r, idx.comp1(w2, q.v)?, q.tgt))
}

/// The pseudo-colimit of a covariant diagram over a finite 2-filtered index.
pub fn ll_colimit(d: &CatDiagram) -> Result<ColimitPresentation, KanError> {
    if d.variance != Variance::Covariant {
        return Err(KanError::InvalidDiagram("colimits take a covariant diagram".into()));
    }
    d.validate()?;
    let fr = check_2filtered(&d.index);
    if !fr.is_filtered() {
        return Err(KanError::NotFiltered(fr.first_failure().unwrap_or_default()));
    }
    let idx = &d.index;
    let mut objects = Vec::new();
    let mut offsets = Vec::new();
    for i in idx.objects() {
        offsets.push(objects.len());
        objects.extend(d.cats[i].objects().map(|c| (c, i)));
    }
    let n = objects.len();

    let mut premorphisms = Vec::new();
    let mut lookup = HashMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let ((c, i), (dd, j)) = (objects[a], objects[b]);
            let mut group = Vec::new();
            for k in idx.objects() {
                for &u in idx.hom1(i, k) {
                    for &v in idx.hom1(j, k) {
                        let (x, y) = (d.functors[u].obj[c], d.functors[v].obj[dd]);
                        for &r in d.cats[k].hom(x, y) {
                            let p = Premorphism { src: a, tgt: b, k, u, r, v };
                            lookup.insert((a, u, r, v, b), premorphisms.len());
                            group.push(premorphisms.len());
                            premorphisms.push(p);
                        }
                    }
                }
            }
            groups.push(group);
        }
    }

    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![usize::MAX; premorphisms.len()];
    for group in &groups {
        let m = group.len();
        let mut rel = vec![vec![false; m]; m];
        for x in 0..m {
            for y in 0..m {
                rel[x][y] = find_homotopy(d, &objects, &premorphisms[group[x]], &premorphisms[group[y]]).is_some();
            }
        }
        let name = |x: usize| describe(d, &premorphisms[group[x]]);
        for x in 0..m {
            if !rel[x][x] {
                return Err(KanError::HomotopyNotEquivalence(format!("{} is not homotopic to itself", name(x))));
            }
            for y in 0..m {
                if rel[x][y] != rel[y][x] {
                    return Err(KanError::HomotopyNotEquivalence(format!("asymmetric on {} and {}", name(x), name(y))));
                }
                if !rel[x][y] {
                    continue;
                }
                if let Some(z) = (0..m).find(|&z| rel[y][z] && !rel[x][z]) {
                    return Err(KanError::HomotopyNotEquivalence(format!(
                        "intransitive on {}, {}, {}",
                        name(x),
                        name(y),
                        name(z)
                    )));
                }
            }
        }
        for x in 0..m {
            if class_of[group[x]] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let members: Vec<usize> = (0..m).filter(|&y| rel[x][y]).map(|y| group[y]).collect();
            for &p in &members {
                class_of[p] = id;
            }
            classes.push(members);
        }
    }

    let class_key = |key: (usize, usize, usize, usize, usize)| lookup.get(&key).map(|&p| class_of[p]);
    let identity: Vec<usize> = (0..n)
        .map(|a| {
            let (c, i) = objects[a];
            let e = idx.id1(i);
            class_key((a, e, d.cats[i].id(c), e, a)).expect("identity premorphism")
        })
        .collect();

    let mut by_src: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (m, cl) in classes.iter().enumerate() {
        by_src[premorphisms[cl[0]].src].push(m);
    }
    let mut comp = Vec::new();
    for (m1, cl1) in classes.iter().enumerate() {
        let p = premorphisms[cl1[0]];
        for &m2 in &by_src[p.tgt] {
            let cl2 = &classes[m2];
            let q = premorphisms[cl2[0]];
            let refs = refinements(d, p.k, p.v, q.k, q.u);
            if refs.is_empty() {
                return Err(KanError::NotFiltered(format!("no refinement for {} then {}", describe(d, &p), describe(d, &q))));
            }
            let mut target = None;
            let mut check = |p: &Premorphism, q: &Premorphism, rf| -> Result<(), KanError> {
                let got = compose_with(d, &objects, p, q, rf).and_then(class_key);
                match (got, target) {
                    (None, _) => Err(KanError::CompositionNotWellDefined(format!(
                        "{} then {} has no composite premorphism",
                        describe(d, p),
                        describe(d, q)
                    ))),
                    (Some(c), None) => {
                        target = Some(c);
                        Ok(())
                    }
                    (Some(c), Some(t)) if c == t => Ok(()),
                    (Some(_), Some(_)) => Err(KanError::CompositionNotWellDefined(format!(
                        "{} then {} lands in two classes",
                        describe(d, p),
                        describe(d, q)
                    ))),
                }
            };
            for &rf in &refs {
                check(&p, &q, rf)?;
            }
            for &x in &cl1[1..] {
                let px = premorphisms[x];
                let rf = refinements(d, px.k, px.v, q.k, q.u)[0];
                check(&px, &q, rf)?;
            }
            for &y in &cl2[1..] {
                let qy = premorphisms[y];
                let rf = refinements(d, p.k, p.v, qy.k, qy.u)[0];
                check(&p, &qy, rf)?;
            }
            comp.push(((m2, m1), target.expect("at least one refinement")));
        }
    }

    let names: Vec<String> =
        objects.iter().map(|&(c, i)| format!("({},{})", d.cats[i].object_name(c), idx.object_name(i))).collect();
    let mors: Vec<Mor> = classes
        .iter()
        .map(|cl| {
            let p = premorphisms[cl[0]];
            Mor { name: describe(d, &p), src: p.src, tgt: p.tgt }
        })
        .collect();
    let cat = FinCat::from_parts(names, mors, identity, comp).map_err(|e| KanError::NotACategory(e.to_string()))?;
    let laws = validate_fincat(&cat);
    if !laws.is_ok() {
        return Err(KanError::NotACategory(laws.to_string().trim().replace('\n', "; ")));
    }

    let legs: Vec<FinFunctor> = idx
        .objects()
        .map(|i| {
            let fi = &d.cats[i];
            let e = idx.id1(i);
            FinFunctor {
                obj: fi.objects().map(|c| offsets[i] + c).collect(),
                mor: fi
                    .morphisms()
                    .map(|r| class_key((offsets[i] + fi.src(r), e, r, e, offsets[i] + fi.tgt(r))).expect("leg premorphism"))
                    .collect(),
            }
        })
        .collect();
    let cells: Vec<NatTrans> = idx
        .arrows()
        .map(|u| {
            let (i, j) = (idx.src(u), idx.tgt(u));
            let comp = d.cats[i]
                .objects()
                .map(|c| {
                    let fc = d.functors[u].obj[c];
                    let key = (offsets[i] + c, u, d.cats[j].id(fc), idx.id1(j), offsets[j] + fc);
                    class_key(key).expect("cocone cell premorphism")
                })
                .collect();
            NatTrans { comp }
        })
        .collect();
    let cocone = CatCone { vertex: cat.clone(), legs, cells };
    let cone_report = check_cat_cone(d, &cocone);
    if !cone_report.is_ok() {
        return Err(KanError::InvalidCone(cone_report.to_string().trim().replace('\n', "; ")));
    }
    Ok(ColimitPresentation {
        diagram: d.clone(),
        cat,
        objects,
        premorphisms,
        classes,
        cocone,
        cone_report,
        offsets,
        class_of,
        lookup,
    })
}
