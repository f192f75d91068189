use std::collections::HashMap;

use super::{check_cat_cone, CatCone, CatDiagram, KanError, Variance};
use crate::core::{validate_fincat, FinCat, FinFunctor, Mor, NatTrans, Report};
use crate::maps::ConeLaw;

/// Objects `x_i` of `F i` with isomorphisms `x_u: F u (x_j) -> x_i` for
/// `u: i -> j`, satisfying `x_{id} = id`, `x_{vu} = x_u F u (x_v)` and
/// `x_u = x_{u′} F(α)_{x_j}` for `α: u ⇒ u′`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentObject {
    pub x: Vec<usize>,
    pub iso: Vec<usize>,
}

/// The pseudo-limit category with its projection cone `π`.
#[derive(Clone, Debug)]
pub struct LimitPresentation {
    pub diagram: CatDiagram,
    pub cat: FinCat,
    pub objects: Vec<DescentObject>,
    /// Component families `g_i`, one per morphism of `cat`.
    pub morphisms: Vec<Vec<usize>>,
    /// Legs `π_i` and cells `π_u: F u π_j ⇒ π_i`.
    pub cone: CatCone,
    pub cone_report: Report<ConeLaw>,
}

impl LimitPresentation {
    pub fn find_object(&self, x: &DescentObject) -> Option<usize> {
        self.objects.iter().position(|y| y == x)
    }

    /// The morphism with components `g` between the given objects.
    pub fn find_morphism(&self, a: usize, b: usize, g: &[usize]) -> Option<usize> {
        self.cat.hom(a, b).iter().copied().find(|&m| self.morphisms[m] == g)
    }
}

struct Search<'a> {
    d: &'a CatDiagram,
    order: Vec<usize>,
    out: Vec<DescentObject>,
}

impl Search<'_> {
    /// Whether every descent equation among assigned isos holds.
    fn consistent(&self, x: &[usize], iso: &[Option<usize>], last: usize) -> bool {
        let k = &self.d.index;
        for u in k.arrows() {
            let Some(xu) = iso[u] else { continue };
            for &v in &self.order {
                if k.tgt(u) != k.src(v) {
                    continue;
                }
                let vu = k.comp1(v, u).expect("composable");
                let (Some(xv), Some(xvu)) = (iso[v], iso[vu]) else { continue };
                if ![u, v, vu].contains(&last) {
                    continue;
                }
                let fi = &self.d.cats[k.src(u)];
                if fi.compose(xu, self.d.functors[u].mor[xv]) != Some(xvu) {
                    return false;
                }
            }
        }
        for c in k.cells() {
            let (u, u2) = (k.csrc(c), k.ctgt(c));
            if u != last && u2 != last {
                continue;
            }
            let (Some(xu), Some(xu2)) = (iso[u], iso[u2]) else { continue };
            let fi = &self.d.cats[k.src(u)];
            if fi.compose(xu2, self.d.nats[c].comp[x[k.tgt(u)]]) != Some(xu) {
                return false;
            }
        }
        true
    }

    fn isos(&mut self, x: &[usize], iso: &mut Vec<Option<usize>>, pos: usize) {
        let k = &self.d.index;
        if pos == self.order.len() {
            let iso = iso.iter().map(|m| m.expect("all assigned")).collect();
            self.out.push(DescentObject { x: x.to_vec(), iso });
            return;
        }
        let u = self.order[pos];
        let (i, j) = (k.src(u), k.tgt(u));
        let fi = &self.d.cats[i];
        let cands: Vec<usize> = if k.id1(i) == u {
            vec![fi.id(x[i])]
        } else {
            let a = self.d.functors[u].obj[x[j]];
            fi.hom(a, x[i]).iter().copied().filter(|&m| fi.is_iso(m)).collect()
        };
        for m in cands {
            iso[u] = Some(m);
            if self.consistent(x, iso, u) {
                self.isos(x, iso, pos + 1);
            }
        }
        iso[u] = None;
    }

    fn objects(&mut self, x: &mut Vec<usize>) {
        let n = self.d.index.object_count();
        if x.len() == n {
            let mut iso = vec![None; self.d.index.arrow_count()];
            self.isos(x, &mut iso, 0);
            return;
        }
        for c in self.d.cats[x.len()].objects() {
            x.push(c);
            self.objects(x);
            x.pop();
        }
    }
}

fn families(d: &CatDiagram, a: &DescentObject, b: &DescentObject) -> Vec<Vec<usize>> {
    let k = &d.index;
    let n = k.object_count();
    let mut out = Vec::new();
    let mut g = Vec::with_capacity(n);
    fn go(d: &CatDiagram, a: &DescentObject, b: &DescentObject, g: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let k = &d.index;
        let i = g.len();
        if i == k.object_count() {
            out.push(g.clone());
            return;
        }
        for &m in d.cats[i].hom(a.x[i], b.x[i]) {
            g.push(m);
            // g_s x_u = y_u F u (g_t) for every u between assigned objects
            let ok = k.arrows().all(|u| {
                let (s, t) = (k.src(u), k.tgt(u));
                if s > i || t > i {
                    return true;
                }
                let fs = &d.cats[s];
                fs.compose(g[s], a.iso[u]) == fs.compose(b.iso[u], d.functors[u].mor[g[t]])
            });
            if ok {
                go(d, a, b, g, out);
            }
            g.pop();
        }
    }
    go(d, a, b, &mut g, &mut out);
    out
}

/// The pseudo-limit of a contravariant diagram: the category of descent
/// objects, with projections `π_i(x) = x_i` and `(π_u)_x = x_u`.
pub fn pseudo_limit_cat(d: &CatDiagram) -> Result<LimitPresentation, KanError> {
    if d.variance != Variance::Contravariant {
        return Err(KanError::InvalidDiagram("limits take a contravariant diagram".into()));
    }
    d.validate()?;
    let k = &d.index;
    // identities first so that each new iso is constrained as early as possible
    let ids: Vec<usize> = k.objects().map(|o| k.id1(o)).collect();
    let order: Vec<usize> = ids.iter().copied().chain(k.arrows().filter(|u| !ids.contains(u))).collect();
    let mut search = Search { d, order, out: Vec::new() };
    search.objects(&mut Vec::new());
    let objects = search.out;

    let mut morphisms = Vec::new();
    let mut mors = Vec::new();
    let mut index: HashMap<(usize, usize, Vec<usize>), usize> = HashMap::new();
    for (a, x) in objects.iter().enumerate() {
        for (b, y) in objects.iter().enumerate() {
            for g in families(d, x, y) {
                let name = format!(
                    "<{}>",
                    g.iter().enumerate().map(|(i, &m)| d.cats[i].morphism_name(m).to_string()).collect::<Vec<_>>().join(",")
                );
                index.insert((a, b, g.clone()), morphisms.len());
                mors.push(Mor { name, src: a, tgt: b });
                morphisms.push(g);
            }
        }
    }
    let identity: Vec<usize> = objects
        .iter()
        .enumerate()
        .map(|(a, x)| index[&(a, a, x.x.iter().enumerate().map(|(i, &c)| d.cats[i].id(c)).collect())])
        .collect();
    let mut comp = Vec::new();
    for (f, mf) in mors.iter().enumerate() {
        for (g, mg) in mors.iter().enumerate() {
            if mf.tgt != mg.src {
                continue;
            }
            let gf: Vec<usize> = (0..k.object_count())
                .map(|i| d.cats[i].compose(morphisms[g][i], morphisms[f][i]).expect("componentwise composite"))
                .collect();
            let h = *index.get(&(mf.src, mg.tgt, gf)).ok_or_else(|| KanError::NotACategory("composite family is not a morphism".into()))?;
            comp.push(((g, f), h));
        }
    }
    let mut names: Vec<String> = objects
        .iter()
        .map(|x| format!("<{}>", x.x.iter().enumerate().map(|(i, &c)| d.cats[i].object_name(c).to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    let mut seen: HashMap<String, usize> = HashMap::new();
    for n in names.iter_mut() {
        let c = seen.entry(n.clone()).or_insert(0);
        *c += 1;
        if *c > 1 {
            n.push_str(&format!("#{}", *c - 1));
        }
    }
    let cat = FinCat::from_parts(names, mors, identity, comp).map_err(|e| KanError::NotACategory(e.to_string()))?;
    let laws = validate_fincat(&cat);
    if !laws.is_ok() {
        return Err(KanError::NotACategory(laws.to_string().trim().replace('\n', "; ")));
    }

    let legs = k
        .objects()
        .map(|i| FinFunctor { obj: objects.iter().map(|x| x.x[i]).collect(), mor: morphisms.iter().map(|g| g[i]).collect() })
        .collect();
    let cells = k.arrows().map(|u| NatTrans { comp: objects.iter().map(|x| x.iso[u]).collect() }).collect();
    let cone = CatCone { vertex: cat.clone(), legs, cells };
    let cone_report = check_cat_cone(d, &cone);
    if !cone_report.is_ok() {
        return Err(KanError::InvalidCone(cone_report.to_string().trim().replace('\n', "; ")));
    }
    Ok(LimitPresentation { diagram: d.clone(), cat, objects, morphisms, cone, cone_report })
}
