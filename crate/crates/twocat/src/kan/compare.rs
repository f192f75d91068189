use super::{check_cat_cone, CatCone, CatDiagram, ColimitPresentation, KanError, LimitPresentation, Variance};
use crate::core::{equivalence_of_categories, EquivalenceDecision, FinFunctor, TwoCat};
use crate::maps::PseudoFunctorOf;
use crate::shape::{check_2cofinal, CofinalReportOf};

/// The canonical functor `m` out of a colimit or into a limit, with the
/// number of structure elements certified to be determined by the cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mediator {
    pub functor: FinFunctor,
    /// Objects plus morphisms whose image is forced by the legs and cells.
    pub determined: usize,
}

/// A presentation to factor a test cone through.
#[derive(Clone, Copy, Debug)]
pub enum Presentation<'a> {
    Colimit(&'a ColimitPresentation),
    Limit(&'a LimitPresentation),
}

pub fn factor_through(p: Presentation<'_>, cone: &CatCone) -> Result<Mediator, KanError> {
    match p {
        Presentation::Colimit(c) => factor_colimit(c, cone),
        Presentation::Limit(l) => factor_limit(l, cone),
    }
}

fn valid_cone(d: &CatDiagram, cone: &CatCone) -> Result<(), KanError> {
    let r = check_cat_cone(d, cone);
    if r.is_ok() {
        Ok(())
    } else {
        Err(KanError::InvalidCone(r.to_string().trim().replace('\n', "; ")))
    }
}

fn factor_limit(l: &LimitPresentation, cone: &CatCone) -> Result<Mediator, KanError> {
    let d = &l.diagram;
    valid_cone(d, cone)?;
    let k = &d.index;
    let a = &cone.vertex;
    let mut obj = Vec::new();
    for x in a.objects() {
        let want = super::DescentObject {
            x: k.objects().map(|i| cone.legs[i].obj[x]).collect(),
            iso: k.arrows().map(|u| cone.cells[u].comp[x]).collect(),
        };
        let hits: Vec<usize> = (0..l.objects.len()).filter(|&y| l.objects[y] == want).collect();
        match hits[..] {
            [y] => obj.push(y),
            [] => return Err(KanError::NoMediator(format!("no descent object over {}", a.object_name(x)))),
            _ => return Err(KanError::NoMediator(format!("two descent objects over {}", a.object_name(x)))),
        }
    }
    let mut mor = Vec::new();
    for h in a.morphisms() {
        let g: Vec<usize> = k.objects().map(|i| cone.legs[i].mor[h]).collect();
        let (s, t) = (obj[a.src(h)], obj[a.tgt(h)]);
        let hits: Vec<usize> = l.cat.hom(s, t).iter().copied().filter(|&m| l.morphisms[m] == g).collect();
        match hits[..] {
            [m] => mor.push(m),
            _ => return Err(KanError::NoMediator(format!("{} has {} lifts", a.morphism_name(h), hits.len()))),
        }
    }
    let functor = FinFunctor { obj, mor };
    functor.check(a, &l.cat).map_err(|e| KanError::NoMediator(e.to_string()))?;
    Ok(Mediator { functor, determined: a.object_count() + a.morphism_count() })
}

fn factor_colimit(c: &ColimitPresentation, cone: &CatCone) -> Result<Mediator, KanError> {
    let d = &c.diagram;
    valid_cone(d, cone)?;
    let e = &cone.vertex;
    let no = |s: String| KanError::NoMediator(s);
    let obj: Vec<usize> = c.objects.iter().map(|&(x, i)| cone.legs[i].obj[x]).collect();
    // m[u, r, v] = (θ_v)_D^{-1} θ_k(r) (θ_u)_C
    let image = |p: &super::Premorphism| -> Option<usize> {
        let ((x, _), (y, _)) = (c.objects[p.src], c.objects[p.tgt]);
        let tv = e.inverse(cone.cells[p.v].comp[y])?;
        e.compose_path(&[cone.cells[p.u].comp[x], cone.legs[p.k].mor[p.r], tv])
    };
    let mut mor = Vec::new();
    for (m, cl) in c.classes.iter().enumerate() {
        let first = image(&c.premorphisms[cl[0]]).ok_or_else(|| no(format!("{} has no image", c.cat.morphism_name(m))))?;
        if let Some(&bad) = cl[1..].iter().find(|&&p| image(&c.premorphisms[p]) != Some(first)) {
            return Err(no(format!(
                "{} and {} have different images",
                c.describe(&c.premorphisms[cl[0]]),
                c.describe(&c.premorphisms[bad])
            )));
        }
        mor.push(first);
    }
    let functor = FinFunctor { obj, mor };
    functor.check(&c.cat, e).map_err(|e| no(e.to_string()))?;
    let k = &d.index;
    for i in k.objects() {
        if c.cocone.legs[i].then(&functor) != cone.legs[i] {
            return Err(no(format!("leg at {} differs", k.object_name(i))));
        }
    }
    for u in k.arrows() {
        let image: Vec<usize> = c.cocone.cells[u].comp.iter().map(|&m| functor.mor[m]).collect();
        if image != cone.cells[u].comp {
            return Err(no(format!("cell at {} differs", k.arrow_name(u))));
        }
    }
    // every class is λ_v^{-1} λ_k(r) λ_u, so m is forced by the cocone
    let l = &c.cat;
    let lam = &c.cocone;
    for (m, cl) in c.classes.iter().enumerate() {
        let p = c.premorphisms[cl[0]];
        let ((x, _), (y, _)) = (c.objects[p.src], c.objects[p.tgt]);
        let forced = l
            .inverse(lam.cells[p.v].comp[y])
            .and_then(|tv| l.compose_path(&[lam.cells[p.u].comp[x], lam.legs[p.k].mor[p.r], tv]));
        if forced != Some(m) {
            return Err(no(format!("{} is not generated by the cocone", l.morphism_name(m))));
        }
    }
    Ok(Mediator { functor, determined: l.object_count() + l.morphism_count() })
}

/// `h: L(G F) -> L(G)` with `h(x, i) = (x, F i)` and `h[u, r, v] = [F u, r, F v]`.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub source: ColimitPresentation,
    pub target: ColimitPresentation,
    pub functor: FinFunctor,
    pub decision: EquivalenceDecision,
    pub cofinal: CofinalReportOf<TwoCat, TwoCat>,
}

pub fn comparison_functor(
    i: &TwoCat,
    j: &TwoCat,
    f: &PseudoFunctorOf<TwoCat, TwoCat>,
    g: &CatDiagram,
) -> Result<Comparison, KanError> {
    if g.variance != Variance::Covariant || &g.index != j {
        return Err(KanError::InvalidDiagram("the diagram must be covariant over the target index".into()));
    }
    let cofinal = check_2cofinal(i, j, f);
    if !cofinal.is_cofinal() {
        return Err(KanError::NotCofinal(cofinal.to_string().lines().next().unwrap_or_default().to_string()));
    }
    let gf = g.precompose(i, f)?;
    let source = super::ll_colimit(&gf)?;
    let target = super::ll_colimit(g)?;
    let obj: Vec<usize> = source.objects.iter().map(|&(x, o)| target.object(x, f.obj[&o])).collect();
    let lift = |p: &super::Premorphism| {
        target.class(obj[p.src], f.arrow[&p.u], p.r, f.arrow[&p.v], obj[p.tgt])
    };
    let mut mor = Vec::new();
    for cl in &source.classes {
        let m = lift(&source.premorphisms[cl[0]]).ok_or_else(|| KanError::NoMediator("premorphism image missing".into()))?;
        if cl[1..].iter().any(|&p| lift(&source.premorphisms[p]) != Some(m)) {
            return Err(KanError::CompositionNotWellDefined("h is not constant on a class".into()));
        }
        mor.push(m);
    }
    let functor = FinFunctor { obj, mor };
    let decision = equivalence_of_categories(&source.cat, &target.cat, &functor);
    Ok(Comparison { source, target, functor, decision, cofinal })
}
