use super::{HomInto, ProError, ProObject, Span};
use crate::core::{equivalence_of_categories, EquivalenceDecision, FinCat, FinFunctor, NatTrans, TwoCat};
use crate::kan::{pseudo_limit_cat, CatDiagram, DescentObject, LimitPresentation, Variance};
use crate::maps::PseudoFunctorOf;

/// `Pro(C)(X, Y)` as the pseudo-limit over `J` of `L_j = coLim_i C(X_i, Y_j)`.
#[derive(Clone, Debug)]
pub struct ProHom {
    pub source: ProObject,
    pub target: ProObject,
    /// `L_j`, one per object of `Y`'s index.
    pub inner: Vec<HomInto>,
    pub outer: CatDiagram,
    pub limit: LimitPresentation,
}

impl ProHom {
    pub fn cat(&self) -> &FinCat {
        &self.limit.cat
    }

    /// The object `π_j f` of `L_j`.
    pub fn component(&self, f: usize, j: usize) -> usize {
        self.limit.objects[f].x[j]
    }

    /// `π_a f: Y_a π_j′ f ⇒ π_j f` for `a: j -> j′`, a morphism of `L_j`.
    pub fn structure(&self, f: usize, a: usize) -> usize {
        self.limit.objects[f].iso[a]
    }

    /// The morphism `π_j α` of `L_j`.
    pub fn component_morphism(&self, m: usize, j: usize) -> usize {
        self.limit.morphisms[m][j]
    }

    /// `(i, r)` per `j` with `π_j f ≅ r π_i` presented by the colimit object.
    pub fn decode_object(&self, f: usize) -> Vec<(usize, usize)> {
        (0..self.inner.len()).map(|j| self.inner[j].decode(self.component(f, j))).collect()
    }

    /// The canonical premorphism of each component of `α`.
    pub fn decode_morphism(&self, m: usize) -> Vec<Span> {
        (0..self.inner.len()).map(|j| self.inner[j].decode_morphism(self.component_morphism(m, j))).collect()
    }

    pub fn find_object(&self, x: &DescentObject) -> Option<usize> {
        self.limit.find_object(x)
    }

    /// The identity of `X` when `X = Y`.
    pub fn identity(&self) -> Option<usize> {
        if self.source != self.target {
            return None;
        }
        let (c, k) = (&self.source.target, &self.source.index);
        let x = k.objects().map(|i| self.inner[i].object(i, c.id1(self.source.obj[i]))).collect::<Option<Vec<_>>>()?;
        let iso = k
            .arrows()
            .map(|u| self.inner[k.src(u)].r_pi(c.id1(self.source.obj[k.src(u)]), u))
            .collect::<Option<Vec<_>>>()?;
        self.find_object(&DescentObject { x, iso })
    }
}

fn invalid(s: &str) -> ProError {
    ProError::Invalid(s.to_string())
}

pub fn pro_hom(x: &ProObject, y: &ProObject) -> Result<ProHom, ProError> {
    if x.target != y.target {
        return Err(ProError::ShapeMismatch("pro-objects live in different 2-categories".into()));
    }
    x.validate()?;
    y.validate()?;
    let (c, jj) = (&y.target, &y.index);
    let inner: Vec<HomInto> = jj.objects().map(|j| x.hom_into(y.obj[j])).collect::<Result<_, _>>()?;
    // L_b: L_j′ -> L_j is postcomposition with Y_b
    let functors = jj
        .arrows()
        .map(|b| inner[jj.tgt(b)].push_functor(y.arrow[b], &inner[jj.src(b)]).ok_or_else(|| invalid("postcomposition")))
        .collect::<Result<Vec<_>, _>>()?;
    let nats = jj
        .cells()
        .map(|beta| {
            let (j, j2) = (jj.src(jj.csrc(beta)), jj.tgt(jj.csrc(beta)));
            let from = &inner[j2];
            from.cat()
                .objects()
                .map(|o| from.whisker_cell(y.cell[beta], &inner[j], o))
                .collect::<Option<Vec<_>>>()
                .map(|comp| NatTrans { comp })
                .ok_or_else(|| invalid("whiskering"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let _ = c;
    let outer = CatDiagram {
        index: jj.clone(),
        variance: Variance::Contravariant,
        cats: inner.iter().map(|h| h.cat().clone()).collect(),
        functors,
        nats,
    };
    let limit = pseudo_limit_cat(&outer)?;
    Ok(ProHom { source: x.clone(), target: y.clone(), inner, outer, limit })
}

/// Precomposition with `g: Z -> X` as a functor
/// `Pro(X, c(D)) -> Pro(Z, c(D))`, where `gh = Pro(Z, X)`.
pub fn precompose_functor(gh: &ProHom, g: usize, from: &HomInto, to: &HomInto) -> Option<FinFunctor> {
    let (x, c) = (&gh.target, &gh.target.target);
    let k = &x.index;
    let comp = |kk: usize| gh.component(g, kk);
    let obj: Vec<usize> = from
        .cat()
        .objects()
        .map(|o| {
            let (kk, s) = from.decode(o);
            gh.inner[kk].push_object(s, to, comp(kk))
        })
        .collect::<Option<_>>()?;
    // [u, θ, v] = (s′ π_v) (θ π_m) (s π_u)^{-1}, each factor precomposed with g
    let image = |m: usize| -> Option<usize> {
        let sp = from.decode_morphism(m);
        let (kk, s) = from.decode(from.cat().src(m));
        let (kk2, s2) = from.decode(from.cat().tgt(m));
        let (u, v, mm) = (sp.u, sp.v, sp.k);
        debug_assert_eq!((k.src(u), k.src(v)), (kk, kk2));
        let gu = gh.inner[kk].push_morphism(s, to, gh.structure(g, u))?;
        let gv = gh.inner[kk2].push_morphism(s2, to, gh.structure(g, v))?;
        let gm = comp(mm);
        let (l, t) = gh.inner[mm].decode(gm);
        let mid = to.lambda(l, c.rwhisker(sp.theta, t)?)?;
        to.cat().compose_path(&[to.cat().inverse(gu)?, mid, gv])
    };
    let mor = from.cat().morphisms().map(image).collect::<Option<_>>()?;
    Some(FinFunctor { obj, mor })
}

/// `f g` for `g ∈ Pro(Z, X)` and `f ∈ Pro(X, Y)`, found in `Pro(Z, Y)`.
pub fn compose_elements(fh: &ProHom, f: usize, gh: &ProHom, g: usize, out: &ProHom) -> Option<usize> {
    let jj = &fh.target.index;
    let ps = jj
        .objects()
        .map(|j| precompose_functor(gh, g, &fh.inner[j], &out.inner[j]))
        .collect::<Option<Vec<_>>>()?;
    let x = jj.objects().map(|j| ps[j].obj[fh.component(f, j)]).collect();
    let iso = jj.arrows().map(|a| ps[jj.src(a)].mor[fh.structure(f, a)]).collect();
    out.find_object(&DescentObject { x, iso })
}

/// The functor `Pro(X_F, Y) -> Pro(X, Y)` induced by
/// `[u, θ, v] ↦ [F u, θ, F v]`, with its equivalence decision.
pub fn hom_comparison(
    xf: &ProHom,
    x: &ProHom,
    f: &PseudoFunctorOf<TwoCat, TwoCat>,
) -> Result<(FinFunctor, EquivalenceDecision), ProError> {
    let jj = &x.target.index;
    if xf.target != x.target {
        return Err(ProError::ShapeMismatch("different codomains".into()));
    }
    let miss = || ProError::NotFound("comparison image".into());
    let mut hs = Vec::new();
    for j in jj.objects() {
        let (a, b) = (&xf.inner[j], &x.inner[j]);
        let obj = a
            .cat()
            .objects()
            .map(|o| {
                let (i, r) = a.decode(o);
                b.object(f.obj[&i], r)
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(miss)?;
        let mut mor = Vec::new();
        for m in a.cat().morphisms() {
            let imgs: Vec<Option<usize>> = a
                .members(m)
                .into_iter()
                .map(|s| {
                    let sp = Span { k: f.obj[&s.k], u: f.arrow[&s.u], theta: s.theta, v: f.arrow[&s.v] };
                    b.class(obj[a.cat().src(m)], sp, obj[a.cat().tgt(m)])
                })
                .collect();
            if imgs.iter().any(|i| i.is_none() || *i != imgs[0]) {
                return Err(ProError::Kan(crate::kan::KanError::CompositionNotWellDefined("comparison is not constant on a class".into())));
            }
            mor.push(imgs[0].expect("checked"));
        }
        hs.push(FinFunctor { obj, mor });
    }
    let obj = xf
        .limit
        .objects
        .iter()
        .map(|d| {
            let x2 = DescentObject {
                x: jj.objects().map(|j| hs[j].obj[d.x[j]]).collect(),
                iso: jj.arrows().map(|a| hs[jj.src(a)].mor[d.iso[a]]).collect(),
            };
            x.find_object(&x2)
        })
        .collect::<Option<Vec<_>>>()
        .ok_or_else(miss)?;
    let mor = xf
        .cat()
        .morphisms()
        .map(|m| {
            let g: Vec<usize> = jj.objects().map(|j| hs[j].mor[xf.limit.morphisms[m][j]]).collect();
            x.limit.find_morphism(obj[xf.cat().src(m)], obj[xf.cat().tgt(m)], &g)
        })
        .collect::<Option<Vec<_>>>()
        .ok_or_else(miss)?;
    let h = FinFunctor { obj, mor };
    let decision = equivalence_of_categories(xf.cat(), x.cat(), &h);
    Ok((h, decision))
}
