use super::{HomInto, ProError, ProHom, ProObject, Span};

/// `(r, φ)` with `r: X_i -> Y_j` and `φ: r π_i ⇒ π_j f` invertible, a
/// morphism of `L_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Representative {
    pub i: usize,
    pub j: usize,
    pub r: usize,
    pub phi: usize,
}

/// `(θ, r, φ, s, ψ)` with `θ: r ⇒ s` a cell of `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Representative2 {
    pub theta: usize,
    pub r: Representative,
    pub s: Representative,
}

fn shape(s: &str) -> ProError {
    ProError::ShapeMismatch(s.to_string())
}

/// Whether `(r, φ)` represents the element `f` of `h`.
pub fn check_represents(h: &ProHom, rep: &Representative, f: usize) -> Result<bool, ProError> {
    let l = h.inner.get(rep.j).ok_or_else(|| shape("j is not an index object"))?;
    if f >= h.cat().object_count() || rep.phi >= l.cat().morphism_count() {
        return Err(shape("unknown element"));
    }
    let Some(src) = l.object(rep.i, rep.r) else {
        return Err(shape("r does not go from X_i to Y_j"));
    };
    let cat = l.cat();
    Ok(cat.src(rep.phi) == src && cat.tgt(rep.phi) == h.component(f, rep.j) && cat.is_iso(rep.phi))
}

/// Whether `(θ, r, φ, s, ψ)` represents the 2-cell `α`:
/// `ψ ∘ θ π_i = π_j α ∘ φ`.
pub fn check_represents_2cell(h: &ProHom, rep: &Representative2, alpha: usize) -> Result<bool, ProError> {
    let (r, s) = (&rep.r, &rep.s);
    if r.i != s.i || r.j != s.j {
        return Err(shape("representatives at different indices"));
    }
    if alpha >= h.cat().morphism_count() {
        return Err(shape("unknown 2-cell"));
    }
    let (f, g) = (h.cat().src(alpha), h.cat().tgt(alpha));
    if !check_represents(h, r, f)? || !check_represents(h, s, g)? {
        return Ok(false);
    }
    let c = &h.source.target;
    if rep.theta >= c.cell_count() || c.csrc(rep.theta) != r.r || c.ctgt(rep.theta) != s.r {
        return Err(shape("θ is not a cell r ⇒ s"));
    }
    let l = &h.inner[r.j];
    let lam = l.lambda(r.i, rep.theta).ok_or_else(|| shape("θ π_i"))?;
    let lhs = l.cat().compose(s.phi, lam);
    let rhs = l.cat().compose(h.component_morphism(alpha, r.j), r.phi);
    Ok(lhs.is_some() && lhs == rhs)
}

/// `(r, id)` read off the component `π_j f = r π_i`.
pub fn find_representative(h: &ProHom, f: usize, j: usize) -> Representative {
    let x = h.component(f, j);
    let (i, r) = h.inner[j].decode(x);
    Representative { i, j, r, phi: h.inner[j].cat().id(x) }
}

/// A representative of `α` at `j`, with invertible `θ` whenever the class
/// of `π_j α` has a member with invertible cell.
pub fn find_representative_2cell(h: &ProHom, alpha: usize, j: usize) -> Result<Representative2, ProError> {
    let (c, l) = (&h.source.target, &h.inner[j]);
    let m = h.component_morphism(alpha, j);
    let (_, r0) = l.decode(l.cat().src(m));
    let (_, s0) = l.decode(l.cat().tgt(m));
    let members = l.members(m);
    let sp = members.iter().copied().find(|s| c.is_invertible(s.theta)).unwrap_or(members[0]);
    // φ = r π_u and ψ = s π_v
    let side = |base: usize, u: usize| -> Option<Representative> {
        let phi = l.r_pi(base, u)?;
        Some(Representative { i: sp.k, j, r: c.comp1(base, h.source.arrow[u])?, phi })
    };
    let r = side(r0, sp.u).ok_or_else(|| ProError::NotFound("r π_u".into()))?;
    let s = side(s0, sp.v).ok_or_else(|| ProError::NotFound("s π_v".into()))?;
    Ok(Representative2 { theta: sp.theta, r, s })
}

/// `(k, u, v, θ)` with `θ: r X_u ⇒ s X_v` and
/// `α ∘ r π_u = s π_v ∘ θ π_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Straightening {
    pub k: usize,
    pub u: usize,
    pub v: usize,
    pub theta: usize,
}

/// The straightening equation for a candidate.
pub fn straightening_holds(l: &HomInto, alpha: usize, s: &Straightening) -> bool {
    let cat = l.cat();
    let (_, r) = l.decode(cat.src(alpha));
    let (_, t) = l.decode(cat.tgt(alpha));
    let (Some(rpu), Some(spv), Some(lam)) = (l.r_pi(r, s.u), l.r_pi(t, s.v), l.lambda(s.k, s.theta)) else {
        return false;
    };
    let lhs = cat.compose(alpha, rpu);
    lhs.is_some() && lhs == cat.compose(spv, lam)
}

/// Straightens a morphism `α: r π_i ⇒ s π_i′` of `Pro(X, c(D))`. Prefers
/// `u = v` when `i = i′` and an invertible `θ` when `α` is invertible.
pub fn straighten(x: &ProObject, l: &HomInto, alpha: usize) -> Result<Straightening, ProError> {
    let (c, k) = (&x.target, &x.index);
    if alpha >= l.cat().morphism_count() {
        return Err(shape("unknown morphism"));
    }
    let (i, _) = l.decode(l.cat().src(alpha));
    let (i2, _) = l.decode(l.cat().tgt(alpha));
    let inv = l.cat().is_iso(alpha);
    let score = |s: &Span| {
        let ids = s.u == k.id1(i) && s.v == k.id1(i2);
        (!ids, i == i2 && s.u != s.v, inv && !c.is_invertible(s.theta))
    };
    let mut members = l.members(alpha);
    members.sort_by_key(score);
    for s in members {
        if inv && !c.is_invertible(s.theta) {
            break;
        }
        let st = Straightening { k: s.k, u: s.u, v: s.v, theta: s.theta };
        if straightening_holds(l, alpha, &st) {
            return Ok(st);
        }
    }
    Err(ProError::NotFound("no member of the class satisfies the equation".into()))
}

/// `u: i -> i′` with `θ_l X_u = θ′_l X_u` for every pair, given
/// `θ_l π_i = θ′_l π_i`. Identities are tried first.
pub fn equalize(x: &ProObject, l: &HomInto, i: usize, pairs: &[(usize, usize)]) -> Result<usize, ProError> {
    let (c, k) = (&x.target, &x.index);
    for (n, &(t, t2)) in pairs.iter().enumerate() {
        if t >= c.cell_count() || t2 >= c.cell_count() || c.csrc(t) != c.csrc(t2) || c.ctgt(t) != c.ctgt(t2) {
            return Err(shape("pairs must be parallel cells"));
        }
        let (a, b) = (l.lambda(i, t), l.lambda(i, t2));
        if a.is_none() || a != b {
            return Err(ProError::HypothesisFails(format!("pair {n}: θ π_i ≠ θ′ π_i")));
        }
    }
    let id = k.id1(i);
    let arrows = std::iter::once(id).chain(k.objects().flat_map(|o| k.hom1(i, o).iter().copied()).filter(|&u| u != id));
    for u in arrows {
        let xu = x.arrow[u];
        if pairs.iter().all(|&(t, t2)| c.rwhisker(t, xu) == c.rwhisker(t2, xu)) {
            return Ok(u);
        }
    }
    Err(ProError::NotFound("no 1-cell equalizes the pairs".into()))
}
