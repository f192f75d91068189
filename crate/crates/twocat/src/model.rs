//! Lifting, retracts and the axioms of a closed 2-model structure, checked
//! by exhaustive search over a finite 2-category.
//!
//! All equations are evaluated through [`crate::pasting`]. Squares commute
//! up to an invertible `γ: p a ⇒ b i`; a filler `(f, λ, ρ)` has
//! `λ: a ⇒ f i`, `ρ: p f ⇒ b` and `ρ i ∘ p λ = γ`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::core::traits::{Enumerable, TwoCategory};
use crate::pasting::{equal, evaluate, parse_elevator, CellEnv, ElevatorExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),
    #[error("NoFiller: {0}")]
    NoFiller(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LiftingSquare<A = usize, C = usize> {
    pub i: A,
    pub p: A,
    pub a: A,
    pub b: A,
    pub gamma: C,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filler<A = usize, C = usize> {
    pub f: A,
    pub lambda: C,
    pub rho: C,
}

/// `f` a retract of `g`: `θ: f -> g`, `η: g -> f` and `μ: η θ ⇒ id_f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RetractData<A = usize, C = usize> {
    pub theta0: A,
    pub theta1: A,
    /// `g θ0 ⇒ θ1 f`.
    pub theta_m: C,
    pub eta0: A,
    pub eta1: A,
    /// `f η0 ⇒ η1 g`.
    pub eta_m: C,
    /// `η0 θ0 ⇒ id`.
    pub mu0: C,
    /// `η1 θ1 ⇒ id`.
    pub mu1: C,
}

fn shape(s: impl Into<String>) -> ModelError {
    ModelError::ShapeMismatch(s.into())
}

fn expr(s: &str) -> ElevatorExpr {
    parse_elevator(s).expect("fixed expression")
}

fn env<'a, K: TwoCategory>(k: &'a K, arrows: &[(&str, &K::Arrow)], cells: &[(&str, &K::Cell)]) -> CellEnv<'a, K> {
    let mut e = CellEnv::new(k);
    for (n, a) in arrows {
        e.bind_arrow(n, (*a).clone());
    }
    for (n, c) in cells {
        e.bind_cell(n, (*c).clone());
    }
    e
}

fn cell_is<K: TwoCategory>(k: &K, c: &K::Cell, src: Option<K::Arrow>, tgt: Option<K::Arrow>) -> bool {
    src.is_some_and(|s| k.cell_src(c) == s) && tgt.is_some_and(|t| k.cell_tgt(c) == t)
}

pub fn check_square<K: TwoCategory>(k: &K, sq: &LiftingSquare<K::Arrow, K::Cell>) -> Result<(), ModelError> {
    let (i, p, a, b) = (&sq.i, &sq.p, &sq.a, &sq.b);
    if k.arrow_src(a) != k.arrow_src(i) || k.arrow_tgt(a) != k.arrow_src(p) || k.arrow_src(b) != k.arrow_tgt(i) || k.arrow_tgt(b) != k.arrow_tgt(p) {
        return Err(shape("the four sides do not form a square"));
    }
    if !cell_is(k, &sq.gamma, k.compose(p, a), k.compose(b, i)) {
        return Err(shape("γ is not a cell p a ⇒ b i"));
    }
    if !k.is_invertible(&sq.gamma) {
        return Err(shape("γ is not invertible"));
    }
    Ok(())
}

/// Whether `(f, λ, ρ)` fills the square. The square must be valid.
pub fn check_filler<K: TwoCategory>(k: &K, sq: &LiftingSquare<K::Arrow, K::Cell>, fl: &Filler<K::Arrow, K::Cell>) -> bool {
    let f = &fl.f;
    if k.arrow_src(f) != k.arrow_tgt(&sq.i) || k.arrow_tgt(f) != k.arrow_src(&sq.p) {
        return false;
    }
    if !cell_is(k, &fl.lambda, Some(sq.a.clone()), k.compose(f, &sq.i))
        || !cell_is(k, &fl.rho, k.compose(&sq.p, f), Some(sq.b.clone()))
        || !k.is_invertible(&fl.lambda)
        || !k.is_invertible(&fl.rho)
    {
        return false;
    }
    let e = env(k, &[("p", &sq.p), ("i", &sq.i)], &[("lambda", &fl.lambda), ("rho", &fl.rho), ("gamma", &sq.gamma)]);
    equal(&expr("(id(p) . lambda) v (rho . id(i))"), &expr("gamma"), &e).unwrap_or(false)
}

/// The first filler in lexicographic order of `(f, λ, ρ)`; `None` means
/// there is none.
pub fn solve_lifting<K: Enumerable>(k: &K, sq: &LiftingSquare<K::Arrow, K::Cell>) -> Result<Option<Filler<K::Arrow, K::Cell>>, ModelError> {
    check_square(k, sq)?;
    let mut fs = k.arrows_between(&k.arrow_tgt(&sq.i), &k.arrow_src(&sq.p));
    fs.sort();
    for f in fs {
        let (Some(fi), Some(pf)) = (k.compose(&f, &sq.i), k.compose(&sq.p, &f)) else { continue };
        let mut lambdas = k.cells_between(&sq.a, &fi);
        lambdas.sort();
        let mut rhos = k.cells_between(&pf, &sq.b);
        rhos.sort();
        for lambda in lambdas.iter().filter(|l| k.is_invertible(l)) {
            for rho in rhos.iter().filter(|r| k.is_invertible(r)) {
                let fl = Filler { f: f.clone(), lambda: lambda.clone(), rho: rho.clone() };
                if check_filler(k, sq, &fl) {
                    return Ok(Some(fl));
                }
            }
        }
    }
    Ok(None)
}

/// Every square with left side `i` and right side `p`, in a fixed order.
pub fn squares<K: Enumerable>(k: &K, i: &K::Arrow, p: &K::Arrow) -> Vec<LiftingSquare<K::Arrow, K::Cell>> {
    let mut out = Vec::new();
    let mut as_ = k.arrows_between(&k.arrow_src(i), &k.arrow_src(p));
    as_.sort();
    let mut bs = k.arrows_between(&k.arrow_tgt(i), &k.arrow_tgt(p));
    bs.sort();
    for a in &as_ {
        for b in &bs {
            let (Some(pa), Some(bi)) = (k.compose(p, a), k.compose(b, i)) else { continue };
            let mut gs = k.cells_between(&pa, &bi);
            gs.sort();
            for gamma in gs.into_iter().filter(|g| k.is_invertible(g)) {
                out.push(LiftingSquare { i: i.clone(), p: p.clone(), a: a.clone(), b: b.clone(), gamma });
            }
        }
    }
    out
}

/// The first square with no filler, or `None` when `(i, p)` has the
/// lifting property.
pub fn lifting_counterexample<K: Enumerable>(k: &K, i: &K::Arrow, p: &K::Arrow) -> Option<LiftingSquare<K::Arrow, K::Cell>> {
    squares(k, i, p).into_iter().find(|sq| matches!(solve_lifting(k, sq), Ok(None)))
}

pub fn has_lifting<K: Enumerable>(k: &K, i: &K::Arrow, p: &K::Arrow) -> bool {
    lifting_counterexample(k, i, p).is_none()
}

/// Whether `data` exhibits `f` as a retract of `g`.
pub fn check_retract<K: TwoCategory>(k: &K, f: &K::Arrow, g: &K::Arrow, data: &RetractData<K::Arrow, K::Cell>) -> Result<bool, ModelError> {
    let d = data;
    let (c, dd) = (k.arrow_src(f), k.arrow_tgt(f));
    let (c2, d2) = (k.arrow_src(g), k.arrow_tgt(g));
    let ends = |x: &K::Arrow, s: &K::Obj, t: &K::Obj| &k.arrow_src(x) == s && &k.arrow_tgt(x) == t;
    if !ends(&d.theta0, &c, &c2) || !ends(&d.theta1, &dd, &d2) || !ends(&d.eta0, &c2, &c) || !ends(&d.eta1, &d2, &dd) {
        return Err(shape("θ and η do not run between f and g"));
    }
    let bounds = [
        (&d.theta_m, k.compose(g, &d.theta0), k.compose(&d.theta1, f)),
        (&d.eta_m, k.compose(f, &d.eta0), k.compose(&d.eta1, g)),
        (&d.mu0, k.compose(&d.eta0, &d.theta0), Some(k.id_arrow(&c))),
        (&d.mu1, k.compose(&d.eta1, &d.theta1), Some(k.id_arrow(&dd))),
    ];
    if bounds.iter().any(|(x, s, t)| !cell_is(k, x, s.clone(), t.clone())) {
        return Err(shape("a structure cell has the wrong boundary"));
    }
    if bounds.iter().any(|(x, _, _)| !k.is_invertible(x)) {
        return Ok(false);
    }
    let e = env(
        k,
        &[("f", f), ("theta0", &d.theta0), ("eta1", &d.eta1)],
        &[("theta_m", &d.theta_m), ("eta_m", &d.eta_m), ("mu0", &d.mu0), ("mu1", &d.mu1)],
    );
    let lhs = expr("(eta_m . id(theta0)) v (id(eta1) . theta_m) v (mu1 . id(f))");
    Ok(equal(&lhs, &expr("id(f) . mu0"), &e).unwrap_or(false))
}

/// Which side of `f ≅ p i` the retract argument lands on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RetractCase {
    /// `(f, p)` lifts; `f` is a retract of `i`.
    OfI,
    /// `(i, f)` lifts; `f` is a retract of `p`.
    OfP,
}

/// The square whose filler drives the retract argument for `γ: p i ⇒ f`.
pub fn retract_square<K: TwoCategory>(k: &K, f: &K::Arrow, i: &K::Arrow, p: &K::Arrow, gamma: &K::Cell, case: RetractCase) -> Result<LiftingSquare<K::Arrow, K::Cell>, ModelError> {
    if !cell_is(k, gamma, k.compose(p, i), Some(f.clone())) || !k.is_invertible(gamma) {
        return Err(shape("γ is not an invertible cell p i ⇒ f"));
    }
    let sq = match case {
        RetractCase::OfI => LiftingSquare { i: f.clone(), p: p.clone(), a: i.clone(), b: k.id_arrow(&k.arrow_tgt(f)), gamma: gamma.clone() },
        RetractCase::OfP => LiftingSquare {
            i: i.clone(),
            p: f.clone(),
            a: k.id_arrow(&k.arrow_src(f)),
            b: p.clone(),
            gamma: k.inverse(gamma).expect("invertible"),
        },
    };
    check_square(k, &sq)?;
    Ok(sq)
}

/// Exhibits `f ≅ p i` as a retract of `i` or of `p`. Without a filler the
/// canonical square is solved.
pub fn retract_argument<K: Enumerable>(
    k: &K,
    f: &K::Arrow,
    i: &K::Arrow,
    p: &K::Arrow,
    gamma: &K::Cell,
    case: RetractCase,
    filler: Option<&Filler<K::Arrow, K::Cell>>,
) -> Result<RetractData<K::Arrow, K::Cell>, ModelError> {
    let sq = retract_square(k, f, i, p, gamma, case)?;
    let fl = match filler {
        Some(fl) if check_filler(k, &sq, fl) => fl.clone(),
        Some(_) => return Err(shape("the given filler does not fill the canonical square")),
        None => solve_lifting(k, &sq)?.ok_or_else(|| ModelError::NoFiller("the canonical square has no filler".into()))?,
    };
    let (x, y) = (k.arrow_src(f), k.arrow_tgt(f));
    let inv = |c: &K::Cell| k.inverse(c).expect("invertible");
    Ok(match case {
        RetractCase::OfI => RetractData {
            theta0: k.id_arrow(&x),
            theta1: fl.f.clone(),
            theta_m: fl.lambda.clone(),
            eta0: k.id_arrow(&x),
            eta1: p.clone(),
            eta_m: inv(gamma),
            mu0: k.id_cell(&k.id_arrow(&x)),
            mu1: fl.rho.clone(),
        },
        RetractCase::OfP => RetractData {
            theta0: i.clone(),
            theta1: k.id_arrow(&y),
            theta_m: gamma.clone(),
            eta0: fl.f.clone(),
            eta1: k.id_arrow(&y),
            eta_m: fl.rho.clone(),
            mu0: inv(&fl.lambda),
            mu1: k.id_cell(&k.id_arrow(&y)),
        },
    })
}

/// The square for `(i, p)` built from a square for `(i′, p′)` and the two
/// retractions: sides `θ0 a η′0`, `θ1 b η′1`.
pub fn inner_square<K: TwoCategory>(
    k: &K,
    rp: &RetractData<K::Arrow, K::Cell>,
    ri: &RetractData<K::Arrow, K::Cell>,
    p: &K::Arrow,
    i: &K::Arrow,
    outer: &LiftingSquare<K::Arrow, K::Cell>,
) -> Result<LiftingSquare<K::Arrow, K::Cell>, ModelError> {
    let a = k.path(&[ri.eta0.clone(), outer.a.clone(), rp.theta0.clone()]).ok_or_else(|| shape("θ0 a η′0"))?;
    let b = k.path(&[ri.eta1.clone(), outer.b.clone(), rp.theta1.clone()]).ok_or_else(|| shape("θ1 b η′1"))?;
    let e = env(
        k,
        &[("a", &outer.a), ("b", &outer.b), ("theta1", &rp.theta1), ("eta0'", &ri.eta0)],
        &[("theta_m", &rp.theta_m), ("gamma", &outer.gamma), ("eta_m'", &ri.eta_m)],
    );
    let g = expr("(theta_m . id(a) . id(eta0')) v (id(theta1) . gamma . id(eta0')) v (id(theta1) . id(b) . eta_m')");
    let gamma = evaluate(&g, &e).map_err(|e| shape(e.to_string()))?;
    let sq = LiftingSquare { i: i.clone(), p: p.clone(), a, b, gamma };
    check_square(k, &sq)?;
    Ok(sq)
}

/// A filler for `outer` over `(i′, p′)`, given `p′` a retract of `p` via
/// `rp`, `i′` a retract of `i` via `ri`, and a filler of the inner square
/// (solved for when absent).
#[allow(clippy::too_many_arguments)]
pub fn transfer_lifting<K: Enumerable>(
    k: &K,
    p2: &K::Arrow,
    p: &K::Arrow,
    rp: &RetractData<K::Arrow, K::Cell>,
    i2: &K::Arrow,
    i: &K::Arrow,
    ri: &RetractData<K::Arrow, K::Cell>,
    outer: &LiftingSquare<K::Arrow, K::Cell>,
    inner: Option<&Filler<K::Arrow, K::Cell>>,
) -> Result<Filler<K::Arrow, K::Cell>, ModelError> {
    if &outer.p != p2 || &outer.i != i2 {
        return Err(shape("the outer square is not over (i′, p′)"));
    }
    check_square(k, outer)?;
    if !check_retract(k, p2, p, rp)? || !check_retract(k, i2, i, ri)? {
        return Err(shape("retraction data fails its equation"));
    }
    let sq = inner_square(k, rp, ri, p, i, outer)?;
    let fl = match inner {
        Some(fl) if check_filler(k, &sq, fl) => fl.clone(),
        Some(_) => return Err(shape("the inner filler does not fill the inner square")),
        None => solve_lifting(k, &sq)?.ok_or_else(|| ModelError::NoFiller("the inner square has no filler".into()))?,
    };
    let f = k.path(&[ri.theta1.clone(), fl.f.clone(), rp.eta0.clone()]).ok_or_else(|| shape("η0 f θ′1"))?;
    let inv = |c: &K::Cell| k.inverse(c).ok_or_else(|| shape("μ is not invertible"));
    let (mu0i, mu0i2) = (inv(&rp.mu0)?, inv(&ri.mu0)?);
    let e = env(
        k,
        &[("a", &outer.a), ("b", &outer.b), ("f", &fl.f), ("eta0", &rp.eta0), ("eta1", &rp.eta1), ("theta0'", &ri.theta0), ("theta1'", &ri.theta1)],
        &[
            ("mu0inv", &mu0i),
            ("mu0inv'", &mu0i2),
            ("lambda", &fl.lambda),
            ("rho", &fl.rho),
            ("theta_m'", &ri.theta_m),
            ("eta_m", &rp.eta_m),
            ("mu1", &rp.mu1),
            ("mu1'", &ri.mu1),
        ],
    );
    let lambda = expr("(mu0inv . id(a) . mu0inv') v (id(eta0) . lambda . id(theta0')) v (id(eta0) . id(f) . theta_m')");
    let rho = expr("(eta_m . id(f) . id(theta1')) v (id(eta1) . rho . id(theta1')) v (mu1 . id(b) . mu1')");
    let out = Filler {
        f,
        lambda: evaluate(&lambda, &e).map_err(|e| shape(e.to_string()))?,
        rho: evaluate(&rho, &e).map_err(|e| shape(e.to_string()))?,
    };
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelClasses<A = usize> {
    pub fibrations: BTreeSet<A>,
    pub cofibrations: BTreeSet<A>,
    pub weak_equivalences: BTreeSet<A>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    M0b,
    M2,
    M5,
    M6a,
    M6b,
    M6c,
    M1,
    M3b,
    M4b,
    M7,
}

impl Axiom {
    pub const ALL: [Axiom; 10] = [Axiom::M0b, Axiom::M2, Axiom::M5, Axiom::M6a, Axiom::M6b, Axiom::M6c, Axiom::M1, Axiom::M3b, Axiom::M4b, Axiom::M7];

    /// Consequences of 2-M6a-c, rechecked as a cross-check.
    pub fn is_derived(self) -> bool {
        matches!(self, Axiom::M1 | Axiom::M3b | Axiom::M4b | Axiom::M7)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::M0b => "2-M0b",
            Axiom::M2 => "2-M2",
            Axiom::M5 => "2-M5",
            Axiom::M6a => "2-M6a",
            Axiom::M6b => "2-M6b",
            Axiom::M6c => "2-M6c",
            Axiom::M1 => "2-M1",
            Axiom::M3b => "2-M3b",
            Axiom::M4b => "2-M4b",
            Axiom::M7 => "2-M7",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// Counterexamples, described.
    Fail(Vec<String>),
    NotChecked(String),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
    pub fn failed(&self) -> bool {
        matches!(self, Verdict::Fail(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub verdicts: BTreeMap<Axiom, Verdict>,
    pub notes: Vec<String>,
}

impl AxiomReport {
    pub fn verdict(&self, a: Axiom) -> &Verdict {
        &self.verdicts[&a]
    }

    /// No checked axiom failed.
    pub fn all_pass(&self) -> bool {
        self.verdicts.values().all(|v| !v.failed())
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, v) in &self.verdicts {
            match v {
                Verdict::Pass => writeln!(f, "{a}: pass")?,
                Verdict::Fail(w) => writeln!(f, "{a}: FAIL {}", w.join("; "))?,
                Verdict::NotChecked(why) => writeln!(f, "{a}: not checked ({why})")?,
            }
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

/// A strict inverse 1-cell.
pub fn arrow_inverse<K: Enumerable>(k: &K, f: &K::Arrow) -> Option<K::Arrow> {
    let (a, b) = (k.arrow_src(f), k.arrow_tgt(f));
    k.arrows_between(&b, &a)
        .into_iter()
        .find(|g| k.compose(g, f) == Some(k.id_arrow(&a)) && k.compose(f, g) == Some(k.id_arrow(&b)))
}

fn isomorphic<K: Enumerable>(k: &K, f: &K::Arrow, g: &K::Arrow) -> bool {
    k.cells_between(f, g).iter().any(|c| k.is_invertible(c))
}

/// Factorizations `f ≅ p i` as `(i, p)`.
pub fn factorizations<K: Enumerable>(k: &K, f: &K::Arrow) -> Vec<(K::Arrow, K::Arrow)> {
    let (a, b) = (k.arrow_src(f), k.arrow_tgt(f));
    let mut out = Vec::new();
    for z in k.objects() {
        for i in k.arrows_between(&a, &z) {
            for p in k.arrows_between(&z, &b) {
                if k.compose(&p, &i).is_some_and(|pi| isomorphic(k, &pi, f)) {
                    out.push((i.clone(), p));
                }
            }
        }
    }
    out.sort();
    out
}

struct Lifts<'a, K: Enumerable> {
    k: &'a K,
    memo: BTreeMap<(K::Arrow, K::Arrow), bool>,
}

impl<K: Enumerable> Lifts<'_, K> {
    fn get(&mut self, i: &K::Arrow, p: &K::Arrow) -> bool {
        let key = (i.clone(), p.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let v = has_lifting(self.k, i, p);
        self.memo.insert(key, v);
        v
    }
}

pub fn check_model_axioms<K: Enumerable>(k: &K, classes: &ModelClasses<K::Arrow>) -> AxiomReport {
    let arrows = {
        let mut v = k.all_arrows();
        v.sort();
        v
    };
    let (fib, cof, weq) = (&classes.fibrations, &classes.cofibrations, &classes.weak_equivalences);
    let name = |f: &K::Arrow| k.describe_arrow(f);
    let mut lifts = Lifts { k, memo: BTreeMap::new() };
    let mut verdicts = BTreeMap::new();
    let verdict = |w: Vec<String>| if w.is_empty() { Verdict::Pass } else { Verdict::Fail(w) };
    let isos: Vec<K::Arrow> = arrows.iter().filter(|f| arrow_inverse(k, f).is_some()).cloned().collect();

    verdicts.insert(Axiom::M0b, Verdict::NotChecked("existence of finite weighted bi-limits and bi-colimits is not searched".into()));

    let mut w = Vec::new();
    for f in &arrows {
        let fs = factorizations(k, f);
        if !fs.iter().any(|(i, p)| cof.contains(i) && weq.contains(i) && fib.contains(p)) {
            w.push(format!("{} has no factorization (trivial cofibration, fibration)", name(f)));
        }
        if !fs.iter().any(|(i, p)| cof.contains(i) && fib.contains(p) && weq.contains(p)) {
            w.push(format!("{} has no factorization (cofibration, trivial fibration)", name(f)));
        }
    }
    verdicts.insert(Axiom::M2, verdict(w));

    let mut w = Vec::new();
    for f in &arrows {
        for g in arrows.iter().filter(|g| k.arrow_src(g) == k.arrow_tgt(f)) {
            let Some(gf) = k.compose(g, f) else { continue };
            for h in k.arrows_between(&k.arrow_src(f), &k.arrow_tgt(g)) {
                if !isomorphic(k, &h, &gf) {
                    continue;
                }
                let ins = [weq.contains(f), weq.contains(g), weq.contains(&h)];
                if ins.iter().filter(|&&b| b).count() == 2 {
                    w.push(format!("two of f={}, g={}, h={} are weak equivalences but not the third", name(f), name(g), name(&h)));
                }
            }
        }
    }
    for f in isos.iter().filter(|f| !weq.contains(f)) {
        w.push(format!("isomorphism {} is not a weak equivalence", name(f)));
    }
    verdicts.insert(Axiom::M5, verdict(w));

    let trivial_cof: Vec<_> = arrows.iter().filter(|i| cof.contains(i) && weq.contains(i)).cloned().collect();
    let trivial_fib: Vec<_> = arrows.iter().filter(|p| fib.contains(p) && weq.contains(p)).cloned().collect();
    let mut w = Vec::new();
    for p in &arrows {
        let rlp = trivial_cof.iter().all(|i| lifts.get(i, p));
        if rlp != fib.contains(p) {
            w.push(format!("{}: fibration={} but lifts against trivial cofibrations={rlp}", name(p), fib.contains(p)));
        }
    }
    verdicts.insert(Axiom::M6a, verdict(w));
    let mut w = Vec::new();
    for i in &arrows {
        let llp = trivial_fib.iter().all(|p| lifts.get(i, p));
        if llp != cof.contains(i) {
            w.push(format!("{}: cofibration={} but lifts against trivial fibrations={llp}", name(i), cof.contains(i)));
        }
    }
    verdicts.insert(Axiom::M6b, verdict(w));

    let cofs: Vec<_> = arrows.iter().filter(|i| cof.contains(i)).cloned().collect();
    let fibs: Vec<_> = arrows.iter().filter(|p| fib.contains(p)).cloned().collect();
    let rlp_cof: BTreeSet<K::Arrow> = arrows.iter().filter(|u| cofs.iter().all(|i| lifts.get(i, u))).cloned().collect();
    let llp_fib: BTreeSet<K::Arrow> = arrows.iter().filter(|v| fibs.iter().all(|p| lifts.get(v, p))).cloned().collect();
    let mut w = Vec::new();
    for f in &arrows {
        let fact = factorizations(k, f).into_iter().any(|(v, u)| rlp_cof.contains(&u) && llp_fib.contains(&v));
        if fact != weq.contains(f) {
            w.push(format!("{}: weak equivalence={} but factors as (RLP cof)(LLP fib)={fact}", name(f), weq.contains(f)));
        }
    }
    verdicts.insert(Axiom::M6c, verdict(w));

    let mut w = Vec::new();
    for i in &cofs {
        for p in &fibs {
            if (weq.contains(i) || weq.contains(p)) && !lifts.get(i, p) {
                w.push(format!("({}, {}) does not lift", name(i), name(p)));
            }
        }
    }
    verdicts.insert(Axiom::M1, verdict(w));

    let mut w = Vec::new();
    for (label, class) in [("fibrations", fib), ("cofibrations", cof)] {
        for f in arrows.iter().filter(|f| class.contains(f)) {
            for g in arrows.iter().filter(|g| class.contains(g) && k.arrow_src(g) == k.arrow_tgt(f)) {
                if let Some(gf) = k.compose(g, f) {
                    if !class.contains(&gf) {
                        w.push(format!("{label} not closed under composition: {} {}", name(g), name(f)));
                    }
                }
            }
        }
        for f in isos.iter().filter(|f| !class.contains(f)) {
            w.push(format!("isomorphism {} is not among the {label}", name(f)));
        }
    }
    verdicts.insert(Axiom::M3b, verdict(w));
    verdicts.insert(Axiom::M4b, Verdict::NotChecked("bi-pullbacks and bi-pushouts are not enumerated".into()));

    let mut w = Vec::new();
    for (label, class) in [("fibrations", fib), ("cofibrations", cof), ("weak equivalences", weq)] {
        for f in arrows.iter().filter(|f| class.contains(f)) {
            for g in k.arrows_between(&k.arrow_src(f), &k.arrow_tgt(f)) {
                if !class.contains(&g) && isomorphic(k, f, &g) {
                    w.push(format!("{label} not closed under isomorphism: {} ≅ {}", name(f), name(&g)));
                }
            }
        }
    }
    verdicts.insert(Axiom::M7, verdict(w));

    AxiomReport { verdicts, notes: vec!["2-M3b checks composition and isomorphisms only; closure under bi-pullbacks is not searched".into()] }
}

/// Arrows where "fibration and weak equivalence" disagrees with "lifts
/// against every cofibration", and dually for cofibrations.
pub fn trivial_lifting_mismatches<K: Enumerable>(k: &K, classes: &ModelClasses<K::Arrow>) -> Vec<String> {
    let arrows = k.all_arrows();
    let (fib, cof, weq) = (&classes.fibrations, &classes.cofibrations, &classes.weak_equivalences);
    let mut lifts = Lifts { k, memo: BTreeMap::new() };
    let mut out = Vec::new();
    for f in &arrows {
        let rlp = arrows.iter().filter(|i| cof.contains(i)).all(|i| lifts.get(i, f));
        if rlp != (fib.contains(f) && weq.contains(f)) {
            out.push(format!("{} as a trivial fibration", k.describe_arrow(f)));
        }
        let llp = arrows.iter().filter(|p| fib.contains(p)).all(|p| lifts.get(f, p));
        if llp != (cof.contains(f) && weq.contains(f)) {
            out.push(format!("{} as a trivial cofibration", k.describe_arrow(f)));
        }
    }
    out
}
