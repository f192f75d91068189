use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use twocat::core::{equivalence_of_categories, validate_fincat, validate_twocat, EquivalenceDecision, FinCat, TwoCat};
use twocat::fixtures;
use twocat::kan::{check_cat_cone, comparison_functor, factor_through, ll_colimit, pseudo_limit_cat, KanError, Presentation, Variance};
use twocat::maps::{check_pseudo_functor, Probe};
use twocat::model::{check_model_axioms, check_retract, retract_argument, solve_lifting, Filler, LiftingSquare, ModelError, RetractCase};
use twocat::pasting::{elevator_sides, PastingError, equal, evaluate, parse_elevator, CellEnv};
use twocat::pro::{
    build_kx, build_mf, check_represents, check_represents_2cell, equalize, find_representative, find_representative_2cell, pro_hom,
    reindex, straighten, straightening_holds, ProDiagram, ProError, ProObject,
};
use twocat::shape::hat::{enumerate_pseudo_functors, enumerate_strict_hat_functors, restrict_along_t};
use twocat::shape::mj::terminal_object;
use twocat::shape::{build_hat, build_mj, check_2cofinal, check_2filtered, transport_along_hat};

use crate::format::*;
use crate::report::{yn, Outcome};
use crate::workspace::{self as ws, load_doc, Ctx, LoadError};
use crate::{CaseArg, CliError, Command, Global};

type Res = Result<Outcome, CliError>;

pub fn run(cmd: &Command, g: &Global) -> Res {
    match cmd {
        Command::Validate { file, samples } => validate(file, *samples, g.seed),
        Command::CheckFiltered { file } => check_filtered(file),
        Command::CheckCofinal { file } => check_cofinal(file),
        Command::Colim { file, check_terminal_oracle } => colim(file, *check_terminal_oracle),
        Command::Lim { file } => lim(file),
        Command::Factor { cone } => factor(cone),
        Command::Compare { functor, diagram } => compare(functor, diagram),
        Command::Mj { file, n } => mj(file, *n, g.slack),
        Command::Hat { file, into } => hat(file, into.as_deref(), g.bound.unwrap_or(3)),
        Command::ProHom { x, y } => prohom(x, y),
        Command::Represent { x, y } => represent(x, y),
        Command::Straighten { x, object } => straighten_all(x, object),
        Command::Equalize { x, object, at, pairs } => equalize_cmd(x, object, at, pairs),
        Command::Mf { x, y, element } => mf(x, y, *element, g.bound.unwrap_or(4096)),
        Command::Kx { x } => kx(x, g.bound.unwrap_or(4096)),
        Command::Reindex { x, functor } => reindex_cmd(x, functor),
        Command::Lift { square } => lift(square),
        Command::Retract { file, f, i, p, gamma, case } => retract(file, f, i, p, gamma, *case),
        Command::ModelCheck { file } => model_check(file),
        Command::ExportDot { file } => export_dot(file),
        Command::Eval { file, expr, equals } => eval(file, expr, equals.as_deref()),
        Command::Fixture { name, two } => fixture(name, *two),
        Command::Canonical { file } => {
            let mut o = Outcome::new("canonical");
            o.body = Some(ws::canonicalize(file)?);
            Ok(o)
        }
    }
}

fn twocat_file(path: &Path) -> Result<TwoCat, CliError> {
    let (doc, ctx) = load_doc::<TwoCatDoc>(path)?;
    Ok(ws::twocat(&doc, &ctx)?)
}

fn cat_file(path: &Path) -> Result<FinCat, CliError> {
    let (doc, ctx) = load_doc::<CatDoc>(path)?;
    Ok(ws::cat(&doc, &ctx)?)
}

fn diag_file(path: &Path) -> Result<twocat::kan::CatDiagram, CliError> {
    let (doc, ctx) = load_doc::<DiagDoc>(path)?;
    Ok(ws::diag(&doc, &ctx)?)
}

fn pro_file(path: &Path) -> Result<ProObject, CliError> {
    let (doc, ctx) = load_doc::<ProDoc>(path)?;
    Ok(ws::pro(&doc, &ctx)?)
}

fn pfun_file(path: &Path) -> Result<ws::Pseudo, CliError> {
    let (doc, ctx) = load_doc::<PfunDoc>(path)?;
    Ok(ws::pfun(&doc, &ctx)?)
}

fn unknown(kind: &'static str, name: &str) -> CliError {
    CliError::UnknownName { kind, name: name.to_string() }
}

/// Library failures that mean the input broke a precondition are input
/// errors; the rest are negative verdicts.
fn kan_failure(o: &mut Outcome, e: KanError) -> Res {
    match e {
        KanError::NotFiltered(_) | KanError::InvalidDiagram(_) | KanError::InvalidCone(_) => Err(CliError::Input(e.to_string())),
        other => {
            o.ok = false;
            o.field("error", other.to_string());
            Ok(o.clone())
        }
    }
}

fn pro_failure(o: &mut Outcome, e: ProError) -> Res {
    match e {
        ProError::Invalid(_) | ProError::ShapeMismatch(_) => Err(CliError::Input(e.to_string())),
        ProError::Kan(k) => kan_failure(o, k),
        other => {
            o.ok = false;
            o.field("error", other.to_string());
            Ok(o.clone())
        }
    }
}

fn model_failure(o: &mut Outcome, e: ModelError) -> Res {
    match e {
        ModelError::ShapeMismatch(_) => Err(CliError::Input(e.to_string())),
        ModelError::NoFiller(_) => {
            o.ok = false;
            o.field("error", e.to_string());
            Ok(o.clone())
        }
    }
}

// ------------------------------------------------------------------ validate

fn validate(path: &Path, samples: usize, seed: u64) -> Res {
    let mut o = Outcome::new("validate");
    let text = ws::read_file(path)?;
    let kind = ws::kind_of(path, &text)?;
    let ctx = Ctx::file(path);
    o.field("kind", kind.extension());
    let r = validate_kind(kind, &text, &ctx, &mut o, samples, seed);
    match r {
        Ok(()) => Ok(o),
        Err(LoadError::Invalid { path, location, message }) => {
            o.verdict("valid", false);
            o.detail(format!("{path} at {location}: {message}"));
            Ok(o)
        }
        Err(e) => Err(e.into()),
    }
}

fn laws<K: std::fmt::Display + Ord + Clone>(o: &mut Outcome, r: &twocat::core::Report<K>) {
    o.verdict("valid", r.is_ok());
    o.field("violations", r.violations().len());
    for v in r.violations() {
        o.detail(v.to_string());
    }
}

fn validate_kind(kind: Kind, text: &str, ctx: &Ctx, o: &mut Outcome, samples: usize, seed: u64) -> Result<(), LoadError> {
    match kind {
        Kind::Cat => {
            let c = ws::cat_raw(&ws::parse_doc(text, ctx)?, ctx)?;
            o.field("objects", c.object_count()).field("morphisms", c.morphism_count());
            laws(o, &validate_fincat(&c));
        }
        Kind::TwoCat => {
            let k = ws::twocat_raw(&ws::parse_doc(text, ctx)?, ctx)?;
            o.field("objects", k.object_count()).field("arrows", k.arrow_count()).field("cells", k.cell_count());
            let r = validate_twocat(&k);
            laws(o, &r);
            if r.is_ok() && samples > 0 {
                let (n, agree) = sample_elevators(&k, samples, seed);
                o.field("elevator_samples", n);
                o.verdict("elevator_agree", agree == n);
            }
        }
        Kind::Fun => {
            let f = ws::fun_raw(&ws::parse_doc(text, ctx)?, ctx)?;
            let r = f.map.check(&f.source, &f.target);
            o.verdict("valid", r.is_ok());
            if let Err(e) = r {
                o.detail(e.to_string());
            }
        }
        Kind::Nat => {
            ws::nat(&ws::parse_doc(text, ctx)?, ctx)?;
            o.verdict("valid", true);
        }
        Kind::Pfun => {
            let p = ws::pfun_raw(&ws::parse_doc(text, ctx)?, ctx)?;
            laws(o, &check_pseudo_functor(&p.source, &p.target, &p.map, &Probe::exhaustive(&p.source)));
        }
        Kind::Diag => {
            let d = ws::diag_raw(&ws::parse_doc(text, ctx)?, ctx)?;
            let r = d.validate();
            o.verdict("valid", r.is_ok());
            if let Err(e) = r {
                o.detail(e.to_string());
            }
        }
        Kind::Cone => {
            let (d, c) = ws::cone(&ws::parse_doc(text, ctx)?, ctx)?;
            laws(o, &check_cat_cone(&d, &c));
        }
        Kind::Pro => {
            let x = ws::pro_raw(&ws::parse_doc(text, ctx)?, ctx)?;
            let r = x.validate();
            o.verdict("valid", r.is_ok());
            if let Err(e) = r {
                o.detail(e.to_string());
            }
        }
        Kind::Classes => {
            let (k, c) = ws::classes(&ws::parse_doc(text, ctx)?, ctx)?;
            o.field("arrows", k.arrow_count());
            o.field("fibrations", c.fibrations.len()).field("cofibrations", c.cofibrations.len());
            o.field("weak_equivalences", c.weak_equivalences.len());
            o.verdict("valid", true);
        }
        Kind::Sq => {
            ws::square(&ws::parse_doc(text, ctx)?, ctx)?;
            o.verdict("valid", true);
        }
    }
    Ok(())
}

/// Random horizontally composable pairs; the three readings of each
/// elevator must coincide.
fn sample_elevators(k: &TwoCat, samples: usize, seed: u64) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cells: Vec<usize> = k.cells().collect();
    let (mut n, mut agree) = (0, 0);
    for _ in 0..samples {
        let &a = cells.choose(&mut rng).expect("a 2-category has cells");
        let mid = k.tgt(k.csrc(a));
        let next: Vec<usize> = cells.iter().copied().filter(|&b| k.src(k.csrc(b)) == mid).collect();
        let Some(&b) = next.choose(&mut rng) else { continue };
        n += 1;
        if let Some([x, y, z]) = elevator_sides(k, &a, &b) {
            if x == y && y == z {
                agree += 1;
            }
        }
    }
    (n, agree)
}

// --------------------------------------------------------------------- shape

fn check_filtered(path: &Path) -> Res {
    let k = twocat_file(path)?;
    let r = check_2filtered(&k);
    let mut o = Outcome::new("check-filtered");
    o.verdict("filtered", r.is_filtered());
    o.field("f0", r.f0.len()).field("f1", r.f1.len()).field("f2", r.f2.len());
    o.details_from(&r);
    Ok(o)
}

fn check_cofinal(path: &Path) -> Res {
    let p = pfun_file(path)?;
    let r = check_2cofinal(&p.source, &p.target, &p.map);
    let mut o = Outcome::new("check-cofinal");
    o.verdict("cofinal", r.is_cofinal());
    o.details_from(&r);
    Ok(o)
}

fn mj(path: &Path, n: usize, slack: usize) -> Res {
    let j = twocat_file(path)?;
    let mut o = Outcome::new("mj");
    let m = build_mj(&j, n, slack, None).map_err(|e| CliError::Input(e.to_string()))?;
    o.field("n", n).field("slack", slack);
    o.field("elements", m.truncation.of_size(n).len());
    o.verdict("cofinite", m.report.cofinite);
    o.verdict("filtered", m.report.filtered_ok());
    o.verdict("phi_cofinal", m.report.cofinal.is_cofinal());
    o.verdict("phi_functor", m.report.phi_functor.is_ok());
    o.details_from(&m.report);
    Ok(o)
}

fn hat(path: &Path, into: Option<&Path>, len: usize) -> Res {
    let a = cat_file(path)?;
    let mut o = Outcome::new("hat");
    let (src, hat, t) = build_hat(&a, len);
    o.field("tuple_length", len).field("tuples", hat.all_tuples(len).len());
    let r = check_pseudo_functor(&src, &hat, &t, &Probe::exhaustive(&src));
    o.verdict("t_pseudo_functor", r.is_ok());
    if let Some(c) = into {
        let c = twocat_file(c)?;
        let pseudo = enumerate_pseudo_functors(&a, &c);
        let strict = enumerate_strict_hat_functors(&a, &c, len);
        o.field("pseudo_functors", pseudo.len()).field("strict_functors", strict.len());
        o.verdict("counts_agree", pseudo.len() == strict.len());
        let probe = hat.probe(len);
        let back = pseudo.iter().all(|f| {
            transport_along_hat(&hat, &c, f, &probe).and_then(|g| restrict_along_t::<TwoCat>(&t, &g)).as_ref() == Some(f)
        });
        o.verdict("transport_inverse", back);
    }
    Ok(o)
}

// ----------------------------------------------------------------------- kan

fn colim(path: &Path, oracle: bool) -> Res {
    let d = diag_file(path)?;
    let mut o = Outcome::new("colim");
    let l = match ll_colimit(&d) {
        Ok(l) => l,
        Err(e) => return kan_failure(&mut o, e),
    };
    o.field("objects", l.cat.object_count()).field("morphisms", l.cat.morphism_count());
    o.field("premorphisms", l.premorphisms.len());
    o.verdict("cocone", l.cone_report.is_ok());
    for (n, &(c, i)) in l.objects.iter().enumerate() {
        o.detail(format!("object #{n} = ({}, {})", d.cats[i].object_name(c), d.index.object_name(i)));
    }
    for (m, cl) in l.classes.iter().enumerate() {
        o.detail(format!("morphism #{m} = {}", l.describe(&l.premorphisms[cl[0]])));
    }
    if oracle {
        let t = terminal_object(&d.index).ok_or_else(|| CliError::Input("the index has no 2-terminal object".into()))?;
        o.field("terminal", d.index.object_name(t));
        let dec = equivalence_of_categories(&d.cats[t], &l.cat, l.leg(t));
        decision(&mut o, &dec);
    }
    Ok(o)
}

fn decision(o: &mut Outcome, d: &EquivalenceDecision) {
    o.verdict("equivalence", d.is_yes());
    match d {
        EquivalenceDecision::Yes(w) => {
            o.field("ess_surj", "yes").field("full", "yes").field("faithful", "yes");
            o.field("homs_checked", w.homs_checked);
            for (y, (x, iso)) in w.preimage.iter().enumerate() {
                o.detail(format!("target #{y} ≅ F(#{x}) via #{iso}"));
            }
        }
        EquivalenceDecision::No(f) => {
            o.detail(f.to_string());
        }
    }
}

fn lim(path: &Path) -> Res {
    let d = diag_file(path)?;
    let mut o = Outcome::new("lim");
    let l = match pseudo_limit_cat(&d) {
        Ok(l) => l,
        Err(e) => return kan_failure(&mut o, e),
    };
    o.field("objects", l.cat.object_count()).field("morphisms", l.cat.morphism_count());
    o.verdict("cone", l.cone_report.is_ok());
    for (n, x) in l.objects.iter().enumerate() {
        let xs: Vec<String> = x.x.iter().enumerate().map(|(i, &c)| format!("{}:{}", d.index.object_name(i), d.cats[i].object_name(c))).collect();
        o.detail(format!("object #{n} = ({})", xs.join(", ")));
    }
    Ok(o)
}

fn factor(path: &Path) -> Res {
    let (doc, ctx) = load_doc::<ConeDoc>(path)?;
    let (d, cone) = ws::cone(&doc, &ctx)?;
    let mut o = Outcome::new("factor");
    let r = match d.variance {
        Variance::Covariant => ll_colimit(&d).and_then(|l| factor_through(Presentation::Colimit(&l), &cone).map(|m| (m, l.cat))),
        Variance::Contravariant => pseudo_limit_cat(&d).and_then(|l| factor_through(Presentation::Limit(&l), &cone).map(|m| (m, l.cat))),
    };
    let (m, _) = match r {
        Ok(x) => x,
        Err(e) => return kan_failure(&mut o, e),
    };
    o.verdict("mediator", true);
    o.field("determined", m.determined);
    for (x, &y) in m.functor.obj.iter().enumerate() {
        let (from, to) = match d.variance {
            Variance::Covariant => (format!("#{x}"), cone.vertex.object_name(y).to_string()),
            Variance::Contravariant => (cone.vertex.object_name(x).to_string(), format!("#{y}")),
        };
        o.detail(format!("{from} -> {to}"));
    }
    Ok(o)
}

fn compare(functor: &Path, diagram: &Path) -> Res {
    let f = pfun_file(functor)?;
    let g = diag_file(diagram)?;
    let mut o = Outcome::new("compare");
    let c = match comparison_functor(&f.source, &f.target, &f.map, &g) {
        Ok(c) => c,
        Err(e) => return kan_failure(&mut o, e),
    };
    o.verdict("cofinal", c.cofinal.is_cofinal());
    o.field("source_objects", c.source.cat.object_count()).field("target_objects", c.target.cat.object_count());
    decision(&mut o, &c.decision);
    Ok(o)
}

// ----------------------------------------------------------------------- pro

fn prohom(x: &Path, y: &Path) -> Res {
    let (x, y) = (pro_file(x)?, pro_file(y)?);
    let mut o = Outcome::new("pro-hom");
    let h = match pro_hom(&x, &y) {
        Ok(h) => h,
        Err(e) => return pro_failure(&mut o, e),
    };
    o.field("objects", h.cat().object_count()).field("morphisms", h.cat().morphism_count());
    let c = &x.target;
    for f in h.cat().objects() {
        let parts: Vec<String> = h
            .decode_object(f)
            .iter()
            .enumerate()
            .map(|(j, &(i, r))| format!("{}: {} π_{}", y.index.object_name(j), c.arrow_name(r), x.index.object_name(i)))
            .collect();
        o.detail(format!("element #{f}: {}", parts.join("; ")));
    }
    Ok(o)
}

fn represent(x: &Path, y: &Path) -> Res {
    let (x, y) = (pro_file(x)?, pro_file(y)?);
    let mut o = Outcome::new("represent");
    let h = match pro_hom(&x, &y) {
        Ok(h) => h,
        Err(e) => return pro_failure(&mut o, e),
    };
    let c = &x.target;
    let (mut checked, mut bad) = (0, 0);
    for f in h.cat().objects() {
        for j in y.index.objects() {
            let rep = find_representative(&h, f, j);
            checked += 1;
            if !check_represents(&h, &rep, f).unwrap_or(false) {
                bad += 1;
            }
            o.detail(format!(
                "element #{f} at {}: i={}, r={}, φ=#{}",
                y.index.object_name(j),
                x.index.object_name(rep.i),
                c.arrow_name(rep.r),
                rep.phi
            ));
        }
    }
    for a in h.cat().morphisms() {
        for j in y.index.objects() {
            checked += 1;
            let ok = find_representative_2cell(&h, a, j).and_then(|r| check_represents_2cell(&h, &r, a)).unwrap_or(false);
            if !ok {
                bad += 1;
            }
        }
    }
    o.field("checked", checked).field("failures", bad);
    o.verdict("represented", bad == 0);
    Ok(o)
}

fn target_object(x: &ProObject, name: &str) -> Result<usize, CliError> {
    x.target.find_object(name).ok_or_else(|| unknown("object", name))
}

fn straighten_all(x: &Path, object: &str) -> Res {
    let x = pro_file(x)?;
    let d = target_object(&x, object)?;
    let mut o = Outcome::new("straighten");
    let l = match x.hom_into(d) {
        Ok(l) => l,
        Err(e) => return pro_failure(&mut o, e),
    };
    let (c, k) = (&x.target, &x.index);
    let mut bad = 0;
    for m in l.cat().morphisms() {
        match straighten(&x, &l, m) {
            Ok(s) if straightening_holds(&l, m, &s) => {
                o.detail(format!("#{m}: k={}, u={}, v={}, θ={}", k.object_name(s.k), k.arrow_name(s.u), k.arrow_name(s.v), c.cell_name(s.theta)));
            }
            Ok(_) | Err(_) => {
                bad += 1;
                o.detail(format!("#{m}: no straightening"));
            }
        }
    }
    o.field("morphisms", l.cat().morphism_count()).field("failures", bad);
    o.verdict("straightened", bad == 0);
    Ok(o)
}

fn equalize_cmd(x: &Path, object: &str, at: &str, pairs: &[String]) -> Res {
    let x = pro_file(x)?;
    let d = target_object(&x, object)?;
    let i = x.index.find_object(at).ok_or_else(|| unknown("index object", at))?;
    let c = &x.target;
    let mut ps = Vec::new();
    for p in pairs {
        let (a, b) = p.split_once(',').ok_or_else(|| CliError::Input(format!("pair {p:?} must be `θ,θ'`")))?;
        let cell = |n: &str| c.find_cell(n.trim()).ok_or_else(|| unknown("2-cell", n.trim()));
        ps.push((cell(a)?, cell(b)?));
    }
    let mut o = Outcome::new("equalize");
    let l = match x.hom_into(d) {
        Ok(l) => l,
        Err(e) => return pro_failure(&mut o, e),
    };
    match equalize(&x, &l, i, &ps) {
        Ok(u) => {
            o.field("u", x.index.arrow_name(u));
            let holds = ps.iter().all(|&(t, t2)| c.rwhisker(t, x.arrow[u]) == c.rwhisker(t2, x.arrow[u]));
            o.verdict("equalized", holds);
            Ok(o)
        }
        Err(e @ ProError::HypothesisFails(_)) => {
            o.ok = false;
            o.field("hypothesis", "fails").field("error", e.to_string());
            Ok(o)
        }
        Err(e) => pro_failure(&mut o, e),
    }
}

fn mf(x: &Path, y: &Path, element: Option<usize>, bound: usize) -> Res {
    let (x, y) = (pro_file(x)?, pro_file(y)?);
    let mut o = Outcome::new("mf");
    let h = match pro_hom(&x, &y) {
        Ok(h) => h,
        Err(e) => return pro_failure(&mut o, e),
    };
    let f = match element {
        Some(n) if n < h.cat().object_count() => n,
        Some(n) => return Err(CliError::Input(format!("element #{n} out of range"))),
        None => h.identity().ok_or_else(|| CliError::Input("X ≠ Y: pass --element".into()))?,
    };
    o.field("element", f);
    let m = match build_mf(&h, f, bound) {
        Ok(m) => m,
        Err(e) => return pro_failure(&mut o, e),
    };
    o.field("objects", m.objects.len()).field("arrows", m.arrows.len()).field("cells", m.cells.len());
    o.verdict("filtered", m.filtered.is_filtered());
    o.verdict("cofinal_i", m.cofinal_i.is_cofinal());
    o.verdict("cofinal_j", m.cofinal_j.is_cofinal());
    Ok(o)
}

fn kx(x: &Path, bound: usize) -> Res {
    let x = pro_file(x)?;
    let mut o = Outcome::new("kx");
    let h = match pro_hom(&x, &x) {
        Ok(h) => h,
        Err(e) => return pro_failure(&mut o, e),
    };
    let f = h.identity().ok_or_else(|| CliError::Input("no identity element".into()))?;
    let d = ProDiagram { index: TwoCat::terminal(), objects: vec![x.clone()], arrows: vec![f], cells: vec![h.cat().id(f)] };
    let k = match build_kx(&d, bound) {
        Ok(k) => k,
        Err(e) => return pro_failure(&mut o, e),
    };
    o.field("objects", k.objects.len()).field("arrows", k.arrows.len()).field("cells", k.cells.len());
    o.verdict("filtered", k.filtered.is_filtered());
    o.verdict("xtilde", k.xtilde_report.is_ok());
    Ok(o)
}

fn reindex_cmd(x: &Path, functor: &Path) -> Res {
    let x = pro_file(x)?;
    let f = pfun_file(functor)?;
    if f.target != x.index {
        return Err(CliError::Input("the functor must land in the index of X".into()));
    }
    let mut o = Outcome::new("reindex");
    let r = match reindex(&x, &f.source, &f.map) {
        Ok(r) => r,
        Err(e) => return pro_failure(&mut o, e),
    };
    o.field("index_objects", r.object.index.object_count());
    for (d, c) in r.certificates.iter().enumerate() {
        o.detail(format!("{}: equivalence={}", x.target.object_name(d), yn(c.decision.is_yes())));
    }
    o.verdict("equivalence", r.is_equivalence());
    Ok(o)
}

// --------------------------------------------------------------------- model

/// The filler written in the letters of the square: `f` as a word of length
/// at most two in `a, b, i, p` and the strict inverse `g` of `p`, `λ` as
/// `γ` when it is `γ` read through `g p = id`, identities as `id`.
pub fn filler_form(k: &TwoCat, sq: &LiftingSquare, fl: &Filler) -> String {
    let g = k.arrow_inverse(sq.p);
    let mut letters = vec![("a", sq.a), ("b", sq.b), ("i", sq.i), ("p", sq.p)];
    if let Some(g) = g {
        letters.push(("g", g));
    }
    let single = letters.iter().find(|(_, x)| *x == fl.f).map(|(n, _)| n.to_string());
    let double = || {
        letters.iter().find_map(|(n1, x)| letters.iter().find_map(|(n2, y)| (k.comp1(*x, *y) == Some(fl.f)).then(|| format!("{n1}{n2}"))))
    };
    let f = single.or_else(double).unwrap_or_else(|| k.arrow_name(fl.f).to_string());
    let lam = if g.and_then(|g| k.lwhisker(g, sq.gamma)) == Some(fl.lambda) {
        "γ".to_string()
    } else if k.is_identity_cell(fl.lambda) {
        "id".to_string()
    } else {
        k.cell_name(fl.lambda).to_string()
    };
    let rho = if k.is_identity_cell(fl.rho) { "id".to_string() } else { k.cell_name(fl.rho).to_string() };
    format!("({f},{lam},{rho})")
}

fn lift(path: &Path) -> Res {
    let (doc, ctx) = load_doc::<SqDoc>(path)?;
    let (k, sq) = ws::square(&doc, &ctx)?;
    let mut o = Outcome::new("lift");
    match solve_lifting(&k, &sq) {
        Ok(Some(fl)) => {
            o.verdict("filled", true);
            o.field("filler", format!("({},{},{})", k.arrow_name(fl.f), k.cell_name(fl.lambda), k.cell_name(fl.rho)));
            o.field("form", filler_form(&k, &sq, &fl));
            Ok(o)
        }
        Ok(None) => {
            o.verdict("filled", false);
            Ok(o)
        }
        Err(e) => model_failure(&mut o, e),
    }
}

fn retract(path: &Path, f: &str, i: &str, p: &str, gamma: &str, case: CaseArg) -> Res {
    let k = twocat_file(path)?;
    let arrow = |n: &str| k.find_arrow(n).ok_or_else(|| unknown("1-cell", n));
    let (f, i, p) = (arrow(f)?, arrow(i)?, arrow(p)?);
    let gamma = k.find_cell(gamma).ok_or_else(|| unknown("2-cell", gamma))?;
    let case = match case {
        CaseArg::OfI => RetractCase::OfI,
        CaseArg::OfP => RetractCase::OfP,
    };
    let mut o = Outcome::new("retract");
    let r = match retract_argument(&k, &f, &i, &p, &gamma, case, None) {
        Ok(r) => r,
        Err(e) => return model_failure(&mut o, e),
    };
    let of = if case == RetractCase::OfI { i } else { p };
    let (a, c) = (|x: usize| k.arrow_name(x).to_string(), |x: usize| k.cell_name(x).to_string());
    o.field(
        "octuple",
        format!("({},{},{},{},{},{},{},{})", a(r.theta0), a(r.theta1), c(r.theta_m), a(r.eta0), a(r.eta1), c(r.eta_m), c(r.mu0), c(r.mu1)),
    );
    match check_retract(&k, &f, &of, &r) {
        Ok(b) => o.verdict("retract", b),
        Err(e) => return model_failure(&mut o, e),
    };
    Ok(o)
}

fn model_check(path: &Path) -> Res {
    let (doc, ctx) = load_doc::<ClassesDoc>(path)?;
    let (k, c) = ws::classes(&doc, &ctx)?;
    let r = check_model_axioms(&k, &c);
    let mut o = Outcome::new("model-check");
    for (a, v) in &r.verdicts {
        let s = match v {
            twocat::model::Verdict::Pass => "pass",
            twocat::model::Verdict::Fail(_) => "fail",
            twocat::model::Verdict::NotChecked(_) => "not checked",
        };
        o.field(&a.to_string(), s);
    }
    o.ok = r.all_pass();
    o.details_from(&r);
    Ok(o)
}

// ---------------------------------------------------------------- utilities

fn export_dot(path: &Path) -> Res {
    let text = ws::read_file(path)?;
    let kind = ws::kind_of(path, &text)?;
    let ctx = Ctx::file(path);
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("g");
    let body = match kind {
        Kind::Cat => crate::dot::cat_dot(name, &ws::cat_raw(&ws::parse_doc(&text, &ctx)?, &ctx)?),
        Kind::TwoCat => crate::dot::twocat_dot(name, &ws::twocat_raw(&ws::parse_doc(&text, &ctx)?, &ctx)?),
        Kind::Classes => crate::dot::twocat_dot(name, &ws::classes(&ws::parse_doc(&text, &ctx)?, &ctx)?.0),
        Kind::Sq => crate::dot::twocat_dot(name, &ws::square(&ws::parse_doc(&text, &ctx)?, &ctx)?.0),
        Kind::Pro => crate::dot::twocat_dot(name, &ws::pro_raw(&ws::parse_doc(&text, &ctx)?, &ctx)?.index),
        Kind::Diag => crate::dot::twocat_dot(name, &ws::diag_raw(&ws::parse_doc(&text, &ctx)?, &ctx)?.index),
        other => return Err(CliError::Input(format!("no 1-skeleton to draw for a .{} document", other.extension()))),
    };
    let mut o = Outcome::new("export-dot");
    o.body = Some(body);
    Ok(o)
}

fn eval(path: &Path, expr: &str, equals: Option<&str>) -> Res {
    let k = twocat_file(path)?;
    let env = CellEnv::of_names(&k);
    let input = |e: PastingError| match e {
        PastingError::UnknownAtom(n) => unknown("cell", &n),
        e => CliError::Input(e.to_string()),
    };
    let e1 = parse_elevator(expr).map_err(input)?;
    let mut o = Outcome::new("eval");
    let v = evaluate(&e1, &env).map_err(input)?;
    o.field("value", k.cell_name(v));
    o.field("type", format!("{} ⇒ {}", k.arrow_name(k.csrc(v)), k.arrow_name(k.ctgt(v))));
    if let Some(e2) = equals {
        let e2 = parse_elevator(e2).map_err(input)?;
        o.verdict("equal", equal(&e1, &e2, &env).map_err(input)?);
    }
    Ok(o)
}

fn named_fixture(name: &str) -> Option<Result<FinCat, TwoCat>> {
    Some(match name {
        "terminal" => Ok(FinCat::terminal()),
        "two" => Ok(fixtures::chain(2)),
        "chain3" => Ok(fixtures::chain(3)),
        "vee" => Ok(fixtures::vee()),
        "z2" => Ok(fixtures::z2()),
        "walking-iso" => Ok(fixtures::walking_iso()),
        "parallel-pair" => Ok(fixtures::parallel_pair()),
        "iso-square" => Ok(fixtures::iso_square()),
        "z2-cells" => Err(fixtures::z2_cells()),
        "point-into-z2" => Err(fixtures::point_into_z2()),
        "arrow-and-iso" => Err(fixtures::arrow_and_iso()),
        "endo-arrow" => Err(fixtures::endo_arrow()),
        "z2-and-arrow" => Err(fixtures::z2_and_arrow()),
        _ => return None,
    })
}

pub const FIXTURES: [&str; 13] = [
    "terminal",
    "two",
    "chain3",
    "vee",
    "z2",
    "walking-iso",
    "parallel-pair",
    "iso-square",
    "z2-cells",
    "point-into-z2",
    "arrow-and-iso",
    "endo-arrow",
    "z2-and-arrow",
];

fn fixture(name: &str, two: bool) -> Res {
    let f = named_fixture(name).ok_or_else(|| CliError::Input(format!("unknown fixture {name:?}; known: {}", FIXTURES.join(", "))))?;
    let mut o = Outcome::new("fixture");
    o.body = Some(match f {
        Ok(c) if two => to_canonical(&ws::twocat_doc(&TwoCat::locally_discrete(&c))),
        Ok(c) => to_canonical(&ws::cat_doc(&c)),
        Err(k) => to_canonical(&ws::twocat_doc(&k)),
    });
    o.field("document", json!(name));
    Ok(o)
}
