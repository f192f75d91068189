//! One line per acceptance criterion. Exit status is nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::{model_oracle, random_pro_object, random_terminal_diagram};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twocat::core::twocat::{interchange_grids, interchange_sides};
use twocat::core::{equivalence_of_categories, hom_category, EquivalenceDecision, FinFunctor, Table, TwoCat};
use twocat::fixtures;
use twocat::kan::{comparison_functor, ll_colimit, CatDiagram, Comparison, Variance};
use twocat::maps::{PseudoFunctor, PseudoFunctorOf};
use twocat::model::*;
use twocat::pasting::elevator_sides;
use twocat::pro::*;
use twocat::shape::hat::{enumerate_pseudo_functors, enumerate_strict_hat_functors, hat_table, restrict_along_t, transport_data};
use twocat::shape::mj::terminal_object;
use twocat::shape::{build_hat, build_mj, check_2filtered, transport_along_hat};

const INTERCHANGE_SAMPLES: usize = 1000;
const INTERCHANGE_BUDGET: Duration = Duration::from_secs(1);
const MUTATIONS: usize = 200;
const COLIMIT_DIAGRAMS: usize = 20;
const COLIMIT_BUDGET: Duration = Duration::from_secs(10);
const PRO_REINDEX: usize = 10;
const REPRESENT_INPUTS: usize = 50;
const RETRACT_INPUTS: usize = 50;
const TRANSFER_PAIRS: usize = 20;
const CLASS_ASSIGNMENTS: usize = 30;
const HAT_PROBE: usize = 4;

type Outcome = Result<String, String>;

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("interchange", interchange),
        ("fault-injection", fault_injection),
        ("colimit-vs-terminal", colimit_oracle),
        ("comparison", comparison),
        ("mj-truncations", mj_truncations),
        ("hat-and-t", hat_and_t),
        ("pro-homs", pro_homs),
        ("representability", representability),
        ("lifting-and-retracts", lifting_and_retracts),
        ("model-axioms", model_axioms),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("criterion {:>2} {name}: PASS ({msg}; {t:.2}s)", n + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({msg}; {t:.2}s)", n + 1)
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

// 1 -------------------------------------------------------------------------

fn interchange() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let ks = fixtures::interchange_fixtures();
    let grids: Vec<_> = ks.iter().map(|(_, k)| interchange_grids(k)).collect();
    let start = Instant::now();
    let mut checked = 0;
    for n in 0..INTERCHANGE_SAMPLES {
        // round robin over fixtures so each contributes
        let (name, k) = &ks[n % ks.len()];
        let &(a, b, a2, b2) = grids[n % ks.len()].choose(&mut rng).ok_or(format!("{name} has no grid"))?;
        let (l, r) = interchange_sides(k, a, b, a2, b2).ok_or(format!("{name}: grid does not compose"))?;
        ensure(l == r, || format!("{name}: interchange fails at {}", k.cell_name(a)))?;
        let (x, y) = (k.vert(b, a).unwrap(), k.vert(b2, a2).unwrap());
        let [s1, s2, s3] = elevator_sides(k, &x, &y).ok_or(format!("{name}: elevator does not compose"))?;
        ensure(s1 == s2 && s2 == s3, || format!("{name}: elevator sides differ"))?;
        checked += 1;
    }
    let t = start.elapsed();
    ensure(t < INTERCHANGE_BUDGET, || format!("{t:?} over budget"))?;
    Ok(format!("{checked} grids over {} fixtures in {:.0} ms", ks.len(), t.as_secs_f64() * 1e3))
}

// 2 -------------------------------------------------------------------------

/// The 2-category laws evaluated straight from the accessors.
fn lawful(k: &TwoCat) -> bool {
    let arrows: Vec<usize> = k.arrows().collect();
    let cells: Vec<usize> = k.cells().collect();
    for &f in &arrows {
        if k.comp1(k.id1(k.tgt(f)), f) != Some(f) || k.comp1(f, k.id1(k.src(f))) != Some(f) {
            return false;
        }
        for &g in &arrows {
            if k.src(g) != k.tgt(f) {
                continue;
            }
            let Some(gf) = k.comp1(g, f) else { return false };
            if k.src(gf) != k.src(f) || k.tgt(gf) != k.tgt(g) {
                return false;
            }
            for &h in &arrows {
                if k.src(h) == k.tgt(g) && k.comp1(h, gf) != k.comp1(h, g).and_then(|hg| k.comp1(hg, f)) {
                    return false;
                }
            }
        }
    }
    let id2 = |f: usize| k.id2(f);
    for &a in &cells {
        let (f, g) = (k.csrc(a), k.ctgt(a));
        if k.vert(id2(g), a) != Some(a) || k.vert(a, id2(f)) != Some(a) {
            return false;
        }
        let (x, y) = (k.src(f), k.tgt(f));
        if k.horiz(id2(k.id1(y)), a) != Some(a) || k.horiz(a, id2(k.id1(x))) != Some(a) {
            return false;
        }
        for &b in &cells {
            if k.csrc(b) == g {
                let Some(ba) = k.vert(b, a) else { return false };
                if k.csrc(ba) != f || k.ctgt(ba) != k.ctgt(b) {
                    return false;
                }
                for &c in &cells {
                    if k.csrc(c) == k.ctgt(b) && k.vert(c, ba) != k.vert(c, b).and_then(|cb| k.vert(cb, a)) {
                        return false;
                    }
                }
            }
            if k.src(k.csrc(b)) == y {
                let Some(ba) = k.horiz(b, a) else { return false };
                if Some(k.csrc(ba)) != k.comp1(k.csrc(b), f) || Some(k.ctgt(ba)) != k.comp1(k.ctgt(b), g) {
                    return false;
                }
                for &c in &cells {
                    if k.src(k.csrc(c)) == k.tgt(k.csrc(b)) && k.horiz(c, ba) != k.horiz(c, b).and_then(|cb| k.horiz(cb, a)) {
                        return false;
                    }
                }
            }
        }
    }
    for &f in &arrows {
        for &g in &arrows {
            if k.src(g) == k.tgt(f) && k.horiz(id2(g), id2(f)) != k.comp1(g, f).map(id2) {
                return false;
            }
        }
    }
    interchange_grids(k).into_iter().all(|(a, b, a2, b2)| matches!(interchange_sides(k, a, b, a2, b2), Some((l, r)) if l == r))
}

fn fault_injection() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let ks: Vec<TwoCat> = fixtures::interchange_fixtures().into_iter().map(|(_, k)| k).collect();
    let (mut breaking, mut flagged, mut preserving) = (0, 0, 0);
    for _ in 0..MUTATIONS {
        let k = ks.choose(&mut rng).unwrap();
        let t = *[Table::HComp1, Table::VComp, Table::HComp2].choose(&mut rng).unwrap();
        let entries = k.table_entries(t);
        let &(key, old) = entries.choose(&mut rng).unwrap();
        let range = if t == Table::HComp1 { k.arrow_count() } else { k.cell_count() };
        let new = loop {
            let v = rng.gen_range(0..range);
            if v != old || range == 1 {
                break v;
            }
        };
        let m = k.with_entry(t, key, new);
        let reported = !twocat::core::validate_twocat(&m).is_ok();
        if lawful(&m) {
            preserving += 1;
            ensure(!reported, || format!("lawful mutation {t:?} {key:?} -> {new} was flagged"))?;
        } else {
            breaking += 1;
            if reported {
                flagged += 1;
            }
        }
    }
    ensure(flagged == breaking, || format!("flagged {flagged} of {breaking} law-breaking mutations"))?;
    Ok(format!("{flagged}/{breaking} law-breaking flagged, {preserving} law-preserving rechecked"))
}

// 3 -------------------------------------------------------------------------

fn colimit_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut slowest = Duration::ZERO;
    for n in 0..COLIMIT_DIAGRAMS {
        let (d, t) = random_terminal_diagram(&mut rng);
        ensure(check_2filtered(&d.index).is_filtered(), || format!("diagram {n}: index not 2-filtered"))?;
        ensure(terminal_object(&d.index) == Some(t), || format!("diagram {n}: no 2-terminal object"))?;
        let start = Instant::now();
        let l = ll_colimit(&d).map_err(|e| format!("diagram {n}: {e}"))?;
        let dec = equivalence_of_categories(&d.cats[t], &l.cat, l.leg(t));
        let took = start.elapsed();
        slowest = slowest.max(took);
        ensure(dec.is_yes(), || format!("diagram {n}: {dec:?}"))?;
        ensure(took < COLIMIT_BUDGET, || format!("diagram {n}: {took:?}"))?;
    }
    Ok(format!("{COLIMIT_DIAGRAMS} diagrams, slowest {:.0} ms", slowest.as_secs_f64() * 1e3))
}

// 4 -------------------------------------------------------------------------

/// The witness re-read: every target object is isomorphic to the image of
/// its recorded preimage, and every hom-set was checked.
fn certificate_holds(c: &Comparison) -> bool {
    let EquivalenceDecision::Yes(w) = &c.decision else { return false };
    let (s, t) = (&c.source.cat, &c.target.cat);
    let n = s.object_count();
    w.homs_checked == n * n
        && w.preimage.len() == t.object_count()
        && w.preimage.iter().enumerate().all(|(y, &(x, iso))| {
            t.src(iso) == c.functor.obj[x] && t.tgt(iso) == y && t.is_iso(iso)
        })
}

fn point_at(one: &TwoCat, i: &TwoCat, t: usize) -> PseudoFunctorOf<TwoCat, TwoCat> {
    PseudoFunctor::strict(one, i, [(0, t)].into(), [(0, i.id1(t))].into(), [(0, i.id2(i.id1(t)))].into())
}

fn diagrams_on(j: &TwoCat) -> Vec<CatDiagram> {
    if j.object_count() == 1 {
        return [fixtures::z2(), fixtures::walking_iso(), fixtures::chain(2)]
            .iter()
            .map(|c| CatDiagram::constant(j.clone(), Variance::Covariant, c))
            .collect();
    }
    let mut out = Vec::new();
    for (c, d) in [(fixtures::z2(), fixtures::chain(2)), (fixtures::chain(2), fixtures::walking_iso())] {
        for g in twocat::core::catuni::enumerate_functors(&c, &d) {
            out.push(common::arrow_diagram(c.clone(), d.clone(), g, Variance::Covariant));
        }
    }
    out
}

fn comparison() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let one = TwoCat::terminal();
    let mut done = 0;
    for n in 0..COLIMIT_DIAGRAMS {
        let (d, t) = random_terminal_diagram(&mut rng);
        let c = comparison_functor(&one, &d.index, &point_at(&one, &d.index, t), &d).map_err(|e| format!("diagram {n}: {e}"))?;
        ensure(certificate_holds(&c), || format!("diagram {n}: {:?}", c.decision))?;
        done += 1;
    }
    let mut phis = 0;
    for j in [TwoCat::terminal(), TwoCat::two()] {
        for size in 1..=2 {
            let mj = build_mj(&j, size, 1, None).map_err(|e| e.to_string())?;
            let (cat, phi) = mj.truncation.capped(&j, &mj.truncation.of_size(size)).map_err(|e| e.to_string())?;
            for g in diagrams_on(&j) {
                let c = comparison_functor(&cat, &j, &phi, &g).map_err(|e| format!("Φ for n={size}: {e}"))?;
                ensure(certificate_holds(&c), || format!("Φ for n={size}: {:?}", c.decision))?;
                phis += 1;
            }
        }
    }
    Ok(format!("{done} top inclusions, {phis} Φ comparisons, certificates rechecked"))
}

// 5 -------------------------------------------------------------------------

fn mj_truncations() -> Outcome {
    let mut lines = Vec::new();
    for (name, j) in [("terminal", TwoCat::terminal()), ("𝟚", TwoCat::two())] {
        for n in 1..=3 {
            let mj = build_mj(&j, n, 1, None).map_err(|e| e.to_string())?;
            let r = &mj.report;
            ensure(r.cofinite, || format!("{name}, n={n}: not cofinite"))?;
            ensure(r.filtered_ok(), || format!("{name}, n={n}: {r}"))?;
            ensure(r.cofinal.is_cofinal(), || format!("{name}, n={n}: Φ fails CF0-CF2 at slack 1"))?;
            lines.push(format!("{name}/{n}:{}", mj.truncation.elements.len()));
        }
    }
    Ok(lines.join(" "))
}

// 6 -------------------------------------------------------------------------

fn hat_and_t() -> Outcome {
    let targets = [fixtures::point_into_z2(), fixtures::z2_cells(), TwoCat::two(), fixtures::endo_arrow()];
    let mut total = 0;
    for a in [fixtures::chain(3), fixtures::vee()] {
        ensure(a.object_count() == 3 && check_2filtered(&TwoCat::locally_discrete(&a)).is_filtered(), || "A".into())?;
        let (_, hat, t) = build_hat(&a, HAT_PROBE);
        let probe = hat.probe(HAT_PROBE);
        for c in &targets {
            ensure(c.object_count() <= 2 && c.arrow_count() <= 4, || "C too large".into())?;
            let pseudo = enumerate_pseudo_functors(&a, c);
            let strict = enumerate_strict_hat_functors(&a, c, HAT_PROBE);
            ensure(pseudo.len() == strict.len(), || format!("{} pseudo vs {} strict", pseudo.len(), strict.len()))?;
            for f in &pseudo {
                let g = transport_along_hat(&hat, c, f, &probe).ok_or("transport failed")?;
                ensure(restrict_along_t::<TwoCat>(&t, &g).as_ref() == Some(f), || "restrict ∘ transport ≠ id".into())?;
            }
            for d in &strict {
                let g = hat_table(&hat, c, d, &probe).ok_or("strict data has no table")?;
                let f = restrict_along_t::<TwoCat>(&t, &g).ok_or("restriction failed")?;
                ensure(transport_data::<TwoCat>(&a, &f).as_ref() == Some(d), || "transport ∘ restrict ≠ id".into())?;
                let back = transport_along_hat(&hat, c, &f, &probe).ok_or("transport failed")?;
                ensure(back == g, || "transported map differs from the strict one".into())?;
            }
            total += pseudo.len();
        }
    }
    Ok(format!("{total} maps matched over 2 posets and {} targets", targets.len()))
}

// 7 -------------------------------------------------------------------------

fn pro_homs() -> Outcome {
    let c = fixtures::arrow_and_iso();
    for a in c.objects() {
        for b in c.objects() {
            let h = pro_hom(&ProObject::constant(&c, a), &ProObject::constant(&c, b)).map_err(|e| e.to_string())?;
            let direct = hom_category(&c, a, b).map_err(|e| e.to_string())?;
            let same = FinFunctor { obj: direct.objects().collect(), mor: direct.morphisms().collect() };
            let l = h.inner[0].cat();
            ensure(
                direct.object_count() == l.object_count()
                    && direct.morphism_count() == l.morphism_count()
                    && equivalence_of_categories(&direct, l, &same).is_yes(),
                || format!("Pro(c{a}, c{b}) is not C({a}, {b})"),
            )?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let one = TwoCat::terminal();
    for n in 0..PRO_REINDEX {
        let x = random_pro_object(&mut rng);
        let t = terminal_object(&x.index).ok_or("no top")?;
        let inc = point_at(&one, &x.index, t);
        let r = reindex(&x, &one, &inc).map_err(|e| e.to_string())?;
        ensure(r.is_equivalence(), || format!("object {n}: reindex is not invariant"))?;
        for d in x.target.objects() {
            let y = ProObject::constant(&x.target, d);
            let (_, dec) = hom_comparison(&pro_hom(&r.object, &y).unwrap(), &pro_hom(&x, &y).unwrap(), &inc).map_err(|e| e.to_string())?;
            ensure(dec.is_yes(), || format!("object {n}: hom into {d} changes"))?;
        }
        let s = ProSlice::new(&x).map_err(|e| e.to_string())?;
        for i in x.index.objects() {
            let p = s.pi(i).ok_or("no projection")?;
            ensure(s.homs[i].decode(p) == (i, x.target.id1(x.obj[i])), || format!("object {n}: π_{i} decodes wrongly"))?;
        }
        ensure(check_projections(&x).map_err(|e| e.to_string())?.is_ok(), || "projection cells".into())?;
    }
    Ok(format!("constants on {} objects, {PRO_REINDEX} reindexed objects", c.object_count()))
}

// 8 -------------------------------------------------------------------------

/// Some `u: i -> i'` whiskers every pair equal.
fn equalizable(x: &ProObject, i: usize, pairs: &[(usize, usize)]) -> bool {
    let (k, c) = (&x.index, &x.target);
    k.arrows().filter(|&u| k.src(u) == i).any(|u| pairs.iter().all(|&(a, b)| c.rwhisker(a, x.arrow[u]) == c.rwhisker(b, x.arrow[u])))
}

fn representability() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut reps, mut straight, mut eq, mut rejected, mut tries) = (0, 0, 0, 0, 0);
    while reps < REPRESENT_INPUTS || straight < REPRESENT_INPUTS || eq < REPRESENT_INPUTS || rejected == 0 {
        tries += 1;
        ensure(tries < 20_000, || format!("ran out of inputs: {reps}/{straight}/{eq}/{rejected}"))?;
        let x = random_pro_object(&mut rng);
        let c = &x.target;
        let d = rng.gen_range(0..c.object_count());
        let y = ProObject::constant(c, d);
        let h = pro_hom(&x, &y).map_err(|e| e.to_string())?;
        if reps < REPRESENT_INPUTS && h.cat().object_count() > 0 {
            let f = rng.gen_range(0..h.cat().object_count());
            let rep = find_representative(&h, f, 0);
            ensure(check_represents(&h, &rep, f).unwrap_or(false), || format!("element {f} not represented"))?;
            reps += 1;
        }
        let l = x.hom_into(d).map_err(|e| e.to_string())?;
        if straight < REPRESENT_INPUTS && l.cat().morphism_count() > 0 {
            let m = rng.gen_range(0..l.cat().morphism_count());
            let st = straighten(&x, &l, m).map_err(|e| e.to_string())?;
            ensure(straightening_holds(&l, m, &st), || format!("morphism {m} not straightened"))?;
            straight += 1;
        }
        let i = rng.gen_range(0..x.index.object_count());
        let rs = c.hom1(x.obj[i], d);
        let Some(&r) = rs.choose(&mut rng) else { continue };
        let Some(&r2) = rs.choose(&mut rng) else { continue };
        let cells = c.hom2(r, r2);
        if cells.is_empty() {
            continue;
        }
        let pairs: Vec<(usize, usize)> = (0..rng.gen_range(1..=2)).map(|_| (*cells.choose(&mut rng).unwrap(), *cells.choose(&mut rng).unwrap())).collect();
        match equalize(&x, &l, i, &pairs) {
            Ok(u) => {
                ensure(x.index.src(u) == i, || "u starts elsewhere".into())?;
                ensure(pairs.iter().all(|&(a, b)| c.rwhisker(a, x.arrow[u]) == c.rwhisker(b, x.arrow[u])), || "u does not equalize".into())?;
                eq += 1;
            }
            Err(ProError::HypothesisFails(_)) => {
                ensure(!equalizable(&x, i, &pairs), || "rejected an equalizable input".into())?;
                rejected += 1;
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(format!("{reps} representatives, {straight} straightenings, {eq} equalizers, {rejected} rejections verified"))
}

// 9 -------------------------------------------------------------------------

fn iso_pair() -> TwoCat {
    TwoCat::locally_discrete(&fixtures::walking_iso())
}

fn factorizations_with_cells(k: &TwoCat) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for f in k.arrows() {
        for (i, p) in factorizations(k, &f) {
            for &g in k.hom2(k.comp1(p, i).unwrap(), f) {
                if k.is_invertible(g) {
                    out.push((f, i, p, g));
                }
            }
        }
    }
    out
}

fn identity_retract(k: &TwoCat, f: usize) -> RetractData {
    let (c, d) = (k.src(f), k.tgt(f));
    RetractData {
        theta0: k.id1(c),
        theta1: k.id1(d),
        theta_m: k.id2(f),
        eta0: k.id1(c),
        eta1: k.id1(d),
        eta_m: k.id2(f),
        mu0: k.id2(k.id1(c)),
        mu1: k.id2(k.id1(d)),
    }
}

fn lifting_and_retracts() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let ks = [fixtures::point_into_z2(), iso_pair(), fixtures::z2_and_arrow()];
    let (mut done, mut no_filler) = (0, 0);
    while done < RETRACT_INPUTS {
        let k = ks.choose(&mut rng).unwrap();
        let &(f, i, p, g) = factorizations_with_cells(k).choose(&mut rng).unwrap();
        let case = if rng.gen_bool(0.5) { RetractCase::OfI } else { RetractCase::OfP };
        match retract_argument(k, &f, &i, &p, &g, case, None) {
            Ok(r) => {
                let of = if case == RetractCase::OfI { i } else { p };
                ensure(check_retract(k, &f, &of, &r).unwrap_or(false), || "retract_argument output fails check_retract".into())?;
                done += 1;
            }
            Err(ModelError::NoFiller(_)) => {
                let sq = retract_square(k, &f, &i, &p, &g, case).map_err(|e| e.to_string())?;
                ensure(!model_oracle::fills(k, sq.i, sq.p, sq.a, sq.b, sq.gamma), || "NoFiller on a fillable square".into())?;
                no_filler += 1;
            }
            Err(e) => return Err(e.to_string()),
        }
    }

    // retract pairs: f′ a retract of p, i′ a retract of i, checked first
    let mut pairs = 0;
    for k in &ks {
        let mut of_p: Vec<(usize, usize, RetractData)> = k.arrows().map(|f| (f, f, identity_retract(k, f))).collect();
        for (f, i, p, g) in factorizations_with_cells(k) {
            if let Ok(r) = retract_argument(k, &f, &i, &p, &g, RetractCase::OfP, None) {
                of_p.push((f, p, r));
            }
        }
        for (p2, p, rp) in &of_p {
            ensure(check_retract(k, p2, p, rp).unwrap_or(false), || "hand-built retract fails check_retract".into())?;
            for i in k.arrows() {
                if !has_lifting(k, &i, p) {
                    continue;
                }
                let ri = identity_retract(k, i);
                let outers = squares(k, &i, p2);
                if outers.is_empty() {
                    continue;
                }
                for sq in &outers {
                    let fl = transfer_lifting(k, p2, p, rp, &i, &i, &ri, sq, None).map_err(|e| e.to_string())?;
                    ensure(check_filler(k, sq, &fl), || "transferred filler fails the filler equation".into())?;
                }
                pairs += 1;
            }
        }
    }
    ensure(pairs >= TRANSFER_PAIRS, || format!("only {pairs} retract pairs"))?;

    let mut squares_checked = 0;
    for k in [fixtures::point_into_z2(), iso_pair()] {
        ensure(k.cell_count() <= 8, || "fixture over 8 cells".into())?;
        for i in k.arrows() {
            for p in k.arrows() {
                for sq in squares(&k, &i, &p) {
                    let got = solve_lifting(&k, &sq).map_err(|e| e.to_string())?;
                    ensure(got.is_some() == model_oracle::fills(&k, sq.i, sq.p, sq.a, sq.b, sq.gamma), || "solve_lifting disagrees".into())?;
                    if let Some(fl) = got {
                        ensure(check_filler(&k, &sq, &fl), || "filler fails its equation".into())?;
                    }
                    squares_checked += 1;
                }
            }
        }
    }
    Ok(format!("{done} retractions ({no_filler} NoFiller confirmed), {pairs} transfer pairs, {squares_checked} squares"))
}

// 10 ------------------------------------------------------------------------

fn model_axioms() -> Outcome {
    let k = TwoCat::terminal();
    let all: BTreeSet<usize> = k.arrows().collect();
    let r = check_model_axioms(&k, &ModelClasses { fibrations: all.clone(), cofibrations: all.clone(), weak_equivalences: all });
    ensure(r.all_pass(), || format!("terminal: {r}"))?;
    ensure(matches!(r.verdict(Axiom::M0b), Verdict::NotChecked(_)), || "2-M0b was checked".into())?;

    let six = TwoCat::locally_discrete(&fixtures::chain(3));
    ensure(six.cell_count() == 6, || "six-cell fixture".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut compared = 0;
    for n in 0..CLASS_ASSIGNMENTS {
        let mut pick = || -> BTreeSet<usize> { six.arrows().filter(|_| rng.gen_bool(0.6)).collect() };
        let c = ModelClasses { fibrations: pick(), cofibrations: pick(), weak_equivalences: pick() };
        let r = check_model_axioms(&six, &c);
        for (a, pass) in model_oracle::axioms(&six, &c) {
            ensure(r.verdict(a).passed() == pass, || format!("assignment {n}, {a}: oracle says {pass}"))?;
            compared += 1;
        }
    }
    Ok(format!("terminal passes, {compared} verdicts match the oracle"))
}

