//! Reading documents into library structures and writing them back.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use thiserror::Error;
use twocat::core::{validate_fincat, validate_twocat, Entry, FinCat, FinFunctor, Mor, NatTrans, Table, TwoCat};
use twocat::kan::{CatCone, CatDiagram, Variance};
use twocat::maps::{check_pseudo_functor, Probe, PseudoFunctor, PseudoFunctorOf};
use twocat::model::{check_square, LiftingSquare, ModelClasses};
use twocat::pro::ProObject;

use crate::format::*;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("SchemaError({path}, {location}): {message}")]
    Schema { path: String, location: String, message: String },
    #[error("UnknownName({path}, {location}): no {kind} named {name:?}")]
    UnknownName { path: String, location: String, kind: &'static str, name: String },
    /// Well-formed, but a law or boundary condition fails.
    #[error("Invalid({path}, {location}): {message}")]
    Invalid { path: String, location: String, message: String },
}

/// Where a document came from: the file, its directory for relative
/// references, and the key path of an inlined document inside that file.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub path: String,
    pub dir: PathBuf,
    pub prefix: String,
}

impl Ctx {
    pub fn file(path: &Path) -> Ctx {
        Ctx { path: path.display().to_string(), dir: path.parent().map(Path::to_path_buf).unwrap_or_default(), prefix: String::new() }
    }

    fn at(&self, loc: impl AsRef<str>) -> String {
        match (self.prefix.is_empty(), loc.as_ref()) {
            (true, "") => "(root)".into(),
            (true, l) => l.to_string(),
            (false, "") => self.prefix.clone(),
            (false, l) => format!("{}.{l}", self.prefix),
        }
    }

    pub fn schema(&self, loc: impl AsRef<str>, message: impl Into<String>) -> LoadError {
        LoadError::Schema { path: self.path.clone(), location: self.at(loc), message: message.into() }
    }

    pub fn invalid(&self, loc: impl AsRef<str>, message: impl Into<String>) -> LoadError {
        LoadError::Invalid { path: self.path.clone(), location: self.at(loc), message: message.into() }
    }

    fn unknown(&self, loc: impl AsRef<str>, kind: &'static str, name: &str) -> LoadError {
        LoadError::UnknownName { path: self.path.clone(), location: self.at(loc), kind, name: name.to_string() }
    }
}

/// Parses a document, reporting the key path and line of the first error.
pub fn parse_doc<T: DeserializeOwned>(text: &str, ctx: &Ctx) -> Result<T, LoadError> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| ctx.schema("", e.to_string()))?;
    match v.get("format_version").and_then(|x| x.as_u64()) {
        Some(n) if n == FORMAT_VERSION as u64 => {}
        Some(n) => return Err(ctx.schema("format_version", format!("unsupported version {n}, expected {FORMAT_VERSION}"))),
        None => return Err(ctx.schema("format_version", "missing")),
    }
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let loc = e.path().to_string();
        let inner = e.into_inner();
        let msg = inner.to_string();
        let msg = msg.rsplit_once(" at line ").map_or(msg.as_str(), |(m, _)| m);
        ctx.schema(if loc == "." { String::new() } else { loc }, format!("line {} column {}: {msg}", inner.line(), inner.column()))
    })
}

pub fn read_file(path: &Path) -> Result<String, LoadError> {
    std::fs::read_to_string(path).map_err(|e| Ctx::file(path).schema("", format!("cannot read: {e}")))
}

pub fn load_doc<T: DeserializeOwned>(path: &Path) -> Result<(T, Ctx), LoadError> {
    let ctx = Ctx::file(path);
    Ok((parse_doc(&read_file(path)?, &ctx)?, ctx))
}

/// The document behind a reference with the context to read it in.
pub fn resolve<T: DeserializeOwned + Clone>(r: &Ref<T>, ctx: &Ctx, field: &str) -> Result<(T, Ctx), LoadError> {
    match r {
        Ref::Inline(doc) => {
            let prefix = if ctx.prefix.is_empty() { field.to_string() } else { format!("{}.{field}", ctx.prefix) };
            Ok(((**doc).clone(), Ctx { prefix, ..ctx.clone() }))
        }
        Ref::Path(p) => {
            let full = ctx.dir.join(p);
            if !full.exists() {
                return Err(ctx.schema(field, format!("referenced file {p} not found")));
            }
            load_doc(&full)
        }
    }
}

struct Names<'a> {
    map: HashMap<&'a str, usize>,
    kind: &'static str,
}

impl<'a> Names<'a> {
    fn new(items: impl IntoIterator<Item = &'a str>, kind: &'static str, ctx: &Ctx, loc: &str) -> Result<Names<'a>, LoadError> {
        let mut map = HashMap::new();
        for (n, s) in items.into_iter().enumerate() {
            if map.insert(s, n).is_some() {
                return Err(ctx.schema(format!("{loc}[{n}]"), format!("duplicate {kind} name {s:?}")));
            }
        }
        Ok(Names { map, kind })
    }

    fn get(&self, name: &str, ctx: &Ctx, loc: impl AsRef<str>) -> Result<usize, LoadError> {
        self.map.get(name).copied().ok_or_else(|| ctx.unknown(loc, self.kind, name))
    }
}

fn cat_names(c: &FinCat) -> (HashMap<&str, usize>, HashMap<&str, usize>) {
    (
        c.object_names().iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect(),
        c.morphism_entries().iter().enumerate().map(|(i, m)| (m.name.as_str(), i)).collect(),
    )
}

fn lookup(map: &HashMap<&str, usize>, kind: &'static str, name: &str, ctx: &Ctx, loc: String) -> Result<usize, LoadError> {
    map.get(name).copied().ok_or_else(|| ctx.unknown(loc, kind, name))
}

fn lines(r: impl std::fmt::Display) -> String {
    r.to_string().trim().replace('\n', "; ")
}

// ---------------------------------------------------------------- categories

/// Builds the category without checking its laws.
pub fn cat_raw(doc: &CatDoc, ctx: &Ctx) -> Result<FinCat, LoadError> {
    let objs = Names::new(doc.objects.iter().map(String::as_str), "object", ctx, "objects")?;
    let mut morphisms = Vec::new();
    for (n, e) in doc.morphisms.iter().enumerate() {
        let src = objs.get(&e.src, ctx, format!("morphisms[{n}].src"))?;
        let tgt = objs.get(&e.tgt, ctx, format!("morphisms[{n}].tgt"))?;
        morphisms.push(Mor { name: e.name.clone(), src, tgt });
    }
    let mors = Names::new(doc.morphisms.iter().map(|e| e.name.as_str()), "morphism", ctx, "morphisms")?;
    if doc.identities.len() != doc.objects.len() {
        return Err(ctx.schema("identities", "one identity per object is required"));
    }
    let identity = doc.identities.iter().enumerate().map(|(n, s)| mors.get(s, ctx, format!("identities[{n}]"))).collect::<Result<Vec<_>, _>>()?;
    let mut comp = Vec::new();
    for (i, m) in morphisms.iter().enumerate() {
        comp.push(((identity[m.tgt], i), i));
        comp.push(((i, identity[m.src]), i));
    }
    for (n, [g, f, gf]) in doc.compose.iter().enumerate() {
        let at = |k: usize| format!("compose[{n}][{k}]");
        comp.push(((mors.get(g, ctx, at(0))?, mors.get(f, ctx, at(1))?), mors.get(gf, ctx, at(2))?));
    }
    FinCat::from_parts(doc.objects.clone(), morphisms, identity, comp).map_err(|e| ctx.schema("", e.to_string()))
}

pub fn cat(doc: &CatDoc, ctx: &Ctx) -> Result<FinCat, LoadError> {
    let c = cat_raw(doc, ctx)?;
    let r = validate_fincat(&c);
    if !r.is_ok() {
        return Err(ctx.invalid("", lines(r)));
    }
    Ok(c)
}

pub fn cat_doc(c: &FinCat) -> CatDoc {
    let m = c.morphism_entries();
    let id = c.identity_table();
    let implied = |g: usize, f: usize, gf: usize| (id[m[f].tgt] == g && gf == f) || (id[m[g].src] == f && gf == g);
    let mut entries = c.composition_entries();
    entries.sort();
    CatDoc {
        format_version: FORMAT_VERSION,
        objects: c.object_names().to_vec(),
        morphisms: m.iter().map(|e| entry_doc(&e.name, c.object_name(e.src), c.object_name(e.tgt))).collect(),
        identities: id.iter().map(|&i| m[i].name.clone()).collect(),
        compose: entries
            .into_iter()
            .filter(|&((g, f), gf)| !implied(g, f, gf))
            .map(|((g, f), gf)| [m[g].name.clone(), m[f].name.clone(), m[gf].name.clone()])
            .collect(),
    }
}

fn entry_doc(name: &str, src: &str, tgt: &str) -> EntryDoc {
    EntryDoc { name: name.into(), src: src.into(), tgt: tgt.into() }
}

// ------------------------------------------------------------ 2-categories

pub fn twocat_raw(doc: &TwoCatDoc, ctx: &Ctx) -> Result<TwoCat, LoadError> {
    let objs = Names::new(doc.objects.iter().map(String::as_str), "object", ctx, "objects")?;
    let mut arrows = Vec::new();
    for (n, e) in doc.arrows.iter().enumerate() {
        let src = objs.get(&e.src, ctx, format!("arrows[{n}].src"))?;
        let tgt = objs.get(&e.tgt, ctx, format!("arrows[{n}].tgt"))?;
        arrows.push(Entry { name: e.name.clone(), src, tgt });
    }
    let ars = Names::new(doc.arrows.iter().map(|e| e.name.as_str()), "1-cell", ctx, "arrows")?;
    let mut cells = Vec::new();
    for (n, e) in doc.cells.iter().enumerate() {
        let src = ars.get(&e.src, ctx, format!("cells[{n}].src"))?;
        let tgt = ars.get(&e.tgt, ctx, format!("cells[{n}].tgt"))?;
        cells.push(Entry { name: e.name.clone(), src, tgt });
    }
    let cls = Names::new(doc.cells.iter().map(|e| e.name.as_str()), "2-cell", ctx, "cells")?;
    if doc.identities.len() != doc.objects.len() {
        return Err(ctx.schema("identities", "one identity 1-cell per object is required"));
    }
    if doc.cell_identities.len() != doc.arrows.len() {
        return Err(ctx.schema("cell_identities", "one identity 2-cell per 1-cell is required"));
    }
    let id1 = doc.identities.iter().enumerate().map(|(n, s)| ars.get(s, ctx, format!("identities[{n}]"))).collect::<Result<Vec<_>, _>>()?;
    let id2 = doc.cell_identities.iter().enumerate().map(|(n, s)| cls.get(s, ctx, format!("cell_identities[{n}]"))).collect::<Result<Vec<_>, _>>()?;
    let triples = |list: &[[String; 3]], names: &Names, field: &str| -> Result<Vec<((usize, usize), usize)>, LoadError> {
        list.iter()
            .enumerate()
            .map(|(n, [x, y, z])| {
                let at = |k: usize| format!("{field}[{n}][{k}]");
                Ok(((names.get(x, ctx, at(0))?, names.get(y, ctx, at(1))?), names.get(z, ctx, at(2))?))
            })
            .collect()
    };
    let mut h1 = Vec::new();
    for (i, a) in arrows.iter().enumerate() {
        h1.push(((id1[a.tgt], i), i));
        h1.push(((i, id1[a.src]), i));
    }
    h1.extend(triples(&doc.compose, &ars, "compose")?);
    let mut v = Vec::new();
    let mut h2 = Vec::new();
    for (i, c) in cells.iter().enumerate() {
        v.push(((id2[c.tgt], i), i));
        v.push(((i, id2[c.src]), i));
        let f = &arrows[c.src];
        h2.push(((id2[id1[f.tgt]], i), i));
        h2.push(((i, id2[id1[f.src]]), i));
    }
    v.extend(triples(&doc.vertical, &cls, "vertical")?);
    h2.extend(triples(&doc.horizontal, &cls, "horizontal")?);
    TwoCat::from_parts(doc.objects.clone(), arrows, cells, id1, id2, h1, v, h2).map_err(|e| ctx.schema("", e.to_string()))
}

pub fn twocat(doc: &TwoCatDoc, ctx: &Ctx) -> Result<TwoCat, LoadError> {
    let k = twocat_raw(doc, ctx)?;
    let r = validate_twocat(&k);
    if !r.is_ok() {
        return Err(ctx.invalid("", lines(r)));
    }
    Ok(k)
}

pub fn twocat_doc(k: &TwoCat) -> TwoCatDoc {
    let a = k.arrow_entries();
    let c = k.cell_entries();
    let (id1, id2) = (k.id1_table(), k.id2_table());
    let names = |t: Table, e: &[Entry], implied: &dyn Fn(usize, usize, usize) -> bool| -> Vec<[String; 3]> {
        k.table_entries(t)
            .into_iter()
            .filter(|&((x, y), z)| !implied(x, y, z))
            .map(|((x, y), z)| [e[x].name.clone(), e[y].name.clone(), e[z].name.clone()])
            .collect()
    };
    let unit1 = |g: usize, f: usize, gf: usize| (id1[a[f].tgt] == g && gf == f) || (id1[a[g].src] == f && gf == g);
    let unitv = |b: usize, x: usize, bx: usize| (id2[c[x].tgt] == b && bx == x) || (id2[c[b].src] == x && bx == b);
    let unith = |b: usize, x: usize, bx: usize| {
        (id2[id1[a[c[x].src].tgt]] == b && bx == x) || (id2[id1[a[c[b].src].src]] == x && bx == b)
    };
    TwoCatDoc {
        format_version: FORMAT_VERSION,
        objects: k.object_names().to_vec(),
        arrows: a.iter().map(|e| entry_doc(&e.name, k.object_name(e.src), k.object_name(e.tgt))).collect(),
        identities: id1.iter().map(|&i| a[i].name.clone()).collect(),
        cells: c.iter().map(|e| entry_doc(&e.name, &a[e.src].name, &a[e.tgt].name)).collect(),
        cell_identities: id2.iter().map(|&i| c[i].name.clone()).collect(),
        compose: names(Table::HComp1, a, &unit1),
        vertical: names(Table::VComp, c, &unitv),
        horizontal: names(Table::HComp2, c, &unith),
    }
}

pub fn twocat_ref(r: &Ref<TwoCatDoc>, ctx: &Ctx, field: &str) -> Result<TwoCat, LoadError> {
    let (doc, c) = resolve(r, ctx, field)?;
    twocat(&doc, &c)
}

pub fn cat_ref(r: &Ref<CatDoc>, ctx: &Ctx, field: &str) -> Result<FinCat, LoadError> {
    let (doc, c) = resolve(r, ctx, field)?;
    cat(&doc, &c)
}

// ------------------------------------------------------------------ functors

#[derive(Clone, Debug)]
pub struct Functor {
    pub source: FinCat,
    pub target: FinCat,
    pub map: FinFunctor,
}

pub fn fun_raw(doc: &FunDoc, ctx: &Ctx) -> Result<Functor, LoadError> {
    let source = cat_ref(&doc.source, ctx, "source")?;
    let target = cat_ref(&doc.target, ctx, "target")?;
    let map = functor_maps(&source, &target, &doc.objects, &doc.morphisms, ctx, "")?;
    Ok(Functor { source, target, map })
}

fn functor_maps(c: &FinCat, d: &FinCat, objects: &[[String; 2]], morphisms: &[[String; 2]], ctx: &Ctx, field: &str) -> Result<FinFunctor, LoadError> {
    let (co, cm) = cat_names(c);
    let (dobj, dm) = cat_names(d);
    let loc = |s: &str, n: usize, k: usize| if field.is_empty() { format!("{s}[{n}][{k}]") } else { format!("{field}.{s}[{n}][{k}]") };
    let mut obj = vec![None; c.object_count()];
    for (n, [x, y]) in objects.iter().enumerate() {
        obj[lookup(&co, "object", x, ctx, loc("objects", n, 0))?] = Some(lookup(&dobj, "object", y, ctx, loc("objects", n, 1))?);
    }
    let obj = obj
        .into_iter()
        .enumerate()
        .map(|(x, o)| o.ok_or_else(|| ctx.schema(field, format!("object {} has no image", c.object_name(x)))))
        .collect::<Result<Vec<_>, _>>()?;
    let mut mor = vec![None; c.morphism_count()];
    for (n, [x, y]) in morphisms.iter().enumerate() {
        mor[lookup(&cm, "morphism", x, ctx, loc("morphisms", n, 0))?] = Some(lookup(&dm, "morphism", y, ctx, loc("morphisms", n, 1))?);
    }
    let mor = mor
        .into_iter()
        .enumerate()
        .map(|(m, v)| match v {
            Some(v) => Ok(v),
            None if c.is_identity(m) => Ok(d.id(obj[c.src(m)])),
            None => Err(ctx.schema(field, format!("morphism {} has no image", c.morphism_name(m)))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FinFunctor { obj, mor })
}

pub fn fun(doc: &FunDoc, ctx: &Ctx) -> Result<Functor, LoadError> {
    let f = fun_raw(doc, ctx)?;
    f.map.check(&f.source, &f.target).map_err(|e| ctx.invalid("", e.to_string()))?;
    Ok(f)
}

pub fn fun_ref(r: &Ref<FunDoc>, ctx: &Ctx, field: &str) -> Result<Functor, LoadError> {
    let (doc, c) = resolve(r, ctx, field)?;
    fun(&doc, &c)
}

fn functor_pairs(c: &FinCat, d: &FinCat, f: &FinFunctor) -> (Vec<[String; 2]>, Vec<[String; 2]>) {
    let objects = c.objects().map(|x| [c.object_name(x).to_string(), d.object_name(f.obj[x]).to_string()]).collect();
    let morphisms = c
        .morphisms()
        .filter(|&m| !(c.is_identity(m) && f.mor[m] == d.id(f.obj[c.src(m)])))
        .map(|m| [c.morphism_name(m).to_string(), d.morphism_name(f.mor[m]).to_string()])
        .collect();
    (objects, morphisms)
}

pub fn fun_doc(source: Ref<CatDoc>, target: Ref<CatDoc>, f: &Functor) -> FunDoc {
    let (objects, morphisms) = functor_pairs(&f.source, &f.target, &f.map);
    FunDoc { format_version: FORMAT_VERSION, source, target, objects, morphisms }
}

#[derive(Clone, Debug)]
pub struct Natural {
    pub source: Functor,
    pub target: Functor,
    pub nat: NatTrans,
}

fn components(c: &FinCat, d: &FinCat, list: &[[String; 2]], ctx: &Ctx, field: &str) -> Result<NatTrans, LoadError> {
    let (co, _) = cat_names(c);
    let (_, dm) = cat_names(d);
    let loc = |n: usize, k: usize| if field.is_empty() { format!("components[{n}][{k}]") } else { format!("{field}[{n}][{k}]") };
    let mut comp = vec![None; c.object_count()];
    for (n, [x, m]) in list.iter().enumerate() {
        comp[lookup(&co, "object", x, ctx, loc(n, 0))?] = Some(lookup(&dm, "morphism", m, ctx, loc(n, 1))?);
    }
    let comp = comp
        .into_iter()
        .enumerate()
        .map(|(x, v)| v.ok_or_else(|| ctx.schema(field, format!("no component at {}", c.object_name(x)))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NatTrans { comp })
}

pub fn nat(doc: &NatDoc, ctx: &Ctx) -> Result<Natural, LoadError> {
    let source = fun_ref(&doc.source, ctx, "source")?;
    let target = fun_ref(&doc.target, ctx, "target")?;
    if source.source != target.source || source.target != target.target {
        return Err(ctx.invalid("", "the two functors are not parallel"));
    }
    let n = components(&source.source, &source.target, &doc.components, ctx, "")?;
    if !n.is_natural(&source.source, &source.target, &source.map, &target.map) {
        return Err(ctx.invalid("components", "not a natural transformation"));
    }
    Ok(Natural { source, target, nat: n })
}

pub fn nat_ref(r: &Ref<NatDoc>, ctx: &Ctx, field: &str) -> Result<Natural, LoadError> {
    let (doc, c) = resolve(r, ctx, field)?;
    nat(&doc, &c)
}

fn component_pairs(c: &FinCat, d: &FinCat, n: &NatTrans) -> Vec<[String; 2]> {
    c.objects().map(|x| [c.object_name(x).to_string(), d.morphism_name(n.comp[x]).to_string()]).collect()
}

pub fn nat_doc(source: Ref<FunDoc>, target: Ref<FunDoc>, n: &Natural) -> NatDoc {
    NatDoc { format_version: FORMAT_VERSION, source, target, components: component_pairs(&n.source.source, &n.source.target, &n.nat) }
}

// ----------------------------------------------------------- pseudo-functors

pub type Pf = PseudoFunctorOf<TwoCat, TwoCat>;

#[derive(Clone, Debug)]
pub struct Pseudo {
    pub source: TwoCat,
    pub target: TwoCat,
    pub map: Pf,
}

fn k_names(k: &TwoCat) -> [HashMap<&str, usize>; 3] {
    [
        k.object_names().iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect(),
        k.arrow_entries().iter().enumerate().map(|(i, e)| (e.name.as_str(), i)).collect(),
        k.cell_entries().iter().enumerate().map(|(i, e)| (e.name.as_str(), i)).collect(),
    ]
}

const KINDS: [&str; 3] = ["object", "1-cell", "2-cell"];

/// Object, 1-cell and 2-cell maps with identities filled in; every entry
/// of the source must be covered.
fn two_maps(s: &TwoCat, t: &TwoCat, lists: [&[[String; 2]]; 3], fields: [&str; 3], ctx: &Ctx) -> Result<[Vec<usize>; 3], LoadError> {
    let (sn, tn) = (k_names(s), k_names(t));
    let sizes = [s.object_count(), s.arrow_count(), s.cell_count()];
    let mut maps: [Vec<Option<usize>>; 3] = [vec![None; sizes[0]], vec![None; sizes[1]], vec![None; sizes[2]]];
    for d in 0..3 {
        for (n, [x, y]) in lists[d].iter().enumerate() {
            let a = lookup(&sn[d], KINDS[d], x, ctx, format!("{}[{n}][0]", fields[d]))?;
            maps[d][a] = Some(lookup(&tn[d], KINDS[d], y, ctx, format!("{}[{n}][1]", fields[d]))?);
        }
    }
    let missing = |d: usize, x: usize| {
        let name = match d {
            0 => s.object_name(x),
            1 => s.arrow_name(x),
            _ => s.cell_name(x),
        };
        ctx.schema(fields[d], format!("{} {name} has no image", KINDS[d]))
    };
    let obj = maps[0].iter().enumerate().map(|(x, v)| v.ok_or_else(|| missing(0, x))).collect::<Result<Vec<_>, _>>()?;
    for o in s.objects() {
        maps[1][s.id1(o)].get_or_insert(t.id1(obj[o]));
    }
    let arrow = maps[1].iter().enumerate().map(|(x, v)| v.ok_or_else(|| missing(1, x))).collect::<Result<Vec<_>, _>>()?;
    for a in s.arrows() {
        if arrow[a] < t.arrow_count() {
            maps[2][s.id2(a)].get_or_insert(t.id2(arrow[a]));
        }
    }
    let cell = maps[2].iter().enumerate().map(|(x, v)| v.ok_or_else(|| missing(2, x))).collect::<Result<Vec<_>, _>>()?;
    Ok([obj, arrow, cell])
}

pub fn pfun_raw(doc: &PfunDoc, ctx: &Ctx) -> Result<Pseudo, LoadError> {
    let s = twocat_ref(&doc.source, ctx, "source")?;
    let t = twocat_ref(&doc.target, ctx, "target")?;
    let [obj, arrow, cell] = two_maps(&s, &t, [&doc.objects, &doc.arrows, &doc.cells], ["objects", "arrows", "cells"], ctx)?;
    let mut map = PseudoFunctor::strict(
        &s,
        &t,
        obj.into_iter().enumerate().collect(),
        arrow.into_iter().enumerate().collect(),
        cell.into_iter().enumerate().collect(),
    );
    let [so, sa, _] = k_names(&s);
    let [_, _, tc] = k_names(&t);
    for (n, [o, c]) in doc.units.iter().enumerate() {
        let o = lookup(&so, "object", o, ctx, format!("units[{n}][0]"))?;
        map.unit.insert(o, lookup(&tc, "2-cell", c, ctx, format!("units[{n}][1]"))?);
    }
    for (n, [f, g, c]) in doc.compositors.iter().enumerate() {
        let f = lookup(&sa, "1-cell", f, ctx, format!("compositors[{n}][0]"))?;
        let g = lookup(&sa, "1-cell", g, ctx, format!("compositors[{n}][1]"))?;
        map.comp.insert((f, g), lookup(&tc, "2-cell", c, ctx, format!("compositors[{n}][2]"))?);
    }
    Ok(Pseudo { source: s, target: t, map })
}

pub fn pfun(doc: &PfunDoc, ctx: &Ctx) -> Result<Pseudo, LoadError> {
    let p = pfun_raw(doc, ctx)?;
    let r = check_pseudo_functor(&p.source, &p.target, &p.map, &Probe::exhaustive(&p.source));
    if !r.is_ok() {
        return Err(ctx.invalid("", lines(r)));
    }
    Ok(p)
}

pub fn pfun_ref(r: &Ref<PfunDoc>, ctx: &Ctx, field: &str) -> Result<Pseudo, LoadError> {
    let (doc, c) = resolve(r, ctx, field)?;
    pfun(&doc, &c)
}

pub fn pfun_doc(source: Ref<TwoCatDoc>, target: Ref<TwoCatDoc>, p: &Pseudo) -> PfunDoc {
    let (s, t, m) = (&p.source, &p.target, &p.map);
    let strict = PseudoFunctor::strict(s, t, m.obj.clone(), m.arrow.clone(), m.cell.clone());
    PfunDoc {
        format_version: FORMAT_VERSION,
        source,
        target,
        objects: m.obj.iter().map(|(&x, &y)| [s.object_name(x).into(), t.object_name(y).into()]).collect(),
        arrows: m
            .arrow
            .iter()
            .filter(|&(&a, &b)| !(s.objects().any(|o| s.id1(o) == a) && t.id1(m.obj[&s.src(a)]) == b))
            .map(|(&a, &b)| [s.arrow_name(a).into(), t.arrow_name(b).into()])
            .collect(),
        cells: m
            .cell
            .iter()
            .filter(|&(&c, &d)| !(s.is_identity_cell(c) && t.id2(m.arrow[&s.csrc(c)]) == d))
            .map(|(&c, &d)| [s.cell_name(c).into(), t.cell_name(d).into()])
            .collect(),
        units: m
            .unit
            .iter()
            .filter(|&(o, c)| strict.unit.get(o) != Some(c))
            .map(|(&o, &c)| [s.object_name(o).into(), t.cell_name(c).into()])
            .collect(),
        compositors: m
            .comp
            .iter()
            .filter(|&(k, c)| strict.comp.get(k) != Some(c))
            .map(|(&(f, g), &c)| [s.arrow_name(f).into(), s.arrow_name(g).into(), t.cell_name(c).into()])
            .collect(),
    }
}

// ------------------------------------------------------------------ diagrams

/// A diagram with the documents it was read from.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub diagram: CatDiagram,
}

pub fn diag_raw(doc: &DiagDoc, ctx: &Ctx) -> Result<CatDiagram, LoadError> {
    let index = twocat_ref(&doc.index, ctx, "index")?;
    let variance = match doc.variance {
        VarianceDoc::Covariant => Variance::Covariant,
        VarianceDoc::Contravariant => Variance::Contravariant,
    };
    let [on, an, cn] = k_names(&index);
    let mut cats = vec![None; index.object_count()];
    for (n, (o, r)) in doc.cats.iter().enumerate() {
        let i = lookup(&on, "object", o, ctx, format!("cats[{n}][0]"))?;
        cats[i] = Some(cat_ref(r, ctx, &format!("cats[{n}][1]"))?);
    }
    let cats = cats
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or_else(|| ctx.schema("cats", format!("no category at {}", index.object_name(i)))))
        .collect::<Result<Vec<_>, _>>()?;
    let mut functors: Vec<Option<FinFunctor>> = vec![None; index.arrow_count()];
    let mut d = CatDiagram { index: index.clone(), variance, cats, functors: Vec::new(), nats: Vec::new() };
    for (n, (u, r)) in doc.functors.iter().enumerate() {
        let loc = format!("functors[{n}][1]");
        let a = lookup(&an, "1-cell", u, ctx, format!("functors[{n}][0]"))?;
        let f = fun_ref(r, ctx, &loc)?;
        let (x, y) = d.ends(a);
        if f.source != d.cats[x] || f.target != d.cats[y] {
            return Err(ctx.invalid(loc, format!("F({u}) must go from the category at {} to the one at {}", index.object_name(x), index.object_name(y))));
        }
        functors[a] = Some(f.map);
    }
    for o in index.objects() {
        functors[index.id1(o)].get_or_insert_with(|| FinFunctor::identity(&d.cats[o]));
    }
    d.functors = functors
        .into_iter()
        .enumerate()
        .map(|(a, f)| f.ok_or_else(|| ctx.schema("functors", format!("no functor at {}", index.arrow_name(a)))))
        .collect::<Result<Vec<_>, _>>()?;
    let mut nats: Vec<Option<NatTrans>> = vec![None; index.cell_count()];
    for (n, (c, r)) in doc.nats.iter().enumerate() {
        let loc = format!("nats[{n}][1]");
        let cell = lookup(&cn, "2-cell", c, ctx, format!("nats[{n}][0]"))?;
        let t = nat_ref(r, ctx, &loc)?;
        if t.source.map != d.functors[index.csrc(cell)] || t.target.map != d.functors[index.ctgt(cell)] {
            return Err(ctx.invalid(loc, format!("F({c}) has the wrong boundary")));
        }
        nats[cell] = Some(t.nat);
    }
    for a in index.arrows() {
        let (_, y) = d.ends(a);
        nats[index.id2(a)].get_or_insert_with(|| NatTrans::identity(&d.cats[y], &d.functors[a]));
    }
    d.nats = nats
        .into_iter()
        .enumerate()
        .map(|(c, t)| t.ok_or_else(|| ctx.schema("nats", format!("no transformation at {}", index.cell_name(c)))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(d)
}

pub fn diag(doc: &DiagDoc, ctx: &Ctx) -> Result<CatDiagram, LoadError> {
    let d = diag_raw(doc, ctx)?;
    d.validate().map_err(|e| ctx.invalid("", e.to_string()))?;
    Ok(d)
}

pub fn diag_ref(r: &Ref<DiagDoc>, ctx: &Ctx, field: &str) -> Result<CatDiagram, LoadError> {
    let (doc, c) = resolve(r, ctx, field)?;
    diag(&doc, &c)
}

/// The document with entries in index order and identity data left out.
pub fn diag_canonical(doc: &DiagDoc, d: &CatDiagram) -> DiagDoc {
    let k = &d.index;
    let mut cats = doc.cats.clone();
    cats.sort_by_key(|(o, _)| k.find_object(o));
    let mut functors: Vec<_> = doc
        .functors
        .iter()
        .filter(|(u, _)| {
            let a = k.find_arrow(u).expect("loaded");
            !(k.objects().any(|o| k.id1(o) == a) && d.functors[a].is_identity())
        })
        .cloned()
        .collect();
    functors.sort_by_key(|(u, _)| k.find_arrow(u));
    let mut nats: Vec<_> = doc
        .nats
        .iter()
        .filter(|(c, _)| {
            let c = k.find_cell(c).expect("loaded");
            let (_, y) = d.ends(k.csrc(c));
            !(k.is_identity_cell(c) && d.nats[c] == NatTrans::identity(&d.cats[y], &d.functors[k.csrc(c)]))
        })
        .cloned()
        .collect();
    nats.sort_by_key(|(c, _)| k.find_cell(c));
    DiagDoc { format_version: FORMAT_VERSION, index: doc.index.clone(), variance: doc.variance, cats, functors, nats }
}

pub fn cone(doc: &ConeDoc, ctx: &Ctx) -> Result<(CatDiagram, CatCone), LoadError> {
    let d = diag_ref(&doc.diagram, ctx, "diagram")?;
    let vertex = cat_ref(&doc.vertex, ctx, "vertex")?;
    let k = &d.index;
    let [on, an, _] = k_names(k);
    let mut legs = vec![None; k.object_count()];
    for (n, (o, r)) in doc.legs.iter().enumerate() {
        let i = lookup(&on, "object", o, ctx, format!("legs[{n}][0]"))?;
        legs[i] = Some(fun_ref(r, ctx, &format!("legs[{n}][1]"))?);
    }
    let legs = legs
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.ok_or_else(|| ctx.schema("legs", format!("no leg at {}", k.object_name(i)))))
        .collect::<Result<Vec<_>, _>>()?;
    let domain = |i: usize| match d.variance {
        Variance::Covariant => (&d.cats[i], &vertex),
        Variance::Contravariant => (&vertex, &d.cats[i]),
    };
    for (i, l) in legs.iter().enumerate() {
        let (x, y) = domain(i);
        if &l.source != x || &l.target != y {
            return Err(ctx.invalid(format!("legs[{i}]"), "leg has the wrong source or target"));
        }
    }
    let mut cells = vec![None; k.arrow_count()];
    for (n, (u, list)) in doc.cells.iter().enumerate() {
        let a = lookup(&an, "1-cell", u, ctx, format!("cells[{n}][0]"))?;
        let (x, y) = domain(k.src(a));
        cells[a] = Some(components(x, y, list, ctx, &format!("cells[{n}][1]"))?);
    }
    let mut out = Vec::new();
    for (a, c) in cells.into_iter().enumerate() {
        match c {
            Some(c) => out.push(c),
            None if k.objects().any(|o| k.id1(o) == a) => {
                let (_, y) = domain(k.src(a));
                out.push(NatTrans::identity(y, &legs[k.src(a)].map))
            }
            None => return Err(ctx.schema("cells", format!("no cell at {}", k.arrow_name(a)))),
        }
    }
    Ok((d, CatCone { vertex, legs: legs.into_iter().map(|l| l.map).collect(), cells: out }))
}

// ---------------------------------------------------------------- pro-objects

pub fn pro_raw(doc: &ProDoc, ctx: &Ctx) -> Result<ProObject, LoadError> {
    let index = twocat_ref(&doc.index, ctx, "index")?;
    let target = twocat_ref(&doc.target, ctx, "target")?;
    // X_u goes from X_j to X_i, so identities are filled as for a functor on I^op
    let [obj, arrow, cell] = two_maps(&index, &target, [&doc.objects, &doc.arrows, &doc.cells], ["objects", "arrows", "cells"], ctx)?;
    Ok(ProObject { index, target, obj, arrow, cell })
}

pub fn pro(doc: &ProDoc, ctx: &Ctx) -> Result<ProObject, LoadError> {
    let x = pro_raw(doc, ctx)?;
    x.validate().map_err(|e| ctx.invalid("", e.to_string()))?;
    Ok(x)
}

pub fn pro_doc(index: Ref<TwoCatDoc>, target: Ref<TwoCatDoc>, x: &ProObject) -> ProDoc {
    let (k, c) = (&x.index, &x.target);
    ProDoc {
        format_version: FORMAT_VERSION,
        index,
        target,
        objects: k.objects().map(|i| [k.object_name(i).into(), c.object_name(x.obj[i]).into()]).collect(),
        arrows: k
            .arrows()
            .filter(|&u| !(k.objects().any(|o| k.id1(o) == u) && x.arrow[u] == c.id1(x.obj[k.src(u)])))
            .map(|u| [k.arrow_name(u).into(), c.arrow_name(x.arrow[u]).into()])
            .collect(),
        cells: k
            .cells()
            .filter(|&a| !(k.is_identity_cell(a) && x.cell[a] == c.id2(x.arrow[k.csrc(a)])))
            .map(|a| [k.cell_name(a).into(), c.cell_name(x.cell[a]).into()])
            .collect(),
    }
}

// ------------------------------------------------------------- model data

pub fn classes(doc: &ClassesDoc, ctx: &Ctx) -> Result<(TwoCat, ModelClasses), LoadError> {
    let k = twocat_ref(&doc.category, ctx, "category")?;
    let [_, an, _] = k_names(&k);
    let set = |list: &[String], field: &str| -> Result<BTreeSet<usize>, LoadError> {
        list.iter().enumerate().map(|(n, s)| lookup(&an, "1-cell", s, ctx, format!("{field}[{n}]"))).collect()
    };
    let c = ModelClasses {
        fibrations: set(&doc.fibrations, "fibrations")?,
        cofibrations: set(&doc.cofibrations, "cofibrations")?,
        weak_equivalences: set(&doc.weak_equivalences, "weak_equivalences")?,
    };
    Ok((k, c))
}

pub fn classes_doc(category: Ref<TwoCatDoc>, k: &TwoCat, c: &ModelClasses) -> ClassesDoc {
    let names = |s: &BTreeSet<usize>| s.iter().map(|&a| k.arrow_name(a).to_string()).collect();
    ClassesDoc {
        format_version: FORMAT_VERSION,
        category,
        fibrations: names(&c.fibrations),
        cofibrations: names(&c.cofibrations),
        weak_equivalences: names(&c.weak_equivalences),
    }
}

pub fn square(doc: &SqDoc, ctx: &Ctx) -> Result<(TwoCat, LiftingSquare), LoadError> {
    let k = twocat_ref(&doc.category, ctx, "category")?;
    let [_, an, cn] = k_names(&k);
    let sq = LiftingSquare {
        i: lookup(&an, "1-cell", &doc.i, ctx, "i".into())?,
        p: lookup(&an, "1-cell", &doc.p, ctx, "p".into())?,
        a: lookup(&an, "1-cell", &doc.a, ctx, "a".into())?,
        b: lookup(&an, "1-cell", &doc.b, ctx, "b".into())?,
        gamma: lookup(&cn, "2-cell", &doc.gamma, ctx, "gamma".into())?,
    };
    check_square(&k, &sq).map_err(|e| ctx.invalid("", e.to_string()))?;
    Ok((k, sq))
}

/// Reads any document and writes back its canonical text.
pub fn canonicalize(path: &Path) -> Result<String, LoadError> {
    let text = read_file(path)?;
    let ctx = Ctx::file(path);
    let kind = kind_of(path, &text)?;
    Ok(match kind {
        Kind::Cat => to_canonical(&cat_doc(&cat_raw(&parse_doc(&text, &ctx)?, &ctx)?)),
        Kind::TwoCat => to_canonical(&twocat_doc(&twocat_raw(&parse_doc(&text, &ctx)?, &ctx)?)),
        Kind::Fun => {
            let doc: FunDoc = parse_doc(&text, &ctx)?;
            to_canonical(&fun_doc(doc.source.clone(), doc.target.clone(), &fun_raw(&doc, &ctx)?))
        }
        Kind::Nat => {
            let doc: NatDoc = parse_doc(&text, &ctx)?;
            to_canonical(&nat_doc(doc.source.clone(), doc.target.clone(), &nat(&doc, &ctx)?))
        }
        Kind::Pfun => {
            let doc: PfunDoc = parse_doc(&text, &ctx)?;
            to_canonical(&pfun_doc(doc.source.clone(), doc.target.clone(), &pfun_raw(&doc, &ctx)?))
        }
        Kind::Diag => {
            let doc: DiagDoc = parse_doc(&text, &ctx)?;
            let d = diag_raw(&doc, &ctx)?;
            to_canonical(&diag_canonical(&doc, &d))
        }
        Kind::Cone => {
            let doc: ConeDoc = parse_doc(&text, &ctx)?;
            cone(&doc, &ctx)?;
            to_canonical(&doc)
        }
        Kind::Pro => {
            let doc: ProDoc = parse_doc(&text, &ctx)?;
            to_canonical(&pro_doc(doc.index.clone(), doc.target.clone(), &pro_raw(&doc, &ctx)?))
        }
        Kind::Classes => {
            let doc: ClassesDoc = parse_doc(&text, &ctx)?;
            let (k, c) = classes(&doc, &ctx)?;
            to_canonical(&classes_doc(doc.category.clone(), &k, &c))
        }
        Kind::Sq => {
            let doc: SqDoc = parse_doc(&text, &ctx)?;
            to_canonical(&doc)
        }
    })
}

/// The kind from the extension, or from the keys of a `.json` file.
pub fn kind_of(path: &Path, text: &str) -> Result<Kind, LoadError> {
    let ctx = Ctx::file(path);
    if let Some(k) = path.extension().and_then(|e| e.to_str()).and_then(Kind::from_extension) {
        return Ok(k);
    }
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| ctx.schema("", format!("line {} column {}: {e}", e.line(), e.column())))?;
    Kind::sniff(&v).ok_or_else(|| ctx.schema("", "cannot tell the document kind from its extension or keys"))
}

/// Name-keyed view used by reports.
pub fn arrow_names(k: &TwoCat, set: &BTreeSet<usize>) -> Vec<String> {
    set.iter().map(|&a| k.arrow_name(a).to_string()).collect()
}

pub fn name_map(k: &TwoCat) -> BTreeMap<String, usize> {
    k.arrows().map(|a| (k.arrow_name(a).to_string(), a)).collect()
}
