use std::collections::HashMap;
use std::fmt;

use super::fincat::{FinCat, Mor};
use super::report::Report;
use super::CoreError;

/// A 1-cell or 2-cell entry: name plus boundary ids (objects for 1-cells,
/// 1-cells for 2-cells).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// Which composition table an entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Table {
    HComp1,
    VComp,
    HComp2,
}

/// A finite strict 2-category with explicit tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCat {
    objects: Vec<String>,
    arrows: Vec<Entry>,
    cells: Vec<Entry>,
    id1: Vec<usize>,
    id2: Vec<usize>,
    hcomp1: HashMap<(usize, usize), usize>,
    vcomp: HashMap<(usize, usize), usize>,
    hcomp2: HashMap<(usize, usize), usize>,
    hom1: HashMap<(usize, usize), Vec<usize>>,
    hom2: HashMap<(usize, usize), Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TwoCatLaw {
    Id1Boundary,
    MissingComposite1,
    SpuriousComposite1,
    Composite1Boundary,
    LeftUnit1,
    RightUnit1,
    Associativity1,
    CellBoundary,
    Id2Boundary,
    MissingVertical,
    SpuriousVertical,
    VerticalBoundary,
    VerticalLeftUnit,
    VerticalRightUnit,
    VerticalAssociativity,
    MissingHorizontal,
    SpuriousHorizontal,
    HorizontalBoundary,
    HorizontalUnit,
    HorizontalAssociativity,
    Interchange,
    IdentityInterchange,
}

impl fmt::Display for TwoCatLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TwoCatLaw::Interchange => "InterchangeViolation",
            TwoCatLaw::Associativity1 => "AssociativityViolation",
            other => return write!(f, "{other:?}"),
        };
        f.write_str(s)
    }
}

impl TwoCat {
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        objects: Vec<String>,
        arrows: Vec<Entry>,
        cells: Vec<Entry>,
        id1: Vec<usize>,
        id2: Vec<usize>,
        hcomp1: impl IntoIterator<Item = ((usize, usize), usize)>,
        vcomp: impl IntoIterator<Item = ((usize, usize), usize)>,
        hcomp2: impl IntoIterator<Item = ((usize, usize), usize)>,
    ) -> Result<TwoCat, CoreError> {
        let (no, na, nc) = (objects.len(), arrows.len(), cells.len());
        for a in &arrows {
            if a.src >= no || a.tgt >= no {
                return Err(CoreError::DanglingId(format!("boundary of 1-cell {}", a.name)));
            }
        }
        for c in &cells {
            if c.src >= na || c.tgt >= na {
                return Err(CoreError::DanglingId(format!("boundary of 2-cell {}", c.name)));
            }
        }
        if id1.len() != no || id1.iter().any(|&a| a >= na) {
            return Err(CoreError::DanglingId("identity 1-cell table".into()));
        }
        if id2.len() != na || id2.iter().any(|&c| c >= nc) {
            return Err(CoreError::DanglingId("identity 2-cell table".into()));
        }
        let load = |it: &mut dyn Iterator<Item = ((usize, usize), usize)>, n: usize, what: &str| {
            let mut t = HashMap::new();
            for ((x, y), z) in it {
                if x >= n || y >= n || z >= n {
                    return Err(CoreError::DanglingId(format!("{what} entry ({x},{y})->{z}")));
                }
                t.insert((x, y), z);
            }
            Ok(t)
        };
        let hcomp1 = load(&mut hcomp1.into_iter(), na, "hcomp1")?;
        let vcomp = load(&mut vcomp.into_iter(), nc, "vcomp")?;
        let hcomp2 = load(&mut hcomp2.into_iter(), nc, "hcomp2")?;
        let mut hom1: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, a) in arrows.iter().enumerate() {
            hom1.entry((a.src, a.tgt)).or_default().push(i);
        }
        let mut hom2: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, c) in cells.iter().enumerate() {
            hom2.entry((c.src, c.tgt)).or_default().push(i);
        }
        Ok(TwoCat { objects, arrows, cells, id1, id2, hcomp1, vcomp, hcomp2, hom1, hom2 })
    }

    /// One object, one 1-cell, one 2-cell.
    pub fn terminal() -> TwoCat {
        TwoCat::locally_discrete(&FinCat::terminal())
    }

    /// `{0 -> 1}` with only identity 2-cells.
    pub fn two() -> TwoCat {
        TwoCat::locally_discrete(&FinCat::poset(&["0".to_string(), "1".to_string()], |a, b| a <= b))
    }

    /// A category seen as a 2-category with only identity 2-cells.
    pub fn locally_discrete(c: &FinCat) -> TwoCat {
        let arrows: Vec<Entry> = c
            .morphism_entries()
            .iter()
            .map(|m| Entry { name: m.name.clone(), src: m.src, tgt: m.tgt })
            .collect();
        let cells: Vec<Entry> =
            arrows.iter().enumerate().map(|(i, a)| Entry { name: format!("1_{}", a.name), src: i, tgt: i }).collect();
        let id2: Vec<usize> = (0..arrows.len()).collect();
        let entries = c.composition_entries();
        let vcomp: Vec<_> = (0..cells.len()).map(|i| ((i, i), i)).collect();
        TwoCat::from_parts(
            c.object_names().to_vec(),
            arrows,
            cells,
            c.identity_table().to_vec(),
            id2,
            entries.clone(),
            vcomp,
            entries,
        )
        .expect("locally discrete tables")
    }

    /// The underlying 1-category.
    pub fn underlying(&self) -> FinCat {
        let morphisms =
            self.arrows.iter().map(|a| Mor { name: a.name.clone(), src: a.src, tgt: a.tgt }).collect();
        FinCat::from_parts(
            self.objects.clone(),
            morphisms,
            self.id1.clone(),
            self.hcomp1.iter().map(|(&k, &v)| (k, v)),
        )
        .expect("underlying category tables")
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }
    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }
    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }
    pub fn objects(&self) -> std::ops::Range<usize> {
        0..self.objects.len()
    }
    pub fn arrows(&self) -> std::ops::Range<usize> {
        0..self.arrows.len()
    }
    pub fn cells(&self) -> std::ops::Range<usize> {
        0..self.cells.len()
    }
    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }
    pub fn arrow_name(&self, a: usize) -> &str {
        &self.arrows[a].name
    }
    pub fn cell_name(&self, c: usize) -> &str {
        &self.cells[c].name
    }
    pub fn object_names(&self) -> &[String] {
        &self.objects
    }
    pub fn arrow_entries(&self) -> &[Entry] {
        &self.arrows
    }
    pub fn cell_entries(&self) -> &[Entry] {
        &self.cells
    }
    pub fn id1_table(&self) -> &[usize] {
        &self.id1
    }
    pub fn id2_table(&self) -> &[usize] {
        &self.id2
    }

    /// Entries of one composition table, sorted by key.
    pub fn table_entries(&self, t: Table) -> Vec<((usize, usize), usize)> {
        let m = match t {
            Table::HComp1 => &self.hcomp1,
            Table::VComp => &self.vcomp,
            Table::HComp2 => &self.hcomp2,
        };
        let mut v: Vec<_> = m.iter().map(|(&k, &x)| (k, x)).collect();
        v.sort();
        v
    }

    /// A copy with one table entry overwritten.
    pub fn with_entry(&self, t: Table, key: (usize, usize), value: usize) -> TwoCat {
        let mut k = self.clone();
        match t {
            Table::HComp1 => k.hcomp1.insert(key, value),
            Table::VComp => k.vcomp.insert(key, value),
            Table::HComp2 => k.hcomp2.insert(key, value),
        };
        k
    }

    pub fn find_object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }
    pub fn find_arrow(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }
    pub fn find_cell(&self, name: &str) -> Option<usize> {
        self.cells.iter().position(|c| c.name == name)
    }

    pub fn src(&self, a: usize) -> usize {
        self.arrows[a].src
    }
    pub fn tgt(&self, a: usize) -> usize {
        self.arrows[a].tgt
    }
    /// Source 1-cell of a 2-cell.
    pub fn csrc(&self, c: usize) -> usize {
        self.cells[c].src
    }
    /// Target 1-cell of a 2-cell.
    pub fn ctgt(&self, c: usize) -> usize {
        self.cells[c].tgt
    }
    pub fn id1(&self, o: usize) -> usize {
        self.id1[o]
    }
    pub fn id2(&self, a: usize) -> usize {
        self.id2[a]
    }

    /// `g f` for 1-cells.
    pub fn comp1(&self, g: usize, f: usize) -> Option<usize> {
        if self.tgt(f) != self.src(g) {
            return None;
        }
        self.hcomp1.get(&(g, f)).copied()
    }

    /// `b ∘ a`.
    pub fn vert(&self, b: usize, a: usize) -> Option<usize> {
        if self.ctgt(a) != self.csrc(b) {
            return None;
        }
        self.vcomp.get(&(b, a)).copied()
    }

    /// `b a` (juxtaposition, `a` first).
    pub fn horiz(&self, b: usize, a: usize) -> Option<usize> {
        if self.tgt(self.csrc(a)) != self.src(self.csrc(b)) {
            return None;
        }
        self.hcomp2.get(&(b, a)).copied()
    }

    /// `g a`: whiskering on the left by a 1-cell.
    pub fn lwhisker(&self, g: usize, a: usize) -> Option<usize> {
        self.horiz(self.id2(g), a)
    }

    /// `b f`: whiskering on the right by a 1-cell.
    pub fn rwhisker(&self, b: usize, f: usize) -> Option<usize> {
        self.horiz(b, self.id2(f))
    }

    pub fn hom1(&self, a: usize, b: usize) -> &[usize] {
        self.hom1.get(&(a, b)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn hom2(&self, f: usize, g: usize) -> &[usize] {
        self.hom2.get(&(f, g)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// A two-sided vertical inverse, looked up in the tables.
    pub fn inverse(&self, c: usize) -> Option<usize> {
        let (f, g) = (self.csrc(c), self.ctgt(c));
        self.hom2(g, f)
            .iter()
            .copied()
            .find(|&d| self.vert(d, c) == Some(self.id2(f)) && self.vert(c, d) == Some(self.id2(g)))
    }

    pub fn is_invertible(&self, c: usize) -> bool {
        self.inverse(c).is_some()
    }

    pub fn is_identity_cell(&self, c: usize) -> bool {
        self.id2(self.csrc(c)) == c
    }

    /// Parallel 1-cells of `f` (same source and target), including `f`.
    pub fn parallel(&self, f: usize) -> &[usize] {
        self.hom1(self.src(f), self.tgt(f))
    }

    /// An inverse 1-cell `g` with `g f = id` and `f g = id`, if any.
    pub fn arrow_inverse(&self, f: usize) -> Option<usize> {
        let (a, b) = (self.src(f), self.tgt(f));
        self.hom1(b, a)
            .iter()
            .copied()
            .find(|&g| self.comp1(g, f) == Some(self.id1(a)) && self.comp1(f, g) == Some(self.id1(b)))
    }

    /// Composite of a 1-cell path given first-to-last.
    pub fn comp_path(&self, path: &[usize]) -> Option<usize> {
        let mut it = path.iter();
        let mut acc = *it.next()?;
        for &m in it {
            acc = self.comp1(m, acc)?;
        }
        Some(acc)
    }

    /// Total number of cells of all dimensions.
    pub fn size(&self) -> usize {
        self.object_count() + self.arrow_count() + self.cell_count()
    }
}

impl fmt::Display for TwoCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "objects: {}", self.objects.join(", "))?;
        for a in &self.arrows {
            writeln!(f, "  {}: {} -> {}", a.name, self.objects[a.src], self.objects[a.tgt])?;
        }
        for c in &self.cells {
            writeln!(f, "  {}: {} => {}", c.name, self.arrows[c.src].name, self.arrows[c.tgt].name)?;
        }
        Ok(())
    }
}

/// The hom-category `K(A, B)` under vertical composition.
pub fn hom_category(k: &TwoCat, a: usize, b: usize) -> Result<FinCat, CoreError> {
    if a >= k.object_count() {
        return Err(CoreError::UnknownObject(a.to_string()));
    }
    if b >= k.object_count() {
        return Err(CoreError::UnknownObject(b.to_string()));
    }
    let arrows = k.hom1(a, b).to_vec();
    let local: HashMap<usize, usize> = arrows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut cells = Vec::new();
    for &f in &arrows {
        for &g in &arrows {
            cells.extend_from_slice(k.hom2(f, g));
        }
    }
    cells.sort_unstable();
    let cell_local: HashMap<usize, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let morphisms = cells
        .iter()
        .map(|&c| Mor { name: k.cell_name(c).to_string(), src: local[&k.csrc(c)], tgt: local[&k.ctgt(c)] })
        .collect();
    let identity = arrows.iter().map(|&f| cell_local[&k.id2(f)]).collect();
    let mut comp = Vec::new();
    for &x in &cells {
        for &y in &cells {
            if let Some(z) = k.vert(y, x) {
                if let Some(&zl) = cell_local.get(&z) {
                    comp.push(((cell_local[&y], cell_local[&x]), zl));
                }
            }
        }
    }
    let names = arrows.iter().map(|&f| k.arrow_name(f).to_string()).collect();
    FinCat::from_parts(names, morphisms, identity, comp)
}

/// Checks all 2-category laws exhaustively.
pub fn validate_twocat(k: &TwoCat) -> Report<TwoCatLaw> {
    use TwoCatLaw::*;
    let mut r = Report::new();
    let an = |a: usize| k.arrow_name(a).to_string();
    let cn = |c: usize| k.cell_name(c).to_string();

    for o in k.objects() {
        let i = k.id1(o);
        if k.src(i) != o || k.tgt(i) != o {
            r.push(Id1Boundary, vec![k.object_name(o).to_string()]);
        }
    }
    for (&(g, f), &gf) in &k.hcomp1 {
        if k.tgt(f) != k.src(g) {
            r.push(SpuriousComposite1, vec![an(g), an(f)]);
        } else if k.src(gf) != k.src(f) || k.tgt(gf) != k.tgt(g) {
            r.push(Composite1Boundary, vec![an(g), an(f), an(gf)]);
        }
    }
    for f in k.arrows() {
        for b in k.objects() {
            for &g in k.hom1(k.tgt(f), b) {
                if !k.hcomp1.contains_key(&(g, f)) {
                    r.push(MissingComposite1, vec![an(g), an(f)]);
                }
            }
        }
        if k.comp1(k.id1(k.tgt(f)), f) != Some(f) {
            r.push(LeftUnit1, vec![an(f)]);
        }
        if k.comp1(f, k.id1(k.src(f))) != Some(f) {
            r.push(RightUnit1, vec![an(f)]);
        }
        for x in k.objects() {
            for &g in k.hom1(k.tgt(f), x) {
                for y in k.objects() {
                    for &h in k.hom1(x, y) {
                        let l = k.comp1(g, f).and_then(|gf| k.comp1(h, gf));
                        let rr = k.comp1(h, g).and_then(|hg| k.comp1(hg, f));
                        if let (Some(l), Some(rr)) = (l, rr) {
                            if l != rr {
                                r.push(Associativity1, vec![an(h), an(g), an(f)]);
                            }
                        }
                    }
                }
            }
        }
    }

    // vertical structure
    for c in k.cells() {
        let (f, g) = (k.csrc(c), k.ctgt(c));
        if k.src(f) != k.src(g) || k.tgt(f) != k.tgt(g) {
            r.push(CellBoundary, vec![cn(c)]);
        }
    }
    for f in k.arrows() {
        let i = k.id2(f);
        if k.csrc(i) != f || k.ctgt(i) != f {
            r.push(Id2Boundary, vec![an(f)]);
        }
    }
    for (&(b, a), &ba) in &k.vcomp {
        if k.ctgt(a) != k.csrc(b) {
            r.push(SpuriousVertical, vec![cn(b), cn(a)]);
        } else if k.csrc(ba) != k.csrc(a) || k.ctgt(ba) != k.ctgt(b) {
            r.push(VerticalBoundary, vec![cn(b), cn(a), cn(ba)]);
        }
    }
    let out_cells = |f: usize| -> Vec<usize> {
        k.parallel(f).iter().flat_map(|&g| k.hom2(f, g).iter().copied()).collect()
    };
    for a in k.cells() {
        let nexts = out_cells(k.ctgt(a));
        for &b in &nexts {
            if !k.vcomp.contains_key(&(b, a)) {
                r.push(MissingVertical, vec![cn(b), cn(a)]);
            }
        }
        if k.vert(k.id2(k.ctgt(a)), a) != Some(a) {
            r.push(VerticalLeftUnit, vec![cn(a)]);
        }
        if k.vert(a, k.id2(k.csrc(a))) != Some(a) {
            r.push(VerticalRightUnit, vec![cn(a)]);
        }
        for &b in &nexts {
            for &c in &out_cells(k.ctgt(b)) {
                let l = k.vert(b, a).and_then(|ba| k.vert(c, ba));
                let rr = k.vert(c, b).and_then(|cb| k.vert(cb, a));
                if let (Some(l), Some(rr)) = (l, rr) {
                    if l != rr {
                        r.push(VerticalAssociativity, vec![cn(c), cn(b), cn(a)]);
                    }
                }
            }
        }
    }

    // horizontal structure
    let cells_from = |o: usize| -> Vec<usize> {
        k.cells().filter(|&c| k.src(k.csrc(c)) == o).collect()
    };
    for (&(b, a), &ba) in &k.hcomp2 {
        if k.tgt(k.csrc(a)) != k.src(k.csrc(b)) {
            r.push(SpuriousHorizontal, vec![cn(b), cn(a)]);
            continue;
        }
        let s = k.comp1(k.csrc(b), k.csrc(a));
        let t = k.comp1(k.ctgt(b), k.ctgt(a));
        if s != Some(k.csrc(ba)) || t != Some(k.ctgt(ba)) {
            r.push(HorizontalBoundary, vec![cn(b), cn(a), cn(ba)]);
        }
    }
    for a in k.cells() {
        let mid = k.tgt(k.csrc(a));
        let nexts = cells_from(mid);
        for &b in &nexts {
            if !k.hcomp2.contains_key(&(b, a)) {
                r.push(MissingHorizontal, vec![cn(b), cn(a)]);
            }
        }
        let src0 = k.src(k.csrc(a));
        if k.horiz(k.id2(k.id1(mid)), a) != Some(a) || k.horiz(a, k.id2(k.id1(src0))) != Some(a) {
            r.push(HorizontalUnit, vec![cn(a)]);
        }
        for &b in &nexts {
            for &c in &cells_from(k.tgt(k.csrc(b))) {
                let l = k.horiz(b, a).and_then(|ba| k.horiz(c, ba));
                let rr = k.horiz(c, b).and_then(|cb| k.horiz(cb, a));
                if let (Some(l), Some(rr)) = (l, rr) {
                    if l != rr {
                        r.push(HorizontalAssociativity, vec![cn(c), cn(b), cn(a)]);
                    }
                }
            }
        }
    }
    for f in k.arrows() {
        for g in k.objects().flat_map(|x| k.hom1(k.tgt(f), x).to_vec()) {
            if let Some(gf) = k.comp1(g, f) {
                if k.horiz(k.id2(g), k.id2(f)) != Some(k.id2(gf)) {
                    r.push(IdentityInterchange, vec![an(g), an(f)]);
                }
            }
        }
    }
    for (a, b, a2, b2) in interchange_grids(k) {
        if let Some((l, rr)) = interchange_sides(k, a, b, a2, b2) {
            if l != rr {
                r.push(Interchange, vec![cn(a), cn(b), cn(a2), cn(b2)]);
            }
        }
    }
    r.finish()
}

/// Every composable 2x2 grid `(α, β, α′, β′)`: α, β vertically composable in
/// one hom, α′, β′ in the next one.
pub fn interchange_grids(k: &TwoCat) -> Vec<(usize, usize, usize, usize)> {
    let mut vpairs: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    for a in k.cells() {
        let g = k.ctgt(a);
        for &h in k.parallel(g) {
            for &b in k.hom2(g, h) {
                vpairs.entry((k.src(g), k.tgt(g))).or_default().push((a, b));
            }
        }
    }
    let mut out = Vec::new();
    let mut keys: Vec<_> = vpairs.keys().copied().collect();
    keys.sort_unstable();
    for &(x, y) in &keys {
        for &(y2, z) in &keys {
            if y2 != y {
                continue;
            }
            let _ = z;
            for &(a, b) in &vpairs[&(x, y)] {
                for &(a2, b2) in &vpairs[&(y, z)] {
                    out.push((a, b, a2, b2));
                }
            }
        }
    }
    out
}

/// Both sides `(β′β)∘(α′α)` and `(β′∘α′)(β∘α)` of the interchange law.
pub fn interchange_sides(k: &TwoCat, a: usize, b: usize, a2: usize, b2: usize) -> Option<(usize, usize)> {
    let l = k.vert(k.horiz(b2, b)?, k.horiz(a2, a)?)?;
    let r = k.horiz(k.vert(b2, a2)?, k.vert(b, a)?)?;
    Some((l, r))
}
