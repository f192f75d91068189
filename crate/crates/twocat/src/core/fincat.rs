use std::collections::HashMap;
use std::fmt;

use super::report::Report;
use super::CoreError;

/// A morphism entry: name plus source and target object ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mor {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite category given by explicit tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<Mor>,
    identity: Vec<usize>,
    comp: HashMap<(usize, usize), usize>,
    homs: HashMap<(usize, usize), Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CatLaw {
    IdentityBoundary,
    MissingComposite,
    SpuriousComposite,
    CompositeBoundary,
    LeftUnit,
    RightUnit,
    Associativity,
}

impl fmt::Display for CatLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CatLaw::IdentityBoundary => "IdentityBoundary",
            CatLaw::MissingComposite => "MissingComposite",
            CatLaw::SpuriousComposite => "SpuriousComposite",
            CatLaw::CompositeBoundary => "CompositeBoundary",
            CatLaw::LeftUnit => "LeftUnitViolation",
            CatLaw::RightUnit => "RightUnitViolation",
            CatLaw::Associativity => "AssociativityViolation",
        };
        f.write_str(s)
    }
}

impl FinCat {
    /// Builds a category from raw tables. Only structural well-formedness is
    /// checked here; use [`validate_fincat`] for the laws.
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<Mor>,
        identity: Vec<usize>,
        comp: impl IntoIterator<Item = ((usize, usize), usize)>,
    ) -> Result<FinCat, CoreError> {
        let no = objects.len();
        let nm = morphisms.len();
        for m in &morphisms {
            if m.src >= no || m.tgt >= no {
                return Err(CoreError::DanglingId(format!("object of morphism {}", m.name)));
            }
        }
        if identity.len() != no {
            return Err(CoreError::DanglingId("identity table length".into()));
        }
        if let Some(&bad) = identity.iter().find(|&&m| m >= nm) {
            return Err(CoreError::DanglingId(format!("identity morphism #{bad}")));
        }
        let mut table = HashMap::new();
        for ((g, f), gf) in comp {
            if g >= nm || f >= nm || gf >= nm {
                return Err(CoreError::DanglingId(format!("composition entry ({g},{f})->{gf}")));
            }
            table.insert((g, f), gf);
        }
        let mut homs: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, m) in morphisms.iter().enumerate() {
            homs.entry((m.src, m.tgt)).or_default().push(i);
        }
        Ok(FinCat { objects, morphisms, identity, comp: table, homs })
    }

    pub fn terminal() -> FinCat {
        let mut b = FinCatBuilder::new();
        b.object("*");
        b.build().expect("terminal category")
    }

    pub fn discrete(names: &[&str]) -> FinCat {
        let mut b = FinCatBuilder::new();
        for n in names {
            b.object(n);
        }
        b.build().expect("discrete category")
    }

    /// The poset on `0..n` with `leq(a, b)` as the order. The relation must be
    /// reflexive and transitive. Morphisms are named `a<=b`.
    pub fn poset(names: &[String], leq: impl Fn(usize, usize) -> bool) -> FinCat {
        let n = names.len();
        let mut morphisms = Vec::new();
        let mut index = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                if leq(a, b) {
                    index.insert((a, b), morphisms.len());
                    let name = if a == b {
                        format!("id_{}", names[a])
                    } else {
                        format!("{}<={}", names[a], names[b])
                    };
                    morphisms.push(Mor { name, src: a, tgt: b });
                }
            }
        }
        let identity = (0..n).map(|a| index[&(a, a)]).collect();
        let mut comp = Vec::new();
        for (&(a, b), &f) in &index {
            for c in 0..n {
                if let Some(&g) = index.get(&(b, c)) {
                    let gf = *index.get(&(a, c)).expect("poset relation must be transitive");
                    comp.push(((g, f), gf));
                }
            }
        }
        FinCat::from_parts(names.to_vec(), morphisms, identity, comp).expect("poset tables")
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> std::ops::Range<usize> {
        0..self.objects.len()
    }

    pub fn morphisms(&self) -> std::ops::Range<usize> {
        0..self.morphisms.len()
    }

    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn morphism_name(&self, m: usize) -> &str {
        &self.morphisms[m].name
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism_entries(&self) -> &[Mor] {
        &self.morphisms
    }

    pub fn identity_table(&self) -> &[usize] {
        &self.identity
    }

    /// Composition entries sorted by key.
    pub fn composition_entries(&self) -> Vec<((usize, usize), usize)> {
        let mut v: Vec<_> = self.comp.iter().map(|(&k, &x)| (k, x)).collect();
        v.sort();
        v
    }

    pub fn find_object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn find_morphism(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn src(&self, m: usize) -> usize {
        self.morphisms[m].src
    }

    pub fn tgt(&self, m: usize) -> usize {
        self.morphisms[m].tgt
    }

    pub fn id(&self, o: usize) -> usize {
        self.identity[o]
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.identity[self.src(m)] == m
    }

    /// `g ∘ f`, defined when `tgt f = src g` and the table has the entry.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        if self.tgt(f) != self.src(g) {
            return None;
        }
        self.comp.get(&(g, f)).copied()
    }

    /// Composite of a path given first-to-last.
    pub fn compose_path(&self, path: &[usize]) -> Option<usize> {
        let mut it = path.iter();
        let mut acc = *it.next()?;
        for &m in it {
            acc = self.compose(m, acc)?;
        }
        Some(acc)
    }

    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        self.homs.get(&(a, b)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// A two-sided inverse of `m`, if one exists.
    pub fn inverse(&self, m: usize) -> Option<usize> {
        let (a, b) = (self.src(m), self.tgt(m));
        self.hom(b, a).iter().copied().find(|&n| {
            self.compose(n, m) == Some(self.id(a)) && self.compose(m, n) == Some(self.id(b))
        })
    }

    pub fn is_iso(&self, m: usize) -> bool {
        self.inverse(m).is_some()
    }

    /// Replace one composition entry (used by fault-injection tests).
    pub fn with_entry(&self, key: (usize, usize), value: usize) -> FinCat {
        let mut c = self.clone();
        c.comp.insert(key, value);
        c
    }
}

impl fmt::Display for FinCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "objects: {}", self.objects.join(", "))?;
        for m in &self.morphisms {
            writeln!(f, "  {}: {} -> {}", m.name, self.objects[m.src], self.objects[m.tgt])?;
        }
        Ok(())
    }
}

/// Name-based builder. Identities `id_<obj>` and the unit entries of the
/// composition table are filled in automatically.
#[derive(Default, Clone, Debug)]
pub struct FinCatBuilder {
    objects: Vec<String>,
    morphisms: Vec<(String, String, String)>,
    comps: Vec<(String, String, String)>,
}

impl FinCatBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(&mut self, name: &str) -> &mut Self {
        self.objects.push(name.to_string());
        self
    }

    pub fn morphism(&mut self, name: &str, src: &str, tgt: &str) -> &mut Self {
        self.morphisms.push((name.into(), src.into(), tgt.into()));
        self
    }

    /// Records `g ∘ f = gf`.
    pub fn compose(&mut self, g: &str, f: &str, gf: &str) -> &mut Self {
        self.comps.push((g.into(), f.into(), gf.into()));
        self
    }

    pub fn build(&self) -> Result<FinCat, CoreError> {
        let obj = |n: &str| {
            self.objects
                .iter()
                .position(|o| o == n)
                .ok_or_else(|| CoreError::DanglingId(n.to_string()))
        };
        let mut morphisms = Vec::new();
        let mut identity = Vec::new();
        for (i, o) in self.objects.iter().enumerate() {
            identity.push(morphisms.len());
            morphisms.push(Mor { name: format!("id_{o}"), src: i, tgt: i });
        }
        for (n, s, t) in &self.morphisms {
            morphisms.push(Mor { name: n.clone(), src: obj(s)?, tgt: obj(t)? });
        }
        let mor = |n: &str| {
            morphisms
                .iter()
                .position(|m| m.name == n)
                .ok_or_else(|| CoreError::DanglingId(n.to_string()))
        };
        let mut comp = Vec::new();
        for (i, m) in morphisms.iter().enumerate() {
            comp.push(((identity[m.tgt], i), i));
            comp.push(((i, identity[m.src]), i));
        }
        for (g, f, gf) in &self.comps {
            comp.push(((mor(g)?, mor(f)?), mor(gf)?));
        }
        FinCat::from_parts(self.objects.clone(), morphisms, identity, comp)
    }
}

/// Checks every category law, returning one violation per failing instance.
pub fn validate_fincat(c: &FinCat) -> Report<CatLaw> {
    let mut r = Report::new();
    let mn = |m: usize| c.morphism_name(m).to_string();
    for o in c.objects() {
        let i = c.id(o);
        if c.src(i) != o || c.tgt(i) != o {
            r.push(CatLaw::IdentityBoundary, vec![c.object_name(o).to_string(), mn(i)]);
        }
    }
    for (&(g, f), &gf) in &c.comp {
        if c.tgt(f) != c.src(g) {
            r.push(CatLaw::SpuriousComposite, vec![mn(g), mn(f)]);
        } else if c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g) {
            r.push(CatLaw::CompositeBoundary, vec![mn(g), mn(f), mn(gf)]);
        }
    }
    for f in c.morphisms() {
        for b in c.objects() {
            for &g in c.hom(c.tgt(f), b) {
                if !c.comp.contains_key(&(g, f)) {
                    r.push(CatLaw::MissingComposite, vec![mn(g), mn(f)]);
                }
            }
        }
        let (a, b) = (c.src(f), c.tgt(f));
        if c.compose(c.id(b), f) != Some(f) {
            r.push(CatLaw::LeftUnit, vec![mn(f)]);
        }
        if c.compose(f, c.id(a)) != Some(f) {
            r.push(CatLaw::RightUnit, vec![mn(f)]);
        }
    }
    for f in c.morphisms() {
        for x in c.objects() {
            for &g in c.hom(c.tgt(f), x) {
                for y in c.objects() {
                    for &h in c.hom(x, y) {
                        let left = c.compose(g, f).and_then(|gf| c.compose(h, gf));
                        let right = c.compose(h, g).and_then(|hg| c.compose(hg, f));
                        if let (Some(l), Some(rr)) = (left, right) {
                            if l != rr {
                                r.push(CatLaw::Associativity, vec![mn(h), mn(g), mn(f)]);
                            }
                        }
                    }
                }
            }
        }
    }
    r.finish()
}
