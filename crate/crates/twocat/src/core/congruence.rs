use std::collections::HashMap;

use super::catuni::FinFunctor;
use super::fincat::{FinCat, Mor};
use super::CoreError;

/// Union-find over morphism ids.
#[derive(Clone, Debug)]
pub struct Congruence {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Congruence {
    pub fn new(n: usize) -> Self {
        Congruence { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when two distinct classes were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Classes sorted by least member, members ascending.
    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
        for x in 0..self.parent.len() {
            let r = self.find(x);
            by_root.entry(r).or_default().push(x);
        }
        let mut out: Vec<Vec<usize>> = by_root.into_values().collect();
        out.sort();
        out
    }
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub category: FinCat,
    pub projection: FinFunctor,
    pub classes: Vec<Vec<usize>>,
}

/// Quotient of `c` by the smallest congruence containing `rel`.
pub fn quotient(c: &FinCat, rel: &[(usize, usize)]) -> Result<Quotient, CoreError> {
    for &(a, b) in rel {
        if a >= c.morphism_count() || b >= c.morphism_count() {
            return Err(CoreError::DanglingId(format!("relation pair ({a},{b})")));
        }
        if c.src(a) != c.src(b) || c.tgt(a) != c.tgt(b) {
            return Err(CoreError::NotParallel(format!("{} ~ {}", c.morphism_name(a), c.morphism_name(b))));
        }
    }
    let mut uf = Congruence::new(c.morphism_count());
    for &(a, b) in rel {
        uf.union(a, b);
    }
    let entries = c.composition_entries();
    loop {
        let mut changed = false;
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        for &((g, f), gf) in &entries {
            let key = (uf.find(g), uf.find(f));
            match seen.get(&key) {
                Some(&other) => changed |= uf.union(other, gf),
                None => {
                    seen.insert(key, gf);
                }
            }
        }
        if !changed {
            break;
        }
    }
    let classes = uf.classes();
    let mut class_of = vec![0; c.morphism_count()];
    for (k, cl) in classes.iter().enumerate() {
        for &m in cl {
            class_of[m] = k;
        }
    }
    let morphisms = classes
        .iter()
        .map(|cl| {
            let m = cl[0];
            Mor { name: c.morphism_name(m).to_string(), src: c.src(m), tgt: c.tgt(m) }
        })
        .collect();
    let identity = c.objects().map(|o| class_of[c.id(o)]).collect();
    let comp: HashMap<(usize, usize), usize> =
        entries.iter().map(|&((g, f), gf)| ((class_of[g], class_of[f]), class_of[gf])).collect();
    let category = FinCat::from_parts(c.object_names().to_vec(), morphisms, identity, comp)?;
    let projection = FinFunctor { obj: c.objects().collect(), mor: class_of };
    Ok(Quotient { category, projection, classes })
}
