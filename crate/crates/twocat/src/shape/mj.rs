//! Finite diagrams in a 2-category `J`, ordered by inclusion.
//!
//! A diagram here is a finite poset with a top element `*` together with a
//! functor into the underlying category of `J`. Its size is its number of
//! objects. `A ≤ B` when `A` embeds into `B` as a (not necessarily full)
//! sub-order over the same values.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::filtered::{check_2cofinal_in, check_2filtered, check_2filtered_in, CofinalReportOf, FilteredReportOf, Outcome};
use super::ShapeError;
use crate::core::catuni::enumerate_functors;
use crate::core::{FinCat, TwoCat};
use crate::maps::{check_pseudo_functor, FunctorLaw, Probe, PseudoFunctor, PseudoFunctorOf};
use crate::core::Report;

/// Largest diagram size the enumerator accepts.
pub const MAX_CELLS: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MJDiagram {
    /// `leq[x][y]`; the last element is the top.
    pub leq: Vec<Vec<bool>>,
    /// Object of `J` at each element.
    pub obj: Vec<usize>,
    /// 1-cell of `J` at each relation `x ≤ y`.
    pub rel: Vec<Vec<Option<usize>>>,
}

impl MJDiagram {
    pub fn size(&self) -> usize {
        self.obj.len()
    }

    pub fn top(&self) -> usize {
        self.obj.len() - 1
    }

    /// The single-cell diagram at `j`.
    pub fn point(j: &TwoCat, o: usize) -> MJDiagram {
        MJDiagram { leq: vec![vec![true]], obj: vec![o], rel: vec![vec![Some(j.id1(o))]] }
    }

    fn permuted(&self, p: &[usize]) -> MJDiagram {
        // p[new] = old
        let n = self.size();
        let leq = (0..n).map(|x| (0..n).map(|y| self.leq[p[x]][p[y]]).collect()).collect();
        let obj = (0..n).map(|x| self.obj[p[x]]).collect();
        let rel = (0..n).map(|x| (0..n).map(|y| self.rel[p[x]][p[y]]).collect()).collect();
        MJDiagram { leq, obj, rel }
    }

    /// Least relabelling over all permutations that keep the top last.
    pub fn canonical(&self) -> MJDiagram {
        let n = self.size();
        let mut best = self.clone();
        let mut p: Vec<usize> = (0..n).collect();
        permute(&mut p, 0, n.saturating_sub(1), &mut |p| {
            let c = self.permuted(p);
            if c < best {
                best = c;
            }
        });
        best
    }

    /// Checks that the data is a poset with top and a functor into `J`.
    pub fn check(&self, j: &TwoCat) -> bool {
        let n = self.size();
        if n == 0 || self.leq.len() != n || self.rel.len() != n {
            return false;
        }
        let t = self.top();
        for x in 0..n {
            if !self.leq[x][x] || !self.leq[x][t] || self.rel[x][x] != Some(j.id1(self.obj[x])) {
                return false;
            }
            for y in 0..n {
                if self.leq[x][y] != self.rel[x][y].is_some() {
                    return false;
                }
                if x != y && self.leq[x][y] && self.leq[y][x] {
                    return false;
                }
                if let Some(m) = self.rel[x][y] {
                    if j.src(m) != self.obj[x] || j.tgt(m) != self.obj[y] {
                        return false;
                    }
                }
                for z in 0..n {
                    if self.leq[x][y] && self.leq[y][z] {
                        if !self.leq[x][z] {
                            return false;
                        }
                        let (f, g) = (self.rel[x][y].unwrap(), self.rel[y][z].unwrap());
                        if j.comp1(g, f) != self.rel[x][z] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// An injective order- and value-preserving map into `other`.
    pub fn embedding(&self, other: &MJDiagram) -> Option<Vec<usize>> {
        let mut h = vec![usize::MAX; self.size()];
        let mut used = vec![false; other.size()];
        if embed(self, other, 0, &mut h, &mut used) {
            Some(h)
        } else {
            None
        }
    }

    pub fn label(&self, j: &TwoCat) -> String {
        let n = self.size();
        let mut parts = Vec::new();
        for x in 0..n {
            parts.push(format!("{}:{}", x, j.object_name(self.obj[x])));
        }
        let mut rels = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && self.leq[x][y] {
                    rels.push(format!("{x}<{y}:{}", j.arrow_name(self.rel[x][y].unwrap())));
                }
            }
        }
        format!("[{}|{}]", parts.join(","), rels.join(","))
    }
}

fn permute(p: &mut Vec<usize>, k: usize, n: usize, visit: &mut impl FnMut(&[usize])) {
    if k >= n {
        visit(p);
        return;
    }
    for x in k..n {
        p.swap(k, x);
        permute(p, k + 1, n, visit);
        p.swap(k, x);
    }
}

fn embed(a: &MJDiagram, b: &MJDiagram, x: usize, h: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
    if x == a.size() {
        return true;
    }
    for y in 0..b.size() {
        if used[y] || b.obj[y] != a.obj[x] {
            continue;
        }
        let ok = (0..x).all(|z| {
            (!a.leq[z][x] || b.rel[h[z]][y] == a.rel[z][x]) && (!a.leq[x][z] || b.rel[y][h[z]] == a.rel[x][z])
        });
        if !ok {
            continue;
        }
        h[x] = y;
        used[y] = true;
        if embed(a, b, x + 1, h, used) {
            return true;
        }
        used[y] = false;
    }
    h[x] = usize::MAX;
    false
}

/// All naturally labelled partial orders on `m` elements (`x ≤ y` implies
/// `x ≤ y` as integers), as `leq` matrices.
fn natural_posets(m: usize) -> Vec<Vec<Vec<bool>>> {
    let mut out = Vec::new();
    let mut leq = vec![vec![false; m]; m];
    grow(0, m, &mut leq, &mut out);
    out
}

fn grow(k: usize, m: usize, leq: &mut Vec<Vec<bool>>, out: &mut Vec<Vec<Vec<bool>>>) {
    if k == m {
        out.push(leq.clone());
        return;
    }
    // choose a down-closed subset of 0..k as the strict down-set of k
    for mask in 0u32..(1 << k) {
        let down = |x: usize| mask & (1 << x) != 0;
        let closed = (0..k).all(|x| !down(x) || (0..k).all(|y| !leq[y][x] || down(y)));
        if !closed {
            continue;
        }
        for x in 0..k {
            leq[x][k] = down(x);
        }
        leq[k][k] = true;
        grow(k + 1, m, leq, out);
        for x in 0..k {
            leq[x][k] = false;
        }
        leq[k][k] = false;
    }
}

/// Every isomorphism class of diagrams in `j` with exactly `size` cells.
pub fn diagrams_of_size(j: &TwoCat, size: usize) -> BTreeSet<MJDiagram> {
    let base = j.underlying();
    let mut out = BTreeSet::new();
    if size == 0 {
        return out;
    }
    for below in natural_posets(size - 1) {
        let mut leq = vec![vec![false; size]; size];
        for x in 0..size - 1 {
            for y in 0..size - 1 {
                leq[x][y] = below[x][y];
            }
            leq[x][size - 1] = true;
        }
        leq[size - 1][size - 1] = true;
        let names: Vec<String> = (0..size).map(|x| x.to_string()).collect();
        let cat = FinCat::poset(&names, |a, b| leq[a][b]);
        for f in enumerate_functors(&cat, &base) {
            let mut rel = vec![vec![None; size]; size];
            for m in cat.morphisms() {
                rel[cat.src(m)][cat.tgt(m)] = Some(f.mor[m]);
            }
            let d = MJDiagram { leq: leq.clone(), obj: f.obj.clone(), rel };
            out.insert(d.canonical());
        }
    }
    out
}

/// A truncation `M_n(J)`: its elements, the order as a locally discrete
/// 2-category, and `Φ` as a strict 2-functor into `J`.
#[derive(Clone, Debug)]
pub struct MJTruncation {
    pub n: usize,
    pub elements: Vec<MJDiagram>,
    pub category: TwoCat,
    pub phi: PseudoFunctorOf<TwoCat, TwoCat>,
    /// The embedding chosen for each strict relation, keyed by the 1-cell.
    pub embeddings: BTreeMap<usize, Vec<usize>>,
}

impl MJTruncation {
    pub fn build(j: &TwoCat, n: usize) -> Result<MJTruncation, ShapeError> {
        if n > MAX_CELLS {
            return Err(ShapeError::BoundTooLarge { bound: n, max: MAX_CELLS });
        }
        let mut elements = Vec::new();
        for s in 1..=n {
            elements.extend(diagrams_of_size(j, s));
        }
        Ok(MJTruncation::from_elements(j, n, elements))
    }

    fn from_elements(j: &TwoCat, n: usize, elements: Vec<MJDiagram>) -> MJTruncation {
        let m = elements.len();
        let mut emb = vec![vec![None; m]; m];
        for a in 0..m {
            for b in 0..m {
                if elements[a].size() <= elements[b].size() {
                    emb[a][b] = elements[a].embedding(&elements[b]);
                }
            }
        }
        let names: Vec<String> = (0..m).map(|a| format!("D{a}")).collect();
        let poset = FinCat::poset(&names, |a, b| emb[a][b].is_some());
        let category = TwoCat::locally_discrete(&poset);
        let mut obj = BTreeMap::new();
        let mut arrow = BTreeMap::new();
        let mut cell = BTreeMap::new();
        let mut embeddings = BTreeMap::new();
        for a in 0..m {
            obj.insert(a, elements[a].obj[elements[a].top()]);
        }
        for u in category.arrows() {
            let (a, b) = (category.src(u), category.tgt(u));
            let h = emb[a][b].clone().expect("relation has an embedding");
            let (da, db) = (&elements[a], &elements[b]);
            let g = db.rel[h[da.top()]][db.top()].expect("top is above everything");
            arrow.insert(u, g);
            cell.insert(u, j.id2(g));
            embeddings.insert(u, h);
        }
        let phi = PseudoFunctor::strict(&category, j, obj, arrow, cell);
        MJTruncation { n, elements, category, phi, embeddings }
    }

    pub fn of_size(&self, max: usize) -> Vec<usize> {
        (0..self.elements.len()).filter(|&a| self.elements[a].size() <= max).collect()
    }

    pub fn index_of(&self, d: &MJDiagram) -> Option<usize> {
        let c = d.canonical();
        self.elements.iter().position(|e| *e == c)
    }

    /// Elements without strict predecessors.
    pub fn minimal(&self) -> Vec<usize> {
        let k = &self.category;
        k.objects().filter(|&a| k.objects().all(|b| b == a || k.hom1(b, a).is_empty())).collect()
    }

    /// `M_n(J)` with a formal top `T` over everything, sent to the terminal
    /// object of `J`. Returns the capped category and `Φ`.
    pub fn capped(&self, j: &TwoCat, within: &[usize]) -> Result<(TwoCat, PseudoFunctorOf<TwoCat, TwoCat>), ShapeError> {
        let t = terminal_object(j).ok_or(ShapeError::NoTerminalObject)?;
        let m = within.len();
        let mut names: Vec<String> = within.iter().map(|&a| self.category.object_name(a).to_string()).collect();
        names.push("T".into());
        let k = &self.category;
        let poset = FinCat::poset(&names, |x, y| y == m || (x < m && y < m && !k.hom1(within[x], within[y]).is_empty()));
        let cat = TwoCat::locally_discrete(&poset);
        let mut obj = BTreeMap::new();
        let mut arrow = BTreeMap::new();
        let mut cell = BTreeMap::new();
        for x in 0..=m {
            obj.insert(x, if x == m { t } else { self.phi.obj[&within[x]] });
        }
        for u in cat.arrows() {
            let (x, y) = (cat.src(u), cat.tgt(u));
            let g = if y == m {
                j.hom1(obj[&x], t)[0]
            } else {
                let orig = k.hom1(within[x], within[y])[0];
                self.phi.arrow[&orig]
            };
            arrow.insert(u, g);
            cell.insert(u, j.id2(g));
        }
        let phi = PseudoFunctor::strict(&cat, j, obj, arrow, cell);
        Ok((cat, phi))
    }
}

/// An object `t` with every hom-category `J(x, t)` terminal.
pub fn terminal_object(j: &TwoCat) -> Option<usize> {
    j.objects().find(|&t| {
        j.objects().all(|x| {
            let h = j.hom1(x, t);
            h.len() == 1 && j.hom2(h[0], h[0]).len() == 1
        })
    })
}

/// An upper bound outside the enumerated truncation: the disjoint union of
/// two diagrams under a new top, mapped along an F0 cospan of `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinWitness {
    pub a: usize,
    pub b: usize,
    pub diagram: MJDiagram,
}

#[derive(Clone, Debug)]
pub struct MJReport {
    /// Sizes of the enumerated classes, by cell count.
    pub counts: Vec<usize>,
    pub antisymmetric: bool,
    /// Every element's predecessors lie in the truncation, and every full
    /// subdiagram with a top is found among them.
    pub cofinite: bool,
    pub phi_functor: Report<FunctorLaw>,
    /// F0–F2 over `M_n`, witnesses from `M_{n+slack}`.
    pub filtered: FilteredReportOf<TwoCat>,
    /// F0 instances resolved by the join construction, within the filtered slack.
    pub joins: Vec<JoinWitness>,
    /// F0 instances whose join needs more cells than allowed.
    pub bound_too_small: Vec<(usize, usize)>,
    pub cofinal: CofinalReportOf<TwoCat, TwoCat>,
    pub minimal: Vec<usize>,
}

impl MJReport {
    pub fn filtered_ok(&self) -> bool {
        self.filtered.nonempty
            && self.bound_too_small.is_empty()
            && self.filtered.f1.iter().all(|c| c.outcome.is_witness())
            && self.filtered.f2.iter().all(|c| c.outcome.is_witness())
    }

    pub fn is_ok(&self) -> bool {
        self.antisymmetric && self.cofinite && self.phi_functor.is_ok() && self.filtered_ok() && self.cofinal.is_cofinal()
    }
}

impl fmt::Display for MJReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "classes by size: {:?}", self.counts)?;
        writeln!(f, "poset: {}", yn(self.antisymmetric))?;
        writeln!(f, "cofinite: {}", yn(self.cofinite))?;
        writeln!(f, "phi is a 2-functor: {}", yn(self.phi_functor.is_ok()))?;
        let inside = self.filtered.f0.iter().filter(|c| c.outcome.is_witness()).count();
        writeln!(
            f,
            "filtered: {} (F0: {} in truncation, {} by join, {} BoundTooSmall)",
            yn(self.filtered_ok()),
            inside,
            self.joins.len(),
            self.bound_too_small.len()
        )?;
        writeln!(f, "phi {}", self.cofinal.to_string().replace('\n', "\n    "))?;
        write!(f, "minimal elements: {:?}", self.minimal)
    }
}

#[derive(Clone, Debug)]
pub struct MJ {
    /// The enumerated truncation `M_{n+slack}`; elements of size `≤ n` are
    /// the instances.
    pub truncation: MJTruncation,
    pub n: usize,
    pub slack: usize,
    pub filtered_slack: usize,
    pub report: MJReport,
}

/// Builds `M_n(J)` and checks it. `slack` extra cells are enumerated for
/// witnesses; F0 joins may use up to `n + filtered_slack` cells.
pub fn build_mj(j: &TwoCat, n: usize, slack: usize, filtered_slack: Option<usize>) -> Result<MJ, ShapeError> {
    let jf = check_2filtered(j);
    if !jf.is_filtered() {
        return Err(ShapeError::NotFiltered(jf.first_failure().unwrap_or_default()));
    }
    let filtered_slack = filtered_slack.unwrap_or(n + 1);
    let truncation = MJTruncation::build(j, n + slack)?;
    let k = &truncation.category;
    let inner = truncation.of_size(n);
    let counts = (1..=n + slack).map(|s| truncation.elements.iter().filter(|e| e.size() == s).count()).collect();

    let antisymmetric = k.objects().all(|a| k.objects().all(|b| a == b || k.hom1(a, b).is_empty() || k.hom1(b, a).is_empty()));

    let mut cofinite = true;
    for &a in &inner {
        let d = &truncation.elements[a];
        let preds = k.objects().filter(|&b| !k.hom1(b, a).is_empty());
        if preds.clone().any(|b| truncation.elements[b].size() > d.size()) {
            cofinite = false;
        }
        for sub in full_subdiagrams(d) {
            match truncation.index_of(&sub) {
                Some(b) if !k.hom1(b, a).is_empty() => {}
                _ => cofinite = false,
            }
        }
    }

    let phi_functor = check_pseudo_functor(k, j, &truncation.phi, &Probe::exhaustive(k));

    let objs: Vec<usize> = inner.clone();
    let mut filtered = check_2filtered_in(k, &objs);
    let mut joins = Vec::new();
    let mut bound_too_small = Vec::new();
    for c in filtered.f0.iter_mut() {
        if c.outcome.is_witness() {
            continue;
        }
        let (a, b) = c.instance;
        let (da, db) = (&truncation.elements[a], &truncation.elements[b]);
        c.outcome = Outcome::BoundTooSmall;
        if da.size() + db.size() + 1 > n + filtered_slack {
            bound_too_small.push((a, b));
            continue;
        }
        match join(j, da, db) {
            Some(diagram) if da.embedding(&diagram).is_some() && db.embedding(&diagram).is_some() => {
                joins.push(JoinWitness { a, b, diagram })
            }
            _ => bound_too_small.push((a, b)),
        }
    }

    let cofinal = check_2cofinal_in(k, j, &truncation.phi, &inner, true);
    let minimal = truncation.minimal().into_iter().filter(|a| inner.contains(a)).collect();
    let report = MJReport { counts, antisymmetric, cofinite, phi_functor, filtered, joins, bound_too_small, cofinal, minimal };
    Ok(MJ { truncation, n, slack, filtered_slack, report })
}

/// Full subdiagrams of `d` on subsets that have a greatest element.
fn full_subdiagrams(d: &MJDiagram) -> Vec<MJDiagram> {
    let n = d.size();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let keep: Vec<usize> = (0..n).filter(|x| mask & (1 << x) != 0).collect();
        let Some(&top) = keep.iter().find(|&&t| keep.iter().all(|&x| d.leq[x][t])) else { continue };
        let mut order: Vec<usize> = keep.iter().copied().filter(|&x| x != top).collect();
        order.push(top);
        let m = order.len();
        let leq = (0..m).map(|x| (0..m).map(|y| d.leq[order[x]][order[y]]).collect()).collect();
        let obj = order.iter().map(|&x| d.obj[x]).collect();
        let rel = (0..m).map(|x| (0..m).map(|y| d.rel[order[x]][order[y]]).collect()).collect();
        out.push(MJDiagram { leq, obj, rel });
    }
    out
}

/// `A ⊔ B` under a new top mapped to the first F0 cospan of `J` over
/// `Φ(A), Φ(B)`.
pub fn join(j: &TwoCat, a: &MJDiagram, b: &MJDiagram) -> Option<MJDiagram> {
    let (ta, tb) = (a.obj[a.top()], b.obj[b.top()]);
    let (e, fa, fb) = j.objects().find_map(|e| {
        let fa = *j.hom1(ta, e).first()?;
        let fb = *j.hom1(tb, e).first()?;
        Some((e, fa, fb))
    })?;
    let (na, nb) = (a.size(), b.size());
    let n = na + nb + 1;
    let mut leq = vec![vec![false; n]; n];
    let mut rel = vec![vec![None; n]; n];
    let mut obj = Vec::with_capacity(n);
    for x in 0..na {
        obj.push(a.obj[x]);
        for y in 0..na {
            leq[x][y] = a.leq[x][y];
            rel[x][y] = a.rel[x][y];
        }
        leq[x][n - 1] = true;
        rel[x][n - 1] = Some(j.comp1(fa, a.rel[x][a.top()]?)?);
    }
    for x in 0..nb {
        obj.push(b.obj[x]);
        for y in 0..nb {
            leq[na + x][na + y] = b.leq[x][y];
            rel[na + x][na + y] = b.rel[x][y];
        }
        leq[na + x][n - 1] = true;
        rel[na + x][n - 1] = Some(j.comp1(fb, b.rel[x][b.top()]?)?);
    }
    obj.push(e);
    leq[n - 1][n - 1] = true;
    rel[n - 1][n - 1] = Some(j.id1(e));
    let d = MJDiagram { leq, obj, rel };
    d.check(j).then_some(d)
}
