use std::fmt;

use crate::core::traits::{Enumerable, TwoCategory};
use crate::maps::PseudoFunctorOf;

/// The result of one search: a witness, a genuine counterexample, or an
/// inconclusive answer because the search space was truncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<W> {
    Witness(W),
    Counterexample,
    BoundTooSmall,
}

impl<W> Outcome<W> {
    pub fn witness(&self) -> Option<&W> {
        match self {
            Outcome::Witness(w) => Some(w),
            _ => None,
        }
    }
    pub fn is_witness(&self) -> bool {
        matches!(self, Outcome::Witness(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck<I, W> {
    pub instance: I,
    pub outcome: Outcome<W>,
}

/// F0 witness: `f: C -> E`, `g: D -> E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cospan<O, A> {
    pub e: O,
    pub f: A,
    pub g: A,
}

/// F1 witness: `h` and an invertible `α: h f ⇒ h g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coequalizer<A, C> {
    pub h: A,
    pub alpha: C,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredReport<O, A, C> {
    pub nonempty: bool,
    pub f0: Vec<AxiomCheck<(O, O), Cospan<O, A>>>,
    pub f1: Vec<AxiomCheck<(A, A), Coequalizer<A, C>>>,
    /// F2 witness: `h` with `h α = h β`.
    pub f2: Vec<AxiomCheck<(C, C), A>>,
}

pub type FilteredReportOf<K> =
    FilteredReport<<K as TwoCategory>::Obj, <K as TwoCategory>::Arrow, <K as TwoCategory>::Cell>;

impl<O, A, C> FilteredReport<O, A, C> {
    pub fn is_filtered(&self) -> bool {
        self.nonempty
            && self.f0.iter().all(|c| c.outcome.is_witness())
            && self.f1.iter().all(|c| c.outcome.is_witness())
            && self.f2.iter().all(|c| c.outcome.is_witness())
    }

    pub fn is_inconclusive(&self) -> bool {
        self.f0.iter().any(|c| matches!(c.outcome, Outcome::BoundTooSmall))
            || self.f1.iter().any(|c| matches!(c.outcome, Outcome::BoundTooSmall))
            || self.f2.iter().any(|c| matches!(c.outcome, Outcome::BoundTooSmall))
    }
}

impl<O: fmt::Debug, A: fmt::Debug, C: fmt::Debug> FilteredReport<O, A, C> {
    /// The first failing clause, as a one-line description.
    pub fn first_failure(&self) -> Option<String> {
        if !self.nonempty {
            return Some("empty 2-category".into());
        }
        let tag = |o: bool| if o { "BoundTooSmall" } else { "counterexample" };
        if let Some(c) = self.f0.iter().find(|c| !c.outcome.is_witness()) {
            return Some(format!("F0 {} at {:?}", tag(matches!(c.outcome, Outcome::BoundTooSmall)), c.instance));
        }
        if let Some(c) = self.f1.iter().find(|c| !c.outcome.is_witness()) {
            return Some(format!("F1 {} at {:?}", tag(matches!(c.outcome, Outcome::BoundTooSmall)), c.instance));
        }
        if let Some(c) = self.f2.iter().find(|c| !c.outcome.is_witness()) {
            return Some(format!("F2 {} at {:?}", tag(matches!(c.outcome, Outcome::BoundTooSmall)), c.instance));
        }
        None
    }
}

impl<O: fmt::Debug, A: fmt::Debug, C: fmt::Debug> fmt::Display for FilteredReport<O, A, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let count = |v: &[bool]| v.iter().filter(|b| **b).count();
        let f0: Vec<bool> = self.f0.iter().map(|c| c.outcome.is_witness()).collect();
        let f1: Vec<bool> = self.f1.iter().map(|c| c.outcome.is_witness()).collect();
        let f2: Vec<bool> = self.f2.iter().map(|c| c.outcome.is_witness()).collect();
        writeln!(f, "filtered: {}", if self.is_filtered() { "yes" } else { "no" })?;
        writeln!(f, "  F0: {}/{} instances witnessed", count(&f0), f0.len())?;
        writeln!(f, "  F1: {}/{} instances witnessed", count(&f1), f1.len())?;
        write!(f, "  F2: {}/{} instances witnessed", count(&f2), f2.len())?;
        if let Some(s) = self.first_failure() {
            write!(f, "\n  first failure: {s}")?;
        }
        Ok(())
    }
}

fn f0_search<K: Enumerable>(k: &K, c: &K::Obj, d: &K::Obj) -> Option<Cospan<K::Obj, K::Arrow>> {
    for e in k.objects() {
        let fs = k.arrows_between(c, &e);
        let Some(f) = fs.first() else { continue };
        if let Some(g) = k.arrows_between(d, &e).into_iter().next() {
            return Some(Cospan { e, f: f.clone(), g });
        }
    }
    None
}

fn f1_search<K: Enumerable>(k: &K, f: &K::Arrow, g: &K::Arrow) -> Option<Coequalizer<K::Arrow, K::Cell>> {
    let d = k.arrow_tgt(f);
    for e in k.objects() {
        for h in k.arrows_between(&d, &e) {
            let (Some(hf), Some(hg)) = (k.compose(&h, f), k.compose(&h, g)) else { continue };
            if let Some(alpha) = k.cells_between(&hf, &hg).into_iter().find(|a| k.is_invertible(a)) {
                return Some(Coequalizer { h, alpha });
            }
        }
    }
    None
}

fn f2_search<K: Enumerable>(k: &K, a: &K::Cell, b: &K::Cell) -> Option<K::Arrow> {
    let d = k.cell_tgt0(a);
    for e in k.objects() {
        for h in k.arrows_between(&d, &e) {
            if k.lwhisker(&h, a).is_some() && k.lwhisker(&h, a) == k.lwhisker(&h, b) {
                return Some(h);
            }
        }
    }
    None
}

fn miss<W>(truncated: bool) -> Outcome<W> {
    if truncated {
        Outcome::BoundTooSmall
    } else {
        Outcome::Counterexample
    }
}

/// Exhaustive F0, F1, F2 check of `k`.
pub fn check_2filtered<K: Enumerable>(k: &K) -> FilteredReportOf<K> {
    check_2filtered_in(k, &k.objects())
}

/// F0–F2 for instances among `objs`, with witnesses searched in all of `k`.
/// A failed search in a truncated `k` is reported as `BoundTooSmall`.
pub fn check_2filtered_in<K: Enumerable>(k: &K, objs: &[K::Obj]) -> FilteredReportOf<K> {
    let truncated = k.truncated();
    let mut f0 = Vec::new();
    for (x, c) in objs.iter().enumerate() {
        for d in &objs[x..] {
            let outcome = match f0_search(k, c, d) {
                Some(w) => Outcome::Witness(w),
                None => miss(truncated),
            };
            f0.push(AxiomCheck { instance: (c.clone(), d.clone()), outcome });
        }
    }
    let mut f1 = Vec::new();
    let mut f2 = Vec::new();
    for c in objs {
        for d in objs {
            let arrows = k.arrows_between(c, d);
            for (x, f) in arrows.iter().enumerate() {
                for g in &arrows[x + 1..] {
                    let outcome = match f1_search(k, f, g) {
                        Some(w) => Outcome::Witness(w),
                        None => miss(truncated),
                    };
                    f1.push(AxiomCheck { instance: (f.clone(), g.clone()), outcome });
                }
            }
            for f in &arrows {
                for g in &arrows {
                    let cells = k.cells_between(f, g);
                    for (x, a) in cells.iter().enumerate() {
                        for b in &cells[x + 1..] {
                            let outcome = match f2_search(k, a, b) {
                                Some(w) => Outcome::Witness(w),
                                None => miss(truncated),
                            };
                            f2.push(AxiomCheck { instance: (a.clone(), b.clone()), outcome });
                        }
                    }
                }
            }
        }
    }
    FilteredReport { nonempty: !objs.is_empty(), f0, f1, f2 }
}

/// Re-validates every stored witness against the operations of `k`.
pub fn recheck_filtered<K: Enumerable>(k: &K, r: &FilteredReportOf<K>) -> bool {
    let f0 = r.f0.iter().all(|c| match &c.outcome {
        Outcome::Witness(w) => {
            let (a, b) = &c.instance;
            k.arrow_src(&w.f) == *a && k.arrow_src(&w.g) == *b && k.arrow_tgt(&w.f) == w.e && k.arrow_tgt(&w.g) == w.e
        }
        _ => true,
    });
    let f1 = r.f1.iter().all(|c| match &c.outcome {
        Outcome::Witness(w) => {
            let (f, g) = &c.instance;
            k.compose(&w.h, f) == Some(k.cell_src(&w.alpha))
                && k.compose(&w.h, g) == Some(k.cell_tgt(&w.alpha))
                && k.is_invertible(&w.alpha)
        }
        _ => true,
    });
    let f2 = r.f2.iter().all(|c| match &c.outcome {
        Outcome::Witness(h) => {
            let (a, b) = &c.instance;
            k.lwhisker(h, a).is_some() && k.lwhisker(h, a) == k.lwhisker(h, b)
        }
        _ => true,
    });
    f0 && f1 && f2
}

/// CF0 witness: `i` and `a: j -> F i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reach<IO, JA> {
    pub i: IO,
    pub a: JA,
}

/// CF1 witness: `u: i -> i′` and an invertible `α: F(u) a ⇒ F(u) b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Merge<IA, JC> {
    pub u: IA,
    pub alpha: JC,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofinalReport<IO, IA, JO, JA, JC> {
    pub source_filtered: bool,
    pub cf0: Vec<AxiomCheck<JO, Reach<IO, JA>>>,
    /// Instances `(j, i, a, b)`.
    pub cf1: Vec<AxiomCheck<(JO, IO, JA, JA), Merge<IA, JC>>>,
    /// Instances `(i, α, β)`; witness `u` with `F(u) α = F(u) β`.
    pub cf2: Vec<AxiomCheck<(IO, JC, JC), IA>>,
    /// Filteredness of the target on the probed fragment, checked when the
    /// verdict is positive.
    pub target_filtered: Option<bool>,
    pub notes: Vec<String>,
}

pub type CofinalReportOf<I, J> = CofinalReport<
    <I as TwoCategory>::Obj,
    <I as TwoCategory>::Arrow,
    <J as TwoCategory>::Obj,
    <J as TwoCategory>::Arrow,
    <J as TwoCategory>::Cell,
>;

impl<IO, IA, JO, JA, JC> CofinalReport<IO, IA, JO, JA, JC> {
    pub fn is_cofinal(&self) -> bool {
        self.cf0.iter().all(|c| c.outcome.is_witness())
            && self.cf1.iter().all(|c| c.outcome.is_witness())
            && self.cf2.iter().all(|c| c.outcome.is_witness())
    }

    pub fn is_inconclusive(&self) -> bool {
        self.cf0.iter().any(|c| matches!(c.outcome, Outcome::BoundTooSmall))
            || self.cf1.iter().any(|c| matches!(c.outcome, Outcome::BoundTooSmall))
            || self.cf2.iter().any(|c| matches!(c.outcome, Outcome::BoundTooSmall))
    }
}

impl<IO: fmt::Debug, IA: fmt::Debug, JO: fmt::Debug, JA: fmt::Debug, JC: fmt::Debug> fmt::Display
    for CofinalReport<IO, IA, JO, JA, JC>
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ok = |n: usize, m: usize| format!("{n}/{m} instances witnessed");
        let w0 = self.cf0.iter().filter(|c| c.outcome.is_witness()).count();
        let w1 = self.cf1.iter().filter(|c| c.outcome.is_witness()).count();
        let w2 = self.cf2.iter().filter(|c| c.outcome.is_witness()).count();
        let verdict = if self.is_cofinal() {
            "yes"
        } else if self.is_inconclusive() {
            "inconclusive (BoundTooSmall)"
        } else {
            "no"
        };
        writeln!(f, "cofinal: {verdict}")?;
        writeln!(f, "  CF0: {}", ok(w0, self.cf0.len()))?;
        writeln!(f, "  CF1: {}", ok(w1, self.cf1.len()))?;
        write!(f, "  CF2: {}", ok(w2, self.cf2.len()))?;
        if let Some(c) = self.cf0.iter().find(|c| !c.outcome.is_witness()) {
            write!(f, "\n  CF0 fails at j={:?}", c.instance)?;
        } else if let Some(c) = self.cf1.iter().find(|c| !c.outcome.is_witness()) {
            write!(f, "\n  CF1 fails at {:?}", c.instance)?;
        } else if let Some(c) = self.cf2.iter().find(|c| !c.outcome.is_witness()) {
            write!(f, "\n  CF2 fails at {:?}", c.instance)?;
        }
        if let Some(t) = self.target_filtered {
            write!(f, "\n  target filtered: {}", if t { "yes" } else { "no" })?;
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}

/// Exhaustive CF0–CF2 check of `f: I -> J`.
pub fn check_2cofinal<I: Enumerable, J: Enumerable>(i: &I, j: &J, f: &PseudoFunctorOf<I, J>) -> CofinalReportOf<I, J> {
    check_2cofinal_in(i, j, f, &i.objects(), false)
}

/// CF1/CF2 instances are taken at source objects in `objs`; witnesses come
/// from all of `i`. When `i` is itself a truncation (`source_truncated`) or
/// `j` is truncated, failed searches are reported as `BoundTooSmall`.
pub fn check_2cofinal_in<I: Enumerable, J: Enumerable>(
    i: &I,
    j: &J,
    f: &PseudoFunctorOf<I, J>,
    objs: &[I::Obj],
    source_truncated: bool,
) -> CofinalReportOf<I, J> {
    let mut notes = Vec::new();
    let src_rep = check_2filtered(i);
    let source_filtered = src_rep.is_filtered();
    if !source_filtered {
        notes.push(format!("source not 2-filtered: {}", src_rep.first_failure().unwrap_or_default()));
    }
    let mut cf0 = Vec::new();
    for jo in j.objects() {
        let mut found = None;
        'outer: for io in i.objects() {
            let Some(fi) = f.obj.get(&io) else { continue };
            if let Some(a) = j.arrows_between(&jo, fi).into_iter().next() {
                found = Some(Reach { i: io, a });
                break 'outer;
            }
        }
        let outcome = match found {
            Some(w) => Outcome::Witness(w),
            None => miss(source_truncated || j.truncated()),
        };
        cf0.push(AxiomCheck { instance: jo, outcome });
    }
    let mut cf1 = Vec::new();
    let mut cf2 = Vec::new();
    for jo in j.objects() {
        for io in objs {
            let Some(fi) = f.obj.get(io) else { continue };
            let arrows = j.arrows_between(&jo, fi);
            let outs: Vec<(I::Arrow, J::Arrow)> = i
                .arrows_from(io)
                .into_iter()
                .filter_map(|u| f.arrow.get(&u).map(|fu| (u.clone(), fu.clone())))
                .collect();
            for (x, a) in arrows.iter().enumerate() {
                for b in &arrows[x + 1..] {
                    let found = outs.iter().find_map(|(u, fu)| {
                        let (fa, fb) = (j.compose(fu, a)?, j.compose(fu, b)?);
                        let alpha = j.cells_between(&fa, &fb).into_iter().find(|c| j.is_invertible(c))?;
                        Some(Merge { u: u.clone(), alpha })
                    });
                    let outcome = match found {
                        Some(w) => Outcome::Witness(w),
                        None => miss(source_truncated),
                    };
                    cf1.push(AxiomCheck { instance: (jo.clone(), io.clone(), a.clone(), b.clone()), outcome });
                }
            }
            for a in &arrows {
                for b in &arrows {
                    let cells = j.cells_between(a, b);
                    for (x, al) in cells.iter().enumerate() {
                        for be in &cells[x + 1..] {
                            let found = outs.iter().find_map(|(u, fu)| {
                                let l = j.lwhisker(fu, al)?;
                                (Some(l) == j.lwhisker(fu, be)).then(|| u.clone())
                            });
                            let outcome = match found {
                                Some(w) => Outcome::Witness(w),
                                None => miss(source_truncated),
                            };
                            cf2.push(AxiomCheck { instance: (io.clone(), al.clone(), be.clone()), outcome });
                        }
                    }
                }
            }
        }
    }
    if j.truncated() {
        notes.push("target truncated: CF1/CF2 instances limited to the enumerated 1-cells".into());
    }
    let mut rep = CofinalReport { source_filtered, cf0, cf1, cf2, target_filtered: None, notes };
    if rep.is_cofinal() {
        rep.target_filtered = Some(check_2filtered(j).is_filtered());
    }
    rep
}
