use std::fmt::Debug;
use std::hash::Hash;

use super::twocat::TwoCat;

/// Cell ids usable as map keys and in deterministic reports.
pub trait CellId: Clone + Eq + Hash + Ord + Debug {}
impl<T: Clone + Eq + Hash + Ord + Debug> CellId for T {}

/// A strict 2-category presented by its operations. Composition returns
/// `None` on a boundary mismatch or when the operation is undefined.
pub trait TwoCategory {
    type Obj: CellId;
    type Arrow: CellId;
    type Cell: CellId;

    fn arrow_src(&self, f: &Self::Arrow) -> Self::Obj;
    fn arrow_tgt(&self, f: &Self::Arrow) -> Self::Obj;
    fn cell_src(&self, a: &Self::Cell) -> Self::Arrow;
    fn cell_tgt(&self, a: &Self::Cell) -> Self::Arrow;
    fn id_arrow(&self, o: &Self::Obj) -> Self::Arrow;
    fn id_cell(&self, f: &Self::Arrow) -> Self::Cell;
    /// `g f`.
    fn compose(&self, g: &Self::Arrow, f: &Self::Arrow) -> Option<Self::Arrow>;
    /// `b ∘ a`.
    fn vertical(&self, b: &Self::Cell, a: &Self::Cell) -> Option<Self::Cell>;
    /// `b a`.
    fn horizontal(&self, b: &Self::Cell, a: &Self::Cell) -> Option<Self::Cell>;
    fn inverse(&self, a: &Self::Cell) -> Option<Self::Cell>;

    fn describe_obj(&self, o: &Self::Obj) -> String {
        format!("{o:?}")
    }
    fn describe_arrow(&self, f: &Self::Arrow) -> String {
        format!("{f:?}")
    }
    fn describe_cell(&self, a: &Self::Cell) -> String {
        format!("{a:?}")
    }

    fn cell_src0(&self, a: &Self::Cell) -> Self::Obj {
        self.arrow_src(&self.cell_src(a))
    }
    fn cell_tgt0(&self, a: &Self::Cell) -> Self::Obj {
        self.arrow_tgt(&self.cell_src(a))
    }
    /// `g a`.
    fn lwhisker(&self, g: &Self::Arrow, a: &Self::Cell) -> Option<Self::Cell> {
        self.horizontal(&self.id_cell(g), a)
    }
    /// `b f`.
    fn rwhisker(&self, b: &Self::Cell, f: &Self::Arrow) -> Option<Self::Cell> {
        self.horizontal(b, &self.id_cell(f))
    }
    fn is_invertible(&self, a: &Self::Cell) -> bool {
        self.inverse(a).is_some()
    }
    /// Vertical composite of a chain given first-to-last.
    fn vchain(&self, cells: &[Self::Cell]) -> Option<Self::Cell> {
        let (first, rest) = cells.split_first()?;
        let mut acc = first.clone();
        for c in rest {
            acc = self.vertical(c, &acc)?;
        }
        Some(acc)
    }
    /// Composite of a 1-cell path given first-to-last.
    fn path(&self, arrows: &[Self::Arrow]) -> Option<Self::Arrow> {
        let (first, rest) = arrows.split_first()?;
        let mut acc = first.clone();
        for f in rest {
            acc = self.compose(f, &acc)?;
        }
        Some(acc)
    }
}

/// 2-categories whose cells can be listed.
pub trait Enumerable: TwoCategory {
    fn objects(&self) -> Vec<Self::Obj>;
    fn arrows_between(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::Arrow>;
    fn cells_between(&self, f: &Self::Arrow, g: &Self::Arrow) -> Vec<Self::Cell>;
    /// True when the listing is a bounded fragment rather than everything.
    fn truncated(&self) -> bool {
        false
    }

    fn all_arrows(&self) -> Vec<Self::Arrow> {
        let obs = self.objects();
        let mut out = Vec::new();
        for a in &obs {
            for b in &obs {
                out.extend(self.arrows_between(a, b));
            }
        }
        out
    }
    fn all_cells(&self) -> Vec<Self::Cell> {
        let obs = self.objects();
        let mut out = Vec::new();
        for a in &obs {
            for b in &obs {
                let hom = self.arrows_between(a, b);
                for f in &hom {
                    for g in &hom {
                        out.extend(self.cells_between(f, g));
                    }
                }
            }
        }
        out
    }
    fn arrows_from(&self, a: &Self::Obj) -> Vec<Self::Arrow> {
        self.objects().iter().flat_map(|b| self.arrows_between(a, b)).collect()
    }
    fn arrows_into(&self, b: &Self::Obj) -> Vec<Self::Arrow> {
        self.objects().iter().flat_map(|a| self.arrows_between(a, b)).collect()
    }
    fn parallel_cells(&self, f: &Self::Arrow) -> Vec<Self::Cell> {
        let (a, b) = (self.arrow_src(f), self.arrow_tgt(f));
        self.arrows_between(&a, &b).iter().flat_map(|g| self.cells_between(f, g)).collect()
    }
}

impl TwoCategory for TwoCat {
    type Obj = usize;
    type Arrow = usize;
    type Cell = usize;

    fn arrow_src(&self, f: &usize) -> usize {
        self.src(*f)
    }
    fn arrow_tgt(&self, f: &usize) -> usize {
        self.tgt(*f)
    }
    fn cell_src(&self, a: &usize) -> usize {
        self.csrc(*a)
    }
    fn cell_tgt(&self, a: &usize) -> usize {
        self.ctgt(*a)
    }
    fn id_arrow(&self, o: &usize) -> usize {
        self.id1(*o)
    }
    fn id_cell(&self, f: &usize) -> usize {
        self.id2(*f)
    }
    fn compose(&self, g: &usize, f: &usize) -> Option<usize> {
        self.comp1(*g, *f)
    }
    fn vertical(&self, b: &usize, a: &usize) -> Option<usize> {
        self.vert(*b, *a)
    }
    fn horizontal(&self, b: &usize, a: &usize) -> Option<usize> {
        self.horiz(*b, *a)
    }
    fn inverse(&self, a: &usize) -> Option<usize> {
        TwoCat::inverse(self, *a)
    }
    fn describe_obj(&self, o: &usize) -> String {
        self.object_name(*o).to_string()
    }
    fn describe_arrow(&self, f: &usize) -> String {
        self.arrow_name(*f).to_string()
    }
    fn describe_cell(&self, a: &usize) -> String {
        self.cell_name(*a).to_string()
    }
}

impl Enumerable for TwoCat {
    fn objects(&self) -> Vec<usize> {
        TwoCat::objects(self).collect()
    }
    fn arrows_between(&self, a: &usize, b: &usize) -> Vec<usize> {
        self.hom1(*a, *b).to_vec()
    }
    fn cells_between(&self, f: &usize, g: &usize) -> Vec<usize> {
        self.hom2(*f, *g).to_vec()
    }
}

/// The 1-cell dual `K^op`: same objects and 2-cells, 1-cells reversed.
#[derive(Clone, Copy, Debug)]
pub struct Op<'a, K>(pub &'a K);

impl<K: TwoCategory> TwoCategory for Op<'_, K> {
    type Obj = K::Obj;
    type Arrow = K::Arrow;
    type Cell = K::Cell;

    fn arrow_src(&self, f: &K::Arrow) -> K::Obj {
        self.0.arrow_tgt(f)
    }
    fn arrow_tgt(&self, f: &K::Arrow) -> K::Obj {
        self.0.arrow_src(f)
    }
    fn cell_src(&self, a: &K::Cell) -> K::Arrow {
        self.0.cell_src(a)
    }
    fn cell_tgt(&self, a: &K::Cell) -> K::Arrow {
        self.0.cell_tgt(a)
    }
    fn id_arrow(&self, o: &K::Obj) -> K::Arrow {
        self.0.id_arrow(o)
    }
    fn id_cell(&self, f: &K::Arrow) -> K::Cell {
        self.0.id_cell(f)
    }
    fn compose(&self, g: &K::Arrow, f: &K::Arrow) -> Option<K::Arrow> {
        self.0.compose(f, g)
    }
    fn vertical(&self, b: &K::Cell, a: &K::Cell) -> Option<K::Cell> {
        self.0.vertical(b, a)
    }
    fn horizontal(&self, b: &K::Cell, a: &K::Cell) -> Option<K::Cell> {
        self.0.horizontal(a, b)
    }
    fn inverse(&self, a: &K::Cell) -> Option<K::Cell> {
        self.0.inverse(a)
    }
    fn describe_obj(&self, o: &K::Obj) -> String {
        self.0.describe_obj(o)
    }
    fn describe_arrow(&self, f: &K::Arrow) -> String {
        self.0.describe_arrow(f)
    }
    fn describe_cell(&self, a: &K::Cell) -> String {
        self.0.describe_cell(a)
    }
}

impl<K: Enumerable> Enumerable for Op<'_, K> {
    fn objects(&self) -> Vec<K::Obj> {
        self.0.objects()
    }
    fn arrows_between(&self, a: &K::Obj, b: &K::Obj) -> Vec<K::Arrow> {
        self.0.arrows_between(b, a)
    }
    fn cells_between(&self, f: &K::Arrow, g: &K::Arrow) -> Vec<K::Cell> {
        self.0.cells_between(f, g)
    }
    fn truncated(&self) -> bool {
        self.0.truncated()
    }
}
