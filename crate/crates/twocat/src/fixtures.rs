//! Small named categories and 2-categories.

use crate::core::catuni::{enumerate_functors, CatUniverse, FinFunctor};
use crate::core::{FinCat, FinCatBuilder, TwoCat};

/// The chain `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> FinCat {
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    FinCat::poset(&names, |a, b| a <= b)
}

/// `a, b < t`.
pub fn vee() -> FinCat {
    let names: Vec<String> = ["a", "b", "t"].iter().map(|s| s.to_string()).collect();
    FinCat::poset(&names, |x, y| x == y || y == 2)
}

/// One object, morphisms `id` and `s` with `s s = id`.
pub fn z2() -> FinCat {
    FinCatBuilder::new()
        .object("*")
        .morphism("s", "*", "*")
        .compose("s", "s", "id_*")
        .build()
        .expect("z2 tables")
}

/// Two objects `a ≅ b` with `f: a -> b`, `g: b -> a` mutually inverse.
pub fn walking_iso() -> FinCat {
    FinCatBuilder::new()
        .object("a")
        .object("b")
        .morphism("f", "a", "b")
        .morphism("g", "b", "a")
        .compose("g", "f", "id_a")
        .compose("f", "g", "id_b")
        .build()
        .expect("walking iso tables")
}

/// A square `p a = b i` over an isomorphism `p: Y -> B` with inverse `g`,
/// together with the lift `gb: X -> Y`.
pub fn iso_square() -> FinCat {
    FinCatBuilder::new()
        .object("A")
        .object("X")
        .object("Y")
        .object("B")
        .morphism("i", "A", "X")
        .morphism("a", "A", "Y")
        .morphism("b", "X", "B")
        .morphism("p", "Y", "B")
        .morphism("g", "B", "Y")
        .morphism("pa", "A", "B")
        .morphism("gb", "X", "Y")
        .compose("p", "a", "pa")
        .compose("b", "i", "pa")
        .compose("g", "b", "gb")
        .compose("p", "gb", "b")
        .compose("gb", "i", "a")
        .compose("g", "pa", "a")
        .compose("g", "p", "id_Y")
        .compose("p", "g", "id_B")
        .build()
        .expect("iso square tables")
}

/// Two parallel arrows `x, y: 0 -> 1`.
pub fn parallel_pair() -> FinCat {
    FinCatBuilder::new()
        .object("0")
        .object("1")
        .morphism("x", "0", "1")
        .morphism("y", "0", "1")
        .build()
        .expect("parallel pair tables")
}

/// One object, one 1-cell, the 2-cells `{id, s}` forming `Z/2`.
pub fn z2_cells() -> TwoCat {
    CatUniverse::new(vec![z2()]).generated(&[]).0
}

/// Two objects `C0 = Z/2`, `C1 = 1`, one non-identity 1-cell `p: C1 -> C0`;
/// both `id_{C0}` and `p` carry a `Z/2` of invertible 2-cells.
pub fn point_into_z2() -> TwoCat {
    let u = CatUniverse::new(vec![z2(), FinCat::terminal()]);
    let p = u.functor(1, 0, FinFunctor { obj: vec![0], mor: vec![0] }).expect("functor");
    u.generated(&[p]).0
}

/// `{0 <= 1}` and the walking isomorphism with every functor between them,
/// and all natural transformations.
pub fn arrow_and_iso() -> TwoCat {
    let cats = vec![chain(2), walking_iso()];
    let u = CatUniverse::new(cats.clone());
    let mut gens = Vec::new();
    for (s, t) in [(0, 1), (1, 0)] {
        for f in enumerate_functors(&cats[s], &cats[t]) {
            gens.push(u.functor(s, t, f).expect("enumerated functor"));
        }
    }
    u.generated(&gens).0
}

/// The 2-category of endofunctors of `{0 <= 1}`, with all natural
/// transformations between them.
pub fn endo_arrow() -> TwoCat {
    let c = chain(2);
    let u = CatUniverse::new(vec![c.clone()]);
    let gens: Vec<_> = enumerate_functors(&c, &c).into_iter().map(|f| u.functor(0, 0, f).expect("functor")).collect();
    u.generated(&gens).0
}

/// `Z/2`, the chain of length 2 and functors from the chain into `Z/2`.
pub fn z2_and_arrow() -> TwoCat {
    let cats = vec![z2(), chain(2)];
    let u = CatUniverse::new(cats.clone());
    let gens: Vec<_> =
        enumerate_functors(&cats[1], &cats[0]).into_iter().map(|f| u.functor(1, 0, f).expect("functor")).collect();
    u.generated(&gens).0
}

/// The validated 2-categories used by the interchange suite.
pub fn interchange_fixtures() -> Vec<(&'static str, TwoCat)> {
    vec![
        ("z2_cells", z2_cells()),
        ("point_into_z2", point_into_z2()),
        ("arrow_and_iso", arrow_and_iso()),
        ("endo_arrow", endo_arrow()),
        ("z2_and_arrow", z2_and_arrow()),
    ]
}
