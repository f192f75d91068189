//! Direct brute force for lifting and the model axioms, written against
//! the raw tables rather than the pasting evaluator.

use std::collections::{BTreeMap, BTreeSet};

use twocat::core::TwoCat;
use twocat::model::{Axiom, ModelClasses};

pub fn fills(k: &TwoCat, i: usize, p: usize, a: usize, b: usize, gamma: usize) -> bool {
    for &f in k.hom1(k.tgt(i), k.src(p)) {
        let (fi, pf) = (k.comp1(f, i).unwrap(), k.comp1(p, f).unwrap());
        for &l in k.hom2(a, fi) {
            for &r in k.hom2(pf, b) {
                if k.is_invertible(l) && k.is_invertible(r) {
                    let lhs = k.vert(k.rwhisker(r, i).unwrap(), k.lwhisker(p, l).unwrap());
                    if lhs == Some(gamma) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

pub fn lifts(k: &TwoCat, i: usize, p: usize) -> bool {
    k.hom1(k.src(i), k.src(p)).iter().all(|&a| {
        k.hom1(k.tgt(i), k.tgt(p)).iter().all(|&b| {
            let (pa, bi) = (k.comp1(p, a).unwrap(), k.comp1(b, i).unwrap());
            k.hom2(pa, bi).iter().filter(|&&g| k.is_invertible(g)).all(|&g| fills(k, i, p, a, b, g))
        })
    })
}

fn iso(k: &TwoCat, f: usize, g: usize) -> bool {
    k.hom2(f, g).iter().any(|&c| k.is_invertible(c))
}

fn factors(k: &TwoCat, f: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for z in k.objects() {
        for &i in k.hom1(k.src(f), z) {
            for &p in k.hom1(z, k.tgt(f)) {
                if iso(k, k.comp1(p, i).unwrap(), f) {
                    out.push((i, p));
                }
            }
        }
    }
    out
}

/// Pass/fail per checkable axiom.
pub fn axioms(k: &TwoCat, c: &ModelClasses) -> BTreeMap<Axiom, bool> {
    let (fib, cof, weq) = (&c.fibrations, &c.cofibrations, &c.weak_equivalences);
    let all: Vec<usize> = k.arrows().collect();
    let mut lift = BTreeMap::new();
    for &i in &all {
        for &p in &all {
            lift.insert((i, p), lifts(k, i, p));
        }
    }
    let l = |i: usize, p: usize| lift[&(i, p)];
    let isos: BTreeSet<usize> = all.iter().copied().filter(|&f| k.arrow_inverse(f).is_some()).collect();
    let mut out = BTreeMap::new();
    out.insert(
        Axiom::M2,
        all.iter().all(|&f| {
            let fs = factors(k, f);
            fs.iter().any(|&(i, p)| cof.contains(&i) && weq.contains(&i) && fib.contains(&p))
                && fs.iter().any(|&(i, p)| cof.contains(&i) && fib.contains(&p) && weq.contains(&p))
        }),
    );
    let mut m5 = isos.iter().all(|f| weq.contains(f));
    for &f in &all {
        for &g in all.iter().filter(|&&g| k.src(g) == k.tgt(f)) {
            let gf = k.comp1(g, f).unwrap();
            for &h in k.hom1(k.src(f), k.tgt(g)) {
                let n = [f, g, h].iter().filter(|x| weq.contains(x)).count();
                if iso(k, h, gf) && n == 2 {
                    m5 = false;
                }
            }
        }
    }
    out.insert(Axiom::M5, m5);
    out.insert(Axiom::M6a, all.iter().all(|&p| fib.contains(&p) == all.iter().filter(|i| cof.contains(i) && weq.contains(i)).all(|&i| l(i, p))));
    out.insert(Axiom::M6b, all.iter().all(|&i| cof.contains(&i) == all.iter().filter(|p| fib.contains(p) && weq.contains(p)).all(|&p| l(i, p))));
    let rlp: Vec<bool> = all.iter().map(|&u| all.iter().filter(|i| cof.contains(i)).all(|&i| l(i, u))).collect();
    let llp: Vec<bool> = all.iter().map(|&v| all.iter().filter(|p| fib.contains(p)).all(|&p| l(v, p))).collect();
    out.insert(Axiom::M6c, all.iter().all(|&f| weq.contains(&f) == factors(k, f).iter().any(|&(v, u)| rlp[u] && llp[v])));
    out.insert(
        Axiom::M1,
        all.iter().all(|&i| all.iter().all(|&p| !(cof.contains(&i) && fib.contains(&p) && (weq.contains(&i) || weq.contains(&p))) || l(i, p))),
    );
    let closed = |s: &BTreeSet<usize>| {
        isos.iter().all(|f| s.contains(f))
            && all.iter().all(|&f| all.iter().all(|&g| k.src(g) != k.tgt(f) || !s.contains(&f) || !s.contains(&g) || s.contains(&k.comp1(g, f).unwrap())))
    };
    out.insert(Axiom::M3b, closed(fib) && closed(cof));
    let stable = |s: &BTreeSet<usize>| all.iter().all(|&f| k.parallel(f).iter().all(|&g| !s.contains(&f) || !iso(k, f, g) || s.contains(&g)));
    out.insert(Axiom::M7, stable(fib) && stable(cof) && stable(weq));
    out
}
