use std::fmt;

use super::catuni::FinFunctor;
use super::fincat::FinCat;

/// Quasi-inverse data: for each target object `y`, a source object `x`
/// with an isomorphism `F x -> y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub preimage: Vec<(usize, usize)>,
    /// Number of hom-sets checked bijective.
    pub homs_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivalenceFailure {
    NotAFunctor(String),
    /// No source object maps to something isomorphic to this target object.
    EssentialSurjectivity { target: usize },
    /// `g: F a -> F b` is not hit.
    Fullness { a: usize, b: usize, missing: usize },
    /// Two distinct morphisms `a -> b` with the same image.
    Faithfulness { a: usize, b: usize, m1: usize, m2: usize },
}

impl fmt::Display for EquivalenceFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivalenceFailure::NotAFunctor(s) => write!(f, "NotAFunctor: {s}"),
            EquivalenceFailure::EssentialSurjectivity { target } => {
                write!(f, "EssentialSurjectivityFailure at target object #{target}")
            }
            EquivalenceFailure::Fullness { a, b, missing } => {
                write!(f, "FullnessFailure on hom(#{a}, #{b}): morphism #{missing} not in the image")
            }
            EquivalenceFailure::Faithfulness { a, b, m1, m2 } => {
                write!(f, "FaithfulnessFailure on hom(#{a}, #{b}): #{m1} and #{m2} identified")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivalenceDecision {
    Yes(EquivalenceWitness),
    No(EquivalenceFailure),
}

impl EquivalenceDecision {
    pub fn is_yes(&self) -> bool {
        matches!(self, EquivalenceDecision::Yes(_))
    }
}

/// Decides whether `f: c -> d` is an equivalence: essentially surjective,
/// full and faithful, each checked exhaustively.
pub fn equivalence_of_categories(c: &FinCat, d: &FinCat, f: &FinFunctor) -> EquivalenceDecision {
    if let Err(e) = f.check(c, d) {
        return EquivalenceDecision::No(EquivalenceFailure::NotAFunctor(e.to_string()));
    }
    let mut preimage = Vec::with_capacity(d.object_count());
    for y in d.objects() {
        let hit = c.objects().find_map(|x| d.hom(f.obj[x], y).iter().find(|&&m| d.is_iso(m)).map(|&m| (x, m)));
        match hit {
            Some(p) => preimage.push(p),
            None => return EquivalenceDecision::No(EquivalenceFailure::EssentialSurjectivity { target: y }),
        }
    }
    let mut homs_checked = 0;
    for a in c.objects() {
        for b in c.objects() {
            let mut image = vec![None; d.morphism_count()];
            for &m in c.hom(a, b) {
                let fm = f.mor[m];
                if let Some(prev) = image[fm] {
                    return EquivalenceDecision::No(EquivalenceFailure::Faithfulness { a, b, m1: prev, m2: m });
                }
                image[fm] = Some(m);
            }
            if let Some(&g) = d.hom(f.obj[a], f.obj[b]).iter().find(|&&g| image[g].is_none()) {
                return EquivalenceDecision::No(EquivalenceFailure::Fullness { a, b, missing: g });
            }
            homs_checked += 1;
        }
    }
    EquivalenceDecision::Yes(EquivalenceWitness { preimage, homs_checked })
}
