//! Graphviz export of 1-skeleta. Identities are left out; each non-identity
//! 2-cell becomes a dashed edge parallel to its boundary, labelled
//! `name: f ⇒ g`.

use twocat::core::{FinCat, TwoCat};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn header(name: &str, objects: &[String]) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=LR;\n  node [shape=plaintext];\n", quote(name));
    for o in objects {
        out.push_str(&format!("  {};\n", quote(o)));
    }
    out
}

pub fn cat_dot(name: &str, c: &FinCat) -> String {
    let mut out = header(name, c.object_names());
    for m in c.morphisms().filter(|&m| !c.is_identity(m)) {
        let (s, t) = (c.object_name(c.src(m)), c.object_name(c.tgt(m)));
        out.push_str(&format!("  {} -> {} [label={}];\n", quote(s), quote(t), quote(c.morphism_name(m))));
    }
    out.push_str("}\n");
    out
}

pub fn twocat_dot(name: &str, k: &TwoCat) -> String {
    let mut out = header(name, k.object_names());
    let is_id1 = |a: usize| k.objects().any(|o| k.id1(o) == a);
    for a in k.arrows().filter(|&a| !is_id1(a)) {
        let (s, t) = (k.object_name(k.src(a)), k.object_name(k.tgt(a)));
        out.push_str(&format!("  {} -> {} [label={}];\n", quote(s), quote(t), quote(k.arrow_name(a))));
    }
    for c in k.cells().filter(|&c| !k.is_identity_cell(c)) {
        let f = k.csrc(c);
        let (s, t) = (k.object_name(k.src(f)), k.object_name(k.tgt(f)));
        let label = format!("{}: {} ⇒ {}", k.cell_name(c), k.arrow_name(f), k.arrow_name(k.ctgt(c)));
        out.push_str(&format!("  {} -> {} [label={}, style=dashed, arrowhead=empty];\n", quote(s), quote(t), quote(&label)));
    }
    out.push_str("}\n");
    out
}
