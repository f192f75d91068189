//! On-disk documents. Every file is one JSON object with a `format_version`
//! field; structures refer to each other by name, and a reference to another
//! structure is either a relative path or the document inlined.
//!
//! Canonical text is produced by [`to_canonical`]: insertion-ordered keys,
//! two-space indentation, and containers holding only scalars on one line.

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ref<T> {
    Path(String),
    Inline(Box<T>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryDoc {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

/// `.cat`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatDoc {
    pub format_version: u32,
    pub objects: Vec<String>,
    pub morphisms: Vec<EntryDoc>,
    pub identities: Vec<String>,
    /// `[g, f, g∘f]`; entries forced by the unit laws may be left out.
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
}

/// `.2cat`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoCatDoc {
    pub format_version: u32,
    pub objects: Vec<String>,
    pub arrows: Vec<EntryDoc>,
    pub identities: Vec<String>,
    pub cells: Vec<EntryDoc>,
    pub cell_identities: Vec<String>,
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
    /// `[β, α, β∘α]`.
    #[serde(default)]
    pub vertical: Vec<[String; 3]>,
    /// `[β, α, β∗α]` with `α` on the first 1-cell.
    #[serde(default)]
    pub horizontal: Vec<[String; 3]>,
}

/// `.fun`: a functor between finite categories.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunDoc {
    pub format_version: u32,
    pub source: Ref<CatDoc>,
    pub target: Ref<CatDoc>,
    pub objects: Vec<[String; 2]>,
    /// Identities may be left out when sent to identities.
    #[serde(default)]
    pub morphisms: Vec<[String; 2]>,
}

/// `.nat`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NatDoc {
    pub format_version: u32,
    pub source: Ref<FunDoc>,
    pub target: Ref<FunDoc>,
    pub components: Vec<[String; 2]>,
}

/// `.pfun`: a pseudo-functor between finite 2-categories. Units and
/// compositors default to identity cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PfunDoc {
    pub format_version: u32,
    pub source: Ref<TwoCatDoc>,
    pub target: Ref<TwoCatDoc>,
    pub objects: Vec<[String; 2]>,
    #[serde(default)]
    pub arrows: Vec<[String; 2]>,
    #[serde(default)]
    pub cells: Vec<[String; 2]>,
    #[serde(default)]
    pub units: Vec<[String; 2]>,
    /// `[f, g, φ]` with `φ: F g F f ⇒ F(g f)`.
    #[serde(default)]
    pub compositors: Vec<[String; 3]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VarianceDoc {
    Covariant,
    Contravariant,
}

/// `.diag`: a strict 2-functor into finite categories. Identity 1-cells and
/// 2-cells of the index default to identity functors and transformations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagDoc {
    pub format_version: u32,
    pub index: Ref<TwoCatDoc>,
    pub variance: VarianceDoc,
    pub cats: Vec<(String, Ref<CatDoc>)>,
    #[serde(default)]
    pub functors: Vec<(String, Ref<FunDoc>)>,
    #[serde(default)]
    pub nats: Vec<(String, Ref<NatDoc>)>,
}

/// `.cone`: a test cone (contravariant diagram) or cocone (covariant).
/// Cell components are indexed by the objects of the legs' domain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeDoc {
    pub format_version: u32,
    pub diagram: Ref<DiagDoc>,
    pub vertex: Ref<CatDoc>,
    pub legs: Vec<(String, Ref<FunDoc>)>,
    #[serde(default)]
    pub cells: Vec<(String, Vec<[String; 2]>)>,
}

/// `.pro`: a strict 2-functor `I^op -> C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProDoc {
    pub format_version: u32,
    pub index: Ref<TwoCatDoc>,
    pub target: Ref<TwoCatDoc>,
    pub objects: Vec<[String; 2]>,
    #[serde(default)]
    pub arrows: Vec<[String; 2]>,
    #[serde(default)]
    pub cells: Vec<[String; 2]>,
}

/// `.classes`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassesDoc {
    pub format_version: u32,
    pub category: Ref<TwoCatDoc>,
    pub fibrations: Vec<String>,
    pub cofibrations: Vec<String>,
    pub weak_equivalences: Vec<String>,
}

/// `.sq`: `γ: p a ⇒ b i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SqDoc {
    pub format_version: u32,
    pub category: Ref<TwoCatDoc>,
    pub i: String,
    pub p: String,
    pub a: String,
    pub b: String,
    pub gamma: String,
}

/// The document kinds, keyed by file extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Cat,
    TwoCat,
    Fun,
    Pfun,
    Nat,
    Diag,
    Cone,
    Pro,
    Classes,
    Sq,
}

impl Kind {
    pub fn from_extension(ext: &str) -> Option<Kind> {
        Some(match ext {
            "cat" => Kind::Cat,
            "2cat" => Kind::TwoCat,
            "fun" => Kind::Fun,
            "pfun" => Kind::Pfun,
            "nat" => Kind::Nat,
            "diag" => Kind::Diag,
            "cone" => Kind::Cone,
            "pro" => Kind::Pro,
            "classes" => Kind::Classes,
            "sq" => Kind::Sq,
            _ => return None,
        })
    }

    /// Guesses the kind of a `.json` document from its keys.
    pub fn sniff(v: &Value) -> Option<Kind> {
        let o = v.as_object()?;
        let has = |k: &str| o.contains_key(k);
        Some(if has("cell_identities") {
            Kind::TwoCat
        } else if has("gamma") {
            Kind::Sq
        } else if has("fibrations") {
            Kind::Classes
        } else if has("variance") {
            Kind::Diag
        } else if has("vertex") {
            Kind::Cone
        } else if has("components") {
            Kind::Nat
        } else if has("index") {
            Kind::Pro
        } else if has("identities") {
            Kind::Cat
        } else if has("units") || has("compositors") || has("arrows") || has("cells") {
            Kind::Pfun
        } else if has("source") {
            Kind::Fun
        } else {
            return None;
        })
    }

    pub fn extension(self) -> &'static str {
        match self {
            Kind::Cat => "cat",
            Kind::TwoCat => "2cat",
            Kind::Fun => "fun",
            Kind::Pfun => "pfun",
            Kind::Nat => "nat",
            Kind::Diag => "diag",
            Kind::Cone => "cone",
            Kind::Pro => "pro",
            Kind::Classes => "classes",
            Kind::Sq => "sq",
        }
    }
}

/// Canonical text of a document.
pub fn to_canonical<T: Serialize>(doc: &T) -> String {
    let v = serde_json::to_value(doc).expect("documents serialize");
    let mut out = String::new();
    write_value(&v, 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    let nested = |x: &Value| match x {
        Value::Array(a) => !a.is_empty(),
        Value::Object(o) => !o.is_empty(),
        _ => false,
    };
    match v {
        Value::Array(a) => !a.iter().any(nested),
        Value::Object(o) => !o.values().any(nested),
        _ => true,
    }
}

fn scalar(v: &Value) -> String {
    serde_json::to_string(v).expect("scalars serialize")
}

fn write_flat(v: &Value, out: &mut String) {
    match v {
        Value::Array(a) => {
            out.push('[');
            for (n, x) in a.iter().enumerate() {
                if n > 0 {
                    out.push_str(", ");
                }
                write_flat(x, out);
            }
            out.push(']');
        }
        Value::Object(o) => {
            out.push('{');
            for (n, (k, x)) in o.iter().enumerate() {
                if n > 0 {
                    out.push_str(", ");
                }
                out.push_str(&scalar(&Value::String(k.clone())));
                out.push_str(": ");
                write_flat(x, out);
            }
            out.push('}');
        }
        other => out.push_str(&scalar(other)),
    }
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    // The document itself is always spread over lines.
    if is_flat(v) && !(indent == 0 && v.is_object()) {
        return write_flat(v, out);
    }
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Array(a) => {
            out.push_str("[\n");
            for (n, x) in a.iter().enumerate() {
                out.push_str(&pad);
                write_value(x, indent + 1, out);
                out.push_str(if n + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Object(o) => {
            out.push_str("{\n");
            for (n, (k, x)) in o.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&scalar(&Value::String(k.clone())));
                out.push_str(": ");
                write_value(x, indent + 1, out);
                out.push_str(if n + 1 < o.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        other => out.push_str(&scalar(other)),
    }
}
