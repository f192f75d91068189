use std::fmt;

/// One violated law together with the cells that witness it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation<K> {
    pub kind: K,
    pub witness: Vec<String>,
}

impl<K: fmt::Display> fmt::Display for Violation<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: [{}]", self.kind, self.witness.join(", "))
    }
}

/// A deterministic list of violations. Empty means the structure passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report<K> {
    violations: Vec<Violation<K>>,
    /// Free-form notes, e.g. probe coverage for implicit 2-categories.
    pub notes: Vec<String>,
}

impl<K: Ord + Clone> Default for Report<K> {
    fn default() -> Self {
        Report { violations: Vec::new(), notes: Vec::new() }
    }
}

impl<K: Ord + Clone> Report<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, kind: K, witness: Vec<String>) {
        self.violations.push(Violation { kind, witness });
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Sorted and deduplicated violations.
    pub fn violations(&self) -> &[Violation<K>] {
        &self.violations
    }

    pub fn has(&self, kind: &K) -> bool {
        self.violations.iter().any(|v| &v.kind == kind)
    }

    pub fn finish(mut self) -> Self {
        self.violations.sort();
        self.violations.dedup();
        self
    }

    pub fn merge(&mut self, other: Report<K>) {
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
    }
}

impl<K: fmt::Display> fmt::Display for Report<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            writeln!(f, "valid")?;
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}
