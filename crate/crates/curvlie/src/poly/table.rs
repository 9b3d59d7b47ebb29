use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// An ordered list of variable names. The position in the list is the
/// lexicographic priority: index 0 is the most significant variable.
#[derive(Debug, PartialEq, Eq)]
pub struct VariableTable {
    names: Vec<String>,
}

/// The metric-entry variable order used for every Einstein system:
/// the Einstein constant first, then diagonal entries, then the
/// off-diagonal entries of each block, then the coupling block.
const MASTER: [&str; 22] = [
    "l", "x1", "y1", "z1", "x2", "y2", "z2", "u1", "v1", "w1", "u2", "v2", "w2",
    "a1", "b1", "c1", "a2", "b2", "c2", "a3", "b3", "c3",
];

impl VariableTable {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>, PolyError> {
        let mut seen = std::collections::HashSet::new();
        for n in names {
            if !seen.insert(n.as_ref().to_string()) {
                return Err(PolyError::DuplicateVariable(n.as_ref().to_string()));
            }
        }
        Ok(Arc::new(VariableTable {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        }))
    }

    /// The 22-variable order of the metric classification.
    pub fn master() -> Arc<Self> {
        Self::new(&MASTER).unwrap()
    }

    /// A copy of this table with extra names appended at the end (lowest
    /// priority). Used to adjoin auxiliary symbols such as `s` (with
    /// `2 s^2 = 1`) or `r3` (with `r3^2 = 3`).
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Result<Arc<Self>, PolyError> {
        let mut names: Vec<String> = self.names.clone();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Self::new(&names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize, PolyError> {
        self.index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }
}

impl fmt::Display for VariableTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn master_order() {
        let t = VariableTable::master();
        assert_eq!(t.len(), 22);
        assert_eq!(t.name(0), "l");
        assert_eq!(t.name(1), "x1");
        assert_eq!(t.name(21), "c3");
        assert_eq!(t.index_of("b2"), Some(17));
    }

    #[test]
    fn duplicates_rejected() {
        assert!(matches!(
            VariableTable::new(&["x", "y", "x"]),
            Err(PolyError::DuplicateVariable(_))
        ));
    }

    #[test]
    fn extension_appends() {
        let t = VariableTable::master();
        let e = t.extended(&["s"]).unwrap();
        assert_eq!(e.len(), 23);
        assert_eq!(e.index_of("s"), Some(22));
    }
}
