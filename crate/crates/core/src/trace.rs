//! Key/value traces emitted by the finders.

use std::fmt;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Trace {
    pub rows: Vec<(String, String)>,
}

impl Trace {
    pub fn new() -> Self {
        Trace::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.rows.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.rows.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

/// Two aligned columns.
impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &self.rows {
            writeln!(f, "{k:<width$}  {v}")?;
        }
        Ok(())
    }
}
