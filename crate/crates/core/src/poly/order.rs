//! Named variable orders.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Variable names listed smallest first; `names[i]` is `y_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarOrder {
    names: Vec<String>,
}

impl VarOrder {
    pub fn new(names: Vec<String>) -> Result<VarOrder> {
        if names.is_empty() {
            return Err(Error::BadOrder("empty variable list".into()));
        }
        for (i, n) in names.iter().enumerate() {
            let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::BadOrder(format!("invalid variable name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(Error::BadOrder(format!("duplicate variable {n}")));
            }
        }
        Ok(VarOrder { names })
    }

    /// Order `y1 < ... < yn`.
    pub fn default_names(n: usize) -> VarOrder {
        VarOrder { names: (1..=n).map(|i| format!("y{i}")).collect() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Level (1-based) of a named variable.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name).map(|i| i + 1)
    }

    pub fn name(&self, level: usize) -> &str {
        &self.names[level - 1]
    }
}
