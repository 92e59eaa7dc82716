//! Pass/fail reports for axiom and identity suites.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    /// First failing tuple and both sides' values, serialized exactly.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new() -> CheckReport {
        CheckReport::default()
    }

    pub fn push(&mut self, name: impl Into<String>, failure: Option<String>) {
        self.items.push(CheckItem {
            name: name.into(),
            pass: failure.is_none(),
            detail: failure,
        });
    }

    pub fn push_pass(&mut self, name: impl Into<String>) {
        self.push(name, None);
    }

    pub fn push_fail(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(name, Some(detail.into()));
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.items.extend(other.items);
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    pub fn item(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            if item.pass {
                writeln!(f, "pass  {}", item.name)?;
            } else {
                writeln!(
                    f,
                    "FAIL  {}: {}",
                    item.name,
                    item.detail.as_deref().unwrap_or("")
                )?;
            }
        }
        Ok(())
    }
}
