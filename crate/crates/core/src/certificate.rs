use std::fmt;

use serde_json::{json, Value};

/// Outcome of an exact identity check, carrying both computed sides.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub name: String,
    pub pass: bool,
    pub lhs: Value,
    pub rhs: Value,
    pub ratio: Value,
}

impl Certificate {
    pub fn new(name: impl Into<String>, pass: bool, lhs: Value, rhs: Value) -> Self {
        Certificate {
            name: name.into(),
            pass,
            lhs,
            rhs,
            ratio: Value::Null,
        }
    }

    pub fn with_ratio(mut self, ratio: Value) -> Self {
        self.ratio = ratio;
        self
    }

    pub fn to_json(&self) -> Value {
        json!({"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "ratio": self.ratio, "pass": self.pass})
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "pass" } else { "FAIL" };
        write!(f, "{verdict}  {}", self.name)?;
        if !self.pass {
            write!(f, "\n  lhs: {}\n  rhs: {}", self.lhs, self.rhs)?;
        }
        Ok(())
    }
}
