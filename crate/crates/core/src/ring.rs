use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// `k[x_1, ..., x_n]`: a ground field and ordered variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    field: FieldSpec,
    vars: Vec<String>,
}

/// Shared handle to a ring; polynomials and ideals hold one.
pub type Ring = Arc<RingContext>;

impl RingContext {
    pub fn new(field: FieldSpec, vars: Vec<String>) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("variable `{v}` declared twice")));
            }
        }
        Ok(Arc::new(RingContext { field, vars }))
    }

    /// Convenience for tests and fixtures: `RingContext::with_names(QQ, &["x", "y"])`.
    pub fn with_names(field: FieldSpec, names: &[&str]) -> Result<Ring> {
        Self::new(field, names.iter().map(|s| s.to_string()).collect())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables over another field.
    pub fn with_field(&self, field: FieldSpec) -> Ring {
        Arc::new(RingContext {
            field,
            vars: self.vars.clone(),
        })
    }

    /// Appends `count` fresh variables whose names start with `stem` and do
    /// not clash with existing names. Existing variables keep their indices.
    pub fn extend(&self, stem: &str, count: usize) -> Ring {
        let mut vars = self.vars.clone();
        for i in 1..=count {
            let mut name = format!("{stem}{i}");
            while vars.contains(&name) {
                name.insert(0, '_');
            }
            vars.push(name);
        }
        Arc::new(RingContext {
            field: self.field,
            vars,
        })
    }

    /// The subring on the listed variables (in the listed order).
    pub fn restrict(&self, keep: &[usize]) -> Result<Ring> {
        RingContext::new(self.field, keep.iter().map(|&i| self.vars[i].clone()).collect())
    }

    /// `QQ[x,y]` / `ZZ/p[x,y]`.
    pub fn declaration(&self) -> String {
        format!("{}[{}]", self.field.name(), self.vars.join(","))
    }
}
