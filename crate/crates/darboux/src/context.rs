//! Ordered variable sets shared by polynomials, derivations and automorphisms.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered list of variable names for a polynomial ring. The order is fixed
/// for the lifetime of every polynomial built over the context; cloning is
/// cheap and equality is by content.
#[derive(Clone, Debug)]
pub struct VarContext {
    inner: Arc<Vec<String>>,
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarContext {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !valid_identifier(name) {
                return Err(Error::BadSpec(format!("invalid variable name `{name}`")));
            }
            if names[..i].contains(name) {
                return Err(Error::BadSpec(format!("duplicate variable name `{name}`")));
            }
        }
        Ok(VarContext {
            inner: Arc::new(names),
        })
    }

    /// The four-variable context x, y, z, t used throughout the examples.
    pub fn xyzt() -> Self {
        VarContext::new(["x", "y", "z", "t"]).unwrap()
    }

    pub fn arity(&self) -> usize {
        self.inner.len()
    }

    pub fn names(&self) -> &[String] {
        &self.inner
    }

    pub fn name(&self, index: usize) -> &str {
        &self.inner[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.iter().position(|n| n == name)
    }

    /// New context with `extra` variables appended; names must stay unique.
    pub fn extend<I, S>(&self, extra: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        VarContext::new(
            self.inner
                .iter()
                .cloned()
                .chain(extra.into_iter().map(Into::into)),
        )
    }
}

impl PartialEq for VarContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for VarContext {}

impl fmt::Display for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.inner.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(VarContext::new(["x", "x"]).is_err());
        assert!(VarContext::new(["2x"]).is_err());
        assert!(VarContext::new(["x y"]).is_err());
        assert!(VarContext::new(["x", "y_1"]).is_ok());
    }

    #[test]
    fn equality_is_by_content() {
        let a = VarContext::new(["x", "y"]).unwrap();
        let b = VarContext::new(["x", "y"]).unwrap();
        let c = VarContext::new(["y", "x"]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn extend_appends() {
        let ctx = VarContext::xyzt();
        let ext = ctx.extend(["k1", "k2"]).unwrap();
        assert_eq!(ext.arity(), 6);
        assert_eq!(ext.index_of("k2"), Some(5));
        assert!(ctx.extend(["x"]).is_err());
    }
}
