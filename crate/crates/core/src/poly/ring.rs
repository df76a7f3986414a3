use std::collections::HashMap;
use std::sync::Arc;

use super::order::MonomialOrder;
use crate::error::{Error, Result};

/// An ordered list of distinct variable names together with a term order.
#[derive(Debug, Clone)]
pub struct Ring {
    names: Vec<String>,
    index: HashMap<String, usize>,
    order: MonomialOrder,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.order == other.order
    }
}

impl Eq for Ring {}

/// Accepts `[A-Za-z_][A-Za-z0-9_]*`, optionally followed by `.` and digits
/// when `allow_order_suffix` is set (jets variables such as `x.2`).
pub fn validate_name(name: &str, allow_order_suffix: bool) -> Result<()> {
    let bad = || Error::InvalidName(name.to_string());
    let (stem, suffix) = match name.split_once('.') {
        Some((stem, suffix)) if allow_order_suffix => (stem, Some(suffix)),
        Some(_) => return Err(bad()),
        None => (name, None),
    };
    let mut chars = stem.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return Err(bad()),
    }
    if !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(bad());
    }
    if let Some(suffix) = suffix {
        if suffix.is_empty() || !suffix.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
    }
    Ok(())
}

impl Ring {
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<Arc<Ring>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            validate_name(n, true)?;
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::InvalidName(format!("{n} (duplicate)")));
            }
        }
        if let MonomialOrder::Block { prefix, .. } = order {
            if prefix > names.len() {
                return Err(Error::Parse(format!(
                    "block prefix {prefix} exceeds {} variables",
                    names.len()
                )));
            }
        }
        Ok(Arc::new(Ring {
            names,
            index,
            order,
        }))
    }

    /// Ring with the default graded reverse lexicographic order.
    pub fn grevlex<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Ring>> {
        Ring::new(names, MonomialOrder::GRevLex)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<Ring> {
        Arc::new(Ring {
            names: self.names.clone(),
            index: self.index.clone(),
            order,
        })
    }

    /// Same variables with `extra` prepended, under a block order that
    /// eliminates the prepended variables.
    pub fn prepend_block(&self, extra: &[&str]) -> Result<Arc<Ring>> {
        let names: Vec<String> = extra
            .iter()
            .map(|s| s.to_string())
            .chain(self.names.iter().cloned())
            .collect();
        Ring::new(names, MonomialOrder::elimination(extra.len()))
    }

    /// A name not used by any variable of this ring, built from `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        let mut candidate = stem.to_string();
        let mut k = 0;
        while self.index.contains_key(&candidate) {
            k += 1;
            candidate = format!("{stem}{k}");
        }
        candidate
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_validated() {
        assert!(validate_name("x", false).is_ok());
        assert!(validate_name("v_12", false).is_ok());
        assert!(validate_name("x.2", false).is_err());
        assert!(validate_name("x.2", true).is_ok());
        assert!(validate_name("x.", true).is_err());
        assert!(validate_name("2x", false).is_err());
        assert!(validate_name("a-b", false).is_err());
        assert!(validate_name("", false).is_err());
    }

    #[test]
    fn duplicates_rejected() {
        assert!(Ring::grevlex(["x", "y", "x"]).is_err());
    }

    #[test]
    fn fresh_name_avoids_collisions() {
        let r = Ring::grevlex(["t", "t1", "x"]).unwrap();
        assert_eq!(r.fresh_name("t"), "t2");
        assert_eq!(r.fresh_name("u"), "u");
    }
}
