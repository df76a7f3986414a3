use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Resource caps shared by the exponential and Gröbner routines.
///
/// Every field has a default, so a limits file only needs to name the caps
/// it changes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    /// Largest vertex count accepted by minimal vertex cover enumeration.
    pub max_cover_vertices: usize,
    /// Largest number of polynomials a Gröbner basis may accumulate.
    pub max_basis_size: usize,
    /// Largest total degree of an S-pair lcm.
    pub max_pair_degree: u32,
    /// Largest variable count for Hochster-formula Betti tables.
    pub max_betti_variables: usize,
    /// Largest vertex count for a simplicial complex handed to homology.
    pub max_homology_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_cover_vertices: 25,
            max_basis_size: 20_000,
            max_pair_degree: 40,
            max_betti_variables: 16,
            max_homology_vertices: 24,
        }
    }
}

impl Limits {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("limits: {e}")))
    }

    pub(crate) fn check(what: &'static str, size: usize, cap: usize) -> Result<()> {
        if size > cap {
            Err(Error::CapExceeded { what, size, cap })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_file_keeps_defaults() {
        let l = Limits::from_json(r#"{"max_basis_size": 10}"#).unwrap();
        assert_eq!(l.max_basis_size, 10);
        assert_eq!(l.max_pair_degree, 40);
        assert_eq!(l.max_cover_vertices, 25);
    }

    #[test]
    fn unknown_field_rejected() {
        assert!(Limits::from_json(r#"{"bogus": 1}"#).is_err());
    }
}
