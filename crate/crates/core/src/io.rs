//! Text, JSON and Macaulay2 forms of ideals.
//!
//! The text form is a `vars:` header listing the ring variables in order,
//! followed by one generator per line. Blank lines and `#` comments are
//! ignored.

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::PolyIdeal;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{Polynomial, Ring};

#[derive(Serialize, Deserialize)]
struct IdealDoc {
    variables: Vec<String>,
    generators: Vec<String>,
}

fn monomial_generators(ideal: &MonomialIdeal) -> Vec<Polynomial> {
    ideal
        .generators()
        .iter()
        .map(|m| Polynomial::from_monomial(ideal.ring(), m.clone()))
        .collect()
}

pub fn ideal_to_text(ring: &Ring, generators: &[Polynomial]) -> String {
    let mut out = format!("vars: {}\n", ring.names().join(" "));
    for g in generators {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

pub fn ideal_to_structured(ring: &Ring, generators: &[Polynomial]) -> String {
    let doc = IdealDoc {
        variables: ring.names().to_vec(),
        generators: generators.iter().map(ToString::to_string).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn monomial_ideal_to_text(ideal: &MonomialIdeal) -> String {
    ideal_to_text(ideal.ring(), &monomial_generators(ideal))
}

pub fn monomial_ideal_to_structured(ideal: &MonomialIdeal) -> String {
    ideal_to_structured(ideal.ring(), &monomial_generators(ideal))
}

/// Parses either the text form or the JSON document form.
pub fn parse_ideal(text: &str) -> Result<PolyIdeal> {
    if text.trim_start().starts_with('{') {
        let doc: IdealDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("ideal document: {e}")))?;
        let ring = Ring::grevlex(doc.variables)?;
        return PolyIdeal::parse(&ring, doc.generators.iter().map(String::as_str));
    }
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty ideal file".into()))?;
    let vars = header
        .strip_prefix("vars:")
        .ok_or_else(|| Error::Parse("ideal file must start with a `vars:` line".into()))?;
    let ring = Ring::grevlex(vars.split_whitespace())?;
    PolyIdeal::parse(&ring, lines)
}

/// Parses an ideal and requires every generator to be a monomial.
pub fn parse_monomial_ideal(text: &str) -> Result<MonomialIdeal> {
    let ideal = parse_ideal(text)?;
    MonomialIdeal::from_poly_ideal(&ideal)
        .ok_or_else(|| Error::Parse("expected monomial generators".into()))
}

/// Macaulay2 identifiers cannot contain `.`; jets variables `x.1` become
/// `x_1`.
fn m2_names(ring: &Ring) -> Result<Vec<String>> {
    let names: Vec<String> = ring.names().iter().map(|n| n.replace('.', "_")).collect();
    let mut seen = HashSet::new();
    for (orig, n) in ring.names().iter().zip(&names) {
        if !seen.insert(n.as_str()) {
            return Err(Error::InvalidName(format!(
                "{orig} (collides with another variable as `{n}` in Macaulay2)"
            )));
        }
    }
    Ok(names)
}

/// Macaulay2 source declaring the ring and the ideal `name`.
pub fn to_macaulay2(ring: &Arc<Ring>, generators: &[Polynomial], name: &str) -> Result<String> {
    let names = m2_names(ring)?;
    let renamed = Ring::new(names.iter().cloned(), ring.order())?;
    let gens: Vec<String> = generators
        .iter()
        .map(|g| g.with_ring(&renamed).to_string())
        .collect();
    let ideal = if gens.is_empty() {
        "ideal(0_R)".to_string()
    } else {
        format!("ideal({})", gens.join(", "))
    };
    Ok(format!(
        "R = QQ[{}];\n{name} = {ideal};\n",
        names.join(", ")
    ))
}

pub fn monomial_ideal_to_macaulay2(ideal: &MonomialIdeal, name: &str) -> Result<String> {
    to_macaulay2(ideal.ring(), &monomial_generators(ideal), name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip() {
        let text = "# comment\nvars: x.0 x.1 y.0 y.1\nx.0*y.0\n\nx.1*y.0 + x.0*y.1\n";
        let i = parse_ideal(text).unwrap();
        assert_eq!(i.generators().len(), 2);
        let out = ideal_to_text(i.ring(), i.generators());
        assert_eq!(out, "vars: x.0 x.1 y.0 y.1\nx.0*y.0\nx.1*y.0 + x.0*y.1\n");
        let again = parse_ideal(&out).unwrap();
        assert_eq!(again.generators(), i.generators());
        let json = ideal_to_structured(i.ring(), i.generators());
        assert_eq!(parse_ideal(&json).unwrap().generators(), i.generators());
    }

    #[test]
    fn parse_errors() {
        assert!(parse_ideal("").is_err());
        assert!(parse_ideal("x*y\n").is_err());
        assert!(parse_ideal("vars: x\nx*y\n").is_err());
        assert!(parse_monomial_ideal("vars: x y\nx + y\n").is_err());
    }

    #[test]
    fn macaulay2_export() {
        let i = parse_ideal("vars: x.0 x.1 y.0 y.1\nx.0*y.0\nx.1*y.0 + x.0*y.1\n").unwrap();
        assert_eq!(
            to_macaulay2(i.ring(), i.generators(), "J").unwrap(),
            "R = QQ[x_0, x_1, y_0, y_1];\nJ = ideal(x_0*y_0, x_1*y_0 + x_0*y_1);\n"
        );
        let clash = Ring::grevlex(["x_0", "x.0"]).unwrap();
        assert!(to_macaulay2(&clash, &[], "I").is_err());
    }
}
