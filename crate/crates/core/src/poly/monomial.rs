use std::fmt;

/// A power product over a fixed number of variables.
///
/// Exponents are stored densely by variable index; the total degree is
/// cached because every term order consults it first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars].into_boxed_slice(),
            degree: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial {
            exps: exps.into_boxed_slice(),
            degree: 1,
        }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial {
            exps: exps.into_boxed_slice(),
            degree,
        }
    }

    /// Squarefree monomial over the given variable indices.
    pub fn from_support(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut exps = vec![0; nvars];
        for v in vars {
            exps[v] = 1;
        }
        Monomial::from_exponents(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Nonzero exponents as `(variable, exponent)` pairs.
    pub fn sparse(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.sparse().map(|(i, _)| i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Product of the support variables.
    pub fn radical(&self) -> Monomial {
        Monomial::from_exponents(self.exps.iter().map(|&e| e.min(1)).collect())
    }

    /// Bit `i mod 64` is set when variable `i` occurs; a cheap necessary
    /// condition for divisibility.
    pub fn divmask(&self) -> u64 {
        self.support().fold(0u64, |m, i| m | (1u64 << (i % 64)))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::from_exponents(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial::from_exponents(self.exps.iter().map(|e| e * k).collect())
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Re-embeds into a ring with `nvars` variables, sending variable `i`
    /// to `map(i)`.
    pub fn remap(&self, nvars: usize, map: impl Fn(usize) -> usize) -> Monomial {
        let mut exps = vec![0; nvars];
        for (i, e) in self.sparse() {
            exps[map(i)] += e;
        }
        Monomial::from_exponents(exps)
    }

    /// Renders the monomial with the given variable names (`1` for the unit).
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayMonomial { m: self, names }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

struct DisplayMonomial<'a> {
    m: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, e) in self.m.sparse() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
