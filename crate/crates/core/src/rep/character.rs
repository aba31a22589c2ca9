use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A torus character: a Laurent polynomial `Σ c_w z^w` in one variable.
///
/// Coefficients are signed so that differences of characters can be formed;
/// a genuine character has only nonnegative coefficients. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Character {
    coeffs: BTreeMap<i64, i64>,
}

impl Character {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(weight: i64, c: i64) -> Self {
        let mut ch = Self::zero();
        ch.add_term(weight, c);
        ch
    }

    /// Character of `S_m`: `z^m + z^{m-2} + … + z^{-m}` (zero for `m < 0`).
    pub fn irreducible(m: i64) -> Self {
        let mut ch = Self::zero();
        for i in 0..=m.max(-1) {
            ch.add_term(m - 2 * i, 1);
        }
        ch
    }

    pub fn from_weights<I: IntoIterator<Item = i64>>(weights: I) -> Self {
        let mut ch = Self::zero();
        for w in weights {
            ch.add_term(w, 1);
        }
        ch
    }

    pub fn add_term(&mut self, weight: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(weight).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&weight);
        }
    }

    pub fn coeff(&self, weight: i64) -> i64 {
        self.coeffs.get(&weight).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&w, &c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value at `z = 1`, i.e. the dimension for a genuine character.
    pub fn dim(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn add(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w, c);
        }
        out
    }

    pub fn sub(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w, -c);
        }
        out
    }

    pub fn mul(&self, other: &Character) -> Character {
        let mut out = Character::zero();
        for (w1, c1) in self.terms() {
            for (w2, c2) in other.terms() {
                out.add_term(w1 + w2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> Character {
        let mut out = Character::zero();
        for (w, d) in self.terms() {
            out.add_term(w, c * d);
        }
        out
    }

    /// `χ(z) ↦ χ(z^p)` (Adams operation).
    pub fn adams(&self, p: i64) -> Character {
        let mut out = Character::zero();
        for (w, c) in self.terms() {
            out.add_term(p * w, c);
        }
        out
    }

    /// `χ(z) ↦ χ(z^{-1})`, the character of the dual representation.
    pub fn invert_weights(&self) -> Character {
        self.adams(-1)
    }

    /// Character of the exterior square: `(χ(z)² − χ(z²)) / 2`.
    pub fn wedge2(&self) -> Character {
        self.mul(self).sub(&self.adams(2)).halve()
    }

    /// Character of the symmetric square: `(χ(z)² + χ(z²)) / 2`.
    pub fn sym2(&self) -> Character {
        self.mul(self).add(&self.adams(2)).halve()
    }

    fn halve(&self) -> Character {
        let mut out = Character::zero();
        for (w, c) in self.terms() {
            debug_assert!(c % 2 == 0, "odd coefficient in plethysm");
            out.add_term(w, c / 2);
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    pub fn is_palindromic(&self) -> bool {
        self.terms().all(|(w, c)| self.coeff(-w) == c)
    }

    /// Decomposes a genuine character into irreducibles `S_m` by repeatedly
    /// stripping the highest weight.
    pub fn decompose(&self) -> Result<Decomposition> {
        if !self.is_nonnegative() {
            return Err(Error::NotACharacter(format!("negative multiplicity in {self}")));
        }
        let mut rest = self.clone();
        let mut parts = BTreeMap::new();
        while let Some((&top, &mult)) = rest.coeffs.iter().next_back() {
            if top < 0 || mult < 0 {
                return Err(Error::NotACharacter(format!(
                    "leftover {rest} is not a sum of irreducibles"
                )));
            }
            *parts.entry(top as u64).or_insert(0u64) += mult as u64;
            rest = rest.sub(&Character::irreducible(top).scale(mult));
        }
        Ok(Decomposition { parts })
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&w, &c) in self.coeffs.iter().rev() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (w, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => write!(f, "z^{w}")?,
                _ => write!(f, "{a}z^{w}")?,
            }
        }
        Ok(())
    }
}

/// A multiset of irreducible labels `S_m`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    parts: BTreeMap<u64, u64>,
}

impl Decomposition {
    pub fn from_parts<I: IntoIterator<Item = (u64, u64)>>(parts: I) -> Self {
        let mut d = Decomposition::default();
        for (m, c) in parts {
            if c > 0 {
                *d.parts.entry(m).or_insert(0) += c;
            }
        }
        d
    }

    /// `(m, multiplicity)` pairs, highest `m` first.
    pub fn parts(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.parts.iter().rev().map(|(&m, &c)| (m, c))
    }

    pub fn multiplicity(&self, m: u64) -> u64 {
        self.parts.get(&m).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> u64 {
        self.parts.iter().map(|(&m, &c)| (m + 1) * c).sum()
    }

    pub fn character(&self) -> Character {
        self.parts
            .iter()
            .fold(Character::zero(), |acc, (&m, &c)| {
                acc.add(&Character::irreducible(m as i64).scale(c as i64))
            })
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .parts()
            .map(|(m, c)| if c == 1 { format!("S_{m}") } else { format!("{c}*S_{m}") })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::space::{Factor, TensorSpace};

    #[test]
    fn small_characters() {
        let s1 = Character::irreducible(1);
        assert_eq!(s1.to_string(), "z^1 + z^-1");
        let s1s1 = s1.mul(&s1);
        assert_eq!(s1s1.coeff(2), 1);
        assert_eq!(s1s1.coeff(0), 2);
        assert_eq!(s1s1.coeff(-2), 1);
        assert!(Character::irreducible(-1).is_zero());
    }

    #[test]
    fn clebsch_gordan_decompositions() {
        let s1s1 = Character::irreducible(1).mul(&Character::irreducible(1));
        assert_eq!(s1s1.decompose().unwrap(), Decomposition::from_parts([(2, 1), (0, 1)]));
        assert_eq!(
            Character::irreducible(0).decompose().unwrap(),
            Decomposition::from_parts([(0, 1)])
        );
        let v2 = Factor::v(2).character();
        assert_eq!(v2.decompose().unwrap().to_string(), "S_3 + S_1");
    }

    #[test]
    fn rejects_non_characters() {
        assert!(Character::monomial(1, 1).decompose().is_err());
        assert!(Character::monomial(0, -1).decompose().is_err());
        // z^2 + z^-2 lacks the middle weight of S_2
        let bad = Character::monomial(2, 1).add(&Character::monomial(-2, 1));
        assert!(bad.decompose().is_err());
    }

    #[test]
    fn exterior_plus_symmetric_square() {
        for m in 0..5 {
            let v = Factor::v(m).character();
            let split = Factor::wedge2_v(m).character().add(&Factor::sym2_v(m).character());
            assert_eq!(split, v.mul(&v));
        }
    }

    #[test]
    fn structural_and_enumerated_characters_agree() {
        let spaces = [
            vec![Factor::s(3), Factor::v(1)],
            vec![Factor::wedge2_v(2), Factor::s(1).dual()],
            vec![Factor::sym2_v(1), Factor::s(0), Factor::v(2).dual()],
            vec![Factor::s(-1), Factor::v(3)],
        ];
        for factors in spaces {
            let sp = TensorSpace::new(factors);
            assert_eq!(sp.character(), sp.basis_character(), "{sp}");
            assert!(sp.character().is_palindromic());
            assert_eq!(sp.character().decompose().unwrap().dim() as usize, sp.dim());
        }
    }
}
