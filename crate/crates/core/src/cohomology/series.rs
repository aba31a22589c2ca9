use std::fmt;

use num_traits::{One, Zero};

use crate::exactla::Rational;

/// Power series in `h` truncated modulo `h^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Series with the given leading coefficients, padded or cut to `order`.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Multiplicative inverse by the recurrence `c₀ = 1/a₀`,
    /// `c_m = −(Σ_{i≥1} a_i c_{m−i}) / a₀`; `None` for non-units.
    pub fn inverse(&self) -> Option<TruncatedSeries> {
        let a0 = self.coeffs.first()?;
        if a0.is_zero() {
            return None;
        }
        let order = self.order();
        let mut c: Vec<Rational> = Vec::with_capacity(order);
        c.push(a0.recip());
        for m in 1..order {
            let mut s = Rational::zero();
            for i in 1..=m {
                s += &self.coeffs[i] * &c[m - i];
            }
            c.push(-s / a0);
        }
        Some(TruncatedSeries { coeffs: c })
    }

    /// `self^e`; negative exponents go through [`inverse`](Self::inverse).
    ///
    /// # Panics
    /// If `e < 0` and the series is not a unit.
    pub fn pow(&self, e: i64) -> TruncatedSeries {
        let base = if e < 0 {
            self.inverse().expect("negative power of a non-unit")
        } else {
            self.clone()
        };
        let mut result = Self::one(self.order());
        for _ in 0..e.unsigned_abs() {
            result = result.mul(&base);
        }
        result
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}h")?,
                _ => write!(f, "{c}h^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " mod h^{}", self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    #[test]
    fn inverse_of_geometric() {
        let s = TruncatedSeries::new(vec![rat(1), rat(-1)], 5);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.coefficients(), &[rat(1), rat(1), rat(1), rat(1), rat(1)]);
        assert_eq!(s.mul(&inv), TruncatedSeries::one(5));
        assert!(TruncatedSeries::new(vec![rat(0), rat(1)], 3).inverse().is_none());
    }

    #[test]
    fn powers() {
        let s = TruncatedSeries::new(vec![rat(1), rat(1)], 4);
        assert_eq!(s.pow(3).coefficients(), &[rat(1), rat(3), rat(3), rat(1)]);
        assert_eq!(s.pow(-2).mul(&s.pow(2)), TruncatedSeries::one(4));
        assert_eq!(s.pow(0), TruncatedSeries::one(4));
    }

    #[test]
    fn display() {
        let s = TruncatedSeries::new(vec![rat(1), rat(0), rat(3)], 4);
        assert_eq!(s.to_string(), "1 + 3h^2 mod h^4");
    }
}
