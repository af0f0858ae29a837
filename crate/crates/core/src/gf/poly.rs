use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::numbers::binomial;

/// Polynomial in the marker variable with exact integer coefficients.
/// `coeffs[m]` is the coefficient of `marker^m`; trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MarkerPoly {
    coeffs: Vec<BigInt>,
}

impl MarkerPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * marker^degree`
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `marker^m`; zero above the degree.
    pub fn coeff(&self, m: usize) -> BigInt {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `q(t) -> q(t + offset)`, expanded with the binomial theorem.
    pub fn substitute(&self, offset: i64) -> Self {
        if offset == 0 || self.is_zero() {
            return self.clone();
        }
        let offset = BigInt::from(offset);
        let d = self.coeffs.len();
        let mut out = vec![BigInt::zero(); d];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // c * (t + offset)^i = sum_j c * C(i, j) * offset^(i-j) * t^j
            let mut power = BigInt::one();
            for j in (0..=i).rev() {
                out[j] += c * binomial(i as u64, j as u64) * &power;
                power *= &offset;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.coeffs.iter().any(Signed::is_negative)
    }
}

impl AddAssign<&MarkerPoly> for MarkerPoly {
    fn add_assign(&mut self, rhs: &MarkerPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Add for &MarkerPoly {
    type Output = MarkerPoly;

    fn add(self, rhs: &MarkerPoly) -> MarkerPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul for &MarkerPoly {
    type Output = MarkerPoly;

    fn mul(self, rhs: &MarkerPoly) -> MarkerPoly {
        if self.is_zero() || rhs.is_zero() {
            return MarkerPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        MarkerPoly::from_coeffs(out)
    }
}

impl fmt::Display for MarkerPoly {
    /// Human-readable form in the marker `u`, e.g. `2 + 4u + u^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (m, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                _ => write!(f, "{mag}")?,
            }
            match m {
                0 => {}
                1 => write!(f, "u")?,
                _ => write!(f, "u^{m}")?,
            }
        }
        Ok(())
    }
}
