//! Truncated power series in `z` whose coefficients are [`MarkerPoly`]s.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::poly::MarkerPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("z^{n} lies beyond the truncation order {order}")]
    BeyondOrder { n: usize, order: usize },
    #[error("cannot divide by z: the constant term is nonzero")]
    NonzeroConstant,
    #[error("cannot divide by z: the series has order 0")]
    OrderUnderflow,
    #[error("z shifts must be +1 or -1, got {k}")]
    InvalidShift { k: i64 },
}

/// `sum_{e=0}^{order} coeffs[e] * z^e`, exact up to `z^order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiSeries {
    order: usize,
    coeffs: Vec<MarkerPoly>,
}

impl BiSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![MarkerPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, MarkerPoly::one())
    }

    /// `poly * z^e`, or zero when `e > order`.
    pub fn monomial(order: usize, e: usize, poly: MarkerPoly) -> Self {
        let mut s = Self::zero(order);
        if e <= order {
            s.coeffs[e] = poly;
        }
        s
    }

    /// Builds a series from its leading coefficients, dropping any beyond
    /// `order`.
    pub fn from_coeffs(order: usize, coeffs: Vec<MarkerPoly>) -> Self {
        let mut s = Self::zero(order);
        for (e, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[e] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficients of `z^0 ..= z^order`.
    pub fn coeffs(&self) -> &[MarkerPoly] {
        &self.coeffs
    }

    /// The marker polynomial multiplying `z^n`.
    pub fn coeff(&self, n: usize) -> Result<&MarkerPoly, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::BeyondOrder {
            n,
            order: self.order,
        })
    }

    /// The coefficient of `z^n marker^m`.
    pub fn coeff2(&self, n: usize, m: usize) -> Result<BigInt, SeriesError> {
        Ok(self.coeff(n)?.coeff(m))
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order != other.order {
            return Err(SeriesError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<(), SeriesError> {
        self.check_order(other)?;
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(())
    }

    /// Cauchy product in `z`, truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let mut out = Self::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Coefficient-wise product in `z`; each `z^e` coefficient is the
    /// product of the two marker polynomials at `z^e`.
    pub fn hadamard(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(Self {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    /// Multiplies by `z^k` for `k` in `{-1, +1}`; the order moves by `k`.
    /// Dividing by `z` needs a zero constant term.
    pub fn z_shift(&self, k: i64) -> Result<Self, SeriesError> {
        match k {
            1 => {
                let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
                coeffs.push(MarkerPoly::zero());
                coeffs.extend(self.coeffs.iter().cloned());
                Ok(Self {
                    order: self.order + 1,
                    coeffs,
                })
            }
            -1 => {
                if !self.coeffs[0].is_zero() {
                    return Err(SeriesError::NonzeroConstant);
                }
                if self.order == 0 {
                    return Err(SeriesError::OrderUnderflow);
                }
                Ok(Self {
                    order: self.order - 1,
                    coeffs: self.coeffs[1..].to_vec(),
                })
            }
            k => Err(SeriesError::InvalidShift { k }),
        }
    }

    /// Drops (or zero-extends to) a new order. Extending is only exact for
    /// series known to vanish beyond the current order.
    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.clone())
    }

    /// `f(z) -> f(z^2)`, truncated at `order`.
    pub fn compose_z_squared(&self, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (e, c) in self.coeffs.iter().enumerate() {
            if 2 * e > order {
                break;
            }
            out.coeffs[2 * e] = c.clone();
        }
        out
    }

    /// Replaces the marker `t` by `t + offset` in every coefficient.
    pub fn substitute_marker(&self, offset: i64) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.substitute(offset)).collect(),
        }
    }

    /// Evaluates the marker at `x`, leaving integer coefficients in `z`.
    pub fn eval_marker(&self, x: &BigInt) -> Vec<BigInt> {
        self.coeffs.iter().map(|p| p.eval(x)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MarkerPoly::is_zero)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

impl Default for BiSeries {
    fn default() -> Self {
        Self::zero(0)
    }
}

/// Builds a series from integer rows `[[c_0, c_1, ...], ...]` (one row per
/// power of `z`).
pub fn series_from_rows(order: usize, rows: &[&[i64]]) -> BiSeries {
    BiSeries::from_coeffs(order, rows.iter().map(|r| MarkerPoly::from_i64s(r)).collect())
}
