//! Integer power series truncated modulo `q^(order+1)`.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::polynomial::IntPoly;
use super::rational::RationalFunction;
use crate::error::{Error, Result};

/// Coefficients `c_0..=c_order` of an element of Z[[q]] mod q^(order+1).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(order: usize, mut coeffs: Vec<BigInt>) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_i64s(order: usize, coeffs: &[i64]) -> Self {
        Self::new(order, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn from_poly(p: &IntPoly, order: usize) -> Self {
        Self::new(order, p.truncate(order).into_coeffs())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    /// Re-truncates to a lower (or equal) order.
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order.min(self.order()), self.coeffs.clone())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Expansion of `f` about `q = 0`.
    ///
    /// Solves `den * s = num` coefficient by coefficient, which stays in Z
    /// exactly when the constant term of the denominator is a unit.
    pub fn from_rational(f: &RationalFunction, order: usize) -> Result<Self> {
        let den = f.denominator();
        let d0 = den.coeff(0);
        if !d0.abs().is_one() {
            return Err(Error::NotInvertibleInPowerSeries);
        }
        let mut s: Vec<BigInt> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = f.numerator().coeff(k);
            for (j, dj) in den.coeffs().iter().enumerate().skip(1).take(k) {
                acc -= dj * &s[k - j];
            }
            // d0 is ±1
            if d0.is_negative() {
                acc = -acc;
            }
            s.push(acc);
        }
        Ok(TruncatedSeries { coeffs: s })
    }

    /// The polynomial `c_0 + c_1 q + ... + c_order q^order`.
    pub fn to_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }
}

/// Space-separated coefficients, e.g. `10 -30 30 90 -450`.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[{self}]")
    }
}

/// Coefficientwise sum at the smaller of the two orders.
impl Add<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Cauchy product truncated at the smaller of the two orders.
impl Mul<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl Add for TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: TruncatedSeries) -> TruncatedSeries {
        &self + &rhs
    }
}

impl Mul for TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: TruncatedSeries) -> TruncatedSeries {
        &self * &rhs
    }
}
