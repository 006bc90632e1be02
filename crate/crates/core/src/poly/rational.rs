//! Rational functions in Q(q) held as a canonical pair of integer polynomials.
//!
//! Canonical form:
//! - numerator and denominator are coprime in Q[q];
//! - the joint content of numerator and denominator is 1;
//! - the lowest-order nonzero coefficient of the denominator is positive;
//! - zero is `0/1`.
//!
//! Two rational functions are equal exactly when their canonical forms agree
//! componentwise, so `PartialEq` is structural.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::polynomial::IntPoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    /// Builds `num/den` in canonical form.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonicalize(num, den))
    }

    fn canonicalize(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = IntPoly::gcd(&num, &den).expect("denominator is nonzero");
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let content = num.content().gcd(&den.content());
        if !content.is_one() {
            num = num.div_scalar_exact(&content);
            den = den.div_scalar_exact(&content);
        }
        if den.lowest_coeff().is_some_and(Signed::is_negative) {
            num = -num;
            den = -den;
        }
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    pub fn from_integer(c: impl Into<BigInt>) -> Self {
        Self::from_poly(IntPoly::constant(c))
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Self::canonicalize(p, IntPoly::one())
    }

    /// Convenience constructor from small integer coefficient lists.
    pub fn from_i64s(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(IntPoly::from_i64s(num), IntPoly::from_i64s(den))
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn into_parts(self) -> (IntPoly, IntPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonicalize(
            &self.num * &rhs.den,
            &self.den * &rhs.num,
        ))
    }

    /// Exact value at a rational point. A zero denominator is a pole, since
    /// the canonical form has no common factor left to cancel it.
    pub fn evaluate(&self, at: &BigRational) -> Result<BigRational> {
        let d = self.den.evaluate(at);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.evaluate(at) / d)
    }

    /// `\frac{num}{den}`, or just the numerator when the denominator is 1.
    pub fn to_latex(&self) -> String {
        if self.den.is_one() {
            self.num.to_latex()
        } else {
            format!(
                "\\frac{{{}}}{{{}}}",
                self.num.to_latex(),
                self.den.to_latex()
            )
        }
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

/// Plain rendering such as `6/(1+4q)`; multi-term parts are parenthesized.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &IntPoly| {
            if p.term_count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl From<IntPoly> for RationalFunction {
    fn from(p: IntPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::from_integer(c)
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::canonicalize(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::canonicalize(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::canonicalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`RationalFunction::checked_div`] otherwise.
impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs)
            .expect("division by the zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
        impl $tr<RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a RationalFunction> for RationalFunction {
    fn sum<I: Iterator<Item = &'a RationalFunction>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::from_i64s(n, d).unwrap()
    }

    #[test]
    fn products_and_sums() {
        assert_eq!(rf(&[2], &[1, 1]) * rf(&[3], &[1, 2]), rf(&[6], &[1, 3, 2]));
        let c3 = rf(&[3], &[1, 2]);
        let c2 = rf(&[2], &[1, 1]);
        let combo = &(&c3 + &c3) - &c2;
        assert_eq!(combo.numerator(), &IntPoly::from_i64s(&[4, 2]));
        assert_eq!(combo.denominator(), &IntPoly::from_i64s(&[1, 3, 2]));
        assert_eq!(&c3 - &c3, RationalFunction::zero());
        assert_eq!((&c3 - &c3).denominator(), &IntPoly::one());
    }

    #[test]
    fn canonical_form() {
        // (6-12q)/((1+q)(1-4q^2)) = 6/((1+q)(1+2q))
        let den = IntPoly::from_i64s(&[1, 1]) * IntPoly::from_i64s(&[1, 0, -4]);
        let x = RationalFunction::new(IntPoly::from_i64s(&[6, -12]), den).unwrap();
        assert_eq!(x, rf(&[6], &[1, 3, 2]));
        assert_eq!(x.to_string(), "6/(1+3q+2q^2)");
        // sign moves onto the numerator
        assert_eq!(rf(&[1], &[-1, -1]).numerator(), &IntPoly::from_i64s(&[-1]));
        // joint content removed, individual content kept
        let y = rf(&[4, 8], &[2, 6]);
        assert_eq!(y.numerator(), &IntPoly::from_i64s(&[2, 4]));
        assert_eq!(y.denominator(), &IntPoly::from_i64s(&[1, 3]));
        // lowest nonzero denominator coefficient is the sign reference
        let z = rf(&[1], &[0, -1, 1]);
        assert_eq!(z.denominator(), &IntPoly::from_i64s(&[0, 1, -1]));
    }

    #[test]
    fn division_and_errors() {
        let a = rf(&[1], &[1, 1]);
        assert_eq!(a.checked_div(&a).unwrap(), RationalFunction::one());
        assert_eq!(
            a.checked_div(&RationalFunction::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            RationalFunction::from_i64s(&[1], &[]),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn evaluation_and_poles() {
        let w = rf(&[6], &[1, 4]);
        assert_eq!(
            w.evaluate(&BigRational::one()).unwrap(),
            BigRational::new(6.into(), 5.into())
        );
        let pole = rf(&[1], &[1, -1]);
        assert_eq!(pole.evaluate(&BigRational::one()), Err(Error::Pole));
    }

    #[test]
    fn rendering() {
        assert_eq!(rf(&[5], &[1]).to_string(), "5");
        assert_eq!(rf(&[4, -2], &[1, 2, -1]).to_string(), "(4-2q)/(1+2q-q^2)");
        assert_eq!(rf(&[6], &[1, 4]).to_latex(), "\\frac{6}{1 + 4q}");
    }
}
