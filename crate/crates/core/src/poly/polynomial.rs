//! Dense univariate polynomials in `q` with arbitrary-precision integer
//! coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element of Z[q], stored as coefficients in ascending degree.
///
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c * q^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPoly { coeffs }
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        Self::monomial(1, k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn lowest_coeff(&self) -> Option<&BigInt> {
        self.valuation().map(|v| &self.coeffs[v])
    }

    /// Non-negative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content(self)`, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.div_scalar_exact(&c)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        if k.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Divides every coefficient by `k`. The caller guarantees exactness.
    pub fn div_scalar_exact(&self, k: &BigInt) -> IntPoly {
        debug_assert!(self.coeffs.iter().all(|c| (c % k).is_zero()));
        IntPoly::new(self.coeffs.iter().map(|c| c / k).collect())
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Drops every term of degree greater than `order`.
    pub fn truncate(&self, order: usize) -> IntPoly {
        IntPoly::new(self.coeffs.iter().take(order + 1).cloned().collect())
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Exact evaluation by Horner's rule.
    pub fn evaluate(&self, at: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Quotient `self / divisor` in Z[q] when the division is exact, `None`
    /// when the remainder is nonzero or some quotient coefficient is not an
    /// integer.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dlead = divisor.leading_coeff()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() - 1 < dd {
            return None;
        }
        if dd == 0 {
            let (q, r): (Vec<_>, Vec<_>) = self.coeffs.iter().map(|c| c.div_rem(dlead)).unzip();
            return r.iter().all(Zero::is_zero).then(|| IntPoly::new(q));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(dlead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &qk * dc;
            }
            quot[k] = qk;
        }
        rem.iter().all(Zero::is_zero).then(|| IntPoly::new(quot))
    }

    /// Pseudo-remainder: the remainder of `lc(divisor)^(deg self - deg divisor + 1) * self`
    /// divided by `divisor`, computed without leaving Z[q].
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dlead = divisor
            .leading_coeff()
            .expect("pseudo-remainder by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.last().unwrap().clone();
            let shift = rem.len() - 1 - dd;
            for c in rem.iter_mut() {
                *c *= dlead;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &top * dc;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        IntPoly::new(rem)
    }

    /// Greatest common divisor in Z[q]: the gcd of the contents times the
    /// primitive gcd, normalized to a positive leading coefficient.
    ///
    /// Uses the primitive polynomial remainder sequence, so every
    /// intermediate stays in Z[q] with its content stripped.
    pub fn gcd(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        if a.is_zero() {
            return Ok(b.normalize_sign());
        }
        if b.is_zero() {
            return Ok(a.normalize_sign());
        }
        let content = a.content().gcd(&b.content());
        let (mut r0, mut r1) = if a.degree() >= b.degree() {
            (a.primitive_part(), b.primitive_part())
        } else {
            (b.primitive_part(), a.primitive_part())
        };
        while !r1.is_zero() {
            let r = r0.pseudo_rem(&r1).primitive_part();
            r0 = r1;
            r1 = r;
        }
        Ok(r0.scale(&content).normalize_sign())
    }

    /// Returns `±self` with a positive leading coefficient.
    fn normalize_sign(&self) -> IntPoly {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// LaTeX rendering in ascending powers, e.g. `1 + 3q + 2q^{2}`.
    pub fn to_latex(&self) -> String {
        self.render(" + ", " - ", |k| format!("q^{{{k}}}"))
    }

    fn render(&self, plus: &str, minus: &str, pow: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { minus } else { plus });
            }
            let var = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => pow(k),
            };
            if k == 0 || !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            out.push_str(&var);
        }
        out
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

/// Plain rendering in ascending powers, e.g. `1+3q+2q^2`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("+", "-", |k| format!("q^{k}")))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl From<BigInt> for IntPoly {
    fn from(c: BigInt) -> Self {
        IntPoly::constant(c)
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        IntPoly::constant(c)
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::new(coeffs)
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        IntPoly::new(coeffs)
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        *self = &*self - rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn ring_operations() {
        assert_eq!(p(&[1, 1]) * p(&[1, 2]), p(&[1, 3, 2]));
        assert_eq!(p(&[1, 3, 2]).derivative(), p(&[3, 4]));
        assert_eq!(p(&[1, 1]) - p(&[1, 1]), IntPoly::zero());
        assert_eq!(p(&[0, 0, 0]), IntPoly::zero());
        assert_eq!(p(&[2, 0, 1]) + p(&[-2, 0, -1]), IntPoly::zero());
    }

    #[test]
    fn evaluate_is_exact() {
        let one = BigRational::one();
        assert_eq!(
            p(&[1, 4]).evaluate(&one),
            BigRational::from_integer(5.into())
        );
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            p(&[1, 2, -1]).evaluate(&half),
            BigRational::new(7.into(), 4.into())
        );
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(
            IntPoly::gcd(&p(&[-1, 0, 1]), &p(&[1, 1])).unwrap(),
            p(&[1, 1])
        );
        assert_eq!(IntPoly::gcd(&p(&[2, 2]), &p(&[4])).unwrap(), p(&[2]));
        // (1+q)(1-4q^2) against 1-2q
        let b = p(&[1, 1]) * p(&[1, 0, -4]);
        let g = IntPoly::gcd(&p(&[1, -2]), &b).unwrap();
        assert_eq!(g, p(&[-1, 2]));
        assert!(b.exact_div(&g).is_some());
        assert_eq!(
            IntPoly::gcd(&IntPoly::zero(), &IntPoly::zero()),
            Err(Error::GcdOfZeros)
        );
        assert_eq!(
            IntPoly::gcd(&IntPoly::zero(), &p(&[-3, -6])).unwrap(),
            p(&[3, 6])
        );
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 3, 2]);
        assert_eq!(a.exact_div(&p(&[1, 1])), Some(p(&[1, 2])));
        assert_eq!(a.exact_div(&p(&[1, 3])), None);
        assert_eq!(p(&[2, 4]).exact_div(&p(&[2])), Some(p(&[1, 2])));
        assert_eq!(p(&[2, 3]).exact_div(&p(&[2])), None);
        assert_eq!(p(&[0, 2]).exact_div(&p(&[0, 0, 1])), None);
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[1, 0, 2]);
        let r = a.pseudo_rem(&b);
        // 2^2 * a = quot * b + r with deg r < 2
        assert!(r.degree().unwrap_or(0) < 2);
        assert!((a.scale(&BigInt::from(4)) - r).exact_div(&b).is_some());
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[1, 3, 2]).to_string(), "1+3q+2q^2");
        assert_eq!(p(&[6, 8, -2]).to_string(), "6+8q-2q^2");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
        assert_eq!(p(&[1, 2, 0, -1]).to_latex(), "1 + 2q - q^{3}");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
