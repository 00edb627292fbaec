//! Dense univariate polynomials with exact arbitrary-precision integer
//! coefficients.
//!
//! Coefficients are stored lowest degree first and kept normalized: the
//! highest-index coefficient is nonzero, and the zero polynomial is the empty
//! list (degree -1 by convention). The zero polynomial doubles as the
//! polynomial of the unknotted circle.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{KnotError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from coefficients in ascending degree order,
    /// dropping trailing zeros.
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self::from_coeffs([0, 1])
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs([c.into()])
    }

    /// a*x + b.
    pub fn linear<T: Into<BigInt>, U: Into<BigInt>>(a: T, b: U) -> Self {
        Self::from_coeffs([b.into(), a.into()])
    }

    /// x - c, the divisor used throughout for the (x - 2) factor.
    pub fn x_minus<T: Into<BigInt>>(c: T) -> Self {
        Self::linear(1, -c.into())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial mapped to -1.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    /// Coefficient of x^k (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale<T: Into<BigInt>>(&self, s: T) -> Self {
        let s: BigInt = s.into();
        if s.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * &s).collect(),
        }
    }

    /// Horner evaluation at an arbitrary integer.
    pub fn eval(&self, x0: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect::<Vec<_>>();
        Self::from_coeffs(coeffs)
    }

    /// Returns (p(x0), p'(x0)) exactly.
    pub fn eval_and_derivative_at<T: Into<BigInt>>(&self, x0: T) -> (BigInt, BigInt) {
        let x0: BigInt = x0.into();
        (self.eval(&x0), self.derivative().eval(&x0))
    }

    /// Exact division: returns q with self = d * q, or `NonZeroRemainder`.
    pub fn div_exact(&self, d: &IntPolynomial) -> Result<IntPolynomial> {
        if d.is_zero() {
            return Err(KnotError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.degree() < d.degree() {
            return Err(KnotError::NonZeroRemainder {
                remainder: self.to_string(),
            });
        }
        let lead = d.leading_coeff().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - d.coeffs.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + d.coeffs.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return Err(KnotError::NonZeroRemainder {
                    remainder: Self::from_coeffs(rem).to_string(),
                });
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(KnotError::NonZeroRemainder {
                remainder: Self::from_coeffs(rem).to_string(),
            });
        }
        Ok(Self::from_coeffs(quot))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect::<Vec<_>>();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect::<Vec<_>>();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
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
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<IntPolynomial> for &IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Text form: signed monomials in descending degree, ASCII caret powers,
/// e.g. `x^3 - 3*x - 2`. The zero polynomial prints `0`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.iter().copied())
    }

    #[test]
    fn degree_bookkeeping() {
        assert_eq!(IntPolynomial::zero().degree(), -1);
        assert_eq!(p(&[5]).degree(), 0);
        assert_eq!(p(&[0, 0, 3]).degree(), 2);
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
    }

    #[test]
    fn ring_ops() {
        // (x-2) + (x+2) = 2x
        assert_eq!(&p(&[-2, 1]) + &p(&[2, 1]), p(&[0, 2]));
        // (x-2)(x+1)^2 = x^3 - 3x - 2, the trefoil polynomial
        let sq = p(&[1, 1]).pow(2);
        assert_eq!(&p(&[-2, 1]) * &sq, p(&[-2, -3, 0, 1]));
        // zero annihilates
        assert_eq!(&IntPolynomial::zero() * &p(&[1, 0, -3, 0, 1]), IntPolynomial::zero());
        // subtraction cancels to the zero polynomial
        assert_eq!(&p(&[1, 2, 3]) - &p(&[1, 2, 3]), IntPolynomial::zero());
    }

    #[test]
    fn div_exact_difference_of_squares() {
        let q = p(&[-4, 0, 1]).div_exact(&IntPolynomial::x_minus(2)).unwrap();
        assert_eq!(q, p(&[2, 1]));
    }

    #[test]
    fn div_exact_trefoil() {
        // (x^3 - 3x - 2) / (x - 2) = x^2 + 2x + 1
        let q = p(&[-2, -3, 0, 1]).div_exact(&IntPolynomial::x_minus(2)).unwrap();
        assert_eq!(q, p(&[1, 2, 1]));
    }

    #[test]
    fn div_exact_rejects_remainder() {
        let err = p(&[1, 0, 1]).div_exact(&IntPolynomial::x_minus(2)).unwrap_err();
        assert!(matches!(err, KnotError::NonZeroRemainder { .. }));
    }

    #[test]
    fn div_exact_round_trip() {
        let d = p(&[-2, 1]);
        let q0 = p(&[3, -1, 4, 1]);
        let prod = &d * &q0;
        assert_eq!(prod.div_exact(&d).unwrap(), q0);
    }

    #[test]
    fn eval_and_derivative() {
        let zero = IntPolynomial::zero();
        assert_eq!(zero.eval_and_derivative_at(7), (0.into(), 0.into()));
        // J_3 = x^3 - 2x: value 4 and derivative 10 at x = 2
        let j3 = p(&[0, -2, 0, 1]);
        assert_eq!(j3.eval_and_derivative_at(2), (4.into(), 10.into()));
    }

    #[test]
    fn display_form() {
        assert_eq!(p(&[-2, -3, 0, 1]).to_string(), "x^3 - 3*x - 2");
        assert_eq!(p(&[0, -4, 0, 0, 1]).to_string(), "x^4 - 4*x");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(p(&[2, -1]).to_string(), "-x + 2");
        assert_eq!(p(&[0, 2]).to_string(), "2*x");
        assert_eq!(p(&[-4, 0, 1]).to_string(), "x^2 - 4");
    }
}
