//! Dense univariate polynomials over arbitrary-precision integers, falling
//! factorials, and conversion to and from the falling-factorial basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomial has nonzero constant term {0}; not expressible in the falling basis (λ)_1..(λ)_n")]
    BasisDomain(BigInt),
    #[error("polynomial of degree {degree} does not fit a falling basis of size {n}")]
    DegreeTooHigh { degree: usize, n: usize },
}

/// Coefficients in ascending powers of λ with no trailing zeros; the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    #[serde(with = "crate::decimal::vec")]
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The monomial λ.
    pub fn lambda() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// λ - a.
    pub fn linear(a: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(-a), BigInt::one()])
    }

    /// λ^k.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// (λ)_k = λ(λ-1)...(λ-k+1) expanded in the monomial basis.
    pub fn falling(k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, i| acc.mul_linear(i as i64))
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of λ^k (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Multiplies by (λ - a) in place of a full product.
    pub fn mul_linear(&self, a: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let a = BigInt::from(a);
        let mut out = vec![BigInt::zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] += c;
            out[k] -= c * &a;
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Divides by (λ - a), returning quotient and remainder (= p(a)).
    pub fn div_linear(&self, a: i64) -> (Self, BigInt) {
        if self.is_zero() {
            return (Self::zero(), BigInt::zero());
        }
        let a = BigInt::from(a);
        let deg = self.coeffs.len() - 1;
        let mut quot = vec![BigInt::zero(); deg];
        let mut carry = BigInt::zero();
        for k in (0..=deg).rev() {
            let cur = &self.coeffs[k] + &carry * &a;
            if k == 0 {
                return (Self::from_coeffs(quot), cur);
            }
            quot[k - 1] = cur.clone();
            carry = cur;
        }
        unreachable!()
    }

    /// Coefficients in the falling-factorial basis: `p = Σ_{k=1..n} c_k (λ)_k`.
    ///
    /// Newton form at nodes 0, 1, 2, ...: dividing by λ, then λ-1, then λ-2
    /// peels off one coefficient per step as the remainder.
    pub fn to_falling_basis(&self, n: usize) -> Result<FallingFactorialForm, PolyError> {
        if let Some(degree) = self.degree() {
            if degree > n {
                return Err(PolyError::DegreeTooHigh { degree, n });
            }
        }
        let (mut rest, c0) = self.div_linear(0);
        if !c0.is_zero() {
            return Err(PolyError::BasisDomain(c0));
        }
        let mut alpha = Vec::with_capacity(n);
        for k in 1..=n {
            let (q, r) = rest.div_linear(k as i64);
            alpha.push(r);
            rest = q;
        }
        debug_assert!(rest.is_zero());
        Ok(FallingFactorialForm { n, alpha })
    }

    /// Evaluations are exact, so the sign pattern is a structural check only.
    pub fn signs_alternate(&self) -> bool {
        let n = match self.degree() {
            Some(d) => d,
            None => return true,
        };
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || (c.is_positive() == ((n - k) % 2 == 0)))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.coeffs.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        IntPolynomial::from_coeffs(out)
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

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
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
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{k}")?,
            }
        }
        Ok(())
    }
}

/// (x)_k = x(x-1)...(x-k+1); (x)_0 = 1.
pub fn falling_factorial(x: i64, k: usize) -> BigInt {
    (0..k as i64).fold(BigInt::one(), |acc, i| acc * BigInt::from(x - i))
}

/// Coefficients `alpha[k-1] = c_k` of a polynomial written as
/// `Σ_{k=1..n} c_k (λ)_k`. For a chromatic polynomial these are the
/// independent-partition counts α(G, k).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FallingFactorialForm {
    pub n: usize,
    #[serde(with = "crate::decimal::vec")]
    pub alpha: Vec<BigInt>,
}

impl FallingFactorialForm {
    pub fn new(alpha: Vec<BigInt>) -> Self {
        FallingFactorialForm { n: alpha.len(), alpha }
    }

    pub fn from_i64s(alpha: &[i64]) -> Self {
        Self::new(alpha.iter().map(|&a| BigInt::from(a)).collect())
    }

    /// c_k for 1 ≤ k ≤ n; zero outside that range.
    pub fn get(&self, k: usize) -> BigInt {
        k.checked_sub(1)
            .and_then(|i| self.alpha.get(i))
            .cloned()
            .unwrap_or_default()
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        let mut acc = IntPolynomial::zero();
        let mut basis = IntPolynomial::one();
        for (i, c) in self.alpha.iter().enumerate() {
            basis = basis.mul_linear(i as i64);
            if !c.is_zero() {
                acc = &acc + &(&basis * &IntPolynomial::from_coeffs(vec![c.clone()]));
            }
        }
        acc
    }

    /// Σ_k c_k (x)_k.
    pub fn eval(&self, x: i64) -> BigInt {
        (1..=self.n).map(|k| self.get(k) * falling_factorial(x, k)).sum()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.alpha.iter().all(|a| !a.is_negative())
    }
}
