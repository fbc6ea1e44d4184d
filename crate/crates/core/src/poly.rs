//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Coefficients are stored in ascending degree order and always kept in
//! canonical form: the last stored coefficient is nonzero, and the zero
//! polynomial is the empty vector.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming zero leading terms.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::new(vec![c.into()])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * x^degree`.
    pub fn monomial<T: Into<BigInt>>(c: T, degree: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPoly { coeffs }
    }

    pub fn x_pow(k: usize) -> Self {
        Self::monomial(1, k)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Exponent of the largest power of `x` dividing `self`; `None` for zero.
    pub fn x_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True when every odd-degree coefficient vanishes, i.e. `self` lies in `Z[x^2]`.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, a: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * a + c)
    }

    pub fn eval_at_integer(&self, a: i64) -> BigInt {
        self.eval(&BigInt::from(a))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Polynomial long division that must leave no remainder.
    ///
    /// Every leading-coefficient quotient is required to be exact over `Z`,
    /// so a non-monic divisor never silently produces a rational quotient.
    pub fn exact_div(&self, den: &IntPoly) -> Result<IntPoly> {
        let den_deg = den.degree().ok_or(Error::DivisionByZero)?;
        let Some(num_deg) = self.degree() else {
            return Ok(Self::zero());
        };
        if num_deg < den_deg {
            return Err(Error::NotDivisible);
        }
        let lead = &den.coeffs[den_deg];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); num_deg - den_deg + 1];
        for k in (0..=num_deg - den_deg).rev() {
            let top = &rem[k + den_deg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] -= &q * d;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Self::new(quot))
    }

    /// Splits `self = x^(2v) * stripped` with `stripped` not divisible by `x^2`.
    ///
    /// An odd lowest term leaves a single factor of `x` in `stripped`.
    pub fn x2_valuation(&self) -> Result<(usize, IntPoly)> {
        let val = self.x_valuation().ok_or(Error::ZeroPolynomial)?;
        let v = val / 2;
        Ok((
            v,
            IntPoly {
                coeffs: self.coeffs[2 * v..].to_vec(),
            },
        ))
    }
}

impl Zero for IntPoly {
    fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for IntPoly {
    fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for IntPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.normalize();
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::new(out)
    }
}

impl MulAssign<&IntPoly> for IntPoly {
    fn mul_assign(&mut self, rhs: &IntPoly) {
        *self = &*self * rhs;
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(mut self) -> IntPoly {
        for c in &mut self.coeffs {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $Assign:ident, $assign:ident) => {
        impl $Trait<&IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                let mut out = self.clone();
                $Assign::$assign(&mut out, rhs);
                out
            }
        }
        impl $Trait<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(mut self, rhs: IntPoly) -> IntPoly {
                $Assign::$assign(&mut self, &rhs);
                self
            }
        }
        impl $Trait<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(mut self, rhs: &IntPoly) -> IntPoly {
                $Assign::$assign(&mut self, rhs);
                self
            }
        }
        impl $Trait<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                let mut out = self.clone();
                $Assign::$assign(&mut out, &rhs);
                out
            }
        }
        impl $Assign<IntPoly> for IntPoly {
            fn $assign(&mut self, rhs: IntPoly) {
                $Assign::$assign(self, &rhs);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);

impl Mul<IntPoly> for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Mul<&IntPoly> for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        &self * rhs
    }
}

impl Mul<IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        self * &rhs
    }
}

impl core::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> Self {
        iter.fold(IntPoly::zero(), |acc, p| acc + p)
    }
}

/// Descending-degree rendering such as `x^4 - 2*x^2 + 1`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{abs}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{abs}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn product_from_the_borromean_determinant() {
        let a = p(&[4, 0, -1]);
        let b = p(&[1, 0, -2, 0, 1]);
        assert_eq!(&a * &b, p(&[4, 0, -9, 0, 6, 0, -1]));
    }

    #[test]
    fn identities() {
        let q = p(&[3, -1, 0, 7]);
        assert_eq!(&q + &IntPoly::zero(), q);
        let s = p(&[-1, 0, 1]);
        assert_eq!(&s * &s, p(&[1, 0, -2, 0, 1]));
        assert_eq!(&q - &q, IntPoly::zero());
        assert!((&q - &q).coeffs().is_empty());
    }

    #[test]
    fn canonical_form_trims() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(p(&[0, 0]), IntPoly::zero());
        assert_eq!(IntPoly::monomial(0, 5), IntPoly::zero());
    }

    #[test]
    fn exact_division_examples() {
        let num = p(&[4, 0, -9, 0, 6, 0, -1]);
        assert_eq!(
            num.exact_div(&p(&[4, 0, -1])).unwrap(),
            p(&[1, 0, -2, 0, 1])
        );
        let num = p(&[0, 0, -8, 0, 20, 0, -16, 0, 4]);
        assert_eq!(
            num.exact_div(&p(&[-8, 0, 4])).unwrap(),
            p(&[0, 0, 1, 0, -2, 0, 1])
        );
        let q = p(&[5, -3, 2]);
        assert_eq!(q.exact_div(&IntPoly::one()).unwrap(), q);
        assert_eq!(
            IntPoly::x().exact_div(&IntPoly::x_pow(2)),
            Err(Error::NotDivisible)
        );
        assert_eq!(q.exact_div(&IntPoly::zero()), Err(Error::DivisionByZero));
        // rational quotient
        assert_eq!(p(&[1, 1]).exact_div(&p(&[0, 2])), Err(Error::NotDivisible));
        assert_eq!(IntPoly::zero().exact_div(&q).unwrap(), IntPoly::zero());
    }

    #[test]
    fn x2_valuation_examples() {
        let (v, s) = p(&[0, 0, 1, 0, -2, 0, 1]).x2_valuation().unwrap();
        assert_eq!((v, s), (1, p(&[1, 0, -2, 0, 1])));
        assert_eq!(IntPoly::one().x2_valuation().unwrap(), (0, IntPoly::one()));
        let q = p(&[1, 0, -2, 0, 1]);
        assert_eq!(q.x2_valuation().unwrap(), (0, q.clone()));
        assert_eq!(p(&[0, 0, 0, 1]).x2_valuation().unwrap(), (1, IntPoly::x()));
        assert_eq!(IntPoly::zero().x2_valuation(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn evaluation() {
        assert_eq!(
            p(&[4, 0, -9, 0, 6, 0, -1]).eval_at_integer(2),
            BigInt::zero()
        );
        assert_eq!(IntPoly::zero().eval_at_integer(17), BigInt::zero());
        assert_eq!(p(&[4, 0, -1]).eval_at_integer(2), BigInt::zero());
        assert_eq!(p(&[1, 1, 1]).eval_at_integer(-3), BigInt::from(7));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[1, 0, -2, 0, 1]).to_string(), "x^4 - 2*x^2 + 1");
        assert_eq!(
            p(&[4, 0, -9, 0, 6, 0, -1]).to_string(),
            "-x^6 + 6*x^4 - 9*x^2 + 4"
        );
        assert_eq!(p(&[0, -3]).to_string(), "-3*x");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn coefficients_beyond_64_bits() {
        let big = IntPoly::constant(BigInt::from(u64::MAX)) + IntPoly::x();
        let sq = &big * &big;
        assert_eq!(sq.coeff(0), BigInt::from(u64::MAX) * BigInt::from(u64::MAX));
        assert_eq!(sq.exact_div(&big).unwrap(), big);
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..=20, 0..7).prop_map(|c| IntPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &b, &a + &(-&b));
        }

        #[test]
        fn results_are_canonical(a in small_poly(), b in small_poly()) {
            for r in [&a + &b, &a - &b, &a * &b, -&a] {
                prop_assert!(r.leading_coeff().is_none_or(|c| !c.is_zero()));
            }
        }

        #[test]
        fn division_undoes_multiplication(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn x2_valuation_round_trip(a in small_poly(), k in 0usize..5) {
            prop_assume!(!a.is_zero());
            let q = a.shift(k);
            let (v, s) = q.x2_valuation().unwrap();
            prop_assert_eq!(s.shift(2 * v), q);
            prop_assert!(s.x_valuation().unwrap() < 2);
        }
    }
}
