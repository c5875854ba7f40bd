//! The field Q(t) of rational functions in `t`, kept in a canonical reduced
//! form so that equality is structural.
//!
//! Canonical form: gcd(num, den) = 1 over Q[t], and the denominator has
//! coprime integer coefficients with positive leading coefficient. The zero
//! element is 0/1.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::tpoly::{rational_to_string, TPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TRational {
    num: TPoly,
    den: TPoly,
}

impl TRational {
    /// Build `num / den` in canonical form. Errors if `den` is zero.
    pub fn new(num: TPoly, den: TPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: TPoly, den: TPoly) -> Self {
        if num.is_zero() {
            return TRational {
                num: TPoly::zero(),
                den: TPoly::one(),
            };
        }
        let (mut num, mut den) = if den.is_one() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
            }
        };
        let s = den.primitivizing_factor();
        if !s.is_one() {
            num = num.scale(&s);
            den = den.scale(&s);
        }
        TRational { num, den }
    }

    pub fn zero() -> Self {
        TRational {
            num: TPoly::zero(),
            den: TPoly::one(),
        }
    }

    pub fn one() -> Self {
        TRational {
            num: TPoly::one(),
            den: TPoly::one(),
        }
    }

    pub fn from_poly(p: TPoly) -> Self {
        TRational {
            num: p,
            den: TPoly::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        TRational::from_poly(TPoly::constant(c))
    }

    pub fn from_i64(c: i64) -> Self {
        TRational::from_poly(TPoly::constant_i64(c))
    }

    /// `t^k`.
    pub fn t_pow(k: u32) -> Self {
        TRational::from_poly(TPoly::monomial(k, BigRational::one()))
    }

    pub fn numer(&self) -> &TPoly {
        &self.num
    }

    pub fn denom(&self) -> &TPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True iff the canonical denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator, provided the canonical denominator is 1.
    pub fn as_poly(&self) -> Option<&TPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn try_div(&self, rhs: &TRational) -> Result<TRational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(TRational::reduce(
            &self.num * &rhs.den,
            &self.den * &rhs.num,
        ))
    }

    pub fn recip(&self) -> Result<TRational> {
        TRational::one().try_div(self)
    }

    /// Exact evaluation at `t = t0`; errors at a pole.
    pub fn eval_at(&self, t0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            return Err(Error::Pole(rational_to_string(t0)));
        }
        Ok(self.num.eval(t0) / d)
    }

    /// `t^e * f(1/t)`, returned canonical. The result may be a genuine
    /// rational function even when `f` is a polynomial.
    pub fn hall_twist(&self, e: i64) -> TRational {
        if self.is_zero() {
            return TRational::zero();
        }
        let dp = self.num.degree().unwrap() as i64;
        let dq = self.den.degree().unwrap() as i64;
        let rn = self.num.reverse();
        let rd = self.den.reverse();
        let k = e + dq - dp;
        if k >= 0 {
            TRational::reduce(rn.shift_up(k as u32), rd)
        } else {
            TRational::reduce(rn, rd.shift_up((-k) as u32))
        }
    }

    /// `{"num": [...], "den": [...]}` with both sides as ascending
    /// coefficient lists.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<TRational> {
        let num = TPoly::from_json(
            v.get("num")
                .ok_or_else(|| Error::InvalidArgument("missing num".into()))?,
        )?;
        let den = TPoly::from_json(
            v.get("den")
                .ok_or_else(|| Error::InvalidArgument("missing den".into()))?,
        )?;
        TRational::new(num, den)
    }
}

impl Add<&TRational> for &TRational {
    type Output = TRational;
    fn add(self, rhs: &TRational) -> TRational {
        if self.den == rhs.den {
            return TRational::reduce(&self.num + &rhs.num, self.den.clone());
        }
        TRational::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&TRational> for &TRational {
    type Output = TRational;
    fn sub(self, rhs: &TRational) -> TRational {
        self + &(-rhs)
    }
}

impl Mul<&TRational> for &TRational {
    type Output = TRational;
    fn mul(self, rhs: &TRational) -> TRational {
        if self.is_zero() || rhs.is_zero() {
            return TRational::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return TRational::from_poly(&self.num * &rhs.num);
        }
        TRational::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &TRational {
    type Output = TRational;
    fn neg(self) -> TRational {
        TRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for TRational {
    type Output = TRational;
    fn add(self, rhs: TRational) -> TRational {
        &self + &rhs
    }
}

impl Sub for TRational {
    type Output = TRational;
    fn sub(self, rhs: TRational) -> TRational {
        &self - &rhs
    }
}

impl Mul for TRational {
    type Output = TRational;
    fn mul(self, rhs: TRational) -> TRational {
        &self * &rhs
    }
}

impl Neg for TRational {
    type Output = TRational;
    fn neg(self) -> TRational {
        -&self
    }
}

impl fmt::Display for TRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tpoly::rat;

    fn poly(coeffs: &[i64]) -> TPoly {
        TPoly::from_i64_coeffs(coeffs)
    }

    fn frac(n: &[i64], d: &[i64]) -> TRational {
        TRational::new(poly(n), poly(d)).unwrap()
    }

    #[test]
    fn inverse_pair_cancels() {
        // (1-t)/1 * 1/(1-t) = 1
        let a = frac(&[1, -1], &[1]);
        let b = frac(&[1], &[1, -1]);
        assert!((&a * &b).is_one());
    }

    #[test]
    fn factorization_reduces() {
        // (1-t^2)/(1-t) = 1 + t
        let f = frac(&[1, 0, -1], &[1, -1]);
        assert_eq!(f, TRational::from_poly(poly(&[1, 1])));
        assert!(f.is_polynomial());
    }

    #[test]
    fn exact_quotient() {
        // (t^3 - t^2 - t + 1) / (1 - t) = 1 - t^2, frozen from the
        // long-division oracle in tpoly.
        let a = TRational::from_poly(poly(&[1, -1, -1, 1]));
        let b = TRational::from_poly(poly(&[1, -1]));
        assert_eq!(
            a.try_div(&b).unwrap(),
            TRational::from_poly(poly(&[1, 0, -1]))
        );
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let a = TRational::one();
        assert_eq!(a.try_div(&TRational::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn eval_and_pole() {
        let f = frac(&[1, -1], &[1]); // 1 - t
        assert_eq!(f.eval_at(&rat(0)).unwrap(), rat(1));
        assert_eq!(f.eval_at(&rat(-1)).unwrap(), rat(2));
        let g = frac(&[1, 1], &[1, -1]); // (1+t)/(1-t)
        assert_eq!(g.eval_at(&rat(1)), Err(Error::Pole("1".into())));
    }

    #[test]
    fn hall_twist_examples() {
        // t^1 * (1 + 1/t) = t + 1
        let f = TRational::from_poly(poly(&[1, 1]));
        assert_eq!(f.hall_twist(1), TRational::from_poly(poly(&[1, 1])));
        // constants are fixed at e = 0
        assert_eq!(TRational::one().hall_twist(0), TRational::one());
        // t^2 * (1/t) = t
        let g = TRational::from_poly(poly(&[0, 1]));
        assert_eq!(g.hall_twist(2), g);
    }

    #[test]
    fn canonical_denominator_shape() {
        // 1/(2 - 2t) normalizes the denominator to integer content 1 with
        // positive leading coefficient.
        let f = frac(&[1], &[2, -2]);
        assert!(f.denom().has_integer_coeffs());
        assert!(f.denom().leading_coeff().unwrap() > &rat(0));
        // the same value built differently compares equal bitwise
        let g = frac(&[-1], &[-2, 2]);
        assert_eq!(f, g);
    }
}
