//! Sparse univariate polynomials in the parameter `t` with exact rational
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in `t` over the rationals, stored as a finitely supported
/// exponent -> coefficient map. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPoly {
    coeffs: BTreeMap<u32, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse an exact rational written as `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (np, dp) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = np
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("bad rational {s:?}")))?;
    let d: BigInt = dp
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("bad rational {s:?}")))?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        TPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        TPoly::monomial(0, c)
    }

    pub fn constant_i64(c: i64) -> Self {
        TPoly::constant(rat(c))
    }

    /// The monomial `c * t^exp`.
    pub fn monomial(exp: u32, c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        TPoly { coeffs }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        TPoly::monomial(1, BigRational::one())
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: u32) -> Self {
        TPoly::one() - TPoly::monomial(k, BigRational::one())
    }

    /// Build from `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, BigRational)>) -> Self {
        let mut p = TPoly::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    /// Ascending dense coefficient list, e.g. `&[1, -1]` for `1 - t`.
    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        TPoly::from_pairs(coeffs.iter().enumerate().map(|(e, &c)| (e as u32, rat(c))))
    }

    fn add_term(&mut self, exp: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.keys().all(|&e| e == 0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u32) -> BigRational {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.values().next_back()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&u32, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn scale(&self, c: &BigRational) -> TPoly {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: u32) -> TPoly {
        TPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, v)| (e + k, v.clone()))
                .collect(),
        }
    }

    /// Coefficient reversal: for `p` of degree `d`, returns `t^d * p(1/t)`.
    pub fn reverse(&self) -> TPoly {
        match self.degree() {
            None => TPoly::zero(),
            Some(d) => TPoly {
                coeffs: self
                    .coeffs
                    .iter()
                    .map(|(&e, v)| (d - e, v.clone()))
                    .collect(),
            },
        }
    }

    pub fn pow(&self, n: u32) -> TPoly {
        let mut acc = TPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at `t = t0`.
    pub fn eval(&self, t0: &BigRational) -> BigRational {
        // Horner over the sparse support, descending.
        let mut acc = BigRational::zero();
        let mut prev_exp: Option<u32> = None;
        for (&e, c) in self.coeffs.iter().rev() {
            if let Some(pe) = prev_exp {
                let gap = pe - e;
                for _ in 0..gap {
                    acc *= t0;
                }
            }
            acc += c;
            prev_exp = Some(e);
        }
        if let Some(e) = prev_exp {
            for _ in 0..e {
                acc *= t0;
            }
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &TPoly) -> Result<(TPoly, TPoly)> {
        let d_deg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = TPoly::zero();
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let q_coeff = rem.coeff(r_deg) / &lc;
            let shift = r_deg - d_deg;
            quot.add_term(shift, q_coeff.clone());
            for (&e, c) in divisor.coeffs.iter() {
                rem.add_term(e + shift, -(c * &q_coeff));
            }
        }
        Ok((quot, rem))
    }

    /// Exact quotient; errors if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &TPoly) -> Result<TPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::NonPolynomial(format!(
                "{self} not divisible by {divisor}"
            )));
        }
        Ok(q)
    }

    /// Monic gcd over Q[t]; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &TPoly) -> TPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).unwrap();
            a = b;
            b = r.make_monic();
        }
        a.make_monic()
    }

    fn make_monic(self) -> TPoly {
        match self.leading_coeff() {
            None => self,
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// The scalar `s` such that `s * self` has coprime integer coefficients
    /// and positive leading coefficient. Zero maps to 1.
    pub fn primitivizing_factor(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::one();
        }
        let mut denom_lcm = BigInt::one();
        let mut numer_gcd = BigInt::zero();
        for c in self.coeffs.values() {
            denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
            numer_gcd = num_integer::gcd(numer_gcd, c.numer().abs());
        }
        let mut s = BigRational::new(denom_lcm, numer_gcd);
        if self.leading_coeff().unwrap().is_negative() {
            s = -s;
        }
        s
    }

    /// True iff every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| c.denom().is_one())
    }

    /// Ascending list of exact-rational strings, one per exponent up to the
    /// degree: `1 - t` serializes as `["1", "-1"]`.
    pub fn to_json(&self) -> serde_json::Value {
        let d = match self.degree() {
            None => return serde_json::json!(["0"]),
            Some(d) => d,
        };
        let list: Vec<String> = (0..=d)
            .map(|e| rational_to_string(&self.coeff(e)))
            .collect();
        serde_json::json!(list)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<TPoly> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::InvalidArgument("expected coefficient array".into()))?;
        let mut p = TPoly::zero();
        for (e, c) in arr.iter().enumerate() {
            let s = c
                .as_str()
                .ok_or_else(|| Error::InvalidArgument("expected rational string".into()))?;
            p.add_term(e as u32, parse_rational(s)?);
        }
        Ok(p)
    }
}

impl Add<&TPoly> for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        for (&e, c) in rhs.coeffs.iter() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub<&TPoly> for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        for (&e, c) in rhs.coeffs.iter() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul<&TPoly> for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        let mut out = TPoly::zero();
        for (&ea, ca) in self.coeffs.iter() {
            for (&eb, cb) in rhs.coeffs.iter() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(self, rhs: TPoly) -> TPoly {
        &self + &rhs
    }
}

impl Sub for TPoly {
    type Output = TPoly;
    fn sub(self, rhs: TPoly) -> TPoly {
        &self - &rhs
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        -&self
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                write!(f, "{}", rational_to_string(&mag))?;
            }
            if e > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if e == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_and_normalization() {
        let p = TPoly::from_i64_coeffs(&[1, 0, -1]); // 1 - t^2
        assert_eq!(p.degree(), Some(2));
        let q = &p + &TPoly::from_i64_coeffs(&[0, 0, 1]); // add t^2
        assert_eq!(q, TPoly::one());
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn long_division_oracle() {
        // t^3 - t^2 - t + 1 divided by 1 - t; confirm by multiplying back.
        let a = TPoly::from_i64_coeffs(&[1, -1, -1, 1]);
        let b = TPoly::from_i64_coeffs(&[1, -1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(&q * &b, a);
        // the quotient is 1 - t^2
        assert_eq!(q, TPoly::from_i64_coeffs(&[1, 0, -1]));
    }

    #[test]
    fn div_rem_identity() {
        let a = TPoly::from_i64_coeffs(&[3, -2, 0, 1, 5]);
        let b = TPoly::from_i64_coeffs(&[1, 0, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // gcd(1 - t^2, 1 - t^3) = 1 - t up to the monic normalization t - 1.
        let a = TPoly::one_minus_t_pow(2);
        let b = TPoly::one_minus_t_pow(3);
        let g = a.gcd(&b);
        assert_eq!(g, TPoly::from_i64_coeffs(&[-1, 1]));
    }

    #[test]
    fn eval_horner() {
        let p = TPoly::from_i64_coeffs(&[1, -1]); // 1 - t
        assert_eq!(p.eval(&rat(0)), rat(1));
        assert_eq!(p.eval(&rat(-1)), rat(2));
        let q = TPoly::from_i64_coeffs(&[2, 0, 0, 5]); // 2 + 5t^3
        assert_eq!(q.eval(&rat_frac(1, 2)), rat_frac(21, 8));
    }

    #[test]
    fn reverse_is_coefficient_flip() {
        let p = TPoly::from_i64_coeffs(&[1, -2, 0, 3]);
        assert_eq!(p.reverse(), TPoly::from_i64_coeffs(&[3, 0, -2, 1]));
    }

    #[test]
    fn primitivizing_factor_normalizes() {
        let p = TPoly::from_pairs([(0, rat_frac(2, 3)), (1, rat_frac(-4, 3))]);
        let s = p.primitivizing_factor();
        let n = p.scale(&s);
        assert!(n.has_integer_coeffs());
        assert!(n.leading_coeff().unwrap().is_positive());
        assert_eq!(n, TPoly::from_i64_coeffs(&[-1, 2]));
    }

    #[test]
    fn display_compact() {
        assert_eq!(TPoly::from_i64_coeffs(&[1, 1]).to_string(), "t+1");
        assert_eq!(
            TPoly::from_i64_coeffs(&[1, -1, -1, 1]).to_string(),
            "t^3-t^2-t+1"
        );
        assert_eq!(TPoly::zero().to_string(), "0");
        assert_eq!(TPoly::from_i64_coeffs(&[0, -1]).to_string(), "-t");
    }

    #[test]
    fn json_round_trip() {
        let p = TPoly::from_pairs([(0, rat(1)), (2, rat_frac(-1, 2))]);
        let v = p.to_json();
        assert_eq!(v, serde_json::json!(["1", "0", "-1/2"]));
        assert_eq!(TPoly::from_json(&v).unwrap(), p);
    }
}
