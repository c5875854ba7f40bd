//! Symmetric functions over Q(t), represented in the power-sum basis.
//!
//! Every element is a finitely supported map from a power-sum index
//! partition lambda (meaning p_lambda = p_{l1} p_{l2} ...) to a coefficient
//! in Q(t). The involution omega, the deformed inner product, and adjoint
//! operators are all diagonal or derivation-like in this basis, which is why
//! it is the internal canonical one; every other basis is a constructor.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tpoly::TPoly;
use crate::trational::TRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunc {
    terms: BTreeMap<Partition, TRational>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc {
            terms: BTreeMap::new(),
        }
    }

    /// The constant 1, i.e. the empty power-sum product.
    pub fn one() -> Self {
        SymFunc::term(Partition::empty(), TRational::one())
    }

    pub fn constant(c: TRational) -> Self {
        SymFunc::term(Partition::empty(), c)
    }

    /// The power sum p_n, n >= 1.
    pub fn p(n: u32) -> Self {
        assert!(n >= 1, "p_n requires n >= 1");
        SymFunc::term(Partition::new([n]), TRational::one())
    }

    /// p_lambda with a coefficient.
    pub fn term(index: Partition, coeff: TRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(index, coeff);
        }
        SymFunc { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Partition, TRational)>) -> Self {
        let mut f = SymFunc::zero();
        for (idx, c) in pairs {
            f.add_term(idx, c);
        }
        f
    }

    fn add_term(&mut self, index: Partition, coeff: TRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &TRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, index: &Partition) -> TRational {
        self.terms
            .get(index)
            .cloned()
            .unwrap_or_else(TRational::zero)
    }

    /// Maximum term weight; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|p| p.weight()).max()
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|p| p.weight() == d)
    }

    /// The terms of weight exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.weight() == d)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drop all terms of weight greater than `d`.
    pub fn truncate(&self, d: u32) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.weight() <= d)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &TRational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// The involution omega: p_n -> (-1)^(n-1) p_n, so the p_lambda
    /// coefficient picks up (-1)^(|lambda| - len(lambda)).
    pub fn omega(&self) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(p, c)| {
                    let sign = (p.weight() as i64 - p.len() as i64) % 2;
                    let c = if sign == 0 { c.clone() } else { -c };
                    (p.clone(), c)
                })
                .collect(),
        }
    }

    /// Substitute p_n -> -p_n (the negated-alphabet plethysm F[-X]).
    pub fn negate_alphabet(&self) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(p, c)| {
                    let c = if p.len() % 2 == 0 { c.clone() } else { -c };
                    (p.clone(), c)
                })
                .collect(),
        }
    }

    /// The deformed inner product, diagonal on power sums:
    /// (p_lambda, p_mu) = delta * z_lambda * prod_i 1/(1 - t^(lambda_i)).
    pub fn inner(&self, other: &SymFunc) -> TRational {
        let mut acc = TRational::zero();
        // iterate over the smaller support
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (idx, c1) in small.terms.iter() {
            if let Some(c2) = big.terms.get(idx) {
                acc = &acc + &(&(c1 * c2) * &p_norm(idx));
            }
        }
        acc
    }

    /// Evaluate every coefficient at `t = t0`; errors at a pole.
    pub fn specialize_t(&self, t0: &BigRational) -> Result<SymFunc> {
        let mut out = SymFunc::zero();
        for (idx, c) in self.terms.iter() {
            let v = c.eval_at(t0)?;
            out.add_term(idx.clone(), TRational::from_rational(v));
        }
        Ok(out)
    }

    /// Assert every coefficient is polynomial in t, returning the offending
    /// term otherwise.
    pub fn check_polynomial_coeffs(&self) -> Result<()> {
        for (idx, c) in self.terms.iter() {
            if !c.is_polynomial() {
                return Err(Error::NonPolynomial(format!("coefficient of p{idx}: {c}")));
            }
        }
        Ok(())
    }

    /// `{"basis":"p","degree":d,"terms":[{"index":[...],"coeff":{...}}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(idx, c)| serde_json::json!({ "index": idx.to_json(), "coeff": c.to_json() }))
            .collect();
        serde_json::json!({
            "basis": "p",
            "degree": self.degree().unwrap_or(0),
            "terms": terms,
        })
    }
}

/// z_lambda = prod_i i^(k_i) k_i! for lambda = (1^(k_1), 2^(k_2), ...).
pub fn z_factor(index: &Partition) -> BigRational {
    let mut z = BigInt::one();
    for (v, k) in index.multiplicities() {
        for _ in 0..k {
            z *= BigInt::from(v);
        }
        for j in 1..=k {
            z *= BigInt::from(j);
        }
    }
    BigRational::from_integer(z)
}

/// (p_lambda, p_lambda) = z_lambda * prod_i 1/(1 - t^(lambda_i)).
fn p_norm(index: &Partition) -> TRational {
    let mut den = TPoly::one();
    for &v in index.parts() {
        den = den * TPoly::one_minus_t_pow(v);
    }
    TRational::new(TPoly::constant(z_factor(index)), den).unwrap()
}

/// Apply the adjoint of multiplication by `f` to `g` (that is, compute
/// f-perp of g). In the p-basis this substitutes each p_n in `f` by the
/// derivation n/(1 - t^n) d/dp_n acting on `g`.
pub fn adjoint_apply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    adjoint_impl(f, g, true)
}

/// The adjoint with respect to the undeformed Hall inner product
/// ((p_lambda, p_mu) = delta z_lambda), i.e. p_n -> n d/dp_n. This is the
/// perp appearing in the classical Bernstein operators.
pub fn adjoint_apply_classical(f: &SymFunc, g: &SymFunc) -> SymFunc {
    adjoint_impl(f, g, false)
}

fn adjoint_impl(f: &SymFunc, g: &SymFunc, deformed: bool) -> SymFunc {
    let mut out = SymFunc::zero();
    for (lam, cf) in f.terms.iter() {
        for (mu, cg) in g.terms.iter() {
            if !mu.contains(lam) {
                continue;
            }
            let rest = mu.remove(lam).unwrap();
            // falling factorial of multiplicities from repeated derivation,
            // and an n/(1 - t^n) (or plain n) factor per removed part
            let mut scalar = BigInt::one();
            let mut den = TPoly::one();
            for (v, k) in lam.multiplicities() {
                let m = mu.multiplicity(v);
                for j in 0..k {
                    scalar *= BigInt::from(m - j);
                    scalar *= BigInt::from(v);
                }
                if deformed {
                    for _ in 0..k {
                        den = den * TPoly::one_minus_t_pow(v);
                    }
                }
            }
            let factor =
                TRational::new(TPoly::constant(BigRational::from_integer(scalar)), den).unwrap();
            out.add_term(rest, &(cf * cg) * &factor);
        }
    }
    out
}

impl Add<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (idx, c) in rhs.terms.iter() {
            out.add_term(idx.clone(), c.clone());
        }
        out
    }
}

impl Sub<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (idx, c) in rhs.terms.iter() {
            out.add_term(idx.clone(), -c);
        }
        out
    }
}

impl Mul<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (la, ca) in self.terms.iter() {
            for (lb, cb) in rhs.terms.iter() {
                out.add_term(la.merge(lb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: SymFunc) -> SymFunc {
        &self + &rhs
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: SymFunc) -> SymFunc {
        &self - &rhs
    }
}

impl Mul for SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: SymFunc) -> SymFunc {
        &self * &rhs
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        -&self
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if idx.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*p{idx}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tpoly::rat;

    fn one_minus_t() -> TRational {
        TRational::from_poly(TPoly::from_i64_coeffs(&[1, -1]))
    }

    #[test]
    fn ring_ops_merge_indices() {
        let p1 = SymFunc::p(1);
        let p11 = &p1 * &p1;
        assert_eq!(p11, SymFunc::term(Partition::new([1, 1]), TRational::one()));

        let f = &SymFunc::p(2) + &p11;
        let g = &f * &SymFunc::p(3);
        assert_eq!(
            g,
            SymFunc::from_terms([
                (Partition::new([3, 2]), TRational::one()),
                (Partition::new([3, 1, 1]), TRational::one()),
            ])
        );

        assert_eq!(&f + &SymFunc::zero(), f);
    }

    #[test]
    fn omega_on_power_sums() {
        assert_eq!(SymFunc::p(2).omega(), -SymFunc::p(2));
        assert_eq!(SymFunc::p(3).omega(), SymFunc::p(3));
        // omega is an involution
        let f = SymFunc::from_terms([
            (Partition::new([2, 1]), TRational::one()),
            (Partition::new([3]), one_minus_t()),
        ]);
        assert_eq!(f.omega().omega(), f);
    }

    #[test]
    fn inner_product_diagonal() {
        // (p_1, p_1) = 1/(1-t), forced by (q_1, m_1) = 1
        let expect = TRational::new(TPoly::one(), TPoly::from_i64_coeffs(&[1, -1])).unwrap();
        assert_eq!(SymFunc::p(1).inner(&SymFunc::p(1)), expect);
        // z_(2,1,1) = 2 * 1 * 2! = 4
        assert_eq!(z_factor(&Partition::new([2, 1, 1])), rat(4));
        // off-diagonal vanishes
        assert!(SymFunc::p(1).inner(&SymFunc::p(2)).is_zero());
    }

    #[test]
    fn adjoint_derivation_rule() {
        // p_1-perp p_(1,1) = (2/(1-t)) p_1, checked against the defining
        // adjoint property over the weight-1 spanning set {p_1}:
        //   (p_1-perp p_(1,1), p_1) = (p_(1,1), p_1 p_1) = z_(1,1)/(1-t)^2.
        let p1 = SymFunc::p(1);
        let p11 = &p1 * &p1;
        let lhs = adjoint_apply(&p1, &p11);
        let two_over =
            TRational::new(TPoly::constant_i64(2), TPoly::from_i64_coeffs(&[1, -1])).unwrap();
        assert_eq!(lhs, p1.scale(&two_over));
        assert_eq!(lhs.inner(&p1), p11.inner(&p11));
    }

    #[test]
    fn adjoint_defining_property_small() {
        // (F-perp G, H) = (G, F H) on a few explicit triples
        let cases = [
            (SymFunc::p(1), SymFunc::p(2) * SymFunc::p(1), SymFunc::p(2)),
            (SymFunc::p(2), SymFunc::p(2) * SymFunc::p(2), SymFunc::p(2)),
            (
                SymFunc::p(1) * SymFunc::p(1),
                SymFunc::p(1) * SymFunc::p(1) * SymFunc::p(2),
                SymFunc::p(2),
            ),
        ];
        for (f, g, h) in cases {
            assert_eq!(adjoint_apply(&f, &g).inner(&h), g.inner(&(&f * &h)));
        }
    }

    #[test]
    fn truncation_and_components() {
        let f = &SymFunc::p(3) + &(&SymFunc::p(1) + &SymFunc::one());
        assert_eq!(f.truncate(1), &SymFunc::p(1) + &SymFunc::one());
        assert_eq!(f.homogeneous_component(3), SymFunc::p(3));
        assert!(f.truncate(0).is_homogeneous_of(0));
    }

    #[test]
    fn specialize_t_evaluates_coeffs() {
        let f = SymFunc::term(Partition::new([1]), one_minus_t());
        let at0 = f.specialize_t(&rat(0)).unwrap();
        assert_eq!(at0, SymFunc::p(1));
        let atm1 = f.specialize_t(&rat(-1)).unwrap();
        assert_eq!(atm1, SymFunc::p(1).scale(&TRational::from_i64(2)));
    }
}
