//! Exact multivariate polynomials in x_1..x_k, used for finite-alphabet
//! specialization and for reading off monomial-basis coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::partition::{enumerate_partitions, Partition};
use crate::symfunc::SymFunc;
use crate::trational::TRational;

/// A polynomial in a fixed number of variables with Q(t) coefficients,
/// stored as an exponent-vector map with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, TRational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: TRational) -> Self {
        let mut p = MultiPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn from_terms(
        nvars: usize,
        pairs: impl IntoIterator<Item = (Vec<u32>, TRational)>,
    ) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &TRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[u32]) -> TRational {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(TRational::zero)
    }

    fn add_term(&mut self, exponents: Vec<u32>, c: TRational) {
        debug_assert_eq!(exponents.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in self.terms.iter() {
            for (eb, cb) in rhs.terms.iter() {
                let e: Vec<u32> = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &TRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// The power sum x_1^n + ... + x_k^n.
    pub fn power_sum(nvars: usize, n: u32) -> MultiPoly {
        let mut p = MultiPoly::zero(nvars);
        for i in 0..nvars {
            let mut e = vec![0u32; nvars];
            e[i] = n;
            p.add_term(e, TRational::one());
        }
        p
    }

    /// List of `{"exponents": [...], "coeff": {...}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| serde_json::json!({ "exponents": e, "coeff": c.to_json() }))
            .collect();
        serde_json::json!(terms)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                write!(f, "*x{}", i + 1)?;
                if exp > 1 {
                    write!(f, "^{exp}")?;
                }
            }
        }
        Ok(())
    }
}

/// Substitute p_n -> x_1^n + ... + x_k^n and expand exactly. The power-sum
/// product is accumulated over integer multinomial coefficients before the
/// Q(t) coefficient is applied.
pub fn specialize_vars(f: &SymFunc, k: usize) -> MultiPoly {
    assert!(k >= 1, "specialize_vars requires k >= 1");
    let mut out = MultiPoly::zero(k);
    for (lam, c) in f.terms() {
        let mut prod: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        prod.insert(vec![0; k], 1);
        for &part in lam.parts() {
            let mut next: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
            for (e, m) in &prod {
                for i in 0..k {
                    let mut e2 = e.clone();
                    e2[i] += part;
                    *next.entry(e2).or_insert(0) += m;
                }
            }
            prod = next;
        }
        for (e, m) in prod {
            out.add_term(e, c * &TRational::from_i64(m as i64));
        }
    }
    out
}

/// Coefficients of the monomial symmetric functions m_lambda in the
/// degree-`n` component of `f`, read off from the specialization to `n`
/// variables: the coefficient of the sorted monomial x^lambda is the
/// m_lambda coefficient.
pub fn monomial_expansion(f: &SymFunc, n: u32) -> Result<BTreeMap<Partition, TRational>> {
    let component = f.homogeneous_component(n);
    let mut out = BTreeMap::new();
    if n == 0 {
        let c = component.coeff(&Partition::empty());
        if !c.is_zero() {
            out.insert(Partition::empty(), c);
        }
        return Ok(out);
    }
    let poly = specialize_vars(&component, n as usize);
    for lam in enumerate_partitions(n) {
        let mut exps: Vec<u32> = lam.parts().to_vec();
        exps.resize(n as usize, 0);
        let c = poly.coeff(&exps);
        if !c.is_zero() {
            out.insert(lam, c);
        }
    }
    Ok(out)
}

/// Check that a homogeneous function's monomial expansion matches an
/// expected coefficient map exactly.
pub fn monomial_expansion_equals(
    f: &SymFunc,
    n: u32,
    expected: &BTreeMap<Partition, TRational>,
) -> bool {
    match monomial_expansion(f, n) {
        Ok(actual) => &actual == expected,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tpoly::TPoly;

    #[test]
    fn power_sum_shape() {
        let p = MultiPoly::power_sum(2, 2);
        assert_eq!(p.coeff(&[2, 0]), TRational::one());
        assert_eq!(p.coeff(&[0, 2]), TRational::one());
        assert!(p.coeff(&[1, 1]).is_zero());
    }

    #[test]
    fn specialize_p2_two_vars() {
        let sp = specialize_vars(&SymFunc::p(2), 2);
        assert_eq!(sp, MultiPoly::power_sum(2, 2));
    }

    #[test]
    fn specialize_product_expands() {
        // p_1^2 in 2 vars: x1^2 + 2 x1 x2 + x2^2
        let p11 = SymFunc::p(1) * SymFunc::p(1);
        let sp = specialize_vars(&p11, 2);
        assert_eq!(sp.coeff(&[2, 0]), TRational::one());
        assert_eq!(sp.coeff(&[1, 1]), TRational::from_i64(2));
        assert_eq!(sp.coeff(&[0, 2]), TRational::one());
        assert_eq!(sp.num_terms(), 3);
    }

    #[test]
    fn monomial_expansion_of_p2() {
        // p_2 = m_(2)
        let m = monomial_expansion(&SymFunc::p(2), 2).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m.get(&Partition::new([2])), Some(&TRational::one()));
    }

    #[test]
    fn monomial_expansion_keeps_t() {
        // (1-t) p_1 = (1-t) m_(1)
        let f = SymFunc::term(
            Partition::new([1]),
            TRational::from_poly(TPoly::from_i64_coeffs(&[1, -1])),
        );
        let m = monomial_expansion(&f, 1).unwrap();
        assert_eq!(
            m.get(&Partition::new([1])),
            Some(&TRational::from_poly(TPoly::from_i64_coeffs(&[1, -1])))
        );
    }

    #[test]
    fn degree_zero_component() {
        let m = monomial_expansion(&SymFunc::one(), 0).unwrap();
        assert_eq!(m.get(&Partition::empty()), Some(&TRational::one()));
    }
}
