//! Plethysm by monomial alphabets and the Laurent-in-z layer used by the
//! vertex-operator cross-checks.
//!
//! The alphabet grammar covers exactly the substitutions the identities
//! need: X itself plus signed powers of a single auxiliary variable z, so
//! p_n maps to (p_n if X is kept) + sum of sign * z^(a*n) over the extra
//! terms. The parameter t is never raised.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::SymFunc;
use crate::trational::TRational;

/// One adjoined alphabet element `sign * z^a` (sign is a formal
/// multiplicity: -1 removes the element `z^a`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlphabetTerm {
    pub sign: i8,
    pub z_exponent: i64,
}

/// A monomial alphabet `[+-X] + sum sign * z^a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphabetExpr {
    pub include_x: bool,
    pub terms: Vec<AlphabetTerm>,
}

impl AlphabetExpr {
    /// X + z
    pub fn x_plus_z() -> Self {
        AlphabetExpr {
            include_x: true,
            terms: vec![AlphabetTerm {
                sign: 1,
                z_exponent: 1,
            }],
        }
    }

    /// X - z
    pub fn x_minus_z() -> Self {
        AlphabetExpr {
            include_x: true,
            terms: vec![AlphabetTerm {
                sign: -1,
                z_exponent: 1,
            }],
        }
    }

    /// X - 1/z
    pub fn x_minus_inv_z() -> Self {
        AlphabetExpr {
            include_x: true,
            terms: vec![AlphabetTerm {
                sign: -1,
                z_exponent: -1,
            }],
        }
    }

    /// The pure one-element alphabet {z}.
    pub fn pure_z() -> Self {
        AlphabetExpr {
            include_x: false,
            terms: vec![AlphabetTerm {
                sign: 1,
                z_exponent: 1,
            }],
        }
    }
}

/// A finitely supported map from z-exponents to symmetric functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentZ {
    coeffs: BTreeMap<i64, SymFunc>,
}

impl LaurentZ {
    pub fn zero() -> Self {
        LaurentZ {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_coeffs(pairs: impl IntoIterator<Item = (i64, SymFunc)>) -> Self {
        let mut l = LaurentZ::zero();
        for (e, f) in pairs {
            l.add_coeff(e, f);
        }
        l
    }

    pub fn add_coeff(&mut self, exp: i64, f: SymFunc) {
        if f.is_zero() {
            return;
        }
        match self.coeffs.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(f);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &f;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> SymFunc {
        self.coeffs.get(&exp).cloned().unwrap_or_else(SymFunc::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &SymFunc)> {
        self.coeffs.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Coefficient accessor that refuses exponents outside the stated
    /// window.
    pub fn coeff_in_window(&self, exp: i64, lo: i64, hi: i64) -> Result<SymFunc> {
        if exp < lo || exp > hi {
            return Err(Error::WindowTooSmall { lo, hi, n: exp });
        }
        Ok(self.coeff(exp))
    }

    /// Substitute z -> -z: the z^n coefficient picks up (-1)^n.
    pub fn substitute_neg_z(&self) -> LaurentZ {
        LaurentZ {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, f)| (e, if e.rem_euclid(2) == 0 { f.clone() } else { -f }))
                .collect(),
        }
    }

    /// Apply a map to every z-coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&SymFunc) -> SymFunc) -> LaurentZ {
        let mut out = LaurentZ::zero();
        for (&e, g) in self.coeffs.iter() {
            out.add_coeff(e, f(g));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(e, f)| serde_json::json!({ "z_exponent": e, "value": f.to_json() }))
            .collect();
        serde_json::json!(coeffs)
    }
}

impl fmt::Display for LaurentZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, g) in self.coeffs.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "z^{e} * [{g}]")?;
        }
        Ok(())
    }
}

/// Expand `F` over the alphabet: each part n of a power-sum index is
/// replaced by (p_n if X is kept) + sum_j sign_j * z^(a_j * n), and the
/// result is collected by z-exponent.
pub fn plethysm_alphabet(f: &SymFunc, spec: &AlphabetExpr) -> LaurentZ {
    let mut out = LaurentZ::zero();
    for (lam, c) in f.terms() {
        // states: (z exponent, kept parts, integer multiplier)
        let mut states: Vec<(i64, Vec<u32>, i64)> = vec![(0, Vec::new(), 1)];
        for &part in lam.parts() {
            let mut next = Vec::with_capacity(states.len() * (1 + spec.terms.len()));
            for (zexp, kept, mult) in &states {
                if spec.include_x {
                    let mut kept2 = kept.clone();
                    kept2.push(part);
                    next.push((*zexp, kept2, *mult));
                }
                for term in &spec.terms {
                    next.push((
                        zexp + term.z_exponent * part as i64,
                        kept.clone(),
                        mult * term.sign as i64,
                    ));
                }
            }
            states = next;
        }
        for (zexp, kept, mult) in states {
            if mult == 0 {
                continue;
            }
            let coeff = c * &TRational::from_i64(mult);
            out.add_coeff(zexp, SymFunc::term(Partition::new(kept), coeff));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tpoly::TPoly;

    #[test]
    fn p2_of_x_minus_z() {
        // p_2[X - z] = p_2 - z^2
        let out = plethysm_alphabet(&SymFunc::p(2), &AlphabetExpr::x_minus_z());
        assert_eq!(out.coeff(0), SymFunc::p(2));
        assert_eq!(out.coeff(2), -SymFunc::one());
        assert!(out.coeff(1).is_zero());
    }

    #[test]
    fn product_index_expands_binomially() {
        // p_(1,1)[X + z] = p_1^2 + 2 z p_1 + z^2
        let p11 = SymFunc::p(1) * SymFunc::p(1);
        let out = plethysm_alphabet(&p11, &AlphabetExpr::x_plus_z());
        assert_eq!(out.coeff(0), p11);
        assert_eq!(out.coeff(1), SymFunc::p(1).scale(&TRational::from_i64(2)));
        assert_eq!(out.coeff(2), SymFunc::one());
    }

    #[test]
    fn pure_alphabet_drops_x() {
        // p_3[z] = z^3
        let out = plethysm_alphabet(&SymFunc::p(3), &AlphabetExpr::pure_z());
        assert_eq!(out.coeff(3), SymFunc::one());
        assert!(out.coeff(0).is_zero());
    }

    #[test]
    fn inverse_z_exponents() {
        // p_2[X - 1/z] = p_2 - z^(-2)
        let out = plethysm_alphabet(&SymFunc::p(2), &AlphabetExpr::x_minus_inv_z());
        assert_eq!(out.coeff(0), SymFunc::p(2));
        assert_eq!(out.coeff(-2), -SymFunc::one());
        assert_eq!(out.min_exp(), Some(-2));
    }

    #[test]
    fn substitute_neg_z_signs() {
        let l = LaurentZ::from_coeffs([
            (1, SymFunc::one()),
            (2, SymFunc::p(1)),
            (-1, SymFunc::one()),
        ]);
        let m = l.substitute_neg_z();
        assert_eq!(m.coeff(1), -SymFunc::one());
        assert_eq!(m.coeff(2), SymFunc::p(1));
        assert_eq!(m.coeff(-1), -SymFunc::one());
    }

    #[test]
    fn window_guard() {
        let l = LaurentZ::from_coeffs([(0, SymFunc::one())]);
        assert!(l.coeff_in_window(0, -1, 1).is_ok());
        assert!(l.coeff_in_window(2, -1, 1).is_err());
    }

    #[test]
    fn coefficients_stay_exact() {
        // q_1-like input: (1-t) p_1 under X + z
        let f = SymFunc::term(
            Partition::new([1]),
            TRational::from_poly(TPoly::from_i64_coeffs(&[1, -1])),
        );
        let out = plethysm_alphabet(&f, &AlphabetExpr::x_plus_z());
        assert_eq!(out.coeff(0), f);
        assert_eq!(
            out.coeff(1),
            SymFunc::constant(TRational::from_poly(TPoly::from_i64_coeffs(&[1, -1])))
        );
    }
}
