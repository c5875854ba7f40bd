//! Structure coefficients of the Q-basis, Hall polynomials, and the
//! executable stability scans.

use std::collections::BTreeMap;

use crate::bases::{hl_b_vertex, hl_q, skew_q_of};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Composition, Partition};
use crate::symfunc::SymFunc;
use crate::tpoly::TPoly;
use crate::trational::TRational;

/// Expansion coefficients a_lambda with Q_mu Q_nu = sum a_lambda Q_lambda,
/// computed as (Q_mu Q_nu, Q_lambda) / c_lambda(t). Every coefficient is
/// checked to be polynomial in t; a denominator surviving cancellation
/// signals an arithmetic bug.
pub fn product_expand_q(mu: &Partition, nu: &Partition) -> Result<BTreeMap<Partition, TRational>> {
    let prod = &hl_q(&mu.to_composition()) * &hl_q(&nu.to_composition());
    let mut out = BTreeMap::new();
    for lam in enumerate_partitions(mu.weight() + nu.weight()) {
        let ql = hl_q(&lam.to_composition());
        let inv_c = TRational::from_poly(lam.c_poly()).recip().unwrap();
        let a = &prod.inner(&ql) * &inv_c;
        if a.is_zero() {
            continue;
        }
        if !a.is_polynomial() {
            return Err(Error::NonPolynomial(format!(
                "coefficient of Q{lam} in Q{mu} * Q{nu}: {a}"
            )));
        }
        out.insert(lam, a);
    }
    Ok(out)
}

/// The raw inner product (Q_{lambda/mu}, Q_nu), without the c_nu
/// normalization.
pub fn f_inner(lambda: &Partition, mu: &Partition, nu: &Partition) -> TRational {
    let ql = hl_q(&lambda.to_composition());
    let skew = skew_q_of(&ql, mu);
    skew.inner(&hl_q(&nu.to_composition()))
}

/// The skew structure coefficient: the coefficient of Q_nu in the expansion
/// of Q_{lambda/mu}, i.e. (Q_{lambda/mu}, Q_nu) / c_nu(t).
pub fn f_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> TRational {
    if lambda.weight() != mu.weight() + nu.weight() {
        return TRational::zero();
    }
    let inv_c = TRational::from_poly(nu.c_poly()).recip().unwrap();
    &f_inner(lambda, mu, nu) * &inv_c
}

/// The Hall polynomial, via the t -> 1/t twist of the skew coefficient:
/// g = t^(eps(lambda) - eps(mu) - eps(nu)) f(1/t). Zero when the weights do
/// not match; errors if the twist fails to land in Z[t].
pub fn hall_g(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<TPoly> {
    if lambda.weight() != mu.weight() + nu.weight() {
        return Ok(TPoly::zero());
    }
    let f = f_coeff(lambda, mu, nu);
    let e = lambda.epsilon() - mu.epsilon() - nu.epsilon();
    let g = f.hall_twist(e);
    let poly = g
        .as_poly()
        .ok_or_else(|| Error::NonPolynomial(format!("g[{lambda};{mu},{nu}] = {g}")))?;
    if !poly.has_integer_coeffs() {
        return Err(Error::NonIntegral(format!(
            "g[{lambda};{mu},{nu}] = {poly}"
        )));
    }
    Ok(poly.clone())
}

/// Which basis family a stability scan samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanFamily {
    Q,
    B,
}

/// A scanned coefficient sequence together with the detected onset of
/// stability and the theorem's degree bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    /// |lambda| - |mu| - |nu|; the second index is n = m + offset.
    pub offset: i64,
    pub samples: Vec<(i64, TRational)>,
    /// Least sampled m from which all later samples agree, confirmed by at
    /// least 3 samples past it; `None` if no such point was confirmed.
    pub onset: Option<i64>,
    pub stable_value: Option<TRational>,
    /// mu_1 + nu_1 + |lambda| - |mu| - |nu|.
    pub theorem_bound: i64,
}

impl StabilityReport {
    /// True iff stabilization was confirmed no later than bound + 1.
    pub fn within_bound(&self) -> bool {
        match self.onset {
            Some(m) => m <= self.theorem_bound + 1,
            None => false,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "lambda": self.lambda.to_json(),
            "mu": self.mu.to_json(),
            "nu": self.nu.to_json(),
            "offset": self.offset,
            "samples": self.samples.iter().map(|(m, v)| {
                serde_json::json!({ "m": m, "value": v.to_json() })
            }).collect::<Vec<_>>(),
            "onset": self.onset,
            "stable": self.stable_value.as_ref().map(|v| v.to_json()),
            "bound": self.theorem_bound,
        })
    }
}

fn detect_onset(samples: &[(i64, TRational)]) -> (Option<i64>, Option<TRational>) {
    if samples.is_empty() {
        return (None, None);
    }
    let last = &samples[samples.len() - 1].1;
    let mut onset_idx = samples.len() - 1;
    while onset_idx > 0 && &samples[onset_idx - 1].1 == last {
        onset_idx -= 1;
    }
    // require 3 confirming samples beyond the candidate
    if samples.len() - 1 - onset_idx < 3 {
        return (None, None);
    }
    (Some(samples[onset_idx].0), Some(last.clone()))
}

fn scan_bound(lambda: &Partition, mu: &Partition, nu: &Partition) -> (i64, i64) {
    let offset = lambda.weight() as i64 - mu.weight() as i64 - nu.weight() as i64;
    let bound = mu.first() as i64 + nu.first() as i64 + offset;
    (offset, bound)
}

/// Sample the sequence ( Q_{(m,lambda)}, Q_mu Q_{(n,nu)} ) for
/// n = m + |lambda| - |mu| - |nu|, detect its onset of stability, and
/// report it against the theorem bound. `family` switches both sides to
/// the omega-image basis.
pub fn stability_scan(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    m_max: i64,
    family: ScanFamily,
) -> Result<StabilityReport> {
    let (offset, bound) = scan_bound(lambda, mu, nu);
    if m_max < bound + 3 {
        return Err(Error::ScanRangeTooSmall { m_max, bound });
    }
    let build = |c: &Composition| -> SymFunc {
        match family {
            ScanFamily::Q => hl_q(c),
            ScanFamily::B => hl_b_vertex(c),
        }
    };
    let fixed = build(&mu.to_composition());
    let lam_c = lambda.to_composition();
    let nu_c = nu.to_composition();

    let m_lo = 0.min(bound - 1);
    let mut samples = Vec::with_capacity((m_max - m_lo + 1) as usize);
    for m in m_lo..=m_max {
        let left = build(&lam_c.prepend(m));
        let right = &fixed * &build(&nu_c.prepend(m + offset));
        samples.push((m, left.inner(&right)));
    }
    let (onset, stable_value) = detect_onset(&samples);
    Ok(StabilityReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        offset,
        samples,
        onset,
        stable_value,
        theorem_bound: bound,
    })
}

/// Sample the Hall-polynomial sequence g^{(m,lambda)}_{mu,(n,nu)}(t) over
/// the m for which both prepended indices are partitions. The window is
/// extended past `m_max` if needed so that at least four samples exist
/// (otherwise stabilization could never be confirmed when the partition
/// constraint pushes the first sample near `m_max`).
pub fn hall_stability_scan(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    m_max: i64,
) -> Result<StabilityReport> {
    let (offset, bound) = scan_bound(lambda, mu, nu);
    if m_max < bound + 3 {
        return Err(Error::ScanRangeTooSmall { m_max, bound });
    }
    let m_lo = (lambda.first() as i64)
        .max(nu.first() as i64 - offset)
        .max(0);
    let mut samples = Vec::new();
    for m in m_lo..=m_max.max(m_lo + 3) {
        let big_lam = prepend_partition(lambda, m);
        let big_nu = prepend_partition(nu, m + offset);
        let (big_lam, big_nu) = match (big_lam, big_nu) {
            (Some(a), Some(b)) => (a, b),
            _ => continue,
        };
        let g = hall_g(&big_lam, mu, &big_nu)?;
        samples.push((m, TRational::from_poly(g)));
    }
    let (onset, stable_value) = detect_onset(&samples);
    Ok(StabilityReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        offset,
        samples,
        onset,
        stable_value,
        theorem_bound: bound,
    })
}

fn prepend_partition(p: &Partition, m: i64) -> Option<Partition> {
    p.to_composition().prepend(m).to_partition()
}
