//! Exact Gaussian elimination over Q(t), and the monomial-to-power-sum
//! transition it backs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::multipoly::monomial_expansion;
use crate::partition::{enumerate_partitions, Partition};
use crate::symfunc::SymFunc;
use crate::trational::TRational;

/// Solve `A x = b` for several right-hand sides at once. Every step is an
/// exact field operation; pivots are chosen by minimal polynomial degree
/// among the nonzero candidates of the column.
#[allow(clippy::needless_range_loop)]
pub fn solve_multi(a: &[Vec<TRational>], rhs: &[Vec<TRational>]) -> Result<Vec<Vec<TRational>>> {
    let n = a.len();
    let k = rhs.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert!(rhs.iter().all(|col| col.len() == n));

    // augmented working copy: n rows of (n + k) entries
    let mut m: Vec<Vec<TRational>> = (0..n)
        .map(|i| {
            let mut row = a[i].clone();
            for col in rhs {
                row.push(col[i].clone());
            }
            row
        })
        .collect();

    for col in 0..n {
        let pivot_row = (col..n)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| {
                let v = &m[r][col];
                v.numer().degree().unwrap_or(0) + v.denom().degree().unwrap_or(0)
            })
            .ok_or(Error::SingularSystem)?;
        m.swap(col, pivot_row);
        let inv = m[col][col].recip()?;
        for j in col..n + k {
            m[col][j] = &m[col][j] * &inv;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for j in col..n + k {
                let delta = &factor * &m[col][j];
                m[r][j] = &m[r][j] - &delta;
            }
        }
    }

    Ok((0..k)
        .map(|c| (0..n).map(|r| m[r][n + c].clone()).collect())
        .collect())
}

/// Express every monomial symmetric function of weight `n` in the power-sum
/// basis, by solving the transition system of the graded component.
pub fn m_in_p_all(n: u32) -> Result<BTreeMap<Partition, SymFunc>> {
    let lams = enumerate_partitions(n);
    let idx: BTreeMap<&Partition, usize> = lams.iter().zip(0..).collect();

    // row r = monomial expansion of p_{lams[r]}; solve A^T x = e_lambda so
    // that sum_mu x_mu p_mu has the indicator expansion.
    let mut a = vec![vec![TRational::zero(); lams.len()]; lams.len()];
    for (r, mu) in lams.iter().enumerate() {
        let p_mu = SymFunc::term(mu.clone(), TRational::one());
        for (lam, c) in monomial_expansion(&p_mu, n)? {
            a[idx[&lam]][r] = c;
        }
    }

    let rhs: Vec<Vec<TRational>> = (0..lams.len())
        .map(|i| {
            let mut e = vec![TRational::zero(); lams.len()];
            e[i] = TRational::one();
            e
        })
        .collect();
    let sols = solve_multi(&a, &rhs)?;

    Ok(lams
        .iter()
        .zip(sols)
        .map(|(lam, x)| {
            let f = SymFunc::from_terms(lams.iter().cloned().zip(x));
            (lam.clone(), f)
        })
        .collect())
}

/// The monomial symmetric function m_lambda as a power-sum expression.
pub fn m_in_p(lam: &Partition) -> Result<SymFunc> {
    let mut all = m_in_p_all(lam.weight())?;
    all.remove(lam).ok_or(Error::SingularSystem)
}

/// The forgotten symmetric function f_mu = omega(m_mu).
pub fn forgotten_in_p(mu: &Partition) -> Result<SymFunc> {
    Ok(m_in_p(mu)?.omega())
}
