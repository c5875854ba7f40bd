//! Constructors for the named families: h_n, e_n, the one-row generators
//! q_n and b_n, Schur functions, Schur's Q-functions, Hall-Littlewood Q and
//! its omega-image B, and skew functions.
//!
//! Q_lambda is built by default through iterated vertex operators; the
//! classical raising-operator expansion is kept as an independent route so
//! the two can certify each other.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::Result;
use crate::linalg::m_in_p_all;
use crate::partition::{Composition, Partition};
use crate::symfunc::{adjoint_apply, SymFunc};
use crate::tpoly::TPoly;
use crate::trational::TRational;
use crate::vertexops;

/// Shared generator tables. The ladders grow monotonically under a lock and
/// are handed out as immutable snapshots, so concurrent readers always see
/// consistent values.
struct LadderCache {
    q: Vec<SymFunc>,
    h: Vec<SymFunc>,
}

fn ladder_cache() -> &'static Mutex<LadderCache> {
    static CACHE: OnceLock<Mutex<LadderCache>> = OnceLock::new();
    CACHE.get_or_init(|| {
        Mutex::new(LadderCache {
            q: vec![SymFunc::one()],
            h: vec![SymFunc::one()],
        })
    })
}

fn inv(n: u32) -> TRational {
    TRational::from_rational(num_rational::BigRational::new(1.into(), n.into()))
}

/// q_0, ..., q_max (at least) from n q_n = sum (1 - t^k) p_k q_{n-k}.
pub fn q_ladder(max: u32) -> Arc<Vec<SymFunc>> {
    let mut cache = ladder_cache().lock().unwrap();
    while cache.q.len() <= max as usize {
        let n = cache.q.len() as u32;
        let mut acc = SymFunc::zero();
        for k in 1..=n {
            let deformed = SymFunc::p(k).scale(&TRational::from_poly(TPoly::one_minus_t_pow(k)));
            acc = &acc + &(&deformed * &cache.q[(n - k) as usize]);
        }
        cache.q.push(acc.scale(&inv(n)));
    }
    Arc::new(cache.q[..=max as usize].to_vec())
}

/// h_0, ..., h_max (at least) from the Newton recurrence n h_n = sum p_k h_{n-k}.
pub fn h_ladder(max: u32) -> Arc<Vec<SymFunc>> {
    let mut cache = ladder_cache().lock().unwrap();
    while cache.h.len() <= max as usize {
        let n = cache.h.len() as u32;
        let mut acc = SymFunc::zero();
        for k in 1..=n {
            acc = &acc + &(&SymFunc::p(k) * &cache.h[(n - k) as usize]);
        }
        cache.h.push(acc.scale(&inv(n)));
    }
    Arc::new(cache.h[..=max as usize].to_vec())
}

/// b_0, ..., b_max via b_n = omega(q_n).
pub fn b_ladder(max: u32) -> Arc<Vec<SymFunc>> {
    Arc::new(q_ladder(max).iter().map(|f| f.omega()).collect())
}

/// e_0, ..., e_max via e_n = omega(h_n).
pub fn e_ladder(max: u32) -> Arc<Vec<SymFunc>> {
    Arc::new(h_ladder(max).iter().map(|f| f.omega()).collect())
}

/// The complete homogeneous symmetric function h_n (zero for n < 0).
pub fn gen_h(n: i64) -> SymFunc {
    if n < 0 {
        return SymFunc::zero();
    }
    h_ladder(n as u32)[n as usize].clone()
}

/// The elementary symmetric function e_n = omega(h_n).
pub fn gen_e(n: i64) -> SymFunc {
    gen_h(n).omega()
}

/// The one-row Hall-Littlewood generator q_n (zero for n < 0).
pub fn gen_q(n: i64) -> SymFunc {
    if n < 0 {
        return SymFunc::zero();
    }
    q_ladder(n as u32)[n as usize].clone()
}

/// b_n = omega(q_n).
pub fn gen_b(n: i64) -> SymFunc {
    gen_q(n).omega()
}

/// The t = -1 generator q'_n, built from the product of the h- and
/// e-generating functions: q'_n = sum_{i+j=n} h_i e_j.
pub fn gen_qprime(n: i64) -> SymFunc {
    if n < 0 {
        return SymFunc::zero();
    }
    let n = n as u32;
    let hs = h_ladder(n);
    let mut acc = SymFunc::zero();
    for i in 0..=n {
        acc = &acc + &(&hs[i as usize] * &hs[(n - i) as usize].omega());
    }
    acc
}

/// Product q_{mu_1} q_{mu_2} ... ; zero if any part is negative.
pub fn q_prod(mu: &Composition) -> SymFunc {
    prod_from_ladder(mu, &q_ladder(mu.positive_weight() as u32))
}

/// Product b_{mu_1} b_{mu_2} ... ; zero if any part is negative.
pub fn b_prod(mu: &Composition) -> SymFunc {
    prod_from_ladder(mu, &b_ladder(mu.positive_weight() as u32))
}

fn prod_from_ladder(mu: &Composition, ladder: &[SymFunc]) -> SymFunc {
    let mut acc = SymFunc::one();
    for &part in mu.parts() {
        if part < 0 {
            return SymFunc::zero();
        }
        acc = &acc * &ladder[part as usize];
    }
    acc
}

/// Division-free determinant of a square matrix of symmetric functions,
/// by minor expansion with memoization on column subsets.
pub fn determinant(m: &[Vec<SymFunc>]) -> SymFunc {
    let n = m.len();
    assert!(n <= 31, "determinant limited to 31x31");
    assert!(m.iter().all(|row| row.len() == n));
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut memo: HashMap<u32, SymFunc> = HashMap::new();

    fn rec(m: &[Vec<SymFunc>], n: usize, cols: u32, memo: &mut HashMap<u32, SymFunc>) -> SymFunc {
        if cols == 0 {
            return SymFunc::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let row = n - cols.count_ones() as usize;
        let mut acc = SymFunc::zero();
        let mut sign = false;
        for j in 0..n {
            if cols & (1 << j) == 0 {
                continue;
            }
            if !m[row][j].is_zero() {
                let sub = rec(m, n, cols & !(1 << j), memo);
                let term = &m[row][j] * &sub;
                acc = if sign { &acc - &term } else { &acc + &term };
            }
            sign = !sign;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    rec(m, n, full, &mut memo)
}

/// Pfaffian of a skew-symmetric matrix of symmetric functions, by first-row
/// expansion with memoization on index subsets.
pub fn pfaffian(m: &[Vec<SymFunc>]) -> SymFunc {
    let n = m.len();
    assert!(n.is_multiple_of(2), "pfaffian needs even dimension");
    assert!(n <= 31);
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut memo: HashMap<u32, SymFunc> = HashMap::new();

    fn rec(m: &[Vec<SymFunc>], mask: u32, memo: &mut HashMap<u32, SymFunc>) -> SymFunc {
        if mask == 0 {
            return SymFunc::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let first = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << first);
        let mut acc = SymFunc::zero();
        let mut sign = false; // (-1)^k for the k-th remaining index, k from 2
        let mut it = rest;
        while it != 0 {
            let j = it.trailing_zeros() as usize;
            it &= it - 1;
            if !m[first][j].is_zero() {
                let sub = rec(m, rest & !(1 << j), memo);
                let term = &m[first][j] * &sub;
                acc = if sign { &acc - &term } else { &acc + &term };
            }
            sign = !sign;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    rec(m, full, &mut memo)
}

/// Jacobi-Trudi: S_lambda = det(h_{lambda_i - i + j}). Compositions are
/// allowed; the determinant handles straightening and vanishing.
pub fn schur(lambda: &Composition) -> SymFunc {
    let n = lambda.parts().len();
    if n == 0 {
        return SymFunc::one();
    }
    let maxh = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p - i as i64 + n as i64 - 1)
        .max()
        .unwrap();
    let hs = h_ladder(maxh.max(0) as u32);
    let fetch = |k: i64| -> SymFunc {
        if k < 0 {
            SymFunc::zero()
        } else {
            hs[k as usize].clone()
        }
    };
    let m: Vec<Vec<SymFunc>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| fetch(lambda.parts()[i] - i as i64 + j as i64))
                .collect()
        })
        .collect();
    determinant(&m)
}

/// The skew-symmetric matrix underlying Schur's Q-function: the (i,j) entry
/// for j > i is q'_{l_i} q'_{l_j} + 2 sum_{k=1}^{l_j} (-1)^k q'_{l_i+k} q'_{l_j-k}.
/// Odd-length indices are padded with one zero part.
pub fn schurq_matrix(lambda: &Composition) -> Vec<Vec<SymFunc>> {
    let mut parts: Vec<i64> = lambda.parts().to_vec();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let n = parts.len();
    let maxq = parts.iter().map(|&p| p.max(0)).sum::<i64>().max(1);
    let qp: Vec<SymFunc> = (0..=maxq).map(gen_qprime).collect();
    let fetch = |k: i64| -> SymFunc {
        if k < 0 || k > maxq {
            SymFunc::zero()
        } else {
            qp[k as usize].clone()
        }
    };
    let entry = |a: i64, b: i64| -> SymFunc {
        let mut acc = &fetch(a) * &fetch(b);
        let two = TRational::from_i64(2);
        let mut k = 1;
        while k <= b {
            let term = (&fetch(a + k) * &fetch(b - k)).scale(&two);
            acc = if k % 2 == 1 {
                &acc - &term
            } else {
                &acc + &term
            };
            k += 1;
        }
        acc
    };
    let mut m = vec![vec![SymFunc::zero(); n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let e = entry(parts[i], parts[j]);
            m[j][i] = -&e;
            m[i][j] = e;
        }
    }
    m
}

/// Schur's Q-function Q'_lambda as the Pfaffian of `schurq_matrix`.
pub fn schurq(lambda: &Composition) -> SymFunc {
    pfaffian(&schurq_matrix(lambda))
}

/// Expand the product over pairs i < j of (1 - R_ij)/(1 - tR_ij) applied to
/// the index `lambda`, with each factor truncated at `cap`. Returns the
/// surviving all-nonnegative index compositions with their t-polynomial
/// coefficients.
///
/// Factors are applied one pair at a time, grouping by the second index in
/// descending order: once group j is done, positions >= j are final, so
/// doomed intermediate states (a finalized negative part, or a negative
/// part that future factors cannot raise back) are dropped early.
pub fn raising_expand(lambda: &Composition, cap: i64) -> Vec<(Vec<i64>, TPoly)> {
    let n = lambda.parts().len();
    let mut states: HashMap<Vec<i64>, TPoly> = HashMap::new();
    states.insert(lambda.parts().to_vec(), TPoly::one());

    // factor series coefficients: 1, (t-1), (t^2-t), ..., up to cap
    let coeffs: Vec<TPoly> = (0..=cap.max(0) as u32)
        .map(|k| {
            if k == 0 {
                TPoly::one()
            } else {
                TPoly::from_pairs([
                    (k, num_rational::BigRational::from_integer(1.into())),
                    (k - 1, num_rational::BigRational::from_integer((-1).into())),
                ])
            }
        })
        .collect();

    for j in (1..n).rev() {
        // once group j starts, position j can only decrease, so powers
        // beyond the current value of part j produce a permanently negative
        // index and are dropped up front
        for i in 0..j {
            let mut next: HashMap<Vec<i64>, TPoly> = HashMap::with_capacity(states.len());
            for (idx, c) in &states {
                let top = cap.min(idx[j]).max(0) as usize;
                for (k, ck) in coeffs.iter().take(top + 1).enumerate() {
                    let mut idx2 = idx.clone();
                    idx2[i] += k as i64;
                    idx2[j] -= k as i64;
                    let add = c * ck;
                    match next.entry(idx2) {
                        std::collections::hash_map::Entry::Vacant(e) => {
                            e.insert(add);
                        }
                        std::collections::hash_map::Entry::Occupied(mut e) => {
                            let sum = e.get() + &add;
                            if sum.is_zero() {
                                e.remove();
                            } else {
                                *e.get_mut() = sum;
                            }
                        }
                    }
                }
            }
            states = next;
        }
        // positions m < j can still gain at most cap per remaining pair
        // (m, j') with m < j' < j
        states.retain(|idx, _| {
            idx.iter().enumerate().all(|(m, &v)| {
                if m >= j {
                    v >= 0
                } else {
                    let future = (j as i64 - 1 - m as i64).max(0);
                    v + cap * future >= 0
                }
            })
        });
    }

    let mut out: Vec<(Vec<i64>, TPoly)> = states
        .into_iter()
        .filter(|(idx, _)| idx.iter().all(|&v| v >= 0))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn raising_route(lambda: &Composition, cap: i64, ladder: &[SymFunc]) -> SymFunc {
    let mut acc = SymFunc::zero();
    for (idx, c) in raising_expand(lambda, cap) {
        let f = prod_from_ladder(&Composition::new(idx), ladder);
        acc = &acc + &f.scale(&TRational::from_poly(c));
    }
    acc
}

/// Q_lambda via the raising-operator expansion with an explicit per-factor
/// cap (exposed so cap robustness can be checked directly).
pub fn hl_q_raising_with_cap(lambda: &Composition, cap: i64) -> SymFunc {
    let max = lambda.weight().max(0) as u32;
    raising_route(lambda, cap, &q_ladder(max))
}

/// Q_lambda via the raising-operator expansion; the oracle route.
pub fn hl_q_raising(lambda: &Composition) -> SymFunc {
    hl_q_raising_with_cap(lambda, lambda.positive_weight())
}

/// B_lambda via the raising-operator expansion over b-products.
pub fn hl_b_raising(lambda: &Composition) -> SymFunc {
    let max = lambda.weight().max(0) as u32;
    raising_route(lambda, lambda.positive_weight(), &b_ladder(max))
}

type HlCache = Mutex<(HashMap<Composition, SymFunc>, HashMap<Composition, SymFunc>)>;

fn hl_caches() -> &'static HlCache {
    static CACHE: OnceLock<HlCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new((HashMap::new(), HashMap::new())))
}

/// The Hall-Littlewood function Q_lambda, built by applying the vertex
/// operator components right to left over the parts. Values are cached per
/// index (compositions equal up to trailing zeros share an entry, which is
/// consistent because the 0-component acts as the identity on 1-started
/// chains built right to left).
pub fn hl_q(lambda: &Composition) -> SymFunc {
    if lambda.is_empty() {
        return SymFunc::one();
    }
    if let Some(v) = hl_caches().lock().unwrap().0.get(lambda) {
        return v.clone();
    }
    let parts = lambda.parts();
    let rest = Composition::new(parts[1..].to_vec());
    let value = vertexops::jing_h(parts[0], &hl_q(&rest));
    hl_caches()
        .lock()
        .unwrap()
        .0
        .insert(lambda.clone(), value.clone());
    value
}

/// B_lambda = omega(Q_lambda).
pub fn hl_b(lambda: &Composition) -> SymFunc {
    hl_q(lambda).omega()
}

/// B_lambda by iterating the dual vertex operator; must agree with `hl_b`.
pub fn hl_b_vertex(lambda: &Composition) -> SymFunc {
    if lambda.is_empty() {
        return SymFunc::one();
    }
    if let Some(v) = hl_caches().lock().unwrap().1.get(lambda) {
        return v.clone();
    }
    let parts = lambda.parts();
    let rest = Composition::new(parts[1..].to_vec());
    let value = vertexops::jing_hbar(parts[0], &hl_b_vertex(&rest));
    hl_caches()
        .lock()
        .unwrap()
        .1
        .insert(lambda.clone(), value.clone());
    value
}

/// The skew function Q_{lambda/mu} = (Q_mu)-perp Q_lambda / c_mu(t).
pub fn skew_q(lambda: &Partition, mu: &Partition) -> SymFunc {
    let ql = hl_q(&lambda.to_composition());
    skew_q_of(&ql, mu)
}

/// Skew against an already-built Q_lambda.
pub fn skew_q_of(q_lambda: &SymFunc, mu: &Partition) -> SymFunc {
    let qm = hl_q(&mu.to_composition());
    let inv_c = TRational::from_poly(mu.c_poly()).recip().unwrap();
    adjoint_apply(&qm, q_lambda).scale(&inv_c)
}

/// B_{lambda/mu} = omega(Q_{lambda/mu}).
pub fn skew_b(lambda: &Partition, mu: &Partition) -> SymFunc {
    skew_q(lambda, mu).omega()
}

/// Expansion of `f` in the q_lambda product basis, read off by duality
/// against the monomial functions: the q_lambda coefficient is (f, m_lambda).
pub fn q_expansion(f: &SymFunc) -> Result<BTreeMap<Partition, TRational>> {
    let mut out = BTreeMap::new();
    let degree = match f.degree() {
        None => return Ok(out),
        Some(d) => d,
    };
    for d in 0..=degree {
        let comp = f.homogeneous_component(d);
        if comp.is_zero() {
            continue;
        }
        for (lam, m) in m_in_p_all(d)? {
            let c = comp.inner(&m);
            if !c.is_zero() {
                out.insert(lam, c);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tpoly::{rat, rat_frac};

    fn tr(coeffs: &[i64]) -> TRational {
        TRational::from_poly(TPoly::from_i64_coeffs(coeffs))
    }

    #[test]
    fn h_examples() {
        assert_eq!(gen_h(0), SymFunc::one());
        assert_eq!(gen_h(1), SymFunc::p(1));
        assert_eq!(gen_h(-3), SymFunc::zero());
        // h_2 = (p_1^2 + p_2)/2
        let expect = (SymFunc::p(1) * SymFunc::p(1) + SymFunc::p(2))
            .scale(&TRational::from_rational(rat_frac(1, 2)));
        assert_eq!(gen_h(2), expect);
    }

    #[test]
    fn e2_series_oracle() {
        // e_2 = (p_1^2 - p_2)/2, from inverting the exponential series;
        // cross-checked below by sigma_z lambda_{-z} = 1
        let expect = (SymFunc::p(1) * SymFunc::p(1) - SymFunc::p(2))
            .scale(&TRational::from_rational(rat_frac(1, 2)));
        assert_eq!(gen_e(2), expect);
    }

    #[test]
    fn sigma_lambda_inverse_pair() {
        // sum_{i+j=n} (-1)^j h_i e_j = 0 for n >= 1
        for n in 1..=10i64 {
            let mut acc = SymFunc::zero();
            for j in 0..=n {
                let term = &gen_h(n - j) * &gen_e(j);
                acc = if j % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            assert!(acc.is_zero(), "failed at degree {n}");
        }
    }

    #[test]
    fn alpha_beta_inverse_pair() {
        // sum_{i+j=n} (-1)^j q_i b_j = 0 for n >= 1
        for n in 1..=10i64 {
            let mut acc = SymFunc::zero();
            for j in 0..=n {
                let term = &gen_q(n - j) * &gen_b(j);
                acc = if j % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            assert!(acc.is_zero(), "failed at degree {n}");
        }
    }

    #[test]
    fn q_examples() {
        assert_eq!(gen_q(0), SymFunc::one());
        assert_eq!(gen_q(-1), SymFunc::zero());
        // q_1 = (1-t) p_1
        assert_eq!(gen_q(1), SymFunc::p(1).scale(&tr(&[1, -1])));
        // q_n at t = 0 is h_n
        for n in 0..=6i64 {
            assert_eq!(gen_q(n).specialize_t(&rat(0)).unwrap(), gen_h(n));
        }
    }

    #[test]
    fn b2_expansion() {
        // b_2 = (1-t)^2/2 p_1^2 - (1-t^2)/2 p_2
        let half = TRational::from_rational(rat_frac(1, 2));
        let expect = (SymFunc::p(1) * SymFunc::p(1))
            .scale(&(&tr(&[1, -1]) * &tr(&[1, -1])))
            .scale(&half)
            - SymFunc::p(2).scale(&tr(&[1, 0, -1])).scale(&half);
        assert_eq!(gen_b(2), expect);
    }

    #[test]
    fn omega_swaps_h_e_and_q_b() {
        for n in 0..=6i64 {
            assert_eq!(gen_h(n).omega(), gen_e(n));
            assert_eq!(gen_q(n).omega(), gen_b(n));
        }
    }

    #[test]
    fn schur_row_and_straightening() {
        assert_eq!(schur(&Composition::new([4])), gen_h(4));
        // 2x2 determinant oracle: S_(1,1) = h_1^2 - h_2 = e_2
        assert_eq!(schur(&Composition::new([1, 1])), gen_e(2));
        // proportional rows vanish
        assert!(schur(&Composition::new([1, 2])).is_zero());
        // straightening: S_(0,2) = -S_(1,1)
        assert_eq!(
            schur(&Composition::new([0, 2])),
            -schur(&Composition::new([1, 1]))
        );
    }

    #[test]
    fn schur_empty_is_one() {
        assert_eq!(schur(&Composition::empty()), SymFunc::one());
    }

    #[test]
    fn qprime_is_alpha_at_minus_one() {
        // kappa_z = sigma_z lambda_z agrees with alpha_z at t = -1
        for n in 0..=7i64 {
            assert_eq!(gen_q(n).specialize_t(&rat(-1)).unwrap(), gen_qprime(n));
        }
    }

    #[test]
    fn schurq_small() {
        // 2x2 Pfaffian is the (1,2) entry: Q'_(n) = q'_n
        for n in 1..=5i64 {
            assert_eq!(schurq(&Composition::new([n])), gen_qprime(n));
        }
        // entry formula with one correction term: Q'_(2,1) = q'_2 q'_1 - 2 q'_3
        let expect =
            &(&gen_qprime(2) * &gen_qprime(1)) - &gen_qprime(3).scale(&TRational::from_i64(2));
        assert_eq!(schurq(&Composition::new([2, 1])), expect);
    }

    #[test]
    fn pfaffian_squares_to_determinant() {
        for lam in [
            Composition::new([2, 1]),
            Composition::new([3, 1]),
            Composition::new([3, 2, 1]),
            Composition::new([4, 2]),
        ] {
            let m = schurq_matrix(&lam);
            let pf = pfaffian(&m);
            assert_eq!(&pf * &pf, determinant(&m), "failed for {lam}");
        }
    }

    #[test]
    fn raising_oracle_for_one_one() {
        // (1-R)/(1-tR) q_(1,1) = q_(1,1) + (t-1) q_(2,0); the q_(3,-1) term
        // and beyond vanish
        let terms = raising_expand(&Composition::new([1, 1]), 2);
        assert_eq!(
            terms,
            vec![
                (vec![1, 1], TPoly::one()),
                (vec![2, 0], TPoly::from_i64_coeffs(&[-1, 1])),
            ]
        );
    }

    #[test]
    fn raising_route_examples() {
        assert_eq!(hl_q_raising(&Composition::new([2])), gen_q(2));
        let expect = &(&gen_q(1) * &gen_q(1)) + &gen_q(2).scale(&tr(&[-1, 1]));
        assert_eq!(hl_q_raising(&Composition::new([1, 1])), expect);
    }

    #[test]
    fn one_row_generators_on_a_single_letter() {
        // q_m[z] = (1-t) z^m and b_m[z] = (-t)^(m-1) (1-t) z^m for m > 0
        use crate::plethysm::{plethysm_alphabet, AlphabetExpr};
        for m in 1..=6i64 {
            let q = plethysm_alphabet(&gen_q(m), &AlphabetExpr::pure_z());
            assert_eq!(q.coeff(m), SymFunc::constant(tr(&[1, -1])));
            assert_eq!(q.min_exp(), Some(m));
            let b = plethysm_alphabet(&gen_b(m), &AlphabetExpr::pure_z());
            let sign = if (m - 1) % 2 == 0 { 1 } else { -1 };
            let want =
                &tr(&[1, -1]) * &TRational::from_poly(TPoly::monomial((m - 1) as u32, rat(sign)));
            assert_eq!(b.coeff(m), SymFunc::constant(want));
        }
    }

    #[test]
    fn b2_in_one_variable() {
        // only the m_(2) term survives: b_2 -> (-t)(1-t) x_1^2
        use crate::multipoly::specialize_vars;
        let sp = specialize_vars(&gen_b(2), 1);
        assert_eq!(sp.num_terms(), 1);
        assert_eq!(sp.coeff(&[2]), tr(&[0, -1, 1])); // t^2 - t = (-t)(1-t)
    }

    #[test]
    fn q_expansion_reads_off_by_duality() {
        // Q_(1,1) = q_(1,1) + (t-1) q_(2)
        let f = hl_q_raising(&Composition::new([1, 1]));
        let exp = q_expansion(&f).unwrap();
        assert_eq!(exp.get(&Partition::new([1, 1])), Some(&TRational::one()));
        assert_eq!(exp.get(&Partition::new([2])), Some(&tr(&[-1, 1])));
        assert_eq!(exp.len(), 2);
    }
}
