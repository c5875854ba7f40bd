//! Deformed Bernstein operators: the row-creation operator for the
//! Hall-Littlewood Q-family, its dual for the B-family, the classical
//! Bernstein operator with its column form, and the generic composer for
//! the remaining mult/adjoint series combinations.
//!
//! Every operator here is the finite sum
//!     sum_{i >= 0} (-1)^i u_{n+i} v_i-perp
//! where (u, v) is a pair of one-row generator families; the sum is finite
//! because v_i-perp kills anything of degree below i, and u_m = 0 for m < 0
//! truncates it from below.

use std::sync::Arc;

use crate::bases::{b_ladder, e_ladder, h_ladder, q_ladder};
use crate::error::{Error, Result};
use crate::partition::Composition;
use crate::plethysm::{plethysm_alphabet, AlphabetExpr, LaurentZ};
use crate::symfunc::{adjoint_apply, adjoint_apply_classical, SymFunc};

/// Which generating series supplies a factor of a vertex operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// the q_n series
    Alpha,
    /// the b_n series
    Beta,
}

/// A vertex operator shape: the multiplication-side series and the series
/// whose adjoint components appear. (Alpha, Beta) is the Q-row operator,
/// (Beta, Alpha) its dual; the other two shapes build the unnamed families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexSpec {
    pub mult: SeriesKind,
    pub adjoint: SeriesKind,
}

impl VertexSpec {
    pub fn jing() -> Self {
        VertexSpec {
            mult: SeriesKind::Alpha,
            adjoint: SeriesKind::Beta,
        }
    }

    pub fn jing_dual() -> Self {
        VertexSpec {
            mult: SeriesKind::Beta,
            adjoint: SeriesKind::Alpha,
        }
    }
}

fn ladder_for(kind: SeriesKind, max: i64) -> Arc<Vec<SymFunc>> {
    match kind {
        SeriesKind::Alpha => q_ladder(max.max(0) as u32),
        SeriesKind::Beta => b_ladder(max.max(0) as u32),
    }
}

fn creation_sum(
    mult: &[SymFunc],
    adj: &[SymFunc],
    n: i64,
    f: &SymFunc,
    perp: fn(&SymFunc, &SymFunc) -> SymFunc,
) -> SymFunc {
    let deg = match f.degree() {
        None => return SymFunc::zero(),
        Some(d) => d as i64,
    };
    let mut acc = SymFunc::zero();
    for i in 0..=deg {
        if n + i < 0 {
            continue;
        }
        let lowered = perp(&adj[i as usize], f);
        if lowered.is_zero() {
            continue;
        }
        let term = &mult[(n + i) as usize] * &lowered;
        acc = if i % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// The homogeneous vertex component for an arbitrary shape:
/// sum_i (-1)^i u_{n+i} v_i-perp applied to `f`.
pub fn generic_vertex(spec: VertexSpec, n: i64, f: &SymFunc) -> SymFunc {
    let deg = f.degree().map(|d| d as i64).unwrap_or(0);
    let mult = ladder_for(spec.mult, n + deg);
    let adj = ladder_for(spec.adjoint, deg);
    creation_sum(&mult, &adj, n, f, adjoint_apply)
}

/// Apply the components of a vertex shape right to left over the parts,
/// starting from 1.
pub fn iterate(spec: VertexSpec, lambda: &Composition) -> SymFunc {
    let mut f = SymFunc::one();
    for &part in lambda.parts().iter().rev() {
        f = generic_vertex(spec, part, &f);
    }
    f
}

/// The row-creation operator for the Q-family:
/// sum_i (-1)^i q_{n+i} b_i-perp.
pub fn jing_h(n: i64, f: &SymFunc) -> SymFunc {
    generic_vertex(VertexSpec::jing(), n, f)
}

/// The dual operator, creating rows for the B-family:
/// sum_i (-1)^i b_{n+i} q_i-perp.
pub fn jing_hbar(n: i64, f: &SymFunc) -> SymFunc {
    generic_vertex(VertexSpec::jing_dual(), n, f)
}

/// The classical Bernstein operator sum_i (-1)^i h_{n+i} e_i-perp, which
/// appends a row to a Schur index.
pub fn bernstein(n: i64, f: &SymFunc) -> SymFunc {
    let deg = f.degree().map(|d| d as i64).unwrap_or(0);
    let hs = h_ladder((n + deg).max(0) as u32);
    let es = e_ladder(deg.max(0) as u32);
    creation_sum(&hs, &es, n, f, adjoint_apply_classical)
}

/// The column form sum_i (-1)^i e_{n+i} h_i-perp, which appends a column
/// of length n when n >= len(lambda).
pub fn bernstein_col(n: i64, f: &SymFunc) -> SymFunc {
    let deg = f.degree().map(|d| d as i64).unwrap_or(0);
    let es = e_ladder((n + deg).max(0) as u32);
    let hs = h_ladder(deg.max(0) as u32);
    creation_sum(&es, &hs, n, f, adjoint_apply_classical)
}

/// The full Laurent expansion of a vertex operator applied to `f`, over an
/// explicit window of z-exponents.
///
/// The adjoint factor is computed by plethysm: the Beta adjoint acts as
/// F[X - 1/z], and the Alpha adjoint is its conjugate under omega. The
/// multiplication side is the corresponding generating series, taken out to
/// the degree the window requires, so every reported component is exact.
pub fn vertex_series(
    spec: VertexSpec,
    f: &SymFunc,
    window_lo: i64,
    window_hi: i64,
) -> Result<LaurentZ> {
    if window_lo > window_hi {
        return Err(Error::WindowTooSmall {
            lo: window_lo,
            hi: window_hi,
            n: window_lo,
        });
    }
    let adj_factor = match spec.adjoint {
        SeriesKind::Beta => plethysm_alphabet(f, &AlphabetExpr::x_minus_inv_z()),
        SeriesKind::Alpha => {
            plethysm_alphabet(&f.omega(), &AlphabetExpr::x_minus_inv_z()).map_coeffs(|g| g.omega())
        }
    };
    let deg = f.degree().map(|d| d as i64).unwrap_or(0);
    let mult = ladder_for(spec.mult, window_hi + deg);

    let mut out = LaurentZ::zero();
    for n in window_lo..=window_hi {
        let mut acc = SymFunc::zero();
        for (&e, g) in adj_factor.iter() {
            let m = n - e;
            if m < 0 || m > window_hi + deg {
                continue;
            }
            acc = &acc + &(&mult[m as usize] * g);
        }
        out.add_coeff(n, acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::{gen_b, gen_h, gen_q, hl_q_raising};
    use crate::partition::Partition;
    use crate::tpoly::TPoly;
    use crate::trational::TRational;

    #[test]
    fn creation_on_constant_gives_generators() {
        for n in 0..=5i64 {
            assert_eq!(jing_h(n, &SymFunc::one()), gen_q(n));
            assert_eq!(jing_hbar(n, &SymFunc::one()), gen_b(n));
            assert_eq!(bernstein(n, &SymFunc::one()), gen_h(n));
        }
        assert!(jing_h(-1, &SymFunc::one()).is_zero());
    }

    #[test]
    fn jing_matches_raising_oracle_on_small_rows() {
        // H_1(q_1) should equal the raising expansion of (1,1)
        let q1 = gen_q(1);
        assert_eq!(jing_h(1, &q1), hl_q_raising(&Composition::new([1, 1])));
        // H_2 applied to Q_(1) gives Q_(2,1)
        assert_eq!(jing_h(2, &q1), hl_q_raising(&Composition::new([2, 1])));
        // composition index: H_1 applied to Q_(2)
        assert_eq!(
            jing_h(1, &gen_q(2)),
            hl_q_raising(&Composition::new([1, 2]))
        );
    }

    #[test]
    fn dual_operator_is_omega_conjugate() {
        let one_minus_t = TRational::from_poly(TPoly::from_i64_coeffs(&[1, -1]));
        let samples = [
            SymFunc::one(),
            gen_q(2),
            &gen_q(1) * &gen_q(2),
            SymFunc::term(Partition::new([2, 1]), one_minus_t),
        ];
        for f in &samples {
            for n in -1..=3i64 {
                assert_eq!(jing_hbar(n, f), jing_h(n, &f.omega()).omega(), "n = {n}");
            }
        }
    }

    #[test]
    fn generic_matches_named_shapes() {
        let f = &gen_q(2) * &gen_q(1);
        for n in -2..=3i64 {
            assert_eq!(generic_vertex(VertexSpec::jing(), n, &f), jing_h(n, &f));
            assert_eq!(
                generic_vertex(VertexSpec::jing_dual(), n, &f),
                jing_hbar(n, &f)
            );
        }
        // the Beta/Beta shape on the constant: the adjoint side annihilates
        // 1, leaving b_n
        let bb = VertexSpec {
            mult: SeriesKind::Beta,
            adjoint: SeriesKind::Beta,
        };
        for n in 0..=4i64 {
            assert_eq!(generic_vertex(bb, n, &SymFunc::one()), gen_b(n));
        }
    }

    #[test]
    fn series_on_constant_reproduces_generators() {
        let s = vertex_series(VertexSpec::jing(), &SymFunc::one(), -2, 4).unwrap();
        for n in -2..=4i64 {
            assert_eq!(s.coeff(n), gen_q(n));
        }
    }

    #[test]
    fn series_components_match_direct_sums() {
        let f = &gen_q(2) * &gen_q(1);
        let s = vertex_series(VertexSpec::jing(), &f, -3, 4).unwrap();
        let sbar = vertex_series(VertexSpec::jing_dual(), &f, -3, 4).unwrap();
        for n in -3..=4i64 {
            assert_eq!(s.coeff(n), jing_h(n, &f), "H component {n}");
            assert_eq!(sbar.coeff(n), jing_hbar(n, &f), "dual component {n}");
        }
    }

    #[test]
    fn bad_window_is_rejected() {
        assert!(vertex_series(VertexSpec::jing(), &SymFunc::one(), 3, 1).is_err());
    }

    #[test]
    fn iterate_builds_chains() {
        use crate::bases::hl_q;
        for lam in [
            Composition::new([2, 1]),
            Composition::new([3, 1, 1]),
            Composition::new([1, 2]),
        ] {
            assert_eq!(iterate(VertexSpec::jing(), &lam), hl_q(&lam));
        }
        let bb = VertexSpec {
            mult: SeriesKind::Beta,
            adjoint: SeriesKind::Beta,
        };
        assert_eq!(iterate(bb, &Composition::new([2])), gen_b(2));
        // the unnamed families are computed but carry no asserted structure;
        // they at least live in the right graded component
        let f = iterate(bb, &Composition::new([2, 1]));
        assert!(f.is_homogeneous_of(3));
    }

    #[test]
    fn operators_degenerate_at_t_zero() {
        use crate::bases::schur;
        use crate::tpoly::rat;
        // with t = 0 the row operator becomes the Bernstein operator and
        // the dual one its column form, on any t-free input
        for lam in [
            Composition::empty(),
            Composition::new([1]),
            Composition::new([2, 1]),
            Composition::new([2, 2]),
        ] {
            let s = schur(&lam);
            if s.is_zero() {
                continue;
            }
            for n in 0..=4i64 {
                assert_eq!(
                    jing_h(n, &s).specialize_t(&rat(0)).unwrap(),
                    bernstein(n, &s),
                    "row degeneration at n = {n}, {lam}"
                );
                let s_conj = s.omega();
                assert_eq!(
                    jing_hbar(n, &s_conj).specialize_t(&rat(0)).unwrap(),
                    bernstein_col(n, &s_conj),
                    "column degeneration at n = {n}, {lam}"
                );
            }
        }
    }
}
