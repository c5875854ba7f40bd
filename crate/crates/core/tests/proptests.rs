//! Randomized invariants for the exact-arithmetic layer and the ring of
//! symmetric functions.

use proptest::prelude::*;

use symfunc::partition::Partition;
use symfunc::symfunc::{adjoint_apply, SymFunc};
use symfunc::tpoly::{rat, TPoly};
use symfunc::trational::TRational;

fn arb_tpoly(max_deg: u32) -> impl Strategy<Value = TPoly> {
    prop::collection::vec((0..=max_deg, -6i64..=6), 0..5)
        .prop_map(|pairs| TPoly::from_pairs(pairs.into_iter().map(|(e, c)| (e, rat(c)))))
}

fn arb_nonzero_tpoly(max_deg: u32) -> impl Strategy<Value = TPoly> {
    arb_tpoly(max_deg).prop_map(|p| if p.is_zero() { TPoly::one() } else { p })
}

fn arb_trational() -> impl Strategy<Value = TRational> {
    (arb_tpoly(6), arb_nonzero_tpoly(6)).prop_map(|(n, d)| TRational::new(n, d).unwrap())
}

fn arb_nonzero_trational() -> impl Strategy<Value = TRational> {
    (arb_nonzero_tpoly(6), arb_nonzero_tpoly(6)).prop_map(|(n, d)| TRational::new(n, d).unwrap())
}

fn arb_partition(max_weight: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_weight, 0..4).prop_map(move |mut parts| {
        // trim to the weight budget
        let mut total = 0;
        parts.retain(|&p| {
            total += p;
            total <= max_weight
        });
        Partition::new(parts)
    })
}

fn arb_symfunc(max_weight: u32) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((arb_partition(max_weight), -4i64..=4), 1..5).prop_map(|terms| {
        SymFunc::from_terms(
            terms
                .into_iter()
                .map(|(idx, c)| (idx, TRational::from_i64(c))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // canonical form is a congruence: the same value built along different
    // association orders reduces to the identical representation
    #[test]
    fn canonical_form_is_route_independent(
        a in arb_trational(),
        b in arb_trational(),
        c in arb_trational(),
    ) {
        let left = &(&a + &b) * &c;
        let right = &(&a * &c) + &(&b * &c);
        prop_assert_eq!(left, right);
        let assoc1 = &(&a * &b) * &c;
        let assoc2 = &a * &(&b * &c);
        prop_assert_eq!(assoc1, assoc2);
    }

    // (f * g) / g = f for nonzero g
    #[test]
    fn multiply_then_divide_round_trips(
        f in arb_trational(),
        g in arb_nonzero_trational(),
    ) {
        let back = (&f * &g).try_div(&g).unwrap();
        prop_assert_eq!(back, f);
    }

    // the twist is multiplicative: twist(f g, e1 + e2) = twist(f, e1) twist(g, e2)
    #[test]
    fn hall_twist_is_multiplicative(
        f in arb_trational(),
        g in arb_trational(),
        e1 in -4i64..=4,
        e2 in -4i64..=4,
    ) {
        let lhs = (&f * &g).hall_twist(e1 + e2);
        let rhs = &f.hall_twist(e1) * &g.hall_twist(e2);
        prop_assert_eq!(lhs, rhs);
    }

    // evaluation is a ring homomorphism wherever it is defined
    #[test]
    fn eval_commutes_with_arithmetic(
        f in arb_trational(),
        g in arb_trational(),
        t0 in -3i64..=3,
    ) {
        let t0 = rat(t0);
        if let (Ok(a), Ok(b)) = (f.eval_at(&t0), g.eval_at(&t0)) {
            let sum = (&f + &g).eval_at(&t0).unwrap();
            let prod = (&f * &g).eval_at(&t0).unwrap();
            prop_assert_eq!(sum, &a + &b);
            prop_assert_eq!(prod, &a * &b);
        }
    }

    // omega is an involution and an isometry
    #[test]
    fn omega_involution_and_isometry(
        f in arb_symfunc(8),
        g in arb_symfunc(6),
    ) {
        prop_assert_eq!(f.omega().omega(), f.clone());
        prop_assert_eq!(f.omega().inner(&g.omega()), f.inner(&g));
    }

    // the defining adjoint property (F-perp G, H) = (G, F H)
    #[test]
    fn adjoint_defining_property(
        f in arb_symfunc(3),
        g in arb_symfunc(5),
        h in arb_symfunc(5),
    ) {
        prop_assert_eq!(adjoint_apply(&f, &g).inner(&h), g.inner(&(&f * &h)));
    }

    // multiplication in the p-basis is index concatenation, hence commutative
    // and associative
    #[test]
    fn symfunc_ring_axioms(
        f in arb_symfunc(5),
        g in arb_symfunc(5),
        h in arb_symfunc(5),
    ) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }
}
