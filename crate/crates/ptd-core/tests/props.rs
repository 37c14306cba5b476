//! Randomized invariants over the public API.
//!
//! These properties exercise the library on arbitrary subsets rather than
//! the curated cases of the unit tests: the forcing closure behaves as a
//! closure operator, the noncrossing complement is antitone and stabilizes
//! after one application on closed sets, decomposition round trips on
//! random closed sets, and the hammock walk agrees with the shifted
//! crossing rule well past the exhaustively checked ranks. A final
//! negative control weakens one forcing condition and confirms that the
//! equivalence sweep would notice.

use proptest::prelude::*;
use ptd_core::cluster_cat::{hom_nonzero, hom_nonzero_hammock, CategoryContext, IndCoord};
use ptd_core::enumeration::classify_kind;
use ptd_core::enumeration::{decompose, recompose};
use ptd_core::geometry::{ar_shift, nc, rotate180, ArcSet, PolygonContext};
use ptd_core::ptolemy::{
    is_ptolemy_d, is_torsion_arcset, pt_violations, ptolemy_closure, PtCondition,
};

/// A rank together with two independent subset masks over its universe.
fn rank_and_masks(max_n: usize) -> impl Strategy<Value = (usize, u64, u64)> {
    (2usize..=max_n).prop_flat_map(|n| {
        let full = (1u64 << (n * n)) - 1;
        (
            Just(n),
            any::<u64>().prop_map(move |m| m & full),
            any::<u64>().prop_map(move |m| m & full),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn closure_is_extensive_monotone_idempotent((n, m1, m2) in rank_and_masks(5)) {
        let ctx = PolygonContext::new(n);
        let x = ArcSet::from_mask(&ctx, m1 & m2);
        let y = ArcSet::from_mask(&ctx, m1);
        let cx = ptolemy_closure(&ctx, &x);
        let cy = ptolemy_closure(&ctx, &y);
        prop_assert!(x.is_subset(&cx));
        prop_assert!(cx.is_subset(&ptolemy_closure(&ctx, &ArcSet::from_mask(&ctx, m1 | m2))));
        prop_assert!(cx.is_subset(&cy) || !x.is_subset(&y));
        prop_assert_eq!(ptolemy_closure(&ctx, &cx), cx.clone());
        prop_assert_eq!(ptolemy_closure(&ctx, &cy), cy);
    }

    #[test]
    fn closure_lands_in_the_family_and_tests_agree((n, m1, _m2) in rank_and_masks(5)) {
        let ctx = PolygonContext::new(n);
        let x = ArcSet::from_mask(&ctx, m1);
        prop_assert_eq!(is_ptolemy_d(&ctx, &x), is_torsion_arcset(&ctx, &x));
        let cl = ptolemy_closure(&ctx, &x);
        prop_assert!(is_ptolemy_d(&ctx, &cl));
        prop_assert!(is_torsion_arcset(&ctx, &cl));
    }

    #[test]
    fn complement_is_antitone_and_stabilizes((n, m1, m2) in rank_and_masks(5)) {
        let ctx = PolygonContext::new(n);
        let small = ArcSet::from_mask(&ctx, m1 & m2);
        let large = ArcSet::from_mask(&ctx, m1);
        prop_assert!(nc(&ctx, &large).is_subset(&nc(&ctx, &small)));
        let once = nc(&ctx, &large);
        let thrice = nc(&ctx, &nc(&ctx, &once));
        prop_assert_eq!(once, thrice);
    }

    #[test]
    fn complement_fixes_exactly_the_closed_sets((n, m1, _m2) in rank_and_masks(5)) {
        let ctx = PolygonContext::new(n);
        let x = ArcSet::from_mask(&ctx, m1);
        let fixed = nc(&ctx, &nc(&ctx, &x)) == x;
        prop_assert_eq!(fixed, is_ptolemy_d(&ctx, &x));
    }

    #[test]
    fn shift_periodicity_and_half_turn((n, m1, _m2) in rank_and_masks(6)) {
        let ctx = PolygonContext::new(n);
        let idx = (m1 as usize) % ctx.object_count();
        let a = ctx.object(idx);
        prop_assert_eq!(ar_shift(&ctx, a, 2 * n as i64), a);
        prop_assert_eq!(ar_shift(&ctx, ar_shift(&ctx, a, 1), -1), a);
        prop_assert_eq!(rotate180(&ctx, rotate180(&ctx, a)), a);
    }

    #[test]
    fn decomposition_round_trips_on_random_closed_sets((n, m1, m2) in rank_and_masks(5)) {
        let ctx = PolygonContext::new(n);
        let cl = ptolemy_closure(&ctx, &ArcSet::from_mask(&ctx, m1 & m2));
        let d = decompose(&ctx, &cl).expect("closed sets decompose");
        prop_assert_eq!(recompose(&ctx, &d).expect("own output recomposes"), cl);
    }

    #[test]
    fn complement_preserves_the_kind((n, m1, _m2) in rank_and_masks(5)) {
        let ctx = PolygonContext::new(n);
        let cl = ptolemy_closure(&ctx, &ArcSet::from_mask(&ctx, m1));
        let k = classify_kind(&ctx, &cl).expect("closed sets classify");
        let nk = classify_kind(&ctx, &nc(&ctx, &cl)).expect("complement classifies");
        prop_assert_eq!(k, nk);
    }

    #[test]
    fn hammock_walk_agrees_beyond_the_checked_ranks(
        n in 4usize..=10,
        pick in any::<(u64, u64)>(),
    ) {
        let cctx = CategoryContext::new(n);
        let coords = cctx.coords();
        let x = coords[(pick.0 as usize) % coords.len()];
        let y = coords[(pick.1 as usize) % coords.len()];
        let base_is_exceptional = matches!(x, IndCoord::Exc { .. });
        match hom_nonzero_hammock(&cctx, x, y) {
            Ok(v) => {
                prop_assert!(!base_is_exceptional);
                prop_assert_eq!(v, hom_nonzero(&cctx, x, y));
            }
            Err(_) => prop_assert!(base_is_exceptional),
        }
    }
}

/// Negative control: dropping one forcing condition from the violation
/// scan must disagree with the fixed-point test somewhere, otherwise the
/// equivalence sweep in the acceptance suite would be vacuous.
#[test]
fn weakened_forcing_is_detected_by_the_equivalence_sweep() {
    let ctx = PolygonContext::new(3);
    let mut disagreements = 0u64;
    for mask in 0..1u64 << ctx.object_count() {
        let x = ArcSet::from_mask(&ctx, mask);
        let weak_ok = pt_violations(&ctx, &x)
            .iter()
            .all(|v| v.condition == PtCondition::Pt3);
        if weak_ok != is_torsion_arcset(&ctx, &x) {
            disagreements += 1;
        }
    }
    assert!(
        disagreements > 0,
        "ignoring the third condition should break the equivalence"
    );
}
