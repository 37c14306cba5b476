//! Cross-checks between the independent routes through the library.
//!
//! Every numbered criterion compares two computations that share as little
//! code as possible: direct sweeps against generating functions, the arc
//! crossing rule against the categorical morphism test, region constructions
//! against series coefficients. Each check records what was expected and
//! what actually happened, so a report stays meaningful when something
//! breaks. Diagnostic checks record values without judging them.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cluster_cat::{
    hom_nonzero, hom_nonzero_hammock, is_torsion_categorical_arcset, CategoryContext, IndCoord,
};
use crate::enumeration::{
    classify_kind, count_central_regions, count_type_a, count_type_d, count_words_type_ii,
    decompose, enumerate_ptolemy, recompose, DStrategy, Kind,
};
use crate::geometry::{nc, ArcSet, PolygonContext};
use crate::ptolemy::{is_ptolemy_d, is_torsion_arcset};
use crate::series::{
    algebraic_residual, c_series, c_total, p_d, pa_residual, solve_pa, solve_w_system,
    CubicVariant, TruncSeries,
};

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Recorded for inspection; never counted as a failure.
    Diagnostic,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
            Status::Diagnostic => write!(f, "diagnostic"),
        }
    }
}

/// One comparison with its expected and observed values.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
}

fn check<T: PartialEq + std::fmt::Debug>(name: impl Into<String>, expected: T, actual: T) -> Check {
    let status = if expected == actual { Status::Pass } else { Status::Fail };
    Check {
        name: name.into(),
        expected: format!("{expected:?}"),
        actual: format!("{actual:?}"),
        status,
    }
}

fn diagnostic(name: impl Into<String>, value: impl std::fmt::Debug) -> Check {
    Check {
        name: name.into(),
        expected: "recorded for inspection".into(),
        actual: format!("{value:?}"),
        status: Status::Diagnostic,
    }
}

/// Run one numbered criterion (1 through 12).
pub fn run_criterion(index: usize) -> Vec<Check> {
    match index {
        1 => brute_force_counts(),
        2 => genfunc_counts(),
        3 => forcing_vs_fixed_point(),
        4 => nc_stability(),
        5 => categorical_vs_arc_torsion(),
        6 => hammock_vs_hom(),
        7 => type_a_counts_vs_series(),
        8 => word_counts_vs_series(),
        9 => region_counts_vs_series(),
        10 => decomposition_round_trip(),
        11 => series_identities(),
        12 => cubic_residuals(),
        _ => panic!("criteria are numbered 1 through 12"),
    }
}

/// Everything, in criterion order.
pub fn full_checks() -> Vec<Check> {
    (1..=12).flat_map(run_criterion).collect()
}

/// A fast subset: small sweeps and the series identities.
pub fn quick_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for (n, want) in [(1u64, 1u64), (2, 16), (3, 82)] {
        out.push(check(
            format!("brute count n={n}"),
            want,
            count_type_d(n as usize, DStrategy::Exhaustive).unwrap(),
        ));
    }
    for n in 2..=3 {
        out.push(equivalence_sweep(n));
    }
    out.push(known_pd_coefficients(10));
    out.push(compact_c_total_check(20));
    out.push(check(
        "type a series solves its own equation",
        true,
        pa_residual(&solve_pa(64)).is_zero(),
    ));
    out
}

fn brute_force_counts() -> Vec<Check> {
    let mut out = Vec::new();
    for (n, want) in [(1, 1u64), (2, 16), (3, 82), (4, 500), (5, 3084)] {
        out.push(check(
            format!("brute count n={n}"),
            want,
            count_type_d(n, DStrategy::Exhaustive).unwrap(),
        ));
    }
    out
}

fn known_pd_coefficients(order: usize) -> Check {
    let pd = p_d(order);
    let want: Vec<BigInt> =
        [0i64, 1, 16, 82, 500, 3084, 19400].iter().map(|&c| BigInt::from(c)).collect();
    check(
        format!("series counts through n=6 at order {order}"),
        want,
        pd.coeffs()[..=6].to_vec(),
    )
}

fn genfunc_counts() -> Vec<Check> {
    vec![known_pd_coefficients(10)]
}

fn equivalence_sweep(n: usize) -> Check {
    let ctx = PolygonContext::new(n);
    let total = 1u64 << ctx.object_count();
    let mismatches = (0..total)
        .filter(|&m| {
            let x = ArcSet::from_mask(&ctx, m);
            is_ptolemy_d(&ctx, &x) != is_torsion_arcset(&ctx, &x)
        })
        .count();
    check(format!("forcing vs fixed point, all subsets at n={n}"), 0, mismatches)
}

fn forcing_vs_fixed_point() -> Vec<Check> {
    (2..=4).map(equivalence_sweep).collect()
}

fn nc_stability() -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=4 {
        let ctx = PolygonContext::new(n);
        let mut bad_nc = 0u64;
        let mut bad_fix = 0u64;
        for x in enumerate_ptolemy(&ctx) {
            let complement = nc(&ctx, &x);
            if !is_ptolemy_d(&ctx, &complement) {
                bad_nc += 1;
            }
            if nc(&ctx, &complement) != x {
                bad_fix += 1;
            }
        }
        out.push(check(format!("nc image stays Ptolemy at n={n}"), 0, bad_nc));
        out.push(check(format!("nc is an involution on diagrams at n={n}"), 0, bad_fix));
    }
    out
}

fn categorical_vs_arc_torsion() -> Vec<Check> {
    let mut out = Vec::new();
    {
        let cctx = CategoryContext::new(4);
        let ctx = cctx.polygon();
        let total = 1u64 << ctx.object_count();
        let mismatches = (0..total)
            .filter(|&m| {
                let x = ArcSet::from_mask(ctx, m);
                is_torsion_categorical_arcset(&cctx, &x) != is_torsion_arcset(ctx, &x)
            })
            .count();
        out.push(check("categorical vs arc torsion, all subsets at n=4", 0, mismatches));
    }
    for n in [5usize, 6] {
        let cctx = CategoryContext::new(n);
        let ctx = cctx.polygon();
        let count = ctx.object_count();
        let full = (1u64 << count) - 1;
        let mut rng = ChaCha8Rng::seed_from_u64(0x70746f6c656d79 + n as u64);
        let samples = 100_000;
        let mismatches = (0..samples)
            .filter(|_| {
                let x = ArcSet::from_mask(ctx, rng.gen::<u64>() & full);
                is_torsion_categorical_arcset(&cctx, &x) != is_torsion_arcset(ctx, &x)
            })
            .count();
        out.push(check(
            format!("categorical vs arc torsion, {samples} samples at n={n}"),
            0,
            mismatches,
        ));
    }
    out
}

fn hammock_vs_hom() -> Vec<Check> {
    let mut out = Vec::new();
    for n in 4..=8 {
        let cctx = CategoryContext::new(n);
        let mut mismatches = 0u64;
        let mut pairs = 0u64;
        for &x in cctx.coords() {
            if !matches!(x, IndCoord::NonExc { .. }) {
                continue;
            }
            for &y in cctx.coords() {
                pairs += 1;
                let direct = hom_nonzero(&cctx, x, y);
                let counted = hom_nonzero_hammock(&cctx, x, y)
                    .expect("non-exceptional bases are supported");
                if direct != counted {
                    mismatches += 1;
                }
            }
        }
        out.push(check(
            format!("hammock vs shifted crossing over {pairs} pairs at n={n}"),
            0,
            mismatches,
        ));
    }
    out
}

fn type_a_counts_vs_series() -> Vec<Check> {
    let pa = solve_pa(8);
    let mut out = Vec::new();
    let counts: Vec<BigInt> =
        (2..=8).map(|m| BigInt::from(count_type_a(m).unwrap())).collect();
    let coeffs: Vec<BigInt> = (2..=8).map(|m| pa.coeff(m - 1).clone()).collect();
    out.push(check("type a sweep matches the series for m=2..8", coeffs, counts));
    out.push(check(
        "type a series solves its own equation to order 64",
        true,
        pa_residual(&solve_pa(64)).is_zero(),
    ));
    out
}

fn word_counts_vs_series() -> Vec<Check> {
    let (wo, _, wp, w) = solve_w_system(20);
    let mut out = Vec::new();
    let counts: Vec<BigInt> =
        (0..=12).map(|len| BigInt::from(count_words_type_ii(len))).collect();
    let coeffs: Vec<BigInt> = (0..=12).map(|len| w.coeff(len).clone()).collect();
    out.push(check("word sweep matches the series for lengths 0..12", coeffs, counts));

    let wp_closed = TruncSeries::rational(20, &[1, 1], &[1, -2, -1]);
    let wo_closed = TruncSeries::rational(20, &[0, 1], &[1, -2, -1]);
    let w_closed = TruncSeries::rational(20, &[0, 0, 1, 3, 1, -1], &[1, -4, 4, 0, -1]);
    out.push(check("rooted word series closed form", wp_closed.coeffs().to_vec(), wp.coeffs().to_vec()));
    out.push(check("open word series closed form", wo_closed.coeffs().to_vec(), wo.coeffs().to_vec()));
    out.push(check("word series closed form", w_closed.coeffs().to_vec(), w.coeffs().to_vec()));
    out
}

fn region_counts_vs_series() -> Vec<Check> {
    let mut out = Vec::new();
    for kind in [Kind::I, Kind::II, Kind::III] {
        let series = c_series(kind, 8);
        let expected: Vec<BigInt> = (0..=8).map(|k| series.coeff(k).clone()).collect();
        let actual: Vec<BigInt> =
            (0..=8).map(|k| BigInt::from(count_central_regions(k, kind))).collect();
        out.push(check(
            format!("kind {kind} region constructions for k=0..8"),
            expected,
            actual,
        ));
    }
    out
}

fn decomposition_round_trip() -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=4 {
        let ctx = PolygonContext::new(n);
        let all = enumerate_ptolemy(&ctx);
        let mut bad_round_trip = 0u64;
        let mut bad_kind = 0u64;
        let mut per_kind = [0u64; 3];
        for x in &all {
            // decompose itself asserts that bounding edges are uncrossed and
            // that the region kind matches the diagram kind.
            let d = decompose(&ctx, x).expect("enumerated diagrams decompose");
            if recompose(&ctx, &d).expect("own output glues back") != *x {
                bad_round_trip += 1;
            }
            let kind = classify_kind(&ctx, x).expect("enumerated diagrams classify");
            per_kind[match kind {
                Kind::I => 0,
                Kind::II => 1,
                Kind::III => 2,
            }] += 1;
            if classify_kind(&ctx, &nc(&ctx, x)) != Ok(kind) {
                bad_kind += 1;
            }
        }
        out.push(check(
            format!("decompose then recompose is the identity at n={n}"),
            0,
            bad_round_trip,
        ));
        out.push(check(
            format!("kinds partition the {} diagrams at n={n}", all.len()),
            all.len() as u64,
            per_kind.iter().sum::<u64>(),
        ));
        out.push(check(format!("nc preserves the kind at n={n}"), 0, bad_kind));
        out.push(check(
            format!("glued histogram rebuilds the count at n={n}"),
            count_type_d(n, DStrategy::Exhaustive).unwrap(),
            histogram_total(n),
        ));
    }
    out
}

/// Rebuild the rank `n` count from region counts and type A counts: regions
/// with `2k+2` bounding edges, glued diagram sizes summing over each
/// composition of `n`, and a marked-edge factor on the first sector.
fn histogram_total(n: usize) -> u64 {
    let a: Vec<u64> =
        (0..=n).map(|s| if s == 0 { 0 } else { count_type_a(s + 1).unwrap() }).collect();
    let mut total = 0u64;
    for k in 0..n {
        let c_k: u64 = [Kind::I, Kind::II, Kind::III]
            .into_iter()
            .map(|kind| count_central_regions(k, kind))
            .sum();
        if c_k != 0 {
            total += c_k * composition_sum(n, k + 1, &a);
        }
    }
    total
}

fn composition_sum(n: usize, parts: usize, a: &[u64]) -> u64 {
    fn rec(remaining: usize, parts_left: usize, a: &[u64], first: bool) -> u64 {
        if parts_left == 0 {
            return u64::from(remaining == 0);
        }
        let mut sum = 0;
        for s in 1..=remaining + 1 - parts_left {
            let weight = if first { (s as u64) * a[s] } else { a[s] };
            sum += weight * rec(remaining - s, parts_left - 1, a, false);
        }
        sum
    }
    rec(n, parts, a, true)
}

fn compact_c_total_check(order: usize) -> Check {
    let sum = c_series(Kind::I, order)
        .add(&c_series(Kind::II, order))
        .add(&c_series(Kind::III, order));
    let compact = TruncSeries::rational(order, &[1, 12, -1, -2], &[1, -2, -1]);
    check(
        format!("kind series sum matches the compact form to order {order}"),
        compact.coeffs().to_vec(),
        sum.coeffs().to_vec(),
    )
}

fn series_identities() -> Vec<Check> {
    let order = 20;
    let mut out = vec![compact_c_total_check(order)];
    let pa = solve_pa(order);
    let y_pa_prime = pa.derivative().shift_up(1);
    let route_compose = y_pa_prime.mul(&c_total(order).compose(&pa).expect("P_A has no constant"));
    let num = TruncSeries::from_ints(order, &[1, 12, -1, -2]);
    let den = TruncSeries::from_ints(order, &[1, -2, -1]);
    let route_rational = y_pa_prime.mul(
        &num.compose(&pa)
            .expect("P_A has no constant")
            .div(&den.compose(&pa).expect("P_A has no constant"))
            .expect("unit constant divisor"),
    );
    out.push(check(
        format!("both full-series routes agree to order {order}"),
        route_compose.coeffs().to_vec(),
        route_rational.coeffs().to_vec(),
    ));
    out.push(check(
        format!("pipeline series matches the explicit route at order {order}"),
        route_compose.coeffs().to_vec(),
        p_d(order).coeffs().to_vec(),
    ));
    out
}

fn cubic_residuals() -> Vec<Check> {
    vec![
        diagnostic(
            "cubic residual, coefficients as printed",
            algebraic_residual(10, CubicVariant::Verbatim).coeffs(),
        ),
        diagnostic(
            "cubic residual, sign-corrected variant",
            algebraic_residual(10, CubicVariant::Corrected).coeffs(),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_checks_all_pass() {
        for c in quick_checks() {
            assert_eq!(c.status, Status::Pass, "{}: expected {} got {}", c.name, c.expected, c.actual);
        }
    }

    #[test]
    fn criterion_indices_are_guarded() {
        let result = std::panic::catch_unwind(|| run_criterion(0));
        assert!(result.is_err());
        let result = std::panic::catch_unwind(|| run_criterion(13));
        assert!(result.is_err());
    }

    #[test]
    fn diagnostics_never_fail() {
        for c in run_criterion(12) {
            assert_eq!(c.status, Status::Diagnostic);
        }
    }
}
