//! Exact truncated power series and the counting pipeline built on them.
//!
//! Coefficients are arbitrary-precision integers and every operation is
//! exact; divisions only ever happen by series with unit constant term, so
//! rationals never arise. The pipeline solves the type A functional equation
//! by fixed-point iteration, evaluates the three central-region series and
//! their total, solves the word-model system, and assembles the main series
//! whose coefficient at `y^n` counts the torsion pairs in rank `n`. A
//! printed cubic relation for that series is evaluated as a diagnostic
//! residual in two variants, since its leading factor is suspect.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::enumeration::Kind;

/// Why a series operation is rejected.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("division needs a divisor with constant term 1 or -1, got {0}")]
    NonUnitDivisor(BigInt),
    #[error("composition needs an inner series with constant term 0, got {0}")]
    NonzeroConstantInner(BigInt),
}

/// A power series truncated at a fixed order, with exact integer
/// coefficients `c_0..c_N`. Binary operations truncate to the smaller of the
/// two orders.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BigInt>,
}

impl TruncSeries {
    /// Wrap explicit coefficients `c_0..c_N`. Panics on an empty vector.
    pub fn new(coeffs: Vec<BigInt>) -> TruncSeries {
        assert!(!coeffs.is_empty(), "a series carries at least its constant term");
        TruncSeries { coeffs }
    }

    /// The zero series of the given order.
    pub fn zero(order: usize) -> TruncSeries {
        TruncSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    /// A series from machine-integer coefficients, zero-padded or truncated
    /// to the order. Truncation loses nothing: discarded terms cannot reach
    /// the retained coefficients under any series operation.
    pub fn from_ints(order: usize, ints: &[i64]) -> TruncSeries {
        let mut coeffs: Vec<BigInt> =
            ints.iter().take(order + 1).map(|&c| BigInt::from(c)).collect();
        coeffs.resize(order + 1, BigInt::zero());
        TruncSeries { coeffs }
    }

    /// The monomial `y` at the given order (`order >= 1`).
    pub fn y(order: usize) -> TruncSeries {
        TruncSeries::from_ints(order, &[0, 1])
    }

    /// The quotient of two integer polynomials as a series, for a
    /// denominator with unit constant term.
    pub fn rational(order: usize, numerator: &[i64], denominator: &[i64]) -> TruncSeries {
        let num = TruncSeries::from_ints(order, numerator);
        let den = TruncSeries::from_ints(order, denominator);
        num.div(&den).expect("rational helper is used with unit denominators")
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `y^k`; `k` must not exceed the order.
    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    /// All coefficients `c_0..c_N`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Whether every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Coefficient-wise equality up to the smaller of the two orders.
    pub fn agrees_with(&self, other: &TruncSeries) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..=n] == other.coeffs[..=n]
    }

    /// The same series cut down to a smaller order.
    pub fn truncated(&self, order: usize) -> TruncSeries {
        assert!(order <= self.order());
        TruncSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Multiplication by `y^k`, raising the order by `k` (exact).
    pub fn shift_up(&self, k: usize) -> TruncSeries {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        TruncSeries { coeffs }
    }

    fn common_order(&self, other: &TruncSeries) -> usize {
        self.order().min(other.order())
    }

    /// Sum, truncated to the common order.
    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let n = self.common_order(other);
        TruncSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect() }
    }

    /// Difference, truncated to the common order.
    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        let n = self.common_order(other);
        TruncSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect() }
    }

    /// Product, truncated to the common order.
    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let n = self.common_order(other);
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (j, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in other.coeffs.iter().take(n + 1 - j).enumerate() {
                coeffs[j + k] += a * b;
            }
        }
        TruncSeries { coeffs }
    }

    /// Product with an integer scalar.
    pub fn scale(&self, c: i64) -> TruncSeries {
        let c = BigInt::from(c);
        TruncSeries { coeffs: self.coeffs.iter().map(|a| a * &c).collect() }
    }

    /// Quotient, truncated to the common order. The divisor's constant term
    /// must be a unit (1 or -1) so the result stays integral.
    pub fn div(&self, den: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        let b0 = &den.coeffs[0];
        if !b0.abs().is_one() {
            return Err(SeriesError::NonUnitDivisor(b0.clone()));
        }
        let n = self.common_order(den);
        let mut q: Vec<BigInt> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for (j, qj) in q.iter().enumerate() {
                acc -= qj * &den.coeffs[k - j];
            }
            q.push(acc / b0);
        }
        Ok(TruncSeries { coeffs: q })
    }

    /// Formal derivative; the order drops by one (or stays 0 for constants).
    pub fn derivative(&self) -> TruncSeries {
        if self.order() == 0 {
            return TruncSeries::zero(0);
        }
        TruncSeries {
            coeffs: (1..=self.order())
                .map(|k| &self.coeffs[k] * BigInt::from(k as u64))
                .collect(),
        }
    }

    /// Substitution `self(inner)`, truncated to the common order. The inner
    /// series must have zero constant term.
    pub fn compose(&self, inner: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantInner(inner.coeffs[0].clone()));
        }
        let n = self.common_order(inner);
        let inner = inner.truncated(n);
        let mut acc = TruncSeries::zero(n);
        for k in (0..=n).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }
}

impl fmt::Debug for TruncSeries {
    /// Compact form `c0 + c1 y + c2 y^2 + ...` with zero terms elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c} y")?,
                _ => write!(f, "{c} y^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " (order {})", self.order())
    }
}

/// The type A series: the least solution of
/// `P = y + P^2/(1-P) + P^3/(1-P)`, by fixed-point iteration from `P = y`.
/// Each pass fixes at least one further coefficient. Requires `N >= 1`.
pub fn solve_pa(order: usize) -> TruncSeries {
    assert!(order >= 1);
    let y = TruncSeries::y(order);
    let mut p = y.clone();
    for _ in 0..=order + 2 {
        let next = y.add(&pa_rhs_tail(&p));
        if next == p {
            debug_assert!(pa_residual(&p).is_zero());
            return p;
        }
        p = next;
    }
    unreachable!("the iteration fixes one coefficient per pass")
}

/// `(P^2 + P^3) / (1 - P)` for a series with zero constant term.
fn pa_rhs_tail(p: &TruncSeries) -> TruncSeries {
    let p2 = p.mul(p);
    let p3 = p2.mul(p);
    let one_minus = TruncSeries::from_ints(p.order(), &[1]).sub(p);
    p2.add(&p3).div(&one_minus).expect("1 - P has unit constant term")
}

/// Residual of the type A functional equation at `p`; zero exactly when `p`
/// solves it to its order. `p` must have zero constant term.
pub fn pa_residual(p: &TruncSeries) -> TruncSeries {
    assert!(p.coeff(0).is_zero(), "the equation is posed for series with zero constant term");
    p.sub(&TruncSeries::y(p.order())).sub(&pa_rhs_tail(p))
}

/// Closed form of the central-region series for one kind.
pub fn c_series(kind: Kind, order: usize) -> TruncSeries {
    match kind {
        // (1+y)/(1-y): one empty and one full region for every k >= 1, and
        // the two-diameter region at k = 0.
        Kind::I => TruncSeries::rational(order, &[1, 1], &[1, -1]),
        // 2y(1+y)(1+2y-y^2) / ((1-y)^2 (1-2y-y^2)): the word model, doubled
        // for the colour choice.
        Kind::II => TruncSeries::rational(order, &[0, 2, 6, 2, -2], &[1, -4, 4, 0, -1]),
        // 2y + 4(2y-y^2)/(1-y)^2: the two exceptional pairings at k = 1 plus
        // the single-diameter and paired-diameter families.
        Kind::III => TruncSeries::rational(order, &[0, 10, -8, 2], &[1, -2, 1]),
    }
}

/// Sum of the three central-region series. Also checks the compact rational
/// form read off the final counting formula, `(1+12y-y^2-2y^3)/(1-2y-y^2)`.
pub fn c_total(order: usize) -> TruncSeries {
    let total = c_series(Kind::I, order)
        .add(&c_series(Kind::II, order))
        .add(&c_series(Kind::III, order));
    let compact = TruncSeries::rational(order, &[1, 12, -1, -2], &[1, -2, -1]);
    assert!(total.agrees_with(&compact), "the three kinds sum to the compact form");
    total
}

/// Solve the word-model system literally by joint fixed-point iteration and
/// return `(W_o, W_x, W', W)`. The closed forms `W' = (1+y)/(1-2y-y^2)` and
/// `W = y^2 (1+y)(1+2y-y^2) / ((1-y)^2 (1-2y-y^2))` are asserted against the
/// solution. Requires `N >= 2`.
pub fn solve_w_system(order: usize) -> (TruncSeries, TruncSeries, TruncSeries, TruncSeries) {
    assert!(order >= 2);
    let y = TruncSeries::y(order);
    let y2 = y.mul(&y);
    let one = TruncSeries::from_ints(order, &[1]);
    let mut wo = TruncSeries::zero(order);
    let mut wx = TruncSeries::zero(order);
    let mut wp = TruncSeries::zero(order);
    for _ in 0..=order + 2 {
        // One letter o; a shorter marked word, then l, then o; an o-word
        // extended by o. The x-words are the mirror image.
        let wo_next = y.add(&wp.mul(&y2)).add(&wo.mul(&y));
        let wx_next = y.add(&wp.mul(&y2)).add(&wx.mul(&y));
        // Empty; an optional l-terminated marked prefix and any letter; an
        // o-word or x-word followed by one of its two admissible letters.
        let wp_next = one
            .add(&one.add(&wp.mul(&y)).mul(&y.scale(3)))
            .add(&wo.mul(&y.scale(2)))
            .add(&wx.mul(&y.scale(2)));
        if wo_next == wo && wx_next == wx && wp_next == wp {
            break;
        }
        wo = wo_next;
        wx = wx_next;
        wp = wp_next;
    }
    // Assemble the circular words: W = y^2 W' (1+y)/(1-y) + 2 y^3 W'/(1-y)^2.
    // The first term is the l W' l core with an optional trailing run of a
    // single letter kind; the second wraps a nonempty run around the core.
    let factor1 = TruncSeries::rational(order, &[1, 1], &[1, -1]);
    let factor2 = TruncSeries::rational(order, &[0, 0, 0, 2], &[1, -2, 1]);
    let w = wp.shift_up(2).mul(&factor1).add(&wp.mul(&factor2));

    assert_eq!(wo, wx, "the o-words and x-words are mirror images");
    let wp_closed = TruncSeries::rational(order, &[1, 1], &[1, -2, -1]);
    assert!(wp.agrees_with(&wp_closed), "marked-word closed form");
    let w_closed = TruncSeries::rational(order, &[0, 0, 1, 3, 1, -1], &[1, -4, 4, 0, -1]);
    assert!(w.agrees_with(&w_closed), "circular-word closed form");
    (wo, wx, wp, w)
}

/// The main counting series: coefficient `n` is the number of torsion pairs
/// in rank `n`. Assembled as `y P_A'(y) C(P_A(y))` and again with the
/// compact rational form of `C` substituted; the two routes must agree.
/// Requires `N >= 1`.
pub fn p_d(order: usize) -> TruncSeries {
    assert!(order >= 1);
    let pa = solve_pa(order);
    // y P_A' is exact to the full order: its k-th coefficient is k a_k.
    let y_pa_prime = pa.derivative().shift_up(1);
    let composed = c_total(order).compose(&pa).expect("P_A has zero constant term");
    let route_compose = y_pa_prime.mul(&composed);

    let pa2 = pa.mul(&pa);
    let pa3 = pa2.mul(&pa);
    let num = TruncSeries::from_ints(order, &[1])
        .add(&pa.scale(12))
        .sub(&pa2)
        .sub(&pa3.scale(2));
    let den = TruncSeries::from_ints(order, &[1]).sub(&pa.scale(2)).sub(&pa2);
    let route_rational = y_pa_prime.mul(&num.div(&den).expect("unit constant term"));

    assert_eq!(route_compose, route_rational, "both assembly routes agree");
    route_compose
}

/// Which version of the printed cubic relation to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubicVariant {
    /// The relation exactly as printed, leading factor `4y^2-47y^2-48y+8`.
    Verbatim,
    /// The leading factor repaired to `4y^3-47y^2-48y+8`, matching the
    /// parallel factor in the quadratic term.
    Corrected,
}

/// Substitute the main series into the printed cubic relation and return the
/// residual. Diagnostic only: the verbatim leading factor repeats a `y^2`
/// term and is suspected to be a misprint, so nothing is asserted here.
pub fn algebraic_residual(order: usize, variant: CubicVariant) -> TruncSeries {
    assert!(order >= 1);
    let p = p_d(order);
    let a = match variant {
        CubicVariant::Verbatim => TruncSeries::from_ints(order, &[8, -48, -43]),
        CubicVariant::Corrected => TruncSeries::from_ints(order, &[8, -48, -47, 4]),
    };
    let b = TruncSeries::from_ints(order, &[32, -208, -92, 110, -8]);
    let c = TruncSeries::from_ints(order, &[32, -240, -246, 628, -99, 4]);
    let d = TruncSeries::from_ints(order, &[0, -32, -304, 638, -40]);
    a.mul(&p).add(&b).mul(&p).add(&c).mul(&p).add(&d)
}
