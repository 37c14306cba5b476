//! Ptolemy diagram recognizers and closure, for type D and type A, plus the
//! nc-nc torsion test.
//!
//! A crossing pair of objects forces further objects to be present:
//!
//! * Pt1: two crossing pair orbits force the connecting chords of their
//!   member arcs (orbits, or both coloured diameters when a chord joins
//!   opposite vertices);
//! * Pt2: two crossing diameters (necessarily of different colours) force the
//!   connecting chords of their endpoints that are arcs;
//! * Pt3: a diameter crossing a pair orbit forces the connecting chords that
//!   stay clear of the rotated member, plus the diameters through the
//!   member's endpoints in the crossing diameter's colour.
//!
//! An arc set with no unmet forcing is a Ptolemy diagram of type D; those are
//! exactly the fixed points of `nc ∘ nc`, which is what [`is_torsion_arcset`]
//! tests independently.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::geometry::{
    chords_cross, crosses, make_arc, nc, ArcError, ArcObject, ArcSet, Color, PolygonContext,
};

/// Which forcing rule a violation cites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PtCondition {
    Pt1,
    Pt2,
    Pt3,
}

/// An unmet forcing: the crossing pair `witnesses` requires every object in
/// `missing`, none of which are present. `missing` is never empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: PtCondition,
    pub witnesses: (ArcObject, ArcObject),
    pub missing: Vec<ArcObject>,
}

/// The orbit of the chord `{u, v}` when that chord is an arc; `None` when it
/// is an edge or a single vertex. Diameter chords force both colours, so the
/// caller handles them separately.
fn connector_orbit(ctx: &PolygonContext, u: usize, v: usize) -> Option<ArcObject> {
    match make_arc(ctx, u, v, None) {
        Ok(o) => Some(o),
        Err(ArcError::NeighbourOrEqual { .. }) => None,
        Err(e) => unreachable!("connector {u}-{v} cannot fail with {e}"),
    }
}

fn push_forced(forced: &mut Vec<ArcObject>, o: ArcObject) {
    if !forced.contains(&o) {
        forced.push(o);
    }
}

/// Everything the cited condition forces for the crossing pair `(a, b)`,
/// or `None` when `a` and `b` do not cross.
pub fn forced_for_pair(
    ctx: &PolygonContext,
    a: ArcObject,
    b: ArcObject,
) -> Option<(PtCondition, Vec<ArcObject>)> {
    if !crosses(ctx, a, b) {
        return None;
    }
    let n = ctx.n();
    let two_n = 2 * n;
    let mut forced = Vec::new();
    let condition = match (a, b) {
        (ArcObject::PairArc(..), ArcObject::PairArc(..)) => {
            // Pt1, scanned over crossing member pairs. A connecting chord
            // between opposite vertices forces both coloured diameters.
            for (i, j) in a.member_chords(n) {
                for (k, l) in b.member_chords(n) {
                    if !chords_cross(two_n, (i, j), (k, l)) {
                        continue;
                    }
                    for (u, v) in [(i, k), (i, l), (j, k), (j, l)] {
                        if (u + n) % two_n == v {
                            push_forced(&mut forced, ArcObject::ColoredDiameter(u % n, Color::Green));
                            push_forced(&mut forced, ArcObject::ColoredDiameter(u % n, Color::Red));
                        } else if let Some(o) = connector_orbit(ctx, u, v) {
                            push_forced(&mut forced, o);
                        }
                    }
                }
            }
            PtCondition::Pt1
        }
        (ArcObject::ColoredDiameter(p, _), ArcObject::ColoredDiameter(q, _)) => {
            // Pt2. The four connecting chords pair up into at most two orbits
            // and are never diameters since p != q modulo n.
            for (u, v) in [(p, q), (p, q + n), (p + n, q), (p + n, q + n)] {
                if let Some(o) = connector_orbit(ctx, u, v % two_n) {
                    push_forced(&mut forced, o);
                }
            }
            PtCondition::Pt2
        }
        (ArcObject::ColoredDiameter(p, c), other @ ArcObject::PairArc(..))
        | (other @ ArcObject::PairArc(..), ArcObject::ColoredDiameter(p, c)) => {
            // Pt3. Connectors must stay clear of the rotated member; both
            // member scans force the same orbits.
            for (k, l) in other.member_chords(n) {
                if !chords_cross(two_n, (p, p + n), (k, l)) {
                    continue;
                }
                let partner = ((k + n) % two_n, (l + n) % two_n);
                for (u, v) in [(p, k), (p, l), (p + n, k), (p + n, l)] {
                    let chord = (u % two_n, v % two_n);
                    if chords_cross(two_n, chord, partner) {
                        continue;
                    }
                    if let Some(o) = connector_orbit(ctx, chord.0, chord.1) {
                        push_forced(&mut forced, o);
                    }
                }
                push_forced(&mut forced, ArcObject::ColoredDiameter(k % n, c));
                push_forced(&mut forced, ArcObject::ColoredDiameter(l % n, c));
            }
            PtCondition::Pt3
        }
    };
    Some((condition, forced))
}

/// Every unmet forcing among crossing pairs of `x`. Empty exactly when `x`
/// is a Ptolemy diagram of type `D_n`. Requires `n >= 2`; the 2-gon is
/// handled by [`is_ptolemy_d`] directly.
pub fn pt_violations(ctx: &PolygonContext, x: &ArcSet) -> Vec<Violation> {
    assert!(ctx.n() >= 2, "forcing conditions are stated for n >= 2");
    let members: Vec<usize> = x.indices().collect();
    let mut out = Vec::new();
    for (pos, &p) in members.iter().enumerate() {
        for &q in &members[pos + 1..] {
            let (a, b) = (ctx.object(p), ctx.object(q));
            let Some((condition, forced)) = forced_for_pair(ctx, a, b) else {
                continue;
            };
            let missing: Vec<ArcObject> = forced
                .into_iter()
                .filter(|o| !x.contains(ctx.index_of(*o).expect("forced objects are canonical")))
                .collect();
            if !missing.is_empty() {
                out.push(Violation { condition, witnesses: (a, b), missing });
            }
        }
    }
    out
}

/// Whether `x` is a Ptolemy diagram of type `D_n`. For `n >= 2` this means
/// no unmet forcing; the 2-gon has exactly one Ptolemy diagram, the one
/// containing both coloured diameters.
pub fn is_ptolemy_d(ctx: &PolygonContext, x: &ArcSet) -> bool {
    if ctx.n() == 1 {
        return *x == ArcSet::full(ctx);
    }
    pt_violations(ctx, x).is_empty()
}

/// The least superset of `x` with no unmet forcing, obtained by adding every
/// missing object until a fixed point is reached. In the degenerate rank 1
/// the only closed set is the full one.
pub fn ptolemy_closure(ctx: &PolygonContext, x: &ArcSet) -> ArcSet {
    if ctx.n() == 1 {
        return ArcSet::full(ctx);
    }
    let mut current = x.clone();
    loop {
        let mut grew = false;
        for v in pt_violations(ctx, &current) {
            for o in v.missing {
                grew |= current.insert(ctx.index_of(o).expect("forced objects are canonical"));
            }
        }
        if !grew {
            return current;
        }
    }
}

/// The nc-nc fixed-point test: `x` corresponds to a torsion pair exactly
/// when `x == nc(nc(x))`.
pub fn is_torsion_arcset(ctx: &PolygonContext, x: &ArcSet) -> bool {
    nc(ctx, &nc(ctx, x)) == *x
}

/// Why a type A diagram description is rejected.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum TypeAError {
    #[error("polygon size {0} is smaller than 2")]
    PolygonTooSmall(usize),
    #[error("vertex {0} is out of range for the {1}-gon")]
    VertexOutOfRange(usize, usize),
    #[error("{0}-{1} is an edge or a repeated vertex, not an arc")]
    ArcIsEdgeOrLoop(usize, usize),
    #[error("base edge {0} is out of range for the {1}-gon")]
    BaseEdgeOutOfRange(usize, usize),
}

/// An arc diagram of an `m`-gon with a distinguished oriented base edge.
/// Arcs join non-neighbouring vertices, so diagrams with `m <= 3` are
/// necessarily empty (degenerate).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeADiagram {
    m: usize,
    arcs: BTreeSet<(usize, usize)>,
    base_edge: usize,
}

impl TypeADiagram {
    /// Validate and normalize a diagram description. Arcs may be given in
    /// either vertex order.
    pub fn new(
        m: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
        base_edge: usize,
    ) -> Result<TypeADiagram, TypeAError> {
        if m < 2 {
            return Err(TypeAError::PolygonTooSmall(m));
        }
        if base_edge >= m {
            return Err(TypeAError::BaseEdgeOutOfRange(base_edge, m));
        }
        let mut set = BTreeSet::new();
        for (a, b) in arcs {
            if a >= m {
                return Err(TypeAError::VertexOutOfRange(a, m));
            }
            if b >= m {
                return Err(TypeAError::VertexOutOfRange(b, m));
            }
            let d = (b + m - a) % m;
            if d < 2 || d > m - 2 {
                return Err(TypeAError::ArcIsEdgeOrLoop(a, b));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(TypeADiagram { m, arcs: set, base_edge })
    }

    /// The degenerate diagram of the 2-gon.
    pub fn degenerate() -> TypeADiagram {
        TypeADiagram { m: 2, arcs: BTreeSet::new(), base_edge: 0 }
    }

    /// Polygon size.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Arcs, normalized with the smaller vertex first.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    /// Number of arcs.
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// The distinguished oriented edge index.
    pub fn base_edge(&self) -> usize {
        self.base_edge
    }
}

/// Whether the diagram satisfies the type A forcing rule: every crossing
/// pair of arcs has all of its connecting chords that are arcs present. The
/// base edge plays no role here; the property is rotation invariant.
pub fn is_ptolemy_a(d: &TypeADiagram) -> bool {
    let m = d.m;
    let arcs: Vec<(usize, usize)> = d.arcs.iter().copied().collect();
    for (pos, &(i, j)) in arcs.iter().enumerate() {
        for &(k, l) in &arcs[pos + 1..] {
            if !chords_cross(m, (i, j), (k, l)) {
                continue;
            }
            for (u, v) in [(i, k), (i, l), (j, k), (j, l)] {
                let span = (v + m - u) % m;
                if (2..=m - 2).contains(&span) && !d.arcs.contains(&(u.min(v), u.max(v))) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::nc;
    use Color::{Green, Red};

    fn ctx(n: usize) -> PolygonContext {
        PolygonContext::new(n)
    }

    fn set(ctx: &PolygonContext, objects: &[ArcObject]) -> ArcSet {
        ArcSet::from_objects(ctx, objects.iter().copied())
    }

    fn pair(ctx: &PolygonContext, i: usize, j: usize) -> ArcObject {
        make_arc(ctx, i, j, None).unwrap()
    }

    /// The first example collection of the 10-gon: two crossing pair orbits
    /// and two crossing diameters, violating Pt1 and Pt2.
    fn example_x1(c: &PolygonContext) -> ArcSet {
        set(
            c,
            &[
                pair(c, 0, 2),
                pair(c, 1, 3),
                ArcObject::ColoredDiameter(0, Green),
                ArcObject::ColoredDiameter(4, Red),
            ],
        )
    }

    /// The second example collection of the 10-gon, a Ptolemy diagram.
    fn example_x2(c: &PolygonContext) -> ArcSet {
        set(
            c,
            &[
                pair(c, 0, 2),
                pair(c, 0, 6),
                pair(c, 0, 7),
                ArcObject::ColoredDiameter(0, Green),
                ArcObject::ColoredDiameter(1, Green),
                ArcObject::ColoredDiameter(2, Green),
                ArcObject::ColoredDiameter(0, Red),
            ],
        )
    }

    #[test]
    fn x1_violates_pt1_and_pt2() {
        let c = ctx(5);
        let violations = pt_violations(&c, &example_x1(&c));
        assert!(violations.iter().any(|v| v.condition == PtCondition::Pt1));
        assert!(violations.iter().any(|v| v.condition == PtCondition::Pt2));
        for v in &violations {
            assert!(!v.missing.is_empty());
        }
        // The crossing orbits force the connecting orbit (0,3); the crossing
        // diameters force the orbit (0,4).
        let pt1 = violations.iter().find(|v| v.condition == PtCondition::Pt1).unwrap();
        assert!(pt1.missing.contains(&ArcObject::PairArc(0, 3)));
        let pt2 = violations.iter().find(|v| v.condition == PtCondition::Pt2).unwrap();
        assert_eq!(pt2.missing, vec![ArcObject::PairArc(0, 4)]);
    }

    #[test]
    fn empty_and_full_have_no_violations() {
        for n in 2..=5 {
            let c = ctx(n);
            assert!(pt_violations(&c, &ArcSet::empty(&c)).is_empty());
            assert!(pt_violations(&c, &ArcSet::full(&c)).is_empty());
        }
    }

    #[test]
    fn x2_is_ptolemy_and_x1_is_not() {
        let c = ctx(5);
        assert!(!is_ptolemy_d(&c, &example_x1(&c)));
        assert!(is_ptolemy_d(&c, &example_x2(&c)));
    }

    #[test]
    fn nc_of_x2_matches_hand_computation() {
        let c = ctx(5);
        let expected = set(
            &c,
            &[
                ArcObject::ColoredDiameter(0, Green),
                pair(&c, 0, 7),
                pair(&c, 2, 4),
                pair(&c, 0, 8),
            ],
        );
        assert_eq!(nc(&c, &example_x2(&c)), expected);
    }

    #[test]
    fn two_gon_special_case() {
        let c = ctx(1);
        assert!(is_ptolemy_d(&c, &ArcSet::full(&c)));
        assert!(!is_ptolemy_d(&c, &ArcSet::empty(&c)));
        let only_green = set(&c, &[ArcObject::ColoredDiameter(0, Green)]);
        assert!(!is_ptolemy_d(&c, &only_green));
    }

    #[test]
    fn four_gon_diameter_subsets_are_all_ptolemy() {
        // In the 4-gon the Pt2 connectors are all edges, so no forcing ever
        // applies; all 16 subsets pass, matching the quadratic coefficient.
        let c = ctx(2);
        for mask in 0u64..16 {
            assert!(is_ptolemy_d(&c, &ArcSet::from_mask(&c, mask)));
        }
    }

    #[test]
    fn closure_adds_the_missing_connector() {
        let c = ctx(4);
        let x = set(&c, &[pair(&c, 0, 2), pair(&c, 1, 3)]);
        let want = set(&c, &[pair(&c, 0, 2), pair(&c, 1, 3), pair(&c, 0, 3)]);
        assert_eq!(ptolemy_closure(&c, &x), want);
    }

    #[test]
    fn closure_at_rank_one_is_the_full_set() {
        let c = ctx(1);
        assert_eq!(ptolemy_closure(&c, &ArcSet::empty(&c)), ArcSet::full(&c));
        assert_eq!(ptolemy_closure(&c, &ArcSet::full(&c)), ArcSet::full(&c));
    }

    #[test]
    fn closure_fixes_ptolemy_inputs() {
        let c = ctx(5);
        let x2 = example_x2(&c);
        assert_eq!(ptolemy_closure(&c, &x2), x2);
        let c2 = ctx(2);
        let two_diams = set(
            &c2,
            &[
                ArcObject::ColoredDiameter(0, Green),
                ArcObject::ColoredDiameter(1, Red),
            ],
        );
        assert_eq!(ptolemy_closure(&c2, &two_diams), two_diams);
    }

    #[test]
    fn closure_is_extensive_monotone_idempotent_exhaustively() {
        for n in 2..=3 {
            let c = ctx(n);
            let count = c.object_count();
            for mask in 0u64..(1 << count) {
                let x = ArcSet::from_mask(&c, mask);
                let cl = ptolemy_closure(&c, &x);
                assert!(x.is_subset(&cl));
                assert_eq!(ptolemy_closure(&c, &cl), cl, "idempotent at n={n} mask={mask}");
                assert_eq!(cl == x, is_ptolemy_d(&c, &x));
                for extra in 0..count {
                    if !x.contains(extra) {
                        let mut y = x.clone();
                        y.insert(extra);
                        assert!(cl.is_subset(&ptolemy_closure(&c, &y)), "monotone at n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn torsion_test_examples() {
        let c2 = ctx(2);
        let x = set(&c2, &[ArcObject::ColoredDiameter(0, Green)]);
        assert!(is_torsion_arcset(&c2, &x));
        for n in 2..=3 {
            let c = ctx(n);
            assert!(is_torsion_arcset(&c, &ArcSet::empty(&c)));
        }
        let c1 = ctx(1);
        assert!(!is_torsion_arcset(&c1, &ArcSet::empty(&c1)));
        assert!(is_torsion_arcset(&c1, &ArcSet::full(&c1)));
    }

    #[test]
    fn torsion_is_preserved_by_nc_small() {
        for n in 2..=3 {
            let c = ctx(n);
            for mask in 0u64..(1 << c.object_count()) {
                let x = ArcSet::from_mask(&c, mask);
                if is_torsion_arcset(&c, &x) {
                    assert!(is_torsion_arcset(&c, &nc(&c, &x)));
                }
            }
        }
    }

    #[test]
    fn type_a_validation() {
        assert!(TypeADiagram::new(1, [], 0).is_err());
        assert!(TypeADiagram::new(4, [(0, 1)], 0).is_err());
        assert!(TypeADiagram::new(4, [(0, 4)], 0).is_err());
        assert!(TypeADiagram::new(4, [(0, 2)], 4).is_err());
        let d = TypeADiagram::new(4, [(2, 0)], 1).unwrap();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 2)]);
    }

    #[test]
    fn type_a_recognizer_examples() {
        let both = TypeADiagram::new(4, [(0, 2), (1, 3)], 0).unwrap();
        assert!(is_ptolemy_a(&both));
        let one = TypeADiagram::new(4, [(0, 2)], 0).unwrap();
        assert!(is_ptolemy_a(&one));
        let triangle = TypeADiagram::new(3, [], 0).unwrap();
        assert!(is_ptolemy_a(&triangle));
        let pentagon = TypeADiagram::new(5, [(0, 2), (1, 3)], 0).unwrap();
        assert!(!is_ptolemy_a(&pentagon));
    }
}
