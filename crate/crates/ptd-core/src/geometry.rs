//! Canonical arc model of the `2n`-gon and the crossing relation.
//!
//! Vertices are numbered `0..2n` counterclockwise; all vertex arithmetic is
//! modulo `2n`. The objects of the model are
//!
//! * pair orbits: a non-diameter arc `{i,j}` taken together with its
//!   180-degree rotation `{i+n,j+n}` as one atomic object, and
//! * coloured diameters: the chord `{i,i+n}` in a green and a red copy.
//!
//! For `n >= 2` this gives `n(n-2)` pair orbits and `2n` coloured diameters,
//! `n^2` objects in total; the 2-gon (`n = 1`) has exactly its two coloured
//! diameters. Because pair orbits are atomic, every [`ArcSet`] is invariant
//! under rotation by 180 degrees by construction.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Colour of a diameter. Same-coloured diameters never cross.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Green,
    Red,
}

impl Color {
    /// The other colour.
    pub fn flipped(self) -> Color {
        match self {
            Color::Green => Color::Red,
            Color::Red => Color::Green,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Green => write!(f, "green"),
            Color::Red => write!(f, "red"),
        }
    }
}

/// A canonical indecomposable of the arc model.
///
/// `PairArc(a, b)` is the orbit `{{a,b},{a+n,b+n}}`, represented by the
/// lexicographically least of its two member arcs written `(a, b)` with
/// `a < b`. `ColoredDiameter(i, c)` is the chord `{i, i+n}` with `i` reduced
/// to `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArcObject {
    PairArc(usize, usize),
    ColoredDiameter(usize, Color),
}

impl ArcObject {
    /// The member chords in the `2n`-gon: both arcs of a pair orbit, or the
    /// single chord of a diameter.
    pub fn member_chords(self, n: usize) -> Vec<(usize, usize)> {
        match self {
            ArcObject::PairArc(a, b) => pair_members(n, a, b).to_vec(),
            ArcObject::ColoredDiameter(i, _) => vec![(i, i + n)],
        }
    }
}

/// Why a vertex pair does not name an arc object.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ArcError {
    #[error("vertices {i} and {j} are equal or neighbouring in the {}-gon", 2 * n)]
    NeighbourOrEqual { n: usize, i: usize, j: usize },
    #[error("the diameter {i}-{j} needs a colour")]
    MissingColor { i: usize, j: usize },
    #[error("a colour was supplied for the non-diameter arc {i}-{j}")]
    SpuriousColor { i: usize, j: usize },
}

/// The `2n`-gon together with its canonical object list and a precomputed
/// crossing table. Immutable after construction.
pub struct PolygonContext {
    n: usize,
    objects: Vec<ArcObject>,
    index: HashMap<ArcObject, usize>,
    /// Crossing rows as bitsets: `rows[o]` holds every object crossing `o`.
    rows: Vec<Box<[u64]>>,
}

impl PolygonContext {
    /// Build the context for the `2n`-gon. Panics if `n == 0`.
    pub fn new(n: usize) -> PolygonContext {
        assert!(n >= 1, "the polygon needs at least two vertices");
        let mut objects = Vec::new();
        let two_n = 2 * n;
        // Pair orbits in lexicographic order of their canonical representative.
        let mut pairs = Vec::new();
        for a in 0..two_n {
            for b in (a + 1)..two_n {
                let span = b - a;
                if span < 2 || span == n || span > two_n - 2 {
                    continue;
                }
                let rep = canonical_pair(n, a, b);
                if rep == (a, b) {
                    pairs.push(rep);
                }
            }
        }
        pairs.sort_unstable();
        objects.extend(pairs.into_iter().map(|(a, b)| ArcObject::PairArc(a, b)));
        for i in 0..n {
            objects.push(ArcObject::ColoredDiameter(i, Color::Green));
        }
        for i in 0..n {
            objects.push(ArcObject::ColoredDiameter(i, Color::Red));
        }
        debug_assert_eq!(objects.len(), if n == 1 { 2 } else { n * n });

        let index: HashMap<ArcObject, usize> =
            objects.iter().enumerate().map(|(k, &o)| (o, k)).collect();

        let count = objects.len();
        let words = count.div_ceil(64);
        let mut rows: Vec<Box<[u64]>> = vec![vec![0u64; words].into_boxed_slice(); count];
        for p in 0..count {
            for q in (p + 1)..count {
                if objects_cross(n, objects[p], objects[q]) {
                    rows[p][q / 64] |= 1 << (q % 64);
                    rows[q][p / 64] |= 1 << (p % 64);
                }
            }
        }

        PolygonContext { n, objects, index, rows }
    }

    /// Half the vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of canonical objects: `n^2` for `n >= 2`, two for `n = 1`.
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    /// All canonical objects in index order: pair orbits lexicographically,
    /// then green diameters `0..n`, then red diameters `0..n`. This order is
    /// part of the on-disk contract.
    pub fn objects(&self) -> &[ArcObject] {
        &self.objects
    }

    /// The object at a canonical index.
    pub fn object(&self, idx: usize) -> ArcObject {
        self.objects[idx]
    }

    /// Canonical index of an object, if it is canonical in this context.
    pub fn index_of(&self, a: ArcObject) -> Option<usize> {
        self.index.get(&a).copied()
    }

    fn index_of_checked(&self, a: ArcObject) -> usize {
        self.index_of(a)
            .unwrap_or_else(|| panic!("{a:?} is not a canonical object of the {}-gon", 2 * self.n))
    }

    /// Crossing row of an object as a bitset over canonical indices.
    pub fn crossing_row(&self, idx: usize) -> &[u64] {
        &self.rows[idx]
    }

    /// Crossing row as a single word; requires `object_count() <= 64`.
    pub fn crossing_mask(&self, idx: usize) -> u64 {
        assert!(self.object_count() <= 64);
        self.rows[idx][0]
    }
}

impl fmt::Debug for PolygonContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolygonContext(n = {})", self.n)
    }
}

/// Canonical representative of the orbit of the non-diameter arc `{a, b}`:
/// the lexicographically least of the two members, each written with its
/// smaller vertex first.
fn canonical_pair(n: usize, a: usize, b: usize) -> (usize, usize) {
    let two_n = 2 * n;
    let ordered = |x: usize, y: usize| if x < y { (x, y) } else { (y, x) };
    let m1 = ordered(a % two_n, b % two_n);
    let m2 = ordered((a + n) % two_n, (b + n) % two_n);
    m1.min(m2)
}

/// Construct the canonical object on vertices `i` and `j`, with a colour for
/// diameters. Vertices are reduced modulo `2n`.
pub fn make_arc(
    ctx: &PolygonContext,
    i: usize,
    j: usize,
    color: Option<Color>,
) -> Result<ArcObject, ArcError> {
    let n = ctx.n;
    let two_n = 2 * n;
    let i = i % two_n;
    let j = j % two_n;
    if i == j {
        return Err(ArcError::NeighbourOrEqual { n, i, j });
    }
    // The opposite-vertex test runs before the neighbour test: in the 2-gon
    // (n = 1) the vertex i+1 is both, and the context must be able to name
    // its two coloured diameters.
    if j == (i + n) % two_n {
        return match color {
            Some(c) => Ok(ArcObject::ColoredDiameter(i % n, c)),
            None => Err(ArcError::MissingColor { i, j }),
        };
    }
    if j == (i + 1) % two_n || j == (i + two_n - 1) % two_n {
        return Err(ArcError::NeighbourOrEqual { n, i, j });
    }
    if color.is_some() {
        return Err(ArcError::SpuriousColor { i, j });
    }
    let (a, b) = canonical_pair(n, i, j);
    Ok(ArcObject::PairArc(a, b))
}

/// True when vertex `x` lies strictly inside the counterclockwise interval
/// from `a` to `b` in the `2n`-gon.
fn strictly_between(two_n: usize, a: usize, b: usize, x: usize) -> bool {
    let fwd = |from: usize, to: usize| (to + two_n - from) % two_n;
    let len = fwd(a, b);
    let off = fwd(a, x);
    off > 0 && off < len
}

/// True when the chords `{a,b}` and `{c,d}` cross: all four vertices are
/// distinct and exactly one of `c`, `d` lies between `a` and `b`.
pub(crate) fn chords_cross(two_n: usize, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    strictly_between(two_n, a, b, c) != strictly_between(two_n, a, b, d)
}

fn pair_members(n: usize, a: usize, b: usize) -> [(usize, usize); 2] {
    let two_n = 2 * n;
    [(a, b), ((a + n) % two_n, (b + n) % two_n)]
}

fn objects_cross(n: usize, x: ArcObject, y: ArcObject) -> bool {
    let two_n = 2 * n;
    match (x, y) {
        (ArcObject::PairArc(a, b), ArcObject::PairArc(c, d)) => {
            // Two orbits cross when some member of one crosses some member of
            // the other; by rotation it is enough to test one member of the
            // first against both members of the second. The two members of a
            // single orbit never cross.
            if (a, b) == (c, d) {
                return false;
            }
            pair_members(n, c, d)
                .into_iter()
                .any(|m| chords_cross(two_n, (a, b), m))
        }
        (ArcObject::PairArc(a, b), ArcObject::ColoredDiameter(i, _))
        | (ArcObject::ColoredDiameter(i, _), ArcObject::PairArc(a, b)) => {
            // A diameter crosses an orbit when it crosses one member; it then
            // automatically crosses the other as well.
            pair_members(n, a, b)
                .into_iter()
                .any(|m| chords_cross(two_n, (i, i + n), m))
        }
        (ArcObject::ColoredDiameter(i, c1), ArcObject::ColoredDiameter(j, c2)) => {
            c1 != c2 && i != j
        }
    }
}

/// Whether two canonical objects cross (symmetric, never reflexive).
pub fn crosses(ctx: &PolygonContext, a: ArcObject, b: ArcObject) -> bool {
    let p = ctx.index_of_checked(a);
    let q = ctx.index_of_checked(b);
    ctx.rows[p][q / 64] >> (q % 64) & 1 == 1
}

/// A subset of the canonical objects of a [`PolygonContext`], as a bit
/// vector over canonical indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArcSet {
    words: Box<[u64]>,
    len: usize,
}

impl ArcSet {
    /// The empty set.
    pub fn empty(ctx: &PolygonContext) -> ArcSet {
        let len = ctx.object_count();
        ArcSet { words: vec![0; len.div_ceil(64)].into_boxed_slice(), len }
    }

    /// The set of all canonical objects.
    pub fn full(ctx: &PolygonContext) -> ArcSet {
        let mut s = ArcSet::empty(ctx);
        for i in 0..s.len {
            s.words[i / 64] |= 1 << (i % 64);
        }
        s
    }

    /// Build a set from canonical indices.
    pub fn from_indices(ctx: &PolygonContext, indices: impl IntoIterator<Item = usize>) -> ArcSet {
        let mut s = ArcSet::empty(ctx);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Build a set from objects; panics on non-canonical objects.
    pub fn from_objects(
        ctx: &PolygonContext,
        objects: impl IntoIterator<Item = ArcObject>,
    ) -> ArcSet {
        ArcSet::from_indices(ctx, objects.into_iter().map(|o| ctx.index_of_checked(o)))
    }

    /// Interpret the low bits of a word as a set; requires at most 64 objects.
    pub fn from_mask(ctx: &PolygonContext, mask: u64) -> ArcSet {
        let len = ctx.object_count();
        assert!(len <= 64);
        assert!(len == 64 || mask < (1 << len), "mask has bits beyond the object count");
        ArcSet { words: vec![mask].into_boxed_slice(), len }
    }

    /// The set as a single word; requires at most 64 objects.
    pub fn to_mask(&self) -> u64 {
        assert!(self.len <= 64);
        self.words[0]
    }

    /// Number of objects the underlying context has.
    pub fn universe_len(&self) -> usize {
        self.len
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True when no object is a member.
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Membership by canonical index.
    pub fn contains(&self, idx: usize) -> bool {
        assert!(idx < self.len);
        self.words[idx / 64] >> (idx % 64) & 1 == 1
    }

    /// Insert by canonical index; returns false when already present.
    pub fn insert(&mut self, idx: usize) -> bool {
        assert!(idx < self.len);
        let fresh = !self.contains(idx);
        self.words[idx / 64] |= 1 << (idx % 64);
        fresh
    }

    /// Remove by canonical index.
    pub fn remove(&mut self, idx: usize) {
        assert!(idx < self.len);
        self.words[idx / 64] &= !(1 << (idx % 64));
    }

    /// Member indices in increasing order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.contains(i))
    }

    /// Member objects in index order.
    pub fn objects<'c>(&self, ctx: &'c PolygonContext) -> Vec<ArcObject> {
        assert_eq!(self.len, ctx.object_count());
        self.indices().map(|i| ctx.object(i)).collect()
    }

    /// True when no member is shared with `other`.
    pub fn is_disjoint_rows(&self, row: &[u64]) -> bool {
        self.words.iter().zip(row).all(|(a, b)| a & b == 0)
    }

    /// True when every member is also in `other`.
    pub fn is_subset(&self, other: &ArcSet) -> bool {
        assert_eq!(self.len, other.len);
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ArcSet{{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// The set of objects crossing nothing in `x`.
///
/// Antitone in `x`, and `x` is always contained in `nc(nc(x))`.
pub fn nc(ctx: &PolygonContext, x: &ArcSet) -> ArcSet {
    assert_eq!(x.universe_len(), ctx.object_count());
    let mut out = ArcSet::empty(ctx);
    for o in 0..ctx.object_count() {
        if x.is_disjoint_rows(&ctx.rows[o]) {
            out.insert(o);
        }
    }
    out
}

/// `nc` specialised to contexts with at most 64 objects, on raw masks.
pub fn nc_mask(ctx: &PolygonContext, x: u64) -> u64 {
    debug_assert!(ctx.object_count() <= 64);
    let mut out = 0u64;
    for o in 0..ctx.object_count() {
        if ctx.rows[o][0] & x == 0 {
            out |= 1 << o;
        }
    }
    out
}

/// Rotation by 180 degrees. The identity on every canonical object: pair
/// orbits contain both member arcs, and a diameter maps onto itself with its
/// colour (a decoration, not geometry) preserved. Kept as an explicit witness
/// of the representation invariant.
pub fn rotate180(_ctx: &PolygonContext, a: ArcObject) -> ArcObject {
    a
}

/// `k` applications of the translation `τ^{-1}` in the arc model: pair orbits
/// shift by `k`, diameters shift by `k` and flip colour when `k` is odd (the
/// alternating green/red assignment along the exceptional vertices).
pub fn ar_shift(ctx: &PolygonContext, a: ArcObject, k: i64) -> ArcObject {
    let n = ctx.n;
    let two_n = 2 * n as i64;
    let shift = |v: usize, by: i64| -> usize { (v as i64 + by).rem_euclid(two_n) as usize };
    match a {
        ArcObject::PairArc(i, j) => {
            let (a, b) = canonical_pair(n, shift(i, k), shift(j, k));
            ArcObject::PairArc(a, b)
        }
        ArcObject::ColoredDiameter(i, c) => {
            let pos = (i as i64 + k).rem_euclid(n as i64) as usize;
            let color = if k.rem_euclid(2) == 1 { c.flipped() } else { c };
            ArcObject::ColoredDiameter(pos, color)
        }
    }
}
