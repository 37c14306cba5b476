//! Enumeration of Ptolemy diagrams and the central-region decomposition.
//!
//! Counting runs through interchangeable strategies behind one trait: an
//! exhaustive bitmask sweep over all `2^(n^2)` subsets, a pruned orderly
//! search that walks only closure-closed sets, and a generating-function
//! back end that reads the count off the series pipeline. The strategies are
//! registered by name so a caller can select one at runtime and agreement
//! between them is a meaningful cross-check rather than a tautology.
//!
//! The structural half of the module takes a diagram apart: every Ptolemy
//! collection has a central region spanned by a shortest vertex sequence
//! from some `i` to `i+n` containing one endpoint of every diameter, and the
//! rest of the diagram hangs off the region's bounding edges as type A
//! diagrams. `decompose` finds the region (verifying it is unique),
//! `recompose` glues everything back, and the direct constructions of the
//! three region kinds feed the coefficient-level cross-checks against the
//! closed-form series.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use thiserror::Error;

use crate::geometry::{
    chords_cross, make_arc, nc_mask, ArcObject, ArcSet, Color, PolygonContext,
};
use crate::ptolemy::{forced_for_pair, is_ptolemy_a, is_ptolemy_d, TypeADiagram};
use crate::series;

/// The three families of Ptolemy diagrams, read off the diameters: all
/// paired (kind I, including no diameters at all), at least two and all of
/// one colour (kind II), anything else (kind III).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    I,
    II,
    III,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::I => write!(f, "I"),
            Kind::II => write!(f, "II"),
            Kind::III => write!(f, "III"),
        }
    }
}

/// Why an enumeration operation fails.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("strategy {strategy} handles sizes up to {max}, got {got}")]
    BudgetExceeded { strategy: &'static str, got: usize, max: usize },
    #[error("the collection is not a Ptolemy diagram")]
    NotPtolemy,
    #[error("gluing data is inconsistent: {0}")]
    MalformedGluing(String),
}

/// Shared polygon contexts, keyed by `n`. Decomposition validates candidate
/// regions in smaller polygons over and over; rebuilding the crossing tables
/// each time would dominate the running time.
fn shared_context(n: usize) -> Arc<PolygonContext> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<PolygonContext>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().expect("context cache lock");
    map.entry(n).or_insert_with(|| Arc::new(PolygonContext::new(n))).clone()
}

/// Number of worker threads: `PTD_THREADS` if set, otherwise the available
/// parallelism.
fn worker_count() -> usize {
    std::env::var("PTD_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&t| t >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
}

/// Count the masks in `0..total` accepted by `test`, splitting the range
/// over worker threads and reducing deterministically.
fn parallel_mask_count(total: u64, test: impl Fn(u64) -> bool + Sync) -> u64 {
    let workers = worker_count().min(64).max(1) as u64;
    let chunk = total.div_ceil(workers);
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let test = &test;
                let lo = w * chunk;
                let hi = ((w + 1) * chunk).min(total);
                s.spawn(move || (lo..hi).filter(|&m| test(m)).count() as u64)
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).sum()
    })
}

/// Built-in strategies for counting type D diagrams directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DStrategy {
    /// Test all `2^(n^2)` subsets with the nc-nc fixed-point criterion.
    Exhaustive,
    /// Walk only the forcing-closed sets in lectic order.
    Pruned,
}

/// Number of torsion pairs in rank `n`, counted set by set. The exhaustive
/// sweep accepts `n <= 5`; the pruned walk accepts `n <= 6`.
pub fn count_type_d(n: usize, strategy: DStrategy) -> Result<u64, EnumError> {
    assert!(n >= 1);
    match strategy {
        DStrategy::Exhaustive => {
            if n > 5 {
                return Err(EnumError::BudgetExceeded { strategy: "brute", got: n, max: 5 });
            }
            let ctx = PolygonContext::new(n);
            let total = 1u64 << ctx.object_count();
            Ok(parallel_mask_count(total, |m| nc_mask(&ctx, nc_mask(&ctx, m)) == m))
        }
        DStrategy::Pruned => {
            if n > 6 {
                return Err(EnumError::BudgetExceeded { strategy: "pruned", got: n, max: 6 });
            }
            if n == 1 {
                // The 2-gon has a single diagram; the forcing scan that the
                // closure walk relies on starts at n = 2.
                return Ok(1);
            }
            let ctx = PolygonContext::new(n);
            Ok(count_closed_sets(&ForcingMasks::new(&ctx)))
        }
    }
}

/// Per-crossing-pair forced masks over a context with at most 64 objects.
struct ForcingMasks {
    full: u64,
    /// `(p, q, forced)`: when objects `p` and `q` are both present, the
    /// objects in `forced` must be present too.
    pairs: Vec<(u32, u32, u64)>,
}

impl ForcingMasks {
    fn new(ctx: &PolygonContext) -> ForcingMasks {
        let count = ctx.object_count();
        assert!(count <= 64);
        let full = if count == 64 { !0 } else { (1u64 << count) - 1 };
        let mut pairs = Vec::new();
        for p in 0..count {
            for q in (p + 1)..count {
                let Some((_, forced)) = forced_for_pair(ctx, ctx.object(p), ctx.object(q)) else {
                    continue;
                };
                let mask = forced
                    .into_iter()
                    .map(|o| 1u64 << ctx.index_of(o).expect("forced objects are canonical"))
                    .fold(0, |a, b| a | b);
                if mask != 0 {
                    pairs.push((p as u32, q as u32, mask));
                }
            }
        }
        ForcingMasks { full, pairs }
    }

    /// Least forcing-closed superset.
    fn closure(&self, mut m: u64) -> u64 {
        loop {
            let mut grew = false;
            for &(p, q, f) in &self.pairs {
                if m >> p & 1 == 1 && m >> q & 1 == 1 && f & !m != 0 {
                    m |= f;
                    grew = true;
                }
            }
            if !grew {
                return m;
            }
        }
    }
}

/// Count the closed sets of the forcing closure by the lectic-order walk:
/// from a closed set, the next one is `closure((A ∩ [0..i)) ∪ {i})` for the
/// largest `i ∉ A` that does not disturb the prefix below `i`. Every closed
/// set is visited exactly once.
fn count_closed_sets(fm: &ForcingMasks) -> u64 {
    let count = fm.full.count_ones() as usize;
    let mut a = fm.closure(0);
    let mut total = 1u64;
    while a != fm.full {
        let mut next = None;
        for i in (0..count).rev() {
            if a >> i & 1 == 1 {
                continue;
            }
            let prefix = (1u64 << i) - 1;
            let b = fm.closure((a & prefix) | (1u64 << i));
            if b & prefix == a & prefix {
                next = Some(b);
                break;
            }
        }
        a = next.expect("the full set is closed and last in lectic order");
        total += 1;
    }
    total
}

/// A named counting back end, selectable at runtime.
pub trait CountStrategy: Sync {
    /// Registry name.
    fn name(&self) -> &'static str;
    /// The number of torsion pairs in rank `n`.
    fn count(&self, n: usize) -> Result<BigInt, EnumError>;
}

struct BruteStrategy;
struct PrunedStrategy;
struct GenfuncStrategy;

impl CountStrategy for BruteStrategy {
    fn name(&self) -> &'static str {
        "brute"
    }
    fn count(&self, n: usize) -> Result<BigInt, EnumError> {
        count_type_d(n, DStrategy::Exhaustive).map(BigInt::from)
    }
}

impl CountStrategy for PrunedStrategy {
    fn name(&self) -> &'static str {
        "pruned"
    }
    fn count(&self, n: usize) -> Result<BigInt, EnumError> {
        count_type_d(n, DStrategy::Pruned).map(BigInt::from)
    }
}

impl CountStrategy for GenfuncStrategy {
    fn name(&self) -> &'static str {
        "genfunc"
    }
    fn count(&self, n: usize) -> Result<BigInt, EnumError> {
        if n > 64 {
            return Err(EnumError::BudgetExceeded { strategy: "genfunc", got: n, max: 64 });
        }
        Ok(series::p_d(n).coeff(n).clone())
    }
}

static STRATEGIES: [&dyn CountStrategy; 3] = [&BruteStrategy, &PrunedStrategy, &GenfuncStrategy];

/// All registered counting strategies.
pub fn count_strategies() -> &'static [&'static dyn CountStrategy] {
    &STRATEGIES
}

/// Look up a counting strategy by name. `exhaustive` is accepted as an
/// alias of `brute`.
pub fn count_strategy(name: &str) -> Option<&'static dyn CountStrategy> {
    match name {
        "brute" | "exhaustive" => Some(STRATEGIES[0]),
        "pruned" => Some(STRATEGIES[1]),
        "genfunc" => Some(STRATEGIES[2]),
        _ => None,
    }
}

/// Number of type A diagrams of the `m`-gon, by exhaustive sweep over arc
/// subsets. Equals coefficient `m-1` of the type A series.
pub fn count_type_a(m: usize) -> Result<u64, EnumError> {
    assert!(m >= 2);
    if m > 9 {
        return Err(EnumError::BudgetExceeded { strategy: "type-a-brute", got: m, max: 9 });
    }
    let arcs: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| ((a + 2)..m).map(move |b| (a, b)))
        .filter(|&(a, b)| b - a <= m - 2)
        .collect();
    // For each crossing pair, the connectors that are arcs must be present.
    let mut rules: Vec<(u64, u64)> = Vec::new();
    for (i, &(a, b)) in arcs.iter().enumerate() {
        for (j, &(c, d)) in arcs.iter().enumerate().skip(i + 1) {
            if !chords_cross(m, (a, b), (c, d)) {
                continue;
            }
            let mut forced = 0u64;
            for (u, v) in [(a, c), (a, d), (b, c), (b, d)] {
                let span = (v + m - u) % m;
                if (2..=m - 2).contains(&span) {
                    let key = (u.min(v), u.max(v));
                    let idx = arcs.iter().position(|&p| p == key).expect("connector is an arc");
                    forced |= 1 << idx;
                }
            }
            if forced != 0 {
                rules.push((1 << i | 1 << j, forced));
            }
        }
    }
    let total = 1u64 << arcs.len();
    Ok(parallel_mask_count(total, |mask| {
        rules.iter().all(|&(pair, f)| mask & pair != pair || f & !mask == 0)
    }))
}

/// Number of cyclic words of the given length over `{o, l, x}` in which `o`
/// and `x` are never adjacent (the first and last letters count as adjacent)
/// and `l` occurs at least twice. Matches the circular-word series
/// coefficient by coefficient.
pub fn count_words_type_ii(len: usize) -> u64 {
    assert!(len <= 14, "the word sweep is budgeted for lengths up to 14");
    if len == 0 {
        return 0;
    }
    let total = 3u64.pow(len as u32);
    let mut count = 0;
    let mut letters = vec![0u8; len];
    for word in 0..total {
        let mut w = word;
        for slot in letters.iter_mut() {
            *slot = (w % 3) as u8; // 0 = o, 1 = l, 2 = x
            w /= 3;
        }
        let ls = letters.iter().filter(|&&c| c == 1).count();
        if ls < 2 {
            continue;
        }
        let clash = (0..len).any(|i| {
            let a = letters[i];
            let b = letters[(i + 1) % len];
            a + b == 2 && a != 1
        });
        if !clash {
            count += 1;
        }
    }
    count
}

/// A central region: the part of a diagram spanned by the symmetrized
/// shortest vertex sequence, with everything strictly between boundary
/// vertices cut away.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralRegion {
    n: usize,
    /// `2(k+1)` vertices: the window representatives in increasing order
    /// starting at the smallest boundary vertex, then their antipodes.
    boundary: Vec<usize>,
    /// Objects of the original diagram with every endpoint on the boundary;
    /// this includes the bounding arcs themselves.
    internal: ArcSet,
    k: usize,
    kind: Kind,
}

impl CentralRegion {
    /// Half the vertex count of the ambient polygon.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Boundary vertices, window representatives first, antipodes second.
    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    /// The member objects of the region, in ambient coordinates.
    pub fn internal(&self) -> &ArcSet {
        &self.internal
    }

    /// Half the bounding-edge count minus one.
    pub fn k(&self) -> usize {
        self.k
    }

    /// The diameter family of the region.
    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Contract the boundary to a standalone polygon: vertex `boundary[t]`
    /// becomes vertex `t`, bounding chords become polygon edges and are
    /// dropped, diameters keep their colour. Returns the contracted context
    /// and diagram.
    pub fn contract(&self, ctx: &PolygonContext) -> (Arc<PolygonContext>, ArcSet) {
        let m = self.k + 1;
        let dm = shared_context(m);
        let pos = position_map(2 * self.n, &self.boundary);
        let mut out = ArcSet::empty(&dm);
        for idx in self.internal.indices() {
            if let Some(obj) = contract_object(&dm, &pos, ctx.object(idx), self.n, m) {
                out.insert(dm.index_of(obj).expect("contracted objects are canonical"));
            }
        }
        (dm, out)
    }
}

/// Vertex-to-boundary-position lookup; `usize::MAX` marks non-boundary.
fn position_map(two_n: usize, boundary: &[usize]) -> Vec<usize> {
    let mut pos = vec![usize::MAX; two_n];
    for (t, &v) in boundary.iter().enumerate() {
        pos[v] = t;
    }
    pos
}

/// Image of one object under boundary contraction; `None` when it maps to a
/// polygon edge of the contracted polygon (a bounding chord).
fn contract_object(
    dm: &PolygonContext,
    pos: &[usize],
    obj: ArcObject,
    n: usize,
    m: usize,
) -> Option<ArcObject> {
    match obj {
        ArcObject::PairArc(..) => {
            let (a, b) = obj.member_chords(n)[0];
            let (pa, pb) = (pos[a], pos[b]);
            let gap = (pb + 2 * m - pa) % (2 * m);
            if gap == 1 || gap == 2 * m - 1 {
                return None;
            }
            Some(make_arc(dm, pa, pb, None).expect("contracted pair orbits stay pair orbits"))
        }
        ArcObject::ColoredDiameter(p, c) => {
            let pa = pos[p];
            Some(make_arc(dm, pa, pa + m, Some(c)).expect("diameters contract to diameters"))
        }
    }
}

/// A full decomposition: the central region plus the type A diagrams glued
/// clockwise around it, starting from the sector that carries the polygon
/// edge `{0,1}`; `marked_edge` is that edge's local index in the first glued
/// diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    central: CentralRegion,
    glued: Vec<TypeADiagram>,
    marked_edge: usize,
}

impl Decomposition {
    /// The central region.
    pub fn central(&self) -> &CentralRegion {
        &self.central
    }

    /// The glued diagrams, clockwise from the one holding polygon edge `{0,1}`.
    pub fn glued(&self) -> &[TypeADiagram] {
        &self.glued
    }

    /// Local index of polygon edge `{0,1}` inside the first glued diagram.
    pub fn marked_edge(&self) -> usize {
        self.marked_edge
    }
}

/// Diameter colours present at each position of `x`.
fn diameter_sides(ctx: &PolygonContext, x: &ArcSet) -> Vec<(bool, bool)> {
    let mut sides = vec![(false, false); ctx.n()];
    for idx in x.indices() {
        if let ArcObject::ColoredDiameter(p, c) = ctx.object(idx) {
            match c {
                Color::Green => sides[p].0 = true,
                Color::Red => sides[p].1 = true,
            }
        }
    }
    sides
}

/// The kind of a diagram already known to be Ptolemy.
fn kind_of(ctx: &PolygonContext, x: &ArcSet) -> Kind {
    let sides = diameter_sides(ctx, x);
    let occupied: Vec<(bool, bool)> =
        sides.into_iter().filter(|&(g, r)| g || r).collect();
    if occupied.iter().all(|&(g, r)| g && r) {
        return Kind::I;
    }
    let all_green = occupied.iter().all(|&(g, r)| g && !r);
    let all_red = occupied.iter().all(|&(g, r)| r && !g);
    if (all_green || all_red) && occupied.len() >= 2 {
        Kind::II
    } else {
        Kind::III
    }
}

/// Classify a Ptolemy diagram by its diameters: kind I when every occupied
/// position carries both colours (in particular with no diameters at all),
/// kind II when there are at least two diameters and all share one colour,
/// kind III otherwise.
pub fn classify_kind(ctx: &PolygonContext, x: &ArcSet) -> Result<Kind, EnumError> {
    if !is_ptolemy_d(ctx, x) {
        return Err(EnumError::NotPtolemy);
    }
    Ok(kind_of(ctx, x))
}

/// All Ptolemy diagrams of the context, by exhaustive sweep. Sized for small
/// ranks; the object count must stay within a single mask word.
pub fn enumerate_ptolemy(ctx: &PolygonContext) -> Vec<ArcSet> {
    let count = ctx.object_count();
    assert!(count <= 25, "exhaustive enumeration is budgeted for n <= 5");
    (0u64..1 << count)
        .filter_map(|m| {
            let x = ArcSet::from_mask(ctx, m);
            is_ptolemy_d(ctx, &x).then_some(x)
        })
        .collect()
}

/// Find the central region of a Ptolemy diagram, verify it is unique across
/// all admissible starting vertices, and read off the glued type A diagrams.
pub fn decompose(ctx: &PolygonContext, x: &ArcSet) -> Result<Decomposition, EnumError> {
    if !is_ptolemy_d(ctx, x) {
        return Err(EnumError::NotPtolemy);
    }
    let n = ctx.n();
    let two_n = 2 * n;
    let sides = diameter_sides(ctx, x);
    let diam_positions: Vec<usize> =
        (0..n).filter(|&p| sides[p].0 || sides[p].1).collect();

    // Candidate starting vertices: both endpoints of every diameter of x,
    // or of every geometric diameter crossed by nothing when x has none.
    let starts: Vec<usize> = if diam_positions.is_empty() {
        (0..n)
            .filter(|&p| {
                let idx = ctx
                    .index_of(ArcObject::ColoredDiameter(p, Color::Green))
                    .expect("diameters are canonical");
                x.is_disjoint_rows(ctx.crossing_row(idx))
            })
            .flat_map(|p| [p, p + n])
            .collect()
    } else {
        diam_positions.iter().flat_map(|&p| [p, p + n]).collect()
    };
    assert!(!starts.is_empty(), "some diameter is crossed by nothing");

    let mut region: Option<CentralRegion> = None;
    for &start in &starts {
        let found = shortest_region_from(ctx, x, &sides, start)
            .expect("the all-edges sequence always yields a region");
        match &region {
            None => region = Some(found),
            Some(r) => assert_eq!(*r, found, "the central region is independent of the start"),
        }
    }
    let region = region.expect("at least one start");
    let m = region.k + 1;

    // No member chord may cross a bounding chord.
    for t in 0..2 * m {
        let u = region.boundary[t];
        let v = region.boundary[(t + 1) % (2 * m)];
        for idx in x.indices() {
            for chord in ctx.object(idx).member_chords(n) {
                assert!(
                    !chords_cross(two_n, (u, v), chord),
                    "bounding edges are uncrossed"
                );
            }
        }
    }
    assert_eq!(region.kind, kind_of(ctx, x), "the region inherits the diagram's kind");

    // Sectors between consecutive boundary vertices, counterclockwise.
    let sectors: Vec<TypeADiagram> = (0..2 * m)
        .map(|t| {
            let u = region.boundary[t];
            let v = region.boundary[(t + 1) % (2 * m)];
            let s = (v + two_n - u) % two_n;
            sector_diagram(ctx, x, u, s)
        })
        .collect();
    for d in &sectors {
        assert!(is_ptolemy_a(d), "each sector is a type A Ptolemy diagram");
    }
    let t0 = (0..2 * m)
        .find(|&t| {
            let u = region.boundary[t];
            let v = region.boundary[(t + 1) % (2 * m)];
            let s = (v + two_n - u) % two_n;
            (two_n - u) % two_n < s
        })
        .expect("the sectors tile every polygon edge");
    let marked_edge = (two_n - region.boundary[t0]) % two_n;
    let glued: Vec<TypeADiagram> =
        (0..m).map(|j| sectors[(t0 + 2 * m - j) % (2 * m)].clone()).collect();

    Ok(Decomposition { central: region, glued, marked_edge })
}

/// The type A diagram of the sector spanning `[u, u+s]`: every member chord
/// of `x` with both endpoints in that window, in local coordinates, except
/// the window chord itself.
fn sector_diagram(ctx: &PolygonContext, x: &ArcSet, u: usize, s: usize) -> TypeADiagram {
    let n = ctx.n();
    let two_n = 2 * n;
    let mut arcs = Vec::new();
    for idx in x.indices() {
        for (a, b) in ctx.object(idx).member_chords(n) {
            let oa = (a + two_n - u) % two_n;
            let ob = (b + two_n - u) % two_n;
            if oa <= s && ob <= s && !(oa.min(ob) == 0 && oa.max(ob) == s) {
                arcs.push((oa, ob));
            }
        }
    }
    TypeADiagram::new(s + 1, arcs, s).expect("window chords are sector arcs")
}

/// The shortest valid region from one starting vertex: vertex sequences are
/// enumerated by length and lexicographic order; a sequence is valid when
/// its contracted region is itself a Ptolemy diagram. All valid sequences of
/// the minimal length must produce one and the same region.
fn shortest_region_from(
    ctx: &PolygonContext,
    x: &ArcSet,
    sides: &[(bool, bool)],
    start: usize,
) -> Option<CentralRegion> {
    let n = ctx.n();
    // Lifts of the diameter positions into [start, start+n), in increasing
    // order; a step may not jump over an unvisited one.
    let mut required: Vec<usize> = (0..n)
        .filter(|&p| sides[p].0 || sides[p].1)
        .map(|p| start + (p + 2 * n - start) % n)
        .collect();
    required.sort_unstable();

    for m in 1..=n {
        let mut found: Option<CentralRegion> = None;
        let mut path = vec![start];
        walk_paths(ctx, x, sides, start, &required, m, &mut path, &mut |p| {
            if let Some(region) = region_if_valid(ctx, x, p) {
                match &found {
                    None => found = Some(region),
                    Some(r) => assert_eq!(
                        *r, region,
                        "same-length sequences give one region"
                    ),
                }
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Depth-first enumeration of admissible vertex sequences with exactly
/// `steps_left` steps remaining, in lexicographic order.
fn walk_paths(
    ctx: &PolygonContext,
    x: &ArcSet,
    sides: &[(bool, bool)],
    start: usize,
    required: &[usize],
    steps_left: usize,
    path: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    let n = ctx.n();
    let two_n = 2 * n;
    let v = *path.last().expect("paths start non-empty");
    let target = start + n;
    if steps_left == 0 {
        if v == target {
            emit(path);
        }
        return;
    }
    let next_required = required.iter().copied().find(|&r| r > v);
    for w in (v + 1)..=target {
        if target - w < steps_left - 1 {
            break;
        }
        if let Some(r) = next_required {
            if w > r {
                break;
            }
        }
        let s = w - v;
        let allowed = if s == 1 {
            true
        } else if s == n {
            let p = v % n;
            sides[p].0 || sides[p].1
        } else {
            match make_arc(ctx, v % two_n, w % two_n, None) {
                Ok(obj) => x.contains(ctx.index_of(obj).expect("arcs are canonical")),
                Err(_) => unreachable!("1 < s < n never names an edge or diameter"),
            }
        };
        if !allowed {
            continue;
        }
        path.push(w);
        walk_paths(ctx, x, sides, start, required, steps_left - 1, path, emit);
        path.pop();
    }
}

/// Build the normalized region for a complete vertex sequence if its
/// contraction is a Ptolemy diagram.
fn region_if_valid(ctx: &PolygonContext, x: &ArcSet, vpath: &[usize]) -> Option<CentralRegion> {
    let n = ctx.n();
    let two_n = 2 * n;
    let m = vpath.len() - 1;

    // Normalize: represent the boundary from its smallest vertex. The
    // boundary set is closed under the half turn, so exactly one vertex of
    // each antipodal pair lands in the window starting there.
    let all: Vec<usize> = vpath[..m]
        .iter()
        .flat_map(|&v| [v % two_n, (v + n) % two_n])
        .collect();
    let vmin = *all.iter().min().expect("nonempty boundary");
    let mut window: Vec<usize> = all
        .iter()
        .copied()
        .filter(|&v| (v + two_n - vmin) % two_n < n)
        .collect();
    window.sort_unstable();
    let mut boundary = window.clone();
    boundary.extend(window.iter().map(|&v| (v + n) % two_n));

    let on_boundary = {
        let mut flags = vec![false; two_n];
        for &v in &boundary {
            flags[v] = true;
        }
        flags
    };
    let mut internal = ArcSet::empty(ctx);
    for idx in x.indices() {
        let inside = ctx
            .object(idx)
            .member_chords(n)
            .into_iter()
            .all(|(a, b)| on_boundary[a] && on_boundary[b]);
        if inside {
            internal.insert(idx);
        }
    }

    let pos = position_map(two_n, &boundary);
    let dm = shared_context(m);
    let mut contracted = ArcSet::empty(&dm);
    for idx in internal.indices() {
        if let Some(obj) = contract_object(&dm, &pos, ctx.object(idx), n, m) {
            contracted.insert(dm.index_of(obj).expect("contracted objects are canonical"));
        }
    }
    if !is_ptolemy_d(&dm, &contracted) {
        return None;
    }
    let kind = kind_of(&dm, &contracted);
    Some(CentralRegion { n, boundary, internal, k: m - 1, kind })
}

/// Glue a decomposition back together: the central region's objects plus
/// every glued diagram's arcs mapped through its sector. Validates the
/// boundary shape, the diagram sizes against the boundary's step sizes, and
/// the marked edge, and fails with `MalformedGluing` on any mismatch.
pub fn recompose(ctx: &PolygonContext, d: &Decomposition) -> Result<ArcSet, EnumError> {
    let n = ctx.n();
    let two_n = 2 * n;
    let malformed = |msg: String| EnumError::MalformedGluing(msg);
    if d.central.n != n {
        return Err(malformed(format!("region is for n={}, context has n={n}", d.central.n)));
    }
    let boundary = &d.central.boundary;
    let m = d.central.k + 1;
    if boundary.len() != 2 * m {
        return Err(malformed(format!(
            "boundary has {} vertices, expected {}",
            boundary.len(),
            2 * m
        )));
    }
    if boundary.iter().any(|&v| v >= two_n) {
        return Err(malformed("boundary vertex out of range".into()));
    }
    for t in 0..m {
        if boundary[t + m] != (boundary[t] + n) % two_n {
            return Err(malformed("boundary second half is not the antipodal image".into()));
        }
        if t + 1 < m && boundary[t] >= boundary[t + 1] {
            return Err(malformed("boundary window is not increasing".into()));
        }
    }
    if boundary[m - 1] >= boundary[0] + n {
        return Err(malformed("boundary window exceeds a half turn".into()));
    }
    if d.central.internal.universe_len() != ctx.object_count() {
        return Err(malformed("region objects sized for a different context".into()));
    }
    let on_boundary = {
        let mut flags = vec![false; two_n];
        for &v in boundary {
            flags[v] = true;
        }
        flags
    };
    for idx in d.central.internal.indices() {
        let ok = ctx
            .object(idx)
            .member_chords(n)
            .into_iter()
            .all(|(a, b)| on_boundary[a] && on_boundary[b]);
        if !ok {
            return Err(malformed("region object leaves the boundary".into()));
        }
    }
    if d.glued.len() != m {
        return Err(malformed(format!("{} glued diagrams, expected {m}", d.glued.len())));
    }
    let step = |t: usize| {
        let u = boundary[t];
        let v = boundary[(t + 1) % (2 * m)];
        (u, (v + two_n - u) % two_n)
    };
    let t0 = (0..2 * m)
        .find(|&t| {
            let (u, s) = step(t);
            (two_n - u) % two_n < s
        })
        .expect("steps tile every polygon edge");
    let (u0, _) = step(t0);
    if d.marked_edge != (two_n - u0) % two_n {
        return Err(malformed("marked edge disagrees with the boundary".into()));
    }

    let mut out = d.central.internal.clone();
    for (j, diagram) in d.glued.iter().enumerate() {
        let (u, s) = step((t0 + 2 * m - j) % (2 * m));
        if diagram.m() != s + 1 {
            return Err(malformed(format!(
                "glued diagram {j} is an {}-gon, sector needs {}",
                diagram.m(),
                s + 1
            )));
        }
        if diagram.base_edge() != s {
            return Err(malformed(format!(
                "glued diagram {j} must use the window chord (edge {s}) as base"
            )));
        }
        for (a, b) in diagram.arcs() {
            let ga = (u + a) % two_n;
            let gb = (u + b) % two_n;
            let obj = make_arc(ctx, ga, gb, None).expect("sector arcs are pair arcs");
            out.insert(ctx.index_of(obj).expect("arcs are canonical"));
        }
    }
    Ok(out)
}

/// Count central regions with `2k+2` bounding edges of one kind by building
/// each of them in the `(2k+2)`-gon and checking that it is a Ptolemy
/// diagram of the right kind and its own central region.
pub fn count_central_regions(k: usize, kind: Kind) -> u64 {
    assert!(k <= 8, "region construction is budgeted for k <= 8");
    let m = k + 1;
    let ctx = shared_context(m);
    let mut regions: HashSet<ArcSet> = HashSet::new();
    match kind {
        Kind::I => {
            if k == 0 {
                regions.insert(ArcSet::full(&ctx));
            } else {
                regions.insert(ArcSet::empty(&ctx));
                regions.insert(ArcSet::full(&ctx));
            }
        }
        Kind::II => {
            for (letters, color) in kind_ii_words(m) {
                regions.insert(kind_ii_region(&ctx, &letters, color));
            }
        }
        Kind::III => {
            if k >= 1 {
                for p in 0..m {
                    for c in [Color::Green, Color::Red] {
                        regions.insert(singleton_diameter_region(&ctx, p, c));
                        regions.insert(paired_plus_rest_region(&ctx, p, c));
                    }
                }
                if k == 1 {
                    for c in [Color::Green, Color::Red] {
                        regions.insert(ArcSet::from_objects(
                            &ctx,
                            [
                                ArcObject::ColoredDiameter(0, c),
                                ArcObject::ColoredDiameter(1, c.flipped()),
                            ],
                        ));
                    }
                }
            }
        }
    }
    for x in &regions {
        assert_own_region(&ctx, x, k, kind);
    }
    regions.len() as u64
}

/// Valid kind II words of length `m` with a colour choice.
fn kind_ii_words(m: usize) -> Vec<(Vec<u8>, Color)> {
    let mut out = Vec::new();
    if m < 2 {
        return out;
    }
    let total = 3u64.pow(m as u32);
    for word in 0..total {
        let mut letters = vec![0u8; m];
        let mut w = word;
        for slot in letters.iter_mut() {
            *slot = (w % 3) as u8;
            w /= 3;
        }
        if letters.iter().filter(|&&c| c == 1).count() < 2 {
            continue;
        }
        let clash = (0..m).any(|i| {
            let a = letters[i];
            let b = letters[(i + 1) % m];
            a + b == 2 && a != 1
        });
        if clash {
            continue;
        }
        for c in [Color::Green, Color::Red] {
            out.push((letters.clone(), c));
        }
    }
    out
}

/// The region of a kind II word: diameters of one colour at the `l` and `x`
/// positions, plus every pair orbit with all endpoints on those diameters
/// that crosses at least one `x` diameter and no `l` diameter.
fn kind_ii_region(ctx: &PolygonContext, letters: &[u8], color: Color) -> ArcSet {
    let m = ctx.n();
    let mut x = ArcSet::empty(ctx);
    let mut on_diameter = vec![false; m];
    let mut l_rows: Vec<usize> = Vec::new();
    let mut x_rows: Vec<usize> = Vec::new();
    for (p, &letter) in letters.iter().enumerate() {
        if letter == 0 {
            continue;
        }
        on_diameter[p] = true;
        x.insert(
            ctx.index_of(ArcObject::ColoredDiameter(p, color)).expect("diameters are canonical"),
        );
        let idx = ctx
            .index_of(ArcObject::ColoredDiameter(p, Color::Green))
            .expect("diameters are canonical");
        if letter == 1 {
            l_rows.push(idx);
        } else {
            x_rows.push(idx);
        }
    }
    for (idx, &obj) in ctx.objects().iter().enumerate() {
        let ArcObject::PairArc(..) = obj else { continue };
        let (a, b) = obj.member_chords(m)[0];
        if !on_diameter[a % m] || !on_diameter[b % m] {
            continue;
        }
        let row = ctx.crossing_row(idx);
        let hits = |other: usize| row[other / 64] >> (other % 64) & 1 == 1;
        if l_rows.iter().any(|&l| hits(l)) || !x_rows.iter().any(|&q| hits(q)) {
            continue;
        }
        x.insert(idx);
    }
    x
}

/// The kind III region with a single unpaired diameter.
fn singleton_diameter_region(ctx: &PolygonContext, p: usize, c: Color) -> ArcSet {
    ArcSet::from_objects(ctx, [ArcObject::ColoredDiameter(p, c)])
}

/// The kind III region with a paired diameter at `p`, all other positions in
/// one colour, and every pair orbit with a member on the closed side
/// `[p, p+m]`.
fn paired_plus_rest_region(ctx: &PolygonContext, p: usize, c: Color) -> ArcSet {
    let m = ctx.n();
    let two_m = 2 * m;
    let mut x = ArcSet::empty(ctx);
    for q in 0..m {
        if q == p {
            x.insert(ctx.index_of(ArcObject::ColoredDiameter(q, Color::Green)).unwrap());
            x.insert(ctx.index_of(ArcObject::ColoredDiameter(q, Color::Red)).unwrap());
        } else {
            x.insert(ctx.index_of(ArcObject::ColoredDiameter(q, c)).unwrap());
        }
    }
    for (idx, &obj) in ctx.objects().iter().enumerate() {
        let ArcObject::PairArc(..) = obj else { continue };
        let in_side = obj.member_chords(m).into_iter().any(|(a, b)| {
            let oa = (a + two_m - p) % two_m;
            let ob = (b + two_m - p) % two_m;
            oa <= m && ob <= m
        });
        if in_side {
            x.insert(idx);
        }
    }
    x
}

/// A constructed region must be Ptolemy, of the claimed kind, and its own
/// central region with `2k+2` bounding edges.
fn assert_own_region(ctx: &PolygonContext, x: &ArcSet, k: usize, kind: Kind) {
    assert!(is_ptolemy_d(ctx, x), "constructed regions are Ptolemy");
    assert_eq!(kind_of(ctx, x), kind, "constructed regions have the claimed kind");
    let d = decompose(ctx, x).expect("constructed regions decompose");
    assert_eq!(d.central().k(), k, "constructed regions span the whole polygon");
    assert_eq!(d.central().boundary().len(), 2 * (k + 1));
    assert_eq!(d.central().internal(), x, "constructed regions are their own region");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::nc;
    use crate::ptolemy::ptolemy_closure;
    use Color::{Green, Red};

    fn pair(ctx: &PolygonContext, i: usize, j: usize) -> ArcObject {
        make_arc(ctx, i, j, None).unwrap()
    }

    #[test]
    fn brute_counts_match_published_values() {
        assert_eq!(count_type_d(1, DStrategy::Exhaustive), Ok(1));
        assert_eq!(count_type_d(2, DStrategy::Exhaustive), Ok(16));
        assert_eq!(count_type_d(3, DStrategy::Exhaustive), Ok(82));
        assert_eq!(count_type_d(4, DStrategy::Exhaustive), Ok(500));
    }

    #[test]
    fn pruned_counts_match_brute() {
        for n in 1..=4 {
            assert_eq!(
                count_type_d(n, DStrategy::Pruned),
                count_type_d(n, DStrategy::Exhaustive),
                "n={n}"
            );
        }
        assert_eq!(count_type_d(5, DStrategy::Pruned), Ok(3084));
    }

    #[test]
    fn budgets_are_enforced() {
        assert!(matches!(
            count_type_d(6, DStrategy::Exhaustive),
            Err(EnumError::BudgetExceeded { max: 5, .. })
        ));
        assert!(matches!(
            count_type_d(7, DStrategy::Pruned),
            Err(EnumError::BudgetExceeded { max: 6, .. })
        ));
        assert!(matches!(
            count_type_a(10),
            Err(EnumError::BudgetExceeded { max: 9, .. })
        ));
    }

    #[test]
    fn strategy_registry_resolves_names() {
        assert_eq!(count_strategy("brute").unwrap().name(), "brute");
        assert_eq!(count_strategy("exhaustive").unwrap().name(), "brute");
        assert_eq!(count_strategy("pruned").unwrap().name(), "pruned");
        assert_eq!(count_strategy("genfunc").unwrap().name(), "genfunc");
        assert!(count_strategy("magic").is_none());
        assert_eq!(count_strategies().len(), 3);
    }

    #[test]
    fn registry_strategies_agree_on_small_ranks() {
        for n in 1..=4 {
            let brute = count_strategy("brute").unwrap().count(n).unwrap();
            let pruned = count_strategy("pruned").unwrap().count(n).unwrap();
            let genfunc = count_strategy("genfunc").unwrap().count(n).unwrap();
            assert_eq!(brute, pruned, "n={n}");
            assert_eq!(brute, genfunc, "n={n}");
        }
    }

    #[test]
    fn genfunc_reaches_past_the_sweeps() {
        assert_eq!(
            count_strategy("genfunc").unwrap().count(6).unwrap(),
            BigInt::from(19400)
        );
    }

    #[test]
    fn type_a_counts() {
        assert_eq!(count_type_a(2), Ok(1));
        assert_eq!(count_type_a(3), Ok(1));
        assert_eq!(count_type_a(4), Ok(4));
        assert_eq!(count_type_a(5), Ok(17));
        assert_eq!(count_type_a(6), Ok(82));
        assert_eq!(count_type_a(7), Ok(422));
    }

    #[test]
    fn word_counts() {
        assert_eq!(count_words_type_ii(0), 0);
        assert_eq!(count_words_type_ii(1), 0);
        assert_eq!(count_words_type_ii(2), 1);
        assert_eq!(count_words_type_ii(3), 7);
        assert_eq!(count_words_type_ii(4), 25);
        assert_eq!(count_words_type_ii(5), 71);
        assert_eq!(count_words_type_ii(6), 185);
    }

    #[test]
    fn central_region_counts() {
        assert_eq!(count_central_regions(0, Kind::I), 1);
        assert_eq!(count_central_regions(0, Kind::II), 0);
        assert_eq!(count_central_regions(0, Kind::III), 0);
        for k in 1..=3 {
            assert_eq!(count_central_regions(k, Kind::I), 2, "kind I, k={k}");
        }
        assert_eq!(count_central_regions(1, Kind::II), 2);
        assert_eq!(count_central_regions(2, Kind::II), 14);
        assert_eq!(count_central_regions(3, Kind::II), 50);
        assert_eq!(count_central_regions(1, Kind::III), 10);
        assert_eq!(count_central_regions(2, Kind::III), 12);
        assert_eq!(count_central_regions(3, Kind::III), 16);
    }

    #[test]
    fn classify_kind_examples() {
        let ctx = PolygonContext::new(3);
        let none = ArcSet::from_objects(&ctx, [pair(&ctx, 0, 2)]);
        assert_eq!(classify_kind(&ctx, &none), Ok(Kind::I));

        let two_green = ArcSet::from_objects(
            &ctx,
            [
                ArcObject::ColoredDiameter(0, Green),
                ArcObject::ColoredDiameter(1, Green),
            ],
        );
        assert_eq!(ptolemy_closure(&ctx, &two_green), two_green);
        assert_eq!(classify_kind(&ctx, &two_green), Ok(Kind::II));

        let single = ArcSet::from_objects(&ctx, [ArcObject::ColoredDiameter(2, Red)]);
        assert_eq!(classify_kind(&ctx, &single), Ok(Kind::III));

        let mixed = ArcSet::from_objects(
            &ctx,
            [
                ArcObject::ColoredDiameter(0, Green),
                ArcObject::ColoredDiameter(1, Red),
            ],
        );
        assert_eq!(classify_kind(&ctx, &mixed), Err(EnumError::NotPtolemy));
    }

    #[test]
    fn decompose_empty_diagram() {
        let ctx = PolygonContext::new(2);
        let d = decompose(&ctx, &ArcSet::empty(&ctx)).unwrap();
        assert_eq!(d.central().boundary(), &[0, 1, 2, 3]);
        assert!(d.central().internal().is_empty());
        assert_eq!(d.central().k(), 1);
        assert_eq!(d.central().kind(), Kind::I);
        assert_eq!(d.glued().len(), 2);
        for g in d.glued() {
            assert_eq!(g.m(), 2);
            assert_eq!(g.arc_count(), 0);
        }
        assert_eq!(d.marked_edge(), 0);
    }

    #[test]
    fn decompose_all_diameters() {
        let ctx = PolygonContext::new(2);
        let all = ArcSet::from_objects(
            &ctx,
            [
                ArcObject::ColoredDiameter(0, Green),
                ArcObject::ColoredDiameter(0, Red),
                ArcObject::ColoredDiameter(1, Green),
                ArcObject::ColoredDiameter(1, Red),
            ],
        );
        let d = decompose(&ctx, &all).unwrap();
        assert_eq!(d.central().k(), 1);
        assert_eq!(d.central().kind(), Kind::I);
        assert_eq!(*d.central().internal(), all);
        assert!(d.glued().iter().all(|g| g.m() == 2));
    }

    #[test]
    fn decompose_two_gon() {
        let ctx = PolygonContext::new(1);
        let d = decompose(&ctx, &ArcSet::full(&ctx)).unwrap();
        assert_eq!(d.central().k(), 0);
        assert_eq!(d.central().kind(), Kind::I);
        assert_eq!(d.central().boundary(), &[0, 1]);
        assert_eq!(d.glued().len(), 1);
        assert_eq!(d.glued()[0].m(), 2);
    }

    #[test]
    fn decompose_rejects_non_ptolemy() {
        let ctx = PolygonContext::new(3);
        let bad = ArcSet::from_objects(
            &ctx,
            [
                ArcObject::ColoredDiameter(0, Green),
                ArcObject::ColoredDiameter(1, Red),
            ],
        );
        assert_eq!(decompose(&ctx, &bad).unwrap_err(), EnumError::NotPtolemy);
    }

    #[test]
    fn paired_diameter_gets_the_short_region() {
        // A paired diameter with a free arc hanging off it: the region is
        // the degenerate 2-gon and the arc lives in a glued sector.
        let ctx = PolygonContext::new(3);
        let x = ArcSet::from_objects(
            &ctx,
            [
                ArcObject::ColoredDiameter(0, Green),
                ArcObject::ColoredDiameter(0, Red),
                pair(&ctx, 1, 3),
            ],
        );
        assert!(is_ptolemy_d(&ctx, &x));
        let d = decompose(&ctx, &x).unwrap();
        assert_eq!(d.central().k(), 0);
        assert_eq!(d.central().boundary(), &[0, 3]);
        assert_eq!(d.glued().len(), 1);
        assert_eq!(d.glued()[0].m(), 4);
        assert_eq!(d.glued()[0].arc_count(), 1);
        assert_eq!(recompose(&ctx, &d).unwrap(), x);
    }

    #[test]
    fn single_unpaired_diameter_gets_the_full_region() {
        let ctx = PolygonContext::new(2);
        let x = ArcSet::from_objects(&ctx, [ArcObject::ColoredDiameter(0, Green)]);
        let d = decompose(&ctx, &x).unwrap();
        assert_eq!(d.central().k(), 1);
        assert_eq!(d.central().kind(), Kind::III);
        assert_eq!(d.central().boundary(), &[0, 1, 2, 3]);
    }

    #[test]
    fn round_trip_small_ranks() {
        for n in 1..=3 {
            let ctx = PolygonContext::new(n);
            for x in enumerate_ptolemy(&ctx) {
                let d = decompose(&ctx, &x).unwrap();
                assert_eq!(recompose(&ctx, &d).unwrap(), x, "n={n} x={x:?}");
            }
        }
    }

    #[test]
    fn kinds_partition_and_survive_nc() {
        for n in 1..=3 {
            let ctx = PolygonContext::new(n);
            let mut per_kind = [0u64; 3];
            let all = enumerate_ptolemy(&ctx);
            for x in &all {
                let k = classify_kind(&ctx, x).unwrap();
                per_kind[match k {
                    Kind::I => 0,
                    Kind::II => 1,
                    Kind::III => 2,
                }] += 1;
                assert_eq!(classify_kind(&ctx, &nc(&ctx, x)), Ok(k));
            }
            assert_eq!(per_kind.iter().sum::<u64>(), all.len() as u64);
        }
    }

    #[test]
    fn histogram_identity_small_ranks() {
        // Summing region counts times glued-diagram configurations, with the
        // marked-edge factor on the first sector, rebuilds the full count.
        for n in 1..=4usize {
            let a: Vec<u64> = (0..=n)
                .map(|s| if s == 0 { 0 } else { count_type_a(s + 1).unwrap() })
                .collect();
            let mut total = 0u64;
            for k in 0..n {
                let c_k: u64 = [Kind::I, Kind::II, Kind::III]
                    .into_iter()
                    .map(|kind| count_central_regions(k, kind))
                    .sum();
                if c_k == 0 {
                    continue;
                }
                total += c_k * composition_sum(n, k + 1, &a);
            }
            assert_eq!(total, count_type_d(n, DStrategy::Exhaustive).unwrap(), "n={n}");
        }
    }

    /// Sum over compositions `s_0 + ... + s_k = n` of
    /// `s_0 a(s_0) a(s_1) ... a(s_k)`.
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

    #[test]
    fn recompose_flags_malformed_gluing() {
        let ctx = PolygonContext::new(2);
        let d = decompose(&ctx, &ArcSet::empty(&ctx)).unwrap();
        // Wrong number of glued diagrams.
        let broken = Decomposition {
            central: d.central().clone(),
            glued: vec![d.glued()[0].clone()],
            marked_edge: d.marked_edge(),
        };
        assert!(matches!(
            recompose(&ctx, &broken),
            Err(EnumError::MalformedGluing(_))
        ));
        // Wrong marked edge.
        let broken = Decomposition {
            central: d.central().clone(),
            glued: d.glued().to_vec(),
            marked_edge: d.marked_edge() + 1,
        };
        assert!(matches!(
            recompose(&ctx, &broken),
            Err(EnumError::MalformedGluing(_))
        ));
        // Wrong polygon size in a glued diagram.
        let broken = Decomposition {
            central: d.central().clone(),
            glued: vec![TypeADiagram::new(3, [], 2).unwrap(), d.glued()[1].clone()],
            marked_edge: d.marked_edge(),
        };
        assert!(matches!(
            recompose(&ctx, &broken),
            Err(EnumError::MalformedGluing(_))
        ));
    }

    #[test]
    fn x2_is_kind_three() {
        let ctx = PolygonContext::new(5);
        let x2 = ArcSet::from_objects(
            &ctx,
            [
                pair(&ctx, 0, 2),
                pair(&ctx, 0, 6),
                pair(&ctx, 0, 7),
                ArcObject::ColoredDiameter(0, Green),
                ArcObject::ColoredDiameter(1, Green),
                ArcObject::ColoredDiameter(2, Green),
                ArcObject::ColoredDiameter(0, Red),
            ],
        );
        assert_eq!(classify_kind(&ctx, &x2), Ok(Kind::III));
        let d = decompose(&ctx, &x2).unwrap();
        assert_eq!(recompose(&ctx, &d).unwrap(), x2);
    }
}
