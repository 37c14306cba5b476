//! File formats, rendering, and the command implementations behind the
//! `ptd` binary.
//!
//! A diagram file is a small JSON object naming the rank and the arcs; it
//! parses into the canonical arc set of the core library, so any member
//! chord of an orbit names the orbit and duplicates are rejected after
//! canonicalization. Emission always writes the canonical form, making
//! parse-emit-parse the same as parse, byte for byte. Verification results
//! stream out as JSON lines, one record per check, and rendering emits a
//! deterministic SVG with straight green diameters and wavy red ones.
//!
//! Every command implementation returns its process exit code: 0 for
//! success, 1 for a semantic negative such as a failed check or a
//! non-closed decomposition input, 2 for usage, parse, or budget errors.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use ptd_core::enumeration::{count_strategy, decompose, Decomposition, EnumError};
use ptd_core::geometry::{make_arc, nc, ArcError, ArcObject, ArcSet, Color, PolygonContext};
use ptd_core::ptolemy::{is_ptolemy_d, is_torsion_arcset, pt_violations, ptolemy_closure};
use ptd_core::series::{c_series, c_total, p_d, solve_pa, solve_w_system, TruncSeries};
use ptd_core::verify::{full_checks, quick_checks, Check, Status};
use ptd_core::enumeration::Kind;

/// Colour names as they appear in diagram files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColorName {
    Green,
    Red,
}

impl From<ColorName> for Color {
    fn from(c: ColorName) -> Color {
        match c {
            ColorName::Green => Color::Green,
            ColorName::Red => Color::Red,
        }
    }
}

impl From<Color> for ColorName {
    fn from(c: Color) -> ColorName {
        match c {
            Color::Green => ColorName::Green,
            Color::Red => ColorName::Red,
        }
    }
}

/// One arc entry of a diagram file: either a pair orbit named by any of its
/// member chords, or a coloured diameter named by its position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ArcEntry {
    Pair { v: [usize; 2] },
    Diameter { i: usize, color: ColorName },
}

/// The on-disk diagram format: a rank and a list of arc entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramFile {
    pub n: usize,
    pub arcs: Vec<ArcEntry>,
}

/// Why a diagram file was rejected.
#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("the rank must be at least 1")]
    RankZero,
    #[error("vertex {0} is out of range for the {1}-gon")]
    VertexOutOfRange(usize, usize),
    #[error("diameter position {0} is out of range for rank {1}")]
    PositionOutOfRange(usize, usize),
    #[error("{0}")]
    BadArc(#[from] ArcError),
    #[error("duplicate entry: {0} appears twice after canonicalization")]
    Duplicate(String),
}

/// The canonical file entry for an arc object.
fn entry_of(o: ArcObject) -> ArcEntry {
    match o {
        ArcObject::PairArc(a, b) => ArcEntry::Pair { v: [a, b] },
        ArcObject::ColoredDiameter(i, c) => ArcEntry::Diameter { i, color: c.into() },
    }
}

/// Renders one entry as compact JSON, for messages and violation listings.
fn entry_json(o: ArcObject) -> String {
    serde_json::to_string(&entry_of(o)).expect("entries serialize")
}

/// Parses and canonicalizes a diagram file.
pub fn parse_diagram(text: &str) -> Result<(PolygonContext, ArcSet), DiagramError> {
    let file: DiagramFile = serde_json::from_str(text)?;
    if file.n == 0 {
        return Err(DiagramError::RankZero);
    }
    let ctx = PolygonContext::new(file.n);
    let two_n = 2 * file.n;
    let mut set = ArcSet::empty(&ctx);
    for entry in &file.arcs {
        let object = match *entry {
            ArcEntry::Pair { v: [a, b] } => {
                for vertex in [a, b] {
                    if vertex >= two_n {
                        return Err(DiagramError::VertexOutOfRange(vertex, two_n));
                    }
                }
                make_arc(&ctx, a, b, None)?
            }
            ArcEntry::Diameter { i, color } => {
                if i >= file.n {
                    return Err(DiagramError::PositionOutOfRange(i, file.n));
                }
                ArcObject::ColoredDiameter(i, color.into())
            }
        };
        let idx = ctx.index_of(object).expect("canonical objects are indexed");
        if set.contains(idx) {
            return Err(DiagramError::Duplicate(entry_json(object)));
        }
        set.insert(idx);
    }
    Ok((ctx, set))
}

/// Emits the canonical single-line JSON form of a set, newline terminated.
pub fn emit_diagram(ctx: &PolygonContext, x: &ArcSet) -> String {
    let file = DiagramFile {
        n: ctx.n(),
        arcs: x.objects(ctx).into_iter().map(entry_of).collect(),
    };
    let mut out = serde_json::to_string(&file).expect("diagram files serialize");
    out.push('\n');
    out
}

/// Machine-readable verification outcome, one JSON line per check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportRecord {
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub status: String,
}

impl From<&Check> for ReportRecord {
    fn from(c: &Check) -> ReportRecord {
        ReportRecord {
            check: c.name.clone(),
            expected: c.expected.clone(),
            actual: c.actual.clone(),
            status: c.status.to_string(),
        }
    }
}

/// Serializable mirror of a glued polygon diagram.
#[derive(Serialize)]
struct GluedOut {
    size: usize,
    base_edge: usize,
    arcs: Vec<[usize; 2]>,
}

/// Serializable mirror of a central region decomposition.
#[derive(Serialize)]
struct DecompositionOut {
    n: usize,
    kind: String,
    k: usize,
    boundary: Vec<usize>,
    internal: Vec<ArcEntry>,
    marked_edge: usize,
    glued: Vec<GluedOut>,
}

/// Emits a decomposition as single-line JSON, newline terminated.
fn emit_decomposition(ctx: &PolygonContext, d: &Decomposition) -> String {
    let region = d.central();
    let out = DecompositionOut {
        n: region.n(),
        kind: region.kind().to_string(),
        k: region.k(),
        boundary: region.boundary().to_vec(),
        internal: region.internal().objects(ctx).into_iter().map(entry_of).collect(),
        marked_edge: d.marked_edge(),
        glued: d
            .glued()
            .iter()
            .map(|g| GluedOut {
                size: g.m(),
                base_edge: g.base_edge(),
                arcs: g.arcs().map(|(a, b)| [a, b]).collect(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string(&out).expect("decompositions serialize");
    text.push('\n');
    text
}

fn read_and_parse(path: &Path) -> Result<(PolygonContext, ArcSet), String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_diagram(&text).map_err(|e| e.to_string())
}

/// `count`: print the exact number of torsion pairs at rank `n`.
pub fn cmd_count(n: usize, method: &str) -> u8 {
    let Some(strategy) = count_strategy(method) else {
        eprintln!("unknown method: {method}");
        return 2;
    };
    match strategy.count(n) {
        Ok(v) => {
            println!("{v}");
            0
        }
        Err(e @ EnumError::BudgetExceeded { .. }) => {
            eprintln!("{e}");
            2
        }
        Err(e) => {
            eprintln!("{e}");
            2
        }
    }
}

/// `check`: report the forcing verdict with its violations, and the
/// double-complement verdict, which must agree with it.
pub fn cmd_check(path: &Path) -> u8 {
    let (ctx, x) = match read_and_parse(path) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    let ptolemy = is_ptolemy_d(&ctx, &x);
    let fixed = is_torsion_arcset(&ctx, &x);
    println!("ptolemy: {}", if ptolemy { "pass" } else { "fail" });
    if ctx.n() == 1 && !ptolemy {
        println!("    rank 1 admits exactly one diagram: both coloured diameters");
    }
    for v in pt_violations(&ctx, &x) {
        let missing: Vec<String> = v.missing.iter().map(|&o| entry_json(o)).collect();
        println!(
            "    {:?}: {} x {} missing [{}]",
            v.condition,
            entry_json(v.witnesses.0),
            entry_json(v.witnesses.1),
            missing.join(", ")
        );
    }
    println!("fixed point: {}", if fixed { "pass" } else { "fail" });
    if ptolemy != fixed {
        println!("INTERNAL ERROR: the forcing and fixed-point verdicts disagree");
        return 2;
    }
    if ptolemy {
        0
    } else {
        1
    }
}

/// `nc`: print the noncrossing complement as a canonical diagram file.
pub fn cmd_nc(path: &Path) -> u8 {
    match read_and_parse(path) {
        Ok((ctx, x)) => {
            print!("{}", emit_diagram(&ctx, &nc(&ctx, &x)));
            0
        }
        Err(e) => {
            eprintln!("{e}");
            2
        }
    }
}

/// `closure`: print the forcing closure as a canonical diagram file.
pub fn cmd_closure(path: &Path) -> u8 {
    match read_and_parse(path) {
        Ok((ctx, x)) => {
            print!("{}", emit_diagram(&ctx, &ptolemy_closure(&ctx, &x)));
            0
        }
        Err(e) => {
            eprintln!("{e}");
            2
        }
    }
}

/// `decompose`: print the central region decomposition of a closed diagram.
pub fn cmd_decompose(path: &Path) -> u8 {
    let (ctx, x) = match read_and_parse(path) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    match decompose(&ctx, &x) {
        Ok(d) => {
            print!("{}", emit_decomposition(&ctx, &d));
            0
        }
        Err(e @ EnumError::NotPtolemy) => {
            eprintln!("{e}");
            1
        }
        Err(e) => {
            eprintln!("{e}");
            2
        }
    }
}

/// Largest truncation order the series commands accept.
pub const MAX_ORDER: usize = 64;

/// Default truncation order when neither the flag nor `PTD_ORDER` is set.
pub const DEFAULT_ORDER: usize = 12;

/// Resolves the series order from the flag and the `PTD_ORDER` override.
pub fn resolve_order(flag: Option<usize>, env_value: Option<&str>) -> Result<usize, String> {
    let order = match (flag, env_value) {
        (Some(o), _) => o,
        (None, Some(raw)) => raw
            .parse::<usize>()
            .map_err(|_| format!("PTD_ORDER must be a nonnegative integer, got {raw:?}"))?,
        (None, None) => DEFAULT_ORDER,
    };
    if order > MAX_ORDER {
        return Err(format!("order {order} exceeds the maximum {MAX_ORDER}"));
    }
    Ok(order)
}

/// The series selected by `--which`.
pub fn series_by_name(which: &str, order: usize) -> Option<TruncSeries> {
    Some(match which {
        "pa" => solve_pa(order),
        "pd" => p_d(order),
        "cI" => c_series(Kind::I, order),
        "cII" => c_series(Kind::II, order),
        "cIII" => c_series(Kind::III, order),
        "w" => solve_w_system(order).3,
        "ctotal" => c_total(order),
        _ => return None,
    })
}

/// `series`: print coefficients 0..=order as a JSON array of decimal strings.
pub fn cmd_series(which: &str, order: Option<usize>) -> u8 {
    let order = match resolve_order(order, std::env::var("PTD_ORDER").ok().as_deref()) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    let Some(series) = series_by_name(which, order) else {
        eprintln!("unknown series: {which}");
        return 2;
    };
    let coeffs: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
    println!("{}", serde_json::to_string(&coeffs).expect("strings serialize"));
    0
}

/// `verify`: run the requested check suite, one JSON line per record.
pub fn cmd_verify(level: &str) -> u8 {
    let checks = match level {
        "quick" => quick_checks(),
        "full" => full_checks(),
        _ => {
            eprintln!("unknown level: {level}");
            return 2;
        }
    };
    let mut failed = false;
    for check in &checks {
        let record = ReportRecord::from(check);
        println!("{}", serde_json::to_string(&record).expect("records serialize"));
        failed |= check.status == Status::Fail;
    }
    if failed {
        1
    } else {
        0
    }
}

/// `render`: print a deterministic SVG of the diagram.
pub fn cmd_render(path: &Path, format: &str) -> u8 {
    if format != "svg" {
        eprintln!("unknown format: {format}");
        return 2;
    }
    match read_and_parse(path) {
        Ok((ctx, x)) => {
            print!("{}", render_svg(&ctx, &x));
            0
        }
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    }
}

const VIEW: f64 = 520.0;
const CENTER: f64 = 260.0;
const RADIUS: f64 = 220.0;

/// Position of a polygon vertex, with vertex 0 at the top.
fn vertex_xy(two_n: usize, v: usize) -> (f64, f64) {
    let theta = std::f64::consts::TAU * (v as f64) / (two_n as f64) - std::f64::consts::FRAC_PI_2;
    (CENTER + RADIUS * theta.cos(), CENTER + RADIUS * theta.sin())
}

/// A straight stroke between two vertices.
fn straight(out: &mut String, two_n: usize, a: usize, b: usize, color: &str) {
    let (x1, y1) = vertex_xy(two_n, a);
    let (x2, y2) = vertex_xy(two_n, b);
    writeln!(
        out,
        r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{color}" stroke-width="2" fill="none"/>"#
    )
    .expect("writing to a string succeeds");
}

/// A wavy stroke between two vertices: quadratic segments whose control
/// points alternate across the straight chord.
fn wavy(out: &mut String, two_n: usize, a: usize, b: usize, color: &str) {
    let (x1, y1) = vertex_xy(two_n, a);
    let (x2, y2) = vertex_xy(two_n, b);
    let (dx, dy) = (x2 - x1, y2 - y1);
    let len = (dx * dx + dy * dy).sqrt();
    let (px, py) = (-dy / len, dx / len);
    let segments = 8;
    let amplitude = 7.0;
    let mut d = format!("M {x1:.3} {y1:.3}");
    for s in 0..segments {
        let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
        let tc = (s as f64 + 0.5) / segments as f64;
        let te = (s as f64 + 1.0) / segments as f64;
        let cx = x1 + dx * tc + sign * amplitude * px;
        let cy = y1 + dy * tc + sign * amplitude * py;
        let ex = x1 + dx * te;
        let ey = y1 + dy * te;
        write!(d, " Q {cx:.3} {cy:.3} {ex:.3} {ey:.3}").expect("writing to a string succeeds");
    }
    writeln!(out, r#"<path d="{d}" stroke="{color}" stroke-width="2" fill="none"/>"#)
        .expect("writing to a string succeeds");
}

/// Deterministic SVG: the polygon outline, every member chord of every pair
/// orbit, diameters styled by colour (green straight, red wavy), and
/// labelled vertices.
pub fn render_svg(ctx: &PolygonContext, x: &ArcSet) -> String {
    let two_n = 2 * ctx.n();
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {VIEW:.3} {VIEW:.3}" width="{VIEW:.3}" height="{VIEW:.3}">"#
    )
    .expect("writing to a string succeeds");
    let points: Vec<String> = (0..two_n)
        .map(|v| {
            let (px, py) = vertex_xy(two_n, v);
            format!("{px:.3},{py:.3}")
        })
        .collect();
    writeln!(
        out,
        r##"<polygon points="{}" stroke="#bbbbbb" stroke-width="1" fill="none"/>"##,
        points.join(" ")
    )
    .expect("writing to a string succeeds");
    for object in x.objects(ctx) {
        match object {
            ArcObject::PairArc(..) => {
                for (a, b) in object.member_chords(ctx.n()) {
                    straight(&mut out, two_n, a, b, "black");
                }
            }
            ArcObject::ColoredDiameter(i, Color::Green) => {
                straight(&mut out, two_n, i, i + ctx.n(), "green");
            }
            ArcObject::ColoredDiameter(i, Color::Red) => {
                wavy(&mut out, two_n, i, i + ctx.n(), "red");
            }
        }
    }
    for v in 0..two_n {
        let (px, py) = vertex_xy(two_n, v);
        writeln!(out, r#"<circle cx="{px:.3}" cy="{py:.3}" r="3" fill="black"/>"#)
            .expect("writing to a string succeeds");
        let lx = CENTER + (RADIUS + 18.0) * (px - CENTER) / RADIUS;
        let ly = CENTER + (RADIUS + 18.0) * (py - CENTER) / RADIUS;
        writeln!(
            out,
            r#"<text x="{lx:.3}" y="{ly:.3}" font-size="14" text-anchor="middle" dominant-baseline="middle">{v}</text>"#
        )
        .expect("writing to a string succeeds");
    }
    out.push_str("</svg>\n");
    out
}
