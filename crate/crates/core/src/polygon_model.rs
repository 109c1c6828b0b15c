//! Input regions, cut descriptors and the codeword text format.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_coords::{fmt_rational, parse_rational, EpsCoord, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    /// Lexicographic `(x, y)` order, the sweep order of the sheared plane.
    pub fn key_cmp(&self, other: &Point) -> Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", fmt_rational(&self.x), fmt_rational(&self.y))
    }
}

/// Twice the signed area of `(a, b, c)`; positive for a left turn.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub p: Point,
    pub q: Point,
}

impl Segment {
    pub fn min_x(&self) -> &Rational {
        if self.p.x <= self.q.x { &self.p.x } else { &self.q.x }
    }

    pub fn max_x(&self) -> &Rational {
        if self.p.x >= self.q.x { &self.p.x } else { &self.q.x }
    }

    pub fn is_vertical(&self) -> bool {
        self.p.x == self.q.x
    }

    /// `y` on the supporting line at `x`. The segment must not be vertical.
    pub fn y_at(&self, x: &Rational) -> Rational {
        if *x == self.p.x {
            return self.p.y.clone();
        }
        if *x == self.q.x {
            return self.q.y.clone();
        }
        &self.p.y + (&self.q.y - &self.p.y) * (x - &self.p.x) / (&self.q.x - &self.p.x)
    }

    pub fn spans_x(&self, x: &Rational) -> bool {
        self.min_x() <= x && x <= self.max_x()
    }
}

fn on_segment(a: &Point, b: &Point, c: &Point) -> bool {
    a.x.clone().min(b.x.clone()) <= c.x
        && c.x <= a.x.clone().max(b.x.clone())
        && a.y.clone().min(b.y.clone()) <= c.y
        && c.y <= a.y.clone().max(b.y.clone())
}

/// Closed segments `ab` and `cd` share a point.
pub fn segments_touch(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let s = |r: Rational| if r.is_positive() { 1 } else if r.is_negative() { -1 } else { 0 };
    let (d1, d2) = (s(orient(a, b, c)), s(orient(a, b, d)));
    let (d3, d4) = (s(orient(c, d, a)), s(orient(c, d, b)));
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && on_segment(a, b, c))
        || (d2 == 0 && on_segment(a, b, d))
        || (d3 == 0 && on_segment(c, d, a))
        || (d4 == 0 && on_segment(c, d, b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolygonClass {
    Convex,
    Simple,
}

impl fmt::Display for PolygonClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolygonClass::Convex => "convex",
            PolygonClass::Simple => "simple",
        })
    }
}

/// A polygon with vertices in counterclockwise order. Edge `i` runs from
/// vertex `i` to vertex `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    pub vertices: Vec<Point>,
    pub class: PolygonClass,
}

/// Simplicity is checked exhaustively only up to this many vertices.
pub const SIMPLICITY_CHECK_LIMIT: usize = 10_000;

impl Polygon {
    /// Builds and validates a polygon of the given class.
    pub fn new(vertices: Vec<Point>, class: PolygonClass) -> Result<Self> {
        let p = Polygon { vertices, class };
        p.validate()?;
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge(&self, i: usize) -> Segment {
        let n = self.n();
        Segment { p: self.vertices[i % n].clone(), q: self.vertices[(i + 1) % n].clone() }
    }

    pub fn edges(&self) -> Vec<Segment> {
        (0..self.n()).map(|i| self.edge(i)).collect()
    }

    pub fn twice_area(&self) -> Rational {
        let n = self.n();
        let mut s = Rational::zero();
        for i in 0..n {
            let (a, b) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
            s += &a.x * &b.y - &b.x * &a.y;
        }
        s
    }

    fn validate(&self) -> Result<()> {
        let n = self.n();
        if n < 3 {
            return Err(Error::Malformed(format!("need at least 3 vertices, got {n}")));
        }
        for i in 0..n {
            if self.vertices[i] == self.vertices[(i + 1) % n] {
                return Err(Error::Malformed(format!("duplicate consecutive vertex at index {i}")));
            }
        }
        let ccw = || {
            if self.twice_area().is_positive() {
                Ok(())
            } else {
                Err(Error::Malformed("vertices are not in counterclockwise order".into()))
            }
        };
        match self.class {
            PolygonClass::Convex => {
                ccw()?;
                self.check_convex()
            }
            PolygonClass::Simple => {
                if n <= SIMPLICITY_CHECK_LIMIT {
                    self.check_simple()?;
                }
                ccw()
            }
        }
    }

    fn check_convex(&self) -> Result<()> {
        let n = self.n();
        let v = &self.vertices;
        for i in 0..n {
            if orient(&v[i], &v[(i + 1) % n], &v[(i + 2) % n]).is_negative() {
                return Err(Error::ConvexityViolation(format!("reflex turn at vertex {}", (i + 1) % n)));
            }
        }
        // Positive turns alone allow a polygon that winds twice; count how
        // often the edge direction crosses "pointing right, upward-turning".
        let mut wraps = 0;
        for i in 0..n {
            let (a, b, c) = (&v[i], &v[(i + 1) % n], &v[(i + 2) % n]);
            let d1 = (&b.x - &a.x, &b.y - &a.y);
            let d2 = (&c.x - &b.x, &c.y - &b.y);
            let below = |d: &(Rational, Rational)| d.1.is_negative() || (d.1.is_zero() && d.0.is_positive());
            if below(&d1) && !below(&d2) {
                wraps += 1;
            }
        }
        if wraps > 1 {
            return Err(Error::ConvexityViolation("boundary winds more than once".into()));
        }
        Ok(())
    }

    fn check_simple(&self) -> Result<()> {
        let n = self.n();
        let edges = self.edges();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| edges[a].min_x().cmp(edges[b].min_x()));
        for (k, &i) in order.iter().enumerate() {
            let ei = &edges[i];
            for &j in &order[k + 1..] {
                let ej = &edges[j];
                if ej.min_x() > ei.max_x() {
                    break;
                }
                let adjacent = (i + 1) % n == j || (j + 1) % n == i;
                if adjacent {
                    // Adjacent edges may only share their common vertex.
                    let (shared, a, b) = if (i + 1) % n == j { (&ei.q, &ei.p, &ej.q) } else { (&ei.p, &ei.q, &ej.p) };
                    if orient(a, shared, b).is_zero() && n > 3 {
                        let back = (&a.x - &shared.x) * (&b.x - &shared.x) + (&a.y - &shared.y) * (&b.y - &shared.y);
                        if back.is_positive() {
                            return Err(Error::SimplicityViolation(format!("edges {i} and {j} overlap")));
                        }
                    }
                    continue;
                }
                if segments_touch(&ei.p, &ei.q, &ej.p, &ej.q) {
                    return Err(Error::SimplicityViolation(format!("edges {i} and {j} intersect")));
                }
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("polygon {} {}\n", self.class, self.n());
        for v in &self.vertices {
            s.push_str(&format!("{v}\n"));
        }
        s
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn numbers(line: usize, s: &str, want: usize) -> Result<Vec<Rational>> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    if parts.len() != want {
        return Err(Error::Malformed(format!("line {line}: expected {want} numbers")));
    }
    parts
        .iter()
        .map(|p| parse_rational(p).map_err(|e| Error::Malformed(format!("line {line}: {e}"))))
        .collect()
}

pub fn parse_polygon(text: &str) -> Result<Polygon> {
    let mut lines = content_lines(text);
    let (ln, head) = lines.next().ok_or_else(|| Error::Malformed("empty input".into()))?;
    let h: Vec<&str> = head.split_whitespace().collect();
    if h.len() != 3 || h[0] != "polygon" {
        return Err(Error::Malformed(format!("line {ln}: expected `polygon <class> <n>`")));
    }
    let class = match h[1] {
        "convex" => PolygonClass::Convex,
        "simple" => PolygonClass::Simple,
        other => return Err(Error::Malformed(format!("line {ln}: unknown class `{other}`"))),
    };
    let n: usize = h[2].parse().map_err(|_| Error::Malformed(format!("line {ln}: bad vertex count")))?;
    let mut vertices = Vec::with_capacity(n);
    for (ln, l) in lines {
        let v = numbers(ln, l, 2)?;
        let mut it = v.into_iter();
        vertices.push(Point::new(it.next().unwrap(), it.next().unwrap()));
    }
    if vertices.len() != n {
        return Err(Error::Malformed(format!("header says {n} vertices, found {}", vertices.len())));
    }
    Polygon::new(vertices, class)
}

/// A shared segment between triangles `i` and `j` of a gluing model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueEdge {
    pub i: usize,
    pub j: usize,
    pub a: Point,
    pub b: Point,
}

/// Triangles glued along a tree of shared edges. Triangles are stored in
/// counterclockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingModel {
    pub triangles: Vec<[Point; 3]>,
    pub edges: Vec<GlueEdge>,
}

/// Index of the triangle edge `k -> k+1` equal to segment `ab`, if any.
pub fn triangle_edge(t: &[Point; 3], a: &Point, b: &Point) -> Option<usize> {
    (0..3).find(|&k| {
        let (p, q) = (&t[k], &t[(k + 1) % 3]);
        (p == a && q == b) || (p == b && q == a)
    })
}

impl GluingModel {
    /// Orients triangles counterclockwise and validates the model.
    pub fn new(mut triangles: Vec<[Point; 3]>, edges: Vec<GlueEdge>) -> Result<Self> {
        for (k, t) in triangles.iter_mut().enumerate() {
            let o = orient(&t[0], &t[1], &t[2]);
            if o.is_zero() {
                return Err(Error::Malformed(format!("triangle {k} is degenerate")));
            }
            if o.is_negative() {
                t.swap(1, 2);
            }
        }
        let g = GluingModel { triangles, edges };
        validate_gluing(&g)?;
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("gluing {}\n", self.triangles.len());
        for t in &self.triangles {
            s.push_str(&format!("{} {} {}\n", t[0], t[1], t[2]));
        }
        for e in &self.edges {
            s.push_str(&format!("edge {} {} {} {}\n", e.i, e.j, e.a, e.b));
        }
        s
    }

    pub fn twice_area(&self) -> Rational {
        self.triangles.iter().map(|t| orient(&t[0], &t[1], &t[2])).sum()
    }
}

/// Checks that the glue edges form a spanning tree and that each shared
/// segment is a full edge of both triangles, with the triangles on opposite
/// sides of it.
pub fn validate_gluing(g: &GluingModel) -> Result<()> {
    let m = g.triangles.len();
    if m == 0 {
        return Err(Error::Malformed("no triangles".into()));
    }
    if g.edges.len() + 1 != m {
        return Err(Error::NotATree(format!("{} glue edges for {m} triangles", g.edges.len())));
    }
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (k, e) in g.edges.iter().enumerate() {
        if e.i >= m || e.j >= m || e.i == e.j {
            return Err(Error::Malformed(format!("glue edge {k}: bad triangle index")));
        }
        let (ti, tj) = (&g.triangles[e.i], &g.triangles[e.j]);
        let (Some(ki), Some(kj)) = (triangle_edge(ti, &e.a, &e.b), triangle_edge(tj, &e.a, &e.b)) else {
            return Err(Error::Malformed(format!("glue edge {k}: segment is not an edge of both triangles")));
        };
        let oi = orient(&e.a, &e.b, &ti[(ki + 2) % 3]);
        let oj = orient(&e.a, &e.b, &tj[(kj + 2) % 3]);
        if (oi.is_positive() && oj.is_positive()) || (oi.is_negative() && oj.is_negative()) {
            return Err(Error::Malformed(format!("glue edge {k}: triangles overlap")));
        }
        let (ri, rj) = (find(&mut parent, e.i), find(&mut parent, e.j));
        if ri == rj {
            return Err(Error::NotATree(format!("glue edge {k} closes a cycle")));
        }
        parent[ri] = rj;
    }
    Ok(())
}

pub fn parse_gluing(text: &str) -> Result<GluingModel> {
    let mut lines = content_lines(text);
    let (ln, head) = lines.next().ok_or_else(|| Error::Malformed("empty input".into()))?;
    let h: Vec<&str> = head.split_whitespace().collect();
    if h.len() != 2 || h[0] != "gluing" {
        return Err(Error::Malformed(format!("line {ln}: expected `gluing <m>`")));
    }
    let m: usize = h[1].parse().map_err(|_| Error::Malformed(format!("line {ln}: bad triangle count")))?;
    let mut triangles = Vec::with_capacity(m);
    let mut edges = Vec::new();
    for (ln, l) in lines {
        if let Some(rest) = l.strip_prefix("edge") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 6 {
                return Err(Error::Malformed(format!("line {ln}: expected `edge i j ax ay bx by`")));
            }
            let idx = |s: &str| s.parse::<usize>().map_err(|_| Error::Malformed(format!("line {ln}: bad index")));
            let v = numbers(ln, &parts[2..].join(" "), 4)?;
            edges.push(GlueEdge {
                i: idx(parts[0])?,
                j: idx(parts[1])?,
                a: Point::new(v[0].clone(), v[1].clone()),
                b: Point::new(v[2].clone(), v[3].clone()),
            });
        } else {
            if !edges.is_empty() {
                return Err(Error::Malformed(format!("line {ln}: triangle after edge records")));
            }
            let v = numbers(ln, l, 6)?;
            triangles.push([
                Point::new(v[0].clone(), v[1].clone()),
                Point::new(v[2].clone(), v[3].clone()),
                Point::new(v[4].clone(), v[5].clone()),
            ]);
        }
    }
    if triangles.len() != m {
        return Err(Error::Malformed(format!("header says {m} triangles, found {}", triangles.len())));
    }
    GluingModel::new(triangles, edges)
}

/// Either kind of input region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Region {
    Polygon(Polygon),
    Gluing(GluingModel),
}

/// Parses a polygon or gluing file, dispatching on the header keyword.
pub fn parse_region(text: &str) -> Result<Region> {
    let first = content_lines(text).next().map(|(_, l)| l.split_whitespace().next().unwrap_or(""));
    match first {
        Some("polygon") => Ok(Region::Polygon(parse_polygon(text)?)),
        Some("gluing") => Ok(Region::Gluing(parse_gluing(text)?)),
        _ => Err(Error::Malformed("expected a `polygon` or `gluing` header".into())),
    }
}

impl Region {
    pub fn as_polygon(&self) -> Option<&Polygon> {
        match self {
            Region::Polygon(p) => Some(p),
            Region::Gluing(_) => None,
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Region::Polygon(p) => p.to_text(),
            Region::Gluing(g) => g.to_text(),
        }
    }

    pub fn twice_area(&self) -> Rational {
        match self {
            Region::Polygon(p) => p.twice_area(),
            Region::Gluing(g) => g.twice_area(),
        }
    }

    /// Input size: vertex count, or three per triangle.
    pub fn size(&self) -> usize {
        match self {
            Region::Polygon(p) => p.n(),
            Region::Gluing(g) => 3 * g.triangles.len(),
        }
    }

    pub fn class_name(&self) -> &'static str {
        match self {
            Region::Polygon(p) if p.class == PolygonClass::Convex => "convex",
            Region::Polygon(_) => "simple",
            Region::Gluing(_) => "gluing",
        }
    }
}

/// A cut identified by the boundary edges holding its endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CutDescriptor {
    pub top: usize,
    pub bottom: usize,
    pub x: EpsCoord,
}

impl fmt::Display for CutDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.top, self.bottom, self.x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SideTag {
    Left,
    Right,
}

impl fmt::Display for SideTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SideTag::Left => "left",
            SideTag::Right => "right",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Record {
    /// `count` cuts at `first.x`, `first.x + 1`, ...
    Run { first: CutDescriptor, count: u64 },
    Lit(CutDescriptor),
    /// A cut placed while undoing a join at a bridge node.
    Bridge { node: usize, side: SideTag, cut: CutDescriptor },
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Record::Run { first, count } => write!(f, "run {} {} {} {}", first.top, first.bottom, first.x, count),
            Record::Lit(d) => write!(f, "lit {} {} {}", d.top, d.bottom, d.x),
            Record::Bridge { node, side, cut } => {
                write!(f, "bridge {} {} {} {} {}", node, side, cut.x, cut.top, cut.bottom)
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Codeword {
    pub records: Vec<Record>,
}

impl Codeword {
    /// Number of cuts the codeword expands to.
    pub fn cut_count(&self) -> u64 {
        self.records
            .iter()
            .map(|r| match r {
                Record::Run { count, .. } => *count,
                _ => 1,
            })
            .sum()
    }

    pub fn to_text(&self) -> String {
        self.records.iter().map(|r| format!("{r}\n")).collect()
    }
}

pub fn parse_codeword(text: &str) -> Result<Codeword> {
    let mut records = Vec::new();
    for (ln, l) in content_lines(text) {
        let p: Vec<&str> = l.split_whitespace().collect();
        let bad = |what: &str| Error::CorruptCodeword(format!("line {ln}: {what}"));
        let idx = |s: &str| s.parse::<usize>().map_err(|_| bad("bad edge or node id"));
        let x = |s: &str| s.parse::<EpsCoord>().map_err(|_| bad("bad coordinate"));
        let rec = match (p[0], p.len()) {
            ("run", 5) => {
                let count: u64 = p[4].parse().map_err(|_| bad("bad count"))?;
                if count == 0 {
                    return Err(bad("run count must be positive"));
                }
                Record::Run { first: CutDescriptor { top: idx(p[1])?, bottom: idx(p[2])?, x: x(p[3])? }, count }
            }
            ("lit", 4) => Record::Lit(CutDescriptor { top: idx(p[1])?, bottom: idx(p[2])?, x: x(p[3])? }),
            ("bridge", 6) => {
                let side = match p[2] {
                    "left" => SideTag::Left,
                    "right" => SideTag::Right,
                    _ => return Err(bad("side must be left or right")),
                };
                Record::Bridge {
                    node: idx(p[1])?,
                    side,
                    cut: CutDescriptor { top: idx(p[4])?, bottom: idx(p[5])?, x: x(p[3])? },
                }
            }
            _ => return Err(bad("unknown record")),
        };
        records.push(rec);
    }
    Ok(Codeword { records })
}

/// A cut with its concrete geometry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodedCut {
    pub descriptor: CutDescriptor,
    pub x: Rational,
    pub y_lo: Rational,
    pub y_hi: Rational,
}

impl fmt::Display for DecodedCut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor)
    }
}

/// `y` where a cut at `x` meets `edge`. On a vertical edge the cut stops at
/// its near end: the low end for a top endpoint, the high end for a bottom one.
pub fn cut_end_y(edge: &Segment, x: &Rational, top: bool) -> Rational {
    if edge.is_vertical() {
        if top {
            edge.p.y.clone().min(edge.q.y.clone())
        } else {
            edge.p.y.clone().max(edge.q.y.clone())
        }
    } else {
        edge.y_at(x)
    }
}

/// Moves along the boundary from edge `k` until the edge spans `x`. Top
/// edges are walked against the boundary order when moving right.
fn walk(boundary: &[Segment], mut k: usize, x: &Rational, top: bool) -> Option<usize> {
    let n = boundary.len();
    let right = *x > *boundary[k].max_x();
    for _ in 0..n {
        if boundary[k].spans_x(x) {
            return Some(k);
        }
        k = if right == top { (k + n - 1) % n } else { (k + 1) % n };
    }
    None
}

/// Expands a codeword into explicit cuts over the given boundary, with `ε`
/// replaced by `eps_num`.
pub fn decode_codeword(boundary: &[Segment], cw: &Codeword, eps_num: &Rational) -> Result<Vec<DecodedCut>> {
    let mut out = Vec::new();
    let n = boundary.len();
    let mut push = |d: CutDescriptor| -> Result<()> {
        if d.top >= n || d.bottom >= n {
            return Err(Error::CorruptCodeword(format!("edge id out of range in `{d}`")));
        }
        let x = d.x.materialize(eps_num);
        let (t, b) = (&boundary[d.top], &boundary[d.bottom]);
        if !t.spans_x(&x) || !b.spans_x(&x) {
            return Err(Error::CorruptCodeword(format!("cut `{d}` lies outside its edges")));
        }
        let y_hi = cut_end_y(t, &x, true);
        let y_lo = cut_end_y(b, &x, false);
        if y_lo > y_hi {
            return Err(Error::CorruptCodeword(format!("cut `{d}` is inverted")));
        }
        out.push(DecodedCut { descriptor: d, x, y_lo, y_hi });
        Ok(())
    };
    for r in &cw.records {
        match r {
            Record::Lit(d) => push(d.clone())?,
            Record::Bridge { cut, .. } => push(cut.clone())?,
            Record::Run { first, count } => {
                let (mut top, mut bottom) = (first.top, first.bottom);
                if top >= n || bottom >= n {
                    return Err(Error::CorruptCodeword(format!("edge id out of range in `{first}`")));
                }
                for j in 0..*count {
                    let x = first.x.shift(&j.into());
                    let xv = x.materialize(eps_num);
                    top = walk(boundary, top, &xv, true)
                        .ok_or_else(|| Error::CorruptCodeword(format!("run from `{first}` leaves the boundary")))?;
                    bottom = walk(boundary, bottom, &xv, false)
                        .ok_or_else(|| Error::CorruptCodeword(format!("run from `{first}` leaves the boundary")))?;
                    push(CutDescriptor { top, bottom, x })?;
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_coords::int;

    const SQUARE: &str = "polygon convex 4\n0 0\n1 0\n1 1\n0 1\n";

    #[test]
    fn parses_square() {
        let p = parse_polygon(SQUARE).unwrap();
        assert_eq!(p.n(), 4);
        assert_eq!(p.class, PolygonClass::Convex);
        assert_eq!(parse_polygon(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn parabola_is_convex() {
        let mut s = String::from("polygon convex 5\n");
        for x in [0, 1, 2, 3, 4] {
            s.push_str(&format!("{} {}\n", x, x * x));
        }
        assert!(parse_polygon(&s).is_ok());
    }

    #[test]
    fn rejects_bad_polygons() {
        let bow = "polygon simple 4\n0 0\n1 1\n1 0\n0 1\n";
        assert_eq!(parse_polygon(bow).unwrap_err().code(), "SIMPLICITY_VIOLATION");
        assert_eq!(parse_polygon("polygon simple 2\n0 0\n1 0\n").unwrap_err().code(), "MALFORMED");
        assert_eq!(parse_polygon("polygon simple 3\n0 0\n0 0\n1 1\n").unwrap_err().code(), "MALFORMED");
        let cw = "polygon simple 3\n0 0\n0 1\n1 0\n";
        assert_eq!(parse_polygon(cw).unwrap_err().code(), "MALFORMED");
        let l = "polygon convex 6\n0 0\n2 0\n2 1\n1 1\n1 2\n0 2\n";
        assert_eq!(parse_polygon(l).unwrap_err().code(), "CONVEXITY_VIOLATION");
        assert!(parse_polygon("polygon convex 4\n0 0\n1 0\nx 1\n0 1\n").is_err());
    }

    #[test]
    fn gluing_validation() {
        let two = "gluing 2\n0 0 1 0 1 1\n0 0 1 1 0 1\nedge 0 1 0 0 1 1\n";
        assert!(parse_gluing(two).is_ok());
        let cyc = "gluing 3\n0 0 1 0 0 1\n1 0 1 1 0 1\n1 0 2 0 1 1\nedge 0 1 1 0 0 1\nedge 1 2 1 0 1 1\nedge 2 0 1 0 0 1\n";
        assert_eq!(parse_gluing(cyc).unwrap_err().code(), "NOT_A_TREE");
    }

    #[test]
    fn codeword_round_trip() {
        let text = "run 2 0 1 4\nlit 3 1 5/2\nbridge 7 left 3-eps 2 0\n";
        let cw = parse_codeword(text).unwrap();
        assert_eq!(cw.to_text(), text);
        assert_eq!(cw.cut_count(), 6);
        assert!(parse_codeword("run 1 2 3 0\n").is_err());
        assert!(parse_codeword("blah\n").is_err());
    }

    #[test]
    fn decode_run_on_rectangle() {
        let p = parse_polygon("polygon convex 4\n0 0\n5 0\n5 1\n0 1\n").unwrap();
        let cw = parse_codeword("run 2 0 1 4\n").unwrap();
        let cuts = decode_codeword(&p.edges(), &cw, &int(0)).unwrap();
        let xs: Vec<Rational> = cuts.iter().map(|c| c.x.clone()).collect();
        assert_eq!(xs, vec![int(1), int(2), int(3), int(4)]);
        assert!(decode_codeword(&p.edges(), &Codeword::default(), &int(0)).unwrap().is_empty());
        let bad = parse_codeword("lit 2 0 7\n").unwrap();
        assert_eq!(decode_codeword(&p.edges(), &bad, &int(0)).unwrap_err().code(), "CORRUPT_CODEWORD");
    }
}
