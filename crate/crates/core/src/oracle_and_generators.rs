//! Brute-force reference values and instance generators.
//!
//! The oracle never touches the trapezoid machinery. It cuts the polygon at
//! every candidate `x` into slab cells, so each candidate chord is a single
//! adjacency between two cells, and searches over chord subsets.


use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomposition::EdgeSeg;
use crate::error::{Error, Result};
use crate::exact_coords::{ceil_int, floor_int, fmt_rational, int, rat, Rational};
use crate::polygon_model::{orient, GlueEdge, GluingModel, Point, Polygon, PolygonClass, Region};

// ---------------------------------------------------------------------------
// Slab cells

struct Cell {
    lo: Rational,
    hi: Rational,
}

struct Slabs {
    cells: Vec<Cell>,
    /// Chords: pairs of cells sharing a vertical segment of positive length.
    adj: Vec<(usize, usize)>,
}

/// `{x(p) + m}` inside the x-range, plus midpoints of consecutive values.
pub fn candidate_xs(poly: &Polygon) -> Vec<Rational> {
    let xmin = poly.vertices.iter().map(|p| &p.x).min().unwrap().clone();
    let xmax = poly.vertices.iter().map(|p| &p.x).max().unwrap().clone();
    let mut xs: Vec<Rational> = Vec::new();
    for p in &poly.vertices {
        let lo = ceil_int(&(&xmin - &p.x));
        let hi = floor_int(&(&xmax - &p.x));
        let mut m = lo;
        while m <= hi {
            xs.push(&p.x + Rational::from_integer(m.clone()));
            m += 1;
        }
    }
    xs.sort();
    xs.dedup();
    let mids: Vec<Rational> = xs.windows(2).map(|w| (&w[0] + &w[1]) / int(2)).collect();
    xs.extend(mids);
    xs.sort();
    xs
}

fn slab_cells(poly: &Polygon, xs: &[Rational]) -> Slabs {
    let edges = poly.edges();
    let mut cells: Vec<Cell> = Vec::new();
    // (bottom y, top y) at the left and right end of each cell, per slab
    let mut prev: Vec<(usize, Rational, Rational)> = Vec::new();
    let mut adj = Vec::new();
    for s in 0..xs.len().saturating_sub(1) {
        let (x0, x1) = (&xs[s], &xs[s + 1]);
        let xm = (x0 + x1) / int(2);
        let mut crossing: Vec<(Rational, usize)> = edges
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_vertical() && *e.min_x() < xm && xm < *e.max_x())
            .map(|(i, e)| (e.y_at(&xm), i))
            .collect();
        crossing.sort();
        let mut cur: Vec<(usize, Rational, Rational)> = Vec::new();
        for pair in crossing.chunks(2) {
            let (b, t) = (&edges[pair[0].1], &edges[pair[1].1]);
            let id = cells.len();
            cells.push(Cell { lo: x0.clone(), hi: x1.clone() });
            let (lb, lt) = (b.y_at(x0), t.y_at(x0));
            for (pid, pb, pt) in &prev {
                if lb.clone().max(pb.clone()) < lt.clone().min(pt.clone()) {
                    adj.push((*pid, id));
                }
            }
            cur.push((id, b.y_at(x1), t.y_at(x1)));
        }
        prev = cur;
    }
    Slabs { cells, adj }
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

/// Piece count if removing the chords in `cut` leaves only pieces of width
/// at most one.
fn pieces_if_valid(s: &Slabs, cut: &[bool]) -> Option<usize> {
    let n = s.cells.len();
    let mut uf: Vec<usize> = (0..n).collect();
    for (k, &(a, b)) in s.adj.iter().enumerate() {
        if !cut[k] {
            let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
            uf[ra] = rb;
        }
    }
    let mut ext: Vec<Option<(Rational, Rational)>> = vec![None; n];
    for c in 0..n {
        let r = find(&mut uf, c);
        let cell = &s.cells[c];
        ext[r] = Some(match ext[r].take() {
            None => (cell.lo.clone(), cell.hi.clone()),
            Some((l, h)) => (l.min(cell.lo.clone()), h.max(cell.hi.clone())),
        });
    }
    let mut pieces = 0;
    for (l, h) in ext.into_iter().flatten() {
        if h - l > Rational::one() {
            return None;
        }
        pieces += 1;
    }
    Some(pieces)
}

/// Exhaustive search over subsets of candidate chords, smallest first.
pub fn oracle_value(poly: &Polygon, max_candidates: usize) -> Result<u64> {
    let s = slab_cells(poly, &candidate_xs(poly));
    let m = s.adj.len();
    if m > max_candidates {
        return Err(Error::TooLarge(format!("{m} candidate cuts exceed the limit of {max_candidates}")));
    }
    let mut best: Option<usize> = None;
    for k in 0..=m {
        // every subset of size k, by index combinations
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mut cut = vec![false; m];
            for &i in &idx {
                cut[i] = true;
            }
            if let Some(p) = pieces_if_valid(&s, &cut) {
                best = Some(best.map_or(p, |b| b.min(p)));
            }
            // next combination
            let mut i = k;
            let mut advanced = false;
            while i > 0 {
                i -= 1;
                if idx[i] < m - k + i {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
        if best.is_some() {
            break;
        }
    }
    best.map(|b| b as u64).ok_or_else(|| Error::StructureViolation("no valid partition found".into()))
}

/// The same search as a Pareto dynamic program over the cell tree: for each
/// subtree keep every non-dominated `(closed pieces, open extent)`.
pub fn oracle_value_tree(poly: &Polygon) -> Result<u64> {
    let s = slab_cells(poly, &candidate_xs(poly));
    let n = s.cells.len();
    if s.adj.len() + 1 != n {
        return Err(Error::StructureViolation("slab cells do not form a tree".into()));
    }
    let mut nbr: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in &s.adj {
        nbr[a].push(b);
        nbr[b].push(a);
    }
    let mut order = vec![0usize];
    let mut parent = vec![usize::MAX; n];
    parent[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let c = order[head];
        head += 1;
        for &d in &nbr[c] {
            if parent[d] == usize::MAX {
                parent[d] = c;
                order.push(d);
            }
        }
    }
    if order.len() != n {
        return Err(Error::StructureViolation("slab cells are disconnected".into()));
    }
    type Front = Vec<(u64, Rational, Rational)>;
    let prune = |mut v: Front| -> Front {
        v.sort_by(|a, b| a.0.cmp(&b.0).then((&a.2 - &a.1).cmp(&(&b.2 - &b.1))));
        let mut out: Front = Vec::new();
        for c in v {
            if !out.iter().any(|o| o.0 <= c.0 && o.1 >= c.1 && o.2 <= c.2) {
                out.push(c);
            }
        }
        out
    };
    let mut front: Vec<Front> = s.cells.iter().map(|c| vec![(0u64, c.lo.clone(), c.hi.clone())]).collect();
    for &c in order.iter().rev() {
        for &d in &nbr[c] {
            if parent[d] != c || d == c {
                continue;
            }
            let child = std::mem::take(&mut front[d]);
            let closed = child.iter().map(|t| t.0 + 1).min().expect("nonempty front");
            let mut next: Front = Vec::new();
            for (k, l, h) in &front[c] {
                next.push((k + closed, l.clone(), h.clone()));
                for (k2, l2, h2) in &child {
                    let (nl, nh) = (l.clone().min(l2.clone()), h.clone().max(h2.clone()));
                    if &nh - &nl <= Rational::one() {
                        next.push((k + k2, nl, nh));
                    }
                }
            }
            front[c] = prune(next);
        }
    }
    Ok(front[0].iter().map(|t| t.0 + 1).min().expect("nonempty front"))
}

// ---------------------------------------------------------------------------
// Generators

/// What a generated instance promises about its optimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expected {
    Exactly(BigInt),
    AtMost(BigInt),
    AtLeast(BigInt),
    Unknown,
}

impl Expected {
    pub fn holds(&self, opt: &BigInt) -> bool {
        match self {
            Expected::Exactly(v) => opt == v,
            Expected::AtMost(v) => opt <= v,
            Expected::AtLeast(v) => opt >= v,
            Expected::Unknown => true,
        }
    }
}

impl std::fmt::Display for Expected {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Expected::Exactly(v) => write!(f, "= {v}"),
            Expected::AtMost(v) => write!(f, "<= {v}"),
            Expected::AtLeast(v) => write!(f, ">= {v}"),
            Expected::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GeneratedInstance {
    pub name: String,
    pub region: Region,
    pub expected: Expected,
    /// A point on the leaf trapezoid the construction is meant to be rooted at.
    pub root_hint: Option<Point>,
    /// The interface whose antichain the construction is about.
    pub spine: Option<EdgeSeg>,
}

fn pt(x: Rational, y: Rational) -> Point {
    Point::new(x, y)
}

/// `p₀ = (0, 0)`, `pᵢ = (xᵢ, i)`, `p_{n+1} = (0, n)`; the optimum is 1 exactly
/// when every `xᵢ <= 1`.
pub fn gen_staircase(x: &[Rational]) -> Result<GeneratedInstance> {
    if x.is_empty() || x.iter().any(|v| !v.is_positive() || *v >= int(2)) {
        return Err(Error::Malformed("staircase coordinates must lie in (0, 2)".into()));
    }
    let n = x.len();
    let mut v = vec![pt(int(0), int(0))];
    for (i, xi) in x.iter().enumerate() {
        v.push(pt(xi.clone(), int(i as i64 + 1)));
    }
    v.push(pt(int(0), int(n as i64)));
    let poly = Polygon::new(v, PolygonClass::Simple)?;
    let expected = if x.iter().all(|v| *v <= int(1)) {
        Expected::Exactly(BigInt::one())
    } else {
        Expected::AtLeast(BigInt::from(2))
    };
    Ok(GeneratedInstance { name: format!("staircase-{n}"), region: Region::Polygon(poly), expected, root_hint: None, spine: None })
}

/// Staircase of rectangles `[aᵢ, aᵢ + 1 − 1/(4n)]` joined by corridors to a
/// thin spine, with one more rectangle `[b, b + 1 − 1/(4n)]` on the other side.
///
/// No two staircase rectangles fit in one strip, and the extra rectangle fits
/// with `Rᵢ` exactly when `|aᵢ − b| <= 1/(4n)`, so the optimum is `n` in that
/// case and `n + 1` otherwise.
pub fn gen_no_greedy(a: &[Rational], b: &Rational) -> Result<GeneratedInstance> {
    let n = a.len();
    if n == 0 {
        return Err(Error::Malformed("need at least one rectangle".into()));
    }
    let nn = n as i64;
    let w = rat(1, 4 * nn);
    for (i, ai) in a.iter().enumerate() {
        let i = i as i64 + 1;
        if !(*ai > rat(i, 2 * nn) - &w && *ai < rat(i, 2 * nn)) {
            return Err(Error::Malformed(format!("a_{i} = {} outside its window", fmt_rational(ai))));
        }
    }
    if !(*b > rat(1, 2 * nn) && *b < rat(1, 2)) {
        return Err(Error::Malformed("b must lie in (1/(2n), 1/2)".into()));
    }
    let len = int(1) - &w;
    let p = rat(1, 16 * nn);
    let amax = a.iter().max().unwrap();
    let xc = amax.clone().max(b.clone()) + &p * int(2);
    let h = |i: i64| int(2 * nn + 2 + 2 * (nn - i));
    let h1 = h(1);
    let yk = &h1 + int(3);
    let yr = &yk + int(3);
    let mut v = vec![pt(&xc + &p, &h1 + int(1))];
    for (k, ai) in a.iter().enumerate() {
        let i = k as i64 + 1;
        if i > 1 {
            v.push(pt(xc.clone(), h(i) + int(1)));
        }
        v.push(pt(ai.clone(), h(i) + int(1)));
        v.push(pt(ai.clone(), int(2 * i)));
        v.push(pt(ai + &len, int(2 * i)));
        v.push(pt(ai + &len, int(2 * i + 1)));
        v.push(pt(ai + &p, int(2 * i + 1)));
        v.push(pt(ai + &p, h(i)));
        v.push(pt(xc.clone(), h(i)));
    }
    v.push(pt(&xc + &p * int(2), h(nn)));
    v.push(pt(&xc + &p * int(2), &yk + int(1)));
    v.push(pt(b + &p, &yk + int(1)));
    v.push(pt(b + &p, yr.clone()));
    v.push(pt(b + &len, yr.clone()));
    v.push(pt(b + &len, &yr + int(1)));
    v.push(pt(b.clone(), &yr + int(1)));
    v.push(pt(b.clone(), yk.clone()));
    v.push(pt(&xc + &p, yk.clone()));
    let poly = Polygon::new(v, PolygonClass::Simple)?;
    let close = a.iter().any(|ai| (ai - b).abs() <= w);
    let expected = Expected::Exactly(BigInt::from(if close { n } else { n + 1 }));
    Ok(GeneratedInstance {
        name: format!("nogreedy-{n}"),
        region: Region::Polygon(poly),
        expected,
        root_hint: Some(pt(b + &len, &yr + rat(1, 2))),
        spine: Some(EdgeSeg { x: &xc + &p, y_lo: h(nn), y_hi: &h1 + int(1) }),
    })
}

/// Whether some pair of `x` lies within `delta`.
pub fn has_close_pair(x: &[Rational], delta: &Rational) -> bool {
    let mut s: Vec<&Rational> = x.iter().collect();
    s.sort();
    s.windows(2).any(|w| w[1] - w[0] <= *delta)
}

/// Index of the first element within `delta` of an earlier one.
pub fn first_close_index(x: &[Rational], delta: &Rational) -> Option<usize> {
    (1..x.len()).find(|&t| (0..t).any(|i| (&x[t] - &x[i]).abs() <= *delta))
}

fn fan(poly: &[Point]) -> Vec<[Point; 3]> {
    (1..poly.len() - 1).map(|j| [poly[0].clone(), poly[j].clone(), poly[j + 1].clone()]).collect()
}

struct GlueBuilder {
    tris: Vec<[Point; 3]>,
    edges: Vec<GlueEdge>,
}

impl GlueBuilder {
    /// Adds a fan-triangulated convex piece; returns its triangle ids.
    fn piece(&mut self, poly: &[Point]) -> Vec<usize> {
        let base = self.tris.len();
        let t = fan(poly);
        for j in 1..t.len() {
            let (a, b) = (t[j][0].clone(), t[j][1].clone());
            self.edges.push(GlueEdge { i: base + j - 1, j: base + j, a, b });
        }
        self.tris.extend(t);
        (base..self.tris.len()).collect()
    }

    /// Glues two pieces along the segment `a b`, which must be a triangle edge in each.
    fn glue(&mut self, p: &[usize], q: &[usize], a: &Point, b: &Point) {
        let has = |t: &[Point; 3]| (0..3).any(|k| {
            let (u, v) = (&t[k], &t[(k + 1) % 3]);
            (u == a && v == b) || (u == b && v == a)
        });
        let i = *p.iter().find(|&&t| has(&self.tris[t])).expect("segment on first piece");
        let j = *q.iter().find(|&&t| has(&self.tris[t])).expect("segment on second piece");
        self.edges.push(GlueEdge { i, j, a: a.clone(), b: b.clone() });
    }
}

/// Spine `S` inside `[0, δ/2] × [0, H]` with rectangles over `Aᵢ` and `Bᵢ`,
/// each on its own sheet, reaching the left side of `S` through an L-shaped
/// pipe. The left side of `S` is a fine staircase with one step per junction.
///
/// Rectangles are stacked `A₁, B₁, A₂, B₂, ...` from the bottom. Two
/// rectangles share a strip only if they are `Aᵢ, Aⱼ` or `Bᵢ, Bⱼ` with
/// `|xᵢ − xⱼ| <= δ`, so the optimum is `2n` exactly when no pair is close.
pub fn gen_delta_gadget(x: &[Rational], delta: &Rational) -> Result<GeneratedInstance> {
    let n = x.len();
    if n == 0 {
        return Err(Error::Malformed("need at least one value".into()));
    }
    if !(delta.is_positive() && *delta < rat(1, 5)) {
        return Err(Error::Malformed("delta must lie in (0, 1/5)".into()));
    }
    let half = delta / int(2);
    for xi in x {
        if !(xi > delta && *xi < rat(1, 2) - &half) {
            return Err(Error::Malformed(format!("x = {} outside (delta, 1/2 - delta/2)", fmt_rational(xi))));
        }
    }
    let p = delta / int(8);
    let top = int(6 * n as i64 + 3);
    let mut ranges: Vec<(Rational, Rational)> = Vec::new();
    for xi in x {
        ranges.push((-(xi - &half), int(1) - &half - xi));
        ranges.push((-(int(1) - &half - xi), xi - &half));
    }
    // The spine is a stack of bands whose left sides step right by `tau` per
    // junction, so no two junctions share an x-coordinate.
    let tau = delta / int(8 * n as i64);
    let junction = |k: usize| {
        let y = int(3 * (k as i64 + 1) + 2);
        (y.clone(), y + rat(1, 2))
    };
    let step = |k: usize| if k == 0 { int(0) } else if k == 2 * n { top.clone() } else { int(3 * k as i64 + 4) };
    let left = |k: usize| &tau * int(k as i64);
    let mut g = GlueBuilder { tris: Vec::new(), edges: Vec::new() };
    let mut bands: Vec<Vec<usize>> = Vec::new();
    for k in 0..2 * n {
        let (y0, y1) = (step(k), step(k + 1));
        let (j0, j1) = junction(k);
        let x = left(k);
        let mut band = vec![pt(half.clone(), y0.clone()), pt(half.clone(), y1.clone())];
        if k + 1 < 2 * n {
            band.push(pt(left(k + 1), y1.clone()));
        }
        band.extend([pt(x.clone(), y1), pt(x.clone(), j1), pt(x.clone(), j0), pt(x, y0.clone())]);
        let ids = g.piece(&band);
        if let Some(below) = bands.last() {
            g.glue(below, &ids, &pt(left(k), y0.clone()), &pt(half.clone(), y0));
        }
        bands.push(ids);
    }
    for (k, (lo, hi)) in ranges.iter().enumerate() {
        let yb = int(3 * (k as i64 + 1));
        let yt = &yb + int(1);
        let (j0, j1) = junction(k);
        let lp = lo + &p;
        let rect = vec![pt(lo.clone(), yb.clone()), pt(hi.clone(), yb.clone()), pt(hi.clone(), yt.clone()), pt(lp.clone(), yt.clone()), pt(lo.clone(), yt.clone())];
        let vert = vec![pt(lo.clone(), yt.clone()), pt(lp.clone(), yt.clone()), pt(lp.clone(), j0.clone()), pt(lo.clone(), j0.clone())];
        let x = left(k);
        let horiz = vec![pt(x.clone(), j1.clone()), pt(lo.clone(), j1.clone()), pt(lo.clone(), j0.clone()), pt(lp.clone(), j0.clone()), pt(x.clone(), j0.clone())];
        let r_ids = g.piece(&rect);
        let v_ids = g.piece(&vert);
        let h_ids = g.piece(&horiz);
        g.glue(&r_ids, &v_ids, &pt(lo.clone(), yt.clone()), &pt(lp.clone(), yt.clone()));
        g.glue(&v_ids, &h_ids, &pt(lo.clone(), j0.clone()), &pt(lp.clone(), j0.clone()));
        g.glue(&h_ids, &bands[k], &pt(x.clone(), j0.clone()), &pt(x, j1.clone()));
    }
    let model = GluingModel::new(g.tris, g.edges)?;
    let expected = if has_close_pair(x, delta) {
        Expected::AtMost(BigInt::from(2 * n - 1))
    } else {
        Expected::Exactly(BigInt::from(2 * n))
    };
    Ok(GeneratedInstance {
        name: format!("delta-{n}"),
        region: Region::Gluing(model),
        expected,
        root_hint: Some(pt(half, top - rat(1, 4))),
        spine: None,
    })
}

/// Rectilinear comb: base `[0, 2k−1] × [0, 1]` with unit teeth over
/// `[2j, 2j+1]` reaching height 2. It has `4k` vertices and optimum `2k − 1`.
pub fn gen_comb(k: usize) -> Result<GeneratedInstance> {
    if k == 0 {
        return Err(Error::Malformed("comb needs at least one tooth".into()));
    }
    let w = 2 * k as i64 - 1;
    let mut v = vec![pt(int(0), int(0)), pt(int(w), int(0))];
    for j in (0..k as i64).rev() {
        v.push(pt(int(2 * j + 1), int(2)));
        v.push(pt(int(2 * j), int(2)));
        if j > 0 {
            v.push(pt(int(2 * j), int(1)));
            v.push(pt(int(2 * j - 1), int(1)));
        }
    }
    let poly = Polygon::new(v, PolygonClass::Simple)?;
    Ok(GeneratedInstance {
        name: format!("comb-{k}"),
        region: Region::Polygon(poly),
        expected: Expected::Exactly(BigInt::from(w)),
        root_hint: None,
        spine: None,
    })
}

fn segments_cross(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let s = |v: Rational| v.signum();
    let (o1, o2) = (s(orient(a, b, c)), s(orient(a, b, d)));
    let (o3, o4) = (s(orient(c, d, a)), s(orient(c, d, b)));
    !o1.is_zero() && !o2.is_zero() && !o3.is_zero() && !o4.is_zero() && o1 != o2 && o3 != o4
}

/// Random points on a `1/den` grid in `[0, width] × [0, height]`, made simple by
/// 2-opt uncrossing and oriented counterclockwise. Deterministic in `seed`.
pub fn gen_random_simple_in(n: usize, seed: u64, width: i64, height: i64, den: i64) -> Result<Polygon> {
    if n < 3 {
        return Err(Error::Malformed("need at least three vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _attempt in 0..1000 {
        let mut v: Vec<Point> = (0..n)
            .map(|_| pt(rat(rng.gen_range(0..=width * den), den), rat(rng.gen_range(0..=height * den), den)))
            .collect();
        let mut changed = true;
        let mut rounds = 0;
        while changed && rounds < 10 * n * n {
            changed = false;
            rounds += 1;
            'outer: for i in 0..n {
                for j in i + 2..n {
                    if i == 0 && j == n - 1 {
                        continue;
                    }
                    let (a, b) = (&v[i], &v[i + 1]);
                    let (c, d) = (&v[j], &v[(j + 1) % n]);
                    if segments_cross(a, b, c, d) {
                        v[i + 1..=j].reverse();
                        changed = true;
                        break 'outer;
                    }
                }
            }
        }
        let area: Rational = (0..n).map(|i| &v[i].x * &v[(i + 1) % n].y - &v[(i + 1) % n].x * &v[i].y).sum();
        if area.is_negative() {
            v.reverse();
        }
        if let Ok(p) = Polygon::new(v, PolygonClass::Simple) {
            return Ok(p);
        }
    }
    Err(Error::TooLarge("could not draw a simple polygon".into()))
}

/// [`gen_random_simple_in`] on a `1/12` grid in `[0, 4] × [0, 4]`.
pub fn gen_random_simple(n: usize, seed: u64) -> Result<Polygon> {
    gen_random_simple_in(n, seed, 4, 4, 12)
}

/// Convex hull of random grid points, counterclockwise without collinear
/// vertices. At most `n` points are drawn.
pub fn gen_random_convex(n: usize, seed: u64, width: i64) -> Result<Polygon> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let den = 16i64;
    let mut pts: Vec<Point> = (0..n.max(3))
        .map(|_| {
            // points near a circle give hulls with many vertices
            let t: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let r = width as f64 / 2.0;
            let x = ((r + r * t.cos()) * den as f64).round() as i64;
            let y = ((r + r * t.sin()) * den as f64).round() as i64;
            pt(rat(x, den), rat(y, den))
        })
        .collect();
    pts.sort_by(|a, b| a.key_cmp(b));
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::Malformed("too few distinct points".into()));
    }
    let mut hull: Vec<Point> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point>> = if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for p in iter {
            while hull.len() >= start + 2 && !orient(&hull[hull.len() - 2], &hull[hull.len() - 1], p).is_positive() {
                hull.pop();
            }
            hull.push(p.clone());
        }
        hull.pop();
    }
    Polygon::new(hull, PolygonClass::Convex)
}
