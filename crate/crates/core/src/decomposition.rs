//! Vertical trapezoids of a polygon or glued surface, the dual tree, and its
//! refinement into a rooted binary tree of subproblems.
//!
//! Ties in x are broken by a symbolic shear: points are ordered by `(x, y)`,
//! so a vertical boundary edge behaves as if tilted slightly to the right.
//! This leaves trapezoids of zero width along vertical edges, and guarantees
//! that every trapezoid side is met by at most two neighbours, which together
//! cover it.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact_coords::{fmt_rational, Rational};
use crate::polygon_model::{orient, GluingModel, Point, Polygon, Region, Segment};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Eta {
    Left,
    Right,
}

impl Eta {
    pub fn flip(self) -> Eta {
        match self {
            Eta::Left => Eta::Right,
            Eta::Right => Eta::Left,
        }
    }
}

impl fmt::Display for Eta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Eta::Left => "left",
            Eta::Right => "right",
        })
    }
}

/// A vertical side of a trapezoid, on the sheared line through `key`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    pub key: Point,
    pub y_lo: Rational,
    pub y_hi: Rational,
    /// Boundary vertex lying strictly inside the side, if any.
    pub mid: Option<usize>,
}

impl Side {
    pub fn x(&self) -> &Rational {
        &self.key.x
    }

    pub fn is_degenerate(&self) -> bool {
        self.y_lo == self.y_hi
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trapezoid {
    pub left: Side,
    pub right: Side,
    /// Boundary edge ids.
    pub top: usize,
    pub bottom: usize,
    /// Links through each side, ordered bottom to top.
    pub left_links: Vec<usize>,
    pub right_links: Vec<usize>,
}

impl Trapezoid {
    pub fn side(&self, s: Eta) -> &Side {
        match s {
            Eta::Left => &self.left,
            Eta::Right => &self.right,
        }
    }

    pub fn links(&self, s: Eta) -> &[usize] {
        match s {
            Eta::Left => &self.left_links,
            Eta::Right => &self.right_links,
        }
    }

    pub fn width(&self) -> Rational {
        self.right.x() - self.left.x()
    }
}

/// The shared part of the right side of `left` and the left side of `right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    pub left: usize,
    pub right: usize,
    pub key: Point,
    pub y_lo: Rational,
    pub y_hi: Rational,
}

impl Link {
    pub fn other(&self, t: usize) -> usize {
        if self.left == t {
            self.right
        } else {
            self.left
        }
    }
}

/// Trapezoids, their adjacency, and the boundary they are bounded by.
#[derive(Clone, Debug)]
pub struct Complex {
    /// Boundary edges in order; edge `i` starts at boundary vertex `i`.
    pub boundary: Vec<Segment>,
    pub traps: Vec<Trapezoid>,
    pub links: Vec<Link>,
}

impl Complex {
    pub fn vertex(&self, i: usize) -> &Point {
        &self.boundary[i].p
    }

    /// The edge at a boundary vertex chosen by the left-edge rule: of the two
    /// incident edges, the one whose other endpoint comes first in `(x, y)`.
    pub fn left_edge_at(&self, v: usize) -> usize {
        let n = self.boundary.len();
        let prev = (v + n - 1) % n;
        let before = &self.boundary[prev].p;
        let after = &self.boundary[v].q;
        if before.key_cmp(after) == Ordering::Less {
            prev
        } else {
            v
        }
    }

    pub fn positive_width_count(&self) -> usize {
        self.traps.iter().filter(|t| t.left.x() < t.right.x()).count()
    }

    /// Twice the total area, summed as exact trapezoid areas.
    pub fn twice_area(&self) -> Rational {
        self.traps
            .iter()
            .map(|t| {
                let h = (&t.left.y_hi - &t.left.y_lo) + (&t.right.y_hi - &t.right.y_lo);
                h * t.width()
            })
            .sum()
    }

    /// Top and bottom `y` of trapezoid `t` at `x`, which must lie in its range.
    pub fn span_at(&self, t: usize, x: &Rational) -> (Rational, Rational) {
        let tr = &self.traps[t];
        if x == tr.left.x() && x == tr.right.x() {
            let lo = tr.left.y_lo.clone().min(tr.right.y_lo.clone());
            let hi = tr.left.y_hi.clone().max(tr.right.y_hi.clone());
            return (lo, hi);
        }
        if x == tr.left.x() {
            return (tr.left.y_lo.clone(), tr.left.y_hi.clone());
        }
        if x == tr.right.x() {
            return (tr.right.y_lo.clone(), tr.right.y_hi.clone());
        }
        (self.boundary[tr.bottom].y_at(x), self.boundary[tr.top].y_at(x))
    }
}

/// `y` of `e` on the sheared line through `p`.
fn y_at_key(e: &Segment, p: &Point) -> Rational {
    if e.p == *p {
        return p.y.clone();
    }
    if e.q == *p {
        return p.y.clone();
    }
    e.y_at(&p.x)
}

fn lex_ends(e: &Segment) -> (&Point, &Point) {
    if e.p.key_cmp(&e.q) == Ordering::Less {
        (&e.p, &e.q)
    } else {
        (&e.q, &e.p)
    }
}

/// Edge `e` passes strictly below `p` on the sheared line through `p`.
fn edge_below(e: &Segment, p: &Point) -> bool {
    if e.p == *p || e.q == *p {
        return false;
    }
    let (a, b) = lex_ends(e);
    orient(a, b, p).is_positive()
}

struct Builder {
    traps: Vec<Trapezoid>,
    links: Vec<Link>,
}

impl Builder {
    fn open(&mut self, left: Side, bottom: usize, top: usize) -> usize {
        let placeholder = left.clone();
        self.traps.push(Trapezoid {
            left,
            right: placeholder,
            top,
            bottom,
            left_links: Vec::new(),
            right_links: Vec::new(),
        });
        self.traps.len() - 1
    }

    fn link(&mut self, l: usize, r: usize, key: &Point, y_lo: Rational, y_hi: Rational) {
        let id = self.links.len();
        self.links.push(Link { left: l, right: r, key: key.clone(), y_lo, y_hi });
        self.traps[l].right_links.push(id);
        self.traps[r].left_links.push(id);
    }
}

/// Plane sweep over the vertices of a simple polygon in `(x, y)` order.
pub fn sweep_polygon(poly: &Polygon) -> Complex {
    let n = poly.n();
    let v = &poly.vertices;
    let boundary = poly.edges();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| v[a].key_cmp(&v[b]));

    let mut status: Vec<usize> = Vec::new();
    let mut gap: Vec<usize> = Vec::new();
    let mut b = Builder { traps: Vec::new(), links: Vec::new() };

    for i in order {
        let p = &v[i];
        let e_in = (i + n - 1) % n;
        let e_out = i;
        let u_right = v[e_in].key_cmp(p) == Ordering::Greater;
        let w_right = v[(i + 1) % n].key_cmp(p) == Ordering::Greater;
        let below = status.partition_point(|&e| edge_below(&boundary[e], p));
        let y = |e: usize| y_at_key(&boundary[e], p);
        let side = |lo: Rational, hi: Rational, mid: Option<usize>| Side { key: p.clone(), y_lo: lo, y_hi: hi, mid };

        if u_right && w_right {
            let up_out = orient(p, &v[e_in], &v[(i + 1) % n]).is_positive();
            let (lower, upper) = if up_out { (e_in, e_out) } else { (e_out, e_in) };
            if below % 2 == 0 {
                let t = b.open(side(p.y.clone(), p.y.clone(), None), lower, upper);
                status.splice(below..below, [lower, upper]);
                gap.insert(below / 2, t);
            } else {
                let g = below / 2;
                let t = gap[g];
                let (eb, et) = (status[below - 1], status[below]);
                let (yb, yt) = (y(eb), y(et));
                b.traps[t].right = side(yb.clone(), yt.clone(), Some(i));
                let lo = b.open(side(yb.clone(), p.y.clone(), None), eb, lower);
                let hi = b.open(side(p.y.clone(), yt.clone(), None), upper, et);
                b.link(t, lo, p, yb, p.y.clone());
                b.link(t, hi, p, p.y.clone(), yt);
                status.splice(below..below, [lower, upper]);
                gap[g] = lo;
                gap.insert(g + 1, hi);
            }
        } else if !u_right && !w_right {
            let q = below;
            if q % 2 == 0 {
                let g = q / 2;
                let t = gap[g];
                b.traps[t].right = side(p.y.clone(), p.y.clone(), None);
                status.drain(q..q + 2);
                gap.remove(g);
            } else {
                let g = q / 2;
                let (tl, th) = (gap[g], gap[g + 1]);
                let (eb, et) = (status[q - 1], status[q + 2]);
                let (yb, yt) = (y(eb), y(et));
                b.traps[tl].right = side(yb.clone(), p.y.clone(), None);
                b.traps[th].right = side(p.y.clone(), yt.clone(), None);
                let nt = b.open(side(yb.clone(), yt.clone(), Some(i)), eb, et);
                b.link(tl, nt, p, yb, p.y.clone());
                b.link(th, nt, p, p.y.clone(), yt);
                status.drain(q..q + 2);
                gap[g] = nt;
                gap.remove(g + 1);
            }
        } else {
            let (e_old, e_new) = if u_right { (e_out, e_in) } else { (e_in, e_out) };
            let q = below;
            debug_assert_eq!(status[q], e_old);
            let g = q / 2;
            let t = gap[g];
            let nt = if q % 2 == 0 {
                let et = status[q + 1];
                let yt = y(et);
                b.traps[t].right = side(p.y.clone(), yt.clone(), None);
                let nt = b.open(side(p.y.clone(), yt.clone(), None), e_new, et);
                b.link(t, nt, p, p.y.clone(), yt);
                nt
            } else {
                let eb = status[q - 1];
                let yb = y(eb);
                b.traps[t].right = side(yb.clone(), p.y.clone(), None);
                let nt = b.open(side(yb.clone(), p.y.clone(), None), eb, e_new);
                b.link(t, nt, p, yb, p.y.clone());
                nt
            };
            status[q] = e_new;
            gap[g] = nt;
        }
    }
    debug_assert!(status.is_empty());
    Complex { boundary, traps: b.traps, links: b.links }
}

/// Decomposes either kind of region.
pub fn trapezoidalize(region: &Region) -> Result<Complex> {
    match region {
        Region::Polygon(p) => Ok(sweep_polygon(p)),
        Region::Gluing(g) => decompose_gluing(g),
    }
}

// ---------------------------------------------------------------------------
// Glued surfaces

struct Surface<'a> {
    g: &'a GluingModel,
    /// For each triangle edge `(t, k)`, the glued neighbour `(t', k')`.
    nbr: Vec<[Option<(usize, usize)>; 3]>,
    /// Boundary chain position of each unglued triangle edge.
    chain_of: Vec<[Option<usize>; 3]>,
    chain: Vec<(usize, usize)>,
}

impl<'a> Surface<'a> {
    fn corner(&self, t: usize, k: usize) -> &Point {
        &self.g.triangles[t][k % 3]
    }

    fn build(g: &'a GluingModel) -> Result<Self> {
        let m = g.triangles.len();
        let mut nbr = vec![[None; 3]; m];
        for e in &g.edges {
            let ki = crate::polygon_model::triangle_edge(&g.triangles[e.i], &e.a, &e.b).expect("validated");
            let kj = crate::polygon_model::triangle_edge(&g.triangles[e.j], &e.a, &e.b).expect("validated");
            nbr[e.i][ki] = Some((e.j, kj));
            nbr[e.j][kj] = Some((e.i, ki));
        }
        let mut s = Surface { g, nbr, chain_of: vec![[None; 3]; m], chain: Vec::new() };
        // Next unglued edge after (t, k): rotate around its end vertex.
        let next = |s: &Surface, t: usize, k: usize| -> (usize, usize) {
            let (mut t, mut c) = (t, (k + 1) % 3);
            loop {
                match s.nbr[t][c] {
                    None => return (t, c),
                    Some((t2, k2)) => {
                        t = t2;
                        c = (k2 + 1) % 3;
                    }
                }
            }
        };
        let mut start: Option<(usize, usize)> = None;
        for t in 0..m {
            for k in 0..3 {
                if s.nbr[t][k].is_none() {
                    let better = match start {
                        None => true,
                        Some((t0, k0)) => s.corner(t, k).key_cmp(s.corner(t0, k0)) == Ordering::Less,
                    };
                    if better {
                        start = Some((t, k));
                    }
                }
            }
        }
        let start = start.ok_or_else(|| Error::StructureViolation("surface has no boundary".into()))?;
        let mut cur = start;
        loop {
            if s.chain_of[cur.0][cur.1].is_some() {
                return Err(Error::StructureViolation("boundary does not close up".into()));
            }
            s.chain_of[cur.0][cur.1] = Some(s.chain.len());
            s.chain.push(cur);
            cur = next(&s, cur.0, cur.1);
            if cur == start {
                break;
            }
        }
        let unglued = s.nbr.iter().flatten().filter(|x| x.is_none()).count();
        if unglued != s.chain.len() {
            return Err(Error::StructureViolation("boundary is not a single closed curve".into()));
        }
        Ok(s)
    }
}

/// A vertical ray from a boundary vertex through the surface.
struct Wall {
    key: Point,
    /// Triangles crossed, starting with the one the ray leaves the vertex in.
    tris: Vec<usize>,
    end_y: Rational,
}

/// Trapezoids of a glued surface by ray shooting inside the triangle tree.
///
/// Each wall is followed through glued edges, so rays stay on their own sheet.
/// Triangles are cut into pieces by the walls crossing them, and pieces that
/// meet along a glued edge are merged into one trapezoid.
pub fn decompose_gluing(g: &GluingModel) -> Result<Complex> {
    let s = Surface::build(g)?;
    let m = g.triangles.len();
    let boundary: Vec<Segment> = s
        .chain
        .iter()
        .map(|&(t, k)| Segment { p: s.corner(t, k).clone(), q: s.corner(t, k + 1).clone() })
        .collect();
    // Distinct boundary vertices must not share a point.
    {
        let mut pts: Vec<&Point> = boundary.iter().map(|e| &e.p).collect();
        pts.sort_by(|a, b| a.key_cmp(b));
        if pts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::StructureViolation("two boundary vertices coincide".into()));
        }
    }
    let mut sorted_pts: Vec<&Point> = boundary.iter().map(|e| &e.p).collect();
    sorted_pts.sort_by(|a, b| a.key_cmp(b));
    let on_boundary = |p: &Point| sorted_pts.binary_search_by(|q| q.key_cmp(p)).is_ok();

    // Walls: one per triangle in which a boundary vertex is the middle corner.
    let mut walls: Vec<Wall> = Vec::new();
    for t in 0..m {
        let tri = &g.triangles[t];
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&a, &b| tri[a].key_cmp(&tri[b]));
        let mid = idx[1];
        let v = &tri[mid];
        if !on_boundary(v) {
            continue;
        }
        let mut tris = vec![t];
        // exit edge: the one opposite the middle corner
        let mut cur = (t, (mid + 1) % 3);
        let end_y;
        loop {
            let (ct, ck) = cur;
            let e = Segment { p: s.corner(ct, ck).clone(), q: s.corner(ct, ck + 1).clone() };
            match s.nbr[ct][ck] {
                None => {
                    end_y = y_at_key(&e, v);
                    break;
                }
                Some((t2, k2)) => {
                    let c = s.corner(t2, k2 + 2);
                    let a = s.corner(t2, k2);
                    match c.key_cmp(v) {
                        Ordering::Equal => {
                            return Err(Error::StructureViolation("a vertical ray returns to its vertex".into()))
                        }
                        // exit through the edge joining c to the shared endpoint on the other side
                        ord => {
                            let a_side = a.key_cmp(v);
                            let k_exit = if a_side == ord { (k2 + 1) % 3 } else { (k2 + 2) % 3 };
                            tris.push(t2);
                            cur = (t2, k_exit);
                        }
                    }
                }
            }
        }
        walls.push(Wall { key: v.clone(), tris, end_y });
    }

    // Split keys per triangle.
    let mut keys: Vec<Vec<Point>> = (0..m)
        .map(|t| {
            let tri = &g.triangles[t];
            let lo = tri.iter().min_by(|a, b| a.key_cmp(b)).unwrap().clone();
            let hi = tri.iter().max_by(|a, b| a.key_cmp(b)).unwrap().clone();
            vec![lo, hi]
        })
        .collect();
    for w in &walls {
        for &t in &w.tris {
            keys[t].push(w.key.clone());
        }
    }
    for k in keys.iter_mut() {
        k.sort_by(|a, b| a.key_cmp(b));
        k.dedup();
    }
    // Pieces: (triangle, j) covering keys[t][j]..keys[t][j+1].
    let mut piece_base = vec![0usize; m + 1];
    for t in 0..m {
        piece_base[t + 1] = piece_base[t] + keys[t].len() - 1;
    }
    let np = piece_base[m];
    let mut uf: Vec<usize> = (0..np).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    let piece_at = |keys: &Vec<Vec<Point>>, t: usize, lo: &Point, hi: &Point| -> Vec<usize> {
        // pieces of t whose key range overlaps (lo, hi)
        let ks = &keys[t];
        (0..ks.len() - 1)
            .filter(|&j| ks[j].key_cmp(hi) == Ordering::Less && lo.key_cmp(&ks[j + 1]) == Ordering::Less)
            .map(|j| j)
            .collect()
    };
    for e in &g.edges {
        let (ti, tj) = (e.i, e.j);
        let (lo, hi) = if e.a.key_cmp(&e.b) == Ordering::Less { (&e.a, &e.b) } else { (&e.b, &e.a) };
        // split the shared edge at every key of either side inside it
        let mut cuts: Vec<Point> = vec![lo.clone(), hi.clone()];
        for k in keys[ti].iter().chain(keys[tj].iter()) {
            if lo.key_cmp(k) == Ordering::Less && k.key_cmp(hi) == Ordering::Less {
                cuts.push(k.clone());
            }
        }
        cuts.sort_by(|a, b| a.key_cmp(b));
        cuts.dedup();
        for w in cuts.windows(2) {
            let pi = piece_at(&keys, ti, &w[0], &w[1]);
            let pj = piece_at(&keys, tj, &w[0], &w[1]);
            if pi.len() != 1 || pj.len() != 1 {
                return Err(Error::StructureViolation("glued edge pieces do not line up".into()));
            }
            let (a, b) = (find(&mut uf, piece_base[ti] + pi[0]), find(&mut uf, piece_base[tj] + pj[0]));
            uf[a] = b;
        }
    }
    // Classes become trapezoids.
    let mut class_id = vec![usize::MAX; np];
    let mut reps: Vec<usize> = Vec::new();
    for p in 0..np {
        let r = find(&mut uf, p);
        if class_id[r] == usize::MAX {
            class_id[r] = reps.len();
            reps.push(r);
        }
        class_id[p] = class_id[r];
    }
    let nt = reps.len();
    let mut lo_key: Vec<Option<Point>> = vec![None; nt];
    let mut hi_key: Vec<Option<Point>> = vec![None; nt];
    let mut top: Vec<Option<usize>> = vec![None; nt];
    let mut bottom: Vec<Option<usize>> = vec![None; nt];
    for t in 0..m {
        let ks = &keys[t];
        for j in 0..ks.len() - 1 {
            let c = class_id[piece_base[t] + j];
            if lo_key[c].as_ref().map_or(true, |k| ks[j].key_cmp(k) == Ordering::Less) {
                lo_key[c] = Some(ks[j].clone());
            }
            if hi_key[c].as_ref().map_or(true, |k| ks[j + 1].key_cmp(k) == Ordering::Greater) {
                hi_key[c] = Some(ks[j + 1].clone());
            }
            for k in 0..3 {
                let Some(id) = s.chain_of[t][k] else { continue };
                let (a, b) = (s.corner(t, k), s.corner(t, k + 1));
                let (el, eh) = if a.key_cmp(b) == Ordering::Less { (a, b) } else { (b, a) };
                let overlaps = el.key_cmp(&ks[j + 1]) == Ordering::Less && ks[j].key_cmp(eh) == Ordering::Less;
                if !overlaps {
                    continue;
                }
                let slot = if a.key_cmp(b) == Ordering::Less { &mut bottom[c] } else { &mut top[c] };
                match slot {
                    Some(prev) if *prev != id => {
                        return Err(Error::StructureViolation("trapezoid bounded by two edges on one side".into()))
                    }
                    _ => *slot = Some(id),
                }
            }
        }
    }
    let mut b = Builder { traps: Vec::with_capacity(nt), links: Vec::new() };
    for c in 0..nt {
        let (Some(lk), Some(hk), Some(tp), Some(bt)) = (lo_key[c].clone(), hi_key[c].clone(), top[c], bottom[c]) else {
            return Err(Error::StructureViolation("trapezoid without top or bottom edge".into()));
        };
        let mk = |k: Point| Side {
            y_lo: y_at_key(&boundary[bt], &k),
            y_hi: y_at_key(&boundary[tp], &k),
            key: k,
            mid: None,
        };
        let t = b.open(mk(lk), bt, tp);
        b.traps[t].right = mk(hk);
    }
    // Links across walls.
    let vertex_id = |p: &Point| boundary.iter().position(|e| e.p == *p);
    for w in &walls {
        let mut pair: Option<(usize, usize)> = None;
        for &t in &w.tris {
            let ks = &keys[t];
            let j = ks.iter().position(|k| *k == w.key).expect("wall key recorded");
            if j == 0 || j + 1 == ks.len() {
                return Err(Error::StructureViolation("wall ends inside a triangle".into()));
            }
            let l = class_id[piece_base[t] + j - 1];
            let r = class_id[piece_base[t] + j];
            match pair {
                None => pair = Some((l, r)),
                Some(pr) if pr != (l, r) => {
                    return Err(Error::StructureViolation("wall separates different trapezoids".into()))
                }
                _ => {}
            }
        }
        let (l, r) = pair.expect("wall crosses a triangle");
        let (ya, yb) = if w.end_y > w.key.y { (w.key.y.clone(), w.end_y.clone()) } else { (w.end_y.clone(), w.key.y.clone()) };
        b.link(l, r, &w.key, ya, yb);
        // the source vertex sits inside a side spanned by two walls
        let v = vertex_id(&w.key);
        for (t, s) in [(l, Eta::Right), (r, Eta::Left)] {
            let side = match s {
                Eta::Left => &mut b.traps[t].left,
                Eta::Right => &mut b.traps[t].right,
            };
            if side.key == w.key && side.y_lo < w.key.y && w.key.y < side.y_hi {
                side.mid = v;
            }
        }
    }
    for t in b.traps.iter_mut() {
        let links = &b.links;
        t.left_links.sort_by(|&a, &c| links[a].y_lo.cmp(&links[c].y_lo));
        t.right_links.sort_by(|&a, &c| links[a].y_lo.cmp(&links[c].y_lo));
    }
    Ok(Complex { boundary, traps: b.traps, links: b.links })
}

// ---------------------------------------------------------------------------
// Refinement

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Trapezoid(usize),
    SameSide,
    CrossSide,
}

/// A piece of a trapezoid side making up part of a node's edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub trap: usize,
    pub side: Eta,
    pub y_lo: Rational,
    pub y_hi: Rational,
}

/// A vertical segment at `x` with normal `eta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSeg {
    pub x: Rational,
    pub y_lo: Rational,
    pub y_hi: Rational,
}

impl fmt::Display for EdgeSeg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={} y=[{}, {}]", fmt_rational(&self.x), fmt_rational(&self.y_lo), fmt_rational(&self.y_hi))
    }
}

#[derive(Clone, Debug)]
pub struct Node {
    pub kind: NodeKind,
    pub children: Vec<usize>,
    pub edge: EdgeSeg,
    pub eta: Eta,
    pub parts: Vec<Part>,
}

#[derive(Clone, Debug)]
pub struct Refined {
    pub nodes: Vec<Node>,
    pub root: usize,
    pub root_trap: usize,
    /// Node of each trapezoid.
    pub trap_node: Vec<usize>,
}

impl Refined {
    /// Nodes in an order where children precede parents.
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((u, done)) = stack.pop() {
            if done {
                out.push(u);
            } else {
                stack.push((u, true));
                for &c in self.nodes[u].children.iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    pub fn bridge_count(&self) -> usize {
        self.nodes.iter().filter(|n| !matches!(n.kind, NodeKind::Trapezoid(_))).count()
    }
}

/// Bridge type and edge from the two child edges. A cross-side bridge needs
/// one edge to properly contain the other with a shared endpoint.
pub fn classify_bridge(ev: &EdgeSeg, eta_v: Eta, ew: &EdgeSeg, eta_w: Eta) -> Result<(NodeKind, EdgeSeg, Eta)> {
    if ev.x != ew.x {
        return Err(Error::StructureViolation("bridge edges are not collinear".into()));
    }
    if eta_v == eta_w {
        let e = EdgeSeg {
            x: ev.x.clone(),
            y_lo: ev.y_lo.clone().min(ew.y_lo.clone()),
            y_hi: ev.y_hi.clone().max(ew.y_hi.clone()),
        };
        return Ok((NodeKind::SameSide, e, eta_v));
    }
    let inside = |a: &EdgeSeg, b: &EdgeSeg| b.y_lo <= a.y_lo && a.y_hi <= b.y_hi && a != b;
    let (small, big, eta) = if inside(ev, ew) {
        (ev, ew, eta_w)
    } else if inside(ew, ev) {
        (ew, ev, eta_v)
    } else {
        return Err(Error::StructureViolation(format!("cross-side edges {ev} and {ew} are not nested")));
    };
    let e = if small.y_lo == big.y_lo {
        EdgeSeg { x: big.x.clone(), y_lo: small.y_hi.clone(), y_hi: big.y_hi.clone() }
    } else if small.y_hi == big.y_hi {
        EdgeSeg { x: big.x.clone(), y_lo: big.y_lo.clone(), y_hi: small.y_lo.clone() }
    } else {
        return Err(Error::StructureViolation(format!("{small} sits strictly inside {big}")));
    };
    Ok((NodeKind::CrossSide, e, eta))
}

/// The default root: the leaf trapezoid with the smallest `(left x, bottom edge)`.
pub fn default_root(c: &Complex) -> Result<usize> {
    (0..c.traps.len())
        .filter(|&t| c.traps[t].left_links.len() + c.traps[t].right_links.len() == 1)
        .min_by(|&a, &b| {
            let (ta, tb) = (&c.traps[a], &c.traps[b]);
            ta.left.x().cmp(tb.left.x()).then(ta.bottom.cmp(&tb.bottom)).then(a.cmp(&b))
        })
        .ok_or_else(|| Error::StructureViolation("dual graph has no leaf".into()))
}

/// A leaf trapezoid whose closure contains `p`.
pub fn leaf_at(c: &Complex, p: &Point) -> Result<usize> {
    (0..c.traps.len())
        .filter(|&t| c.traps[t].left_links.len() + c.traps[t].right_links.len() == 1)
        .find(|&t| {
            let tr = &c.traps[t];
            if p.x < *tr.left.x() || p.x > *tr.right.x() {
                return false;
            }
            let (lo, hi) = c.span_at(t, &p.x);
            lo <= p.y && p.y <= hi
        })
        .ok_or_else(|| Error::StructureViolation(format!("no leaf trapezoid contains {p}")))
}

/// Roots the dual tree at leaf `root` and builds the binary refinement.
pub fn refine_to_binary(c: &Complex, root: usize) -> Result<Refined> {
    let nt = c.traps.len();
    let rt = &c.traps[root];
    let free = match (rt.left_links.len(), rt.right_links.len()) {
        (0, 1) => Eta::Left,
        (1, 0) => Eta::Right,
        _ => return Err(Error::StructureViolation(format!("trapezoid {root} is not a leaf"))),
    };
    // Parent side (toward the root) of every trapezoid, by BFS.
    let mut parent_link: Vec<Option<usize>> = vec![None; nt];
    let mut facing: Vec<Option<Eta>> = vec![None; nt];
    facing[root] = Some(free);
    let mut order = vec![root];
    let mut head = 0;
    while head < order.len() {
        let t = order[head];
        head += 1;
        for s in [Eta::Left, Eta::Right] {
            for &l in c.traps[t].links(s) {
                if Some(l) == parent_link[t] {
                    continue;
                }
                let o = c.links[l].other(t);
                if facing[o].is_some() {
                    return Err(Error::StructureViolation("dual graph has a cycle".into()));
                }
                facing[o] = Some(s.flip());
                parent_link[o] = Some(l);
                order.push(o);
            }
        }
    }
    if order.len() != nt {
        return Err(Error::StructureViolation("dual graph is disconnected".into()));
    }

    let mut nodes: Vec<Node> = Vec::with_capacity(3 * nt);
    let mut trap_node = vec![usize::MAX; nt];
    let mut top_node = vec![usize::MAX; nt];
    let push = |nodes: &mut Vec<Node>, n: Node| {
        nodes.push(n);
        nodes.len() - 1
    };
    for &t in order.iter().rev() {
        let s = facing[t].unwrap();
        let tr = &c.traps[t];
        let back: Vec<usize> = tr.links(s.flip()).iter().map(|&l| c.links[l].other(t)).collect();
        let front: Vec<usize> = tr
            .links(s)
            .iter()
            .filter(|&&l| Some(l) != parent_link[t])
            .map(|&l| c.links[l].other(t))
            .collect();
        // Chain of back children, bottom to top.
        let mut chain: Option<usize> = None;
        for &b in &back {
            let bn = top_node[b];
            chain = Some(match chain {
                None => bn,
                Some(prev) => {
                    let (kind, edge, eta) = classify_bridge(&nodes[prev].edge, nodes[prev].eta, &nodes[bn].edge, nodes[bn].eta)?;
                    if kind != NodeKind::SameSide {
                        return Err(Error::StructureViolation("back children on different sides".into()));
                    }
                    let mut parts = nodes[prev].parts.clone();
                    parts.extend(nodes[bn].parts.iter().cloned());
                    push(&mut nodes, Node { kind, children: vec![prev, bn], edge, eta, parts })
                }
            });
        }
        let side = tr.side(s);
        let edge = EdgeSeg { x: side.x().clone(), y_lo: side.y_lo.clone(), y_hi: side.y_hi.clone() };
        let tn = push(
            &mut nodes,
            Node {
                kind: NodeKind::Trapezoid(t),
                children: chain.into_iter().collect(),
                edge: edge.clone(),
                eta: s,
                parts: vec![Part { trap: t, side: s, y_lo: side.y_lo.clone(), y_hi: side.y_hi.clone() }],
            },
        );
        trap_node[t] = tn;
        let mut top = tn;
        if front.len() > 1 {
            return Err(Error::StructureViolation(format!("trapezoid {t} has too many neighbours on one side")));
        }
        for &f in &front {
            let fnode = top_node[f];
            let (kind, e, eta) = classify_bridge(&nodes[tn].edge, s, &nodes[fnode].edge, nodes[fnode].eta)?;
            if kind != NodeKind::CrossSide || eta != s {
                return Err(Error::StructureViolation(format!("front child of trapezoid {t} is not nested in its side")));
            }
            let parts = vec![Part { trap: t, side: s, y_lo: e.y_lo.clone(), y_hi: e.y_hi.clone() }];
            top = push(&mut nodes, Node { kind, children: vec![tn, fnode], edge: e, eta, parts });
        }
        if let Some(l) = parent_link[t] {
            let lk = &c.links[l];
            let e = &nodes[top].edge;
            if e.y_lo != lk.y_lo || e.y_hi != lk.y_hi {
                return Err(Error::StructureViolation(format!("edge of trapezoid {t} does not match its parent link")));
            }
        }
        top_node[t] = top;
    }
    Ok(Refined { nodes, root: top_node[root], root_trap: root, trap_node })
}

/// Text dump of the trapezoids and the refined tree.
pub fn dump(c: &Complex, r: &Refined) -> String {
    let mut s = String::new();
    s.push_str(&format!("trapezoids {} positive_width {}\n", c.traps.len(), c.positive_width_count()));
    for (i, t) in c.traps.iter().enumerate() {
        s.push_str(&format!(
            "trap {i} x=[{}, {}] top {} bottom {} left_y=[{}, {}] right_y=[{}, {}]\n",
            fmt_rational(t.left.x()),
            fmt_rational(t.right.x()),
            t.top,
            t.bottom,
            fmt_rational(&t.left.y_lo),
            fmt_rational(&t.left.y_hi),
            fmt_rational(&t.right.y_lo),
            fmt_rational(&t.right.y_hi)
        ));
    }
    s.push_str(&format!("nodes {} root {}\n", r.nodes.len(), r.root));
    for (i, n) in r.nodes.iter().enumerate() {
        let kind = match n.kind {
            NodeKind::Trapezoid(t) => format!("trapezoid {t}"),
            NodeKind::SameSide => "same_side".to_string(),
            NodeKind::CrossSide => "cross_side".to_string(),
        };
        let kids: Vec<String> = n.children.iter().map(|c| c.to_string()).collect();
        s.push_str(&format!("node {i} {kind} eta {} {} children [{}]\n", n.eta, n.edge, kids.join(" ")));
    }
    s
}
