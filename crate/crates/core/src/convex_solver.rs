//! Convex polygons: the optimum is `⌈h⌉` for horizontal width `h`, realised
//! by cuts at unit spacing from the leftmost vertex.

use std::cell::Cell;
use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact_coords::{ceil_diff, floor_int, EpsCoord, Rational};
use crate::polygon_model::{Codeword, CutDescriptor, Point, Polygon, Record};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullExtremes {
    pub left: usize,
    pub right: usize,
    pub h: Rational,
}

thread_local! {
    static PROBES: Cell<u64> = const { Cell::new(0) };
}

/// Edge evaluations made by [`convex_extremes`] on this thread.
pub fn probe_count() -> u64 {
    PROBES.with(|p| p.get())
}

pub fn reset_probes() {
    PROBES.with(|p| p.set(0));
}

type Dir = (Rational, Rational);

fn cross(a: &Dir, b: &Dir) -> Rational {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn dot(a: &Dir, b: &Dir) -> Rational {
    &a.0 * &b.0 + &a.1 * &b.1
}

/// Compares the counterclockwise angles from `base` to `a` and to `b`, each
/// taken in `[0, 2π)`.
fn rel_angle_cmp(base: &Dir, a: &Dir, b: &Dir) -> Ordering {
    let half = |d: &Dir| {
        let c = cross(base, d);
        if c.is_positive() || (c.is_zero() && dot(base, d).is_positive()) {
            0
        } else {
            1
        }
    };
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha.cmp(&hb);
    }
    let c = cross(a, b);
    if c.is_positive() {
        Ordering::Less
    } else if c.is_negative() {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

fn edge_dir(p: &Polygon, i: usize) -> Dir {
    PROBES.with(|c| c.set(c.get() + 1));
    let n = p.n();
    let (a, b) = (&p.vertices[i % n], &p.vertices[(i + 1) % n]);
    (&b.x - &a.x, &b.y - &a.y)
}

/// Start vertex of the first edge, in boundary order from edge 0, whose
/// angle relative to edge 0 is at least that of `target`.
fn first_edge_at(p: &Polygon, base: &Dir, target: &Dir) -> usize {
    let n = p.n();
    let (mut lo, mut hi) = (0usize, n);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if rel_angle_cmp(base, &edge_dir(p, mid), target) == Ordering::Less {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo % n
}

/// Leftmost and rightmost vertices of a convex polygon by two binary searches
/// over edge angles. Ties go to the smaller index.
pub fn convex_extremes(p: &Polygon) -> HullExtremes {
    let base = edge_dir(p, 0);
    let up: Dir = (Rational::zero(), Rational::one());
    let down: Dir = (Rational::zero(), -Rational::one());
    let v = &p.vertices;
    // The rightmost vertices form one boundary run starting where edges turn
    // to point up or left; if the run wraps past index 0, vertex 0 is in it.
    let mut right = first_edge_at(p, &base, &up);
    if v[0].x == v[right].x {
        right = 0;
    }
    let mut left = first_edge_at(p, &base, &down);
    if v[0].x == v[left].x {
        left = 0;
    }
    let h = &v[right].x - &v[left].x;
    HullExtremes { left, right, h }
}

/// `⌈h⌉`, and 1 for slivers of width at most one.
pub fn value_from_width(h: &Rational) -> BigInt {
    let c = ceil_diff(&EpsCoord::exact(h.clone()), &EpsCoord::exact(Rational::zero()));
    if c < BigInt::one() {
        BigInt::one()
    } else {
        c
    }
}

pub fn convex_value(p: &Polygon) -> BigInt {
    value_from_width(&convex_extremes(p).h)
}

/// One maximal x-range over which the top and bottom edges stay fixed.
struct Slab {
    hi: Rational,
    top: usize,
    bottom: usize,
}

/// Slabs from left to right. A slab covers `(lo, hi]`, so a cut through a
/// vertex is charged to the edges on its left.
fn slabs(p: &Polygon, ex: &HullExtremes) -> Vec<Slab> {
    let n = p.n();
    let v = &p.vertices;
    let x_right = &v[ex.right].x;
    // Lower chain: forward from the leftmost vertex; upper chain: backward.
    let mut out = Vec::new();
    let mut lo_e = ex.left;
    let mut up_e = (ex.left + n - 1) % n;
    // Skip vertical edges at the left end.
    while v[(lo_e + 1) % n].x == v[lo_e].x && lo_e != ex.right {
        lo_e = (lo_e + 1) % n;
    }
    while v[up_e].x == v[(up_e + 1) % n].x {
        up_e = (up_e + n - 1) % n;
    }
    loop {
        let lo_end = &v[(lo_e + 1) % n].x;
        let up_end = &v[up_e].x;
        let hi = lo_end.min(up_end).clone();
        out.push(Slab { hi: hi.clone(), top: up_e, bottom: lo_e });
        if hi >= *x_right {
            break;
        }
        if *lo_end == hi {
            lo_e = (lo_e + 1) % n;
        }
        if *up_end == hi {
            up_e = (up_e + n - 1) % n;
        }
    }
    out
}

/// Cut descriptors of the equally spaced optimal partition, as a codeword.
///
/// Cuts are listed as literals when there are fewer cuts than vertices and
/// they touch more than one edge pair; otherwise as one run per edge pair.
pub fn convex_report(p: &Polygon) -> Codeword {
    let ex = convex_extremes(p);
    let cuts = value_from_width(&ex.h) - BigInt::one();
    if cuts.is_zero() {
        return Codeword::default();
    }
    let x_left = &p.vertices[ex.left].x;
    let at = |j: &BigInt| EpsCoord::exact(x_left + Rational::from_integer(j.clone()));
    // (top, bottom, first j, last j) per slab holding cuts
    let mut groups: Vec<(usize, usize, BigInt, BigInt)> = Vec::new();
    let mut next = BigInt::one();
    for s in slabs(p, &ex) {
        let last = floor_int(&(&s.hi - x_left)).min(cuts.clone());
        if last >= next {
            groups.push((s.top, s.bottom, next.clone(), last.clone()));
            next = last + 1;
        }
        if next > cuts {
            break;
        }
    }
    let literal = cuts < BigInt::from(p.n()) && groups.len() > 1;
    let mut records = Vec::new();
    for (top, bottom, first, last) in groups {
        if literal {
            let mut j = first;
            while j <= last {
                records.push(Record::Lit(CutDescriptor { top, bottom, x: at(&j) }));
                j += 1;
            }
        } else {
            let count = (&last - &first + BigInt::one()).to_u64().expect("cut count fits in u64");
            records.push(Record::Run { first: CutDescriptor { top, bottom, x: at(&first) }, count });
        }
    }
    Codeword { records }
}

/// Linear scan used to check the binary search.
pub fn extremes_by_scan(p: &Polygon) -> HullExtremes {
    let v: &[Point] = &p.vertices;
    let mut left = 0;
    let mut right = 0;
    for i in 1..v.len() {
        if v[i].x < v[left].x {
            left = i;
        }
        if v[i].x > v[right].x {
            right = i;
        }
    }
    HullExtremes { left, right, h: &v[right].x - &v[left].x }
}
