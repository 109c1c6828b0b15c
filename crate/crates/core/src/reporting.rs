//! Turning a solved instance into explicit cuts, and checking cut sets.
//!
//! Reconstruction walks the refined tree from the root, following the
//! recorded origin of one antichain member per node. Cuts inside a trapezoid
//! come out as runs; cuts along a trapezoid side or placed at a bridge come
//! out as literals and bridge records.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ccb_lattice::{Interval, Origin};
use crate::decomposition::{trapezoidalize, Complex, Eta, NodeKind, Part};
use crate::dp_engine::{solve_rooted, virtual_leaf, Solution, Step};
use crate::error::{Error, Result};
use crate::exact_coords::{ceil_diff, floor_diff, floor_int, EpsCoord, Rational};
use crate::polygon_model::{cut_end_y, decode_codeword, Codeword, CutDescriptor, DecodedCut, Point, Record, Region, SideTag};

/// A value for `ε` small enough that every `x(v) + m ± ε` keeps its order
/// relative to every other `x(w) + m'`.
pub fn eps_for(c: &Complex) -> Rational {
    let mut fr: Vec<Rational> = c
        .boundary
        .iter()
        .map(|s| {
            let x = &s.p.x;
            x - Rational::from_integer(floor_int(x))
        })
        .collect();
    fr.sort();
    fr.dedup();
    let mut gap = Rational::one();
    for w in fr.windows(2) {
        gap = gap.min(&w[1] - &w[0]);
    }
    if fr.len() > 1 {
        gap = gap.min(Rational::one() - (fr.last().unwrap() - &fr[0]));
    }
    gap / Rational::from_integer(4.into())
}

#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub codeword: Codeword,
    pub eps_num: Rational,
    /// Tree nodes and trapezoids visited.
    pub touches: u64,
}

enum End {
    Vertex(usize),
    Edge(usize),
}

struct Emitter<'a> {
    c: &'a Complex,
    records: Vec<Record>,
    touches: u64,
    /// Boundary vertices by `x`, as `(y, id)`.
    by_x: HashMap<Rational, Vec<(Rational, usize)>>,
}

impl Emitter<'_> {
    fn locate(&self, edge: usize, p: &Point) -> End {
        let n = self.c.boundary.len();
        let e = &self.c.boundary[edge];
        if e.p == *p {
            End::Vertex(edge)
        } else if e.q == *p {
            End::Vertex((edge + 1) % n)
        } else {
            End::Edge(edge)
        }
    }

    /// Edge id whose decoded endpoint at `x` is `y`.
    fn pick(&self, end: &End, x: &Rational, y: &Rational, top: bool) -> Result<usize> {
        let n = self.c.boundary.len();
        let cands = match *end {
            End::Edge(e) => vec![e],
            End::Vertex(v) => {
                let l = self.c.left_edge_at(v);
                let other = if l == v { (v + n - 1) % n } else { v };
                vec![l, other]
            }
        };
        cands
            .into_iter()
            .find(|&e| {
                let s = &self.c.boundary[e];
                s.spans_x(x) && cut_end_y(s, x, top) == *y
            })
            .ok_or_else(|| Error::StructureViolation(format!("no boundary edge ends a cut at ({x}, {y})")))
    }

    /// Chord pieces along side `s` of trapezoid `t` over `[y_lo, y_hi]`,
    /// split at boundary vertices on the side. Pieces lying on a vertical
    /// boundary edge are dropped.
    ///
    /// The sheared side passes beside any vertex on it other than its own
    /// key. If such a vertex has both edges on one side, a cut through it
    /// would split what the sheared cut leaves joined, so the cut moves by `ε`
    /// to the other side instead.
    fn side_chord(&mut self, t: usize, s: Eta, y_lo: &Rational, y_hi: &Rational) -> Result<Vec<CutDescriptor>> {
        self.touches += 1;
        let c = self.c;
        let n = c.boundary.len();
        let tr = &c.traps[t];
        let side = tr.side(s);
        let x = side.x().clone();
        let mut inner: Vec<(Rational, usize)> = self
            .by_x
            .get(&x)
            .map(|v| v.iter().filter(|(y, _)| y_lo < y && y < y_hi).cloned().collect())
            .unwrap_or_default();
        inner.sort();
        for (_, v) in &inner {
            if Some(*v) == side.mid {
                continue;
            }
            let prev = &c.boundary[(v + n - 1) % n].p;
            let next = &c.boundary[*v].q;
            if prev.x < x && next.x < x {
                return Ok(self.shifted_chord(t, &x, y_lo, y_hi, Eta::Right));
            }
            if prev.x > x && next.x > x {
                return Ok(self.shifted_chord(t, &x, y_lo, y_hi, Eta::Left));
            }
        }
        let mut ends: Vec<(Rational, Option<usize>)> = vec![(y_lo.clone(), None)];
        ends.extend(inner.into_iter().map(|(y, v)| (y, Some(v))));
        ends.push((y_hi.clone(), None));
        let end_at = |y: &Rational, v: Option<usize>| -> Result<End> {
            if let Some(v) = v {
                return Ok(End::Vertex(v));
            }
            let p = Point::new(x.clone(), y.clone());
            if *y == side.y_hi {
                Ok(self.locate(tr.top, &p))
            } else if *y == side.y_lo {
                Ok(self.locate(tr.bottom, &p))
            } else {
                Err(Error::StructureViolation(format!("cut end ({x}, {y}) is not on the boundary")))
            }
        };
        let mut out = Vec::new();
        for w in ends.windows(2) {
            let ((ylo, vlo), (yhi, vhi)) = (&w[0], &w[1]);
            if ylo >= yhi {
                continue;
            }
            let (lo_end, hi_end) = (end_at(ylo, *vlo)?, end_at(yhi, *vhi)?);
            if let (End::Vertex(a), End::Vertex(b)) = (&lo_end, &hi_end) {
                if (a + 1) % n == *b || (b + 1) % n == *a {
                    continue;
                }
            }
            let top = self.pick(&hi_end, &x, yhi, true)?;
            let bottom = self.pick(&lo_end, &x, ylo, false)?;
            out.push(CutDescriptor { top, bottom, x: EpsCoord::exact(x.clone()) });
        }
        Ok(out)
    }

    /// Full-height cuts at `x ± ε` through the positive-width trapezoids on
    /// side `dir` of `x` that meet `[y_lo, y_hi]`, found from `t` through
    /// links at `x`.
    fn shifted_chord(&mut self, t: usize, x: &Rational, y_lo: &Rational, y_hi: &Rational, dir: Eta) -> Vec<CutDescriptor> {
        let c = self.c;
        let at = match dir {
            Eta::Right => EpsCoord::exact(x.clone()).plus_eps(),
            Eta::Left => EpsCoord::exact(x.clone()).minus_eps(),
        };
        let overlaps = |lo: &Rational, hi: &Rational| lo.clone().max(y_lo.clone()) < hi.clone().min(y_hi.clone());
        let mut out = Vec::new();
        let mut stack = vec![t];
        let mut seen = vec![t];
        while let Some(u) = stack.pop() {
            self.touches += 1;
            let tr = &c.traps[u];
            let on_dir = match dir {
                Eta::Right => tr.left.x() == x && tr.right.x() > x,
                Eta::Left => tr.right.x() == x && tr.left.x() < x,
            };
            if on_dir {
                let sd = tr.side(dir.flip());
                if overlaps(&sd.y_lo, &sd.y_hi) {
                    out.push(CutDescriptor { top: tr.top, bottom: tr.bottom, x: at.clone() });
                }
            }
            for s in [Eta::Left, Eta::Right] {
                for &l in tr.links(s) {
                    let lk = &c.links[l];
                    let o = lk.other(u);
                    if lk.key.x == *x && overlaps(&lk.y_lo, &lk.y_hi) && !seen.contains(&o) {
                        seen.push(o);
                        stack.push(o);
                    }
                }
            }
        }
        out
    }

    fn parts_chord(&mut self, parts: &[Part]) -> Result<Vec<CutDescriptor>> {
        let mut out = Vec::new();
        for p in parts {
            out.extend(self.side_chord(p.trap, p.side, &p.y_lo, &p.y_hi)?);
        }
        Ok(out)
    }

    /// Full-height cuts at `x ∓ ε` just behind side `s` of `t`, passing through
    /// zero-width trapezoids to the positive-width ones behind them.
    fn behind_chord(&mut self, t: usize, s: Eta) -> Vec<CutDescriptor> {
        let c = self.c;
        let x = c.traps[t].side(s).x().clone();
        let at = match s {
            Eta::Right => EpsCoord::exact(x.clone()).minus_eps(),
            Eta::Left => EpsCoord::exact(x.clone()).plus_eps(),
        };
        let mut out = Vec::new();
        let mut stack = vec![t];
        let mut seen = vec![t];
        while let Some(u) = stack.pop() {
            self.touches += 1;
            let tr = &c.traps[u];
            if tr.left.x() < tr.right.x() {
                out.push(CutDescriptor { top: tr.top, bottom: tr.bottom, x: at.clone() });
                continue;
            }
            for &l in tr.links(s.flip()) {
                let o = c.links[l].other(u);
                if !seen.contains(&o) {
                    seen.push(o);
                    stack.push(o);
                }
            }
        }
        out
    }
}

/// Cut records realising the optimum of a solved instance.
pub fn reconstruct(sol: &Solution) -> Result<Reconstruction> {
    reconstruct_from(sol, 0)
}

/// As [`reconstruct`], keeping antichain member `pick` open at the root.
pub fn reconstruct_from(sol: &Solution, pick: usize) -> Result<Reconstruction> {
    let c = &sol.complex;
    let r = &sol.refined;
    let mut by_x: HashMap<Rational, Vec<(Rational, usize)>> = HashMap::new();
    for (i, e) in c.boundary.iter().enumerate() {
        by_x.entry(e.p.x.clone()).or_default().push((e.p.y.clone(), i));
    }
    let mut em = Emitter { c, records: Vec::new(), touches: 0, by_x };
    // (node, antichain index, whether a cut on the node's front side must
    // sit just inside its trapezoid)
    let mut stack: Vec<(usize, usize, bool)> = vec![(r.root, pick, false)];
    while let Some((u, idx, inset)) = stack.pop() {
        em.touches += 1;
        let node = &r.nodes[u];
        let st = &sol.states[u];
        match node.kind {
            NodeKind::Trapezoid(t) => {
                let tr = &c.traps[t];
                let a = EpsCoord::exact(tr.left.x().clone());
                let b = EpsCoord::exact(tr.right.x().clone());
                let child = node.children.first().copied();
                match &st.step {
                    Step::Extend => {
                        if let (Some(ch), Some(Origin::Pair(i, _))) = (child, st.origin.get(idx)) {
                            stack.push((ch, *i as usize, false));
                        }
                    }
                    Step::Cut { pick, k } => {
                        let iv: Interval = match child {
                            Some(ch) => {
                                stack.push((ch, *pick, false));
                                sol.states[ch].chain.items()[*pick].clone()
                            }
                            None => virtual_leaf(&a, &b, node.eta).items()[0].clone(),
                        };
                        // cut positions base, base + 1, ..., base + k - 1
                        let base = match node.eta {
                            Eta::Right => iv.lo.shift(&BigInt::one()),
                            Eta::Left => iv.hi.shift(&-k.clone()),
                        };
                        let last = k - BigInt::one();
                        let i_min = (floor_diff(&a, &base) + BigInt::one()).max(BigInt::zero());
                        let i_max = (ceil_diff(&b, &base) - BigInt::one()).min(last.clone());
                        let (front_lo, front_hi) = match node.eta {
                            Eta::Left => (true, false),
                            Eta::Right => (false, true),
                        };
                        if i_min > BigInt::zero() {
                            let pieces = if inset && front_lo {
                                em.behind_chord(t, Eta::Left)
                            } else {
                                em.side_chord(t, Eta::Left, &tr.left.y_lo, &tr.left.y_hi)?
                            };
                            em.records.extend(pieces.into_iter().map(Record::Lit));
                        }
                        if i_max >= i_min {
                            let count = (&i_max - &i_min + BigInt::one())
                                .to_u64()
                                .ok_or_else(|| Error::TooLarge("cut run does not fit in u64".into()))?;
                            let first = CutDescriptor { top: tr.top, bottom: tr.bottom, x: base.shift(&i_min) };
                            em.records.push(Record::Run { first, count });
                        }
                        if i_max < last {
                            let pieces = if inset && front_hi {
                                em.behind_chord(t, Eta::Right)
                            } else {
                                em.side_chord(t, Eta::Right, &tr.right.y_lo, &tr.right.y_hi)?
                            };
                            em.records.extend(pieces.into_iter().map(Record::Lit));
                        }
                    }
                    Step::Meet | Step::Join => unreachable!("trapezoid nodes extend or cut"),
                }
            }
            NodeKind::SameSide | NodeKind::CrossSide => {
                let (v, w) = (node.children[0], node.children[1]);
                // At a cross-side bridge the small child reaches the parent
                // only through a sliver of the big trapezoid.
                let cross = node.kind == NodeKind::CrossSide;
                let bridge = |side: SideTag, cuts: Vec<CutDescriptor>| -> Vec<Record> {
                    cuts.into_iter().map(|cut| Record::Bridge { node: u, side, cut }).collect()
                };
                match st.origin[idx] {
                    Origin::Pair(i, j) => {
                        stack.push((v, i as usize, cross));
                        stack.push((w, j as usize, false));
                    }
                    Origin::Left(i) => {
                        stack.push((v, i as usize, false));
                        stack.push((w, 0, false));
                        let cuts = em.parts_chord(&r.nodes[w].parts)?;
                        em.records.extend(bridge(SideTag::Right, cuts));
                    }
                    Origin::Right(j) => {
                        stack.push((w, j as usize, false));
                        stack.push((v, 0, cross));
                        let cuts = if node.kind == NodeKind::SameSide {
                            em.parts_chord(&r.nodes[v].parts)?
                        } else {
                            let t = match r.nodes[v].kind {
                                NodeKind::Trapezoid(t) => t,
                                _ => return Err(Error::StructureViolation("cross-side bridge without a trapezoid".into())),
                            };
                            em.behind_chord(t, node.eta)
                        };
                        em.records.extend(bridge(SideTag::Left, cuts));
                    }
                }
            }
        }
    }
    Ok(Reconstruction { codeword: Codeword { records: em.records }, eps_num: eps_for(c), touches: em.touches })
}

// ---------------------------------------------------------------------------
// Validation

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    pub pieces: usize,
    pub max_width: Rational,
    /// Cuts that matched no chord of the region.
    pub stray: usize,
    pub valid: bool,
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

/// A slice of one trapezoid between two consecutive cut positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub trap: usize,
    pub x_lo: Rational,
    pub x_hi: Rational,
    /// Piece label, dense from zero; `None` for zero-width cells.
    pub piece: Option<usize>,
}

/// Counts the pieces a set of cuts leaves and checks each has width at most one.
pub fn validate_partition(c: &Complex, cuts: &[DecodedCut], gluing: bool) -> Validation {
    partition_cells(c, cuts, gluing).0
}

/// As [`validate_partition`], also returning every cell with its piece.
pub fn partition_cells(c: &Complex, cuts: &[DecodedCut], gluing: bool) -> (Validation, Vec<Cell>) {
    let nt = c.traps.len();
    // interior split points per trapezoid
    let mut splits: Vec<Vec<Rational>> = vec![Vec::new(); nt];
    // cut y-ranges touching each link
    let mut on_link: Vec<Vec<(Rational, Rational)>> = vec![Vec::new(); c.links.len()];
    let mut stray = 0;
    let edge_match = |t: usize, d: &CutDescriptor| {
        let tr = &c.traps[t];
        !gluing || tr.top == d.top || tr.bottom == d.bottom || tr.top == d.bottom || tr.bottom == d.top
    };
    for cut in cuts {
        let x = &cut.x;
        let mut matched = false;
        for t in 0..nt {
            let tr = &c.traps[t];
            if tr.left.x() < x && x < tr.right.x() {
                let (lo, hi) = c.span_at(t, x);
                if lo == cut.y_lo && hi == cut.y_hi && edge_match(t, &cut.descriptor) {
                    splits[t].push(x.clone());
                    matched = true;
                }
            }
        }
        if matched {
            continue;
        }
        // along sides: flood from matching trapezoids through links at x
        let overlaps = |lo: &Rational, hi: &Rational| lo.clone().max(cut.y_lo.clone()) < hi.clone().min(cut.y_hi.clone());
        let mut stack: Vec<usize> = (0..nt)
            .filter(|&t| {
                let tr = &c.traps[t];
                (tr.left.x() == x || tr.right.x() == x) && {
                    let (lo, hi) = c.span_at(t, x);
                    overlaps(&lo, &hi)
                } && edge_match(t, &cut.descriptor)
            })
            .collect();
        let mut seen = stack.clone();
        let mut touched = Vec::new();
        while let Some(t) = stack.pop() {
            for s in [Eta::Left, Eta::Right] {
                for &l in c.traps[t].links(s) {
                    let lk = &c.links[l];
                    if lk.key.x != *x || !overlaps(&lk.y_lo, &lk.y_hi) || touched.contains(&l) {
                        continue;
                    }
                    touched.push(l);
                    let o = lk.other(t);
                    if !seen.contains(&o) {
                        seen.push(o);
                        stack.push(o);
                    }
                }
            }
        }
        if touched.is_empty() {
            stray += 1;
        }
        for l in touched {
            on_link[l].push((cut.y_lo.clone(), cut.y_hi.clone()));
        }
    }
    // cells: each trapezoid split at its interior cuts
    let mut first_cell = vec![0usize; nt];
    let mut last_cell = vec![0usize; nt];
    let mut cell_ext: Vec<(Rational, Rational, bool)> = Vec::new();
    let mut cell_trap: Vec<usize> = Vec::new();
    for t in 0..nt {
        let tr = &c.traps[t];
        let mut xs = std::mem::take(&mut splits[t]);
        xs.sort();
        xs.dedup();
        let mut bounds = vec![tr.left.x().clone()];
        bounds.extend(xs);
        bounds.push(tr.right.x().clone());
        first_cell[t] = cell_ext.len();
        for w in bounds.windows(2) {
            cell_ext.push((w[0].clone(), w[1].clone(), w[0] < w[1]));
            cell_trap.push(t);
        }
        last_cell[t] = cell_ext.len() - 1;
    }
    let mut uf: Vec<usize> = (0..cell_ext.len()).collect();
    for (l, lk) in c.links.iter().enumerate() {
        let mut cov = std::mem::take(&mut on_link[l]);
        cov.sort();
        let mut reach = lk.y_lo.clone();
        for (lo, hi) in cov {
            if lo <= reach && hi > reach {
                reach = hi;
            }
        }
        if reach >= lk.y_hi && lk.y_lo < lk.y_hi {
            continue;
        }
        let (a, b) = (find(&mut uf, last_cell[lk.left]), find(&mut uf, first_cell[lk.right]));
        uf[a] = b;
    }
    let mut ext: Vec<Option<(Rational, Rational)>> = vec![None; cell_ext.len()];
    for i in 0..cell_ext.len() {
        let (lo, hi, positive) = &cell_ext[i];
        if !positive {
            continue;
        }
        let r = find(&mut uf, i);
        ext[r] = Some(match ext[r].take() {
            None => (lo.clone(), hi.clone()),
            Some((l, h)) => (l.min(lo.clone()), h.max(hi.clone())),
        });
    }
    let mut label = vec![None; cell_ext.len()];
    let mut widths = Vec::new();
    for (r, e) in ext.into_iter().enumerate() {
        if let Some((l, h)) = e {
            label[r] = Some(widths.len());
            widths.push(h - l);
        }
    }
    let cells = cell_ext
        .into_iter()
        .enumerate()
        .map(|(i, (x_lo, x_hi, positive))| {
            let piece = if positive { label[find(&mut uf, i)] } else { None };
            Cell { trap: cell_trap[i], x_lo, x_hi, piece }
        })
        .collect();
    let max_width = widths.iter().max().cloned().unwrap_or_else(Rational::zero);
    let pieces = widths.len();
    let valid = stray == 0 && !(max_width > Rational::one()) && !max_width.is_negative();
    (Validation { pieces, max_width, stray, valid }, cells)
}

/// Decodes a codeword against a region and validates the resulting cuts.
pub fn check_codeword(region: &Region, cw: &Codeword, eps_num: &Rational) -> Result<(Vec<DecodedCut>, Validation)> {
    let c = trapezoidalize(region)?;
    let cuts = decode_codeword(&c.boundary, cw, eps_num)?;
    let v = validate_partition(&c, &cuts, matches!(region, Region::Gluing(_)));
    Ok((cuts, v))
}

/// A solved instance together with its validated cut set.
#[derive(Debug)]
pub struct Report {
    pub solution: Solution,
    pub reconstruction: Reconstruction,
    pub cuts: Vec<DecodedCut>,
    pub validation: Validation,
}

impl Report {
    /// Valid, and with exactly the optimal number of pieces.
    pub fn is_exact(&self) -> bool {
        self.validation.valid && BigInt::from(self.validation.pieces) == self.solution.opt
    }
}

fn report_at(region: &Region, root: Option<&Point>) -> Result<(Report, bool)> {
    let solution = solve_rooted(region, root)?;
    let members = solution.states[solution.refined.root].chain.len().max(1);
    let mut first = None;
    for pick in 0..members {
        let reconstruction = reconstruct_from(&solution, pick)?;
        let (cuts, validation) = check_codeword(region, &reconstruction.codeword, &reconstruction.eps_num)?;
        let exact = validation.valid && BigInt::from(validation.pieces) == solution.opt;
        if exact {
            return Ok((Report { solution, reconstruction, cuts, validation }, true));
        }
        first.get_or_insert((reconstruction, cuts, validation));
    }
    let (reconstruction, cuts, validation) = first.expect("at least one member tried");
    Ok((Report { solution, reconstruction, cuts, validation }, false))
}

/// Solves, reconstructs and validates, trying each antichain member at the
/// root in turn. Without an explicit root, a gluing model that still has no
/// exact cut set is re-rooted at each leaf in turn. If nothing is exact the
/// first report is returned as is.
pub fn report(region: &Region, root: Option<&Point>) -> Result<Report> {
    let (first, exact) = report_at(region, root)?;
    if exact || root.is_some() || !matches!(region, Region::Gluing(_)) {
        return Ok(first);
    }
    let c = &first.solution.complex;
    let two = Rational::from_integer(BigInt::from(2));
    let centres: Vec<Point> = (0..c.traps.len())
        .filter(|&t| c.traps[t].left_links.len() + c.traps[t].right_links.len() == 1)
        .map(|t| {
            let x = (c.traps[t].left.x() + c.traps[t].right.x()) / &two;
            let (lo, hi) = c.span_at(t, &x);
            Point::new(x, (lo + hi) / &two)
        })
        .collect();
    for p in &centres {
        let (r, exact) = report_at(region, Some(p))?;
        if exact {
            return Ok(r);
        }
    }
    Ok(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dp_engine::solve;
    use crate::polygon_model::parse_region;

    fn roundtrip(txt: &str) -> (BigInt, Reconstruction, Validation) {
        let region = parse_region(txt).unwrap();
        let sol = solve(&region).unwrap();
        let rec = reconstruct(&sol).unwrap();
        let (_, v) = check_codeword(&region, &rec.codeword, &rec.eps_num).unwrap();
        (sol.opt, rec, v)
    }

    #[test]
    fn rectangle_gives_one_run() {
        let (opt, rec, v) = roundtrip("polygon simple 4\n0 0\n4 0\n4 1\n0 1\n");
        assert_eq!(opt, BigInt::from(4));
        assert_eq!(rec.codeword.records.len(), 1);
        assert_eq!(rec.codeword.cut_count(), 3);
        assert_eq!(v.pieces, 4);
        assert!(v.valid);
    }

    #[test]
    fn comb_pieces_match() {
        let (opt, _, v) = roundtrip("polygon simple 12\n0 0\n5 0\n5 2\n4 2\n4 1\n3 1\n3 2\n2 2\n2 1\n1 1\n1 2\n0 2\n");
        assert!(v.valid, "{v:?}");
        assert_eq!(BigInt::from(v.pieces), opt);
    }

    #[test]
    fn no_cuts_on_a_wide_region_is_invalid() {
        let region = parse_region("polygon simple 4\n0 0\n2 0\n2 1\n0 1\n").unwrap();
        let (_, v) = check_codeword(&region, &Codeword::default(), &Rational::one()).unwrap();
        assert_eq!(v.pieces, 1);
        assert!(!v.valid);
    }

    #[test]
    fn eps_is_a_quarter_gap() {
        let region = parse_region("polygon simple 4\n0 0\n5/2 0\n5/2 1\n0 1\n").unwrap();
        let c = trapezoidalize(&region).unwrap();
        assert_eq!(eps_for(&c), Rational::new(1.into(), 8.into()));
    }
}
