//! Interval antichains under reverse inclusion, with meet, join and the
//! unit-length filter.
//!
//! Every operation comes in two flavours. The one-pass versions walk both
//! inputs; the rank-driven versions touch `O(k log(m/k))` elements when one
//! side is much smaller than the other. The two are kept independent so that
//! each checks the other.

use std::cell::Cell;
use std::cmp::Ordering;
use std::fmt;

use rand::Rng;

use crate::exact_coords::{rat, EpsCoord};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: EpsCoord,
    pub hi: EpsCoord,
}

impl Interval {
    pub fn new(lo: EpsCoord, hi: EpsCoord) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn contains(&self, other: &Interval) -> bool {
        cmp(&self.lo, &other.lo) != Ordering::Greater && cmp(&self.hi, &other.hi) != Ordering::Less
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        let lo = if cmp(&self.lo, &other.lo) == Ordering::Greater { &other.lo } else { &self.lo };
        let hi = if cmp(&self.hi, &other.hi) == Ordering::Less { &other.hi } else { &self.hi };
        Interval { lo: lo.clone(), hi: hi.clone() }
    }

    /// Length at most one, with `ε` infinitesimal.
    pub fn is_short(&self) -> bool {
        bump(1);
        (&self.hi - &self.lo).at_most_one()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Operation counters, kept per thread.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounters {
    pub comparisons: u64,
    pub meets: u64,
    pub joins: u64,
    pub rank_queries: u64,
}

thread_local! {
    static COUNTERS: Cell<OpCounters> = Cell::new(OpCounters::default());
}

fn bump(n: u64) {
    COUNTERS.with(|c| {
        let mut v = c.get();
        v.comparisons += n;
        c.set(v);
    });
}

fn note(f: impl FnOnce(&mut OpCounters)) {
    COUNTERS.with(|c| {
        let mut v = c.get();
        f(&mut v);
        c.set(v);
    });
}

pub fn counters() -> OpCounters {
    COUNTERS.with(|c| c.get())
}

pub fn reset_counters() {
    COUNTERS.with(|c| c.set(OpCounters::default()));
}

fn cmp(a: &EpsCoord, b: &EpsCoord) -> Ordering {
    bump(1);
    a.cmp(b)
}

/// Intervals sorted by strictly increasing `lo` (and therefore `hi`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Antichain {
    items: Vec<Interval>,
}

impl Antichain {
    pub fn empty() -> Self {
        Antichain { items: Vec::new() }
    }

    pub fn singleton(i: Interval) -> Self {
        Antichain { items: vec![i] }
    }

    /// Builds from an already valid sequence. Panics in debug builds otherwise.
    pub fn from_sorted(items: Vec<Interval>) -> Self {
        let a = Antichain { items };
        debug_assert!(a.is_valid(), "not an antichain: {a}");
        a
    }

    /// Keeps the inclusion-minimal members of an arbitrary family.
    pub fn minimal(family: Vec<Interval>) -> Self {
        Antichain { items: minimize(family.into_iter().map(|i| (i, ())).collect()).into_iter().map(|(i, _)| i).collect() }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[Interval] {
        &self.items
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Interval> {
        self.items.iter()
    }

    pub fn is_valid(&self) -> bool {
        self.items.iter().all(|i| i.lo <= i.hi)
            && self.items.windows(2).all(|w| w[0].lo < w[1].lo && w[0].hi < w[1].hi)
    }
}

impl fmt::Display for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.items.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Which input an interval of a lattice result came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    /// Hull of `A[i]` and `B[j]`.
    Pair(u32, u32),
    /// Taken unchanged from `A[i]`.
    Left(u32),
    /// Taken unchanged from `B[j]`.
    Right(u32),
}

impl Origin {
    pub fn swap(self) -> Origin {
        match self {
            Origin::Pair(i, j) => Origin::Pair(j, i),
            Origin::Left(i) => Origin::Right(i),
            Origin::Right(j) => Origin::Left(j),
        }
    }
}

/// An antichain together with the origin of each member.
#[derive(Clone, Debug, Default)]
pub struct Traced {
    pub chain: Antichain,
    pub origin: Vec<Origin>,
}

impl Traced {
    fn from_pairs(v: Vec<(Interval, Origin)>) -> Self {
        let (items, origin) = v.into_iter().unzip();
        Traced { chain: Antichain::from_sorted(items), origin }
    }

    fn swapped(mut self) -> Self {
        for o in &mut self.origin {
            *o = o.swap();
        }
        self
    }
}

/// Inclusion-minimal members, sorted. Equal intervals keep their first copy.
fn minimize<T>(mut v: Vec<(Interval, T)>) -> Vec<(Interval, T)> {
    // lo ascending, hi descending; a stable sort keeps the first of equal copies
    // ahead, and the reverse scan below would then keep the last one, so sort
    // equal copies in reverse input order.
    let n = v.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&x, &y| {
        let (a, b) = (&v[x].0, &v[y].0);
        cmp(&a.lo, &b.lo).then_with(|| cmp(&b.hi, &a.hi)).then(y.cmp(&x))
    });
    let mut keep = vec![false; n];
    let mut best: Option<usize> = None;
    for &k in idx.iter().rev() {
        let ok = match best {
            None => true,
            Some(b) => cmp(&v[k].0.hi, &v[b].0.hi) == Ordering::Less,
        };
        if ok {
            keep[k] = true;
            best = Some(k);
        }
    }
    let mut out: Vec<(usize, (Interval, T))> = Vec::new();
    for (k, item) in v.drain(..).enumerate() {
        if keep[k] {
            out.push((k, item));
        }
    }
    out.sort_by(|x, y| x.1 .0.lo.cmp(&y.1 .0.lo));
    out.into_iter().map(|(_, x)| x).collect()
}

/// `A ⪯ B`: every interval of `A` contains an interval of `B`.
pub fn precedes(a: &Antichain, b: &Antichain) -> bool {
    let mut j = 0;
    for i in a.iter() {
        while j < b.len() && cmp(&b.items[j].lo, &i.lo) == Ordering::Less {
            j += 1;
        }
        if j == b.len() || cmp(&b.items[j].hi, &i.hi) == Ordering::Greater {
            return false;
        }
    }
    true
}

pub fn filter1(f: &Antichain) -> Antichain {
    Antichain { items: f.iter().filter(|i| i.is_short()).cloned().collect() }
}

fn filter1_traced(t: Traced) -> Traced {
    let (items, origin) = t
        .chain
        .items
        .into_iter()
        .zip(t.origin)
        .filter(|(i, _)| i.is_short())
        .unzip();
    Traced { chain: Antichain { items }, origin }
}

/// One-pass join: merge by left endpoint, then drop non-minimal members.
pub fn join_naive(a: &Antichain, b: &Antichain) -> Traced {
    note(|c| c.joins += 1);
    let mut merged = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && cmp(&a.items[i].lo, &b.items[j].lo) != Ordering::Greater);
        if take_a {
            merged.push((a.items[i].clone(), Origin::Left(i as u32)));
            i += 1;
        } else {
            merged.push((b.items[j].clone(), Origin::Right(j as u32)));
            j += 1;
        }
    }
    Traced::from_pairs(minimize(merged))
}

/// One-pass meet. Each interval only needs to be paired with the first
/// interval of the other side whose left endpoint is not smaller.
pub fn meet_naive(a: &Antichain, b: &Antichain) -> Traced {
    note(|c| c.meets += 1);
    let mut cand = Vec::with_capacity(a.len() + b.len());
    let mut j = 0;
    for (i, x) in a.iter().enumerate() {
        while j < b.len() && cmp(&b.items[j].lo, &x.lo) == Ordering::Less {
            j += 1;
        }
        if j < b.len() {
            cand.push((x.hull(&b.items[j]), Origin::Pair(i as u32, j as u32)));
        }
    }
    let mut i = 0;
    for (j, y) in b.iter().enumerate() {
        while i < a.len() && cmp(&a.items[i].lo, &y.lo) == Ordering::Less {
            i += 1;
        }
        if i < a.len() {
            cand.push((a.items[i].hull(y), Origin::Pair(i as u32, j as u32)));
        }
    }
    Traced::from_pairs(minimize(cand))
}

/// Insertion ranks of the endpoints of `A` among those of `B`.
///
/// `alpha[i] = #{j : B[j].lo <= A[i].lo}`, `beta[i] = #{j : B[j].hi <= A[i].hi}`;
/// the `_lt` variants count strict inequalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ranks {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    pub alpha_lt: Vec<usize>,
    pub beta_lt: Vec<usize>,
}

/// Ranks of a sorted query list in a sorted list, both strictly increasing.
/// Returns `(#{y <= x}, #{y < x})` per query.
fn ranks_of(xs: &[&EpsCoord], ys: &[&EpsCoord]) -> (Vec<usize>, Vec<usize>) {
    let (k, m) = (xs.len(), ys.len());
    note(|c| c.rank_queries += k as u64);
    let mut le = Vec::with_capacity(k);
    let mut lt = Vec::with_capacity(k);
    if k == 0 {
        return (le, lt);
    }
    if m < 4 * k {
        let mut j = 0;
        for x in xs {
            while j < m && cmp(ys[j], x) == Ordering::Less {
                j += 1;
            }
            lt.push(j);
            if j < m && cmp(ys[j], x) == Ordering::Equal {
                le.push(j + 1);
            } else {
                le.push(j);
            }
        }
        return (le, lt);
    }
    // Largest power of two not above m/(4k), found by doubling.
    let target = m / (4 * k);
    let mut block = 1usize;
    while block * 2 <= target {
        block *= 2;
    }
    let mut start = 0usize;
    for x in xs {
        // Skip whole blocks whose last element is below x.
        while start + block <= m && cmp(ys[start + block - 1], x) == Ordering::Less {
            start += block;
        }
        let end = (start + block).min(m);
        let (mut lo, mut hi) = (start, end);
        while lo < hi {
            let mid = (lo + hi) / 2;
            if cmp(ys[mid], x) == Ordering::Less {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        lt.push(lo);
        if lo < m && cmp(ys[lo], x) == Ordering::Equal {
            le.push(lo + 1);
        } else {
            le.push(lo);
        }
        start = lo;
    }
    (le, lt)
}

pub fn insertion_ranks(a: &Antichain, b: &Antichain) -> Ranks {
    let al: Vec<&EpsCoord> = a.iter().map(|i| &i.lo).collect();
    let ar: Vec<&EpsCoord> = a.iter().map(|i| &i.hi).collect();
    let bl: Vec<&EpsCoord> = b.iter().map(|i| &i.lo).collect();
    let br: Vec<&EpsCoord> = b.iter().map(|i| &i.hi).collect();
    let (alpha, alpha_lt) = ranks_of(&al, &bl);
    let (beta, beta_lt) = ranks_of(&ar, &br);
    Ranks { alpha, beta, alpha_lt, beta_lt }
}

/// Join driven by the ranks of the (smaller) `A` in `B`.
///
/// `A[i]` survives unless it properly contains a member of `B`; the members of
/// `B` containing `A[i]` form the index range `[beta_lt[i], alpha[i])`, and
/// are dropped. Survivors of `B` are copied as whole runs.
pub fn join_fast(a: &Antichain, b: &Antichain, r: &Ranks) -> Traced {
    note(|c| c.joins += 1);
    let k = a.len();
    let mut keep_a = vec![true; k];
    let mut cuts: Vec<(usize, usize)> = Vec::new();
    for i in 0..k {
        // members of B inside A[i]: indices [alpha_lt, beta)
        let inside = r.beta[i].saturating_sub(r.alpha_lt[i]);
        let equal = inside == 1 && b.items[r.alpha_lt[i]] == a.items[i];
        if inside > 0 && !equal {
            keep_a[i] = false;
            continue;
        }
        let (s, e) = (r.beta_lt[i], r.alpha[i]);
        if s < e {
            match cuts.last_mut() {
                Some(last) if last.1 >= s => last.1 = last.1.max(e),
                _ => cuts.push((s, e)),
            }
        }
    }
    // Runs of B that survive.
    let mut runs = Vec::with_capacity(cuts.len() + 1);
    let mut pos = 0;
    for &(s, e) in &cuts {
        if pos < s {
            runs.push((pos, s));
        }
        pos = pos.max(e);
    }
    if pos < b.len() {
        runs.push((pos, b.len()));
    }
    let mut out = Vec::with_capacity(k + b.len());
    let mut i = 0;
    for (s, e) in runs {
        // A survivors that belong before this run
        while i < k && (!keep_a[i] || cmp(&a.items[i].lo, &b.items[s].lo) != Ordering::Greater) {
            if keep_a[i] {
                out.push((a.items[i].clone(), Origin::Left(i as u32)));
            }
            i += 1;
        }
        for j in s..e {
            // an A survivor may sit inside the run
            while i < k && (!keep_a[i] || cmp(&a.items[i].lo, &b.items[j].lo) != Ordering::Greater) {
                if keep_a[i] {
                    out.push((a.items[i].clone(), Origin::Left(i as u32)));
                }
                i += 1;
            }
            out.push((b.items[j].clone(), Origin::Right(j as u32)));
        }
    }
    while i < k {
        if keep_a[i] {
            out.push((a.items[i].clone(), Origin::Left(i as u32)));
        }
        i += 1;
    }
    Traced::from_pairs(out)
}

/// `Filter₁(A ∧ B)` driven by the ranks of `A` in `B`. Requires every member
/// of both inputs to have length at most one.
///
/// Members of `B` containing some member of `A` pass through unchanged. Every
/// other result has an endpoint from `A`, and there are `O(|A|)` candidates:
/// `A[i]` hulled with the first `B` member at or right of it, and `A[i]` hulled
/// with the last `B` member left of it that does not contain it.
pub fn filtered_meet_fast(a: &Antichain, b: &Antichain, r: &Ranks) -> Traced {
    note(|c| c.meets += 1);
    let k = a.len();
    let m = b.len();
    // Contained-member runs of B, each assigned to its smallest i.
    let mut runs: Vec<(usize, usize, u32)> = Vec::new();
    let mut covered = 0usize;
    for i in 0..k {
        let s = r.beta_lt[i].max(covered);
        let e = r.alpha[i];
        if s < e {
            runs.push((s, e, i as u32));
            covered = e;
        }
    }
    let mut cand: Vec<(Interval, Origin)> = Vec::with_capacity(2 * k);
    for i in 0..k {
        let x = &a.items[i];
        let first = r.alpha_lt[i];
        if first < m {
            cand.push((x.hull(&b.items[first]), Origin::Pair(i as u32, first as u32)));
        }
        let prev_alpha = if i == 0 { 0 } else { r.alpha[i - 1] };
        let jstar = r.alpha[i].min(r.beta_lt[i]);
        if jstar > prev_alpha {
            let j = jstar - 1;
            cand.push((b.items[j].hull(x), Origin::Pair(i as u32, j as u32)));
        }
    }
    let mut cand = minimize(cand);
    // Drop candidates that contain a pass-through member of B, or equal one.
    let mut keep = Vec::with_capacity(cand.len());
    let mut ri = 0;
    for (c, o) in cand.drain(..) {
        // first pass-through member with lo >= c.lo
        let mut hit = None;
        while ri < runs.len() {
            let (s, e, _) = runs[ri];
            let last = &b.items[e - 1];
            if cmp(&last.lo, &c.lo) == Ordering::Less {
                ri += 1;
                continue;
            }
            let (mut lo, mut hi) = (s, e - 1);
            while lo < hi {
                let mid = (lo + hi) / 2;
                if cmp(&b.items[mid].lo, &c.lo) == Ordering::Less {
                    lo = mid + 1;
                } else {
                    hi = mid;
                }
            }
            hit = Some(lo);
            break;
        }
        let dominated = match hit {
            Some(j) => cmp(&b.items[j].hi, &c.hi) != Ordering::Greater,
            None => false,
        };
        if !dominated && c.is_short() {
            keep.push((c, o));
        }
    }
    // Merge candidates into the gaps between pass-through runs.
    let mut out = Vec::with_capacity(keep.len() + covered);
    let mut ci = keep.into_iter().peekable();
    for (s, e, i) in runs {
        for j in s..e {
            while let Some((c, _)) = ci.peek() {
                if cmp(&c.lo, &b.items[j].lo) == Ordering::Less {
                    out.push(ci.next().unwrap());
                } else {
                    break;
                }
            }
            out.push((b.items[j].clone(), Origin::Pair(i, j as u32)));
        }
    }
    out.extend(ci);
    Traced::from_pairs(out)
}

/// Join with the smaller side driving: ranks when `4|small| <= |large|`,
/// otherwise the one-pass merge.
pub fn join(a: &Antichain, b: &Antichain) -> Traced {
    if a.len() <= b.len() {
        if 4 * a.len() <= b.len() {
            join_fast(a, b, &insertion_ranks(a, b))
        } else {
            join_naive(a, b)
        }
    } else {
        join(b, a).swapped()
    }
}

pub fn meet(a: &Antichain, b: &Antichain) -> Traced {
    meet_naive(a, b)
}

/// `Filter₁(A ∧ B)` with the same dispatch as [`join`]. Inputs must consist of
/// intervals of length at most one.
pub fn filtered_meet(a: &Antichain, b: &Antichain) -> Traced {
    if a.len() <= b.len() {
        if 4 * a.len() <= b.len() {
            filtered_meet_fast(a, b, &insertion_ranks(a, b))
        } else {
            filter1_traced(meet_naive(a, b))
        }
    } else {
        filtered_meet(b, a).swapped()
    }
}

/// Reference path used to cross-check the dispatching versions.
pub fn filtered_meet_naive(a: &Antichain, b: &Antichain) -> Traced {
    filter1_traced(meet_naive(a, b))
}

// ---------------------------------------------------------------------------
// Randomized checks, shared by the CLI fuzzer and the acceptance suite.

/// A random antichain on the grid `k/8`, `k < grid`, with intervals of
/// length at most `maxlen/8` and random `ε` offsets on both ends.
pub fn random_antichain<R: Rng>(rng: &mut R, grid: i64, maxlen: i64, size: usize) -> Antichain {
    let count = rng.gen_range(0..=size);
    let mut v = Vec::with_capacity(count);
    for _ in 0..count {
        let lo = rng.gen_range(0..grid);
        let len = rng.gen_range(0..=maxlen);
        let a = EpsCoord::new(rat(lo, 8), rng.gen_range(-1i8..=1));
        let b = EpsCoord::new(rat(lo + len, 8), rng.gen_range(-1i8..=1));
        v.push(if a <= b { Interval::new(a, b) } else { Interval::new(b, a) });
    }
    let v: Vec<(Interval, ())> = v.into_iter().map(|i| (i, ())).collect();
    Antichain::from_sorted(minimize(v).into_iter().map(|(i, _)| i).collect())
}

/// Names of the lattice laws that fail on `(a, b, c)`.
pub fn law_failures(a: &Antichain, b: &Antichain, c: &Antichain) -> Vec<&'static str> {
    let m = |x: &Antichain, y: &Antichain| meet_naive(x, y).chain;
    let j = |x: &Antichain, y: &Antichain| join_naive(x, y).chain;
    let mut bad = Vec::new();
    let mut check = |ok: bool, name| {
        if !ok {
            bad.push(name);
        }
    };
    check(m(a, b) == m(b, a), "meet commutativity");
    check(j(a, b) == j(b, a), "join commutativity");
    check(m(&m(a, b), c) == m(a, &m(b, c)), "meet associativity");
    check(j(&j(a, b), c) == j(a, &j(b, c)), "join associativity");
    check(a.is_empty() || b.is_empty() || j(a, &m(a, b)) == *a, "join absorption");
    check(m(a, &j(a, b)) == *a, "meet absorption");
    check(m(&j(a, b), c) == j(&m(a, c), &m(b, c)), "distributivity");
    check(precedes(a, b) == (m(a, b) == *a), "precedes iff meet absorbs");
    check(filter1(&j(a, b)) == j(&filter1(a), &filter1(b)), "filter preserves join");
    check(a.is_empty() || b.is_empty() || m(a, b).len() < a.len() + b.len(), "meet size bound");
    check(j(a, b).len() <= a.len() + b.len(), "join size bound");
    bad
}

/// Names of the fast operations that disagree with the one-pass ones on
/// short antichains `a`, `b`.
pub fn fast_op_failures(a: &Antichain, b: &Antichain) -> Vec<&'static str> {
    let r = insertion_ranks(a, b);
    let mut bad = Vec::new();
    if join_fast(a, b, &r).chain != join_naive(a, b).chain {
        bad.push("join fast path");
    }
    let want = filter1(&meet_naive(a, b).chain);
    if filtered_meet_fast(a, b, &r).chain != want {
        bad.push("filtered meet fast path");
    }
    if filtered_meet(b, a).chain != want {
        bad.push("filtered meet, swapped");
    }
    bad
}
