//! Acceptance suite: one PASS/FAIL line per criterion.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stripcut::ccb_lattice::{fast_op_failures, filter1, law_failures, random_antichain};
use stripcut::convex_solver::{convex_report, convex_value, probe_count, reset_probes};
use stripcut::decomposition::{trapezoidalize, NodeKind};
use stripcut::dp_engine::{solve, solve_rooted, Solution};
use stripcut::exact_coords::{int, rat, Rational};
use stripcut::oracle_and_generators::{
    first_close_index, gen_comb, gen_delta_gadget, gen_no_greedy, gen_random_convex, gen_random_simple, gen_staircase,
    has_close_pair, oracle_value, oracle_value_tree,
};
use stripcut::polygon_model::{Point, Polygon, PolygonClass, Record, Region};
use stripcut::reporting::{check_codeword, eps_for, report};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

/// Instances kept for the end-to-end check.
#[derive(Default)]
struct Corpus {
    items: Vec<(String, Region, Option<Point>)>,
}

impl Corpus {
    fn add(&mut self, name: String, region: Region, root: Option<Point>) {
        self.items.push((name, region, root));
    }
}

fn ceil_log2(n: usize) -> u64 {
    (usize::BITS - (n.max(1) - 1).leading_zeros()) as u64
}

fn convex_value_criterion(corpus: &mut Corpus) -> Outcome {
    const SLACK: u64 = 3;
    let mut bad = Vec::new();
    let mut worst = 0i64;
    for seed in 0..200u64 {
        let n = 3 + (seed % 62) as usize;
        let width = 1 + (seed % 8) as i64;
        let p = gen_random_convex(n, 7000 + seed, width).unwrap();
        // independent: width from a full vertex scan, rounded up by integer search
        let lo = p.vertices.iter().map(|v| v.x.clone()).min().unwrap();
        let hi = p.vertices.iter().map(|v| v.x.clone()).max().unwrap();
        let mut want = BigInt::from(1);
        while Rational::from_integer(want.clone()) < &hi - &lo {
            want += 1;
        }
        reset_probes();
        let got = convex_value(&p);
        let probes = probe_count();
        let bound = 2 * ceil_log2(p.n()) + SLACK;
        worst = worst.max(probes as i64 - 2 * ceil_log2(p.n()) as i64);
        let dp = solve(&Region::Polygon(p.clone())).unwrap().opt;
        if got != want || dp != want || probes > bound {
            bad.push(format!("seed {seed}: convex {got} width-ceil {want} dp {dp} probes {probes}"));
        }
        corpus.add(format!("convex-{seed}"), Region::Polygon(p), None);
    }
    let detail = format!("200 polygons, max probes - 2*ceil(log2 n) = {worst} (allowed {SLACK}); {}", bad.first().cloned().unwrap_or_default());
    outcome(bad.is_empty(), detail)
}

fn convex_reporting_criterion() -> Outcome {
    let mut bad = Vec::new();
    for k in 1..=64i64 {
        let p = Polygon::new(
            vec![Point::new(int(0), int(0)), Point::new(int(k), int(0)), Point::new(int(k), int(1)), Point::new(int(0), int(1))],
            PolygonClass::Convex,
        )
        .unwrap();
        let cw = convex_report(&p);
        let region = Region::Polygon(p);
        let c = trapezoidalize(&region).unwrap();
        let (cuts, v) = check_codeword(&region, &cw, &eps_for(&c)).unwrap();
        let xs: Vec<Rational> = cuts.iter().map(|c| c.x.clone()).collect();
        let want: Vec<Rational> = (1..k).map(int).collect();
        let shape = if k == 1 { cw.records.is_empty() } else { matches!(cw.records.as_slice(), [Record::Run { .. }]) };
        if xs != want || !shape || !v.valid || v.pieces != k as usize {
            bad.push(format!("k = {k}: {} records, cuts {:?}, {v:?}", cw.records.len(), xs.len()));
        }
    }
    outcome(bad.is_empty(), format!("k = 1..64; {}", bad.first().cloned().unwrap_or_default()))
}

fn lattice_laws_criterion() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut fails = Vec::new();
    for _ in 0..10_000 {
        let a = random_antichain(&mut rng, 32, 12, 8);
        let b = random_antichain(&mut rng, 32, 12, 8);
        let c = random_antichain(&mut rng, 32, 12, 8);
        fails.extend(law_failures(&a, &b, &c));
    }
    outcome(fails.is_empty(), format!("10000 trials, {} failures {:?}", fails.len(), fails.first()))
}

fn fast_ops_criterion() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut fails = Vec::new();
    let mut largest = 0;
    for t in 0..10_000usize {
        let size = if t % 10 == 0 { 256 } else { 32 };
        let a = filter1(&random_antichain(&mut rng, 4 * size as i64 + 8, 8, size));
        let b = filter1(&random_antichain(&mut rng, 4 * size as i64 + 8, 8, size));
        largest = largest.max(a.len()).max(b.len());
        fails.extend(fast_op_failures(&a, &b));
    }
    outcome(fails.is_empty(), format!("10000 pairs, largest antichain {largest}, {} discrepancies", fails.len()))
}

fn oracle_criterion(corpus: &mut Corpus) -> Outcome {
    let mut bad = Vec::new();
    let mut exhaustive = 0;
    for seed in 0..500u64 {
        let n = 3 + (seed % 12) as usize;
        let p = gen_random_simple(n, 20_000 + seed).unwrap();
        let want = match oracle_value(&p, 12) {
            Ok(v) => {
                exhaustive += 1;
                v
            }
            Err(_) => oracle_value_tree(&p).unwrap(),
        };
        let got = solve(&Region::Polygon(p.clone())).unwrap().opt;
        if got != BigInt::from(want) {
            bad.push(format!("seed {seed}: dp {got} oracle {want}"));
        }
        corpus.add(format!("random-{seed}"), Region::Polygon(p), None);
    }
    outcome(
        bad.is_empty(),
        format!("500 polygons ({exhaustive} by subset enumeration, the rest by slab tree search), {} disagreements {}", bad.len(), bad.first().cloned().unwrap_or_default()),
    )
}

/// Same-side bridges along the spine, bottom to top. Each one rises from the
/// spine floor to the top of a junction.
fn spine_chain(sol: &Solution, delta: &Rational) -> Vec<usize> {
    let nodes = &sol.refined.nodes;
    let junction = |u: usize| {
        let e = &nodes[u].edge;
        nodes[u].kind == NodeKind::SameSide && e.x >= rat(0, 1) && e.x < delta / BigInt::from(2) && e.y_lo == rat(0, 1)
    };
    let mut chain: Vec<usize> = (0..nodes.len()).filter(|&u| junction(u)).collect();
    chain.sort_by(|&a, &b| nodes[a].edge.y_hi.cmp(&nodes[b].edge.y_hi));
    chain
}

fn delta_vector(rng: &mut ChaCha8Rng, n: usize, spread: bool) -> Vec<Rational> {
    // x = k/400 with 20 < k < 190, the open window (δ, 1/2 - δ/2) for δ = 1/20
    let mut ks: Vec<i64> = if spread {
        let gap = 21;
        let slack = 168 - gap * (n as i64 - 1);
        let mut cuts: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=slack)).collect();
        cuts.sort();
        cuts.iter().enumerate().map(|(i, c)| 21 + c + gap * i as i64).collect()
    } else {
        (0..n).map(|_| rng.gen_range(21..190)).collect()
    };
    ks.shuffle(rng);
    ks.into_iter().map(|k| rat(k, 400)).collect()
}

fn delta_criterion(corpus: &mut Corpus) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let d = rat(1, 20);
    let mut bad = Vec::new();
    let (mut yes, mut no) = (0, 0);
    for n in 1..=8usize {
        for t in 0..50 {
            let x = delta_vector(&mut rng, n, t % 2 == 0);
            let g = gen_delta_gadget(&x, &d).unwrap();
            let sol = solve_rooted(&g.region, g.root_hint.as_ref()).unwrap();
            let close = has_close_pair(&x, &d);
            let two_n = BigInt::from(2 * n as i64);
            let value_ok = if close { sol.opt < two_n } else { sol.opt == two_n };
            if close {
                yes += 1
            } else {
                no += 1
            }
            let chain = spine_chain(&sol, &d);
            let first = first_close_index(&x, &d).unwrap_or(n);
            let trace_ok = chain.len() == 2 * n
                && (1..=first).all(|s| sol.states[chain[2 * s - 1]].value == BigInt::from(2 * s as i64));
            if !value_ok || !trace_ok {
                bad.push(format!("n = {n}, x = {x:?}: opt {} close {close}, trace ok {trace_ok}", sol.opt));
            }
            corpus.add(format!("delta-{n}-{t}"), g.region, g.root_hint);
        }
    }
    outcome(bad.is_empty(), format!("400 gadgets ({yes} with a close pair, {no} without); {}", bad.first().cloned().unwrap_or_default()))
}

fn no_greedy_criterion(corpus: &mut Corpus) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut bad = Vec::new();
    let (mut close, mut far) = (0, 0);
    for n in 2..=8i64 {
        let unit = rat(1, 64 * n);
        for t in 0..50 {
            // a_i = i/(2n) - 1/(4n) + m_i * unit with 0 < m_i < 16
            let mut m: Vec<i64> = (0..n).map(|_| rng.gen_range(1..16)).collect();
            let a_of = |m: &[i64]| -> Vec<Rational> { (1..=n).map(|i| rat(i, 2 * n) - rat(1, 4 * n) + &unit * int(m[i as usize - 1])).collect() };
            let (a, b) = if t % 2 == 0 {
                // within 1/(4n) of some a_i, redrawn until inside (1/(2n), 1/2)
                let a = a_of(&m);
                let b = loop {
                    let i = rng.gen_range(0..n as usize);
                    let cand = &a[i] + &unit * int(rng.gen_range(-16..=16));
                    if cand > rat(1, 2 * n) && cand < rat(1, 2) {
                        break cand;
                    }
                };
                (a, b)
            } else {
                // open a gap wider than 1/(2n) between a_i and a_(i+1), then put b in it
                let i = rng.gen_range(0..n as usize - 1);
                m[i] = rng.gen_range(1..=13);
                m[i + 1] = rng.gen_range(m[i] + 2..=15);
                let a = a_of(&m);
                let b = &a[i] + &unit * int(16 + rng.gen_range(1..m[i + 1] - m[i]));
                (a, b)
            };
            let g = gen_no_greedy(&a, &b).unwrap();
            let sol = solve_rooted(&g.region, g.root_hint.as_ref()).unwrap();
            let is_close = a.iter().any(|ai| (ai - &b).abs() <= rat(1, 4 * n));
            if is_close {
                close += 1
            } else {
                far += 1
            }
            let want = BigInt::from(if is_close { n } else { n + 1 });
            let spine = g.spine.as_ref().unwrap();
            let widest = (0..sol.refined.nodes.len())
                .filter(|&u| sol.refined.nodes[u].edge == *spine)
                .map(|u| sol.states[u].chain.len())
                .max()
                .unwrap_or(0);
            if sol.opt != want || widest != n as usize {
                bad.push(format!("n = {n}, b = {b}: opt {} want {want}, spine antichain {widest}", sol.opt));
            }
            corpus.add(format!("nogreedy-{n}-{t}"), g.region, g.root_hint);
        }
    }
    outcome(
        bad.is_empty(),
        format!("350 instances ({close} close, {far} far), strip count n if close else n+1; {}", bad.first().cloned().unwrap_or_default()),
    )
}

fn staircase_criterion(corpus: &mut Corpus) -> Outcome {
    let mut bad = Vec::new();
    for n in 4..=32usize {
        let g = gen_staircase(&vec![rat(1, 2); n]).unwrap();
        let v = solve(&g.region).unwrap().opt;
        if v != BigInt::from(1) {
            bad.push(format!("n = {n}, all 1/2: {v}"));
        }
        corpus.add(format!("stair-{n}"), g.region, None);
        for flip in 0..n {
            let mut x = vec![rat(1, 2); n];
            x[flip] = rat(3, 2);
            let g = gen_staircase(&x).unwrap();
            let v = solve(&g.region).unwrap().opt;
            if v < BigInt::from(2) {
                bad.push(format!("n = {n}, flip {flip}: {v}"));
            }
            if flip % 5 == 0 {
                corpus.add(format!("stair-{n}-{flip}"), g.region, None);
            }
        }
    }
    let alt: Vec<Rational> = (0..6).map(|i| if i % 2 == 0 { rat(1, 3) } else { rat(2, 3) }).collect();
    let g = gen_staircase(&alt).unwrap();
    let v = solve(&g.region).unwrap().opt;
    if v != BigInt::from(1) {
        bad.push(format!("alternating: {v}"));
    }
    corpus.add("stair-alt".into(), g.region, None);
    outcome(bad.is_empty(), format!("n = 4..32, every single flip; {}", bad.first().cloned().unwrap_or_default()))
}

fn lossless_criterion(corpus: &Corpus) -> Outcome {
    const C: u64 = 16;
    let mut bad = Vec::new();
    let mut worst = 0f64;
    for (name, region, root) in &corpus.items {
        let r = report(region, root.as_ref()).unwrap();
        let size = region.size() as u64;
        worst = worst.max(r.reconstruction.touches as f64 / size as f64);
        if !r.is_exact() || r.reconstruction.touches > C * size {
            bad.push(format!("{name}: pieces {} opt {} touches {} {:?}", r.validation.pieces, r.solution.opt, r.reconstruction.touches, r.validation));
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} instances, max touches/n = {worst:.2} (allowed {C}); {} failures {}", corpus.items.len(), bad.len(), bad.first().cloned().unwrap_or_default()),
    )
}

fn scaling_criterion() -> Outcome {
    let start = Instant::now();
    let mut rows = Vec::new();
    for k in 6..=14u32 {
        let g = gen_comb(1 << k).unwrap();
        let n = g.region.size() as f64;
        let reps = if k >= 11 { 5 } else { 1 };
        let mut best = f64::MAX;
        let mut comparisons = 0;
        for _ in 0..reps {
            let t = Instant::now();
            let sol = solve(&g.region).unwrap();
            best = best.min(t.elapsed().as_secs_f64());
            comparisons = sol.stats.counters.comparisons;
        }
        rows.push((n, comparisons as f64, best));
    }
    let ratios: Vec<f64> = rows.iter().map(|(n, c, _)| c / (n * n.log2())).collect();
    let c = (ratios.iter().map(|r| r.ln()).sum::<f64>() / ratios.len() as f64).exp();
    let fits = ratios.iter().all(|r| *r >= c / 2.0 && *r <= 2.0 * c);
    let doublings: Vec<f64> = rows.windows(2).map(|w| w[1].2 / w[0].2).collect();
    let top = &doublings[doublings.len() - 3..];
    let time_ok = top.iter().all(|r| *r <= 2.6);
    let total = start.elapsed().as_secs_f64();
    let detail = format!(
        "c = {c:.3}, count/(n log2 n) in [{:.3}, {:.3}]; top doublings {:.2?}; total {total:.1}s",
        ratios.iter().cloned().fold(f64::MAX, f64::min),
        ratios.iter().cloned().fold(f64::MIN, f64::max),
        top
    );
    outcome(fits && time_ok && total < 300.0, detail)
}

fn main() {
    let mut corpus = Corpus::default();
    let mut results: Vec<(&str, Outcome)> = Vec::new();
    results.push(("convex value", convex_value_criterion(&mut corpus)));
    results.push(("convex reporting", convex_reporting_criterion()));
    results.push(("lattice laws", lattice_laws_criterion()));
    results.push(("fast-op equivalence", fast_ops_criterion()));
    results.push(("oracle agreement", oracle_criterion(&mut corpus)));
    results.push(("delta-gadget battery", delta_criterion(&mut corpus)));
    results.push(("no-greedy battery", no_greedy_criterion(&mut corpus)));
    results.push(("staircase battery", staircase_criterion(&mut corpus)));
    results.push(("end-to-end losslessness", lossless_criterion(&corpus)));
    results.push(("scaling", scaling_criterion()));
    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        println!("{} [{}] {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
