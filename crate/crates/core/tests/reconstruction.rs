use num_bigint::BigInt;
use stripcut::exact_coords::rat;
use stripcut::oracle_and_generators::{gen_comb, gen_delta_gadget, gen_no_greedy, gen_random_simple, gen_staircase};
use stripcut::polygon_model::{Point, Region};
use stripcut::reporting::report;

fn roundtrip(region: &Region, root: Option<&Point>) {
    let r = report(region, root).unwrap();
    let (sol, rec, cuts, v) = (&r.solution, &r.reconstruction, &r.cuts, &r.validation);
    assert!(v.valid, "{v:?}\n{}\n{}", region.to_text(), rec.codeword.to_text());
    assert_eq!(BigInt::from(v.pieces), sol.opt, "{}\n{}", region.to_text(), rec.codeword.to_text());
    assert_eq!(cuts.len() + 1, v.pieces);
    assert!(rec.touches <= 8 * sol.refined.nodes.len() as u64 + 8);
}

#[test]
fn random_polygons_roundtrip() {
    for seed in 0..300u64 {
        let p = gen_random_simple(3 + (seed % 14) as usize, 5000 + seed).unwrap();
        roundtrip(&Region::Polygon(p), None);
    }
}

#[test]
fn gadgets_roundtrip() {
    for n in 4..=10 {
        let mut x = vec![rat(1, 2); n];
        roundtrip(&gen_staircase(&x).unwrap().region, None);
        x[n / 2] = rat(3, 2);
        roundtrip(&gen_staircase(&x).unwrap().region, None);
    }
    for k in 1..=12 {
        roundtrip(&gen_comb(k).unwrap().region, None);
    }
    for n in 1..=5i64 {
        let a: Vec<_> = (1..=n).map(|i| rat(i, 2 * n) - rat(1, 8 * n)).collect();
        for b in [a[0].clone(), rat(1, 2) - rat(1, 100)] {
            if b <= rat(1, 2 * n) {
                continue;
            }
            let g = gen_no_greedy(&a, &b).unwrap();
            roundtrip(&g.region, None);
            roundtrip(&g.region, g.root_hint.as_ref());
        }
    }
    let d = rat(1, 20);
    for x in [vec![rat(21, 100), rat(30, 100), rat(39, 100)], vec![rat(21, 100), rat(24, 100), rat(39, 100)], vec![rat(3, 10)]] {
        let g = gen_delta_gadget(&x, &d).unwrap();
        roundtrip(&g.region, g.root_hint.as_ref());
        roundtrip(&g.region, None);
    }
}
