use proptest::prelude::*;
use stripcut::ccb_lattice::*;
use stripcut::exact_coords::{rat, EpsCoord};

fn coord(k: i64, e: i8) -> EpsCoord {
    EpsCoord::new(rat(k, 8), e)
}

/// Brute-force minimal elements: quadratic containment test, sorted by lo.
fn brute_min(mut v: Vec<Interval>) -> Antichain {
    v.sort_by(|a, b| a.lo.cmp(&b.lo).then(a.hi.cmp(&b.hi)));
    v.dedup();
    let keep: Vec<Interval> = v
        .iter()
        .filter(|i| !v.iter().any(|j| j != *i && i.contains(j)))
        .cloned()
        .collect();
    Antichain::from_sorted(keep)
}

fn brute_meet(a: &Antichain, b: &Antichain) -> Antichain {
    let mut v = Vec::new();
    for x in a.iter() {
        for y in b.iter() {
            v.push(x.hull(y));
        }
    }
    brute_min(v)
}

fn brute_join(a: &Antichain, b: &Antichain) -> Antichain {
    brute_min(a.iter().chain(b.iter()).cloned().collect())
}

fn brute_filter(a: &Antichain) -> Antichain {
    Antichain::from_sorted(a.iter().filter(|i| i.is_short()).cloned().collect())
}

prop_compose! {
    fn interval(grid: i64, maxlen: i64)(lo in 0..grid, len in 0..=maxlen, e1 in -1i8..=1, e2 in -1i8..=1) -> Interval {
        let a = coord(lo, e1);
        let b = coord(lo + len, e2);
        if a <= b { Interval::new(a, b) } else { Interval::new(b, a) }
    }
}

fn antichain(grid: i64, maxlen: i64, size: usize) -> impl Strategy<Value = Antichain> {
    prop::collection::vec(interval(grid, maxlen), 0..=size).prop_map(brute_min)
}

fn short_antichain(size: usize) -> impl Strategy<Value = Antichain> {
    antichain(4 * size as i64 + 8, 8, size).prop_map(|a| brute_filter(&a))
}

fn check_origin(t: &Traced, a: &Antichain, b: &Antichain, meet: bool) {
    for (iv, o) in t.chain.iter().zip(&t.origin) {
        match *o {
            Origin::Pair(i, j) => {
                assert!(meet);
                assert_eq!(&a.items()[i as usize].hull(&b.items()[j as usize]), iv);
            }
            Origin::Left(i) => assert_eq!(&a.items()[i as usize], iv),
            Origin::Right(j) => assert_eq!(&b.items()[j as usize], iv),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn naive_ops_match_brute_force(a in antichain(32, 16, 8), b in antichain(32, 16, 8)) {
        let m = meet_naive(&a, &b);
        prop_assert_eq!(&m.chain, &brute_meet(&a, &b));
        check_origin(&m, &a, &b, true);
        let j = join_naive(&a, &b);
        prop_assert_eq!(&j.chain, &brute_join(&a, &b));
        check_origin(&j, &a, &b, false);
    }

    #[test]
    fn fast_ops_match_naive(a in short_antichain(12), b in short_antichain(64)) {
        let r = insertion_ranks(&a, &b);
        let jf = join_fast(&a, &b, &r);
        prop_assert_eq!(&jf.chain, &join_naive(&a, &b).chain);
        check_origin(&jf, &a, &b, false);
        let mf = filtered_meet_fast(&a, &b, &r);
        prop_assert_eq!(&mf.chain, &brute_filter(&brute_meet(&a, &b)));
        check_origin(&mf, &a, &b, true);
        let mf2 = filtered_meet(&b, &a);
        prop_assert_eq!(&mf2.chain, &mf.chain);
        check_origin(&mf2, &b, &a, true);
    }

    #[test]
    fn ranks_match_binary_search(a in short_antichain(16), b in short_antichain(128)) {
        let r = insertion_ranks(&a, &b);
        for (i, x) in a.iter().enumerate() {
            prop_assert_eq!(r.alpha[i], b.iter().filter(|y| y.lo <= x.lo).count());
            prop_assert_eq!(r.alpha_lt[i], b.iter().filter(|y| y.lo < x.lo).count());
            prop_assert_eq!(r.beta[i], b.iter().filter(|y| y.hi <= x.hi).count());
            prop_assert_eq!(r.beta_lt[i], b.iter().filter(|y| y.hi < x.hi).count());
        }
    }

    #[test]
    fn lattice_laws(a in antichain(32, 12, 8), b in antichain(32, 12, 8), c in antichain(32, 12, 8)) {
        let m = |x: &Antichain, y: &Antichain| meet_naive(x, y).chain;
        let j = |x: &Antichain, y: &Antichain| join_naive(x, y).chain;
        prop_assert_eq!(m(&a, &b), m(&b, &a));
        prop_assert_eq!(j(&a, &b), j(&b, &a));
        prop_assert_eq!(m(&m(&a, &b), &c), m(&a, &m(&b, &c)));
        prop_assert_eq!(j(&j(&a, &b), &c), j(&a, &j(&b, &c)));
        if !a.is_empty() && !b.is_empty() {
            prop_assert_eq!(j(&a, &m(&a, &b)), a.clone());
        }
        prop_assert_eq!(m(&a, &j(&a, &b)), a.clone());
        prop_assert_eq!(m(&j(&a, &b), &c), j(&m(&a, &c), &m(&b, &c)));
        prop_assert_eq!(filter1(&j(&a, &b)), j(&filter1(&a), &filter1(&b)));
        if !a.is_empty() && !b.is_empty() {
            prop_assert!(m(&a, &b).len() <= a.len() + b.len() - 1);
        }
        prop_assert!(j(&a, &b).len() <= a.len() + b.len());
        prop_assert_eq!(precedes(&a, &b), m(&a, &b) == a);
    }
}
