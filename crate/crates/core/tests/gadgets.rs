use num_bigint::BigInt;
use stripcut::dp_engine::{solve, solve_rooted};
use stripcut::exact_coords::{rat, Rational};
use stripcut::oracle_and_generators::{gen_comb, gen_delta_gadget, gen_no_greedy, gen_staircase, oracle_value_tree, GeneratedInstance};

fn opt(g: &GeneratedInstance) -> BigInt {
    solve_rooted(&g.region, g.root_hint.as_ref()).unwrap().opt
}

#[test]
fn staircase_values() {
    for n in 4..=12 {
        let g = gen_staircase(&vec![rat(1, 2); n]).unwrap();
        assert_eq!(opt(&g), BigInt::from(1), "n = {n}");
        for flip in 0..n {
            let mut x = vec![rat(1, 2); n];
            x[flip] = rat(3, 2);
            let g = gen_staircase(&x).unwrap();
            let v = opt(&g);
            assert!(g.expected.holds(&v), "n = {n} flip {flip}: {v}");
            let o = oracle_value_tree(g.region.as_polygon().unwrap()).unwrap();
            assert_eq!(v, BigInt::from(o));
        }
    }
    let alt: Vec<Rational> = (0..6).map(|i| if i % 2 == 0 { rat(1, 3) } else { rat(2, 3) }).collect();
    assert_eq!(opt(&gen_staircase(&alt).unwrap()), BigInt::from(1));
}

fn no_greedy_a(n: i64, t: i64) -> Vec<Rational> {
    // a_i in the open window (i/(2n) - 1/(4n), i/(2n)), offset by t/8 of it
    (1..=n).map(|i| rat(i, 2 * n) - rat(1, 4 * n) + rat(1 + (t + i) % 7, 8 * 4 * n)).collect()
}

#[test]
fn no_greedy_values_match_oracle() {
    for n in 1..=3i64 {
        let a = no_greedy_a(n, 0);
        for b in [a[0].clone(), a[0].clone() + rat(1, 8 * n), rat(1, 2) - rat(1, 64), rat(1, 2 * n) + rat(1, 64)] {
            if !(b > rat(1, 2 * n) && b < rat(1, 2)) {
                continue;
            }
            let g = gen_no_greedy(&a, &b).unwrap();
            let v = opt(&g);
            assert!(g.expected.holds(&v), "n = {n}: {v} vs {}", g.expected);
            assert_eq!(solve(&g.region).unwrap().opt, v);
            assert_eq!(v, BigInt::from(oracle_value_tree(g.region.as_polygon().unwrap()).unwrap()));
        }
    }
}

#[test]
fn no_greedy_spine_holds_every_interval() {
    for n in 2..=8i64 {
        let a = no_greedy_a(n, n);
        let g = gen_no_greedy(&a, &(rat(1, 2) - rat(1, 1000))).unwrap();
        let sol = solve_rooted(&g.region, g.root_hint.as_ref()).unwrap();
        assert!(g.expected.holds(&sol.opt));
        let spine = g.spine.as_ref().unwrap();
        let hits: Vec<usize> = (0..sol.refined.nodes.len()).filter(|&u| sol.refined.nodes[u].edge == *spine).collect();
        assert!(!hits.is_empty());
        assert!(hits.iter().any(|&u| sol.states[u].chain.len() == n as usize), "n = {n}");
    }
}

#[test]
fn delta_gadget_examples() {
    let d = rat(5, 100);
    let g = gen_delta_gadget(&[rat(21, 100), rat(30, 100), rat(39, 100)], &d).unwrap();
    assert_eq!(opt(&g), BigInt::from(6));
    let g = gen_delta_gadget(&[rat(21, 100), rat(24, 100), rat(39, 100)], &d).unwrap();
    assert!(opt(&g) <= BigInt::from(5));
    let g = gen_delta_gadget(&[rat(3, 10)], &d).unwrap();
    assert_eq!(opt(&g), BigInt::from(2));
}

#[test]
fn comb_values() {
    for k in 1..=20 {
        assert_eq!(solve(&gen_comb(k).unwrap().region).unwrap().opt, BigInt::from(2 * k as i64 - 1));
    }
}

#[test]
fn delta_gadget_chain_values() {
    use stripcut::decomposition::NodeKind;
    use stripcut::oracle_and_generators::first_close_index;
    let d = rat(1, 20);
    let x = [rat(21, 100), rat(30, 100), rat(39, 100), rat(41, 100), rat(25, 100)];
    let g = gen_delta_gadget(&x, &d).unwrap();
    let sol = solve_rooted(&g.region, g.root_hint.as_ref()).unwrap();
    let mut chain: Vec<usize> = (0..sol.refined.nodes.len())
        .filter(|&u| {
            let (node, e) = (&sol.refined.nodes[u], &sol.refined.nodes[u].edge);
            node.kind == NodeKind::SameSide && e.x >= rat(0, 1) && e.x < rat(1, 40) && e.y_lo == rat(0, 1)
        })
        .collect();
    chain.sort_by(|&a, &b| sol.refined.nodes[a].edge.y_hi.cmp(&sol.refined.nodes[b].edge.y_hi));
    assert_eq!(chain.len(), 2 * x.len());
    let first = first_close_index(&x, &d).unwrap();
    assert_eq!(first, 3);
    for t in 1..=first {
        assert_eq!(sol.states[chain[2 * t - 1]].value, BigInt::from(2 * t as i64), "t = {t}");
    }
    assert!(sol.opt <= BigInt::from(9));
}
