//! Bottom-up evaluation of `(value, antichain)` states on the refined tree.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ccb_lattice::{self, filtered_meet, join, Antichain, Interval, OpCounters, Origin, Traced};
use crate::decomposition::{default_root, leaf_at, refine_to_binary, trapezoidalize, Complex, Eta, NodeKind, Refined};
use crate::error::Result;
use crate::exact_coords::{floor_diff, EpsCoord};
use crate::polygon_model::{Point, Region};

/// How a node's state was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// Trapezoid node whose strips all extend through it.
    Extend,
    /// Trapezoid node that needed `k` new cuts, starting from child interval `pick`.
    Cut { pick: usize, k: BigInt },
    /// Bridge whose child strips merge.
    Meet,
    /// Bridge that keeps child strips apart.
    Join,
}

#[derive(Clone, Debug)]
pub struct NodeState {
    pub value: BigInt,
    pub chain: Antichain,
    /// Origin of each member of `chain`; child indices refer to the child
    /// states, or to the virtual leaf of a trapezoid without children.
    pub origin: Vec<Origin>,
    pub step: Step,
}

#[derive(Clone, Debug, Default)]
pub struct Stats {
    pub trapezoids: usize,
    pub nodes: usize,
    pub bridges: usize,
    pub counters: OpCounters,
    pub micros: u128,
    pub max_antichain: usize,
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub opt: BigInt,
    pub complex: Complex,
    pub refined: Refined,
    pub states: Vec<NodeState>,
    /// The root strip is only the cap, so one strip was subtracted.
    pub cap_removed: bool,
    pub stats: Stats,
}

fn iv(lo: EpsCoord, hi: EpsCoord) -> Interval {
    Interval::new(lo, hi)
}

/// The state of the virtual child of a trapezoid with no children: one strip
/// of length `ε` at the far side.
pub fn virtual_leaf(a: &EpsCoord, b: &EpsCoord, eta: Eta) -> Antichain {
    match eta {
        Eta::Right => Antichain::singleton(iv(a.clone(), a.plus_eps())),
        Eta::Left => Antichain::singleton(iv(b.minus_eps(), b.clone())),
    }
}

/// Extends the child strips through a trapezoid `[a, b]`.
pub fn trapezoid_update(child_value: &BigInt, child: &Antichain, a: &EpsCoord, b: &EpsCoord, eta: Eta) -> NodeState {
    let range = match eta {
        Eta::Right => iv(a.clone(), b.plus_eps()),
        Eta::Left => iv(a.minus_eps(), b.clone()),
    };
    let Traced { chain, origin } = filtered_meet(child, &Antichain::singleton(range));
    if !chain.is_empty() {
        return NodeState { value: child_value.clone(), chain, origin, step: Step::Extend };
    }
    let items = child.items();
    let (pick, interval, k) = match eta {
        Eta::Right => {
            let pick = items.len() - 1;
            let l = &items[pick].lo;
            let k = floor_diff(&b.plus_eps(), l);
            (pick, iv(l.shift(&k), b.plus_eps()), k)
        }
        Eta::Left => {
            let r = &items[0].hi;
            let k = floor_diff(r, &a.minus_eps());
            (0, iv(a.minus_eps(), r.shift(&-k.clone())), k)
        }
    };
    NodeState {
        value: child_value + &k,
        chain: Antichain::singleton(interval),
        origin: vec![Origin::Pair(pick as u32, 0)],
        step: Step::Cut { pick, k },
    }
}

pub fn bridge_update(v: &NodeState, w: &NodeState) -> NodeState {
    let m = filtered_meet(&v.chain, &w.chain);
    if !m.chain.is_empty() {
        return NodeState { value: &v.value + &w.value - BigInt::one(), chain: m.chain, origin: m.origin, step: Step::Meet };
    }
    let j = join(&v.chain, &w.chain);
    NodeState { value: &v.value + &w.value, chain: j.chain, origin: j.origin, step: Step::Join }
}

/// The strip of length `ε` on the outside of the root edge.
pub fn root_cap(x: &EpsCoord, eta: Eta) -> Interval {
    match eta {
        Eta::Left => iv(x.minus_eps(), x.clone()),
        Eta::Right => iv(x.clone(), x.plus_eps()),
    }
}

/// Evaluates every node of a refined tree.
pub fn evaluate(c: &Complex, r: &Refined) -> (Vec<NodeState>, BigInt, bool) {
    let mut states: Vec<Option<NodeState>> = vec![None; r.nodes.len()];
    for u in r.post_order() {
        let node = &r.nodes[u];
        let st = match node.kind {
            NodeKind::Trapezoid(t) => {
                let tr = &c.traps[t];
                let a = EpsCoord::exact(tr.left.x().clone());
                let b = EpsCoord::exact(tr.right.x().clone());
                match node.children.first() {
                    Some(&ch) => {
                        let cs = states[ch].as_ref().expect("child evaluated");
                        trapezoid_update(&cs.value, &cs.chain, &a, &b, node.eta)
                    }
                    None => trapezoid_update(&BigInt::one(), &virtual_leaf(&a, &b, node.eta), &a, &b, node.eta),
                }
            }
            NodeKind::SameSide | NodeKind::CrossSide => {
                let v = states[node.children[0]].as_ref().expect("child evaluated");
                let w = states[node.children[1]].as_ref().expect("child evaluated");
                bridge_update(v, w)
            }
        };
        states[u] = Some(st);
    }
    let states: Vec<NodeState> = states.into_iter().map(|s| s.expect("every node reached")).collect();
    let root = &r.nodes[r.root];
    let rs = &states[r.root];
    let cap = root_cap(&EpsCoord::exact(root.edge.x.clone()), root.eta);
    let cap_removed = rs.chain.items() == [cap];
    let opt = if cap_removed { &rs.value - BigInt::one() } else { rs.value.clone() };
    (states, opt, cap_removed)
}

/// Decomposes, refines, and evaluates.
pub fn solve(region: &Region) -> Result<Solution> {
    solve_rooted(region, None)
}

/// As [`solve`], rooted at the leaf containing `root` when given.
pub fn solve_rooted(region: &Region, root: Option<&Point>) -> Result<Solution> {
    let start = Instant::now();
    ccb_lattice::reset_counters();
    let complex = trapezoidalize(region)?;
    let leaf = match root {
        Some(p) => leaf_at(&complex, p)?,
        None => default_root(&complex)?,
    };
    let refined = refine_to_binary(&complex, leaf)?;
    let (states, opt, cap_removed) = evaluate(&complex, &refined);
    let stats = Stats {
        trapezoids: complex.positive_width_count(),
        nodes: refined.nodes.len(),
        bridges: refined.bridge_count(),
        counters: ccb_lattice::counters(),
        micros: start.elapsed().as_micros(),
        max_antichain: states.iter().map(|s| s.chain.len()).max().unwrap_or(0),
    };
    debug_assert!(opt > BigInt::zero());
    Ok(Solution { opt, complex, refined, states, cap_removed, stats })
}

impl Solution {
    /// One line per node in evaluation order.
    pub fn trace(&self) -> String {
        let mut s = String::new();
        for u in self.refined.post_order() {
            let n = &self.refined.nodes[u];
            let st = &self.states[u];
            let kind = match n.kind {
                NodeKind::Trapezoid(t) => format!("trapezoid {t}"),
                NodeKind::SameSide => "same_side".into(),
                NodeKind::CrossSide => "cross_side".into(),
            };
            let step = match &st.step {
                Step::Extend => "extend".to_string(),
                Step::Cut { k, .. } => format!("cut {k}"),
                Step::Meet => "meet".into(),
                Step::Join => "join".into(),
            };
            s.push_str(&format!("node {u} {kind} eta {} {step} value {} chain {}\n", n.eta, st.value, st.chain));
        }
        s.push_str(&format!("opt {}{}\n", self.opt, if self.cap_removed { " (cap removed)" } else { "" }));
        s
    }
}
