//! Scaling runs over generated families.

use std::fmt;

use anyhow::Result;

use stripcut::dp_engine::{solve, Stats};
use stripcut::oracle_and_generators::{gen_comb, gen_random_simple};
use stripcut::polygon_model::Region;

use crate::Family;

/// One solved instance.
pub struct RunReport {
    pub name: String,
    pub n: usize,
    pub class: &'static str,
    pub opt: String,
    pub stats: Stats,
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.stats;
        write!(
            f,
            "instance={} n={} class={} opt={} wall_us={} trapezoids={} nodes={} bridges={} meets={} joins={} rank_queries={} comparisons={}",
            self.name,
            self.n,
            self.class,
            self.opt,
            s.micros,
            s.trapezoids,
            s.nodes,
            s.bridges,
            s.counters.meets,
            s.counters.joins,
            s.counters.rank_queries,
            s.counters.comparisons
        )
    }
}

/// Solves the family member of size `2^k`, `reps` times.
pub fn run(family: Family, k: u32, reps: usize) -> Result<Vec<RunReport>> {
    let size = 1usize << k;
    let (name, region) = match family {
        Family::Comb => (format!("comb-{size}"), gen_comb(size)?.region),
        Family::Random => (format!("random-{size}"), Region::Polygon(gen_random_simple(size, k as u64)?)),
    };
    let mut out = Vec::with_capacity(reps);
    for _ in 0..reps.max(1) {
        let sol = solve(&region)?;
        out.push(RunReport {
            name: name.clone(),
            n: region.size(),
            class: region.class_name(),
            opt: sol.opt.to_string(),
            stats: sol.stats,
        });
    }
    Ok(out)
}
