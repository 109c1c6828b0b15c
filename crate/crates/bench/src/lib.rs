//! Benchmark inputs.

use stripcut::oracle_and_generators::{gen_comb, gen_random_simple};
use stripcut::polygon_model::Region;
use stripcut::Result;

/// `gen_comb(2^k)` for each `k` in the range, labelled by tooth count.
pub fn combs(ks: std::ops::RangeInclusive<u32>) -> Result<Vec<(usize, Region)>> {
    ks.map(|k| {
        let teeth = 1usize << k;
        Ok((teeth, gen_comb(teeth)?.region))
    })
    .collect()
}

/// Random simple polygons with `2^k` vertices, seeded by `k`. The uncrossing
/// pass is slow past `k = 6`.
pub fn random_polygons(ks: std::ops::RangeInclusive<u32>) -> Result<Vec<(usize, Region)>> {
    ks.map(|k| {
        let n = 1usize << k;
        Ok((n, Region::Polygon(gen_random_simple(n, k as u64)?)))
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comb_sizes() {
        let v = combs(2..=4).unwrap();
        let sizes: Vec<usize> = v.iter().map(|(t, r)| r.size() / *t).collect();
        assert_eq!(sizes, vec![4, 4, 4]);
    }
}
