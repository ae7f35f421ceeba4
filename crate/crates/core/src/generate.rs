//! Seeded random instances.
//!
//! All randomness comes from `ChaCha8Rng` (rand_chacha 0.9) seeded through
//! `seed_from_u64`, so a seed reproduces the same instance on every
//! platform. Per-instance seeds are derived with [`mix_seed`], a SplitMix64
//! fold over the identifying integers.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Color, Instance};

pub type InstanceRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Folds `parts` into one seed: `h = splitmix64(h ^ part)` starting from
/// `h = splitmix64(len)`.
pub fn mix_seed(parts: &[u64]) -> u64 {
    parts
        .iter()
        .fold(splitmix64(parts.len() as u64), |h, &p| splitmix64(h ^ p))
}

/// Fractions such as densities and color factors enter seeds in thousandths.
pub fn milli(x: f64) -> u64 {
    (x * 1000.0).round() as u64
}

/// Parameters of one random list coloring instance.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenConfig {
    pub n: usize,
    /// Edge probability (target density).
    pub d: f64,
    /// Colors are drawn from `1..=floor(c * n)`.
    pub c: f64,
    /// List length.
    pub k: usize,
    pub seed: u64,
}

impl GenConfig {
    pub fn color_range(&self) -> usize {
        color_range(self.n, self.c)
    }

    pub fn check(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.d) {
            return Err(Error::Config(format!("density {} outside [0, 1]", self.d)));
        }
        check_lists(self.n, self.c, self.k)
    }

    /// Graph seed and list seed for a standalone config.
    pub fn seeds(&self) -> (u64, u64) {
        (mix_seed(&[self.seed, 0]), mix_seed(&[self.seed, 1]))
    }

    pub fn generate(&self) -> Result<Instance> {
        self.check()?;
        let (gs, ls) = self.seeds();
        let g = gen_random_graph(self.n, self.d, gs);
        let lists = gen_lists(self.n, self.c, self.k, ls)?;
        Instance::new(g, lists)
    }
}

/// `floor(c * n)`, with a small guard so `0.3 * 10` is 3 and not 2.
pub fn color_range(n: usize, c: f64) -> usize {
    (c * n as f64 + 1e-9).floor().max(0.0) as usize
}

fn check_lists(n: usize, c: f64, k: usize) -> Result<()> {
    let range = color_range(n, c);
    if n > 0 && range == 0 {
        return Err(Error::Config(format!("color range c*n = {c}*{n} is empty")));
    }
    if k == 0 {
        return Err(Error::Config("list length must be at least 1".into()));
    }
    if n > 0 && k > range {
        return Err(Error::Config(format!(
            "list length {k} exceeds color range {range}"
        )));
    }
    Ok(())
}

/// G(n, p) with `p = d`: every pair `u < v`, visited in lexicographic
/// order, is an edge when the next `f64` draw is below `d`.
pub fn gen_random_graph(n: usize, d: f64, seed: u64) -> Graph {
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < d {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated pairs are in range and loop-free")
}

/// For each vertex in id order, `k` distinct colors sampled uniformly
/// without replacement from `1..=floor(c * n)`.
pub fn gen_lists(n: usize, c: f64, k: usize, seed: u64) -> Result<Vec<Vec<Color>>> {
    check_lists(n, c, k)?;
    let range = color_range(n, c);
    let mut rng = rng_from_seed(seed);
    Ok((0..n)
        .map(|_| {
            let mut list: Vec<Color> = index::sample(&mut rng, range, k)
                .into_iter()
                .map(|i| Color(i as u32 + 1))
                .collect();
            list.sort_unstable();
            list
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn extreme_densities() {
        assert_eq!(gen_random_graph(2, 0.0, 1).m(), 0);
        assert_eq!(gen_random_graph(4, 1.0, 1), Graph::complete(4));
    }

    #[test]
    fn graph_determinism() {
        let a = gen_random_graph(50, 0.3, 7);
        let b = gen_random_graph(50, 0.3, 7);
        assert_eq!(a, b);
        assert_ne!(a, gen_random_graph(50, 0.3, 8));
    }

    #[test]
    fn range_equal_to_k_forces_lists() {
        let lists = gen_lists(10, 0.3, 3, 99).unwrap();
        assert!(lists.iter().all(|l| l == &[Color(1), Color(2), Color(3)]));
    }

    #[test]
    fn small_range() {
        assert_eq!(color_range(50, 0.1), 5);
        let lists = gen_lists(50, 0.1, 3, 11).unwrap();
        assert!(lists.iter().flatten().all(|c| (1..=5).contains(&c.0)));
        assert_eq!(lists, gen_lists(50, 0.1, 3, 11).unwrap());
    }

    #[test]
    fn k_larger_than_range() {
        assert!(matches!(gen_lists(10, 0.2, 3, 0), Err(Error::Config(_))));
    }

    #[test]
    fn mixing_is_order_sensitive() {
        assert_ne!(mix_seed(&[1, 2]), mix_seed(&[2, 1]));
        assert_ne!(mix_seed(&[0]), mix_seed(&[0, 0]));
    }

    #[test]
    fn standalone_config() {
        let cfg = GenConfig {
            n: 30,
            d: 0.2,
            c: 0.5,
            k: 4,
            seed: 5,
        };
        let a = cfg.generate().unwrap();
        assert_eq!(a, cfg.generate().unwrap());
        assert!(GenConfig { d: 1.5, ..cfg }.generate().is_err());
    }

    proptest! {
        #[test]
        fn generated_lists_shape(n in 5usize..60, c_tenths in 1u32..=10, k in 1usize..6, seed: u64) {
            let c = c_tenths as f64 / 10.0;
            let range = color_range(n, c);
            prop_assume!(k <= range);
            let lists = gen_lists(n, c, k, seed).unwrap();
            prop_assert_eq!(lists.len(), n);
            for l in &lists {
                prop_assert_eq!(l.len(), k);
                prop_assert!(l.windows(2).all(|w| w[0] < w[1]));
                prop_assert!(l.iter().all(|c| c.0 >= 1 && c.0 as usize <= range));
            }
        }
    }
}
