use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::CostFunction;
use crate::error::{Error, Result};
use crate::lattice::{full_mask, ElementSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Every triple `Z ⊆ Y ⊆ X`; limited to `n <= 10`.
    Exhaustive,
    /// Random maximal chains.
    Sampled { chains: usize, seed: u64 },
}

impl VerifyMode {
    pub const EXHAUSTIVE_MAX_DEGREE: usize = 10;
}

/// A chain `z ⊆ y ⊆ x` with `c(y) > max(c(z), c(x))`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub z: ElementSet,
    pub y: ElementSet,
    pub x: ElementSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum DecompositionCheck {
    Ok,
    Violation(Witness),
}

/// Checks that `c` restricted to every chain is U-shaped.
pub fn verify_decomposable<C: CostFunction + ?Sized>(c: &C, mode: VerifyMode) -> Result<DecompositionCheck> {
    let n = c.degree();
    match mode {
        VerifyMode::Exhaustive => {
            if n > VerifyMode::EXHAUSTIVE_MAX_DEGREE {
                return Err(Error::InvalidInstance(format!(
                    "exhaustive verification supports n <= {}, got {n}",
                    VerifyMode::EXHAUSTIVE_MAX_DEGREE
                )));
            }
            Ok(exhaustive(c, n))
        }
        VerifyMode::Sampled { chains, seed } => Ok(sampled(c, n, chains, seed)),
    }
}

fn exhaustive<C: CostFunction + ?Sized>(c: &C, n: usize) -> DecompositionCheck {
    let table: Vec<f64> = (0..=full_mask(n))
        .map(|b| c.cost(ElementSet::from_bits(b, n)))
        .collect();
    let el = |b: u64| ElementSet::from_bits(b, n);
    for x in 0..=full_mask(n) {
        let cx = table[x as usize];
        // y ranges over submasks of x, z over submasks of y.
        let mut y = x;
        loop {
            let cy = table[y as usize];
            if cy > cx {
                let mut z = y;
                loop {
                    if cy > table[z as usize] {
                        return DecompositionCheck::Violation(Witness {
                            z: el(z),
                            y: el(y),
                            x: el(x),
                        });
                    }
                    if z == 0 {
                        break;
                    }
                    z = (z - 1) & y;
                }
            }
            if y == 0 {
                break;
            }
            y = (y - 1) & x;
        }
    }
    DecompositionCheck::Ok
}

fn sampled<C: CostFunction + ?Sized>(c: &C, n: usize, chains: usize, seed: u64) -> DecompositionCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    for _ in 0..chains {
        order.shuffle(&mut rng);
        let mut chain = Vec::with_capacity(n + 1);
        let mut x = ElementSet::empty(n);
        chain.push(x);
        for &i in &order {
            x = x.with(i);
            chain.push(x);
        }
        let costs: Vec<f64> = chain.iter().map(|&e| c.cost(e)).collect();
        if let Some((i, j, k)) = chain_violation(&costs) {
            return DecompositionCheck::Violation(Witness {
                z: chain[i],
                y: chain[j],
                x: chain[k],
            });
        }
    }
    DecompositionCheck::Ok
}

/// Indices `i < j < k` with `costs[j] > max(costs[i], costs[k])`, if any.
fn chain_violation(costs: &[f64]) -> Option<(usize, usize, usize)> {
    let len = costs.len();
    if len < 3 {
        return None;
    }
    let mut suffix_min = vec![len - 1; len];
    for j in (0..len - 1).rev() {
        let k = suffix_min[j + 1];
        suffix_min[j] = if costs[j] < costs[k] { j } else { k };
    }
    let mut prefix_min = 0;
    for j in 1..len - 1 {
        let k = suffix_min[j + 1];
        if costs[j] > costs[prefix_min] && costs[j] > costs[k] {
            return Some((prefix_min, j, k));
        }
        if costs[j] < costs[prefix_min] {
            prefix_min = j;
        }
    }
    None
}
