//! Penalized mean conditional entropy over a labelled sample table.

use std::fmt::Write as _;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::CostFunction;
use crate::error::{Error, Result};
use crate::lattice::{ElementSet, MAX_DEGREE};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleRow {
    pub x: ElementSet,
    pub y: bool,
}

/// Observed `(x, y)` pairs: `x` is a binary feature vector, `y` a binary label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleTable {
    n: usize,
    rows: Vec<SampleRow>,
}

impl SampleTable {
    pub fn new(n: usize, rows: Vec<SampleRow>) -> Result<Self> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::InvalidSamples(format!("degree {n} outside 1..={MAX_DEGREE}")));
        }
        if rows.is_empty() {
            return Err(Error::InvalidSamples("table has no rows".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.x.width() != n) {
            return Err(Error::InvalidSamples(format!(
                "row {} has width {}, expected {n}",
                r.x,
                r.x.width()
            )));
        }
        Ok(Self { n, rows })
    }

    pub fn rows(&self) -> &[SampleRow] {
        &self.rows
    }

    /// Total sample count `t`.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Parses the text format: an optional `n=<int> t=<int>` header followed
    /// by one `<bitstring> <0|1>` row per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| Error::InvalidSamples(format!("line {}: {msg}", lineno + 1));
            if line.starts_with("n=") {
                if lineno != 0 || header.is_some() {
                    return Err(bad("header must be the first line"));
                }
                let mut n = None;
                let mut t = None;
                for tok in line.split_whitespace() {
                    match tok.split_once('=') {
                        Some(("n", v)) => n = v.parse().ok(),
                        Some(("t", v)) => t = v.parse().ok(),
                        _ => return Err(bad("malformed header")),
                    }
                }
                match (n, t) {
                    (Some(n), Some(t)) => header = Some((n, t)),
                    _ => return Err(bad("header needs integer n= and t=")),
                }
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(bits), Some(label), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(bad("expected `<bits> <label>`"));
            };
            let x: ElementSet = bits.parse().map_err(|e: Error| bad(&e.to_string()))?;
            let y = match label {
                "0" => false,
                "1" => true,
                _ => return Err(bad("label must be 0 or 1")),
            };
            rows.push(SampleRow { x, y });
        }
        let n = match (header, rows.first()) {
            (Some((n, _)), _) => n,
            (None, Some(r)) => r.x.width(),
            (None, None) => return Err(Error::InvalidSamples("table has no rows".into())),
        };
        if let Some((_, t)) = header {
            if t != rows.len() {
                return Err(Error::InvalidSamples(format!(
                    "header declares t={t} but {} rows follow",
                    rows.len()
                )));
            }
        }
        Self::new(n, rows)
    }

    pub fn render(&self) -> String {
        let mut out = format!("n={} t={}\n", self.n, self.rows.len());
        for r in &self.rows {
            let _ = writeln!(out, "{} {}", r.x, r.y as u8);
        }
        out
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.render()).map_err(|e| Error::io(path, e))
    }
}

impl CostFunction for SampleTable {
    fn degree(&self) -> usize {
        self.n
    }

    fn cost(&self, x: ElementSet) -> f64 {
        mce_cost(self, x)
    }
}

fn binary_entropy(ones: usize, total: usize) -> f64 {
    let h = |k: usize| {
        if k == 0 {
            0.0
        } else {
            let p = k as f64 / total as f64;
            -p * p.log2()
        }
    };
    h(ones) + h(total - ones)
}

/// Penalized estimate of `E[H(Y | X)]` in bits.
///
/// Each row is projected onto the features in `x`. Projected values seen
/// exactly once contribute `1/t` each (the uniform-label penalty); values
/// seen more than once contribute their empirical conditional entropy
/// weighted by their empirical frequency.
pub fn mce_cost(samples: &SampleTable, x: ElementSet) -> f64 {
    assert_eq!(x.width(), samples.n, "element width mismatch");
    let t = samples.rows.len();
    let mask = x.bits();
    let mut keyed: Vec<(u64, bool)> = samples.rows.iter().map(|r| (r.x.bits() & mask, r.y)).collect();
    keyed.sort_unstable();

    let mut singletons = 0usize;
    let mut weighted = 0.0;
    for group in keyed.chunk_by(|a, b| a.0 == b.0) {
        let count = group.len();
        if count == 1 {
            singletons += 1;
        } else {
            let ones = group.iter().filter(|(_, y)| *y).count();
            weighted += binary_entropy(ones, count) * (count as f64 / t as f64);
        }
    }
    singletons as f64 / t as f64 + weighted
}

/// Random sample table whose label is the parity of the `planted` features,
/// flipped with probability `noise`. Feature vectors are uniform.
pub fn planted_sample_table(n: usize, rows: usize, planted: ElementSet, noise: f64, seed: u64) -> SampleTable {
    assert!(rows >= 1);
    assert_eq!(planted.width(), n);
    assert!((0.0..=1.0).contains(&noise));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mask = crate::lattice::full_mask(n);
    let rows = (0..rows)
        .map(|_| {
            let x = ElementSet::from_bits(rng.gen::<u64>() & mask, n);
            let parity = x.intersection(planted).len() % 2 == 1;
            let flip = rng.gen_bool(noise);
            SampleRow { x, y: parity ^ flip }
        })
        .collect();
    SampleTable::new(n, rows).expect("generated rows are valid")
}
