//! Cost functions over `P(S)` and the instrumented evaluator solvers use to
//! access them.

mod decompose;
mod entropy;
mod evaluator;
mod subset_sum;

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

pub use decompose::{verify_decomposable, DecompositionCheck, VerifyMode, Witness};
pub use entropy::{mce_cost, planted_sample_table, SampleRow, SampleTable};
pub use evaluator::{CostEvaluator, Stop, StopCriterion};
pub use subset_sum::{generate_subset_sum_instance, SubsetSum};

use crate::error::{Error, Result};
use crate::lattice::{full_mask, ElementSet, MAX_DEGREE};

/// A cost function `c : P(S) -> R+`.
pub trait CostFunction {
    /// Size `n` of the ground set.
    fn degree(&self) -> usize;

    fn cost(&self, x: ElementSet) -> f64;
}

impl<C: CostFunction + ?Sized> CostFunction for &C {
    fn degree(&self) -> usize {
        (**self).degree()
    }

    fn cost(&self, x: ElementSet) -> f64 {
        (**self).cost(x)
    }
}

/// Adapts a closure into a [`CostFunction`].
pub struct FnCost<F> {
    n: usize,
    f: F,
}

impl<F: Fn(ElementSet) -> f64> FnCost<F> {
    pub fn new(n: usize, f: F) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n));
        Self { n, f }
    }
}

impl<F: Fn(ElementSet) -> f64> CostFunction for FnCost<F> {
    fn degree(&self) -> usize {
        self.n
    }

    fn cost(&self, x: ElementSet) -> f64 {
        (self.f)(x)
    }
}

/// A cost table over every element of `P(S)`, indexed by the element bits.
#[derive(Clone, Debug, PartialEq)]
pub struct ExplicitCost {
    n: usize,
    costs: Vec<f64>,
}

impl ExplicitCost {
    /// Largest degree an explicit table may have.
    pub const MAX_DEGREE: usize = 24;

    pub fn new(n: usize, costs: Vec<f64>) -> Result<Self> {
        if n == 0 || n > Self::MAX_DEGREE {
            return Err(Error::InvalidInstance(format!(
                "explicit instances need 1 <= n <= {}, got {n}",
                Self::MAX_DEGREE
            )));
        }
        if costs.len() != 1 << n {
            return Err(Error::InvalidInstance(format!(
                "explicit instance of degree {n} needs {} costs, got {}",
                1usize << n,
                costs.len()
            )));
        }
        if let Some((i, c)) = costs.iter().enumerate().find(|(_, c)| !c.is_finite() || **c < 0.0) {
            return Err(Error::InvalidInstance(format!(
                "cost of {} is {c}; costs must be finite and non-negative",
                ElementSet::from_bits(i as u64, n)
            )));
        }
        Ok(Self { n, costs })
    }

    /// Tabulates any cost function.
    pub fn tabulate<C: CostFunction + ?Sized>(c: &C) -> Result<Self> {
        let n = c.degree();
        if n > Self::MAX_DEGREE {
            return Err(Error::InvalidInstance(format!("cannot tabulate degree {n}")));
        }
        let costs = (0..1u64 << n).map(|b| c.cost(ElementSet::from_bits(b, n))).collect();
        Self::new(n, costs)
    }

    pub fn costs(&self) -> &[f64] {
        &self.costs
    }
}

impl CostFunction for ExplicitCost {
    fn degree(&self) -> usize {
        self.n
    }

    fn cost(&self, x: ElementSet) -> f64 {
        debug_assert_eq!(x.width(), self.n);
        self.costs[x.bits() as usize]
    }
}

/// A U-curve problem instance.
#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    SubsetSum(SubsetSum),
    Mce(SampleTable),
    Explicit(ExplicitCost),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceKind {
    SubsetSum,
    Mce,
    Explicit,
}

impl Instance {
    pub fn kind(&self) -> InstanceKind {
        match self {
            Instance::SubsetSum(_) => InstanceKind::SubsetSum,
            Instance::Mce(_) => InstanceKind::Mce,
            Instance::Explicit(_) => InstanceKind::Explicit,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: InstanceFile = serde_json::from_str(text)?;
        file.try_into()
    }

    /// Canonical JSON text (sorted keys, no trailing newline).
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(InstanceFile::from(self)).expect("instance serialization is infallible");
        serde_json::to_string(&value).expect("value serialization is infallible")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json() + "\n").map_err(|e| Error::io(path, e))
    }
}

impl CostFunction for Instance {
    fn degree(&self) -> usize {
        match self {
            Instance::SubsetSum(s) => s.degree(),
            Instance::Mce(t) => t.degree(),
            Instance::Explicit(e) => e.degree(),
        }
    }

    fn cost(&self, x: ElementSet) -> f64 {
        match self {
            Instance::SubsetSum(s) => s.cost(x),
            Instance::Mce(t) => t.cost(x),
            Instance::Explicit(e) => e.cost(x),
        }
    }
}

/// On-disk instance layout.
#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum InstanceFile {
    SubsetSum { n: usize, weights: Vec<u64>, target: u64 },
    Mce { n: usize, rows: Vec<(String, u8)> },
    Explicit { n: usize, costs: BTreeMap<String, f64> },
}

impl From<&Instance> for InstanceFile {
    fn from(instance: &Instance) -> Self {
        match instance {
            Instance::SubsetSum(s) => InstanceFile::SubsetSum {
                n: s.weights().len(),
                weights: s.weights().to_vec(),
                target: s.target(),
            },
            Instance::Mce(t) => InstanceFile::Mce {
                n: t.degree(),
                rows: t.rows().iter().map(|r| (r.x.to_string(), r.y as u8)).collect(),
            },
            Instance::Explicit(e) => InstanceFile::Explicit {
                n: e.n,
                costs: e
                    .costs
                    .iter()
                    .enumerate()
                    .map(|(b, c)| (ElementSet::from_bits(b as u64, e.n).to_string(), *c))
                    .collect(),
            },
        }
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::InvalidInstance(format!("degree {n} outside 1..={MAX_DEGREE}")));
    }
    Ok(())
}

fn parse_sized(s: &str, n: usize) -> Result<ElementSet> {
    let x: ElementSet = s.parse()?;
    if x.width() != n {
        return Err(Error::InvalidInstance(format!(
            "{s:?} has width {}, expected {n}",
            x.width()
        )));
    }
    Ok(x)
}

impl TryFrom<InstanceFile> for Instance {
    type Error = Error;

    fn try_from(file: InstanceFile) -> Result<Self> {
        match file {
            InstanceFile::SubsetSum { n, weights, target } => {
                check_degree(n)?;
                if weights.len() != n {
                    return Err(Error::InvalidInstance(format!(
                        "expected {n} weights, got {}",
                        weights.len()
                    )));
                }
                Ok(Instance::SubsetSum(SubsetSum::new(weights, target)?))
            }
            InstanceFile::Mce { n, rows } => {
                check_degree(n)?;
                let rows = rows
                    .into_iter()
                    .map(|(x, y)| {
                        let x = parse_sized(&x, n)?;
                        match y {
                            0 | 1 => Ok(SampleRow { x, y: y == 1 }),
                            _ => Err(Error::InvalidInstance(format!("label {y} is not 0 or 1"))),
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Instance::Mce(
                    SampleTable::new(n, rows).map_err(|e| Error::InvalidInstance(e.to_string()))?,
                ))
            }
            InstanceFile::Explicit { n, costs } => {
                if n == 0 || n > ExplicitCost::MAX_DEGREE {
                    return Err(Error::InvalidInstance(format!(
                        "explicit instances need 1 <= n <= {}, got {n}",
                        ExplicitCost::MAX_DEGREE
                    )));
                }
                let mut table = vec![f64::NAN; 1 << n];
                for (key, c) in costs {
                    let x = parse_sized(&key, n)?;
                    table[x.bits() as usize] = c;
                }
                if let Some(b) = table.iter().position(|c| c.is_nan()) {
                    return Err(Error::InvalidInstance(format!(
                        "missing cost for {}",
                        ElementSet::from_bits(b as u64, n)
                    )));
                }
                debug_assert_eq!(full_mask(n) as usize + 1, table.len());
                Ok(Instance::Explicit(ExplicitCost::new(n, table)?))
            }
        }
    }
}
