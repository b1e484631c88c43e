use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use super::config::{CostKind, ExperimentConfig};
use crate::cost::{generate_subset_sum_instance, planted_sample_table, Instance};
use crate::error::{Error, Result};
use crate::lattice::ElementSet;

/// One generated instance of an experiment.
#[derive(Clone, Debug)]
pub struct InstanceEntry {
    pub n: usize,
    /// Position within its size.
    pub index: usize,
    pub seed: u64,
    pub instance: Instance,
    /// SHA-256 of the canonical instance JSON.
    pub digest: [u8; 32],
}

/// The instances every protocol step of an experiment runs on.
#[derive(Clone, Debug)]
pub struct InstanceSet {
    entries: Vec<InstanceEntry>,
}

impl InstanceSet {
    /// Generates `instances_per_size` instances for every size.
    pub fn generate(config: &ExperimentConfig) -> Self {
        let entries = config
            .sizes
            .iter()
            .flat_map(|&n| (0..config.instances_per_size).map(move |index| (n, index)))
            .map(|(n, index)| {
                let seed = instance_seed(config.seed, n, index);
                let instance = make_instance(config, n, seed);
                let digest = digest(&instance);
                InstanceEntry {
                    n,
                    index,
                    seed,
                    instance,
                    digest,
                }
            })
            .collect();
        Self { entries }
    }

    pub fn entries(&self) -> &[InstanceEntry] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut [InstanceEntry] {
        &mut self.entries
    }

    /// Checks every instance against the digest recorded at generation.
    pub fn verify(&self) -> Result<()> {
        match self.entries.iter().position(|e| digest(&e.instance) != e.digest) {
            Some(index) => Err(Error::InstanceDigestMismatch { index }),
            None => Ok(()),
        }
    }
}

pub fn digest(instance: &Instance) -> [u8; 32] {
    Sha256::digest(instance.to_json().as_bytes()).into()
}

/// Per-instance seed mixed from the experiment seed, size and index.
pub fn instance_seed(seed: u64, n: usize, index: usize) -> u64 {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update((n as u64).to_le_bytes());
    h.update((index as u64).to_le_bytes());
    let out = h.finalize();
    u64::from_le_bytes(out[..8].try_into().expect("8 bytes"))
}

fn make_instance(config: &ExperimentConfig, n: usize, seed: u64) -> Instance {
    match config.cost_kind {
        CostKind::SubsetSum => generate_subset_sum_instance(n, seed, config.weight_max),
        CostKind::Mce => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let k = n.min(3);
            let planted = ElementSet::from_indices(sample(&mut rng, n, k), n);
            Instance::Mce(planted_sample_table(n, config.sample_rows, planted, 0.1, seed))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::SubsetSum;

    #[test]
    fn generation_is_deterministic() {
        let c = ExperimentConfig::new(vec![4, 6], 3, 9);
        let a = InstanceSet::generate(&c);
        let b = InstanceSet::generate(&c);
        assert_eq!(a.entries().len(), 6);
        for (x, y) in a.entries().iter().zip(b.entries()) {
            assert_eq!(x.instance, y.instance);
            assert_eq!(x.digest, y.digest);
        }
        assert_ne!(a.entries()[0].seed, a.entries()[1].seed);
    }

    #[test]
    fn tampering_is_detected() {
        let mut set = InstanceSet::generate(&ExperimentConfig::new(vec![4], 3, 9));
        set.verify().unwrap();
        set.entries_mut()[2].instance = Instance::SubsetSum(SubsetSum::new(vec![1, 2, 3, 4], 5).unwrap());
        assert!(matches!(set.verify(), Err(Error::InstanceDigestMismatch { index: 2 })));
    }

    #[test]
    fn mce_instances() {
        let mut c = ExperimentConfig::new(vec![6], 2, 1);
        c.cost_kind = CostKind::Mce;
        c.sample_rows = 50;
        let set = InstanceSet::generate(&c);
        assert!(matches!(&set.entries()[0].instance, Instance::Mce(t) if t.len() == 50));
    }
}
