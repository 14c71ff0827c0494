use serde::{Deserialize, Serialize};

use crate::quiver::DEFAULT_PATH_LENGTH_BOUND;

/// Search and enumeration limits shared by every bounded decision procedure.
///
/// All sampling is driven by `seed`, so identical budgets give identical
/// answers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Budget {
    /// Largest number of coefficient tuples any single exhaustive enumeration may visit.
    pub enum_cap: u64,
    /// Random combinations tried when exhaustive enumeration is out of reach.
    pub samples: usize,
    /// Largest multiplicity of a generator in bounded witness searches.
    pub m_max: usize,
    /// Largest number of universe members summed into one pool object.
    pub sum_cap: usize,
    /// Random morphisms added per Hom space of the pool.
    pub n_random: usize,
    pub seed: u64,
    pub path_length_bound: usize,
    pub resolution_length: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            enum_cap: 1 << 20,
            samples: 64,
            m_max: 3,
            sum_cap: 2,
            n_random: 16,
            seed: 0,
            path_length_bound: DEFAULT_PATH_LENGTH_BOUND,
            resolution_length: 8,
        }
    }
}

impl Budget {
    /// Number of tuples in `[0, p)^dim`, saturating, or `None` above `enum_cap`.
    pub fn enumerable(&self, p: u32, dim: usize) -> Option<u64> {
        let mut total: u64 = 1;
        for _ in 0..dim {
            total = total.checked_mul(p as u64)?;
            if total > self.enum_cap {
                return None;
            }
        }
        Some(total)
    }

    /// Applies a `KEY=VALUE` override.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let parse = |v: &str| v.parse::<u64>().map_err(|e| format!("budget {key}: {e}"));
        let n = parse(value)?;
        match key {
            "enum_cap" => self.enum_cap = n,
            "samples" => self.samples = n as usize,
            "m_max" => self.m_max = n as usize,
            "sum_cap" => self.sum_cap = n as usize,
            "n_random" => self.n_random = n as usize,
            "seed" => self.seed = n,
            "path_length_bound" => self.path_length_bound = n as usize,
            "resolution_length" => self.resolution_length = n as usize,
            other => return Err(format!("unknown budget key `{other}`")),
        }
        Ok(())
    }
}
