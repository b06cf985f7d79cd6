//! Stanley depth of `S/I` through interval partitions of the characteristic poset.

pub mod partition;
pub mod poset;
pub mod refute;
pub mod search;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub use partition::{
    partition_to_decomposition, verify_partition, PartitionCheck, PartitionDefect, PosetInterval, StanleyPartition,
    StanleySummand,
};
pub use poset::{build_poset, CharacteristicPoset, DEFAULT_POSET_CAP};
pub use refute::verify_weight_refutation;
pub use search::{has_partition_min_label, uncoverable_point, Refutation, SearchConfig, SearchOutcome};

#[derive(Clone, Debug)]
pub struct SdepthConfig {
    pub poset_cap: usize,
    /// Cap vector; `None` means the lcm exponent.
    pub g: Option<Monomial>,
    pub search: SearchConfig,
}

impl Default for SdepthConfig {
    fn default() -> Self {
        SdepthConfig { poset_cap: DEFAULT_POSET_CAP, g: None, search: SearchConfig::default() }
    }
}

impl SdepthConfig {
    pub fn with_exec(exec: Exec) -> Self {
        let mut c = Self::default();
        c.search.exec = exec;
        c
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SdepthResult {
    pub sdepth: usize,
    pub poset_size: usize,
    pub cap: Vec<u32>,
    pub certificate: StanleyPartition,
}

pub fn sdepth_quotient(ideal: &MonomialIdeal) -> Result<SdepthResult> {
    sdepth_quotient_with(ideal, &SdepthConfig::default())
}

/// Largest `k` with a partition of minimum label `k`, tried from the top down.
///
/// Values of `k` that leave some point outside every candidate fiber are
/// discarded without search.
pub fn sdepth_quotient_with(ideal: &MonomialIdeal, cfg: &SdepthConfig) -> Result<SdepthResult> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let poset = build_poset(ideal, cfg.g.as_ref(), cfg.poset_cap)?;
    let n = ideal.n_vars();
    for k in (0..=n).rev() {
        if uncoverable_point(&poset, k).is_some() {
            continue;
        }
        if let SearchOutcome::Found(certificate) = has_partition_min_label(&poset, k, &cfg.search)? {
            debug_assert!(verify_partition(&poset, &certificate).is_valid());
            return Ok(SdepthResult { sdepth: k, poset_size: poset.len(), cap: poset.cap().to_vec(), certificate });
        }
    }
    unreachable!("singletons always partition the poset with k = 0")
}
