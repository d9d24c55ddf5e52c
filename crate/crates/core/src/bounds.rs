//! Size limits for the exhaustive searches.

use std::str::FromStr;

use serde::Serialize;

/// Limits past which exhaustive procedures report an unresolved result
/// instead of running.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Largest vertex count for enumerating all 2-block coverings.
    pub pair_max_n: usize,
    /// Largest vertex count for enumerating all 3-block coverings.
    pub triple_max_n: usize,
    /// Largest number of optional vertex pairs the brute-force appendage
    /// search will toggle.
    pub oracle_free_pairs: usize,
    /// Node budget for the partition searches at size `cov_A`.
    pub search_budget: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            pair_max_n: 14,
            triple_max_n: 10,
            oracle_free_pairs: 24,
            search_budget: 50_000_000,
        }
    }
}

impl Bounds {
    pub const ENV_VAR: &'static str = "UCG_BOUND";

    /// Defaults overridden by `UCG_BOUND`, e.g. `pair=12,oracle=29`.
    /// Malformed settings are ignored with a warning on stderr.
    pub fn from_env() -> Self {
        match std::env::var(Self::ENV_VAR) {
            Ok(text) => text.parse().unwrap_or_else(|e| {
                eprintln!("ignoring {}: {e}", Self::ENV_VAR);
                Bounds::default()
            }),
            Err(_) => Bounds::default(),
        }
    }
}

impl FromStr for Bounds {
    type Err = String;

    /// `key=value` pairs separated by commas; keys are `pair`, `triple`,
    /// `oracle` and `budget`. Unlisted keys keep their defaults.
    fn from_str(s: &str) -> Result<Self, String> {
        let mut b = Bounds::default();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got {item:?}"))?;
            let bad = |e: std::num::ParseIntError| format!("{key}: {e}");
            match key.trim() {
                "pair" => b.pair_max_n = value.trim().parse().map_err(bad)?,
                "triple" => b.triple_max_n = value.trim().parse().map_err(bad)?,
                "oracle" => b.oracle_free_pairs = value.trim().parse().map_err(bad)?,
                "budget" => b.search_budget = value.trim().parse().map_err(bad)?,
                other => return Err(format!("unknown bound {other:?}")),
            }
        }
        Ok(b)
    }
}
