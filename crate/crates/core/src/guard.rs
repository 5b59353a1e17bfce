//! Size guards for the quadratic oracles.

use std::env;

/// Environment variable that overrides every guard at once with a single
/// decimal value.
pub const GUARD_ENV: &str = "SEQVERIFY_GUARD";

pub const DEFAULT_BRUTE_FORCE_GUARD: usize = 8192;
pub const DEFAULT_BINPART_ORACLE_GUARD: usize = 4096;
pub const DEFAULT_DEFINITION_GUARD: usize = 4096;
pub const DEFAULT_EQ1_CAP: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Largest n accepted by the AND-pair brute force and the parity split.
    pub brute_force: usize,
    /// Largest n accepted by the binary partition DP oracle.
    pub binpart_oracle: usize,
    /// Largest n_max accepted by the max/min split definition table.
    pub definition: usize,
    /// Upper end of the range on which the quadratic chain identity is
    /// checked. Not affected by the environment override.
    pub eq1_cap: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            brute_force: DEFAULT_BRUTE_FORCE_GUARD,
            binpart_oracle: DEFAULT_BINPART_ORACLE_GUARD,
            definition: DEFAULT_DEFINITION_GUARD,
            eq1_cap: DEFAULT_EQ1_CAP,
        }
    }
}

impl Guards {
    /// Defaults, with every oracle guard replaced by `$SEQVERIFY_GUARD` when
    /// it is set to a decimal integer.
    pub fn from_env() -> Result<Self, String> {
        match env::var(GUARD_ENV) {
            Ok(raw) => {
                let value: usize = raw
                    .trim()
                    .parse()
                    .map_err(|_| format!("{GUARD_ENV}={raw:?} is not a decimal integer"))?;
                Ok(Guards::uniform(value))
            }
            Err(env::VarError::NotPresent) => Ok(Guards::default()),
            Err(e) => Err(format!("{GUARD_ENV}: {e}")),
        }
    }

    /// All oracle guards set to `value`; the chain-identity cap keeps its default.
    pub fn uniform(value: usize) -> Self {
        Guards {
            brute_force: value,
            binpart_oracle: value,
            definition: value,
            eq1_cap: DEFAULT_EQ1_CAP,
        }
    }
}
