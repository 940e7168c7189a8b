/// Limits for exhaustive enumeration and parameters for sampled checks.
///
/// Each exhaustive routine compares the size of its ground set against one
/// of these dimensions and returns [`crate::Error::BudgetExceeded`] instead
/// of running when the limit is too small.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest ground set for the full axiom scan over subset triples.
    pub exhaustive_n: usize,
    /// Largest ground set for searches over pairs of subsets.
    pub pair_search_n: usize,
    /// Largest ground set for claims quantified over three or more subsets
    /// with a brute-force inner search.
    pub triple_n: usize,
    /// Number of random instances for sampled checks (0 disables sampling).
    pub samples: usize,
    /// Seed for every sampled check.
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            exhaustive_n: 8,
            pair_search_n: 12,
            triple_n: 6,
            samples: 2000,
            seed: 0x5eed,
        }
    }
}

impl Budget {
    pub(crate) fn require(
        self,
        dimension: &'static str,
        n: usize,
        limit: usize,
    ) -> crate::Result<()> {
        if n > limit {
            Err(crate::Error::budget(dimension, n, limit))
        } else {
            Ok(())
        }
    }
}
