//! Brute-force evaluation of the large-scale rules on a finite window.

use super::EpSet;

/// Verdict of a truncated evaluation; inconclusive windows are never
/// coerced to a boolean.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleVerdict {
    Orthogonal,
    NotOrthogonal,
    Inconclusive,
}

impl OracleVerdict {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            OracleVerdict::Orthogonal => Some(true),
            OracleVerdict::NotOrthogonal => Some(false),
            OracleVerdict::Inconclusive => None,
        }
    }
}

/// Pointwise evaluation on `[-window, window]` using nothing but membership
/// queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncatedOracle {
    pub window: i64,
    pub max_radius: u64,
}

impl Default for TruncatedOracle {
    fn default() -> Self {
        TruncatedOracle {
            window: 10_000,
            max_radius: 64,
        }
    }
}

impl TruncatedOracle {
    /// Membership of `B(a, r)` on `[-window, window]`.
    fn dilated(&self, a: &EpSet, r: i64) -> Vec<bool> {
        let w = self.window;
        let lo = -w - r;
        let raw: Vec<bool> = (lo..=w + r).map(|n| a.contains(n)).collect();
        let mut prefix = vec![0u32; raw.len() + 1];
        for (i, &b) in raw.iter().enumerate() {
            prefix[i + 1] = prefix[i] + b as u32;
        }
        (-w..=w)
            .map(|n| {
                let i = (n - r - lo) as usize;
                let j = (n + r - lo) as usize + 1;
                prefix[j] > prefix[i]
            })
            .collect()
    }

    /// Reads a window of the intersection: bounded if confined to the inner
    /// quarter, unbounded if it recurs in both outer eighths of one side.
    fn classify(&self, hits: &[bool]) -> OracleVerdict {
        let w = self.window;
        let at = |n: i64| hits[(n + w) as usize];
        let any = |from: i64, to: i64| (from..=to).any(at);
        let inner = w / 4;
        if !any(-w, -inner - 1) && !any(inner + 1, w) {
            return OracleVerdict::Orthogonal;
        }
        let (half, three_q) = (w / 2, 3 * w / 4);
        let right = any(half + 1, three_q) && any(three_q + 1, w);
        let left = any(-three_q, -half - 1) && any(-w, -three_q - 1);
        if right || left {
            OracleVerdict::NotOrthogonal
        } else {
            OracleVerdict::Inconclusive
        }
    }

    /// Metric large-scale orthogonality at the largest radius; the
    /// intersections grow with `r`, so this radius decides all smaller ones.
    pub fn ls_metric(&self, a: &EpSet, c: &EpSet) -> OracleVerdict {
        let r = self.max_radius as i64;
        let (da, dc) = (self.dilated(a, r), self.dilated(c, r));
        let hits: Vec<bool> = da.iter().zip(&dc).map(|(x, y)| *x && *y).collect();
        self.classify(&hits)
    }

    /// Finiteness of `A ∩ C` read off the window.
    pub fn set_theoretic(&self, a: &EpSet, c: &EpSet) -> OracleVerdict {
        let hits: Vec<bool> = (-self.window..=self.window)
            .map(|n| a.contains(n) && c.contains(n))
            .collect();
        self.classify(&hits)
    }
}
