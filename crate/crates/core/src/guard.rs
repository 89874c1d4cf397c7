//! Size guard for brute-force oracles.
//!
//! Several checks enumerate all subsets of a universe (open covers,
//! closed families, directed families). Those scans are exponential and
//! must refuse loudly instead of hanging, so every such entry point is
//! gated by a configurable bound on the universe size.

use crate::error::{Error, Result};

pub const DEFAULT_SIZE_GUARD: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeGuard {
    pub max_universe: usize,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            max_universe: DEFAULT_SIZE_GUARD,
        }
    }
}

impl SizeGuard {
    pub fn new(max_universe: usize) -> Self {
        SizeGuard { max_universe }
    }

    /// Reads `MTLAB_SIZE_GUARD`, falling back to the default bound.
    pub fn from_env() -> Self {
        match std::env::var("MTLAB_SIZE_GUARD")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
        {
            Some(n) => SizeGuard::new(n),
            None => SizeGuard::default(),
        }
    }

    pub fn admits(&self, universe: usize) -> bool {
        universe <= self.max_universe
    }

    pub fn admit(&self, what: &'static str, universe: usize) -> Result<()> {
        if self.admits(universe) {
            Ok(())
        } else {
            Err(Error::SizeGuardExceeded {
                what,
                universe,
                bound: self.max_universe,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_bound() {
        let g = SizeGuard::default();
        assert!(g.admit("scan", 20).is_ok());
        assert!(matches!(
            g.admit("scan", 21),
            Err(Error::SizeGuardExceeded { universe: 21, .. })
        ));
    }
}
