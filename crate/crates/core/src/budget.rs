//! Size caps for the exhaustive procedures.
//!
//! Anything that would run past a cap reports [`Error::BudgetExceeded`]
//! instead of guessing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest graph whose 3-colourings are enumerated exhaustively.
    pub enumeration: usize,
    /// Largest graph handed to the colouring and connectivity oracles by the
    /// equivalence and spot checks.
    pub oracle: usize,
    /// Largest graph for the ordered-ness and Hamiltonian cycle searches.
    pub brute_force: usize,
    /// Largest graph a construction may build.
    pub build: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            enumeration: 60,
            oracle: 200,
            brute_force: 14,
            build: 5000,
        }
    }
}

impl Budget {
    pub(crate) fn check(what: &'static str, size: usize, cap: usize) -> Result<()> {
        if size > cap {
            Err(Error::BudgetExceeded {
                what,
                size: size as u128,
                cap: cap as u128,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_enumeration(&self, n: usize) -> Result<()> {
        Self::check("colouring enumeration", n, self.enumeration)
    }

    pub fn check_oracle(&self, n: usize) -> Result<()> {
        Self::check("oracle", n, self.oracle)
    }

    pub fn check_brute_force(&self, n: usize) -> Result<()> {
        Self::check("brute-force search", n, self.brute_force)
    }

    pub fn check_build(&self, n: u128) -> Result<()> {
        if n > self.build {
            Err(Error::BudgetExceeded {
                what: "construction",
                size: n,
                cap: self.build,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let b = Budget::default();
        assert_eq!(b.enumeration, 60);
        assert_eq!(b.brute_force, 14);
        assert!(b.check_enumeration(60).is_ok());
        let err = b.check_enumeration(61).unwrap_err();
        assert!(err.is_refusal());
        assert_eq!(err.exit_code(), 2);
    }
}
