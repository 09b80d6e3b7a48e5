//! Size caps for the exhaustive operations.
//!
//! Everything in this crate enumerates Catalan- or Bell-sized families, so
//! each entry point checks `n` against a cap before it starts.  The defaults
//! keep every operation comfortably under a few seconds; the `NCKIT_MAX_N`
//! environment variable replaces all of them at once for users who know what
//! they are asking for.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub noncrossing_enum: usize,
    pub full_enum: usize,
    pub chains: usize,
    pub factorization_length: usize,
    pub parking: usize,
    pub complexes: usize,
    pub catalan_families: usize,
    pub face_poset: usize,
    pub realize: usize,
    pub moments_noncrossing: usize,
    pub moments_full: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            noncrossing_enum: 12,
            full_enum: 10,
            chains: 8,
            factorization_length: 8,
            parking: 7,
            complexes: 7,
            catalan_families: 12,
            face_poset: 8,
            realize: 9,
            moments_noncrossing: 10,
            moments_full: 9,
        }
    }
}

impl Bounds {
    /// Same cap for every operation.
    pub fn uniform(n: usize) -> Self {
        Bounds {
            noncrossing_enum: n,
            full_enum: n,
            chains: n,
            factorization_length: n,
            parking: n,
            complexes: n,
            catalan_families: n,
            face_poset: n,
            realize: n,
            moments_noncrossing: n,
            moments_full: n,
        }
    }

    /// Defaults, unless `NCKIT_MAX_N` is set to a positive integer.
    pub fn from_env() -> Result<Self> {
        match std::env::var("NCKIT_MAX_N") {
            Err(_) => Ok(Bounds::default()),
            Ok(raw) => {
                let n: usize = raw.trim().parse().map_err(|_| {
                    Error::Parse(format!("NCKIT_MAX_N must be a positive integer, got {raw:?}"))
                })?;
                if n == 0 {
                    return Err(Error::Parse(
                        "NCKIT_MAX_N must be a positive integer, got 0".into(),
                    ));
                }
                Ok(Bounds::uniform(n))
            }
        }
    }

    pub(crate) fn check(&self, what: &'static str, n: usize, bound: usize) -> Result<()> {
        if n > bound {
            Err(Error::BoundExceeded { what, n, bound })
        } else {
            Ok(())
        }
    }
}
