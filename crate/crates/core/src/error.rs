use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: bad symbol, incomplete structure, mismatched alphabets.
    #[error("input error: {0}")]
    Input(String),
    /// A desk-scale limit was exceeded.
    #[error("capacity error: {what} ({found} exceeds limit {limit})")]
    Capacity {
        what: &'static str,
        limit: usize,
        found: usize,
    },
    /// A documented precondition was violated by the caller.
    #[error("contract error: {0}")]
    Contract(String),
    /// The language is outside the class an operation supports.
    #[error("{0}")]
    Domain(String),
    /// An internal consistency assertion failed.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Tunable limits for the exponential parts of the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest MSCC whose subsets are enumerated.
    pub mscc_cap: usize,
    /// Largest number of reachable vector states or transition profiles.
    pub state_cap: usize,
    /// Largest number of strongly connected subsets visited in a product search.
    pub subset_budget: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            mscc_cap: 12,
            state_cap: 200_000,
            subset_budget: 1 << 20,
        }
    }
}

impl Limits {
    pub fn with_mscc_cap(mut self, cap: usize) -> Self {
        self.mscc_cap = cap;
        self
    }

    pub(crate) fn check_states(&self, what: &'static str, found: usize) -> Result<()> {
        if found > self.state_cap {
            return Err(Error::Capacity {
                what,
                limit: self.state_cap,
                found,
            });
        }
        Ok(())
    }
}
