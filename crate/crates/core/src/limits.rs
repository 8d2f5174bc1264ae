use crate::error::{Error, Result};

/// Size bounds for brute-force enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order for which subgroups, automorphisms, or
    /// isomorphism witnesses are enumerated.
    pub max_order: u64,
}

impl Limits {
    pub const DEFAULT_MAX_ORDER: u64 = 1024;

    pub const fn new(max_order: u64) -> Self {
        Limits { max_order }
    }

    pub(crate) fn check(&self, what: &'static str, size: u64) -> Result<()> {
        if size > self.max_order {
            Err(Error::ResourceLimit { what, size, limit: self.max_order })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::new(Self::DEFAULT_MAX_ORDER)
    }
}
