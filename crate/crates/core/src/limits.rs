use crate::error::{Error, Result};

/// Resource caps shared by the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Partial assignments a single search may visit.
    pub max_assignments: u64,
    /// Largest base-graph degree accepted by the CFI construction.
    pub max_cfi_degree: usize,
    /// Largest graph handed to the exact treewidth solver.
    pub max_treewidth_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_assignments: 1_000_000_000,
            max_cfi_degree: 20,
            max_treewidth_vertices: 32,
        }
    }
}

impl Limits {
    pub fn budget(&self, what: &'static str) -> Budget {
        Budget {
            remaining: self.max_assignments,
            what,
        }
    }
}

/// Step counter for one search.
#[derive(Debug)]
pub struct Budget {
    remaining: u64,
    what: &'static str,
}

impl Budget {
    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        if self.remaining == 0 {
            return Err(Error::BudgetExceeded(self.what.to_string()));
        }
        self.remaining -= 1;
        Ok(())
    }

    #[inline]
    pub fn charge(&mut self, steps: u64) -> Result<()> {
        if self.remaining < steps {
            self.remaining = 0;
            return Err(Error::BudgetExceeded(self.what.to_string()));
        }
        self.remaining -= steps;
        Ok(())
    }
}
