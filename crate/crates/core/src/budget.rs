use crate::error::{Error, Result};

/// Bounds on lazy enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeBudget {
    pub max_objects: usize,
    /// Largest hom-set or element set that may be enumerated.
    pub max_hom: usize,
    /// Deepest hereditarily finite value that may be produced by enumeration.
    pub max_depth: usize,
}

impl Default for SizeBudget {
    fn default() -> Self {
        SizeBudget {
            max_objects: 16,
            max_hom: 4096,
            max_depth: 4,
        }
    }
}

impl SizeBudget {
    pub fn objects<T>(&self, objs: Vec<T>) -> Result<Vec<T>> {
        if objs.len() > self.max_objects {
            return Err(Error::BudgetExceeded(format!(
                "{} objects exceed the limit of {}",
                objs.len(),
                self.max_objects
            )));
        }
        Ok(objs)
    }

    pub fn hom<T>(&self, homs: Vec<T>) -> Result<Vec<T>> {
        if homs.len() > self.max_hom {
            return Err(Error::BudgetExceeded(format!(
                "hom-set of size {} exceeds the limit of {}",
                homs.len(),
                self.max_hom
            )));
        }
        Ok(homs)
    }
}

/// Horizon for multicategory checks: every quantified signature has total
/// arity at most `arity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub arity: usize,
    pub budget: SizeBudget,
    /// Most equation instances a single check item may evaluate.
    pub max_instances: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            arity: 3,
            budget: SizeBudget::default(),
            max_instances: 1 << 22,
        }
    }
}

impl Caps {
    pub fn with_arity(arity: usize) -> Caps {
        Caps {
            arity,
            ..Caps::default()
        }
    }

    /// The same caps with the arity lowered to at most `cap`.
    pub fn clip(self, cap: usize) -> Caps {
        Caps {
            arity: self.arity.min(cap),
            ..self
        }
    }

    pub fn with_extra_arity(self) -> Caps {
        Caps {
            arity: self.arity + 1,
            ..self
        }
    }

    /// Fails once `count` exceeds the instance limit.
    pub fn guard(&self, count: usize) -> Result<()> {
        if count > self.max_instances {
            return Err(Error::BudgetExceeded(format!(
                "more than {} instances at arity cap {}",
                self.max_instances, self.arity
            )));
        }
        Ok(())
    }
}
