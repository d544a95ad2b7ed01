use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::characters::Character;
use crate::error::{domain, Result};
use crate::par::Exec;
use crate::root_data::{LatticeMode, RootSystem, Series};
use crate::weight::Weight;
use crate::weyl_group::WeylGroup;

/// A root system, its enumerated Weyl group and the chosen character lattice.
///
/// Every character and Grothendieck-group operation hangs off this type. Weyl
/// characters are memoized behind a lock, so a `Context` can be shared across
/// threads.
pub struct Context {
    pub(crate) rs: RootSystem,
    pub(crate) weyl: WeylGroup,
    pub(crate) lattice: LatticeMode,
    pub(crate) exec: Exec,
    cache: RwLock<HashMap<Weight, Arc<Character>>>,
}

impl std::fmt::Debug for Context {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Context")
            .field("root_system", &self.rs.id())
            .field("lattice", &self.lattice)
            .field("exec", &self.exec)
            .finish()
    }
}

impl Context {
    pub fn new(series: Series, rank: usize, lattice: LatticeMode) -> Result<Self> {
        let rs = RootSystem::new(series, rank)?;
        Self::from_root_system(rs, lattice)
    }

    pub fn from_root_system(rs: RootSystem, lattice: LatticeMode) -> Result<Self> {
        let weyl = WeylGroup::generate(&rs)?;
        Ok(Context { rs, weyl, lattice, exec: Exec::default(), cache: RwLock::new(HashMap::new()) })
    }

    /// Same data, different execution strategy (the cache is not shared).
    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn weyl_group(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn lattice(&self) -> LatticeMode {
        self.lattice
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn in_lattice(&self, w: &Weight) -> bool {
        self.rs.in_lattice(w, self.lattice)
    }

    pub(crate) fn check_weight(&self, w: &Weight) -> Result<()> {
        self.rs.check_rank(w)?;
        if !self.in_lattice(w) {
            return domain(format!("weight {w} is not in the root lattice (adjoint mode)"));
        }
        Ok(())
    }

    pub(crate) fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_weight(w)?;
        if !w.is_dominant() {
            return domain(format!("weight {w} is not dominant"));
        }
        Ok(())
    }

    pub(crate) fn cached(&self, w: &Weight) -> Option<Arc<Character>> {
        self.cache.read().expect("cache lock poisoned").get(w).cloned()
    }

    pub(crate) fn store(&self, w: Weight, ch: Arc<Character>) {
        self.cache.write().expect("cache lock poisoned").insert(w, ch);
    }

    /// `w · λ` via the dominant-chamber walk: the dominant representative of
    /// λ + ρ, with the sign of the walking element, or `None` if λ + ρ is
    /// singular.
    pub(crate) fn dot_dominant(&self, w: &Weight) -> Option<(Weight, i64)> {
        let shifted = w + self.rs.rho();
        let (dom, word) = self.rs.dominate(&shifted);
        if dom.coords().contains(&0) {
            return None;
        }
        let sign = if word.len() % 2 == 0 { 1 } else { -1 };
        Some((&dom - self.rs.rho(), sign))
    }
}
