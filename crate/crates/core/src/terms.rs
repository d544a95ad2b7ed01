use std::collections::btree_map::{self, BTreeMap};
use std::collections::HashMap;

use crate::weight::Weight;

/// Finitely supported ℤ-valued function on weights. Zero values are never stored,
/// so derived equality is equality of functions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Terms(BTreeMap<Weight, i64>);

impl Terms {
    pub fn new() -> Self {
        Terms(BTreeMap::new())
    }

    pub fn get(&self, w: &Weight) -> i64 {
        self.0.get(w).copied().unwrap_or(0)
    }

    pub fn add(&mut self, w: Weight, value: i64) {
        if value == 0 {
            return;
        }
        match self.0.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += value;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    /// `self += k · other`.
    pub fn add_scaled(&mut self, other: &Terms, k: i64) {
        for (w, &v) in &other.0 {
            self.add(w.clone(), k * v);
        }
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Weight, i64> {
        self.0.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, Weight, i64> {
        self.0.keys()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> Terms {
        self.0.iter().map(|(w, &v)| (f(w), v)).collect()
    }

    pub fn filter(&self, mut keep: impl FnMut(&Weight) -> bool) -> Terms {
        Terms(self.0.iter().filter(|(w, _)| keep(w)).map(|(w, &v)| (w.clone(), v)).collect())
    }
}

impl FromIterator<(Weight, i64)> for Terms {
    fn from_iter<I: IntoIterator<Item = (Weight, i64)>>(iter: I) -> Self {
        let mut t = Terms::new();
        for (w, v) in iter {
            t.add(w, v);
        }
        t
    }
}

impl From<HashMap<Weight, i64>> for Terms {
    fn from(map: HashMap<Weight, i64>) -> Self {
        Terms(map.into_iter().filter(|(_, v)| *v != 0).collect())
    }
}

impl<'a> IntoIterator for &'a Terms {
    type Item = (&'a Weight, &'a i64);
    type IntoIter = btree_map::Iter<'a, Weight, i64>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
