//! Affine Weyl group geometry: linkage, the closed bottom alcove as a
//! fundamental domain for the dot action of `W_p`, special points, and block
//! decomposition of classes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::context::Context;
use crate::error::{config, Result};
use crate::grothendieck::KElement;
use crate::terms::Terms;
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlcoveStatus {
    /// `0 < ⟨λ+ρ, α∨⟩ < p` for every positive α.
    Interior,
    /// In the closure but on at least one wall.
    Wall,
    Exterior,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlcovePosition {
    pub weight: Weight,
    /// `⟨λ+ρ, α∨⟩` for the positive roots, in root-system order.
    pub wall_pairings: Vec<i64>,
    pub status: AlcoveStatus,
}

fn check_p(p: i64) -> Result<()> {
    if p < 2 {
        config(format!("p must be at least 2, got {p}"))
    } else {
        Ok(())
    }
}

impl Context {
    pub fn alcove_position(&self, weight: &Weight, p: i64) -> Result<AlcovePosition> {
        self.check_weight(weight)?;
        check_p(p)?;
        let wall_pairings = self.rs.positive_pairings(&(weight + self.rs.rho()));
        let status = if wall_pairings.iter().all(|&m| 0 < m && m < p) {
            AlcoveStatus::Interior
        } else if wall_pairings.iter().all(|&m| 0 <= m && m <= p) {
            AlcoveStatus::Wall
        } else {
            AlcoveStatus::Exterior
        };
        Ok(AlcovePosition { weight: weight.clone(), wall_pairings, status })
    }

    /// True iff some `w ∈ W` has `μ + ρ − w(λ + ρ) ∈ pℤR`.
    pub fn linked(&self, lambda: &Weight, mu: &Weight, p: i64) -> Result<bool> {
        self.check_weight(lambda)?;
        self.check_weight(mu)?;
        check_p(p)?;
        Ok(self.linked_unchecked(lambda, mu, p))
    }

    pub(crate) fn linked_unchecked(&self, lambda: &Weight, mu: &Weight, p: i64) -> bool {
        let rho = self.rs.rho();
        let l = lambda + rho;
        let m = mu + rho;
        self.weyl.elements().iter().any(|w| {
            (&m - &w.act(&l))
                .div_exact(p)
                .is_some_and(|d| self.rs.in_root_lattice(&d))
        })
    }

    /// The unique point of the closed bottom alcove in the `W_p`-dot-orbit of λ.
    pub fn fundamental_alcove_rep(&self, weight: &Weight, p: i64) -> Result<Weight> {
        self.check_weight(weight)?;
        check_p(p)?;
        let rs = &self.rs;
        let roots = rs.positive_root_weights();
        let mut x = rs.dominant_rep(&(weight + rs.rho()));
        loop {
            let (k, top) = (0..roots.len())
                .map(|k| (k, rs.coroot_pairing(&x, k)))
                .max_by_key(|&(k, m)| (m, std::cmp::Reverse(k)))
                .expect("root systems are nonempty");
            if top <= p {
                break;
            }
            // Affine reflection in the wall ⟨x, α∨⟩ = p; strictly shrinks |x|.
            x = rs.dominant_rep(&x.add_scaled(&roots[k], p - top));
        }
        Ok(&x - rs.rho())
    }

    /// Every `⟨λ + ρ, α∨⟩` divisible by p.
    pub fn is_special_point(&self, weight: &Weight, p: i64) -> Result<bool> {
        self.rs.check_rank(weight)?;
        check_p(p)?;
        let shifted = weight + self.rs.rho();
        Ok(self.rs.positive_pairings(&shifted).iter().all(|m| m.rem_euclid(p) == 0))
    }

    /// Largest r with `λ = p^r · μ` for a dominant μ in the lattice.
    pub fn st_level(&self, weight: &Weight, p: i64) -> Result<u32> {
        self.check_dominant(weight)?;
        check_p(p)?;
        let mut r = 0;
        let mut cur = weight.clone();
        while let Some(next) = self.dot_divide(&cur, p) {
            if !next.is_dominant() {
                break;
            }
            cur = next;
            r += 1;
        }
        Ok(r)
    }

    /// Splits a class by linkage class; representatives are alcove-closure points.
    pub fn block_decompose(&self, class: &KElement, p: i64) -> Result<Vec<(Weight, KElement)>> {
        self.check_class(class)?;
        check_p(p)?;
        let mut blocks: BTreeMap<Weight, Terms> = BTreeMap::new();
        for (w, c) in class.iter() {
            let rep = self.fundamental_alcove_rep(w, p)?;
            blocks.entry(rep).or_default().add(w.clone(), c);
        }
        Ok(blocks.into_iter().map(|(rep, t)| (rep, KElement(t))).collect())
    }
}
