//! Elements of ℤ[X]: Weyl characters, tensor products, Frobenius twists,
//! Steinberg characters and Euler characteristics of induced line bundles.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::context::Context;
use crate::error::{domain, Result};
use crate::terms::Terms;
use crate::weight::Weight;

/// A finitely supported, possibly signed, formal character `Σ m_λ e^λ`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Character(pub Terms);

impl Character {
    pub fn zero() -> Self {
        Character(Terms::new())
    }

    /// `e^λ`.
    pub fn monomial(w: Weight) -> Self {
        Character(std::iter::once((w, 1)).collect())
    }

    pub fn mult(&self, w: &Weight) -> i64 {
        self.0.get(w)
    }

    /// Sum of all multiplicities (the dimension, for module characters).
    pub fn dim(&self) -> i64 {
        self.0.sum()
    }

    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.0.iter().map(|(w, &m)| (w, m))
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.0.keys()
    }

    pub fn scaled(&self, k: i64) -> Character {
        Character(self.0.iter().map(|(w, &m)| (w.clone(), k * m)).collect())
    }

    pub fn plus(&self, other: &Character) -> Character {
        let mut t = self.0.clone();
        t.add_scaled(&other.0, 1);
        Character(t)
    }

    pub fn minus(&self, other: &Character) -> Character {
        let mut t = self.0.clone();
        t.add_scaled(&other.0, -1);
        Character(t)
    }

    /// Weight negation, i.e. the character of the ordinary dual.
    pub fn dual(&self) -> Character {
        Character(self.0.map_weights(|w| -w))
    }
}

impl FromIterator<(Weight, i64)> for Character {
    fn from_iter<I: IntoIterator<Item = (Weight, i64)>>(iter: I) -> Self {
        Character(iter.into_iter().collect())
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, m) in self.iter() {
            writeln!(f, "{m} · e^{w}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WeightEntry {
    w: Weight,
    mult: i64,
}

#[derive(Serialize, Deserialize)]
struct CharacterJson {
    weights: Vec<WeightEntry>,
}

impl Serialize for Character {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CharacterJson {
            weights: self.iter().map(|(w, m)| WeightEntry { w: w.clone(), mult: m }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Character {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = CharacterJson::deserialize(d)?;
        Ok(raw.weights.into_iter().map(|e| (e.w, e.mult)).collect())
    }
}

/// Dilation `λ ↦ p^r λ`.
pub fn frobenius_twist(ch: &Character, r: u32, p: i64) -> Character {
    let factor = p.pow(r);
    Character(ch.0.map_weights(|w| w.scale(factor)))
}

impl Context {
    /// Multiplicities of the dominant weights of Δ(λ) by Freudenthal's recursion.
    pub fn dominant_multiplicities(&self, top: &Weight) -> Result<Vec<(Weight, i64)>> {
        self.check_dominant(top)?;
        Ok(self.freudenthal(top))
    }

    fn freudenthal(&self, top: &Weight) -> Vec<(Weight, i64)> {
        let rs = &self.rs;
        let n = rs.rank();
        let roots = rs.positive_root_weights();
        let root_coords = rs.positive_roots();

        // Dominant weights below `top`, reached by subtracting positive roots while
        // staying dominant, tagged with the simple-root coordinates of `top − μ`.
        let mut depth_of: HashMap<Weight, Vec<i64>> = HashMap::new();
        depth_of.insert(top.clone(), vec![0; n]);
        let mut stack = vec![top.clone()];
        while let Some(mu) = stack.pop() {
            let c = depth_of[&mu].clone();
            for (k, alpha) in roots.iter().enumerate() {
                let next = &mu - alpha;
                if next.is_dominant() && !depth_of.contains_key(&next) {
                    let nc: Vec<i64> = c.iter().zip(&root_coords[k]).map(|(a, b)| a + b).collect();
                    depth_of.insert(next.clone(), nc);
                    stack.push(next);
                }
            }
        }
        let mut order: Vec<(Weight, Vec<i64>)> = depth_of.into_iter().collect();
        order.sort_by(|(wa, ca), (wb, cb)| {
            let ha: i64 = ca.iter().sum();
            let hb: i64 = cb.iter().sum();
            ha.cmp(&hb).then_with(|| wa.cmp(wb))
        });

        let mut mult: HashMap<Weight, i64> = HashMap::with_capacity(order.len());
        let mut out = Vec::with_capacity(order.len());
        for (mu, c) in order {
            if c.iter().all(|&x| x == 0) {
                mult.insert(mu.clone(), 1);
                out.push((mu, 1));
                continue;
            }
            // (λ+ρ, λ+ρ) − (μ+ρ, μ+ρ) = (λ − μ, λ + μ + 2ρ)
            let denom: i128 = (0..n)
                .map(|j| {
                    i128::from(c[j])
                        * i128::from(rs.simple_half_norm(j))
                        * i128::from(top.0[j] + mu.0[j] + 2)
                })
                .sum();
            let mut numer: i128 = 0;
            for (k, alpha) in roots.iter().enumerate() {
                let base = rs.coroot_pairing(&mu, k);
                let hn = i128::from(rs.half_norm(k));
                let mut shifted = mu.clone();
                let mut t = 1i64;
                loop {
                    shifted = &shifted + alpha;
                    let m = match mult.get(&rs.dominant_rep(&shifted)) {
                        Some(&m) => m,
                        None => break,
                    };
                    numer += hn * i128::from(base + 2 * t) * i128::from(m);
                    t += 1;
                }
            }
            numer *= 2;
            debug_assert!(denom > 0 && numer % denom == 0);
            let m = i64::try_from(numer / denom).expect("multiplicity overflows i64");
            mult.insert(mu.clone(), m);
            out.push((mu, m));
        }
        out
    }

    pub(crate) fn weyl_character_arc(&self, top: &Weight) -> Result<Arc<Character>> {
        self.check_dominant(top)?;
        if let Some(ch) = self.cached(top) {
            return Ok(ch);
        }
        let dominant = self.freudenthal(top);
        let orbits = self.exec.map(&dominant, |(mu, m)| {
            self.rs.orbit(mu).into_iter().map(|w| (w, *m)).collect::<Vec<_>>()
        });
        let ch: Character = orbits.into_iter().flatten().collect();
        let ch = Arc::new(ch);
        self.store(top.clone(), Arc::clone(&ch));
        Ok(ch)
    }

    /// Character of the Weyl module Δ(λ) (equivalently of ∇(λ)).
    pub fn weyl_character(&self, top: &Weight) -> Result<Character> {
        self.weyl_character_arc(top).map(|c| (*c).clone())
    }

    /// Convolution of two characters.
    pub fn tensor(&self, a: &Character, b: &Character) -> Character {
        let (small, large) = if a.support_len() <= b.support_len() { (a, b) } else { (b, a) };
        let outer: Vec<(&Weight, i64)> = large.iter().collect();
        let inner: Vec<(&Weight, i64)> = small.iter().collect();
        let chunk = (outer.len() / 64).max(16);
        let partials = self.exec.map_chunks(&outer, chunk, |rows| {
            let mut acc: HashMap<Weight, i64> = HashMap::new();
            for &(wa, ma) in rows {
                for &(wb, mb) in &inner {
                    *acc.entry(wa + wb).or_insert(0) += ma * mb;
                }
            }
            acc
        });
        let mut total: HashMap<Weight, i64> = HashMap::new();
        for part in partials {
            for (w, m) in part {
                *total.entry(w).or_insert(0) += m;
            }
        }
        Character(Terms::from(total))
    }

    /// `ch St_r = ch Δ((p^r − 1)ρ)`.
    pub fn steinberg_char(&self, p: i64, r: u32) -> Result<Character> {
        self.rs.check_prime(p, self.lattice)?;
        if r == 0 {
            return domain("Steinberg characters need r >= 1");
        }
        self.weyl_character(&self.rs.rho().scale(p.pow(r) - 1))
    }

    /// `Σ_j (−1)^j ch H^j(λ)`: zero when λ + ρ is singular, otherwise
    /// `(−1)^{ℓ(w)} ch Δ(w · λ)` for the `w` making `w · λ` dominant.
    pub fn euler_characteristic(&self, weight: &Weight) -> Result<Character> {
        self.check_weight(weight)?;
        match self.dot_dominant(weight) {
            None => Ok(Character::zero()),
            Some((dom, sign)) => Ok(self.weyl_character_arc(&dom)?.scaled(sign)),
        }
    }

    /// `(φχ)_λ = χ_{pλ}` for λ in the active lattice.
    pub fn contract_weights(&self, ch: &Character, p: i64) -> Result<Character> {
        if p < 2 {
            return domain(format!("p must be at least 2, got {p}"));
        }
        Ok(ch
            .iter()
            .filter_map(|(w, m)| w.div_exact(p).map(|v| (v, m)))
            .filter(|(v, _)| self.in_lattice(v))
            .collect())
    }

    /// Fails unless the character is constant on W-orbits.
    pub fn check_w_invariant(&self, ch: &Character) -> Result<()> {
        let mut orbit_total = 0usize;
        for (w, m) in ch.iter() {
            self.rs.check_rank(w)?;
            let dom = self.rs.dominant_rep(w);
            if ch.mult(&dom) != m {
                return domain(format!(
                    "character is not W-invariant: weight {w} has multiplicity {m} but {dom} has {}",
                    ch.mult(&dom)
                ));
            }
            if &dom == w {
                orbit_total += self.rs.orbit(w).len();
            }
        }
        if orbit_total != ch.support_len() {
            return domain("character is not W-invariant: an orbit is only partly present");
        }
        Ok(())
    }

    /// W-invariance plus lattice membership of every weight.
    pub(crate) fn check_module_character(&self, ch: &Character) -> Result<()> {
        self.check_w_invariant(ch)?;
        if let Some(w) = ch.weights().find(|w| !self.in_lattice(w)) {
            return domain(format!("weight {w} is not in the root lattice (adjoint mode)"));
        }
        Ok(())
    }
}
