#![allow(dead_code)]

use std::collections::HashMap;

use modrep_core::{Character, Context, RootSystem, Weight};
use num_rational::Ratio;
use rand::Rng;

/// Kostant partition function on simple-root coordinates.
pub struct Kostant {
    roots: Vec<Vec<i64>>,
    memo: HashMap<(usize, Vec<i64>), i64>,
}

impl Kostant {
    pub fn new(rs: &RootSystem) -> Self {
        Kostant { roots: rs.positive_roots().to_vec(), memo: HashMap::new() }
    }

    pub fn count(&mut self, v: &[i64]) -> i64 {
        self.count_from(0, v.to_vec())
    }

    fn count_from(&mut self, k: usize, v: Vec<i64>) -> i64 {
        if v.iter().any(|&c| c < 0) {
            return 0;
        }
        if k == self.roots.len() {
            return i64::from(v.iter().all(|&c| c == 0));
        }
        if let Some(&n) = self.memo.get(&(k, v.clone())) {
            return n;
        }
        let mut total = 0;
        let mut cur = v.clone();
        while cur.iter().all(|&c| c >= 0) {
            total += self.count_from(k + 1, cur.clone());
            for (c, r) in cur.iter_mut().zip(&self.roots[k]) {
                *c -= r;
            }
        }
        self.memo.insert((k, v), total);
        total
    }
}

/// Multiplicity of μ in Δ(λ) by the alternating Weyl sum over the Kostant
/// partition function.
pub fn kostant_multiplicity(ctx: &Context, k: &mut Kostant, top: &Weight, mu: &Weight) -> i64 {
    let rs = ctx.root_system();
    let rho = rs.rho();
    let shifted_top = top + rho;
    let shifted_mu = mu + rho;
    ctx.weyl_group()
        .elements()
        .iter()
        .map(|w| {
            let diff = &w.act(&shifted_top) - &shifted_mu;
            match rs.root_coordinates(&diff) {
                Some(c) => w.sign() * k.count(&c),
                None => 0,
            }
        })
        .sum()
}

/// `Π_{α>0} ⟨λ+ρ, α∨⟩ / ⟨ρ, α∨⟩`.
pub fn weyl_dimension(rs: &RootSystem, top: &Weight) -> i64 {
    let shifted = top + rs.rho();
    let num = rs.positive_pairings(&shifted);
    let den = rs.positive_pairings(rs.rho());
    let r = num
        .iter()
        .zip(&den)
        .fold(Ratio::from_integer(1i64), |acc, (&a, &b)| acc * Ratio::new(a, b));
    assert!(r.is_integer());
    r.to_integer()
}

pub fn random_dominant<R: Rng>(rng: &mut R, rank: usize, max: i64) -> Weight {
    Weight::new((0..rank).map(|_| rng.gen_range(0..=max)))
}

pub fn random_weight<R: Rng>(rng: &mut R, rank: usize, lo: i64, hi: i64) -> Weight {
    Weight::new((0..rank).map(|_| rng.gen_range(lo..=hi)))
}

/// Product of 1 to 3 Weyl characters with small highest weights.
pub fn random_weyl_product<R: Rng>(rng: &mut R, ctx: &Context, max: i64) -> Character {
    let factors = rng.gen_range(1..=3);
    let mut acc = Character::monomial(Weight::zero(ctx.rank()));
    for _ in 0..factors {
        let top = random_dominant(rng, ctx.rank(), max);
        let ch = ctx.weyl_character(&top).unwrap();
        acc = ctx.tensor(&acc, &ch);
    }
    acc
}
