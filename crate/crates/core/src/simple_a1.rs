//! Simple characters in type A1 from the Steinberg tensor product theorem.
//!
//! In rank one every restricted simple module is a Weyl module, so
//! `ch L(λ) = Π_j ch Δ(λ_j)^{(j)}` over the base-p digits of λ.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::characters::{frobenius_twist, Character};
use crate::context::Context;
use crate::error::{domain, Result};
use crate::root_data::Series;
use crate::terms::Terms;
use crate::weight::{euclid_split, Weight};

/// Base-p digits `λ = Σ_j λ_j p^j`, each digit restricted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitDecomposition {
    pub p: i64,
    pub digits: Vec<Weight>,
}

impl DigitDecomposition {
    pub fn new(weight: &Weight, p: i64) -> Result<Self> {
        if p < 2 {
            return domain(format!("p must be at least 2, got {p}"));
        }
        if !weight.is_dominant() {
            return domain(format!("digit expansion needs a dominant weight, got {weight}"));
        }
        let mut digits = Vec::new();
        let mut rest = weight.clone();
        while !rest.is_zero() {
            let (low, high) = euclid_split(&rest, p);
            digits.push(low);
            rest = high;
        }
        if digits.is_empty() {
            digits.push(Weight::zero(weight.rank()));
        }
        Ok(DigitDecomposition { p, digits })
    }

    pub fn reassemble(&self) -> Weight {
        let rank = self.digits[0].rank();
        let mut acc = Weight::zero(rank);
        let mut scale = 1;
        for d in &self.digits {
            acc = acc.add_scaled(d, scale);
            scale *= self.p;
        }
        acc
    }
}

/// Coefficients in the simple basis `([L(λ)])_λ`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SimpleDecomposition(pub Terms);

impl SimpleDecomposition {
    pub fn coeff(&self, w: &Weight) -> i64 {
        self.0.get(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.0.iter().map(|(w, &c)| (w, c))
    }
}

impl fmt::Display for SimpleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, c) in self.iter() {
            writeln!(f, "{c} · [L{w}]")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    w: Weight,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct SimpleJson {
    basis: String,
    terms: Vec<Entry>,
}

impl Serialize for SimpleDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SimpleJson {
            basis: "simple".to_owned(),
            terms: self.iter().map(|(w, c)| Entry { w: w.clone(), coeff: c }).collect(),
        }
        .serialize(s)
    }
}

/// Rank-one Weyl character; digits need not lie in the active lattice.
fn a1_weyl_character(top: &Weight) -> Character {
    let m = top.coords()[0];
    (0..=m).map(|k| (Weight::from([m - 2 * k]), 1)).collect()
}

impl Context {
    fn require_a1(&self) -> Result<()> {
        if self.rs.series() == Series::A && self.rs.rank() == 1 {
            Ok(())
        } else {
            domain(format!("simple characters are only available in type A1, not {}", self.rs))
        }
    }

    /// `ch L(λ)` in type A1.
    pub fn simple_character_a1(&self, weight: &Weight, p: i64) -> Result<Character> {
        self.require_a1()?;
        self.check_dominant(weight)?;
        let digits = DigitDecomposition::new(weight, p)?;
        let mut acc = Character::monomial(Weight::zero(1));
        for (j, d) in digits.digits.iter().enumerate() {
            let factor = frobenius_twist(&a1_weyl_character(d), j as u32, p);
            acc = self.tensor(&acc, &factor);
        }
        Ok(acc)
    }

    /// Composition multiplicities `[M : L(λ)]`, peeling off the largest remaining weight.
    pub fn decompose_in_simple_basis_a1(&self, ch: &Character, p: i64) -> Result<SimpleDecomposition> {
        self.require_a1()?;
        self.check_module_character(ch)?;
        let mut rest = ch.0.clone();
        let mut out = Terms::new();
        while let Some(top) = rest.keys().next_back().cloned() {
            let c = rest.get(&top);
            let simple = self.simple_character_a1(&top, p)?;
            rest.add_scaled(&simple.0, -c);
            out.add(top, c);
        }
        Ok(SimpleDecomposition(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::LatticeMode;

    fn a1() -> Context {
        Context::new(Series::A, 1, LatticeMode::SimplyConnected).unwrap()
    }

    fn w(c: i64) -> Weight {
        Weight::from([c])
    }

    #[test]
    fn digits() {
        let d = DigitDecomposition::new(&w(7), 3).unwrap();
        assert_eq!(d.digits, vec![w(1), w(2)]);
        assert_eq!(d.reassemble(), w(7));
        assert_eq!(DigitDecomposition::new(&w(0), 3).unwrap().digits, vec![w(0)]);
    }

    #[test]
    fn simple_characters() {
        let c = a1();
        let l2 = c.simple_character_a1(&w(2), 3).unwrap();
        assert_eq!(l2, c.weyl_character(&w(2)).unwrap());
        assert_eq!(l2.dim(), 3);
        let l3 = c.simple_character_a1(&w(3), 3).unwrap();
        assert_eq!(l3, [(w(3), 1), (w(-3), 1)].into_iter().collect());
        let l7 = c.simple_character_a1(&w(7), 3).unwrap();
        assert_eq!(l7.dim(), 6);
        let support: Vec<i64> = l7.weights().map(|x| x.coords()[0]).collect();
        assert_eq!(support, vec![-7, -5, -1, 1, 5, 7]);
    }

    #[test]
    fn decomposition_numbers() {
        let c = a1();
        let d3 = c.weyl_character(&w(3)).unwrap();
        let dec = c.decompose_in_simple_basis_a1(&d3, 3).unwrap();
        assert_eq!(dec.0, [(w(3), 1), (w(1), 1)].into_iter().collect());
        let d2 = c.weyl_character(&w(2)).unwrap();
        assert_eq!(c.decompose_in_simple_basis_a1(&d2, 3).unwrap().0, [(w(2), 1)].into_iter().collect());
        let l7 = c.simple_character_a1(&w(7), 3).unwrap();
        assert_eq!(c.decompose_in_simple_basis_a1(&l7, 3).unwrap().0, [(w(7), 1)].into_iter().collect());
    }

    #[test]
    fn wrong_type() {
        let a2 = Context::new(Series::A, 2, LatticeMode::SimplyConnected).unwrap();
        assert!(a2.simple_character_a1(&Weight::from([1, 0]), 3).is_err());
    }
}
