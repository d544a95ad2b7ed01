//! Fully enumerated finite Weyl groups.

use std::collections::HashMap;

use crate::error::{config, Result};
use crate::root_data::{RootSystem, MAX_RANK};
use crate::weight::Weight;

/// One element of W, stored with a reduced word and its action matrix on
/// fundamental coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    /// `[i_1, …, i_m]` means `s_{i_1} s_{i_2} ⋯ s_{i_m}` (0-based indices).
    pub word: Vec<usize>,
    /// Row-major `rank × rank` matrix.
    pub matrix: Vec<i64>,
    pub length: usize,
}

impl WeylElement {
    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Linear action `w(λ)`.
    pub fn act(&self, weight: &Weight) -> Weight {
        let n = weight.rank();
        Weight::new(
            (0..n).map(|k| (0..n).map(|j| self.matrix[k * n + j] * weight.0[j]).sum::<i64>()),
        )
    }

    /// Dot action `w · λ = w(λ + ρ) − ρ`.
    pub fn dot_act(&self, weight: &Weight) -> Weight {
        let n = weight.rank();
        Weight::new((0..n).map(|k| {
            (0..n).map(|j| self.matrix[k * n + j] * (weight.0[j] + 1)).sum::<i64>() - 1
        }))
    }
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    rank: usize,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
    longest: usize,
    simple: Vec<Vec<i64>>,
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    out[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    out
}

impl WeylGroup {
    /// Breadth-first closure of the identity under left multiplication by
    /// simple reflections. BFS depth is the length, so stored words are reduced.
    pub fn generate(rs: &RootSystem) -> Result<Self> {
        let n = rs.rank();
        if n > MAX_RANK {
            return config(format!("rank {n} exceeds the supported maximum of {MAX_RANK}"));
        }
        let cartan = rs.cartan();
        let simple: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut m = vec![0; n * n];
                for k in 0..n {
                    for j in 0..n {
                        m[k * n + j] = i64::from(k == j) - if j == i { cartan[k][i] } else { 0 };
                    }
                }
                m
            })
            .collect();
        let identity: Vec<i64> = (0..n * n).map(|x| i64::from(x / n == x % n)).collect();
        let mut elements = vec![WeylElement { word: vec![], matrix: identity.clone(), length: 0 }];
        let mut index = HashMap::new();
        index.insert(identity, 0);
        let mut head = 0;
        while head < elements.len() {
            for (i, s) in simple.iter().enumerate() {
                let m = mat_mul(s, &elements[head].matrix, n);
                if index.contains_key(&m) {
                    continue;
                }
                let mut word = Vec::with_capacity(elements[head].length + 1);
                word.push(i);
                word.extend_from_slice(&elements[head].word);
                let length = word.len();
                index.insert(m.clone(), elements.len());
                elements.push(WeylElement { word, matrix: m, length });
            }
            head += 1;
        }
        let longest = elements.len() - 1;
        Ok(WeylGroup { rank: n, elements, index, longest, simple })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn longest(&self) -> &WeylElement {
        &self.elements[self.longest]
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    /// Looks up an element by its action matrix.
    pub fn find(&self, matrix: &[i64]) -> Option<&WeylElement> {
        self.index.get(matrix).map(|&i| &self.elements[i])
    }

    /// The element `s_{i_1} ⋯ s_{i_m}` for an arbitrary (not necessarily reduced) word.
    pub fn from_word(&self, word: &[usize]) -> Option<&WeylElement> {
        let n = self.rank;
        let mut m: Vec<i64> = (0..n * n).map(|x| i64::from(x / n == x % n)).collect();
        for &i in word {
            m = mat_mul(&m, self.simple.get(i)?, n);
        }
        self.find(&m)
    }

    pub fn compose(&self, u: &WeylElement, v: &WeylElement) -> &WeylElement {
        self.find(&mat_mul(&u.matrix, &v.matrix, self.rank))
            .expect("W is closed under multiplication")
    }

    /// Some `w` with `w(λ)` dominant, and that dominant weight.
    pub fn dominant_representative(&self, rs: &RootSystem, weight: &Weight) -> (&WeylElement, Weight) {
        let (dominant, mut word) = rs.dominate(weight);
        word.reverse();
        let w = self.from_word(&word).expect("simple reflections lie in W");
        (w, dominant)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::Series;

    #[test]
    fn small_orders() {
        let a1 = RootSystem::new(Series::A, 1).unwrap();
        assert_eq!(WeylGroup::generate(&a1).unwrap().order(), 2);
        let a2 = RootSystem::new(Series::A, 2).unwrap();
        assert_eq!(WeylGroup::generate(&a2).unwrap().order(), 6);
        let g2 = RootSystem::new(Series::G, 2).unwrap();
        let w = WeylGroup::generate(&g2).unwrap();
        assert_eq!(w.order(), 12);
        assert_eq!(w.longest().length, 6);
        assert_eq!(w.elements().iter().filter(|e| e.length == 6).count(), 1);
    }

    #[test]
    fn a1_actions() {
        let a1 = RootSystem::new(Series::A, 1).unwrap();
        let w = WeylGroup::generate(&a1).unwrap();
        let s = w.longest();
        assert_eq!(s.act(&Weight::from([5])), Weight::from([-5]));
        assert_eq!(s.dot_act(&Weight::from([-1])), Weight::from([-1]));
        assert_eq!(s.dot_act(&Weight::from([-2])), Weight::from([0]));
        let (el, dom) = w.dominant_representative(&a1, &Weight::from([-3]));
        assert_eq!(dom, Weight::from([3]));
        assert_eq!(el.word, vec![0]);
        let (el, dom) = w.dominant_representative(&a1, &Weight::from([4]));
        assert_eq!(dom, Weight::from([4]));
        assert_eq!(el.length, 0);
    }

    #[test]
    fn word_matches_matrix() {
        let b3 = RootSystem::new(Series::B, 3).unwrap();
        let w = WeylGroup::generate(&b3).unwrap();
        for e in w.elements() {
            assert_eq!(w.from_word(&e.word).unwrap().matrix, e.matrix);
        }
    }
}
