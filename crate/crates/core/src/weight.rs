use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Coordinate storage; ranks are capped at 6 so weights never spill to the heap.
pub type Coords = SmallVec<[i64; 6]>;

/// An integral weight written in the fundamental-weight basis.
///
/// Coordinate `i` is the pairing with the `i`-th simple coroot. Ordering is
/// lexicographic in the coordinates, which is the canonical output order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Coords);

impl Weight {
    pub fn new(coords: impl IntoIterator<Item = i64>) -> Self {
        Weight(coords.into_iter().collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(smallvec::smallvec![0; rank])
    }

    /// The vector with every coordinate equal to `value` (so `splat(r, 1)` is ρ).
    pub fn splat(rank: usize, value: i64) -> Self {
        Weight(smallvec::smallvec![value; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn scale(&self, n: i64) -> Self {
        Weight(self.0.iter().map(|&c| c * n).collect())
    }

    /// Exact division by `n`, or `None` if some coordinate is not divisible.
    pub fn div_exact(&self, n: i64) -> Option<Self> {
        if self.0.iter().all(|&c| c.rem_euclid(n) == 0) {
            Some(Weight(self.0.iter().map(|&c| c / n).collect()))
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_restricted(&self, p: i64) -> bool {
        self.0.iter().all(|&c| (0..p).contains(&c))
    }

    /// `n(λ + ρ) − ρ`.
    pub fn dot_multiply(&self, n: i64) -> Self {
        Weight(self.0.iter().map(|&c| n * c + (n - 1)).collect())
    }

    pub fn add_scaled(&self, other: &Weight, k: i64) -> Self {
        Weight(self.0.iter().zip(&other.0).map(|(&a, &b)| a + k * b).collect())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v.into_iter().collect())
    }
}

impl<const N: usize> From<[i64; N]> for Weight {
    fn from(v: [i64; N]) -> Self {
        Weight(v.into_iter().collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// Split a dominant weight as `λ = λ⁰ + pμ` by coordinatewise Euclidean division.
pub(crate) fn euclid_split(w: &Weight, p: i64) -> (Weight, Weight) {
    let low = w.0.iter().map(|c| c.rem_euclid(p)).collect();
    let high = w.0.iter().map(|c| c.div_euclid(p)).collect();
    (Weight(low), Weight(high))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_multiply_coordinates() {
        assert_eq!(Weight::from([1, 2]).dot_multiply(5), Weight::from([9, 14]));
        assert_eq!(Weight::from([0]).dot_multiply(3), Weight::from([2]));
        let l = Weight::from([4, -7, 3]);
        assert_eq!(l.dot_multiply(1), l);
        assert_eq!(Weight::splat(3, -1).dot_multiply(7), Weight::splat(3, -1));
    }

    #[test]
    fn div_exact_handles_negatives() {
        assert_eq!(Weight::from([-6, 3]).div_exact(3), Some(Weight::from([-2, 1])));
        assert_eq!(Weight::from([-5, 3]).div_exact(3), None);
    }

    #[test]
    fn display_and_json() {
        let w = Weight::from([3, -1]);
        assert_eq!(w.to_string(), "[3,-1]");
        assert_eq!(serde_json::to_string(&w).unwrap(), "[3,-1]");
        let back: Weight = serde_json::from_str("[3,-1]").unwrap();
        assert_eq!(back, w);
    }
}
