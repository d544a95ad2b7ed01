//! Root data for irreducible reduced root systems of rank at most 6, plus
//! the elementary weight arithmetic built on it.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{config, domain, Error, Result};
use crate::weight::{euclid_split, Weight};

/// Largest rank we enumerate; E6 has the biggest Weyl group (51840) below it.
pub const MAX_RANK: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E => "E",
            Series::F => "F",
            Series::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            "E" => Ok(Series::E),
            "F" => Ok(Series::F),
            "G" => Ok(Series::G),
            other => config(format!("unknown root system series {other:?}")),
        }
    }
}

/// Serialized identity of a root system: `{"series":"A","rank":2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemId {
    pub series: Series,
    pub rank: usize,
}

/// Which character lattice X the group has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeMode {
    /// X is the full weight lattice.
    #[default]
    SimplyConnected,
    /// X is the root lattice ℤR.
    Adjoint,
}

impl FromStr for LatticeMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "sc" | "simply_connected" => Ok(LatticeMode::SimplyConnected),
            "adj" | "adjoint" => Ok(LatticeMode::Adjoint),
            other => config(format!("unknown lattice mode {other:?} (expected sc or adj)")),
        }
    }
}

/// Selects a coroot for [`RootSystem::pairing`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coroot {
    /// The `i`-th simple coroot (0-based).
    Simple(usize),
    /// The coroot of the `k`-th positive root in [`RootSystem::positive_roots`].
    Positive(usize),
}

/// Immutable root datum.
#[derive(Debug, Clone)]
pub struct RootSystem {
    series: Series,
    rank: usize,
    /// `cartan[i][j] = ⟨α_j, α_i∨⟩`; column `j` is α_j in fundamental coordinates.
    cartan: Vec<Vec<i64>>,
    /// Inner products of simple roots, scaled so the short roots have square length 2.
    gram: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, sorted by height then lexicographically.
    positive_roots: Vec<Vec<i64>>,
    /// The same roots in fundamental-weight coordinates.
    positive_weights: Vec<Weight>,
    /// `⟨λ, α∨⟩ = Σ_j coroots[k][j] λ_j` for the k-th positive root.
    coroots: Vec<Vec<i64>>,
    /// `(α, α) / 2` for each positive root.
    half_norms: Vec<i64>,
    cartan_inverse: Vec<Vec<Ratio<i64>>>,
    rho: Weight,
}

fn gram_matrix(series: Series, rank: usize) -> Result<Vec<Vec<i64>>> {
    if rank == 0 {
        return config("rank must be positive");
    }
    if rank > MAX_RANK {
        return config(format!("rank {rank} exceeds the supported maximum of {MAX_RANK}"));
    }
    let n = rank;
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match series {
        Series::A => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 1..n {
                link(&mut g, i - 1, i, -1);
            }
        }
        Series::B | Series::C if n >= 2 => {
            // B: α_1..α_{n-1} long, α_n short. C: the reverse.
            let (chain, last) = if series == Series::B { (4, 2) } else { (2, 4) };
            for i in 0..n - 1 {
                g[i][i] = chain;
            }
            g[n - 1][n - 1] = last;
            for i in 1..n - 1 {
                link(&mut g, i - 1, i, -chain / 2);
            }
            link(&mut g, n - 2, n - 1, -2);
        }
        Series::D if n >= 4 => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 1..n - 1 {
                link(&mut g, i - 1, i, -1);
            }
            link(&mut g, n - 3, n - 1, -1);
        }
        Series::E if n == 6 => {
            // Bourbaki: 1-3-4-5-6 with 2 attached to 4.
            for i in 0..n {
                g[i][i] = 2;
            }
            for &(i, j) in &[(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)] {
                link(&mut g, i, j, -1);
            }
        }
        Series::F if n == 4 => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 0, 1, -2);
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -1);
        }
        Series::G if n == 2 => {
            g[0][0] = 2;
            g[1][1] = 6;
            link(&mut g, 0, 1, -3);
        }
        _ => return config(format!("{series}{rank} is not a valid irreducible root system")),
    }
    Ok(g)
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i64>> = row.iter().map(|&x| Ratio::from_integer(x)).collect();
            r.extend((0..n).map(|j| Ratio::from_integer(i64::from(i == j))));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| *a[r][col].numer() != 0)
            .expect("Cartan matrices are nonsingular");
        a.swap(col, pivot);
        let inv = Ratio::from_integer(1) / a[col][col];
        for x in a[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && *a[r][col].numer() != 0 {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

impl RootSystem {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let gram = gram_matrix(series, rank)?;
        let n = rank;
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();

        // Close the simple roots under simple reflections; all roots are W-conjugate
        // to a simple root, so this yields R.
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut frontier: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        seen.extend(frontier.iter().cloned());
        while let Some(beta) = frontier.pop() {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                let mut image = beta.clone();
                image[i] -= pairing;
                if seen.insert(image.clone()) {
                    frontier.push(image);
                }
            }
        }
        let mut positive_roots: Vec<Vec<i64>> =
            seen.into_iter().filter(|r| r.iter().all(|&c| c >= 0)).collect();
        positive_roots.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });

        let positive_weights = positive_roots
            .iter()
            .map(|c| Weight::new((0..n).map(|i| (0..n).map(|j| cartan[i][j] * c[j]).sum())))
            .collect();
        let mut coroots = Vec::with_capacity(positive_roots.len());
        let mut half_norms = Vec::with_capacity(positive_roots.len());
        for c in &positive_roots {
            let norm: i64 = (0..n)
                .map(|i| (0..n).map(|j| c[i] * gram[i][j] * c[j]).sum::<i64>())
                .sum();
            coroots.push((0..n).map(|j| c[j] * gram[j][j] / norm).collect());
            half_norms.push(norm / 2);
        }
        let cartan_inverse = invert(&cartan);
        Ok(RootSystem {
            series,
            rank,
            cartan,
            gram,
            positive_roots,
            positive_weights,
            coroots,
            half_norms,
            cartan_inverse,
            rho: Weight::splat(n, 1),
        })
    }

    pub fn id(&self) -> RootSystemId {
        RootSystemId { series: self.series, rank: self.rank }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive roots in fundamental-weight coordinates.
    pub fn positive_root_weights(&self) -> &[Weight] {
        &self.positive_weights
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Index of the highest root in [`Self::positive_roots`].
    pub fn highest_root(&self) -> usize {
        self.positive_roots.len() - 1
    }

    /// `α_i` as a weight.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new((0..self.rank).map(|k| self.cartan[k][i]))
    }

    /// `(α, α)/2` for the k-th positive root.
    pub(crate) fn half_norm(&self, k: usize) -> i64 {
        self.half_norms[k]
    }

    /// `(α_j, α_j)/2` for the j-th simple root.
    pub(crate) fn simple_half_norm(&self, j: usize) -> i64 {
        self.gram[j][j] / 2
    }

    pub(crate) fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() == self.rank {
            Ok(())
        } else {
            domain(format!("weight {w} has {} coordinates, expected {}", w.rank(), self.rank))
        }
    }

    /// ⟨λ, α∨⟩ for the selected coroot.
    pub fn pairing(&self, weight: &Weight, coroot: Coroot) -> Result<i64> {
        self.check_rank(weight)?;
        match coroot {
            Coroot::Simple(i) if i < self.rank => Ok(weight.0[i]),
            Coroot::Simple(i) => Err(Error::Index { index: i, limit: self.rank }),
            Coroot::Positive(k) if k < self.coroots.len() => Ok(self.coroot_pairing(weight, k)),
            Coroot::Positive(k) => Err(Error::Index { index: k, limit: self.coroots.len() }),
        }
    }

    #[inline]
    pub(crate) fn coroot_pairing(&self, weight: &Weight, k: usize) -> i64 {
        self.coroots[k].iter().zip(weight.coords()).map(|(a, b)| a * b).sum()
    }

    /// ⟨λ, α∨⟩ over all positive roots, in [`Self::positive_roots`] order.
    pub fn positive_pairings(&self, weight: &Weight) -> Vec<i64> {
        (0..self.coroots.len()).map(|k| self.coroot_pairing(weight, k)).collect()
    }

    /// ⟨λ, 2ρ∨⟩; strictly increasing along the dominance order.
    pub fn height(&self, weight: &Weight) -> i64 {
        (0..self.coroots.len()).map(|k| self.coroot_pairing(weight, k)).sum()
    }

    /// Coordinates of λ in the simple roots, if λ ∈ ℤR.
    pub fn root_coordinates(&self, weight: &Weight) -> Option<Vec<i64>> {
        let mut out = Vec::with_capacity(self.rank);
        for row in &self.cartan_inverse {
            let c: Ratio<i64> = row
                .iter()
                .zip(weight.coords())
                .map(|(r, &x)| *r * x)
                .fold(Ratio::from_integer(0), |a, b| a + b);
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(out)
    }

    pub fn in_root_lattice(&self, weight: &Weight) -> bool {
        self.root_coordinates(weight).is_some()
    }

    /// Membership in the character lattice of the chosen mode.
    pub fn in_lattice(&self, weight: &Weight, mode: LatticeMode) -> bool {
        match mode {
            LatticeMode::SimplyConnected => true,
            LatticeMode::Adjoint => self.in_root_lattice(weight),
        }
    }

    /// Rejects adjoint configurations whose Steinberg weight leaves ℤR.
    pub fn check_prime(&self, p: i64, mode: LatticeMode) -> Result<()> {
        if p < 2 {
            return config(format!("p must be at least 2, got {p}"));
        }
        let st = self.rho.scale(p - 1);
        if !self.in_lattice(&st, mode) {
            return config(format!(
                "(p-1)rho = {st} is not in the root lattice; adjoint mode needs p odd here"
            ));
        }
        Ok(())
    }

    /// `λ = λ⁰ + pμ` with λ⁰ restricted and μ dominant.
    pub fn steinberg_split(&self, weight: &Weight, p: i64) -> Result<(Weight, Weight)> {
        self.check_rank(weight)?;
        if p < 2 {
            return config(format!("p must be at least 2, got {p}"));
        }
        if !weight.is_dominant() {
            return domain(format!("steinberg_split needs a dominant weight, got {weight}"));
        }
        Ok(euclid_split(weight, p))
    }

    /// Simple reflection `s_i` on fundamental coordinates.
    #[inline]
    pub(crate) fn reflect_in_place(&self, w: &mut Weight, i: usize) {
        let c = w.0[i];
        if c != 0 {
            for k in 0..self.rank {
                w.0[k] -= c * self.cartan[k][i];
            }
        }
    }

    /// Dominant element of the W-orbit together with a reduced word `i_1 … i_m`
    /// such that `s_{i_m} ⋯ s_{i_1} λ` is dominant.
    pub(crate) fn dominate(&self, weight: &Weight) -> (Weight, Vec<usize>) {
        let mut w = weight.clone();
        let mut word = Vec::new();
        while let Some(i) = w.0.iter().position(|&c| c < 0) {
            self.reflect_in_place(&mut w, i);
            word.push(i);
        }
        (w, word)
    }

    pub(crate) fn dominant_rep(&self, weight: &Weight) -> Weight {
        let mut w = weight.clone();
        while let Some(i) = w.0.iter().position(|&c| c < 0) {
            self.reflect_in_place(&mut w, i);
        }
        w
    }

    /// The full W-orbit of a weight.
    pub fn orbit(&self, weight: &Weight) -> Vec<Weight> {
        let mut seen = HashSet::new();
        seen.insert(weight.clone());
        let mut stack = vec![weight.clone()];
        let mut out = vec![weight.clone()];
        while let Some(v) = stack.pop() {
            for i in 0..self.rank {
                if v.0[i] == 0 {
                    continue;
                }
                let mut u = v.clone();
                self.reflect_in_place(&mut u, i);
                if seen.insert(u.clone()) {
                    out.push(u.clone());
                    stack.push(u);
                }
            }
        }
        out
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}
