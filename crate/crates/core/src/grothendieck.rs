//! Classes in the Grothendieck group written in the Weyl-module basis, and
//! the Steinberg-block calculus on them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::characters::{frobenius_twist, Character};
use crate::context::Context;
use crate::error::{domain, Result};
use crate::terms::Terms;
use crate::weight::Weight;

/// `Σ_λ c_λ [Δ(λ)]` with finitely many nonzero, possibly negative, `c_λ`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct KElement(pub Terms);

impl KElement {
    pub fn zero() -> Self {
        KElement(Terms::new())
    }

    /// `[Δ(λ)]`.
    pub fn delta(w: Weight) -> Self {
        KElement(std::iter::once((w, 1)).collect())
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.0.get(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.0.iter().map(|(w, &c)| (w, c))
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.0.keys()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn plus(&self, other: &KElement) -> KElement {
        let mut t = self.0.clone();
        t.add_scaled(&other.0, 1);
        KElement(t)
    }

    pub fn minus(&self, other: &KElement) -> KElement {
        let mut t = self.0.clone();
        t.add_scaled(&other.0, -1);
        KElement(t)
    }
}

impl FromIterator<(Weight, i64)> for KElement {
    fn from_iter<I: IntoIterator<Item = (Weight, i64)>>(iter: I) -> Self {
        KElement(iter.into_iter().collect())
    }
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, c) in self.iter() {
            writeln!(f, "{c} · [Δ{w}]")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermEntry {
    w: Weight,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct ClassJson {
    #[serde(default = "delta_basis")]
    basis: String,
    terms: Vec<TermEntry>,
}

fn delta_basis() -> String {
    "delta".to_owned()
}

impl Serialize for KElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ClassJson {
            basis: delta_basis(),
            terms: self.iter().map(|(w, c)| TermEntry { w: w.clone(), coeff: c }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for KElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ClassJson::deserialize(d)?;
        if raw.basis != "delta" {
            return Err(serde::de::Error::custom(format!(
                "unsupported basis {:?}, only \"delta\" is accepted",
                raw.basis
            )));
        }
        Ok(raw.terms.into_iter().map(|e| (e.w, e.coeff)).collect())
    }
}

impl Context {
    /// Every support weight must be dominant and in the active lattice.
    pub fn check_class(&self, class: &KElement) -> Result<()> {
        for w in class.weights() {
            self.check_dominant(w)?;
        }
        Ok(())
    }

    /// `Σ_w (−1)^{ℓ(w)} χ(f(w))` over all of W.
    fn alternating_sum(&self, ch: &Character, at: impl Fn(&Weight) -> Weight, top: &Weight) -> i64 {
        self.weyl
            .elements()
            .iter()
            .map(|w| w.sign() * ch.mult(&at(&w.dot_act(top))))
            .sum()
    }

    fn collect_coefficients(&self, candidates: Vec<Weight>, coeff: impl Fn(&Weight) -> i64 + Sync + Send) -> KElement {
        let mut candidates = candidates;
        candidates.sort();
        candidates.dedup();
        let values = self.exec.map(&candidates, |l| coeff(l));
        candidates.into_iter().zip(values).collect()
    }

    /// Dominant λ such that `w · λ` lands on a given weight for some w.
    fn dot_candidates<'a>(&self, weights: impl Iterator<Item = Weight> + 'a) -> Vec<Weight> {
        weights.filter_map(|v| self.dot_dominant(&v).map(|(d, _)| d)).collect()
    }

    /// `(M : Δ(λ)) = Σ_w (−1)^{ℓ(w)} dim M_{w·λ}`.
    pub fn char_to_class(&self, ch: &Character) -> Result<KElement> {
        self.check_module_character(ch)?;
        let candidates = self.dot_candidates(ch.weights().cloned());
        Ok(self.collect_coefficients(candidates, |l| self.alternating_sum(ch, |x| x.clone(), l)))
    }

    /// Same decomposition by repeatedly removing the Weyl character of a
    /// highest remaining weight.
    pub fn char_to_class_peeling(&self, ch: &Character) -> Result<KElement> {
        self.check_module_character(ch)?;
        let mut rest = ch.0.clone();
        let mut out = Terms::new();
        while let Some(top) = rest
            .keys()
            .filter(|w| w.is_dominant())
            .max_by(|a, b| self.rs.height(a).cmp(&self.rs.height(b)).then_with(|| a.cmp(b)))
            .cloned()
        {
            let c = rest.get(&top);
            let delta = self.weyl_character_arc(&top)?;
            rest.add_scaled(&delta.0, -c);
            out.add(top, c);
        }
        if !rest.is_empty() {
            return domain("peeling left non-dominant weights behind; character is not W-invariant");
        }
        Ok(KElement(out))
    }

    /// `Σ_λ c_λ ch Δ(λ)`.
    pub fn class_to_char(&self, class: &KElement) -> Result<Character> {
        self.check_class(class)?;
        let mut t = Terms::new();
        for (w, c) in class.iter() {
            t.add_scaled(&self.weyl_character_arc(w)?.0, c);
        }
        Ok(Character(t))
    }

    /// `[Δ(μ) ⊗ M]` with `(Δ(μ) ⊗ M : Δ(λ)) = Σ_w (−1)^{ℓ(w)} dim M_{w·λ − μ}`.
    pub fn tensor_delta_expansion(&self, mu: &Weight, ch: &Character) -> Result<KElement> {
        self.check_dominant(mu)?;
        self.check_module_character(ch)?;
        let candidates = self.dot_candidates(ch.weights().map(|v| v + mu));
        Ok(self.collect_coefficients(candidates, |l| self.alternating_sum(ch, |x| x - mu, l)))
    }

    /// `𝓕^r`: relabels `[Δ(λ)] ↦ [Δ(p^r · λ)]`.
    pub fn steinberg_forward(&self, class: &KElement, p: i64, r: u32) -> Result<KElement> {
        self.rs.check_prime(p, self.lattice)?;
        self.check_class(class)?;
        let n = p.pow(r);
        Ok(KElement(class.0.map_weights(|w| w.dot_multiply(n))))
    }

    /// Class of `Hom_{G₁}(St, M)^{(−1)}`: keeps the coefficient of each `Δ(p · λ)`
    /// as the coefficient of `Δ(λ)`.
    pub fn steinberg_inverse(&self, class: &KElement, p: i64) -> Result<KElement> {
        self.rs.check_prime(p, self.lattice)?;
        self.check_class(class)?;
        Ok(class
            .iter()
            .filter_map(|(w, c)| self.dot_divide(w, p).map(|l| (l, c)))
            .collect())
    }

    /// λ with `p · λ = ν` and λ in the active lattice, if any.
    pub fn dot_divide(&self, nu: &Weight, p: i64) -> Option<Weight> {
        let shifted = nu + self.rs.rho();
        let l = &shifted.div_exact(p)? - self.rs.rho();
        self.in_lattice(&l).then_some(l)
    }

    fn contracted_sum(&self, ch: &Character, l: &Weight, p: i64) -> i64 {
        self.alternating_sum(ch, |x| x.scale(p), l)
    }

    /// `(St ⊗ M : Δ(p · λ)) = Σ_w (−1)^{ℓ(w)} dim M_{p(w·λ)}`.
    pub fn steinberg_delta_multiplicity(&self, ch: &Character, l: &Weight, p: i64) -> Result<i64> {
        self.rs.check_prime(p, self.lattice)?;
        self.check_dominant(l)?;
        self.check_module_character(ch)?;
        Ok(self.contracted_sum(ch, l, p))
    }

    /// `[φM] = Σ_λ (St ⊗ M : Δ(p · λ)) [Δ(λ)]`.
    pub fn frobenius_contract_class(&self, ch: &Character, p: i64) -> Result<KElement> {
        self.rs.check_prime(p, self.lattice)?;
        self.check_module_character(ch)?;
        let candidates = self.dot_candidates(
            ch.weights().filter_map(|w| w.div_exact(p)).filter(|v| self.in_lattice(v)),
        );
        Ok(self.collect_coefficients(candidates, |l| self.contracted_sum(ch, l, p)))
    }

    /// Convenience: `ch St ⊗ χ^{(1)}` at character level.
    pub fn steinberg_functor_char(&self, ch: &Character, p: i64, r: u32) -> Result<Character> {
        let st = self.steinberg_char(p, r)?;
        Ok(self.tensor(&st, &frobenius_twist(ch, r, p)))
    }

    /// Keeps the terms `Δ(λ)` with λ in the affine dot-orbit of ν.
    pub fn pr_block(&self, class: &KElement, nu: &Weight, p: i64) -> Result<KElement> {
        self.check_class(class)?;
        self.check_weight(nu)?;
        Ok(KElement(class.0.filter(|w| self.linked_unchecked(w, nu, p))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{LatticeMode, Series};

    fn ctx(s: Series, n: usize) -> Context {
        Context::new(s, n, LatticeMode::SimplyConnected).unwrap()
    }

    fn class(terms: &[(&[i64], i64)]) -> KElement {
        terms.iter().map(|(w, c)| (Weight::from(w.to_vec()), *c)).collect()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::from(c.to_vec())
    }

    #[test]
    fn basis_elements_decompose_to_themselves() {
        let c = ctx(Series::B, 2);
        for top in [w(&[0, 0]), w(&[1, 2]), w(&[3, 0])] {
            let ch = c.weyl_character(&top).unwrap();
            assert_eq!(c.char_to_class(&ch).unwrap(), KElement::delta(top.clone()));
            assert_eq!(c.char_to_class_peeling(&ch).unwrap(), KElement::delta(top));
        }
    }

    #[test]
    fn clebsch_gordan() {
        let c = ctx(Series::A, 1);
        let d1 = c.weyl_character(&w(&[1])).unwrap();
        let prod = c.tensor(&d1, &d1);
        assert_eq!(c.char_to_class(&prod).unwrap(), class(&[(&[2], 1), (&[0], 1)]));
        let a2 = ctx(Series::A, 2);
        let prod = a2.tensor(
            &a2.weyl_character(&w(&[1, 0])).unwrap(),
            &a2.weyl_character(&w(&[0, 1])).unwrap(),
        );
        let expected = class(&[(&[1, 1], 1), (&[0, 0], 1)]);
        assert_eq!(a2.char_to_class(&prod).unwrap(), expected);
        assert_eq!(a2.char_to_class_peeling(&prod).unwrap(), expected);
    }

    #[test]
    fn class_to_char_examples() {
        let c = ctx(Series::A, 1);
        assert!(c.class_to_char(&KElement::zero()).unwrap().is_zero());
        let got = c.class_to_char(&class(&[(&[2], 1), (&[0], 1)])).unwrap();
        let expected: Character =
            [(w(&[2]), 1), (w(&[0]), 2), (w(&[-2]), 1)].into_iter().collect();
        assert_eq!(got, expected);
        assert!(c.class_to_char(&class(&[(&[-1], 1)])).is_err());
    }

    #[test]
    fn tensor_delta_examples() {
        let c = ctx(Series::A, 1);
        let x: Character = [(w(&[3]), 1), (w(&[-3]), 1)].into_iter().collect();
        assert_eq!(c.tensor_delta_expansion(&w(&[2]), &x).unwrap(), class(&[(&[5], 1)]));
        let y: Character = [(w(&[1]), 1), (w(&[-1]), 1)].into_iter().collect();
        assert_eq!(
            c.tensor_delta_expansion(&w(&[1]), &y).unwrap(),
            class(&[(&[2], 1), (&[0], 1)])
        );
        assert_eq!(c.tensor_delta_expansion(&w(&[0]), &y).unwrap(), c.char_to_class(&y).unwrap());
    }

    #[test]
    fn steinberg_forward_inverse_examples() {
        let c = ctx(Series::A, 1);
        assert_eq!(c.steinberg_forward(&class(&[(&[1], 1)]), 3, 1).unwrap(), class(&[(&[5], 1)]));
        assert_eq!(c.steinberg_forward(&class(&[(&[0], 1)]), 3, 1).unwrap(), class(&[(&[2], 1)]));
        assert_eq!(c.steinberg_forward(&class(&[(&[0], 1)]), 3, 2).unwrap(), class(&[(&[8], 1)]));
        assert_eq!(c.steinberg_inverse(&class(&[(&[5], 1)]), 3).unwrap(), class(&[(&[1], 1)]));
        assert!(c.steinberg_inverse(&class(&[(&[4], 1)]), 3).unwrap().is_empty());
    }

    #[test]
    fn adjoint_inverse_drops_weights_outside_root_lattice() {
        // (5,2) = 3·(1,0) but (1,0) is not in ℤR for A2.
        let adj = Context::new(Series::A, 2, LatticeMode::Adjoint).unwrap();
        assert!(adj.steinberg_inverse(&class(&[(&[5, 2], 1)]), 3).unwrap().is_empty());
        let sc = ctx(Series::A, 2);
        assert_eq!(sc.steinberg_inverse(&class(&[(&[5, 2], 1)]), 3).unwrap(), class(&[(&[1, 0], 1)]));
    }

    #[test]
    fn steinberg_multiplicity_examples() {
        let c = ctx(Series::A, 1);
        let d5 = c.weyl_character(&w(&[5])).unwrap();
        assert_eq!(c.steinberg_delta_multiplicity(&d5, &w(&[1]), 3).unwrap(), 1);
        assert_eq!(c.steinberg_delta_multiplicity(&d5, &w(&[0]), 3).unwrap(), 0);
        let triv = Character::monomial(w(&[0]));
        assert_eq!(c.steinberg_delta_multiplicity(&triv, &w(&[0]), 3).unwrap(), 1);
    }

    #[test]
    fn contraction_examples() {
        let c = ctx(Series::A, 1);
        let d5 = c.weyl_character(&w(&[5])).unwrap();
        assert_eq!(c.frobenius_contract_class(&d5, 3).unwrap(), class(&[(&[1], 1)]));
        let d0 = c.weyl_character(&w(&[0])).unwrap();
        assert_eq!(c.frobenius_contract_class(&d0, 3).unwrap(), class(&[(&[0], 1)]));
        let d4 = c.weyl_character(&w(&[4])).unwrap();
        let twisted = frobenius_twist(&d4, 1, 3);
        assert_eq!(c.frobenius_contract_class(&twisted, 3).unwrap(), class(&[(&[4], 1)]));
    }

    #[test]
    fn non_invariant_input_is_rejected() {
        let c = ctx(Series::A, 1);
        let bad = Character::monomial(w(&[1]));
        assert!(matches!(c.char_to_class(&bad), Err(crate::Error::Domain(_))));
        assert!(c.char_to_class_peeling(&bad).is_err());
        assert!(c.frobenius_contract_class(&bad, 3).is_err());
    }

    #[test]
    fn pr_block_example() {
        let adj = Context::new(Series::A, 1, LatticeMode::Adjoint).unwrap();
        let c = class(&[(&[8], 1), (&[4], 1)]);
        assert_eq!(adj.pr_block(&c, &w(&[2]), 3).unwrap(), class(&[(&[8], 1)]));
        assert!(adj.pr_block(&class(&[(&[4], 1)]), &w(&[2]), 3).unwrap().is_empty());
    }

    #[test]
    fn class_json() {
        let c = class(&[(&[5], 1), (&[1], -2)]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"basis":"delta","terms":[{"w":[1],"coeff":-2},{"w":[5],"coeff":1}]}"#);
        let parsed: KElement = serde_json::from_str(r#"{"terms":[{"w":[1],"coeff":1}]}"#).unwrap();
        assert_eq!(parsed, class(&[(&[1], 1)]));
        assert!(serde_json::from_str::<KElement>(r#"{"basis":"simple","terms":[]}"#).is_err());
    }
}
