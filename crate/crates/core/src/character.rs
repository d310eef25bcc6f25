//! The group algebra `Z[Λ]` and Demazure characters.
//!
//! The Demazure operator `D_i = (1 − e^{−α_i} s_i) / (1 − e^{−α_i})` acts on a
//! monomial `e^μ` with `m = ⟨μ, α_i^∨⟩` by
//!
//! - `m ≥ 0`: `e^μ (1 + e^{−α_i} + ⋯ + e^{−m α_i})`,
//! - `m = −1`: `0`,
//! - `m ≤ −2`: `−e^μ (e^{α_i} + ⋯ + e^{|1+m| α_i})`,
//!
//! and the character of the Demazure module `V_w(λ)` is
//! `D_{i_1} ⋯ D_{i_c} e^λ` for a reduced word `w = s_{i_1} ⋯ s_{i_c}`, with the
//! rightmost operator applied first.

use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::root_system::{RootSystem, Weight};
use crate::weyl::{self, WeylElement};
use crate::{Error, Result};

/// A finitely supported integer function on the weight lattice.
#[derive(Debug, Clone, Default)]
pub struct Character {
    terms: FxHashMap<Weight, BigInt>,
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Character {}

impl Hash for Character {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for (w, c) in self.sorted_terms() {
            w.hash(state);
            c.hash(state);
        }
    }
}

impl Character {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `e^μ`.
    pub fn monomial(mu: Weight) -> Self {
        let mut c = Self::zero();
        c.add_term(mu, BigInt::one());
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (Weight, BigInt)>>(terms: I) -> Self {
        let mut c = Self::zero();
        for (w, k) in terms {
            c.add_term(w, k);
        }
        c
    }

    pub fn add_term(&mut self, mu: Weight, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    /// `self += factor · other`.
    pub fn add_scaled(&mut self, other: &Character, factor: &BigInt) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * factor);
        }
    }

    pub fn coeff(&self, mu: &Weight) -> BigInt {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in lexicographic order of weight coordinates.
    pub fn sorted_terms(&self) -> Vec<(&Weight, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    /// Sum of all coefficients.
    pub fn dimension(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn all_positive(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }

    /// Coefficientwise `self ≥ other`.
    pub fn dominates(&self, other: &Character) -> bool {
        other.terms.iter().all(|(w, c)| &self.coeff(w) >= c)
            && self
                .terms
                .iter()
                .all(|(w, c)| other.terms.contains_key(w) || c.is_positive())
    }

    pub fn to_json(&self, rs: &RootSystem) -> CharacterJson {
        CharacterJson {
            root_system: rs.name(),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(w, c)| TermJson {
                    weight: w.coords().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    /// Parses the JSON form back; the root system name must match.
    pub fn from_json(rs: &RootSystem, json: &CharacterJson) -> Result<Self> {
        if json.root_system != rs.name() {
            return Err(Error::Internal(format!(
                "character for {} read as {}",
                json.root_system,
                rs.name()
            )));
        }
        let mut c = Self::zero();
        for t in &json.terms {
            let w = Weight::new(t.weight.clone());
            rs.check_weight(&w)?;
            let k: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Internal(format!("bad coefficient {:?}", t.coeff)))?;
            if k.is_zero() {
                return Err(Error::Internal("stored zero coefficient".into()));
            }
            c.add_term(w, k);
        }
        Ok(c)
    }
}

/// Serialized character: terms sorted by weight, coefficients as decimal
/// strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterJson {
    pub root_system: String,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub weight: Vec<i64>,
    pub coeff: String,
}

/// Applies `D_i` to a character.
pub fn demazure_operator(rs: &RootSystem, i: usize, c: &Character) -> Result<Character> {
    rs.check_index(i)?;
    Ok(apply_operator(rs, i, c))
}

fn apply_operator(rs: &RootSystem, i: usize, c: &Character) -> Character {
    let alpha = rs.simple_root(i).expect("index checked");
    let alpha = alpha.coords();
    let mut out = Character::zero();
    out.terms.reserve(c.len() * 2);
    for (mu, coeff) in &c.terms {
        let m = mu.coords()[i];
        if m >= 0 {
            // μ, μ − α, …, μ − mα
            let mut nu = mu.clone();
            out.add_term(nu.clone(), coeff.clone());
            for _ in 0..m {
                for (x, a) in nu.coords_mut().iter_mut().zip(alpha) {
                    *x -= a;
                }
                out.add_term(nu.clone(), coeff.clone());
            }
        } else if m <= -2 {
            // −(μ + α, …, μ + |1+m| α)
            let neg = -coeff;
            let mut nu = mu.clone();
            for _ in 0..(-m - 1) {
                for (x, a) in nu.coords_mut().iter_mut().zip(alpha) {
                    *x += a;
                }
                out.add_term(nu.clone(), neg.clone());
            }
        }
    }
    out
}

/// Applies `D_{w_1} ⋯ D_{w_k}` to `c`, rightmost letter first. No reducedness
/// or dominance checks.
pub fn apply_operator_word(rs: &RootSystem, word: &[usize], c: &Character) -> Result<Character> {
    for &i in word {
        rs.check_index(i)?;
    }
    let mut cur = c.clone();
    for &i in word.iter().rev() {
        cur = apply_operator(rs, i, &cur);
    }
    Ok(cur)
}

/// Character of `V_w(λ)` for the element `w` spelled by the reduced word.
pub fn demazure_character(rs: &RootSystem, word: &[usize], lam: &Weight) -> Result<Character> {
    rs.check_dominant(lam)?;
    let w = WeylElement::from_word(rs, word)?;
    if w.length() != word.len() {
        return Err(Error::NotReduced {
            word: word.to_vec(),
            length: w.length(),
            letters: word.len(),
        });
    }
    apply_operator_word(rs, word, &Character::monomial(lam.clone()))
}

/// Like [`demazure_character`] but accepts any word, folding it first with
/// the Demazure product. Since `D_i² = D_i`, the result equals the operator
/// composite along the original word.
pub fn demazure_character_folded(
    rs: &RootSystem,
    word: &[usize],
    lam: &Weight,
) -> Result<Character> {
    for &i in word {
        rs.check_index(i)?;
    }
    let w = weyl::demazure_fold(rs, WeylElement::identity(rs), word);
    demazure_character(rs, w.reduced_word(rs).letters(), lam)
}

/// `dim V_w(λ)`.
pub fn demazure_dim(rs: &RootSystem, w: &WeylElement, lam: &Weight) -> Result<BigInt> {
    Ok(demazure_character(rs, w.reduced_word(rs).letters(), lam)?.dimension())
}

/// Full character of `V(λ) = V_{w₀}(λ)`.
pub fn weyl_character(rs: &RootSystem, lam: &Weight) -> Result<Character> {
    let w0 = weyl::longest_element(rs);
    demazure_character(rs, w0.reduced_word(rs).letters(), lam)
}

pub fn weight_multiplicity(rs: &RootSystem, lam: &Weight, mu: &Weight) -> Result<BigInt> {
    rs.check_weight(mu)?;
    Ok(weyl_character(rs, lam)?.coeff(mu))
}

/// Weyl's product `Π_{α>0} ⟨λ+ρ, α^∨⟩ / ⟨ρ, α^∨⟩` over the given positive
/// roots (indices into [`RootSystem::positive_roots`]).
pub(crate) fn product_dimension(
    rs: &RootSystem,
    lam: &Weight,
    roots: impl Iterator<Item = usize>,
) -> Result<BigInt> {
    let shifted = lam + &rs.rho();
    let rho = rs.rho();
    let mut acc = BigRational::one();
    for k in roots {
        let num = rs.coroot_pairing(&shifted, k);
        let den = rs.coroot_pairing(&rho, k);
        acc *= BigRational::new(BigInt::from(num), BigInt::from(den));
    }
    if !acc.is_integer() {
        return Err(Error::Internal(format!(
            "dimension product {acc} for {lam} in {} is not integral",
            rs.name()
        )));
    }
    Ok(acc.to_integer())
}

/// `dim V(λ)` by Weyl's dimension formula.
pub fn weyl_dim(rs: &RootSystem, lam: &Weight) -> Result<BigInt> {
    rs.check_dominant(lam)?;
    product_dimension(rs, lam, 0..rs.positive_roots().len())
}

/// `λ* = −w₀(λ)`.
pub fn dual_weight(rs: &RootSystem, lam: &Weight) -> Result<Weight> {
    rs.check_dominant(lam)?;
    Ok(-&weyl::longest_element(rs).apply(lam))
}

/// Memo table keyed by `(word, λ)` with get-or-compute semantics: concurrent
/// requests for the same key compute it once.
type Slot = Arc<OnceLock<Arc<Character>>>;

#[derive(Debug, Default)]
pub struct CharacterCache {
    slots: Mutex<HashMap<(Vec<usize>, Weight), Slot>>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn demazure_character(
        &self,
        rs: &RootSystem,
        word: &[usize],
        lam: &Weight,
    ) -> Result<Arc<Character>> {
        let slot = {
            let mut slots = self.slots.lock().expect("cache lock poisoned");
            slots
                .entry((word.to_vec(), lam.clone()))
                .or_default()
                .clone()
        };
        if let Some(c) = slot.get() {
            return Ok(c.clone());
        }
        // Validate outside get_or_init so errors are not cached.
        let computed = demazure_character(rs, word, lam)?;
        Ok(slot.get_or_init(|| Arc::new(computed)).clone())
    }

    pub fn weyl_character(&self, rs: &RootSystem, lam: &Weight) -> Result<Arc<Character>> {
        let w0 = weyl::longest_element(rs);
        self.demazure_character(rs, w0.reduced_word(rs).letters(), lam)
    }

    pub fn len(&self) -> usize {
        self.slots.lock().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
