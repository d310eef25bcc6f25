//! Weyl group elements, reduced words and the 0-Hecke monoid.
//!
//! An element is stored canonically as its integer action matrix on
//! fundamental-weight coordinates, so equality never depends on a choice of
//! word. The length is the number of positive roots sent to negative roots,
//! read off from the image of `ρ`: `ℓ(w) = #{α > 0 : ⟨wρ, α^∨⟩ < 0}`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::root_system::{RootSystem, Weight};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    rank: usize,
    /// Row-major `rank × rank` action on fundamental coordinates.
    action: Vec<i64>,
    length: usize,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylElement")
            .field("action", &self.rows())
            .field("length", &self.length)
            .finish()
    }
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let mut action = vec![0; n * n];
        for i in 0..n {
            action[i * n + i] = 1;
        }
        WeylElement {
            rank: n,
            action,
            length: 0,
        }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Result<Self> {
        rs.check_index(i)?;
        Ok(Self::identity(rs).mul_simple(rs, i))
    }

    /// Product `s_{w_1} s_{w_2} ⋯ s_{w_k}`; the word need not be reduced.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        for &i in word {
            rs.check_index(i)?;
        }
        let mut w = Self::identity(rs);
        for &i in word {
            w.right_multiply_simple(rs, i);
        }
        w.length = w.compute_length(rs);
        Ok(w)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.action.chunks(self.rank).map(<[i64]>::to_vec).collect()
    }

    /// Action on a weight in fundamental coordinates.
    pub fn apply(&self, mu: &Weight) -> Weight {
        let n = self.rank;
        let c = mu.coords();
        Weight::new(
            (0..n)
                .map(|r| (0..n).map(|k| self.action[r * n + k] * c[k]).sum())
                .collect(),
        )
    }

    /// `w s_i`.
    pub fn mul_simple(&self, rs: &RootSystem, i: usize) -> Self {
        let mut out = self.clone();
        out.right_multiply_simple(rs, i);
        out.length = out.compute_length(rs);
        out
    }

    /// `s_i w`.
    pub fn simple_mul(&self, rs: &RootSystem, i: usize) -> Self {
        let n = self.rank;
        let a = rs.cartan();
        // Row update: (S_i W)[r] = W[r] − a_{r i} W[i].
        let row_i: Vec<i64> = self.action[i * n..(i + 1) * n].to_vec();
        let mut action = self.action.clone();
        for r in 0..n {
            let coef = a[r][i];
            if coef != 0 {
                for k in 0..n {
                    action[r * n + k] -= coef * row_i[k];
                }
            }
        }
        let mut out = WeylElement {
            rank: n,
            action,
            length: 0,
        };
        out.length = out.compute_length(rs);
        out
    }

    /// Group product `self · other`.
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> Self {
        let n = self.rank;
        let mut action = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                action[r * n + c] = (0..n)
                    .map(|k| self.action[r * n + k] * other.action[k * n + c])
                    .sum();
            }
        }
        let mut out = WeylElement {
            rank: n,
            action,
            length: 0,
        };
        out.length = out.compute_length(rs);
        out
    }

    pub fn inverse(&self, rs: &RootSystem) -> Self {
        let mut word = self.reduced_word(rs).into_letters();
        word.reverse();
        Self::from_word(rs, &word).expect("letters of a reduced word are in range")
    }

    /// Image of `ρ`; determines the element since `ρ` is regular.
    pub fn rho_image(&self, rs: &RootSystem) -> Weight {
        self.apply(&rs.rho())
    }

    /// Simple indices `i` with `ℓ(s_i w) < ℓ(w)`, ascending.
    pub fn left_descents(&self, rs: &RootSystem) -> Vec<usize> {
        let v = self.rho_image(rs);
        (0..self.rank).filter(|&i| v.coords()[i] < 0).collect()
    }

    /// The lexicographically smallest reduced word, built by repeatedly
    /// stripping the smallest left descent.
    pub fn reduced_word(&self, rs: &RootSystem) -> ReducedWord {
        let mut v = self.rho_image(rs);
        let mut letters = Vec::with_capacity(self.length);
        while let Some(i) = v.coords().iter().position(|&c| c < 0) {
            letters.push(i);
            rs.reflect_in_place(i, &mut v);
        }
        debug_assert_eq!(letters.len(), self.length);
        ReducedWord { letters }
    }

    /// Every reduced word of the element, sorted lexicographically.
    ///
    /// Exponential in the length; intended for small ranks.
    pub fn all_reduced_words(&self, rs: &RootSystem) -> Vec<ReducedWord> {
        fn walk(rs: &RootSystem, v: &Weight, prefix: &mut Vec<usize>, out: &mut Vec<ReducedWord>) {
            let mut any = false;
            for i in 0..rs.rank() {
                if v.coords()[i] < 0 {
                    any = true;
                    let mut next = v.clone();
                    rs.reflect_in_place(i, &mut next);
                    prefix.push(i);
                    walk(rs, &next, prefix, out);
                    prefix.pop();
                }
            }
            if !any {
                out.push(ReducedWord {
                    letters: prefix.clone(),
                });
            }
        }
        let mut out = Vec::new();
        walk(rs, &self.rho_image(rs), &mut Vec::new(), &mut out);
        out
    }

    fn right_multiply_simple(&mut self, rs: &RootSystem, i: usize) {
        // W S_i: column i becomes col_i − W α_i.
        let n = self.rank;
        let a = rs.cartan();
        let w_alpha: Vec<i64> = (0..n)
            .map(|r| (0..n).map(|k| self.action[r * n + k] * a[k][i]).sum())
            .collect();
        for (r, x) in w_alpha.into_iter().enumerate() {
            self.action[r * n + i] -= x;
        }
    }

    fn compute_length(&self, rs: &RootSystem) -> usize {
        let v = self.rho_image(rs);
        (0..rs.positive_roots().len())
            .filter(|&k| rs.coroot_pairing(&v, k) < 0)
            .count()
    }
}

/// A word in the simple reflections whose length equals the length of its
/// product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord {
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(rs: &RootSystem, letters: Vec<usize>) -> Result<Self> {
        let w = WeylElement::from_word(rs, &letters)?;
        if w.length() != letters.len() {
            return Err(Error::NotReduced {
                length: w.length(),
                letters: letters.len(),
                word: letters,
            });
        }
        Ok(ReducedWord { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters as 1-based simple indices, the external convention.
    pub fn one_based(&self) -> Vec<usize> {
        self.letters.iter().map(|i| i + 1).collect()
    }
}

/// The longest element `w₀`.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    let all: Vec<usize> = (0..rs.rank()).collect();
    longest_parabolic(rs, &all).expect("full index set is valid")
}

/// Longest element `w_L` of the parabolic subgroup generated by
/// `{s_i : i ∈ subset}`.
pub fn longest_parabolic(rs: &RootSystem, subset: &[usize]) -> Result<WeylElement> {
    for &i in subset {
        rs.check_index(i)?;
    }
    let mut w = WeylElement::identity(rs);
    // Grow by ascents until every generator in the subset is a descent.
    'grow: loop {
        for &i in subset {
            let next = w.mul_simple(rs, i);
            if next.length() > w.length() {
                w = next;
                continue 'grow;
            }
        }
        return Ok(w);
    }
}

/// `w^L = w_L⁻¹ w₀`, so that `w₀ = w_L w^L` with additive lengths.
pub fn min_coset_rep(rs: &RootSystem, subset: &[usize]) -> Result<WeylElement> {
    let wl = longest_parabolic(rs, subset)?;
    let w0 = longest_element(rs);
    let rep = wl.inverse(rs).compose(rs, &w0);
    if wl.length() + rep.length() != w0.length() {
        return Err(Error::Internal(format!(
            "parabolic decomposition not length-additive: {} + {} != {}",
            wl.length(),
            rep.length(),
            w0.length()
        )));
    }
    Ok(rep)
}

/// Demazure (0-Hecke) product `w ⋆ v`: fold the letters of a reduced word of
/// `v` into `w`, multiplying by `s` only when that increases the length.
pub fn demazure_product(rs: &RootSystem, w: &WeylElement, v: &WeylElement) -> WeylElement {
    demazure_fold(rs, w.clone(), v.reduced_word(rs).letters())
}

/// Folds an arbitrary word, starting from `start`, under the monoid rule
/// `x ⋆ s = xs` if `ℓ(xs) > ℓ(x)` and `x` otherwise.
pub fn demazure_fold(rs: &RootSystem, start: WeylElement, word: &[usize]) -> WeylElement {
    word.iter().fold(start, |x, &i| {
        let next = x.mul_simple(rs, i);
        if next.length() > x.length() {
            next
        } else {
            x
        }
    })
}

/// Enumerates the whole Weyl group by breadth-first search on right
/// multiplication. Elements come out in nondecreasing length.
pub fn elements(rs: &RootSystem) -> Vec<WeylElement> {
    let id = WeylElement::identity(rs);
    let mut seen: HashSet<Weight> = HashSet::from([id.rho_image(rs)]);
    let mut out = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        for i in 0..rs.rank() {
            let next = out[idx].mul_simple(rs, i);
            let key = next.rho_image(rs);
            if seen.insert(key) {
                queue.push_back(out.len());
                out.push(next);
            }
        }
    }
    out
}
