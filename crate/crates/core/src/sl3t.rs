//! Multiplicities on `SL_3 / T`, the space of ordered triangles in `P^2`.
//!
//! A biweight `(λ, χ)` has `λ = k₁ω₁ + k₂ω₂` and `χ = l₁ε₁ + l₂ε₂ + l₃ε₃`,
//! where `ε_i` are the diagonal entries of the torus. Since `ε₁+ε₂+ε₃`
//! vanishes on `T`, everything here is invariant under `l ↦ l + (1,1,1)`.
//!
//! Three independent routes to `mult_λ H⁰(SL_3/T, L(χ))`:
//!
//! - [`closed_mult`]: `n + 1` with
//!   `n = (k₁+k₂)/2 − (1/6) Σ_cyclic |k₁ − k₂ + 2l_i − l_j − l_k|`, when the
//!   biweight lies in the semigroup;
//! - [`Sl3Torus::mult_via_weights`]: the multiplicity of the weight `−χ` in
//!   `V(λ*)` (Frobenius reciprocity);
//! - [`theorem2_mult`]: one plus the number of times `(ω₁+ω₂, 0)` can be
//!   subtracted while staying in the semigroup.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::character::{demazure_dim, dual_weight, CharacterCache};
use crate::root_system::{Family, RootSystem, Weight};
use crate::weyl::WeylElement;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Biweight {
    pub k1: i64,
    pub k2: i64,
    pub l: [i64; 3],
}

impl Biweight {
    pub fn new(k1: i64, k2: i64, l: [i64; 3]) -> Result<Self> {
        if k1 < 0 || k2 < 0 {
            return Err(Error::NotDominant(Weight::from([k1, k2])));
        }
        Ok(Biweight { k1, k2, l })
    }

    pub fn lambda(&self) -> Weight {
        Weight::from([self.k1, self.k2])
    }

    /// `−χ` in fundamental coordinates, via `ε₁ = ω₁`, `ε₂ = ω₂ − ω₁`,
    /// `ε₃ = −ω₂`.
    pub fn neg_chi(&self) -> Weight {
        let [l1, l2, l3] = self.l;
        Weight::from([l2 - l1, l3 - l2])
    }

    pub fn shifted(&self, by: i64) -> Biweight {
        let [l1, l2, l3] = self.l;
        Biweight {
            l: [l1 + by, l2 + by, l3 + by],
            ..*self
        }
    }
}

/// Biweights of the B-stable prime divisors, which generate the semigroup:
/// `(ω₂, −ε_i)`, `(ω₁, ε_i)` and `(ω₁+ω₂, 0)`.
pub fn generator_biweights() -> Vec<Biweight> {
    let mut out = Vec::with_capacity(7);
    for i in 0..3 {
        let mut l = [0; 3];
        l[i] = -1;
        out.push(Biweight { k1: 0, k2: 1, l });
    }
    for i in 0..3 {
        let mut l = [0; 3];
        l[i] = 1;
        out.push(Biweight { k1: 1, k2: 0, l });
    }
    out.push(Biweight {
        k1: 1,
        k2: 1,
        l: [0, 0, 0],
    });
    out
}

/// `n = (k₁+k₂)/2 − (1/6) Σ |k₁ − k₂ + 2l_i − l_j − l_k|` over cyclic
/// `(i, j, k)`.
pub fn closed_n(bw: &Biweight) -> Ratio<i64> {
    let d = bw.k1 - bw.k2;
    let l = bw.l;
    let sum: i64 = (0..3)
        .map(|i| (d + 2 * l[i] - l[(i + 1) % 3] - l[(i + 2) % 3]).abs())
        .sum();
    Ratio::new(bw.k1 + bw.k2, 2) - Ratio::new(sum, 6)
}

pub fn congruence_holds(bw: &Biweight) -> bool {
    (bw.k1 - bw.k2 - bw.l.iter().sum::<i64>()).rem_euclid(3) == 0
}

/// Membership in the semigroup: the congruence `k₁ − k₂ ≡ l₁+l₂+l₃ (mod 3)`
/// and `n` a nonnegative integer.
pub fn sigma_member(bw: &Biweight) -> bool {
    let n = closed_n(bw);
    congruence_holds(bw) && n.is_integer() && !n.is_negative()
}

pub fn closed_mult(bw: &Biweight) -> BigInt {
    if sigma_member(bw) {
        BigInt::from(closed_n(bw).to_integer() + 1)
    } else {
        BigInt::zero()
    }
}

/// Repeatedly subtracts `(λ₀, χ₀) = (ω₁+ω₂, 0)` while the result stays in
/// the semigroup; returns one more than the number of steps.
pub fn theorem2_mult(bw: &Biweight) -> BigInt {
    if !sigma_member(bw) {
        return BigInt::zero();
    }
    let mut cur = *bw;
    let mut steps = 0i64;
    while cur.k1 > 0 && cur.k2 > 0 {
        let next = Biweight {
            k1: cur.k1 - 1,
            k2: cur.k2 - 1,
            ..cur
        };
        if !sigma_member(&next) {
            break;
        }
        cur = next;
        steps += 1;
    }
    BigInt::from(steps + 1)
}

/// `SL_3` data with a memo of Weyl characters, shared by the weight route.
#[derive(Debug)]
pub struct Sl3Torus {
    rs: RootSystem,
    cache: CharacterCache,
}

impl Default for Sl3Torus {
    fn default() -> Self {
        Self::new()
    }
}

impl Sl3Torus {
    pub fn new() -> Self {
        Sl3Torus {
            rs: RootSystem::new(Family::A, 2).expect("A2 is valid"),
            cache: CharacterCache::new(),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// `dim V(λ*)_{−χ}`.
    pub fn mult_via_weights(&self, bw: &Biweight) -> Result<BigInt> {
        let dual = dual_weight(&self.rs, &bw.lambda())?;
        Ok(self
            .cache
            .weyl_character(&self.rs, &dual)?
            .coeff(&bw.neg_chi()))
    }

    /// `min_i dim V_{s_i}(λ)`, computed from Demazure characters.
    pub fn length_one_bound(&self, bw: &Biweight) -> Result<BigInt> {
        let lam = bw.lambda();
        let mut best: Option<BigInt> = None;
        for i in 0..2 {
            let s = WeylElement::simple(&self.rs, i)?;
            let d = demazure_dim(&self.rs, &s, &lam)?;
            best = Some(match best {
                Some(b) if b <= d => b,
                _ => d,
            });
        }
        Ok(best.expect("rank 2"))
    }

    pub fn audit(&self, bw: &Biweight) -> Result<Audit> {
        let closed = closed_mult(bw);
        let weight = self.mult_via_weights(bw)?;
        let recursive = theorem2_mult(bw);
        let member = sigma_member(bw);
        let agree = closed == weight && weight == recursive && member == !closed.is_zero();
        Ok(Audit {
            member,
            n: closed_n(bw),
            closed_mult: closed,
            weight_mult: weight,
            theorem2_mult: recursive,
            agree,
        })
    }
}

/// `mult_via_weights` on a fresh context; prefer [`Sl3Torus`] in loops.
pub fn mult_via_weights(bw: &Biweight) -> Result<BigInt> {
    static CONTEXT: OnceLock<Sl3Torus> = OnceLock::new();
    CONTEXT.get_or_init(Sl3Torus::new).mult_via_weights(bw)
}

/// One row of the three-way comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Audit {
    pub member: bool,
    pub n: Ratio<i64>,
    pub closed_mult: BigInt,
    pub weight_mult: BigInt,
    pub theorem2_mult: BigInt,
    pub agree: bool,
}

#[derive(Debug, Serialize)]
pub struct AuditJson {
    pub member: bool,
    pub n: String,
    pub closed_mult: String,
    pub weight_mult: String,
    pub theorem2_mult: String,
    pub agree: bool,
}

impl Audit {
    /// `n` as an exact decimal or `p/q` string.
    pub fn n_string(&self) -> String {
        if self.n.is_integer() {
            self.n.to_integer().to_string()
        } else {
            format!("{}/{}", self.n.numer(), self.n.denom())
        }
    }

    pub fn to_json(&self) -> AuditJson {
        AuditJson {
            member: self.member,
            n: self.n_string(),
            closed_mult: self.closed_mult.to_string(),
            weight_mult: self.weight_mult.to_string(),
            theorem2_mult: self.theorem2_mult.to_string(),
            agree: self.agree,
        }
    }
}

/// `min(k₁, k₂) + 1 = min_i dim V_{s_i}(λ)`.
pub fn length_one_bound(bw: &Biweight) -> BigInt {
    BigInt::from(bw.k1.min(bw.k2) + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(k1: i64, k2: i64, l: [i64; 3]) -> Biweight {
        Biweight::new(k1, k2, l).unwrap()
    }

    #[test]
    fn closed_n_examples() {
        assert_eq!(closed_n(&bw(1, 1, [0, 0, 0])), Ratio::from_integer(1));
        assert_eq!(closed_n(&bw(0, 1, [-1, 0, 0])), Ratio::from_integer(0));
        assert_eq!(closed_n(&bw(2, 2, [0, 0, 0])), Ratio::from_integer(2));
    }

    #[test]
    fn membership_examples() {
        assert!(sigma_member(&bw(1, 1, [0, 0, 0])));
        assert!(!sigma_member(&bw(1, 0, [0, 0, 0])));
        assert!(sigma_member(&bw(0, 0, [0, 0, 0])));
    }

    #[test]
    fn closed_mult_examples() {
        assert_eq!(closed_mult(&bw(1, 1, [0, 0, 0])), BigInt::from(2));
        assert_eq!(closed_mult(&bw(1, 0, [0, 0, 0])), BigInt::zero());
        assert_eq!(closed_mult(&bw(2, 2, [0, 0, 0])), BigInt::from(3));
    }

    #[test]
    fn weight_route_examples() {
        assert_eq!(
            mult_via_weights(&bw(1, 1, [0, 0, 0])).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            mult_via_weights(&bw(0, 1, [-1, 0, 0])).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            mult_via_weights(&bw(1, 0, [0, 0, 0])).unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(theorem2_mult(&bw(1, 1, [0, 0, 0])), BigInt::from(2));
        assert_eq!(theorem2_mult(&bw(0, 1, [-1, 0, 0])), BigInt::from(1));
        assert_eq!(theorem2_mult(&bw(3, 3, [1, 1, 1])), BigInt::from(4));
        assert_eq!(theorem2_mult(&bw(1, 0, [0, 0, 0])), BigInt::zero());
    }

    #[test]
    fn generators_have_multiplicity_one() {
        let ctx = Sl3Torus::new();
        let gens = generator_biweights();
        assert_eq!(gens.len(), 7);
        for g in gens {
            let a = ctx.audit(&g).unwrap();
            assert!(a.member && a.agree, "{g:?}");
            // The pencil D_t spans a 2-dimensional space of sections.
            let expected = if g.k1 == 1 && g.k2 == 1 { 2 } else { 1 };
            assert_eq!(a.closed_mult, BigInt::from(expected));
        }
    }

    #[test]
    fn negative_k_is_rejected() {
        assert!(Biweight::new(-1, 0, [0, 0, 0]).is_err());
    }
}
