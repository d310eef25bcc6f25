//! Restriction of simple modules to Levi subgroups.
//!
//! A Levi subgroup is named by a subset `S` of simple indices. Levi weights
//! keep their full ambient coordinates; a weight is `S`-dominant when its
//! coordinates indexed by `S` are nonnegative. The branching is computed by
//! peeling Levi characters off the ambient Weyl character, highest weights
//! first.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::character::{self, apply_operator_word, Character};
use crate::root_system::{RootSystem, Weight};
use crate::weyl::{self, WeylElement};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviDatum {
    subset: Vec<usize>,
    ambient: RootSystem,
    /// Indices of the positive roots supported on `subset`.
    roots: Vec<usize>,
}

impl LeviDatum {
    pub fn new(ambient: &RootSystem, subset: &[usize]) -> Result<Self> {
        for &i in subset {
            ambient.check_index(i)?;
        }
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        let roots = ambient
            .positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, beta)| {
                beta.iter()
                    .enumerate()
                    .all(|(j, &b)| b == 0 || subset.binary_search(&j).is_ok())
            })
            .map(|(k, _)| k)
            .collect();
        Ok(LeviDatum {
            subset,
            ambient: ambient.clone(),
            roots,
        })
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn ambient(&self) -> &RootSystem {
        &self.ambient
    }

    /// Positive roots of the Levi, as indices into the ambient list.
    pub fn positive_root_indices(&self) -> &[usize] {
        &self.roots
    }

    /// Cartan submatrix on `subset`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let a = self.ambient.cartan();
        self.subset
            .iter()
            .map(|&i| self.subset.iter().map(|&j| a[i][j]).collect())
            .collect()
    }

    pub fn is_proper(&self) -> bool {
        self.subset.len() < self.ambient.rank()
    }

    pub fn is_levi_dominant(&self, mu: &Weight) -> bool {
        self.subset.iter().all(|&i| mu.coords()[i] >= 0)
    }

    fn check_levi_dominant(&self, mu: &Weight) -> Result<()> {
        self.ambient.check_weight(mu)?;
        if self.is_levi_dominant(mu) {
            Ok(())
        } else {
            Err(Error::NotLeviDominant { weight: mu.clone() })
        }
    }

    /// `w_L`.
    pub fn longest_element(&self) -> WeylElement {
        weyl::longest_parabolic(&self.ambient, &self.subset).expect("subset validated")
    }

    /// `w^L` with `w₀ = w_L w^L`.
    pub fn min_coset_rep(&self) -> WeylElement {
        weyl::min_coset_rep(&self.ambient, &self.subset).expect("subset validated")
    }

    /// Character of the simple Levi module of highest weight `μ`, in ambient
    /// coordinates.
    pub fn levi_character(&self, mu: &Weight) -> Result<Character> {
        self.check_levi_dominant(mu)?;
        let word = self.longest_element().reduced_word(&self.ambient);
        apply_operator_word(
            &self.ambient,
            word.letters(),
            &Character::monomial(mu.clone()),
        )
    }

    /// Weyl dimension over the Levi's positive roots.
    pub fn levi_dim(&self, mu: &Weight) -> Result<BigInt> {
        self.check_levi_dominant(mu)?;
        character::product_dimension(&self.ambient, mu, self.roots.iter().copied())
    }

    /// `⟨μ, 2ρ_L^∨⟩`; drops by 2 along each simple root of the Levi, so a
    /// support weight maximizing it is maximal in the Levi dominance order.
    fn levi_height(&self, mu: &Weight) -> i64 {
        self.roots
            .iter()
            .map(|&k| self.ambient.coroot_pairing(mu, k))
            .sum()
    }
}

/// Multiplicities of Levi highest weights in a restricted module.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BranchingResult {
    pub constituents: BTreeMap<Weight, BigInt>,
}

impl BranchingResult {
    /// Number of simple factors, counted with multiplicity.
    pub fn length(&self) -> BigInt {
        self.constituents.values().sum()
    }

    pub fn multiplicity(&self, mu: &Weight) -> BigInt {
        self.constituents.get(mu).cloned().unwrap_or_default()
    }

    /// `Σ mult(μ) · dim_L(μ)`.
    pub fn total_dim(&self, levi: &LeviDatum) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (mu, m) in &self.constituents {
            total += m * levi.levi_dim(mu)?;
        }
        Ok(total)
    }
}

pub fn restrict_to_levi(lam: &Weight, levi: &LeviDatum) -> Result<BranchingResult> {
    restrict_to_levi_with_tiebreak(lam, levi, Ord::cmp)
}

/// As [`restrict_to_levi`], with a caller-chosen order among weights of equal
/// Levi height (which are pairwise incomparable).
pub fn restrict_to_levi_with_tiebreak<F>(
    lam: &Weight,
    levi: &LeviDatum,
    tiebreak: F,
) -> Result<BranchingResult>
where
    F: Fn(&Weight, &Weight) -> Ordering,
{
    let rs = levi.ambient();
    let mut remaining = character::weyl_character(rs, lam)?;
    let mut order: Vec<(i64, Weight)> = remaining
        .iter()
        .map(|(w, _)| (levi.levi_height(w), w.clone()))
        .collect();
    order.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| tiebreak(&a.1, &b.1)));

    let mut result = BranchingResult::default();
    for (_, mu) in order {
        let m = remaining.coeff(&mu);
        if m.is_zero() {
            continue;
        }
        if !m.is_positive() || !levi.is_levi_dominant(&mu) {
            return Err(Error::Internal(format!(
                "branching extraction hit {mu} with coefficient {m}"
            )));
        }
        let chi = levi.levi_character(&mu)?;
        remaining.add_scaled(&chi, &-&m);
        result.constituents.insert(mu, m);
    }
    if !remaining.is_empty() {
        return Err(Error::Internal(format!(
            "branching left a residue of {} terms",
            remaining.len()
        )));
    }
    Ok(result)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub value: BigInt,
    pub bound: BigInt,
    pub holds: bool,
}

/// `dim V_{w^L}(λ*)`, the bound shared by both branching inequalities.
pub fn levi_bound(lam: &Weight, levi: &LeviDatum) -> Result<BigInt> {
    let rs = levi.ambient();
    let dual = character::dual_weight(rs, lam)?;
    character::demazure_dim(rs, &levi.min_coset_rep(), &dual)
}

/// `mult_μ res_L V(λ) ≤ dim V_{w^L}(λ*)`.
pub fn levi_branching_bound(lam: &Weight, mu: &Weight, levi: &LeviDatum) -> Result<BoundCheck> {
    let value = restrict_to_levi(lam, levi)?.multiplicity(mu);
    let bound = levi_bound(lam, levi)?;
    Ok(BoundCheck {
        holds: value <= bound,
        value,
        bound,
    })
}

/// `length res_L V(λ) ≤ dim V_{w^L}(λ*)`.
pub fn levi_length_bound(lam: &Weight, levi: &LeviDatum) -> Result<BoundCheck> {
    let value = restrict_to_levi(lam, levi)?.length();
    let bound = levi_bound(lam, levi)?;
    Ok(BoundCheck {
        holds: value <= bound,
        value,
        bound,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniradCheck {
    pub demazure_side: BigInt,
    pub levi_side: BigInt,
    pub equal: bool,
}

/// `dim V_{w_L}(λ)` against the Levi Weyl dimension of `λ`.
pub fn unirad_mult_identity(lam: &Weight, levi: &LeviDatum) -> Result<UniradCheck> {
    let rs = levi.ambient();
    let demazure_side = character::demazure_dim(rs, &levi.longest_element(), lam)?;
    let levi_side = levi.levi_dim(lam)?;
    Ok(UniradCheck {
        equal: demazure_side == levi_side,
        demazure_side,
        levi_side,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(name: &str, subset: &[usize]) -> LeviDatum {
        LeviDatum::new(&name.parse().unwrap(), subset).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    #[test]
    fn standard_module_of_a2_under_a1_levi() {
        let levi = setup("A2", &[0]);
        let res = restrict_to_levi(&w(&[1, 0]), &levi).unwrap();
        assert_eq!(res.constituents.len(), 2);
        let dims: Vec<BigInt> = res
            .constituents
            .keys()
            .map(|mu| levi.levi_dim(mu).unwrap())
            .collect();
        let mut dims_sorted = dims.clone();
        dims_sorted.sort();
        assert_eq!(dims_sorted, vec![BigInt::from(1), BigInt::from(2)]);
        assert_eq!(res.multiplicity(&w(&[1, 0])), BigInt::from(1));
        assert_eq!(res.multiplicity(&w(&[0, -1])), BigInt::from(1));
        assert_eq!(res.length(), BigInt::from(2));
    }

    #[test]
    fn full_subset_is_a_single_constituent() {
        let levi = setup("B2", &[0, 1]);
        let lam = w(&[2, 1]);
        let res = restrict_to_levi(&lam, &levi).unwrap();
        assert_eq!(res.constituents.len(), 1);
        assert_eq!(res.multiplicity(&lam), BigInt::from(1));
    }

    #[test]
    fn adjoint_of_a2_under_a1_levi() {
        let levi = setup("A2", &[0]);
        let lam = w(&[1, 1]);
        let res = restrict_to_levi(&lam, &levi).unwrap();
        assert_eq!(res.length(), BigInt::from(4));
        assert_eq!(res.total_dim(&levi).unwrap(), BigInt::from(8));
        let mut pairings: Vec<i64> = res.constituents.keys().map(|mu| mu.coords()[0]).collect();
        pairings.sort();
        assert_eq!(pairings, vec![0, 1, 1, 2]);
    }

    #[test]
    fn branching_bound_examples() {
        let levi = setup("A2", &[0]);
        let check = levi_branching_bound(&w(&[1, 0]), &w(&[1, 0]), &levi).unwrap();
        assert_eq!(
            (check.value, check.bound, check.holds),
            (1.into(), 2.into(), true)
        );
        let zero = levi_branching_bound(&w(&[0, 0]), &w(&[0, 0]), &levi).unwrap();
        assert_eq!((zero.value, zero.bound), (1.into(), 1.into()));
        let adj = w(&[1, 1]);
        for mu in restrict_to_levi(&adj, &levi).unwrap().constituents.keys() {
            let c = levi_branching_bound(&adj, mu, &levi).unwrap();
            assert_eq!(c.bound, BigInt::from(5));
            assert!(c.holds);
        }
    }

    #[test]
    fn length_bound_examples() {
        let levi = setup("A2", &[0]);
        let c = levi_length_bound(&w(&[1, 0]), &levi).unwrap();
        assert_eq!((c.value, c.bound, c.holds), (2.into(), 2.into(), true));
        let c = levi_length_bound(&w(&[0, 0]), &levi).unwrap();
        assert_eq!((c.value, c.bound), (1.into(), 1.into()));

        let a3 = setup("A3", &[0, 1]);
        let c = levi_length_bound(&w(&[1, 0, 0]), &a3).unwrap();
        assert_eq!(c.value, BigInt::from(2));
        // w^L = s3 s2 s1 on ω3: D_1 and D_2 fix e^{ω3}, D_3 adds ω3 − α3.
        assert_eq!(
            a3.min_coset_rep().reduced_word(a3.ambient()).letters(),
            &[2, 1, 0]
        );
        assert_eq!(c.bound, BigInt::from(2));
        assert!(c.holds);
    }

    #[test]
    fn unirad_examples() {
        let levi = setup("A2", &[0]);
        for k1 in 0..4 {
            for k2 in 0..4 {
                let c = unirad_mult_identity(&w(&[k1, k2]), &levi).unwrap();
                assert_eq!(c.levi_side, BigInt::from(k1 + 1));
                assert!(c.equal);
            }
        }
        let empty = setup("A2", &[]);
        let c = unirad_mult_identity(&w(&[2, 3]), &empty).unwrap();
        assert_eq!((c.demazure_side, c.levi_side), (1.into(), 1.into()));
        let a3 = setup("A3", &[0, 1]);
        let c = unirad_mult_identity(&w(&[1, 1, 0]), &a3).unwrap();
        assert_eq!((c.demazure_side, c.levi_side), (8.into(), 8.into()));
    }

    #[test]
    fn levi_cartan_is_valid() {
        let levi = setup("B3", &[1, 2]);
        assert_eq!(levi.cartan(), vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(levi.positive_root_indices().len(), 4);
        assert!(LeviDatum::new(&"A2".parse().unwrap(), &[3]).is_err());
    }

    #[test]
    fn non_levi_dominant_weight_is_rejected() {
        let levi = setup("A2", &[0]);
        assert!(matches!(
            levi.levi_character(&w(&[-1, 3])),
            Err(Error::NotLeviDominant { .. })
        ));
        assert!(levi.levi_character(&w(&[1, -3])).is_ok());
    }
}
