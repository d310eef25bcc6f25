//! Growth of `n ↦ dim V_w(nλ)` and exact degree detection by finite
//! differences.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::character::demazure_dim;
use crate::root_system::{RootSystem, Weight};
use crate::weyl::WeylElement;
use crate::{Error, Result};

/// Extra samples beyond `ℓ(w)` used by default; leaves two vanishing entries
/// in the `(ℓ(w)+1)`-st difference.
pub const DEFAULT_EXTRA_SAMPLES: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DilationSequence {
    pub w: WeylElement,
    pub lam: Weight,
    /// `values[n] = dim V_w(nλ)` for `n = 0..=N`.
    pub values: Vec<BigInt>,
}

impl DilationSequence {
    /// The sampled range end `N`.
    pub fn last_index(&self) -> usize {
        self.values.len() - 1
    }
}

pub fn minimum_samples(w: &WeylElement) -> usize {
    w.length() + 2
}

/// Samples `dim V_w(nλ)` for `n = 0..=last`, evaluating entries in parallel.
pub fn dimension_sequence(
    rs: &RootSystem,
    w: &WeylElement,
    lam: &Weight,
    last: usize,
) -> Result<DilationSequence> {
    rs.check_dominant(lam)?;
    let required = minimum_samples(w);
    if last < required {
        return Err(Error::SequenceTooShort {
            required,
            got: last,
        });
    }
    let values = (0..=last)
        .into_par_iter()
        .map(|n| demazure_dim(rs, w, &lam.scale(n as i64)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DilationSequence {
        w: w.clone(),
        lam: lam.clone(),
        values,
    })
}

/// `Δ^k` of the sequence for `k = 0..=max_order`; row `k` has
/// `len − k` entries.
pub fn difference_table(values: &[BigInt], max_order: usize) -> Vec<Vec<BigInt>> {
    let mut table = vec![values.to_vec()];
    for _ in 0..max_order {
        let prev = table.last().expect("nonempty");
        if prev.len() < 2 {
            break;
        }
        let next: Vec<BigInt> = prev.windows(2).map(|p| &p[1] - &p[0]).collect();
        table.push(next);
    }
    table
}

/// Smallest `d` such that the `(d+1)`-st difference of `values` vanishes
/// identically. Orders up to `len − 1` are examined.
pub fn polynomial_degree(values: &[BigInt]) -> Result<usize> {
    if values.len() < 2 {
        return Err(Error::Inconclusive { max_order: 0 });
    }
    let max_order = values.len() - 1;
    let table = difference_table(values, max_order);
    table
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, row)| row.iter().all(Zero::is_zero))
        .map(|(k, _)| k - 1)
        .ok_or(Error::Inconclusive { max_order })
}

pub fn growth_degree(seq: &DilationSequence) -> Result<usize> {
    polynomial_degree(&seq.values)
}

/// Tab-separated table `n, dim, Δ^1, …, Δ^{ℓ(w)+1}` with a header row; cells
/// past the end of a difference row are left empty.
pub fn to_tsv(seq: &DilationSequence) -> String {
    let orders = seq.w.length() + 1;
    let table = difference_table(&seq.values, orders);
    let mut out = String::from("n\tdim");
    for k in 1..=orders {
        out.push_str(&format!("\tdiff{k}"));
    }
    out.push('\n');
    for n in 0..seq.values.len() {
        out.push_str(&n.to_string());
        for k in 0..=orders {
            out.push('\t');
            if let Some(v) = table.get(k).and_then(|row| row.get(n)) {
                out.push_str(&v.to_string());
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::longest_element;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn sequence_examples() {
        let a2: RootSystem = "A2".parse().unwrap();
        let s1s2 = WeylElement::from_word(&a2, &[0, 1]).unwrap();
        let seq = dimension_sequence(&a2, &s1s2, &a2.rho(), 4).unwrap();
        assert_eq!(seq.values, big(&[1, 5, 12, 22, 35]));

        let id = WeylElement::identity(&a2);
        let seq = dimension_sequence(&a2, &id, &Weight::from([3, 7]), 5).unwrap();
        assert!(seq.values.iter().all(|v| *v == BigInt::from(1)));

        let w0 = longest_element(&a2);
        let seq = dimension_sequence(&a2, &w0, &a2.rho(), 5).unwrap();
        assert_eq!(seq.values, big(&[1, 8, 27, 64, 125, 216]));
    }

    #[test]
    fn too_short_is_rejected_with_minimum() {
        let a2: RootSystem = "A2".parse().unwrap();
        let w0 = longest_element(&a2);
        let err = dimension_sequence(&a2, &w0, &a2.rho(), 3).unwrap_err();
        assert!(matches!(
            err,
            Error::SequenceTooShort {
                required: 5,
                got: 3
            }
        ));
        assert!(err.to_string().contains("N >= 5"));
    }

    #[test]
    fn degree_examples() {
        assert_eq!(polynomial_degree(&big(&[1, 1, 1, 1])).unwrap(), 0);
        assert_eq!(polynomial_degree(&big(&[1, 5, 12, 22, 35])).unwrap(), 2);
        assert_eq!(polynomial_degree(&big(&[1, 8, 27, 64, 125])).unwrap(), 3);
        assert!(matches!(
            polynomial_degree(&big(&[1, 2, 4, 8, 16])),
            Err(Error::Inconclusive { max_order: 4 })
        ));
        assert!(polynomial_degree(&big(&[7])).is_err());
    }

    #[test]
    fn tsv_layout() {
        let a2: RootSystem = "A2".parse().unwrap();
        let s1s2 = WeylElement::from_word(&a2, &[0, 1]).unwrap();
        let seq = dimension_sequence(&a2, &s1s2, &a2.rho(), 4).unwrap();
        let tsv = to_tsv(&seq);
        let lines: Vec<&str> = tsv.lines().collect();
        assert_eq!(lines[0], "n\tdim\tdiff1\tdiff2\tdiff3");
        assert_eq!(lines[1], "0\t1\t4\t3\t0");
        assert_eq!(lines[5], "4\t35\t\t\t");
    }
}
