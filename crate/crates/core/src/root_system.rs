//! Finite root systems of types A–G and the weight lattice.
//!
//! Weights are stored in the basis of fundamental weights, so coordinate `i`
//! of a weight is its pairing with the simple coroot `α_i^∨`. The Cartan
//! matrix follows the convention `a_ij = ⟨α_j, α_i^∨⟩`: column `j` is the
//! simple root `α_j` written in fundamental coordinates. Node labels follow
//! Bourbaki (`B_n`: `α_n` short, `C_n`: `α_n` long, `F_4`: `α_3, α_4` short,
//! `G_2`: `α_1` short).
//!
//! Simple indices are 0-based throughout the library. The command-line and
//! JSON surfaces use 1-based indices and convert at the boundary.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Cartan–Killing family letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    /// Human-readable range of admissible ranks.
    pub fn allowed_ranks(self) -> &'static str {
        match self {
            Family::A => "n >= 1",
            Family::B => "n >= 2",
            Family::C => "n >= 3",
            Family::D => "n >= 4",
            Family::E => "n in {6, 7, 8}",
            Family::F => "n = 4",
            Family::G => "n = 2",
        }
    }

    fn admits(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    /// Classical number of positive roots of the family at the given rank.
    pub fn positive_root_count(self, rank: usize) -> usize {
        let n = rank;
        match self {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scale(&self, factor: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * factor).collect())
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }
}

impl From<Vec<i64>> for Weight {
    fn from(coords: Vec<i64>) -> Self {
        Weight(coords)
    }
}

impl<const N: usize> From<[i64; N]> for Weight {
    fn from(coords: [i64; N]) -> Self {
        Weight(coords.to_vec())
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
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

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Root datum of one finite irreducible type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// `(α_i, α_i) / 2`, scaled so the short roots have value 1.
    symmetrizer: Vec<i64>,
    /// Positive roots in simple-root coordinates.
    positive_roots: Vec<Vec<i64>>,
    /// The matching coroots in simple-coroot coordinates.
    positive_coroots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.admits(rank) {
            return Err(Error::InvalidRootSystem {
                name: format!("{}{}", family.letter(), rank),
                allowed: family.allowed_ranks(),
            });
        }
        let cartan = cartan_matrix(family, rank);
        let symmetrizer = symmetrizer(&cartan);
        let positive_roots = close_under_reflections(&cartan);
        let positive_coroots = positive_roots
            .iter()
            .map(|beta| coroot_of(&cartan, &symmetrizer, beta))
            .collect();
        Ok(RootSystem {
            family,
            rank,
            cartan,
            symmetrizer,
            positive_roots,
            positive_coroots,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `cartan()[i][j] = ⟨α_j, α_i^∨⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Positive roots in simple-root coordinates, sorted by height and then
    /// lexicographically.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Coroots of [`Self::positive_roots`], index-aligned, in simple-coroot
    /// coordinates.
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            })
        }
    }

    pub(crate) fn check_weight(&self, mu: &Weight) -> Result<()> {
        if mu.rank() == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank,
                got: mu.rank(),
            })
        }
    }

    pub(crate) fn check_dominant(&self, mu: &Weight) -> Result<()> {
        self.check_weight(mu)?;
        if mu.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(mu.clone()))
        }
    }

    /// The simple root `α_j` in fundamental coordinates (column `j` of the
    /// Cartan matrix).
    pub fn simple_root(&self, j: usize) -> Result<Weight> {
        self.check_index(j)?;
        Ok(Weight(self.cartan.iter().map(|row| row[j]).collect()))
    }

    pub fn fundamental_weight(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        let mut coords = vec![0; self.rank];
        coords[i] = 1;
        Ok(Weight(coords))
    }

    /// Half the sum of the positive roots: every fundamental coordinate is 1.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    /// Converts a vector of simple-root coordinates into a weight.
    pub fn root_to_weight(&self, beta: &[i64]) -> Weight {
        Weight(
            self.cartan
                .iter()
                .map(|row| row.iter().zip(beta).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    /// `⟨μ, α_i^∨⟩`, which is coordinate `i` of `μ`.
    pub fn pairing(&self, mu: &Weight, i: usize) -> Result<i64> {
        self.check_index(i)?;
        self.check_weight(mu)?;
        Ok(mu.0[i])
    }

    /// `⟨μ, α^∨⟩` for the positive root with index `root` in
    /// [`Self::positive_roots`].
    pub fn coroot_pairing(&self, mu: &Weight, root: usize) -> i64 {
        self.positive_coroots[root]
            .iter()
            .zip(&mu.0)
            .map(|(c, m)| c * m)
            .sum()
    }

    /// `s_i(μ) = μ − ⟨μ, α_i^∨⟩ α_i`.
    pub fn simple_reflection(&self, i: usize, mu: &Weight) -> Result<Weight> {
        self.check_index(i)?;
        self.check_weight(mu)?;
        let mut out = mu.clone();
        self.reflect_in_place(i, &mut out);
        Ok(out)
    }

    pub(crate) fn reflect_in_place(&self, i: usize, mu: &mut Weight) {
        let m = mu.0[i];
        if m != 0 {
            for (r, row) in self.cartan.iter().enumerate() {
                mu.0[r] -= m * row[i];
            }
        }
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for RootSystem {
    type Err = Error;

    /// Parses compact names such as `A2`, `b3`, `G2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let bad = || Error::UnknownType(s.to_string());
        let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        RootSystem::new(family, rank)
    }
}

fn cartan_matrix(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match family {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1, -1, -1);
            }
        }
        Family::B => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -1, -2);
        }
        Family::C => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -2, -1);
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            // 1-3-4-5-6(-7-8), with 2 attached to 4.
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 2..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Family::G => {
            link(0, 1, -3, -1);
        }
    }
    a
}

/// Integers `d_i` with `d_i a_ij = d_j a_ji`, normalized so `min d_i = 1`.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    // Rational values as (num, den), propagated along the (connected) diagram.
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    d[0] = Some((1, 1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let (num, den) = d[i].expect("visited");
        for j in 0..n {
            if j != i && cartan[i][j] != 0 && d[j].is_none() {
                let (p, q) = (num * cartan[i][j].abs(), den * cartan[j][i].abs());
                let g = gcd(p, q);
                d[j] = Some((p / g, q / g));
                queue.push_back(j);
            }
        }
    }
    let d: Vec<(i64, i64)> = d
        .into_iter()
        .map(|x| x.expect("connected diagram"))
        .collect();
    let lcm_den = d.iter().fold(1, |acc, &(_, q)| acc / gcd(acc, q) * q);
    let scaled: Vec<i64> = d.iter().map(|&(p, q)| p * (lcm_den / q)).collect();
    let g = scaled.iter().fold(0, |acc, &x| gcd(acc, x));
    scaled.into_iter().map(|x| x / g).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Orbit closure of the simple roots under simple reflections, keeping the
/// roots with nonnegative simple-root coordinates.
fn close_under_reflections(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    for j in 0..n {
        let mut e = vec![0; n];
        e[j] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            // ⟨β, α_i^∨⟩ = Σ_j β_j a_ij
            let m: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
            if m == 0 {
                continue;
            }
            let mut image = beta.clone();
            image[i] -= m;
            if image.iter().all(|&c| c >= 0) && seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    roots
}

/// `α^∨ = 2α / (α, α)` in simple-coroot coordinates, where `α_j = d_j α_j^∨`.
fn coroot_of(cartan: &[Vec<i64>], d: &[i64], beta: &[i64]) -> Vec<i64> {
    let n = beta.len();
    let mut norm = 0;
    for i in 0..n {
        for j in 0..n {
            norm += beta[i] * beta[j] * d[i] * cartan[i][j];
        }
    }
    beta.iter()
        .zip(d)
        .map(|(&b, &dj)| {
            let num = 2 * b * dj;
            assert_eq!(num % norm, 0, "coroot coordinates must be integral");
            num / norm
        })
        .collect()
}
