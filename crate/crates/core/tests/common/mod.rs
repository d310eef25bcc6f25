//! Independent oracles shared by the integration suites.

#![allow(dead_code)]

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::Command;

use demazure::{RootSystem, Weight};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn rs(name: &str) -> RootSystem {
    name.parse().unwrap()
}

/// Every weight with coordinates in `[lo, hi]`.
pub fn weight_box(rank: usize, lo: i64, hi: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (lo..=hi).map(move |c| {
                    let mut v = v.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Weight::new).collect()
}

/// All subsets of `0..rank`, as sorted index lists.
pub fn subsets(rank: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << rank))
        .map(|mask| (0..rank).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

pub fn random_word(rng: &mut StdRng, rank: usize, len: usize) -> Vec<usize> {
    (0..len).map(|_| rng.gen_range(0..rank)).collect()
}

pub fn pick<'a, T>(rng: &mut StdRng, items: &'a [T]) -> &'a T {
    items.choose(rng).unwrap()
}

/// Symmetrizing integers `d_i = (α_i, α_i)/2` from the Cartan matrix alone,
/// by brute-force search over small values.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d = vec![1i64; n];
    'search: for code in 0..(3usize.pow(n as u32)) {
        let mut c = code;
        for x in d.iter_mut() {
            *x = [1, 2, 3][c % 3];
            c /= 3;
        }
        for i in 0..n {
            for j in 0..n {
                if d[i] * cartan[i][j] != d[j] * cartan[j][i] {
                    continue 'search;
                }
            }
        }
        return d;
    }
    panic!("no symmetrizer found");
}

/// Weight multiplicities of `V(λ)` by Freudenthal's recursion
///
/// `m(μ) · [(λ+ρ, λ+ρ) − (μ+ρ, μ+ρ)] = 2 Σ_{α>0} Σ_{k≥1} m(μ+kα) (μ+kα, α)`,
///
/// computed level by level in `λ − μ`. Uses only the Cartan matrix and the
/// list of positive roots; keys are fundamental coordinates.
pub fn freudenthal(rs: &RootSystem, lam: &Weight) -> HashMap<Weight, BigInt> {
    let a = rs.cartan();
    let n = rs.rank();
    let d = symmetrizer(a);
    let roots = rs.positive_roots();
    // (x, y) for simple-root coordinate vectors.
    let form = |x: &[i64], y: &[i64]| -> i64 {
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += x[i] * y[j] * d[i] * a[i][j];
            }
        }
        s
    };
    // (ν, β) for ν in fundamental coordinates and β in root coordinates.
    let pair_fund =
        |nu: &[i64], beta: &[i64]| -> i64 { (0..n).map(|j| nu[j] * beta[j] * d[j]).sum() };
    let lam_c = lam.coords();
    let lam_rho: Vec<i64> = lam_c.iter().map(|x| x + 1).collect();

    // Multiplicities keyed by β = λ − μ in root coordinates.
    let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
    mult.insert(vec![0; n], 1);
    let mut level: Vec<Vec<i64>> = vec![vec![0; n]];
    while !level.is_empty() {
        let mut candidates: Vec<Vec<i64>> = Vec::new();
        for beta in &level {
            for i in 0..n {
                let mut next = beta.clone();
                next[i] += 1;
                if !mult.contains_key(&next) && !candidates.contains(&next) {
                    candidates.push(next);
                }
            }
        }
        let mut next_level = Vec::new();
        for beta in candidates {
            // (λ+ρ,λ+ρ) − (λ+ρ−β, λ+ρ−β) = 2(λ+ρ, β) − (β, β)
            let denom = 2 * pair_fund(&lam_rho, &beta) - form(&beta, &beta);
            let mut num = 0i64;
            for alpha in roots {
                let mut k = 1;
                loop {
                    let shifted: Vec<i64> =
                        beta.iter().zip(alpha).map(|(b, a)| b - k * a).collect();
                    if shifted.iter().any(|&c| c < 0) {
                        break;
                    }
                    if let Some(&m) = mult.get(&shifted) {
                        // (μ + kα, α) = (λ, α) − (β − kα, α)
                        let ip = pair_fund(lam_c, alpha) - form(&shifted, alpha);
                        num += m * ip;
                    }
                    k += 1;
                }
            }
            let num = 2 * num;
            if num == 0 {
                continue;
            }
            assert!(
                denom > 0,
                "Freudenthal denominator must be positive for a weight"
            );
            assert_eq!(num % denom, 0, "Freudenthal quotient must be integral");
            let m = num / denom;
            if m > 0 {
                mult.insert(beta.clone(), m);
                next_level.push(beta);
            }
        }
        level = next_level;
    }
    mult.into_iter()
        .map(|(beta, m)| {
            let mu = &Weight::new(lam_c.to_vec()) - &rs.root_to_weight(&beta);
            (mu, BigInt::from(m))
        })
        .collect()
}

/// One row of the golden CLI corpus.
#[derive(Debug, Clone)]
pub struct Invocation {
    pub name: String,
    pub exit: i32,
    pub args: Vec<String>,
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Tab-separated `name, exit, argv...`; `#` starts a comment line and an
/// empty field is an empty argument.
pub fn corpus() -> Vec<Invocation> {
    let text = std::fs::read_to_string(golden_dir().join("corpus.tsv")).unwrap();
    text.lines()
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
        .map(|line| {
            let mut fields = line.split('\t');
            let name = fields.next().unwrap().to_string();
            let exit = fields.next().unwrap().parse().unwrap();
            Invocation {
                name,
                exit,
                args: fields.map(str::to_string).collect(),
            }
        })
        .collect()
}

pub struct Outcome {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

/// Runs the built binary with the cache environment cleared.
pub fn run_cli(args: &[String], cache: Option<&Path>) -> Outcome {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_demazure"));
    cmd.env_remove(demazure::cli::CACHE_ENV);
    if let Some(dir) = cache {
        cmd.arg("--cache").arg(dir);
    }
    let out = cmd.args(args).output().unwrap();
    Outcome {
        code: out.status.code().unwrap_or(-1),
        stdout: out.stdout,
        stderr: out.stderr,
    }
}
