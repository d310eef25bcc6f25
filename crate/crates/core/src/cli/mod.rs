//! The `demazure` command-line front end.
//!
//! Exit status: 0 on success, 1 when a reported verification flag is false
//! (or an internal consistency check fails), 2 on usage errors. Weights are
//! comma-separated fundamental coordinates, words and Levi subsets are
//! comma-separated 1-based simple indices, and the empty string is the empty
//! word.

pub mod cache;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::branching::{self, LeviDatum};
use crate::character::{self, Character};
use crate::growth;
use crate::root_system::{RootSystem, Weight};
use crate::sl3t::{Biweight, Sl3Torus};
use crate::weyl::{self, WeylElement};
use crate::Error;

use self::cache::DiskCache;

/// Environment variable naming the default cache directory.
pub const CACHE_ENV: &str = "DEMAZURE_CACHE_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

impl Format {
    fn as_str(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Tsv => "tsv",
        }
    }
}

/// A fully parsed invocation.
#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(
    name = "demazure",
    version,
    about = "Exact Demazure characters, Weyl group combinatorics and multiplicity bounds"
)]
pub struct JobSpec {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Directory for cached characters.
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Demazure character of V_w(λ).
    Char {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Accept non-reduced words by folding them with the Demazure product.
        #[arg(long)]
        fold: bool,
    },
    /// Dimension of V_w(λ).
    Dim {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        fold: bool,
    },
    /// Multiplicity of the weight μ in V(λ).
    WeightMult {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Highest weight λ* of the dual module.
    Dual {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Demazure (0-Hecke) product of the letters of a word.
    Hecke {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Restriction of V(λ) to a Levi subgroup, with the Demazure bounds.
    Branch {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Simple indices of the Levi subgroup.
        #[arg(long, allow_hyphen_values = true)]
        levi: String,
    },
    /// dim V_{w_L}(λ) against the Levi Weyl dimension.
    Unirad {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, allow_hyphen_values = true)]
        levi: String,
    },
    /// Degree of n ↦ dim V_w(nλ) by exact finite differences.
    Growth {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Last dilation index; defaults to ℓ(w) + 4.
        #[arg(long = "max-n")]
        max_n: Option<usize>,
    },
    /// Multiplicities on SL3/T by three routes.
    Sl3t {
        #[arg(long, required_unless_present = "grid", allow_hyphen_values = true)]
        k1: Option<i64>,
        #[arg(long, required_unless_present = "grid", allow_hyphen_values = true)]
        k2: Option<i64>,
        #[arg(long, required_unless_present = "grid", allow_hyphen_values = true)]
        l: Option<String>,
        /// Audit every biweight with k_i in [0, KMAX] and l_i in [-LMAX, LMAX].
        #[arg(long, num_args = 2, value_names = ["KMAX", "LMAX"], conflicts_with_all = ["k1", "k2", "l"])]
        grid: Option<Vec<u32>>,
    },
}

impl JobSpec {
    /// Flag form that parses back to `self`, program name included.
    pub fn to_args(&self) -> Vec<String> {
        let mut args = vec![
            "demazure".to_string(),
            "--format".into(),
            self.format.as_str().into(),
        ];
        if let Some(dir) = &self.cache {
            args.push("--cache".into());
            args.push(dir.display().to_string());
        }
        let mut flags: Vec<(&str, String)> = Vec::new();
        let mut switches: Vec<String> = Vec::new();
        let name = match &self.command {
            Command::Char {
                root_type,
                word,
                weight,
                fold,
            }
            | Command::Dim {
                root_type,
                word,
                weight,
                fold,
            } => {
                flags.push(("type", root_type.clone()));
                flags.push(("word", word.clone()));
                flags.push(("weight", weight.clone()));
                if *fold {
                    switches.push("--fold".into());
                }
                if matches!(self.command, Command::Char { .. }) {
                    "char"
                } else {
                    "dim"
                }
            }
            Command::WeightMult {
                root_type,
                weight,
                mu,
            } => {
                flags.push(("type", root_type.clone()));
                flags.push(("weight", weight.clone()));
                flags.push(("mu", mu.clone()));
                "weight-mult"
            }
            Command::Dual { root_type, weight } => {
                flags.push(("type", root_type.clone()));
                flags.push(("weight", weight.clone()));
                "dual"
            }
            Command::Hecke { root_type, word } => {
                flags.push(("type", root_type.clone()));
                flags.push(("word", word.clone()));
                "hecke"
            }
            Command::Branch {
                root_type,
                weight,
                levi,
            }
            | Command::Unirad {
                root_type,
                weight,
                levi,
            } => {
                flags.push(("type", root_type.clone()));
                flags.push(("weight", weight.clone()));
                flags.push(("levi", levi.clone()));
                if matches!(self.command, Command::Branch { .. }) {
                    "branch"
                } else {
                    "unirad"
                }
            }
            Command::Growth {
                root_type,
                word,
                weight,
                max_n,
            } => {
                flags.push(("type", root_type.clone()));
                flags.push(("word", word.clone()));
                flags.push(("weight", weight.clone()));
                if let Some(n) = max_n {
                    flags.push(("max-n", n.to_string()));
                }
                "growth"
            }
            Command::Sl3t { k1, k2, l, grid } => {
                if let Some(k1) = k1 {
                    flags.push(("k1", k1.to_string()));
                }
                if let Some(k2) = k2 {
                    flags.push(("k2", k2.to_string()));
                }
                if let Some(l) = l {
                    flags.push(("l", l.clone()));
                }
                if let Some(g) = grid {
                    switches.push("--grid".into());
                    switches.extend(g.iter().map(u32::to_string));
                }
                "sl3t"
            }
        };
        args.push(name.into());
        for (flag, value) in flags {
            args.push(format!("--{flag}"));
            args.push(value);
        }
        args.extend(switches);
        args
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Failure(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::Inconclusive { .. } => CliError::Failure(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Runs one invocation; returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let job = match JobSpec::try_parse_from(args) {
        Ok(job) => job,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                2
            } else {
                let _ = write!(out, "{e}");
                0
            };
            return code;
        }
    };
    match execute(&job, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(CliError::Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn parse_weight(s: &str) -> CliResult<Weight> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Weight::new(Vec::new()));
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Usage(format!("bad weight coordinate {t:?} in {s:?}")))
        })
        .collect::<CliResult<Vec<_>>>()
        .map(Weight::new)
}

/// Parses 1-based comma-separated indices into 0-based ones.
fn parse_indices(s: &str, rank: usize, what: &str) -> CliResult<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(i) if (1..=rank).contains(&i) => Ok(i - 1),
            _ => Err(CliError::Usage(format!(
                "bad {what} entry {t:?}: expected a simple index in 1..={rank}"
            ))),
        })
        .collect()
}

fn parse_type(s: &str) -> CliResult<RootSystem> {
    Ok(s.parse::<RootSystem>()?)
}

fn parse_weight_for(rs: &RootSystem, s: &str) -> CliResult<Weight> {
    let w = parse_weight(s)?;
    if w.rank() != rs.rank() {
        return Err(CliError::Usage(format!(
            "weight {s:?} has {} coordinates, but {} has rank {}",
            w.rank(),
            rs,
            rs.rank()
        )));
    }
    Ok(w)
}

fn one_based(word: &[usize]) -> Vec<usize> {
    word.iter().map(|i| i + 1).collect()
}

fn joined(coords: &[i64]) -> String {
    coords
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> CliResult<()> {
    let text = serde_json::to_string(value).map_err(|e| CliError::Failure(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

struct Context<'a> {
    cache: Option<DiskCache>,
    err: &'a mut dyn Write,
}

impl Context<'_> {
    fn demazure_character(
        &mut self,
        rs: &RootSystem,
        word: &[usize],
        lam: &Weight,
    ) -> CliResult<Character> {
        let compute = || character::demazure_character(rs, word, lam);
        let c = match &self.cache {
            Some(cache) => cache.get_or_compute(rs, word, lam, self.err, compute)?,
            None => compute()?,
        };
        Ok(c)
    }

    /// Validates and canonicalizes a word, folding it when requested.
    fn resolve_word(&self, rs: &RootSystem, word: &str, fold: bool) -> CliResult<Vec<usize>> {
        let letters = parse_indices(word, rs.rank(), "word")?;
        if fold {
            let w = weyl::demazure_fold(rs, WeylElement::identity(rs), &letters);
            return Ok(w.reduced_word(rs).into_letters());
        }
        let w = WeylElement::from_word(rs, &letters)?;
        if w.length() != letters.len() {
            return Err(Error::NotReduced {
                word: one_based(&letters),
                length: w.length(),
                letters: letters.len(),
            }
            .into());
        }
        Ok(letters)
    }
}

#[derive(Serialize)]
struct HeckeJson {
    root_system: String,
    word: Vec<usize>,
    reduced_word: Vec<usize>,
    length: usize,
}

#[derive(Serialize)]
struct ConstituentJson {
    weight: Vec<i64>,
    multiplicity: String,
    levi_dim: String,
    bound_holds: bool,
}

#[derive(Serialize)]
struct BranchJson {
    root_system: String,
    weight: Vec<i64>,
    levi: Vec<usize>,
    dual_weight: Vec<i64>,
    coset_rep_word: Vec<usize>,
    bound: String,
    constituents: Vec<ConstituentJson>,
    length: String,
    length_bound_holds: bool,
    total_dim: String,
    weyl_dim: String,
    conserved: bool,
}

#[derive(Serialize)]
struct UniradJson {
    root_system: String,
    weight: Vec<i64>,
    levi: Vec<usize>,
    longest_word: Vec<usize>,
    demazure_side: String,
    levi_side: String,
    equal: bool,
}

#[derive(Serialize)]
struct GrowthJson {
    root_system: String,
    word: Vec<usize>,
    weight: Vec<i64>,
    values: Vec<String>,
    degree: usize,
    length_w: usize,
    #[serde(rename = "match")]
    matches: bool,
    bound_holds: bool,
}

/// Returns `Ok(false)` when a verification flag in the output is false.
fn execute(job: &JobSpec, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<bool> {
    let mut ctx = Context {
        cache: job.cache.as_ref().map(DiskCache::new),
        err,
    };
    match &job.command {
        Command::Char {
            root_type,
            word,
            weight,
            fold,
        } => {
            let rs = parse_type(root_type)?;
            let lam = parse_weight_for(&rs, weight)?;
            let letters = ctx.resolve_word(&rs, word, *fold)?;
            let c = ctx.demazure_character(&rs, &letters, &lam)?;
            match job.format {
                Format::Json => emit_json(out, &c.to_json(&rs))?,
                Format::Tsv => {
                    writeln!(out, "weight\tcoeff")?;
                    for (w, k) in c.sorted_terms() {
                        writeln!(out, "{}\t{k}", joined(w.coords()))?;
                    }
                }
            }
            Ok(true)
        }
        Command::Dim {
            root_type,
            word,
            weight,
            fold,
        } => {
            let rs = parse_type(root_type)?;
            let lam = parse_weight_for(&rs, weight)?;
            let letters = ctx.resolve_word(&rs, word, *fold)?;
            let c = ctx.demazure_character(&rs, &letters, &lam)?;
            writeln!(out, "{}", c.dimension())?;
            Ok(true)
        }
        Command::WeightMult {
            root_type,
            weight,
            mu,
        } => {
            let rs = parse_type(root_type)?;
            let lam = parse_weight_for(&rs, weight)?;
            let mu = parse_weight_for(&rs, mu)?;
            let w0 = weyl::longest_element(&rs).reduced_word(&rs);
            let c = ctx.demazure_character(&rs, w0.letters(), &lam)?;
            writeln!(out, "{}", c.coeff(&mu))?;
            Ok(true)
        }
        Command::Dual { root_type, weight } => {
            let rs = parse_type(root_type)?;
            let lam = parse_weight_for(&rs, weight)?;
            let dual = character::dual_weight(&rs, &lam)?;
            match job.format {
                Format::Json => emit_json(out, &dual)?,
                Format::Tsv => writeln!(out, "{}", joined(dual.coords()))?,
            }
            Ok(true)
        }
        Command::Hecke { root_type, word } => {
            let rs = parse_type(root_type)?;
            let letters = parse_indices(word, rs.rank(), "word")?;
            let w = weyl::demazure_fold(&rs, WeylElement::identity(&rs), &letters);
            let reduced = w.reduced_word(&rs);
            match job.format {
                Format::Json => emit_json(
                    out,
                    &HeckeJson {
                        root_system: rs.name(),
                        word: one_based(&letters),
                        reduced_word: reduced.one_based(),
                        length: w.length(),
                    },
                )?,
                Format::Tsv => {
                    writeln!(out, "reduced_word\tlength")?;
                    let word: Vec<String> =
                        reduced.one_based().iter().map(usize::to_string).collect();
                    writeln!(out, "{}\t{}", word.join(","), w.length())?;
                }
            }
            Ok(true)
        }
        Command::Branch {
            root_type,
            weight,
            levi,
        } => {
            let rs = parse_type(root_type)?;
            let lam = parse_weight_for(&rs, weight)?;
            rs.check_dominant(&lam)?;
            let subset = parse_indices(levi, rs.rank(), "levi")?;
            let levi = LeviDatum::new(&rs, &subset)?;
            let result = branching::restrict_to_levi(&lam, &levi)?;
            let bound = branching::levi_bound(&lam, &levi)?;
            let mut constituents = Vec::new();
            for (mu, m) in &result.constituents {
                constituents.push(ConstituentJson {
                    weight: mu.coords().to_vec(),
                    multiplicity: m.to_string(),
                    levi_dim: levi.levi_dim(mu)?.to_string(),
                    bound_holds: m <= &bound,
                });
            }
            let length = result.length();
            let total = result.total_dim(&levi)?;
            let weyl_dim = character::weyl_dim(&rs, &lam)?;
            let report = BranchJson {
                root_system: rs.name(),
                weight: lam.coords().to_vec(),
                levi: one_based(levi.subset()),
                dual_weight: character::dual_weight(&rs, &lam)?.coords().to_vec(),
                coset_rep_word: levi.min_coset_rep().reduced_word(&rs).one_based(),
                bound: bound.to_string(),
                length_bound_holds: length <= bound,
                length: length.to_string(),
                conserved: total == weyl_dim,
                total_dim: total.to_string(),
                weyl_dim: weyl_dim.to_string(),
                constituents,
            };
            let ok = report.length_bound_holds
                && report.conserved
                && report.constituents.iter().all(|c| c.bound_holds);
            match job.format {
                Format::Json => emit_json(out, &report)?,
                Format::Tsv => {
                    writeln!(out, "weight\tmultiplicity\tlevi_dim\tbound\tbound_holds")?;
                    for c in &report.constituents {
                        writeln!(
                            out,
                            "{}\t{}\t{}\t{}\t{}",
                            joined(&c.weight),
                            c.multiplicity,
                            c.levi_dim,
                            report.bound,
                            c.bound_holds
                        )?;
                    }
                }
            }
            Ok(ok)
        }
        Command::Unirad {
            root_type,
            weight,
            levi,
        } => {
            let rs = parse_type(root_type)?;
            let lam = parse_weight_for(&rs, weight)?;
            rs.check_dominant(&lam)?;
            let subset = parse_indices(levi, rs.rank(), "levi")?;
            let levi = LeviDatum::new(&rs, &subset)?;
            let check = branching::unirad_mult_identity(&lam, &levi)?;
            let report = UniradJson {
                root_system: rs.name(),
                weight: lam.coords().to_vec(),
                levi: one_based(levi.subset()),
                longest_word: levi.longest_element().reduced_word(&rs).one_based(),
                demazure_side: check.demazure_side.to_string(),
                levi_side: check.levi_side.to_string(),
                equal: check.equal,
            };
            match job.format {
                Format::Json => emit_json(out, &report)?,
                Format::Tsv => {
                    writeln!(out, "demazure_side\tlevi_side\tequal")?;
                    writeln!(
                        out,
                        "{}\t{}\t{}",
                        report.demazure_side, report.levi_side, report.equal
                    )?;
                }
            }
            Ok(check.equal)
        }
        Command::Growth {
            root_type,
            word,
            weight,
            max_n,
        } => {
            let rs = parse_type(root_type)?;
            let lam = parse_weight_for(&rs, weight)?;
            let letters = ctx.resolve_word(&rs, word, false)?;
            let w = WeylElement::from_word(&rs, &letters)?;
            let last = max_n.unwrap_or(w.length() + growth::DEFAULT_EXTRA_SAMPLES);
            let seq = growth::dimension_sequence(&rs, &w, &lam, last)?;
            let degree = growth::growth_degree(&seq)?;
            let bound_holds = degree <= w.length();
            match job.format {
                Format::Json => emit_json(
                    out,
                    &GrowthJson {
                        root_system: rs.name(),
                        word: one_based(&letters),
                        weight: lam.coords().to_vec(),
                        values: seq.values.iter().map(BigInt::to_string).collect(),
                        degree,
                        length_w: w.length(),
                        matches: degree == w.length(),
                        bound_holds,
                    },
                )?,
                Format::Tsv => write!(out, "{}", growth::to_tsv(&seq))?,
            }
            Ok(bound_holds)
        }
        Command::Sl3t { k1, k2, l, grid } => {
            let ctx = Sl3Torus::new();
            if let Some(g) = grid {
                return sl3t_grid(&ctx, g[0] as i64, g[1] as i64, out);
            }
            let (k1, k2) = (k1.expect("required by clap"), k2.expect("required by clap"));
            let l = parse_weight(l.as_deref().expect("required by clap"))?;
            let l: [i64; 3] = l
                .coords()
                .try_into()
                .map_err(|_| CliError::Usage("--l needs exactly three integers".into()))?;
            let bw = Biweight::new(k1, k2, l)?;
            let audit = ctx.audit(&bw)?;
            match job.format {
                Format::Json => emit_json(out, &audit.to_json())?,
                Format::Tsv => {
                    writeln!(out, "{SL3T_HEADER}")?;
                    writeln!(out, "{}", sl3t_row(&bw, &audit))?;
                }
            }
            Ok(audit.agree)
        }
    }
}

const SL3T_HEADER: &str =
    "k1\tk2\tl1\tl2\tl3\tmember\tn\tclosed_mult\tweight_mult\ttheorem2_mult\tagree";

fn sl3t_row(bw: &Biweight, a: &crate::sl3t::Audit) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        bw.k1,
        bw.k2,
        bw.l[0],
        bw.l[1],
        bw.l[2],
        a.member,
        a.n_string(),
        a.closed_mult,
        a.weight_mult,
        a.theorem2_mult,
        a.agree
    )
}

/// Streams one row per biweight, in `(k1, k2, l1, l2, l3)` order. Rows for a
/// fixed `(k1, k2)` are computed in parallel and written in order.
fn sl3t_grid(ctx: &Sl3Torus, kmax: i64, lmax: i64, out: &mut dyn Write) -> CliResult<bool> {
    writeln!(out, "{SL3T_HEADER}")?;
    let ls: Vec<[i64; 3]> = (-lmax..=lmax)
        .flat_map(|a| (-lmax..=lmax).flat_map(move |b| (-lmax..=lmax).map(move |c| [a, b, c])))
        .collect();
    let mut all_agree = true;
    for k1 in 0..=kmax {
        for k2 in 0..=kmax {
            let rows = ls
                .par_iter()
                .map(|&l| {
                    let bw = Biweight::new(k1, k2, l)?;
                    let audit = ctx.audit(&bw)?;
                    Ok((audit.agree, sl3t_row(&bw, &audit)))
                })
                .collect::<crate::Result<Vec<_>>>()?;
            for (agree, row) in rows {
                all_agree &= agree;
                writeln!(out, "{row}")?;
            }
        }
    }
    Ok(all_agree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["demazure"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn dim_of_adjoint() {
        let (code, out, _) =
            run_capture(&["dim", "--type", "A2", "--word", "1,2,1", "--weight", "1,1"]);
        assert_eq!((code, out.as_str()), (0, "8\n"));
    }

    #[test]
    fn empty_word_character() {
        let (code, out, _) = run_capture(&["char", "--type", "A1", "--word", "", "--weight", "3"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{\"root_system\":\"A1\",\"terms\":[{\"weight\":[3],\"coeff\":\"1\"}]}\n"
        );
    }

    #[test]
    fn sl3t_single() {
        let (code, out, _) = run_capture(&["sl3t", "--k1", "1", "--k2", "1", "--l", "0,0,0"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{\"member\":true,\"n\":\"1\",\"closed_mult\":\"2\",\"weight_mult\":\"2\",\"theorem2_mult\":\"2\",\"agree\":true}\n"
        );
        let (code, out, _) = run_capture(&["sl3t", "--k1", "0", "--k2", "1", "--l", "-1,0,0"]);
        assert_eq!(code, 0, "{out}");
    }

    #[test]
    fn usage_errors_exit_two() {
        let cases: &[&[&str]] = &[
            &["dim", "--type", "Q2", "--word", "1", "--weight", "1,1"],
            &["dim", "--type", "A2", "--word", "1,1", "--weight", "1,1"],
            &["dim", "--type", "A2", "--word", "1", "--weight", "-1,1"],
            &["dim", "--type", "A2", "--word", "3", "--weight", "1,1"],
            &["dim", "--type", "A2", "--word", "1", "--weight", "1,1,1"],
            &[
                "growth", "--type", "A2", "--word", "1,2,1", "--weight", "1,1", "--max-n", "3",
            ],
            &["frobnicate"],
            &["dim", "--type", "A2"],
        ];
        for args in cases {
            let (code, _, err) = run_capture(args);
            assert_eq!(code, 2, "{args:?}: {err}");
            assert!(!err.is_empty());
        }
        let (_, _, err) = run_capture(cases[0]);
        assert!(err.contains("Q2"));
        let (_, _, err) = run_capture(cases[1]);
        assert!(err.contains("not reduced"));
        let (_, _, err) = run_capture(cases[2]);
        assert!(err.contains("not dominant"));
    }

    #[test]
    fn branch_reports_tight_bound() {
        let (code, out, _) =
            run_capture(&["branch", "--type", "A2", "--weight", "1,0", "--levi", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"bound\":\"2\""), "{out}");
        assert!(out.contains("\"length\":\"2\""), "{out}");
    }

    #[test]
    fn jobspec_flag_roundtrip_examples() {
        let lines: &[&[&str]] = &[
            &["dim", "--type", "A2", "--word", "1,2,1", "--weight", "1,1"],
            &[
                "--format", "tsv", "char", "--type", "A1", "--word", "", "--weight", "3", "--fold",
            ],
            &[
                "--cache", "/tmp/x", "sl3t", "--k1", "1", "--k2", "1", "--l", "-1,0,0",
            ],
            &["sl3t", "--grid", "2", "1"],
            &[
                "growth", "--type", "B2", "--word", "1", "--weight", "1,1", "--max-n", "6",
            ],
            &[
                "branch", "--type", "B3", "--weight", "1,0,1", "--levi", "1,3",
            ],
        ];
        for line in lines {
            let mut argv = vec!["demazure"];
            argv.extend_from_slice(line);
            let job = JobSpec::try_parse_from(argv).unwrap();
            let again = JobSpec::try_parse_from(job.to_args()).unwrap();
            assert_eq!(job, again, "{:?}", job.to_args());
        }
    }
}
