//! Command-line front end. [`run`] never exits the process, so it can be
//! driven from tests.

use std::path::Path;

use clap::{Args, Parser, Subcommand};

use crate::algebra::{homology, intersection_form, orient};
use crate::bundled;
use crate::complex::io::{facet_universe, parse_cycles, parse_facets};
use crate::complex::SimplicialComplex;
use crate::enumerate::{enumerate, Filter, SearchConfig};
use crate::error::{Error, Result};
use crate::report::{self, Format};
use crate::symmetry::{automorphisms, group_analysis, is_isomorphic, multipliers, MATERIALIZATION_CAP};
use crate::topology::{verify_manifold_with, BistellarConfig, LinkStrategy, ManifoldVerdict, VerifyOptions};

#[derive(Parser, Debug)]
#[command(name = "s2s2", version, about = "Cyclic triangulations of S2 x S2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// text or json.
    #[arg(long, default_value = "text")]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, short)]
    output: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand a .dc file into facets.
    Expand {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Re-run the cyclic candidate search.
    Enumerate {
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        d: usize,
        #[arg(long, default_value_t = 6)]
        orbits: usize,
        /// Required diagonal, e.g. `0,6`; `none` drops the requirement.
        #[arg(long, default_value = "0,6")]
        diagonal: String,
        /// Comma-separated filters: ridge, edgelink, degree, ds.
        #[arg(long, default_value = "ridge,edgelink")]
        filters: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Check that every link is a sphere.
    Verify {
        input: String,
        /// auto, ballunion or bistellar.
        #[arg(long, default_value = "auto")]
        strategy: LinkStrategy,
        /// Flip budget per link.
        #[arg(long, default_value_t = BistellarConfig::default().budget)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print every certificate with its witness.
        #[arg(long)]
        witness: bool,
        /// Exit with status 2 unless the verdict is yes.
        #[arg(long)]
        strict: bool,
        /// Check every face instead of one per cyclic orbit.
        #[arg(long)]
        full: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Automorphism group and its structure.
    Aut {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Integral homology and, for closed orientable 4-complexes, the
    /// intersection form.
    Homology {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Search for a vertex bijection between two complexes.
    Iso {
        left: String,
        right: String,
        #[command(flatten)]
        common: Common,
    },
}

/// Reads a `.dc` or `.fct` file. A bare bundled name (`m1` ... `m6`,
/// `r41`) that is not an existing path loads the bundled complex.
pub fn load_complex(input: &str) -> Result<SimplicialComplex> {
    let path = Path::new(input);
    let (text, is_fct) = if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{input}: {e}")))?;
        (text, path.extension().is_some_and(|e| e == "fct"))
    } else if let Some(src) = bundled::source(input) {
        (src.to_string(), false)
    } else {
        return Err(Error::Io(format!("{input}: no such file or bundled complex")));
    };
    if is_fct {
        let n = facet_universe(&text)?;
        SimplicialComplex::from_facets(n, parse_facets(&text, n)?)
    } else {
        let (_, cycles) = parse_cycles(&text)?;
        SimplicialComplex::from_cycles(&cycles)
    }
}

fn parse_diagonal(s: &str) -> Result<Option<(u32, u32)>> {
    if s == "none" {
        return Ok(None);
    }
    let bad = || Error::InvalidConfig(format!("bad diagonal {s:?}, expected a,b"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok(Some((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)))
}

fn parse_filters(s: &str) -> Result<Vec<Filter>> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect()
}

/// Runs one command; returns the exit status and the text for stdout.
/// Status 1 marks usage and input errors, 2 a failed `--strict` check.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match execute(cli.command) {
        Ok((code, text, output)) => match output {
            Some(path) => match std::fs::write(&path, text) {
                Ok(()) => (code, String::new()),
                Err(e) => (1, format!("error: {path}: {e}\n")),
            },
            None => (code, text),
        },
        Err(e) => (1, format!("error: {e}\n")),
    }
}

fn execute(cmd: Command) -> Result<(i32, String, Option<String>)> {
    match cmd {
        Command::Expand { input, common } => {
            let c = load_complex(&input)?;
            Ok((0, report::render_expand(&c, common.format), common.output))
        }
        Command::Enumerate { n, d, orbits, diagonal, filters, jobs, common } => {
            let mut cfg = SearchConfig::new(n, d, orbits).with_filters(parse_filters(&filters)?).with_parallelism(jobs);
            cfg.required_diagonal = parse_diagonal(&diagonal)?.map(|(a, b)| (a.min(b), a.max(b)));
            let cands = enumerate(&cfg)?;
            Ok((0, report::render_enumerate(&cands, &cfg, common.format), common.output))
        }
        Command::Verify { input, strategy, budget, seed, witness, strict, full, jobs, common } => {
            let c = load_complex(&input)?;
            let opts = VerifyOptions {
                use_transitivity: !full,
                strategy,
                bistellar: BistellarConfig { budget, seed, ..BistellarConfig::default() },
                jobs,
            };
            let r = verify_manifold_with(&c, &opts)?;
            let code = if strict && r.is_manifold != ManifoldVerdict::Yes { 2 } else { 0 };
            Ok((code, report::render_verify(&r, witness, common.format), common.output))
        }
        Command::Aut { input, common } => {
            let c = load_complex(&input)?;
            let g = automorphisms(&c)?;
            let fp = group_analysis(&g, Some(&c), MATERIALIZATION_CAP)?;
            let m = multipliers(&c).ok();
            Ok((0, report::render_aut(&g, &fp, m.as_deref(), common.format), common.output))
        }
        Command::Homology { input, common } => {
            let c = load_complex(&input)?;
            let p = homology(&c);
            // The form needs a fundamental class; skip it otherwise.
            let form = match orient(&c) {
                Ok(Some(_)) if c.dim() == Some(4) => intersection_form(&c).ok(),
                _ => None,
            };
            Ok((0, report::render_homology(&p, form.as_ref(), common.format), common.output))
        }
        Command::Iso { left, right, common } => {
            let (a, b) = (load_complex(&left)?, load_complex(&right)?);
            Ok((0, report::render_iso(&is_isomorphic(&a, &b), common.format), common.output))
        }
    }
}
