use std::ffi::OsString;
use std::path::PathBuf;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::oracles::Strategy;
use crate::pattern::LengthPattern;
use crate::profile::Natural;
use crate::solver::SolveMode;

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(
    name = "hindman-lab",
    version,
    about = "Restricted finite sums: witnesses, solutions, lower bounds"
)]
pub struct Command {
    /// Worker threads for searches. Never changes results.
    #[arg(long, global = true, env = "HINDMAN_LAB_WORKERS", default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,
    /// Step budget for the search.
    #[arg(long = "budget-steps", global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_steps: Option<u64>,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Verb {
    /// Binary exponents, λ, μ and gaps of n.
    Profile {
        #[arg(value_parser = parse_natural)]
        n: Natural,
    },
    /// Least n such that every r-coloring of [1, n] has a monochromatic instance.
    Witness(WitnessArgs),
    /// Least monochromatic instance of a pattern in a coloring table.
    FindConfig(FindConfigArgs),
    /// An apart set H whose restricted sums are monochromatic.
    Solve(SolveArgs),
    /// Short and very short gaps of n and its VSG color.
    Vsg {
        #[arg(long)]
        schedule: PathBuf,
        #[arg(long, value_parser = parse_natural)]
        n: Natural,
    },
    /// Sum identity for (m, n), or parity claims for a solution.
    Claims(ClaimsArgs),
    /// Recover K-membership from a solution or run the full reproduction.
    Decode(DecodeArgs),
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct WitnessArgs {
    #[arg(long, value_parser = parse_pattern)]
    pub pattern: LengthPattern,
    #[arg(long, default_value_t = 2)]
    pub colors: u32,
    #[arg(long = "max", default_value_t = 32, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: u64,
    #[arg(long, value_enum, default_value_t = StrategyArg::Dfs)]
    pub strategy: StrategyArg,
    /// Only admit instances with pairwise distinct members.
    #[arg(long)]
    pub require_distinct: bool,
    /// Write the avoiding certificate table here.
    #[arg(long)]
    pub certificate: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct FindConfigArgs {
    #[arg(long, value_parser = parse_pattern)]
    pub pattern: LengthPattern,
    /// Coloring table file.
    #[arg(long)]
    pub coloring: PathBuf,
    #[arg(long)]
    pub require_distinct: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct SolveArgs {
    #[arg(long, value_parser = parse_pattern)]
    pub pattern: LengthPattern,
    /// zero | parity | popcount | table:<path> | vsg:<schedule path>
    #[arg(long)]
    pub coloring: ColoringSpec,
    #[arg(long, default_value = "direct")]
    pub mode: SolveMode,
    /// count[:start[:stride]] for the ground {2^start, 2^(start+stride), ...}.
    #[arg(long, default_value = "24")]
    pub ground: GroundSpec,
    #[arg(long, default_value_t = 6)]
    pub target: usize,
    /// Search bound for the core witness number.
    #[arg(long = "max", default_value_t = 32)]
    pub max_n: usize,
    #[arg(long, default_value_t = 0)]
    pub stage_slack: usize,
    #[arg(long)]
    pub require_distinct: bool,
    /// Write the solution document here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct ClaimsArgs {
    #[arg(long)]
    pub schedule: PathBuf,
    #[arg(long, value_parser = parse_natural, requires = "n", conflicts_with = "solution")]
    pub m: Option<Natural>,
    #[arg(long, value_parser = parse_natural, requires = "m")]
    pub n: Option<Natural>,
    /// Solution document with (a, b) parameters.
    #[arg(long, required_unless_present = "m")]
    pub solution: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct DecodeArgs {
    #[arg(long)]
    pub schedule: PathBuf,
    /// Decoding context document.
    #[arg(
        long,
        required_unless_present = "reproduce",
        conflicts_with = "reproduce"
    )]
    pub context: Option<PathBuf>,
    #[arg(long, conflicts_with = "upto")]
    pub x: Option<u64>,
    /// Decode every x below this bound.
    #[arg(long)]
    pub upto: Option<u64>,
    /// Solve, check the claims and decode from scratch.
    #[arg(long)]
    pub reproduce: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Dfs,
    Full,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Dfs => Strategy::IncrementalDfs,
            StrategyArg::Full => Strategy::FullEnumeration,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringSpec {
    Zero,
    Parity,
    Popcount,
    Table(PathBuf),
    Vsg(PathBuf),
}

impl FromStr for ColoringSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            None => match s {
                "zero" => Ok(ColoringSpec::Zero),
                "parity" => Ok(ColoringSpec::Parity),
                "popcount" => Ok(ColoringSpec::Popcount),
                _ => Err(Error::Parse(format!("unknown coloring {s:?}"))),
            },
            Some(("table", p)) if !p.is_empty() => Ok(ColoringSpec::Table(p.into())),
            Some(("vsg", p)) if !p.is_empty() => Ok(ColoringSpec::Vsg(p.into())),
            _ => Err(Error::Parse(format!("unknown coloring {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroundSpec {
    pub count: usize,
    pub start: u64,
    pub stride: u64,
}

impl FromStr for GroundSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad ground {s:?}, expected count[:start[:stride]]"));
        let mut it = s.split(':').map(|t| t.parse::<u64>().map_err(|_| bad()));
        let count = it.next().ok_or_else(bad)??;
        let start = it.next().transpose()?.unwrap_or(0);
        let stride = it.next().transpose()?.unwrap_or(1);
        if it.next().is_some() || count == 0 || stride == 0 {
            return Err(bad());
        }
        Ok(GroundSpec {
            count: count as usize,
            start,
            stride,
        })
    }
}

fn parse_pattern(s: &str) -> Result<LengthPattern> {
    let p: LengthPattern = s.parse()?;
    p.validate()?;
    Ok(p)
}

fn parse_natural(s: &str) -> Result<Natural> {
    s.parse::<Natural>()
        .map_err(|_| Error::Parse(format!("not a natural number: {s:?}")))
}

pub(crate) enum ParseFailure {
    /// `--help` or `--version` output.
    Display(String),
    Invalid(Error),
}

pub(crate) fn try_parse<I, S>(argv: I) -> std::result::Result<Command, ParseFailure>
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let args =
        std::iter::once(OsString::from("hindman-lab")).chain(argv.into_iter().map(Into::into));
    Command::try_parse_from(args).map_err(|e| match e.kind() {
        ErrorKind::DisplayHelp
        | ErrorKind::DisplayVersion
        | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            ParseFailure::Display(e.render().to_string())
        }
        _ => ParseFailure::Invalid(Error::Parse(first_line(&e.render().to_string()))),
    })
}

fn first_line(s: &str) -> String {
    s.lines()
        .next()
        .unwrap_or_default()
        .trim_start_matches("error: ")
        .to_string()
}

/// Parses arguments given without the program name. The error message names
/// the offending token.
pub fn parse_command<I, S>(argv: I) -> Result<Command>
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    try_parse(argv).map_err(|f| match f {
        ParseFailure::Display(text) => Error::Parse(text),
        ParseFailure::Invalid(e) => e,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_and_witness() {
        let c = parse_command(["profile", "10"]).unwrap();
        assert_eq!(
            c.verb,
            Verb::Profile {
                n: Natural::from(10u8)
            }
        );
        let c = parse_command([
            "witness",
            "--pattern",
            "vdw:3",
            "--colors",
            "2",
            "--max",
            "12",
        ])
        .unwrap();
        let Verb::Witness(w) = c.verb else { panic!() };
        assert_eq!(
            (w.pattern, w.colors, w.max_n),
            (LengthPattern::Vdw { len: 3 }, 2, 12)
        );
    }

    #[test]
    fn errors_name_the_token() {
        for (argv, token) in [
            (vec!["witness", "--pattern", "vdw:zero"], "vdw:zero"),
            (vec!["frobnicate"], "frobnicate"),
            (
                vec!["solve", "--pattern", "schur", "--coloring", "stripes"],
                "stripes",
            ),
            (
                vec!["witness", "--pattern", "schur", "--budget-steps", "0"],
                "0",
            ),
            (
                vec![
                    "solve",
                    "--pattern",
                    "schur",
                    "--coloring",
                    "zero",
                    "--ground",
                    "3:x",
                ],
                "3:x",
            ),
        ] {
            let e = parse_command(argv.clone()).unwrap_err();
            assert!(e.to_string().contains(token), "{argv:?}: {e}");
        }
    }

    #[test]
    fn ground_and_coloring_specs() {
        assert_eq!(
            "5".parse::<GroundSpec>().unwrap(),
            GroundSpec {
                count: 5,
                start: 0,
                stride: 1
            }
        );
        assert_eq!(
            "5:2:3".parse::<GroundSpec>().unwrap(),
            GroundSpec {
                count: 5,
                start: 2,
                stride: 3
            }
        );
        assert!("5:2:0".parse::<GroundSpec>().is_err());
        assert_eq!(
            "vsg:k.txt".parse::<ColoringSpec>().unwrap(),
            ColoringSpec::Vsg("k.txt".into())
        );
        assert!("table:".parse::<ColoringSpec>().is_err());
    }
}
