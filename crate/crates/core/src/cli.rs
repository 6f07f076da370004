//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
//! 3 input not distinct enough, 4 inverse infeasible (a condition `c_s`
//! fails).

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bijection::{trace, BijectionError, Direction};
use crate::enumeration::Filter;
use crate::partition::{DistinctnessGap, Partition, ResiduePermutation};
use crate::verification::verify_range;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NOT_DISTINCT: u8 = 3;
pub const EXIT_INFEASIBLE: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "bressoud",
    version,
    about = "Bijections between d-distinct partitions and residue-threshold partitions"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Map a d-distinct partition to its image.
    Map {
        /// Comma-separated parts, largest first; "-" for the empty partition.
        partition: String,
        #[command(flatten)]
        perm: PermArgs,
        /// Print every step as a diagram.
        #[arg(long)]
        trace: bool,
    },
    /// Map a target partition back to its d-distinct preimage.
    Unmap {
        partition: String,
        #[command(flatten)]
        perm: PermArgs,
        #[arg(long)]
        trace: bool,
    },
    /// List or count the partitions of N, optionally filtered.
    Enumerate {
        n: u64,
        #[arg(long, value_enum, default_value_t = FilterKind::All)]
        filter: FilterKind,
        #[command(flatten)]
        perm: PermArgs,
        /// Bound for the at-most-parts and parts-at-most filters.
        #[arg(long)]
        m: Option<u64>,
        /// Print only the number of matching partitions.
        #[arg(long)]
        count: bool,
    },
    /// Draw the Young diagram of a partition.
    Render { partition: String },
    /// Check every identity for n <= N_MAX, d <= D_MAX and all permutations.
    Verify {
        #[arg(long)]
        n_max: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=8))]
        d_max: u64,
        /// Print only the summary line.
        #[arg(long)]
        summary_only: bool,
    },
}

#[derive(Debug, Args)]
struct PermArgs {
    /// Distinctness gap.
    #[arg(long)]
    d: Option<u64>,
    /// Residue permutation as its image list "pi(0),...,pi(d-1)".
    #[arg(long)]
    pi: Option<String>,
    /// Shorthand for --d 2 --pi 1,0.
    #[arg(long, conflicts_with_all = ["dual", "pi"])]
    bressoud: bool,
    /// Shorthand for --d 2 --pi 0,1.
    #[arg(long, conflicts_with = "pi")]
    dual: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FilterKind {
    All,
    DDistinct,
    Target,
    AtMostParts,
    PartsAtMost,
    AllOdd,
    EvenPartCount,
    #[value(name = "1-distinct", alias = "distinct")]
    Distinct,
}

enum Failure {
    Usage(String),
    Map(BijectionError),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

impl PermArgs {
    /// No `--pi` means the identity permutation of `0..d`.
    fn resolve(&self) -> Result<ResiduePermutation, Failure> {
        let pi = if self.bressoud {
            Some(ResiduePermutation::bressoud_original())
        } else if self.dual {
            Some(ResiduePermutation::bressoud_dual())
        } else {
            self.pi
                .as_deref()
                .map(|s| s.parse::<ResiduePermutation>())
                .transpose()
                .map_err(usage)?
        };
        match (pi, self.d) {
            (Some(pi), Some(d)) if pi.d() as u64 != d => Err(usage(format!(
                "permutation {pi} has {} entries but --d is {d}",
                pi.d()
            ))),
            (Some(pi), _) => Ok(pi),
            (None, Some(d)) => {
                DistinctnessGap::new(d).map_err(usage)?;
                ResiduePermutation::identity(d as usize).map_err(usage)
            }
            (None, None) => Err(usage("one of --d, --pi, --bressoud or --dual is required")),
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    s.parse().map_err(usage)
}

/// Parses `args` (program name first) and executes the command, writing to
/// `out` and `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(rendered.as_bytes());
                EXIT_OK
            };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Map(e @ BijectionError::NotDistinct { .. }) => {
                    (EXIT_NOT_DISTINCT, e.to_string())
                }
                Failure::Map(e @ BijectionError::ConditionViolated { .. }) => {
                    (EXIT_INFEASIBLE, e.to_string())
                }
                Failure::Io(e) => (EXIT_VERIFY_FAILED, e.to_string()),
            };
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

fn execute(cli: Cli, out: &mut impl Write) -> Result<u8, Failure> {
    let json = cli.json;
    match cli.command {
        Command::Map {
            partition,
            perm,
            trace: show,
        } => apply(out, &partition, &perm, Direction::Forward, show, json),
        Command::Unmap {
            partition,
            perm,
            trace: show,
        } => apply(out, &partition, &perm, Direction::Inverse, show, json),
        Command::Enumerate {
            n,
            filter,
            perm,
            m,
            count,
        } => {
            let filter = build_filter(filter, &perm, m)?;
            enumerate(out, n, &filter, count, json)
        }
        Command::Render { partition } => {
            let p = parse_partition(&partition)?;
            if json {
                let rows: Vec<String> = p.render_young().lines().map(str::to_owned).collect();
                let v = json!({ "partition": p, "weight": p.weight(), "rows": rows });
                writeln!(out, "{v}")?;
            } else {
                out.write_all(p.render_young().as_bytes())?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            n_max,
            d_max,
            summary_only,
        } => {
            let report = verify_range(n_max, d_max as usize);
            if !summary_only {
                for r in &report.reports {
                    writeln!(out, "{}", r.to_json_line())?;
                }
            }
            writeln!(out, "{}", json!({ "summary": report.summary }))?;
            Ok(if report.all_pass() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            })
        }
    }
}

fn apply(
    out: &mut impl Write,
    partition: &str,
    perm: &PermArgs,
    direction: Direction,
    show: bool,
    json: bool,
) -> Result<u8, Failure> {
    let p = parse_partition(partition)?;
    let pi = perm.resolve()?;
    let t = trace(&p, &pi, direction).map_err(Failure::Map)?;
    if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string(&t).expect("trace serializes")
        )?;
    } else if show {
        out.write_all(t.render().as_bytes())?;
    } else {
        writeln!(out, "{}", t.output)?;
    }
    Ok(EXIT_OK)
}

fn build_filter(kind: FilterKind, perm: &PermArgs, m: Option<u64>) -> Result<Filter, Failure> {
    let need_m = || m.ok_or_else(|| usage("this filter requires --m"));
    Ok(match kind {
        FilterKind::All => Filter::All,
        FilterKind::DDistinct => {
            let d = match perm.d {
                Some(d) => d,
                None => perm.resolve()?.d() as u64,
            };
            Filter::DDistinct(DistinctnessGap::new(d).map_err(usage)?)
        }
        FilterKind::Target => Filter::Target(perm.resolve()?),
        FilterKind::AtMostParts => Filter::AtMostParts(need_m()? as usize),
        FilterKind::PartsAtMost => Filter::PartsAtMost(need_m()?),
        FilterKind::AllOdd => Filter::AllOdd,
        FilterKind::EvenPartCount => Filter::EvenPartCount,
        FilterKind::Distinct => Filter::Distinct,
    })
}

fn enumerate(
    out: &mut impl Write,
    n: u64,
    filter: &Filter,
    count_only: bool,
    json: bool,
) -> Result<u8, Failure> {
    if count_only {
        let c = filter.count(n);
        if json {
            writeln!(out, "{}", json!({ "n": n, "count": c }))?;
        } else {
            writeln!(out, "{c}")?;
        }
    } else if json {
        let parts: Vec<Partition> = filter.stream(n).collect();
        writeln!(
            out,
            "{}",
            json!({ "n": n, "count": parts.len(), "partitions": parts })
        )?;
    } else {
        for p in filter.stream(n) {
            writeln!(out, "{p}")?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("bressoud").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn map_and_unmap() {
        assert_eq!(call(&["map", "6,3", "--d", "2", "--pi", "0,1"]).1, "5,4\n");
        assert_eq!(call(&["map", "-", "--d", "3", "--pi", "2,0,1"]).1, "-\n");
        assert_eq!(call(&["map", "8,1", "--dual"]).1, "6,3\n");
        assert_eq!(call(&["unmap", "5,4", "--pi", "0,1"]).1, "6,3\n");
        assert_eq!(call(&["unmap", "-", "--d", "2", "--pi", "1,0"]).1, "-\n");
        // identity permutation by default
        assert_eq!(call(&["map", "7,4", "--d", "3"]).0, EXIT_OK);
    }

    #[test]
    fn exit_codes() {
        let (code, out, err) = call(&["map", "5,4,1", "--d", "2", "--pi", "0,1"]);
        assert_eq!(code, EXIT_NOT_DISTINCT);
        assert!(out.is_empty());
        assert!(err.contains("not 2-distinct at parts 5,4"), "{err}");

        let (code, _, err) = call(&["unmap", "2,1", "--d", "2", "--pi", "0,1"]);
        assert_eq!(code, EXIT_INFEASIBLE);
        assert!(err.contains("condition c_1 violated"), "{err}");

        let (code, _, err) = call(&["unmap", "3,3", "--dual"]);
        assert_eq!(code, EXIT_NOT_DISTINCT);
        assert!(err.contains("not 1-distinct at parts 3,3"), "{err}");

        for bad in [
            &["map", "1,2", "--d", "2"][..],
            &["map", "x", "--d", "2"],
            &["map", "6,3"],
            &["map", "6,3", "--d", "3", "--pi", "0,1"],
            &["map", "6,3", "--pi", "0,0"],
            &["map", "6,3", "--d", "0"],
            &["map", "6,3", "--bressoud", "--dual"],
            &["enumerate", "4", "--filter", "nonsense"],
            &["enumerate", "4", "--filter", "parts-at-most"],
            &["enumerate", "4", "--filter", "target"],
            &["verify", "--n-max", "3", "--d-max", "0"],
            &["render", "0"],
            &["frobnicate"],
        ] {
            assert_eq!(call(bad).0, EXIT_USAGE, "{bad:?}");
        }
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn enumerate_command() {
        assert_eq!(call(&["enumerate", "4", "--count"]).1, "5\n");
        assert_eq!(
            call(&["enumerate", "4", "--filter", "even-part-count", "--count"]).1,
            "3\n"
        );
        assert_eq!(
            call(&["enumerate", "4", "--filter", "all-odd", "--count"]).1,
            "2\n"
        );
        assert_eq!(
            call(&["enumerate", "4", "--filter", "1-distinct", "--count"]).1,
            "2\n"
        );
        assert_eq!(
            call(&["enumerate", "4", "--filter", "distinct", "--count"]).1,
            "2\n"
        );
        assert_eq!(
            call(&["enumerate", "9", "--filter", "d-distinct", "--d", "2"]).1,
            "9\n8,1\n7,2\n6,3\n5,3,1\n"
        );
        assert_eq!(
            call(&["enumerate", "9", "--filter", "target", "--dual"]).1,
            "9\n7,2\n6,3\n5,4\n5,3,1\n"
        );
        assert_eq!(
            call(&["enumerate", "4", "--filter", "at-most-parts", "--m", "2"]).1,
            "4\n3,1\n2,2\n"
        );
        assert_eq!(
            call(&["enumerate", "4", "--filter", "parts-at-most", "--m", "2"]).1,
            "2,2\n2,1,1\n1,1,1,1\n"
        );
        assert_eq!(call(&["enumerate", "0"]).1, "-\n");
        assert_eq!(
            call(&["enumerate", "3", "--json"]).1,
            "{\"count\":3,\"n\":3,\"partitions\":[[3],[2,1],[1,1,1]]}\n"
        );
    }

    #[test]
    fn render_command() {
        assert_eq!(call(&["render", "5,4,1"]).1, "#####\n####\n#\n");
        assert_eq!(
            call(&["render", "-"]),
            (EXIT_OK, String::new(), String::new())
        );
        assert_eq!(
            call(&["render", "2,1", "--json"]).1,
            "{\"partition\":[2,1],\"rows\":[\"##\",\"#\"],\"weight\":3}\n"
        );
    }

    #[test]
    fn verify_command() {
        let (code, out, _) = call(&["verify", "--n-max", "0", "--d-max", "1"]);
        assert_eq!(code, EXIT_OK);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        let report: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(report["passed"], true);
        let summary: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
        assert_eq!(summary["summary"]["total"], 1);
        assert_eq!(summary["summary"]["failed"], 0);

        let (code, out, _) = call(&["verify", "--n-max", "6", "--d-max", "3", "--summary-only"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), 1);
    }
}
