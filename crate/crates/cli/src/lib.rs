//! Command-line front end for `farey-core`.
//!
//! [`run`] does all the work and writes to caller-supplied streams, so the
//! binary is a thin wrapper and tests can drive commands in-process.

mod check;
pub mod render;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use farey_core::{
    all_geodesics, cf_eval, cf_expand, classify_02, classify_03, distance, ladder,
    make_strongly_keen_example, Caps, CompositeLink, ContinuedFraction, Error, ExtendedRational,
    TwoBridgeLink,
};
use num_bigint::BigInt;
use serde::Serialize;

use report::{CfReport, DistanceReport, Envelope, GenKeenReport, GeodesicsReport, LadderReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "farey", version, about = "Farey graph geodesics, ladders and 2-bridge splittings")]
pub struct Cli {
    /// Print the versioned JSON schema instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Re-verify the answer with the brute-force oracle; fail on mismatch.
    #[arg(long, global = true)]
    pub oracle: bool,

    /// Maximum ladder size in triangles (overrides FAREY_LADDER_CAP).
    #[arg(long, global = true, value_name = "N")]
    pub ladder_cap: Option<usize>,

    /// Maximum number of enumerated geodesics (overrides FAREY_GEO_CAP).
    #[arg(long, global = true, value_name = "N")]
    pub geo_cap: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical continued fraction of a slope in [0,1).
    Cf {
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// Evaluate a continued fraction given as a1,a2,...
    Eval { entries: String },
    /// Farey graph distance between two slopes.
    Distance {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Every geodesic between two slopes.
    Geodesics {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// The ladder of triangles between two slopes.
    Ladder {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        /// Draw the ladder instead of listing it.
        #[arg(long, value_enum)]
        render: Option<Render>,
    },
    /// Distance and keenness of the (0,2)-splitting of S(q,p).
    #[command(name = "classify-2bridge")]
    Classify2Bridge {
        q: String,
        p: String,
        /// Also list the realizing geodesics.
        #[arg(long)]
        geodesics: bool,
    },
    /// Distance and keenness of the (0,3)-splitting of a composite link.
    #[command(name = "classify-03")]
    Classify03 {
        /// Summands as q/p, at most two.
        #[arg(required = true, num_args = 1..=2, value_name = "Q/P")]
        summands: Vec<String>,
    },
    /// A 2-bridge link whose (0,2)-splitting is strongly keen of distance n.
    #[command(name = "gen-keen")]
    GenKeen {
        n: usize,
        /// The n-1 continued fraction entries, each at least 3 (default all 3).
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        entries: Option<Vec<u64>>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Render {
    Ascii,
    Svg,
}

/// Failure of one invocation.
#[derive(Debug)]
enum Failure {
    Core(Error),
    Mismatch(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Core(e) if e.is_resource() => EXIT_RESOURCE,
            Failure::Core(_) | Failure::Mismatch(_) => EXIT_DOMAIN,
            Failure::Usage(_) => EXIT_USAGE,
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code. Data goes to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{shown}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{shown}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli, err) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            let _ = out.flush();
            EXIT_OK
        }
        Err(f) => {
            let msg = match &f {
                Failure::Core(e) => format!("error: {e}"),
                Failure::Mismatch(m) => format!("oracle mismatch: {m}"),
                Failure::Usage(m) => format!("usage error: {m}"),
            };
            let _ = writeln!(err, "{msg}");
            f.code()
        }
    }
}

/// Caps from the environment, then from flags.
pub fn caps_for(cli: &Cli) -> Caps {
    let mut caps = Caps::from_env();
    if let Some(n) = cli.ladder_cap {
        caps.ladder = n;
    }
    if let Some(n) = cli.geo_cap {
        caps.geodesics = n;
    }
    caps
}

fn slope(s: &str) -> Result<ExtendedRational, Error> {
    s.parse()
}

fn emit<T: Serialize>(json: bool, body: T, text: impl FnOnce(&T) -> String) -> Outcome {
    if json {
        let mut s = serde_json::to_string(&Envelope::new(body)).expect("reports always serialize");
        s.push('\n');
        Ok(s)
    } else {
        Ok(text(&body))
    }
}

fn lines<I: IntoIterator<Item = String>>(it: I) -> String {
    it.into_iter().map(|l| l + "\n").collect()
}

fn execute(cli: &Cli, err: &mut dyn Write) -> Outcome {
    let caps = caps_for(cli);
    let json = cli.json;
    let verified = |err: &mut dyn Write, what: &str| {
        let _ = writeln!(err, "oracle: {what} confirmed");
    };
    match &cli.command {
        Command::Cf { slope: s } => {
            let x = slope(s)?;
            let cf = cf_expand(&x)?;
            if cli.oracle {
                check::cf(&x, &cf)?;
                verified(err, "expansion");
            }
            emit(json, CfReport { slope: x, cf }, |r| format!("{}\n", r.cf))
        }
        Command::Eval { entries } => {
            let cf: ContinuedFraction = entries.parse()?;
            let x = cf_eval(&cf);
            if cli.oracle {
                check::cf(&x, &cf)?;
                verified(err, "evaluation");
            }
            emit(json, CfReport { slope: x, cf }, |r| format!("{}\n", r.slope))
        }
        Command::Distance { x, y } => {
            let (x, y) = (slope(x)?, slope(y)?);
            let d = distance(&x, &y, &caps)?;
            if cli.oracle {
                check::same_distance(&x, &y, d)?;
                verified(err, "distance");
            }
            let body = DistanceReport { source: x, target: y, distance: d };
            emit(json, body, |r| format!("{}\n", r.distance))
        }
        Command::Geodesics { x, y } => {
            let (x, y) = (slope(x)?, slope(y)?);
            let set = all_geodesics(&x, &y, &caps)?;
            if cli.oracle {
                check::geodesics(&set, caps.geodesics)?;
                verified(err, "geodesic set");
            }
            emit(json, GeodesicsReport::from(set), |r| {
                lines(r.geodesics.iter().map(|p| {
                    p.vertices().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
                }))
            })
        }
        Command::Ladder { x, y, render } => {
            let (x, y) = (slope(x)?, slope(y)?);
            let l = ladder(&x, &y, &caps)?;
            if cli.oracle {
                check::ladder(&l, &caps)?;
                verified(err, "ladder");
            }
            match render {
                Some(_) if json => Err(Failure::Usage("--render cannot be combined with --json".into())),
                Some(Render::Ascii) => Ok(render::ascii(&l)),
                Some(Render::Svg) => Ok(render::svg(&l)),
                None => emit(json, LadderReport::from(&l), LadderReport::to_text),
            }
        }
        Command::Classify2Bridge { q, p, geodesics } => {
            let q: BigInt = q.trim().parse().map_err(|_| Error::ParseSlope(format!("{q}/{p}")))?;
            let p: BigInt = p.trim().parse().map_err(|_| Error::ParseSlope(format!("{q}/{p}")))?;
            let link = TwoBridgeLink::new(q, p)?;
            let r = classify_02(&link, &caps, *geodesics)?;
            if cli.oracle {
                check::report_02(&link, &r, caps.geodesics)?;
                verified(err, "(0,2) report");
            }
            emit(json, r, report::report_text)
        }
        Command::Classify03 { summands } => {
            let parts = summands
                .iter()
                .map(|s| s.parse::<TwoBridgeLink>())
                .collect::<Result<Vec<_>, _>>()?;
            let r = classify_03(&CompositeLink::new(parts)?);
            if cli.oracle {
                check::report_03(&r)?;
                verified(err, "(0,3) report");
            }
            emit(json, r, report::report_text)
        }
        Command::GenKeen { n, entries } => {
            let link = make_strongly_keen_example(*n, entries.as_deref())?;
            let cf = cf_expand(&link.slope())?;
            let r = classify_02(&link, &caps, true)?;
            if cli.oracle {
                check::report_02(&link, &r, caps.geodesics)?;
                verified(err, "(0,2) report");
            }
            let body = GenKeenReport { n: *n as u64, cf, report: r };
            emit(json, body, |b| {
                format!("{}\n{}", b.report.link, report::report_text(&b.report))
            })
        }
    }
}
