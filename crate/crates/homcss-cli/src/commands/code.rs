//! `code` subcommands: parameters, distances, systoles, generator weights
//! and the k·d²/n family report.

use clap::Subcommand;
use homcss::css::{self, CssCode};
use serde_json::json;

use crate::report::{CliError, Report};
use crate::spec;

/// Enumeration budget: flag value, else HOMCSS_BUDGET, else the default.
fn effective_budget(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("HOMCSS_BUDGET")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(css::DEFAULT_EXACT_BUDGET)
}

#[derive(Subcommand, Debug)]
pub enum CodeCmd {
    /// Length, dimension, rate and generator weight of the degree-i code.
    Params {
        #[arg(long)]
        complex: String,
        #[arg(long)]
        degree: usize,
    },
    /// Distance search: exact kernel enumeration, or bounded-weight search
    /// when --w-max is given.
    Distance {
        #[arg(long)]
        complex: String,
        #[arg(long)]
        degree: usize,
        /// Cap on the enumerable kernel dimension for the exact engine.
        #[arg(long)]
        budget: Option<usize>,
        /// Bounded search up to this weight instead of exact enumeration.
        #[arg(long)]
        w_max: Option<usize>,
    },
    /// Minimum weight of a homologically nontrivial i-cycle (cycle side
    /// only).
    Systole {
        #[arg(long)]
        complex: String,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        w_max: Option<usize>,
        /// Smallest i-face volume: scales the weight into a volume lower
        /// bound in the report. Purely a report scale; nothing geometric
        /// is computed.
        #[arg(long)]
        face_volume_min: Option<f64>,
        /// Largest i-face volume: scales the weight into a volume upper
        /// bound in the report.
        #[arg(long)]
        face_volume_max: Option<f64>,
    },
    /// Maximum generator weight over both sides.
    Ldpc {
        #[arg(long)]
        complex: String,
        #[arg(long)]
        degree: usize,
    },
    /// k·d²/n table for the toric family.
    Zemor {
        /// Only the toric family is built in.
        #[arg(long, default_value = "toric")]
        family: String,
        /// Side-length range, e.g. 2..5 (inclusive).
        #[arg(long, alias = "L")]
        l: String,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long)]
        budget: Option<usize>,
        /// Use bounded search with this weight cap per member.
        #[arg(long)]
        w_max: Option<usize>,
        /// Flag rows with k·d² ≥ n^(1+epsilon).
        #[arg(long, default_value_t = 0.05)]
        epsilon: f64,
    },
}

pub fn run(cmd: &CodeCmd) -> Result<Report, CliError> {
    match cmd {
        CodeCmd::Params { complex, degree } => {
            let built = spec::parse_complex(complex)?;
            let code = CssCode::build(built.complex(), *degree)?;
            let k = code.code_dimension();
            let config =
                json!({ "command": "code params", "complex": complex, "degree": degree });
            let result = json!({
                "n": code.n(),
                "k": k,
                "rate": k as f64 / code.n() as f64,
                "w1_generators": code.w1().len(),
                "w2_generators": code.w2().len(),
                "ldpc_weight": code.ldpc_weight(),
            });
            let summary = format!("[[{}, {k}, ?]] degree {degree}", code.n());
            Ok(Report::new(config, result, summary))
        }
        CodeCmd::Distance {
            complex,
            degree,
            budget,
            w_max,
        } => {
            let built = spec::parse_complex(complex)?;
            let code = CssCode::build(built.complex(), *degree)?;
            let budget = effective_budget(*budget);
            let params = match w_max {
                Some(w) => code.distance_bounded(*w)?,
                None => code.distance_exact(budget)?,
            };
            let config = json!({
                "command": "code distance",
                "complex": complex,
                "degree": degree,
                "budget": budget,
                "w_max": w_max,
            });
            let summary = format!(
                "[[{}, {}, {}]]",
                params.n,
                params.k,
                match params.d {
                    css::Distance::Exact(d) => d.to_string(),
                    css::Distance::Interval { lo, hi } => format!("{lo}..{hi}"),
                }
            );
            Ok(Report::new(config, serde_json::to_value(&params)?, summary))
        }
        CodeCmd::Systole {
            complex,
            degree,
            budget,
            w_max,
            face_volume_min,
            face_volume_max,
        } => {
            let built = spec::parse_complex(complex)?;
            let x = built.complex();
            let budget = effective_budget(*budget);
            let config = json!({
                "command": "code systole",
                "complex": complex,
                "degree": degree,
                "budget": budget,
                "w_max": w_max,
                "face_volume_min": face_volume_min,
                "face_volume_max": face_volume_max,
            });
            // weight · face volume brackets the Riemannian volume of the
            // witness cycle; the constants are caller-supplied
            let volume_bracket = |weight: usize| {
                match (face_volume_min, face_volume_max) {
                    (Some(lo), Some(hi)) => json!({
                        "lo": lo * weight as f64,
                        "hi": hi * weight as f64,
                    }),
                    (Some(lo), None) => json!({ "lo": lo * weight as f64 }),
                    (None, Some(hi)) => json!({ "hi": hi * weight as f64 }),
                    (None, None) => serde_json::Value::Null,
                }
            };
            let (result, summary) = match w_max {
                Some(w) => match css::combinatorial_systole_bounded(x, *degree, *w)? {
                    Some((weight, witness)) => (
                        json!({
                            "systole": { "exact": weight },
                            "witness": witness.support(),
                            "volume_bracket": volume_bracket(weight),
                        }),
                        format!("systole {weight}"),
                    ),
                    None => (
                        json!({ "systole": { "lo": w + 1, "hi": x.cells(*degree) } }),
                        format!("systole > {w}"),
                    ),
                },
                None => {
                    let (weight, witness) = css::combinatorial_systole(x, *degree, budget)?;
                    (
                        json!({
                            "systole": { "exact": weight },
                            "witness": witness.support(),
                            "volume_bracket": volume_bracket(weight),
                        }),
                        format!("systole {weight}"),
                    )
                }
            };
            Ok(Report::new(config, result, summary))
        }
        CodeCmd::Ldpc { complex, degree } => {
            let built = spec::parse_complex(complex)?;
            let code = CssCode::build(built.complex(), *degree)?;
            let config = json!({ "command": "code ldpc", "complex": complex, "degree": degree });
            let weight = code.ldpc_weight();
            let result = json!({ "ldpc_weight": weight });
            Ok(Report::new(config, result, format!("max generator weight {weight}")))
        }
        CodeCmd::Zemor {
            family,
            l,
            degree,
            budget,
            w_max,
            epsilon,
        } => {
            if family != "toric" {
                return Err(CliError::Usage(format!(
                    "unknown family {family:?}: only \"toric\" is built in"
                )));
            }
            let (lo, hi) = parse_range(l)?;
            let budget = effective_budget(*budget);
            let mut params = Vec::new();
            for side in lo..=hi {
                let x = homcss::builders::toric_grid(side)?.complex;
                let code = CssCode::build(&x, *degree)?;
                let p = match w_max {
                    Some(w) => code.distance_bounded(*w)?,
                    None => code.distance_bounded(side)?,
                };
                params.push(p);
            }
            let rows = css::zemor_report(&params, *epsilon);
            let config = json!({
                "command": "code zemor",
                "family": family,
                "l": l,
                "degree": degree,
                "budget": budget,
                "w_max": w_max,
                "epsilon": epsilon,
            });
            let summary = format!("{} toric codes tabulated", rows.len());
            Ok(Report::new(config, serde_json::to_value(&rows)?, summary))
        }
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), CliError> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| CliError::Usage(format!("range {s:?} must look like 2..5")))?;
    let lo: usize = lo
        .parse()
        .map_err(|_| CliError::Usage(format!("bad range start {lo:?}")))?;
    let hi: usize = hi
        .parse()
        .map_err(|_| CliError::Usage(format!("bad range end {hi:?}")))?;
    if hi < lo {
        return Err(CliError::Usage(format!("range {s:?} is empty")));
    }
    Ok((lo, hi))
}
