//! `bounds` subcommands: sphere volumes, the volume/Euler relation, the
//! homology lower bound, hyperbolic balls, the systolic ball bound, cone
//! volumes and the monotonicity audit.

use clap::Subcommand;
use homcss::bounds;
use serde_json::json;

use crate::report::{CliError, Report};
use crate::spec;

#[derive(Subcommand, Debug)]
pub enum BoundsCmd {
    /// Total n-volume of the unit n-sphere.
    SphereVolume { n: usize },
    /// Volume from the Euler characteristic in even dimension 2n.
    GaussBonnet {
        #[arg(long)]
        chi: i64,
        #[arg(long)]
        dim: usize,
    },
    /// Lower bound on dim H₂ for a hyperbolic 4-manifold of volume V.
    H2 {
        #[arg(long)]
        volume: f64,
    },
    /// Hyperbolic k-ball volume and bounding sphere area at radius r.
    Ball {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: f64,
    },
    /// Ball-volume lower bound for nontrivial i-cycles at injectivity
    /// radius R, with the e^{(i−1)R} comparison.
    Anderson {
        #[arg(long)]
        i: usize,
        #[arg(long = "R")]
        radius: f64,
    },
    /// Cone volume over a base of given (k−1)-volume.
    Cone {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: f64,
        #[arg(long)]
        base: f64,
        #[arg(long)]
        hyperbolic: bool,
    },
    /// Derivative-identity and growth-inequality audit on a radius grid.
    Monotonicity {
        #[arg(long)]
        k: usize,
        /// Grid spec a:b:step.
        #[arg(long)]
        grid: String,
        /// CSV profile "r,V" to audit against the growth inequality.
        #[arg(long)]
        profile: Option<String>,
    },
}

pub fn run(cmd: &BoundsCmd) -> Result<Report, CliError> {
    match cmd {
        BoundsCmd::SphereVolume { n } => {
            let v = bounds::sphere_volume(*n);
            let config = json!({ "command": "bounds sphere-volume", "n": n });
            Ok(Report::new(
                config,
                json!({ "volume": v }),
                format!("Vol(S^{n}) = {v:.12}"),
            ))
        }
        BoundsCmd::GaussBonnet { chi, dim } => {
            let r = bounds::gauss_bonnet(*chi, *dim)?;
            let config = json!({ "command": "bounds gauss-bonnet", "chi": chi, "dim": dim });
            let summary = if r.hyperbolic_consistent {
                format!("volume {:.8}", r.volume)
            } else {
                format!("volume {:.8} (NOT hyperbolic-consistent)", r.volume)
            };
            Ok(Report::new(config, serde_json::to_value(&r)?, summary))
        }
        BoundsCmd::H2 { volume } => {
            let b = bounds::h2_lower_bound(*volume)?;
            let config = json!({ "command": "bounds h2", "volume": volume });
            let summary = format!("dim H₂ ≥ {:.4}", b.bound);
            Ok(Report::new(config, serde_json::to_value(&b)?, summary))
        }
        BoundsCmd::Ball { k, r } => {
            let vhb = bounds::hyperbolic_ball_volume(*k, *r)?;
            let vhs = bounds::hyperbolic_sphere_area(k.saturating_sub(1), *r);
            let config = json!({ "command": "bounds ball", "k": k, "r": r });
            let result = json!({
                "hyperbolic_ball_volume": vhb,
                "hyperbolic_sphere_area": vhs,
                "euclidean_ball_volume": bounds::euclidean_ball_volume(*k, *r),
            });
            Ok(Report::new(config, result, format!("VHB_{k}({r}) = {vhb:.8}")))
        }
        BoundsCmd::Anderson { i, radius } => {
            let b = bounds::anderson_bound(*i, *radius)?;
            let config = json!({ "command": "bounds anderson", "i": i, "R": radius });
            let summary = format!(
                "Vol ≥ {:.8}, ratio to e^((i-1)R) = {:.6}",
                b.volume, b.exp_ratio
            );
            Ok(Report::new(config, serde_json::to_value(&b)?, summary))
        }
        BoundsCmd::Cone {
            k,
            r,
            base,
            hyperbolic,
        } => {
            let v = if *hyperbolic {
                bounds::cone_volume_hyperbolic(*k, *r, *base)?
            } else {
                bounds::cone_volume_euclidean(*k, *r, *base)?
            };
            let config = json!({
                "command": "bounds cone",
                "k": k,
                "r": r,
                "base": base,
                "hyperbolic": hyperbolic,
            });
            Ok(Report::new(
                config,
                json!({ "cone_volume": v }),
                format!("cone volume {v:.8}"),
            ))
        }
        BoundsCmd::Monotonicity { k, grid, profile } => {
            let grid_values = spec::parse_grid(grid)?;
            let profile_values = match profile {
                Some(path) => Some(spec::parse_profile(path)?),
                None => None,
            };
            let report = bounds::monotonicity_audit(*k, &grid_values, profile_values.as_deref())?;
            let config = json!({
                "command": "bounds monotonicity",
                "k": k,
                "grid": grid,
                "profile": profile,
            });
            let ok = report.violations.is_empty();
            let summary = format!(
                "derivative identity max rel err {:.2e}, {} violations",
                report.derivative_identity_max_rel_error,
                report.violations.len()
            );
            let exit = if ok { 0 } else { 2 };
            Ok(Report::new(config, serde_json::to_value(&report)?, summary).with_exit(exit))
        }
    }
}
