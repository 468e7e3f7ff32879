//! `complex` subcommands: build, validate, homology, dual, cover, product
//! and the randomized property suite.

use clap::Subcommand;
use homcss::builders;
use homcss::corpus;
use homcss::f2linalg;
use serde_json::json;

use crate::report::{CliError, Report};
use crate::spec;

#[derive(Subcommand, Debug)]
pub enum ComplexCmd {
    /// Build a complex from a spec and emit its JSON.
    Build {
        #[arg(long)]
        complex: String,
    },
    /// Check ∂∂ = 0; exits 2 with a diagnostic on failure.
    Validate {
        #[arg(long)]
        complex: String,
    },
    /// Mod-2 Betti numbers, boundary ranks and the Euler characteristic.
    Homology {
        #[arg(long)]
        complex: String,
    },
    /// Poincaré dual of a closed pseudomanifold.
    Dual {
        #[arg(long)]
        complex: String,
    },
    /// Finite cover from a voltage assignment (builder-backed specs only).
    Cover {
        #[arg(long)]
        complex: String,
        /// JSON file {edge-index: permutation-array}; missing edges get
        /// the identity.
        #[arg(long)]
        voltages: String,
        #[arg(long)]
        sheets: usize,
    },
    /// Tensor product of two specs.
    Product {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Randomized validity suite: validate + Euler–Poincaré + the
    /// boundary/cocycle rank identity on every generated complex.
    Suite {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

pub fn run(cmd: &ComplexCmd) -> Result<Report, CliError> {
    match cmd {
        ComplexCmd::Build { complex } => {
            let built = spec::parse_complex(complex)?;
            let x = built.into_complex();
            let config = json!({ "command": "complex build", "complex": complex });
            let doc: serde_json::Value = serde_json::from_str(&x.to_json())?;
            let summary = format!("built complex with cells {:?}", x.cell_counts());
            Ok(Report::new(config, doc, summary))
        }
        ComplexCmd::Validate { complex } => {
            let built = spec::parse_complex(complex)?;
            let x = built.complex();
            let config = json!({ "command": "complex validate", "complex": complex });
            let validity = x.validate();
            let ok = validity.is_valid();
            let result = json!({
                "valid": ok,
                "diagnostic": validity.diagnostic(),
                "cells": x.cell_counts(),
            });
            let summary = if ok {
                "valid".to_string()
            } else {
                format!("INVALID: {}", validity.diagnostic().unwrap_or_default())
            };
            Ok(Report::new(config, result, summary).with_exit(if ok { 0 } else { 2 }))
        }
        ComplexCmd::Homology { complex } => {
            let built = spec::parse_complex(complex)?;
            let x = built.complex();
            let profile = x.homology()?;
            let config = json!({ "command": "complex homology", "complex": complex });
            let result = json!({
                "betti": profile.betti,
                "ranks": profile.ranks,
                "euler_characteristic": x.euler_characteristic(),
                "cells": x.cell_counts(),
            });
            let summary = format!("betti {:?}", profile.betti);
            Ok(Report::new(config, result, summary))
        }
        ComplexCmd::Dual { complex } => {
            let built = spec::parse_complex(complex)?;
            let dual = builders::dualize(built.complex())?;
            let config = json!({ "command": "complex dual", "complex": complex });
            let doc: serde_json::Value = serde_json::from_str(&dual.complex.to_json())?;
            let summary = format!("dual complex with cells {:?}", dual.complex.cell_counts());
            Ok(Report::new(config, doc, summary))
        }
        ComplexCmd::Cover {
            complex,
            voltages,
            sheets,
        } => {
            let built = spec::parse_complex(complex)?;
            let base = built.cover_base().ok_or_else(|| {
                CliError::Usage(
                    "cover construction needs a builder-backed spec (toric:, circle:, facets:, \
                     tetrahedron, torus7), not a plain complex file"
                        .into(),
                )
            })?;
            let v = spec::parse_voltages(voltages, *sheets, base.complex().cells(1))?;
            let cover = builders::build_cover(base, &v)?;
            let config = json!({
                "command": "complex cover",
                "complex": complex,
                "voltages": voltages,
                "sheets": sheets,
            });
            let doc: serde_json::Value = serde_json::from_str(&cover.complex.to_json())?;
            let summary = format!(
                "{}-sheet cover with cells {:?}",
                sheets,
                cover.complex.cell_counts()
            );
            Ok(Report::new(config, doc, summary))
        }
        ComplexCmd::Product { left, right } => {
            let l = spec::parse_complex(left)?;
            let r = spec::parse_complex(right)?;
            let product = l.complex().tensor_product(r.complex())?;
            let config =
                json!({ "command": "complex product", "left": left, "right": right });
            let doc: serde_json::Value = serde_json::from_str(&product.to_json())?;
            let summary = format!("product complex with cells {:?}", product.cell_counts());
            Ok(Report::new(config, doc, summary))
        }
        ComplexCmd::Suite { count, seed } => {
            let config = json!({ "command": "complex suite", "count": count, "seed": seed });
            let mut euler_failures = Vec::new();
            let mut rank_failures = Vec::new();
            let mut invalid = Vec::new();
            for entry in corpus::random_complexes(*seed, *count) {
                let x = &entry.complex;
                if !x.validate().is_valid() {
                    invalid.push(entry.description.clone());
                    continue;
                }
                let profile = x.homology()?;
                let alt: i64 = profile
                    .betti
                    .iter()
                    .enumerate()
                    .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
                    .sum();
                if alt != x.euler_characteristic() {
                    euler_failures.push(entry.description.clone());
                }
                for i in 0..=x.dim() {
                    let up = x.boundary_or_zero(i + 1);
                    let delta = x.coboundary(i);
                    let rank = f2linalg::rank(&up);
                    let kernel = f2linalg::kernel_basis(&delta);
                    let orthogonal = up
                        .columns()
                        .iter()
                        .all(|c| kernel.iter().all(|z| !c.dot(z)));
                    if rank + kernel.len() != x.cells(i) || !orthogonal {
                        rank_failures.push(format!("{} degree {i}", entry.description));
                    }
                }
            }
            let ok = invalid.is_empty() && euler_failures.is_empty() && rank_failures.is_empty();
            let result = json!({
                "complexes": count,
                "invalid": invalid,
                "euler_poincare_failures": euler_failures,
                "rank_identity_failures": rank_failures,
                "ok": ok,
            });
            let summary = if ok {
                format!("{count} complexes: all checks passed")
            } else {
                "FAILURES (see report)".to_string()
            };
            Ok(Report::new(config, result, summary).with_exit(if ok { 0 } else { 2 }))
        }
    }
}
