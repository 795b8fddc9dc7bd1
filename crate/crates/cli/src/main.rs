//! `crepant` — exact computations around crepant resolutions of Gorenstein
//! weighted projective spaces.
//!
//! Subcommands cover the pipeline end to end: Gorenstein tables, twisted
//! sectors, crepant resolutions with validators, toric cohomology rings,
//! contracted curve classes, quantum-corrected products, Chen-Ruan rings,
//! and isomorphism verification.
//!
//! Exit codes: 0 success / verification passed; 1 verification failed;
//! 2 usage or validation error. Reports are byte-stable for identical
//! invocations; `--format json` (the default) is the canonical form and the
//! text renderer is derived from it.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crepant_core::chenruan::{self, cr_algebra, cr_betti};
use crepant_core::exact::CycloNumber;
use crepant_core::gb::{parse_polynomial, parse_scalar};
use crepant_core::isocheck::{
    extend_map, scan_evaluations, verify_iso, verify_isometry, MapDirection, MapFile,
};
use crepant_core::qcorr::{quantum_algebra, symbolic_product, validate_chain, ChainConfig};
use crepant_core::toricring::{CurveClass, ToricCohomology};
use crepant_core::wps::{
    build_wps_fan, builtin_resolution, enumerate_gorenstein, stellar_subdivide, twisted_sectors,
    validate_resolution, Fan, SubdivisionRecipe, Weights,
};

mod failure;
use failure::Failure;

#[derive(Parser)]
#[command(
    name = "crepant",
    about = "Exact toolkit for crepant resolutions of Gorenstein weighted projective spaces",
    version
)]
struct Cli {
    /// Output format (reports are derived from the canonical JSON).
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct WeightsArg {
    /// Weights, comma separated (e.g. 1,3,4,4).
    #[arg(long, value_name = "W0,W1,...")]
    weights: String,
}

#[derive(Args)]
struct RaysArg {
    /// Subdivision recipe file {"rays": [[...], ...]}, applied in order to
    /// the fan of P(w); defaults to the built-in resolution.
    #[arg(long, value_name = "FILE")]
    rays: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Gorenstein tests and tables.
    Gorenstein {
        #[command(subcommand)]
        sub: GorensteinCmd,
    },
    /// Twisted sectors of P(w) with ages and fixed loci.
    Sectors {
        #[command(flatten)]
        weights: WeightsArg,
    },
    /// Build a crepant resolution and run the smooth/crepant validators.
    Resolve {
        #[command(flatten)]
        weights: WeightsArg,
        #[command(flatten)]
        rays: RaysArg,
    },
    /// Cohomology ring of the resolution: presentation, staircase basis,
    /// structure constants, Gram matrix.
    Cohomology {
        #[command(flatten)]
        weights: WeightsArg,
        #[command(flatten)]
        rays: RaysArg,
    },
    /// Generators of the cone of rho-contracted curve classes, with the
    /// chain/isolated partition.
    Mrho {
        #[command(flatten)]
        weights: WeightsArg,
        #[command(flatten)]
        rays: RaysArg,
    },
    /// Chen-Ruan cohomology: sector table, Betti numbers, and the ring for
    /// the built-in families.
    Chenruan {
        #[command(flatten)]
        weights: WeightsArg,
        /// Presentation file {"variables": [...], "relations": [...]} to use
        /// instead of the built-in families.
        #[arg(long, value_name = "FILE")]
        presentation: Option<PathBuf>,
    },
    /// Quantum corrected cohomology ring at an evaluation of the quantum
    /// parameters.
    Quantum {
        #[command(flatten)]
        weights: WeightsArg,
        #[command(flatten)]
        rays: RaysArg,
        /// One value per contracted-curve generator, comma separated;
        /// literals: integers, rationals, i, -i, sqrt2, zeta(N,k).
        /// Required unless --symbolic is given.
        #[arg(long, value_name = "Q1,Q2,...", allow_hyphen_values = true)]
        q: Option<String>,
        /// Emit the symbolic sub-chain coefficient tables of the degree-2
        /// products instead of evaluating.
        #[arg(long)]
        symbolic: bool,
    },
    /// Verify that a generator map extends to a ring isomorphism (and
    /// report the isometry check) between the quantum ring and the
    /// Chen-Ruan ring.
    VerifyIso {
        #[command(flatten)]
        weights: WeightsArg,
        #[command(flatten)]
        rays: RaysArg,
        /// Quantum parameter evaluation, as in `quantum --q`.
        #[arg(long, value_name = "Q1,Q2,...", allow_hyphen_values = true)]
        q: String,
        /// Map file {"generators": [...], "matrix": [[...]], "direction": ...}.
        #[arg(long, value_name = "FILE")]
        map: PathBuf,
        /// Override the direction stored in the map file.
        #[arg(long, value_name = "z-to-cr|cr-to-z")]
        direction: Option<String>,
        /// Fail (exit 1) when the isometry check fails, not only the ring
        /// isomorphism check.
        #[arg(long)]
        require_isometry: bool,
    },
    /// Run verify-iso over a list of candidate evaluations.
    Scan {
        #[command(flatten)]
        weights: WeightsArg,
        #[command(flatten)]
        rays: RaysArg,
        /// Candidate evaluations separated by semicolons, values by commas,
        /// e.g. "i,i,i,0;-i,-i,-i,0".
        #[arg(long, value_name = "EVAL;EVAL;...", allow_hyphen_values = true)]
        candidates: String,
        #[arg(long, value_name = "FILE")]
        map: PathBuf,
        #[arg(long, value_name = "z-to-cr|cr-to-z")]
        direction: Option<String>,
    },
}

#[derive(Subcommand)]
enum GorensteinCmd {
    /// Check whether P(w) is Gorenstein.
    Check {
        #[command(flatten)]
        weights: WeightsArg,
    },
    /// Enumerate all Gorenstein weight systems of a dimension.
    Enumerate {
        #[arg(long)]
        dim: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((code, report)) => {
            let decorated = decorate(report);
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&decorated).expect("report serializes")
                ),
                Format::Text => print!("{}", render_text(&decorated)),
            }
            ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!(
                "{}",
                serde_json::to_string(&json!({
                    "error": { "code": failure.code, "message": failure.message }
                }))
                .expect("error serializes")
            );
            ExitCode::from(2)
        }
    }
}

/// Optional cyclotomic-order diagnostics, driven by CREPANT_CYCLO_ORDER.
fn decorate(report: Value) -> Value {
    match std::env::var("CREPANT_CYCLO_ORDER") {
        Ok(raw) => {
            let mut out = serde_json::Map::new();
            out.insert(
                "diagnostics".into(),
                json!({ "cyclotomic_order_override": raw }),
            );
            out.insert("report".into(), report);
            Value::Object(out)
        }
        Err(_) => report,
    }
}

fn run(cmd: &Command) -> Result<(u8, Value), Failure> {
    match cmd {
        Command::Gorenstein { sub } => match sub {
            GorensteinCmd::Check { weights } => {
                let w = parse_weights(&weights.weights)?;
                let ok = w.is_gorenstein();
                let report = json!({
                    "weights": w.as_slice(),
                    "weight_sum": w.total(),
                    "gorenstein": ok,
                });
                Ok((u8::from(!ok), report))
            }
            GorensteinCmd::Enumerate { dim } => {
                if *dim == 0 {
                    return Err(Failure::usage("dimension must be positive"));
                }
                let all = enumerate_gorenstein(*dim);
                let report = json!({
                    "dim": dim,
                    "count": all.len(),
                    "weights": all.iter().map(|w| w.as_slice().to_vec()).collect::<Vec<_>>(),
                });
                Ok((0, report))
            }
        },
        Command::Sectors { weights } => {
            let w = parse_weights(&weights.weights)?;
            let sectors = twisted_sectors(&w);
            let report = json!({
                "weights": w.as_slice(),
                "gorenstein": w.is_gorenstein(),
                "sectors": sectors,
            });
            Ok((0, report))
        }
        Command::Resolve { weights, rays } => {
            let w = parse_weights(&weights.weights)?;
            let (original, refined) = resolve_fans(&w, rays)?;
            let report_res = validate_resolution(&original, &refined).map_err(Failure::from)?;
            let ok = report_res.smooth && report_res.crepant;
            let report = json!({
                "weights": w.as_slice(),
                "original": original,
                "refined": refined,
                "smooth": report_res.smooth,
                "crepant": report_res.crepant,
            });
            Ok((u8::from(!ok), report))
        }
        Command::Cohomology { weights, rays } => {
            let w = parse_weights(&weights.weights)?;
            let toric = toric_of(&w, rays)?;
            let report = json!({
                "weights": w.as_slice(),
                "algebra": toric.algebra.to_report(),
            });
            Ok((0, report))
        }
        Command::Mrho { weights, rays } => {
            let w = parse_weights(&weights.weights)?;
            let toric = toric_of(&w, rays)?;
            let gens = toric.curve_classes().map_err(Failure::from)?;
            let cfg = validate_chain(&toric, &gens).map_err(Failure::from)?;
            let report = json!({
                "weights": w.as_slice(),
                "generators": gens
                    .iter()
                    .map(|c| json!({
                        "wall": c.wall,
                        "pd_class": toric.algebra.describe(&c.pd),
                    }))
                    .collect::<Vec<_>>(),
                "chain": cfg.chain,
                "isolated": cfg.isolated,
                "intersections_with_exceptional": cfg
                    .intersections
                    .iter()
                    .map(|row| row.iter().map(|r| r.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            });
            Ok((0, report))
        }
        Command::Chenruan {
            weights,
            presentation,
        } => {
            let w = parse_weights(&weights.weights)?;
            let betti = cr_betti(&w).map_err(Failure::from)?;
            let algebra = match presentation {
                Some(path) => Some(load_presentation(path, &w)?),
                None => match cr_algebra(&w) {
                    Ok(a) => Some(a),
                    Err(chenruan::CrError::UnsupportedFamily(_)) => None,
                    Err(e) => return Err(Failure::from(e)),
                },
            };
            let report = json!({
                "weights": w.as_slice(),
                "chenruan": betti.to_report(),
                "algebra": algebra.as_ref().map(|a| a.to_report()),
                "ring_available": algebra.is_some(),
            });
            Ok((0, report))
        }
        Command::Quantum {
            weights,
            rays,
            q,
            symbolic,
        } => {
            let w = parse_weights(&weights.weights)?;
            let toric = toric_of(&w, rays)?;
            let (gens, cfg) = mrho_of(&toric)?;
            if *symbolic {
                let report = symbolic_report(&toric, &cfg, &gens)?;
                return Ok((0, report));
            }
            let q = q
                .as_deref()
                .ok_or_else(|| Failure::usage("--q is required unless --symbolic is given"))?;
            let qvals = parse_evaluation(q, gens.len())?;
            let quantum = quantum_algebra(&toric, &cfg, &gens, &qvals).map_err(Failure::from)?;
            let report = json!({
                "weights": w.as_slice(),
                "evaluation": qvals.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "algebra": quantum.to_report(),
            });
            Ok((0, report))
        }
        Command::VerifyIso {
            weights,
            rays,
            q,
            map,
            direction,
            require_isometry,
        } => {
            let w = parse_weights(&weights.weights)?;
            let toric = toric_of(&w, rays)?;
            let (gens, cfg) = mrho_of(&toric)?;
            let qvals = parse_evaluation(q, gens.len())?;
            let quantum = quantum_algebra(&toric, &cfg, &gens, &qvals).map_err(Failure::from)?;
            let cr = cr_algebra(&w).map_err(Failure::from)?;
            let (gmap, dir) = load_map(map, direction)?;
            let (src, dst) = match dir {
                MapDirection::ZToCr => (&quantum, &cr),
                MapDirection::CrToZ => (&cr, &quantum),
            };
            match extend_map(src, dst, &gmap) {
                Err(e) => {
                    let report = json!({
                        "weights": w.as_slice(),
                        "evaluation": qvals.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                        "passed": false,
                        "extension_error": e.to_string(),
                    });
                    Ok((1, report))
                }
                Ok(m) => {
                    let iso = verify_iso(src, dst, &m).map_err(Failure::from)?;
                    let isometry = verify_isometry(src, dst, &m).map_err(Failure::from)?;
                    let passed = iso.passed() && (!require_isometry || isometry.passed);
                    let report = json!({
                        "weights": w.as_slice(),
                        "evaluation": qvals.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                        "passed": passed,
                        "ring_isomorphism": iso.to_report(),
                        "isometry": {
                            "passed": isometry.passed,
                            "mismatch_count": isometry.mismatch_count,
                        },
                    });
                    Ok((u8::from(!passed), report))
                }
            }
        }
        Command::Scan {
            weights,
            rays,
            candidates,
            map,
            direction,
        } => {
            let w = parse_weights(&weights.weights)?;
            let toric = toric_of(&w, rays)?;
            let (gens, cfg) = mrho_of(&toric)?;
            let cands: Vec<Vec<CycloNumber>> = split_top_level(candidates, ';')
                .iter()
                .map(|e| parse_evaluation(e, gens.len()))
                .collect::<Result<_, _>>()?;
            let cr = cr_algebra(&w).map_err(Failure::from)?;
            let (gmap, dir) = load_map(map, direction)?;
            let results = scan_evaluations(&toric, &cfg, &gens, &cr, &gmap, dir, &cands)
                .map_err(Failure::from)?;
            let any_pass = results.iter().any(|r| r.passed());
            let report = json!({
                "weights": w.as_slice(),
                "results": results,
                "passes": results.iter().filter(|r| r.passed()).count(),
            });
            Ok((u8::from(!any_pass), report))
        }
    }
}

fn parse_weights(s: &str) -> Result<Weights, Failure> {
    let parts: Result<Vec<u64>, _> = s.split(',').map(|p| p.trim().parse::<u64>()).collect();
    let parts = parts.map_err(|e| Failure::usage(format!("invalid weights {s:?}: {e}")))?;
    Weights::new(parts).map_err(Failure::from)
}

fn resolve_fans(w: &Weights, rays: &RaysArg) -> Result<(Fan, Fan), Failure> {
    match &rays.rays {
        None => builtin_resolution(w).map_err(Failure::from),
        Some(path) => {
            let raw = fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            let recipe: SubdivisionRecipe = serde_json::from_str(&raw)
                .map_err(|e| Failure::usage(format!("bad recipe file: {e}")))?;
            let original = build_wps_fan(w).map_err(Failure::from)?;
            let mut refined = original.clone();
            for ray in &recipe.rays {
                refined = stellar_subdivide(&refined, ray).map_err(Failure::from)?;
            }
            Ok((original, refined))
        }
    }
}

fn toric_of(w: &Weights, rays: &RaysArg) -> Result<ToricCohomology, Failure> {
    let (original, refined) = resolve_fans(w, rays)?;
    ToricCohomology::new(w, &original, &refined).map_err(Failure::from)
}

fn mrho_of(toric: &ToricCohomology) -> Result<(Vec<CurveClass>, ChainConfig), Failure> {
    let gens = toric.curve_classes().map_err(Failure::from)?;
    let cfg = validate_chain(toric, &gens).map_err(Failure::from)?;
    Ok((gens, cfg))
}

fn parse_evaluation(s: &str, expected: usize) -> Result<Vec<CycloNumber>, Failure> {
    let parts = split_top_level(s, ',');
    if parts.len() != expected {
        return Err(Failure::usage(format!(
            "expected {expected} quantum parameters, got {} in {s:?}",
            parts.len()
        )));
    }
    parts
        .iter()
        .map(|p| parse_scalar(p).map_err(Failure::from))
        .collect()
}

/// Split on `sep` outside parentheses, so zeta(24,5) survives.
fn split_top_level(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            c if c == sep && depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(c),
        }
    }
    out.push(cur.trim().to_string());
    out
}

fn load_map(
    path: &PathBuf,
    direction: &Option<String>,
) -> Result<(crepant_core::isocheck::GeneratorMap, MapDirection), Failure> {
    let raw = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let file: MapFile = serde_json::from_str(&raw)
        .map_err(|e| Failure::usage(format!("bad map file: {e}")))?;
    let gmap = file.to_generator_map().map_err(Failure::from)?;
    let dir_str = direction
        .clone()
        .or_else(|| file.direction.clone())
        .ok_or_else(|| Failure::usage("map direction missing (file field or --direction)"))?;
    let dir = MapDirection::parse(&dir_str).map_err(Failure::from)?;
    Ok((gmap, dir))
}

#[derive(serde::Deserialize)]
struct PresentationFile {
    variables: Vec<String>,
    relations: Vec<String>,
}

fn load_presentation(
    path: &PathBuf,
    w: &Weights,
) -> Result<crepant_core::GradedAlgebra, Failure> {
    let raw = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let file: PresentationFile = serde_json::from_str(&raw)
        .map_err(|e| Failure::usage(format!("bad presentation file: {e}")))?;
    let relations = file
        .relations
        .iter()
        .map(|src| parse_polynomial(src, &file.variables).map_err(Failure::from))
        .collect::<Result<Vec<_>, _>>()?;
    let prod: u64 = w.as_slice().iter().product();
    let top_value = CycloNumber::from_rational(crepant_core::Rational::new(
        1.into(),
        prod.into(),
    ));
    chenruan::algebra_from_relations(
        &file.variables,
        &relations,
        2 * w.dim() as u32,
        top_value,
    )
    .map_err(Failure::from)
}

fn symbolic_report(
    toric: &ToricCohomology,
    cfg: &ChainConfig,
    gens: &[CurveClass],
) -> Result<Value, Failure> {
    let alg = &toric.algebra;
    let deg2: Vec<usize> = (0..alg.dim()).filter(|&k| alg.degrees()[k] == 2).collect();
    let mut products = Vec::new();
    for (a, &i) in deg2.iter().enumerate() {
        for &j in &deg2[a..] {
            let sym = symbolic_product(toric, cfg, gens, i, j).map_err(Failure::from)?;
            let coeffs: Vec<Value> = sym
                .iter()
                .enumerate()
                .filter(|(_, c)| {
                    !(c.constant == crepant_core::Rational::from_integer(0.into())
                        && c.qterms.is_empty())
                })
                .map(|(k, c)| {
                    json!({
                        "basis": alg.label(k),
                        "constant": c.constant.to_string(),
                        "subchain_terms": c
                            .qterms
                            .iter()
                            .map(|((from, to), v)| json!({
                                "subchain": format!("{}..{}", from + 1, to + 1),
                                "coefficient": v.to_string(),
                            }))
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            products.push(json!({
                "left": alg.label(i),
                "right": alg.label(j),
                "coefficients": coeffs,
            }));
        }
    }
    Ok(json!({
        "weights": toric.weights.as_slice(),
        "chain_length": cfg.chain.len(),
        "symbolic_products": products,
    }))
}

fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_value(v, 0, &mut out);
    out
}

fn render_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_value(val, indent + 1, out);
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", scalar_text(val));
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        let _ = writeln!(out, "{pad}-");
                        render_value(item, indent + 1, out);
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}- {}", scalar_text(item));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar_text(other));
        }
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
