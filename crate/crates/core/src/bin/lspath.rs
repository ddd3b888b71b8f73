use std::io::Write;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use lspaths::acceptance::{run_acceptance_suite, AcceptanceConfig};
use lspaths::complex::{level_points, verify_integral_structure};
use lspaths::discrete::{multiply_discrete, AlgebraElement, ElementJson};
use lspaths::grassmann::{verify_grassmann_ls, GrassmannRing, PlueckerElement};
use lspaths::orders::{default_extension, rlex_compare, triangle_compare, Comparison, LinearExtension};
use lspaths::paths::{enumerate, enumerate_on_chain, PathJson};
use lspaths::poset::{BondedPoset, Limits, PosetJson};
use lspaths::valuation::{check_estimate, h_index, nu_zero, ChainValuationData};
use lspaths::vector::VectorJson;
use lspaths::weyl::{bruhat_poset, parse_weight, RootSystem};
use lspaths::{Error, LsPath, PathVector, Result};

#[derive(Parser)]
#[command(name = "lspath", version, about = "LS paths over posets with bonds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a poset file, including the bond gcd condition.
    PosetCheck {
        #[arg(long)]
        poset: PathBuf,
    },
    /// List the LS paths of a degree, optionally supported on a chain.
    PathsEnum {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        chain: Option<String>,
    },
    /// Compare two vectors under ≼ and ⊴.
    OrderCompare {
        #[arg(long)]
        poset: PathBuf,
        /// `label:p/q,...`
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
        /// Linear extension as a label list; the default orders by length, then label.
        #[arg(long)]
        extension: Option<String>,
    },
    /// Points of the level `Δ_r(S)`, or the integral structure check on a chain.
    ComplexLevels {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        chain: Option<String>,
    },
    /// Multiply two elements of the discrete LS algebra.
    DiscreteMultiply {
        #[arg(long)]
        poset: PathBuf,
        /// Element JSON, a file holding it, or a single path `label:p/q,...`.
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Check chain valuation values against the estimate, or report ν₀ and h for a path.
    ValuationCheck {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        chain: String,
        /// JSON list of `{"path": ..., "value": ...}`.
        #[arg(long)]
        values: Option<PathBuf>,
        #[arg(long)]
        path: Option<String>,
    },
    /// Bruhat poset `W^λ_τ` with bonds.
    Schubert {
        #[arg(long = "type")]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Coordinate ring of the Grassmannian.
    Grassmann {
        #[command(subcommand)]
        action: GrassmannAction,
    },
    /// Run the acceptance suite.
    Acceptance {
        #[arg(long)]
        quick: bool,
        #[arg(long)]
        corrupt_table: bool,
        /// Comma-separated criterion numbers.
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand)]
enum GrassmannAction {
    /// Standard monomial expansion of a product of Plücker coordinates.
    Straighten {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        monomial: String,
    },
    /// Chain valuation, or the quasi-valuation without `--chain`.
    Valuation {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        /// Element JSON, a file holding it, or a monomial `14,23`.
        #[arg(long)]
        element: String,
        #[arg(long)]
        chain: Option<String>,
    },
    /// LS1, LS2 and effectiveness up to a degree.
    Verify {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
    },
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_poset(path: &Path) -> Result<BondedPoset> {
    let json: PosetJson =
        serde_json::from_str(&read_text(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    BondedPoset::from_json_with_limits(&json, Limits::from_env())
}

/// Inline JSON, a JSON file, or the fallback text form.
fn json_or_text(arg: &str) -> Result<Option<String>> {
    let t = arg.trim();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(Some(t.to_string()));
    }
    let p = Path::new(t);
    if p.is_file() {
        return read_text(p).map(Some);
    }
    Ok(None)
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn load_element(poset: &BondedPoset, arg: &str) -> Result<AlgebraElement> {
    match json_or_text(arg)? {
        Some(text) => AlgebraElement::from_json(poset, &parse_json::<ElementJson>(&text)?),
        None => Ok(AlgebraElement::basis(LsPath::parse(poset, arg)?)),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn chain_arg(poset: &BondedPoset, text: &str) -> Result<Vec<usize>> {
    let mut c = poset.parse_elements(text)?;
    poset.sort_chain(&mut c);
    if !poset.is_chain(&c) {
        return Err(Error::NotAChain);
    }
    Ok(c)
}

fn comparison(o: std::cmp::Ordering) -> &'static str {
    Comparison::from(o).as_str()
}

fn run(cli: Cli) -> Result<(Value, bool)> {
    let out = match cli.command {
        Command::PosetCheck { poset } => {
            let p = load_poset(&poset)?;
            p.verify_gcd_condition()?.into_result(&p)?;
            let chains = p.maximal_chains()?;
            let lcm: BTreeMap<&str, u64> = p.elements().map(|e| (p.label(e), p.lcm_bonds(e))).collect();
            json!({
                "ok": true,
                "elements": p.len(),
                "rank": p.rank(),
                "bottom": p.label(p.bottom()),
                "top": p.label(p.top()),
                "maximal_chains": chains.len(),
                "lcm_bonds": lcm,
                "poset": to_value(&p.to_json()),
            })
        }
        Command::PathsEnum { poset, degree, chain } => {
            let p = load_poset(&poset)?;
            let paths = match chain {
                Some(c) => enumerate_on_chain(&p, &chain_arg(&p, &c)?, degree)?,
                None => enumerate(&p, degree)?,
            };
            let list: Vec<PathJson> = paths.iter().map(|x| x.to_json(&p)).collect();
            json!({ "degree": degree, "count": list.len(), "paths": to_value(&list) })
        }
        Command::OrderCompare { poset, v, w, extension } => {
            let p = load_poset(&poset)?;
            let (v, w) = (PathVector::parse(&p, &v)?, PathVector::parse(&p, &w)?);
            let ext = match extension {
                Some(e) => LinearExtension::new(&p, p.parse_elements(&e)?)?,
                None => default_extension(&p),
            };
            json!({
                "rlex": comparison(rlex_compare(&v, &w, &ext)),
                "triangle": triangle_compare(&p, &v, &w)?.as_str(),
                "extension": p.format_elements(ext.order(), ","),
            })
        }
        Command::ComplexLevels { poset, degree, chain } => {
            let p = load_poset(&poset)?;
            match chain {
                Some(c) => {
                    let c = chain_arg(&p, &c)?;
                    let ok = verify_integral_structure(&p, &c, degree)?;
                    json!({ "chain": p.format_elements(&c, ","), "degree": degree, "integral_structure": ok })
                }
                None => {
                    let points: Vec<VectorJson> = level_points(&p, degree)?.iter().map(|x| x.to_json(&p)).collect();
                    json!({ "degree": degree, "count": points.len(), "points": to_value(&points) })
                }
            }
        }
        Command::DiscreteMultiply { poset, x, y } => {
            let p = load_poset(&poset)?;
            let product = multiply_discrete(&p, &load_element(&p, &x)?, &load_element(&p, &y)?);
            json!({ "product": to_value(&product.to_json(&p)) })
        }
        Command::ValuationCheck { poset, chain, values, path } => {
            let p = load_poset(&poset)?;
            let c = chain_arg(&p, &chain)?;
            match (values, path) {
                (Some(file), _) => {
                    #[derive(serde::Deserialize)]
                    struct Entry {
                        path: PathJson,
                        value: VectorJson,
                    }
                    let entries: Vec<Entry> = parse_json(&read_text(&file)?)?;
                    let mut data = ChainValuationData::new(c.clone());
                    let mut paths = Vec::new();
                    for e in entries {
                        let path = LsPath::from_json(&p, &e.path)?;
                        data.insert(path.clone(), PathVector::from_json(&p, &e.value)?);
                        paths.push(path);
                    }
                    let report = check_estimate(&p, &data, &paths)?;
                    let outcomes: Vec<Value> = report
                        .outcomes
                        .iter()
                        .map(|o| {
                            json!({
                                "path": to_value(&o.path.to_json(&p)),
                                "case": o.case.to_string(),
                                "h": o.h,
                                "ok": o.ok,
                                "residual": to_value(&o.residual.to_json(&p)),
                            })
                        })
                        .collect();
                    let invariants = data.check_invariants();
                    let passed = report.passed && invariants.is_empty();
                    return Ok((
                        json!({ "passed": passed, "outcomes": outcomes, "invariant_problems": invariants }),
                        passed,
                    ));
                }
                (None, Some(text)) => {
                    let v = PathVector::parse(&p, &text)?;
                    json!({
                        "nu_zero": to_value(&nu_zero(&p, &c, &v)?.to_json(&p)),
                        "h": h_index(&p, &c, &v)?,
                    })
                }
                (None, None) => return Err(Error::Parse("give --values or --path".into())),
            }
        }
        Command::Schubert { kind, weight, tau, emit } => {
            let rs = RootSystem::parse(&kind)?;
            let tau = tau.map(|t| parse_weight(&t)).transpose()?;
            let p = bruhat_poset(&rs, &parse_weight(&weight)?, tau.as_deref())?;
            let poset_json = to_value(&p.to_json());
            if let Some(file) = emit {
                let text = serde_json::to_string_pretty(&poset_json).expect("serializable");
                std::fs::write(&file, text + "\n").map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
            }
            json!({ "type": rs.name(), "weight": weight, "poset": poset_json })
        }
        Command::Grassmann { action } => grassmann(action)?,
        Command::Acceptance { quick, corrupt_table, only, seed } => {
            let mut config = AcceptanceConfig {
                quick,
                corrupt_table,
                ..AcceptanceConfig::default()
            };
            if let Some(s) = seed {
                config.seed = s;
            }
            if let Some(list) = only {
                config.only = list
                    .split(',')
                    .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad criterion `{x}`"))))
                    .collect::<Result<_>>()?;
            }
            let report = run_acceptance_suite(&config);
            let passed = report.passed();
            let mut v = to_value(&report);
            v["passed"] = json!(passed);
            return Ok((v, passed));
        }
    };
    Ok((out, true))
}

fn grassmann_element(ring: &GrassmannRing, arg: &str) -> Result<PlueckerElement> {
    match json_or_text(arg)? {
        Some(text) => PlueckerElement::from_algebra(
            ring.poset(),
            &AlgebraElement::from_json(ring.poset(), &parse_json::<ElementJson>(&text)?)?,
        ),
        None => Ok(PlueckerElement::monomial(ring.poset().parse_elements(arg)?)),
    }
}

fn grassmann(action: GrassmannAction) -> Result<Value> {
    Ok(match action {
        GrassmannAction::Straighten { d, n, monomial } => {
            let ring = GrassmannRing::new(d, n)?;
            let factors = ring.poset().parse_elements(&monomial)?;
            let x = ring.straighten(&factors)?;
            json!({ "element": to_value(&x.to_json(ring.poset())) })
        }
        GrassmannAction::Valuation { d, n, element, chain } => {
            let ring = GrassmannRing::new(d, n)?;
            let p = ring.poset();
            let x = grassmann_element(&ring, &element)?;
            match chain {
                Some(c) => {
                    let c = chain_arg(p, &c)?;
                    let v = ring.chain_valuation(&x, &c)?;
                    json!({ "chain": p.format_elements(&c, ","), "value": to_value(&v.to_json(p)) })
                }
                None => json!({ "value": to_value(&ring.quasi_valuation(&x)?.to_json(p)) }),
            }
        }
        GrassmannAction::Verify { d, n, max_degree } => {
            let ring = GrassmannRing::new(d, n)?;
            let report = verify_grassmann_ls(&ring, max_degree)?;
            let degrees: Vec<Value> = report
                .degrees
                .iter()
                .map(|&(r, count, rank, paths)| {
                    json!({ "degree": r, "standard_monomials": count, "rank": rank, "ls_paths": paths })
                })
                .collect();
            let violations: Vec<Value> = report
                .axioms
                .violations
                .iter()
                .map(|v| json!({ "axiom": v.axiom, "detail": v.detail }))
                .collect();
            json!({
                "passed": report.passed,
                "degrees": degrees,
                "nonstandard_pairs": report.nonstandard_pairs,
                "effective": report.effective,
                "ls3_vacuous": report.ls3_vacuous,
                "violations": violations,
            })
        }
    })
}

fn emit(mut v: Value) {
    if let Value::Object(map) = &mut v {
        map.insert("schema_version".into(), json!(1));
    }
    let text = serde_json::to_string_pretty(&v).expect("serializable");
    // a closed pipe (`| head`) is not worth a panic
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            emit(json!({ "error": { "kind": "parse", "message": e.to_string().trim() } }));
            return ExitCode::FAILURE;
        }
    };
    match run(cli) {
        Ok((v, ok)) => {
            emit(v);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            emit(json!({ "error": { "kind": e.kind(), "message": e.to_string() } }));
            ExitCode::FAILURE
        }
    }
}
