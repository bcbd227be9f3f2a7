//! The `fixedspace` command-line tool.
//!
//! Every command reads JSON, writes one pretty-printed JSON report with
//! sorted keys and exact scalar strings, and exits with 0. Validation
//! failures are printed to stderr as a JSON witness and exit with 2;
//! unreadable or malformed input exits with 3.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::action::{GroupAction, Point};
use crate::corpus;
use crate::error::{Error, InputError};
use crate::function_space as fs_ops;
use crate::group::{Element, GroupError, Subgroup, DEFAULT_CLOSURE_CAP};
use crate::json::{ActionSpec, FunctionSpec, GroupSpec, PartitionJson, SubsetFunctionSpec};
use crate::partition_group::{group_from_partition, sp_membership, GeneratorMode};
use crate::res_ind::{self, InvariantSubset, ResIndError};

#[derive(Debug, Parser)]
#[command(
    name = "fixedspace",
    version,
    about = "Invariant function spaces of finite group actions"
)]
pub struct Cli {
    /// Largest group the permutation closure may build.
    #[arg(long, global = true, env = "FIXEDSPACE_CAP", default_value_t = DEFAULT_CLOSURE_CAP)]
    pub cap: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Group, action or partition JSON.
    #[arg(long)]
    pub input: PathBuf,
    /// Comma-separated elements generating the subgroup `H`.
    #[arg(long, value_delimiter = ',')]
    pub subgroup: Option<Vec<Element>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a group or an action and summarize it.
    Validate(InputArgs),
    /// Orbits, stabilizers and the free/transitive/trivial flags.
    Orbits(InputArgs),
    /// `dim L^H(X)` by the fixed-point formula.
    Dimension(InputArgs),
    /// Freeness, and for free actions the dimension ratio against the index.
    FreeCheck(InputArgs),
    /// Fourier coefficients and the projection onto `L^G(X)`.
    Fourier {
        #[command(flatten)]
        args: InputArgs,
        #[arg(long)]
        function: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Both sides of Bessel's inequality.
    Bessel {
        #[command(flatten)]
        args: InputArgs,
        #[arg(long)]
        function: PathBuf,
    },
    /// The invariant/perpendicular and mean/kernel splittings.
    Decompose {
        #[command(flatten)]
        args: InputArgs,
        #[arg(long)]
        function: PathBuf,
    },
    /// Frobenius reciprocity for `f` on `Y` and `g` on `X`.
    Reciprocity {
        #[command(flatten)]
        args: InputArgs,
        /// Comma-separated points of `Y`; defaults to the subset in `--function`.
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<Point>>,
        /// Function on `Y`.
        #[arg(long)]
        function: PathBuf,
        /// Function on `X`.
        #[arg(long)]
        against: PathBuf,
    },
    /// A permutation group whose orbits are the given cells.
    FromPartition {
        #[arg(long)]
        input: PathBuf,
        /// Use adjacent transpositions inside each cell only.
        #[arg(long)]
        minimal_generators: bool,
    },
    /// Search for an equivariant bijection between two actions.
    Equivalence {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        other: PathBuf,
    },
    /// Ready-made actions.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Debug, Subcommand)]
pub enum CorpusCommand {
    /// List the available names.
    List,
    /// Build a named action and recheck its flags.
    Build {
        name: String,
        /// `key=value`, repeatable.
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, String)>,
        /// Include the action in table form, usable as `--input`.
        #[arg(long)]
        emit_action: bool,
    },
}

fn parse_param(s: &str) -> Result<(String, String), String> {
    s.split_once('=')
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .ok_or_else(|| format!("expected key=value, got {s:?}"))
}

/// Runs one command and returns the report text.
pub fn run(cli: &Cli) -> Result<String, Error> {
    let report = match &cli.command {
        Command::Validate(args) => validate(args, cli.cap)?,
        Command::Orbits(args) => orbits(args, cli.cap)?,
        Command::Dimension(args) => dimension(args, cli.cap)?,
        Command::FreeCheck(args) => free_check(args, cli.cap)?,
        Command::Fourier {
            args,
            function,
            format,
        } => {
            let act = load_restricted(args, cli.cap)?;
            let f = read_json::<FunctionSpec>(function)?.resolve(&act)?;
            let coefficients = fs_ops::fourier_coefficients(&act, &f)?;
            if *format == Format::Csv {
                let mut out = String::from("cell,raw_sum_re,raw_sum_im,norm_sq\n");
                for c in &coefficients {
                    let cell: Vec<String> = c.cell.iter().map(usize::to_string).collect();
                    let _ = writeln!(
                        out,
                        "{},{},{},{}",
                        cell.join(" "),
                        c.raw_sum.re.to_canonical(),
                        c.raw_sum.im.to_canonical(),
                        c.norm_sq.to_canonical()
                    );
                }
                return Ok(out);
            }
            let projection = fs_ops::fourier_projection(&act, &f)?;
            json!({ "coefficients": coefficients, "projection": projection.values })
        }
        Command::Bessel { args, function } => {
            let act = load_restricted(args, cli.cap)?;
            let f = read_json::<FunctionSpec>(function)?.resolve(&act)?;
            let check = fs_ops::bessel_check(&act, &f)?;
            json!({
                "lhs": check.lhs,
                "rhs": check.rhs,
                "holds": check.holds(),
                "equality": check.is_equality(),
                "invariant": fs_ops::is_invariant(&act, &f)?.is_some(),
            })
        }
        Command::Decompose { args, function } => {
            let act = load_restricted(args, cli.cap)?;
            let f = read_json::<FunctionSpec>(function)?.resolve(&act)?;
            let d = fs_ops::decompose(&act, &f)?;
            json!({
                "invariant": d.invariant.values,
                "perp": d.perp.values,
                "mean": d.mean.values,
                "kernel": d.kernel.values,
                "invariant_kernel": d.invariant_kernel().values,
                "sigma": fs_ops::sigma(&f),
                "perp_subset": fs_ops::perp_subset_check(&act),
            })
        }
        Command::Reciprocity {
            args,
            subset,
            function,
            against,
        } => {
            let act = load_restricted(args, cli.cap)?;
            let f = read_json::<SubsetFunctionSpec>(function)?.resolve(&act)?;
            let y = match subset {
                Some(points) => {
                    let y = InvariantSubset::new(&act, points)?;
                    if y != *f.subset() {
                        return Err(ResIndError::SubsetMismatch.into());
                    }
                    y
                }
                None => f.subset().clone(),
            };
            let g = read_json::<FunctionSpec>(against)?.resolve(&act)?;
            serde_json::to_value(res_ind::reciprocity_check(&act, &y, &f, &g)?)
                .expect("serializable")
        }
        Command::FromPartition {
            input,
            minimal_generators,
        } => {
            let p = read_json::<PartitionJson>(input)?.resolve()?;
            let mode = if *minimal_generators {
                GeneratorMode::Adjacent
            } else {
                GeneratorMode::AllTranspositions
            };
            let pg = group_from_partition(&p, mode, cli.cap)?;
            let round_trip = pg.action.orbits() == p
                && pg
                    .group
                    .perms
                    .iter()
                    .all(|s| sp_membership(&p, s.images()).unwrap_or(false));
            json!({
                "group": GroupSpec::Permutation {
                    degree: p.degree(),
                    generators: pg.generators.iter().map(|g| g.images().to_vec()).collect(),
                },
                "order": pg.group.group.order(),
                "orbits": pg.action.orbits().cells(),
                "round_trip": if round_trip { "ok" } else { "failed" },
            })
        }
        Command::Equivalence { input, other } => {
            let a = read_json::<ActionSpec>(input)?.resolve(cli.cap)?;
            let b = read_json::<ActionSpec>(other)?.resolve(cli.cap)?;
            let bijection = a.are_equivalent(&b)?;
            json!({
                "equivalent": bijection.is_some(),
                "bijection": bijection,
                "dim_input": a.orbits().len(),
                "dim_other": b.orbits().len(),
            })
        }
        Command::Corpus(CorpusCommand::List) => json!({ "names": corpus::NAMES }),
        Command::Corpus(CorpusCommand::Build {
            name,
            params,
            emit_action,
        }) => {
            let params = params.iter().cloned().collect();
            let entry = corpus::build(name, &params)?;
            let a = &entry.action;
            let mut report = json!({
                "name": entry.name,
                "group_order": a.group().order(),
                "degree": a.degree(),
                "orbit_count": a.orbits().len(),
                "is_free": a.is_free(),
                "is_transitive": a.is_transitive(),
                "is_trivial": a.is_trivial(),
                "expected": entry.expected,
                "mismatches": entry.mismatches(),
            });
            if *emit_action {
                report["action"] =
                    serde_json::to_value(ActionSpec::from_action(a)).expect("serializable");
            }
            report
        }
    };
    Ok(render(&report))
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("reports are serializable");
    let mut s = serde_json::to_string_pretty(&value).expect("values are serializable");
    s.push('\n');
    s
}

fn validate(args: &InputArgs, cap: usize) -> Result<Value, Error> {
    let raw: Value = read_json(&args.input)?;
    let is_group = matches!(
        raw.get("kind").and_then(Value::as_str),
        Some("table" | "permutation")
    );
    if is_group {
        let spec: GroupSpec = from_value(&args.input, raw)?;
        let g = spec.resolve(cap)?.group;
        let mut report = json!({
            "kind": "group",
            "order": g.order(),
            "identity": g.identity(),
            "inv": g.elements().map(|a| g.inv(a)).collect::<Vec<_>>(),
            "is_abelian": g.is_abelian(),
        });
        if let Some(seeds) = &args.subgroup {
            let h = subgroup_of(&g, seeds)?;
            report["subgroup"] = json!({ "members": h.members(), "index": g.index(&h) });
        }
        return Ok(report);
    }
    let spec: ActionSpec = from_value(&args.input, raw)?;
    let act = spec.resolve(cap)?;
    Ok(json!({
        "kind": "action",
        "group_order": act.group().order(),
        "degree": act.degree(),
    }))
}

fn orbits(args: &InputArgs, cap: usize) -> Result<Value, Error> {
    let (act, h) = load_action(args, cap)?;
    let cells = match &h {
        Some(h) => act.orbits_under(h),
        None => act.orbits(),
    };
    let stabilizers: Vec<Value> = cells
        .cells()
        .iter()
        .map(|c| json!({ "point": c[0], "members": act.stabilizer(c[0]).members() }))
        .collect();
    let witness = act
        .freeness_witness()
        .map(|(element, point)| json!({ "element": element, "point": point }));
    let mut report = json!({
        "orbits": cells.cells(),
        "count": cells.len(),
        "stabilizers": stabilizers,
        "is_free": act.is_free(),
        "is_transitive": act.is_transitive(),
        "is_trivial": act.is_trivial(),
        "freeness_witness": witness,
    });
    if let Some(h) = h {
        report["subgroup"] = json!(h.members());
    }
    Ok(report)
}

fn dimension(args: &InputArgs, cap: usize) -> Result<Value, Error> {
    let (act, h) = load_action(args, cap)?;
    let h = h.unwrap_or_else(|| act.group().whole());
    let dim = act.burnside_dimension(&h)?;
    let dim = dim.to_i64().expect("dimension is a small integer");
    let mut report = json!({
        "dim": dim,
        "burnside_sum": act.fixed_point_total(&h),
        "group_order": h.order(),
    });
    if h.order() != act.group().order() {
        report["subgroup"] = json!(h.members());
        report["difference"] = json!(act.dimension_difference(&h)?);
    }
    Ok(report)
}

fn free_check(args: &InputArgs, cap: usize) -> Result<Value, Error> {
    let (act, h) = load_action(args, cap)?;
    let witness = act
        .freeness_witness()
        .map(|(element, point)| json!({ "element": element, "point": point }));
    let mut report = json!({
        "is_free": witness.is_none(),
        "witness": witness,
        "order_divides_degree": act.degree() % act.group().order() == 0,
    });
    if let (None, Some(h)) = (&report["witness"].as_object(), h) {
        let (ratio, index) = act.free_ratio_check(&h)?;
        report["ratio"] = json!(ratio);
        report["index"] = json!(index);
        report["subgroup"] = json!(h.members());
    }
    Ok(report)
}

fn load_action(args: &InputArgs, cap: usize) -> Result<(GroupAction, Option<Subgroup>), Error> {
    let act = read_json::<ActionSpec>(&args.input)?.resolve(cap)?;
    let h = match &args.subgroup {
        Some(seeds) => Some(subgroup_of(act.group(), seeds)?),
        None => None,
    };
    Ok((act, h))
}

/// The action, restricted to `--subgroup` when one is given.
fn load_restricted(args: &InputArgs, cap: usize) -> Result<GroupAction, Error> {
    let (act, h) = load_action(args, cap)?;
    match h {
        Some(h) => Ok(act.restrict_to(&h)?),
        None => Ok(act),
    }
}

fn subgroup_of(g: &crate::group::FiniteGroup, seeds: &[Element]) -> Result<Subgroup, Error> {
    if let Some(&element) = seeds.iter().find(|&&s| s >= g.order()) {
        return Err(GroupError::ElementOutOfRange {
            element,
            order: g.order(),
        }
        .into());
    }
    Ok(g.subgroup_generated(seeds))
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Error> {
    let text = fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    serde_json::from_str(&text).map_err(|e| {
        InputError::ParseError {
            path: path.display().to_string(),
            message: e.to_string(),
        }
        .into()
    })
}

fn from_value<T: DeserializeOwned>(path: &Path, value: Value) -> Result<T, Error> {
    serde_json::from_value(value).map_err(|e| {
        InputError::ParseError {
            path: path.display().to_string(),
            message: e.to_string(),
        }
        .into()
    })
}

/// Entry point used by the binary; returns the exit code.
pub fn main_with(cli: Cli) -> i32 {
    match run(&cli) {
        Ok(report) => match &cli.output {
            Some(path) => match fs::write(path, report) {
                Ok(()) => 0,
                Err(e) => {
                    let err: Error = InputError::Io {
                        path: path.display().to_string(),
                        message: e.to_string(),
                    }
                    .into();
                    eprint!("{}", render(&err));
                    err.exit_code()
                }
            },
            None => {
                print!("{report}");
                0
            }
        },
        Err(err) => {
            eprint!("{}", render(&err));
            err.exit_code()
        }
    }
}
