//! Command-line front end.  Every subcommand assembles its whole output as
//! one string before printing, so identical invocations write identical
//! bytes.  Exit codes: 0 on success, 1 when `verify` finds a failing check,
//! 2 on any usage or input error.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::assoc::{self, face_poset, h_vector_of, realize};
use crate::bounds::Bounds;
use crate::chains::maximal_chains;
use crate::complex::{bk_complex, order_complex, CellComplex};
use crate::error::{Error, Result};
use crate::export;
use crate::freeprob::{cumulants_from_moments, moments_from_cumulants, Sequence};
use crate::parking;
use crate::partition::{enumerate, rank_vector, LatticeKind};
use crate::series::{format_rational, parse_rationals};
use crate::verify;

#[derive(Parser)]
#[command(
    name = "nckit",
    version,
    about = "Noncrossing partition lattices, their chains, complexes, polytopes and transforms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum KindArg {
    /// Noncrossing partitions only.
    Nc,
    /// All set partitions.
    Pi,
}

impl From<KindArg> for LatticeKind {
    fn from(kind: KindArg) -> LatticeKind {
        match kind {
            KindArg::Nc => LatticeKind::Noncrossing,
            KindArg::Pi => LatticeKind::Full,
        }
    }
}

fn kind_name(kind: KindArg) -> &'static str {
    match kind {
        KindArg::Nc => "nc",
        KindArg::Pi => "pi",
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Dot,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum LabelArg {
    /// The transposition attached to each cover.
    Transposition,
    /// The largest-element-below merge labels.
    Stanley,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate a partition lattice: its elements, rank vector or Hasse diagram.
    Lattice {
        /// Ground-set size.
        #[arg(long)]
        n: usize,
        /// Which lattice to build.
        #[arg(long, value_enum, default_value_t = KindArg::Nc)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Print the rank vector instead of the elements.
        #[arg(long)]
        ranks: bool,
    },
    /// Maximal chains of the noncrossing lattice with their edge labels.
    Chains {
        /// Ground-set size.
        #[arg(long)]
        n: usize,
        /// Which labels to display.
        #[arg(long, value_enum, default_value_t = LabelArg::Transposition)]
        labels: LabelArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Parking functions: test one preference list or enumerate them all.
    Parking {
        /// Comma-separated preference list to test.
        #[arg(long, value_name = "PREFS", conflicts_with = "enumerate")]
        check: Option<String>,
        /// Enumerate every parking function of this length.
        #[arg(long, value_name = "N")]
        enumerate: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Cell complexes built from the chains of the noncrossing lattice.
    Complex {
        /// Ground-set size.
        #[arg(long)]
        n: usize,
        /// Build the order complex (one simplex per chain).
        #[arg(long, conflicts_with = "bk")]
        order: bool,
        /// Build the one-vertex quotient complex.
        #[arg(long)]
        bk: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// The associahedron: faces, h-vector or a coordinate realization.
    Assoc {
        /// Index of the polytope (it has Catalan-many vertices on n+1 letters).
        #[arg(long)]
        n: usize,
        /// Print the h-vector under a generic linear functional.
        #[arg(long, conflicts_with_all = ["faces", "realize"])]
        hvector: bool,
        /// List the faces by dimension.
        #[arg(long, conflicts_with = "realize")]
        faces: bool,
        /// Realize the polytope with integer coordinates and rotation edges.
        #[arg(long)]
        realize: bool,
        /// Comma-separated functional coefficients (rationals allowed).
        #[arg(long, value_name = "COEFFS")]
        functional: Option<String>,
        /// Seed for the random functional used when none is given.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Moment/cumulant transforms over a partition lattice.
    Freeprob {
        #[command(subcommand)]
        direction: FreeprobCommand,
    },
    /// Run the whole cross-check suite and print a pass/fail report.
    Verify {
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum FreeprobCommand {
    /// Moments of the distribution with the given cumulants.
    Moments {
        /// Comma-separated cumulants, rationals allowed.
        #[arg(long)]
        cumulants: String,
        #[arg(long, value_enum, default_value_t = KindArg::Nc)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Cumulants of the distribution with the given moments.
    Cumulants {
        /// Comma-separated moments, rationals allowed.
        #[arg(long)]
        moments: String,
        #[arg(long, value_enum, default_value_t = KindArg::Nc)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

/// Parses the arguments, runs one subcommand and returns the process exit
/// code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let bounds = match Bounds::from_env() {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match dispatch(cli.command, &bounds) {
        Ok(output) => {
            print!("{}", output.text);
            output.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn unsupported(format: &str, what: &str) -> Error {
    Error::Parse(format!("{what} has no {format} form"))
}

fn dispatch(command: Command, bounds: &Bounds) -> Result<Output> {
    match command {
        Command::Lattice {
            n,
            kind,
            format,
            ranks,
        } => lattice(n, kind, format, ranks, bounds),
        Command::Chains { n, labels, format } => chains(n, labels, format, bounds),
        Command::Parking {
            check,
            enumerate,
            format,
        } => parking_cmd(check, enumerate, format, bounds),
        Command::Complex {
            n,
            order,
            bk,
            format,
        } => complex_cmd(n, order, bk, format, bounds),
        Command::Assoc {
            n,
            hvector,
            faces,
            realize: do_realize,
            functional,
            seed,
            format,
        } => assoc_cmd(n, hvector, faces, do_realize, functional, seed, format, bounds),
        Command::Freeprob { direction } => freeprob_cmd(direction, bounds),
        Command::Verify { seed } => {
            let results = verify::run_all(seed);
            let code = if verify::all_passed(&results) { 0 } else { 1 };
            Ok(Output {
                text: verify::report(&results),
                code,
            })
        }
    }
}

fn lattice(
    n: usize,
    kind: KindArg,
    format: Format,
    ranks: bool,
    bounds: &Bounds,
) -> Result<Output> {
    if ranks {
        let v = rank_vector(n, kind.into(), bounds)?;
        let text = match format {
            Format::Table => format!(
                "({})\n",
                v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
            ),
            Format::Json => format!(
                "{}\n",
                json!({"n": n, "kind": kind_name(kind), "ranks": v})
            ),
            Format::Dot => return Err(unsupported("dot", "a rank vector")),
            Format::Csv => return Err(unsupported("csv", "a rank vector")),
        };
        return Ok(Output::ok(text));
    }
    let elements = enumerate(n, kind.into(), bounds)?;
    let text = match format {
        Format::Table | Format::Csv => {
            let mut out = String::new();
            for p in &elements {
                out.push_str(&p.to_string());
                out.push('\n');
            }
            out
        }
        Format::Json => format!("{}\n", export::lattice_json(&elements)),
        Format::Dot => export::lattice_dot(&elements, kind.into()),
    };
    Ok(Output::ok(text))
}

fn chains(n: usize, labels: LabelArg, format: Format, bounds: &Bounds) -> Result<Output> {
    let chains = maximal_chains(n, bounds)?;
    let text = match format {
        Format::Csv => export::chains_csv(&chains),
        Format::Table => {
            let mut out = String::new();
            for chain in &chains {
                let path = chain
                    .elements()
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" < ");
                let shown = match labels {
                    LabelArg::Transposition => chain
                        .labels()
                        .iter()
                        .map(|t| t.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                    LabelArg::Stanley => chain
                        .stanley_labels()
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(" "),
                };
                out.push_str(&format!("{path} : {shown}\n"));
            }
            out
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = chains
                .iter()
                .map(|chain| {
                    let elements: Vec<String> =
                        chain.elements().iter().map(|p| p.to_string()).collect();
                    match labels {
                        LabelArg::Transposition => json!({
                            "elements": elements,
                            "labels": chain.labels().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                        }),
                        LabelArg::Stanley => json!({
                            "elements": elements,
                            "labels": chain.stanley_labels(),
                        }),
                    }
                })
                .collect();
            format!("{}\n", serde_json::Value::Array(rows))
        }
        Format::Dot => return Err(unsupported("dot", "a chain listing")),
    };
    Ok(Output::ok(text))
}

fn parking_cmd(
    check: Option<String>,
    enumerate: Option<usize>,
    format: Format,
    bounds: &Bounds,
) -> Result<Output> {
    match (check, enumerate) {
        (Some(prefs), None) => {
            let prefs = parking::parse_preferences(&prefs)?;
            let assignment = parking::park_assignment(&prefs)?;
            let text = match format {
                Format::Json => format!(
                    "{}\n",
                    json!({"parks": assignment.is_some(), "assignment": assignment})
                ),
                Format::Table => match assignment {
                    Some(spots) => format!(
                        "parks; spots {}\n",
                        spots
                            .iter()
                            .map(usize::to_string)
                            .collect::<Vec<_>>()
                            .join(",")
                    ),
                    None => "does not park\n".to_string(),
                },
                Format::Dot => return Err(unsupported("dot", "a parking check")),
                Format::Csv => return Err(unsupported("csv", "a parking check")),
            };
            Ok(Output::ok(text))
        }
        (None, Some(n)) => {
            let all = parking::enumerate(n, bounds)?;
            let text = match format {
                Format::Table => {
                    let mut out = String::new();
                    for prefs in &all {
                        out.push_str(
                            &prefs
                                .iter()
                                .map(usize::to_string)
                                .collect::<Vec<_>>()
                                .join(","),
                        );
                        out.push('\n');
                    }
                    out
                }
                Format::Json => format!("{}\n", json!(all)),
                Format::Csv => {
                    let mut out = (1..=n)
                        .map(|i| format!("p{i}"))
                        .collect::<Vec<_>>()
                        .join(",");
                    out.push('\n');
                    for prefs in &all {
                        out.push_str(
                            &prefs
                                .iter()
                                .map(usize::to_string)
                                .collect::<Vec<_>>()
                                .join(","),
                        );
                        out.push('\n');
                    }
                    out
                }
                Format::Dot => return Err(unsupported("dot", "a parking enumeration")),
            };
            Ok(Output::ok(text))
        }
        _ => Err(Error::Parse(
            "parking needs exactly one of --check or --enumerate".into(),
        )),
    }
}

fn complex_cmd(
    n: usize,
    order: bool,
    bk: bool,
    format: Format,
    bounds: &Bounds,
) -> Result<Output> {
    let complex: CellComplex = if order && !bk {
        order_complex(n, bounds)?
    } else if bk && !order {
        bk_complex(n, bounds)?
    } else {
        return Err(Error::Parse(
            "complex needs exactly one of --order or --bk".into(),
        ));
    };
    let text = match format {
        Format::Table => format!(
            "cells by dimension: {:?}\nEuler characteristic: {}\n",
            complex.cell_counts(),
            complex.euler_characteristic()
        ),
        Format::Json => format!("{}\n", export::complex_json(&complex)),
        Format::Dot => export::complex_dot(&complex),
        Format::Csv => return Err(unsupported("csv", "a cell complex")),
    };
    Ok(Output::ok(text))
}

#[allow(clippy::too_many_arguments)]
fn assoc_cmd(
    n: usize,
    hvector: bool,
    faces: bool,
    do_realize: bool,
    functional: Option<String>,
    seed: u64,
    format: Format,
    bounds: &Bounds,
) -> Result<Output> {
    if hvector {
        let polytope = realize(n, bounds)?;
        let h = match functional {
            Some(raw) => h_vector_of(&polytope, &parse_rationals(&raw)?)?,
            None => {
                use rand::SeedableRng;
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                loop {
                    match h_vector_of(&polytope, &assoc::random_functional(n, &mut rng)) {
                        Ok(h) => break h,
                        Err(Error::LevelEdge { .. }) => continue,
                        Err(e) => return Err(e),
                    }
                }
            }
        };
        let text = match format {
            Format::Table => format!(
                "({})\n",
                h.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
            ),
            Format::Json => format!("{}\n", json!({"n": n, "h": h})),
            Format::Dot => return Err(unsupported("dot", "an h-vector")),
            Format::Csv => return Err(unsupported("csv", "an h-vector")),
        };
        return Ok(Output::ok(text));
    }
    if faces {
        let poset = face_poset(n, bounds)?;
        let text = match format {
            Format::Table => {
                let mut out = format!("faces by dimension: {:?}\n", poset.counts_by_dimension());
                for face in poset.faces() {
                    out.push_str(&format!("dim {}: {}\n", face.dimension(), face));
                }
                out
            }
            Format::Json => {
                let rows: Vec<serde_json::Value> = poset
                    .faces()
                    .iter()
                    .map(|f| json!({"dim": f.dimension(), "face": f.to_string()}))
                    .collect();
                format!(
                    "{}\n",
                    json!({"counts": poset.counts_by_dimension(), "faces": rows})
                )
            }
            Format::Dot => return Err(unsupported("dot", "a face listing")),
            Format::Csv => return Err(unsupported("csv", "a face listing")),
        };
        return Ok(Output::ok(text));
    }
    if do_realize {
        let polytope = realize(n, bounds)?;
        let text = match format {
            Format::Csv => export::coords_csv(&polytope),
            Format::Dot => export::rotation_dot(&polytope),
            Format::Table => {
                let mut out = String::new();
                for v in polytope.vertices() {
                    out.push_str(&format!(
                        "{} @ ({})\n",
                        v.id,
                        v.coords
                            .iter()
                            .map(i64::to_string)
                            .collect::<Vec<_>>()
                            .join(",")
                    ));
                }
                out.push_str(&format!("{} rotation edges\n", polytope.edges().len()));
                out
            }
            Format::Json => {
                let vertices: Vec<serde_json::Value> = polytope
                    .vertices()
                    .iter()
                    .map(|v| json!({"id": v.id, "coords": v.coords}))
                    .collect();
                format!(
                    "{}\n",
                    json!({"vertices": vertices, "edges": polytope.edges()})
                )
            }
        };
        return Ok(Output::ok(text));
    }
    Err(Error::Parse(
        "assoc needs one of --hvector, --faces or --realize".into(),
    ))
}

fn freeprob_cmd(direction: FreeprobCommand, bounds: &Bounds) -> Result<Output> {
    let (raw, kind, format, to_moments) = match direction {
        FreeprobCommand::Moments {
            cumulants,
            kind,
            format,
        } => (cumulants, kind, format, true),
        FreeprobCommand::Cumulants {
            moments,
            kind,
            format,
        } => (moments, kind, format, false),
    };
    let input = Sequence::new(parse_rationals(&raw)?);
    let (output, field) = if to_moments {
        (
            moments_from_cumulants(&input, kind.into(), bounds)?,
            "moments",
        )
    } else {
        (
            cumulants_from_moments(&input, kind.into(), bounds)?,
            "cumulants",
        )
    };
    let rendered: Vec<String> = output.values().iter().map(format_rational).collect();
    let text = match format {
        Format::Table => format!("{}\n", rendered.join(",")),
        Format::Json => format!(
            "{}\n",
            json!({"kind": kind_name(kind), field: rendered})
        ),
        Format::Dot => return Err(unsupported("dot", "a transform")),
        Format::Csv => {
            let mut out = String::from("degree,value\n");
            for (i, v) in rendered.iter().enumerate() {
                out.push_str(&format!("{},{v}\n", i + 1));
            }
            out
        }
    };
    Ok(Output::ok(text))
}
