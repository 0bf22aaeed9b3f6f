//! Command-line front end. Exit status: 0 on success, 1 on a domain
//! violation (invalid datum, cap exceeded, failed oracle identity), 2 on a
//! usage error (bad flag, unreadable or malformed input, bad `QSUB_CAPS`).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use qsub_core::datum::SubgroupDatum;
use qsub_core::enumerate::{census, Caps};
use qsub_core::order::{hasse, leq_capped, Hasse};
use qsub_core::rootsys::{CartanType, Letter, RootSystem};
use qsub_core::Error;

use crate::config::{caps_doc, parse_caps, parse_gammas};
use crate::doc::{
    self, histogram, CensusClassDoc, CensusDoc, CensusParams, ClassDoc, DatumDoc, DimDoc, DocError, FamilyDoc,
    GroupDoc, HasseDoc, HomDoc, LeqDoc, PosetDoc, RootSystems, RootsDoc, WitnessDoc, VERSION,
};
use crate::oracle::{self, Check};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qsub", version, about = "Subgroup data for quantized coordinate algebras at roots of unity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Positive roots, dimensions and the convex order of a root system.
    Roots {
        #[arg(long = "type")]
        letter: String,
        #[arg(long)]
        rank: usize,
    },
    /// Dimensions attached to a subgroup datum.
    DatumDim {
        #[arg(long)]
        file: PathBuf,
    },
    /// Decides whether lhs ≤ rhs and reports a witness.
    Leq {
        #[arg(long)]
        lhs: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
    },
    /// Hasse diagram of a family of data modulo equivalence.
    Poset {
        #[arg(long)]
        family: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        out: Format,
    },
    /// Enumerates all data for a root system and Γ catalog, modulo equivalence.
    Census {
        #[arg(long = "type")]
        letter: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        ell: u64,
        /// Comma-separated catalog, e.g. "1,Z2,Z3,Z2xZ2".
        #[arg(long, default_value = "1")]
        gammas: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        out: Format,
    },
    /// Exact identity checks in the rank-one small quantum group.
    Oracle {
        #[arg(long)]
        ell: u64,
        #[arg(long, value_enum, default_value_t = Check::All)]
        check: Check,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(describe(&e))
    }
}

fn describe(e: &Error) -> String {
    match e {
        Error::InvalidDatum(vs) => {
            let mut s = String::from("invalid subgroup datum:");
            for v in vs {
                let _ = write!(s, "\n  - {v}");
            }
            s
        }
        other => other.to_string(),
    }
}

fn doc_failure(flag: &str, e: DocError) -> Failure {
    match e {
        DocError::Format(m) => Failure::Usage(format!("{flag}: {m}")),
        DocError::Domain(e) => Failure::Domain(describe(&e)),
    }
}

/// Runs the CLI on `args` (including the program name). `caps_env` is the
/// value of `QSUB_CAPS`, if set.
pub fn run<I, T>(args: I, caps_env: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = caps_env
        .map(parse_caps)
        .transpose()
        .map_err(Failure::Usage)
        .and_then(|caps| dispatch(cli.command, caps.unwrap_or_default(), out));
    match result {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_DOMAIN
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
}

fn dispatch(command: Command, caps: Caps, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Roots { letter, rank } => {
            let rs = RootSystem::build(cartan_type(&letter, rank)?);
            emit(out, &doc::render(&RootsDoc::of(&rs)?))?;
        }
        Command::DatumDim { file } => {
            let d = read_datum(&file, "--file", &mut RootSystems::default())?;
            emit(out, &doc::render(&DimDoc::of(&d)?))?;
        }
        Command::Leq { lhs, rhs } => {
            let mut systems = RootSystems::default();
            let a = read_datum(&lhs, "--lhs", &mut systems)?;
            let b = read_datum(&rhs, "--rhs", &mut systems)?;
            let forward = leq_capped(&a, &b, caps.max_enumeration)?;
            let backward = leq_capped(&b, &a, caps.max_enumeration)?;
            let report = LeqDoc {
                v: VERSION,
                leq: forward.is_some(),
                geq: backward.is_some(),
                equiv: forward.is_some() && backward.is_some(),
                witness: forward.map(|w| WitnessDoc { tau: HomDoc::of(&w.tau) }),
            };
            emit(out, &doc::render(&report))?;
        }
        Command::Poset { family, out: format } => {
            let text = read(&family, "--family")?;
            let fam: FamilyDoc = doc::parse(&text).map_err(|e| doc_failure("--family", e))?;
            let data = fam.to_family().map_err(|e| doc_failure("--family", e))?;
            let h = hasse(&data)?;
            match format {
                Format::Json => emit(out, &doc::render(&poset_doc(&data, &h)))?,
                Format::Dot => emit(out, &dot(&h, |i| data[h.classes[i].rep].clone(), |i| h.classes[i].members.len()))?,
            }
        }
        Command::Census { letter, rank, ell, gammas, out: format } => {
            let t = cartan_type(&letter, rank)?;
            let catalog = parse_gammas(&gammas).map_err(Failure::Usage)?;
            let rs = Arc::new(RootSystem::build(t));
            let c = census(&rs, ell, &catalog, &caps)?;
            match format {
                Format::Json => {
                    let report = CensusDoc {
                        v: VERSION,
                        params: CensusParams {
                            letter: letter.to_ascii_uppercase(),
                            rank,
                            ell,
                            gammas: catalog.iter().map(GroupDoc::of).collect(),
                            caps: caps_doc(&caps),
                        },
                        data_count: c.data.len(),
                        class_count: c.class_count(),
                        classes: c
                            .classes
                            .iter()
                            .map(|k| CensusClassDoc {
                                rep: DatumDoc::of(&k.rep),
                                size: k.size,
                                dim_ad: k.dim_ad.clone(),
                            })
                            .collect(),
                        dim_histogram: histogram(&c.dim_histogram),
                        hasse: HasseDoc {
                            edges: c.hasse.edges.iter().map(|&(i, j)| [i, j]).collect(),
                            maximal: c.hasse.maximal_classes(),
                        },
                    };
                    emit(out, &doc::render(&report))?;
                }
                Format::Dot => emit(out, &dot(&c.hasse, |i| c.classes[i].rep.clone(), |i| c.classes[i].size))?,
            }
        }
        Command::Oracle { ell, check } => {
            if ell > caps.max_ell {
                return Err(
                    Error::CapExceeded { axis: qsub_core::Axis::Ell, limit: caps.max_ell, requested: ell }.into()
                );
            }
            let report = oracle::run(ell, check)?;
            emit(out, &doc::render(&report))?;
            if !report.passed {
                return Ok(EXIT_DOMAIN);
            }
        }
    }
    Ok(EXIT_OK)
}

fn cartan_type(letter: &str, rank: usize) -> Result<CartanType, Failure> {
    let mut chars = letter.chars();
    let l = match (chars.next(), chars.next()) {
        (Some(c), None) => Letter::from_char(c).map_err(|e| Failure::Usage(format!("--type: {e}")))?,
        _ => return Err(Failure::Usage(format!("--type: expected one letter A-G, got {letter:?}"))),
    };
    CartanType::new(l, rank).map_err(|e| Failure::Usage(format!("--rank: {e}")))
}

fn read(path: &Path, flag: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{flag}: cannot read {}: {e}", path.display())))
}

fn read_datum(path: &Path, flag: &str, systems: &mut RootSystems) -> Result<SubgroupDatum, Failure> {
    let d: DatumDoc = doc::parse(&read(path, flag)?).map_err(|e| doc_failure(flag, e))?;
    d.to_datum(systems).map_err(|e| doc_failure(flag, e))
}

fn poset_doc(data: &[SubgroupDatum], h: &Hasse) -> PosetDoc {
    PosetDoc {
        v: VERSION,
        classes: h
            .classes
            .iter()
            .map(|c| ClassDoc { rep: DatumDoc::of(&data[c.rep]), members: c.members.clone() })
            .collect(),
        edges: h.edges.iter().map(|&(i, j)| [i, j]).collect(),
    }
}

fn set(s: &qsub_core::datum::IndexSet) -> String {
    let items: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

/// One-line description used as a DOT label.
pub fn label(d: &SubgroupDatum) -> String {
    let gamma = if d.gamma().is_trivial() {
        "1".to_string()
    } else {
        d.gamma().factors().iter().map(|f| format!("Z{f}")).collect::<Vec<_>>().join("x")
    };
    format!("I+={} I-={} |N|={} Gamma={}", set(d.iplus()), set(d.iminus()), d.n().order(), gamma)
}

/// Hasse diagram in DOT, larger classes drawn above smaller ones.
fn dot(h: &Hasse, rep: impl Fn(usize) -> SubgroupDatum, size: impl Fn(usize) -> usize) -> String {
    let mut s = String::from("// qsub hasse v1\ndigraph hasse {\n  rankdir=BT;\n  node [shape=box];\n");
    for i in 0..h.classes.len() {
        let _ = writeln!(s, "  c{i} [label=\"c{i}: {} ({} members)\"];", label(&rep(i)), size(i));
    }
    for &(i, j) in &h.edges {
        let _ = writeln!(s, "  c{i} -> c{j};");
    }
    s.push_str("}\n");
    s
}
