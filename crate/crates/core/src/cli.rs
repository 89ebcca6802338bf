//! Command dispatch for the `nwg` binary, kept in the library so it can be driven in-process.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{NwgError, Result};
use crate::instance::{inline_instance, parse_csv, Instance, InstanceFile};
use crate::namikawa::fastpath::{affine_fast_path, affine_null_root, dynkin_fast_path, is_dynkin};
use crate::namikawa::folding::round_trip;
use crate::namikawa::{analyze, classify_codim2_root, Analysis, LeafType, NamikawaGroup};
use crate::quiver::DimensionVector;
use crate::report::{
    CheckEntry, CheckReport, ComputeReport, RootsReport, StrataReport, NONEMPTINESS_WARNING,
    SCHEMA_VERSION,
};
use crate::roots::enumerate_positive_roots_leq;
use crate::sigma::{affinization_is_affine, SubgenericContext};
use crate::strata::{enumerate_representation_types, has_codim2_leaf_bruteforce};

#[derive(Debug, Parser)]
#[command(name = "nwg", version, about = "Namikawa-Weyl groups of affinized quiver varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Codimension-2 roots, relations and the group.
    Compute(Source),
    /// Positive roots bounded by v.
    Roots(Source),
    /// Representation types along the ray of a root.
    Strata {
        #[command(flatten)]
        source: Source,
        /// Primitive positive root bounded by v, comma separated in vertex order.
        #[arg(long)]
        v1: String,
    },
    /// Cross-validation against the brute-force stratification and the fast paths.
    Check(Source),
}

#[derive(Debug, Args)]
pub struct Source {
    /// Instance file (JSON).
    pub file: Option<PathBuf>,
    /// Standard family instead of a file: A3, D5, E6, A~2, D~4, E~7, Jordan.
    #[arg(long, conflicts_with = "file", requires = "v")]
    pub quiver: Option<String>,
    /// Dimension vector for --quiver, comma separated.
    #[arg(long)]
    pub v: Option<String>,
    /// Framing for --quiver, comma separated (default zero).
    #[arg(long)]
    pub w: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Source {
    fn load(&self) -> Result<Instance> {
        let file = match (&self.file, &self.quiver) {
            (Some(path), _) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| NwgError::Input(format!("{}: {e}", path.display())))?;
                InstanceFile::parse(&text)
                    .map_err(|e| NwgError::Input(format!("{}: {e}", path.display())))?
            }
            (None, Some(q)) => inline_instance(q, self.v.as_deref().unwrap_or(""), self.w.as_deref())?,
            (None, None) => {
                return Err(NwgError::Input("give an instance file or --quiver with --v".into()))
            }
        };
        file.validate()
    }
}

/// Parses arguments and runs one command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(mut out) => {
            if out.code != 0 && out.stderr.is_empty() {
                out.stderr = "nwg: checks disagree\n".into();
            }
            out
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("nwg: {e}\n") },
    }
}

fn emit<T: serde::Serialize>(format: Format, report: &T, text: String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize") + "\n",
        Format::Text => text,
    }
}

fn warn(lines: &[String]) -> String {
    lines.iter().map(|w| format!("warning: {w}\n")).collect()
}

fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Compute(src) => {
            let inst = src.load()?;
            let a = analyze(&inst.setting)?;
            let r = ComputeReport::new(&inst, &a);
            Ok(Outcome { code: 0, stdout: emit(src.format, &r, r.to_text()), stderr: warn(&r.warnings) })
        }
        Command::Roots(src) => {
            let inst = src.load()?;
            let roots = enumerate_positive_roots_leq(&inst.setting.quiver, &inst.setting.v)?;
            let r = RootsReport::new(&inst, &roots);
            Ok(Outcome { code: 0, stdout: emit(src.format, &r, r.to_text()), stderr: String::new() })
        }
        Command::Strata { source, v1 } => {
            let inst = source.load()?;
            let v1 = DimensionVector(parse_csv("--v1", v1)?);
            let ctx = SubgenericContext::new(&inst.setting, &v1)?;
            let types = enumerate_representation_types(&ctx)?;
            let has = has_codim2_leaf_bruteforce(&ctx)?;
            let mut warnings = vec![NONEMPTINESS_WARNING.to_string()];
            let leaf = if inst.setting.is_dominant() {
                classify_codim2_root(&inst.setting, &v1)?
            } else {
                warnings.push("input is not dominant; leaf type not classified".into());
                None
            };
            let affine = affinization_is_affine(&ctx)?;
            let r = StrataReport::new(&inst, &ctx.v1, &types, has, leaf, affine, warnings);
            Ok(Outcome {
                code: 0,
                stdout: emit(source.format, &r, r.to_text()),
                stderr: warn(&r.warnings),
            })
        }
        Command::Check(src) => {
            let inst = src.load()?;
            let checks = cross_validate(&inst)?;
            let passed = checks.iter().all(|c| c.passed);
            let r = CheckReport {
                schema_version: SCHEMA_VERSION,
                command: "check".into(),
                input: InstanceFile::from_setting(&inst.names, &inst.setting),
                checks,
                passed,
            };
            Ok(Outcome {
                code: if passed { 0 } else { 4 },
                stdout: emit(src.format, &r, r.to_text()),
                stderr: warn(&[NONEMPTINESS_WARNING.to_string()]),
            })
        }
    }
}

/// Factors compared as a multiset of (type, member set).
pub fn same_factors(a: &NamikawaGroup, b: &NamikawaGroup) -> bool {
    let key = |g: &NamikawaGroup| {
        let mut k: Vec<_> = g
            .factors
            .iter()
            .map(|f| {
                let mut m = f.members.clone();
                m.sort();
                (f.cartan_type, m)
            })
            .collect();
        k.sort();
        k
    };
    key(a) == key(b)
}

fn entry(name: &str, passed: bool, detail: String) -> CheckEntry {
    CheckEntry { name: name.into(), passed, detail }
}

/// Runs every available cross-check on one instance.
pub fn cross_validate(inst: &Instance) -> Result<Vec<CheckEntry>> {
    let a: Analysis = analyze(&inst.setting)?;
    let mut out = Vec::new();

    let (small, _) = a.reduced.normalized();
    let mut agree = 0;
    let mut disagree = Vec::new();
    for r in enumerate_positive_roots_leq(&small.quiver, &small.v)? {
        if r.vector.gcd() != 1 {
            continue;
        }
        let typed: Option<LeafType> = classify_codim2_root(&small, &r.vector)?;
        let ctx = SubgenericContext::new(&small, &r.vector)?;
        let brute = has_codim2_leaf_bruteforce(&ctx)?;
        if typed.is_some() == brute {
            agree += 1;
        } else {
            disagree.push(format!("{} (classified {typed:?}, strata {brute})", r.vector));
        }
    }
    out.push(entry(
        "classification vs strata",
        disagree.is_empty(),
        if disagree.is_empty() {
            format!("{agree} rays agree")
        } else {
            format!("disagreement on {}", disagree.join(", "))
        },
    ));

    out.push(entry(
        "relation table",
        true,
        format!("{} relations conform to the leaf-type table", a.relations.len()),
    ));

    let mut bad = Vec::new();
    for f in &a.group.factors {
        if let Err(e) = round_trip(f) {
            bad.push(e.to_string());
        }
    }
    out.push(entry(
        "round-trip folding",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} factors refold exactly", a.group.factors.len())
        } else {
            bad.join("; ")
        },
    ));

    let fast = if is_dynkin(&a.reduced.quiver) {
        Some(("Dynkin", dynkin_fast_path(&a.reduced)?))
    } else if affine_null_root(&a.reduced.quiver).is_some() {
        Some(("affine", affine_fast_path(&a.reduced)?))
    } else {
        None
    };
    match fast {
        Some((kind, g)) => {
            let ok = same_factors(&g, &a.group);
            out.push(entry(
                "fast path",
                ok,
                format!("{kind} closed form gives {}, pipeline gives {}", g.label(), a.group.label()),
            ));
        }
        None => out.push(entry("fast path", true, "not applicable to this quiver".into())),
    }
    Ok(out)
}
