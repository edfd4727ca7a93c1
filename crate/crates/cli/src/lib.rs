pub mod golden;
pub mod report;
pub mod suites;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kdual_core::graded_algebra::{Degree, Variant};
use kdual_core::paper_rings::{ring, RingName};
use kdual_core::tduality::{dual_pair_report, BaseSpace};
use kdual_core::transforms::{group_cohomology_z2, slice_rmodule, t_power_table};

use golden::Golden;
use report::Report;
use suites::Suite;

pub const SCHEMA_JSON: &str = include_str!("../schema/output.schema.json");

const RING_HELP: &str = "\
Ring names: hh_point, hh_circle_trivial, hh_circle_flip, hh_cp_infty, hh_universal_base, \
kk_point, kk_circle_flip, kk_torus2, k0_equiv_circle, h_point, h_circle, h_cp_infty.

Expressions use +, -, *, ^ and parentheses. ASCII aliases: t12 = t^{1/2}, chi = χ, \
chi1 = χ₁, chi2 = χ₂, sigma = σ, chat = ĉ, ell = ℓ. In the cohomology rings t is t12^2.";

#[derive(Debug, Parser)]
#[command(
    name = "kdual",
    version,
    about = "Real and equivariant K-theory, cohomology and T-duality checks"
)]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Arithmetic in the presented rings
    #[command(subcommand, after_help = RING_HELP)]
    Ring(RingCommand),
    /// Check the fixed-point oracle on a flip torus
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Powers of the transform T on K of the flip circle
    #[command(subcommand)]
    Transform(TransformCommand),
    /// Group cohomology of Z/2
    #[command(subcommand)]
    Cohomology(CohomologyCommand),
    /// T-dual pairs over a base
    #[command(subcommand)]
    Tdual(TdualCommand),
    /// Run a verification suite against the golden data
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Debug, Subcommand)]
pub enum RingCommand {
    /// Normal form of an expression
    #[command(after_help = RING_HELP)]
    Eval {
        #[arg(long)]
        ring: RingName,
        expr: String,
    },
    /// Basis and additive group of one graded piece
    Slice {
        #[arg(long)]
        ring: RingName,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
        #[arg(long, default_value = "eq")]
        variant: Variant,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Relations, injectivity and K^0 for the flip torus of dimension N
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        torus: u8,
    },
}

#[derive(Debug, Subcommand)]
pub enum TransformCommand {
    /// T^K on the additive basis
    T {
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum CohomologyCommand {
    /// H^N(Z/2; Z(M))
    Z2Group {
        #[arg(long)]
        twist: u32,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum TdualCommand {
    /// Pairs, classes and duals
    Enumerate {
        #[arg(long, default_value = "circle-trivial")]
        base: BaseSpace,
    },
}

/// Exit status for a run whose checks all passed.
pub const EXIT_OK: i32 = 0;
/// Some check failed.
pub const EXIT_FAIL: i32 = 1;
/// Bad input: unparseable expression, unknown name, unreadable golden data.
pub const EXIT_USAGE: i32 = 2;

enum Output {
    Report(Report),
    Command { text: String, json: Value },
}

/// Runs the command and returns what to print with the exit status.
pub fn run(cli: &Cli) -> (String, i32) {
    let out = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => return (format!("error: {e}\n"), EXIT_USAGE),
    };
    match out {
        Output::Report(r) => {
            let code = if r.passed() { EXIT_OK } else { EXIT_FAIL };
            let text = match cli.format {
                Format::Text => r.to_text(),
                Format::Json => to_json(&serde_json::to_value(&r).expect("report serializes")),
            };
            (text, code)
        }
        Output::Command { text, json } => match cli.format {
            Format::Text => (text, EXIT_OK),
            Format::Json => (to_json(&json), EXIT_OK),
        },
    }
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serializes");
    s.push('\n');
    s
}

fn execute(cmd: &Command) -> Result<Output, String> {
    match cmd {
        Command::Ring(RingCommand::Eval { ring: name, expr }) => {
            let r = ring(*name);
            let x = r.parse(expr).map_err(|e| e.to_string())?;
            let degree = r.homogeneous_degree(&x).ok().flatten();
            let text = format!("{}\n", r.format(&x));
            Ok(Output::Command {
                text,
                json: json!({
                    "command": "ring eval",
                    "ring": name.as_str(),
                    "input": expr,
                    "normal_form": r.format(&x),
                    "ascii": r.format_ascii(&x),
                    "degree": degree.map(|d| d.to_string()),
                    "terms": r.element_to_json(&x),
                }),
            })
        }
        Command::Ring(RingCommand::Slice {
            ring: name,
            degree,
            variant,
        }) => {
            let r = ring(*name);
            let d = Degree::new(*degree, *variant);
            let c = r.component(d).map_err(|e| e.to_string())?;
            let basis: Vec<String> = c.basis.iter().map(|m| r.format_monomial(m)).collect();
            let module = slice_rmodule(r, d)
                .ok()
                .and_then(|m| m.classify().ok())
                .map(|m| m.to_string());
            let mut text = format!("{} in degree {d}: {}\n", name, c.describe());
            if let Some(m) = &module {
                text.push_str(&format!("as an R-module: {m}\n"));
            }
            Ok(Output::Command {
                text,
                json: json!({
                    "command": "ring slice",
                    "ring": name.as_str(),
                    "degree": d.to_string(),
                    "group": c.group().to_string(),
                    "description": c.describe(),
                    "basis": basis,
                    "rmodule": module,
                }),
            })
        }
        Command::Oracle(OracleCommand::Verify { torus }) => {
            let g = Golden::from_env()?;
            Ok(Output::Report(suites::oracle(&g, Some(*torus as usize))))
        }
        Command::Transform(TransformCommand::T { power }) => {
            let r = ring(RingName::KkCircleFlip);
            let rows = t_power_table(*power).map_err(|e| e.to_string())?;
            let mut text = String::new();
            let mut entries = Vec::new();
            for (x, y) in &rows {
                text.push_str(&format!("T^{power}({}) = {}\n", r.format(x), r.format(y)));
                entries.push(json!({"input": r.format(x), "output": r.format(y)}));
            }
            Ok(Output::Command {
                text,
                json: json!({"command": "transform t", "power": power, "values": entries}),
            })
        }
        Command::Cohomology(CohomologyCommand::Z2Group { twist, degree }) => {
            let g = group_cohomology_z2(*twist, *degree).map_err(|e| e.to_string())?;
            Ok(Output::Command {
                text: format!("H^{degree}(Z/2; Z({twist})) = {g}\n"),
                json: json!({
                    "command": "cohomology z2-group",
                    "twist": twist,
                    "degree": degree,
                    "group": g.to_string(),
                }),
            })
        }
        Command::Tdual(TdualCommand::Enumerate { base }) => {
            let mut v = dual_pair_report(*base).map_err(|e| e.to_string())?;
            let text = enumerate_text(&v);
            v.as_object_mut()
                .expect("report is an object")
                .insert("command".into(), json!("tdual enumerate"));
            Ok(Output::Command { text, json: v })
        }
        Command::Verify { suite } => {
            let g = Golden::from_env()?;
            Ok(Output::Report(suites::run_suite(*suite, &g)))
        }
    }
}

fn enumerate_text(v: &Value) -> String {
    let mut out = format!(
        "base {}: {} pairs, {} classes, involution {}\n",
        v["base"].as_str().unwrap_or_default(),
        v["pairs"],
        v["classes"],
        v["involution"]
    );
    for row in v["rows"].as_array().into_iter().flatten() {
        let label = |k: &str| row[k].as_str().unwrap_or_default().to_string();
        out.push_str(&format!(
            "  [{}] {}  ↔  [{}] {}\n",
            row["class"],
            label("label"),
            row["dual_class"],
            label("dual_label")
        ));
    }
    out
}
