//! Command-line front end.
//!
//! Exit codes: 0 success, 2 unreadable or malformed input, 3 a constraint of
//! the input is violated (degree too high), 4 oracle budget exceeded, 5 a
//! check failed.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::extremal::{gen_tf, gen_tk, spine_bent_model};
use crate::format::{self, FormatError};
use crate::layout::{realize, validate, GridLayout};
use crate::minbend::{embed, embed_with_sequence, EmbedError};
use crate::oracle::{oracle_b_with_budget, pairing_space_size, OracleError, DEFAULT_BUDGET};
use crate::render::{ascii, epg_svg, svg};
use crate::smodel::{LowerBound, SModel};
use crate::tree::Tree;
use crate::vptepg::{
    epg_graph, epg_max_bends, gen_b0_family, vpt_epg_transform, vpt_graph, VptError,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CONSTRAINT: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_CHECK: i32 = 5;

const MAX_TF_HEIGHT: usize = 20;
const MAX_TK_BENDS: usize = 36;

#[derive(Debug, Parser)]
#[command(
    name = "treebend",
    version,
    about = "Straight grid models of trees with few bends"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a model with the fewest bends and its optimality certificate.
    Embed {
        tree: PathBuf,
        #[arg(long, group = "fmt")]
        json: bool,
        #[arg(long, group = "fmt")]
        svg: bool,
        #[arg(long, group = "fmt")]
        ascii: bool,
        /// Build sequence file: the root on the first line, then `v p` lines.
        #[arg(long, value_name = "FILE")]
        seed_order: Option<PathBuf>,
    },
    /// Bend number by exhaustive search.
    Oracle {
        tree: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long)]
        json: bool,
    },
    /// Emit a generated tree or path family.
    Gen {
        kind: GenKind,
        k: usize,
        #[arg(long)]
        json: bool,
        /// For `tk`: emit the model whose spine turns at every inner vertex.
        #[arg(long)]
        model: bool,
    },
    /// Turn a path family on a tree into grid paths.
    Transform {
        model: PathBuf,
        /// Host drawing (SModel JSON) to use instead of the computed one.
        #[arg(long, value_name = "FILE")]
        host_model: Option<PathBuf>,
        #[arg(long, group = "fmt")]
        svg: bool,
        #[arg(long, group = "fmt")]
        json: bool,
    },
    /// Cross-check embed, oracle, certificate and layout on one tree.
    Verify {
        tree: PathBuf,
        /// Check this layout (GridLayout JSON) instead of the realized one.
        #[arg(long, value_name = "FILE")]
        layout: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long)]
        json: bool,
    },
    /// Draw a tree (embedded first) or a model (SModel JSON).
    Render {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Draw this layout (GridLayout JSON) instead of the realized one.
        #[arg(long, value_name = "FILE")]
        layout: Option<PathBuf>,
        /// Print the layout as JSON instead of drawing it.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenKind {
    Tf,
    Tk,
    B0,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Ascii,
}

/// A failed command: exit code plus message for stderr.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        let code = match e {
            FormatError::Vpt(VptError::HostDegreeTooHigh { .. }) => EXIT_CONSTRAINT,
            _ => EXIT_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<EmbedError> for Failure {
    fn from(e: EmbedError) -> Self {
        let code = match e {
            EmbedError::DegreeExceeded { .. } => EXIT_CONSTRAINT,
            EmbedError::SequenceMismatch => EXIT_INPUT,
            _ => EXIT_CHECK,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = match e {
            OracleError::DegreeExceeded { .. } => EXIT_CONSTRAINT,
            OracleError::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<VptError> for Failure {
    fn from(e: VptError) -> Self {
        FormatError::from(e).into()
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_CHECK, format!("write failed: {e}"))
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Embed {
            tree,
            json,
            svg,
            ascii,
            seed_order,
        } => cmd_embed(&tree, seed_order.as_deref(), json, svg, ascii, out, err),
        Command::Oracle { tree, budget, json } => cmd_oracle(&tree, budget, json, out),
        Command::Gen {
            kind,
            k,
            json,
            model,
        } => cmd_gen(kind, k, json, model, out),
        Command::Transform {
            model,
            host_model,
            svg,
            json,
        } => cmd_transform(&model, host_model.as_deref(), svg, json, out),
        Command::Verify {
            tree,
            layout,
            budget,
            json,
        } => cmd_verify(&tree, layout.as_deref(), budget, json, out),
        Command::Render {
            input,
            format,
            layout,
            json,
        } => cmd_render(&input, format, layout.as_deref(), json, out),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("cannot read {}: {e}", path.display())))
}

fn read_tree(path: &Path) -> Result<Tree, Failure> {
    Ok(format::parse_tree(&read(path)?)?)
}

fn read_layout(path: &Path) -> Result<GridLayout, Failure> {
    Ok(format::layout_from_json(&format::parse_json(&read(
        path,
    )?)?)?)
}

fn certificate_text(tree: &Tree, cert: &LowerBound) -> String {
    match cert {
        LowerBound::Pair(c) => {
            let to =
                c.to.map_or_else(|| "-".to_string(), |v| tree.display_name(v));
            format!(
                "certificate = critical pair ({}, {}) with {} bends",
                tree.display_name(c.from),
                to,
                c.value
            )
        }
        LowerBound::Junction(j) => {
            let arms: Vec<String> = j.arms.iter().map(|&u| tree.display_name(u)).collect();
            format!(
                "certificate = junction at {} over critical arms [{}] with {} bends",
                tree.display_name(j.vertex),
                arms.join(", "),
                j.value
            )
        }
    }
}

fn certificate_json(c: &Option<LowerBound>) -> Value {
    serde_json::to_value(c).expect("certificates serialize")
}

fn cmd_embed(
    path: &Path,
    seed_order: Option<&Path>,
    json: bool,
    as_svg: bool,
    as_ascii: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let tree = read_tree(path)?;
    let model = match seed_order {
        Some(p) => embed_with_sequence(&tree, &format::parse_build_sequence(&read(p)?)?)?,
        None => embed(&tree)?,
    };
    let b = model.max_bends();
    let cert = model.certify();
    let layout = realize(&model);
    if json {
        let doc = json!({
            "b": b,
            "certificate": certificate_json(&cert),
            "model": format::model_to_json(&model),
            "layout": format::layout_to_json(&layout),
        });
        out.write_all(format::to_pretty(&doc).as_bytes())?;
        return Ok(EXIT_OK);
    }
    let mut header = format!("b(T) = {b}\n");
    match &cert {
        Some(c) => header.push_str(&format!("{}\n", certificate_text(&tree, c))),
        None => header.push_str("certificate = none\n"),
    }
    if as_svg {
        // Keep stdout a well-formed SVG document.
        err.write_all(header.as_bytes())?;
        out.write_all(svg(&tree, &layout).as_bytes())?;
    } else {
        out.write_all(header.as_bytes())?;
        if as_ascii {
            out.write_all(ascii(&tree, &layout).as_bytes())?;
        } else {
            out.write_all(slot_listing(&model).as_bytes())?;
        }
    }
    Ok(EXIT_OK)
}

/// One line per vertex: `name: neighbor=slot ...`.
fn slot_listing(model: &SModel) -> String {
    let tree = model.tree();
    (0..tree.len())
        .map(|v| {
            let slots: Vec<String> = tree
                .neighbors(v)
                .iter()
                .map(|&u| format!("{}={}", tree.display_name(u), model.slot(v, u)))
                .collect();
            format!("{}: {}\n", tree.display_name(v), slots.join(" "))
        })
        .collect()
}

fn cmd_oracle(path: &Path, budget: u128, json: bool, out: &mut dyn Write) -> Outcome {
    let tree = read_tree(path)?;
    let b = oracle_b_with_budget(&tree, budget)?;
    if json {
        let doc = json!({ "b": b, "pairings": pairing_space_size(&tree).to_string() });
        out.write_all(format::to_pretty(&doc).as_bytes())?;
    } else {
        writeln!(out, "b(T) = {b}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_gen(kind: GenKind, k: usize, json: bool, model: bool, out: &mut dyn Write) -> Outcome {
    if model {
        if !matches!(kind, GenKind::Tk) || k > MAX_TK_BENDS {
            return Err(Failure::new(
                EXIT_INPUT,
                "--model needs `tk` with a k in range",
            ));
        }
        let doc = format::model_to_json(&spine_bent_model(k));
        out.write_all(format::to_pretty(&doc).as_bytes())?;
        return Ok(EXIT_OK);
    }
    let tree = match kind {
        GenKind::Tf if k <= MAX_TF_HEIGHT => gen_tf(k).tree,
        GenKind::Tk if k <= MAX_TK_BENDS => gen_tk(k).tree,
        GenKind::B0 if (1..=MAX_TK_BENDS).contains(&k) => {
            let doc = format::vpt_to_json(&gen_b0_family(k));
            out.write_all(format::to_pretty(&doc).as_bytes())?;
            return Ok(EXIT_OK);
        }
        _ => {
            return Err(Failure::new(
                EXIT_INPUT,
                format!("k = {k} is out of range for {kind:?}"),
            ))
        }
    };
    if json {
        out.write_all(format::to_pretty(&format::tree_to_json(&tree)).as_bytes())?;
    } else {
        out.write_all(format::write_tree_text(&tree).as_bytes())?;
    }
    Ok(EXIT_OK)
}

fn cmd_transform(
    path: &Path,
    host_path: Option<&Path>,
    as_svg: bool,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let vpt = format::vpt_from_json(&format::parse_json(&read(path)?)?)?;
    let host_model = match host_path {
        Some(p) => format::model_from_json(&format::parse_json(&read(p)?)?)?,
        None => embed(vpt.host())?,
    };
    let host_layout = realize(&host_model);
    let epg = vpt_epg_transform(&vpt, &host_model, &host_layout)?;
    if epg_graph(&epg) != vpt_graph(&vpt) {
        return Err(Failure::new(
            EXIT_CHECK,
            "grid paths do not reproduce the intersection graph",
        ));
    }
    let bends = epg_max_bends(&epg);
    let host_b = host_model.max_bends();
    if as_svg {
        out.write_all(epg_svg(&epg).as_bytes())?;
    } else if json {
        let doc = json!({
            "epg": format::epg_to_json(&epg),
            "epg_max_bends": bends,
            "host_b": host_b,
        });
        out.write_all(format::to_pretty(&doc).as_bytes())?;
    } else {
        writeln!(out, "epg bends = {bends}")?;
        writeln!(out, "b(T) = {host_b}")?;
        out.write_all(format::to_pretty(&format::epg_to_json(&epg)).as_bytes())?;
    }
    Ok(EXIT_OK)
}

struct Check {
    name: &'static str,
    /// `None` when skipped.
    pass: Option<bool>,
    detail: String,
}

fn cmd_verify(
    path: &Path,
    layout_path: Option<&Path>,
    budget: u128,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let tree = read_tree(path)?;
    let model = embed(&tree)?;
    let b = model.max_bends();
    let mut checks = vec![Check {
        name: "embed",
        pass: Some(true),
        detail: format!("b = {b}"),
    }];

    checks.push(match oracle_b_with_budget(&tree, budget) {
        Ok(ob) => Check {
            name: "oracle",
            pass: Some(ob == b),
            detail: format!("oracle b = {ob}, embed b = {b}"),
        },
        Err(OracleError::BudgetExceeded { space, .. }) => Check {
            name: "oracle",
            pass: None,
            detail: format!("{space} pairings exceed the budget"),
        },
        Err(e) => return Err(e.into()),
    });

    let cert = model.certify();
    let cert_ok = cert
        .as_ref()
        .is_some_and(|c| c.value() == b && model.check_lower_bound(c));
    checks.push(Check {
        name: "certificate",
        pass: Some(cert_ok),
        detail: cert.map_or_else(|| "none found".to_string(), |c| certificate_text(&tree, &c)),
    });

    let layout = match layout_path {
        Some(p) => read_layout(p)?,
        None => realize(&model),
    };
    let report = validate(&layout, &model);
    let mut detail: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
    let mut layout_ok = report.is_valid();
    if layout_ok {
        let leaves = tree.leaves();
        let drawn = leaves
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| leaves[i + 1..].iter().map(move |&c| (a, c)))
            .map(|(a, c)| layout.walk_bends(&tree.path_between(a, c)))
            .max()
            .unwrap_or(0);
        layout_ok = drawn == b;
        detail.push(format!("drawn maximum bends {drawn}"));
    }
    checks.push(Check {
        name: "layout",
        pass: Some(layout_ok),
        detail: detail.join("; "),
    });

    let all_pass = checks.iter().all(|c| c.pass != Some(false));
    if json {
        let items: Vec<Value> = checks
            .iter()
            .map(|c| json!({ "check": c.name, "pass": c.pass, "detail": c.detail }))
            .collect();
        let doc = json!({ "b": b, "pass": all_pass, "checks": items });
        out.write_all(format::to_pretty(&doc).as_bytes())?;
    } else {
        for c in &checks {
            let tag = match c.pass {
                Some(true) => "PASS",
                Some(false) => "FAIL",
                None => "SKIP",
            };
            writeln!(out, "{tag} {}: {}", c.name, c.detail)?;
        }
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_CHECK })
}

fn cmd_render(
    path: &Path,
    fmt: Format,
    layout_path: Option<&Path>,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let text = read(path)?;
    let model = if text.trim_start().starts_with('{') {
        let value = format::parse_json(&text)?;
        if value.get("slots").is_some() {
            format::model_from_json(&value)?
        } else {
            embed(&format::tree_from_json(&value)?)?
        }
    } else {
        embed(&format::parse_tree(&text)?)?
    };
    let layout = match layout_path {
        Some(p) => {
            let l = read_layout(p)?;
            let report = validate(&l, &model);
            if let Some(v) = report.violations.first() {
                return Err(Failure::new(
                    EXIT_CONSTRAINT,
                    format!("invalid layout: {v}"),
                ));
            }
            l
        }
        None => realize(&model),
    };
    let tree = model.tree();
    let rendered = if json {
        format::to_pretty(&format::layout_to_json(&layout))
    } else {
        match fmt {
            Format::Svg => svg(tree, &layout),
            Format::Ascii => ascii(tree, &layout),
        }
    };
    out.write_all(rendered.as_bytes())?;
    Ok(EXIT_OK)
}
