//! Command-line front end. Commands load JSON inputs, validate them, run
//! the library, and emit a structured JSON result (the source of truth)
//! or a text rendering derived from it. Exit codes: 0 success, 1 invalid
//! input, 2 a theorem hypothesis fails (non-invariant radical, no usable
//! integral, no averaging route, missing symmetry), 3 I/O or parse error.
//! Output is byte-for-byte deterministic for identical inputs.

use crate::action::{
    validate_coaction, validate_grading, ActionError, CyclicAction, EquivStructure, GradedModule,
    HLModule,
};
use crate::cohomology::{solve_coboundary, CohomologyError, SolveMode};
use crate::exactmat::{format_rational, Matrix, Subspace};
use crate::hopf::{HopfAlgebra, HopfError};
use crate::io::{self, IoError, ModuleSpace};
use crate::levi::{
    automorphism_levi_obstruction, full_decomposition, levi_decompose, semisimple_split,
    weyl_decompose, LeviError, ModuleWitness, ObstructionOutcome,
};
use crate::liealg::{LieAlgebra, LieError};
use crate::maschke::MaschkeError;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

pub const DEFAULT_MAX_DIM: usize = 64;

/// Exit classes in ascending code order.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Validation(String),
    Hypothesis(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Validation(_) => 1,
            CliError::Hypothesis(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Validation(m) | CliError::Hypothesis(m) | CliError::Io(m) => m,
        }
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<LieError> for CliError {
    fn from(e: LieError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<ActionError> for CliError {
    fn from(e: ActionError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<HopfError> for CliError {
    fn from(e: HopfError) -> Self {
        match e {
            HopfError::NormalizationImpossible { .. } | HopfError::NoIntegral => {
                CliError::Hypothesis(e.to_string())
            }
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<MaschkeError> for CliError {
    fn from(e: MaschkeError) -> Self {
        match e {
            MaschkeError::IntegralInvalid
            | MaschkeError::IntegralNotNormalized
            | MaschkeError::IntegralNotAdInvariant
            | MaschkeError::NotLEquivariant
            | MaschkeError::InternalInconsistency(_) => CliError::Hypothesis(e.to_string()),
            MaschkeError::Action(a) => a.into(),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<CohomologyError> for CliError {
    fn from(e: CohomologyError) -> Self {
        match e {
            CohomologyError::Shape(_) => CliError::Validation(e.to_string()),
            CohomologyError::Action(a) => a.into(),
            CohomologyError::Averaging(m) => m.into(),
            other => CliError::Hypothesis(other.to_string()),
        }
    }
}

impl From<LeviError> for CliError {
    fn from(e: LeviError) -> Self {
        match e {
            LeviError::Stage { stage, source } => {
                let inner: CliError = (*source).into();
                match inner {
                    CliError::Usage(m) => CliError::Usage(format!("{stage} stage: {m}")),
                    CliError::Validation(m) => CliError::Validation(format!("{stage} stage: {m}")),
                    CliError::Hypothesis(m) => CliError::Hypothesis(format!("{stage} stage: {m}")),
                    CliError::Io(m) => CliError::Io(format!("{stage} stage: {m}")),
                }
            }
            LeviError::NotAnAutomorphism | LeviError::Shape(_) => {
                CliError::Validation(e.to_string())
            }
            LeviError::Action(a) => a.into(),
            LeviError::Cohomology(c) => c.into(),
            LeviError::Averaging(m) => m.into(),
            other => CliError::Hypothesis(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "levikit",
    version,
    about = "Exact structure decompositions of rational Lie algebras with gradings or Hopf (co)actions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Args)]
struct OutputArgs {
    /// Also write the structured JSON result to this file.
    #[arg(long, short = 'o', value_name = "FILE")]
    output: Option<PathBuf>,
    /// Stdout rendering; the structured form is the source of truth.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct StructureArgs {
    /// Grading file: group backend plus one degree per basis element.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["comodule", "module", "automorphism"])]
    grading: Option<PathBuf>,
    /// Hopf comodule (coaction) file; needs a Hopf algebra (see --hopf).
    #[arg(long, value_name = "FILE", conflicts_with_all = ["module", "automorphism"])]
    comodule: Option<PathBuf>,
    /// Hopf module (action) file; needs a Hopf algebra (see --hopf).
    #[arg(long, value_name = "FILE", conflicts_with = "automorphism")]
    module: Option<PathBuf>,
    /// Automorphism file generating a cyclic action.
    #[arg(long, value_name = "FILE")]
    automorphism: Option<PathBuf>,
    /// Hopf algebra file; overrides the reference inside (co)action files.
    #[arg(long, value_name = "FILE")]
    hopf: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check an algebra, and any attached structure, against its axioms.
    Validate {
        algebra: PathBuf,
        #[command(flatten)]
        structure: StructureArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The solvable radical.
    Radical {
        algebra: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The largest nilpotent ideal.
    Nilradical {
        algebra: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// A Levi subalgebra invariant under the given structure.
    Levi {
        algebra: PathBuf,
        #[command(flatten)]
        structure: StructureArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The full decomposition B + S + N with verification report.
    Decompose {
        algebra: PathBuf,
        #[command(flatten)]
        structure: StructureArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Minimal invariant ideals of the Levi subalgebra.
    Split {
        algebra: PathBuf,
        #[command(flatten)]
        structure: StructureArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Decompose a module into invariant components with no proper
    /// nonzero invariant submodule.
    Weyl {
        algebra: PathBuf,
        /// Module-space file: operators, plus the module-side structure.
        #[arg(long, value_name = "FILE")]
        module_space: PathBuf,
        #[command(flatten)]
        structure: StructureArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The normalized ad-invariant left integral, when one exists.
    Integral {
        hopf: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Certificate that an automorphism admits no invariant Levi
    /// subalgebra.
    Obstruction {
        algebra: PathBuf,
        #[arg(long, value_name = "FILE")]
        automorphism: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Cohomology debugging helpers.
    Cohomology {
        #[command(subcommand)]
        command: CohomologyCommand,
    },
    /// Hopf algebra builders.
    Hopf {
        #[command(subcommand)]
        command: HopfCommand,
    },
}

#[derive(Subcommand)]
enum CohomologyCommand {
    /// Solve the coboundary equation d(omega) = phi for a 2-cocycle phi.
    Solve {
        algebra: PathBuf,
        /// Module operators (and module-side structure for colinear modes).
        #[arg(long, value_name = "FILE")]
        module_space: PathBuf,
        /// The 2-cocycle right-hand side.
        #[arg(long, value_name = "FILE")]
        cochain: PathBuf,
        #[command(flatten)]
        structure: StructureArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Subcommand)]
enum HopfCommand {
    /// Construct a Hopf algebra file.
    Build {
        #[command(subcommand)]
        what: HopfBuild,
    },
    /// The dual Hopf algebra of a Hopf algebra file.
    Dual {
        hopf: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Subcommand)]
enum HopfBuild {
    /// Group algebra FG from a multiplication table, rows separated by
    /// ';' and entries by ',' (0-based element indices).
    Group {
        #[arg(long)]
        table: String,
        /// Comma-separated element labels.
        #[arg(long)]
        labels: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The 4-dimensional Sweedler Hopf algebra.
    Sweedler4 {
        #[command(flatten)]
        out: OutputArgs,
    },
}

pub fn max_dim() -> usize {
    std::env::var("LEVIKIT_MAX_DIM")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}

fn load_algebra(path: &Path) -> Result<LieAlgebra, CliError> {
    let l = io::read_algebra(path)?;
    let cap = max_dim();
    if l.dim() > cap {
        return Err(CliError::Validation(format!(
            "algebra dimension {} exceeds the cap {cap} (set LEVIKIT_MAX_DIM to raise it)",
            l.dim()
        )));
    }
    l.validate()?;
    Ok(l)
}

/// Load and validate the (at most one) equivariant structure.
fn load_structure(
    args: &StructureArgs,
    l: &LieAlgebra,
) -> Result<Option<EquivStructure>, CliError> {
    let hopf = args.hopf.as_deref();
    let s = if let Some(p) = &args.grading {
        EquivStructure::Graded(io::read_grading(p)?)
    } else if let Some(p) = &args.comodule {
        EquivStructure::Comodule(io::read_comodule(p, hopf)?)
    } else if let Some(p) = &args.module {
        EquivStructure::Module(io::read_module(p, hopf)?)
    } else if let Some(p) = &args.automorphism {
        EquivStructure::Cyclic(CyclicAction::new(io::read_automorphism(p)?))
    } else {
        return Ok(None);
    };
    s.validate(l)?;
    Ok(Some(s))
}

fn subspace_json(w: &Subspace) -> Value {
    json!({
        "dim": w.dim(),
        "basis": w.basis_rows().iter().map(|r| r.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows)
            .map(|i| {
                Value::Array(
                    (0..m.cols)
                        .map(|j| Value::String(format_rational(&m[(i, j)])))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn render_rows(out: &mut String, w: &Subspace, indent: &str) {
    for r in w.basis_rows() {
        let cells: Vec<String> = r.iter().map(format_rational).collect();
        out.push_str(&format!("{indent}[{}]\n", cells.join(", ")));
    }
}

fn render_subspace(out: &mut String, name: &str, w: &Subspace) {
    out.push_str(&format!("{name} (dim {}):\n", w.dim()));
    render_rows(out, w, "  ");
}

/// A finished command: the structured value, its text rendering, and the
/// canonical file body when the command has one (decompose).
struct Report {
    structured: Value,
    text: String,
    file_body: Option<String>,
}

impl Report {
    fn new(structured: Value, text: String) -> Self {
        Report { structured, text, file_body: None }
    }
}

fn emit(report: &Report, out: &OutputArgs) -> Result<(), CliError> {
    if let Some(path) = &out.output {
        let body = match &report.file_body {
            Some(b) => b.clone(),
            None => {
                let mut s =
                    serde_json::to_string_pretty(&report.structured).expect("valid JSON value");
                s.push('\n');
                s
            }
        };
        io::write_string(path, &body)?;
    }
    match out.format {
        Format::Text => print!("{}", report.text),
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(&report.structured).expect("valid JSON value");
            s.push('\n');
            print!("{s}");
        }
    }
    Ok(())
}

fn structure_kind(s: &Option<EquivStructure>) -> &'static str {
    match s {
        None => "none",
        Some(st) => st.kind(),
    }
}

fn cmd_validate(algebra: &Path, args: &StructureArgs) -> Result<Report, CliError> {
    let l = load_algebra(algebra)?;
    let s = load_structure(args, &l)?;
    if let Some(p) = &args.hopf {
        io::read_hopf(p)?.validate()?;
    }
    let structured = json!({
        "valid": true,
        "dim": l.dim(),
        "structure": structure_kind(&s),
    });
    let text = format!(
        "algebra: ok (dim {})\nstructure: {}\n",
        l.dim(),
        match &s {
            None => "none".to_string(),
            Some(st) => format!("{} ok", st.kind()),
        }
    );
    Ok(Report::new(structured, text))
}

fn cmd_subspace(
    algebra: &Path,
    name: &'static str,
    f: impl Fn(&LieAlgebra) -> Subspace,
) -> Result<Report, CliError> {
    let l = load_algebra(algebra)?;
    let w = f(&l);
    let structured = json!({ name: subspace_json(&w) });
    let mut text = String::new();
    render_subspace(&mut text, name, &w);
    Ok(Report::new(structured, text))
}

fn cmd_levi(algebra: &Path, args: &StructureArgs) -> Result<Report, CliError> {
    let l = load_algebra(algebra)?;
    let s = load_structure(args, &l)?;
    let (b, r) = levi_decompose(&l, s.as_ref())?;
    let structured = json!({
        "B": subspace_json(&b),
        "R": subspace_json(&r),
        "structure": structure_kind(&s),
    });
    let mut text = String::new();
    render_subspace(&mut text, "B", &b);
    render_subspace(&mut text, "R", &r);
    Ok(Report::new(structured, text))
}

fn cmd_decompose(algebra: &Path, args: &StructureArgs) -> Result<Report, CliError> {
    let l = load_algebra(algebra)?;
    let s = load_structure(args, &l)?;
    let d = full_decomposition(&l, s.as_ref())?;
    let file_body = io::decomposition_to_string(&d);
    let structured: Value = serde_json::from_str(&file_body).expect("emitted JSON parses");
    let mut text = String::new();
    render_subspace(&mut text, "B", &d.b);
    render_subspace(&mut text, "S", &d.s);
    render_subspace(&mut text, "N", &d.n);
    render_subspace(&mut text, "R", &d.r);
    for (idx, c) in d.components.iter().enumerate() {
        render_subspace(&mut text, &format!("component {idx}"), c);
    }
    text.push_str("report:\n");
    for c in &d.report {
        text.push_str(&format!("  {}: {}\n", c.check, if c.pass { "pass" } else { "FAIL" }));
    }
    Ok(Report { structured, text, file_body: Some(file_body) })
}

fn cmd_split(algebra: &Path, args: &StructureArgs) -> Result<Report, CliError> {
    let l = load_algebra(algebra)?;
    let s = load_structure(args, &l)?;
    let (b, _) = levi_decompose(&l, s.as_ref())?;
    let comps = semisimple_split(&l, &b, s.as_ref())?;
    let structured = json!({
        "B": subspace_json(&b),
        "components": comps.iter().map(subspace_json).collect::<Vec<_>>(),
    });
    let mut text = String::new();
    render_subspace(&mut text, "B", &b);
    for (idx, c) in comps.iter().enumerate() {
        render_subspace(&mut text, &format!("component {idx}"), c);
    }
    Ok(Report::new(structured, text))
}

fn load_module_space(
    path: &Path,
    args: &StructureArgs,
    l: &LieAlgebra,
) -> Result<ModuleSpace, CliError> {
    let ms = io::read_module_space(path, args.hopf.as_deref())?;
    if ms.psi.len() != l.dim() {
        return Err(CliError::Validation(format!(
            "module space has {} operators for an algebra of dimension {}",
            ms.psi.len(),
            l.dim()
        )));
    }
    Ok(ms)
}

fn cmd_weyl(algebra: &Path, module_space: &Path, args: &StructureArgs) -> Result<Report, CliError> {
    let l = load_algebra(algebra)?;
    if args.module.is_some() || args.automorphism.is_some() {
        return Err(CliError::Usage(
            "weyl supports --grading and --comodule structures".into(),
        ));
    }
    let ms = load_module_space(module_space, args, &l)?;
    let comps = if let Some(p) = &args.grading {
        let grading_l = io::read_grading(p)?;
        validate_grading(&l, &grading_l)?;
        let grading_v = ms.grading.ok_or_else(|| {
            CliError::Validation("graded weyl needs a grading in the module-space file".into())
        })?;
        let module = GradedModule { algebra: l.clone(), psi: ms.psi.clone(), grading_l, grading_v };
        weyl_decompose(&ModuleWitness::Graded { module: &module })?
    } else if let Some(p) = &args.comodule {
        let rho_l = io::read_comodule(p, args.hopf.as_deref())?;
        validate_coaction(&l, &rho_l)?;
        let rho_v = ms.coaction.ok_or_else(|| {
            CliError::Validation("comodule weyl needs a coaction in the module-space file".into())
        })?;
        let integral = rho_l.hopf.find_normalized_integral()?;
        let module = HLModule { algebra: l.clone(), psi: ms.psi.clone(), rho_l, rho_v };
        weyl_decompose(&ModuleWitness::Comodule { module: &module, integral: &integral })?
    } else {
        weyl_decompose(&ModuleWitness::Plain { algebra: &l, psi: &ms.psi })?
    };
    let structured = json!({
        "components": comps.iter().map(subspace_json).collect::<Vec<_>>(),
    });
    let mut text = String::new();
    for (idx, c) in comps.iter().enumerate() {
        render_subspace(&mut text, &format!("component {idx}"), c);
    }
    Ok(Report::new(structured, text))
}

fn cmd_integral(hopf: &Path) -> Result<Report, CliError> {
    let h = io::read_hopf(hopf)?;
    h.validate()?;
    let t = h.find_normalized_integral()?;
    let structured = json!({
        "functional": t.functional.iter().map(format_rational).collect::<Vec<_>>(),
        "normalized": t.normalized,
        "ad_invariant": t.ad_invariant,
    });
    let cells: Vec<String> = t.functional.iter().map(format_rational).collect();
    let text = format!(
        "integral: [{}]\nnormalized: {}\nad-invariant: {}\n",
        cells.join(", "),
        t.normalized,
        t.ad_invariant
    );
    Ok(Report::new(structured, text))
}

fn cmd_obstruction(algebra: &Path, automorphism: &Path) -> Result<Report, CliError> {
    let l = load_algebra(algebra)?;
    let phi = CyclicAction::new(io::read_automorphism(automorphism)?);
    match automorphism_levi_obstruction(&l, &phi)? {
        ObstructionOutcome::Certificate { image, fixed } => {
            let structured = json!({
                "certificate": true,
                "image": subspace_json(&image),
                "fixed": subspace_json(&fixed),
            });
            let mut text = String::from("certificate: no invariant Levi subalgebra exists\n");
            render_subspace(&mut text, "image(phi - id)", &image);
            render_subspace(&mut text, "Fix(phi)", &fixed);
            Ok(Report::new(structured, text))
        }
        ObstructionOutcome::NoObstruction { image, fixed, image_in_radical, fixed_in_radical } => {
            let structured = json!({
                "certificate": false,
                "image": subspace_json(&image),
                "fixed": subspace_json(&fixed),
                "image_in_radical": image_in_radical,
                "fixed_in_radical": fixed_in_radical,
            });
            let text = format!(
                "no obstruction certificate (image in radical: {image_in_radical}, fixed space in radical: {fixed_in_radical})\n"
            );
            Ok(Report::new(structured, text))
        }
    }
}

fn cmd_cohomology_solve(
    algebra: &Path,
    module_space: &Path,
    cochain: &Path,
    args: &StructureArgs,
) -> Result<Report, CliError> {
    let l = load_algebra(algebra)?;
    if args.module.is_some() || args.automorphism.is_some() {
        return Err(CliError::Usage(
            "cohomology solve supports --grading and --comodule structures".into(),
        ));
    }
    let ms = load_module_space(module_space, args, &l)?;
    let phi = io::read_cochain(cochain)?;
    let omega = if let Some(p) = &args.grading {
        let grading_l = io::read_grading(p)?;
        validate_grading(&l, &grading_l)?;
        let grading_v = ms.grading.ok_or_else(|| {
            CliError::Validation("graded solving needs a grading in the module-space file".into())
        })?;
        let module = GradedModule { algebra: l.clone(), psi: ms.psi.clone(), grading_l, grading_v };
        solve_coboundary(&l, &ms.psi, &phi, SolveMode::ColinearGraded { module: &module })?
    } else if let Some(p) = &args.comodule {
        let rho_l = io::read_comodule(p, args.hopf.as_deref())?;
        validate_coaction(&l, &rho_l)?;
        let rho_v = ms.coaction.ok_or_else(|| {
            CliError::Validation("comodule solving needs a coaction in the module-space file".into())
        })?;
        let t = rho_l.hopf.find_normalized_integral()?;
        let module = HLModule { algebra: l.clone(), psi: ms.psi.clone(), rho_l, rho_v };
        solve_coboundary(&l, &ms.psi, &phi, SolveMode::ColinearComodule { module: &module, t: &t })?
    } else {
        solve_coboundary(&l, &ms.psi, &phi, SolveMode::Plain)?
    };
    let structured = json!({ "omega": matrix_json(&omega.matrix) });
    let mut text = String::from("omega (module coordinates by algebra coordinates):\n");
    for i in 0..omega.matrix.rows {
        let cells: Vec<String> =
            (0..omega.matrix.cols).map(|j| format_rational(&omega.matrix[(i, j)])).collect();
        text.push_str(&format!("  [{}]\n", cells.join(", ")));
    }
    Ok(Report::new(structured, text))
}

fn parse_group_table(s: &str) -> Result<Vec<Vec<usize>>, CliError> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|e| {
                    e.trim()
                        .parse::<usize>()
                        .map_err(|_| CliError::Usage(format!("bad table entry {e:?}")))
                })
                .collect()
        })
        .collect()
}

fn hopf_report(h: &HopfAlgebra) -> Report {
    let body = io::hopf_to_string(h);
    let structured: Value = serde_json::from_str(&body).expect("emitted JSON parses");
    Report { structured, text: body.clone(), file_body: Some(body) }
}

fn cmd_hopf(command: &HopfCommand) -> Result<(Report, &OutputArgs), CliError> {
    match command {
        HopfCommand::Build { what } => match what {
            HopfBuild::Group { table, labels, out } => {
                let table = parse_group_table(table)?;
                let labels = labels
                    .as_ref()
                    .map(|ls| ls.split(',').map(|s| s.trim().to_string()).collect::<Vec<_>>());
                let (h, _) = HopfAlgebra::group_algebra(&table, labels)?;
                Ok((hopf_report(&h), out))
            }
            HopfBuild::Sweedler4 { out } => Ok((hopf_report(&HopfAlgebra::sweedler4()), out)),
        },
        HopfCommand::Dual { hopf, out } => {
            let h = io::read_hopf(hopf)?;
            h.validate()?;
            Ok((hopf_report(&h.dual_hopf()), out))
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Validate { algebra, structure, out } => emit(&cmd_validate(algebra, structure)?, out),
        Command::Radical { algebra, out } => {
            emit(&cmd_subspace(algebra, "R", LieAlgebra::solvable_radical)?, out)
        }
        Command::Nilradical { algebra, out } => {
            emit(&cmd_subspace(algebra, "N", LieAlgebra::nilradical)?, out)
        }
        Command::Levi { algebra, structure, out } => emit(&cmd_levi(algebra, structure)?, out),
        Command::Decompose { algebra, structure, out } => {
            emit(&cmd_decompose(algebra, structure)?, out)
        }
        Command::Split { algebra, structure, out } => emit(&cmd_split(algebra, structure)?, out),
        Command::Weyl { algebra, module_space, structure, out } => {
            emit(&cmd_weyl(algebra, module_space, structure)?, out)
        }
        Command::Integral { hopf, out } => emit(&cmd_integral(hopf)?, out),
        Command::Obstruction { algebra, automorphism, out } => {
            emit(&cmd_obstruction(algebra, automorphism)?, out)
        }
        Command::Cohomology { command } => match command {
            CohomologyCommand::Solve { algebra, module_space, cochain, structure, out } => {
                emit(&cmd_cohomology_solve(algebra, module_space, cochain, structure)?, out)
            }
        },
        Command::Hopf { command } => {
            let (report, out) = cmd_hopf(command)?;
            emit(&report, out)
        }
    }
}

/// Parse arguments, run the command, and return the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            eprint!("{e}");
            return 1;
        }
    };
    match dispatch(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}
