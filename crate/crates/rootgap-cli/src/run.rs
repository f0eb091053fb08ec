//! Command dispatch. Each command builds a typed document, renders it in
//! the requested format, and reports pass/fail through the exit code.



use rootgap_core::bounds::{compute_report, verify_all, verify_family, VerifyOptions};
use rootgap_core::catalog::{resolve, GroupFamily};
use rootgap_core::rootsys::{Family, MultiplicityPattern, RestrictedType, RootSystem};
use rootgap_core::sos::{
    half_sum, is_dominant, max_strongly_orthogonal_systems, theta_closed,
};
use rootgap_core::vector::WeightVector;

use crate::args::{
    BoundsArgs, Cli, Command, Format, ListArgs, OracleArgs, OutputArgs, SelectArgs, TableKind,
    VerifyArgs,
};
use crate::config::FileConfig;
use crate::docs::{
    bounds_row, list_rows, root_data_row, vector_strs, verify_family_row, verify_gap_rows,
    Document, FindingRow, OracleRow,
};
use crate::error::CliError;
use crate::render;

/// What a command produced: the rendered report and whether every check it
/// ran passed (verification commands flip this to drive exit status 1).
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

pub fn execute(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::List(args) => run_list(args),
        Command::Table(args) => match args.which {
            TableKind::RootData => run_root_data(args.select, args.output, args.decimal),
            TableKind::Bounds => run_bounds(args.select, args.output, args.decimal),
        },
        Command::Bounds(BoundsArgs { select, decimal, output }) => {
            run_bounds(select, output, decimal)
        }
        Command::Verify(args) => run_verify(args),
        Command::Oracle(args) => run_oracle(args),
    }
}

fn emit(text: String, output: &OutputArgs, passed: bool) -> Result<Outcome, CliError> {
    if let Some(path) = &output.out {
        std::fs::write(path, &text)
            .map_err(|e| CliError::Io(format!("write {}: {e}", path.display())))?;
        return Ok(Outcome {
            text: format!("wrote {}\n", path.display()),
            passed,
        });
    }
    Ok(Outcome { text, passed })
}

/// A family argument accepted as either a restricted letter or a group
/// token.
enum FamilyArg {
    Restricted(Family),
    Group(GroupFamily),
}

fn parse_family(s: &str, letters_allowed: bool) -> Result<FamilyArg, CliError> {
    if letters_allowed {
        if let Some(f) = Family::parse(s) {
            return Ok(FamilyArg::Restricted(f));
        }
    }
    if let Some(g) = GroupFamily::parse(s) {
        return Ok(FamilyArg::Group(g));
    }
    if !letters_allowed {
        if let Some(f) = Family::parse(s) {
            let candidates: Vec<String> = GroupFamily::ALL
                .iter()
                .filter(|g| {
                    g.restricted(g.min_rank(), g.parametric().then_some(1))
                        .is_ok_and(|(t, _)| t.family == f)
                })
                .map(|g| format!("{} (rank >= {})", g.token(), g.min_rank()))
                .collect();
            return Err(CliError::Usage(format!(
                "`{s}` names a restricted type, not a group family; type {s} is realized by {}",
                candidates.join(", ")
            )));
        }
    }
    let tokens: Vec<&str> = GroupFamily::ALL.iter().map(|f| f.token()).collect();
    let hint = if letters_allowed {
        format!("expected A, B, C, D, BC, or one of {}", tokens.join(", "))
    } else {
        format!("expected one of {}", tokens.join(", "))
    };
    Err(CliError::Usage(format!("unknown family `{s}`; {hint}")))
}

fn rank_list(select: &SelectArgs) -> Result<Vec<u32>, CliError> {
    match (select.rank, select.ranks) {
        (Some(r), _) => Ok(vec![r]),
        (None, Some((a, b))) => Ok((a..=b).collect()),
        (None, None) => Err(CliError::Usage(
            "a rank is required: pass --rank N or --ranks a..b".into(),
        )),
    }
}

fn k_list(select: &SelectArgs, family: Option<GroupFamily>) -> Result<Vec<Option<u32>>, CliError> {
    let parametric = family.is_some_and(GroupFamily::parametric);
    match (select.k, select.ks) {
        (Some(k), _) => Ok(vec![Some(k)]),
        (None, Some((a, b))) => Ok((a..=b).map(Some).collect()),
        (None, None) if parametric => Err(CliError::Usage(format!(
            "family {} takes the parameter k: pass --k N or --ks a..b",
            family.unwrap().token()
        ))),
        (None, None) => Ok(vec![None]),
    }
}

/// Unit multiplicities for a bare restricted letter: the split pattern for
/// the reduced families and all-ones for `(BC)_r`.
fn unit_pattern(family: Family) -> MultiplicityPattern {
    match family {
        Family::A => MultiplicityPattern::type_a(1),
        Family::B => MultiplicityPattern::type_b(1, 1),
        Family::C => MultiplicityPattern::type_c(1, 1),
        Family::D => MultiplicityPattern::type_d(1),
        Family::BC => MultiplicityPattern::type_bc(1, 1, 1),
    }
}

fn echo_select(cmd: &str, select: &SelectArgs, decimal: bool, format: Format) -> String {
    let mut s = format!("{cmd} --family {}", select.family);
    match (select.rank, select.ranks) {
        (Some(r), _) => s += &format!(" --rank {r}"),
        (None, Some((a, b))) => s += &format!(" --ranks {a}..{b}"),
        _ => {}
    }
    match (select.k, select.ks) {
        (Some(k), _) => s += &format!(" --k {k}"),
        (None, Some((a, b))) => s += &format!(" --ks {a}..{b}"),
        _ => {}
    }
    if decimal {
        s += " --decimal";
    }
    format!("{s} --format {}", format.name())
}

// ---------------------------------------------------------------- list

fn run_list(args: ListArgs) -> Result<Outcome, CliError> {
    let doc = Document::new(
        format!("list --format {}", args.output.format.name()),
        list_rows(),
        Vec::new(),
    );
    let text = render::render_list(&doc, args.output.format)?;
    emit(text, &args.output, true)
}

// ---------------------------------------------------------------- root-data

fn run_root_data(
    select: SelectArgs,
    output: OutputArgs,
    decimal: bool,
) -> Result<Outcome, CliError> {
    let family = parse_family(&select.family, true)?;
    let ranks = rank_list(&select)?;
    let mut rows = Vec::new();
    match family {
        FamilyArg::Restricted(f) => {
            for r in &ranks {
                let system = RootSystem::new(
                    RestrictedType::new(f, *r).map_err(CliError::from)?,
                    unit_pattern(f),
                )?;
                rows.push(root_data_row(&system, None, None));
            }
        }
        FamilyArg::Group(g) => {
            for r in &ranks {
                for k in k_list(&select, Some(g))? {
                    let (desc, system) = resolve(g, *r, k)?;
                    rows.push(root_data_row(&system, Some(desc.display.clone()), k));
                }
            }
        }
    }
    let doc = Document::new(
        echo_select("table root-data", &select, decimal, output.format),
        rows,
        Vec::new(),
    );
    let text = render::render_root_data(&doc, output.format)?;
    emit(text, &output, true)
}

// ---------------------------------------------------------------- bounds

fn run_bounds(
    select: SelectArgs,
    output: OutputArgs,
    decimal: bool,
) -> Result<Outcome, CliError> {
    let FamilyArg::Group(g) = parse_family(&select.family, false)? else {
        unreachable!("letters rejected above");
    };
    let ranks = rank_list(&select)?;
    let mut rows = Vec::new();
    let mut passed = true;
    for r in &ranks {
        for k in k_list(&select, Some(g))? {
            let (desc, _) = resolve(g, *r, k)?;
            let report = compute_report(&desc)?;
            passed &= report.passes;
            rows.push(bounds_row(&report, decimal));
        }
    }
    let doc = Document::new(
        echo_select("table bounds", &select, decimal, output.format),
        rows,
        Vec::new(),
    );
    let text = render::render_bounds(&doc, output.format)?;
    emit(text, &output, passed)
}

// ---------------------------------------------------------------- verify

fn run_verify(args: VerifyArgs) -> Result<Outcome, CliError> {
    let config = FileConfig::load(args.config.as_deref())?;
    let mut opts: VerifyOptions = config.verify_options();
    if let Some((a, b)) = args.ranks {
        opts.rank_min = a;
        opts.rank_max = b;
    }
    if let Some((a, b)) = args.ks {
        opts.k_min = a;
        opts.k_max = b;
    }
    opts.with_fits = !args.no_fits;

    let scope = if args.all {
        "--all".to_string()
    } else {
        format!("--family {}", args.family.as_deref().unwrap_or(""))
    };
    let command = format!(
        "verify {scope} --ranks {}..{} --ks {}..{} --format {}",
        opts.rank_min,
        opts.rank_max,
        opts.k_min,
        opts.k_max,
        args.output.format.name()
    );

    let (rows, findings, passed) = if args.all {
        let report = verify_all(&opts);
        let mut rows: Vec<_> = report.families.iter().map(verify_family_row).collect();
        rows.extend(verify_gap_rows(&report.gap));
        let findings = report.findings().iter().map(FindingRow::from).collect();
        let passed = report.passed();
        (rows, findings, passed)
    } else {
        let token = args.family.as_deref().unwrap_or_default();
        let FamilyArg::Group(g) = parse_family(token, false)? else {
            unreachable!()
        };
        rootgap_core::bounds::verify::check_family_range(g, &opts)?;
        let fam = verify_family(g, &opts);
        let findings = fam.findings.iter().map(FindingRow::from).collect();
        let passed = fam.passed();
        (vec![verify_family_row(&fam)], findings, passed)
    };

    let doc = Document::new(command, rows, findings);
    let text = render::render_verify(&doc, args.output.format)?;
    emit(text, &args.output, passed)
}

// ---------------------------------------------------------------- oracle

fn run_oracle(args: OracleArgs) -> Result<Outcome, CliError> {
    let config = FileConfig::load(args.config.as_deref())?;
    let cap = args.cap.unwrap_or_else(|| config.oracle_cap());
    let Some(family) = Family::parse(&args.family) else {
        return Err(CliError::Usage(format!(
            "unknown restricted family `{}`; expected A, B, C, D, or BC",
            args.family
        )));
    };
    let system = RootSystem::new(
        RestrictedType::new(family, args.rank).map_err(CliError::from)?,
        unit_pattern(family),
    )?;
    let systems = max_strongly_orthogonal_systems(&system, cap)?;
    let ambient = system.ambient_dim();
    // name roots structurally (e1+e3) rather than as coordinate tuples
    let root_names: std::collections::BTreeMap<WeightVector, String> = system
        .positive_roots()
        .iter()
        .map(|&(a, _)| (a.to_vector(ambient), a.to_string()))
        .collect();
    let name_of = |v: &WeightVector| {
        root_names
            .get(v)
            .cloned()
            .unwrap_or_else(|| v.to_string())
    };
    let half_sums: Vec<WeightVector> =
        systems.iter().map(|s| half_sum(s, ambient)).collect();
    let dominant: Vec<&WeightVector> = half_sums
        .iter()
        .filter(|h| is_dominant(h, &system))
        .collect();
    let mut dominant_values: Vec<&WeightVector> = dominant.clone();
    dominant_values.sort();
    dominant_values.dedup();
    if dominant_values.len() != 1 {
        return Err(CliError::Compute(format!(
            "strongly orthogonal oracle is ambiguous: {} distinct dominant half-sums among {} systems",
            dominant_values.len(),
            systems.len()
        )));
    }
    let closed = theta_closed(&system);
    let norms: std::collections::BTreeSet<_> =
        half_sums.iter().map(WeightVector::norm_sq).collect();
    let row = OracleRow {
        family: family.name().to_string(),
        r: args.rank,
        candidate_roots: system.non_multipliable_roots().len() as u64,
        max_size: systems.first().map_or(0, |s| s.len() as u64),
        system_count: systems.len() as u64,
        systems: systems
            .iter()
            .map(|s| s.iter().map(&name_of).collect())
            .collect(),
        half_sums: half_sums.iter().map(vector_strs).collect(),
        dominant_half_sum: vector_strs(dominant_values[0]),
        theta_closed: vector_strs(&closed),
        agrees: *dominant_values[0] == closed,
        half_sum_norms_equal: norms.len() == 1,
    };
    let agrees = row.agrees;
    let command = format!(
        "oracle --family {} --rank {} --cap {cap} --format {}",
        family.name(),
        args.rank,
        args.output.format.name()
    );
    let doc = Document::new(command, vec![row], Vec::new());
    let text = render::render_oracle(&doc, args.output.format)?;
    emit(text, &args.output, agrees)
}
