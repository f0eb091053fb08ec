//! Deterministic emitters. JSON is pretty-printed serde with a trailing
//! newline and round-trips through the typed documents exactly; CSV and
//! Markdown carry the same exact `p/q` content with vectors joined by
//! single spaces.

use serde::Serialize;

use crate::args::Format;
use crate::docs::{
    BoundsRow, Document, FindingRow, ListRow, OracleRow, RootDataRow, VerifyRow,
};
use crate::error::CliError;

pub fn to_json<R: Serialize>(doc: &Document<R>) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(doc)
        .map_err(|e| CliError::Compute(format!("serialize: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn join(v: &[String]) -> String {
    v.join(" ")
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(String::new, |x| x.to_string())
}

fn csv_from_records(
    headers: &[&str],
    records: Vec<Vec<String>>,
) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers)
        .map_err(|e| CliError::Compute(format!("csv: {e}")))?;
    for rec in records {
        w.write_record(&rec)
            .map_err(|e| CliError::Compute(format!("csv: {e}")))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Compute(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| CliError::Compute(format!("csv: {e}")))
}

fn findings_md(out: &mut String, findings: &[FindingRow]) {
    if findings.is_empty() {
        return;
    }
    out.push_str("\n## Findings (printed value vs computed value)\n\n");
    out.push_str("| location | printed | computed |\n|---|---|---|\n");
    for f in findings {
        out.push_str(&format!(
            "| {} | {} | {} |\n",
            f.location, f.paper_value, f.computed_value
        ));
    }
}

fn findings_csv_records(findings: &[FindingRow]) -> Vec<Vec<String>> {
    findings
        .iter()
        .map(|f| {
            vec![
                "finding".to_string(),
                f.location.clone(),
                f.paper_value.clone(),
                f.computed_value.clone(),
            ]
        })
        .collect()
}

// ---------------------------------------------------------------- list

pub fn render_list(doc: &Document<ListRow>, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => to_json(doc),
        Format::Csv => {
            let headers = [
                "kind", "family", "name", "rtype", "multiplicities", "constant", "rank_min",
                "parametric", "aliases", "rank", "note",
            ];
            let records = doc
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.kind.clone(),
                        opt(&r.family),
                        r.name.clone(),
                        opt(&r.rtype),
                        opt(&r.multiplicities),
                        opt(&r.constant),
                        opt(&r.rank_min),
                        opt(&r.parametric),
                        r.aliases.join(" "),
                        opt(&r.rank),
                        opt(&r.note),
                    ]
                })
                .collect();
            csv_from_records(&headers, records)
        }
        Format::Md => {
            let mut out = format!("# {}\n\n", doc.command);
            out.push_str("| family | name | restricted type | multiplicities | c | min rank | aliases |\n");
            out.push_str("|---|---|---|---|---|---|---|\n");
            for r in doc.rows.iter().filter(|r| r.kind == "group") {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | {} |\n",
                    opt(&r.family),
                    r.name,
                    opt(&r.rtype),
                    opt(&r.multiplicities),
                    opt(&r.constant),
                    opt(&r.rank_min),
                    r.aliases.join(", "),
                ));
            }
            out.push_str("\n## Exceptional stubs (no root data needed)\n\n");
            out.push_str("| name | real rank | note |\n|---|---|---|\n");
            for r in doc.rows.iter().filter(|r| r.kind == "stub") {
                out.push_str(&format!(
                    "| {} | {} | {} |\n",
                    r.name,
                    opt(&r.rank),
                    opt(&r.note)
                ));
            }
            findings_md(&mut out, &doc.findings);
            Ok(out)
        }
    }
}

// ---------------------------------------------------------------- root-data

pub fn render_root_data(
    doc: &Document<RootDataRow>,
    format: Format,
) -> Result<String, CliError> {
    match format {
        Format::Json => to_json(doc),
        Format::Csv => {
            let headers = [
                "family", "r", "k", "group", "simple_roots", "multiplicities",
                "positive_roots", "delta_plus", "two_rho", "theta",
            ];
            let records = doc
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.family.clone(),
                        r.r.to_string(),
                        opt(&r.k),
                        opt(&r.group),
                        r.simple_roots.join(" "),
                        r.multiplicities.clone(),
                        r.positive_roots.to_string(),
                        r.delta_plus.clone(),
                        join(&r.two_rho),
                        join(&r.theta),
                    ]
                })
                .collect();
            csv_from_records(&headers, records)
        }
        Format::Md => {
            let mut out = format!("# {}\n\n", doc.command);
            out.push_str(
                "| family | r | k | group | simple roots | multiplicities | #Δ⁺ | Δ⁺ classes | 2ρ | Θ |\n",
            );
            out.push_str("|---|---|---|---|---|---|---|---|---|---|\n");
            for r in &doc.rows {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | {} | {} | ({}) | ({}) |\n",
                    r.family,
                    r.r,
                    opt(&r.k),
                    opt(&r.group),
                    r.simple_roots.join(", "),
                    r.multiplicities,
                    r.positive_roots,
                    r.delta_plus,
                    r.two_rho.join(", "),
                    r.theta.join(", "),
                ));
            }
            findings_md(&mut out, &doc.findings);
            Ok(out)
        }
    }
}

// ---------------------------------------------------------------- bounds

pub fn render_bounds(doc: &Document<BoundsRow>, format: Format) -> Result<String, CliError> {
    let decimal = doc.rows.iter().any(|r| r.theta_pairing_approx.is_some());
    match format {
        Format::Json => to_json(doc),
        Format::Csv => {
            let mut headers = vec![
                "group", "family", "r", "k", "n", "two_rho", "theta", "w", "theta_pairing",
                "ell", "k_direct", "k_closed", "c", "margin", "hd_strict_upper",
                "sharpness_reference", "passes",
            ];
            if decimal {
                headers.extend([
                    "theta_pairing_approx",
                    "ell_approx",
                    "k_closed_approx",
                    "margin_approx",
                ]);
            }
            let records = doc
                .rows
                .iter()
                .map(|r| {
                    let mut rec = vec![
                        r.group.clone(),
                        r.family.clone(),
                        r.r.to_string(),
                        opt(&r.k),
                        r.n.to_string(),
                        join(&r.two_rho),
                        join(&r.theta),
                        join(&r.w),
                        r.theta_pairing.clone(),
                        r.ell.clone(),
                        opt(&r.k_direct),
                        r.k_closed.clone(),
                        r.c.clone(),
                        r.margin.clone(),
                        r.hd_strict_upper.clone(),
                        r.sharpness_reference.to_string(),
                        r.passes.to_string(),
                    ];
                    if decimal {
                        rec.extend([
                            opt(&r.theta_pairing_approx),
                            opt(&r.ell_approx),
                            opt(&r.k_closed_approx),
                            opt(&r.margin_approx),
                        ]);
                    }
                    rec
                })
                .collect();
            csv_from_records(&headers, records)
        }
        Format::Md => {
            let mut out = format!("# {}\n\n", doc.command);
            let extra = if decimal {
                " ⟨Θ,w⟩ (approx) | ℓ (approx) | k_closed (approx) | margin (approx) |"
            } else {
                ""
            };
            out.push_str(&format!(
                "| group | r | k | n | 2ρ | Θ | w | ⟨Θ,w⟩ | ℓ | k_direct | k_closed | c | margin | hd upper | n−r | passes |{extra}\n"
            ));
            let bars = if decimal { 20 } else { 16 };
            out.push_str(&format!("{}\n", "|---".repeat(bars) + "|"));
            for r in &doc.rows {
                let mut line = format!(
                    "| {} | {} | {} | {} | ({}) | ({}) | ({}) | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                    r.group,
                    r.r,
                    opt(&r.k),
                    r.n,
                    r.two_rho.join(", "),
                    r.theta.join(", "),
                    r.w.join(", "),
                    r.theta_pairing,
                    r.ell,
                    opt(&r.k_direct),
                    r.k_closed,
                    r.c,
                    r.margin,
                    r.hd_strict_upper,
                    r.sharpness_reference,
                    r.passes,
                );
                if decimal {
                    line.push_str(&format!(
                        " {} | {} | {} | {} |",
                        opt(&r.theta_pairing_approx),
                        opt(&r.ell_approx),
                        opt(&r.k_closed_approx),
                        opt(&r.margin_approx),
                    ));
                }
                line.push('\n');
                out.push_str(&line);
            }
            findings_md(&mut out, &doc.findings);
            Ok(out)
        }
    }
}

// ---------------------------------------------------------------- verify

pub fn render_verify(doc: &Document<VerifyRow>, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => to_json(doc),
        Format::Csv => {
            let headers = [
                "kind", "family", "instances", "failure_count", "failures", "class",
                "quantity", "fitted", "reference", "matches", "paper", "paper_matches",
                "numerator", "positive_on_range", "leading_sign", "passed", "name", "rank",
                "note", "min_constant", "statement",
            ];
            let blank = || String::new();
            let mut records: Vec<Vec<String>> = Vec::new();
            for r in &doc.rows {
                match r.kind.as_str() {
                    "family" => {
                        let failures = r.failures.clone().unwrap_or_default();
                        records.push(vec![
                            "family".into(),
                            opt(&r.family),
                            opt(&r.instances),
                            failures.len().to_string(),
                            failures.join("; "),
                            blank(), blank(), blank(), blank(), blank(), blank(), blank(),
                            blank(), blank(), blank(),
                            opt(&r.passed),
                            blank(), blank(), blank(), blank(), blank(),
                        ]);
                        for f in r.fits.iter().flatten() {
                            records.push(vec![
                                "fit".into(),
                                opt(&r.family),
                                blank(), blank(), blank(),
                                f.class.clone(),
                                f.quantity.clone(),
                                f.fitted.clone(),
                                f.reference.clone(),
                                f.matches.to_string(),
                                opt(&f.paper),
                                opt(&f.paper_matches),
                                blank(), blank(), blank(), blank(),
                                blank(), blank(), blank(), blank(), blank(),
                            ]);
                        }
                        for m in r.margins.iter().flatten() {
                            records.push(vec![
                                "margin".into(),
                                opt(&r.family),
                                blank(), blank(), blank(),
                                m.class.clone(),
                                blank(), blank(), blank(), blank(), blank(), blank(),
                                m.numerator.clone(),
                                m.positive_on_range.to_string(),
                                m.leading_sign.clone(),
                                blank(),
                                blank(), blank(), blank(), blank(), blank(),
                            ]);
                        }
                    }
                    "stub" => records.push(vec![
                        "stub".into(),
                        blank(), blank(), blank(), blank(), blank(), blank(), blank(),
                        blank(), blank(), blank(), blank(), blank(), blank(), blank(),
                        blank(),
                        opt(&r.name),
                        opt(&r.rank),
                        opt(&r.note),
                        blank(), blank(),
                    ]),
                    _ => records.push(vec![
                        "global".into(),
                        blank(), blank(), blank(), blank(), blank(), blank(), blank(),
                        blank(), blank(), blank(), blank(), blank(), blank(), blank(),
                        opt(&r.passed),
                        blank(), blank(), blank(),
                        opt(&r.min_constant),
                        opt(&r.statement),
                    ]),
                }
            }
            records.extend(findings_csv_records(&doc.findings).into_iter().map(|f| {
                let mut rec = f;
                rec.resize(21, String::new());
                rec
            }));
            csv_from_records(&headers, records)
        }
        Format::Md => {
            let mut out = format!("# {}\n\n", doc.command);
            out.push_str("## Families\n\n");
            out.push_str("| family | instances | failures | passed |\n|---|---|---|---|\n");
            for r in doc.rows.iter().filter(|r| r.kind == "family") {
                out.push_str(&format!(
                    "| {} | {} | {} | {} |\n",
                    opt(&r.family),
                    opt(&r.instances),
                    r.failures.as_ref().map_or(0, Vec::len),
                    opt(&r.passed),
                ));
                for f in r.failures.iter().flatten() {
                    out.push_str(&format!("  failure: {f}\n"));
                }
            }
            let has_fits = doc
                .rows
                .iter()
                .any(|r| r.fits.as_ref().is_some_and(|f| !f.is_empty()));
            if has_fits {
                out.push_str("\n## Closed-form fits\n\n");
                out.push_str(
                    "| class | quantity | fitted | reference | matches | printed | printed matches |\n",
                );
                out.push_str("|---|---|---|---|---|---|---|\n");
                for r in doc.rows.iter().filter(|r| r.kind == "family") {
                    for f in r.fits.iter().flatten() {
                        out.push_str(&format!(
                            "| {} | {} | {} | {} | {} | {} | {} |\n",
                            f.class,
                            f.quantity,
                            f.fitted,
                            f.reference,
                            f.matches,
                            opt(&f.paper),
                            opt(&f.paper_matches),
                        ));
                    }
                }
                out.push_str("\n## Margin numerators (strictly positive on the swept grid)\n\n");
                out.push_str("| class | numerator | positive | leading sign |\n|---|---|---|---|\n");
                for r in doc.rows.iter().filter(|r| r.kind == "family") {
                    for m in r.margins.iter().flatten() {
                        out.push_str(&format!(
                            "| {} | {} | {} | {} |\n",
                            m.class, m.numerator, m.positive_on_range, m.leading_sign,
                        ));
                    }
                }
            }
            let stubs: Vec<_> = doc.rows.iter().filter(|r| r.kind == "stub").collect();
            if !stubs.is_empty() {
                out.push_str("\n## Exceptional stubs\n\n| name | real rank | note |\n|---|---|---|\n");
                for r in stubs {
                    out.push_str(&format!(
                        "| {} | {} | {} |\n",
                        opt(&r.name),
                        opt(&r.rank),
                        opt(&r.note)
                    ));
                }
            }
            if let Some(g) = doc.rows.iter().find(|r| r.kind == "global") {
                out.push_str(&format!(
                    "\n## Global\n\nminimum constant c = {}; {}\n",
                    opt(&g.min_constant),
                    opt(&g.statement),
                ));
            }
            findings_md(&mut out, &doc.findings);
            Ok(out)
        }
    }
}

// ---------------------------------------------------------------- oracle

pub fn render_oracle(doc: &Document<OracleRow>, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => to_json(doc),
        Format::Csv => {
            let headers = [
                "family", "r", "candidate_roots", "max_size", "system_count", "systems",
                "half_sums", "dominant_half_sum", "theta_closed", "agrees",
                "half_sum_norms_equal",
            ];
            let records = doc
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.family.clone(),
                        r.r.to_string(),
                        r.candidate_roots.to_string(),
                        r.max_size.to_string(),
                        r.system_count.to_string(),
                        r.systems
                            .iter()
                            .map(|s| s.join(" "))
                            .collect::<Vec<_>>()
                            .join("; "),
                        r.half_sums
                            .iter()
                            .map(|s| s.join(" "))
                            .collect::<Vec<_>>()
                            .join("; "),
                        join(&r.dominant_half_sum),
                        join(&r.theta_closed),
                        r.agrees.to_string(),
                        r.half_sum_norms_equal.to_string(),
                    ]
                })
                .collect();
            csv_from_records(&headers, records)
        }
        Format::Md => {
            let mut out = format!("# {}\n\n", doc.command);
            for r in &doc.rows {
                out.push_str(&format!(
                    "family {} rank {}: {} candidate roots, maximum size {}, {} maximum systems\n\n",
                    r.family, r.r, r.candidate_roots, r.max_size, r.system_count
                ));
                out.push_str("| system | half-sum |\n|---|---|\n");
                for (sys, h) in r.systems.iter().zip(&r.half_sums) {
                    out.push_str(&format!("| {} | ({}) |\n", sys.join(", "), h.join(", ")));
                }
                out.push_str(&format!(
                    "\ndominant half-sum: ({})\nclosed form:       ({})\nagrees: {}\nhalf-sum norms all equal: {}\n",
                    r.dominant_half_sum.join(", "),
                    r.theta_closed.join(", "),
                    r.agrees,
                    r.half_sum_norms_equal,
                ));
            }
            findings_md(&mut out, &doc.findings);
            Ok(out)
        }
    }
}
