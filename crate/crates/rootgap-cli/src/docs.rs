//! Report documents. Every command emits the same envelope:
//! `{schema_version, command, rows[], findings[]}` with command-specific
//! row shapes. Rationals are serialized as exact `p/q` strings (integers as
//! `p`); approximate decimal columns appear only on request and are
//! explicitly marked. Row order is canonical (family, r, k), so repeated
//! runs are byte-identical.

use num_traits::ToPrimitive;
use rootgap_core::bounds::{BoundReport, FamilyVerification, Finding, GapSummary};
use rootgap_core::catalog::{CatalogItem, GroupFamily};
use rootgap_core::rootsys::{delta_plus_description, Family, MultiplicityPattern, RootSystem};
use rootgap_core::vector::WeightVector;
use rootgap_core::Rational;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Document<R> {
    pub schema_version: String,
    pub command: String,
    pub rows: Vec<R>,
    pub findings: Vec<FindingRow>,
}

impl<R> Document<R> {
    pub fn new(command: String, rows: Vec<R>, findings: Vec<FindingRow>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command,
            rows,
            findings,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FindingRow {
    pub location: String,
    pub paper_value: String,
    pub computed_value: String,
}

impl From<&Finding> for FindingRow {
    fn from(f: &Finding) -> Self {
        Self {
            location: f.location.clone(),
            paper_value: f.paper_value.clone(),
            computed_value: f.computed_value.clone(),
        }
    }
}

pub fn rational_str(r: &Rational) -> String {
    r.to_string()
}

pub fn vector_strs(v: &WeightVector) -> Vec<String> {
    v.coords().iter().map(|c| c.to_string()).collect()
}

/// Fixed-precision decimal approximation, marked approximate by its column
/// name wherever it appears.
pub fn decimal_str(r: &Rational) -> String {
    format!("{:.6}", r.to_f64().unwrap_or(f64::NAN))
}

/// `"m,m,...,m"`-style multiplicity text matching the table layout.
pub fn pattern_string(family: Family, p: &MultiplicityPattern) -> String {
    let pair = p.pair();
    match family {
        Family::A | Family::D => format!("{pair},{pair},...,{pair}"),
        Family::B => format!("{pair},{pair},...,{pair}, {}", p.single().unwrap()),
        Family::C => format!("{pair},{pair},...,{pair}, {}", p.double().unwrap()),
        Family::BC => format!(
            "{pair},{pair},...,{pair}, ({},{})",
            p.single().unwrap(),
            p.double().unwrap()
        ),
    }
}

/// Symbolic multiplicity text of a group family (k left symbolic).
pub fn generic_multiplicities(family: GroupFamily) -> &'static str {
    use GroupFamily::*;
    match family {
        SlR => "1,1,...,1",
        SlC => "2,2,...,2",
        SuStar => "4,4,...,4",
        SoRK => "1,1,...,1, k",
        SoOddC => "2,2,...,2, 2",
        SpR => "1,1,...,1, 1",
        SpC => "2,2,...,2, 2",
        SuRK => "2,2,...,2, (2k,1)",
        SpRK => "4,4,...,4, (4k,3)",
        SoStar4r => "4,4,...,4, 1",
        SoStar4r2 => "4,4,...,4, (4,1)",
        SoRR => "1,1,...,1",
        SoEvenC => "2,2,...,2",
    }
}

// ---------------------------------------------------------------- list

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ListRow {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rtype: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicities: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank_min: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parametric: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub aliases: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub fn list_rows() -> Vec<ListRow> {
    let mut rows = Vec::new();
    for family in GroupFamily::ALL {
        let rtype = match family.restricted(family.min_rank(), family.parametric().then_some(1)) {
            Ok((t, _)) => format!("{}_r", t.family.name()),
            Err(_) => String::from("?"),
        };
        rows.push(ListRow {
            kind: "group".into(),
            family: Some(family.token().into()),
            name: family.generic_name().into(),
            rtype: Some(rtype),
            multiplicities: Some(generic_multiplicities(family).into()),
            constant: Some(rational_str(&family.type_constant())),
            rank_min: Some(family.min_rank()),
            parametric: Some(family.parametric()),
            aliases: family.aliases().iter().map(|s| s.to_string()).collect(),
            rank: None,
            note: None,
        });
    }
    for stub in rootgap_core::catalog::exceptional_stubs() {
        rows.push(ListRow {
            kind: "stub".into(),
            family: None,
            name: stub.name(),
            rtype: None,
            multiplicities: None,
            constant: None,
            rank_min: None,
            parametric: None,
            aliases: Vec::new(),
            rank: Some(stub.rank()),
            note: Some(stub.note().into()),
        });
    }
    rows
}

/// Instantiated catalog rows (used by tests and the library surface).
pub fn catalog_item_row(item: &CatalogItem) -> ListRow {
    match item {
        CatalogItem::Group(d) => ListRow {
            kind: "group".into(),
            family: Some(d.family.token().into()),
            name: d.display.clone(),
            rtype: Some(d.rtype.to_string()),
            multiplicities: Some(pattern_string(d.rtype.family, &d.pattern)),
            constant: Some(rational_str(&d.constant)),
            rank_min: None,
            parametric: Some(d.family.parametric()),
            aliases: Vec::new(),
            rank: Some(d.rank),
            note: None,
        },
        CatalogItem::Stub(s) => ListRow {
            kind: "stub".into(),
            family: None,
            name: s.name(),
            rtype: None,
            multiplicities: None,
            constant: None,
            rank_min: None,
            parametric: None,
            aliases: Vec::new(),
            rank: Some(s.rank()),
            note: Some(s.note().into()),
        },
    }
}

// ---------------------------------------------------------------- root-data

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RootDataRow {
    pub family: String,
    pub r: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    pub simple_roots: Vec<String>,
    pub multiplicities: String,
    pub positive_roots: u64,
    pub delta_plus: String,
    pub two_rho: Vec<String>,
    pub theta: Vec<String>,
}

pub fn root_data_row(
    system: &RootSystem,
    group: Option<String>,
    k: Option<u32>,
) -> RootDataRow {
    RootDataRow {
        family: system.family().name().to_string(),
        r: system.rank(),
        k,
        group,
        simple_roots: system
            .simple_roots()
            .iter()
            .map(|a| a.to_string())
            .collect(),
        multiplicities: pattern_string(system.family(), &system.pattern()),
        positive_roots: system.rtype().positive_root_count(),
        delta_plus: delta_plus_description(system.family()).to_string(),
        two_rho: vector_strs(&system.two_rho()),
        theta: vector_strs(&rootgap_core::sos::theta_closed(system)),
    }
}

// ---------------------------------------------------------------- bounds

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BoundsRow {
    pub group: String,
    pub family: String,
    pub r: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    pub n: u64,
    pub two_rho: Vec<String>,
    pub theta: Vec<String>,
    pub w: Vec<String>,
    pub theta_pairing: String,
    pub ell: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_direct: Option<u64>,
    pub k_closed: String,
    pub c: String,
    pub margin: String,
    pub hd_strict_upper: String,
    pub sharpness_reference: u64,
    pub passes: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta_pairing_approx: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell_approx: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_closed_approx: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin_approx: Option<String>,
}

pub fn bounds_row(report: &BoundReport, decimal: bool) -> BoundsRow {
    BoundsRow {
        group: report.group.display.clone(),
        family: report.group.family.token().to_string(),
        r: report.group.rank,
        k: report.group.k,
        n: report.n,
        two_rho: vector_strs(&report.two_rho),
        theta: vector_strs(&report.theta),
        w: vector_strs(&report.w),
        theta_pairing: rational_str(&report.theta_pairing),
        ell: rational_str(&report.ell),
        k_direct: report.k_direct,
        k_closed: rational_str(&report.k_closed),
        c: rational_str(&report.constant),
        margin: rational_str(&report.margin),
        hd_strict_upper: rational_str(&report.hd_strict_upper),
        sharpness_reference: report.sharpness_reference,
        passes: report.passes,
        theta_pairing_approx: decimal.then(|| decimal_str(&report.theta_pairing)),
        ell_approx: decimal.then(|| decimal_str(&report.ell)),
        k_closed_approx: decimal.then(|| decimal_str(&report.k_closed)),
        margin_approx: decimal.then(|| decimal_str(&report.margin)),
    }
}

// ---------------------------------------------------------------- verify

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct FitRow {
    pub class: String,
    pub quantity: String,
    pub fitted: String,
    pub reference: String,
    pub matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper_matches: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MarginRow {
    pub class: String,
    pub numerator: String,
    pub positive_on_range: bool,
    pub leading_sign: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerifyRow {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instances: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failures: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fits: Option<Vec<FitRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margins: Option<Vec<MarginRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub passed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_constant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub statement: Option<String>,
}

pub fn verify_family_row(v: &FamilyVerification) -> VerifyRow {
    VerifyRow {
        kind: "family".into(),
        family: Some(v.family.token().into()),
        instances: Some(v.instances_checked),
        failures: Some(
            v.failures
                .iter()
                .map(|f| {
                    format!(
                        "{} r={} k={}: {}",
                        f.family.token(),
                        f.rank,
                        f.k.map_or("-".to_string(), |k| k.to_string()),
                        f.what
                    )
                })
                .collect(),
        ),
        fits: Some(
            v.fits
                .iter()
                .map(|f| FitRow {
                    class: f.label.to_string(),
                    quantity: f.quantity.to_string(),
                    fitted: f.fitted.to_string(),
                    reference: f.reference.to_string(),
                    matches: f.matches,
                    paper: f.printed.as_ref().map(|p| p.to_string()),
                    paper_matches: f.printed_matches,
                })
                .collect(),
        ),
        margins: Some(
            v.margins
                .iter()
                .map(|m| MarginRow {
                    class: m.label.to_string(),
                    numerator: m.numerator.to_string(),
                    positive_on_range: m.positive_on_range,
                    leading_sign: m.leading_sign.to_string(),
                })
                .collect(),
        ),
        passed: Some(v.passed()),
        name: None,
        rank: None,
        note: None,
        min_constant: None,
        statement: None,
    }
}

pub fn verify_gap_rows(gap: &GapSummary) -> Vec<VerifyRow> {
    let empty = VerifyRow {
        kind: String::new(),
        family: None,
        instances: None,
        failures: None,
        fits: None,
        margins: None,
        passed: None,
        name: None,
        rank: None,
        note: None,
        min_constant: None,
        statement: None,
    };
    let mut rows = Vec::new();
    for (name, rank, note) in &gap.stubs {
        rows.push(VerifyRow {
            kind: "stub".into(),
            name: Some(name.clone()),
            rank: Some(*rank),
            note: Some(note.to_string()),
            ..empty.clone()
        });
    }
    rows.push(VerifyRow {
        kind: "global".into(),
        min_constant: Some(rational_str(&gap.min_constant)),
        statement: Some(gap.statement.to_string()),
        passed: Some(gap.all_at_least_one_eighth),
        ..empty
    });
    rows
}

// ---------------------------------------------------------------- oracle

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct OracleRow {
    pub family: String,
    pub r: u32,
    pub candidate_roots: u64,
    pub max_size: u64,
    pub system_count: u64,
    pub systems: Vec<Vec<String>>,
    pub half_sums: Vec<Vec<String>>,
    pub dominant_half_sum: Vec<String>,
    pub theta_closed: Vec<String>,
    pub agrees: bool,
    pub half_sum_norms_equal: bool,
}
