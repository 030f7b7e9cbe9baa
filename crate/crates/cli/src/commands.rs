use defrost_core::families::{FamilySpec, Families};
use defrost_core::stirling::{classical_to_degenerate, degenerate_to_classical};
use defrost_core::verify::{Grid, IdentityId, Status, Verifier, VerifyReport};
use defrost_core::{Poly, Rational, Result};
use serde::Serialize;

use crate::output::{csv, json, TOOL, VERSION};
use crate::Format;

#[derive(Serialize)]
struct PolyDoc<'a> {
    tool: &'static str,
    version: &'static str,
    family: &'a FamilySpec,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    coefficients: Option<&'a Poly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<&'a Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<Rational>,
}

pub fn poly(spec: &FamilySpec, n: usize, x: Option<&Rational>, format: Format) -> Result<String> {
    let p = spec.polys(n)?.pop().expect("nonempty");
    let value = x.map(|x| p.eval(x));
    Ok(match format {
        Format::Json => json(&PolyDoc {
            tool: TOOL,
            version: VERSION,
            family: spec,
            n,
            coefficients: x.is_none().then_some(&p),
            x,
            value,
        }),
        Format::Csv => match (x, value) {
            (Some(x), Some(v)) => csv(
                &["n".into(), "x".into(), "value".into()],
                &[(n, vec![x.to_string(), v.to_string()])],
            ),
            _ => {
                let cells = p.to_strings();
                csv(&coefficient_header(cells.len()), &[(n, cells)])
            }
        },
    })
}

fn coefficient_header(width: usize) -> Vec<String> {
    std::iter::once("n".to_string())
        .chain((0..width).map(|k| format!("c{k}")))
        .collect()
}

pub enum TableMode {
    Numbers,
    Values(Rational),
    Coefficients,
}

#[derive(Serialize)]
struct TableRow {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coefficients: Option<Poly>,
}

#[derive(Serialize)]
struct TableDoc<'a> {
    tool: &'static str,
    version: &'static str,
    family: &'a FamilySpec,
    max_n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<&'a Rational>,
    rows: Vec<TableRow>,
}

pub fn table(spec: &FamilySpec, max_n: usize, mode: TableMode, format: Format) -> Result<String> {
    let polys = spec.polys(max_n)?;
    let at = match &mode {
        TableMode::Numbers => Some(Rational::zero()),
        TableMode::Values(x) => Some(x.clone()),
        TableMode::Coefficients => None,
    };
    let rows: Vec<TableRow> = polys
        .into_iter()
        .enumerate()
        .map(|(n, p)| match &at {
            Some(x) => TableRow { n, value: Some(p.eval(x)), coefficients: None },
            None => TableRow { n, value: None, coefficients: Some(p) },
        })
        .collect();
    Ok(match format {
        Format::Json => json(&TableDoc {
            tool: TOOL,
            version: VERSION,
            family: spec,
            max_n,
            x: match &mode {
                TableMode::Values(x) => Some(x),
                _ => None,
            },
            rows,
        }),
        Format::Csv => {
            let cells: Vec<(usize, Vec<String>)> = rows
                .iter()
                .map(|row| match (&row.value, &row.coefficients) {
                    (Some(v), _) => (row.n, vec![v.to_string()]),
                    (None, Some(p)) => (row.n, p.to_strings()),
                    (None, None) => unreachable!("every row has a payload"),
                })
                .collect();
            let header = if at.is_some() {
                vec!["n".to_string(), "value".to_string()]
            } else {
                coefficient_header(cells.iter().map(|(_, c)| c.len()).max().unwrap_or(1))
            };
            csv(&header, &cells)
        }
    })
}

#[derive(Serialize, Default)]
struct Summary {
    pass: usize,
    fail: usize,
    skipped: usize,
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    tool: &'static str,
    version: &'static str,
    max_n: usize,
    truncation_order: usize,
    summary: Summary,
    reports: &'a [VerifyReport],
}

/// Returns the rendered document and whether every report passed or was skipped.
pub fn verify(identities: &[IdentityId], grid: &Grid, max_n: usize) -> (String, bool) {
    let reports = Verifier::default().check_many(identities, grid, max_n);
    let mut summary = Summary::default();
    for r in &reports {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    let ok = summary.fail == 0;
    let doc = VerifyDoc {
        tool: TOOL,
        version: VERSION,
        max_n,
        // oracle series run through t^{max_n + 1} (the Genocchi check needs one extra term)
        truncation_order: max_n + 1,
        summary,
        reports: &reports,
    };
    (json(&doc), ok)
}

pub struct ConvertRequest {
    pub to_classical: bool,
    pub u: Rational,
    pub lambda: Rational,
    pub order: u32,
    pub max_m: usize,
    pub round_trip: bool,
}

#[derive(Serialize)]
struct ConvertRow {
    m: usize,
    coefficients: Poly,
    matches: bool,
}

#[derive(Serialize)]
struct ConvertDoc<'a> {
    tool: &'static str,
    version: &'static str,
    direction: &'static str,
    u: &'a Rational,
    lambda: &'a Rational,
    order: u32,
    max_m: usize,
    round_trip: bool,
    /// What the `matches` column compares against.
    expected: &'static str,
    all_match: bool,
    rows: Vec<ConvertRow>,
}

pub fn convert(req: &ConvertRequest, format: Format) -> Result<(String, bool)> {
    let families = Families::exact();
    let degenerate = families.dfe_higher_polys(req.max_m, req.order, &req.u, &req.lambda)?;
    let classical = families.classical_fe_higher_polys(req.max_m, req.order, &req.u)?;
    let (input, target) = if req.to_classical {
        (degenerate, classical)
    } else {
        (classical, degenerate)
    };
    let forward = |s: &[Poly]| {
        if req.to_classical {
            degenerate_to_classical(s, &req.lambda)
        } else {
            classical_to_degenerate(s, &req.lambda)
        }
    };
    let backward = |s: &[Poly]| {
        if req.to_classical {
            classical_to_degenerate(s, &req.lambda)
        } else {
            degenerate_to_classical(s, &req.lambda)
        }
    };
    let mut output = forward(&input);
    let (expected_seq, expected) = if req.round_trip {
        output = backward(&output);
        (&input, "input")
    } else if req.to_classical {
        (&target, "classical")
    } else {
        (&target, "degenerate")
    };
    let rows: Vec<ConvertRow> = output
        .into_iter()
        .zip(expected_seq)
        .enumerate()
        .map(|(m, (p, e))| ConvertRow { matches: &p == e, m, coefficients: p })
        .collect();
    let all_match = rows.iter().all(|r| r.matches);
    let text = match format {
        Format::Json => json(&ConvertDoc {
            tool: TOOL,
            version: VERSION,
            direction: if req.to_classical { "h2H" } else { "H2h" },
            u: &req.u,
            lambda: &req.lambda,
            order: req.order,
            max_m: req.max_m,
            round_trip: req.round_trip,
            expected,
            all_match,
            rows,
        }),
        Format::Csv => {
            let cells: Vec<(usize, Vec<String>)> = rows
                .iter()
                .map(|r| {
                    let mut c = vec![r.matches.to_string()];
                    c.extend(r.coefficients.to_strings());
                    (r.m, c)
                })
                .collect();
            let width = cells.iter().map(|(_, c)| c.len() - 1).max().unwrap_or(1);
            let mut header = vec!["m".to_string(), "matches".to_string()];
            header.extend((0..width).map(|k| format!("c{k}")));
            csv(&header, &cells)
        }
    };
    Ok((text, all_match))
}
