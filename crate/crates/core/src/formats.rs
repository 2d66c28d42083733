//! Deterministic text and JSON formats for codes, matrices and reports.
//!
//! Writers emit keys and rows in a fixed order so that identical inputs
//! produce byte-identical files; readers are order-insensitive (JSON is
//! parsed structurally) and re-canonicalize every subspace they load,
//! which makes a write/read/write round trip byte-exact.
//!
//! Conventions shared by every format:
//!
//! * A row over GF(q) is written as `n` entries; for q ≤ 10 the entries are
//!   concatenated digits (`11010`), otherwise comma-separated integers
//!   (`12,0,31`).
//! * A subspace is its canonical generator matrix, rows joined by `;`.
//! * Arbitrary-precision integers are emitted as bare JSON numbers (JSON
//!   places no bound on number size); ratios as decimal strings of stated
//!   precision.

use serde_json::Value;

use crate::bounds::{render_decimal, BoundReport};
use crate::designs::DesignReport;
use crate::field::Field;
use crate::lincode::{DimensionReport, DistanceEstimate, IncidenceMatrix, LinearCodeSummary, SpectrumReport};
use crate::linalg::{MatrixGF, Subspace};
use crate::rankmetric::{CodeFamily, ConstantDimensionCode};
use crate::{Error, Result};

/// Decimal places used when rendering ratios into JSON.
pub const RATIO_PLACES: u32 = 6;

// ---------------------------------------------------------------------------
// rows, matrices, subspaces

/// One row over GF(q) as text: concatenated digits for q ≤ 10, else
/// comma-separated.
pub fn row_to_text(q: u64, row: &[u64]) -> String {
    if q <= 10 {
        row.iter().map(|e| e.to_string()).collect()
    } else {
        row.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn parse_entries(q: u64, text: &str) -> Result<Vec<u64>> {
    let entries: Vec<u64> = if text.contains(',') {
        text.split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
            .collect::<Result<_>>()?
    } else {
        text.trim()
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(u64::from)
                    .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in row {text:?}")))
            })
            .collect::<Result<_>>()?
    };
    if let Some(&e) = entries.iter().find(|&&e| e >= q) {
        return Err(Error::Parse(format!("entry {e} is outside GF({q})")));
    }
    Ok(entries)
}

/// Parse a row of known length; accepts both digit and comma forms.
pub fn row_from_text(q: u64, n: usize, text: &str) -> Result<Vec<u64>> {
    let entries = parse_entries(q, text)?;
    if entries.len() != n {
        return Err(Error::Parse(format!(
            "row {text:?} has {} entries, expected {n}",
            entries.len()
        )));
    }
    Ok(entries)
}

/// A matrix as one row per line.
pub fn matrix_to_text(m: &MatrixGF) -> String {
    (0..m.rows())
        .map(|i| row_to_text(m.q(), &m.row(i)))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parse a matrix; the column count is taken from the first line.
pub fn matrix_from_text(f: &Field, text: &str) -> Result<MatrixGF> {
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if lines.is_empty() {
        return Err(Error::Parse("matrix text has no rows".into()));
    }
    let first = parse_entries(f.q(), lines[0])?;
    let n = first.len();
    let mut entries = first;
    entries.reserve(n * (lines.len() - 1));
    for line in &lines[1..] {
        entries.extend_from_slice(&row_from_text(f.q(), n, line)?);
    }
    Ok(MatrixGF::from_entries(f.q(), lines.len(), n, &entries))
}

/// A subspace as its canonical generator rows joined by `;`.
pub fn subspace_to_text(s: &Subspace) -> String {
    (0..s.dim())
        .map(|i| row_to_text(s.q(), &s.gen().row(i)))
        .collect::<Vec<_>>()
        .join(";")
}

/// Parse a subspace of ambient dimension `n`; rows are re-canonicalized.
pub fn subspace_from_text(f: &Field, n: usize, text: &str) -> Result<Subspace> {
    let rows: Vec<Vec<u64>> = text
        .split(';')
        .map(|part| row_from_text(f.q(), n, part))
        .collect::<Result<_>>()?;
    Ok(Subspace::from_rows(f, n, &rows))
}

// ---------------------------------------------------------------------------
// code files

/// JSON-escape and quote a string.
pub fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("string serialization is infallible")
}

/// Serialize a constant-dimension code as JSON. Key order and codeword
/// order are fixed, so equal codes serialize identically.
pub fn write_code(code: &ConstantDimensionCode) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"q\": {},\n", code.q));
    out.push_str(&format!("  \"n\": {},\n", code.n));
    out.push_str(&format!("  \"k\": {},\n", code.k));
    out.push_str(&format!("  \"claimed_d\": {},\n", code.claimed_d));
    out.push_str(&format!("  \"provenance\": {},\n", json_str(code.family.as_str())));
    out.push_str("  \"codewords\": [\n");
    for (i, cw) in code.codewords.iter().enumerate() {
        let sep = if i + 1 == code.codewords.len() { "" } else { "," };
        out.push_str(&format!("    {}{}\n", json_str(&subspace_to_text(cw)), sep));
    }
    out.push_str("  ]\n}\n");
    out
}

fn field_as_u64(v: &Value, key: &str) -> Result<u64> {
    v.get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse(format!("code file lacks integer field {key:?}")))
}

fn assemble_code(
    q: u64,
    n: usize,
    k: usize,
    claimed_d: usize,
    family: CodeFamily,
    words: impl Iterator<Item = Result<Subspace>>,
) -> Result<ConstantDimensionCode> {
    let mut codewords = Vec::new();
    for (i, sub) in words.enumerate() {
        let sub = sub?;
        if sub.dim() != k {
            return Err(Error::Parse(format!(
                "codeword {i} has dimension {}, expected {k}",
                sub.dim()
            )));
        }
        codewords.push(sub);
    }
    if codewords.is_empty() {
        return Err(Error::Parse("code file lists no codewords".into()));
    }
    Ok(ConstantDimensionCode {
        q,
        n,
        k,
        claimed_d,
        family,
        codewords,
    })
}

/// Parse a JSON code file, rebuilding and re-canonicalizing every codeword
/// and verifying that each has dimension `k`.
pub fn read_code(text: &str) -> Result<ConstantDimensionCode> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad code JSON: {e}")))?;
    let q = field_as_u64(&v, "q")?;
    let n = field_as_u64(&v, "n")? as usize;
    let k = field_as_u64(&v, "k")? as usize;
    let d = field_as_u64(&v, "claimed_d")? as usize;
    let family = CodeFamily::parse(
        v.get("provenance")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("code file lacks a provenance tag".into()))?,
    )?;
    let f = Field::new(q)?;
    let arr = v
        .get("codewords")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("code file lacks a codewords array".into()))?;
    assemble_code(
        q,
        n,
        k,
        d,
        family,
        arr.iter().enumerate().map(|(i, item)| {
            let s = item
                .as_str()
                .ok_or_else(|| Error::Parse(format!("codeword {i} is not a string")))?;
            subspace_from_text(&f, n, s)
        }),
    )
}

/// Serialize a code in the compact text form: one header line
/// `q=.. n=.. k=.. d=.. provenance=..`, then one codeword per line.
pub fn write_code_compact(code: &ConstantDimensionCode) -> String {
    let mut out = format!(
        "q={} n={} k={} d={} provenance={}\n",
        code.q,
        code.n,
        code.k,
        code.claimed_d,
        code.family.as_str()
    );
    for cw in &code.codewords {
        out.push_str(&subspace_to_text(cw));
        out.push('\n');
    }
    out
}

/// Parse the compact text form.
pub fn read_code_compact(text: &str) -> Result<ConstantDimensionCode> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("compact code file is empty".into()))?;
    let mut q = None;
    let mut n = None;
    let mut k = None;
    let mut d = None;
    let mut family = None;
    for part in header.split_whitespace() {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad header field {part:?}")))?;
        match key {
            "q" => q = Some(val.parse::<u64>().map_err(|_| Error::Parse(format!("bad q {val:?}")))?),
            "n" => n = Some(val.parse::<usize>().map_err(|_| Error::Parse(format!("bad n {val:?}")))?),
            "k" => k = Some(val.parse::<usize>().map_err(|_| Error::Parse(format!("bad k {val:?}")))?),
            "d" => d = Some(val.parse::<usize>().map_err(|_| Error::Parse(format!("bad d {val:?}")))?),
            "provenance" => family = Some(CodeFamily::parse(val)?),
            other => return Err(Error::Parse(format!("unknown header field {other:?}"))),
        }
    }
    let missing = |what: &str| Error::Parse(format!("compact header lacks {what}"));
    let q = q.ok_or_else(|| missing("q"))?;
    let n = n.ok_or_else(|| missing("n"))?;
    let k = k.ok_or_else(|| missing("k"))?;
    let d = d.ok_or_else(|| missing("d"))?;
    let family = family.ok_or_else(|| missing("provenance"))?;
    let f = Field::new(q)?;
    assemble_code(
        q,
        n,
        k,
        d,
        family,
        lines
            .filter(|l| !l.trim().is_empty())
            .map(|l| subspace_from_text(&f, n, l)),
    )
}

/// Load a code from either format, dispatching on the leading byte.
pub fn read_code_auto(text: &str) -> Result<ConstantDimensionCode> {
    if text.trim_start().starts_with('{') {
        read_code(text)
    } else {
        read_code_compact(text)
    }
}

// ---------------------------------------------------------------------------
// report JSON

/// A design verification report: fixed key order, parameters as a
/// pre-sorted object, counterexample null when the check passed.
pub fn design_report_json(r: &DesignReport) -> String {
    let mut out = String::new();
    out.push_str("{");
    out.push_str(&format!("\"check\":{},", json_str(&r.check)));
    out.push_str(&format!("\"pass\":{},", r.pass));
    out.push_str("\"parameters\":{");
    for (i, (key, val)) in r.parameters.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!("{}:{}", json_str(key), json_str(val)));
    }
    out.push_str("},");
    match &r.counterexample {
        Some(w) => out.push_str(&format!("\"counterexample\":{}", json_str(w))),
        None => out.push_str("\"counterexample\":null"),
    }
    out.push('}');
    out
}

/// One bound-comparison row. Integer bounds are bare JSON numbers
/// (arbitrary precision); the ratio is a decimal string with
/// [`RATIO_PLACES`] digits; inapplicable bounds are null.
pub fn bound_report_json(r: &BoundReport) -> String {
    let opt = |b: &Option<crate::bounds::ExtensionBound>| match b {
        Some(e) => e.value.to_string(),
        None => "null".into(),
    };
    format!(
        "{{\"q\":{},\"n\":{},\"k\":{},\"delta\":{},\"johnson\":{},\"mrd\":{},\"ratio\":{},\"thmA\":{},\"thmB\":{}}}",
        r.q,
        r.n,
        r.k,
        r.delta,
        r.johnson.value,
        r.mrd_size,
        json_str(&render_decimal(&r.ratio, RATIO_PLACES)),
        opt(&r.thm_a),
        opt(&r.thm_b),
    )
}

fn distance_json(d: &DistanceEstimate) -> String {
    match d {
        DistanceEstimate::Exact(x) => format!("{{\"exact\":{x}}}"),
        DistanceEstimate::Interval { lower, upper } => {
            format!("{{\"lower\":{lower},\"upper\":{upper}}}")
        }
    }
}

fn summary_json(s: &LinearCodeSummary) -> String {
    let kv = match &s.intersection_floor {
        Some(x) => json_str(&render_decimal(x, RATIO_PLACES)),
        None => "null".into(),
    };
    format!(
        "{{\"length\":{},\"dimension\":{},\"distance\":{},\"even_weight\":{},\"tanner_t1\":{},\"tanner_t2\":{},\"intersection_floor\":{},\"distance_floor\":{},\"distance_cap\":{}}}",
        s.length,
        s.dimension,
        distance_json(&s.distance),
        s.even_weight,
        json_str(&render_decimal(&s.tanner_t1, RATIO_PLACES)),
        json_str(&render_decimal(&s.tanner_t2, RATIO_PLACES)),
        kv,
        s.distance_floor,
        s.distance_cap,
    )
}

fn spectrum_json(s: &SpectrumReport) -> String {
    format!(
        "{{\"eigenvalues\":[{},{},{}],\"multiplicities\":[{},{},{}],\"annihilator_ok\":{},\"trace_ok\":{},\"square_trace_ok\":{},\"pass\":{}}}",
        s.eigenvalues[0],
        s.eigenvalues[1],
        s.eigenvalues[2],
        s.multiplicities[0],
        s.multiplicities[1],
        s.multiplicities[2],
        s.annihilator_ok,
        s.trace_ok,
        s.square_trace_ok,
        s.pass,
    )
}

fn dimension_json(d: &DimensionReport) -> String {
    format!(
        "{{\"dim_c\":{},\"dim_ct\":{},\"lower_c\":{},\"upper_c\":{},\"lower_ct\":{},\"upper_ct\":{},\"pass\":{}}}",
        d.dim_c, d.dim_ct, d.lower_c, d.upper_c, d.lower_ct, d.upper_ct, d.pass,
    )
}

/// The full incidence-code analysis as one JSON document.
pub fn lincode_report_json(
    m: &IncidenceMatrix,
    c: &LinearCodeSummary,
    ct: &LinearCodeSummary,
    spectrum: &SpectrumReport,
    dims: &DimensionReport,
) -> String {
    format!(
        "{{\"parameters\":{{\"q\":{},\"n\":{},\"k\":{},\"delta\":{},\"rows\":{},\"cols\":{},\"row_weight\":{},\"col_weight\":{}}},\"code_c\":{},\"code_ct\":{},\"spectrum\":{},\"dimension_bounds\":{}}}",
        m.q,
        m.n,
        m.k,
        m.delta,
        m.n_rows(),
        m.n_cols(),
        m.row_weight(),
        m.col_weight(),
        summary_json(c),
        summary_json(ct),
        spectrum_json(spectrum),
        dimension_json(dims),
    )
}
