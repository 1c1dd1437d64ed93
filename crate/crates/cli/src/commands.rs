use std::path::PathBuf;

use knotmeta::apoly::{analyze, AnalyzerReport, BoundReport, Finding};
use knotmeta::intlinalg::RotationVector;
use knotmeta::knotdata::{load_apolys, load_knots};
use knotmeta::metabelian::{count_from_determinant, enumerate_metabelian, verify_all, verify_class};
use knotmeta::riley::{
    cross_check_counts, section_at_minus_one, verify_longitude_mod, verify_relator_general_t,
    verify_relator_mod, CountReport, RileySection,
};
use knotmeta::{Error, Knot, SeifertKnot, TwoBridge};
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::report::{sig12, table, Report};

/// Why a command could not produce a report.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or unreadable input: exit 2.
    Input(String),
    /// The computation contradicted an expected identity: exit 1.
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(m) => Failure::Verification(m),
            other => Failure::Input(other.to_string()),
        }
    }
}

pub type CmdResult = Result<Report, Failure>;

/// Where knots come from: a file or a single `-p/-q` pair.
pub struct Source {
    pub input: Option<PathBuf>,
    pub p: Option<i64>,
    pub q: Option<i64>,
}

impl Source {
    fn knots(&self) -> Result<Vec<Knot>, Failure> {
        match (&self.input, self.p, self.q) {
            (Some(path), None, None) => {
                let ks = load_knots(path).map_err(|e| {
                    Failure::Input(format!("{}: {e}", path.display()))
                })?;
                if ks.is_empty() {
                    return Err(Failure::Input(format!("{}: no records", path.display())));
                }
                Ok(ks)
            }
            (None, Some(p), Some(q)) => Ok(vec![TwoBridge::canonical(p, q)?.into()]),
            (None, None, None) => Err(Failure::Input("give -i FILE or -p P -q Q".into())),
            (Some(_), _, _) => Err(Failure::Input("-i cannot be combined with -p/-q".into())),
            _ => Err(Failure::Input("-p and -q must be given together".into())),
        }
    }

    fn seiferts(&self) -> Result<Vec<SeifertKnot>, Failure> {
        self.knots()?
            .into_iter()
            .map(|k| match k {
                Knot::Seifert(s) => Ok(s),
                Knot::TwoBridge(t) => Err(Failure::Input(format!(
                    "{}: this command needs a Seifert matrix",
                    t.name()
                ))),
            })
            .collect()
    }

    fn two_bridges(&self) -> Result<Vec<TwoBridge>, Failure> {
        self.knots()?
            .into_iter()
            .map(|k| match k {
                Knot::TwoBridge(t) => Ok(t),
                Knot::Seifert(s) => Err(Failure::Input(format!(
                    "{}: this command needs a two-bridge knot (p, q)",
                    s.name()
                ))),
            })
            .collect()
    }
}

fn csv_rows(header: &[&str], rows: Vec<Vec<String>>) -> Option<Vec<Vec<String>>> {
    let mut out = vec![header.iter().map(|s| s.to_string()).collect()];
    out.extend(rows);
    Some(out)
}

pub fn det(src: &Source) -> CmdResult {
    let knots = src.knots()?;
    let mut rows = Vec::new();
    for k in &knots {
        rows.push(vec![k.name().to_string(), k.determinant()?.to_string()]);
    }
    let json = Value::Array(
        rows.iter()
            .map(|r| json!({"name": r[0], "det": r[1]}))
            .collect(),
    );
    let header = ["name", "det"];
    let text = if rows.len() == 1 {
        format!("{}\n", rows[0][1])
    } else {
        table(&header, &rows)
    };
    Ok(Report {
        json,
        table: text,
        csv: csv_rows(&header, rows),
        ok: true,
    })
}

pub fn meta_count(src: &Source) -> CmdResult {
    let knots = src.knots()?;
    let mut rows = Vec::new();
    for k in &knots {
        let d = k.determinant()?;
        rows.push(vec![k.name().to_string(), d.to_string(), count_from_determinant(&d)?.to_string()]);
    }
    let json = Value::Array(
        rows.iter()
            .map(|r| json!({"name": r[0], "det": r[1], "count": r[2]}))
            .collect(),
    );
    let header = ["name", "det", "count"];
    let text = if rows.len() == 1 {
        format!("{}\n", rows[0][2])
    } else {
        table(&header, &rows)
    };
    Ok(Report {
        json,
        table: text,
        csv: csv_rows(&header, rows),
        ok: true,
    })
}

pub fn meta_enum(src: &Source) -> CmdResult {
    let knots = src.seiferts()?;
    let mut json_out = Vec::new();
    let mut text = String::new();
    let mut rows = Vec::new();
    for k in &knots {
        let classes = enumerate_metabelian(k)?;
        let det = k.determinant()?;
        text.push_str(&format!(
            "{} (det {det}, {} class{})\n",
            k.name(),
            classes.len(),
            if classes.len() == 1 { "" } else { "es" }
        ));
        for (i, c) in classes.iter().enumerate() {
            text.push_str(&format!("  {}  order {}\n", c.thetas(), c.order()));
            rows.push(vec![
                k.name().to_string(),
                i.to_string(),
                c.thetas().to_strings().join(" "),
                c.order().to_string(),
            ]);
        }
        json_out.push(json!({
            "name": k.name(),
            "det": det.to_string(),
            "count": classes.len(),
            "classes": serde_json::to_value(&classes).expect("serializable"),
        }));
    }
    Ok(Report {
        json: Value::Array(json_out),
        table: text,
        csv: csv_rows(&["name", "class", "thetas", "order"], rows),
        ok: true,
    })
}

fn parse_theta(s: &str) -> Result<RotationVector, Failure> {
    let thetas = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<BigRational>()
                .map_err(|e| Failure::Input(format!("bad rational {t:?} in --theta: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RotationVector::new(thetas))
}

pub fn meta_verify(src: &Source, theta: Option<&str>) -> CmdResult {
    let knots = src.seiferts()?;
    let candidate = theta.map(parse_theta).transpose()?;
    if candidate.is_some() && knots.len() != 1 {
        return Err(Failure::Input("--theta needs exactly one knot".into()));
    }
    let mut ok = true;
    let mut text = String::new();
    let mut json_out = Vec::new();
    for k in &knots {
        let reports = match &candidate {
            Some(t) => vec![verify_class(k, t)],
            None => verify_all(k)?,
        };
        for r in &reports {
            ok &= r.passed;
            let status = match &r.failure {
                None => "pass".to_string(),
                Some(m) => format!("FAIL {m}"),
            };
            text.push_str(&format!("{}  {}  {status}\n", k.name(), r.thetas));
        }
        let knot_ok = reports.iter().all(|r| r.passed);
        json_out.push(json!({
            "name": k.name(),
            "ok": knot_ok,
            "classes": serde_json::to_value(&reports).expect("serializable"),
        }));
    }
    Ok(Report {
        json: Value::Array(json_out),
        table: text,
        csv: None,
        ok,
    })
}

fn approx_json(s: &RileySection) -> Result<Value, Failure> {
    let r = s.approx_roots()?;
    Ok(json!({
        "real": r.real.iter().map(|x| sig12(*x)).collect::<Vec<_>>(),
        "complex_pairs": r.complex_pairs,
    }))
}

pub fn tb_riley(src: &Source, approx: bool) -> CmdResult {
    let knots = src.two_bridges()?;
    let mut text = String::new();
    let mut json_out = Vec::new();
    for k in &knots {
        let s = section_at_minus_one(k)?;
        let mut v = serde_json::to_value(&s).expect("serializable");
        text.push_str(&format!(
            "{} (p={}, q={})\n  phi(-1,u) = {}\n  w11 = {}\n  w12 = {}\n  degree {}, squarefree {}\n",
            s.name, s.p, s.q, s.phi, s.w11, s.w12, s.roots_count, s.squarefree
        ));
        if approx {
            let a = approx_json(&s)?;
            let reals: Vec<&str> = a["real"]
                .as_array()
                .expect("array")
                .iter()
                .map(|x| x.as_str().expect("string"))
                .collect();
            text.push_str(&format!(
                "  approx real roots: [{}], complex pairs: {}\n",
                reals.join(", "),
                a["complex_pairs"]
            ));
            v["approx"] = a;
        }
        json_out.push(v);
    }
    Ok(Report {
        json: Value::Array(json_out),
        table: text,
        csv: None,
        ok: true,
    })
}

/// JSON object, table cells and pass flag for one knot.
type VerifyRow = (Value, Vec<String>, bool);

pub fn tb_verify(src: &Source, general_t: bool) -> CmdResult {
    let knots = src.two_bridges()?;
    let results: Vec<Result<VerifyRow, Failure>> = knots
        .par_iter()
        .map(|k| {
            let s = section_at_minus_one(k)?;
            let rel = verify_relator_mod(k, &s.phi)?;
            let lon = verify_longitude_mod(k, &s.phi)?;
            let mut ok = rel.ok && lon.ok;
            let mut v = json!({
                "name": k.name(),
                "relator": serde_json::to_value(&rel).expect("serializable"),
                "longitude": serde_json::to_value(&lon).expect("serializable"),
            });
            let mut row = vec![
                k.name().to_string(),
                rel.ok.to_string(),
                serde_json::to_value(lon.result).expect("serializable").as_str().unwrap_or("").to_string(),
                rel.meridian_trace.clone(),
                lon.trace.clone(),
            ];
            if general_t {
                let g = verify_relator_general_t(k)?;
                ok &= g.ok;
                row.push(g.ok.to_string());
                v["general_t"] = serde_json::to_value(&g).expect("serializable");
            }
            v["ok"] = Value::Bool(ok);
            Ok((v, row, ok))
        })
        .collect();
    let mut json_out = Vec::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for r in results {
        let (v, row, row_ok) = r?;
        ok &= row_ok;
        json_out.push(v);
        rows.push(row);
    }
    let mut header = vec!["name", "relator_ok", "longitude", "trace_mu", "trace_lambda"];
    if general_t {
        header.push("general_t_ok");
    }
    Ok(Report {
        json: Value::Array(json_out),
        table: table(&header, &rows),
        csv: csv_rows(&header, rows),
        ok,
    })
}

fn count_row(r: &CountReport) -> Vec<String> {
    vec![
        r.name.clone(),
        r.riley_degree.to_string(),
        r.distinct_roots.to_string(),
        r.metabelian_count.clone(),
        r.half_p_minus_1.to_string(),
        r.determinant.clone(),
        r.ok.to_string(),
    ]
}

pub fn tb_crosscheck(src: &Source) -> CmdResult {
    let knots = src.two_bridges()?;
    let reports: Vec<CountReport> = knots
        .par_iter()
        .map(cross_check_counts)
        .collect::<Result<_, _>>()?;
    let mut text = String::new();
    for r in &reports {
        text.push_str(&format!(
            "{}: {} = {} = {}  (riley degree = distinct roots = metabelian count; (p-1)/2 = {}, det = {})  {}\n",
            r.name,
            r.riley_degree,
            r.distinct_roots,
            r.metabelian_count,
            r.half_p_minus_1,
            r.determinant,
            if r.ok { "ok" } else { "MISMATCH" }
        ));
    }
    Ok(Report {
        json: serde_json::to_value(&reports).expect("serializable"),
        table: text,
        csv: csv_rows(
            &["name", "riley_degree", "distinct_roots", "metabelian_count", "half_p_minus_1", "det", "ok"],
            reports.iter().map(count_row).collect(),
        ),
        ok: reports.iter().all(|r| r.ok),
    })
}

fn finding_line(f: &Finding) -> String {
    match f {
        Finding::NonMetabelianArcs { message } => format!("finding 1: {message}"),
        Finding::TraceFreeNonMetabelian { message, omegas } => format!(
            "finding 2: {message}; omega: {}",
            serde_json::to_string(omegas).expect("serializable")
        ),
        Finding::Inconclusive { reason } => reason.clone(),
        Finding::NoCriterionFires { message } => message.clone(),
    }
}

fn analyzer_text(r: &AnalyzerReport) -> String {
    let mut t = format!(
        "{}\n  A = {}\n  deg_l A = {}\n  A(sqrt(-1), l) = {}\n  multiplicity of l-1: {}\n",
        r.name,
        r.polynomial,
        r.deg_l,
        r.eval_at_i.display_in("l"),
        r.k
    );
    t.push_str(&format!(
        "  vertical edge: {}\n",
        if r.vertical_edges.has_vertical_edge { "yes" } else { "no" }
    ));
    match &r.bound {
        BoundReport::Applies { p, q, bound, deg_l, ok, .. } => t.push_str(&format!(
            "  two-bridge bound S({p},{q}): deg_l {deg_l} <= {bound}: {}\n",
            if *ok { "holds" } else { "VIOLATED" }
        )),
        BoundReport::NotApplicable { reason, .. } => {
            t.push_str(&format!("  two-bridge bound does not apply: {reason}\n"))
        }
    }
    for f in &r.criteria {
        t.push_str(&format!("  {}\n", finding_line(f)));
    }
    if let Some(p) = &r.probe {
        t.push_str(&format!("  {}: {}\n", p.label, p.note));
    }
    for w in &r.warnings {
        t.push_str(&format!("  warning: {w}\n"));
    }
    t
}

pub fn apoly_analyze(input: Option<&PathBuf>, small: bool) -> CmdResult {
    let path = input.ok_or_else(|| Failure::Input("apoly-analyze needs -i FILE".into()))?;
    let polys = load_apolys(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let reports: Vec<AnalyzerReport> = polys
        .iter()
        .map(|a| analyze(a, small))
        .collect::<Result<_, _>>()?;
    Ok(Report {
        json: serde_json::to_value(&reports).expect("serializable"),
        table: reports.iter().map(analyzer_text).collect(),
        csv: None,
        ok: reports.iter().all(AnalyzerReport::ok),
    })
}

pub const SWEEP_HEADER: [&str; 9] = [
    "name", "p", "q", "det", "meta_count", "riley_deg", "squarefree", "relator_ok", "longitude_ok",
];

struct SweepRow {
    cells: Vec<String>,
    ok: bool,
    error: Option<String>,
}

fn sweep_row(k: &TwoBridge) -> SweepRow {
    let det = k.determinant();
    let base = |deg: String, sf: bool, rel: bool, lon: bool, meta: String| {
        vec![
            k.name().to_string(),
            k.p().to_string(),
            k.q().to_string(),
            det.to_string(),
            meta,
            deg,
            sf.to_string(),
            rel.to_string(),
            lon.to_string(),
        ]
    };
    let meta = count_from_determinant(&det)
        .map(|c| c.to_string())
        .unwrap_or_else(|_| "-".into());
    let run = || -> knotmeta::Result<(RileySection, bool, bool, bool)> {
        let s = section_at_minus_one(k)?;
        let counts = cross_check_counts(k)?;
        let rel = verify_relator_mod(k, &s.phi)?;
        let lon = verify_longitude_mod(k, &s.phi)?;
        Ok((s, counts.ok, rel.ok, lon.ok))
    };
    match run() {
        Ok((s, counts_ok, rel, lon)) => SweepRow {
            cells: base(s.roots_count.to_string(), s.squarefree, rel, lon, meta),
            ok: counts_ok && s.squarefree && rel && lon,
            error: (!counts_ok).then(|| "count mismatch".to_string()),
        },
        Err(e) => SweepRow {
            cells: base("-".into(), false, false, false, meta),
            ok: false,
            error: Some(e.to_string()),
        },
    }
}

pub fn sweep(p_max: Option<i64>) -> CmdResult {
    let p_max = p_max.ok_or_else(|| Failure::Input("sweep needs --p-max".into()))?;
    if p_max < 3 || p_max % 2 == 0 {
        return Err(Failure::Input(format!("--p-max must be odd and at least 3, got {p_max}")));
    }
    let knots = TwoBridge::all_up_to(p_max);
    let rows: Vec<SweepRow> = knots.par_iter().map(sweep_row).collect();
    let json = Value::Array(
        rows.iter()
            .map(|r| {
                let mut v = serde_json::Map::new();
                for (h, c) in SWEEP_HEADER.iter().zip(&r.cells) {
                    let cell = match *h {
                        "p" | "q" => json!(c.parse::<i64>().expect("integer")),
                        "squarefree" | "relator_ok" | "longitude_ok" => json!(c == "true"),
                        _ => json!(c),
                    };
                    v.insert(h.to_string(), cell);
                }
                if let Some(e) = &r.error {
                    v.insert("error".into(), json!(e));
                }
                Value::Object(v)
            })
            .collect(),
    );
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.cells.clone()).collect();
    Ok(Report {
        json,
        table: table(&SWEEP_HEADER, &cells),
        csv: csv_rows(&SWEEP_HEADER, cells),
        ok: rows.iter().all(|r| r.ok),
    })
}
