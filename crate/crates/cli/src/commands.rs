//! Subcommand bodies. Each renders all three formats; `main` picks one.

use std::fmt::Write as _;
use std::time::Instant;

use pgraph::charpoly::SpectrumReport;
use pgraph::group::GroupSpec;
use pgraph::powergraph::PowerGraph;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{GlobalOpts, Method, SweepArgs};
use crate::compute::{compute, residual_source, Computed};
use crate::format::{product_text, root_value, sig12};
use crate::verify::{verify, Status, Verification};

pub const SCHEMA: u32 = 1;

pub struct Report {
    pub text: String,
    pub json: Value,
    pub csv: String,
    /// False when a verification failed.
    pub ok: bool,
    /// Lines for stderr naming what failed.
    pub diagnostics: Vec<String>,
}

impl Report {
    fn new(text: String, json: Value, csv: String) -> Self {
        Self {
            text,
            json,
            csv,
            ok: true,
            diagnostics: Vec::new(),
        }
    }
}

fn header(command: &str, spec: GroupSpec) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    m.insert("m".into(), json!(spec.m()));
    m.insert("n".into(), json!(spec.n()));
    m
}

pub fn subgroups(spec: GroupSpec) -> Report {
    let g = PowerGraph::build(spec);
    let mut text = format!("{spec}: {} cyclic subgroups\n", g.subgroups().len());
    let mut csv = String::from("order,generator_a,generator_b,generators\n");
    let mut rows = Vec::new();
    for s in g.subgroups() {
        let gen = s.canonical_generator();
        let k = s.generators().len();
        let _ = writeln!(text, "order {:>6}  <{gen}>  {k} generators", s.order());
        let _ = writeln!(csv, "{},{},{},{k}", s.order(), gen.a, gen.b);
        rows.push(json!({"order": s.order(), "generator": [gen.a, gen.b], "generators": k}));
    }
    let mut j = header("subgroups", spec);
    j.insert("count".into(), json!(rows.len()));
    j.insert("subgroups".into(), Value::Array(rows));
    Report::new(text, Value::Object(j), csv)
}

pub fn graph(spec: GroupSpec) -> Report {
    let g = PowerGraph::build(spec);
    let adj = g.adjacency();
    let text = format!(
        "{spec}: {} vertices, {} edges\n{}",
        adj.size(),
        adj.edge_count(),
        adj.edge_list()
    );
    let mut csv = String::from("u,v\n");
    for (u, v) in adj.edges() {
        let _ = writeln!(csv, "{u},{v}");
    }
    let mut j = header("graph", spec);
    j.insert(
        "graph".into(),
        serde_json::to_value(adj.to_json(&spec)).expect("serializable"),
    );
    Report::new(text, Value::Object(j), csv)
}

pub fn quotient(spec: GroupSpec) -> pgraph::Result<Report> {
    let g = PowerGraph::build(spec);
    let q = pgraph::partition::quotient_matrix(g.partition(), g.adjacency())?;
    let text = format!(
        "{spec}: quotient matrix of size {}\nclass orders: {:?}\nclass sizes: {:?}\n{}",
        q.size(),
        q.orders(),
        q.class_sizes(),
        q.matrix()
    );
    let mut csv = String::new();
    for row in q.matrix().rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        let _ = writeln!(csv, "{}", cells.join(","));
    }
    let mut j = header("quotient", spec);
    j.insert(
        "quotient".into(),
        serde_json::to_value(q.to_json()).expect("serializable"),
    );
    j.insert("class_sizes".into(), json!(q.class_sizes()));
    Ok(Report::new(text, Value::Object(j), csv))
}

fn attach_verified(r: &mut Report, c: &Computed, spec: GroupSpec) {
    if c.verified == Some(false) {
        r.ok = false;
        r.diagnostics.push(format!(
            "{spec}: closed form does not reproduce the exact characteristic polynomial"
        ));
    }
}

fn computed_json(j: &mut serde_json::Map<String, Value>, c: &Computed, opts: &GlobalOpts) {
    let source = residual_source(opts.residual);
    j.insert("method".into(), json!(c.method));
    if !c.factors.is_empty() {
        let factors: Vec<Value> = c
            .factors
            .iter()
            .map(|(f, k)| json!({"factor_coefficients": f, "factor": f.to_string(), "multiplicity": k}))
            .collect();
        j.insert("factors".into(), Value::Array(factors));
    }
    if let Some(f) = &c.factorization {
        j.insert("alpha".into(), json!(f.alpha));
        j.insert(
            "quotient".into(),
            serde_json::to_value(f.quotient.to_json()).expect("serializable"),
        );
        j.insert("quotient_charpoly".into(), json!(f.quotient_charpoly));
    }
    if let Some(a) = &c.alpha {
        j.insert(
            "alpha_report".into(),
            serde_json::to_value(a).expect("serializable"),
        );
    }
    if let Some(cf) = &c.closed_form {
        j.insert(
            "closed_form".into(),
            serde_json::to_value(cf.to_json(source)).expect("serializable"),
        );
    }
    if let Some(v) = c.verified {
        j.insert("verified".into(), json!(v));
    }
}

pub fn charpoly(spec: GroupSpec, opts: &GlobalOpts) -> pgraph::Result<Report> {
    let c = compute(spec, opts.method, opts.residual)?;
    let mut text = format!("{spec} (method {})\npsi(x) = {}\n", c.method, c.poly);
    if !c.factors.is_empty() {
        let _ = writeln!(text, "factored: {}", product_text(&c.factors));
    }
    if let Some(f) = &c.factorization {
        let _ = writeln!(text, "alpha = {}", f.alpha);
        let _ = writeln!(text, "quotient matrix ({0}x{0}):", f.quotient.size());
        let _ = write!(text, "{}", f.quotient.matrix());
    }
    if let Some(v) = c.verified {
        let _ = writeln!(text, "verified: {v}");
    }
    let mut csv = String::from("degree,coefficient\n");
    for (i, a) in c.poly.coefficients().iter().enumerate() {
        let _ = writeln!(csv, "{i},{a}");
    }
    let mut j = header("charpoly", spec);
    j.insert("degree".into(), json!(c.poly.degree()));
    j.insert("coefficients".into(), json!(c.poly));
    j.insert("polynomial".into(), json!(c.poly.to_string()));
    computed_json(&mut j, &c, opts);
    let mut r = Report::new(text, Value::Object(j), csv);
    attach_verified(&mut r, &c, spec);
    Ok(r)
}

pub fn spectrum(spec: GroupSpec, opts: &GlobalOpts) -> pgraph::Result<Report> {
    let c = compute(spec, opts.method, opts.residual)?;
    let s = SpectrumReport::from_charpoly(&c.poly)?;
    let mut text = format!("{spec}: {} eigenvalues (method {})\n", s.total, c.method);
    let mut csv = String::from("value,multiplicity,factor\n");
    let mut entries = Vec::new();
    let mut eigen: Vec<(f64, String, usize, String)> = Vec::new();
    for e in &s.entries {
        let roots: Vec<Value> = e
            .roots
            .iter()
            .map(|r| {
                let v = root_value(r);
                eigen.push((r.approx, v.clone(), e.multiplicity, e.factor.to_string()));
                json!({"value": v, "numeric": sig12(r.approx).parse::<f64>().unwrap_or(r.approx)})
            })
            .collect();
        entries.push(json!({
            "factor": e.factor.to_string(),
            "factor_coefficients": e.factor,
            "multiplicity": e.multiplicity,
            "roots": roots,
        }));
    }
    eigen.sort_by(|a, b| a.0.total_cmp(&b.0));
    for (_, v, k, f) in &eigen {
        let _ = writeln!(text, "  {v:>20}  x{k:<6} [{f}]");
        let _ = writeln!(csv, "{v},{k},{f}");
    }
    if let Some(cf) = &c.closed_form {
        let _ = writeln!(text, "closed form ({}):", cf.family.name());
        for f in &cf.fixed {
            for e in &f.eigenvalues {
                let _ = writeln!(text, "  {} x{}", e.value_expr, e.multiplicity);
            }
        }
        let _ = writeln!(
            text,
            "  printed residual matches exact residual: {}",
            cf.printed_residual_matches()
        );
    }
    let mut j = header("spectrum", spec);
    j.insert("total".into(), json!(s.total));
    j.insert("entries".into(), Value::Array(entries));
    j.insert(
        "eigenvalues".into(),
        Value::Array(
            eigen
                .iter()
                .map(|(_, v, k, _)| json!({"value": v, "multiplicity": k}))
                .collect(),
        ),
    );
    computed_json(&mut j, &c, opts);
    let mut r = Report::new(text, Value::Object(j), csv);
    attach_verified(&mut r, &c, spec);
    Ok(r)
}

fn verification_json(v: &Verification) -> Value {
    let checks: Vec<Value> = v
        .checks
        .iter()
        .map(|c| json!({"name": c.name, "status": c.status.name(), "detail": c.detail}))
        .collect();
    json!({
        "m": v.spec.m(),
        "n": v.spec.n(),
        "vertices": v.vertices,
        "classes": v.classes,
        "alpha": v.alpha,
        "method": v.method,
        "passed": v.passed(),
        "checks": checks,
    })
}

pub fn verify_one(spec: GroupSpec, opts: &GlobalOpts) -> Report {
    let v = verify(spec, residual_source(opts.residual));
    let mut text = format!(
        "{spec}: {} vertices, {} classes, alpha {}\n",
        v.vertices, v.classes, v.alpha
    );
    let mut csv = String::from("check,status,detail\n");
    for c in &v.checks {
        let _ = writeln!(text, "  {:<4} {:<30} {}", c.status.name(), c.name, c.detail);
        let _ = writeln!(
            csv,
            "{},{},{}",
            c.name,
            c.status.name(),
            c.detail.replace(',', ";")
        );
    }
    let _ = writeln!(text, "{}", if v.passed() { "PASS" } else { "FAIL" });
    let mut j = header("verify", spec);
    j.insert("result".into(), verification_json(&v));
    let mut r = Report::new(text, Value::Object(j), csv);
    r.ok = v.passed();
    r.diagnostics = v
        .failures()
        .map(|c| format!("{spec}: invariant {} failed {}", c.name, c.detail))
        .collect();
    r
}

struct Row {
    v: Verification,
    method: &'static str,
    millis: u128,
}

fn method_tag(method: Method, dispatched: &'static str) -> &'static str {
    match method {
        Method::Auto => dispatched,
        Method::Direct => "direct",
        Method::Quotient => "quotient",
        Method::Formula => "formula",
    }
}

pub fn sweep(args: &SweepArgs, opts: &GlobalOpts) -> Result<Report, String> {
    let pairs: Vec<GroupSpec> = args
        .m
        .values()
        .flat_map(|m| args.n.values().map(move |n| (m, n)))
        .map(|(m, n)| GroupSpec::new(m, n).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let source = residual_source(opts.residual);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .map_err(|e| e.to_string())?;
    let rows: Vec<Row> = pool.install(|| {
        pairs
            .par_iter()
            .map(|&spec| {
                let t = Instant::now();
                let v = verify(spec, source);
                let millis = if args.no_timing {
                    0
                } else {
                    t.elapsed().as_millis()
                };
                Row {
                    method: method_tag(opts.method, v.method),
                    v,
                    millis,
                }
            })
            .collect()
    });
    let mut csv = String::from("m,n,vertices,classes,alpha,method,match,millis\n");
    let mut json_rows = Vec::new();
    let mut diagnostics = Vec::new();
    for r in &rows {
        let v = &r.v;
        let _ = writeln!(
            csv,
            "{},{},{},{},{},{},{},{}",
            v.spec.m(),
            v.spec.n(),
            v.vertices,
            v.classes,
            v.alpha,
            r.method,
            v.passed(),
            r.millis
        );
        let mut j = verification_json(v);
        j["millis"] = json!(r.millis);
        j["method"] = json!(r.method);
        json_rows.push(j);
        diagnostics.extend(
            v.failures()
                .map(|c| format!("{}: invariant {} failed {}", v.spec, c.name, c.detail)),
        );
    }
    let passed = rows.iter().filter(|r| r.v.passed()).count();
    let skipped: usize = rows
        .iter()
        .map(|r| {
            r.v.checks
                .iter()
                .filter(|c| c.status == Status::Skip)
                .count()
        })
        .sum();
    let mut j = serde_json::Map::new();
    j.insert("schema".into(), json!(SCHEMA));
    j.insert("command".into(), json!("sweep"));
    j.insert("pairs".into(), json!(rows.len()));
    j.insert("passed".into(), json!(passed));
    j.insert("rows".into(), Value::Array(json_rows));
    let mut r = Report::new(csv.clone(), Value::Object(j), csv);
    r.ok = passed == rows.len();
    if !opts.quiet {
        diagnostics.push(format!(
            "{passed}/{} pairs passed, {skipped} checks skipped",
            rows.len()
        ));
    }
    r.diagnostics = diagnostics;
    Ok(r)
}
