use std::fmt::Write as _;
use std::path::Path;

use hanoi_trees::count::{
    count_closed_with_limit, count_recursive_with_limit, ClassVector, DEFAULT_MAX_COUNT_LEVEL,
};
use hanoi_trees::degree::{full_distribution_table_with_limit, DegreeContext, VertexDistribution};
use hanoi_trees::entropy::{entropy as entropy_value, EntropyLevel};
use hanoi_trees::exact::format_float;
use hanoi_trees::graph::{export_edges, ExportFormat, HanoiGraph, DEFAULT_MAX_LEVEL};
use hanoi_trees::oracle::{forest_class_counts, EdgeList};
use hanoi_trees::sampler::{sample_degrees, tally_report};
use hanoi_trees::{compress_label, VertexLabel};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::output::{emit, prob, write_raw};
use crate::{CountMethod, Failure, TableFormat};

pub const ORACLE_MAX_N: u32 = 4;

/// Size caps, overridable through `HANOI_MAX_GRAPH_N` and `HANOI_MAX_COUNT_N`.
pub struct Limits {
    pub graph_n: u32,
    pub count_n: u32,
}

impl Limits {
    pub fn from_env() -> Self {
        let read = |key: &str, default: u32| {
            std::env::var(key)
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .unwrap_or(default)
        };
        Limits {
            graph_n: read("HANOI_MAX_GRAPH_N", DEFAULT_MAX_LEVEL),
            count_n: read("HANOI_MAX_COUNT_N", DEFAULT_MAX_COUNT_LEVEL),
        }
    }
}

pub fn graph(n: u32, json: bool, limits: &Limits) -> Result<(), Failure> {
    let g = HanoiGraph::build_with_limit(n, limits.graph_n)?;
    if json {
        let doc: Value = serde_json::from_slice(&export_edges(&g, ExportFormat::AdjacencyJson))
            .expect("export is valid JSON");
        emit("graph", json!({ "n": n, "format": "json" }), doc)?;
    } else {
        write_raw(&export_edges(&g, ExportFormat::EdgeList))?;
    }
    Ok(())
}

fn oracle_counts(n: u32) -> Result<ClassVector, Failure> {
    if n > ORACLE_MAX_N {
        return Err(Failure::Usage(format!(
            "--method oracle is limited to n <= {ORACLE_MAX_N}"
        )));
    }
    let g = HanoiGraph::build(n)?;
    let corners = [0u8, 1, 2].map(|p| g.vertex(&VertexLabel::outmost(p)).expect("corner"));
    let [s, p, t, r, l] = forest_class_counts(&EdgeList::from(&g), corners, |_, _| 1)
        .map(|x: BigInt| x.magnitude().clone());
    Ok(ClassVector { n, s, p, t, r, l })
}

pub fn count(n: u32, method: CountMethod, limits: &Limits) -> Result<(), Failure> {
    let v = match method {
        CountMethod::Recursive => count_recursive_with_limit(n, limits.count_n)?,
        CountMethod::Closed => count_closed_with_limit(n, limits.count_n)?,
        CountMethod::Oracle => oracle_counts(n)?,
    };
    let name = match method {
        CountMethod::Recursive => "recursive",
        CountMethod::Closed => "closed",
        CountMethod::Oracle => "oracle",
    };
    emit(
        "count",
        json!({ "n": n, "method": name }),
        serde_json::to_value(&v).expect("counts"),
    )?;
    Ok(())
}

pub fn entropy(level: &str, float: bool) -> Result<(), Failure> {
    let level: EntropyLevel = level.parse()?;
    let h = entropy_value(level);
    let value = if float {
        Value::String(format!("{:.16e}", h.to_f64()))
    } else {
        Value::String(h.decimal())
    };
    emit(
        "entropy",
        json!({ "n": level, "float": float }),
        json!({ "n": level, "value": value }),
    )?;
    Ok(())
}

fn rows_json(d: &VertexDistribution, float: bool) -> Value {
    let rows: Vec<Value> = d
        .table
        .iter()
        .enumerate()
        .map(|(i, row)| {
            json!({
                "i": i,
                "S": prob(&row[0], float),
                "P": prob(&row[1], float),
                "T": prob(&row[2], float),
                "R": prob(&row[3], float),
                "L": prob(&row[4], float),
            })
        })
        .collect();
    json!({ "vertex": d.vertex, "rows": rows })
}

fn cell(q: &BigRational, float: bool) -> String {
    if float {
        format_float(q)
    } else {
        q.to_string()
    }
}

fn csv(dists: &[VertexDistribution], float: bool) -> String {
    let mut out = String::from("vertex,i,S,P,T,R,L\n");
    for d in dists {
        for (i, row) in d.table.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|q| cell(q, float)).collect();
            writeln!(out, "{},{},{}", d.vertex, i, cells.join(",")).unwrap();
        }
    }
    out
}

pub fn degree(
    n: u32,
    vertex: Option<&str>,
    all: bool,
    format: TableFormat,
    float: bool,
    limits: &Limits,
) -> Result<(), Failure> {
    let dists = if all {
        full_distribution_table_with_limit(n, limits.graph_n)?
    } else {
        let label = compress_label(vertex.expect("clap requires --vertex or --all"))?;
        vec![DegreeContext::new(n)?.distribution(&label)?]
    };
    if format == TableFormat::Csv {
        write_raw(csv(&dists, float).as_bytes())?;
        return Ok(());
    }
    let params = json!({ "n": n, "vertex": vertex, "all": all, "float": float });
    let result = if all {
        let vertices: Vec<Value> = dists.iter().map(|d| rows_json(d, float)).collect();
        json!({ "n": n, "vertices": vertices })
    } else {
        let mut one = rows_json(&dists[0], float);
        one["n"] = json!(n);
        one
    };
    emit("degree", params, result)?;
    Ok(())
}

pub fn sample(
    n: u32,
    vertex: &str,
    samples: u64,
    seed: u64,
    csv_path: Option<&Path>,
    limits: &Limits,
) -> Result<(), Failure> {
    let g = HanoiGraph::build_with_limit(n, limits.graph_n)?;
    let label = compress_label(vertex)?;
    g.require_vertex(&label)?;
    let degrees = sample_degrees(&g, &label, samples, seed)?;
    let report = tally_report(&g, &label, &degrees, seed)?;
    if let Some(path) = csv_path {
        let mut out = String::from("sample,degree\n");
        for (k, d) in degrees.iter().enumerate() {
            writeln!(out, "{k},{d}").unwrap();
        }
        std::fs::write(path, out)?;
    }
    emit(
        "sample",
        json!({ "n": n, "vertex": label, "samples": samples, "seed": seed }),
        serde_json::to_value(&report).expect("report"),
    )?;
    Ok(())
}
