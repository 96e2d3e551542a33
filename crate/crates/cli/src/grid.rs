//! Rectangular windows onto the triangles, with pretty/CSV/JSON rendering
//! and parsers for the two machine formats.

use std::fmt::Write as _;
use std::str::FromStr;

use anyhow::{anyhow, bail, ensure, Context};
use bsnum::bstriangle::tandem_is_void;
use bsnum::{BigInt, Tables, TriangleKind};
use serde_json::{json, Value};

use crate::config::{OutputFormat, SweepConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    A,
    B,
    Tandem,
    Ainv,
    Cycle,
    Partition,
}

impl TableKind {
    pub const ALL: [TableKind; 6] = [
        TableKind::A,
        TableKind::B,
        TableKind::Tandem,
        TableKind::Ainv,
        TableKind::Cycle,
        TableKind::Partition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableKind::A => "a",
            TableKind::B => "b",
            TableKind::Tandem => "tandem",
            TableKind::Ainv => "ainv",
            TableKind::Cycle => "cycle",
            TableKind::Partition => "partition",
        }
    }
}

impl FromStr for TableKind {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        TableKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| anyhow!("unknown table kind `{s}`"))
    }
}

/// Cell `(rows[i], cols[j])` holds `cells[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub kind: TableKind,
    pub rows: Vec<i64>,
    pub cols: Vec<i64>,
    pub cells: Vec<Vec<BigInt>>,
}

impl Grid {
    pub fn get(&self, n: i64, k: i64) -> Option<&BigInt> {
        let i = self.rows.iter().position(|&r| r == n)?;
        let j = self.cols.iter().position(|&c| c == k)?;
        Some(&self.cells[i][j])
    }

    fn is_void(&self, n: i64, k: i64) -> bool {
        self.kind == TableKind::Tandem && tandem_is_void(n, k)
    }
}

fn square(
    kind: TableKind,
    lo: usize,
    hi: usize,
    mut cell: impl FnMut(usize, usize) -> anyhow::Result<BigInt>,
) -> anyhow::Result<Grid> {
    let idx: Vec<i64> = (lo as i64..=hi as i64).collect();
    let mut cells = Vec::with_capacity(idx.len());
    for n in lo..=hi {
        cells.push(
            (lo..=hi)
                .map(|k| cell(n, k))
                .collect::<anyhow::Result<Vec<_>>>()?,
        );
    }
    Ok(Grid {
        kind,
        rows: idx.clone(),
        cols: idx,
        cells,
    })
}

/// Builds the window of `kind` selected by `cfg`: `0..=max_n` for `a`,
/// `cycle` and `partition`, `1..=max_n` for `b` and `ainv`, and the
/// `window` range on both axes for `tandem`.
pub fn build(tables: &mut Tables, kind: TableKind, cfg: &SweepConfig) -> anyhow::Result<Grid> {
    let m = cfg.max_n;
    match kind {
        TableKind::A => {
            let t = tables.triangle(TriangleKind::BsFirst, m)?;
            square(kind, 0, m, |n, k| {
                Ok(t.get(n, k as i64).unwrap_or_default())
            })
        }
        TableKind::B => {
            let t = tables.triangle(TriangleKind::BsSecond, m)?;
            square(kind, 1, m, |n, k| {
                Ok(t.get(n, k as i64).unwrap_or_default())
            })
        }
        TableKind::Ainv => {
            let t = tables.inverse_first_triangle(m)?;
            square(kind, 1, m, |n, k| {
                Ok(t.get(n, k as i64).unwrap_or_default())
            })
        }
        TableKind::Cycle => square(kind, 0, m, |n, k| Ok(tables.cycle_stirling(n, k as i64))),
        TableKind::Partition => {
            square(
                kind,
                0,
                m,
                |n, k| Ok(tables.partition_stirling(n, k as i64)),
            )
        }
        TableKind::Tandem => {
            let (lo, hi) = cfg.window;
            let idx: Vec<i64> = (lo..=hi).collect();
            let mut cells = Vec::with_capacity(idx.len());
            for &n in &idx {
                let row = idx
                    .iter()
                    .map(|&k| Ok(tables.tandem(n, k)?.value))
                    .collect::<anyhow::Result<Vec<_>>>()?;
                cells.push(row);
            }
            Ok(Grid {
                kind,
                rows: idx.clone(),
                cols: idx,
                cells,
            })
        }
    }
}

pub fn render(grid: &Grid, format: OutputFormat) -> String {
    match format {
        OutputFormat::Pretty => render_pretty(grid),
        OutputFormat::Csv => render_csv(grid),
        OutputFormat::Json => render_json(grid),
    }
}

/// Right-aligned columns. Tandem voids are left blank; every other zero
/// is printed.
pub fn render_pretty(grid: &Grid) -> String {
    let text: Vec<Vec<String>> = grid
        .rows
        .iter()
        .zip(&grid.cells)
        .map(|(&n, row)| {
            grid.cols
                .iter()
                .zip(row)
                .map(|(&k, v)| {
                    if grid.is_void(n, k) {
                        String::new()
                    } else {
                        v.to_string()
                    }
                })
                .collect()
        })
        .collect();
    let label_w = grid
        .rows
        .iter()
        .map(|n| n.to_string().len())
        .max()
        .unwrap_or(0)
        .max(3);
    let widths: Vec<usize> = (0..grid.cols.len())
        .map(|j| {
            text.iter()
                .map(|r| r[j].len())
                .chain([grid.cols[j].to_string().len()])
                .max()
                .unwrap()
        })
        .collect();
    let mut out = String::new();
    write!(out, "{:>label_w$} |", "n\\k").unwrap();
    for (j, k) in grid.cols.iter().enumerate() {
        write!(out, " {:>w$}", k, w = widths[j]).unwrap();
    }
    out.push('\n');
    out.push_str(&"-".repeat(label_w + 2 + widths.iter().map(|w| w + 1).sum::<usize>()));
    out.push('\n');
    for (n, row) in grid.rows.iter().zip(&text) {
        let mut line = format!("{n:>label_w$} |");
        for (j, cell) in row.iter().enumerate() {
            write!(line, " {:>w$}", cell, w = widths[j]).unwrap();
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Header `n,<k...>`, then one row per `n`. Cells are decimal strings.
pub fn render_csv(grid: &Grid) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header: Vec<String> = std::iter::once("n".to_string())
        .chain(grid.cols.iter().map(|k| k.to_string()))
        .collect();
    w.write_record(&header).unwrap();
    for (n, row) in grid.rows.iter().zip(&grid.cells) {
        let rec: Vec<String> = std::iter::once(n.to_string())
            .chain(row.iter().map(|v| v.to_string()))
            .collect();
        w.write_record(&rec).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

pub fn to_json(grid: &Grid) -> Value {
    json!({
        "kind": grid.kind.name(),
        "rows": grid.rows,
        "cols": grid.cols,
        "cells": grid.cells.iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn render_json(grid: &Grid) -> String {
    let mut s = serde_json::to_string_pretty(&to_json(grid)).unwrap();
    s.push('\n');
    s
}

fn parse_int(s: &str) -> anyhow::Result<BigInt> {
    s.trim()
        .parse()
        .map_err(|e| anyhow!("bad integer cell `{s}`: {e}"))
}

pub fn parse_csv(kind: TableKind, text: &str) -> anyhow::Result<Grid> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers()?.clone();
    ensure!(header.get(0) == Some("n"), "csv header must start with `n`");
    let cols = header
        .iter()
        .skip(1)
        .map(|s| {
            s.parse::<i64>()
                .with_context(|| format!("bad column index `{s}`"))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    let mut cells = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        ensure!(rec.len() == cols.len() + 1, "ragged csv row");
        rows.push(rec[0].parse::<i64>().context("bad row index")?);
        cells.push(
            rec.iter()
                .skip(1)
                .map(parse_int)
                .collect::<anyhow::Result<Vec<_>>>()?,
        );
    }
    Ok(Grid {
        kind,
        rows,
        cols,
        cells,
    })
}

pub fn parse_json(text: &str) -> anyhow::Result<Grid> {
    let v: Value = serde_json::from_str(text)?;
    let kind: TableKind = v["kind"]
        .as_str()
        .ok_or_else(|| anyhow!("missing kind"))?
        .parse()?;
    let index = |key: &str| -> anyhow::Result<Vec<i64>> {
        v[key]
            .as_array()
            .ok_or_else(|| anyhow!("missing {key}"))?
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| anyhow!("bad index in {key}")))
            .collect()
    };
    let rows = index("rows")?;
    let cols = index("cols")?;
    let Some(raw) = v["cells"].as_array() else {
        bail!("missing cells");
    };
    let mut cells = Vec::with_capacity(raw.len());
    for row in raw {
        let row = row
            .as_array()
            .ok_or_else(|| anyhow!("cells must be arrays"))?;
        ensure!(row.len() == cols.len(), "ragged json row");
        cells.push(
            row.iter()
                .map(|c| parse_int(c.as_str().ok_or_else(|| anyhow!("cells must be strings"))?))
                .collect::<anyhow::Result<Vec<_>>>()?,
        );
    }
    ensure!(cells.len() == rows.len(), "row count mismatch");
    Ok(Grid {
        kind,
        rows,
        cols,
        cells,
    })
}
