use std::io::{self, Write};

use serde_json::{json, Map, Value};

use crate::config::OutputFormat;
use crate::suites::{Claim, Suite};

/// Totals for one claim id within a suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tally {
    pub suite: Suite,
    pub id: String,
    pub checked: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub tallies: Vec<Tally>,
    pub failures: Vec<Claim>,
}

impl Summary {
    pub fn total(&self) -> usize {
        self.tallies.iter().map(|t| t.checked).sum()
    }

    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn claim_json(c: &Claim) -> Value {
    let params: Map<String, Value> = c
        .params
        .iter()
        .map(|(k, v)| (k.clone(), json!(v)))
        .collect();
    let fields: Map<String, Value> = c
        .fields
        .iter()
        .map(|(k, v)| (k.clone(), json!(v)))
        .collect();
    json!({
        "suite": c.suite.name(),
        "claim": c.id,
        "params": params,
        "pass": c.pass,
        "fields": fields,
    })
}

fn fields_string(c: &Claim) -> String {
    c.fields
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Streams claims in the chosen format. Pretty output prints failures as
/// they arrive and a per-claim tally at the end; CSV and JSON emit every
/// claim.
pub struct Reporter<W: Write> {
    format: OutputFormat,
    out: W,
    summary: Summary,
}

impl<W: Write> Reporter<W> {
    pub fn new(format: OutputFormat, out: W) -> io::Result<Self> {
        let mut r = Reporter {
            format,
            out,
            summary: Summary::default(),
        };
        if format == OutputFormat::Csv {
            r.write_csv(&["suite", "claim", "params", "pass", "details"])?;
        }
        Ok(r)
    }

    fn write_csv(&mut self, rec: &[&str]) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(rec)?;
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        self.out.write_all(&bytes)
    }

    pub fn record(&mut self, c: Claim) -> io::Result<()> {
        let failed = usize::from(!c.pass);
        match self
            .summary
            .tallies
            .iter_mut()
            .find(|t| t.suite == c.suite && t.id == c.id)
        {
            Some(t) => {
                t.checked += 1;
                t.failed += failed;
            }
            None => self.summary.tallies.push(Tally {
                suite: c.suite,
                id: c.id.clone(),
                checked: 1,
                failed,
            }),
        }
        match self.format {
            OutputFormat::Pretty => {
                if !c.pass {
                    writeln!(
                        self.out,
                        "FAIL {} {} {} {}",
                        c.suite,
                        c.id,
                        c.params_string(),
                        fields_string(&c)
                    )?;
                }
            }
            OutputFormat::Csv => {
                let pass = if c.pass { "true" } else { "false" };
                let rec = [
                    c.suite.name(),
                    &c.id,
                    &c.params_string(),
                    pass,
                    &fields_string(&c),
                ];
                self.write_csv(&rec)?;
            }
            OutputFormat::Json => writeln!(self.out, "{}", claim_json(&c))?,
        }
        if !c.pass {
            self.summary.failures.push(c);
        }
        Ok(())
    }

    pub fn finish(mut self) -> io::Result<Summary> {
        let s = &self.summary;
        match self.format {
            OutputFormat::Pretty => {
                for t in &s.tallies {
                    writeln!(
                        self.out,
                        "{:<12} {:<20} {:>7} checked {:>5} failed",
                        t.suite.name(),
                        t.id,
                        t.checked,
                        t.failed
                    )?;
                }
                if s.all_pass() {
                    writeln!(self.out, "ok: all {} claims pass", s.total())?;
                } else {
                    writeln!(
                        self.out,
                        "FAILED: {} of {} claims",
                        s.failures.len(),
                        s.total()
                    )?;
                }
            }
            OutputFormat::Csv => {}
            OutputFormat::Json => {
                let line = json!({"summary": {"checked": s.total(), "failed": s.failures.len()}});
                writeln!(self.out, "{line}")?;
            }
        }
        self.out.flush()?;
        Ok(self.summary)
    }
}
