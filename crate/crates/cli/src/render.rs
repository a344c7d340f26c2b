//! JSON and CSV renderings of every report the CLI emits.

use std::fmt::Display;
use std::io::Write;
use std::path::Path;

use doubleseq_core::campaign::CampaignReport;
use doubleseq_core::functions::UniformContinuityVerdict;
use doubleseq_core::oscillation::WitnessSearch;
use doubleseq_core::{
    ConvergenceReport, OscillationCertificate, ScalarDoubleSequence, SpiralMatrix,
};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy)]
pub enum Format {
    Default,
    Json,
    Csv,
}

/// One report in all its renderings. `text` replaces JSON as the default
/// when present.
pub struct Emit {
    json: Value,
    csv: String,
    text: Option<String>,
}

fn cell(v: Option<impl Display>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn csv(header: &str, rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = format!("{header}\n");
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Quotes a free-text field when it carries a separator or quote.
fn quoted(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn to_json(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn status_str(v: &impl Serialize) -> String {
    to_json(v).as_str().unwrap_or_default().to_string()
}

impl Emit {
    pub fn report(r: &ConvergenceReport) -> Self {
        let cx = r.counterexample.as_ref();
        let values = cx
            .map(|c| {
                c.values
                    .iter()
                    .map(f64::to_string)
                    .collect::<Vec<_>>()
                    .join(";")
            })
            .unwrap_or_default();
        let row = vec![
            status_str(&r.status),
            cell(r.limit),
            r.epsilon.to_string(),
            r.threshold.to_string(),
            r.horizon.to_string(),
            cell(cx.map(|c| c.k)),
            cell(cx.map(|c| c.l)),
            cell(cx.and_then(|c| c.s)),
            cell(cx.and_then(|c| c.t)),
            values,
        ];
        Self {
            json: to_json(r),
            csv: csv(
                "status,limit,epsilon,threshold,horizon,k,l,s,t,values",
                [row],
            ),
            text: None,
        }
    }

    pub fn certificate(c: &OscillationCertificate) -> Self {
        let cx = c.counterexample.as_ref();
        let row = vec![
            status_str(&c.status),
            c.epsilon.to_string(),
            c.alpha.to_string(),
            c.delta.to_string(),
            c.threshold.to_string(),
            c.horizon.to_string(),
            cell(cx.map(|x| x.k)),
            cell(cx.map(|x| x.l)),
            cell(cx.map(|x| x.s)),
            cell(cx.map(|x| x.t)),
            cell(cx.map(|x| x.gap)),
        ];
        Self {
            json: to_json(c),
            csv: csv(
                "status,epsilon,alpha,delta,threshold,horizon,k,l,s,t,gap",
                [row],
            ),
            text: None,
        }
    }

    pub fn witness(s: &WitnessSearch) -> Self {
        let w = s.witness.as_ref();
        let row = vec![
            status_str(&s.status()),
            s.epsilon.to_string(),
            s.horizon.to_string(),
            cell(w.map(|w| w.alpha)),
            cell(w.map(|w| w.delta)),
            cell(w.map(|w| w.threshold)),
            s.triples_tried.to_string(),
        ];
        let mut json = to_json(s);
        json["status"] = to_json(&s.status());
        Self {
            json,
            csv: csv(
                "status,epsilon,horizon,alpha,delta,threshold,triples_tried",
                [row],
            ),
            text: None,
        }
    }

    pub fn spiral(j: u64, row: u64, col: u64) -> Self {
        Self {
            json: json!({ "j": j, "row": row, "col": col }),
            csv: csv(
                "j,row,col",
                [vec![j.to_string(), row.to_string(), col.to_string()]],
            ),
            text: Some(format!("({row},{col})\n")),
        }
    }

    pub fn matrix(m: &SpiralMatrix) -> Self {
        let rows = m
            .triples()
            .map(|(k, l, v)| vec![k.to_string(), l.to_string(), cell(v)]);
        Self {
            json: to_json(m),
            csv: csv("k,l,value", rows),
            text: None,
        }
    }

    /// Values `y_{k,l}` for `1 <= k, l <= h`.
    pub fn window(seq: &ScalarDoubleSequence, h: u64) -> Self {
        let values: Vec<Vec<f64>> = (1..=h)
            .map(|k| (1..=h).map(|l| seq.at(k, l)).collect())
            .collect();
        let rows = (1..=h)
            .flat_map(|k| (1..=h).map(move |l| (k, l)))
            .map(|(k, l)| {
                vec![
                    k.to_string(),
                    l.to_string(),
                    values[(k - 1) as usize][(l - 1) as usize].to_string(),
                ]
            });
        let csv_text = csv("k,l,value", rows);
        Self {
            json: json!({ "label": seq.label(), "horizon": h, "values": values }),
            csv: csv_text,
            text: None,
        }
    }

    pub fn continuity(v: &UniformContinuityVerdict) -> Self {
        let p = v.violating_pair.as_ref();
        let row = vec![
            status_str(&v.status),
            v.epsilon.to_string(),
            cell(v.delta_hat),
            cell(p.map(|p| p.scale)),
            cell(p.map(|p| p.first.0)),
            cell(p.map(|p| p.first.1)),
            cell(p.map(|p| p.second.0)),
            cell(p.map(|p| p.second.1)),
            cell(p.map(|p| p.distance)),
            cell(p.map(|p| p.gap)),
        ];
        Self {
            json: to_json(v),
            csv: csv(
                "status,epsilon,delta_hat,scale,a,b,a_bar,b_bar,distance,gap",
                [row],
            ),
            text: None,
        }
    }

    pub fn campaign(r: &CampaignReport) -> Self {
        let rows = r.cases.iter().map(|c| {
            vec![
                r.theorem_id.to_string(),
                quoted(&c.sequence),
                quoted(&c.function),
                status_str(&c.outcome),
                quoted(c.note.as_deref().unwrap_or("")),
            ]
        });
        Self {
            json: to_json(r),
            csv: csv("theorem_id,sequence,function,outcome,note", rows),
            text: None,
        }
    }

    fn render(&self, format: Format) -> String {
        match (format, &self.text) {
            (Format::Default, Some(t)) => t.clone(),
            (Format::Default | Format::Json, _) => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json renders");
                s.push('\n');
                s
            }
            (Format::Csv, _) => self.csv.clone(),
        }
    }

    pub fn write(&self, format: Format, path: Option<&Path>) -> std::io::Result<()> {
        let body = self.render(format);
        match path {
            Some(p) => std::fs::write(p, body),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(body.as_bytes())?;
                out.flush()
            }
        }
    }
}
