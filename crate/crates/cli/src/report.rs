//! Report records and their text, CSV and JSON renderings.

use std::io::Write;

use serde::Serialize;
use ubgraph::survey::{MaxTree, MinSurvey, SurveyRow, Verdict};
use ubgraph::{graph6, Graph, InvariantProfile};

use crate::Format;

/// Version tag of the JSON layout.
pub const SCHEMA: &str = "ubgraph-report/1";

#[derive(Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub schema: &'static str,
    pub command: &'a str,
    #[serde(flatten)]
    pub body: T,
}

pub fn write_json<T: Serialize>(out: &mut dyn Write, command: &str, body: T) -> anyhow::Result<()> {
    let envelope = Envelope {
        schema: SCHEMA,
        command,
        body,
    };
    serde_json::to_writer_pretty(&mut *out, &envelope)?;
    writeln!(out)?;
    Ok(())
}

fn opt<T: ToString>(value: Option<T>) -> String {
    value.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn list<T: ToString>(values: &[T], sep: &str) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

#[derive(Serialize)]
pub struct InvariantRecord {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub diameter: usize,
    pub unbalancedness: u64,
    pub mostar: u64,
    pub mostar_by_ell: Vec<u64>,
    pub average_unbalancedness: Option<String>,
    pub balanced_pattern: Vec<bool>,
}

impl InvariantRecord {
    pub fn new(g: &Graph, p: &InvariantProfile) -> Self {
        InvariantRecord {
            graph6: graph6::encode(g),
            order: p.order,
            size: p.size,
            diameter: p.diameter,
            unbalancedness: p.unbalancedness,
            mostar: p.mostar(),
            mostar_by_ell: p.mostar_by_ell.clone(),
            average_unbalancedness: p.average_unbalancedness.map(|r| r.to_string()),
            balanced_pattern: p.balanced_pattern(),
        }
    }

    pub const CSV_HEADER: &'static str =
        "graph6,order,size,diameter,uB,Mo,avg_uB,Mo_by_ell,balanced_pattern";

    pub fn write(&self, out: &mut dyn Write, format: Format) -> std::io::Result<()> {
        match format {
            Format::Csv => writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                self.graph6,
                self.order,
                self.size,
                self.diameter,
                self.unbalancedness,
                self.mostar,
                opt(self.average_unbalancedness.as_ref()),
                list(&self.mostar_by_ell, ";"),
                list(&self.balanced_pattern, ";"),
            ),
            _ => writeln!(
                out,
                "{}: n={} m={} diameter={} uB={} Mo={} avg_uB={} Mo_ell=[{}] balanced=[{}]",
                self.graph6,
                self.order,
                self.size,
                self.diameter,
                self.unbalancedness,
                self.mostar,
                opt(self.average_unbalancedness.as_ref()),
                list(&self.mostar_by_ell, ", "),
                list(&self.balanced_pattern, ", "),
            ),
        }
    }
}

#[derive(Serialize)]
pub struct FamilyRecord {
    pub family: String,
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub closed_form: Option<u64>,
    pub bruteforce: u64,
}

impl FamilyRecord {
    pub fn agrees(&self) -> bool {
        self.closed_form.is_none_or(|v| v == self.bruteforce)
    }

    pub fn write(&self, out: &mut dyn Write, format: Format) -> std::io::Result<()> {
        match format {
            Format::Csv => {
                writeln!(out, "family,graph6,order,size,closed_form,bruteforce")?;
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    self.family,
                    self.graph6,
                    self.order,
                    self.size,
                    opt(self.closed_form),
                    self.bruteforce
                )
            }
            _ => {
                let status = match self.closed_form {
                    None => "no closed form",
                    Some(_) if self.agrees() => "agrees",
                    Some(_) => "MISMATCH",
                };
                writeln!(
                    out,
                    "{} ({}): n={} m={} closed_form={} bruteforce={} {}",
                    self.family,
                    self.graph6,
                    self.order,
                    self.size,
                    opt(self.closed_form),
                    self.bruteforce,
                    status
                )
            }
        }
    }
}

#[derive(Serialize)]
pub struct MaxTreeRecord {
    pub graph6: String,
    pub spider_legs: Option<Vec<usize>>,
}

impl From<MaxTree> for MaxTreeRecord {
    fn from(t: MaxTree) -> Self {
        MaxTreeRecord {
            graph6: t.form.into_string(),
            spider_legs: t.spider_legs,
        }
    }
}

#[derive(Serialize)]
pub struct TreeRecord {
    pub n: usize,
    pub min: u64,
    pub min_second: Option<u64>,
    pub max_second: Option<u64>,
    pub max: u64,
    pub all: u64,
    pub min_count: usize,
    pub max_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub star_is_unique_min: Option<Option<bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub merged_star_is_unique_second_min: Option<Option<bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_attainers: Option<Vec<MaxTreeRecord>>,
}

impl TreeRecord {
    pub fn new(row: &SurveyRow) -> Self {
        TreeRecord {
            n: row.order,
            min: row.min,
            min_second: row.min_second,
            max_second: row.max_second,
            max: row.max,
            all: row.total,
            min_count: row.min_count(),
            max_count: row.max_count(),
            star_is_unique_min: None,
            merged_star_is_unique_second_min: None,
            max_attainers: None,
        }
    }

    pub fn set_conjectures(&mut self, star: Option<&Verdict>, second: Option<&Verdict>) {
        self.star_is_unique_min = Some(star.map(Verdict::holds));
        self.merged_star_is_unique_second_min = Some(second.map(Verdict::holds));
    }

    pub fn csv_header(conjectures: bool, attainers: bool) -> String {
        let mut header = "n,min,min',max',max,#all,#min,#max".to_string();
        if conjectures {
            header.push_str(",star_min,second_min");
        }
        if attainers {
            header.push_str(",max_attainers");
        }
        header
    }

    fn verdict(v: Option<bool>) -> &'static str {
        match v {
            None => "-",
            Some(true) => "holds",
            Some(false) => "FAILS",
        }
    }

    pub fn write(&self, out: &mut dyn Write, format: Format) -> std::io::Result<()> {
        let cells = [
            self.n.to_string(),
            self.min.to_string(),
            opt(self.min_second),
            opt(self.max_second),
            self.max.to_string(),
            self.all.to_string(),
            self.min_count.to_string(),
            self.max_count.to_string(),
        ];
        let conj = self.star_is_unique_min.map(|star| {
            [
                Self::verdict(star),
                Self::verdict(self.merged_star_is_unique_second_min.flatten()),
            ]
        });
        match format {
            Format::Csv => {
                write!(out, "{}", cells.join(","))?;
                if let Some([a, b]) = conj {
                    write!(out, ",{a},{b}")?;
                }
                if let Some(trees) = &self.max_attainers {
                    let forms: Vec<&str> = trees.iter().map(|t| t.graph6.as_str()).collect();
                    write!(out, ",{}", forms.join(";"))?;
                }
                writeln!(out)
            }
            _ => {
                write!(
                    out,
                    "n={:<3} min={:<5} min'={:<5} max'={:<5} max={:<5} #all={:<7} #min={} #max={}",
                    cells[0], cells[1], cells[2], cells[3], cells[4], cells[5], cells[6], cells[7]
                )?;
                if let Some([a, b]) = conj {
                    write!(out, " star_min={a} second_min={b}")?;
                }
                writeln!(out)?;
                for t in self.max_attainers.iter().flatten() {
                    match &t.spider_legs {
                        Some(legs) => writeln!(out, "  max {} Sp({})", t.graph6, list(legs, ","))?,
                        None => writeln!(out, "  max {}", t.graph6)?,
                    }
                }
                Ok(())
            }
        }
    }
}

#[derive(Serialize)]
pub struct GraphRecord {
    pub n: usize,
    pub total: u64,
    pub balanced: u64,
    pub min_nonzero: Option<u64>,
    pub min_count: usize,
    pub attainers: Vec<String>,
}

impl GraphRecord {
    pub const CSV_HEADER: &'static str = "n,#graphs,#balanced,min,#min";

    pub fn new(survey: &MinSurvey) -> Self {
        match survey {
            MinSurvey::MinNonzero(row) => GraphRecord {
                n: row.order,
                total: row.total,
                balanced: row.balanced,
                min_nonzero: Some(row.min_nonzero),
                min_count: row.attainers.len(),
                attainers: row
                    .attainers
                    .iter()
                    .map(|f| f.as_str().to_string())
                    .collect(),
            },
            MinSurvey::AllBalanced { order, total } => GraphRecord {
                n: *order,
                total: *total,
                balanced: *total,
                min_nonzero: None,
                min_count: 0,
                attainers: Vec::new(),
            },
        }
    }

    pub fn write(&self, out: &mut dyn Write, format: Format) -> std::io::Result<()> {
        match format {
            Format::Csv => writeln!(
                out,
                "{},{},{},{},{}",
                self.n,
                self.total,
                self.balanced,
                opt(self.min_nonzero),
                self.min_count
            ),
            _ => {
                match self.min_nonzero {
                    Some(min) => writeln!(
                        out,
                        "n={} graphs={} balanced={} min={} #min={}",
                        self.n, self.total, self.balanced, min, self.min_count
                    )?,
                    None => writeln!(
                        out,
                        "n={} graphs={} all highly distance-balanced",
                        self.n, self.total
                    )?,
                }
                for form in &self.attainers {
                    writeln!(out, "  min {form}")?;
                }
                Ok(())
            }
        }
    }
}
