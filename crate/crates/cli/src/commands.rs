use std::fs::File;
use std::io::{self, BufReader, Write};
use std::ops::RangeInclusive;
use std::path::Path;

use anyhow::{bail, Context};
use serde::Serialize;
use ubgraph::families::formulas;
use ubgraph::survey;
use ubgraph::{
    distance_unbalancedness, graph6, profile, verify, FamilyDescriptor, Graph, GraphStream,
    MAX_BUILTIN_ORDER,
};

use crate::report::{write_json, FamilyRecord, GraphRecord, InvariantRecord, TreeRecord};
use crate::Format;

fn open_stream(input: Option<&Path>) -> anyhow::Result<GraphStream> {
    Ok(match input {
        Some(path) => {
            let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
            GraphStream::from_reader(BufReader::with_capacity(1 << 16, file))
        }
        None => GraphStream::from_reader(BufReader::new(io::stdin())),
    })
}

fn warn_skipped(stream: &GraphStream) {
    let skipped = stream.skipped_disconnected();
    if skipped > 0 {
        eprintln!("warning: skipped {skipped} disconnected graph(s)");
    }
}

pub fn invariants(
    family: Option<&str>,
    input: Option<&Path>,
    format: Format,
    out: &mut dyn Write,
) -> anyhow::Result<bool> {
    if format == Format::Csv {
        writeln!(out, "{}", InvariantRecord::CSV_HEADER)?;
    }
    let mut records = Vec::new();
    let mut emit = |g: &Graph, out: &mut dyn Write| -> anyhow::Result<()> {
        let record = InvariantRecord::new(g, &profile(g)?);
        if format == Format::Json {
            records.push(record);
        } else {
            record.write(out, format)?;
        }
        Ok(())
    };
    if let Some(spec) = family {
        let descriptor: FamilyDescriptor = spec.parse()?;
        emit(&descriptor.build()?, out)?;
    } else {
        let mut stream = open_stream(input)?;
        let mut result = Ok(());
        for item in stream.by_ref() {
            match item {
                Ok(g) => emit(&g, out)?,
                Err(e) => {
                    result = Err(e);
                    break;
                }
            }
        }
        warn_skipped(&stream);
        if let Err(e) = result {
            out.flush()?;
            return Err(e.into());
        }
    }
    if format == Format::Json {
        #[derive(Serialize)]
        struct Body {
            graphs: Vec<InvariantRecord>,
        }
        write_json(out, "invariants", Body { graphs: records })?;
    }
    Ok(true)
}

pub fn family(spec: &str, format: Format, out: &mut dyn Write) -> anyhow::Result<bool> {
    let descriptor: FamilyDescriptor = spec.parse()?;
    let g = descriptor.build()?;
    let record = FamilyRecord {
        family: descriptor.to_string(),
        graph6: graph6::encode(&g),
        order: g.order(),
        size: g.size(),
        closed_form: formulas::closed_form(&descriptor),
        bruteforce: distance_unbalancedness(&g)?,
    };
    let ok = record.agrees();
    if format == Format::Json {
        write_json(out, "family", record)?;
    } else {
        record.write(out, format)?;
    }
    Ok(ok)
}

pub fn trees(
    orders: RangeInclusive<usize>,
    conjectures: bool,
    attainers: bool,
    format: Format,
    out: &mut dyn Write,
) -> anyhow::Result<bool> {
    if *orders.start() < 3 || *orders.end() > 20 {
        bail!("tree orders must lie in 3..20");
    }
    if format == Format::Csv {
        writeln!(out, "{}", TreeRecord::csv_header(conjectures, attainers))?;
    }
    let mut records = Vec::new();
    for n in orders {
        let row = survey::tree_survey(n)?;
        let mut record = TreeRecord::new(&row);
        if conjectures {
            let checked = n >= 5;
            let star = checked
                .then(|| survey::min_star_verdict(&row))
                .transpose()?;
            let second = checked
                .then(|| survey::second_min_verdict(&row))
                .transpose()?;
            record.set_conjectures(star.as_ref(), second.as_ref());
        }
        if attainers {
            let trees = survey::max_classification(&row);
            record.max_attainers = Some(trees.into_iter().map(Into::into).collect());
        }
        if format == Format::Json {
            records.push(record);
        } else {
            record.write(out, format)?;
            out.flush()?;
        }
    }
    if format == Format::Json {
        #[derive(Serialize)]
        struct Body {
            rows: Vec<TreeRecord>,
        }
        write_json(out, "trees", Body { rows: records })?;
    }
    Ok(true)
}

pub fn graphs(
    orders: Option<RangeInclusive<usize>>,
    input: Option<&Path>,
    regular_only: bool,
    format: Format,
    out: &mut dyn Write,
) -> anyhow::Result<bool> {
    let command = if regular_only { "regular" } else { "graphs" };
    let mut surveys = Vec::new();
    match input {
        Some(path) => {
            let mut stream = open_stream(Some(path))?;
            let result = if regular_only {
                survey::regular_min_survey(stream.by_ref())
            } else {
                survey::graph_min_survey(stream.by_ref())
            };
            warn_skipped(&stream);
            let result = result?;
            if let Some(range) = &orders {
                if !range.contains(&result.order()) {
                    bail!(
                        "{} holds graphs of order {}",
                        path.display(),
                        result.order()
                    );
                }
            }
            surveys.push(result);
        }
        None => {
            let range = orders.expect("clap requires --orders without --input");
            if *range.start() < 1 || *range.end() > MAX_BUILTIN_ORDER {
                bail!(
                    "built-in enumeration covers orders 1..{MAX_BUILTIN_ORDER}; \
                     pass --input with a graph6 file for larger orders"
                );
            }
            for n in range {
                let stream = GraphStream::builtin(n)?;
                let result = if regular_only {
                    survey::regular_min_survey(stream)
                } else {
                    survey::graph_min_survey(stream)
                };
                let result = result?;
                surveys.push(result);
            }
        }
    }
    let records: Vec<GraphRecord> = surveys.iter().map(GraphRecord::new).collect();
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Body {
                rows: Vec<GraphRecord>,
            }
            write_json(out, command, Body { rows: records })?;
        }
        _ => {
            if format == Format::Csv {
                writeln!(out, "{}", GraphRecord::CSV_HEADER)?;
            }
            for record in &records {
                record.write(out, format)?;
            }
        }
    }
    Ok(true)
}

pub fn verify(
    grid: Option<&str>,
    inject_fault: bool,
    format: Format,
    out: &mut dyn Write,
) -> anyhow::Result<bool> {
    let checks = match grid {
        Some(grid) => verify::run_grid(grid, inject_fault)?,
        None => verify::run_all(inject_fault)?,
    };
    let failed = checks.iter().filter(|c| !c.passed()).count();
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                formula: &'a str,
                params: &'a str,
                formula_value: &'a str,
                bruteforce: &'a str,
                passed: bool,
            }
            #[derive(Serialize)]
            struct Body<'a> {
                total: usize,
                failed: usize,
                checks: Vec<Row<'a>>,
            }
            let rows = checks
                .iter()
                .map(|c| Row {
                    formula: c.formula,
                    params: &c.params,
                    formula_value: &c.expected,
                    bruteforce: &c.actual,
                    passed: c.passed(),
                })
                .collect();
            write_json(
                out,
                "verify",
                Body {
                    total: checks.len(),
                    failed,
                    checks: rows,
                },
            )?;
        }
        Format::Csv => {
            writeln!(out, "formula,params,formula_value,bruteforce,passed")?;
            for c in &checks {
                writeln!(
                    out,
                    "{},\"{}\",{},{},{}",
                    c.formula,
                    c.params,
                    c.expected,
                    c.actual,
                    c.passed()
                )?;
            }
        }
        Format::Text => {
            for c in &checks {
                writeln!(out, "{c}")?;
            }
            writeln!(out, "{} checks, {} mismatches", checks.len(), failed)?;
        }
    }
    Ok(failed == 0)
}
