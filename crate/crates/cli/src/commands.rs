use hookmonoid::counting::{self, DifferenceSet};
use hookmonoid::oracle::{self, Filter};
use hookmonoid::partition::parse_list;
use hookmonoid::quotient::{self, ClassIndex};
use hookmonoid::{
    factor, product, render, series, verify, GfForm, Orientation, Partition, PnrMethod,
    RenderOptions,
};
use serde::Serialize;

use crate::args::{Cli, Command, CountCommand, MatrixArgs, NrMethod, PnMethod};
use crate::records::{
    ClassRecord, ConvertRecord, CountRecord, ExtremesRecord, FactorRecord, MatrixRecord,
    MatrixSource, ProductRecord, RenderRecord,
};
use crate::{series_bound, Failure, Output, EXIT_CONSISTENCY, EXIT_OK};

fn ok(stdout: String) -> Result<Output, Failure> {
    Ok(Output {
        stdout,
        code: EXIT_OK,
    })
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize")
}

fn tuple(xs: &[u32]) -> String {
    let inner: Vec<String> = xs.iter().map(u32::to_string).collect();
    format!("({})", inner.join(","))
}

fn small_weight(n: u64) -> Result<u32, Failure> {
    u32::try_from(n).map_err(|_| Failure::Usage(format!("n = {n} is too large to enumerate")))
}

pub(crate) fn execute(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Count(c) => count(c, cli.json),
        Command::Factor { partition } => factor_cmd(partition, cli.json),
        Command::Product { left, right } => {
            let p = product(left, right);
            if cli.json {
                ok(json(&ProductRecord {
                    left: left.parts().to_vec(),
                    right: right.parts().to_vec(),
                    product: p.into_parts(),
                }))
            } else {
                ok(p.to_string())
            }
        }
        Command::Convert { value, from, to, n } => {
            let idx = ClassIndex::parse_text(*from, value, *n)?;
            let result = idx.convert(*to);
            if cli.json {
                ok(json(&ConvertRecord {
                    n: *n,
                    from: *from,
                    to: *to,
                    value: idx.values().to_vec(),
                    result: result.values().to_vec(),
                }))
            } else {
                ok(tuple(result.values()))
            }
        }
        Command::Matrix(m) => matrix(m, cli.json),
        Command::Dh { n } => {
            let value = counting::dh(*n).to_string();
            if cli.json {
                ok(json(&CountRecord {
                    query: format!("dh({n})"),
                    method: "divisors".into(),
                    value,
                }))
            } else {
                ok(value)
            }
        }
        Command::Classes { n } => classes(*n, cli.json),
        Command::Extremes { values } => extremes(values, cli.json),
        Command::Render {
            partition,
            cartesian,
            hooks,
        } => {
            let opts = RenderOptions {
                orientation: if *cartesian {
                    Orientation::Cartesian
                } else {
                    Orientation::English
                },
                mark_hooks: *hooks,
            };
            let text = render(partition, opts);
            if cli.json {
                ok(json(&RenderRecord {
                    partition: partition.parts().to_vec(),
                    cartesian: *cartesian,
                    hooks: *hooks,
                    rows: text.lines().map(str::to_string).collect(),
                }))
            } else {
                ok(text)
            }
        }
        Command::Verify { max_n } => verify_cmd(*max_n, cli.json),
    }
}

fn count(c: &CountCommand, as_json: bool) -> Result<Output, Failure> {
    let (query, method, value) = match c {
        CountCommand::N { n, method } => {
            let value = match method {
                PnMethod::Hooktypes => counting::p_n(*n).to_string(),
                PnMethod::Hdecomp => counting::p_n_hdecomp(*n)?.to_string(),
                PnMethod::Series => series::gf_pn_coeff(*n, series_bound()?)?.to_string(),
                PnMethod::Oracle => {
                    let mut total = 0u64;
                    oracle::for_each_parts(small_weight(*n)?, |_| total += 1);
                    total.to_string()
                }
            };
            (format!("p({n})"), method.name(), value)
        }
        CountCommand::Nr { n, r, method } => {
            let value = match method {
                NrMethod::Sum => counting::p_nr(*n, *r, PnrMethod::Sum).to_string(),
                NrMethod::Recurrence => counting::p_nr(*n, *r, PnrMethod::Recurrence).to_string(),
                NrMethod::Series => {
                    series::gf_pnr_coeff(*n, *r, GfForm::Product, series_bound()?)?.to_string()
                }
                NrMethod::Derivative => {
                    series::gf_pnr_coeff(*n, *r, GfForm::Derivative, series_bound()?)?.to_string()
                }
                NrMethod::Closed => counting::p_nr_closed(*n, *r)?.to_string(),
                NrMethod::Oracle => {
                    oracle::count_where(small_weight(*n)?, &Filter::Durfee(*r)).to_string()
                }
            };
            (format!("p({n},{r})"), method.name(), value)
        }
        CountCommand::Hooktype { ks } => (
            format!("p{ks}"),
            "product",
            counting::p_hooktype(ks).to_string(),
        ),
    };
    if as_json {
        ok(json(&CountRecord {
            query,
            method: method.to_string(),
            value,
        }))
    } else {
        ok(value)
    }
}

fn factor_cmd(p: &Partition, as_json: bool) -> Result<Output, Failure> {
    let hooks = factor(p);
    let hooktype = p.hook_type().map(|h| h.ks().to_vec()).unwrap_or_default();
    let delta = p.difference_sequence().ds().to_vec();
    if as_json {
        return ok(json(&FactorRecord {
            partition: p.parts().to_vec(),
            hooks: hooks
                .iter()
                .map(|h| h.to_partition().into_parts())
                .collect(),
            hooktype,
            delta,
        }));
    }
    let hook_text: Vec<String> = hooks.iter().map(ToString::to_string).collect();
    ok(format!(
        "hooks: {}\nhooktype: {}\ndelta: {}",
        hook_text.join(","),
        tuple(&hooktype),
        tuple(&delta)
    ))
}

fn matrix(m: &MatrixArgs, as_json: bool) -> Result<Output, Failure> {
    let (source, input, matrix) = match (&m.partition, &m.delta) {
        (_, Some(d)) => (MatrixSource::Delta, d.ds().to_vec(), quotient::phi4(d)),
        (Some(p), None) => (
            MatrixSource::Partition,
            p.parts().to_vec(),
            quotient::phi3(p),
        ),
        (None, None) => return Err(Failure::Usage("matrix needs a partition or --delta".into())),
    };
    if as_json {
        ok(json(&MatrixRecord {
            source,
            input,
            matrix,
        }))
    } else {
        ok(matrix.to_string())
    }
}

fn classes(n: u64, as_json: bool) -> Result<Output, Failure> {
    let table = quotient::class_table(n);
    if as_json {
        let records: Vec<ClassRecord> = table.iter().map(ClassRecord::from).collect();
        return ok(json(&records));
    }
    let header = ["r", "hook type", "delta", "pi", "card"];
    let mut rows: Vec<[String; 5]> = table
        .iter()
        .map(|row| {
            [
                row.rank().to_string(),
                row.hook_type.to_string(),
                row.delta.to_string(),
                row.pi.to_string(),
                row.card.to_string(),
            ]
        })
        .collect();
    rows.insert(0, header.map(str::to_string));
    let mut widths = [0usize; 5];
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut lines: Vec<String> = rows
        .iter()
        .map(|row| {
            let cells: Vec<String> = row
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            cells.join("  ").trim_end().to_string()
        })
        .collect();
    let total: hookmonoid::Natural = table.iter().map(|r| r.card.clone()).sum();
    lines.push(format!("{} classes, {} partitions", table.len(), total));
    ok(lines.join("\n"))
}

fn extremes(values: &str, as_json: bool) -> Result<Output, Failure> {
    let set = DifferenceSet::new(parse_list(values)?)?;
    let ext = counting::weight_extremes(&set)?;
    let record = ExtremesRecord {
        values: set.values().to_vec(),
        min: ext.min.ds().to_vec(),
        max: ext.max.ds().to_vec(),
        min_weight: ext.min.weight(),
        max_weight: ext.max.weight(),
        spread: ext.spread,
    };
    if as_json {
        return ok(json(&record));
    }
    ok(format!(
        "min: {} weight {}\nmax: {} weight {}\nspread: {}",
        tuple(&record.min),
        record.min_weight,
        tuple(&record.max),
        record.max_weight,
        record.spread
    ))
}

fn verify_cmd(max_n: u32, as_json: bool) -> Result<Output, Failure> {
    let report = verify::run(max_n, series_bound()?);
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_CONSISTENCY
    };
    let stdout = if as_json {
        json(&report)
    } else {
        let mut lines: Vec<String> = report
            .checks
            .iter()
            .map(|c| {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                format!("{tag}  {}: {} ({} ms)", c.name, c.detail, c.millis)
            })
            .collect();
        match report.first_failure() {
            Some(f) => lines.push(format!("first failing identity: {}: {}", f.name, f.detail)),
            None => lines.push(format!(
                "all {} checks passed up to n = {max_n}",
                report.checks.len()
            )),
        }
        lines.join("\n")
    };
    Ok(Output { stdout, code })
}
