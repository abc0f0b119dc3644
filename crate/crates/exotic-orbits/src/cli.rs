//! The `exorbit` command line: enumeration lists, bijection mappings,
//! reduction traces, the orbit correspondence table, and the invariant
//! suite, all with byte-stable output.
//!
//! Exit codes: 0 on success, 1 when the `verify` suite finds a failing
//! invariant, 2 on usage errors (including out-of-range bounds), 3 on
//! invalid input data (a validation report goes to standard error).
//!
//! Formats: JSON output is one object per line using the crate's
//! serialization schemas. CSV uses comma-separated columns with a header
//! row, `;`-joined list cells (segments flattened to `r;s;...`), empty
//! cells for empty lists, and `\n` line endings.

use clap::{Parser, Subcommand, ValueEnum};
use std::fmt::Display;
use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;

use crate::bijection::{mp_to_p2, mp_to_sp, p2_to_mp, sp_to_mp, sp_to_p2};
use crate::exec::Parallelism;
use crate::normal_form::build_normal_form;
use crate::partition::{
    enumerate_bipartitions, enumerate_marked, enumerate_partitions, enumerate_segmented,
    BiPartition, MarkedPartition, Partition, SegmentedPartition,
};
use crate::reduction::{self, GeneralizedMarking, TraceStep};
use crate::verify::{run_suite, VerifyConfig};
use crate::weyl;

#[derive(Parser)]
#[command(
    name = "exorbit",
    version,
    about = "Combinatorics of exotic nilpotent orbits: enumerate, translate, reduce, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List a combinatorial family in its canonical order.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Total size n of the listed objects.
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=64))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Translate one object (single-line JSON on standard input) between
    /// the three families.
    Map {
        #[arg(long, value_enum)]
        from: Family,
        #[arg(long, value_enum)]
        to: Family,
    },
    /// Rewrite a generalized marking to its canonical marked partition.
    Reduce {
        /// Partition parts, comma separated (e.g. `2,1`).
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        lambda: Vec<u64>,
        /// One mark per part, comma separated (e.g. `1,1`).
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        marks: Vec<u64>,
        /// Also emit the move-by-move log.
        #[arg(long)]
        trace: bool,
    },
    /// The full orbit correspondence table for rank n.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=64))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run every invariant sweep and print a JSON report.
    Verify {
        /// Combinatorial sweep bound.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(0..=12))]
        n_max: u64,
        /// Exact-arithmetic sweep bound.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(0..=5))]
        oracle_n_max: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Partition,
    Bipartition,
    Marked,
    Segmented,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Mp,
    Sp,
    P2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let status = run(cli.command, &mut out);
    out.flush().expect("flush standard output");
    match status {
        Ok(code) => ExitCode::from(code),
        Err(report) => {
            eprintln!("invalid input: {report}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<u8, String> {
    match command {
        Command::Enumerate { kind, n, format } => {
            cmd_enumerate(kind, n as usize, format, out);
            Ok(0)
        }
        Command::Map { from, to } => {
            cmd_map(from, to, out)?;
            Ok(0)
        }
        Command::Reduce {
            lambda,
            marks,
            trace,
        } => {
            cmd_reduce(&lambda, &marks, trace, out)?;
            Ok(0)
        }
        Command::Table { n, format } => {
            cmd_table(n as usize, format, out);
            Ok(0)
        }
        Command::Verify {
            n_max,
            oracle_n_max,
        } => Ok(cmd_verify(n_max as usize, oracle_n_max as usize, out)),
    }
}

/// `;`-joined list cell; empty list renders as an empty cell.
fn csv_list<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

fn csv_segments(segments: &[(usize, usize)]) -> String {
    csv_list(segments.iter().flat_map(|&(r, s)| [r, s]))
}

fn emit(out: &mut impl Write, line: &str) {
    writeln!(out, "{line}").expect("write standard output");
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("crate types serialize without error")
}

fn cmd_enumerate(kind: Kind, n: usize, format: Format, out: &mut impl Write) {
    match (kind, format) {
        (Kind::Partition, Format::Json) => {
            for p in enumerate_partitions(n) {
                emit(out, &json_line(&p));
            }
        }
        (Kind::Partition, Format::Csv) => {
            emit(out, "lambda");
            for p in enumerate_partitions(n) {
                emit(out, &csv_list(p.parts().iter()));
            }
        }
        (Kind::Bipartition, Format::Json) => {
            for bp in enumerate_bipartitions(n) {
                emit(out, &json_line(&bp));
            }
        }
        (Kind::Bipartition, Format::Csv) => {
            emit(out, "first,second");
            for bp in enumerate_bipartitions(n) {
                emit(
                    out,
                    &format!(
                        "{},{}",
                        csv_list(bp.first().parts().iter()),
                        csv_list(bp.second().parts().iter())
                    ),
                );
            }
        }
        (Kind::Marked, Format::Json) => {
            for mp in enumerate_marked(n) {
                emit(out, &json_line(&mp));
            }
        }
        (Kind::Marked, Format::Csv) => {
            emit(out, "lambda,marks");
            for mp in enumerate_marked(n) {
                emit(
                    out,
                    &format!(
                        "{},{}",
                        csv_list(mp.lambda().parts().iter()),
                        csv_list(mp.marks().iter())
                    ),
                );
            }
        }
        (Kind::Segmented, Format::Json) => {
            for sp in enumerate_segmented(n) {
                emit(out, &json_line(&sp));
            }
        }
        (Kind::Segmented, Format::Csv) => {
            emit(out, "lambda,segments");
            for sp in enumerate_segmented(n) {
                emit(
                    out,
                    &format!(
                        "{},{}",
                        csv_list(sp.lambda().parts().iter()),
                        csv_segments(sp.segments())
                    ),
                );
            }
        }
    }
}

fn read_stdin_line() -> Result<String, String> {
    let mut buffer = String::new();
    io::stdin()
        .read_to_string(&mut buffer)
        .map_err(|e| format!("cannot read standard input: {e}"))?;
    Ok(buffer.trim().to_string())
}

fn cmd_map(from: Family, to: Family, out: &mut impl Write) -> Result<(), String> {
    let input = read_stdin_line()?;
    let mp: MarkedPartition = match from {
        Family::Mp => serde_json::from_str(&input).map_err(|e| e.to_string())?,
        Family::Sp => {
            let sp: SegmentedPartition = serde_json::from_str(&input).map_err(|e| e.to_string())?;
            sp_to_mp(&sp).map_err(|e| e.to_string())?
        }
        Family::P2 => {
            let bp: BiPartition = serde_json::from_str(&input).map_err(|e| e.to_string())?;
            p2_to_mp(&bp).map_err(|e| e.to_string())?
        }
    };
    let line = match to {
        Family::Mp => json_line(&mp),
        Family::Sp => json_line(&mp_to_sp(&mp).map_err(|e| e.to_string())?),
        Family::P2 => json_line(&mp_to_p2(&mp).map_err(|e| e.to_string())?),
    };
    emit(out, &line);
    Ok(())
}

fn cmd_reduce(
    lambda: &[u64],
    marks: &[u64],
    trace: bool,
    out: &mut impl Write,
) -> Result<(), String> {
    let lambda = Partition::new(lambda.iter().map(|&x| x as usize).collect())
        .map_err(|e| e.to_string())?;
    let marks: Vec<usize> = marks.iter().map(|&x| x as usize).collect();
    let gm = GeneralizedMarking::new(lambda, marks).map_err(|e| e.to_string())?;
    if trace {
        #[derive(serde::Serialize)]
        struct ReduceOutput<'a> {
            result: &'a MarkedPartition,
            trace: &'a [TraceStep],
        }
        let (result, steps) = reduction::reduce_with_trace(&gm);
        emit(
            out,
            &json_line(&ReduceOutput {
                result: &result,
                trace: &steps,
            }),
        );
    } else {
        emit(out, &json_line(&reduction::reduce(&gm)));
    }
    Ok(())
}

#[derive(serde::Serialize)]
struct TableRow {
    n: usize,
    mp: MarkedPartition,
    sp: SegmentedPartition,
    bp: BiPartition,
    normal_form: String,
    #[serde(serialize_with = "crate::serialize_biguint")]
    irr_dim: num_bigint::BigUint,
}

fn table_rows(n: usize) -> Vec<TableRow> {
    enumerate_marked(n)
        .into_iter()
        .map(|mp| {
            let sp = mp_to_sp(&mp).expect("marked partitions always translate");
            let bp = sp_to_p2(&sp).expect("segmented partitions always translate");
            let normal_form = build_normal_form(mp.lambda(), mp.marks())
                .expect("marked partitions are in bounds")
                .text_notation();
            let irr_dim = weyl::irr_dim(&bp);
            TableRow {
                n,
                mp,
                sp,
                bp,
                normal_form,
                irr_dim,
            }
        })
        .collect()
}

fn cmd_table(n: usize, format: Format, out: &mut impl Write) {
    let rows = table_rows(n);
    match format {
        Format::Json => {
            for row in &rows {
                emit(out, &json_line(row));
            }
        }
        Format::Csv => {
            emit(out, "lambda,marks,segments,gamma,mu,normal_form,irr_dim");
            for row in &rows {
                emit(
                    out,
                    &format!(
                        "{},{},{},{},{},{},{}",
                        csv_list(row.mp.lambda().parts().iter()),
                        csv_list(row.mp.marks().iter()),
                        csv_segments(row.sp.segments()),
                        csv_list(row.bp.first().parts().iter()),
                        csv_list(row.bp.second().parts().iter()),
                        row.normal_form,
                        row.irr_dim
                    ),
                );
            }
        }
    }
}

fn cmd_verify(n_max: usize, oracle_n_max: usize, out: &mut impl Write) -> u8 {
    let report = run_suite(&VerifyConfig {
        n_max,
        oracle_n_max,
        parallelism: Parallelism::default(),
    });
    emit(out, &json_line(&report));
    u8::from(!report.pass)
}
