//! The `bellsum` binary.
//!
//! Subcommands:
//!
//! * `sum TERM [--n N]` decides whether the term has a hypergeometric
//!   antidifference, prints the telescoping certificate when it does, and
//!   evaluates the exact partial sum over `k = 0..=N` when `--n` is given.
//! * `corrections --family {bell,f,g} [--a A --z Z] --dmax D` prints the
//!   correction constants of the chosen family.
//! * `tables --which {A,B,gould,a121207} --dmax D` prints the change-of-basis
//!   tables and the integer sequences they contain.
//! * `verify-paper` runs the bundled identity catalog and reports one
//!   PASS/FAIL line per identity.
//!
//! Exit codes: 0 on success, 1 on usage or parse errors, 2 when `sum`
//! reaches the definitive not-summable verdict (a decision, not a failure).
//! Every number is printed as an exact rational; there is no floating point.

use std::fmt::Write as _;

use bellsum_cli::{catalog, poly_strings};
use bellsum_core::corrections::{bell_numbers, f_correction, g_correction, CorrectionSequence};
use bellsum_core::gosper::{antidifference, antidifference_term, definite_sum, normal_form};
use bellsum_core::rational::{parse_rat, Rat};
use bellsum_core::tables::{a121207_table, build_a, build_b, gould_numbers};
use bellsum_core::term::parse_term;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "bellsum", version, about = "Exact telescoping sums and correction constants")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide summability of a term and evaluate exact partial sums.
    Sum {
        /// Term in k, e.g. "(k-1)/fact(k)" or "(k^2-11)*fact(k)/pow(-2,k)".
        #[arg(allow_hyphen_values = true)]
        term: String,
        /// Evaluate the partial sum over k = 0..=N.
        #[arg(long, value_name = "N")]
        n: Option<u64>,
    },
    /// Print correction constants c(0)..c(dmax) for a family.
    Corrections {
        /// Term family: bell is 1/k!, f divides by rf(a,k), g multiplies by it.
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Rising-factorial parameter (families f and g only).
        #[arg(long, value_name = "RATIONAL", allow_hyphen_values = true)]
        a: Option<String>,
        /// Geometric base (families f and g only).
        #[arg(long, value_name = "RATIONAL", allow_hyphen_values = true)]
        z: Option<String>,
        /// Largest degree d to report.
        #[arg(long)]
        dmax: usize,
    },
    /// Print a change-of-basis table or one of its integer sequences.
    Tables {
        #[arg(long, value_enum, ignore_case = true)]
        which: Which,
        /// Number of rows (rows are indexed d = 1..=dmax).
        #[arg(long)]
        dmax: usize,
    },
    /// Run the bundled identity catalog and report PASS/FAIL per identity.
    VerifyPaper,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Bell,
    F,
    G,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Which {
    /// Rows of the forward change-of-basis matrix.
    #[value(name = "A")]
    A,
    /// Rows of its inverse.
    #[value(name = "B")]
    B,
    /// First column of the inverse table.
    Gould,
    /// The inverse table with 0-based column labels.
    A121207,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };

    // Commands render into a buffer and report their exit code; the buffer is
    // written in one shot so a closed pipe downstream (e.g. `... | head`)
    // cannot disturb the verdict.
    let mut out = String::new();
    match run(cli, &mut out) {
        Ok(code) => {
            write_stdout(&out);
            std::process::exit(code);
        }
        Err(message) => {
            write_stdout(&out);
            eprintln!("error: {message}");
            std::process::exit(1);
        }
    }
}

fn write_stdout(text: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes());
    let _ = stdout.flush();
}

fn run(cli: Cli, out: &mut String) -> Result<i32, String> {
    match cli.command {
        Command::Sum { term, n } => cmd_sum(&term, n, cli.format, out),
        Command::Corrections { family, a, z, dmax } => {
            cmd_corrections(family, a.as_deref(), z.as_deref(), dmax, cli.format, out)
        }
        Command::Tables { which, dmax } => cmd_tables(which, dmax, cli.format, out),
        Command::VerifyPaper => Ok(cmd_verify(cli.format, out)),
    }
}

/// Append one line to the output buffer; writing to a String cannot fail.
macro_rules! line {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).expect("write to string buffer")
    };
}

// ---------------------------------------------------------------------------
// sum
// ---------------------------------------------------------------------------

fn cmd_sum(term_src: &str, n: Option<u64>, format: Format, out: &mut String) -> Result<i32, String> {
    let term = parse_term(term_src).map_err(|e| format!("cannot parse term: {e}"))?;

    if term.is_zero() {
        let sum_entry = n.map(|upper| (upper, Rat::from_integer(0.into())));
        match format {
            Format::Text => {
                line!(out, "term: 0");
                line!(out, "summable: yes");
                line!(out, "antidifference: 0");
                if let Some((upper, value)) = &sum_entry {
                    line!(out, "sum 0..={upper}: {value}");
                }
            }
            Format::Json => {
                let sum_json = sum_entry
                    .map(|(upper, value)| json!({"upper": upper, "value": value.to_string()}))
                    .unwrap_or(Value::Null);
                print_json(
                    json!({
                        "term": "0",
                        "summable": true,
                        "normal_form": Value::Null,
                        "certificate": Value::Null,
                        "antidifference": "0",
                        "sum": sum_json,
                    }),
                    out,
                );
            }
        }
        return Ok(0);
    }

    let nf = normal_form(&term.ratio());
    let certificate = antidifference(&term);
    let summable = certificate.is_some();

    let anti_string = certificate.as_ref().map(|cert| {
        match antidifference_term(&term, cert) {
            Some(g) => g.to_string(),
            // The multiplier denominator need not divide the polynomial part;
            // fall back to the product form, which is still exact.
            None => format!("({}) * ({})", cert.multiplier, term),
        }
    });
    let sum_entry = match (summable, n) {
        (true, Some(upper)) => {
            let value = definite_sum(&term, upper).expect("certificate exists");
            Some((upper, value))
        }
        _ => None,
    };

    match format {
        Format::Text => {
            line!(out, "term: {term}");
            line!(out, "summable: {}", if summable { "yes" } else { "no" });
            line!(
                out,
                "normal form: z = {}, a = {}, b = {}, c = {}",
                nf.z,
                nf.a.to_string_with("k"),
                nf.b.to_string_with("k"),
                nf.c.to_string_with("k")
            );
            if let Some(cert) = &certificate {
                line!(out, "multiplier: {}", cert.multiplier);
                line!(out, "antidifference: {}", anti_string.as_deref().unwrap_or("0"));
            } else {
                line!(out, "reason: term has no hypergeometric antidifference");
            }
            if let Some((upper, value)) = &sum_entry {
                line!(out, "sum 0..={upper}: {value}");
            }
        }
        Format::Json => {
            let cert_json = certificate
                .as_ref()
                .map(|cert| {
                    json!({
                        "x": poly_strings(&cert.x),
                        "multiplier": {
                            "numerator": poly_strings(cert.multiplier.numer()),
                            "denominator": poly_strings(cert.multiplier.denom()),
                        },
                    })
                })
                .unwrap_or(Value::Null);
            let sum_json = sum_entry
                .map(|(upper, value)| json!({"upper": upper, "value": value.to_string()}))
                .unwrap_or(Value::Null);
            print_json(
                json!({
                    "term": term.to_string(),
                    "summable": summable,
                    "normal_form": {
                        "z": nf.z.to_string(),
                        "a": poly_strings(&nf.a),
                        "b": poly_strings(&nf.b),
                        "c": poly_strings(&nf.c),
                    },
                    "certificate": cert_json,
                    "antidifference": anti_string.map(Value::String).unwrap_or(Value::Null),
                    "sum": sum_json,
                }),
                out,
            );
        }
    }
    Ok(if summable { 0 } else { 2 })
}

// ---------------------------------------------------------------------------
// corrections
// ---------------------------------------------------------------------------

fn cmd_corrections(
    family: FamilyArg,
    a: Option<&str>,
    z: Option<&str>,
    dmax: usize,
    format: Format,
    out: &mut String,
) -> Result<i32, String> {
    let (sequence, a_json, z_json) = match family {
        FamilyArg::Bell => {
            if a.is_some() || z.is_some() {
                return Err("family bell takes no --a or --z".to_string());
            }
            (bell_numbers(dmax), Value::Null, Value::Null)
        }
        FamilyArg::F | FamilyArg::G => {
            let a_src = a.ok_or("families f and g require --a")?;
            let z_src = z.ok_or("families f and g require --z")?;
            let a_val = parse_rat(a_src).map_err(|e| format!("invalid --a: {e}"))?;
            let z_val = parse_rat(z_src).map_err(|e| format!("invalid --z: {e}"))?;
            let seq: CorrectionSequence = match family {
                FamilyArg::F => f_correction(a_val.clone(), z_val.clone(), dmax)?,
                _ => g_correction(a_val.clone(), z_val.clone(), dmax)?,
            };
            (
                seq,
                Value::String(a_val.to_string()),
                Value::String(z_val.to_string()),
            )
        }
    };

    match format {
        Format::Text => {
            match (&a_json, &z_json) {
                (Value::String(a_str), Value::String(z_str)) => {
                    line!(out, "family: {} (a = {}, z = {})", sequence.family.name(), a_str, z_str);
                }
                _ => line!(out, "family: {}", sequence.family.name()),
            }
            for (d, value) in sequence.values.iter().enumerate() {
                line!(out, "d = {d}: {value}");
            }
        }
        Format::Json => {
            let values: Vec<String> = sequence.values.iter().map(Rat::to_string).collect();
            print_json(
                json!({
                    "family": sequence.family.name(),
                    "a": a_json,
                    "z": z_json,
                    "dmax": dmax,
                    "values": values,
                }),
                out,
            );
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

enum TableData {
    Rows(Vec<Vec<Rat>>),
    Values(Vec<Rat>),
}

fn cmd_tables(which: Which, dmax: usize, format: Format, out: &mut String) -> Result<i32, String> {
    if dmax < 1 {
        return Err("--dmax must be at least 1".to_string());
    }
    let (name, data) = match which {
        Which::A => ("A", TableData::Rows(build_a(dmax).rows().to_vec())),
        Which::B => ("B", TableData::Rows(build_b(dmax).rows().to_vec())),
        Which::A121207 => ("a121207", TableData::Rows(a121207_table(dmax))),
        Which::Gould => ("gould", TableData::Values(gould_numbers(dmax))),
    };

    match format {
        Format::Text => match &data {
            TableData::Rows(rows) => line!(out, "{}", render_matrix(rows)),
            TableData::Values(values) => {
                let items: Vec<String> = values.iter().map(Rat::to_string).collect();
                line!(out, "{}", items.join(", "));
            }
        },
        Format::Json => {
            let mut object = json!({"which": name, "dmax": dmax});
            match &data {
                TableData::Rows(rows) => {
                    let rendered: Vec<Vec<String>> = rows
                        .iter()
                        .map(|row| row.iter().map(Rat::to_string).collect())
                        .collect();
                    object["rows"] = json!(rendered);
                }
                TableData::Values(values) => {
                    let rendered: Vec<String> = values.iter().map(Rat::to_string).collect();
                    object["values"] = json!(rendered);
                }
            }
            print_json(object, out);
        }
    }
    Ok(0)
}

/// Right-align each column so the triangle reads like a printed table.
fn render_matrix(rows: &[Vec<Rat>]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|row| row.iter().map(Rat::to_string).collect())
        .collect();
    let ncols = cells.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; ncols];
    for row in &cells {
        for (j, cell) in row.iter().enumerate() {
            widths[j] = widths[j].max(cell.len());
        }
    }
    cells
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(j, cell)| format!("{cell:>width$}", width = widths[j]))
                .collect::<Vec<_>>()
                .join("  ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

// ---------------------------------------------------------------------------
// verify-paper
// ---------------------------------------------------------------------------

fn cmd_verify(format: Format, out: &mut String) -> i32 {
    let mut entries = Vec::new();
    let mut passed = 0usize;
    let mut failed = 0usize;
    for item in catalog() {
        let result = (item.run)();
        if result.pass {
            passed += 1;
        } else {
            failed += 1;
        }
        match format {
            Format::Text => {
                if result.pass {
                    line!(out, "PASS {}", item.id);
                } else {
                    line!(out, "FAIL {}: lhs = {}, rhs = {}", item.id, result.lhs, result.rhs);
                }
            }
            Format::Json => entries.push(json!({
                "id": item.id,
                "status": if result.pass { "pass" } else { "fail" },
                "lhs": result.lhs,
                "rhs": result.rhs,
            })),
        }
    }
    match format {
        Format::Text => line!(out, "{passed} passed, {failed} failed"),
        Format::Json => print_json(Value::Array(entries), out),
    }
    if failed == 0 {
        0
    } else {
        1
    }
}

fn print_json(value: Value, out: &mut String) {
    line!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"));
}
