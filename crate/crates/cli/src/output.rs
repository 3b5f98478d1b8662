//! `compute`, `export` and `import`.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::Path;

use polyseq::coeffs::{to_binomial_int, Basis};
use polyseq::export::{json_record, read_jsonl, write_bfile, write_jsonl, Order};
use polyseq::pseq::expected_degree;
use polyseq::PSequence;

use crate::Format;

pub const EXIT_OK: u8 = 0;
pub const EXIT_REFUTED: u8 = 1;
pub const EXIT_IO: u8 = 3;

fn generate(n: usize) -> Result<PSequence, u8> {
    PSequence::generate(n).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_REFUTED
    })
}

fn render(seq: &PSequence, n: i64, basis: Basis) -> polyseq::Result<String> {
    let p = seq.get(n);
    Ok(match basis {
        Basis::Power => p.to_string(),
        Basis::Binomial => to_binomial_int(p, expected_degree(n))?.to_string(),
    })
}

fn write_rows(
    out: &mut impl Write,
    seq: &PSequence,
    rows: impl Iterator<Item = i64>,
    basis: Basis,
    format: Format,
    order: Option<Order>,
    labelled: bool,
) -> polyseq::Result<()> {
    let io = |e: io::Error| polyseq::Error::Io(e.to_string());
    match format {
        Format::Text => {
            for n in rows {
                let s = render(seq, n, basis)?;
                if labelled {
                    writeln!(out, "P_{n} = {s}").map_err(io)?;
                } else {
                    writeln!(out, "{s}").map_err(io)?;
                }
            }
        }
        Format::Json => {
            for n in rows {
                writeln!(out, "{}", json_record(seq, n, basis)?).map_err(io)?;
            }
        }
        Format::Bfile => write_bfile(out, seq, basis, order.expect("checked by the caller"))?,
    }
    out.flush().map_err(io)
}

pub fn compute(n: usize, single: bool, basis: Basis, format: Format, order: Option<Order>) -> u8 {
    let seq = match generate(n) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let first = if single { n as i64 } else { 1 };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match write_rows(&mut out, &seq, first..=n as i64, basis, format, order, !single) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_IO
        }
    }
}

pub fn export(n_max: usize, basis: Basis, format: Format, order: Option<Order>, path: Option<&Path>) -> u8 {
    let seq = match generate(n_max) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let result = match path {
        Some(path) => match File::create(path) {
            Ok(f) => {
                let mut w = BufWriter::new(f);
                match format {
                    Format::Json => write_jsonl(&mut w, &seq, basis),
                    _ => write_bfile(&mut w, &seq, basis, order.expect("checked by the caller")),
                }
                .and_then(|()| w.flush().map_err(|e| polyseq::Error::Io(e.to_string())))
            }
            Err(e) => Err(polyseq::Error::Io(e.to_string())),
        },
        None => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            write_rows(&mut out, &seq, 1..=n_max as i64, basis, format, order, false)
        }
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let target = path.map_or("<stdout>".to_string(), |p| p.display().to_string());
            eprintln!("error: {target}: {e}");
            EXIT_IO
        }
    }
}

pub fn import(path: &Path) -> u8 {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return EXIT_IO;
        }
    };
    let seq = match read_jsonl(BufReader::new(file)) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return EXIT_IO;
        }
    };
    let reference = match generate(seq.max_n()) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let mismatch = seq.iter().find(|(n, p)| reference.get(*n) != *p);
    match mismatch {
        None => {
            println!("read P_1..P_{}: identical to the recursion", seq.max_n());
            EXIT_OK
        }
        Some((n, p)) => {
            println!(
                "read P_1..P_{}: P_{n} = {p} differs from {}",
                seq.max_n(),
                reference.get(n)
            );
            EXIT_REFUTED
        }
    }
}
