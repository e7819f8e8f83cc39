//! OEIS b-file reading and writing: one `index value` pair per line,
//! 1-based contiguous indices, plain ASCII decimal, no padding.

use std::fs;
use std::path::Path;

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BFileError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("b-file is empty")]
    Empty,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub fn format_bfile(seq: &[BigUint]) -> String {
    let mut out = String::new();
    for (i, v) in seq.iter().enumerate() {
        out.push_str(&format!("{} {v}\n", i + 1));
    }
    out
}

fn decimal(tok: &str) -> Option<BigUint> {
    let ok = !tok.is_empty()
        && tok.bytes().all(|b| b.is_ascii_digit())
        && (tok == "0" || !tok.starts_with('0'));
    if ok {
        tok.parse().ok()
    } else {
        None
    }
}

pub fn parse_bfile(text: &str) -> Result<Vec<BigUint>, BFileError> {
    if text.is_empty() {
        return Err(BFileError::Empty);
    }
    if !text.ends_with('\n') {
        let line = text.lines().count();
        return Err(BFileError::Parse {
            line,
            msg: "missing final newline".into(),
        });
    }
    let mut out = Vec::new();
    for (i, raw) in text.split_terminator('\n').enumerate() {
        let line = i + 1;
        let err = |msg: &str| BFileError::Parse {
            line,
            msg: msg.into(),
        };
        let (idx, val) = raw
            .split_once(' ')
            .ok_or_else(|| err("expected `index value`"))?;
        let idx = decimal(idx).ok_or_else(|| err("malformed index"))?;
        if idx != BigUint::from(line) {
            return Err(err(&format!("index {idx}, expected {line}")));
        }
        out.push(decimal(val).ok_or_else(|| err("malformed value"))?);
    }
    Ok(out)
}

pub fn write_bfile(seq: &[BigUint], path: &Path) -> Result<(), BFileError> {
    if seq.is_empty() {
        return Err(BFileError::Empty);
    }
    fs::write(path, format_bfile(seq))?;
    Ok(())
}

pub fn read_bfile(path: &Path) -> Result<Vec<BigUint>, BFileError> {
    parse_bfile(&fs::read_to_string(path)?)
}
