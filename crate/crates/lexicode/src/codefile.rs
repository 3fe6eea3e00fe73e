//! Canonical text format for codes and basis files.
//!
//! A code file holds one codeword per line as an n-character binary string;
//! `#`-prefixed lines are comments (the writer emits the tool version and the
//! construction parameters there) and blank lines are ignored. The length is
//! implied by the first codeword line and must be consistent throughout. A
//! basis file uses the same line format, one basis vector per line.

use crate::code::Code;
use crate::word::Codeword;
use crate::{Error, Result};
use std::fs;
use std::io::Write;
use std::path::Path;

const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Render a code in canonical form, header lines included.
pub fn render_code(code: &Code) -> String {
    let mut out = String::new();
    out.push_str(&format!("# lexicode {TOOL_VERSION}\n"));
    match code.params() {
        Some(p) => {
            out.push_str(&format!("# n={} d={} ordering={}", p.n, p.d, p.ordering));
            if let Some(w) = p.constant_weight {
                out.push_str(&format!(" weight={w}"));
            }
            if p.self_orthogonal {
                out.push_str(" self-orthogonal");
            }
            out.push('\n');
        }
        None => out.push_str(&format!("# n={}\n", code.n())),
    }
    for w in code.iter() {
        out.push_str(&w.to_bitstring(code.n()));
        out.push('\n');
    }
    out
}

pub fn write_code(path: &Path, code: &Code) -> Result<()> {
    let mut file = fs::File::create(path)?;
    file.write_all(render_code(code).as_bytes())?;
    Ok(())
}

/// Parse codeword lines; `label` names the source in error messages.
pub fn parse_words(text: &str, label: &str) -> Result<(u32, Vec<Codeword>)> {
    let mut n: Option<u32> = None;
    let mut words = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fail = |reason: String| Error::CodeFileFormat {
            path: label.to_string(),
            line: line_no,
            reason,
        };
        if line.len() > 64 {
            return Err(fail(format!("codeword is {} characters, max is 64", line.len())));
        }
        if let Some(bad) = line.chars().find(|c| *c != '0' && *c != '1') {
            return Err(fail(format!("invalid character {bad:?}, expected 0 or 1")));
        }
        let len = line.len() as u32;
        match n {
            None => n = Some(len),
            Some(expect) if expect != len => {
                return Err(fail(format!(
                    "codeword has length {len}, expected {expect} from the first line"
                )));
            }
            _ => {}
        }
        let word = Codeword::from_bitstring(line).map_err(|e| fail(e.to_string()))?;
        if words.contains(&word) {
            return Err(fail(format!("duplicate codeword {line}")));
        }
        words.push(word);
    }
    let n = n.ok_or_else(|| Error::CodeFileFormat {
        path: label.to_string(),
        line: 0,
        reason: "no codewords found".to_string(),
    })?;
    Ok((n, words))
}

pub fn read_code(path: &Path) -> Result<Code> {
    let text = fs::read_to_string(path)?;
    let (n, words) = parse_words(&text, &path.display().to_string())?;
    Code::new(n, words)
}

/// Read an ordered basis for a length-n B-ordering: n lines of n-character
/// binary strings, comments and blank lines ignored.
pub fn read_basis(path: &Path, n: u32) -> Result<Vec<Codeword>> {
    let text = fs::read_to_string(path)?;
    let (width, words) = parse_words(&text, &path.display().to_string())?;
    if width != n || words.len() != n as usize {
        return Err(Error::BasisLengthMismatch {
            expected: n as usize,
            actual: if width != n { width as usize } else { words.len() },
        });
    }
    Ok(words)
}

/// Read a basis whose length is taken from the file itself; the row count
/// must equal the row width.
pub fn read_basis_auto(path: &Path) -> Result<Vec<Codeword>> {
    let text = fs::read_to_string(path)?;
    let (width, words) = parse_words(&text, &path.display().to_string())?;
    if words.len() != width as usize {
        return Err(Error::BasisLengthMismatch {
            expected: width as usize,
            actual: words.len(),
        });
    }
    Ok(words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::{greedy_construct, ConstructionParams};
    use crate::ordering::OrderingSpec;

    #[test]
    fn render_matches_canonical_form() {
        let params = ConstructionParams::new(3, 2, OrderingSpec::Lexicographic);
        let code = greedy_construct(&params).unwrap();
        let text = render_code(&code);
        let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(body, ["000", "011", "101", "110"]);
        assert!(text.lines().next().unwrap().starts_with("# lexicode "));
        assert!(text.contains("# n=3 d=2 ordering=lex"));
    }

    #[test]
    fn parse_round_trip() {
        let params = ConstructionParams::new(5, 2, OrderingSpec::Gray);
        let code = greedy_construct(&params).unwrap();
        let (n, words) = parse_words(&render_code(&code), "test").unwrap();
        assert_eq!(n, 5);
        assert_eq!(words, code.words());
    }

    #[test]
    fn parse_skips_comments_and_blanks() {
        let (n, words) = parse_words("# header\n\n01\n# mid\n10\n", "test").unwrap();
        assert_eq!(n, 2);
        assert_eq!(words.len(), 2);
    }

    #[test]
    fn parse_names_offending_line() {
        let err = parse_words("000\n0x0\n", "bad.code").unwrap_err();
        assert!(matches!(err, Error::CodeFileFormat { line: 2, .. }), "{err}");

        let err = parse_words("000\n11\n", "bad.code").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("bad.code:2"), "{msg}");
        assert!(msg.contains("length 2"), "{msg}");

        let err = parse_words("01\n01\n", "bad.code").unwrap_err();
        assert!(matches!(err, Error::CodeFileFormat { line: 2, .. }), "{err}");

        assert!(parse_words("# only comments\n", "bad.code").is_err());
    }

    #[test]
    fn basis_reading_checks_shape() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("basis.txt");
        fs::write(&path, "# standard basis\n001\n010\n100\n").unwrap();
        let basis = read_basis(&path, 3).unwrap();
        assert_eq!(basis.len(), 3);
        assert_eq!(basis[0], Codeword::new(1));
        assert!(read_basis(&path, 4).is_err());
    }
}
