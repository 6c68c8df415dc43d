//! Catalog persistence and the matroid line format.
//!
//! Matroid line (bit-exact): `n r m b1 b2 … bm` where n is the ground size,
//! r the rank, m the basis count, and each b_i a lowercase-hex basis bitmask
//! (bit i is element i), sorted strictly ascending. Canonical files apply
//! the canonical form first. A catalog record line is a matroid line plus a
//! space and an 8-character flag word over {0,1} in the fixed order:
//! simple, cosimple, connected, threeConnected, binary, ternary, inS, inS3.

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use spikelab_core::analysis::CanonicalForm;
use spikelab_core::{ElementSet, Matroid};

use crate::enumerate::{Catalog, CatalogRecord, RecordFlags};
use crate::error::{Error, Result};

pub fn format_matroid_line(m: &Matroid) -> String {
    let bases = m.bases();
    let mut line = format!("{} {} {}", m.ground_size(), m.full_rank(), bases.len());
    for b in bases {
        line.push_str(&format!(" {:x}", b.bits()));
    }
    line
}

pub fn format_canonical_line(form: &CanonicalForm) -> String {
    let mut line = format!("{} {} {}", form.ground_size, form.rank, form.bases.len());
    for b in &form.bases {
        line.push_str(&format!(" {b:x}"));
    }
    line
}

pub fn format_record_line(record: &CatalogRecord) -> String {
    format!("{} {}", format_canonical_line(&record.form), record.flags.word())
}

fn parse_tokens(line_no: usize, line: &str) -> Result<(Matroid, Vec<String>)> {
    let fail = |message: String| Error::ParseFailure { line: line_no, message };
    let mut tokens = line.split_ascii_whitespace();
    let n: usize = tokens
        .next()
        .ok_or_else(|| fail("missing ground size".into()))?
        .parse()
        .map_err(|e| fail(format!("bad ground size: {e}")))?;
    let r: usize = tokens
        .next()
        .ok_or_else(|| fail("missing rank".into()))?
        .parse()
        .map_err(|e| fail(format!("bad rank: {e}")))?;
    let count: usize = tokens
        .next()
        .ok_or_else(|| fail("missing basis count".into()))?
        .parse()
        .map_err(|e| fail(format!("bad basis count: {e}")))?;
    let mut bases = Vec::with_capacity(count);
    let mut last: Option<u32> = None;
    for _ in 0..count {
        let tok = tokens.next().ok_or_else(|| fail("missing basis mask".into()))?;
        let bits = u32::from_str_radix(tok, 16).map_err(|e| fail(format!("bad mask: {e}")))?;
        if let Some(prev) = last {
            if bits <= prev {
                return Err(fail(format!("masks not strictly ascending at {tok}")));
            }
        }
        last = Some(bits);
        bases.push(ElementSet(bits));
    }
    let rest: Vec<String> = tokens.map(str::to_owned).collect();
    let matroid = if n == 0 {
        Matroid::from_bases(0, &[ElementSet::EMPTY]).expect("empty matroid")
    } else {
        Matroid::from_bases(n, &bases)?
    };
    if matroid.full_rank() != r {
        return Err(fail(format!("declared rank {r}, bases give {}", matroid.full_rank())));
    }
    Ok((matroid, rest))
}

pub fn parse_matroid_line(line_no: usize, line: &str) -> Result<Matroid> {
    let (m, rest) = parse_tokens(line_no, line)?;
    if !rest.is_empty() {
        return Err(Error::ParseFailure {
            line: line_no,
            message: format!("unexpected trailing tokens: {rest:?}"),
        });
    }
    Ok(m)
}

pub fn parse_record_line(line_no: usize, line: &str) -> Result<(Matroid, RecordFlags)> {
    let (m, rest) = parse_tokens(line_no, line)?;
    let [word] = rest.as_slice() else {
        return Err(Error::ParseFailure {
            line: line_no,
            message: format!("expected one flag word, got {rest:?}"),
        });
    };
    let flags = RecordFlags::from_word(word).ok_or_else(|| Error::ParseFailure {
        line: line_no,
        message: format!("bad flag word `{word}`"),
    })?;
    Ok((m, flags))
}

/// Reads the matroids of a file, one per line; blank lines are skipped.
pub fn read_matroid_file(path: &Path) -> Result<Vec<Matroid>> {
    let reader = BufReader::new(fs::File::open(path)?);
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse_matroid_line(i + 1, &line)?);
    }
    Ok(out)
}

fn level_path(dir: &Path, level: usize) -> std::path::PathBuf {
    dir.join(format!("level_{level}.cat"))
}

/// Writes one `level_<k>.cat` file per catalog level, one record per line
/// in canonical order.
pub fn write_catalog(dir: &Path, catalog: &Catalog) -> Result<()> {
    fs::create_dir_all(dir)?;
    for (level, records) in catalog.levels.iter().enumerate() {
        let mut file = fs::File::create(level_path(dir, level))?;
        for record in records {
            writeln!(file, "{}", format_record_line(record))?;
        }
    }
    Ok(())
}

/// Reads back a stored catalog: consecutive `level_<k>.cat` files starting
/// at level 0. Each line is revalidated through basis reconstruction and
/// its stored ground size must match its level.
pub fn read_catalog(dir: &Path) -> Result<Catalog> {
    let mut levels = Vec::new();
    for level in 0.. {
        let path = level_path(dir, level);
        if !path.exists() {
            break;
        }
        let reader = BufReader::new(fs::File::open(&path)?);
        let mut records = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let (m, flags) = parse_record_line(i + 1, &line)?;
            if m.ground_size() != level {
                return Err(Error::ParseFailure {
                    line: i + 1,
                    message: format!(
                        "matroid on {} elements in level-{level} file",
                        m.ground_size()
                    ),
                });
            }
            let form = CanonicalForm {
                ground_size: m.ground_size(),
                rank: m.full_rank(),
                bases: m.bases().iter().map(|b| b.bits()).collect(),
            };
            records.push(CatalogRecord { form, flags });
        }
        levels.push(records);
    }
    if levels.is_empty() {
        return Err(Error::ParseFailure {
            line: 0,
            message: format!("no level_<k>.cat files under {}", dir.display()),
        });
    }
    Ok(Catalog { levels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use spikelab_core::analysis::canonical_form;
    use spikelab_core::catalog;

    #[test]
    fn matroid_line_round_trip() {
        for m in [
            catalog::uniform(0, 0).unwrap(),
            catalog::uniform(2, 4).unwrap(),
            catalog::named(catalog::Named::P7).unwrap(),
            catalog::doubled_uniform(2, 3).unwrap(),
        ] {
            let line = format_matroid_line(&m);
            let back = parse_matroid_line(1, &line).unwrap();
            assert_eq!(back, m);
        }
    }

    #[test]
    fn matroid_line_is_bit_exact() {
        let u13 = catalog::uniform(1, 3).unwrap();
        assert_eq!(format_matroid_line(&u13), "3 1 3 1 2 4");
        let loops = catalog::uniform(0, 2).unwrap();
        assert_eq!(format_matroid_line(&loops), "2 0 1 0");
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(parse_matroid_line(1, "3 1").is_err());
        // Masks out of order.
        assert!(parse_matroid_line(1, "3 1 3 2 1 4").is_err());
        // Declared rank disagrees with bases.
        assert!(parse_matroid_line(1, "3 2 3 1 2 4").is_err());
        // Bases that fail exchange.
        assert!(parse_matroid_line(1, "4 2 2 3 c").is_err());
    }

    #[test]
    fn catalog_round_trip_through_directory() {
        let catalog = crate::enumerate::generate_catalog(4).unwrap();
        let dir = tempfile::tempdir().unwrap();
        write_catalog(dir.path(), &catalog).unwrap();
        let back = read_catalog(dir.path()).unwrap();
        assert_eq!(back.level_counts(), catalog.level_counts());
        for (a, b) in catalog.records().zip(back.records()) {
            assert_eq!(a.form, b.form);
            assert_eq!(a.flags, b.flags);
        }
        // Stored lines are canonical already.
        for record in back.records() {
            let m = record.form.to_matroid();
            assert_eq!(canonical_form(&m), record.form);
        }
    }
}
