//! Levelwise enumeration of all matroids up to isomorphism on small ground
//! sets, with cached predicate flags per record.

use rayon::prelude::*;

use spikelab_core::analysis::{canonical_form, is_connected, is_three_connected, CanonicalForm};
use spikelab_core::spike::{is_in_s3, is_spike_minor_excluded};
use spikelab_core::Matroid;

use crate::error::{Error, Result};
use crate::extend::single_element_extensions;
use crate::represent::{is_binary, is_ternary};

/// Matroid counts by ground-set size, n = 0..=8, from the published
/// enumeration of small matroids. A mismatch means the generator is broken,
/// and every catalog-dependent driver must refuse to run.
pub const PUBLISHED_COUNTS: [usize; 9] = [1, 2, 4, 8, 17, 38, 98, 306, 1724];

/// Hard ceiling for enumeration.
pub const MAX_CATALOG_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecordFlags {
    pub simple: bool,
    pub cosimple: bool,
    pub connected: bool,
    pub three_connected: bool,
    pub binary: bool,
    pub ternary: bool,
    pub in_s: bool,
    pub in_s3: bool,
}

impl RecordFlags {
    pub fn compute(m: &Matroid) -> RecordFlags {
        RecordFlags {
            simple: m.is_simple(),
            cosimple: m.is_cosimple(),
            connected: is_connected(m),
            three_connected: is_three_connected(m),
            binary: is_binary(m),
            ternary: is_ternary(m),
            in_s: is_spike_minor_excluded(m).in_class,
            in_s3: is_in_s3(m),
        }
    }

    /// Fixed-order flag word, one character per flag.
    pub fn word(&self) -> String {
        [
            self.simple,
            self.cosimple,
            self.connected,
            self.three_connected,
            self.binary,
            self.ternary,
            self.in_s,
            self.in_s3,
        ]
        .iter()
        .map(|&b| if b { '1' } else { '0' })
        .collect()
    }

    pub fn from_word(word: &str) -> Option<RecordFlags> {
        let bits: Vec<bool> = word
            .chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<bool>>>()?;
        if bits.len() != 8 {
            return None;
        }
        Some(RecordFlags {
            simple: bits[0],
            cosimple: bits[1],
            connected: bits[2],
            three_connected: bits[3],
            binary: bits[4],
            ternary: bits[5],
            in_s: bits[6],
            in_s3: bits[7],
        })
    }
}

#[derive(Debug, Clone)]
pub struct CatalogRecord {
    pub form: CanonicalForm,
    pub flags: RecordFlags,
}

/// Every matroid up to isomorphism on 0..=max_n elements, one level per
/// ground-set size, each level sorted by canonical form.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub levels: Vec<Vec<CatalogRecord>>,
}

impl Catalog {
    pub fn max_n(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level_counts(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn records(&self) -> impl Iterator<Item = &CatalogRecord> {
        self.levels.iter().flatten()
    }

    /// Validates the per-level counts against the published enumeration.
    pub fn check_counts(&self) -> Result<()> {
        for (level, records) in self.levels.iter().enumerate() {
            if records.len() != PUBLISHED_COUNTS[level] {
                return Err(Error::LevelCountMismatch {
                    level,
                    found: records.len(),
                    expected: PUBLISHED_COUNTS[level],
                });
            }
        }
        Ok(())
    }
}

/// Generates the catalog by iterated single-element extension: every
/// matroid on k+1 elements is an extension of one on k elements (the empty
/// modular cut supplies coloops), so levelwise extension plus canonical
/// deduplication is exhaustive. The per-level counts are checked against
/// the published enumeration and generation aborts on mismatch.
pub fn generate_catalog(max_n: usize) -> Result<Catalog> {
    if max_n > MAX_CATALOG_N {
        return Err(spikelab_core::Error::CapacityGuard { size: max_n, max: MAX_CATALOG_N }.into());
    }
    let empty = Matroid::from_bases(0, &[spikelab_core::ElementSet::EMPTY])
        .expect("empty matroid");
    let mut level_forms: Vec<Vec<CanonicalForm>> = vec![vec![canonical_form(&empty)]];
    for k in 0..max_n {
        let parents = &level_forms[k];
        let mut forms: Vec<CanonicalForm> = parents
            .par_iter()
            .map(|form| -> Result<Vec<CanonicalForm>> {
                let parent = form.to_matroid();
                let exts = single_element_extensions(&parent)?;
                Ok(exts.iter().map(canonical_form).collect())
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        forms.par_sort();
        forms.dedup();
        level_forms.push(forms);
    }

    let levels: Vec<Vec<CatalogRecord>> = level_forms
        .into_iter()
        .map(|forms| {
            forms
                .into_par_iter()
                .map(|form| {
                    let m = form.to_matroid();
                    CatalogRecord { form, flags: RecordFlags::compute(&m) }
                })
                .collect()
        })
        .collect();
    let catalog = Catalog { levels };
    catalog.check_counts()?;
    Ok(catalog)
}
