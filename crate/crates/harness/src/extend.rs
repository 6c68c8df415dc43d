//! Single-element extensions via modular-cut enumeration.
//!
//! An extension of M by one element corresponds to a modular cut: a family
//! of flats that is closed upward and closed under intersections of modular
//! pairs (pairs with r(F1) + r(F2) = r(F1 ∪ F2) + r(F1 ∩ F2)). The empty
//! cut adds a coloop; the cut of all flats adds a loop.

use spikelab_core::{ElementSet, Error, Matroid};

use crate::error::Result;

/// Bitset over flat indices; ground sets of 8 elements have at most 256
/// flats.
#[derive(Clone, Copy, PartialEq, Eq, Default)]
struct FlatSet([u64; 4]);

impl FlatSet {
    fn contains(&self, i: usize) -> bool {
        self.0[i >> 6] & (1 << (i & 63)) != 0
    }

    fn insert(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }

    fn intersects(&self, other: &FlatSet) -> bool {
        self.0.iter().zip(other.0).any(|(a, b)| a & b != 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            let mut rest = bits;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some((w << 6) | b)
                }
            })
        })
    }
}

struct FlatLattice {
    /// flat index for each flat bitmask, u16::MAX elsewhere
    index_of: Vec<u16>,
    /// flats[i] and flats[j] form a modular pair
    modular: Vec<FlatSet>,
    /// index of the flat flats[i] & flats[j]
    meet: Vec<Vec<u16>>,
    /// flats strictly above flats[i]
    above: Vec<FlatSet>,
    count: usize,
}

fn build_lattice(m: &Matroid) -> FlatLattice {
    // Order flats by decreasing rank so that up-closure only looks at
    // already-decided indices during the cut search.
    let mut flats: Vec<u32> = m.all_flats().iter().map(|f| f.bits()).collect();
    flats.sort_by_key(|&f| (std::cmp::Reverse(m.rank_table()[f as usize]), f));
    let count = flats.len();
    let mut index_of = vec![u16::MAX; 1 << m.ground_size()];
    for (i, &f) in flats.iter().enumerate() {
        index_of[f as usize] = i as u16;
    }

    let mut modular = vec![FlatSet::default(); count];
    let mut meet = vec![vec![0u16; count]; count];
    let mut above = vec![FlatSet::default(); count];
    let t = m.rank_table();
    for i in 0..count {
        for j in 0..count {
            if i != j && flats[i] & flats[j] == flats[i] {
                above[i].insert(j);
            }
            let (fi, fj) = (flats[i], flats[j]);
            meet[i][j] = index_of[(fi & fj) as usize];
            if t[fi as usize] as usize + t[fj as usize] as usize
                == t[(fi | fj) as usize] as usize + t[(fi & fj) as usize] as usize
            {
                modular[i].insert(j);
            }
        }
    }
    FlatLattice { index_of, modular, meet, above, count }
}

/// Closes `cut` after inserting flat `seed`: upward closure plus modular
/// intersections, failing fast when a flat from `out` is forced.
fn close_with(lattice: &FlatLattice, mut cut: FlatSet, seed: usize, out: &FlatSet) -> Option<FlatSet> {
    let mut work = vec![seed];
    cut.insert(seed);
    while let Some(i) = work.pop() {
        if out.contains(i) {
            return None;
        }
        for j in lattice.above[i].iter() {
            if !cut.contains(j) {
                cut.insert(j);
                work.push(j);
            }
        }
        let mods = lattice.modular[i];
        for j in cut.iter().collect::<Vec<_>>() {
            if mods.contains(j) {
                let k = lattice.meet[i][j] as usize;
                if !cut.contains(k) {
                    cut.insert(k);
                    work.push(k);
                }
            }
        }
    }
    if cut.intersects(out) {
        None
    } else {
        Some(cut)
    }
}

fn enumerate_cuts(lattice: &FlatLattice) -> Vec<FlatSet> {
    let count = lattice.count;
    let mut cuts = Vec::new();
    let mut stack = vec![(0usize, FlatSet::default(), FlatSet::default())];
    while let Some((mut idx, cut, out)) = stack.pop() {
        while idx < count && (cut.contains(idx) || out.contains(idx)) {
            idx += 1;
        }
        if idx == count {
            cuts.push(cut);
            continue;
        }
        let mut excluded = out;
        excluded.insert(idx);
        stack.push((idx + 1, cut, excluded));
        if let Some(closed) = close_with(lattice, cut, idx, &out) {
            stack.push((idx + 1, closed, out));
        }
    }
    cuts
}

/// All single-element extensions of `m`, one per modular cut, each
/// validated. The new element is appended after the existing ground set.
pub fn single_element_extensions(m: &Matroid) -> Result<Vec<Matroid>> {
    let n = m.ground_size();
    if n > 8 {
        return Err(Error::CapacityGuard { size: n, max: 8 }.into());
    }
    let lattice = build_lattice(m);
    let cuts = enumerate_cuts(&lattice);

    // Flat index of every subset's closure, for O(1) cut membership below.
    let size = 1usize << n;
    let mut closure_flat = vec![0u16; size];
    for s in 0..size as u32 {
        let cl = m.closure(ElementSet(s)).expect("in range").bits();
        closure_flat[s as usize] = lattice.index_of[cl as usize];
    }

    let mut out = Vec::with_capacity(cuts.len());
    for cut in cuts {
        let mut table = vec![0u8; size << 1];
        for s in 0..size {
            let r = m.rank_table()[s];
            table[s] = r;
            table[s | size] = if cut.contains(closure_flat[s] as usize) { r } else { r + 1 };
        }
        out.push(Matroid::from_rank_table(n + 1, table).map_err(spikelab_core::Error::from)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use spikelab_core::analysis::canonical_form;
    use spikelab_core::catalog;
    use std::collections::BTreeSet;

    /// Brute-force oracle: every valid rank table on n+1 elements whose
    /// restriction to the first n elements equals `m`. Enumerated through
    /// basis families, which is feasible for tiny ground sets.
    fn brute_force_extensions(m: &Matroid) -> BTreeSet<Vec<u8>> {
        let n = m.ground_size() + 1;
        let mut found = BTreeSet::new();
        for r in 0..=n {
            let ksets: Vec<ElementSet> = (0u32..1 << n)
                .filter(|s| s.count_ones() as usize == r)
                .map(ElementSet)
                .collect();
            for picks in 1u64..1 << ksets.len() {
                let family: Vec<ElementSet> = ksets
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| picks >> i & 1 == 1)
                    .map(|(_, &b)| b)
                    .collect();
                let Ok(candidate) = Matroid::from_bases(n, &family) else {
                    continue;
                };
                let restricted = candidate
                    .delete(ElementSet::singleton(n - 1))
                    .expect("in range");
                if restricted == *m {
                    found.insert(candidate.rank_table().to_vec());
                }
            }
        }
        found
    }

    #[test]
    fn extensions_match_brute_force_on_tiny_matroids() {
        for m in [
            catalog::uniform(0, 0).unwrap(),
            catalog::uniform(1, 1).unwrap(),
            catalog::uniform(0, 1).unwrap(),
            catalog::uniform(1, 2).unwrap(),
            catalog::uniform(2, 3).unwrap(),
            catalog::uniform(2, 2).unwrap(),
            catalog::doubled_uniform(1, 1).unwrap(),
        ] {
            let by_cuts: BTreeSet<Vec<u8>> = single_element_extensions(&m)
                .unwrap()
                .iter()
                .map(|e| e.rank_table().to_vec())
                .collect();
            assert_eq!(by_cuts, brute_force_extensions(&m), "{m:?}");
        }
    }

    #[test]
    fn extensions_of_u23_contain_the_expected_kinds() {
        let u23 = catalog::uniform(2, 3).unwrap();
        let exts = single_element_extensions(&u23).unwrap();
        let forms: BTreeSet<_> = exts.iter().map(canonical_form).collect();
        assert!(forms.contains(&canonical_form(&catalog::uniform(2, 4).unwrap())));
        // Parallel extension, loop extension, and the rank-3 coloop-like
        // free extension.
        assert!(exts.iter().any(|e| e.parallel_class_profile() == vec![2, 1, 1]));
        assert!(exts.iter().any(|e| e.loops().len() == 1));
        assert!(exts.iter().any(|e| e.full_rank() == 3));
    }

    #[test]
    fn every_extension_restricts_back() {
        let m = catalog::named(catalog::Named::MW3).unwrap();
        for ext in single_element_extensions(&m).unwrap() {
            let back = ext.delete(ElementSet::singleton(m.ground_size())).unwrap();
            assert_eq!(back, m);
        }
    }
}
