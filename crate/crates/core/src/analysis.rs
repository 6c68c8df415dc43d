//! Connectivity, canonical labeling, and small-circuit structure.

use crate::matroid::Matroid;
use crate::set::ElementSet;

/// The connectivity function: `lambda(X) = r(X) + r(E - X) - r(M)`.
/// Non-negative for every subset of a valid matroid.
pub fn lambda(m: &Matroid, x: ElementSet) -> usize {
    let full = m.ground_set().0;
    let x = x.0 & full;
    (m.rank_bits(x) + m.rank_bits(full & !x) - m.rank_bits(full)) as usize
}

/// A `j`-separation is a partition (X, Y) with both sides of size at least
/// `j` and `lambda(X) <= j - 1`.
fn has_j_separation(m: &Matroid, j: usize) -> bool {
    let n = m.ground_size();
    if n < 2 * j {
        return false;
    }
    // Fixing the top element on the Y side halves the scan.
    let size = 1u32 << (n - 1);
    for x in 1..size {
        let k = x.count_ones() as usize;
        if k < j || n - k < j {
            continue;
        }
        if lambda(m, ElementSet(x)) <= j - 1 {
            return true;
        }
    }
    false
}

/// Tutte connectivity: `M` is k-connected iff it has no j-separation for any
/// j < k. Supported for k = 2 (connected) and k = 3. The scan over
/// partitions is exhaustive; matroids too small to admit a legal partition
/// qualify vacuously.
pub fn is_k_connected(m: &Matroid, k: usize) -> bool {
    debug_assert!(k == 2 || k == 3);
    (1..k).all(|j| !has_j_separation(m, j))
}

pub fn is_connected(m: &Matroid) -> bool {
    is_k_connected(m, 2)
}

pub fn is_three_connected(m: &Matroid) -> bool {
    is_k_connected(m, 3)
}

/// All 3-element circuits.
pub fn triangles(m: &Matroid) -> Vec<ElementSet> {
    m.circuits().into_iter().filter(|c| c.len() == 3).collect()
}

/// All 3-element cocircuits.
pub fn triads(m: &Matroid) -> Vec<ElementSet> {
    m.cocircuits().into_iter().filter(|c| c.len() == 3).collect()
}

/// The sets `E_d` and `E_c` of elements whose single-element deletion,
/// respectively contraction, leaves the matroid 3-connected.
pub fn removable(m: &Matroid) -> (ElementSet, ElementSet) {
    let mut deletable = ElementSet::EMPTY;
    let mut contractible = ElementSet::EMPTY;
    for e in 0..m.ground_size() {
        let s = ElementSet::singleton(e);
        if is_three_connected(&m.delete(s).expect("in range")) {
            deletable = deletable.with(e);
        }
        if is_three_connected(&m.contract(s).expect("in range")) {
            contractible = contractible.with(e);
        }
    }
    (deletable, contractible)
}

/// Canonical form of a matroid: the lexicographically minimal sorted
/// sequence of basis bitmasks over all relabelings of the ground set.
/// Isomorphic matroids yield equal forms, and equal forms reconstruct
/// isomorphic matroids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub ground_size: usize,
    pub rank: usize,
    pub bases: Vec<u32>,
}

impl CanonicalForm {
    /// Rebuilds a matroid in canonical labeling.
    pub fn to_matroid(&self) -> Matroid {
        if self.ground_size == 0 {
            return Matroid::from_rank_table_unchecked(0, vec![0]);
        }
        let bases: Vec<ElementSet> = self.bases.iter().map(|&b| ElementSet(b)).collect();
        Matroid::from_bases(self.ground_size, &bases)
            .expect("canonical bases always form a matroid")
    }
}

/// Partition of the elements into clone classes: two elements are clones
/// when swapping them is an automorphism. Loops are mutual clones, as are
/// parallel elements; the full test also merges indistinguishable elements
/// of higher rank, which collapses the search tree on symmetric matroids.
fn clone_classes(m: &Matroid) -> Vec<ElementSet> {
    let n = m.ground_size();
    let size = 1u32 << n;
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<ElementSet> = Vec::new();
    for e in 0..n {
        if class_of[e].is_some() {
            continue;
        }
        let idx = classes.len();
        class_of[e] = Some(idx);
        let mut class = ElementSet::singleton(e);
        'next: for f in e + 1..n {
            if class_of[f].is_some() {
                continue;
            }
            let (be, bf) = (1u32 << e, 1u32 << f);
            for a in 0..size {
                if a & (be | bf) != 0 {
                    continue;
                }
                if m.rank_bits(a | be) != m.rank_bits(a | bf) {
                    continue 'next;
                }
            }
            class_of[f] = Some(idx);
            class = class.with(f);
        }
        classes.push(class);
    }
    classes
}

struct CanonSearch<'a> {
    m: &'a Matroid,
    n: usize,
    rank: usize,
    total_bases: usize,
    /// class id per source element, for clone pruning
    class_of: Vec<usize>,
    /// best full sequence found so far
    best: Vec<u32>,
    have_best: bool,
}

impl CanonSearch<'_> {
    /// Basis masks within the new block at this depth: masks over the
    /// assigned prefix `0..depth` that contain the newest label `depth - 1`,
    /// in increasing order. `src_bits[i]` is the source bit of new label i.
    fn block(&self, src_bits: &[u32], depth: usize) -> Vec<u32> {
        let r = self.rank;
        if r == 0 || r > depth {
            return Vec::new();
        }
        let newest = 1u32 << (depth - 1);
        let newest_src = src_bits[depth - 1];
        let k = depth - 1;
        let want = r - 1;
        let mut out = Vec::new();
        // Gosper's hack over `want`-subsets of the k earlier labels.
        let mut s: u32 = if want == 0 { 0 } else { (1 << want) - 1 };
        loop {
            if want > k {
                break;
            }
            if want != 0 && s >= 1u32 << k {
                break;
            }
            let mut src = newest_src;
            let mut rest = s;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                src |= src_bits[i];
            }
            if self.m.rank_bits(src) as usize == r {
                out.push(newest | s);
            }
            if want == 0 {
                break;
            }
            let c = s & s.wrapping_neg();
            let r_ = s + c;
            s = (((r_ ^ s) >> 2) / c) | r_;
        }
        out
    }

    /// Compares the block against the incumbent at sequence position
    /// `start`, assuming the incumbent agrees with the current path on
    /// everything before `start`. Returns None when the incumbent is
    /// strictly better (prune), Some(true) when this branch is strictly
    /// better, Some(false) on an exact tie over the block's range.
    fn compare(&self, block: &[u32], start: usize, depth: usize) -> Option<bool> {
        if !self.have_best {
            return Some(true);
        }
        let limit = 1u32 << depth;
        for (i, &mask) in block.iter().enumerate() {
            match self.best.get(start + i) {
                None => return Some(true),
                Some(&b) if mask < b => return Some(true),
                Some(&b) if mask > b => return None,
                _ => {}
            }
        }
        // Tie on the block; if the incumbent has further masks inside this
        // depth's range, it is strictly smaller.
        match self.best.get(start + block.len()) {
            Some(&b) if b < limit => None,
            _ => Some(false),
        }
    }

    fn descend(&mut self, src_bits: &mut Vec<u32>, used: u32, seq: &mut Vec<u32>) {
        let depth = src_bits.len();
        if depth == self.n {
            // Every surviving path ties or beats the incumbent, so the
            // complete sequence can only improve it.
            self.best.clear();
            self.best.extend_from_slice(seq);
            self.have_best = true;
            return;
        }
        // Candidate preimages for the next label: one representative per
        // clone class among the unused elements.
        let mut seen_class = 0u32;
        let mut candidates: Vec<(Vec<u32>, usize)> = Vec::new();
        for e in 0..self.n {
            if used & (1 << e) != 0 || seen_class & (1 << self.class_of[e]) != 0 {
                continue;
            }
            seen_class |= 1 << self.class_of[e];
            src_bits.push(1 << e);
            let block = self.block(src_bits, depth + 1);
            src_bits.pop();
            candidates.push((block, e));
        }
        // Promising candidates first: shorter blocks pad with +infinity.
        candidates.sort_by(|a, b| {
            let pad = u32::MAX;
            let len = a.0.len().max(b.0.len());
            for i in 0..len {
                let (x, y) = (*a.0.get(i).unwrap_or(&pad), *b.0.get(i).unwrap_or(&pad));
                if x != y {
                    return x.cmp(&y);
                }
            }
            std::cmp::Ordering::Equal
        });
        for (block, e) in candidates {
            match self.compare(&block, seq.len(), depth + 1) {
                None => continue,
                Some(true) => {
                    // Strictly better prefix: the old incumbent is dead.
                    // Pre-empt it with this prefix padded by sentinels so
                    // that deeper comparisons keep refining it.
                    self.best.clear();
                    self.best.extend_from_slice(seq);
                    self.best.extend_from_slice(&block);
                    self.best.resize(self.total_bases, u32::MAX);
                    self.have_best = true;
                }
                Some(false) => {}
            }
            src_bits.push(1 << e);
            let start = seq.len();
            seq.extend_from_slice(&block);
            self.descend(src_bits, used | (1 << e), seq);
            seq.truncate(start);
            src_bits.pop();
        }
    }
}

/// Computes the canonical form by branch-and-bound over relabelings, pruned
/// by clone classes and block-wise comparison with the incumbent.
pub fn canonical_form(m: &Matroid) -> CanonicalForm {
    let n = m.ground_size();
    let rank = m.full_rank();
    if n == 0 || rank == 0 {
        // All rank-0 matroids on n elements are isomorphic; the empty set is
        // the unique basis.
        return CanonicalForm { ground_size: n, rank: 0, bases: vec![0] };
    }
    let classes = clone_classes(m);
    let mut class_of = vec![0usize; n];
    for (i, class) in classes.iter().enumerate() {
        for e in class.iter() {
            class_of[e] = i;
        }
    }
    let mut search = CanonSearch {
        m,
        n,
        rank,
        total_bases: m.basis_count(),
        class_of,
        best: Vec::new(),
        have_best: false,
    };
    search.descend(&mut Vec::new(), 0, &mut Vec::new());
    debug_assert_eq!(search.best.len(), search.total_bases);
    CanonicalForm { ground_size: n, rank, bases: search.best }
}

/// Cheap isomorphism invariants checked before canonical labeling.
fn invariants(m: &Matroid) -> (usize, usize, usize, usize, Vec<usize>) {
    (
        m.ground_size(),
        m.full_rank(),
        m.basis_count(),
        m.loops().len(),
        m.parallel_class_profile(),
    )
}

pub fn are_isomorphic(a: &Matroid, b: &Matroid) -> bool {
    if invariants(a) != invariants(b) {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, Named};
    use crate::transforms::direct_sum;

    /// O(n!) oracle: tries every permutation of the ground set.
    fn brute_force_isomorphic(a: &Matroid, b: &Matroid) -> bool {
        let n = a.ground_size();
        if n != b.ground_size() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |p| {
            let size = 1u32 << n;
            (0..size).all(|s| {
                let mut mapped = 0u32;
                for e in ElementSet(s).iter() {
                    mapped |= 1 << p[e];
                }
                a.rank_bits(s) == b.rank_bits(mapped)
            })
        })
    }

    fn permute(perm: &mut Vec<usize>, k: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if k == perm.len() {
            return check(perm);
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            if permute(perm, k + 1, check) {
                perm.swap(k, i);
                return true;
            }
            perm.swap(k, i);
        }
        false
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_three_connected(&catalog::uniform(2, 6).unwrap()));

        let two_lines = direct_sum(
            &catalog::uniform(1, 3).unwrap(),
            &catalog::uniform(1, 3).unwrap(),
        )
        .unwrap();
        assert!(!is_three_connected(&two_lines));
        assert!(!is_connected(&two_lines));

        // Small-case conventions: on 3 or fewer elements no partition has
        // two elements on each side, so only 1-separations can disqualify.
        assert!(is_three_connected(&catalog::uniform(2, 3).unwrap()));
        assert!(is_three_connected(&catalog::uniform(1, 2).unwrap()));
        assert!(is_three_connected(&catalog::uniform(1, 3).unwrap()));
        assert!(!is_three_connected(&catalog::uniform(1, 4).unwrap()));
        assert!(!is_three_connected(&catalog::uniform(2, 2).unwrap()));
    }

    #[test]
    fn lambda_is_symmetric() {
        let m = catalog::named(Named::O7).unwrap();
        for x in 0..1u32 << 7 {
            let s = ElementSet(x);
            assert_eq!(lambda(&m, s), lambda(&m, s.complement(7)));
        }
    }

    #[test]
    fn canonical_form_identifies_isomorphs() {
        let u24 = catalog::uniform(2, 4).unwrap();
        assert!(are_isomorphic(&u24, &u24.dual()));

        let w4 = catalog::named(Named::MW4).unwrap();
        assert!(are_isomorphic(&w4, &w4.dual()));

        let p7 = catalog::named(Named::P7).unwrap();
        let p7m = catalog::named(Named::P7Minus).unwrap();
        assert!(!are_isomorphic(&p7, &p7m));
    }

    #[test]
    fn canonical_form_round_trips() {
        for which in [Named::P7, Named::O7, Named::MW3, Named::F7] {
            let m = catalog::named(which).unwrap();
            let form = canonical_form(&m);
            let rebuilt = form.to_matroid();
            assert!(are_isomorphic(&m, &rebuilt));
            assert_eq!(canonical_form(&rebuilt), form);
        }
    }

    #[test]
    fn agrees_with_brute_force_oracle_up_to_six_elements() {
        let mut small: Vec<Matroid> = vec![
            catalog::uniform(0, 0).unwrap(),
            catalog::uniform(1, 2).unwrap(),
            catalog::uniform(2, 4).unwrap(),
            catalog::uniform(2, 5).unwrap(),
            catalog::uniform(3, 6).unwrap(),
            catalog::named(Named::MW3).unwrap(),
            catalog::named(Named::W3).unwrap(),
            catalog::doubled_uniform(2, 3).unwrap(),
            direct_sum(&catalog::uniform(1, 3).unwrap(), &catalog::uniform(1, 3).unwrap())
                .unwrap(),
            direct_sum(&catalog::uniform(2, 4).unwrap(), &catalog::uniform(0, 1).unwrap())
                .unwrap(),
        ];
        // A relabeled copy of each, by moving element 0 to the top.
        let relabeled: Vec<Matroid> = small
            .iter()
            .map(|m| {
                let n = m.ground_size();
                if n == 0 {
                    return m.clone();
                }
                let size = 1u32 << n;
                let remap = |s: u32| (s >> 1) | ((s & 1) << (n - 1));
                let mut table = vec![0u8; size as usize];
                for s in 0..size {
                    table[remap(s) as usize] = m.rank_bits(s) as u8;
                }
                Matroid::from_rank_table(n, table).unwrap()
            })
            .collect();
        small.extend(relabeled);

        for a in &small {
            for b in &small {
                if a.ground_size() > 6 || b.ground_size() > 6 {
                    continue;
                }
                assert_eq!(
                    are_isomorphic(a, b),
                    brute_force_isomorphic(a, b),
                    "{a:?} vs {b:?}"
                );
            }
        }
    }

    #[test]
    fn triangle_structure_of_wheel() {
        let w4 = catalog::named(Named::MW4).unwrap();
        let (e_d, e_c) = removable(&w4);
        assert!(e_d.is_empty());
        assert!(e_c.is_empty());

        let u26 = catalog::uniform(2, 6).unwrap();
        let (e_d, _) = removable(&u26);
        assert_eq!(e_d, ElementSet::full(6));

        let p8 = catalog::named(Named::P8).unwrap();
        let (e_d, e_c) = removable(&p8);
        assert_eq!(e_d, ElementSet::full(8));
        assert_eq!(e_c, ElementSet::full(8));
    }

    #[test]
    fn triads_are_dual_triangles() {
        let m = catalog::named(Named::O7).unwrap();
        assert_eq!(triads(&m), triangles(&m.dual()));
    }
}
