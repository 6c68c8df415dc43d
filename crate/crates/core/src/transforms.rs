//! Minor-taking and construction transforms.
//!
//! All transforms are pure: they take immutable matroids and return new ones.
//! Minors renumber the surviving elements densely and report the
//! renumbering through a witness map; nothing downstream depends on stable
//! labels.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{ElementSet, CAPACITY};

/// Witness that a matroid was obtained as a minor: which elements of the
/// source were contracted and deleted, and how result elements map back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub contracted: ElementSet,
    pub deleted: ElementSet,
    /// `element_map[i]` is the source element that became result element `i`.
    /// The map is increasing.
    pub element_map: Vec<usize>,
}

impl Matroid {
    fn check_set(&self, set: ElementSet) -> Result<()> {
        if set.is_subset_of(self.ground_set()) {
            Ok(())
        } else {
            Err(Error::OutOfRangeElement { set, ground_size: self.ground_size() })
        }
    }

    /// Builds the minor rank table over the kept elements (in increasing
    /// source order) where the rank of a kept-subset `S` is
    /// `r(S ∪ contracted) - r(contracted)`.
    fn minor_table(&self, keep: ElementSet, contracted: ElementSet) -> Matroid {
        let kept: Vec<u32> = keep.iter().map(|e| 1u32 << e).collect();
        let m = kept.len();
        let base = self.rank_bits(contracted.0);
        let size = 1usize << m;
        // source_mask[a] is built incrementally from a with its lowest bit cleared.
        let mut source_mask = vec![0u32; size];
        let mut table = vec![0u8; size];
        for a in 1..size {
            let low = a.trailing_zeros() as usize;
            source_mask[a] = source_mask[a & (a - 1)] | kept[low];
            table[a] = (self.rank_bits(source_mask[a] | contracted.0) - base) as u8;
        }
        table[0] = 0;
        Matroid::from_rank_table_unchecked(m, table)
    }

    /// Deletes the elements of `d`. Result elements are renumbered densely.
    pub fn delete(&self, d: ElementSet) -> Result<Matroid> {
        self.check_set(d)?;
        Ok(self.minor_table(d.complement(self.ground_size()), ElementSet::EMPTY))
    }

    /// Contracts the elements of `c`. The contracted set may be dependent;
    /// the rank formula handles it.
    pub fn contract(&self, c: ElementSet) -> Result<Matroid> {
        self.check_set(c)?;
        Ok(self.minor_table(c.complement(self.ground_size()), c))
    }

    /// Restriction to `keep`, i.e. deletion of everything else.
    pub fn restrict(&self, keep: ElementSet) -> Result<Matroid> {
        self.check_set(keep)?;
        self.delete(keep.complement(self.ground_size()))
    }

    /// Contracts `c` and deletes `d`, returning the minor and a witness with
    /// the dense renumbering map.
    pub fn minor(&self, c: ElementSet, d: ElementSet) -> Result<(Matroid, MinorWitness)> {
        self.check_set(c)?;
        self.check_set(d)?;
        let overlap = c.intersection(d);
        if !overlap.is_empty() {
            return Err(Error::OverlappingSets { overlap });
        }
        let keep = c.union(d).complement(self.ground_size());
        let result = self.minor_table(keep, c);
        let witness =
            MinorWitness { contracted: c, deleted: d, element_map: keep.iter().collect() };
        Ok((result, witness))
    }

    /// The dual matroid: `r*(A) = |A| + r(E - A) - r(M)`.
    pub fn dual(&self) -> Matroid {
        let n = self.ground_size();
        let full = self.ground_set().0;
        let r = self.rank_bits(full);
        let size = 1usize << n;
        let mut table = vec![0u8; size];
        for a in 0..size as u32 {
            table[a as usize] = (a.count_ones() + self.rank_bits(full & !a) - r) as u8;
        }
        Matroid::from_rank_table_unchecked(n, table)
    }
}

/// Direct sum: elements of `second` are shifted above those of `first`, and
/// ranks add across the two sides.
pub fn direct_sum(first: &Matroid, second: &Matroid) -> Result<Matroid> {
    let n1 = first.ground_size();
    let n2 = second.ground_size();
    if n1 + n2 > CAPACITY {
        return Err(Error::CapacityExceeded { requested: n1 + n2, capacity: CAPACITY });
    }
    let n = n1 + n2;
    let low = ElementSet::full(n1).0;
    let size = 1usize << n;
    let mut table = vec![0u8; size];
    for a in 0..size as u32 {
        table[a as usize] = (first.rank_bits(a & low) + second.rank_bits(a >> n1)) as u8;
    }
    Ok(Matroid::from_rank_table_unchecked(n, table))
}

/// Replaces each designated element with a parallel class of the stated
/// size. Sizes must be at least one; a size of one leaves the element alone.
/// The extra copies of element `e` are appended after the original ground
/// set, in increasing order of `e`.
pub fn parallel_replace(m: &Matroid, sizes: &[(usize, usize)]) -> Result<Matroid> {
    let mut total = m.ground_size();
    let loops = m.loops();
    for &(e, size) in sizes {
        if e >= m.ground_size() {
            return Err(Error::OutOfRangeElement {
                set: ElementSet::singleton(e),
                ground_size: m.ground_size(),
            });
        }
        if loops.contains(e) {
            return Err(Error::LoopTarget { element: e });
        }
        if size == 0 {
            return Err(Error::BadParameters {
                message: format!("parallel class size for element {e} must be at least 1"),
            });
        }
        total += size - 1;
    }
    if total > CAPACITY {
        return Err(Error::CapacityExceeded { requested: total, capacity: CAPACITY });
    }
    let mut sorted: Vec<(usize, usize)> = sizes.to_vec();
    sorted.sort_unstable();

    let mut out = m.clone();
    for &(e, size) in &sorted {
        for _ in 1..size {
            out = parallel_extend(&out, e);
        }
    }
    Ok(out)
}

/// Adds one new element parallel to `e`.
fn parallel_extend(m: &Matroid, e: usize) -> Matroid {
    let n = m.ground_size();
    let low = ElementSet::full(n).0;
    let size = 1usize << (n + 1);
    let mut table = vec![0u8; size];
    for a in 0..size as u32 {
        let mut src = a & low;
        if a >> n & 1 == 1 {
            src |= 1 << e;
        }
        table[a as usize] = m.rank_bits(src) as u8;
    }
    Matroid::from_rank_table_unchecked(n + 1, table)
}

/// Principal extension: appends a new element placed freely on the flat `f`.
/// With `f` the full ground set this is the free extension.
pub fn principal_extension(m: &Matroid, f: ElementSet) -> Result<Matroid> {
    if !f.is_subset_of(m.ground_set()) {
        return Err(Error::OutOfRangeElement { set: f, ground_size: m.ground_size() });
    }
    if !m.is_flat(f) {
        return Err(Error::NotAFlat { set: f });
    }
    let n = m.ground_size();
    if n + 1 > CAPACITY {
        return Err(Error::CapacityExceeded { requested: n + 1, capacity: CAPACITY });
    }
    let low = ElementSet::full(n).0;
    let size = 1usize << (n + 1);
    let mut table = vec![0u8; size];
    for a in 0..size as u32 {
        let base = a & low;
        table[a as usize] = if a >> n & 1 == 0 {
            m.rank_bits(base) as u8
        } else {
            (m.rank_bits(base) + 1).min(m.rank_bits(base | f.0)) as u8
        };
    }
    Ok(Matroid::from_rank_table_unchecked(n + 1, table))
}

/// Relaxes a circuit-hyperplane: the result has the same bases plus `x`.
/// The rank table is recomputed in full from the enlarged basis family
/// rather than patched entry by entry.
pub fn relax(m: &Matroid, x: ElementSet) -> Result<Matroid> {
    if !x.is_subset_of(m.ground_set()) {
        return Err(Error::OutOfRangeElement { set: x, ground_size: m.ground_size() });
    }
    let r = m.full_rank();
    let is_ch = x.len() == r
        && m.rank_bits(x.0) as usize == r - 1
        && m.is_circuit_bits(x.0)
        && m.closure_bits(x.0) == x;
    if !is_ch {
        return Err(Error::NotACircuitHyperplane { set: x });
    }
    let mut bases = m.bases();
    bases.push(x);
    Matroid::from_bases(m.ground_size(), &bases)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn set(elems: &[usize]) -> ElementSet {
        ElementSet::from_elements(elems.iter().copied())
    }

    #[test]
    fn contract_uniform() {
        let u24 = catalog::uniform(2, 4).unwrap();
        let m = u24.contract(set(&[3])).unwrap();
        assert_eq!(m, catalog::uniform(1, 3).unwrap());
    }

    #[test]
    fn minor_witness_maps_back() {
        let u25 = catalog::uniform(2, 5).unwrap();
        let (m, w) = u25.minor(set(&[1]), set(&[3])).unwrap();
        assert_eq!(m.ground_size(), 3);
        assert_eq!(w.element_map, vec![0, 2, 4]);
        assert_eq!(m, catalog::uniform(1, 3).unwrap());

        let err = u25.minor(set(&[1]), set(&[1, 2])).unwrap_err();
        assert!(matches!(err, Error::OverlappingSets { .. }));
    }

    #[test]
    fn dual_of_uniform() {
        let u25 = catalog::uniform(2, 5).unwrap();
        assert_eq!(u25.dual(), catalog::uniform(3, 5).unwrap());
        assert_eq!(u25.dual().dual(), u25);
    }

    #[test]
    fn direct_sum_ranks_add() {
        let m = direct_sum(
            &catalog::uniform(1, 5).unwrap(),
            &catalog::uniform(0, 2).unwrap(),
        )
        .unwrap();
        assert_eq!(m.ground_size(), 7);
        assert_eq!(m.full_rank(), 1);
        assert_eq!(m.loops().len(), 2);
        // A direct summand is a separator: its connectivity is zero.
        let left = set(&[0, 1, 2, 3, 4]);
        let lambda = m.rank(left).unwrap() + m.rank(left.complement(7)).unwrap()
            - m.full_rank();
        assert_eq!(lambda, 0);

        let empty = catalog::uniform(0, 0).unwrap();
        let u24 = catalog::uniform(2, 4).unwrap();
        assert_eq!(direct_sum(&u24, &empty).unwrap(), u24);
    }

    #[test]
    fn parallel_replace_builds_multi_parallel_uniform() {
        let u24 = catalog::uniform(2, 4).unwrap();
        let m = parallel_replace(&u24, &[(0, 2), (1, 3)]).unwrap();
        assert_eq!(m.ground_size(), 7);
        assert_eq!(m.full_rank(), 2);
        let mut profile = m.parallel_class_profile();
        profile.sort_unstable();
        assert_eq!(profile, vec![1, 1, 2, 3]);

        // All sizes one: identity.
        assert_eq!(parallel_replace(&u24, &[(0, 1), (2, 1)]).unwrap(), u24);

        // Loops cannot carry a parallel class.
        let with_loop = direct_sum(&u24, &catalog::uniform(0, 1).unwrap()).unwrap();
        let err = parallel_replace(&with_loop, &[(4, 2)]).unwrap_err();
        assert!(matches!(err, Error::LoopTarget { element: 4 }));
    }

    #[test]
    fn principal_extension_on_full_set_is_free() {
        let u23 = catalog::uniform(2, 3).unwrap();
        let m = principal_extension(&u23, ElementSet::full(3)).unwrap();
        // Free element: no circuit through it smaller than rank + 1.
        assert_eq!(m, catalog::uniform(2, 4).unwrap());

        let err = principal_extension(&u23, set(&[0, 1])).unwrap_err();
        assert!(matches!(err, Error::NotAFlat { .. }));
    }

    #[test]
    fn principal_extension_then_delete_is_identity() {
        let m = catalog::named(catalog::Named::MW3).unwrap();
        for f in m.all_flats() {
            let ext = principal_extension(&m, f).unwrap();
            let back = ext.delete(ElementSet::singleton(m.ground_size())).unwrap();
            assert_eq!(back, m);
        }
    }

    #[test]
    fn relax_adds_exactly_one_basis() {
        let p7 = catalog::named(catalog::Named::P7).unwrap();
        let ch = p7.circuit_hyperplanes();
        assert!(!ch.is_empty());
        let relaxed = relax(&p7, ch[0]).unwrap();
        assert_eq!(relaxed.basis_count(), p7.basis_count() + 1);

        let err = relax(&p7, p7.bases()[0]).unwrap_err();
        assert!(matches!(err, Error::NotACircuitHyperplane { .. }));
    }

    #[test]
    fn deletion_contraction_commute() {
        let m = catalog::named(catalog::Named::P7).unwrap();
        let c = set(&[1]);
        let d = set(&[4, 6]);
        let first = m.contract(c).unwrap().delete(set(&[3, 5])).unwrap();
        // After contracting element 1, old elements 4 and 6 sit at 3 and 5.
        let second = m.delete(d).unwrap().contract(set(&[1])).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn duality_exchanges_deletion_and_contraction() {
        let m = catalog::named(catalog::Named::O7).unwrap();
        let d = set(&[2, 5]);
        assert_eq!(m.delete(d).unwrap().dual(), m.dual().contract(d).unwrap());
    }
}
