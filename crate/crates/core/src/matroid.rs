use std::fmt;

use crate::error::{Error, Result};
use crate::set::{ElementSet, CAPACITY};

/// An exact matroid on at most [`CAPACITY`] elements.
///
/// The full rank table is materialized: entry `s` holds the rank of the
/// subset whose bitmask is `s`. This trades memory (at most 64 KiB) for O(1)
/// rank queries, which dominate every downstream search. Values are immutable
/// after construction, so queries are safe to share across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    ground_size: usize,
    rank_table: Box<[u8]>,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matroid(n={}, r={}, bases={})",
            self.ground_size,
            self.full_rank(),
            self.basis_count()
        )
    }
}

/// Which rank axiom a table violates, with witness subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    EmptySetRank,
    Monotonicity { smaller: ElementSet, larger: ElementSet },
    UnitIncrease { set: ElementSet, element: usize },
    Submodularity { first: ElementSet, second: ElementSet },
}

/// Outcome of [`Matroid::validate_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub valid: bool,
    pub first_violation: Option<AxiomViolation>,
}

impl AxiomReport {
    fn ok() -> Self {
        AxiomReport { valid: true, first_violation: None }
    }

    fn fail(v: AxiomViolation) -> Self {
        AxiomReport { valid: false, first_violation: Some(v) }
    }
}

fn check_capacity(n: usize) -> Result<()> {
    if n > CAPACITY {
        return Err(Error::CapacityExceeded { requested: n, capacity: CAPACITY });
    }
    Ok(())
}

fn check_in_range(n: usize, set: ElementSet) -> Result<()> {
    if set.is_subset_of(ElementSet::full(n)) {
        Ok(())
    } else {
        Err(Error::OutOfRangeElement { set, ground_size: n })
    }
}

/// Checks the local rank axioms: r(emptyset) = 0, unit increase on covers,
/// and local submodularity. Together these are equivalent to the global
/// monotone/unit-increase/submodular axioms, but cost O(2^n n^2) instead of
/// O(4^n).
fn local_axiom_violation(n: usize, table: &[u8]) -> Option<AxiomViolation> {
    if table[0] != 0 {
        return Some(AxiomViolation::EmptySetRank);
    }
    let size = 1usize << n;
    for m in 0..size {
        let r = table[m];
        for e in 0..n {
            if m & (1 << e) != 0 {
                continue;
            }
            let re = table[m | (1 << e)];
            if re < r {
                return Some(AxiomViolation::Monotonicity {
                    smaller: ElementSet(m as u32),
                    larger: ElementSet((m | (1 << e)) as u32),
                });
            }
            if re > r + 1 {
                return Some(AxiomViolation::UnitIncrease {
                    set: ElementSet(m as u32),
                    element: e,
                });
            }
            if re != r {
                continue;
            }
            for f in e + 1..n {
                if m & (1 << f) != 0 {
                    continue;
                }
                if table[m | (1 << f)] == r && table[m | (1 << e) | (1 << f)] != r {
                    return Some(AxiomViolation::Submodularity {
                        first: ElementSet((m | (1 << e)) as u32),
                        second: ElementSet((m | (1 << f)) as u32),
                    });
                }
            }
        }
    }
    None
}

impl Matroid {
    /// Builds a matroid directly from a rank table, validating the rank
    /// axioms. Entry `s` of `table` must be the rank of the subset with
    /// bitmask `s`.
    pub fn from_rank_table(ground_size: usize, table: Vec<u8>) -> Result<Matroid> {
        check_capacity(ground_size)?;
        if table.len() != 1 << ground_size {
            return Err(Error::BadParameters {
                message: format!(
                    "rank table has {} entries, expected {}",
                    table.len(),
                    1 << ground_size
                ),
            });
        }
        let m = Matroid { ground_size, rank_table: table.into_boxed_slice() };
        match local_axiom_violation(ground_size, &m.rank_table) {
            None => Ok(m),
            Some(AxiomViolation::Submodularity { first, second }) => {
                Err(Error::BadParameters {
                    message: format!("table violates submodularity at {first}, {second}"),
                })
            }
            Some(v) => Err(Error::BadParameters { message: format!("invalid rank table: {v:?}") }),
        }
    }

    pub(crate) fn from_rank_table_unchecked(ground_size: usize, table: Vec<u8>) -> Matroid {
        debug_assert_eq!(table.len(), 1 << ground_size);
        debug_assert!(local_axiom_violation(ground_size, &table).is_none());
        Matroid { ground_size, rank_table: table.into_boxed_slice() }
    }

    /// Builds the matroid whose bases are exactly the given family.
    ///
    /// The family must be non-empty, of uniform cardinality, and satisfy the
    /// basis-exchange axiom; otherwise the corresponding error is returned
    /// with a witness pair.
    pub fn from_bases(ground_size: usize, bases: &[ElementSet]) -> Result<Matroid> {
        check_capacity(ground_size)?;
        let Some(&first) = bases.first() else {
            return Err(Error::EmptyBasisFamily);
        };
        for &b in bases {
            check_in_range(ground_size, b)?;
            if b.len() != first.len() {
                return Err(Error::UnequalBasisSizes { first, second: b });
            }
        }
        let mut family: Vec<u32> = bases.iter().map(|b| b.0).collect();
        family.sort_unstable();
        family.dedup();

        let size = 1usize << ground_size;
        let mut independent = vec![false; size];
        for &b in &family {
            independent[b as usize] = true;
        }
        // Downward closure: walking masks in decreasing order propagates
        // independence to every submask in one pass.
        for m in (1..size).rev() {
            if independent[m] {
                let mut rest = m;
                while rest != 0 {
                    let e = rest.trailing_zeros();
                    rest &= rest - 1;
                    independent[m & !(1usize << e)] = true;
                }
            }
        }
        let table = rank_table_from_independence(ground_size, &independent);
        if local_axiom_violation(ground_size, &table).is_some() {
            return Err(exchange_witness(&family));
        }
        Ok(Matroid { ground_size, rank_table: table.into_boxed_slice() })
    }

    /// Builds the matroid whose circuits are exactly the given family:
    /// a set is independent iff it contains no listed circuit.
    ///
    /// The family must be an antichain satisfying the circuit-elimination
    /// axiom; otherwise the corresponding error is returned with witnesses.
    pub fn from_circuits(ground_size: usize, circuits: &[ElementSet]) -> Result<Matroid> {
        check_capacity(ground_size)?;
        let mut family: Vec<u32> = Vec::with_capacity(circuits.len());
        for &c in circuits {
            check_in_range(ground_size, c)?;
            if c.is_empty() {
                return Err(Error::EmptyCircuit);
            }
            family.push(c.0);
        }
        family.sort_unstable();
        family.dedup();
        for (i, &c1) in family.iter().enumerate() {
            for &c2 in &family[i + 1..] {
                if c1 & !c2 == 0 {
                    return Err(Error::CircuitContainment {
                        inner: ElementSet(c1),
                        outer: ElementSet(c2),
                    });
                }
                if c2 & !c1 == 0 {
                    return Err(Error::CircuitContainment {
                        inner: ElementSet(c2),
                        outer: ElementSet(c1),
                    });
                }
            }
        }

        let size = 1usize << ground_size;
        let mut dependent = vec![false; size];
        for &c in &family {
            dependent[c as usize] = true;
        }
        // Upward closure in one ascending pass.
        for m in 0..size {
            if dependent[m] {
                for e in 0..ground_size {
                    dependent[m | (1usize << e)] = true;
                }
            }
        }
        let mut independent = dependent;
        for flag in independent.iter_mut() {
            *flag = !*flag;
        }
        let table = rank_table_from_independence(ground_size, &independent);
        if local_axiom_violation(ground_size, &table).is_some() {
            return Err(elimination_witness(&family));
        }
        Ok(Matroid { ground_size, rank_table: table.into_boxed_slice() })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.ground_size)
    }

    /// Rank of the whole matroid.
    pub fn full_rank(&self) -> usize {
        self.rank_bits(self.ground_set().0) as usize
    }

    /// Corank, i.e. the rank of the dual.
    pub fn corank(&self) -> usize {
        self.ground_size - self.full_rank()
    }

    #[inline]
    pub(crate) fn rank_bits(&self, bits: u32) -> u32 {
        self.rank_table[bits as usize] as u32
    }

    /// The raw rank table: entry `s` is the rank of the subset with
    /// bitmask `s`.
    pub fn rank_table(&self) -> &[u8] {
        &self.rank_table
    }

    pub fn rank(&self, set: ElementSet) -> Result<usize> {
        check_in_range(self.ground_size, set)?;
        Ok(self.rank_bits(set.0) as usize)
    }

    pub fn is_independent(&self, set: ElementSet) -> Result<bool> {
        check_in_range(self.ground_size, set)?;
        Ok(self.rank_bits(set.0) as usize == set.len())
    }

    /// Closure of `set`: all elements whose addition does not raise the rank.
    pub fn closure(&self, set: ElementSet) -> Result<ElementSet> {
        check_in_range(self.ground_size, set)?;
        Ok(self.closure_bits(set.0))
    }

    pub(crate) fn closure_bits(&self, bits: u32) -> ElementSet {
        let r = self.rank_bits(bits);
        let mut out = bits;
        for e in 0..self.ground_size {
            if self.rank_bits(bits | (1 << e)) == r {
                out |= 1 << e;
            }
        }
        ElementSet(out)
    }

    pub(crate) fn is_circuit_bits(&self, bits: u32) -> bool {
        let k = bits.count_ones();
        if k == 0 || self.rank_bits(bits) != k - 1 {
            return false;
        }
        let mut rest = bits;
        while rest != 0 {
            let e = rest.trailing_zeros();
            rest &= rest - 1;
            if self.rank_bits(bits & !(1 << e)) != k - 1 {
                return false;
            }
        }
        true
    }

    /// All circuits (minimal dependent sets), in increasing mask order.
    pub fn circuits(&self) -> Vec<ElementSet> {
        let size = 1u32 << self.ground_size;
        (1..size).filter(|&m| self.is_circuit_bits(m)).map(ElementSet).collect()
    }

    /// All cocircuits, i.e. circuits of the dual.
    pub fn cocircuits(&self) -> Vec<ElementSet> {
        self.dual().circuits()
    }

    pub fn is_flat(&self, set: ElementSet) -> bool {
        set.is_subset_of(self.ground_set()) && self.closure_bits(set.0) == set
    }

    /// All flats of rank exactly `k`, in increasing mask order.
    pub fn flats(&self, k: usize) -> Vec<ElementSet> {
        let size = 1u32 << self.ground_size;
        (0..size)
            .filter(|&m| self.rank_bits(m) as usize == k && self.closure_bits(m).0 == m)
            .map(ElementSet)
            .collect()
    }

    /// All flats of every rank, in increasing mask order.
    pub fn all_flats(&self) -> Vec<ElementSet> {
        let size = 1u32 << self.ground_size;
        (0..size).filter(|&m| self.closure_bits(m).0 == m).map(ElementSet).collect()
    }

    pub fn hyperplanes(&self) -> Vec<ElementSet> {
        if self.full_rank() == 0 {
            return Vec::new();
        }
        self.flats(self.full_rank() - 1)
    }

    /// Sets that are simultaneously a circuit and a hyperplane.
    pub fn circuit_hyperplanes(&self) -> Vec<ElementSet> {
        let r = self.full_rank();
        if r == 0 {
            return Vec::new();
        }
        let size = 1u32 << self.ground_size;
        (1..size)
            .filter(|&m| {
                self.rank_bits(m) as usize == r - 1
                    && self.is_circuit_bits(m)
                    && self.closure_bits(m).0 == m
            })
            .map(ElementSet)
            .collect()
    }

    /// All bases, in increasing mask order.
    pub fn bases(&self) -> Vec<ElementSet> {
        let r = self.full_rank() as u32;
        let size = 1u32 << self.ground_size;
        (0..size)
            .filter(|&m| m.count_ones() == r && self.rank_bits(m) == r)
            .map(ElementSet)
            .collect()
    }

    pub fn basis_count(&self) -> usize {
        let r = self.full_rank() as u32;
        let size = 1u32 << self.ground_size;
        (0..size).filter(|&m| m.count_ones() == r && self.rank_bits(m) == r).count()
    }

    /// Elements of rank zero.
    pub fn loops(&self) -> ElementSet {
        let mut out = 0u32;
        for e in 0..self.ground_size {
            if self.rank_bits(1 << e) == 0 {
                out |= 1 << e;
            }
        }
        ElementSet(out)
    }

    /// Elements in every basis, i.e. loops of the dual.
    pub fn coloops(&self) -> ElementSet {
        let full = self.ground_set().0;
        let r = self.rank_bits(full);
        let mut out = 0u32;
        for e in 0..self.ground_size {
            if self.rank_bits(full & !(1 << e)) < r {
                out |= 1 << e;
            }
        }
        ElementSet(out)
    }

    /// Partition of the non-loop elements into parallel classes, ordered by
    /// least member. Singleton classes are included.
    pub fn parallel_classes(&self) -> Vec<ElementSet> {
        let loops = self.loops();
        let mut seen = loops.0;
        let mut classes = Vec::new();
        for e in 0..self.ground_size {
            if seen & (1 << e) != 0 {
                continue;
            }
            let mut class = 1u32 << e;
            for f in e + 1..self.ground_size {
                if seen & (1 << f) == 0 && self.rank_bits((1 << e) | (1 << f)) == 1 {
                    class |= 1 << f;
                }
            }
            seen |= class;
            classes.push(ElementSet(class));
        }
        classes
    }

    /// Sorted multiset of parallel-class sizes, largest first.
    pub fn parallel_class_profile(&self) -> Vec<usize> {
        let mut profile: Vec<usize> = self.parallel_classes().iter().map(|c| c.len()).collect();
        profile.sort_unstable_by(|a, b| b.cmp(a));
        profile
    }

    pub fn is_simple(&self) -> bool {
        self.loops().is_empty() && self.parallel_classes().iter().all(|c| c.len() == 1)
    }

    pub fn is_cosimple(&self) -> bool {
        self.dual().is_simple()
    }

    /// Removes loops and all but the least element of each parallel class.
    ///
    /// Returns the simplification together with the map sending each retained
    /// element (by its new index) to its index in `self`.
    pub fn simplify(&self) -> (Matroid, Vec<usize>) {
        let keep = ElementSet::from_elements(
            self.parallel_classes().iter().filter_map(|c| c.min_element()),
        );
        let map: Vec<usize> = keep.iter().collect();
        let deleted = keep.complement(self.ground_size);
        let simplified = self
            .delete(deleted)
            .expect("deleting a subset of the ground set cannot fail");
        (simplified, map)
    }

    /// Dual operation to [`Matroid::simplify`]: removes coloops and all but
    /// one element of each series class.
    pub fn cosimplify(&self) -> (Matroid, Vec<usize>) {
        let (si_dual, map) = self.dual().simplify();
        (si_dual.dual(), map)
    }

    /// Exhaustively validates the monotonicity, unit-increase, and
    /// submodularity axioms over all subset pairs. Feasible for ground sets
    /// of size at most 12; above that the check falls back to the local
    /// axioms (still a complete characterisation) plus a deterministic
    /// sample of global pairs.
    pub fn validate_axioms(&self) -> AxiomReport {
        let n = self.ground_size;
        let t = &self.rank_table;
        if t[0] != 0 {
            return AxiomReport::fail(AxiomViolation::EmptySetRank);
        }
        // Unit increase over all (set, element) pairs.
        let size = 1usize << n;
        for m in 0..size {
            for e in 0..n {
                if m & (1 << e) != 0 {
                    continue;
                }
                let (r, re) = (t[m], t[m | (1 << e)]);
                if re > r + 1 {
                    return AxiomReport::fail(AxiomViolation::UnitIncrease {
                        set: ElementSet(m as u32),
                        element: e,
                    });
                }
            }
        }
        if n <= 12 {
            // Monotonicity over all nested pairs.
            for b in 0..size as u32 {
                let rb = t[b as usize];
                for a in ElementSet(b).subsets() {
                    if t[a.0 as usize] > rb {
                        return AxiomReport::fail(AxiomViolation::Monotonicity {
                            smaller: a,
                            larger: ElementSet(b),
                        });
                    }
                }
            }
            // Submodularity over all subset pairs.
            for a in 0..size as u32 {
                let ra = t[a as usize] as usize;
                for b in 0..size as u32 {
                    let lhs = t[(a | b) as usize] as usize + t[(a & b) as usize] as usize;
                    if lhs > ra + t[b as usize] as usize {
                        return AxiomReport::fail(AxiomViolation::Submodularity {
                            first: ElementSet(a),
                            second: ElementSet(b),
                        });
                    }
                }
            }
            AxiomReport::ok()
        } else {
            if let Some(v) = local_axiom_violation(n, t) {
                return AxiomReport::fail(v);
            }
            // Sampled global pairs; the local axioms above already imply the
            // global ones, so this is a belt-and-braces spot check.
            let mut state = 0x9e3779b97f4a7c15u64;
            let mask = (size - 1) as u64;
            for _ in 0..1 << 20 {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let a = (state & mask) as usize;
                let b = ((state >> 24) & mask) as usize;
                let lhs = t[a | b] as usize + t[a & b] as usize;
                if lhs > t[a] as usize + t[b] as usize {
                    return AxiomReport::fail(AxiomViolation::Submodularity {
                        first: ElementSet(a as u32),
                        second: ElementSet(b as u32),
                    });
                }
            }
            AxiomReport::ok()
        }
    }
}

/// Rank table from an independence indicator: the rank of a set is the size
/// of its largest independent subset.
fn rank_table_from_independence(n: usize, independent: &[bool]) -> Vec<u8> {
    let size = 1usize << n;
    let mut table = vec![0u8; size];
    for m in 1..size {
        if independent[m] {
            table[m] = (m as u32).count_ones() as u8;
        } else {
            let mut best = 0u8;
            let mut rest = m;
            while rest != 0 {
                let e = rest.trailing_zeros();
                rest &= rest - 1;
                best = best.max(table[m & !(1usize << e)]);
            }
            table[m] = best;
        }
    }
    table
}

/// Finds a witness pair for a basis-exchange failure. Called only after the
/// derived rank table has already failed validation, so a witness exists.
fn exchange_witness(family: &[u32]) -> Error {
    let in_family = |b: u32| family.binary_search(&b).is_ok();
    for &b1 in family {
        for &b2 in family {
            let mut xs = b1 & !b2;
            while xs != 0 {
                let x = xs.trailing_zeros();
                xs &= xs - 1;
                let mut ok = false;
                let mut ys = b2 & !b1;
                while ys != 0 {
                    let y = ys.trailing_zeros();
                    ys &= ys - 1;
                    if in_family((b1 & !(1 << x)) | (1 << y)) {
                        ok = true;
                        break;
                    }
                }
                if !ok {
                    return Error::ExchangeAxiomViolation {
                        from: ElementSet(b1),
                        to: ElementSet(b2),
                    };
                }
            }
        }
    }
    Error::ExchangeAxiomViolation {
        from: ElementSet(family[0]),
        to: ElementSet(*family.last().unwrap()),
    }
}

/// Finds a witness pair for a circuit-elimination failure.
fn elimination_witness(family: &[u32]) -> Error {
    for (i, &c1) in family.iter().enumerate() {
        for &c2 in &family[i + 1..] {
            let mut common = c1 & c2;
            while common != 0 {
                let e = common.trailing_zeros();
                common &= common - 1;
                let target = (c1 | c2) & !(1 << e);
                if !family.iter().any(|&c| c & !target == 0) {
                    return Error::EliminationAxiomViolation {
                        first: ElementSet(c1),
                        second: ElementSet(c2),
                    };
                }
            }
        }
    }
    Error::EliminationAxiomViolation {
        first: ElementSet(family[0]),
        second: ElementSet(*family.last().unwrap()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn set(elems: &[usize]) -> ElementSet {
        ElementSet::from_elements(elems.iter().copied())
    }

    #[test]
    fn from_bases_two_points_in_parallel() {
        let m = Matroid::from_bases(2, &[set(&[0]), set(&[1])]).unwrap();
        assert_eq!(m.full_rank(), 1);
        assert_eq!(m.rank(set(&[0, 1])).unwrap(), 1);
    }

    #[test]
    fn from_bases_uniform_2_4() {
        let bases: Vec<ElementSet> = (0u32..16)
            .filter(|m| m.count_ones() == 2)
            .map(ElementSet)
            .collect();
        let m = Matroid::from_bases(4, &bases).unwrap();
        assert_eq!(m.full_rank(), 2);
        for s in ElementSet::full(4).subsets() {
            assert_eq!(m.rank(s).unwrap(), s.len().min(2));
        }
    }

    #[test]
    fn from_bases_accepts_valid_rejects_exchange_failure() {
        // {0,1},{0,2}: exchange holds, rank-2 matroid with 1 parallel to 2.
        let m = Matroid::from_bases(3, &[set(&[0, 1]), set(&[0, 2])]).unwrap();
        assert_eq!(m.full_rank(), 2);
        assert_eq!(m.rank(set(&[1, 2])).unwrap(), 1);

        // {0,1},{2,3}: exchange fails.
        let err = Matroid::from_bases(4, &[set(&[0, 1]), set(&[2, 3])]).unwrap_err();
        assert!(matches!(err, Error::ExchangeAxiomViolation { .. }));
    }

    #[test]
    fn from_bases_brute_force_exchange_agreement() {
        // Every 2-element basis family on 4 elements: acceptance must agree
        // with a direct exchange-axiom scan.
        let pairs: Vec<u32> = (0u32..16).filter(|m| m.count_ones() == 2).collect();
        for picks in 1u32..(1 << pairs.len()) {
            let family: Vec<ElementSet> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| picks & (1 << i) != 0)
                .map(|(_, &b)| ElementSet(b))
                .collect();
            let masks: Vec<u32> = family.iter().map(|b| b.0).collect();
            let brute_ok = masks.iter().all(|&b1| {
                masks.iter().all(|&b2| {
                    ElementSet(b1 & !b2).iter().all(|x| {
                        ElementSet(b2 & !b1)
                            .iter()
                            .any(|y| masks.contains(&((b1 & !(1 << x)) | (1 << y))))
                    })
                })
            });
            assert_eq!(
                Matroid::from_bases(4, &family).is_ok(),
                brute_ok,
                "family {family:?}"
            );
        }
    }

    #[test]
    fn from_circuits_single_triangle_is_uniform() {
        let m = Matroid::from_circuits(3, &[set(&[0, 1, 2])]).unwrap();
        assert_eq!(m, catalog::uniform(2, 3).unwrap());
    }

    #[test]
    fn from_circuits_parallel_chain() {
        // 0 parallel to 1 and 1 parallel to 2 force 0 parallel to 2; the
        // complete list is accepted, the incomplete one fails elimination.
        let m =
            Matroid::from_circuits(4, &[set(&[0, 1]), set(&[1, 2]), set(&[0, 2])]).unwrap();
        assert_eq!(m.full_rank(), 2);
        assert_eq!(m.rank(set(&[0, 2])).unwrap(), 1);

        let err = Matroid::from_circuits(4, &[set(&[0, 1]), set(&[1, 2])]).unwrap_err();
        assert!(matches!(err, Error::EliminationAxiomViolation { .. }));

        let err =
            Matroid::from_circuits(4, &[set(&[0, 1]), set(&[0, 1, 2])]).unwrap_err();
        assert!(matches!(err, Error::CircuitContainment { .. }));
    }

    #[test]
    fn from_circuits_rejects_elimination_failure() {
        // Two triangles sharing two points must generate the 2-point circuit;
        // leaving it out breaks elimination.
        let err = Matroid::from_circuits(4, &[set(&[0, 1, 2]), set(&[0, 1, 3])]).unwrap_err();
        assert!(matches!(err, Error::EliminationAxiomViolation { .. }));
    }

    #[test]
    fn closure_and_independence_queries() {
        let u24 = catalog::uniform(2, 4).unwrap();
        assert_eq!(u24.rank(set(&[0, 1])).unwrap(), 2);
        assert_eq!(u24.closure(set(&[0, 1])).unwrap(), ElementSet::full(4));
        assert!(u24.is_independent(set(&[0, 1])).unwrap());
        assert!(!u24.is_independent(set(&[0, 1, 2])).unwrap());

        let err = u24.rank(set(&[5])).unwrap_err();
        assert!(matches!(err, Error::OutOfRangeElement { .. }));
    }

    #[test]
    fn uniform_circuits_and_no_circuit_hyperplanes() {
        let u24 = catalog::uniform(2, 4).unwrap();
        let circuits = u24.circuits();
        assert_eq!(circuits.len(), 4);
        assert!(circuits.iter().all(|c| c.len() == 3));
        assert!(u24.circuit_hyperplanes().is_empty());
    }

    #[test]
    fn loops_parallel_classes_simplify() {
        // U_{1,3} + 2 loops: elements 0,1,2 parallel, 3,4 loops.
        let m = crate::transforms::direct_sum(
            &catalog::uniform(1, 3).unwrap(),
            &catalog::uniform(0, 2).unwrap(),
        )
        .unwrap();
        assert_eq!(m.loops(), set(&[3, 4]));
        assert_eq!(m.parallel_classes(), vec![set(&[0, 1, 2])]);
        let (si, map) = m.simplify();
        assert_eq!(si.ground_size(), 1);
        assert_eq!(si.full_rank(), 1);
        assert_eq!(map, vec![0]);
    }

    #[test]
    fn simplify_is_identity_on_simple_matroids() {
        let u24 = catalog::uniform(2, 4).unwrap();
        let (si, map) = u24.simplify();
        assert_eq!(si, u24);
        assert_eq!(map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn validate_axioms_detects_perturbation() {
        let u24 = catalog::uniform(2, 4).unwrap();
        assert!(u24.validate_axioms().valid);

        let mut table = u24.rank_table().to_vec();
        let idx = ElementSet::from_elements([0, 1, 2]).0 as usize;
        table[idx] += 1;
        let bad = Matroid { ground_size: 4, rank_table: table.into_boxed_slice() };
        let report = bad.validate_axioms();
        assert!(!report.valid);
        assert!(report.first_violation.is_some());
    }

    #[test]
    fn cosimplify_removes_series_elements() {
        // Dual of a parallel pair is a series pair.
        let m = catalog::uniform(1, 2).unwrap().dual();
        let (co, map) = m.cosimplify();
        assert_eq!(co.ground_size(), 1);
        assert_eq!(map.len(), 1);
    }
}
