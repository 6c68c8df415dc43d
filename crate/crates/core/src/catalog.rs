//! Named constructors for the matroids used throughout the crate: the
//! uniform family, spikes with arbitrary legal traversal sets, wheels and
//! whirls, the P7 family, P8, O7 and its relaxation, AG(2,3) minus a point,
//! the Fano plane, and generic graphic / GF(2), GF(3) linear constructors.

use crate::analysis;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{ElementSet, CAPACITY};
use crate::transforms;

/// The uniform matroid U_{r,n}: every subset of size at most `r` is
/// independent.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if r > n {
        return Err(Error::BadParameters { message: format!("uniform({r},{n}) needs r <= n") });
    }
    if n > CAPACITY {
        return Err(Error::CapacityExceeded { requested: n, capacity: CAPACITY });
    }
    let size = 1usize << n;
    let mut table = vec![0u8; size];
    for m in 0..size as u32 {
        table[m as usize] = (m.count_ones() as usize).min(r) as u8;
    }
    Ok(Matroid::from_rank_table_unchecked(n, table))
}

/// U_{r,n} with its first `sizes.len()` elements replaced by parallel
/// classes of the given sizes.
pub fn multi_parallel_uniform(r: usize, n: usize, sizes: &[usize]) -> Result<Matroid> {
    if sizes.len() > n {
        return Err(Error::BadParameters {
            message: format!("cannot replace {} elements of U_{{{r},{n}}}", sizes.len()),
        });
    }
    let base = uniform(r, n)?;
    let pairs: Vec<(usize, usize)> = sizes.iter().copied().enumerate().collect();
    transforms::parallel_replace(&base, &pairs)
}

/// U_{r,n} with every element replaced by a parallel class of size two.
pub fn doubled_uniform(r: usize, n: usize) -> Result<Matroid> {
    multi_parallel_uniform(r, n, &vec![2; n])
}

/// Description of a spike to construct.
///
/// A traversal is encoded as a bitmask over the legs: bit `i` clear selects
/// the first leg element, bit `i` set selects the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpikeSpec {
    /// Rank, at least 3.
    pub rank: usize,
    /// Size of the tip parallel class; 0 builds the tipless spike, 1 the
    /// ordinary tipped spike, and 2 or more the overloaded tipped spike.
    pub tip_class_size: usize,
    /// Traversal choice vectors. Any two must differ on at least two legs.
    pub traversals: Vec<u16>,
}

impl SpikeSpec {
    pub fn free_tipped(rank: usize) -> Self {
        SpikeSpec { rank, tip_class_size: 1, traversals: Vec::new() }
    }

    pub fn free_tipless(rank: usize) -> Self {
        SpikeSpec { rank, tip_class_size: 0, traversals: Vec::new() }
    }

    pub fn is_tipped(&self) -> bool {
        self.tip_class_size > 0
    }

    pub fn ground_size(&self) -> usize {
        2 * self.rank + self.tip_class_size
    }

    /// Elements of the tip parallel class (the lowest indices).
    pub fn tip_class(&self) -> ElementSet {
        ElementSet::full(self.tip_class_size)
    }

    /// The two elements of leg `i`.
    pub fn leg(&self, i: usize) -> (usize, usize) {
        let base = self.tip_class_size + 2 * i;
        (base, base + 1)
    }

    fn traversal_elements(&self, traversal: u16) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for i in 0..self.rank {
            let (x, y) = self.leg(i);
            out = out.with(if traversal >> i & 1 == 0 { x } else { y });
        }
        out
    }

    fn choice_vector(&self, traversal: u16) -> Vec<u8> {
        (0..self.rank).map(|i| (traversal >> i & 1) as u8).collect()
    }
}

/// Builds the spike described by `spec` from its circuit family: tip copies
/// pairwise parallel, a triangle through each tip copy and each leg, every
/// union of two legs, the traversals, and the spanning circuits these leave
/// free.
pub fn spike(spec: &SpikeSpec) -> Result<Matroid> {
    let r = spec.rank;
    if r < 3 {
        return Err(Error::BadParameters { message: format!("spike rank {r} must be >= 3") });
    }
    let n = spec.ground_size();
    if n > CAPACITY {
        return Err(Error::CapacityExceeded { requested: n, capacity: CAPACITY });
    }
    let mut traversals = spec.traversals.clone();
    traversals.sort_unstable();
    traversals.dedup();
    let leg_mask = (1u16 << r).wrapping_sub(1);
    for &t in &traversals {
        if t & !leg_mask != 0 {
            return Err(Error::BadParameters {
                message: format!("traversal {t:#b} uses legs beyond rank {r}"),
            });
        }
    }
    for (i, &t1) in traversals.iter().enumerate() {
        for &t2 in &traversals[i + 1..] {
            // Same choice on more than r-2 legs means Hamming distance < 2.
            if (t1 ^ t2).count_ones() < 2 {
                return Err(Error::IllegalTraversalPair {
                    first: spec.choice_vector(t1),
                    second: spec.choice_vector(t2),
                });
            }
        }
    }

    let mut circuits: Vec<ElementSet> = Vec::new();
    let tip = spec.tip_class();
    for t1 in tip.iter() {
        for t2 in tip.iter() {
            if t1 < t2 {
                circuits.push(ElementSet::from_elements([t1, t2]));
            }
        }
    }
    for t in tip.iter() {
        for i in 0..r {
            let (x, y) = spec.leg(i);
            circuits.push(ElementSet::from_elements([t, x, y]));
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            let (xi, yi) = spec.leg(i);
            let (xj, yj) = spec.leg(j);
            circuits.push(ElementSet::from_elements([xi, yi, xj, yj]));
        }
    }
    for &t in &traversals {
        circuits.push(spec.traversal_elements(t));
    }
    let completed = complete_circuits(n, r, &circuits);
    Matroid::from_circuits(n, &completed)
}

/// Given the non-spanning circuits of a rank-`rank` matroid, appends the
/// spanning circuits: every (rank+1)-subset that contains no listed circuit.
pub fn complete_circuits(n: usize, rank: usize, nonspanning: &[ElementSet]) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = nonspanning.to_vec();
    out.sort_unstable();
    out.dedup();
    let listed = out.clone();
    let size = 1u32 << n;
    for m in 0..size {
        if m.count_ones() as usize == rank + 1
            && !listed.iter().any(|c| c.is_subset_of(ElementSet(m)))
        {
            out.push(ElementSet(m));
        }
    }
    out
}

/// Cycle matroid of a graph given as a list of edges. Vertices may carry any
/// labels below 32; parallel edges and self-loops are allowed.
pub fn from_graph(edges: &[(usize, usize)]) -> Result<Matroid> {
    let n = edges.len();
    if n > CAPACITY {
        return Err(Error::CapacityExceeded { requested: n, capacity: CAPACITY });
    }
    for &(u, v) in edges {
        if u >= 32 || v >= 32 {
            return Err(Error::BadParameters {
                message: format!("vertex labels must be below 32, got ({u},{v})"),
            });
        }
    }
    let size = 1usize << n;
    let mut table = vec![0u8; size];
    let mut parent = [0usize; 32];
    for m in 1..size as u32 {
        // Rank of an edge set: vertices touched minus components, via a tiny
        // union-find rebuilt per subset.
        for (i, slot) in parent.iter_mut().enumerate() {
            *slot = i;
        }
        fn find(parent: &mut [usize; 32], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut rank = 0u8;
        for e in ElementSet(m).iter() {
            let (u, v) = edges[e];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                rank += 1;
            }
        }
        table[m as usize] = rank;
    }
    Ok(Matroid::from_rank_table_unchecked(n, table))
}

/// Linear matroid of column vectors over GF(p), p in {2, 3}.
pub fn from_matrix_gf(p: u8, columns: &[Vec<u8>]) -> Result<Matroid> {
    if p != 2 && p != 3 {
        return Err(Error::BadField { field: p });
    }
    let n = columns.len();
    if n > CAPACITY {
        return Err(Error::CapacityExceeded { requested: n, capacity: CAPACITY });
    }
    let dim = columns.first().map_or(0, Vec::len);
    if columns.iter().any(|c| c.len() != dim) {
        return Err(Error::BadParameters { message: "columns differ in length".into() });
    }
    let cols: Vec<Vec<u8>> =
        columns.iter().map(|c| c.iter().map(|&x| x % p).collect()).collect();
    let size = 1usize << n;
    let mut table = vec![0u8; size];
    let mut pivots: Vec<Vec<u8>> = Vec::with_capacity(dim);
    let mut pivot_rows: Vec<usize> = Vec::with_capacity(dim);
    for m in 1..size as u32 {
        pivots.clear();
        pivot_rows.clear();
        for e in ElementSet(m).iter() {
            let mut v = cols[e].clone();
            for (pv, &row) in pivots.iter().zip(&pivot_rows) {
                if v[row] != 0 {
                    // v -= v[row]/pv[row] * pv  (pivot entries are 1)
                    let factor = v[row];
                    for (vi, pvi) in v.iter_mut().zip(pv) {
                        *vi = (*vi + (p - factor) * pvi) % p;
                    }
                }
            }
            if let Some(row) = v.iter().position(|&x| x != 0) {
                // Normalize the pivot entry to 1; over GF(2) and GF(3) the
                // only non-unit entry is 2, which is its own inverse mod 3.
                if v[row] != 1 {
                    for vi in v.iter_mut() {
                        *vi = (*vi * 2) % p;
                    }
                }
                pivot_rows.push(row);
                pivots.push(v);
            }
        }
        table[m as usize] = pivots.len() as u8;
    }
    Ok(Matroid::from_rank_table_unchecked(n, table))
}

/// Edge list of the r-spoke wheel graph: hub 0, rim vertices 1..=r, spokes
/// first (indices 0..r), then rim edges (indices r..2r).
fn wheel_edges(r: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (1..=r).map(|i| (0, i)).collect();
    edges.extend((1..=r).map(|i| (i, i % r + 1)));
    edges
}

/// The rank-r wheel M(W_r).
pub fn wheel(r: usize) -> Result<Matroid> {
    if r < 2 {
        return Err(Error::BadParameters { message: format!("wheel rank {r} must be >= 2") });
    }
    from_graph(&wheel_edges(r))
}

/// The rank-r whirl: the wheel with its rim relaxed.
pub fn whirl(r: usize) -> Result<Matroid> {
    let w = wheel(r)?;
    let rim = ElementSet(((1u32 << r) - 1) << r);
    transforms::relax(&w, rim)
}

/// The named matroids of the excluded-minor lists and their building blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Named {
    P7,
    P7Minus,
    P7DoubleMinus,
    P8,
    O7,
    O7Minus,
    AG23DelE,
    F7,
    F7Dual,
    MW3,
    MW4,
    W3,
    W4,
}

impl Named {
    pub const ALL: [Named; 13] = [
        Named::P7,
        Named::P7Minus,
        Named::P7DoubleMinus,
        Named::P8,
        Named::O7,
        Named::O7Minus,
        Named::AG23DelE,
        Named::F7,
        Named::F7Dual,
        Named::MW3,
        Named::MW4,
        Named::W3,
        Named::W4,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Named::P7 => "P7",
            Named::P7Minus => "P7-",
            Named::P7DoubleMinus => "P7=",
            Named::P8 => "P8",
            Named::O7 => "O7",
            Named::O7Minus => "O7-",
            Named::AG23DelE => "AG23e",
            Named::F7 => "F7",
            Named::F7Dual => "F7*",
            Named::MW3 => "MW3",
            Named::MW4 => "MW4",
            Named::W3 => "W3",
            Named::W4 => "W4",
        }
    }
}

impl std::str::FromStr for Named {
    type Err = Error;

    fn from_str(s: &str) -> Result<Named> {
        let named = match s {
            "P7" => Named::P7,
            "P7-" | "P7minus" => Named::P7Minus,
            "P7=" | "P7doubleminus" => Named::P7DoubleMinus,
            "P8" => Named::P8,
            "O7" => Named::O7,
            "O7-" | "O7minus" => Named::O7Minus,
            "AG23e" | "AG23_del_e" => Named::AG23DelE,
            "F7" => Named::F7,
            "F7*" | "F7dual" => Named::F7Dual,
            "MW3" => Named::MW3,
            "MW4" => Named::MW4,
            "W3" => Named::W3,
            "W4" => Named::W4,
            _ => return Err(Error::UnknownName { name: s.to_string() }),
        };
        Ok(named)
    }
}

/// Constructs a named matroid.
pub fn named(which: Named) -> Result<Matroid> {
    match which {
        // P7 is the rank-3 tipped spike with the two disjoint traversals.
        Named::P7 => spike(&SpikeSpec { rank: 3, tip_class_size: 1, traversals: vec![0b000, 0b111] }),
        Named::P7Minus => {
            let p7 = named(Named::P7)?;
            transforms::relax(&p7, least_tip_circuit_hyperplane(&p7)?)
        }
        Named::P7DoubleMinus => {
            let p7m = named(Named::P7Minus)?;
            transforms::relax(&p7m, least_tip_circuit_hyperplane(&p7m)?)
        }
        Named::P8 => {
            let m = p8_candidate()?;
            certify_p8(&m)?;
            Ok(m)
        }
        Named::O7 => {
            let base = named(Named::MW3)?;
            transforms::principal_extension(&base, least_three_point_line(&base)?)
        }
        Named::O7Minus => {
            let base = named(Named::W3)?;
            transforms::principal_extension(&base, least_three_point_line(&base)?)
        }
        Named::AG23DelE => {
            let mut columns = Vec::with_capacity(9);
            for a in 0..3u8 {
                for b in 0..3u8 {
                    columns.push(vec![1, a, b]);
                }
            }
            let ag = from_matrix_gf(3, &columns)?;
            ag.delete(ElementSet::singleton(0))
        }
        Named::F7 => {
            let columns: Vec<Vec<u8>> =
                (1u8..8).map(|v| vec![v & 1, v >> 1 & 1, v >> 2 & 1]).collect();
            from_matrix_gf(2, &columns)
        }
        Named::F7Dual => Ok(named(Named::F7)?.dual()),
        Named::MW3 => wheel(3),
        Named::MW4 => wheel(4),
        Named::W3 => whirl(3),
        Named::W4 => whirl(4),
    }
}

/// Least circuit-hyperplane through element 0, the tip of a constructed
/// tipped spike.
fn least_tip_circuit_hyperplane(m: &Matroid) -> Result<ElementSet> {
    m.circuit_hyperplanes()
        .into_iter()
        .find(|ch| ch.contains(0))
        .ok_or_else(|| Error::BadParameters {
            message: "no circuit-hyperplane through the tip".into(),
        })
}

/// Least rank-2 flat with exactly three points.
fn least_three_point_line(m: &Matroid) -> Result<ElementSet> {
    m.flats(2)
        .into_iter()
        .find(|f| f.len() == 3)
        .ok_or_else(|| Error::BadParameters { message: "no 3-point line".into() })
}

/// The reduced GF(3) representation [I_4 | A] with A symmetric,
/// rows (0,1,1,-1), (1,0,1,1), (1,1,0,1), (-1,1,1,0).
fn p8_candidate() -> Result<Matroid> {
    let a: [[u8; 4]; 4] = [[0, 1, 1, 2], [1, 0, 1, 1], [1, 1, 0, 1], [2, 1, 1, 0]];
    let mut columns: Vec<Vec<u8>> = Vec::with_capacity(8);
    for i in 0..4 {
        let mut e = vec![0u8; 4];
        e[i] = 1;
        columns.push(e);
    }
    for j in 0..4 {
        columns.push((0..4).map(|i| a[i][j]).collect());
    }
    from_matrix_gf(3, &columns)
}

/// Certifies the P8 candidate: every single-element contraction must be
/// isomorphic to P7 and, dually, every deletion to the dual of P7. (Ranks
/// force this orientation: a deletion from a rank-4 matroid keeps rank 4 and
/// so can never match the rank-3 P7.) The matrix is never trusted on its
/// own; this characterisation is the authority.
fn certify_p8(m: &Matroid) -> Result<()> {
    if m.ground_size() != 8 || m.full_rank() != 4 {
        return Err(Error::P8CertificationFailure {
            detail: format!("candidate has n={}, r={}", m.ground_size(), m.full_rank()),
        });
    }
    let p7 = named(Named::P7)?;
    let p7_dual = p7.dual();
    for e in 0..8 {
        let s = ElementSet::singleton(e);
        if !analysis::are_isomorphic(&m.contract(s)?, &p7) {
            return Err(Error::P8CertificationFailure {
                detail: format!("contraction of {e} is not P7"),
            });
        }
        if !analysis::are_isomorphic(&m.delete(s)?, &p7_dual) {
            return Err(Error::P8CertificationFailure {
                detail: format!("deletion of {e} is not the dual of P7"),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::are_isomorphic;

    #[test]
    fn uniform_examples() {
        let u26 = uniform(2, 6).unwrap();
        assert_eq!(u26.full_rank(), 2);
        assert!(u26.is_simple());

        let loops = uniform(0, 4).unwrap();
        assert_eq!(loops.loops().len(), 4);

        assert!(matches!(uniform(3, 2), Err(Error::BadParameters { .. })));
    }

    #[test]
    fn multi_parallel_uniform_sizes() {
        let m = multi_parallel_uniform(2, 4, &[2, 2, 2]).unwrap();
        assert_eq!(m.ground_size(), 7);
        assert_eq!(m.parallel_class_profile(), vec![2, 2, 2, 1]);

        let d = doubled_uniform(2, 3).unwrap();
        assert_eq!(d.ground_size(), 6);
        assert_eq!(d.parallel_class_profile(), vec![2, 2, 2]);
    }

    #[test]
    fn free_tipless_rank3_spike_is_u36() {
        let s = spike(&SpikeSpec::free_tipless(3)).unwrap();
        assert_eq!(s, uniform(3, 6).unwrap());
    }

    #[test]
    fn tipless_equals_tipped_with_tip_deleted() {
        for traversals in [vec![], vec![0b000, 0b111]] {
            let tipless =
                spike(&SpikeSpec { rank: 3, tip_class_size: 0, traversals: traversals.clone() })
                    .unwrap();
            let tipped =
                spike(&SpikeSpec { rank: 3, tip_class_size: 1, traversals }).unwrap();
            assert_eq!(tipless, tipped.delete(ElementSet::singleton(0)).unwrap());
        }
    }

    #[test]
    fn overloaded_tip_matches_parallel_replace() {
        let spec = SpikeSpec { rank: 3, tip_class_size: 3, traversals: vec![0b101] };
        let direct = spike(&spec).unwrap();
        let tipped = spike(&SpikeSpec { rank: 3, tip_class_size: 1, traversals: vec![0b101] })
            .unwrap();
        let replaced = transforms::parallel_replace(&tipped, &[(0, 3)]).unwrap();
        assert!(are_isomorphic(&direct, &replaced));
    }

    #[test]
    fn traversal_legality() {
        // Sharing 0 legs is fine at rank 3 (limit r-2 = 1).
        assert!(spike(&SpikeSpec { rank: 3, tip_class_size: 1, traversals: vec![0b000, 0b111] })
            .is_ok());
        // Sharing 2 legs is illegal.
        let err = spike(&SpikeSpec { rank: 3, tip_class_size: 1, traversals: vec![0b000, 0b100] })
            .unwrap_err();
        assert!(matches!(err, Error::IllegalTraversalPair { .. }));
    }

    #[test]
    fn rank4_leg_unions_are_4_circuits_and_cocircuits() {
        let spec = SpikeSpec { rank: 4, tip_class_size: 0, traversals: vec![0b0000, 0b1111] };
        let s = spike(&spec).unwrap();
        let circuits = s.circuits();
        let cocircuits = s.cocircuits();
        for i in 0..4 {
            for j in i + 1..4 {
                let (xi, yi) = spec.leg(i);
                let (xj, yj) = spec.leg(j);
                let union = ElementSet::from_elements([xi, yi, xj, yj]);
                assert!(circuits.contains(&union));
                assert!(cocircuits.contains(&union));
            }
        }
    }

    #[test]
    fn spike_leg_union_ranks() {
        // Unions of legs indexed by proper non-empty J have rank |J| + 1
        // when no traversal lies inside.
        let spec = SpikeSpec { rank: 4, tip_class_size: 1, traversals: vec![0b0011] };
        let s = spike(&spec).unwrap();
        for j_mask in 1u32..(1 << 4) - 1 {
            let mut union = ElementSet::EMPTY;
            for i in 0..4 {
                if j_mask >> i & 1 == 1 {
                    let (x, y) = spec.leg(i);
                    union = union.with(x).with(y);
                }
            }
            assert_eq!(
                s.rank(union).unwrap(),
                j_mask.count_ones() as usize + 1,
                "legs {j_mask:#b}"
            );
        }
        // Tip plus any leg is a triangle.
        let (x, y) = spec.leg(2);
        assert_eq!(s.rank(ElementSet::from_elements([0, x, y])).unwrap(), 2);
    }

    #[test]
    fn p7_has_five_triangles_three_through_tip() {
        let p7 = named(Named::P7).unwrap();
        let triangles: Vec<ElementSet> =
            p7.circuits().into_iter().filter(|c| c.len() == 3).collect();
        assert_eq!(triangles.len(), 5);
        assert_eq!(triangles.iter().filter(|t| t.contains(0)).count(), 3);
    }

    #[test]
    fn p7_relaxations_differ_by_basis_count() {
        let p7 = named(Named::P7).unwrap();
        let p7m = named(Named::P7Minus).unwrap();
        let p7mm = named(Named::P7DoubleMinus).unwrap();
        assert_eq!(p7m.basis_count(), p7.basis_count() + 1);
        assert_eq!(p7mm.basis_count(), p7.basis_count() + 2);
        assert!(!are_isomorphic(&p7, &p7m));
        assert!(!are_isomorphic(&p7m, &p7mm));
        assert!(!are_isomorphic(&p7, &p7mm));
    }

    #[test]
    fn p8_certifies_against_p7() {
        // named() runs the certification internally; it must succeed.
        let p8 = named(Named::P8).unwrap();
        assert_eq!(p8.ground_size(), 8);
        assert_eq!(p8.full_rank(), 4);
        assert!(are_isomorphic(&p8, &p8.dual()));
    }

    #[test]
    fn o7_has_exactly_three_circuit_hyperplanes() {
        let o7 = named(Named::O7).unwrap();
        assert_eq!(o7.ground_size(), 7);
        assert_eq!(o7.full_rank(), 3);
        assert_eq!(o7.circuit_hyperplanes().len(), 3);

        // Relaxing any one yields O7-.
        let o7m = named(Named::O7Minus).unwrap();
        for ch in o7.circuit_hyperplanes() {
            assert!(are_isomorphic(&transforms::relax(&o7, ch).unwrap(), &o7m));
        }
    }

    #[test]
    fn ag23_del_e_shape() {
        let m = named(Named::AG23DelE).unwrap();
        assert_eq!(m.ground_size(), 8);
        assert_eq!(m.full_rank(), 3);
        assert!(m.is_simple());
        // No 4-point line: every rank-2 flat has at most 3 elements.
        assert!(m.flats(2).iter().all(|f| f.len() <= 3));
    }

    #[test]
    fn graphic_and_linear_constructors() {
        let w4 = wheel(4).unwrap();
        assert_eq!(w4.ground_size(), 8);
        assert_eq!(w4.full_rank(), 4);

        let f7 = named(Named::F7).unwrap();
        assert_eq!(f7.ground_size(), 7);
        assert_eq!(f7.full_rank(), 3);
        assert_eq!(f7.circuits().iter().filter(|c| c.len() == 3).count(), 7);

        let k4 = from_graph(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(are_isomorphic(&k4, &named(Named::MW3).unwrap()));
    }

    #[test]
    fn wheel4_rim_is_a_circuit_hyperplane() {
        let w4 = named(Named::MW4).unwrap();
        let rim = ElementSet(0b1111_0000);
        assert!(w4.circuit_hyperplanes().contains(&rim));
        // The whirl is its relaxation.
        assert!(are_isomorphic(
            &transforms::relax(&w4, rim).unwrap(),
            &named(Named::W4).unwrap()
        ));
    }

    #[test]
    fn whirl_2_is_u24() {
        assert!(are_isomorphic(&whirl(2).unwrap(), &uniform(2, 4).unwrap()));
    }

    #[test]
    fn every_named_constructor_passes_axiom_validation() {
        for which in Named::ALL {
            let m = named(which).unwrap();
            assert!(m.validate_axioms().valid, "{which:?}");
        }
    }
}
