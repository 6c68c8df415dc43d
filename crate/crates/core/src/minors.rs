//! Exact minor containment testing and minor enumeration.

use std::collections::BTreeSet;

use crate::analysis::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::ElementSet;
use crate::transforms::MinorWitness;

/// Enumerates the independent sets of a fixed size, in increasing mask order.
fn independent_sets_of_size(m: &Matroid, k: usize) -> Vec<ElementSet> {
    let size = 1u32 << m.ground_size();
    (0..size)
        .filter(|&s| s.count_ones() as usize == k && m.rank_bits(s) as usize == k)
        .map(ElementSet)
        .collect()
}

/// Cheap isomorphism invariants used to filter candidates before canonical
/// comparison.
fn quick_profile(m: &Matroid) -> (usize, usize, usize, Vec<usize>) {
    (m.full_rank(), m.basis_count(), m.loops().len(), m.parallel_class_profile())
}

/// Searches for a minor of `host` isomorphic to `pattern` and returns a
/// witness, or None.
///
/// The search visits only the minor normal form: an independent contraction
/// set of size exactly `r(host) - r(pattern)` paired with a coindependent
/// deletion set, which loses no minors. Contractions are iterated outermost
/// and intermediate contractions are deduplicated by canonical form.
pub fn has_minor(host: &Matroid, pattern: &Matroid) -> Option<MinorWitness> {
    has_minor_with_form(host, pattern, &canonical_form(pattern))
}

/// [`has_minor`] with the pattern's canonical form precomputed, for sweeps
/// that test one pattern against many hosts.
pub fn has_minor_with_form(
    host: &Matroid,
    pattern: &Matroid,
    pattern_form: &CanonicalForm,
) -> Option<MinorWitness> {
    let np = pattern.ground_size();
    let rp = pattern.full_rank();
    if np > host.ground_size() || rp > host.full_rank() {
        return None;
    }
    let c_size = host.full_rank() - rp;
    let d_size = match (host.ground_size() - c_size).checked_sub(np) {
        Some(d) => d,
        None => return None,
    };
    let pattern_profile = quick_profile(pattern);

    let mut seen_contractions: BTreeSet<CanonicalForm> = BTreeSet::new();
    for c in independent_sets_of_size(host, c_size) {
        let contracted = host.contract(c).expect("in range");
        if c_size > 0 && !seen_contractions.insert(canonical_form(&contracted)) {
            continue;
        }
        // Deletion candidates are coindependent sets of the contraction,
        // mapped back through the contraction renumbering. Coindependence in
        // the contraction equals coindependence in the host for sets
        // disjoint from C.
        let survivors: Vec<usize> = c.complement(host.ground_size()).iter().collect();
        for d_local in independent_sets_of_size(&contracted.dual(), d_size) {
            let d = ElementSet::from_elements(d_local.iter().map(|i| survivors[i]));
            let candidate = contracted.delete(d_local).expect("in range");
            if quick_profile(&candidate) != pattern_profile {
                continue;
            }
            if canonical_form(&candidate) == *pattern_form {
                let map = c
                    .union(d)
                    .complement(host.ground_size())
                    .iter()
                    .collect();
                return Some(MinorWitness { contracted: c, deleted: d, element_map: map });
            }
        }
    }
    None
}

/// Enumerates the minors of `host` over all disjoint contraction/deletion
/// pairs. With `up_to_iso` the result is deduplicated by canonical form and
/// sorted; otherwise one form per (C, D) pair is returned in scan order.
pub fn all_minors(host: &Matroid, up_to_iso: bool) -> Result<Vec<CanonicalForm>> {
    let n = host.ground_size();
    if n > 10 {
        return Err(Error::CapacityGuard { size: n, max: 10 });
    }
    let mut out = Vec::new();
    let size = 1u32 << n;
    for c in 0..size {
        for d in ElementSet(c).complement(n).subsets() {
            let (minor, _) = host.minor(ElementSet(c), d)?;
            out.push(canonical_form(&minor));
        }
    }
    if up_to_iso {
        out.sort();
        out.dedup();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, Named};

    #[test]
    fn p8_has_p7_by_single_contraction() {
        let p8 = catalog::named(Named::P8).unwrap();
        let p7 = catalog::named(Named::P7).unwrap();
        let w = has_minor(&p8, &p7).unwrap();
        assert_eq!(w.contracted.len(), 1);
        assert_eq!(w.deleted.len(), 0);

        // Dually, a single deletion reaches the dual of P7.
        let w = has_minor(&p8, &p7.dual()).unwrap();
        assert_eq!(w.contracted.len(), 0);
        assert_eq!(w.deleted.len(), 1);
    }

    #[test]
    fn uniform_minor_by_contraction() {
        let host = catalog::uniform(3, 7).unwrap();
        let pattern = catalog::uniform(2, 6).unwrap();
        let w = has_minor(&host, &pattern).unwrap();
        assert_eq!(w.contracted.len(), 1);
        assert_eq!(w.deleted.len(), 0);
    }

    #[test]
    fn no_minor_when_pattern_is_larger() {
        let host = catalog::uniform(2, 4).unwrap();
        let pattern = catalog::uniform(2, 5).unwrap();
        assert!(has_minor(&host, &pattern).is_none());
    }

    #[test]
    fn minor_relation_is_reflexive_and_transitive() {
        let samples = [
            catalog::uniform(2, 4).unwrap(),
            catalog::named(Named::P7).unwrap(),
            catalog::named(Named::MW4).unwrap(),
        ];
        for m in &samples {
            assert!(has_minor(m, m).is_some());
        }
        // U_{1,3} <= U_{2,5} <= U_{3,7} implies U_{1,3} <= U_{3,7}.
        let a = catalog::uniform(1, 3).unwrap();
        let b = catalog::uniform(2, 5).unwrap();
        let c = catalog::uniform(3, 7).unwrap();
        assert!(has_minor(&b, &a).is_some());
        assert!(has_minor(&c, &b).is_some());
        assert!(has_minor(&c, &a).is_some());
    }

    #[test]
    fn duality_commutes_with_minor_testing() {
        let hosts = [
            catalog::named(Named::P7).unwrap(),
            catalog::named(Named::O7).unwrap(),
            catalog::named(Named::MW4).unwrap(),
        ];
        let patterns = [
            catalog::uniform(2, 4).unwrap(),
            catalog::uniform(1, 3).unwrap(),
            catalog::uniform(2, 5).unwrap(),
        ];
        for h in &hosts {
            for p in &patterns {
                assert_eq!(
                    has_minor(h, p).is_some(),
                    has_minor(&h.dual(), &p.dual()).is_some(),
                );
            }
        }
    }

    #[test]
    fn binary_members_have_no_u24_minor() {
        let u24 = catalog::uniform(2, 4).unwrap();
        for which in [Named::F7, Named::F7Dual, Named::MW3, Named::MW4] {
            let m = catalog::named(which).unwrap();
            assert!(has_minor(&m, &u24).is_none(), "{which:?}");
        }
        for which in [Named::P7, Named::W3, Named::W4, Named::O7Minus] {
            let m = catalog::named(which).unwrap();
            assert!(has_minor(&m, &u24).is_some(), "{which:?}");
        }
    }

    #[test]
    fn all_minors_contains_self_and_empty() {
        let m = catalog::named(Named::P7).unwrap();
        let minors = all_minors(&m, true).unwrap();
        assert!(minors.contains(&canonical_form(&m)));
        assert!(minors.contains(&canonical_form(&catalog::uniform(0, 0).unwrap())));
    }

    #[test]
    fn minors_of_u23_brute_force_census() {
        // Independent oracle: enumerate every (C, D) pair by hand and
        // collect the distinct canonical forms.
        let m = catalog::uniform(2, 3).unwrap();
        let mut forms = BTreeSet::new();
        for c in 0u32..8 {
            for d in ElementSet(c).complement(3).subsets() {
                let (minor, _) = m.minor(ElementSet(c), d).unwrap();
                forms.insert(canonical_form(&minor));
            }
        }
        // U_{0,0}, U_{0,1}, U_{1,1}, U_{1,2}, U_{2,2}, U_{2,3}.
        assert_eq!(forms.len(), 6);
        let minors = all_minors(&m, true).unwrap();
        assert_eq!(minors.len(), 6);

        let err = all_minors(&catalog::uniform(2, 11).unwrap(), true).unwrap_err();
        assert!(matches!(err, Error::CapacityGuard { .. }));
    }
}
