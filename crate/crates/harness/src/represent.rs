//! Representability predicates over GF(2) and GF(3), via their excluded
//! minors.

use std::sync::OnceLock;

use spikelab_core::analysis::{canonical_form, CanonicalForm};
use spikelab_core::catalog::{self, Named};
use spikelab_core::minors::has_minor_with_form;
use spikelab_core::Matroid;

fn cached(which: &'static OnceLock<(Matroid, CanonicalForm)>, build: fn() -> Matroid) -> &'static (Matroid, CanonicalForm) {
    which.get_or_init(|| {
        let m = build();
        let form = canonical_form(&m);
        (m, form)
    })
}

fn u24() -> &'static (Matroid, CanonicalForm) {
    static CACHE: OnceLock<(Matroid, CanonicalForm)> = OnceLock::new();
    cached(&CACHE, || catalog::uniform(2, 4).unwrap())
}

fn ternary_patterns() -> &'static Vec<(Matroid, CanonicalForm)> {
    static CACHE: OnceLock<Vec<(Matroid, CanonicalForm)>> = OnceLock::new();
    CACHE.get_or_init(|| {
        [
            catalog::uniform(2, 5).unwrap(),
            catalog::uniform(3, 5).unwrap(),
            catalog::named(Named::F7).unwrap(),
            catalog::named(Named::F7Dual).unwrap(),
        ]
        .into_iter()
        .map(|m| {
            let form = canonical_form(&m);
            (m, form)
        })
        .collect()
    })
}

/// GF(2)-representable, i.e. no U_{2,4}-minor.
pub fn is_binary(m: &Matroid) -> bool {
    let (pattern, form) = u24();
    has_minor_with_form(m, pattern, form).is_none()
}

/// GF(3)-representable, i.e. none of U_{2,5}, U_{3,5}, F7, F7* as a minor.
pub fn is_ternary(m: &Matroid) -> bool {
    ternary_patterns()
        .iter()
        .all(|(pattern, form)| has_minor_with_form(m, pattern, form).is_none())
}

/// Desk-scale cross-oracle for [`is_binary`]: searches for an actual GF(2)
/// column assignment realizing the rank table. Exponential; intended for
/// tests on small ground sets.
pub fn gf2_representable_brute_force(m: &Matroid) -> bool {
    if m.full_rank() == 0 {
        return true;
    }
    fn assign(m: &Matroid, cols: &mut Vec<u32>) -> bool {
        let e = cols.len();
        if e == m.ground_size() {
            return true;
        }
        let r = m.full_rank();
        for v in 0..1u32 << r {
            // The rank of every prefix subset must match; incremental check
            // against all previously assigned subsets.
            cols.push(v);
            let ok = (0..1u32 << e).all(|s| {
                let mut basis: Vec<u32> = Vec::with_capacity(r);
                let mut set = s | (1 << e);
                let mut rank = 0;
                while set != 0 {
                    let i = set.trailing_zeros() as usize;
                    set &= set - 1;
                    let mut v = cols[i];
                    for &b in &basis {
                        let pivot = 31 - b.leading_zeros();
                        if v >> pivot & 1 == 1 {
                            v ^= b;
                        }
                    }
                    if v != 0 {
                        basis.push(v);
                        rank += 1;
                    }
                }
                rank == m.rank_table()[(s | (1 << e)) as usize] as u32
            });
            if ok && assign(m, cols) {
                return true;
            }
            cols.pop();
        }
        false
    }
    assign(m, &mut Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_and_ternary_examples() {
        let w4 = catalog::named(Named::MW4).unwrap();
        assert!(is_binary(&w4));
        assert!(is_ternary(&w4));

        let ag = catalog::named(Named::AG23DelE).unwrap();
        assert!(!is_binary(&ag));
        assert!(is_ternary(&ag));

        let u25 = catalog::uniform(2, 5).unwrap();
        assert!(!is_ternary(&u25));
        assert!(!is_binary(&u25));

        let f7 = catalog::named(Named::F7).unwrap();
        assert!(is_binary(&f7));
        assert!(!is_ternary(&f7));
    }

    #[test]
    fn excluded_minor_test_matches_gf2_search() {
        for m in [
            catalog::named(Named::F7).unwrap(),
            catalog::named(Named::F7Dual).unwrap(),
            catalog::named(Named::MW3).unwrap(),
            catalog::named(Named::P7).unwrap(),
            catalog::named(Named::W3).unwrap(),
            catalog::uniform(2, 4).unwrap(),
            catalog::uniform(3, 6).unwrap(),
            catalog::doubled_uniform(2, 3).unwrap(),
        ] {
            assert_eq!(is_binary(&m), gf2_representable_brute_force(&m), "{m:?}");
        }
    }
}
