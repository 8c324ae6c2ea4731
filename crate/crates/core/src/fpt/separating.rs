//! `(A, B)`-separating families over `[n]`.

use crate::error::{Error, Result};
use crate::graph::{binomial, VertexSet};

/// Universe size up to which the power set is an acceptable fallback.
pub const POWER_SET_CAP: usize = 20;
/// Largest family that will be materialized.
pub const FAMILY_CAP: u128 = 1 << 22;

/// For disjoint `A, B ⊆ [n]` with `|A| ≤ a`, `|B| ≤ b`, some member
/// contains `A` and misses `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatingFamily {
    pub universe_size: usize,
    pub a: usize,
    pub b: usize,
    pub sets: Vec<VertexSet>,
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Primes used for hashing `x ↦ x mod p`. For `A`, `B` to collide under
/// every prime, each of the `|A||B|` differences (all below `n`) would
/// need all of them as factors; a difference below `n` has at most
/// `log_r n` prime factors `≥ r`, so `ab·⌊log_r n⌋ + 1` primes suffice.
/// Any prime `≥ n` is injective on `[n]`, which caps the list.
fn hash_primes(n: usize, a: usize, b: usize) -> Vec<usize> {
    let r = (a + b).max(2);
    let mut log = 0usize;
    let mut x = 1usize;
    while x.saturating_mul(r) <= n.saturating_sub(1) && x < usize::MAX / r {
        x *= r;
        log += 1;
    }
    let needed = a.saturating_mul(b).saturating_mul(log).saturating_add(1);
    let mut primes = Vec::new();
    let mut p = r;
    loop {
        if is_prime(p) {
            primes.push(p);
            if p >= n || primes.len() >= needed {
                break;
            }
        }
        p += 1;
    }
    primes
}

fn subsets_up_to(p: usize, size: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(p: usize, size: usize, from: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        visit(cur);
        if cur.len() == size {
            return;
        }
        for x in from..p {
            cur.push(x);
            rec(p, size, x + 1, cur, visit);
            cur.pop();
        }
    }
    rec(p, size, 0, &mut Vec::new(), visit);
}

/// Estimated size of the hashed construction.
fn hashed_size(primes: &[usize], small: usize) -> u128 {
    primes
        .iter()
        .map(|&p| {
            (0..=small)
                .map(|i| binomial(p as u128, i as u128))
                .fold(0u128, u128::saturating_add)
        })
        .fold(0u128, u128::saturating_add)
}

/// Hash family `x mod p` over a run of primes, times all bucket sets of
/// size at most `min(a, b)`: preimages of bucket sets when `a ≤ b`,
/// their complements otherwise. Falls back to the power set of `[n]`
/// when that is smaller.
pub fn separating_family(n: usize, a: usize, b: usize) -> Result<SeparatingFamily> {
    let (a, b) = (a.min(n), b.min(n));
    let mut family = SeparatingFamily {
        universe_size: n,
        a,
        b,
        sets: Vec::new(),
    };
    if b == 0 {
        family.sets.push(VertexSet::full(n));
        return Ok(family);
    }
    if a == 0 {
        family.sets.push(VertexSet::new());
        return Ok(family);
    }
    let small = a.min(b);
    let primes = hash_primes(n, a, b);
    let hashed = hashed_size(&primes, small);
    if n <= POWER_SET_CAP && hashed >= 1u128 << n {
        family.sets = (0u64..1 << n)
            .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
            .collect();
        return Ok(family);
    }
    if hashed > FAMILY_CAP {
        return Err(Error::CapExceeded {
            what: "separating family size",
            size: usize::try_from(hashed).unwrap_or(usize::MAX),
            cap: FAMILY_CAP as usize,
        });
    }
    let mut seen = std::collections::HashSet::new();
    for &p in &primes {
        subsets_up_to(p, small, &mut |buckets: &[usize]| {
            let mut hit = vec![false; p];
            for &x in buckets {
                hit[x] = true;
            }
            // a ≤ b: buckets cover h(A). Otherwise they cover h(B) and the
            // set is the complement.
            let set: VertexSet = (0..n).filter(|&v| hit[v % p] == (a <= b)).collect();
            if seen.insert(set.clone()) {
                family.sets.push(set);
            }
        });
    }
    Ok(family)
}

impl SeparatingFamily {
    /// Some member separates `A` from `B`.
    pub fn separates(&self, a: &VertexSet, b: &VertexSet) -> bool {
        self.sets.iter().any(|s| a.is_subset(s) && b.is_disjoint(s))
    }

    /// Checks every disjoint pair within the size bounds; returns the
    /// first pair that no member separates.
    pub fn verify_exhaustive(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.universe_size;
        assert!(n <= POWER_SET_CAP, "exhaustive verification only for small universes");
        // Only maximal pairs matter: if (A, B) is separated, so is every
        // (A', B') with A' ⊆ A, B' ⊆ B. Enumerate A with |A| ≤ a, then B of
        // size exactly min(b, n - |A|) in the complement.
        let mut failure = None;
        subsets_up_to(n, self.a, &mut |aset: &[usize]| {
            if failure.is_some() {
                return;
            }
            let a_set: VertexSet = aset.iter().copied().collect();
            let rest: Vec<usize> = (0..n).filter(|v| !a_set.contains(*v)).collect();
            let want = self.b.min(rest.len());
            subsets_up_to(rest.len(), want, &mut |bidx: &[usize]| {
                if failure.is_some() || bidx.len() != want {
                    return;
                }
                let b_set: VertexSet = bidx.iter().map(|&i| rest[i]).collect();
                if !self.separates(&a_set, &b_set) {
                    failure = Some((a_set.clone(), b_set));
                }
            });
        });
        failure
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_bounds() {
        let f = separating_family(5, 0, 0).unwrap();
        assert_eq!(f.sets.len(), 1);
        assert!(separating_family(5, 0, 3).unwrap().sets[0].is_empty());
        assert_eq!(separating_family(5, 2, 0).unwrap().sets[0].len(), 5);
    }

    #[test]
    fn small_exhaustive() {
        for (n, a, b) in [(8, 1, 1), (12, 2, 3), (12, 3, 1), (9, 3, 3)] {
            let f = separating_family(n, a, b).unwrap();
            assert_eq!(f.verify_exhaustive(), None, "n={n} a={a} b={b}");
        }
    }

    #[test]
    fn hashed_family_is_smaller_than_power_set() {
        let f = separating_family(20, 1, 2).unwrap();
        assert!(f.sets.len() < 1 << 20);
        assert_eq!(f.verify_exhaustive(), None);
    }
}
