//! Affine Weyl group combinatorics on `sl2` weights under the dot action.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Multiplicities of Weyl modules in a filtration, keyed by highest weight.
pub type WeylFactorMultiset = BTreeMap<i64, u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Reflection {
    S,
    T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseKind {
    Interior,
    Wall,
}

/// A weight in the closure of the fundamental alcove `[-1, l-1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitIndex {
    pub base: i64,
    pub kind: BaseKind,
}

impl OrbitIndex {
    pub fn new(base: i64, l: u32) -> Result<Self> {
        let l = l as i64;
        if !(-1..=l - 1).contains(&base) {
            return Err(Error::NotInRange(base));
        }
        let kind = if base == -1 || base == l - 1 { BaseKind::Wall } else { BaseKind::Interior };
        Ok(Self { base, kind })
    }
}

pub fn check_l(l: u32) -> Result<()> {
    if l <= 2 {
        return Err(Error::InvalidParameter(format!("l must exceed 2, got {l}")));
    }
    Ok(())
}

/// `s_r.k = -k-2+(4r+2)l` and `t_r.k = -k-2+4rl`.
pub fn reflect(kind: Reflection, r: i64, k: i64, l: u32) -> i64 {
    let l = l as i64;
    match kind {
        Reflection::S => -k - 2 + (4 * r + 2) * l,
        Reflection::T => -k - 2 + 4 * r * l,
    }
}

/// The linkage class of `x` intersected with `[-1, cutoff]`, sorted.
pub fn orbit(x: i64, l: u32, cutoff: i64) -> Vec<i64> {
    let p = 2 * l as i64;
    let mut out = vec![];
    for rep in [x.rem_euclid(p), (-x - 2).rem_euclid(p)] {
        let mut k = rep;
        // Step down to the smallest element >= -1.
        while k - p >= -1 {
            k -= p;
        }
        while k < -1 {
            k += p;
        }
        while k <= cutoff {
            out.push(k);
            k += p;
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// The weights of the block of `x` up to `cutoff`: the orbit without the
/// Steinberg-type weight `-1`, which indexes no module.
pub fn block(x: i64, l: u32, cutoff: i64) -> Vec<i64> {
    orbit(x, l, cutoff).into_iter().filter(|&k| k >= 0).collect()
}

/// The unique orbit element in the `i`-th alcove (or its closure on walls).
pub fn indexed_weight(base: OrbitIndex, i: u64, l: u32) -> i64 {
    let li = l as i64;
    let i = i as i64;
    let lo = i * li - 1;
    let hi = (i + 1) * li - 1;
    let cands = orbit(base.base, l, hi);
    let hit = match base.kind {
        BaseKind::Interior => cands.into_iter().find(|&k| lo < k && k < hi),
        BaseKind::Wall => cands.into_iter().find(|&k| lo <= k && k <= hi),
    };
    hit.expect("every alcove meets every orbit")
}

/// For a non-simple `Δ_q(i)` returns the linked lower weight `al+b` where
/// `i = (a+2)l-b-2`; `None` when `i < l` or `i ≡ -1 mod l`.
pub fn linked_lower_weight(i: i64, l: u32) -> Option<i64> {
    let l = l as i64;
    if i < l || (i + 1) % l == 0 {
        return None;
    }
    let a2 = (i + 2 + l - 1) / l;
    let b = a2 * l - i - 2;
    Some((a2 - 2) * l + b)
}

/// Weyl factors of `Δ_q(i) ⊗ Δ_q(i')` (equally of `T(i) ⊗ T(i')` for the weights in question).
pub fn tensor_weyl_factors(i: i64, j: i64) -> WeylFactorMultiset {
    let mut out = WeylFactorMultiset::new();
    if i < 0 || j < 0 {
        return out;
    }
    let mut k = (i - j).abs();
    while k <= i + j {
        out.insert(k, 1);
        k += 2;
    }
    out
}

/// Tensors every Weyl factor of `factors` with `Δ_q(j)`.
pub fn tensor_multiset(factors: &WeylFactorMultiset, j: i64) -> WeylFactorMultiset {
    let mut out = WeylFactorMultiset::new();
    for (&w, &m) in factors {
        for (k, n) in tensor_weyl_factors(w, j) {
            *out.entry(k).or_insert(0) += m * n;
        }
    }
    out
}

/// Weyl factors of `T(1)^{⊗k}`.
pub fn tensor_power_factors(word: &[i64]) -> WeylFactorMultiset {
    let mut acc = WeylFactorMultiset::from([(0, 1)]);
    for &j in word {
        acc = tensor_multiset(&acc, j);
    }
    acc
}

pub fn tilting_weyl_factors(i: i64, l: u32) -> WeylFactorMultiset {
    let mut out = WeylFactorMultiset::new();
    if i < 0 {
        return out;
    }
    out.insert(i, 1);
    if let Some(low) = linked_lower_weight(i, l) {
        out.insert(low, 1);
    }
    out
}

/// Greedy highest-weight peeling into indecomposable tilting modules.
pub fn decompose_into_tiltings(factors: &WeylFactorMultiset, l: u32) -> Result<BTreeMap<i64, u64>> {
    let mut rest: BTreeMap<i64, i64> = factors
        .iter()
        .filter(|(&w, &m)| w >= 0 && m > 0)
        .map(|(&w, &m)| (w, m as i64))
        .collect();
    let mut out = BTreeMap::new();
    while let Some((&top, &mult)) = rest.iter().next_back() {
        for (w, n) in tilting_weyl_factors(top, l) {
            let e = rest.entry(w).or_insert(0);
            *e -= mult * n as i64;
            if *e < 0 {
                return Err(Error::NotTiltingCharacter { weight: w });
            }
            if *e == 0 {
                rest.remove(&w);
            }
        }
        *out.entry(top).or_insert(0) += mult as u64;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    // Orbit by closure under all reflections whose image stays in a window.
    fn bfs_orbit(x: i64, l: u32, cutoff: i64) -> Vec<i64> {
        let mut seen = BTreeSet::from([x]);
        let mut todo = vec![x];
        let bound = cutoff + 4 * l as i64;
        while let Some(k) = todo.pop() {
            for r in -(bound / l as i64) - 2..=(bound / l as i64) + 2 {
                for kind in [Reflection::S, Reflection::T] {
                    let y = reflect(kind, r, k, l);
                    if (-1 - 4 * l as i64..=bound).contains(&y) && seen.insert(y) {
                        todo.push(y);
                    }
                }
            }
        }
        seen.into_iter().filter(|&k| (-1..=cutoff).contains(&k)).collect()
    }

    #[test]
    fn reflections() {
        assert_eq!(reflect(Reflection::S, 0, -1, 3), 5);
        assert_eq!(reflect(Reflection::T, 0, -1, 3), -1);
        assert_eq!(reflect(Reflection::S, 0, 2, 3), 2);
    }

    #[test]
    fn orbits_match_closure() {
        for l in 3..=6u32 {
            for x in -1..l as i64 {
                assert_eq!(orbit(x, l, 40), bfs_orbit(x, l, 40), "x = {x}, l = {l}");
            }
        }
        assert_eq!(orbit(0, 3, 12), vec![0, 4, 6, 10, 12]);
        assert_eq!(orbit(1, 3, 9), vec![1, 3, 7, 9]);
        assert_eq!(orbit(2, 3, 8), vec![2, 8]);
        assert_eq!(orbit(-1, 3, 12), vec![-1, 5, 11]);
        assert_eq!(block(-1, 3, 12), vec![5, 11]);
    }

    #[test]
    fn indexing() {
        let lam = OrbitIndex::new(0, 3).unwrap();
        assert_eq!(lam.kind, BaseKind::Interior);
        assert_eq!(indexed_weight(lam, 0, 3), 0);
        assert_eq!(indexed_weight(lam, 1, 3), 4);
        let mu = OrbitIndex::new(-1, 3).unwrap();
        assert_eq!(indexed_weight(mu, 0, 3), -1);
        assert_eq!(indexed_weight(mu, 1, 3), 5);
        assert_eq!(indexed_weight(mu, 2, 3), 5);
        let lam: Vec<_> = (0..6).map(|i| indexed_weight(lam, i, 3)).collect();
        let gaps: Vec<_> = lam.windows(2).map(|w| w[1] - w[0]).collect();
        assert_eq!(gaps, vec![4, 2, 4, 2, 4]);
    }

    #[test]
    fn factors() {
        assert_eq!(tensor_weyl_factors(1, 1), WeylFactorMultiset::from([(0, 1), (2, 1)]));
        assert_eq!(tensor_weyl_factors(0, 5), WeylFactorMultiset::from([(5, 1)]));
        assert_eq!(tensor_weyl_factors(2, 3), WeylFactorMultiset::from([(1, 1), (3, 1), (5, 1)]));
        assert_eq!(tilting_weyl_factors(4, 3), WeylFactorMultiset::from([(0, 1), (4, 1)]));
        assert_eq!(tilting_weyl_factors(2, 3), WeylFactorMultiset::from([(2, 1)]));
        assert_eq!(tilting_weyl_factors(6, 3), WeylFactorMultiset::from([(4, 1), (6, 1)]));
        assert!(tilting_weyl_factors(-2, 3).is_empty());
    }

    #[test]
    fn decompositions() {
        let t11 = tensor_weyl_factors(1, 1);
        assert_eq!(decompose_into_tiltings(&t11, 3).unwrap(), BTreeMap::from([(0, 1), (2, 1)]));
        let t4 = WeylFactorMultiset::from([(4, 1), (0, 1)]);
        assert_eq!(decompose_into_tiltings(&t4, 3).unwrap(), BTreeMap::from([(4, 1)]));
        assert!(decompose_into_tiltings(&WeylFactorMultiset::new(), 3).unwrap().is_empty());
        let bad = WeylFactorMultiset::from([(4, 1)]);
        assert!(matches!(decompose_into_tiltings(&bad, 3), Err(Error::NotTiltingCharacter { weight: 0 })));
    }
}
