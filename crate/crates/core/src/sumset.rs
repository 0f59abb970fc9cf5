//! Exact subset-sum and sumset computation over `Z_p` and the plane, plus
//! verifiers for the three inequality bounds the rest of the crate leans on.
//!
//! Everything is bit-vector dynamic programming: a width-`p` cyclic bit
//! vector holds the reachable sums, and admitting an element `x` is a single
//! rotate-and-or pass. The empty subset is a recurring subtlety: the
//! subset-sum bound of Olson's theorem is only correct when the empty sum `0`
//! is counted, while zero-sum detection must exclude it. Both conventions are
//! exposed through an explicit `include_empty` flag rather than picking one.

use crate::bits::{ModBitSet, PlaneBitSet};
use crate::group::{Modulus, PlanePoint, PlaneSet, Residue};
use crate::{Error, Result};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// A finite set of distinct residues mod `p`, kept sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResidueSet {
    modulus: Modulus,
    values: Vec<u64>,
}

impl ResidueSet {
    /// Build from raw integers; values are reduced mod `p` and duplicates
    /// (after reduction) are rejected.
    pub fn new(m: Modulus, values: &[u64]) -> Result<Self> {
        let mut values: Vec<u64> = values.iter().map(|&v| v % m.value()).collect();
        values.sort_unstable();
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement);
        }
        Ok(ResidueSet { modulus: m, values })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn residues(&self) -> Vec<Residue> {
        self.values.iter().map(|&v| self.modulus.residue(v)).collect()
    }

    pub fn contains(&self, v: u64) -> bool {
        self.values.binary_search(&(v % self.modulus.value())).is_ok()
    }
}

/// A subset of `Z_p` as a bit vector, remembering whether the empty subset's
/// sum was admitted when it was built.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SumSet {
    modulus: Modulus,
    bits: ModBitSet,
    includes_empty: bool,
}

impl SumSet {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn includes_empty(&self) -> bool {
        self.includes_empty
    }

    pub fn contains(&self, v: u64) -> bool {
        self.bits.test((v % self.modulus.value()) as usize)
    }

    /// Number of distinct sums.
    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// True when every residue is a sum.
    pub fn is_all(&self) -> bool {
        self.bits.is_full()
    }

    pub fn values(&self) -> Vec<u64> {
        self.bits.ones().map(|i| i as u64).collect()
    }
}

/// Core cyclic DP shared by the set and multiset entry points.
fn sums_dp(m: Modulus, items: &[u64], include_empty: bool) -> SumSet {
    let p = m.value() as usize;
    let mut all = ModBitSet::new(p);
    all.set(0);
    let mut nonempty = ModBitSet::new(p);
    let mut scratch = ModBitSet::new(p);
    for &x in items {
        all.rotated_into(x as usize % p, &mut scratch);
        nonempty.or_assign(&scratch);
        all.or_assign(&scratch);
    }
    SumSet {
        modulus: m,
        bits: if include_empty { all } else { nonempty },
        includes_empty: include_empty,
    }
}

/// `Σ(A)`: all subset sums of a set of distinct residues. With
/// `include_empty` the empty subset contributes `0`.
pub fn subset_sums(a: &ResidueSet, include_empty: bool) -> SumSet {
    sums_dp(a.modulus(), a.values(), include_empty)
}

/// Subset sums of a multiset (items may repeat; each occurrence may be used
/// at most once). Needed for projected multisets `π(B)`.
pub fn multiset_subset_sums(m: Modulus, items: &[u64], include_empty: bool) -> SumSet {
    sums_dp(m, items, include_empty)
}

/// `Σ_k(A)`: sums of exactly-`k`-element subsets.
pub fn fixed_size_subset_sums(a: &ResidueSet, k: usize) -> Result<SumSet> {
    if k > a.len() {
        return Err(Error::CardinalityOutOfRange { k, size: a.len() });
    }
    let p = a.modulus().value() as usize;
    let mut dp: Vec<ModBitSet> = (0..=k).map(|_| ModBitSet::new(p)).collect();
    dp[0].set(0);
    let mut scratch = ModBitSet::new(p);
    for &x in a.values() {
        for c in (1..=k).rev() {
            dp[c - 1].rotated_into(x as usize, &mut scratch);
            dp[c].or_assign(&scratch);
        }
    }
    Ok(SumSet {
        modulus: a.modulus(),
        bits: dp.pop().expect("k+1 layers"),
        includes_empty: k == 0,
    })
}

/// `A + B = {x + y : x ∈ A, y ∈ B}`.
pub fn pairwise_sumset(a: &ResidueSet, b: &ResidueSet) -> SumSet {
    assert_eq!(a.modulus(), b.modulus());
    let p = a.modulus().value() as usize;
    let mut b_bits = ModBitSet::new(p);
    for &y in b.values() {
        b_bits.set(y as usize);
    }
    let mut out = ModBitSet::new(p);
    for &x in a.values() {
        out.or_rotated(&b_bits, x as usize);
    }
    SumSet {
        modulus: a.modulus(),
        bits: out,
        includes_empty: false,
    }
}

/// One `lhs >= rhs` comparison from a verifier.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BoundReport {
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}

impl BoundReport {
    fn new(lhs: u64, rhs: u64) -> Self {
        BoundReport {
            lhs,
            rhs,
            holds: lhs >= rhs,
        }
    }

    /// Signed slack `lhs - rhs`.
    pub fn slack(&self) -> i64 {
        self.lhs as i64 - self.rhs as i64
    }
}

/// Report for the fixed-cardinality subset-sum bound
/// `|Σ_k(A)| >= min(p, k(|A|-k)+1)`, with the full-coverage corollary at
/// `|A| >= ℓ = ⌊√(4p-7)⌋+1`, `k = ⌊ℓ/2⌋`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DdshReport {
    pub set_size: u64,
    pub k: u64,
    pub bound: BoundReport,
    pub corollary: Option<DdshCorollary>,
    pub holds: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DdshCorollary {
    pub ell: u64,
    pub covers_all: bool,
}

pub fn verify_ddsh(a: &ResidueSet, k: usize) -> Result<DdshReport> {
    if k == 0 || k > a.len() {
        return Err(Error::CardinalityOutOfRange { k, size: a.len() });
    }
    let p = a.modulus().value();
    let sums = fixed_size_subset_sums(a, k)?;
    let lhs = sums.len() as u64;
    let s = a.len() as u64;
    let rhs = p.min(k as u64 * (s - k as u64) + 1);
    let bound = BoundReport::new(lhs, rhs);
    let ell = (4 * p - 7).isqrt() + 1;
    let corollary = (s >= ell && k as u64 == ell / 2).then(|| DdshCorollary {
        ell,
        covers_all: sums.is_all(),
    });
    Ok(DdshReport {
        set_size: s,
        k: k as u64,
        holds: bound.holds && corollary.map_or(true, |c| c.covers_all),
        bound,
        corollary,
    })
}

/// Report for the sumset bound `|A + B| >= min(p, |A| + |B| - 1)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CdReport {
    pub size_a: u64,
    pub size_b: u64,
    pub bound: BoundReport,
}

pub fn verify_cd(a: &ResidueSet, b: &ResidueSet) -> Result<CdReport> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput("sumset bound needs nonempty sets"));
    }
    let p = a.modulus().value();
    let lhs = pairwise_sumset(a, b).len() as u64;
    let rhs = p.min(a.len() as u64 + b.len() as u64 - 1);
    Ok(CdReport {
        size_a: a.len() as u64,
        size_b: b.len() as u64,
        bound: BoundReport::new(lhs, rhs),
    })
}

/// Report for the subset-sum size bound
/// `|Σ(A)| >= min((p+3)/2, s(s+1)/2 + δ)` for asymmetric zero-free sets.
/// The left side counts the empty sum.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OlsonSigmaReport {
    pub set_size: u64,
    pub delta: u64,
    pub bound: BoundReport,
}

pub fn verify_olson_sigma(a: &ResidueSet) -> Result<OlsonSigmaReport> {
    let p = a.modulus().value();
    if a.contains(0) {
        return Err(Error::Precondition("0 must not be in the set".into()));
    }
    for &x in a.values() {
        if a.contains(p - x) {
            return Err(Error::Precondition(format!(
                "set is not asymmetric: both {x} and {} present",
                p - x
            )));
        }
    }
    let lhs = subset_sums(a, true).len() as u64;
    let s = a.len() as u64;
    let delta = u64::from(s % 2 == 0);
    let rhs = ((p + 3) / 2).min(s * (s + 1) / 2 + delta);
    Ok(OlsonSigmaReport {
        set_size: s,
        delta,
        bound: BoundReport::new(lhs, rhs),
    })
}

/// Reachable sums of a plane set as a `p²`-bit vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlaneSumSet {
    modulus: Modulus,
    bits: PlaneBitSet,
    includes_empty: bool,
}

impl PlaneSumSet {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn includes_empty(&self) -> bool {
        self.includes_empty
    }

    pub fn contains(&self, x: u64, y: u64) -> bool {
        self.bits.test(x as usize, y as usize)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// All subset sums of a plane set.
pub fn plane_subset_sums(a: &PlaneSet, include_empty: bool) -> PlaneSumSet {
    let p = a.modulus().value() as usize;
    let mut all = PlaneBitSet::new(p);
    all.set(0, 0);
    let mut nonempty = PlaneBitSet::new(p);
    let mut scratch = PlaneBitSet::new(p);
    for &q in a.points() {
        scratch.clear_all();
        scratch.or_shifted(&all, q.x() as usize, q.y() as usize);
        nonempty.or_assign(&scratch);
        all.or_assign(&scratch);
    }
    PlaneSumSet {
        modulus: a.modulus(),
        bits: if include_empty { all } else { nonempty },
        includes_empty: include_empty,
    }
}

/// A nonempty subset of the input whose elements sum to `(0, 0)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZeroSumWitness {
    subset: Vec<PlanePoint>,
}

impl ZeroSumWitness {
    fn checked(a: &PlaneSet, subset: Vec<PlanePoint>) -> Self {
        assert!(!subset.is_empty(), "zero-sum witness must be nonempty");
        let m = a.modulus();
        let mut sum = PlanePoint::new(m, 0, 0);
        for &pt in &subset {
            assert!(a.contains(pt), "witness element {pt} not in input set");
            sum = sum.add(pt);
        }
        assert!(sum.is_zero(), "witness sums to {sum}, not zero");
        ZeroSumWitness { subset }
    }

    pub fn points(&self) -> &[PlanePoint] {
        &self.subset
    }

    pub fn coordinate_pairs(&self) -> Vec<[u64; 2]> {
        self.subset.iter().map(|pt| [pt.x(), pt.y()]).collect()
    }
}

/// Does some nonempty subset sum to `(0, 0)`? Tracks one predecessor per
/// newly reached sum so a witness can be reconstructed; the witness is
/// re-verified before it is returned.
pub fn contains_zero_sum(a: &PlaneSet) -> (bool, Option<ZeroSumWitness>) {
    let p = a.modulus().value() as usize;
    let mut all = PlaneBitSet::new(p);
    all.set(0, 0);
    // pred[pos] = (element index, previous sum position) when pos was first reached
    let mut pred: Vec<Option<(u32, u32)>> = vec![None; p * p];
    let mut shifted = PlaneBitSet::new(p);
    for (i, &q) in a.points().iter().enumerate() {
        let neg = q.neg().index();
        if all.test_index(neg) {
            let mut subset = reconstruct(a, &pred, neg);
            subset.push(q);
            return (true, Some(ZeroSumWitness::checked(a, subset)));
        }
        let (dx, dy) = (q.x() as usize, q.y() as usize);
        shifted.clear_all();
        shifted.or_shifted(&all, dx, dy);
        for pos in shifted.ones() {
            if !all.test_index(pos) {
                let (x, y) = (pos / p, pos % p);
                let prev = ((x + p - dx) % p) * p + (y + p - dy) % p;
                pred[pos] = Some((i as u32, prev as u32));
            }
        }
        all.or_assign(&shifted);
    }
    (false, None)
}

fn reconstruct(a: &PlaneSet, pred: &[Option<(u32, u32)>], mut pos: usize) -> Vec<PlanePoint> {
    let mut subset = Vec::new();
    while pos != 0 {
        let (elem, prev) = pred[pos].expect("reached sums carry a predecessor");
        subset.push(a.points()[elem as usize]);
        pos = prev as usize;
    }
    subset.reverse();
    subset
}

/// Exact number of subsets (including the empty one) summing to `(0, 0)`.
pub fn count_zero_sum_subsets(a: &PlaneSet) -> BigUint {
    let p = a.modulus().value() as usize;
    let n = p * p;
    let mut counts: Vec<BigUint> = vec![BigUint::ZERO; n];
    counts[0] = BigUint::from(1u8);
    let mut next: Vec<BigUint> = vec![BigUint::ZERO; n];
    for &q in a.points() {
        let (dx, dy) = (q.x() as usize, q.y() as usize);
        for x in 0..p {
            for y in 0..p {
                let prev = ((x + p - dx) % p) * p + (y + p - dy) % p;
                next[x * p + y] = &counts[x * p + y] + &counts[prev];
            }
        }
        std::mem::swap(&mut counts, &mut next);
    }
    counts.swap_remove(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn m(p: u64) -> Modulus {
        Modulus::new(p).unwrap()
    }

    fn rs(p: u64, vals: &[u64]) -> ResidueSet {
        ResidueSet::new(m(p), vals).unwrap()
    }

    fn naive_sums(p: u64, elems: &[u64], include_empty: bool) -> HashSet<u64> {
        let mut out = HashSet::new();
        for mask in 0u32..1 << elems.len() {
            if mask == 0 && !include_empty {
                continue;
            }
            let mut s = 0u64;
            for (i, &x) in elems.iter().enumerate() {
            if mask >> i & 1 == 1 {
                    s = (s + x) % p;
                }
            }
            out.insert(s);
        }
        out
    }

    fn naive_fixed(p: u64, elems: &[u64], k: usize) -> HashSet<u64> {
        let mut out = HashSet::new();
        for mask in 0u32..1 << elems.len() {
            if mask.count_ones() as usize != k {
                continue;
            }
            let mut s = 0u64;
            for (i, &x) in elems.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    s = (s + x) % p;
                }
            }
            out.insert(s);
        }
        out
    }

    fn naive_plane_zero_count(p: u64, pts: &[(u64, u64)]) -> u64 {
        let mut count = 0;
        for mask in 0u32..1 << pts.len() {
            let (mut sx, mut sy) = (0u64, 0u64);
            for (i, &(x, y)) in pts.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    sx = (sx + x) % p;
                    sy = (sy + y) % p;
                }
            }
            if sx == 0 && sy == 0 {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn subset_sum_examples() {
        let empty = rs(7, &[]);
        assert!(subset_sums(&empty, false).is_empty());
        assert_eq!(subset_sums(&empty, true).values(), vec![0]);

        let zero = rs(7, &[0]);
        assert_eq!(subset_sums(&zero, false).values(), vec![0]);

        let a = rs(7, &[1, 2]);
        assert_eq!(subset_sums(&a, true).values(), vec![0, 1, 2, 3]);
        assert_eq!(subset_sums(&a, false).values(), vec![1, 2, 3]);
    }

    #[test]
    fn fixed_size_examples() {
        let a = rs(7, &[1, 2, 3]);
        assert_eq!(fixed_size_subset_sums(&a, 0).unwrap().values(), vec![0]);
        assert_eq!(fixed_size_subset_sums(&a, 2).unwrap().values(), vec![3, 4, 5]);
        assert!(fixed_size_subset_sums(&a, 4).is_err());

        let a = rs(11, &[0, 1, 2, 3, 4, 5, 6]);
        assert!(fixed_size_subset_sums(&a, 3).unwrap().is_all());
    }

    #[test]
    fn pairwise_examples() {
        let zero = rs(5, &[0]);
        let b = rs(5, &[1, 3, 4]);
        assert_eq!(pairwise_sumset(&zero, &b).values(), b.values());

        let a = rs(5, &[0, 1]);
        assert_eq!(pairwise_sumset(&a, &a).values(), vec![0, 1, 2]);

        let full = rs(5, &[0, 1, 2, 3, 4]);
        let c = rs(5, &[2]);
        assert!(pairwise_sumset(&full, &c).is_all());
    }

    #[test]
    fn ddsh_examples() {
        let a = rs(7, &[1, 2, 3]);
        let r = verify_ddsh(&a, 2).unwrap();
        assert_eq!((r.bound.lhs, r.bound.rhs), (3, 3));
        assert!(r.holds);

        // k = |A|: only the full subset
        let r = verify_ddsh(&a, 3).unwrap();
        assert_eq!((r.bound.lhs, r.bound.rhs), (1, 1));
        assert!(r.holds);

        // corollary: p = 11, ell = 7, k = 3 covers everything
        let a = rs(11, &[0, 1, 2, 3, 4, 5, 6]);
        let r = verify_ddsh(&a, 3).unwrap();
        let c = r.corollary.expect("corollary applies");
        assert_eq!(c.ell, 7);
        assert!(c.covers_all);
        assert!(r.holds);

        assert!(verify_ddsh(&a, 0).is_err());
    }

    #[test]
    fn cd_examples() {
        let a = rs(5, &[0, 1]);
        let r = verify_cd(&a, &a).unwrap();
        assert_eq!((r.bound.lhs, r.bound.rhs), (3, 3));
        assert!(r.bound.holds);

        let single = rs(5, &[2]);
        let b = rs(5, &[0, 2, 3]);
        let r = verify_cd(&single, &b).unwrap();
        assert_eq!(r.bound.lhs, 3);
        assert_eq!(r.bound.rhs, 3);

        let full = rs(7, &[0, 1, 2, 3, 4, 5, 6]);
        let r = verify_cd(&full, &full).unwrap();
        assert_eq!((r.bound.lhs, r.bound.rhs), (7, 7));

        assert!(verify_cd(&rs(5, &[]), &b).is_err());
    }

    #[test]
    fn olson_sigma_examples() {
        let r = verify_olson_sigma(&rs(7, &[1, 2])).unwrap();
        assert_eq!((r.bound.lhs, r.bound.rhs), (4, 4));
        assert!(r.bound.holds);

        let r = verify_olson_sigma(&rs(5, &[1])).unwrap();
        assert_eq!((r.bound.lhs, r.bound.rhs), (2, 1));

        let r = verify_olson_sigma(&rs(11, &[1, 2, 3])).unwrap();
        assert_eq!((r.bound.lhs, r.bound.rhs), (7, 6));

        assert!(verify_olson_sigma(&rs(7, &[0, 1])).is_err());
        assert!(verify_olson_sigma(&rs(7, &[2, 5])).is_err());
    }

    #[test]
    fn zero_sum_detection_examples() {
        let m3 = m(3);
        let a = PlaneSet::new(m3, &[(0, 0), (1, 2)]).unwrap();
        let (found, witness) = contains_zero_sum(&a);
        assert!(found);
        assert_eq!(witness.unwrap().points(), &[PlanePoint::new(m3, 0, 0)]);

        let a = PlaneSet::new(m3, &[(1, 1), (2, 2)]).unwrap();
        let (found, witness) = contains_zero_sum(&a);
        assert!(found);
        assert_eq!(witness.unwrap().points().len(), 2);

        let a = PlaneSet::new(m3, &[(1, 0), (0, 1), (1, 1)]).unwrap();
        let (found, witness) = contains_zero_sum(&a);
        assert!(!found);
        assert!(witness.is_none());
    }

    #[test]
    fn zero_sum_count_examples() {
        let a = PlaneSet::new(m(5), &[(1, 0)]).unwrap();
        assert_eq!(count_zero_sum_subsets(&a), BigUint::from(1u8));

        let a = PlaneSet::new(m(3), &[(1, 1), (2, 2)]).unwrap();
        assert_eq!(count_zero_sum_subsets(&a), BigUint::from(2u8));

        // all of Z_2 ⊕ Z_2: ∅, {(0,0)}, the nonzero triple, and the full set
        let a = PlaneSet::new(m(2), &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        assert_eq!(count_zero_sum_subsets(&a), BigUint::from(4u8));
        assert_eq!(
            naive_plane_zero_count(2, &[(0, 0), (0, 1), (1, 0), (1, 1)]),
            4
        );
    }

    #[test]
    fn count_and_detection_agree() {
        // count >= 2 (empty plus something) iff a nonempty zero-sum exists
        let m5 = m(5);
        let sets: Vec<Vec<(u64, u64)>> = vec![
            vec![],
            vec![(1, 2)],
            vec![(1, 2), (4, 3)],
            vec![(1, 0), (2, 0), (3, 0)],
            vec![(1, 1), (2, 3), (0, 4), (3, 2)],
        ];
        for pts in sets {
            let a = PlaneSet::new(m5, &pts).unwrap();
            let count = count_zero_sum_subsets(&a);
            let (found, _) = contains_zero_sum(&a);
            assert_eq!(count >= BigUint::from(2u8), found, "{pts:?}");
        }
    }

    proptest! {
        #[test]
        fn sums_match_naive_enumeration(
            p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]),
            seed in any::<u64>(),
            include_empty in any::<bool>(),
        ) {
            let mut state = seed;
            let mut vals: Vec<u64> = Vec::new();
            for v in 0..p {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                if state >> 62 == 3 {
                    vals.push(v);
                }
            }
            let a = rs(p, &vals);
            let got: HashSet<u64> = subset_sums(&a, include_empty).values().into_iter().collect();
            prop_assert_eq!(got, naive_sums(p, &vals, include_empty));
            for k in 0..=vals.len() {
                let got: HashSet<u64> =
                    fixed_size_subset_sums(&a, k).unwrap().values().into_iter().collect();
                prop_assert_eq!(got, naive_fixed(p, &vals, k));
            }
        }

        #[test]
        fn fixed_size_sums_are_subset_sums(
            p in prop::sample::select(vec![5u64, 7, 11, 13]),
            seed in any::<u64>(),
        ) {
            let mut state = seed;
            let mut vals: Vec<u64> = Vec::new();
            for v in 0..p {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                if state >> 63 == 1 {
                    vals.push(v);
                }
            }
            let a = rs(p, &vals);
            for k in 0..=vals.len() {
                let sigma_k = fixed_size_subset_sums(&a, k).unwrap();
                let sigma = subset_sums(&a, k == 0);
                for v in sigma_k.values() {
                    prop_assert!(sigma.contains(v));
                }
            }
        }

        #[test]
        fn plane_detection_matches_naive(
            p in prop::sample::select(vec![2u64, 3, 5]),
            seed in any::<u64>(),
        ) {
            let mut state = seed;
            let mut pts: Vec<(u64, u64)> = Vec::new();
            for x in 0..p {
                for y in 0..p {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                    if state >> 62 == 3 {
                        pts.push((x, y));
                    }
                }
            }
            let a = PlaneSet::new(m(p), &pts).unwrap();
            let naive_count = naive_plane_zero_count(p, &pts);
            let (found, witness) = contains_zero_sum(&a);
            prop_assert_eq!(found, naive_count > 1);
            prop_assert_eq!(count_zero_sum_subsets(&a), BigUint::from(naive_count));
            if let Some(w) = witness {
                // already verified inside checked(); spot-check distinctness
                let mut pts = w.points().to_vec();
                pts.sort();
                pts.dedup();
                prop_assert_eq!(pts.len(), w.points().len());
            }
        }
    }
}
