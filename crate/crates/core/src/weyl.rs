//! Signed permutations (the Weyl group of type C_k) and the sorting subsets Γ_k.
//!
//! A [`SignedPermutation`] of rank k sends coordinate `s` of a vector to
//! position `perm[s]` after multiplying it by `signs[s]`. Acting on a weight
//! of rank m ≥ k it touches only the first k δ-coordinates.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::weight::Weight;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    /// `perm` holds 0-based targets; `signs` entries must be ±1.
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let k = perm.len();
        if signs.len() != k {
            return Err(Error::Precondition("perm and signs differ in length".into()));
        }
        let mut seen = vec![false; k];
        for &t in &perm {
            if t >= k || std::mem::replace(&mut seen[t], true) {
                return Err(Error::Precondition(format!("{perm:?} is not a permutation")));
            }
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Precondition("signs must be ±1".into()));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn identity(k: usize) -> Self {
        SignedPermutation { perm: (0..k).collect(), signs: vec![1; k] }
    }

    /// Sign change of coordinate `slot` (1-based).
    pub fn flip(k: usize, slot: usize) -> Self {
        let mut s = SignedPermutation::identity(k);
        s.signs[slot - 1] = -1;
        s
    }

    /// Transposition of slots `a` and `b` (1-based).
    pub fn swap(k: usize, a: usize, b: usize) -> Self {
        let mut s = SignedPermutation::identity(k);
        s.perm.swap(a - 1, b - 1);
        s
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Determinant of the signed permutation matrix, i.e. `(−1)^ℓ`.
    pub fn parity(&self) -> i8 {
        let mut visited = vec![false; self.rank()];
        let mut sign = self.signs.iter().product::<i8>();
        for start in 0..self.rank() {
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.perm[i];
                len += 1;
            }
            if len > 0 && len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        let perm = other.perm.iter().map(|&t| self.perm[t]).collect();
        let signs = (0..self.rank()).map(|s| other.signs[s] * self.signs[other.perm[s]]).collect();
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let k = self.rank();
        let mut perm = vec![0; k];
        let mut signs = vec![1; k];
        for s in 0..k {
            perm[self.perm[s]] = s;
            signs[self.perm[s]] = self.signs[s];
        }
        SignedPermutation { perm, signs }
    }

    /// Extends to rank `m` by fixing the trailing coordinates.
    pub fn embed(&self, m: usize) -> Self {
        assert!(m >= self.rank());
        let mut e = SignedPermutation::identity(m);
        e.perm[..self.rank()].copy_from_slice(&self.perm);
        e.signs[..self.rank()].copy_from_slice(&self.signs);
        e
    }

    /// Acts on the first `rank` entries of `v`.
    pub fn apply<T: Copy + Neg<Output = T>>(&self, v: &[T]) -> Vec<T> {
        assert!(v.len() >= self.rank());
        let mut out = v.to_vec();
        for s in 0..self.rank() {
            out[self.perm[s]] = if self.signs[s] < 0 { -v[s] } else { v[s] };
        }
        out
    }

    /// Acts on the δ-coordinates; the ε-coordinate is fixed.
    pub fn act(&self, w: &Weight) -> Result<Weight> {
        if self.rank() > w.m() {
            return Err(Error::RankMismatch { expected: w.m(), found: self.rank() });
        }
        Ok(w.with_delta(self.apply(w.delta())))
    }

    /// Length in the Coxeter generators of C_k, by breadth-first search.
    /// Only intended as a cross-check for small rank.
    pub fn coxeter_length(&self) -> Option<usize> {
        if self.rank() > 3 {
            return None;
        }
        coxeter_lengths(self.rank()).get(self).copied()
    }
}

fn coxeter_lengths(k: usize) -> HashMap<SignedPermutation, usize> {
    let mut gens: Vec<_> = (1..k).map(|i| SignedPermutation::swap(k, i, i + 1)).collect();
    if k > 0 {
        gens.push(SignedPermutation::flip(k, k));
    }
    let mut dist = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(SignedPermutation::identity(k), 0);
    queue.push_back(SignedPermutation::identity(k));
    while let Some(g) = queue.pop_front() {
        let d = dist[&g];
        for s in &gens {
            let h = g.compose(s);
            if !dist.contains_key(&h) {
                dist.insert(h.clone(), d + 1);
                queue.push_back(h);
            }
        }
    }
    dist
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.rank())
            .map(|s| format!("{}{}", if self.signs[s] < 0 { "-" } else { "" }, self.perm[s] + 1))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct SignedPermutationRepr {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl Serialize for SignedPermutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SignedPermutationRepr { perm: self.perm.iter().map(|t| t + 1).collect(), signs: self.signs.clone() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedPermutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = SignedPermutationRepr::deserialize(deserializer)?;
        let perm = r
            .perm
            .iter()
            .map(|&t| t.checked_sub(1).ok_or_else(|| serde::de::Error::custom("targets are 1-based")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        SignedPermutation::new(perm, r.signs).map_err(serde::de::Error::custom)
    }
}

/// Every element of the hyperoctahedral group of rank k (`2^k·k!` of them).
pub fn all_signed_permutations(k: usize) -> Vec<SignedPermutation> {
    fn permute(p: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
        if i == p.len() {
            f(p);
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            permute(p, i + 1, f);
            p.swap(i, j);
        }
    }
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    permute(&mut perm, 0, &mut |p| {
        for mask in 0u32..1 << k {
            let signs = (0..k).map(|s| if mask >> s & 1 == 1 { -1 } else { 1 }).collect();
            out.push(SignedPermutation { perm: p.to_vec(), signs });
        }
    });
    out
}

/// The unique element of Γ_k with the given sign pattern: it maps every
/// strictly decreasing positive vector to a strictly decreasing one.
/// Positive entries keep their order and come first; negated entries follow
/// in reversed order.
pub fn gamma_element(signs: &[i8]) -> SignedPermutation {
    let k = signs.len();
    let mut perm = vec![0; k];
    let mut next = 0;
    for s in (0..k).filter(|&s| signs[s] > 0) {
        perm[s] = next;
        next += 1;
    }
    for s in (0..k).rev().filter(|&s| signs[s] < 0) {
        perm[s] = next;
        next += 1;
    }
    SignedPermutation { perm, signs: signs.to_vec() }
}

/// All 2^k elements of Γ_k, ordered by sign bitmask (bit s set ⇔ coordinate
/// s+1 negated). For k = 0 this is the identity alone.
pub fn enumerate_gamma(k: usize) -> Vec<SignedPermutation> {
    (0u32..1 << k)
        .map(|mask| {
            let signs: Vec<i8> = (0..k).map(|s| if mask >> s & 1 == 1 { -1 } else { 1 }).collect();
            gamma_element(&signs)
        })
        .collect()
}

/// The cycle `τ_i = (i, i+1, …, m)`: slot m moves to slot i and slots
/// i..m−1 shift one place to the right.
pub fn tau(slot: usize, m: usize) -> Result<SignedPermutation> {
    if slot == 0 || slot > m {
        return Err(Error::Precondition(format!("τ index {slot} outside 1..={m}")));
    }
    let mut perm: Vec<usize> = (0..m).collect();
    perm[m - 1] = slot - 1;
    for t in &mut perm[slot - 1..m - 1] {
        *t += 1;
    }
    Ok(SignedPermutation { perm, signs: vec![1; m] })
}

/// A self-conjugate partition `(a_p,…,a₁ | a_p,…,a₁)` in Frobenius notation,
/// stored by its strictly increasing arm lengths.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SelfConjugatePartition {
    arms: Vec<u32>,
}

impl SelfConjugatePartition {
    pub fn new(mut arms: Vec<u32>) -> Result<Self> {
        arms.sort_unstable();
        if arms.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition("Frobenius arms must be distinct".into()));
        }
        Ok(SelfConjugatePartition { arms })
    }

    pub fn empty() -> Self {
        SelfConjugatePartition::default()
    }

    pub fn arms(&self) -> &[u32] {
        &self.arms
    }

    /// Number of diagonal boxes.
    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn size(&self) -> u64 {
        self.arms.iter().map(|&a| 2 * a as u64 + 1).sum()
    }

    /// `Σ (aᵢ + 1) = (|μ| + p)/2`.
    pub fn t_value(&self) -> u64 {
        self.arms.iter().map(|&a| a as u64 + 1).sum()
    }

    /// Row lengths padded with zeros to `len` entries.
    pub fn parts(&self, len: usize) -> Result<Vec<i64>> {
        let p = self.rank();
        // arms in decreasing order: row r (0-based, r < p) has length arm_r + r + 1
        let desc: Vec<i64> = self.arms.iter().rev().map(|&a| a as i64).collect();
        let first = desc.first().map_or(0, |a| a + 1) as usize;
        if first > len {
            return Err(Error::Precondition(format!("partition has {first} rows, more than {len}")));
        }
        let mut rows = vec![0i64; len];
        for (r, row) in rows.iter_mut().enumerate() {
            let r = r as i64;
            *row = if (r as usize) < p {
                desc[r as usize] + r + 1
            } else {
                // cells below the diagonal block: column c (< p) reaches depth arm_c + c + 1
                desc.iter().enumerate().filter(|&(c, &a)| a + c as i64 + 1 > r).count() as i64
            };
        }
        Ok(rows)
    }

    /// All self-conjugate partitions whose arms are at most `max_arm`
    /// (i.e. with at most `max_arm + 1` rows). `None` yields only the empty one.
    pub fn all_with_max_arm(max_arm: Option<u32>) -> Vec<Self> {
        let Some(max_arm) = max_arm else {
            return vec![SelfConjugatePartition::empty()];
        };
        let n = max_arm + 1;
        (0u32..1 << n)
            .map(|mask| SelfConjugatePartition { arms: (0..n).filter(|a| mask >> a & 1 == 1).collect() })
            .collect()
    }
}

/// The bijection between self-conjugate partitions with fewer than m rows
/// and Γ_{m−1}: the sign is negative exactly at slots `m − (aᵢ + 1)`.
pub fn gamma_partition_bijection(mu: &SelfConjugatePartition, m: usize) -> Result<SignedPermutation> {
    if let Some(&top) = mu.arms.last() {
        if top as usize + 2 > m {
            return Err(Error::Precondition(format!("arm length {top} too large for Γ_{}", m.saturating_sub(1))));
        }
    }
    let mut signs = vec![1i8; m - 1];
    for &a in &mu.arms {
        signs[m - (a as usize + 1) - 1] = -1;
    }
    Ok(gamma_element(&signs))
}

/// The smallest slot i in 1..m−1 with `σ(λ+ρ)_i < −1`, or m if none exists.
/// `sigma` acts on the first m−1 coordinates of `λ+ρ`.
pub fn flat_index(sigma: &SignedPermutation, shifted: &[HalfInt]) -> usize {
    let m = shifted.len();
    let v = sigma.apply(shifted);
    (0..m - 1).find(|&i| v[i] < HalfInt::from_int(-1)).map_or(m, |i| i + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::rho;

    fn hv(twice: &[i64]) -> Vec<HalfInt> {
        twice.iter().map(|&t| HalfInt::from_twice(t)).collect()
    }

    #[test]
    fn flips_and_identity() {
        let r = rho(2);
        let f = SignedPermutation::flip(2, 1).act(&r).unwrap();
        assert_eq!(f.delta(), hv(&[-1, -1]).as_slice());
        assert_eq!(SignedPermutation::identity(2).act(&r).unwrap(), r);
        assert!(SignedPermutation::identity(3).act(&r).is_err());
    }

    #[test]
    fn swap_after_flip() {
        let g = SignedPermutation::swap(2, 1, 2).compose(&SignedPermutation::flip(2, 2));
        assert_eq!(g.apply(&[2i64, 1]), vec![-1, 2]);
        // sorted image of (2,1) under the Γ₂ element negating slot 2
        assert_eq!(gamma_element(&[1, -1]).apply(&[2i64, 1]), vec![2, -1]);
        assert_eq!(gamma_element(&[-1, 1]).apply(&[2i64, 1]), vec![1, -2]);
    }

    #[test]
    fn parities() {
        assert_eq!(SignedPermutation::flip(3, 2).parity(), -1);
        assert_eq!(SignedPermutation::swap(3, 1, 3).parity(), -1);
        let g = SignedPermutation::swap(2, 1, 2).compose(&SignedPermutation::flip(2, 1));
        assert_eq!(g.parity(), 1);
    }

    #[test]
    fn parity_matches_coxeter_length() {
        for k in 1..=3 {
            let lengths = coxeter_lengths(k);
            assert_eq!(lengths.len(), (1..=k).product::<usize>() << k);
            for (g, len) in lengths {
                assert_eq!(g.parity() as i32, if len % 2 == 0 { 1 } else { -1 }, "{g}");
            }
        }
    }

    #[test]
    fn gamma_small() {
        let images = |k: usize| -> Vec<Vec<i64>> {
            let stair: Vec<i64> = (1..=k as i64).rev().collect();
            enumerate_gamma(k).iter().map(|g| g.apply(&stair)).collect()
        };
        assert_eq!(images(1), vec![vec![1], vec![-1]]);
        let mut two = images(2);
        two.sort();
        assert_eq!(two, vec![vec![-1, -2], vec![1, -2], vec![2, -1], vec![2, 1]]);
        assert_eq!(enumerate_gamma(0), vec![SignedPermutation::identity(0)]);
    }

    #[test]
    fn gamma_matches_exhaustive_search() {
        for k in 1..=5usize {
            let stair: Vec<i64> = (1..=k as i64).rev().collect();
            let mut found = 0;
            let all = all_signed_permutations(k);
            for g in &all {
                let img = g.apply(&stair);
                if img.windows(2).all(|w| w[0] > w[1]) {
                    found += 1;
                    assert!(enumerate_gamma(k).contains(g));
                }
            }
            assert_eq!(found, 1 << k);
        }
    }

    #[test]
    fn tau_cycles() {
        assert_eq!(tau(3, 3).unwrap(), SignedPermutation::identity(3));
        assert_eq!(tau(1, 2).unwrap().apply(&['a', 'b'].map(Sym)), vec![Sym('b'), Sym('a')]);
        let t = tau(2, 3).unwrap();
        assert_eq!(t.apply(&['a', 'b', 'c'].map(Sym)), ['a', 'c', 'b'].map(Sym).to_vec());
        assert_eq!(t.parity(), -1);
        assert!(tau(0, 3).is_err());
        assert!(tau(4, 3).is_err());
    }

    #[derive(Copy, Clone, Debug, PartialEq)]
    struct Sym(char);
    impl Neg for Sym {
        type Output = Sym;
        fn neg(self) -> Sym {
            self
        }
    }

    #[test]
    fn tau_parity_composes() {
        for m in 1..=4 {
            for g in enumerate_gamma(m - 1) {
                for i in 1..=m {
                    let t = tau(i, m).unwrap();
                    let expected = if (m - i) % 2 == 0 { 1 } else { -1 } * g.parity();
                    assert_eq!(t.compose(&g.embed(m)).parity(), expected);
                }
            }
        }
    }

    #[test]
    fn partitions() {
        let mu = SelfConjugatePartition::new(vec![0]).unwrap();
        assert_eq!(mu.parts(2).unwrap(), vec![1, 0]);
        let hook = SelfConjugatePartition::new(vec![2]).unwrap();
        assert_eq!(hook.parts(3).unwrap(), vec![3, 1, 1]);
        let two = SelfConjugatePartition::new(vec![0, 2]).unwrap();
        assert_eq!(two.parts(4).unwrap(), vec![3, 2, 1, 0]);
        assert_eq!(two.size(), 6);
        assert_eq!(two.t_value(), 4);
        assert_eq!((two.size() + two.rank() as u64) / 2, two.t_value());
        assert!(hook.parts(2).is_err());
    }

    #[test]
    fn bijection_examples() {
        assert_eq!(
            gamma_partition_bijection(&SelfConjugatePartition::empty(), 2).unwrap(),
            SignedPermutation::identity(1)
        );
        let box1 = SelfConjugatePartition::new(vec![0]).unwrap();
        assert_eq!(gamma_partition_bijection(&box1, 2).unwrap(), SignedPermutation::flip(1, 1));
        assert!(gamma_partition_bijection(&SelfConjugatePartition::new(vec![1]).unwrap(), 2).is_err());
    }

    #[test]
    fn bijection_is_onto_gamma() {
        for m in 1..=6 {
            let parts = SelfConjugatePartition::all_with_max_arm((m as u32).checked_sub(2));
            assert_eq!(parts.len(), 1 << (m - 1));
            let mut images: Vec<_> = parts.iter().map(|mu| gamma_partition_bijection(mu, m).unwrap()).collect();
            let mut gamma = enumerate_gamma(m - 1);
            let key = |g: &SignedPermutation| g.signs().to_vec();
            images.sort_by_key(key);
            gamma.sort_by_key(key);
            assert_eq!(images, gamma);
        }
    }

    #[test]
    fn flat_index_examples() {
        let id = SignedPermutation::identity(0);
        assert_eq!(flat_index(&id, rho(1).delta()), 1);
        assert_eq!(flat_index(&SignedPermutation::flip(1, 1), rho(2).delta()), 2);
        let lam = crate::weight::Weight::integral(&[2, 0, 0], 0).unwrap().rho_shifted();
        let both = gamma_element(&[-1, -1]);
        assert_eq!(flat_index(&both, lam.delta()), 2);
    }

    #[test]
    fn json_roundtrip() {
        let g = gamma_element(&[-1, 1, -1]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<SignedPermutation>(&s).unwrap(), g);
        assert!(serde_json::from_str::<SignedPermutation>(r#"{"perm":[1,1],"signs":[1,1]}"#).is_err());
    }
}
