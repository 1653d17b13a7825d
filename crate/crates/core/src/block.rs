//! Atypicality, blocks and neighbor sets.
//!
//! A dominant weight λ is atypical when `(λ+ρ, δ_t ± ε) = 0` for some t.
//! Every atypical block contains exactly one tail weight (`λ_m = λ₀ = 0`),
//! reached from λ by iterating [`phi`].

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::weight::Weight;

/// The isotropic odd root `δ_index + sign·ε`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct OddRoot {
    pub index: usize,
    pub sign: i8,
}

impl fmt::Display for OddRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ{}{}ε", self.index, if self.sign > 0 { "+" } else { "−" })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Classification {
    pub dominant: bool,
    pub typical: bool,
    pub atypical_roots: Vec<OddRoot>,
    pub tail: bool,
    pub atypical_type: Vec<HalfInt>,
    pub theta: Option<usize>,
}

/// Isotropic odd roots orthogonal to `ν + ρ`, by index then sign.
pub fn atypical_roots(nu: &Weight) -> Vec<OddRoot> {
    let s = nu.rho_shifted();
    let e = s.eps();
    let mut out = Vec::new();
    for (t, &d) in s.delta().iter().enumerate() {
        // (ν̃, δ_t + sε) = −ν̃_t + s·ν̃₀
        if d == e {
            out.push(OddRoot { index: t + 1, sign: 1 });
        }
        if d == -e {
            out.push(OddRoot { index: t + 1, sign: -1 });
        }
    }
    out
}

pub fn is_tail(lambda: &Weight) -> bool {
    lambda.delta_at(lambda.m()) == HalfInt::ZERO && lambda.eps() == HalfInt::ZERO
}

fn type_without(nu: &Weight, slot: usize) -> Vec<HalfInt> {
    let s = nu.rho_shifted();
    let mut v: Vec<HalfInt> =
        s.delta().iter().enumerate().filter(|&(i, _)| i + 1 != slot).map(|(_, d)| d.abs()).collect();
    v.sort();
    v
}

/// The slot k with λ (δ_k+ε)-atypical, for dominant λ.
fn plus_slot(lambda: &Weight) -> Option<usize> {
    atypical_roots(lambda).iter().find(|r| r.sign > 0).map(|r| r.index)
}

fn require_dominant(lambda: &Weight) -> Result<()> {
    lambda.check_dominant_integral().map_err(Error::NotDominant)
}

pub fn classify(lambda: &Weight) -> Result<Classification> {
    require_dominant(lambda)?;
    let roots = atypical_roots(lambda);
    let typical = roots.is_empty();
    let tail = is_tail(lambda);
    let atypical_type = if typical {
        Vec::new()
    } else if tail {
        type_without(lambda, lambda.m())
    } else {
        type_without(lambda, roots[0].index)
    };
    let theta = if typical || tail { None } else { Some(theta(lambda)?) };
    Ok(Classification { dominant: true, typical, atypical_roots: roots, tail, atypical_type, theta })
}

/// The tail weight in the block of an atypical dominant λ.
///
/// For (δ_k+ε)-atypical λ the result is
/// `Σ_{i<k} λᵢδᵢ + Σ_{i=k}^{m−1} (λ_{i+1} − 1)δᵢ`.
pub fn lambda_tail(lambda: &Weight) -> Result<Weight> {
    require_dominant(lambda)?;
    if is_tail(lambda) {
        return Ok(lambda.clone());
    }
    let k = plus_slot(lambda).ok_or_else(|| Error::Typical(lambda.to_string()))?;
    let m = lambda.m();
    let mut delta = lambda.delta().to_vec();
    for i in k..m {
        delta[i - 1] = lambda.delta_at(i + 1) - HalfInt::ONE;
    }
    delta[m - 1] = HalfInt::ZERO;
    Weight::new(delta, HalfInt::ZERO)
}

/// One step down the block towards its tail weight.
///
/// With k the atypical slot and t maximal with `λ_t = λ_k`:
/// `λ − δ_m` when `λ₀ = 0`; [`lambda_tail`] when `t = m` and `λ_m = 1`;
/// otherwise `λ − Σ_{i=k}^t δᵢ − (t−k+1)ε`.
pub fn phi(lambda: &Weight) -> Result<Weight> {
    require_dominant(lambda)?;
    if is_tail(lambda) {
        return Err(Error::Tail(lambda.to_string()));
    }
    let k = plus_slot(lambda).ok_or_else(|| Error::Typical(lambda.to_string()))?;
    let m = lambda.m();
    let out = if lambda.eps() == HalfInt::ZERO {
        lambda - &Weight::delta_unit(m, m)
    } else {
        let lk = lambda.delta_at(k);
        let t = (k..=m).take_while(|&i| lambda.delta_at(i) == lk).last().unwrap_or(k);
        if t == m && lk == HalfInt::ONE {
            lambda_tail(lambda)?
        } else {
            let mut w = lambda.clone();
            for i in k..=t {
                w = &w - &Weight::delta_unit(m, i);
            }
            w.with_eps(w.eps() - HalfInt::from_int((t - k + 1) as i64))
        }
    };
    if !out.is_dominant_integral() {
        return Err(Error::Internal(format!("φ({lambda}) = {out} is not dominant")));
    }
    Ok(out)
}

/// The φ-chain `λ, φ(λ), …, λ^T`.
pub fn phi_chain(lambda: &Weight) -> Result<Vec<Weight>> {
    let target = lambda_tail(lambda)?;
    let cap = lambda.height().twice() as usize / 2 + lambda.m() + 1;
    let mut chain = vec![lambda.clone()];
    while chain.last() != Some(&target) {
        if chain.len() > cap {
            return Err(Error::Internal(format!("φ-chain of {lambda} does not reach {target}")));
        }
        let next = phi(chain.last().unwrap())?;
        chain.push(next);
    }
    Ok(chain)
}

/// The n ≥ 0 with `φ^{n+1}(λ) = λ^T`.
pub fn theta(lambda: &Weight) -> Result<usize> {
    require_dominant(lambda)?;
    if is_tail(lambda) {
        return Err(Error::Tail(lambda.to_string()));
    }
    if plus_slot(lambda).is_none() {
        return Err(Error::Typical(lambda.to_string()));
    }
    Ok(phi_chain(lambda)?.len() - 2)
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Flavor {
    /// Dominant integral neighbors (weights of `L_λ ⊗ V`).
    Super,
    /// g₀-dominant neighbors (weights of `L⁽⁰⁾_λ ⊗ V`).
    Even,
}

/// `λ ± δᵢ`, `λ ± ε`, and λ itself when `λ₀ ≠ 0`, filtered by dominance.
///
/// Ordered as `λ+δ₁, …, λ+δ_m, λ+ε, λ, λ−ε, λ−δ_m, …, λ−δ₁`.
pub fn neighbor_set(lambda: &Weight, flavor: Flavor) -> Result<Vec<Weight>> {
    let keep: fn(&Weight) -> bool = match flavor {
        Flavor::Super => {
            require_dominant(lambda)?;
            Weight::is_dominant_integral
        }
        Flavor::Even => {
            if !lambda.is_g0_dominant() {
                return Err(Error::NotG0Dominant(lambda.to_string()));
            }
            Weight::is_g0_dominant
        }
    };
    let m = lambda.m();
    let eps = Weight::eps_unit(m);
    let mut out: Vec<Weight> = (1..=m).map(|i| lambda + &Weight::delta_unit(m, i)).collect();
    out.push(lambda + &eps);
    if lambda.eps() != HalfInt::ZERO {
        out.push(lambda.clone());
    }
    out.push(lambda - &eps);
    out.extend((1..=m).rev().map(|i| lambda - &Weight::delta_unit(m, i)));
    out.retain(keep);
    Ok(out)
}

/// Invariant of the central character on g₀-dominant weights: equal central
/// characters give equal keys.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CentralKey {
    Atypical(Vec<HalfInt>),
    Typical(Vec<HalfInt>, HalfInt),
}

pub fn central_char_key(nu: &Weight) -> CentralKey {
    match atypical_roots(nu).first() {
        Some(r) => CentralKey::Atypical(type_without(nu, r.index)),
        None => {
            let s = nu.rho_shifted();
            let mut v: Vec<HalfInt> = s.delta().iter().map(|d| d.abs()).collect();
            v.sort();
            CentralKey::Typical(v, s.eps().abs())
        }
    }
}

/// All dominant integral weights of rank m and height at most `max_height`.
pub fn dominant_weights(m: usize, max_height: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut delta = vec![0i64; m];
    fn rec(i: usize, budget: i64, cap: i64, delta: &mut Vec<i64>, out: &mut Vec<Weight>) {
        let m = delta.len();
        if i == m {
            let last = delta[m - 1];
            let eps_max = if last == 0 { 0 } else { budget };
            for e in 0..=eps_max {
                out.push(Weight::integral(delta, e).expect("rank checked by caller"));
            }
            return;
        }
        for v in 0..=cap.min(budget) {
            delta[i] = v;
            rec(i + 1, budget - v, v, delta, out);
        }
    }
    rec(0, max_height, max_height, &mut delta, &mut out);
    out.sort_by_key(|w| (w.height(), w.clone()));
    out
}

/// All g₀-dominant integral weights of rank m and height at most `max_height`.
pub fn g0_dominant_weights(m: usize, max_height: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut delta = vec![0i64; m];
    fn rec(i: usize, budget: i64, prev: i64, delta: &mut Vec<i64>, out: &mut Vec<Weight>) {
        let m = delta.len();
        if i == m {
            for e in 0..=budget {
                out.push(Weight::integral(delta, e).expect("rank checked by caller"));
            }
            return;
        }
        for v in -budget..=budget.min(prev) {
            delta[i] = v;
            rec(i + 1, budget - v.abs(), v, delta, out);
        }
    }
    rec(0, max_height, i64::MAX, &mut delta, &mut out);
    out.sort_by_key(|w| (w.height(), w.clone()));
    out
}
