//! Characters of irreducible modules as combinations of Verma characters.
//!
//! | weight class                         | constructor                      |
//! |--------------------------------------|----------------------------------|
//! | typical                              | [`expansion_typical`]            |
//! | tail atypical (`λ_m = λ₀ = 0`)       | [`expansion_tail`]               |
//! | non-tail with `φ(λ) = λ^T`           | [`expansion_boundary`]           |
//! | non-tail with `θ_λ ≥ 1`              | [`expansion_nontail_closed`]     |
//!
//! [`irreducible_expansion`] dispatches between them. Tail characters are
//! infinite sums; they are kept as [`VermaFamily`] values along the
//! direction `ε − δ_i` and only materialized for a given cutoff.

use std::collections::BTreeMap;
use std::fmt;

use dashu_int::IBig;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::block::{atypical_roots, is_tail, lambda_tail, phi, phi_chain, theta};
use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::schur::schur_poly;
use crate::series::TruncatedSeries;
use crate::verma::{g0_character_exact, g0_degree, sl2_string, universal_factor};
use crate::weight::{rho, Weight};
use crate::weyl::{enumerate_gamma, tau, SelfConjugatePartition};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VermaTerm {
    pub coeff: i64,
    pub weight: Weight,
}

/// `Σ_{j=j_lo}^{j_hi} scale·base_sign·(−1)^j · M_{base + j(ε − δ_slot)}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VermaFamily {
    pub base: Weight,
    pub slot: usize,
    pub j_lo: i64,
    /// `None` for an infinite family.
    pub j_hi: Option<i64>,
    pub base_sign: i64,
    pub scale: i64,
}

impl VermaFamily {
    pub fn member(&self, j: i64) -> Weight {
        let m = self.base.m();
        let step = &Weight::eps_unit(m) - &Weight::delta_unit(m, self.slot);
        &self.base + &step.scale(j)
    }

    pub fn coeff(&self, j: i64) -> i64 {
        let alt = if j % 2 == 0 { 1 } else { -1 };
        self.scale * self.base_sign * alt
    }

    /// Largest j whose member has x-degree at most `cutoff`.
    pub fn j_bound(&self, cutoff: i64) -> i64 {
        let top = cutoff - g0_degree(&self.base);
        self.j_hi.map_or(top, |h| h.min(top))
    }

    fn scaled(&self, k: i64) -> Self {
        VermaFamily { scale: self.scale * k, ..self.clone() }
    }
}

/// A finite list of Verma terms plus finitely many alternating families.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VermaExpansion {
    pub m: usize,
    pub finite: Vec<VermaTerm>,
    pub families: Vec<VermaFamily>,
}

impl VermaExpansion {
    pub fn empty(m: usize) -> Self {
        VermaExpansion { m, finite: Vec::new(), families: Vec::new() }
    }

    pub fn extend(&mut self, other: VermaExpansion, k: i64) {
        debug_assert_eq!(self.m, other.m);
        self.finite.extend(other.finite.into_iter().map(|t| VermaTerm { coeff: t.coeff * k, ..t }));
        self.families.extend(other.families.iter().map(|f| f.scaled(k)));
    }

    /// Finite terms merged by weight, zero coefficients removed, sorted.
    pub fn merged_finite(&self) -> BTreeMap<Weight, i64> {
        let mut out = BTreeMap::new();
        for t in &self.finite {
            *out.entry(t.weight.clone()).or_insert(0) += t.coeff;
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// All terms with family index `j ≤ j_max`, merged by weight.
    pub fn materialize(&self, j_max: i64) -> BTreeMap<Weight, i64> {
        let mut out = self.merged_finite();
        for f in &self.families {
            let hi = f.j_hi.map_or(j_max, |h| h.min(j_max));
            for j in f.j_lo..=hi {
                *out.entry(f.member(j)).or_insert(0) += f.coeff(j);
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// All terms whose Verma character reaches x-degree `cutoff`.
    pub fn materialize_for_cutoff(&self, cutoff: i64) -> BTreeMap<Weight, i64> {
        let mut out = BTreeMap::new();
        for (w, c) in self.merged_finite() {
            if g0_degree(&w) <= cutoff {
                out.insert(w, c);
            }
        }
        for f in &self.families {
            for j in f.j_lo..=f.j_bound(cutoff) {
                *out.entry(f.member(j)).or_insert(0) += f.coeff(j);
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Net coefficient of `M_ν`, counting family members.
    pub fn net_coeff(&self, nu: &Weight) -> i64 {
        let mut total: i64 = self.finite.iter().filter(|t| t.weight == *nu).map(|t| t.coeff).sum();
        for f in &self.families {
            let j = (nu.eps() - f.base.eps()).twice() / 2;
            if j >= f.j_lo && f.j_hi.is_none_or(|h| j <= h) && f.member(j) == *nu {
                total += f.coeff(j);
            }
        }
        total
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for t in &self.finite {
            let sign = if t.coeff < 0 { "-" } else { "+" };
            let c = t.coeff.abs();
            let c = if c == 1 { String::new() } else { format!("{c}·") };
            parts.push(format!("{sign}{c}M{}", t.weight));
        }
        for f in &self.families {
            let c = f.scale * f.base_sign;
            let sign = if c < 0 { "-" } else { "+" };
            let c = if c.abs() == 1 { String::new() } else { format!("{}·", c.abs()) };
            let hi = f.j_hi.map_or("∞".to_string(), |h| h.to_string());
            parts.push(format!("{sign}{c}Σ_{{j={}..{hi}}} (-1)^j M({} + j(ε-δ{}))", f.j_lo, f.base, f.slot));
        }
        if parts.is_empty() {
            return "0".into();
        }
        parts.join(" ")
    }
}

impl fmt::Display for VermaExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for VermaTerm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("VermaTerm", 2)?;
        s.serialize_field("coeff", &self.coeff)?;
        s.serialize_field("weight", &self.weight)?;
        s.end()
    }
}

impl Serialize for VermaFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Hi {
            Finite(i64),
            Inf(&'static str),
        }
        let mut s = serializer.serialize_struct("VermaFamily", 6)?;
        s.serialize_field("base", &self.base)?;
        s.serialize_field("slot", &self.slot)?;
        s.serialize_field("j_lo", &self.j_lo)?;
        s.serialize_field("j_hi", &self.j_hi.map_or(Hi::Inf("inf"), Hi::Finite))?;
        s.serialize_field("base_sign", &self.base_sign)?;
        s.serialize_field("scale", &self.scale)?;
        s.end()
    }
}

impl Serialize for VermaExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("VermaExpansion", 3)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("finite", &self.finite)?;
        s.serialize_field("families", &self.families)?;
        s.end()
    }
}

/// Deliberately wrong conventions, used to show the oracles detect errors.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash)]
pub enum Mutation {
    /// Sign `(−1)^{ℓ(σ)}` instead of `(−1)^{ℓ(τ_iσ)}`.
    ParitySign,
    /// Lower limit `3/2 − σ(λ+ρ)_{i−1}` instead of `1/2 − …`.
    JLo,
    /// `σ∘τ_i` instead of `τ_i∘σ`.
    TauOrientation,
    /// Upper limit `−5/2 − …` instead of `−3/2 − …`.
    UpperLimit,
}

impl Mutation {
    pub const ALL: [Mutation; 4] =
        [Mutation::ParitySign, Mutation::JLo, Mutation::TauOrientation, Mutation::UpperLimit];

    pub fn name(&self) -> &'static str {
        match self {
            Mutation::ParitySign => "parity-sign",
            Mutation::JLo => "j-lo",
            Mutation::TauOrientation => "tau-orientation",
            Mutation::UpperLimit => "upper-limit",
        }
    }
}

fn require_dominant(lambda: &Weight) -> Result<()> {
    lambda.check_dominant_integral().map_err(Error::NotDominant)
}

/// `Σ_{σ∈Γ_m} (−1)^{ℓ(σ)} M_{σ(λ+ρ)−ρ}` without checks on λ.
fn gamma_terms(lambda: &Weight) -> Result<VermaExpansion> {
    let m = lambda.m();
    let shifted = lambda.rho_shifted();
    let mut out = VermaExpansion::empty(m);
    for sigma in enumerate_gamma(m) {
        out.finite.push(VermaTerm { coeff: sigma.parity() as i64, weight: sigma.act(&shifted)?.rho_unshifted() });
    }
    Ok(out)
}

pub fn expansion_typical(lambda: &Weight) -> Result<VermaExpansion> {
    require_dominant(lambda)?;
    if !atypical_roots(lambda).is_empty() {
        return Err(Error::Precondition(format!("{lambda} is atypical")));
    }
    gamma_terms(lambda)
}

pub fn expansion_tail(lambda: &Weight) -> Result<VermaExpansion> {
    expansion_tail_with(lambda, None)
}

/// The tail formula, optionally with one convention deliberately broken.
pub fn expansion_tail_with(lambda: &Weight, mutation: Option<Mutation>) -> Result<VermaExpansion> {
    require_dominant(lambda)?;
    if !is_tail(lambda) {
        return Err(Error::Precondition(format!("{lambda} is not a tail weight")));
    }
    let m = lambda.m();
    let shifted = lambda.rho_shifted();
    let r = rho(m);
    let half = HalfInt::HALF;
    let mut out = VermaExpansion::empty(m);
    for sigma in enumerate_gamma(m - 1) {
        let sigma = sigma.embed(m);
        let v = sigma.apply(shifted.delta());
        let flat = (1..m).find(|&i| v[i - 1] < HalfInt::from_int(-1)).unwrap_or(m);
        for i in flat..=m {
            let t = tau(i, m)?;
            let g = if mutation == Some(Mutation::TauOrientation) { sigma.compose(&t) } else { t.compose(&sigma) };
            let base = g.act(&shifted)?;
            let base = &base - &r;
            let base_sign = if mutation == Some(Mutation::ParitySign) { sigma.parity() } else { g.parity() } as i64;
            let j_lo = if i == 1 {
                0
            } else {
                let offset = if mutation == Some(Mutation::JLo) { HalfInt::from_twice(3) } else { half };
                (offset - v[i - 2]).twice().max(0) / 2
            };
            let j_hi = if i < m {
                let offset = if mutation == Some(Mutation::UpperLimit) { -5 } else { -3 };
                Some((HalfInt::from_twice(offset) - v[i - 1]).twice() / 2)
            } else {
                None
            };
            if j_hi.is_some_and(|h| h < j_lo) {
                continue;
            }
            if j_hi.is_none() && i != m {
                return Err(Error::Internal("infinite family away from slot m".into()));
            }
            out.families.push(VermaFamily { base, slot: i, j_lo, j_hi, base_sign, scale: 1 });
        }
    }
    Ok(out)
}

fn require_nontail_atypical(lambda: &Weight) -> Result<()> {
    require_dominant(lambda)?;
    if atypical_roots(lambda).is_empty() {
        return Err(Error::Typical(lambda.to_string()));
    }
    if is_tail(lambda) {
        return Err(Error::Tail(lambda.to_string()));
    }
    Ok(())
}

/// `L_{λ^T} + Σ_{σ∈Γ_m} (−1)^{ℓ(σ)} M_{σ(λ+ρ)−ρ}` for λ with `φ(λ) = λ^T`.
pub fn expansion_boundary(lambda: &Weight) -> Result<VermaExpansion> {
    expansion_boundary_with(lambda, None)
}

pub fn expansion_boundary_with(lambda: &Weight, mutation: Option<Mutation>) -> Result<VermaExpansion> {
    require_nontail_atypical(lambda)?;
    let tail = lambda_tail(lambda)?;
    if phi(lambda)? != tail {
        return Err(Error::Precondition(format!("φ({lambda}) is not the tail weight {tail}")));
    }
    let mut out = expansion_tail_with(&tail, mutation)?;
    out.extend(gamma_terms(lambda)?, 1);
    Ok(out)
}

/// `Γ(λ) − L_{φ(λ)}`, with `− L_{λ^T}` added when `θ_λ = 1`.
pub fn expansion_nontail_recursive(lambda: &Weight) -> Result<VermaExpansion> {
    expansion_nontail_recursive_with(lambda, None)
}

pub fn expansion_nontail_recursive_with(lambda: &Weight, mutation: Option<Mutation>) -> Result<VermaExpansion> {
    require_nontail_atypical(lambda)?;
    let th = theta(lambda)?;
    if th == 0 {
        return Err(Error::Precondition(format!("θ({lambda}) = 0; use the boundary formula")));
    }
    let next = phi(lambda)?;
    let mut out = gamma_terms(lambda)?;
    let lower = if th == 1 {
        expansion_boundary_with(&next, mutation)?
    } else {
        expansion_nontail_recursive_with(&next, mutation)?
    };
    out.extend(lower, -1);
    if th == 1 {
        out.extend(expansion_tail_with(&lambda_tail(lambda)?, mutation)?, -1);
    }
    Ok(out)
}

/// `Σ_{i=0}^{θ} (−1)^i Γ(φ^i λ) + 2(−1)^θ L_{λ^T}`.
pub fn expansion_nontail_closed(lambda: &Weight) -> Result<VermaExpansion> {
    expansion_nontail_closed_with(lambda, None)
}

pub fn expansion_nontail_closed_with(lambda: &Weight, mutation: Option<Mutation>) -> Result<VermaExpansion> {
    require_nontail_atypical(lambda)?;
    let chain = phi_chain(lambda)?;
    let th = chain.len() - 2;
    if th == 0 {
        return Err(Error::Precondition(format!("θ({lambda}) = 0; use the boundary formula")));
    }
    let mut out = VermaExpansion::empty(lambda.m());
    for (i, w) in chain[..=th].iter().enumerate() {
        out.extend(gamma_terms(w)?, if i % 2 == 0 { 1 } else { -1 });
    }
    let tail = expansion_tail_with(chain.last().unwrap(), mutation)?;
    out.extend(tail, if th % 2 == 0 { 2 } else { -2 });
    Ok(out)
}

/// The Verma expansion of `ch L_λ` for any dominant integral λ.
pub fn irreducible_expansion(lambda: &Weight) -> Result<VermaExpansion> {
    irreducible_expansion_with(lambda, None)
}

pub fn irreducible_expansion_with(lambda: &Weight, mutation: Option<Mutation>) -> Result<VermaExpansion> {
    require_dominant(lambda)?;
    if atypical_roots(lambda).is_empty() {
        return expansion_typical(lambda);
    }
    if is_tail(lambda) {
        return expansion_tail_with(lambda, mutation);
    }
    if theta(lambda)? == 0 {
        expansion_boundary_with(lambda, mutation)
    } else {
        expansion_nontail_closed_with(lambda, mutation)
    }
}

/// `Σ c_ν ch M_ν` over g₀-dominant ν, up to x-degree `cutoff`.
///
/// Terms with non-g₀-dominant weights are skipped and counted in the
/// second component.
pub fn terms_to_series(m: usize, terms: &BTreeMap<Weight, i64>, cutoff: i64) -> Result<(TruncatedSeries, usize)> {
    let mut g = TruncatedSeries::zero(m);
    let mut low: Option<i64> = None;
    let mut skipped = 0;
    for (w, c) in terms {
        if !w.is_g0_dominant() {
            skipped += 1;
            continue;
        }
        let d = g0_degree(w);
        if d > cutoff {
            continue;
        }
        low = Some(low.map_or(d, |l| l.min(d)));
        g = g.add(&g0_character_exact(w)?.scale(&IBig::from(*c)))?;
    }
    let Some(low) = low else {
        return Ok((TruncatedSeries::zero(m).truncate(cutoff), skipped));
    };
    let a = universal_factor(m, cutoff - low);
    Ok((a.mul(&g)?.truncate(cutoff), skipped))
}

/// The character described by an expansion, up to x-degree `cutoff`.
pub fn expansion_to_series(e: &VermaExpansion, cutoff: i64) -> Result<TruncatedSeries> {
    Ok(terms_to_series(e.m, &e.materialize_for_cutoff(cutoff), cutoff)?.0)
}

/// As [`expansion_to_series`] but with family members cut at `j ≤ j_max`.
pub fn expansion_to_series_bounded(e: &VermaExpansion, cutoff: i64, j_max: i64) -> Result<TruncatedSeries> {
    let mut terms = e.materialize(j_max);
    terms.retain(|w, _| g0_degree(w) <= cutoff);
    Ok(terms_to_series(e.m, &terms, cutoff)?.0)
}

/// `C_λ` for a tail λ, or for λ with `λ_m = 1`, `λ₀ = 0`, atypical at `δ_m+ε`.
///
/// Uses the signed-permutation form
/// `A · Σ_σ Σ_j (−1)^{j+ℓ(σ)} S_{σ(λ+ρ)−ρ−jδ_m}(x⁻¹) · (y^j + … + y^{−j})`
/// with σ ∈ Γ_{m−1}, and the boundary correction
/// `A · Σ_σ (−1)^{ℓ(σ)} (S_{σ(λ'+ρ)−ρ+δ_m} − S_{σ(λ'+ρ)−ρ})(x⁻¹)` with `λ' = λ − δ_m`.
pub fn c_lambda_series(lambda: &Weight, cutoff: i64) -> Result<TruncatedSeries> {
    require_dominant(lambda)?;
    let m = lambda.m();
    if is_tail(lambda) {
        let g = c_sum(lambda, cutoff)?;
        return times_universal(g, cutoff);
    }
    let boundary = lambda.delta_at(m) == HalfInt::ONE && lambda.eps() == HalfInt::ZERO;
    if !boundary {
        return Err(Error::Precondition(format!("{lambda} has no C-series form")));
    }
    let base = lambda - &Weight::delta_unit(m, m);
    let mut g = c_sum(&base, cutoff)?;
    let shifted = base.rho_shifted();
    for sigma in enumerate_gamma(m - 1) {
        let sign = IBig::from(sigma.parity() as i64);
        let nu = sigma.embed(m).act(&shifted)?.rho_unshifted();
        let plus = inverse_schur(&(&nu + &Weight::delta_unit(m, m)))?;
        let same = inverse_schur(&nu)?;
        g = g.add(&plus.sub(&same)?.scale(&sign))?;
    }
    times_universal(g, cutoff)
}

/// `S_ν(x⁻¹)` as `S_{(−ν_m,…,−ν_1)}(x)`.
fn inverse_schur(nu: &Weight) -> Result<TruncatedSeries> {
    let (delta, _) = nu.to_integers().ok_or_else(|| Error::NotIntegral(nu.to_string()))?;
    let rev: Vec<i64> = delta.iter().rev().map(|d| -d).collect();
    Ok(schur_poly(&rev))
}

fn c_sum(lambda: &Weight, cutoff: i64) -> Result<TruncatedSeries> {
    let m = lambda.m();
    let shifted = lambda.rho_shifted();
    let mut g = TruncatedSeries::zero(m);
    for sigma in enumerate_gamma(m - 1) {
        let nu = sigma.embed(m).act(&shifted)?.rho_unshifted();
        // degree of S_{(j, …)} is j − Σ_{i<m} νᵢ
        let top = cutoff + nu.delta_sum().twice() / 2;
        for j in 0..=top {
            let shifted_nu = &nu - &Weight::delta_unit(m, m).scale(j);
            let s = inverse_schur(&shifted_nu)?.mul(&sl2_string(m, j))?;
            let sign = sigma.parity() as i64 * if j % 2 == 0 { 1 } else { -1 };
            g = g.add(&s.scale(&IBig::from(sign)))?;
        }
    }
    Ok(g)
}

fn times_universal(g: TruncatedSeries, cutoff: i64) -> Result<TruncatedSeries> {
    let m = g.m();
    match g.min_degree() {
        None => Ok(g.truncate(cutoff)),
        Some(low) => Ok(universal_factor(m, cutoff - low).mul(&g)?.truncate(cutoff)),
    }
}

/// Verma terms of the trivial self-conjugate-partition identity, as
/// `(j, μ)` index vectors with their signs; shared by tests and the checks.
pub(crate) fn self_conjugate_sum(m: usize, cutoff: i64) -> Result<TruncatedSeries> {
    let mut g = TruncatedSeries::zero(m);
    for mu in SelfConjugatePartition::all_with_max_arm((m as u32).checked_sub(2)) {
        let parts = mu.parts(m - 1)?;
        let size = mu.size() as i64;
        for j in 0..=cutoff - size {
            let mut idx = vec![j];
            idx.extend(&parts);
            let sign = if (j as u64 + mu.t_value()).is_multiple_of(2) { 1 } else { -1 };
            let s = schur_poly(&idx).mul(&sl2_string(m, j))?;
            g = g.add(&s.scale(&IBig::from(sign)))?;
        }
    }
    Ok(g.truncate(cutoff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::{central_char_key, dominant_weights};
    use crate::series::Monomial;

    fn w(d: &[i64], e: i64) -> Weight {
        Weight::integral(d, e).unwrap()
    }

    fn finite_set(e: &VermaExpansion) -> Vec<(Weight, i64)> {
        e.merged_finite().into_iter().collect()
    }

    #[test]
    fn typical_examples() {
        let e = expansion_typical(&w(&[2], 0)).unwrap();
        assert_eq!(finite_set(&e), vec![(w(&[-1], 0), -1), (w(&[2], 0), 1)]);
        let e = expansion_typical(&w(&[1], 1)).unwrap();
        assert_eq!(finite_set(&e), vec![(w(&[0], 1), -1), (w(&[1], 1), 1)]);
        for m in 1..=3 {
            for lam in dominant_weights(m, 4) {
                let Ok(e) = expansion_typical(&lam) else { continue };
                assert_eq!(e.finite.len(), 1 << m);
                assert_eq!(e.merged_finite().len(), 1 << m);
                assert!(e.finite.iter().all(|t| t.weight.is_g0_dominant()));
            }
        }
    }

    #[test]
    fn tail_examples() {
        let e = expansion_tail(&w(&[0], 0)).unwrap();
        assert_eq!(
            e.families,
            vec![VermaFamily { base: w(&[0], 0), slot: 1, j_lo: 0, j_hi: None, base_sign: 1, scale: 1 }]
        );
        let e = expansion_tail(&w(&[0, 0], 0)).unwrap();
        assert_eq!(e.families.len(), 2);
        assert_eq!(e.families[0].base, w(&[0, 0], 0));
        assert_eq!((e.families[0].j_lo, e.families[0].base_sign), (0, 1));
        assert_eq!(e.families[1].base, w(&[-1, 0], 0));
        assert_eq!((e.families[1].j_lo, e.families[1].base_sign), (1, -1));
        assert_eq!(e.families[1].member(1), w(&[-1, -1], 1));
        assert_eq!(e.net_coeff(&w(&[0, 0], 0)), 1);
    }

    #[test]
    fn boundary_example() {
        let e = expansion_boundary(&w(&[1], 0)).unwrap();
        assert_eq!(finite_set(&e), vec![(w(&[0], 0), -1), (w(&[1], 0), 1)]);
        assert_eq!(e.families.len(), 1);
        let s = expansion_to_series(&e, 4).unwrap();
        assert_eq!(s.render(), "x1^-1 + y^-1 + 1 + y + x1");
        assert!(expansion_boundary(&w(&[2], 1)).is_err());
    }

    #[test]
    fn trivial_character_is_one() {
        for m in 1..=3 {
            let s = expansion_to_series(&expansion_tail(&Weight::zero(m)).unwrap(), 5).unwrap();
            assert_eq!(s, TruncatedSeries::one(m).truncate(5), "m = {m}");
        }
    }

    #[test]
    fn closed_form_example() {
        let e = expansion_nontail_closed(&w(&[2], 1)).unwrap();
        assert_eq!(finite_set(&e), vec![(w(&[-1], 1), -1), (w(&[0], 0), 1), (w(&[1], 0), -1), (w(&[2], 1), 1)]);
        assert_eq!(e.families.len(), 1);
        assert_eq!(e.families[0].scale * e.families[0].base_sign, -2);
        let r = expansion_nontail_recursive(&w(&[2], 1)).unwrap();
        assert_eq!(e.materialize(12), r.materialize(12));
        assert!(expansion_nontail_closed(&w(&[1], 0)).is_err());
    }

    #[test]
    fn closed_matches_recursive() {
        let mut seen_theta_two = false;
        for m in 1..=2 {
            for lam in dominant_weights(m, 5) {
                if atypical_roots(&lam).is_empty() || is_tail(&lam) || theta(&lam).unwrap() == 0 {
                    continue;
                }
                seen_theta_two |= theta(&lam).unwrap() >= 2;
                let c = expansion_nontail_closed(&lam).unwrap();
                let r = expansion_nontail_recursive(&lam).unwrap();
                assert_eq!(c.materialize(12), r.materialize(12), "{lam}");
            }
        }
        assert!(seen_theta_two);
    }

    #[test]
    fn dispatch() {
        assert_eq!(irreducible_expansion(&Weight::zero(2)).unwrap(), expansion_tail(&Weight::zero(2)).unwrap());
        assert_eq!(irreducible_expansion(&w(&[2], 0)).unwrap(), expansion_typical(&w(&[2], 0)).unwrap());
        assert_eq!(irreducible_expansion(&w(&[2], 1)).unwrap(), expansion_nontail_closed(&w(&[2], 1)).unwrap());
    }

    #[test]
    fn structural_invariants() {
        for m in 1..=3 {
            for lam in dominant_weights(m, 4) {
                let e = irreducible_expansion(&lam).unwrap();
                assert_eq!(e.net_coeff(&lam), 1, "{lam}");
                let key = central_char_key(&lam);
                for (nu, _) in e.materialize(8) {
                    assert!(nu.is_g0_dominant(), "{lam}: {nu}");
                    assert_eq!(central_char_key(&nu), key, "{lam}: {nu}");
                }
                for f in &e.families {
                    assert!(f.j_hi.is_some() || f.slot == m);
                    // j_lo is the first g₀-dominant member
                    assert!(f.member(f.j_lo).is_g0_dominant());
                    if f.j_lo > 0 {
                        assert!(!f.member(f.j_lo - 1).is_g0_dominant(), "{lam}: {:?}", f);
                    }
                }
            }
        }
    }

    #[test]
    fn upper_limit_is_sharp() {
        // the member just past j_hi is not g₀-dominant, so the alternative
        // limit −1/2 − … would add only vanishing terms
        for m in 2..=3 {
            for lam in dominant_weights(m, 5).into_iter().filter(is_tail) {
                for f in expansion_tail(&lam).unwrap().families {
                    if let Some(h) = f.j_hi {
                        assert!(!f.member(h + 1).is_g0_dominant(), "{lam}: {f:?}");
                        let (d, _) = f.member(h + 1).to_integers().unwrap();
                        let rev: Vec<i64> = d.iter().rev().map(|v| -v).collect();
                        assert!(schur_poly(&rev).is_zero(), "{lam}: {f:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn c_series_examples() {
        for m in 1..=3 {
            assert_eq!(c_lambda_series(&Weight::zero(m), 5).unwrap(), TruncatedSeries::one(m).truncate(5));
        }
        let lam = w(&[1, 0], 0);
        let c = c_lambda_series(&lam, 4).unwrap();
        let f = expansion_to_series(&expansion_tail(&lam).unwrap(), 4).unwrap();
        assert_eq!(c, f);
        // boundary form: λ_m = 1, λ₀ = 0
        let lam = w(&[1, 1], 0);
        assert_eq!(
            c_lambda_series(&lam, 4).unwrap(),
            expansion_to_series(&irreducible_expansion(&lam).unwrap(), 4).unwrap()
        );
    }

    /// `Σ_μ (−1)^{T(μ)} S_{(j,μ)}` summed as written, over subsets `{j₁<…<j_p}` of `{1..m−1}`.
    fn raw_mu_sum(lam: &Weight, first: i64) -> TruncatedSeries {
        let m = lam.m();
        let (d, _) = lam.to_integers().unwrap();
        let mut g = TruncatedSeries::zero(m);
        for mask in 0u32..(1 << (m - 1)) {
            let js: Vec<usize> = (1..m).filter(|j| mask >> (j - 1) & 1 == 1).collect();
            let rs: Vec<usize> = (1..m).filter(|j| mask >> (j - 1) & 1 == 0).collect();
            let arms: Vec<u32> = js.iter().map(|&j| j as u32 - 1).collect();
            let upsilon = SelfConjugatePartition::new(arms).unwrap().parts(m - 1).unwrap();
            let mut lam_part: Vec<i64> = js.iter().rev().map(|&j| d[m - j - 1]).collect();
            lam_part.extend(rs.iter().map(|&r| -d[m - r - 1]));
            let mut idx = vec![first];
            idx.extend(upsilon.iter().zip(&lam_part).map(|(a, b)| a + b));
            let t: usize = js.iter().sum();
            let sign = if t.is_multiple_of(2) { 1 } else { -1 };
            g = g.add(&schur_poly(&idx).scale(&IBig::from(sign))).unwrap();
        }
        g
    }

    fn c_raw(lam: &Weight, cutoff: i64) -> TruncatedSeries {
        let m = lam.m();
        let mut g = TruncatedSeries::zero(m);
        let boundary = !is_tail(lam);
        let base = if boundary { lam - &Weight::delta_unit(m, m) } else { lam.clone() };
        let (d, _) = base.to_integers().unwrap();
        let spread: i64 = d.iter().map(|v| v.abs()).sum();
        for j in 0..=cutoff + spread + m as i64 * m as i64 {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let s = raw_mu_sum(&base, j).mul(&sl2_string(m, j)).unwrap();
            g = g.add(&s.scale(&IBig::from(sign))).unwrap();
        }
        if boundary {
            g = g.add(&raw_mu_sum(&base, -1).sub(&raw_mu_sum(&base, 0)).unwrap()).unwrap();
        }
        let g = g.truncate(cutoff + spread + m as i64 * m as i64);
        let low = g.min_degree().unwrap_or(0);
        universal_factor(m, cutoff - low).mul(&g).unwrap().truncate(cutoff)
    }

    #[test]
    fn c_series_matches_raw_partition_sum() {
        for m in 1..=3 {
            for lam in dominant_weights(m, 3) {
                let tail = is_tail(&lam);
                let boundary = lam.delta_at(m) == HalfInt::ONE
                    && lam.eps() == HalfInt::ZERO
                    && atypical_roots(&lam).iter().any(|r| r.index == m && r.sign == 1);
                if !tail && !boundary {
                    continue;
                }
                let cutoff = 4;
                assert_eq!(c_lambda_series(&lam, cutoff).unwrap(), c_raw(&lam, cutoff), "{lam}");
            }
        }
    }

    #[test]
    fn c_series_equals_character() {
        for m in 1..=3 {
            for lam in dominant_weights(m, 3).into_iter().filter(is_tail) {
                let cutoff = if m == 3 { 4 } else { 6 };
                let f = expansion_to_series(&expansion_tail(&lam).unwrap(), cutoff).unwrap();
                assert_eq!(c_lambda_series(&lam, cutoff).unwrap(), f, "{lam}");
            }
        }
    }

    #[test]
    fn self_conjugate_sum_matches_inverse_factor() {
        let s = self_conjugate_sum(1, 2).unwrap();
        // (1 − x)/((1 + xy)(1 + x/y)) = 1 − x(1 + y + y⁻¹) + …
        assert_eq!(s.coeff(&Monomial::ONE), IBig::ONE);
        assert_eq!(s.coeff(&Monomial::new(&[1], 1)), IBig::from(-1));
    }

    #[test]
    fn json_shape() {
        let e = expansion_tail(&Weight::zero(1)).unwrap();
        let j = serde_json::to_value(&e).unwrap();
        assert_eq!(j["families"][0]["j_hi"], "inf");
        assert_eq!(j["families"][0]["base"]["delta"][0], 0);
    }
}
