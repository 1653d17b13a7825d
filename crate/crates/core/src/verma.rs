//! Characters of g₀-irreducibles, generalized Verma modules and typical
//! irreducibles.
//!
//! In the variables `x_i = e^{−δ_i}`, `y = e^{ε}` the character of the
//! generalized Verma module `M_ν` is `A · ch L⁽⁰⁾_ν` with
//!
//! ```text
//! A = ∏ (1 + x_i y)(1 + x_i y⁻¹) / ( ∏ (1 − x_i) ∏_{i<j} (1 − x_i x_j) )
//! ```
//!
//! the character of `U(u⁻)`.

use std::sync::{Arc, OnceLock};

use dashu_int::IBig;

use crate::block::atypical_roots;
use crate::error::{Error, Result};
use crate::schur::schur_poly;
use crate::series::{geom_inverse, weight_monomial, Monomial, SeriesCache, TruncatedSeries};
use crate::weight::Weight;
use crate::weyl::all_signed_permutations;

fn unit(m: usize, slot: usize) -> Vec<i64> {
    let mut e = vec![0i64; m];
    e[slot - 1] = 1;
    e
}

fn binomial(m: usize, mon: Monomial, sign: i64) -> TruncatedSeries {
    TruncatedSeries::polynomial(m, [(Monomial::ONE, IBig::ONE), (mon, IBig::from(sign))])
}

/// `∏ (1 + x_i y)(1 + x_i y⁻¹)`.
pub fn odd_numerator(m: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(m);
    for i in 1..=m {
        let x = unit(m, i);
        out = out.mul(&binomial(m, Monomial::new(&x, 1), 1)).expect("exact");
        out = out.mul(&binomial(m, Monomial::new(&x, -1), 1)).expect("exact");
    }
    out
}

/// The factor A up to x-degree `cutoff` (memoized).
pub fn universal_factor(m: usize, cutoff: i64) -> Arc<TruncatedSeries> {
    static MEMO: OnceLock<SeriesCache<(usize, i64)>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(a) = memo.lock().unwrap().get(&(m, cutoff)) {
        return a.clone();
    }
    let mut a = odd_numerator(m).truncate(cutoff);
    for i in 1..=m {
        let g = geom_inverse(m, &Monomial::new(&unit(m, i), 0), cutoff).expect("degree 1");
        a = a.mul(&g).expect("lower bounds known");
        for j in i + 1..=m {
            let mut e = unit(m, i);
            e[j - 1] = 1;
            let g = geom_inverse(m, &Monomial::new(&e, 0), cutoff).expect("degree 2");
            a = a.mul(&g).expect("lower bounds known");
        }
    }
    let a = Arc::new(a.truncate(cutoff));
    memo.lock().unwrap().insert((m, cutoff), a.clone());
    a
}

/// `y^{ν₀} + y^{ν₀−1} + … + y^{−ν₀}`.
pub fn sl2_string(m: usize, top: i64) -> TruncatedSeries {
    TruncatedSeries::polynomial(m, (-top..=top).map(|k| (Monomial::new(&[], k), IBig::ONE)))
}

/// `ch L⁽⁰⁾_ν` as an exact Laurent polynomial, homogeneous of x-degree `−Σ νᵢ`.
pub fn g0_character_exact(nu: &Weight) -> Result<TruncatedSeries> {
    if !nu.is_g0_dominant() {
        return Err(Error::NotG0Dominant(nu.to_string()));
    }
    let (delta, eps) = nu.to_integers().ok_or_else(|| Error::NotIntegral(nu.to_string()))?;
    let rev: Vec<i64> = delta.iter().rev().map(|d| -d).collect();
    schur_poly(&rev).mul(&sl2_string(nu.m(), eps))
}

pub fn g0_character(nu: &Weight, cutoff: i64) -> Result<TruncatedSeries> {
    Ok(g0_character_exact(nu)?.truncate(cutoff))
}

/// x-degree of every monomial of `ch L⁽⁰⁾_ν`.
pub fn g0_degree(nu: &Weight) -> i64 {
    -nu.delta_sum().twice() / 2
}

/// `ch M_ν` up to x-degree `cutoff` (memoized).
pub fn verma_character(nu: &Weight, cutoff: i64) -> Result<Arc<TruncatedSeries>> {
    static MEMO: OnceLock<SeriesCache<(Weight, i64)>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(v) = memo.lock().unwrap().get(&(nu.clone(), cutoff)) {
        return Ok(v.clone());
    }
    let g = g0_character_exact(nu)?;
    let v = if cutoff < g0_degree(nu) {
        TruncatedSeries::zero(nu.m()).truncate(cutoff)
    } else {
        universal_factor(nu.m(), cutoff - g0_degree(nu)).mul(&g)?
    };
    let v = Arc::new(v);
    memo.lock().unwrap().insert((nu.clone(), cutoff), v.clone());
    Ok(v)
}

/// `1 + Σ (x_i + x_i⁻¹) + y + y⁻¹`.
pub fn natural_character(m: usize) -> TruncatedSeries {
    let mut terms =
        vec![(Monomial::ONE, IBig::ONE), (Monomial::new(&[], 1), IBig::ONE), (Monomial::new(&[], -1), IBig::ONE)];
    for i in 1..=m {
        terms.push((Monomial::x_var(i), IBig::ONE));
        terms.push((Monomial::x_var(i).inverse(), IBig::ONE));
    }
    TruncatedSeries::polynomial(m, terms)
}

/// Kac's character formula for a typical dominant λ, evaluated directly.
///
/// The alternating sum `Σ_{w∈W} (−1)^{ℓ(w)} e^{w(λ+ρ)−ρ}` over the full Weyl
/// group is multiplied by the odd factors and by the geometric expansions of
/// `(1 − x_i²)⁻¹`, `(1 − x_i x_j)⁻¹`; the remaining degree-0 factors
/// `(1 − y⁻¹)` and `(1 − x_i/x_j)` are divided out exactly.
pub fn kac_typical_character(lambda: &Weight, cutoff: i64) -> Result<TruncatedSeries> {
    lambda.check_dominant_integral().map_err(Error::NotDominant)?;
    if !atypical_roots(lambda).is_empty() {
        return Err(Error::Precondition(format!("{lambda} is atypical")));
    }
    let m = lambda.m();
    let shifted = lambda.rho_shifted();
    let mut alt = Vec::new();
    for sigma in all_signed_permutations(m) {
        for eps_sign in [1i64, -1] {
            let w = sigma.act(&shifted)?;
            let w = w.with_eps(w.eps() * eps_sign);
            let mon = weight_monomial(&w.rho_unshifted())?;
            alt.push((mon, IBig::from(sigma.parity() as i64 * eps_sign)));
        }
    }
    let mut num = TruncatedSeries::polynomial(m, alt).mul(&odd_numerator(m))?;
    for i in 1..=m {
        num = num.mul(&binomial(m, Monomial::x_var(i), 1))?;
    }
    let low = num.min_degree().unwrap_or(0);
    let window = cutoff - low;
    let mut series = num;
    for i in 1..=m {
        let mut sq = unit(m, i);
        sq[i - 1] = 2;
        series = series.mul(&geom_inverse(m, &Monomial::new(&sq, 0), window)?)?;
        for j in i + 1..=m {
            let mut e = unit(m, i);
            e[j - 1] = 1;
            series = series.mul(&geom_inverse(m, &Monomial::new(&e, 0), window)?)?;
        }
    }
    series = series.truncate(cutoff);
    series = series.divide_by_one_minus(&Monomial::new(&[], -1))?;
    for i in 1..=m {
        for j in i + 1..=m {
            let mut e = unit(m, i);
            e[j - 1] = -1;
            series = series.divide_by_one_minus(&Monomial::new(&e, 0))?;
        }
    }
    Ok(series)
}
