//! Weights of osp(3|2m) in the δε-basis.
//!
//! A weight `(λ₁,…,λ_m; λ₀)` stands for `Σ λᵢ δᵢ + λ₀ ε`. Entries are
//! half-integers so that ρ-shifted weights are representable exactly.
//! Slot indices in this crate are 1-based wherever they name a basis vector
//! `δ_i`, matching the usual notation; vectors are indexed from 0.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::half::HalfInt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight {
    delta: Vec<HalfInt>,
    eps: HalfInt,
}

/// The first condition of finite-dimensionality a weight fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DominanceViolation {
    NotIntegral,
    Negative { slot: usize },
    NotDecreasing { slot: usize },
    EpsWithoutLastDelta,
}

impl fmt::Display for DominanceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DominanceViolation::NotIntegral => write!(f, "all coefficients must be integers"),
            DominanceViolation::Negative { slot: 0 } => write!(f, "λ₀ must be nonnegative"),
            DominanceViolation::Negative { slot } => write!(f, "λ{slot} must be nonnegative"),
            DominanceViolation::NotDecreasing { slot } => {
                write!(f, "λ{} ≥ λ{} required", slot, slot + 1)
            }
            DominanceViolation::EpsWithoutLastDelta => write!(f, "λ₀=0 required when λ_m=0"),
        }
    }
}

impl Weight {
    pub fn new(delta: Vec<HalfInt>, eps: HalfInt) -> Result<Self> {
        check_rank(delta.len())?;
        Ok(Weight { delta, eps })
    }

    /// Integral weight from integer coefficients.
    pub fn integral(delta: &[i64], eps: i64) -> Result<Self> {
        Weight::new(delta.iter().map(|&d| HalfInt::from_int(d)).collect(), HalfInt::from_int(eps))
    }

    pub fn zero(m: usize) -> Self {
        Weight { delta: vec![HalfInt::ZERO; m], eps: HalfInt::ZERO }
    }

    /// `δ_slot` (1-based).
    pub fn delta_unit(m: usize, slot: usize) -> Self {
        let mut w = Weight::zero(m);
        w.delta[slot - 1] = HalfInt::ONE;
        w
    }

    pub fn eps_unit(m: usize) -> Self {
        Weight { delta: vec![HalfInt::ZERO; m], eps: HalfInt::ONE }
    }

    pub fn m(&self) -> usize {
        self.delta.len()
    }

    pub fn delta(&self) -> &[HalfInt] {
        &self.delta
    }

    /// Coefficient of `δ_slot` (1-based).
    pub fn delta_at(&self, slot: usize) -> HalfInt {
        self.delta[slot - 1]
    }

    pub fn eps(&self) -> HalfInt {
        self.eps
    }

    pub fn with_delta(&self, delta: Vec<HalfInt>) -> Self {
        debug_assert_eq!(delta.len(), self.m());
        Weight { delta, eps: self.eps }
    }

    pub fn with_eps(&self, eps: HalfInt) -> Self {
        Weight { delta: self.delta.clone(), eps }
    }

    pub fn is_integral(&self) -> bool {
        self.eps.is_integer() && self.delta.iter().all(|d| d.is_integer())
    }

    /// Integer coefficients `(λ₁..λ_m, λ₀)`, if integral.
    pub fn to_integers(&self) -> Option<(Vec<i64>, i64)> {
        let delta = self.delta.iter().map(|d| d.to_integer()).collect::<Option<Vec<_>>>()?;
        Some((delta, self.eps.to_integer()?))
    }

    /// Σ λᵢ over the δ-coordinates.
    pub fn delta_sum(&self) -> HalfInt {
        self.delta.iter().fold(HalfInt::ZERO, |acc, &d| acc + d)
    }

    /// `Σ_{i=0}^m |λᵢ|`.
    pub fn height(&self) -> HalfInt {
        self.delta.iter().fold(self.eps.abs(), |acc, d| acc + d.abs())
    }

    pub fn rho_shifted(&self) -> Self {
        self + &rho(self.m())
    }

    pub fn rho_unshifted(&self) -> Self {
        self - &rho(self.m())
    }

    pub fn scale(&self, k: i64) -> Self {
        Weight { delta: self.delta.iter().map(|&d| d * k).collect(), eps: self.eps * k }
    }

    pub fn check_dominant_integral(&self) -> std::result::Result<(), DominanceViolation> {
        let Some((delta, eps)) = self.to_integers() else {
            return Err(DominanceViolation::NotIntegral);
        };
        if eps < 0 {
            return Err(DominanceViolation::Negative { slot: 0 });
        }
        if let Some(i) = delta.iter().position(|&d| d < 0) {
            return Err(DominanceViolation::Negative { slot: i + 1 });
        }
        if let Some(i) = delta.windows(2).position(|w| w[0] < w[1]) {
            return Err(DominanceViolation::NotDecreasing { slot: i + 1 });
        }
        if delta[delta.len() - 1] == 0 && eps != 0 {
            return Err(DominanceViolation::EpsWithoutLastDelta);
        }
        Ok(())
    }

    /// Highest weight of a finite-dimensional irreducible module.
    pub fn is_dominant_integral(&self) -> bool {
        self.check_dominant_integral().is_ok()
    }

    /// Highest weight of a finite-dimensional irreducible `g₀ = gl(m) ⊕ sl(2)`-module
    /// (integral weights only).
    pub fn is_g0_dominant(&self) -> bool {
        self.is_integral() && !self.eps.is_negative() && self.delta.windows(2).all(|w| w[0] >= w[1])
    }

    /// Parses `"λ₁,…,λ_m;λ₀"`, optionally wrapped in parentheses.
    pub fn parse(text: &str, m: Option<usize>) -> Result<Self> {
        let trimmed = text.trim();
        let inner = trimmed.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(trimmed);
        let (deltas, eps) = inner.split_once(';').ok_or_else(|| Error::Parse {
            token: inner.to_string(),
            reason: "expected `;` before the ε-coefficient".into(),
        })?;
        let int = |tok: &str| -> Result<i64> {
            let tok = tok.trim();
            tok.replace('−', "-")
                .parse::<i64>()
                .map_err(|_| Error::Parse { token: tok.to_string(), reason: "not an integer".into() })
        };
        let delta = deltas.split(',').map(int).collect::<Result<Vec<_>>>()?;
        let eps = int(eps)?;
        if let Some(m) = m {
            if delta.len() != m {
                return Err(Error::Parse {
                    token: deltas.trim().to_string(),
                    reason: format!("expected {m} δ-coefficients, found {}", delta.len()),
                });
            }
        }
        Weight::integral(&delta, eps)
    }

    /// Text form `λ₁,…,λ_m;λ₀` accepted by [`Weight::parse`].
    pub fn to_text(&self) -> String {
        let d: Vec<String> = self.delta.iter().map(|d| d.to_string()).collect();
        format!("{};{}", d.join(","), self.eps)
    }
}

fn check_rank(m: usize) -> Result<()> {
    if m == 0 || m > crate::MAX_RANK {
        Err(Error::UnsupportedRank(m))
    } else {
        Ok(())
    }
}

/// `ρ = (m−3/2, m−5/2, …, 1/2, −1/2; 1/2)`.
pub fn rho(m: usize) -> Weight {
    let m = m as i64;
    Weight { delta: (1..=m).map(|i| HalfInt::from_twice(2 * (m - i) - 1)).collect(), eps: HalfInt::HALF }
}

/// The invariant form: `(δᵢ,δⱼ) = −δᵢⱼ`, `(ε,ε) = 1`, `(δᵢ,ε) = 0`.
pub fn bilinear_form(a: &Weight, b: &Weight) -> Result<Rational64> {
    if a.m() != b.m() {
        return Err(Error::RankMismatch { expected: a.m(), found: b.m() });
    }
    let quad: i64 =
        a.eps.twice() * b.eps.twice() - a.delta.iter().zip(&b.delta).map(|(x, y)| x.twice() * y.twice()).sum::<i64>();
    Ok(Rational64::new(quad, 4))
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.m(), rhs.m(), "rank mismatch");
        Weight { delta: self.delta.iter().zip(&rhs.delta).map(|(&a, &b)| a + b).collect(), eps: self.eps + rhs.eps }
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.m(), rhs.m(), "rank mismatch");
        Weight { delta: self.delta.iter().zip(&rhs.delta).map(|(&a, &b)| a - b).collect(), eps: self.eps - rhs.eps }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { delta: self.delta.iter().map(|&d| -d).collect(), eps: -self.eps }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Weight", 3)?;
        s.serialize_field("m", &self.m())?;
        match self.to_integers() {
            Some((delta, eps)) => {
                s.serialize_field("delta", &delta)?;
                s.serialize_field("eps", &eps)?;
            }
            None => {
                let delta2: Vec<i64> = self.delta.iter().map(|d| d.twice()).collect();
                s.serialize_field("delta2", &delta2)?;
                s.serialize_field("eps2", &self.eps.twice())?;
            }
        }
        s.end()
    }
}

#[derive(Deserialize)]
struct WeightRepr {
    m: usize,
    delta: Option<Vec<i64>>,
    eps: Option<i64>,
    delta2: Option<Vec<i64>>,
    eps2: Option<i64>,
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = WeightRepr::deserialize(deserializer)?;
        let (delta, eps) = match (r.delta, r.eps, r.delta2, r.eps2) {
            (Some(d), Some(e), None, None) => {
                (d.into_iter().map(HalfInt::from_int).collect::<Vec<_>>(), HalfInt::from_int(e))
            }
            (None, None, Some(d), Some(e)) => {
                (d.into_iter().map(HalfInt::from_twice).collect::<Vec<_>>(), HalfInt::from_twice(e))
            }
            _ => return Err(de::Error::custom("expected either delta/eps or delta2/eps2")),
        };
        if delta.len() != r.m {
            return Err(de::Error::custom(format!("m = {} but {} δ-coefficients", r.m, delta.len())));
        }
        Weight::new(delta, eps).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(delta: &[i64], eps: i64) -> Weight {
        Weight::integral(delta, eps).unwrap()
    }

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn form_on_basis() {
        let d1 = Weight::delta_unit(2, 1);
        let e = Weight::eps_unit(2);
        assert_eq!(bilinear_form(&d1, &d1).unwrap(), Rational64::from(-1));
        assert_eq!(bilinear_form(&e, &e).unwrap(), Rational64::from(1));
        assert_eq!(bilinear_form(&d1, &e).unwrap(), Rational64::from(0));
        let iso = &d1 + &e;
        assert_eq!(bilinear_form(&iso, &iso).unwrap(), Rational64::from(0));
        assert!(matches!(bilinear_form(&d1, &Weight::zero(3)), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(1), Weight::new(vec![h(-1)], h(1)).unwrap());
        assert_eq!(rho(2), Weight::new(vec![h(1), h(-1)], h(1)).unwrap());
        assert_eq!(rho(3), Weight::new(vec![h(3), h(1), h(-1)], h(1)).unwrap());
    }

    #[test]
    fn heights() {
        assert_eq!(w(&[2, 1], 3).height(), HalfInt::from_int(6));
        assert_eq!(Weight::zero(3).height(), HalfInt::ZERO);
        assert_eq!(w(&[1, -1], 0).height(), HalfInt::from_int(2));
    }

    #[test]
    fn dominance() {
        assert!(w(&[2, 1], 3).is_dominant_integral());
        assert_eq!(w(&[1, 2], 0).check_dominant_integral(), Err(DominanceViolation::NotDecreasing { slot: 1 }));
        assert_eq!(w(&[1, 0], 2).check_dominant_integral(), Err(DominanceViolation::EpsWithoutLastDelta));
        assert_eq!(rho(2).check_dominant_integral(), Err(DominanceViolation::NotIntegral));
    }

    #[test]
    fn g0_dominance() {
        assert!(w(&[0, -3], 3).is_g0_dominant());
        assert!(!w(&[-1, 0], 1).is_g0_dominant());
        assert!(!w(&[1, 1], -1).is_g0_dominant());
    }

    #[test]
    fn parse_and_print() {
        let x = Weight::parse("2,2;1", Some(2)).unwrap();
        assert_eq!(x, w(&[2, 2], 1));
        assert_eq!(x.to_text(), "2,2;1");
        assert_eq!(Weight::parse("(−1, 0; 0)", None).unwrap(), w(&[-1, 0], 0));
        match Weight::parse("2,x;1", Some(2)) {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Weight::parse("2,1", Some(2)).is_err());
        assert!(Weight::parse("2,1;0", Some(3)).is_err());
    }

    #[test]
    fn json_forms() {
        let x = w(&[2, 0], 1);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"m":2,"delta":[2,0],"eps":1}"#);
        assert_eq!(serde_json::from_str::<Weight>(&s).unwrap(), x);
        let r = rho(2);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"m":2,"delta2":[1,-1],"eps2":1}"#);
        assert_eq!(serde_json::from_str::<Weight>(&s).unwrap(), r);
        assert!(serde_json::from_str::<Weight>(r#"{"m":3,"delta":[1],"eps":0}"#).is_err());
    }
}
