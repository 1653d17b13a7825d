//! Sparse Laurent series in `x₁,…,x_m, y` with exact integer coefficients,
//! truncated by total x-degree.
//!
//! A series either is an exact Laurent polynomial (`cutoff = None`) or is
//! known exactly up to x-degree `cutoff`. The field `lower` is a proven lower
//! bound on the x-degrees of the untruncated series; it is what makes the
//! product of two truncated series sound.

use std::cmp::Ordering;
use std::fmt;

use dashu_int::IBig;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::Weight;
use crate::weyl::SignedPermutation;
use crate::MAX_RANK;

/// Process-wide cache of series keyed by `K`.
pub(crate) type SeriesCache<K> = std::sync::Mutex<FxHashMap<K, std::sync::Arc<TruncatedSeries>>>;

/// `x₁^{a₁}⋯x_m^{a_m} y^b`. Unused trailing x-slots are zero.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    x: [i16; MAX_RANK],
    y: i16,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: [0; MAX_RANK], y: 0 };

    pub fn new(x: &[i64], y: i64) -> Self {
        assert!(x.len() <= MAX_RANK, "too many variables");
        let mut out = Monomial { x: [0; MAX_RANK], y: narrow(y) };
        for (slot, &e) in out.x.iter_mut().zip(x) {
            *slot = narrow(e);
        }
        out
    }

    /// `x_slot` (1-based).
    pub fn x_var(slot: usize) -> Self {
        let mut out = Monomial::ONE;
        out.x[slot - 1] = 1;
        out
    }

    pub fn y_var() -> Self {
        Monomial { y: 1, ..Monomial::ONE }
    }

    pub fn x_exp(&self, m: usize) -> Vec<i64> {
        self.x[..m].iter().map(|&e| e as i64).collect()
    }

    pub fn x_at(&self, slot: usize) -> i64 {
        self.x[slot - 1] as i64
    }

    pub fn y_exp(&self) -> i64 {
        self.y as i64
    }

    pub fn degree(&self) -> i64 {
        self.x.iter().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.x.iter_mut().zip(other.x) {
            *a = narrow(*a as i64 + b as i64);
        }
        out.y = narrow(out.y as i64 + other.y as i64);
        out
    }

    pub fn pow(&self, k: i64) -> Monomial {
        let mut out = *self;
        for a in out.x.iter_mut() {
            *a = narrow(*a as i64 * k);
        }
        out.y = narrow(out.y as i64 * k);
        out
    }

    pub fn inverse(&self) -> Monomial {
        self.pow(-1)
    }

    /// `x ↦ x⁻¹`, y fixed.
    pub fn invert_x(&self) -> Monomial {
        let mut out = *self;
        for a in out.x.iter_mut() {
            *a = -*a;
        }
        out
    }

    /// Image under a Weyl group element acting on the underlying weight.
    pub fn weyl_image(&self, sigma: &SignedPermutation, eps_sign: i8) -> Monomial {
        let m = sigma.rank();
        let v = sigma.apply(&self.x_exp(m));
        let mut out = *self;
        for (slot, e) in out.x.iter_mut().zip(v) {
            *slot = narrow(e);
        }
        out.y = narrow(self.y as i64 * eps_sign as i64);
        out
    }

    fn cmp_graded(&self, other: &Monomial) -> Ordering {
        (self.degree(), self.x, self.y).cmp(&(other.degree(), other.x, other.y))
    }

    fn render(&self, m: usize) -> String {
        let mut parts = Vec::new();
        for slot in 1..=m {
            match self.x_at(slot) {
                0 => {}
                1 => parts.push(format!("x{slot}")),
                e => parts.push(format!("x{slot}^{e}")),
            }
        }
        match self.y {
            0 => {}
            1 => parts.push("y".to_string()),
            e => parts.push(format!("y^{e}")),
        }
        parts.join("*")
    }
}

fn narrow(e: i64) -> i16 {
    i16::try_from(e).expect("exponent out of range")
}

/// `e^w = ∏ x_i^{−wᵢ} · y^{w₀}` for integral w.
pub fn weight_monomial(w: &Weight) -> Result<Monomial> {
    let (delta, eps) = w.to_integers().ok_or_else(|| Error::NotIntegral(w.to_string()))?;
    let x: Vec<i64> = delta.iter().map(|d| -d).collect();
    Ok(Monomial::new(&x, eps))
}

#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    m: usize,
    cutoff: Option<i64>,
    lower: Option<i64>,
    terms: FxHashMap<Monomial, IBig>,
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.cutoff == other.cutoff && self.terms == other.terms
    }
}

impl Eq for TruncatedSeries {}

impl TruncatedSeries {
    /// The exact zero polynomial.
    pub fn zero(m: usize) -> Self {
        TruncatedSeries { m, cutoff: None, lower: None, terms: FxHashMap::default() }
    }

    pub fn one(m: usize) -> Self {
        TruncatedSeries::monomial(m, Monomial::ONE, IBig::ONE)
    }

    pub fn monomial(m: usize, mon: Monomial, coeff: IBig) -> Self {
        TruncatedSeries::polynomial(m, [(mon, coeff)])
    }

    /// An exact Laurent polynomial; repeated monomials are summed.
    pub fn polynomial(m: usize, terms: impl IntoIterator<Item = (Monomial, IBig)>) -> Self {
        let mut out = TruncatedSeries::zero(m);
        for (mon, c) in terms {
            out.add_term(mon, c);
        }
        out.lower = out.min_degree();
        out
    }

    /// Series known up to `cutoff`, with a proven lower bound on degrees.
    pub fn truncated(
        m: usize,
        cutoff: i64,
        lower: Option<i64>,
        terms: impl IntoIterator<Item = (Monomial, IBig)>,
    ) -> Self {
        let mut out = TruncatedSeries::zero(m);
        for (mon, c) in terms {
            if mon.degree() <= cutoff {
                out.add_term(mon, c);
            }
        }
        out.cutoff = Some(cutoff);
        out.lower = lower;
        out
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn cutoff(&self) -> Option<i64> {
        self.cutoff
    }

    pub fn lower(&self) -> Option<i64> {
        self.lower
    }

    pub fn is_exact(&self) -> bool {
        self.cutoff.is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mon: &Monomial) -> IBig {
        self.terms.get(mon).cloned().unwrap_or(IBig::ZERO)
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Whether a monomial of this degree is known exactly.
    pub fn covers(&self, degree: i64) -> bool {
        self.cutoff.is_none_or(|d| degree <= d)
    }

    /// Forget the lower bound.
    pub fn with_unknown_lower(mut self) -> Self {
        if self.cutoff.is_some() {
            self.lower = None;
        }
        self
    }

    /// Terms in graded-lexicographic order on (x-degree, x-exponents, y-exponent).
    pub fn terms(&self) -> Vec<(Monomial, IBig)> {
        let mut v: Vec<(Monomial, IBig)> = self.terms.iter().map(|(k, c)| (*k, c.clone())).collect();
        v.sort_by(|a, b| a.0.cmp_graded(&b.0));
        v
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &IBig)> {
        self.terms.iter()
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> IBig {
        self.terms.values().sum()
    }

    fn add_term(&mut self, mon: Monomial, c: IBig) {
        if c == IBig::ZERO {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(mon) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == IBig::ZERO {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// Lower bound usable in products: exact polynomials know theirs.
    fn effective_lower(&self) -> Option<i64> {
        match self.cutoff {
            None => self.min_degree(),
            Some(_) => self.lower,
        }
    }

    fn check_rank(&self, other: &TruncatedSeries) -> Result<()> {
        if self.m != other.m {
            return Err(Error::RankMismatch { expected: self.m, found: other.m });
        }
        Ok(())
    }

    pub fn truncate(&self, cutoff: i64) -> Self {
        let cutoff = self.cutoff.map_or(cutoff, |d| d.min(cutoff));
        TruncatedSeries {
            m: self.m,
            cutoff: Some(cutoff),
            lower: match self.cutoff {
                None => Some(self.min_degree().unwrap_or(cutoff.saturating_add(1))),
                Some(_) => self.lower,
            },
            terms: self.terms.iter().filter(|(k, _)| k.degree() <= cutoff).map(|(k, c)| (*k, c.clone())).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, k: &IBig) -> Self {
        if *k == IBig::ZERO {
            let mut out = TruncatedSeries::zero(self.m);
            out.cutoff = self.cutoff;
            out.lower = self.lower;
            return out;
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= k;
        }
        out
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<Self> {
        self.combine(other, true)
    }

    fn combine(&self, other: &TruncatedSeries, negate: bool) -> Result<Self> {
        self.check_rank(other)?;
        let cutoff = match (self.cutoff, other.cutoff) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let lower = match (self.effective_lower(), other.effective_lower()) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, None) if other.is_zero() && other.is_exact() => a,
            (None, b) if self.is_zero() && self.is_exact() => b,
            _ => None,
        };
        let mut out = TruncatedSeries { m: self.m, cutoff, lower, terms: FxHashMap::default() };
        let keep = |mon: &Monomial| cutoff.is_none_or(|d| mon.degree() <= d);
        out.terms.reserve(self.terms.len().max(other.terms.len()));
        for (k, c) in &self.terms {
            if keep(k) {
                out.add_term(*k, c.clone());
            }
        }
        for (k, c) in &other.terms {
            if keep(k) {
                out.add_term(*k, if negate { -c.clone() } else { c.clone() });
            }
        }
        if out.cutoff.is_none() {
            out.lower = out.min_degree();
        }
        Ok(out)
    }

    /// In-place `self += k·other`; cutoffs and bounds combine as in [`add`](Self::add).
    pub fn add_scaled(&mut self, other: &TruncatedSeries, k: &IBig) -> Result<()> {
        let scaled = other.scale(k);
        *self = self.add(&scaled)?;
        Ok(())
    }

    /// The exact product on the largest window where it is determined.
    ///
    /// For truncated operands `(D_a, L_a)` and `(D_b, L_b)` the product is
    /// known up to `min(D_a + L_b, D_b + L_a)`.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<Self> {
        self.check_rank(other)?;
        let m = self.m;
        if (self.is_exact() && self.is_zero()) || (other.is_exact() && other.is_zero()) {
            return Ok(TruncatedSeries::zero(m));
        }
        let cutoff = match (self.cutoff, other.cutoff) {
            (None, None) => None,
            (Some(da), None) => Some(da.saturating_add(other.effective_lower().ok_or(Error::UnsoundCutoff)?)),
            (None, Some(db)) => Some(db.saturating_add(self.effective_lower().ok_or(Error::UnsoundCutoff)?)),
            (Some(da), Some(db)) => {
                let la = self.lower.ok_or(Error::UnsoundCutoff)?;
                let lb = other.lower.ok_or(Error::UnsoundCutoff)?;
                Some(da.saturating_add(lb).min(db.saturating_add(la)))
            }
        };
        let lower = match (self.effective_lower(), other.effective_lower()) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        let mut b_terms: Vec<(i64, Monomial, &IBig)> = other.terms.iter().map(|(k, c)| (k.degree(), *k, c)).collect();
        b_terms.sort_by_key(|t| t.0);
        let mut terms: FxHashMap<Monomial, IBig> = FxHashMap::default();
        for (ka, ca) in &self.terms {
            let da = ka.degree();
            for (db, kb, cb) in &b_terms {
                if let Some(d) = cutoff {
                    if da + db > d {
                        break;
                    }
                }
                let prod = ca * *cb;
                use std::collections::hash_map::Entry;
                match terms.entry(ka.mul(kb)) {
                    Entry::Occupied(mut e) => *e.get_mut() += prod,
                    Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        terms.retain(|_, c| *c != IBig::ZERO);
        let mut out = TruncatedSeries { m, cutoff, lower, terms };
        if out.cutoff.is_none() {
            out.lower = out.min_degree();
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, mon: &Monomial) -> Self {
        let d = mon.degree();
        TruncatedSeries {
            m: self.m,
            cutoff: self.cutoff.map(|c| c + d),
            lower: self.lower.map(|l| l + d),
            terms: self.terms.iter().map(|(k, c)| (k.mul(mon), c.clone())).collect(),
        }
    }

    /// Exact polynomial with every `x_i` replaced by `x_i⁻¹`.
    pub fn invert_x(&self) -> Result<Self> {
        if !self.is_exact() {
            return Err(Error::Precondition("x-inversion needs an exact polynomial".into()));
        }
        Ok(TruncatedSeries::polynomial(self.m, self.terms.iter().map(|(k, c)| (k.invert_x(), c.clone()))))
    }

    /// Quotient by `1 − mon` for a monomial of x-degree 0.
    ///
    /// Each string `{u·mon^k}` is summed cumulatively; the division is exact
    /// only when every string sums to zero.
    pub fn divide_by_one_minus(&self, mon: &Monomial) -> Result<Self> {
        if mon.degree() != 0 || *mon == Monomial::ONE {
            return Err(Error::Precondition(format!("divisor 1 − {} must have x-degree 0", mon.render(self.m))));
        }
        // position along the string: any coordinate where mon is nonzero
        let (pos, step) = match (0..MAX_RANK).find(|&i| mon.x[i] != 0) {
            Some(i) => (Some(i), mon.x[i] as i64),
            None => (None, mon.y as i64),
        };
        let coord = |k: &Monomial| -> i64 { pos.map_or(k.y as i64, |i| k.x[i] as i64) };
        let mut strings: FxHashMap<Monomial, Vec<(i64, IBig)>> = FxHashMap::default();
        for (k, c) in &self.terms {
            let n = coord(k).div_euclid(step);
            let base = k.mul(&mon.pow(-n));
            strings.entry(base).or_default().push((n, c.clone()));
        }
        let mut out =
            TruncatedSeries { m: self.m, cutoff: self.cutoff, lower: self.lower, terms: FxHashMap::default() };
        for (base, mut entries) in strings {
            entries.sort_by_key(|e| e.0);
            let mut acc = IBig::ZERO;
            let mut i = 0;
            let mut n = entries[0].0;
            loop {
                while i < entries.len() && entries[i].0 == n {
                    acc += &entries[i].1;
                    i += 1;
                }
                if i == entries.len() {
                    if acc != IBig::ZERO {
                        return Err(Error::InexactDivision(format!(
                            "string through {} does not sum to zero",
                            base.mul(&mon.pow(n)).render(self.m)
                        )));
                    }
                    break;
                }
                if acc != IBig::ZERO {
                    out.terms.insert(base.mul(&mon.pow(n)), acc.clone());
                }
                n += 1;
            }
        }
        Ok(out)
    }

    /// Compare coefficients of each retained monomial with those of its image.
    pub fn weyl_image(&self, sigma: &SignedPermutation, eps_sign: i8) -> WeylComparison {
        let mut report = WeylComparison::default();
        for (mon, c) in self.terms() {
            let img = mon.weyl_image(sigma, eps_sign);
            if !self.covers(img.degree()) {
                continue;
            }
            report.compared += 1;
            let d = self.coeff(&img);
            if d != c {
                report.mismatches.push((mon, c, img, d));
            }
        }
        report
    }

    /// Render with explicit variable names `x1..xm, y`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (mon, c)) in self.terms().into_iter().enumerate() {
            let neg = c < IBig::ZERO;
            let abs = if neg { -c } else { c };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = mon.render(self.m);
            match (body.is_empty(), abs == IBig::ONE) {
                (true, _) => out.push_str(&abs.to_string()),
                (false, true) => out.push_str(&body),
                (false, false) => out.push_str(&format!("{abs}*{body}")),
            }
        }
        out
    }

    pub fn render_monomial(&self, mon: &Monomial) -> String {
        let s = mon.render(self.m);
        if s.is_empty() {
            "1".to_string()
        } else {
            s
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())?;
        if let Some(d) = self.cutoff {
            write!(f, " + O(deg > {d})")?;
        }
        Ok(())
    }
}

/// Result of comparing a series with its image under a Weyl group element.
#[derive(Clone, Debug, Default)]
pub struct WeylComparison {
    pub compared: usize,
    /// `(monomial, coefficient, image monomial, coefficient of image)`.
    pub mismatches: Vec<(Monomial, IBig, Monomial, IBig)>,
}

impl WeylComparison {
    pub fn all_equal(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// `1 + mon + mon² + …` up to x-degree `cutoff`.
pub fn geom_inverse(m: usize, mon: &Monomial, cutoff: i64) -> Result<TruncatedSeries> {
    let d = mon.degree();
    if d < 1 {
        return Err(Error::NonTruncatable(d));
    }
    let mut terms = Vec::new();
    let mut k = 0;
    while k * d <= cutoff {
        terms.push((mon.pow(k), IBig::ONE));
        k += 1;
    }
    Ok(TruncatedSeries::truncated(m, cutoff, Some(0), terms))
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    x: Vec<i64>,
    y: i64,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    m: usize,
    cutoff: Option<i64>,
    lower: Option<i64>,
    terms: Vec<TermRepr>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            m: self.m,
            cutoff: self.cutoff,
            lower: self.lower,
            terms: self
                .terms()
                .into_iter()
                .map(|(k, c)| TermRepr { x: k.x_exp(self.m), y: k.y_exp(), c: c.to_string() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = SeriesRepr::deserialize(deserializer)?;
        if r.m == 0 || r.m > MAX_RANK {
            return Err(D::Error::custom(format!("unsupported rank {}", r.m)));
        }
        let mut terms = Vec::with_capacity(r.terms.len());
        for t in r.terms {
            if t.x.len() != r.m {
                return Err(D::Error::custom("exponent vector length differs from m"));
            }
            let c: IBig = t.c.parse().map_err(|_| D::Error::custom(format!("bad coefficient {}", t.c)))?;
            terms.push((Monomial::new(&t.x, t.y), c));
        }
        Ok(match r.cutoff {
            None => TruncatedSeries::polynomial(r.m, terms),
            Some(d) => TruncatedSeries::truncated(r.m, d, r.lower, terms),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ib(v: i64) -> IBig {
        IBig::from(v)
    }

    fn poly(m: usize, terms: &[(&[i64], i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::polynomial(m, terms.iter().map(|(x, y, c)| (Monomial::new(x, *y), ib(*c))))
    }

    #[test]
    fn product_examples() {
        let a = poly(1, &[(&[0], 0, 1), (&[1], 0, 1)]).truncate(2);
        let b = poly(1, &[(&[0], 0, 1), (&[1], 0, -1)]).truncate(2);
        let p = a.mul(&b).unwrap();
        assert_eq!(p.render(), "1 - x1^2");

        let a = poly(1, &[(&[0], 0, 1), (&[1], 1, 1)]);
        let b = poly(1, &[(&[0], 0, 1), (&[1], -1, 1)]);
        assert_eq!(a.mul(&b).unwrap().truncate(2).render(), "1 + x1*y^-1 + x1*y + x1^2");

        let y = poly(1, &[(&[0], 1, 1)]);
        let yi = poly(1, &[(&[0], -1, 1)]);
        assert_eq!(y.mul(&yi).unwrap(), TruncatedSeries::one(1));
    }

    #[test]
    fn unsound_products_are_rejected() {
        let a = poly(1, &[(&[1], 0, 1)]).truncate(3).with_unknown_lower();
        let b = poly(1, &[(&[1], 0, 1)]).truncate(3);
        assert_eq!(a.mul(&b), Err(Error::UnsoundCutoff));
        let exact = poly(1, &[(&[-2], 0, 1)]);
        let p = b.mul(&exact).unwrap();
        assert_eq!(p.cutoff(), Some(1));
    }

    #[test]
    fn truncated_cutoff_uses_lower_bounds() {
        let a = geom_inverse(1, &Monomial::x_var(1), 4).unwrap();
        let b = a.mul_monomial(&Monomial::new(&[-2], 0));
        assert_eq!(b.lower(), Some(-2));
        let p = a.mul(&b).unwrap();
        // min(4 + (−2), 2 + 0)
        assert_eq!(p.cutoff(), Some(2));
        assert_eq!(p.coeff(&Monomial::new(&[2], 0)), ib(5));
    }

    #[test]
    fn geometric_series() {
        let g = geom_inverse(1, &Monomial::x_var(1), 3).unwrap();
        assert_eq!(g.render(), "1 + x1 + x1^2 + x1^3");
        let g2 = geom_inverse(2, &Monomial::new(&[1, 1], 0), 3).unwrap();
        assert_eq!(g2.render(), "1 + x1*x2");
        let one_minus = poly(1, &[(&[0], 0, 1), (&[1], 0, -1)]);
        assert_eq!(g.mul(&one_minus).unwrap(), TruncatedSeries::one(1).truncate(3));
        assert_eq!(geom_inverse(1, &Monomial::y_var(), 3), Err(Error::NonTruncatable(0)));
    }

    #[test]
    fn weight_monomials() {
        assert_eq!(weight_monomial(&Weight::delta_unit(1, 1)).unwrap(), Monomial::new(&[-1], 0));
        assert_eq!(weight_monomial(&Weight::eps_unit(2)).unwrap(), Monomial::y_var());
        assert_eq!(weight_monomial(&Weight::zero(3)).unwrap(), Monomial::ONE);
        assert!(weight_monomial(&crate::weight::rho(1)).is_err());
    }

    #[test]
    fn weyl_comparisons() {
        let flip = SignedPermutation::flip(1, 1);
        let sym = poly(1, &[(&[1], 0, 1), (&[-1], 0, 1)]);
        assert!(sym.weyl_image(&flip, 1).all_equal());
        let asym = poly(1, &[(&[1], 0, 1)]);
        let r = asym.weyl_image(&flip, 1);
        assert_eq!(r.mismatches.len(), 1);
        assert_eq!(r.mismatches[0].3, IBig::ZERO);
        let natural = poly(1, &[(&[0], 0, 1), (&[1], 0, 1), (&[-1], 0, 1), (&[0], 1, 1), (&[0], -1, 1)]);
        assert!(natural.weyl_image(&flip, -1).all_equal());
        assert!(natural.weyl_image(&SignedPermutation::identity(1), -1).all_equal());
    }

    #[test]
    fn exact_division() {
        // (1 − y⁻¹)(y + 1) = y − y⁻¹
        let num = poly(1, &[(&[0], 1, 1), (&[0], -1, -1)]);
        let q = num.divide_by_one_minus(&Monomial::new(&[0], -1)).unwrap();
        assert_eq!(q, poly(1, &[(&[0], 1, 1), (&[0], 0, 1)]));
        // (1 − x1/x2)(x2 + x1) = x2 − x1²/x2
        let num = poly(2, &[(&[0, 1], 0, 1), (&[2, -1], 0, -1)]);
        let q = num.divide_by_one_minus(&Monomial::new(&[1, -1], 0)).unwrap();
        assert_eq!(q, poly(2, &[(&[0, 1], 0, 1), (&[1, 0], 0, 1)]));
        let bad = poly(1, &[(&[0], 1, 1)]);
        assert!(matches!(bad.divide_by_one_minus(&Monomial::new(&[0], -1)), Err(Error::InexactDivision(_))));
        // steps of 2 split into two residue strings
        let num = poly(1, &[(&[0], 2, 1), (&[0], 1, 1), (&[0], -1, -1), (&[0], 0, -1)]);
        let q = num.divide_by_one_minus(&Monomial::new(&[0], -2)).unwrap();
        assert_eq!(q, poly(1, &[(&[0], 2, 1), (&[0], 1, 1)]));
    }

    #[test]
    fn rendering_and_json() {
        let s = poly(2, &[(&[1, 0], -1, 2), (&[0, 0], 0, -1), (&[-1, 0], 0, 1)]).truncate(3);
        assert_eq!(s.render(), "x1^-1 - 1 + 2*x1*y^-1");
        let json = serde_json::to_string(&s).unwrap();
        assert!(json.contains(r#""c":"2""#));
        let back: TruncatedSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.lower(), s.lower());
    }

    fn arb_series(m: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((prop::collection::vec(-1i64..3, m), -2i64..3, -3i64..4), 0..8).prop_map(move |ts| {
            TruncatedSeries::polynomial(m, ts.into_iter().map(|(x, y, c)| (Monomial::new(&x, y), ib(c))))
        })
    }

    fn window(a: &TruncatedSeries, b: &TruncatedSeries) -> i64 {
        a.cutoff().unwrap_or(i64::MAX).min(b.cutoff().unwrap_or(i64::MAX))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_series(2), b in arb_series(2), c in arb_series(2), d in 0i64..6) {
            let (a, b, c) = (a.truncate(d), b.truncate(d + 1), c);
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            let w = window(&ab_c, &a_bc);
            prop_assert_eq!(ab_c.truncate(w), a_bc.truncate(w));
            let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
            let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            let w = window(&lhs, &rhs);
            prop_assert_eq!(lhs.truncate(w), rhs.truncate(w));
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        }

        #[test]
        fn geom_inverse_inverts(x in prop::collection::vec(0i64..3, 3), y in -2i64..3, d in 0i64..8) {
            let mon = Monomial::new(&x, y);
            prop_assume!(mon.degree() >= 1);
            let g = geom_inverse(3, &mon, d).unwrap();
            let one_minus = TruncatedSeries::polynomial(3, [(Monomial::ONE, ib(1)), (mon, ib(-1))]);
            prop_assert_eq!(g.mul(&one_minus).unwrap().truncate(d), TruncatedSeries::one(3).truncate(d));
        }

        #[test]
        fn weight_monomial_is_additive(a in prop::collection::vec(-3i64..4, 3), b in prop::collection::vec(-3i64..4, 3), e in -3i64..4, f in -3i64..4) {
            let wa = Weight::integral(&a, e).unwrap();
            let wb = Weight::integral(&b, f).unwrap();
            let sum = weight_monomial(&(&wa + &wb)).unwrap();
            prop_assert_eq!(sum, weight_monomial(&wa).unwrap().mul(&weight_monomial(&wb).unwrap()));
        }

        #[test]
        fn division_inverts_multiplication(a in arb_series(2), x in -2i64..3, y in -2i64..3) {
            let mon = Monomial::new(&[x, -x], y);
            prop_assume!(mon != Monomial::ONE);
            let one_minus = TruncatedSeries::polynomial(2, [(Monomial::ONE, ib(1)), (mon, ib(-1))]);
            let prod = a.mul(&one_minus).unwrap();
            prop_assert_eq!(prod.divide_by_one_minus(&mon).unwrap(), a);
        }
    }
}
