//! Schur functions `S_ν(x₁,…,x_m)` for arbitrary integer vectors ν.
//!
//! With `ρ = (m−1,…,1,0)`, `S_ν` vanishes when `ν+ρ` has a repeated entry and
//! otherwise equals `±S_θ` for the dominant θ with `θ+ρ` the sorted `ν+ρ`.
//! Dominant θ are written `θ = s·(1,…,1) + π` with π a partition, so that
//! `S_θ = (x₁⋯x_m)^s S_π` and `S_π` is a Jacobi–Trudi determinant of
//! complete symmetric polynomials.

use std::sync::{Arc, OnceLock};

use dashu_int::IBig;

use crate::series::{Monomial, SeriesCache, TruncatedSeries};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StraightenedSchur {
    pub zero: bool,
    pub sign: i8,
    /// Weakly decreasing; meaningless when `zero`.
    pub dominant: Vec<i64>,
    /// `dominant − shift·(1,…,1)` is a partition with last part 0.
    pub shift: i64,
}

impl StraightenedSchur {
    pub fn partition(&self) -> Vec<i64> {
        self.dominant.iter().map(|d| d - self.shift).collect()
    }
}

pub fn straighten(nu: &[i64]) -> StraightenedSchur {
    let m = nu.len();
    let mut kappa: Vec<i64> = nu.iter().enumerate().map(|(i, v)| v + (m - 1 - i) as i64).collect();
    // insertion sort into decreasing order, counting transpositions
    let mut swaps = 0usize;
    for i in 1..m {
        let mut j = i;
        while j > 0 && kappa[j - 1] < kappa[j] {
            kappa.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    if kappa.windows(2).any(|w| w[0] == w[1]) {
        return StraightenedSchur { zero: true, sign: 0, dominant: Vec::new(), shift: 0 };
    }
    let dominant: Vec<i64> = kappa.iter().enumerate().map(|(i, k)| k - (m - 1 - i) as i64).collect();
    let shift = dominant.last().copied().unwrap_or(0);
    StraightenedSchur { zero: false, sign: if swaps.is_multiple_of(2) { 1 } else { -1 }, dominant, shift }
}

/// The complete homogeneous symmetric polynomial `h_l(x₁,…,x_m)`; zero for l < 0.
pub fn complete_h(l: i64, m: usize) -> Arc<TruncatedSeries> {
    static MEMO: OnceLock<SeriesCache<(i64, usize)>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(h) = memo.lock().unwrap().get(&(l, m)) {
        return h.clone();
    }
    let mut terms = Vec::new();
    if l >= 0 {
        let mut exps = vec![0i64; m];
        compositions(l, 0, &mut exps, &mut terms);
    }
    let h = Arc::new(TruncatedSeries::polynomial(m, terms));
    memo.lock().unwrap().insert((l, m), h.clone());
    h
}

fn compositions(rest: i64, i: usize, exps: &mut Vec<i64>, out: &mut Vec<(Monomial, IBig)>) {
    if i + 1 == exps.len() {
        exps[i] = rest;
        out.push((Monomial::new(exps, 0), IBig::ONE));
        return;
    }
    for e in 0..=rest {
        exps[i] = e;
        compositions(rest - e, i + 1, exps, out);
    }
}

/// `S_π` for a partition π with at most m parts, by Jacobi–Trudi.
pub fn schur_partition(pi: &[i64], m: usize) -> Arc<TruncatedSeries> {
    static MEMO: OnceLock<SeriesCache<(usize, Vec<i64>)>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let rows: Vec<i64> = pi.iter().copied().filter(|&p| p > 0).collect();
    debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]) && rows.len() <= m);
    if let Some(s) = memo.lock().unwrap().get(&(m, rows.clone())) {
        return s.clone();
    }
    let s = Arc::new(jacobi_trudi(&rows, m));
    memo.lock().unwrap().insert((m, rows), s.clone());
    s
}

/// `det(h_{π_r − r + c})` by expansion along rows over column subsets.
fn jacobi_trudi(rows: &[i64], m: usize) -> TruncatedSeries {
    let n = rows.len();
    let mut dp: Vec<Option<TruncatedSeries>> = vec![None; 1 << n];
    dp[0] = Some(TruncatedSeries::one(m));
    for mask in 0usize..1 << n {
        let r = mask.count_ones() as usize;
        if r == n {
            continue;
        }
        let Some(acc) = dp[mask].take() else { continue };
        for c in 0..n {
            if mask >> c & 1 == 1 {
                continue;
            }
            let h = complete_h(rows[r] - r as i64 + c as i64, m);
            if h.is_zero() {
                continue;
            }
            let mut term = acc.mul(&h).expect("exact polynomials");
            if (mask >> c).count_ones() % 2 == 1 {
                term = term.neg();
            }
            let slot = &mut dp[mask | 1 << c];
            *slot = Some(match slot.take() {
                None => term,
                Some(prev) => prev.add(&term).expect("same rank"),
            });
        }
        dp[mask] = Some(acc);
    }
    dp[(1 << n) - 1].take().unwrap_or_else(|| TruncatedSeries::zero(m))
}

/// `S_ν` as an exact Laurent polynomial.
pub fn schur_poly(nu: &[i64]) -> TruncatedSeries {
    let m = nu.len();
    let st = straighten(nu);
    if st.zero {
        return TruncatedSeries::zero(m);
    }
    let base = schur_partition(&st.partition(), m);
    let shifted = base.mul_monomial(&Monomial::new(&vec![st.shift; m], 0));
    if st.sign < 0 {
        shifted.neg()
    } else {
        shifted
    }
}

/// `S_ν` truncated at x-degree `cutoff`.
pub fn schur_series(nu: &[i64], cutoff: i64) -> TruncatedSeries {
    schur_poly(nu).truncate(cutoff)
}

/// Checks `S_{(ν₁,…,ν_m)}(x) = S_{(−ν_m,…,−ν₁)}(x⁻¹)` on degrees up to `cutoff`.
pub fn schur_inversion_check(nu: &[i64], cutoff: i64) -> bool {
    let lhs = schur_poly(nu);
    let rev: Vec<i64> = nu.iter().rev().map(|v| -v).collect();
    let rhs = schur_poly(&rev).invert_x().expect("exact polynomial");
    lhs.truncate(cutoff) == rhs.truncate(cutoff)
}
