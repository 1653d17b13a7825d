//! Exact checks of the character identities against independent routes.
//!
//! Every check compares two truncated series coefficient by coefficient on
//! the common window (all monomials of x-degree at most the smaller cutoff)
//! and records the first disagreeing monomial in graded order.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use dashu_int::IBig;
use rayon::prelude::*;
use serde::Serialize;

use crate::block::{atypical_roots, dominant_weights, g0_dominant_weights, is_tail, neighbor_set, theta, Flavor};
use crate::error::{Error, Result};
use crate::formulae::{
    c_lambda_series, expansion_nontail_closed_with, expansion_nontail_recursive_with, expansion_to_series,
    expansion_typical, irreducible_expansion_with, self_conjugate_sum, terms_to_series, Mutation,
};
use crate::half::HalfInt;
use crate::series::{weight_monomial, Monomial, TruncatedSeries};
use crate::verma::{kac_typical_character, natural_character, verma_character};
use crate::weight::Weight;
use crate::weyl::all_signed_permutations;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Discrepancy {
    pub monomial: String,
    pub x: Vec<i64>,
    pub y: i64,
    pub lhs: String,
    pub rhs: String,
}

impl Discrepancy {
    fn new(m: usize, mon: &Monomial, lhs: &IBig, rhs: &IBig) -> Self {
        let rendered = TruncatedSeries::zero(m).render_monomial(mon);
        Discrepancy { monomial: rendered, x: mon.x_exp(m), y: mon.y_exp(), lhs: lhs.to_string(), rhs: rhs.to_string() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity_name: String,
    pub m: usize,
    pub weight: Option<Weight>,
    pub cutoff: i64,
    /// Largest x-degree at which coefficients were compared.
    pub window: Option<i64>,
    pub pass: bool,
    pub first_discrepancy: Option<Discrepancy>,
    pub reason: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    fn start(name: &str, m: usize, weight: Option<&Weight>, cutoff: i64) -> Self {
        VerificationReport {
            identity_name: name.to_string(),
            m,
            weight: weight.cloned(),
            cutoff,
            window: None,
            pass: true,
            first_discrepancy: None,
            reason: None,
            elapsed: Duration::ZERO,
        }
    }

    fn fail(&mut self, reason: impl Into<String>) {
        self.pass = false;
        if self.reason.is_none() {
            self.reason = Some(reason.into());
        }
    }

    fn compare(&mut self, lhs: &TruncatedSeries, rhs: &TruncatedSeries, cutoff: i64) {
        let window = [lhs.cutoff(), rhs.cutoff()].into_iter().flatten().fold(cutoff, i64::min);
        self.window = Some(self.window.map_or(window, |w| w.min(window)));
        let (l, r) = (lhs.truncate(window), rhs.truncate(window));
        let diff = match l.sub(&r) {
            Ok(d) => d,
            Err(e) => return self.fail(e.to_string()),
        };
        if let Some((mon, _)) = diff.terms().into_iter().next() {
            self.first_discrepancy = Some(Discrepancy::new(lhs.m(), &mon, &l.coeff(&mon), &r.coeff(&mon)));
            self.fail("coefficient mismatch");
        }
    }

    fn finish(mut self, started: Instant, outcome: Result<()>) -> Self {
        if let Err(e) = outcome {
            self.fail(format!("error: {e}"));
        }
        self.elapsed = started.elapsed();
        self
    }

    pub fn summary_line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let weight = self.weight.as_ref().map_or("-".to_string(), |w| w.to_string());
        let mut line = format!("{status} {:<14} m={} λ={weight} D={}", self.identity_name, self.m, self.cutoff);
        if let Some(r) = &self.reason {
            line.push_str(&format!("  [{r}]"));
        }
        if let Some(d) = &self.first_discrepancy {
            line.push_str(&format!("  at {}: {} vs {}", d.monomial, d.lhs, d.rhs));
        }
        line
    }
}

fn run(
    name: &str,
    m: usize,
    weight: Option<&Weight>,
    cutoff: i64,
    body: impl FnOnce(&mut VerificationReport) -> Result<()>,
) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::start(name, m, weight, cutoff);
    let outcome = body(&mut report);
    report.finish(started, outcome)
}

/// `1/(1 + mon)` up to x-degree `cutoff`.
fn alternating_inverse(m: usize, mon: Monomial, cutoff: i64) -> TruncatedSeries {
    let d = mon.degree();
    let terms = (0..=cutoff / d).map(|k| (mon.pow(k), IBig::from(if k % 2 == 0 { 1 } else { -1 })));
    TruncatedSeries::truncated(m, cutoff, Some(0), terms.collect::<Vec<_>>())
}

/// `∏(1−xᵢ)∏_{i<j}(1−xᵢxⱼ) / ∏(1+xᵢy)(1+xᵢy⁻¹)` against the self-conjugate partition sum.
pub fn check_trivial_identity(m: usize, cutoff: i64) -> VerificationReport {
    run("trivial", m, None, cutoff, |rep| {
        let mut lhs = TruncatedSeries::one(m);
        for i in 1..=m {
            let xi = Monomial::x_var(i);
            lhs = lhs.mul(&TruncatedSeries::polynomial(m, [(Monomial::ONE, IBig::ONE), (xi, IBig::from(-1))]))?;
            for j in i + 1..=m {
                let xij = xi.mul(&Monomial::x_var(j));
                lhs = lhs.mul(&TruncatedSeries::polynomial(m, [(Monomial::ONE, IBig::ONE), (xij, IBig::from(-1))]))?;
            }
        }
        for i in 1..=m {
            let xi = Monomial::x_var(i);
            lhs = lhs.mul(&alternating_inverse(m, xi.mul(&Monomial::y_var()), cutoff))?;
            lhs = lhs.mul(&alternating_inverse(m, xi.mul(&Monomial::y_var().inverse()), cutoff))?;
        }
        let rhs = self_conjugate_sum(m, cutoff)?;
        rep.compare(&lhs, &rhs, cutoff);
        Ok(())
    })
}

/// Kac's formula against the Γ_m expansion.
pub fn check_typical_dual_route(lambda: &Weight, cutoff: i64) -> VerificationReport {
    run("typical", lambda.m(), Some(lambda), cutoff, |rep| {
        let kac = kac_typical_character(lambda, cutoff)?;
        let gamma = expansion_to_series(&expansion_typical(lambda)?, cutoff)?;
        rep.compare(&kac, &gamma, cutoff);
        Ok(())
    })
}

/// `ch M_λ · ch V = Σ_{μ ∈ P⁽⁰⁾_λ} ch M_μ`.
pub fn check_verma_tensor(lambda: &Weight, cutoff: i64) -> VerificationReport {
    run("verma-tensor", lambda.m(), Some(lambda), cutoff, |rep| {
        let m = lambda.m();
        let lhs = verma_character(lambda, cutoff + 1)?.mul(&natural_character(m))?;
        let mut rhs = TruncatedSeries::zero(m).truncate(cutoff);
        for mu in neighbor_set(lambda, Flavor::Even)? {
            rhs = rhs.add(verma_character(&mu, cutoff)?.as_ref())?;
        }
        rep.compare(&lhs, &rhs, cutoff);
        Ok(())
    })
}

/// Whether `c_lambda_series` applies to λ.
pub fn has_c_series(lambda: &Weight) -> bool {
    let m = lambda.m();
    is_tail(lambda)
        || (lambda.delta_at(m) == HalfInt::ONE
            && lambda.eps() == HalfInt::ZERO
            && atypical_roots(lambda).iter().any(|r| r.index == m && r.sign == 1))
}

/// `C_λ` against the character of the Verma expansion.
pub fn check_c_equals_f(lambda: &Weight, cutoff: i64, mutation: Option<Mutation>) -> VerificationReport {
    run("c-equals-f", lambda.m(), Some(lambda), cutoff, |rep| {
        let c = c_lambda_series(lambda, cutoff)?;
        let f = expansion_to_series(&irreducible_expansion_with(lambda, mutation)?, cutoff)?;
        rep.compare(&c, &f, cutoff);
        Ok(())
    })
}

/// Coordinates of `ν − λ` in the simple roots `δ₁−δ₂, …, δ_m−ε, ε`.
fn simple_root_coordinates(beta: &Weight) -> Vec<HalfInt> {
    let mut acc = HalfInt::ZERO;
    let mut out: Vec<HalfInt> = beta
        .delta()
        .iter()
        .map(|b| {
            acc += *b;
            acc
        })
        .collect();
    out.push(beta.eps() + acc);
    out
}

fn monomial_weight(m: usize, mon: &Monomial) -> Weight {
    let delta: Vec<i64> = mon.x_exp(m).iter().map(|e| -e).collect();
    Weight::integral(&delta, mon.y_exp()).expect("rank within bounds")
}

/// Finite-dimensional character properties of `ch L_λ`.
pub fn check_irreducible_sanity(lambda: &Weight, cutoff: i64, mutation: Option<Mutation>) -> VerificationReport {
    run("sanity", lambda.m(), Some(lambda), cutoff, |rep| {
        let m = lambda.m();
        let e = irreducible_expansion_with(lambda, mutation)?;
        let (ch, skipped) = terms_to_series(m, &e.materialize_for_cutoff(cutoff), cutoff)?;
        rep.window = Some(cutoff);
        if skipped > 0 {
            rep.fail(format!("{skipped} member weights are not g0-dominant"));
        }
        let top = weight_monomial(lambda)?;
        let hw = ch.coeff(&top);
        if hw != IBig::ONE {
            rep.first_discrepancy = Some(Discrepancy::new(m, &top, &hw, &IBig::ONE));
            rep.fail("highest weight coefficient is not 1");
            return Ok(());
        }
        let max_deg = lambda.delta_sum().twice() / 2;
        for (mon, c) in ch.terms() {
            if c < IBig::ZERO {
                rep.first_discrepancy = Some(Discrepancy::new(m, &mon, &c, &IBig::ZERO));
                rep.fail("negative coefficient");
                return Ok(());
            }
            if mon.degree() > max_deg {
                rep.first_discrepancy = Some(Discrepancy::new(m, &mon, &c, &IBig::ZERO));
                rep.fail("term beyond the lowest weight degree");
                return Ok(());
            }
            let nu = monomial_weight(m, &mon);
            if nu != *lambda && simple_root_coordinates(&(&nu - lambda)).iter().all(|c| *c >= HalfInt::ZERO) {
                rep.first_discrepancy = Some(Discrepancy::new(m, &mon, &c, &IBig::ZERO));
                rep.fail("weight above the highest weight");
                return Ok(());
            }
        }
        for sigma in all_signed_permutations(m) {
            for eps_sign in [1, -1] {
                let cmp = ch.weyl_image(&sigma, eps_sign);
                if let Some((mon, c, img, d)) = cmp.mismatches.first() {
                    rep.first_discrepancy = Some(Discrepancy::new(m, mon, c, d));
                    rep.fail(format!("not Weyl invariant: image {}", ch.render_monomial(img)));
                    return Ok(());
                }
            }
        }
        Ok(())
    })
}

/// `ch L_λ · ch L_{δ₁} = Σ_{μ ∈ P_λ} ch L_μ` for tail λ.
pub fn check_tensor_decomposition_tail(lambda: &Weight, cutoff: i64, mutation: Option<Mutation>) -> VerificationReport {
    run("tensor-tail", lambda.m(), Some(lambda), cutoff, |rep| {
        let m = lambda.m();
        if !is_tail(lambda) {
            return Err(Error::Precondition(format!("{lambda} is not a tail weight")));
        }
        let ch = |w: &Weight, d: i64| -> Result<TruncatedSeries> {
            expansion_to_series(&irreducible_expansion_with(w, mutation)?, d)
        };
        let lhs = ch(lambda, cutoff + 1)?.mul(&natural_character(m))?;
        let mut rhs = TruncatedSeries::zero(m).truncate(cutoff);
        for mu in neighbor_set(lambda, Flavor::Super)? {
            rhs = rhs.add(&ch(&mu, cutoff)?)?;
        }
        rep.compare(&lhs, &rhs, cutoff);
        Ok(())
    })
}

/// Closed and recursive non-tail formulas: same terms up to `j ≤ 12`, same series.
pub fn check_cross_path(lambda: &Weight, cutoff: i64, mutation: Option<Mutation>) -> VerificationReport {
    run("cross-path", lambda.m(), Some(lambda), cutoff, |rep| {
        let closed = expansion_nontail_closed_with(lambda, mutation)?;
        let recursive = expansion_nontail_recursive_with(lambda, mutation)?;
        if closed.materialize(12) != recursive.materialize(12) {
            rep.fail("expansions differ after materialization to j ≤ 12");
        }
        rep.compare(&expansion_to_series(&closed, cutoff)?, &expansion_to_series(&recursive, cutoff)?, cutoff);
        Ok(())
    })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Trivial,
    Typical,
    VermaTensor,
    CEqualsF,
    Sanity,
    TensorTail,
    CrossPath,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Trivial,
        Suite::Typical,
        Suite::VermaTensor,
        Suite::CEqualsF,
        Suite::Sanity,
        Suite::TensorTail,
        Suite::CrossPath,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Trivial => "trivial",
            Suite::Typical => "typical",
            Suite::VermaTensor => "verma-tensor",
            Suite::CEqualsF => "c-equals-f",
            Suite::Sanity => "sanity",
            Suite::TensorTail => "tensor-tail",
            Suite::CrossPath => "cross-path",
        }
    }

    /// Whether the suite evaluates a tail formula and so reacts to mutations.
    pub fn uses_tail_formula(&self) -> bool {
        matches!(self, Suite::CEqualsF | Suite::Sanity | Suite::TensorTail | Suite::CrossPath)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse { token: s.to_string(), reason: "unknown suite".into() })
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suites: Vec<Suite>,
    pub m_min: usize,
    pub m_max: usize,
    pub max_height: i64,
    pub cutoff: i64,
    pub mutation: Option<Mutation>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { suites: Suite::ALL.to_vec(), m_min: 1, m_max: 2, max_height: 3, cutoff: 6, mutation: None }
    }
}

#[derive(Clone, Debug)]
enum Task {
    Trivial(usize),
    Weighted(Suite, Weight),
}

fn tasks(suite: Suite, m: usize, max_height: i64) -> Vec<Task> {
    let weights = |f: &dyn Fn(&Weight) -> bool| -> Vec<Task> {
        dominant_weights(m, max_height).into_iter().filter(|w| f(w)).map(|w| Task::Weighted(suite, w)).collect()
    };
    match suite {
        Suite::Trivial => vec![Task::Trivial(m)],
        Suite::Typical => weights(&|w| atypical_roots(w).is_empty()),
        Suite::VermaTensor => {
            g0_dominant_weights(m, max_height).into_iter().map(|w| Task::Weighted(suite, w)).collect()
        }
        Suite::CEqualsF => weights(&has_c_series),
        Suite::Sanity => weights(&|_| true),
        Suite::TensorTail => weights(&is_tail),
        Suite::CrossPath => {
            weights(&|w| !atypical_roots(w).is_empty() && !is_tail(w) && theta(w).is_ok_and(|t| t >= 1))
        }
    }
}

fn execute(task: &Task, cutoff: i64, mutation: Option<Mutation>) -> VerificationReport {
    match task {
        Task::Trivial(m) => check_trivial_identity(*m, cutoff),
        Task::Weighted(suite, w) => match suite {
            Suite::Trivial => unreachable!("trivial identity takes no weight"),
            Suite::Typical => check_typical_dual_route(w, cutoff),
            Suite::VermaTensor => check_verma_tensor(w, cutoff),
            Suite::CEqualsF => check_c_equals_f(w, cutoff, mutation),
            Suite::Sanity => check_irreducible_sanity(w, cutoff, mutation),
            Suite::TensorTail => check_tensor_decomposition_tail(w, cutoff, mutation),
            Suite::CrossPath => check_cross_path(w, cutoff, mutation),
        },
    }
}

/// Thread count from `OSPCHAR_THREADS`, if set to a positive integer.
pub fn thread_hint() -> Option<usize> {
    std::env::var("OSPCHAR_THREADS").ok()?.parse().ok().filter(|n| *n > 0)
}

/// Runs every configured check; reports are ordered by suite, rank and weight.
pub fn run_suite(config: &SuiteConfig) -> Vec<VerificationReport> {
    let mut work = Vec::new();
    for suite in &config.suites {
        for m in config.m_min.max(1)..=config.m_max.min(crate::MAX_RANK) {
            work.extend(tasks(*suite, m, config.max_height));
        }
    }
    let go =
        || -> Vec<VerificationReport> { work.par_iter().map(|t| execute(t, config.cutoff, config.mutation)).collect() };
    let mut reports = match thread_hint().and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()) {
        Some(pool) => pool.install(go),
        None => go(),
    };
    let order = |r: &VerificationReport| {
        let suite = Suite::ALL.iter().position(|s| s.name() == r.identity_name).unwrap_or(usize::MAX);
        (suite, r.m, r.weight.as_ref().map(|w| (w.height(), w.clone())))
    };
    reports.sort_by_key(order);
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(d: &[i64], e: i64) -> Weight {
        Weight::integral(d, e).unwrap()
    }

    #[test]
    fn trivial_identity_small() {
        for m in 1..=3 {
            let r = check_trivial_identity(m, 4);
            assert!(r.pass, "{}", r.summary_line());
            assert_eq!(r.window, Some(4));
        }
    }

    #[test]
    fn named_examples_pass() {
        assert!(check_typical_dual_route(&w(&[2], 0), 6).pass);
        for lam in [w(&[0], 0), w(&[1, 0], 0), w(&[1, 1], 2)] {
            let r = check_verma_tensor(&lam, 5);
            assert!(r.pass, "{}", r.summary_line());
        }
        for lam in [w(&[0, 0], 0), w(&[2, 0], 0), w(&[1, 1, 0], 0)] {
            let r = check_c_equals_f(&lam, 4, None);
            assert!(r.pass, "{}", r.summary_line());
        }
        for lam in [w(&[0], 0), w(&[1, 0], 0), w(&[2, 0], 0)] {
            let r = check_tensor_decomposition_tail(&lam, 5, None);
            assert!(r.pass, "{}", r.summary_line());
        }
        let r = check_irreducible_sanity(&w(&[1], 0), 6, None);
        assert!(r.pass, "{}", r.summary_line());
    }

    #[test]
    fn detects_corruption() {
        let mut rep = VerificationReport::start("probe", 1, None, 2);
        let a = TruncatedSeries::one(1).truncate(2);
        let b = a.add(&TruncatedSeries::monomial(1, Monomial::x_var(1), IBig::from(3))).unwrap();
        rep.compare(&a, &b, 2);
        assert!(!rep.pass);
        let d = rep.first_discrepancy.unwrap();
        assert_eq!((d.monomial.as_str(), d.lhs.as_str(), d.rhs.as_str()), ("x1", "0", "3"));
    }

    #[test]
    fn sanity_rejects_mutated_formula() {
        let r = check_irreducible_sanity(&Weight::zero(2), 6, Some(Mutation::JLo));
        assert!(!r.pass);
    }

    #[test]
    fn dominance_coordinates() {
        // ν − λ = δ₁ − δ₂ is a simple root
        assert!(simple_root_coordinates(&w(&[1, -1], 0)).iter().all(|c| *c >= HalfInt::ZERO));
        // −ε is negative
        assert!(!simple_root_coordinates(&w(&[0, 0], -1)).iter().all(|c| *c >= HalfInt::ZERO));
        // δ₂ = (δ₂ − ε) + ε
        assert_eq!(simple_root_coordinates(&w(&[0, 1], 0)), vec![HalfInt::ZERO, HalfInt::ONE, HalfInt::ONE]);
    }

    #[test]
    fn suite_is_deterministic_and_passes() {
        let cfg = SuiteConfig { m_max: 2, max_height: 2, cutoff: 4, ..SuiteConfig::default() };
        let a = run_suite(&cfg);
        let b = run_suite(&cfg);
        assert!(
            a.iter().all(|r| r.pass),
            "{:?}",
            a.iter().filter(|r| !r.pass).map(|r| r.summary_line()).collect::<Vec<_>>()
        );
        let names = |v: &[VerificationReport]| v.iter().map(|r| r.summary_line()).collect::<Vec<_>>();
        assert_eq!(names(&a), names(&b));
        assert!("sanity".parse::<Suite>().is_ok() && "bogus".parse::<Suite>().is_err());
    }
}
