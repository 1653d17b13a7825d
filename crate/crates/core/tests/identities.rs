use ospchar::block::{atypical_roots, dominant_weights, is_tail, neighbor_set, Flavor};
use ospchar::formulae::{c_lambda_series, expansion_to_series, irreducible_expansion};
use ospchar::verify::{check_c_equals_f, check_typical_dual_route, has_c_series};
use ospchar::Weight;

#[test]
fn typical_dual_route_beyond_height_four() {
    let ws: Vec<Weight> =
        [1, 2].into_iter().flat_map(|m| dominant_weights(m, 6)).filter(|w| atypical_roots(w).is_empty()).collect();
    assert!(ws.len() >= 20, "{}", ws.len());
    for w in &ws {
        let r = check_typical_dual_route(w, 6);
        assert!(r.pass, "{}", r.summary_line());
    }
}

#[test]
fn c_series_of_boundary_weights() {
    for m in 1..=3 {
        for lam in dominant_weights(m, 4).into_iter().filter(|w| has_c_series(w) && !is_tail(w)) {
            let r = check_c_equals_f(&lam, 5, None);
            assert!(r.pass, "{}", r.summary_line());
        }
    }
}

/// `C_λ · C_{δ₁} = Σ_{μ ∈ P_λ} C_μ` for tail λ.
#[test]
fn c_function_tensor_identity() {
    let cutoff = 5;
    for m in 1..=3 {
        let delta1 = Weight::delta_unit(m, 1);
        let c1 = c_lambda_series(&delta1, cutoff + 4).unwrap();
        for lam in dominant_weights(m, 3).into_iter().filter(is_tail) {
            let lhs = c_lambda_series(&lam, cutoff + 4).unwrap().mul(&c1).unwrap();
            assert!(lhs.cutoff().is_some_and(|d| d >= cutoff));
            let lhs = lhs.truncate(cutoff);
            let mut rhs = ospchar::series::TruncatedSeries::zero(m).truncate(cutoff);
            for mu in neighbor_set(&lam, Flavor::Super).unwrap() {
                assert!(has_c_series(&mu), "{lam}: {mu}");
                rhs = rhs.add(&c_lambda_series(&mu, cutoff).unwrap()).unwrap();
            }
            assert_eq!(lhs, rhs, "{lam}");
        }
    }
}

#[test]
fn finite_characters_have_integer_dimension_pattern() {
    // the character of L_λ truncated past its lowest weight is the full
    // character, so the coefficient sum is the superdimension-free dimension
    for m in 1..=2 {
        for lam in dominant_weights(m, 3) {
            let top = lam.delta_sum().twice() / 2;
            let full = expansion_to_series(&irreducible_expansion(&lam).unwrap(), top + 2).unwrap();
            assert!(full.max_degree().is_some_and(|d| d <= top), "{lam}");
            let again = expansion_to_series(&irreducible_expansion(&lam).unwrap(), top + 4).unwrap();
            assert_eq!(full.coefficient_sum(), again.coefficient_sum(), "{lam}");
        }
    }
}
