//! Typical characters two ways: Kac's alternating sum and 2^m Verma terms.

use ospchar::block::{atypical_roots, dominant_weights};
use ospchar::formulae::{expansion_to_series, expansion_typical};
use ospchar::verma::kac_typical_character;

fn main() -> ospchar::Result<()> {
    for lambda in dominant_weights(2, 4).into_iter().filter(|w| atypical_roots(w).is_empty()) {
        let e = expansion_typical(&lambda)?;
        let via_verma = expansion_to_series(&e, 6)?;
        let via_kac = kac_typical_character(&lambda, 6)?;
        println!("{lambda}: {}", e.render());
        println!("  {} terms, routes agree: {}", via_kac.len(), via_kac == via_verma);
    }
    Ok(())
}
