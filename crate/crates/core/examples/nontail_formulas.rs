//! Non-tail atypical weights: the recursive and closed formulas agree.

use ospchar::block::{atypical_roots, dominant_weights, is_tail, theta};
use ospchar::formulae::{expansion_nontail_closed, expansion_nontail_recursive, expansion_to_series};

fn main() -> ospchar::Result<()> {
    for m in 1..=2 {
        for lambda in dominant_weights(m, 5) {
            if atypical_roots(&lambda).is_empty() || is_tail(&lambda) || theta(&lambda)? == 0 {
                continue;
            }
            let closed = expansion_nontail_closed(&lambda)?;
            let recursive = expansion_nontail_recursive(&lambda)?;
            let same = closed.materialize(12) == recursive.materialize(12);
            println!("{lambda} (θ = {}): {}", theta(&lambda)?, closed.render());
            println!("  recursive form agrees: {same}");
            let ch = expansion_to_series(&closed, 8)?;
            println!("  character: {} weights, total multiplicity {}", ch.len(), ch.coefficient_sum());
        }
    }
    Ok(())
}
