//! The tail formula at λ = 0 sums to the trivial character 1, and the
//! underlying partition identity holds as truncated series.

use ospchar::formulae::{expansion_tail, expansion_to_series};
use ospchar::verify::check_trivial_identity;
use ospchar::Weight;

fn main() -> ospchar::Result<()> {
    for m in 1..=3 {
        let e = expansion_tail(&Weight::zero(m))?;
        println!("m = {m}: {}", e.render());
        println!("  series to degree 8: {}", expansion_to_series(&e, 8)?);
        println!("  {}", check_trivial_identity(m, 8).summary_line());
    }
    Ok(())
}
