//! The natural module L_{δ₁} has 3 + 2m weights, each with multiplicity one.

use ospchar::formulae::{expansion_to_series, irreducible_expansion};
use ospchar::Weight;

fn main() -> ospchar::Result<()> {
    for m in 1..=4 {
        let delta1 = Weight::delta_unit(m, 1);
        let e = irreducible_expansion(&delta1)?;
        let s = expansion_to_series(&e, 8)?;
        println!("m = {m}: {} terms", s.len());
        println!("  expansion {}", e.render());
        println!("  character {}", s.render());
    }
    Ok(())
}
