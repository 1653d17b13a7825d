//! Tensoring a tail module with the natural module.

use ospchar::block::{neighbor_set, Flavor};
use ospchar::verify::check_tensor_decomposition_tail;
use ospchar::Weight;

fn main() -> ospchar::Result<()> {
    for text in ["0;0", "0,0;0", "1,0;0", "2,0;0", "1,1,0;0"] {
        let lambda = Weight::parse(text, None)?;
        let summands: Vec<String> = neighbor_set(&lambda, Flavor::Super)?.iter().map(|w| w.to_string()).collect();
        println!("L{lambda} ⊗ V = {}", summands.iter().map(|s| format!("L{s}")).collect::<Vec<_>>().join(" + "));
        println!("  {}", check_tensor_decomposition_tail(&lambda, 6, None).summary_line());
    }
    Ok(())
}
