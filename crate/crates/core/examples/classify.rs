//! Classify a few weights and print their block data.

use ospchar::block::{lambda_tail, phi_chain};
use ospchar::{classify, Weight};

fn main() -> ospchar::Result<()> {
    for text in ["0;0", "1;0", "2;0", "2,2;1", "0,0;0", "3,1,1;2"] {
        let lambda = Weight::parse(text, None)?;
        let c = classify(&lambda)?;
        print!("{lambda}: ");
        if c.typical {
            println!("typical");
            continue;
        }
        let roots: Vec<String> = c.atypical_roots.iter().map(|r| r.to_string()).collect();
        print!("atypical at {}", roots.join(", "));
        if c.tail {
            println!(", tail");
        } else {
            let chain: Vec<String> = phi_chain(&lambda)?.iter().map(|w| w.to_string()).collect();
            println!(", λ^T = {}, θ = {}, φ-chain {}", lambda_tail(&lambda)?, c.theta.unwrap(), chain.join(" → "));
        }
    }
    match Weight::parse("1,0;2", Some(2))?.check_dominant_integral() {
        Err(v) => println!("(1,0;2) is not dominant: {v}"),
        Ok(()) => unreachable!(),
    }
    Ok(())
}
