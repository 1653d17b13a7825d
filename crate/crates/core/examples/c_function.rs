//! The C-function of a tail weight equals its character.

use ospchar::block::{dominant_weights, is_tail};
use ospchar::verify::check_c_equals_f;

fn main() {
    for m in 2..=3 {
        for lambda in dominant_weights(m, 3).into_iter().filter(is_tail) {
            println!("{}", check_c_equals_f(&lambda, 6, None).summary_line());
        }
    }
}
