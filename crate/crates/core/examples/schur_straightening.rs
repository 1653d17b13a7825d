//! Generalized Schur functions of arbitrary integer vectors.

use ospchar::schur::{schur_poly, straighten};

fn main() {
    for nu in [vec![2, 0], vec![-1, 2], vec![0, 2], vec![1, 3, 0], vec![0, -1, 1], vec![-2, -1]] {
        let s = straighten(&nu);
        if s.zero {
            println!("S{nu:?} = 0");
        } else {
            println!("S{nu:?} = {} S{:?} = {}", s.sign, s.dominant, schur_poly(&nu).render());
        }
    }
}
