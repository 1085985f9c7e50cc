//! Finds moment-curve parameters whose minimal Tverberg partitions are
//! exactly the colorful ones.
//!
//! Run with `cargo run --release --example moment_curve_search`.

use colorful_tverberg::geometry::{in_general_position, integer, moment_curve};
use colorful_tverberg::tverberg::colorful_minimality_check;
use colorful_tverberg::Result;

/// Smallest power-of-two base `2^k ≤ 2^max_exp` for which `n` moment-curve
/// points in dimension `d` pass the colorful minimality check up to `r_max`.
pub fn first_good_base(n: usize, d: usize, r_max: usize, max_exp: u32) -> Result<Option<i64>> {
    for k in 1..=max_exp {
        let base = 1i64 << k;
        let p = moment_curve(n, d, &integer(base))?;
        if in_general_position(&p) && colorful_minimality_check(&p, d, r_max) {
            return Ok(Some(base));
        }
    }
    Ok(None)
}

pub fn run_example() -> Result<()> {
    for k in 1..=6u32 {
        let base = 1i64 << k;
        let p = moment_curve(7, 2, &integer(base))?;
        println!(
            "base {base:>3}: colorfully minimal up to 3 parts: {}",
            colorful_minimality_check(&p, 2, 3)
        );
    }
    match first_good_base(7, 2, 3, 20)? {
        Some(b) => println!("first good base: {b}"),
        None => println!("no base up to 2^20 works"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
