//! The complex of colorful subword alphabets of a 13-letter word, with a
//! certificate for each facet.

use colorful_tverberg::geometry::{integer, moment_curve};
use colorful_tverberg::tverberg::{nerve, word_to_partition};
use colorful_tverberg::words::{chunks, delta_complex, find_colorful_subword, Word};
use colorful_tverberg::{Face, Result};

pub const FIGURE_WORD: [u32; 13] = [1, 2, 1, 4, 1, 2, 4, 1, 3, 2, 4, 3, 2];

pub fn run_example() -> Result<()> {
    let word = Word::from(FIGURE_WORD);
    let d = 2;
    let k = delta_complex(&word, d);
    println!("W = {word}");
    println!("facets of Δ^{d}(W):");
    for facet in k.facets() {
        let cert = find_colorful_subword(&word, facet, d)?.expect("facets have certificates");
        println!("  {{{facet}}}  subword {}  at {}", word.subword(&cert.positions), cert);
    }
    for pair in [[1, 3], [3, 4]] {
        let tau = Face::from(pair);
        println!(
            "W restricted to {{{tau}}}: {}  chunks: {}",
            word.restrict(&tau),
            chunks(&word, &tau).len()
        );
    }

    let p = moment_curve(word.len(), d, &integer(2))?;
    let geometric = nerve(&p, &word_to_partition(&word, &p)?)?;
    println!("nerve of moment-curve points labeled by W:");
    print!("{geometric}");
    println!("agrees with Δ^{d}(W): {}", geometric == k);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
