//! Recognizing colorful words and building canonical ones.

use colorful_tverberg::words::{canonical_word, find_colorful_subword, is_colorful, Word};
use colorful_tverberg::{Face, Result};

pub fn run_example() -> Result<()> {
    let w = Word::from([1, 2, 4, 3, 4, 2, 1, 3, 4, 2, 1, 3, 4]);
    for d in 1..=4 {
        println!("{w} is {}{d}-colorful", if is_colorful(&w, d) { "" } else { "not " });
    }

    let sigma = Face::from([1, 2, 3]);
    for d in 0..=3 {
        let c = canonical_word(&sigma, d)?;
        println!("canonical {d}-colorful word on {{{sigma}}}: {c}");
    }

    let host = Word::from([3, 1, 2, 2, 1, 3, 1, 2, 3]);
    for d in 1..=2 {
        match find_colorful_subword(&host, &sigma, d)? {
            Some(cert) => println!("{host} ⊇ {} (d = {d}, {cert})", host.subword(&cert.positions)),
            None => println!("{host} has no {d}-colorful subword on {{{sigma}}}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
