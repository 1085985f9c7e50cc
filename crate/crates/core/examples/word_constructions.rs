//! Word operations that realize complexes: letter deletion, facet
//! concatenation, lifting to a higher dimension and letter minimization.

use colorful_tverberg::words::{
    delete_letter, delta_complex, facet_concat_dimension, facet_concat_word, lift_word,
    minimize_letter, Word,
};
use colorful_tverberg::{Face, Result, SimplicialComplex};

pub fn run_example() -> Result<()> {
    let w = Word::from([2, 1, 3, 2, 1, 2, 3]);
    println!("{w} is 2-colorful: {}", w.is_colorful(2));
    for i in 1..=3 {
        let smaller = delete_letter(&w, i)?;
        println!("  delete {i}: {smaller} (2-colorful: {})", smaller.is_colorful(2));
    }

    let k = SimplicialComplex::from_facets([
        Face::from([1, 2, 3]),
        Face::from([3, 4]),
        Face::from([5]),
    ]);
    let m = facet_concat_dimension(&k);
    let fw = facet_concat_word(&k);
    println!("facet word {fw} represents K in dimension {m}: {}", delta_complex(&fw, m) == k);

    let base = Word::from([1, 2, 1, 3, 2]);
    let (lifted, relabel) = lift_word(&base);
    let expected = relabel.apply_complex(&delta_complex(&base, 1));
    println!(
        "lift of {base}: {lifted}, Δ² matches relabeled Δ¹: {}",
        delta_complex(&lifted, 2) == expected
    );

    let padded = Word::from([1, 2, 7, 1, 7, 3, 7, 2, 7]);
    let trimmed = minimize_letter(&padded, 7, 1)?;
    println!("minimizing 7 in {padded}: {trimmed}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
