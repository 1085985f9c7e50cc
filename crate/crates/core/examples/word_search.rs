//! Bounded search for the least word representing a small complex.

use colorful_tverberg::gd::search_word;
use colorful_tverberg::words::{delta_complex, facet_concat_dimension, facet_concat_word};
use colorful_tverberg::{Face, Result, SimplicialComplex};

pub fn run_example() -> Result<()> {
    let complexes = [
        SimplicialComplex::simplex([1, 2]),
        SimplicialComplex::from_facets([Face::from([1, 2]), Face::from([2, 3])]),
        SimplicialComplex::from_facets([Face::from([1, 2]), Face::from([3, 4])]),
        SimplicialComplex::from_facets([Face::from([1, 2, 3]), Face::from([3, 4])]),
    ];
    for k in &complexes {
        let facets: Vec<String> = k.facets().iter().map(|f| format!("{{{f}}}")).collect();
        let m = facet_concat_dimension(k);
        let bound = facet_concat_word(k).len();
        for d in 1..=m {
            match search_word(k, d, bound)? {
                Some(w) => {
                    assert_eq!(delta_complex(&w, d), *k);
                    println!("{}  d = {d}: {w}", facets.join(" "));
                }
                None => println!("{}  d = {d}: none up to length {bound}", facets.join(" ")),
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
