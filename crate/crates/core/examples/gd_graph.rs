//! The bipartite graphs G_d with a small multiplicity, and the sizes the
//! non-representability argument would need.

use colorful_tverberg::gd::{build_gd, GdParams, FullScale};
use colorful_tverberg::Result;

pub fn run_example() -> Result<()> {
    let g = build_gd(GdParams::new(3, 1, 1)?)?;
    println!(
        "G_1 on n = 3: {} vertices, {} edges, K(n) = {}",
        g.complex.vertices().len(),
        g.complex.edges().len(),
        g.params.k_bound()
    );
    for (sigma, members) in &g.groups {
        println!("  neighbourhood {{{sigma}}}: vertices {members:?}");
    }
    println!(
        "A independent: {}",
        g.complex.induced(&g.a).edges().is_empty()
    );

    for d in 1..=3 {
        let s = FullScale::for_dimension(d)?;
        println!(
            "d = {d}: n = {}, K = {}, multiplicity has {} bits",
            s.n,
            s.k,
            s.multiplicity.bits()
        );
        if let Err(e) = GdParams::full_scale(d) {
            println!("  {e}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
