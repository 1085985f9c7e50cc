//! Extending a partition that induces a cone to one covering every point.

use colorful_tverberg::geometry::{integer, PointSequence};
use colorful_tverberg::tverberg::{extend_partition_for_cone, nerve, Partition};
use colorful_tverberg::{format, Face, Result, SimplicialComplex};

pub fn run_example() -> Result<()> {
    let p = PointSequence::on_line(&[integer(0), integer(1), integer(2), integer(10)]);
    let parts = Partition::new([(1, vec![0, 2]), (2, vec![1])])?;
    let k = SimplicialComplex::from_facets([Face::from([1, 2])]);
    println!("cone apices: {}", k.cone_vertices());

    let extended = extend_partition_for_cone(&k, &p, &parts)?;
    print!("extended partition:\n{}", format::render_partition(&extended));
    println!("nerve unchanged: {}", nerve(&p, &extended)? == k);

    let two_points = SimplicialComplex::from_facets([Face::from([1]), Face::from([2])]);
    match extend_partition_for_cone(&two_points, &p, &parts) {
        Ok(_) => println!("unexpected success"),
        Err(e) => println!("two isolated vertices: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
