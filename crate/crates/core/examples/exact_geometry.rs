//! Exact hull intersections, affine intersections and general position.

use colorful_tverberg::geometry::{
    affine_intersection, convex_hull_witness, in_general_position, in_strong_general_position,
    moment_curve, rational, Point, PointSequence,
};
use colorful_tverberg::Result;

fn pts(coords: &[&[i64]]) -> Vec<Point> {
    coords.iter().map(|c| Point::from_integers(c)).collect()
}

pub fn run_example() -> Result<()> {
    let diagonals = vec![pts(&[&[0, 0], &[2, 2]]), pts(&[&[0, 2], &[2, 0]])];
    let w = convex_hull_witness(&diagonals)?.expect("diagonals cross");
    println!("diagonals meet at {} (verified: {})", w.point, w.verify(&diagonals));

    let triangle_and_point = vec![pts(&[&[0, 0], &[3, 0], &[0, 3]]), pts(&[&[1, 1]])];
    let w = convex_hull_witness(&triangle_and_point)?.expect("point inside");
    println!("weights of (1,1) in the triangle: {:?}", w.weights[0].iter().map(ToString::to_string).collect::<Vec<_>>());

    let parallel = vec![pts(&[&[0, 0], &[1, 0]]), pts(&[&[0, 1], &[1, 1]])];
    println!("parallel segment lines meet: {}", !affine_intersection(&parallel)?.is_empty());

    let square = PointSequence::new(2, pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]))?;
    println!(
        "unit square: general position {}, strong general position {}",
        in_general_position(&square),
        in_strong_general_position(&square)?
    );

    let curve = moment_curve(5, 2, &rational(3, 1))?;
    println!(
        "5 points on the moment curve: strong general position {}",
        in_strong_general_position(&curve)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
