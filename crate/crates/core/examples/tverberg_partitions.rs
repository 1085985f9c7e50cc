//! Minimal Tverberg partitions of points on the moment curve and the
//! correspondence between nerves of partitions and colorful complexes.

use colorful_tverberg::geometry::{integer, moment_curve};
use colorful_tverberg::tverberg::{
    enumerate_minimal_tverberg, find_tverberg_partition, nerve, partition_to_word,
    word_to_partition,
};
use colorful_tverberg::words::{delta_complex, Word};
use colorful_tverberg::{format, Result};

pub fn run_example() -> Result<()> {
    let p = moment_curve(7, 2, &integer(2))?;
    print!("{}", format::render_points(&p));

    let minimal = enumerate_minimal_tverberg(&p, 3);
    println!("{} minimal Tverberg partitions into 3 parts:", minimal.len());
    for w in &minimal {
        println!("  word {}  witness {}", partition_to_word(&p, &w.partition)?, w.point);
    }

    let first = find_tverberg_partition(&p, 3).expect("7 points in the plane admit 3 parts");
    print!("first found:\n{}", format::render_witness(&first));

    let word = Word::from([1, 2, 1, 3, 2, 3, 1]);
    let parts = word_to_partition(&word, &p)?;
    let k = nerve(&p, &parts)?;
    println!("nerve of the partition by {word}:");
    print!("{k}");
    println!("equals Δ²({word}): {}", k == delta_complex(&word, 2));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
