//! Rational Beatty sequences and the criterion for making two of them
//! disjoint, checked against an offset search.

use christoffel_words::beatty::{beatty_disjoint_exists, beatty_slice, BeattySpec};
use christoffel_words::oracle::oracle_beatty_disjoint;
use christoffel_words::Result;
use num_rational::Ratio;

fn main() -> Result<()> {
    let spec = BeattySpec::new(13, 4, Ratio::from_integer(0))?;
    println!("floor(13n/4), n = 1..8: {:?}", beatty_slice(&spec, 1, 8)?);

    for (p1, q1, p2, q2) in [
        (13, 4, 13, 3),
        (3, 1, 4, 1),
        (5, 1, 5, 1),
        (2, 1, 4, 2),
        (7, 3, 7, 2),
    ] {
        let exists = beatty_disjoint_exists(p1, q1, p2, q2)?;
        let d = q1 * q2;
        match oracle_beatty_disjoint(p1, q1, p2, q2, d)? {
            Some(w) => println!(
                "{p1}/{q1} and {p2}/{q2}: criterion {exists}, offsets {} and {} work",
                w.offset1, w.offset2
            ),
            None => println!(
                "{p1}/{q1} and {p2}/{q2}: criterion {exists}, no offsets on the 1/{d} grid"
            ),
        }
    }
    Ok(())
}
