//! Decides, counts and witnesses superimpositions, for words of equal and
//! unequal lengths.

use christoffel_words::superimpose::{analyze, canonical_witness, SuperimpositionProblem};
use christoffel_words::Result;

fn main() -> Result<()> {
    // (n, letters of the first word, m, letters of the second word)
    for (n, a, m, b) in [
        (13, 4, 13, 3),
        (4, 1, 6, 1),
        (3, 1, 4, 1),
        (35, 4, 21, 2),
        (20, 3, 30, 7),
    ] {
        let problem = SuperimpositionProblem::from_totals(n, a, m, b)?;
        let report = analyze(&problem)?;
        println!(
            "C({n},{a}) vs C({m},{b}): q = {}, x = {}, y = {}, superimposable = {}, shifts = {}",
            problem.q(),
            report.bezout.x,
            report.bezout.y,
            report.superimposable,
            report.count
        );
        if let Some(shift) = report.canonical_shift {
            let (u, v) = canonical_witness(&problem)?;
            println!(
                "  reversed second word shifted by {}: lifts {:?}",
                shift.shift,
                shift.lifts()
            );
            if n == m {
                println!("  {u}\n  {v}");
            }
        }
    }
    Ok(())
}
