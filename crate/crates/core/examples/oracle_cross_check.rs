//! Sweeps every problem with both lengths up to a bound (default 40, or the
//! first argument) and compares the closed forms with brute force.

use christoffel_words::arith::gcd;
use christoffel_words::oracle::oracle_superimposable;
use christoffel_words::superimpose::{
    count_superimpositions, is_superimposable, SuperimpositionProblem,
};
use christoffel_words::Result;

fn main() -> Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(40);
    let (mut total, mut yes, mut bad) = (0u64, 0u64, 0u64);
    for n in 2..=max {
        for m in 2..=max {
            for a in (1..n).filter(|&a| gcd(a as u64, n as u64) == 1) {
                for b in (1..m).filter(|&b| gcd(b as u64, m as u64) == 1) {
                    let problem = SuperimpositionProblem::from_totals(n, a, m, b)?;
                    let oracle =
                        oracle_superimposable(&problem.first_word(), &problem.second_word())?;
                    total += 1;
                    yes += u64::from(oracle.decision);
                    if is_superimposable(&problem) != oracle.decision
                        || count_superimpositions(&problem) != oracle.witnesses.len() as u64
                    {
                        bad += 1;
                        println!("disagreement: C({n},{a}) vs C({m},{b})");
                    }
                }
            }
        }
    }
    println!("{total} problems up to length {max}, {yes} superimposable, {bad} disagreements");
    Ok(())
}
