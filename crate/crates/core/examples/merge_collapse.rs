//! Superimposes C(n, a) with the reversal of C(n, b), merges the two words
//! and removes the filler, which leaves C(a + b, a).

use christoffel_words::superimpose::{merge_pipeline, reversal_superimposition_criterion};
use christoffel_words::Result;

fn main() -> Result<()> {
    for (n, alpha, beta) in [(13, 4, 3), (7, 3, 2), (17, 5, 3), (5, 2, 2)] {
        if !reversal_superimposition_criterion(n, alpha, beta)? {
            println!("n = {n}: no x, y >= 1 with {alpha}x + {beta}y = {n}, nothing to merge");
            continue;
        }
        let stages = merge_pipeline(n, alpha, beta, ['a', 'b', 'z'])?;
        println!("n = {n}, a = {alpha}, b = {beta}");
        println!("  u         {}", stages.u);
        println!("  v         {}", stages.v);
        println!("  merged    {}", stages.merged);
        println!("  collapsed {}", stages.collapsed);
    }
    Ok(())
}
