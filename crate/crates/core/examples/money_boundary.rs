//! The two-coin money problem and its staircase boundary.

use christoffel_words::money::{
    boundary_word, frobenius_number, nonrepresentable_count, representable, shifted_cayley,
    CoinPair,
};
use christoffel_words::Result;

fn main() -> Result<()> {
    for (a, b) in [(8, 5), (2, 5), (3, 7)] {
        let coins = CoinPair::new(a, b)?;
        let missing: Vec<u64> = (0..a * b).filter(|&k| !representable(&coins, k)).collect();
        println!(
            "g({a},{b}) = {}; {} amounts cannot be paid: {missing:?}",
            frobenius_number(&coins),
            nonrepresentable_count(&coins)
        );
        let boundary = boundary_word(&coins);
        println!("  boundary {}", boundary.word());
        println!("  values   {:?}", shifted_cayley(&coins)?);
    }
    Ok(())
}
