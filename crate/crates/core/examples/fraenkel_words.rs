//! Fraenkel words: balanced, with letter frequencies 2^(k-1), ..., 2, 1.

use christoffel_words::beatty::{fraenkel_word, letter_frequencies, FraenkelIndex};
use christoffel_words::words::{is_circularly_balanced, projection};
use christoffel_words::Result;

fn main() -> Result<()> {
    for k in 1..=5 {
        let w = fraenkel_word(FraenkelIndex::new(k)?);
        println!("Fr_{k} = {w}");
        println!(
            "  circularly balanced: {}, frequencies: {:?}",
            is_circularly_balanced(&w),
            letter_frequencies(&w)
        );
    }
    let w = fraenkel_word(FraenkelIndex::new(4)?);
    for (letter, _) in letter_frequencies(&w) {
        println!("projection onto {letter}: {}", projection(&w, letter, '.')?);
    }
    Ok(())
}
