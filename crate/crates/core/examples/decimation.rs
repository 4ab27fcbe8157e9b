//! Removes p out of every q occurrences of a letter, from either end.

use christoffel_words::words::{decimate, make_word, DecimationSpec, Direction, OrderedAlphabet};
use christoffel_words::Result;

fn main() -> Result<()> {
    let ab = OrderedAlphabet::parse("a,b")?;
    let w = make_word("aabaabababa", &ab)?;
    let once = decimate(&w, &DecimationSpec::new(1, 3, Direction::RightToLeft, 'a')?)?;
    let twice = decimate(
        &once,
        &DecimationSpec::new(1, 2, Direction::LeftToRight, 'b')?,
    )?;
    println!("{w} -> {once} -> {twice}");

    let merged = make_word("abbabbabbabbb", &ab)?;
    let spec = DecimationSpec::new(2, 3, Direction::LeftToRight, 'b')?;
    println!("{merged} -> {}", decimate(&merged, &spec)?);
    Ok(())
}
