//! Builds a few Christoffel words and the objects attached to them.

use christoffel_words::christoffel::{
    cayley_graph, christoffel_path, christoffel_word, letter_positions, modular_complement,
    ChristoffelSpec,
};
use christoffel_words::Result;

fn main() -> Result<()> {
    for (n, alpha) in [(8, 5), (13, 4), (13, 8), (12, 8)] {
        let spec = ChristoffelSpec::ax(n, alpha)?;
        let word = christoffel_word(&spec);
        let positions = letter_positions(&spec).to_vec();
        println!("C({n},{alpha}) = {word}  low letters at {positions:?}");
        if spec.power() > 1 {
            println!(
                "  power {} of C({},{})",
                spec.power(),
                n / spec.power(),
                alpha / spec.power()
            );
            continue;
        }
        println!(
            "  complement of {alpha} mod {n}: {}",
            modular_complement(alpha, n)?
        );
        println!("  Cayley walk: {:?}", cayley_graph(&spec)?.vertex_order());
        let path = christoffel_path(alpha, n - alpha)?;
        println!(
            "  lattice path to {:?}: {}",
            path.end(),
            path.word('R', 'U')?
        );
    }
    Ok(())
}
