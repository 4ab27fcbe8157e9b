//! Christoffel words `C(n, α)` and the objects attached to them: the position
//! set of the low letter, the Cayley graph and the lattice path.
//!
//! `C(n, α)` has length `n` and `α` occurrences of the low letter. When
//! `gcd(n, α) = r > 1` it denotes the `r`-th power of `C(n/r, α/r)`. The
//! degenerate `α = n` is accepted and yields `low^n`.

use std::collections::BTreeSet;

use crate::arith::{gcd, mod_inverse};
use crate::error::{Error, Result};
use crate::words::{OrderedAlphabet, Word};

/// Parameters of `C(n, α)` over `{low < high}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChristoffelSpec {
    n: usize,
    alpha: usize,
    low: char,
    high: char,
}

impl ChristoffelSpec {
    pub fn new(n: usize, alpha: usize, low: char, high: char) -> Result<Self> {
        if low == high {
            return Err(Error::SameLetters { letter: low });
        }
        if alpha == 0 || alpha > n {
            return Err(Error::AlphaOutOfRange { n, alpha });
        }
        Ok(Self {
            n,
            alpha,
            low,
            high,
        })
    }

    /// `C(n, α)` over the default letters `{a < x}`.
    pub fn ax(n: usize, alpha: usize) -> Result<Self> {
        Self::new(n, alpha, 'a', 'x')
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// Number of high letters, `n - α`.
    pub fn beta(&self) -> usize {
        self.n - self.alpha
    }

    pub fn low(&self) -> char {
        self.low
    }

    pub fn high(&self) -> char {
        self.high
    }

    /// `gcd(n, α)`; the word is primitive iff this is 1.
    pub fn power(&self) -> usize {
        gcd(self.n as u64, self.alpha as u64) as usize
    }

    pub fn alphabet(&self) -> OrderedAlphabet {
        OrderedAlphabet::new([self.low, self.high]).expect("low and high differ")
    }

    fn reduced(&self) -> Self {
        let r = self.power();
        Self {
            n: self.n / r,
            alpha: self.alpha / r,
            ..*self
        }
    }
}

/// Residues modulo `n`, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PositionSet {
    modulus: usize,
    residues: BTreeSet<usize>,
}

impl PositionSet {
    pub fn new(modulus: usize, residues: impl IntoIterator<Item = usize>) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        Self {
            modulus,
            residues: residues.into_iter().map(|r| r % modulus).collect(),
        }
    }

    /// Positions of `letter` in `w`, modulo `|w|`.
    pub fn of_letter(w: &Word, letter: char) -> Self {
        Self::new(w.len().max(1), w.positions_of(letter))
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn residues(&self) -> &BTreeSet<usize> {
        &self.residues
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn contains(&self, residue: usize) -> bool {
        self.residues.contains(&(residue % self.modulus))
    }

    pub fn is_subset(&self, other: &PositionSet) -> bool {
        self.modulus == other.modulus && self.residues.is_subset(&other.residues)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.residues.iter().copied().collect()
    }
}

/// `ᾱ`, the residue in `[0, n)` with `α·ᾱ ≡ -1 (mod n)`.
pub fn modular_complement(alpha: usize, n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::ModulusTooSmall { n });
    }
    let inv = mod_inverse(alpha as i64, n as i64).ok_or(Error::NotCoprime {
        what: "modular complement",
        a: alpha as u64,
        b: n as u64,
        gcd: gcd(alpha as u64, n as u64),
    })?;
    let complement = (n as i64 - inv) % n as i64;
    debug_assert_eq!((alpha as i64 * complement + 1).rem_euclid(n as i64), 0);
    Ok(complement as usize)
}

/// The Christoffel word (or power of one) described by `spec`.
pub fn christoffel_word(spec: &ChristoffelSpec) -> Word {
    let alphabet = spec.alphabet();
    if spec.alpha == spec.n {
        return Word::from_parts(vec![spec.low; spec.n], alphabet);
    }
    let r = spec.power();
    if r > 1 {
        return christoffel_word(&spec.reduced()).power(r);
    }
    let (n, beta) = (spec.n, spec.beta());
    let symbols = (0..n)
        .map(|i| {
            if (i + 1) * beta % n > i * beta % n {
                spec.low
            } else {
                spec.high
            }
        })
        .collect();
    Word::from_parts(symbols, alphabet)
}

/// Positions of the low letter in `C(n, α)`, computed from the orbit
/// `{0, ᾱ, 2ᾱ, …, (α-1)ᾱ}` rather than from the word itself.
pub fn letter_positions(spec: &ChristoffelSpec) -> PositionSet {
    let n = spec.n;
    if spec.alpha == n {
        return PositionSet::new(n, 0..n);
    }
    let base = spec.reduced();
    let (period, count) = (base.n, base.alpha);
    let complement = modular_complement(count, period).expect("reduced spec is coprime and n >= 2");
    let residues = (0..spec.power())
        .flat_map(|copy| (0..count).map(move |k| k * complement % period + copy * period));
    PositionSet::new(n, residues)
}

/// One arrow `source -> source + β (mod n)` of a Cayley graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CayleyEdge {
    pub source: usize,
    pub target: usize,
    pub label: char,
}

/// The Cayley graph of `C(n, α)`, traversed from vertex 0 for `n` steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGraph {
    n: usize,
    edges: Vec<CayleyEdge>,
    alphabet: OrderedAlphabet,
}

impl CayleyGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[CayleyEdge] {
        &self.edges
    }

    /// Visited vertices, starting and ending at 0.
    pub fn vertex_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = self.edges.iter().map(|e| e.source).collect();
        order.extend(self.edges.last().map(|e| e.target));
        order
    }

    /// The word spelled by the edge labels in traversal order.
    pub fn word(&self) -> Word {
        Word::from_parts(
            self.edges.iter().map(|e| e.label).collect(),
            self.alphabet.clone(),
        )
    }
}

pub fn cayley_graph(spec: &ChristoffelSpec) -> Result<CayleyGraph> {
    if spec.alpha == spec.n {
        return Err(Error::DegenerateCayley { n: spec.n });
    }
    let (n, beta) = (spec.n, spec.beta());
    let mut source = 0;
    let edges = (0..n)
        .map(|_| {
            let target = (source + beta) % n;
            let label = if source < target { spec.low } else { spec.high };
            let edge = CayleyEdge {
                source,
                target,
                label,
            };
            source = target;
            edge
        })
        .collect();
    Ok(CayleyGraph {
        n,
        edges,
        alphabet: spec.alphabet(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Right,
    Up,
}

/// A monotone lattice path from the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    steps: Vec<Step>,
    end: (usize, usize),
}

impl LatticePath {
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn end(&self) -> (usize, usize) {
        self.end
    }

    /// Lattice points visited, starting at the origin.
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut at = (0, 0);
        let mut out = vec![at];
        for step in &self.steps {
            match step {
                Step::Right => at.0 += 1,
                Step::Up => at.1 += 1,
            }
            out.push(at);
        }
        out
    }

    /// Encodes right steps as `low` and up steps as `high`.
    pub fn word(&self, low: char, high: char) -> Result<Word> {
        let alphabet = OrderedAlphabet::new([low, high])?;
        let symbols = self
            .steps
            .iter()
            .map(|s| match s {
                Step::Right => low,
                Step::Up => high,
            })
            .collect();
        Ok(Word::from_parts(symbols, alphabet))
    }

    /// True iff every visited point is on or below the segment `(0,0)-(a,b)`.
    pub fn is_below_segment(&self) -> bool {
        let (a, b) = self.end;
        self.points().iter().all(|&(x, y)| y * a <= x * b)
    }
}

/// The lower Christoffel path from `(0,0)` to `(a,b)`: the highest lattice
/// path that never crosses above the segment.
pub fn christoffel_path(a: usize, b: usize) -> Result<LatticePath> {
    if a == 0 {
        return Err(Error::NonPositive {
            what: "path width",
            value: 0,
        });
    }
    if b == 0 {
        return Err(Error::NonPositive {
            what: "path height",
            value: 0,
        });
    }
    let g = gcd(a as u64, b as u64);
    if g != 1 {
        return Err(Error::NotCoprime {
            what: "Christoffel path",
            a: a as u64,
            b: b as u64,
            gcd: g,
        });
    }
    let (mut x, mut y) = (0usize, 0usize);
    let mut steps = Vec::with_capacity(a + b);
    while (x, y) != (a, b) {
        // Climb whenever the point above is still weakly below the segment.
        if y < b && (y + 1) * a <= x * b {
            y += 1;
            steps.push(Step::Up);
        } else {
            x += 1;
            steps.push(Step::Right);
        }
    }
    Ok(LatticePath { steps, end: (a, b) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{conjugate, is_circularly_balanced, is_primitive, reverse};

    fn word_ax(n: usize, alpha: usize) -> String {
        christoffel_word(&ChristoffelSpec::ax(n, alpha).unwrap()).to_string()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(modular_complement(5, 8).unwrap(), 3);
        assert_eq!(modular_complement(3, 13).unwrap(), 4);
        for n in 2..40 {
            assert_eq!(modular_complement(1, n).unwrap(), n - 1);
        }
        assert!(matches!(
            modular_complement(4, 8),
            Err(Error::NotCoprime { gcd: 4, .. })
        ));
        assert_eq!(
            modular_complement(1, 1),
            Err(Error::ModulusTooSmall { n: 1 })
        );
    }

    #[test]
    fn complement_agrees_with_scan() {
        for n in 2..150usize {
            for alpha in 1..n {
                let scan = (0..n).find(|&c| (alpha * c + 1) % n == 0);
                assert_eq!(
                    modular_complement(alpha, n).ok(),
                    scan,
                    "alpha = {alpha}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn word_examples() {
        assert_eq!(word_ax(8, 5), "aaxaaxax");
        assert_eq!(
            christoffel_word(&ChristoffelSpec::new(13, 4, 'a', 'z').unwrap()).to_string(),
            "azzazzazzazzz"
        );
        assert_eq!(word_ax(4, 2), "axax");
        assert_eq!(word_ax(5, 5), "aaaaa");
        assert_eq!(
            ChristoffelSpec::ax(8, 0),
            Err(Error::AlphaOutOfRange { n: 8, alpha: 0 })
        );
        assert_eq!(
            ChristoffelSpec::ax(8, 9),
            Err(Error::AlphaOutOfRange { n: 8, alpha: 9 })
        );
        assert_eq!(
            ChristoffelSpec::new(8, 3, 'a', 'a'),
            Err(Error::SameLetters { letter: 'a' })
        );
    }

    #[test]
    fn position_examples() {
        let pos = |n, a| letter_positions(&ChristoffelSpec::ax(n, a).unwrap()).to_vec();
        assert_eq!(pos(8, 5), vec![0, 1, 3, 4, 6]);
        assert_eq!(pos(13, 4), vec![0, 3, 6, 9]);
        assert_eq!(pos(7, 7), (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn positions_match_construction() {
        for n in 1..=200usize {
            for alpha in 1..=n {
                let spec = ChristoffelSpec::ax(n, alpha).unwrap();
                let from_word = PositionSet::of_letter(&christoffel_word(&spec), 'a');
                assert_eq!(
                    letter_positions(&spec),
                    from_word,
                    "n = {n}, alpha = {alpha}"
                );
            }
        }
    }

    #[test]
    fn cayley_examples() {
        let g = cayley_graph(&ChristoffelSpec::ax(8, 5).unwrap()).unwrap();
        assert_eq!(g.word().to_string(), "aaxaaxax");
        assert_eq!(g.vertex_order(), vec![0, 3, 6, 1, 4, 7, 2, 5, 0]);

        let g = cayley_graph(&ChristoffelSpec::ax(13, 8).unwrap()).unwrap();
        assert_eq!(
            g.vertex_order(),
            vec![0, 5, 10, 2, 7, 12, 4, 9, 1, 6, 11, 3, 8, 0]
        );
        let g = cayley_graph(&ChristoffelSpec::ax(2, 1).unwrap()).unwrap();
        assert_eq!(g.word().to_string(), "ax");

        assert_eq!(
            cayley_graph(&ChristoffelSpec::ax(4, 4).unwrap()),
            Err(Error::DegenerateCayley { n: 4 })
        );
    }

    #[test]
    fn cayley_reads_every_word() {
        for n in 2..=80usize {
            for alpha in 1..n {
                let spec = ChristoffelSpec::ax(n, alpha).unwrap();
                let graph = cayley_graph(&spec).unwrap();
                assert_eq!(
                    graph.word(),
                    christoffel_word(&spec),
                    "n = {n}, alpha = {alpha}"
                );
                for e in graph.edges() {
                    assert_eq!(e.target, (e.source + spec.beta()) % n);
                    assert_eq!(e.label == 'a', e.source < e.target);
                }
            }
        }
    }

    #[test]
    fn path_examples() {
        let path = christoffel_path(5, 3).unwrap();
        assert_eq!(path.word('a', 'x').unwrap().to_string(), "aaxaaxax");
        assert_eq!(
            christoffel_path(1, 1).unwrap().steps(),
            &[Step::Right, Step::Up]
        );
        assert_eq!(
            christoffel_path(8, 5)
                .unwrap()
                .word('α', 'β')
                .unwrap()
                .to_string(),
            "ααβααβαβααβαβ"
        );
        assert!(matches!(
            christoffel_path(4, 2),
            Err(Error::NotCoprime { gcd: 2, .. })
        ));
    }

    #[test]
    fn paths_hug_the_segment() {
        for a in 1..=40usize {
            for b in 1..=40usize {
                if gcd(a as u64, b as u64) != 1 {
                    continue;
                }
                let path = christoffel_path(a, b).unwrap();
                assert_eq!(path.end(), (a, b));
                assert!(path.is_below_segment());
                let rights = path.steps().iter().filter(|s| **s == Step::Right).count();
                assert_eq!(rights, a);
                // No lattice point strictly between path and segment: in each
                // column the path reaches floor(x*b/a).
                for (x, y) in path.points() {
                    assert!(y <= x * b / a);
                }
                for x in 0..=a {
                    let top = path.points().iter().filter(|p| p.0 == x).map(|p| p.1).max();
                    assert_eq!(top, Some(x * b / a), "a = {a}, b = {b}, x = {x}");
                }
                assert_eq!(
                    path.word('a', 'x').unwrap(),
                    christoffel_word(&ChristoffelSpec::ax(a + b, a).unwrap())
                );
            }
        }
    }

    #[test]
    fn reversal_swaps_the_letter_order() {
        for n in 2..=200usize {
            for alpha in 1..n {
                let forward = christoffel_word(&ChristoffelSpec::new(n, alpha, 'a', 'x').unwrap());
                let mirrored =
                    christoffel_word(&ChristoffelSpec::new(n, n - alpha, 'x', 'a').unwrap());
                assert_eq!(
                    reverse(&forward).symbols(),
                    mirrored.symbols(),
                    "n = {n}, alpha = {alpha}"
                );
            }
        }
    }

    #[test]
    fn conjugating_the_mirror_image() {
        for n in 2..=200usize {
            for alpha in (1..n).filter(|&a| gcd(a as u64, n as u64) == 1) {
                let w = christoffel_word(&ChristoffelSpec::ax(n, alpha).unwrap());
                let bar = modular_complement(alpha, n).unwrap() as i64;
                assert_eq!(
                    conjugate(&reverse(&w), bar).unwrap(),
                    w,
                    "n = {n}, alpha = {alpha}"
                );
            }
        }
    }

    #[test]
    fn primitive_words_are_balanced_and_minimal() {
        for n in 2..=60usize {
            for alpha in (1..n).filter(|&a| gcd(a as u64, n as u64) == 1) {
                let w = christoffel_word(&ChristoffelSpec::ax(n, alpha).unwrap());
                assert!(is_primitive(&w).unwrap());
                assert!(is_circularly_balanced(&w));
                let s = w.to_string();
                for k in 1..n as i64 {
                    assert!(
                        s < conjugate(&w, k).unwrap().to_string(),
                        "n = {n}, alpha = {alpha}"
                    );
                }
            }
        }
    }

    #[test]
    fn powers_repeat_the_primitive_word() {
        for n in 2..=30usize {
            for alpha in (1..n).filter(|&a| gcd(a as u64, n as u64) == 1) {
                let base = christoffel_word(&ChristoffelSpec::ax(n, alpha).unwrap());
                for q in 1..=5 {
                    let w = christoffel_word(&ChristoffelSpec::ax(n * q, alpha * q).unwrap());
                    assert_eq!(w, base.power(q));
                }
            }
        }
    }
}
