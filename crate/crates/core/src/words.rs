//! Finite words over small ordered alphabets.
//!
//! A [`Word`] always carries its [`OrderedAlphabet`]; every symbol of the word
//! is a member of that alphabet. Words are immutable values: every operation
//! here returns a fresh word.

use std::fmt;

use crate::error::{Error, Result};

/// A finite, totally ordered set of single-character letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedAlphabet {
    letters: Vec<char>,
}

impl OrderedAlphabet {
    /// Builds an alphabet whose order is the order of `letters`.
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let mut out: Vec<char> = Vec::new();
        for letter in letters {
            if letter.is_whitespace() || letter.is_control() {
                return Err(Error::InvalidLetterToken {
                    token: letter.to_string(),
                });
            }
            if out.contains(&letter) {
                return Err(Error::DuplicateLetter { letter });
            }
            out.push(letter);
        }
        Ok(Self { letters: out })
    }

    /// Parses a comma separated list such as `"a,x"`. Every token must be
    /// exactly one printable character.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for token in spec.split(',') {
            let mut chars = token.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => letters.push(c),
                _ => {
                    return Err(Error::InvalidLetterToken {
                        token: token.to_string(),
                    })
                }
            }
        }
        Self::new(letters)
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, letter: char) -> bool {
        self.letters.contains(&letter)
    }

    /// Rank of `letter` in the alphabet order.
    pub fn rank(&self, letter: char) -> Option<usize> {
        self.letters.iter().position(|&c| c == letter)
    }

    fn require(&self, letter: char) -> Result<()> {
        if self.contains(letter) {
            Ok(())
        } else {
            Err(Error::LetterNotInAlphabet { letter })
        }
    }
}

impl fmt::Display for OrderedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str("<")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

/// A finite word together with the alphabet it is written over.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<char>,
    alphabet: OrderedAlphabet,
}

impl Word {
    /// Checks every symbol against `alphabet`.
    pub fn new(symbols: Vec<char>, alphabet: OrderedAlphabet) -> Result<Self> {
        if let Some((index, &symbol)) = symbols
            .iter()
            .enumerate()
            .find(|(_, c)| !alphabet.contains(**c))
        {
            return Err(Error::SymbolNotInAlphabet { symbol, index });
        }
        Ok(Self { symbols, alphabet })
    }

    // Callers guarantee membership.
    pub(crate) fn from_parts(symbols: Vec<char>, alphabet: OrderedAlphabet) -> Self {
        debug_assert!(symbols.iter().all(|&c| alphabet.contains(c)));
        Self { symbols, alphabet }
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn alphabet(&self) -> &OrderedAlphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Indices at which `letter` occurs, in increasing order.
    pub fn positions_of(&self, letter: char) -> Vec<usize> {
        self.symbols
            .iter()
            .enumerate()
            .filter_map(|(i, &c)| (c == letter).then_some(i))
            .collect()
    }

    /// The concatenation `self^times`.
    pub fn power(&self, times: usize) -> Word {
        Word::from_parts(self.symbols.repeat(times), self.alphabet.clone())
    }

    /// Concatenation of two words over the same alphabet.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                reason: format!("{} vs {}", self.alphabet, other.alphabet),
            });
        }
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Ok(Word::from_parts(symbols, self.alphabet.clone()))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// Builds a word from a string, one letter per character.
pub fn make_word(symbols: &str, alphabet: &OrderedAlphabet) -> Result<Word> {
    Word::new(symbols.chars().collect(), alphabet.clone())
}

/// `|w|_c`, the number of occurrences of `c` in `w`.
pub fn count_letter(w: &Word, c: char) -> Result<usize> {
    w.alphabet.require(c)?;
    Ok(w.symbols.iter().filter(|&&s| s == c).count())
}

/// True iff any two factors of equal length differ by at most one in the
/// number of occurrences of every letter.
///
/// For each factor length the extreme letter counts over all windows are
/// tracked, which visits every pair of equal-length factors implicitly in
/// `O(|w|^2 * |alphabet|)`.
pub fn is_balanced(w: &Word) -> bool {
    let n = w.len();
    for &letter in w.alphabet.letters() {
        let mut prefix = Vec::with_capacity(n + 1);
        prefix.push(0usize);
        for &c in &w.symbols {
            prefix.push(prefix.last().unwrap() + usize::from(c == letter));
        }
        for len in 1..n {
            let mut lo = usize::MAX;
            let mut hi = 0;
            for start in 0..=n - len {
                let count = prefix[start + len] - prefix[start];
                lo = lo.min(count);
                hi = hi.max(count);
            }
            if hi - lo > 1 {
                return false;
            }
        }
    }
    true
}

/// True iff `ww` is balanced.
pub fn is_circularly_balanced(w: &Word) -> bool {
    is_balanced(&w.power(2))
}

/// The mirror image of `w`. The alphabet is unchanged.
pub fn reverse(w: &Word) -> Word {
    let mut symbols = w.symbols.clone();
    symbols.reverse();
    Word::from_parts(symbols, w.alphabet.clone())
}

/// `γ^k(w)`, where `γ(cu) = uc` moves the first letter to the end.
///
/// `k` is read modulo `|w|`; negative values rotate the other way.
pub fn conjugate(w: &Word, k: i64) -> Result<Word> {
    if w.is_empty() {
        return if k == 0 {
            Ok(w.clone())
        } else {
            Err(Error::EmptyRotation { shift: k })
        };
    }
    let shift = k.rem_euclid(w.len() as i64) as usize;
    let mut symbols = w.symbols.clone();
    symbols.rotate_left(shift);
    Ok(Word::from_parts(symbols, w.alphabet.clone()))
}

/// True iff `w` is not a power of a strictly shorter word.
pub fn is_primitive(w: &Word) -> Result<bool> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let is_period = |d: usize| (d..n).all(|i| w.symbols[i] == w.symbols[i - d]);
    Ok(!(1..n).filter(|d| n.is_multiple_of(*d)).any(is_period))
}

/// `Π_a(w)`: keeps `a` where it occurs in `w` and writes `filler` everywhere else.
///
/// The result is over the alphabet `{a < filler}`.
pub fn projection(w: &Word, a: char, filler: char) -> Result<Word> {
    w.alphabet.require(a)?;
    if w.alphabet.contains(filler) {
        return Err(Error::FillerCollision { letter: filler });
    }
    let symbols = w
        .symbols
        .iter()
        .map(|&c| if c == a { a } else { filler })
        .collect();
    Ok(Word::from_parts(
        symbols,
        OrderedAlphabet::new([a, filler])?,
    ))
}

/// The roles of the letters in a pair of two-letter words that share a filler.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MarkedPair {
    pub first: char,
    pub second: char,
    pub filler: char,
}

/// Splits the alphabets of `u` and `v` into their marked letters and the
/// shared filler. Each word must be over exactly two letters, and the two
/// alphabets must have exactly one letter in common.
pub fn marked_pair(u: &Word, v: &Word) -> Result<MarkedPair> {
    let (lu, lv) = (u.alphabet.letters(), v.alphabet.letters());
    if lu.len() != 2 || lv.len() != 2 {
        return Err(Error::AlphabetMismatch {
            reason: format!(
                "both words need two-letter alphabets, got {} and {}",
                u.alphabet, v.alphabet
            ),
        });
    }
    let shared: Vec<char> = lu.iter().copied().filter(|c| lv.contains(c)).collect();
    let [filler] = shared[..] else {
        return Err(Error::AlphabetMismatch {
            reason: format!(
                "alphabets {} and {} must share exactly one filler letter",
                u.alphabet, v.alphabet
            ),
        });
    };
    let other = |letters: &[char]| *letters.iter().find(|&&c| c != filler).unwrap();
    Ok(MarkedPair {
        first: other(lu),
        second: other(lv),
        filler,
    })
}

/// Direction in which a decimation walks the occurrences of its target letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Blocks are counted from the first occurrence (written `D_{-p/q}`).
    LeftToRight,
    /// Blocks are counted from the last occurrence (written `D_{p/q}`).
    RightToLeft,
}

/// Removal of `p` out of every `q` occurrences of `letter`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DecimationSpec {
    p: usize,
    q: usize,
    direction: Direction,
    letter: char,
}

impl DecimationSpec {
    pub fn new(p: usize, q: usize, direction: Direction, letter: char) -> Result<Self> {
        if q == 0 || p > q {
            return Err(Error::InvalidDecimation { p, q });
        }
        Ok(Self {
            p,
            q,
            direction,
            letter,
        })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn letter(&self) -> char {
        self.letter
    }
}

/// Applies the decimation `spec` to `w`.
///
/// With `N` occurrences of the target letter numbered from 1, left-to-right
/// deletes occurrences `lq+1 ..= lq+p` and right-to-left deletes
/// `N-lq-p+1 ..= N-lq`, for every block `0 <= l <= N/q`. Indices outside
/// `[1, N]` are skipped.
pub fn decimate(w: &Word, spec: &DecimationSpec) -> Result<Word> {
    w.alphabet.require(spec.letter)?;
    let occurrences = w.positions_of(spec.letter);
    let total = occurrences.len() as i64;
    let (p, q) = (spec.p as i64, spec.q as i64);

    let mut doomed = vec![false; w.len()];
    for block in 0..=total / q {
        let indices: Vec<i64> = match spec.direction {
            Direction::LeftToRight => (block * q + 1..=block * q + p).collect(),
            Direction::RightToLeft => (total - block * q - p + 1..=total - block * q).collect(),
        };
        for j in indices.into_iter().filter(|j| (1..=total).contains(j)) {
            doomed[occurrences[(j - 1) as usize]] = true;
        }
    }
    let symbols = w
        .symbols
        .iter()
        .zip(&doomed)
        .filter_map(|(&c, &gone)| (!gone).then_some(c))
        .collect();
    Ok(Word::from_parts(symbols, w.alphabet.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ax() -> OrderedAlphabet {
        OrderedAlphabet::parse("a,x").unwrap()
    }

    fn word(s: &str) -> Word {
        let mut letters: Vec<char> = s.chars().collect();
        letters.sort();
        letters.dedup();
        make_word(s, &OrderedAlphabet::new(letters).unwrap()).unwrap()
    }

    // Literal definition: every pair of equal-length factors.
    fn balanced_by_pairs(w: &Word) -> bool {
        let s = w.symbols();
        let n = s.len();
        for len in 1..=n {
            for i in 0..=n - len {
                for j in 0..=n - len {
                    for &c in w.alphabet().letters() {
                        let ci = s[i..i + len].iter().filter(|&&x| x == c).count() as i64;
                        let cj = s[j..j + len].iter().filter(|&&x| x == c).count() as i64;
                        if (ci - cj).abs() > 1 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    #[test]
    fn make_word_counts() {
        let u = make_word("aaxaaxax", &ax()).unwrap();
        assert_eq!(u.len(), 8);
        assert_eq!(count_letter(&u, 'a').unwrap(), 5);
        assert_eq!(count_letter(&u, 'x').unwrap(), 3);

        let empty = make_word("", &ax()).unwrap();
        assert_eq!(empty.len(), 0);
        assert_eq!(count_letter(&empty, 'a').unwrap(), 0);

        assert_eq!(
            make_word("ab", &ax()),
            Err(Error::SymbolNotInAlphabet {
                symbol: 'b',
                index: 1
            })
        );
        assert_eq!(
            count_letter(&empty, 'q'),
            Err(Error::LetterNotInAlphabet { letter: 'q' })
        );
    }

    #[test]
    fn fraenkel_three_has_four_ones() {
        assert_eq!(count_letter(&word("1213121"), '1').unwrap(), 4);
    }

    #[test]
    fn marked_pairs() {
        let u = make_word("axx", &ax()).unwrap();
        let v = make_word("xbx", &OrderedAlphabet::parse("b,x").unwrap()).unwrap();
        let pair = marked_pair(&u, &v).unwrap();
        assert_eq!((pair.first, pair.second, pair.filler), ('a', 'b', 'x'));
        // The filler is found by sharing, not by its rank.
        let w = make_word("xbx", &OrderedAlphabet::parse("x,b").unwrap()).unwrap();
        assert_eq!(marked_pair(&u, &w).unwrap(), pair);

        assert!(matches!(
            marked_pair(&u, &u),
            Err(Error::AlphabetMismatch { .. })
        ));
        let other = make_word("by", &OrderedAlphabet::parse("b,y").unwrap()).unwrap();
        assert!(matches!(
            marked_pair(&u, &other),
            Err(Error::AlphabetMismatch { .. })
        ));
        assert!(matches!(
            marked_pair(&word("123"), &u),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn alphabet_parsing() {
        assert!(OrderedAlphabet::parse("a,x").is_ok());
        assert!(matches!(
            OrderedAlphabet::parse("ab,x"),
            Err(Error::InvalidLetterToken { .. })
        ));
        assert!(matches!(
            OrderedAlphabet::parse("a,,x"),
            Err(Error::InvalidLetterToken { .. })
        ));
        assert_eq!(
            OrderedAlphabet::parse("a,a"),
            Err(Error::DuplicateLetter { letter: 'a' })
        );
        assert_eq!(
            OrderedAlphabet::parse("α,β").unwrap().letters(),
            &['α', 'β']
        );
    }

    #[test]
    fn balance_examples() {
        assert!(is_balanced(&word("112121")));
        assert!(is_balanced(&word("112112")));
        assert!(!is_balanced(&word("1122")));
        assert!(!balanced_by_pairs(&word("1122")));

        assert!(!is_circularly_balanced(&word("112121")));
        assert!(is_circularly_balanced(&word("112")));
        assert!(is_circularly_balanced(&make_word("", &ax()).unwrap()));
    }

    #[test]
    fn reversal_examples() {
        assert_eq!(reverse(&word("aaxaaxax")).to_string(), "xaxaaxaa");
        assert_eq!(reverse(&word("aba")).to_string(), "aba");
        assert_eq!(reverse(&word("bzzzbzzzbzzzz")).to_string(), "zzzzbzzzbzzzb");
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(conjugate(&word("aab"), 1).unwrap().to_string(), "aba");
        assert_eq!(conjugate(&word("aab"), 3).unwrap().to_string(), "aab");
        assert_eq!(conjugate(&word("aab"), -1).unwrap().to_string(), "baa");
        assert_eq!(
            conjugate(&word("bzzzbzzzbzzzz"), 9).unwrap().to_string(),
            "zzzzbzzzbzzzb"
        );
        let empty = make_word("", &ax()).unwrap();
        assert_eq!(conjugate(&empty, 0).unwrap(), empty);
        assert_eq!(conjugate(&empty, 2), Err(Error::EmptyRotation { shift: 2 }));
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&word("aaxaaxax")).unwrap());
        assert!(!is_primitive(&word("axax")).unwrap());
        assert!(is_primitive(&word("a")).unwrap());
        assert!(!is_primitive(&word("aaa")).unwrap());
        assert_eq!(
            is_primitive(&make_word("", &ax()).unwrap()),
            Err(Error::EmptyWord)
        );
    }

    #[test]
    fn projection_examples() {
        let w = word("1232343112");
        assert_eq!(projection(&w, '1', 'x').unwrap().to_string(), "1xxxxxx11x");
        assert_eq!(projection(&w, '2', 'x').unwrap().to_string(), "x2x2xxxxx2");
        assert_eq!(projection(&w, '3', 'x').unwrap().to_string(), "xx3x3x3xxx");
        assert_eq!(projection(&w, '4', 'x').unwrap().to_string(), "xxxxx4xxxx");
        assert_eq!(
            projection(&w, '4', 'x').unwrap().alphabet().letters(),
            &['4', 'x']
        );

        let no_a = make_word("xxx", &ax()).unwrap();
        assert_eq!(projection(&no_a, 'a', 'z').unwrap().to_string(), "zzz");
        assert_eq!(
            projection(&w, '1', '2'),
            Err(Error::FillerCollision { letter: '2' })
        );
    }

    #[test]
    fn decimation_examples() {
        let w = word("aabaabababa");
        let first = decimate(
            &w,
            &DecimationSpec::new(1, 3, Direction::RightToLeft, 'a').unwrap(),
        )
        .unwrap();
        assert_eq!(first.to_string(), "abababab");
        let second = decimate(
            &first,
            &DecimationSpec::new(1, 2, Direction::LeftToRight, 'b').unwrap(),
        )
        .unwrap();
        assert_eq!(second.to_string(), "aabaab");

        // Last block only partially present.
        let t = word("abbabbabbabbb");
        let out = decimate(
            &t,
            &DecimationSpec::new(2, 3, Direction::LeftToRight, 'b').unwrap(),
        )
        .unwrap();
        assert_eq!(out.to_string(), "aababab");

        for dir in [Direction::LeftToRight, Direction::RightToLeft] {
            let spec = DecimationSpec::new(0, 1, dir, 'a').unwrap();
            assert_eq!(decimate(&w, &spec).unwrap(), w);
        }
        assert_eq!(
            DecimationSpec::new(3, 2, Direction::LeftToRight, 'a'),
            Err(Error::InvalidDecimation { p: 3, q: 2 })
        );
    }

    // Walks the word letter by letter, deciding each occurrence on its own.
    fn decimate_reference(w: &Word, spec: &DecimationSpec) -> Word {
        let total = w.symbols().iter().filter(|&&c| c == spec.letter()).count();
        let (p, q) = (spec.p(), spec.q());
        let mut seen = 0;
        let mut kept = Vec::new();
        for &c in w.symbols() {
            if c != spec.letter() {
                kept.push(c);
                continue;
            }
            seen += 1;
            let rank = match spec.direction() {
                Direction::LeftToRight => seen,
                Direction::RightToLeft => total + 1 - seen,
            };
            if (rank - 1) % q >= p {
                kept.push(c);
            }
        }
        Word::new(kept, w.alphabet().clone()).unwrap()
    }

    fn small_word() -> impl Strategy<Value = Word> {
        prop::collection::vec(prop::sample::select(vec!['a', 'b', 'c']), 0..14)
            .prop_map(|s| Word::new(s, OrderedAlphabet::parse("a,b,c").unwrap()).unwrap())
    }

    proptest! {
        #[test]
        fn decimate_matches_reference(
            w in small_word(),
            q in 1usize..6,
            p_frac in 0usize..6,
            rtl in any::<bool>(),
            letter in prop::sample::select(vec!['a', 'b']),
        ) {
            let p = p_frac % (q + 1);
            let dir = if rtl { Direction::RightToLeft } else { Direction::LeftToRight };
            let spec = DecimationSpec::new(p, q, dir, letter).unwrap();
            let out = decimate(&w, &spec).unwrap();
            prop_assert_eq!(&out, &decimate_reference(&w, &spec));

            let before = count_letter(&w, letter).unwrap();
            let after = count_letter(&out, letter).unwrap();
            let removed = p * (before / q) + p.min(before % q);
            prop_assert_eq!(before - after, removed);
            for other in ['a', 'b', 'c'].into_iter().filter(|&c| c != letter) {
                prop_assert_eq!(count_letter(&w, other).unwrap(), count_letter(&out, other).unwrap());
            }
        }

        #[test]
        fn balance_matches_pairwise_definition(w in small_word()) {
            prop_assert_eq!(is_balanced(&w), balanced_by_pairs(&w));
            if is_circularly_balanced(&w) {
                prop_assert!(is_balanced(&w));
            }
        }

        #[test]
        fn reverse_is_an_involution(w in small_word()) {
            prop_assert_eq!(reverse(&reverse(&w)), w);
        }
    }

    #[test]
    fn conjugation_composes() {
        let alphabet = ax();
        for len in 0..=12usize {
            for bits in 0..(1u32 << len) {
                if len > 6 && bits % 7 != 0 {
                    continue;
                }
                let s: String = (0..len)
                    .map(|i| if bits >> i & 1 == 1 { 'a' } else { 'x' })
                    .collect();
                let w = make_word(&s, &alphabet).unwrap();
                let bound = len as i64;
                if len == 0 {
                    assert_eq!(conjugate(&w, 0).unwrap(), w);
                    continue;
                }
                for i in -bound..=bound {
                    for j in -bound..=bound {
                        let lhs = conjugate(&conjugate(&w, i).unwrap(), j).unwrap();
                        assert_eq!(lhs, conjugate(&w, i + j).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn projection_preserves_circular_balance() {
        let alphabet = OrderedAlphabet::parse("1,2,3").unwrap();
        let mut checked = 0;
        for len in 1..=10u32 {
            for code in 0..3u32.pow(len) {
                let mut c = code;
                let s: Vec<char> = (0..len)
                    .map(|_| {
                        let d = c % 3;
                        c /= 3;
                        char::from_digit(d + 1, 10).unwrap()
                    })
                    .collect();
                let w = Word::new(s, alphabet.clone()).unwrap();
                if !is_circularly_balanced(&w) {
                    continue;
                }
                checked += 1;
                for letter in ['1', '2', '3'] {
                    let projected = projection(&w, letter, 'x').unwrap();
                    assert!(is_circularly_balanced(&projected), "{w} on {letter}");
                }
            }
        }
        assert!(checked > 0);
    }
}
