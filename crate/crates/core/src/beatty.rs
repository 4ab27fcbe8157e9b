//! Fraenkel words, rational Beatty sequences and Morikawa's disjointness test.

use num_integer::Integer;
use num_rational::Ratio;

use crate::arith::{gcd, has_positive_solution};
use crate::error::{Error, Result};
use crate::words::{OrderedAlphabet, Word};

/// Index `k` of the Fraenkel word `Fr_k`, limited to `1..=20`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FraenkelIndex(u32);

impl FraenkelIndex {
    pub const MAX: u32 = 20;

    pub fn new(k: u32) -> Result<Self> {
        if (1..=Self::MAX).contains(&k) {
            Ok(Self(k))
        } else {
            Err(Error::FraenkelIndexOutOfRange { k })
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// The symbol used for letter `i` of a Fraenkel word: `1`-`9`, then `a`-`k`.
pub fn fraenkel_letter(i: u32) -> char {
    char::from_digit(i, 36).expect("letters stay below 36")
}

/// `Fr_1 = 1` and `Fr_k = Fr_{k-1} k Fr_{k-1}`.
pub fn fraenkel_word(k: FraenkelIndex) -> Word {
    let alphabet =
        OrderedAlphabet::new((1..=k.0).map(fraenkel_letter)).expect("digits are distinct");
    let mut symbols = Vec::with_capacity((1usize << k.0) - 1);
    for i in 1..=k.0 {
        let previous = symbols.clone();
        symbols.push(fraenkel_letter(i));
        symbols.extend(previous);
    }
    Word::new(symbols, alphabet).expect("letters come from the alphabet")
}

/// Occurrences of every alphabet letter, in alphabet order.
pub fn letter_frequencies(w: &Word) -> Vec<(char, usize)> {
    w.alphabet()
        .letters()
        .iter()
        .map(|&c| (c, w.symbols().iter().filter(|&&s| s == c).count()))
        .collect()
}

/// The Beatty sequence `n ↦ ⌊slope·n + offset⌋` with a rational slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BeattySpec {
    slope: Ratio<i64>,
    offset: Ratio<i64>,
}

impl BeattySpec {
    /// Slope `p/q`, stored in lowest terms.
    pub fn new(p: i64, q: i64, offset: Ratio<i64>) -> Result<Self> {
        if q <= 0 {
            return Err(Error::NonPositive {
                what: "slope denominator",
                value: q,
            });
        }
        Ok(Self {
            slope: Ratio::new(p, q),
            offset,
        })
    }

    pub fn slope(&self) -> Ratio<i64> {
        self.slope
    }

    pub fn offset(&self) -> Ratio<i64> {
        self.offset
    }

    pub fn term(&self, n: i64) -> i64 {
        let value = self.slope * n + self.offset;
        value.numer().div_floor(value.denom())
    }
}

/// Terms for `n_lo <= n <= n_hi`, in order of `n`.
pub fn beatty_slice(spec: &BeattySpec, n_lo: i64, n_hi: i64) -> Result<Vec<i64>> {
    if n_lo > n_hi {
        return Err(Error::EmptyRange { lo: n_lo, hi: n_hi });
    }
    Ok((n_lo..=n_hi).map(|n| spec.term(n)).collect())
}

/// Whether some offsets make the Beatty sequences of slopes `p1/q1` and
/// `p2/q2` disjoint.
///
/// Slopes are reduced to lowest terms first: the criterion
/// `∃ x, y >= 1: x·u1 + y·u2 = p - 2·u1·u2·(q-1)` with `p = gcd(p1, p2)`,
/// `q = gcd(q1, q2)`, `u_i = q_i/q` only holds for reduced slopes. For
/// instance `2/1` and `4/2` give the evens and the odds, yet the unreduced
/// parameters have no solution.
pub fn beatty_disjoint_exists(p1: i64, q1: i64, p2: i64, q2: i64) -> Result<bool> {
    for (what, value) in [("p1", p1), ("q1", q1), ("p2", p2), ("q2", q2)] {
        if value <= 0 {
            return Err(Error::NonPositive { what, value });
        }
    }
    let reduce = |p: i64, q: i64| {
        let g = gcd(p as u64, q as u64) as i64;
        (p / g, q / g)
    };
    let ((p1, q1), (p2, q2)) = (reduce(p1, q1), reduce(p2, q2));
    let p = gcd(p1 as u64, p2 as u64) as i64;
    let q = gcd(q1 as u64, q2 as u64) as i64;
    let (u1, u2) = (q1 / q, q2 / q);
    Ok(has_positive_solution(u1, u2, p - 2 * u1 * u2 * (q - 1)))
}
