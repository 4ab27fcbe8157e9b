//! The two-coin money problem and its staircase boundary.

use crate::arith::gcd;
use crate::christoffel::{cayley_graph, ChristoffelSpec};
use crate::error::{Error, Result};
use crate::words::{OrderedAlphabet, Word};

/// Two coprime coin values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoinPair {
    a: u64,
    b: u64,
}

impl CoinPair {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidCoins { a, b });
        }
        let g = gcd(a, b);
        if g != 1 {
            return Err(Error::NotCoprime {
                what: "coin values",
                a,
                b,
                gcd: g,
            });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }
}

/// Largest amount that cannot be paid, `(a-1)(b-1) - 1`.
///
/// With a coin of value 1 every amount can be paid and the result is `-1`.
pub fn frobenius_number(coins: &CoinPair) -> i64 {
    if coins.a == 1 || coins.b == 1 {
        return -1;
    }
    ((coins.a - 1) * (coins.b - 1)) as i64 - 1
}

/// How many amounts cannot be paid, `(a-1)(b-1)/2`.
pub fn nonrepresentable_count(coins: &CoinPair) -> u64 {
    (coins.a - 1) * (coins.b - 1) / 2
}

/// True iff `amount = ax + by` for some `x, y >= 0`.
pub fn representable(coins: &CoinPair, amount: u64) -> bool {
    // Only x modulo b matters, so at most b candidates.
    (0..coins.b)
        .take_while(|x| x * coins.a <= amount)
        .any(|x| (amount - x * coins.a).is_multiple_of(coins.b))
}

/// The staircase separating `{(x, -y) : xb + ya < ab}` from the rest of the
/// quadrant, walked from its lower-left corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadrantBoundary {
    coins: CoinPair,
    word: Word,
    values: Vec<i64>,
}

impl QuadrantBoundary {
    pub fn coins(&self) -> CoinPair {
        self.coins
    }

    /// Right moves as the first letter, up moves as the second.
    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Values met along the walk, starting and ending at `ab - a - b`.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Value `xb + ya` of the cell at `(x, -y)`.
    pub fn cell_value(&self, x: u64, y: u64) -> u64 {
        x * self.coins.b + y * self.coins.a
    }

    /// Cells `(x, y, value)` of the retained region `xb + ya < ab`.
    pub fn region(&self) -> Vec<(u64, u64, u64)> {
        let (a, b) = (self.coins.a, self.coins.b);
        (0..a)
            .flat_map(|x| (0..b).map(move |y| (x, y)))
            .map(|(x, y)| (x, y, self.cell_value(x, y)))
            .filter(|&(_, _, value)| value < a * b)
            .collect()
    }
}

/// Boundary word over `{α < β}`.
pub fn boundary_word(coins: &CoinPair) -> QuadrantBoundary {
    boundary_word_with(coins, 'α', 'β').expect("default letters differ")
}

pub fn boundary_word_with(coins: &CoinPair, right: char, up: char) -> Result<QuadrantBoundary> {
    let alphabet = OrderedAlphabet::new([right, up])?;
    let (a, b) = (coins.a as i64, coins.b as i64);
    let mut value = a * b - a - b;
    let mut values = vec![value];
    let mut symbols = Vec::with_capacity((a + b) as usize);
    for _ in 0..a + b {
        // Move right while the next value stays below ab, otherwise climb.
        if value + b < a * b {
            value += b;
            symbols.push(right);
        } else {
            value -= a;
            symbols.push(up);
        }
        values.push(value);
    }
    Ok(QuadrantBoundary {
        coins: *coins,
        word: Word::new(symbols, alphabet)?,
        values,
    })
}

/// Cayley traversal of `C(a+b, a)` with `ab - a - b` added to every vertex.
pub fn shifted_cayley(coins: &CoinPair) -> Result<Vec<i64>> {
    let (a, b) = (coins.a as usize, coins.b as usize);
    let spec = ChristoffelSpec::new(a + b, a, 'α', 'β')?;
    let offset = (a * b) as i64 - (a + b) as i64;
    Ok(cayley_graph(&spec)?
        .vertex_order()
        .into_iter()
        .map(|v| v as i64 + offset)
        .collect())
}
