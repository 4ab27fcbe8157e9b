//! Brute-force reference implementations.
//!
//! Nothing here calls into the decision logic it is meant to check. Shifts
//! are found by enumerating residues modulo `lcm(|u|, |v|)`, Frobenius data by
//! a sieve, and Beatty offsets by a grid search.

use num_rational::Ratio;

use crate::arith::{gcd, lcm};
use crate::error::{Error, Result};
use crate::money::CoinPair;
use crate::words::{marked_pair, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// Some shift superimposes the pair.
    pub decision: bool,
    /// Every valid shift of the shifted operand, ascending.
    pub witnesses: Vec<usize>,
    /// Length of the shifted operand; witnesses live modulo this.
    pub modulus: usize,
    /// The operands were exchanged so that the longer one is shifted.
    pub swapped: bool,
    /// A valid shift exists below `min(|u|, |v|)`.
    pub window_decision: bool,
}

/// Finds every shift `k` of the longer operand (the second one on ties) such
/// that the marked letters of the pair never meet.
pub fn oracle_superimposable(u: &Word, v: &Word) -> Result<OracleResult> {
    let pair = marked_pair(u, v)?;
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    let swapped = u.len() > v.len();
    let ((fixed, fixed_mark), (shifted, shifted_mark)) = if swapped {
        ((v, pair.second), (u, pair.first))
    } else {
        ((u, pair.first), (v, pair.second))
    };
    let (n, m) = (fixed.len(), shifted.len());
    let period = lcm(n as u64, m as u64) as usize;
    let a = fixed.positions_of(fixed_mark);
    let b = shifted.positions_of(shifted_mark);
    // Every t in A + nZ below the period; t collides with shift k iff
    // t + k lands on a marked letter of the shifted word.
    let residues = a
        .iter()
        .flat_map(|&i| (i..period).step_by(n).map(move |t| t % m));
    let bad = if m <= 128 {
        bad_shifts_narrow(m, &b, residues)
    } else {
        bad_shifts_wide(m, &b, residues)
    };
    let witnesses: Vec<usize> = (0..m).filter(|&k| !bad[k]).collect();
    Ok(OracleResult {
        decision: !witnesses.is_empty(),
        window_decision: witnesses.iter().any(|&k| k < n),
        witnesses,
        modulus: m,
        swapped,
    })
}

fn bad_shifts_narrow(m: usize, b: &[usize], residues: impl Iterator<Item = usize>) -> Vec<bool> {
    let full = if m == 128 {
        u128::MAX
    } else {
        (1u128 << m) - 1
    };
    let marks = b.iter().fold(0u128, |acc, &j| acc | 1 << j);
    let mut bad = 0u128;
    for s in residues {
        // Bit j of `marks` becomes bit (j - s) mod m.
        let rotated = if s == 0 {
            marks
        } else {
            ((marks >> s) | (marks << (m - s))) & full
        };
        bad |= rotated;
        if bad == full {
            break;
        }
    }
    (0..m).map(|k| bad >> k & 1 == 1).collect()
}

fn bad_shifts_wide(m: usize, b: &[usize], residues: impl Iterator<Item = usize>) -> Vec<bool> {
    let mut bad = vec![false; m];
    let mut remaining = m;
    for s in residues {
        for &j in b {
            let k = (j + m - s) % m;
            if !bad[k] {
                bad[k] = true;
                remaining -= 1;
            }
        }
        if remaining == 0 {
            break;
        }
    }
    bad
}

/// Checks one shift of `v` (not of the longer word) by scanning a full
/// common period letter by letter.
pub fn validate_shift(u: &Word, v: &Word, k: usize) -> Result<bool> {
    let pair = marked_pair(u, v)?;
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    let (us, vs) = (u.symbols(), v.symbols());
    let period = lcm(us.len() as u64, vs.len() as u64) as usize;
    Ok((0..period)
        .all(|t| !(us[t % us.len()] == pair.first && vs[(t + k) % vs.len()] == pair.second)))
}

/// Largest non-representable amount and the number of non-representable
/// amounts, from a sieve over `[0, ab]`.
pub fn oracle_frobenius(coins: &CoinPair) -> (i64, u64) {
    let (a, b) = (coins.a() as usize, coins.b() as usize);
    let top = a * b;
    let mut reachable = vec![false; top + 1];
    reachable[0] = true;
    for amount in 1..=top {
        reachable[amount] =
            (amount >= a && reachable[amount - a]) || (amount >= b && reachable[amount - b]);
    }
    let missing: Vec<usize> = (0..=top).filter(|&t| !reachable[t]).collect();
    let largest = missing.last().map_or(-1, |&t| t as i64);
    (largest, missing.len() as u64)
}

/// Offsets making two Beatty sequences disjoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BeattyWitness {
    pub offset1: Ratio<i64>,
    pub offset2: Ratio<i64>,
}

/// Searches offsets `t1/d` with `0 <= t1 < d` and `t2/d` with
/// `0 <= t2 < d·lcm(p1, p2)` for a pair making `⌊p1·n/q1 + t1/d⌋` and
/// `⌊p2·n/q2 + t2/d⌋` disjoint. Both sequences are unions of residue classes
/// modulo `lcm(p1, p2)`, so one period decides disjointness.
pub fn oracle_beatty_disjoint(
    p1: i64,
    q1: i64,
    p2: i64,
    q2: i64,
    d: i64,
) -> Result<Option<BeattyWitness>> {
    for (what, value) in [
        ("p1", p1),
        ("q1", q1),
        ("p2", p2),
        ("q2", q2),
        ("offset grid", d),
    ] {
        if value <= 0 {
            return Err(Error::NonPositive { what, value });
        }
    }
    let period = lcm(p1 as u64, p2 as u64) as i64;
    let residues = |p: i64, q: i64, t: i64| {
        let mut hit = vec![false; period as usize];
        // k runs over enough terms to climb through one full period of values.
        for k in 0..q * period / gcd(p as u64, q as u64) as i64 {
            let term = (p * k * d + t * q).div_euclid(q * d);
            hit[term.rem_euclid(period) as usize] = true;
        }
        hit
    };
    for t1 in 0..d {
        let first = residues(p1, q1, t1);
        for t2 in 0..d * period {
            let second = residues(p2, q2, t2);
            if first.iter().zip(&second).all(|(x, y)| !(x & y)) {
                return Ok(Some(BeattyWitness {
                    offset1: Ratio::new(t1, d),
                    offset2: Ratio::new(t2, d),
                }));
            }
        }
    }
    Ok(None)
}
