//! Superimposition of two Christoffel words.
//!
//! A problem `(n, m, q, α, β)` pairs `C(n, qα)` over `{a < x}` with
//! `C(m, qβ)` over `{b < x}`. Shifting the second word by `k` means replacing
//! it with its conjugate `γ^k`, which moves its marked positions from `B` to
//! `B - k`. The pair is superimposable when some shift makes the two marked
//! position sets disjoint as subsets of `Z`.

use crate::arith::{gcd, has_positive_solution, lcm, mod_inverse, solve_linear_window};
use crate::christoffel::{christoffel_word, ChristoffelSpec};
use crate::error::{Error, Result};
use crate::words::{conjugate, marked_pair, reverse, OrderedAlphabet, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SuperimpositionProblem {
    n: usize,
    m: usize,
    q: usize,
    alpha: usize,
    beta: usize,
}

fn invalid(reason: String) -> Error {
    Error::InvalidProblem { reason }
}

fn require_coprime(what: &'static str, a: usize, b: usize) -> Result<()> {
    let g = gcd(a as u64, b as u64);
    if g == 1 {
        Ok(())
    } else {
        Err(Error::NotCoprime {
            what,
            a: a as u64,
            b: b as u64,
            gcd: g,
        })
    }
}

impl SuperimpositionProblem {
    pub fn new(n: usize, m: usize, q: usize, alpha: usize, beta: usize) -> Result<Self> {
        if q == 0 || alpha == 0 || beta == 0 {
            return Err(invalid(format!(
                "q, alpha and beta must be positive, got q = {q}, alpha = {alpha}, beta = {beta}"
            )));
        }
        if q * alpha >= n {
            return Err(invalid(format!(
                "q*alpha = {} must be below n = {n}",
                q * alpha
            )));
        }
        if q * beta >= m {
            return Err(invalid(format!(
                "q*beta = {} must be below m = {m}",
                q * beta
            )));
        }
        require_coprime("alpha and beta", alpha, beta)?;
        require_coprime("first word (q*alpha, n)", q * alpha, n)?;
        require_coprime("second word (q*beta, m)", q * beta, m)?;
        Ok(Self {
            n,
            m,
            q,
            alpha,
            beta,
        })
    }

    /// The problem for `C(n, a_total)` against `C(m, b_total)`, with
    /// `q = gcd(a_total, b_total)`.
    pub fn from_totals(n: usize, a_total: usize, m: usize, b_total: usize) -> Result<Self> {
        if a_total == 0 || b_total == 0 {
            return Err(invalid(format!(
                "letter counts must be positive, got {a_total} and {b_total}"
            )));
        }
        let q = gcd(a_total as u64, b_total as u64) as usize;
        Self::new(n, m, q, a_total / q, b_total / q)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    /// `gcd(n, m)`.
    pub fn p(&self) -> usize {
        gcd(self.n as u64, self.m as u64) as usize
    }

    /// Marked letters of the first word, `qα`.
    pub fn a_total(&self) -> usize {
        self.q * self.alpha
    }

    /// Marked letters of the second word, `qβ`.
    pub fn b_total(&self) -> usize {
        self.q * self.beta
    }

    pub fn first_spec(&self, marked: char, filler: char) -> Result<ChristoffelSpec> {
        ChristoffelSpec::new(self.n, self.a_total(), marked, filler)
    }

    pub fn second_spec(&self, marked: char, filler: char) -> Result<ChristoffelSpec> {
        ChristoffelSpec::new(self.m, self.b_total(), marked, filler)
    }

    /// `C(n, qα)` over `{a < x}`.
    pub fn first_word(&self) -> Word {
        christoffel_word(&self.first_spec('a', 'x').expect("validated problem"))
    }

    /// `C(m, qβ)` over `{b < x}`.
    pub fn second_word(&self) -> Word {
        christoffel_word(&self.second_spec('b', 'x').expect("validated problem"))
    }

    /// The same problem with both lengths replaced by `p`, when both words
    /// still fit.
    pub fn at_gcd(&self) -> Option<Self> {
        let p = self.p();
        Self::new(p, p, self.q, self.alpha, self.beta).ok()
    }
}

/// The unique solution of `xα + yβ = p - 2αβ(q-1)` with `1 <= y <= α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BezoutSolution {
    pub x: i64,
    pub y: i64,
    /// `α - y`.
    pub z: i64,
}

pub fn solve_bezout(problem: &SuperimpositionProblem) -> BezoutSolution {
    let (alpha, beta, q) = (problem.alpha as i64, problem.beta as i64, problem.q as i64);
    let rhs = problem.p() as i64 - 2 * alpha * beta * (q - 1);
    let (x, y) = solve_linear_window(alpha, beta, rhs).expect("alpha and beta are coprime");
    BezoutSolution { x, y, z: alpha - y }
}

pub fn is_superimposable(problem: &SuperimpositionProblem) -> bool {
    solve_bezout(problem).x > 0
}

/// Number of shifts of the longer word, modulo its length, that superimpose
/// the pair.
pub fn count_superimpositions(problem: &SuperimpositionProblem) -> u64 {
    let sol = solve_bezout(problem);
    if sol.x <= 0 {
        return 0;
    }
    let (alpha, beta) = (problem.alpha as i64, problem.beta as i64);
    let at_gcd = if sol.x <= beta {
        sol.x * sol.y
    } else {
        sol.x * alpha + sol.y * beta - alpha * beta
    };
    at_gcd as u64 * (problem.n.max(problem.m) / problem.p()) as u64
}

/// A shift of the reversed second word that superimposes it on the first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CanonicalShift {
    /// Inverse of `q` modulo `p`.
    pub r: usize,
    /// `1 - r` reduced modulo the length of the second word.
    pub shift: usize,
    /// Length of the second word.
    pub modulus: usize,
    /// `gcd(n, m)`.
    pub period: usize,
}

impl CanonicalShift {
    /// Every lift `1 - r + ip` of the shift, `0 <= i < m/p`.
    pub fn lifts(&self) -> Vec<usize> {
        (0..self.modulus / self.period)
            .map(|i| (self.shift + i * self.period) % self.modulus)
            .collect()
    }
}

pub fn canonical_shift(problem: &SuperimpositionProblem) -> Result<CanonicalShift> {
    if !is_superimposable(problem) {
        return Err(Error::NotSuperimposable);
    }
    let (p, m) = (problem.p(), problem.m);
    let r = mod_inverse(problem.q as i64, p as i64).expect("q is coprime to p") as usize;
    let shift = (1 - r as i64).rem_euclid(m as i64) as usize;
    Ok(CanonicalShift {
        r,
        shift,
        modulus: m,
        period: p,
    })
}

/// The first word and the canonically shifted reversal of the second word.
pub fn canonical_witness(problem: &SuperimpositionProblem) -> Result<(Word, Word)> {
    let shift = canonical_shift(problem)?;
    let v = conjugate(&reverse(&problem.second_word()), shift.shift as i64)?;
    Ok((problem.first_word(), v))
}

/// True iff the marked letters of `u` and `v`, repeated periodically, never
/// meet. Residues are enumerated modulo `lcm(|u|, |v|)`.
pub fn perfectly_superimposable(u: &Word, v: &Word) -> Result<bool> {
    let pair = marked_pair(u, v)?;
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    let (n, m) = (u.len(), v.len());
    let period = lcm(n as u64, m as u64) as usize;
    let vs = v.symbols();
    for i in u.positions_of(pair.first) {
        if (i..period).step_by(n).any(|t| vs[t % m] == pair.second) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Bezout test `∃ x, y >= 1: αx + βy = n`, which decides whether
/// `C(n, α)` and the reversal of `C(n, β)` are perfectly superimposable.
pub fn reversal_superimposition_criterion(n: usize, alpha: usize, beta: usize) -> Result<bool> {
    check_reversal_input(n, alpha, beta)?;
    Ok(has_positive_solution(alpha as i64, beta as i64, n as i64))
}

fn check_reversal_input(n: usize, alpha: usize, beta: usize) -> Result<()> {
    for count in [alpha, beta] {
        if count == 0 || count >= n {
            return Err(Error::AlphaOutOfRange { n, alpha: count });
        }
    }
    require_coprime("alpha and n", alpha, n)?;
    require_coprime("beta and n", beta, n)
}

/// `C(n, α)` over `{a < x}` and the reversal of `C(n, β)` over `{b < x}`.
pub fn reversal_pair(n: usize, alpha: usize, beta: usize) -> Result<(Word, Word)> {
    check_reversal_input(n, alpha, beta)?;
    let u = christoffel_word(&ChristoffelSpec::new(n, alpha, 'a', 'x')?);
    let v = christoffel_word(&ChristoffelSpec::new(n, beta, 'b', 'x')?);
    Ok((u, reverse(&v)))
}

/// `M(r) = r(x + (2q-1)β) - ⌊zr/α⌋β`.
pub fn m_offset(r: i64, sol: &BezoutSolution, q: usize, alpha: usize, beta: usize) -> Result<i64> {
    let (q, alpha, beta) = (q as i64, alpha as i64, beta as i64);
    if !(0..alpha).contains(&r) {
        return Err(Error::IndexOutOfRange { r, alpha });
    }
    Ok(r * (sol.x + (2 * q - 1) * beta) - (sol.z * r).div_euclid(alpha) * beta)
}

/// The interval bookkeeping behind the count, computed at length `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalFamily {
    /// `p`, the length the intervals live in.
    pub modulus: usize,
    /// `ᾱ` modulo `p` (0 when `p = 1`).
    pub complement: usize,
    /// `M(0), …, M(α-1)`.
    pub offsets: Vec<i64>,
    /// `I_r = [-(q-1)β - M(r), qβ - 1 - M(r)]`.
    pub i_intervals: Vec<(i64, i64)>,
    /// `V_i = [-(q-1)β, qβ - 1] + iᾱβ`.
    pub v_intervals: Vec<(i64, i64)>,
}

impl IntervalFamily {
    /// Residues modulo `p` covered by no `V_i`.
    pub fn uncovered_residues(&self) -> Vec<usize> {
        let p = self.modulus as i64;
        let mut covered = vec![false; self.modulus];
        for &(lo, hi) in &self.v_intervals {
            for t in lo..=hi.min(lo + p - 1) {
                covered[t.rem_euclid(p) as usize] = true;
            }
        }
        (0..self.modulus).filter(|&t| !covered[t]).collect()
    }
}

pub fn interval_family(problem: &SuperimpositionProblem) -> IntervalFamily {
    let sol = solve_bezout(problem);
    let (q, alpha, beta) = (problem.q, problem.alpha, problem.beta);
    let p = problem.p();
    let complement = if p == 1 {
        0
    } else {
        crate::christoffel::modular_complement(alpha % p, p).expect("alpha is coprime to p")
    };
    let offsets: Vec<i64> = (0..alpha as i64)
        .map(|r| m_offset(r, &sol, q, alpha, beta).expect("r in range"))
        .collect();
    let (q, beta) = (q as i64, beta as i64);
    let base = (-(q - 1) * beta, q * beta - 1);
    let i_intervals = offsets
        .iter()
        .map(|&mr| (base.0 - mr, base.1 - mr))
        .collect();
    let v_intervals = (0..alpha as i64)
        .map(|i| {
            let step = i * complement as i64 * beta;
            (base.0 + step, base.1 + step)
        })
        .collect();
    IntervalFamily {
        modulus: p,
        complement,
        offsets,
        i_intervals,
        v_intervals,
    }
}

/// Letter-by-letter union of two perfectly superimposed words of equal length.
///
/// The result is over `{first < second < filler}`.
pub fn merge_superimposition(u: &Word, v: &Word) -> Result<Word> {
    let pair = marked_pair(u, v)?;
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    let symbols = u
        .symbols()
        .iter()
        .zip(v.symbols())
        .enumerate()
        .map(
            |(index, (&a, &b))| match (a == pair.first, b == pair.second) {
                (true, true) => Err(Error::PositionConflict { index }),
                (true, false) => Ok(pair.first),
                (false, true) => Ok(pair.second),
                (false, false) => Ok(pair.filler),
            },
        )
        .collect::<Result<Vec<_>>>()?;
    Word::new(
        symbols,
        OrderedAlphabet::new([pair.first, pair.second, pair.filler])?,
    )
}

/// Deletes every `filler` from `w`; the filler leaves the alphabet too.
pub fn collapse_merge(w: &Word, filler: char) -> Result<Word> {
    if !w.alphabet().contains(filler) {
        return Err(Error::LetterNotInAlphabet { letter: filler });
    }
    let alphabet = OrderedAlphabet::new(
        w.alphabet()
            .letters()
            .iter()
            .copied()
            .filter(|&c| c != filler),
    )?;
    let symbols = w
        .symbols()
        .iter()
        .copied()
        .filter(|&c| c != filler)
        .collect();
    Word::new(symbols, alphabet)
}

/// Every stage of the merge of `C(n, α)` with the reversal of `C(n, β)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergePipeline {
    pub u: Word,
    pub v: Word,
    pub merged: Word,
    pub collapsed: Word,
}

/// Builds `C(n, α)` over `{a < z}` and the reversal of `C(n, β)` over
/// `{b < z}`, merges them and removes the filler. For a superimposable pair
/// the last stage is `C(α + β, α)` over `{a < b}`.
pub fn merge_pipeline(
    n: usize,
    alpha: usize,
    beta: usize,
    letters: [char; 3],
) -> Result<MergePipeline> {
    check_reversal_input(n, alpha, beta)?;
    let [a, b, z] = letters;
    let u = christoffel_word(&ChristoffelSpec::new(n, alpha, a, z)?);
    let v = reverse(&christoffel_word(&ChristoffelSpec::new(n, beta, b, z)?));
    if !perfectly_superimposable(&u, &v)? {
        return Err(Error::NotSuperimposable);
    }
    let merged = merge_superimposition(&u, &v)?;
    let collapsed = collapse_merge(&merged, z)?;
    Ok(MergePipeline {
        u,
        v,
        merged,
        collapsed,
    })
}

/// Everything the theory says about one problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperimpositionReport {
    pub superimposable: bool,
    pub bezout: BezoutSolution,
    pub count: u64,
    pub canonical_shift: Option<CanonicalShift>,
    /// The canonical shift applies to the reversed second word.
    pub reversed_form: bool,
}

/// Runs every fast path and re-validates the canonical witness directly.
pub fn analyze(problem: &SuperimpositionProblem) -> Result<SuperimpositionReport> {
    let bezout = solve_bezout(problem);
    let superimposable = bezout.x > 0;
    let canonical = if superimposable {
        let shift = canonical_shift(problem)?;
        let (u, v) = canonical_witness(problem)?;
        if !perfectly_superimposable(&u, &v)? {
            return Err(Error::WitnessRejected { shift: shift.shift });
        }
        Some(shift)
    } else {
        None
    };
    Ok(SuperimpositionReport {
        superimposable,
        bezout,
        count: count_superimpositions(problem),
        canonical_shift: canonical,
        reversed_form: true,
    })
}
