use thiserror::Error;

/// Everything that can go wrong when an operation's preconditions are not met.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter:?} appears twice in the alphabet")]
    DuplicateLetter { letter: char },

    #[error("alphabet token {token:?} is not a single printable character")]
    InvalidLetterToken { token: String },

    #[error("symbol {symbol:?} at index {index} is not in the alphabet")]
    SymbolNotInAlphabet { symbol: char, index: usize },

    #[error("letter {letter:?} is not in the alphabet")]
    LetterNotInAlphabet { letter: char },

    #[error("filler letter {letter:?} already belongs to the alphabet")]
    FillerCollision { letter: char },

    #[error("cannot rotate the empty word by {shift}")]
    EmptyRotation { shift: i64 },

    #[error("operation is undefined on the empty word")]
    EmptyWord,

    #[error("decimation needs p <= q and q >= 1, got p = {p}, q = {q}")]
    InvalidDecimation { p: usize, q: usize },

    #[error("low and high letters must differ, both are {letter:?}")]
    SameLetters { letter: char },

    #[error("alpha = {alpha} is out of range for length n = {n} (need 1 <= alpha <= n)")]
    AlphaOutOfRange { n: usize, alpha: usize },

    #[error("{what}: gcd({a}, {b}) = {gcd}, expected coprime values")]
    NotCoprime {
        what: &'static str,
        a: u64,
        b: u64,
        gcd: u64,
    },

    #[error("modulus must be at least 2, got {n}")]
    ModulusTooSmall { n: usize },

    #[error("the Cayley graph is undefined for alpha = n = {n}")]
    DegenerateCayley { n: usize },

    #[error("invalid superimposition problem: {reason}")]
    InvalidProblem { reason: String },

    #[error("alphabet mismatch: {reason}")]
    AlphabetMismatch { reason: String },

    #[error("words have different lengths {left} and {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("both words carry a marked letter at position {index}")]
    PositionConflict { index: usize },

    #[error("the words are not superimposable")]
    NotSuperimposable,

    #[error("index {r} is out of range [0, {alpha})")]
    IndexOutOfRange { r: i64, alpha: i64 },

    #[error("coin values must be positive, got ({a}, {b})")]
    InvalidCoins { a: u64, b: u64 },

    #[error("Fraenkel index k = {k} is outside 1..=20")]
    FraenkelIndexOutOfRange { k: u32 },

    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: i64 },

    #[error("empty range: {lo} > {hi}")]
    EmptyRange { lo: i64, hi: i64 },

    #[error("canonical witness failed to re-validate for shift {shift}")]
    WitnessRejected { shift: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
