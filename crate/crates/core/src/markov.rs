//! Gotin-Markov moves on twin words and seeded random generators for them.
//!
//! Two twins close to equivalent doodles exactly when they are related by
//! a finite sequence of the moves below:
//!
//! * `M0`: `iota^R(b) ~ iota^L(b)`
//! * `M1`: `a b ~ b a` (applied here as conjugation)
//! * `M2R`: `b ~ iota^R(b) t_{n,i}`
//! * `M2L`: `b ~ iota^L(b) t_{1,i}`

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::twin::{stab_word_left, stab_word_right, TwinWord};

/// Strand cap used by [`random_markov_walk`].
pub const WALK_MAX_STRANDS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MarkovMove {
    /// Forward moves an unused right-hand strand to the left; backward undoes it.
    M0 { direction: Direction },
    /// Forward gives `g^-1 w g`, backward `g w g^-1`; the result is freely reduced.
    M1 {
        conjugator: TwinWord,
        direction: Direction,
    },
    /// Forward gives `iota^R(w) t_{n,i}`.
    M2R { index: usize, direction: Direction },
    /// Forward gives `iota^L(w) t_{1,i}`.
    M2L { index: usize, direction: Direction },
}

impl MarkovMove {
    pub fn apply(&self, word: &TwinWord) -> Result<TwinWord> {
        apply_markov(word, self)
    }

    /// Power of `x^2` by which `f` is multiplied when this move is applied.
    pub fn x2_power_change(&self) -> i64 {
        match self {
            MarkovMove::M0 { .. } | MarkovMove::M1 { .. } => 0,
            MarkovMove::M2R { index, direction } | MarkovMove::M2L { index, direction } => {
                match direction {
                    Direction::Forward => *index as i64,
                    Direction::Backward => -(*index as i64),
                }
            }
        }
    }
}

impl fmt::Display for MarkovMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrow = |d: &Direction| match d {
            Direction::Forward => "+",
            Direction::Backward => "-",
        };
        match self {
            MarkovMove::M0 { direction } => write!(f, "M0{}", arrow(direction)),
            MarkovMove::M1 {
                conjugator,
                direction,
            } => {
                write!(f, "M1{}[{}]", arrow(direction), conjugator)
            }
            MarkovMove::M2R { index, direction } => write!(f, "M2R{}(i={index})", arrow(direction)),
            MarkovMove::M2L { index, direction } => write!(f, "M2L{}(i={index})", arrow(direction)),
        }
    }
}

fn invalid(msg: alloc::string::String) -> Error {
    Error::InvalidMove(msg)
}

/// True when strand `strands` is untouched: no letter uses it and the permutation fixes it.
fn right_edge_free(word: &TwinWord) -> bool {
    let n = word.strands();
    n >= 2 && word.letters().iter().all(|&l| l < n - 1) && word.permutation().fixes(n)
}

fn left_edge_free(word: &TwinWord) -> bool {
    word.strands() >= 2 && word.letters().iter().all(|&l| l > 1) && word.permutation().fixes(1)
}

pub fn apply_markov(word: &TwinWord, mv: &MarkovMove) -> Result<TwinWord> {
    let n = word.strands();
    match mv {
        MarkovMove::M0 {
            direction: Direction::Forward,
        } => {
            if !right_edge_free(word) {
                return Err(invalid(format!("{word} does not leave strand {n} free")));
            }
            TwinWord::new(word.letters().iter().map(|l| l + 1).collect(), n)
        }
        MarkovMove::M0 {
            direction: Direction::Backward,
        } => {
            if !left_edge_free(word) {
                return Err(invalid(format!("{word} does not leave strand 1 free")));
            }
            TwinWord::new(word.letters().iter().map(|l| l - 1).collect(), n)
        }
        MarkovMove::M1 {
            conjugator,
            direction,
        } => {
            if let Some(&bad) = conjugator.letters().iter().find(|&&l| l >= n) {
                return Err(invalid(format!("conjugator letter t{bad} is not in T_{n}")));
            }
            let g = conjugator.with_strands(n)?;
            let (left, right) = match direction {
                Direction::Forward => (g.inverse(), g),
                Direction::Backward => (g.clone(), g.inverse()),
            };
            Ok(left.concat(word)?.concat(&right)?.reduce())
        }
        MarkovMove::M2R {
            index,
            direction: Direction::Forward,
        } => {
            let tail = stab_word_right(n, *index).map_err(|e| invalid(format!("{e}")))?;
            word.iota_right().concat(&tail)
        }
        MarkovMove::M2L {
            index,
            direction: Direction::Forward,
        } => {
            let tail = stab_word_left(n, *index).map_err(|e| invalid(format!("{e}")))?;
            word.iota_left().concat(&tail)
        }
        MarkovMove::M2R {
            index,
            direction: Direction::Backward,
        } => {
            let (prefix, inner) = strip_stabilization(word, *index, stab_word_right)?;
            if prefix.iter().any(|&l| l >= inner) {
                return Err(invalid(format!("{word} is not in the image of iota^R")));
            }
            TwinWord::new(prefix.to_vec(), inner)
        }
        MarkovMove::M2L {
            index,
            direction: Direction::Backward,
        } => {
            let (prefix, inner) = strip_stabilization(word, *index, stab_word_left)?;
            if prefix.contains(&1) {
                return Err(invalid(format!("{word} is not in the image of iota^L")));
            }
            TwinWord::new(prefix.iter().map(|l| l - 1).collect(), inner)
        }
    }
}

/// Splits off a trailing stabilization word, returning the prefix letters and
/// the strand count the prefix came from.
fn strip_stabilization(
    word: &TwinWord,
    index: usize,
    tail: fn(usize, usize) -> Result<TwinWord>,
) -> Result<(&[usize], usize)> {
    let inner = word
        .strands()
        .checked_sub(1)
        .filter(|&m| m >= 1)
        .ok_or_else(|| invalid(format!("{word} has too few strands to destabilize")))?;
    let tail = tail(inner, index).map_err(|e| invalid(format!("{e}")))?;
    let letters = word.letters();
    if !letters.ends_with(tail.letters()) {
        return Err(invalid(format!("{word} does not end with {tail}")));
    }
    Ok((&letters[..letters.len() - tail.len()], inner))
}

/// Uniform random word: strands in `2..=max_strands`, length in `0..=max_len`.
pub fn random_word(seed: u64, max_strands: usize, max_len: usize) -> TwinWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_word_with(&mut rng, 2, max_strands, max_len)
}

pub fn random_word_with<R: Rng + ?Sized>(
    rng: &mut R,
    min_strands: usize,
    max_strands: usize,
    max_len: usize,
) -> TwinWord {
    let min_strands = min_strands.max(2);
    let strands = rng.gen_range(min_strands..=max_strands.max(min_strands));
    let len = rng.gen_range(0..=max_len);
    random_letters(rng, strands, len)
}

/// Random word of exactly `len` letters on `strands >= 2` strands.
pub fn random_letters<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> TwinWord {
    let letters = (0..len).map(|_| rng.gen_range(1..strands)).collect();
    TwinWord::new(letters, strands).expect("letters drawn from 1..strands")
}

/// Every move from a fresh random draw that is valid on `word`.
fn candidate_moves<R: Rng + ?Sized>(
    rng: &mut R,
    word: &TwinWord,
    max_strands: usize,
) -> Vec<MarkovMove> {
    let n = word.strands();
    let mut out = Vec::new();
    if n >= 2 {
        let len = rng.gen_range(1..=3);
        out.push(MarkovMove::M1 {
            conjugator: random_letters(rng, n, len),
            direction: if rng.gen_bool(0.5) {
                Direction::Forward
            } else {
                Direction::Backward
            },
        });
    }
    if n < max_strands {
        let index = rng.gen_range(0..n);
        out.push(MarkovMove::M2R {
            index,
            direction: Direction::Forward,
        });
        let index = rng.gen_range(0..n);
        out.push(MarkovMove::M2L {
            index,
            direction: Direction::Forward,
        });
    }
    for index in 0..n.saturating_sub(1) {
        for mv in [
            MarkovMove::M2R {
                index,
                direction: Direction::Backward,
            },
            MarkovMove::M2L {
                index,
                direction: Direction::Backward,
            },
        ] {
            if apply_markov(word, &mv).is_ok() {
                out.push(mv);
            }
        }
    }
    if right_edge_free(word) {
        out.push(MarkovMove::M0 {
            direction: Direction::Forward,
        });
    }
    if left_edge_free(word) {
        out.push(MarkovMove::M0 {
            direction: Direction::Backward,
        });
    }
    out
}

/// Applies `steps` random valid moves and records them. Deterministic per seed.
pub fn random_markov_walk(seed: u64, word: &TwinWord, steps: usize) -> (TwinWord, Vec<MarkovMove>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_markov_walk_with(&mut rng, word, steps, WALK_MAX_STRANDS)
}

pub fn random_markov_walk_with<R: Rng + ?Sized>(
    rng: &mut R,
    word: &TwinWord,
    steps: usize,
    max_strands: usize,
) -> (TwinWord, Vec<MarkovMove>) {
    let mut current = word.clone();
    let mut moves = Vec::with_capacity(steps);
    for _ in 0..steps {
        let candidates = candidate_moves(rng, &current, max_strands);
        let Some(mv) = candidates.choose(rng).cloned() else {
            break;
        };
        current = apply_markov(&current, &mv).expect("candidate moves are valid");
        moves.push(mv);
    }
    (current, moves)
}
