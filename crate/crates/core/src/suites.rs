//! Seeded randomized checks of the identities `f_n` satisfies.
//!
//! Each suite draws its inputs from a ChaCha stream seeded by the caller, so a
//! report is reproducible from the seed and bounds alone.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::invariant::{f_invariant, skein_defect, split_union};
use crate::markov::{random_letters, random_markov_walk_with, random_word_with, MarkovMove};
use crate::poly::IntPoly;
use crate::rep::{fixed_row, psi, Side};
use crate::table::family_c;
use crate::twin::{stab_word_left, stab_word_right, TwinWord};

/// Outcome of one suite run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub trials: usize,
    pub checks: usize,
    pub failures: usize,
    /// Computed `f` values that had an odd-degree term.
    pub odd_values: usize,
    /// Number of `f` values computed along the way.
    pub values_seen: usize,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.odd_values == 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    /// `f` of `word`, recording whether it lies in `Z[x^2]`.
    fn f(&mut self, word: &TwinWord) -> Result<IntPoly> {
        let raw = f_invariant(word)?.raw;
        self.values_seen += 1;
        if !raw.is_even() {
            self.odd_values += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(format!("f({word}) = {raw} has odd terms"));
            }
        }
        Ok(raw)
    }
}

/// Bounds for [`markov_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MarkovSuiteConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_strands: usize,
    pub max_len: usize,
    /// Longest random Gotin-Markov walk per trial.
    pub max_moves: usize,
}

impl Default for MarkovSuiteConfig {
    fn default() -> Self {
        MarkovSuiteConfig {
            seed: 42,
            trials: 200,
            max_strands: 6,
            max_len: 12,
            max_moves: 4,
        }
    }
}

/// Checks, for random `beta`, conjugation invariance, `f(iota(beta)) = 0`,
/// simple stabilization, `f(iota^R(beta) t_{n,i}) = x^{2i} f(beta)` and its
/// left mirror for every valid `i`, and that a random move sequence changes
/// `f` by exactly the predicted power of `x^2`.
pub fn markov_suite(config: &MarkovSuiteConfig) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut report = SuiteReport::default();
    for _ in 0..config.trials {
        report.trials += 1;
        let beta = random_word_with(&mut rng, 2, config.max_strands, config.max_len);
        markov_checks(&mut rng, &beta, config.max_moves, &mut report)?;
    }
    Ok(report)
}

/// The individual checks of [`markov_suite`] for a single word.
pub fn markov_checks<R: Rng + ?Sized>(
    rng: &mut R,
    beta: &TwinWord,
    max_moves: usize,
    report: &mut SuiteReport,
) -> Result<()> {
    let n = beta.strands();
    let f_beta = report.f(beta)?;

    let len = rng.gen_range(1..=4);
    let g = random_letters(rng, n, len);
    let conj = g.inverse().concat(beta)?.concat(&g)?;
    let f_conj = report.f(&conj)?;
    report.check(f_conj == f_beta, || {
        format!("conjugation: f({conj}) != f({beta})")
    });

    let right = beta.iota_right();
    let left = beta.iota_left();
    let (fr, fl) = (report.f(&right)?, report.f(&left)?);
    report.check(fr.is_zero() && fl.is_zero(), || {
        format!("inclusion of {beta} has nonzero f")
    });

    let mut stab_r = right.clone();
    stab_r.push(n)?;
    let mut stab_l = left.clone();
    stab_l.push(1)?;
    let (fsr, fsl) = (report.f(&stab_r)?, report.f(&stab_l)?);
    report.check(fsr == f_beta, || {
        format!("stabilization: f({stab_r}) != f({beta})")
    });
    report.check(fsl == f_beta, || {
        format!("stabilization: f({stab_l}) != f({beta})")
    });

    for i in 1..n {
        let expected = f_beta.shift(2 * i);
        let hr = right.concat(&stab_word_right(n, i)?)?;
        let hl = left.concat(&stab_word_left(n, i)?)?;
        let (fhr, fhl) = (report.f(&hr)?, report.f(&hl)?);
        report.check(fhr == expected, || {
            format!("hyper-stabilization: f({hr}) != x^{} f({beta})", 2 * i)
        });
        report.check(fhl == expected, || {
            format!("hyper-stabilization: f({hl}) != x^{} f({beta})", 2 * i)
        });
    }

    let steps = rng.gen_range(0..=max_moves);
    let (end, moves) = random_markov_walk_with(rng, beta, steps, crate::markov::WALK_MAX_STRANDS);
    let f_end = report.f(&end)?;
    let net: i64 = moves.iter().map(MarkovMove::x2_power_change).sum();
    let ok = if net >= 0 {
        f_end == f_beta.shift(2 * net as usize)
    } else {
        f_beta == f_end.shift(2 * (-net) as usize)
    };
    report.check(ok, || {
        let path: Vec<String> = moves.iter().map(|m| format!("{m}")).collect();
        format!(
            "walk {beta} -> {end} via [{}] changed f unexpectedly",
            path.join(", ")
        )
    });
    let (ca, cb) = (
        f_beta.x2_valuation().ok().map(|v| v.1),
        f_end.x2_valuation().ok().map(|v| v.1),
    );
    report.check(ca == cb, || {
        format!("walk {beta} -> {end} changed the canonical invariant")
    });
    Ok(())
}

/// Random `(prefix, i)` pairs on `3..=max_strands` strands must have zero skein defect.
pub fn skein_suite(
    seed: u64,
    trials: usize,
    max_strands: usize,
    max_len: usize,
) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::default();
    for _ in 0..trials {
        report.trials += 1;
        let prefix = random_word_with(&mut rng, 3, max_strands.max(3), max_len);
        let i = rng.gen_range(1..=prefix.strands() - 2);
        for tail in [&[i, i + 1, i][..], &[i + 1, i, i + 1], &[i], &[i + 1]] {
            let mut w = prefix.clone();
            for &l in tail {
                w.push(l)?;
            }
            report.f(&w)?;
        }
        let defect = skein_defect(&prefix, i)?;
        report.check(defect.is_zero(), || {
            format!("skein defect at ({prefix}, {i}) is {defect}")
        });
    }
    Ok(report)
}

/// Random `beta` on `2..=max_strands` strands: the Chebyshev rows are fixed by
/// `psi(iota^R(beta))` and `psi(iota^L(beta))`, and the block shape of those
/// images holds.
pub fn fixed_vector_suite(
    seed: u64,
    trials: usize,
    max_strands: usize,
    max_len: usize,
) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::default();
    for _ in 0..trials {
        report.trials += 1;
        let beta = random_word_with(&mut rng, 2, max_strands, max_len);
        let n = beta.strands();
        let inner = psi(&beta)?;
        for side in [Side::Right, Side::Left] {
            let image = match side {
                Side::Right => beta.iota_right(),
                Side::Left => beta.iota_left(),
            };
            let m = psi(&image)?;
            let row = fixed_row(n, side)?;
            let fixed = m.left_mul_row(&row)? == row;
            report.check(fixed, || {
                format!("{side:?} fixed row moved by psi({image})")
            });
            let offset = usize::from(side == Side::Left);
            let block_ok = (0..n - 1)
                .all(|r| (0..n - 1).all(|c| m.get(r + offset, c + offset) == inner.get(r, c)));
            let edge = if side == Side::Right { n - 1 } else { 0 };
            // The column of the added strand stays a unit vector.
            let edge_ok = (0..n).all(|k| {
                let e = m.get(k, edge);
                if k == edge {
                    *e == IntPoly::from(1)
                } else {
                    e.is_zero()
                }
            });
            report.check(block_ok && edge_ok, || {
                format!("{side:?} block form fails for psi({image})")
            });
        }
    }
    Ok(report)
}

/// Disjoint unions of random twins and the `C^r_n` family must have `f = 0`.
pub fn vanishing_suite(
    seed: u64,
    pairs: usize,
    max_strands: usize,
    max_len: usize,
) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::default();
    for _ in 0..pairs {
        report.trials += 1;
        let a = random_word_with(&mut rng, 2, max_strands, max_len);
        let b = random_word_with(&mut rng, 2, max_strands, max_len);
        let u = split_union(&a, &b);
        let f = report.f(&u)?;
        report.check(f.is_zero(), || {
            format!("f({u}) = {f} for the split union of {a} and {b}")
        });
    }
    for r in 1..=3 {
        for n in 3..=6 {
            report.trials += 1;
            let w = family_c(r, n);
            let f = report.f(&w)?;
            report.check(f.is_zero(), || format!("f(C^{r}_{n}) = {f}"));
        }
    }
    Ok(report)
}
