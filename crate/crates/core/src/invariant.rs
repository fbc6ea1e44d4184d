//! The polynomial `f_n` on twin words and its canonical class representative.
//!
//! `f_n(beta) = det(psi_n(beta) - I) / P_{n-1}(x)` where
//! `P_m = det(psi_{m+1}(t_1 ... t_m) - I)` obeys `P_m = -2 P_{m-1} - x^2 P_{m-2}`.
//! Gotin-Markov moves change `f_n` only by powers `x^{2k}`, so stripping the
//! largest power of `x^2` yields a representative that depends only on the
//! doodle.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::rep::psi;
use crate::twin::TwinWord;

/// `f_n` of a word together with its `x^2`-adic normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantValue {
    /// `f_n(beta)` itself.
    pub raw: IntPoly,
    pub strands: usize,
    /// Largest `v` with `x^{2v}` dividing `raw`; zero when `raw = 0`.
    pub valuation: usize,
    /// `raw / x^{2 valuation}`, or zero.
    pub canonical: IntPoly,
}

impl InvariantValue {
    fn from_raw(raw: IntPoly, strands: usize) -> Self {
        match raw.x2_valuation() {
            Ok((valuation, canonical)) => InvariantValue {
                raw,
                strands,
                valuation,
                canonical,
            },
            Err(_) => InvariantValue {
                raw,
                strands,
                valuation: 0,
                canonical: IntPoly::zero(),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        self.raw.is_zero()
    }
}

/// Chebyshev polynomial of the second kind `U_n(z)`, with `z` as the variable.
pub fn chebyshev_u(n: usize) -> IntPoly {
    chebyshev_u_table(n + 1).pop().unwrap_or_else(IntPoly::one)
}

/// `U_0, ..., U_{count-1}`.
pub fn chebyshev_u_table(count: usize) -> Vec<IntPoly> {
    let two_z = IntPoly::monomial(2, 1);
    let mut out: Vec<IntPoly> = Vec::with_capacity(count);
    for k in 0..count {
        let next = match k {
            0 => IntPoly::one(),
            1 => two_z.clone(),
            _ => &two_z * &out[k - 1] - &out[k - 2],
        };
        out.push(next);
    }
    out
}

/// Normalizing polynomial `P_n(x)` from its integer recurrence.
pub fn p_poly(n: usize) -> IntPoly {
    let mut prev = IntPoly::one();
    if n == 0 {
        return prev;
    }
    let minus_two = BigInt::from(-2);
    let mut cur = IntPoly::constant(-2);
    for _ in 1..n {
        let next = cur.scale(&minus_two) - prev.shift(2);
        prev = core::mem::replace(&mut cur, next);
    }
    cur
}

/// `det(psi_n(beta) - I_{n-1})`, or `1` on a single strand.
pub fn reduced_determinant(word: &TwinWord) -> Result<IntPoly> {
    if word.strands() == 1 {
        return Ok(IntPoly::one());
    }
    Ok(psi(word)?.minus_identity().determinant())
}

/// `f_n(beta)`; the constant `1` on one strand.
pub fn f_invariant(word: &TwinWord) -> Result<InvariantValue> {
    let n = word.strands();
    if n == 1 {
        return Ok(InvariantValue::from_raw(IntPoly::one(), 1));
    }
    let det = reduced_determinant(word)?;
    let raw = det.exact_div(&p_poly(n - 1)).map_err(|e| {
        Error::Internal(format!(
            "det(psi_{n} - I) is not divisible by P_{}: {e}",
            n - 1
        ))
    })?;
    Ok(InvariantValue::from_raw(raw, n))
}

/// `f_n(beta)` with every factor `x^2` removed; zero stays zero.
pub fn canonical_invariant(word: &TwinWord) -> Result<IntPoly> {
    Ok(f_invariant(word)?.canonical)
}

/// `f(b t_i t_{i+1} t_i) - f(b t_{i+1} t_i t_{i+1}) - (x^2 - 1)(f(b t_i) - f(b t_{i+1}))`.
pub fn skein_defect(prefix: &TwinWord, i: usize) -> Result<IntPoly> {
    let n = prefix.strands();
    if i == 0 || i + 2 > n {
        return Err(Error::Index(format!(
            "skein index {i} needs 1 <= i <= {}",
            n as i64 - 2
        )));
    }
    let with = |tail: &[usize]| -> Result<IntPoly> {
        let mut letters = prefix.letters().to_vec();
        letters.extend_from_slice(tail);
        Ok(f_invariant(&TwinWord::new(letters, n)?)?.raw)
    };
    let braid_left = with(&[i, i + 1, i])?;
    let braid_right = with(&[i + 1, i, i + 1])?;
    let single_left = with(&[i])?;
    let single_right = with(&[i + 1])?;
    let x2_minus_1 = IntPoly::from_i64s(&[-1, 0, 1]);
    Ok(braid_left - braid_right - &x2_minus_1 * &(single_left - single_right))
}

/// `iota^R(a) iota^L(b)` on `a.strands + b.strands` strands: `b` sits to the right of `a`.
pub fn split_union(a: &TwinWord, b: &TwinWord) -> TwinWord {
    let shift = a.strands();
    let mut letters = a.letters().to_vec();
    letters.extend(b.letters().iter().map(|l| l + shift));
    TwinWord::new(letters, a.strands() + b.strands()).expect("shifted letters stay in range")
}
