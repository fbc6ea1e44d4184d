//! Words in the twin group `T_n`.
//!
//! `T_n` is the right-angled Coxeter group on involutions `t_1, ..., t_{n-1}`
//! where `t_i` and `t_j` commute whenever `|i - j| > 1`. A [`TwinWord`] keeps
//! its strand count explicitly because the invariant depends on the ambient
//! group, not only on the letters.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A word in the generators `t_1, ..., t_{strands-1}`, letters stored as 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwinWord {
    letters: Vec<usize>,
    strands: usize,
}

impl TwinWord {
    pub fn new(letters: Vec<usize>, strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Index("a twin needs at least one strand".into()));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l >= strands) {
            return Err(Error::Index(format!(
                "generator t{bad} does not exist on {strands} strands"
            )));
        }
        Ok(TwinWord { letters, strands })
    }

    /// Word on the minimal number of strands, `max letter + 1` (one strand when empty).
    pub fn minimal(letters: Vec<usize>) -> Result<Self> {
        let strands = letters.iter().copied().max().unwrap_or(0) + 1;
        Self::new(letters, strands)
    }

    /// The identity twin on `strands` strands.
    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(Vec::new(), strands)
    }

    /// The product `t_1 t_2 ... t_{n-1}` in `T_n`.
    pub fn coxeter_element(strands: usize) -> Result<Self> {
        Self::new((1..strands).collect(), strands)
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.letters.iter().copied().max()
    }

    /// Same letters viewed on a different number of strands.
    pub fn with_strands(&self, strands: usize) -> Result<Self> {
        Self::new(self.letters.clone(), strands)
    }

    /// Concatenation; both words must live on the same number of strands.
    pub fn concat(&self, other: &TwinWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::Index(format!(
                "cannot multiply twins on {} and {} strands",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(TwinWord {
            letters,
            strands: self.strands,
        })
    }

    /// Appends a single generator.
    pub fn push(&mut self, letter: usize) -> Result<()> {
        if letter == 0 || letter >= self.strands {
            return Err(Error::Index(format!(
                "generator t{letter} does not exist on {} strands",
                self.strands
            )));
        }
        self.letters.push(letter);
        Ok(())
    }

    /// `w^k`.
    pub fn power(&self, k: usize) -> Self {
        TwinWord {
            letters: self.letters.repeat(k),
            strands: self.strands,
        }
    }

    /// Generators are involutions, so the inverse is the reversed word.
    pub fn inverse(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        TwinWord {
            letters,
            strands: self.strands,
        }
    }

    /// Free reduction using `t_i^2 = 1` and far commutation.
    ///
    /// Each incoming letter scans back through the commuting suffix of the
    /// reduced prefix and cancels against an equal letter if it meets one.
    /// The result is a reduced word for the same group element.
    pub fn reduce(&self) -> Self {
        let mut current = self.letters.clone();
        loop {
            let next = reduce_pass(&current);
            if next.len() == current.len() {
                return TwinWord {
                    letters: next,
                    strands: self.strands,
                };
            }
            current = next;
        }
    }

    /// Adds a strand on the right: `t_i -> t_i` in `T_{n+1}`.
    pub fn iota_right(&self) -> Self {
        TwinWord {
            letters: self.letters.clone(),
            strands: self.strands + 1,
        }
    }

    /// Adds a strand on the left: `t_i -> t_{i+1}` in `T_{n+1}`.
    pub fn iota_left(&self) -> Self {
        TwinWord {
            letters: self.letters.iter().map(|l| l + 1).collect(),
            strands: self.strands + 1,
        }
    }

    /// The permutation of strand positions, composing transpositions in letter order.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            for img in images.iter_mut() {
                if *img == l - 1 {
                    *img = l;
                } else if *img == l {
                    *img = l - 1;
                }
            }
        }
        Permutation { images }
    }

    /// Number of components of the closure.
    pub fn component_count(&self) -> usize {
        self.permutation().cycle_count()
    }
}

fn reduce_pass(letters: &[usize]) -> Vec<usize> {
    let mut stack: Vec<usize> = Vec::with_capacity(letters.len());
    for &a in letters {
        let mut cancel_at = None;
        for (pos, &b) in stack.iter().enumerate().rev() {
            if b == a {
                cancel_at = Some(pos);
                break;
            }
            if a.abs_diff(b) <= 1 {
                break;
            }
        }
        match cancel_at {
            Some(pos) => {
                stack.remove(pos);
            }
            None => stack.push(a),
        }
    }
    stack
}

impl fmt::Display for TwinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::format_word(self))
    }
}

/// `t_{n,i} = t_n t_{n-1} ... t_{n-i} ... t_{n-1} t_n`, a word on `n + 1` strands.
pub fn stab_word_right(n: usize, i: usize) -> Result<TwinWord> {
    if n == 0 || i >= n {
        return Err(Error::Index(format!(
            "t_{{n,i}} needs 0 <= i <= n-1, got n={n}, i={i}"
        )));
    }
    let down = (n - i..=n).rev();
    let up = n - i + 1..=n;
    Ok(TwinWord {
        letters: down.chain(up).collect(),
        strands: n + 1,
    })
}

/// `t_{1,i} = t_1 t_2 ... t_{i+1} ... t_2 t_1`, a word on `n + 1` strands.
pub fn stab_word_left(n: usize, i: usize) -> Result<TwinWord> {
    if n == 0 || i >= n {
        return Err(Error::Index(format!(
            "t_{{1,i}} needs 0 <= i <= n-1, got n={n}, i={i}"
        )));
    }
    let up = 1..=i + 1;
    let down = (1..=i).rev();
    Ok(TwinWord {
        letters: up.chain(down).collect(),
        strands: n + 1,
    })
}

/// A permutation of `0..len`, stored as the image of each point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(len: usize) -> Self {
        Permutation {
            images: (0..len).collect(),
        }
    }

    /// Transposition of the 1-based symbols `a` and `b`.
    pub fn transposition(len: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(len);
        p.images.swap(a - 1, b - 1);
        p
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of the 1-based symbol `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] + 1
    }

    pub fn fixes(&self, j: usize) -> bool {
        self.apply(j) == j
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &m)| i == m)
    }

    /// Disjoint cycles in 1-based symbols, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j + 1);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (k, s) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{s}")?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn w(letters: &[usize], strands: usize) -> TwinWord {
        TwinWord::new(letters.to_vec(), strands).unwrap()
    }

    #[test]
    fn construction_validates_letters() {
        assert!(TwinWord::new(vec![3], 3).is_err());
        assert!(TwinWord::new(vec![0], 3).is_err());
        assert!(TwinWord::new(vec![], 0).is_err());
        assert_eq!(TwinWord::minimal(vec![]).unwrap().strands(), 1);
        assert_eq!(TwinWord::minimal(vec![2, 5]).unwrap().strands(), 6);
    }

    #[test]
    fn reduction_examples() {
        assert!(w(&[1, 1], 2).reduce().is_empty());
        assert_eq!(w(&[1, 3, 1], 4).reduce().letters(), &[3]);
        assert_eq!(w(&[1, 2, 1], 3).reduce().letters(), &[1, 2, 1]);
        assert_eq!(w(&[1, 1, 2, 1], 3).reduce().letters(), &[2, 1]);
        assert_eq!(w(&[2, 1, 3, 2, 1, 3, 2], 4).reduce().len(), 7);
        assert_eq!(w(&[1, 3, 1, 3], 4).reduce().len(), 0);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(w(&[1, 2, 3], 4).inverse().letters(), &[3, 2, 1]);
        assert!(w(&[], 2).inverse().is_empty());
        assert_eq!(w(&[1, 2, 1], 3).inverse().letters(), &[1, 2, 1]);
    }

    #[test]
    fn permutation_examples() {
        assert!(w(&[1, 2, 1, 2, 1, 2], 3).permutation().is_identity());
        assert!(w(&[], 4).permutation().is_identity());
        assert_eq!(
            w(&[1], 2).permutation(),
            Permutation::transposition(2, 1, 2)
        );
        // first letter acts first
        let p = w(&[1, 2], 3).permutation();
        assert_eq!((p.apply(1), p.apply(2), p.apply(3)), (3, 1, 2));
    }

    #[test]
    fn component_examples() {
        assert_eq!(w(&[1, 2, 1, 2, 1, 2], 3).component_count(), 3);
        assert_eq!(w(&[1, 2].repeat(4), 3).component_count(), 1);
        assert_eq!(w(&[], 1).component_count(), 1);
        assert_eq!(w(&[1, 2, 3].repeat(4), 4).component_count(), 4);
    }

    #[test]
    fn inclusions() {
        let a = w(&[1, 2], 3);
        assert_eq!(a.iota_right(), w(&[1, 2], 4));
        assert_eq!(a.iota_left(), w(&[2, 3], 4));
        assert_eq!(w(&[], 1).iota_right(), w(&[], 2));
    }

    #[test]
    fn stabilization_words() {
        assert_eq!(stab_word_right(3, 1).unwrap(), w(&[3, 2, 3], 4));
        for n in 1..6 {
            assert_eq!(stab_word_right(n, 0).unwrap(), w(&[n], n + 1));
            assert_eq!(stab_word_left(n, 0).unwrap(), w(&[1], n + 1));
        }
        assert_eq!(stab_word_left(3, 1).unwrap(), w(&[1, 2, 1], 4));
        assert_eq!(
            stab_word_right(4, 3).unwrap().letters(),
            &[4, 3, 2, 1, 2, 3, 4]
        );
        assert!(stab_word_right(3, 3).is_err());
        assert!(stab_word_left(0, 0).is_err());
    }

    #[test]
    fn stabilization_word_shape() {
        for n in 1..8 {
            for i in 0..n {
                for s in [
                    stab_word_right(n, i).unwrap(),
                    stab_word_left(n, i).unwrap(),
                ] {
                    assert_eq!(s.len(), 2 * i + 1);
                    assert_eq!(s.inverse(), s);
                }
                let p = stab_word_right(n, i).unwrap().permutation();
                assert_eq!(p, Permutation::transposition(n + 1, n - i, n + 1));
            }
        }
    }

    #[test]
    fn permutation_display() {
        assert_eq!(w(&[1], 3).permutation().to_string(), "(1 2)");
        assert_eq!(w(&[], 3).permutation().to_string(), "()");
    }

    pub(crate) fn arb_word() -> impl Strategy<Value = TwinWord> {
        (2usize..8).prop_flat_map(|n| {
            prop::collection::vec(1..n, 0..16).prop_map(move |l| TwinWord::new(l, n).unwrap())
        })
    }

    fn contains_adjacent_cancellation(letters: &[usize]) -> bool {
        // a ... a with only commuting letters in between
        (0..letters.len()).any(|i| {
            (i + 1..letters.len())
                .take_while(|&j| j == i + 1 || letters[j - 1].abs_diff(letters[i]) > 1)
                .any(|j| letters[j] == letters[i])
        })
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent_and_preserves_permutation(word in arb_word()) {
            let r = word.reduce();
            prop_assert_eq!(r.reduce(), r.clone());
            prop_assert_eq!(r.permutation(), word.permutation());
            prop_assert!(r.len() <= word.len());
            prop_assert_eq!(word.len() % 2, r.len() % 2);
            prop_assert!(!contains_adjacent_cancellation(r.letters()));
        }

        #[test]
        fn word_times_inverse_reduces_to_identity(word in arb_word()) {
            prop_assert!(word.concat(&word.inverse()).unwrap().reduce().is_empty());
        }

        #[test]
        fn inverse_keeps_component_count(word in arb_word()) {
            prop_assert_eq!(word.component_count(), word.inverse().component_count());
        }

        #[test]
        fn inclusions_fix_the_new_strand(word in arb_word()) {
            let r = word.iota_right();
            prop_assert!(r.permutation().fixes(r.strands()));
            prop_assert!(word.iota_left().permutation().fixes(1));
            prop_assert_eq!(r.component_count(), word.component_count() + 1);
        }
    }
}
