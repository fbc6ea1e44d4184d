//! Compact text notation for twin words.
//!
//! ```text
//! word := item*
//! item := DIGIT ['^' INT] | 't' INT ['^' INT] | '(' word ')' ['^' INT]
//! INT  := digits | '{' digits '}'
//! ```
//!
//! A bare digit `k` in `1..=9` is the generator `t_k`; `t10` spells larger
//! indices. Whitespace is ignored everywhere, so `(21)^2(23)^2 123` and
//! `( 2 1 )^{2} (2 3)^2 1 2 3` denote the same word.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::twin::TwinWord;

/// Parses the letter sequence without fixing a strand count.
pub fn parse_letters(text: &str) -> Result<Vec<usize>> {
    let mut parser = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        len: text.len(),
    };
    let letters = parser.word()?;
    parser.skip_ws();
    if let Some(&(at, c)) = parser.chars.get(parser.pos) {
        return Err(syntax(
            at,
            if c == ')' {
                "unmatched ')'".into()
            } else {
                unexpected(c)
            },
        ));
    }
    Ok(letters)
}

/// Parses a word on `max letter + 1` strands. The empty word has no such
/// default and needs [`parse_word_on`].
pub fn parse_word(text: &str) -> Result<TwinWord> {
    parse_word_on(text, None)
}

/// Parses a word, optionally overriding the strand count.
pub fn parse_word_on(text: &str, strands: Option<usize>) -> Result<TwinWord> {
    let letters = parse_letters(text)?;
    match strands {
        Some(n) => TwinWord::new(letters, n),
        None if letters.is_empty() => Err(Error::EmptyWord),
        None => TwinWord::minimal(letters),
    }
}

/// Digit form when every letter is at most 9, otherwise space-separated `t` form.
pub fn format_word(word: &TwinWord) -> String {
    format_letters(word.letters())
}

pub fn format_letters(letters: &[usize]) -> String {
    let mut out = String::new();
    if letters.iter().all(|&l| l <= 9) {
        for l in letters {
            let _ = write!(out, "{l}");
        }
    } else {
        for (k, l) in letters.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            let _ = write!(out, "t{l}");
        }
    }
    out
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

fn syntax(position: usize, message: String) -> Error {
    Error::Syntax { position, message }
}

fn unexpected(c: char) -> String {
    let mut s = String::from("unexpected character '");
    s.push(c);
    s.push('\'');
    s
}

impl Parser {
    fn skip_ws(&mut self) {
        while self
            .chars
            .get(self.pos)
            .is_some_and(|(_, c)| c.is_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<(usize, char)> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(at, _)| at)
    }

    fn word(&mut self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        while let Some((at, c)) = self.peek() {
            let item = match c {
                ')' => break,
                '(' => {
                    self.pos += 1;
                    let inner = self.word()?;
                    match self.peek() {
                        Some((_, ')')) => self.pos += 1,
                        _ => return Err(syntax(self.offset(), "expected ')'".into())),
                    }
                    inner
                }
                '1'..='9' => {
                    self.pos += 1;
                    alloc::vec![c as usize - '0' as usize]
                }
                't' | 'T' => {
                    self.pos += 1;
                    let index = self.int()?;
                    if index == 0 {
                        return Err(syntax(at, "generator indices start at 1".into()));
                    }
                    alloc::vec![index]
                }
                '0' => return Err(syntax(at, "generator indices start at 1".into())),
                other => return Err(syntax(at, unexpected(other))),
            };
            let reps = self.exponent()?;
            for _ in 0..reps {
                out.extend_from_slice(&item);
            }
        }
        Ok(out)
    }

    fn exponent(&mut self) -> Result<usize> {
        match self.peek() {
            Some((_, '^')) => {
                self.pos += 1;
                self.int()
            }
            _ => Ok(1),
        }
    }

    fn int(&mut self) -> Result<usize> {
        let braced = matches!(self.peek(), Some((_, '{')));
        if braced {
            self.pos += 1;
        }
        self.skip_ws();
        let start = self.offset();
        let mut digits = String::new();
        while let Some(&(_, c)) = self.chars.get(self.pos) {
            if !c.is_ascii_digit() {
                break;
            }
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            return Err(syntax(start, "expected an integer".into()));
        }
        let value = digits
            .parse::<usize>()
            .map_err(|_| syntax(start, "integer out of range".into()))?;
        if braced {
            match self.peek() {
                Some((_, '}')) => self.pos += 1,
                _ => return Err(syntax(self.offset(), "expected '}'".into())),
            }
        }
        Ok(value)
    }
}

impl core::str::FromStr for TwinWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

impl TwinWord {
    pub fn to_notation(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_powers_of_groups() {
        let w = parse_word("(12)^3").unwrap();
        assert_eq!(w.letters(), &[1, 2, 1, 2, 1, 2]);
        assert_eq!(w.strands(), 3);
    }

    #[test]
    fn parses_table_notation() {
        let w = parse_word("(21)^2(23)^2 123").unwrap();
        assert_eq!(w.letters(), &[2, 1, 2, 1, 2, 3, 2, 3, 1, 2, 3]);
        assert_eq!(w.strands(), 4);
        let w = parse_word("( 1  2)^{10}").unwrap();
        assert_eq!(w.len(), 20);
        let w = parse_word("((12)^2 3)^2").unwrap();
        assert_eq!(w.letters(), &[1, 2, 1, 2, 3, 1, 2, 1, 2, 3]);
        assert_eq!(parse_word("1^3 2").unwrap().letters(), &[1, 1, 1, 2]);
    }

    #[test]
    fn parses_extended_generators() {
        let w = parse_word("t10 t11").unwrap();
        assert_eq!(w.letters(), &[10, 11]);
        assert_eq!(w.strands(), 12);
        assert_eq!(parse_word("t2^2 t1").unwrap().letters(), &[2, 2, 1]);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(parse_word("(1"), Err(syntax(2, "expected ')'".into())));
        assert!(matches!(
            parse_word("12)"),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_word("1x"),
            Err(Error::Syntax { position: 1, .. })
        ));
        assert!(matches!(
            parse_word("10"),
            Err(Error::Syntax { position: 1, .. })
        ));
        assert!(matches!(
            parse_word("(12)^"),
            Err(Error::Syntax { position: 5, .. })
        ));
        assert!(matches!(
            parse_word("t"),
            Err(Error::Syntax { position: 1, .. })
        ));
        assert!(matches!(
            parse_word("t0"),
            Err(Error::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            parse_word("1^{2"),
            Err(Error::Syntax { position: 4, .. })
        ));
    }

    #[test]
    fn empty_word_needs_strands() {
        assert_eq!(parse_word(""), Err(Error::EmptyWord));
        assert_eq!(parse_word("  "), Err(Error::EmptyWord));
        let w = parse_word_on("", Some(4)).unwrap();
        assert!(w.is_empty());
        assert_eq!(w.strands(), 4);
        assert!(parse_word_on("3", Some(3)).is_err());
        assert_eq!(parse_word_on("12", Some(5)).unwrap().strands(), 5);
    }

    #[test]
    fn formatting() {
        let w = TwinWord::new(alloc::vec![1, 2, 1, 2, 1, 2], 3).unwrap();
        assert_eq!(format_word(&w), "121212");
        assert_eq!(format_word(&TwinWord::identity(3).unwrap()), "");
        assert_eq!(
            format_word(&TwinWord::new(alloc::vec![10], 11).unwrap()),
            "t10"
        );
        assert_eq!(format_letters(&[1, 12]), "t1 t12");
    }

    proptest! {
        #[test]
        fn parse_inverts_format(letters in prop::collection::vec(1usize..14, 0..20)) {
            let w = TwinWord::minimal(letters.clone()).unwrap();
            prop_assert_eq!(parse_letters(&format_word(&w)).unwrap(), letters);
        }
    }
}
