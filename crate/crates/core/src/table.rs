//! The doodle table: `{k}(...)` codec, embedded dataset, and verification.
//!
//! `{k}(c_1,...,c_m)` stands for `sum_j c_j x^{2(k-j+1)}`: the first number is
//! half the top degree and the coefficients run down through even powers.
//! Zero-valued entries are written as the bare token `0`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::invariant::f_invariant;
use crate::notation::parse_letters;
use crate::poly::IntPoly;
use crate::twin::TwinWord;

const EMBEDDED_TABLE: &str = include_str!("../data/doodle_table.txt");

/// One row of the doodle table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub name: String,
    pub crossings: usize,
    pub components: usize,
    pub word_text: String,
    pub encoded: String,
}

impl TableEntry {
    /// The twin word on its minimal strand count (one strand when empty).
    pub fn word(&self) -> Result<TwinWord> {
        TwinWord::minimal(parse_letters(&self.word_text)?)
    }

    pub fn value(&self) -> Result<IntPoly> {
        decode_entry(&self.encoded)
    }
}

fn format_error(position: usize, message: &str) -> Error {
    Error::Format {
        position,
        message: message.to_string(),
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(format_error(self.pos, &format!("expected '{c}'")))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        self.skip_ws();
        let digits_start = self.pos;
        let digits = self.text[self.pos..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(format_error(start, "expected an integer"));
        }
        self.pos += digits;
        let magnitude: BigInt = self.text[digits_start..self.pos]
            .parse()
            .map_err(|_| format_error(digits_start, "invalid integer"))?;
        Ok(if negative { -magnitude } else { magnitude })
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }
}

/// Decodes `{k}(c1,...,cm)` or the zero token `0`. Whitespace is ignored.
pub fn decode_entry(text: &str) -> Result<IntPoly> {
    let mut cur = Cursor { text, pos: 0 };
    if cur.text.trim() == "0" {
        return Ok(IntPoly::zero());
    }
    cur.expect('{')?;
    let k_pos = cur.pos;
    let k = cur.int()?;
    if k.is_negative() {
        return Err(format_error(k_pos, "half-degree must be nonnegative"));
    }
    let k: usize = k
        .try_into()
        .map_err(|_| format_error(k_pos, "half-degree out of range"))?;
    cur.expect('}')?;
    cur.expect('(')?;
    let mut coeffs = Vec::new();
    loop {
        coeffs.push(cur.int()?);
        if cur.eat(')') {
            break;
        }
        cur.expect(',')?;
    }
    if !cur.at_end() {
        return Err(format_error(cur.pos, "trailing characters"));
    }
    if coeffs.len() > k + 1 {
        return Err(format_error(
            k_pos,
            &format!(
                "{} coefficients do not fit below degree {}",
                coeffs.len(),
                2 * k
            ),
        ));
    }
    if coeffs[0].is_zero() {
        return Err(format_error(k_pos, "leading coefficient must be nonzero"));
    }
    let mut dense = alloc::vec![BigInt::zero(); 2 * k + 1];
    for (j, c) in coeffs.into_iter().enumerate() {
        dense[2 * (k - j)] = c;
    }
    Ok(IntPoly::new(dense))
}

/// Encodes a nonzero polynomial in `Z[x^2]`, stopping at its lowest nonzero term.
pub fn encode_entry(p: &IntPoly) -> Result<String> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if !p.is_even() {
        return Err(Error::OddTerms);
    }
    let low = p.x_valuation().unwrap_or(0);
    let k = deg / 2;
    let body: Vec<String> = (low / 2..=k)
        .rev()
        .map(|h| p.coeff(2 * h).to_string())
        .collect();
    Ok(format!("{{{k}}}({})", body.join(",")))
}

/// Like [`encode_entry`] but writes the zero polynomial as `0`.
pub fn encode_value(p: &IntPoly) -> Result<String> {
    if p.is_zero() {
        Ok("0".into())
    } else {
        encode_entry(p)
    }
}

/// Parses the `|`-separated table format; `#` starts a comment line.
pub fn parse_dataset(text: &str) -> Result<Vec<TableEntry>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Dataset {
            line: idx + 1,
            message,
        };
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        let [name, crossings, components, word, encoded] = fields[..] else {
            return Err(err(format!("expected 5 fields, found {}", fields.len())));
        };
        let number = |s: &str, what: &str| {
            s.parse::<usize>()
                .map_err(|_| err(format!("invalid {what} '{s}'")))
        };
        let entry = TableEntry {
            name: name.to_string(),
            crossings: number(crossings, "crossing count")?,
            components: number(components, "component count")?,
            word_text: word.to_string(),
            encoded: encoded.to_string(),
        };
        if entry.components == 0 {
            return Err(err("component count must be positive".into()));
        }
        entry.word().map_err(|e| err(format!("word: {e}")))?;
        entry.value().map_err(|e| err(format!("encoding: {e}")))?;
        out.push(entry);
    }
    Ok(out)
}

/// Renders entries in the format read by [`parse_dataset`].
pub fn format_dataset(entries: &[TableEntry]) -> String {
    let mut out = String::from("# name | crossings | components | twin word | encoded invariant\n");
    for e in entries {
        out.push_str(&format!(
            "{} | {} | {} | {} | {}\n",
            e.name, e.crossings, e.components, e.word_text, e.encoded
        ));
    }
    out
}

/// The embedded doodle table.
pub fn dataset() -> Vec<TableEntry> {
    parse_dataset(EMBEDDED_TABLE).expect("embedded table is well formed")
}

pub fn embedded_dataset_text() -> &'static str {
    EMBEDDED_TABLE
}

pub fn find_entry(name: &str) -> Option<TableEntry> {
    dataset().into_iter().find(|e| e.name == name)
}

/// How a computed invariant relates to the table value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatchState {
    /// `f` of the word equals the table polynomial.
    Exact,
    /// Equal after removing powers of `x^2` from both.
    UpToXPower,
    /// Equal after removing powers of `x^2` and a global sign.
    UpToSignAndXPower,
    Mismatch,
    /// The word or encoding could not be read.
    Invalid,
}

impl MatchState {
    pub fn is_match(self) -> bool {
        matches!(
            self,
            MatchState::Exact | MatchState::UpToXPower | MatchState::UpToSignAndXPower
        )
    }
}

impl fmt::Display for MatchState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatchState::Exact => "exact",
            MatchState::UpToXPower => "up-to-x-power",
            MatchState::UpToSignAndXPower => "up-to-sign-and-x-power",
            MatchState::Mismatch => "mismatch",
            MatchState::Invalid => "invalid",
        })
    }
}

/// Outcome of checking one table entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryReport {
    pub name: String,
    pub state: MatchState,
    /// `f_n` of the listed word.
    pub computed: IntPoly,
    pub computed_canonical: IntPoly,
    pub table_value: IntPoly,
    /// `e` with `table = +-x^e * computed`, when both are nonzero and match.
    pub relative_x_power: Option<i64>,
    pub components: usize,
    pub expected_components: usize,
    pub strands: usize,
    pub word_length: usize,
    pub error: Option<String>,
    /// A guess at the cause of a mismatch, such as a printing slip in the table.
    pub diagnosis: Option<String>,
}

impl EntryReport {
    pub fn components_match(&self) -> bool {
        self.components == self.expected_components
    }

    pub fn passed(&self) -> bool {
        self.state.is_match() && self.components_match()
    }
}

/// Computes `f` of the entry's word and compares it with the listed polynomial.
pub fn verify_entry(entry: &TableEntry) -> EntryReport {
    let mut report = EntryReport {
        name: entry.name.clone(),
        state: MatchState::Invalid,
        computed: IntPoly::zero(),
        computed_canonical: IntPoly::zero(),
        table_value: IntPoly::zero(),
        relative_x_power: None,
        components: 0,
        expected_components: entry.components,
        strands: 0,
        word_length: 0,
        error: None,
        diagnosis: None,
    };
    let parsed = entry.word().and_then(|w| {
        let value = entry.value()?;
        let f = f_invariant(&w)?;
        Ok((w, value, f))
    });
    let (word, table_value, f) = match parsed {
        Ok(v) => v,
        Err(e) => {
            report.error = Some(e.to_string());
            return report;
        }
    };
    report.components = word.component_count();
    report.strands = word.strands();
    report.word_length = word.len();
    report.state = compare(&f.raw, &table_value);
    if report.state == MatchState::Mismatch {
        report.diagnosis = diagnose(&f.raw, &table_value);
    }
    if report.state.is_match() && !f.raw.is_zero() {
        let (a, b) = (
            f.raw.x_valuation().unwrap_or(0),
            table_value.x_valuation().unwrap_or(0),
        );
        report.relative_x_power = Some(b as i64 - a as i64);
    }
    report.computed = f.raw;
    report.computed_canonical = f.canonical;
    report.table_value = table_value;
    report
}

fn compare(computed: &IntPoly, table: &IntPoly) -> MatchState {
    if computed == table {
        return MatchState::Exact;
    }
    match (computed.x2_valuation(), table.x2_valuation()) {
        (Ok((_, a)), Ok((_, b))) if a == b => MatchState::UpToXPower,
        (Ok((_, a)), Ok((_, b))) if a == -b.clone() => MatchState::UpToSignAndXPower,
        _ => MatchState::Mismatch,
    }
}

/// Recognizes two printing slips: a coefficient list with its zeros left out,
/// and a single wrong coefficient.
pub fn diagnose(computed: &IntPoly, table: &IntPoly) -> Option<String> {
    if computed.is_zero() || table.is_zero() {
        return None;
    }
    let nonzero = |p: &IntPoly| -> Vec<BigInt> {
        p.coeffs()
            .iter()
            .rev()
            .filter(|c| !c.is_zero())
            .cloned()
            .collect()
    };
    if computed.degree() == table.degree() && nonzero(computed) == nonzero(table) {
        return Some("same nonzero coefficients; the table list omits the zero ones".to_string());
    }
    let diff = computed - table;
    if diff.coeffs().iter().filter(|c| !c.is_zero()).count() == 1 {
        let d = diff.x_valuation().unwrap_or(0);
        return Some(format!(
            "differs only at x^{d}: computed {}, table {}",
            computed.coeff(d),
            table.coeff(d)
        ));
    }
    None
}

pub fn verify_all() -> Vec<EntryReport> {
    dataset().iter().map(verify_entry).collect()
}

/// `(t_1 t_2)^n` on three strands, whose closure is `B_n`.
pub fn family_b(n: usize) -> TwinWord {
    TwinWord::new([1, 2].repeat(n), 3).expect("letters 1, 2 live on three strands")
}

/// `(t_1 (t_2 ... t_{r+1}) t_{r+2} (t_{r+1} ... t_2))^n` on `r + 3` strands.
pub fn family_c(r: usize, n: usize) -> TwinWord {
    let block: Vec<usize> = core::iter::once(1)
        .chain(2..=r + 1)
        .chain(core::iter::once(r + 2))
        .chain((2..=r + 1).rev())
        .collect();
    TwinWord::new(block.repeat(n), r + 3).expect("block letters stay below r + 3")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn decode_examples() {
        let expected = IntPoly::x_pow(14) + IntPoly::monomial(2, 12)
            - IntPoly::x_pow(10)
            - IntPoly::monomial(2, 8)
            + IntPoly::x_pow(6);
        assert_eq!(decode_entry("{7}(1,2,-1,-2,1)").unwrap(), expected);
        assert_eq!(decode_entry("{2}(1,-2,1)").unwrap(), p(&[1, 0, -2, 0, 1]));
        assert_eq!(decode_entry("{0}(1)").unwrap(), IntPoly::one());
        assert_eq!(decode_entry("0").unwrap(), IntPoly::zero());
        assert_eq!(
            decode_entry(" {9}(1,- 2,1) ").unwrap(),
            decode_entry("{9}(1,-2,1)").unwrap()
        );
    }

    #[test]
    fn decode_errors() {
        assert!(matches!(
            decode_entry("{2}(1,-2"),
            Err(Error::Format { position: 8, .. })
        ));
        assert!(matches!(
            decode_entry("2}(1)"),
            Err(Error::Format { position: 0, .. })
        ));
        assert!(matches!(
            decode_entry("{1}(1,2,3)"),
            Err(Error::Format { .. })
        ));
        assert!(matches!(decode_entry("{-1}(1)"), Err(Error::Format { .. })));
        assert!(matches!(
            decode_entry("{1}(1,)"),
            Err(Error::Format { position: 6, .. })
        ));
        assert!(matches!(
            decode_entry("{1}(1) x"),
            Err(Error::Format { position: 7, .. })
        ));
        assert!(matches!(
            decode_entry("{1}(0,1)"),
            Err(Error::Format { .. })
        ));
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode_entry(&p(&[1, 0, -2, 0, 1])).unwrap(), "{2}(1,-2,1)");
        assert_eq!(encode_entry(&IntPoly::one()).unwrap(), "{0}(1)");
        assert_eq!(
            encode_entry(&p(&[0, 0, 4, 0, -4, 0, 1])).unwrap(),
            "{3}(1,-4,4)"
        );
        assert_eq!(encode_entry(&p(&[0, 1])), Err(Error::OddTerms));
        assert_eq!(encode_entry(&IntPoly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(encode_value(&IntPoly::zero()).unwrap(), "0");
        // interior zeros are kept
        assert_eq!(encode_entry(&p(&[4, 0, 0, 0, 1])).unwrap(), "{2}(1,0,4)");
    }

    #[test]
    fn dataset_contents() {
        let d = dataset();
        assert_eq!(d.len(), 37);
        assert_eq!(d.iter().filter(|e| e.components == 1).count(), 25);
        let find = |n: &str| d.iter().find(|e| e.name == n).unwrap().clone();
        let b = find("6^3");
        assert_eq!((b.crossings, b.components), (6, 3));
        assert_eq!(b.word().unwrap(), family_b(3));
        assert_eq!(b.value().unwrap(), p(&[1, 0, -2, 0, 1]));
        let poppy = find("8^1");
        assert_eq!(poppy.word().unwrap(), family_b(4));
        assert_eq!(poppy.encoded, "{3}(1,-4,4)");
        let z = find("10^2");
        assert_eq!(z.word_text, "(12)^2 3 2 1 3 2 3");
        assert!(z.value().unwrap().is_zero());
        let mut names: Vec<_> = d.iter().map(|e| e.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), d.len());
    }

    #[test]
    fn dataset_round_trips() {
        let d = dataset();
        for e in &d {
            let v = e.value().unwrap();
            assert_eq!(
                decode_entry(&encode_value(&v).unwrap()).unwrap(),
                v,
                "{}",
                e.name
            );
        }
        assert_eq!(parse_dataset(&format_dataset(&d)).unwrap(), d);
    }

    #[test]
    fn dataset_parse_errors() {
        assert!(matches!(
            parse_dataset("a | 1 | 1 | 12"),
            Err(Error::Dataset { line: 1, .. })
        ));
        assert!(matches!(
            parse_dataset("# c\na | x | 1 | 12 | 0"),
            Err(Error::Dataset { line: 2, .. })
        ));
        assert!(parse_dataset("a | 1 | 1 | (12 | 0").is_err());
        assert!(parse_dataset("a | 1 | 1 | 12 | {1}(").is_err());
        assert!(parse_dataset("a | 1 | 0 | 12 | 0").is_err());
    }

    #[test]
    fn borromean_entry_verifies() {
        let r = verify_entry(&find_entry("6^3").unwrap());
        assert_eq!(r.state, MatchState::Exact);
        assert_eq!(r.relative_x_power, Some(0));
        assert!(r.components_match());
        assert!(r.passed());
    }

    #[test]
    fn zero_entries_compute_to_zero() {
        for name in ["10^2", "18^2", "12^4a", "12^4b", "20^4", "16^5"] {
            let r = verify_entry(&find_entry(name).unwrap());
            assert!(r.computed.is_zero(), "{name}");
            assert_eq!(r.state, MatchState::Exact, "{name}");
        }
    }

    #[test]
    fn comparison_states() {
        let a = p(&[1, 0, -2, 0, 1]);
        assert_eq!(compare(&a, &a), MatchState::Exact);
        assert_eq!(compare(&a, &a.shift(2)), MatchState::UpToXPower);
        assert_eq!(compare(&a, &-a.shift(4)), MatchState::UpToSignAndXPower);
        assert_eq!(compare(&a, &IntPoly::one()), MatchState::Mismatch);
        assert_eq!(compare(&IntPoly::zero(), &a), MatchState::Mismatch);
        let bad = TableEntry {
            name: "bad".into(),
            crossings: 1,
            components: 1,
            word_text: "(1".into(),
            encoded: "0".into(),
        };
        let r = verify_entry(&bad);
        assert_eq!(r.state, MatchState::Invalid);
        assert!(r.error.is_some());
    }

    #[test]
    fn diagnosis_of_printing_slips() {
        let computed = p(&[0, 0, 0, 0, 1, 0, 0, 0, -4, 0, 0, 0, 4]);
        let printed = decode_entry("{6}(4,-4,1)").unwrap();
        assert!(diagnose(&computed, &printed).unwrap().contains("omits"));
        let off = p(&[0, 0, 1, 0, -20]);
        let msg = diagnose(&p(&[0, 0, 1, 0, -2]), &off).unwrap();
        assert_eq!(msg, "differs only at x^4: computed -2, table -20");
        assert_eq!(diagnose(&p(&[1, 0, 1]), &p(&[2, 0, 3])), None);
        assert_eq!(diagnose(&IntPoly::zero(), &off), None);
    }

    #[test]
    fn families() {
        assert_eq!(family_b(3).letters(), &[1, 2, 1, 2, 1, 2]);
        let c = family_c(1, 3);
        assert_eq!(c.letters(), [1, 2, 3, 2].repeat(3).as_slice());
        assert_eq!(c.strands(), 4);
        let c = family_c(2, 4);
        assert_eq!(c.letters(), [1, 2, 3, 4, 3, 2].repeat(4).as_slice());
        assert_eq!(c.strands(), 5);
        for n in 1..10 {
            let expected = if n % 3 == 0 { 3 } else { 1 };
            assert_eq!(family_b(n).component_count(), expected, "n = {n}");
        }
    }
}
