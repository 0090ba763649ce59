//! Group words over the generators 1, 2, 3 (complex reflections) and J.
//!
//! Grammar, with whitespace allowed between tokens:
//!
//! ```text
//! word    := item*
//! item    := atom postfix*
//! atom    := '1' | '2' | '3' | 'J' | 'P' | 'Q' | '(' word ')'
//! postfix := '\'' | '^' '-'? digit+
//! ```
//!
//! `P` expands to `1 J` and `Q` to `1 2 3` before any postfix applies.
//! Exponent digits are read greedily, so `(1 2)^31` is a 31st power; write
//! `(1 2)^3 1` for a cube followed by `1`.

use std::fmt;

use crate::error::{Error, Result};

const MAX_EXPONENT: i64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    R1,
    R2,
    R3,
    J,
}

impl Generator {
    pub fn symbol(&self) -> char {
        match self {
            Generator::R1 => '1',
            Generator::R2 => '2',
            Generator::R3 => '3',
            Generator::J => 'J',
        }
    }

    /// Index of a reflection generator, `None` for J.
    pub fn reflection_index(&self) -> Option<usize> {
        match self {
            Generator::R1 => Some(0),
            Generator::R2 => Some(1),
            Generator::R3 => Some(2),
            Generator::J => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverted: bool,
}

impl Letter {
    pub fn inverse(&self) -> Letter {
        Letter { generator: self.generator, inverted: !self.inverted }
    }
}

/// Which generators a group has: sporadic groups carry J, Thompson groups
/// do not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Sporadic,
    Thompson,
}

/// A word, evaluated as the left-to-right product of its letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word { letters }
    }

    pub fn uses_j(&self) -> bool {
        self.letters.iter().any(|l| l.generator == Generator::J)
    }

    /// Copy with the letter at `index` removed.
    pub fn without_letter(&self, index: usize) -> Word {
        let mut letters = self.letters.clone();
        letters.remove(index);
        Word { letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.generator.symbol())?;
            if l.inverted {
                f.write_str("'")?;
            }
        }
        Ok(())
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    kind: GroupKind,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, pos: usize, message: impl Into<String>) -> Error {
        Error::SyntaxError { pos, message: message.into() }
    }

    fn letter(g: Generator) -> Letter {
        Letter { generator: g, inverted: false }
    }

    fn sequence(&mut self, open: Option<usize>) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let start = self.pos;
            let atom: Vec<Letter> = match self.peek() {
                None => {
                    return match open {
                        Some(p) => Err(self.error(p, "unclosed parenthesis")),
                        None => Ok(out),
                    }
                }
                Some(')') => {
                    return match open {
                        Some(_) => Ok(out),
                        None => Err(self.error(start, "unmatched ')'")),
                    }
                }
                Some('(') => {
                    self.pos += 1;
                    let inner = self.sequence(Some(start))?;
                    self.pos += 1; // the closing parenthesis
                    inner
                }
                Some(c @ ('1' | '2' | '3')) => {
                    self.pos += 1;
                    let g = [Generator::R1, Generator::R2, Generator::R3][(c as u8 - b'1') as usize];
                    vec![Self::letter(g)]
                }
                Some(c @ ('J' | 'P')) => {
                    if self.kind == GroupKind::Thompson {
                        return Err(Error::MacroUnavailable { pos: start, token: c });
                    }
                    self.pos += 1;
                    if c == 'J' {
                        vec![Self::letter(Generator::J)]
                    } else {
                        vec![Self::letter(Generator::R1), Self::letter(Generator::J)]
                    }
                }
                Some('Q') => {
                    self.pos += 1;
                    vec![Self::letter(Generator::R1), Self::letter(Generator::R2), Self::letter(Generator::R3)]
                }
                Some(c) => return Err(self.error(start, format!("unexpected character '{c}'"))),
            };
            let mut word = Word { letters: atom };
            loop {
                let save = self.pos;
                self.skip_ws();
                match self.peek() {
                    Some('\'') => {
                        self.pos += 1;
                        word = word.inverse();
                    }
                    Some('^') => {
                        self.pos += 1;
                        let n = self.exponent()?;
                        word = word.pow(n);
                    }
                    _ => {
                        self.pos = save;
                        break;
                    }
                }
            }
            out.extend(word.letters);
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let start = self.pos;
        let negative = self.peek() == Some('-');
        if negative {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some('0'..='9')) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.error(start, "expected an integer exponent after '^'"));
        }
        let digits: String = self.chars[digits_start..self.pos].iter().collect();
        let n: i64 = digits.parse().map_err(|_| self.error(start, "exponent out of range"))?;
        if n > MAX_EXPONENT {
            return Err(self.error(start, "exponent out of range"));
        }
        Ok(if negative { -n } else { n })
    }
}

/// Parse a word for a group of the given kind. Positions in errors are
/// character offsets.
pub fn parse_word(text: &str, kind: GroupKind) -> Result<Word> {
    let mut parser = Parser { chars: text.chars().collect(), pos: 0, kind };
    let letters = parser.sequence(None)?;
    Ok(Word { letters })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(g: Generator, inverted: bool) -> Letter {
        Letter { generator: g, inverted }
    }

    #[test]
    fn plain_letters_with_inverse() {
        let w = parse_word("1 3' 2 3", GroupKind::Sporadic).unwrap();
        use Generator::*;
        assert_eq!(w.letters, vec![l(R1, false), l(R3, true), l(R2, false), l(R3, false)]);
        assert_eq!(w.to_string(), "1 3' 2 3");
    }

    #[test]
    fn zero_power_is_identity() {
        assert!(parse_word("(1 2)^0", GroupKind::Sporadic).unwrap().is_empty());
        assert!(parse_word("", GroupKind::Thompson).unwrap().is_empty());
    }

    #[test]
    fn macro_expansion() {
        use Generator::*;
        let w = parse_word("P^2", GroupKind::Sporadic).unwrap();
        assert_eq!(w.letters, vec![l(R1, false), l(J, false), l(R1, false), l(J, false)]);
        let q = parse_word("Q'", GroupKind::Thompson).unwrap();
        assert_eq!(q.letters, vec![l(R3, true), l(R2, true), l(R1, true)]);
    }

    #[test]
    fn negative_exponent_and_spacing() {
        let a = parse_word("(1 2)^-1", GroupKind::Sporadic).unwrap();
        let b = parse_word("2'1'", GroupKind::Sporadic).unwrap();
        assert_eq!(a, b);
        let c = parse_word("(12)^3 1", GroupKind::Sporadic).unwrap();
        assert_eq!(c.len(), 7);
        let d = parse_word("1^-1", GroupKind::Sporadic).unwrap();
        assert_eq!(d, parse_word("1'", GroupKind::Sporadic).unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_word("1 J", GroupKind::Thompson),
            Err(Error::MacroUnavailable { pos: 2, token: 'J' })
        );
        assert!(matches!(parse_word("P", GroupKind::Thompson), Err(Error::MacroUnavailable { pos: 0, .. })));
        assert!(matches!(parse_word("1 (2 3", GroupKind::Sporadic), Err(Error::SyntaxError { pos: 2, .. })));
        assert!(matches!(parse_word("1 x", GroupKind::Sporadic), Err(Error::SyntaxError { pos: 2, .. })));
        assert!(matches!(parse_word("(12)^", GroupKind::Sporadic), Err(Error::SyntaxError { pos: 5, .. })));
        assert!(matches!(parse_word("12)", GroupKind::Sporadic), Err(Error::SyntaxError { pos: 2, .. })));
    }

    #[test]
    fn inverse_reverses() {
        let w = parse_word("1 2 3'", GroupKind::Sporadic).unwrap();
        assert_eq!(w.inverse().to_string(), "3 2' 1'");
        assert_eq!(w.inverse().inverse(), w);
    }
}
