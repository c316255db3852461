//! Text form of words.
//!
//! Grammar: whitespace-separated generator tokens, each a name optionally
//! followed by `^<integer>`. A name whose first letter is uppercased stands
//! for the inverse of the lowercase generator (`A1` is `a1^-1`) unless the
//! uppercase name is itself a generator. `[u,v]` expands to `u v u^-1 v^-1`
//! and `(w)^k` to the `k`-th power; both nest, and any item may carry a
//! power. The token `1` is the identity.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::word::{commutator, Alphabet, Letter, Word};
use crate::{Error, Result};

pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, alphabet };
    let w = p.sequence()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected character"));
    }
    Ok(w)
}

/// Renders a word; runs of one letter are written as powers. The identity
/// renders as `1`.
pub fn render_word(word: &Word, alphabet: &Alphabet) -> String {
    render_letters(word.letters(), alphabet)
}

pub fn render_letters(letters: &[Letter], alphabet: &Alphabet) -> String {
    if letters.is_empty() {
        return "1".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut j = i + 1;
        while j < letters.len() && letters[j] == l {
            j += 1;
        }
        let k = (j - i) as i64 * l.sign();
        let name = alphabet.name(l.gen());
        parts.push(if k == 1 { name.to_string() } else { alloc::format!("{name}^{k}") });
        i = j;
    }
    parts.join(" ")
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn sequence(&mut self) -> Result<Word> {
        let mut out = Word::identity();
        while let Some(c) = self.peek() {
            if c == b',' || c == b']' || c == b')' {
                break;
            }
            let item = self.item()?;
            out = &out * &item;
        }
        Ok(out)
    }

    fn item(&mut self) -> Result<Word> {
        let c = self.peek().ok_or_else(|| self.err("unexpected end of input"))?;
        let base = match c {
            b'[' => {
                self.pos += 1;
                let u = self.sequence()?;
                self.expect(b',')?;
                let v = self.sequence()?;
                self.expect(b']')?;
                commutator(&u, &v)
            }
            b'(' => {
                self.pos += 1;
                let w = self.sequence()?;
                self.expect(b')')?;
                w
            }
            b'1' => {
                self.pos += 1;
                if self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric()) {
                    return Err(self.err("generator names must start with a letter"));
                }
                Word::identity()
            }
            c if c.is_ascii_alphabetic() => self.name()?,
            _ => return Err(self.err("expected a generator, `[` or `(`")),
        };
        // powers bind to the item directly, with no whitespace before `^`
        if self.src.get(self.pos) == Some(&b'^') {
            self.pos += 1;
            let k = self.integer()?;
            Ok(base.pow(k))
        } else {
            Ok(base)
        }
    }

    fn name(&mut self) -> Result<Word> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        if let Some(g) = self.alphabet.index_of(name) {
            return Ok(Word::generator(g));
        }
        let mut chars = name.chars();
        let first = chars.next().expect("nonempty name");
        if first.is_ascii_uppercase() {
            let lower: String = core::iter::once(first.to_ascii_lowercase()).chain(chars).collect();
            if let Some(g) = self.alphabet.index_of(&lower) {
                return Ok(Word::letter(Letter::neg(g)));
            }
        }
        Err(Error::UnknownGenerator(name.to_string()))
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') || self.src.get(self.pos) == Some(&b'+') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(self.err("expected an integer exponent"));
        }
        let s = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        s.parse::<i64>().map_err(|_| self.err("exponent out of range"))
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&alloc::format!("expected `{}`", c as char)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(["a1", "b1", "a2", "b2"]).unwrap()
    }

    #[test]
    fn plain_tokens() {
        let a = ab();
        let w = parse_word("a1 b1 a1^-1", &a).unwrap();
        assert_eq!(w.letters(), &[Letter::pos(0), Letter::pos(1), Letter::neg(0)]);
    }

    #[test]
    fn commutator_sugar() {
        let a = ab();
        let w = parse_word("[a1,b1]", &a).unwrap();
        assert_eq!(
            w.letters(),
            &[Letter::pos(0), Letter::pos(1), Letter::neg(0), Letter::neg(1)]
        );
        let nested = parse_word("[a1, [a1,b1]]", &a).unwrap();
        assert_eq!(nested.len(), 10);
    }

    #[test]
    fn reduction_and_identity() {
        let a = ab();
        assert!(parse_word("a1 a1^-1", &a).unwrap().is_identity());
        assert!(parse_word("1", &a).unwrap().is_identity());
        assert!(parse_word("", &a).unwrap().is_identity());
        assert!(parse_word("A1 a1", &a).unwrap().is_identity());
    }

    #[test]
    fn powers() {
        let a = ab();
        assert_eq!(parse_word("(a1 b1)^2", &a).unwrap().len(), 4);
        assert_eq!(parse_word("(a1 b1)^-1", &a).unwrap(), parse_word("B1 A1", &a).unwrap());
        assert_eq!(parse_word("A1^2", &a).unwrap(), parse_word("a1^-2", &a).unwrap());
        assert_eq!(parse_word("[a1,b1]^0", &a).unwrap(), Word::identity());
    }

    #[test]
    fn errors() {
        let a = ab();
        assert!(matches!(parse_word("c1", &a), Err(Error::UnknownGenerator(_))));
        assert!(matches!(parse_word("[a1 b1]", &a), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("a1^", &a), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("(a1", &a), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("a1 )", &a), Err(Error::Syntax { .. })));
    }

    #[test]
    fn render_round_trip() {
        let a = ab();
        for text in ["a1^2 b1 a2^-3", "1", "b2^-1 a1"] {
            let w = parse_word(text, &a).unwrap();
            assert_eq!(render_word(&w, &a), text);
            assert_eq!(parse_word(&render_word(&w, &a), &a).unwrap(), w);
        }
    }
}
