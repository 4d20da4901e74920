//! The binary alphabet and finite-word helpers shared by the generators and
//! the brute-force scans.

use std::fmt;

use crate::{Error, Result};

/// A letter of the two-letter alphabet, ordered `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

pub fn word_string(word: &[Letter]) -> String {
    word.iter().map(|l| l.as_char()).collect()
}

pub fn parse_word(s: &str) -> Result<Vec<Letter>> {
    s.chars()
        .map(|c| match c {
            'a' => Ok(Letter::A),
            'b' => Ok(Letter::B),
            other => Err(Error::Parse(format!("invalid letter {other:?}"))),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters_round_trip_and_order() {
        assert_eq!(word_string(&parse_word("abba").unwrap()), "abba");
        assert!(parse_word("abc").is_err());
        assert!(Letter::A < Letter::B);
        assert!(parse_word("ab").unwrap() < parse_word("b").unwrap());
    }
}
