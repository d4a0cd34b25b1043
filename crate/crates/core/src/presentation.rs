//! Artin group presentations over positive words.

use std::fmt;

/// A positive word in the generators, stored letter by letter.
pub type Word = Vec<String>;

/// `Π(a, b : m)`: the alternating word `a b a ...` of length `m`.
pub fn alternating_word(a: &str, b: &str, m: u32) -> Word {
    (0..m)
        .map(|k| if k % 2 == 0 { a } else { b }.to_owned())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs.join(" "), self.rhs.join(" "))
    }
}

impl fmt::Display for Presentation {
    /// `< a b c | a b a = b a b, ... >`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} |", self.generators.join(" "))?;
        for (k, r) in self.relations.iter().enumerate() {
            let sep = if k == 0 { " " } else { ", " };
            write!(f, "{sep}{r}")?;
        }
        write!(f, " >")
    }
}
