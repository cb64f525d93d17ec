//! Tokenization and the token-to-symbol transform.
//!
//! [`symbolize_pair`] walks the tokens of both strings in order (left string
//! first). Each token is compared with every token already seen; if the best
//! of those scores reaches the threshold the token inherits that token's
//! symbol, otherwise it gets a fresh one. Every token is registered after it
//! has been assigned, so later tokens may match it directly.

use std::fmt;

use crate::error::{Error, Result};
use crate::seqmetrics::{Element, SequenceMetric};

/// A case-folded, non-empty piece of a string between delimiters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Token(String);

impl Token {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Code points, the form character metrics consume.
    pub fn elements(&self) -> Vec<Element> {
        self.0.chars().map(Element::from).collect()
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn is_delimiter(c: char) -> bool {
    c.is_whitespace() || matches!(c, '-' | '\'' | '\u{2019}' | '/')
}

/// Splits on whitespace, hyphens, apostrophes (straight and typographic) and
/// slashes, lowercases each piece and drops empty ones.
pub fn tokenize(s: &str) -> Vec<Token> {
    s.split(is_delimiter)
        .filter(|piece| !piece.is_empty())
        .map(|piece| Token(piece.to_lowercase()))
        .collect()
}

/// Symbol ids of one string, in token order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SymbolSequence(Vec<Element>);

impl SymbolSequence {
    pub fn as_slice(&self) -> &[Element] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::ops::Deref for SymbolSequence {
    type Target = [Element];

    fn deref(&self) -> &[Element] {
        &self.0
    }
}

/// Renders id `k` as `α{k+1}`, e.g. `α1α2α3`.
impl fmt::Display for SymbolSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for id in &self.0 {
            write!(f, "\u{3b1}{}", id + 1)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct Entry {
    token: Token,
    elements: Vec<Element>,
    symbol: Element,
}

/// Tokens seen so far with the symbol each one was given.
#[derive(Clone, Debug, Default)]
pub struct SymbolTable {
    entries: Vec<Entry>,
    symbols: u32,
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of distinct symbols allocated.
    pub fn symbol_count(&self) -> usize {
        self.symbols as usize
    }

    /// Registered `(token, symbol)` pairs in registration order.
    pub fn entries(&self) -> impl Iterator<Item = (&Token, Element)> {
        self.entries.iter().map(|e| (&e.token, e.symbol))
    }

    /// Assigns a symbol to `token` and registers it.
    ///
    /// The best-scoring registered token wins, earliest on ties; it is
    /// followed only when its score reaches `epsilon`.
    pub fn assign<M>(&mut self, token: &Token, mu1: &M, epsilon: f64) -> Result<Element>
    where
        M: SequenceMetric + ?Sized,
    {
        let elements = token.elements();
        let mut best: Option<(f64, Element)> = None;
        for entry in &self.entries {
            let score = mu1.similarity(&elements, &entry.elements)?;
            if best.is_none_or(|(top, _)| score > top) {
                best = Some((score, entry.symbol));
            }
        }
        let symbol = match best {
            Some((score, symbol)) if score >= epsilon => symbol,
            _ => {
                let fresh = self.symbols;
                self.symbols += 1;
                fresh
            }
        };
        self.entries.push(Entry {
            token: token.clone(),
            elements,
            symbol,
        });
        Ok(symbol)
    }
}

/// Rewrites two token lists into symbol sequences sharing one symbol table.
///
/// `epsilon` must lie in `(0, 1]`.
pub fn symbolize_pair<M>(
    tokens1: &[Token],
    tokens2: &[Token],
    mu1: &M,
    epsilon: f64,
) -> Result<(SymbolSequence, SymbolSequence)>
where
    M: SequenceMetric + ?Sized,
{
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(Error::InvalidThreshold(epsilon));
    }
    let mut table = SymbolTable::new();
    let mut run = |tokens: &[Token]| -> Result<SymbolSequence> {
        tokens
            .iter()
            .map(|t| table.assign(t, mu1, epsilon))
            .collect::<Result<Vec<_>>>()
            .map(SymbolSequence)
    };
    let left = run(tokens1)?;
    let right = run(tokens2)?;
    Ok((left, right))
}
