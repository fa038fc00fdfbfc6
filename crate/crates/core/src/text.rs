//! Input sequences over integer alphabets.
//!
//! Symbols are rank-compressed on construction: the `k`-th smallest distinct
//! input symbol becomes code `k`. Rank compression preserves both the
//! lexicographic order of substrings and Hamming distances, so every algorithm
//! downstream can assume codes in `0..alphabet_size`.

use std::collections::BTreeMap;

/// Where a text came from.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Origin {
    #[default]
    Plain,
    FastaRecord(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    data: Vec<u32>,
    alphabet_size: usize,
    origin: Origin,
}

impl Text {
    /// Builds a text from arbitrary integer symbols.
    pub fn from_symbols<I>(symbols: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<u64>,
    {
        let raw: Vec<u64> = symbols.into_iter().map(Into::into).collect();
        let mut ranks: BTreeMap<u64, u32> = raw.iter().map(|&s| (s, 0)).collect();
        for (code, slot) in ranks.values_mut().enumerate() {
            *slot = code as u32;
        }
        let data = raw.iter().map(|s| ranks[s]).collect();
        Text {
            data,
            alphabet_size: ranks.len(),
            origin: Origin::Plain,
        }
    }

    pub fn from_bytes(bytes: &[u8]) -> Self {
        let mut present = [false; 256];
        for &b in bytes {
            present[b as usize] = true;
        }
        let mut code = [0u32; 256];
        let mut next = 0u32;
        for b in 0..256 {
            if present[b] {
                code[b] = next;
                next += 1;
            }
        }
        Text {
            data: bytes.iter().map(|&b| code[b as usize]).collect(),
            alphabet_size: next as usize,
            origin: Origin::Plain,
        }
    }

    pub fn with_origin(mut self, origin: Origin) -> Self {
        self.origin = origin;
        self
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn symbols(&self) -> &[u32] {
        &self.data
    }

    /// The same text read right to left.
    pub fn reversed(&self) -> Text {
        let mut data = self.data.clone();
        data.reverse();
        Text {
            data,
            alphabet_size: self.alphabet_size,
            origin: self.origin.clone(),
        }
    }
}

impl From<&str> for Text {
    fn from(s: &str) -> Self {
        Text::from_bytes(s.as_bytes())
    }
}

impl std::ops::Index<usize> for Text {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.data[i]
    }
}
