use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("text is empty")]
    EmptyText,

    #[error("position {pos} out of range for text of length {n}")]
    PositionOutOfRange { pos: usize, n: usize },

    #[error("window length {m} is not valid for text of length {n}{}", if .reason.is_empty() { String::new() } else { format!(" ({})", .reason) })]
    BadWindowLength {
        m: usize,
        n: usize,
        reason: &'static str,
    },

    #[error("sort key starts at {key}, past the end of a text of length {n}")]
    OffsetPastEnd { key: usize, n: usize },

    #[error("progression starting at {start} with difference {diff} and {count} terms is not inside a single run")]
    NotARun {
        start: usize,
        diff: usize,
        count: usize,
    },

    #[error("invalid counter dimensions: {len} counters with stairs width {width}")]
    BadDimensions { len: usize, width: usize },

    #[error("range [{a}, {b}] is not valid for {len} counters")]
    BadRange { a: usize, b: usize, len: usize },

    #[error("input of length {n} exceeds the oracle limit of {max}")]
    InputTooLarge { n: usize, max: usize },
}

impl Error {
    pub(crate) fn window(m: usize, n: usize) -> Self {
        Error::BadWindowLength { m, n, reason: "" }
    }
}
