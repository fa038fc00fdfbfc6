//! Counters under stairs updates of one fixed width and interval increments.
//!
//! An increasing stairs update on `[a, b]` adds `1` to the first `p`
//! counters, `2` to the next `p`, and so on up to `b`; a decreasing one is
//! its mirror image with the lowest step at `b`. Updates are recorded in
//! O(1) and all counters are reported together in one sweep per side.
//!
//! Ranges are 0-based and inclusive.

use crate::error::{Error, Result};

const NIL: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StairsUpdate {
    Increasing { a: usize, b: usize, sign: i64 },
    Decreasing { a: usize, b: usize, sign: i64 },
    Interval { a: usize, b: usize, x: i64 },
}

/// Stairs recorded on one side: the sign added to the remainder class of
/// the first step at the entry position, and the total to retire at the
/// exit position.
#[derive(Debug, Clone)]
struct Side {
    start: Vec<i64>,
    exit_head: Vec<u32>,
    /// `(next, contribution to retire, remainder class, sign)`.
    exits: Vec<(u32, i64, u32, i64)>,
}

impl Side {
    fn new(t: usize) -> Self {
        Side {
            start: vec![0; t],
            exit_head: vec![NIL; t],
            exits: Vec::new(),
        }
    }

    fn record(&mut self, entry: usize, exit: usize, steps: i64, class: usize, sign: i64) {
        self.start[entry] += sign;
        let id = self.exits.len() as u32;
        self.exits
            .push((self.exit_head[exit], sign * steps, class as u32, sign));
        self.exit_head[exit] = id;
    }

    /// Adds this side's contributions to `out`, visiting positions in
    /// `order`.
    fn sweep(&self, p: usize, order: impl Iterator<Item = usize>, out: &mut [i64]) {
        let mut remainders = vec![0i64; p];
        let mut value = 0i64;
        for i in order {
            remainders[i % p] += self.start[i];
            value += remainders[i % p];
            out[i] += value;
            let mut e = self.exit_head[i];
            while e != NIL {
                let (next, total, class, sign) = self.exits[e as usize];
                value -= total;
                remainders[class as usize] -= sign;
                e = next;
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct StairsCounters {
    t: usize,
    p: usize,
    increasing: Side,
    decreasing: Side,
    diff: Vec<i64>,
    updates: usize,
}

impl StairsCounters {
    /// `t` counters and stairs width `p`, `1 <= p <= t`.
    pub fn new(t: usize, p: usize) -> Result<Self> {
        if t == 0 || p == 0 || p > t {
            return Err(Error::BadDimensions { len: t, width: p });
        }
        Ok(StairsCounters {
            t,
            p,
            increasing: Side::new(t),
            decreasing: Side::new(t),
            diff: vec![0; t + 1],
            updates: 0,
        })
    }

    pub fn len(&self) -> usize {
        self.t
    }

    pub fn is_empty(&self) -> bool {
        self.t == 0
    }

    pub fn width(&self) -> usize {
        self.p
    }

    pub fn update_count(&self) -> usize {
        self.updates
    }

    fn check(&self, a: usize, b: usize) -> Result<()> {
        if a > b || b >= self.t {
            Err(Error::BadRange { a, b, len: self.t })
        } else {
            Ok(())
        }
    }

    pub fn apply_increasing(&mut self, a: usize, b: usize, sign: i64) -> Result<()> {
        self.check(a, b)?;
        let steps = (b - a + self.p) / self.p;
        self.increasing.record(a, b, steps as i64, a % self.p, sign);
        self.updates += 1;
        Ok(())
    }

    pub fn apply_decreasing(&mut self, a: usize, b: usize, sign: i64) -> Result<()> {
        self.check(a, b)?;
        let steps = (b - a + self.p) / self.p;
        self.decreasing.record(b, a, steps as i64, b % self.p, sign);
        self.updates += 1;
        Ok(())
    }

    pub fn apply_interval(&mut self, a: usize, b: usize, x: i64) -> Result<()> {
        self.check(a, b)?;
        self.diff[a] += x;
        self.diff[b + 1] -= x;
        self.updates += 1;
        Ok(())
    }

    pub fn apply(&mut self, update: StairsUpdate) -> Result<()> {
        match update {
            StairsUpdate::Increasing { a, b, sign } => self.apply_increasing(a, b, sign),
            StairsUpdate::Decreasing { a, b, sign } => self.apply_decreasing(a, b, sign),
            StairsUpdate::Interval { a, b, x } => self.apply_interval(a, b, x),
        }
    }

    /// Current value of every counter. Does not modify the structure.
    pub fn report_all(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.t];
        let mut run = 0;
        for (i, v) in out.iter_mut().enumerate() {
            run += self.diff[i];
            *v = run;
        }
        self.increasing.sweep(self.p, 0..self.t, &mut out);
        self.decreasing.sweep(self.p, (0..self.t).rev(), &mut out);
        out
    }
}
