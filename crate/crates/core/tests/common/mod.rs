//! Text suites shared by the integration tests.
#![allow(dead_code)]

use onemap::Text;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const ALPHABETS: [u64; 3] = [2, 4, 26];
pub const LENGTHS: [usize; 3] = [50, 200, 1000];

pub fn ceil_sqrt(n: usize) -> usize {
    (1..).find(|r| r * r >= n).unwrap()
}

pub fn random_text(rng: &mut ChaCha8Rng, n: usize, sigma: u64) -> Text {
    Text::from_symbols((0..n).map(|_| rng.gen_range(0..sigma)))
}

/// `count` random texts for every alphabet size and length pair.
pub fn random_suite(count: usize, max_n: usize) -> Vec<(u64, usize, Vec<Text>)> {
    let mut out = Vec::new();
    for (a, &sigma) in ALPHABETS.iter().enumerate() {
        for &n in LENGTHS.iter().filter(|&&n| n <= max_n) {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 * a as u64 + n as u64);
            let texts = (0..count)
                .map(|_| random_text(&mut rng, n, sigma))
                .collect();
            out.push((sigma, n, texts));
        }
    }
    out
}

/// Window lengths tried on a text of length `n`.
pub fn window_lengths(n: usize) -> Vec<usize> {
    let mut ms = vec![1, 2, 3, 8, ceil_sqrt(n), n.div_ceil(2)];
    ms.sort_unstable();
    ms.dedup();
    ms
}

pub fn fibonacci(n: usize) -> Text {
    let (mut a, mut b) = (b"a".to_vec(), b"ab".to_vec());
    while b.len() < n {
        let next = [b.as_slice(), a.as_slice()].concat();
        a = std::mem::replace(&mut b, next);
    }
    Text::from_bytes(&b[..n])
}

fn repeat(unit: &str, n: usize) -> Vec<u8> {
    unit.bytes().cycle().take(n).collect()
}

/// Highly periodic texts, with and without planted mismatches.
pub fn adversarial(n: usize, seed: u64) -> Vec<(String, Text)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![
        ("a^n".to_string(), Text::from_bytes(&repeat("a", n))),
        ("(ab)^n".to_string(), Text::from_bytes(&repeat("ab", n))),
        ("(abc)^n".to_string(), Text::from_bytes(&repeat("abc", n))),
        ("fibonacci".to_string(), fibonacci(n)),
    ];
    for unit in ["a", "ab", "abc", "aab"] {
        for planted in 1..=2 {
            let mut t = repeat(unit, n);
            for _ in 0..planted {
                let at = rng.gen_range(0..n);
                t[at] = b'x';
            }
            out.push((
                format!("({unit})^n with {planted} planted"),
                Text::from_bytes(&t),
            ));
        }
    }
    let mut fib = fibonacci(n).symbols().to_vec();
    fib[rng.gen_range(0..n)] = 7;
    out.push((
        "fibonacci with 1 planted".to_string(),
        Text::from_symbols(fib),
    ));
    out
}

/// `(position, counts)` pairs that differ, for error messages.
pub fn first_difference(a: &[u64], b: &[u64]) -> Option<(usize, u64, u64)> {
    a.iter()
        .zip(b)
        .enumerate()
        .find(|(_, (x, y))| x != y)
        .map(|(i, (&x, &y))| (i, x, y))
}
