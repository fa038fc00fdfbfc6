mod common;

use common::*;
use onemap::large_m::{batch_l_occurrence_counts, one_mappability_large_m, WindowBatch};
use onemap::oracle::{naive_mappability, OracleConfig};
use onemap::Text;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Windows within distance one of the window at `w` whose mismatch, if any,
/// lies after the first `prefix` symbols.
fn naive_l(text: &Text, w: usize, m: usize, prefix: usize) -> u64 {
    let s = text.symbols();
    (0..=s.len() - m)
        .filter(|&j| {
            let diff: Vec<usize> = (0..m).filter(|&k| s[w + k] != s[j + k]).collect();
            diff.len() <= 1 && diff.iter().all(|&k| k >= prefix)
        })
        .count() as u64
}

fn check_batches(text: &Text, m: usize) {
    for batch in WindowBatch::tiling(text.len(), m) {
        let got = batch_l_occurrence_counts(text, &batch, m).unwrap();
        let (lo, hi) = batch.t_range();
        let want: Vec<u64> = (lo..=hi)
            .map(|t| naive_l(text, batch.window(t), m, t + batch.q))
            .collect();
        assert_eq!(got, want, "m={m} batch={batch:?}");
    }
}

#[test]
fn l_occurrences_match_the_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..60 {
        let n = 30 + (rand::Rng::gen_range(&mut rng, 0..270));
        let t = random_text(&mut rng, n, 2);
        for m in [8, 9, 16, 31] {
            if m <= n {
                check_batches(&t, m);
            }
        }
    }
}

#[test]
fn l_occurrences_on_periodic_anchors() {
    for n in [60, 150] {
        for (_, t) in adversarial(n, 3) {
            for m in [9, 12, 24, 33] {
                check_batches(&t, m);
            }
        }
        let abc = Text::from("abc".repeat(n / 3).as_str());
        check_batches(&abc, 12);
    }
}

#[test]
fn totals_match_oracle_on_mid_lengths() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for sigma in [2, 4] {
        for _ in 0..30 {
            let t = random_text(&mut rng, 400, sigma);
            for m in [8, 20, 57, 200] {
                let got = one_mappability_large_m(&t, m).unwrap();
                let want = naive_mappability(&t, m, &OracleConfig::default()).unwrap();
                assert_eq!(got, want, "sigma={sigma} m={m}");
            }
        }
    }
}
