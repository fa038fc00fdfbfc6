mod common;

use common::*;
use onemap::oracle::{naive_mappability, OracleConfig};
use onemap::periodic::SingleWordCounter;
use onemap::{count_one_ham_single_word, Text};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn single_word_counts_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for sigma in [2, 4] {
        for n in [30, 120, 500] {
            let t = random_text(&mut rng, n, sigma);
            for m in [2, 4, 9, 16] {
                let want = naive_mappability(&t, m, &OracleConfig::default())
                    .unwrap()
                    .totals();
                let counter = SingleWordCounter::new(&t, m).unwrap();
                for (i, &w) in want.iter().enumerate() {
                    assert_eq!(
                        counter.count(i).unwrap(),
                        w,
                        "sigma={sigma} n={n} m={m} i={i}"
                    );
                }
            }
        }
    }
}

#[test]
fn single_word_on_periodic_texts() {
    for (label, t) in adversarial(120, 5) {
        for m in [2, 5, 9, 16] {
            let want = naive_mappability(&t, m, &OracleConfig::default())
                .unwrap()
                .totals();
            let counter = SingleWordCounter::new(&t, m).unwrap();
            let got: Vec<u64> = (0..want.len()).map(|i| counter.count(i).unwrap()).collect();
            assert_eq!(got, want, "{label} m={m}");
        }
    }
}

#[test]
fn worked_examples() {
    // "ban" matches itself and "nan"; "ba" matches only itself.
    assert_eq!(
        count_one_ham_single_word(&Text::from("banana"), 0, 3).unwrap(),
        2
    );
    assert_eq!(
        count_one_ham_single_word(&Text::from("abab"), 1, 2).unwrap(),
        1
    );
}
