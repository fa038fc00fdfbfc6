use onemap::oracle::naive_stairs_apply;
use onemap::stairs::{StairsCounters, StairsUpdate};
use proptest::prelude::*;

fn update(t: usize) -> impl Strategy<Value = StairsUpdate> {
    (0..t, 0..t, 0..3u8, -4i64..=4).prop_map(|(x, y, kind, v)| {
        let (a, b) = (x.min(y), x.max(y));
        let sign = if v < 0 { -1 } else { 1 };
        match kind {
            0 => StairsUpdate::Increasing { a, b, sign },
            1 => StairsUpdate::Decreasing { a, b, sign },
            _ => StairsUpdate::Interval { a, b, x: v },
        }
    })
}

fn instance() -> impl Strategy<Value = (usize, usize, Vec<StairsUpdate>)> {
    (1usize..=64).prop_flat_map(|t| (Just(t), 1..=t, proptest::collection::vec(update(t), 0..50)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]
    #[test]
    fn matches_naive((t, p, updates) in instance()) {
        let mut c = StairsCounters::new(t, p).unwrap();
        for &u in &updates {
            c.apply(u).unwrap();
        }
        prop_assert_eq!(c.update_count(), updates.len());
        prop_assert_eq!(c.report_all(), naive_stairs_apply(t, p, &updates));
    }
}

#[test]
fn report_is_repeatable_between_updates() {
    let mut c = StairsCounters::new(20, 3).unwrap();
    c.apply_increasing(0, 19, 1).unwrap();
    let first = c.report_all();
    assert_eq!(first, c.report_all());
    c.apply_decreasing(5, 9, -1).unwrap();
    let want = naive_stairs_apply(
        20,
        3,
        &[
            StairsUpdate::Increasing {
                a: 0,
                b: 19,
                sign: 1,
            },
            StairsUpdate::Decreasing {
                a: 5,
                b: 9,
                sign: -1,
            },
        ],
    );
    assert_eq!(c.report_all(), want);
}
