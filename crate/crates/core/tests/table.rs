use std::time::Duration;
use vgr_core::report::{cmd_table, TableOptions, TableStatus};
use vgr_core::GenerateOptions;

/// `(k, g, λ, lower, upper)`; `None` is infinite.
type Row = (usize, usize, u64, Option<usize>, Option<usize>);

const PUBLISHED: &[Row] = &[
    (3, 3, 1, Some(6), Some(6)),
    (3, 3, 2, None, None),
    (3, 3, 3, Some(4), Some(4)),
    (3, 4, 1, Some(12), Some(12)),
    (3, 4, 2, Some(8), Some(8)),
    (3, 4, 3, Some(8), Some(8)),
    (3, 4, 4, Some(30), None),
    (3, 4, 5, None, None),
    (3, 4, 6, Some(6), Some(6)),
    (4, 3, 1, Some(9), Some(9)),
    (4, 3, 2, Some(9), Some(9)),
    (4, 3, 3, Some(7), Some(7)),
    (4, 3, 4, Some(6), Some(6)),
    (4, 3, 5, None, None),
    (4, 3, 6, Some(5), Some(5)),
];

#[test]
fn table_agrees_with_published_rows() {
    let opts = TableOptions {
        budget: Some(Duration::from_secs(10)),
        max_order: 16,
        generate: GenerateOptions { threads: 1, ..GenerateOptions::default() },
    };
    let mut rows = cmd_table(3, 3, 4, &opts).unwrap();
    rows.extend(cmd_table(4, 3, 3, &opts).unwrap());
    assert_eq!(rows.len(), PUBLISHED.len());
    for (row, &(k, g, l, lo, hi)) in rows.iter().zip(PUBLISHED) {
        assert_eq!((row.k, row.g, row.lambda), (k, g, l));
        match row.status {
            TableStatus::Exact => {
                assert_eq!(lo, hi, "{}", row.csv());
                assert_eq!(row.lb, lo, "{}", row.csv());
            }
            TableStatus::Impossible => assert_eq!(lo, None, "{}", row.csv()),
            TableStatus::Open => {
                let (Some(ours), Some(theirs)) = (row.lb, lo) else { panic!("{}", row.csv()) };
                assert!(ours <= theirs, "{}", row.csv());
            }
        }
    }
    // every published exact row of order at most 12 is settled here
    for (row, &(_, _, _, lo, hi)) in rows.iter().zip(PUBLISHED) {
        if lo == hi && lo.is_none_or(|n| n <= 12) {
            assert_ne!(row.status, TableStatus::Open, "{}", row.csv());
        }
    }
}
