//! Properties of the PGSolver reader and writer.

use pgame::{parse_pgsolver, write_pgsolver, FormatError};
use pgame_core::random::{Family, FamilySpec};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(Family::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn write_then_parse_is_identity(family in family(), n in 1usize..30, seed: u64) {
        let g = FamilySpec::new(family, n).with_seed(seed).generate();
        let text = write_pgsolver(&g).unwrap();
        let back = parse_pgsolver(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_pgsolver(&back).unwrap(), text);
    }

    #[test]
    fn layout_does_not_matter(n in 1usize..12, seed: u64, reverse: bool) {
        let g = FamilySpec::new(Family::Random, n).with_seed(seed).generate();
        let text = write_pgsolver(&g).unwrap();
        let mut records: Vec<&str> = text.lines().skip(1).collect();
        if reverse {
            records.reverse();
        }
        // one record per line without header, or all on one line with names
        let shuffled = if reverse {
            records.join("\n")
        } else {
            records
                .iter()
                .map(|r| format!("{} \"x\";", r.trim_end_matches(';')))
                .collect::<Vec<_>>()
                .join(" ")
        };
        prop_assert_eq!(parse_pgsolver(&shuffled).unwrap(), g);
    }

    #[test]
    fn garbage_never_panics(text in "[0-9 ;,\"a-z\n]{0,60}") {
        let _ = parse_pgsolver(&text);
    }

    #[test]
    fn dropping_a_record_is_reported(n in 2usize..12, seed: u64, drop in 0usize..12) {
        let g = FamilySpec::new(Family::Random, n).with_seed(seed).generate();
        let text = write_pgsolver(&g).unwrap();
        let drop = drop % n;
        let kept: Vec<&str> = text.lines().enumerate().filter(|(i, _)| *i != drop + 1).map(|(_, l)| l).collect();
        let result = parse_pgsolver(&kept.join("\n"));
        let reported = matches!(result, Err(FormatError::Parse { .. }));
        // dropping the last record just yields a smaller game
        prop_assert!(reported || drop == n - 1);
    }
}
