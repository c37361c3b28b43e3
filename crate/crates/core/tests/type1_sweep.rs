//! Full-rank sweep of the type-1 search: family counts per base, ranks 3..8.

use two_orbit_core::classify::enumerate_type1;
use two_orbit_core::{RootSystem, RootSystemType};

#[test]
fn family_counts_across_all_bases() {
    let mut cases: Vec<(RootSystemType, usize)> = Vec::new();
    for n in 3..=8 {
        cases.push((RootSystemType::A(n), 1));
        cases.push((RootSystemType::B(n), 3));
        cases.push((RootSystemType::C(n), 3));
        if n >= 4 {
            cases.push((RootSystemType::D(n), 0));
        }
    }
    // D3 is A3 in disguise and accordingly reproduces its one family.
    cases.push((RootSystemType::D(3), 1));
    cases.push((RootSystemType::F4, 2));
    cases.push((RootSystemType::G2, 4));
    for (rst, expected) in cases {
        let rs = RootSystem::new(rst);
        let found = enumerate_type1(&rs);
        assert_eq!(found.len(), expected, "family count for {rst:?}");
    }
}
