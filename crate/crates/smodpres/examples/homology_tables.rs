//! Abelianizations next to their closed forms.
use smodpres::abelianize::{expected_h1, h1};
use smodpres::presentations::{build, GroupFamily, Variant};

fn main() {
    for v in [Variant::Boundary, Variant::Marked, Variant::Closed] {
        for n in 1..=4 {
            let f = GroupFamily::LMod(v);
            let g = h1(&build(f, Some(n), None).unwrap()).unwrap();
            println!("{f:<14} n={n}      {g:<24} table: {}", expected_h1(f, n, None).unwrap());
        }
    }
    for v in [Variant::Boundary, Variant::Marked, Variant::Closed] {
        for (n, k) in [(1, 3), (1, 4), (2, 3), (3, 4)] {
            let f = GroupFamily::SMod(v);
            let g = h1(&build(f, Some(n), Some(k)).unwrap()).unwrap();
            println!("{f:<14} n={n} k={k}  {g:<24} table: {}", expected_h1(f, n, Some(k)).unwrap());
        }
    }
}
