//! Structural checks: permutation quotient, central twist, generation.
use smodpres::consistency::{check_central_twist, check_generation, check_psi_surjectivity};
use smodpres::presentations::{GroupFamily, Variant};

fn main() {
    let n = 2;
    let mut reports = vec![
        check_psi_surjectivity(n, Variant::Closed).unwrap(),
        check_psi_surjectivity(n, Variant::Marked).unwrap(),
        check_central_twist(n, 4).unwrap(),
    ];
    for v in [Variant::Boundary, Variant::Marked, Variant::Closed] {
        reports.push(check_generation(GroupFamily::LMod(v), n, None).unwrap());
        reports.push(check_generation(GroupFamily::SMod(v), n, Some(3)).unwrap());
    }
    for r in reports {
        println!("{}", r.to_line());
    }
}
