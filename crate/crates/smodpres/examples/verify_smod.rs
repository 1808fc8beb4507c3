//! Lift the relators of the closed superelliptic group to the cover and read off
//! the deck exponent of each.
use smodpres::cover::build_cover;
use smodpres::presentations::{smod_presentation, Variant};

fn main() {
    let (n, k) = (2, 3);
    let model = build_cover(n, k, Variant::Closed).unwrap();
    let p = smod_presentation(Variant::Closed, n, k).unwrap();
    for r in &p.relators {
        let c = model.verify_smod_relator(r).unwrap();
        if c.exponent != Some(0) {
            println!("{:<24} {} exponent={:?}", r.tag.to_string(), c.verdict, c.exponent);
        }
    }
    let bad = p.relators.iter().filter(|r| {
        model.verify_smod_relator(r).map(|c| c.verdict.to_string() != "holds").unwrap_or(true)
    });
    println!("{} of {} relators fail", bad.count(), p.relators.len());
}
