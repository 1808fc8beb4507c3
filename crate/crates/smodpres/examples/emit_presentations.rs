//! Print a few presentations in each output format.
use smodpres::presentations::{build, GroupFamily, Variant};

fn main() {
    let p = build(GroupFamily::LMod(Variant::Boundary), Some(1), None).unwrap();
    println!("# text\n{}", p.to_text());
    let q = build(GroupFamily::PMod, Some(4), None).unwrap();
    println!("# json\n{}\n", q.to_json());
    let s = build(GroupFamily::SMod(Variant::Marked), Some(1), Some(3)).unwrap();
    println!("# algebra\n{}", s.to_algebra());
}
