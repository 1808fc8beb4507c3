//! Check every relator of the closed liftable group in the punctured-sphere model.
use smodpres::presentations::{build, GroupFamily, Variant};
use smodpres::report::{verify_presentation, Engine};

fn main() {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let p = build(GroupFamily::LMod(Variant::Closed), Some(n), None).unwrap();
    let report = verify_presentation(&p, Engine::Sphere, None).unwrap();
    print!("{}", report.to_text());
    println!("{} relators, all hold: {}", report.lines.len(), report.all_ok());
}
