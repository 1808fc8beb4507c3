//! Parity classes of generators and words.
use smodpres::perm::{is_liftable, psi};
use smodpres::words::parse_word;

fn main() {
    let n = 2;
    for s in ["s[1]", "s[2] * s[1]", "h[1]", "h[1] * h[2]", "t[2,5]", "a[1]", "b[2]", "r", "r * h[3]"] {
        let w = parse_word(s).unwrap();
        println!("{s:<14} {:<13} {}", is_liftable(&w, n).unwrap().to_string(), psi(&w, 2 * n + 2).unwrap());
    }
}
