//! Run the word identities used in the derivations, grouped by family name.
use std::collections::BTreeMap;

use smodpres::presentations::lemma_suite;
use smodpres::sphere::equal_in_mod;

fn main() {
    let n = 2;
    let mut tally: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for pair in lemma_suite(n) {
        let family = pair.name.split('[').next().unwrap().to_string();
        let ok = equal_in_mod(&pair.left, &pair.right, 2 * n + 2).unwrap();
        let e = tally.entry(family).or_default();
        e.0 += ok as usize;
        e.1 += 1;
    }
    for (family, (ok, total)) in tally {
        println!("{family:<28} {ok}/{total}");
    }
}
