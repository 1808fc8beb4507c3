//! Homology of the balanced superelliptic cover: the deck matrix and a few lifts.
use smodpres::cover::build_cover;
use smodpres::presentations::Variant;
use smodpres::words::parse_word;

fn main() {
    let model = build_cover(1, 3, Variant::Closed).unwrap();
    println!("rank {} (Euler count {})", model.rank, model.euler_rank());
    println!("deck matrix\n{}", model.dump(&model.deck_matrix().matrix));
    for s in ["h[1]", "r", "t[1,3]"] {
        let m = model.lift_matrix(&parse_word(s).unwrap()).unwrap().matrix;
        println!("lift of {s}\n{}", model.dump(&m));
    }
    let oracle = model.partial_rotation(2).unwrap();
    let lift = model.lift_matrix(&parse_word("t[1,3]").unwrap()).unwrap().matrix;
    println!("partial rotation agrees with the lift of t[1,3]: {}", oracle == lift);
}
