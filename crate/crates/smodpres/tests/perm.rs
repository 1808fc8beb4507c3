use smodpres::perm::*;
use smodpres::words::{parse_word, Generator, Word};

fn class(w: &str, n: usize) -> ParityClass {
    is_liftable(&parse_word(w).unwrap(), n).unwrap()
}

#[test]
fn dictionary_images() {
    let m = 6;
    assert_eq!(psi_generator(&Generator::sigma(1), m).unwrap().to_string(), "(1 2)");
    assert_eq!(psi_generator(&Generator::h(2), m).unwrap().to_string(), "(2 4)");
    assert!(psi_generator(&Generator::t(2, 5), m).unwrap().is_identity());
    assert_eq!(psi_generator(&Generator::a(1), m).unwrap().to_string(), "(1 3)");
    assert_eq!(psi_generator(&Generator::b(1), m).unwrap().to_string(), "(2 4)");
    assert_eq!(psi_generator(&Generator::r(), m).unwrap().to_string(), "(1 6)(2 5)(3 4)");
    assert!(psi_generator(&Generator::h(5), m).is_err());
}

#[test]
fn classification_grid() {
    for n in 1..=4 {
        let m = 2 * n + 2;
        for i in 1..m {
            assert_eq!(class(&format!("s[{i}]"), n), ParityClass::Neither);
        }
        for i in 1..=2 * n {
            assert_eq!(class(&format!("h[{i}]"), n), ParityClass::Preserving);
        }
        for i in 1..m {
            for j in i + 1..=m {
                assert_eq!(class(&format!("t[{i},{j}]"), n), ParityClass::Preserving);
            }
        }
        for i in 1..=n {
            assert_eq!(class(&format!("a[{i}]"), n), ParityClass::Preserving);
            if 2 * i + 2 <= m {
                assert_eq!(class(&format!("b[{i}]"), n), ParityClass::Preserving);
            }
        }
        assert_eq!(class("r", n), ParityClass::Reversing);
    }
}

#[test]
fn products_of_non_liftable_letters_can_lift() {
    // s1^2 is pure
    assert_eq!(class("s[1]^2", 1), ParityClass::Preserving);
    assert_eq!(class("s[1] * s[2]", 2), ParityClass::Neither);
}

#[test]
fn psi_is_a_homomorphism() {
    let u = parse_word("h[1] * r").unwrap();
    let v = parse_word("h[2]^-1 * s[3]").unwrap();
    let m = 6;
    let lhs = psi(&u.mul(&v), m).unwrap();
    let rhs = psi(&u, m).unwrap().compose(&psi(&v, m).unwrap());
    assert_eq!(lhs, rhs);
}

#[test]
fn closure_sizes() {
    let fact = |n: usize| (1..=n).product::<usize>();
    for n in 1..=3 {
        let m = 2 * n + 2;
        let mut gens: Vec<_> = (1..=2 * n).map(|i| psi_generator(&Generator::h(i as u32), m).unwrap()).collect();
        gens.push(psi_generator(&Generator::r(), m).unwrap());
        assert_eq!(generated_subgroup(&gens, m).len(), 2 * fact(n + 1).pow(2));
        let star: Vec<_> =
            (1..2 * n).map(|i| psi_generator(&Generator::h(i as u32), m).unwrap()).collect();
        let closure = generated_subgroup(&star, m);
        assert_eq!(closure.len(), fact(n + 1) * fact(n));
        assert!(closure.iter().all(|p| w_star_membership(p).unwrap()));
    }
}

#[test]
fn curve_lifting_criterion() {
    // an even number of consecutive points always has zero signed count
    assert!(curve_lifts(1, 2, 2, 3).unwrap());
    assert!(curve_lifts(2, 5, 2, 5).unwrap());
    // three points: count ±1, never zero mod k >= 3
    assert!(!curve_lifts(1, 3, 2, 3).unwrap());
    assert!(curve_lifts(1, 7, 3, 1).unwrap());
    assert!(curve_lifts(0, 2, 1, 3).is_err());
}

#[test]
fn cycle_notation_round_trip() {
    let p = Permutation::parse_cycles("(1 3)(2 4 6)", 6).unwrap();
    assert_eq!(Permutation::parse_cycles(&p.to_string(), 6).unwrap(), p);
    assert_eq!(p.compose(&p.inverse()), Permutation::identity(6));
    assert!(Word::identity().is_identity());
}
