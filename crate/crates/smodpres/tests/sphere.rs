use smodpres::perm::psi;
use smodpres::sphere::*;
use smodpres::words::{parse_word, Generator, Word};

fn w(s: &str) -> Word {
    parse_word(s).unwrap()
}

#[test]
fn artin_action_on_four_points() {
    let f = artin(&Generator::sigma(1), 4).unwrap();
    assert_eq!(f.image(1), &vec![1, 2, -1]);
    assert_eq!(f.image(2), &vec![1]);
    assert_eq!(f.image(3), &vec![3]);
    // the product of all loops is fixed exactly
    assert_eq!(f.apply(&[1, 2, 3]), vec![1, 2, 3]);
    assert!(artin(&Generator::sigma(4), 4).is_err());
}

#[test]
fn square_of_a_half_twist() {
    let f = rep_of_word(&w("s[1]^2"), 4).unwrap();
    assert_eq!(f.image(2), &vec![1, 2, -1]);
}

#[test]
fn rep_is_a_homomorphism() {
    let m = 6;
    let u = w("h[1] * t[2,4]^-1");
    let v = w("r * h[3]");
    let lhs = rep_of_word(&u.mul(&v), m).unwrap();
    let rhs = rep_of_word(&u, m).unwrap().compose(&rep_of_word(&v, m).unwrap());
    assert_eq!(lhs.image(1), rhs.image(1));
    assert_eq!(lhs.image(5), rhs.image(5));
}

#[test]
fn full_twists_are_pure() {
    for m in [4, 6, 8] {
        for i in 1..m {
            for j in i + 1..=m {
                let t = Word::gen(Generator::t(i as u32, j as u32));
                assert!(psi(&t, m).unwrap().is_identity());
            }
        }
    }
}

#[test]
fn dictionary_identities() {
    // h_i^2 = t_{i,i+2}, r^2 = 1, t_{1,m-1} is central (inner)
    for n in 1..=3 {
        let m = 2 * n + 2;
        for i in 1..=2 * n {
            let lhs = Word::power(Generator::h(i as u32), 2);
            let rhs = Word::gen(Generator::t(i as u32, i as u32 + 2));
            assert!(equal_in_mod(&lhs, &rhs, m).unwrap());
        }
        assert!(rep_of_word(&w("r^2"), m).unwrap().is_inner().is_some());
        let top = Word::gen(Generator::t(1, 2 * n as u32 + 1));
        assert!(rep_of_word(&top, m).unwrap().is_inner().is_some());
        // but not the identity in the disk group
        assert!(!rep_of_word(&top, m).unwrap().is_identity());
    }
}

#[test]
fn inner_detection() {
    let f = SphereAutomorphism::conjugation(5, &[1, 2]);
    assert_eq!(f.is_inner(), Some(vec![1, 2]));
    let g = SphereAutomorphism::conjugation(5, &[1, 1, 1, -3]);
    assert_eq!(g.is_inner(), Some(vec![1, 1, 1, -3]));
    assert!(SphereAutomorphism::identity(5).is_inner() == Some(vec![]));
    assert!(artin(&Generator::sigma(2), 5).unwrap().is_inner().is_none());
}

#[test]
fn disk_versus_sphere_equality() {
    let m = 4;
    let t = w("t[1,3]");
    assert!(equal_in_mod(&t, &Word::identity(), m).unwrap());
    assert!(!equal_in_disk(&t, &Word::identity(), m).unwrap());
    assert!(equal_in_disk(&w("h[1]^2"), &w("t[1,3]"), m).unwrap());
}

#[test]
fn free_word_helpers() {
    assert_eq!(free_reduce(&[1, 2, -2, 3]), vec![1, 3]);
    assert_eq!(free_mul(&[1, 2], &[-2, -1, 4]), vec![4]);
    assert_eq!(free_inverse(&[1, -2]), vec![2, -1]);
    assert_eq!(free_cyclic_reduce(&[2, 1, 3, -2]), (vec![1, 3], vec![2]));
}

#[test]
fn unknown_generator() {
    assert!(rep_of_word(&w("x[1]"), 4).is_err());
    assert!(rep_of_word(&w("h[3]"), 4).is_err());
}
