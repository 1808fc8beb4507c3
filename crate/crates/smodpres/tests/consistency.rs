use smodpres::consistency::*;
use smodpres::perm::generated_subgroup;
use smodpres::perm::Permutation;
use smodpres::presentations::{GroupFamily, Variant};
use smodpres::words::Generator;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Independent count of the parity group by brute force over `S_m`.
fn brute_parity_count(n: usize, fix_last: bool) -> usize {
    let m = 2 * n + 2;
    let mut count = 0;
    let mut images: Vec<usize> = (1..=m).collect();
    permute(&mut images, 0, &mut |p| {
        let same = (1..=m).all(|i| p[i - 1] % 2 == i % 2);
        let swapped = (1..=m).all(|i| p[i - 1] % 2 != i % 2);
        let ok = if fix_last { same && p[m - 1] == m } else { same || swapped };
        if ok {
            count += 1;
        }
    });
    count
}

fn permute(a: &mut Vec<usize>, at: usize, f: &mut dyn FnMut(&[usize])) {
    if at == a.len() {
        f(a);
        return;
    }
    for i in at..a.len() {
        a.swap(at, i);
        permute(a, at + 1, f);
        a.swap(at, i);
    }
}

#[test]
fn psi_closure_sizes() {
    for n in 1..=3 {
        let closed = check_psi_surjectivity(n, Variant::Closed).unwrap();
        assert!(closed.ok, "{:?}", closed.witness);
        assert_eq!(closed.measure, 2 * factorial(n + 1).pow(2));
        let marked = check_psi_surjectivity(n, Variant::Marked).unwrap();
        assert!(marked.ok, "{:?}", marked.witness);
        assert_eq!(marked.measure, factorial(n + 1) * factorial(n));
    }
    // the closed form agrees with brute-force enumeration
    for n in 1..=2 {
        assert_eq!(brute_parity_count(n, false), 2 * factorial(n + 1).pow(2));
        assert_eq!(brute_parity_count(n, true), factorial(n + 1) * factorial(n));
    }
}

#[test]
fn psi_closure_matches_known_values() {
    let sizes: Vec<usize> = (1..=3)
        .flat_map(|n| {
            [Variant::Closed, Variant::Marked]
                .map(|v| check_psi_surjectivity(n, v).unwrap().measure)
        })
        .collect();
    assert_eq!(sizes, vec![8, 2, 72, 12, 1152, 144]);
}

#[test]
fn boundary_surjectivity_is_unsupported() {
    assert!(matches!(
        check_psi_surjectivity(2, Variant::Boundary),
        Err(CheckError::Unsupported(_))
    ));
}

#[test]
fn closure_of_a_transposition_and_a_cycle_is_everything() {
    let a = Permutation::transposition(4, 1, 2);
    let b = Permutation::parse_cycles("(1 2 3 4)", 4).unwrap();
    assert_eq!(generated_subgroup(&[a, b], 4).len(), 24);
}

#[test]
fn central_twist() {
    for n in 1..=3 {
        for k in 3..=5 {
            let r = check_central_twist(n, k).unwrap();
            assert!(r.ok, "n={n} k={k}: {:?}", r.witness);
            assert_eq!(r.measure, 2 * n * (k - 1) + k - 1);
        }
    }
}

#[test]
fn small_generating_sets() {
    let closed = small_generators(GroupFamily::LMod(Variant::Closed), 2);
    assert_eq!(closed, vec![Generator::h(1), Generator::h(3), Generator::t(1, 2), Generator::r()]);
    let bd = small_generators(GroupFamily::SMod(Variant::Boundary), 2);
    assert_eq!(bd.len(), 4);
    assert!(!bd.contains(&Generator::r()));
}

#[test]
fn generation_lmod() {
    for n in 1..=3 {
        for v in [Variant::Boundary, Variant::Marked, Variant::Closed] {
            let r = check_generation(GroupFamily::LMod(v), n, None).unwrap();
            assert!(r.ok, "{}: {:?}", r.name, r.witness);
        }
    }
}

#[test]
fn generation_smod() {
    for n in 1..=2 {
        for k in [3, 4] {
            for v in [Variant::Boundary, Variant::Marked, Variant::Closed] {
                let r = check_generation(GroupFamily::SMod(v), n, Some(k)).unwrap();
                assert!(r.ok, "{}: {:?}", r.name, r.witness);
            }
        }
    }
}

#[test]
fn generation_is_undefined_for_the_pure_group() {
    assert!(matches!(
        check_generation(GroupFamily::PMod, 2, None),
        Err(CheckError::Unsupported(_))
    ));
}

#[test]
fn reports_are_reproducible() {
    let strip = |mut r: CheckReport| {
        r.elapsed_ms = 0;
        r
    };
    let a = strip(check_generation(GroupFamily::LMod(Variant::Closed), 2, None).unwrap());
    let b = strip(check_generation(GroupFamily::LMod(Variant::Closed), 2, None).unwrap());
    assert_eq!(a, b);
    let line = a.to_line();
    assert!(line.ok && line.witness.is_none());
}
