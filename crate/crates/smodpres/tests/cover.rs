use smodpres::cover::*;
use smodpres::linalg::Matrix;
use smodpres::presentations::*;
use smodpres::sphere::rep_of_word;
use smodpres::words::{parse_word, Generator, Word};

fn w(s: &str) -> Word {
    parse_word(s).unwrap()
}

#[test]
fn ranks_from_genus() {
    assert_eq!(build_cover(1, 3, Variant::Closed).unwrap().rank, 4);
    assert_eq!(build_cover(2, 4, Variant::Closed).unwrap().rank, 12);
    assert_eq!(build_cover(1, 3, Variant::Marked).unwrap().rank, 4);
    for n in 1..=4 {
        for k in 3..=6 {
            let closed = build_cover(n, k, Variant::Closed).unwrap();
            assert_eq!(closed.rank, 2 * n * (k - 1));
            assert_eq!(closed.rank, closed.euler_rank());
            let bd = build_cover(n, k, Variant::Boundary).unwrap();
            assert_eq!(bd.rank, 2 * n * (k - 1) + k - 1);
            assert_eq!(bd.rank, bd.euler_rank());
        }
    }
}

#[test]
fn invalid_parameters() {
    assert!(matches!(build_cover(0, 3, Variant::Closed), Err(CoverError::InvalidParams(_))));
    assert!(matches!(build_cover(1, 2, Variant::Closed), Err(CoverError::InvalidParams(_))));
}

#[test]
fn monodromy_is_balanced() {
    for n in 1..=4 {
        let mono = Monodromy { n, k: 5 };
        let total: i64 = (1..=mono.punctures()).map(|j| mono.of_loop(j)).sum();
        assert_eq!(mono.reduce(total), 0);
    }
}

#[test]
fn deck_order_is_exactly_k() {
    for n in 1..=3 {
        for k in 3..=6 {
            for v in [Variant::Closed, Variant::Boundary] {
                let model = build_cover(n, k, v).unwrap();
                let z = model.deck_matrix();
                assert_eq!(z.zeta_exponent, 1);
                assert!(z.matrix.pow(k as u64).is_identity());
                for j in 1..k {
                    assert!(!z.matrix.pow(j as u64).is_identity(), "n={n} k={k} j={j}");
                }
            }
            // no invariant vectors on the closed surface
            let model = build_cover(n, k, Variant::Closed).unwrap();
            let z = model.deck_matrix().matrix;
            assert!(z.sub(&Matrix::identity(model.rank)).det() != 0.into());
            let mut sum = Matrix::zeros(model.rank, model.rank);
            for j in 0..k {
                sum = sum.add(&z.pow(j as u64));
            }
            assert!(sum.is_zero());
        }
    }
}

#[test]
fn lift_of_r_inverts_the_rotation() {
    for n in 1..=3 {
        for k in 3..=5 {
            let model = build_cover(n, k, Variant::Closed).unwrap();
            let z = model.deck_matrix().matrix;
            let r = model.lift_matrix(&w("r")).unwrap().matrix;
            let r_inv = model.lift_matrix(&w("r^-1")).unwrap().matrix;
            assert_eq!(r.mul(&z).mul(&r_inv), z.inverse_unimodular().unwrap());
        }
    }
}

#[test]
fn lifted_half_twists_commute_with_the_rotation() {
    for n in 1..=3 {
        let model = build_cover(n, 4, Variant::Closed).unwrap();
        let z = model.deck_matrix().matrix;
        for i in 1..2 * n {
            let h = model.lift_matrix(&Word::gen(Generator::h(i as u32))).unwrap().matrix;
            assert_eq!(h.mul(&z), z.mul(&h));
        }
    }
}

#[test]
fn lift_matrices_are_unimodular() {
    let model = build_cover(2, 3, Variant::Closed).unwrap();
    for s in ["h[1]", "h[4]", "t[2,5]", "r", "t[1,2] * h[3]^-2 * r"] {
        let m = model.lift_matrix(&w(s)).unwrap().matrix;
        let d = m.det();
        assert!(d == 1.into() || d == (-1).into(), "{s}");
    }
}

#[test]
fn lifting_is_a_homomorphism() {
    let model = build_cover(2, 5, Variant::Closed).unwrap();
    let m = model.punctures();
    let words = ["h[1] * t[1,2]", "r * h[2]^-1", "t[3,5] * h[4]", "s[1]^2", "s[2] * s[1] * s[2]"];
    for a in words {
        for b in words {
            let (u, v) = (w(a), w(b));
            let direct = model.lift_automorphism(&rep_of_word(&u.mul(&v), m).unwrap()).unwrap();
            let lu = model.lift_matrix(&u).unwrap().matrix;
            let lv = model.lift_matrix(&v).unwrap().matrix;
            assert_eq!(direct, lu.mul(&lv), "{a} . {b}");
        }
    }
}

#[test]
fn not_liftable() {
    let model = build_cover(1, 3, Variant::Closed).unwrap();
    assert!(matches!(model.lift_matrix(&w("s[1]")), Err(CoverError::NotLiftable(_))));
    let bd = build_cover(1, 3, Variant::Boundary).unwrap();
    assert!(bd.lift_matrix(&w("r")).is_err());
}

#[test]
fn twist_on_the_marked_cover_has_order_k() {
    for k in 3..=5 {
        let model = build_cover(2, k, Variant::Marked).unwrap();
        let t = model.lift_matrix(&w("t[1,5]")).unwrap().matrix;
        assert!(t.pow(k as u64).is_identity());
        assert_eq!(t, model.deck_matrix().matrix);
    }
}

#[test]
fn partial_rotations_match_lifts() {
    for n in 1..=3 {
        for k in 3..=5 {
            let model = build_cover(n, k, Variant::Closed).unwrap();
            for i in 2..=n + 1 {
                let oracle = model.partial_rotation(i).unwrap();
                let lift = model
                    .lift_matrix(&Word::gen(Generator::t(1, 2 * i as u32 - 1)))
                    .unwrap()
                    .matrix;
                assert_eq!(oracle, lift, "n={n} k={k} i={i}");
            }
        }
    }
}

#[test]
fn selected_relators_hold() {
    let model = build_cover(2, 3, Variant::Closed).unwrap();
    let p = smod_presentation(Variant::Closed, 2, 3).unwrap();
    let r2 = p.relator(&RelTag::RSquare).unwrap();
    assert_eq!(model.verify_smod_relator(r2).unwrap().verdict, SmodVerdict::Holds);
    let marked = smod_presentation(Variant::Marked, 2, 3).unwrap();
    let tk = marked.relator(&RelTag::MarkedTwist { n: 2, k: 3 }).unwrap();
    let check = build_cover(2, 3, Variant::Marked).unwrap().verify_smod_relator(tk).unwrap();
    assert_eq!(check.verdict, SmodVerdict::Holds);
    assert_eq!(check.exponent, Some(0));
}

#[test]
fn corrupted_twist_power_is_a_zeta_mismatch() {
    for k in 3..=5 {
        let model = build_cover(1, k, Variant::Marked).unwrap();
        let bad = Relator { tag: RelTag::MarkedTwist { n: 1, k }, word: w(&format!("t[1,3]^{}", k - 1)) };
        let check = model.verify_smod_relator(&bad).unwrap();
        assert_eq!(check.verdict, SmodVerdict::ZetaMismatch(k - 1));
        assert!(check.projected_holds);
        assert_eq!(check.exponent, check.conjugator_exponent);
    }
}

#[test]
fn rotation_relator_exponent_is_forced() {
    // any other power of t[1,2n+1] on the right fails
    let n = 2;
    for k in 3..=5 {
        let model = build_cover(n, k, Variant::Closed).unwrap();
        let good = smodpres::presentations::relation(&RelTag::RZeta { n, j: 3 }).unwrap();
        assert_eq!(model.verify_smod_word(&good).unwrap().verdict, SmodVerdict::Holds);
        let top = Word::gen(Generator::t(1, 5));
        for shift in 1..k as i64 {
            let bad = good.mul(&top.pow(shift));
            let v = model.verify_smod_word(&bad).unwrap().verdict;
            assert!(matches!(v, SmodVerdict::ZetaMismatch(_)), "k={k} shift={shift}");
        }
    }
}

#[test]
fn every_smod_relator_holds_small() {
    for n in 1..=2 {
        for v in [Variant::Boundary, Variant::Marked, Variant::Closed] {
            let model = build_cover(n, 3, v).unwrap();
            for r in &smod_presentation(v, n, 3).unwrap().relators {
                let c = model.verify_smod_relator(r).unwrap();
                assert_eq!(c.verdict, SmodVerdict::Holds, "{v} n={n} {}", r.tag);
            }
        }
    }
}

#[test]
fn dump_header() {
    let model = build_cover(1, 3, Variant::Closed).unwrap();
    let text = model.dump(&model.deck_matrix().matrix);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "rank=4 n=1 k=3 variant=closed");
    assert_eq!(lines.count(), 4);
}
