use smodpres::abelianize::exponent_matrix;
use smodpres::presentations::*;
use smodpres::words::{Generator, Word};

fn grid() -> Vec<Presentation> {
    let mut out = Vec::new();
    for m in 3..=7 {
        out.push(build(GroupFamily::PMod, Some(m), None).unwrap());
    }
    for n in 1..=3 {
        for f in [GroupFamily::W, GroupFamily::WStar] {
            out.push(build(f, Some(n), None).unwrap());
        }
        for v in [Variant::Boundary, Variant::Marked, Variant::Closed] {
            out.push(build(GroupFamily::LMod(v), Some(n), None).unwrap());
            for k in 3..=4 {
                out.push(build(GroupFamily::SMod(v), Some(n), Some(k)).unwrap());
            }
        }
    }
    out
}

#[test]
fn text_and_json_round_trip() {
    for p in grid() {
        let text = p.to_text();
        let back = Presentation::from_text(&text).unwrap();
        assert_eq!(back, p, "{}", p.family);
        assert_eq!(back.to_text(), text);
        let json = p.to_json();
        assert_eq!(Presentation::from_json(&json).unwrap().to_json(), json);
    }
}

#[test]
fn every_generator_is_declared() {
    for p in grid() {
        p.check_declared().unwrap();
    }
}

#[test]
fn tags_round_trip() {
    for p in grid() {
        for r in &p.relators {
            let parsed = RelTag::parse_with(&r.tag.to_string(), p.params.n, p.params.k).unwrap();
            assert_eq!(relation(&parsed).unwrap(), r.word);
        }
    }
}

#[test]
fn lmod_boundary_n1() {
    let p = build(GroupFamily::LMod(Variant::Boundary), Some(1), None).unwrap();
    let names: Vec<String> = p.generators.iter().map(|g| g.to_string()).collect();
    assert_eq!(names, ["h[1]", "t[1,2]", "t[1,3]", "t[2,3]"]);
    assert!(p.relators[0].tag.to_string().starts_with("comm-"));
}

#[test]
fn pmod_four_points_has_no_relations() {
    let p = build(GroupFamily::PMod, Some(4), None).unwrap();
    let names: Vec<String> = p.generators.iter().map(|g| g.to_string()).collect();
    assert_eq!(names, ["t[1,2]", "t[2,3]"]);
    assert!(p.relators.is_empty());
    assert!(p.to_json().contains("\"relators\": []"));
}

#[test]
fn marked_twist_relator() {
    let p = build(GroupFamily::SMod(Variant::Marked), Some(1), Some(3)).unwrap();
    let r = p.relator(&RelTag::MarkedTwist { n: 1, k: 3 }).unwrap();
    assert_eq!(r.word.to_string(), "t[1,3]^3");
}

#[test]
fn exponent_rows() {
    let p = build(GroupFamily::LMod(Variant::Closed), Some(2), None).unwrap();
    let m = exponent_matrix(&p).unwrap();
    let col = |g: &Generator| p.generators.iter().position(|x| x == g).unwrap();
    for (i, r) in p.relators.iter().enumerate() {
        match r.tag {
            RelTag::Pentagonal { .. } | RelTag::CommHH { .. } | RelTag::CommTT { .. } | RelTag::CommHT { .. } => {
                assert!(m.row(i).iter().all(|x| x == &0.into()), "{}", r.tag)
            }
            RelTag::Chain { i: 1, j: 3 } => {
                assert_eq!(m.get(i, col(&Generator::h(1))), &2.into());
                assert_eq!(m.get(i, col(&Generator::t(1, 3))), &(-1).into());
            }
            _ => {}
        }
    }
}

#[test]
fn out_of_range_tags_are_rejected() {
    assert!(relation(&RelTag::CommHH { i: 1, j: 2 }).is_err());
    assert!(relation(&RelTag::RH { n: 1, i: 3 }).is_err());
    assert!(relation(&RelTag::RZeta { n: 2, j: 2 }).is_err());
    assert!(chain_rhs(1, 2).is_err());
    assert!(matches!(
        build(GroupFamily::SMod(Variant::Closed), Some(1), Some(2)),
        Err(PresentationError::InvalidK(2))
    ));
    assert!("lmod-open".parse::<GroupFamily>().is_err());
}

#[test]
fn chain_relation_small_cases() {
    assert_eq!(chain_rhs(1, 3).unwrap(), Word::power(Generator::h(1), 2));
    let w = chain_rhs(1, 4).unwrap();
    assert!(w.generators().all(|g| matches!(g.family, smodpres::words::Family::H | smodpres::words::Family::T)));
}

#[test]
fn lemma_suite_sizes_grow() {
    let sizes: Vec<usize> = (1..=3).map(|n| lemma_suite(n).len()).collect();
    assert!(sizes[0] > 0 && sizes[0] < sizes[1] && sizes[1] < sizes[2]);
    let suite = lemma_suite(2);
    let names: std::collections::HashSet<&str> = suite.iter().map(|p| p.name.as_str()).collect();
    assert_eq!(names.len(), suite.len());
}

#[test]
fn emit_is_deterministic() {
    let a = build(GroupFamily::SMod(Variant::Closed), Some(2), Some(5)).unwrap().to_algebra();
    let b = build(GroupFamily::SMod(Variant::Closed), Some(2), Some(5)).unwrap().to_algebra();
    assert_eq!(a, b);
    assert!(a.contains("FreeGroup("));
}
