use binedge::classify::{
    classify, classify_decomposable, classify_with, consistency_check, km_regularity_le2, CheckStatus,
    ClassificationRecord, ClassifyOptions, Engine, RegBound,
};
use binedge::enumerate::enumerate_connected;
use binedge::graphs::{build_fm, build_g1, build_g2, build_hi, chain, cone, disjoint_union, Graph};
use std::time::Duration;

const P: u32 = 32003;

fn exact(g: &Graph) -> ClassificationRecord {
    classify_with(g, &ClassifyOptions { engine: Engine::Exact, field_char: P, ..Default::default() }).unwrap()
}

#[test]
fn every_small_graph_is_consistent() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            let r = consistency_check(&g, P).unwrap();
            assert!(r.is_consistent(), "{}\n{r}", r.record.canonical_word);
            assert!(r.record.complete);
        }
    }
}

#[test]
fn level_and_pg_together_only_for_paths() {
    for n in 2..=7 {
        for g in enumerate_connected(n).unwrap() {
            let r = classify(&g, P).unwrap();
            assert_eq!(r.is_level() && r.is_pseudo_gorenstein(), g.is_path(), "{}", r.canonical_word);
            if !r.is_cm() {
                assert!(!r.is_level() && !r.is_pseudo_gorenstein());
            }
        }
    }
}

#[test]
fn km_regularity_agrees_with_the_engine() {
    for n in 1..=7 {
        for g in enumerate_connected(n).unwrap() {
            let reg = classify(&g, P).unwrap().reg.unwrap();
            match km_regularity_le2(&g) {
                RegBound::Exactly(r) => assert_eq!(r, reg),
                RegBound::AboveTwo => assert!(reg > 2),
            }
        }
    }
}

#[test]
fn named_examples() {
    let p5 = classify(&Graph::path(5), P).unwrap();
    assert!(p5.is_cm() && p5.is_level() && p5.is_pseudo_gorenstein() && p5.gorenstein);
    assert_eq!(p5.reg, Some(4));

    let h1 = classify(&build_hi(1, 1, 1).unwrap(), P).unwrap();
    assert!(h1.is_cm() && h1.is_level());
    assert_eq!(h1.reg, Some(2));

    let g1 = classify(&build_g1(1).unwrap(), P).unwrap();
    assert!(g1.is_cm() && g1.is_pseudo_gorenstein() && !g1.is_level());
    assert_eq!(g1.reg, Some(3));

    let f3 = exact(&build_fm(3).unwrap());
    assert!(f3.is_cm() && f3.is_level() && !f3.is_pseudo_gorenstein());
    assert_eq!(f3.reg, Some(3));
}

#[test]
fn product_rule_examples() {
    let p4 = classify_decomposable(&Graph::path(4), P).unwrap();
    assert_eq!((p4.extremal_betti, p4.reg, p4.pd), (Some(1), Some(3), Some(3)));
    assert!(p4.is_pseudo_gorenstein());

    let bowtie = Graph::from_edges(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap();
    let r = classify_decomposable(&bowtie, P).unwrap();
    assert!(r.is_level() && !r.is_pseudo_gorenstein());
    assert_eq!((r.reg, r.extremal_betti), (Some(2), Some(4)));
    let e = exact(&bowtie);
    assert_eq!((e.cm, e.pd, e.reg, e.extremal_betti, e.level), (r.cm, r.pd, r.reg, r.extremal_betti, r.level));

    // A non-level piece makes the whole graph non-level.
    let glued = glue_pendant(&build_g1(1).unwrap());
    let r = classify_decomposable(&glued, P).unwrap();
    assert!(!r.is_level() && r.is_pseudo_gorenstein());
    assert_eq!(r.reg, Some(4));
}

/// Attaches a pendant edge at a simplicial vertex.
fn glue_pendant(g: &Graph) -> Graph {
    let v = g.simplicial_vertices().first().unwrap();
    let mut edges = g.edges();
    edges.push((v, g.n() + 1));
    Graph::from_edges(g.n() + 1, &edges).unwrap()
}

#[test]
fn constructed_families_up_to_twelve_vertices() {
    for i in 1..=4 {
        let h = build_hi(1, 2, i).unwrap();
        let r = classify(&h, P).unwrap();
        assert!(r.is_cm() && r.is_level() && r.reg == Some(2), "H_{i}");
    }
    for i in 1..=3 {
        for g in [build_g1(i).unwrap(), build_g2(i).unwrap()] {
            let r = classify(&g, P).unwrap();
            assert!(r.is_cm() && r.is_pseudo_gorenstein() && !r.is_level() && r.reg == Some(3));
        }
    }
    let f6 = classify(&build_fm(6).unwrap(), P).unwrap();
    assert!(f6.is_cm() && f6.is_level() && f6.reg == Some(3));
}

#[test]
fn cones_over_two_cm_graphs() {
    let cases = [
        (Graph::path(2), Graph::path(3)),
        (Graph::path(1), Graph::path(4)),
        (Graph::path(3), Graph::path(3)),
        (Graph::complete(2), Graph::complete(3)),
        (Graph::path(1), build_fm(3).unwrap()),
    ];
    for (a, b) in cases {
        let h = disjoint_union(&a, &b);
        let g = cone(h.n() + 1, &h).unwrap();
        let r = consistency_check(&g, P).unwrap();
        assert_eq!(r.get("cone-level"), Some(&CheckStatus::Ok));
        assert!(r.is_consistent(), "{r}");
        assert!(r.record.is_cm());
    }
}

#[test]
fn chains_of_fm_are_not_level() {
    for ms in [[3, 3], [3, 4]] {
        let r = classify(&chain(&ms).unwrap(), P).unwrap();
        assert!(r.is_cm() && !r.is_level(), "{ms:?}");
    }
    assert!(classify(&chain(&[3, 3]).unwrap(), P).unwrap().is_pseudo_gorenstein());
    assert!(!classify(&chain(&[3, 4]).unwrap(), P).unwrap().is_pseudo_gorenstein());
}

#[test]
fn a_tiny_time_limit_marks_records_incomplete() {
    let opts = ClassifyOptions {
        engine: Engine::Exact,
        field_char: P,
        time_limit: Some(Duration::ZERO),
        ..Default::default()
    };
    let r = classify_with(&build_fm(4).unwrap(), &opts).unwrap();
    assert!(!r.complete);
    assert_eq!((r.cm, r.reg, r.level), (None, None, None));
    assert!(r.unmixed);
}

#[test]
fn records_are_deterministic() {
    let g = build_g2(1).unwrap();
    let a = serde_json::to_string(&classify(&g, P).unwrap()).unwrap();
    let b = serde_json::to_string(&classify(&g.relabel(&[6, 5, 4, 3, 2, 1]), P).unwrap()).unwrap();
    assert_eq!(a, b);
}
