use wonderful_core::orbits::OrbitPoset;
use wonderful_core::{catalog, emit_graph, orbit_poset};

#[test]
fn counts_up_to_rank_ten() {
    for r in 0..=10usize {
        let p = OrbitPoset::of_rank(r);
        assert_eq!(p.nodes.len(), 1 << r);
        assert_eq!(p.edges.len(), r * (1 << r) / 2);
        assert_eq!(p.sources().len(), 1);
        assert_eq!(p.sinks().len(), 1);
        assert!(p.nodes[0].roots.is_empty());
        assert_eq!(p.nodes.last().unwrap().roots.len(), r);
    }
}

#[test]
fn rank_two_golden_file() {
    let s = catalog::entry("group-a1a1").unwrap().system;
    let dot = emit_graph(&orbit_poset(&s));
    assert_eq!(dot, include_str!("golden/orbits_r2.dot"));
    assert_eq!(dot, emit_graph(&orbit_poset(&s)));
}
