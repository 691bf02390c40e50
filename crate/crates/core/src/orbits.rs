//! The poset of G-orbits of a wonderful variety.
//!
//! Orbits correspond to subsets of the spherical roots: the subset `Ψ₀`
//! labels the orbit lying in exactly the boundary divisors indexed by `Ψ₀`.
//! The empty subset is the open orbit, the full set the closed one.

use std::fmt::Write;

use crate::sphsys::{sigma_name, SphericalSystem};

/// Largest rank accepted; nodes are stored as bit masks.
pub const MAX_RANK: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitNode {
    /// Indices of the spherical roots in `Ψ₀`, increasing.
    pub roots: Vec<usize>,
    /// Number of boundary divisors not containing the orbit, `r - |Ψ₀|`.
    pub boundary_rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPoset {
    pub rank: usize,
    /// Sorted by `(|Ψ₀|, Ψ₀)`.
    pub nodes: Vec<OrbitNode>,
    /// Covering pairs as indices into `nodes`, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Display form of each spherical root, when built from a system.
    pub root_names: Vec<String>,
}

impl OrbitPoset {
    /// Poset of subsets of an `r`-element set.
    pub fn of_rank(rank: usize) -> Self {
        assert!(rank <= MAX_RANK, "rank {rank} exceeds {MAX_RANK}");
        let mut masks: Vec<u32> = (0..1u32 << rank).collect();
        masks.sort_by_key(|&m| (m.count_ones(), bits(m)));
        let mut position = vec![0usize; masks.len()];
        for (i, &m) in masks.iter().enumerate() {
            position[m as usize] = i;
        }
        let nodes = masks
            .iter()
            .map(|&m| OrbitNode {
                roots: bits(m),
                boundary_rank: rank - m.count_ones() as usize,
            })
            .collect();
        let mut edges = Vec::with_capacity(rank << rank.saturating_sub(1));
        for (i, &m) in masks.iter().enumerate() {
            for k in 0..rank {
                if m >> k & 1 == 0 {
                    edges.push((i, position[(m | 1 << k) as usize]));
                }
            }
        }
        edges.sort_unstable();
        OrbitPoset {
            rank,
            nodes,
            edges,
            root_names: Vec::new(),
        }
    }

    pub fn node_label(&self, node: &OrbitNode) -> String {
        let names: Vec<String> = node.roots.iter().map(|&i| sigma_name(i)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| self.edges.iter().all(|&(_, t)| t != i))
            .collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| self.edges.iter().all(|&(s, _)| s != i))
            .collect()
    }
}

fn bits(m: u32) -> Vec<usize> {
    (0..32).filter(|k| m >> k & 1 == 1).collect()
}

pub fn orbit_poset(system: &SphericalSystem) -> OrbitPoset {
    let mut p = OrbitPoset::of_rank(system.spherical_lattice_rank());
    p.root_names = system
        .spherical_roots()
        .iter()
        .map(ToString::to_string)
        .collect();
    p
}

/// DOT digraph of the covering relation, from the open orbit upwards.
pub fn emit_graph(p: &OrbitPoset) -> String {
    let mut out = String::from("digraph orbits {\n    rankdir=BT;\n");
    for (i, name) in p.root_names.iter().enumerate() {
        writeln!(out, "    // {} = {name}", sigma_name(i)).unwrap();
    }
    for node in &p.nodes {
        writeln!(
            out,
            "    \"{}\" [boundary_rank={}];",
            p.node_label(node),
            node.boundary_rank
        )
        .unwrap();
    }
    for &(s, t) in &p.edges {
        writeln!(
            out,
            "    \"{}\" -> \"{}\";",
            p.node_label(&p.nodes[s]),
            p.node_label(&p.nodes[t])
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        for (r, n, e) in [(0, 1, 0), (1, 2, 1), (2, 4, 4), (3, 8, 12)] {
            let p = OrbitPoset::of_rank(r);
            assert_eq!((p.nodes.len(), p.edges.len()), (n, e));
        }
    }

    #[test]
    fn rank_zero_dot() {
        let dot = emit_graph(&OrbitPoset::of_rank(0));
        assert_eq!(
            dot,
            "digraph orbits {\n    rankdir=BT;\n    \"{}\" [boundary_rank=0];\n}\n"
        );
    }

    #[test]
    fn rank_one_dot() {
        let dot = emit_graph(&OrbitPoset::of_rank(1));
        assert!(dot.contains("\"{}\" -> \"{σ_1}\";"));
        assert_eq!(dot.matches("->").count(), 1);
    }

    #[test]
    fn extremes() {
        let p = OrbitPoset::of_rank(3);
        assert_eq!(p.sources(), vec![0]);
        assert_eq!(p.sinks(), vec![7]);
        assert_eq!(p.nodes[0].boundary_rank, 3);
        assert_eq!(p.nodes[7].roots, vec![0, 1, 2]);
    }
}
