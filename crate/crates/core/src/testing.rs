//! Generators for tests and benchmarks: products of systems, seeded random
//! valid systems, and single-field mutations.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::rootlat::{Component, Label, LatticeVector, RootSystem, Series};
use crate::sphsys::{Axiom, Color, Functional, Rational, RootType, SphericalSystem};

/// The system of a product of two wonderful varieties. Simple roots of `b`
/// are relabelled to follow those of `a`; functionals vanish on the other
/// factor's spherical roots.
pub fn product(a: &SphericalSystem, b: &SphericalSystem) -> SphericalSystem {
    let offset = a.root_system().rank();
    let rename: BTreeMap<Label, Label> = b
        .root_system()
        .simple_roots()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), Label::new(format!("a{}", offset + i + 1))))
        .collect();
    let mut comps: Vec<Component> = a.root_system().components().to_vec();
    comps.extend(b.root_system().components().iter().map(|c| Component {
        series: c.series,
        rank: c.rank,
        labels: c.labels.iter().map(|l| rename[l].clone()).collect(),
    }));
    let rs = RootSystem::from_components(comps).expect("disjoint labels");
    let map_vec = |v: &LatticeVector| {
        LatticeVector::from_pairs(v.iter().map(|(l, c)| (rename[l].clone(), c)))
    };
    let mut psi = a.spherical_roots().to_vec();
    psi.extend(b.spherical_roots().iter().map(map_vec));
    let (ra, rb) = (a.spherical_lattice_rank(), b.spherical_lattice_rank());
    let zero = Rational::from_integer(0);
    let mut ids: BTreeSet<String> = BTreeSet::new();
    let mut colors = Vec::new();
    for c in a.colors() {
        let mut values = c.phi.values().to_vec();
        values.extend(std::iter::repeat_n(zero, rb));
        ids.insert(c.id.clone());
        colors.push(Color {
            id: c.id.clone(),
            moved_by: c.moved_by.clone(),
            phi: Functional::new(values),
        });
    }
    for c in b.colors() {
        let mut values = vec![zero; ra];
        values.extend_from_slice(c.phi.values());
        let mut id = c.id.clone();
        while ids.contains(&id) {
            id.push('\'');
        }
        ids.insert(id.clone());
        colors.push(Color {
            id,
            moved_by: c.moved_by.iter().map(|l| rename[l].clone()).collect(),
            phi: Functional::new(values),
        });
    }
    SphericalSystem::new(rs, psi, colors).expect("product of well-formed systems")
}

fn random_root_system(rng: &mut impl Rng, max_rank: usize) -> RootSystem {
    let mut spec = Vec::new();
    let mut left = max_rank;
    while left > 0 {
        let options: Vec<(Series, usize)> = [
            (Series::A, 1),
            (Series::A, 2),
            (Series::A, 3),
            (Series::A, 4),
            (Series::B, 2),
            (Series::B, 3),
            (Series::B, 4),
            (Series::C, 3),
            (Series::C, 4),
            (Series::D, 4),
            (Series::G, 2),
            (Series::F, 4),
        ]
        .into_iter()
        .filter(|&(_, r)| r <= left)
        .collect();
        let pick = options[rng.random_range(0..options.len())];
        spec.push(pick);
        left -= pick.1;
        if rng.random_bool(0.5) {
            break;
        }
    }
    RootSystem::build(&spec).expect("valid spec")
}

/// Connected subsets of the diagram summed with coefficient one, simple
/// roots doubled, and a few fixed patterns.
fn candidate_roots(rs: &RootSystem) -> Vec<LatticeVector> {
    let labels = rs.simple_roots();
    let n = labels.len();
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        let set: BTreeSet<Label> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| labels[i].clone())
            .collect();
        if rs.detect_subdiagram_type(&set).map(|c| c.len()) == Ok(1) {
            out.push(LatticeVector::from_pairs(set.into_iter().map(|l| (l, 1))));
        }
    }
    for l in labels {
        out.push(LatticeVector::simple(l.clone()).scaled(2));
    }
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            if rs.cartan_entry(a, b) == Ok(0) {
                out.push(LatticeVector::from_pairs([(a.clone(), 1), (b.clone(), 1)]));
            }
        }
    }
    for c in rs.components() {
        match c.series {
            Series::G => {
                out.push(LatticeVector::from_pairs([
                    (c.labels[0].clone(), 1),
                    (c.labels[1].clone(), 2),
                ]));
            }
            Series::C => {
                let k = c.labels.len();
                out.push(LatticeVector::from_pairs(c.labels.iter().enumerate().map(
                    |(i, l)| (l.clone(), if i == 0 || i == k - 1 { 1 } else { 2 }),
                )));
            }
            _ => {}
        }
    }
    out
}

/// Uniform integer in `[lo, 0]`.
fn pick(rng: &mut impl Rng, lo: Rational) -> Rational {
    let lo = lo.ceil().to_integer().min(0);
    Rational::from_integer(rng.random_range(lo..=0))
}

fn base_compatible(rs: &RootSystem, s: &LatticeVector, t: &LatticeVector) -> bool {
    let f = |x: &LatticeVector, y: &LatticeVector| rs.form(x, y).expect("known labels");
    let (st, ss, tt) = (f(s, t), f(s, s), f(t, t));
    st <= 0 && (2 * st) % ss == 0 && (2 * st) % tt == 0
}

fn random_candidate(rng: &mut impl Rng, max_rank: usize) -> SphericalSystem {
    let rs = random_root_system(rng, max_rank);
    let mut cands = candidate_roots(&rs);
    cands.shuffle(rng);
    let target = rng.random_range(0..=rs.rank().min(4));
    let mut psi: Vec<LatticeVector> = Vec::new();
    for c in cands {
        if psi.len() >= target {
            break;
        }
        if psi.iter().all(|s| base_compatible(&rs, s, &c)) {
            psi.push(c);
        }
    }
    let probe = SphericalSystem::new(rs.clone(), psi.clone(), vec![]).expect("well formed");
    let coroot = |a: &Label| probe.restricted_coroot(a);
    let one = Rational::from_integer(1);

    let mut colors: Vec<Color> = Vec::new();
    let mut b_roots: Vec<&Label> = Vec::new();
    let mut d_roots: Vec<&Label> = Vec::new();
    for a in rs.simple_roots() {
        match probe.root_type(a) {
            RootType::B => b_roots.push(a),
            RootType::C => colors.push(Color {
                id: format!("D{a}"),
                moved_by: [a.clone()].into(),
                phi: coroot(a).scale(Rational::new(1, 2)),
            }),
            _ if rng.random_bool(0.3) => {}
            _ => d_roots.push(a),
        }
    }

    // type b: optionally share one color with another type-b root
    let mut partner: BTreeMap<&Label, &Label> = BTreeMap::new();
    if b_roots.len() >= 2 && rng.random_bool(0.5) {
        let i = rng.random_range(0..b_roots.len());
        let j = (i + 1 + rng.random_range(0..b_roots.len() - 1)) % b_roots.len();
        partner.insert(b_roots[i], b_roots[j]);
        partner.insert(b_roots[j], b_roots[i]);
    }
    let psi_index = |a: &Label| {
        probe
            .psi_index(&LatticeVector::simple(a.clone()))
            .expect("type b")
    };
    let mut shared_done: BTreeSet<&Label> = BTreeSet::new();
    for &a in &b_roots {
        let ca = coroot(a);
        let ia = psi_index(a);
        let plus = match partner.get(a) {
            Some(&b) => {
                let cb = coroot(b);
                let ib = psi_index(b);
                let shared_id = if a < b {
                    format!("D{a}{b}")
                } else {
                    format!("D{b}{a}")
                };
                if shared_done.insert(a) && shared_done.insert(b) {
                    let values = (0..psi.len())
                        .map(|k| {
                            if k == ia || k == ib {
                                one
                            } else {
                                pick(rng, ca.value(k).max(cb.value(k)))
                            }
                        })
                        .collect();
                    colors.push(Color {
                        id: shared_id.clone(),
                        moved_by: [a.clone(), b.clone()].into(),
                        phi: Functional::new(values),
                    });
                }
                colors
                    .iter()
                    .find(|c| c.id == shared_id)
                    .expect("shared color")
                    .phi
                    .clone()
            }
            None => {
                let values = (0..psi.len())
                    .map(|k| if k == ia { one } else { pick(rng, ca.value(k)) })
                    .collect();
                let phi = Functional::new(values);
                colors.push(Color {
                    id: format!("D{a}+"),
                    moved_by: [a.clone()].into(),
                    phi: phi.clone(),
                });
                phi
            }
        };
        colors.push(Color {
            id: format!("D{a}-"),
            moved_by: [a.clone()].into(),
            phi: ca.add(&plus.scale(-one)),
        });
    }

    // type d: one color each, merged along orthogonal pairs summing to a
    // spherical root with equal coroots
    let mut group: Vec<usize> = (0..d_roots.len()).collect();
    for i in 0..d_roots.len() {
        for j in i + 1..d_roots.len() {
            let (a, b) = (d_roots[i], d_roots[j]);
            let sum = &LatticeVector::simple(a.clone()) + &LatticeVector::simple(b.clone());
            if rs.cartan_entry(a, b) == Ok(0)
                && coroot(a) == coroot(b)
                && psi.iter().any(|g| *g == sum || g.scaled(2) == sum)
            {
                let (gi, gj) = (group[i], group[j]);
                for g in group.iter_mut() {
                    if *g == gj {
                        *g = gi;
                    }
                }
            }
        }
    }
    let mut by_group: BTreeMap<usize, Vec<&Label>> = BTreeMap::new();
    for (i, a) in d_roots.iter().enumerate() {
        by_group.entry(group[i]).or_default().push(a);
    }
    for members in by_group.values() {
        colors.push(Color {
            id: format!(
                "D{}",
                members
                    .iter()
                    .map(|l| l.as_str())
                    .collect::<Vec<_>>()
                    .join("")
            ),
            moved_by: members.iter().map(|l| (*l).clone()).collect(),
            phi: coroot(members[0]),
        });
    }
    SphericalSystem::new(rs, psi, colors).expect("well formed")
}

/// A random system that passes validation and [`locally_consistent`], with
/// at most `max_rank` simple roots.
pub fn random_valid_system(rng: &mut impl Rng, max_rank: usize) -> SphericalSystem {
    loop {
        let s = random_candidate(rng, max_rank);
        if s.validate().ok() && locally_consistent(&s) {
            return s;
        }
    }
}

/// Two necessary conditions for a system to come from a wonderful variety
/// that the axiom check does not cover. Without them a system can pass
/// [`SphericalSystem::validate`] while some localization fails it.
///
/// - A root moving no color has zero restricted coroot.
/// - Orthogonal type-d roots `α, β` with `α+β` or `(α+β)/2` spherical move
///   the same color. In the localization at `{α, β}` both coroots restrict
///   to the same functional, so the colors are shared there, and
///   localization keeps colors apart.
pub fn locally_consistent(s: &SphericalSystem) -> bool {
    let rs = s.root_system();
    let types = s.assign_types();
    let zero = Functional::new(vec![Rational::from_integer(0); s.spherical_lattice_rank()]);
    if types
        .iter()
        .any(|(a, t)| *t == RootType::A && s.restricted_coroot(a) != zero)
    {
        return false;
    }
    let d: Vec<&Label> = types
        .iter()
        .filter(|(_, t)| **t == RootType::D)
        .map(|(a, _)| a)
        .collect();
    for (i, a) in d.iter().enumerate() {
        for b in &d[i + 1..] {
            let sum = &LatticeVector::simple((*a).clone()) + &LatticeVector::simple((*b).clone());
            let spherical = s
                .spherical_roots()
                .iter()
                .any(|g| *g == sum || g.scaled(2) == sum);
            if rs.cartan_entry(a, b) == Ok(0) && spherical {
                let ids = |x: &Label| {
                    s.colors_moved_by(x)
                        .map(|c| c.id.clone())
                        .collect::<Vec<_>>()
                };
                if ids(a) != ids(b) {
                    return false;
                }
            }
        }
    }
    true
}

/// A single-field edit of a spherical system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mutation {
    Phi {
        color: usize,
        root: usize,
        delta: i64,
    },
    DropColor(usize),
    NegateCoeff {
        root: usize,
        label: Label,
    },
}

impl Mutation {
    pub fn apply(&self, system: &SphericalSystem) -> SphericalSystem {
        let (rs, mut psi, mut colors) = system.clone().into_parts();
        match self {
            Mutation::Phi { color, root, delta } => {
                colors[*color].phi.values_mut()[*root] += Rational::from_integer(*delta);
            }
            Mutation::DropColor(i) => {
                colors.remove(*i);
            }
            Mutation::NegateCoeff { root, label } => {
                let c = psi[*root].coeff(label);
                psi[*root].set_coeff(label.clone(), -c);
            }
        }
        SphericalSystem::new(rs, psi, colors).expect("mutations keep the data well formed")
    }
}

/// Every single-field mutation of `system` together with the axiom it must
/// break. Dropping a color moved only by type-d roots turns those roots into
/// type a and yields another valid system, so no axiom is expected there.
pub fn mutations(system: &SphericalSystem) -> Vec<(Mutation, Option<Axiom>)> {
    let mut out = Vec::new();
    for (ci, c) in system.colors().iter().enumerate() {
        for root in 0..c.phi.len() {
            for delta in [1, -1] {
                out.push((
                    Mutation::Phi {
                        color: ci,
                        root,
                        delta,
                    },
                    Some(Axiom::P1),
                ));
            }
        }
        let pinned = c
            .moved_by
            .iter()
            .any(|a| matches!(system.root_type(a), RootType::B | RootType::C));
        out.push((Mutation::DropColor(ci), pinned.then_some(Axiom::P1)));
    }
    for (ri, s) in system.spherical_roots().iter().enumerate() {
        for (label, _) in s.iter() {
            out.push((
                Mutation::NegateCoeff {
                    root: ri,
                    label: label.clone(),
                },
                Some(Axiom::Base),
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn products_of_catalog_systems_validate() {
        let entries = catalog::catalog_entries();
        for a in &entries {
            for b in entries.iter().take(6) {
                let p = product(&a.system, &b.system);
                assert!(
                    p.validate().ok(),
                    "{} × {}: {:?}",
                    a.name,
                    b.name,
                    p.validate()
                );
            }
        }
    }

    #[test]
    fn random_systems_are_valid_and_varied() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let systems: Vec<_> = (0..60).map(|_| random_valid_system(&mut rng, 6)).collect();
        assert!(systems
            .iter()
            .all(|s| s.validate().ok() && s.root_system().rank() <= 6));
        let with_b = systems
            .iter()
            .filter(|s| s.assign_types().values().any(|t| *t == RootType::B))
            .count();
        let with_shared = systems
            .iter()
            .filter(|s| s.colors().iter().any(|c| c.moved_by.len() > 1))
            .count();
        assert!(with_b > 5, "{with_b}");
        assert!(with_shared > 0);
    }

    #[test]
    fn dropping_a_type_d_color_gives_a_valid_system() {
        // removing the short-root color of the B2 case yields so5-so4
        let s = catalog::so_case(2);
        let dropped = Mutation::DropColor(1).apply(&s);
        assert!(dropped.validate().ok());
        assert_eq!(dropped, catalog::entry("so5-so4").unwrap().system);
    }
}
