//! Small spherical systems with pinned expectations.
//!
//! The `*-case*` entries are the rank-one systems whose spherical root has
//! full support and does not lie in the simple roots: `A_n`, `B_n` and `C_n`
//! families and `G_2`. The remaining entries are standard helper systems.

use crate::rootlat::{LatticeVector, RootSystem, Series};
use crate::sphsys::{Color, Functional, RootType, SphericalSystem};

#[derive(Debug, Clone)]
pub struct Expected {
    pub rigid: bool,
    /// `(spherical root index, condition)`.
    pub distinguished: Vec<(usize, u8)>,
    /// Indices of the spherical roots for which the system is critical.
    pub critical: Vec<usize>,
    pub types: Vec<(&'static str, RootType)>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    /// Symmetric-pair data for the four full-support cases; documentation only.
    pub subalgebra: Option<&'static str>,
    pub system: SphericalSystem,
    pub expected: Expected,
}

impl CatalogEntry {
    /// Whether the entry instantiates one of the four full-support cases.
    pub fn is_full_support_case(&self) -> bool {
        self.subalgebra.is_some()
    }
}

fn v(pairs: &[(&str, i64)]) -> LatticeVector {
    LatticeVector::from_pairs(pairs.iter().map(|&(l, c)| (l, c)))
}

fn phi(values: &[i64]) -> Functional {
    Functional::from_integers(values)
}

fn system(
    spec: &[(Series, usize)],
    psi: Vec<LatticeVector>,
    colors: Vec<Color>,
) -> SphericalSystem {
    let rs = RootSystem::build(spec).expect("catalog root system");
    SphericalSystem::new(rs, psi, colors).expect("catalog system is well formed")
}

/// `sl_{n+1}` with spherical root `α_1+…+α_n`.
pub fn sl_case(n: usize) -> SphericalSystem {
    assert!(n >= 2);
    let sigma = LatticeVector::from_pairs((1..=n).map(|i| (format!("a{i}"), 1)));
    let last = format!("a{n}");
    system(
        &[(Series::A, n)],
        vec![sigma],
        vec![
            Color::new("D1", ["a1"], phi(&[1])),
            Color::new(format!("D{n}"), [last.as_str()], phi(&[1])),
        ],
    )
}

/// `so_{2n+1}` with spherical root `α_1+…+α_n` and a color moved by the
/// short root.
pub fn so_case(n: usize) -> SphericalSystem {
    assert!(n >= 2);
    let sigma = LatticeVector::from_pairs((1..=n).map(|i| (format!("a{i}"), 1)));
    let last = format!("a{n}");
    system(
        &[(Series::B, n)],
        vec![sigma],
        vec![
            Color::new("D1", ["a1"], phi(&[1])),
            Color::new(format!("D{n}"), [last.as_str()], phi(&[0])),
        ],
    )
}

/// `sp_{2n}` with spherical root `α_1+2α_2+…+2α_{n-1}+α_n`.
pub fn sp_case(n: usize) -> SphericalSystem {
    assert!(n >= 2);
    let sigma = LatticeVector::from_pairs((1..=n).map(|i| {
        let c = if i == 1 || i == n { 1 } else { 2 };
        (format!("a{i}"), c)
    }));
    system(
        &[(Series::C, n)],
        vec![sigma],
        vec![
            Color::new("D1", ["a1"], phi(&[0])),
            Color::new("D2", ["a2"], phi(&[1])),
        ],
    )
}

/// `G_2` with spherical root `α_1+α_2`.
pub fn g2_case() -> SphericalSystem {
    system(
        &[(Series::G, 2)],
        vec![v(&[("a1", 1), ("a2", 1)])],
        vec![
            Color::new("D1", ["a1"], phi(&[1])),
            Color::new("D2", ["a2"], phi(&[-1])),
        ],
    )
}

fn p1() -> SphericalSystem {
    system(
        &[(Series::A, 1)],
        vec![v(&[("a1", 1)])],
        vec![
            Color::new("D+", ["a1"], phi(&[1])),
            Color::new("D-", ["a1"], phi(&[1])),
        ],
    )
}

fn group_a1a1() -> SphericalSystem {
    system(
        &[(Series::A, 1), (Series::A, 1)],
        vec![v(&[("a1", 1)]), v(&[("a2", 1)])],
        vec![
            Color::new("D+", ["a1", "a2"], phi(&[1, 1])),
            Color::new("D1-", ["a1"], phi(&[1, -1])),
            Color::new("D2-", ["a2"], phi(&[-1, 1])),
        ],
    )
}

fn sl3_rank2(shared: bool) -> SphericalSystem {
    let colors = if shared {
        vec![
            Color::new("D+", ["a1", "a2"], phi(&[1, 1])),
            Color::new("D1-", ["a1"], phi(&[1, -2])),
            Color::new("D2-", ["a2"], phi(&[-2, 1])),
        ]
    } else {
        vec![
            Color::new("D1+", ["a1"], phi(&[1, 0])),
            Color::new("D1-", ["a1"], phi(&[1, -1])),
            Color::new("D2+", ["a2"], phi(&[0, 1])),
            Color::new("D2-", ["a2"], phi(&[-1, 1])),
        ]
    };
    system(
        &[(Series::A, 2)],
        vec![v(&[("a1", 1)]), v(&[("a2", 1)])],
        colors,
    )
}

pub fn catalog_entries() -> Vec<CatalogEntry> {
    use RootType::{A, B, C, D};
    let e = |rigid,
             distinguished: &[(usize, u8)],
             critical: &[usize],
             types: &[(&'static str, RootType)]| Expected {
        rigid,
        distinguished: distinguished.to_vec(),
        critical: critical.to_vec(),
        types: types.to_vec(),
    };
    let p1xp1 = crate::localize::localize(&group_a1a1(), &crate::rootlat::labels(["a1"]))
        .expect("localization of a valid system");
    vec![
        CatalogEntry {
            name: "sl3-gl2",
            description: "A2, spherical root a1+a2 (full-support case 1, n = 2)",
            subalgebra: Some("sl(n+1) ⊃ gl(n)"),
            system: sl_case(2),
            expected: e(true, &[], &[0], &[("a1", D), ("a2", D)]),
        },
        CatalogEntry {
            name: "so5-case2",
            description: "B2, spherical root a1+a2 with a color on the short root (full-support case 2, n = 2)",
            subalgebra: Some("so(2n+1) ⊃ gl(n) ⋉ Λ²Kⁿ"),
            system: so_case(2),
            expected: e(true, &[], &[0], &[("a1", D), ("a2", D)]),
        },
        CatalogEntry {
            name: "sp6-case3",
            description: "C3, spherical root a1+2a2+a3 (full-support case 3, n = 3)",
            subalgebra: Some("sp(2n) ⊃ (sp(2n-2) × so(2)) ⋉ K"),
            system: sp_case(3),
            expected: e(true, &[], &[0], &[("a1", D), ("a2", D), ("a3", A)]),
        },
        CatalogEntry {
            name: "g2-case4",
            description: "G2, spherical root a1+a2 (full-support case 4)",
            subalgebra: Some("G2 ⊃ (t1 × sl(2)) ⋉ (K² ⊕ K)"),
            system: g2_case(),
            expected: e(true, &[], &[0], &[("a1", D), ("a2", D)]),
        },
        CatalogEntry {
            name: "P1",
            description: "A1, spherical root a1, two colors with equal functionals",
            subalgebra: None,
            system: p1(),
            expected: e(false, &[(0, 1)], &[], &[("a1", B)]),
        },
        CatalogEntry {
            name: "P1xP1",
            description: "the group compactification of A1×A1 localized at a1; the P1×P1 fiber",
            subalgebra: None,
            system: p1xp1,
            expected: e(false, &[(0, 1)], &[], &[("a1", B)]),
        },
        CatalogEntry {
            name: "P2",
            description: "A1, spherical root 2a1",
            subalgebra: None,
            system: system(
                &[(Series::A, 1)],
                vec![v(&[("a1", 2)])],
                vec![Color::new("D", ["a1"], phi(&[2]))],
            ),
            expected: e(true, &[], &[0], &[("a1", C)]),
        },
        CatalogEntry {
            name: "group-a1a1",
            description: "wonderful group compactification of PGL2 under A1×A1",
            subalgebra: None,
            system: group_a1a1(),
            expected: e(true, &[], &[0, 1], &[("a1", B), ("a2", B)]),
        },
        CatalogEntry {
            name: "so5-so4",
            description: "B2, spherical root a1+a2 with no color on the short root",
            subalgebra: None,
            system: system(
                &[(Series::B, 2)],
                vec![v(&[("a1", 1), ("a2", 1)])],
                vec![Color::new("D1", ["a1"], phi(&[1]))],
            ),
            expected: e(false, &[(0, 2)], &[], &[("a1", D), ("a2", A)]),
        },
        CatalogEntry {
            name: "so7-so6",
            description: "B3, spherical root a1+a2+a3 with a2, a3 moving no color",
            subalgebra: None,
            system: system(
                &[(Series::B, 3)],
                vec![v(&[("a1", 1), ("a2", 1), ("a3", 1)])],
                vec![Color::new("D1", ["a1"], phi(&[1]))],
            ),
            expected: e(false, &[(0, 2)], &[], &[("a1", D), ("a2", A), ("a3", A)]),
        },
        CatalogEntry {
            name: "so7-case2",
            description: "B3, spherical root a1+a2+a3 with a color on the short root",
            subalgebra: None,
            system: so_case(3),
            expected: e(true, &[], &[0], &[("a1", D), ("a2", A), ("a3", D)]),
        },
        CatalogEntry {
            name: "g2-sl3",
            description: "G2, spherical root a1+2a2 (a2 short)",
            subalgebra: None,
            system: system(
                &[(Series::G, 2)],
                vec![v(&[("a1", 1), ("a2", 2)])],
                vec![Color::new("D2", ["a2"], phi(&[1]))],
            ),
            expected: e(false, &[(0, 3)], &[], &[("a1", A), ("a2", D)]),
        },
        CatalogEntry {
            name: "sl3-rank2",
            description: "A2, spherical roots a1, a2, four distinct colors",
            subalgebra: None,
            system: sl3_rank2(false),
            expected: e(true, &[], &[0, 1], &[("a1", B), ("a2", B)]),
        },
        CatalogEntry {
            name: "sl3-rank2-shared",
            description: "A2, spherical roots a1, a2, one color shared by both",
            subalgebra: None,
            system: sl3_rank2(true),
            expected: e(true, &[], &[0, 1], &[("a1", B), ("a2", B)]),
        },
        CatalogEntry {
            name: "sl3-rank2-x-a1",
            description: "sl3-rank2 times the flag variety of A1",
            subalgebra: None,
            system: crate::testing::product(&sl3_rank2(false), &flag(&[(Series::A, 1)])),
            expected: e(true, &[], &[], &[("a1", B), ("a2", B), ("a3", D)]),
        },
        CatalogEntry {
            name: "flag-a2",
            description: "A2, no spherical roots, the full flag variety",
            subalgebra: None,
            system: flag(&[(Series::A, 2)]),
            expected: e(true, &[], &[], &[("a1", D), ("a2", D)]),
        },
        CatalogEntry {
            name: "point-a2",
            description: "A2, no spherical roots and no colors",
            subalgebra: None,
            system: system(&[(Series::A, 2)], vec![], vec![]),
            expected: e(true, &[], &[], &[("a1", A), ("a2", A)]),
        },
    ]
}

/// Flag variety `G/B`: no spherical roots, one color per simple root.
pub fn flag(spec: &[(Series, usize)]) -> SphericalSystem {
    let rs = RootSystem::build(spec).expect("valid root system");
    let colors = rs
        .simple_roots()
        .iter()
        .map(|a| Color {
            id: format!("D{}", a.as_str().trim_start_matches('a')),
            moved_by: [a.clone()].into(),
            phi: Functional::default(),
        })
        .collect();
    SphericalSystem::new(rs, vec![], colors).expect("well formed")
}

pub fn entry(name: &str) -> Option<CatalogEntry> {
    catalog_entries().into_iter().find(|e| e.name == name)
}

pub fn names() -> Vec<&'static str> {
    catalog_entries().iter().map(|e| e.name).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rigidity::{critical_roots, critical_roots_oracle, distinguished_elements};
    use crate::rootlat::Label;

    #[test]
    fn every_entry_validates() {
        for e in catalog_entries() {
            let r = e.system.validate();
            assert!(r.ok(), "{}: {:?}", e.name, r.violations);
        }
    }

    #[test]
    fn names_are_unique() {
        let mut n = names();
        n.sort_unstable();
        n.dedup();
        assert_eq!(n.len(), catalog_entries().len());
    }

    #[test]
    fn expectations_are_reproduced() {
        for e in catalog_entries() {
            let s = &e.system;
            let rig = distinguished_elements(s);
            assert_eq!(rig.rigid(), e.expected.rigid, "{}", e.name);
            let got: Vec<(usize, u8)> = rig
                .distinguished
                .iter()
                .map(|d| (d.index, d.why.condition()))
                .collect();
            assert_eq!(got, e.expected.distinguished, "{}", e.name);
            for report in [critical_roots(s), critical_roots_oracle(s)] {
                let crit: Vec<usize> = report.critical_roots().map(|r| r.index).collect();
                assert_eq!(crit, e.expected.critical, "{}", e.name);
            }
            let types = s.assign_types();
            assert_eq!(types.len(), e.expected.types.len(), "{}", e.name);
            for (l, t) in &e.expected.types {
                assert_eq!(types[&Label::from(*l)], *t, "{} {l}", e.name);
            }
        }
    }

    #[test]
    fn family_builders_validate_at_other_ranks() {
        for n in 2..6 {
            for s in [sl_case(n), so_case(n), sp_case(n)] {
                assert!(s.validate().ok(), "n = {n}: {:?}", s.validate());
                assert!(distinguished_elements(&s).rigid());
            }
        }
    }
}
