//! Distinguished spherical roots, rigidity and criticality.

use std::collections::BTreeSet;

use crate::localize::{localize, type_a_roots};
use crate::rootlat::{Label, LatticeVector, Series};
use crate::sphsys::{RootType, SphericalSystem};

/// Which of the three conditions makes a spherical root distinguished.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Distinction {
    /// A simple spherical root whose two colors have equal functionals.
    EqualColors { colors: (String, String) },
    /// The sum of a `B_k` chain whose roots other than the first move no
    /// color. Labels are in standard order, short root last.
    BChain { sigma: Vec<Label> },
    /// `α_1 + 2α_2` on a `G_2` with `α_2` short.
    G2 { sigma: Vec<Label> },
}

impl Distinction {
    pub fn condition(&self) -> u8 {
        match self {
            Distinction::EqualColors { .. } => 1,
            Distinction::BChain { .. } => 2,
            Distinction::G2 { .. } => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishedRoot {
    /// Index into the spherical roots.
    pub index: usize,
    pub root: LatticeVector,
    pub why: Distinction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityReport {
    pub distinguished: Vec<DistinguishedRoot>,
}

impl RigidityReport {
    pub fn rigid(&self) -> bool {
        self.distinguished.is_empty()
    }
}

/// Tests one spherical root against the three conditions.
pub fn distinction(system: &SphericalSystem, sigma: &LatticeVector) -> Option<Distinction> {
    let rs = system.root_system();
    if let Some(alpha) = sigma.as_simple() {
        let d: Vec<_> = system.colors_moved_by(alpha).collect();
        for (i, x) in d.iter().enumerate() {
            if let Some(y) = d[i + 1..].iter().find(|y| y.phi == x.phi) {
                return Some(Distinction::EqualColors {
                    colors: (x.id.clone(), y.id.clone()),
                });
            }
        }
        return None;
    }
    // both remaining conditions force Σ = Supp(σ)
    let support = sigma.support();
    let comps = rs.detect_subdiagram_type(&support).ok()?;
    let [comp] = comps.as_slice() else {
        return None;
    };
    match comp.series {
        Series::B => {
            let all_ones = comp.labels.iter().all(|l| sigma.coeff(l) == 1);
            let tail_free = comp.labels[1..]
                .iter()
                .all(|l| system.root_type(l) == RootType::A);
            (all_ones && tail_free).then(|| Distinction::BChain {
                sigma: comp.labels.clone(),
            })
        }
        Series::G => {
            let (long, short) = (&comp.labels[0], &comp.labels[1]);
            (sigma.coeff(long) == 1 && sigma.coeff(short) == 2).then(|| Distinction::G2 {
                sigma: comp.labels.clone(),
            })
        }
        _ => None,
    }
}

pub fn is_distinguished(system: &SphericalSystem, sigma: &LatticeVector) -> bool {
    distinction(system, sigma).is_some()
}

pub fn distinguished_elements(system: &SphericalSystem) -> RigidityReport {
    let distinguished = system
        .spherical_roots()
        .iter()
        .enumerate()
        .filter_map(|(index, root)| {
            distinction(system, root).map(|why| DistinguishedRoot {
                index,
                root: root.clone(),
                why,
            })
        })
        .collect();
    RigidityReport { distinguished }
}

/// A wonderful variety is rigid iff no spherical root is distinguished.
pub fn is_rigid(system: &SphericalSystem) -> bool {
    distinguished_elements(system).rigid()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCriticality {
    pub index: usize,
    pub root: LatticeVector,
    pub distinguished: bool,
    pub critical: bool,
    /// No proper subset contains the type-a roots and the support.
    pub vacuous: bool,
    /// A proper admissible subset in which the root is not distinguished.
    pub failing_subset: Option<BTreeSet<Label>>,
}

impl RootCriticality {
    /// The verdict, ignoring which failing subset was found.
    pub fn verdict(&self) -> (bool, bool, bool) {
        (self.distinguished, self.critical, self.vacuous)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalityReport {
    pub roots: Vec<RootCriticality>,
}

impl CriticalityReport {
    pub fn critical_roots(&self) -> impl Iterator<Item = &RootCriticality> {
        self.roots.iter().filter(|r| r.critical)
    }

    pub fn verdicts(&self) -> Vec<(bool, bool, bool)> {
        self.roots.iter().map(RootCriticality::verdict).collect()
    }
}

fn criticality_with(
    system: &SphericalSystem,
    candidates: impl Fn(&BTreeSet<Label>, &[Label]) -> Vec<BTreeSet<Label>>,
) -> CriticalityReport {
    let all = system.root_system().simple_root_set();
    let type_a = type_a_roots(system);
    let roots = system
        .spherical_roots()
        .iter()
        .enumerate()
        .map(|(index, root)| {
            let mut out = RootCriticality {
                index,
                root: root.clone(),
                distinguished: is_distinguished(system, root),
                critical: false,
                vacuous: false,
                failing_subset: None,
            };
            if out.distinguished {
                return out;
            }
            let base: BTreeSet<Label> = type_a.union(&root.support()).cloned().collect();
            let free: Vec<Label> = all.difference(&base).cloned().collect();
            out.vacuous = free.is_empty();
            out.failing_subset = candidates(&base, &free).into_iter().find(|sub| {
                let local = localize(system, sub).expect("subset of the simple roots");
                !is_distinguished(&local, root)
            });
            out.critical = out.failing_subset.is_none();
            out
        })
        .collect();
    CriticalityReport { roots }
}

/// Criticality by enumerating every proper subset that contains the
/// type-a roots and the support of the spherical root.
pub fn critical_roots_oracle(system: &SphericalSystem) -> CriticalityReport {
    criticality_with(system, |base, free| {
        // every subset of `free` except `free` itself
        let n = free.len();
        (0..(1u64 << n).saturating_sub(1))
            .map(|mask| {
                let mut sub = base.clone();
                sub.extend(
                    (0..n)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| free[i].clone()),
                );
                sub
            })
            .collect()
    })
}

/// Criticality checked on the maximal proper subsets only.
///
/// Distinguishedness passes from a system to its localizations, so a root
/// distinguished in every maximal admissible localization is distinguished
/// in all of them.
pub fn critical_roots(system: &SphericalSystem) -> CriticalityReport {
    criticality_with(system, |_, free| {
        let all = system.root_system().simple_root_set();
        free.iter()
            .map(|beta| {
                let mut sub = all.clone();
                sub.remove(beta);
                sub
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::entry;

    fn sys(name: &str) -> SphericalSystem {
        entry(name).unwrap().system
    }

    #[test]
    fn p1_is_distinguished_by_equal_colors() {
        let r = distinguished_elements(&sys("P1"));
        assert!(!r.rigid());
        assert_eq!(r.distinguished.len(), 1);
        assert_eq!(r.distinguished[0].why.condition(), 1);
        assert!(!is_rigid(&sys("P1")));
    }

    #[test]
    fn b2_chain_is_distinguished() {
        let r = distinguished_elements(&sys("so5-so4"));
        assert_eq!(r.distinguished.len(), 1);
        assert_eq!(r.distinguished[0].why.condition(), 2);
    }

    #[test]
    fn g2_pattern() {
        let r = distinguished_elements(&sys("g2-sl3"));
        assert_eq!(r.distinguished[0].why.condition(), 3);
        assert!(is_rigid(&sys("g2-case4")));
    }

    #[test]
    fn sl3_standard_system_is_rigid() {
        assert!(is_rigid(&sys("sl3-gl2")));
        assert!(is_rigid(&sys("group-a1a1")));
        assert!(is_rigid(&sys("point-a2")));
    }

    #[test]
    fn criticality_examples() {
        for f in [critical_roots_oracle, critical_roots] {
            let r = f(&sys("sl3-gl2"));
            assert!(r.roots[0].critical && r.roots[0].vacuous);

            let r = f(&sys("P1"));
            assert!(r.roots[0].distinguished && !r.roots[0].critical);

            let r = f(&sys("group-a1a1"));
            assert!(r.roots[0].critical && !r.roots[0].vacuous);
            assert!(r.roots[1].critical);
        }
    }

    #[test]
    fn failing_subset_is_reported() {
        // at {a1, a2} the colors of a1 still differ on a2
        let s = sys("sl3-rank2-x-a1");
        let r = critical_roots_oracle(&s);
        assert!(!r.roots[0].critical);
        let sub = r.roots[0].failing_subset.as_ref().unwrap();
        assert_eq!(sub, &crate::rootlat::labels(["a1", "a2"]));
        let local = localize(&s, sub).unwrap();
        assert!(!is_distinguished(&local, &r.roots[0].root));
    }
}
