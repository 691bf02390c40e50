//! Spherical systems: spherical roots, colors with their functionals, the
//! a/b/c/d classification of simple roots and the axiom checks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rootlat::{Label, LatticeVector, RootSystem};

pub type Rational = Ratio<i64>;

/// Display name of the `i`-th spherical root (0-based index).
pub fn sigma_name(i: usize) -> String {
    format!("σ_{}", i + 1)
}

/// An element of the dual of the lattice spanned by the spherical roots,
/// stored as its values on the spherical roots in order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Functional(Vec<Rational>);

impl Functional {
    pub fn new(values: Vec<Rational>) -> Self {
        Functional(values)
    }

    pub fn from_integers(values: &[i64]) -> Self {
        Functional(values.iter().map(|&v| Rational::from_integer(v)).collect())
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn values_mut(&mut self) -> &mut [Rational] {
        &mut self.0
    }

    pub fn value(&self, i: usize) -> Rational {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Functional) -> Functional {
        Functional(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: Rational) -> Functional {
        Functional(self.0.iter().map(|a| a * k).collect())
    }

    /// Keeps the values at `indices`, in that order.
    pub fn project(&self, indices: &[usize]) -> Functional {
        Functional(indices.iter().map(|&i| self.0[i]).collect())
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// A color: a B-stable prime divisor, recorded by the simple roots moving
/// it and its functional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Color {
    pub id: String,
    pub moved_by: BTreeSet<Label>,
    pub phi: Functional,
}

impl Color {
    pub fn new<'a>(
        id: impl Into<String>,
        moved_by: impl IntoIterator<Item = &'a str>,
        phi: Functional,
    ) -> Self {
        Color {
            id: id.into(),
            moved_by: moved_by.into_iter().map(Label::from).collect(),
            phi,
        }
    }
}

/// The four mutually exclusive behaviours of a simple root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootType {
    /// Moves no color.
    A,
    /// Is itself a spherical root; moves two colors.
    B,
    /// Twice the root is a spherical root; moves one color.
    C,
    /// No rational multiple is a spherical root, but some color is moved.
    D,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootType::A => "a",
            RootType::B => "b",
            RootType::C => "c",
            RootType::D => "d",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// Spherical roots form a base of a root system.
    Base,
    /// Colors moved by each simple root, per root type.
    P1,
    /// Pairing bound for colors of simple spherical roots.
    P2,
    /// Shared colors.
    P3,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Base => "BASE",
            Axiom::P1 => "P1",
            Axiom::P2 => "P2",
            Axiom::P3 => "P3",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    fn push(&mut self, axiom: Axiom, witness: String) {
        self.violations.push(Violation { axiom, witness });
    }
}

/// Root system, spherical roots and colors.
///
/// Construction only checks that the data is well-formed (labels exist,
/// functionals have the right arity); the axioms are checked by
/// [`SphericalSystem::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalSystem {
    rs: RootSystem,
    psi: Vec<LatticeVector>,
    colors: Vec<Color>,
}

impl SphericalSystem {
    pub fn new(rs: RootSystem, psi: Vec<LatticeVector>, colors: Vec<Color>) -> Result<Self> {
        for sigma in &psi {
            for (l, _) in sigma.iter() {
                rs.index_of(l)?;
            }
        }
        let mut ids = BTreeSet::new();
        for c in &colors {
            if !ids.insert(c.id.as_str()) {
                return Err(Error::DuplicateLabel(c.id.clone()));
            }
            if c.moved_by.is_empty() {
                return Err(Error::EmptyMovedBy(c.id.clone()));
            }
            for l in &c.moved_by {
                rs.index_of(l)?;
            }
            if c.phi.len() != psi.len() {
                return Err(Error::FunctionalArity {
                    color: c.id.clone(),
                    expected: psi.len(),
                    got: c.phi.len(),
                });
            }
            if let Some(v) = c.phi.values().iter().find(|v| 2 % v.denom() != 0) {
                return Err(Error::BadDenominator(v.to_string()));
            }
        }
        Ok(SphericalSystem { rs, psi, colors })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn spherical_roots(&self) -> &[LatticeVector] {
        &self.psi
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn into_parts(self) -> (RootSystem, Vec<LatticeVector>, Vec<Color>) {
        (self.rs, self.psi, self.colors)
    }

    /// Rank of the lattice generated by the spherical roots.
    pub fn spherical_lattice_rank(&self) -> usize {
        self.psi.len()
    }

    pub fn psi_index(&self, v: &LatticeVector) -> Option<usize> {
        self.psi.iter().position(|s| s == v)
    }

    /// The colors moved by `alpha`, that is `D(α)`.
    pub fn colors_moved_by<'a>(&'a self, alpha: &Label) -> impl Iterator<Item = &'a Color> + 'a {
        let alpha = alpha.clone();
        self.colors
            .iter()
            .filter(move |c| c.moved_by.contains(&alpha))
    }

    fn moved_ids(&self, alpha: &Label) -> BTreeSet<&str> {
        self.colors_moved_by(alpha).map(|c| c.id.as_str()).collect()
    }

    /// Whether some spherical root is a rational multiple of `alpha`.
    fn has_multiple_of(&self, alpha: &Label) -> bool {
        self.psi
            .iter()
            .any(|s| s.multiple_of_simple(alpha).is_some())
    }

    /// Classifies one simple root. Membership of `α` or `2α` in the
    /// spherical roots wins over the color count, so malformed input still
    /// gets a type and the validator reports the mismatch.
    pub fn root_type(&self, alpha: &Label) -> RootType {
        let simple = LatticeVector::simple(alpha.clone());
        if self.psi_index(&simple).is_some() {
            RootType::B
        } else if self.psi_index(&simple.scaled(2)).is_some() {
            RootType::C
        } else if self.colors_moved_by(alpha).next().is_none() {
            RootType::A
        } else {
            RootType::D
        }
    }

    pub fn assign_types(&self) -> BTreeMap<Label, RootType> {
        self.rs
            .simple_roots()
            .iter()
            .map(|a| (a.clone(), self.root_type(a)))
            .collect()
    }

    /// Evaluates each of the four cases independently, returning every case
    /// whose defining condition holds for `alpha`. On a valid system the
    /// result has exactly one element.
    pub fn matching_cases(&self, alpha: &Label) -> Vec<RootType> {
        let simple = LatticeVector::simple(alpha.clone());
        let moved = self.colors_moved_by(alpha).next().is_some();
        let mut out = Vec::new();
        if !moved {
            out.push(RootType::A);
        }
        if self.psi_index(&simple).is_some() {
            out.push(RootType::B);
        }
        if self.psi_index(&simple.scaled(2)).is_some() {
            out.push(RootType::C);
        }
        if !self.has_multiple_of(alpha) && moved {
            out.push(RootType::D);
        }
        out
    }

    /// The two colors of a type-b root, the one with the lexicographically
    /// larger functional first.
    pub fn color_pair(&self, alpha: &Label) -> Option<(&Color, &Color)> {
        let d: Vec<&Color> = self.colors_moved_by(alpha).collect();
        match d.as_slice() {
            [x, y] if x.phi >= y.phi => Some((x, y)),
            [x, y] => Some((y, x)),
            _ => None,
        }
    }

    /// Coroot of a simple root restricted to the spherical roots.
    pub fn restricted_coroot(&self, alpha: &Label) -> Functional {
        self.rs
            .restricted_coroot(alpha, &self.psi)
            .expect("spherical roots use known labels")
    }

    /// Checks every axiom and collects all violations.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        self.check_base(&mut report);
        self.check_p1(&mut report);
        self.check_p2(&mut report);
        self.check_p3(&mut report);
        report
    }

    fn check_base(&self, report: &mut ValidationReport) {
        for (i, s) in self.psi.iter().enumerate() {
            if s.is_zero() {
                report.push(Axiom::Base, format!("{} is zero", sigma_name(i)));
            } else if !s.is_nonnegative() {
                report.push(
                    Axiom::Base,
                    format!("{} = {s} has a negative coefficient", sigma_name(i)),
                );
            }
        }
        let norm = |s: &LatticeVector| self.rs.form(s, s).expect("known labels");
        for i in 0..self.psi.len() {
            for j in 0..self.psi.len() {
                let (s, t) = (&self.psi[i], &self.psi[j]);
                if i == j || s.is_zero() || t.is_zero() {
                    continue;
                }
                let cross = self.rs.form(s, t).expect("known labels");
                let n = Rational::new(2 * cross, norm(s));
                if !n.is_integer() || n > Rational::zero() {
                    report.push(
                        Axiom::Base,
                        format!(
                            "{} = {s}, {} = {t}: 2({0},{1})/({0},{0}) = {n}",
                            sigma_name(i),
                            sigma_name(j)
                        ),
                    );
                }
            }
        }
    }

    fn check_p1(&self, report: &mut ValidationReport) {
        for alpha in self.rs.simple_roots() {
            let d: Vec<&Color> = self.colors_moved_by(alpha).collect();
            let coroot = self.restricted_coroot(alpha);
            let simple = LatticeVector::simple(alpha.clone());
            match self.root_type(alpha) {
                RootType::A => {}
                RootType::B => {
                    if d.len() != 2 {
                        report.push(
                            Axiom::P1,
                            format!("{alpha} is of type b but moves {} colors", d.len()),
                        );
                        continue;
                    }
                    let sum = d[0].phi.add(&d[1].phi);
                    if sum != coroot {
                        report.push(
                            Axiom::P1,
                            format!(
                                "{alpha}: φ_{} + φ_{} = {sum} but the restricted coroot is {coroot}",
                                d[0].id, d[1].id
                            ),
                        );
                    }
                    let k = self.psi_index(&simple).expect("type b");
                    for c in &d {
                        if c.phi.value(k) != Rational::one() {
                            report.push(
                                Axiom::P1,
                                format!("<φ_{}, {alpha}> = {} instead of 1", c.id, c.phi.value(k)),
                            );
                        }
                    }
                }
                RootType::C => {
                    if d.len() != 1 {
                        report.push(
                            Axiom::P1,
                            format!("{alpha} is of type c but moves {} colors", d.len()),
                        );
                        continue;
                    }
                    let half = coroot.scale(Rational::new(1, 2));
                    if d[0].phi != half {
                        report.push(
                            Axiom::P1,
                            format!(
                                "{alpha}: φ_{} = {} but half the restricted coroot is {half}",
                                d[0].id, d[0].phi
                            ),
                        );
                    }
                }
                RootType::D => {
                    if let Some(i) = self
                        .psi
                        .iter()
                        .position(|s| s.multiple_of_simple(alpha).is_some())
                    {
                        report.push(
                            Axiom::P1,
                            format!(
                                "{} = {} is a multiple of {alpha} other than 1 or 2",
                                sigma_name(i),
                                self.psi[i]
                            ),
                        );
                    }
                    if d.len() != 1 {
                        report.push(
                            Axiom::P1,
                            format!("{alpha} is of type d but moves {} colors", d.len()),
                        );
                        continue;
                    }
                    if d[0].phi != coroot {
                        report.push(
                            Axiom::P1,
                            format!(
                                "{alpha}: φ_{} = {} but the restricted coroot is {coroot}",
                                d[0].id, d[0].phi
                            ),
                        );
                    }
                }
            }
        }
    }

    fn check_p2(&self, report: &mut ValidationReport) {
        for (j, beta) in self.psi.iter().enumerate() {
            let Some(beta) = beta.as_simple() else {
                continue;
            };
            if !self.rs.contains(beta) {
                continue;
            }
            for c in self.colors_moved_by(beta) {
                for (i, s) in self.psi.iter().enumerate() {
                    let v = c.phi.value(i);
                    let moved = s.as_simple().is_some_and(|a| c.moved_by.contains(a));
                    if v > Rational::one() {
                        report.push(
                            Axiom::P2,
                            format!(
                                "color {} of {} has <φ, {}> = {v} > 1",
                                c.id,
                                sigma_name(j),
                                sigma_name(i)
                            ),
                        );
                    } else if (v == Rational::one()) != moved {
                        let why = if moved {
                            "is moved by it but the pairing is not 1"
                        } else {
                            "pairs to 1 with it without being moved by it"
                        };
                        report.push(
                            Axiom::P2,
                            format!(
                                "color {} of {} {why} ({})",
                                c.id,
                                sigma_name(j),
                                sigma_name(i)
                            ),
                        );
                    }
                }
            }
        }
    }

    /// The conditions under which two type-d roots must share their color.
    fn d_pair_condition(&self, alpha: &Label, beta: &Label) -> bool {
        let orthogonal = self.rs.cartan_entry(alpha, beta).expect("known") == 0;
        if !orthogonal || self.restricted_coroot(alpha) != self.restricted_coroot(beta) {
            return false;
        }
        let sum = &LatticeVector::simple(alpha.clone()) + &LatticeVector::simple(beta.clone());
        self.psi.iter().any(|g| *g == sum || g.scaled(2) == sum)
    }

    fn check_p3(&self, report: &mut ValidationReport) {
        let roots = self.rs.simple_roots();
        for (i, alpha) in roots.iter().enumerate() {
            for beta in &roots[i + 1..] {
                let da = self.moved_ids(alpha);
                let db = self.moved_ids(beta);
                let shared = da.intersection(&db).count();
                let (ta, tb) = (self.root_type(alpha), self.root_type(beta));
                let both_d = ta == RootType::D && tb == RootType::D;
                let d_pair = both_d && self.d_pair_condition(alpha, beta);
                if shared > 0 {
                    let case_b = ta == RootType::B && tb == RootType::B && shared == 1;
                    if !case_b && !d_pair {
                        report.push(
                            Axiom::P3,
                            format!(
                                "{alpha} (type {ta}) and {beta} (type {tb}) share {shared} color(s) \
                                 outside the allowed cases"
                            ),
                        );
                    }
                }
                if d_pair && da != db {
                    report.push(
                        Axiom::P3,
                        format!("{alpha} and {beta} are of type d with α+β spherical but move different colors"),
                    );
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootlat::Series;

    fn a1_system(phi_plus: i64, phi_minus: i64) -> SphericalSystem {
        let rs = RootSystem::build(&[(Series::A, 1)]).unwrap();
        SphericalSystem::new(
            rs,
            vec![LatticeVector::simple("a1")],
            vec![
                Color::new("D+", ["a1"], Functional::from_integers(&[phi_plus])),
                Color::new("D-", ["a1"], Functional::from_integers(&[phi_minus])),
            ],
        )
        .unwrap()
    }

    fn l(s: &str) -> Label {
        Label::from(s)
    }

    #[test]
    fn type_b_example() {
        let s = a1_system(1, 1);
        assert_eq!(s.assign_types()[&l("a1")], RootType::B);
        assert!(s.validate().ok());
    }

    #[test]
    fn type_c_example() {
        let rs = RootSystem::build(&[(Series::A, 1)]).unwrap();
        let s = SphericalSystem::new(
            rs,
            vec![LatticeVector::simple("a1").scaled(2)],
            vec![Color::new("D", ["a1"], Functional::from_integers(&[2]))],
        )
        .unwrap();
        assert_eq!(s.assign_types()[&l("a1")], RootType::C);
        assert!(s.validate().ok(), "{:?}", s.validate());
    }

    #[test]
    fn type_d_example() {
        let rs = RootSystem::build(&[(Series::A, 2)]).unwrap();
        let s = SphericalSystem::new(
            rs,
            vec![LatticeVector::from_pairs([("a1", 1), ("a2", 1)])],
            vec![
                Color::new("D1", ["a1"], Functional::from_integers(&[1])),
                Color::new("D2", ["a2"], Functional::from_integers(&[1])),
            ],
        )
        .unwrap();
        let types = s.assign_types();
        assert_eq!(types[&l("a1")], RootType::D);
        assert_eq!(types[&l("a2")], RootType::D);
        assert!(s.validate().ok());
    }

    #[test]
    fn wrong_pairing_is_a_p1_violation() {
        let report = a1_system(2, 0).validate();
        assert!(report.has(Axiom::P1));
        assert!(!report.ok());
    }

    #[test]
    fn obtuse_failure_is_a_base_violation() {
        let rs = RootSystem::build(&[(Series::A, 2)]).unwrap();
        let s = SphericalSystem::new(
            rs,
            vec![
                LatticeVector::simple("a1"),
                LatticeVector::from_pairs([("a1", 1), ("a2", 1)]),
            ],
            vec![],
        )
        .unwrap();
        let report = s.validate();
        assert!(report.has(Axiom::Base));
        assert!(report.violations[0].witness.contains("= 1"));
    }

    #[test]
    fn b_type_without_colors_is_still_classified_b() {
        let rs = RootSystem::build(&[(Series::A, 1)]).unwrap();
        let s = SphericalSystem::new(rs, vec![LatticeVector::simple("a1")], vec![]).unwrap();
        assert_eq!(s.root_type(&l("a1")), RootType::B);
        assert!(s.validate().has(Axiom::P1));
    }

    #[test]
    fn isolated_p2_violation() {
        // a1's first color pairs to 1 with a2 without being moved by it
        let rs = RootSystem::build(&[(Series::A, 1), (Series::A, 1)]).unwrap();
        let s = SphericalSystem::new(
            rs,
            vec![LatticeVector::simple("a1"), LatticeVector::simple("a2")],
            vec![
                Color::new("D1+", ["a1"], Functional::from_integers(&[1, 1])),
                Color::new("D1-", ["a1"], Functional::from_integers(&[1, -1])),
                Color::new("D2+", ["a2"], Functional::from_integers(&[0, 1])),
                Color::new("D2-", ["a2"], Functional::from_integers(&[0, 1])),
            ],
        )
        .unwrap();
        let report = s.validate();
        assert!(report.has(Axiom::P2));
        assert!(!report.has(Axiom::P1));
        assert!(!report.has(Axiom::P3));
    }

    #[test]
    fn unmerged_orthogonal_d_pair_is_a_p3_violation() {
        let rs = RootSystem::build(&[(Series::A, 1), (Series::A, 1)]).unwrap();
        let psi = vec![LatticeVector::from_pairs([("a1", 1), ("a2", 1)])];
        let split = SphericalSystem::new(
            rs.clone(),
            psi.clone(),
            vec![
                Color::new("D1", ["a1"], Functional::from_integers(&[2])),
                Color::new("D2", ["a2"], Functional::from_integers(&[2])),
            ],
        )
        .unwrap();
        let report = split.validate();
        assert_eq!(
            report
                .violations
                .iter()
                .map(|v| v.axiom)
                .collect::<Vec<_>>(),
            vec![Axiom::P3]
        );
        let merged = SphericalSystem::new(
            rs,
            psi,
            vec![Color::new(
                "D",
                ["a1", "a2"],
                Functional::from_integers(&[2]),
            )],
        )
        .unwrap();
        assert!(merged.validate().ok(), "{:?}", merged.validate());
    }

    #[test]
    fn color_shared_by_b_and_d_roots_is_rejected() {
        let rs = RootSystem::build(&[(Series::A, 2)]).unwrap();
        // a1 spherical, a2 of type d sharing a color with a1
        let s = SphericalSystem::new(
            rs,
            vec![LatticeVector::simple("a1")],
            vec![
                Color::new("D+", ["a1", "a2"], Functional::from_integers(&[1])),
                Color::new("D-", ["a1"], Functional::from_integers(&[0])),
            ],
        )
        .unwrap();
        assert!(s.validate().has(Axiom::P3));
    }

    #[test]
    fn empty_psi_flag_variety_is_valid() {
        let rs = RootSystem::build(&[(Series::A, 2)]).unwrap();
        let s = SphericalSystem::new(
            rs,
            vec![],
            vec![Color::new("D1", ["a1"], Functional::default())],
        )
        .unwrap();
        assert!(s.validate().ok());
        assert_eq!(s.spherical_lattice_rank(), 0);
        let types = s.assign_types();
        assert_eq!(types[&l("a1")], RootType::D);
        assert_eq!(types[&l("a2")], RootType::A);
    }

    #[test]
    fn lattice_rank_examples() {
        assert_eq!(a1_system(1, 1).spherical_lattice_rank(), 1);
        let rs = RootSystem::build(&[(Series::A, 1), (Series::A, 1)]).unwrap();
        let s = SphericalSystem::new(
            rs,
            vec![LatticeVector::simple("a1"), LatticeVector::simple("a2")],
            vec![],
        )
        .unwrap();
        assert_eq!(s.spherical_lattice_rank(), 2);
    }

    #[test]
    fn structural_errors() {
        let rs = RootSystem::build(&[(Series::A, 1)]).unwrap();
        let psi = vec![LatticeVector::simple("a1")];
        let err = SphericalSystem::new(
            rs.clone(),
            psi.clone(),
            vec![Color::new("D", ["a1"], Functional::from_integers(&[1, 2]))],
        );
        assert!(matches!(err, Err(Error::FunctionalArity { .. })));
        let err = SphericalSystem::new(
            rs.clone(),
            psi.clone(),
            vec![Color::new("D", ["a5"], Functional::from_integers(&[1]))],
        );
        assert_eq!(err, Err(Error::UnknownLabel("a5".into())));
        let err = SphericalSystem::new(
            rs.clone(),
            psi.clone(),
            vec![Color::new(
                "D",
                ["a1"],
                Functional::new(vec![Rational::new(1, 3)]),
            )],
        );
        assert!(matches!(err, Err(Error::BadDenominator(_))));
        let err = SphericalSystem::new(
            rs,
            psi,
            vec![Color::new(
                "D",
                Vec::<&str>::new(),
                Functional::from_integers(&[1]),
            )],
        );
        assert!(matches!(err, Err(Error::EmptyMovedBy(_))));
    }

    #[test]
    fn color_pair_is_canonical() {
        let s = a1_system(0, 2);
        let (plus, minus) = s.color_pair(&l("a1")).unwrap();
        assert_eq!(plus.id, "D-");
        assert_eq!(minus.id, "D+");
    }
}
