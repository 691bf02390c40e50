//! Localization of a spherical system at a subset of the simple roots.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::rootlat::Label;
use crate::sphsys::{Color, RootType, SphericalSystem};

/// Localizes `system` at `subset`.
///
/// Keeps the spherical roots supported in `subset`, restricts the root
/// system to the induced sub-diagram, and keeps every color moved by some
/// root of `subset`, with its functional projected onto the surviving
/// spherical roots. Colors keep their ids, so the correspondence with the
/// parent colors is the identity on ids.
pub fn localize(system: &SphericalSystem, subset: &BTreeSet<Label>) -> Result<SphericalSystem> {
    let rs = system.root_system();
    let missing: Vec<String> = subset
        .iter()
        .filter(|l| !rs.contains(l))
        .map(ToString::to_string)
        .collect();
    if !missing.is_empty() {
        return Err(Error::NotASubset(format!("{{{}}}", missing.join(", "))));
    }
    let local_rs = rs.restrict(subset)?;
    let kept: Vec<usize> = system
        .spherical_roots()
        .iter()
        .enumerate()
        .filter(|(_, s)| s.support().is_subset(subset))
        .map(|(i, _)| i)
        .collect();
    let psi = kept
        .iter()
        .map(|&i| system.spherical_roots()[i].clone())
        .collect();
    let colors = system
        .colors()
        .iter()
        .filter_map(|c| {
            let moved_by: BTreeSet<Label> = c.moved_by.intersection(subset).cloned().collect();
            (!moved_by.is_empty()).then(|| Color {
                id: c.id.clone(),
                moved_by,
                phi: c.phi.project(&kept),
            })
        })
        .collect();
    SphericalSystem::new(local_rs, psi, colors)
}

/// Simple roots of type a, i.e. moving no color.
pub fn type_a_roots(system: &SphericalSystem) -> BTreeSet<Label> {
    system
        .root_system()
        .simple_roots()
        .iter()
        .filter(|a| system.root_type(a) == RootType::A)
        .cloned()
        .collect()
}
