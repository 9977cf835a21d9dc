//! The height assignment `K_ℓ` and the canonical collection `𝒦_ℓ`.
//!
//! Every element of `𝒦_ℓ` is `K_ℓ` plus, on each interior region `R`, some
//! number `k_R ∈ [0, (d_R − |h_R|)/2]` of symmetric layers, one unit on both
//! orientations of every plaquette of `R`.

use alloc::vec::Vec;

use thiserror::Error;

use crate::assignment::PlaquetteAssignment;
use crate::geometry::{self, Analysis, GeometryError, Region};
use crate::lattice::{Loop, Plaquette, Point};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonicalError {
    #[error("region at {at} has h = {h}, d = {d}: d - |h| is negative or odd")]
    ParityViolation { at: Point, h: i64, d: u64 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// `K_ℓ`: height `h ≥ 0` goes on `p⁻¹`, height `h < 0` goes on `p`.
pub fn height_assignment(l: &Loop) -> PlaquetteAssignment {
    geometry::sparse_height(l)
        .into_iter()
        .map(|(base, h)| {
            if h > 0 {
                (Plaquette::negative(base), h as u32)
            } else {
                (Plaquette::positive(base), h.unsigned_abs() as u32)
            }
        })
        .collect()
}

/// Interior regions with their layer bounds, after parity checks.
fn layer_table(a: &Analysis) -> Result<Vec<(&Region, u64)>, CanonicalError> {
    a.interior()
        .map(|r| {
            let habs = r.h.unsigned_abs();
            if r.d < habs || (r.d - habs) % 2 != 0 {
                Err(CanonicalError::ParityViolation {
                    at: r.min_base(),
                    h: r.h,
                    d: r.d,
                })
            } else {
                Ok((r, r.layer_bound()))
            }
        })
        .collect()
}

/// `∏_R ((d_R − |h_R|)/2 + 1)` from the region table, or `None` on overflow.
pub fn collection_size(a: &Analysis) -> Result<Option<u64>, CanonicalError> {
    let table = layer_table(a)?;
    Ok(table.iter().try_fold(1u64, |acc, &(_, b)| acc.checked_mul(b + 1)))
}

/// Enumerates `𝒦_ℓ` for the backtrack-free reduction of `ℓ`.
///
/// Regions are taken in order of their smallest plaquette and layer tuples
/// in lexicographic order, so the first element is always `K_ℓ`.
pub fn canonical_collection(l: &Loop) -> Result<Vec<PlaquetteAssignment>, CanonicalError> {
    let l = l.reduced();
    let analysis = geometry::analyze(&l)?;
    canonical_collection_from(&l, &analysis)
}

pub fn canonical_collection_from(l: &Loop, analysis: &Analysis) -> Result<Vec<PlaquetteAssignment>, CanonicalError> {
    let table = layer_table(analysis)?;
    let base = height_assignment(l);
    let mut out = Vec::new();
    let mut tuple = alloc::vec![0u64; table.len()];
    loop {
        let mut k = base.clone();
        for (&(region, _), &layers) in table.iter().zip(&tuple) {
            if layers == 0 {
                continue;
            }
            let c = layers as u32;
            for &b in &region.plaquettes {
                k.add(Plaquette::positive(b), c);
                k.add(Plaquette::negative(b), c);
            }
        }
        assert!(
            geometry::is_balanced_by_height(l, &k),
            "canonical assignment is not balanced"
        );
        out.push(k);
        // Odometer with the last region varying fastest.
        let mut i = table.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if tuple[i] < table[i].1 {
                tuple[i] += 1;
                break;
            }
            tuple[i] = 0;
        }
    }
}

/// Membership in `𝒦_ℓ`.
pub fn is_canonical(l: &Loop, k: &PlaquetteAssignment) -> Result<bool, CanonicalError> {
    let l = l.reduced();
    let analysis = geometry::analyze(&l)?;
    let table = layer_table(&analysis)?;
    if !geometry::is_balanced_by_height(&l, k) {
        return Ok(false);
    }
    let frame = analysis.frame();
    // Balanced, so K − K_ℓ is symmetric; its layer count is min(K(p), K(p⁻¹)).
    let layers = |b: Point| k.get(Plaquette::positive(b)).min(k.get(Plaquette::negative(b)));
    for b in k.support_bases() {
        if layers(b) > 0 && analysis.distance.get(b) == 0 {
            return Ok(false);
        }
        if !frame.contains(b) {
            return Ok(false);
        }
    }
    for (region, bound) in table {
        let m = layers(region.min_base());
        if u64::from(m) > bound || region.plaquettes.iter().any(|&b| layers(b) != m) {
            return Ok(false);
        }
    }
    Ok(true)
}
