//! Origin-centered zero-inclusion regions.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default outward widening applied to boundaries when checking membership.
pub const DEFAULT_BOUNDARY_TOL: f64 = 1e-9;

/// A disk, an annulus, or a union of those, all centered at the origin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "RegionRepr", try_from = "RegionRepr")]
pub enum Region {
    Disk {
        radius: f64,
        closed: bool,
    },
    Annulus {
        inner: f64,
        outer: f64,
        inner_closed: bool,
        outer_closed: bool,
    },
    Union(Vec<Region>),
}

impl Region {
    pub fn disk(radius: f64, closed: bool) -> Result<Self> {
        if !(radius >= 0.0) || !radius.is_finite() {
            return Err(Error::InvalidConfig(format!("disk radius {radius} invalid")));
        }
        Ok(Region::Disk { radius, closed })
    }

    pub fn annulus(inner: f64, outer: f64, inner_closed: bool, outer_closed: bool) -> Result<Self> {
        if !(inner >= 0.0) || !(outer >= inner) || !outer.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "annulus [{inner}, {outer}] invalid"
            )));
        }
        Ok(Region::Annulus {
            inner,
            outer,
            inner_closed,
            outer_closed,
        })
    }

    pub fn closed_annulus(inner: f64, outer: f64) -> Result<Self> {
        Self::annulus(inner, outer, true, true)
    }

    pub fn open_annulus(inner: f64, outer: f64) -> Result<Self> {
        Self::annulus(inner, outer, false, false)
    }

    /// Membership of `z` with every boundary widened outward by `tol`.
    ///
    /// With `tol > 0` open and closed boundaries behave alike; with `tol = 0`
    /// open boundaries exclude the boundary circle itself.
    pub fn contains(&self, z: Complex64, tol: f64) -> bool {
        let r = z.norm();
        match self {
            Region::Disk { radius, closed } => below(r, *radius, *closed, tol),
            Region::Annulus {
                inner,
                outer,
                inner_closed,
                outer_closed,
            } => above(r, *inner, *inner_closed, tol) && below(r, *outer, *outer_closed, tol),
            Region::Union(members) => members.iter().any(|m| m.contains(z, tol)),
        }
    }

    /// Largest modulus the region reaches.
    pub fn outer_radius(&self) -> f64 {
        match self {
            Region::Disk { radius, .. } => *radius,
            Region::Annulus { outer, .. } => *outer,
            Region::Union(members) => members
                .iter()
                .map(Region::outer_radius)
                .fold(0.0, f64::max),
        }
    }

    /// Smallest modulus the region reaches.
    pub fn inner_radius(&self) -> f64 {
        match self {
            Region::Disk { .. } => 0.0,
            Region::Annulus { inner, .. } => *inner,
            Region::Union(members) => members
                .iter()
                .map(Region::inner_radius)
                .fold(f64::INFINITY, f64::min),
        }
    }

    /// The first annulus in the region, if any.
    pub fn annulus_member(&self) -> Option<(f64, f64)> {
        match self {
            Region::Disk { .. } => None,
            Region::Annulus { inner, outer, .. } => Some((*inner, *outer)),
            Region::Union(members) => members.iter().find_map(Region::annulus_member),
        }
    }

    /// Intersection with the disk `|z| ≤ radius` (or `<` when `closed` is false).
    pub fn intersect_disk(&self, radius: f64, closed: bool) -> Region {
        let clip = |outer: f64, outer_closed: bool| -> (f64, bool) {
            if radius < outer {
                (radius, closed)
            } else if radius > outer {
                (outer, outer_closed)
            } else {
                (outer, outer_closed && closed)
            }
        };
        match self {
            Region::Disk {
                radius: r,
                closed: c,
            } => {
                let (radius, closed) = clip(*r, *c);
                Region::Disk { radius, closed }
            }
            Region::Annulus {
                inner,
                outer,
                inner_closed,
                outer_closed,
            } => {
                let (outer, outer_closed) = clip(*outer, *outer_closed);
                Region::Annulus {
                    inner: inner.min(outer),
                    outer,
                    inner_closed: *inner_closed,
                    outer_closed,
                }
            }
            Region::Union(members) => Region::Union(
                members
                    .iter()
                    .map(|m| m.intersect_disk(radius, closed))
                    .collect(),
            ),
        }
    }
}

fn below(r: f64, bound: f64, closed: bool, tol: f64) -> bool {
    if tol > 0.0 {
        r <= bound + tol
    } else if closed {
        r <= bound
    } else {
        r < bound
    }
}

fn above(r: f64, bound: f64, closed: bool, tol: f64) -> bool {
    if tol > 0.0 {
        r >= bound - tol
    } else if closed {
        r >= bound
    } else {
        r > bound
    }
}

/// Flat wire form: `{kind, inner, outer, inner_closed, outer_closed}` plus
/// `members` for unions.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct RegionRepr {
    kind: String,
    inner: f64,
    outer: f64,
    inner_closed: bool,
    outer_closed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    members: Vec<RegionRepr>,
}

impl From<Region> for RegionRepr {
    fn from(r: Region) -> Self {
        match r {
            Region::Disk { radius, closed } => RegionRepr {
                kind: "disk".into(),
                inner: 0.0,
                outer: radius,
                inner_closed: true,
                outer_closed: closed,
                members: vec![],
            },
            Region::Annulus {
                inner,
                outer,
                inner_closed,
                outer_closed,
            } => RegionRepr {
                kind: "annulus".into(),
                inner,
                outer,
                inner_closed,
                outer_closed,
                members: vec![],
            },
            Region::Union(members) => {
                let whole = Region::Union(members.clone());
                RegionRepr {
                    kind: "union".into(),
                    inner: whole.inner_radius(),
                    outer: whole.outer_radius(),
                    inner_closed: true,
                    outer_closed: true,
                    members: members.into_iter().map(RegionRepr::from).collect(),
                }
            }
        }
    }
}

impl TryFrom<RegionRepr> for Region {
    type Error = String;

    fn try_from(r: RegionRepr) -> std::result::Result<Self, String> {
        match r.kind.as_str() {
            "disk" => Ok(Region::Disk {
                radius: r.outer,
                closed: r.outer_closed,
            }),
            "annulus" => Ok(Region::Annulus {
                inner: r.inner,
                outer: r.outer,
                inner_closed: r.inner_closed,
                outer_closed: r.outer_closed,
            }),
            "union" => r
                .members
                .into_iter()
                .map(Region::try_from)
                .collect::<std::result::Result<Vec<_>, _>>()
                .map(Region::Union),
            other => Err(format!("unknown region kind {other:?}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn membership_examples() {
        let unit = Region::disk(1.0, true).unwrap();
        assert!(unit.contains(re(1.0), 0.0));
        assert!(!Region::disk(1.0, false).unwrap().contains(re(1.0), 0.0));

        let half = Region::closed_annulus(0.5f64.sqrt(), 1.5f64.sqrt()).unwrap();
        assert!(!half.contains(re(0.5), 0.0));

        let two = Region::closed_annulus(1.0, 3f64.sqrt()).unwrap();
        assert!(two.contains(re(1.7320), 1e-3));
        assert!(two.contains(Complex64::new(0.0, -1.5), 0.0));
    }

    #[test]
    fn open_boundary_counts_within_tol() {
        let a = Region::open_annulus(1.0, 2.0).unwrap();
        assert!(!a.contains(re(2.0), 0.0));
        assert!(a.contains(re(2.0 + 1e-10), 1e-9));
        assert!(a.contains(re(1.0 - 1e-10), 1e-9));
    }

    #[test]
    fn union_membership() {
        let u = Region::Union(vec![
            Region::disk(1.0, false).unwrap(),
            Region::closed_annulus(1.0, 3f64.sqrt()).unwrap(),
        ]);
        assert!(u.contains(re(0.2), 0.0));
        assert!(u.contains(re(1.0), 0.0));
        assert!(!u.contains(re(1.8), 0.0));
        assert_eq!(u.annulus_member(), Some((1.0, 3f64.sqrt())));
    }

    #[test]
    fn intersect_disk_clips_outer_boundary() {
        let a = Region::open_annulus(0.5, 2.0).unwrap();
        assert_eq!(
            a.intersect_disk(1.5, true),
            Region::annulus(0.5, 1.5, false, true).unwrap()
        );
        assert_eq!(a.intersect_disk(3.0, true), a);
    }

    #[test]
    fn rejects_invalid_shapes() {
        assert!(Region::disk(-1.0, true).is_err());
        assert!(Region::closed_annulus(2.0, 1.0).is_err());
        assert!(Region::disk(f64::NAN, true).is_err());
    }

    #[test]
    fn json_shape_and_round_trip() {
        let u = Region::Union(vec![
            Region::disk(1.0, false).unwrap(),
            Region::closed_annulus(1.0, 3f64.sqrt()).unwrap(),
        ]);
        let text = serde_json::to_string(&u).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["kind"], "union");
        assert_eq!(v["members"][1]["kind"], "annulus");
        assert_eq!(v["members"][0]["outer_closed"], false);
        let back: Region = serde_json::from_str(&text).unwrap();
        assert_eq!(back, u);
    }

    proptest! {
        #[test]
        fn membership_monotone_in_tol(
            inner in 0.0f64..2.0,
            width in 0.0f64..2.0,
            re_ in -5.0f64..5.0,
            im in -5.0f64..5.0,
            t in 0.0f64..0.5,
            dt in 0.0f64..0.5,
        ) {
            let z = Complex64::new(re_, im);
            let regions = [
                Region::open_annulus(inner, inner + width).unwrap(),
                Region::closed_annulus(inner, inner + width).unwrap(),
                Region::disk(inner, false).unwrap(),
            ];
            for r in &regions {
                if r.contains(z, t) {
                    prop_assert!(r.contains(z, t + dt + 1e-12));
                }
            }
        }
    }
}
