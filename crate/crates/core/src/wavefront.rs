//! Wavefront sets: spherical Arthur representations, and modules given by
//! the restrictions of their Iwahori-fixed vectors to the parahoric Weyl
//! groups `W_J`.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::abc::{self, PseudoLevi};
use crate::duality::{self, leq_a, UnramifiedClassInvariant};
use crate::orbits::{self, closure_leq, NilpotentOrbit};
use crate::rootdata::{Isogeny, RootSystem, SimpleType};
use crate::weylrep::{self, Irrep, Label};
use crate::{Error, Result};

/// Irreducible constituents of the restriction to one `W_J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceRestriction {
    pub j: Vec<usize>,
    pub irreps: Vec<(Irrep, u64)>,
}

/// Restrictions to the parahoric subgroups, one entry per face.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RestrictionData {
    pub faces: Vec<FaceRestriction>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WavefrontResult {
    /// The `≤_A`-maximal invariants.
    pub canonical_unramified: Vec<UnramifiedClassInvariant>,
    /// Closure-maximal orbits among the canonical ones.
    pub geometric: Vec<NilpotentOrbit>,
}

/// Input format of restriction data.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FaceRecord {
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub irreps: Vec<IrrepRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IrrepRecord {
    pub label: String,
    pub mult: u64,
}

/// Parse a character of `W_J`: factor labels joined by ` x ` in factor
/// order, or one of `triv`, `sgn`, `1` for the whole group.
pub fn parse_face_irrep(types: &[SimpleType], s: &str) -> Result<Irrep> {
    match s.trim() {
        "triv" => return Irrep::triv(types),
        "sgn" => return Irrep::sgn(types),
        "1" if types.is_empty() => return Ok(Irrep::unit()),
        _ => {}
    }
    let parts: Vec<&str> = s.split(" x ").collect();
    if parts.len() != types.len() {
        return Err(Error::Invalid(format!("'{s}' has {} factors, W_J has {}", parts.len(), types.len())));
    }
    let factors = types
        .iter()
        .zip(parts)
        .map(|(&t, p)| match p.trim() {
            "triv" | "sgn" => Ok((t, Irrep::parse(t, p)?.label().cloned().unwrap())),
            other => Ok((t, Label::parse(t, other)?)),
        })
        .collect::<Result<Vec<_>>>()?;
    Irrep::new(factors)
}

impl RestrictionData {
    pub fn from_records(rs: &RootSystem, records: &[FaceRecord]) -> Result<RestrictionData> {
        let mut faces = Vec::new();
        for r in records {
            let pl = PseudoLevi::new(rs, &r.j)?;
            let irreps = r
                .irreps
                .iter()
                .map(|i| Ok((parse_face_irrep(&pl.types(), &i.label)?, i.mult)))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| {
                    let factors =
                        pl.types().iter().zip(pl.factor_nodes()).map(|(t, n)| format!("{t} on {n:?}")).join(" x ");
                    Error::Invalid(format!("J = {:?} (W_J = {factors}): {e}", r.j))
                })?;
            faces.push(FaceRestriction { j: r.j.clone(), irreps });
        }
        Ok(RestrictionData { faces })
    }

    pub fn to_records(&self) -> Vec<FaceRecord> {
        self.faces
            .iter()
            .map(|f| FaceRecord {
                j: f.j.clone(),
                irreps: f.irreps.iter().map(|(e, m)| IrrepRecord { label: e.to_string(), mult: *m }).collect(),
            })
            .collect()
    }

    fn pattern(rs: &RootSystem, pick: fn(&[SimpleType]) -> Result<Irrep>) -> Result<RestrictionData> {
        let n = rs.rank();
        let mut faces = Vec::new();
        for k in 0..=n {
            for j in (0..=n).combinations(k) {
                let pl = PseudoLevi::new(rs, &j)?;
                faces.push(FaceRestriction { j, irreps: vec![(pick(&pl.types())?, 1)] });
            }
        }
        Ok(RestrictionData { faces })
    }

    /// The sign character on every face: the Steinberg representation.
    pub fn steinberg(rs: &RootSystem) -> Result<RestrictionData> {
        Self::pattern(rs, Irrep::sgn)
    }

    /// The trivial character on every face: the trivial representation.
    pub fn trivial(rs: &RootSystem) -> Result<RestrictionData> {
        Self::pattern(rs, Irrep::triv)
    }
}

fn maxima<T: Clone + PartialEq>(items: &[T], leq: impl Fn(&T, &T) -> Result<bool>) -> Result<Vec<T>> {
    let mut out = Vec::new();
    for a in items {
        let mut dominated = false;
        for b in items {
            if a != b && leq(a, b)? && !leq(b, a)? {
                dominated = true;
                break;
            }
        }
        if !dominated && !out.contains(a) {
            out.push(a.clone());
        }
    }
    Ok(out)
}

fn finish(mut canonical: Vec<UnramifiedClassInvariant>) -> Result<WavefrontResult> {
    canonical.sort();
    canonical.dedup();
    let orbits: Vec<NilpotentOrbit> = canonical.iter().map(|i| i.orbit.clone()).collect();
    let mut geometric = maxima(&orbits, closure_leq)?;
    geometric.sort_by_key(|o| orbits::enumerate_orbits(o.simple_type()).iter().position(|x| x == o));
    Ok(WavefrontResult { canonical_unramified: canonical, geometric })
}

/// The wavefront set of a module from its restriction data: every face
/// constituent `E` contributes the lift of `𝕆^s(E)`, and the result keeps
/// the maximal contributions.
pub fn local_wf(rs: &RootSystem, data: &RestrictionData) -> Result<WavefrontResult> {
    if rs.rank() > abc::MAX_PAIR_RANK {
        return Err(Error::TooLarge(format!("local wavefront sets for rank {}", rs.rank())));
    }
    let mut contributions = Vec::new();
    for face in &data.faces {
        let pl = PseudoLevi::new(rs, &face.j)?;
        for (e, mult) in &face.irreps {
            if *mult == 0 {
                return Err(Error::Invalid(format!("multiplicity 0 for {e} on J = {:?}", face.j)));
            }
            if e.types() != pl.types() {
                return Err(Error::Invalid(format!("{e} is not a character of W_J for J = {:?}", face.j)));
            }
            let o = weylrep::orbit_s(e)?;
            contributions.push(duality::invariant_of(rs, &pl, &o)?);
        }
    }
    if contributions.is_empty() {
        return Err(Error::Invalid("restriction data is empty".into()));
    }
    contributions.sort();
    contributions.dedup();
    finish(maxima(&contributions, leq_a)?)
}

fn require_adjoint(rs: &RootSystem) -> Result<()> {
    if rs.cartan_type().isogeny != Isogeny::Adjoint {
        return Err(Error::Invalid(format!(
            "the spherical Arthur formula needs an adjoint split group, got {}",
            rs.cartan_type()
        )));
    }
    Ok(())
}

/// Wavefront set of the spherical Arthur representation with parameter
/// `O^∨`: the single invariant `(d(O^∨), O^∨)`.
pub fn arthur_wf(rs: &RootSystem, dual_orbit: &NilpotentOrbit) -> Result<WavefrontResult> {
    require_adjoint(rs)?;
    finish(vec![duality::achar_dual_one(rs, dual_orbit)?])
}

/// Every invariant whose dual orbit lies above `O^∨` sits below
/// `d_A(O^∨, 1)`, and that bound is attained.
pub fn cross_check_arthur(rs: &RootSystem, dual_orbit: &NilpotentOrbit) -> Result<bool> {
    require_adjoint(rs)?;
    let top = duality::achar_dual_one(rs, dual_orbit)?;
    let mut attained = false;
    for c in duality::enumerate_nobc(rs)?.iter() {
        if closure_leq(dual_orbit, &c.invariant.dual_orbit)? {
            if !leq_a(&c.invariant, &top)? {
                return Ok(false);
            }
            attained |= c.invariant == top;
        }
    }
    Ok(attained)
}
