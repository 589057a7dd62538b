//! The Sommers dual of lifted orbits and the pair invariant `(𝕆, d_S)` that
//! separates unramified classes up to Achar's pre-order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::abc::{self, AbcPair, PseudoLevi};
use crate::memo::Memo;
use crate::orbits::{self, enumerate_orbits, G2Label, NilpotentOrbit};
use crate::rootdata::{CartanType, RootSystem};
use crate::weylrep::{self, Irrep};
use crate::{Error, Result};

/// An orbit of G together with an orbit of the dual group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct UnramifiedClassInvariant {
    pub orbit: NilpotentOrbit,
    pub dual_orbit: NilpotentOrbit,
}

fn orbit_position(o: &NilpotentOrbit) -> usize {
    enumerate_orbits(o.simple_type()).iter().position(|x| x == o).expect("orbit is enumerated")
}

impl PartialOrd for UnramifiedClassInvariant {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Enumeration order of the orbit, then of the dual orbit.
impl Ord for UnramifiedClassInvariant {
    fn cmp(&self, other: &Self) -> Ordering {
        (orbit_position(&self.orbit), orbit_position(&self.dual_orbit))
            .cmp(&(orbit_position(&other.orbit), orbit_position(&other.dual_orbit)))
    }
}

impl std::fmt::Display for UnramifiedClassInvariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.orbit, self.dual_orbit)
    }
}

/// `d_S(J, O_J)`: Lusztig–Spaltenstein dual in each factor, its Springer
/// character, truncated induction to W and the Springer orbit of the dual
/// group.
pub fn sommers_dual(rs: &RootSystem, pl: &PseudoLevi, orbits_j: &[NilpotentOrbit]) -> Result<NilpotentOrbit> {
    if pl.subsystem().ambient() != rs.simple_type() {
        return Err(Error::Invalid(format!("pseudo-Levi of {} used in {}", pl.subsystem().ambient(), rs.simple_type())));
    }
    if orbits_j.len() != pl.factors().len() {
        return Err(Error::Invalid(format!("{} factor orbits given for {} factors", orbits_j.len(), pl.factors().len())));
    }
    let mut factors = Vec::new();
    for (f, o) in pl.factors().iter().zip(orbits_j) {
        if o.simple_type() != f.ty {
            return Err(Error::Invalid(format!("orbit {o} is not an orbit of the {} factor", f.ty)));
        }
        let e = weylrep::springer_irrep(&orbits::dual_ls(o)?)?;
        factors.push((f.ty, e.label().cloned().expect("single factor")));
    }
    let e = weylrep::j_induce(pl.subsystem(), &Irrep::new(factors)?)?;
    weylrep::springer_orbit(&weylrep::dual_irrep(&e)).map_err(|err| match err {
        Error::NotFound(m) => Error::Internal(format!("Sommers dual left the Springer image: {m}")),
        other => other,
    })
}

/// `(saturation, d_S)` of a lifted orbit.
pub fn invariant_of(rs: &RootSystem, pl: &PseudoLevi, orbits_j: &[NilpotentOrbit]) -> Result<UnramifiedClassInvariant> {
    Ok(UnramifiedClassInvariant {
        orbit: abc::saturation(rs, pl, orbits_j)?,
        dual_orbit: sommers_dual(rs, pl, orbits_j)?,
    })
}

/// The invariant of the distinguished orbit of a pair.
pub fn pair_invariant(rs: &RootSystem, p: &AbcPair) -> Result<UnramifiedClassInvariant> {
    let pl = PseudoLevi::new(rs, &p.j)?;
    invariant_of(rs, &pl, &abc::pair_orbits(rs, p)?)
}

/// `i1 ≤_A i2`: orbits ordered by closure, dual orbits reversed.
pub fn leq_a(i1: &UnramifiedClassInvariant, i2: &UnramifiedClassInvariant) -> Result<bool> {
    Ok(orbits::closure_leq(&i1.orbit, &i2.orbit)? && orbits::closure_leq(&i2.dual_orbit, &i1.dual_orbit)?)
}

/// An invariant with the number of unramified classes carrying it, and the
/// least pair realising it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantCount {
    pub invariant: UnramifiedClassInvariant,
    pub classes: usize,
    pub representative: AbcPair,
}

static NOBC: Memo<CartanType, Vec<InvariantCount>> = Memo::new();

/// Distinct invariants over all affine Bala–Carter classes, in invariant
/// order.
pub fn enumerate_nobc(rs: &RootSystem) -> Result<Arc<Vec<InvariantCount>>> {
    NOBC.get_or_try(&rs.cartan_type(), || {
        let mut seen: BTreeMap<UnramifiedClassInvariant, (usize, AbcPair)> = BTreeMap::new();
        for c in abc::classes(rs)?.iter() {
            let inv = pair_invariant(rs, &c.representative)?;
            let e = seen.entry(inv).or_insert((0, c.representative.clone()));
            e.0 += 1;
            if c.representative < e.1 {
                e.1 = c.representative.clone();
            }
        }
        Ok(seen
            .into_iter()
            .map(|(invariant, (classes, representative))| InvariantCount { invariant, classes, representative })
            .collect())
    })
}

/// Cover relations of `≤_A` on [`enumerate_nobc`], as index pairs.
pub fn hasse_a(rs: &RootSystem) -> Result<Vec<(usize, usize)>> {
    let all = enumerate_nobc(rs)?;
    let n = all.len();
    let mut lt = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            lt[i][j] = i != j && leq_a(&all[i].invariant, &all[j].invariant)?;
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt[i][j] && !(0..n).any(|k| lt[i][k] && lt[k][j]) {
                edges.push((i, j));
            }
        }
    }
    Ok(edges)
}

/// `d_A(O^∨, 1)` as an invariant: `(d(O^∨), O^∨)`, checked to be realised
/// by some unramified class.
pub fn achar_dual_one(rs: &RootSystem, dual_orbit: &NilpotentOrbit) -> Result<UnramifiedClassInvariant> {
    if dual_orbit.simple_type() != rs.simple_type().dual() {
        return Err(Error::Invalid(format!("{dual_orbit} is not an orbit of the dual of {}", rs.simple_type())));
    }
    let inv = UnramifiedClassInvariant { orbit: orbits::dual_bv(dual_orbit)?, dual_orbit: dual_orbit.clone() };
    if !enumerate_nobc(rs)?.iter().any(|c| c.invariant == inv) {
        return Err(Error::Internal(format!("no unramified class realises {inv}")));
    }
    Ok(inv)
}

/// One row of the parameterisation of unramified G2 classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct G2NocRow {
    pub orbit: NilpotentOrbit,
    /// `1`, `(12)` or `(123)`.
    pub class: String,
    pub dual_orbit: NilpotentOrbit,
    pub representative: AbcPair,
}

/// The seven unramified G2 classes. The conjugacy class name of the
/// component group is read off the dual orbit for the three classes over
/// `G2(a1)`.
pub fn g2_rows() -> Result<Vec<G2NocRow>> {
    let rs = RootSystem::of_type("G2".parse()?);
    let mut rows = Vec::new();
    for c in abc::classes(&rs)?.iter() {
        let inv = pair_invariant(&rs, &c.representative)?;
        let class = match (inv.orbit.g2_label(), inv.dual_orbit.g2_label()) {
            (Some(G2Label::G2a1), Some(G2Label::A1Tilde)) => "(12)",
            (Some(G2Label::G2a1), Some(G2Label::A1)) => "(123)",
            _ => "1",
        };
        rows.push(G2NocRow {
            orbit: inv.orbit,
            class: class.to_string(),
            dual_orbit: inv.dual_orbit,
            representative: c.representative.clone(),
        });
    }
    rows.sort_by_key(|r| (orbit_position(&r.orbit), r.class.clone()));
    Ok(rows)
}
