//! The Springer correspondence for the trivial local system, and the map
//! `E ↦ 𝕆^s(E)`.

use std::collections::HashMap;
use std::sync::Arc;

use super::characters::{char_table, G2Char, Label};
use super::induction::{j_induce, RootSubsystem};
use super::{families, Irrep};
use crate::memo::Memo;
use crate::orbits::{self, G2Label, NilpotentOrbit, OrbitData};
use crate::partitions::Partition;
use crate::rootdata::{RootSystem, Series, SimpleType};
use crate::{Error, Result};

fn g2_springer(l: G2Label) -> G2Char {
    match l {
        G2Label::Zero => G2Char::Phi16,
        G2Label::A1 => G2Char::Phi13pp,
        G2Label::A1Tilde => G2Char::Phi22,
        G2Label::G2a1 => G2Char::Phi21,
        G2Label::G2 => G2Char::Phi10,
    }
}

/// Split the shifted parts of `p` by parity: entries of parity `top_parity`
/// go to the first row. Returns the two rows with the shift removed.
fn split_by_parity(p: &Partition, want_odd_count: bool, top_parity: usize) -> (Partition, Partition) {
    let mut parts: Vec<usize> = p.parts().iter().rev().copied().collect();
    if (parts.len() % 2 == 1) != want_odd_count {
        parts.insert(0, 0);
    }
    let shifted: Vec<usize> = parts.iter().enumerate().map(|(i, &x)| x + i).collect();
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for x in shifted {
        if x % 2 == top_parity {
            top.push(x / 2);
        } else {
            bottom.push(x / 2);
        }
    }
    let unshift = |row: Vec<usize>| Partition::new(row.iter().enumerate().map(|(i, &x)| x - i).collect());
    (unshift(top), unshift(bottom))
}

/// The character of `W` attached to `o` and the trivial local system.
pub fn springer_label(o: &NilpotentOrbit) -> Result<Label> {
    let ty = o.simple_type();
    let p = match o.data() {
        OrbitData::G2(l) => return Ok(Label::G2(g2_springer(*l))),
        OrbitData::Partition(p) => p,
    };
    match ty.series() {
        Series::A => Ok(Label::A(p.clone())),
        Series::C => {
            let (l, m) = split_by_parity(p, true, 0);
            Ok(Label::BC(l, m))
        }
        Series::B => {
            let (l, m) = split_by_parity(p, true, 1);
            Ok(Label::BC(l, m))
        }
        Series::D => {
            let (l, m) = split_by_parity(p, false, 0);
            let (l, m) = if l >= m { (l, m) } else { (m, l) };
            if l != m {
                return Ok(Label::D(l, m, None));
            }
            // very even: the orbit is Richardson for the Levi cut out by the
            // zero set of its even weighted Dynkin diagram
            let rs = RootSystem::of_type(ty);
            let wdd = orbits::weighted_dynkin(o);
            let zeros: Vec<usize> = (0..ty.rank()).filter(|&i| wdd.0[i] == 0).collect();
            let sub = RootSubsystem::new(&rs, &zeros)?;
            let e = j_induce(&sub, &Irrep::sgn(&sub.types())?)?;
            let label = e.label().cloned().expect("j-induction lands in W");
            match &label {
                Label::D(a, b, Some(_)) if *a == l && *b == m => Ok(label),
                _ => Err(Error::Internal(format!("very even orbit {o} induced to {label}"))),
            }
        }
        Series::G => unreachable!("G2 orbits carry labels"),
    }
}

pub fn springer_irrep(o: &NilpotentOrbit) -> Result<Irrep> {
    Irrep::simple(o.simple_type(), springer_label(o)?)
}

static INVERSE: Memo<SimpleType, HashMap<Label, NilpotentOrbit>> = Memo::new();

fn inverse_table(ty: SimpleType) -> Result<Arc<HashMap<Label, NilpotentOrbit>>> {
    INVERSE.get_or_try(&ty, || {
        let mut map = HashMap::new();
        for o in orbits::enumerate_orbits(ty) {
            let l = springer_label(&o)?;
            if let Some(prev) = map.insert(l.clone(), o.clone()) {
                return Err(Error::Internal(format!("{prev} and {o} both have Springer character {l}")));
            }
        }
        if ty.series() == Series::G {
            // the one G2 character attached to a non-trivial local system
            map.insert(Label::G2(G2Char::Phi13p), NilpotentOrbit::g2(G2Label::G2a1));
        }
        Ok(map)
    })
}

/// The orbit whose Springer character is `label`.
pub fn springer_orbit_of(ty: SimpleType, label: &Label) -> Result<NilpotentOrbit> {
    inverse_table(ty)?.get(label).cloned().ok_or_else(|| {
        Error::NotFound(format!("{label} is not attached to a trivial local system in W({ty})"))
    })
}

/// [`springer_orbit_of`] for a character of an irreducible Weyl group.
pub fn springer_orbit(e: &Irrep) -> Result<NilpotentOrbit> {
    match e.factors() {
        [(ty, l)] => springer_orbit_of(*ty, l),
        _ => Err(Error::Invalid(format!("{e} is not a character of an irreducible Weyl group"))),
    }
}

/// `𝕆^s(E)`: the Springer orbit of the special character in the family of
/// `E ⊗ sgn`, one orbit per factor.
pub fn orbit_s(e: &Irrep) -> Result<Vec<NilpotentOrbit>> {
    e.factors()
        .iter()
        .map(|(ty, l)| {
            let t = char_table(*ty)?;
            let fam = families(*ty)?;
            let i = t.label_index(l).ok_or_else(|| Error::Invalid(format!("unknown label {l}")))?;
            let s = fam.special_of(fam.family_of(t.tensor_sgn(i)));
            springer_orbit_of(*ty, t.label(s))
        })
        .collect()
}
