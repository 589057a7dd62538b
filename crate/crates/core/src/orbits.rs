//! Nilpotent orbits of the supported types.
//!
//! Classical orbits are partitions (with an I/II mark for very even
//! partitions in type D); the five G2 orbits are labels. Everything about the
//! G2 orbits is a literal table, each entry of which is re-derived in the
//! tests.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partitions::{self, OrbitFamily, Partition};
use crate::rootdata::{RootSystem, Series, SimpleType};
use crate::weylrep;
use crate::{linalg, Error, QVector, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum G2Label {
    #[serde(rename = "0")]
    Zero,
    A1,
    #[serde(rename = "~A1")]
    A1Tilde,
    #[serde(rename = "G2(a1)")]
    G2a1,
    G2,
}

impl G2Label {
    pub const ALL: [G2Label; 5] = [G2Label::Zero, G2Label::A1, G2Label::A1Tilde, G2Label::G2a1, G2Label::G2];

    pub fn as_str(self) -> &'static str {
        match self {
            G2Label::Zero => "0",
            G2Label::A1 => "A1",
            G2Label::A1Tilde => "~A1",
            G2Label::G2a1 => "G2(a1)",
            G2Label::G2 => "G2",
        }
    }

    pub fn parse(s: &str) -> Result<G2Label> {
        match s.trim() {
            "0" => Ok(G2Label::Zero),
            "A1" => Ok(G2Label::A1),
            "~A1" | "A1~" | "Ã1" | "At1" => Ok(G2Label::A1Tilde),
            "G2(a1)" | "G2a1" => Ok(G2Label::G2a1),
            "G2" => Ok(G2Label::G2),
            _ => Err(Error::Invalid(format!("unknown G2 orbit '{s}'"))),
        }
    }

    /// Weighted Dynkin diagram, first node long.
    fn wdd(self) -> [u8; 2] {
        match self {
            G2Label::Zero => [0, 0],
            G2Label::A1 => [1, 0],
            G2Label::A1Tilde => [0, 1],
            G2Label::G2a1 => [2, 0],
            G2Label::G2 => [2, 2],
        }
    }

    fn dual_ls(self) -> G2Label {
        match self {
            G2Label::Zero => G2Label::G2,
            G2Label::A1 | G2Label::A1Tilde | G2Label::G2a1 => G2Label::G2a1,
            G2Label::G2 => G2Label::Zero,
        }
    }
}

/// Label distinguishing the two orbits attached to a very even partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Mark {
    I,
    II,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitData {
    Partition(Partition),
    G2(G2Label),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NilpotentOrbit {
    ty: SimpleType,
    data: OrbitData,
    mark: Option<Mark>,
}

/// Values of the simple roots on the neutral element of an sl2-triple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightedDynkin(pub Vec<u8>);

impl fmt::Display for WeightedDynkin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&s.join(""))
    }
}

pub fn family(ty: SimpleType) -> Option<OrbitFamily> {
    let n = ty.rank();
    match ty.series() {
        Series::A => Some(OrbitFamily::A(n)),
        Series::B => Some(OrbitFamily::B(n)),
        Series::C => Some(OrbitFamily::C(n)),
        Series::D => Some(OrbitFamily::D(n)),
        Series::G => None,
    }
}

pub fn is_very_even(ty: SimpleType, p: &Partition) -> bool {
    ty.series() == Series::D && p.parts().iter().all(|&x| x % 2 == 0) && {
        let mut ok = true;
        for &x in p.parts() {
            ok &= p.multiplicity(x).is_multiple_of(2);
        }
        ok
    }
}

impl NilpotentOrbit {
    pub fn classical(ty: SimpleType, p: Partition, mark: Option<Mark>) -> Result<NilpotentOrbit> {
        let fam = family(ty).ok_or_else(|| Error::Invalid(format!("{ty} orbits are labels, not partitions")))?;
        if !partitions::valid(&p, fam)? {
            return Err(Error::Invalid(format!("{p} is not a valid {ty} partition")));
        }
        if is_very_even(ty, &p) != mark.is_some() {
            return Err(Error::Invalid(format!(
                "{ty} orbit {p}: mark must be given exactly for very even partitions"
            )));
        }
        Ok(NilpotentOrbit { ty, data: OrbitData::Partition(p), mark })
    }

    pub fn g2(label: G2Label) -> NilpotentOrbit {
        NilpotentOrbit { ty: SimpleType::new(Series::G, 2).unwrap(), data: OrbitData::G2(label), mark: None }
    }

    /// Parse the CLI spelling: `3,2,2`, `4,4:I`, `G2(a1)`.
    pub fn parse(ty: SimpleType, s: &str) -> Result<NilpotentOrbit> {
        if ty.series() == Series::G {
            return Ok(NilpotentOrbit::g2(G2Label::parse(s)?));
        }
        let (body, mark) = match s.trim().rsplit_once(':') {
            Some((b, "I")) => (b, Some(Mark::I)),
            Some((b, "II")) => (b, Some(Mark::II)),
            Some(_) => return Err(Error::Invalid(format!("bad mark in '{s}'"))),
            None => (s, None),
        };
        NilpotentOrbit::classical(ty, body.parse()?, mark)
    }

    pub fn zero(ty: SimpleType) -> NilpotentOrbit {
        enumerate_orbits(ty).swap_remove(0)
    }

    pub fn regular(ty: SimpleType) -> NilpotentOrbit {
        enumerate_orbits(ty).pop().unwrap()
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn data(&self) -> &OrbitData {
        &self.data
    }

    pub fn partition(&self) -> Option<&Partition> {
        match &self.data {
            OrbitData::Partition(p) => Some(p),
            OrbitData::G2(_) => None,
        }
    }

    pub fn g2_label(&self) -> Option<G2Label> {
        match self.data {
            OrbitData::G2(l) => Some(l),
            OrbitData::Partition(_) => None,
        }
    }

    pub fn mark(&self) -> Option<Mark> {
        self.mark
    }
}

impl NilpotentOrbit {
    /// The form accepted by [`NilpotentOrbit::parse`]: `3,2,2`, `4,4:I`,
    /// `G2(a1)`.
    pub fn spelling(&self) -> String {
        match &self.data {
            OrbitData::G2(l) => l.as_str().to_string(),
            OrbitData::Partition(p) => match self.mark {
                Some(Mark::I) => format!("{p}:I"),
                Some(Mark::II) => format!("{p}:II"),
                None => p.to_string(),
            },
        }
    }
}

impl Serialize for NilpotentOrbit {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.spelling())
    }
}

impl fmt::Display for NilpotentOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.data {
            OrbitData::G2(l) => f.write_str(l.as_str()),
            OrbitData::Partition(p) => {
                write!(f, "[{p}]")?;
                match self.mark {
                    Some(Mark::I) => f.write_str("I"),
                    Some(Mark::II) => f.write_str("II"),
                    None => Ok(()),
                }
            }
        }
    }
}

/// All orbits, zero orbit first and regular orbit last; ascending
/// lexicographic order on partitions, mark I before mark II.
pub fn enumerate_orbits(ty: SimpleType) -> Vec<NilpotentOrbit> {
    let Some(fam) = family(ty) else {
        return G2Label::ALL.iter().map(|&l| NilpotentOrbit::g2(l)).collect();
    };
    let mut out = Vec::new();
    for p in partitions::valid_partitions(fam).into_iter().rev() {
        if is_very_even(ty, &p) {
            out.push(NilpotentOrbit { ty, data: OrbitData::Partition(p.clone()), mark: Some(Mark::I) });
            out.push(NilpotentOrbit { ty, data: OrbitData::Partition(p), mark: Some(Mark::II) });
        } else {
            out.push(NilpotentOrbit { ty, data: OrbitData::Partition(p), mark: None });
        }
    }
    out
}

fn same_type(o1: &NilpotentOrbit, o2: &NilpotentOrbit) -> Result<()> {
    if o1.ty != o2.ty {
        return Err(Error::Invalid(format!("orbits of different types {} and {}", o1.ty, o2.ty)));
    }
    Ok(())
}

/// Closure order: dominance of partitions, the chain for G2. The two orbits
/// of a very even partition are incomparable.
pub fn closure_leq(o1: &NilpotentOrbit, o2: &NilpotentOrbit) -> Result<bool> {
    same_type(o1, o2)?;
    match (&o1.data, &o2.data) {
        (OrbitData::G2(a), OrbitData::G2(b)) => Ok(a <= b),
        (OrbitData::Partition(p), OrbitData::Partition(q)) => {
            if p == q {
                return Ok(o1.mark == o2.mark);
            }
            partitions::dominance_leq(p, q)
        }
        _ => Err(Error::Internal("mixed orbit data".into())),
    }
}

/// Cover relations of the closure order, as index pairs into
/// [`enumerate_orbits`] (smaller first).
pub fn hasse_edges(ty: SimpleType) -> Vec<(usize, usize)> {
    let orbits = enumerate_orbits(ty);
    let n = orbits.len();
    let lt = |i: usize, j: usize| i != j && closure_leq(&orbits[i], &orbits[j]).unwrap() && orbits[i] != orbits[j];
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// The ε-coordinates of the neutral element `h` for a classical orbit.
fn classical_h(ty: SimpleType, p: &Partition, mark: Option<Mark>) -> Vec<i64> {
    let mut vals: Vec<i64> = Vec::new();
    for &part in p.parts() {
        let part = part as i64;
        vals.extend((0..part).map(|k| part - 1 - 2 * k));
    }
    vals.sort_unstable_by(|a, b| b.cmp(a));
    let n = ty.rank();
    match ty.series() {
        Series::A => vals,
        _ => {
            let mut h: Vec<i64> = vals[..n].to_vec();
            if mark == Some(Mark::II) {
                h[n - 1] = -h[n - 1];
            }
            h
        }
    }
}

pub fn weighted_dynkin(o: &NilpotentOrbit) -> WeightedDynkin {
    match &o.data {
        OrbitData::G2(l) => WeightedDynkin(l.wdd().to_vec()),
        OrbitData::Partition(p) => {
            let h = classical_h(o.ty, p, o.mark);
            let wdd = o
                .ty
                .ambient_simple_roots()
                .iter()
                .map(|a| a.iter().zip(&h).map(|(x, y)| x * y).sum::<i64>() as u8)
                .collect();
            WeightedDynkin(wdd)
        }
    }
}

/// The neutral element of `o` as a dominant point of V (simple-coroot
/// coordinates).
pub fn neutral_element(rs: &RootSystem, o: &NilpotentOrbit) -> QVector {
    h_from_wdd(rs, &weighted_dynkin(o))
}

/// The point of V on which the simple roots take the given values.
pub fn h_from_wdd(rs: &RootSystem, wdd: &WeightedDynkin) -> QVector {
    let c = linalg::to_rational(rs.cartan_matrix());
    let rhs: QVector = wdd.0.iter().map(|&x| Rational::from_integer(i64::from(x))).collect();
    linalg::solve(&c, &rhs).expect("Cartan matrix is invertible")
}

pub fn orbit_from_wdd(ty: SimpleType, wdd: &WeightedDynkin) -> Result<NilpotentOrbit> {
    enumerate_orbits(ty)
        .into_iter()
        .find(|o| &weighted_dynkin(o) == wdd)
        .ok_or_else(|| Error::NotFound(format!("no {ty} orbit with weighted Dynkin diagram {wdd}")))
}

/// `dim O = |Φ| − #{α : α(h) ∈ {0, 1}}`, counting over all roots.
pub fn orbit_dimension(o: &NilpotentOrbit) -> usize {
    let rs = RootSystem::of_type(o.ty);
    let wdd = weighted_dynkin(o);
    rs.roots()
        .iter()
        .filter(|r| {
            let v: i64 = r.iter().zip(&wdd.0).map(|(a, &b)| a * i64::from(b)).sum();
            v != 0 && v != 1
        })
        .count()
}

/// Lusztig–Spaltenstein duality on the orbits of one group.
pub fn dual_ls(o: &NilpotentOrbit) -> Result<NilpotentOrbit> {
    let ty = o.ty;
    match &o.data {
        OrbitData::G2(l) => Ok(NilpotentOrbit::g2(l.dual_ls())),
        OrbitData::Partition(p) => {
            let fam = family(ty).unwrap();
            let q = partitions::collapse(&partitions::transpose(p), fam)?;
            finish_partition(ty, q, || dual_ls_via_springer(o))
        }
    }
}

/// Barbasch–Vogan duality: an orbit of the dual group to a special orbit of
/// the group whose dual contains `o`.
pub fn dual_bv(o: &NilpotentOrbit) -> Result<NilpotentOrbit> {
    let target = o.ty.dual();
    match &o.data {
        OrbitData::G2(l) => Ok(NilpotentOrbit::g2(l.dual_ls())),
        OrbitData::Partition(p) => {
            let t = partitions::transpose(p);
            let fam = family(target).unwrap();
            let q = match o.ty.series() {
                Series::C => partitions::collapse(&t.plus(), fam)?,
                Series::B => partitions::collapse(&t.minus(), fam)?,
                _ => partitions::collapse(&t, fam)?,
            };
            finish_partition(target, q, || dual_bv_via_springer(o))
        }
    }
}

/// Attach the mark to a very even result using the representation-theoretic
/// route, after checking that both routes agree on the partition.
fn finish_partition(
    ty: SimpleType,
    q: Partition,
    route: impl FnOnce() -> Result<NilpotentOrbit>,
) -> Result<NilpotentOrbit> {
    if !is_very_even(ty, &q) {
        return NilpotentOrbit::classical(ty, q, None);
    }
    let r = route()?;
    if r.partition() != Some(&q) {
        return Err(Error::Internal(format!("duality routes disagree: [{q}] vs {r}")));
    }
    Ok(r)
}

/// `d_LS(O)` as the Springer orbit of the special representation in the
/// family of `Springer(O) ⊗ sgn`.
pub fn dual_ls_via_springer(o: &NilpotentOrbit) -> Result<NilpotentOrbit> {
    let e = weylrep::springer_irrep(o)?;
    let mut v = weylrep::orbit_s(&e)?;
    Ok(v.remove(0))
}

/// `d(O^∨)` through the Springer correspondence of the dual group.
pub fn dual_bv_via_springer(o: &NilpotentOrbit) -> Result<NilpotentOrbit> {
    let e = weylrep::dual_irrep(&weylrep::springer_irrep(o)?);
    let mut v = weylrep::orbit_s(&e)?;
    Ok(v.remove(0))
}

pub fn is_special(o: &NilpotentOrbit) -> Result<bool> {
    Ok(&dual_ls(&dual_ls(o)?)? == o)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    fn orb(t: &str, s: &str) -> NilpotentOrbit {
        NilpotentOrbit::parse(ty(t), s).unwrap()
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_orbits(ty("G2")).len(), 5);
        let a2: Vec<String> = enumerate_orbits(ty("A2")).iter().map(|o| o.to_string()).collect();
        assert_eq!(a2, vec!["[1,1,1]", "[2,1]", "[3]"]);
        assert_eq!(enumerate_orbits(ty("B3")).len(), 7);
        // D4: 10 partitions, two of them very even
        assert_eq!(enumerate_orbits(ty("D4")).len(), 12);
    }

    #[test]
    fn b3_count_by_recursive_generation() {
        // independent count: partitions of 7 built part by part, parity rule
        // checked on the finished list
        fn gen(rest: usize, max: usize, cur: &mut Vec<usize>, count: &mut usize) {
            if rest == 0 {
                let ok = cur.iter().filter(|&&x| x % 2 == 0).all(|&x| cur.iter().filter(|&&y| y == x).count() % 2 == 0);
                *count += usize::from(ok);
                return;
            }
            for k in 1..=rest.min(max) {
                cur.push(k);
                gen(rest - k, k, cur, count);
                cur.pop();
            }
        }
        let mut count = 0;
        gen(7, 7, &mut Vec::new(), &mut count);
        assert_eq!(enumerate_orbits(ty("B3")).len(), count);
    }

    #[test]
    fn wdd_examples() {
        for t in ["A3", "B3", "C3", "D4", "G2"] {
            let z = NilpotentOrbit::zero(ty(t));
            assert!(weighted_dynkin(&z).0.iter().all(|&x| x == 0));
            let r = NilpotentOrbit::regular(ty(t));
            assert!(weighted_dynkin(&r).0.iter().all(|&x| x == 2));
        }
        assert_eq!(weighted_dynkin(&orb("B2", "2,2,1")).0, vec![0, 1]);
        assert_eq!(weighted_dynkin(&orb("D4", "4,4:I")).0, vec![0, 2, 0, 2]);
        assert_eq!(weighted_dynkin(&orb("D4", "4,4:II")).0, vec![0, 2, 2, 0]);
    }

    #[test]
    fn wdd_is_injective_and_round_trips() {
        for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2"] {
            let all = enumerate_orbits(ty(t));
            for o in &all {
                assert_eq!(&orbit_from_wdd(ty(t), &weighted_dynkin(o)).unwrap(), o, "{t} {o}");
            }
        }
    }

    #[test]
    fn wdd_matches_dominant_h() {
        // h from the partition, pushed through V and re-dominated
        for t in ["B3", "C3", "D4"] {
            let rs = RootSystem::of_type(ty(t));
            for o in enumerate_orbits(ty(t)) {
                let h = neutral_element(&rs, &o);
                let d = crate::rootdata::dominant_conjugate(&rs, &h);
                assert_eq!(d, h, "{t} {o}");
            }
        }
    }

    #[test]
    fn g2_dimensions_and_chain() {
        assert_eq!(orbit_dimension(&NilpotentOrbit::g2(G2Label::A1)), 6);
        assert_eq!(orbit_dimension(&NilpotentOrbit::g2(G2Label::A1Tilde)), 8);
        assert_eq!(orbit_dimension(&NilpotentOrbit::g2(G2Label::G2a1)), 10);
        assert_eq!(orbit_dimension(&NilpotentOrbit::g2(G2Label::G2)), 12);
        assert!(closure_leq(&NilpotentOrbit::g2(G2Label::A1), &NilpotentOrbit::g2(G2Label::A1Tilde)).unwrap());
    }

    #[test]
    fn very_even_siblings_are_incomparable() {
        let i = orb("D4", "4,4:I");
        let ii = orb("D4", "4,4:II");
        assert!(!closure_leq(&i, &ii).unwrap());
        assert!(!closure_leq(&ii, &i).unwrap());
        assert!(closure_leq(&i, &i).unwrap());
        assert!(closure_leq(&orb("D4", "3,3,1,1"), &i).unwrap());
        assert!(closure_leq(&orb("A2", "2,1"), &orb("B2", "5")).is_err());
    }

    #[test]
    fn hasse_a3() {
        assert_eq!(hasse_edges(ty("A3")).len(), 4);
    }

    #[test]
    fn d_ls_examples() {
        assert_eq!(dual_ls(&orb("B3", "3,2,2")).unwrap(), orb("B3", "3,3,1"));
        for t in ["A3", "B3", "C3", "D4", "G2"] {
            let z = NilpotentOrbit::zero(ty(t));
            let r = NilpotentOrbit::regular(ty(t));
            assert_eq!(dual_ls(&z).unwrap(), r);
            assert_eq!(dual_ls(&r).unwrap(), z);
        }
    }

    #[test]
    fn d_bv_examples() {
        assert_eq!(dual_bv(&NilpotentOrbit::g2(G2Label::G2a1)).unwrap(), NilpotentOrbit::g2(G2Label::G2a1));
        assert_eq!(dual_bv(&orb("C2", "1,1,1,1")).unwrap(), orb("B2", "5"));
        assert_eq!(dual_bv(&orb("C2", "2,2")).unwrap(), orb("B2", "3,1,1"));
        assert_eq!(dual_bv(&orb("B2", "3,1,1")).unwrap(), orb("C2", "2,2"));
        for n in 1..=8 {
            let t = SimpleType::new(Series::A, n).unwrap();
            for o in enumerate_orbits(t) {
                let d = dual_bv(&o).unwrap();
                assert_eq!(d.partition().unwrap(), &o.partition().unwrap().transpose());
            }
        }
    }

    #[test]
    fn dualities_agree_with_springer_route() {
        for t in ["A3", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "G2"] {
            for o in enumerate_orbits(ty(t)) {
                assert_eq!(dual_ls(&o).unwrap(), dual_ls_via_springer(&o).unwrap(), "d_LS {t} {o}");
                assert_eq!(dual_bv(&o).unwrap(), dual_bv_via_springer(&o).unwrap(), "d {t} {o}");
            }
        }
    }

    #[test]
    fn duality_properties() {
        for t in ["A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2"] {
            let all = enumerate_orbits(ty(t));
            for o in &all {
                let d = dual_ls(o).unwrap();
                assert!(is_special(&d).unwrap(), "{t} {o}");
                assert_eq!(dual_ls(&dual_ls(&d).unwrap()).unwrap(), d);
                assert!(is_special(&dual_bv(o).unwrap()).unwrap());
                for o2 in &all {
                    if closure_leq(o, o2).unwrap() {
                        assert!(closure_leq(&dual_ls(o2).unwrap(), &d).unwrap(), "{t} {o} {o2}");
                        assert!(closure_leq(&dual_bv(o2).unwrap(), &dual_bv(o).unwrap()).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn g2_special_orbits() {
        let special: Vec<G2Label> = G2Label::ALL
            .iter()
            .copied()
            .filter(|&l| is_special(&NilpotentOrbit::g2(l)).unwrap())
            .collect();
        assert_eq!(special, vec![G2Label::Zero, G2Label::G2a1, G2Label::G2]);
    }
}
