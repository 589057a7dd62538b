//! Affine Bala–Carter data.
//!
//! A pair `(J, J′)` consists of a proper subset `J` of the affine simple
//! roots and a distinguished subset `J′ ⊆ J`. Nodes are numbered like
//! [`RootSystem::affine_simples`]: node 0 is `1 − θ`, node `i` is `α_i`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::linalg::{self, Matrix};
use crate::memo::Memo;
use crate::orbits::{self, NilpotentOrbit, WeightedDynkin};
use crate::rootdata::{dominant_conjugate, weyl_group, AlcoveSymmetry, CartanType, RootSystem, SimpleType};
use crate::weylrep::{RootSubsystem, SubsystemFactor};
use crate::{Error, QVector, Rational, Result};

/// Largest rank for which pairs are enumerated.
pub const MAX_PAIR_RANK: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbcPair {
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    #[serde(rename = "Jprime")]
    pub jprime: Vec<usize>,
}

impl AbcPair {
    pub fn new(mut j: Vec<usize>, mut jprime: Vec<usize>) -> AbcPair {
        j.sort_unstable();
        j.dedup();
        jprime.sort_unstable();
        jprime.dedup();
        AbcPair { j, jprime }
    }
}

fn fmt_nodes(v: &[usize]) -> String {
    format!("{{{}}}", v.iter().map(|i| format!("a{i}")).join(","))
}

impl fmt::Display for AbcPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_nodes(&self.j), fmt_nodes(&self.jprime))
    }
}

/// Index of the root that is the linear part of an affine node.
pub fn linear_part(rs: &RootSystem, node: usize) -> usize {
    if node == 0 {
        rs.negative(rs.highest_root())
    } else {
        node - 1
    }
}

fn offset(node: usize) -> i64 {
    i64::from(node == 0)
}

/// The pseudo-Levi subsystem `Φ_J` with basis the linear parts of `J`.
/// `nodes[k][i]` is the affine node playing the `i`-th simple root of factor
/// `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoLevi {
    sub: RootSubsystem,
    nodes: Vec<Vec<usize>>,
}

impl PseudoLevi {
    pub fn new(rs: &RootSystem, j: &[usize]) -> Result<PseudoLevi> {
        let n = rs.rank();
        if j.iter().any(|&x| x > n) {
            return Err(Error::Invalid(format!("node out of range in {j:?}")));
        }
        if j.len() > n {
            return Err(Error::Invalid(format!("J = {j:?} must be a proper subset of the affine diagram")));
        }
        let roots: Vec<usize> = j.iter().map(|&x| linear_part(rs, x)).collect();
        let sub = RootSubsystem::new(rs, &roots)?;
        let node_of: HashMap<usize, usize> = j.iter().map(|&x| (linear_part(rs, x), x)).collect();
        let nodes = sub.factors().iter().map(|f| f.roots.iter().map(|r| node_of[r]).collect()).collect();
        Ok(PseudoLevi { sub, nodes })
    }

    pub fn subsystem(&self) -> &RootSubsystem {
        &self.sub
    }

    pub fn factors(&self) -> &[SubsystemFactor] {
        self.sub.factors()
    }

    pub fn types(&self) -> Vec<SimpleType> {
        self.sub.types()
    }

    pub fn factor_nodes(&self) -> &[Vec<usize>] {
        &self.nodes
    }
}

/// Number of roots of `ty` on which the labelling takes each value.
fn value_counts(ty: SimpleType, labels: &[i64]) -> BTreeMap<i64, usize> {
    let rs = RootSystem::of_type(ty);
    let mut out = BTreeMap::new();
    for r in rs.roots() {
        let v: i64 = r.iter().zip(labels).map(|(a, b)| a * b).sum();
        *out.entry(v).or_default() += 1;
    }
    out
}

/// `J′` is distinguished in `J`: with labels 0 on `J′` and 2 elsewhere, each
/// factor has `rank + #{value 0} = #{value 2}`.
pub fn is_distinguished(pl: &PseudoLevi, jprime: &[usize]) -> bool {
    pl.factors().iter().zip(pl.factor_nodes()).all(|(f, nodes)| {
        let labels: Vec<i64> = nodes.iter().map(|x| if jprime.contains(x) { 0 } else { 2 }).collect();
        let c = value_counts(f.ty, &labels);
        let get = |k: i64| c.get(&k).copied().unwrap_or(0);
        f.ty.rank() + get(0) == get(2)
    })
}

fn check_rank(rs: &RootSystem) -> Result<()> {
    if rs.rank() > MAX_PAIR_RANK {
        return Err(Error::TooLarge(format!("affine Bala–Carter pairs for rank {} (cap {MAX_PAIR_RANK})", rs.rank())));
    }
    Ok(())
}

/// All pairs, ordered by `J` then `J′`.
pub fn enumerate_pairs(rs: &RootSystem) -> Result<Vec<AbcPair>> {
    check_rank(rs)?;
    let n = rs.rank();
    let mut out = Vec::new();
    for k in 0..=n {
        for j in (0..=n).combinations(k) {
            let pl = PseudoLevi::new(rs, &j)?;
            for kp in 0..=k {
                for jp in j.iter().copied().combinations(kp) {
                    if is_distinguished(&pl, &jp) {
                        out.push(AbcPair::new(j.clone(), jp));
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The distinguished orbit of each factor of `Φ_J`: the one whose weighted
/// Dynkin diagram is the 0/2 labelling.
pub fn pair_orbits(rs: &RootSystem, p: &AbcPair) -> Result<Vec<NilpotentOrbit>> {
    let pl = PseudoLevi::new(rs, &p.j)?;
    pl.factors()
        .iter()
        .zip(pl.factor_nodes())
        .map(|(f, nodes)| {
            let wdd = WeightedDynkin(nodes.iter().map(|x| if p.jprime.contains(x) { 0 } else { 2 }).collect());
            orbits::orbit_from_wdd(f.ty, &wdd).map_err(|_| Error::Internal(format!("{p} is not distinguished")))
        })
        .collect()
}

/// `base_point + span(direction)`, with `direction` a basis of its lattice of
/// integral points, given in X_* coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSubspace {
    pub base_point: QVector,
    pub direction: Vec<Vec<i64>>,
}

impl AffineSubspace {
    pub fn dim(&self) -> usize {
        self.direction.len()
    }
}

/// Common zero set of the affine roots in `J`. The base point is the
/// barycentre of the face of the fundamental alcove that it contains.
pub fn face_hull(rs: &RootSystem, j: &[usize]) -> Result<AffineSubspace> {
    let n = rs.rank();
    if j.len() > n || j.iter().any(|&x| x > n) {
        return Err(Error::Invalid(format!("J = {j:?} is not a proper subset of the affine diagram")));
    }
    let verts = rs.alcove_vertices();
    let face: Vec<&QVector> = (0..=n).filter(|i| !j.contains(i)).map(|i| &verts[i]).collect();
    let k = Rational::from_integer(face.len() as i64);
    let base_point: QVector = (0..n).map(|c| face.iter().map(|v| v[c]).sum::<Rational>() / k).collect();
    for &x in j {
        let v = rs.root_value(linear_part(rs, x), &base_point) + Rational::from_integer(offset(x));
        if v != Rational::from_integer(0) {
            return Err(Error::Internal(format!("face of {j:?} misses its walls")));
        }
    }
    let rows: Vec<Vec<i64>> = j.iter().map(|&x| rs.root_on_xstar(linear_part(rs, x))).collect();
    let direction = if rows.is_empty() {
        (0..n).map(|i| (0..n).map(|c| i64::from(c == i)).collect()).collect()
    } else {
        linalg::integer_kernel(&Matrix::from_rows(&rows))
    };
    Ok(AffineSubspace { base_point, direction })
}

/// An `x ∈ X_*` with `β(x) = rhs_β` for the given roots, in X_* coordinates.
fn solve_translation(rs: &RootSystem, roots: &[usize], rhs: &[Rational]) -> Option<Vec<i64>> {
    if roots.is_empty() {
        return Some(vec![0; rs.rank()]);
    }
    let rows: Vec<Vec<i64>> = roots.iter().map(|&r| rs.root_on_xstar(r)).collect();
    linalg::solve_integer(&Matrix::from_rows(&rows), rhs)
}

/// Is there `w ∈ W`, `x ∈ X_*` with `w · hull(J1) + x = hull(J2)`?
pub fn hulls_equivalent(rs: &RootSystem, j1: &[usize], j2: &[usize]) -> Result<bool> {
    let (h1, h2) = (face_hull(rs, j1)?, face_hull(rs, j2)?);
    if h1.dim() != h2.dim() {
        return Ok(false);
    }
    let w = weyl_group(rs)?;
    let lin2: Vec<usize> = j2.iter().map(|&x| linear_part(rs, x)).collect();
    // the annihilator of each direction is spanned by the linear parts
    let span = |roots: &[usize]| {
        let rows: Vec<Vec<Rational>> =
            roots.iter().map(|&r| rs.roots()[r].iter().map(|&c| Rational::from_integer(c)).collect()).collect();
        if rows.is_empty() {
            return (Vec::new(), 0);
        }
        let (m, piv) = linalg::rref(&Matrix::from_rows(&rows));
        (m.to_rows().into_iter().take(piv.len()).collect::<Vec<_>>(), piv.len())
    };
    let target = span(&lin2);
    for u in 0..w.order() {
        let moved: Vec<usize> = j1.iter().map(|&x| w.act_on_root(u, linear_part(rs, x))).collect();
        if span(&moved) != target {
            continue;
        }
        let wb = w.act_on_vector(u, &h1.base_point);
        let rhs: Vec<Rational> = lin2.iter().map(|&r| rs.root_value(r, &h2.base_point) - rs.root_value(r, &wb)).collect();
        if solve_translation(rs, &lin2, &rhs).is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `(J1, J1′) ∼ (J2, J2′)`: some `w = t_x u` in the extended affine Weyl
/// group carries `J1` onto `J2` and `J1′` onto `J2′`. With
/// `w · (β, k) = (uβ, k − (uβ)(x))`, this asks for `u ∈ W` matching the
/// linear parts and an `x ∈ X_*` fixing the offsets.
pub fn equivalent(rs: &RootSystem, p1: &AbcPair, p2: &AbcPair) -> Result<bool> {
    if p1.j.len() != p2.j.len() || p1.jprime.len() != p2.jprime.len() {
        return Ok(false);
    }
    if p1 == p2 {
        return Ok(true);
    }
    let w = weyl_group(rs)?;
    let by_root2: HashMap<usize, usize> = p2.j.iter().map(|&x| (linear_part(rs, x), x)).collect();
    for u in 0..w.order() {
        let mut images = Vec::with_capacity(p1.j.len());
        for &x in &p1.j {
            let r = w.act_on_root(u, linear_part(rs, x));
            match by_root2.get(&r) {
                Some(&y) if p1.jprime.contains(&x) == p2.jprime.contains(&y) => images.push((x, r, y)),
                _ => break,
            }
        }
        if images.len() != p1.j.len() {
            continue;
        }
        let roots: Vec<usize> = images.iter().map(|t| t.1).collect();
        let rhs: Vec<Rational> = images.iter().map(|&(x, _, y)| Rational::from_integer(offset(x) - offset(y))).collect();
        if solve_translation(rs, &roots, &rhs).is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Image of a pair under an element of Ω.
pub fn act_on_pair(sym: &AlcoveSymmetry, p: &AbcPair) -> AbcPair {
    AbcPair::new(
        p.j.iter().map(|&x| sym.node_perm[x]).collect(),
        p.jprime.iter().map(|&x| sym.node_perm[x]).collect(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairClass {
    pub representative: AbcPair,
    pub members: Vec<AbcPair>,
}

static CLASSES: Memo<CartanType, Vec<PairClass>> = Memo::new();

/// Invariant of a pair under ∼: factor types with the size of `J′` in each.
fn bucket_key(rs: &RootSystem, p: &AbcPair) -> Result<Vec<(SimpleType, usize)>> {
    let pl = PseudoLevi::new(rs, &p.j)?;
    let mut key: Vec<(SimpleType, usize)> = pl
        .types()
        .into_iter()
        .zip(pl.factor_nodes())
        .map(|(t, nodes)| (t, nodes.iter().filter(|x| p.jprime.contains(x)).count()))
        .collect();
    key.sort();
    Ok(key)
}

/// Equivalence classes of pairs, each with its least member as
/// representative, sorted by representative.
pub fn classes(rs: &RootSystem) -> Result<Arc<Vec<PairClass>>> {
    CLASSES.get_or_try(&rs.cartan_type(), || {
        let pairs = enumerate_pairs(rs)?;
        let mut buckets: BTreeMap<Vec<(SimpleType, usize)>, Vec<AbcPair>> = BTreeMap::new();
        for p in pairs {
            buckets.entry(bucket_key(rs, &p)?).or_default().push(p);
        }
        let mut out = Vec::new();
        for (_, members) in buckets {
            let mut groups: Vec<Vec<AbcPair>> = Vec::new();
            'next: for p in members {
                for g in groups.iter_mut() {
                    if equivalent(rs, &g[0], &p)? {
                        g.push(p);
                        continue 'next;
                    }
                }
                groups.push(vec![p]);
            }
            for mut g in groups {
                g.sort();
                out.push(PairClass { representative: g[0].clone(), members: g });
            }
        }
        out.sort_by(|a, b| a.representative.cmp(&b.representative));
        Ok(out)
    })
}

/// Position of the class containing `p`.
pub fn class_index(rs: &RootSystem, p: &AbcPair) -> Result<usize> {
    classes(rs)?
        .iter()
        .position(|c| c.members.contains(p))
        .ok_or_else(|| Error::Invalid(format!("{p} is not an affine Bala–Carter pair of {}", rs.cartan_type())))
}

/// The orbit of G containing a nilpotent of the pseudo-Levi with the given
/// per-factor orbits: its neutral element, read in `V` and made dominant.
pub fn saturation(rs: &RootSystem, pl: &PseudoLevi, orbits_j: &[NilpotentOrbit]) -> Result<NilpotentOrbit> {
    if orbits_j.len() != pl.factors().len() {
        return Err(Error::Invalid(format!("{} factor orbits given for {} factors", orbits_j.len(), pl.factors().len())));
    }
    let n = rs.rank();
    let mut h = vec![Rational::from_integer(0); n];
    for (f, o) in pl.factors().iter().zip(orbits_j) {
        if o.simple_type() != f.ty {
            return Err(Error::Invalid(format!("orbit {o} is not an orbit of the {} factor", f.ty)));
        }
        let frs = RootSystem::of_type(f.ty);
        let coeffs = orbits::neutral_element(&frs, o);
        for (c, &r) in coeffs.iter().zip(&f.roots) {
            for (k, x) in rs.coroot_vector(r).into_iter().enumerate() {
                h[k] += *c * x;
            }
        }
    }
    let h = dominant_conjugate(rs, &h);
    let vals = rs.simple_values(&h);
    let wdd = vals
        .iter()
        .map(|v| match v.is_integer() && (0..=2).contains(&v.to_integer()) {
            true => Ok(v.to_integer() as u8),
            false => Err(Error::Internal(format!("neutral element has value {v} on a simple root"))),
        })
        .collect::<Result<Vec<u8>>>()?;
    orbits::orbit_from_wdd(rs.simple_type(), &WeightedDynkin(wdd))
}

/// Saturation of the distinguished orbit of a pair.
pub fn pair_saturation(rs: &RootSystem, p: &AbcPair) -> Result<NilpotentOrbit> {
    let pl = PseudoLevi::new(rs, &p.j)?;
    saturation(rs, &pl, &pair_orbits(rs, p)?)
}
