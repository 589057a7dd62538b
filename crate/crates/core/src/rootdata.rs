//! Root systems of split types A–D and G2, their affine simple roots, Weyl
//! groups (as permutation groups on the roots) and the group Ω of alcove
//! symmetries.
//!
//! Coordinates: roots are integer vectors in the basis of simple roots,
//! coroots integer vectors in the basis of simple coroots, and points of
//! `V = X_* ⊗ R` rational vectors in the simple-coroot basis. The pairing of a
//! root with a point is `βᵀ P v` where `P[i][j] = ⟨α_i, α_j^∨⟩` is the Cartan
//! matrix. Each type also carries the usual integer "ε" realisation, which is
//! where lengths come from and where Weyl group elements live as signed
//! permutations.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use itertools::Itertools;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{self, Matrix};
use crate::memo::Memo;
use crate::{Error, QMatrix, QVector, Rational, Result};

/// Largest rank for which the full Weyl group is enumerated.
pub const MAX_WEYL_RANK: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Result<Series> {
        match c.to_ascii_uppercase() {
            'A' => Ok(Series::A),
            'B' => Ok(Series::B),
            'C' => Ok(Series::C),
            'D' => Ok(Series::D),
            'G' => Ok(Series::G),
            _ => Err(Error::InvalidType(format!("unknown series '{c}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Isogeny {
    Adjoint,
    SimplyConnected,
}

impl Isogeny {
    /// The isogeny type of the Langlands dual group.
    pub fn dual(self) -> Isogeny {
        match self {
            Isogeny::Adjoint => Isogeny::SimplyConnected,
            Isogeny::SimplyConnected => Isogeny::Adjoint,
        }
    }
}

impl fmt::Display for Isogeny {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Isogeny::Adjoint => "adjoint",
            Isogeny::SimplyConnected => "simply_connected",
        })
    }
}

impl FromStr for Isogeny {
    type Err = Error;
    fn from_str(s: &str) -> Result<Isogeny> {
        match s.to_ascii_lowercase().as_str() {
            "adjoint" | "ad" => Ok(Isogeny::Adjoint),
            "simply_connected" | "simply-connected" | "sc" => Ok(Isogeny::SimplyConnected),
            _ => Err(Error::InvalidType(format!("unknown isogeny '{s}'"))),
        }
    }
}

/// An irreducible root system type, independent of isogeny.
///
/// Always normalised: B1 and C1 become A1, D3 becomes A3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    series: Series,
    rank: usize,
}

impl SimpleType {
    pub fn new(series: Series, rank: usize) -> Result<SimpleType> {
        let bad = |why: &str| Err(Error::InvalidType(format!("{}{rank}: {why}", series.letter())));
        match (series, rank) {
            (_, 0) => bad("rank must be positive"),
            (Series::G, 2) => Ok(SimpleType { series, rank }),
            (Series::G, _) => bad("series G requires rank 2"),
            (Series::B | Series::C, 1) => {
                log::warn!("{}1 has the same root datum as A1; using A1", series.letter());
                Ok(SimpleType { series: Series::A, rank: 1 })
            }
            (Series::D, 1 | 2) => bad("not an irreducible root system"),
            (Series::D, 3) => {
                log::warn!("D3 is A3; using A3");
                Ok(SimpleType { series: Series::A, rank: 3 })
            }
            _ => Ok(SimpleType { series, rank }),
        }
    }

    pub fn series(self) -> Series {
        self.series
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Type of the dual root system.
    pub fn dual(self) -> SimpleType {
        let series = match self.series {
            Series::B => Series::C,
            Series::C => Series::B,
            s => s,
        };
        SimpleType { series, rank: self.rank }
    }

    pub fn ambient_dim(self) -> usize {
        match self.series {
            Series::A => self.rank + 1,
            Series::G => 3,
            _ => self.rank,
        }
    }

    /// Simple roots in the standard ε-realisation. For G2 the first simple
    /// root is long.
    pub fn ambient_simple_roots(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let m = self.ambient_dim();
        let e = |i: usize| (0..m).map(|k| i64::from(k == i)).collect::<Vec<i64>>();
        let diff = |i: usize, j: usize| e(i).iter().zip(e(j)).map(|(a, b)| a - b).collect::<Vec<i64>>();
        match self.series {
            Series::A => (0..n).map(|i| diff(i, i + 1)).collect(),
            Series::G => vec![vec![-2, 1, 1], vec![1, -1, 0]],
            s => {
                let mut v: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(i, i + 1)).collect();
                v.push(match s {
                    Series::B => e(n - 1),
                    Series::C => e(n - 1).iter().map(|x| 2 * x).collect(),
                    _ => e(n - 2).iter().zip(e(n - 1)).map(|(a, b)| a + b).collect(),
                });
                v
            }
        }
    }

    pub fn weyl_order(self) -> u64 {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.series {
            Series::A => fact(n + 1),
            Series::B | Series::C => (1u64 << n) * fact(n),
            Series::D => (1u64 << (n - 1)) * fact(n),
            Series::G => 12,
        }
    }

    pub fn num_positive_roots(self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
            Series::G => 6,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;
    fn from_str(s: &str) -> Result<SimpleType> {
        let mut chars = s.trim().chars();
        let series = Series::from_letter(chars.next().ok_or_else(|| Error::InvalidType("empty type".into()))?)?;
        let rank = chars.as_str().parse().map_err(|_| Error::InvalidType(format!("bad type '{s}'")))?;
        SimpleType::new(series, rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A split group up to the choice of isogeny: adjoint or simply connected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub ty: SimpleType,
    pub isogeny: Isogeny,
}

impl CartanType {
    pub fn new(series: Series, rank: usize, isogeny: Isogeny) -> Result<CartanType> {
        Ok(CartanType { ty: SimpleType::new(series, rank)?, isogeny })
    }

    pub fn series(self) -> Series {
        self.ty.series
    }

    pub fn rank(self) -> usize {
        self.ty.rank
    }

    /// The Langlands dual: dual root system, dual isogeny.
    pub fn dual(self) -> CartanType {
        CartanType { ty: self.ty.dual(), isogeny: self.isogeny.dual() }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.ty, self.isogeny)
    }
}

/// An affine root `v ↦ root(v) + offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineRoot {
    /// Index into [`RootSystem::roots`].
    pub root: usize,
    pub offset: i64,
}

struct Roots {
    cartan: Matrix<i64>,
    cartan_q: QMatrix,
    cartan_inv: QMatrix,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    ambient: Vec<Vec<i64>>,
    norms: Vec<i64>,
    index: HashMap<Vec<i64>, usize>,
    ambient_index: HashMap<Vec<i64>, usize>,
    npos: usize,
    highest: usize,
}

static ROOTS: Memo<SimpleType, Roots> = Memo::new();

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl Roots {
    fn build(ty: SimpleType) -> Roots {
        let n = ty.rank;
        let simple = ty.ambient_simple_roots();
        let cartan = Matrix::from_fn(n, n, |i, j| 2 * dot(&simple[i], &simple[j]) / dot(&simple[j], &simple[j]));

        let unit = |i: usize| (0..n).map(|k| i64::from(k == i)).collect::<Vec<i64>>();
        let mut found: Vec<Vec<i64>> = (0..n).map(unit).collect();
        let mut seen: std::collections::HashSet<Vec<i64>> = found.iter().cloned().collect();
        let mut k = 0;
        while k < found.len() {
            let beta = found[k].clone();
            for i in 0..n {
                let c: i64 = (0..n).map(|j| beta[j] * cartan[(j, i)]).sum();
                let mut img = beta.clone();
                img[i] -= c;
                if seen.insert(img.clone()) {
                    found.push(img);
                }
            }
            k += 1;
        }
        let mut pos: Vec<Vec<i64>> = found.into_iter().filter(|r| r.iter().all(|&x| x >= 0)).collect();
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let npos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| r.iter().map(|x| -x).collect()));

        let m = ty.ambient_dim();
        let ambient: Vec<Vec<i64>> = roots
            .iter()
            .map(|r| (0..m).map(|c| (0..n).map(|j| r[j] * simple[j][c]).sum()).collect())
            .collect();
        let norms: Vec<i64> = ambient.iter().map(|a| dot(a, a)).collect();
        let coroots = roots
            .iter()
            .zip(&norms)
            .map(|(r, &nb)| (0..n).map(|j| r[j] * norms[j] / nb).collect())
            .collect();
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let ambient_index = ambient.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let cartan_q = linalg::to_rational(&cartan);
        let cartan_inv = linalg::inverse(&cartan_q).expect("Cartan matrix is invertible");
        Roots {
            cartan,
            cartan_q,
            cartan_inv,
            roots,
            coroots,
            ambient,
            norms,
            index,
            ambient_index,
            npos,
            highest: npos - 1,
        }
    }
}

/// A root system together with the cocharacter lattice fixed by the isogeny.
#[derive(Clone)]
pub struct RootSystem {
    ct: CartanType,
    data: Arc<Roots>,
    /// Columns form a Z-basis of X_* in simple-coroot coordinates.
    xstar: QMatrix,
    xstar_inv: QMatrix,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({})", self.ct)
    }
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.ct == other.ct
    }
}

impl RootSystem {
    pub fn new(ct: CartanType) -> RootSystem {
        let data = ROOTS.get_or_try(&ct.ty, || Ok(Roots::build(ct.ty))).expect("root construction is infallible");
        let n = ct.rank();
        let xstar = match ct.isogeny {
            Isogeny::SimplyConnected => Matrix::identity(n),
            Isogeny::Adjoint => data.cartan_inv.clone(),
        };
        let xstar_inv = linalg::inverse(&xstar).expect("lattice basis is invertible");
        RootSystem { ct, data, xstar, xstar_inv }
    }

    /// Root system of a simple type, adjoint form. Convenient whenever the
    /// isogeny plays no role (Weyl groups, nilpotent orbits).
    pub fn of_type(ty: SimpleType) -> RootSystem {
        RootSystem::new(CartanType { ty, isogeny: Isogeny::Adjoint })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ct
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ct.ty
    }

    pub fn rank(&self) -> usize {
        self.ct.rank()
    }

    /// The Langlands dual root system.
    pub fn dual(&self) -> RootSystem {
        RootSystem::new(self.ct.dual())
    }

    /// `P[i][j] = ⟨α_i, α_j^∨⟩`.
    pub fn cartan_matrix(&self) -> &Matrix<i64> {
        &self.data.cartan
    }

    /// All roots in simple-root coordinates; positive roots first, ordered
    /// by height, then the negatives in the same order.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.data.roots
    }

    /// Coroot of each root, in simple-coroot coordinates.
    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.data.coroots
    }

    /// ε-coordinates of each root.
    pub fn ambient_roots(&self) -> &[Vec<i64>] {
        &self.data.ambient
    }

    /// Squared length of each root in the ε-realisation.
    pub fn root_norm(&self, root: usize) -> i64 {
        self.data.norms[root]
    }

    pub fn num_roots(&self) -> usize {
        self.data.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.data.npos
    }

    pub fn is_positive(&self, root: usize) -> bool {
        root < self.data.npos
    }

    pub fn negative(&self, root: usize) -> usize {
        if root < self.data.npos {
            root + self.data.npos
        } else {
            root - self.data.npos
        }
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.data.index.get(coords).copied()
    }

    pub fn ambient_index(&self, coords: &[i64]) -> Option<usize> {
        self.data.ambient_index.get(coords).copied()
    }

    /// Index of the highest root θ.
    pub fn highest_root(&self) -> usize {
        self.data.highest
    }

    /// `⟨a, b^∨⟩` for two roots given by index.
    pub fn pairing(&self, a: usize, b: usize) -> i64 {
        let (r, c) = (&self.data.roots[a], &self.data.coroots[b]);
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| r[i] * self.data.cartan[(i, j)] * c[j]).sum::<i64>()).sum()
    }

    /// Value of a root at a point of V.
    pub fn root_value(&self, root: usize, v: &[Rational]) -> Rational {
        self.linear_value(&self.data.roots[root], v)
    }

    /// Value at `v` of the linear form with the given simple-root coordinates.
    pub fn linear_value(&self, coeffs: &[i64], v: &[Rational]) -> Rational {
        let pv = self.data.cartan_q.mul_vec(v);
        coeffs.iter().zip(pv).fold(Rational::zero(), |acc, (&c, x)| acc + x * c)
    }

    /// Values of the simple roots at `v`.
    pub fn simple_values(&self, v: &[Rational]) -> QVector {
        self.data.cartan_q.mul_vec(v)
    }

    /// The reflection `s_β(γ)` as a root index.
    pub fn reflect_root(&self, beta: usize, gamma: usize) -> usize {
        let c = self.pairing(gamma, beta);
        let img: Vec<i64> = self.data.roots[gamma].iter().zip(&self.data.roots[beta]).map(|(g, b)| g - c * b).collect();
        self.root_index(&img).expect("root system is closed under reflections")
    }

    /// Coroot of a root as a point of V.
    pub fn coroot_vector(&self, root: usize) -> QVector {
        self.data.coroots[root].iter().map(|&x| Rational::from_integer(x)).collect()
    }

    /// Affine simple roots: node 0 is `1 − θ`, node `i ≥ 1` is `α_i`.
    pub fn affine_simples(&self) -> Vec<AffineRoot> {
        let mut v = vec![AffineRoot { root: self.negative(self.highest_root()), offset: 1 }];
        v.extend((0..self.rank()).map(|i| AffineRoot { root: i, offset: 0 }));
        v
    }

    /// Coefficients of θ in the simple roots.
    pub fn highest_root_marks(&self) -> &[i64] {
        &self.data.roots[self.data.highest]
    }

    /// Vertices of the fundamental alcove, indexed like the affine simple
    /// roots: vertex `i` lies on every wall except wall `i`.
    pub fn alcove_vertices(&self) -> Vec<QVector> {
        let n = self.rank();
        let marks = self.highest_root_marks();
        let mut out = vec![vec![Rational::zero(); n]];
        for (i, &mark) in marks.iter().enumerate() {
            let m = Rational::from_integer(mark);
            out.push((0..n).map(|r| self.data.cartan_inv[(r, i)] / m).collect());
        }
        out
    }

    /// Columns form a Z-basis of the cocharacter lattice.
    pub fn xstar_basis(&self) -> &QMatrix {
        &self.xstar
    }

    /// Coordinates of `v` in the X_* basis, when `v ∈ X_*`.
    pub fn xstar_coords(&self, v: &[Rational]) -> Option<Vec<i64>> {
        self.xstar_inv.mul_vec(v).iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
    }

    pub fn from_xstar_coords(&self, y: &[i64]) -> QVector {
        let yq: QVector = y.iter().map(|&x| Rational::from_integer(x)).collect();
        self.xstar.mul_vec(&yq)
    }

    /// Values of a root on the X_* basis vectors. Always integral.
    pub fn root_on_xstar(&self, root: usize) -> Vec<i64> {
        (0..self.rank())
            .map(|k| {
                let col: QVector = (0..self.rank()).map(|r| self.xstar[(r, k)]).collect();
                let val = self.root_value(root, &col);
                debug_assert!(val.is_integer());
                val.to_integer()
            })
            .collect()
    }

    /// Order of `X_* / ZΦ^∨`, via the Smith form of the basis change.
    pub fn fundamental_group_order(&self) -> i64 {
        // coroot lattice expressed in the X_* basis
        let m = &self.xstar_inv;
        let n = self.rank();
        let im = Matrix::from_fn(n, n, |r, c| m[(r, c)].to_integer());
        linalg::smith_normal_form(&im).diagonal().iter().product::<i64>().abs()
    }

    /// Reflect a point of V in the simple root `α_i`.
    pub fn reflect_vector(&self, i: usize, v: &[Rational]) -> QVector {
        let val = self.linear_value(&self.data.roots[i], v);
        let mut out = v.to_vec();
        out[i] -= val;
        out
    }
}

/// Convenience constructor matching the textbook name.
pub fn build_root_system(ct: CartanType) -> RootSystem {
    RootSystem::new(ct)
}

/// The unique dominant W-conjugate of `v`.
pub fn dominant_conjugate(rs: &RootSystem, v: &[Rational]) -> QVector {
    let mut v = v.to_vec();
    loop {
        let vals = rs.simple_values(&v);
        match vals.iter().position(|x| x.is_negative()) {
            Some(i) => v = rs.reflect_vector(i, &v),
            None => return v,
        }
    }
}

/// `e_i ↦ sign[i] · e_{image[i]}` on the ε-realisation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    pub image: Vec<u8>,
    pub sign: Vec<i8>,
}

impl SignedPerm {
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        let mut y = vec![0; x.len()];
        for (i, &xi) in x.iter().enumerate() {
            y[self.image[i] as usize] = i64::from(self.sign[i]) * xi;
        }
        y
    }

    /// Cycles of the underlying permutation, each with the product of the
    /// signs along it.
    pub fn signed_cycles(&self) -> Vec<(Vec<usize>, i8)> {
        let m = self.image.len();
        let mut done = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if done[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut sign = 1i8;
            let mut i = start;
            while !done[i] {
                done[i] = true;
                cyc.push(i);
                sign *= self.sign[i];
                i = self.image[i] as usize;
            }
            out.push((cyc, sign));
        }
        out
    }
}

/// An element of W, as a permutation of the root list plus its action on
/// the ε-realisation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub perm: Vec<u16>,
    pub ambient: SignedPerm,
    pub length: u32,
}

pub struct WeylGroup {
    ty: SimpleType,
    rs: RootSystem,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<u16>, usize>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylGroup({}, order {})", self.ty, self.elements.len())
    }
}

static WEYL: Memo<SimpleType, WeylGroup> = Memo::new();

/// The full Weyl group. Errors above rank [`MAX_WEYL_RANK`].
pub fn weyl_group(rs: &RootSystem) -> Result<Arc<WeylGroup>> {
    let ty = rs.simple_type();
    if ty.rank > MAX_WEYL_RANK {
        return Err(Error::TooLarge(format!("Weyl group of {ty} (rank cap {MAX_WEYL_RANK})")));
    }
    WEYL.get_or_try(&ty, || Ok(WeylGroup::build(ty)))
}

impl WeylGroup {
    fn build(ty: SimpleType) -> WeylGroup {
        let rs = RootSystem::of_type(ty);
        let m = ty.ambient_dim();
        let mut ambient = Vec::new();
        for p in (0..m).permutations(m) {
            let image: Vec<u8> = p.iter().map(|&x| x as u8).collect();
            match ty.series {
                Series::A => ambient.push(SignedPerm { image, sign: vec![1; m] }),
                Series::G => {
                    for s in [1i8, -1] {
                        ambient.push(SignedPerm { image: image.clone(), sign: vec![s; m] });
                    }
                }
                s => {
                    for bits in 0u32..(1 << m) {
                        if s == Series::D && bits.count_ones() % 2 == 1 {
                            continue;
                        }
                        let sign = (0..m).map(|i| if bits >> i & 1 == 1 { -1 } else { 1 }).collect();
                        ambient.push(SignedPerm { image: image.clone(), sign });
                    }
                }
            }
        }
        let mut elements: Vec<WeylElement> = ambient
            .into_iter()
            .map(|sp| {
                let perm: Vec<u16> = rs
                    .ambient_roots()
                    .iter()
                    .map(|r| rs.ambient_index(&sp.apply(r)).expect("signed permutation preserves roots") as u16)
                    .collect();
                let length = (0..rs.num_positive()).filter(|&i| !rs.is_positive(perm[i] as usize)).count() as u32;
                WeylElement { perm, ambient: sp, length }
            })
            .collect();
        elements.sort_by(|a, b| a.length.cmp(&b.length).then_with(|| a.perm.cmp(&b.perm)));
        let index = elements.iter().enumerate().map(|(i, e)| (e.perm.clone(), i)).collect();
        WeylGroup { ty, rs, elements, index }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn index_of(&self, perm: &[u16]) -> Option<usize> {
        self.index.get(perm).copied()
    }

    /// Index of `a ∘ b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (pa, pb) = (&self.elements[a].perm, &self.elements[b].perm);
        let c: Vec<u16> = pb.iter().map(|&x| pa[x as usize]).collect();
        self.index[&c]
    }

    pub fn inverse(&self, a: usize) -> usize {
        let pa = &self.elements[a].perm;
        let mut inv = vec![0u16; pa.len()];
        for (i, &x) in pa.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        self.index[&inv]
    }

    /// The reflection in a root.
    pub fn reflection(&self, root: usize) -> usize {
        let perm: Vec<u16> = (0..self.rs.num_roots()).map(|g| self.rs.reflect_root(root, g) as u16).collect();
        self.index[&perm]
    }

    pub fn act_on_root(&self, w: usize, root: usize) -> usize {
        self.elements[w].perm[root] as usize
    }

    /// Action on V (simple-coroot coordinates).
    pub fn act_on_vector(&self, w: usize, v: &[Rational]) -> QVector {
        let n = self.rs.rank();
        let perm = &self.elements[w].perm;
        let mut out = vec![Rational::zero(); n];
        for (j, vj) in v.iter().enumerate() {
            for (k, &c) in self.rs.coroots()[perm[j] as usize].iter().enumerate() {
                out[k] += vj * Rational::from_integer(c);
            }
        }
        out
    }
}

/// An element of Ω: the affine map `v ↦ w(v) + translation` stabilising the
/// fundamental alcove.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlcoveSymmetry {
    pub finite_part: WeylElement,
    pub translation: QVector,
    /// Induced permutation of the affine simple roots (by node index).
    pub node_perm: Vec<usize>,
}

impl AlcoveSymmetry {
    pub fn apply(&self, rs: &RootSystem, v: &[Rational]) -> QVector {
        let w = weyl_group(rs).expect("alcove symmetries exist only for enumerable groups");
        let idx = w.index_of(&self.finite_part.perm).unwrap();
        w.act_on_vector(idx, v).into_iter().zip(&self.translation).map(|(a, b)| a + b).collect()
    }
}

/// The group Ω. Each element is found as the unique `w` carrying the
/// alcove to itself after translating vertex 0 to a vertex lying in X_*.
pub fn alcove_symmetries(rs: &RootSystem) -> Result<Vec<AlcoveSymmetry>> {
    let w = weyl_group(rs)?;
    let verts = rs.alcove_vertices();
    let simples = rs.affine_simples();
    let mut out = Vec::new();
    for x in verts.iter().filter(|v| rs.xstar_coords(v).is_some()) {
        for (wi, el) in w.elements().iter().enumerate() {
            let img: Vec<QVector> = verts
                .iter()
                .map(|v| w.act_on_vector(wi, v).into_iter().zip(x).map(|(a, b)| a + b).collect())
                .collect();
            if !img.iter().all(|p| verts.contains(p)) {
                continue;
            }
            // (a, k) ↦ (w a, k − (w a)(x))
            let node_perm = simples
                .iter()
                .map(|ar| {
                    let root = w.act_on_root(wi, ar.root);
                    let off = Rational::from_integer(ar.offset) - rs.root_value(root, x);
                    simples
                        .iter()
                        .position(|s| s.root == root && Rational::from_integer(s.offset) == off)
                        .ok_or_else(|| Error::Internal("alcove symmetry does not permute walls".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            out.push(AlcoveSymmetry { finite_part: el.clone(), translation: x.clone(), node_perm });
        }
    }
    Ok(out)
}

#[cfg(test)]
pub(crate) fn qvec(v: &[i64]) -> QVector {
    v.iter().map(|&x| Rational::from_integer(x)).collect()
}
