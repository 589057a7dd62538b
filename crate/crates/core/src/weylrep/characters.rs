//! Character tables of the irreducible Weyl groups, computed from scratch:
//! Murnaghan–Nakayama for symmetric groups, its signed version for the
//! hyperoctahedral groups, restriction (with the split correction) for type
//! D, and a literal table for the dihedral group of order 12.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::memo::Memo;
use crate::partitions::{self, Partition};
use crate::rootdata::{Series, SignedPerm, SimpleType};
use crate::{Error, Result};

/// Conjugacy class of an irreducible Weyl group, described by the signed
/// cycle type of its elements in the ε-realisation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassKey {
    A(Partition),
    /// Positive and negative cycle lengths.
    BC(Partition, Partition),
    /// As for BC; the last entry separates the two halves of a split class
    /// (0 for the half containing honest permutations, 0 for unsplit classes).
    D(Partition, Partition, u8),
    /// Cycle type on three letters and the overall sign.
    G2(Partition, i8),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum G2Char {
    Phi10,
    Phi16,
    /// Non-trivial on the long reflections.
    Phi13p,
    /// Non-trivial on the short reflections.
    Phi13pp,
    Phi21,
    Phi22,
}

impl G2Char {
    pub const ALL: [G2Char; 6] = [G2Char::Phi10, G2Char::Phi16, G2Char::Phi13p, G2Char::Phi13pp, G2Char::Phi21, G2Char::Phi22];

    pub fn as_str(self) -> &'static str {
        match self {
            G2Char::Phi10 => "phi1,0",
            G2Char::Phi16 => "phi1,6",
            G2Char::Phi13p => "phi1,3'",
            G2Char::Phi13pp => "phi1,3''",
            G2Char::Phi21 => "phi2,1",
            G2Char::Phi22 => "phi2,2",
        }
    }

    fn b(self) -> usize {
        match self {
            G2Char::Phi10 => 0,
            G2Char::Phi16 => 6,
            G2Char::Phi13p | G2Char::Phi13pp => 3,
            G2Char::Phi21 => 1,
            G2Char::Phi22 => 2,
        }
    }

    /// Values on the classes `1, −1, r3, r6, short reflection, long reflection`.
    fn values(self) -> [i64; 6] {
        match self {
            G2Char::Phi10 => [1, 1, 1, 1, 1, 1],
            G2Char::Phi16 => [1, 1, 1, 1, -1, -1],
            G2Char::Phi13p => [1, -1, 1, -1, 1, -1],
            G2Char::Phi13pp => [1, -1, 1, -1, -1, 1],
            G2Char::Phi21 => [2, -2, -1, 1, 0, 0],
            G2Char::Phi22 => [2, 2, -1, -1, 0, 0],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SplitSign {
    Plus,
    Minus,
}

/// Label of an irreducible character of an irreducible Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    A(Partition),
    BC(Partition, Partition),
    /// Unordered pair stored with the larger partition first; the sign is
    /// present exactly when the two partitions coincide.
    D(Partition, Partition, Option<SplitSign>),
    G2(G2Char),
}

fn fmt_part(p: &Partition) -> String {
    format!("[{}]", p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::A(l) => f.write_str(&fmt_part(l)),
            Label::BC(l, m) => write!(f, "{}.{}", fmt_part(l), fmt_part(m)),
            Label::D(l, m, s) => {
                write!(f, "{{{},{}}}", fmt_part(l), fmt_part(m))?;
                match s {
                    Some(SplitSign::Plus) => f.write_str("+"),
                    Some(SplitSign::Minus) => f.write_str("-"),
                    None => Ok(()),
                }
            }
            Label::G2(c) => f.write_str(c.as_str()),
        }
    }
}

fn parse_bracketed(s: &str) -> Result<Partition> {
    let s = s.trim();
    if !(s.starts_with('[') && s.ends_with(']')) {
        return Err(Error::Invalid(format!("expected [..] in '{s}'")));
    }
    s.parse()
}

impl Label {
    /// Parse the [`Display`](fmt::Display) form for a given type.
    pub fn parse(ty: SimpleType, s: &str) -> Result<Label> {
        let s = s.trim();
        let bad = || Error::Invalid(format!("'{s}' is not a {ty} character label"));
        let label = match ty.series() {
            Series::A => Label::A(parse_bracketed(s)?),
            Series::B | Series::C => {
                let (l, m) = s.split_once("].").ok_or_else(bad)?;
                Label::BC(parse_bracketed(&format!("{l}]"))?, parse_bracketed(m)?)
            }
            Series::D => {
                let (body, sign) = if let Some(b) = s.strip_suffix('+') {
                    (b, Some(SplitSign::Plus))
                } else if let Some(b) = s.strip_suffix('-') {
                    (b, Some(SplitSign::Minus))
                } else {
                    (s, None)
                };
                let inner = body.strip_prefix('{').and_then(|b| b.strip_suffix('}')).ok_or_else(bad)?;
                let (l, m) = inner.split_once("],").ok_or_else(bad)?;
                let (l, m) = (parse_bracketed(&format!("{l}]"))?, parse_bracketed(m)?);
                let (l, m) = if l >= m { (l, m) } else { (m, l) };
                Label::D(l, m, sign)
            }
            Series::G => Label::G2(*G2Char::ALL.iter().find(|c| c.as_str() == s).ok_or_else(bad)?),
        };
        let table = char_table(ty)?;
        if table.label_index(&label).is_none() {
            return Err(bad());
        }
        Ok(label)
    }
}

/// Character table of an irreducible Weyl group.
#[derive(Debug)]
pub struct CharTable {
    ty: SimpleType,
    classes: Vec<ClassKey>,
    class_sizes: Vec<u64>,
    order: u64,
    labels: Vec<Label>,
    /// `values[i][c]`: value of character `i` on class `c`.
    values: Vec<Vec<i64>>,
    b: Vec<usize>,
    class_index: HashMap<ClassKey, usize>,
    label_index: HashMap<Label, usize>,
}

static TABLES: Memo<SimpleType, CharTable> = Memo::new();

/// Irreducible characters are computed for groups of order at most this.
pub const MAX_GROUP_ORDER: u64 = 1_000_000;

pub fn char_table(ty: SimpleType) -> Result<Arc<CharTable>> {
    if ty.weyl_order() > MAX_GROUP_ORDER {
        return Err(Error::TooLarge(format!("character table of W({ty})")));
    }
    TABLES.get_or_try(&ty, || Ok(CharTable::build(ty)))
}

/// Classes, class sizes, labels, values and b-invariants.
type Parts = (Vec<ClassKey>, Vec<u64>, Vec<Label>, Vec<Vec<i64>>, Vec<usize>);

impl CharTable {
    fn build(ty: SimpleType) -> CharTable {
        let n = ty.rank();
        let mut mn = Mn::default();
        let (classes, class_sizes, labels, values, b): Parts =
            match ty.series() {
                Series::A => {
                    let parts = partitions::partitions_of(n + 1);
                    let classes: Vec<ClassKey> = parts.iter().cloned().map(ClassKey::A).collect();
                    let sizes = parts.iter().map(|p| factorial(n + 1) / z_sym(p)).collect();
                    let values = parts.iter().map(|l| parts.iter().map(|r| mn.sym(l, r)).collect()).collect();
                    let b = parts.iter().map(|l| l.n_invariant()).collect();
                    (classes, sizes, parts.into_iter().map(Label::A).collect(), values, b)
                }
                Series::B | Series::C => {
                    let bip = partitions::bipartitions_of(n);
                    let classes: Vec<ClassKey> = bip.iter().map(|(a, b)| ClassKey::BC(a.clone(), b.clone())).collect();
                    let sizes = bip.iter().map(|(a, b)| (1u64 << n) * factorial(n) / z_hyp(a, b)).collect();
                    let values =
                        bip.iter().map(|(l, m)| bip.iter().map(|(a, b)| mn.hyp(l, m, a, b)).collect()).collect();
                    let b = bip.iter().map(|(l, m)| 2 * l.n_invariant() + 2 * m.n_invariant() + m.total()).collect();
                    (classes, sizes, bip.into_iter().map(|(l, m)| Label::BC(l, m)).collect(), values, b)
                }
                Series::D => build_d(n, &mut mn),
                Series::G => {
                    let p = |v: Vec<usize>| Partition::new(v);
                    let classes = vec![
                        ClassKey::G2(p(vec![1, 1, 1]), 1),
                        ClassKey::G2(p(vec![1, 1, 1]), -1),
                        ClassKey::G2(p(vec![3]), 1),
                        ClassKey::G2(p(vec![3]), -1),
                        ClassKey::G2(p(vec![2, 1]), 1),
                        ClassKey::G2(p(vec![2, 1]), -1),
                    ];
                    let labels = G2Char::ALL.iter().map(|&c| Label::G2(c)).collect();
                    let values = G2Char::ALL.iter().map(|c| c.values().to_vec()).collect();
                    let b = G2Char::ALL.iter().map(|c| c.b()).collect();
                    (classes, vec![1, 1, 2, 2, 3, 3], labels, values, b)
                }
            };
        let class_index = classes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let label_index = labels.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        CharTable { ty, classes, class_sizes, order: ty.weyl_order(), labels, values, b, class_index, label_index }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn classes(&self) -> &[ClassKey] {
        &self.classes
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn num_irreps(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    pub fn label_index(&self, l: &Label) -> Option<usize> {
        self.label_index.get(l).copied()
    }

    pub fn values(&self, i: usize) -> &[i64] {
        &self.values[i]
    }

    pub fn value(&self, i: usize, class: usize) -> i64 {
        self.values[i][class]
    }

    pub fn b(&self, i: usize) -> usize {
        self.b[i]
    }

    pub fn dim(&self, i: usize) -> i64 {
        self.values[i][self.class_index_of_identity()]
    }

    fn class_index_of_identity(&self) -> usize {
        let m = self.ty.ambient_dim();
        let id = SignedPerm { image: (0..m as u8).collect(), sign: vec![1; m] };
        self.class_of(&id)
    }

    /// Index of the character whose values are `vals`.
    pub fn find_by_values(&self, vals: &[i64]) -> Option<usize> {
        self.values.iter().position(|v| v == vals)
    }

    pub fn triv(&self) -> usize {
        self.b.iter().position(|&b| b == 0).unwrap()
    }

    pub fn sgn(&self) -> usize {
        self.b.iter().position(|&b| b == self.ty.num_positive_roots()).unwrap()
    }

    pub fn tensor_sgn(&self, i: usize) -> usize {
        let s = self.sgn();
        let vals: Vec<i64> = self.values[i].iter().zip(&self.values[s]).map(|(a, b)| a * b).collect();
        self.find_by_values(&vals).expect("tensoring with sgn permutes the irreducibles")
    }

    /// `⟨χ_i, χ_j⟩` as a rational number `(numerator, |W|)`.
    pub fn inner_product_raw(&self, a: &[i64], b: &[i64]) -> i128 {
        a.iter()
            .zip(b)
            .zip(&self.class_sizes)
            .map(|((x, y), &s)| i128::from(*x) * i128::from(*y) * i128::from(s))
            .sum()
    }

    /// Class of an element given in the ε-realisation of this type.
    pub fn class_of(&self, g: &SignedPerm) -> usize {
        let key = class_key(self.ty, g);
        self.class_index[&key]
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn z_sym(p: &Partition) -> u64 {
    let mut z = 1u64;
    let mut i = 0;
    while i < p.len() {
        let k = p.parts()[i];
        let m = p.multiplicity(k);
        z *= (k as u64).pow(m as u32) * factorial(m);
        i += m;
    }
    z
}

fn z_hyp(a: &Partition, b: &Partition) -> u64 {
    let mut z = 1u64;
    for k in 1..=a.part(0).max(b.part(0)) {
        let (ma, mb) = (a.multiplicity(k), b.multiplicity(k));
        z *= (2 * k as u64).pow((ma + mb) as u32) * factorial(ma) * factorial(mb);
    }
    z
}

fn is_split_class(a: &Partition, b: &Partition) -> bool {
    b.is_empty() && a.parts().iter().all(|&x| x % 2 == 0)
}

fn build_d(n: usize, mn: &mut Mn) -> Parts {
    let mut classes = Vec::new();
    let mut sizes = Vec::new();
    for (a, b) in partitions::bipartitions_of(n) {
        if b.len() % 2 == 1 {
            continue;
        }
        let size = (1u64 << n) * factorial(n) / z_hyp(&a, &b);
        if is_split_class(&a, &b) {
            for s in 0..2 {
                classes.push(ClassKey::D(a.clone(), b.clone(), s));
                sizes.push(size / 2);
            }
        } else {
            classes.push(ClassKey::D(a, b, 0));
            sizes.push(size);
        }
    }
    let mut labels = Vec::new();
    for (l, m) in partitions::bipartitions_of(n) {
        match l.cmp(&m) {
            std::cmp::Ordering::Greater => labels.push(Label::D(l, m, None)),
            std::cmp::Ordering::Equal => {
                labels.push(Label::D(l.clone(), m.clone(), Some(SplitSign::Plus)));
                labels.push(Label::D(l, m, Some(SplitSign::Minus)));
            }
            std::cmp::Ordering::Less => {}
        }
    }
    let mut values = Vec::new();
    let mut b = Vec::new();
    for label in &labels {
        let Label::D(l, m, sign) = label else { unreachable!() };
        b.push(2 * l.n_invariant() + 2 * m.n_invariant() + l.total().min(m.total()));
        let row = classes
            .iter()
            .map(|c| {
                let ClassKey::D(a, bb, s) = c else { unreachable!() };
                let full = mn.hyp(l, m, a, bb);
                let Some(sign) = sign else { return full };
                if !is_split_class(a, bb) {
                    return full / 2;
                }
                // χ^± = ½ χ^{(λ,λ)} ± ½ · 2^{ℓ(γ)} χ^λ(γ) on the half containing
                // honest permutations of cycle type 2γ, signs swapped on the other
                let gamma = Partition::new(a.parts().iter().map(|x| x / 2).collect());
                let delta = (1i64 << (gamma.len() - 1)) * mn.sym(l, &gamma);
                let eps = match (sign, s) {
                    (SplitSign::Plus, 0) | (SplitSign::Minus, 1) => 1,
                    _ => -1,
                };
                full / 2 + eps * delta
            })
            .collect();
        values.push(row);
    }
    (classes, sizes, labels, values, b)
}

/// The class key of a signed permutation in the ε-realisation of `ty`.
pub fn class_key(ty: SimpleType, g: &SignedPerm) -> ClassKey {
    let cycles = g.signed_cycles();
    let lens = |want: i8| Partition::new(cycles.iter().filter(|c| c.1 == want).map(|c| c.0.len()).collect());
    match ty.series() {
        Series::A => ClassKey::A(lens(1)),
        Series::B | Series::C => ClassKey::BC(lens(1), lens(-1)),
        Series::D => {
            let (a, b) = (lens(1), lens(-1));
            let s = if is_split_class(&a, &b) { split_parity(g) } else { 0 };
            ClassKey::D(a, b, s)
        }
        Series::G => {
            let cyc = Partition::new(cycles.iter().map(|c| c.0.len()).collect());
            ClassKey::G2(cyc, g.sign[0])
        }
    }
}

/// Parity of the number of sign changes `f` with `f g f⁻¹` an honest
/// permutation. Only meaningful when every cycle of `g` is positive.
fn split_parity(g: &SignedPerm) -> u8 {
    let m = g.image.len();
    let mut f = vec![0i8; m];
    for start in 0..m {
        if f[start] != 0 {
            continue;
        }
        f[start] = 1;
        let mut i = start;
        loop {
            let j = g.image[i] as usize;
            if j == start {
                break;
            }
            f[j] = f[i] * g.sign[i];
            i = j;
        }
    }
    (f.iter().filter(|&&x| x == -1).count() % 2) as u8
}

/// Memoised Murnaghan–Nakayama evaluation.
#[derive(Default)]
struct Mn {
    sym: HashMap<(Partition, Partition), i64>,
    hyp: HashMap<(Partition, Partition, Partition, Partition), i64>,
}

/// All ways to remove an `r`-rim hook from `l`, with the hook's leg length.
fn rim_hooks(l: &Partition, r: usize) -> Vec<(Partition, usize)> {
    let len = l.len();
    let beta: Vec<usize> = (0..len).map(|i| l.parts()[i] + (len - 1 - i)).collect();
    let mut out = Vec::new();
    for (i, &x) in beta.iter().enumerate() {
        if x < r || beta.contains(&(x - r)) {
            continue;
        }
        let height = beta.iter().filter(|&&y| y > x - r && y < x).count();
        let mut nb = beta.clone();
        nb[i] = x - r;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts = (0..len).map(|k| nb[k] - (len - 1 - k)).collect();
        out.push((Partition::new(parts), height));
    }
    out
}

fn sign(h: usize) -> i64 {
    if h.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl Mn {
    fn sym(&mut self, l: &Partition, rho: &Partition) -> i64 {
        if rho.is_empty() {
            return i64::from(l.is_empty());
        }
        let key = (l.clone(), rho.clone());
        if let Some(&v) = self.sym.get(&key) {
            return v;
        }
        let r = rho.parts()[0];
        let rest = Partition::new(rho.parts()[1..].to_vec());
        let v = rim_hooks(l, r).iter().map(|(q, h)| sign(*h) * self.sym(q, &rest)).sum();
        self.sym.insert(key, v);
        v
    }

    /// Character `(l, m)` of the hyperoctahedral group on the class with
    /// positive cycles `a` and negative cycles `b`.
    fn hyp(&mut self, l: &Partition, m: &Partition, a: &Partition, b: &Partition) -> i64 {
        if a.is_empty() && b.is_empty() {
            return i64::from(l.is_empty() && m.is_empty());
        }
        let key = (l.clone(), m.clone(), a.clone(), b.clone());
        if let Some(&v) = self.hyp.get(&key) {
            return v;
        }
        let (r, negative, a2, b2) = if !a.is_empty() {
            (a.parts()[0], false, Partition::new(a.parts()[1..].to_vec()), b.clone())
        } else {
            (b.parts()[0], true, a.clone(), Partition::new(b.parts()[1..].to_vec()))
        };
        let mut v = 0;
        for (q, h) in rim_hooks(l, r) {
            v += sign(h) * self.hyp(&q, m, &a2, &b2);
        }
        for (q, h) in rim_hooks(m, r) {
            let s = if negative { -sign(h) } else { sign(h) };
            v += s * self.hyp(l, &q, &a2, &b2);
        }
        self.hyp.insert(key, v);
        v
    }
}
