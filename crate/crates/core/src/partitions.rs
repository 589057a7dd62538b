//! Partitions and the combinatorics of classical nilpotent orbits.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", from = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `i`-th part, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, k: usize) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// `Σ (i − 1) λ_i`.
    pub fn n_invariant(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Add one to the largest part.
    pub fn plus(&self) -> Partition {
        let mut v = self.0.clone();
        match v.first_mut() {
            Some(p) => *p += 1,
            None => v.push(1),
        }
        Partition::new(v)
    }

    /// Remove one from the smallest part.
    pub fn minus(&self) -> Partition {
        let mut v = self.0.clone();
        if let Some(p) = v.last_mut() {
            *p -= 1;
        }
        Partition::new(v)
    }

    pub fn transpose(&self) -> Partition {
        transpose(self)
    }
}

impl From<Vec<usize>> for Partition {
    fn from(v: Vec<usize>) -> Self {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Invalid(format!("bad partition '{s}'"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition::new(parts))
    }
}

/// Which classical Lie algebra a partition describes an orbit of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbitFamily {
    /// `sl(n+1)`, partitions of `n+1`.
    A(usize),
    /// `so(2n+1)`.
    B(usize),
    /// `sp(2n)`.
    C(usize),
    /// `so(2n)`.
    D(usize),
}

impl OrbitFamily {
    pub fn size(self) -> usize {
        match self {
            OrbitFamily::A(n) => n + 1,
            OrbitFamily::B(n) => 2 * n + 1,
            OrbitFamily::C(n) | OrbitFamily::D(n) => 2 * n,
        }
    }

    /// Parity of the parts whose multiplicity must be even, if any.
    fn restricted_parity(self) -> Option<usize> {
        match self {
            OrbitFamily::A(_) => None,
            OrbitFamily::B(_) | OrbitFamily::D(_) => Some(0),
            OrbitFamily::C(_) => Some(1),
        }
    }

    fn check(self, p: &Partition) -> Result<()> {
        if p.total() != self.size() {
            return Err(Error::Invalid(format!("partition {p} has total {} but {self:?} needs {}", p.total(), self.size())));
        }
        Ok(())
    }
}

pub fn transpose(p: &Partition) -> Partition {
    let first = p.part(0);
    Partition((1..=first).map(|k| p.0.iter().filter(|&&x| x >= k).count()).collect())
}

/// Does `p` label an orbit of the given family?
pub fn valid(p: &Partition, f: OrbitFamily) -> Result<bool> {
    f.check(p)?;
    Ok(is_valid_unchecked(p, f))
}

fn is_valid_unchecked(p: &Partition, f: OrbitFamily) -> bool {
    match f.restricted_parity() {
        None => true,
        Some(par) => {
            let mut i = 0;
            while i < p.0.len() {
                let q = p.0[i];
                let m = p.multiplicity(q);
                if q % 2 == par && m % 2 == 1 {
                    return false;
                }
                i += m;
            }
            true
        }
    }
}

/// The largest valid partition dominated by `p`.
///
/// Greedy repair: take the largest part `q` of the forbidden parity with odd
/// multiplicity, lower its last occurrence by one and raise the first later
/// part that is smaller than `q − 1` by one.
pub fn collapse(p: &Partition, f: OrbitFamily) -> Result<Partition> {
    f.check(p)?;
    let Some(par) = f.restricted_parity() else {
        return Ok(p.clone());
    };
    let mut v = p.0.clone();
    loop {
        let bad = v.iter().copied().filter(|&q| q % 2 == par && v.iter().filter(|&&x| x == q).count() % 2 == 1).max();
        let Some(q) = bad else {
            return Ok(Partition::new(v));
        };
        let last = v.iter().rposition(|&x| x == q).unwrap();
        v[last] -= 1;
        match v.iter().skip(last + 1).position(|&x| x + 1 < q) {
            Some(off) => v[last + 1 + off] += 1,
            None => v.push(1),
        }
        v.retain(|&x| x > 0);
    }
}

/// Dominance order: all partial sums of `p` are at most those of `q`.
pub fn dominance_leq(p: &Partition, q: &Partition) -> Result<bool> {
    if p.total() != q.total() {
        return Err(Error::Invalid(format!("cannot compare {p} and {q}: totals differ")));
    }
    let (mut sp, mut sq) = (0, 0);
    for i in 0..p.len().max(q.len()) {
        sp += p.part(i);
        sq += q.part(i);
        if sp > sq {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            rec(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All valid partitions of a family, in decreasing lexicographic order.
pub fn valid_partitions(f: OrbitFamily) -> Vec<Partition> {
    partitions_of(f.size()).into_iter().filter(|p| is_valid_unchecked(p, f)).collect()
}

/// Ordered pairs `(λ, μ)` with `|λ| + |μ| = n`.
pub fn bipartitions_of(n: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for l in partitions_of(k) {
            for m in partitions_of(n - k) {
                out.push((l.clone(), m));
            }
        }
    }
    out
}
