//! Lusztig symbols, families and special characters.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::characters::{char_table, G2Char, Label};
use crate::memo::Memo;
use crate::partitions::Partition;
use crate::rootdata::{Series, SimpleType};
use crate::Result;

/// Two increasing rows of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[usize]| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "({} / {})", row(&self.top), row(&self.bottom))
    }
}

fn shifted_row(p: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|i| p.part(len - 1 - i) + i).collect()
}

impl Symbol {
    /// Symbol of a bipartition with `m + 1` top and `m` bottom entries
    /// (types B, C) or `m` of each (type D).
    pub fn of(l: &Partition, mu: &Partition, m: usize, defect_one: bool) -> Symbol {
        let top_len = if defect_one { m + 1 } else { m };
        Symbol { top: shifted_row(l, top_len), bottom: shifted_row(mu, m) }
    }

    /// Multiset of entries; equal exactly for symbols in one family.
    pub fn entries(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.top.iter().chain(&self.bottom).copied().collect();
        v.sort_unstable();
        v
    }

    /// `top₀ ≤ bottom₀ ≤ top₁ ≤ …`.
    pub fn interlaces(&self) -> bool {
        let mut seq: Vec<usize> = Vec::new();
        for i in 0..self.top.len().max(self.bottom.len()) {
            seq.extend(self.top.get(i));
            seq.extend(self.bottom.get(i));
        }
        seq.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_degenerate(&self) -> bool {
        self.top == self.bottom
    }
}

/// Symbol attached to a character label, if the type has symbols.
pub fn symbol_of(ty: SimpleType, label: &Label) -> Option<Symbol> {
    let m = ty.rank();
    match label {
        Label::BC(l, mu) => Some(Symbol::of(l, mu, m, true)),
        Label::D(l, mu, _) => Some(Symbol::of(l, mu, m, false)),
        _ => None,
    }
}

/// Lusztig's families of an irreducible Weyl group.
#[derive(Debug)]
pub struct Families {
    family_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    special: Vec<usize>,
}

impl Families {
    pub fn family_of(&self, irrep: usize) -> usize {
        self.family_of[irrep]
    }

    pub fn members(&self, family: usize) -> &[usize] {
        &self.members[family]
    }

    pub fn num_families(&self) -> usize {
        self.members.len()
    }

    pub fn special_of(&self, family: usize) -> usize {
        self.special[family]
    }

    pub fn is_special(&self, irrep: usize) -> bool {
        self.special[self.family_of[irrep]] == irrep
    }

    /// All special characters in each family (exactly one when the data is
    /// consistent; the tests check this).
    pub fn specials_in(&self, ty: SimpleType, family: usize) -> Vec<usize> {
        let table = char_table(ty).unwrap();
        self.members[family].iter().copied().filter(|&i| is_special_label(ty, table.label(i))).collect()
    }
}

fn is_special_label(ty: SimpleType, label: &Label) -> bool {
    match label {
        Label::A(_) => true,
        Label::G2(c) => matches!(c, G2Char::Phi10 | G2Char::Phi16 | G2Char::Phi21),
        Label::BC(..) => symbol_of(ty, label).unwrap().interlaces(),
        Label::D(..) => {
            let s = symbol_of(ty, label).unwrap();
            let swapped = Symbol { top: s.bottom.clone(), bottom: s.top.clone() };
            s.interlaces() || swapped.interlaces()
        }
    }
}

static FAMILIES: Memo<SimpleType, Families> = Memo::new();

pub fn families(ty: SimpleType) -> Result<Arc<Families>> {
    FAMILIES.get_or_try(&ty, || {
        let table = char_table(ty)?;
        let mut keys: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut family_of = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for (i, label) in table.labels().iter().enumerate() {
            // key: entry multiset, or a unique key for characters alone in
            // their family
            let key: Vec<usize> = match (ty.series(), label) {
                (Series::G, Label::G2(c)) => match c {
                    G2Char::Phi10 => vec![0],
                    G2Char::Phi16 => vec![1],
                    _ => vec![2],
                },
                (_, Label::BC(..)) => symbol_of(ty, label).unwrap().entries(),
                (_, Label::D(_, _, Some(_))) => vec![usize::MAX, i],
                (_, Label::D(..)) => symbol_of(ty, label).unwrap().entries(),
                _ => vec![usize::MAX, i],
            };
            let next = members.len();
            let f = *keys.entry(key).or_insert(next);
            if f == next {
                members.push(Vec::new());
            }
            members[f].push(i);
            family_of.push(f);
        }
        let special = members
            .iter()
            .map(|ms| ms.iter().copied().find(|&i| is_special_label(ty, table.label(i))).unwrap_or(ms[0]))
            .collect();
        Ok(Families { family_of, members, special })
    })
}
