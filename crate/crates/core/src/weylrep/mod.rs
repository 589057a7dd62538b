//! Representations of Weyl groups: characters, families, the Springer
//! correspondence and truncated induction.

pub mod characters;
pub mod induction;
pub mod springer;
pub mod symbols;

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub use characters::{char_table, CharTable, ClassKey, G2Char, Label, SplitSign};
pub use induction::{induce, induce_multiplicity, j_induce, RootSubsystem, SubsystemFactor};
pub use springer::{orbit_s, springer_irrep, springer_label, springer_orbit, springer_orbit_of};
pub use symbols::{families, symbol_of, Families, Symbol};

use crate::rootdata::SimpleType;
use crate::{Error, Result};

/// An irreducible character of a product of irreducible Weyl groups, one
/// label per factor. The empty product is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Irrep {
    factors: Vec<(SimpleType, Label)>,
}

impl Irrep {
    pub fn new(factors: Vec<(SimpleType, Label)>) -> Result<Irrep> {
        for (ty, l) in &factors {
            if char_table(*ty)?.label_index(l).is_none() {
                return Err(Error::Invalid(format!("{l} is not a character of W({ty})")));
            }
        }
        Ok(Irrep { factors })
    }

    pub fn simple(ty: SimpleType, label: Label) -> Result<Irrep> {
        Irrep::new(vec![(ty, label)])
    }

    /// Trivial character of the trivial group.
    pub fn unit() -> Irrep {
        Irrep { factors: Vec::new() }
    }

    pub fn factors(&self) -> &[(SimpleType, Label)] {
        &self.factors
    }

    pub fn types(&self) -> Vec<SimpleType> {
        self.factors.iter().map(|f| f.0).collect()
    }

    /// The label of a single-factor irrep.
    pub fn label(&self) -> Option<&Label> {
        match self.factors.as_slice() {
            [(_, l)] => Some(l),
            _ => None,
        }
    }

    pub fn b(&self) -> usize {
        self.factors.iter().map(|(ty, l)| table_entry(*ty, l, |t, i| t.b(i))).sum()
    }

    pub fn dim(&self) -> i64 {
        self.factors.iter().map(|(ty, l)| table_entry(*ty, l, |t, i| t.dim(i))).product()
    }

    pub fn tensor_sgn(&self) -> Irrep {
        Irrep {
            factors: self
                .factors
                .iter()
                .map(|(ty, l)| {
                    let t = char_table(*ty).unwrap();
                    (*ty, t.label(t.tensor_sgn(t.label_index(l).unwrap())).clone())
                })
                .collect(),
        }
    }

    pub fn triv(types: &[SimpleType]) -> Result<Irrep> {
        Self::from_indices(types, |t| t.triv())
    }

    pub fn sgn(types: &[SimpleType]) -> Result<Irrep> {
        Self::from_indices(types, |t| t.sgn())
    }

    fn from_indices(types: &[SimpleType], pick: impl Fn(&CharTable) -> usize) -> Result<Irrep> {
        let factors = types
            .iter()
            .map(|&ty| {
                let t = char_table(ty)?;
                Ok((ty, t.label(pick(&t)).clone()))
            })
            .collect::<Result<_>>()?;
        Ok(Irrep { factors })
    }

    /// Parse a label of a single irreducible type; `triv` and `sgn` are
    /// accepted as well.
    pub fn parse(ty: SimpleType, s: &str) -> Result<Irrep> {
        match s.trim() {
            "triv" => Irrep::triv(&[ty]),
            "sgn" => Irrep::sgn(&[ty]),
            other => Irrep::simple(ty, Label::parse(ty, other)?),
        }
    }
}

fn table_entry<T>(ty: SimpleType, l: &Label, f: impl Fn(&CharTable, usize) -> T) -> T {
    let t = char_table(ty).expect("irrep types have character tables");
    f(&t, t.label_index(l).expect("irrep labels are validated"))
}

impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.factors.iter().map(|(_, l)| l.to_string()).collect();
        f.write_str(&parts.join(" x "))
    }
}

impl Serialize for Irrep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Irrep", 3)?;
        st.serialize_field("factors", &self.types())?;
        st.serialize_field("label", &self.to_string())?;
        st.serialize_field("b", &self.b())?;
        st.end()
    }
}

/// All irreducible characters of a product of Weyl groups.
pub fn irreps(types: &[SimpleType]) -> Result<Vec<Irrep>> {
    let order: u128 = types.iter().map(|t| u128::from(t.weyl_order())).product();
    if order > u128::from(characters::MAX_GROUP_ORDER) {
        return Err(Error::TooLarge(format!("Weyl group of order {order}")));
    }
    let mut out = vec![Irrep::unit()];
    for &ty in types {
        let t = char_table(ty)?;
        out = out
            .into_iter()
            .flat_map(|e| {
                t.labels().iter().map(move |l| {
                    let mut f = e.factors.clone();
                    f.push((ty, l.clone()));
                    Irrep { factors: f }
                })
            })
            .collect();
    }
    Ok(out)
}

/// The same label read as a character of the dual Weyl group. `W(B_n)` and
/// `W(C_n)` share their ε-realisation; for G2 the long and short reflections
/// trade places.
pub fn dual_label(label: &Label) -> Label {
    match label {
        Label::G2(G2Char::Phi13p) => Label::G2(G2Char::Phi13pp),
        Label::G2(G2Char::Phi13pp) => Label::G2(G2Char::Phi13p),
        l => l.clone(),
    }
}

/// The character of `W^∨` corresponding to `e` under `W ≅ W^∨`.
pub fn dual_irrep(e: &Irrep) -> Irrep {
    Irrep { factors: e.factors.iter().map(|(ty, l)| (ty.dual(), dual_label(l))).collect() }
}

/// The special character in the family of `e`, factor by factor.
pub fn special_member(e: &Irrep) -> Irrep {
    Irrep {
        factors: e
            .factors
            .iter()
            .map(|(ty, l)| {
                let fam = families(*ty).unwrap();
                let t = char_table(*ty).unwrap();
                let s = fam.special_of(fam.family_of(t.label_index(l).unwrap()));
                (*ty, t.label(s).clone())
            })
            .collect(),
    }
}

pub fn is_special(e: &Irrep) -> bool {
    &special_member(e) == e
}

/// Members of the family of a single-factor irrep.
pub fn family_members(ty: SimpleType, label: &Label) -> Result<Vec<Label>> {
    let fam = families(ty)?;
    let t = char_table(ty)?;
    let i = t.label_index(label).ok_or_else(|| Error::Invalid(format!("{label} is not a character of W({ty})")))?;
    Ok(fam.members(fam.family_of(i)).iter().map(|&k| t.label(k).clone()).collect())
}
