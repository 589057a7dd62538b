//! Reflection subgroups generated by a set of roots, induction of
//! characters from them, and truncated induction.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use itertools::Itertools;

use super::characters::char_table;
use super::Irrep;
use crate::memo::Memo;
use crate::rootdata::{weyl_group, RootSystem, Series, SimpleType};
use crate::{Error, Result};

/// One irreducible component of a root subsystem. `roots[i]` is the root of
/// the ambient system playing the part of the `i`-th simple root of `ty`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsystemFactor {
    pub ty: SimpleType,
    pub roots: Vec<usize>,
}

/// The reflection subgroup of `W(ty)` generated by a linearly independent
/// set of roots, split into irreducible factors with standard simple-root
/// orderings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootSubsystem {
    ambient: SimpleType,
    factors: Vec<SubsystemFactor>,
}

fn candidate_types(k: usize, has_multiple_bond: bool) -> Vec<SimpleType> {
    let mut v = Vec::new();
    if !has_multiple_bond {
        v.push(SimpleType::new(Series::A, k).unwrap());
        if k >= 4 {
            v.push(SimpleType::new(Series::D, k).unwrap());
        }
    } else if k == 2 {
        v.push(SimpleType::new(Series::B, 2).unwrap());
        v.push(SimpleType::new(Series::G, 2).unwrap());
    } else {
        v.push(SimpleType::new(Series::B, k).unwrap());
        v.push(SimpleType::new(Series::C, k).unwrap());
    }
    v
}

/// Type a connected Cartan matrix: the first type and the lexicographically
/// first ordering of `nodes` matching its standard Cartan matrix.
fn type_component(rs: &RootSystem, nodes: &[usize]) -> Result<SubsystemFactor> {
    let k = nodes.len();
    let multiple = nodes.iter().any(|&a| nodes.iter().any(|&b| rs.pairing(a, b) < -1));
    for ty in candidate_types(k, multiple) {
        let std = RootSystem::of_type(ty);
        let c = std.cartan_matrix();
        for perm in nodes.iter().copied().permutations(k) {
            if (0..k).all(|i| (0..k).all(|j| rs.pairing(perm[i], perm[j]) == c[(i, j)])) {
                return Ok(SubsystemFactor { ty, roots: perm });
            }
        }
    }
    Err(Error::Invalid(format!("roots {nodes:?} do not form a base of a supported root system")))
}

impl RootSubsystem {
    /// `roots` are indices into the roots of `rs`; they must be linearly
    /// independent with non-positive mutual pairings.
    pub fn new(rs: &RootSystem, roots: &[usize]) -> Result<RootSubsystem> {
        let mut roots = roots.to_vec();
        roots.sort_unstable();
        roots.dedup();
        for (i, &a) in roots.iter().enumerate() {
            for &b in &roots[i + 1..] {
                if rs.pairing(a, b) > 0 {
                    return Err(Error::Invalid(format!("roots {a} and {b} are not part of a base")));
                }
            }
        }
        // connected components of the Dynkin graph
        let mut comp = vec![usize::MAX; roots.len()];
        let mut factors = Vec::new();
        for s in 0..roots.len() {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut nodes = vec![s];
            comp[s] = s;
            let mut k = 0;
            while k < nodes.len() {
                let a = nodes[k];
                for b in 0..roots.len() {
                    if comp[b] == usize::MAX && rs.pairing(roots[a], roots[b]) != 0 {
                        comp[b] = s;
                        nodes.push(b);
                    }
                }
                k += 1;
            }
            nodes.sort_unstable();
            let ids: Vec<usize> = nodes.iter().map(|&i| roots[i]).collect();
            factors.push(type_component(rs, &ids)?);
        }
        Ok(RootSubsystem { ambient: rs.simple_type(), factors })
    }

    pub fn ambient(&self) -> SimpleType {
        self.ambient
    }

    pub fn factors(&self) -> &[SubsystemFactor] {
        &self.factors
    }

    pub fn types(&self) -> Vec<SimpleType> {
        self.factors.iter().map(|f| f.ty).collect()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().map(|f| f.ty.weyl_order()).product()
    }
}

/// Joint class distribution of `W_J`: how many elements lie in each pair
/// (tuple of factor classes, class in W).
#[derive(Debug)]
struct Fusion {
    counts: Vec<(Vec<usize>, usize, u64)>,
    order: u64,
}

static BIG_CLASSES: Memo<SimpleType, Vec<usize>> = Memo::new();
static FUSIONS: Memo<RootSubsystem, Fusion> = Memo::new();

fn element_classes(ty: SimpleType) -> Result<Arc<Vec<usize>>> {
    BIG_CLASSES.get_or_try(&ty, || {
        let t = char_table(ty)?;
        let w = weyl_group(&RootSystem::of_type(ty))?;
        Ok(w.elements().iter().map(|e| t.class_of(&e.ambient)).collect())
    })
}

fn fusion(sub: &RootSubsystem) -> Result<Arc<Fusion>> {
    FUSIONS.get_or_try(sub, || {
        let big_rs = RootSystem::of_type(sub.ambient);
        let big = weyl_group(&big_rs)?;
        let big_class = element_classes(sub.ambient)?;
        // per factor: (factor class, image in W) for every factor element
        let mut per_factor: Vec<Vec<(usize, usize)>> = Vec::new();
        for f in &sub.factors {
            let frs = RootSystem::of_type(f.ty);
            let fw = weyl_group(&frs)?;
            let fclass = element_classes(f.ty)?;
            let gens: Vec<(usize, usize)> =
                f.roots.iter().enumerate().map(|(i, &r)| (fw.reflection(i), big.reflection(r))).collect();
            let mut image = vec![usize::MAX; fw.order()];
            image[fw.identity()] = big.identity();
            let mut queue = VecDeque::from([fw.identity()]);
            while let Some(x) = queue.pop_front() {
                for &(s, t) in &gens {
                    let y = fw.mul(x, s);
                    let img = big.mul(image[x], t);
                    if image[y] == usize::MAX {
                        image[y] = img;
                        queue.push_back(y);
                    } else if image[y] != img {
                        return Err(Error::Internal(format!("class fusion failed for {:?}", f.roots)));
                    }
                }
            }
            per_factor.push((0..fw.order()).map(|x| (fclass[x], image[x])).collect());
        }
        let mut state: HashMap<(Vec<usize>, usize), u64> = HashMap::from([((Vec::new(), big.identity()), 1)]);
        for pf in &per_factor {
            let mut next: HashMap<(Vec<usize>, usize), u64> = HashMap::new();
            for ((cls, w), n) in state {
                for &(c, img) in pf {
                    let mut k = cls.clone();
                    k.push(c);
                    *next.entry((k, big.mul(w, img))).or_default() += n;
                }
            }
            state = next;
        }
        let mut hist: HashMap<(Vec<usize>, usize), u64> = HashMap::new();
        for ((cls, w), n) in state {
            *hist.entry((cls, big_class[w])).or_default() += n;
        }
        let mut counts: Vec<(Vec<usize>, usize, u64)> = hist.into_iter().map(|((a, b), n)| (a, b, n)).collect();
        counts.sort();
        Ok(Fusion { counts, order: sub.order() })
    })
}

fn factor_indices(sub: &RootSubsystem, e: &Irrep) -> Result<Vec<usize>> {
    if e.types() != sub.types() {
        return Err(Error::Invalid(format!("{e} is not a character of W_J with factors {:?}", sub.types())));
    }
    e.factors()
        .iter()
        .map(|(ty, l)| char_table(*ty)?.label_index(l).ok_or_else(|| Error::Invalid(format!("unknown label {l}"))))
        .collect()
}

/// `⟨Ind_{W_J}^W e, χ⟩` for every irreducible `χ` of `W`, in table order.
pub fn induce(sub: &RootSubsystem, e: &Irrep) -> Result<Vec<u64>> {
    let idx = factor_indices(sub, e)?;
    let fus = fusion(sub)?;
    let tables = sub.types().iter().map(|&t| char_table(t)).collect::<Result<Vec<_>>>()?;
    let big = char_table(sub.ambient)?;
    let mut out = Vec::with_capacity(big.num_irreps());
    for chi in 0..big.num_irreps() {
        let mut total: i128 = 0;
        for (cls, c, n) in &fus.counts {
            let mut v = i128::from(*n) * i128::from(big.value(chi, *c));
            for (k, &fc) in cls.iter().enumerate() {
                v *= i128::from(tables[k].value(idx[k], fc));
            }
            total += v;
        }
        let order = i128::from(fus.order);
        if total % order != 0 || total < 0 {
            return Err(Error::Internal(format!("non-integral induced multiplicity {total}/{order}")));
        }
        out.push((total / order) as u64);
    }
    Ok(out)
}

/// `⟨Ind_{W_J}^W e, e'⟩`.
pub fn induce_multiplicity(sub: &RootSubsystem, e: &Irrep, e2: &Irrep) -> Result<u64> {
    let label = e2.label().filter(|_| e2.types() == vec![sub.ambient]);
    let label = label.ok_or_else(|| Error::Invalid(format!("{e2} is not a character of W({})", sub.ambient)))?;
    let i = char_table(sub.ambient)?.label_index(label).unwrap();
    Ok(induce(sub, e)?[i])
}

/// Truncated induction: the unique constituent of `Ind e` whose
/// b-invariant equals that of `e`, which must occur exactly once.
pub fn j_induce(sub: &RootSubsystem, e: &Irrep) -> Result<Irrep> {
    let mults = induce(sub, e)?;
    let big = char_table(sub.ambient)?;
    let b = e.b();
    if let Some(i) = (0..mults.len()).find(|&i| mults[i] > 0 && big.b(i) < b) {
        return Err(Error::Internal(format!("Ind {e} has constituent {} of smaller b", big.label(i))));
    }
    let hits: Vec<usize> = (0..mults.len()).filter(|&i| mults[i] > 0 && big.b(i) == b).collect();
    match hits.as_slice() {
        [i] if mults[*i] == 1 => Irrep::simple(sub.ambient, big.label(*i).clone()),
        _ => Err(Error::Tie {
            what: format!("j-induction of {e} to W({})", sub.ambient),
            candidates: hits.iter().map(|&i| format!("{} (x{})", big.label(i), mults[i])).collect(),
        }),
    }
}
