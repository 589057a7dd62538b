//! Acceptance suite. Prints one line per criterion and exits nonzero if any
//! criterion fails.
//!
//! Expected values come from oracles written here, independently of the
//! library code paths they check: partition arithmetic by hand, Bala–Carter
//! partitions from eigenvalues of the neutral element, truncated induction
//! from Frobenius multiplicities.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use serde_json::Value;

use orbitcalc::abc::{self, AbcPair, PseudoLevi};
use orbitcalc::duality::{self, leq_a, UnramifiedClassInvariant};
use orbitcalc::orbits::{self, NilpotentOrbit};
use orbitcalc::partitions::{self, OrbitFamily, Partition};
use orbitcalc::rootdata::{CartanType, Isogeny, RootSystem, Series, SimpleType};
use orbitcalc::wavefront::{self, RestrictionData};
use orbitcalc::weylrep::{self, char_table, families, Irrep};

type Outcome = Result<String, String>;

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn e2s<T>(r: orbitcalc::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ty(s: &str) -> SimpleType {
    s.parse().unwrap()
}

fn adjoint(s: &str) -> RootSystem {
    RootSystem::new(CartanType { ty: ty(s), isogeny: Isogeny::Adjoint })
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    check!(took < limit, "{what} took {took:?}, limit {limit:?}");
    Ok(())
}

// ---------------------------------------------------------------------------
// partition oracles

fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            go(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn dominated(p: &[usize], q: &[usize]) -> bool {
    let (mut a, mut b) = (0, 0);
    for i in 0..p.len().max(q.len()) {
        a += p.get(i).copied().unwrap_or(0);
        b += q.get(i).copied().unwrap_or(0);
        if a > b {
            return false;
        }
    }
    true
}

fn conjugate(p: &[usize]) -> Vec<usize> {
    let top = p.first().copied().unwrap_or(0);
    (1..=top).map(|k| p.iter().filter(|&&x| x >= k).count()).collect()
}

fn mult(p: &[usize], k: usize) -> usize {
    p.iter().filter(|&&x| x == k).count()
}

/// Parity whose parts must come with even multiplicity.
fn restricted(f: OrbitFamily) -> Option<usize> {
    match f {
        OrbitFamily::A(_) => None,
        OrbitFamily::B(_) | OrbitFamily::D(_) => Some(0),
        OrbitFamily::C(_) => Some(1),
    }
}

fn is_valid(p: &[usize], f: OrbitFamily) -> bool {
    match restricted(f) {
        None => true,
        Some(par) => p.iter().all(|&k| k % 2 != par || mult(p, k).is_multiple_of(2)),
    }
}

// ---------------------------------------------------------------------------
// 1

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let rs = adjoint("G2");
    let pairs = e2s(abc::enumerate_pairs(&rs))?;
    check!(pairs.len() == 8, "{} pairs", pairs.len());
    let classes = e2s(abc::classes(&rs))?;
    check!(classes.len() == 7, "{} classes", classes.len());
    let big: Vec<&Vec<AbcPair>> = classes.iter().map(|c| &c.members).filter(|m| m.len() > 1).collect();
    let expected = vec![AbcPair::new(vec![0], vec![]), AbcPair::new(vec![1], vec![])];
    check!(big.len() == 1 && *big[0] == expected, "non-singleton classes {big:?}");
    within(start, Duration::from_secs(1), "G2 enumeration")?;
    Ok(format!("8 pairs, 7 classes, only ({{a0}},{{}}) ~ ({{a1}},{{}}), {:?}", start.elapsed()))
}

// ---------------------------------------------------------------------------
// 2

/// `j_{W_J}^W` of the sign character from Frobenius multiplicities: the
/// unique constituent of least `b`.
fn j_of_sign(rs: &RootSystem, j: &[usize]) -> Result<Irrep, String> {
    let pl = e2s(PseudoLevi::new(rs, j))?;
    let sgn = e2s(Irrep::sgn(&pl.types()))?;
    let mults = e2s(weylrep::induce(pl.subsystem(), &sgn))?;
    let table = e2s(char_table(rs.simple_type()))?;
    let present: Vec<usize> = (0..mults.len()).filter(|&i| mults[i] > 0).collect();
    let least = present.iter().map(|&i| table.b(i)).min().unwrap();
    let at_least: Vec<usize> = present.into_iter().filter(|&i| table.b(i) == least).collect();
    check!(least == sgn.b(), "J = {j:?}: Ind sgn has a constituent with b = {least} < {}", sgn.b());
    check!(at_least.len() == 1 && mults[at_least[0]] == 1, "no unique minimal constituent for J = {j:?}");
    e2s(Irrep::simple(rs.simple_type(), table.label(at_least[0]).clone()))
}

fn criterion_2() -> Outcome {
    let rs = adjoint("G2");
    let nobc = e2s(duality::enumerate_nobc(&rs))?;
    check!(nobc.len() == 7, "{} invariants", nobc.len());
    let g2a1 = NilpotentOrbit::parse(ty("G2"), "G2(a1)").unwrap();
    let over: Vec<&UnramifiedClassInvariant> =
        nobc.iter().map(|c| &c.invariant).filter(|i| i.orbit == g2a1).collect();
    check!(over.len() == 3, "{} invariants over G2(a1)", over.len());
    let extra: BTreeSet<String> =
        over.iter().filter(|i| i.dual_orbit != g2a1).map(|i| i.dual_orbit.spelling()).collect();
    check!(extra == BTreeSet::from(["A1".to_string(), "~A1".to_string()]), "extra dual orbits {extra:?}");

    // With J' empty the orbit of L_J is regular; its d_LS is zero, with
    // Springer character sgn, and d_S is the dual Springer orbit of the
    // truncated induction of sgn.
    let mut assignment = BTreeMap::new();
    for j in [vec![0, 1], vec![0, 2]] {
        let e = j_of_sign(&rs, &j)?;
        let dual = e2s(weylrep::springer_orbit(&weylrep::dual_irrep(&e)))?;
        let inv = e2s(duality::pair_invariant(&rs, &AbcPair::new(j.clone(), vec![])))?;
        check!(inv.orbit == g2a1 && inv.dual_orbit == dual, "J = {j:?}: {inv}, oracle dual {dual}");
        assignment.insert(j, dual.spelling());
    }

    let golden: Value = serde_json::from_str(include_str!("golden/g2_parameterisation.json")).unwrap();
    let rows = serde_json::to_value(e2s(duality::g2_rows())?).unwrap();
    check!(rows == golden, "rows differ from golden file: {rows}");
    for row in golden.as_array().unwrap() {
        let j: Vec<usize> = serde_json::from_value(row["representative"]["J"].clone()).unwrap();
        if let Some(d) = assignment.get(&j) {
            check!(row["dual_orbit"] == d.as_str(), "golden row for {j:?} disagrees with the oracle");
        }
    }
    Ok(format!("(G2(a1),(12)) <- {{a0,a2}} dual {}, (G2(a1),(123)) <- {{a0,a1}} dual {}", assignment[&vec![0, 2]], assignment[&vec![0, 1]]))
}

// ---------------------------------------------------------------------------
// 3

fn dynkin_adjacent(series: Series, n: usize, a: usize, b: usize) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    match series {
        Series::D => (b == a + 1 && b < n) || (a == n - 2 && b == n),
        _ => b == a + 1,
    }
}

/// Components of `J ⊆ {1..n}` in the finite Dynkin diagram.
fn components(series: Series, n: usize, j: &[usize]) -> Vec<Vec<usize>> {
    let mut left: BTreeSet<usize> = j.iter().copied().collect();
    let mut out = Vec::new();
    while let Some(&s) = left.iter().next() {
        let mut comp = vec![s];
        left.remove(&s);
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            let next: Vec<usize> = left.iter().copied().filter(|&y| dynkin_adjacent(series, n, x, y)).collect();
            for y in next {
                left.remove(&y);
                comp.push(y);
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Weighted Dynkin diagram of a classical orbit from the eigenvalues of its
/// neutral element.
fn wdd_of(series: Series, m: usize, p: &[usize]) -> Vec<i64> {
    let mut h: Vec<i64> = p.iter().flat_map(|&d| (0..d).map(move |i| d as i64 - 1 - 2 * i as i64)).collect();
    h.sort_unstable_by(|a, b| b.cmp(a));
    let h = &h[..m];
    let mut w: Vec<i64> = h.windows(2).map(|x| x[0] - x[1]).collect();
    w.push(match series {
        Series::B => h[m - 1],
        Series::C => 2 * h[m - 1],
        _ => h[m - 2] + h[m - 1],
    });
    w
}

fn distinguished_partitions(series: Series, m: usize) -> Vec<Vec<usize>> {
    let total = if series == Series::B { 2 * m + 1 } else { 2 * m };
    let want_odd = series != Series::C;
    all_partitions(total)
        .into_iter()
        .filter(|p| p.iter().all(|&k| (k % 2 == 1) == want_odd && mult(p, k) == 1))
        .collect()
}

/// Partition of the Bala–Carter orbit of `(J, J′)`, `J ⊆ {1..n}`, or `None`
/// when `J′` is not distinguished. Each `GL(k)` block of the Levi carries
/// its regular orbit; the classical block carries the distinguished orbit
/// whose diagram is 0 on `J′` and 2 elsewhere.
fn bala_carter_partition(series: Series, n: usize, j: &[usize], jp: &[usize]) -> Option<Vec<usize>> {
    let size = match series {
        Series::A => n + 1,
        Series::B => 2 * n + 1,
        _ => 2 * n,
    };
    let mut parts = Vec::new();
    let mut tail: Option<Vec<usize>> = None;
    // in type D, {n-1} and {n} together make up an SO(4) block
    let d_tail = series == Series::D && j.contains(&(n - 1)) && j.contains(&n);
    for c in components(series, n, j) {
        let is_tail = match series {
            Series::A => false,
            Series::D => d_tail && (c.contains(&(n - 1)) || c.contains(&n)),
            _ => c.contains(&n),
        };
        if is_tail {
            let t = tail.get_or_insert_with(Vec::new);
            t.extend(c);
            t.sort_unstable();
        } else {
            if c.iter().any(|x| jp.contains(x)) {
                return None;
            }
            let k = c.len() + 1;
            parts.push(k);
            if series != Series::A {
                parts.push(k);
            }
        }
    }
    match tail {
        Some(t) => {
            let m = t.len();
            let want: Vec<i64> = t.iter().map(|x| if jp.contains(x) { 0 } else { 2 }).collect();
            let mu = distinguished_partitions(series, m).into_iter().find(|mu| wdd_of(series, m, mu) == want)?;
            parts.extend(mu);
        }
        None if series == Series::B => parts.push(1),
        None => {}
    }
    let used: usize = parts.iter().sum();
    parts.extend(std::iter::repeat_n(1, size - used));
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Some(parts)
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4"] {
        let rs = adjoint(t);
        let (series, n) = (rs.simple_type().series(), rs.rank());
        let pairs: BTreeSet<AbcPair> =
            e2s(abc::enumerate_pairs(&rs))?.into_iter().filter(|p| !p.j.contains(&0)).collect();
        let mut oracle_pairs = BTreeSet::new();
        for k in 0..=n {
            for j in (1..=n).combinations(k) {
                for kp in 0..=j.len() {
                    for jp in j.iter().copied().combinations(kp) {
                        if bala_carter_partition(series, n, &j, &jp).is_some() {
                            oracle_pairs.insert(AbcPair::new(j.clone(), jp));
                        }
                    }
                }
            }
        }
        check!(pairs == oracle_pairs, "{t}: distinguished pairs differ");
        let mut very_even_marks: BTreeMap<Vec<usize>, BTreeSet<String>> = BTreeMap::new();
        for p in &pairs {
            let want = bala_carter_partition(series, n, &p.j, &p.jprime).unwrap();
            let inv = e2s(duality::pair_invariant(&rs, p))?;
            let got = inv.orbit.partition().map(|q| q.parts().to_vec());
            check!(got.as_ref() == Some(&want), "{t} {p}: orbit {}, oracle {want:?}", inv.orbit);
            if let Some(m) = inv.orbit.mark() {
                very_even_marks.entry(want).or_default().insert(format!("{m:?}"));
            }
            let d = e2s(orbits::dual_bv(&inv.orbit))?;
            check!(inv.dual_orbit == d, "{t} {p}: dual orbit {}, d(O) = {d}", inv.dual_orbit);
            checked += 1;
        }
        for (p, marks) in very_even_marks {
            check!(marks.len() == 2, "{t}: very even {p:?} reached with marks {marks:?} only");
        }
    }
    within(start, Duration::from_secs(60), "Bala–Carter check")?;
    Ok(format!("{checked} Bala–Carter pairs over rank <= 4, {:?}", start.elapsed()))
}

// ---------------------------------------------------------------------------
// 4

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for total in 2..=6 {
        let t = SimpleType::new(Series::A, total - 1).unwrap();
        let rs = RootSystem::new(CartanType { ty: t, isogeny: Isogeny::Adjoint });
        for p in all_partitions(total) {
            let o = NilpotentOrbit::classical(t, Partition::new(p.clone()), None).unwrap();
            let want = conjugate(&p);
            let d = e2s(orbits::dual_bv_via_springer(&o))?;
            check!(d.partition().unwrap().parts() == want.as_slice(), "d({p:?}) = {d}, want {want:?}");
            let wf = e2s(wavefront::arthur_wf(&rs, &o))?;
            check!(
                wf.geometric.len() == 1 && wf.geometric[0].partition().unwrap().parts() == want.as_slice(),
                "arthur_wf({p:?}) = {:?}",
                wf.geometric
            );
            checked += 1;
        }
    }
    Ok(format!("{checked} partitions of n <= 6"))
}

// ---------------------------------------------------------------------------
// 5

fn criterion_5() -> Outcome {
    for t in ["B2", "C2", "B3", "C3", "A1", "A2", "A3", "G2"] {
        let rs = adjoint(t);
        let mut hit = BTreeSet::new();
        for c in e2s(abc::classes(&rs))?.iter() {
            hit.insert(e2s(duality::pair_invariant(&rs, &c.representative))?.dual_orbit.spelling());
        }
        let dual = rs.simple_type().dual();
        let expected = orbit_count_oracle(dual);
        let all: BTreeSet<String> = orbits::enumerate_orbits(dual).iter().map(|o| o.spelling()).collect();
        check!(all.len() == expected, "{dual}: {} orbits enumerated, {expected} expected", all.len());
        let missing: Vec<&String> = all.difference(&hit).collect();
        check!(missing.is_empty(), "{t}: dual orbits {missing:?} are not hit");
    }
    Ok("d_S onto the dual orbits for B2 C2 B3 C3 A1 A2 A3 G2".into())
}

/// Number of nilpotent orbits, counted from partitions.
fn orbit_count_oracle(t: SimpleType) -> usize {
    let n = t.rank();
    let (f, size) = match t.series() {
        Series::A => (OrbitFamily::A(n), n + 1),
        Series::B => (OrbitFamily::B(n), 2 * n + 1),
        Series::C => (OrbitFamily::C(n), 2 * n),
        Series::D => (OrbitFamily::D(n), 2 * n),
        Series::G => return 5,
    };
    all_partitions(size)
        .iter()
        .filter(|p| is_valid(p, f))
        .map(|p| if matches!(f, OrbitFamily::D(_)) && p.iter().all(|&k| k % 2 == 0) { 2 } else { 1 })
        .sum()
}

// ---------------------------------------------------------------------------
// 6

/// Closure order from dominance; the G2 chain; very even siblings are
/// incomparable.
fn closure_oracle(a: &NilpotentOrbit, b: &NilpotentOrbit) -> bool {
    match (a.partition(), b.partition()) {
        (Some(p), Some(q)) => {
            let siblings = p == q && a.mark() != b.mark();
            dominated(p.parts(), q.parts()) && !siblings
        }
        _ => {
            let chain = ["0", "A1", "~A1", "G2(a1)", "G2"];
            let pos = |o: &NilpotentOrbit| chain.iter().position(|s| *s == o.spelling()).unwrap();
            pos(a) <= pos(b)
        }
    }
}

fn leq_a_oracle(x: &UnramifiedClassInvariant, y: &UnramifiedClassInvariant) -> bool {
    closure_oracle(&x.orbit, &y.orbit) && closure_oracle(&y.dual_orbit, &x.dual_orbit)
}

fn criterion_6() -> Outcome {
    let mut total = 0;
    for t in ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"] {
        let rs = adjoint(t);
        let all: Vec<UnramifiedClassInvariant> =
            e2s(duality::enumerate_nobc(&rs))?.iter().map(|c| c.invariant.clone()).collect();
        let n = all.len();
        let mut le = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                le[i][j] = e2s(leq_a(&all[i], &all[j]))?;
                check!(le[i][j] == leq_a_oracle(&all[i], &all[j]), "{t}: leq_a({}, {}) disagrees", all[i], all[j]);
            }
        }
        for i in 0..n {
            check!(le[i][i], "{t}: not reflexive at {}", all[i]);
            for j in 0..n {
                check!(!(le[i][j] && le[j][i]) || i == j, "{t}: {} and {} are equivalent", all[i], all[j]);
                for k in 0..n {
                    check!(!(le[i][j] && le[j][k]) || le[i][k], "{t}: not transitive");
                }
            }
            let bound = e2s(orbits::dual_bv(&all[i].dual_orbit))?;
            check!(closure_oracle(&all[i].orbit, &bound), "{t}: {} is not below d({})", all[i].orbit, all[i].dual_orbit);
        }

        // monotone in the orbit of L_J, for every face
        for k in 0..=rs.rank() {
            for j in (0..=rs.rank()).combinations(k) {
                let pl = e2s(PseudoLevi::new(&rs, &j))?;
                let choices: Vec<Vec<NilpotentOrbit>> =
                    pl.types().iter().map(|&f| orbits::enumerate_orbits(f)).multi_cartesian_product().collect();
                let invs: Vec<UnramifiedClassInvariant> =
                    choices.iter().map(|c| duality::invariant_of(&rs, &pl, c)).collect::<orbitcalc::Result<_>>().map_err(|e| e.to_string())?;
                for (a, ia) in choices.iter().zip(&invs) {
                    for (b, ib) in choices.iter().zip(&invs) {
                        if a.iter().zip(b).all(|(x, y)| closure_oracle(x, y)) {
                            check!(leq_a_oracle(ia, ib), "{t} J = {j:?}: {ia} not <=_A {ib}");
                            total += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("partial order, canonical bound, {total} monotone comparisons"))
}

// ---------------------------------------------------------------------------
// 7

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2"] {
        let rs = adjoint(t);
        let dual = rs.simple_type().dual();
        for o in orbits::enumerate_orbits(dual) {
            let wf = e2s(wavefront::arthur_wf(&rs, &o))?;
            check!(wf.canonical_unramified.len() == 1, "{t}: arthur_wf({o}) has {} members", wf.canonical_unramified.len());
            check!(e2s(wavefront::cross_check_arthur(&rs, &o))?, "{t}: cross check fails at {o}");
            checked += 1;
        }
        let st = e2s(wavefront::local_wf(&rs, &e2s(RestrictionData::steinberg(&rs))?))?;
        let reg = NilpotentOrbit::regular(rs.simple_type());
        check!(st.geometric == vec![reg.clone()], "{t}: Steinberg geometric {:?}", st.geometric);
        let spherical = e2s(wavefront::arthur_wf(&rs, &NilpotentOrbit::zero(dual)))?;
        check!(st == spherical, "{t}: Steinberg {:?} vs arthur_wf(0) {:?}", st, spherical);
    }
    Ok(format!("{checked} dual orbits; Steinberg geometric = regular = arthur_wf(0^v) in every type"))
}

// ---------------------------------------------------------------------------
// 8

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for total in 1..=10 {
        let all = all_partitions(total);
        let mut families = vec![OrbitFamily::A(total - 1)];
        if total % 2 == 1 {
            families.push(OrbitFamily::B(total / 2));
        } else {
            families.push(OrbitFamily::C(total / 2));
            families.push(OrbitFamily::D(total / 2));
        }
        for f in families {
            if total == 1 && f == OrbitFamily::A(0) {
                continue;
            }
            let valid: Vec<&Vec<usize>> = all.iter().filter(|p| is_valid(p, f)).collect();
            for p in &all {
                let below: Vec<&&Vec<usize>> = valid.iter().filter(|q| dominated(q, p)).collect();
                let maxima: Vec<&&&Vec<usize>> = below.iter().filter(|q| below.iter().all(|r| dominated(r, q))).collect();
                check!(maxima.len() == 1, "{f:?}: no dominance maximum below {p:?}");
                let got = e2s(partitions::collapse(&Partition::new(p.clone()), f))?;
                check!(got.parts() == maxima[0].as_slice(), "{f:?}: collapse {p:?} = {got}, oracle {:?}", maxima[0]);
                checked += 1;
            }
        }
    }
    for total in 0..=12 {
        let all = all_partitions(total);
        for p in &all {
            let t = e2s(Ok(partitions::transpose(&Partition::new(p.clone()))))?;
            check!(t.parts() == conjugate(p).as_slice(), "transpose of {p:?}");
            check!(partitions::transpose(&t).parts() == p.as_slice(), "transpose twice moves {p:?}");
        }
        for (p, q) in all.iter().cartesian_product(&all) {
            let lib = e2s(partitions::dominance_leq(&Partition::new(p.clone()), &Partition::new(q.clone())))?;
            check!(lib == dominated(p, q), "dominance {p:?} {q:?}");
            check!(dominated(p, q) == dominated(&conjugate(q), &conjugate(p)), "order reversal at {p:?} {q:?}");
        }
    }
    within(start, Duration::from_secs(30), "partition kernel")?;
    Ok(format!("{checked} collapses, transposes to 12, {:?}", start.elapsed()))
}

// ---------------------------------------------------------------------------
// 9

fn criterion_9() -> Outcome {
    let mut induced = 0;
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2"] {
        let table = e2s(char_table(ty(t)))?;
        let order = i128::from(table.order());
        let k = table.num_irreps();
        check!(k == table.classes().len(), "{t}: {k} characters, {} classes", table.classes().len());
        check!(table.class_sizes().iter().map(|&s| i128::from(s)).sum::<i128>() == order, "{t}: class sizes");
        for i in 0..k {
            for j in 0..k {
                let ip = table.inner_product_raw(table.values(i), table.values(j));
                check!(ip == if i == j { order } else { 0 }, "{t}: <chi_{i}, chi_{j}> = {ip}/{order}");
            }
        }
        // column orthogonality
        for a in 0..k {
            for b in 0..k {
                let s: i128 = (0..k).map(|i| i128::from(table.value(i, a)) * i128::from(table.value(i, b))).sum();
                let want = if a == b { order / i128::from(table.class_sizes()[a]) } else { 0 };
                check!(s == want, "{t}: columns {a}, {b}");
            }
        }

        let fam = e2s(families(ty(t)))?;
        for f in 0..fam.num_families() {
            check!(fam.specials_in(ty(t), f).len() == 1, "{t}: family {f} special count");
        }

        let rs = adjoint(t);
        let n = rs.rank();
        for size in 0..=n {
            for j in (0..=n).combinations(size) {
                let pl = e2s(PseudoLevi::new(&rs, &j))?;
                for e in e2s(weylrep::irreps(&pl.types()))? {
                    if !weylrep::is_special(&e) {
                        continue;
                    }
                    let got = e2s(weylrep::j_induce(pl.subsystem(), &e))?;
                    let mults = e2s(weylrep::induce(pl.subsystem(), &e))?;
                    let with_b: Vec<usize> = (0..k).filter(|&i| mults[i] > 0 && table.b(i) == e.b()).collect();
                    check!(
                        (0..k).all(|i| mults[i] == 0 || table.b(i) >= e.b()),
                        "{t} J = {j:?}: Ind {e} has a constituent of b below {}",
                        e.b()
                    );
                    check!(with_b.len() == 1 && mults[with_b[0]] == 1, "{t} J = {j:?}: {e} has no unique j-induction");
                    check!(got.label() == Some(table.label(with_b[0])), "{t} J = {j:?}: j({e}) = {got}");
                    check!(got.b() == e.b(), "{t} J = {j:?}: b changes");
                    induced += 1;
                }
            }
        }
    }
    Ok(format!("orthogonality, unique specials, {induced} j-inductions up to B4/C4/D4/G2"))
}

// ---------------------------------------------------------------------------

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("G2 enumeration", criterion_1),
        ("G2 parameterisation", criterion_2),
        ("Bala–Carter pairs give (O, d(O))", criterion_3),
        ("type A duality is transpose", criterion_4),
        ("d_S is surjective", criterion_5),
        ("order properties of <=_A", criterion_6),
        ("spherical Arthur wavefront sets", criterion_7),
        ("partition kernel", criterion_8),
        ("Weyl group layer", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail} [{:.2?}]", i + 1, start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    } else {
        println!("all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    }
}
