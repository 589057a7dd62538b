//! Property checks over small types, run by `orbitcalc selftest`.

use std::fmt::Write;

use orbitcalc::abc;
use orbitcalc::duality::{self, leq_a};
use orbitcalc::orbits::{self, NilpotentOrbit};
use orbitcalc::partitions::{self, OrbitFamily};
use orbitcalc::rootdata::{CartanType, Isogeny, RootSystem, SimpleType};
use orbitcalc::wavefront::{self, RestrictionData};
use orbitcalc::weylrep::{self, char_table, families};

use crate::Failure;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: orbitcalc::Error) -> String {
    e.to_string()
}

fn ty(s: &str) -> SimpleType {
    s.parse().expect("built-in type names parse")
}

fn adjoint(s: &str) -> RootSystem {
    RootSystem::new(CartanType { ty: ty(s), isogeny: Isogeny::Adjoint })
}

fn collapse_is_dominance_max() -> Check {
    for n in 1..=5 {
        for f in [OrbitFamily::A(n), OrbitFamily::B(n), OrbitFamily::C(n), OrbitFamily::D(n)] {
            let valid = partitions::valid_partitions(f);
            for p in partitions::partitions_of(f.size()) {
                let c = partitions::collapse(&p, f).map_err(err)?;
                let below: Vec<_> =
                    valid.iter().filter(|q| partitions::dominance_leq(q, &p).unwrap_or(false)).collect();
                ensure(below.contains(&&c), || format!("{f:?}: collapse of {p} is not below it"))?;
                for q in below {
                    ensure(partitions::dominance_leq(q, &c).map_err(err)?, || {
                        format!("{f:?}: {q} is below {p} but not below its collapse {c}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn transpose_involution() -> Check {
    for n in 0..=10 {
        for p in partitions::partitions_of(n) {
            ensure(partitions::transpose(&partitions::transpose(&p)) == p, || format!("transpose twice moves {p}"))?;
        }
    }
    Ok(())
}

fn orthogonality() -> Check {
    for t in ["A4", "B3", "B4", "C3", "D4", "G2"] {
        let table = char_table(ty(t)).map_err(err)?;
        let order = i128::from(table.order());
        for i in 0..table.num_irreps() {
            for j in 0..table.num_irreps() {
                let ip = table.inner_product_raw(table.values(i), table.values(j));
                let want = if i == j { order } else { 0 };
                ensure(ip == want, || format!("{t}: <chi_{i}, chi_{j}> = {ip}/{order}"))?;
            }
        }
    }
    Ok(())
}

fn one_special_per_family() -> Check {
    for t in ["A4", "B3", "B4", "C4", "D4", "D5", "G2"] {
        let f = families(ty(t)).map_err(err)?;
        for k in 0..f.num_families() {
            let n = f.specials_in(ty(t), k).len();
            ensure(n == 1, || format!("{t}: family {k} has {n} special members"))?;
        }
    }
    Ok(())
}

fn springer_respects_special() -> Check {
    for t in ["A4", "B3", "C3", "D4", "G2"] {
        for o in orbits::enumerate_orbits(ty(t)) {
            let e = weylrep::springer_irrep(&o).map_err(err)?;
            let so = orbits::is_special(&o).map_err(err)?;
            ensure(weylrep::is_special(&e) == so, || format!("{t}: {o} special = {so} but Springer({o}) = {e}"))?;
            ensure(weylrep::springer_orbit(&e).map_err(err)? == o, || format!("{t}: Springer round trip at {o}"))?;
        }
    }
    Ok(())
}

fn g2_counts() -> Check {
    let rs = adjoint("G2");
    let pairs = abc::enumerate_pairs(&rs).map_err(err)?.len();
    let classes = abc::classes(&rs).map_err(err)?.len();
    ensure(pairs == 8 && classes == 7, || format!("G2: {pairs} pairs, {classes} classes"))
}

fn bala_carter_pairs() -> Check {
    for t in ["A3", "B3", "C3", "D4", "G2"] {
        let rs = adjoint(t);
        for p in abc::enumerate_pairs(&rs).map_err(err)? {
            if p.j.contains(&0) {
                continue;
            }
            let inv = duality::pair_invariant(&rs, &p).map_err(err)?;
            let want = orbits::dual_bv(&inv.orbit).map_err(err)?;
            ensure(inv.dual_orbit == want, || format!("{t}: {p} gives {inv}, expected dual {want}"))?;
        }
    }
    Ok(())
}

fn surjective_and_ordered() -> Check {
    for t in ["A2", "A3", "B2", "C2", "B3", "C3", "G2"] {
        let rs = adjoint(t);
        let all = duality::enumerate_nobc(&rs).map_err(err)?;
        for o in orbits::enumerate_orbits(ty(t).dual()) {
            ensure(all.iter().any(|c| c.invariant.dual_orbit == o), || format!("{t}: {o} is not a dual orbit"))?;
        }
        for a in all.iter() {
            for b in all.iter() {
                let ab = leq_a(&a.invariant, &b.invariant).map_err(err)?;
                let ba = leq_a(&b.invariant, &a.invariant).map_err(err)?;
                ensure(!(ab && ba) || a == b, || format!("{t}: {} and {} are not antisymmetric", a.invariant, b.invariant))?;
            }
        }
    }
    Ok(())
}

fn arthur_coherence() -> Check {
    for t in ["A2", "A3", "B2", "C3", "G2"] {
        let rs = adjoint(t);
        for o in orbits::enumerate_orbits(ty(t).dual()) {
            let wf = wavefront::arthur_wf(&rs, &o).map_err(err)?;
            ensure(wf.canonical_unramified.len() == 1, || format!("{t}: arthur_wf({o}) is not a singleton"))?;
            ensure(wavefront::cross_check_arthur(&rs, &o).map_err(err)?, || format!("{t}: cross check fails at {o}"))?;
        }
        let st = wavefront::local_wf(&rs, &RestrictionData::steinberg(&rs).map_err(err)?).map_err(err)?;
        let reg = NilpotentOrbit::regular(ty(t));
        ensure(st.geometric == vec![reg], || format!("{t}: Steinberg wavefront {:?}", st.geometric))?;
    }
    Ok(())
}

type Named = (&'static str, fn() -> Check);

const CHECKS: &[Named] = &[
    ("collapse is the dominance maximum", collapse_is_dominance_max),
    ("transpose is an involution", transpose_involution),
    ("character orthogonality", orthogonality),
    ("one special character per family", one_special_per_family),
    ("Springer correspondence and special pieces", springer_respects_special),
    ("G2 pair and class counts", g2_counts),
    ("Bala-Carter pairs map to d(O)", bala_carter_pairs),
    ("dual orbits are all hit; <=_A is antisymmetric", surjective_and_ordered),
    ("spherical Arthur and Steinberg wavefront sets", arthur_coherence),
];

pub fn run() -> Result<String, Failure> {
    let mut out = String::new();
    let mut failed = 0;
    for (name, check) in CHECKS {
        match check() {
            Ok(()) => {
                let _ = writeln!(out, "ok    {name}");
            }
            Err(msg) => {
                failed += 1;
                let _ = writeln!(out, "FAIL  {name}: {msg}");
            }
        }
    }
    if failed > 0 {
        print!("{out}");
        return Err(Failure::Compute(format!("{failed} of {} checks failed", CHECKS.len())));
    }
    let _ = writeln!(out, "{} checks passed", CHECKS.len());
    Ok(out)
}
