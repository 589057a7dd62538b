use std::path::PathBuf;

use serde_json::{json, Value};

use orbitcalc::abc;
use orbitcalc::duality;
use orbitcalc::orbits::{self, NilpotentOrbit};
use orbitcalc::rootdata::{Isogeny, RootSystem, Series};
use orbitcalc::wavefront::{self, FaceRecord, RestrictionData, WavefrontResult};
use orbitcalc::weylrep;

use crate::render;
use crate::{Context, Failure};

/// Version of every JSON document the tool writes.
pub const SCHEMA: u64 = 1;

fn header(ctx: &Context, command: &str) -> Value {
    json!({
        "schema": SCHEMA,
        "command": command,
        "type": ctx.ct.ty.to_string(),
        "isogeny": ctx.ct.isogeny.to_string(),
    })
}

fn merge(mut head: Value, body: Value) -> Value {
    if let (Value::Object(h), Value::Object(b)) = (&mut head, body) {
        h.extend(b);
    }
    head
}

fn emit(ctx: &Context, doc: Value, human: fn(&Value) -> String) -> Result<String, Failure> {
    if ctx.json {
        Ok(serde_json::to_string_pretty(&doc)? + "\n")
    } else {
        Ok(human(&doc))
    }
}

pub fn orbits(ctx: &Context) -> Result<String, Failure> {
    let ty = ctx.ct.ty;
    let body = ctx.cache.table(ctx.ct, "orbits", || {
        let rows = orbits::enumerate_orbits(ty)
            .iter()
            .enumerate()
            .map(|(i, o)| {
                Ok(json!({
                    "index": i,
                    "orbit": o,
                    "wdd": orbits::weighted_dynkin(o).0,
                    "dimension": orbits::orbit_dimension(o),
                    "special": orbits::is_special(o)?,
                }))
            })
            .collect::<Result<Vec<_>, Failure>>()?;
        Ok(json!({ "orbits": rows, "hasse": orbits::hasse_edges(ty) }))
    })?;
    emit(ctx, merge(header(ctx, "orbits"), body), render::orbits)
}

pub fn dual_map(ctx: &Context) -> Result<String, Failure> {
    let ty = ctx.ct.ty;
    let body = ctx.cache.table(ctx.ct, "dual-map", || {
        let rows = orbits::enumerate_orbits(ty)
            .iter()
            .map(|o| {
                Ok(json!({
                    "orbit": o,
                    "special": orbits::is_special(o)?,
                    "springer": weylrep::springer_irrep(o)?.to_string(),
                    "dual_ls": orbits::dual_ls(o)?,
                    "dual_bv": orbits::dual_bv(o)?,
                }))
            })
            .collect::<Result<Vec<_>, Failure>>()?;
        Ok(json!({ "dual_type": ty.dual().to_string(), "rows": rows }))
    })?;
    emit(ctx, merge(header(ctx, "dual-map"), body), render::dual_map)
}

pub fn unramified(ctx: &Context) -> Result<String, Failure> {
    let ct = ctx.ct;
    let body = ctx.cache.table(ct, "unramified", || {
        let rs = RootSystem::new(ct);
        let pairs = abc::enumerate_pairs(&rs)?.len();
        let g2 = if ct.series() == Series::G { Some(duality::g2_rows()?) } else { None };
        let classes = abc::classes(&rs)?
            .iter()
            .map(|c| {
                let inv = duality::pair_invariant(&rs, &c.representative)?;
                let component = g2.as_ref().and_then(|rows| {
                    rows.iter().find(|r| r.representative == c.representative).map(|r| r.class.clone())
                });
                Ok(json!({
                    "representative": c.representative,
                    "representative_text": c.representative.to_string(),
                    "members": c.members,
                    "orbit": inv.orbit,
                    "dual_orbit": inv.dual_orbit,
                    "component_class": component,
                }))
            })
            .collect::<Result<Vec<_>, Failure>>()?;
        let invariants = duality::enumerate_nobc(&rs)?;
        Ok(json!({
            "pairs": pairs,
            "classes": classes,
            "invariants": *invariants,
            "hasse_a": duality::hasse_a(&rs)?,
        }))
    })?;
    emit(ctx, merge(header(ctx, "unramified"), body), render::unramified)
}

fn wavefront_doc(ctx: &Context, command: &str, wf: &WavefrontResult, extra: Value) -> Result<Value, Failure> {
    let body = merge(serde_json::to_value(wf)?, extra);
    Ok(merge(header(ctx, command), body))
}

pub fn arthur_wf(ctx: &Context, dual_orbit: &str) -> Result<String, Failure> {
    let rs = RootSystem::new(ctx.ct);
    let o = NilpotentOrbit::parse(ctx.ct.ty.dual(), dual_orbit).map_err(|e| Failure::Usage(e.to_string()))?;
    if ctx.ct.isogeny != Isogeny::Adjoint {
        return Err(Failure::Usage("arthur-wf needs --isogeny adjoint".into()));
    }
    let wf = wavefront::arthur_wf(&rs, &o)?;
    let check = wavefront::cross_check_arthur(&rs, &o)?;
    let doc = wavefront_doc(ctx, "arthur-wf", &wf, json!({ "dual_orbit": o, "cross_check": check }))?;
    emit(ctx, doc, render::wavefront)
}

pub enum WfInput {
    File(PathBuf),
    Pattern(String),
}

pub fn local_wf(ctx: &Context, input: WfInput) -> Result<String, Failure> {
    let rs = RootSystem::new(ctx.ct);
    let pattern = match &input {
        WfInput::Pattern(p) => Some(p.clone()),
        WfInput::File(_) => None,
    };
    let data = match input {
        WfInput::File(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let records: Vec<FaceRecord> = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            RestrictionData::from_records(&rs, &records).map_err(|e| Failure::Usage(e.to_string()))?
        }
        WfInput::Pattern(p) if p == "steinberg" => RestrictionData::steinberg(&rs)?,
        WfInput::Pattern(_) => RestrictionData::trivial(&rs)?,
    };
    let wf = wavefront::local_wf(&rs, &data)?;
    let doc = wavefront_doc(ctx, "local-wf", &wf, json!({ "pattern": pattern }))?;
    emit(ctx, doc, render::wavefront)
}
