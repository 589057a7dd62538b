//! Plain-text tables, read back from the JSON documents so that both forms
//! always agree.

use std::fmt::Write;

use serde_json::Value;

fn s(v: &Value) -> String {
    match v {
        Value::String(x) => x.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn list(v: &Value) -> String {
    v.as_array().map(|a| a.iter().map(s).collect::<Vec<_>>().join(" ")).unwrap_or_default()
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> =
            cells.iter().zip(&width).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    for r in rows {
        out += &line(r.clone());
    }
    out
}

fn title(doc: &Value) -> String {
    format!("{} {} ({})\n\n", s(&doc["command"]), s(&doc["type"]), s(&doc["isogeny"]))
}

fn edges(v: &Value) -> String {
    v.as_array()
        .map(|a| a.iter().map(|e| format!("{}<{}", e[0], e[1])).collect::<Vec<_>>().join(" "))
        .unwrap_or_default()
}

pub fn orbits(doc: &Value) -> String {
    let rows: Vec<Vec<String>> = doc["orbits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| {
            let wdd = o["wdd"].as_array().unwrap().iter().map(s).collect::<String>();
            vec![s(&o["index"]), s(&o["orbit"]), wdd, s(&o["dimension"]), s(&o["special"])]
        })
        .collect();
    let mut out = title(doc) + &table(&["#", "orbit", "wdd", "dim", "special"], &rows);
    let _ = writeln!(out, "\nclosure covers: {}", edges(&doc["hasse"]));
    out
}

pub fn dual_map(doc: &Value) -> String {
    let rows: Vec<Vec<String>> = doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| vec![s(&r["orbit"]), s(&r["special"]), s(&r["springer"]), s(&r["dual_ls"]), s(&r["dual_bv"])])
        .collect();
    let bv = format!("d_BV (in {})", s(&doc["dual_type"]));
    title(doc) + &table(&["orbit", "special", "springer", "d_LS", &bv], &rows)
}

pub fn unramified(doc: &Value) -> String {
    let rows: Vec<Vec<String>> = doc["classes"]
        .as_array()
        .unwrap()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            vec![
                i.to_string(),
                s(&c["representative_text"]),
                c["members"].as_array().map_or(0, |m| m.len()).to_string(),
                s(&c["orbit"]),
                s(&c["component_class"]),
                s(&c["dual_orbit"]),
            ]
        })
        .collect();
    let mut out = title(doc);
    let _ = writeln!(out, "{} pairs, {} classes\n", s(&doc["pairs"]), rows.len());
    out += &table(&["#", "representative", "size", "orbit", "class", "dual orbit"], &rows);
    let inv: Vec<Vec<String>> = doc["invariants"]
        .as_array()
        .unwrap()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            vec![i.to_string(), s(&c["invariant"]["orbit"]), s(&c["invariant"]["dual_orbit"]), s(&c["classes"])]
        })
        .collect();
    out += "\n";
    out += &table(&["#", "orbit", "dual orbit", "classes"], &inv);
    let _ = writeln!(out, "\ncovers: {}", edges(&doc["hasse_a"]));
    out
}

pub fn wavefront(doc: &Value) -> String {
    let mut out = title(doc);
    if let Some(o) = doc.get("dual_orbit") {
        let _ = writeln!(out, "dual orbit: {}", s(o));
    }
    if let Some(p) = doc.get("pattern").filter(|p| !p.is_null()) {
        let _ = writeln!(out, "pattern: {}", s(p));
    }
    let canonical: Vec<String> = doc["canonical_unramified"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| format!("({} | {})", s(&i["orbit"]), s(&i["dual_orbit"])))
        .collect();
    let _ = writeln!(out, "canonical unramified: {}", canonical.join(" "));
    let _ = writeln!(out, "geometric: {}", list(&doc["geometric"]));
    if let Some(c) = doc.get("cross_check") {
        let _ = writeln!(out, "cross check: {}", if c.as_bool() == Some(true) { "ok" } else { "FAILED" });
    }
    out
}
