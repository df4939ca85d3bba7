//! Plain-text rendering of the JSON outputs, for `--pretty`.

use std::fmt::Write;

use serde_json::Value;

fn label(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("({})", items.iter().map(label).collect::<Vec<_>>().join(",")),
        Value::Object(m) => {
            let (open, sep, close, items) = match (m.get("bary"), m.get("orbit")) {
                (Some(Value::Array(b)), _) => ("{", ",", "}", b),
                (_, Some(Value::Array(o))) => ("[", "|", "]", o),
                _ => return v.to_string(),
            };
            format!("{open}{}{close}", items.iter().map(label).collect::<Vec<_>>().join(sep))
        }
        other => other.to_string(),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn complex(out: &mut String, v: &Value) {
    let vertices = v["vertices"].as_array().map(Vec::as_slice).unwrap_or_default();
    let facets = v["facets"].as_array().map(Vec::as_slice).unwrap_or_default();
    let _ = writeln!(out, "vertices ({}): {}", vertices.len(), vertices.iter().map(label).collect::<Vec<_>>().join(" "));
    let _ = writeln!(out, "facets ({}):", facets.len());
    for f in facets {
        let members = f.as_array().map(Vec::as_slice).unwrap_or_default();
        let _ = writeln!(out, "  {}", members.iter().map(label).collect::<Vec<_>>().join(" "));
    }
}

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: Vec<&str>| {
        cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
    };
    let _ = writeln!(out, "{}", line(header.to_vec()));
    for r in rows {
        let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
    }
}

pub fn render(v: &Value) -> String {
    let mut out = String::new();
    if v.get("vertices").is_some() && v.get("facets").is_some() {
        complex(&mut out, v);
    } else if let Some(steps) = v.get("steps").and_then(Value::as_array) {
        let rows: Vec<Vec<String>> = steps
            .iter()
            .enumerate()
            .map(|(i, s)| {
                vec![
                    (i + 1).to_string(),
                    scalar(&s["step"]["op"]),
                    s["output"].to_string(),
                    s.get("time_ms").and_then(Value::as_f64).map_or_else(|| "-".into(), |t| format!("{t:.2}")),
                ]
            })
            .collect();
        table(&mut out, &["#", "op", "output", "ms"], &rows);
        if let Some(result) = v.get("result") {
            out.push('\n');
            complex(&mut out, result);
        }
    } else if let Some(orbits) = v.get("orbits").and_then(Value::as_array) {
        let rows: Vec<Vec<String>> = orbits
            .iter()
            .enumerate()
            .map(|(i, o)| {
                let members = o.as_array().map(Vec::as_slice).unwrap_or_default();
                let shown: Vec<String> = members
                    .iter()
                    .map(|s| format!("<{}>", s.as_array().map(Vec::as_slice).unwrap_or_default().iter().map(scalar).collect::<Vec<_>>().join(" ")))
                    .collect();
                vec![i.to_string(), members.len().to_string(), shown.join(" ")]
            })
            .collect();
        table(&mut out, &["orbit", "size", "simplices"], &rows);
    } else if let Some(m) = v.as_object() {
        let rows: Vec<Vec<String>> = m.iter().map(|(k, v)| vec![k.clone(), scalar(v)]).collect();
        table(&mut out, &["key", "value"], &rows);
    } else {
        let _ = writeln!(out, "{v}");
    }
    out
}
