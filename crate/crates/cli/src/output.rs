//! Output rendering: compact JSON with every float written to 17
//! significant digits, or an aligned two-column table for `--pretty`.

use serde_json::Value;

pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn write_number(n: &serde_json::Number, out: &mut String) {
    if n.is_f64() {
        out.push_str(&format_float(n.as_f64().unwrap()));
    } else {
        out.push_str(&n.to_string());
    }
}

pub fn to_json(v: &Value) -> String {
    let mut out = String::new();
    write_json(v, &mut out);
    out
}

fn write_json(v: &Value, out: &mut String) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => write_number(n, out),
        Value::String(s) => out.push_str(&serde_json::to_string(s).expect("strings serialize")),
        Value::Array(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_json(item, out);
            }
            out.push(']');
        }
        Value::Object(map) => {
            out.push('{');
            for (i, (k, item)) in map.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&serde_json::to_string(k).expect("keys serialize"));
                out.push(':');
                write_json(item, out);
            }
            out.push('}');
        }
    }
}

fn is_complex_pair(items: &[Value]) -> bool {
    items.len() == 2 && items.iter().all(|x| x.as_number().is_some_and(|n| n.is_f64()))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Number(n) if n.is_f64() => format_float(n.as_f64().unwrap()),
        Value::Array(items) if is_complex_pair(items) => {
            let (re, im) = (items[0].as_f64().unwrap(), items[1].as_f64().unwrap());
            let sign = if im.is_sign_negative() { '-' } else { '+' };
            format!("{} {sign} {}i", format_float(re), format_float(im.abs()))
        }
        other => to_json(other),
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, item, rows);
            }
        }
        Value::Array(items) if !is_complex_pair(items) && !items.is_empty() => {
            for (i, item) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), item, rows);
            }
        }
        other => rows.push((prefix.to_string(), scalar(other))),
    }
}

pub fn to_table(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, val)| format!("{k:<width$}  {val}\n")).collect()
}
