use clap::ValueEnum;
use kaluza_core::rational::format_rational;
use kaluza_core::Series;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

pub fn series(s: &Series, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", s.to_json()),
        Format::Csv => {
            let mut out = String::from("n,coeff\n");
            for (n, c) in s.coeffs().iter().enumerate() {
                out.push_str(&format!("{n},{}\n", format_rational(c)));
            }
            out
        }
        Format::Table => {
            let rows: Vec<(String, String)> = s
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| (n.to_string(), format_rational(c)))
                .collect();
            aligned(&rows)
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) if m.contains_key("order") && m.contains_key("coeffs") => {
            let coeffs: Vec<&str> = m["coeffs"].as_array().into_iter().flatten().filter_map(Value::as_str).collect();
            out.push((prefix.to_string(), format!("[{}]", coeffs.join(" "))));
        }
        Value::Object(m) => {
            for (k, v) in m {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            out.push((prefix.to_string(), format!("[{}]", items.join(" "))));
        }
        Value::Array(a) => {
            for (i, v) in a.iter().enumerate() {
                flatten(&key(&i.to_string()), v, out);
            }
        }
        _ => out.push((prefix.to_string(), scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn aligned(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

/// JSON on one line, or flattened `key,value` rows.
pub fn value<T: Serialize>(v: &T, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string(v).expect("report types serialize")),
        Format::Csv | Format::Table => {
            let json = serde_json::to_value(v).expect("report types serialize");
            let mut rows = Vec::new();
            flatten("", &json, &mut rows);
            if format == Format::Table {
                aligned(&rows)
            } else {
                let mut out = String::from("key,value\n");
                for (k, v) in rows {
                    out.push_str(&format!("{k},{v}\n"));
                }
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use kaluza_core::rational::rat;

    #[test]
    fn series_formats() {
        let s = Series::new(vec![rat(1, 1), rat(-3, 2)]).unwrap();
        assert_eq!(series(&s, Format::Json), "{\"order\":1,\"coeffs\":[\"1\",\"-3/2\"]}\n");
        assert_eq!(series(&s, Format::Csv), "n,coeff\n0,1\n1,-3/2\n");
        assert_eq!(series(&s, Format::Table), "0  1\n1  -3/2\n");
    }

    #[test]
    fn nested_values_flatten() {
        let v = serde_json::json!({"holds": false, "witness": 2, "inner": {"x": ["1", "2"]}});
        assert_eq!(value(&v, Format::Csv), "key,value\nholds,false\ninner.x,[1 2]\nwitness,2\n");
    }
}
