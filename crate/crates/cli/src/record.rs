//! One output record per invocation, as a JSON line or a two-line CSV.

use serde_json::{Map, Value};

#[derive(Debug, Clone, PartialEq, Default)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub diagnostics: Vec<String>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord { command: command.to_string(), ..Default::default() }
    }

    pub fn input(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), v.into());
        self
    }

    pub fn output(&mut self, key: &str, v: impl Into<Value>) {
        self.outputs.insert(key.to_string(), v.into());
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.diagnostics.push(msg.into());
    }

    pub fn to_json_line(&self) -> String {
        let mut root = Map::new();
        root.insert("command".into(), Value::String(self.command.clone()));
        root.insert("inputs".into(), Value::Object(self.inputs.clone()));
        root.insert("outputs".into(), Value::Object(self.outputs.clone()));
        root.insert(
            "diagnostics".into(),
            Value::Array(self.diagnostics.iter().cloned().map(Value::String).collect()),
        );
        let mut s = String::new();
        write_json(&Value::Object(root), &mut s);
        s
    }

    /// Header and one row: inputs then outputs, in insertion order. Nested
    /// values are written as compact JSON in a quoted field.
    pub fn to_csv(&self) -> String {
        let cells: Vec<(&String, &Value)> = self.inputs.iter().chain(self.outputs.iter()).collect();
        let head: Vec<String> = cells.iter().map(|(k, _)| csv_field(k)).collect();
        let row: Vec<String> = cells
            .iter()
            .map(|(_, v)| match v {
                Value::String(s) => csv_field(s),
                other => {
                    let mut s = String::new();
                    write_json(other, &mut s);
                    csv_field(&s)
                }
            })
            .collect();
        format!("{}\n{}\n", head.join(","), row.join(","))
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// 17 significant digits; plain notation for moderate exponents.
pub fn fmt17(x: f64) -> String {
    if !x.is_finite() {
        return "null".into();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0.0".into() } else { "0.0".into() };
    }
    let sci = format!("{:.16e}", x);
    let (mant, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if !(-5..=16).contains(&exp) {
        return sci;
    }
    let neg = mant.starts_with('-');
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if exp < 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat('0').take((-exp - 1) as usize));
        out.push_str(&digits);
    } else {
        let int_len = exp as usize + 1;
        out.push_str(&digits[..int_len]);
        out.push('.');
        let frac = &digits[int_len..];
        out.push_str(if frac.is_empty() { "0" } else { frac });
    }
    out
}

fn write_json(v: &Value, out: &mut String) {
    match v {
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => out.push_str(&i.to_string()),
            (_, Some(u)) => out.push_str(&u.to_string()),
            _ => out.push_str(&fmt17(n.as_f64().unwrap_or(f64::NAN))),
        },
        Value::Array(a) => {
            out.push('[');
            for (i, x) in a.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_json(x, out);
            }
            out.push(']');
        }
        Value::Object(m) => {
            out.push('{');
            for (i, (k, x)) in m.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&Value::String(k.clone()).to_string());
                out.push(':');
                write_json(x, out);
            }
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}

/// A float as a JSON value; non-finite values become null.
pub fn num(x: f64) -> Value {
    serde_json::Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null)
}
