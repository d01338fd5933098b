use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// One report. JSON objects are `BTreeMap`-backed, so keys come out sorted
/// and repeated runs print identical bytes.
pub struct Record {
    command: &'static str,
    inputs: Map<String, Value>,
    method: String,
    value: Value,
    oracle_value: Option<Value>,
    horizon: Option<u64>,
    named: Map<String, Value>,
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

impl Record {
    pub fn new(command: &'static str, method: impl Into<String>, value: impl Serialize) -> Self {
        Record {
            command,
            inputs: Map::new(),
            method: method.into(),
            value: to_value(&value),
            oracle_value: None,
            horizon: None,
            named: Map::new(),
        }
    }

    pub fn input(mut self, key: &str, v: impl Serialize) -> Self {
        self.inputs.insert(key.into(), to_value(&v));
        self
    }

    pub fn oracle(mut self, v: impl Serialize) -> Self {
        self.oracle_value = Some(to_value(&v));
        self
    }

    pub fn horizon(mut self, h: u64) -> Self {
        self.horizon = Some(h);
        self
    }

    /// Extra top-level key, e.g. `"lct"`.
    pub fn named(mut self, key: &str, v: impl Serialize) -> Self {
        self.named.insert(key.into(), to_value(&v));
        self
    }

    pub fn to_json(&self) -> Value {
        let mut out = self.named.clone();
        out.insert("command".into(), Value::from(self.command));
        out.insert("inputs".into(), Value::Object(self.inputs.clone()));
        out.insert("method".into(), Value::from(self.method.clone()));
        out.insert("value".into(), self.value.clone());
        if let Some(o) = &self.oracle_value {
            out.insert("oracle_value".into(), o.clone());
        }
        if let Some(h) = self.horizon {
            out.insert("horizon".into(), Value::from(h));
        }
        Value::Object(out)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("json");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = format!("{} ({})\n", self.command, self.method);
                text_lines(&mut s, "value", &self.value);
                if let Some(o) = &self.oracle_value {
                    text_lines(&mut s, "oracle", o);
                }
                for (k, v) in &self.named {
                    text_lines(&mut s, k, v);
                }
                s
            }
        }
    }
}

fn text_lines(out: &mut String, key: &str, v: &Value) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                text_lines(out, &format!("{key}.{k}"), x);
            }
        }
        Value::String(s) => out.push_str(&format!("{key}: {s}\n")),
        other => out.push_str(&format!("{key}: {other}\n")),
    }
}
