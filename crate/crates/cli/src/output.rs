//! Deterministic JSON and CSV emission. Floats are printed with 17
//! significant digits so that output is bit-identical across runs of the
//! same build and loss-free to reparse.

use casimir_core::{Frame, StressTensor};

pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0.0".to_string();
    }
    format!("{x:.16e}")
}

/// Minimal JSON writer: the schema is fixed and all strings are plain
/// ASCII identifiers, so escaping is limited to the standard set.
pub enum Json {
    Num(f64),
    Str(String),
    Bool(bool),
    Null,
    Arr(Vec<Json>),
    Obj(Vec<(&'static str, Json)>),
}

impl Json {
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, 0);
        out
    }

    fn write(&self, out: &mut String, indent: usize) {
        match self {
            Json::Num(x) => out.push_str(&fmt_f64(*x)),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Null => out.push_str("null"),
            Json::Str(s) => {
                out.push('"');
                for c in s.chars() {
                    match c {
                        '"' => out.push_str("\\\""),
                        '\\' => out.push_str("\\\\"),
                        '\n' => out.push_str("\\n"),
                        c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
                        c => out.push(c),
                    }
                }
                out.push('"');
            }
            Json::Arr(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    item.write(out, indent);
                }
                out.push(']');
            }
            Json::Obj(fields) => {
                out.push_str("{\n");
                let pad = "  ".repeat(indent + 1);
                for (i, (k, v)) in fields.iter().enumerate() {
                    out.push_str(&pad);
                    out.push('"');
                    out.push_str(k);
                    out.push_str("\": ");
                    v.write(out, indent + 1);
                    if i + 1 < fields.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                out.push_str(&"  ".repeat(indent));
                out.push('}');
            }
        }
    }
}

pub fn tensor_json(t: &StressTensor) -> Json {
    Json::Arr(
        (0..4)
            .map(|i| Json::Arr((0..4).map(|j| Json::Num(t.get(i, j))).collect()))
            .collect(),
    )
}

pub fn frame_label(frame: &Frame) -> &'static str {
    match frame {
        Frame::Cartesian => "cartesian",
        Frame::Cylindrical { .. } => "cylindrical",
    }
}

pub fn metric_label(frame: &Frame) -> &'static str {
    match frame {
        Frame::Cartesian => "signature(-,+,+,+)",
        Frame::Cylindrical { .. } => "signature(-,+,+,+), a_thth = rho^2",
    }
}

/// One CSV cell; numbers use the same 17-digit format as the JSON path.
pub fn csv_cell(x: Option<f64>) -> String {
    x.map(fmt_f64).unwrap_or_default()
}
