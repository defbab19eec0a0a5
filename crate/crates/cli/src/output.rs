use std::io::Write;

use hanoi_trees::exact::{format_float, RationalJson};
use num_rational::BigRational;
use serde_json::{json, Value};

/// Exact `{num, den}` by default, a 17-digit float string with `--float`.
pub fn prob(q: &BigRational, float: bool) -> Value {
    if float {
        Value::String(format_float(q))
    } else {
        serde_json::to_value(RationalJson(q)).expect("rational")
    }
}

/// Prints `{"command", "params", "result"}` on stdout.
pub fn emit(command: &str, params: Value, result: Value) -> std::io::Result<()> {
    let doc = json!({ "command": command, "params": params, "result": result });
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, &doc)?;
    writeln!(out)
}

pub fn write_raw(bytes: &[u8]) -> std::io::Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(bytes)?;
    out.flush()
}
