//! The stdout envelope shared by every command.
//!
//! The digest identifies the parsed inputs, not the bytes of the files they
//! came from: inputs are canonicalized through serde (rationals reduced, key
//! order fixed) and hashed, so reformatting an input file does not change
//! the digest. Everything in the envelope is byte-deterministic; run-varying
//! data (timing, node counts) goes to stderr instead.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub input_digest: String,
    pub results: Value,
    pub preconditions: Vec<String>,
}

impl RunReport {
    pub fn new(
        command: &'static str,
        inputs: &Value,
        results: Value,
        preconditions: Vec<String>,
    ) -> RunReport {
        RunReport {
            command,
            input_digest: digest(inputs),
            results,
            preconditions,
        }
    }

    /// Prints the report as the single JSON document on stdout.
    pub fn emit(&self) {
        let body = serde_json::to_string_pretty(self).expect("report serializes");
        println!("{body}");
    }
}

pub fn digest(inputs: &Value) -> String {
    use std::fmt::Write;

    let canonical = serde_json::to_string(inputs).expect("inputs serialize");
    let hash = Sha256::digest(canonical.as_bytes());
    let mut out = String::with_capacity(7 + 2 * hash.len());
    out.push_str("sha256:");
    for byte in hash {
        write!(out, "{byte:02x}").expect("writing to a string");
    }
    out
}
