//! Input loading and family-spec assembly.

use std::path::Path;

use anyhow::{bail, Context, Result};
use packbound_core::{Positioning, RectSet, Scalar};
use packbound_families::{Family, FamilyRegistry};
use serde_json::{json, Value};

use crate::FamilyArgs;

pub fn load_rect_set(path: &Path) -> Result<RectSet> {
    let raw = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let set: RectSet = serde_json::from_str(&raw)
        .with_context(|| format!("{} is not a rectangle-set JSON document", path.display()))?;
    Ok(set)
}

pub fn load_positioning(path: &Path) -> Result<Positioning> {
    let raw = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let p: Positioning = serde_json::from_str(&raw)
        .with_context(|| format!("{} is not a positioning JSON document", path.display()))?;
    Ok(p)
}

pub fn parse_scalar(text: &str, what: &str) -> Result<Scalar> {
    text.parse::<Scalar>()
        .with_context(|| format!("{what}: {text:?} is not a rational"))
}

/// Builds the family-spec JSON from the flags: either `--family` holds an
/// inline spec object, or it names a registered kind whose parameters come
/// from `--t`, `--precision-bits`, and `--input`.
pub fn family_spec(args: &FamilyArgs) -> Result<Value> {
    let raw = args.family.trim();
    if raw.starts_with('{') {
        let spec: Value =
            serde_json::from_str(raw).context("--family does not parse as a JSON object")?;
        return Ok(spec);
    }
    let mut spec = json!({ "family": raw });
    let fields = spec.as_object_mut().expect("literal object");
    if let Some(t) = &args.t {
        // validated here so a typo fails before any solving starts
        parse_scalar(t, "--t")?;
        fields.insert("t".into(), Value::String(t.clone()));
    }
    if let Some(bits) = args.precision_bits {
        fields.insert("precision_bits".into(), json!(bits));
    }
    if let Some(path) = &args.input {
        let set = load_rect_set(path)?;
        fields.insert(
            "rects".into(),
            serde_json::to_value(&set.rects).expect("rects serialize"),
        );
    }
    Ok(spec)
}

pub fn build_family(args: &FamilyArgs) -> Result<(Box<dyn Family>, Value)> {
    let spec = family_spec(args)?;
    let family = FamilyRegistry::with_builtins().build(&spec)?;
    Ok((family, spec))
}

/// Nonempty guard shared by the batch commands.
pub fn require_rects(set: &RectSet, path: &Path) -> Result<()> {
    if set.is_empty() {
        bail!("{} contains no rectangles", path.display());
    }
    Ok(())
}
