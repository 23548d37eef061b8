use crate::{Custom, Family, FamilyError, Harmonic, PowerSquares, DEFAULT_PRECISION_BITS};
use packbound_core::{Rect, RectSet, Scalar};
use serde_json::Value;

/// Builds one kind of [`Family`] from its JSON description.
pub trait FamilyBuilder: Send + Sync {
    fn kind(&self) -> &'static str;
    fn build(&self, spec: &Value) -> Result<Box<dyn Family>, FamilyError>;
}

/// Dispatch table from the `"family"` tag of a JSON description to a
/// builder, e.g. `{"family":"harmonic"}` or
/// `{"family":"power_squares","t":"3/5","precision_bits":64}`.
pub struct FamilyRegistry {
    builders: Vec<Box<dyn FamilyBuilder>>,
}

impl FamilyRegistry {
    pub fn empty() -> Self {
        FamilyRegistry {
            builders: Vec::new(),
        }
    }

    pub fn with_builtins() -> Self {
        let mut r = FamilyRegistry::empty();
        r.register(Box::new(HarmonicBuilder));
        r.register(Box::new(PowerSquaresBuilder));
        r.register(Box::new(CustomBuilder));
        r
    }

    pub fn register(&mut self, builder: Box<dyn FamilyBuilder>) {
        self.builders.push(builder);
    }

    pub fn kinds(&self) -> Vec<String> {
        self.builders.iter().map(|b| b.kind().to_string()).collect()
    }

    pub fn build(&self, spec: &Value) -> Result<Box<dyn Family>, FamilyError> {
        let name = spec
            .get("family")
            .and_then(Value::as_str)
            .ok_or_else(|| FamilyError::MissingField {
                family: "<root>".into(),
                field: "family".into(),
            })?;
        let builder = self
            .builders
            .iter()
            .find(|b| b.kind() == name)
            .ok_or_else(|| FamilyError::UnknownFamily {
                name: name.to_string(),
                known: self.kinds(),
            })?;
        builder.build(spec)
    }
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        FamilyRegistry::with_builtins()
    }
}

struct HarmonicBuilder;

impl FamilyBuilder for HarmonicBuilder {
    fn kind(&self) -> &'static str {
        "harmonic"
    }

    fn build(&self, _spec: &Value) -> Result<Box<dyn Family>, FamilyError> {
        Ok(Box::new(Harmonic))
    }
}

struct PowerSquaresBuilder;

impl FamilyBuilder for PowerSquaresBuilder {
    fn kind(&self) -> &'static str {
        "power_squares"
    }

    fn build(&self, spec: &Value) -> Result<Box<dyn Family>, FamilyError> {
        let raw_t = spec.get("t").ok_or_else(|| FamilyError::MissingField {
            family: "power_squares".into(),
            field: "t".into(),
        })?;
        let t: Scalar =
            serde_json::from_value(raw_t.clone()).map_err(|e| FamilyError::InvalidField {
                family: "power_squares".into(),
                field: "t".into(),
                reason: e.to_string(),
            })?;
        let bits = match spec.get("precision_bits") {
            None => DEFAULT_PRECISION_BITS,
            Some(v) => {
                let n = v.as_u64().ok_or_else(|| FamilyError::InvalidField {
                    family: "power_squares".into(),
                    field: "precision_bits".into(),
                    reason: "expected a positive integer".into(),
                })?;
                u32::try_from(n).map_err(|_| FamilyError::PrecisionOverflow {
                    reason: format!("precision_bits = {n} does not fit in 32 bits"),
                })?
            }
        };
        Ok(Box::new(PowerSquares::new(t, bits)?))
    }
}

struct CustomBuilder;

impl FamilyBuilder for CustomBuilder {
    fn kind(&self) -> &'static str {
        "custom"
    }

    fn build(&self, spec: &Value) -> Result<Box<dyn Family>, FamilyError> {
        let raw = spec.get("rects").ok_or_else(|| FamilyError::MissingField {
            family: "custom".into(),
            field: "rects".into(),
        })?;
        let rects: Vec<Rect> =
            serde_json::from_value(raw.clone()).map_err(|e| FamilyError::InvalidField {
                family: "custom".into(),
                field: "rects".into(),
                reason: e.to_string(),
            })?;
        Ok(Box::new(Custom::new(RectSet::new(rects))?))
    }
}
