//! Name-keyed dispatch for transforms.
//!
//! Every transform variant implements [`TransformOp`]; the registry maps op
//! names to boxed implementations so callers can select one at runtime.
//! Applying an op returns the resulting positioning together with the
//! certified a-priori bound on its bounding area, already checked against
//! the actual outcome.

use packbound_core::{Positioning, Scalar};

use crate::error::TransformError;
use crate::ops;

/// Parameters a transform may consume. Ops ignore fields they don't use and
/// report a [`TransformError::MissingParam`] for absent required ones.
#[derive(Debug, Clone, Default)]
pub struct OpRequest {
    pub index: Option<usize>,
    pub dx: Option<Scalar>,
    pub dy: Option<Scalar>,
    pub count: Option<usize>,
    pub factor: Option<Scalar>,
}

/// An a-priori upper bound on `T(result)` implied by the op's defining
/// inequality, evaluated on the input positioning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedBound {
    pub label: &'static str,
    pub bound: Scalar,
}

/// Result of applying a registered op.
#[derive(Debug, Clone)]
pub struct Applied {
    pub result: Positioning,
    pub t_before: Scalar,
    pub t_after: Scalar,
    pub certificate: CertifiedBound,
}

impl Applied {
    /// True when the actual bounding area respects the certified bound.
    /// This always holds; it is re-checked so reports can state it.
    pub fn bound_holds(&self) -> bool {
        self.t_after <= self.certificate.bound
    }
}

pub trait TransformOp: Send + Sync {
    fn name(&self) -> &'static str;
    fn apply(&self, p: &Positioning, req: &OpRequest) -> Result<Applied, TransformError>;
}

fn need_index(op: &'static str, req: &OpRequest) -> Result<usize, TransformError> {
    req.index
        .ok_or(TransformError::MissingParam { op, param: "index" })
}

fn need_dx(op: &'static str, req: &OpRequest) -> Result<Scalar, TransformError> {
    req.dx
        .clone()
        .ok_or(TransformError::MissingParam { op, param: "dx" })
}

fn need_dy(op: &'static str, req: &OpRequest) -> Result<Scalar, TransformError> {
    req.dy
        .clone()
        .ok_or(TransformError::MissingParam { op, param: "dy" })
}

fn applied(
    p: &Positioning,
    result: Positioning,
    label: &'static str,
    bound: Scalar,
) -> Result<Applied, TransformError> {
    let t_before = p.measures()?.t;
    let t_after = result.measures()?.t;
    Ok(Applied {
        result,
        t_before,
        t_after,
        certificate: CertifiedBound { label, bound },
    })
}

struct RetractX;
impl TransformOp for RetractX {
    fn name(&self) -> &'static str {
        "retract_x"
    }
    fn apply(&self, p: &Positioning, req: &OpRequest) -> Result<Applied, TransformError> {
        let i = need_index(self.name(), req)?;
        let dx = need_dx(self.name(), req)?;
        let out = ops::retract_x(p, i, &dx)?;
        let bound = p.measures()?.t;
        applied(p, out, "retraction: T' <= T", bound)
    }
}

struct RetractY;
impl TransformOp for RetractY {
    fn name(&self) -> &'static str {
        "retract_y"
    }
    fn apply(&self, p: &Positioning, req: &OpRequest) -> Result<Applied, TransformError> {
        let i = need_index(self.name(), req)?;
        let dy = need_dy(self.name(), req)?;
        let out = ops::retract_y(p, i, &dy)?;
        let bound = p.measures()?.t;
        applied(p, out, "retraction: T' <= T", bound)
    }
}

struct ExtendX;
impl TransformOp for ExtendX {
    fn name(&self) -> &'static str {
        "extend_x"
    }
    fn apply(&self, p: &Positioning, req: &OpRequest) -> Result<Applied, TransformError> {
        let i = need_index(self.name(), req)?;
        let dx = need_dx(self.name(), req)?;
        let out = ops::extend_x(p, i, &dx)?;
        let m = p.measures()?;
        let bound = &m.t + &(&m.q * &dx);
        applied(p, out, "extension: T' <= T + q*dx", bound)
    }
}

struct ExtendY;
impl TransformOp for ExtendY {
    fn name(&self) -> &'static str {
        "extend_y"
    }
    fn apply(&self, p: &Positioning, req: &OpRequest) -> Result<Applied, TransformError> {
        let i = need_index(self.name(), req)?;
        let dy = need_dy(self.name(), req)?;
        let out = ops::extend_y(p, i, &dy)?;
        let m = p.measures()?;
        let bound = &m.t + &(&m.p * &dy);
        applied(p, out, "extension: T' <= T + p*dy", bound)
    }
}

struct ExtendXy;
impl TransformOp for ExtendXy {
    fn name(&self) -> &'static str {
        "extend_xy"
    }
    fn apply(&self, p: &Positioning, req: &OpRequest) -> Result<Applied, TransformError> {
        let i = need_index(self.name(), req)?;
        let dx = need_dx(self.name(), req)?;
        let dy = need_dy(self.name(), req)?;
        let out = ops::extend_xy(p, i, &dx, &dy)?;
        let m = p.measures()?;
        let bound = &m.t + &(&m.q * &dx) + &(&m.p * &dy) + &(&dx * &dy);
        applied(p, out, "extension: T' <= T + q*dx + p*dy + dx*dy", bound)
    }
}

struct SqueezeX;
impl TransformOp for SqueezeX {
    fn name(&self) -> &'static str {
        "squeeze_x"
    }
    fn apply(&self, p: &Positioning, req: &OpRequest) -> Result<Applied, TransformError> {
        let _ = req;
        let out = ops::squeeze_x(p);
        let bound = p.measures()?.t;
        applied(p, out, "squeeze: T' <= T, p' <= sum(w)", bound)
    }
}

struct SqueezeY;
impl TransformOp for SqueezeY {
    fn name(&self) -> &'static str {
        "squeeze_y"
    }
    fn apply(&self, p: &Positioning, req: &OpRequest) -> Result<Applied, TransformError> {
        let _ = req;
        let out = ops::squeeze_y(p);
        let bound = p.measures()?.t;
        applied(p, out, "squeeze: T' <= T, q' <= sum(l)", bound)
    }
}

struct RemoveTail;
impl TransformOp for RemoveTail {
    fn name(&self) -> &'static str {
        "remove_tail"
    }
    fn apply(&self, p: &Positioning, req: &OpRequest) -> Result<Applied, TransformError> {
        let n = req.count.ok_or(TransformError::MissingParam {
            op: self.name(),
            param: "count",
        })?;
        let out = ops::remove_tail(p, n)?;
        let bound = p.measures()?.t;
        applied(p, out, "prefix restriction: T' <= T", bound)
    }
}

struct ScaleOp;
impl TransformOp for ScaleOp {
    fn name(&self) -> &'static str {
        "scale"
    }
    fn apply(&self, p: &Positioning, req: &OpRequest) -> Result<Applied, TransformError> {
        let c = req.factor.clone().ok_or(TransformError::MissingParam {
            op: self.name(),
            param: "factor",
        })?;
        let out = ops::scale_positioning(p, &c)?;
        let bound = &p.measures()?.t * &(&c * &c);
        applied(p, out, "scaling: T' = c^2 * T, eta unchanged", bound)
    }
}

pub struct TransformRegistry {
    ops: Vec<Box<dyn TransformOp>>,
}

impl TransformRegistry {
    pub fn empty() -> Self {
        TransformRegistry { ops: Vec::new() }
    }

    /// Registry with all built-in transforms.
    pub fn with_builtins() -> Self {
        let mut reg = TransformRegistry::empty();
        reg.register(Box::new(RetractX));
        reg.register(Box::new(RetractY));
        reg.register(Box::new(ExtendX));
        reg.register(Box::new(ExtendY));
        reg.register(Box::new(ExtendXy));
        reg.register(Box::new(SqueezeX));
        reg.register(Box::new(SqueezeY));
        reg.register(Box::new(RemoveTail));
        reg.register(Box::new(ScaleOp));
        reg
    }

    pub fn register(&mut self, op: Box<dyn TransformOp>) {
        self.ops.push(op);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.ops.iter().map(|o| o.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn TransformOp> {
        self.ops
            .iter()
            .find(|o| o.name() == name)
            .map(|o| o.as_ref())
    }

    pub fn apply(
        &self,
        name: &str,
        p: &Positioning,
        req: &OpRequest,
    ) -> Result<Applied, TransformError> {
        let op = self.get(name).ok_or_else(|| TransformError::UnknownOp {
            name: name.to_string(),
            known: self.names().join(", "),
        })?;
        op.apply(p, req)
    }
}

impl Default for TransformRegistry {
    fn default() -> Self {
        TransformRegistry::with_builtins()
    }
}
