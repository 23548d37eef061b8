use crate::family::{check_c2, CheckOutcome, Family, ProfileReport, Rounding};
use crate::FamilyError;
use packbound_core::{RectSet, Scalar};

/// A finite, explicitly listed family.  All values are exact; every tail is
/// a finite sum and C1 holds trivially.
#[derive(Debug, Clone)]
pub struct Custom {
    pub rects: RectSet,
}

impl Custom {
    pub fn new(rects: RectSet) -> Result<Self, FamilyError> {
        if rects.is_empty() {
            return Err(FamilyError::InvalidField {
                family: "custom".into(),
                field: "rects".into(),
                reason: "need at least one rectangle".into(),
            });
        }
        Ok(Custom { rects })
    }
}

impl Family for Custom {
    fn name(&self) -> String {
        format!("custom({} rects)", self.rects.len())
    }

    fn finite_len(&self) -> Option<usize> {
        Some(self.rects.len())
    }

    fn prefix(&self, n: usize, _rounding: Rounding) -> Result<RectSet, FamilyError> {
        if n == 0 {
            return Err(FamilyError::EmptyPrefix);
        }
        let k = n.min(self.rects.len());
        Ok(RectSet::new(self.rects.rects[..k].to_vec()))
    }

    fn s_total(&self) -> Result<(Scalar, Scalar), FamilyError> {
        let s = self.rects.total_area()?;
        Ok((s.clone(), s))
    }

    fn tail_area(&self, n: usize) -> Result<(Scalar, Scalar), FamilyError> {
        let s: Scalar = self.rects.rects.iter().skip(n).map(|r| r.area()).sum();
        Ok((s.clone(), s))
    }

    fn tail_sq(&self, n: usize) -> Result<(Scalar, Scalar), FamilyError> {
        let s: Scalar = self.rects.rects.iter().skip(n).map(|r| &r.l * &r.l).sum();
        Ok((s.clone(), s))
    }

    fn l_next_upper(&self, n: usize) -> Result<Scalar, FamilyError> {
        Ok(self
            .rects
            .rects
            .get(n)
            .map(|r| r.l.clone())
            .unwrap_or_else(Scalar::zero))
    }

    fn validate_profile(&self, prefix_len: usize) -> ProfileReport {
        let k = prefix_len.max(1).min(self.rects.len());
        let c2 = check_c2(&RectSet::new(self.rects.rects[..k].to_vec()));
        ProfileReport {
            family: self.name(),
            c1: CheckOutcome::Pass,
            c2,
            notes: vec!["finite family: C1 holds trivially".into()],
        }
    }
}
