use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{LocationId, Signal, SpatialModel};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub enum Operand<T> {
    Field(String),
    Const(T),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparison {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
}

impl Comparison {
    pub fn symbol(self) -> &'static str {
        match self {
            Comparison::Lt => "<",
            Comparison::Le => "<=",
            Comparison::Gt => ">",
            Comparison::Ge => ">=",
            Comparison::Eq => "==",
        }
    }
}

/// `lhs cmp rhs` over signal fields and constants.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomicPredicate<T> {
    pub lhs: Operand<T>,
    pub cmp: Comparison,
    pub rhs: Operand<T>,
}

impl<T: Scalar> AtomicPredicate<T> {
    pub fn new(lhs: Operand<T>, cmp: Comparison, rhs: Operand<T>) -> Self {
        AtomicPredicate { lhs, cmp, rhs }
    }

    /// `field cmp constant`
    pub fn field_const(field: &str, cmp: Comparison, value: T) -> Self {
        Self::new(Operand::Field(field.to_string()), cmp, Operand::Const(value))
    }

    /// `field cmp field`
    pub fn fields(lhs: &str, cmp: Comparison, rhs: &str) -> Self {
        Self::new(
            Operand::Field(lhs.to_string()),
            cmp,
            Operand::Field(rhs.to_string()),
        )
    }

    pub fn fields_referenced(&self) -> impl Iterator<Item = &str> {
        [&self.lhs, &self.rhs].into_iter().filter_map(|o| match o {
            Operand::Field(f) => Some(f.as_str()),
            Operand::Const(_) => None,
        })
    }
}

fn operand_value<T: Scalar>(op: &Operand<T>, signal: &Signal<T>) -> Result<T> {
    match op {
        Operand::Const(c) => Ok(*c),
        Operand::Field(f) => signal.get(f).copied().ok_or_else(|| Error::MissingField {
            field: f.clone(),
            location: String::new(),
        }),
    }
}

/// Truth value and signed satisfaction margin of an atom on one signal.
///
/// The margin is `lhs - rhs` for `>`/`>=`, `rhs - lhs` for `<`/`<=` and
/// `-|lhs - rhs|` for `==`, so a true atom never has a negative margin.
pub fn eval_atom<T: Scalar>(pred: &AtomicPredicate<T>, signal: &Signal<T>) -> Result<(bool, T)> {
    let l = operand_value(&pred.lhs, signal)?;
    let r = operand_value(&pred.rhs, signal)?;
    Ok(match pred.cmp {
        Comparison::Gt => (l > r, l - r),
        Comparison::Ge => (l >= r, l - r),
        Comparison::Lt => (l < r, r - l),
        Comparison::Le => (l <= r, r - l),
        Comparison::Eq => (l == r, -(l - r).abs()),
    })
}

/// [`eval_atom`] at a model location, with the location named in errors.
pub fn eval_atom_at<T: Scalar>(
    model: &SpatialModel<T>,
    pred: &AtomicPredicate<T>,
    at: LocationId,
) -> Result<(bool, T)> {
    eval_atom(pred, model.signal(at)).map_err(|e| match e {
        Error::MissingField { field, .. } => Error::MissingField {
            field,
            location: model.name(at).to_string(),
        },
        other => other,
    })
}

impl<T: Scalar> fmt::Display for Operand<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operand::Field(name) => f.write_str(name),
            Operand::Const(c) => write!(f, "{c}"),
        }
    }
}

impl<T: Scalar> fmt::Display for AtomicPredicate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.cmp.symbol(), self.rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(pairs: &[(&str, f64)]) -> Signal<f64> {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn supply_covers_demand() {
        let p = AtomicPredicate::fields("supply", Comparison::Ge, "demand");
        assert_eq!(eval_atom(&p, &sig(&[("supply", 5.0), ("demand", 3.0)])).unwrap(), (true, 2.0));
    }

    #[test]
    fn below_threshold() {
        let p = AtomicPredicate::field_const("solar_power", Comparison::Ge, 1.0);
        assert_eq!(eval_atom(&p, &sig(&[("solar_power", 0.5)])).unwrap(), (false, -0.5));
    }

    #[test]
    fn equality_on_the_boundary() {
        let p = AtomicPredicate::field_const("x", Comparison::Eq, 1.0);
        assert_eq!(eval_atom(&p, &sig(&[("x", 1.0)])).unwrap(), (true, 0.0));
        assert_eq!(eval_atom(&p, &sig(&[("x", 3.0)])).unwrap(), (false, -2.0));
    }

    #[test]
    fn strictness_is_kept() {
        let gt = AtomicPredicate::field_const("x", Comparison::Gt, 1.0);
        let lt = AtomicPredicate::field_const("x", Comparison::Lt, 1.0);
        let s = sig(&[("x", 1.0)]);
        assert_eq!(eval_atom(&gt, &s).unwrap(), (false, 0.0));
        assert_eq!(eval_atom(&lt, &s).unwrap(), (false, 0.0));
    }

    #[test]
    fn missing_field() {
        let p = AtomicPredicate::field_const("B", Comparison::Gt, 0.0);
        assert!(matches!(eval_atom(&p, &sig(&[])), Err(Error::MissingField { .. })));
    }
}
