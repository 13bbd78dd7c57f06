//! Formula syntax trees, their text form, and atomic predicate evaluation.

mod atom;
mod parser;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Result;
use crate::graph::{DistInterval, Metric};
use crate::scalar::Scalar;

pub use atom::{eval_atom, eval_atom_at, AtomicPredicate, Comparison, Operand};
pub use parser::{
    parse_spars, parse_spars_with, parse_srel, parse_srel_with, ParseError, ParseErrorKind,
};

/// Boolean spatial reach/escape logic.
#[derive(Debug, Clone, PartialEq)]
pub enum SrelFormula<T> {
    True,
    False,
    Atom(AtomicPredicate<T>),
    Not(Box<SrelFormula<T>>),
    And(Box<SrelFormula<T>>, Box<SrelFormula<T>>),
    Or(Box<SrelFormula<T>>, Box<SrelFormula<T>>),
    Reach {
        left: Box<SrelFormula<T>>,
        interval: DistInterval<T>,
        metric: Metric,
        right: Box<SrelFormula<T>>,
    },
    Escape {
        interval: DistInterval<T>,
        metric: Metric,
        child: Box<SrelFormula<T>>,
    },
    Somewhere {
        interval: DistInterval<T>,
        metric: Metric,
        child: Box<SrelFormula<T>>,
    },
    Everywhere {
        interval: DistInterval<T>,
        metric: Metric,
        child: Box<SrelFormula<T>>,
    },
}

/// Resiliency specifications built from S-atoms.
#[derive(Debug, Clone, PartialEq)]
pub enum SparsFormula<T> {
    SAtom {
        d1: T,
        d2: T,
        metric: Metric,
        body: SrelFormula<T>,
    },
    Not(Box<SparsFormula<T>>),
    And(Box<SparsFormula<T>>, Box<SparsFormula<T>>),
    Or(Box<SparsFormula<T>>, Box<SparsFormula<T>>),
    Reach {
        left: Box<SparsFormula<T>>,
        interval: DistInterval<T>,
        metric: Metric,
        right: Box<SparsFormula<T>>,
    },
    Escape {
        interval: DistInterval<T>,
        metric: Metric,
        child: Box<SparsFormula<T>>,
    },
    Somewhere {
        interval: DistInterval<T>,
        metric: Metric,
        child: Box<SparsFormula<T>>,
    },
    Everywhere {
        interval: DistInterval<T>,
        metric: Metric,
        child: Box<SparsFormula<T>>,
    },
}

impl<T: Scalar> SrelFormula<T> {
    pub fn atom(pred: AtomicPredicate<T>) -> Self {
        SrelFormula::Atom(pred)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(child: Self) -> Self {
        SrelFormula::Not(Box::new(child))
    }

    pub fn and(l: Self, r: Self) -> Self {
        SrelFormula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Self, r: Self) -> Self {
        SrelFormula::Or(Box::new(l), Box::new(r))
    }

    pub fn reach(l: Self, interval: DistInterval<T>, metric: Metric, r: Self) -> Self {
        SrelFormula::Reach {
            left: Box::new(l),
            interval,
            metric,
            right: Box::new(r),
        }
    }

    pub fn escape(interval: DistInterval<T>, metric: Metric, child: Self) -> Self {
        SrelFormula::Escape {
            interval,
            metric,
            child: Box::new(child),
        }
    }

    pub fn somewhere(interval: DistInterval<T>, metric: Metric, child: Self) -> Self {
        SrelFormula::Somewhere {
            interval,
            metric,
            child: Box::new(child),
        }
    }

    pub fn everywhere(interval: DistInterval<T>, metric: Metric, child: Self) -> Self {
        SrelFormula::Everywhere {
            interval,
            metric,
            child: Box::new(child),
        }
    }

    /// Signal fields mentioned anywhere in the formula.
    pub fn fields(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_fields(&mut out);
        out
    }

    fn collect_fields(&self, out: &mut BTreeSet<String>) {
        match self {
            SrelFormula::True | SrelFormula::False => {}
            SrelFormula::Atom(p) => out.extend(p.fields_referenced().map(str::to_string)),
            SrelFormula::Not(c) => c.collect_fields(out),
            SrelFormula::And(l, r) | SrelFormula::Or(l, r) => {
                l.collect_fields(out);
                r.collect_fields(out);
            }
            SrelFormula::Reach { left, right, .. } => {
                left.collect_fields(out);
                right.collect_fields(out);
            }
            SrelFormula::Escape { child, .. }
            | SrelFormula::Somewhere { child, .. }
            | SrelFormula::Everywhere { child, .. } => child.collect_fields(out),
        }
    }

    /// Number of operator nodes on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        match self {
            SrelFormula::True | SrelFormula::False | SrelFormula::Atom(_) => 0,
            SrelFormula::Not(c)
            | SrelFormula::Escape { child: c, .. }
            | SrelFormula::Somewhere { child: c, .. }
            | SrelFormula::Everywhere { child: c, .. } => 1 + c.depth(),
            SrelFormula::And(l, r)
            | SrelFormula::Or(l, r)
            | SrelFormula::Reach {
                left: l, right: r, ..
            } => 1 + l.depth().max(r.depth()),
        }
    }
}

impl<T: Scalar> SparsFormula<T> {
    pub fn satom(d1: T, d2: T, metric: Metric, body: SrelFormula<T>) -> Self {
        SparsFormula::SAtom {
            d1,
            d2,
            metric,
            body,
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(child: Self) -> Self {
        SparsFormula::Not(Box::new(child))
    }

    pub fn and(l: Self, r: Self) -> Self {
        SparsFormula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Self, r: Self) -> Self {
        SparsFormula::Or(Box::new(l), Box::new(r))
    }

    pub fn reach(l: Self, interval: DistInterval<T>, metric: Metric, r: Self) -> Self {
        SparsFormula::Reach {
            left: Box::new(l),
            interval,
            metric,
            right: Box::new(r),
        }
    }

    pub fn escape(interval: DistInterval<T>, metric: Metric, child: Self) -> Self {
        SparsFormula::Escape {
            interval,
            metric,
            child: Box::new(child),
        }
    }

    pub fn somewhere(interval: DistInterval<T>, metric: Metric, child: Self) -> Self {
        SparsFormula::Somewhere {
            interval,
            metric,
            child: Box::new(child),
        }
    }

    pub fn everywhere(interval: DistInterval<T>, metric: Metric, child: Self) -> Self {
        SparsFormula::Everywhere {
            interval,
            metric,
            child: Box::new(child),
        }
    }

    /// The Boolean formula this specification abbreviates.
    ///
    /// `S[d1,d2](φ)` becomes `!φ R[0,d1] (φ R[d2,inf] φ)`, and every other
    /// node maps to its Boolean counterpart. Fails with `InvalidInterval`
    /// when an S-atom's bounds are not `0 <= d1 <= d2`.
    pub fn to_srel(&self) -> Result<SrelFormula<T>> {
        Ok(match self {
            SparsFormula::SAtom {
                d1,
                d2,
                metric,
                body,
            } => {
                DistInterval::new(*d1, *d2)?;
                let inner = SrelFormula::reach(
                    body.clone(),
                    DistInterval::new(*d2, T::infinity())?,
                    *metric,
                    body.clone(),
                );
                SrelFormula::reach(
                    SrelFormula::not(body.clone()),
                    DistInterval::up_to(*d1)?,
                    *metric,
                    inner,
                )
            }
            SparsFormula::Not(c) => SrelFormula::not(c.to_srel()?),
            SparsFormula::And(l, r) => SrelFormula::and(l.to_srel()?, r.to_srel()?),
            SparsFormula::Or(l, r) => SrelFormula::or(l.to_srel()?, r.to_srel()?),
            SparsFormula::Reach {
                left,
                interval,
                metric,
                right,
            } => SrelFormula::reach(left.to_srel()?, *interval, *metric, right.to_srel()?),
            SparsFormula::Escape {
                interval,
                metric,
                child,
            } => SrelFormula::escape(*interval, *metric, child.to_srel()?),
            SparsFormula::Somewhere {
                interval,
                metric,
                child,
            } => SrelFormula::somewhere(*interval, *metric, child.to_srel()?),
            SparsFormula::Everywhere {
                interval,
                metric,
                child,
            } => SrelFormula::everywhere(*interval, *metric, child.to_srel()?),
        })
    }

    pub fn fields(&self) -> BTreeSet<String> {
        match self {
            SparsFormula::SAtom { body, .. } => body.fields(),
            SparsFormula::Not(c)
            | SparsFormula::Escape { child: c, .. }
            | SparsFormula::Somewhere { child: c, .. }
            | SparsFormula::Everywhere { child: c, .. } => c.fields(),
            SparsFormula::And(l, r)
            | SparsFormula::Or(l, r)
            | SparsFormula::Reach {
                left: l, right: r, ..
            } => {
                let mut out = l.fields();
                out.extend(r.fields());
                out
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            SparsFormula::SAtom { .. } => 0,
            SparsFormula::Not(c)
            | SparsFormula::Escape { child: c, .. }
            | SparsFormula::Somewhere { child: c, .. }
            | SparsFormula::Everywhere { child: c, .. } => 1 + c.depth(),
            SparsFormula::And(l, r)
            | SparsFormula::Or(l, r)
            | SparsFormula::Reach {
                left: l, right: r, ..
            } => 1 + l.depth().max(r.depth()),
        }
    }
}

fn metric_tag(metric: Metric) -> &'static str {
    match metric {
        Metric::Weight => "",
        Metric::Hops => "{hops}",
    }
}

fn write_interval<T: Scalar>(f: &mut fmt::Formatter<'_>, i: &DistInterval<T>) -> fmt::Result {
    write!(f, "{i}")
}

impl<T: Scalar> SrelFormula<T> {
    fn is_leaf(&self) -> bool {
        matches!(self, SrelFormula::True | SrelFormula::False)
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_leaf() {
            write!(f, "{self}")
        } else {
            write!(f, "({self})")
        }
    }
}

impl<T: Scalar> fmt::Display for SrelFormula<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SrelFormula::True => f.write_str("true"),
            SrelFormula::False => f.write_str("false"),
            SrelFormula::Atom(p) => write!(f, "{p}"),
            SrelFormula::Not(c) => {
                f.write_str("!")?;
                c.fmt_child(f)
            }
            SrelFormula::And(l, r) | SrelFormula::Or(l, r) => {
                let op = if matches!(self, SrelFormula::And(..)) { " & " } else { " | " };
                l.fmt_child(f)?;
                f.write_str(op)?;
                r.fmt_child(f)
            }
            SrelFormula::Reach {
                left,
                interval,
                metric,
                right,
            } => {
                left.fmt_child(f)?;
                write!(f, " R{}", metric_tag(*metric))?;
                write_interval(f, interval)?;
                f.write_str(" ")?;
                right.fmt_child(f)
            }
            SrelFormula::Escape {
                interval,
                metric,
                child,
            }
            | SrelFormula::Somewhere {
                interval,
                metric,
                child,
            }
            | SrelFormula::Everywhere {
                interval,
                metric,
                child,
            } => {
                let kw = match self {
                    SrelFormula::Escape { .. } => "E",
                    SrelFormula::Somewhere { .. } => "somewhere",
                    _ => "everywhere",
                };
                write!(f, "{kw}{}", metric_tag(*metric))?;
                write_interval(f, interval)?;
                child.fmt_child(f)
            }
        }
    }
}

impl<T: Scalar> SparsFormula<T> {
    fn fmt_child(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if matches!(self, SparsFormula::SAtom { .. }) {
            write!(f, "{self}")
        } else {
            write!(f, "({self})")
        }
    }
}

impl<T: Scalar> fmt::Display for SparsFormula<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SparsFormula::SAtom {
                d1,
                d2,
                metric,
                body,
            } => write!(f, "S{}[{d1},{d2}]({body})", metric_tag(*metric)),
            SparsFormula::Not(c) => {
                f.write_str("!")?;
                c.fmt_child(f)
            }
            SparsFormula::And(l, r) | SparsFormula::Or(l, r) => {
                let op = if matches!(self, SparsFormula::And(..)) { " & " } else { " | " };
                l.fmt_child(f)?;
                f.write_str(op)?;
                r.fmt_child(f)
            }
            SparsFormula::Reach {
                left,
                interval,
                metric,
                right,
            } => {
                left.fmt_child(f)?;
                write!(f, " R{}", metric_tag(*metric))?;
                write_interval(f, interval)?;
                f.write_str(" ")?;
                right.fmt_child(f)
            }
            SparsFormula::Escape {
                interval,
                metric,
                child,
            }
            | SparsFormula::Somewhere {
                interval,
                metric,
                child,
            }
            | SparsFormula::Everywhere {
                interval,
                metric,
                child,
            } => {
                let kw = match self {
                    SparsFormula::Escape { .. } => "E",
                    SparsFormula::Somewhere { .. } => "somewhere",
                    _ => "everywhere",
                };
                write!(f, "{kw}{}", metric_tag(*metric))?;
                write_interval(f, interval)?;
                child.fmt_child(f)
            }
        }
    }
}
