//! Parameter valuations: total assignments of scalars to parameter names.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;
use crate::Rat;

/// Assignment of a value to every parameter of interest.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Valuation<C: Scalar = Rat> {
    assignment: BTreeMap<String, C>,
}

impl<C: Scalar> Valuation<C> {
    pub fn new() -> Self {
        Valuation { assignment: BTreeMap::new() }
    }

    pub fn from_pairs(it: impl IntoIterator<Item = (String, C)>) -> Self {
        Valuation { assignment: it.into_iter().collect() }
    }

    pub fn set(&mut self, name: &str, value: C) {
        self.assignment.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Option<&C> {
        self.assignment.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.assignment.keys().map(|s| s.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &C)> {
        self.assignment.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn is_total_over<'a>(&self, params: impl IntoIterator<Item = &'a str>) -> bool {
        params.into_iter().all(|p| self.assignment.contains_key(p))
    }

    /// The valuation shifted by `x` in coordinate `name`, all others fixed.
    pub fn shifted(&self, name: &str, x: C) -> Self {
        let mut out = self.clone();
        if let Some(v) = out.assignment.get_mut(name) {
            *v = v.clone() + x;
        } else {
            out.assignment.insert(name.to_string(), x);
        }
        out
    }

    /// Unit valuation: 1 on `name`, 0 on every other listed parameter.
    pub fn unit<'a>(name: &str, params: impl IntoIterator<Item = &'a str>) -> Self {
        let mut out = Valuation::new();
        for p in params {
            out.set(p, if p == name { C::one() } else { C::zero() });
        }
        out
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for Valuation<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in &self.assignment {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}
