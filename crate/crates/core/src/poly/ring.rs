use std::collections::HashSet;
use std::sync::Arc;

use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::field::PrimeField;

/// A polynomial ring `F_q[x_1, ..., x_n]` together with the term order its
/// polynomials are kept sorted by.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: Into<String>>(
        field: PrimeField,
        vars: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<RingRef> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for v in &vars {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::Block(k) = order {
            if k > vars.len() {
                return Err(Error::InvalidRing(format!(
                    "block of {k} variables in a ring with {} variables",
                    vars.len()
                )));
            }
        }
        Ok(Arc::new(Ring { field, vars, order }))
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field, different term order.
    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        Arc::new(Ring { field: self.field, vars: self.vars.clone(), order })
    }

    /// The ring on the variables after the first `skip`, ordered by `order`.
    pub fn tail(&self, skip: usize, order: MonomialOrder) -> RingRef {
        Arc::new(Ring { field: self.field, vars: self.vars[skip..].to_vec(), order })
    }

    /// Same field and variable list; the term order may differ.
    pub fn same_space(&self, other: &Ring) -> bool {
        self.field == other.field && self.vars == other.vars
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Pick a name based on `base` that is not in `taken`.
pub(crate) fn fresh_name(base: &str, taken: &HashSet<String>) -> String {
    let mut name = base.to_string();
    while taken.contains(&name) {
        name.insert(0, '_');
    }
    name
}
