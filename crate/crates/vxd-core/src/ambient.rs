//! The ambient algebra: a polynomial ring over ℚ together with a declared
//! localization.
//!
//! An [`AlgebraDescriptor`] names the coordinate variables `x₁..xₙ` and a
//! (possibly empty) list of denominator generators. The algebra it describes
//! is `ℚ[x₁..xₙ][S⁻¹]` with `S` generated by the declared polynomials; these
//! are exactly the algebras whose derivation module is free on the coordinate
//! derivations.

use std::sync::Arc;

use crate::poly::{Poly, TermData};
use crate::{Error, Result};

/// Shared handle to an algebra descriptor. Every value in the crate carries
/// one of these; operations insist the handles agree.
pub type Ambient = Arc<AlgebraDescriptor>;

/// A localization of a polynomial ring: variables plus denominator generators.
#[derive(Debug, PartialEq, Eq)]
pub struct AlgebraDescriptor {
    variables: Vec<String>,
    /// Raw term data of each generator; materialized into [`Poly`] on demand
    /// to avoid a descriptor ↔ polynomial reference cycle.
    generators: Vec<TermData>,
}

impl AlgebraDescriptor {
    /// Build a descriptor from variable names and denominator-generator
    /// expressions (each must parse to a nonzero, nonconstant polynomial).
    pub fn new<S: Into<String>>(variables: Vec<S>, denominator_exprs: &[&str]) -> Result<Ambient> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        if variables.is_empty() {
            return Err(Error::Descriptor("at least one variable is required".into()));
        }
        for v in &variables {
            if !is_identifier(v) {
                return Err(Error::Descriptor(format!("`{v}` is not a valid identifier")));
            }
        }
        for (i, v) in variables.iter().enumerate() {
            if variables[..i].contains(v) {
                return Err(Error::Descriptor(format!("duplicate variable `{v}`")));
            }
        }

        let bare = Arc::new(AlgebraDescriptor {
            variables: variables.clone(),
            generators: Vec::new(),
        });
        let mut generators = Vec::with_capacity(denominator_exprs.len());
        for expr in denominator_exprs {
            let f = crate::expr::parse_expr(expr, &bare)?;
            let p = f.as_poly().ok_or_else(|| {
                Error::Descriptor(format!("denominator generator `{expr}` is not a polynomial"))
            })?;
            if p.is_zero() || p.is_constant() {
                return Err(Error::Descriptor(format!(
                    "denominator generator `{expr}` must be nonzero and nonconstant"
                )));
            }
            generators.push(p.into_terms());
        }

        Ok(Arc::new(AlgebraDescriptor { variables, generators }))
    }

    /// Plain polynomial ring `ℚ[x₁..xₙ]`.
    pub fn polynomial_ring<S: Into<String>>(variables: Vec<S>) -> Result<Ambient> {
        Self::new(variables, &[])
    }

    pub fn n_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.variables[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn has_denominators(&self) -> bool {
        !self.generators.is_empty()
    }

    /// Materialize the denominator generators as polynomials over `self`.
    pub fn denominator_gens(self: &Ambient) -> Vec<Poly> {
        self.generators
            .iter()
            .map(|t| Poly::from_terms(self.clone(), t.clone()))
            .collect()
    }

    /// Raw generator term data (used by descriptor serialization).
    pub(crate) fn generator_terms(&self) -> &[TermData] {
        &self.generators
    }
}

/// Two ambients are compatible when they are the same allocation or
/// structurally equal descriptors.
pub fn same_ambient(a: &Ambient, b: &Ambient) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn check_ambient(a: &Ambient, b: &Ambient) -> Result<()> {
    if same_ambient(a, b) {
        Ok(())
    } else {
        Err(Error::AmbientMismatch)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_variables() {
        assert!(AlgebraDescriptor::new(vec!["x", "x"], &[]).is_err());
    }

    #[test]
    fn rejects_bad_identifier() {
        assert!(AlgebraDescriptor::new(vec!["2x"], &[]).is_err());
    }

    #[test]
    fn rejects_constant_generator() {
        assert!(AlgebraDescriptor::new(vec!["x"], &["3"]).is_err());
        assert!(AlgebraDescriptor::new(vec!["x"], &["0"]).is_err());
    }

    #[test]
    fn torus_descriptor() {
        let a = AlgebraDescriptor::new(vec!["x"], &["x"]).unwrap();
        assert_eq!(a.n_vars(), 1);
        assert!(a.has_denominators());
        let gens = a.denominator_gens();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].to_string(), "x");
    }
}
