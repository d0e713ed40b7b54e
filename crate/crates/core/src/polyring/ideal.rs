use super::{ExponentVector, MultiPoly, RingError};
use crate::exactnum::Rational;

/// Ideal of `Q[x_0, ..., x_n]` given by nonzero homogeneous generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousIdeal {
    nvars: usize,
    generators: Vec<MultiPoly>,
    degrees: Vec<u32>,
}

impl HomogeneousIdeal {
    pub fn new(nvars: usize, generators: Vec<MultiPoly>) -> Result<Self, RingError> {
        if nvars < 2 {
            return Err(RingError::TooFewVariables(nvars));
        }
        if generators.is_empty() {
            return Err(RingError::NoGenerators);
        }
        let mut degrees = Vec::with_capacity(generators.len());
        for (index, g) in generators.iter().enumerate() {
            if g.nvars() != nvars {
                return Err(RingError::VariableCountMismatch { index, expected: nvars, found: g.nvars() });
            }
            if g.is_zero() {
                return Err(RingError::ZeroGenerator(index));
            }
            degrees.push(g.homogeneous_degree().ok_or(RingError::NotHomogeneous(index))?);
        }
        Ok(HomogeneousIdeal { nvars, generators, degrees })
    }

    /// Monomial ideal from exponent vectors.
    pub fn monomial(nvars: usize, exponents: &[Vec<u32>]) -> Result<Self, RingError> {
        let gens = exponents
            .iter()
            .map(|e| MultiPoly::from_terms(nvars, [(e.clone(), Rational::from_integer(1.into()))]))
            .collect();
        Self::new(nvars, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Projective dimension `n` of the ambient `P^n`.
    pub fn projective_dim(&self) -> usize {
        self.nvars - 1
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn min_degree(&self) -> u32 {
        *self.degrees.iter().min().unwrap()
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.num_terms() == 1)
    }

    /// Exponent vectors of the generators, when all of them are monomials.
    pub fn monomial_exponents(&self) -> Option<Vec<ExponentVector>> {
        self.generators.iter().map(|g| (g.num_terms() == 1).then(|| g.terms().next().unwrap().0.clone())).collect()
    }

    /// Minimal monomial generating set (divisibility pruning), sorted and deduplicated.
    pub fn minimal_monomial_generators(&self) -> Option<Vec<ExponentVector>> {
        let mut exps = self.monomial_exponents()?;
        exps.sort();
        exps.dedup();
        let minimal: Vec<ExponentVector> = exps
            .iter()
            .filter(|e| !exps.iter().any(|f| f != *e && f.divides(e)))
            .cloned()
            .collect();
        Some(minimal)
    }

    /// Membership of a monomial in a monomial ideal.
    pub fn contains_monomial(&self, exp: &ExponentVector) -> Option<bool> {
        Some(self.monomial_exponents()?.iter().any(|g| g.divides(exp)))
    }
}

pub fn is_monomial_ideal(ideal: &HomogeneousIdeal) -> bool {
    ideal.is_monomial()
}

/// The same generators read in a ring with `extra_vars` more variables.
pub fn extend_ideal(ideal: &HomogeneousIdeal, extra_vars: usize) -> HomogeneousIdeal {
    HomogeneousIdeal {
        nvars: ideal.nvars + extra_vars,
        generators: ideal.generators.iter().map(|g| g.extend(extra_vars)).collect(),
        degrees: ideal.degrees.clone(),
    }
}
