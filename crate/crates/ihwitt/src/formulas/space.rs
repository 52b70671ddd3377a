use serde::{Deserialize, Serialize};

use crate::exactalg::CoefficientSpec;
use crate::ihcore::{IHTable, Perversity};

use super::closed_forms::{
    compactified_bundle_formula, cone_formula, kunneth, reduce_coefficients, suspension_formula,
};
use super::FormulaError;

/// A space described by how it is assembled, for closed-form evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FormulaSpace {
    /// A closed manifold given by its integral homology. Intersection
    /// homology equals ordinary homology for every perversity.
    Manifold {
        homology: IHTable,
    },
    /// A finished table over a fixed field, e.g. the chain-level result for
    /// a triangulated space. Evaluation only succeeds over that field.
    Computed {
        dim: usize,
        table: IHTable,
    },
    Cone {
        link: Box<FormulaSpace>,
    },
    Suspension {
        space: Box<FormulaSpace>,
    },
    /// Thom space of an `r`-disk bundle over a closed manifold.
    CompactifiedBundle {
        base: IHTable,
        fiber_rank: usize,
        euler: i64,
    },
    /// Product with a closed manifold given by integral homology.
    Product {
        space: Box<FormulaSpace>,
        manifold: IHTable,
    },
}

/// A table from the closed-form engines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaResult {
    pub table: IHTable,
    /// False if some transition term fell outside the modelled cases.
    pub verified: bool,
}

impl FormulaSpace {
    pub fn manifold(homology: IHTable) -> Self {
        FormulaSpace::Manifold { homology }
    }

    pub fn cone(self) -> Self {
        FormulaSpace::Cone { link: Box::new(self) }
    }

    pub fn suspension(self) -> Self {
        FormulaSpace::Suspension { space: Box::new(self) }
    }

    pub fn times(self, manifold: IHTable) -> Self {
        FormulaSpace::Product {
            space: Box::new(self),
            manifold,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            FormulaSpace::Manifold { homology } => homology.top_degree(),
            FormulaSpace::Computed { dim, .. } => *dim,
            FormulaSpace::Cone { link: x } | FormulaSpace::Suspension { space: x } => x.dim() + 1,
            FormulaSpace::CompactifiedBundle { base, fiber_rank, .. } => base.top_degree() + fiber_rank,
            FormulaSpace::Product { space, manifold } => space.dim() + manifold.top_degree(),
        }
    }

    /// `I^pH_*` over `coeff`. Cones, suspensions and manifolds also work
    /// over the integers; bundles and products need a field.
    pub fn evaluate(&self, p: &Perversity, coeff: &CoefficientSpec) -> Result<FormulaResult, FormulaError> {
        let exact = |table| FormulaResult { table, verified: true };
        match self {
            FormulaSpace::Manifold { homology } => Ok(exact(reduce_coefficients(homology, coeff)?)),
            FormulaSpace::Computed { table, .. } => {
                if table.coefficients != *coeff {
                    return Err(FormulaError::MixedCoefficients(table.coefficients, *coeff));
                }
                Ok(exact(table.clone()))
            }
            FormulaSpace::Cone { link: x } => {
                let inner = x.evaluate(p, coeff)?;
                Ok(FormulaResult {
                    table: cone_formula(&inner.table, x.dim(), p)?,
                    verified: inner.verified,
                })
            }
            FormulaSpace::Suspension { space: x } => {
                let inner = x.evaluate(p, coeff)?;
                Ok(FormulaResult {
                    table: suspension_formula(&inner.table, x.dim(), p)?,
                    verified: inner.verified,
                })
            }
            FormulaSpace::CompactifiedBundle {
                base,
                fiber_rank,
                euler,
            } => {
                let b = reduce_coefficients(base, coeff)?;
                let out = compactified_bundle_formula(&b, *fiber_rank, *euler, p)?;
                Ok(FormulaResult {
                    table: out.table,
                    verified: out.verified,
                })
            }
            FormulaSpace::Product { space, manifold } => {
                let inner = space.evaluate(p, coeff)?;
                Ok(FormulaResult {
                    table: kunneth(&inner.table, &reduce_coefficients(manifold, coeff)?)?,
                    verified: inner.verified,
                })
            }
        }
    }
}
