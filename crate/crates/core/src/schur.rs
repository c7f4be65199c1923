//! Skew Schur functions from semistandard fillings, Kostka numbers, and
//! products realised as single skew functions of disconnected diagrams.

use num_bigint::BigInt;

use crate::composition::Partition;
use crate::error::{Error, Result};
use crate::qsym::QSymElement;
use crate::shape::SkewShape;
use crate::tableau::{m_expansion, ColumnScope, ConstraintSpec, Strictness};

/// Strict columns, weak rows: the semistandard rule.
pub const SEMISTANDARD: ConstraintSpec =
    ConstraintSpec::new(ColumnScope::AllColumns, Strictness::Strict, Strictness::Weak);

fn require_partitions(shape: &SkewShape) -> Result<SkewShape> {
    let s = shape.normalize();
    if !s.outer().is_partition() {
        return Err(Error::NotPartition("outer shape"));
    }
    if !s.inner().is_partition() {
        return Err(Error::NotPartition("inner shape"));
    }
    Ok(s)
}

/// Monomial expansion of the skew Schur function: the coefficient of each
/// composition counts semistandard fillings with that content.
pub fn skew_schur(shape: &SkewShape) -> Result<QSymElement> {
    let s = require_partitions(shape)?;
    Ok(m_expansion(&s, SEMISTANDARD))
}

/// Number of semistandard fillings of `shape` with content `nu`.
pub fn kostka(shape: &SkewShape, nu: &Partition) -> Result<BigInt> {
    let s = require_partitions(shape)?;
    if nu.size() != s.size() {
        return Err(Error::SizeMismatch);
    }
    Ok(skew_schur(&s)?.coeff(nu.as_composition()))
}

/// The product of skew Schur functions, computed as one skew Schur function
/// of the stacked diagram on disjoint column sets.
pub fn schur_product(shapes: &[SkewShape]) -> Result<QSymElement> {
    let mut combined = SkewShape::empty();
    for s in shapes {
        require_partitions(s)?;
        combined = combined.disjoint_union(s);
    }
    skew_schur(&combined)
}

/// Whether the involution on the monomial basis carries this skew Schur
/// function to the one of the transposed shape, both sides computed
/// independently.
pub fn transpose_identity_holds(shape: &SkewShape) -> Result<bool> {
    let s = require_partitions(shape)?;
    let lhs = skew_schur(&s)?.psi()?;
    let rhs = skew_schur(&s.transpose()?)?;
    Ok(lhs == rhs)
}
