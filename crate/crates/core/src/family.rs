//! The eight Schur-like families: each is the generating function of the
//! fillings allowed by one row/column rule pair, expanded over the monomial
//! basis, or over the fundamental basis through standard tableaux and one of
//! the four descent statistics.

use std::fmt;
use std::str::FromStr;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::qsym::QSymElement;
use crate::schur::{schur_product, skew_schur};
use crate::shape::SkewShape;
use crate::tableau::{
    f_expansion, m_expansion, ColumnScope, ConstraintSpec, DescentKind, Strictness,
};
use crate::verify::symmetry_predicate;

/// The eight families, named by their CLI spellings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    /// `dI`: first column strict, rows weak.
    DualImmaculate,
    /// `rdI`: first column weak, rows strict.
    RowStrictDualImmaculate,
    /// `ex`: all columns strict, rows weak.
    Extended,
    /// `rex`: all columns weak, rows strict.
    RowStrictExtended,
    /// `sAdI`: first column strict, rows strict.
    StrictAdvanced,
    /// `wAdI`: first column weak, rows weak.
    WeakAdvanced,
    /// `sAex`: all columns strict, rows strict.
    StrictAdvancedExtended,
    /// `wAex`: all columns weak, rows weak.
    WeakAdvancedExtended,
}

pub const ALL_FAMILIES: [Family; 8] = [
    Family::DualImmaculate,
    Family::RowStrictDualImmaculate,
    Family::Extended,
    Family::RowStrictExtended,
    Family::StrictAdvanced,
    Family::WeakAdvanced,
    Family::StrictAdvancedExtended,
    Family::WeakAdvancedExtended,
];

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::DualImmaculate => "dI",
            Family::RowStrictDualImmaculate => "rdI",
            Family::Extended => "ex",
            Family::RowStrictExtended => "rex",
            Family::StrictAdvanced => "sAdI",
            Family::WeakAdvanced => "wAdI",
            Family::StrictAdvancedExtended => "sAex",
            Family::WeakAdvancedExtended => "wAex",
        }
    }

    pub fn constraint_spec(self) -> ConstraintSpec {
        use ColumnScope::*;
        use Strictness::*;
        match self {
            Family::DualImmaculate => ConstraintSpec::new(FirstColumn, Strict, Weak),
            Family::RowStrictDualImmaculate => ConstraintSpec::new(FirstColumn, Weak, Strict),
            Family::Extended => ConstraintSpec::new(AllColumns, Strict, Weak),
            Family::RowStrictExtended => ConstraintSpec::new(AllColumns, Weak, Strict),
            Family::StrictAdvanced => ConstraintSpec::new(FirstColumn, Strict, Strict),
            Family::WeakAdvanced => ConstraintSpec::new(FirstColumn, Weak, Weak),
            Family::StrictAdvancedExtended => ConstraintSpec::new(AllColumns, Strict, Strict),
            Family::WeakAdvancedExtended => ConstraintSpec::new(AllColumns, Weak, Weak),
        }
    }

    pub fn scope(self) -> ColumnScope {
        self.constraint_spec().scope
    }

    /// Descent statistic pairing with this family's fundamental expansion.
    pub fn descent_kind(self) -> DescentKind {
        match self {
            Family::DualImmaculate | Family::Extended => DescentKind::StrictlyAbove,
            Family::RowStrictDualImmaculate | Family::RowStrictExtended => DescentKind::WeaklyBelow,
            Family::WeakAdvanced | Family::WeakAdvancedExtended => DescentKind::StrictlyBelow,
            Family::StrictAdvanced | Family::StrictAdvancedExtended => DescentKind::WeaklyAbove,
        }
    }

    /// The all-column families only admit partition inner shapes.
    pub fn requires_partition_inner(self) -> bool {
        self.scope() == ColumnScope::AllColumns
    }

    /// The involution partner: strict and weak rules exchanged.
    pub fn psi_partner(self) -> Family {
        match self {
            Family::DualImmaculate => Family::RowStrictDualImmaculate,
            Family::RowStrictDualImmaculate => Family::DualImmaculate,
            Family::Extended => Family::RowStrictExtended,
            Family::RowStrictExtended => Family::Extended,
            Family::StrictAdvanced => Family::WeakAdvanced,
            Family::WeakAdvanced => Family::StrictAdvanced,
            Family::StrictAdvancedExtended => Family::WeakAdvancedExtended,
            Family::WeakAdvancedExtended => Family::StrictAdvancedExtended,
        }
    }

    pub fn validate_shape(self, shape: &SkewShape) -> Result<()> {
        if self.requires_partition_inner() && !shape.inner().is_partition() {
            return Err(Error::NotPartition("inner shape"));
        }
        Ok(())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_FAMILIES
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// Monomial expansion: the coefficient of each composition counts the packed
/// fillings of `shape` with that content under the family's rules. The shape
/// is normalized first; the inner-shape requirement applies to the normalized
/// diagram.
pub fn expand_m(family: Family, shape: &SkewShape) -> Result<QSymElement> {
    let s = shape.normalize();
    family.validate_shape(&s)?;
    Ok(m_expansion(&s, family.constraint_spec()))
}

/// Fundamental expansion: one `F` term per standard tableau, indexed by the
/// composition of the family's descent set.
pub fn expand_f(family: Family, shape: &SkewShape) -> Result<QSymElement> {
    let s = shape.normalize();
    family.validate_shape(&s)?;
    Ok(f_expansion(&s, family.scope(), family.descent_kind()))
}

fn row_shape(len: u32) -> SkewShape {
    SkewShape::from_outer(Composition::new(vec![len]).unwrap())
}

fn column_shape(len: u32) -> SkewShape {
    SkewShape::from_outer(Composition::new(vec![1; len as usize]).unwrap())
}

fn hook_shape(arm: u32, leg: u32) -> SkewShape {
    let mut parts = vec![arm];
    parts.extend(std::iter::repeat(1).take(leg as usize));
    SkewShape::from_outer(Composition::new(parts).unwrap())
}

/// When the family's symmetry condition holds on `shape`, the closed form it
/// collapses to, as a monomial expansion; `None` otherwise. The first-column
/// families factor into a hook or a line above the inner rows times one row or
/// column per inner row; the all-column families give a skew Schur function,
/// its transpose, or a single line.
pub fn predicted_symmetric_form(family: Family, shape: &SkewShape) -> Result<Option<QSymElement>> {
    let s = shape.normalize();
    if !symmetry_predicate(family, &s)? {
        return Ok(None);
    }
    let outer = s.outer().parts();
    let rows = s.rows();
    let inner_rows = s.inner().len();
    let element = match family {
        Family::Extended => skew_schur(&s)?,
        Family::RowStrictExtended => skew_schur(&s.transpose()?)?,
        Family::StrictAdvancedExtended => skew_schur(&column_shape(s.size()))?,
        Family::WeakAdvancedExtended => skew_schur(&row_shape(s.size()))?,
        Family::DualImmaculate
        | Family::RowStrictDualImmaculate
        | Family::StrictAdvanced
        | Family::WeakAdvanced => {
            let mut factors = Vec::new();
            if inner_rows < rows {
                let head = match family {
                    Family::DualImmaculate => {
                        hook_shape(outer[inner_rows], (rows - inner_rows - 1) as u32)
                    }
                    Family::RowStrictDualImmaculate => {
                        hook_shape((rows - inner_rows) as u32, outer[inner_rows] - 1)
                    }
                    Family::StrictAdvanced => {
                        column_shape((rows - inner_rows - 1) as u32 + outer[rows - 1])
                    }
                    Family::WeakAdvanced => {
                        row_shape((rows - inner_rows - 1) as u32 + outer[rows - 1])
                    }
                    _ => unreachable!(),
                };
                factors.push(head);
            }
            let row_strict = matches!(
                family,
                Family::RowStrictDualImmaculate | Family::StrictAdvanced
            );
            for i in 0..inner_rows {
                let len = outer[i] - s.inner().parts()[i];
                factors.push(if row_strict {
                    column_shape(len)
                } else {
                    row_shape(len)
                });
            }
            schur_product(&factors)?
        }
    };
    Ok(Some(element))
}

/// The content pair certifying non-symmetry of the all-column strict/weak
/// expansion on a non-partition outer shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetryWitness {
    /// 1-based highest row whose successor row is longer.
    pub pivot_row: usize,
    /// The entry value doubled on one side of the comparison.
    pub marker: u32,
    /// Content with the doubled value at position `marker`; the rarer one.
    pub smaller: Composition,
    /// Content with the doubled value at position `marker + 1`.
    pub larger: Composition,
}

/// Builds the witness contents for a normalized shape with partition inner
/// and non-partition outer: the count of fillings with content `smaller` is
/// strictly below the count with content `larger`.
pub fn symmetry_witness(shape: &SkewShape) -> Result<SymmetryWitness> {
    let s = shape.normalize();
    if !s.inner().is_partition() {
        return Err(Error::NotPartition("inner shape"));
    }
    if s.outer().is_partition() {
        return Err(Error::OuterIsPartition);
    }
    let outer = s.outer().parts();
    let inner_at = |i: usize| s.inner_len(i + 1);
    let pivot = (0..outer.len() - 1)
        .rev()
        .find(|&i| outer[i + 1] > outer[i])
        .expect("outer is not a partition");
    let marker: u32 = (0..=pivot).map(|i| outer[i] - inner_at(i)).sum::<u32>()
        + (outer[pivot] - inner_at(pivot + 1))
        - 1;
    let n = s.size();
    let hook = |lead: u32, tail: u32| {
        let mut parts = vec![1u32; lead as usize];
        parts.push(2);
        parts.extend(std::iter::repeat(1).take(tail as usize));
        Composition::new(parts).unwrap()
    };
    Ok(SymmetryWitness {
        pivot_row: pivot + 1,
        marker,
        smaller: hook(marker - 1, n - marker - 1),
        larger: hook(marker, n - marker - 2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn sh(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn family_names_round_trip() {
        for f in ALL_FAMILIES {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
            assert_eq!(f.psi_partner().psi_partner(), f);
        }
        assert!("dX".parse::<Family>().is_err());
    }

    #[test]
    fn monomial_expansions_small() {
        let e = expand_m(Family::DualImmaculate, &sh("2,1")).unwrap();
        assert_eq!(e, skew_schur(&sh("2,1")).unwrap());

        let e = expand_m(Family::DualImmaculate, &sh("1,2")).unwrap();
        assert_eq!(e.coeff(&c(&[1, 2])), BigInt::from(1));
        assert_eq!(e.coeff(&c(&[1, 1, 1])), BigInt::from(1));
        assert_eq!(e.num_terms(), 2);
        assert!(!e.is_symmetric().unwrap());

        // a column of ones below a row collapses to the all-ones term
        let e = expand_m(Family::StrictAdvanced, &sh("1,1,3")).unwrap();
        assert_eq!(e, QSymElement::monomial(c(&[1, 1, 1, 1, 1])));

        assert!(expand_m(Family::Extended, &sh("3,3/1,2")).is_err());
    }

    #[test]
    fn fundamental_expansions_small() {
        let e = expand_f(Family::DualImmaculate, &sh("1,2")).unwrap();
        assert_eq!(e, QSymElement::fundamental(c(&[1, 2])));
        assert_eq!(
            e.f_to_m().unwrap(),
            expand_m(Family::DualImmaculate, &sh("1,2")).unwrap()
        );

        for f in ALL_FAMILIES {
            let e = expand_f(f, &sh("1")).unwrap();
            assert_eq!(e, QSymElement::fundamental(c(&[1])));
        }
    }

    #[test]
    fn predicted_forms_on_examples() {
        // hook times rows
        let shape = sh("3,4,4,3,1/2,1,2");
        let predicted = predicted_symmetric_form(Family::DualImmaculate, &shape)
            .unwrap()
            .unwrap();
        let product = schur_product(&[sh("3,1"), sh("1"), sh("3"), sh("2")]).unwrap();
        assert_eq!(predicted, product);

        // not symmetric: no closed form
        assert!(predicted_symmetric_form(Family::Extended, &sh("3,4,4,3,1/2,2,1"))
            .unwrap()
            .is_none());

        // transposed skew Schur
        let predicted = predicted_symmetric_form(Family::RowStrictExtended, &sh("4,4,3,3,1/2,2,1"))
            .unwrap()
            .unwrap();
        assert_eq!(predicted, skew_schur(&sh("5,4,4,2/3,2")).unwrap());
    }

    #[test]
    fn witness_worked_example() {
        let w = symmetry_witness(&sh("6,4,6,2/2,1,1")).unwrap();
        assert_eq!(w.pivot_row, 2);
        assert_eq!(w.marker, 9);
        assert_eq!(w.smaller.size(), 14);
        assert_eq!(w.larger.size(), 14);
        assert_eq!(w.smaller, c(&[1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1]));
        assert_eq!(w.larger, c(&[1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1]));
        assert_eq!(w.smaller.to_partition(), w.larger.to_partition());

        let w = symmetry_witness(&sh("1,2")).unwrap();
        assert_eq!(w.pivot_row, 1);
        assert_eq!(w.marker, 1);
        assert_eq!(w.smaller, c(&[2, 1]));
        assert_eq!(w.larger, c(&[1, 2]));

        assert!(symmetry_witness(&sh("2,1")).is_err());
    }

    #[test]
    fn witness_inequality_on_small_case() {
        let shape = sh("1,2");
        let w = symmetry_witness(&shape).unwrap();
        let e = expand_m(Family::Extended, &shape).unwrap();
        assert!(e.coeff(&w.smaller) < e.coeff(&w.larger));
    }
}
