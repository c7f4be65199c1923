//! Exhaustive checks at desk scale: symmetry classification scans for each
//! family, closed-form comparisons, the involution pairings, coproduct
//! consistency of the skew expansions, the chromatic identity, and the
//! witness inequalities.

use std::time::Instant;

use crate::chromatic::top_coefficient;
use crate::composition::{compositions_of, Composition};
use crate::error::{Error, Result};
use crate::family::{
    expand_f, expand_m, predicted_symmetric_form, symmetry_witness, Family, ALL_FAMILIES,
};
use crate::qsym::{coproduct_fundamental, TensorElement};
use crate::shape::SkewShape;

/// All inner compositions fitting strictly inside `outer` (every used row
/// keeps at least one cell), optionally restricted to partitions.
fn admissible_inners(outer: &Composition, partition_only: bool) -> Vec<Composition> {
    fn rec(
        outer: &[u32],
        i: usize,
        current: &mut Vec<u32>,
        partition_only: bool,
        out: &mut Vec<Composition>,
    ) {
        out.push(Composition::new(current.clone()).unwrap());
        if i == outer.len() || outer[i] < 2 {
            return;
        }
        let mut cap = outer[i] - 1;
        if partition_only {
            cap = cap.min(current.last().copied().unwrap_or(u32::MAX));
        }
        for v in 1..=cap {
            current.push(v);
            rec(outer, i + 1, current, partition_only, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(outer.parts(), 0, &mut Vec::new(), partition_only, &mut out);
    out
}

/// Normalized shapes with outer size up to `max_size`, in deterministic
/// order. `partition_inner_only` matches the all-column families' domain;
/// `connected_only` restricts to connected diagrams.
pub fn scan_shapes(max_size: u32, partition_inner_only: bool, connected_only: bool) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for n in 1..=max_size {
        for outer in compositions_of(n) {
            for inner in admissible_inners(&outer, partition_inner_only) {
                let s = SkewShape::new(outer.clone(), inner).expect("inner fits");
                if connected_only && !s.is_connected() {
                    continue;
                }
                out.push(s);
            }
        }
    }
    out
}

/// The scan domain of one family: normalized connected shapes, with partition
/// inner for the all-column families.
pub fn admissible_shapes(family: Family, max_size: u32) -> Vec<SkewShape> {
    scan_shapes(max_size, family.requires_partition_inner(), true)
}

/// Evaluates the family's symmetry condition combinatorially, without any
/// enumeration. The shape must be normalized and connected.
pub fn symmetry_predicate(family: Family, shape: &SkewShape) -> Result<bool> {
    if !shape.is_normalized() {
        return Err(Error::Precondition("shape must be normalized"));
    }
    if !shape.is_connected() {
        return Err(Error::Precondition("shape must be connected"));
    }
    family.validate_shape(shape)?;
    let outer = shape.outer().parts();
    let rows = shape.rows();
    let inner_rows = shape.inner().len();
    let ok = match family {
        Family::DualImmaculate | Family::RowStrictDualImmaculate => {
            // all rows above the first row past the inner shape have one cell
            (inner_rows + 2..=rows).all(|i| outer[i - 1] == 1)
        }
        Family::Extended | Family::RowStrictExtended => shape.outer().is_partition(),
        Family::StrictAdvanced | Family::WeakAdvanced => {
            (inner_rows + 1..=rows.saturating_sub(1)).all(|i| outer[i - 1] == 1)
        }
        Family::StrictAdvancedExtended | Family::WeakAdvancedExtended => {
            is_column_over_row(shape)
        }
    };
    Ok(ok)
}

/// True when the cells form a column topped by a row extending right, up to a
/// uniform horizontal shift: single-cell rows stacked in one column, with the
/// top row starting in that column.
fn is_column_over_row(shape: &SkewShape) -> bool {
    let rows = shape.rows();
    if rows == 0 {
        return false;
    }
    let shift = shape.inner_len(1);
    for r in 1..rows {
        if shape.inner_len(r) != shift || shape.outer_len(r) != shift + 1 {
            return false;
        }
    }
    shape.inner_len(rows) == shift
}

/// One disagreement between the enumerated symmetry verdict and the
/// combinatorial predicate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mismatch {
    pub shape: SkewShape,
    pub expected: bool,
    pub computed: bool,
}

/// Outcome of one classification scan.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScanReport {
    pub family: Family,
    pub max_size: u32,
    pub shapes: usize,
    pub mismatches: Vec<Mismatch>,
    pub elapsed_ms: u128,
}

impl ScanReport {
    pub fn confirmed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> String {
        let mismatches: Vec<serde_json::Value> = self
            .mismatches
            .iter()
            .map(|m| {
                serde_json::json!({
                    "shape": m.shape.to_string(),
                    "expected": m.expected,
                    "computed": m.computed,
                })
            })
            .collect();
        serde_json::json!({
            "family": self.family.name(),
            "max_size": self.max_size,
            "shapes": self.shapes,
            "mismatches": mismatches,
            "ms": self.elapsed_ms,
        })
        .to_string()
    }
}

/// Compares the enumerated symmetry of every admissible shape against the
/// family's predicate.
pub fn scan_theorem(family: Family, max_size: u32) -> ScanReport {
    let start = Instant::now();
    let shapes = admissible_shapes(family, max_size);
    let mut mismatches = Vec::new();
    for s in &shapes {
        let expected = symmetry_predicate(family, s).expect("scan shapes satisfy preconditions");
        let computed = expand_m(family, s)
            .and_then(|e| e.is_symmetric())
            .expect("scan shapes satisfy preconditions");
        if expected != computed {
            mismatches.push(Mismatch {
                shape: s.clone(),
                expected,
                computed,
            });
        }
    }
    ScanReport {
        family,
        max_size,
        shapes: shapes.len(),
        mismatches,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Shapes where the predicate holds but the expansion differs from its
/// predicted closed form.
pub fn check_closed_forms(family: Family, max_size: u32) -> Result<Vec<SkewShape>> {
    let mut failures = Vec::new();
    for s in admissible_shapes(family, max_size) {
        if let Some(predicted) = predicted_symmetric_form(family, &s)? {
            if predicted != expand_m(family, &s)? {
                failures.push(s);
            }
        }
    }
    Ok(failures)
}

/// Shapes violating one of the four involution pairings, with the family
/// whose image failed.
pub fn check_psi_pairings(max_size: u32) -> Vec<(Family, SkewShape)> {
    let pairs = [
        Family::DualImmaculate,
        Family::Extended,
        Family::StrictAdvanced,
        Family::StrictAdvancedExtended,
    ];
    let mut failures = Vec::new();
    for family in pairs {
        let partner = family.psi_partner();
        for s in admissible_shapes(family, max_size) {
            let image = expand_m(family, &s)
                .and_then(|e| e.psi())
                .expect("scan shapes satisfy preconditions");
            let direct = expand_m(partner, &s).expect("same admissibility");
            if image != direct {
                failures.push((family, s));
            }
        }
    }
    failures
}

/// All compositions contained in `alpha` componentwise, including the empty
/// one and `alpha` itself.
fn sub_compositions(alpha: &Composition) -> Vec<Composition> {
    let mut out = vec![Composition::empty()];
    let mut complete = Vec::new();
    for &cap in alpha.parts() {
        complete.push(out.clone());
        let mut next = Vec::new();
        for prefix in &out {
            for v in 1..=cap {
                let mut parts = prefix.parts().to_vec();
                parts.push(v);
                next.push(Composition::new(parts).unwrap());
            }
        }
        out = next;
    }
    complete.push(out);
    complete.into_iter().flatten().collect()
}

/// Whether the coproduct of the family's fundamental expansion of `alpha`
/// matches the sum of tensor products over inner shapes contained in `alpha`.
/// For the all-column families only extended pairs contribute: a cell of the
/// inner shape must have every outer cell below it in its column inside the
/// inner shape too (such pairs normalize to partition inners). First-column
/// families admit every inner composition.
pub fn check_skew_consistency(family: Family, alpha: &Composition) -> Result<bool> {
    if alpha.is_empty() {
        return Err(Error::Precondition("composition must be nonempty"));
    }
    let whole = SkewShape::from_outer(alpha.clone());
    let lhs = coproduct_fundamental(&expand_f(family, &whole)?)?;
    let mut rhs = TensorElement::zero();
    for beta in sub_compositions(alpha) {
        let skew = SkewShape::new(alpha.clone(), beta.clone())?;
        if family.requires_partition_inner() && !skew.is_extended() {
            continue;
        }
        let left = expand_f(family, &SkewShape::from_outer(beta))?;
        let right = expand_f(family, &skew)?;
        rhs = rhs.add(&TensorElement::tensor(&left, &right)?);
    }
    Ok(lhs == rhs)
}

/// Non-partition outer shapes (partition inner, normalized, connectivity not
/// required) where the witness coefficients fail to satisfy the strict
/// inequality.
pub fn check_witness_inequalities(max_size: u32) -> Vec<SkewShape> {
    let mut failures = Vec::new();
    for s in scan_shapes(max_size, true, false) {
        if s.outer().is_partition() {
            continue;
        }
        let w = symmetry_witness(&s).expect("outer is not a partition");
        let e = expand_m(Family::Extended, &s).expect("inner is a partition");
        if e.coeff(&w.smaller) >= e.coeff(&w.larger) {
            failures.push(s);
        }
    }
    failures
}

/// Shapes where the top chromatic coefficient differs from the all-column
/// strict/strict expansion.
pub fn check_chromatic_identity(max_size: u32) -> Vec<SkewShape> {
    let mut failures = Vec::new();
    for s in admissible_shapes(Family::StrictAdvancedExtended, max_size) {
        let lhs = top_coefficient(&s);
        let rhs = expand_m(Family::StrictAdvancedExtended, &s).expect("partition inner");
        if lhs != rhs {
            failures.push(s);
        }
    }
    failures
}

/// Convenience wrapper: every check of one kind across all eight families.
pub fn check_all_skew_consistency(max_size: u32) -> Result<Vec<(Family, Composition)>> {
    let mut failures = Vec::new();
    for family in ALL_FAMILIES {
        for n in 1..=max_size {
            for alpha in compositions_of(n) {
                if !check_skew_consistency(family, &alpha)? {
                    failures.push((family, alpha));
                }
            }
        }
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn predicate_spot_values() {
        assert!(symmetry_predicate(Family::DualImmaculate, &sh("2,1")).unwrap());
        assert!(!symmetry_predicate(Family::DualImmaculate, &sh("1,2")).unwrap());
        assert!(!symmetry_predicate(Family::Extended, &sh("3,4,4,3,1/2,2,1")).unwrap());
        assert!(symmetry_predicate(Family::Extended, &sh("4,4,3,3,1/2,2,1")).unwrap());
        assert!(symmetry_predicate(Family::StrictAdvanced, &sh("3,4,4,1,3/2,1,2")).unwrap());
        assert!(symmetry_predicate(Family::WeakAdvanced, &sh("3,4,4,1,3/2,1,2")).unwrap());
        assert!(symmetry_predicate(Family::StrictAdvancedExtended, &sh("1,1,3")).unwrap());
        assert!(!symmetry_predicate(Family::StrictAdvancedExtended, &sh("2,2/1")).unwrap());
        // single cells and single rows
        for f in ALL_FAMILIES {
            assert!(symmetry_predicate(f, &sh("1")).unwrap());
        }
        // shifted column over row
        assert!(symmetry_predicate(Family::StrictAdvancedExtended, &sh("2,2,4/1,1,1")).unwrap());
        assert!(symmetry_predicate(Family::WeakAdvancedExtended, &sh("3/1")).unwrap());

        assert!(symmetry_predicate(Family::DualImmaculate, &sh("2,2/2")).is_err());
        assert!(symmetry_predicate(Family::DualImmaculate, &sh("3,1,2/2")).is_err());
    }

    #[test]
    fn scan_counts_single_cell() {
        let report = scan_theorem(Family::DualImmaculate, 1);
        assert_eq!(report.shapes, 1);
        assert!(report.confirmed());
    }

    #[test]
    fn small_scans_are_clean() {
        for f in ALL_FAMILIES {
            let report = scan_theorem(f, 4);
            assert!(report.confirmed(), "{}: {:?}", f, report.mismatches);
        }
    }

    #[test]
    fn skew_consistency_examples() {
        let a = Composition::new(vec![2, 1]).unwrap();
        assert!(check_skew_consistency(Family::DualImmaculate, &a).unwrap());
        let a = Composition::new(vec![3]).unwrap();
        assert!(check_skew_consistency(Family::Extended, &a).unwrap());
        let a = Composition::new(vec![1]).unwrap();
        for f in ALL_FAMILIES {
            assert!(check_skew_consistency(f, &a).unwrap());
        }
        assert!(check_skew_consistency(Family::DualImmaculate, &Composition::empty()).is_err());
    }

    #[test]
    fn shape_domain_counts() {
        // one outer composition of 1, none of its rows can shed cells
        assert_eq!(scan_shapes(1, false, true).len(), 1);
        // connected domains never exceed the unrestricted ones
        assert!(scan_shapes(4, false, true).len() <= scan_shapes(4, false, false).len());
        for s in scan_shapes(4, true, true) {
            assert!(s.inner().is_partition());
            assert!(s.is_normalized());
            assert!(s.is_connected());
        }
    }

    #[test]
    fn report_json_shape() {
        let report = scan_theorem(Family::Extended, 2);
        let json = report.to_json();
        assert!(json.contains("\"family\":\"ex\""));
        assert!(json.contains("\"mismatches\":[]"));
    }
}
