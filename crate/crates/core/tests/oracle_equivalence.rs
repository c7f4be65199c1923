//! The enumeration engine against brute force: every packed or bounded
//! filling the engine produces must be exactly the brute-force filter, and
//! the shape predicates must agree with their naive set definitions.

mod common;

use common::{brute_connected, brute_extended, brute_fillings, brute_packed, brute_satisfies};
use qsymlab_core::shape::SkewShape;
use qsymlab_core::tableau::{
    bounded_tableaux, packed_tableaux, satisfies, standard_tableaux, ColumnScope, ConstraintSpec,
    Strictness,
};
use qsymlab_core::verify::scan_shapes;

fn all_specs() -> Vec<ConstraintSpec> {
    let mut specs = Vec::new();
    for scope in [ColumnScope::FirstColumn, ColumnScope::AllColumns] {
        for columns in [Strictness::Strict, Strictness::Weak] {
            for rows in [Strictness::Strict, Strictness::Weak] {
                specs.push(ConstraintSpec::new(scope, columns, rows));
            }
        }
    }
    specs
}

fn sh(s: &str) -> SkewShape {
    s.parse().unwrap()
}

/// Shapes with column gaps, disconnected pieces, and nonempty inners that the
/// size-5 sweep misses.
fn tricky_shapes() -> Vec<SkewShape> {
    [
        "2,1,2", "2,1,3", "3,1,2", "2,1,1,2", "1,2,1,2", "3,1,2/2", "2,4/1", "3,3/2,1",
        "2,2,2/1,1", "4,1,1", "2,2,4/1,1,1",
    ]
    .iter()
    .map(|t| sh(t))
    .collect()
}

#[test]
fn packed_enumeration_matches_brute_force() {
    let mut shapes = scan_shapes(5, false, false);
    shapes.extend(tricky_shapes());
    for shape in &shapes {
        let n = shape.size();
        for spec in all_specs() {
            let mut expected: Vec<Vec<u32>> = brute_fillings(shape, n)
                .into_iter()
                .filter(|e| brute_packed(e) && brute_satisfies(shape, e, spec))
                .collect();
            expected.sort();
            let got: Vec<Vec<u32>> = packed_tableaux(shape, spec)
                .iter()
                .map(|t| t.entries().to_vec())
                .collect();
            assert_eq!(got, expected, "shape {shape}, spec {spec:?}");
        }
    }
}

#[test]
fn bounded_enumeration_matches_brute_force() {
    for shape in scan_shapes(4, false, false) {
        for spec in all_specs() {
            for max in 1..=3 {
                let mut expected: Vec<Vec<u32>> = brute_fillings(&shape, max)
                    .into_iter()
                    .filter(|e| brute_satisfies(&shape, e, spec))
                    .collect();
                expected.sort();
                let got: Vec<Vec<u32>> = bounded_tableaux(&shape, spec, max)
                    .iter()
                    .map(|t| t.entries().to_vec())
                    .collect();
                assert_eq!(got, expected, "shape {shape}, spec {spec:?}, max {max}");
            }
        }
    }
}

#[test]
fn engine_satisfies_agrees_with_brute_checker() {
    for shape in [sh("2,1,2"), sh("2,2/1"), sh("3,1")] {
        for spec in all_specs() {
            for entries in brute_fillings(&shape, shape.size().min(3)) {
                let t = qsymlab_core::tableau::Tableau::new(shape.clone(), entries.clone()).unwrap();
                assert_eq!(
                    satisfies(&t, spec),
                    brute_satisfies(&shape, &entries, spec),
                    "shape {shape}, spec {spec:?}, entries {entries:?}"
                );
            }
        }
    }
}

#[test]
fn standard_tableaux_match_brute_force() {
    for shape in scan_shapes(4, false, false) {
        let n = shape.size();
        for scope in [ColumnScope::FirstColumn, ColumnScope::AllColumns] {
            let spec = ConstraintSpec::new(scope, Strictness::Strict, Strictness::Strict);
            let mut expected: Vec<Vec<u32>> = brute_fillings(&shape, n)
                .into_iter()
                .filter(|e| {
                    let mut sorted = e.clone();
                    sorted.sort_unstable();
                    sorted == (1..=n).collect::<Vec<u32>>() && brute_satisfies(&shape, e, spec)
                })
                .collect();
            expected.sort();
            let got: Vec<Vec<u32>> = standard_tableaux(&shape, scope)
                .iter()
                .map(|t| t.entries().to_vec())
                .collect();
            assert_eq!(got, expected, "shape {shape}, scope {scope:?}");
        }
    }
}

#[test]
fn connectivity_matches_brute_force() {
    for shape in scan_shapes(6, false, false) {
        assert_eq!(
            shape.is_connected(),
            brute_connected(&shape),
            "shape {shape}"
        );
    }
    for shape in tricky_shapes() {
        assert_eq!(shape.is_connected(), brute_connected(&shape), "shape {shape}");
    }
}

#[test]
fn extended_matches_brute_force() {
    let mut shapes = scan_shapes(6, false, false);
    shapes.push(sh("3,4,4,3,1/2,2,1"));
    shapes.push(sh("3,4,4,3,1/2,1,2"));
    for shape in shapes {
        assert_eq!(shape.is_extended(), brute_extended(&shape), "shape {shape}");
    }
}
