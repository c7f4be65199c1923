//! Cross-checks between the two expansion routes of each family and the
//! factorizations they satisfy.

use qsymlab_core::composition::Composition;
use qsymlab_core::family::{expand_f, expand_m, Family, ALL_FAMILIES};
use qsymlab_core::schur::{skew_schur, SEMISTANDARD};
use qsymlab_core::shape::SkewShape;
use qsymlab_core::tableau::m_expansion;
use qsymlab_core::verify::scan_shapes;

fn sh(s: &str) -> SkewShape {
    s.parse().unwrap()
}

#[test]
fn fundamental_route_agrees_with_monomial_route() {
    for family in ALL_FAMILIES {
        for shape in scan_shapes(6, family.requires_partition_inner(), false) {
            let direct = expand_m(family, &shape).unwrap();
            let via_f = expand_f(family, &shape).unwrap().f_to_m().unwrap();
            assert_eq!(via_f, direct, "family {family}, shape {shape}");
        }
    }
}

#[test]
fn extended_on_partition_shapes_is_skew_schur() {
    for shape in scan_shapes(6, true, false) {
        if !shape.outer().is_partition() {
            continue;
        }
        assert_eq!(
            expand_m(Family::Extended, &shape).unwrap(),
            skew_schur(&shape).unwrap(),
            "shape {shape}"
        );
    }
}

#[test]
fn first_column_families_factor_over_the_inner_rows() {
    for family in [
        Family::DualImmaculate,
        Family::RowStrictDualImmaculate,
        Family::StrictAdvanced,
        Family::WeakAdvanced,
    ] {
        let row_strict = matches!(
            family,
            Family::RowStrictDualImmaculate | Family::StrictAdvanced
        );
        for shape in scan_shapes(6, false, false) {
            let inner_rows = shape.inner().len();
            if inner_rows == 0 {
                continue;
            }
            // block above the inner rows, kept as its own shape
            let top: Vec<u32> = shape.outer().parts()[inner_rows..].to_vec();
            let top_shape = SkewShape::from_outer(Composition::new(top).unwrap_or_else(|_| Composition::empty()));
            let mut product = expand_m(family, &top_shape).unwrap();
            for i in 0..inner_rows {
                let len = shape.outer().parts()[i] - shape.inner().parts()[i];
                let factor = if row_strict {
                    SkewShape::from_outer(Composition::new(vec![1; len as usize]).unwrap())
                } else {
                    SkewShape::from_outer(Composition::new(vec![len]).unwrap())
                };
                product = product
                    .quasi_shuffle_product(&skew_schur(&factor).unwrap())
                    .unwrap();
            }
            assert_eq!(
                expand_m(family, &shape).unwrap(),
                product,
                "family {family}, shape {shape}"
            );
        }
    }
}

#[test]
fn semistandard_expansion_is_symmetric_on_any_partition_shape() {
    for shape in scan_shapes(6, true, false) {
        if !shape.outer().is_partition() {
            continue;
        }
        let e = m_expansion(&shape, SEMISTANDARD);
        assert!(e.is_symmetric().unwrap(), "shape {shape}");
    }
}

#[test]
fn single_cell_expansions() {
    for family in ALL_FAMILIES {
        let e = expand_m(family, &sh("1")).unwrap();
        assert_eq!(e, qsymlab_core::QSymElement::monomial(Composition::new(vec![1]).unwrap()));
    }
}
