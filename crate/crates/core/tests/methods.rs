use num_traits::Zero;
use tanseq::formulas::{self, MethodTag, Tables};
use tanseq::series;
use tanseq::{Error, ExactInt, TriangleKind};

const N_MAX: usize = 20;

#[test]
fn tangent_methods_agree_on_every_cell() {
    let tables = Tables::new(N_MAX);
    for method in MethodTag::TANGENT_ALTERNATIVES {
        for n in 0..=N_MAX {
            for k in 0..=n {
                let expected = tables.tangent.cell(n, k).unwrap();
                let got = formulas::tangent(method, &tables, n, k)
                    .unwrap_or_else(|e| panic!("{method} ({n},{k}): {e}"));
                assert_eq!(&got, expected, "{method} ({n},{k})");
            }
        }
    }
}

#[test]
fn bulk_triangles_match_cellwise() {
    let tables = Tables::new(N_MAX);
    for method in MethodTag::TANGENT_ALTERNATIVES {
        let rows = formulas::tangent_triangle_via(method, &tables, N_MAX).unwrap();
        assert_eq!(
            rows.as_slice(),
            &tables.tangent.rows()[..=N_MAX],
            "{method}"
        );
    }
}

#[test]
fn cauchy_product_matches_secant_triangle() {
    let tables = Tables::new(N_MAX);
    for n in 0..=N_MAX {
        for k in 0..=n {
            assert_eq!(
                &formulas::secant_via_cauchy(&tables, n, k).unwrap(),
                tables.secant.cell(n, k).unwrap(),
                "({n},{k})"
            );
        }
    }
}

#[test]
fn stirling_and_lah_forms_coincide() {
    for n in 1..=N_MAX {
        for k in 1..=n {
            assert_eq!(
                formulas::tangent_via_stirling(n, k).unwrap(),
                formulas::tangent_via_lah(n, k).unwrap()
            );
        }
    }
}

#[test]
fn triangles_equal_series_extraction() {
    let tables = Tables::new(30);
    for kind in TriangleKind::ALL {
        let rows = series::definitional_triangle(kind, 30).unwrap();
        assert_eq!(
            rows.as_slice(),
            &tables.triangle(kind).rows()[..=30],
            "{kind}"
        );
    }
}

#[test]
fn single_cell_extraction_spot_checks() {
    let tables = Tables::new(12);
    for (n, k) in [(7, 3), (12, 4), (11, 1), (10, 10), (9, 2)] {
        assert_eq!(
            &series::definitional_t(n, k).unwrap(),
            tables.tangent.cell(n, k).unwrap()
        );
        assert_eq!(
            &series::definitional_s(n, k).unwrap(),
            tables.secant.cell(n, k).unwrap()
        );
        assert_eq!(
            &series::definitional_tstar(n, k).unwrap(),
            tables.arctangent.cell(n, k).unwrap()
        );
    }
}

#[test]
fn no_method_reports_a_fraction() {
    let tables = Tables::new(N_MAX);
    for kind in TriangleKind::ALL {
        for method in MethodTag::ALL.into_iter().filter(|m| m.computes(kind)) {
            for n in 0..=N_MAX {
                for k in 0..=n {
                    match formulas::value(kind, method, &tables, n, k) {
                        Ok(_) => {}
                        Err(e @ Error::NonIntegral { .. }) => panic!("{kind} {method}: {e}"),
                        Err(e) => panic!("{kind} {method} ({n},{k}) failed: {e}"),
                    }
                }
            }
        }
    }
}

#[test]
fn unsupported_pairs_are_rejected() {
    let tables = Tables::new(5);
    for method in MethodTag::ALL {
        let result = formulas::value(TriangleKind::SecantHigher, method, &tables, 4, 2);
        assert_eq!(
            result.is_ok(),
            method.computes(TriangleKind::SecantHigher),
            "{method}"
        );
    }
    assert!(matches!(
        formulas::value(
            TriangleKind::ArctangentHigher,
            MethodTag::Lah,
            &tables,
            4,
            2
        ),
        Err(Error::Unsupported { .. })
    ));
}

#[test]
fn parity_cells_are_zero_for_every_method() {
    let tables = Tables::new(10);
    for method in MethodTag::TANGENT_ALTERNATIVES {
        assert!(
            formulas::tangent(method, &tables, 6, 3).unwrap().is_zero(),
            "{method}"
        );
        assert_eq!(
            formulas::tangent(method, &tables, 9, 3).unwrap(),
            ExactInt::from(28160)
        );
    }
}
