use tanseq::crosscheck::TAN_POWER_EXTRA_ORDER;
use tanseq::formulas::{self, Tables};
use tanseq::{ExactInt, ExactRational};

fn q(num: i64, den: i64) -> ExactRational {
    ExactRational::new(ExactInt::from(num), ExactInt::from(den))
}

#[test]
fn row_identities_hold() {
    let tables = Tables::new(25);
    for n in 1..=25 {
        assert!(
            formulas::check_row_identity_a(&tables, n).unwrap(),
            "first identity, n={n}"
        );
        assert!(
            formulas::check_row_identity_b(&tables, n).unwrap(),
            "second identity, n={n}"
        );
    }
}

#[test]
fn tan_power_expansion_holds() {
    let tables = Tables::new(10 + TAN_POWER_EXTRA_ORDER);
    for n in 1..=10 {
        assert!(
            formulas::check_tan_power_expansion(&tables, n, n + TAN_POWER_EXTRA_ORDER).unwrap(),
            "n={n}"
        );
    }
}

/// `(n, k, [(i, num, den)])` meaning `T(n,k) = sum num/den * T_i`.
type Listed = (usize, usize, &'static [(usize, i64, i64)]);

const LISTED: &[Listed] = &[
    (1, 1, &[(1, 1, 1)]),
    (2, 2, &[(3, 1, 2)]),
    (3, 1, &[(3, 1, 1)]),
    (3, 3, &[(3, -1, 6), (5, 1, 12)]),
    (4, 2, &[(5, 1, 2)]),
    (4, 4, &[(5, -1, 18), (7, 1, 144)]),
    (5, 1, &[(5, 1, 1)]),
    (5, 3, &[(5, -1, 6), (7, 1, 12)]),
    (5, 5, &[(5, 1, 120), (7, -1, 144), (9, 1, 2880)]),
    (6, 2, &[(7, 1, 2)]),
    (6, 4, &[(7, -1, 18), (9, 1, 144)]),
    (6, 6, &[(7, 23, 10800), (9, -1, 2160), (11, 1, 86400)]),
    (7, 1, &[(7, 1, 1)]),
    (7, 3, &[(7, -1, 6), (9, 1, 12)]),
    (7, 5, &[(7, 1, 120), (9, -1, 144), (11, 1, 2880)]),
    (
        7,
        7,
        &[
            (7, -1, 5040),
            (9, 7, 32400),
            (11, -1, 51840),
            (13, 1, 3628800),
        ],
    ),
    (8, 2, &[(9, 1, 2)]),
    (8, 4, &[(9, -1, 18), (11, 1, 144)]),
    (8, 6, &[(9, 23, 10800), (11, -1, 2160), (13, 1, 86400)]),
    (
        8,
        8,
        &[
            (9, -11, 264600),
            (11, 11, 907200),
            (13, -1, 1814400),
            (15, 1, 203212800),
        ],
    ),
];

#[test]
fn tangent_basis_coefficients_match_listing() {
    let tables = Tables::new(20);
    for &(n, k, listed) in LISTED {
        let basis = formulas::tangent_coeffs_on_t(&tables, k).unwrap();
        let got: Vec<(usize, ExactRational)> = basis
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != q(0, 1))
            .map(|(r, c)| (n + r, c.clone()))
            .collect();
        let expected: Vec<(usize, ExactRational)> = listed
            .iter()
            .map(|&(i, num, den)| (i, q(num, den)))
            .collect();
        assert_eq!(got, expected, "T({n},{k})");

        let value = basis.evaluate(&tables, n).unwrap();
        assert_eq!(
            value,
            ExactRational::from_integer(tables.tangent.cell(n, k).unwrap().clone())
        );
    }
}
