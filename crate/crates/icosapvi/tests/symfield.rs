//! End-to-end checks of the symbolic verification engine against the bundled
//! solution catalog, plus the consistency bridge between the catalog's
//! parameter tuples and the 52-row classification table.

use icosapvi::classify::reference_rows;
use icosapvi::exact::{rat, rat_i, Rational};
use icosapvi::symfield::{
    catalog, catalog_entry, check_implicit, leading_coeff, pvi_residual, verify_entry, BiPoly,
    PviParams,
};
use icosapvi::weyl::{reduce_to_alcove, ThetaVec};

/// The residual of the degree-10 genus-zero pair (entry `sol33`, also known
/// as `thmB`) vanishes identically at its tabulated parameters.
#[test]
fn sol33_residual_vanishes_at_its_parameters() {
    let e = catalog_entry("thmB").expect("alias resolves");
    assert_eq!(e.id, "sol33");
    let params = PviParams::new([rat(2, 5), rat(1, 2), rat(1, 3), rat(4, 5)]);
    let r = pvi_residual(&e.y, &e.t, &params).unwrap();
    assert!(r.is_zero(), "nonzero residual: {r}");
}

/// The bundled degree-12 implicit model holds for sol33's parameterization,
/// while an unrelated bivariate polynomial does not.
#[test]
fn sol33_implicit_model_is_sharp() {
    let e = catalog_entry("sol33").unwrap();
    let rel = e.implicit.as_ref().expect("sol33 carries an implicit model");
    assert!(check_implicit(rel, &e.y, &e.t).unwrap());
    let not_a_relation = BiPoly::new(vec![(1, 0, rat_i(1)), (0, 1, rat_i(-1))]); // y − t
    assert!(!check_implicit(&not_a_relation, &e.y, &e.t).unwrap());
}

/// The elliptic-curve entry (all θᵢ = 1/3, u² = s(8s² − 11s + 8)) verifies.
#[test]
fn thmc_verifies_on_its_elliptic_curve() {
    let e = catalog_entry("thmC").unwrap();
    let f = e.modulus.as_ref().expect("thmC lives on a quadratic chart");
    // u² = s(8s² − 11s + 8) = 8s − 11s² + 8s³.
    assert_eq!(
        f.coeffs().iter().cloned().collect::<Vec<_>>(),
        vec![rat_i(0), rat_i(8), rat_i(-11), rat_i(8)]
    );
    let report = verify_entry("thmC").unwrap();
    assert!(report.line().contains("pass"));
}

/// Solution 38 (θ = (1/3, 1/3, 1/3, 3/5), u² = (4s² + s + 1)(5s + 1)).
#[test]
fn sol38_verifies_on_its_quadratic_chart() {
    let e = catalog_entry("sol38").unwrap();
    assert_eq!(e.thetas, vec![[rat(1, 3), rat(1, 3), rat(1, 3), rat(3, 5)]]);
    let report = verify_entry("sol38").unwrap();
    assert!(report.line().contains("pass"));
}

/// The companion entry with θ = (0, 0, 0, −2/3) rides on the thmC entry's
/// exact (t, u, s) frame and still satisfies the equation.
#[test]
fn dm41_verifies_on_the_shared_frame() {
    let e = catalog_entry("dm41").unwrap();
    assert_eq!(e.thetas, vec![[rat_i(0), rat_i(0), rat_i(0), rat(-2, 3)]]);
    assert_eq!(e.frame.as_deref(), Some("thmC"));
    let donor = catalog_entry("thmC").unwrap();
    assert_eq!(e.t, donor.t);
    assert_eq!(e.modulus, donor.modulus);
    let report = verify_entry("dm41").unwrap();
    assert_eq!(report.shares_frame_with.as_deref(), Some("thmC"));
}

/// All five entries with a designated regular branch at t = 0 have parameter
/// tuples with θ₁ = θ₂, so the leading coefficient of y = c·t + O(t²) must be
/// θ₁/(θ₁ + θ₂) = 1/2 exactly.
#[test]
fn designated_branches_have_leading_coefficient_one_half() {
    for id in ["sol22", "sol23", "sol27", "sol29", "sol30"] {
        let e = catalog_entry(id).unwrap();
        let branch = e.leading.as_ref().expect("designated branch");
        assert_eq!(e.thetas[0][0], e.thetas[0][1], "{id}: branch lemma needs θ₁ = θ₂");
        let (y, t) = if branch.u_sign < 0 {
            (e.y.conj(), e.t.conj())
        } else {
            (e.y.clone(), e.t.clone())
        };
        let c = leading_coeff(&y, &t, &branch.s0).unwrap();
        assert_eq!(c, rat(1, 2), "{id}: leading coefficient {c}");
        assert_eq!(branch.expect, rat(1, 2));
    }
}

/// Every tabulated θ in the catalog reduces, under the affine Weyl action,
/// to the alcove point of the classification row its anchor names.
#[test]
fn catalog_thetas_reduce_to_their_reference_rows() {
    let rows_of: &[(&str, &[u32])] = &[
        ("sqrt_t", &[11, 12, 13]),
        ("hittet", &[14, 15]),
        ("dih", &[16, 17]),
        ("hitoct", &[18]),
        ("sol19", &[19]),
        ("sol20", &[20]),
        ("sol22", &[22]),
        ("sol23", &[23]),
        ("sol24", &[24]),
        ("sol25", &[25]),
        ("sol27", &[27]),
        ("sol28", &[28]),
        ("sol29", &[29]),
        ("sol30", &[30]),
        ("sol33", &[33]),
        ("sol34", &[34]),
        ("sol35", &[35]),
        ("sol36", &[36]),
        ("sol37", &[37]),
        ("sol38", &[38]),
        ("sol39", &[39]),
        ("sol40", &[40]),
        ("thmC", &[41]),
        ("dm41", &[41]),
        ("sol42", &[42]),
        ("sol43", &[43]),
        ("sol46", &[46]),
    ];
    assert_eq!(rows_of.len(), catalog().len());
    let reference = reference_rows();
    for (id, rows) in rows_of {
        let e = catalog_entry(id).unwrap();
        assert_eq!(e.thetas.len(), rows.len(), "{id}: tuple/row count mismatch");
        for (theta, &row) in e.thetas.iter().zip(rows.iter()) {
            let v = ThetaVec::new(
                theta[0].clone(),
                theta[1].clone(),
                theta[2].clone(),
                theta[3].clone(),
            );
            let (reduced, _word) = reduce_to_alcove(&v);
            let scaled = reduced.scaled(60).expect("alcove points are 60ths");
            let expect = reference[(row - 1) as usize].alcove_x60;
            assert_eq!(
                scaled, expect,
                "{id}: θ = {theta:?} reduces to {scaled:?}, reference row {row} has {expect:?}"
            );
        }
        // The anchor names the matching row(s) for human readers.
        let mention = if rows.len() > 1 {
            format!("rows {}-{}", rows.first().unwrap(), rows.last().unwrap())
        } else {
            format!("row {}", rows[0])
        };
        assert!(
            e.anchor.contains(&mention),
            "{id}: anchor does not mention `{mention}`"
        );
    }
}

/// The four family entries are verified off-table as well: their extra
/// sample tuples lie on the family's parameter line, not in the table.
#[test]
fn family_samples_lie_on_their_parameter_lines() {
    let one = rat_i(1);
    // y = √t line: θ₂ = θ₃ and θ₁ + θ₄ = 1.
    for th in &catalog_entry("sqrt_t").unwrap().extra_thetas {
        assert_eq!(th[1], th[2]);
        assert_eq!(&th[0] + &th[3], one);
    }
    // Tetrahedral line: θ₁/2 = θ₂ = θ₃, θ₄ = 2/3.
    for th in &catalog_entry("hittet").unwrap().extra_thetas {
        assert_eq!(th[0], &th[1] * &rat_i(2));
        assert_eq!(th[1], th[2]);
        assert_eq!(th[3], rat(2, 3));
    }
    // Dihedral line: θ₁ = θ₂ = θ₃, θ₄ = 1/2.
    for th in &catalog_entry("dih").unwrap().extra_thetas {
        assert_eq!(th[0], th[1]);
        assert_eq!(th[1], th[2]);
        assert_eq!(th[3], rat(1, 2));
    }
    // Octahedral line: θ₁ = θ₂ = θ₃, θ₄ = 1 ∓ 3θ₁ (both signs appear).
    let e = catalog_entry("hitoct").unwrap();
    for th in &e.extra_thetas {
        assert_eq!(th[0], th[1]);
        assert_eq!(th[1], th[2]);
        let three_t1 = &th[0] * &rat_i(3);
        assert!(
            th[3] == &one - &three_t1 || th[3] == &one + &three_t1,
            "hitoct sample {th:?} off the line"
        );
    }
}

/// Verifying at a wrong parameter tuple fails loudly with the residual.
#[test]
fn wrong_parameters_produce_a_nonzero_residual() {
    let e = catalog_entry("sol19").unwrap();
    let mut theta = e.thetas[0].clone();
    theta[3] = &theta[3] + &Rational::new(1.into(), 7.into());
    let params = PviParams::new(theta);
    let r = pvi_residual(&e.y, &e.t, &params).unwrap();
    assert!(!r.is_zero());
}
