//! Property tests for the exact linear algebra substrate and the algebraic
//! identities behind the symplectic Novikov machinery.

use proptest::prelude::*;

use snla_core::lie::{is_symplectic, symplectic_adjoint, BilinearForm, LieAlgebra};
use snla_core::linalg::{quotient_map, unit_vec, vec_is_zero, Matrix, Subspace};
use snla_core::scalar::Scalar;

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn vec_strategy(len: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(scalar_strategy(), len)
}

fn matrix_strategy(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(scalar_strategy(), rows * cols)
        .prop_map(move |data| Matrix::new(rows, cols, data).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn echelonize_is_idempotent_and_preserves_span(
        dim in 1usize..=5,
        count in 0usize..=5,
        seed in proptest::collection::vec(proptest::collection::vec(-6i64..=6, 5), 0..=5),
    ) {
        let vectors: Vec<Vec<Scalar>> = seed
            .iter()
            .take(count)
            .map(|row| row.iter().take(dim).map(|&x| Scalar::from_int(x)).collect())
            .filter(|v: &Vec<Scalar>| v.len() == dim)
            .collect();
        let s = Subspace::span(dim, &vectors).unwrap();
        let again = Subspace::span(dim, s.basis()).unwrap();
        prop_assert_eq!(&s, &again);
        // every generator lies in the span
        for v in &vectors {
            prop_assert!(s.contains(v));
        }
        // pivots strictly increasing with unit leading entries
        for (row, &p) in s.basis().iter().zip(s.pivots()) {
            prop_assert!(row[p].is_one());
            for entry in &row[..p] {
                prop_assert!(entry.is_zero());
            }
        }
    }

    #[test]
    fn dimension_formula_for_sum_and_intersection(
        vs in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 4), 1..=3),
        ws in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 4), 1..=3),
    ) {
        let to_vecs = |rows: &Vec<Vec<i64>>| -> Vec<Vec<Scalar>> {
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect()
        };
        let v = Subspace::span(4, &to_vecs(&vs)).unwrap();
        let w = Subspace::span(4, &to_vecs(&ws)).unwrap();
        let sum = v.sum(&w).unwrap();
        let meet = v.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), v.dim() + w.dim());
        prop_assert!(v.contains_subspace(&meet));
        prop_assert!(w.contains_subspace(&meet));
        prop_assert!(sum.contains_subspace(&v));
    }

    #[test]
    fn solve_is_exact(
        a in matrix_strategy(3, 3),
        x in vec_strategy(3),
    ) {
        // a consistent system: b = A x
        let b = a.mul_vec(&x).unwrap();
        let sol = a.solve(&b).unwrap().expect("consistent by construction");
        prop_assert_eq!(a.mul_vec(&sol).unwrap(), b);
    }

    #[test]
    fn quotient_map_contracts(
        rows in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 4), 0..=3),
    ) {
        let vectors: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
            .collect();
        let s = Subspace::span(4, &vectors).unwrap();
        let (p, sec) = quotient_map(4, &s).unwrap();
        let m = 4 - s.dim();
        prop_assert_eq!(p.rows(), m);
        prop_assert_eq!(p.mul(&sec), Matrix::identity(m));
        let ker = Subspace::span(4, &p.kernel()).unwrap();
        prop_assert_eq!(ker, s);
    }

    #[test]
    fn symplectic_adjoint_is_an_involution(f in matrix_strategy(4, 4)) {
        let omega = BilinearForm::from_terms(
            4,
            &[(0, 2, Scalar::one()), (1, 3, Scalar::one())],
        )
        .unwrap();
        let fs = symplectic_adjoint(&omega, &f).unwrap();
        let fss = symplectic_adjoint(&omega, &fs).unwrap();
        prop_assert_eq!(fss, f.clone());
        // defining identity on all basis pairs
        for i in 0..4 {
            for j in 0..4 {
                let x = unit_vec(4, i);
                let y = unit_vec(4, j);
                let lhs = omega.eval(&f.mul_vec(&x).unwrap(), &y).unwrap();
                let rhs = omega.eval(&x, &fs.mul_vec(&y).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn orthogonal_dimension_formula(
        rows in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 4), 0..=4),
    ) {
        let omega = BilinearForm::from_terms(
            4,
            &[(0, 2, Scalar::one()), (1, 3, Scalar::one())],
        )
        .unwrap();
        let vectors: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
            .collect();
        let s = Subspace::span(4, &vectors).unwrap();
        let perp = omega.orthogonal(&s).unwrap();
        prop_assert_eq!(s.dim() + perp.dim(), 4);
    }

    #[test]
    fn char_poly_vanishes_on_rational_eigenvalues(a in matrix_strategy(3, 3)) {
        let coeffs = a.char_poly();
        prop_assert!(coeffs[3].is_one());
        for mu in a.rational_eigenvalues() {
            // det(mu I - A) = 0 exactly
            let shifted = Matrix::identity(3).scale(&mu).sub(&a);
            prop_assert!(shifted.det().is_zero());
        }
    }
}

#[test]
fn series_stabilize_within_bounds() {
    for entry in snla_core::catalog::snla_instances() {
        let alg = entry.algebra().unwrap();
        let lcs = alg.lower_central_series();
        assert!(lcs.len() <= alg.dim() + 1, "{}", entry.name);
        let ds = alg.derived_series();
        let bound = (usize::BITS - alg.dim().leading_zeros()) as usize + 1;
        assert!(ds.len() <= bound + 1, "{}", entry.name);
    }
}

#[test]
fn pairing_identity_for_left_powers() {
    // w(L_x^k y, z) = (-1)^k w(y, ad_x^k z) on every catalog pair
    for entry in snla_core::catalog::snla_instances() {
        let alg = entry.algebra().unwrap();
        let omega = entry.omega.clone().unwrap();
        let product = snla_core::symplectic::associated_product(&alg, &omega).unwrap();
        let n = alg.dim();
        for i in 0..n {
            let lx = product.left_mult_basis(i);
            let adx = alg.ad_basis(i);
            for k in 1..=3usize {
                let lk = lx.pow(k);
                let ak = adx.pow(k);
                let sign = if k % 2 == 0 { Scalar::one() } else { -Scalar::one() };
                for y in 0..n {
                    for z in 0..n {
                        let lhs = omega
                            .eval(&lk.mul_vec(&unit_vec(n, y)).unwrap(), &unit_vec(n, z))
                            .unwrap();
                        let rhs = omega
                            .eval(&unit_vec(n, y), &ak.mul_vec(&unit_vec(n, z)).unwrap())
                            .unwrap();
                        assert_eq!(lhs, &sign * &rhs, "{} i={i} k={k}", entry.name);
                    }
                }
            }
        }
    }
}

#[test]
fn novikov_associative_operator_identities() {
    // For the associated product of every catalog pair: R_[x,y] = 0 and
    // ad_[x,y] = L_[x,y] = [L_x, L_y] on basis pairs.
    for entry in snla_core::catalog::snla_instances() {
        let alg = entry.algebra().unwrap();
        let omega = entry.omega.clone().unwrap();
        let product = snla_core::symplectic::associated_product(&alg, &omega).unwrap();
        let n = alg.dim();
        for i in 0..n {
            for j in 0..n {
                let br = alg.bracket_basis(i, j);
                assert!(product.right_mult(br).unwrap().is_zero(), "{}", entry.name);
                let l_br = product.left_mult(br).unwrap();
                assert_eq!(alg.ad(br).unwrap(), l_br, "{}", entry.name);
                let li = product.left_mult_basis(i);
                let lj = product.left_mult_basis(j);
                assert_eq!(li.commutator(&lj), l_br, "{}", entry.name);
            }
        }
    }
}

#[test]
fn ideal_line_reductions_preserve_the_novikov_property() {
    for entry in snla_core::catalog::snla_instances() {
        let alg = entry.algebra().unwrap();
        let omega = entry.omega.clone().unwrap();
        for line in alg.ideal_lines() {
            let s = Subspace::span(alg.dim(), &[line]).unwrap();
            let red = snla_core::constructions::reduce(&alg, &omega, &s).unwrap();
            let report =
                snla_core::symplectic::snla_report(&red.algebra, &red.omega).unwrap();
            assert!(report.is_snla, "{}", entry.name);
        }
    }
}

#[test]
fn complete_reducibility_of_the_catalog() {
    for entry in snla_core::catalog::snla_instances() {
        let mut alg = entry.algebra().unwrap();
        let mut omega = entry.omega.clone().unwrap();
        let mut steps = 0;
        while alg.dim() > 0 {
            let red = snla_core::constructions::reduction_step(&alg, &omega)
                .unwrap()
                .expect("dimension is positive");
            assert!(red.algebra.dim() < alg.dim(), "{}", entry.name);
            assert!(
                snla_core::symplectic::snla_report(&red.algebra, &red.omega)
                    .unwrap()
                    .is_snla,
                "{}",
                entry.name
            );
            alg = red.algebra;
            omega = red.omega;
            steps += 1;
            assert!(steps <= entry.dim / 2, "{}", entry.name);
        }
    }
}

#[test]
fn every_catalog_snla_admits_an_isotropic_ideal() {
    for entry in snla_core::catalog::snla_instances() {
        let alg = entry.algebra().unwrap();
        let omega = entry.omega.clone().unwrap();
        let d = alg.derived_subalgebra();
        if d.is_zero() {
            // abelian: any line is an isotropic ideal
            assert!(alg.dim() == 0 || !alg.ideal_lines().is_empty());
        } else {
            // the derived ideal is isotropic (structure theory)
            assert!(omega.vanishes_on(&d), "{}", entry.name);
        }
    }
}

#[test]
fn jacobi_cross_check_on_random_brackets() {
    // brute-force oracle for check_jacobi: evaluate the cyclic sum over all
    // triples directly from bracket evaluation on sampled vectors
    let alg = LieAlgebra::new(
        4,
        None,
        &[
            (0, 1, vec![(2, Scalar::from_int(1))]),
            (0, 3, vec![(0, Scalar::from_int(-1))]),
            (2, 3, vec![(2, Scalar::from_int(-1))]),
        ],
    )
    .unwrap();
    assert!(alg.check_jacobi().ok);
    let vs = [
        vec![
            Scalar::from_int(1),
            Scalar::from_int(-2),
            Scalar::ratio(1, 2),
            Scalar::from_int(0),
        ],
        vec![
            Scalar::from_int(3),
            Scalar::from_int(1),
            Scalar::from_int(0),
            Scalar::ratio(-2, 3),
        ],
        vec![
            Scalar::from_int(0),
            Scalar::ratio(5, 7),
            Scalar::from_int(2),
            Scalar::from_int(1),
        ],
    ];
    let j1 = alg
        .bracket(&alg.bracket(&vs[0], &vs[1]).unwrap(), &vs[2])
        .unwrap();
    let j2 = alg
        .bracket(&alg.bracket(&vs[1], &vs[2]).unwrap(), &vs[0])
        .unwrap();
    let j3 = alg
        .bracket(&alg.bracket(&vs[2], &vs[0]).unwrap(), &vs[1])
        .unwrap();
    let total: Vec<Scalar> = j1
        .iter()
        .zip(&j2)
        .zip(&j3)
        .map(|((a, b), c)| a + b + c)
        .collect();
    assert!(vec_is_zero(&total));
}

#[test]
fn square_condition_decides_the_cotangent_over_a_derivation_family() {
    // Derivations of R[t]/(t^3) are f(t) d/dt with f in (t); parametrize
    // D = (a t + b t^2) d/dt and check that the cotangent of x * y = x.D(y)
    // is symplectic Novikov exactly when x.y.D^2(z) vanishes (here: a = 0).
    let poly3 = snla_core::lsa::ProductTable::new(
        3,
        &[
            (0, 0, vec![(0, Scalar::one())]),
            (0, 1, vec![(1, Scalar::one())]),
            (1, 0, vec![(1, Scalar::one())]),
            (0, 2, vec![(2, Scalar::one())]),
            (2, 0, vec![(2, Scalar::one())]),
            (1, 1, vec![(2, Scalar::one())]),
        ],
    )
    .unwrap();
    for a in [-2i64, 0, 1, 3] {
        for b in [-1i64, 0, 2] {
            // D(1) = 0, D(t) = a t + b t^2, D(t^2) = 2a t^2
            let mut d = Matrix::zeros(3, 3);
            d.set(1, 1, Scalar::from_int(a));
            d.set(2, 1, Scalar::from_int(b));
            d.set(2, 2, Scalar::from_int(2 * a));
            assert!(snla_core::lsa::is_derivation_product(&poly3, &d).unwrap());
            let square =
                snla_core::constructions::check_square_condition(&poly3, &d).unwrap();
            assert_eq!(square, a == 0, "a={a} b={b}");
            let star = snla_core::constructions::derivation_product(&poly3, &d).unwrap();
            let cot = snla_core::constructions::cotangent(&star).unwrap();
            let report =
                snla_core::symplectic::snla_report(&cot.algebra, &cot.omega).unwrap();
            assert_eq!(report.is_snla, square, "a={a} b={b}");
        }
    }
}

#[test]
fn symplectize_refuses_torsion() {
    // a connection with nonzero torsion on the abelian plane
    let alg = LieAlgebra::abelian(2);
    let omega = BilinearForm::from_terms(2, &[(0, 1, Scalar::one())]).unwrap();
    let mut gamma = vec![vec![vec![Scalar::zero(); 2]; 2]; 2];
    gamma[0][1] = vec![Scalar::one(), Scalar::zero()]; // nabla_1 e2 = e1, nabla_2 e1 = 0
    let conn = snla_core::geometry::Connection::from_table(gamma);
    assert!(!conn.is_torsion_free(&alg).unwrap());
    assert!(snla_core::geometry::symplectize(&conn, &alg, &omega).is_err());
}

#[test]
fn ricci_trace_cross_check_on_matching_forms() {
    // where the stored form is a signed perfect matching of coordinates,
    // the Ricci trace recomputed through the symplectic pairing agrees with
    // the coordinate-basis trace
    let mut checked = 0;
    for entry in snla_core::catalog::snla_instances() {
        let alg = entry.algebra().unwrap();
        let omega = entry.omega.clone().unwrap();
        let conn = snla_core::geometry::symplectic_connection(&alg, &omega).unwrap();
        let ric = snla_core::geometry::ricci(&conn, &alg).unwrap();
        if let Some(cross) =
            snla_core::geometry::ricci_symplectic_basis(&conn, &alg, &omega).unwrap()
        {
            assert_eq!(cross.matrix(), ric.matrix(), "{}", entry.name);
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn symplectic_scaling_invariance() {
    // is_symplectic is stable under nonzero scaling of the form
    let entry = snla_core::catalog::build_default("rh3").unwrap();
    let alg = entry.algebra().unwrap();
    let omega = entry.omega.clone().unwrap();
    let scaled = BilinearForm::new(omega.matrix().scale(&Scalar::ratio(-5, 3))).unwrap();
    assert!(is_symplectic(&alg, &scaled).unwrap().all());
}
