//! Acceptance suite: the headline computations of the crate, end to end.
//! Each test prints one pass line; run with `--nocapture` to see them:
//!
//! ```text
//! cargo test --test acceptance -- --nocapture
//! ```

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use schubert_core::fq_oracle::{
    cell_partition, empirical_intersection, empirical_og_intersection_trials,
    enumerate_grassmannian, grassmannian_size, isotropic_cell_points, plucker_int, trial_rng,
    FlagFq, FqMatrix,
};
use schubert_core::partitions::{AmbientRectangle, Partition, ShiftedPartition};
use schubert_core::permutations::Permutation;
use schubert_core::poly::IntPolynomial;
use schubert_core::schubert_polys::{
    divided_difference, monk_expand, reduce_coinvariant, schubert_polynomial, staircase_basis,
};
use schubert_core::schur_ring::{
    duality_pairing, intersection_count, schur_product, schur_to_monomials,
};
use schubert_core::shifted::{
    f_coefficient, og_intersection_count, p_product_expansion, schur_pq_to_monomials,
    stembridge_f_coefficient, PqVariant, ShiftedSkewShape, StembridgeReading,
};
use schubert_core::tableaux::{enumerate_lr_chain_witnesses, enumerate_syt, Tableau};
use schubert_core::SkewShape;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn sp(s: &str) -> ShiftedPartition {
    s.parse().unwrap()
}

fn pass(number: u32, name: &str) {
    println!("acceptance {number:02} ({name}): PASS");
}

/// Renders a chain of single-box LR tableaux as the grid of step indices
/// filling the rectangle.
fn chain_step_grid(chain: &[Tableau], rect: &AmbientRectangle) -> Vec<Vec<usize>> {
    let mut grid = vec![vec![0usize; rect.cols]; rect.rows];
    let mut previous = Partition::empty();
    for (step, t) in chain.iter().enumerate() {
        let outer = t.shape().outer();
        for r in 1..=outer.length() {
            for c in previous.part(r) + 1..=outer.part(r) {
                grid[r - 1][c - 1] = step + 1;
            }
        }
        previous = outer.clone();
    }
    grid
}

#[test]
fn acceptance_01_four_lines_meet_two_lines() {
    let rect = AmbientRectangle::new(2, 2);
    let ones = vec![p("1"); 4];
    let count = intersection_count(&rect, &ones).unwrap();
    assert_eq!(count, BigUint::from(2u8));
    // The two witnesses are the chains whose step labels form the two
    // standard fillings of the square.
    let chains = enumerate_lr_chain_witnesses(&ones, &p("2,2"), 100).unwrap();
    assert_eq!(chains.len(), 2);
    let grids: Vec<Vec<Vec<usize>>> = chains
        .iter()
        .map(|c| chain_step_grid(c, &rect))
        .collect();
    assert_eq!(
        grids,
        vec![
            vec![vec![1, 3], vec![2, 4]],
            vec![vec![1, 2], vec![3, 4]],
        ]
    );
    pass(1, "four lines meet exactly two lines, with both witnesses");
}

#[test]
fn acceptance_02_five_chains_fill_the_3x4_rectangle() {
    let rect = AmbientRectangle::new(3, 4);
    let factors = vec![p("2,1"), p("2,1"), p("3,1"), p("2")];
    assert_eq!(
        intersection_count(&rect, &factors).unwrap(),
        BigUint::from(5u8)
    );
    let chains = enumerate_lr_chain_witnesses(&factors, &p("4,4,4"), 100).unwrap();
    assert_eq!(chains.len(), 5);
    // Canonical order: strictly sorted, no duplicates, and each chain is a
    // valid sequence of LR tableaux with the requested contents.
    let keys: Vec<String> = chains
        .iter()
        .map(|chain| {
            chain
                .iter()
                .map(|t| format!("{}|{:?}", t.shape(), t.rows()))
                .collect::<Vec<_>>()
                .join(";")
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(keys.len(), sorted.len());
    for chain in &chains {
        let mut union = Partition::empty();
        for (t, content) in chain.iter().zip(factors.iter()) {
            assert_eq!(t.shape().inner(), &union);
            assert!(t.is_semistandard());
            assert!(schubert_core::tableaux::is_yamanouchi(&t.reading_word()));
            let observed = t.content();
            assert!((1..=content.length()).all(|i| observed[i - 1] == content.part(i)));
            union = t.shape().outer().clone();
        }
        assert_eq!(union, p("4,4,4"));
    }
    pass(2, "five chains fill the 3x4 rectangle, listed canonically");
}

#[test]
fn acceptance_03_hook_formula_matches_enumeration_up_to_size_8() {
    let mut shapes = 0usize;
    for size in 1..=8usize {
        for lambda in Partition::all_of_size(size) {
            assert_eq!(
                BigUint::from(enumerate_syt(&lambda).len()),
                lambda.count_syt_hook_formula(),
                "shape {lambda}"
            );
            shapes += 1;
        }
    }
    assert!(shapes >= 66);
    pass(3, "hook length formula equals direct enumeration through size 8");
}

#[test]
fn acceptance_04_plucker_golden_coordinates() {
    let rows = vec![vec![0i64, 0, 1, 2], vec![1, -3, 0, 3]];
    let coords = plucker_int(&rows).unwrap();
    let expected: Vec<BigInt> = [0i64, -1, -2, 3, 6, 3]
        .iter()
        .map(|&v| BigInt::from(v))
        .collect();
    assert_eq!(coords, expected);
    // x_{24} sits fifth in the subset order 12 < 13 < 14 < 23 < 24 < 34.
    assert_eq!(coords[4], BigInt::from(6));
    pass(4, "Plucker coordinates (0,-1,-2,3,6,3) with x24 = 6");
}

#[test]
fn acceptance_05_duality_exhaustive_and_over_f3() {
    // Combinatorial side: pairing is 1 exactly at complementary partners.
    for rows in 1..=3usize {
        for cols in 1..=3usize {
            let rect = AmbientRectangle::new(rows, cols);
            for lambda in Partition::all_in_rectangle(&rect) {
                for mu in Partition::all_in_rectangle(&rect) {
                    if lambda.size() + mu.size() != rect.area() {
                        continue;
                    }
                    let expected = u8::from(lambda.complement(&rect).unwrap() == mu);
                    assert_eq!(
                        duality_pairing(&lambda, &mu, &rect).unwrap(),
                        expected,
                        "{lambda} vs {mu} in {rect}"
                    );
                }
            }
        }
    }
    // Geometric side over F_3: with the standard and opposite flags the
    // exhaustive subspace search finds exactly that many solutions. The
    // joint cell histogram answers all pairs in one sweep.
    let q = 3u64;
    for rows in 1..=3usize {
        for cols in 1..=3usize {
            let rect = AmbientRectangle::new(rows, cols);
            let (k, n) = (rows, rows + cols);
            let mut joint: std::collections::BTreeMap<(Partition, Partition), u64> =
                std::collections::BTreeMap::new();
            for v in enumerate_grassmannian(q, n, k, 10_000_000).unwrap() {
                let sigma = cell_partition(&v, k, n).unwrap();
                let (w, wrank) = v.reverse_cols().rref();
                assert_eq!(wrank, k);
                let tau = cell_partition(&w, k, n).unwrap();
                *joint.entry((sigma, tau)).or_insert(0) += 1;
            }
            for lambda in Partition::all_in_rectangle(&rect) {
                for mu in Partition::all_in_rectangle(&rect) {
                    if lambda.size() + mu.size() != rect.area() {
                        continue;
                    }
                    let found: u64 = joint
                        .iter()
                        .filter(|((s, t), _)| s.contains(&lambda) && t.contains(&mu))
                        .map(|(_, c)| c)
                        .sum();
                    let expected = duality_pairing(&lambda, &mu, &rect).unwrap() as u64;
                    assert_eq!(found, expected, "F_3 search at {lambda}, {mu} in {rect}");
                }
            }
        }
    }
    pass(5, "duality pairing, exhaustively and by subspace search over F_3");
}

#[test]
fn acceptance_06_schur_products_equal_monomial_products() {
    let mut products = 0usize;
    for a in 0..=4usize {
        for b in 0..=4usize {
            for lambda in Partition::all_of_size(a) {
                for mu in Partition::all_of_size(b) {
                    let m = (a + b).max(1);
                    let lhs = schur_product(&[lambda.clone(), mu.clone()]).to_monomials(m);
                    let rhs = schur_to_monomials(&SkewShape::straight(lambda.clone()), m)
                        .mul(&schur_to_monomials(&SkewShape::straight(mu.clone()), m));
                    assert_eq!(lhs, rhs, "{lambda} * {mu}");
                    products += 1;
                }
            }
        }
    }
    assert_eq!(products, 144);
    pass(6, "Littlewood-Richardson products match the monomial oracle (144 products)");
}

#[test]
fn acceptance_07_monk_identities_on_s4() {
    let mut identities = 0usize;
    for w in Permutation::all(4) {
        for i in 1..=3usize {
            let lhs = schubert_polynomial(&Permutation::adjacent_transposition(i, i + 1))
                .mul(&schubert_polynomial(&w));
            let mut rhs = IntPolynomial::zero();
            for v in monk_expand(i, &w) {
                rhs = rhs.add(&schubert_polynomial(&v));
            }
            assert_eq!(lhs, rhs, "Monk identity at w = {w}, i = {i}");
            identities += 1;
        }
    }
    assert_eq!(identities, 72);
    pass(7, "all 72 Monk identities hold as exact polynomials");
}

#[test]
fn acceptance_08_divided_difference_algebra_on_random_polynomials() {
    use rand::Rng;
    let mut rng = trial_rng(20_240_815, 0);
    let random_poly = |rng: &mut rand_chacha::ChaCha12Rng| {
        let mut poly = IntPolynomial::zero();
        let terms = rng.gen_range(1..=5);
        for _ in 0..terms {
            let mut exps = vec![0u32; 5];
            let mut degree_left = 6u32;
            for e in exps.iter_mut() {
                let take = rng.gen_range(0..=degree_left);
                *e = take;
                degree_left -= take;
            }
            poly.add_term(exps, BigInt::from(rng.gen_range(-9i64..=9)));
        }
        poly
    };
    let mut checked = 0usize;
    for round in 0..250 {
        let pq = (random_poly(&mut rng), random_poly(&mut rng));
        let i = round % 4 + 1;
        // Nilpotence.
        assert!(divided_difference(i, &divided_difference(i, &pq.0)).is_zero());
        checked += 1;
        // Commutation for far-apart indices.
        let far = i + 2;
        assert_eq!(
            divided_difference(i, &divided_difference(far, &pq.0)),
            divided_difference(far, &divided_difference(i, &pq.0))
        );
        checked += 1;
        // Braid.
        let braid_left = divided_difference(
            i,
            &divided_difference(i + 1, &divided_difference(i, &pq.0)),
        );
        let braid_right = divided_difference(
            i + 1,
            &divided_difference(i, &divided_difference(i + 1, &pq.0)),
        );
        assert_eq!(braid_left, braid_right);
        checked += 1;
        // Leibniz.
        let lhs = divided_difference(i, &pq.0.mul(&pq.1));
        let rhs = divided_difference(i, &pq.0)
            .mul(&pq.1)
            .add(&pq.0.swap_variables(i).mul(&divided_difference(i, &pq.1)));
        assert_eq!(lhs, rhs);
        checked += 1;
    }
    assert!(checked >= 1000);
    pass(8, "commutation, braid, nilpotence, Leibniz on 1000 random polynomials");
}

/// Fraction-free determinant (Bareiss) over the integers.
fn bigint_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            let Some(src) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, src);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

#[test]
fn acceptance_09_schubert_basis_sanity() {
    // The six S_3 polynomials.
    let x1 = IntPolynomial::var(1);
    let x2 = IntPolynomial::var(2);
    let expect: Vec<(&str, IntPolynomial)> = vec![
        ("123", IntPolynomial::one()),
        ("213", x1.clone()),
        ("132", x1.add(&x2)),
        ("231", x1.mul(&x2)),
        ("312", x1.mul(&x1)),
        ("321", x1.mul(&x1).mul(&x2)),
    ];
    for (w, poly) in expect {
        assert_eq!(schubert_polynomial(&w.parse().unwrap()), poly, "class of {w}");
    }
    // The 24 reduced classes for S_4 are linearly independent over the
    // integers: the change-of-basis determinant against the staircase
    // monomials is nonzero (in fact a unit).
    let basis = staircase_basis(4);
    assert_eq!(basis.len(), 24);
    let matrix: Vec<Vec<BigInt>> = Permutation::all(4)
        .into_iter()
        .map(|w| {
            let reduced = reduce_coinvariant(&schubert_polynomial(&w), 4).unwrap();
            basis.iter().map(|exps| reduced.coefficient(exps)).collect()
        })
        .collect();
    let det = bigint_det(matrix);
    assert!(!det.is_zero());
    assert_eq!(det.magnitude(), &BigUint::one(), "the classes form a unimodular basis");
    pass(9, "S3 Schubert polynomials and independence of the 24 reduced S4 classes");
}

#[test]
fn acceptance_10_shifted_pq_identities_and_stembridge_agreement() {
    let m = 4usize;
    // Q = 2^length P for every shifted shape of size at most 6.
    for size in 1..=6usize {
        for lambda in ShiftedPartition::all_of_size(size) {
            let shape = ShiftedSkewShape::straight(lambda.clone());
            let p_poly = schur_pq_to_monomials(&shape, PqVariant::P, m);
            let q_poly = schur_pq_to_monomials(&shape, PqVariant::Q, m);
            assert_eq!(
                q_poly,
                p_poly.scale(&BigInt::from(1i64 << lambda.length())),
                "Q vs P at {lambda}"
            );
        }
    }
    // The Q-product two-power bookkeeping, and Stembridge agreement with
    // the elimination oracle, over all pairs of total size at most 6.
    for total in 2..=6usize {
        for a in 1..total {
            for mu in ShiftedPartition::all_of_size(a) {
                for nu in ShiftedPartition::all_of_size(total - a) {
                    let expansion = p_product_expansion(&[mu.clone(), nu.clone()], m.max(total));
                    let vars = m.max(total);
                    let q_lhs =
                        schur_pq_to_monomials(&ShiftedSkewShape::straight(mu.clone()), PqVariant::Q, vars)
                            .mul(&schur_pq_to_monomials(
                                &ShiftedSkewShape::straight(nu.clone()),
                                PqVariant::Q,
                                vars,
                            ));
                    let mut q_rhs = IntPolynomial::zero();
                    for (lambda, f) in &expansion {
                        let power = mu.length() + nu.length() - lambda.length();
                        let scale = BigInt::from_biguint(num_bigint::Sign::Plus, f.clone())
                            * BigInt::from(1i64 << power);
                        q_rhs = q_rhs.add(
                            &schur_pq_to_monomials(
                                &ShiftedSkewShape::straight(lambda.clone()),
                                PqVariant::Q,
                                vars,
                            )
                            .scale(&scale),
                        );
                    }
                    assert_eq!(q_lhs, q_rhs, "Q_{mu} Q_{nu} two-power expansion");
                    for lambda in ShiftedPartition::all_of_size(total) {
                        assert_eq!(
                            stembridge_f_coefficient(
                                &mu,
                                &nu,
                                &lambda,
                                StembridgeReading::PrimeShifted
                            ),
                            f_coefficient(&[mu.clone(), nu.clone()], &lambda),
                            "f^{lambda}_{{{mu},{nu}}}"
                        );
                    }
                }
            }
        }
    }
    pass(10, "Q = 2^l P, Q-product two-power rule, Stembridge matches elimination");
}

#[test]
fn acceptance_11_og_count_matches_finite_field_mode() {
    let six = vec![sp("1"); 6];
    let combinatorial = og_intersection_count(3, &six).unwrap();
    let report = empirical_og_intersection_trials(5, 3, &six, 20, 2024, 10_000_000).unwrap();
    assert_eq!(report.trials, 20);
    assert_eq!(
        report.modal().map(BigUint::from),
        Some(combinatorial.clone()),
        "distribution: {report}"
    );
    pass(
        11,
        "isotropic 3-planes meeting six 3-planes: tableau count equals field mode",
    );
}

#[test]
fn acceptance_12_grassmannian_census() {
    // |Gr(4,2)| over F_2, both by streaming and by the cell-sum formula.
    assert_eq!(grassmannian_size(2, 4, 2).unwrap(), BigUint::from(35u8));
    assert_eq!(enumerate_grassmannian(2, 4, 2, 10_000).unwrap().count(), 35);
    // |Gr(5,2)| over F_3 equals the cell sum over the 2x3 rectangle.
    let rect = AmbientRectangle::new(2, 3);
    let mut formula = BigUint::zero();
    for lambda in Partition::all_in_rectangle(&rect) {
        formula += BigUint::from(3u8).pow((6 - lambda.size()) as u32);
    }
    assert_eq!(grassmannian_size(3, 5, 2).unwrap(), formula);
    assert_eq!(
        BigUint::from(enumerate_grassmannian(3, 5, 2, 10_000).unwrap().count()),
        formula
    );
    pass(12, "subspace censuses: |Gr(4,2,F2)| = 35 and the Gr(5,2,F3) cell sum");
}

#[test]
fn acceptance_13_isotropic_cell_has_q_to_the_six_points() {
    // The doubled partition (4,3,1) in Gr(9,4): six of the twelve cell
    // parameters survive the isotropy eliminations.
    let points = isotropic_cell_points(3, 4, &sp("3,1")).unwrap();
    assert_eq!(points.len(), 3usize.pow(6));
    for v in &points {
        assert!(schubert_core::fq_oracle::is_isotropic(v, 4).unwrap());
        assert_eq!(cell_partition(v, 4, 9).unwrap(), p("4,3,1"));
    }
    pass(13, "the (4,3,1) isotropic cell over F_3 has exactly 3^6 points");
}

#[test]
fn acceptance_smoke_fixed_flag_counts() {
    // Bonus fixed-flag identities used by the suites above, re-checked
    // through the public entry points.
    let q = 3u64;
    let f = FlagFq::standard(q, 4).unwrap();
    let e = FlagFq::opposite(q, 4).unwrap();
    assert_eq!(
        empirical_intersection(q, 4, 2, &[f, e], &[p("2,1"), p("1")], 10_000).unwrap(),
        1
    );
    let identity_cell: Vec<FqMatrix> = enumerate_grassmannian(q, 4, 2, 10_000)
        .unwrap()
        .filter(|v| cell_partition(v, 2, 4).unwrap() == p("2,2"))
        .collect();
    assert_eq!(identity_cell.len(), 1);
}
