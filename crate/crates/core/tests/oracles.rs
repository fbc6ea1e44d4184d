//! Cross-checks of the fast paths against slow, independent constructions.

use doodle_core::invariant::{f_invariant, p_poly, reduced_determinant};
use doodle_core::poly::IntPoly;
use doodle_core::rep::{determinant, psi, PolyMatrix};
use doodle_core::TwinWord;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn cofactor<T: Clone + Zero + One + std::ops::Sub<Output = T>, M: Fn(usize, usize) -> T>(
    rows: &[usize],
    cols: &[usize],
    at: &M,
) -> T
where
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    if rows.is_empty() {
        return T::one();
    }
    let r = rows[0];
    let mut acc = T::zero();
    for (k, &c) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols.iter().copied().filter(|&j| j != c).collect();
        let term = &at(r, c) * &cofactor(&rows[1..], &rest, at);
        acc = if k % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

fn cofactor_det(m: &PolyMatrix) -> IntPoly {
    let idx: Vec<usize> = (0..m.dim()).collect();
    cofactor(&idx, &idx, &|r, c| m.get(r, c).clone())
}

/// `V_i` on `n` strands from its defining column `(x, -1, x)`, built as a dense table.
fn naive_generator(n: usize, i: usize) -> Vec<Vec<IntPoly>> {
    let d = n - 1;
    let mut m: Vec<Vec<IntPoly>> = (0..d)
        .map(|r| {
            (0..d)
                .map(|c| {
                    if r == c {
                        IntPoly::one()
                    } else {
                        IntPoly::zero()
                    }
                })
                .collect()
        })
        .collect();
    let c = i - 1;
    m[c][c] = IntPoly::constant(-1);
    if c > 0 {
        m[c - 1][c] = IntPoly::x();
    }
    if c + 1 < d {
        m[c + 1][c] = IntPoly::x();
    }
    m
}

fn naive_product(a: &[Vec<IntPoly>], b: &[Vec<IntPoly>]) -> Vec<Vec<IntPoly>> {
    let d = a.len();
    (0..d)
        .map(|r| {
            (0..d)
                .map(|c| (0..d).map(|k| &a[r][k] * &b[k][c]).sum())
                .collect()
        })
        .collect()
}

fn arb_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-9i64..10, 0..4).prop_map(|c| IntPoly::from_i64s(&c))
}

fn arb_matrix() -> impl Strategy<Value = PolyMatrix> {
    (0usize..=5).prop_flat_map(|d| {
        prop::collection::vec(prop::collection::vec(arb_poly(), d), d)
            .prop_map(|rows| PolyMatrix::from_rows(rows).unwrap())
    })
}

fn arb_word(max_strands: usize, max_len: usize) -> impl Strategy<Value = TwinWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        prop::collection::vec(1..n, 0..=max_len).prop_map(move |l| TwinWord::new(l, n).unwrap())
    })
}

proptest! {
    #[test]
    fn bareiss_matches_cofactor_expansion(m in arb_matrix()) {
        prop_assert_eq!(determinant(&m), cofactor_det(&m));
    }

    #[test]
    fn psi_matches_dense_products(word in arb_word(7, 10)) {
        let n = word.strands();
        let mut acc = naive_generator(n, 1);
        acc = naive_product(&acc, &acc);
        for &l in word.letters() {
            acc = naive_product(&acc, &naive_generator(n, l));
        }
        prop_assert_eq!(psi(&word).unwrap().rows(), acc);
    }

    #[test]
    fn f_agrees_with_integer_determinants(word in arb_word(6, 12), a in -4i64..=4) {
        let m = psi(&word).unwrap().minus_identity();
        let at = BigInt::from(a);
        let values = m.eval_at(&at);
        let idx: Vec<usize> = (0..m.dim()).collect();
        let det_at: BigInt = cofactor(&idx, &idx, &|r, c| values[r][c].clone());
        prop_assert_eq!(reduced_determinant(&word).unwrap().eval(&at), det_at.clone());
        let f = f_invariant(&word).unwrap().raw;
        prop_assert_eq!(f.eval(&at) * p_poly(word.strands() - 1).eval(&at), det_at);
    }
}

#[test]
fn coxeter_elements_have_unit_invariant_to_ten_strands() {
    for n in 2..=10 {
        let w = TwinWord::coxeter_element(n).unwrap();
        assert_eq!(
            reduced_determinant(&w).unwrap(),
            cofactor_det(&psi(&w).unwrap().minus_identity())
        );
        assert_eq!(f_invariant(&w).unwrap().raw, IntPoly::one());
    }
}
