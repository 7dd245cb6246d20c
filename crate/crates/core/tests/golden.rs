//! Worked examples: the explicit m = 1 and m = 2 elements and the m = 3
//! coefficient matrix with its diagonal blocks.

use num_traits::Zero;
use quasi3_core::arith::rat;
use quasi3_core::linsys::{
    block_closed_form, build_system, det_integer, extract_blocks, is_block_upper_triangular, nullspace, restrict_bm,
    BlockKind,
};
use quasi3_core::{build_a1, build_a2, ExactInteger, ExactRational, Matrix, Monomial, Polynomial};

fn poly(terms: &[(u32, u32, u32, i64, i64)]) -> Polynomial {
    Polynomial::from_terms(terms.iter().map(|&(a, b, c, n, d)| (Monomial::new(a, b, c), rat(n, d))))
}

fn imat(rows: &[&[i64]]) -> Matrix<ExactInteger> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| ExactInteger::from(v)).collect()).collect())
}

#[test]
fn a1_a2_for_m1() {
    // x1^4 - 2x1^3(x2+x3) + 6x1^2(x2x3)
    let a1 = poly(&[(4, 0, 0, 1, 1), (3, 1, 0, -2, 1), (3, 0, 1, -2, 1), (2, 1, 1, 6, 1)]);
    // x1^5 - 5/3 x1^4(x2+x3) + 10/3 x1^3(x2x3)
    let a2 = poly(&[(5, 0, 0, 1, 1), (4, 1, 0, -5, 3), (4, 0, 1, -5, 3), (3, 1, 1, 10, 3)]);
    assert_eq!(build_a1(1).unwrap(), a1);
    assert_eq!(build_a2(1).unwrap(), a2);
}

#[test]
fn a1_a2_for_m2() {
    let a1 = poly(&[
        (7, 0, 0, 1, 1),
        (6, 1, 0, -7, 2),
        (6, 0, 1, -7, 2),
        (5, 1, 1, 14, 1),
        (5, 2, 0, 7, 2),
        (5, 0, 2, 7, 2),
        (4, 2, 1, -35, 2),
        (4, 1, 2, -35, 2),
        (3, 2, 2, 35, 1),
    ]);
    let a2 = poly(&[
        (8, 0, 0, 1, 1),
        (7, 1, 0, -16, 5),
        (7, 0, 1, -16, 5),
        (6, 1, 1, 56, 5),
        (6, 2, 0, 14, 5),
        (6, 0, 2, 14, 5),
        (5, 2, 1, -56, 5),
        (5, 1, 2, -56, 5),
        (4, 2, 2, 14, 1),
    ]);
    assert_eq!(build_a1(2).unwrap(), a1);
    assert_eq!(build_a2(2).unwrap(), a2);
}

#[test]
fn m2_null_vectors() {
    let v = nullspace(&build_system(2, 8).unwrap()).vectors;
    let expect: Vec<ExactRational> =
        [(1, 1), (-16, 5), (56, 5), (14, 5), (-56, 5), (14, 1)].iter().map(|&(n, d)| rat(n, d)).collect();
    assert_eq!(v, vec![expect]);
}

fn m3_matrix() -> Matrix<ExactInteger> {
    imat(&[
        &[252, 378, 126, 308, 182, 56, 273, 147, 75],
        &[0, 126, 56, 252, 133, 42, 378, 174, 75],
        &[0, 84, 56, 168, 147, 68, 252, 184, 125],
        &[0, 0, 0, 56, 21, 6, 168, 63, 19],
        &[0, 0, 0, 56, 35, 20, 168, 105, 66],
        &[0, 0, 0, 8, 6, 4, 21, 15, 11],
        &[0, 0, 0, 0, 0, 0, 21, 6, 1],
        &[0, 0, 0, 0, 0, 0, 35, 20, 10],
        &[0, 0, 0, 0, 0, 0, 7, 5, 3],
    ])
}

#[test]
fn m3_restricted_matrix() {
    let bm = restrict_bm(&build_system(3, 10).unwrap()).unwrap();
    assert_eq!(bm.rows, vec![(0, 5), (1, 5), (1, 3), (2, 5), (2, 3), (2, 1), (3, 5), (3, 3), (3, 1)]);
    assert_eq!(bm.cols, vec![(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (3, 2)]);
    assert_eq!(bm.entries, m3_matrix());
}

#[test]
fn m3_blocks() {
    let blocks = extract_blocks(3, 10).unwrap().blocks;
    let expect = [
        imat(&[&[252]]),
        imat(&[&[126, 56], &[84, 56]]),
        imat(&[&[56, 21, 6], &[56, 35, 20], &[8, 6, 4]]),
        imat(&[&[21, 6, 1], &[35, 20, 10], &[7, 5, 3]]),
    ];
    assert_eq!(blocks.len(), 4);
    for (b, e) in blocks.iter().zip(&expect) {
        assert_eq!(&b.entries, e);
    }
    assert_eq!(det_integer(&blocks[1].entries).unwrap(), ExactInteger::from(2352));
    assert_eq!(det_integer(&blocks[3].entries).unwrap(), ExactInteger::from(35));
}

#[test]
fn closed_form_blocks_agree_with_system() {
    for m in 1..=8 {
        for d in [3 * m + 1, 3 * m + 2] {
            let set = extract_blocks(m, d).unwrap();
            for b in &set.blocks {
                assert_eq!(block_closed_form(m, d, b.kind).unwrap(), b.entries, "m={m} d={d} {:?}", b.kind);
            }
            let sizes: Vec<usize> = set.blocks.iter().map(|b| b.entries.rows()).collect();
            let mut expect: Vec<usize> = (1..=m as usize).collect();
            expect.push(m as usize);
            assert_eq!(sizes, expect);
            assert_eq!(set.blocks.last().unwrap().kind, BlockKind::Final);
        }
    }
}

#[test]
fn restricted_matrix_is_block_triangular_with_product_determinant() {
    for m in 1..=7 {
        for d in [3 * m + 1, 3 * m + 2] {
            let bm = restrict_bm(&build_system(m, d).unwrap()).unwrap();
            let n = ((m + 2) * (m + 1) / 2 - 1) as usize;
            assert_eq!((bm.entries.rows(), bm.entries.cols()), (n, n));
            assert!(is_block_upper_triangular(&bm));
            let det = det_integer(&bm.entries).unwrap();
            let product: ExactInteger =
                extract_blocks(m, d).unwrap().blocks.iter().map(|b| det_integer(&b.entries).unwrap()).product();
            assert_eq!(det, product);
            assert!(!det.is_zero(), "m={m} d={d}");
        }
    }
}

#[test]
fn null_vector_annihilates_every_row() {
    for m in 0..=7 {
        for d in [3 * m + 1, 3 * m + 2] {
            let sys = build_system(m, d).unwrap();
            assert_eq!(sys.rows.len() as u32, (m + 1) * m);
            assert_eq!(sys.cols.len() as u32, (m + 2) * (m + 1) / 2);
            let ns = nullspace(&sys);
            assert_eq!(ns.dim(), 1, "m={m} d={d}");
            assert!(!ns.leading_zero);
            let v = &ns.vectors[0];
            assert_eq!(v[0], rat(1, 1));
            for r in 0..sys.entries.rows() {
                let dot: ExactRational =
                    (0..sys.entries.cols()).map(|c| rat(1, 1) * sys.entries.get(r, c) * &v[c]).sum();
                assert!(dot.is_zero());
            }
            // C_[m,m] is nonzero because the square submatrix without that column is nonsingular.
            assert!(!v.last().unwrap().is_zero());
        }
    }
}
