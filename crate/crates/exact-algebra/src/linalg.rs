//! Exact linear algebra over a field: Gaussian elimination, nullspaces, and
//! minimal polynomials of multiplication maps via Krylov iteration.

use crate::numberfield::AlgebraicNumber;
use crate::rational::Rat;
use crate::ring::{Field, Ring};
use crate::unipoly::UniPoly;
use num_traits::{One, Zero};

/// Reduced row echelon form in place; returns pivot column per row.
pub fn rref<F: Field>(mat: &mut Vec<Vec<F>>) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return vec![];
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].inv().expect("pivot invertible");
        for j in c..cols {
            mat[r][j] = mat[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in c..cols {
                    let t = mat[r][j].mul(&f);
                    mat[i][j] = mat[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Solve A x = b; returns one solution if consistent.
pub fn solve<F: Field>(a: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    if rows == 0 {
        return Some(vec![]);
    }
    let cols = a[0].len();
    let mut m: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    // inconsistent if a pivot lands in the rhs column
    if pivots.iter().any(|&c| c == cols) {
        return None;
    }
    let zero = b
        .iter()
        .chain(a.iter().flatten())
        .next()
        .map(|x| x.zero_like())?;
    let mut x = vec![zero; cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

/// Basis of the right nullspace of A.
pub fn nullspace<F: Field>(a: &[Vec<F>], witness: &F) -> Vec<Vec<F>> {
    let rows = a.len();
    if rows == 0 {
        return vec![];
    }
    let cols = a[0].len();
    let mut m: Vec<Vec<F>> = a.to_vec();
    let pivots = rref(&mut m);
    let piv_set: std::collections::BTreeSet<usize> = pivots.iter().cloned().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if piv_set.contains(&free) {
            continue;
        }
        let mut v = vec![witness.zero_like(); cols];
        v[free] = witness.one_like();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = m[r][free].neg_ref();
        }
        basis.push(v);
    }
    basis
}

/// Minimal polynomial of the linear map `step` acting on Q^dim, relative to
/// the start vector: the monic p of least degree with p(step)(start) = 0.
pub fn min_poly_of_map(
    dim: usize,
    start: Vec<Rat>,
    step: &mut dyn FnMut(&[Rat]) -> Vec<Rat>,
) -> UniPoly<Rat> {
    // Krylov vectors start, M start, M^2 start, ... with incremental
    // elimination; the first dependency gives the minimal polynomial.
    let mut echelon: Vec<(usize, Vec<Rat>, Vec<Rat>)> = Vec::new(); // (pivot, vec, combo)
    let mut current = start;
    let mut k = 0usize;
    loop {
        // expressing current in terms of previous iterates?
        let mut v = current.clone();
        let mut combo = vec![Rat::zero(); k + 1];
        combo[k] = Rat::one();
        for (piv, bvec, bcombo) in &echelon {
            if !num_traits::Zero::is_zero(&v[*piv]) {
                let f = v[*piv].clone();
                for i in 0..dim {
                    let t = &bvec[i] * &f;
                    v[i] = &v[i] - &t;
                }
                for (i, bc) in bcombo.iter().enumerate() {
                    let t = bc * &f;
                    combo[i] = &combo[i] - &t;
                }
            }
        }
        match (0..dim).find(|&i| !num_traits::Zero::is_zero(&v[i])) {
            Some(p) => {
                let inv = v[p].clone().recip();
                let vv: Vec<Rat> = v.iter().map(|x| x * &inv).collect();
                let cc: Vec<Rat> = combo.iter().map(|x| x * &inv).collect();
                let mut padded = cc;
                padded.resize(k + 1, Rat::zero());
                echelon.push((p, vv, padded));
                current = step(&current);
                k += 1;
                if k > dim {
                    panic!("minimal polynomial exceeds dimension");
                }
            }
            None => {
                // dependency: M^k start = sum c_i M^i start, p = x^k - sum c_i x^i
                let mut coeffs = vec![Rat::zero(); k + 1];
                coeffs[k] = Rat::one();
                for (i, c) in combo.iter().enumerate().take(k) {
                    coeffs[i] = c.clone();
                }
                return UniPoly::new(coeffs);
            }
        }
    }
}

/// Minimal polynomial over Q of a number-field element (multiplication map
/// on the power basis, cyclic vector 1).
pub fn min_poly_of_mult(a: &AlgebraicNumber) -> UniPoly<Rat> {
    let dim = a.field().degree();
    let mut start = vec![Rat::zero(); dim];
    start[0] = Rat::one();
    let field = a.field().clone();
    let a = a.clone();
    min_poly_of_map(dim, start, &mut |v: &[Rat]| {
        let elt = field.element(&UniPoly::new(v.to_vec()));
        let prod = elt.mul(&a);
        let mut out = prod.coeffs().to_vec();
        out.resize(dim, Rat::zero());
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    #[test]
    fn solve_2x2() {
        let a = vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(3), rat_int(4)],
        ];
        let b = vec![rat_int(5), rat_int(11)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(2)]);
    }

    #[test]
    fn nullspace_rank1() {
        let a = vec![vec![rat_int(1), rat_int(2), rat_int(3)]];
        let ns = nullspace(&a, &Rat::one());
        assert_eq!(ns.len(), 2);
        for v in ns {
            let dot: Rat = v
                .iter()
                .zip(&a[0])
                .map(|(x, y)| x * y)
                .fold(Rat::zero(), |s, t| s + t);
            assert!(num_traits::Zero::is_zero(&dot));
        }
    }
}
