//! Short-vector enumeration for positive definite lattices, entirely over
//! exact rationals.
//!
//! The form is factored as `G = L·D·Lᵀ` (unit lower triangular `L`, positive
//! diagonal `D`), giving `Q(x) = Σ_j d_j (x_j + Σ_{i>j} L_ij x_i)²`. The
//! enumeration walks coordinates from the last to the first with exact
//! integer interval bounds obtained from rational square-root floors. A hard
//! cap bounds the number of visited candidates; exceeding it is an error,
//! never silent truncation.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::LatticeError;
use crate::lattice::Lattice;
use crate::matrix::Matrix;
use crate::scalar::{rat, sqrt_floor, Scalar};

/// `G = L D Lᵀ` for a positive definite symmetric matrix.
fn ldl<T: Scalar>(g: &Matrix<T>) -> Result<(Vec<Ratio<T>>, Matrix<Ratio<T>>), LatticeError> {
    let n = g.nrows();
    let mut d: Vec<Ratio<T>> = Vec::with_capacity(n);
    let mut l = Matrix::<Ratio<T>>::identity(n);
    for j in 0..n {
        let mut dj = rat(g[(j, j)].clone());
        for k in 0..j {
            dj = dj - l[(j, k)].clone() * l[(j, k)].clone() * d[k].clone();
        }
        if !dj.is_positive() {
            return Err(LatticeError::NotPositiveDefinite);
        }
        for i in (j + 1)..n {
            let mut v = rat(g[(i, j)].clone());
            for k in 0..j {
                v = v - l[(i, k)].clone() * l[(j, k)].clone() * d[k].clone();
            }
            l[(i, j)] = v / dj.clone();
        }
        d.push(dj);
    }
    Ok((d, l))
}

struct Enumerator<'a, T: Scalar> {
    diag: Vec<Ratio<T>>,
    low: &'a Matrix<Ratio<T>>,
    bound: Ratio<T>,
    cap: usize,
    visited: usize,
    out: Vec<Vec<T>>,
}

impl<'a, T: Scalar> Enumerator<'a, T> {
    /// Largest integer `m` with `m + c ≤ √rho`.
    fn upper(c: &Ratio<T>, rho: &Ratio<T>) -> T {
        let s = sqrt_floor(rho);
        let mut m = (-c.clone()).floor().to_integer() + s.clone() + T::one();
        loop {
            let t = rat(m.clone()) + c.clone();
            if !t.is_positive() || &(t.clone() * t) <= rho {
                return m;
            }
            m = m - T::one();
        }
    }

    /// Smallest integer `m` with `m + c ≥ −√rho`.
    fn lower(c: &Ratio<T>, rho: &Ratio<T>) -> T {
        let s = sqrt_floor(rho);
        let mut m = (-c.clone()).ceil().to_integer() - s - T::one();
        loop {
            let t = rat(m.clone()) + c.clone();
            if !t.is_negative() || &(t.clone() * t) <= rho {
                return m;
            }
            m = m + T::one();
        }
    }

    /// Descend through coordinate `i`, with `x[i+1..]` fixed, `used` the norm
    /// contribution of levels above, and `shifts[j] = Σ_{m>i} L_mj x_m`.
    fn descend(
        &mut self,
        i: usize,
        x: &mut Vec<T>,
        used: Ratio<T>,
        shifts: &[Ratio<T>],
    ) -> Result<(), LatticeError> {
        let rem = self.bound.clone() - used.clone();
        let rho = rem / self.diag[i].clone();
        let c = shifts[i].clone();
        let lo = Self::lower(&c, &rho);
        let hi = Self::upper(&c, &rho);
        let mut v = lo;
        while v <= hi {
            self.visited += 1;
            if self.visited > self.cap {
                return Err(LatticeError::CandidateCapExceeded { cap: self.cap });
            }
            x[i] = v.clone();
            let y = rat(v.clone()) + c.clone();
            let used_here = used.clone() + self.diag[i].clone() * y.clone() * y;
            if i == 0 {
                if !x.iter().all(|t| t.is_zero()) {
                    self.out.push(x.clone());
                }
            } else {
                let mut next = shifts.to_vec();
                for j in 0..i {
                    next[j] = next[j].clone() + self.low[(i, j)].clone() * rat(v.clone());
                }
                self.descend(i - 1, x, used_here, &next)?;
            }
            v = v + T::one();
        }
        Ok(())
    }
}

/// All nonzero `v` with `0 < v·G·vᵀ ≤ bound`, lexicographically sorted.
/// Both signs of every vector are present.
pub fn vectors_up_to<T: Scalar>(
    lattice: &Lattice<T>,
    bound: &T,
    cap: usize,
) -> Result<Vec<Vec<T>>, LatticeError> {
    if !lattice.is_positive_definite() {
        return Err(LatticeError::NotPositiveDefinite);
    }
    if !bound.is_positive() {
        return Ok(Vec::new());
    }
    let (diag, low) = ldl(lattice.gram())?;
    let n = lattice.rank();
    let mut e = Enumerator {
        diag,
        low: &low,
        bound: rat(bound.clone()),
        cap,
        visited: 0,
        out: Vec::new(),
    };
    let mut x = vec![T::zero(); n];
    let shifts = vec![Ratio::zero(); n];
    e.descend(n - 1, &mut x, Ratio::zero(), &shifts)?;
    let mut out = e.out;
    out.sort();
    Ok(out)
}

/// All vectors of norm exactly `target`.
pub fn vectors_of_norm<T: Scalar>(
    lattice: &Lattice<T>,
    target: &T,
    cap: usize,
) -> Result<Vec<Vec<T>>, LatticeError> {
    let all = vectors_up_to(lattice, target, cap)?;
    Ok(all.into_iter().filter(|v| &lattice.norm(v) == target).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    use crate::standard;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    /// Brute-force oracle: box search with the dual-diagonal bound
    /// |v_i|² ≤ bound · (G⁻¹)_ii.
    fn box_oracle(l: &crate::lattice::Lattice<BigInt>, bound: i64) -> Vec<Vec<BigInt>> {
        use crate::matrix::invert_rational;
        let ginv = invert_rational(&l.gram().to_rational()).unwrap();
        let n = l.rank();
        let radii: Vec<i64> = (0..n)
            .map(|i| {
                let r = ginv[(i, i)].clone() * rat(big(bound));
                crate::scalar::sqrt_floor(&r).try_into().unwrap()
            })
            .collect();
        let mut out = Vec::new();
        let mut v: Vec<i64> = radii.iter().map(|r| -r).collect();
        loop {
            let vec: Vec<BigInt> = v.iter().map(|&x| big(x)).collect();
            let nrm = l.norm(&vec);
            if nrm > BigInt::from(0) && nrm <= big(bound) {
                out.push(vec);
            }
            // odometer over the box
            let mut i = 0;
            loop {
                if i == n {
                    out.sort();
                    return out;
                }
                if v[i] < radii[i] {
                    v[i] += 1;
                    break;
                }
                v[i] = -radii[i];
                i += 1;
            }
        }
    }

    #[test]
    fn a1_norm_two() {
        let l = standard::a1::<BigInt>();
        let vs = vectors_of_norm(&l, &big(2), 1000).unwrap();
        assert_eq!(vs, vec![vec![big(-1)], vec![big(1)]]);
    }

    #[test]
    fn diag_2_2_matches_box_oracle() {
        let l = crate::lattice::Lattice::from_i64_gram(&[&[2, 0], &[0, 2]]).unwrap();
        let got = vectors_up_to(&l, &big(8), 10_000).unwrap();
        assert_eq!(got, box_oracle(&l, 8));
        assert_eq!(vectors_of_norm(&l, &big(2), 10_000).unwrap().len(), 4);
    }

    #[test]
    fn off_diagonal_matches_box_oracle() {
        let l = crate::lattice::Lattice::from_i64_gram(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 4]]).unwrap();
        let got = vectors_up_to(&l, &big(12), 100_000).unwrap();
        assert_eq!(got, box_oracle(&l, 12));
        for v in &got {
            assert!(l.norm(v) <= big(12));
        }
    }

    #[test]
    fn cap_is_an_error_not_truncation() {
        let l = crate::lattice::Lattice::from_i64_gram(&[&[2, 0], &[0, 2]]).unwrap();
        assert!(matches!(
            vectors_up_to(&l, &big(100), 3),
            Err(LatticeError::CandidateCapExceeded { cap: 3 })
        ));
    }

    #[test]
    fn indefinite_rejected() {
        let u = standard::hyperbolic::<BigInt>();
        assert!(matches!(
            vectors_up_to(&u, &big(2), 1000),
            Err(LatticeError::NotPositiveDefinite)
        ));
    }
}
