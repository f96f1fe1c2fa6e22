//! The standard lattices the toolkit keeps reaching for.

use crate::lattice::Lattice;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Hyperbolic plane `U`.
pub fn hyperbolic<T: Scalar>() -> Lattice<T> {
    Lattice::from_gram(Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap()
}

/// Rank-one lattice `⟨m⟩`.
pub fn i1<T: Scalar>(m: &T) -> Lattice<T> {
    Lattice::from_gram(Matrix::diagonal(vec![m.clone()])).unwrap()
}

/// `A₁ = ⟨2⟩`.
pub fn a1<T: Scalar>() -> Lattice<T> {
    i1(&T::from(2))
}

/// Odd unimodular `I_{r,s} = diag(+1 × r, −1 × s)`.
pub fn i_rs<T: Scalar>(r: usize, s: usize) -> Lattice<T> {
    let mut entries = vec![T::from(1); r];
    entries.extend(std::iter::repeat_n(T::from(-1), s));
    Lattice::from_gram(Matrix::diagonal(entries)).unwrap()
}

/// `E₈`, positive definite, in the Bourbaki basis: the chain
/// 1–3–4–5–6–7–8 with node 2 attached to node 4.
pub fn e8<T: Scalar>() -> Lattice<T> {
    let edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)];
    let mut g = Matrix::<T>::zeros(8, 8);
    for i in 0..8 {
        g[(i, i)] = T::from(2);
    }
    for &(a, b) in &edges {
        g[(a - 1, b - 1)] = T::from(-1);
        g[(b - 1, a - 1)] = T::from(-1);
    }
    Lattice::from_gram(g).unwrap()
}

/// `E₈(−1)`, negative definite.
pub fn e8_neg<T: Scalar>() -> Lattice<T> {
    e8::<T>().rescale(&T::from(-1)).unwrap()
}

/// `Λ₀₀ = E₈^⊕2 ⊕ U^⊕2 ⊕ A₁^⊕2` — rank 22, signature (20, 2), det 4.
pub fn lambda00<T: Scalar>() -> Lattice<T> {
    let e = e8::<T>();
    let u = hyperbolic::<T>();
    let a = a1::<T>();
    Lattice::direct_sum_all(&[&e, &e, &u, &u, &a, &a])
}

/// `Λ_d = E₈(−1)^⊕2 ⊕ U^⊕2 ⊕ ⟨−d⟩` — rank 21, signature (2, 19).
///
/// Basis order: the two E₈(−1) blocks (indices 0..16), the two U blocks
/// (16..20), the ⟨−d⟩ generator last (index 20).
pub fn lambda_d<T: Scalar>(d: &T) -> Lattice<T> {
    let e = e8_neg::<T>();
    let u = hyperbolic::<T>();
    let last = i1(&-d.clone());
    Lattice::direct_sum_all(&[&e, &e, &u, &u, &last])
}

/// The Mukai lattice `U^⊕4 ⊕ E₈(−1)^⊕2` — rank 24, signature (4, 20), det 1.
pub fn mukai<T: Scalar>() -> Lattice<T> {
    let u = hyperbolic::<T>();
    let e = e8_neg::<T>();
    Lattice::direct_sum_all(&[&u, &u, &u, &u, &e, &e])
}
