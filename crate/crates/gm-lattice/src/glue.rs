//! Discriminant glue of a primitive orthogonal pair inside a unimodular
//! lattice.
//!
//! For primitive, mutually orthogonal `M ⊥ N` of full rank inside a
//! unimodular `L`, the quotient `H = L/(M ⊕ N)` embeds into
//! `Disc(M) ⊕ Disc(N)` and is the graph of a bijection `Disc(M) → Disc(N)`
//! reversing the bilinear form (the q-form too when everything is even).
//! An isometry pair `(g_M, g_N)` extends to `L` exactly when the induced
//! discriminant actions carry the graph to itself.

use std::collections::HashMap;

use num_rational::Ratio;


use crate::embedding::Embedding;
use crate::error::LatticeError;
use crate::form::{FiniteQuadraticForm, FormMap};
use crate::isometry::Isometry;
use crate::matrix::{invert_rational, row_times_matrix, Matrix};
use crate::scalar::{mod_one, mod_two, Scalar};
use crate::snf::smith;

#[derive(Debug, Clone)]
pub struct GlueMap<T: Scalar> {
    disc_m: FiniteQuadraticForm<T>,
    disc_n: FiniteQuadraticForm<T>,
    /// Generators of `L/(M ⊕ N)`: (order, class in Disc M, class in Disc N).
    generators: Vec<(T, Vec<T>, Vec<T>)>,
    /// The full graph, Disc(M) class → Disc(N) class.
    graph: HashMap<Vec<T>, Vec<T>>,
}

/// Rational coordinates of an ambient row `v` projected onto the span of
/// `sub`, written in the basis rows of `sub`.
fn project_coords<T: Scalar>(
    v: &[T],
    sub: &Embedding<T>,
) -> Result<Vec<Ratio<T>>, LatticeError> {
    let b = sub.basis_rows().to_rational();
    let g = sub.ambient().gram().to_rational();
    let gram_inv = invert_rational(&sub.induced_gram().to_rational())
        .map_err(|_| LatticeError::DegenerateSublattice)?;
    let vr: Vec<Ratio<T>> = v.iter().map(|x| Ratio::from_integer(x.clone())).collect();
    let vg = row_times_matrix(&vr, &g);
    let vgb = row_times_matrix(&vg, &b.transpose());
    Ok(row_times_matrix(&vgb, &gram_inv))
}

pub fn glue_map<T: Scalar>(
    m: &Embedding<T>,
    n: &Embedding<T>,
) -> Result<GlueMap<T>, LatticeError> {
    if m.ambient() != n.ambient() {
        return Err(LatticeError::AmbientsDiffer);
    }
    let ambient = m.ambient();
    if !ambient.is_unimodular() {
        return Err(LatticeError::AmbientNotUnimodular);
    }
    if m.rank() + n.rank() != ambient.rank() {
        return Err(LatticeError::NotFiniteIndex);
    }
    if !m.is_primitive() || !n.is_primitive() {
        return Err(LatticeError::NotPrimitive);
    }
    let cross = m.basis_rows().mul(ambient.gram()).mul(&n.basis_rows().transpose());
    if (0..cross.nrows()).any(|i| (0..cross.ncols()).any(|j| !cross[(i, j)].is_zero())) {
        return Err(LatticeError::NotOrthogonal);
    }

    let disc_m = FiniteQuadraticForm::of(&m.sublattice()?);
    let disc_n = FiniteQuadraticForm::of(&n.sublattice()?);

    // Quotient L/(M ⊕ N): rows of q_inv from the Smith form of the stacked
    // coordinate matrix lift its cyclic generators.
    let stacked = {
        let mut rows: Vec<Vec<T>> = m.basis_rows().rows_iter().map(|r| r.to_vec()).collect();
        rows.extend(n.basis_rows().rows_iter().map(|r| r.to_vec()));
        Matrix::from_rows(rows)
    };
    let s = smith(&stacked);
    let mut generators = Vec::new();
    for (i, delta) in s.all_diagonal().into_iter().enumerate() {
        if delta <= T::one() {
            continue;
        }
        let lift = s.q_inv.row_vec(i);
        let cm = disc_m.class_coords(&project_coords(&lift, m)?)?;
        let cn = disc_n.class_coords(&project_coords(&lift, n)?)?;
        generators.push((delta, cm, cn));
    }

    // Materialize the graph by running over the quotient group.
    let mut graph = HashMap::new();
    let mut counters: Vec<T> = vec![T::zero(); generators.len()];
    loop {
        let mut am = disc_m.zero_coords();
        let mut an = disc_n.zero_coords();
        for (t, (_, cm, cn)) in counters.iter().zip(&generators) {
            am = disc_m.add_coords(&am, &disc_m.scale_coords(cm, t));
            an = disc_n.add_coords(&an, &disc_n.scale_coords(cn, t));
        }
        if let Some(old) = graph.insert(am, an.clone()) {
            assert_eq!(old, an, "glue is not the graph of a map; preconditions violated");
        }
        let mut i = 0;
        loop {
            if i == counters.len() {
                // Unimodular ambient forces |H| = |Disc M| = |Disc N| and a
                // bijective graph; anything else is a defect upstream.
                let order = disc_m.order();
                assert_eq!(
                    T::from(graph.len() as i64),
                    order,
                    "glue graph is not total on Disc(M)"
                );
                assert_eq!(disc_n.order(), order, "discriminant orders differ in unimodular glue");
                let mut seen: Vec<&Vec<T>> = graph.values().collect();
                seen.sort();
                seen.dedup();
                assert_eq!(seen.len(), graph.len(), "glue graph is not injective");
                return Ok(GlueMap { disc_m, disc_n, generators, graph });
            }
            counters[i] = counters[i].clone() + T::one();
            if counters[i] < generators[i].0 {
                break;
            }
            counters[i] = T::zero();
            i += 1;
        }
    }
}

impl<T: Scalar> GlueMap<T> {
    pub fn disc_m(&self) -> &FiniteQuadraticForm<T> {
        &self.disc_m
    }

    pub fn disc_n(&self) -> &FiniteQuadraticForm<T> {
        &self.disc_n
    }

    /// |H| = |Disc M| = |Disc N|.
    pub fn order(&self) -> T {
        self.disc_m.order()
    }

    pub fn generators(&self) -> &[(T, Vec<T>, Vec<T>)] {
        &self.generators
    }

    /// Image of a Disc(M) class under the glue bijection.
    pub fn map_class(&self, c: &[T]) -> Option<&Vec<T>> {
        self.graph.get(&self.disc_m.reduce_coords(c))
    }

    /// `b_N(φx, φy) ≡ −b_M(x, y)` on all generator pairs.
    pub fn is_b_reversing(&self) -> bool {
        let k = self.generators.len();
        for i in 0..k {
            for j in i..k {
                let (_, cmi, cni) = &self.generators[i];
                let (_, cmj, cnj) = &self.generators[j];
                let lhs = self.disc_n.b_of(cni, cnj);
                let rhs = mod_one(&-self.disc_m.b_of(cmi, cmj));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// `q_N(φx) ≡ −q_M(x)`; requires both sides even.
    pub fn is_q_reversing(&self) -> Result<bool, LatticeError> {
        if !self.disc_m.source_even() || !self.disc_n.source_even() {
            return Err(LatticeError::OddSourceQuadratic);
        }
        if !self.is_b_reversing() {
            return Ok(false);
        }
        for (_, cm, cn) in &self.generators {
            let lhs = self.disc_n.q_of(cn).expect("even source");
            let rhs = mod_two(&-self.disc_m.q_of(cm).expect("even source"));
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Nikulin's gluing criterion: `g_m ⊕ g_n` extends to an isometry of the
/// unimodular ambient iff the pair of induced discriminant actions maps the
/// glue graph into itself.
pub fn extends_to_ambient<T: Scalar>(
    gm: &Isometry<T>,
    gn: &Isometry<T>,
    glue: &GlueMap<T>,
) -> Result<bool, LatticeError> {
    let am = gm.disc_action(&glue.disc_m)?;
    let an = gn.disc_action(&glue.disc_n)?;
    Ok(check_graph_preserved(&am, &an, glue))
}

/// Graph preservation for arbitrary discriminant actions (it is enough to
/// check the quotient generators: the graph is a subgroup).
pub fn check_graph_preserved<T: Scalar>(
    am: &FormMap<T>,
    an: &FormMap<T>,
    glue: &GlueMap<T>,
) -> bool {
    glue.generators.iter().all(|(_, cm, cn)| {
        glue.graph.get(&am.apply(cm)) == Some(&an.apply(cn))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Lattice;
    use crate::standard;
    use num_bigint::BigInt;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn rank_one_pair_in_u() {
        // (2) spanned by e+f and (−2) spanned by e−f inside U: glue Z/2.
        let u = standard::hyperbolic::<BigInt>();
        let m = Embedding::from_i64_rows(u.clone(), &[&[1, 1]]).unwrap();
        let n = Embedding::from_i64_rows(u.clone(), &[&[1, -1]]).unwrap();
        let glue = glue_map(&m, &n).unwrap();
        assert_eq!(glue.order(), big(2));
        assert!(glue.is_b_reversing());
        // (id, id) and (−id, −id) extend; the mixed pair also extends here
        // because every class is 2-torsion.
        let lm = m.sublattice().unwrap();
        let ln = n.sublattice().unwrap();
        let id_m = Isometry::identity(lm.clone());
        let id_n = Isometry::identity(ln.clone());
        assert!(extends_to_ambient(&id_m, &id_n, &glue).unwrap());
        let neg_m = Isometry::minus_identity(lm);
        let neg_n = Isometry::minus_identity(ln);
        assert!(extends_to_ambient(&neg_m, &neg_n, &glue).unwrap());
        assert!(extends_to_ambient(&neg_m, &id_n, &glue).unwrap());
    }

    #[test]
    fn preconditions_enforced() {
        let u = standard::hyperbolic::<BigInt>();
        let m = Embedding::from_i64_rows(u.clone(), &[&[1, 1]]).unwrap();
        let bad_n = Embedding::from_i64_rows(u.clone(), &[&[1, 1]]).unwrap();
        assert_eq!(glue_map(&m, &bad_n).unwrap_err(), LatticeError::NotOrthogonal);

        let a1a1 = Lattice::<BigInt>::from_i64_gram(&[&[2, 0], &[0, 2]]).unwrap();
        let p = Embedding::from_i64_rows(a1a1.clone(), &[&[1, 0]]).unwrap();
        let q = Embedding::from_i64_rows(a1a1, &[&[0, 1]]).unwrap();
        assert_eq!(glue_map(&p, &q).unwrap_err(), LatticeError::AmbientNotUnimodular);

        let imprimitive = Embedding::from_i64_rows(u.clone(), &[&[2, 2]]).unwrap();
        let n = Embedding::from_i64_rows(u, &[&[1, -1]]).unwrap();
        assert_eq!(glue_map(&imprimitive, &n).unwrap_err(), LatticeError::NotPrimitive);
    }

    #[test]
    fn trivial_glue_of_unimodular_pair() {
        let uu = standard::hyperbolic::<BigInt>().direct_sum(&standard::hyperbolic::<BigInt>());
        let m = Embedding::from_i64_rows(uu.clone(), &[&[1, 0, 0, 0], &[0, 1, 0, 0]]).unwrap();
        let n = Embedding::from_i64_rows(uu, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap();
        let glue = glue_map(&m, &n).unwrap();
        assert_eq!(glue.order(), big(1));
        assert!(glue.is_b_reversing());
        let id_m = Isometry::identity(m.sublattice().unwrap());
        let id_n = Isometry::identity(n.sublattice().unwrap());
        assert!(extends_to_ambient(&id_m, &id_n, &glue).unwrap());
    }
}
