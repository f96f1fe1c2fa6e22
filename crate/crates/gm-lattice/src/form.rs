//! Finite quadratic/bilinear forms on discriminant groups `L^∨/L`.
//!
//! The presentation is canonical: Smith normal form of the Gram matrix gives
//! invariant factors d₁ | d₂ | … and generator lifts (rows of the row
//! transform divided by their factor, reduced into `[0,1)ⁿ`). The ℚ/ℤ-valued
//! bilinear form is always carried; the ℚ/2ℤ-valued quadratic form only when
//! the source lattice is even — on odd lattices `q mod 2ℤ` is not
//! representative-independent.

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::LatticeError;
use crate::lattice::Lattice;
use crate::matrix::{pairing, row_times_matrix, Matrix};
use crate::scalar::{mod_one, mod_two, rat, Scalar};
use crate::snf::smith;

/// Which value structure an isomorphism has to respect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// Match `q` mod 2ℤ (requires even sources) and `b` mod ℤ.
    Quadratic,
    /// Match `b` mod ℤ only.
    Bilinear,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuadraticForm<T: Scalar> {
    source_gram: Matrix<T>,
    source_even: bool,
    /// All diagonal entries of the Smith form of the Gram matrix.
    full_factors: Vec<T>,
    /// Positions of the nontrivial factors inside `full_factors`.
    gen_indices: Vec<usize>,
    invariant_factors: Vec<T>,
    generators: Vec<Vec<Ratio<T>>>,
    q_values: Option<Vec<Ratio<T>>>,
    b_matrix: Matrix<Ratio<T>>,
    /// Column transform of the Smith form: the class of a dual row `v` has
    /// coordinates `(v · G · Q) mod D`.
    snf_q: Matrix<T>,
}

impl<T: Scalar> FiniteQuadraticForm<T> {
    pub fn of(lattice: &Lattice<T>) -> Self {
        let g = lattice.gram();
        let s = smith(g);
        let full_factors = s.all_diagonal();
        let gen_indices: Vec<usize> =
            (0..full_factors.len()).filter(|&i| full_factors[i] > T::one()).collect();
        let invariant_factors: Vec<T> = gen_indices.iter().map(|&i| full_factors[i].clone()).collect();
        let generators: Vec<Vec<Ratio<T>>> = gen_indices
            .iter()
            .map(|&i| {
                let d = &full_factors[i];
                s.p.row(i)
                    .iter()
                    .map(|x| mod_one(&Ratio::new(x.clone(), d.clone())))
                    .collect()
            })
            .collect();
        let gq = g.to_rational();
        let b_matrix = Matrix::from_fn(generators.len(), generators.len(), |i, j| {
            mod_one(&pairing(&generators[i], &gq, &generators[j]))
        });
        let q_values = lattice.is_even().then(|| {
            generators.iter().map(|v| mod_two(&pairing(v, &gq, v))).collect()
        });
        FiniteQuadraticForm {
            source_gram: g.clone(),
            source_even: lattice.is_even(),
            full_factors,
            gen_indices,
            invariant_factors,
            generators,
            q_values,
            b_matrix,
            snf_q: s.q,
        }
    }

    pub fn source_gram(&self) -> &Matrix<T> {
        &self.source_gram
    }

    pub fn source_even(&self) -> bool {
        self.source_even
    }

    pub fn invariant_factors(&self) -> &[T] {
        &self.invariant_factors
    }

    /// Generator lifts as rational rows in the source basis, in `[0,1)ⁿ`.
    pub fn generators(&self) -> &[Vec<Ratio<T>>] {
        &self.generators
    }

    /// `q` of each generator, mod 2ℤ; present iff the source is even.
    pub fn q_values(&self) -> Option<&[Ratio<T>]> {
        self.q_values.as_deref()
    }

    /// `b` on generator pairs, mod ℤ.
    pub fn b_matrix(&self) -> &Matrix<Ratio<T>> {
        &self.b_matrix
    }

    pub fn num_generators(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Group order = product of the invariant factors = |det Gram|.
    pub fn order(&self) -> T {
        self.invariant_factors.iter().fold(T::one(), |acc, d| acc * d.clone())
    }

    /// Class of a dual vector (rational row in the source basis) in
    /// invariant-factor coordinates. Errors when the vector pairs
    /// non-integrally with the lattice.
    pub fn class_coords(&self, v: &[Ratio<T>]) -> Result<Vec<T>, LatticeError> {
        let w = row_times_matrix(v, &self.source_gram.to_rational());
        if !w.iter().all(|x| x.is_integer()) {
            return Err(LatticeError::NotInDual);
        }
        let w_int: Vec<T> = w.into_iter().map(|x| x.to_integer()).collect();
        let c = row_times_matrix(&w_int, &self.snf_q);
        Ok(self
            .gen_indices
            .iter()
            .map(|&i| c[i].mod_floor(&self.full_factors[i]))
            .collect())
    }

    pub fn reduce_coords(&self, c: &[T]) -> Vec<T> {
        c.iter().zip(&self.invariant_factors).map(|(x, d)| x.mod_floor(d)).collect()
    }

    pub fn neg_coords(&self, c: &[T]) -> Vec<T> {
        self.reduce_coords(&c.iter().map(|x| -x.clone()).collect::<Vec<_>>())
    }

    pub fn add_coords(&self, a: &[T], b: &[T]) -> Vec<T> {
        self.reduce_coords(&a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect::<Vec<_>>())
    }

    pub fn scale_coords(&self, c: &[T], k: &T) -> Vec<T> {
        self.reduce_coords(&c.iter().map(|x| x.clone() * k.clone()).collect::<Vec<_>>())
    }

    pub fn zero_coords(&self) -> Vec<T> {
        vec![T::zero(); self.num_generators()]
    }

    /// Order of a class in the group.
    pub fn order_of(&self, c: &[T]) -> T {
        let mut ord = T::one();
        for (x, d) in c.iter().zip(&self.invariant_factors) {
            let g = x.gcd(d);
            ord = ord.lcm(&(d.clone() / g));
        }
        ord
    }

    /// `b` of two classes, mod ℤ.
    pub fn b_of(&self, a: &[T], c: &[T]) -> Ratio<T> {
        let mut acc = Ratio::zero();
        for i in 0..self.num_generators() {
            for j in 0..self.num_generators() {
                acc = acc + rat(a[i].clone()) * rat(c[j].clone()) * self.b_matrix[(i, j)].clone();
            }
        }
        mod_one(&acc)
    }

    /// `q` of a class, mod 2ℤ; `None` on odd-sourced forms.
    pub fn q_of(&self, c: &[T]) -> Option<Ratio<T>> {
        let qs = self.q_values.as_ref()?;
        let mut acc = Ratio::zero();
        let two = rat(T::from(2));
        for i in 0..self.num_generators() {
            acc = acc + rat(c[i].clone()) * rat(c[i].clone()) * qs[i].clone();
            for j in (i + 1)..self.num_generators() {
                acc = acc
                    + two.clone()
                        * rat(c[i].clone())
                        * rat(c[j].clone())
                        * self.b_matrix[(i, j)].clone();
            }
        }
        Some(mod_two(&acc))
    }

    /// Every class, in odometer order over the invariant-factor box.
    pub fn elements(&self) -> Result<Vec<Vec<T>>, LatticeError> {
        let order = self.order();
        if order > T::from(1_000_000) {
            return Err(LatticeError::GroupTooLarge { order: order.to_string() });
        }
        let k = self.num_generators();
        let mut out = Vec::new();
        let mut cur = vec![T::zero(); k];
        loop {
            out.push(cur.clone());
            let mut i = 0;
            loop {
                if i == k {
                    return Ok(out);
                }
                cur[i] = cur[i].clone() + T::one();
                if cur[i] < self.invariant_factors[i] {
                    break;
                }
                cur[i] = T::zero();
                i += 1;
            }
        }
    }

    /// Do the given classes generate the whole group? (Stacked Smith trick:
    /// the cokernel of [C; diag(d)] must be trivial.)
    pub fn generates(&self, classes: &[Vec<T>]) -> bool {
        let k = self.num_generators();
        if k == 0 {
            return true;
        }
        let mut rows: Vec<Vec<T>> = classes.to_vec();
        for i in 0..k {
            let mut r = vec![T::zero(); k];
            r[i] = self.invariant_factors[i].clone();
            rows.push(r);
        }
        let s = smith(&Matrix::from_rows(rows));
        s.invariant_factors().is_empty() && s.rank() == k
    }

    /// The value relevant at `level` for search pruning: `q(x)` or `b(x,x)`.
    fn probe_value(&self, c: &[T], level: Level) -> Ratio<T> {
        match level {
            Level::Quadratic => self.q_of(c).expect("quadratic level requires q"),
            Level::Bilinear => self.b_of(c, c),
        }
    }

    /// Histogram of `(order, probe value)` over all elements.
    fn value_histogram(&self, level: Level) -> Result<BTreeMap<(T, (T, T)), usize>, LatticeError> {
        let mut h = BTreeMap::new();
        for el in self.elements()? {
            let v = self.probe_value(&el, level);
            let key = (self.order_of(&el), (v.numer().clone(), v.denom().clone()));
            *h.entry(key).or_insert(0) += 1;
        }
        Ok(h)
    }
}

/// A homomorphism between two finite groups in invariant-factor
/// presentation, as the images of the source generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormMap<T> {
    src_moduli: Vec<T>,
    dst_moduli: Vec<T>,
    images: Vec<Vec<T>>,
}

impl<T: Scalar> FormMap<T> {
    pub fn new(src: &FiniteQuadraticForm<T>, dst: &FiniteQuadraticForm<T>, images: Vec<Vec<T>>) -> Self {
        let images = images.iter().map(|c| dst.reduce_coords(c)).collect();
        FormMap {
            src_moduli: src.invariant_factors().to_vec(),
            dst_moduli: dst.invariant_factors().to_vec(),
            images,
        }
    }

    pub fn identity(f: &FiniteQuadraticForm<T>) -> Self {
        let k = f.num_generators();
        let images = (0..k)
            .map(|i| {
                let mut c = vec![T::zero(); k];
                c[i] = T::one();
                c
            })
            .collect();
        Self::new(f, f, images)
    }

    pub fn minus_identity(f: &FiniteQuadraticForm<T>) -> Self {
        let k = f.num_generators();
        let images = (0..k)
            .map(|i| {
                let mut c = vec![T::zero(); k];
                c[i] = -T::one();
                f.reduce_coords(&c)
            })
            .collect();
        Self::new(f, f, images)
    }

    pub fn images(&self) -> &[Vec<T>] {
        &self.images
    }

    pub fn apply(&self, c: &[T]) -> Vec<T> {
        let k_dst = self.dst_moduli.len();
        let mut out = vec![T::zero(); k_dst];
        for (i, x) in c.iter().enumerate() {
            for j in 0..k_dst {
                out[j] = out[j].clone() + x.clone() * self.images[i][j].clone();
            }
        }
        for j in 0..k_dst {
            out[j] = out[j].mod_floor(&self.dst_moduli[j]);
        }
        out
    }

    /// `x ↦ then(self(x))`.
    pub fn compose(&self, then: &FormMap<T>) -> FormMap<T> {
        assert_eq!(self.dst_moduli, then.src_moduli, "composition moduli mismatch");
        FormMap {
            src_moduli: self.src_moduli.clone(),
            dst_moduli: then.dst_moduli.clone(),
            images: self.images.iter().map(|c| then.apply(c)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.src_moduli == self.dst_moduli
            && self.images.iter().enumerate().all(|(i, c)| {
                c.iter().enumerate().all(|(j, x)| {
                    let want = if i == j { T::one().mod_floor(&self.dst_moduli[j]) } else { T::zero() };
                    *x == want
                })
            })
    }

    pub fn is_minus_identity(&self) -> bool {
        self.src_moduli == self.dst_moduli
            && self.images.iter().enumerate().all(|(i, c)| {
                c.iter().enumerate().all(|(j, x)| {
                    let want =
                        if i == j { (-T::one()).mod_floor(&self.dst_moduli[j]) } else { T::zero() };
                    *x == want
                })
            })
    }
}

fn search_isomorphisms<T: Scalar>(
    f1: &FiniteQuadraticForm<T>,
    f2: &FiniteQuadraticForm<T>,
    level: Level,
    find_all: bool,
) -> Result<Vec<FormMap<T>>, LatticeError> {
    if level == Level::Quadratic && (!f1.source_even || !f2.source_even) {
        return Err(LatticeError::OddSourceQuadratic);
    }
    if f1.invariant_factors() != f2.invariant_factors() {
        return Ok(Vec::new());
    }
    let k = f1.num_generators();
    if k == 0 {
        return Ok(vec![FormMap::new(f1, f2, Vec::new())]);
    }
    // Necessary condition, and a cheap rejection: the (order, value)
    // histograms must agree.
    if f1.value_histogram(level)? != f2.value_histogram(level)? {
        return Ok(Vec::new());
    }
    // Candidate images per generator: equal order, equal probe value,
    // lexicographic order for determinism.
    let elements = f2.elements()?;
    let candidates: Vec<Vec<Vec<T>>> = (0..k)
        .map(|i| {
            let mut gi = f1.zero_coords();
            gi[i] = T::one();
            let want_order = f1.order_of(&gi);
            let want_value = f1.probe_value(&gi, level);
            elements
                .iter()
                .filter(|h| f2.order_of(h) == want_order && f2.probe_value(h, level) == want_value)
                .cloned()
                .collect()
        })
        .collect();

    let mut found = Vec::new();
    let mut chosen: Vec<Vec<T>> = Vec::with_capacity(k);
    fn dfs<T: Scalar>(
        i: usize,
        k: usize,
        f1: &FiniteQuadraticForm<T>,
        f2: &FiniteQuadraticForm<T>,
        candidates: &[Vec<Vec<T>>],
        chosen: &mut Vec<Vec<T>>,
        found: &mut Vec<FormMap<T>>,
        find_all: bool,
    ) -> bool {
        if i == k {
            if f2.generates(chosen) {
                found.push(FormMap::new(f1, f2, chosen.clone()));
                return !find_all;
            }
            return false;
        }
        let mut gi = f1.zero_coords();
        gi[i] = T::one();
        'cand: for h in &candidates[i] {
            for (j, prev) in chosen.iter().enumerate() {
                let mut gj = f1.zero_coords();
                gj[j] = T::one();
                if f2.b_of(h, prev) != f1.b_of(&gi, &gj) {
                    continue 'cand;
                }
            }
            chosen.push(h.clone());
            if dfs(i + 1, k, f1, f2, candidates, chosen, found, find_all) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    dfs(0, k, f1, f2, &candidates, &mut chosen, &mut found, find_all);
    Ok(found)
}

/// First isomorphism matching values at `level`, or `None`. The search is
/// exhaustive over generator images with order/value pruning.
pub fn forms_isomorphic<T: Scalar>(
    f1: &FiniteQuadraticForm<T>,
    f2: &FiniteQuadraticForm<T>,
    level: Level,
) -> Result<Option<FormMap<T>>, LatticeError> {
    Ok(search_isomorphisms(f1, f2, level, false)?.into_iter().next())
}

/// Every isomorphism `f1 → f2` matching values at `level`.
pub fn all_isomorphisms<T: Scalar>(
    f1: &FiniteQuadraticForm<T>,
    f2: &FiniteQuadraticForm<T>,
    level: Level,
) -> Result<Vec<FormMap<T>>, LatticeError> {
    search_isomorphisms(f1, f2, level, true)
}

/// The automorphism group of the form at the given level.
pub fn form_automorphisms<T: Scalar>(
    f: &FiniteQuadraticForm<T>,
    level: Level,
) -> Result<Vec<FormMap<T>>, LatticeError> {
    all_isomorphisms(f, f, level)
}
