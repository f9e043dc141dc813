//! Diagonal symmetry groups of invertible polynomials: the maximal group,
//! its distinguished elements and subgroups, and the annihilator-dual group
//! of the transposed polynomial.
//!
//! An element acts on coordinates as multiplication by `exp(2 pi i a_j)` and
//! is stored as its phase vector `(a_1..a_N)` with entries in `[0,1)`.  A
//! subgroup is stored as the canonical Hermite basis of its preimage lattice
//! `{ k in Z^N : E^{-1} k mod 1 in G }`, a sublattice squeezed between
//! `E Z^N` and `Z^N`; this gives a decidable equality and a stable sort
//! order for exhaustive subgroup sweeps.

use crate::error::{Error, Result};
use crate::exactmath::{
    common_denominator, congruence_kernel, format_ratio, frac_mod_one, hermite_normal_form,
    is_integer, lattice_contains, smith_normal_form, Int, IntMatrix, Rational,
};
use crate::polynomial::InvertiblePolynomial;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// A diagonal symmetry, stored by its phase vector in `[0,1)^N`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymmetryElement {
    phases: Vec<Rational>,
}

impl SymmetryElement {
    /// Wrap a phase vector, reducing each entry mod 1.
    pub fn from_phases(phases: Vec<Rational>) -> Self {
        SymmetryElement { phases: phases.iter().map(frac_mod_one).collect() }
    }

    /// Like [`Self::from_phases`] but checked against `E theta` being integral,
    /// i.e. membership in the maximal symmetry group of `w`.
    pub fn checked(w: &InvertiblePolynomial, phases: Vec<Rational>) -> Result<Self> {
        let elem = Self::from_phases(phases);
        if !elem.is_symmetry_of(w) {
            return Err(Error::NotASymmetry);
        }
        Ok(elem)
    }

    pub fn identity(n_vars: usize) -> Self {
        SymmetryElement { phases: vec![Rational::zero(); n_vars] }
    }

    pub fn phases(&self) -> &[Rational] {
        &self.phases
    }

    pub fn phase(&self, j: usize) -> &Rational {
        &self.phases[j]
    }

    pub fn n_vars(&self) -> usize {
        self.phases.len()
    }

    pub fn is_identity(&self) -> bool {
        self.phases.iter().all(|p| p.is_zero())
    }

    pub fn is_symmetry_of(&self, w: &InvertiblePolynomial) -> bool {
        w.exponents()
            .to_rational()
            .mul_vec(&self.phases)
            .iter()
            .all(is_integer)
    }

    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n_vars(), other.n_vars());
        SymmetryElement {
            phases: self
                .phases
                .iter()
                .zip(&other.phases)
                .map(|(a, b)| frac_mod_one(&(a + b)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        SymmetryElement { phases: self.phases.iter().map(|a| frac_mod_one(&(-a))).collect() }
    }

    pub fn power(&self, mut e: i64) -> Self {
        let mut base = if e < 0 {
            e = -e;
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Self::identity(self.n_vars());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Order in the group: lcm of the phase denominators.
    pub fn order(&self) -> Int {
        common_denominator(self.phases.iter())
    }

    /// Age: sum of the phases, taken in `[0,1)`.
    pub fn age(&self) -> Rational {
        self.phases.iter().sum()
    }

    /// Coordinates fixed by the element.
    pub fn fixed_indices(&self) -> Vec<usize> {
        (0..self.phases.len()).filter(|&j| self.phases[j].is_zero()).collect()
    }

    pub fn is_narrow(&self) -> bool {
        self.phases.iter().all(|p| !p.is_zero())
    }

    /// Determinant character: sum of phases mod 1; zero iff the element lies
    /// in the special linear subgroup.
    pub fn det_character(&self) -> Rational {
        frac_mod_one(&self.age())
    }

    /// Integer coordinate vector `k = E theta` with respect to the standard
    /// generators of the maximal group of `w`.
    pub fn coordinates(&self, w: &InvertiblePolynomial) -> Result<Vec<Int>> {
        let v = w.exponents().to_rational().mul_vec(&self.phases);
        if !v.iter().all(is_integer) {
            return Err(Error::NotASymmetry);
        }
        Ok(v.into_iter().map(|x| x.to_integer()).collect())
    }

    pub fn format(&self) -> String {
        format!(
            "({})",
            self.phases.iter().map(format_ratio).collect::<Vec<_>>().join(", ")
        )
    }
}

/// The maximal group of diagonal symmetries, with its abelian-group shape.
#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    order: Int,
    /// Nontrivial invariant factors d_1 | d_2 | ... of the cokernel of E.
    invariant_factors: Vec<Int>,
    /// Exponent of the group: the largest invariant factor.
    exponent: Int,
    /// The generators read off the columns of E^{-1}, one per variable.
    generators: Vec<SymmetryElement>,
}

/// The maximal diagonal symmetry group of `w`.
pub fn full_group(w: &InvertiblePolynomial) -> SymmetryGroup {
    let snf = smith_normal_form(w.exponents()).expect("exponent matrix is nonsingular");
    let order: Int = snf.diagonal.iter().map(|d| d.abs()).product();
    let invariant_factors: Vec<Int> =
        snf.diagonal.iter().map(|d| d.abs()).filter(|d| !d.is_one()).collect();
    let exponent = invariant_factors.last().cloned().unwrap_or_else(Int::one);
    let inv = w.inverse_exponents();
    let generators = (0..w.n_vars())
        .map(|j| SymmetryElement::from_phases((0..w.n_vars()).map(|i| inv[(i, j)].clone()).collect()))
        .collect();
    SymmetryGroup { order, invariant_factors, exponent, generators }
}

/// The exponential grading element: phases equal to the charges.
pub fn j_element(w: &InvertiblePolynomial) -> Result<SymmetryElement> {
    let cv = w.charges()?;
    Ok(SymmetryElement::from_phases(cv.charges))
}

impl SymmetryGroup {
    pub fn order(&self) -> &Int {
        &self.order
    }

    pub fn invariant_factors(&self) -> &[Int] {
        &self.invariant_factors
    }

    pub fn exponent(&self) -> &Int {
        &self.exponent
    }

    pub fn generators(&self) -> &[SymmetryElement] {
        &self.generators
    }

    /// Deterministic enumeration of all elements (ascending phase vectors).
    pub fn elements(&self) -> Vec<SymmetryElement> {
        closure(self.generators[0].n_vars(), &self.generators)
    }

    pub fn structure_string(&self) -> String {
        if self.invariant_factors.is_empty() {
            return "1".to_string();
        }
        self.invariant_factors
            .iter()
            .map(|d| format!("Z{d}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

fn closure(n_vars: usize, generators: &[SymmetryElement]) -> Vec<SymmetryElement> {
    let mut seen: BTreeSet<SymmetryElement> = BTreeSet::new();
    let mut queue: VecDeque<SymmetryElement> = VecDeque::new();
    let id = SymmetryElement::identity(n_vars);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        for gen in generators {
            let h = g.compose(gen);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.into_iter().collect()
}

/// A subgroup of the maximal symmetry group, canonically presented by the
/// Hermite basis of its integer preimage lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    basis: IntMatrix,
    order: Int,
}

impl Subgroup {
    fn from_lattice_basis(w: &InvertiblePolynomial, gens: &IntMatrix) -> Self {
        let basis = hermite_normal_form(gens).expect("preimage lattice has full rank");
        let order = (w.exponents().det() / basis.det()).abs();
        Subgroup { basis, order }
    }

    /// The trivial subgroup (preimage lattice E Z^N).
    pub fn trivial(w: &InvertiblePolynomial) -> Self {
        Self::from_lattice_basis(w, w.exponents())
    }

    /// All of the maximal group (preimage lattice Z^N).
    pub fn full(w: &InvertiblePolynomial) -> Self {
        Self::from_lattice_basis(w, &IntMatrix::identity(w.n_vars()))
    }

    /// Subgroup generated by the given symmetries.
    pub fn from_elements(
        w: &InvertiblePolynomial,
        elems: &[SymmetryElement],
    ) -> Result<Subgroup> {
        let n = w.n_vars();
        let mut cols: Vec<Vec<Int>> = Vec::new();
        for e in elems {
            cols.push(e.coordinates(w)?);
        }
        let mut gens = IntMatrix::zero(n, n + cols.len().max(1));
        for i in 0..n {
            for j in 0..n {
                gens[(i, j)] = w.exponents()[(i, j)].clone();
            }
            for (c, col) in cols.iter().enumerate() {
                gens[(i, n + c)] = col[i].clone();
            }
        }
        Ok(Self::from_lattice_basis(w, &gens))
    }

    /// The cyclic subgroup spanned by the exponential grading element.
    pub fn grading_subgroup(w: &InvertiblePolynomial) -> Result<Subgroup> {
        let j = j_element(w)?;
        Self::from_elements(w, &[j])
    }

    /// The kernel of the determinant character: elements with integral phase
    /// sum.  Solved as the congruence `w . k = 0 (mod d)` on coordinates.
    pub fn sl_subgroup(w: &InvertiblePolynomial) -> Result<Subgroup> {
        let cv = w.charges()?;
        let n = w.n_vars();
        let mut a = IntMatrix::zero(1, n);
        for j in 0..n {
            a[(0, j)] = cv.weights[j].clone();
        }
        let h = congruence_kernel(&a, &cv.degree);
        Ok(Self::from_lattice_basis(w, &h))
    }

    pub fn order(&self) -> &Int {
        &self.order
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }

    pub fn contains(&self, w: &InvertiblePolynomial, elem: &SymmetryElement) -> bool {
        match elem.coordinates(w) {
            Ok(k) => lattice_contains(&self.basis, &k),
            Err(_) => false,
        }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        let n = self.basis.rows();
        (0..n).all(|j| lattice_contains(&other.basis, &self.basis.column(j)))
    }

    /// j_W in G.
    pub fn is_a_admissible(&self, w: &InvertiblePolynomial) -> Result<bool> {
        Ok(self.contains(w, &j_element(w)?))
    }

    /// G contained in the determinant-one subgroup.
    pub fn is_b_admissible(&self, w: &InvertiblePolynomial) -> Result<bool> {
        Ok(self.generator_elements(w).iter().all(|g| g.det_character().is_zero()))
    }

    /// Calabi-Yau type: contains the grading element and sits inside SL.
    pub fn is_cy_type(&self, w: &InvertiblePolynomial) -> Result<bool> {
        Ok(self.is_a_admissible(w)? && self.is_b_admissible(w)?)
    }

    /// The basis columns as group elements (a generating set).
    pub fn generator_elements(&self, w: &InvertiblePolynomial) -> Vec<SymmetryElement> {
        let inv = w.inverse_exponents();
        (0..self.basis.cols())
            .map(|j| {
                let col = self.basis.column(j);
                let col_rat: Vec<Rational> =
                    col.iter().map(|x| Rational::from_integer(x.clone())).collect();
                SymmetryElement::from_phases(inv.mul_vec(&col_rat))
            })
            .collect()
    }

    /// Deterministic enumeration of the subgroup elements.
    pub fn elements(&self, w: &InvertiblePolynomial) -> Vec<SymmetryElement> {
        closure(w.n_vars(), &self.generator_elements(w))
    }

    /// The annihilator-dual subgroup inside the maximal group of the
    /// transposed polynomial: all `l` with `theta_g . l` integral for every
    /// `g` in this subgroup.
    pub fn dual(&self, w: &InvertiblePolynomial) -> Subgroup {
        let n = w.n_vars();
        let inv = w.inverse_exponents();
        // rows = phase vectors of the lattice basis generators
        let mut phase_rows: Vec<Vec<Rational>> = Vec::with_capacity(n);
        for j in 0..n {
            let col = self.basis.column(j);
            let col_rat: Vec<Rational> =
                col.iter().map(|x| Rational::from_integer(x.clone())).collect();
            phase_rows.push(inv.mul_vec(&col_rat));
        }
        let s = common_denominator(phase_rows.iter().flatten());
        let mut a = IntMatrix::zero(n, n);
        for (i, row) in phase_rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                a[(i, j)] = (x * Rational::from_integer(s.clone())).to_integer();
            }
        }
        let h = congruence_kernel(&a, &s);
        Self::from_lattice_basis(&w.transpose(), &h)
    }

    /// Stable sort key for deterministic sweeps.
    pub fn sort_key(&self) -> (Int, Vec<Int>) {
        let n = self.basis.rows();
        let mut flat = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                flat.push(self.basis[(i, j)].clone());
            }
        }
        (self.order.clone(), flat)
    }
}

/// Exhaustively enumerate the subgroups of the maximal group of `w`.
///
/// Breadth-first closure over generated subgroups, deduplicated by the
/// canonical Hermite basis; intended for groups of modest order (the sweeps
/// cap it, by default at 200).
pub fn all_subgroups(w: &InvertiblePolynomial) -> Vec<Subgroup> {
    let aut = full_group(w);
    let elements = aut.elements();
    let coords: Vec<Vec<Int>> = elements
        .iter()
        .map(|e| e.coordinates(w).expect("enumerated element is a symmetry"))
        .collect();
    let n = w.n_vars();

    let mut found: BTreeMap<(Int, Vec<Int>), Subgroup> = BTreeMap::new();
    let trivial = Subgroup::trivial(w);
    let mut queue = VecDeque::new();
    found.insert(trivial.sort_key(), trivial.clone());
    queue.push_back(trivial);
    while let Some(sub) = queue.pop_front() {
        for k in &coords {
            if lattice_contains(&sub.basis, k) {
                continue;
            }
            let mut gens = IntMatrix::zero(n, n + 1);
            for i in 0..n {
                for j in 0..n {
                    gens[(i, j)] = sub.basis[(i, j)].clone();
                }
                gens[(i, n)] = k[i].clone();
            }
            let bigger = Subgroup::from_lattice_basis(w, &gens);
            let key = bigger.sort_key();
            if !found.contains_key(&key) {
                found.insert(key, bigger.clone());
                queue.push_back(bigger);
            }
        }
    }
    found.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};
    use crate::polynomial::assemble;
    use crate::polynomial::AtomKind;

    fn quintic() -> InvertiblePolynomial {
        assemble(&vec![(AtomKind::Fermat, vec![5]); 5]).unwrap()
    }

    fn d4() -> InvertiblePolynomial {
        InvertiblePolynomial::from_rows(&[&[3, 0], &[1, 2]]).unwrap()
    }

    fn two_loop() -> InvertiblePolynomial {
        assemble(&[(AtomKind::Loop, vec![3, 3])]).unwrap()
    }

    #[test]
    fn quintic_full_group() {
        let g = full_group(&quintic());
        assert_eq!(*g.order(), int(3125));
        assert_eq!(g.invariant_factors(), vec![int(5); 5].as_slice());
        assert_eq!(*g.exponent(), int(5));
        assert_eq!(g.elements().len(), 3125);
    }

    #[test]
    fn d4_group_cyclic_of_order_six() {
        let g = full_group(&d4());
        assert_eq!(*g.order(), int(6));
        assert_eq!(g.invariant_factors(), &[int(6)]);
        assert_eq!(*g.exponent(), int(6));
        // the grading element has order 3 although the exponent is 6
        let j = j_element(&d4()).unwrap();
        assert_eq!(j.order(), int(3));
    }

    #[test]
    fn loop_group_order_is_abs_det() {
        let g = full_group(&two_loop());
        assert_eq!(*g.order(), int(8)); // |det [[3,1],[1,3]]|
    }

    #[test]
    fn grading_element_is_product_of_generators() {
        for w in [quintic(), d4(), two_loop()] {
            let aut = full_group(&w);
            let j = j_element(&w).unwrap();
            let mut prod = SymmetryElement::identity(w.n_vars());
            for gen in aut.generators() {
                prod = prod.compose(gen);
            }
            assert_eq!(prod, j);
            assert!(j.is_symmetry_of(&w));
        }
    }

    #[test]
    fn quintic_j_phases_and_order() {
        let j = j_element(&quintic()).unwrap();
        assert_eq!(j.phases(), vec![rat(1, 5); 5].as_slice());
        assert_eq!(j.order(), int(5));
        assert!(j.is_narrow());
        assert_eq!(j.fixed_indices(), Vec::<usize>::new());
    }

    #[test]
    fn age_relation_with_inverse() {
        // age(g) + age(g^-1) = N - N_g over a whole group
        let w = d4();
        for g in Subgroup::full(&w).elements(&w) {
            let lhs = g.age() + g.inverse().age();
            let n_fixed = g.fixed_indices().len();
            assert_eq!(lhs, rat((w.n_vars() - n_fixed) as i64, 1));
        }
    }

    #[test]
    fn quintic_j_powers_age() {
        let j = j_element(&quintic()).unwrap();
        assert_eq!(j.power(2).age(), rat(2, 1));
        assert_eq!(j.power(0).age(), rat(0, 1));
    }

    #[test]
    fn quintic_sl_has_index_five() {
        let w = quintic();
        let sl = Subgroup::sl_subgroup(&w).unwrap();
        assert_eq!(*sl.order(), int(625));
        for g in sl.elements(&w) {
            assert!(g.det_character().is_zero());
        }
    }

    #[test]
    fn admissibility_of_grading_subgroup() {
        let w = quintic();
        let jw = Subgroup::grading_subgroup(&w).unwrap();
        assert_eq!(*jw.order(), int(5));
        assert!(jw.is_a_admissible(&w).unwrap());
        assert!(jw.is_b_admissible(&w).unwrap()); // charge sum 1 lands in SL
        assert!(jw.is_cy_type(&w).unwrap());
    }

    #[test]
    fn dual_of_trivial_is_full() {
        for w in [quintic(), d4(), two_loop()] {
            let dual = Subgroup::trivial(&w).dual(&w);
            assert_eq!(dual, Subgroup::full(&w.transpose()));
            let dual_of_full = Subgroup::full(&w).dual(&w);
            assert_eq!(dual_of_full, Subgroup::trivial(&w.transpose()));
        }
    }

    #[test]
    fn dual_exchanges_grading_and_sl() {
        let w = quintic();
        let jw = Subgroup::grading_subgroup(&w).unwrap();
        let dual = jw.dual(&w);
        assert_eq!(dual, Subgroup::sl_subgroup(&w.transpose()).unwrap());
        assert_eq!(*dual.order(), int(625));
    }

    #[test]
    fn dual_is_involutive_on_small_groups() {
        let w = two_loop();
        for sub in all_subgroups(&w) {
            let back = sub.dual(&w).dual(&w.transpose());
            assert_eq!(back, sub);
        }
    }

    #[test]
    fn subgroup_enumeration_counts() {
        // the eight-element group of the two-variable cycle is cyclic: one
        // subgroup per divisor of 8
        assert_eq!(all_subgroups(&two_loop()).len(), 4);
        // Z6 likewise
        assert_eq!(all_subgroups(&d4()).len(), 4);
    }

    #[test]
    fn subgroup_membership_and_inclusion() {
        let w = quintic();
        let jw = Subgroup::grading_subgroup(&w).unwrap();
        let sl = Subgroup::sl_subgroup(&w).unwrap();
        let j = j_element(&w).unwrap();
        assert!(jw.contains(&w, &j));
        assert!(sl.contains(&w, &j));
        assert!(jw.is_subgroup_of(&sl));
        assert!(!sl.is_subgroup_of(&jw));
        assert_eq!(jw.elements(&w).len(), 5);
    }
}
