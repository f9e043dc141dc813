//! The orbifold Frobenius product on the B-model state space: structure
//! constants on sector units from the Hessian-class relation, extended by
//! the module action of the untwisted ring.
//!
//! The defining relation equates the normalized Hessian class of the
//! restriction to the joint fixed locus with that of the product sector.
//! Both sides are read inside the product-sector ring: under the covering
//! condition the product fixed locus splits off the joint locus, and the
//! structure "constant" is the class of the complementary Hessian.  It is a
//! scalar multiple of the sector unit only when the complement is empty;
//! the associativity, unit, grading and pairing-compatibility suites pin
//! this reading down.

use crate::error::{Error, Result};
use crate::exactmath::{int, Rational};
use crate::milnor::{GradedMilnorRing, MultiPoly, RingCache};
use crate::polynomial::InvertiblePolynomial;
use crate::symmetry::{Subgroup, SymmetryElement};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::sync::Arc;
use std::sync::Mutex;

/// An element of the orbifold algebra: per-sector polynomial representatives
/// (kept in normal form with respect to the sector ring).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    pub parts: BTreeMap<SymmetryElement, MultiPoly>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement { parts: BTreeMap::new() }
    }

    pub fn sector_unit(g: SymmetryElement, n_vars: usize) -> Self {
        let mut parts = BTreeMap::new();
        parts.insert(g, MultiPoly::one(n_vars));
        AlgebraElement { parts }
    }

    pub fn class(g: SymmetryElement, poly: MultiPoly) -> Self {
        let mut parts = BTreeMap::new();
        if !poly.is_zero() {
            parts.insert(g, poly);
        }
        AlgebraElement { parts }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.values().all(|p| p.is_zero())
    }

    fn add_part(&mut self, g: SymmetryElement, poly: MultiPoly) {
        if poly.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.parts.entry(g) {
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&poly);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            Entry::Vacant(v) => {
                v.insert(poly);
            }
        }
    }
}

/// The orbifold algebra of (w, G) with memoized structure constants.
pub struct FrobeniusAlgebra<'a> {
    w: &'a InvertiblePolynomial,
    cache: &'a RingCache,
    elements: Vec<SymmetryElement>,
    gammas: Mutex<BTreeMap<(SymmetryElement, SymmetryElement), MultiPoly>>,
    pub b_admissible: bool,
}

impl<'a> FrobeniusAlgebra<'a> {
    pub fn new(
        w: &'a InvertiblePolynomial,
        group: &Subgroup,
        cache: &'a RingCache,
    ) -> Result<Self> {
        let elements = group.elements(w);
        let b_admissible = group.is_b_admissible(w)?;
        Ok(FrobeniusAlgebra {
            w,
            cache,
            elements,
            gammas: Mutex::new(BTreeMap::new()),
            b_admissible,
        })
    }

    pub fn group_elements(&self) -> &[SymmetryElement] {
        &self.elements
    }

    pub fn ring_of(&self, g: &SymmetryElement) -> Result<Arc<GradedMilnorRing>> {
        self.cache.ring(self.w, &g.fixed_indices())
    }

    /// Structure class: `1_g * 1_h = gamma(g,h) 1_{gh}` with the returned
    /// polynomial already in normal form in the product-sector ring.
    pub fn gamma(&self, g: &SymmetryElement, h: &SymmetryElement) -> Result<MultiPoly> {
        let key = (g.clone(), h.clone());
        if let Some(p) = self.gammas.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let value = self.compute_gamma(g, h)?;
        self.gammas.lock().unwrap().insert(key, value.clone());
        Ok(value)
    }

    /// The scalar value of gamma when it is a multiple of the sector unit
    /// (in particular 0 when the covering condition fails, 1 against the
    /// untwisted unit).
    pub fn gamma_scalar(
        &self,
        g: &SymmetryElement,
        h: &SymmetryElement,
    ) -> Result<Option<Rational>> {
        let p = self.gamma(g, h)?;
        if p.is_zero() {
            return Ok(Some(Rational::zero()));
        }
        let mut it = p.terms();
        match it.next() {
            Some((m, c)) if m.iter().all(|&e| e == 0) && it.next().is_none() => {
                Ok(Some(c.clone()))
            }
            _ => Ok(None),
        }
    }

    fn compute_gamma(&self, g: &SymmetryElement, h: &SymmetryElement) -> Result<MultiPoly> {
        let n = self.w.n_vars();
        let gh = g.compose(h);
        let fix_g = g.fixed_indices();
        let fix_h = h.fixed_indices();
        let fix_gh = gh.fixed_indices();

        let mut covered = vec![false; n];
        for &j in fix_g.iter().chain(&fix_h).chain(&fix_gh) {
            covered[j] = true;
        }
        if !covered.iter().all(|&c| c) {
            return Ok(MultiPoly::zero(n));
        }

        // joint fixed locus and its complement inside the product fixed locus
        let joint: Vec<usize> = fix_g.iter().copied().filter(|j| fix_h.contains(j)).collect();
        let extra: Vec<usize> =
            fix_gh.iter().copied().filter(|j| !joint.contains(j)).collect();
        debug_assert_eq!(joint.len() + extra.len(), fix_gh.len());

        let ring_gh = self.cache.ring(self.w, &fix_gh)?;
        if extra.is_empty() {
            // the two loci agree; the relation forces the unit coefficient
            return Ok(MultiPoly::one(n));
        }

        let w_poly = MultiPoly::from_invertible(self.w);
        let w_gh = w_poly.restrict(&fix_gh);
        let splits = w_gh.terms().all(|(m, _)| {
            let in_joint = joint.iter().any(|&j| m[j] > 0);
            let in_extra = extra.iter().any(|&j| m[j] > 0);
            !(in_joint && in_extra)
        });

        if splits {
            // hess(W_{gh}) = hess(W_joint) hess(W_extra) and mu multiplies,
            // so the relation is solved by the complementary Hessian class
            let ring_extra = self.cache.ring(self.w, &extra)?;
            let hess_extra = hessian_poly(&w_poly, &extra);
            let coords = ring_gh.normal_form(&hess_extra);
            let scaled: Vec<(usize, Rational)> = coords
                .into_iter()
                .map(|(i, c)| (i, c / Rational::from_integer(int(ring_extra.mu() as i64))))
                .collect();
            return Ok(ring_gh.coords_poly(&scaled));
        }

        // no splitting: solve gamma * hess(W_joint) = (mu_joint/mu_gh) hess(W_gh)
        // for gamma in the graded piece of the product ring; refuse unless the
        // solution is unique
        let ring_joint = self.cache.ring(self.w, &joint)?;
        let hess_joint = hessian_poly(&w_poly, &joint);
        let target_coords = ring_gh.normal_form(&hessian_poly(&w_poly, &fix_gh));
        let factor = Rational::new(int(ring_joint.mu() as i64), int(ring_gh.mu() as i64));
        let target: BTreeMap<usize, Rational> =
            target_coords.into_iter().map(|(i, c)| (i, c * &factor)).collect();

        let want_degree = ring_gh.top_ring_degree() - ring_joint.top_ring_degree();
        let candidates: Vec<usize> = (0..ring_gh.mu())
            .filter(|&i| *ring_gh.ring_degree(i) == want_degree)
            .collect();
        if candidates.is_empty() {
            return Err(Error::NonScalarRelation {
                reason: "no candidate degree piece for the structure class".into(),
            });
        }
        // columns: NF(b * hess_joint) for each candidate basis monomial b
        let mut columns: Vec<BTreeMap<usize, Rational>> = Vec::new();
        for &bi in &candidates {
            let b = MultiPoly::monomial(ring_gh.basis()[bi].clone(), Rational::one());
            let prod = b.mul(&hess_joint);
            columns.push(ring_gh.normal_form(&prod).into_iter().collect());
        }
        let solution =
            solve_unique(&columns, &target).ok_or_else(|| Error::NonScalarRelation {
                reason: "structure class is not uniquely determined by the Hessian relation"
                    .into(),
            })?;
        let coords: Vec<(usize, Rational)> = candidates
            .into_iter()
            .zip(solution)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(ring_gh.coords_poly(&coords))
    }

    /// Bilinear product; each part lands in the product sector after
    /// restriction and normal-form reduction there.
    pub fn product(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero();
        for (g, alpha) in &x.parts {
            for (h, beta) in &y.parts {
                let gh = g.compose(h);
                let gamma = self.gamma(g, h)?;
                if gamma.is_zero() {
                    continue;
                }
                let ring = self.cache.ring(self.w, &gh.fixed_indices())?;
                let prod = alpha.mul(beta).mul(&gamma);
                let coords = ring.normal_form(&prod);
                out.add_part(gh.clone(), ring.coords_poly(&coords));
            }
        }
        Ok(out)
    }

    /// Pairing of algebra elements through the sector-wise residue pairing.
    pub fn pair(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (g, alpha) in &x.parts {
            let ginv = g.inverse();
            if let Some(beta) = y.parts.get(&ginv) {
                let ring = self.cache.ring(self.w, &g.fixed_indices())?;
                acc += ring.residue_pairing(alpha, beta);
            }
        }
        Ok(acc)
    }

    /// B-model total degree of a single-sector class, when homogeneous.
    pub fn total_degree(
        &self,
        g: &SymmetryElement,
        poly: &MultiPoly,
    ) -> Result<Option<Rational>> {
        let ring = self.cache.ring(self.w, &g.fixed_indices())?;
        let coords = ring.normal_form(poly);
        let mut degree: Option<Rational> = None;
        let q: Rational = self.w.charges()?.charges.iter().sum();
        for (i, _) in coords {
            let ell = ring.form_degree(i);
            let d = ell + ell + g.age() + g.inverse().age() - &q - &q;
            match &degree {
                None => degree = Some(d),
                Some(existing) if *existing == d => {}
                Some(_) => return Ok(None), // mixed degrees
            }
        }
        Ok(degree)
    }
}

fn hessian_poly(w_poly: &MultiPoly, indices: &[usize]) -> MultiPoly {
    let n = w_poly.n_vars();
    if indices.is_empty() {
        return MultiPoly::one(n);
    }
    let restricted = w_poly.restrict(indices);
    let k = indices.len();
    let mut mat = vec![vec![MultiPoly::zero(n); k]; k];
    for (a, &i) in indices.iter().enumerate() {
        let di = restricted.partial_derivative(i);
        for (b, &j) in indices.iter().enumerate() {
            mat[a][b] = di.partial_derivative(j);
        }
    }
    MultiPoly::det(&mat)
}

/// Solve `sum_i c_i col_i = target` exactly; `Some` only when the solution
/// exists and is unique.
fn solve_unique(
    columns: &[BTreeMap<usize, Rational>],
    target: &BTreeMap<usize, Rational>,
) -> Option<Vec<Rational>> {
    use crate::exactmath::RationalMatrix;
    let mut row_indices: std::collections::BTreeSet<usize> = target.keys().copied().collect();
    for col in columns {
        row_indices.extend(col.keys().copied());
    }
    let rows: Vec<usize> = row_indices.into_iter().collect();
    if rows.is_empty() {
        // target is zero; unique solution only if there are no free unknowns
        return if columns.is_empty() { Some(vec![]) } else { None };
    }
    let m = rows.len();
    let k = columns.len();
    let mut aug = RationalMatrix::zero(m, k + 1);
    for (r, &row) in rows.iter().enumerate() {
        for (c, col) in columns.iter().enumerate() {
            if let Some(v) = col.get(&row) {
                aug[(r, c)] = v.clone();
            }
        }
        if let Some(v) = target.get(&row) {
            aug[(r, k)] = v.clone();
        }
    }
    // elimination; consistency plus full column rank give uniqueness
    let mut pivot_row = 0usize;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for col in 0..k {
        let p = (pivot_row..m).find(|&r| !aug[(r, col)].is_zero());
        let p = match p {
            Some(p) => p,
            None => return None, // free column: not unique
        };
        for j in 0..=k {
            let a = aug[(p, j)].clone();
            let b = aug[(pivot_row, j)].clone();
            aug[(p, j)] = b;
            aug[(pivot_row, j)] = a;
        }
        let pv = aug[(pivot_row, col)].clone();
        for j in col..=k {
            aug[(pivot_row, j)] /= &pv;
        }
        for r in 0..m {
            if r != pivot_row && !aug[(r, col)].is_zero() {
                let f = aug[(r, col)].clone();
                for j in col..=k {
                    let s = &f * &aug[(pivot_row, j)];
                    aug[(r, j)] -= s;
                }
            }
        }
        pivots.push((pivot_row, col));
        pivot_row += 1;
    }
    for r in pivot_row..m {
        if !aug[(r, k)].is_zero() {
            return None;
        }
    }
    let mut solution = vec![Rational::zero(); k];
    for (r, c) in pivots {
        solution[c] = aug[(r, k)].clone();
    }
    Some(solution)
}

/// Outcome of the algebra law suites for one pair (w, G).
#[derive(Clone, Debug)]
pub struct AlgebraReport {
    pub group_order: usize,
    pub associative: bool,
    pub unit_law: bool,
    pub grading_additive: bool,
    pub equivariant: bool,
    pub failures: Vec<String>,
}

/// Check associativity over all sector-unit triples, the unit law, degree
/// additivity of nonzero products and G-invariance of the structure classes.
pub fn algebra_report(
    w: &InvertiblePolynomial,
    group: &Subgroup,
    cache: &RingCache,
) -> Result<AlgebraReport> {
    let algebra = FrobeniusAlgebra::new(w, group, cache)?;
    let n = w.n_vars();
    let elements = algebra.group_elements().to_vec();
    let generators = group.generator_elements(w);
    let mut failures = Vec::new();

    let units: Vec<AlgebraElement> = elements
        .iter()
        .map(|g| AlgebraElement::sector_unit(g.clone(), n))
        .collect();

    let mut unit_law = true;
    let identity = AlgebraElement::sector_unit(SymmetryElement::identity(n), n);
    for (g, u) in elements.iter().zip(&units) {
        let left = algebra.product(&identity, u)?;
        let right = algebra.product(u, &identity)?;
        if left != *u || right != *u {
            unit_law = false;
            failures.push(format!("unit law fails at {}", g.format()));
        }
    }

    let mut associative = true;
    for (gi, ug) in units.iter().enumerate() {
        for uh in &units {
            let gh = algebra.product(ug, uh)?;
            for uk in &units {
                let left = algebra.product(&gh, uk)?;
                let hk = algebra.product(uh, uk)?;
                let right = algebra.product(ug, &hk)?;
                if left != right {
                    associative = false;
                    failures.push(format!(
                        "associativity fails at a triple including {}",
                        elements[gi].format()
                    ));
                }
            }
        }
    }

    let mut grading_additive = true;
    for (g, ug) in elements.iter().zip(&units) {
        for (h, uh) in elements.iter().zip(&units) {
            let prod = algebra.product(ug, uh)?;
            if prod.is_zero() {
                continue;
            }
            let dg = algebra.total_degree(g, &MultiPoly::one(n))?.unwrap();
            let dh = algebra.total_degree(h, &MultiPoly::one(n))?.unwrap();
            for (sector, poly) in &prod.parts {
                match algebra.total_degree(sector, poly)? {
                    Some(d) if d == &dg + &dh => {}
                    _ => {
                        grading_additive = false;
                        failures.push(format!(
                            "degree additivity fails at ({}, {})",
                            g.format(),
                            h.format()
                        ));
                    }
                }
            }
        }
    }

    let mut equivariant = true;
    for g in &elements {
        for h in &elements {
            let gamma = algebra.gamma(g, h)?;
            if gamma.is_zero() {
                continue;
            }
            let gh = g.compose(h);
            let ring = algebra.ring_of(&gh)?;
            for (m, _) in gamma.terms() {
                for gen in &generators {
                    if !ring.action_character(m, gen).is_zero() {
                        equivariant = false;
                        failures.push(format!(
                            "structure class not invariant at ({}, {})",
                            g.format(),
                            h.format()
                        ));
                    }
                }
            }
        }
    }

    Ok(AlgebraReport {
        group_order: elements.len(),
        associative,
        unit_law,
        grading_additive,
        equivariant,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_int};
    use crate::polynomial::{assemble, AtomKind};
    use crate::symmetry::all_subgroups;

    fn two_cubes() -> InvertiblePolynomial {
        assemble(&vec![(AtomKind::Fermat, vec![3]); 2]).unwrap()
    }

    fn quintic() -> InvertiblePolynomial {
        assemble(&vec![(AtomKind::Fermat, vec![5]); 5]).unwrap()
    }

    #[test]
    fn unit_structure_constant_is_one() {
        let w = quintic();
        let cache = RingCache::new();
        let group = Subgroup::grading_subgroup(&w).unwrap();
        let algebra = FrobeniusAlgebra::new(&w, &group, &cache).unwrap();
        let e = SymmetryElement::identity(5);
        for g in algebra.group_elements().to_vec() {
            assert_eq!(algebra.gamma_scalar(&e, &g).unwrap(), Some(rat_int(1)));
            assert_eq!(algebra.gamma_scalar(&g, &e).unwrap(), Some(rat_int(1)));
        }
    }

    #[test]
    fn covering_failure_gives_zero() {
        let w = quintic();
        let cache = RingCache::new();
        let group = Subgroup::grading_subgroup(&w).unwrap();
        let algebra = FrobeniusAlgebra::new(&w, &group, &cache).unwrap();
        let j = crate::symmetry::j_element(&w).unwrap();
        // fix(j), fix(j) and fix(j^2) are all empty: no covering
        assert_eq!(algebra.gamma_scalar(&j, &j).unwrap(), Some(rat_int(0)));
    }

    #[test]
    fn inverse_pair_gives_hessian_class() {
        // on x^3 + y^3 with the determinant-one subgroup, the product of the
        // two twisted units is the normalized Hessian class of the full ring
        let w = two_cubes();
        let cache = RingCache::new();
        let sl = Subgroup::sl_subgroup(&w).unwrap();
        assert_eq!(*sl.order(), crate::exactmath::int(3));
        let algebra = FrobeniusAlgebra::new(&w, &sl, &cache).unwrap();
        let g = SymmetryElement::from_phases(vec![rat(1, 3), rat(2, 3)]);
        let ginv = g.inverse();
        let gamma = algebra.gamma(&g, &ginv).unwrap();
        // hess = 36 xy, mu = 4: expect 9 xy
        let expected = MultiPoly::monomial(vec![1, 1], rat_int(9));
        assert_eq!(gamma, expected);

        // pairing compatibility <1_g * 1_{g^-1}, 1_e> = <1_g, 1_{g^-1}>
        let ug = AlgebraElement::sector_unit(g.clone(), 2);
        let uginv = AlgebraElement::sector_unit(ginv, 2);
        let ue = AlgebraElement::sector_unit(SymmetryElement::identity(2), 2);
        let prod = algebra.product(&ug, &uginv).unwrap();
        assert_eq!(algebra.pair(&prod, &ue).unwrap(), rat_int(1));
        assert_eq!(algebra.pair(&ug, &uginv).unwrap(), rat_int(1));
    }

    #[test]
    fn module_action_of_untwisted_classes() {
        let w = two_cubes();
        let cache = RingCache::new();
        let sl = Subgroup::sl_subgroup(&w).unwrap();
        let algebra = FrobeniusAlgebra::new(&w, &sl, &cache).unwrap();
        let e = SymmetryElement::identity(2);
        let one = AlgebraElement::sector_unit(e.clone(), 2);
        let x = AlgebraElement::class(e.clone(), MultiPoly::monomial(vec![1, 0], rat_int(1)));
        let prod = algebra.product(&one, &x).unwrap();
        assert_eq!(prod, x);
        // x * x = x^2 reduces to zero in the cube ring
        let xx = algebra.product(&x, &x).unwrap();
        assert!(xx.is_zero());
    }

    #[test]
    fn sl_associativity_of_two_cubes() {
        let w = two_cubes();
        let cache = RingCache::new();
        let sl = Subgroup::sl_subgroup(&w).unwrap();
        let report = algebra_report(&w, &sl, &cache).unwrap();
        assert!(report.associative, "{:?}", report.failures);
        assert!(report.unit_law);
        assert!(report.grading_additive, "{:?}", report.failures);
        assert!(report.equivariant);
    }

    #[test]
    fn associativity_across_small_b_admissible_groups() {
        for w in [
            two_cubes(),
            assemble(&[(AtomKind::Loop, vec![2, 2]), (AtomKind::Fermat, vec![3])]).unwrap(),
            assemble(&[(AtomKind::Chain, vec![2, 3]), (AtomKind::Fermat, vec![2])]).unwrap(),
        ] {
            let cache = RingCache::new();
            for group in all_subgroups(&w) {
                if !group.is_b_admissible(&w).unwrap() {
                    continue;
                }
                let report = algebra_report(&w, &group, &cache).unwrap();
                assert!(report.associative, "{:?}", report.failures);
                assert!(report.unit_law, "{:?}", report.failures);
            }
        }
    }

    #[test]
    fn frobenius_compatibility_sampled() {
        let w = two_cubes();
        let cache = RingCache::new();
        let sl = Subgroup::sl_subgroup(&w).unwrap();
        let algebra = FrobeniusAlgebra::new(&w, &sl, &cache).unwrap();
        let units: Vec<AlgebraElement> = algebra
            .group_elements()
            .iter()
            .map(|g| AlgebraElement::sector_unit(g.clone(), 2))
            .collect();
        // even-degree untwisted classes join the units in the sample
        let e = SymmetryElement::identity(2);
        let mut sample = units.clone();
        sample.push(AlgebraElement::class(
            e,
            MultiPoly::monomial(vec![1, 1], rat_int(1)),
        ));
        for a in &sample {
            for b in &sample {
                for c in &sample {
                    let ab = algebra.product(a, b).unwrap();
                    let bc = algebra.product(b, c).unwrap();
                    assert_eq!(algebra.pair(&ab, c).unwrap(), algebra.pair(a, &bc).unwrap());
                }
            }
        }
    }
}
