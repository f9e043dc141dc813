//! Graded Milnor rings of coordinate restrictions of an invertible
//! polynomial: deterministic monomial bases, normal forms modulo the
//! Jacobian ideal, the Hessian class and the residue pairing.
//!
//! The quotient is computed degree by degree with exact sparse Gaussian
//! elimination; no Groebner machinery is needed because the grading bounds
//! every computation by the top degree.

use crate::error::{Error, Result};
use crate::exactmath::{frac_mod_one, is_integer, Rational, RationalMatrix};
use crate::polynomial::InvertiblePolynomial;
use crate::symmetry::SymmetryElement;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

/// Exponent vector over the full variable list of the host polynomial.
pub type Monomial = Vec<u64>;

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    n_vars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(n_vars: usize) -> Self {
        MultiPoly { n_vars, terms: BTreeMap::new() }
    }

    pub fn constant(n_vars: usize, c: Rational) -> Self {
        let mut p = Self::zero(n_vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; n_vars], c);
        }
        p
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let n_vars = m.len();
        let mut p = Self::zero(n_vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The defining polynomial of `w` (all coefficients one).
    pub fn from_invertible(w: &InvertiblePolynomial) -> Self {
        let n = w.n_vars();
        let mut p = Self::zero(n);
        for i in 0..n {
            let m: Monomial = (0..n).map(|j| w.exponent(i, j)).collect();
            p.add_term(m, Rational::one());
        }
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n_vars);
        }
        MultiPoly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n_vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    pub fn partial_derivative(&self, j: usize) -> Self {
        let mut out = Self::zero(self.n_vars);
        for (m, c) in &self.terms {
            if m[j] == 0 {
                continue;
            }
            let mut d = m.clone();
            d[j] -= 1;
            out.add_term(d, c * Rational::from_integer(crate::exactmath::int(m[j] as i64)));
        }
        out
    }

    /// Set all variables outside `keep` to zero.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let keep_mask: Vec<bool> = {
            let mut mask = vec![false; self.n_vars];
            for &j in keep {
                mask[j] = true;
            }
            mask
        };
        MultiPoly {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.iter().enumerate().all(|(j, &e)| e == 0 || keep_mask[j]))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Determinant of a square matrix of polynomials, by expansion along the
    /// first row with zero pruning.  Fine at the handful-of-variables scale.
    pub fn det(mat: &[Vec<MultiPoly>]) -> MultiPoly {
        let k = mat.len();
        if k == 0 {
            panic!("empty determinant");
        }
        let n_vars = mat[0][0].n_vars;
        fn go(mat: &[Vec<MultiPoly>], cols: &[usize], n_vars: usize) -> MultiPoly {
            let row = mat.len() - cols.len();
            if cols.is_empty() {
                return MultiPoly::one(n_vars);
            }
            let mut acc = MultiPoly::zero(n_vars);
            for (pos, &c) in cols.iter().enumerate() {
                let entry = &mat[row][c];
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> =
                    cols.iter().copied().filter(|&x| x != c).collect();
                let minor = go(mat, &rest, n_vars);
                let signed = if pos % 2 == 0 { entry.clone() } else { entry.scale(&-Rational::one()) };
                acc = acc.add(&signed.mul(&minor));
            }
            acc
        }
        let cols: Vec<usize> = (0..k).collect();
        go(mat, &cols, n_vars)
    }
}

/// An element of a Milnor ring in its reduced basis coordinates.
pub type NfCoords = Vec<(usize, Rational)>;

/// The graded Milnor ring of the restriction of `w` to a coordinate subset.
#[derive(Debug)]
pub struct GradedMilnorRing {
    index_set: Vec<usize>,
    charges: Vec<Rational>,
    /// Kept monomials, sorted by (ring degree, ascending lex).
    basis: Vec<Monomial>,
    basis_index: HashMap<Monomial, usize>,
    ring_degrees: Vec<Rational>,
    form_degrees: Vec<Rational>,
    mu: usize,
    /// Central charge of the restriction: top ring degree of the quotient.
    top_ring_degree: Rational,
    /// Sum of charges over the index set (form-degree shift).
    charge_sum: Rational,
    top_index: usize,
    /// Coefficient of the Hessian class on the top basis monomial.
    hessian_coeff: Rational,
    /// Expansion of every non-basis monomial of degree at most the top.
    reductions: HashMap<Monomial, NfCoords>,
}

impl GradedMilnorRing {
    /// Build the quotient ring of `w` restricted to `index_set`.
    pub fn build(w: &InvertiblePolynomial, index_set: &[usize]) -> Result<Self> {
        let n = w.n_vars();
        let cv = w.charges()?;
        let mut index_set: Vec<usize> = index_set.to_vec();
        index_set.sort_unstable();
        index_set.dedup();
        let fmt_indices =
            || index_set.iter().map(|j| (j + 1).to_string()).collect::<Vec<_>>().join(",");

        let w_poly = MultiPoly::from_invertible(w).restrict(&index_set);
        // every chosen variable must actually appear in the restriction
        for &j in &index_set {
            if !w_poly.terms().any(|(m, _)| m[j] > 0) {
                return Err(Error::DegenerateRestriction {
                    indices: fmt_indices(),
                    reason: format!("variable {} does not appear in the restriction", j + 1),
                });
            }
        }

        let top_ring_degree: Rational = index_set
            .iter()
            .map(|&j| Rational::one() - &cv.charges[j] - &cv.charges[j])
            .sum();
        let charge_sum: Rational = index_set.iter().map(|&j| cv.charges[j].clone()).sum();
        let mu_expected: Rational = index_set
            .iter()
            .map(|&j| cv.charges[j].recip() - Rational::one())
            .product();
        if !is_integer(&mu_expected) || !mu_expected.is_positive() {
            return Err(Error::DegenerateRestriction {
                indices: fmt_indices(),
                reason: format!(
                    "dimension formula gives {}",
                    crate::exactmath::format_ratio(&mu_expected)
                ),
            });
        }

        // enumerate monomials supported on the index set, one window of
        // degrees past the top to certify vanishing beyond it
        let window_pad = index_set
            .iter()
            .map(|&j| cv.charges[j].clone())
            .max()
            .unwrap_or_else(Rational::zero);
        let budget = &top_ring_degree + &window_pad;
        let mut levels: BTreeMap<Rational, Vec<Monomial>> = BTreeMap::new();
        let mut stack_m: Monomial = vec![0; n];
        enumerate_monomials(
            &index_set,
            &cv.charges,
            0,
            &mut stack_m,
            Rational::zero(),
            &budget,
            &mut levels,
        );

        let jacobians: Vec<(usize, MultiPoly, Rational)> = index_set
            .iter()
            .map(|&j| {
                let d = w_poly.partial_derivative(j);
                let deg = Rational::one() - &cv.charges[j];
                (j, d, deg)
            })
            .collect();

        let mut basis: Vec<Monomial> = Vec::new();
        let mut ring_degrees: Vec<Rational> = Vec::new();
        let mut reductions: HashMap<Monomial, NfCoords> = HashMap::new();

        for (degree, monomials) in &levels {
            // columns sorted descending-lex so the surviving (non-pivot)
            // monomials are the lexicographically smallest independent ones
            let mut cols: Vec<Monomial> = monomials.clone();
            cols.sort_unstable_by(|a, b| b.cmp(a));
            let col_of: HashMap<&Monomial, usize> =
                cols.iter().enumerate().map(|(i, m)| (m, i)).collect();

            // ideal rows in this degree: m' * dW/dx_j
            let mut rows: Vec<Vec<(usize, Rational)>> = Vec::new();
            for (_, jac, jac_deg) in &jacobians {
                let want = degree - jac_deg;
                if let Some(lower) = levels.get(&want) {
                    for m in lower {
                        let mut row: Vec<(usize, Rational)> = jac
                            .terms()
                            .map(|(jm, c)| {
                                let prod: Monomial =
                                    m.iter().zip(jm).map(|(a, b)| a + b).collect();
                                (col_of[&prod], c.clone())
                            })
                            .collect();
                        row.sort_unstable_by_key(|(c, _)| *c);
                        rows.push(row);
                    }
                }
            }

            let rref = sparse_rref(rows, cols.len());
            let above_top = degree > &top_ring_degree;
            if above_top {
                // the quotient must vanish strictly above the top degree
                if rref.pivot_rows.len() != cols.len() {
                    return Err(Error::DegenerateRestriction {
                        indices: fmt_indices(),
                        reason: format!(
                            "nonzero piece in degree {} above the top degree {}",
                            crate::exactmath::format_ratio(degree),
                            crate::exactmath::format_ratio(&top_ring_degree)
                        ),
                    });
                }
                continue;
            }

            let pivot_cols: std::collections::BTreeSet<usize> =
                rref.pivot_rows.iter().map(|r| r[0].0).collect();
            let mut kept_of_col: HashMap<usize, usize> = HashMap::new();
            // kept monomials in ascending lex = descending column order
            for c in (0..cols.len()).rev() {
                if !pivot_cols.contains(&c) {
                    kept_of_col.insert(c, basis.len());
                    basis.push(cols[c].clone());
                    ring_degrees.push(degree.clone());
                }
            }
            for row in &rref.pivot_rows {
                let (pc, _) = row[0].clone();
                let expansion: NfCoords = row[1..]
                    .iter()
                    .map(|(c, coeff)| (kept_of_col[c], -coeff.clone()))
                    .collect();
                reductions.insert(cols[pc].clone(), expansion);
            }
        }

        if Rational::from_integer(crate::exactmath::int(basis.len() as i64)) != mu_expected {
            return Err(Error::DegenerateRestriction {
                indices: fmt_indices(),
                reason: format!(
                    "computed dimension {} does not match the product formula {}",
                    basis.len(),
                    crate::exactmath::format_ratio(&mu_expected)
                ),
            });
        }
        let mu = basis.len();

        // the top piece must be one-dimensional and contain the Hessian class
        let top_indices: Vec<usize> =
            (0..mu).filter(|&i| ring_degrees[i] == top_ring_degree).collect();
        if top_indices.len() != 1 {
            return Err(Error::DegenerateRestriction {
                indices: fmt_indices(),
                reason: format!("top degree piece has dimension {}", top_indices.len()),
            });
        }
        let top_index = top_indices[0];

        let form_degrees: Vec<Rational> =
            ring_degrees.iter().map(|r| r + &charge_sum).collect();

        let mut ring = GradedMilnorRing {
            index_set,
            charges: cv.charges.clone(),
            basis_index: basis
                .iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), i))
                .collect(),
            basis,
            ring_degrees,
            form_degrees,
            mu,
            top_ring_degree,
            charge_sum,
            top_index,
            hessian_coeff: Rational::zero(),
            reductions,
        };

        let hess = ring.hessian_poly(&w_poly);
        let hess_nf = ring.normal_form(&hess);
        match hess_nf.as_slice() {
            [(i, c)] if *i == ring.top_index && !c.is_zero() => {
                ring.hessian_coeff = c.clone();
            }
            _ => {
                return Err(Error::DegenerateRestriction {
                    indices: ring
                        .index_set
                        .iter()
                        .map(|j| (j + 1).to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    reason: "Hessian class does not span the top degree piece".into(),
                })
            }
        }
        Ok(ring)
    }

    fn hessian_poly(&self, w_poly: &MultiPoly) -> MultiPoly {
        let n = w_poly.n_vars();
        if self.index_set.is_empty() {
            return MultiPoly::one(n);
        }
        let k = self.index_set.len();
        let mut mat = vec![vec![MultiPoly::zero(n); k]; k];
        for (a, &i) in self.index_set.iter().enumerate() {
            let di = w_poly.partial_derivative(i);
            for (b, &j) in self.index_set.iter().enumerate() {
                mat[a][b] = di.partial_derivative(j);
            }
        }
        MultiPoly::det(&mat)
    }

    pub fn index_set(&self) -> &[usize] {
        &self.index_set
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Form degree (monomial-plus-volume-form grading) of a basis element.
    pub fn form_degree(&self, i: usize) -> &Rational {
        &self.form_degrees[i]
    }

    pub fn ring_degree(&self, i: usize) -> &Rational {
        &self.ring_degrees[i]
    }

    /// Central charge of the restriction = top ring degree.
    pub fn top_ring_degree(&self) -> &Rational {
        &self.top_ring_degree
    }

    pub fn charge_sum(&self) -> &Rational {
        &self.charge_sum
    }

    pub fn top_index(&self) -> usize {
        self.top_index
    }

    pub fn hessian_coeff(&self) -> &Rational {
        &self.hessian_coeff
    }

    fn monomial_ring_degree(&self, m: &Monomial) -> Rational {
        m.iter()
            .enumerate()
            .map(|(j, &e)| Rational::from_integer(crate::exactmath::int(e as i64)) * &self.charges[j])
            .sum()
    }

    /// Reduce a polynomial to coordinates on the monomial basis.  Terms with
    /// support outside the index set are restricted away first; terms above
    /// the top degree vanish in the quotient.
    pub fn normal_form(&self, p: &MultiPoly) -> NfCoords {
        let p = p.restrict(&self.index_set);
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (m, c) in p.terms() {
            if self.monomial_ring_degree(m) > self.top_ring_degree {
                continue;
            }
            if let Some(&i) = self.basis_index.get(m) {
                *acc.entry(i).or_insert_with(Rational::zero) += c;
            } else if let Some(expansion) = self.reductions.get(m) {
                for (i, coeff) in expansion {
                    *acc.entry(*i).or_insert_with(Rational::zero) += coeff * c;
                }
            } else {
                unreachable!("monomial of admissible degree not seen during construction");
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Reconstruct the polynomial representative of basis coordinates.
    pub fn coords_poly(&self, coords: &NfCoords) -> MultiPoly {
        let mut p = MultiPoly::zero(self.charges.len());
        for (i, c) in coords {
            p.add_term(self.basis[*i].clone(), c.clone());
        }
        p
    }

    /// Residue pairing: the coefficient of fg on hess/mu in the top piece.
    pub fn residue_pairing(&self, f: &MultiPoly, g: &MultiPoly) -> Rational {
        let nf = self.normal_form(&f.mul(g));
        let top = nf
            .iter()
            .find(|(i, _)| *i == self.top_index)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero);
        top * Rational::from_integer(crate::exactmath::int(self.mu as i64)) / &self.hessian_coeff
    }

    pub fn residue_pairing_basis(&self, i: usize, j: usize) -> Rational {
        let f = MultiPoly::monomial(self.basis[i].clone(), Rational::one());
        let g = MultiPoly::monomial(self.basis[j].clone(), Rational::one());
        self.residue_pairing(&f, &g)
    }

    /// Character of the action of `h` on the class of `m` (with its volume
    /// form): sum over the index set of (m_j + 1) * phase_j, mod 1.
    pub fn action_character(&self, m: &Monomial, h: &SymmetryElement) -> Rational {
        let mut acc = Rational::zero();
        for &j in &self.index_set {
            acc += h.phase(j) * Rational::from_integer(crate::exactmath::int(m[j] as i64 + 1));
        }
        frac_mod_one(&acc)
    }

    /// Basis indices fixed by every one of the given group generators.
    pub fn invariant_indices(&self, generators: &[SymmetryElement]) -> Vec<usize> {
        (0..self.mu)
            .filter(|&i| {
                generators
                    .iter()
                    .all(|h| self.action_character(&self.basis[i], h).is_zero())
            })
            .collect()
    }

    /// Gram matrix of the residue pairing on the full basis.
    pub fn gram_matrix(&self) -> RationalMatrix {
        let mut g = RationalMatrix::zero(self.mu, self.mu);
        for i in 0..self.mu {
            for j in i..self.mu {
                // degree complementarity: only complementary degrees pair
                if &self.ring_degrees[i] + &self.ring_degrees[j] != self.top_ring_degree {
                    continue;
                }
                let v = self.residue_pairing_basis(i, j);
                g[(i, j)] = v.clone();
                g[(j, i)] = v;
            }
        }
        g
    }

    /// Exact full-rank check of the residue pairing, block by graded piece.
    pub fn gram_is_nondegenerate(&self) -> bool {
        let mut by_degree: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
        for i in 0..self.mu {
            by_degree.entry(self.ring_degrees[i].clone()).or_default().push(i);
        }
        for (deg, rows_idx) in &by_degree {
            let complement = &self.top_ring_degree - deg;
            if deg > &complement {
                continue;
            }
            let cols_idx = match by_degree.get(&complement) {
                Some(c) => c,
                None => return false,
            };
            if rows_idx.len() != cols_idx.len() {
                return false;
            }
            let mut block = RationalMatrix::zero(rows_idx.len(), cols_idx.len());
            for (a, &i) in rows_idx.iter().enumerate() {
                for (b, &j) in cols_idx.iter().enumerate() {
                    block[(a, b)] = self.residue_pairing_basis(i, j);
                }
            }
            if block.rank() != rows_idx.len() {
                return false;
            }
        }
        true
    }
}

#[allow(clippy::too_many_arguments)]
fn enumerate_monomials(
    index_set: &[usize],
    charges: &[Rational],
    pos: usize,
    current: &mut Monomial,
    degree: Rational,
    budget: &Rational,
    levels: &mut BTreeMap<Rational, Vec<Monomial>>,
) {
    if pos == index_set.len() {
        levels.entry(degree).or_default().push(current.clone());
        return;
    }
    let j = index_set[pos];
    let q = &charges[j];
    let mut e = 0u64;
    let mut d = degree.clone();
    loop {
        if d > *budget {
            break;
        }
        current[j] = e;
        enumerate_monomials(index_set, charges, pos + 1, current, d.clone(), budget, levels);
        e += 1;
        d += q;
    }
    current[j] = 0;
}

struct Rref {
    /// Fully reduced pivot rows, each sorted with the pivot (coefficient 1)
    /// first and only non-pivot columns after it.
    pivot_rows: Vec<Vec<(usize, Rational)>>,
}

/// Exact sparse reduced row echelon form over the rationals.
fn sparse_rref(rows: Vec<Vec<(usize, Rational)>>, n_cols: usize) -> Rref {
    let mut pivot_of_col: HashMap<usize, usize> = HashMap::new();
    let mut echelon: Vec<Vec<(usize, Rational)>> = Vec::new();

    for mut row in rows {
        loop {
            row.retain(|(_, c)| !c.is_zero());
            let lead = match row.first() {
                Some((c, _)) => *c,
                None => break,
            };
            match pivot_of_col.get(&lead) {
                Some(&r) => {
                    let factor = row[0].1.clone();
                    row = row_sub_scaled(&row, &echelon[r], &factor);
                }
                None => {
                    let lead_coeff = row[0].1.clone();
                    for (_, c) in row.iter_mut() {
                        *c /= &lead_coeff;
                    }
                    pivot_of_col.insert(lead, echelon.len());
                    echelon.push(row);
                    break;
                }
            }
        }
    }

    // back-substitution to the reduced form
    let order: Vec<usize> = {
        let mut cols: Vec<usize> = pivot_of_col.keys().copied().collect();
        cols.sort_unstable_by(|a, b| b.cmp(a));
        cols.into_iter().map(|c| pivot_of_col[&c]).collect()
    };
    for &r in &order {
        let mut row = echelon[r].clone();
        let mut changed = true;
        while changed {
            changed = false;
            let mut replacement = None;
            for (c, coeff) in row.iter().skip(1) {
                if let Some(&pr) = pivot_of_col.get(c) {
                    replacement = Some(row_sub_scaled(&row, &echelon[pr], coeff));
                    break;
                }
            }
            if let Some(newrow) = replacement {
                row = newrow;
                changed = true;
            }
        }
        echelon[r] = row;
    }

    let _ = n_cols;
    Rref { pivot_rows: echelon }
}

fn row_sub_scaled(
    row: &[(usize, Rational)],
    pivot_row: &[(usize, Rational)],
    factor: &Rational,
) -> Vec<(usize, Rational)> {
    // row - factor * pivot_row, both sorted by column
    let mut out = Vec::with_capacity(row.len() + pivot_row.len());
    let mut a = row.iter().peekable();
    let mut b = pivot_row.iter().peekable();
    while a.peek().is_some() || b.peek().is_some() {
        match (a.peek(), b.peek()) {
            (Some((ca, _)), Some((cb, _))) if ca == cb => {
                let (_, va) = a.next().unwrap();
                let (_, vb) = b.next().unwrap();
                let v = va - factor * vb;
                if !v.is_zero() {
                    out.push((*ca, v));
                }
            }
            (Some((ca, _)), Some((cb, _))) if ca < cb => {
                let (c, v) = a.next().unwrap();
                out.push((*c, v.clone()));
            }
            (Some(_), Some(_)) | (None, Some(_)) => {
                let (c, v) = b.next().unwrap();
                let nv = -(factor * v);
                if !nv.is_zero() {
                    out.push((*c, nv));
                }
            }
            (Some(_), None) => {
                let (c, v) = a.next().unwrap();
                out.push((*c, v.clone()));
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Thread-safe cache of constructed rings, keyed by index set.
#[derive(Default)]
pub struct RingCache {
    rings: Mutex<HashMap<Vec<usize>, Arc<GradedMilnorRing>>>,
}

impl RingCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ring(&self, w: &InvertiblePolynomial, index_set: &[usize]) -> Result<Arc<GradedMilnorRing>> {
        let mut key: Vec<usize> = index_set.to_vec();
        key.sort_unstable();
        key.dedup();
        if let Some(r) = self.rings.lock().unwrap().get(&key) {
            return Ok(Arc::clone(r));
        }
        let ring = Arc::new(GradedMilnorRing::build(w, &key)?);
        self.rings
            .lock()
            .unwrap()
            .entry(key)
            .or_insert_with(|| Arc::clone(&ring));
        Ok(ring)
    }
}
