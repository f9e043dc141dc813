//! Invertible quasihomogeneous polynomials presented by their square
//! exponent matrix (row i = monomial i, all coefficients one).

use crate::error::{Error, Result};
use crate::exactmath::{
    common_denominator, format_ratio, is_integer, IntMatrix, Rational, RationalMatrix,
};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// A polynomial with as many monomials as variables and nonsingular exponent
/// matrix.  The matrix is the single source of truth; variable names are
/// kept for display only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvertiblePolynomial {
    exponents: IntMatrix,
    names: Vec<String>,
}

/// Charges, weights and central charge of an invertible polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeVector {
    /// q_j in (0,1), the unique solution of E q = (1,...,1).
    pub charges: Vec<Rational>,
    /// Least common denominator of the charges; also the order of the
    /// exponential grading symmetry.
    pub degree: crate::exactmath::Int,
    /// Integer weights w_j with q_j = w_j / degree.
    pub weights: Vec<crate::exactmath::Int>,
    /// Central charge: sum of (1 - 2 q_j).
    pub central_charge: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AtomKind {
    Fermat,
    Loop,
    Chain,
}

/// One building block of the Kreuzer-Skarke shape of the polynomial:
/// a pure power, a cycle of links, or a chain of links ending in a power.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Atom {
    pub kind: AtomKind,
    /// Exponents a_1..a_k along the atom, all >= 2.
    pub exponents: Vec<u64>,
    /// Variable indices of the host polynomial occupied by the atom slots.
    pub variables: Vec<usize>,
}

/// Partition of the variables into atoms, plus the permutation sending each
/// original variable to its atom slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomDecomposition {
    pub atoms: Vec<Atom>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Predicates {
    pub is_calabi_yau: bool,
    pub is_gorenstein: bool,
    pub milnor_number: crate::exactmath::Int,
}

impl InvertiblePolynomial {
    /// Build from a square non-negative exponent matrix with det != 0.
    pub fn new(exponents: IntMatrix) -> Result<Self> {
        let n = exponents.rows();
        if exponents.cols() != n {
            return Err(Error::Invalid(format!(
                "exponent matrix must be square, got {}x{}",
                exponents.rows(),
                exponents.cols()
            )));
        }
        for i in 0..n {
            for j in 0..n {
                if exponents[(i, j)].is_negative() {
                    return Err(Error::Invalid(format!(
                        "negative exponent at monomial {i}, variable {j}"
                    )));
                }
            }
        }
        if exponents.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let names = (1..=n).map(|j| format!("x{j}")).collect();
        Ok(InvertiblePolynomial { exponents, names })
    }

    pub fn with_names(exponents: IntMatrix, names: Vec<String>) -> Result<Self> {
        if names.len() != exponents.rows() {
            return Err(Error::Invalid("one name per variable required".into()));
        }
        let mut p = Self::new(exponents)?;
        p.names = names;
        Ok(p)
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::new(IntMatrix::from_i64(rows))
    }

    pub fn n_vars(&self) -> usize {
        self.exponents.rows()
    }

    pub fn exponents(&self) -> &IntMatrix {
        &self.exponents
    }

    pub fn exponent(&self, monomial: usize, var: usize) -> u64 {
        use num_traits::ToPrimitive;
        self.exponents[(monomial, var)].to_u64().expect("exponent does not fit in u64")
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Exact inverse of the exponent matrix.
    pub fn inverse_exponents(&self) -> RationalMatrix {
        self.exponents
            .to_rational()
            .invert()
            .expect("nonsingular by construction")
    }

    /// Charges from the row sums of the inverse exponent matrix, checked
    /// against the quasihomogeneity identity E q = (1,..,1) and the open
    /// unit interval.
    pub fn charges(&self) -> Result<ChargeVector> {
        let n = self.n_vars();
        let inv = self.inverse_exponents();
        let charges: Vec<Rational> =
            (0..n).map(|i| inv.row(i).iter().sum::<Rational>()).collect();
        for (j, q) in charges.iter().enumerate() {
            if !q.is_positive() || *q >= Rational::one() {
                return Err(Error::ChargeOutOfRange { index: j + 1, value: format_ratio(q) });
            }
        }
        // quasihomogeneity: E q = all-ones, exactly
        let check = self.exponents.to_rational().mul_vec(&charges);
        if !check.iter().all(|x| x.is_one()) {
            return Err(Error::Invalid("quasihomogeneity identity failed".into()));
        }
        let degree = common_denominator(charges.iter());
        let weights = charges
            .iter()
            .map(|q| (q * Rational::from_integer(degree.clone())).to_integer())
            .collect();
        let central_charge = charges
            .iter()
            .map(|q| Rational::one() - q - q)
            .sum();
        Ok(ChargeVector { charges, degree, weights, central_charge })
    }

    /// Berglund-Hubsch transpose: same variables, transposed exponent matrix.
    pub fn transpose(&self) -> InvertiblePolynomial {
        InvertiblePolynomial {
            exponents: self.exponents.transpose(),
            names: self.names.clone(),
        }
    }

    /// Decompose into Fermat/loop/chain atoms, unique up to atom order.
    ///
    /// Exponent-1 entries in atom slots are rejected: they do not define an
    /// isolated singularity at the origin in the shapes handled here, so the
    /// boundary cases are flagged rather than silently accepted.
    pub fn decompose(&self) -> Result<AtomDecomposition> {
        let n = self.n_vars();
        // head(i) = variable with exponent >= 2 in monomial i, tail = the
        // variable carrying the linear factor of a link monomial.
        let mut head = vec![usize::MAX; n];
        let mut tail: Vec<Option<usize>> = vec![None; n];
        let mut head_exp = vec![0u64; n];
        for i in 0..n {
            let support: Vec<usize> = (0..n).filter(|&j| self.exponent(i, j) > 0).collect();
            match support.as_slice() {
                [j] => {
                    let a = self.exponent(i, *j);
                    if a < 2 {
                        return Err(Error::NotInvertibleType {
                            reason: format!("monomial {} is linear in variable {}", i + 1, j + 1),
                        });
                    }
                    head[i] = *j;
                    head_exp[i] = a;
                }
                [j, k] => {
                    let (h, t) = match (self.exponent(i, *j), self.exponent(i, *k)) {
                        (a, 1) if a >= 2 => ((*j, a), *k),
                        (1, a) if a >= 2 => ((*k, a), *j),
                        _ => {
                            return Err(Error::NotInvertibleType {
                                reason: format!(
                                    "monomial {} is not of the form x^a*y with a >= 2",
                                    i + 1
                                ),
                            })
                        }
                    };
                    head[i] = h.0;
                    head_exp[i] = h.1;
                    tail[i] = Some(t);
                }
                _ => {
                    return Err(Error::NotInvertibleType {
                        reason: format!("monomial {} involves more than two variables", i + 1),
                    })
                }
            }
        }
        // the head assignment must be a bijection monomials -> variables
        let mut monomial_of_head = vec![usize::MAX; n];
        for i in 0..n {
            if monomial_of_head[head[i]] != usize::MAX {
                return Err(Error::NotInvertibleType {
                    reason: format!("two monomials share the leading variable {}", head[i] + 1),
                });
            }
            monomial_of_head[head[i]] = i;
        }
        // successor map on variables: v -> tail of the monomial headed by v
        let succ: Vec<Option<usize>> = (0..n).map(|v| tail[monomial_of_head[v]]).collect();
        let exp_of_var: Vec<u64> = (0..n).map(|v| head_exp[monomial_of_head[v]]).collect();
        let mut indegree = vec![0usize; n];
        for v in 0..n {
            if let Some(s) = succ[v] {
                if s == v {
                    return Err(Error::NotInvertibleType {
                        reason: format!("self-link at variable {}", v + 1),
                    });
                }
                indegree[s] += 1;
                if indegree[s] > 1 {
                    return Err(Error::NotInvertibleType {
                        reason: format!("variable {} is linked twice", s + 1),
                    });
                }
            }
        }

        let mut seen = vec![false; n];
        let mut atoms = Vec::new();
        // chains start at in-degree-0 variables with an outgoing link, or are
        // isolated power monomials (Fermat)
        for start in 0..n {
            if indegree[start] != 0 || seen[start] {
                continue;
            }
            if succ[start].is_none() {
                seen[start] = true;
                atoms.push(Atom {
                    kind: AtomKind::Fermat,
                    exponents: vec![exp_of_var[start]],
                    variables: vec![start],
                });
                continue;
            }
            let mut vars = vec![start];
            seen[start] = true;
            let mut cur = start;
            while let Some(next) = succ[cur] {
                if seen[next] {
                    return Err(Error::NotInvertibleType {
                        reason: "link chain runs into an already used variable".into(),
                    });
                }
                seen[next] = true;
                vars.push(next);
                cur = next;
            }
            atoms.push(Atom {
                kind: AtomKind::Chain,
                exponents: vars.iter().map(|&v| exp_of_var[v]).collect(),
                variables: vars,
            });
        }
        // whatever is left consists of cycles
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut vars = vec![start];
            seen[start] = true;
            let mut cur = succ[start].expect("cycle variable has a successor");
            while cur != start {
                seen[cur] = true;
                vars.push(cur);
                cur = succ[cur].expect("cycle variable has a successor");
            }
            atoms.push(Atom {
                kind: AtomKind::Loop,
                exponents: vars.iter().map(|&v| exp_of_var[v]).collect(),
                variables: vars,
            });
        }
        atoms.sort();
        Ok(AtomDecomposition { atoms })
    }

    /// Calabi-Yau and Gorenstein predicates plus the Milnor number.
    pub fn predicates(&self) -> Result<Predicates> {
        let cv = self.charges()?;
        let is_calabi_yau = cv.charges.iter().sum::<Rational>().is_one();
        let is_gorenstein = cv
            .weights
            .iter()
            .all(|w| num_integer::Integer::mod_floor(&cv.degree, w).is_zero());
        let mu: Rational = cv
            .charges
            .iter()
            .map(|q| q.recip() - Rational::one())
            .product();
        if !is_integer(&mu) || !mu.is_positive() {
            return Err(Error::NonIntegerMilnor { value: format_ratio(&mu) });
        }
        Ok(Predicates { is_calabi_yau, is_gorenstein, milnor_number: mu.to_integer() })
    }

    /// Render in the expression syntax understood by the parser.
    pub fn to_expression(&self) -> String {
        let n = self.n_vars();
        let mut terms = Vec::with_capacity(n);
        for i in 0..n {
            let mut factors = Vec::new();
            for j in 0..n {
                match self.exponent(i, j) {
                    0 => {}
                    1 => factors.push(self.names[j].clone()),
                    e => factors.push(format!("{}^{}", self.names[j], e)),
                }
            }
            terms.push(factors.join("*"));
        }
        terms.join("+")
    }
}

impl AtomDecomposition {
    /// Canonical id string: atoms sorted by (kind, exponents), loops taken up
    /// to rotation and reflection.
    pub fn canonical_id(&self) -> String {
        let mut parts: Vec<String> = self
            .atoms
            .iter()
            .map(|a| {
                let exps = match a.kind {
                    AtomKind::Loop => canonical_cycle(&a.exponents),
                    _ => a.exponents.clone(),
                };
                let kind = match a.kind {
                    AtomKind::Fermat => "fermat",
                    AtomKind::Loop => "loop",
                    AtomKind::Chain => "chain",
                };
                format!(
                    "{}({})",
                    kind,
                    exps.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
                )
            })
            .collect();
        parts.sort();
        parts.join("+")
    }
}

/// Lexicographically minimal representative of a cycle under rotation and
/// reflection.
pub fn canonical_cycle(exps: &[u64]) -> Vec<u64> {
    let k = exps.len();
    let mut best: Option<Vec<u64>> = None;
    let reversed: Vec<u64> = exps.iter().rev().cloned().collect();
    for seq in [exps.to_vec(), reversed] {
        for shift in 0..k {
            let rotated: Vec<u64> =
                (0..k).map(|i| seq[(i + shift) % k]).collect();
            if best.as_ref().map(|b| rotated < *b).unwrap_or(true) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap()
}

/// Assemble the exponent matrix of a sum of atoms over disjoint variables.
pub fn assemble(atoms: &[(AtomKind, Vec<u64>)]) -> Result<InvertiblePolynomial> {
    let n: usize = atoms.iter().map(|(_, e)| e.len()).sum();
    let mut m = IntMatrix::zero(n.max(1), n.max(1));
    let mut base = 0usize;
    for (kind, exps) in atoms {
        let k = exps.len();
        match kind {
            AtomKind::Fermat => {
                assert_eq!(k, 1);
                m[(base, base)] = crate::exactmath::int(exps[0] as i64);
            }
            AtomKind::Loop => {
                assert!(k >= 2);
                for i in 0..k {
                    m[(base + i, base + i)] = crate::exactmath::int(exps[i] as i64);
                    m[(base + i, base + (i + 1) % k)] = crate::exactmath::int(1);
                }
            }
            AtomKind::Chain => {
                assert!(k >= 2);
                for i in 0..k {
                    m[(base + i, base + i)] = crate::exactmath::int(exps[i] as i64);
                    if i + 1 < k {
                        m[(base + i, base + i + 1)] = crate::exactmath::int(1);
                    }
                }
            }
        }
        base += k;
    }
    InvertiblePolynomial::new(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat, rat_int};

    pub fn quintic() -> InvertiblePolynomial {
        InvertiblePolynomial::from_rows(&[
            &[5, 0, 0, 0, 0],
            &[0, 5, 0, 0, 0],
            &[0, 0, 5, 0, 0],
            &[0, 0, 0, 5, 0],
            &[0, 0, 0, 0, 5],
        ])
        .unwrap()
    }

    pub fn chain_quintic() -> InvertiblePolynomial {
        InvertiblePolynomial::from_rows(&[
            &[4, 1, 0, 0, 0],
            &[0, 4, 1, 0, 0],
            &[0, 0, 4, 1, 0],
            &[0, 0, 0, 4, 1],
            &[0, 0, 0, 0, 5],
        ])
        .unwrap()
    }

    fn d4() -> InvertiblePolynomial {
        InvertiblePolynomial::from_rows(&[&[3, 0], &[1, 2]]).unwrap()
    }

    #[test]
    fn quintic_charges() {
        let cv = quintic().charges().unwrap();
        assert_eq!(cv.charges, vec![rat(1, 5); 5]);
        assert_eq!(cv.degree, int(5));
        assert_eq!(cv.weights, vec![int(1); 5]);
        assert_eq!(cv.central_charge, rat_int(3));
    }

    #[test]
    fn cubic_torus_charges() {
        let p = InvertiblePolynomial::from_rows(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]).unwrap();
        let cv = p.charges().unwrap();
        assert_eq!(cv.charges, vec![rat(1, 3); 3]);
        assert_eq!(cv.central_charge, rat_int(1));
    }

    #[test]
    fn d4_charges_from_inverse_row_sums() {
        let cv = d4().charges().unwrap();
        assert_eq!(cv.charges, vec![rat(1, 3), rat(1, 3)]);
    }

    #[test]
    fn charge_out_of_range_detected() {
        // x^2*y + y: charges (0, 1)
        let p = InvertiblePolynomial::from_rows(&[&[2, 1], &[0, 1]]).unwrap();
        assert!(matches!(p.charges(), Err(Error::ChargeOutOfRange { .. })));
    }

    #[test]
    fn decompose_quintic_into_fermats() {
        let dec = quintic().decompose().unwrap();
        assert_eq!(dec.atoms.len(), 5);
        assert!(dec.atoms.iter().all(|a| a.kind == AtomKind::Fermat && a.exponents == [5]));
        assert_eq!(dec.canonical_id(), "fermat(5)+fermat(5)+fermat(5)+fermat(5)+fermat(5)");
    }

    #[test]
    fn decompose_chain_quintic() {
        let dec = chain_quintic().decompose().unwrap();
        assert_eq!(dec.atoms.len(), 1);
        assert_eq!(dec.atoms[0].kind, AtomKind::Chain);
        assert_eq!(dec.atoms[0].exponents, vec![4, 4, 4, 4, 5]);
    }

    #[test]
    fn decompose_two_loop() {
        // x^3*y + y^3*x
        let p = InvertiblePolynomial::from_rows(&[&[3, 1], &[1, 3]]).unwrap();
        let dec = p.decompose().unwrap();
        assert_eq!(dec.atoms.len(), 1);
        assert_eq!(dec.atoms[0].kind, AtomKind::Loop);
        assert_eq!(dec.atoms[0].exponents, vec![3, 3]);
    }

    #[test]
    fn decompose_rejects_linear_entries() {
        // x*y + y^3 has charges in (0,1) but an exponent-1 head; flagged, not accepted
        let p = InvertiblePolynomial::from_rows(&[&[1, 1], &[0, 3]]).unwrap();
        let cv = p.charges().unwrap();
        assert_eq!(cv.charges, vec![rat(2, 3), rat(1, 3)]);
        assert!(matches!(p.decompose(), Err(Error::NotInvertibleType { .. })));
    }

    #[test]
    fn transpose_involution_and_charge_sum() {
        for p in [quintic(), chain_quintic(), d4()] {
            let t = p.transpose();
            assert_eq!(t.transpose(), p);
            let sum: Rational = p.charges().unwrap().charges.iter().sum();
            let tsum: Rational = t.charges().unwrap().charges.iter().sum();
            assert_eq!(sum, tsum);
        }
    }

    #[test]
    fn chain_quintic_transpose_weights() {
        let t = chain_quintic().transpose();
        let cv = t.charges().unwrap();
        assert_eq!(cv.degree, int(256));
        assert_eq!(cv.weights, vec![int(64), int(48), int(52), int(51), int(41)]);
    }

    #[test]
    fn quintic_predicates() {
        let pr = quintic().predicates().unwrap();
        assert!(pr.is_calabi_yau);
        assert!(pr.is_gorenstein);
        assert_eq!(pr.milnor_number, int(1024)); // 4^5 from the product formula
    }

    #[test]
    fn chain_quintic_transpose_not_gorenstein() {
        let pr = chain_quintic().transpose().predicates().unwrap();
        assert!(pr.is_calabi_yau);
        assert!(!pr.is_gorenstein); // 48 does not divide 256
    }

    #[test]
    fn d4_predicates() {
        let pr = d4().predicates().unwrap();
        assert!(!pr.is_calabi_yau); // charge sum 2/3
        assert_eq!(pr.milnor_number, int(4));
    }

    #[test]
    fn assemble_round_trips_through_decompose() {
        let p = assemble(&[
            (AtomKind::Chain, vec![4, 4, 4, 4, 5]),
        ])
        .unwrap();
        assert_eq!(p, chain_quintic());
        let mix = assemble(&[
            (AtomKind::Fermat, vec![3]),
            (AtomKind::Loop, vec![2, 3]),
        ])
        .unwrap();
        let dec = mix.decompose().unwrap();
        assert_eq!(dec.canonical_id(), "fermat(3)+loop(2,3)");
    }

    #[test]
    fn canonical_cycle_rotation_reflection() {
        assert_eq!(canonical_cycle(&[3, 2, 4]), vec![2, 3, 4]);
        assert_eq!(canonical_cycle(&[2, 4, 3]), vec![2, 3, 4]);
        assert_eq!(canonical_cycle(&[5, 5]), vec![5, 5]);
    }
}
