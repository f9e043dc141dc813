//! Bigraded A- and B-model state spaces assembled from sector Milnor data,
//! their residue pairings, the Hodge diamond of the associated quotient, and
//! the transposition-duality comparisons.

use crate::error::{Error, Result};
use crate::exactmath::{format_ratio, is_integer, Rational, RationalMatrix};
use crate::milnor::{Monomial, MultiPoly, RingCache};
use crate::polynomial::{AtomKind, InvertiblePolynomial};
use crate::symmetry::{j_element, Subgroup, SymmetryElement};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    A,
    B,
}

/// One basis class of a state space: a group-invariant monomial of the
/// sector ring, placed at its bidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateClass {
    pub monomial: Monomial,
    /// Form degree of the monomial inside its sector ring.
    pub charge_degree: Rational,
    pub bidegree: (Rational, Rational),
}

/// All classes attached to one group element.
#[derive(Clone, Debug)]
pub struct Sector {
    pub element: SymmetryElement,
    pub fixed: Vec<usize>,
    pub narrow: bool,
    pub age: Rational,
    pub age_inverse: Rational,
    pub classes: Vec<StateClass>,
}

/// A bigraded state space over a pair (polynomial, subgroup).
#[derive(Clone, Debug)]
pub struct StateSpace {
    pub flavor: Flavor,
    pub sectors: Vec<Sector>,
    pub total_dim: usize,
    /// Dimension table keyed by bidegree.
    pub table: BTreeMap<(Rational, Rational), usize>,
    pub central_charge: Rational,
    pub charge_sum: Rational,
    pub group_order: crate::exactmath::Int,
    pub a_admissible: bool,
    pub b_admissible: bool,
}

impl StateSpace {
    pub fn dims_by_total_degree(&self) -> BTreeMap<Rational, usize> {
        let mut out = BTreeMap::new();
        for ((a, b), d) in &self.table {
            *out.entry(a + b).or_insert(0) += d;
        }
        out
    }
}

fn build_space(
    w: &InvertiblePolynomial,
    group: &Subgroup,
    cache: &RingCache,
    flavor: Flavor,
) -> Result<StateSpace> {
    let cv = w.charges()?;
    let q: Rational = cv.charges.iter().sum();
    let j = j_element(w)?;
    let a_admissible = group.contains(w, &j);
    let generators = group.generator_elements(w);
    let b_admissible = generators.iter().all(|g| g.det_character().is_zero());

    if flavor == Flavor::A && !a_admissible {
        return Err(Error::NotAAdmissible);
    }

    let mut sectors = Vec::new();
    let mut table: BTreeMap<(Rational, Rational), usize> = BTreeMap::new();
    let mut total_dim = 0usize;

    for g in group.elements(w) {
        let fixed = g.fixed_indices();
        let ring = cache.ring(w, &fixed)?;
        let age = g.age();
        let age_inverse = g.inverse().age();
        let n_g = fixed.len();
        let mut classes = Vec::new();
        for idx in ring.invariant_indices(&generators) {
            let ell = ring.form_degree(idx).clone();
            let bidegree = match flavor {
                Flavor::A => {
                    if !is_integer(&ell) {
                        return Err(Error::NonIntegralDegree { value: format_ratio(&ell) });
                    }
                    (
                        &ell + &age - &q,
                        Rational::from_integer(crate::exactmath::int(n_g as i64)) - &ell + &age
                            - &q,
                    )
                }
                Flavor::B => (&ell + &age - &q, &ell + &age_inverse - &q),
            };
            *table.entry(bidegree.clone()).or_insert(0) += 1;
            total_dim += 1;
            classes.push(StateClass {
                monomial: ring.basis()[idx].clone(),
                charge_degree: ell,
                bidegree,
            });
        }
        sectors.push(Sector {
            narrow: g.is_narrow(),
            element: g,
            fixed,
            age,
            age_inverse,
            classes,
        });
    }

    Ok(StateSpace {
        flavor,
        sectors,
        total_dim,
        table,
        central_charge: cv.central_charge,
        charge_sum: q,
        group_order: group.order().clone(),
        a_admissible,
        b_admissible,
    })
}

/// The A-model state space of (w, G); requires the grading element in G.
pub fn a_state_space(
    w: &InvertiblePolynomial,
    group: &Subgroup,
    cache: &RingCache,
) -> Result<StateSpace> {
    build_space(w, group, cache, Flavor::A)
}

/// The B-model state space of (w, G); admissibility is only flagged.
pub fn b_state_space(
    w: &InvertiblePolynomial,
    group: &Subgroup,
    cache: &RingCache,
) -> Result<StateSpace> {
    build_space(w, group, cache, Flavor::B)
}

/// Result of pairing a state space with itself.
#[derive(Clone, Debug)]
pub struct PairingReport {
    pub total_dim: usize,
    pub full_rank: bool,
    /// Every nonzero entry couples total degree a with 2 c_hat - a.
    pub degree_complementary: bool,
}

/// Gram matrix of the sector-wise residue pairing, classes of sector g
/// against classes of sector g^{-1}, in the flat class order of the space.
pub fn pairing_matrix(
    w: &InvertiblePolynomial,
    space: &StateSpace,
    cache: &RingCache,
) -> Result<RationalMatrix> {
    let n = space.total_dim;
    let mut flat: Vec<(usize, usize)> = Vec::with_capacity(n);
    for (si, sector) in space.sectors.iter().enumerate() {
        for ci in 0..sector.classes.len() {
            flat.push((si, ci));
        }
    }
    let index_of_element: BTreeMap<&SymmetryElement, usize> = space
        .sectors
        .iter()
        .enumerate()
        .map(|(i, s)| (&s.element, i))
        .collect();

    let mut gram = RationalMatrix::zero(n, n);
    for (row, &(si, ci)) in flat.iter().enumerate() {
        let sector = &space.sectors[si];
        let inv = sector.element.inverse();
        let &ti = index_of_element
            .get(&inv)
            .expect("group enumeration is closed under inverses");
        let partner = &space.sectors[ti];
        let ring = cache.ring(w, &sector.fixed)?;
        for (col, &(sj, cj)) in flat.iter().enumerate() {
            if sj != ti {
                continue;
            }
            let f = MultiPoly::monomial(sector.classes[ci].monomial.clone(), Rational::one());
            let g = MultiPoly::monomial(partner.classes[cj].monomial.clone(), Rational::one());
            gram[(row, col)] = ring.residue_pairing(&f, &g);
        }
    }
    Ok(gram)
}

/// Rank and degree-complementarity verdict for the pairing of a space.
pub fn pairing_report(
    w: &InvertiblePolynomial,
    space: &StateSpace,
    cache: &RingCache,
) -> Result<PairingReport> {
    let gram = pairing_matrix(w, space, cache)?;
    let mut degrees: Vec<Rational> = Vec::with_capacity(space.total_dim);
    for sector in &space.sectors {
        for class in &sector.classes {
            degrees.push(&class.bidegree.0 + &class.bidegree.1);
        }
    }
    let twice_c: Rational = &space.central_charge + &space.central_charge;
    let mut degree_complementary = true;
    for i in 0..space.total_dim {
        for j in 0..space.total_dim {
            if !gram[(i, j)].is_zero() && &degrees[i] + &degrees[j] != twice_c {
                degree_complementary = false;
            }
        }
    }
    let full_rank = gram.rank() == space.total_dim;
    Ok(PairingReport { total_dim: space.total_dim, full_rank, degree_complementary })
}

/// Hodge-diamond view of an A-model state space under the Calabi-Yau
/// hypotheses; entries at non-integer bidegrees (possible when the group is
/// not inside SL) are carried separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diamond {
    /// Complex dimension of the associated quotient: N - 2.
    pub dimension: i64,
    pub integer_entries: BTreeMap<(i64, i64), usize>,
    pub rational_entries: BTreeMap<(Rational, Rational), usize>,
    pub total_dim: usize,
}

impl Diamond {
    pub fn hodge(&self, p: i64, q: i64) -> usize {
        self.integer_entries.get(&(p, q)).copied().unwrap_or(0)
    }

    /// Rows of the diamond as TSV: one row per p, columns indexed by q.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        out.push_str("p\\q");
        for qd in 0..=self.dimension {
            out.push('\t');
            out.push_str(&qd.to_string());
        }
        out.push('\n');
        for p in 0..=self.dimension {
            out.push_str(&p.to_string());
            for qd in 0..=self.dimension {
                out.push('\t');
                out.push_str(&self.hodge(p, qd).to_string());
            }
            out.push('\n');
        }
        if !self.rational_entries.is_empty() {
            out.push_str("# entries at non-integer bidegrees\n");
            for ((a, b), d) in &self.rational_entries {
                out.push_str(&format!("{}\t{}\t{}\n", format_ratio(a), format_ratio(b), d));
            }
        }
        out
    }
}

/// The orbifold-cohomology style diamond of the quotient attached to a
/// Calabi-Yau pair (w, G) with the grading element in G.
pub fn lg_cy_diamond(
    w: &InvertiblePolynomial,
    group: &Subgroup,
    cache: &RingCache,
) -> Result<Diamond> {
    let cv = w.charges()?;
    if !cv.charges.iter().sum::<Rational>().is_one() {
        return Err(Error::NotCalabiYau);
    }
    let space = a_state_space(w, group, cache)?;
    diamond_of_space(w, &space)
}

fn diamond_of_space(w: &InvertiblePolynomial, space: &StateSpace) -> Result<Diamond> {
    let dimension = w.n_vars() as i64 - 2;
    let mut integer_entries = BTreeMap::new();
    let mut rational_entries = BTreeMap::new();
    for ((a, b), d) in &space.table {
        if is_integer(a) && is_integer(b) {
            let key = (
                i64::try_from(a.to_integer()).expect("diamond index fits i64"),
                i64::try_from(b.to_integer()).expect("diamond index fits i64"),
            );
            *integer_entries.entry(key).or_insert(0) += d;
        } else {
            *rational_entries.entry((a.clone(), b.clone())).or_insert(0) += d;
        }
    }
    Ok(Diamond { dimension, integer_entries, rational_entries, total_dim: space.total_dim })
}

/// Entrywise comparison h^{p,q}(left) = h^{dim-p,q}(right) between the
/// diamonds of (w, G) and of the transposed pair.
#[derive(Clone, Debug)]
pub struct MirrorReport {
    pub pass: bool,
    /// Mismatched bidegrees (p, q, left count, flipped right count).
    pub mismatches: Vec<(i64, i64, usize, usize)>,
    /// Does the comparison hold after conjugating the right-hand diamond?
    pub pass_up_to_conjugation: bool,
    pub left: Diamond,
    pub right: Diamond,
}

pub fn mirror_check(
    w: &InvertiblePolynomial,
    group: &Subgroup,
    cache: &RingCache,
    dual_cache: &RingCache,
) -> Result<MirrorReport> {
    let left = lg_cy_diamond(w, group, cache)?;
    let wt = w.transpose();
    let dual = group.dual(w);
    let right = lg_cy_diamond(&wt, &dual, dual_cache)?;
    let dim = left.dimension;

    let mut keys: std::collections::BTreeSet<(i64, i64)> =
        left.integer_entries.keys().copied().collect();
    for &(p, q) in right.integer_entries.keys() {
        keys.insert((dim - p, q));
    }
    let mut mismatches = Vec::new();
    let mut conj_ok = true;
    for (p, q) in keys {
        let l = left.hodge(p, q);
        let r = right.hodge(dim - p, q);
        if l != r {
            mismatches.push((p, q, l, r));
        }
        if l != right.hodge(q, dim - p) {
            conj_ok = false;
        }
    }
    // non-integer entries must match one-to-one under the flip as well
    let mut rational_ok = left.rational_entries.len() == right.rational_entries.len();
    if rational_ok {
        let dim_rat = Rational::from_integer(crate::exactmath::int(dim));
        for ((a, b), d) in &left.rational_entries {
            let flipped = (&dim_rat - a, b.clone());
            if right.rational_entries.get(&flipped) != Some(d) {
                rational_ok = false;
                break;
            }
        }
    }
    let pass = mismatches.is_empty() && rational_ok;
    Ok(MirrorReport { pass, mismatches, pass_up_to_conjugation: conj_ok, left, right })
}

/// Bigraded-dimension comparison between the A space of (w, G) and the B
/// space of the transposed pair.
#[derive(Clone, Debug)]
pub struct KrawitzReport {
    pub equal: bool,
    pub left_total: usize,
    pub right_total: usize,
    /// Bidegrees where the two tables differ, with both counts.
    pub diffs: Vec<((Rational, Rational), usize, usize)>,
}

pub fn krawitz_compare(
    w: &InvertiblePolynomial,
    group: &Subgroup,
    cache: &RingCache,
    dual_cache: &RingCache,
) -> Result<KrawitzReport> {
    let left = a_state_space(w, group, cache)?;
    let wt = w.transpose();
    let dual = group.dual(w);
    let right = b_state_space(&wt, &dual, dual_cache)?;
    Ok(compare_tables(&left, &right))
}

pub fn compare_tables(left: &StateSpace, right: &StateSpace) -> KrawitzReport {
    let mut keys: std::collections::BTreeSet<(Rational, Rational)> =
        left.table.keys().cloned().collect();
    keys.extend(right.table.keys().cloned());
    let mut diffs = Vec::new();
    for key in keys {
        let l = left.table.get(&key).copied().unwrap_or(0);
        let r = right.table.get(&key).copied().unwrap_or(0);
        if l != r {
            diffs.push((key, l, r));
        }
    }
    KrawitzReport {
        equal: diffs.is_empty(),
        left_total: left.total_dim,
        right_total: right.total_dim,
        diffs,
    }
}

/// The subspace of classes invariant under the whole maximal symmetry group.
pub fn aut_invariant_subspace(
    w: &InvertiblePolynomial,
    space: &StateSpace,
    cache: &RingCache,
) -> Result<StateSpace> {
    let aut = crate::symmetry::full_group(w);
    let mut sectors = Vec::new();
    let mut table: BTreeMap<(Rational, Rational), usize> = BTreeMap::new();
    let mut total_dim = 0usize;
    for sector in &space.sectors {
        let ring = cache.ring(w, &sector.fixed)?;
        let classes: Vec<StateClass> = sector
            .classes
            .iter()
            .filter(|c| {
                aut.generators()
                    .iter()
                    .all(|h| ring.action_character(&c.monomial, h).is_zero())
            })
            .cloned()
            .collect();
        for c in &classes {
            *table.entry(c.bidegree.clone()).or_insert(0) += 1;
            total_dim += 1;
        }
        sectors.push(Sector { classes, ..sector.clone() });
    }
    Ok(StateSpace { sectors, total_dim, table, ..space.clone() })
}

/// For a pure power-sum polynomial, the explicit class-by-class mirror map:
/// sector presentation exponents and monomial exponents swap roles.  Checks
/// that the images enumerate the B space of the dual pair, bidegrees included.
pub fn fermat_mirror_bijection(
    w: &InvertiblePolynomial,
    group: &Subgroup,
    cache: &RingCache,
    dual_cache: &RingCache,
) -> Result<bool> {
    let dec = w.decompose()?;
    if !dec.atoms.iter().all(|a| a.kind == AtomKind::Fermat) {
        return Err(Error::Invalid(
            "explicit mirror map is implemented for pure power sums only".into(),
        ));
    }
    let n = w.n_vars();
    let mut order_of_var = vec![0u64; n];
    for atom in &dec.atoms {
        order_of_var[atom.variables[0]] = atom.exponents[0];
    }

    let space = a_state_space(w, group, cache)?;
    let wt = w.transpose();
    let dual = group.dual(w);
    let target = b_state_space(&wt, &dual, dual_cache)?;
    let cvt = wt.charges()?;
    let qsum: Rational = cvt.charges.iter().sum();

    let mut images: Vec<(Vec<Rational>, Monomial, (Rational, Rational))> = Vec::new();
    for sector in &space.sectors {
        let g = &sector.element;
        for class in &sector.classes {
            let mut phases = Vec::with_capacity(n);
            let mut monomial = vec![0u64; n];
            for j in 0..n {
                let a = crate::exactmath::int(order_of_var[j] as i64);
                if g.phase(j).is_zero() {
                    // fixed coordinate of g: the monomial exponent becomes a
                    // sector exponent on the mirror side
                    phases.push(Rational::new(
                        crate::exactmath::int(class.monomial[j] as i64 + 1),
                        a,
                    ));
                } else {
                    // moving coordinate: the sector exponent c (phase c/a)
                    // becomes the monomial exponent c - 1
                    let c = (g.phase(j) * Rational::from_integer(a)).to_integer();
                    let c: i64 = i64::try_from(c).expect("sector exponent fits i64");
                    monomial[j] = (c - 1) as u64;
                    phases.push(Rational::zero());
                }
            }
            let h = SymmetryElement::from_phases(phases);
            let ring = dual_cache.ring(&wt, &h.fixed_indices())?;
            let mut ell = ring.charge_sum().clone();
            for &j in &h.fixed_indices() {
                ell += &cvt.charges[j]
                    * Rational::from_integer(crate::exactmath::int(monomial[j] as i64));
            }
            let bidegree = (&ell + &h.age() - &qsum, &ell + &h.inverse().age() - &qsum);
            images.push((h.phases().to_vec(), monomial, bidegree));
        }
    }

    images.sort();
    let mut expected: Vec<(Vec<Rational>, Monomial, (Rational, Rational))> = Vec::new();
    for sector in &target.sectors {
        for class in &sector.classes {
            expected.push((
                sector.element.phases().to_vec(),
                class.monomial.clone(),
                class.bidegree.clone(),
            ));
        }
    }
    expected.sort();
    Ok(images == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat_int};
    use crate::polynomial::assemble;
    use crate::symmetry::all_subgroups;

    fn quintic() -> InvertiblePolynomial {
        assemble(&vec![(AtomKind::Fermat, vec![5]); 5]).unwrap()
    }

    fn chain_quintic() -> InvertiblePolynomial {
        assemble(&[(AtomKind::Chain, vec![4, 4, 4, 4, 5])]).unwrap()
    }

    fn cubic_torus() -> InvertiblePolynomial {
        assemble(&vec![(AtomKind::Fermat, vec![3]); 3]).unwrap()
    }

    #[test]
    fn quintic_grading_group_a_space() {
        let w = quintic();
        let cache = RingCache::new();
        let g = Subgroup::grading_subgroup(&w).unwrap();
        let space = a_state_space(&w, &g, &cache).unwrap();
        assert_eq!(space.total_dim, 208);
        // four narrow classes at total degrees 0, 2, 4, 6
        let mut narrow_degrees: Vec<Rational> = space
            .sectors
            .iter()
            .filter(|s| s.narrow)
            .flat_map(|s| s.classes.iter().map(|c| &c.bidegree.0 + &c.bidegree.1))
            .collect();
        narrow_degrees.sort();
        assert_eq!(narrow_degrees, vec![rat_int(0), rat_int(2), rat_int(4), rat_int(6)]);
        // broad bidegrees reproduce the middle cohomology of the quintic
        assert_eq!(space.table[&(rat_int(0), rat_int(3))], 1);
        assert_eq!(space.table[&(rat_int(1), rat_int(2))], 101);
        assert_eq!(space.table[&(rat_int(2), rat_int(1))], 101);
        assert_eq!(space.table[&(rat_int(3), rat_int(0))], 1);
    }

    #[test]
    fn quintic_untwisted_b_space() {
        let w = quintic();
        let cache = RingCache::new();
        let space = b_state_space(&w, &Subgroup::trivial(&w), &cache).unwrap();
        assert_eq!(space.total_dim, 1024);
        assert_eq!(space.table[&(rat_int(0), rat_int(0))], 1);
        assert_eq!(space.table[&(rat_int(1), rat_int(1))], 101);
        assert_eq!(space.table[&(rat_int(2), rat_int(2))], 101);
        assert_eq!(space.table[&(rat_int(3), rat_int(3))], 1);
        assert!(space.b_admissible);
    }

    #[test]
    fn sector_and_inverse_sector_dimensions_agree() {
        let w = chain_quintic();
        let cache = RingCache::new();
        let g = Subgroup::grading_subgroup(&w).unwrap();
        let space = b_state_space(&w, &g, &cache).unwrap();
        let by_element: BTreeMap<_, usize> = space
            .sectors
            .iter()
            .map(|s| (s.element.clone(), s.classes.len()))
            .collect();
        for s in &space.sectors {
            assert_eq!(by_element[&s.element.inverse()], s.classes.len());
        }
    }

    #[test]
    fn a_total_degree_is_monomial_independent() {
        // total degree in sector g must equal N_g + 2 age(g) - 2 q
        let w = chain_quintic();
        let cache = RingCache::new();
        let g = Subgroup::grading_subgroup(&w).unwrap();
        let space = a_state_space(&w, &g, &cache).unwrap();
        for sector in &space.sectors {
            let expected = Rational::from_integer(int(sector.fixed.len() as i64))
                + &sector.age
                + &sector.age
                - &space.charge_sum
                - &space.charge_sum;
            for class in &sector.classes {
                assert_eq!(&class.bidegree.0 + &class.bidegree.1, expected);
            }
        }
    }

    #[test]
    fn quintic_diamond_and_mirror() {
        let w = quintic();
        let cache = RingCache::new();
        let jw = Subgroup::grading_subgroup(&w).unwrap();
        let d = lg_cy_diamond(&w, &jw, &cache).unwrap();
        assert_eq!(d.dimension, 3);
        assert_eq!(d.hodge(1, 1), 1);
        assert_eq!(d.hodge(2, 1), 101);
        assert_eq!(d.hodge(3, 0), 1);
        assert_eq!(d.hodge(0, 0), 1);

        let sl = Subgroup::sl_subgroup(&w).unwrap();
        let d2 = lg_cy_diamond(&w, &sl, &cache).unwrap();
        assert_eq!(d2.hodge(1, 1), 101);
        assert_eq!(d2.hodge(2, 1), 1);

        let report = mirror_check(&w, &jw, &cache, &RingCache::new()).unwrap();
        assert!(report.pass, "mismatches: {:?}", report.mismatches);
    }

    #[test]
    fn diamond_requires_calabi_yau() {
        let d4 = InvertiblePolynomial::from_rows(&[&[3, 0], &[1, 2]]).unwrap();
        let cache = RingCache::new();
        let g = Subgroup::full(&d4);
        assert!(matches!(lg_cy_diamond(&d4, &g, &cache), Err(Error::NotCalabiYau)));
    }

    #[test]
    fn a_space_needs_grading_element() {
        let w = quintic();
        let cache = RingCache::new();
        let trivial = Subgroup::trivial(&w);
        assert!(matches!(a_state_space(&w, &trivial, &cache), Err(Error::NotAAdmissible)));
    }

    #[test]
    fn cubic_torus_self_mirror() {
        let w = cubic_torus();
        let cache = RingCache::new();
        let jw = Subgroup::grading_subgroup(&w).unwrap();
        let d = lg_cy_diamond(&w, &jw, &cache).unwrap();
        assert_eq!(d.dimension, 1);
        assert_eq!(d.hodge(0, 0), 1);
        assert_eq!(d.hodge(1, 0), 1);
        assert_eq!(d.hodge(0, 1), 1);
        assert_eq!(d.hodge(1, 1), 1);
        let report = mirror_check(&w, &jw, &cache, &RingCache::new()).unwrap();
        assert!(report.pass);
    }

    #[test]
    fn krawitz_tables_on_quintic() {
        let w = quintic();
        let cache = RingCache::new();
        let dual_cache = RingCache::new();
        for group in [
            Subgroup::grading_subgroup(&w).unwrap(),
            Subgroup::sl_subgroup(&w).unwrap(),
            Subgroup::full(&w),
        ] {
            let report = krawitz_compare(&w, &group, &cache, &dual_cache).unwrap();
            assert!(report.equal, "diffs: {:?}", report.diffs);
        }
    }

    #[test]
    fn full_group_a_space_matches_trivial_b_space() {
        let w = cubic_torus();
        let cache = RingCache::new();
        let full = Subgroup::full(&w);
        let a = a_state_space(&w, &full, &cache).unwrap();
        let b = b_state_space(
            &w.transpose(),
            &Subgroup::trivial(&w.transpose()),
            &RingCache::new(),
        )
        .unwrap();
        let report = compare_tables(&a, &b);
        assert!(report.equal, "diffs: {:?}", report.diffs);
    }

    #[test]
    fn a_and_b_spaces_have_equal_total_dimension() {
        let w = cubic_torus();
        let cache = RingCache::new();
        for group in all_subgroups(&w) {
            if !group.is_a_admissible(&w).unwrap() {
                continue;
            }
            let a = a_state_space(&w, &group, &cache).unwrap();
            let b = b_state_space(&w, &group, &cache).unwrap();
            assert_eq!(a.total_dim, b.total_dim);
        }
    }

    #[test]
    fn narrow_pairing_couples_inverse_sectors() {
        let w = quintic();
        let cache = RingCache::new();
        let jw = Subgroup::grading_subgroup(&w).unwrap();
        let space = a_state_space(&w, &jw, &cache).unwrap();
        let report = pairing_report(&w, &space, &cache).unwrap();
        assert!(report.full_rank);
        assert!(report.degree_complementary);
    }

    #[test]
    fn fermat_mirror_map_is_a_bijection() {
        let w = cubic_torus();
        let cache = RingCache::new();
        let dual_cache = RingCache::new();
        for group in all_subgroups(&w) {
            if !group.is_a_admissible(&w).unwrap() {
                continue;
            }
            assert!(fermat_mirror_bijection(&w, &group, &cache, &dual_cache).unwrap());
        }
    }

    #[test]
    fn aut_invariants_equal_narrow_for_fermat() {
        let w = quintic();
        let cache = RingCache::new();
        let jw = Subgroup::grading_subgroup(&w).unwrap();
        let space = a_state_space(&w, &jw, &cache).unwrap();
        let inv = aut_invariant_subspace(&w, &space, &cache).unwrap();
        assert_eq!(inv.total_dim, 4);
        for sector in &inv.sectors {
            if !sector.classes.is_empty() {
                assert!(sector.narrow);
            }
        }
    }

    #[test]
    fn d4_aut_invariants_exceed_narrow() {
        // with non-unit-fraction charges the invariant space can be larger
        // than the narrow span: x^3 + x*y^2 keeps a broad class
        let w = InvertiblePolynomial::from_rows(&[&[3, 0], &[1, 2]]).unwrap();
        let cache = RingCache::new();
        let full = Subgroup::full(&w);
        let space = b_state_space(&w, &full, &cache).unwrap();
        let inv = aut_invariant_subspace(&w, &space, &cache).unwrap();
        let broad_invariant = inv.sectors.iter().any(|s| !s.narrow && !s.classes.is_empty());
        assert!(broad_invariant);
    }
}
