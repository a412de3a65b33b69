//! Graded lexicographic orders, binomial reduction and Buchberger's
//! algorithm, specialised to pure-difference binomials.
//!
//! A pure difference stays a pure difference under S-pairs and reduction, so
//! no coefficient field is needed: a polynomial here is either zero or a
//! [`Binomial`] whose `plus` side is its leading monomial once oriented.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::toric::{Binomial, Monomial};

/// Graded lexicographic order. `priority` lists variable indices from the
/// smallest variable to the largest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    priority: Vec<usize>,
    rank: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(priority: Vec<usize>) -> Result<Self> {
        let m = priority.len();
        let mut rank = vec![usize::MAX; m];
        for (pos, &var) in priority.iter().enumerate() {
            if var >= m || rank[var] != usize::MAX {
                return Err(Error::InvalidParameter(format!(
                    "variable priority {priority:?} is not a permutation of 0..{m}"
                )));
            }
            rank[var] = pos;
        }
        Ok(MonomialOrder { priority, rank })
    }

    /// `x_0 < x_1 < ... < x_{m-1}`.
    pub fn identity(num_vars: usize) -> Self {
        MonomialOrder {
            priority: (0..num_vars).collect(),
            rank: (0..num_vars).collect(),
        }
    }

    /// Builds the order from variable names listed smallest to largest.
    pub fn from_names(names: &[&str], labels: &[String]) -> Result<Self> {
        let priority = names
            .iter()
            .map(|name| {
                labels
                    .iter()
                    .position(|l| l == name.trim())
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown variable `{name}` in order")))
            })
            .collect::<Result<Vec<_>>>()?;
        if priority.len() != labels.len() {
            return Err(Error::InvalidParameter(format!(
                "order lists {} variables, ring has {}",
                priority.len(),
                labels.len()
            )));
        }
        Self::new(priority)
    }

    pub fn num_vars(&self) -> usize {
        self.priority.len()
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    /// Position of `var` in the priority list; larger means a larger variable.
    pub fn rank(&self, var: usize) -> usize {
        self.rank[var]
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.num_vars() != b.num_vars() || a.num_vars() != self.num_vars() {
            return Err(Error::InvalidParameter(format!(
                "cannot compare monomials in {} and {} variables under an order on {}",
                a.num_vars(),
                b.num_vars(),
                self.num_vars()
            )));
        }
        Ok(self.cmp(a, b))
    }

    pub(crate) fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| {
            let (ea, eb) = (a.exponents(), b.exponents());
            self.priority
                .iter()
                .rev()
                .map(|&v| ea[v].cmp(&eb[v]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }

    /// Re-orients `b` so that its leading monomial is `plus`.
    pub fn orient(&self, b: &Binomial) -> Binomial {
        match self.cmp(&b.plus, &b.minus) {
            Ordering::Less => b.flipped(),
            _ => b.clone(),
        }
    }

    pub fn is_oriented(&self, b: &Binomial) -> bool {
        self.cmp(&b.plus, &b.minus) == Ordering::Greater
    }
}

/// The leading monomial of `b` together with `b` oriented so that it leads.
pub fn leading_term(order: &MonomialOrder, b: &Binomial) -> Result<(Monomial, Binomial)> {
    match order.compare(&b.plus, &b.minus)? {
        Ordering::Equal => Err(Error::InvariantViolation("binomial with equal sides".into())),
        _ => {
            let oriented = order.orient(b);
            Ok((oriented.plus.clone(), oriented))
        }
    }
}

/// Result of forming an S-pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SPair {
    Zero,
    /// Leading terms are coprime, so the pair reduces to zero and is skipped.
    Coprime,
    Binomial(Binomial),
}

/// `lcm/lt(f) * f - lcm/lt(g) * g` for oriented `f`, `g`.
///
/// The result is not gcd-normalized: a common monomial factor is part of the
/// S-polynomial and is reported as such.
pub fn s_pair(f: &Binomial, g: &Binomial, order: &MonomialOrder) -> Result<SPair> {
    if !order.is_oriented(f) || !order.is_oriented(g) {
        return Err(Error::InvariantViolation("S-pair inputs must be oriented".into()));
    }
    if f.plus.is_coprime(&g.plus) {
        return Ok(SPair::Coprime);
    }
    let lcm = f.plus.lcm(&g.plus);
    let from_g = lcm.div(&g.plus).expect("lcm is a multiple").mul(&g.minus);
    let from_f = lcm.div(&f.plus).expect("lcm is a multiple").mul(&f.minus);
    Ok(match Binomial::new(from_g, from_f) {
        Some(b) => SPair::Binomial(order.orient(&b)),
        None => SPair::Zero,
    })
}

fn check_basis(basis: &[Binomial], order: &MonomialOrder) -> Result<()> {
    match basis.iter().position(|b| !order.is_oriented(b)) {
        Some(k) => Err(Error::InvariantViolation(format!(
            "basis element {k} is not oriented with its leading term first"
        ))),
        None => Ok(()),
    }
}

/// Normal form of a monomial: rewrite with the first basis element whose
/// leading term (`plus`) divides it until none does. The basis must already
/// be oriented.
pub fn normal_form_monomial(m: &Monomial, basis: &[Binomial]) -> Monomial {
    let mut current = m.clone();
    while let Some(b) = basis.iter().find(|b| b.plus.divides(&current)) {
        current = current.div(&b.plus).expect("divisibility checked").mul(&b.minus);
    }
    current
}

/// Fully reduces a binomial modulo `basis`; `None` is the zero polynomial.
///
/// The normal form of a pure difference is the difference of the normal
/// forms of its two monomials, so both sides are reduced independently.
pub fn reduce(b: Option<&Binomial>, basis: &[Binomial], order: &MonomialOrder) -> Result<Option<Binomial>> {
    check_basis(basis, order)?;
    let Some(b) = b else { return Ok(None) };
    let plus = normal_form_monomial(&b.plus, basis);
    let minus = normal_form_monomial(&b.minus, basis);
    Ok(Binomial::new(plus, minus).map(|r| order.orient(&r)))
}

fn sort_by_order(basis: &mut [Binomial], order: &MonomialOrder) {
    basis.sort_by(|a, b| order.cmp(&a.plus, &b.plus).then_with(|| order.cmp(&a.minus, &b.minus)));
}

/// The reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed lowest lcm degree first; the product and chain
/// criteria skip pairs known to reduce to zero.
pub fn buchberger(gens: &[Binomial], order: &MonomialOrder) -> Result<Vec<Binomial>> {
    let mut basis: Vec<Binomial> = Vec::new();
    for g in gens {
        if g.num_vars() != order.num_vars() {
            return Err(Error::InvalidParameter("generator and order have different variable counts".into()));
        }
        let oriented = order.orient(g);
        if !basis.contains(&oriented) {
            basis.push(oriented);
        }
    }

    // Pending pairs keyed by (lcm degree, j, i); `pending` mirrors the heap
    // so the chain criterion can ask whether a pair was already handled.
    let mut heap: BinaryHeap<Reverse<(u64, usize, usize)>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pairs = |heap: &mut BinaryHeap<_>, pending: &mut HashSet<_>, basis: &[Binomial], j: usize| {
        for i in 0..j {
            heap.push(Reverse((basis[i].plus.lcm(&basis[j].plus).degree(), j, i)));
            pending.insert((i, j));
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut heap, &mut pending, &basis, j);
    }
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    while let Some(Reverse((_, j, i))) = heap.pop() {
        pending.remove(&(i, j));
        if basis[i].plus.is_coprime(&basis[j].plus) {
            continue;
        }
        // Chain criterion: some lt(k) divides the lcm and both (i, k) and
        // (j, k) have already been dealt with.
        let lcm = basis[i].plus.lcm(&basis[j].plus);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].plus.divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chained {
            continue;
        }
        let s = match s_pair(&basis[i], &basis[j], order)? {
            SPair::Binomial(s) => s,
            SPair::Zero | SPair::Coprime => continue,
        };
        if let Some(r) = reduce(Some(&s), &basis, order)? {
            basis.push(r);
            push_pairs(&mut heap, &mut pending, &basis, basis.len() - 1);
        }
    }

    // Minimalize leading terms, keeping the first of any equal pair.
    let mut minimal: Vec<Binomial> = Vec::new();
    for (k, b) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(l, other)| {
            l != k && other.plus.divides(&b.plus) && (other.plus != b.plus || l < k)
        });
        if !redundant {
            minimal.push(b.clone());
        }
    }
    // Tail-reduce. A leading term never divides a smaller monomial, so using
    // the whole minimal basis for the tail is safe.
    let snapshot = minimal.clone();
    for b in &mut minimal {
        b.minus = normal_form_monomial(&b.minus, &snapshot);
        if !order.is_oriented(b) {
            return Err(Error::InvariantViolation("tail reduction overtook the leading term".into()));
        }
    }
    sort_by_order(&mut minimal, order);
    Ok(minimal)
}

/// A failed Buchberger check: the pair indices, the S-pair and its remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailingPair {
    pub i: usize,
    pub j: usize,
    pub s_pair: Binomial,
    pub remainder: Binomial,
}

/// Buchberger's criterion: every S-pair reduces to zero modulo `gens`.
///
/// Returns the first failing pair in `(i, j)` order when the criterion fails.
pub fn is_groebner_basis(gens: &[Binomial], order: &MonomialOrder) -> Result<Option<FailingPair>> {
    let basis: Vec<Binomial> = gens.iter().map(|g| order.orient(g)).collect();
    for j in 0..basis.len() {
        for i in 0..j {
            if let SPair::Binomial(s) = s_pair(&basis[i], &basis[j], order)? {
                if let Some(remainder) = reduce(Some(&s), &basis, order)? {
                    return Ok(Some(FailingPair { i, j, s_pair: s, remainder }));
                }
            }
        }
    }
    Ok(None)
}

/// A monomial ideal given by its minimal generators, lexicographically sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialIdeal {
    pub num_vars: usize,
    pub generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(num_vars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort();
        all.dedup();
        let generators: Vec<Monomial> = all
            .iter()
            .filter(|m| !all.iter().any(|o| o != *m && o.divides(m)))
            .cloned()
            .collect();
        MonomialIdeal { num_vars, generators }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Initial ideal spanned by the leading terms of a Gröbner basis.
///
/// Fails when `gb` does not pass Buchberger's criterion.
pub fn initial_ideal(gb: &[Binomial], order: &MonomialOrder) -> Result<MonomialIdeal> {
    if let Some(fail) = is_groebner_basis(gb, order)? {
        return Err(Error::InvariantViolation(format!(
            "not a Gröbner basis: S-pair of generators {} and {} leaves {}",
            fail.i, fail.j, fail.remainder
        )));
    }
    Ok(MonomialIdeal::new(
        order.num_vars(),
        gb.iter().map(|b| order.orient(b).plus),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gn, GnLabels};
    use crate::toric::gn_generators;

    fn mono(m: usize, vars: &[usize]) -> Monomial {
        Monomial::from_vars(m, vars)
    }

    fn gn_setup(n: usize) -> (GnLabels, Vec<Binomial>, MonomialOrder) {
        let (_, l) = gn(n).unwrap();
        let gens = gn_generators(n, &l).unwrap();
        (l, gens, MonomialOrder::identity(3 * n))
    }

    #[test]
    fn graded_lex_comparisons() {
        let (l, _, order) = gn_setup(2);
        let a = mono(6, &[l.x(1), l.y(1), l.z(2)]);
        let b = mono(6, &[l.z(1), l.x(2), l.y(2)]);
        assert_eq!(order.compare(&a, &b).unwrap(), Ordering::Greater);
        assert_eq!(order.compare(&a, &a).unwrap(), Ordering::Equal);
        assert_eq!(order.compare(&mono(6, &[5, 5]), &mono(6, &[0, 0, 0])).unwrap(), Ordering::Less);
        assert!(order.compare(&a, &mono(5, &[0])).is_err());
    }

    #[test]
    fn leading_terms() {
        let (l, gens, order) = gn_setup(2);
        let (lt, _) = leading_term(&order, &gens[0]).unwrap();
        assert_eq!(lt, mono(6, &[l.x(1), l.y(1), l.z(2)]));
        let sq = Binomial::new(mono(4, &[0, 2]), mono(4, &[1, 3])).unwrap();
        let (lt, oriented) = leading_term(&MonomialOrder::identity(4), &sq).unwrap();
        assert_eq!(lt, mono(4, &[1, 3]));
        assert_eq!(oriented.minus, mono(4, &[0, 2]));
        let xy = Binomial::new(mono(2, &[0]), mono(2, &[1])).unwrap();
        assert_eq!(leading_term(&MonomialOrder::identity(2), &xy).unwrap().0, mono(2, &[1]));
    }

    #[test]
    fn order_from_names() {
        let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let order = MonomialOrder::from_names(&["c", "a", "b"], &labels).unwrap();
        assert_eq!(order.priority(), &[2, 0, 1]);
        assert!(MonomialOrder::from_names(&["c", "a"], &labels).is_err());
        assert!(MonomialOrder::from_names(&["c", "a", "q"], &labels).is_err());
        assert!(MonomialOrder::new(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn s_pair_shared_index() {
        let (l, gens, order) = gn_setup(3);
        let s = s_pair(&gens[0], &gens[1], &order).unwrap();
        // z1 * (x3 y3 z2 - z3 x2 y2), oriented: z3 x2 y2 leads.
        let expected = Binomial::new(
            mono(9, &[l.z(1), l.z(3), l.x(2), l.y(2)]),
            mono(9, &[l.z(1), l.x(3), l.y(3), l.z(2)]),
        )
        .unwrap();
        assert_eq!(s, SPair::Binomial(expected.clone()));
        assert_eq!(reduce(Some(&expected), &gens, &order).unwrap(), None);
        assert_eq!(s_pair(&gens[0], &gens[0], &order).unwrap(), SPair::Zero);
    }

    #[test]
    fn s_pair_coprime_leading_terms() {
        let (_, gens, order) = gn_setup(4);
        // x1 y1 z2 and x3 y3 z4.
        let last = gens.last().unwrap();
        assert_eq!(s_pair(&gens[0], last, &order).unwrap(), SPair::Coprime);
    }

    #[test]
    fn reduction_edge_cases() {
        let (_, gens, order) = gn_setup(2);
        assert_eq!(reduce(Some(&gens[0]), &gens, &order).unwrap(), None);
        assert_eq!(reduce(Some(&gens[0]), &[], &order).unwrap(), Some(gens[0].clone()));
        assert_eq!(reduce(None, &gens, &order).unwrap(), None);
        let backwards = vec![gens[0].flipped()];
        assert!(matches!(reduce(Some(&gens[0]), &backwards, &order), Err(Error::InvariantViolation(_))));
    }

    #[test]
    fn buchberger_keeps_gn_generators() {
        for n in 2..=6 {
            let (_, gens, order) = gn_setup(n);
            let mut gb = buchberger(&gens, &order).unwrap();
            gb.sort();
            let mut expected = gens.clone();
            expected.sort();
            assert_eq!(gb, expected, "n = {n}");
        }
        assert!(buchberger(&[], &MonomialOrder::identity(3)).unwrap().is_empty());
    }

    #[test]
    fn buchberger_completes_missing_generator() {
        let (_, gens, order) = gn_setup(3);
        let partial = vec![gens[0].clone(), gens[1].clone()];
        let fail = is_groebner_basis(&partial, &order).unwrap().expect("not a GB");
        assert_eq!((fail.i, fail.j), (0, 1));
        assert_eq!(fail.s_pair, fail.remainder);
        let gb = buchberger(&partial, &order).unwrap();
        assert!(is_groebner_basis(&gb, &order).unwrap().is_none());
        // The two generators span a smaller ideal than I_G, so the missing
        // binomial only appears multiplied by z1.
        let z1 = Monomial::from_vars(9, &[2]);
        let missing = &gens[2];
        let scaled = Binomial::new(missing.plus.mul(&z1), missing.minus.mul(&z1)).unwrap();
        assert_eq!(gb.len(), 3);
        assert!(gb.contains(&scaled));
        assert!(!gb.contains(missing));
    }

    #[test]
    fn criterion_on_gn_generators() {
        for n in 2..=5 {
            let (_, gens, order) = gn_setup(n);
            assert!(is_groebner_basis(&gens, &order).unwrap().is_none());
        }
        let single = Binomial::new(mono(3, &[0, 1]), mono(3, &[2, 2])).unwrap();
        assert!(is_groebner_basis(&[single], &MonomialOrder::identity(3)).unwrap().is_none());
    }

    #[test]
    fn initial_ideals() {
        let (l, gens, order) = gn_setup(3);
        let ideal = initial_ideal(&gens, &order).unwrap();
        let mut expected = vec![
            mono(9, &[l.x(1), l.y(1), l.z(2)]),
            mono(9, &[l.x(1), l.y(1), l.z(3)]),
            mono(9, &[l.x(2), l.y(2), l.z(3)]),
        ];
        expected.sort();
        assert_eq!(ideal.generators, expected);
        assert!(ideal.is_squarefree());
        assert!(initial_ideal(&[], &order).unwrap().is_zero());
        assert!(initial_ideal(&gens[..2], &order).is_err());
    }

    #[test]
    fn monomial_ideal_minimalizes() {
        let ideal = MonomialIdeal::new(3, vec![mono(3, &[0, 1]), mono(3, &[0]), mono(3, &[2, 2]), mono(3, &[0])]);
        assert_eq!(ideal.generators, vec![mono(3, &[2, 2]), mono(3, &[0])]);
        assert!(!ideal.is_squarefree());
        assert!(ideal.contains(&mono(3, &[0, 2])));
    }
}
