use super::{admissible_paths, AdmissiblePath, Monomial, Polynomial, Variable, MAX_IDEAL_VERTICES};
use crate::graphs::Graph;
use std::fmt;

/// `u_π f_{ij} = lead - trail` with `lead = x_i y_j u_π`, `trail = x_j y_i u_π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbElement {
    pub path: AdmissiblePath,
    pub lead: Monomial,
    pub trail: Monomial,
}

impl GbElement {
    fn from_path(path: AdmissiblePath, n: usize) -> Self {
        let (i, j) = (path.start(), path.end());
        let u = path.u_pi(n);
        let lead = u.mul(&Monomial::from_vars(n, &[Variable::x(i), Variable::y(j)]));
        let trail = u.mul(&Monomial::from_vars(n, &[Variable::x(j), Variable::y(i)]));
        debug_assert!(lead > trail);
        GbElement { path, lead, trail }
    }

    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_terms([(self.lead, 1), (self.trail, -1)])
    }
}

impl fmt::Display for GbElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.trail)
    }
}

/// The admissible-path Gröbner basis of `J_G` for the fixed lex order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub n: usize,
    pub elements: Vec<GbElement>,
    /// Element indices sorted by decreasing leading term.
    by_lead: Vec<usize>,
}

impl GroebnerBasis {
    /// Index of the element with the largest leading term dividing `m`.
    pub fn reducer(&self, m: &Monomial) -> Option<&GbElement> {
        self.by_lead.iter().map(|&k| &self.elements[k]).find(|e| e.lead.divides(m))
    }

    /// Supports of the inclusion-minimal leading terms.
    pub fn initial_supports(&self) -> Vec<u32> {
        minimal_supports(self.elements.iter().map(|e| e.lead.support()))
    }
}

fn minimal_supports<I: IntoIterator<Item = u32>>(it: I) -> Vec<u32> {
    let mut all: Vec<u32> = it.into_iter().collect();
    all.sort_by_key(|m| (m.count_ones(), *m));
    all.dedup();
    let mut out: Vec<u32> = Vec::new();
    for m in all {
        if !out.iter().any(|&g| g & !m == 0) {
            out.push(m);
        }
    }
    out
}

pub fn groebner_basis(g: &Graph) -> GroebnerBasis {
    let n = g.n();
    assert!(n <= MAX_IDEAL_VERTICES, "at most {MAX_IDEAL_VERTICES} vertices supported");
    let elements: Vec<GbElement> = admissible_paths(g).into_iter().map(|p| GbElement::from_path(p, n)).collect();
    let mut by_lead: Vec<usize> = (0..elements.len()).collect();
    by_lead.sort_by(|&a, &b| elements[b].lead.cmp(&elements[a].lead).then(a.cmp(&b)));
    GroebnerBasis { n, elements, by_lead }
}

/// Minimal generators of `in(J_G)`, largest first. All are squarefree.
pub fn initial_ideal(g: &Graph) -> Vec<Monomial> {
    let gb = groebner_basis(g);
    let mut gens: Vec<Monomial> = gb.initial_supports().into_iter().map(|s| Monomial::from_support(g.n(), s)).collect();
    gens.sort_by(|a, b| b.cmp(a));
    gens
}

/// Reduces a single monomial; binomial reductions keep it a single monomial
/// with coefficient 1.
pub fn normal_form_monomial(m: &Monomial, gb: &GroebnerBasis) -> Monomial {
    let mut cur = *m;
    while let Some(e) = gb.reducer(&cur) {
        cur = cur.div(&e.lead).mul(&e.trail);
    }
    cur
}

/// Division by the Gröbner basis: repeatedly rewrites the lex-largest
/// reducible term using the reducer with the largest leading term.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    let mut cur = p.clone();
    loop {
        let step = cur.terms.iter().rev().find_map(|(m, &c)| gb.reducer(m).map(|e| (*m, c, e)));
        let Some((m, c, e)) = step else { return cur };
        cur.add_term(m, -c);
        cur.add_term(m.div(&e.lead).mul(&e.trail), c);
    }
}

fn compositions(nvars: usize, d: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if cur.len() + 1 == nvars {
        cur.push(d as u8);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for e in (0..=d).rev() {
        cur.push(e as u8);
        compositions(nvars, d - e, cur, out);
        cur.pop();
    }
}

/// Degree-`d` monomials outside `in(J_G)`, largest first; their number is
/// the Hilbert function of `S/J_G` at `d`.
pub fn standard_monomials(g: &Graph, d: usize) -> Vec<Monomial> {
    let n = g.n();
    let gens = groebner_basis(g).initial_supports();
    if n == 0 {
        return if d == 0 { vec![Monomial::one(0)] } else { vec![] };
    }
    let mut all = Vec::new();
    compositions(2 * n, d, &mut Vec::new(), &mut all);
    let mut out: Vec<Monomial> = all
        .into_iter()
        .map(|e| Monomial::from_exponents(n, &e))
        .filter(|m| {
            let s = m.support();
            !gens.iter().any(|&gm| gm & !s == 0)
        })
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::build_fm;

    fn strs(ms: &[Monomial]) -> Vec<String> {
        ms.iter().map(|m| m.to_string()).collect()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn initial_ideal_of_p3() {
        assert_eq!(strs(&initial_ideal(&Graph::path(3))), vec!["x1*y2", "x2*y3"]);
        assert_eq!(strs(&initial_ideal(&Graph::complete(3))), vec!["x1*y2", "x1*y3", "x2*y3"]);
    }

    #[test]
    fn gb_elements_are_lead_minus_trail() {
        let gb = groebner_basis(&Graph::path(3));
        assert_eq!(gb.elements.len(), 2);
        assert_eq!(gb.elements[0].to_string(), "x1*y2 - x2*y1");
        assert_eq!(gb.elements[0].polynomial().to_string(), "x1*y2 - x2*y1");
    }

    #[test]
    fn normal_forms() {
        let gb = groebner_basis(&Graph::path(3));
        let n = 3;
        let x1y2 = Monomial::from_vars(n, &[Variable::x(1), Variable::y(2)]);
        let x2y1 = Monomial::from_vars(n, &[Variable::x(2), Variable::y(1)]);
        assert_eq!(normal_form_monomial(&x1y2, &gb), x2y1);
        assert_eq!(normal_form_monomial(&x2y1, &gb), x2y1);
        let p = Polynomial::monomial(x1y2);
        assert_eq!(normal_form(&p, &gb), Polynomial::monomial(x2y1));
        // x1y2·x2y3 - x2y1·x3y2 = x2y3·f12 + x2y1·f23 lies in J_{P_3}.
        let a = Monomial::from_vars(n, &[Variable::x(1), Variable::y(2), Variable::x(2), Variable::y(3)]);
        let b = Monomial::from_vars(n, &[Variable::x(2), Variable::y(1), Variable::x(3), Variable::y(2)]);
        let q = Polynomial::from_terms([(a, 1), (b, -1)]);
        assert!(normal_form(&q, &gb).is_zero());
        let r = Polynomial::from_terms([(a, 1), (b, 1)]);
        assert!(!normal_form(&r, &gb).is_zero());
    }

    #[test]
    fn standard_monomial_counts() {
        assert_eq!(standard_monomials(&Graph::complete(2), 1).len(), 4);
        assert_eq!(standard_monomials(&Graph::complete(2), 2).len(), 9);
        // 21 quadrics in 6 variables minus the two generators x1y2, x2y3.
        assert_eq!(binom(7, 2), 21);
        assert_eq!(standard_monomials(&Graph::path(3), 2).len(), 19);
    }

    #[test]
    fn fm_degree_two_generator_count() {
        for m in 3..=5 {
            let gens = initial_ideal(&build_fm(m).unwrap());
            let quadrics = gens.iter().filter(|g| g.degree() == 2).count();
            // Brute-force count of the degree-2 family: x_i y_{i+1} plus
            // x_i y_j with i even, j odd, 2 <= i <= 2m-4, i+3 <= j <= 2m-1.
            let mut brute = 2 * m - 1;
            for i in (2..=2 * m - 4).step_by(2) {
                brute += (i + 3..=2 * m - 1).filter(|j| j % 2 == 1).count();
            }
            assert_eq!(quadrics, brute);
            assert_eq!(quadrics, (2 * m - 1) + (m - 2) * (m - 1) / 2);
        }
    }
}
