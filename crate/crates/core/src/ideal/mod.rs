//! The binomial edge ideal `J_G ⊂ K[x_1..x_n, y_1..y_n]` under the lex order
//! `x_1 > ... > x_n > y_1 > ... > y_n`: cut sets, admissible paths, the
//! Gröbner basis they index, the squarefree initial ideal and its
//! Stanley–Reisner complex.

mod complex;
mod groebner;
mod paths;

pub(crate) use complex::all_faces;
pub use complex::{
    clique_complex, f_vector, minimal_nonfaces, stanley_reisner_complex, variable_labels, SimplicialComplex,
};
pub use groebner::{
    groebner_basis, initial_ideal, normal_form, normal_form_monomial, standard_monomials, GbElement, GroebnerBasis,
};
pub(crate) use paths::cut_sets_unchecked;
pub use paths::{admissible_paths, cut_sets, AdmissiblePath, CutSet};

use std::collections::BTreeMap;
use std::fmt;

/// Largest graph handled by the ideal machinery (`2n <= 24` variables).
pub const MAX_IDEAL_VERTICES: usize = 12;
pub const MAX_VARS: usize = 2 * MAX_IDEAL_VERTICES;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    X,
    Y,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    pub kind: VarKind,
    pub index: usize,
}

impl Variable {
    pub fn x(index: usize) -> Self {
        Variable { kind: VarKind::X, index }
    }

    pub fn y(index: usize) -> Self {
        Variable { kind: VarKind::Y, index }
    }

    /// Position in the exponent vector for a ring on `2n` variables; lower
    /// positions are larger in the monomial order.
    pub fn position(self, n: usize) -> usize {
        match self.kind {
            VarKind::X => self.index - 1,
            VarKind::Y => n + self.index - 1,
        }
    }

    pub fn from_position(pos: usize, n: usize) -> Self {
        if pos < n {
            Variable::x(pos + 1)
        } else {
            Variable::y(pos - n + 1)
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VarKind::X => write!(f, "x{}", self.index),
            VarKind::Y => write!(f, "y{}", self.index),
        }
    }
}

/// A monomial in `K[x_1..x_n, y_1..y_n]`.
///
/// The derived ordering is the lex order with `x_1` largest, valid between
/// monomials over the same `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    n: u8,
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        assert!(n <= MAX_IDEAL_VERTICES, "at most {MAX_IDEAL_VERTICES} vertices supported");
        Monomial { n: n as u8, exps: [0; MAX_VARS] }
    }

    pub fn var(n: usize, v: Variable) -> Self {
        let mut m = Monomial::one(n);
        m.exps[v.position(n)] = 1;
        m
    }

    pub fn from_vars(n: usize, vars: &[Variable]) -> Self {
        let mut m = Monomial::one(n);
        for &v in vars {
            m.exps[v.position(n)] += 1;
        }
        m
    }

    pub fn from_exponents(n: usize, exps: &[u8]) -> Self {
        let mut m = Monomial::one(n);
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    /// Squarefree monomial with the given support bitmask.
    pub fn from_support(n: usize, mask: u32) -> Self {
        let mut m = Monomial::one(n);
        for p in 0..2 * n {
            m.exps[p] = (mask >> p & 1) as u8;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn nvars(&self) -> usize {
        2 * self.n as usize
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps[..self.nvars()]
    }

    pub fn exponent(&self, pos: usize) -> u8 {
        self.exps[pos]
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn support(&self) -> u32 {
        self.exps[..self.nvars()].iter().enumerate().fold(0u32, |m, (p, &e)| if e > 0 { m | 1 << p } else { m })
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a += *b;
        }
        m
    }

    pub fn mul_var(&self, pos: usize) -> Monomial {
        let mut m = *self;
        m.exps[pos] += 1;
        m
    }

    /// `self / other`; requires `other | self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a -= *b;
        }
        m
    }

    /// Per-vertex degree `a_v = deg_{x_v} + deg_{y_v}` and the total
    /// `x`-degree: the fine grading under which `J_G` is homogeneous.
    pub fn multidegree(&self) -> (Vec<u8>, usize) {
        let n = self.n();
        let a = (0..n).map(|v| self.exps[v] + self.exps[n + v]).collect();
        let k = self.exps[..n].iter().map(|&e| e as usize).sum();
        (a, k)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let mut first = true;
        for p in 0..2 * n {
            let e = self.exps[p];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", Variable::from_position(p, n))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Polynomial with integer coefficients, terms keyed by monomial.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    pub terms: BTreeMap<Monomial, i64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial { terms: BTreeMap::from([(m, 1)]) }
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        let e = self.terms.entry(m).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, i64)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(Monomial, i64)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, *c))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, &c)) in self.terms.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_and_display() {
        let n = 3;
        let x1y2 = Monomial::from_vars(n, &[Variable::x(1), Variable::y(2)]);
        let x2y1 = Monomial::from_vars(n, &[Variable::x(2), Variable::y(1)]);
        assert!(x1y2 > x2y1);
        assert!(Monomial::var(n, Variable::x(3)) > Monomial::var(n, Variable::y(1)));
        assert!(Monomial::var(n, Variable::y(1)) > Monomial::var(n, Variable::y(2)));
        assert_eq!(x1y2.to_string(), "x1*y2");
        assert_eq!(Monomial::one(n).to_string(), "1");
        let p = Polynomial::from_terms([(x1y2, 1), (x2y1, -1)]);
        assert_eq!(p.to_string(), "x1*y2 - x2*y1");
        assert_eq!(p.leading_term(), Some((x1y2, 1)));
        let sq = Monomial::from_vars(n, &[Variable::x(1), Variable::x(1)]);
        assert_eq!(sq.to_string(), "x1^2");
        assert!(!sq.is_squarefree());
        assert_eq!(x1y2.multidegree(), (vec![1, 1, 0], 1));
        assert_eq!(Monomial::from_support(n, x1y2.support()), x1y2);
    }
}
