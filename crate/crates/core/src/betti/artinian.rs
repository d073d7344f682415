use crate::error::{Error, Result};
use crate::graphs::build_fm;
use crate::ideal::{initial_ideal, VarKind, Variable};
use crate::linalg::{PrimeField, SparseMatrix, DEFAULT_PRIME};
use std::collections::HashMap;

/// `S'/I'` for a monomial ideal `I'` of finite colength in `K[x_1..x_r]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinianQuotient {
    pub nvars: usize,
    /// Minimal monomial generators as exponent vectors.
    pub generators: Vec<Vec<u8>>,
    /// `basis[d]` lists the standard monomials of degree `d`.
    pub basis: Vec<Vec<Vec<u8>>>,
}

impl ArtinianQuotient {
    fn in_ideal(&self, m: &[u8]) -> bool {
        self.generators.iter().any(|g| g.iter().zip(m).all(|(a, b)| a <= b))
    }

    pub fn length(&self) -> usize {
        self.basis.iter().map(Vec::len).sum()
    }

    pub fn format_monomial(m: &[u8]) -> String {
        let parts: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| if e == 1 { format!("x{}", k + 1) } else { format!("x{}^{e}", k + 1) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

fn minimal_monomials(mut gens: Vec<Vec<u8>>) -> Vec<Vec<u8>> {
    gens.sort_by_key(|g| (g.iter().map(|&e| e as usize).sum::<usize>(), g.clone()));
    gens.dedup();
    let mut out: Vec<Vec<u8>> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.iter().zip(&g).all(|(a, b)| a <= b)) {
            out.push(g);
        }
    }
    out
}

fn monomials_of_degree(nvars: usize, d: usize) -> Vec<Vec<u8>> {
    fn rec(k: usize, nvars: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k + 1 == nvars {
            cur.push(left as u8);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e as u8);
            rec(k + 1, nvars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        rec(0, nvars, d, &mut Vec::new(), &mut out);
    }
    out
}

/// Reduction of `S/in(J_{F_m})` modulo `x_{2m}, y_1, x_i - y_{i+1}`
/// (`1 <= i <= 2m-1`): `y_{i+1} ↦ x_i` on the generators, with those
/// involving `x_{2m}` or `y_1` becoming zero.
pub fn artinian_reduction_fm(m: usize) -> Result<ArtinianQuotient> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!("artinian reduction needs m >= 3, got {m}")));
    }
    let g = build_fm(m)?;
    let n = 2 * m;
    let r = n - 1;
    let mut gens = Vec::new();
    'gen: for mono in initial_ideal(&g) {
        let mut e = vec![0u8; r];
        for pos in 0..2 * n {
            let k = mono.exponent(pos);
            if k == 0 {
                continue;
            }
            let v = Variable::from_position(pos, n);
            match (v.kind, v.index) {
                (VarKind::X, i) if i == n => continue 'gen,
                (VarKind::Y, 1) => continue 'gen,
                (VarKind::X, i) => e[i - 1] += k,
                (VarKind::Y, i) => e[i - 2] += k,
            }
        }
        gens.push(e);
    }
    let mut a = ArtinianQuotient { nvars: r, generators: minimal_monomials(gens), basis: Vec::new() };
    for v in 0..r {
        let mut sq = vec![0u8; r];
        sq[v] = 2;
        if !a.in_ideal(&sq) {
            return Err(Error::InvalidParameter(format!("x{}^2 is not in the reduced ideal", v + 1)));
        }
    }
    for d in 0.. {
        let layer: Vec<Vec<u8>> = monomials_of_degree(r, d).into_iter().filter(|mm| !a.in_ideal(mm)).collect();
        if layer.is_empty() {
            break;
        }
        a.basis.push(layer);
    }
    Ok(a)
}

/// Socle of `S'/I'` by linear algebra per degree: the kernel of
/// `f ↦ (x_1 f, ..., x_r f)`. Since `I'` is monomial the kernel is spanned by
/// the standard monomials whose images all vanish; these are returned.
pub fn socle_monomials(a: &ArtinianQuotient) -> Vec<Vec<u8>> {
    let field = PrimeField::new(DEFAULT_PRIME).expect("default prime");
    let mut out = Vec::new();
    for (d, layer) in a.basis.iter().enumerate() {
        let next: HashMap<&Vec<u8>, usize> =
            a.basis.get(d + 1).map(|l| l.iter().enumerate().map(|(k, m)| (m, k)).collect()).unwrap_or_default();
        let width = next.len();
        let mut mat = SparseMatrix::new(width * a.nvars);
        let mut zero_cols = Vec::new();
        for m in layer {
            let mut col = Vec::new();
            for v in 0..a.nvars {
                let mut t = m.clone();
                t[v] += 1;
                if let Some(&k) = next.get(&t) {
                    col.push(((v * width + k) as u32, 1));
                }
            }
            if col.is_empty() {
                zero_cols.push(m.clone());
            }
            mat.push_col(field, col);
        }
        let kernel = layer.len() - mat.rank(field);
        assert_eq!(kernel, zero_cols.len(), "monomial kernel must be spanned by monomials");
        out.extend(zero_cols);
    }
    out
}

/// Degrees of a monomial basis of the socle, ascending.
pub fn socle_degrees(a: &ArtinianQuotient) -> Vec<usize> {
    let mut ds: Vec<usize> = socle_monomials(a).iter().map(|m| m.iter().map(|&e| e as usize).sum()).collect();
    ds.sort_unstable();
    ds
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f3_socle() {
        let a = artinian_reduction_fm(3).unwrap();
        assert_eq!(a.nvars, 5);
        let soc = socle_monomials(&a);
        assert!(soc.contains(&vec![1, 1, 1, 0, 0]));
        assert!(socle_degrees(&a).iter().all(|&d| d == 3));
        // Nothing of degree 4 survives.
        assert_eq!(a.basis.len(), 4);
        assert_eq!(ArtinianQuotient::format_monomial(&[1, 1, 1, 0, 0]), "x1*x2*x3");
    }

    #[test]
    fn small_m_is_rejected() {
        assert!(artinian_reduction_fm(2).is_err());
    }
}
