use crate::error::Result;
use crate::ideal::SimplicialComplex;
use crate::linalg::{PrimeField, SparseMatrix};

/// Reduced homology ranks; index 0 holds dimension -1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyRanks(pub Vec<usize>);

impl HomologyRanks {
    pub fn get(&self, dim: isize) -> usize {
        usize::try_from(dim + 1).ok().and_then(|k| self.0.get(k).copied()).unwrap_or(0)
    }

    /// Nonzero `(dimension, rank)` pairs.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.0.iter().enumerate().filter(|(_, &r)| r > 0).map(|(k, &r)| (k as isize - 1, r))
    }

    pub fn is_acyclic(&self) -> bool {
        self.0.iter().all(|&r| r == 0)
    }
}

pub fn reduced_homology_ranks(delta: &SimplicialComplex, p: u32) -> Result<HomologyRanks> {
    let field = PrimeField::new(p)?;
    Ok(homology_of_facets(&delta.facets, field))
}

/// Reduced homology of the complex generated by `facets`. An empty facet
/// list is the void complex, whose reduced homology vanishes.
pub(crate) fn homology_of_facets(facets: &[u32], field: PrimeField) -> HomologyRanks {
    if facets.is_empty() {
        return HomologyRanks::default();
    }
    let facets = strong_collapse(facets.to_vec());
    if facets.len() == 1 {
        // A simplex: acyclic unless it is the empty face alone.
        return HomologyRanks(if facets[0] == 0 { vec![1] } else { Vec::new() });
    }
    let facets = &facets[..];
    // Compress the used ground elements to the low bits.
    let used = facets.iter().fold(0u32, |m, &f| m | f);
    let width = used.count_ones() as usize;
    let compress = |f: u32| -> u32 {
        let mut out = 0u32;
        let mut k = 0;
        let mut rest = used;
        while rest != 0 {
            let b = rest & rest.wrapping_neg();
            rest &= rest - 1;
            if f & b != 0 {
                out |= 1 << k;
            }
            k += 1;
        }
        out
    };
    let small: Vec<u32> = facets.iter().map(|&f| compress(f)).collect();
    let by_size = if width <= DENSE_LIMIT { faces_dense(&small, width) } else { faces_sparse(&small) };
    ranks_from_faces(&by_size, field)
}

const DENSE_LIMIT: usize = 18;

fn maximal(mut sets: Vec<u32>) -> Vec<u32> {
    sets.sort_by_key(|&s| (std::cmp::Reverse(s.count_ones()), s));
    sets.dedup();
    let mut out: Vec<u32> = Vec::new();
    for s in sets {
        if !out.iter().any(|&f| f & s == s) {
            out.push(s);
        }
    }
    out
}

/// Deletes vertices whose link is a cone until none is left; each deletion
/// preserves the homotopy type.
fn strong_collapse(mut facets: Vec<u32>) -> Vec<u32> {
    loop {
        let used = facets.iter().fold(0u32, |m, &f| m | f);
        let mut rest = used;
        let mut dominated = None;
        while rest != 0 {
            let b = rest & rest.wrapping_neg();
            rest &= rest - 1;
            let common = facets.iter().filter(|&&f| f & b != 0).fold(u32::MAX, |m, &f| m & f);
            if common & !b != 0 {
                dominated = Some(b);
                break;
            }
        }
        match dominated {
            Some(b) => facets = maximal(facets.iter().map(|&f| f & !b).collect()),
            None => return facets,
        }
    }
}

/// Faces grouped by size, each group sorted by mask.
fn faces_dense(facets: &[u32], width: usize) -> Vec<Vec<u32>> {
    let mut mark = vec![false; 1 << width];
    for &f in facets {
        if mark[f as usize] {
            continue;
        }
        let mut s = f;
        loop {
            mark[s as usize] = true;
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    let top = facets.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for (s, &m) in mark.iter().enumerate() {
        if m {
            by_size[(s as u32).count_ones() as usize].push(s as u32);
        }
    }
    by_size
}

fn faces_sparse(facets: &[u32]) -> Vec<Vec<u32>> {
    let faces = crate::ideal::all_faces(facets);
    let top = faces.last().map_or(0, |f| f.count_ones() as usize);
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    by_size
}

fn ranks_from_faces(by_size: &[Vec<u32>], field: PrimeField) -> HomologyRanks {
    let top = by_size.len() - 1;
    // rank[s] = rank of the boundary from size-s faces to size-(s-1) faces.
    let mut rank = vec![0usize; top + 2];
    let neg_one = field.neg(1);
    for s in 1..=top {
        let lower = &by_size[s - 1];
        let mut m = SparseMatrix::new(lower.len());
        for &f in &by_size[s] {
            let mut col = Vec::with_capacity(s);
            let mut rest = f;
            let mut k = 0;
            while rest != 0 {
                let b = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let sign = if k % 2 == 0 { 1 } else { neg_one };
                let row = lower.binary_search(&(f & !b)).expect("faces are closed under subsets");
                col.push((row as u32, sign));
                k += 1;
            }
            m.push_col(field, col);
        }
        rank[s] = m.rank(field);
    }
    HomologyRanks((0..=top).map(|s| by_size[s].len() - rank[s] - rank[s + 1]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(facets: Vec<u32>) -> SimplicialComplex {
        let labels = (0..6).map(|k| format!("v{k}")).collect();
        SimplicialComplex::new(labels, facets)
    }

    #[test]
    fn small_complexes() {
        let circle = complex(vec![0b011, 0b110, 0b101]);
        let h = reduced_homology_ranks(&circle, 32003).unwrap();
        assert_eq!(h.nonzero().collect::<Vec<_>>(), vec![(1, 1)]);
        let simplex = complex(vec![0b1111]);
        assert!(reduced_homology_ranks(&simplex, 32003).unwrap().is_acyclic());
        let points = complex(vec![0b01, 0b10]);
        assert_eq!(reduced_homology_ranks(&points, 2).unwrap().nonzero().collect::<Vec<_>>(), vec![(0, 1)]);
        let empty_face = complex(vec![0]);
        assert_eq!(reduced_homology_ranks(&empty_face, 3).unwrap().get(-1), 1);
        assert!(reduced_homology_ranks(&circle, 4).is_err());
    }

    #[test]
    fn two_spheres_and_projective_plane() {
        // Boundary of the 3-simplex is a 2-sphere.
        let sphere = complex(vec![0b0111, 0b1011, 0b1101, 0b1110]);
        let h = reduced_homology_ranks(&sphere, 5).unwrap();
        assert_eq!(h.nonzero().collect::<Vec<_>>(), vec![(2, 1)]);
        // Six-vertex real projective plane: torsion shows up only mod 2.
        let tri = [
            [1, 2, 3],
            [1, 3, 4],
            [1, 4, 5],
            [1, 5, 6],
            [1, 6, 2],
            [2, 3, 5],
            [3, 4, 6],
            [4, 5, 2],
            [5, 6, 3],
            [6, 2, 4],
        ];
        let rp2 = complex(tri.iter().map(|t| t.iter().fold(0u32, |m, &v| m | 1 << (v - 1))).collect());
        let mod2 = reduced_homology_ranks(&rp2, 2).unwrap();
        assert_eq!(mod2.nonzero().collect::<Vec<_>>(), vec![(1, 1), (2, 1)]);
        assert!(reduced_homology_ranks(&rp2, 3).unwrap().is_acyclic());
    }
}
