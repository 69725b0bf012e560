//! Graded Betti numbers of `R/I` from the Koszul complex on the variables.
//!
//! The degree-`j` strand of `K(x) ⊗ R/I` has terms
//! `C_i^j = Λ^i k^n ⊗ (R/I)_{j-i}`, and `β_{i,j}(R/I)` is the homology of
//! that strand at position `i`:
//!
//! ```text
//! β_{i,j} = dim C_i^j - rank d_i^j - rank d_{i+1}^j
//! ```
//!
//! `(R/I)_d` is coordinatized by the grevlex standard monomials, and
//! multiplication by a variable is a normal-form computation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::groebner::{GroebnerBasis, Ideal};
use crate::linalg::rank;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::Polynomial;

/// The standard monomials spanning `(R/I)_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPieceBasis {
    pub degree: u32,
    pub basis: Vec<Monomial>,
}

/// Grevlex standard-monomial bases of `(R/I)_d` for `d = 0..=max_degree`.
pub fn graded_piece_bases(ideal: &Ideal, max_degree: u32) -> Vec<GradedPieceBasis> {
    let initial = ideal.initial_ideal(&TermOrder::Grevlex);
    (0..=max_degree)
        .map(|d| GradedPieceBasis {
            degree: d,
            basis: initial.standard_monomials(d),
        })
        .collect()
}

/// Top nonzero degree of `R/I` for Artinian `I`; `None` when `R/I = 0`.
pub fn quotient_top_degree(ideal: &Ideal) -> Result<Option<u32>> {
    let initial = ideal.initial_ideal(&TermOrder::Grevlex);
    if initial.is_unit() {
        return Ok(None);
    }
    Ok(Some(initial.power_gap()? - 1))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), usize>,
    n_vars: usize,
}

impl BettiTable {
    pub fn new(n_vars: usize) -> Self {
        BettiTable {
            entries: BTreeMap::new(),
            n_vars,
        }
    }

    pub fn from_entries(n_vars: usize, entries: impl IntoIterator<Item = ((usize, u32), usize)>) -> Self {
        let mut t = BettiTable::new(n_vars);
        for ((i, j), b) in entries {
            t.set(i, j, b);
        }
        t
    }

    fn set(&mut self, i: usize, j: u32, count: usize) {
        if count == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), count);
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// `β_{i,j}`.
    pub fn get(&self, i: usize, j: u32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), β_{i,j})` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, u32), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `max { j - i : β_{i,j} ≠ 0 }`.
    pub fn regularity(&self) -> u32 {
        self.entries
            .keys()
            .map(|&(i, j)| j.saturating_sub(i as u32))
            .max()
            .unwrap_or(0)
    }

    /// Column sums `Σ_j β_{i,j}` for `i = 0..=pd`.
    pub fn totals(&self) -> Vec<usize> {
        let mut out = vec![0; self.projective_dimension() + 1];
        for (&(i, _), &b) in &self.entries {
            out[i] += b;
        }
        out
    }

    /// The degrees `j - n` of the last column, each repeated `β_{n,j}` times.
    pub fn socle_degrees(&self) -> Vec<u32> {
        let n = self.n_vars;
        self.entries
            .iter()
            .filter(|(&(i, _), _)| i == n)
            .flat_map(|(&(_, j), &b)| std::iter::repeat_n(j - n as u32, b))
            .collect()
    }

    /// Is the last column `β_{n,•}` concentrated in one degree?
    pub fn is_level(&self) -> bool {
        self.entries.keys().filter(|&&(i, _)| i == self.n_vars).count() == 1
    }

    /// `Σ (-1)^i β_{i,j} t^j` as a coefficient list.
    pub fn k_polynomial(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0) as usize;
        let mut out = vec![0i64; top + 1];
        for (&(i, j), &b) in &self.entries {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out[j as usize] += sign * b as i64;
        }
        out
    }

    /// The `i j count` record form, one nonzero cell per line.
    pub fn to_records(&self) -> String {
        self.entries
            .iter()
            .map(|(&(i, j), &b)| format!("{i} {j} {b}\n"))
            .collect()
    }

    /// Two-dimensional layout with a `total:` row and rows `0..=reg`.
    pub fn format_table(&self) -> String {
        let pd = self.projective_dimension();
        let reg = self.regularity();
        let cell = |b: usize| if b == 0 { ".".to_string() } else { b.to_string() };
        let mut rows: Vec<(String, Vec<String>)> = Vec::new();
        rows.push((String::new(), (0..=pd).map(|i| i.to_string()).collect()));
        rows.push(("total:".into(), self.totals().into_iter().map(cell).collect()));
        for d in 0..=reg {
            rows.push((
                format!("{d}:"),
                (0..=pd).map(|i| cell(self.get(i, i as u32 + d))).collect(),
            ));
        }
        let label_width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..=pd)
            .map(|c| rows.iter().map(|(_, cells)| cells[c].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for (label, cells) in rows {
            let mut line = format!("{label:>label_width$}");
            for (c, w) in cells.iter().zip(&widths) {
                line.push(' ');
                line.push_str(&format!("{c:>w$}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_table())
    }
}

/// `β_{i,j}(R/I)` for every `j ≤ max_degree`. The default degree bound for
/// Artinian `I` is `t + n` with `t` the top degree of `R/I`, which captures
/// the whole table; other inputs must pass a bound.
pub fn graded_betti(ideal: &Ideal, max_degree: Option<u32>) -> Result<BettiTable> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = ideal.ring().nvars();
    if ideal.is_unit_ideal() {
        return Ok(BettiTable::new(n));
    }
    if ideal.is_zero() {
        return Ok(BettiTable::from_entries(n, [((0, 0), 1)]));
    }
    let top = match max_degree {
        Some(d) => d,
        None => {
            let t = quotient_top_degree(ideal).map_err(|_| {
                Error::Precondition("a degree bound is required for non-Artinian input".into())
            })?;
            t.expect("proper ideal") + n as u32
        }
    };
    let gb = ideal.groebner(&TermOrder::Grevlex);
    let strands = Strands::new(ideal, &gb, top + 1);
    let cells: Vec<Vec<((usize, u32), usize)>> = (0..=top)
        .into_par_iter()
        .map(|j| strands.strand_betti(j))
        .collect();
    Ok(BettiTable::from_entries(n, cells.into_iter().flatten()))
}

/// Sparse coordinates in a standard-monomial basis.
type Coords = Vec<(usize, Coeff)>;

/// Multiplication tables of `R/I` plus the exterior-algebra index maps.
struct Strands {
    n: usize,
    field: crate::field::FieldSpec,
    bases: Vec<Vec<Monomial>>,
    /// `mult[d][u][k]`: coordinates of `x_k · u` in `(R/I)_{d+1}`.
    mult: Vec<Vec<Vec<Coords>>>,
    /// Subsets of the variables by size, as bitmasks in increasing order.
    subsets: Vec<Vec<u32>>,
    subset_index: HashMap<u32, usize>,
}

impl Strands {
    fn new(ideal: &Ideal, gb: &GroebnerBasis, max_degree: u32) -> Self {
        let n = ideal.ring().nvars();
        let bases: Vec<Vec<Monomial>> = graded_piece_bases(ideal, max_degree)
            .into_iter()
            .map(|p| p.basis)
            .collect();
        let index: Vec<HashMap<&Monomial, usize>> = bases
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, m)| (m, i)).collect())
            .collect();
        let mult = (0..max_degree as usize)
            .map(|d| {
                bases[d]
                    .iter()
                    .map(|u| {
                        (0..n)
                            .map(|k| {
                                let f = Polynomial::from_monomial(ideal.ring(), u.times_var(k));
                                gb.normal_form(&f)
                                    .into_terms()
                                    .into_iter()
                                    .map(|t| (index[d + 1][&t.monomial], t.coeff))
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut subsets = vec![Vec::new(); n + 1];
        for mask in 0u32..(1 << n) {
            subsets[mask.count_ones() as usize].push(mask);
        }
        let subset_index = subsets
            .iter()
            .flat_map(|s| s.iter().enumerate().map(|(i, &m)| (m, i)))
            .collect();
        Strands {
            n,
            field: ideal.ring().field(),
            bases,
            mult,
            subsets,
            subset_index,
        }
    }

    fn piece_dim(&self, d: i64) -> usize {
        if d < 0 || d as usize >= self.bases.len() {
            0
        } else {
            self.bases[d as usize].len()
        }
    }

    fn dim(&self, i: usize, j: u32) -> usize {
        self.subsets[i].len() * self.piece_dim(j as i64 - i as i64)
    }

    /// Rank of `d_i^j : C_i^j → C_{i-1}^j`.
    fn rank(&self, i: usize, j: u32) -> usize {
        if i == 0 || i > self.n || self.dim(i, j) == 0 || self.dim(i - 1, j) == 0 {
            return 0;
        }
        let d = (j as usize) - i;
        let src_piece = self.bases[d].len();
        let tgt_piece = self.bases[d + 1].len();
        let ncols = self.subsets[i - 1].len() * tgt_piece;
        let mut rows = Vec::with_capacity(self.dim(i, j));
        for &s in &self.subsets[i] {
            for u in 0..src_piece {
                let mut row = vec![self.field.zero(); ncols];
                let mut pos = 0;
                for k in 0..self.n {
                    if s & (1 << k) == 0 {
                        continue;
                    }
                    let face = self.subset_index[&(s & !(1 << k))];
                    for (v, c) in &self.mult[d][u][k] {
                        let entry = &mut row[face * tgt_piece + v];
                        *entry = if pos % 2 == 0 { &*entry + c } else { &*entry - c };
                    }
                    pos += 1;
                }
                rows.push(row);
            }
        }
        rank(&rows, self.field)
    }

    fn strand_betti(&self, j: u32) -> Vec<((usize, u32), usize)> {
        let ranks: Vec<usize> = (0..=self.n + 1).map(|i| self.rank(i, j)).collect();
        (0..=self.n)
            .filter_map(|i| {
                let b = self.dim(i, j) - ranks[i] - ranks[i + 1];
                (b > 0).then_some(((i, j), b))
            })
            .collect()
    }
}
