//! Linear codes over GF(d) in reduced row-echelon form.

use alloc::format;
use alloc::vec::Vec;

use crate::field::{check_prime, dot_mod, inv_mod, GFVector};
use crate::{Error, Result};

/// Default bound on the number of codewords any enumeration may visit.
pub const DEFAULT_SPAN_CUTOFF: u128 = 1 << 24;

/// A linear code over GF(d), stored as its reduced row-echelon generator
/// matrix. Two codes compare equal exactly when their spans are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    modulus: u32,
    length: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl core::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("LinearCode")
            .field("d", &self.modulus)
            .field("n", &self.length)
            .field("rows", &self.rows)
            .finish()
    }
}

impl LinearCode {
    /// Span of the given generators. Dependent rows are discarded.
    pub fn from_generators(d: u32, n: usize, generators: &[GFVector]) -> Result<Self> {
        check_prime(d)?;
        let mut rows = Vec::with_capacity(generators.len());
        for g in generators {
            if g.modulus() != d || g.len() != n {
                return Err(Error::InvalidCode(format!(
                    "generator {:?} does not lie in GF({d})^{n}",
                    g
                )));
            }
            rows.push(g.entries().to_vec());
        }
        Ok(Self::from_rows_unchecked(d, n, rows))
    }

    /// Span of raw rows with entries already reduced mod `d`.
    pub(crate) fn from_rows_unchecked(d: u32, n: usize, rows: Vec<Vec<u32>>) -> Self {
        let (rows, pivots) = rref(d, n, rows);
        Self {
            modulus: d,
            length: n,
            rows,
            pivots,
        }
    }

    pub fn zero(d: u32, n: usize) -> Result<Self> {
        check_prime(d)?;
        Ok(Self {
            modulus: d,
            length: n,
            rows: Vec::new(),
            pivots: Vec::new(),
        })
    }

    /// The whole space GF(d)^n.
    pub fn full(d: u32, n: usize) -> Result<Self> {
        check_prime(d)?;
        let rows = (0..n)
            .map(|i| {
                let mut r = alloc::vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        Ok(Self {
            modulus: d,
            length: n,
            rows,
            pivots: (0..n).collect(),
        })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn generators(&self) -> Vec<GFVector> {
        self.rows
            .iter()
            .map(|r| GFVector::new_unchecked(self.modulus, r.clone()))
            .collect()
    }

    /// `d^dim`, or `None` if it does not fit in a u128.
    pub fn span_size(&self) -> Option<u128> {
        crate::field::checked_pow(self.modulus, self.dim() as u32)
    }

    fn check_cutoff(&self, cutoff: u128) -> Result<()> {
        match self.span_size() {
            Some(size) if size <= cutoff => Ok(()),
            size => Err(Error::CutoffExceeded {
                size: size.unwrap_or(u128::MAX),
                cutoff,
            }),
        }
    }

    /// Iterates the span in lexicographic order of coefficient tuples over
    /// the stored generator rows (first row most significant).
    pub fn span_iter(&self, cutoff: u128) -> Result<SpanIter<'_>> {
        self.check_cutoff(cutoff)?;
        Ok(SpanIter {
            code: self,
            coeffs: alloc::vec![0; self.dim()],
            current: alloc::vec![0; self.length],
            done: false,
        })
    }

    /// The full span with the default cutoff.
    pub fn span(&self) -> Result<Vec<GFVector>> {
        Ok(self
            .span_iter(DEFAULT_SPAN_CUTOFF)?
            .map(|v| GFVector::new_unchecked(self.modulus, v))
            .collect())
    }

    /// Codeword with the given coefficients on the stored rows.
    pub fn encode(&self, coeffs: &[u32]) -> GFVector {
        let d = self.modulus as u64;
        let mut out = alloc::vec![0u64; self.length];
        for (c, row) in coeffs.iter().zip(&self.rows) {
            for (o, &r) in out.iter_mut().zip(row) {
                *o += *c as u64 * r as u64;
            }
        }
        GFVector::new_unchecked(
            self.modulus,
            out.into_iter().map(|x| (x % d) as u32).collect(),
        )
    }

    /// Residual of `v` after elimination against the generators.
    fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let d = self.modulus;
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r[p];
            if c != 0 {
                let f = d - c;
                for (x, &y) in r.iter_mut().zip(row) {
                    *x = (*x + f * y) % d;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &GFVector) -> bool {
        v.modulus() == self.modulus
            && v.len() == self.length
            && self.reduce(v.entries()).iter().all(|&x| x == 0)
    }

    pub(crate) fn contains_slice(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Whether every codeword of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &Self) -> bool {
        self.modulus == other.modulus
            && self.length == other.length
            && self.rows.iter().all(|r| other.contains_slice(r))
    }

    /// `span(self, extra...)`.
    pub fn extended(&self, extra: &[GFVector]) -> Result<Self> {
        let mut gens = self.generators();
        gens.extend_from_slice(extra);
        Self::from_generators(self.modulus, self.length, &gens)
    }

    /// `{u : ⟨u, v⟩ = 0 for all v in the code}`.
    pub fn dual(&self) -> Self {
        let d = self.modulus;
        let n = self.length;
        let mut is_pivot = alloc::vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let rows = (0..n)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut h = alloc::vec![0; n];
                h[f] = 1;
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    h[p] = (d - row[f]) % d;
                }
                h
            })
            .collect();
        Self::from_rows_unchecked(d, n, rows)
    }

    /// Codewords vanishing at position 0, with that position deleted.
    pub fn shorten(&self) -> Result<Self> {
        if self.length < 2 {
            return Err(Error::InvalidCode(format!(
                "cannot shorten a code of length {}",
                self.length
            )));
        }
        let rows = self
            .rows
            .iter()
            .zip(&self.pivots)
            .filter(|(_, &p)| p != 0)
            .map(|(r, _)| r[1..].to_vec())
            .collect();
        Ok(Self::from_rows_unchecked(
            self.modulus,
            self.length - 1,
            rows,
        ))
    }

    /// Generator matrix `(I | G')` in permuted coordinates together with the
    /// permutation: column `i` of the returned matrix is column `perm[i]` of
    /// the original code. The permutation is the identity whenever the
    /// leading `dim × dim` block of any generator matrix is invertible.
    pub fn canonical_generator_form(&self) -> (Vec<GFVector>, Vec<usize>) {
        let mut perm = self.pivots.clone();
        let mut is_pivot = alloc::vec![false; self.length];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        perm.extend((0..self.length).filter(|&j| !is_pivot[j]));
        let matrix = self
            .rows
            .iter()
            .map(|r| GFVector::new_unchecked(self.modulus, perm.iter().map(|&j| r[j]).collect()))
            .collect();
        (matrix, perm)
    }
}

/// Minimum Hamming weight over `ambient \ excluded`, searching weights up to
/// `max_weight`. Membership in `ambient` is tested with parity checks.
pub fn coset_min_weight(
    ambient: &LinearCode,
    excluded: &LinearCode,
    max_weight: usize,
) -> Option<usize> {
    let d = ambient.modulus;
    let n = ambient.length;
    let parity = ambient.dual();
    let mut v = alloc::vec![0u32; n];
    for w in 1..=max_weight.min(n) {
        let mut positions: Vec<usize> = (0..w).collect();
        loop {
            // All nonzero assignments at `positions`; fixing the first entry
            // to 1 suffices since both codes are closed under scaling.
            let mut vals = alloc::vec![1u32; w];
            loop {
                for (&p, &x) in positions.iter().zip(&vals) {
                    v[p] = x;
                }
                let in_ambient = parity.rows.iter().all(|h| dot_mod(h, &v, d) == 0);
                if in_ambient && !excluded.contains_slice(&v) {
                    return Some(w);
                }
                if !next_nonzero_tail(&mut vals, d) {
                    break;
                }
            }
            for &p in &positions {
                v[p] = 0;
            }
            if !next_combination(&mut positions, n) {
                break;
            }
        }
    }
    None
}

fn next_nonzero_tail(vals: &mut [u32], d: u32) -> bool {
    for i in (1..vals.len()).rev() {
        vals[i] += 1;
        if vals[i] < d {
            return true;
        }
        vals[i] = 1;
    }
    false
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Lexicographic iterator over the span of a code; yields raw entry vectors.
pub struct SpanIter<'a> {
    code: &'a LinearCode,
    coeffs: Vec<u32>,
    current: Vec<u32>,
    done: bool,
}

impl Iterator for SpanIter<'_> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let d = self.code.modulus;
        let mut i = self.coeffs.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            // Adding row i once advances its coefficient by one, and also
            // returns it to zero on wrap since d·row = 0.
            for (x, &r) in self.current.iter_mut().zip(&self.code.rows[i]) {
                *x = (*x + r) % d;
            }
            self.coeffs[i] += 1;
            if self.coeffs[i] < d {
                break;
            }
            self.coeffs[i] = 0;
        }
        Some(out)
    }
}

fn rref(d: u32, n: usize, mut rows: Vec<Vec<u32>>) -> (Vec<Vec<u32>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = inv_mod(rows[r][col], d);
        for x in rows[r].iter_mut() {
            *x = *x * inv % d;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let f = d - row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + f * y) % d;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(d: u32, e: &[u32]) -> GFVector {
        GFVector::new(d, e.iter().copied()).unwrap()
    }

    #[test]
    fn empty_span_is_zero_vector() {
        let c = LinearCode::zero(5, 4).unwrap();
        let s = c.span().unwrap();
        assert_eq!(s, [GFVector::zeros(5, 4)]);
    }

    #[test]
    fn span_order_is_lexicographic() {
        let c = LinearCode::from_generators(3, 2, &[v(3, &[1, 0]), v(3, &[0, 1])]).unwrap();
        let s: Vec<_> = c.span_iter(100).unwrap().collect();
        assert_eq!(s.len(), 9);
        for (k, w) in s.iter().enumerate() {
            assert_eq!(w, &[(k / 3) as u32, (k % 3) as u32]);
        }
    }

    #[test]
    fn cutoff_is_enforced() {
        let c = LinearCode::full(3, 5).unwrap();
        assert_eq!(
            c.span_iter(100).err(),
            Some(Error::CutoffExceeded {
                size: 243,
                cutoff: 100
            })
        );
    }

    #[test]
    fn dual_of_all_ones() {
        let c = LinearCode::from_generators(5, 4, &[GFVector::constant(5, 4, 1)]).unwrap();
        let dual = c.dual();
        assert_eq!(dual.dim(), 3);
        for w in dual.span().unwrap() {
            assert_eq!(w.entries().iter().sum::<u32>() % 5, 0);
        }
        assert_eq!(dual.dual(), c);
    }

    #[test]
    fn shorten_trivial() {
        // Every nonzero codeword has a nonzero first entry.
        let c = LinearCode::from_generators(3, 3, &[v(3, &[1, 1, 2])]).unwrap();
        assert_eq!(c.shorten().unwrap().dim(), 0);
    }

    #[test]
    fn canonical_forms() {
        let c = LinearCode::from_generators(5, 4, &[v(5, &[1, 2, 3, 4])]).unwrap();
        let (g, perm) = c.canonical_generator_form();
        assert_eq!(g, [v(5, &[1, 2, 3, 4])]);
        assert_eq!(perm, [0, 1, 2, 3]);

        let c = LinearCode::from_generators(3, 2, &[v(3, &[0, 1]), v(3, &[1, 0])]).unwrap();
        let (g, perm) = c.canonical_generator_form();
        assert_eq!(g, [v(3, &[1, 0]), v(3, &[0, 1])]);
        assert_eq!(perm, [0, 1]);

        let c = LinearCode::from_generators(3, 3, &[v(3, &[0, 1, 2])]).unwrap();
        let (g, perm) = c.canonical_generator_form();
        assert_eq!(g, [v(3, &[1, 0, 2])]);
        assert_eq!(perm, [1, 0, 2]);
    }

    #[test]
    fn min_weight_whole_space() {
        let full = LinearCode::full(3, 4).unwrap();
        let zero = LinearCode::zero(3, 4).unwrap();
        assert_eq!(coset_min_weight(&full, &zero, 4), Some(1));
        assert_eq!(coset_min_weight(&zero, &zero, 4), None);
    }

    #[test]
    fn rejects_mismatched_rows() {
        assert!(LinearCode::from_generators(3, 3, &[v(3, &[1, 2])]).is_err());
        assert!(LinearCode::from_generators(3, 2, &[v(5, &[1, 2])]).is_err());
    }
}
