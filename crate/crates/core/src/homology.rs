//! Exact reduced integer homology through Smith normal form of the
//! augmented boundary matrices.
//!
//! Elimination runs on `i64` with checked arithmetic and is restarted on
//! arbitrary-precision integers if any intermediate entry overflows.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ext::ExtInt;
use crate::vertex_set::VertexSet;

/// Default bound on the number of faces a homology computation will touch.
pub const DEFAULT_FACE_LIMIT: usize = 1 << 18;

/// `H̃_i` for one dimension: free rank and torsion coefficients (each ≥ 2,
/// in divisibility order).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Reduced integer homology `H̃_i` for `-1 <= i <= dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    /// `groups[k]` is `H̃_{k-1}`.
    groups: Vec<HomologyGroup>,
    /// Face counts `f_{-1}, f_0, ...`.
    face_counts: Vec<usize>,
}

impl HomologyProfile {
    pub fn group(&self, dim: i64) -> HomologyGroup {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.groups.get(k))
            .cloned()
            .unwrap_or_default()
    }

    pub fn betti(&self, dim: i64) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.groups.get(k))
            .map_or(0, |g| g.betti)
    }

    pub fn torsion(&self, dim: i64) -> &[BigUint] {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.groups.get(k))
            .map_or(&[], |g| g.torsion.as_slice())
    }

    /// Highest dimension stored.
    pub fn top_dim(&self) -> i64 {
        self.groups.len() as i64 - 2
    }

    /// `(dim, group)` pairs for `-1..=top_dim`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &HomologyGroup)> {
        self.groups.iter().enumerate().map(|(k, g)| (k as i64 - 1, g))
    }

    pub fn is_acyclic(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_zero)
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.iter().any(|g| !g.torsion.is_empty())
    }

    /// Reduced Euler characteristic from the face counts.
    pub fn euler_from_faces(&self) -> i64 {
        alternating(self.face_counts.iter().copied())
    }

    /// Reduced Euler characteristic from the Betti numbers.
    pub fn euler_from_betti(&self) -> i64 {
        alternating(self.groups.iter().map(|g| g.betti))
    }

    pub fn face_counts(&self) -> &[usize] {
        &self.face_counts
    }

    /// Homological connectivity: the largest `k` with `H̃_i = 0` for all
    /// `-1 <= i <= k`; `-2` when `H̃_{-1} ≠ 0`, infinite when acyclic.
    pub fn conn_h(&self) -> ExtInt {
        match self.groups.iter().position(|g| !g.is_zero()) {
            Some(k) => ExtInt::Finite(k as i64 - 2),
            None => ExtInt::Infinite,
        }
    }
}

/// Starting at index `-1`: `Σ (-1)^i x_i`.
fn alternating(xs: impl Iterator<Item = usize>) -> i64 {
    xs.enumerate()
        .map(|(k, x)| if k % 2 == 1 { x as i64 } else { -(x as i64) })
        .sum()
}

pub fn reduced_homology(complex: &SimplicialComplex) -> Result<HomologyProfile> {
    reduced_homology_with_limit(complex, DEFAULT_FACE_LIMIT)
}

pub fn reduced_homology_with_limit(
    complex: &SimplicialComplex,
    face_limit: usize,
) -> Result<HomologyProfile> {
    let faces = complex.faces_by_size(face_limit)?;
    let face_counts: Vec<usize> = faces.iter().map(Vec::len).collect();
    let top = faces.len() - 1;
    let mut groups = vec![HomologyGroup::default(); top + 1];
    if complex.is_cone() {
        return Ok(HomologyProfile { groups, face_counts });
    }

    // boundary[k] maps faces with k+1 vertices to faces with k vertices.
    let index: Vec<HashMap<VertexSet, usize>> = faces
        .iter()
        .map(|g| g.iter().enumerate().map(|(i, &s)| (s, i)).collect())
        .collect();
    let mut ranks = vec![0usize; top + 2];
    let mut factors: Vec<Vec<BigUint>> = vec![Vec::new(); top + 2];
    for k in 0..top {
        let rows = faces[k].len();
        let cols = faces[k + 1].len();
        if rows.saturating_mul(cols) > 64 * face_limit {
            return Err(Error::CapacityExceeded(format!(
                "boundary matrix of size {rows}x{cols}"
            )));
        }
        let mut m = vec![vec![0i64; cols]; rows];
        for (j, &s) in faces[k + 1].iter().enumerate() {
            for (pos, v) in s.iter().enumerate() {
                let i = index[k][&s.without(v)];
                m[i][j] = if pos % 2 == 0 { 1 } else { -1 };
            }
        }
        let diag = diagonalize(m);
        ranks[k + 1] = diag.len();
        factors[k + 1] = invariant_factors(diag);
    }
    // H̃_{k-1} = ker(boundary[k-1]) / im(boundary[k]) on faces with k vertices.
    for (k, group) in groups.iter_mut().enumerate() {
        group.betti = face_counts[k] - ranks[k] - ranks[k + 1];
        group.torsion = factors[k + 1]
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect();
    }
    Ok(HomologyProfile { groups, face_counts })
}

/// Homological connectivity of a complex.
pub fn conn_h(complex: &SimplicialComplex) -> Result<ExtInt> {
    if complex.is_cone() {
        return Ok(ExtInt::Infinite);
    }
    Ok(reduced_homology(complex)?.conn_h())
}

/// Nonzero diagonal entries (absolute values) of some diagonal form of `m`.
pub fn diagonalize(m: Vec<Vec<i64>>) -> Vec<BigInt> {
    match eliminate(m.clone()) {
        Some(d) => d.into_iter().map(BigInt::from).collect(),
        None => {
            let big = m
                .into_iter()
                .map(|row| row.into_iter().map(BigInt::from).collect())
                .collect();
            eliminate(big).expect("arbitrary precision elimination cannot overflow")
        }
    }
}

/// Turns diagonal entries into invariant factors `d_1 | d_2 | ...`.
pub fn invariant_factors(diag: Vec<BigInt>) -> Vec<BigUint> {
    let mut d: Vec<BigUint> = diag
        .into_iter()
        .map(|x| x.magnitude().clone())
        .filter(|x| !x.is_zero())
        .collect();
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = d[i].gcd(&d[j]);
            let l = &d[i] / &g * &d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// Ring operations needed by the elimination; `None` signals overflow.
trait Entry: Clone + Zero + PartialEq {
    fn abs_key(&self) -> Option<u128>;
    fn quotient(&self, by: &Self) -> Self;
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self>;
    fn negated(&self) -> Self;
    fn is_negative_entry(&self) -> bool;
}

impl Entry for i64 {
    fn abs_key(&self) -> Option<u128> {
        Some(self.unsigned_abs() as u128)
    }
    fn quotient(&self, by: &Self) -> Self {
        self / by
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        q.checked_mul(*x).and_then(|p| self.checked_sub(p))
    }
    fn negated(&self) -> Self {
        -self
    }
    fn is_negative_entry(&self) -> bool {
        *self < 0
    }
}

impl Entry for BigInt {
    fn abs_key(&self) -> Option<u128> {
        // Used only to pick a small pivot; saturate on huge values.
        Some(self.abs().to_u128().unwrap_or(u128::MAX))
    }
    fn quotient(&self, by: &Self) -> Self {
        self / by
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        Some(self - q * x)
    }
    fn negated(&self) -> Self {
        -self
    }
    fn is_negative_entry(&self) -> bool {
        self.is_negative()
    }
}

/// Diagonalizes by unimodular row and column operations. Returns the
/// nonzero pivots, or `None` on overflow.
fn eliminate<T: Entry>(mut m: Vec<Vec<T>>) -> Option<Vec<T>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut t = 0;
    while t < rows && t < cols {
        // Smallest nonzero entry of the remaining block becomes the pivot.
        let mut best: Option<(u128, usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() {
                    let key = x.abs_key()?;
                    if best.is_none_or(|(b, _, _)| key < b) {
                        best = Some((key, i, j));
                        if key == 1 {
                            break;
                        }
                    }
                }
            }
            if matches!(best, Some((1, _, _))) {
                break;
            }
        }
        let Some((_, pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut done = true;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].quotient(&m[t][t]);
                for j in t..cols {
                    let v = m[i][j].sub_mul(&q, &m[t][j])?;
                    m[i][j] = v;
                }
                if !m[i][t].is_zero() {
                    done = false;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].quotient(&m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let v = row[j].sub_mul(&q, &row[t])?;
                    row[j] = v;
                }
                if !m[t][j].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
            // Move the smallest remainder in row/column t into the pivot.
            let mut best: Option<(u128, bool, usize)> = None;
            for i in t + 1..rows {
                if !m[i][t].is_zero() {
                    let key = m[i][t].abs_key()?;
                    if best.is_none_or(|(b, _, _)| key < b) {
                        best = Some((key, true, i));
                    }
                }
            }
            for j in t + 1..cols {
                if !m[t][j].is_zero() {
                    let key = m[t][j].abs_key()?;
                    if best.is_none_or(|(b, _, _)| key < b) {
                        best = Some((key, false, j));
                    }
                }
            }
            match best {
                Some((_, true, i)) => m.swap(t, i),
                Some((_, false, j)) => {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                }
                None => break,
            }
        }
        let p = m[t][t].clone();
        pivots.push(if p.is_negative_entry() { p.negated() } else { p });
        t += 1;
    }
    Some(pivots)
}
